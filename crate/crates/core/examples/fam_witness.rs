//! A finitely approximated average measure: C13(1,5) inside a random triangle-free graph.

use keisler_lab::logic::{parse_formula, PhiPartition};
use keisler_lab::rational::ratio;
use keisler_lab::structures::{cyclic_graph, random_maximal_free};
use keisler_lab::witnesses::{fam_witness, FamBudget};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let ambient = random_maximal_free(200, 2, 3, 9)?;
    let g = cyclic_graph(13, &[1, 5])?;
    let phi = PhiPartition::infer(parse_formula("!E(x1,y1) & x1 != y1")?);
    let report = fam_witness(&phi, &ratio(4, 5), &ambient, &g, 3, FamBudget::default())?;
    for c in &report.certified {
        println!("{c}");
    }
    println!("points {}", report.witness["points"]);
    Ok(())
}
