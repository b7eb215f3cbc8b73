//! An alternating sequence realized by one new vertex, keeping the graph K4-free.

use keisler_lab::structures::random_maximal_free;
use keisler_lab::witnesses::order_witness;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let g = random_maximal_free(40, 2, 4, 2)?;
    let report = order_witness(&g, 4, 5)?;
    println!("sequence {}", report.witness["sequence"]);
    println!("b = {}, linked to {}", report.witness["b"], report.witness["links"]);
    for c in &report.certified {
        println!("{c}");
    }
    Ok(())
}
