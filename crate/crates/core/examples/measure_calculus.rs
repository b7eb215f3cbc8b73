//! Finite measures: products, localization, and average measures.

use keisler_lab::logic::{parse_formula, PhiPartition};
use keisler_lab::measures::FiniteMeasure;
use keisler_lab::rational::ratio;
use keisler_lab::structures::cyclic_graph;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let g = cyclic_graph(6, &[1])?;
    let mu = FiniteMeasure::from_weights(
        &g,
        1,
        [(vec![0], ratio(1, 2)), (vec![1], ratio(1, 3)), (vec![3], ratio(1, 6))],
    )?;
    let nu = FiniteMeasure::average(&g, &[vec![2], vec![4]])?;

    let edge = PhiPartition::new(parse_formula("E(x1,x2)")?, 2, 0)?;
    let prod = mu.product(&nu)?;
    println!("(mu x nu)(E) = {}", prod.eval(&edge, &[])?);
    println!("(nu x mu)(E) = {}", nu.product(&mu)?.eval(&edge, &[])?);

    let near = PhiPartition::new(parse_formula("E(x1,y1)")?, 1, 1)?;
    for b in 0..6 {
        println!("mu(E(x; {b})) = {}", mu.eval(&near, &[b])?);
    }
    let local = mu.localize(|t| t[0] < 2)?;
    println!("mu localized to {{0,1}}: {}", local.to_json());
    Ok(())
}
