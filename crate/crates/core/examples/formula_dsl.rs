//! Parsing, DNF, and the per-disjunct analysis of a graph formula.

use keisler_lab::logic::{analyze_phi, evaluate, parse_formula, to_dnf, Assignment, PhiPartition};
use keisler_lab::structures::cyclic_graph;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let phi = parse_formula("(!E(x1,y1) & x1 != y2) | (E(x1,y2) & !E(y1,y2))")?;
    println!("formula: {phi}");
    println!("dnf:     {}", to_dnf(&phi)?);

    let analysis = analyze_phi(&PhiPartition::new(phi.clone(), 1, 2)?)?;
    for (i, p) in analysis.profiles.iter().enumerate() {
        let psi: Vec<String> = p.psi.iter().map(|l| l.to_string()).collect();
        println!("disjunct {i}: k={} l={} psi={}", p.k(), p.l(), psi.join(" & "));
    }
    println!("t* = {:?}", analysis.t_star);

    let g = cyclic_graph(5, &[1])?;
    let truth = evaluate(&g, &phi, &Assignment::new(&[0], &[1, 3]))?;
    println!("C5 |= phi(0; 1, 3): {truth}");
    Ok(())
}
