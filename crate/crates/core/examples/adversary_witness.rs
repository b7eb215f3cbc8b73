//! Given pairs of vertices, a new vertex that breaks a guaranteed fraction of them.

use keisler_lab::structures::random_maximal_free;
use keisler_lab::witnesses::{adversary_witness, epsilon_r};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let g = random_maximal_free(50, 3, 4, 5)?;
    let tuples: Vec<Vec<usize>> = (0..20).map(|i| vec![i, (7 * i + 3) % 50]).collect();
    let report = adversary_witness(&tuples, &g, 4)?;
    println!("eps_3 = {}", epsilon_r(3));
    println!("violated {}", report.witness["violated"]);
    for c in &report.certified {
        println!("{c}");
    }
    Ok(())
}
