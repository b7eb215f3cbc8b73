//! Searching a finite model for a pair satisfying phi_R over given parameters.

use keisler_lab::structures::random_maximal_free;
use keisler_lab::witnesses::{sat_probe, sat_probe_aggregate};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let g = random_maximal_free(60, 3, 4, 1)?;
    let model: Vec<usize> = (0..40).collect();
    let single = sat_probe(&g, &model, &[41, 47, 55])?;
    println!("single: found {}", single.witness["found"]);

    let aggregate = sat_probe_aggregate(&g, &model, 4, 25, 8)?;
    println!("aggregate: success rate {}", aggregate.witness["success_rate"]);
    for c in &aggregate.certified {
        println!("{c}");
    }
    Ok(())
}
