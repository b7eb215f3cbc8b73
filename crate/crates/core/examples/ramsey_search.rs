//! Looks for triangle-free graphs with small α_3.

use keisler_lab::structures::{search_small_alpha, SmallAlphaOutcome, SmallAlphaSearch};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for (n, target) in [(8, 3), (13, 4), (16, 5)] {
        match search_small_alpha(&SmallAlphaSearch::new(n, 3, target, 5_000, 1))? {
            SmallAlphaOutcome::Found {
                alpha,
                origin,
                evaluations,
                ..
            } => {
                println!("n={n}: alpha_3={alpha} from {origin} after {evaluations} evaluations")
            }
            SmallAlphaOutcome::NotFound {
                best_alpha,
                evaluations,
                ..
            } => {
                println!("n={n}: nothing <= {target}; best {best_alpha:?} in {evaluations} evaluations")
            }
        }
    }
    Ok(())
}
