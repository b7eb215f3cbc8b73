//! Greedy coloring of a weighted 3-graph against the r!/r^r guarantee and the optimum.

use keisler_lab::coloring::{brute_best, greedy_coloring_traced, guarantee_value, weight_of, WeightedHypergraph};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let h = WeightedHypergraph::random(9, 3, 10, 3, &mut rng);
    let (chi, trace) = greedy_coloring_traced(&h);
    println!("total weight {}", h.total_weight());
    println!("guarantee    {}", guarantee_value(&h));
    println!("greedy       {} with colors {:?}", weight_of(&h, &chi)?, chi.0);
    println!(
        "trace        {}",
        trace.iter().map(|q| q.to_string()).collect::<Vec<_>>().join(" <= ")
    );
    let best = brute_best(&h, 12)?;
    println!("optimum      {}", best.best_value);
    Ok(())
}
