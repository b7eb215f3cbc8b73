//! Random maximal K^r_s-free hypergraphs and their α_s.

use keisler_lab::structures::{alpha_s, is_free, is_maximal_free, random_maximal_free, DEFAULT_ALPHA_BUDGET};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for (r, s) in [(2, 3), (2, 4), (3, 4)] {
        let g = random_maximal_free(30, r, s, 7)?;
        // α_s is defined for graphs only.
        let alpha = if r == 2 {
            alpha_s(&g, s, DEFAULT_ALPHA_BUDGET)?.exact()
        } else {
            None
        };
        println!(
            "r={r} s={s}: {} edges, free={}, maximal={}, alpha_s={:?}",
            g.edge_count(),
            is_free(&g, s)?,
            is_maximal_free(&g, s)?,
            alpha
        );
    }
    Ok(())
}
