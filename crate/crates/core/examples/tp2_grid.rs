//! The k x k array in the Feq2 grid: rows inconsistent, every path consistent.

use keisler_lab::structures::Feq2Structure;
use keisler_lab::witnesses::{tp2_witness, PathSelection};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let k = 3;
    let f = Feq2Structure::tp2_grid(k)?;
    println!("{} objects, {} parameters", f.objects(), f.parameters());
    let report = tp2_witness(&f, k, &PathSelection::All)?;
    for c in &report.certified {
        println!("{c}");
    }

    let broken = Feq2Structure::tp2_grid_with_paths(k, &[vec![0, 1, 2], vec![2, 2, 2]])?;
    let report = tp2_witness(&broken, k, &PathSelection::All)?;
    println!("with two paths only: {}", report.certified[1]);
    Ok(())
}
