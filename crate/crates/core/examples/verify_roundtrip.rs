//! Serialize a witness report, read it back, verify it, then tamper with it.

use std::collections::BTreeMap;

use keisler_lab::rational::from_int;
use keisler_lab::structures::{random_maximal_free, AnyStructure};
use keisler_lab::witnesses::{order_witness, verify_report, WitnessReport};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let g = random_maximal_free(25, 2, 3, 6)?;
    let report = order_witness(&g, 3, 3)?;
    let text = report.to_json_string();
    println!("{text}");

    let inputs = BTreeMap::from([("ambient".to_string(), AnyStructure::Hypergraph(g))]);
    let mut back = WitnessReport::from_json_str(&text)?;
    println!("verifies: {}", verify_report(&back, &inputs)?.ok());

    back.certified[0].lhs = from_int(1);
    let v = verify_report(&back, &inputs)?;
    println!("after tampering: {} {:?}", v.ok(), v.mismatches);
    Ok(())
}
