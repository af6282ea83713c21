//! Lists the plane forests of a degree type and checks the count formula.
//!
//! `cargo run --example enumerate_forests -- 3,1,1`

use hookforest::{count_forests, enumerate_forests, DegreeSequence};

fn main() {
    let r: DegreeSequence = std::env::args().nth(1).as_deref().unwrap_or("3,1,1").parse().expect("degree type");
    let forests = enumerate_forests(&r);
    println!("type {r}: {} internal vertices, {} trees", r.internal(), r.trees());
    for f in &forests {
        let hooks: Vec<usize> = f.internal_vertices().iter().map(|v| v.hook).collect();
        println!("  {}  hooks {hooks:?}", f.to_json());
    }
    println!("enumerated {}, formula {}", forests.len(), count_forests(&r));
}
