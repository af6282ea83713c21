//! Counts proper k-colored labelled forests, overall and per partition.
//!
//! `cargo run --example colored_forests -- 3,1,1 1`

use hookforest::colored::{enumerate_colored, partitions, prop_cf_count, thm_cfs_count, ColoredFilter};
use hookforest::DegreeSequence;

fn main() {
    let mut args = std::env::args().skip(1);
    let r: DegreeSequence = args.next().as_deref().unwrap_or("3,1,1").parse().expect("degree type");
    let k: u32 = args.next().map_or(1, |a| a.parse().expect("k"));

    let all = enumerate_colored(&r, k, &ColoredFilter::default()).unwrap();
    println!("type {r}, k = {k}: {} forests, formula {}", all.len(), prop_cf_count(&r, k));
    if let Some(f) = all.last() {
        println!("  last: {}", f.to_json());
    }
    for s in partitions(&r) {
        let filter = ColoredFilter { partition: Some(s.clone()), first_tree_min: false };
        let size = enumerate_colored(&r, k, &filter).unwrap().len();
        println!("  S = {}: {size} (formula {})", serde_json::to_string(&s).unwrap(), thm_cfs_count(&r, k));
    }
}
