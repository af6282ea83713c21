//! Applies ψ across every adjacent pair of partitions and tallies the cases.

use std::collections::BTreeMap;

use hookforest::bijection::psi;
use hookforest::colored::{enumerate_colored, partitions, ColoredFilter};
use hookforest::DegreeSequence;

fn main() {
    let r: DegreeSequence = "4,1,1,1".parse().unwrap();
    let k = 1;
    let mut cases = BTreeMap::new();
    for s1 in partitions(&r) {
        for i in 1..s1.len() as u32 {
            let s2 = s1.swapped(i);
            if s2 == s1 {
                continue;
            }
            let filter = ColoredFilter { partition: Some(s1.clone()), first_tree_min: false };
            for f in enumerate_colored(&r, k, &filter).unwrap() {
                let (g, case) = psi(&f, &s1, &s2).unwrap();
                cases.entry(case).or_insert_with(|| (0, f.to_json(), g.to_json())).0 += 1;
            }
        }
    }
    for (case, (count, f, g)) in cases {
        println!("case {case}: {count} times, e.g.\n  {f}\n  -> {g}");
    }
}
