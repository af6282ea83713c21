//! Encodes colored forests with label 1 in the first tree as code sequences
//! and decodes them back.

use hookforest::bijection::{code_box_size, decode, encode};
use hookforest::colored::{enumerate_colored, partitions, ColoredFilter};
use hookforest::DegreeSequence;

fn main() {
    let r: DegreeSequence = "3,1,1".parse().unwrap();
    let k = 1;
    let s = &partitions(&r)[0];
    let filter = ColoredFilter { partition: Some(s.clone()), first_tree_min: true };
    let members = enumerate_colored(&r, k, &filter).unwrap();
    println!(
        "S = {}: {} forests, code box size {}",
        serde_json::to_string(s).unwrap(),
        members.len(),
        code_box_size(s, k, r.trees()).unwrap()
    );
    for f in &members {
        let codes = encode(f, s).unwrap();
        let back = decode(s, k, r.trees(), &codes).unwrap();
        assert_eq!(&back, f);
        println!("  {}  {}", serde_json::to_string(&codes).unwrap(), f.to_json());
    }
}
