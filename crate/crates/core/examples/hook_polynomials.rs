//! Hook length polynomials by enumeration against their product forms.
//!
//! `cargo run --example hook_polynomials -- 4,1,0,1`

use hookforest::algebra::{closed_hookp, closed_hookp2, rat};
use hookforest::hook::{brute_hookp, brute_hookp2, transformation_holds};
use hookforest::DegreeSequence;

fn main() {
    let r: DegreeSequence = std::env::args().nth(1).as_deref().unwrap_or("4,1,0,1").parse().expect("degree type");
    let (first, second) = (brute_hookp(&r), brute_hookp2(&r));
    println!("type {r}");
    println!("  first form  {first}");
    println!("  closed      {}", closed_hookp(&r));
    println!("  second form {second}");
    println!("  closed      {}", closed_hookp2(&r));
    for t in [rat(0, 1), rat(1, 2), rat(3, 1)] {
        println!("  substitution at t = {t}: {}", transformation_holds(&r, &first, &second, &t));
    }
}
