//! The binary-tree hook length sums behind the general formulas.

use hookforest::hook::{lascoux_check, postnikov_check};

fn main() {
    for n in 1..=6 {
        let p = postnikov_check(n);
        let l = lascoux_check(n);
        println!("n = {n}: sum {} vs {} ({}), polynomial {} ({})", p.lhs, p.rhs, p.equal, l.lhs, l.equal);
    }
}
