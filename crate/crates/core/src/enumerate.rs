//! Exhaustive enumeration and counting of 𝓕(r).

use num_bigint::BigUint;
use num_integer::Integer;

use crate::algebra::multinomial;
use crate::degree::DegreeSequence;
use crate::forest::PlaneForest;

/// Every plane forest of type `r`, each exactly once, sorted by its JSON
/// encoding.
///
/// Forests are generated as preorder degree words: a word is accepted when it
/// splits into complete trees, which fixes the tree count to `ℓ`.
pub fn enumerate_forests(r: &DegreeSequence) -> Vec<PlaneForest> {
    fn rec(remaining: &mut [u64], pending: usize, word: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if remaining.iter().all(|&c| c == 0) {
            if pending == 0 {
                out.push(word.clone());
            }
            return;
        }
        // A fresh tree opens one slot for its root.
        let slots = pending.max(1);
        for d in 0..remaining.len() {
            if remaining[d] == 0 {
                continue;
            }
            remaining[d] -= 1;
            word.push(d);
            rec(remaining, slots - 1 + d, word, out);
            word.pop();
            remaining[d] += 1;
        }
    }

    let mut remaining = r.counts().to_vec();
    let mut words = Vec::new();
    rec(&mut remaining, 0, &mut Vec::new(), &mut words);

    let mut keyed: Vec<(String, PlaneForest)> = words
        .iter()
        .map(|w| {
            let f = PlaneForest::from_preorder(w).expect("generator only emits complete words");
            (f.to_json(), f)
        })
        .collect();
    keyed.sort_by(|a, b| a.0.cmp(&b.0));
    keyed.into_iter().map(|(_, f)| f).collect()
}

/// `|𝓕(r)| = ℓ/(n + r_0) · multinomial(n + r_0; r_0, r_1, r_2, ...)`.
pub fn count_forests(r: &DegreeSequence) -> BigUint {
    let total = r.total_vertices();
    let m = multinomial(total, r.counts()).expect("counts sum to the vertex total");
    let (q, rem) = (m * r.trees()).div_rem(&BigUint::from(total));
    assert!(rem == BigUint::ZERO, "forest count for {r} is not an integer");
    q
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    fn r(text: &str) -> DegreeSequence {
        text.parse().unwrap()
    }

    /// Catalan numbers by their convolution recurrence.
    fn catalan(n: usize) -> u64 {
        let mut c = vec![1u64];
        for m in 1..=n {
            c.push((0..m).map(|i| c[i] * c[m - 1 - i]).sum());
        }
        c[n]
    }

    #[test]
    fn small_types() {
        let forests = enumerate_forests(&r("2,0,1"));
        assert_eq!(forests.len(), 1);
        assert_eq!(forests[0].to_json(), "[[[],[]]]");
        assert_eq!(count_forests(&r("2,0,1")), BigUint::from(1u32));

        let forests = enumerate_forests(&r("3,1,1"));
        assert_eq!(forests.len(), 8);
        assert_eq!(count_forests(&r("3,1,1")), BigUint::from(8u32));
        let two_tree = forests.iter().filter(|f| f.trees().iter().all(|t| !t.is_leaf())).count();
        assert_eq!(two_tree, 2);
    }

    #[test]
    fn binary_trees_are_catalan() {
        for n in 0..=6u64 {
            let t = DegreeSequence::new(vec![n + 1, 0, n]).unwrap();
            let want = catalan(n as usize);
            assert_eq!(enumerate_forests(&t).len() as u64, want, "{t}");
            assert_eq!(count_forests(&t), BigUint::from(want), "{t}");
        }
    }

    #[test]
    fn canonical_order_and_invariants() {
        for t in DegreeSequence::all_up_to(6, 3) {
            let forests = enumerate_forests(&t);
            assert_eq!(BigUint::from(forests.len()), count_forests(&t), "{t}");
            let keys: Vec<String> = forests.iter().map(PlaneForest::to_json).collect();
            assert!(keys.windows(2).all(|w| w[0] < w[1]), "{t} not strictly sorted");
            assert_eq!(keys.iter().collect::<HashSet<_>>().len(), keys.len());
            for (f, key) in forests.iter().zip(&keys) {
                assert_eq!(&f.degree_sequence(), &t);
                assert_eq!(f.trees().len() as u64, t.trees());
                assert_eq!(&PlaneForest::from_json(key).unwrap(), f);
            }
        }
    }
}
