use itertools::Itertools;
use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::labelled::{proper_flags, Color, ColoredLabelledForest, LabelledForest};
use super::partition::PartitionS;
use crate::algebra::{factorial, leaf_product, multinomial};
use crate::degree::DegreeSequence;
use crate::enumerate::enumerate_forests;
use crate::error::{Error, Result};
use crate::forest::PlaneForest;

/// Restrictions on [`enumerate_colored`].
#[derive(Clone, Debug, Default)]
pub struct ColoredFilter {
    /// Keep only forests whose labels respect this partition.
    pub partition: Option<PartitionS>,
    /// Keep only forests with label 1 in the first tree.
    pub first_tree_min: bool,
}

/// Every proper `k`-colored labelled forest of type `r` passing `filter`.
///
/// Order: canonical forest order, then labellings lexicographically, then
/// colorings lexicographically with `Edge(1) < … < Edge(d) < Special(1) < …`.
pub fn enumerate_colored(r: &DegreeSequence, k: u32, filter: &ColoredFilter) -> Result<Vec<ColoredLabelledForest>> {
    let mut out = Vec::new();
    for_each_colored(r, k, filter, |f| out.push(f))?;
    Ok(out)
}

/// Streaming form of [`enumerate_colored`].
pub fn for_each_colored(
    r: &DegreeSequence,
    k: u32,
    filter: &ColoredFilter,
    mut visit: impl FnMut(ColoredLabelledForest),
) -> Result<()> {
    if let Some(s) = &filter.partition {
        if !s.matches(r) {
            return Err(Error::Partition(format!("partition does not have type {r}")));
        }
    }
    let n = r.internal() as u32;
    if filter.first_tree_min && n == 0 {
        return Err(Error::Labelling("no label 1 exists in a forest without internal vertices".into()));
    }
    for shape in enumerate_forests(r) {
        let layout = shape.internal_vertices();
        for labels in (1..=n).permutations(n as usize) {
            if let Some(s) = &filter.partition {
                if !layout.iter().zip(&labels).all(|(v, &l)| s.class_of(l) == Some(v.degree as u32)) {
                    continue;
                }
            }
            if filter.first_tree_min && layout[labels.iter().position(|&l| l == 1).unwrap()].tree != 0 {
                continue;
            }
            let proper = proper_flags(&layout, &labels);
            let options: Vec<Vec<Color>> = layout
                .iter()
                .zip(&proper)
                .map(|(v, &p)| {
                    let edges = (1..=v.degree as u32).map(Color::Edge);
                    let specials = (1..=if p { 0 } else { k }).map(Color::Special);
                    edges.chain(specials).collect()
                })
                .collect();
            let base = LabelledForest::new(shape.clone(), labels.clone()).expect("permutation labelling");
            // odometer over the option lists, last vertex fastest
            let mut digits = vec![0usize; options.len()];
            loop {
                let colors = digits.iter().zip(&options).map(|(&d, o)| o[d]).collect();
                visit(ColoredLabelledForest::new_unchecked(base.clone(), k, colors));
                let mut pos = digits.len();
                loop {
                    if pos == 0 {
                        break;
                    }
                    pos -= 1;
                    digits[pos] += 1;
                    if digits[pos] < options[pos].len() {
                        break;
                    }
                    digits[pos] = 0;
                }
                if digits.iter().all(|&d| d == 0) {
                    break;
                }
            }
        }
    }
    Ok(())
}

/// `Σ_{F ∈ 𝓕(r)} n! Π_{v ∈ I(F)} ((d_v + k) - k/h_v)`
pub fn lemma_ccf_lhs(r: &DegreeSequence, k: u32) -> BigRational {
    let nfact = BigRational::from_integer(BigInt::from(factorial(r.internal())));
    let k = BigInt::from(k);
    enumerate_forests(r)
        .iter()
        .map(|f| {
            f.internal_vertices()
                .iter()
                .map(|v| {
                    BigRational::from_integer(BigInt::from(v.degree) + &k)
                        - BigRational::new(k.clone(), BigInt::from(v.hook))
                })
                .fold(nfact.clone(), |acc, x| acc * x)
        })
        .fold(BigRational::zero(), |acc, x| acc + x)
}

fn to_integer(q: BigRational, what: &str) -> BigUint {
    assert!(q.is_integer(), "{what} is not an integer: {q}");
    q.to_integer().to_biguint().unwrap_or_else(|| panic!("{what} is negative: {q}"))
}

/// `ℓ · Π_{d≥1} d^{r_d} · Π_{i=1}^{n-1} (r_0 + i(1+k))`, the size of
/// `𝓒𝓕_{r,k,S}` for any single partition `S`.
pub fn thm_cfs_count(r: &DegreeSequence, k: u32) -> BigUint {
    let edge_choices: BigUint = r
        .internal_degrees()
        .map(|(d, rd)| BigUint::from(d).pow(rd as u32))
        .fold(BigUint::one(), |acc, x| acc * x);
    let value = leaf_product(r, k as u64) * BigRational::from_integer(BigInt::from(edge_choices * r.trees()));
    to_integer(value, "partition-class count")
}

/// `multinomial(n; r_1, r_2, ...) · ℓ · Π d^{r_d} · Π_{i=1}^{n-1} (r_0 + i(1+k))`
pub fn prop_cf_count(r: &DegreeSequence, k: u32) -> BigUint {
    let parts: Vec<u64> = r.counts().iter().skip(1).copied().collect();
    multinomial(r.internal(), &parts).expect("parts sum to n") * thm_cfs_count(r, k)
}

/// Number of labellings of `shape` under which every vertex of `subset`
/// (bitmask over internal preorder positions) is proper, for every subset.
pub fn proper_set_labelling_counts(shape: &PlaneForest) -> Vec<u64> {
    let layout = shape.internal_vertices();
    let n = layout.len();
    assert!(n < 16, "subset table is exponential in n");
    let mut counts = vec![0u64; 1 << n];
    for labels in (1..=n as u32).permutations(n) {
        let proper = proper_flags(&layout, &labels);
        let mask = proper.iter().enumerate().filter(|(_, &p)| p).fold(0usize, |m, (i, _)| m | 1 << i);
        // every subset of the proper set
        let mut sub = mask;
        loop {
            counts[sub] += 1;
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & mask;
        }
    }
    counts
}

/// Labellings of `shape` in which all internal vertices at the given
/// preorder positions are proper.
pub fn labellings_with_proper_set(shape: &PlaneForest, subset: &[usize]) -> u64 {
    let layout = shape.internal_vertices();
    let n = layout.len() as u32;
    (1..=n)
        .permutations(n as usize)
        .filter(|labels| {
            let proper = proper_flags(&layout, labels);
            subset.iter().all(|&i| proper[i])
        })
        .count() as u64
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::int;
    use crate::colored::partition::partitions;

    fn r(text: &str) -> DegreeSequence {
        text.parse().unwrap()
    }

    fn big(v: u64) -> BigUint {
        BigUint::from(v)
    }

    fn with_partition(classes: &[u32]) -> ColoredFilter {
        ColoredFilter { partition: Some(PartitionS::from_classes(classes.to_vec()).unwrap()), first_tree_min: false }
    }

    #[test]
    fn enumeration_examples() {
        let all = enumerate_colored(&r("2,0,1"), 0, &ColoredFilter::default()).unwrap();
        assert_eq!(all.len(), 2);
        assert_eq!(all[0].colors(), &[Color::Edge(1)]);
        assert_eq!(all[1].colors(), &[Color::Edge(2)]);

        let all = enumerate_colored(&r("1,2"), 1, &with_partition(&[1, 1])).unwrap();
        assert_eq!(all.len(), 3);
        assert_eq!(all[0].labels(), &[1, 2]);
        assert_eq!(all[1].labels(), &[2, 1]);
        assert_eq!(all[2].colors(), &[Color::Special(1), Color::Edge(1)]);

        let first = ColoredFilter { partition: None, first_tree_min: true };
        assert_eq!(enumerate_colored(&r("1,2"), 1, &first).unwrap().len(), 3);
    }

    #[test]
    fn enumeration_errors() {
        assert!(enumerate_colored(&r("3,1,1"), 0, &with_partition(&[1, 1])).is_err());
        let first = ColoredFilter { partition: None, first_tree_min: true };
        assert!(enumerate_colored(&r("3"), 0, &first).is_err());
    }

    #[test]
    fn enumeration_is_valid_and_duplicate_free() {
        for t in DegreeSequence::all_up_to(5, 3) {
            for k in 0..=2 {
                let all = enumerate_colored(&t, k, &ColoredFilter::default()).unwrap();
                let mut sorted = all.clone();
                sorted.sort();
                sorted.dedup();
                assert_eq!(sorted.len(), all.len(), "{t} k={k}");
                for f in &all {
                    ColoredLabelledForest::new(f.base().clone(), k, f.colors().to_vec()).unwrap();
                    assert_eq!(f.shape().degree_sequence(), t);
                }
            }
        }
    }

    #[test]
    fn count_examples() {
        assert_eq!(lemma_ccf_lhs(&r("1,2"), 1), int(3));
        assert_eq!(lemma_ccf_lhs(&r("2,0,1"), 3), int(2));
        assert_eq!(prop_cf_count(&r("1,2"), 1), big(3));
        assert_eq!(prop_cf_count(&r("3,1,1"), 0), big(32));
        assert_eq!(thm_cfs_count(&r("2,0,1"), 7), big(2));
        assert_eq!(thm_cfs_count(&r("3,1,1"), 0), big(16));
        assert_eq!(thm_cfs_count(&r("1,2"), 1), big(3));
        // n = 1: ℓ·d
        assert_eq!(prop_cf_count(&r("4,0,0,1"), 2), big(6));
        assert_eq!(prop_cf_count(&r("3,0,0,1"), 2), big(3));
        // n = 0: the lone labelled forest
        assert_eq!(prop_cf_count(&r("3"), 2), big(1));
        assert_eq!(thm_cfs_count(&r("3"), 2), big(1));
    }

    #[test]
    fn k_zero_reduces_to_edge_colorings() {
        for t in DegreeSequence::all_up_to(6, 3) {
            let direct: BigUint = enumerate_forests(&t)
                .iter()
                .map(|f| {
                    f.internal_vertices().iter().map(|v| BigUint::from(v.degree)).product::<BigUint>()
                        * factorial(t.internal())
                })
                .sum();
            assert_eq!(lemma_ccf_lhs(&t, 0), BigRational::from_integer(BigInt::from(direct.clone())));
            assert_eq!(prop_cf_count(&t, 0), direct, "{t}");
        }
    }

    #[test]
    fn partition_counts_on_a_small_type() {
        let t = r("3,1,1");
        for s in partitions(&t) {
            let filter = ColoredFilter { partition: Some(s.clone()), first_tree_min: false };
            assert_eq!(enumerate_colored(&t, 0, &filter).unwrap().len(), 16);
            let first = ColoredFilter { partition: Some(s), first_tree_min: true };
            assert_eq!(enumerate_colored(&t, 0, &first).unwrap().len(), 8);
        }
    }

    #[test]
    fn proper_set_table_matches_direct_count() {
        let shape = PlaneForest::from_json("[[[[]],[[],[]]],[[]]]").unwrap();
        let table = proper_set_labelling_counts(&shape);
        assert_eq!(table[0], 24);
        assert_eq!(table[0b0001], labellings_with_proper_set(&shape, &[0]));
        assert_eq!(table[0b0101], labellings_with_proper_set(&shape, &[0, 2]));
        assert_eq!(table[0b1111], labellings_with_proper_set(&shape, &[0, 1, 2, 3]));
        // root has hook 3
        assert_eq!(table[0b0001] * 3, 24);
    }
}
