//! Partitions `S = (S_1, S_2, ...)` of the labels `[n]` with `|S_d| = r_d`,
//! and the adjacency graph `G_r` on them.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::degree::DegreeSequence;
use crate::error::{Error, Result};

/// Stored as the class (degree) of each label, label `i` at index `i - 1`.
/// JSON form maps each degree to its sorted labels: `{"1":[2],"2":[1]}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "BTreeMap<u32, Vec<u32>>", into = "BTreeMap<u32, Vec<u32>>")]
pub struct PartitionS {
    class_of: Vec<u32>,
}

impl PartitionS {
    pub fn from_classes(class_of: Vec<u32>) -> Result<Self> {
        if class_of.contains(&0) {
            return Err(Error::Partition("labels belong to classes of degree at least 1".into()));
        }
        Ok(PartitionS { class_of })
    }

    /// `n`: how many labels are partitioned.
    pub fn len(&self) -> usize {
        self.class_of.len()
    }

    pub fn is_empty(&self) -> bool {
        self.class_of.is_empty()
    }

    pub fn class_of(&self, label: u32) -> Option<u32> {
        (label as usize).checked_sub(1).and_then(|i| self.class_of.get(i)).copied()
    }

    pub fn classes(&self) -> &[u32] {
        &self.class_of
    }

    /// `S_d` in increasing order.
    pub fn class(&self, degree: u32) -> Vec<u32> {
        (1..=self.len() as u32).filter(|&l| self.class_of(l) == Some(degree)).collect()
    }

    /// `|S_d|` indexed by `d`, with `d = 0` always empty.
    pub fn class_sizes(&self) -> Vec<u64> {
        let max = self.class_of.iter().copied().max().unwrap_or(0) as usize;
        let mut sizes = vec![0u64; max + 1];
        for &d in &self.class_of {
            sizes[d as usize] += 1;
        }
        sizes
    }

    pub fn matches(&self, r: &DegreeSequence) -> bool {
        let sizes = self.class_sizes();
        let len = sizes.len().max(r.counts().len());
        (1..len).all(|d| sizes.get(d).copied().unwrap_or(0) == r.count(d))
    }

    /// The partition obtained by swapping labels `i` and `i + 1`.
    pub fn swapped(&self, i: u32) -> PartitionS {
        let mut class_of = self.class_of.clone();
        class_of.swap(i as usize - 1, i as usize);
        PartitionS { class_of }
    }
}

impl TryFrom<BTreeMap<u32, Vec<u32>>> for PartitionS {
    type Error = Error;

    fn try_from(map: BTreeMap<u32, Vec<u32>>) -> Result<Self> {
        let n: usize = map.values().map(Vec::len).sum();
        let mut class_of = vec![0u32; n];
        for (&d, labels) in &map {
            for &l in labels {
                match (l as usize).checked_sub(1).and_then(|i| class_of.get_mut(i)) {
                    Some(slot) if *slot == 0 => *slot = d,
                    _ => return Err(Error::Partition(format!("label {l} is repeated or outside 1..={n}"))),
                }
            }
        }
        PartitionS::from_classes(class_of)
    }
}

impl From<PartitionS> for BTreeMap<u32, Vec<u32>> {
    fn from(s: PartitionS) -> Self {
        let mut map: BTreeMap<u32, Vec<u32>> = BTreeMap::new();
        for (i, &d) in s.class_of.iter().enumerate() {
            map.entry(d).or_default().push(i as u32 + 1);
        }
        map
    }
}

/// All of `V_r`, in lexicographic order of the class vectors.
pub fn partitions(r: &DegreeSequence) -> Vec<PartitionS> {
    fn rec(remaining: &mut [u64], prefix: &mut Vec<u32>, n: usize, out: &mut Vec<PartitionS>) {
        if prefix.len() == n {
            out.push(PartitionS { class_of: prefix.clone() });
            return;
        }
        for d in 1..remaining.len() {
            if remaining[d] > 0 {
                remaining[d] -= 1;
                prefix.push(d as u32);
                rec(remaining, prefix, n, out);
                prefix.pop();
                remaining[d] += 1;
            }
        }
    }
    let mut remaining = r.counts().to_vec();
    let mut out = Vec::new();
    rec(&mut remaining, &mut Vec::new(), r.internal() as usize, &mut out);
    out
}

fn same_type(s1: &PartitionS, s2: &PartitionS) -> Result<()> {
    if s1.class_sizes() != s2.class_sizes() {
        return Err(Error::Partition("partitions have different types".into()));
    }
    Ok(())
}

/// The `i` such that swapping `i` and `i + 1` turns `s1` into `s2`, when the
/// two partitions are distinct and adjacent.
pub fn adjacency_swap(s1: &PartitionS, s2: &PartitionS) -> Result<Option<u32>> {
    same_type(s1, s2)?;
    let diff: Vec<usize> = (0..s1.len()).filter(|&i| s1.class_of[i] != s2.class_of[i]).collect();
    Ok(match diff.as_slice() {
        [a, b] if *b == a + 1 && s1.swapped(*a as u32 + 1) == *s2 => Some(*a as u32 + 1),
        _ => None,
    })
}

pub fn adjacent(s1: &PartitionS, s2: &PartitionS) -> Result<bool> {
    Ok(adjacency_swap(s1, s2)?.is_some())
}

/// A walk `s1 = P_0, P_1, ..., P_m = s2` in `G_r`, built by bubbling each
/// target class into place with adjacent transpositions.
pub fn partition_path(s1: &PartitionS, s2: &PartitionS) -> Result<Vec<PartitionS>> {
    same_type(s1, s2)?;
    let mut current = s1.clone();
    let mut path = vec![current.clone()];
    for p in 0..current.len() {
        let want = s2.class_of[p];
        let q = (p..current.len())
            .find(|&q| current.class_of[q] == want)
            .expect("same type guarantees a matching class further right");
        for j in (p..q).rev() {
            // class_of[j] != want == class_of[j + 1], so each swap moves.
            current = current.swapped(j as u32 + 1);
            path.push(current.clone());
        }
    }
    Ok(path)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::multinomial;
    use num_bigint::BigUint;

    fn s(classes: &[u32]) -> PartitionS {
        PartitionS::from_classes(classes.to_vec()).unwrap()
    }

    #[test]
    fn enumerates_v_r() {
        let r: DegreeSequence = "3,1,1".parse().unwrap();
        let all = partitions(&r);
        assert_eq!(all, vec![s(&[1, 2]), s(&[2, 1])]);

        for t in DegreeSequence::all_up_to(8, 4) {
            let all = partitions(&t);
            let parts: Vec<u64> = t.counts().iter().skip(1).copied().collect();
            assert_eq!(BigUint::from(all.len()), multinomial(t.internal(), &parts).unwrap(), "{t}");
            assert!(all.iter().all(|p| p.matches(&t)));
            assert!(all.windows(2).all(|w| w[0] < w[1]));
        }
    }

    #[test]
    fn adjacency() {
        assert!(adjacent(&s(&[1, 2]), &s(&[2, 1])).unwrap());
        assert_eq!(adjacency_swap(&s(&[1, 2, 3]), &s(&[1, 3, 2])).unwrap(), Some(2));
        assert!(!adjacent(&s(&[1, 2, 3]), &s(&[3, 2, 1])).unwrap());
        assert!(!adjacent(&s(&[1, 2]), &s(&[1, 2])).unwrap());
        assert!(adjacent(&s(&[1, 2]), &s(&[1, 1])).is_err());
    }

    #[test]
    fn paths_connect_every_pair() {
        let r: DegreeSequence = "4,1,1,1".parse().unwrap();
        let all = partitions(&r);
        for a in &all {
            assert_eq!(partition_path(a, a).unwrap(), vec![a.clone()]);
            for b in &all {
                let path = partition_path(a, b).unwrap();
                assert_eq!(path.first(), Some(a));
                assert_eq!(path.last(), Some(b));
                assert!(path.windows(2).all(|w| adjacent(&w[0], &w[1]).unwrap()));
            }
        }
    }

    #[test]
    fn json_form() {
        let p = s(&[2, 1, 2]);
        let text = serde_json::to_string(&p).unwrap();
        assert_eq!(text, r#"{"1":[2],"2":[1,3]}"#);
        assert_eq!(serde_json::from_str::<PartitionS>(&text).unwrap(), p);
        assert!(serde_json::from_str::<PartitionS>(r#"{"1":[1,1]}"#).is_err());
        assert!(serde_json::from_str::<PartitionS>(r#"{"1":[3]}"#).is_err());
        assert!(serde_json::from_str::<PartitionS>(r#"{"0":[1]}"#).is_err());
        assert_eq!(p.class(2), vec![1, 3]);
    }
}
