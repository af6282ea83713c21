//! Degree-sequence types `r = (r_0, r_1, r_2, ...)`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Multiplicities `r_d` of vertices with exactly `d` children.
///
/// Stored densely from degree 0 upward with trailing zeros trimmed, so two
/// sequences that agree on their support compare equal. Construction rejects
/// types that no nonempty forest can realize (tree count `ℓ < 1`).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u64>", into = "Vec<u64>")]
pub struct DegreeSequence {
    counts: Vec<u64>,
}

impl DegreeSequence {
    pub fn new(counts: impl Into<Vec<u64>>) -> Result<Self> {
        let mut counts = counts.into();
        while counts.last() == Some(&0) {
            counts.pop();
        }
        let seq = DegreeSequence { counts };
        let ell = seq.trees_signed();
        if ell < 1 {
            return Err(Error::InvalidType(format!(
                "{seq} has tree count {ell}, expected at least 1"
            )));
        }
        if seq.internal() >= 1 && seq.leaves() == 0 {
            return Err(Error::InvalidType(format!("{seq} has internal vertices but no leaf")));
        }
        Ok(seq)
    }

    /// `r_d`, zero outside the stored support.
    pub fn count(&self, degree: usize) -> u64 {
        self.counts.get(degree).copied().unwrap_or(0)
    }

    pub fn counts(&self) -> &[u64] {
        &self.counts
    }

    pub fn leaves(&self) -> u64 {
        self.count(0)
    }

    /// `n`: number of internal vertices.
    pub fn internal(&self) -> u64 {
        self.counts.iter().skip(1).sum()
    }

    /// `ℓ = -Σ (d-1) r_d`: number of trees.
    pub fn trees(&self) -> u64 {
        self.trees_signed() as u64
    }

    fn trees_signed(&self) -> i64 {
        self.counts
            .iter()
            .enumerate()
            .map(|(d, &r)| (1 - d as i64) * r as i64)
            .sum()
    }

    pub fn total_vertices(&self) -> u64 {
        self.leaves() + self.internal()
    }

    pub fn max_degree(&self) -> usize {
        self.counts.len().saturating_sub(1)
    }

    /// `(d, r_d)` for every degree `d ≥ 1` with `r_d > 0`.
    pub fn internal_degrees(&self) -> impl Iterator<Item = (usize, u64)> + '_ {
        self.counts
            .iter()
            .enumerate()
            .skip(1)
            .filter(|(_, &r)| r > 0)
            .map(|(d, &r)| (d, r))
    }

    /// Every realizable type with all degrees `≤ max_degree` and at most
    /// `max_total` vertices, in lexicographic order of the count vectors.
    pub fn all_up_to(max_total: u64, max_degree: usize) -> Vec<DegreeSequence> {
        fn rec(
            prefix: &mut Vec<u64>,
            remaining: u64,
            max_degree: usize,
            out: &mut Vec<DegreeSequence>,
        ) {
            if prefix.len() == max_degree + 1 {
                if let Ok(seq) = DegreeSequence::new(prefix.clone()) {
                    out.push(seq);
                }
                return;
            }
            for r in 0..=remaining {
                prefix.push(r);
                rec(prefix, remaining - r, max_degree, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        rec(&mut Vec::new(), max_total, max_degree, &mut out);
        out.sort();
        out.dedup();
        out
    }
}

impl TryFrom<Vec<u64>> for DegreeSequence {
    type Error = Error;

    fn try_from(counts: Vec<u64>) -> Result<Self> {
        DegreeSequence::new(counts)
    }
}

impl From<DegreeSequence> for Vec<u64> {
    fn from(seq: DegreeSequence) -> Self {
        seq.counts
    }
}

impl fmt::Display for DegreeSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.counts.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self.counts.iter().map(u64::to_string).collect();
        f.write_str(&parts.join(","))
    }
}

/// Parses the comma-separated text form `r0,r1,r2,...`.
impl FromStr for DegreeSequence {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let counts = s
            .split(',')
            .map(|part| {
                part.trim()
                    .parse::<u64>()
                    .map_err(|e| Error::Parse(format!("degree type entry {part:?}: {e}")))
            })
            .collect::<Result<Vec<u64>>>()?;
        DegreeSequence::new(counts)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn derived_quantities() {
        let r: DegreeSequence = "3,1,1".parse().unwrap();
        assert_eq!(r.internal(), 2);
        assert_eq!(r.trees(), 2);
        assert_eq!(r.total_vertices(), 5);

        let r = DegreeSequence::new(vec![4, 0, 3, 0, 0]).unwrap();
        assert_eq!(r.counts(), &[4, 0, 3]);
        assert_eq!(r.trees(), 1);
        assert_eq!(r.to_string(), "4,0,3");
    }

    #[test]
    fn rejects_unrealizable() {
        assert!(DegreeSequence::new(vec![]).is_err());
        assert!(DegreeSequence::new(vec![1, 0, 1]).is_err());
        assert!(DegreeSequence::new(vec![0, 2]).is_err());
        assert!("1,x".parse::<DegreeSequence>().is_err());
    }

    #[test]
    fn sweep_range_is_valid_and_sorted() {
        let all = DegreeSequence::all_up_to(4, 2);
        assert!(all.windows(2).all(|w| w[0] < w[1]));
        assert!(all.iter().all(|r| r.total_vertices() <= 4 && r.max_degree() <= 2));
        assert!(all.contains(&"2,0,1".parse().unwrap()));
        assert!(all.contains(&"1,3".parse().unwrap()));
        assert!(all.contains(&"4".parse().unwrap()));
    }
}
