//! Code sequences `({g_i}, {f_j})` and their bijection with `𝓒𝓕_{r,k,S,1}`.
//!
//! Decoding works top-down on the set `L` of labels still to place, with
//! `m = min L` and `n' = |L|`. The value `f_{n'-1}` falls into one of a row of
//! windows: the first, of width `ℓ' + d_m - 1`, makes `m` the root of the first
//! tree; after it comes one window of width `d_i + k` for each other `i ∈ L`
//! in increasing order, making `i` that root. Removing the root leaves a
//! forest of the same shape one size down, whose first tree is restored by a
//! cyclic rotation.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::colored::{Color, ColoredLabelledForest, ColoredNode, PartitionS};
use crate::error::{Error, Result};

/// `g` is keyed by label, `f` by step index `1..n-1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CodeSequence {
    pub k: u32,
    pub g: BTreeMap<u32, u32>,
    pub f: BTreeMap<u32, u32>,
}

/// Shared bookkeeping for one `(S, k, ℓ)`.
struct Frame<'a> {
    s: &'a PartitionS,
    k: u32,
    leaves: u64,
}

impl Frame<'_> {
    fn new(s: &PartitionS, k: u32, trees: u64) -> Result<Frame<'_>> {
        if s.is_empty() {
            return Err(Error::Partition("code sequences need at least one internal vertex".into()));
        }
        if trees == 0 {
            return Err(Error::InvalidType("a forest has at least one tree".into()));
        }
        let excess: u64 = s.classes().iter().map(|&d| d as u64 - 1).sum();
        Ok(Frame { s, k, leaves: trees + excess })
    }

    fn degree(&self, label: u32) -> u64 {
        self.s.class_of(label).expect("label in partition") as u64
    }

    /// `ℓ'` for the forest holding exactly the labels in `remaining`.
    fn trees_with(&self, remaining: &[u32]) -> u64 {
        self.leaves - remaining.iter().map(|&l| self.degree(l) - 1).sum::<u64>()
    }

    /// `(root label, width)` for each window, in order. Widths add up to
    /// `r_0 + (n' - 1)(1 + k)`.
    fn windows(&self, remaining: &[u32]) -> Vec<(u32, u64)> {
        let m = remaining[0];
        let mut out = vec![(m, self.trees_with(remaining) + self.degree(m) - 1)];
        out.extend(remaining[1..].iter().map(|&i| (i, self.degree(i) + self.k as u64)));
        out
    }

    fn f_bound(&self, j: u32) -> u64 {
        self.leaves + j as u64 * (1 + self.k as u64)
    }
}

/// Window widths for the decoding step over `remaining` (sorted labels).
pub fn window_widths(s: &PartitionS, k: u32, trees: u64, remaining: &[u32]) -> Result<Vec<u64>> {
    let frame = Frame::new(s, k, trees)?;
    Ok(frame.windows(remaining).into_iter().map(|(_, w)| w).collect())
}

/// `Π_i d_i · Π_{j=1}^{n-1} (r_0 + j(1+k))`
pub fn code_box_size(s: &PartitionS, k: u32, trees: u64) -> Result<BigUint> {
    let frame = Frame::new(s, k, trees)?;
    let n = s.len() as u32;
    let g: BigUint = s.classes().iter().map(|&d| BigUint::from(d)).product();
    let f: BigUint = (1..n).map(|j| BigUint::from(frame.f_bound(j))).fold(BigUint::one(), |a, b| a * b);
    Ok(g * f)
}

fn check_codes(frame: &Frame<'_>, codes: &CodeSequence) -> Result<()> {
    let n = frame.s.len() as u32;
    if codes.k != frame.k {
        return Err(Error::CodeOutOfBounds(format!("codes carry k = {}, expected {}", codes.k, frame.k)));
    }
    if codes.g.len() != n as usize || codes.g.keys().copied().ne(1..=n) {
        return Err(Error::CodeOutOfBounds(format!("g must be keyed by labels 1..={n}")));
    }
    if codes.f.len() != n as usize - 1 || codes.f.keys().copied().ne(1..n) {
        return Err(Error::CodeOutOfBounds(format!("f must be keyed by 1..={}", n - 1)));
    }
    for (&i, &gi) in &codes.g {
        let d = frame.degree(i);
        if gi == 0 || gi as u64 > d {
            return Err(Error::CodeOutOfBounds(format!("g_{i} = {gi} outside 1..={d}")));
        }
    }
    for (&j, &fj) in &codes.f {
        let bound = frame.f_bound(j);
        if fj == 0 || fj as u64 > bound {
            return Err(Error::CodeOutOfBounds(format!("f_{j} = {fj} outside 1..={bound}")));
        }
    }
    Ok(())
}

/// Builds the member of `𝓒𝓕_{r,k,S,1}` with the given codes, where `r` is
/// the type determined by `S` and the tree count `trees`.
pub fn decode(s: &PartitionS, k: u32, trees: u64, codes: &CodeSequence) -> Result<ColoredLabelledForest> {
    let frame = Frame::new(s, k, trees)?;
    check_codes(&frame, codes)?;
    let labels: Vec<u32> = (1..=s.len() as u32).collect();
    let nodes = decode_step(&frame, codes, &labels);
    ColoredLabelledForest::from_nodes(&nodes, k)
}

fn decode_step(frame: &Frame<'_>, codes: &CodeSequence, remaining: &[u32]) -> Vec<ColoredNode> {
    let m = remaining[0];
    if remaining.len() == 1 {
        let d = frame.degree(m) as usize;
        let root = ColoredNode::internal(m, Color::Edge(codes.g[&m]), vec![ColoredNode::leaf(); d]);
        let bare = frame.trees_with(remaining) as usize - 1;
        return std::iter::once(root).chain(std::iter::repeat_n(ColoredNode::leaf(), bare)).collect();
    }

    let mut offset = codes.f[&(remaining.len() as u32 - 1)] as u64;
    let (root, within) = frame
        .windows(remaining)
        .into_iter()
        .find_map(|(label, width)| {
            if offset <= width {
                Some((label, offset))
            } else {
                offset -= width;
                None
            }
        })
        .expect("f bounds cover every window");

    let rest: Vec<u32> = remaining.iter().copied().filter(|&l| l != root).collect();
    let mut forest = decode_step(frame, codes, &rest);
    let d = frame.degree(root) as usize;
    let color = if root == m {
        // the tree holding the next label was rotated to the front
        forest.rotate_right(within as usize - 1);
        Color::Edge(codes.g[&m])
    } else {
        // m's subtree was rotated to the front of the root's children
        forest[..d].rotate_right(codes.g[&root] as usize - 1);
        if within <= d as u64 {
            Color::Edge(within as u32)
        } else {
            Color::Special((within - d as u64) as u32)
        }
    };
    let children: Vec<ColoredNode> = forest.drain(..d).collect();
    forest.insert(0, ColoredNode::internal(root, color, children));
    forest
}

fn tree_holding(forest: &[ColoredNode], label: u32) -> usize {
    forest
        .iter()
        .position(|t| t.label == Some(label) || t.contains_label(label))
        .expect("label present")
}

/// The codes that [`decode`] maps to `forest`.
pub fn encode(forest: &ColoredLabelledForest, s: &PartitionS) -> Result<CodeSequence> {
    if !forest.in_class(s) {
        return Err(Error::Partition("forest labels do not respect the partition".into()));
    }
    if !forest.min_label_in_first_tree() {
        return Err(Error::MinimumNotInFirstTree);
    }
    let trees = forest.shape().trees().len() as u64;
    let frame = Frame::new(s, forest.k(), trees)?;
    let mut codes = CodeSequence { k: forest.k(), g: BTreeMap::new(), f: BTreeMap::new() };
    let mut nodes = forest.to_nodes();
    let mut remaining: Vec<u32> = (1..=s.len() as u32).collect();

    while !remaining.is_empty() {
        let m = remaining[0];
        let root = nodes.remove(0);
        let label = root.label.expect("first tree holds the minimum label, so its root is internal");
        let color = root.color.expect("internal");
        let d = root.children.len();
        if remaining.len() == 1 {
            match color {
                Color::Edge(j) => codes.g.insert(m, j),
                Color::Special(_) => unreachable!("a vertex without internal descendants is proper"),
            };
            break;
        }
        let windows = frame.windows(&remaining);
        let step = remaining.len() as u32 - 1;
        let mut children = root.children;
        if label == m {
            let Color::Edge(j) = color else { unreachable!("the minimum label is proper") };
            codes.g.insert(m, j);
            children.append(&mut nodes);
            nodes = children;
            let next = tree_holding(&nodes, remaining[1]);
            codes.f.insert(step, next as u32 + 1);
            nodes.rotate_left(next);
        } else {
            let before: u64 = windows.iter().take_while(|(l, _)| *l != label).map(|(_, w)| w).sum();
            let within = match color {
                Color::Edge(j) => j as u64,
                Color::Special(t) => d as u64 + t as u64,
            };
            codes.f.insert(step, (before + within) as u32);
            let branch = tree_holding(&children, m);
            codes.g.insert(label, branch as u32 + 1);
            children.rotate_left(branch);
            children.append(&mut nodes);
            nodes = children;
        }
        remaining.retain(|&l| l != label);
    }
    Ok(codes)
}

/// Visits the whole code box for `(S, k, ℓ)` in lexicographic order of
/// `(g_1, …, g_n, f_1, …, f_{n-1})`.
pub fn for_each_code(s: &PartitionS, k: u32, trees: u64, mut visit: impl FnMut(&CodeSequence)) -> Result<()> {
    let frame = Frame::new(s, k, trees)?;
    let n = s.len() as u32;
    let mut bounds: Vec<u64> = (1..=n).map(|i| frame.degree(i)).collect();
    bounds.extend((1..n).map(|j| frame.f_bound(j)));
    let mut digits = vec![1u64; bounds.len()];
    loop {
        let codes = CodeSequence {
            k,
            g: (1..=n).map(|i| (i, digits[i as usize - 1] as u32)).collect(),
            f: (1..n).map(|j| (j, digits[(n + j) as usize - 1] as u32)).collect(),
        };
        visit(&codes);
        let mut pos = digits.len();
        loop {
            if pos == 0 {
                return Ok(());
            }
            pos -= 1;
            if digits[pos] < bounds[pos] {
                digits[pos] += 1;
                break;
            }
            digits[pos] = 1;
        }
    }
}
