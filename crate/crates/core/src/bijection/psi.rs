//! The map `ψ: 𝓒𝓕_{r,k,S1} → 𝓒𝓕_{r,k,S2}` between adjacent partitions.
//!
//! With `S2` obtained from `S1` by swapping `i` and `i+1`, let `v1` carry
//! label `i` and `v2` carry `i+1`. Five of the six cases only exchange the two
//! labels; the last one cuts the tree at `v2`, `u`, `v1` and `w` and
//! reassembles the five pieces before exchanging labels.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::colored::{adjacency_swap, Color, ColoredLabelledForest, ColoredNode, PartitionS};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum PsiCase {
    /// Neither vertex descends from the other.
    I,
    /// `v2` below `v1`, `v1` improper.
    Ii,
    /// `v2` below `v1`, `v1` proper.
    Iii,
    /// `v1` below `v2`, some label `< i` below `v2`.
    Iv,
    /// `v1` below `v2`, no label `< i` below `v2`, `v2` edge-colored.
    V,
    /// `v1` below `v2`, no label `< i` below `v2`, `v2` special-colored.
    Vi,
}

impl PsiCase {
    pub const ALL: [PsiCase; 6] = [PsiCase::I, PsiCase::Ii, PsiCase::Iii, PsiCase::Iv, PsiCase::V, PsiCase::Vi];
}

impl fmt::Display for PsiCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            PsiCase::I => "i",
            PsiCase::Ii => "ii",
            PsiCase::Iii => "iii",
            PsiCase::Iv => "iv",
            PsiCase::V => "v",
            PsiCase::Vi => "vi",
        };
        f.write_str(s)
    }
}

fn locate(trees: &[ColoredNode], label: u32) -> (usize, Vec<usize>) {
    trees
        .iter()
        .enumerate()
        .find_map(|(t, tree)| tree.path_to(label).map(|p| (t, p)))
        .expect("every label occurs in the forest")
}

/// Replaces the subtree at `path` by a bare leaf and returns the subtree.
fn cut(node: &mut ColoredNode, path: &[usize]) -> ColoredNode {
    std::mem::take(node.at_mut(path))
}

fn swap_labels(trees: &mut [ColoredNode], i: u32) {
    let exchange = |l: u32| match l {
        l if l == i => i + 1,
        l if l == i + 1 => i,
        l => l,
    };
    for tree in trees {
        tree.relabel(&exchange);
    }
}

/// Applies `ψ` for the adjacent pair `(s1, s2)` and reports which case fired.
pub fn psi(
    forest: &ColoredLabelledForest,
    s1: &PartitionS,
    s2: &PartitionS,
) -> Result<(ColoredLabelledForest, PsiCase)> {
    let i = adjacency_swap(s1, s2)?.ok_or(Error::NotAdjacent)?;
    if !forest.in_class(s1) {
        return Err(Error::Partition("forest labels do not respect the source partition".into()));
    }

    let mut trees = forest.to_nodes();
    let (t1, p1) = locate(&trees, i);
    let (t2, p2) = locate(&trees, i + 1);
    let v2_below_v1 = t1 == t2 && p2.len() > p1.len() && p2.starts_with(&p1);
    let v1_below_v2 = t1 == t2 && p1.len() > p2.len() && p1.starts_with(&p2);

    let case = if v2_below_v1 {
        let v1_proper = forest.base().proper_flags()[forest.base().position_of(i).unwrap()];
        if v1_proper {
            PsiCase::Iii
        } else {
            PsiCase::Ii
        }
    } else if v1_below_v2 {
        let v2 = subtree(&trees[t2], &p2);
        let smaller_below = v2.children.iter().filter_map(ColoredNode::min_label).any(|l| l < i);
        if smaller_below {
            PsiCase::Iv
        } else if !v2.color.expect("internal").is_special() {
            PsiCase::V
        } else {
            PsiCase::Vi
        }
    } else {
        PsiCase::I
    };

    if case == PsiCase::Vi {
        let tree = &mut trees[t2];
        let v2_color = tree.at_mut(&p2).color.expect("internal");
        let alpha = match tree.at_mut(&p1).color.expect("internal") {
            Color::Edge(a) => a as usize - 1,
            Color::Special(_) => unreachable!("v1 has no smaller descendant, so it is proper"),
        };
        let beta = p1[p2.len()];
        let below_u = &p1[p2.len() + 1..];

        let mut t1_part = std::mem::take(tree);
        let mut t2_part = cut(&mut t1_part, &p2);
        let mut t3_part = cut(&mut t2_part, &[beta]);
        let mut t4_part = cut(&mut t3_part, below_u);
        let t5_part = cut(&mut t4_part, &[alpha]);

        *t2_part.at_mut(&[beta]) = t5_part;
        *t3_part.at_mut(below_u) = t2_part;
        *t4_part.at_mut(&[alpha]) = t3_part;
        *t1_part.at_mut(&p2) = t4_part;
        *tree = t1_part;

        let (_, new_p2) = locate(std::slice::from_ref(tree), i + 1);
        tree.at_mut(&new_p2).color = Some(Color::Edge(beta as u32 + 1));
        let (_, new_p1) = locate(std::slice::from_ref(tree), i);
        tree.at_mut(&new_p1).color = Some(v2_color);
    }
    swap_labels(&mut trees, i);

    let image = ColoredLabelledForest::from_nodes(&trees, forest.k())?;
    Ok((image, case))
}

fn subtree<'a>(tree: &'a ColoredNode, path: &[usize]) -> &'a ColoredNode {
    path.iter().fold(tree, |node, &c| &node.children[c])
}

/// Composes `ψ` along a walk of pairwise adjacent partitions.
pub fn psi_transport(forest: &ColoredLabelledForest, path: &[PartitionS]) -> Result<ColoredLabelledForest> {
    let first = path.first().ok_or_else(|| Error::Partition("empty partition path".into()))?;
    if !forest.in_class(first) {
        return Err(Error::Partition("forest labels do not respect the first partition".into()));
    }
    path.windows(2).try_fold(forest.clone(), |f, step| Ok(psi(&f, &step[0], &step[1])?.0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::colored::partition_path;

    fn s(classes: &[u32]) -> PartitionS {
        PartitionS::from_classes(classes.to_vec()).unwrap()
    }

    fn forest(json: &str, k: u32) -> ColoredLabelledForest {
        ColoredLabelledForest::from_json(json, k).unwrap()
    }

    #[test]
    fn case_one_disjoint_vertices() {
        let f = forest(
            r#"[{"c":[{"c":[]}],"label":1,"color":{"e":1}},{"c":[{"c":[]},{"c":[]}],"label":2,"color":{"e":2}}]"#,
            0,
        );
        let (g, case) = psi(&f, &s(&[1, 2]), &s(&[2, 1])).unwrap();
        assert_eq!(case, PsiCase::I);
        assert_eq!(g.shape(), f.shape());
        assert_eq!(g.colors(), f.colors());
        assert_eq!(g.labels(), &[2, 1]);
    }

    #[test]
    fn case_three_proper_ancestor() {
        let f = forest(
            r#"[{"c":[{"c":[{"c":[]},{"c":[]}],"label":2,"color":{"e":1}}],"label":1,"color":{"e":1}},{"c":[]}]"#,
            0,
        );
        let (g, case) = psi(&f, &s(&[1, 2]), &s(&[2, 1])).unwrap();
        assert_eq!(case, PsiCase::Iii);
        assert_eq!(g.labels(), &[2, 1]);
        assert_eq!(g.colors(), f.colors());
        assert_eq!(g.base().proper_flags(), vec![false, true]);
        assert!(g.in_class(&s(&[2, 1])));
    }

    #[test]
    fn case_six_surgery_with_u_equal_v1() {
        let f = forest(
            r#"[{"c":[{"c":[{"c":[]}],"label":1,"color":{"e":1}},{"c":[]}],"label":2,"color":{"s":1}},{"c":[]}]"#,
            1,
        );
        let (g, case) = psi(&f, &s(&[1, 2]), &s(&[2, 1])).unwrap();
        assert_eq!(case, PsiCase::Vi);
        let want = forest(
            r#"[{"c":[{"c":[{"c":[]},{"c":[]}],"label":1,"color":{"e":1}}],"label":2,"color":{"s":1}},{"c":[]}]"#,
            1,
        );
        assert_eq!(g, want);
    }

    #[test]
    fn case_six_full_five_way_split() {
        // R(1) -> v2(3, special) -> second child u(4) -> v1(2, color e2) -> second child w(5)
        let leaf = r#"{"c":[]}"#;
        let w = format!(r#"{{"c":[{leaf}],"label":5,"color":{{"e":1}}}}"#);
        let v1 = format!(r#"{{"c":[{leaf},{w},{leaf}],"label":2,"color":{{"e":2}}}}"#);
        let u = format!(r#"{{"c":[{v1}],"label":4,"color":{{"s":1}}}}"#);
        let v2 = format!(r#"{{"c":[{leaf},{u}],"label":3,"color":{{"s":2}}}}"#);
        let f = forest(&format!(r#"[{{"c":[{v2}],"label":1,"color":{{"e":1}}}}]"#), 2);

        let s1 = s(&[1, 3, 2, 1, 1]);
        let s2 = s(&[1, 2, 3, 1, 1]);
        let (g, case) = psi(&f, &s1, &s2).unwrap();
        assert_eq!(case, PsiCase::Vi);

        // T1[v2' <- T4[w' <- T3[v1' <- T2[u' <- T5]]]], v2 recolored by its
        // child slot (2), v1 takes v2's special color, then labels 2 and 3 swap.
        let new_v2 = format!(r#"{{"c":[{leaf},{w}],"label":2,"color":{{"e":2}}}}"#);
        let new_u = format!(r#"{{"c":[{new_v2}],"label":4,"color":{{"s":1}}}}"#);
        let new_v1 = format!(r#"{{"c":[{leaf},{new_u},{leaf}],"label":3,"color":{{"s":2}}}}"#);
        let want = forest(&format!(r#"[{{"c":[{new_v1}],"label":1,"color":{{"e":1}}}}]"#), 2);
        assert_eq!(g, want);
        assert!(g.in_class(&s2));
    }

    #[test]
    fn errors() {
        let f = forest(r#"[{"c":[{"c":[]}],"label":1,"color":{"e":1}},{"c":[{"c":[]},{"c":[]}],"label":2,"color":{"e":2}}]"#, 0);
        assert_eq!(psi(&f, &s(&[1, 2]), &s(&[1, 2])).unwrap_err(), Error::NotAdjacent);
        assert!(psi(&f, &s(&[2, 1]), &s(&[1, 2])).is_err());
        assert!(psi(&f, &s(&[1, 2]), &s(&[1, 1])).is_err());
    }

    #[test]
    fn transport_along_paths() {
        let f = forest(r#"[{"c":[{"c":[]}],"label":1,"color":{"e":1}},{"c":[{"c":[]},{"c":[]}],"label":2,"color":{"e":2}}]"#, 0);
        let (a, b) = (s(&[1, 2]), s(&[2, 1]));
        assert_eq!(psi_transport(&f, &[a.clone()]).unwrap(), f);
        let back = psi_transport(&f, &[a.clone(), b.clone(), a.clone()]).unwrap();
        assert!(back.in_class(&a));
        let g = psi_transport(&f, &partition_path(&a, &b).unwrap()).unwrap();
        assert!(g.in_class(&b));
        assert!(psi_transport(&f, &[a.clone(), a.clone()]).is_err());
        assert!(psi_transport(&f, &[b]).is_err());
    }
}
