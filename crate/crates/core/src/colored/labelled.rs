use std::fmt;

use num_bigint::BigUint;
use num_traits::One;
use serde::{Deserialize, Serialize};

use super::partition::PartitionS;
use crate::error::{Error, Result};
use crate::forest::{InternalVertex, PlaneForest, PlaneTree, VertexRef};

/// A plane forest whose internal vertices carry the labels `1..=n`.
///
/// `labels[i]` belongs to the `i`-th internal vertex in forest preorder.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LabelledForest {
    shape: PlaneForest,
    labels: Vec<u32>,
}

impl LabelledForest {
    pub fn new(shape: PlaneForest, labels: Vec<u32>) -> Result<Self> {
        let n = shape.internal_count();
        if labels.len() != n {
            return Err(Error::Labelling(format!("{} labels for {n} internal vertices", labels.len())));
        }
        let mut seen = vec![false; n];
        for &l in &labels {
            match (l as usize).checked_sub(1).and_then(|i| seen.get_mut(i)) {
                Some(slot) if !*slot => *slot = true,
                _ => return Err(Error::Labelling(format!("labels {labels:?} are not a permutation of 1..={n}"))),
            }
        }
        Ok(LabelledForest { shape, labels })
    }

    pub fn shape(&self) -> &PlaneForest {
        &self.shape
    }

    pub fn labels(&self) -> &[u32] {
        &self.labels
    }

    pub fn internal_count(&self) -> usize {
        self.labels.len()
    }

    /// Preorder index of the vertex carrying `label`.
    pub fn position_of(&self, label: u32) -> Option<usize> {
        self.labels.iter().position(|&l| l == label)
    }

    pub fn proper_flags(&self) -> Vec<bool> {
        proper_flags(&self.shape.internal_vertices(), &self.labels)
    }

    /// A vertex is proper when no strict internal descendant has a smaller label.
    pub fn is_proper(&self, v: &VertexRef) -> Result<bool> {
        let idx = self.shape.internal_index(v)?;
        Ok(self.proper_flags()[idx])
    }
}

/// Properness of every internal vertex, given the preorder layout.
pub(crate) fn proper_flags(layout: &[InternalVertex], labels: &[u32]) -> Vec<bool> {
    (0..layout.len())
        .map(|i| labels[i + 1..i + layout[i].hook].iter().all(|&l| l > labels[i]))
        .collect()
}

/// `Π_{proper} d_v · Π_{improper} (d_v + k)`
pub fn count_colorings(forest: &LabelledForest, k: u32) -> BigUint {
    let layout = forest.shape.internal_vertices();
    proper_flags(&layout, &forest.labels)
        .iter()
        .zip(&layout)
        .map(|(&proper, v)| BigUint::from(v.degree + if proper { 0 } else { k as usize }))
        .fold(BigUint::one(), |acc, x| acc * x)
}

/// Either the color `c_j` tied to the `j`-th edge of the vertex, or the
/// special color `c'_t` shared by all improper vertices.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Color {
    #[serde(rename = "e")]
    Edge(u32),
    #[serde(rename = "s")]
    Special(u32),
}

impl Color {
    pub fn is_special(self) -> bool {
        matches!(self, Color::Special(_))
    }
}

impl fmt::Display for Color {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Color::Edge(j) => write!(f, "c{j}"),
            Color::Special(t) => write!(f, "c'{t}"),
        }
    }
}

/// A labelled forest with a proper `k`-coloring; `colors` runs parallel to
/// the labels.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ColoredLabelledForest {
    base: LabelledForest,
    k: u32,
    colors: Vec<Color>,
}

impl ColoredLabelledForest {
    pub fn new(base: LabelledForest, k: u32, colors: Vec<Color>) -> Result<Self> {
        if colors.len() != base.labels.len() {
            return Err(Error::Coloring(format!(
                "{} colors for {} internal vertices",
                colors.len(),
                base.labels.len()
            )));
        }
        let layout = base.shape.internal_vertices();
        let proper = proper_flags(&layout, &base.labels);
        for (i, &c) in colors.iter().enumerate() {
            let ok = match c {
                Color::Edge(j) => (1..=layout[i].degree as u32).contains(&j),
                Color::Special(t) => !proper[i] && (1..=k).contains(&t),
            };
            if !ok {
                return Err(Error::Coloring(format!(
                    "vertex labelled {} (degree {}, {}) cannot take {c} with k = {k}",
                    base.labels[i],
                    layout[i].degree,
                    if proper[i] { "proper" } else { "improper" },
                )));
            }
        }
        Ok(ColoredLabelledForest { base, k, colors })
    }

    pub(crate) fn new_unchecked(base: LabelledForest, k: u32, colors: Vec<Color>) -> Self {
        ColoredLabelledForest { base, k, colors }
    }

    pub fn base(&self) -> &LabelledForest {
        &self.base
    }

    pub fn shape(&self) -> &PlaneForest {
        &self.base.shape
    }

    pub fn labels(&self) -> &[u32] {
        &self.base.labels
    }

    pub fn colors(&self) -> &[Color] {
        &self.colors
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn color_of(&self, label: u32) -> Option<Color> {
        self.base.position_of(label).map(|i| self.colors[i])
    }

    /// Whether every vertex's label lies in the class of its degree.
    pub fn in_class(&self, s: &PartitionS) -> bool {
        s.len() == self.base.labels.len()
            && self
                .base
                .shape
                .internal_vertices()
                .iter()
                .zip(&self.base.labels)
                .all(|(v, &l)| s.class_of(l) == Some(v.degree as u32))
    }

    /// Whether the smallest label sits in the first tree. Vacuously false
    /// without internal vertices.
    pub fn min_label_in_first_tree(&self) -> bool {
        let layout = self.base.shape.internal_vertices();
        match self.base.labels.iter().enumerate().min_by_key(|(_, &l)| l) {
            Some((i, _)) => layout[i].tree == 0,
            None => false,
        }
    }

    pub fn to_nodes(&self) -> Vec<ColoredNode> {
        fn build(t: &PlaneTree, labels: &[u32], colors: &[Color], next: &mut usize) -> ColoredNode {
            if t.is_leaf() {
                return ColoredNode::leaf();
            }
            let i = *next;
            *next += 1;
            let children = t.children().iter().map(|c| build(c, labels, colors, next)).collect();
            ColoredNode { children, label: Some(labels[i]), color: Some(colors[i]) }
        }
        let mut next = 0;
        self.base
            .shape
            .trees()
            .iter()
            .map(|t| build(t, &self.base.labels, &self.colors, &mut next))
            .collect()
    }

    pub fn from_nodes(nodes: &[ColoredNode], k: u32) -> Result<Self> {
        fn strip(node: &ColoredNode, labels: &mut Vec<u32>, colors: &mut Vec<Color>) -> Result<PlaneTree> {
            match (node.children.is_empty(), node.label, node.color) {
                (true, None, None) => Ok(PlaneTree::leaf()),
                (false, Some(l), Some(c)) => {
                    labels.push(l);
                    colors.push(c);
                    let children = node
                        .children
                        .iter()
                        .map(|child| strip(child, labels, colors))
                        .collect::<Result<Vec<_>>>()?;
                    Ok(PlaneTree::node(children))
                }
                (true, _, _) => Err(Error::Labelling("a leaf carries a label or color".into())),
                (false, _, _) => Err(Error::Labelling("an internal vertex lacks a label or color".into())),
            }
        }
        let (mut labels, mut colors) = (Vec::new(), Vec::new());
        let trees = nodes
            .iter()
            .map(|n| strip(n, &mut labels, &mut colors))
            .collect::<Result<Vec<_>>>()?;
        let base = LabelledForest::new(PlaneForest::new(trees)?, labels)?;
        ColoredLabelledForest::new(base, k, colors)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_nodes()).expect("node serialization cannot fail")
    }

    pub fn from_json(text: &str, k: u32) -> Result<Self> {
        let nodes: Vec<ColoredNode> =
            serde_json::from_str(text).map_err(|e| Error::Parse(format!("colored forest: {e}")))?;
        ColoredLabelledForest::from_nodes(&nodes, k)
    }
}

/// Explicit tree form of a colored labelled forest, used for JSON and for
/// the tree surgery in the bijections. `label` and `color` are present
/// exactly on internal vertices.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ColoredNode {
    #[serde(rename = "c")]
    pub children: Vec<ColoredNode>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub label: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub color: Option<Color>,
}

impl ColoredNode {
    pub fn leaf() -> Self {
        ColoredNode::default()
    }

    pub fn internal(label: u32, color: Color, children: Vec<ColoredNode>) -> Self {
        ColoredNode { children, label: Some(label), color: Some(color) }
    }

    /// Whether some strict descendant carries `label`.
    pub fn contains_label(&self, label: u32) -> bool {
        self.children.iter().any(|c| c.label == Some(label) || c.contains_label(label))
    }

    pub fn min_label(&self) -> Option<u32> {
        self.children.iter().filter_map(ColoredNode::min_label).chain(self.label).min()
    }

    /// 0-based child positions leading from this node to the node with `label`.
    pub fn path_to(&self, label: u32) -> Option<Vec<usize>> {
        if self.label == Some(label) {
            return Some(Vec::new());
        }
        self.children.iter().enumerate().find_map(|(i, c)| {
            c.path_to(label).map(|mut p| {
                p.insert(0, i);
                p
            })
        })
    }

    pub fn at_mut(&mut self, path: &[usize]) -> &mut ColoredNode {
        path.iter().fold(self, |node, &i| &mut node.children[i])
    }

    pub fn relabel(&mut self, f: &impl Fn(u32) -> u32) {
        if let Some(l) = self.label.as_mut() {
            *l = f(*l);
        }
        for c in &mut self.children {
            c.relabel(f);
        }
    }
}
