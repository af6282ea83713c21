//! Plane trees and plane forests.
//!
//! A tree is the ordered list of its subtrees; a leaf is the empty list. The
//! JSON encoding mirrors that directly: `[[[],[]]]` is a forest with one tree
//! whose root has two leaf children.

use serde::{Deserialize, Serialize};

use crate::degree::DegreeSequence;
use crate::error::{Error, Result};

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct PlaneTree {
    children: Vec<PlaneTree>,
}

impl PlaneTree {
    pub fn leaf() -> Self {
        PlaneTree::default()
    }

    pub fn node(children: Vec<PlaneTree>) -> Self {
        PlaneTree { children }
    }

    pub fn children(&self) -> &[PlaneTree] {
        &self.children
    }

    pub fn degree(&self) -> usize {
        self.children.len()
    }

    pub fn is_leaf(&self) -> bool {
        self.children.is_empty()
    }

    /// Internal vertices of the subtree, the root included when it is internal.
    pub fn internal_count(&self) -> usize {
        if self.is_leaf() {
            0
        } else {
            1 + self.children.iter().map(PlaneTree::internal_count).sum::<usize>()
        }
    }

    pub fn vertex_count(&self) -> usize {
        1 + self.children.iter().map(PlaneTree::vertex_count).sum::<usize>()
    }

    fn push_preorder(&self, out: &mut Vec<usize>) {
        out.push(self.degree());
        for child in &self.children {
            child.push_preorder(out);
        }
    }

    fn count_degrees(&self, counts: &mut Vec<u64>) {
        let d = self.degree();
        if counts.len() <= d {
            counts.resize(d + 1, 0);
        }
        counts[d] += 1;
        for child in &self.children {
            child.count_degrees(counts);
        }
    }
}

/// Position of a vertex: 1-based tree index and 1-based child positions
/// walked from that tree's root.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct VertexRef {
    pub tree: usize,
    pub path: Vec<usize>,
}

impl VertexRef {
    pub fn root(tree: usize) -> Self {
        VertexRef { tree, path: Vec::new() }
    }

    pub fn child(mut self, position: usize) -> Self {
        self.path.push(position);
        self
    }
}

/// One internal vertex seen in forest preorder.
///
/// The internal vertices of a subtree occupy a contiguous run of the
/// internal-only preorder, so `hook` doubles as the length of that run.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct InternalVertex {
    pub degree: usize,
    pub hook: usize,
    /// 0-based index of the containing tree.
    pub tree: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<PlaneTree>", into = "Vec<PlaneTree>")]
pub struct PlaneForest {
    trees: Vec<PlaneTree>,
}

impl TryFrom<Vec<PlaneTree>> for PlaneForest {
    type Error = Error;

    fn try_from(trees: Vec<PlaneTree>) -> Result<Self> {
        PlaneForest::new(trees)
    }
}

impl From<PlaneForest> for Vec<PlaneTree> {
    fn from(forest: PlaneForest) -> Self {
        forest.trees
    }
}

impl PlaneForest {
    pub fn new(trees: Vec<PlaneTree>) -> Result<Self> {
        if trees.is_empty() {
            return Err(Error::InvalidType("the empty forest is not a valid forest".into()));
        }
        Ok(PlaneForest { trees })
    }

    pub fn trees(&self) -> &[PlaneTree] {
        &self.trees
    }

    pub fn into_trees(self) -> Vec<PlaneTree> {
        self.trees
    }

    pub fn internal_count(&self) -> usize {
        self.trees.iter().map(PlaneTree::internal_count).sum()
    }

    pub fn degree_sequence(&self) -> DegreeSequence {
        let mut counts = Vec::new();
        for tree in &self.trees {
            tree.count_degrees(&mut counts);
        }
        DegreeSequence::new(counts).expect("a nonempty forest always has a realizable type")
    }

    /// Degrees of all vertices in preorder, tree after tree.
    pub fn preorder_degrees(&self) -> Vec<usize> {
        let mut out = Vec::new();
        for tree in &self.trees {
            tree.push_preorder(&mut out);
        }
        out
    }

    /// Rebuilds a forest from its preorder degree word. Returns `None` unless
    /// the word splits exactly into complete trees.
    pub fn from_preorder(word: &[usize]) -> Option<PlaneForest> {
        fn take(word: &[usize], pos: &mut usize) -> Option<PlaneTree> {
            let d = *word.get(*pos)?;
            *pos += 1;
            let children = (0..d).map(|_| take(word, pos)).collect::<Option<Vec<_>>>()?;
            Some(PlaneTree::node(children))
        }
        let mut pos = 0;
        let mut trees = Vec::new();
        while pos < word.len() {
            trees.push(take(word, &mut pos)?);
        }
        PlaneForest::new(trees).ok()
    }

    pub fn vertex(&self, v: &VertexRef) -> Result<&PlaneTree> {
        let mut node = v
            .tree
            .checked_sub(1)
            .and_then(|t| self.trees.get(t))
            .ok_or_else(|| Error::BadVertex(format!("no tree {}", v.tree)))?;
        for &step in &v.path {
            node = step
                .checked_sub(1)
                .and_then(|c| node.children.get(c))
                .ok_or_else(|| Error::BadVertex(format!("no child {step} along {:?}", v.path)))?;
        }
        Ok(node)
    }

    /// Internal vertices of the subtree rooted at `v`, counting `v`.
    pub fn hook_length(&self, v: &VertexRef) -> Result<usize> {
        let node = self.vertex(v)?;
        if node.is_leaf() {
            return Err(Error::LeafVertex);
        }
        Ok(node.internal_count())
    }

    /// Position of an internal vertex in the internal-only preorder.
    pub fn internal_index(&self, v: &VertexRef) -> Result<usize> {
        if self.vertex(v)?.is_leaf() {
            return Err(Error::LeafVertex);
        }
        let t = v.tree - 1;
        let mut index: usize = self.trees[..t].iter().map(PlaneTree::internal_count).sum();
        let mut node = &self.trees[t];
        for &step in &v.path {
            index += 1 + node.children[..step - 1].iter().map(PlaneTree::internal_count).sum::<usize>();
            node = &node.children[step - 1];
        }
        Ok(index)
    }

    /// All internal vertices in preorder with degree, hook length and tree.
    pub fn internal_vertices(&self) -> Vec<InternalVertex> {
        fn walk(node: &PlaneTree, tree: usize, out: &mut Vec<InternalVertex>) -> usize {
            if node.is_leaf() {
                return 0;
            }
            let slot = out.len();
            out.push(InternalVertex { degree: node.degree(), hook: 0, tree });
            let hook = 1 + node.children.iter().map(|c| walk(c, tree, out)).sum::<usize>();
            out[slot].hook = hook;
            hook
        }
        let mut out = Vec::new();
        for (t, tree) in self.trees.iter().enumerate() {
            walk(tree, t, &mut out);
        }
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("forest serialization cannot fail")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(format!("forest: {e}")))
    }
}

pub fn degree_sequence_of(forest: &PlaneForest) -> DegreeSequence {
    forest.degree_sequence()
}

pub fn hook_length(forest: &PlaneForest, v: &VertexRef) -> Result<usize> {
    forest.hook_length(v)
}

pub fn serialize_forest(forest: &PlaneForest) -> String {
    forest.to_json()
}

pub fn parse_forest(text: &str) -> Result<PlaneForest> {
    PlaneForest::from_json(text)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn leaf() -> PlaneTree {
        PlaneTree::leaf()
    }

    fn node(children: Vec<PlaneTree>) -> PlaneTree {
        PlaneTree::node(children)
    }

    #[test]
    fn degree_sequences_by_hand() {
        let single = PlaneForest::new(vec![leaf()]).unwrap();
        let r = single.degree_sequence();
        assert_eq!((r.leaves(), r.internal(), r.trees()), (1, 0, 1));

        let chain = PlaneForest::new(vec![node(vec![node(vec![leaf(), leaf()])])]).unwrap();
        let r = chain.degree_sequence();
        assert_eq!(r.counts(), &[2, 1, 1]);
        assert_eq!((r.internal(), r.trees()), (2, 1));

        let two = PlaneForest::new(vec![node(vec![leaf()]), node(vec![leaf(), leaf()])]).unwrap();
        let r = two.degree_sequence();
        assert_eq!(r.counts(), &[3, 1, 1]);
        assert_eq!((r.internal(), r.trees()), (2, 2));
    }

    #[test]
    fn hook_lengths_count_internal_vertices_only() {
        let chain = PlaneForest::new(vec![node(vec![node(vec![leaf(), leaf()])])]).unwrap();
        assert_eq!(chain.hook_length(&VertexRef::root(1)).unwrap(), 2);
        assert_eq!(chain.hook_length(&VertexRef::root(1).child(1)).unwrap(), 1);

        let cherry = PlaneForest::new(vec![node(vec![leaf(), leaf()])]).unwrap();
        assert_eq!(cherry.hook_length(&VertexRef::root(1)).unwrap(), 1);
        assert_eq!(cherry.hook_length(&VertexRef::root(1).child(2)), Err(Error::LeafVertex));
        assert!(matches!(cherry.hook_length(&VertexRef::root(2)), Err(Error::BadVertex(_))));
        assert!(matches!(
            cherry.hook_length(&VertexRef::root(1).child(3)),
            Err(Error::BadVertex(_))
        ));
    }

    #[test]
    fn internal_vertex_layout_matches_hook_lengths() {
        let f = PlaneForest::from_json("[[[[],[]],[]],[],[[]]]").unwrap();
        let layout = f.internal_vertices();
        let summary: Vec<_> = layout.iter().map(|v| (v.degree, v.hook, v.tree)).collect();
        assert_eq!(summary, vec![(2, 2, 0), (2, 1, 0), (1, 1, 2)]);
        assert_eq!(f.internal_index(&VertexRef::root(1)).unwrap(), 0);
        assert_eq!(f.internal_index(&VertexRef::root(1).child(1)).unwrap(), 1);
        assert_eq!(f.internal_index(&VertexRef::root(3)).unwrap(), 2);
        assert_eq!(f.internal_index(&VertexRef::root(2)), Err(Error::LeafVertex));
    }

    #[test]
    fn json_encoding() {
        let single = PlaneForest::from_json("[[ ]]").unwrap();
        assert_eq!(single, PlaneForest::new(vec![leaf()]).unwrap());
        assert_eq!(single.to_json(), "[[]]");

        let chain = PlaneForest::from_json("[[[ [],[] ]]]").unwrap();
        assert_eq!(chain, PlaneForest::new(vec![node(vec![node(vec![leaf(), leaf()])])]).unwrap());
        assert_eq!(chain.to_json(), "[[[[],[]]]]");

        let err = PlaneForest::from_json("[[[]],").unwrap_err();
        assert!(matches!(err, Error::Parse(ref m) if m.contains("column")), "{err}");
        assert!(PlaneForest::from_json("[]").is_err());
        assert!(PlaneForest::from_json("[[1]]").is_err());
    }

    #[test]
    fn preorder_word_roundtrip() {
        let f = PlaneForest::from_json("[[[[],[]],[]],[],[[]]]").unwrap();
        let word = f.preorder_degrees();
        assert_eq!(word, vec![2, 2, 0, 0, 0, 0, 1, 0]);
        assert_eq!(PlaneForest::from_preorder(&word), Some(f));
        assert_eq!(PlaneForest::from_preorder(&[2, 0]), None);
        assert_eq!(PlaneForest::from_preorder(&[]), None);
    }
}
