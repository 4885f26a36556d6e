//! Right- and left-strict binary search trees built by leaf insertion.
//!
//! A right-strict tree keeps labels `≤` the node on the left and `>` on the
//! right; a left-strict tree keeps `<` on the left and `≥` on the right. The
//! sylvester class of a word is its right-strict tree under right-to-left
//! insertion, the #-sylvester class its left-strict tree under left-to-right
//! insertion.

use alloc::vec::Vec;
use core::fmt;
use core::marker::PhantomData;

use crate::error::Error;
use crate::word::{Content, Letter, LetterWord};

mod sealed {
    pub trait Sealed {}
}

/// Which side of a node receives letters equal to its label.
pub trait Strictness: sealed::Sealed + Copy + fmt::Debug {
    /// Whether `a` descends into the right subtree of a node labelled `x`.
    fn goes_right(a: Letter, x: Letter) -> bool;
}

#[derive(Clone, Copy, Debug)]
pub struct RightStrict;

#[derive(Clone, Copy, Debug)]
pub struct LeftStrict;

impl sealed::Sealed for RightStrict {}
impl sealed::Sealed for LeftStrict {}

impl Strictness for RightStrict {
    fn goes_right(a: Letter, x: Letter) -> bool {
        a > x
    }
}

impl Strictness for LeftStrict {
    fn goes_right(a: Letter, x: Letter) -> bool {
        a >= x
    }
}

#[derive(Clone, Copy, Debug)]
struct Node {
    label: Letter,
    left: Option<usize>,
    right: Option<usize>,
}

/// A binary search tree stored as an arena; node 0 is the root.
///
/// Equality is structural: same shape, same labels.
#[derive(Clone, Debug)]
pub struct SearchTree<S> {
    nodes: Vec<Node>,
    _strictness: PhantomData<S>,
}

pub type RightStrictBst = SearchTree<RightStrict>;
pub type LeftStrictBst = SearchTree<LeftStrict>;

/// Traversal orders for [`SearchTree::reading`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Traversal {
    Postfix,
    Prefix,
    Infix,
}

impl<S: Strictness> Default for SearchTree<S> {
    fn default() -> Self {
        Self::new()
    }
}

impl<S: Strictness> SearchTree<S> {
    pub const fn new() -> Self {
        SearchTree {
            nodes: Vec::new(),
            _strictness: PhantomData,
        }
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn root(&self) -> Option<NodeRef<'_, S>> {
        (!self.nodes.is_empty()).then_some(NodeRef { tree: self, id: 0 })
    }

    /// A copy of the tree with `a` inserted as a new leaf.
    pub fn inserted(&self, a: Letter) -> Self {
        let mut t = self.clone();
        t.insert_in_place(a);
        t
    }

    fn insert_in_place(&mut self, a: Letter) {
        let id = self.nodes.len();
        self.nodes.push(Node {
            label: a,
            left: None,
            right: None,
        });
        if id == 0 {
            return;
        }
        let mut cur = 0;
        loop {
            let node = &mut self.nodes[cur];
            let slot = if S::goes_right(a, node.label) {
                &mut node.right
            } else {
                &mut node.left
            };
            match *slot {
                Some(next) => cur = next,
                None => {
                    *slot = Some(id);
                    return;
                }
            }
        }
    }

    /// Node ids in prefix order.
    fn prefix_ids(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.nodes.len());
        let mut stack = Vec::new();
        if !self.nodes.is_empty() {
            stack.push(0);
        }
        while let Some(id) = stack.pop() {
            out.push(id);
            let n = self.nodes[id];
            if let Some(r) = n.right {
                stack.push(r);
            }
            if let Some(l) = n.left {
                stack.push(l);
            }
        }
        out
    }

    fn postfix_ids(&self) -> Vec<usize> {
        // Reverse of the root-right-left preorder.
        let mut out = Vec::with_capacity(self.nodes.len());
        let mut stack = Vec::new();
        if !self.nodes.is_empty() {
            stack.push(0);
        }
        while let Some(id) = stack.pop() {
            out.push(id);
            let n = self.nodes[id];
            if let Some(l) = n.left {
                stack.push(l);
            }
            if let Some(r) = n.right {
                stack.push(r);
            }
        }
        out.reverse();
        out
    }

    fn infix_ids(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.nodes.len());
        let mut stack = Vec::new();
        let mut cur = (!self.nodes.is_empty()).then_some(0);
        loop {
            while let Some(id) = cur {
                stack.push(id);
                cur = self.nodes[id].left;
            }
            let Some(id) = stack.pop() else { break };
            out.push(id);
            cur = self.nodes[id].right;
        }
        out
    }

    pub fn reading(&self, order: Traversal) -> LetterWord {
        let ids = match order {
            Traversal::Postfix => self.postfix_ids(),
            Traversal::Prefix => self.prefix_ids(),
            Traversal::Infix => self.infix_ids(),
        };
        ids.into_iter().map(|id| self.nodes[id].label).collect()
    }

    pub fn content(&self) -> Content<Letter> {
        self.reading(Traversal::Prefix).content()
    }

    /// Infix record of empty subtrees (`1` for an empty left subtree, `0` for
    /// an empty right one) with the first and last symbols dropped. The empty
    /// tree has the empty canopy.
    pub fn canopy(&self) -> Canopy {
        let mut bits = Vec::with_capacity(self.nodes.len() + 1);
        for id in self.infix_ids() {
            let n = self.nodes[id];
            if n.left.is_none() {
                bits.push(true);
            }
            if n.right.is_none() {
                bits.push(false);
            }
        }
        if bits.len() >= 2 {
            bits.pop();
            bits.remove(0);
        } else {
            bits.clear();
        }
        Canopy(bits)
    }

    /// Labels of the strict ancestors of the topmost node labelled `a`, root first.
    pub fn ancestors_of_topmost(&self, a: Letter) -> Result<Vec<Letter>, Error> {
        // All nodes labelled `a` were placed along the search path of `a`.
        let mut path = Vec::new();
        let mut cur = self.root().map(|r| r.id);
        while let Some(id) = cur {
            let n = self.nodes[id];
            if n.label == a {
                return Ok(path);
            }
            path.push(n.label);
            cur = if S::goes_right(a, n.label) {
                n.right
            } else {
                n.left
            };
        }
        Err(Error::LetterAbsent(a))
    }
}

impl<S: Strictness> SearchTree<S> {
    /// Full-traversal check of the search-tree invariant: every node is
    /// compared against every ancestor it descends from.
    pub fn is_valid(&self) -> bool {
        let mut stack: Vec<(usize, Vec<(Letter, bool)>)> = Vec::new();
        if !self.nodes.is_empty() {
            stack.push((0, Vec::new()));
        }
        while let Some((id, anc)) = stack.pop() {
            let n = self.nodes[id];
            if anc
                .iter()
                .any(|&(x, went_right)| S::goes_right(n.label, x) != went_right)
            {
                return false;
            }
            if let Some(l) = n.left {
                let mut a = anc.clone();
                a.push((n.label, false));
                stack.push((l, a));
            }
            if let Some(r) = n.right {
                let mut a = anc;
                a.push((n.label, true));
                stack.push((r, a));
            }
        }
        true
    }

    /// Whether, for each label, all nodes carrying it lie on one root-to-leaf path.
    pub fn labels_on_single_paths(&self) -> bool {
        // Parent pointers, then check pairwise ancestry among equal labels.
        let mut parent = alloc::vec![usize::MAX; self.nodes.len()];
        for (id, n) in self.nodes.iter().enumerate() {
            for c in [n.left, n.right].into_iter().flatten() {
                parent[c] = id;
            }
        }
        let is_ancestor = |a: usize, mut d: usize| {
            while d != usize::MAX {
                if d == a {
                    return true;
                }
                d = parent[d];
            }
            false
        };
        for i in 0..self.nodes.len() {
            for j in i + 1..self.nodes.len() {
                if self.nodes[i].label == self.nodes[j].label
                    && !is_ancestor(i, j)
                    && !is_ancestor(j, i)
                {
                    return false;
                }
            }
        }
        true
    }
}

impl<S: Strictness> PartialEq for SearchTree<S> {
    fn eq(&self, other: &Self) -> bool {
        if self.nodes.len() != other.nodes.len() {
            return false;
        }
        let mut stack = Vec::new();
        if !self.nodes.is_empty() {
            stack.push((0, 0));
        }
        while let Some((i, j)) = stack.pop() {
            let (a, b) = (self.nodes[i], other.nodes[j]);
            if a.label != b.label {
                return false;
            }
            for (x, y) in [(a.left, b.left), (a.right, b.right)] {
                match (x, y) {
                    (Some(x), Some(y)) => stack.push((x, y)),
                    (None, None) => {}
                    _ => return false,
                }
            }
        }
        true
    }
}

impl<S: Strictness> Eq for SearchTree<S> {}

/// Borrowed view of one node, for walking a tree from the outside.
#[derive(Clone, Copy, Debug)]
pub struct NodeRef<'a, S> {
    tree: &'a SearchTree<S>,
    id: usize,
}

impl<'a, S: Strictness> NodeRef<'a, S> {
    pub fn label(&self) -> Letter {
        self.tree.nodes[self.id].label
    }

    pub fn left(&self) -> Option<NodeRef<'a, S>> {
        self.tree.nodes[self.id].left.map(|id| NodeRef {
            tree: self.tree,
            id,
        })
    }

    pub fn right(&self) -> Option<NodeRef<'a, S>> {
        self.tree.nodes[self.id].right.map(|id| NodeRef {
            tree: self.tree,
            id,
        })
    }
}

/// Canopy bit string; `true` is `1`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Canopy(pub Vec<bool>);

impl Canopy {
    pub fn is_complement_of(&self, other: &Canopy) -> bool {
        self.0.len() == other.0.len() && self.0.iter().zip(&other.0).all(|(a, b)| a != b)
    }
}

impl fmt::Display for Canopy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("ε");
        }
        for &b in &self.0 {
            f.write_str(if b { "1" } else { "0" })?;
        }
        Ok(())
    }
}

/// Right-strict leaf insertion.
pub fn insert_right(tree: &RightStrictBst, a: Letter) -> RightStrictBst {
    tree.inserted(a)
}

/// Left-strict leaf insertion.
pub fn insert_left(tree: &LeftStrictBst, a: Letter) -> LeftStrictBst {
    tree.inserted(a)
}

/// Right-strict tree of `w`, inserting its letters from right to left.
pub fn p_sylv(w: &LetterWord) -> RightStrictBst {
    let mut t = RightStrictBst::new();
    t.nodes.reserve(w.len());
    for &a in w.as_slice().iter().rev() {
        t.insert_in_place(a);
    }
    t
}

/// Left-strict tree of `w`, inserting its letters from left to right.
pub fn p_sylvh(w: &LetterWord) -> LeftStrictBst {
    let mut t = LeftStrictBst::new();
    t.nodes.reserve(w.len());
    for &a in w {
        t.insert_in_place(a);
    }
    t
}

/// A left-strict and a right-strict tree sharing content.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwinPair {
    pub left_tree: LeftStrictBst,
    pub right_tree: RightStrictBst,
}

impl TwinPair {
    pub fn is_twin(&self) -> bool {
        is_twin(&self.left_tree, &self.right_tree)
    }
}

pub fn p_baxt(w: &LetterWord) -> TwinPair {
    TwinPair {
        left_tree: p_sylvh(w),
        right_tree: p_sylv(w),
    }
}

/// Equal content and complementary canopies.
pub fn is_twin(left: &LeftStrictBst, right: &RightStrictBst) -> bool {
    left.content() == right.content() && left.canopy().is_complement_of(&right.canopy())
}
