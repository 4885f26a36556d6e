//! Text renderings of search trees.

use std::fmt::Write;

use sylvkit_core::bst::{NodeRef, SearchTree, Strictness};

const ABSENT: &str = "·";

/// The tree turned a quarter left: the right subtree is printed above its
/// root, the left one below, four columns per level. A node with exactly
/// one child shows `·` in place of the missing one.
pub fn ascii<S: Strictness>(tree: &SearchTree<S>) -> String {
    let mut out = String::new();
    match tree.root() {
        None => out.push_str("(empty)\n"),
        Some(root) => ascii_node(root, 0, &mut out),
    }
    out
}

fn ascii_node<S: Strictness>(node: NodeRef<'_, S>, depth: usize, out: &mut String) {
    let (left, right) = (node.left(), node.right());
    let lone = left.is_some() != right.is_some();
    match right {
        Some(r) => ascii_node(r, depth + 1, out),
        None if lone => placeholder(depth + 1, out),
        None => {}
    }
    let _ = writeln!(out, "{}{}", "    ".repeat(depth), node.label());
    match left {
        Some(l) => ascii_node(l, depth + 1, out),
        None if lone => placeholder(depth + 1, out),
        None => {}
    }
}

fn placeholder(depth: usize, out: &mut String) {
    let _ = writeln!(out, "{}{ABSENT}", "    ".repeat(depth));
}

/// Graphviz source. Nodes are `n0, n1, ...` in prefix order; a missing
/// sibling of a lone child is an invisible point so that left and right
/// children keep their sides.
pub fn dot<S: Strictness>(tree: &SearchTree<S>, name: &str) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "digraph {name} {{");
    let _ = writeln!(out, "  node [shape=circle];");
    if let Some(root) = tree.root() {
        let mut next = 0;
        dot_node(root, &mut next, &mut out);
    }
    out.push_str("}\n");
    out
}

fn dot_node<S: Strictness>(node: NodeRef<'_, S>, next: &mut usize, out: &mut String) -> usize {
    let id = *next;
    *next += 1;
    let _ = writeln!(out, "  n{id} [label=\"{}\"];", node.label());
    let (left, right) = (node.left(), node.right());
    let lone = left.is_some() != right.is_some();
    for (child, side) in [(left, 'l'), (right, 'r')] {
        match child {
            Some(c) => {
                let cid = dot_node(c, next, out);
                let _ = writeln!(out, "  n{id} -> n{cid};");
            }
            None if lone => {
                let _ = writeln!(out, "  n{id}{side} [shape=point, style=invis];");
                let _ = writeln!(out, "  n{id} -> n{id}{side} [style=invis];");
            }
            None => {}
        }
    }
    id
}

#[cfg(test)]
mod tests {
    use super::*;
    use sylvkit_core::bst::{p_sylv, p_sylvh};

    #[test]
    fn single_child_shapes_differ() {
        let a = ascii(&p_sylv(&"12".parse().unwrap()));
        let b = ascii(&p_sylv(&"21".parse().unwrap()));
        assert_eq!(a, "    ·\n2\n    1\n");
        assert_eq!(b, "    2\n1\n    ·\n");
        assert_ne!(dot(&p_sylv(&"12".parse().unwrap()), "t"), dot(&p_sylv(&"21".parse().unwrap()), "t"));
    }

    #[test]
    fn dot_shape() {
        let d = dot(&p_sylvh(&"21".parse().unwrap()), "sylvh");
        assert_eq!(
            d,
            "digraph sylvh {\n  node [shape=circle];\n  n0 [label=\"2\"];\n  n1 [label=\"1\"];\n  n0 -> n1;\n  n0r [shape=point, style=invis];\n  n0 -> n0r [style=invis];\n}\n"
        );
        assert_eq!(ascii(&p_sylv(&"".parse().unwrap())), "(empty)\n");
    }
}
