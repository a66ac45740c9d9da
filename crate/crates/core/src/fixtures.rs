//! Small hand-built instances shared by tests, docs and golden files.
//!
//! Vertex numbering is fixed so expected edge sets can be written down:
//! the root is always vertex 0 and the remaining vertices are numbered in
//! the order they are listed in each constructor.

use std::collections::BTreeSet;

use crate::committee_tree::CommitteeTree;
use crate::matroid::MatroidTreePair;

fn tree(
    parent: Vec<Option<usize>>,
    blue: &[usize],
    red: &[usize],
    open: &[usize],
) -> CommitteeTree {
    CommitteeTree::new(
        parent,
        blue.iter().copied().collect(),
        red.iter().copied().collect(),
        open.iter().copied().collect(),
    )
    .expect("fixture tree is valid")
}

/// Root 0 with a blue leaf 1 and a red leaf 2.
pub fn two_leaf_tie() -> CommitteeTree {
    tree(vec![None, Some(0), Some(0)], &[1], &[2], &[])
}

/// Root 0; committees 1 (c1) and 2 (c2); blue leaves 3,4 under c1 and red
/// leaves 5,6 under c2.
pub fn two_committees() -> CommitteeTree {
    tree(
        vec![None, Some(0), Some(0), Some(1), Some(1), Some(2), Some(2)],
        &[3, 4],
        &[5, 6],
        &[],
    )
}

/// Root 0 with blue leaves 1,2 and a red leaf 3, all children of the root.
pub fn blue_majority_star() -> CommitteeTree {
    tree(vec![None, Some(0), Some(0), Some(0)], &[1, 2], &[3], &[])
}

/// Root 0; committee 1 (c1); blue leaf 2 and red leaves 3,4 under c1.
pub fn red_majority_committee() -> CommitteeTree {
    tree(
        vec![None, Some(0), Some(1), Some(1), Some(1)],
        &[2],
        &[3, 4],
        &[],
    )
}

/// Root 0; committee 1 (c1); blue leaves 2,3 and red leaf 4 under c1.
pub fn blue_majority_committee() -> CommitteeTree {
    tree(
        vec![None, Some(0), Some(1), Some(1), Some(1)],
        &[2, 3],
        &[4],
        &[],
    )
}

/// Truncated path: root 0, chain 0 <- 1 (v1) <- 2 (v2) with v2 marked open,
/// and a blue leaf 3 under v1.
pub fn open_path_with_blue() -> CommitteeTree {
    tree(vec![None, Some(0), Some(1), Some(1)], &[3], &[], &[2])
}

/// Two-node pair: node 0 on {a, g}, node 1 on {g, b}, all ranks 1, dummy g.
pub fn two_node_rank_one_pair() -> MatroidTreePair {
    MatroidTreePair::build(
        vec![
            (vec!["a", "g"], 1, 1),
            (vec!["g", "b"], 1, 1),
        ],
        vec![(0, 1, "g")],
    )
    .expect("fixture pair is valid")
}

/// Single node on {x1, x2, x3} with M of rank 2 and N of rank 1.
pub fn single_node_rank_two_one() -> MatroidTreePair {
    MatroidTreePair::build(
        vec![(vec!["x1", "x2", "x3"], 2, 1)],
        vec![],
    )
    .expect("fixture pair is valid")
}

/// Leaf sets as `BTreeSet` literals, mostly for test bodies.
pub fn vset(vs: &[usize]) -> BTreeSet<usize> {
    vs.iter().copied().collect()
}
