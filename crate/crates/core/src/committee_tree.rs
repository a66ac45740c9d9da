//! Rooted committee trees, edge sets, accumulation arithmetic, flows and
//! the deterministic voting oracle.
//!
//! A committee tree is a rooted tree directed towards its root. Leaves (in
//! the sense of "no incoming edges") may belong to the blue party, the red
//! party, or neither; internal vertices are committees. Because every
//! non-root vertex has exactly one outgoing edge, an edge is identified
//! with its source vertex, which gives edge sets a canonical representation.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

pub type Vertex = usize;

/// One of the two voting parties.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Party {
    Blue,
    Red,
}

impl Party {
    pub fn opposite(self) -> Party {
        match self {
            Party::Blue => Party::Red,
            Party::Red => Party::Blue,
        }
    }
}

impl fmt::Display for Party {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Party::Blue => write!(f, "Blue"),
            Party::Red => write!(f, "Red"),
        }
    }
}

/// A set of tree edges, stored canonically as the set of source vertices
/// (edge `v -> parent(v)` is identified by `v`). Two edge sets are equal
/// iff their source sets are equal.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EdgeSet(BTreeSet<Vertex>);

impl EdgeSet {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_sources<I: IntoIterator<Item = Vertex>>(sources: I) -> Self {
        EdgeSet(sources.into_iter().collect())
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.0.contains(&v)
    }

    pub fn insert(&mut self, v: Vertex) -> bool {
        self.0.insert(v)
    }

    pub fn remove(&mut self, v: Vertex) -> bool {
        self.0.remove(&v)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.0.iter().copied()
    }

    pub fn is_subset(&self, other: &EdgeSet) -> bool {
        self.0.is_subset(&other.0)
    }

    pub fn union(&self, other: &EdgeSet) -> EdgeSet {
        EdgeSet(self.0.union(&other.0).copied().collect())
    }

    pub fn difference(&self, other: &EdgeSet) -> EdgeSet {
        EdgeSet(self.0.difference(&other.0).copied().collect())
    }

    pub fn intersection(&self, other: &EdgeSet) -> EdgeSet {
        EdgeSet(self.0.intersection(&other.0).copied().collect())
    }

    /// Edges whose source lies in the given vertex set.
    pub fn restricted_to(&self, vertices: &BTreeSet<Vertex>) -> EdgeSet {
        EdgeSet(self.0.iter().filter(|v| vertices.contains(v)).copied().collect())
    }
}

impl FromIterator<Vertex> for EdgeSet {
    fn from_iter<I: IntoIterator<Item = Vertex>>(iter: I) -> Self {
        EdgeSet(iter.into_iter().collect())
    }
}

impl fmt::Display for EdgeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for v in &self.0 {
            if !first {
                write!(f, " ")?;
            }
            write!(f, "{v}")?;
            first = false;
        }
        Ok(())
    }
}

impl FromStr for EdgeSet {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut set = BTreeSet::new();
        for tok in s.split_whitespace() {
            let v: Vertex = tok
                .parse()
                .map_err(|_| Error::Input(format!("bad vertex id `{tok}` in edge set")))?;
            set.insert(v);
        }
        Ok(EdgeSet(set))
    }
}

/// Result of the deterministic vote.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VoteResult {
    Blue,
    Tie,
    Red,
}

impl fmt::Display for VoteResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VoteResult::Blue => write!(f, "Blue"),
            VoteResult::Tie => write!(f, "Tie"),
            VoteResult::Red => write!(f, "Red"),
        }
    }
}

/// Vote outcome with the per-vertex margins (sum of sent votes at each
/// committee; zero at leaves).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VoteOutcome {
    pub margin: Vec<i64>,
    pub result: VoteResult,
}

/// A rooted tree directed towards its root, with disjoint blue/red leaf
/// parties and optional open-frontier marks for truncations of infinite
/// trees. Immutable after construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CommitteeTree {
    parent: Vec<Option<Vertex>>,
    children: Vec<Vec<Vertex>>,
    depth: Vec<usize>,
    root: Vertex,
    blue: BTreeSet<Vertex>,
    red: BTreeSet<Vertex>,
    open: BTreeSet<Vertex>,
}

impl CommitteeTree {
    /// Builds and validates a tree. Vertex ids are dense `0..n`; exactly one
    /// entry of `parent` must be `None` (the root). Blue, red and open marks
    /// are only allowed on leaves, must be mutually disjoint, and the root
    /// may not belong to either party.
    pub fn new(
        parent: Vec<Option<Vertex>>,
        blue: BTreeSet<Vertex>,
        red: BTreeSet<Vertex>,
        open: BTreeSet<Vertex>,
    ) -> Result<Self> {
        let n = parent.len();
        if n == 0 {
            return Err(Error::Input("tree must have at least one vertex".into()));
        }
        let mut root = None;
        for (v, p) in parent.iter().enumerate() {
            match p {
                None => {
                    if root.is_some() {
                        return Err(Error::Input("multiple roots".into()));
                    }
                    root = Some(v);
                }
                Some(p) => {
                    if *p >= n {
                        return Err(Error::Input(format!("vertex {v} has unknown parent {p}")));
                    }
                    if *p == v {
                        return Err(Error::Input(format!("vertex {v} is its own parent")));
                    }
                }
            }
        }
        let root = root.ok_or_else(|| Error::Input("no root vertex".into()))?;

        let mut children = vec![Vec::new(); n];
        for (v, p) in parent.iter().enumerate() {
            if let Some(p) = p {
                children[*p].push(v);
            }
        }
        for list in &mut children {
            list.sort_unstable();
        }

        // Depth computation doubles as the acyclicity/connectivity check.
        let mut depth = vec![usize::MAX; n];
        depth[root] = 0;
        let mut queue = std::collections::VecDeque::from([root]);
        let mut seen = 1;
        while let Some(v) = queue.pop_front() {
            for &c in &children[v] {
                if depth[c] != usize::MAX {
                    return Err(Error::Input("parent relation contains a cycle".into()));
                }
                depth[c] = depth[v] + 1;
                seen += 1;
                queue.push_back(c);
            }
        }
        if seen != n {
            return Err(Error::Input(
                "parent relation does not connect every vertex to the root".into(),
            ));
        }

        let tree = CommitteeTree {
            parent,
            children,
            depth,
            root,
            blue,
            red,
            open,
        };
        for &v in &tree.blue {
            if v >= n || !tree.is_leaf(v) {
                return Err(Error::Input(format!("blue mark on non-leaf vertex {v}")));
            }
        }
        for &v in &tree.red {
            if v >= n || !tree.is_leaf(v) {
                return Err(Error::Input(format!("red mark on non-leaf vertex {v}")));
            }
        }
        for &v in &tree.open {
            if v >= n || !tree.is_leaf(v) {
                return Err(Error::Input(format!("open mark on non-leaf vertex {v}")));
            }
        }
        if !tree.blue.is_disjoint(&tree.red) {
            return Err(Error::Input("blue and red leaf sets intersect".into()));
        }
        if tree.open.iter().any(|v| tree.blue.contains(v) || tree.red.contains(v)) {
            return Err(Error::Input("open vertices must not carry a party mark".into()));
        }
        // The underlying game never lets the root vote for itself; inputs
        // that mark the root as a party member are flagged, not guessed at.
        if tree.blue.contains(&tree.root) || tree.red.contains(&tree.root) {
            return Err(Error::Input("root may not belong to a party".into()));
        }
        Ok(tree)
    }

    pub fn vertex_count(&self) -> usize {
        self.parent.len()
    }

    pub fn edge_count(&self) -> usize {
        self.parent.len() - 1
    }

    pub fn root(&self) -> Vertex {
        self.root
    }

    pub fn parent(&self, v: Vertex) -> Option<Vertex> {
        self.parent[v]
    }

    pub fn children(&self, v: Vertex) -> &[Vertex] {
        &self.children[v]
    }

    pub fn depth(&self, v: Vertex) -> usize {
        self.depth[v]
    }

    /// A leaf is a vertex with no incoming edges.
    pub fn is_leaf(&self, v: Vertex) -> bool {
        self.children[v].is_empty()
    }

    pub fn blue_leaves(&self) -> &BTreeSet<Vertex> {
        &self.blue
    }

    pub fn red_leaves(&self) -> &BTreeSet<Vertex> {
        &self.red
    }

    pub fn open_vertices(&self) -> &BTreeSet<Vertex> {
        &self.open
    }

    pub fn is_open(&self, v: Vertex) -> bool {
        self.open.contains(&v)
    }

    pub fn leaf_set(&self, party: Party) -> &BTreeSet<Vertex> {
        match party {
            Party::Blue => &self.blue,
            Party::Red => &self.red,
        }
    }

    pub fn party_of(&self, v: Vertex) -> Option<Party> {
        if self.blue.contains(&v) {
            Some(Party::Blue)
        } else if self.red.contains(&v) {
            Some(Party::Red)
        } else {
            None
        }
    }

    /// Every edge of the tree, as an edge set.
    pub fn all_edges(&self) -> EdgeSet {
        (0..self.vertex_count()).filter(|&v| v != self.root).collect()
    }

    /// Returns a copy of this tree with the blue and red leaf sets swapped.
    pub fn party_swapped(&self) -> CommitteeTree {
        CommitteeTree {
            parent: self.parent.clone(),
            children: self.children.clone(),
            depth: self.depth.clone(),
            root: self.root,
            blue: self.red.clone(),
            red: self.blue.clone(),
            open: self.open.clone(),
        }
    }

    fn check_vertex(&self, v: Vertex) -> Result<()> {
        if v < self.vertex_count() {
            Ok(())
        } else {
            Err(Error::Input(format!("unknown vertex id {v}")))
        }
    }

    /// Accumulation of the edge set at `v`: in-degree minus out-degree of
    /// `v` within `x`. Defined for every vertex; vertices not incident with
    /// an edge of `x` accumulate zero.
    pub fn accumulation(&self, x: &EdgeSet, v: Vertex) -> Result<i64> {
        self.check_vertex(v)?;
        Ok(self.acc(x, v))
    }

    pub(crate) fn acc(&self, x: &EdgeSet, v: Vertex) -> i64 {
        let incoming = self.children[v].iter().filter(|c| x.contains(**c)).count() as i64;
        let outgoing = if v != self.root && x.contains(v) { 1 } else { 0 };
        incoming - outgoing
    }

    /// Accumulation from `x` to `y` at `v`: `A(v,x) - A(v,y)`.
    pub fn accumulation_diff(&self, x: &EdgeSet, y: &EdgeSet, v: Vertex) -> Result<i64> {
        self.check_vertex(v)?;
        Ok(self.acc_diff(x, y, v))
    }

    pub(crate) fn acc_diff(&self, x: &EdgeSet, y: &EdgeSet, v: Vertex) -> i64 {
        self.acc(x, v) - self.acc(y, v)
    }

    /// The vertices incident with an edge of `x`.
    pub fn incident_vertices(&self, x: &EdgeSet) -> BTreeSet<Vertex> {
        let mut out = BTreeSet::new();
        for v in x.iter() {
            out.insert(v);
            if let Some(p) = self.parent[v] {
                out.insert(p);
            }
        }
        out
    }

    /// Vertices with no outgoing edge inside `x`. This is the full
    /// complement of the source set; intersect with `incident_vertices`
    /// where the terminal vertices *of* `x` are wanted. The root is always
    /// terminal.
    pub fn terminal_vertices(&self, x: &EdgeSet) -> BTreeSet<Vertex> {
        (0..self.vertex_count()).filter(|&v| !x.contains(v)).collect()
    }

    pub fn is_terminal(&self, x: &EdgeSet, v: Vertex) -> bool {
        !x.contains(v)
    }

    /// The flow to `x` from the given party: the union of the edge sets of
    /// all paths starting at a party leaf whose interior vertices are not
    /// incident with an edge of `x`. Single-edge paths have no interior and
    /// are always included.
    pub fn flow(&self, x: &EdgeSet, party: Party) -> EdgeSet {
        let incident = self.incident_vertices(x);
        let mut out = EdgeSet::new();
        for &leaf in self.leaf_set(party) {
            // Party leaves are never the root, so the first edge exists.
            out.insert(leaf);
            let mut v = self.parent[leaf].expect("party leaf has a parent");
            while v != self.root && !incident.contains(&v) {
                out.insert(v);
                v = self.parent[v].expect("non-root vertex has a parent");
            }
        }
        out
    }

    pub fn blue_flow(&self, x: &EdgeSet) -> EdgeSet {
        self.flow(x, Party::Blue)
    }

    pub fn red_flow(&self, x: &EdgeSet) -> EdgeSet {
        self.flow(x, Party::Red)
    }

    /// Runs the deterministic vote: each blue leaf sends +1, each red leaf
    /// -1, other leaves send nothing; a committee sends the sign of the sum
    /// it receives. Only defined for fully finite trees.
    pub fn vote_outcome(&self) -> Result<VoteOutcome> {
        if !self.open.is_empty() {
            return Err(Error::Unsupported(
                "vote is undefined on trees with an open frontier".into(),
            ));
        }
        let n = self.vertex_count();
        let mut order: Vec<Vertex> = (0..n).collect();
        order.sort_by(|a, b| self.depth[*b].cmp(&self.depth[*a]));

        let mut sent = vec![0i64; n];
        let mut margin = vec![0i64; n];
        for &v in &order {
            if self.is_leaf(v) {
                sent[v] = match self.party_of(v) {
                    Some(Party::Blue) => 1,
                    Some(Party::Red) => -1,
                    None => 0,
                };
            } else {
                let m: i64 = self.children[v].iter().map(|c| sent[*c]).sum();
                margin[v] = m;
                sent[v] = m.signum();
            }
        }
        let result = match margin[self.root].signum() {
            1 => VoteResult::Blue,
            -1 => VoteResult::Red,
            _ => VoteResult::Tie,
        };
        Ok(VoteOutcome { margin, result })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::*;

    fn edges(sources: &[Vertex]) -> EdgeSet {
        EdgeSet::from_sources(sources.iter().copied())
    }

    #[test]
    fn accumulation_counts_in_minus_out() {
        let t = two_leaf_tie();
        // one incoming, no outgoing edge at the root
        assert_eq!(t.accumulation(&edges(&[2]), 0).unwrap(), 1);

        let t = two_committees();
        // 1 in, 1 out at c1
        assert_eq!(t.accumulation(&edges(&[3, 1]), 1).unwrap(), 0);

        let t = blue_majority_star();
        assert_eq!(t.accumulation(&edges(&[1, 2, 3]), 0).unwrap(), 3);
    }

    #[test]
    fn accumulation_rejects_unknown_vertex() {
        let t = two_leaf_tie();
        assert!(matches!(
            t.accumulation(&EdgeSet::new(), 17),
            Err(Error::Input(_))
        ));
    }

    #[test]
    fn accumulation_diff_examples() {
        let t = two_leaf_tie();
        assert_eq!(t.accumulation_diff(&edges(&[2]), &edges(&[1]), 0).unwrap(), 0);

        let t = blue_majority_star();
        assert_eq!(t.accumulation_diff(&edges(&[1, 2]), &edges(&[3]), 0).unwrap(), 1);

        let t = two_committees();
        // x = {d1->c2, d2->c2, c2->r}, y = {b1->c1, b2->c1, c1->r}, at c2:
        // y has no edges at c2, so the diff is the plain accumulation 1.
        assert_eq!(
            t.accumulation_diff(&edges(&[5, 6, 2]), &edges(&[3, 4, 1]), 2).unwrap(),
            1
        );
    }

    #[test]
    fn incident_and_terminal_vertices() {
        let t = two_leaf_tie();
        assert_eq!(
            t.incident_vertices(&edges(&[2])),
            BTreeSet::from([2, 0])
        );
        assert!(t.incident_vertices(&EdgeSet::new()).is_empty());

        let t = two_committees();
        assert_eq!(t.incident_vertices(&edges(&[1])), BTreeSet::from([1, 0]));

        // ter(x) intersected with V(x)
        let x = edges(&[3]);
        let ter: BTreeSet<_> = t
            .terminal_vertices(&x)
            .intersection(&t.incident_vertices(&x))
            .copied()
            .collect();
        assert_eq!(ter, BTreeSet::from([1]));

        let x = edges(&[3, 1]);
        let ter: BTreeSet<_> = t
            .terminal_vertices(&x)
            .intersection(&t.incident_vertices(&x))
            .copied()
            .collect();
        assert_eq!(ter, BTreeSet::from([0]));
        assert!(t.is_terminal(&x, t.root()));
    }

    #[test]
    fn blue_flow_examples() {
        let t = two_leaf_tie();
        assert_eq!(t.blue_flow(&EdgeSet::new()), edges(&[1]));

        let t = two_committees();
        // x blocks nothing on the blue side
        assert_eq!(t.blue_flow(&edges(&[5, 6, 2])), edges(&[3, 4, 1]));
        // path to the root blocked because the interior c1 is incident
        assert_eq!(t.blue_flow(&edges(&[1])), edges(&[3, 4]));
    }

    #[test]
    fn red_flow_examples() {
        let t = two_leaf_tie();
        assert_eq!(t.red_flow(&EdgeSet::new()), edges(&[2]));

        let t = blue_majority_committee();
        assert_eq!(t.red_flow(&edges(&[2, 3, 1])), edges(&[4]));

        let t = two_committees();
        assert_eq!(t.red_flow(&EdgeSet::new()), edges(&[5, 6, 2]));
    }

    #[test]
    fn vote_examples() {
        assert_eq!(two_leaf_tie().vote_outcome().unwrap().result, VoteResult::Tie);

        let out = blue_majority_star().vote_outcome().unwrap();
        assert_eq!(out.result, VoteResult::Blue);
        assert_eq!(out.margin[0], 1);

        let out = two_committees().vote_outcome().unwrap();
        assert_eq!(out.result, VoteResult::Tie);
        assert_eq!(out.margin[0], 0);
        assert_eq!(out.margin[1], 2);
        assert_eq!(out.margin[2], -2);
    }

    #[test]
    fn vote_rejects_open_frontier() {
        let t = open_path_with_blue();
        assert!(matches!(t.vote_outcome(), Err(Error::Unsupported(_))));
    }

    #[test]
    fn vote_single_vertex_is_tie() {
        let t = CommitteeTree::new(vec![None], BTreeSet::new(), BTreeSet::new(), BTreeSet::new())
            .unwrap();
        assert_eq!(t.vote_outcome().unwrap().result, VoteResult::Tie);
    }

    #[test]
    fn construction_rejects_bad_input() {
        // two roots
        assert!(CommitteeTree::new(
            vec![None, None],
            BTreeSet::new(),
            BTreeSet::new(),
            BTreeSet::new()
        )
        .is_err());
        // cycle
        assert!(CommitteeTree::new(
            vec![None, Some(2), Some(1)],
            BTreeSet::new(),
            BTreeSet::new(),
            BTreeSet::new()
        )
        .is_err());
        // party mark on internal vertex
        assert!(CommitteeTree::new(
            vec![None, Some(0), Some(1)],
            BTreeSet::from([1]),
            BTreeSet::new(),
            BTreeSet::new()
        )
        .is_err());
        // root in a party
        assert!(CommitteeTree::new(
            vec![None],
            BTreeSet::from([0]),
            BTreeSet::new(),
            BTreeSet::new()
        )
        .is_err());
        // blue/red overlap
        assert!(CommitteeTree::new(
            vec![None, Some(0)],
            BTreeSet::from([1]),
            BTreeSet::from([1]),
            BTreeSet::new()
        )
        .is_err());
    }

    #[test]
    fn edge_set_display_and_parse_round_trip() {
        let x = edges(&[5, 1, 3]);
        assert_eq!(x.to_string(), "1 3 5");
        let parsed: EdgeSet = "1 3 5".parse().unwrap();
        assert_eq!(parsed, x);
        let empty: EdgeSet = "".parse().unwrap();
        assert!(empty.is_empty());
    }
}
