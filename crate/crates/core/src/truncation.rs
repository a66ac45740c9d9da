//! Depth truncation of lazily generated (possibly infinite) committee
//! trees, and the stability study that probes how certificates behave as
//! the truncation deepens.

use std::collections::BTreeSet;

use crate::blockage::{find_certificate, Certificate, CertificateKind};
use crate::committee_tree::{CommitteeTree, EdgeSet, Vertex};
use crate::error::{Error, Result};

/// Budget guard for truncations; generators with large branching blow up
/// exponentially in the depth.
const VERTEX_BUDGET: usize = 1_000_000;

/// Party mark carried by a generated child.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LeafMark {
    None,
    Blue,
    Red,
}

/// A lazily unfolded rooted tree. Children lists are finite (local
/// finiteness); a child carrying a party mark must be childless.
pub trait TreeGenerator {
    type Label: Clone;

    fn root(&self) -> Self::Label;
    fn children(&self, label: &Self::Label) -> Vec<(Self::Label, LeafMark)>;
}

/// What to do with depth-limit vertices that still have children.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FrontierMode {
    /// Mark them open: they are neutral and count as supplied in the
    /// leafless-forest machinery.
    Neutral,
    /// Convert them to blue leaves.
    OpenAsBlue,
    /// Convert them to red leaves.
    OpenAsRed,
}

impl FrontierMode {
    pub const ALL: [FrontierMode; 3] = [
        FrontierMode::Neutral,
        FrontierMode::OpenAsBlue,
        FrontierMode::OpenAsRed,
    ];

    pub fn token(self) -> &'static str {
        match self {
            FrontierMode::Neutral => "neutral",
            FrontierMode::OpenAsBlue => "blue",
            FrontierMode::OpenAsRed => "red",
        }
    }
}

impl std::str::FromStr for FrontierMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "neutral" => Ok(FrontierMode::Neutral),
            "blue" => Ok(FrontierMode::OpenAsBlue),
            "red" => Ok(FrontierMode::OpenAsRed),
            other => Err(Error::Input(format!("unknown frontier mode `{other}`"))),
        }
    }
}

/// A truncation together with its frontier: the depth-limit vertices that
/// still had children in the generator, independent of how the mode
/// relabelled them.
#[derive(Debug, Clone)]
pub struct Truncation {
    pub tree: CommitteeTree,
    pub frontier: BTreeSet<Vertex>,
}

/// Breadth-first expansion of the generator to the given depth. Vertex ids
/// are assigned in BFS order, so truncations of the same generator at
/// different depths agree on the ids of their shared prefix.
pub fn truncate_with_frontier<G: TreeGenerator>(
    gen: &G,
    depth: usize,
    mode: FrontierMode,
) -> Result<Truncation> {
    let mut parent: Vec<Option<Vertex>> = vec![None];
    let mut blue = BTreeSet::new();
    let mut red = BTreeSet::new();
    let mut open = BTreeSet::new();
    let mut frontier = BTreeSet::new();

    let mut level: Vec<(Vertex, G::Label)> = vec![(0, gen.root())];
    for d in 0..=depth {
        let mut next = Vec::new();
        for (v, label) in level {
            let kids = gen.children(&label);
            if d == depth {
                if !kids.is_empty() {
                    frontier.insert(v);
                    match mode {
                        FrontierMode::Neutral => {
                            open.insert(v);
                        }
                        FrontierMode::OpenAsBlue => {
                            blue.insert(v);
                        }
                        FrontierMode::OpenAsRed => {
                            red.insert(v);
                        }
                    }
                }
                continue;
            }
            for (child_label, mark) in kids {
                let c = parent.len();
                if c >= VERTEX_BUDGET {
                    return Err(Error::Guard(format!(
                        "truncation exceeds the vertex budget of {VERTEX_BUDGET}"
                    )));
                }
                parent.push(Some(v));
                match mark {
                    LeafMark::Blue | LeafMark::Red => {
                        if !gen.children(&child_label).is_empty() {
                            return Err(Error::Input(
                                "generator marks a vertex with children as a party leaf".into(),
                            ));
                        }
                        if mark == LeafMark::Blue {
                            blue.insert(c);
                        } else {
                            red.insert(c);
                        }
                    }
                    LeafMark::None => next.push((c, child_label)),
                }
            }
        }
        level = next;
    }

    let tree = CommitteeTree::new(parent, blue, red, open)?;
    Ok(Truncation { tree, frontier })
}

/// Breadth-first truncation returning just the committee tree.
pub fn truncate<G: TreeGenerator>(
    gen: &G,
    depth: usize,
    mode: FrontierMode,
) -> Result<CommitteeTree> {
    Ok(truncate_with_frontier(gen, depth, mode)?.tree)
}

/// One state of a periodic tree specification.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StateSpec {
    pub name: String,
    pub mark: LeafMark,
    /// Child states, with multiplicity.
    pub children: Vec<usize>,
}

/// A finite state machine whose unfolding defines a (possibly infinite)
/// locally finite rooted tree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PeriodicTreeSpec {
    pub states: Vec<StateSpec>,
    pub root: usize,
}

impl PeriodicTreeSpec {
    /// Checks that child references are in range, every state is reachable
    /// from the root, and leaf-marked states are childless.
    pub fn validate(&self) -> Result<()> {
        if self.root >= self.states.len() {
            return Err(Error::Input("root state out of range".into()));
        }
        for (i, state) in self.states.iter().enumerate() {
            for &c in &state.children {
                if c >= self.states.len() {
                    return Err(Error::Input(format!(
                        "state `{}` has an unknown child state",
                        state.name
                    )));
                }
                if self.states[c].mark != LeafMark::None && !self.states[c].children.is_empty() {
                    return Err(Error::Input(format!(
                        "leaf-marked state `{}` has children",
                        self.states[c].name
                    )));
                }
            }
            if state.mark != LeafMark::None && !state.children.is_empty() {
                return Err(Error::Input(format!(
                    "leaf-marked state `{}` has children",
                    state.name
                )));
            }
            let _ = i;
        }
        let mut seen = vec![false; self.states.len()];
        seen[self.root] = true;
        let mut stack = vec![self.root];
        while let Some(s) = stack.pop() {
            for &c in &self.states[s].children {
                if !seen[c] {
                    seen[c] = true;
                    stack.push(c);
                }
            }
        }
        if let Some(unreachable) = seen.iter().position(|s| !s) {
            return Err(Error::Input(format!(
                "state `{}` is unreachable from the root",
                self.states[unreachable].name
            )));
        }
        Ok(())
    }
}

impl TreeGenerator for PeriodicTreeSpec {
    type Label = usize;

    fn root(&self) -> usize {
        self.root
    }

    fn children(&self, state: &usize) -> Vec<(usize, LeafMark)> {
        self.states[*state]
            .children
            .iter()
            .map(|&c| (c, self.states[c].mark))
            .collect()
    }
}

/// One row of a stability study.
#[derive(Debug, Clone)]
pub struct DepthRecord {
    pub depth: usize,
    pub mode: FrontierMode,
    pub certificate: Certificate,
    /// The certificate edges restricted to the closed region of its own
    /// truncation (everything except the frontier).
    pub prefix_edges: EdgeSet,
}

/// Per-depth certificates across all frontier modes, and the least depth
/// (if any) past which the certificate kind and the closed-region edges
/// are constant.
#[derive(Debug, Clone)]
pub struct StabilityReport {
    pub records: Vec<DepthRecord>,
    pub stabilization_depth: Option<usize>,
}

/// Runs `find_certificate` on every depth in `d_min..=d_max` and every
/// frontier mode. Successive truncations share vertex ids on their common
/// prefix, so certificates at different depths are compared by restricting
/// the deeper one to the shallower truncation's closed region.
pub fn stability_study<G: TreeGenerator>(
    gen: &G,
    d_min: usize,
    d_max: usize,
) -> Result<StabilityReport> {
    if d_min > d_max {
        return Err(Error::Input("depth-min exceeds depth-max".into()));
    }
    let mut records = Vec::new();
    // closed region per depth: vertex ids of that truncation minus frontier
    let mut closed_regions: Vec<(usize, BTreeSet<Vertex>)> = Vec::new();
    for depth in d_min..=d_max {
        for mode in FrontierMode::ALL {
            let trunc = truncate_with_frontier(gen, depth, mode)?;
            let certificate = find_certificate(&trunc.tree)?;
            let closed: BTreeSet<Vertex> = (0..trunc.tree.vertex_count())
                .filter(|v| !trunc.frontier.contains(v))
                .collect();
            let prefix_edges = certificate.edges.restricted_to(&closed);
            if mode == FrontierMode::Neutral {
                closed_regions.push((depth, closed));
            }
            records.push(DepthRecord {
                depth,
                mode,
                certificate,
                prefix_edges,
            });
        }
    }

    let mut stabilization_depth = None;
    'candidates: for &(candidate, ref closed) in &closed_regions {
        let mut kind: Option<CertificateKind> = None;
        let mut prefix: Option<EdgeSet> = None;
        for record in records.iter().filter(|r| r.depth >= candidate) {
            let restricted = record.certificate.edges.restricted_to(closed);
            match (&kind, &prefix) {
                (None, _) => {
                    kind = Some(record.certificate.kind);
                    prefix = Some(restricted);
                }
                (Some(k), Some(p)) => {
                    if *k != record.certificate.kind || *p != restricted {
                        continue 'candidates;
                    }
                }
                _ => unreachable!(),
            }
        }
        stabilization_depth = Some(candidate);
        break;
    }

    Ok(StabilityReport {
        records,
        stabilization_depth,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    /// root state unfolds to a single infinite path
    fn infinite_path() -> PeriodicTreeSpec {
        PeriodicTreeSpec {
            states: vec![StateSpec {
                name: "s".into(),
                mark: LeafMark::None,
                children: vec![0],
            }],
            root: 0,
        }
    }

    /// every internal node has one blue leaf child and one committee child
    fn blue_comb() -> PeriodicTreeSpec {
        PeriodicTreeSpec {
            states: vec![
                StateSpec {
                    name: "spine".into(),
                    mark: LeafMark::None,
                    children: vec![1, 0],
                },
                StateSpec {
                    name: "b".into(),
                    mark: LeafMark::Blue,
                    children: vec![],
                },
            ],
            root: 0,
        }
    }

    #[test]
    fn truncate_path_neutral() {
        let spec = infinite_path();
        spec.validate().unwrap();
        let t = truncate(&spec, 2, FrontierMode::Neutral).unwrap();
        assert_eq!(t.vertex_count(), 3);
        assert_eq!(t.parent(1), Some(0));
        assert_eq!(t.parent(2), Some(1));
        assert_eq!(t.open_vertices(), &std::collections::BTreeSet::from([2]));
    }

    #[test]
    fn truncate_path_open_as_red() {
        let t = truncate(&infinite_path(), 2, FrontierMode::OpenAsRed).unwrap();
        assert!(t.red_leaves().contains(&2));
        assert!(t.open_vertices().is_empty());
    }

    #[test]
    fn truncate_comb() {
        let t = truncate(&blue_comb(), 3, FrontierMode::Neutral).unwrap();
        assert_eq!(t.blue_leaves().len(), 3);
        assert_eq!(t.open_vertices().len(), 1);
    }

    #[test]
    fn truncate_rejects_marked_state_with_children() {
        let spec = PeriodicTreeSpec {
            states: vec![
                StateSpec {
                    name: "r".into(),
                    mark: LeafMark::None,
                    children: vec![1],
                },
                StateSpec {
                    name: "bad".into(),
                    mark: LeafMark::Blue,
                    children: vec![0],
                },
            ],
            root: 0,
        };
        assert!(spec.validate().is_err());
        assert!(truncate(&spec, 3, FrontierMode::Neutral).is_err());
    }

    #[test]
    fn stability_of_blue_comb() {
        let report = stability_study(&blue_comb(), 2, 5).unwrap();
        assert!(report
            .records
            .iter()
            .all(|r| r.certificate.kind == CertificateKind::StrongBlue));
        assert_eq!(report.stabilization_depth, Some(2));
    }

    #[test]
    fn stability_of_finite_tree() {
        // a finite spec: root with two blue leaves and one red leaf
        let spec = PeriodicTreeSpec {
            states: vec![
                StateSpec {
                    name: "r".into(),
                    mark: LeafMark::None,
                    children: vec![1, 1, 2],
                },
                StateSpec {
                    name: "b".into(),
                    mark: LeafMark::Blue,
                    children: vec![],
                },
                StateSpec {
                    name: "d".into(),
                    mark: LeafMark::Red,
                    children: vec![],
                },
            ],
            root: 0,
        };
        spec.validate().unwrap();
        let report = stability_study(&spec, 1, 4).unwrap();
        assert_eq!(report.stabilization_depth, Some(1));
        let kinds: std::collections::BTreeSet<_> = report
            .records
            .iter()
            .map(|r| r.certificate.kind.to_string())
            .collect();
        assert_eq!(kinds.len(), 1);
    }
}
