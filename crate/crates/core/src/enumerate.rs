//! Exhaustive enumeration of small rooted trees and leaf labelings, and
//! the batch checks driven from it: certificate verification, agreement
//! with the voting oracle, and (on the smallest trees) exclusivity of the
//! two certificate kinds over all edge subsets.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use crate::blockage::{blockage_ok, find_certificate, verify_certificate, CertificateKind};
use crate::committee_tree::{CommitteeTree, EdgeSet, Party, VoteResult};
use crate::error::{Error, Result};

/// Canonical rooted tree shape: the multiset of child subtree shapes,
/// stored sorted descending so equal shapes compare equal.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
struct Shape(Vec<Shape>);

impl Shape {
    fn size(&self) -> usize {
        1 + self.0.iter().map(Shape::size).sum::<usize>()
    }
}

/// All rooted tree shapes with exactly `n` vertices, up to isomorphism.
fn shapes(n: usize) -> Vec<Shape> {
    fn multisets(pool: &[Shape], from: usize, remaining: usize, acc: &mut Vec<Shape>, out: &mut Vec<Shape>) {
        if remaining == 0 {
            let mut children = acc.clone();
            children.sort_by(|a, b| b.cmp(a));
            out.push(Shape(children));
            return;
        }
        for i in from..pool.len() {
            let size = pool[i].size();
            if size > remaining {
                continue;
            }
            acc.push(pool[i].clone());
            multisets(pool, i, remaining - size, acc, out);
            acc.pop();
        }
    }

    let mut by_size: Vec<Vec<Shape>> = vec![Vec::new(), vec![Shape(Vec::new())]];
    for m in 2..=n {
        let pool: Vec<Shape> = by_size.iter().flatten().cloned().collect();
        let mut out = Vec::new();
        multisets(&pool, 0, m - 1, &mut Vec::new(), &mut out);
        out.sort();
        out.dedup();
        by_size.push(out);
    }
    by_size.swap_remove(n)
}

/// Parent arrays (root 0, BFS order) for all rooted trees on `n` vertices.
pub fn rooted_tree_parents(n: usize) -> Vec<Vec<Option<usize>>> {
    fn to_parents(shape: &Shape) -> Vec<Option<usize>> {
        let mut parent = vec![None];
        let mut queue = std::collections::VecDeque::from([(0usize, shape)]);
        while let Some((v, s)) = queue.pop_front() {
            for child in &s.0 {
                let c = parent.len();
                parent.push(Some(v));
                queue.push_back((c, child));
            }
        }
        parent
    }
    shapes(n).iter().map(to_parents).collect()
}

/// Iterates every assignment of {neutral, blue, red} to the non-root
/// leaves of the parent array.
pub fn leaf_labelings(parent: &[Option<usize>]) -> impl Iterator<Item = CommitteeTree> + '_ {
    let n = parent.len();
    let mut is_leaf = vec![true; n];
    for p in parent.iter().flatten() {
        is_leaf[*p] = false;
    }
    let leaves: Vec<usize> = (0..n)
        .filter(|&v| is_leaf[v] && parent[v].is_some())
        .collect();
    let total = 3usize.pow(leaves.len() as u32);
    (0..total).map(move |code| {
        let mut blue = BTreeSet::new();
        let mut red = BTreeSet::new();
        let mut c = code;
        for &leaf in &leaves {
            match c % 3 {
                1 => {
                    blue.insert(leaf);
                }
                2 => {
                    red.insert(leaf);
                }
                _ => {}
            }
            c /= 3;
        }
        CommitteeTree::new(parent.to_vec(), blue, red, BTreeSet::new())
            .expect("enumerated labeling is valid")
    })
}

/// Per-size tallies of the enumeration run.
#[derive(Debug, Clone)]
pub struct SizeSummary {
    pub n: usize,
    pub trees: usize,
    pub instances: usize,
    pub exclusivity_checked: bool,
    /// instances admitting both a verifying strong blue and a verifying
    /// red blockage (must stay zero)
    pub both_kinds: usize,
    /// instances where the subset sweep found neither kind (must stay zero)
    pub neither_kind: usize,
}

/// Full enumeration result.
#[derive(Debug, Clone)]
pub struct EnumerationSummary {
    pub per_size: Vec<SizeSummary>,
    pub failures: Vec<String>,
}

impl EnumerationSummary {
    pub fn pass(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn total_instances(&self) -> usize {
        self.per_size.iter().map(|s| s.instances).sum()
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        for s in &self.per_size {
            let _ = write!(
                out,
                "n {} trees {} instances {}",
                s.n, s.trees, s.instances
            );
            if s.exclusivity_checked {
                let _ = write!(out, " both {} neither {}", s.both_kinds, s.neither_kind);
            }
            out.push('\n');
        }
        for f in &self.failures {
            let _ = writeln!(out, "FAIL {f}");
        }
        let _ = writeln!(
            out,
            "total instances {} failures {}",
            self.total_instances(),
            self.failures.len()
        );
        out
    }
}

/// Exclusivity sweep bound: trees up to this size get the full edge-subset
/// search for both certificate kinds.
pub const EXCLUSIVITY_MAX_N: usize = 7;

/// Hard guard for [`run_enumeration`].
pub const ENUMERATION_MAX_N: usize = 9;

/// Enumerates every rooted tree with at most `max_n` vertices and every
/// blue/red/neutral leaf labeling. For each instance the certificate must
/// verify and its kind must agree with the vote (strong blue iff the blue
/// party wins). Up to [`EXCLUSIVITY_MAX_N`] vertices, an exhaustive search
/// over all edge subsets additionally confirms that no instance admits
/// verifying certificates of both kinds.
pub fn run_enumeration(max_n: usize) -> Result<EnumerationSummary> {
    if max_n > ENUMERATION_MAX_N {
        return Err(Error::Guard(format!(
            "enumeration is limited to {ENUMERATION_MAX_N} vertices, got {max_n}"
        )));
    }
    if max_n == 0 {
        return Err(Error::Input("enumeration bound must be positive".into()));
    }
    let mut per_size = Vec::new();
    let mut failures = Vec::new();
    for n in 1..=max_n {
        let parents = rooted_tree_parents(n);
        let mut summary = SizeSummary {
            n,
            trees: parents.len(),
            instances: 0,
            exclusivity_checked: n <= EXCLUSIVITY_MAX_N,
            both_kinds: 0,
            neither_kind: 0,
        };
        for parent in &parents {
            for tree in leaf_labelings(parent) {
                summary.instances += 1;
                if let Some(msg) = check_instance(&tree, summary.exclusivity_checked, &mut summary)
                {
                    failures.push(msg);
                }
            }
        }
        per_size.push(summary);
    }
    Ok(EnumerationSummary { per_size, failures })
}

fn describe(tree: &CommitteeTree) -> String {
    crate::formats::write_ctree(tree).replace('\n', "; ")
}

fn check_instance(
    tree: &CommitteeTree,
    exclusivity: bool,
    summary: &mut SizeSummary,
) -> Option<String> {
    let cert = match find_certificate(tree) {
        Ok(cert) => cert,
        Err(e) => return Some(format!("certificate search failed ({e}) on {}", describe(tree))),
    };
    let report = verify_certificate(tree, &cert);
    if !report.pass() {
        return Some(format!(
            "certificate fails verification ({}) on {}",
            report.failure_summary(),
            describe(tree)
        ));
    }
    let vote = tree
        .vote_outcome()
        .expect("enumerated trees are fully finite");
    let agrees = match cert.kind {
        CertificateKind::StrongBlue => vote.result == VoteResult::Blue,
        CertificateKind::Red => vote.result != VoteResult::Blue,
    };
    if !agrees {
        return Some(format!(
            "certificate kind {} disagrees with vote {} on {}",
            cert.kind,
            vote.result,
            describe(tree)
        ));
    }
    if exclusivity {
        let (has_blue, has_red) = exhaustive_kinds(tree);
        if has_blue && has_red {
            summary.both_kinds += 1;
            return Some(format!(
                "both certificate kinds verify on {}",
                describe(tree)
            ));
        }
        if !has_blue && !has_red {
            summary.neither_kind += 1;
            return Some(format!("neither certificate kind verifies on {}", describe(tree)));
        }
    }
    None
}

/// Sweeps all edge subsets, recording whether some subset verifies as a
/// strong blue blockage and whether some subset verifies as a red one.
pub fn exhaustive_kinds(tree: &CommitteeTree) -> (bool, bool) {
    let sources: Vec<usize> = (0..tree.vertex_count())
        .filter(|&v| v != tree.root())
        .collect();
    let mut has_blue = false;
    let mut has_red = false;
    for mask in 0u64..(1 << sources.len()) {
        let edges: EdgeSet = sources
            .iter()
            .enumerate()
            .filter(|(i, _)| mask & (1 << i) != 0)
            .map(|(_, v)| *v)
            .collect();
        if !has_blue && blockage_ok(tree, &edges, Party::Blue, true) {
            has_blue = true;
        }
        if !has_red && blockage_ok(tree, &edges, Party::Red, false) {
            has_red = true;
        }
        if has_blue && has_red {
            break;
        }
    }
    (has_blue, has_red)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rooted_tree_counts_match_known_sequence() {
        // number of rooted trees on n unlabeled vertices
        let expected = [1usize, 1, 2, 4, 9, 20, 48, 115, 286];
        for (i, want) in expected.iter().enumerate() {
            assert_eq!(rooted_tree_parents(i + 1).len(), *want, "n = {}", i + 1);
        }
    }

    #[test]
    fn labelings_count_is_three_to_the_leaves() {
        // star with 3 leaves
        let parent = vec![None, Some(0), Some(0), Some(0)];
        assert_eq!(leaf_labelings(&parent).count(), 27);
        // single vertex: no leaves to label
        assert_eq!(leaf_labelings(&[None]).count(), 1);
    }

    #[test]
    fn enumeration_passes_up_to_five() {
        let summary = run_enumeration(5).unwrap();
        assert!(summary.pass(), "{}", summary.render());
        assert_eq!(summary.per_size.len(), 5);
        assert_eq!(summary.per_size[4].trees, 9);
    }

    #[test]
    fn enumeration_guard() {
        assert!(matches!(run_enumeration(10), Err(Error::Guard(_))));
    }
}
