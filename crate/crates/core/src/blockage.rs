//! Overflow saturation, fixed pairs, legality and the rayless cutoff,
//! bad-edge removal, and end-to-end search and verification of blockage
//! certificates.
//!
//! A red blockage witnesses that the red party can prevent the blue party
//! from ratifying its program; a strong blue blockage witnesses that the
//! blue party can ratify. On every finite committee tree exactly one of
//! the two is produced by [`find_certificate`], and each step of the
//! construction re-checks the lemma it relies on, so a bug surfaces as a
//! `Contract` error instead of a silently wrong certificate.
//!
//! Both colours run through the same code: every operation takes the side
//! as a parameter and the red machinery is the blue machinery with the
//! parties swapped. The root-strength threshold (>= 1 for blue, >= 0 for
//! red) is the one asymmetry.

use std::collections::VecDeque;
use std::fmt;

use crate::committee_tree::{CommitteeTree, EdgeSet, Party, Vertex};
use crate::error::{Error, Result};
use crate::report::CheckReport;

/// Integer capacity function on vertices. Capacities are integers rather
/// than naturals because the certificate search instantiates
/// `c(v) = A(v, Y)`, which is negative wherever `Y` accumulates outflow.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Capacity(pub Vec<i64>);

impl Capacity {
    pub fn zero(n: usize) -> Self {
        Capacity(vec![0; n])
    }

    /// `c(v) = A(v, y)` for every vertex.
    pub fn from_accumulation(tree: &CommitteeTree, y: &EdgeSet) -> Self {
        Capacity((0..tree.vertex_count()).map(|v| tree.acc(y, v)).collect())
    }

    pub fn get(&self, v: Vertex) -> i64 {
        self.0[v]
    }
}

/// The overflow of `x` for the given party: the smallest edge set that
/// contains every party-leaf edge of `E \ x` and is closed under adding an
/// edge `s -> t` outside `x` whose source accumulates at least 1 against
/// `x`. The result does not depend on the order in which eligible edges
/// are added.
pub fn overflow(tree: &CommitteeTree, x: &EdgeSet, party: Party) -> EdgeSet {
    let n = tree.vertex_count();
    let root = tree.root();
    let mut in_x = vec![0i64; n];
    for v in x.iter() {
        if let Some(p) = tree.parent(v) {
            in_x[p] += 1;
        }
    }

    let mut out = EdgeSet::new();
    let mut in_out = vec![0i64; n];
    let mut queue = VecDeque::new();
    for &leaf in tree.leaf_set(party) {
        if !x.contains(leaf) {
            out.insert(leaf);
            let p = tree.parent(leaf).expect("party leaf has a parent");
            in_out[p] += 1;
            queue.push_back(p);
        }
    }
    // Eligibility of a source is monotone in the set built so far, so a
    // single re-check per incoming edge suffices.
    while let Some(v) = queue.pop_front() {
        if v == root || out.contains(v) || x.contains(v) {
            continue;
        }
        if in_out[v] - in_x[v] >= 1 {
            out.insert(v);
            let p = tree.parent(v).expect("non-root vertex has a parent");
            in_out[p] += 1;
            queue.push_back(p);
        }
    }
    out
}

pub fn blue_overflow(tree: &CommitteeTree, x: &EdgeSet) -> EdgeSet {
    overflow(tree, x, Party::Blue)
}

pub fn red_overflow(tree: &CommitteeTree, x: &EdgeSet) -> EdgeSet {
    overflow(tree, x, Party::Red)
}

/// A pair `(x, y)` with `red_overflow(x) = y` and `blue_overflow(y) = x`,
/// found by iterating `x -> blue_overflow(red_overflow(x))` from the empty
/// set. `iterations` counts the strict growth steps; the composition of two
/// antitone maps is monotone, so the chain stabilizes after at most `|E|`
/// of them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FixedPair {
    pub x: EdgeSet,
    pub y: EdgeSet,
    pub iterations: usize,
}

pub fn fixed_pair(tree: &CommitteeTree) -> FixedPair {
    let mut x = EdgeSet::new();
    let mut iterations = 0;
    loop {
        let y = overflow(tree, &x, Party::Red);
        let next = overflow(tree, &y, Party::Blue);
        if next == x {
            return FixedPair { x, y, iterations };
        }
        x = next;
        iterations += 1;
    }
}

/// The union of all leafless subforests of `s`: the largest subset in
/// which every edge source has an incoming edge or is an open frontier
/// vertex (open vertices model truncated rays and count as supplied).
/// On fully finite trees this is always empty.
pub fn leafless_union(tree: &CommitteeTree, s: &EdgeSet) -> EdgeSet {
    let n = tree.vertex_count();
    let mut cur = s.clone();
    let mut in_count = vec![0usize; n];
    for v in cur.iter() {
        if let Some(p) = tree.parent(v) {
            in_count[p] += 1;
        }
    }
    let mut queue: VecDeque<Vertex> = cur
        .iter()
        .filter(|&v| in_count[v] == 0 && !tree.is_open(v))
        .collect();
    while let Some(v) = queue.pop_front() {
        if !cur.remove(v) {
            continue;
        }
        let p = tree.parent(v).expect("edge source has a parent");
        in_count[p] -= 1;
        if cur.contains(p) && in_count[p] == 0 && !tree.is_open(p) {
            queue.push_back(p);
        }
    }
    cur
}

/// An edge set is rayless when it contains no leafless subforest.
pub fn is_rayless(tree: &CommitteeTree, s: &EdgeSet) -> bool {
    leafless_union(tree, s).is_empty()
}

/// Cuts `x` down to a rayless subset while (1) keeping the accumulation at
/// or above `c(v)` at every vertex that met `c(v)` in `x`, and (2) keeping
/// the accumulation exactly at every terminal vertex of `x`.
///
/// The loop repeatedly takes the union `U` of all leafless subforests,
/// picks an edge `s -> t` in `U` whose source satisfies
/// `A(s, x \ U) >= c(s) + 1` (smallest source id wins, for determinism)
/// and drops every `U`-edge ending at `s`. If no edge qualifies, the input
/// is illegal for `c` and the stuck `U` is returned as the witness.
pub fn cutoff_rayless(tree: &CommitteeTree, x: &EdgeSet, c: &Capacity) -> Result<EdgeSet> {
    let mut cur = x.clone();
    loop {
        let u = leafless_union(tree, &cur);
        if u.is_empty() {
            return Ok(cur);
        }
        let rest = cur.difference(&u);
        let picked = u.iter().find(|&s| tree.acc(&rest, s) >= c.get(s) + 1);
        match picked {
            None => return Err(Error::Illegal { witness: u }),
            Some(s) => {
                for &child in tree.children(s) {
                    if u.contains(child) {
                        cur.remove(child);
                    }
                }
            }
        }
    }
}

/// Outcome of the operational legality check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LegalityCheck {
    pub legal: bool,
    /// Stuck leafless set when illegal.
    pub witness: Option<EdgeSet>,
    /// The rayless cutoff when legal.
    pub rayless: Option<EdgeSet>,
}

/// Decides legality by running the cutoff loop. Any rayless set is legal;
/// on an illegal set the loop gets stuck and the stuck union is a concrete
/// illegal witness.
pub fn is_legal(tree: &CommitteeTree, x: &EdgeSet, c: &Capacity) -> LegalityCheck {
    match cutoff_rayless(tree, x, c) {
        Ok(rayless) => LegalityCheck {
            legal: true,
            witness: None,
            rayless: Some(rayless),
        },
        Err(Error::Illegal { witness }) => LegalityCheck {
            legal: false,
            witness: Some(witness),
            rayless: None,
        },
        Err(_) => unreachable!("cutoff only fails with an illegal witness"),
    }
}

/// Edges of `x` whose target's outgoing edge lies in the opposing
/// overflow. Removing them turns an overflow-dominated set into a genuine
/// blockage without changing the root accumulation.
pub fn bad_edges(tree: &CommitteeTree, x: &EdgeSet, opposing_overflow: &EdgeSet) -> EdgeSet {
    x.iter()
        .filter(|&s| {
            let t = tree.parent(s).expect("edge source has a parent");
            t != tree.root() && opposing_overflow.contains(t)
        })
        .collect()
}

/// Result of a successful bad-edge removal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockageReduction {
    pub edges: EdgeSet,
    pub opposing_flow: EdgeSet,
    pub root_accumulation: i64,
}

/// Removes the bad edges of `x` (with respect to the red overflow of `x`)
/// and checks the full contract: the red overflow of `x` equals the red
/// flow of the result, the result satisfies the blue-blockage conditions,
/// and the root accumulation is preserved.
///
/// Requires `A(v, x, red_overflow(x)) >= 0` for every `v` in
/// `(V(x) \ (B ∪ ter(x))) + root`.
pub fn remove_bad_edges(tree: &CommitteeTree, x: &EdgeSet) -> Result<BlockageReduction> {
    reduce_to_blockage(tree, x, Party::Blue)
}

/// Side-parameterized bad-edge removal; `side` is the colour of the
/// blockage being produced and the overflow of the opposite colour is the
/// reference.
pub fn reduce_to_blockage(
    tree: &CommitteeTree,
    x: &EdgeSet,
    side: Party,
) -> Result<BlockageReduction> {
    let opposing = overflow(tree, x, side.opposite());
    let own_leaves = tree.leaf_set(side);

    // Hypothesis: nonnegative accumulation against the opposing overflow on
    // (V(x) \ (own party ∪ ter(x))) + root. The non-terminal vertices of
    // V(x) are exactly the edge sources.
    for v in x.iter() {
        if own_leaves.contains(&v) {
            continue;
        }
        let a = tree.acc_diff(x, &opposing, v);
        if a < 0 {
            return Err(Error::Precondition(format!(
                "accumulation against the opposing overflow is {a} at vertex {v}"
            )));
        }
    }
    let root = tree.root();
    let root_acc = tree.acc_diff(x, &opposing, root);
    if root_acc < 0 {
        return Err(Error::Precondition(format!(
            "accumulation against the opposing overflow is {root_acc} at the root"
        )));
    }

    let bad = bad_edges(tree, x, &opposing);
    let edges = x.difference(&bad);
    let opposing_flow = tree.flow(&edges, side.opposite());

    if opposing_flow != opposing {
        return Err(Error::Contract(format!(
            "opposing flow of the reduced set `{opposing_flow}` differs from the opposing overflow `{opposing}`"
        )));
    }
    let conditions = blockage_conditions(tree, &edges, side, false);
    if !conditions.pass() {
        return Err(Error::Contract(format!(
            "reduced set is not a {side} blockage: {}",
            conditions.failure_summary()
        )));
    }
    let new_root_acc = tree.acc_diff(&edges, &opposing_flow, root);
    if new_root_acc != root_acc {
        return Err(Error::Contract(format!(
            "root accumulation changed from {root_acc} to {new_root_acc}"
        )));
    }
    Ok(BlockageReduction {
        edges,
        opposing_flow,
        root_accumulation: root_acc,
    })
}

/// Kind of a blockage certificate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CertificateKind {
    StrongBlue,
    Red,
}

impl CertificateKind {
    pub fn side(self) -> Party {
        match self {
            CertificateKind::StrongBlue => Party::Blue,
            CertificateKind::Red => Party::Red,
        }
    }

    /// Required root accumulation against the opposing flow.
    pub fn root_threshold(self) -> i64 {
        match self {
            CertificateKind::StrongBlue => 1,
            CertificateKind::Red => 0,
        }
    }
}

impl fmt::Display for CertificateKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CertificateKind::StrongBlue => write!(f, "StrongBlue"),
            CertificateKind::Red => write!(f, "Red"),
        }
    }
}

impl std::str::FromStr for CertificateKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "StrongBlue" => Ok(CertificateKind::StrongBlue),
            "Red" => Ok(CertificateKind::Red),
            other => Err(Error::Input(format!("unknown certificate kind `{other}`"))),
        }
    }
}

/// A blockage certificate with its diagnostic flow and root accumulation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Certificate {
    pub kind: CertificateKind,
    pub edges: EdgeSet,
    /// Opposing flow: `r(edges)` for a strong blue certificate, `b(edges)`
    /// for a red one.
    pub opposing_flow: EdgeSet,
    pub root_accumulation: i64,
}

/// Checks the blockage conditions of `edges` for the given side without
/// allocating a report: raylessness, disjointness of `V(edges)` from the
/// opposite party, nonnegative accumulation against the recomputed
/// opposing flow on `(V(edges) + root) \ own party`, and the root
/// threshold when `strong`.
pub fn blockage_ok(tree: &CommitteeTree, edges: &EdgeSet, side: Party, strong: bool) -> bool {
    blockage_violation(tree, edges, side, strong).is_none()
}

fn blockage_violation(
    tree: &CommitteeTree,
    edges: &EdgeSet,
    side: Party,
    strong: bool,
) -> Option<String> {
    if !is_rayless(tree, edges) {
        return Some("edge set is not rayless".into());
    }
    let incident = tree.incident_vertices(edges);
    let opposite = tree.leaf_set(side.opposite());
    if let Some(v) = incident.iter().find(|v| opposite.contains(v)) {
        return Some(format!("vertex {v} of the {} party is incident", side.opposite()));
    }
    let own = tree.leaf_set(side);
    let flow = tree.flow(edges, side.opposite());
    let root = tree.root();
    for &v in incident.iter().chain(std::iter::once(&root)) {
        if own.contains(&v) {
            continue;
        }
        let a = tree.acc_diff(edges, &flow, v);
        if a < 0 {
            return Some(format!("accumulation {a} at vertex {v}"));
        }
    }
    if strong && tree.acc_diff(edges, &flow, root) < 1 {
        return Some("root accumulation below 1".into());
    }
    None
}

/// Itemized verification of a certificate: raylessness, party
/// disjointness, per-vertex accumulation against the recomputed opposing
/// flow, root strength where claimed, and agreement of the stored
/// diagnostics with the recomputation.
pub fn verify_certificate(tree: &CommitteeTree, cert: &Certificate) -> CheckReport {
    let side = cert.kind.side();
    let mut report = CheckReport::new();
    if let Some(v) = cert.edges.iter().find(|&v| v >= tree.vertex_count() || v == tree.root()) {
        report.check("edges-valid", false, format!("bad edge source {v}"));
        return report;
    }
    report.check("edges-valid", true, "");
    report.check(
        "rayless",
        is_rayless(tree, &cert.edges),
        "leafless union must be empty",
    );

    let incident = tree.incident_vertices(&cert.edges);
    let opposite = tree.leaf_set(side.opposite());
    let meet: Vec<_> = incident.iter().filter(|v| opposite.contains(v)).collect();
    report.check(
        "party-disjoint",
        meet.is_empty(),
        if meet.is_empty() {
            String::new()
        } else {
            format!("incident {} vertices: {meet:?}", side.opposite())
        },
    );

    let flow = tree.flow(&cert.edges, side.opposite());
    let own = tree.leaf_set(side);
    let root = tree.root();
    let mut violations = Vec::new();
    for &v in incident.iter().chain(std::iter::once(&root)) {
        if own.contains(&v) {
            continue;
        }
        let a = tree.acc_diff(&cert.edges, &flow, v);
        if a < 0 {
            violations.push(format!("vertex {v}: {a}"));
        }
    }
    report.check(
        "accumulation",
        violations.is_empty(),
        violations.join(", "),
    );

    let root_acc = tree.acc_diff(&cert.edges, &flow, root);
    if cert.kind == CertificateKind::StrongBlue {
        report.check(
            "root-strength",
            root_acc >= 1,
            format!("root accumulation {root_acc}"),
        );
    }
    report.check(
        "flow-matches",
        flow == cert.opposing_flow,
        if flow == cert.opposing_flow {
            String::new()
        } else {
            format!("stored `{}` vs recomputed `{}`", cert.opposing_flow, flow)
        },
    );
    report.check(
        "root-accumulation-matches",
        root_acc == cert.root_accumulation,
        format!("stored {} vs recomputed {root_acc}", cert.root_accumulation),
    );
    report
}

/// Computes the certificate promised by the dichotomy: a strong blue
/// blockage when the fixed pair accumulates at least 1 at the root, and a
/// red blockage otherwise. Every intermediate lemma is re-checked; a
/// failure is a `Contract` error.
pub fn find_certificate(tree: &CommitteeTree) -> Result<Certificate> {
    let FixedPair { x, y, .. } = fixed_pair(tree);
    let root_diff = tree.acc_diff(&x, &y, tree.root());
    let (kind, base, opposing) = if root_diff >= 1 {
        (CertificateKind::StrongBlue, x, y)
    } else {
        (CertificateKind::Red, y, x)
    };
    let side = kind.side();

    let capacity = Capacity::from_accumulation(tree, &opposing);
    let rayless = cutoff_rayless(tree, &base, &capacity).map_err(|e| match e {
        Error::Illegal { witness } => Error::Contract(format!(
            "overflow side of the fixed pair is illegal for its capacity; witness {witness}"
        )),
        other => other,
    })?;

    let re_overflow = overflow(tree, &rayless, side.opposite());
    if re_overflow != opposing {
        return Err(Error::Contract(
            "opposing overflow drifted across the rayless cutoff".into(),
        ));
    }

    let reduction = reduce_to_blockage(tree, &rayless, side).map_err(|e| match e {
        Error::Precondition(msg) => Error::Contract(format!(
            "bad-edge removal hypothesis failed on a constructed set: {msg}"
        )),
        other => other,
    })?;

    let cert = Certificate {
        kind,
        edges: reduction.edges,
        opposing_flow: reduction.opposing_flow,
        root_accumulation: reduction.root_accumulation,
    };
    let report = verify_certificate(tree, &cert);
    if !report.pass() {
        return Err(Error::Contract(format!(
            "constructed certificate fails verification: {}",
            report.failure_summary()
        )));
    }
    Ok(cert)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::committee_tree::VoteResult;
    use crate::fixtures::*;

    fn edges(sources: &[Vertex]) -> EdgeSet {
        EdgeSet::from_sources(sources.iter().copied())
    }

    #[test]
    fn blue_overflow_examples() {
        let t = two_leaf_tie();
        assert_eq!(blue_overflow(&t, &EdgeSet::new()), edges(&[1]));

        let t = two_committees();
        // Y0 = {b1,b2}, then c1 accumulates 2 >= 1 and extends to the root.
        assert_eq!(blue_overflow(&t, &edges(&[5, 6, 2])), edges(&[3, 4, 1]));

        let t = red_majority_committee();
        // c1 -> r lies in x and blocks the extension.
        assert_eq!(blue_overflow(&t, &edges(&[3, 4, 1])), edges(&[2]));
    }

    #[test]
    fn red_overflow_examples() {
        let t = two_leaf_tie();
        assert_eq!(red_overflow(&t, &EdgeSet::new()), edges(&[2]));

        let t = red_majority_committee();
        assert_eq!(red_overflow(&t, &edges(&[2])), edges(&[3, 4, 1]));

        let t = blue_majority_committee();
        // A(c1, {d1}, x) = 1 - 2 < 1, no extension.
        assert_eq!(red_overflow(&t, &edges(&[2, 3, 1])), edges(&[4]));
    }

    #[test]
    fn fixed_pair_examples() {
        let t = two_leaf_tie();
        let fp = fixed_pair(&t);
        assert_eq!(fp.x, edges(&[1]));
        assert_eq!(fp.y, edges(&[2]));
        assert_eq!(red_overflow(&t, &fp.x), fp.y);
        assert_eq!(blue_overflow(&t, &fp.y), fp.x);

        let t = blue_majority_star();
        let fp = fixed_pair(&t);
        assert_eq!(fp.x, edges(&[1, 2]));
        assert_eq!(fp.y, edges(&[3]));
        assert_eq!(t.acc_diff(&fp.x, &fp.y, 0), 1);

        let t = two_committees();
        let fp = fixed_pair(&t);
        assert_eq!(fp.x, edges(&[3, 4, 1]));
        assert_eq!(fp.y, edges(&[5, 6, 2]));
        assert_eq!(t.acc_diff(&fp.x, &fp.y, 0), 0);
    }

    #[test]
    fn fixed_pair_converges_within_edge_count() {
        for t in [
            two_leaf_tie(),
            two_committees(),
            blue_majority_star(),
            red_majority_committee(),
            blue_majority_committee(),
            open_path_with_blue(),
        ] {
            assert!(fixed_pair(&t).iterations <= t.edge_count());
        }
    }

    #[test]
    fn leafless_union_examples() {
        // finite subforests always have a source-most leaf
        let t = two_committees();
        assert!(leafless_union(&t, &t.all_edges()).is_empty());

        let t = open_path_with_blue();
        let s = edges(&[1, 2]);
        assert_eq!(leafless_union(&t, &s), s);
        assert!(leafless_union(&t, &edges(&[3, 1])).is_empty());
    }

    #[test]
    fn cutoff_examples() {
        // fully finite tree: input unchanged
        let t = blue_majority_star();
        let x = edges(&[1, 3]);
        assert_eq!(
            cutoff_rayless(&t, &x, &Capacity::zero(t.vertex_count())).unwrap(),
            x
        );

        let t = open_path_with_blue();
        let c = Capacity::zero(t.vertex_count());
        // the side-feeder b -> v1 makes the open chain removable
        let x = edges(&[3, 1, 2]);
        let cut = cutoff_rayless(&t, &x, &c).unwrap();
        assert_eq!(cut, edges(&[3, 1]));
        assert!(is_rayless(&t, &cut));
        // postcondition (2): accumulation preserved at terminal vertices
        assert_eq!(t.acc(&cut, 0), t.acc(&x, 0));

        // the bare chain is illegal
        let x = edges(&[1, 2]);
        match cutoff_rayless(&t, &x, &c) {
            Err(Error::Illegal { witness }) => assert_eq!(witness, x),
            other => panic!("expected illegal input, got {other:?}"),
        }
    }

    #[test]
    fn legality_examples() {
        let t = open_path_with_blue();
        let c = Capacity::zero(t.vertex_count());
        // any rayless set is legal
        assert!(is_legal(&t, &edges(&[3]), &c).legal);
        let check = is_legal(&t, &edges(&[1, 2]), &c);
        assert!(!check.legal);
        assert_eq!(check.witness.unwrap(), edges(&[1, 2]));
        assert!(is_legal(&t, &edges(&[3, 1, 2]), &c).legal);
    }

    #[test]
    fn bad_edges_examples() {
        let t = two_committees();
        assert!(bad_edges(&t, &EdgeSet::new(), &EdgeSet::new()).is_empty());

        let x = edges(&[3, 4, 1]);
        let opposing = red_overflow(&t, &x);
        assert_eq!(opposing, edges(&[5, 6, 2]));
        assert!(bad_edges(&t, &x, &opposing).is_empty());

        let t = red_majority_committee();
        let x = edges(&[2]);
        let opposing = red_overflow(&t, &x);
        assert_eq!(opposing, edges(&[3, 4, 1]));
        // c1's outgoing edge lies in the red overflow, so b1 -> c1 is bad
        assert_eq!(bad_edges(&t, &x, &opposing), x);
    }

    #[test]
    fn remove_bad_edges_examples() {
        let t = two_committees();
        let x = edges(&[3, 4, 1]);
        let red = remove_bad_edges(&t, &x).unwrap();
        assert_eq!(red.edges, x);
        assert_eq!(red.opposing_flow, edges(&[5, 6, 2]));
        assert_eq!(red.root_accumulation, 0);

        let t = blue_majority_committee();
        let x = edges(&[2, 3, 1]);
        let red = remove_bad_edges(&t, &x).unwrap();
        assert_eq!(red.edges, x);
        assert_eq!(red.opposing_flow, edges(&[4]));
        assert_eq!(red.root_accumulation, 1);
        assert!(blockage_ok(&t, &red.edges, Party::Blue, true));

        // empty input fails the hypothesis whenever red flow reaches the root
        let t = two_leaf_tie();
        assert!(matches!(
            remove_bad_edges(&t, &EdgeSet::new()),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn find_certificate_examples() {
        let t = blue_majority_star();
        let cert = find_certificate(&t).unwrap();
        assert_eq!(cert.kind, CertificateKind::StrongBlue);
        assert_eq!(cert.edges, edges(&[1, 2]));
        assert_eq!(cert.root_accumulation, 1);

        let t = two_leaf_tie();
        let cert = find_certificate(&t).unwrap();
        assert_eq!(cert.kind, CertificateKind::Red);
        assert_eq!(cert.edges, edges(&[2]));
        assert_eq!(cert.root_accumulation, 0);

        let t = two_committees();
        let cert = find_certificate(&t).unwrap();
        assert_eq!(cert.kind, CertificateKind::Red);
        assert_eq!(cert.edges, edges(&[5, 6, 2]));
    }

    #[test]
    fn verify_certificate_examples() {
        let t = two_leaf_tie();
        let good = Certificate {
            kind: CertificateKind::Red,
            edges: edges(&[2]),
            opposing_flow: edges(&[1]),
            root_accumulation: 0,
        };
        assert!(verify_certificate(&t, &good).pass());

        let bad = Certificate {
            kind: CertificateKind::StrongBlue,
            edges: edges(&[1]),
            opposing_flow: edges(&[2]),
            root_accumulation: 0,
        };
        let report = verify_certificate(&t, &bad);
        assert!(!report.pass());
        assert!(report.failures().any(|item| item.name == "root-strength"));

        let t = blue_majority_star();
        let cert = find_certificate(&t).unwrap();
        assert!(verify_certificate(&t, &cert).pass());
    }

    #[test]
    fn certificate_kind_matches_vote_on_fixtures() {
        for t in [
            two_leaf_tie(),
            two_committees(),
            blue_majority_star(),
            red_majority_committee(),
            blue_majority_committee(),
        ] {
            let vote = t.vote_outcome().unwrap().result;
            let cert = find_certificate(&t).unwrap();
            match cert.kind {
                CertificateKind::StrongBlue => assert_eq!(vote, VoteResult::Blue),
                CertificateKind::Red => assert_ne!(vote, VoteResult::Blue),
            }
        }
    }

    #[test]
    fn find_certificate_handles_open_frontier() {
        let t = open_path_with_blue();
        let cert = find_certificate(&t).unwrap();
        assert_eq!(cert.kind, CertificateKind::StrongBlue);
        assert!(verify_certificate(&t, &cert).pass());
    }
}
