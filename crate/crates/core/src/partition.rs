//! Blockage-driven construction of federated packings and coverings for a
//! tree of matroid pairs, the partition driver, and end-to-end
//! intersection certificates cross-checked against the classical baseline.
//!
//! Each ground element is decided by a voting game: the matroid tree is
//! re-rooted at the node owning the element and every node receives
//! `|K(t)|` party leaves, blue where `K(t) < 0` and red where `K(t) > 0`,
//! with `K(t)` the rank surplus of N over M. A red blockage turns into a
//! federated packing containing the element; a strong blue blockage turns
//! into a federated covering via the node-wise dual pair. All spanning
//! claims are re-verified through the rank oracles before anything is
//! returned.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;

use crate::blockage::{blockage_ok, find_certificate, CertificateKind};
use crate::committee_tree::{CommitteeTree, EdgeSet, Party, Vertex};
use crate::error::{Error, Result};
use crate::intersect::{classical_intersection, IntersectionTriple};
use crate::matroid::{Elem, ElemSet, MatroidTreePair};
use crate::matroid::{verify_covering, verify_packing};

/// Rank surplus `K(t)` of the N side over the M side at a node; equals
/// `|E(t)| - r(M(t)) - r(N*(t))`.
pub fn k_value(pair: &MatroidTreePair, t: usize) -> i64 {
    pair.rank_n(t) as i64 - pair.rank_m(t) as i64
}

/// The matroid tree re-rooted at the node owning a query element, with the
/// committee tree obtained by sticking `|K(t)|` party leaves onto each
/// node. Committee vertices `0..node_count` are the matroid nodes in BFS
/// order from the root node; party leaves follow.
#[derive(Debug, Clone)]
pub struct AugmentedTree {
    pub pair: MatroidTreePair,
    pub committee: CommitteeTree,
    pub root_node: usize,
    /// matroid node -> committee vertex
    pub node_vertex: Vec<Vertex>,
    /// committee vertex -> matroid node (None for party leaves)
    pub vertex_node: Vec<Option<usize>>,
    /// per matroid node
    pub k: Vec<i64>,
}

impl AugmentedTree {
    /// The same tree seen through the node-wise dual pair: both ranks are
    /// complemented, `K` flips sign, and the parties swap.
    pub fn dual_view(&self) -> AugmentedTree {
        AugmentedTree {
            pair: self.pair.dualized(),
            committee: self.committee.party_swapped(),
            root_node: self.root_node,
            node_vertex: self.node_vertex.clone(),
            vertex_node: self.vertex_node.clone(),
            k: self.k.iter().map(|k| -k).collect(),
        }
    }
}

/// Builds the augmented tree for a query element.
pub fn build_augmented_tree(pair: &MatroidTreePair, e: Elem) -> Result<AugmentedTree> {
    let root_node = pair.owner_of(e).ok_or_else(|| {
        Error::Input(format!(
            "query element is not in the ground set: {}",
            pair.names().name(e)
        ))
    })?;
    let n = pair.node_count();
    let k: Vec<i64> = (0..n).map(|t| k_value(pair, t)).collect();

    let mut node_vertex = vec![usize::MAX; n];
    let mut vertex_node: Vec<Option<usize>> = Vec::with_capacity(n);
    let mut parent: Vec<Option<Vertex>> = Vec::with_capacity(n);
    let mut seen = vec![false; n];
    seen[root_node] = true;
    let mut queue = VecDeque::from([(root_node, None::<Vertex>)]);
    while let Some((t, pv)) = queue.pop_front() {
        let v = parent.len();
        node_vertex[t] = v;
        vertex_node.push(Some(t));
        parent.push(pv);
        for &(s, _) in pair.neighbors(t) {
            if !seen[s] {
                seen[s] = true;
                queue.push_back((s, Some(v)));
            }
        }
    }

    let mut blue = BTreeSet::new();
    let mut red = BTreeSet::new();
    for v in 0..n {
        let t = vertex_node[v].expect("node vertex");
        for _ in 0..k[t].unsigned_abs() {
            let leaf = parent.len();
            parent.push(Some(v));
            vertex_node.push(None);
            if k[t] < 0 {
                blue.insert(leaf);
            } else {
                red.insert(leaf);
            }
        }
    }
    let committee = CommitteeTree::new(parent, blue, red, BTreeSet::new())?;
    Ok(AugmentedTree {
        pair: pair.clone(),
        committee,
        root_node,
        node_vertex,
        vertex_node,
        k,
    })
}

/// Colour of a node in the packing construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NodeColor {
    Green,
    Yellow,
}

impl fmt::Display for NodeColor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NodeColor::Green => write!(f, "green"),
            NodeColor::Yellow => write!(f, "yellow"),
        }
    }
}

/// A verified federated packing. Node references use the tags of the
/// originally built pair, so certificates computed on minors stay
/// meaningful.
#[derive(Debug, Clone)]
pub struct PackingCertificate {
    /// Downclosed node set whose real elements form the packing.
    pub u_nodes: BTreeSet<usize>,
    /// The packing: all real elements of the `u_nodes`.
    pub p: ElemSet,
    /// Disjoint spanning witnesses (real elements only).
    pub s_m: ElemSet,
    pub s_n: ElemSet,
    pub colors: BTreeMap<usize, NodeColor>,
    /// Diagnostics: blue-free nodes, frontier dummies, and incoming
    /// blockage dummies per node.
    pub z: BTreeSet<usize>,
    pub f: ElemSet,
    pub r_t: BTreeMap<usize, ElemSet>,
}

/// A verified federated covering, built as a packing of the dual pair.
#[derive(Debug, Clone)]
pub struct CoveringCertificate {
    pub q: ElemSet,
    pub d_m: ElemSet,
    pub d_n: ElemSet,
    pub inner: PackingCertificate,
}

/// Turns a verifying red blockage on the augmented tree into a federated
/// packing for the pair `(M, N*)`.
pub fn packing_from_red_blockage(
    aug: &AugmentedTree,
    x_r: &EdgeSet,
) -> Result<PackingCertificate> {
    let tree = &aug.committee;
    let pair = &aug.pair;
    if !blockage_ok(tree, x_r, Party::Red, false) {
        return Err(Error::Precondition(
            "edge set does not verify as a red blockage on the augmented tree".into(),
        ));
    }
    let n = pair.node_count();

    // blue_above[v]: some blue leaf sits strictly above the node vertex v
    // (its own attached leaves included). Node vertices are 0..n in BFS
    // order, so children have larger ids.
    let mut blue_above = vec![false; n];
    for v in (0..n).rev() {
        let t = aug.vertex_node[v].expect("node vertex");
        let mut above = aug.k[t] < 0;
        for &c in tree.children(v) {
            if c < n {
                above = above || blue_above[c];
            }
        }
        blue_above[v] = above;
    }

    // U starts as the downclosure of the nodes touched by the blockage and
    // then absorbs blue-free cones along supported paths: a blue-free node
    // joins once its parent is in U (the root joins unconditionally).
    // Growing cone-by-cone keeps every adopted node frontier-free, which
    // the literal union of the downclosures does not.
    let mut in_u = vec![false; n];
    for s in x_r.iter() {
        let mut v = if s < n {
            s
        } else {
            tree.parent(s).expect("leaf has a parent")
        };
        loop {
            if in_u[v] {
                break;
            }
            in_u[v] = true;
            match tree.parent(v) {
                Some(p) => v = p,
                None => break,
            }
        }
    }
    loop {
        let mut changed = false;
        for v in 0..n {
            if in_u[v] || blue_above[v] {
                continue;
            }
            let supported = match tree.parent(v) {
                None => true,
                Some(p) => in_u[p],
            };
            if supported {
                in_u[v] = true;
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    if !in_u[0] {
        return Err(Error::Contract(
            "the packing node set misses the root node".into(),
        ));
    }
    let u_vertices: Vec<Vertex> = (0..n).filter(|&v| in_u[v]).collect();

    // incoming blockage dummies and frontier dummies per node vertex
    let mut r_dummies: BTreeMap<Vertex, ElemSet> = BTreeMap::new();
    for s in x_r.iter() {
        if s < n {
            let target = tree.parent(s).expect("non-root source");
            let s_node = aug.vertex_node[s].expect("node vertex");
            let t_node = aug.vertex_node[target].expect("node vertex");
            let dummy = pair
                .neighbors(t_node)
                .iter()
                .find(|(other, _)| *other == s_node)
                .map(|(_, d)| *d)
                .expect("adjacent nodes share a dummy");
            r_dummies.entry(target).or_default().insert(dummy);
        }
    }
    let mut f_dummies: BTreeMap<Vertex, ElemSet> = BTreeMap::new();
    for &v in &u_vertices {
        let t = aug.vertex_node[v].expect("node vertex");
        let set: ElemSet = pair
            .neighbors(t)
            .iter()
            .filter(|(s, _)| !in_u[aug.node_vertex[*s]])
            .map(|(_, d)| *d)
            .collect();
        if !set.is_empty() {
            f_dummies.insert(v, set);
        }
    }

    let empty = ElemSet::new();
    for &v in &u_vertices {
        let t = aug.vertex_node[v].expect("node vertex");
        let r_len = r_dummies.get(&v).unwrap_or(&empty).len() as i64;
        let f_len = f_dummies.get(&v).unwrap_or(&empty).len() as i64;
        if aug.k[t] + r_len < f_len {
            return Err(Error::Feasibility(format!(
                "node {}: K {} plus {} incoming blockage dummies cannot pay for {} frontier dummies",
                pair.node_tag(t),
                aug.k[t],
                r_len,
                f_len
            )));
        }
    }

    // root is green; colours agree across blockage edges and flip otherwise
    let mut colors: BTreeMap<Vertex, NodeColor> = BTreeMap::new();
    for &v in &u_vertices {
        let color = match tree.parent(v) {
            None => NodeColor::Green,
            Some(p) => {
                let parent_color = colors[&p];
                if x_r.contains(v) {
                    parent_color
                } else {
                    match parent_color {
                        NodeColor::Green => NodeColor::Yellow,
                        NodeColor::Yellow => NodeColor::Green,
                    }
                }
            }
        };
        colors.insert(v, color);
    }

    // good-node recursion; every node must end up good, otherwise the
    // blockage would contain a ray
    let mut good: BTreeMap<Vertex, bool> = u_vertices.iter().map(|v| (*v, false)).collect();
    for (&v, flag) in good.iter_mut() {
        if colors[&v] == NodeColor::Yellow {
            *flag = true;
        }
    }
    loop {
        let mut changed = false;
        for &v in &u_vertices {
            if good[&v] {
                continue;
            }
            let uppers_good = tree
                .children(v)
                .iter()
                .filter(|c| **c < n && in_u[**c])
                .all(|c| good[c]);
            let ok = if x_r.contains(v) {
                uppers_good
            } else {
                let parent_good = match tree.parent(v) {
                    None => true,
                    Some(p) => good[&p],
                };
                uppers_good && parent_good
            };
            if ok {
                good.insert(v, true);
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    if let Some((&v, _)) = good.iter().find(|(_, g)| !**g) {
        return Err(Error::Contract(format!(
            "good-node recursion failed at node {}; the blockage contains a ray",
            pair.node_tag(aug.vertex_node[v].expect("node vertex"))
        )));
    }

    // per-node spanning witnesses
    let mut p = ElemSet::new();
    let mut s_m = ElemSet::new();
    let mut s_n = ElemSet::new();
    for &v in &u_vertices {
        let t = aug.vertex_node[v].expect("node vertex");
        let tag = pair.node_tag(t);
        let ground = pair.ground(t);
        let r_t = r_dummies.get(&v).unwrap_or(&empty);
        let quota_m = pair.rank_m(t).checked_sub(r_t.len()).ok_or_else(|| {
            Error::Feasibility(format!(
                "node {tag}: more incoming blockage dummies than the M rank"
            ))
        })?;
        let quota_n = ground
            .len()
            .checked_sub(r_t.len() + pair.rank_n(t))
            .ok_or_else(|| {
                Error::Feasibility(format!(
                    "node {tag}: more incoming blockage dummies than the N corank"
                ))
            })?;

        // the dummy towards the parent is excluded from both witnesses
        // when the node's outgoing edge lies in the blockage
        let excluded: Option<Elem> = if x_r.contains(v) {
            let p_vertex = tree.parent(v).expect("blockage source is not the root");
            let p_node = aug.vertex_node[p_vertex].expect("node vertex");
            pair.neighbors(t)
                .iter()
                .find(|(s, _)| *s == p_node)
                .map(|(_, d)| *d)
        } else {
            None
        };

        let placeable: ElemSet = pair
            .neighbors(t)
            .iter()
            .filter(|(s, _)| in_u[aug.node_vertex[*s]])
            .map(|(_, d)| *d)
            .filter(|d| !r_t.contains(d) && Some(*d) != excluded)
            .collect();
        let color = colors[&v];
        let dummy_quota = match color {
            NodeColor::Green => quota_m,
            NodeColor::Yellow => quota_n,
        };
        if placeable.len() > dummy_quota {
            return Err(Error::Feasibility(format!(
                "node {tag}: {} dummies exceed the {color} quota {dummy_quota}",
                placeable.len()
            )));
        }

        let reals = pair.node_reals(t);
        let mut real_iter = reals.iter().copied();
        let mut fill = |base: ElemSet, quota: usize| -> Result<ElemSet> {
            let mut out = base;
            while out.len() < quota {
                match real_iter.next() {
                    Some(e) => {
                        out.insert(e);
                    }
                    None => {
                        return Err(Error::Feasibility(format!(
                            "node {tag}: not enough elements to fill the spanning witnesses"
                        )))
                    }
                }
            }
            Ok(out)
        };
        let (set_m, set_n) = match color {
            NodeColor::Green => {
                let m = fill(placeable, quota_m)?;
                let n_set = fill(ElemSet::new(), quota_n)?;
                (m, n_set)
            }
            NodeColor::Yellow => {
                let n_set = fill(placeable, quota_n)?;
                let m = fill(ElemSet::new(), quota_m)?;
                (m, n_set)
            }
        };
        p.extend(reals.iter().copied());
        s_m.extend(set_m.iter().filter(|e| pair.reals().contains(e)));
        s_n.extend(set_n.iter().filter(|e| pair.reals().contains(e)));
    }

    let certificate = PackingCertificate {
        u_nodes: u_vertices
            .iter()
            .map(|v| pair.node_tag(aug.vertex_node[*v].expect("node vertex")))
            .collect(),
        p,
        s_m,
        s_n,
        colors: colors
            .iter()
            .map(|(v, c)| (pair.node_tag(aug.vertex_node[*v].expect("node vertex")), *c))
            .collect(),
        z: (0..n)
            .filter(|&v| !blue_above[v])
            .map(|v| pair.node_tag(aug.vertex_node[v].expect("node vertex")))
            .collect(),
        f: f_dummies.values().flat_map(|s| s.iter().copied()).collect(),
        r_t: r_dummies
            .iter()
            .map(|(v, set)| {
                (
                    pair.node_tag(aug.vertex_node[*v].expect("node vertex")),
                    set.clone(),
                )
            })
            .collect(),
    };
    let report = verify_packing(
        &pair.m_side(),
        &pair.n_dual(),
        &certificate.p,
        &certificate.s_m,
        &certificate.s_n,
    );
    if !report.pass() {
        return Err(Error::Contract(format!(
            "constructed packing fails verification: {}",
            report.failure_summary()
        )));
    }
    Ok(certificate)
}

/// Turns a verifying strong blue blockage into a federated covering for
/// `(M, N*)` by running the packing construction on the node-wise dual
/// pair (where the blockage reads as a red one).
pub fn covering_from_strong_blue(
    aug: &AugmentedTree,
    x_b: &EdgeSet,
) -> Result<CoveringCertificate> {
    if !blockage_ok(&aug.committee, x_b, Party::Blue, true) {
        return Err(Error::Precondition(
            "edge set does not verify as a strong blue blockage on the augmented tree".into(),
        ));
    }
    let dual = aug.dual_view();
    let inner = packing_from_red_blockage(&dual, x_b)?;
    let certificate = CoveringCertificate {
        q: inner.p.clone(),
        d_m: inner.s_m.clone(),
        d_n: inner.s_n.clone(),
        inner,
    };
    // independent route: the dual-rank formula on the original pair
    let report = verify_covering(
        &aug.pair.m_side(),
        &aug.pair.n_dual(),
        &certificate.q,
        &certificate.d_m,
        &certificate.d_n,
    );
    if !report.pass() {
        return Err(Error::Contract(format!(
            "constructed covering fails verification: {}",
            report.failure_summary()
        )));
    }
    Ok(certificate)
}

/// Either certificate for a single ground element.
#[derive(Debug, Clone)]
pub enum ElementCertificate {
    Packing(PackingCertificate),
    Covering(CoveringCertificate),
}

/// Runs the voting game for an element and dispatches on the certificate
/// kind. The returned set always contains the element.
pub fn packing_or_covering_for_element(
    pair: &MatroidTreePair,
    e: Elem,
) -> Result<ElementCertificate> {
    let aug = build_augmented_tree(pair, e)?;
    let cert = find_certificate(&aug.committee)?;
    let out = match cert.kind {
        CertificateKind::Red => {
            ElementCertificate::Packing(packing_from_red_blockage(&aug, &cert.edges)?)
        }
        CertificateKind::StrongBlue => {
            ElementCertificate::Covering(covering_from_strong_blue(&aug, &cert.edges)?)
        }
    };
    let contains = match &out {
        ElementCertificate::Packing(c) => c.p.contains(&e),
        ElementCertificate::Covering(c) => c.q.contains(&e),
    };
    if !contains {
        return Err(Error::Contract(
            "element certificate does not contain the query element".into(),
        ));
    }
    Ok(out)
}

/// Accumulated result of greedily merging packings until no element of the
/// remaining components yields one.
struct Saturation {
    elements: ElemSet,
    s_m: ElemSet,
    s_n: ElemSet,
    nodes: BTreeSet<usize>,
    colors: BTreeMap<usize, NodeColor>,
    leftovers: Vec<MatroidTreePair>,
}

/// Greedy packing saturation: query the smallest unassigned element; a
/// packing is merged the moment it is found (removing its nodes splits the
/// pair into components), a covering defers the element. Terminates since
/// every merge removes at least the queried element's node.
fn saturate_packings(start: MatroidTreePair) -> Result<Saturation> {
    let mut comps = vec![start];
    let mut acc = Saturation {
        elements: ElemSet::new(),
        s_m: ElemSet::new(),
        s_n: ElemSet::new(),
        nodes: BTreeSet::new(),
        colors: BTreeMap::new(),
        leftovers: Vec::new(),
    };
    'outer: loop {
        let mut queries: Vec<(Elem, usize)> = comps
            .iter()
            .enumerate()
            .flat_map(|(i, c)| c.reals().iter().map(move |e| (*e, i)))
            .collect();
        queries.sort_unstable();
        for (e, idx) in queries {
            match packing_or_covering_for_element(&comps[idx], e)? {
                ElementCertificate::Packing(cert) => {
                    acc.elements.extend(cert.p.iter().copied());
                    acc.s_m.extend(cert.s_m.iter().copied());
                    acc.s_n.extend(cert.s_n.iter().copied());
                    acc.nodes.extend(cert.u_nodes.iter().copied());
                    acc.colors.extend(cert.colors.iter().map(|(t, c)| (*t, *c)));
                    let comp = comps.swap_remove(idx);
                    let local: BTreeSet<usize> = (0..comp.node_count())
                        .filter(|t| cert.u_nodes.contains(&comp.node_tag(*t)))
                        .collect();
                    comps.extend(comp.remove_nodes(&local));
                    continue 'outer;
                }
                ElementCertificate::Covering(_) => continue,
            }
        }
        break;
    }
    acc.leftovers = comps;
    Ok(acc)
}

/// The two sides of a verified partition of the ground set.
#[derive(Debug, Clone)]
pub struct PartitionSides {
    pub p: ElemSet,
    pub s_m: ElemSet,
    pub s_n: ElemSet,
    pub p_nodes: BTreeSet<usize>,
    pub p_colors: BTreeMap<usize, NodeColor>,
    pub q: ElemSet,
    pub d_m: ElemSet,
    pub d_n: ElemSet,
    pub q_nodes: BTreeSet<usize>,
    pub q_colors: BTreeMap<usize, NodeColor>,
}

/// Partitions the ground set into a maximal federated packing `P` and the
/// covering `Q = E \ P`, both with explicit spanning witnesses, verified
/// against the original pair.
pub fn partition_packing_covering(pair: &MatroidTreePair) -> Result<PartitionSides> {
    let hypothesis = pair.hypothesis_report();
    if !hypothesis.pass() {
        return Err(Error::Precondition(format!(
            "rank/corank hypothesis fails: {}",
            hypothesis.failure_summary()
        )));
    }

    let packing = saturate_packings(pair.clone())?;
    let mut sides = PartitionSides {
        p: packing.elements,
        s_m: packing.s_m,
        s_n: packing.s_n,
        p_nodes: packing.nodes,
        p_colors: packing.colors,
        q: ElemSet::new(),
        d_m: ElemSet::new(),
        d_n: ElemSet::new(),
        q_nodes: BTreeSet::new(),
        q_colors: BTreeMap::new(),
    };

    // remaining components admit no packing through any element; cover
    // them through the dual pair, component by component (direct sum)
    for comp in packing.leftovers {
        if comp.reals().is_empty() {
            continue;
        }
        let covering = saturate_packings(comp.dualized())?;
        for rest in &covering.leftovers {
            if !rest.reals().is_empty() {
                return Err(Error::Contract(format!(
                    "covering phase left elements {{{}}} without a certificate",
                    pair.names().render(rest.reals())
                )));
            }
        }
        sides.q.extend(covering.elements.iter().copied());
        sides.d_m.extend(covering.s_m.iter().copied());
        sides.d_n.extend(covering.s_n.iter().copied());
        sides.q_nodes.extend(covering.nodes.iter().copied());
        sides
            .q_colors
            .extend(covering.colors.iter().map(|(t, c)| (*t, *c)));
    }

    let union: ElemSet = sides.p.union(&sides.q).copied().collect();
    if !sides.p.is_disjoint(&sides.q) || union != *pair.reals() {
        return Err(Error::Contract(
            "packing and covering do not partition the ground set".into(),
        ));
    }
    let m = pair.m_side();
    let n_dual = pair.n_dual();
    let packing_report = verify_packing(&m, &n_dual, &sides.p, &sides.s_m, &sides.s_n);
    if !packing_report.pass() {
        return Err(Error::Contract(format!(
            "final packing fails verification: {}",
            packing_report.failure_summary()
        )));
    }
    let covering_report = verify_covering(&m, &n_dual, &sides.q, &sides.d_m, &sides.d_n);
    if !covering_report.pass() {
        return Err(Error::Contract(format!(
            "final covering fails verification: {}",
            covering_report.failure_summary()
        )));
    }
    Ok(sides)
}

/// A partition certificate together with the intersection triple from the
/// classical baseline; both artifacts are verified independently.
#[derive(Debug, Clone)]
pub struct PartitionCertificate {
    pub sides: PartitionSides,
    pub triple: IntersectionTriple,
}

pub fn intersection_certificate(pair: &MatroidTreePair) -> Result<PartitionCertificate> {
    let sides = partition_packing_covering(pair)?;
    let triple = classical_intersection(&pair.m_side(), &pair.n_side())?;
    Ok(PartitionCertificate { sides, triple })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{single_node_rank_two_one, two_node_rank_one_pair};

    fn elem(pair: &MatroidTreePair, name: &str) -> Elem {
        pair.elem(name).unwrap_or_else(|| panic!("element {name}"))
    }

    fn names(pair: &MatroidTreePair, set: &ElemSet) -> String {
        pair.names().render(set)
    }

    #[test]
    fn k_value_examples() {
        let pair = two_node_rank_one_pair();
        assert_eq!(k_value(&pair, 0), 0);
        assert_eq!(k_value(&pair, 1), 0);
        let pair = single_node_rank_two_one();
        assert_eq!(k_value(&pair, 0), -1);
        let wide = MatroidTreePair::build(vec![(vec!["a", "b", "c", "d"], 1, 2)], vec![]).unwrap();
        assert_eq!(k_value(&wide, 0), 1);
    }

    #[test]
    fn augmented_tree_examples() {
        let pair = two_node_rank_one_pair();
        let aug = build_augmented_tree(&pair, elem(&pair, "a")).unwrap();
        assert_eq!(aug.root_node, 0);
        assert!(aug.committee.blue_leaves().is_empty());
        assert!(aug.committee.red_leaves().is_empty());
        assert_eq!(aug.committee.vertex_count(), 2);

        let pair = single_node_rank_two_one();
        let aug = build_augmented_tree(&pair, elem(&pair, "x1")).unwrap();
        assert_eq!(aug.committee.vertex_count(), 2);
        assert_eq!(aug.committee.blue_leaves().len(), 1);

        // K = (-1, +2) along a two-node path
        let pair = MatroidTreePair::build(
            vec![
                (vec!["a1", "a2", "a3", "g"], 2, 1),
                (vec!["g", "b1", "b2", "b3", "b4"], 1, 3),
            ],
            vec![(0, 1, "g")],
        )
        .unwrap();
        let aug = build_augmented_tree(&pair, elem(&pair, "a1")).unwrap();
        assert_eq!(aug.committee.blue_leaves().len(), 1);
        assert_eq!(aug.committee.red_leaves().len(), 2);
    }

    #[test]
    fn packing_on_two_node_pair() {
        let pair = two_node_rank_one_pair();
        let aug = build_augmented_tree(&pair, elem(&pair, "a")).unwrap();
        let cert = packing_from_red_blockage(&aug, &EdgeSet::new()).unwrap();
        assert_eq!(cert.u_nodes, BTreeSet::from([0, 1]));
        assert_eq!(names(&pair, &cert.p), "a b");
        assert_eq!(names(&pair, &cert.s_m), "b");
        assert_eq!(names(&pair, &cert.s_n), "a");
        assert_eq!(cert.colors[&0], NodeColor::Green);
        assert_eq!(cert.colors[&1], NodeColor::Yellow);
    }

    #[test]
    fn packing_rejects_non_verifying_blockage() {
        let pair = single_node_rank_two_one();
        let aug = build_augmented_tree(&pair, elem(&pair, "x1")).unwrap();
        // the blue vote wins here; the empty set is not a red blockage
        assert!(matches!(
            packing_from_red_blockage(&aug, &EdgeSet::new()),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn covering_on_single_node_pair() {
        let pair = single_node_rank_two_one();
        let aug = build_augmented_tree(&pair, elem(&pair, "x1")).unwrap();
        let x_b = EdgeSet::from_sources([1]);
        let cert = covering_from_strong_blue(&aug, &x_b).unwrap();
        assert_eq!(names(&pair, &cert.q), "x1 x2 x3");
        assert_eq!(names(&pair, &cert.d_m), "x1");
        assert_eq!(names(&pair, &cert.d_n), "x2");
    }

    #[test]
    fn covering_rejects_wrong_kind() {
        let pair = single_node_rank_two_one();
        let aug = build_augmented_tree(&pair, elem(&pair, "x1")).unwrap();
        // a red-side set is not a strong blue blockage
        assert!(matches!(
            covering_from_strong_blue(&aug, &EdgeSet::new()),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn element_dispatch() {
        let pair = two_node_rank_one_pair();
        match packing_or_covering_for_element(&pair, elem(&pair, "a")).unwrap() {
            ElementCertificate::Packing(c) => assert_eq!(names(&pair, &c.p), "a b"),
            ElementCertificate::Covering(_) => panic!("expected a packing"),
        }
        let pair = single_node_rank_two_one();
        match packing_or_covering_for_element(&pair, elem(&pair, "x2")).unwrap() {
            ElementCertificate::Covering(c) => assert_eq!(names(&pair, &c.q), "x1 x2 x3"),
            ElementCertificate::Packing(_) => panic!("expected a covering"),
        }
    }

    #[test]
    fn partition_on_fixtures() {
        let pair = two_node_rank_one_pair();
        let sides = partition_packing_covering(&pair).unwrap();
        assert_eq!(names(&pair, &sides.p), "a b");
        assert!(sides.q.is_empty());

        let pair = single_node_rank_two_one();
        let sides = partition_packing_covering(&pair).unwrap();
        assert!(sides.p.is_empty());
        assert_eq!(names(&pair, &sides.q), "x1 x2 x3");
        assert_eq!(names(&pair, &sides.d_m), "x1");
        assert_eq!(names(&pair, &sides.d_n), "x2");
    }

    #[test]
    fn partition_requires_hypothesis() {
        let bad = MatroidTreePair::build(
            vec![(vec!["a", "g"], 1, 1), (vec!["g", "b"], 2, 1)],
            vec![(0, 1, "g")],
        )
        .unwrap();
        assert!(matches!(
            partition_packing_covering(&bad),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn intersection_certificates_on_fixtures() {
        let pair = two_node_rank_one_pair();
        let cert = intersection_certificate(&pair).unwrap();
        assert_eq!(names(&pair, &cert.triple.common_independent), "a");
        assert_eq!(names(&pair, &cert.triple.j_m), "a");
        assert!(cert.triple.j_n.is_empty());

        let pair = single_node_rank_two_one();
        let cert = intersection_certificate(&pair).unwrap();
        assert_eq!(names(&pair, &cert.triple.common_independent), "x1");
        assert!(cert.triple.j_m.is_empty());
        assert_eq!(names(&pair, &cert.triple.j_n), "x1");
    }

    #[test]
    fn dualized_pair_swaps_packing_and_covering() {
        let pair = single_node_rank_two_one();
        let sides = partition_packing_covering(&pair).unwrap();
        let dual_sides = partition_packing_covering(&pair.dualized()).unwrap();
        assert_eq!(sides.p, dual_sides.q);
        assert_eq!(sides.q, dual_sides.p);
    }
}
