//! Classical matroid intersection over two independence oracles, with the
//! certificate triple extracted from the final exchange-graph cut.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use crate::error::{Error, Result};
use crate::matroid::{Elem, ElemSet, MatroidTree};
use crate::report::CheckReport;

/// A maximum common independent set `I` partitioned as `j_m ∪ j_n` with
/// `cl_M(j_m) ∪ cl_N(j_n) = E`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntersectionTriple {
    pub common_independent: ElemSet,
    pub j_m: ElemSet,
    pub j_n: ElemSet,
}

/// Checks the triple invariants against the two matroids.
pub fn verify_triple(m: &MatroidTree, n: &MatroidTree, triple: &IntersectionTriple) -> CheckReport {
    let mut report = CheckReport::new();
    let i = &triple.common_independent;
    report.check(
        "independent-in-both",
        m.is_independent(i).unwrap_or(false) && n.is_independent(i).unwrap_or(false),
        "",
    );
    let union: ElemSet = triple.j_m.union(&triple.j_n).copied().collect();
    report.check(
        "partition",
        triple.j_m.is_disjoint(&triple.j_n) && union == *i,
        "j_m and j_n must partition the common independent set",
    );
    let covered = match (m.closure(&triple.j_m), n.closure(&triple.j_n)) {
        (Ok(cm), Ok(cn)) => {
            let mut c = cm;
            c.extend(cn.iter().copied());
            c == *m.reals()
        }
        _ => false,
    };
    report.check("closures-cover", covered, "cl_M(j_m) ∪ cl_N(j_n) must be E");
    report
}

/// Augmenting-path matroid intersection (shortest exchange paths). Returns
/// a maximum common independent set together with the partition extracted
/// from the final reachability cut; the triple is verified before it is
/// returned.
pub fn classical_intersection(m: &MatroidTree, n: &MatroidTree) -> Result<IntersectionTriple> {
    if m.reals() != n.reals() {
        return Err(Error::Input(
            "the two matroids must share one ground set".into(),
        ));
    }
    let ground: Vec<Elem> = m.reals().iter().copied().collect();
    let mut common = ElemSet::new();

    loop {
        // sources: addable on the M side; sinks: addable on the N side
        let mut addable_m = ElemSet::new();
        let mut addable_n = ElemSet::new();
        for &e in &ground {
            if common.contains(&e) {
                continue;
            }
            let mut with = common.clone();
            with.insert(e);
            if m.is_independent(&with)? {
                addable_m.insert(e);
            }
            if n.is_independent(&with)? {
                addable_n.insert(e);
            }
        }

        // BFS over exchange arcs, shortest paths only
        let mut parent: BTreeMap<Elem, Option<Elem>> = BTreeMap::new();
        let mut queue = VecDeque::new();
        for &e in &addable_m {
            parent.insert(e, None);
            queue.push_back(e);
        }
        let mut augment_end = None;
        'bfs: while let Some(v) = queue.pop_front() {
            if addable_n.contains(&v) {
                augment_end = Some(v);
                break 'bfs;
            }
            if common.contains(&v) {
                // arcs y -> x: swapping y for x keeps the M side independent
                for &x in &ground {
                    if common.contains(&x) || parent.contains_key(&x) {
                        continue;
                    }
                    let mut swapped = common.clone();
                    swapped.remove(&v);
                    swapped.insert(x);
                    if m.is_independent(&swapped)? {
                        parent.insert(x, Some(v));
                        queue.push_back(x);
                    }
                }
            } else {
                // arcs x -> y: swapping y for x keeps the N side independent
                for &y in &common {
                    if parent.contains_key(&y) {
                        continue;
                    }
                    let mut swapped = common.clone();
                    swapped.remove(&y);
                    swapped.insert(v);
                    if n.is_independent(&swapped)? {
                        parent.insert(y, Some(v));
                        queue.push_back(y);
                    }
                }
            }
        }

        match augment_end {
            Some(mut v) => {
                loop {
                    if common.contains(&v) {
                        common.remove(&v);
                    } else {
                        common.insert(v);
                    }
                    match parent[&v] {
                        Some(p) => v = p,
                        None => break,
                    }
                }
            }
            None => {
                // the unreachable side of the cut is spanned by I on the M
                // side, the reachable side by I on the N side
                let reachable: ElemSet = parent.keys().copied().collect();
                let j_m: ElemSet = common.difference(&reachable).copied().collect();
                let j_n: ElemSet = common.intersection(&reachable).copied().collect();
                let triple = IntersectionTriple {
                    common_independent: common,
                    j_m,
                    j_n,
                };
                let report = verify_triple(m, n, &triple);
                if !report.pass() {
                    return Err(Error::Contract(format!(
                        "intersection triple failed verification: {}",
                        report.failure_summary()
                    )));
                }
                return Ok(triple);
            }
        }
    }
}

/// Exhaustive maximum common independent set size, for use as a test
/// oracle on small ground sets.
pub fn exhaustive_max_common_independent(m: &MatroidTree, n: &MatroidTree) -> Result<usize> {
    let ground: Vec<Elem> = m.reals().iter().copied().collect();
    if ground.len() > 20 {
        return Err(Error::Guard(
            "exhaustive intersection oracle is limited to 20 elements".into(),
        ));
    }
    let mut best = 0usize;
    for mask in 0u32..(1 << ground.len()) {
        let size = mask.count_ones() as usize;
        if size <= best {
            continue;
        }
        let s: ElemSet = ground
            .iter()
            .enumerate()
            .filter(|(i, _)| mask & (1 << i) != 0)
            .map(|(_, e)| *e)
            .collect();
        if m.is_independent(&s)? && n.is_independent(&s)? {
            best = size;
        }
    }
    Ok(best)
}
