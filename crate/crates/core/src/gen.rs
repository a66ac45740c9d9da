//! Seeded random instance generation. All generators are deterministic
//! functions of the provided RNG, so a fixed seed reproduces the instance
//! byte for byte.

use std::collections::BTreeSet;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha12Rng;

use crate::committee_tree::{CommitteeTree, EdgeSet};
use crate::error::{Error, Result};
use crate::matroid::MatroidTreePair;
use crate::truncation::{LeafMark, PeriodicTreeSpec, StateSpec};

pub fn rng_from_seed(seed: u64) -> ChaCha12Rng {
    ChaCha12Rng::seed_from_u64(seed)
}

/// Uniform random recursive tree on `n` vertices rooted at 0, each leaf
/// independently neutral, blue or red.
pub fn random_tree(rng: &mut impl Rng, n: usize) -> Result<CommitteeTree> {
    if n == 0 {
        return Err(Error::Input("tree size must be positive".into()));
    }
    let mut parent = vec![None];
    for v in 1..n {
        parent.push(Some(rng.gen_range(0..v)));
    }
    let mut children = vec![0usize; n];
    for p in parent.iter().flatten() {
        children[*p] += 1;
    }
    let mut blue = BTreeSet::new();
    let mut red = BTreeSet::new();
    for v in 1..n {
        if children[v] == 0 {
            match rng.gen_range(0..3) {
                1 => {
                    blue.insert(v);
                }
                2 => {
                    red.insert(v);
                }
                _ => {}
            }
        }
    }
    CommitteeTree::new(parent, blue, red, BTreeSet::new())
}

/// Random tree with some neutral leaves marked open, modelling a
/// truncation frontier. At least one open vertex is guaranteed when the
/// tree has a non-root leaf.
pub fn random_truncated_tree(rng: &mut impl Rng, n: usize) -> Result<CommitteeTree> {
    if n < 2 {
        return Err(Error::Input("a truncated tree needs at least two vertices".into()));
    }
    let mut parent = vec![None];
    for v in 1..n {
        parent.push(Some(rng.gen_range(0..v)));
    }
    let mut children = vec![0usize; n];
    for p in parent.iter().flatten() {
        children[*p] += 1;
    }
    let leaves: Vec<usize> = (1..n).filter(|&v| children[v] == 0).collect();
    let mut blue = BTreeSet::new();
    let mut red = BTreeSet::new();
    let mut open = BTreeSet::new();
    for &v in &leaves {
        match rng.gen_range(0..4) {
            1 => {
                blue.insert(v);
            }
            2 => {
                red.insert(v);
            }
            3 => {
                open.insert(v);
            }
            _ => {}
        }
    }
    if open.is_empty() {
        let v = leaves[rng.gen_range(0..leaves.len())];
        blue.remove(&v);
        red.remove(&v);
        open.insert(v);
    }
    CommitteeTree::new(parent, blue, red, open)
}

/// Random edge subset with the given inclusion probability.
pub fn random_edge_set(rng: &mut impl Rng, tree: &CommitteeTree, density: f64) -> EdgeSet {
    (0..tree.vertex_count())
        .filter(|&v| v != tree.root() && rng.gen_bool(density))
        .collect()
}

/// Random periodic spec: a spine of `states` committee states whose last
/// state loops back (so the unfolding is infinite), plus blue/red leaf
/// states sprinkled along the spine.
pub fn random_pgen(rng: &mut impl Rng, states: usize) -> Result<PeriodicTreeSpec> {
    if states == 0 {
        return Err(Error::Input("state count must be positive".into()));
    }
    let mut specs: Vec<StateSpec> = (0..states)
        .map(|i| StateSpec {
            name: format!("s{i}"),
            mark: LeafMark::None,
            children: Vec::new(),
        })
        .collect();
    for i in 0..states {
        let next = if i + 1 < states {
            i + 1
        } else {
            rng.gen_range(0..states)
        };
        specs[i].children.push(next);
    }
    let mut leaf_count = 0usize;
    for i in 0..states {
        for _ in 0..rng.gen_range(0..=2usize) {
            let mark = if rng.gen_bool(0.5) {
                LeafMark::Blue
            } else {
                LeafMark::Red
            };
            let leaf = specs.len();
            specs.push(StateSpec {
                name: format!("l{leaf_count}"),
                mark,
                children: Vec::new(),
            });
            leaf_count += 1;
            specs[i].children.push(leaf);
        }
    }
    let spec = PeriodicTreeSpec {
        states: specs,
        root: 0,
    };
    spec.validate()?;
    Ok(spec)
}

/// Random tree of uniform matroid pairs satisfying the rank/corank >=
/// degree hypothesis, with at most `max_nodes` nodes and at most
/// `max_reals` real elements. Element names are zero-padded so their
/// lexicographic order matches the generation order.
pub fn random_pair(
    rng: &mut impl Rng,
    max_nodes: usize,
    max_reals: usize,
) -> Result<MatroidTreePair> {
    if max_nodes == 0 {
        return Err(Error::Input("node bound must be positive".into()));
    }
    // a path needs one real per node at minimum rank; star layouts need more
    let nodes = rng.gen_range(1..=max_nodes);
    let mut parents: Vec<usize> = Vec::new();
    for t in 1..nodes {
        parents.push(rng.gen_range(0..t));
    }
    let mut degree = vec![0usize; nodes];
    for (t, p) in parents.iter().enumerate() {
        degree[t + 1] += 1;
        degree[*p] += 1;
    }

    // with all slacks zero, rank = max(deg, 1) and size = rank + deg, so a
    // node contributes max(deg, 1) real elements
    let base_reals: usize = degree.iter().map(|&d| d.max(1)).sum();
    if base_reals > max_reals {
        return Err(Error::Input(format!(
            "cannot satisfy the degree hypothesis with {max_reals} real elements"
        )));
    }

    let mut budget = max_reals - base_reals;
    let mut node_specs: Vec<(Vec<String>, usize, usize)> = Vec::new();
    let mut links: Vec<(usize, usize, String)> = Vec::new();
    let mut real_counter = 0usize;
    let mut node_elems: Vec<Vec<String>> = vec![Vec::new(); nodes];
    for (t, p) in parents.iter().enumerate() {
        let dummy = format!("g{:02}", t);
        node_elems[t + 1].push(dummy.clone());
        node_elems[*p].push(dummy.clone());
        links.push((*p, t + 1, dummy));
    }
    for t in 0..nodes {
        let deg = degree[t];
        let base = deg.max(1);
        // independent rank slacks vary K(t) = rank_n - rank_m
        let a_m = rng.gen_range(0..=budget.min(2));
        let a_n = rng.gen_range(0..=budget.min(2));
        budget -= a_m.max(a_n);
        let b = rng.gen_range(0..=budget.min(1));
        budget -= b;
        let rank_m = base + a_m;
        let rank_n = base + a_n;
        let size = rank_m.max(rank_n) + deg + b;
        let reals_here = size - deg;
        for _ in 0..reals_here {
            node_elems[t].push(format!("e{:02}", real_counter));
            real_counter += 1;
        }
        node_specs.push((Vec::new(), rank_m, rank_n));
    }
    for (t, spec) in node_specs.iter_mut().enumerate() {
        spec.0 = node_elems[t].clone();
    }
    let pair = MatroidTreePair::build_owned(node_specs, links)?;
    if !pair.hypothesis_holds() {
        return Err(Error::Contract(
            "generated pair violates the degree hypothesis".into(),
        ));
    }
    Ok(pair)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tree_generation_is_deterministic() {
        let a = random_tree(&mut rng_from_seed(7), 12).unwrap();
        let b = random_tree(&mut rng_from_seed(7), 12).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn truncated_tree_has_open_vertex() {
        for seed in 0..20 {
            let t = random_truncated_tree(&mut rng_from_seed(seed), 8).unwrap();
            assert!(!t.open_vertices().is_empty());
        }
    }

    #[test]
    fn pgen_generation_validates() {
        for seed in 0..20 {
            let spec = random_pgen(&mut rng_from_seed(seed), 3).unwrap();
            spec.validate().unwrap();
        }
    }

    #[test]
    fn pair_generation_respects_hypothesis_and_bounds() {
        for seed in 0..50 {
            let pair = random_pair(&mut rng_from_seed(seed), 6, 14).unwrap();
            assert!(pair.hypothesis_holds());
            assert!(pair.node_count() <= 6);
            assert!(pair.reals().len() <= 14);
        }
    }

    #[test]
    fn pair_generation_rejects_impossible_bounds() {
        assert!(random_pair(&mut rng_from_seed(0), 6, 0).is_err());
    }
}
