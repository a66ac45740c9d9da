//! Line-based text formats: committee trees (`.ctree`), periodic tree
//! specifications (`.pgen`), matroid tree pairs (`.tmat`) and blockage
//! certificates. Writers emit canonical sorted output so that
//! generate -> write -> parse -> write round-trips byte-identically.

use std::collections::BTreeMap;
use std::collections::BTreeSet;
use std::fmt::Write as _;

use crate::blockage::{Certificate, CertificateKind};
use crate::committee_tree::{CommitteeTree, EdgeSet};
use crate::error::{Error, Result};
use crate::matroid::MatroidTreePair;
use crate::truncation::{LeafMark, PeriodicTreeSpec, StateSpec};

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

/// Parses the `.ctree` format: a `ctree v1` header followed by one
/// `v <id> <parent-id|root> <B|R|open|->` line per vertex.
pub fn parse_ctree(text: &str) -> Result<CommitteeTree> {
    let mut lines = content_lines(text);
    match lines.next() {
        Some((_, "ctree v1")) => {}
        Some((ln, other)) => return Err(parse_err(ln, format!("expected `ctree v1`, got `{other}`"))),
        None => return Err(parse_err(1, "empty file")),
    }
    let mut rows: BTreeMap<usize, (Option<usize>, &str, usize)> = BTreeMap::new();
    for (ln, line) in lines {
        let tok: Vec<&str> = line.split_whitespace().collect();
        if tok.len() != 4 || tok[0] != "v" {
            return Err(parse_err(ln, "expected `v <id> <parent|root> <B|R|open|->`"));
        }
        let id: usize = tok[1]
            .parse()
            .map_err(|_| parse_err(ln, format!("bad vertex id `{}`", tok[1])))?;
        let parent = if tok[2] == "root" {
            None
        } else {
            Some(
                tok[2]
                    .parse::<usize>()
                    .map_err(|_| parse_err(ln, format!("bad parent id `{}`", tok[2])))?,
            )
        };
        if rows.insert(id, (parent, tok[3], ln)).is_some() {
            return Err(parse_err(ln, format!("duplicate vertex id {id}")));
        }
    }
    let n = rows.len();
    if n == 0 {
        return Err(parse_err(1, "no vertices"));
    }
    let mut parent = vec![None; n];
    let mut blue = BTreeSet::new();
    let mut red = BTreeSet::new();
    let mut open = BTreeSet::new();
    for (id, (p, mark, ln)) in rows {
        if id >= n {
            return Err(parse_err(ln, format!("vertex ids must be dense 0..{n}, got {id}")));
        }
        parent[id] = p;
        match mark {
            "-" => {}
            "B" => {
                blue.insert(id);
            }
            "R" => {
                red.insert(id);
            }
            "open" => {
                open.insert(id);
            }
            other => return Err(parse_err(ln, format!("unknown mark `{other}`"))),
        }
    }
    CommitteeTree::new(parent, blue, red, open).map_err(|e| parse_err(0, e.to_string()))
}

/// Writes the canonical `.ctree` text.
pub fn write_ctree(tree: &CommitteeTree) -> String {
    let mut out = String::from("ctree v1\n");
    for v in 0..tree.vertex_count() {
        let parent = match tree.parent(v) {
            None => "root".to_string(),
            Some(p) => p.to_string(),
        };
        let mark = if tree.blue_leaves().contains(&v) {
            "B"
        } else if tree.red_leaves().contains(&v) {
            "R"
        } else if tree.is_open(v) {
            "open"
        } else {
            "-"
        };
        let _ = writeln!(out, "v {v} {parent} {mark}");
    }
    out
}

/// Parses the `.pgen` format: `pgen v1`, `state <name> [B|R]` lines,
/// `child <parent> <child>` lines (repeated for multiplicity) and a final
/// `root <state>`.
pub fn parse_pgen(text: &str) -> Result<PeriodicTreeSpec> {
    let mut lines = content_lines(text);
    match lines.next() {
        Some((_, "pgen v1")) => {}
        Some((ln, other)) => return Err(parse_err(ln, format!("expected `pgen v1`, got `{other}`"))),
        None => return Err(parse_err(1, "empty file")),
    }
    let mut states: Vec<StateSpec> = Vec::new();
    let mut index: BTreeMap<String, usize> = BTreeMap::new();
    let mut children: Vec<(usize, String, usize)> = Vec::new();
    let mut root: Option<(String, usize)> = None;
    for (ln, line) in lines {
        let tok: Vec<&str> = line.split_whitespace().collect();
        match tok.as_slice() {
            ["state", name] | ["state", name, _] => {
                let mark = match tok.get(2) {
                    None => LeafMark::None,
                    Some(&"B") => LeafMark::Blue,
                    Some(&"R") => LeafMark::Red,
                    Some(other) => return Err(parse_err(ln, format!("unknown mark `{other}`"))),
                };
                if index.insert(name.to_string(), states.len()).is_some() {
                    return Err(parse_err(ln, format!("duplicate state `{name}`")));
                }
                states.push(StateSpec {
                    name: name.to_string(),
                    mark,
                    children: Vec::new(),
                });
            }
            ["child", parent, child] => {
                let p = *index
                    .get(*parent)
                    .ok_or_else(|| parse_err(ln, format!("unknown state `{parent}`")))?;
                children.push((p, child.to_string(), ln));
            }
            ["root", name] => {
                if root.is_some() {
                    return Err(parse_err(ln, "duplicate root line"));
                }
                root = Some((name.to_string(), ln));
            }
            _ => return Err(parse_err(ln, format!("unrecognized line `{line}`"))),
        }
    }
    for (p, child, ln) in children {
        let c = *index
            .get(&child)
            .ok_or_else(|| parse_err(ln, format!("unknown state `{child}`")))?;
        states[p].children.push(c);
    }
    let (root_name, root_ln) = root.ok_or_else(|| parse_err(0, "missing root line"))?;
    let root = *index
        .get(&root_name)
        .ok_or_else(|| parse_err(root_ln, format!("unknown state `{root_name}`")))?;
    let spec = PeriodicTreeSpec { states, root };
    spec.validate().map_err(|e| parse_err(0, e.to_string()))?;
    Ok(spec)
}

/// Writes the canonical `.pgen` text.
pub fn write_pgen(spec: &PeriodicTreeSpec) -> String {
    let mut out = String::from("pgen v1\n");
    for state in &spec.states {
        match state.mark {
            LeafMark::None => {
                let _ = writeln!(out, "state {}", state.name);
            }
            LeafMark::Blue => {
                let _ = writeln!(out, "state {} B", state.name);
            }
            LeafMark::Red => {
                let _ = writeln!(out, "state {} R", state.name);
            }
        }
    }
    for state in &spec.states {
        for &c in &state.children {
            let _ = writeln!(out, "child {} {}", state.name, spec.states[c].name);
        }
    }
    let _ = writeln!(out, "root {}", spec.states[spec.root].name);
    out
}

/// Parses the `.tmat` format: `tmat v1`, one
/// `node <id> rankM <r> rankN <r> elems <e1> ...` line per node, and
/// `link <a> <b> dummy <elem>` lines.
pub fn parse_tmat(text: &str) -> Result<MatroidTreePair> {
    let mut lines = content_lines(text);
    match lines.next() {
        Some((_, "tmat v1")) => {}
        Some((ln, other)) => return Err(parse_err(ln, format!("expected `tmat v1`, got `{other}`"))),
        None => return Err(parse_err(1, "empty file")),
    }
    let mut nodes: BTreeMap<usize, (Vec<String>, usize, usize)> = BTreeMap::new();
    let mut links: Vec<(usize, usize, String)> = Vec::new();
    for (ln, line) in lines {
        let tok: Vec<&str> = line.split_whitespace().collect();
        match tok.as_slice() {
            ["node", id, "rankM", rm, "rankN", rn, "elems", elems @ ..] => {
                let id: usize = id
                    .parse()
                    .map_err(|_| parse_err(ln, format!("bad node id `{id}`")))?;
                let rm: usize = rm
                    .parse()
                    .map_err(|_| parse_err(ln, format!("bad M rank `{rm}`")))?;
                let rn: usize = rn
                    .parse()
                    .map_err(|_| parse_err(ln, format!("bad N rank `{rn}`")))?;
                if elems.is_empty() {
                    return Err(parse_err(ln, "node without elements"));
                }
                let elems: Vec<String> = elems.iter().map(|s| s.to_string()).collect();
                if nodes.insert(id, (elems, rm, rn)).is_some() {
                    return Err(parse_err(ln, format!("duplicate node id {id}")));
                }
            }
            ["link", a, b, "dummy", d] => {
                let a: usize = a
                    .parse()
                    .map_err(|_| parse_err(ln, format!("bad node id `{a}`")))?;
                let b: usize = b
                    .parse()
                    .map_err(|_| parse_err(ln, format!("bad node id `{b}`")))?;
                links.push((a, b, d.to_string()));
            }
            _ => return Err(parse_err(ln, format!("unrecognized line `{line}`"))),
        }
    }
    let n = nodes.len();
    if n == 0 {
        return Err(parse_err(1, "no nodes"));
    }
    if nodes.keys().last() != Some(&(n - 1)) {
        return Err(parse_err(0, format!("node ids must be dense 0..{n}")));
    }
    let node_specs: Vec<(Vec<String>, usize, usize)> = nodes.into_values().collect();
    MatroidTreePair::build_owned(node_specs, links).map_err(|e| parse_err(0, e.to_string()))
}

/// Writes the canonical `.tmat` text.
pub fn write_tmat(pair: &MatroidTreePair) -> String {
    let mut out = String::from("tmat v1\n");
    for t in 0..pair.node_count() {
        let _ = writeln!(
            out,
            "node {} rankM {} rankN {} elems {}",
            t,
            pair.rank_m(t),
            pair.rank_n(t),
            pair.names().render(pair.ground(t))
        );
    }
    let mut links: Vec<(usize, usize, String)> = pair
        .links()
        .iter()
        .map(|(a, b, d)| (*a.min(b), *a.max(b), pair.name(*d).to_string()))
        .collect();
    links.sort();
    for (a, b, d) in links {
        let _ = writeln!(out, "link {a} {b} dummy {d}");
    }
    out
}

/// Writes a certificate in its four-line exchange format.
pub fn write_certificate(cert: &Certificate) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "cert {}", cert.kind);
    let _ = writeln!(out, "edges {}", cert.edges);
    let _ = writeln!(out, "flow {}", cert.opposing_flow);
    let _ = writeln!(out, "rootacc {}", cert.root_accumulation);
    // trailing spaces on empty sets are trimmed
    out.lines()
        .map(|l| l.trim_end())
        .collect::<Vec<_>>()
        .join("\n")
        + "\n"
}

/// Parses the certificate exchange format.
pub fn parse_certificate(text: &str) -> Result<Certificate> {
    let mut kind: Option<CertificateKind> = None;
    let mut edges: Option<EdgeSet> = None;
    let mut flow: Option<EdgeSet> = None;
    let mut rootacc: Option<i64> = None;
    for (ln, line) in content_lines(text) {
        let (key, rest) = line.split_once(' ').unwrap_or((line, ""));
        match key {
            "cert" => {
                kind = Some(rest.trim().parse().map_err(|e: Error| parse_err(ln, e.to_string()))?)
            }
            "edges" => {
                edges = Some(rest.parse().map_err(|e: Error| parse_err(ln, e.to_string()))?)
            }
            "flow" => flow = Some(rest.parse().map_err(|e: Error| parse_err(ln, e.to_string()))?),
            "rootacc" => {
                rootacc = Some(
                    rest.trim()
                        .parse()
                        .map_err(|_| parse_err(ln, format!("bad integer `{rest}`")))?,
                )
            }
            other => return Err(parse_err(ln, format!("unrecognized key `{other}`"))),
        }
    }
    Ok(Certificate {
        kind: kind.ok_or_else(|| parse_err(0, "missing `cert` line"))?,
        edges: edges.ok_or_else(|| parse_err(0, "missing `edges` line"))?,
        opposing_flow: flow.ok_or_else(|| parse_err(0, "missing `flow` line"))?,
        root_accumulation: rootacc.ok_or_else(|| parse_err(0, "missing `rootacc` line"))?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::*;

    #[test]
    fn ctree_round_trip() {
        for tree in [
            two_leaf_tie(),
            two_committees(),
            blue_majority_star(),
            open_path_with_blue(),
        ] {
            let text = write_ctree(&tree);
            let parsed = parse_ctree(&text).unwrap();
            assert_eq!(parsed, tree);
            assert_eq!(write_ctree(&parsed), text);
        }
    }

    #[test]
    fn ctree_rejects_malformed_input() {
        assert!(parse_ctree("").is_err());
        assert!(parse_ctree("ctree v2\nv 0 root -\n").is_err());
        // duplicate id
        assert!(parse_ctree("ctree v1\nv 0 root -\nv 0 root -\n").is_err());
        // multiple roots
        assert!(parse_ctree("ctree v1\nv 0 root -\nv 1 root -\n").is_err());
        // mark on an internal vertex
        assert!(parse_ctree("ctree v1\nv 0 root -\nv 1 0 B\nv 2 1 R\n").is_err());
        // sparse ids
        assert!(parse_ctree("ctree v1\nv 0 root -\nv 2 0 B\n").is_err());
    }

    #[test]
    fn pgen_round_trip() {
        let text = "pgen v1\nstate r\nstate b B\nchild r r\nchild r b\nroot r\n";
        let spec = parse_pgen(text).unwrap();
        assert_eq!(write_pgen(&spec), text);
    }

    #[test]
    fn pgen_rejects_leaf_state_with_child() {
        let text = "pgen v1\nstate r\nstate b B\nchild b r\nchild r b\nroot r\n";
        assert!(parse_pgen(text).is_err());
    }

    #[test]
    fn tmat_round_trip() {
        for pair in [two_node_rank_one_pair(), single_node_rank_two_one()] {
            let text = write_tmat(&pair);
            let parsed = parse_tmat(&text).unwrap();
            assert_eq!(parsed, pair);
            assert_eq!(write_tmat(&parsed), text);
        }
    }

    #[test]
    fn tmat_rejects_dangling_dummy() {
        let text = "tmat v1\nnode 0 rankM 1 rankN 1 elems a g\nnode 1 rankM 1 rankN 1 elems b\nlink 0 1 dummy g\n";
        assert!(parse_tmat(text).is_err());
    }

    #[test]
    fn certificate_round_trip() {
        let tree = blue_majority_star();
        let cert = crate::blockage::find_certificate(&tree).unwrap();
        let text = write_certificate(&cert);
        assert_eq!(text, "cert StrongBlue\nedges 1 2\nflow 3\nrootacc 1\n");
        let parsed = parse_certificate(&text).unwrap();
        assert_eq!(parsed, cert);
    }
}
