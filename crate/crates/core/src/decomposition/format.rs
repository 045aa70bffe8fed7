//! Plain-text decomposition files.
//!
//! ```text
//! c optional comments
//! s td <nodes> <max bag size> <vertices>
//! b <node> <v> <v> ...
//! p <child> <parent>
//! ```
//!
//! Node ids and vertices are 1-indexed. The node without a `p` line is the
//! root. [`serialize`] writes bags in node order with sorted vertices,
//! followed by parent lines in child order.

use std::fmt::Write;

use super::{DecompositionError, NodeId, RootedDecomposition};
use crate::graph::VertexSet;

pub fn serialize(td: &RootedDecomposition) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "s td {} {} {}", td.node_count(), td.max_bag_size(), td.vertex_count());
    for t in 0..td.node_count() {
        let _ = write!(out, "b {}", t + 1);
        for v in td.bag(t) {
            let _ = write!(out, " {}", v + 1);
        }
        out.push('\n');
    }
    for t in 0..td.node_count() {
        if let Some(p) = td.parent(t) {
            let _ = writeln!(out, "p {} {}", t + 1, p + 1);
        }
    }
    out
}

fn err(line: usize, message: impl Into<String>) -> DecompositionError {
    DecompositionError::Parse { line, message: message.into() }
}

fn number(line: usize, token: Option<&str>, what: &str) -> Result<usize, DecompositionError> {
    let token = token.ok_or_else(|| err(line, format!("missing {what}")))?;
    token.parse().map_err(|_| err(line, format!("invalid {what} '{token}'")))
}

pub fn parse(text: &str) -> Result<RootedDecomposition, DecompositionError> {
    let mut header: Option<(usize, usize, usize)> = None;
    let mut bags: Vec<Option<VertexSet>> = Vec::new();
    let mut parent: Vec<Option<NodeId>> = Vec::new();

    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let mut tokens = raw.split_whitespace();
        let Some(tag) = tokens.next() else { continue };
        if tag == "c" {
            continue;
        }
        match (tag, header) {
            ("s", None) => {
                if tokens.next() != Some("td") {
                    return Err(err(line, "expected 's td <nodes> <max bag> <vertices>'"));
                }
                let nodes = number(line, tokens.next(), "node count")?;
                let width = number(line, tokens.next(), "max bag size")?;
                let n = number(line, tokens.next(), "vertex count")?;
                if n > VertexSet::CAPACITY {
                    return Err(err(line, format!("at most {} vertices are supported", VertexSet::CAPACITY)));
                }
                header = Some((nodes, width, n));
                bags = vec![None; nodes];
                parent = vec![None; nodes];
            }
            ("s", Some(_)) => return Err(err(line, "duplicate header")),
            (_, None) => return Err(err(line, "line before 's td' header")),
            ("b", Some((nodes, _, n))) => {
                let id = node_id(line, tokens.next(), nodes)?;
                if bags[id].is_some() {
                    return Err(err(line, format!("bag {} given twice", id + 1)));
                }
                let mut bag = VertexSet::empty();
                for tok in tokens {
                    let v = number(line, Some(tok), "vertex")?;
                    if v == 0 || v > n {
                        return Err(err(line, format!("bag references unknown vertex {v}")));
                    }
                    if bag.contains(v - 1) {
                        return Err(err(line, format!("vertex {v} repeated in bag")));
                    }
                    bag.insert(v - 1);
                }
                bags[id] = Some(bag);
            }
            ("p", Some((nodes, _, _))) => {
                let child = node_id(line, tokens.next(), nodes)?;
                let par = node_id(line, tokens.next(), nodes)?;
                if tokens.next().is_some() {
                    return Err(err(line, "trailing tokens"));
                }
                if parent[child].is_some() {
                    return Err(err(line, format!("node {} has two parents", child + 1)));
                }
                if child == par {
                    return Err(err(line, format!("node {} is its own parent", child + 1)));
                }
                parent[child] = Some(par);
            }
            (other, Some(_)) => return Err(err(line, format!("unknown line type '{other}'"))),
        }
    }

    let (_, width, n) = header.ok_or_else(|| err(0, "missing 's td' header"))?;
    let bags = bags
        .into_iter()
        .enumerate()
        .map(|(t, b)| b.ok_or_else(|| err(0, format!("bag {} missing", t + 1))))
        .collect::<Result<Vec<_>, _>>()?;
    let actual = bags.iter().map(|b| b.len()).max().unwrap_or(0);
    if actual != width {
        return Err(err(0, format!("header declares max bag size {width}, bags have {actual}")));
    }
    RootedDecomposition::new(n, parent, bags)
}

fn node_id(line: usize, token: Option<&str>, nodes: usize) -> Result<NodeId, DecompositionError> {
    let id = number(line, token, "node id")?;
    if id == 0 || id > nodes {
        return Err(err(line, format!("node id {id} outside 1..={nodes}")));
    }
    Ok(id - 1)
}

#[cfg(test)]
mod tests {
    use super::*;

    const P3: &str = "c path on three vertices\ns td 1 3 3\nb 1 1 2 3\n";

    #[test]
    fn single_bag_fixture() {
        let td = parse(P3).unwrap();
        assert_eq!(td.node_count(), 1);
        assert_eq!(td.bag(0).len(), 3);
        assert_eq!(serialize(&td), "s td 1 3 3\nb 1 1 2 3\n");
    }

    #[test]
    fn round_trip() {
        let text = "s td 3 2 4\nb 1 1 2\nb 2 2 3\nb 3 3 4\np 2 1\np 3 2\n";
        assert_eq!(serialize(&parse(text).unwrap()), text);
        let td = parse(text).unwrap();
        assert_eq!(td.root(), 0);
        assert_eq!(td.parent(2), Some(1));
    }

    #[test]
    fn rejects_bad_input() {
        let cases = [
            ("s td 1 3 3\nb 1 1 2 4\n", 2),
            ("b 1 1\n", 1),
            ("s td 1 1 2\ns td 1 1 2\n", 2),
            ("s td 2 1 2\nb 1 1\nb 3 2\n", 3),
            ("s td 2 1 2\nb 1 1\nb 2 2\np 2 1\np 2 1\n", 5),
            ("s td 1 1 2\nb 1 x\n", 2),
            ("s td 1 1 2\nq\n", 2),
        ];
        for (text, line) in cases {
            match parse(text) {
                Err(DecompositionError::Parse { line: l, .. }) => assert_eq!(l, line, "{text:?}"),
                other => panic!("{text:?} gave {other:?}"),
            }
        }
        assert!(parse("s td 2 1 2\nb 1 1\n").is_err());
        assert!(parse("s td 1 2 2\nb 1 1\n").is_err());
        assert!(matches!(parse("s td 2 1 2\nb 1 1\nb 2 2\n"), Err(DecompositionError::MalformedTree(_))));
    }
}
