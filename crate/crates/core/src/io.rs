//! Line-oriented text formats for graph families and hitting-set instances.
//!
//! Family files:
//!
//! ```text
//! family <name>
//! vertices <label_1> ... <label_n>
//! graph <gname>
//! e <label_u> <label_v>
//! endgraph
//! endfamily
//! ```
//!
//! `#` starts a comment. A single-graph file may drop the `family` wrapper,
//! and may even drop the `graph`/`endgraph` block, in which case the bare
//! edge lines form one graph named `G`.
//!
//! Hitting-set files: one `elements ...` line, one `set ...` line per
//! subset, and a final `k <K>` line.

use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::sync::Arc;

use crate::error::{ParseError, ParseErrorKind};
use crate::generators::hsp::HittingSetInstance;
use crate::graph::{Graph, GraphFamily, VertexUniverse};

type ParseResult<T> = std::result::Result<T, ParseError>;

fn err(line: usize, kind: ParseErrorKind) -> ParseError {
    ParseError { line, kind }
}

fn syntax(line: usize, msg: impl Into<String>) -> ParseError {
    err(line, ParseErrorKind::Syntax(msg.into()))
}

/// Non-empty lines with comments stripped, as `(line_number, tokens)`.
fn tokenize(text: &str) -> Vec<(usize, Vec<&str>)> {
    text.lines()
        .enumerate()
        .filter_map(|(i, raw)| {
            let line = raw.split('#').next().unwrap_or("");
            let tokens: Vec<&str> = line.split_whitespace().collect();
            (!tokens.is_empty()).then_some((i + 1, tokens))
        })
        .collect()
}

struct GraphBlock {
    name: String,
    line: usize,
    edges: BTreeSet<(usize, usize)>,
}

pub fn parse_family(text: &str) -> ParseResult<GraphFamily> {
    let lines = tokenize(text);
    let eof_line = text.lines().count() + 1;

    let mut family_name: Option<String> = None;
    let mut family_open = false;
    let mut family_closed = false;
    let mut universe: Option<Arc<VertexUniverse>> = None;
    let mut blocks: Vec<GraphBlock> = Vec::new();
    let mut current: Option<GraphBlock> = None;
    let mut implicit: Option<GraphBlock> = None;

    for (idx, (ln, tokens)) in lines.iter().enumerate() {
        let ln = *ln;
        if family_closed {
            return Err(syntax(ln, "content after `endfamily`"));
        }
        match tokens[0] {
            "family" => {
                if idx != 0 {
                    return Err(syntax(ln, "`family` must be the first directive"));
                }
                if tokens.len() != 2 {
                    return Err(syntax(ln, "expected `family <name>`"));
                }
                family_name = Some(tokens[1].to_string());
                family_open = true;
            }
            "endfamily" => {
                if !family_open {
                    return Err(syntax(ln, "`endfamily` without `family`"));
                }
                if current.is_some() {
                    return Err(syntax(ln, "`endfamily` inside a graph block"));
                }
                if tokens.len() != 1 {
                    return Err(syntax(ln, "`endfamily` takes no arguments"));
                }
                family_closed = true;
            }
            "vertices" => {
                if universe.is_some() {
                    return Err(syntax(ln, "duplicate `vertices` line"));
                }
                if current.is_some() || !blocks.is_empty() {
                    return Err(syntax(ln, "`vertices` must precede every graph"));
                }
                if tokens.len() < 2 {
                    return Err(syntax(ln, "`vertices` needs at least one label"));
                }
                let u = VertexUniverse::new(tokens[1..].iter().copied())
                    .map_err(|l| err(ln, ParseErrorKind::DuplicateVertex(l)))?;
                universe = Some(Arc::new(u));
            }
            "graph" => {
                if universe.is_none() {
                    return Err(syntax(ln, "`graph` before `vertices`"));
                }
                if current.is_some() {
                    return Err(syntax(ln, "nested `graph` block"));
                }
                if implicit.is_some() {
                    return Err(syntax(ln, "`graph` block after bare edge lines"));
                }
                if tokens.len() != 2 {
                    return Err(syntax(ln, "expected `graph <name>`"));
                }
                let name = tokens[1].to_string();
                if blocks.iter().any(|b| b.name == name) {
                    return Err(err(ln, ParseErrorKind::DuplicateGraph(name)));
                }
                current = Some(GraphBlock {
                    name,
                    line: ln,
                    edges: BTreeSet::new(),
                });
            }
            "endgraph" => {
                let block = current
                    .take()
                    .ok_or_else(|| syntax(ln, "`endgraph` without `graph`"))?;
                if tokens.len() != 1 {
                    return Err(syntax(ln, "`endgraph` takes no arguments"));
                }
                let n = universe.as_ref().map_or(0, |u| u.len());
                if block.edges.is_empty() && n > 1 {
                    return Err(err(block.line, ParseErrorKind::EmptyGraph(block.name)));
                }
                blocks.push(block);
            }
            "e" => {
                let u = universe
                    .as_ref()
                    .ok_or_else(|| syntax(ln, "edge before `vertices`"))?;
                if tokens.len() != 3 {
                    return Err(syntax(ln, "expected `e <u> <v>`"));
                }
                let a = u
                    .id(tokens[1])
                    .ok_or_else(|| err(ln, ParseErrorKind::UnknownVertex(tokens[1].to_string())))?;
                let b = u
                    .id(tokens[2])
                    .ok_or_else(|| err(ln, ParseErrorKind::UnknownVertex(tokens[2].to_string())))?;
                if a == b {
                    return Err(err(ln, ParseErrorKind::SelfLoop(tokens[1].to_string())));
                }
                let edge = (a.min(b), a.max(b));
                match current.as_mut() {
                    Some(block) => {
                        block.edges.insert(edge);
                    }
                    None => {
                        if family_open || !blocks.is_empty() {
                            return Err(syntax(ln, "edge outside a graph block"));
                        }
                        implicit
                            .get_or_insert_with(|| GraphBlock {
                                name: "G".to_string(),
                                line: ln,
                                edges: BTreeSet::new(),
                            })
                            .edges
                            .insert(edge);
                    }
                }
            }
            other => return Err(syntax(ln, format!("unknown directive `{other}`"))),
        }
    }

    if let Some(block) = current {
        return Err(err(
            eof_line,
            ParseErrorKind::UnexpectedEof(format!("graph `{}` is not closed", block.name)),
        ));
    }
    if family_open && !family_closed {
        return Err(err(eof_line, ParseErrorKind::UnexpectedEof("missing `endfamily`".into())));
    }
    let universe =
        universe.ok_or_else(|| err(eof_line, ParseErrorKind::UnexpectedEof("missing `vertices` line".into())))?;
    if let Some(block) = implicit {
        blocks.push(block);
    }
    if blocks.is_empty() {
        return Err(err(eof_line, ParseErrorKind::UnexpectedEof("no graph defined".into())));
    }

    let name = family_name.unwrap_or_else(|| {
        if blocks.len() == 1 {
            blocks[0].name.clone()
        } else {
            "family".to_string()
        }
    });
    let members: Vec<Graph> = blocks
        .into_iter()
        .map(|b| Graph::from_edges(b.name, universe.clone(), b.edges).expect("validated while parsing"))
        .collect();
    Ok(GraphFamily::new(name, members).expect("validated while parsing"))
}

/// Emits the canonical wrapped form; edges sorted by `(min id, max id)`.
pub fn serialize_family(fam: &GraphFamily) -> String {
    let u = fam.universe();
    let mut out = String::new();
    writeln!(out, "family {}", fam.name()).unwrap();
    writeln!(out, "vertices {}", u.labels().join(" ")).unwrap();
    for g in fam.members() {
        writeln!(out, "graph {}", g.name()).unwrap();
        for (a, b) in g.edges() {
            writeln!(out, "e {} {}", u.label(a), u.label(b)).unwrap();
        }
        writeln!(out, "endgraph").unwrap();
    }
    writeln!(out, "endfamily").unwrap();
    out
}

pub fn parse_hitting_set(text: &str) -> ParseResult<HittingSetInstance> {
    let eof_line = text.lines().count() + 1;
    let mut elements: Option<Vec<String>> = None;
    let mut sets: Vec<Vec<String>> = Vec::new();
    let mut budget: Option<usize> = None;

    for (ln, tokens) in tokenize(text) {
        if budget.is_some() {
            return Err(syntax(ln, "content after `k`"));
        }
        match tokens[0] {
            "elements" => {
                if elements.is_some() {
                    return Err(syntax(ln, "duplicate `elements` line"));
                }
                let labels: Vec<String> = tokens[1..].iter().map(|s| s.to_string()).collect();
                if labels.is_empty() {
                    return Err(syntax(ln, "`elements` needs at least one label"));
                }
                for (i, l) in labels.iter().enumerate() {
                    if labels[..i].contains(l) {
                        return Err(err(ln, ParseErrorKind::DuplicateVertex(l.clone())));
                    }
                }
                elements = Some(labels);
            }
            "set" => {
                let elems = elements
                    .as_ref()
                    .ok_or_else(|| syntax(ln, "`set` before `elements`"))?;
                if tokens.len() < 2 {
                    return Err(syntax(ln, "empty set"));
                }
                let mut set: Vec<String> = Vec::new();
                for t in &tokens[1..] {
                    if !elems.iter().any(|e| e == t) {
                        return Err(err(ln, ParseErrorKind::UnknownVertex(t.to_string())));
                    }
                    if !set.iter().any(|s| s == t) {
                        set.push(t.to_string());
                    }
                }
                sets.push(set);
            }
            "k" => {
                if tokens.len() != 2 {
                    return Err(syntax(ln, "expected `k <K>`"));
                }
                let k: usize = tokens[1]
                    .parse()
                    .map_err(|_| syntax(ln, format!("invalid budget `{}`", tokens[1])))?;
                budget = Some(k);
            }
            other => return Err(syntax(ln, format!("unknown directive `{other}`"))),
        }
    }
    let elements =
        elements.ok_or_else(|| err(eof_line, ParseErrorKind::UnexpectedEof("missing `elements` line".into())))?;
    let budget = budget.ok_or_else(|| err(eof_line, ParseErrorKind::UnexpectedEof("missing `k` line".into())))?;
    HittingSetInstance::new(elements, sets, budget).map_err(|e| syntax(eof_line, e.to_string()))
}

pub fn serialize_hitting_set(inst: &HittingSetInstance) -> String {
    let mut out = String::new();
    writeln!(out, "elements {}", inst.elements().join(" ")).unwrap();
    for set in inst.sets() {
        let labels: Vec<&str> = set.iter().map(|&i| inst.elements()[i].as_str()).collect();
        writeln!(out, "set {}", labels.join(" ")).unwrap();
    }
    writeln!(out, "k {}", inst.budget()).unwrap();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    const FIG1: &str = "\
family fig1
vertices v1 v2 v3 v4
graph G1
e v1 v2
e v2 v4
e v4 v1
e v2 v3
endgraph
graph G2
e v1 v3 # triangle v1 v3 v4
e v3 v4
e v4 v1
e v1 v2
endgraph
graph G3
e v1 v2
e v2 v3
e v3 v4
endgraph
endfamily
";

    #[test]
    fn parses_wrapped_family() {
        let fam = parse_family(FIG1).unwrap();
        assert_eq!(fam.name(), "fig1");
        assert_eq!(fam.len(), 3);
        assert_eq!(fam.n(), 4);
        assert_eq!(fam.members()[2].name(), "G3");
        assert!(fam.members()[2].is_path());
    }

    #[test]
    fn bare_edges_make_one_graph() {
        let fam = parse_family("vertices a b\ne a b\n").unwrap();
        assert_eq!(fam.len(), 1);
        let g = &fam.members()[0];
        assert_eq!(g.edge_count(), 1);
        assert!(g.is_path());
    }

    #[test]
    fn unwrapped_single_block() {
        let fam = parse_family("vertices a b c\ngraph P\ne a b\ne b c\nendgraph\n").unwrap();
        assert_eq!(fam.name(), "P");
    }

    #[test]
    fn duplicate_edges_collapse() {
        let fam = parse_family("vertices a b\ngraph G\ne a b\ne b a\ne a b\nendgraph\n").unwrap();
        assert_eq!(fam.members()[0].edge_count(), 1);
    }

    #[test]
    fn rejects_self_loop() {
        let e = parse_family("vertices x y\ngraph G\ne x x\nendgraph\n").unwrap_err();
        assert_eq!(e.line, 3);
        assert_eq!(e.kind, ParseErrorKind::SelfLoop("x".into()));
    }

    #[test]
    fn error_kinds_with_line_numbers() {
        let e = parse_family("vertices a b\ngraph G\ne a z\nendgraph\n").unwrap_err();
        assert_eq!((e.line, e.kind), (3, ParseErrorKind::UnknownVertex("z".into())));

        let e = parse_family("vertices a b\ngraph G\nendgraph\n").unwrap_err();
        assert_eq!(e.kind, ParseErrorKind::EmptyGraph("G".into()));

        let text = "vertices a b\ngraph G\ne a b\nendgraph\ngraph G\ne a b\nendgraph\n";
        let e = parse_family(text).unwrap_err();
        assert_eq!((e.line, e.kind), (5, ParseErrorKind::DuplicateGraph("G".into())));

        let e = parse_family("vertices a b\nedge a b\n").unwrap_err();
        assert!(matches!(e.kind, ParseErrorKind::Syntax(_)));
        assert_eq!(e.line, 2);

        let e = parse_family("family f\nvertices a b\ngraph G\ne a b\nendgraph\n").unwrap_err();
        assert!(matches!(e.kind, ParseErrorKind::UnexpectedEof(_)));

        let e = parse_family("vertices a a\n").unwrap_err();
        assert_eq!(e.kind, ParseErrorKind::DuplicateVertex("a".into()));
    }

    #[test]
    fn single_vertex_graph_may_be_edgeless() {
        let fam = parse_family("vertices a\ngraph K1\nendgraph\n").unwrap();
        assert_eq!(fam.members()[0].n(), 1);
    }

    #[test]
    fn serialization_round_trips() {
        let fam = parse_family(FIG1).unwrap();
        let text = serialize_family(&fam);
        let back = parse_family(&text).unwrap();
        assert_eq!(serialize_family(&back), text);
        assert!(text.contains("graph G2\ne v1 v2\ne v1 v3\ne v1 v4\ne v3 v4\nendgraph"));
    }

    #[test]
    fn hitting_set_format() {
        let text = "elements v1 v2 v3 v4 v5\nset v1 v2 v3\nset v2 v3 v4\nset v4 v5\nk 2\n";
        let inst = parse_hitting_set(text).unwrap();
        assert_eq!(inst.sets().len(), 3);
        assert_eq!(inst.budget(), 2);
        assert_eq!(serialize_hitting_set(&inst), text);

        let e = parse_hitting_set("elements a\nset b\nk 1\n").unwrap_err();
        assert_eq!(e.kind, ParseErrorKind::UnknownVertex("b".into()));
        assert!(parse_hitting_set("elements a\nset a\nk 0\n").is_err());
    }
}
