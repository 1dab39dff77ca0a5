//! The graph file format.
//!
//! ```text
//! # blue loops at u and v, red edges between them
//! rank 2
//! vertex u v
//! edge e color 1 from u to u
//! edge h color 2 from v to u
//! square e h = h f
//! ```
//!
//! `edge NAME color C from S to R` declares an edge with source `S` and
//! range `R`: morphisms point from source to range, and words are written
//! range first, so `square A B = C D` says `A B` (first `A`, whose source
//! is the range of `B`) equals `C D`. Colors are numbered from 1.

use std::collections::BTreeMap;
use std::fmt::Write;

use kgraph::{Edge, GraphError, Skeleton, Square};

use crate::diag::{tokens, Diagnostic, Diagnostics, Pos, Token};

struct Decl<'a> {
    pos: Pos,
    name: Token<'a>,
}

/// Parse a graph file into a skeleton. The skeleton is not validated as a
/// k-graph; see [`kgraph::KGraph::validate`].
pub fn parse_graph(text: &str) -> Result<Skeleton, Diagnostics> {
    let mut diags = Vec::new();
    let mut rank: Option<(usize, Pos)> = None;
    let mut vertices: Vec<Decl> = Vec::new();
    let mut edges: Vec<(Decl, usize, Token, Token)> = Vec::new();
    let mut squares: Vec<(Pos, [Token; 4])> = Vec::new();

    for (i, line) in text.lines().enumerate() {
        let toks = tokens(i + 1, line);
        let Some(head) = toks.first() else { continue };
        match head.text {
            "rank" => match toks.as_slice() {
                [_, k] => match k.text.parse::<usize>() {
                    Ok(0) | Err(_) => diags.push(Diagnostic::new(k.pos, format!("rank must be a positive integer, found `{}`", k.text))),
                    Ok(n) => {
                        if let Some((_, first)) = rank {
                            diags.push(Diagnostic::new(head.pos, format!("duplicate rank declaration (first at {first})")));
                        } else {
                            rank = Some((n, head.pos));
                        }
                    }
                },
                _ => diags.push(Diagnostic::new(head.pos, "expected `rank K`")),
            },
            "vertex" => {
                if toks.len() == 1 {
                    diags.push(Diagnostic::new(head.pos, "expected at least one vertex name"));
                }
                for t in &toks[1..] {
                    vertices.push(Decl { pos: t.pos, name: *t });
                }
            }
            "edge" => match toks.as_slice() {
                [_, name, c, color, f, src, t, rng] if c.text == "color" && f.text == "from" && t.text == "to" => {
                    match color.text.parse::<usize>() {
                        Ok(n) if n >= 1 => edges.push((Decl { pos: head.pos, name: *name }, n - 1, *src, *rng)),
                        _ => diags.push(Diagnostic::new(color.pos, format!("color must be a positive integer, found `{}`", color.text))),
                    }
                }
                _ => diags.push(Diagnostic::new(head.pos, "expected `edge NAME color C from SOURCE to RANGE`")),
            },
            "square" => match toks.as_slice() {
                [_, a, b, eq, c, d] if eq.text == "=" => squares.push((head.pos, [*a, *b, *c, *d])),
                _ => diags.push(Diagnostic::new(head.pos, "expected `square A B = C D`")),
            },
            other => diags.push(Diagnostic::new(head.pos, format!("unknown declaration `{other}`"))),
        }
    }

    let Some((rank, rank_pos)) = rank else {
        diags.push(Diagnostic::new(Pos { line: 1, col: 1 }, "missing rank declaration"));
        return Err(Diagnostics(diags));
    };

    let mut vertex_ids = BTreeMap::new();
    for v in &vertices {
        if vertex_ids.insert(v.name.text, vertex_ids.len()).is_some() {
            diags.push(Diagnostic::new(v.pos, format!("duplicate vertex `{}`", v.name.text)));
        }
    }
    let mut edge_ids = BTreeMap::new();
    let mut edge_list = Vec::new();
    for (decl, color, src, rng) in &edges {
        if *color >= rank {
            diags.push(Diagnostic::new(
                decl.pos,
                format!("edge `{}` has color {}, outside 1..={rank}", decl.name.text, color + 1),
            ));
        }
        let mut endpoint = |t: &Token| match vertex_ids.get(t.text) {
            Some(&id) => Some(id),
            None => {
                diags.push(Diagnostic::new(t.pos, format!("unknown vertex `{}`", t.text)));
                None
            }
        };
        let (s, r) = (endpoint(src), endpoint(rng));
        if edge_ids.contains_key(decl.name.text) {
            diags.push(Diagnostic::new(decl.name.pos, format!("duplicate edge `{}`", decl.name.text)));
            continue;
        }
        edge_ids.insert(decl.name.text, edge_list.len());
        edge_list.push(Edge {
            name: decl.name.text.to_string(),
            color: *color,
            source: s.unwrap_or(0),
            range: r.unwrap_or(0),
        });
    }
    let mut square_list = Vec::new();
    let mut square_pos = Vec::new();
    for (pos, toks) in &squares {
        let ids: Vec<Option<usize>> = toks
            .iter()
            .map(|t| {
                let id = edge_ids.get(t.text).copied();
                if id.is_none() {
                    diags.push(Diagnostic::new(t.pos, format!("unknown edge `{}`", t.text)));
                }
                id
            })
            .collect();
        if let [Some(a), Some(b), Some(c), Some(d)] = ids[..] {
            square_list.push(Square { left: [a, b], right: [c, d] });
            square_pos.push(*pos);
        }
    }
    if !diags.is_empty() {
        diags.sort_by_key(|d| d.pos);
        return Err(Diagnostics(diags));
    }
    let names = vertices.iter().map(|v| v.name.text.to_string()).collect();
    Skeleton::new(rank, names, edge_list, square_list).map_err(|e| {
        let pos = match &e {
            GraphError::MalformedSquare { index, .. } => square_pos[*index],
            _ => rank_pos,
        };
        Diagnostics(vec![Diagnostic::new(pos, e.to_string())])
    })
}

/// Emit a skeleton in the graph file format. Parsing the output gives back
/// an equal skeleton.
pub fn emit_graph(skel: &Skeleton) -> String {
    let mut out = String::new();
    writeln!(out, "rank {}", skel.rank()).unwrap();
    writeln!(out, "vertex {}", skel.vertices().join(" ")).unwrap();
    for e in skel.edges() {
        writeln!(
            out,
            "edge {} color {} from {} to {}",
            e.name,
            e.color + 1,
            skel.vertices()[e.source],
            skel.vertices()[e.range]
        )
        .unwrap();
    }
    for sq in skel.squares() {
        let n = |id: usize| skel.edges()[id].name.as_str();
        writeln!(out, "square {} {} = {} {}", n(sq.left[0]), n(sq.left[1]), n(sq.right[0]), n(sq.right[1])).unwrap();
    }
    out
}
