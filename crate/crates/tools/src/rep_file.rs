//! The representation file format.
//!
//! ```text
//! graph bflip.kg
//! window 3,3
//! orbit cycle e h f g mult 1
//! orbit prefix h cycle f g e h mult 2
//! lazy thue-morse over b1 b2 cycle-color 2 mult 3 depth 32,32
//! ```
//!
//! `graph` is resolved relative to the representation file. Words list
//! edge names range first, as in graph files. A lazy base without `depth`
//! gets depth `4 × window`.

use std::sync::Arc;

use kgraph::path::ThueMorse;
use kgraph::repr::{AtomicRepSpec, OrbitSpec};
use kgraph::{Degree, InfinitePath, KGraph, LazyPath, Morphism, PathError, ReprError};

use crate::diag::{tokens, Diagnostic, Diagnostics, Pos, Token};

/// A name together with where it was written.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Spanned<T> {
    pub value: T,
    pub pos: Pos,
}

impl<'a> From<&Token<'a>> for Spanned<String> {
    fn from(t: &Token<'a>) -> Self {
        Spanned { value: t.text.to_string(), pos: t.pos }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BaseDecl {
    /// `prefix · cycle^∞`; an empty prefix starts at the range of the cycle.
    Ep { prefix: Vec<Spanned<String>>, cycle: Vec<Spanned<String>>, cycle_pos: Pos },
    ThueMorse { letters: [Spanned<String>; 2], cycle_color: Spanned<usize>, depth: Option<Spanned<Vec<u32>>> },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitDecl {
    pub pos: Pos,
    pub base: BaseDecl,
    pub multiplicity: u32,
}

/// A parsed but unresolved representation file.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct RepFile {
    pub graph: Option<Spanned<String>>,
    pub window: Option<Spanned<Vec<u32>>>,
    pub orbits: Vec<OrbitDecl>,
}

fn parse_degree(t: &Token) -> Result<Spanned<Vec<u32>>, Diagnostic> {
    t.text
        .split(',')
        .map(|c| c.parse::<u32>())
        .collect::<Result<Vec<_>, _>>()
        .map(|value| Spanned { value, pos: t.pos })
        .map_err(|_| Diagnostic::new(t.pos, format!("expected a degree `N1,...,Nk`, found `{}`", t.text)))
}

fn parse_count(t: Option<&Token>, what: &str, after: Pos) -> Result<u32, Diagnostic> {
    let t = t.ok_or_else(|| Diagnostic::new(after, format!("missing {what}")))?;
    match t.text.parse::<u32>() {
        Ok(n) if n >= 1 => Ok(n),
        _ => Err(Diagnostic::new(t.pos, format!("{what} must be a positive integer, found `{}`", t.text))),
    }
}

const ORBIT_KEYWORDS: [&str; 3] = ["prefix", "cycle", "mult"];

fn parse_orbit(toks: &[Token]) -> Result<OrbitDecl, Diagnostic> {
    let head = toks[0].pos;
    let mut i = 1;
    let word = |i: &mut usize| {
        let start = *i;
        while *i < toks.len() && !ORBIT_KEYWORDS.contains(&toks[*i].text) {
            *i += 1;
        }
        toks[start..*i].iter().map(Spanned::from).collect::<Vec<_>>()
    };
    let mut prefix = Vec::new();
    if toks.get(i).is_some_and(|t| t.text == "prefix") {
        i += 1;
        prefix = word(&mut i);
    }
    let Some(kw) = toks.get(i).filter(|t| t.text == "cycle") else {
        let pos = toks.get(i).map_or(head, |t| t.pos);
        return Err(Diagnostic::new(pos, "expected `cycle WORD`"));
    };
    let cycle_pos = kw.pos;
    i += 1;
    let cycle = word(&mut i);
    if cycle.is_empty() {
        return Err(Diagnostic::new(cycle_pos, "empty cycle"));
    }
    let Some(kw) = toks.get(i).filter(|t| t.text == "mult") else {
        let pos = toks.get(i).map_or(head, |t| t.pos);
        return Err(Diagnostic::new(pos, "expected `mult M`"));
    };
    let multiplicity = parse_count(toks.get(i + 1), "multiplicity", kw.pos)?;
    if let Some(extra) = toks.get(i + 2) {
        return Err(Diagnostic::new(extra.pos, format!("unexpected `{}`", extra.text)));
    }
    Ok(OrbitDecl { pos: head, base: BaseDecl::Ep { prefix, cycle, cycle_pos }, multiplicity })
}

fn parse_lazy(toks: &[Token]) -> Result<OrbitDecl, Diagnostic> {
    let head = toks[0].pos;
    let expected = "expected `lazy thue-morse over E1 E2 cycle-color C mult M [depth N1,...,Nk]`";
    let [_, kind, over, a, b, cc, c, mult, m, rest @ ..] = toks else {
        return Err(Diagnostic::new(head, expected));
    };
    if kind.text != "thue-morse" {
        return Err(Diagnostic::new(kind.pos, format!("unknown lazy generator `{}`", kind.text)));
    }
    if over.text != "over" || cc.text != "cycle-color" || mult.text != "mult" {
        return Err(Diagnostic::new(head, expected));
    }
    let cycle_color = Spanned { value: parse_count(Some(c), "cycle color", cc.pos)? as usize, pos: c.pos };
    let multiplicity = parse_count(Some(m), "multiplicity", mult.pos)?;
    let depth = match rest {
        [] => None,
        [kw, d] if kw.text == "depth" => Some(parse_degree(d)?),
        [t, ..] => return Err(Diagnostic::new(t.pos, format!("unexpected `{}`", t.text))),
    };
    Ok(OrbitDecl {
        pos: head,
        base: BaseDecl::ThueMorse { letters: [a.into(), b.into()], cycle_color, depth },
        multiplicity,
    })
}

/// Parse the text of a representation file.
pub fn parse_rep(text: &str) -> Result<RepFile, Diagnostics> {
    let mut out = RepFile::default();
    let mut diags = Vec::new();
    for (n, line) in text.lines().enumerate() {
        let toks = tokens(n + 1, line);
        let Some(head) = toks.first() else { continue };
        match head.text {
            "graph" => match toks.as_slice() {
                [_, path] if out.graph.is_none() => out.graph = Some(path.into()),
                [_, _] => diags.push(Diagnostic::new(head.pos, "duplicate graph declaration")),
                _ => diags.push(Diagnostic::new(head.pos, "expected `graph PATH`")),
            },
            "window" => match toks.as_slice() {
                [_, w] if out.window.is_none() => match parse_degree(w) {
                    Ok(w) => out.window = Some(w),
                    Err(d) => diags.push(d),
                },
                [_, _] => diags.push(Diagnostic::new(head.pos, "duplicate window declaration")),
                _ => diags.push(Diagnostic::new(head.pos, "expected `window N1,...,Nk`")),
            },
            "orbit" => match parse_orbit(&toks) {
                Ok(o) => out.orbits.push(o),
                Err(d) => diags.push(d),
            },
            "lazy" => match parse_lazy(&toks) {
                Ok(o) => out.orbits.push(o),
                Err(d) => diags.push(d),
            },
            other => diags.push(Diagnostic::new(head.pos, format!("unknown declaration `{other}`"))),
        }
    }
    if out.graph.is_none() {
        diags.push(Diagnostic::new(Pos { line: 1, col: 1 }, "missing graph declaration"));
    }
    if out.orbits.is_empty() {
        diags.push(Diagnostic::new(Pos { line: 1, col: 1 }, "no orbit declared"));
    }
    if diags.is_empty() {
        Ok(out)
    } else {
        diags.sort_by_key(|d| d.pos);
        Err(Diagnostics(diags))
    }
}

fn degree_of(g: &KGraph, d: &Spanned<Vec<u32>>) -> Result<Degree, Diagnostic> {
    if d.value.len() != g.rank() {
        return Err(Diagnostic::new(
            d.pos,
            format!("degree has {} coordinates, the graph has rank {}", d.value.len(), g.rank()),
        ));
    }
    Ok(Degree::from_slice(&d.value))
}

fn resolve_word(g: &KGraph, word: &[Spanned<String>]) -> Result<Morphism, Diagnostic> {
    let skel = g.skeleton();
    let mut ids = Vec::with_capacity(word.len());
    for w in word {
        ids.push(skel.edge_id(&w.value).ok_or_else(|| Diagnostic::new(w.pos, format!("unknown edge `{}`", w.value)))?);
    }
    g.normal_form(&ids).map_err(|e| match e {
        kgraph::GraphError::NotComposable { position } => {
            let at = word.get(position).unwrap_or(&word[0]);
            Diagnostic::new(at.pos, format!("word is not composable at `{}`", at.value))
        }
        other => Diagnostic::new(word[0].pos, other.to_string()),
    })
}

fn path_error(pos: Pos, e: PathError) -> Diagnostic {
    match e {
        PathError::CycleDegreeZero { coordinate } => {
            Diagnostic::new(pos, format!("cycle has no edge of color {}; every color must occur", coordinate + 1))
        }
        other => Diagnostic::new(pos, other.to_string()),
    }
}

impl RepFile {
    /// The window: `window` if given, else the file's window, else 3 in
    /// every color.
    pub fn window(&self, g: &KGraph, window: Option<&Degree>) -> Result<Degree, Diagnostics> {
        match (window, &self.window) {
            (Some(w), _) => Ok(w.clone()),
            (None, Some(w)) => degree_of(g, w).map_err(|d| Diagnostics(vec![d])),
            (None, None) => Ok(Degree::splat(g.rank(), 3)),
        }
    }

    fn base(&self, g: &KGraph, o: &OrbitDecl, window: &Degree) -> Result<InfinitePath, Diagnostic> {
        match &o.base {
            BaseDecl::Ep { prefix, cycle, cycle_pos } => {
                let c = resolve_word(g, cycle)?;
                let ep = if prefix.is_empty() {
                    g.ep_periodic(&c)
                } else {
                    let p = resolve_word(g, prefix)?;
                    g.ep_path(&p, &c)
                };
                ep.map(Into::into).map_err(|e| path_error(*cycle_pos, e))
            }
            BaseDecl::ThueMorse { letters, cycle_color, depth } => {
                let skel = g.skeleton();
                let mut ids = [0; 2];
                for (id, l) in ids.iter_mut().zip(letters) {
                    *id = skel
                        .edge_id(&l.value)
                        .ok_or_else(|| Diagnostic::new(l.pos, format!("unknown edge `{}`", l.value)))?;
                }
                if cycle_color.value > g.rank() {
                    return Err(Diagnostic::new(
                        cycle_color.pos,
                        format!("cycle color {} is outside 1..={}", cycle_color.value, g.rank()),
                    ));
                }
                let depth = match depth {
                    Some(d) => degree_of(g, d)?,
                    None => window.scale(4),
                };
                let tm = ThueMorse::new(g, ids, cycle_color.value - 1, depth).map_err(|e| path_error(o.pos, e))?;
                Ok(LazyPath::new(g, Arc::new(tm)).into())
            }
        }
    }

    /// Resolve against a validated graph. `window` overrides the file's
    /// window.
    pub fn build(&self, g: &Arc<KGraph>, window: Option<&Degree>) -> Result<AtomicRepSpec, Diagnostics> {
        let window = self.window(g, window)?;
        let mut orbits = Vec::new();
        let mut diags = Vec::new();
        for o in &self.orbits {
            match self.base(g, o, &window) {
                Ok(base) => orbits.push(OrbitSpec { base, multiplicity: o.multiplicity }),
                Err(d) => diags.push(d),
            }
        }
        if !diags.is_empty() {
            return Err(Diagnostics(diags));
        }
        AtomicRepSpec::new(g.clone(), orbits, window).map_err(|e| {
            let at = |i: usize| self.orbits[i].pos;
            let d = match e {
                ReprError::OrbitCollision { first, second } => Diagnostic::new(
                    at(second),
                    format!("this base lies in the same orbit as the base declared at {}", at(first)),
                ),
                ReprError::UndecidedOrbits { first, second } => Diagnostic::new(
                    at(second),
                    format!("cannot decide whether this base shares an orbit with the base at {}", at(first)),
                ),
                ReprError::ShallowBase { index, depth, window } => Diagnostic::new(
                    at(index),
                    format!("lazy depth {depth} is too shallow for window {window}; need at least 3 × window"),
                ),
                other => Diagnostic::new(at(0), other.to_string()),
            };
            Diagnostics(vec![d])
        })
    }
}
