//! Line-oriented text format.
//!
//! ```text
//! tangle
//! holes 1
//! loops 0
//! outer a b c d
//! hole a b c d
//! X e f g h
//! ```
//!
//! Closed links use a `link` header followed by `loops` and `X` lines.
//! `#` starts a comment and blank lines are ignored.

use std::collections::HashMap;
use std::fmt::Write as _;

use super::{degree_violations, ArcId, BoundaryCycle, Crossing, LinkDiagram, TangleDiagram, Violation};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ParseError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("invalid diagram: {}", join_violations(.0))]
    Invalid(Vec<Violation>),
}

fn join_violations(v: &[Violation]) -> String {
    v.iter().map(ToString::to_string).collect::<Vec<_>>().join("; ")
}

impl ParseError {
    pub fn violations(&self) -> &[Violation] {
        match self {
            ParseError::Invalid(v) => v,
            ParseError::Syntax { .. } => &[],
        }
    }
}

/// Either kind of diagram a file may hold.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParsedDiagram {
    Tangle(TangleDiagram),
    Link(LinkDiagram),
}

/// A diagram as written, with string labels and unchecked arities.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct RawDiagram {
    pub is_link: bool,
    pub declared_holes: usize,
    pub loops: u32,
    pub outer: Vec<String>,
    pub holes: Vec<Vec<String>>,
    pub crossings: Vec<Vec<String>>,
}

fn is_label(s: &str) -> bool {
    !s.is_empty() && s.bytes().all(|b| b.is_ascii_alphanumeric() || b == b'_')
}

type TokenLines<'a> = Box<dyn Iterator<Item = (usize, Vec<&'a str>)> + 'a>;

struct Lines<'a> {
    inner: std::iter::Peekable<TokenLines<'a>>,
    last: usize,
}

impl<'a> Lines<'a> {
    fn new(text: &'a str) -> Self {
        let it: TokenLines<'a> = Box::new(
            text.lines()
                .enumerate()
                .map(|(i, l)| {
                    (
                        i + 1,
                        l.split('#').next().unwrap_or("").split_whitespace().collect::<Vec<_>>(),
                    )
                })
                .filter(|(_, toks)| !toks.is_empty()),
        );
        Self {
            inner: it.peekable(),
            last: 0,
        }
    }

    fn next(&mut self) -> Option<(usize, Vec<&'a str>)> {
        let item = self.inner.next();
        if let Some((n, _)) = &item {
            self.last = *n;
        }
        item
    }

    fn peek_keyword(&mut self) -> Option<&'a str> {
        self.inner.peek().map(|(_, t)| t[0])
    }

    fn expect(&mut self, keyword: &str) -> Result<(usize, Vec<&'a str>), ParseError> {
        match self.next() {
            Some((n, toks)) if toks[0] == keyword => Ok((n, toks)),
            Some((n, toks)) => Err(syntax(n, format!("expected `{keyword}`, found `{}`", toks[0]))),
            None => Err(syntax(
                self.last + 1,
                format!("expected `{keyword}`, found end of input"),
            )),
        }
    }
}

fn syntax(line: usize, message: impl Into<String>) -> ParseError {
    ParseError::Syntax {
        line,
        message: message.into(),
    }
}

fn count_arg<T: std::str::FromStr>(line: usize, toks: &[&str]) -> Result<T, ParseError> {
    match toks {
        [_, v] => v
            .parse()
            .map_err(|_| syntax(line, format!("`{v}` is not a nonnegative integer"))),
        _ => Err(syntax(line, format!("`{}` takes exactly one number", toks[0]))),
    }
}

fn labels(line: usize, toks: &[&str]) -> Result<Vec<String>, ParseError> {
    toks[1..]
        .iter()
        .map(|t| {
            if is_label(t) {
                Ok(t.to_string())
            } else {
                Err(syntax(line, format!("bad arc label `{t}`")))
            }
        })
        .collect()
}

fn crossing_lines(lines: &mut Lines<'_>, out: &mut Vec<Vec<String>>) -> Result<(), ParseError> {
    while let Some((n, toks)) = lines.next() {
        if toks[0] != "X" {
            return Err(syntax(n, format!("unexpected `{}`", toks[0])));
        }
        out.push(labels(n, &toks)?);
    }
    Ok(())
}

impl RawDiagram {
    /// Reads the line structure; arity and degree are left to [`validate`](Self::validate).
    pub fn parse(text: &str) -> Result<Self, ParseError> {
        let mut lines = Lines::new(text);
        let mut raw = RawDiagram::default();
        let (n, head) = lines.next().ok_or_else(|| syntax(1, "empty input"))?;
        if head.len() != 1 {
            return Err(syntax(n, "header line takes no arguments"));
        }
        match head[0] {
            "tangle" => {
                let (n, t) = lines.expect("holes")?;
                raw.declared_holes = count_arg(n, &t)?;
                let (n, t) = lines.expect("loops")?;
                raw.loops = count_arg(n, &t)?;
                let (n, t) = lines.expect("outer")?;
                raw.outer = labels(n, &t)?;
                while lines.peek_keyword() == Some("hole") {
                    let (n, t) = lines.next().expect("peeked");
                    raw.holes.push(labels(n, &t)?);
                }
            }
            "link" => {
                raw.is_link = true;
                let (n, t) = lines.expect("loops")?;
                raw.loops = count_arg(n, &t)?;
            }
            other => return Err(syntax(n, format!("expected `tangle` or `link`, found `{other}`"))),
        }
        crossing_lines(&mut lines, &mut raw.crossings)?;
        Ok(raw)
    }

    /// Every structural violation, in a stable order.
    pub fn validate(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        let mut arity = |what: String, found: usize| {
            if found != 4 {
                out.push(Violation::Arity { what, found });
            }
        };
        if !self.is_link {
            arity("outer boundary".into(), self.outer.len());
        }
        for (i, h) in self.holes.iter().enumerate() {
            arity(format!("hole {i}"), h.len());
        }
        for (i, c) in self.crossings.iter().enumerate() {
            arity(format!("crossing {i}"), c.len());
        }
        if !self.is_link && self.declared_holes != self.holes.len() {
            out.push(Violation::HoleCount {
                declared: self.declared_holes,
                found: self.holes.len(),
            });
        }
        let (ids, names) = self.intern();
        out.extend(degree_violations(ids.iter()).into_iter().map(|v| match v {
            Violation::Degree { label, count } => Violation::Degree {
                label: names[label.parse::<usize>().expect("numeric id")].clone(),
                count,
            },
            other => other,
        }));
        out
    }

    fn intern(&self) -> (Vec<ArcId>, Vec<String>) {
        let mut map: HashMap<&str, ArcId> = HashMap::new();
        let mut names = Vec::new();
        let all = self
            .outer
            .iter()
            .chain(self.holes.iter().flatten())
            .chain(self.crossings.iter().flatten());
        let ids = all
            .map(|s| {
                *map.entry(s).or_insert_with(|| {
                    names.push(s.clone());
                    (names.len() - 1) as ArcId
                })
            })
            .collect();
        (ids, names)
    }

    pub fn into_diagram(self) -> Result<ParsedDiagram, ParseError> {
        let violations = self.validate();
        if !violations.is_empty() {
            return Err(ParseError::Invalid(violations));
        }
        let (ids, _) = self.intern();
        let mut quads = ids.chunks_exact(4).map(|c| [c[0], c[1], c[2], c[3]]);
        if self.is_link {
            let crossings = quads.map(Crossing).collect();
            return LinkDiagram::new(crossings, self.loops)
                .map(ParsedDiagram::Link)
                .map_err(ParseError::Invalid);
        }
        let outer = BoundaryCycle(quads.next().expect("outer checked"));
        let holes = (&mut quads).take(self.holes.len()).map(BoundaryCycle).collect();
        let crossings = quads.map(Crossing).collect();
        TangleDiagram::new(outer, holes, crossings, self.loops)
            .map(ParsedDiagram::Tangle)
            .map_err(ParseError::Invalid)
    }
}

/// Parses either a `tangle` or a `link` file.
pub fn parse_diagram(text: &str) -> Result<ParsedDiagram, ParseError> {
    RawDiagram::parse(text)?.into_diagram()
}

pub fn parse_tangle(text: &str) -> Result<TangleDiagram, ParseError> {
    match parse_diagram(text)? {
        ParsedDiagram::Tangle(t) => Ok(t),
        ParsedDiagram::Link(_) => Err(syntax(1, "expected a tangle, found a link")),
    }
}

pub fn parse_link(text: &str) -> Result<LinkDiagram, ParseError> {
    match parse_diagram(text)? {
        ParsedDiagram::Link(l) => Ok(l),
        ParsedDiagram::Tangle(_) => Err(syntax(1, "expected a link, found a tangle")),
    }
}

fn push_line(out: &mut String, keyword: &str, arcs: &[ArcId]) {
    out.push_str(keyword);
    for a in arcs {
        let _ = write!(out, " e{a}");
    }
    out.push('\n');
}

/// Canonical text: arcs named `e0, e1, ...` by first appearance.
pub fn serialize_tangle(d: &TangleDiagram) -> String {
    let mut out = format!("tangle\nholes {}\nloops {}\n", d.n_holes(), d.free_loops());
    push_line(&mut out, "outer", &d.outer().0);
    for h in d.holes() {
        push_line(&mut out, "hole", &h.0);
    }
    for c in d.crossings() {
        push_line(&mut out, "X", &c.0);
    }
    out
}

pub fn serialize_link(l: &LinkDiagram) -> String {
    let mut out = format!("link\nloops {}\n", l.free_loops());
    for c in l.crossings() {
        push_line(&mut out, "X", &c.0);
    }
    out
}
