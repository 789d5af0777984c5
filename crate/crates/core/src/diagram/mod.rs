//! Combinatorial planar diagram codes for n-punctured ball tangles.
//!
//! A diagram is a set of arcs, each with two ends. Every end sits at a
//! crossing slot or at a marked boundary point. Arcs are identified by
//! [`ArcId`]; an id appearing at exactly two positions is one arc.
//!
//! Boundary points are stored counterclockwise with index 0 at NW, so the
//! outer cycle reads `[NW, SW, SE, NE]`. A hole is stored the same way
//! around its own centre, and hole point `i` is the point that a filling
//! tangle's outer point `i` is glued to.

mod assembly;
mod builders;
mod text;

use std::collections::HashMap;
use std::fmt;

pub(crate) use assembly::Assembly;
pub use builders::{crossing, fundamental, identity_spherical, twist, Fundamental};
pub use text::{
    parse_diagram, parse_link, parse_tangle, serialize_link, serialize_tangle, ParseError, ParsedDiagram, RawDiagram,
};

/// Arc label inside a diagram; canonical diagrams number arcs `0..arc_count`.
pub type ArcId = u32;

/// One end of an arc: the arc and which of its two ends.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ArcEnd {
    pub arc_id: ArcId,
    pub slot: u8,
}

/// A crossing: four arc ends counterclockwise from the incoming
/// under-strand. Strand 0-2 passes under strand 1-3.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Crossing(pub [ArcId; 4]);

impl Crossing {
    /// Same crossing with the over and under strands exchanged.
    pub fn flipped(self) -> Self {
        let [a, b, c, d] = self.0;
        Crossing([b, c, d, a])
    }
}

/// The four marked points of a boundary sphere, counterclockwise from NW.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct BoundaryCycle(pub [ArcId; 4]);

impl BoundaryCycle {
    /// Cyclic shift by one position: point `i` moves to `i + 1`.
    pub fn rotated(self) -> Self {
        let [a, b, c, d] = self.0;
        BoundaryCycle([d, a, b, c])
    }
}

/// A structural defect found by validation.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Violation {
    #[error("arc `{label}` is used {count} times, expected 2")]
    Degree { label: String, count: usize },
    #[error("{what} has {found} points, expected 4")]
    Arity { what: String, found: usize },
    #[error("header declares {declared} holes but {found} are listed")]
    HoleCount { declared: usize, found: usize },
}

/// An n-punctured ball tangle diagram in canonical form.
///
/// Arc ids are renumbered by first appearance (outer boundary, then holes in
/// order, then crossings in order), so two diagrams that differ only by arc
/// labels, or by which end of an under-strand a crossing is read from,
/// compare equal.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TangleDiagram {
    outer: BoundaryCycle,
    holes: Vec<BoundaryCycle>,
    crossings: Vec<Crossing>,
    free_loops: u32,
}

/// A closed link diagram: crossings only, plus crossingless circles.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LinkDiagram {
    crossings: Vec<Crossing>,
    free_loops: u32,
}

fn degree_violations<'a>(labels: impl IntoIterator<Item = &'a ArcId>) -> Vec<Violation> {
    let mut counts: HashMap<ArcId, usize> = HashMap::new();
    for &l in labels {
        *counts.entry(l).or_default() += 1;
    }
    let mut bad: Vec<_> = counts.into_iter().filter(|&(_, c)| c != 2).collect();
    bad.sort_unstable();
    bad.into_iter()
        .map(|(l, count)| Violation::Degree {
            label: l.to_string(),
            count,
        })
        .collect()
}

/// Renumbers arcs by first appearance, boundaries first, then crossings.
///
/// A crossing read from the other end of its under-strand (tuple rotated by
/// two) is the same crossing. Each crossing is stored in the reading that
/// makes the whole label sequence lexicographically smallest, so the result
/// does not depend on the input labels or readings. Readings only need a
/// search when both give the same labels so far, which happens at crossings
/// that share no arc with anything earlier.
fn canonical_relabel(boundaries: &mut [[ArcId; 4]], crossings: &mut [[ArcId; 4]]) {
    let mut map: HashMap<ArcId, ArcId> = HashMap::new();
    for b in boundaries.iter_mut() {
        *b = b.map(|a| label(&mut map, a));
    }
    let mut budget = TIE_BUDGET;
    let best = relabel_from(&map, crossings, &mut budget);
    crossings.copy_from_slice(&best);
}

/// Cap on tie branches explored; past it ties keep the first reading.
const TIE_BUDGET: usize = 1 << 12;

fn label(map: &mut HashMap<ArcId, ArcId>, a: ArcId) -> ArcId {
    let next = map.len() as ArcId;
    *map.entry(a).or_insert(next)
}

/// Labels `t` would receive next, without committing them.
fn preview(map: &HashMap<ArcId, ArcId>, t: &[ArcId; 4]) -> [ArcId; 4] {
    let mut fresh: Vec<ArcId> = Vec::new();
    t.map(|a| match map.get(&a) {
        Some(&v) => v,
        None => {
            let k = fresh.iter().position(|&f| f == a).unwrap_or_else(|| {
                fresh.push(a);
                fresh.len() - 1
            });
            (map.len() + k) as ArcId
        }
    })
}

fn relabel_from(map: &HashMap<ArcId, ArcId>, xs: &[[ArcId; 4]], budget: &mut usize) -> Vec<[ArcId; 4]> {
    let mut map = map.clone();
    let mut out = Vec::with_capacity(xs.len());
    for (i, c) in xs.iter().enumerate() {
        let alt = [c[2], c[3], c[0], c[1]];
        let (pc, pa) = (preview(&map, c), preview(&map, &alt));
        if pc == pa && alt != *c && *budget > 0 {
            *budget -= 1;
            let mut best: Option<Vec<[ArcId; 4]>> = None;
            for reading in [c, &alt] {
                let mut m = map.clone();
                let mut seq = vec![reading.map(|a| label(&mut m, a))];
                seq.extend(relabel_from(&m, &xs[i + 1..], budget));
                if best.as_ref().is_none_or(|b| seq < *b) {
                    best = Some(seq);
                }
            }
            out.extend(best.expect("two readings"));
            return out;
        }
        let pick = if pa < pc { &alt } else { c };
        out.push(pick.map(|a| label(&mut map, a)));
    }
    out
}

impl TangleDiagram {
    /// Validates and canonicalizes a diagram given with arbitrary arc ids.
    pub fn new(
        outer: BoundaryCycle,
        holes: Vec<BoundaryCycle>,
        crossings: Vec<Crossing>,
        free_loops: u32,
    ) -> Result<Self, Vec<Violation>> {
        let mut d = Self {
            outer,
            holes,
            crossings,
            free_loops,
        };
        let violations = d.validate();
        if !violations.is_empty() {
            return Err(violations);
        }
        d.canonicalize();
        Ok(d)
    }

    fn slots(&self) -> impl Iterator<Item = &ArcId> {
        self.outer
            .0
            .iter()
            .chain(self.holes.iter().flat_map(|h| h.0.iter()))
            .chain(self.crossings.iter().flat_map(|c| c.0.iter()))
    }

    fn canonicalize(&mut self) {
        let mut bounds: Vec<[ArcId; 4]> = std::iter::once(self.outer.0)
            .chain(self.holes.iter().map(|h| h.0))
            .collect();
        let mut xs: Vec<[ArcId; 4]> = self.crossings.iter().map(|c| c.0).collect();
        canonical_relabel(&mut bounds, &mut xs);
        self.outer = BoundaryCycle(bounds[0]);
        for (h, b) in self.holes.iter_mut().zip(&bounds[1..]) {
            *h = BoundaryCycle(*b);
        }
        for (c, x) in self.crossings.iter_mut().zip(xs) {
            *c = Crossing(x);
        }
    }

    /// All invariant violations; empty for every constructed diagram.
    pub fn validate(&self) -> Vec<Violation> {
        degree_violations(self.slots())
    }

    pub fn n_holes(&self) -> usize {
        self.holes.len()
    }

    pub fn outer(&self) -> &BoundaryCycle {
        &self.outer
    }

    pub fn holes(&self) -> &[BoundaryCycle] {
        &self.holes
    }

    pub fn crossings(&self) -> &[Crossing] {
        &self.crossings
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    pub fn free_loops(&self) -> u32 {
        self.free_loops
    }

    pub fn arc_count(&self) -> usize {
        2 * self.crossings.len() + 2 * (self.holes.len() + 1)
    }

    /// Mirror image: every crossing flipped.
    pub fn mirrored(&self) -> Self {
        let mut d = self.clone();
        for c in &mut d.crossings {
            *c = c.flipped();
        }
        d.canonicalize();
        d
    }

    /// Rotates the outer cycle by one position.
    pub fn with_outer_rotated(&self) -> Self {
        let mut d = self.clone();
        d.outer = d.outer.rotated();
        d.canonicalize();
        d
    }

    /// Rotates hole `k` by one position; `None` if there is no such hole.
    pub fn with_hole_rotated(&self, k: usize) -> Option<Self> {
        let mut d = self.clone();
        let h = d.holes.get_mut(k)?;
        *h = h.rotated();
        d.canonicalize();
        Some(d)
    }

    /// Every attachment as an arc end, in canonical slot order.
    pub fn arc_ends(&self) -> Vec<ArcEnd> {
        let mut seen: HashMap<ArcId, u8> = HashMap::new();
        self.slots()
            .map(|&a| {
                let slot = seen.entry(a).or_insert(0);
                let end = ArcEnd { arc_id: a, slot: *slot };
                *slot += 1;
                end
            })
            .collect()
    }
}

impl LinkDiagram {
    pub fn new(crossings: Vec<Crossing>, free_loops: u32) -> Result<Self, Vec<Violation>> {
        let violations = degree_violations(crossings.iter().flat_map(|c| c.0.iter()));
        if !violations.is_empty() {
            return Err(violations);
        }
        let mut d = Self { crossings, free_loops };
        d.canonicalize();
        Ok(d)
    }

    /// `k` disjoint crossingless circles.
    pub fn unlink(k: u32) -> Self {
        Self {
            crossings: Vec::new(),
            free_loops: k,
        }
    }

    pub(crate) fn from_canonical_parts(crossings: Vec<Crossing>, free_loops: u32) -> Self {
        let mut d = Self { crossings, free_loops };
        d.canonicalize();
        d
    }

    fn canonicalize(&mut self) {
        let mut xs: Vec<[ArcId; 4]> = self.crossings.iter().map(|c| c.0).collect();
        canonical_relabel(&mut [], &mut xs);
        for (c, x) in self.crossings.iter_mut().zip(xs) {
            *c = Crossing(x);
        }
    }

    pub fn crossings(&self) -> &[Crossing] {
        &self.crossings
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    pub fn free_loops(&self) -> u32 {
        self.free_loops
    }

    pub fn arc_count(&self) -> usize {
        2 * self.crossings.len()
    }

    pub fn mirrored(&self) -> Self {
        let crossings = self.crossings.iter().map(|c| c.flipped()).collect();
        Self::from_canonical_parts(crossings, self.free_loops)
    }

    /// Disjoint union of two link diagrams.
    pub fn disjoint_union(&self, other: &Self) -> Self {
        let offset = self.arc_count() as ArcId;
        let mut crossings = self.crossings.clone();
        crossings.extend(other.crossings.iter().map(|c| Crossing(c.0.map(|a| a + offset))));
        Self::from_canonical_parts(crossings, self.free_loops + other.free_loops)
    }
}

impl fmt::Display for TangleDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&serialize_tangle(self))
    }
}

impl fmt::Display for LinkDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&serialize_link(self))
    }
}

/// Disjoint-set forest over dense indices.
#[derive(Debug, Clone)]
pub(crate) struct UnionFind {
    parent: Vec<u32>,
}

impl UnionFind {
    pub(crate) fn new(n: usize) -> Self {
        Self {
            parent: (0..n as u32).collect(),
        }
    }

    pub(crate) fn find(&mut self, x: u32) -> u32 {
        let mut root = x;
        while self.parent[root as usize] != root {
            root = self.parent[root as usize];
        }
        let mut cur = x;
        while self.parent[cur as usize] != root {
            let next = self.parent[cur as usize];
            self.parent[cur as usize] = root;
            cur = next;
        }
        root
    }

    /// Returns false if the two were already joined.
    pub(crate) fn union(&mut self, a: u32, b: u32) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
        self.parent[hi as usize] = lo;
        true
    }
}
