//! Gluing of diagram pieces along boundary points.
//!
//! Pieces are copied in with disjoint arc ids. Gluing two boundary points
//! joins the arcs that end there; afterwards each connected class of arcs is
//! either one arc of the result (two surviving attachments) or a closed
//! circle (none).

use std::collections::HashSet;

use super::{ArcId, BoundaryCycle, Crossing, LinkDiagram, TangleDiagram, UnionFind};

#[derive(Debug, Default)]
pub(crate) struct Assembly {
    next: ArcId,
    joins: Vec<(ArcId, ArcId)>,
    crossings: Vec<Crossing>,
    free_loops: u32,
}

/// Boundary points of a piece after it was added to an [`Assembly`].
#[derive(Debug, Clone)]
pub(crate) struct Placed {
    pub outer: [ArcId; 4],
    pub holes: Vec<[ArcId; 4]>,
}

impl Assembly {
    pub(crate) fn new() -> Self {
        Self::default()
    }

    fn reserve(&mut self, arcs: usize) -> ArcId {
        let offset = self.next;
        self.next += arcs as ArcId;
        offset
    }

    /// Copies a tangle in; its boundary points are returned, not kept.
    pub(crate) fn add_tangle(&mut self, d: &TangleDiagram) -> Placed {
        let off = self.reserve(d.arc_count());
        self.crossings
            .extend(d.crossings.iter().map(|c| Crossing(c.0.map(|a| a + off))));
        self.free_loops += d.free_loops;
        Placed {
            outer: d.outer.0.map(|a| a + off),
            holes: d.holes.iter().map(|h| h.0.map(|a| a + off)).collect(),
        }
    }

    /// Copies a link in, leaving out crossing `skip`; returns that crossing's
    /// slots so the caller can reconnect them.
    pub(crate) fn add_link_without(&mut self, l: &LinkDiagram, skip: usize) -> [ArcId; 4] {
        let off = self.reserve(l.arc_count());
        self.free_loops += l.free_loops;
        let mut removed = [0; 4];
        for (i, c) in l.crossings.iter().enumerate() {
            let c = c.0.map(|a| a + off);
            if i == skip {
                removed = c;
            } else {
                self.crossings.push(Crossing(c));
            }
        }
        removed
    }

    /// Glues the arc ends at two boundary points (or freed crossing slots).
    pub(crate) fn join(&mut self, a: ArcId, b: ArcId) {
        self.joins.push((a, b));
    }

    /// Union-find over arcs and extra circle count, given the slots that
    /// remain attached in the result.
    fn resolve<'a>(&self, kept: impl Iterator<Item = &'a ArcId> + Clone) -> (UnionFind, u32) {
        let mut uf = UnionFind::new(self.next as usize);
        for &(a, b) in &self.joins {
            uf.union(a, b);
        }
        let attached: HashSet<u32> = kept.map(|&a| uf.find(a)).collect();
        let mut closed = HashSet::new();
        for a in 0..self.next {
            let r = uf.find(a);
            if !attached.contains(&r) {
                closed.insert(r);
            }
        }
        (uf, closed.len() as u32)
    }

    pub(crate) fn finish_tangle(self, outer: [ArcId; 4], holes: Vec<[ArcId; 4]>) -> TangleDiagram {
        let kept: Vec<ArcId> = outer
            .iter()
            .chain(holes.iter().flatten())
            .chain(self.crossings.iter().flat_map(|c| c.0.iter()))
            .copied()
            .collect();
        let (mut uf, loops) = self.resolve(kept.iter());
        let mut d = TangleDiagram {
            outer: BoundaryCycle(outer.map(|a| uf.find(a))),
            holes: holes
                .into_iter()
                .map(|h| BoundaryCycle(h.map(|a| uf.find(a))))
                .collect(),
            crossings: self
                .crossings
                .iter()
                .map(|c| Crossing(c.0.map(|a| uf.find(a))))
                .collect(),
            free_loops: self.free_loops + loops,
        };
        debug_assert!(d.validate().is_empty(), "gluing produced an invalid diagram");
        d.canonicalize();
        d
    }

    pub(crate) fn finish_link(self) -> LinkDiagram {
        let (mut uf, loops) = self.resolve(self.crossings.iter().flat_map(|c| c.0.iter()));
        let crossings: Vec<Crossing> = self
            .crossings
            .iter()
            .map(|c| Crossing(c.0.map(|a| uf.find(a))))
            .collect();
        LinkDiagram::from_canonical_parts(crossings, self.free_loops + loops)
    }
}
