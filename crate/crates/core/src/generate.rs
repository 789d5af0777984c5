//! Seeded random planar diagrams.
//!
//! Every generator builds diagrams from operations that keep planarity:
//! twist rows, connect sums, boundary rotation and mirroring; partial braid
//! closures; and replacing crossings by holes. A crossing's slots run
//! counterclockwise around it, so a hole cut out at a crossing inherits a
//! valid boundary cycle.

use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::algebra::{connect_h_diagram, connect_v_diagram};
use crate::diagram::{crossing, identity_spherical, twist, ArcId, BoundaryCycle, Crossing, LinkDiagram, TangleDiagram};
use crate::invariant::{close_and_fill, ClosureKind, FillPattern};

pub use rand::SeedableRng;

/// The deterministic generator used throughout.
pub type Rng64 = ChaCha8Rng;

pub fn rng(seed: u64) -> Rng64 {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A braid word: `(i, positive)` is the generator between strands `i` and
/// `i + 1`, 0-based.
pub type BraidWord = Vec<(usize, bool)>;

fn braid_crossing(nw: ArcId, ne: ArcId, sw: ArcId, se: ArcId, positive: bool) -> Crossing {
    if positive {
        Crossing([nw, sw, se, ne])
    } else {
        Crossing([sw, se, ne, nw])
    }
}

/// Runs a braid downward; returns the top and bottom arcs of every strand
/// and the crossings.
fn run_braid(strands: usize, word: &[(usize, bool)]) -> (Vec<ArcId>, Vec<ArcId>, Vec<Crossing>) {
    let top: Vec<ArcId> = (0..strands as ArcId).collect();
    let mut cur = top.clone();
    let mut next = strands as ArcId;
    let mut crossings = Vec::with_capacity(word.len());
    for &(i, pos) in word {
        assert!(i + 1 < strands, "braid generator out of range");
        let (sw, se) = (next, next + 1);
        next += 2;
        crossings.push(braid_crossing(cur[i], cur[i + 1], sw, se, pos));
        cur[i] = sw;
        cur[i + 1] = se;
    }
    (top, cur, crossings)
}

/// Closure of a braid: strand `i` on top joined to strand `i` at the bottom.
pub fn braid_closure(strands: usize, word: &[(usize, bool)]) -> LinkDiagram {
    let (top, bottom, crossings) = run_braid(strands, word);
    let mut rename: Vec<ArcId> = (0..(strands + 2 * word.len()) as ArcId).collect();
    for (t, b) in top.iter().zip(&bottom) {
        rename[*b as usize] = *t;
    }
    let crossings: Vec<Crossing> = crossings
        .iter()
        .map(|c| Crossing(c.0.map(|a| rename[a as usize])))
        .collect();
    // Strands untouched by the word become crossingless circles.
    let loops = top.iter().zip(&bottom).filter(|(t, b)| t == b).count() as u32;
    LinkDiagram::new(crossings, loops).expect("braid closure is valid")
}

/// Ball tangle from a braid on `strands >= 2` strands: strands `2..` are
/// closed around the right side, strands 0 and 1 end on the boundary with
/// NW, NE on top and SW, SE at the bottom.
pub fn partial_braid_closure(strands: usize, word: &[(usize, bool)]) -> TangleDiagram {
    assert!(strands >= 2, "need at least two open strands");
    let (top, bottom, crossings) = run_braid(strands, word);
    let mut rename: Vec<ArcId> = (0..(strands + 2 * word.len()) as ArcId).collect();
    let mut loops = 0;
    for k in 2..strands {
        if top[k] == bottom[k] {
            loops += 1;
        }
        rename[bottom[k] as usize] = top[k];
    }
    let crossings: Vec<Crossing> = crossings
        .iter()
        .map(|c| Crossing(c.0.map(|a| rename[a as usize])))
        .collect();
    let outer = BoundaryCycle([top[0], bottom[0], bottom[1], top[1]]);
    TangleDiagram::new(outer, vec![], crossings, loops).expect("partial closure is valid")
}

/// Replaces the listed crossings by holes. Hole `j` comes from
/// `picks[j] = (crossing index, rotation)`, its points being that
/// crossing's slots shifted by `rotation`.
pub fn puncture(t: &TangleDiagram, picks: &[(usize, usize)]) -> TangleDiagram {
    let mut holes = t.holes().to_vec();
    for &(c, rot) in picks {
        let mut cycle = BoundaryCycle(t.crossings()[c].0);
        for _ in 0..rot % 4 {
            cycle = cycle.rotated();
        }
        holes.push(cycle);
    }
    let crossings = t
        .crossings()
        .iter()
        .enumerate()
        .filter(|(i, _)| !picks.iter().any(|&(c, _)| c == *i))
        .map(|(_, c)| *c)
        .collect();
    TangleDiagram::new(*t.outer(), holes, crossings, t.free_loops()).expect("puncturing keeps degrees")
}

pub fn random_braid_word(rng: &mut Rng64, strands: usize, len: usize) -> BraidWord {
    (0..len)
        .map(|_| (rng.gen_range(0..strands - 1), rng.gen_bool(0.5)))
        .collect()
}

fn random_symmetry(rng: &mut Rng64, mut t: TangleDiagram) -> TangleDiagram {
    for _ in 0..rng.gen_range(0..4) {
        t = t.with_outer_rotated();
    }
    if rng.gen_bool(0.3) {
        t = t.mirrored();
    }
    t
}

/// Algebraic tangle with exactly `holes` holes and at most `budget`
/// crossings, built from twists and identity spherical tangles.
pub fn random_algebraic(rng: &mut Rng64, holes: usize, budget: usize) -> TangleDiagram {
    if holes == 0 && (budget == 0 || rng.gen_bool(0.4)) {
        let k = rng.gen_range(0..=budget.min(4)) as i64;
        let p = if rng.gen_bool(0.5) { k } else { -k };
        return random_symmetry(rng, twist(p));
    }
    if holes == 1 && rng.gen_bool(0.3) {
        let mut t = identity_spherical();
        for _ in 0..rng.gen_range(0..4) {
            t = t.with_hole_rotated(0).expect("one hole");
        }
        return random_symmetry(rng, t);
    }
    let left_holes = rng.gen_range(0..=holes);
    let left_budget = rng.gen_range(0..=budget);
    let a = random_algebraic(rng, left_holes, left_budget);
    let b = random_algebraic(rng, holes - left_holes, budget - a.crossing_count().min(budget));
    let t = if rng.gen_bool(0.5) {
        connect_h_diagram(&a, &b)
    } else {
        connect_v_diagram(&a, &b)
    };
    random_symmetry(rng, t)
}

/// Partial braid closure with `holes` crossings punctured.
pub fn random_punctured_braid(rng: &mut Rng64, holes: usize, max_crossings: usize) -> TangleDiagram {
    let strands = rng.gen_range(2..=4);
    let len = holes + rng.gen_range(0..=max_crossings);
    let word = random_braid_word(rng, strands, len);
    let t = partial_braid_closure(strands, &word);
    let mut idx: Vec<usize> = (0..t.crossing_count()).collect();
    idx.shuffle(rng);
    let picks: Vec<(usize, usize)> = idx.into_iter().take(holes).map(|c| (c, rng.gen_range(0..4))).collect();
    random_symmetry(rng, puncture(&t, &picks))
}

/// A random planar tangle with exactly `holes` holes and at most
/// `max_crossings` crossings, mixing both constructions.
pub fn random_tangle(rng: &mut Rng64, holes: usize, max_crossings: usize) -> TangleDiagram {
    loop {
        let t = if rng.gen_bool(0.5) {
            random_algebraic(rng, holes, max_crossings)
        } else {
            random_punctured_braid(rng, holes, max_crossings)
        };
        if t.crossing_count() <= max_crossings && t.n_holes() == holes {
            return t;
        }
    }
}

/// A random link diagram with between 1 and `max_crossings` crossings.
pub fn random_link(rng: &mut Rng64, max_crossings: usize) -> LinkDiagram {
    assert!(max_crossings >= 1);
    loop {
        let l = match rng.gen_range(0..3) {
            0 => {
                let strands = rng.gen_range(1..=4);
                let len = rng.gen_range(1..=max_crossings);
                if strands == 1 {
                    continue;
                }
                braid_closure(strands, &random_braid_word(rng, strands, len))
            }
            1 => {
                let t = random_tangle(rng, 0, max_crossings);
                let kind = if rng.gen_bool(0.5) {
                    ClosureKind::Numerator
                } else {
                    ClosureKind::Denominator
                };
                close_and_fill(&t, kind, &FillPattern(vec![])).expect("no holes")
            }
            _ => {
                let t = random_tangle(rng, 1, max_crossings);
                let kind = if rng.gen_bool(0.5) {
                    ClosureKind::Numerator
                } else {
                    ClosureKind::Denominator
                };
                let fill = FillPattern::from_rank(1, rng.gen_range(0..2));
                close_and_fill(&t, kind, &fill).expect("one hole")
            }
        };
        if (1..=max_crossings).contains(&l.crossing_count()) {
            return l;
        }
    }
}

/// All braid words of length `len` on `strands` strands.
fn all_words(strands: usize, len: usize) -> Vec<BraidWord> {
    let letters: Vec<(usize, bool)> = (0..strands - 1).flat_map(|i| [(i, true), (i, false)]).collect();
    let mut words = vec![Vec::new()];
    for _ in 0..len {
        words = words
            .into_iter()
            .flat_map(|w| {
                letters.iter().map(move |&l| {
                    let mut w = w.clone();
                    w.push(l);
                    w
                })
            })
            .collect();
    }
    words
}

/// Braid closures of every word of length `1..=6` on 2 and 3 strands and
/// `1..=4` on 4 strands, plus closures of every such partial closure.
pub fn exhaustive_links() -> Vec<LinkDiagram> {
    let mut out = Vec::new();
    for (strands, max_len) in [(2, 6), (3, 6), (4, 4)] {
        for len in 1..=max_len {
            for w in all_words(strands, len) {
                out.push(braid_closure(strands, &w));
                if strands <= 3 && len <= 4 {
                    let t = partial_braid_closure(strands, &w);
                    for kind in [ClosureKind::Numerator, ClosureKind::Denominator] {
                        out.push(close_and_fill(&t, kind, &FillPattern(vec![])).expect("no holes"));
                    }
                }
            }
        }
    }
    out
}

/// A copy of `t` with a cancelling pair of crossings added next to
/// crossing `at` (corner `corner`), or beside the whole tangle if it has
/// no crossings. The result is regularly isotopic to `t`.
pub fn insert_r2(t: &TangleDiagram, at: usize, corner: usize) -> TangleDiagram {
    let bigon = connect_h_diagram(&twist(1), &twist(-1));
    if t.crossing_count() == 0 {
        return connect_h_diagram(t, &bigon);
    }
    // Cut crossing `at` out as an extra hole and glue back the crossing
    // with a bigon on one of its corners.
    let mut q = connect_h_diagram(&crossing(), &bigon);
    for _ in 0..corner % 4 {
        q = q.with_outer_rotated().mirrored();
    }
    let n = t.n_holes();
    let holed = puncture(t, &[(at, 0)]);
    crate::algebra::fill_hole(&holed, n, &q).expect("hole exists")
}
