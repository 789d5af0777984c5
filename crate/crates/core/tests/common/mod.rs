//! Test-side oracles, written without the library's evaluators.
#![allow(dead_code)]

use std::collections::BTreeMap;

use rand::Rng;
use tanglekit::bracket::{Smoothing, State};
use tanglekit::diagram::{BoundaryCycle, Crossing};
use tanglekit::generate::Rng64;
use tanglekit::{IntMatrix, LinkDiagram, TangleDiagram, Zeta8};

/// Laurent polynomial in `A` with integer coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Laurent(pub BTreeMap<i64, i128>);

impl Laurent {
    pub fn monomial(exp: i64, coeff: i128) -> Self {
        let mut m = BTreeMap::new();
        if coeff != 0 {
            m.insert(exp, coeff);
        }
        Laurent(m)
    }

    pub fn add(&mut self, other: &Laurent) {
        for (&e, &c) in &other.0 {
            let v = self.0.entry(e).or_insert(0);
            *v += c;
            if *v == 0 {
                self.0.remove(&e);
            }
        }
    }

    pub fn mul(&self, other: &Laurent) -> Laurent {
        let mut out = Laurent::default();
        for (&e1, &c1) in &self.0 {
            for (&e2, &c2) in &other.0 {
                out.add(&Laurent::monomial(e1 + e2, c1 * c2));
            }
        }
        out
    }

    /// `d = -A^2 - A^-2`.
    pub fn loop_factor() -> Laurent {
        let mut d = Laurent::monomial(2, -1);
        d.add(&Laurent::monomial(-2, -1));
        d
    }

    /// Value at `A = exp(i*pi/4)` as coefficients of `1, A, A^2, A^3`.
    pub fn at_eighth_root(&self) -> [i64; 4] {
        let mut out = [0i128; 4];
        for (&e, &c) in &self.0 {
            let r = e.rem_euclid(8);
            if r < 4 {
                out[r as usize] += c;
            } else {
                out[r as usize - 4] -= c;
            }
        }
        out.map(|v| i64::try_from(v).expect("oracle value fits i64"))
    }
}

/// Circles of a state, found by walking slots: along an arc to its other
/// end, then across the crossing as the smoothing dictates.
pub fn count_circles(link: &LinkDiagram, state: &State) -> u32 {
    let xs = link.crossings();
    let n = 4 * xs.len();
    let mut ends: BTreeMap<u32, Vec<usize>> = BTreeMap::new();
    for (i, c) in xs.iter().enumerate() {
        for (j, &a) in c.0.iter().enumerate() {
            ends.entry(a).or_default().push(4 * i + j);
        }
    }
    let along_arc = |s: usize| -> usize {
        let e = &ends[&xs[s / 4].0[s % 4]];
        assert_eq!(e.len(), 2, "arc with {} ends", e.len());
        if e[0] == s {
            e[1]
        } else {
            e[0]
        }
    };
    let across = |s: usize| -> usize {
        let (i, j) = (s / 4, s % 4);
        let k = match state.0[i] {
            Smoothing::A => [1, 0, 3, 2][j],
            Smoothing::B => [3, 2, 1, 0][j],
        };
        4 * i + k
    };
    let mut seen = vec![false; n];
    let mut circles = 0;
    for start in 0..n {
        if seen[start] {
            continue;
        }
        circles += 1;
        let mut s = start;
        loop {
            seen[s] = true;
            let t = along_arc(s);
            seen[t] = true;
            s = across(t);
            if s == start {
                break;
            }
        }
    }
    circles + link.free_loops()
}

/// The full Kauffman bracket polynomial, `<unknot> = 1`.
pub fn bracket_polynomial(link: &LinkDiagram) -> Laurent {
    let c = link.crossing_count();
    assert!(c <= 16, "oracle is exponential");
    let d = Laurent::loop_factor();
    let mut d_pow = vec![Laurent::monomial(0, 1)];
    for k in 1..=2 * c + link.free_loops() as usize {
        let next = d_pow[k - 1].mul(&d);
        d_pow.push(next);
    }
    let mut sum = Laurent::default();
    for idx in 0..1u64 << c {
        let state = State::from_index(c, idx);
        let circles = count_circles(link, &state) as usize;
        let a = state.alpha() as i64 - state.beta() as i64;
        sum.add(&Laurent::monomial(a, 1).mul(&d_pow[circles - 1]));
    }
    sum
}

pub fn oracle_zeta8(link: &LinkDiagram) -> Zeta8 {
    Zeta8::new(bracket_polynomial(link).at_eighth_root())
}

/// Same diagram with arc ids scrambled, crossings shuffled, and each
/// crossing read from a random end of its under-strand.
pub fn scramble_tangle(t: &TangleDiagram, rng: &mut Rng64) -> TangleDiagram {
    use rand::seq::SliceRandom;
    let mut ids: Vec<u32> = (0..t.arc_count() as u32).map(|i| 1000 + 7 * i).collect();
    ids.shuffle(rng);
    let m = |a: u32| ids[a as usize];
    let mut crossings: Vec<Crossing> = t
        .crossings()
        .iter()
        .map(|c| {
            let v = c.0.map(m);
            if rng.gen_bool(0.5) {
                Crossing([v[2], v[3], v[0], v[1]])
            } else {
                Crossing(v)
            }
        })
        .collect();
    crossings.shuffle(rng);
    let holes = t.holes().iter().map(|h| BoundaryCycle(h.0.map(m))).collect();
    TangleDiagram::new(BoundaryCycle(t.outer().0.map(m)), holes, crossings, t.free_loops()).unwrap()
}

/// Arc relabeling only; crossing order and readings are kept.
pub fn relabel_tangle(t: &TangleDiagram, rng: &mut Rng64) -> TangleDiagram {
    use rand::seq::SliceRandom;
    let mut ids: Vec<u32> = (0..t.arc_count() as u32).map(|i| 3 * i + 11).collect();
    ids.shuffle(rng);
    let m = |a: u32| ids[a as usize];
    let holes = t.holes().iter().map(|h| BoundaryCycle(h.0.map(m))).collect();
    let crossings = t.crossings().iter().map(|c| Crossing(c.0.map(m))).collect();
    TangleDiagram::new(BoundaryCycle(t.outer().0.map(m)), holes, crossings, t.free_loops()).unwrap()
}

pub fn scramble_link(l: &LinkDiagram, rng: &mut Rng64) -> LinkDiagram {
    use rand::seq::SliceRandom;
    let mut ids: Vec<u32> = (0..l.arc_count() as u32).map(|i| 500 + 3 * i).collect();
    ids.shuffle(rng);
    let mut crossings: Vec<Crossing> = l
        .crossings()
        .iter()
        .map(|c| Crossing(c.0.map(|a| ids[a as usize])))
        .collect();
    crossings.shuffle(rng);
    LinkDiagram::new(crossings, l.free_loops()).unwrap()
}

pub fn m2(a: i64, c: i64, b: i64, d: i64) -> IntMatrix {
    IntMatrix::from_i64_rows(&[&[a, c], &[b, d]])
}

pub fn random_m2(rng: &mut Rng64, bound: i64) -> IntMatrix {
    let mut e = || rng.gen_range(-bound..=bound);
    m2(e(), e(), e(), e())
}

pub fn random_matrix(rng: &mut Rng64, rows: usize, cols: usize, bound: i64) -> IntMatrix {
    let data = (0..rows * cols).map(|_| rng.gen_range(-bound..=bound)).collect();
    IntMatrix::new(rows, cols, data).unwrap()
}

pub fn col(p: i64, q: i64) -> IntMatrix {
    IntMatrix::column(vec![p, q]).unwrap()
}

/// `[a b; c d]` product on plain arrays, row-major.
pub fn mul2(x: [i64; 4], y: [i64; 4]) -> [i64; 4] {
    [
        x[0] * y[0] + x[1] * y[2],
        x[0] * y[1] + x[1] * y[3],
        x[2] * y[0] + x[3] * y[2],
        x[2] * y[1] + x[3] * y[3],
    ]
}
