//! The Kauffman bracket at `A = exp(i*pi/4)`.
//!
//! At this value the loop factor `-A^2 - A^-2` is zero, so a state
//! contributes only when its resolution is a single circle:
//! `<L> = sum over monocyclic states of A^(alpha - beta)`.
//! Values live in `Z[A]/(A^4 + 1)` and, for genuine link diagrams, are always
//! an integer times a power of `A`.

use std::collections::HashMap;
use std::fmt;

use crate::diagram::{Assembly, LinkDiagram, UnionFind};
use crate::scalar::Overflow;

/// Default crossing cap for state enumeration.
pub const DEFAULT_MAX_CROSSINGS: usize = 24;

/// Crossing cap for the skein recursion.
pub const RECURSION_MAX_CROSSINGS: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum BracketError {
    #[error("{found} crossings exceeds the cap of {cap}")]
    TooManyCrossings { found: usize, cap: usize },
    #[error("bracket value {0} is not an integer multiple of a power of A")]
    NotUnitMultiple(Zeta8),
    #[error(transparent)]
    Overflow(#[from] Overflow),
    #[error("the empty link has no bracket")]
    EmptyLink,
}

/// `c0 + c1*A + c2*A^2 + c3*A^3` with `A^4 = -1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Zeta8 {
    pub coeffs: [i64; 4],
}

impl Zeta8 {
    pub const ZERO: Zeta8 = Zeta8 { coeffs: [0; 4] };
    pub const ONE: Zeta8 = Zeta8 { coeffs: [1, 0, 0, 0] };

    pub fn new(coeffs: [i64; 4]) -> Self {
        Self { coeffs }
    }

    /// `A^k` for any integer `k`.
    pub fn unit(k: i64) -> Self {
        let e = k.rem_euclid(8) as usize;
        let mut coeffs = [0; 4];
        coeffs[e % 4] = if e < 4 { 1 } else { -1 };
        Self { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs == [0; 4]
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self, Overflow> {
        let mut coeffs = [0; 4];
        for (i, c) in coeffs.iter_mut().enumerate() {
            *c = self.coeffs[i].checked_add(other.coeffs[i]).ok_or(Overflow)?;
        }
        Ok(Self { coeffs })
    }

    /// Product with `A^k`: a signed rotation of the coefficients.
    pub fn mul_unit(&self, k: i64) -> Result<Self, Overflow> {
        let shift = k.rem_euclid(8) as usize;
        let mut coeffs = [0i64; 4];
        for (i, &c) in self.coeffs.iter().enumerate() {
            let e = i + shift;
            let v = if (e / 4).is_multiple_of(2) {
                c
            } else {
                c.checked_neg().ok_or(Overflow)?
            };
            coeffs[e % 4] = v;
        }
        Ok(Self { coeffs })
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self, Overflow> {
        let mut acc = [0i64; 8];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in other.coeffs.iter().enumerate() {
                let p = a.checked_mul(b).ok_or(Overflow)?;
                acc[i + j] = acc[i + j].checked_add(p).ok_or(Overflow)?;
            }
        }
        let mut coeffs = [0; 4];
        for i in 0..4 {
            coeffs[i] = acc[i].checked_sub(acc[i + 4]).ok_or(Overflow)?;
        }
        Ok(Self { coeffs })
    }
}

impl fmt::Display for Zeta8 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c, d] = self.coeffs;
        write!(f, "({a} + {b}*A + {c}*A^2 + {d}*A^3)")
    }
}

/// `p * A^k` with `p >= 0`, `k` in `0..8`, and `k = 0` whenever `p = 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ZPhi {
    magnitude: u64,
    exponent: u8,
}

impl ZPhi {
    pub const ZERO: ZPhi = ZPhi {
        magnitude: 0,
        exponent: 0,
    };
    pub const ONE: ZPhi = ZPhi {
        magnitude: 1,
        exponent: 0,
    };

    pub fn new(magnitude: u64, exponent: i64) -> Self {
        let exponent = if magnitude == 0 {
            0
        } else {
            exponent.rem_euclid(8) as u8
        };
        Self { magnitude, exponent }
    }

    pub fn magnitude(&self) -> u64 {
        self.magnitude
    }

    pub fn exponent(&self) -> u8 {
        self.exponent
    }

    pub fn is_zero(&self) -> bool {
        self.magnitude == 0
    }

    /// Multiplies by `A^k`.
    pub fn mul_unit(&self, k: i64) -> Self {
        Self::new(self.magnitude, self.exponent as i64 + k)
    }

    pub fn to_zeta8(&self) -> Result<Zeta8, Overflow> {
        let p = i64::try_from(self.magnitude).map_err(|_| Overflow)?;
        Zeta8 { coeffs: [p, 0, 0, 0] }.mul_unit(self.exponent as i64)
    }
}

impl fmt::Display for ZPhi {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}*A^{}", self.magnitude, self.exponent)
    }
}

/// Writes `v` as `p * A^k` if at most one coefficient is nonzero.
pub fn normalize_zphi(v: Zeta8) -> Result<ZPhi, BracketError> {
    let nonzero: Vec<usize> = (0..4).filter(|&i| v.coeffs[i] != 0).collect();
    match nonzero.as_slice() {
        [] => Ok(ZPhi::ZERO),
        &[i] => {
            let c = v.coeffs[i];
            let k = i as i64 + if c < 0 { 4 } else { 0 };
            Ok(ZPhi::new(c.unsigned_abs(), k))
        }
        _ => Err(BracketError::NotUnitMultiple(v)),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Smoothing {
    /// Joins slots 0-1 and 2-3.
    A,
    /// Joins slots 0-3 and 1-2.
    B,
}

impl Smoothing {
    fn pairs(self) -> [(usize, usize); 2] {
        match self {
            Smoothing::A => [(0, 1), (2, 3)],
            Smoothing::B => [(0, 3), (1, 2)],
        }
    }
}

/// A smoothing choice for every crossing of a link, by crossing index.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct State(pub Vec<Smoothing>);

impl State {
    /// State number `index` of the binary counter, crossing 0 least
    /// significant, bit 1 meaning `B`.
    pub fn from_index(crossings: usize, index: u64) -> Self {
        State(
            (0..crossings)
                .map(|i| {
                    if index >> i & 1 == 1 {
                        Smoothing::B
                    } else {
                        Smoothing::A
                    }
                })
                .collect(),
        )
    }

    pub fn alpha(&self) -> usize {
        self.0.iter().filter(|&&s| s == Smoothing::A).count()
    }

    pub fn beta(&self) -> usize {
        self.0.len() - self.alpha()
    }
}

fn circles_of(link: &LinkDiagram, smoothing: impl Fn(usize) -> Smoothing) -> u32 {
    let mut uf = UnionFind::new(link.arc_count());
    let mut components = link.arc_count() as u32;
    for (i, c) in link.crossings().iter().enumerate() {
        for (x, y) in smoothing(i).pairs() {
            if uf.union(c.0[x], c.0[y]) {
                components -= 1;
            }
        }
    }
    components + link.free_loops()
}

/// Number of circles in the resolution of `link` by `state`.
pub fn resolve(link: &LinkDiagram, state: &State) -> u32 {
    assert_eq!(state.0.len(), link.crossing_count(), "state must cover every crossing");
    circles_of(link, |i| state.0[i])
}

/// Options for [`bracket_statesum_with`].
#[derive(Debug, Clone, Copy)]
pub struct StateSumOptions {
    pub max_crossings: usize,
    /// Worker threads; the result does not depend on this.
    pub workers: usize,
}

impl Default for StateSumOptions {
    fn default() -> Self {
        Self {
            max_crossings: DEFAULT_MAX_CROSSINGS,
            workers: 1,
        }
    }
}

/// Counts monocyclic states in `range` by `beta mod 8`.
fn monocyclic_counts(link: &LinkDiagram, range: std::ops::Range<u64>) -> [u64; 8] {
    let mut counts = [0u64; 8];
    for index in range {
        let smoothing = |i: usize| {
            if index >> i & 1 == 1 {
                Smoothing::B
            } else {
                Smoothing::A
            }
        };
        if circles_of(link, smoothing) == 1 {
            counts[(index.count_ones() % 8) as usize] += 1;
        }
    }
    counts
}

/// Exact bracket by brute-force state sum, before normalization.
pub fn statesum_zeta8(link: &LinkDiagram, opts: StateSumOptions) -> Result<Zeta8, BracketError> {
    let c = link.crossing_count();
    if c > opts.max_crossings || c >= 64 {
        return Err(BracketError::TooManyCrossings {
            found: c,
            cap: opts.max_crossings.min(63),
        });
    }
    if c == 0 && link.free_loops() == 0 {
        return Err(BracketError::EmptyLink);
    }
    let total = 1u64 << c;
    let workers = opts.workers.clamp(1, 64) as u64;
    let counts = if workers == 1 || total < 1 << 12 {
        monocyclic_counts(link, 0..total)
    } else {
        let chunk = total.div_ceil(workers);
        std::thread::scope(|s| {
            let handles: Vec<_> = (0..workers)
                .map(|w| {
                    let range = (w * chunk).min(total)..((w + 1) * chunk).min(total);
                    s.spawn(move || monocyclic_counts(link, range))
                })
                .collect();
            let mut counts = [0u64; 8];
            for h in handles {
                let part = h.join().expect("state-sum worker panicked");
                for (acc, v) in counts.iter_mut().zip(part) {
                    *acc += v;
                }
            }
            counts
        })
    };
    let mut sum = Zeta8::ZERO;
    for (beta_mod, &n) in counts.iter().enumerate() {
        if n == 0 {
            continue;
        }
        let n = i64::try_from(n).map_err(|_| Overflow)?;
        // alpha - beta = c - 2*beta
        let term = Zeta8 { coeffs: [n, 0, 0, 0] }.mul_unit(c as i64 - 2 * beta_mod as i64)?;
        sum = sum.checked_add(&term)?;
    }
    Ok(sum)
}

pub fn bracket_statesum(link: &LinkDiagram) -> Result<ZPhi, BracketError> {
    bracket_statesum_with(link, StateSumOptions::default())
}

pub fn bracket_statesum_with(link: &LinkDiagram, opts: StateSumOptions) -> Result<ZPhi, BracketError> {
    normalize_zphi(statesum_zeta8(link, opts)?)
}

/// `link` with crossing `index` replaced by the given smoothing.
pub fn smooth_at(link: &LinkDiagram, index: usize, s: Smoothing) -> LinkDiagram {
    let mut asm = Assembly::new();
    let slots = asm.add_link_without(link, index);
    for (x, y) in s.pairs() {
        asm.join(slots[x], slots[y]);
    }
    asm.finish_link()
}

fn recurse(link: &LinkDiagram, memo: &mut HashMap<LinkDiagram, Zeta8>) -> Result<Zeta8, BracketError> {
    if link.crossing_count() == 0 {
        return Ok(if link.free_loops() == 1 {
            Zeta8::ONE
        } else {
            Zeta8::ZERO
        });
    }
    // A split circle multiplies by the vanishing loop factor.
    if link.free_loops() > 0 {
        return Ok(Zeta8::ZERO);
    }
    if let Some(v) = memo.get(link) {
        return Ok(*v);
    }
    let a = recurse(&smooth_at(link, 0, Smoothing::A), memo)?.mul_unit(1)?;
    let b = recurse(&smooth_at(link, 0, Smoothing::B), memo)?.mul_unit(-1)?;
    let v = a.checked_add(&b)?;
    memo.insert(link.clone(), v);
    Ok(v)
}

/// Bracket by memoized skein recursion, before normalization.
pub fn recursive_zeta8(link: &LinkDiagram) -> Result<Zeta8, BracketError> {
    let c = link.crossing_count();
    if c > RECURSION_MAX_CROSSINGS {
        return Err(BracketError::TooManyCrossings {
            found: c,
            cap: RECURSION_MAX_CROSSINGS,
        });
    }
    if c == 0 && link.free_loops() == 0 {
        return Err(BracketError::EmptyLink);
    }
    recurse(link, &mut HashMap::new())
}

pub fn bracket_recursive(link: &LinkDiagram) -> Result<ZPhi, BracketError> {
    normalize_zphi(recursive_zeta8(link)?)
}
