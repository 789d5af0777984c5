//! The matrix invariant `F^n` of an n-punctured tangle diagram.

use crate::bracket::{
    bracket_recursive, bracket_statesum_with, BracketError, StateSumOptions, ZPhi, DEFAULT_MAX_CROSSINGS,
};
use crate::diagram::{fundamental, Assembly, Fundamental, LinkDiagram, TangleDiagram};
use crate::matrix::{MatrixError, ProjMatrix};
use crate::IntMatrix;

/// Default cap on holes: `2^(n+1)` closures are evaluated.
pub const DEFAULT_MAX_HOLES: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum InvariantError {
    #[error("fill pattern has {found} entries for a diagram with {expected} holes")]
    ArityMismatch { expected: usize, found: usize },
    #[error("{found} holes exceeds the cap of {cap}")]
    TooManyHoles { found: usize, cap: usize },
    #[error("no phase makes every entry an integer")]
    NoIntegerNormalization,
    #[error(transparent)]
    Bracket(#[from] BracketError),
    #[error(transparent)]
    Matrix(#[from] MatrixError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ClosureKind {
    /// Joins NW-NE and SW-SE.
    Numerator,
    /// Joins NW-SW and NE-SE.
    Denominator,
}

/// A choice of fundamental tangle for each hole.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FillPattern(pub Vec<Fundamental>);

impl FillPattern {
    /// Pattern at 0-based `rank` in dictionary order on `{1,2}^n`.
    pub fn from_rank(n: usize, rank: usize) -> Self {
        FillPattern(
            (0..n)
                .map(|i| {
                    if rank >> (n - 1 - i) & 1 == 1 {
                        Fundamental::Two
                    } else {
                        Fundamental::One
                    }
                })
                .collect(),
        )
    }

    /// All `2^n` patterns in dictionary order.
    pub fn all(n: usize) -> impl Iterator<Item = FillPattern> {
        (0..1usize << n).map(move |r| Self::from_rank(n, r))
    }

    /// Number of coordinates equal to 2.
    pub fn twos(&self) -> usize {
        self.0.iter().filter(|&&f| f == Fundamental::Two).count()
    }
}

/// The doubling sequence `a_0 = (0)`, `a_k = (a_{k-1}, a_{k-1} + 1)`.
pub fn t_sequence(n: usize) -> Vec<u32> {
    assert!(n <= 20, "t_sequence is limited to n <= 20");
    let mut a = vec![0u32];
    for _ in 0..n {
        let shifted: Vec<u32> = a.iter().map(|t| t + 1).collect();
        a.extend(shifted);
    }
    a
}

/// Fills every hole with a fundamental tangle and closes the outer boundary.
pub fn close_and_fill(t: &TangleDiagram, kind: ClosureKind, fill: &FillPattern) -> Result<LinkDiagram, InvariantError> {
    if fill.0.len() != t.n_holes() {
        return Err(InvariantError::ArityMismatch {
            expected: t.n_holes(),
            found: fill.0.len(),
        });
    }
    let mut asm = Assembly::new();
    let p = asm.add_tangle(t);
    for (hole, &f) in p.holes.iter().zip(&fill.0) {
        let filler = asm.add_tangle(&fundamental(f));
        for (&h, &o) in hole.iter().zip(&filler.outer) {
            asm.join(h, o);
        }
    }
    let o = p.outer;
    match kind {
        ClosureKind::Numerator => {
            asm.join(o[0], o[3]);
            asm.join(o[1], o[2]);
        }
        ClosureKind::Denominator => {
            asm.join(o[0], o[1]);
            asm.join(o[2], o[3]);
        }
    }
    Ok(asm.finish_link())
}

/// Which bracket evaluator drives [`compute_invariant_with`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Engine {
    #[default]
    Recursive,
    StateSum,
}

#[derive(Debug, Clone, Copy)]
pub struct InvariantOptions {
    pub max_holes: usize,
    pub max_crossings: usize,
    pub engine: Engine,
}

impl Default for InvariantOptions {
    fn default() -> Self {
        Self {
            max_holes: DEFAULT_MAX_HOLES,
            max_crossings: DEFAULT_MAX_CROSSINGS,
            engine: Engine::default(),
        }
    }
}

pub fn compute_invariant(t: &TangleDiagram) -> Result<IntMatrix, InvariantError> {
    compute_invariant_with(t, InvariantOptions::default())
}

/// Brackets of every closure, numerator row first, columns in dictionary order.
pub fn closure_brackets(t: &TangleDiagram, opts: InvariantOptions) -> Result<[Vec<ZPhi>; 2], InvariantError> {
    let n = t.n_holes();
    if n > opts.max_holes {
        return Err(InvariantError::TooManyHoles {
            found: n,
            cap: opts.max_holes,
        });
    }
    if t.crossing_count() > opts.max_crossings {
        return Err(BracketError::TooManyCrossings {
            found: t.crossing_count(),
            cap: opts.max_crossings,
        }
        .into());
    }
    let eval = |l: &LinkDiagram| match opts.engine {
        Engine::Recursive => bracket_recursive(l),
        Engine::StateSum => bracket_statesum_with(
            l,
            StateSumOptions {
                max_crossings: opts.max_crossings,
                workers: 1,
            },
        ),
    };
    let mut rows = [Vec::with_capacity(1 << n), Vec::with_capacity(1 << n)];
    for fill in FillPattern::all(n) {
        for (row, kind) in rows.iter_mut().zip([ClosureKind::Numerator, ClosureKind::Denominator]) {
            row.push(eval(&close_and_fill(t, kind, &fill)?)?);
        }
    }
    Ok(rows)
}

pub fn compute_invariant_with(t: &TangleDiagram, opts: InvariantOptions) -> Result<IntMatrix, InvariantError> {
    let n = t.n_holes();
    let [num, den] = closure_brackets(t, opts)?;
    let ts = t_sequence(n);
    // Phase exponents of A before the normalizing factor z: (-i)^t = A^(6t), i = A^2.
    let phased: Vec<(ZPhi, i64)> = num
        .iter()
        .zip(&ts)
        .map(|(v, &tj)| (*v, 6 * tj as i64))
        .chain(den.iter().zip(&ts).map(|(v, &tj)| (*v, 6 * tj as i64 + 2)))
        .collect();
    let zeta = (0..8)
        .find(|&z| {
            phased
                .iter()
                .all(|(v, ph)| v.is_zero() || (v.exponent() as i64 + ph + z) % 4 == 0)
        })
        .ok_or(InvariantError::NoIntegerNormalization)?;
    let entries = phased
        .iter()
        .map(|(v, ph)| {
            let p = i64::try_from(v.magnitude()).map_err(|_| crate::Overflow)?;
            Ok(if (v.exponent() as i64 + ph + zeta) % 8 == 0 {
                p
            } else {
                -p
            })
        })
        .collect::<Result<Vec<i64>, crate::Overflow>>()
        .map_err(MatrixError::from)?;
    Ok(ProjMatrix::new(2, 1 << n, entries)?)
}

/// `ad - bc` of a 2x2 projective matrix.
pub fn determinant(m: &IntMatrix) -> Result<i64, InvariantError> {
    Ok(m.det2()?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bracket::bracket_statesum;
    use crate::diagram::{crossing, identity_spherical, twist};

    fn col(a: i64, b: i64) -> IntMatrix {
        IntMatrix::from_i64_rows(&[&[a], &[b]])
    }

    #[test]
    fn t_sequence_matches_closed_form() {
        assert_eq!(t_sequence(0), vec![0]);
        assert_eq!(t_sequence(2), vec![0, 1, 1, 2]);
        for n in 0..=12 {
            let seq = t_sequence(n);
            assert_eq!(*seq.last().unwrap(), n as u32);
            let closed: Vec<u32> = FillPattern::all(n).map(|f| f.twos() as u32).collect();
            assert_eq!(seq, closed);
        }
    }

    #[test]
    fn dictionary_order() {
        let all: Vec<_> = FillPattern::all(2).collect();
        use Fundamental::*;
        assert_eq!(
            all,
            vec![
                FillPattern(vec![One, One]),
                FillPattern(vec![One, Two]),
                FillPattern(vec![Two, One]),
                FillPattern(vec![Two, Two])
            ]
        );
        let mut sorted = all.clone();
        sorted.sort();
        assert_eq!(sorted, all);
    }

    #[test]
    fn closures_of_identity() {
        let i = identity_spherical();
        let one = FillPattern(vec![Fundamental::One]);
        let two = FillPattern(vec![Fundamental::Two]);
        let l1 = close_and_fill(&i, ClosureKind::Numerator, &one).unwrap();
        assert_eq!(bracket_statesum(&l1).unwrap(), ZPhi::ONE);
        let l2 = close_and_fill(&i, ClosureKind::Numerator, &two).unwrap();
        assert_eq!(l2.free_loops(), 2);
        assert_eq!(bracket_statesum(&l2).unwrap(), ZPhi::ZERO);
        let d = close_and_fill(
            &fundamental(Fundamental::One),
            ClosureKind::Denominator,
            &FillPattern(vec![]),
        )
        .unwrap();
        assert_eq!(d.free_loops(), 2);
        assert!(matches!(
            close_and_fill(&i, ClosureKind::Numerator, &FillPattern(vec![])),
            Err(InvariantError::ArityMismatch { expected: 1, found: 0 })
        ));
    }

    #[test]
    fn calibration() {
        assert_eq!(compute_invariant(&fundamental(Fundamental::One)).unwrap(), col(1, 0));
        assert_eq!(compute_invariant(&fundamental(Fundamental::Two)).unwrap(), col(0, 1));
        assert_eq!(compute_invariant(&crossing()).unwrap(), col(1, 1));
        assert_eq!(
            compute_invariant(&identity_spherical()).unwrap(),
            IntMatrix::identity(2)
        );
        for p in -6..=6 {
            assert_eq!(compute_invariant(&twist(p)).unwrap(), col(p, 1), "twist({p})");
        }
    }

    #[test]
    fn engines_agree() {
        let opts = InvariantOptions {
            engine: Engine::StateSum,
            ..Default::default()
        };
        for p in [-3, 2, 5] {
            let t = twist(p);
            assert_eq!(
                compute_invariant_with(&t, opts).unwrap(),
                compute_invariant(&t).unwrap()
            );
        }
    }

    #[test]
    fn caps() {
        let opts = InvariantOptions {
            max_holes: 0,
            ..Default::default()
        };
        assert!(matches!(
            compute_invariant_with(&identity_spherical(), opts),
            Err(InvariantError::TooManyHoles { found: 1, cap: 0 })
        ));
        let opts = InvariantOptions {
            max_crossings: 2,
            ..Default::default()
        };
        assert!(matches!(
            compute_invariant_with(&twist(3), opts),
            Err(InvariantError::Bracket(_))
        ));
    }

    #[test]
    fn determinants() {
        assert_eq!(determinant(&IntMatrix::identity(2)).unwrap(), 1);
        assert_eq!(
            determinant(&IntMatrix::from_i64_rows(&[&[-32, 16], &[-16, -10]])).unwrap(),
            576
        );
        assert_eq!(determinant(&IntMatrix::from_i64_rows(&[&[1, 1], &[0, 0]])).unwrap(), 0);
        assert!(matches!(
            determinant(&col(1, 0)),
            Err(InvariantError::Matrix(MatrixError::Shape(_)))
        ));
    }
}
