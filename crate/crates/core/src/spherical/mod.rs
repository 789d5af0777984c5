//! Elementary operations on spherical tangles and on `PM_{2x2}`.
//!
//! A 2x2 invariant is written `[[alpha, gamma], [beta, delta]]`. The five
//! induced operations are signed permutations of `(alpha, beta, gamma,
//! delta)`, taken modulo a global sign, so the generated group is a finite
//! set of [`SignedPermAction`]s.

mod coxeter;
mod fuzz;

use std::collections::{HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;

pub use coxeter::{coset_enumerate, CosetError, Presentation};
pub use fuzz::{fuzz_det_square, FuzzReport, FuzzSample};

use crate::diagram::TangleDiagram;
use crate::matrix::{MatrixError, ProjMatrix};
use crate::scalar::Scalar;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SphericalError {
    #[error("expected a 2x2 matrix, got {0}x{1}")]
    Shape(usize, usize),
    #[error("hole index {index} out of range for {holes} holes")]
    HoleIndex { index: usize, holes: usize },
    #[error("unknown operation letter `{0}`")]
    BadLetter(char),
    #[error(transparent)]
    Matrix(#[from] MatrixError),
}

/// The five elementary operations.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ElemOp {
    /// Mirror image.
    Star,
    /// Exchange of the inside and outside boundaries.
    Dash,
    /// Inner hole turned 90 degrees.
    R1,
    /// Outer boundary turned 90 degrees.
    R2,
    /// Whole tangle turned 90 degrees.
    R,
}

impl ElemOp {
    pub const ALL: [ElemOp; 5] = [ElemOp::Star, ElemOp::Dash, ElemOp::R1, ElemOp::R2, ElemOp::R];

    pub fn action(self) -> SignedPermAction {
        // Slots are (alpha, beta, gamma, delta); new[k] = sign[k] * old[perm[k]].
        let (perm, signs) = match self {
            ElemOp::Star => ([0, 1, 2, 3], [1, -1, -1, 1]),
            ElemOp::Dash => ([3, 1, 2, 0], [1, 1, 1, 1]),
            ElemOp::R1 => ([2, 3, 0, 1], [-1, -1, 1, 1]),
            ElemOp::R2 => ([1, 0, 3, 2], [-1, 1, -1, 1]),
            ElemOp::R => ([3, 2, 1, 0], [1, -1, -1, 1]),
        };
        SignedPermAction::new(perm, signs)
    }

    pub fn name(self) -> &'static str {
        match self {
            ElemOp::Star => "*",
            ElemOp::Dash => "-",
            ElemOp::R1 => "r1",
            ElemOp::R2 => "r2",
            ElemOp::R => "R",
        }
    }
}

/// `new[k] = signs[k] * old[perm[k]]` on the slots `(alpha, beta, gamma,
/// delta)`, modulo negating every sign. Canonical form has `signs[0] = 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignedPermAction {
    perm: [u8; 4],
    signs: [i8; 4],
}

impl SignedPermAction {
    pub const IDENTITY: SignedPermAction = SignedPermAction {
        perm: [0, 1, 2, 3],
        signs: [1; 4],
    };

    pub fn new(perm: [u8; 4], signs: [i8; 4]) -> Self {
        let flip = if signs[0] < 0 { -1 } else { 1 };
        Self {
            perm,
            signs: signs.map(|s| s * flip),
        }
    }

    pub fn perm(&self) -> [u8; 4] {
        self.perm
    }

    pub fn signs(&self) -> [i8; 4] {
        self.signs
    }

    /// `self` first, then `next`.
    pub fn then(&self, next: &Self) -> Self {
        let perm = next.perm.map(|p| self.perm[p as usize]);
        let mut signs = [0i8; 4];
        for (k, s) in signs.iter_mut().enumerate() {
            *s = next.signs[k] * self.signs[next.perm[k] as usize];
        }
        Self::new(perm, signs)
    }

    pub fn order(&self) -> usize {
        let mut cur = *self;
        let mut n = 1;
        while cur != Self::IDENTITY {
            cur = cur.then(self);
            n += 1;
        }
        n
    }

    pub fn apply<T: Scalar>(&self, m: &ProjMatrix<T>) -> Result<ProjMatrix<T>, SphericalError> {
        if m.shape() != (2, 2) {
            return Err(SphericalError::Shape(m.rows(), m.cols()));
        }
        let old = [m.get(0, 0), m.get(1, 0), m.get(0, 1), m.get(1, 1)];
        let mut new = Vec::with_capacity(4);
        for k in 0..4 {
            let v = old[self.perm[k] as usize];
            new.push(if self.signs[k] < 0 {
                v.neg_c().map_err(MatrixError::from)?
            } else {
                v.clone()
            });
        }
        let [a, b, c, d]: [T; 4] = new.try_into().expect("four entries");
        Ok(ProjMatrix::new(2, 2, vec![a, c, b, d])?)
    }
}

impl fmt::Display for SignedPermAction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        const NAMES: [&str; 4] = ["a", "b", "c", "d"];
        let cell = |k: usize| {
            let s = if self.signs[k] < 0 { "-" } else { "" };
            format!("{s}{}", NAMES[self.perm[k] as usize])
        };
        write!(f, "[[{},{}],[{},{}]]", cell(0), cell(2), cell(1), cell(3))
    }
}

pub fn apply_op<T: Scalar>(op: ElemOp, m: &ProjMatrix<T>) -> Result<ProjMatrix<T>, SphericalError> {
    op.action().apply(m)
}

/// A word over `x = dash`, `y = r1`, `z = star`, read left to right: the
/// first letter acts first.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct OpWord(pub Vec<ElemOp>);

impl OpWord {
    pub fn action(&self) -> SignedPermAction {
        self.0
            .iter()
            .fold(SignedPermAction::IDENTITY, |acc, op| acc.then(&op.action()))
    }
}

impl FromStr for OpWord {
    type Err = SphericalError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        s.chars()
            .filter(|c| !c.is_whitespace() && *c != '1')
            .map(|c| match c {
                'x' => Ok(ElemOp::Dash),
                'y' => Ok(ElemOp::R1),
                'z' => Ok(ElemOp::Star),
                other => Err(SphericalError::BadLetter(other)),
            })
            .collect::<Result<_, _>>()
            .map(OpWord)
    }
}

impl fmt::Display for OpWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        for op in &self.0 {
            let c = match op {
                ElemOp::Dash => "x",
                ElemOp::R1 => "y",
                ElemOp::Star => "z",
                ElemOp::R2 => "xyx",
                ElemOp::R => "yxyx",
            };
            f.write_str(c)?;
        }
        Ok(())
    }
}

pub fn word_apply<T: Scalar>(w: &OpWord, m: &ProjMatrix<T>) -> Result<ProjMatrix<T>, SphericalError> {
    w.action().apply(m)
}

/// Mirror image of a diagram: every crossing flipped.
pub fn mirror_diagram(t: &TangleDiagram) -> TangleDiagram {
    t.mirrored()
}

/// Which boundary cycle to rotate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Boundary {
    Inner(usize),
    Outer,
}

/// Cyclic shift of one boundary cycle by one position.
pub fn rotate_hole_diagram(t: &TangleDiagram, which: Boundary) -> Result<TangleDiagram, SphericalError> {
    match which {
        Boundary::Outer => Ok(t.with_outer_rotated()),
        Boundary::Inner(k) => t.with_hole_rotated(k).ok_or(SphericalError::HoleIndex {
            index: k,
            holes: t.n_holes(),
        }),
    }
}

/// The group generated by dash, r1 and star, in breadth-first order from
/// the identity.
pub fn enumerate_group() -> Vec<SignedPermAction> {
    let gens = [ElemOp::Dash.action(), ElemOp::R1.action(), ElemOp::Star.action()];
    let mut seen = HashSet::from([SignedPermAction::IDENTITY]);
    let mut order = vec![SignedPermAction::IDENTITY];
    let mut queue = VecDeque::from([SignedPermAction::IDENTITY]);
    while let Some(g) = queue.pop_front() {
        for s in &gens {
            let h = g.then(s);
            if seen.insert(h) {
                order.push(h);
                queue.push_back(h);
            }
        }
    }
    order
}

/// The relators `x^2, y^2, z^2, (xy)^4, (yx)^4, (xz)^2, (zx)^2, (yz)^2, (zy)^2`.
pub const RELATORS: [&str; 9] = ["xx", "yy", "zz", "xyxyxyxy", "yxyxyxyx", "xzxz", "zxzx", "yzyz", "zyzy"];

/// The eight words the proof lists for the rotation part of the group.
pub const COSET_WORDS: [&str; 8] = ["1", "x", "xy", "xyx", "xyxy", "xyxyx", "xyxyxy", "xyxyxyx"];

#[derive(Debug, Clone)]
pub struct CoxeterReport {
    /// Each relator and whether it acts as the identity.
    pub relators: Vec<(String, bool)>,
    pub group_order: usize,
    /// Order of the abstract Coxeter group from coset enumeration.
    pub presentation_order: Result<usize, CosetError>,
    pub xy_order: usize,
    pub z_commutes: bool,
    pub coset_words_distinct: bool,
    pub max_element_order: usize,
}

impl CoxeterReport {
    pub fn passed(&self) -> bool {
        self.relators.iter().all(|(_, ok)| *ok)
            && self.presentation_order.as_ref().ok() == Some(&self.group_order)
            && self.group_order == 16
            && self.xy_order == 4
            && self.z_commutes
            && self.coset_words_distinct
            && 8 % self.max_element_order == 0
    }
}

impl fmt::Display for CoxeterReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mark = |ok: bool| if ok { "ok" } else { "FAIL" };
        for (r, ok) in &self.relators {
            writeln!(f, "relator {r:<10} {}", mark(*ok))?;
        }
        writeln!(f, "|G(F)| by closure        {}", self.group_order)?;
        match &self.presentation_order {
            Ok(n) => writeln!(f, "|C_M| by coset table     {n}")?,
            Err(e) => writeln!(f, "|C_M| by coset table     error: {e}")?,
        }
        writeln!(f, "order of xy              {}", self.xy_order)?;
        writeln!(f, "z central in <x,y,z>     {}", mark(self.z_commutes))?;
        writeln!(f, "coset words distinct     {}", mark(self.coset_words_distinct))?;
        writeln!(f, "max element order        {}", self.max_element_order)?;
        write!(
            f,
            "result                   {}",
            if self.passed() { "PASS" } else { "FAIL" }
        )
    }
}

fn word(s: &str) -> OpWord {
    s.parse().expect("static word")
}

pub fn verify_coxeter() -> CoxeterReport {
    let relators = RELATORS
        .iter()
        .map(|r| (r.to_string(), word(r).action() == SignedPermAction::IDENTITY))
        .collect();
    let group = enumerate_group();
    let presentation = Presentation::new(
        3,
        RELATORS
            .iter()
            .map(|r| Presentation::word_from_letters(r, "xyz"))
            .collect(),
    );
    let (x, y, z) = (word("x").action(), word("y").action(), word("z").action());
    let actions: HashSet<_> = COSET_WORDS.iter().map(|w| word(w).action()).collect();
    CoxeterReport {
        relators,
        group_order: group.len(),
        presentation_order: coset_enumerate(&presentation, 10_000),
        xy_order: x.then(&y).order(),
        z_commutes: x.then(&z) == z.then(&x) && y.then(&z) == z.then(&y),
        coset_words_distinct: actions.len() == COSET_WORDS.len(),
        max_element_order: group.iter().map(|g| g.order()).max().unwrap_or(1),
    }
}
