use super::{xi, AlgebraError};
use crate::matrix::ProjMatrix;
use crate::scalar::{Overflow, Scalar};

fn check_two_rows<T: Scalar>(m: &ProjMatrix<T>, what: &str) -> Result<(), AlgebraError> {
    if m.hole_count().is_none() {
        return Err(AlgebraError::Shape(format!(
            "{what} is {}x{}, expected 2x2^k",
            m.rows(),
            m.cols()
        )));
    }
    Ok(())
}

/// `[eta^n](M_1, ..., M_n)`: the `2^n x 2^(k_1+...+k_n)` matrix whose row
/// `alpha` is the dictionary product of row `alpha_j` of each `M_j`.
pub fn eta<T: Scalar>(matrices: &[ProjMatrix<T>]) -> Result<ProjMatrix<T>, AlgebraError> {
    if matrices.is_empty() {
        return Err(AlgebraError::Shape("eta needs at least one matrix".into()));
    }
    for (j, m) in matrices.iter().enumerate() {
        check_two_rows(m, &format!("part {j}"))?;
    }
    let n = matrices.len();
    let ks: Vec<usize> = matrices.iter().map(|m| m.cols()).collect();
    let mut data = Vec::new();
    for alpha in 0..1usize << n {
        let rows: Vec<&[T]> = matrices
            .iter()
            .enumerate()
            .map(|(j, m)| m.row(alpha >> (n - 1 - j) & 1))
            .collect();
        data.extend(xi(&ks, &rows)?);
    }
    Ok(ProjMatrix::new(1 << n, ks.iter().product(), data)?)
}

/// Invariant of `T(S_1, ..., S_n)` from `F(T)` and the `F(S_j)`.
pub fn compose_invariants<T: Scalar>(
    f_t: &ProjMatrix<T>,
    parts: &[ProjMatrix<T>],
) -> Result<ProjMatrix<T>, AlgebraError> {
    check_two_rows(f_t, "outer invariant")?;
    if f_t.cols() != 1 << parts.len() {
        return Err(AlgebraError::Shape(format!(
            "2x{} invariant composed with {} parts",
            f_t.cols(),
            parts.len()
        )));
    }
    if parts.is_empty() {
        return Ok(f_t.clone());
    }
    Ok(f_t.mul(&eta(parts)?)?)
}

/// Columns `(i, j)` with `i` outer, `j` inner, from a per-pair formula.
fn pairwise<T: Scalar>(
    a: &ProjMatrix<T>,
    b: &ProjMatrix<T>,
    f: impl Fn([&T; 2], [&T; 2]) -> Result<[T; 2], Overflow>,
) -> Result<ProjMatrix<T>, AlgebraError> {
    check_two_rows(a, "left invariant")?;
    check_two_rows(b, "right invariant")?;
    let cols = a.cols() * b.cols();
    let mut top = Vec::with_capacity(cols);
    let mut bottom = Vec::with_capacity(cols);
    for i in 0..a.cols() {
        for j in 0..b.cols() {
            let [t, s] = f([a.get(0, i), a.get(1, i)], [b.get(0, j), b.get(1, j)])?;
            top.push(t);
            bottom.push(s);
        }
    }
    top.extend(bottom);
    Ok(ProjMatrix::new(2, cols, top)?)
}

/// Horizontal connect sum: column `(i, j)` is
/// `[a1i*b2j + a2i*b1j, a2i*b2j]`.
pub fn connect_h_inv<T: Scalar>(a: &ProjMatrix<T>, b: &ProjMatrix<T>) -> Result<ProjMatrix<T>, AlgebraError> {
    pairwise(a, b, |[a1, a2], [b1, b2]| {
        Ok([a1.mul_c(b2)?.add_c(&a2.mul_c(b1)?)?, a2.mul_c(b2)?])
    })
}

/// Vertical connect sum: column `(i, j)` is
/// `[a1i*b1j, a2i*b1j + a1i*b2j]`.
pub fn connect_v_inv<T: Scalar>(a: &ProjMatrix<T>, b: &ProjMatrix<T>) -> Result<ProjMatrix<T>, AlgebraError> {
    pairwise(a, b, |[a1, a2], [b1, b2]| {
        Ok([a1.mul_c(b1)?, a2.mul_c(b1)?.add_c(&a1.mul_c(b2)?)?])
    })
}

/// Closed form for the J-family spherical tangle built from four ball
/// tangles with invariants `[p_i, q_i]`.
pub fn j_family_invariant<T: Scalar>(p: [T; 4], q: [T; 4]) -> Result<ProjMatrix<T>, AlgebraError> {
    // Each entry is a signed sum of four-fold products; a term picks p or q per index.
    let term = |pick: [bool; 4]| -> Result<T, Overflow> {
        let mut acc = T::one();
        for (i, &use_p) in pick.iter().enumerate() {
            acc = acc.mul_c(if use_p { &p[i] } else { &q[i] })?;
        }
        Ok(acc)
    };
    let sum = |terms: &[[bool; 4]]| -> Result<T, Overflow> {
        terms.iter().try_fold(T::zero(), |acc, &t| acc.add_c(&term(t)?))
    };
    const P: bool = true;
    const Q: bool = false;
    let m11 = sum(&[[P, P, P, Q], [P, P, Q, P], [P, Q, P, P], [Q, P, P, P]])?;
    let m12 = sum(&[[P, Q, P, Q], [P, Q, Q, P], [Q, P, P, Q], [Q, P, Q, P]])?.neg_c()?;
    let m21 = sum(&[[P, P, Q, Q], [P, Q, Q, P], [Q, P, P, Q], [Q, Q, P, P]])?;
    let m22 = sum(&[[P, Q, Q, Q], [Q, P, Q, Q], [Q, Q, P, Q], [Q, Q, Q, P]])?.neg_c()?;
    Ok(ProjMatrix::new(2, 2, vec![m11, m12, m21, m22])?)
}
