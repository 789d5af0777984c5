use std::collections::HashSet;

use super::AlgebraError;
use crate::matrix::ProjMatrix;
use crate::scalar::Scalar;
use crate::IntMatrix;

/// An element of `I_{k_1} x ... x I_{k_n}` with its 1-based dictionary rank.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IndexTuple {
    /// 1-based coordinates.
    pub value: Vec<usize>,
    pub rank: usize,
}

impl IndexTuple {
    /// The tuple at 1-based `rank`; the first coordinate varies slowest.
    pub fn from_rank(ks: &[usize], rank: usize) -> Option<Self> {
        let total: usize = ks.iter().product();
        if rank == 0 || rank > total {
            return None;
        }
        let mut rest = rank - 1;
        let mut value = vec![0; ks.len()];
        for (v, &k) in value.iter_mut().zip(ks).rev() {
            *v = rest % k + 1;
            rest /= k;
        }
        Some(Self { value, rank })
    }

    pub fn rank_of(ks: &[usize], value: &[usize]) -> Option<usize> {
        if ks.len() != value.len() || value.iter().zip(ks).any(|(&v, &k)| v == 0 || v > k) {
            return None;
        }
        Some(value.iter().zip(ks).fold(0, |acc, (&v, &k)| acc * k + (v - 1)) + 1)
    }

    pub fn all(ks: &[usize]) -> impl Iterator<Item = IndexTuple> + '_ {
        let total: usize = ks.iter().product();
        (1..=total).map(move |r| Self::from_rank(ks, r).expect("rank in range"))
    }
}

/// Dictionary-order product: entry at rank `i` is `prod_j v_j[alpha_ij]`,
/// the left-to-right Kronecker product of the inputs.
pub fn xi<T: Scalar>(ks: &[usize], vectors: &[&[T]]) -> Result<Vec<T>, AlgebraError> {
    if ks.len() != vectors.len() {
        return Err(AlgebraError::LengthMismatch(format!(
            "{} lengths for {} vectors",
            ks.len(),
            vectors.len()
        )));
    }
    let mut out = vec![T::one()];
    for (j, (&k, v)) in ks.iter().zip(vectors).enumerate() {
        if v.len() != k {
            return Err(AlgebraError::LengthMismatch(format!(
                "vector {j} has length {}, expected {k}",
                v.len()
            )));
        }
        let mut next = Vec::with_capacity(out.len() * k);
        for a in &out {
            for b in v.iter() {
                next.push(a.mul_c(b)?);
            }
        }
        out = next;
    }
    Ok(out)
}

/// [`xi`] on column sign classes.
pub fn xi_bracket<T: Scalar>(columns: &[ProjMatrix<T>]) -> Result<ProjMatrix<T>, AlgebraError> {
    if let Some(c) = columns.iter().find(|c| c.cols() != 1) {
        return Err(AlgebraError::Shape(format!(
            "expected column vectors, got {}x{}",
            c.rows(),
            c.cols()
        )));
    }
    let ks: Vec<usize> = columns.iter().map(|c| c.rows()).collect();
    let vs: Vec<&[T]> = columns.iter().map(|c| c.entries()).collect();
    Ok(ProjMatrix::column(xi(&ks, &vs)?)?)
}

/// A 0/1 column in the probe set `[xi^n]({e1, e2, x}^n)`, `x = [1,1]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ProbeVector(pub IntMatrix);

/// The `3^n` probe vectors, in dictionary order over `e1 < e2 < x`.
pub fn probe_set(n: usize) -> Vec<ProbeVector> {
    assert!(n <= 12, "probe_set is limited to n <= 12");
    const BASE: [[i64; 2]; 3] = [[1, 0], [0, 1], [1, 1]];
    let ks = vec![3; n];
    let mut seen = HashSet::new();
    IndexTuple::all(&ks)
        .filter_map(|t| {
            let parts: Vec<&[i64]> = t.value.iter().map(|&i| &BASE[i - 1][..]).collect();
            let col = IntMatrix::column(xi(&vec![2; n], &parts).expect("lengths match")).expect("column");
            seen.insert(col.clone()).then_some(ProbeVector(col))
        })
        .collect()
}

/// Whether `A X = B X` as sign classes for every probe `X`.
pub fn probe_equal<T: Scalar>(a: &ProjMatrix<T>, b: &ProjMatrix<T>) -> Result<bool, AlgebraError> {
    if a.shape() != b.shape() {
        return Err(AlgebraError::Shape(format!("{:?} vs {:?}", a.shape(), b.shape())));
    }
    let n = a
        .cols()
        .is_power_of_two()
        .then(|| a.cols().trailing_zeros() as usize)
        .ok_or_else(|| AlgebraError::Shape(format!("{} columns is not a power of two", a.cols())))?;
    for ProbeVector(x) in probe_set(n) {
        let x: ProjMatrix<T> = x.convert()?;
        if a.mul(&x)? != b.mul(&x)? {
            return Ok(false);
        }
    }
    Ok(true)
}
