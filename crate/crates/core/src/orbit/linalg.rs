//! SVD-backed subspace helpers.
//!
//! Every rank decision looks for a clean gap in the singular values: values
//! at most `tol * scale` are zero, values at least `sqrt(tol) * scale` are
//! not, and anything in between is reported instead of guessed.

use nalgebra::{ComplexField, DMatrix, SimdRealField, SVD};

use super::OrbitError;
use crate::scalar::Real;

fn svd<F>(a: DMatrix<F>, u: bool, v: bool, context: &str) -> Result<SVD<F, nalgebra::Dyn, nalgebra::Dyn>, OrbitError>
where
    F: ComplexField,
    F::RealField: Real,
{
    SVD::try_new(a, u, v, F::RealField::simd_default_epsilon(), 0).ok_or_else(|| OrbitError::Svd(context.to_string()))
}

/// Splits singular values into (kept, dropped) by the gap rule.
fn classify<R: Real>(sigma: &[R], tol: f64, context: &str) -> Result<Vec<bool>, OrbitError> {
    let top = sigma.iter().fold(0.0f64, |m, s| m.max(s.as_f64()));
    let scale = top.max(1.0);
    let lo = tol * scale;
    let hi = tol.sqrt() * scale;
    sigma
        .iter()
        .map(|s| {
            let s = s.as_f64();
            if s <= lo {
                Ok(false)
            } else if s >= hi {
                Ok(true)
            } else {
                Err(OrbitError::RankAmbiguous {
                    context: context.to_string(),
                    sigma: s,
                    tol: lo,
                })
            }
        })
        .collect()
}

/// Orthonormal basis (as columns) of the right null space of `a`.
pub fn null_space<F>(a: &DMatrix<F>, tol: f64, context: &str) -> Result<DMatrix<F>, OrbitError>
where
    F: ComplexField,
    F::RealField: Real,
{
    let (m, n) = a.shape();
    if n == 0 {
        return Ok(DMatrix::zeros(0, 0));
    }
    // pad so that v_t is square and carries the whole null space
    let padded = if m < n {
        let mut p = DMatrix::zeros(n, n);
        p.view_mut((0, 0), (m, n)).copy_from(a);
        p
    } else {
        a.clone()
    };
    let s = svd(padded, false, true, context)?;
    let keep = classify(s.singular_values.as_slice(), tol, context)?;
    let vt = s.v_t.expect("requested v_t");
    let cols: Vec<_> = keep
        .iter()
        .enumerate()
        .filter(|(_, k)| !**k)
        .map(|(i, _)| vt.row(i).adjoint())
        .collect();
    let basis = if cols.is_empty() { DMatrix::zeros(n, 0) } else { DMatrix::from_columns(&cols) };
    let scale = s.singular_values.iter().fold(0.0f64, |m, x| m.max(x.as_f64())).max(1.0);
    let residual = max_column_norm(&(a * &basis));
    if residual > tol * scale {
        return Err(OrbitError::NullSpaceResidual {
            context: context.to_string(),
            residual,
        });
    }
    Ok(basis)
}

/// Orthonormal basis (as columns) of the column space of `a`.
pub fn range<F>(a: &DMatrix<F>, tol: f64, context: &str) -> Result<DMatrix<F>, OrbitError>
where
    F: ComplexField,
    F::RealField: Real,
{
    let (m, n) = a.shape();
    if n == 0 || m == 0 {
        return Ok(DMatrix::zeros(m, 0));
    }
    // wide inputs: the left singular vectors of `a` are the right ones of
    // the tall `a*`, which is much cheaper to factor
    let wide = m < n;
    let s = if wide { svd(a.adjoint(), false, true, context)? } else { svd(a.clone(), true, false, context)? };
    let keep = classify(s.singular_values.as_slice(), tol, context)?;
    let column = |i: usize| match (&s.u, &s.v_t) {
        (Some(u), _) if !wide => u.column(i).into_owned(),
        (_, Some(vt)) => vt.row(i).adjoint(),
        _ => unreachable!("requested factor missing"),
    };
    let cols: Vec<_> = keep.iter().enumerate().filter(|(_, k)| **k).map(|(i, _)| column(i)).collect();
    Ok(if cols.is_empty() { DMatrix::zeros(m, 0) } else { DMatrix::from_columns(&cols) })
}

pub fn rank<F>(a: &DMatrix<F>, tol: f64, context: &str) -> Result<usize, OrbitError>
where
    F: ComplexField,
    F::RealField: Real,
{
    if a.is_empty() {
        return Ok(0);
    }
    let s = svd(a.clone(), false, false, context)?;
    Ok(classify(s.singular_values.as_slice(), tol, context)?.into_iter().filter(|k| *k).count())
}

/// Orthonormal basis of the orthogonal complement of the span of the
/// (orthonormal) columns of `q` inside `F^dim`.
pub fn complement<F>(q: &DMatrix<F>, dim: usize, tol: f64, context: &str) -> Result<DMatrix<F>, OrbitError>
where
    F: ComplexField,
    F::RealField: Real,
{
    if q.ncols() == 0 {
        return Ok(DMatrix::identity(dim, dim));
    }
    null_space(&q.adjoint(), tol, context)
}

pub fn projector<F: ComplexField>(q: &DMatrix<F>) -> DMatrix<F> {
    q * q.adjoint()
}

/// Spectral norm.
pub fn op_norm<F>(a: &DMatrix<F>) -> f64
where
    F: ComplexField,
    F::RealField: Real,
{
    if a.is_empty() {
        return 0.0;
    }
    a.clone()
        .singular_values()
        .iter()
        .fold(0.0f64, |m, s| m.max(s.as_f64()))
}

pub fn max_column_norm<F>(a: &DMatrix<F>) -> f64
where
    F: ComplexField,
    F::RealField: Real,
{
    a.column_iter().fold(0.0f64, |m, c| m.max(c.norm().as_f64()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use nalgebra::Complex;

    #[test]
    fn null_space_of_wide_matrix() {
        let a = DMatrix::from_row_slice(1, 3, &[1.0f64, 1.0, 0.0]);
        let n = null_space(&a, 1e-8, "t").unwrap();
        assert_eq!(n.ncols(), 2);
        assert!((&a * &n).norm() < 1e-12);
    }

    #[test]
    fn complex_range_and_complement() {
        let i = Complex::new(0.0f64, 1.0);
        let one = Complex::new(1.0, 0.0);
        let z = Complex::new(0.0, 0.0);
        let a = DMatrix::from_column_slice(3, 2, &[one, i, z, i, -one, z]);
        let r = range(&a, 1e-8, "t").unwrap();
        assert_eq!(r.ncols(), 1);
        let c = complement(&r, 3, 1e-8, "t").unwrap();
        assert_eq!(c.ncols(), 2);
        assert!((r.adjoint() * &c).norm() < 1e-12);
    }

    #[test]
    fn ambiguous_gap_is_reported() {
        let a = DMatrix::from_row_slice(2, 2, &[1.0f64, 0.0, 0.0, 1e-6]);
        assert!(matches!(rank(&a, 1e-8, "t"), Err(OrbitError::RankAmbiguous { .. })));
        assert_eq!(rank(&a, 1e-13, "t").unwrap(), 2);
    }
}
