//! Matrix models of the four classical complex orbits.
//!
//! Each model is a unitary representation `V` of a compact algebra `k`
//! (given by an anti-Hermitian basis) together with a highest weight vector
//! `v`. From it we compute the tangent and normal spaces of the orbit
//! `K.[v]` at `[v]`, the first normal space, the stabilizer `k_0` of the
//! line `Cv` and its trace-form complement `m`, and then certify fullness,
//! the bracket condition `rho(m) N in Cv + T` and the slice representation.

pub mod linalg;

use std::fmt;
use std::str::FromStr;

use nalgebra::{Complex, DMatrix, DVector};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::catalog::{Bounds, CatalogError, HssDescriptor, Table1Row};
use crate::classify::{normal_holonomy, search_bounds, ClassifyError, HolonomyMatch};
use crate::embed::parallel_codim;
use crate::scalar::Real;

pub type CMat<T> = DMatrix<Complex<T>>;
pub type CVec<T> = DVector<Complex<T>>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum OrbitError {
    #[error("{case} is below the model floor ({floor})")]
    BelowFloor { case: String, floor: &'static str },
    #[error("malformed model case {0:?}")]
    Parse(String),
    #[error("construction check failed: {what} (residual {residual:e})")]
    Construction { what: String, residual: f64 },
    #[error("{context}: singular value {sigma:e} sits in the rank gap above {tol:e}")]
    RankAmbiguous { context: String, sigma: f64, tol: f64 },
    #[error("{context}: null-space residual {residual:e}")]
    NullSpaceResidual { context: String, residual: f64 },
    #[error("{0}: SVD did not converge")]
    Svd(String),
    #[error(transparent)]
    Classify(#[from] ClassifyError),
}

/// Which orbit a model realizes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ModelCase {
    /// `CP^n` in `P(Sym^2 C^{n+1})` under `u(n+1)`.
    Veronese { n: u32 },
    /// `CP^{a-1} x CP^{b-1}` in `P(C^a (x) C^b)`.
    Segre { a: u32, b: u32 },
    /// `Gr_2(C^n)` in `P(Lambda^2 C^n)` under `u(n)`.
    Plucker { n: u32 },
    /// The `(n-2)`-dimensional quadric in `CP^{n-1}` under `so(n) + so(2)`.
    Quadric { n: u32 },
}

impl ModelCase {
    pub fn validate(self) -> Result<Self, OrbitError> {
        let floor = match self {
            ModelCase::Veronese { n } if n < 1 => "n >= 1",
            ModelCase::Segre { a, b } if a < 2 || b < 2 => "a, b >= 2",
            ModelCase::Plucker { n } if n < 4 => "n >= 4",
            ModelCase::Quadric { n } if n < 3 => "n >= 3",
            _ => return Ok(self),
        };
        Err(OrbitError::BelowFloor {
            case: self.to_string(),
            floor,
        })
    }

    /// The orbit-table row this model realizes.
    pub fn row(&self) -> Table1Row {
        match *self {
            ModelCase::Veronese { n } => Table1Row::Veronese { n },
            ModelCase::Segre { a, b } => Table1Row::Segre { a: a.min(b), b: a.max(b) },
            ModelCase::Plucker { n } => Table1Row::Plucker { n },
            ModelCase::Quadric { n } => Table1Row::Quadric { n },
        }
    }

    /// Complex dimension of the orbit.
    pub fn orbit_dim(&self) -> usize {
        (match *self {
            ModelCase::Veronese { n } => n,
            ModelCase::Segre { a, b } => a + b - 2,
            ModelCase::Plucker { n } => 2 * (n - 2),
            ModelCase::Quadric { n } => n - 2,
        }) as usize
    }

    pub fn ambient_dim(&self) -> usize {
        let u = |x: u32| x as usize;
        match *self {
            ModelCase::Veronese { n } => u(n + 1) * u(n + 2) / 2,
            ModelCase::Segre { a, b } => u(a) * u(b),
            ModelCase::Plucker { n } => u(n) * u(n - 1) / 2,
            ModelCase::Quadric { n } => u(n),
        }
    }
}

impl fmt::Display for ModelCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ModelCase::Veronese { n } => write!(f, "Veronese({n})"),
            ModelCase::Segre { a, b } => write!(f, "Segre({a},{b})"),
            ModelCase::Plucker { n } => write!(f, "Plucker({n})"),
            ModelCase::Quadric { n } => write!(f, "Quadric({n})"),
        }
    }
}

impl FromStr for ModelCase {
    type Err = OrbitError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || OrbitError::Parse(s.to_string());
        let t = s.trim();
        let open = t.find('(').ok_or_else(bad)?;
        let name = &t[..open];
        let args: Vec<u32> = t[open + 1..]
            .strip_suffix(')')
            .ok_or_else(bad)?
            .split(',')
            .map(|x| x.trim().parse().map_err(|_| bad()))
            .collect::<Result<_, _>>()?;
        let case = match (name, args.as_slice()) {
            ("Veronese", [n]) => ModelCase::Veronese { n: *n },
            ("Segre", [a, b]) => ModelCase::Segre { a: *a, b: *b },
            ("Plucker" | "Plücker", [n]) => ModelCase::Plucker { n: *n },
            ("Quadric", [n]) => ModelCase::Quadric { n: *n },
            _ => return Err(bad()),
        };
        case.validate()
    }
}

fn c<T: Real>(re: f64, im: f64) -> Complex<T> {
    Complex::new(T::lit(re), T::lit(im))
}

fn unit<T: Real>(m: usize, i: usize, j: usize, z: Complex<T>) -> CMat<T> {
    let mut x = CMat::zeros(m, m);
    x[(i, j)] = z;
    x
}

/// Off-diagonal part of the standard basis of `u(m)`: `E_jk - E_kj` and
/// `i(E_jk + E_kj)` for `j < k`.
fn off_diagonal<T: Real>(m: usize, out: &mut Vec<CMat<T>>) {
    for j in 0..m {
        for k in j + 1..m {
            out.push(unit(m, j, k, c(1.0, 0.0)) + unit(m, k, j, c(-1.0, 0.0)));
            out.push(unit(m, j, k, c(0.0, 1.0)) + unit(m, k, j, c(0.0, 1.0)));
        }
    }
}

fn u_basis<T: Real>(m: usize) -> Vec<CMat<T>> {
    let mut out: Vec<CMat<T>> = (0..m).map(|j| unit(m, j, j, c(0.0, 1.0))).collect();
    off_diagonal(m, &mut out);
    out
}

fn su_basis<T: Real>(m: usize) -> Vec<CMat<T>> {
    let mut out: Vec<CMat<T>> = (0..m - 1)
        .map(|j| unit(m, j, j, c(0.0, 1.0)) + unit(m, j + 1, j + 1, c(0.0, -1.0)))
        .collect();
    off_diagonal(m, &mut out);
    out
}

fn so_basis<T: Real>(m: usize) -> Vec<CMat<T>> {
    let mut out = Vec::new();
    for j in 0..m {
        for k in j + 1..m {
            out.push(unit(m, j, k, c(1.0, 0.0)) + unit(m, k, j, c(-1.0, 0.0)));
        }
    }
    out
}

/// Isometry from `Sym^2 C^m` (basis `e_i e_j`, `i <= j`) into `C^m (x) C^m`.
fn sym_isometry<T: Real>(m: usize) -> CMat<T> {
    let mut cols = Vec::new();
    let h = std::f64::consts::FRAC_1_SQRT_2;
    for i in 0..m {
        for j in i..m {
            let mut v = CVec::zeros(m * m);
            if i == j {
                v[i * m + i] = c(1.0, 0.0);
            } else {
                v[i * m + j] = c(h, 0.0);
                v[j * m + i] = c(h, 0.0);
            }
            cols.push(v);
        }
    }
    CMat::from_columns(&cols)
}

/// Isometry from `Lambda^2 C^m` (basis `e_i ^ e_j`, `i < j`) into `C^m (x) C^m`.
fn alt_isometry<T: Real>(m: usize) -> CMat<T> {
    let mut cols = Vec::new();
    let h = std::f64::consts::FRAC_1_SQRT_2;
    for i in 0..m {
        for j in i + 1..m {
            let mut v = CVec::zeros(m * m);
            v[i * m + j] = c(h, 0.0);
            v[j * m + i] = c(-h, 0.0);
            cols.push(v);
        }
    }
    CMat::from_columns(&cols)
}

/// `X (x) 1 + 1 (x) X` restricted to the image of the isometry `p`.
fn second_power<T: Real>(x: &CMat<T>, p: &CMat<T>) -> CMat<T> {
    let id = CMat::<T>::identity(x.nrows(), x.nrows());
    let full = x.kronecker(&id) + id.kronecker(x);
    p.adjoint() * full * p
}

fn basis_vector<T: Real>(dim: usize, i: usize) -> CVec<T> {
    let mut v = CVec::zeros(dim);
    v[i] = c(1.0, 0.0);
    v
}

/// Residuals measured while validating a freshly built model.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ConstructionResiduals {
    /// Largest `|X + X*|` over the basis (Frobenius).
    pub anti_hermitian: f64,
    /// `| |v| - 1 |`.
    pub unit_norm: f64,
    /// Largest distance of a bracket `[X_i, X_j]` from the span of the basis.
    pub closure: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct MatrixModel<T: Real> {
    pub case: ModelCase,
    pub ambient_dim: usize,
    pub k_basis: Vec<CMat<T>>,
    pub v: CVec<T>,
    pub residuals: ConstructionResiduals,
}

pub fn build_model<T: Real>(case: ModelCase) -> Result<MatrixModel<T>, OrbitError> {
    let case = case.validate()?;
    let (k_basis, v) = match case {
        ModelCase::Veronese { n } => {
            let m = n as usize + 1;
            let p = sym_isometry::<T>(m);
            let basis = u_basis::<T>(m).iter().map(|x| second_power(x, &p)).collect();
            (basis, basis_vector(p.ncols(), 0))
        }
        ModelCase::Plucker { n } => {
            let m = n as usize;
            let p = alt_isometry::<T>(m);
            let basis = u_basis::<T>(m).iter().map(|x| second_power(x, &p)).collect();
            (basis, basis_vector(p.ncols(), 0))
        }
        ModelCase::Segre { a, b } => {
            let (a, b) = (a as usize, b as usize);
            let ia = CMat::<T>::identity(a, a);
            let ib = CMat::<T>::identity(b, b);
            let mut basis: Vec<CMat<T>> = su_basis::<T>(a).iter().map(|x| x.kronecker(&ib)).collect();
            basis.extend(su_basis::<T>(b).iter().map(|y| ia.kronecker(y)));
            basis.push(CMat::identity(a * b, a * b) * c::<T>(0.0, 1.0));
            (basis, basis_vector(a * b, 0))
        }
        ModelCase::Quadric { n } => {
            let m = n as usize;
            let mut basis = so_basis::<T>(m);
            basis.push(CMat::identity(m, m) * c::<T>(0.0, 1.0));
            let h = std::f64::consts::FRAC_1_SQRT_2;
            let mut v = CVec::zeros(m);
            v[0] = c(h, 0.0);
            v[1] = c(0.0, h);
            (basis, v)
        }
    };
    let mut model = MatrixModel {
        case,
        ambient_dim: v.len(),
        k_basis,
        v,
        residuals: ConstructionResiduals {
            anti_hermitian: 0.0,
            unit_norm: 0.0,
            closure: 0.0,
        },
    };
    model.residuals = model.check_construction()?;
    Ok(model)
}

/// Nonzero entries of each row; the model bases are very sparse.
type RowSparse<T> = Vec<Vec<(usize, Complex<T>)>>;

fn row_sparse<T: Real>(x: &CMat<T>) -> RowSparse<T> {
    (0..x.nrows())
        .map(|i| (0..x.ncols()).filter(|&j| x[(i, j)] != Complex::new(T::zero(), T::zero())).map(|j| (j, x[(i, j)])).collect())
        .collect()
}

fn sparse_product<T: Real>(x: &RowSparse<T>, y: &RowSparse<T>, d: usize) -> CMat<T> {
    let mut out = CMat::zeros(d, d);
    for (i, row) in x.iter().enumerate() {
        for &(l, a) in row {
            for &(j, b) in &y[l] {
                out[(i, j)] += a * b;
            }
        }
    }
    out
}

/// Real coordinates of a complex matrix, for real-linear algebra on `k`.
fn realify<T: Real>(x: &CMat<T>) -> DVector<T> {
    let n = x.len();
    DVector::from_fn(2 * n, |i, _| if i < n { x[i].re } else { x[i - n].im })
}

impl<T: Real> MatrixModel<T> {
    pub fn dim_k(&self) -> usize {
        self.k_basis.len()
    }

    /// `sum_i coeffs_i X_i`.
    pub fn element(&self, coeffs: &[T]) -> CMat<T> {
        let mut x = CMat::zeros(self.ambient_dim, self.ambient_dim);
        for (ci, b) in coeffs.iter().zip(&self.k_basis) {
            x += b * Complex::new(*ci, T::zero());
        }
        x
    }

    fn check_construction(&self) -> Result<ConstructionResiduals, OrbitError> {
        let tol = T::tolerances();
        let anti_hermitian = self
            .k_basis
            .iter()
            .fold(0.0f64, |m, x| m.max((x + x.adjoint()).norm().as_f64()));
        if anti_hermitian > tol.construction {
            return Err(OrbitError::Construction {
                what: format!("{} basis is not anti-Hermitian", self.case),
                residual: anti_hermitian,
            });
        }
        let unit_norm = (self.v.norm().as_f64() - 1.0).abs();
        if unit_norm > tol.construction {
            return Err(OrbitError::Construction {
                what: format!("{} highest weight vector is not a unit vector", self.case),
                residual: unit_norm,
            });
        }
        // orthonormal real basis of span(k_basis), then project each bracket
        let cols: Vec<DVector<T>> = self.k_basis.iter().map(realify).collect();
        let q = linalg::range(&DMatrix::from_columns(&cols), tol.rank, "span of k")?;
        if q.ncols() != self.dim_k() {
            return Err(OrbitError::Construction {
                what: format!("{} basis is linearly dependent", self.case),
                residual: 0.0,
            });
        }
        let qt = q.transpose();
        let sparse: Vec<RowSparse<T>> = self.k_basis.iter().map(row_sparse).collect();
        let mut closure = 0.0f64;
        for i in 0..self.dim_k() {
            let x = &sparse[i];
            let brackets: Vec<DVector<T>> = sparse[i + 1..]
                .iter()
                .map(|y| realify(&(sparse_product(x, y, self.ambient_dim) - sparse_product(y, x, self.ambient_dim))))
                .collect();
            if brackets.is_empty() {
                continue;
            }
            let w = DMatrix::from_columns(&brackets);
            let r = &w - &q * (&qt * &w);
            closure = closure.max(linalg::max_column_norm(&r));
        }
        if closure > tol.closure {
            return Err(OrbitError::Construction {
                what: format!("{} basis is not closed under brackets", self.case),
                residual: closure,
            });
        }
        Ok(ConstructionResiduals {
            anti_hermitian,
            unit_norm,
            closure,
        })
    }

    /// `G_ij = -Re tr(X_i X_j)`, positive definite on a compact algebra.
    pub fn trace_form(&self) -> DMatrix<T> {
        let k = self.dim_k();
        // tr(XY) = sum of the entries of X o Y^T
        let transposed: Vec<CMat<T>> = self.k_basis.iter().map(|y| y.transpose()).collect();
        DMatrix::from_fn(k, k, |i, j| -self.k_basis[i].component_mul(&transposed[j]).sum().re)
    }

    pub fn decompose(&self) -> Result<Decomposition<T>, OrbitError> {
        let tol = T::tolerances().rank;
        let d = self.ambient_dim;
        let v = &self.v;
        let perp = |w: &CVec<T>| w - v * v.dotc(w);

        let moved: Vec<CVec<T>> = self.k_basis.iter().map(|x| perp(&(x * v))).collect();

        // k_0: real combinations with no component outside Cv
        let realified: Vec<DVector<T>> = moved
            .iter()
            .map(|w| DVector::from_fn(2 * d, |i, _| if i < d { w[i].re } else { w[i - d].im }))
            .collect();
        let k0 = linalg::null_space(&DMatrix::from_columns(&realified), tol, "stabilizer k_0")?;
        let gram = self.trace_form();
        let m = if k0.ncols() == 0 {
            DMatrix::identity(self.dim_k(), self.dim_k())
        } else {
            linalg::null_space(&(k0.transpose() * &gram), tol, "complement m")?
        };

        let tangent = linalg::range(&CMat::from_columns(&moved), tol, "tangent space")?;
        let mut line_and_tangent = CMat::zeros(d, 1 + tangent.ncols());
        line_and_tangent.set_column(0, v);
        line_and_tangent.view_mut((0, 1), (d, tangent.ncols())).copy_from(&tangent);
        let normal = linalg::complement(&line_and_tangent, d, tol, "normal space")?;

        // the antisymmetric part rho([X,Y])v lies in Cv + T, so i <= j suffices
        let mut second = Vec::new();
        let first: Vec<CVec<T>> = self.k_basis.iter().map(|x| x * v).collect();
        let nh = normal.adjoint();
        for (i, x) in self.k_basis.iter().enumerate() {
            for y in &first[i..] {
                second.push(&normal * (&nh * (x * y)));
            }
        }
        let first_normal = if normal.ncols() == 0 {
            CMat::zeros(d, 0)
        } else {
            linalg::range(&CMat::from_columns(&second), tol, "first normal space")?
        };

        Ok(Decomposition {
            line: v.clone(),
            tangent,
            normal,
            first_normal,
            k0,
            m,
        })
    }
}

/// Subspaces of `V` (orthonormal columns) and subalgebras of `k` (columns
/// of coefficients against `k_basis`) attached to `[v]`.
#[derive(Debug, Clone, PartialEq)]
pub struct Decomposition<T: Real> {
    pub line: CVec<T>,
    pub tangent: CMat<T>,
    pub normal: CMat<T>,
    pub first_normal: CMat<T>,
    pub k0: DMatrix<T>,
    pub m: DMatrix<T>,
}

/// A pass/fail decision with the residual it was based on.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Check {
    pub ok: bool,
    pub residual: f64,
}

/// `N^1 = N`, measured as the operator norm of the projector difference.
pub fn fullness_check<T: Real>(dec: &Decomposition<T>) -> Check {
    let diff = linalg::projector(&dec.first_normal) - linalg::projector(&dec.normal);
    let residual = linalg::op_norm(&diff);
    Check {
        ok: dec.first_normal.ncols() == dec.normal.ncols() && residual < T::tolerances().certificate,
        residual,
    }
}

/// `rho(m) N in Cv + T`: the largest normal component of `rho(X) w`.
pub fn bracket_check<T: Real>(model: &MatrixModel<T>, dec: &Decomposition<T>) -> Check {
    let nh = dec.normal.adjoint();
    let mut residual = 0.0f64;
    for col in dec.m.column_iter() {
        let x = model.element(col.as_slice());
        residual = residual.max(linalg::max_column_norm(&(&nh * (x * &dec.normal))));
    }
    Check {
        ok: residual < T::tolerances().certificate,
        residual,
    }
}

/// The representation of `k_0` on `N`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SliceReport {
    pub normal_dim: usize,
    /// Complex dimension of the commutant of `rho(k_0)|_N`.
    pub commutant_dim: usize,
    /// Real dimension of the image of `k_0` in `gl(N)`.
    pub algebra_dim: usize,
    /// Largest component of `rho(k_0) N` outside `N`.
    pub invariance_residual: f64,
}

impl SliceReport {
    pub fn irreducible(&self) -> bool {
        self.normal_dim >= 1 && self.commutant_dim == 1
    }
}

/// Restricted matrices `N* rho(X) N` for a basis of `k_0`, plus the largest
/// leak of `rho(X) N` out of `N`.
fn slice_matrices<T: Real>(model: &MatrixModel<T>, dec: &Decomposition<T>) -> (Vec<CMat<T>>, f64) {
    let nh = dec.normal.adjoint();
    let mut leak = 0.0f64;
    let mats = dec
        .k0
        .column_iter()
        .map(|col| {
            let xn = model.element(col.as_slice()) * &dec.normal;
            let r = &nh * &xn;
            leak = leak.max(linalg::max_column_norm(&(xn - &dec.normal * &r)));
            r
        })
        .collect();
    (mats, leak)
}

/// Real dimension of `rho(k_0)|_N`, without the commutant.
pub fn slice_algebra_dim<T: Real>(model: &MatrixModel<T>, dec: &Decomposition<T>) -> Result<usize, OrbitError> {
    let (mats, _) = slice_matrices(model, dec);
    algebra_dim(&mats)
}

fn algebra_dim<T: Real>(mats: &[CMat<T>]) -> Result<usize, OrbitError> {
    if mats.is_empty() {
        return Ok(0);
    }
    let cols: Vec<DVector<T>> = mats.iter().map(realify).collect();
    linalg::rank(&DMatrix::from_columns(&cols), T::tolerances().rank, "slice algebra")
}

pub fn slice_commutant<T: Real>(model: &MatrixModel<T>, dec: &Decomposition<T>) -> Result<SliceReport, OrbitError> {
    let n = dec.normal.ncols();
    let (mats, invariance_residual) = slice_matrices(model, dec);
    let commutant_dim = if mats.is_empty() {
        n * n
    } else {
        // vec(A R - R A) = (R^T (x) 1 - 1 (x) R) vec(A)
        let id = CMat::<T>::identity(n, n);
        let mut system = CMat::zeros(n * n * mats.len(), n * n);
        for (i, r) in mats.iter().enumerate() {
            let block = r.transpose().kronecker(&id) - id.kronecker(r);
            system.view_mut((i * n * n, 0), (n * n, n * n)).copy_from(&block);
        }
        linalg::null_space(&system, T::tolerances().rank, "slice commutant")?.ncols()
    };
    Ok(SliceReport {
        normal_dim: n,
        commutant_dim,
        algebra_dim: algebra_dim(&mats)?,
        invariance_residual,
    })
}

/// Everything certified about one model.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OrbitReport {
    pub case: ModelCase,
    pub ambient_dim: usize,
    pub dim_k: usize,
    pub dim_k0: usize,
    pub dim_m: usize,
    pub dim_t: usize,
    pub dim_n1: usize,
    pub dim_n: usize,
    pub expected_orbit_dim: usize,
    pub expected_codim: usize,
    /// `dim k - dim k_0 = 2 dim_C T`.
    pub stabilizer_identity: bool,
    pub fullness: Check,
    pub bracket: Check,
    pub slice: SliceReport,
    pub slice_irreducible: bool,
    /// `rho(k_0)` preserves `N` at the certificate tolerance.
    pub slice_invariant: bool,
    pub construction: ConstructionResiduals,
    /// Column 3 of the orbit table, resolved with the measured slice dimension.
    pub holonomy: Option<HssDescriptor>,
    pub holonomy_error: Option<String>,
    /// `dim_C N` equals the dimension of the holonomy space.
    pub holonomy_dim_matches: bool,
}

impl OrbitReport {
    /// All certificates and dimension identities hold.
    pub fn passed(&self) -> bool {
        self.dim_t == self.expected_orbit_dim
            && self.dim_n == self.expected_codim
            && self.dim_n1 <= self.dim_n
            && self.stabilizer_identity
            && self.fullness.ok
            && self.bracket.ok
            && self.slice_irreducible
            && self.slice_invariant
            && self.holonomy_dim_matches
    }
}

pub fn certify<T: Real>(model: &MatrixModel<T>) -> Result<OrbitReport, OrbitError> {
    let dec = model.decompose()?;
    let fullness = fullness_check(&dec);
    let bracket = bracket_check(model, &dec);
    let slice = slice_commutant(model, &dec)?;
    let row = model.case.row();
    let expected_codim = parallel_codim(&row.orbit())
        .map_err(ClassifyError::from)?
        .try_into()
        .map_err(|_| ClassifyError::Overflow(row.to_string()))?;
    let (holonomy, holonomy_error) =
        match search_bounds(&row.orbit(), &Bounds::default())
            .and_then(|b| normal_holonomy(&row.orbit(), &b, Some(slice.algebra_dim)))
        {
            Ok(h) => (Some(h.holonomy), None),
            Err(e) => (None, Some(e.to_string())),
        };
    let holonomy_dim_matches = holonomy.as_ref().is_some_and(|h| h.dim_c as usize == dec.normal.ncols());
    let tangent = dec.tangent.ncols();
    Ok(OrbitReport {
        case: model.case,
        ambient_dim: model.ambient_dim,
        dim_k: model.dim_k(),
        dim_k0: dec.k0.ncols(),
        dim_m: dec.m.ncols(),
        dim_t: tangent,
        dim_n1: dec.first_normal.ncols(),
        dim_n: dec.normal.ncols(),
        expected_orbit_dim: model.case.orbit_dim(),
        expected_codim,
        stabilizer_identity: model.dim_k() - dec.k0.ncols() == 2 * tangent,
        fullness,
        bracket,
        slice_irreducible: slice.irreducible(),
        slice_invariant: slice.invariance_residual < T::tolerances().certificate,
        slice,
        construction: model.residuals,
        holonomy,
        holonomy_error,
        holonomy_dim_matches,
    })
}

/// Builds the model for `case` and certifies it.
pub fn certify_case<T: Real>(case: ModelCase) -> Result<OrbitReport, OrbitError> {
    certify(&build_model::<T>(case)?)
}

/// Slice algebra dimension of the model realizing `row`, if the row has one.
pub fn row_slice_dim<T: Real>(row: Table1Row) -> Result<Option<usize>, OrbitError> {
    let case = match row {
        Table1Row::E7 | Table1Row::E6 => return Ok(None),
        Table1Row::Veronese { n } => ModelCase::Veronese { n },
        Table1Row::Quadric { n } => ModelCase::Quadric { n },
        Table1Row::Plucker { n } => ModelCase::Plucker { n },
        Table1Row::Segre { a, b } => ModelCase::Segre { a, b },
    };
    let model = build_model::<T>(case)?;
    let dec = model.decompose()?;
    Ok(Some(slice_algebra_dim(&model, &dec)?))
}

/// Column 3 for `row`: type data first, and the slice dimension measured
/// on the model only when type data leaves several candidates.
pub fn resolve_holonomy<T: Real>(row: Table1Row, bounds: &Bounds) -> Result<HolonomyMatch, OrbitError> {
    let source = row.orbit();
    match normal_holonomy(&source, bounds, None) {
        Err(ClassifyError::Ambiguous(m)) => match row_slice_dim::<T>(row)? {
            Some(s) => Ok(normal_holonomy(&source, bounds, Some(s))?),
            None => Err(ClassifyError::Ambiguous(m).into()),
        },
        other => Ok(other?),
    }
}

impl From<CatalogError> for OrbitError {
    fn from(e: CatalogError) -> Self {
        OrbitError::Classify(e.into())
    }
}
