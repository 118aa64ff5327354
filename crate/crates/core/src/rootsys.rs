//! Root systems of the simple Lie algebras of types A, B, C, D, E6 and E7,
//! and the Weyl dimension formula.
//!
//! Node numbering follows Bourbaki throughout. For the exceptional types the
//! diagram is the chain `1 - 3 - 4 - 5 - 6 (- 7)` with node `2` attached to
//! node `4`; the minuscule nodes are `1` and `6` for E6 and `7` for E7. For
//! D_n the chain is `1 - ... - (n-2)` with both spinor nodes `n-1` and `n`
//! attached to `n-2`. In B_n the last simple root is short, in C_n it is long.
//!
//! All arithmetic in this module is exact.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::scalar::WeightScalar;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RootSysError {
    #[error("{0} is not an admissible Dynkin type (need A_n n>=1, B_n n>=2, C_n n>=2, D_n n>=3, E6 or E7)")]
    Inadmissible(String),
    #[error("{0} is not simple (so(4) = su(2) + su(2))")]
    NonSimple(String),
    #[error("weight {0:?} is not dominant integral")]
    NotDominant(Vec<i64>),
    #[error("weight has {got} coordinates, root system has rank {rank}")]
    WeightRank { got: usize, rank: usize },
    #[error("symmetrizer does not symmetrize the Cartan matrix")]
    NotSymmetrizable,
    #[error("Weyl product is not an integer: {0}")]
    NonIntegral(String),
    #[error("cannot parse Dynkin type {0:?}")]
    Parse(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
}

/// A Dynkin type `X_n`. Fields are public so that low-rank aliases such as
/// `D_3` can be written down and passed to [`DynkinType::canonicalize`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct DynkinType {
    pub family: Family,
    pub rank: usize,
}

impl DynkinType {
    pub fn new(family: Family, rank: usize) -> Result<Self, RootSysError> {
        let t = DynkinType { family, rank };
        if t.is_admissible() {
            Ok(t)
        } else {
            Err(RootSysError::Inadmissible(t.to_string()))
        }
    }

    pub const fn a(rank: usize) -> Self {
        DynkinType { family: Family::A, rank }
    }
    pub const fn b(rank: usize) -> Self {
        DynkinType { family: Family::B, rank }
    }
    pub const fn c(rank: usize) -> Self {
        DynkinType { family: Family::C, rank }
    }
    pub const fn d(rank: usize) -> Self {
        DynkinType { family: Family::D, rank }
    }
    pub const fn e(rank: usize) -> Self {
        DynkinType { family: Family::E, rank }
    }

    pub fn is_admissible(&self) -> bool {
        match self.family {
            Family::A => self.rank >= 1,
            Family::B | Family::C => self.rank >= 2,
            Family::D => self.rank >= 3,
            Family::E => self.rank == 6 || self.rank == 7,
        }
    }

    /// Resolve the low-rank isomorphisms `B_1 = C_1 = A_1`, `C_2 = B_2` and
    /// `D_3 = A_3`. `D_2` is rejected because it is not simple.
    pub fn canonicalize(self) -> Result<Self, RootSysError> {
        use Family::*;
        match (self.family, self.rank) {
            (B, 1) | (C, 1) => Ok(DynkinType::a(1)),
            (C, 2) => Ok(DynkinType::b(2)),
            (D, 3) => Ok(DynkinType::a(3)),
            (D, 2) => Err(RootSysError::NonSimple(self.to_string())),
            _ if self.is_admissible() => Ok(self),
            _ => Err(RootSysError::Inadmissible(self.to_string())),
        }
    }

    /// Number of positive roots, from the closed formulas.
    pub fn positive_root_count(&self) -> usize {
        let n = self.rank;
        match self.family {
            Family::A => n * (n + 1) / 2,
            Family::B | Family::C => n * n,
            Family::D => n * (n - 1),
            Family::E => match n {
                6 => 36,
                7 => 63,
                _ => 0,
            },
        }
    }

    /// Real dimension of the compact simple Lie algebra.
    pub fn algebra_dim(&self) -> usize {
        self.rank + 2 * self.positive_root_count()
    }

    fn edges(&self) -> Vec<(usize, usize)> {
        let n = self.rank;
        match self.family {
            Family::A | Family::B | Family::C => (0..n.saturating_sub(1)).map(|i| (i, i + 1)).collect(),
            Family::D => {
                let mut e: Vec<_> = (0..n.saturating_sub(2)).map(|i| (i, i + 1)).collect();
                if n >= 3 {
                    e.push((n - 3, n - 1));
                }
                e
            }
            Family::E => {
                // Bourbaki: 1-3, 3-4, 4-5, 5-6, 6-7, 2-4 (1-based)
                let mut e = vec![(0, 2), (2, 3), (3, 4), (4, 5), (1, 3)];
                if n == 7 {
                    e.push((5, 6));
                }
                e
            }
        }
    }

    /// Cartan matrix `A_ij = 2 (a_i, a_j) / (a_i, a_i)`.
    pub fn cartan_matrix(&self) -> Vec<Vec<i64>> {
        let n = self.rank;
        let mut a = vec![vec![0i64; n]; n];
        for (i, row) in a.iter_mut().enumerate() {
            row[i] = 2;
        }
        for (i, j) in self.edges() {
            a[i][j] = -1;
            a[j][i] = -1;
        }
        if n >= 2 {
            match self.family {
                Family::B => a[n - 1][n - 2] = -2,
                Family::C => a[n - 2][n - 1] = -2,
                _ => {}
            }
        }
        a
    }

    /// `d_i = (a_i, a_i) / 2`, so that `d_i A_ij` is symmetric.
    pub fn symmetrizer(&self) -> Vec<BigRational> {
        let n = self.rank;
        let one = BigRational::one();
        let half = BigRational::new(1.into(), 2.into());
        match self.family {
            Family::B => (0..n).map(|i| if i + 1 == n { half.clone() } else { one.clone() }).collect(),
            Family::C => (0..n).map(|i| if i + 1 == n { one.clone() } else { half.clone() }).collect(),
            _ => vec![one; n],
        }
    }
}

impl fmt::Display for DynkinType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}{}", self.family, self.rank)
    }
}

impl FromStr for DynkinType {
    type Err = RootSysError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let err = || RootSysError::Parse(s.to_string());
        let mut chars = s.chars();
        let family = match chars.next().ok_or_else(err)? {
            'A' => Family::A,
            'B' => Family::B,
            'C' => Family::C,
            'D' => Family::D,
            'E' => Family::E,
            _ => return Err(err()),
        };
        let rest = chars.as_str().trim_start_matches('_');
        let rank = rest.parse().map_err(|_| err())?;
        Ok(DynkinType { family, rank })
    }
}

/// Dominant-or-not weight in the basis of fundamental weights.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Weight(pub Vec<i64>);

impl Weight {
    pub fn zero(rank: usize) -> Self {
        Weight(vec![0; rank])
    }

    /// `mult * Lambda_node` with a 1-based node index.
    pub fn fundamental(rank: usize, node: usize, mult: i64) -> Self {
        let mut w = vec![0; rank];
        w[node - 1] = mult;
        Weight(w)
    }

    pub fn is_dominant(&self) -> bool {
        self.0.iter().all(|&c| c >= 0)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootSystem {
    pub ty: DynkinType,
    pub cartan: Vec<Vec<i64>>,
    pub symmetrizer: Vec<BigRational>,
    /// Coordinates in the simple-root basis, sorted by height then
    /// lexicographically.
    pub positive_roots: Vec<Vec<i64>>,
}

pub fn build_root_system(t: DynkinType) -> Result<RootSystem, RootSysError> {
    if !t.is_admissible() {
        return Err(RootSysError::Inadmissible(t.to_string()));
    }
    RootSystem::from_parts(t, t.cartan_matrix(), t.symmetrizer())
}

impl RootSystem {
    /// Build from an explicit Cartan matrix and symmetrizer, which may use any
    /// ordering of the simple roots.
    pub fn from_parts(
        ty: DynkinType,
        cartan: Vec<Vec<i64>>,
        symmetrizer: Vec<BigRational>,
    ) -> Result<Self, RootSysError> {
        let n = cartan.len();
        if symmetrizer.len() != n || symmetrizer.iter().any(|d| !d.is_positive()) {
            return Err(RootSysError::NotSymmetrizable);
        }
        let sym = symmetrized(&cartan, &symmetrizer);
        for i in 0..n {
            for j in 0..n {
                if sym[i][j] != sym[j][i] {
                    return Err(RootSysError::NotSymmetrizable);
                }
            }
        }
        let positive_roots = positive_roots(&cartan, &symmetrizer)?;
        Ok(RootSystem {
            ty,
            cartan,
            symmetrizer,
            positive_roots,
        })
    }

    pub fn rank(&self) -> usize {
        self.cartan.len()
    }

    /// `(a_i, a_j) = d_i A_ij`.
    pub fn symmetrized_cartan(&self) -> Vec<Vec<BigRational>> {
        symmetrized(&self.cartan, &self.symmetrizer)
    }

    /// Same root system with the invariant form multiplied by `factor`.
    pub fn rescaled(&self, factor: &BigRational) -> Self {
        RootSystem {
            symmetrizer: self.symmetrizer.iter().map(|d| d * factor).collect(),
            ..self.clone()
        }
    }

    /// Leading principal minors of the symmetrized Cartan matrix.
    pub fn leading_minors(&self) -> Vec<BigRational> {
        let b = self.symmetrized_cartan();
        (1..=self.rank())
            .map(|k| {
                let sub: Vec<Vec<BigRational>> = b[..k].iter().map(|r| r[..k].to_vec()).collect();
                determinant(sub)
            })
            .collect()
    }

    pub fn is_positive_definite(&self) -> bool {
        self.leading_minors().iter().all(|m| m.is_positive())
    }

    /// Weyl dimension product evaluated in an arbitrary scalar.
    pub fn weyl_product<T: WeightScalar>(&self, lambda: &Weight) -> Result<T, RootSysError> {
        self.check_weight(lambda)?;
        let d: Vec<T> = self
            .symmetrizer
            .iter()
            .map(|q| ratio_in::<T>(q))
            .collect();
        let mut num = T::one();
        let mut den = T::one();
        for root in &self.positive_roots {
            let mut shifted = T::zero();
            let mut base = T::zero();
            for ((&c, &l), di) in root.iter().zip(&lambda.0).zip(&d) {
                let c = T::from_i64(c).expect("small integer");
                shifted = shifted + c.clone() * T::from_i64(l + 1).expect("small integer") * di.clone();
                base = base + c * di.clone();
            }
            num = num * shifted;
            den = den * base;
        }
        Ok(num / den)
    }

    fn check_weight(&self, lambda: &Weight) -> Result<(), RootSysError> {
        if lambda.0.len() != self.rank() {
            return Err(RootSysError::WeightRank {
                got: lambda.0.len(),
                rank: self.rank(),
            });
        }
        if !lambda.is_dominant() {
            return Err(RootSysError::NotDominant(lambda.0.clone()));
        }
        Ok(())
    }
}

/// Dimension of the irreducible representation with highest weight `lambda`.
pub fn weyl_dim(rs: &RootSystem, lambda: &Weight) -> Result<BigUint, RootSysError> {
    let q: BigRational = rs.weyl_product(lambda)?;
    if !q.is_integer() {
        return Err(RootSysError::NonIntegral(q.to_string()));
    }
    q.to_integer()
        .to_biguint()
        .filter(|v| !v.is_zero())
        .ok_or_else(|| RootSysError::NonIntegral(q.to_string()))
}

fn ratio_in<T: WeightScalar>(q: &BigRational) -> T {
    let to_i64 = |x: &BigInt| -> i64 { i64::try_from(x).expect("symmetrizer entries are small") };
    T::ratio(to_i64(q.numer()), to_i64(q.denom()))
}

fn symmetrized(cartan: &[Vec<i64>], symmetrizer: &[BigRational]) -> Vec<Vec<BigRational>> {
    cartan
        .iter()
        .zip(symmetrizer)
        .map(|(row, d)| row.iter().map(|&a| d * BigRational::from_integer(a.into())).collect())
        .collect()
}

fn determinant(mut m: Vec<Vec<BigRational>>) -> BigRational {
    let n = m.len();
    let mut det = BigRational::one();
    for col in 0..n {
        let Some(pivot) = (col..n).find(|&r| !m[r][col].is_zero()) else {
            return BigRational::zero();
        };
        if pivot != col {
            m.swap(pivot, col);
            det = -det;
        }
        let p = m[col][col].clone();
        det *= &p;
        for r in col + 1..n {
            let factor = &m[r][col] / &p;
            if factor.is_zero() {
                continue;
            }
            for c in col..n {
                let delta = &factor * &m[col][c];
                m[r][c] -= delta;
            }
        }
    }
    det
}

/// Positive roots by closure from the simple roots using root strings.
///
/// A positive root `b` and a simple root `a_i` with `b - p a_i` the bottom of
/// the `a_i`-string satisfy `p - q = <b, a_i^vee>`; `b + a_i` is a root iff
/// `q > 0`. Processing roots layer by layer in height guarantees that the
/// string below `b` is already known.
pub fn positive_roots(cartan: &[Vec<i64>], symmetrizer: &[BigRational]) -> Result<Vec<Vec<i64>>, RootSysError> {
    let n = cartan.len();
    let form = symmetrized(cartan, symmetrizer);
    let two = BigRational::from_integer(2.into());
    let coroot_pairing = |beta: &[i64], i: usize| -> Result<i64, RootSysError> {
        let mut ip = BigRational::zero();
        for (j, &c) in beta.iter().enumerate() {
            if c != 0 {
                ip += &form[j][i] * BigRational::from_integer(c.into());
            }
        }
        let q = &two * ip / &form[i][i];
        if !q.is_integer() {
            return Err(RootSysError::NonIntegral(q.to_string()));
        }
        Ok(i64::try_from(q.to_integer()).expect("small pairing"))
    };

    let mut known: BTreeSet<Vec<i64>> = BTreeSet::new();
    let mut all = Vec::new();
    let mut layer: BTreeSet<Vec<i64>> = (0..n)
        .map(|i| {
            let mut e = vec![0; n];
            e[i] = 1;
            e
        })
        .collect();
    while !layer.is_empty() {
        for r in &layer {
            known.insert(r.clone());
        }
        let mut next = BTreeSet::new();
        for beta in &layer {
            for i in 0..n {
                let mut p = 0;
                let mut down = beta.clone();
                loop {
                    down[i] -= 1;
                    if known.contains(&down) {
                        p += 1;
                    } else {
                        break;
                    }
                }
                let q = p - coroot_pairing(beta, i)?;
                if q > 0 {
                    let mut up = beta.clone();
                    up[i] += 1;
                    next.insert(up);
                }
            }
        }
        all.extend(layer);
        layer = next;
    }
    Ok(all)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(n: u64) -> BigUint {
        BigUint::from(n)
    }

    #[test]
    fn root_counts_small_cases() {
        assert_eq!(build_root_system(DynkinType::a(1)).unwrap().positive_roots.len(), 1);
        assert_eq!(build_root_system(DynkinType::d(5)).unwrap().positive_roots.len(), 20);
        let e7 = build_root_system(DynkinType::e(7)).unwrap();
        assert_eq!(e7.positive_roots.len(), 63);
        assert_eq!(e7.positive_roots.len(), (133 - 7) / 2);
    }

    #[test]
    fn highest_roots() {
        // Highest roots in Bourbaki coordinates.
        let e7 = build_root_system(DynkinType::e(7)).unwrap();
        assert_eq!(e7.positive_roots.last().unwrap(), &vec![2, 2, 3, 4, 3, 2, 1]);
        let e6 = build_root_system(DynkinType::e(6)).unwrap();
        assert_eq!(e6.positive_roots.last().unwrap(), &vec![1, 2, 2, 3, 2, 1]);
        let b3 = build_root_system(DynkinType::b(3)).unwrap();
        assert_eq!(b3.positive_roots.last().unwrap(), &vec![1, 2, 2]);
        let c3 = build_root_system(DynkinType::c(3)).unwrap();
        assert_eq!(c3.positive_roots.last().unwrap(), &vec![2, 2, 1]);
    }

    #[test]
    fn inadmissible_types_rejected() {
        for t in [DynkinType::a(0), DynkinType::b(1), DynkinType::c(1), DynkinType::d(2), DynkinType::e(8)] {
            assert!(matches!(build_root_system(t), Err(RootSysError::Inadmissible(_))), "{t}");
        }
    }

    #[test]
    fn canonical_aliases() {
        assert_eq!(DynkinType::d(3).canonicalize().unwrap(), DynkinType::a(3));
        assert_eq!(DynkinType::c(2).canonicalize().unwrap(), DynkinType::b(2));
        assert_eq!(DynkinType::a(4).canonicalize().unwrap(), DynkinType::a(4));
        assert_eq!(DynkinType::b(1).canonicalize().unwrap(), DynkinType::a(1));
        assert_eq!(DynkinType::c(1).canonicalize().unwrap(), DynkinType::a(1));
        assert!(matches!(DynkinType::d(2).canonicalize(), Err(RootSysError::NonSimple(_))));
        assert!(DynkinType::e(8).canonicalize().is_err());
    }

    #[test]
    fn known_dimension_values() {
        let dim = |t: DynkinType, node: usize| {
            let rs = build_root_system(t).unwrap();
            weyl_dim(&rs, &Weight::fundamental(t.rank, node, 1)).unwrap()
        };
        assert_eq!(dim(DynkinType::a(1), 1), big(2));
        assert_eq!(dim(DynkinType::e(7), 7), big(56));
        assert_eq!(dim(DynkinType::c(3), 3), big(14));
        assert_eq!(dim(DynkinType::d(5), 5), big(16));
        assert_eq!(dim(DynkinType::e(6), 1), big(27));
        assert_eq!(dim(DynkinType::e(6), 6), big(27));
    }

    #[test]
    fn e7_unique_56_node() {
        let rs = build_root_system(DynkinType::e(7)).unwrap();
        let hits: Vec<usize> = (1..=7)
            .filter(|&j| weyl_dim(&rs, &Weight::fundamental(7, j, 1)).unwrap() == big(56))
            .collect();
        assert_eq!(hits, vec![7]);
    }

    #[test]
    fn non_dominant_rejected() {
        let rs = build_root_system(DynkinType::a(2)).unwrap();
        assert!(matches!(weyl_dim(&rs, &Weight(vec![1, -1])), Err(RootSysError::NotDominant(_))));
        assert!(matches!(weyl_dim(&rs, &Weight(vec![1])), Err(RootSysError::WeightRank { .. })));
    }

    #[test]
    fn scaling_form_leaves_dimension_unchanged() {
        let three = BigRational::from_integer(3.into());
        for t in [DynkinType::b(4), DynkinType::c(4), DynkinType::e(6)] {
            let rs = build_root_system(t).unwrap();
            let scaled = rs.rescaled(&three);
            for node in 1..=t.rank {
                let w = Weight::fundamental(t.rank, node, 2);
                assert_eq!(weyl_dim(&rs, &w).unwrap(), weyl_dim(&scaled, &w).unwrap());
            }
        }
    }

    #[test]
    fn f64_route_agrees_with_exact_route() {
        let rs = build_root_system(DynkinType::e(7)).unwrap();
        let w = Weight::fundamental(7, 7, 3);
        let exact = weyl_dim(&rs, &w).unwrap();
        let approx: f64 = rs.weyl_product(&w).unwrap();
        let exact_f: f64 = exact.to_string().parse().unwrap();
        assert!((approx - exact_f).abs() / exact_f < 1e-9);
    }

    #[test]
    fn parse_and_display() {
        assert_eq!("E6".parse::<DynkinType>().unwrap(), DynkinType::e(6));
        assert_eq!("D_5".parse::<DynkinType>().unwrap(), DynkinType::d(5));
        assert_eq!(DynkinType::b(2).to_string(), "B2");
        assert!("F4x".parse::<DynkinType>().is_err());
    }
}
