//! Canonical embeddings `f_d : G/K -> CP^{N_d}` and their codimensions.
//!
//! `N_d + 1` is the dimension of the irreducible `G`-module with highest
//! weight `d` times the cominuscule fundamental weight.

use num_bigint::{BigInt, BigUint};
use num_traits::One;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::catalog::{HssDescriptor, HssFamily, ParallelEmbedding, Space};
use crate::rootsys::{build_root_system, weyl_dim, RootSysError, Weight};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EmbedError {
    #[error("embedding degree must be at least 1")]
    DegreeZero,
    #[error("{0} is a product; only irreducible spaces have canonical embeddings here")]
    Product(String),
    #[error(transparent)]
    RootSys(#[from] RootSysError),
}

/// Big integers travel as decimal strings in JSON.
pub(crate) mod decimal {
    use serde::{de::Error, Deserialize, Deserializer, Serializer};
    use std::fmt::Display;
    use std::str::FromStr;

    pub fn serialize<T: Display, S: Serializer>(v: &T, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(v)
    }

    pub fn deserialize<'de, T, D>(d: D) -> Result<T, D::Error>
    where
        T: FromStr,
        T::Err: Display,
        D: Deserializer<'de>,
    {
        let s = String::deserialize(d)?;
        s.parse().map_err(D::Error::custom)
    }
}

/// `N_deg`, the dimension of the target projective space of `f_deg`.
pub fn embedding_dim(d: &HssDescriptor, deg: u32) -> Result<BigUint, EmbedError> {
    if deg == 0 {
        return Err(EmbedError::DegreeZero);
    }
    let c = d.cominuscule;
    let rs = build_root_system(c.group)?;
    let w = Weight::fundamental(c.group.rank, c.node, deg as i64);
    Ok(weyl_dim(&rs, &w)? - BigUint::one())
}

/// [`embedding_dim`] for a [`Space`]; products are rejected.
pub fn embedding_dim_of(space: &Space, deg: u32) -> Result<BigUint, EmbedError> {
    match space {
        Space::Irreducible(d) => embedding_dim(d, deg),
        Space::Product(p) => Err(EmbedError::Product(p.to_string())),
    }
}

/// Codimension of `f_deg`.
pub fn codim(d: &HssDescriptor, deg: u32) -> Result<BigInt, EmbedError> {
    Ok(BigInt::from(embedding_dim(d, deg)?) - BigInt::from(d.dim_c))
}

pub fn first_codim(d: &HssDescriptor) -> Result<BigInt, EmbedError> {
    codim(d, 1)
}

fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::from(0);
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// The closed-form codimension of the first canonical embedding, family by
/// family.
pub fn closed_form_codim(d: &HssDescriptor) -> BigInt {
    let dim = BigInt::from(d.dim_c);
    match d.family {
        HssFamily::AIII { a, b } => binomial((a + b) as u64, b as u64) - BigInt::from(a as u64 * b as u64) - 1,
        HssFamily::CI { n } => {
            let n = n as u64;
            binomial(2 * n, n) - binomial(2 * n, n.saturating_sub(2)) - 1 - dim
        }
        HssFamily::DIII { n } => (BigInt::one() << (n - 1)) - dim - 1,
        HssFamily::Quadric { .. } => BigInt::one(),
        HssFamily::EIII => BigInt::from(10),
        HssFamily::EVII => BigInt::from(28),
    }
}

/// Codimension of a parallel embedding from the orbit table.
pub fn parallel_codim(e: &ParallelEmbedding) -> Result<BigInt, EmbedError> {
    match e {
        ParallelEmbedding::FirstCanonical(d) => first_codim(d),
        ParallelEmbedding::Veronese { n } => codim(&HssDescriptor::cp(*n).expect("n >= 1"), 2),
        ParallelEmbedding::Segre { a, b } => {
            let (a, b) = (*a as i64, *b as i64);
            Ok(BigInt::from(a * b - 1 - (a + b - 2)))
        }
    }
}

/// Witnesses for the two codimension inequalities at degree `deg`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InequalityReport {
    pub space: HssDescriptor,
    pub deg: u32,
    /// `m = dim_C M`.
    pub m: u64,
    #[serde(with = "decimal")]
    pub n1: BigUint,
    #[serde(with = "decimal")]
    pub n_deg: BigUint,
    #[serde(with = "decimal")]
    pub codim: BigInt,
    /// `m (m + 1) / 2`.
    #[serde(with = "decimal")]
    pub star_bound: BigInt,
    /// `N_1 (N_1 + 1) / 2`.
    #[serde(with = "decimal")]
    pub para0_bound: BigInt,
    /// `codim > star_bound`.
    pub star: bool,
    /// `codim >= para0_bound`.
    pub para0_weak: bool,
    /// `codim == para0_bound`; the strict form of the bound fails here.
    pub para0_equality: bool,
}

pub fn check_inequalities(d: &HssDescriptor, deg: u32) -> Result<InequalityReport, EmbedError> {
    let n1 = embedding_dim(d, 1)?;
    let n_deg = embedding_dim(d, deg)?;
    let codim = BigInt::from(n_deg.clone()) - BigInt::from(d.dim_c);
    let m = BigInt::from(d.dim_c);
    let star_bound = &m * (&m + 1) / 2;
    let n1i = BigInt::from(n1.clone());
    let para0_bound = &n1i * (&n1i + 1) / 2;
    Ok(InequalityReport {
        space: d.clone(),
        deg,
        m: d.dim_c,
        star: codim > star_bound,
        para0_weak: codim >= para0_bound,
        para0_equality: codim == para0_bound,
        n1,
        n_deg,
        codim,
        star_bound,
        para0_bound,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EmbeddingReport {
    pub space: HssDescriptor,
    pub d: u32,
    #[serde(with = "decimal")]
    pub n_d: BigUint,
    #[serde(with = "decimal")]
    pub codim: BigInt,
    /// Present for `d >= 2`.
    pub bounds_checked: Option<InequalityReport>,
}

pub fn embedding_report(d: &HssDescriptor, deg: u32) -> Result<EmbeddingReport, EmbedError> {
    let n_d = embedding_dim(d, deg)?;
    let codim = BigInt::from(n_d.clone()) - BigInt::from(d.dim_c);
    let bounds_checked = if deg >= 2 { Some(check_inequalities(d, deg)?) } else { None };
    Ok(EmbeddingReport {
        space: d.clone(),
        d: deg,
        n_d,
        codim,
        bounds_checked,
    })
}
