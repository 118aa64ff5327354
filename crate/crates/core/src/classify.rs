//! Matching normal spaces against isotropy representations.
//!
//! A full parallel submanifold `M = G/K` has normal holonomy `S = K/I` acting
//! on the normal space as the isotropy representation of an irreducible
//! Hermitian symmetric space `H/S` of the same complex dimension. Here that
//! is searched for at the level of Lie algebra data: `S` must be obtained
//! from `K` by killing simple ideals (and possibly central directions), and
//! `dim_C H/S` must equal the codimension.
//!
//! Type data alone does not always single out `H/S`: for `Gr_2(C^5)` both
//! `CP^3` and `Quadric(3)` pass, for `Gr_2(C^7)` both `DIII(5)` and
//! `AIII(2,5)` do. [`normal_holonomy`] therefore accepts the real dimension
//! of the image of `K` in `u(N)`, measured on a matrix model, and uses it to
//! discard candidates whose isotropy algebra has the wrong size.

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::catalog::{
    enumerate, normalize, with_dim, Bounds, CatalogError, HssDescriptor, HssFamily, IsotropyDescriptor, ParallelEmbedding,
    Space, Table1Row,
};
use crate::embed::{decimal, first_codim, parallel_codim, EmbedError};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum ClassifyError {
    #[error("{0} is not an orbit-table embedding (rank >= 3 or codimension 0)")]
    NotParallel(String),
    #[error("no candidate for {}: required dim {}, isotropy {}", .0.source_label, .0.result.required_dim, .0.result.target_k)]
    NoCandidate(Box<FailedMatch>),
    #[error("{} candidates for {}: {}", .0.result.candidates.len(), .0.source_label, names(&.0.result.candidates))]
    Ambiguous(Box<FailedMatch>),
    #[error("slice algebra of dimension {slice_dim} does not fit the unique candidate {candidate} (isotropy dimension {expected})")]
    SliceMismatch {
        candidate: String,
        slice_dim: usize,
        expected: usize,
    },
    #[error("matched {got} but the orbit table stores {stored} for {row}")]
    TableMismatch { row: String, got: String, stored: String },
    #[error("required dimension {0} does not fit in 64 bits")]
    Overflow(String),
    #[error(transparent)]
    Catalog(#[from] CatalogError),
    #[error(transparent)]
    Embed(#[from] EmbedError),
}

fn names(v: &[HssDescriptor]) -> String {
    v.iter().map(ToString::to_string).collect::<Vec<_>>().join(", ")
}

/// A match that did not produce exactly one space.
#[derive(Debug, Clone, PartialEq)]
pub struct FailedMatch {
    pub source_label: String,
    pub result: MatchResult,
    pub slice_dim: Option<usize>,
}

/// Whether `s` can be the isotropy algebra of a quotient of `k`: every simple
/// ideal of `s` is one of `k` (with multiplicity), and the center does not
/// grow.
pub fn quotient_compatible(s: &IsotropyDescriptor, k: &IsotropyDescriptor) -> bool {
    if s.center_rank > k.center_rank {
        return false;
    }
    let mut avail: HashMap<_, usize> = HashMap::new();
    for t in &k.simple_factors {
        *avail.entry(*t).or_default() += 1;
    }
    s.simple_factors.iter().all(|t| match avail.get_mut(t) {
        Some(c) if *c > 0 => {
            *c -= 1;
            true
        }
        _ => false,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatchResult {
    pub target_k: IsotropyDescriptor,
    pub required_dim: u64,
    /// Compatible isotropy and the required dimension, in catalog order.
    pub candidates: Vec<HssDescriptor>,
    /// Every catalog entry with compatible isotropy, whatever its dimension.
    pub compatible: Vec<HssDescriptor>,
    pub search_bounds: Bounds,
}

pub fn slice_match(k: &IsotropyDescriptor, c: u64, bounds: &Bounds) -> MatchResult {
    let compatible: Vec<HssDescriptor> = enumerate(bounds)
        .into_iter()
        .filter(|d| quotient_compatible(&d.isotropy, k))
        .collect();
    let candidates = compatible.iter().filter(|d| d.dim_c == c).cloned().collect();
    MatchResult {
        target_k: k.clone(),
        required_dim: c,
        candidates,
        compatible,
        search_bounds: *bounds,
    }
}

fn to_u64(x: &BigInt) -> Result<u64, ClassifyError> {
    u64::try_from(x).map_err(|_| ClassifyError::Overflow(x.to_string()))
}

/// The orbit-table row in which `source` is the second column.
pub fn source_row(source: &ParallelEmbedding) -> Option<Table1Row> {
    match source {
        ParallelEmbedding::Veronese { n } => Some(Table1Row::Veronese { n: *n }),
        ParallelEmbedding::Segre { a, b } => Some(Table1Row::Segre { a: *a, b: *b }),
        ParallelEmbedding::FirstCanonical(d) => match d.family {
            HssFamily::EIII => Some(Table1Row::E7),
            HssFamily::DIII { n: 5 } => Some(Table1Row::E6),
            HssFamily::Quadric { n } => Some(Table1Row::Quadric { n: n + 2 }),
            HssFamily::AIII { a: 2, b } => Some(Table1Row::Plucker { n: b + 2 }),
            _ => None,
        },
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HolonomyMatch {
    pub source: ParallelEmbedding,
    pub row: Table1Row,
    pub holonomy: HssDescriptor,
    pub matched: MatchResult,
    /// Slice algebra dimension that was supplied, if any.
    pub slice_dim: Option<usize>,
    /// True when type data alone left several candidates.
    pub needed_slice: bool,
}

/// `base` widened so that the candidate search sees every classical entry
/// whose dimension equals the codimension of `source`.
pub fn search_bounds(source: &ParallelEmbedding, base: &Bounds) -> Result<Bounds, ClassifyError> {
    Ok(base.join(&Bounds::covering_dim(to_u64(&parallel_codim(source)?)?)))
}

/// Normal holonomy of an orbit-table embedding.
///
/// `slice_dim` is the real dimension of the image of the isotropy algebra of
/// `source` acting on the normal space. When given it must agree with the
/// isotropy algebra of the answer; it is required whenever type data leaves
/// more than one candidate.
pub fn normal_holonomy(
    source: &ParallelEmbedding,
    bounds: &Bounds,
    slice_dim: Option<usize>,
) -> Result<HolonomyMatch, ClassifyError> {
    let row = source_row(source).ok_or_else(|| ClassifyError::NotParallel(source.to_string()))?;
    let codim = to_u64(&parallel_codim(source)?)?;
    if codim == 0 {
        return Err(ClassifyError::NotParallel(source.to_string()));
    }
    let matched = slice_match(&source.isotropy(), codim, bounds);
    let fail = |m: &MatchResult| {
        Box::new(FailedMatch {
            source_label: source.to_string(),
            result: m.clone(),
            slice_dim,
        })
    };
    let (holonomy, needed_slice) = match (matched.candidates.as_slice(), slice_dim) {
        ([], _) => return Err(ClassifyError::NoCandidate(fail(&matched))),
        ([only], None) => (only.clone(), false),
        ([only], Some(s)) => {
            if only.isotropy.algebra_dim() != s {
                return Err(ClassifyError::SliceMismatch {
                    candidate: only.to_string(),
                    slice_dim: s,
                    expected: only.isotropy.algebra_dim(),
                });
            }
            (only.clone(), false)
        }
        (_, None) => return Err(ClassifyError::Ambiguous(fail(&matched))),
        (many, Some(s)) => {
            let fit: Vec<&HssDescriptor> = many.iter().filter(|d| d.isotropy.algebra_dim() == s).collect();
            match fit.as_slice() {
                [only] => ((*only).clone(), true),
                [] => return Err(ClassifyError::NoCandidate(fail(&matched))),
                _ => return Err(ClassifyError::Ambiguous(fail(&matched))),
            }
        }
    };
    let stored = row.holonomy();
    if holonomy != stored {
        return Err(ClassifyError::TableMismatch {
            row: row.to_string(),
            got: holonomy.to_string(),
            stored: stored.to_string(),
        });
    }
    Ok(HolonomyMatch {
        source: source.clone(),
        row,
        holonomy,
        matched,
        slice_dim,
        needed_slice,
    })
}

/// Result of matching a rank >= 3 space; the candidate list should be empty.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Exclusion {
    pub space: HssDescriptor,
    pub matched: MatchResult,
    /// Compatible entries of the required dimension outside the search
    /// bounds; the candidate search itself is bounded, this list is not.
    pub beyond_bounds: Vec<HssDescriptor>,
}

impl Exclusion {
    pub fn excluded(&self) -> bool {
        self.matched.candidates.is_empty() && self.beyond_bounds.is_empty()
    }
}

/// Match every catalog entry of rank at least three against its first
/// codimension.
pub fn exclusion_scan(bounds: &Bounds) -> Result<Vec<Exclusion>, ClassifyError> {
    enumerate(bounds)
        .into_iter()
        .filter(|d| d.rank >= 3)
        .map(|d| {
            let c = to_u64(&first_codim(&d)?)?;
            let matched = slice_match(&d.isotropy, c, bounds);
            let beyond_bounds = with_dim(c)
                .into_iter()
                .filter(|e| quotient_compatible(&e.isotropy, &d.isotropy) && !matched.candidates.contains(e))
                .collect();
            Ok(Exclusion {
                matched,
                space: d,
                beyond_bounds,
            })
        })
        .collect()
}

/// `dim_C(G/K) - 1 - dim_C(M)` against the codimension of the parallel
/// embedding of the orbit `M`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbitConsistency {
    pub row: Table1Row,
    pub ambient: HssDescriptor,
    pub orbit: Space,
    pub embedding: ParallelEmbedding,
    #[serde(with = "decimal")]
    pub projective_codim: BigInt,
    #[serde(with = "decimal")]
    pub embedding_codim: BigInt,
    pub holds: bool,
}

impl fmt::Display for OrbitConsistency {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}: {} - 1 - {} = {} vs {} = {}",
            self.row,
            self.ambient.dim_c,
            self.orbit.dim_c(),
            self.projective_codim,
            self.embedding,
            self.embedding_codim
        )
    }
}

pub fn row_consistency(row: Table1Row) -> Result<OrbitConsistency, ClassifyError> {
    let row = row.validate()?;
    let ambient = row.ambient();
    let embedding = row.orbit();
    let orbit = embedding.space();
    let projective_codim = BigInt::from(ambient.dim_c) - 1 - BigInt::from(orbit.dim_c());
    let embedding_codim = parallel_codim(&embedding)?;
    Ok(OrbitConsistency {
        holds: projective_codim == embedding_codim,
        row,
        ambient,
        orbit,
        embedding,
        projective_codim,
        embedding_codim,
    })
}

pub fn orbit_consistency(d: &HssDescriptor) -> Result<OrbitConsistency, ClassifyError> {
    row_consistency(Table1Row::from_ambient(d)?)
}

/// The catalog space for a family, if it is irreducible.
pub fn presentation(f: HssFamily) -> Option<HssDescriptor> {
    match normalize(f) {
        Ok(Space::Irreducible(d)) => Some(d),
        _ => None,
    }
}
