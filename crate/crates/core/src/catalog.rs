//! Irreducible Hermitian symmetric spaces of compact type.
//!
//! Every space has exactly one presentation in the catalog. The parameter
//! floors remove the classical coincidences:
//!
//! | alias        | catalog entry |
//! |--------------|---------------|
//! | `CI(1)`, `DIII(2)`, `Quadric(1)` | `AIII(1,1)` |
//! | `CI(2)`      | `Quadric(3)`  |
//! | `DIII(3)`    | `AIII(1,3)`   |
//! | `Quadric(4)` | `AIII(2,2)`   |
//! | `DIII(4)`    | `Quadric(6)`  |
//!
//! `Quadric(2)` is `CP^1 x CP^1`, which is reducible and only appears as a
//! [`ProductDescriptor`].

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::rootsys::{DynkinType, RootSysError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CatalogError {
    #[error("cannot parse space {0:?} (expected e.g. AIII(2,4), CI(3), DIII(6), Quadric(5), EIII, EVII)")]
    Parse(String),
    #[error("{given} is below the catalog floor: {reason}")]
    BelowFloor { given: String, reason: String },
    #[error("no stored complex orbit for {0}: not in the first column of the orbit table")]
    NoStoredOrbit(String),
    #[error("{0} is not a valid orbit-table row")]
    BadRow(String),
    #[error(transparent)]
    RootSys(#[from] RootSysError),
}

/// Family and parameters of an irreducible Hermitian symmetric space.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum HssFamily {
    /// `SU(a+b)/S(U(a) x U(b))`, the Grassmannian of `a`-planes in `C^{a+b}`.
    AIII { a: u32, b: u32 },
    /// `Sp(n)/U(n)`.
    CI { n: u32 },
    /// `SO(2n)/U(n)`.
    DIII { n: u32 },
    /// `SO(n+2)/T^1 SO(n)`, the `n`-dimensional complex quadric.
    Quadric { n: u32 },
    /// `E6/T^1 Spin(10)`.
    EIII,
    /// `E7/T^1 E6`.
    EVII,
}

impl HssFamily {
    fn below_floor(&self) -> Option<String> {
        use HssFamily::*;
        let reason = match *self {
            AIII { a, b } if a == 0 || b == 0 => "AIII needs a, b >= 1".to_string(),
            AIII { a, b } if a > b => format!("AIII needs a <= b; write AIII({b},{a})"),
            CI { n } if n < 3 => match n {
                0 => "CI needs n >= 3".into(),
                1 => "CI(1) is AIII(1,1)".into(),
                _ => "CI(2) is Quadric(3)".into(),
            },
            DIII { n } if n < 5 => match n {
                2 => "DIII(2) is AIII(1,1)".into(),
                3 => "DIII(3) is AIII(1,3)".into(),
                4 => "DIII(4) is Quadric(6)".into(),
                _ => "DIII needs n >= 5".into(),
            },
            Quadric { n } if n < 3 || n == 4 => match n {
                1 => "Quadric(1) is AIII(1,1)".into(),
                2 => "Quadric(2) is CP(1)xCP(1), which is reducible".into(),
                4 => "Quadric(4) is AIII(2,2)".into(),
                _ => "Quadric needs n >= 3".into(),
            },
            _ => return None,
        };
        Some(reason)
    }
}

impl fmt::Display for HssFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HssFamily::AIII { a, b } => write!(f, "AIII({a},{b})"),
            HssFamily::CI { n } => write!(f, "CI({n})"),
            HssFamily::DIII { n } => write!(f, "DIII({n})"),
            HssFamily::Quadric { n } => write!(f, "Quadric({n})"),
            HssFamily::EIII => write!(f, "EIII"),
            HssFamily::EVII => write!(f, "EVII"),
        }
    }
}

impl FromStr for HssFamily {
    type Err = CatalogError;

    /// Parses the raw syntax without applying floors.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let err = || CatalogError::Parse(s.to_string());
        match compact.as_str() {
            "EIII" => return Ok(HssFamily::EIII),
            "EVII" => return Ok(HssFamily::EVII),
            _ => {}
        }
        let (name, rest) = compact.split_once('(').ok_or_else(err)?;
        let args = rest.strip_suffix(')').ok_or_else(err)?;
        let nums: Vec<u32> = args
            .split(',')
            .map(|x| x.parse::<u32>())
            .collect::<Result<_, _>>()
            .map_err(|_| err())?;
        match (name, nums.as_slice()) {
            ("AIII", &[a, b]) => Ok(HssFamily::AIII { a, b }),
            ("CP", &[n]) => Ok(HssFamily::AIII { a: 1, b: n }),
            ("CI", &[n]) => Ok(HssFamily::CI { n }),
            ("DIII", &[n]) => Ok(HssFamily::DIII { n }),
            ("Quadric", &[n]) => Ok(HssFamily::Quadric { n }),
            _ => Err(err()),
        }
    }
}

/// Isotropy algebra up to Lie-algebra data: simple ideals plus center rank.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct IsotropyDescriptor {
    /// Canonical types, sorted.
    pub simple_factors: Vec<DynkinType>,
    pub center_rank: u32,
}

impl IsotropyDescriptor {
    pub fn new(factors: impl IntoIterator<Item = DynkinType>, center_rank: u32) -> Result<Self, RootSysError> {
        let mut simple_factors = factors
            .into_iter()
            .map(DynkinType::canonicalize)
            .collect::<Result<Vec<_>, _>>()?;
        simple_factors.sort();
        Ok(IsotropyDescriptor {
            simple_factors,
            center_rank,
        })
    }

    /// Real dimension of the isotropy algebra.
    pub fn algebra_dim(&self) -> usize {
        self.simple_factors.iter().map(DynkinType::algebra_dim).sum::<usize>() + self.center_rank as usize
    }
}

impl fmt::Display for IsotropyDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = self.simple_factors.iter().map(ToString::to_string).collect();
        write!(f, "{{{}}} + T^{}", names.join(","), self.center_rank)
    }
}

/// `(ambient simple type, Bourbaki node)` of the cominuscule weight.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Cominuscule {
    pub group: DynkinType,
    pub node: usize,
}

/// One irreducible Hermitian symmetric space, in its catalog presentation.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub struct HssDescriptor {
    pub family: HssFamily,
    pub dim_c: u64,
    pub rank: u32,
    pub isotropy: IsotropyDescriptor,
    pub cominuscule: Cominuscule,
}

impl HssDescriptor {
    pub fn new(family: HssFamily) -> Result<Self, CatalogError> {
        if let Some(reason) = family.below_floor() {
            return Err(CatalogError::BelowFloor {
                given: family.to_string(),
                reason,
            });
        }
        Ok(HssDescriptor {
            family,
            dim_c: dim_c(family),
            rank: rank(family),
            isotropy: isotropy_of(family)?,
            cominuscule: cominuscule_of(family),
        })
    }

    pub fn aiii(a: u32, b: u32) -> Result<Self, CatalogError> {
        Self::new(HssFamily::AIII { a, b })
    }
    pub fn ci(n: u32) -> Result<Self, CatalogError> {
        Self::new(HssFamily::CI { n })
    }
    pub fn diii(n: u32) -> Result<Self, CatalogError> {
        Self::new(HssFamily::DIII { n })
    }
    pub fn quadric(n: u32) -> Result<Self, CatalogError> {
        Self::new(HssFamily::Quadric { n })
    }
    pub fn eiii() -> Self {
        Self::new(HssFamily::EIII).expect("EIII")
    }
    pub fn evii() -> Self {
        Self::new(HssFamily::EVII).expect("EVII")
    }
    /// `CP^n` as `AIII(1,n)`.
    pub fn cp(n: u32) -> Result<Self, CatalogError> {
        Self::aiii(1, n)
    }
}

impl fmt::Display for HssDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.family.fmt(f)
    }
}

impl FromStr for HssDescriptor {
    type Err = CatalogError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        HssDescriptor::new(s.parse()?)
    }
}

impl From<HssDescriptor> for String {
    fn from(d: HssDescriptor) -> String {
        d.to_string()
    }
}

impl TryFrom<String> for HssDescriptor {
    type Error = CatalogError;
    fn try_from(s: String) -> Result<Self, Self::Error> {
        s.parse()
    }
}

fn dim_c(f: HssFamily) -> u64 {
    match f {
        HssFamily::AIII { a, b } => a as u64 * b as u64,
        HssFamily::CI { n } => n as u64 * (n as u64 + 1) / 2,
        HssFamily::DIII { n } => n as u64 * (n as u64 - 1) / 2,
        HssFamily::Quadric { n } => n as u64,
        HssFamily::EIII => 16,
        HssFamily::EVII => 27,
    }
}

fn rank(f: HssFamily) -> u32 {
    match f {
        HssFamily::AIII { a, b } => a.min(b),
        HssFamily::CI { n } => n,
        HssFamily::DIII { n } => n / 2,
        HssFamily::Quadric { .. } | HssFamily::EIII => 2,
        HssFamily::EVII => 3,
    }
}

/// Simple ideals of `so(n)`.
pub fn so_factors(n: u32) -> Result<Vec<DynkinType>, RootSysError> {
    let n = n as usize;
    Ok(match n {
        0..=2 => vec![],
        4 => vec![DynkinType::a(1), DynkinType::a(1)],
        _ if n % 2 == 1 => vec![DynkinType::b((n - 1) / 2).canonicalize()?],
        _ => vec![DynkinType::d(n / 2).canonicalize()?],
    })
}

/// Simple ideals of `su(n)`, empty for `n = 1`.
fn su_factors(n: u32) -> Vec<DynkinType> {
    if n >= 2 {
        vec![DynkinType::a(n as usize - 1)]
    } else {
        vec![]
    }
}

fn isotropy_of(f: HssFamily) -> Result<IsotropyDescriptor, RootSysError> {
    let factors = match f {
        HssFamily::AIII { a, b } => su_factors(a).into_iter().chain(su_factors(b)).collect(),
        HssFamily::CI { n } | HssFamily::DIII { n } => su_factors(n),
        HssFamily::Quadric { n } => so_factors(n)?,
        HssFamily::EIII => vec![DynkinType::d(5)],
        HssFamily::EVII => vec![DynkinType::e(6)],
    };
    IsotropyDescriptor::new(factors, 1)
}

/// Type of `so(m)` as the ambient group of a quadric; `m >= 5`, `m != 6`.
fn so_type(m: u32) -> DynkinType {
    let m = m as usize;
    if m % 2 == 1 {
        DynkinType::b((m - 1) / 2)
    } else {
        DynkinType::d(m / 2)
    }
}

fn cominuscule_of(f: HssFamily) -> Cominuscule {
    let (group, node) = match f {
        HssFamily::AIII { a, b } => (DynkinType::a((a + b - 1) as usize), a as usize),
        HssFamily::CI { n } => (DynkinType::c(n as usize), n as usize),
        HssFamily::DIII { n } => (DynkinType::d(n as usize), n as usize),
        HssFamily::Quadric { n } => (so_type(n + 2), 1),
        HssFamily::EIII => (DynkinType::e(6), 1),
        HssFamily::EVII => (DynkinType::e(7), 7),
    };
    Cominuscule { group, node }
}

pub fn isotropy(d: &HssDescriptor) -> IsotropyDescriptor {
    d.isotropy.clone()
}

pub fn cominuscule(d: &HssDescriptor) -> Cominuscule {
    d.cominuscule
}

/// `CP^left x CP^right`, the image of the Segre embedding.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ProductDescriptor {
    pub left: u32,
    pub right: u32,
}

impl ProductDescriptor {
    pub fn dim_c(&self) -> u64 {
        self.left as u64 + self.right as u64
    }

    /// `U(left) x U(right)`, so two central circles.
    pub fn isotropy(&self) -> IsotropyDescriptor {
        IsotropyDescriptor::new(su_factors(self.left).into_iter().chain(su_factors(self.right)), 2)
            .expect("type A factors are canonical")
    }
}

impl fmt::Display for ProductDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CP({})xCP({})", self.left, self.right)
    }
}

/// A catalog entry or the Segre product.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub enum Space {
    Irreducible(HssDescriptor),
    Product(ProductDescriptor),
}

impl Space {
    pub fn dim_c(&self) -> u64 {
        match self {
            Space::Irreducible(d) => d.dim_c,
            Space::Product(p) => p.dim_c(),
        }
    }

    pub fn isotropy(&self) -> IsotropyDescriptor {
        match self {
            Space::Irreducible(d) => d.isotropy.clone(),
            Space::Product(p) => p.isotropy(),
        }
    }

    pub fn irreducible(&self) -> Option<&HssDescriptor> {
        match self {
            Space::Irreducible(d) => Some(d),
            Space::Product(_) => None,
        }
    }
}

impl fmt::Display for Space {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Space::Irreducible(d) => d.fmt(f),
            Space::Product(p) => p.fmt(f),
        }
    }
}

impl FromStr for Space {
    type Err = CatalogError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if let Some((l, r)) = compact.split_once(")x") {
            let parse_cp = |t: &str| -> Option<u32> { t.strip_prefix("CP(")?.trim_end_matches(')').parse().ok() };
            let err = || CatalogError::Parse(s.to_string());
            let left = parse_cp(l).ok_or_else(err)?;
            let right = parse_cp(r).ok_or_else(err)?;
            return Ok(Space::Product(ProductDescriptor { left, right }));
        }
        Ok(Space::Irreducible(compact.parse()?))
    }
}

impl From<Space> for String {
    fn from(s: Space) -> String {
        s.to_string()
    }
}

impl TryFrom<String> for Space {
    type Error = CatalogError;
    fn try_from(s: String) -> Result<Self, Self::Error> {
        s.parse()
    }
}

/// Resolve any presentation, including the aliases below the floors, to
/// its catalog space.
pub fn normalize(f: HssFamily) -> Result<Space, CatalogError> {
    use HssFamily::*;
    let irr = |f| HssDescriptor::new(f).map(Space::Irreducible);
    match f {
        AIII { a, b } if a > b => normalize(AIII { a: b, b: a }),
        CI { n: 1 } | DIII { n: 2 } | Quadric { n: 1 } => irr(AIII { a: 1, b: 1 }),
        CI { n: 2 } => irr(Quadric { n: 3 }),
        DIII { n: 3 } => irr(AIII { a: 1, b: 3 }),
        DIII { n: 4 } => irr(Quadric { n: 6 }),
        Quadric { n: 2 } => Ok(Space::Product(ProductDescriptor { left: 1, right: 1 })),
        Quadric { n: 4 } => irr(AIII { a: 2, b: 2 }),
        other => irr(other),
    }
}

fn normalized_irreducible(f: HssFamily) -> HssDescriptor {
    match normalize(f) {
        Ok(Space::Irreducible(d)) => d,
        other => panic!("{f} does not normalize to an irreducible space: {other:?}"),
    }
}

/// Per-family enumeration caps.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Bounds {
    /// `a + b <= aiii_max_sum`.
    pub aiii_max_sum: u32,
    pub aiii_max_a: u32,
    pub aiii_max_b: u32,
    pub ci_max: u32,
    pub diii_max: u32,
    pub quadric_max: u32,
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds {
            aiii_max_sum: 12,
            aiii_max_a: 11,
            aiii_max_b: 11,
            ci_max: 8,
            diii_max: 12,
            quadric_max: 12,
        }
    }
}

impl Bounds {
    /// Bounds that admit no classical entry.
    pub fn empty() -> Self {
        Bounds {
            aiii_max_sum: 0,
            aiii_max_a: 0,
            aiii_max_b: 0,
            ci_max: 0,
            diii_max: 0,
            quadric_max: 0,
        }
    }

    /// Componentwise `self <= other`.
    pub fn within(&self, other: &Bounds) -> bool {
        self.aiii_max_sum <= other.aiii_max_sum
            && self.aiii_max_a <= other.aiii_max_a
            && self.aiii_max_b <= other.aiii_max_b
            && self.ci_max <= other.ci_max
            && self.diii_max <= other.diii_max
            && self.quadric_max <= other.quadric_max
    }

    /// Smallest bounds admitting every classical entry of complex
    /// dimension at most `c`.
    pub fn covering_dim(c: u64) -> Self {
        let c = u32::try_from(c).unwrap_or(u32::MAX - 1);
        Bounds {
            aiii_max_sum: c + 1,
            aiii_max_a: c,
            aiii_max_b: c,
            ci_max: c,
            diii_max: c + 1,
            quadric_max: c,
        }
    }

    /// Componentwise maximum.
    pub fn join(&self, other: &Bounds) -> Bounds {
        Bounds {
            aiii_max_sum: self.aiii_max_sum.max(other.aiii_max_sum),
            aiii_max_a: self.aiii_max_a.max(other.aiii_max_a),
            aiii_max_b: self.aiii_max_b.max(other.aiii_max_b),
            ci_max: self.ci_max.max(other.ci_max),
            diii_max: self.diii_max.max(other.diii_max),
            quadric_max: self.quadric_max.max(other.quadric_max),
        }
    }

    fn admits_aiii(&self, a: u32, b: u32) -> bool {
        a <= self.aiii_max_a && b <= self.aiii_max_b && a + b <= self.aiii_max_sum
    }
}

impl fmt::Display for Bounds {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "aiii={},aiii_a={},aiii_b={},ci={},diii={},quadric={}",
            self.aiii_max_sum, self.aiii_max_a, self.aiii_max_b, self.ci_max, self.diii_max, self.quadric_max
        )
    }
}

/// Parses `key=value` pairs separated by commas, as printed by `Display`.
/// Keys not mentioned keep their default value.
impl FromStr for Bounds {
    type Err = CatalogError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut b = Bounds::default();
        for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            let bad = || CatalogError::Parse(format!("bad bounds entry {part:?}"));
            let (key, value) = part.split_once('=').ok_or_else(bad)?;
            let value: u32 = value.trim().parse().map_err(|_| bad())?;
            let slot = match key.trim() {
                "aiii" => &mut b.aiii_max_sum,
                "aiii_a" => &mut b.aiii_max_a,
                "aiii_b" => &mut b.aiii_max_b,
                "ci" => &mut b.ci_max,
                "diii" => &mut b.diii_max,
                "quadric" => &mut b.quadric_max,
                _ => return Err(bad()),
            };
            *slot = value;
        }
        Ok(b)
    }
}

/// All catalog entries within `bounds`: AIII by `(a, b)`, then CI, DIII and
/// Quadric by parameter, then EIII and EVII.
pub fn enumerate(bounds: &Bounds) -> Vec<HssDescriptor> {
    let mut out = Vec::new();
    let mut push = |f: HssFamily| {
        if f.below_floor().is_none() {
            out.push(HssDescriptor::new(f).expect("floor checked"));
        }
    };
    for a in 1..=bounds.aiii_max_a.min(bounds.aiii_max_sum) {
        for b in a..=bounds.aiii_max_b {
            if bounds.admits_aiii(a, b) {
                push(HssFamily::AIII { a, b });
            }
        }
    }
    for n in 3..=bounds.ci_max {
        push(HssFamily::CI { n });
    }
    for n in 5..=bounds.diii_max {
        push(HssFamily::DIII { n });
    }
    for n in 3..=bounds.quadric_max {
        push(HssFamily::Quadric { n });
    }
    push(HssFamily::EIII);
    push(HssFamily::EVII);
    out
}

/// Every catalog entry of complex dimension exactly `c`, in catalog order,
/// with no bounds.
pub fn with_dim(c: u64) -> Vec<HssDescriptor> {
    let mut out = Vec::new();
    let mut push = |f: HssFamily| {
        if f.below_floor().is_none() {
            out.push(HssDescriptor::new(f).expect("floor checked"));
        }
    };
    let small = |x: u64| u32::try_from(x).ok();
    let mut a = 1u64;
    while a * a <= c {
        if c.is_multiple_of(a) {
            if let (Some(a), Some(b)) = (small(a), small(c / a)) {
                push(HssFamily::AIII { a, b });
            }
        }
        a += 1;
    }
    let mut n = 1u64;
    while n * (n + 1) / 2 <= c {
        if n * (n + 1) / 2 == c {
            push(HssFamily::CI { n: n as u32 });
        }
        n += 1;
    }
    let mut n = 2u64;
    while n * (n - 1) / 2 <= c {
        if n * (n - 1) / 2 == c {
            push(HssFamily::DIII { n: n as u32 });
        }
        n += 1;
    }
    if let Some(n) = small(c) {
        push(HssFamily::Quadric { n });
    }
    if c == 16 {
        push(HssFamily::EIII);
    }
    if c == 27 {
        push(HssFamily::EVII);
    }
    out
}

/// The orbit of the highest weight line, together with the way it sits in
/// projective space.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ParallelEmbedding {
    /// First canonical embedding of a catalog space.
    FirstCanonical(HssDescriptor),
    /// Second canonical (Veronese) embedding of `CP^n`.
    Veronese { n: u32 },
    /// `CP^{a-1} x CP^{b-1}` in `P(C^a (x) C^b)`.
    Segre { a: u32, b: u32 },
}

impl ParallelEmbedding {
    pub fn space(&self) -> Space {
        match self {
            ParallelEmbedding::FirstCanonical(d) => Space::Irreducible(d.clone()),
            ParallelEmbedding::Veronese { n } => Space::Irreducible(HssDescriptor::cp(*n).expect("n >= 1")),
            ParallelEmbedding::Segre { a, b } => Space::Product(ProductDescriptor {
                left: a - 1,
                right: b - 1,
            }),
        }
    }

    pub fn dim_c(&self) -> u64 {
        self.space().dim_c()
    }

    pub fn isotropy(&self) -> IsotropyDescriptor {
        self.space().isotropy()
    }
}

impl fmt::Display for ParallelEmbedding {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParallelEmbedding::FirstCanonical(d) => write!(f, "first canonical embedding of {d}"),
            ParallelEmbedding::Veronese { n } => write!(f, "Veronese embedding of CP({n})"),
            ParallelEmbedding::Segre { a, b } => write!(f, "Segre embedding of CP({})xCP({})", a - 1, b - 1),
        }
    }
}

/// One row of the orbit table, with its parameters.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Table1Row {
    /// `E7/T^1 E6`.
    E7,
    /// `E6/T^1 Spin(10)`.
    E6,
    /// `Sp(n+1)/U(n+1)` with orbit `CP^n`.
    Veronese { n: u32 },
    /// `SO(n+2)/T^1 SO(n)` with orbit the quadric of dimension `n - 2`.
    Quadric { n: u32 },
    /// `SO(2n)/U(n)` with orbit `Gr_2(C^n)`.
    Plucker { n: u32 },
    /// `Gr_a(C^{a+b})` with orbit `CP^{a-1} x CP^{b-1}`.
    Segre { a: u32, b: u32 },
}

impl Table1Row {
    pub fn validate(self) -> Result<Self, CatalogError> {
        let ok = match self {
            Table1Row::E7 | Table1Row::E6 => true,
            Table1Row::Veronese { n } => n >= 1,
            Table1Row::Quadric { n } => n >= 3,
            Table1Row::Plucker { n } => n >= 4,
            Table1Row::Segre { a, b } => 2 <= a && a <= b,
        };
        if ok {
            Ok(self)
        } else {
            Err(CatalogError::BadRow(format!("{self:?}")))
        }
    }

    pub fn number(&self) -> u8 {
        match self {
            Table1Row::E7 => 1,
            Table1Row::E6 => 2,
            Table1Row::Veronese { .. } => 3,
            Table1Row::Quadric { .. } => 4,
            Table1Row::Plucker { .. } => 5,
            Table1Row::Segre { .. } => 6,
        }
    }

    /// Column 1, in catalog presentation.
    pub fn ambient(&self) -> HssDescriptor {
        use HssFamily::*;
        match *self {
            Table1Row::E7 => HssDescriptor::evii(),
            Table1Row::E6 => HssDescriptor::eiii(),
            Table1Row::Veronese { n } => normalized_irreducible(CI { n: n + 1 }),
            Table1Row::Quadric { n } => normalized_irreducible(Quadric { n }),
            Table1Row::Plucker { n } => normalized_irreducible(DIII { n }),
            Table1Row::Segre { a, b } => normalized_irreducible(AIII { a, b }),
        }
    }

    /// Column 2: the complex orbit and its embedding.
    pub fn orbit(&self) -> ParallelEmbedding {
        use HssFamily::*;
        match *self {
            Table1Row::E7 => ParallelEmbedding::FirstCanonical(HssDescriptor::eiii()),
            Table1Row::E6 => ParallelEmbedding::FirstCanonical(normalized_irreducible(DIII { n: 5 })),
            Table1Row::Veronese { n } => ParallelEmbedding::Veronese { n },
            Table1Row::Quadric { n } => match n - 2 {
                // a conic is the Veronese curve, and Quadric(2) is CP1 x CP1
                1 => ParallelEmbedding::Veronese { n: 1 },
                2 => ParallelEmbedding::Segre { a: 2, b: 2 },
                m => ParallelEmbedding::FirstCanonical(normalized_irreducible(Quadric { n: m })),
            },
            Table1Row::Plucker { n } => {
                ParallelEmbedding::FirstCanonical(normalized_irreducible(AIII { a: 2, b: n - 2 }))
            }
            Table1Row::Segre { a, b } => ParallelEmbedding::Segre { a, b },
        }
    }

    /// Column 3: the space whose isotropy representation is the normal
    /// holonomy, in catalog presentation.
    pub fn holonomy(&self) -> HssDescriptor {
        use HssFamily::*;
        match *self {
            Table1Row::E7 => normalized_irreducible(Quadric { n: 10 }),
            Table1Row::E6 => normalized_irreducible(AIII { a: 1, b: 5 }),
            Table1Row::Veronese { n } => normalized_irreducible(CI { n }),
            Table1Row::Quadric { .. } => normalized_irreducible(AIII { a: 1, b: 1 }),
            Table1Row::Plucker { n } => normalized_irreducible(DIII { n: n - 2 }),
            Table1Row::Segre { a, b } => normalized_irreducible(AIII { a: a - 1, b: b - 1 }),
        }
    }

    /// The row whose first column is `d` (for aliased spaces, the row of
    /// the catalog presentation).
    pub fn from_ambient(d: &HssDescriptor) -> Result<Self, CatalogError> {
        match d.family {
            HssFamily::EVII => Ok(Table1Row::E7),
            HssFamily::EIII => Ok(Table1Row::E6),
            HssFamily::CI { n } => Ok(Table1Row::Veronese { n: n - 1 }),
            HssFamily::Quadric { n } => Ok(Table1Row::Quadric { n }),
            HssFamily::DIII { n } => Ok(Table1Row::Plucker { n }),
            HssFamily::AIII { a, b } if a >= 2 => Ok(Table1Row::Segre { a, b }),
            HssFamily::AIII { .. } => Err(CatalogError::NoStoredOrbit(d.to_string())),
        }
    }

    /// Parameter sweep driven by the catalog caps: Veronese `n <= ci_max`,
    /// quadrics `3..=quadric_max`, Plücker `4..=diii_max`, Segre
    /// `2 <= a <= b` with `a + b <= aiii_max_sum`.
    pub fn sweep(bounds: &Bounds) -> Vec<Table1Row> {
        let mut rows = vec![Table1Row::E7, Table1Row::E6];
        rows.extend((1..=bounds.ci_max).map(|n| Table1Row::Veronese { n }));
        rows.extend((3..=bounds.quadric_max).map(|n| Table1Row::Quadric { n }));
        rows.extend((4..=bounds.diii_max).map(|n| Table1Row::Plucker { n }));
        for a in 2..=bounds.aiii_max_sum / 2 {
            for b in a..=bounds.aiii_max_sum - a {
                rows.push(Table1Row::Segre { a, b });
            }
        }
        rows
    }
}

impl fmt::Display for Table1Row {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Table1Row::E7 => write!(f, "row 1 (E7)"),
            Table1Row::E6 => write!(f, "row 2 (E6)"),
            Table1Row::Veronese { n } => write!(f, "row 3 (Veronese n={n})"),
            Table1Row::Quadric { n } => write!(f, "row 4 (quadric n={n})"),
            Table1Row::Plucker { n } => write!(f, "row 5 (Plücker n={n})"),
            Table1Row::Segre { a, b } => write!(f, "row 6 (Segre a={a}, b={b})"),
        }
    }
}

/// Column 1 to column 2 of the orbit table.
pub fn complex_orbit(d: &HssDescriptor) -> Result<Space, CatalogError> {
    Ok(Table1Row::from_ambient(d)?.orbit().space())
}
