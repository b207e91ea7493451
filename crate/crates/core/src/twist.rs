//! Twisting functions f: Z₂ⁿ × Z₂ⁿ → Z₂ and their sign F = (−1)^f.
//!
//! The named families are sums of the component functions f₁, f₂, f₃, f_m;
//! any of them can be wrapped with row perturbations f′(z, y) = f(z, y) + δ_z(y).

use serde::{Deserialize, Serialize};

use crate::error::{json_error, Error, Result};
use crate::group::{check_dim, parse_word, word_string, ElementSet, GroupElement, MAX_DIM};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum Family {
    /// f₁ + f₂.
    Clifford,
    /// f₁ + f₂ + f₃.
    Octonion,
    /// f₁ + f₂ + f₃ + f_m, m ≥ 4.
    P { m: u32 },
    /// P(4) plus the quartic sedenion term; n = 4 only.
    Sedenion,
}

impl Family {
    pub fn name(&self) -> String {
        match self {
            Family::Clifford => "Clifford".into(),
            Family::Octonion => "Octonion".into(),
            Family::P { m } => format!("P({m})"),
            Family::Sedenion => "Sedenion".into(),
        }
    }
}

/// C(a, b) is odd iff the bits of b are a subset of the bits of a.
#[inline]
pub fn binomial_is_odd(a: u32, b: u32) -> bool {
    b & !a == 0
}

#[inline]
fn f1_word(x: u32, y: u32) -> u32 {
    (x & y).count_ones() & 1
}

#[inline]
fn f2_word(x: u32, y: u32) -> u32 {
    // bit b of p = parity of the bits of x strictly above b
    let mut p = x >> 1;
    p ^= p >> 1;
    p ^= p >> 2;
    p ^= p >> 4;
    p ^= p >> 8;
    p ^= p >> 16;
    (p & y).count_ones() & 1
}

/// Σ over y_l = 1 of C(|x| − x_l, m − 1), mod 2 (m ≥ 3).
#[inline]
fn fm_word(m: u32, x: u32, y: u32) -> u32 {
    let w = x.count_ones();
    let k = m - 1;
    let mut acc = 0;
    if w >= 1 && binomial_is_odd(w - 1, k) {
        acc ^= (x & y).count_ones() & 1;
    }
    if binomial_is_odd(w, k) {
        acc ^= (!x & y).count_ones() & 1;
    }
    acc
}

#[inline]
fn component_word(m: u32, x: u32, y: u32) -> u32 {
    match m {
        1 => f1_word(x, y),
        2 => f2_word(x, y),
        _ => fm_word(m, x, y),
    }
}

// Σ over distinct i, j, k ∈ {1,2,3}, j < k of x_i y_j y_k x_4, with n = 4.
fn sedenion_extra(x: u32, y: u32) -> u32 {
    let c = |v: u32, i: u32| (v >> (4 - i)) & 1;
    if c(x, 4) == 0 {
        return 0;
    }
    let mut acc = 0;
    for i in 1..=3 {
        let (j, k) = match i {
            1 => (2, 3),
            2 => (1, 3),
            _ => (1, 2),
        };
        acc ^= c(x, i) & c(y, j) & c(y, k);
    }
    acc
}

/// The component function f_m(x, y) for m ≥ 1.
pub fn f_component(m: u32, x: &GroupElement, y: &GroupElement) -> Result<u8> {
    if x.n() != y.n() {
        return Err(Error::DimensionMismatch(x.n(), y.n()));
    }
    if m == 0 {
        return Err(Error::InvalidParameters("f_m requires m >= 1".into()));
    }
    Ok(component_word(m, x.bits(), y.bits()) as u8)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "TwistJson", into = "TwistJson")]
pub struct TwistSpec {
    n: u32,
    family: Family,
    // sorted by row; few rows in practice
    perturbations: Vec<(u32, ElementSet)>,
}

impl TwistSpec {
    pub fn new(n: u32, family: Family) -> Result<Self> {
        check_dim(n, MAX_DIM)?;
        match family {
            Family::Sedenion if n != 4 => {
                return Err(Error::InvalidTwist(format!(
                    "Sedenion requires n = 4, got {n}"
                )))
            }
            Family::P { m } if m < 4 => {
                return Err(Error::InvalidTwist(format!(
                    "P(m) requires m >= 4, got {m}"
                )))
            }
            _ => {}
        }
        Ok(Self {
            n,
            family,
            perturbations: Vec::new(),
        })
    }

    pub fn clifford(n: u32) -> Result<Self> {
        Self::new(n, Family::Clifford)
    }

    pub fn octonion(n: u32) -> Result<Self> {
        Self::new(n, Family::Octonion)
    }

    pub fn p(n: u32, m: u32) -> Result<Self> {
        Self::new(n, Family::P { m })
    }

    pub fn sedenion() -> Result<Self> {
        Self::new(4, Family::Sedenion)
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn is_perturbed(&self) -> bool {
        !self.perturbations.is_empty()
    }

    /// Perturbation rows and their δ sets, in o-order of the row.
    pub fn perturbations(&self) -> impl Iterator<Item = (GroupElement, &ElementSet)> {
        self.perturbations
            .iter()
            .map(move |(r, d)| (GroupElement::from_word(self.n, *r), d))
    }

    /// New spec whose row z is shifted by δ_z(y) = [y ∈ D_z].
    pub fn perturb<I>(&self, rows: I) -> Result<Self>
    where
        I: IntoIterator<Item = (GroupElement, ElementSet)>,
    {
        if self.is_perturbed() {
            return Err(Error::InvalidTwist("base spec is already perturbed".into()));
        }
        let mut out = self.clone();
        for (row, delta) in rows {
            if row.n() != self.n {
                return Err(Error::DimensionMismatch(self.n, row.n()));
            }
            if delta.n() != self.n {
                return Err(Error::DimensionMismatch(self.n, delta.n()));
            }
            if out.perturbations.iter().any(|(r, _)| *r == row.bits()) {
                return Err(Error::DuplicateRow(row.to_string()));
            }
            out.perturbations.push((row.bits(), delta));
        }
        out.perturbations.sort_by_key(|(r, _)| *r);
        Ok(out)
    }

    /// Unperturbed exponent on raw words.
    #[inline]
    pub fn base_exponent_word(&self, x: u32, y: u32) -> u32 {
        let octonion = || f1_word(x, y) ^ f2_word(x, y) ^ fm_word(3, x, y);
        match self.family {
            Family::Clifford => f1_word(x, y) ^ f2_word(x, y),
            Family::Octonion => octonion(),
            Family::P { m } => octonion() ^ fm_word(m, x, y),
            Family::Sedenion => octonion() ^ fm_word(4, x, y) ^ sedenion_extra(x, y),
        }
    }

    /// The exponent f(x, y) ∈ {0, 1} on raw n-bit words (unchecked).
    #[inline]
    pub fn exponent_word(&self, x: u32, y: u32) -> u32 {
        let mut e = self.base_exponent_word(x, y);
        for (row, delta) in &self.perturbations {
            if *row == x {
                e ^= delta.contains_word(y) as u32;
            }
        }
        e
    }

    fn check(&self, x: &GroupElement) -> Result<()> {
        if x.n() != self.n {
            Err(Error::DimensionMismatch(self.n, x.n()))
        } else {
            Ok(())
        }
    }

    /// Exponent of the twisting sign, including any perturbation on row x.
    pub fn f_twist(&self, x: &GroupElement, y: &GroupElement) -> Result<u8> {
        self.check(x)?;
        self.check(y)?;
        Ok(self.exponent_word(x.bits(), y.bits()) as u8)
    }

    /// F(x, y) = (−1)^f(x, y).
    pub fn sign(&self, x: &GroupElement, y: &GroupElement) -> Result<i8> {
        Ok(if self.f_twist(x, y)? == 0 { 1 } else { -1 })
    }

    #[inline]
    pub(crate) fn associator_word(&self, x: u32, y: u32, z: u32) -> u32 {
        self.exponent_word(x, y)
            ^ self.exponent_word(x ^ y, z)
            ^ self.exponent_word(y, z)
            ^ self.exponent_word(x, y ^ z)
    }

    /// φ(x, y, z) = F(x,y)F(x+y,z) / (F(y,z)F(x,y+z)), so that
    /// (u_x·u_y)·u_z = φ(x,y,z) u_x·(u_y·u_z).
    pub fn associator(&self, x: &GroupElement, y: &GroupElement, z: &GroupElement) -> Result<i8> {
        if self.is_perturbed() {
            return Err(Error::PerturbedAssociator);
        }
        self.check(x)?;
        self.check(y)?;
        self.check(z)?;
        Ok(if self.associator_word(x.bits(), y.bits(), z.bits()) == 0 {
            1
        } else {
            -1
        })
    }

    /// Every term of f₁, f₂, f₃, f_m carries exactly one y factor; the
    /// sedenion term and arbitrary δ rows do not.
    pub fn is_linear_in_second(&self) -> bool {
        !self.is_perturbed() && !matches!(self.family, Family::Sedenion)
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PerturbationJson {
    pub row: String,
    pub delta: Vec<String>,
}

/// Wire form of [`TwistSpec`].
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct TwistJson {
    pub n: u32,
    pub family: Family,
    #[serde(default)]
    pub perturbations: Vec<PerturbationJson>,
}

pub(crate) fn parse_perturbations(
    n: u32,
    rows: &[PerturbationJson],
) -> Result<Vec<(GroupElement, ElementSet)>> {
    rows.iter()
        .enumerate()
        .map(|(i, p)| {
            let row = parse_word(n, &p.row, || format!("perturbations[{i}].row"))?;
            let mut delta = ElementSet::empty(n)?;
            for (j, s) in p.delta.iter().enumerate() {
                delta.insert_word(parse_word(n, s, || {
                    format!("perturbations[{i}].delta[{j}]")
                })?);
            }
            Ok((GroupElement::from_word(n, row), delta))
        })
        .collect()
}

impl TryFrom<TwistJson> for TwistSpec {
    type Error = Error;

    fn try_from(value: TwistJson) -> Result<Self> {
        let base = TwistSpec::new(value.n, value.family)?;
        let rows = parse_perturbations(value.n, &value.perturbations)?;
        base.perturb(rows)
    }
}

impl From<TwistSpec> for TwistJson {
    fn from(spec: TwistSpec) -> Self {
        let n = spec.n;
        TwistJson {
            n,
            family: spec.family,
            perturbations: spec
                .perturbations
                .iter()
                .map(|(r, d)| PerturbationJson {
                    row: word_string(n, *r),
                    delta: d.iter().map(|w| word_string(n, w)).collect(),
                })
                .collect(),
        }
    }
}

/// Perturbation rows from a JSON array `[{"row":"..","delta":[..]},..]`.
pub fn perturbations_from_json(n: u32, s: &str) -> Result<Vec<(GroupElement, ElementSet)>> {
    let rows: Vec<PerturbationJson> = serde_json::from_str(s).map_err(json_error)?;
    parse_perturbations(n, &rows)
}

impl TwistSpec {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("twist serialization is infallible")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str::<TwistJson>(s)
            .map_err(json_error)?
            .try_into()
    }
}
