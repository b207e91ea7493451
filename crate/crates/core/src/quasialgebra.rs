//! The twisted group algebra R_F Z₂ⁿ with exact integer coefficients.

use std::collections::BTreeMap;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::group::GroupElement;
use crate::twist::TwistSpec;

/// Σ a_x u_x with only nonzero coefficients stored.
#[derive(Debug, Clone)]
pub struct AlgebraElement {
    spec: Arc<TwistSpec>,
    coeffs: BTreeMap<u32, BigInt>,
}

impl PartialEq for AlgebraElement {
    fn eq(&self, other: &Self) -> bool {
        same_spec(&self.spec, &other.spec) && self.coeffs == other.coeffs
    }
}

impl Eq for AlgebraElement {}

fn same_spec(a: &Arc<TwistSpec>, b: &Arc<TwistSpec>) -> bool {
    Arc::ptr_eq(a, b) || a == b
}

impl AlgebraElement {
    pub fn zero(spec: Arc<TwistSpec>) -> Self {
        Self {
            spec,
            coeffs: BTreeMap::new(),
        }
    }

    /// The basis vector u_x.
    pub fn basis(spec: Arc<TwistSpec>, x: &GroupElement) -> Result<Self> {
        Self::from_coefficients(spec, [(*x, BigInt::from(1))])
    }

    pub fn from_coefficients<I, C>(spec: Arc<TwistSpec>, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (GroupElement, C)>,
        C: Into<BigInt>,
    {
        let mut out = Self::zero(spec);
        for (x, c) in terms {
            if x.n() != out.spec.n() {
                return Err(Error::DimensionMismatch(out.spec.n(), x.n()));
            }
            out.accumulate(x.bits(), c.into());
        }
        Ok(out)
    }

    fn accumulate(&mut self, x: u32, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(x).or_insert_with(BigInt::zero);
        *entry += c;
        if entry.is_zero() {
            self.coeffs.remove(&x);
        }
    }

    pub fn spec(&self) -> &Arc<TwistSpec> {
        &self.spec
    }

    pub fn coefficient(&self, x: &GroupElement) -> BigInt {
        self.coeffs
            .get(&x.bits())
            .cloned()
            .unwrap_or_else(BigInt::zero)
    }

    pub fn support(&self) -> Vec<GroupElement> {
        let n = self.spec.n();
        self.coeffs
            .keys()
            .map(|&w| GroupElement::new(n, w).expect("stored keys are valid"))
            .collect()
    }

    pub fn terms(&self) -> impl Iterator<Item = (u32, &BigInt)> {
        self.coeffs.iter().map(|(&w, c)| (w, c))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn check_spec(&self, other: &Self) -> Result<()> {
        if same_spec(&self.spec, &other.spec) {
            Ok(())
        } else {
            Err(Error::SpecMismatch)
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_spec(other)?;
        let mut out = self.clone();
        for (&w, c) in &other.coeffs {
            out.accumulate(w, c.clone());
        }
        Ok(out)
    }

    pub fn scale(&self, factor: &BigInt) -> Self {
        let mut out = Self::zero(self.spec.clone());
        for (&w, c) in &self.coeffs {
            out.accumulate(w, c * factor);
        }
        out
    }

    /// Bilinear extension of u_x·u_y = F(x, y) u_{x+y}.
    pub fn multiply(&self, other: &Self) -> Result<Self> {
        self.check_spec(other)?;
        let mut out = Self::zero(self.spec.clone());
        for (&x, a) in &self.coeffs {
            for (&y, b) in &other.coeffs {
                let prod = a * b;
                let term = if self.spec.exponent_word(x, y) == 0 {
                    prod
                } else {
                    -prod
                };
                out.accumulate(x ^ y, term);
            }
        }
        Ok(out)
    }

    /// N(a) = Σ a_x².
    pub fn euclidean_norm(&self) -> BigInt {
        self.coeffs.values().map(|c| c * c).sum()
    }

    /// Largest absolute coefficient (0 for the zero element).
    pub fn max_abs_coefficient(&self) -> BigInt {
        self.coeffs
            .values()
            .map(|c| c.abs())
            .max()
            .unwrap_or_else(BigInt::zero)
    }
}
