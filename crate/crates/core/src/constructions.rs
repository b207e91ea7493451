//! Named constructions of multiplicative pairs and their closed-form triples.
//!
//! Every constructor builds explicit sets, recomputes the realized triple from
//! them and runs the general criterion before returning; closed forms live in
//! [`closed_form_triple`] and are only ever compared against.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::group::{binomial, check_dim, mask, rho, unit, ElementSet, GroupElement, MAX_DIM};
use crate::pairing::{
    check_pair_criterion, emit_identity, AdmissibleTriple, SquareIdentity, Triple, Verdict,
};
use crate::setops::{
    expand_to_utmost, method_subtraction, search_pair_exhaustive, SearchBudget, SearchOutcome,
};
use crate::twist::TwistSpec;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Addition,
    Subtraction,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(tag = "family")]
pub enum FamilyId {
    HurwitzRadon { n: u32 },
    YuzvinskyMod0 { n: u32 },
    YuzvinskyMod1 { n: u32 },
    YuzvinskyMod2 { n: u32 },
    Lmgo { n: u32, l: u32, k: u32 },
    LmgoDual { n: u32, l: u32, k: u32 },
    LmgoAugmented { n: u32, l: u32, k: u32 },
    AdditionFamily { n: u32, k: u32 },
    SpecialN4 { s: u32 },
    SpecialN7 { l: u32, k: u32, method: Method },
}

impl FamilyId {
    /// The Yuzvinsky family matching the residue of `n`.
    pub fn yuzvinsky(n: u32) -> Result<Self> {
        match n % 4 {
            0 => Ok(FamilyId::YuzvinskyMod0 { n }),
            1 => Ok(FamilyId::YuzvinskyMod1 { n }),
            2 => Ok(FamilyId::YuzvinskyMod2 { n }),
            _ => Err(Error::InvalidParameters(format!(
                "no Yuzvinsky family for n = {n} (n ≡ 3 mod 4)"
            ))),
        }
    }
}

impl fmt::Display for FamilyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilyId::HurwitzRadon { n } => write!(f, "hurwitz-radon n={n}"),
            FamilyId::YuzvinskyMod0 { n }
            | FamilyId::YuzvinskyMod1 { n }
            | FamilyId::YuzvinskyMod2 { n } => write!(f, "yuzvinsky n={n}"),
            FamilyId::Lmgo { n, l, k } => write!(f, "lmgo n={n} l={l} k={k}"),
            FamilyId::LmgoDual { n, l, k } => write!(f, "lmgo-dual n={n} l={l} k={k}"),
            FamilyId::LmgoAugmented { n, l, k } => write!(f, "lmgo-augmented n={n} l={l} k={k}"),
            FamilyId::AdditionFamily { n, k } => write!(f, "addition n={n} k={k}"),
            FamilyId::SpecialN4 { s } => write!(f, "special-n4 s={s}"),
            FamilyId::SpecialN7 { l, k, method } => {
                write!(
                    f,
                    "special-n7 l={l} k={k} {}",
                    match method {
                        Method::Addition => "addition",
                        Method::Subtraction => "subtraction",
                    }
                )
            }
        }
    }
}

/// A realized multiplicative pair with its recomputed triple.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Construction {
    pub family: FamilyId,
    pub spec: TwistSpec,
    pub a: ElementSet,
    pub b: ElementSet,
    pub triple: Triple,
}

impl Construction {
    /// Assemble and check the general criterion; failure is an error.
    pub fn verified(
        family: FamilyId,
        spec: TwistSpec,
        a: ElementSet,
        b: ElementSet,
    ) -> Result<Self> {
        if let Verdict::Fails(w) = check_pair_criterion(&spec, &a, &b)? {
            return Err(Error::ConstructionFailed(format!("{family}: {w}")));
        }
        let triple = Triple(a.len(), b.len(), a.sumset(&b)?.len());
        Ok(Self {
            family,
            spec,
            a,
            b,
            triple,
        })
    }

    pub fn identity(&self) -> Result<SquareIdentity> {
        emit_identity(&self.spec, &self.a, &self.b)
    }

    pub fn admissible(&self) -> AdmissibleTriple {
        AdmissibleTriple {
            triple: self.triple,
            provenance: self.family,
        }
    }
}

// e₀ = 0, ē₀ = all ones, ē_i = ē₀ + e_i.
fn ebar(n: u32, i: u32) -> u32 {
    if i == 0 {
        mask(n)
    } else {
        mask(n) ^ unit(n, i)
    }
}

fn weight(y: u32) -> u32 {
    y.count_ones()
}

const H_TABLE: [u64; 7] = [16, 32, 56, 64, 88, 104, 112];

/// The H-function: H(i) = i − 1 for i ≤ 9, tabulated for 10..=16 and
/// H(i) = 16·H(i − 8) beyond.
///
/// # Panics
/// If `i == 0` or the value does not fit in a `u64` (i > 127).
pub fn h_function(i: u32) -> u64 {
    assert!(i >= 1, "H is defined on positive integers");
    match i {
        1..=9 => (i - 1) as u64,
        10..=16 => H_TABLE[(i - 10) as usize],
        _ => h_function(i - 8)
            .checked_mul(16)
            .expect("H(i) overflows u64"),
    }
}

/// {h_i : o(h_i) = H(i) + 1, 1 ≤ i ≤ ρ(2ⁿ)}, Hurwitzian in P(4).
pub fn hurwitz_radon_set(n: u32) -> Result<ElementSet> {
    if n == 0 {
        return Err(Error::InvalidParameters("n must be at least 1".into()));
    }
    let words: Vec<u32> = (1..=rho(n))
        .map(|i| {
            let h = h_function(i);
            assert!(h < 1u64 << n, "H({i}) = {h} exceeds 2^{n}");
            h as u32
        })
        .collect();
    ElementSet::from_words(n, words)
}

/// The residue-dependent H-set in P(4):
/// n ≡ 0: {e₀, e_i, ē_i}; n ≡ 1, 2: {e_i, e₁ + e_i}; n ≡ 3: {e₀, ē₀, e_i, ē_i}.
pub fn hset_units(n: u32) -> Result<ElementSet> {
    if n < 4 {
        return Err(Error::InvalidParameters(format!(
            "requires n >= 4, got {n}"
        )));
    }
    check_dim(n, MAX_DIM)?;
    let mut words = Vec::new();
    for i in 1..=n {
        words.push(unit(n, i));
        match n % 4 {
            0 | 3 => words.push(ebar(n, i)),
            _ => words.push(unit(n, 1) ^ unit(n, i)),
        }
    }
    match n % 4 {
        0 => words.push(0),
        3 => words.extend([0, mask(n)]),
        _ => {}
    }
    ElementSet::from_words(n, words)
}

/// {e_i, e_i + e_n : 1 ≤ i ≤ n}; Hurwitzian in P(n) for n ≡ 2 mod 4.
pub fn hset_pnn(n: u32) -> Result<ElementSet> {
    if n < 4 {
        return Err(Error::InvalidParameters(format!(
            "requires n >= 4, got {n}"
        )));
    }
    let en = unit(n, n);
    ElementSet::from_words(n, (1..=n).flat_map(|i| [unit(n, i), unit(n, i) ^ en]))
}

/// (hurwitz_radon_set(n), Z₂ⁿ) in P(4): triple [ρ(2ⁿ), 2ⁿ, 2ⁿ].
pub fn hurwitz_radon_pair(n: u32) -> Result<Construction> {
    let a = hurwitz_radon_set(n)?;
    let b = ElementSet::full(n)?;
    Construction::verified(FamilyId::HurwitzRadon { n }, TwistSpec::p(n, 4)?, a, b)
}

/// Weight-shell set B₁ ⊂ Z₂^m: {|y| ≥ h + 1} ∪ {|y| = h, y₁ = 0}.
fn upper_shell(m: u32, h: u32) -> Vec<u32> {
    (0..1u32 << m)
        .filter(|&y| weight(y) > h || (weight(y) == h && y & unit(m, 1) == 0))
        .collect()
}

/// Pieces of the n ≡ 2 construction: B′₁ lifted into {y_n = 0}.
fn mod2_lift(b1: &[u32]) -> Vec<u32> {
    b1.iter().map(|&y| y << 1).collect()
}

/// Four translates B′ ∪ (ē_n + B′) ∪ (e_n + B′) ∪ (ē₀ + B′).
fn mod2_fourfold(n: u32, lifted: &[u32]) -> Vec<u32> {
    let shifts = [0, ebar(n, n), unit(n, n), mask(n)];
    lifted.iter().flat_map(|&y| shifts.map(|s| s ^ y)).collect()
}

/// Perturbed pair realizing [2n + 2, 2ⁿ − φ(n), 2ⁿ] for n ≥ 4, n ≢ 3 mod 4.
pub fn yuzvinsky_pair(n: u32) -> Result<Construction> {
    if n < 4 {
        return Err(Error::InvalidParameters(format!(
            "requires n >= 4, got {n}"
        )));
    }
    let family = FamilyId::yuzvinsky(n)?;
    check_dim(n, crate::group::DEFAULT_DENSE_LIMIT)?;
    let full = 1u32 << n;
    let (spec, a, b) = match n % 4 {
        0 => {
            let mut a = hset_units(n)?;
            a.insert_word(mask(n));
            let d = ElementSet::from_predicate(n, |y| weight(y) > n / 2)?;
            let b = ElementSet::from_predicate(n, |y| weight(y) != n / 2)?;
            let spec = TwistSpec::p(n, 4)?.perturb([(GroupElement::from_word(n, mask(n)), d)])?;
            (spec, a, b)
        }
        1 => {
            let a = ElementSet::from_words(
                n,
                (1..=n)
                    .flat_map(|i| [unit(n, i), ebar(n, i)])
                    .chain([0, mask(n)]),
            )?;
            let b1 = ElementSet::from_words(n, upper_shell(n, n.div_ceil(2)))?;
            let b = b1.union(&b1.translate_word(mask(n)))?;
            let rows = [0, mask(n)].map(|r| (GroupElement::from_word(n, r), b1.clone()));
            (TwistSpec::octonion(n)?.perturb(rows)?, a, b)
        }
        _ => {
            let mut a = hset_pnn(n)?;
            a.insert_word(mask(n));
            a.insert_word(ebar(n, n));
            let lifted = mod2_lift(&upper_shell(n - 1, n / 2));
            let en = unit(n, n);
            let d = ElementSet::from_words(n, lifted.iter().flat_map(|&y| [y, y ^ en]))?;
            let b = ElementSet::from_words(n, mod2_fourfold(n, &lifted))?;
            let rows = [mask(n), ebar(n, n), 0].map(|r| (GroupElement::from_word(n, r), d.clone()));
            (TwistSpec::p(n, n)?.perturb(rows)?, a, b)
        }
    };
    debug_assert!(b.len() < full as usize);
    Construction::verified(family, spec, a, b)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DeltaVariant {
    /// H ∪ {ē₀} with δ on row ē₀.
    Mod0,
    /// H ∪ {e₀, ē₀} in the octonions with equal δ on both rows.
    Mod1,
    /// H ∪ {ē₀, ē_n} in P(n), all seven equations.
    Mod2Full,
    /// The n ≡ 2 equations restricted to B₀ = B ∩ {y_n = 0}.
    Mod2Reduced,
}

impl FromStr for DeltaVariant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "mod0" => Ok(DeltaVariant::Mod0),
            "mod1" => Ok(DeltaVariant::Mod1),
            "mod2-full" => Ok(DeltaVariant::Mod2Full),
            "mod2-reduced" => Ok(DeltaVariant::Mod2Reduced),
            other => Err(Error::InvalidParameters(format!(
                "unknown delta variant '{other}'"
            ))),
        }
    }
}

/// δ(y) + δ(y + shift) ≠ rhs although both y and y + shift lie in B.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DeltaWitness {
    pub y: GroupElement,
    pub shift: GroupElement,
    pub rhs: u8,
}

/// Check the δ-equations of `variant` on explicit sets: `delta`
/// is the support of δ, `b` the companion set.
pub fn check_delta_conditions(
    variant: DeltaVariant,
    delta: &ElementSet,
    b: &ElementSet,
) -> Result<Verdict<DeltaWitness>> {
    let n = b.n();
    if delta.n() != n {
        return Err(Error::DimensionMismatch(n, delta.n()));
    }
    let d = |y: u32| delta.contains_word(y) as u8;
    let en = unit(n, n);
    let mut rules: Vec<(u32, u8)> = Vec::new();
    let mut domain = b.clone();
    match variant {
        DeltaVariant::Mod0 => {
            rules.push((mask(n), 1));
            for i in 1..=n {
                rules.push((ebar(n, i), 1));
                rules.push((unit(n, i), 0));
            }
        }
        DeltaVariant::Mod1 => {
            for i in 1..=n {
                rules.push((unit(n, i), 0));
                rules.push((ebar(n, i), 1));
            }
        }
        DeltaVariant::Mod2Full => {
            for i in 1..n {
                rules.push((ebar(n, i), 1));
                rules.push((ebar(n, i) ^ en, 1));
                rules.push((unit(n, i), 0));
                rules.push((unit(n, i) ^ en, 0));
            }
            rules.push((ebar(n, n), 1));
            rules.push((mask(n), 1));
            rules.push((en, 0));
        }
        DeltaVariant::Mod2Reduced => {
            if n < 2 {
                return Err(Error::InvalidParameters("mod2-reduced needs n >= 2".into()));
            }
            for y in 0..1u32 << n {
                if d(y) != d(y ^ en) {
                    return Ok(Verdict::Fails(DeltaWitness {
                        y: GroupElement::from_word(n, y),
                        shift: GroupElement::from_word(n, en),
                        rhs: 0,
                    }));
                }
            }
            domain = b.intersection(&ElementSet::from_predicate(n, |y| y & en == 0)?)?;
            for i in 1..n {
                rules.push((unit(n, i), 0));
                rules.push((unit(n, i) ^ ebar(n, n), 1));
            }
            rules.push((ebar(n, n), 1));
        }
    }
    for y in domain.iter() {
        for &(shift, rhs) in &rules {
            if domain.contains_word(y ^ shift) && d(y) ^ d(y ^ shift) != rhs {
                return Ok(Verdict::Fails(DeltaWitness {
                    y: GroupElement::from_word(n, y),
                    shift: GroupElement::from_word(n, shift),
                    rhs,
                }));
            }
        }
    }
    Ok(Verdict::Holds)
}

/// Variant and δ support matching a Yuzvinsky construction.
pub fn yuzvinsky_delta(c: &Construction) -> Result<(DeltaVariant, ElementSet)> {
    let variant = match c.family {
        FamilyId::YuzvinskyMod0 { .. } => DeltaVariant::Mod0,
        FamilyId::YuzvinskyMod1 { .. } => DeltaVariant::Mod1,
        FamilyId::YuzvinskyMod2 { .. } => DeltaVariant::Mod2Full,
        other => {
            return Err(Error::InvalidParameters(format!(
                "{other} is not a Yuzvinsky family"
            )))
        }
    };
    let (_, d) = c
        .spec
        .perturbations()
        .next()
        .ok_or_else(|| Error::InvalidParameters("construction is not perturbed".into()))?;
    Ok((variant, d.clone()))
}

fn check_lk(n: u32, l: u32, k: u32) -> Result<()> {
    if !(1 <= l && l < k && k <= n) {
        return Err(Error::InvalidParameters(format!(
            "need 1 <= l < k <= n, got l={l}, k={k}, n={n}"
        )));
    }
    Ok(())
}

/// Γ(l, k) = {e_ij : 1 ≤ i < j < k} ∪ {e_ik : 1 ≤ i ≤ l}.
pub fn gamma_set(n: u32, l: u32, k: u32) -> Result<ElementSet> {
    check_lk(n, l, k)?;
    let pairs = (1..k).flat_map(|j| (1..j).map(move |i| unit(n, i) ^ unit(n, j)));
    let tail = (1..=l).map(|i| unit(n, i) ^ unit(n, k));
    ElementSet::from_words(n, pairs.chain(tail))
}

/// B_lk = {e₀, w} ∪ Γ ∪ (w + Γ) before expansion.
pub fn lmgo_seed_set(n: u32, l: u32, k: u32, w: u32) -> Result<ElementSet> {
    let g = gamma_set(n, l, k)?;
    let mut b = g.union(&g.translate_word(w))?;
    b.insert_word(0);
    b.insert_word(w);
    Ok(b)
}

fn lmgo_w(n: u32) -> u32 {
    match n % 4 {
        1 | 2 => unit(n, 1),
        _ => mask(n),
    }
}

/// (hset_units(n), B′_lk) in P(4), where B′_lk is the utmost expansion of
/// B_lk inside Z₂ⁿ.
pub fn lmgo_pair(n: u32, l: u32, k: u32) -> Result<Construction> {
    check_lk(n, l, k)?;
    let a = hset_units(n)?;
    let seed = lmgo_seed_set(n, l, k, lmgo_w(n))?;
    let b = expand_to_utmost(&a, &seed, &ElementSet::full(n)?)?;
    Construction::verified(FamilyId::Lmgo { n, l, k }, TwistSpec::p(n, 4)?, a, b)
}

/// Subtraction dual of [`lmgo_pair`]: B_new = Z₂ⁿ \ (A + B′_lk).
pub fn lmgo_dual(n: u32, l: u32, k: u32) -> Result<Construction> {
    let base = lmgo_pair(n, l, k)?;
    let (b_new, _) = method_subtraction(&base.a, &ElementSet::full(n)?, &base.b)?;
    Construction::verified(FamilyId::LmgoDual { n, l, k }, base.spec, base.a, b_new)
}

/// B_lk with w = ē₀, expanded inside the n ≡ 0 Yuzvinsky companion set.
pub fn lmgo_augmented(n: u32, l: u32, k: u32) -> Result<Construction> {
    if n < 8 || !n.is_multiple_of(4) {
        return Err(Error::InvalidParameters(format!(
            "requires n >= 8, n ≡ 0 mod 4, got {n}"
        )));
    }
    check_lk(n, l, k)?;
    let base = yuzvinsky_pair(n)?;
    let seed = lmgo_seed_set(n, l, k, mask(n))?;
    let b = expand_to_utmost(&base.a, &seed, &base.b)?;
    Construction::verified(FamilyId::LmgoAugmented { n, l, k }, base.spec, base.a, b)
}

/// Largest k for which the addition family is defined.
pub fn addition_family_max_k(n: u32) -> Result<u32> {
    let half = match n % 4 {
        0 => n / 2,
        1 => (n - 1) / 2,
        2 => (n - 2) / 2,
        _ => {
            return Err(Error::InvalidParameters(format!(
                "no addition family for n = {n}"
            )))
        }
    };
    if n < 4 || half < 2 {
        return Err(Error::InvalidParameters(format!(
            "requires n >= 4, got {n}"
        )));
    }
    Ok(half - 2)
}

/// B_k: weight shells {|y| ≤ k or |y| ≥ n − k}, or for n ≡ 2 the four-fold
/// lift of the same shells in Z₂^{n−1}. Defined for any k; the family uses
/// 0 ≤ k ≤ max_k and the border uses k = max_k + 1.
pub fn addition_family_set(n: u32, k: u32) -> Result<ElementSet> {
    addition_family_max_k(n)?;
    if n % 4 == 2 {
        let m = n - 1;
        let shell: Vec<u32> = (0..1u32 << m)
            .filter(|&y| weight(y) <= k || weight(y) + k >= m)
            .collect();
        ElementSet::from_words(n, mod2_fourfold(n, &mod2_lift(&shell)))
    } else {
        ElementSet::from_predicate(n, |y| weight(y) <= k || weight(y) + k >= n)
    }
}

/// The Yuzvinsky A paired with B_k.
pub fn addition_family(n: u32, k: u32) -> Result<Construction> {
    let max_k = addition_family_max_k(n)?;
    if k > max_k {
        return Err(Error::InvalidParameters(format!(
            "k must be in 0..={max_k}, got {k}"
        )));
    }
    let base = yuzvinsky_pair(n)?;
    let b = addition_family_set(n, k)?;
    if !b.is_subset(&base.b)? {
        return Err(Error::NotSubset("B_k", "B"));
    }
    Construction::verified(FamilyId::AdditionFamily { n, k }, base.spec, base.a, b)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BorderCheck {
    pub border_k: u32,
    /// card(A + B_{max_k}), the third entry at the last k of the family.
    pub last_third_entry: usize,
    pub border_card: usize,
    pub expanded_card: usize,
    /// Second entry of the Yuzvinsky triple.
    pub yuzvinsky_card: usize,
    /// Expanding B_{max_k+1} inside the Yuzvinsky B gives back B itself.
    pub recovers_yuzvinsky: bool,
}

pub fn addition_border_check(n: u32) -> Result<BorderCheck> {
    let max_k = addition_family_max_k(n)?;
    let base = yuzvinsky_pair(n)?;
    let last = addition_family_set(n, max_k)?;
    let border = addition_family_set(n, max_k + 1)?;
    let expanded = expand_to_utmost(&base.a, &border, &base.b)?;
    Ok(BorderCheck {
        border_k: max_k + 1,
        last_third_entry: base.a.sumset(&last)?.len(),
        border_card: border.len(),
        expanded_card: expanded.len(),
        yuzvinsky_card: base.b.len(),
        recovers_yuzvinsky: expanded == base.b,
    })
}

/// Exhaustive search for a pair of size [9, s, 8 + s] in P(4) at n = 4.
pub fn special_n4(s: u32, budget: &SearchBudget) -> Result<Construction> {
    if !(1..=7).contains(&s) {
        return Err(Error::InvalidParameters(format!(
            "s must be in 1..=7, got {s}"
        )));
    }
    let spec = TwistSpec::p(4, 4)?;
    let s = s as usize;
    match search_pair_exhaustive(&spec, 9, s, 8 + s, budget)? {
        SearchOutcome::Found((a, b)) => {
            Construction::verified(FamilyId::SpecialN4 { s: s as u32 }, spec, a, b)
        }
        SearchOutcome::Exhausted => Err(Error::ConstructionFailed(format!(
            "no pair of size [9,{s},{}] exists in P(4) at n = 4",
            8 + s
        ))),
        SearchOutcome::BudgetExceeded { nodes } => Err(Error::ConstructionFailed(format!(
            "search for [9,{s},{}] gave up after {nodes} nodes",
            8 + s
        ))),
    }
}

/// (l, k), addition triple, subtraction triple.
pub type N7Row = ((u32, u32), [usize; 3], [usize; 3]);

/// Tabulated n = 7 rows.
pub const N7_TABLE: [N7Row; 10] = [
    ((2, 6), [16, 30, 104], [16, 24, 98]),
    ((3, 6), [16, 40, 108], [16, 20, 88]),
    ((4, 6), [16, 54, 112], [16, 16, 74]),
    ((5, 6), [16, 72, 116], [16, 12, 56]),
    ((1, 7), [16, 76, 118], [16, 10, 52]),
    ((2, 7), [16, 82, 120], [16, 8, 46]),
    ((3, 7), [16, 90, 122], [16, 6, 38]),
    ((4, 7), [16, 100, 124], [16, 4, 28]),
    ((5, 7), [16, 112, 126], [16, 2, 16]),
    ((6, 7), [16, 128, 128], [16, 0, 0]),
];

/// Addition and subtraction pairs at n = 7 for the given (l, k).
pub fn special_n7(l: u32, k: u32) -> Result<(Construction, Construction)> {
    check_lk(7, l, k)?;
    let mut add = lmgo_pair(7, l, k)?;
    add.family = FamilyId::SpecialN7 {
        l,
        k,
        method: Method::Addition,
    };
    let mut sub = lmgo_dual(7, l, k)?;
    sub.family = FamilyId::SpecialN7 {
        l,
        k,
        method: Method::Subtraction,
    };
    Ok((add, sub))
}

fn lmgo_formula(n: u32, l: u32, k: u32, augmented: bool) -> Triple {
    let (n_, l_, k_) = (n as usize, l as usize, k as usize);
    let base = 2 * (binomial(k as u64 - 1, 2) as usize + l_ + 1);
    let corr = 4 * binomial(k as u64, 3) as usize + 2 * k_ * l_;
    let r = rho(n) as usize + augmented as usize;
    if !augmented && matches!(n % 4, 1 | 2) {
        let s = if k + 2 <= n {
            base
        } else if k + 1 == n && l + 3 <= n {
            base + 2 * l_
        } else if k + 1 == n {
            base + 2 * l_ + 2
        } else {
            base + 2 * (n_ - 1 - l_)
        };
        Triple(r, s, base * n_ - corr)
    } else {
        let s = if k < n {
            base
        } else if l + 2 <= n {
            base + 2 * l_
        } else {
            base + 2 * l_ + 2
        };
        Triple(r, s, base * (n_ + 1) - corr)
    }
}

fn lmgo_closed(n: u32, l: u32, k: u32) -> Result<Triple> {
    check_lk(n, l, k)?;
    if n == 7 {
        if let Some((_, add, _)) = N7_TABLE.iter().find(|(lk, _, _)| *lk == (l, k)) {
            return Ok(Triple::from(*add));
        }
        return Ok(lmgo_formula(n, l, k, false));
    }
    if n < 5 || (matches!(n % 4, 0 | 3) && n < 8) {
        return Err(Error::InvalidParameters(format!(
            "no closed form for n = {n}"
        )));
    }
    Ok(lmgo_formula(n, l, k, false))
}

fn pow2(n: u32) -> usize {
    1usize << n
}

/// The closed-form size triple of a family, with no set construction.
pub fn closed_form_triple(family: FamilyId) -> Result<AdmissibleTriple> {
    let triple = match family {
        FamilyId::HurwitzRadon { n } => {
            check_dim(n, MAX_DIM)?;
            Triple(rho(n) as usize, pow2(n), pow2(n))
        }
        FamilyId::YuzvinskyMod0 { n }
        | FamilyId::YuzvinskyMod1 { n }
        | FamilyId::YuzvinskyMod2 { n } => {
            if n < 4 || FamilyId::yuzvinsky(n)? != family {
                return Err(Error::InvalidParameters(format!(
                    "{family} does not match n mod 4"
                )));
            }
            let phi = match n % 4 {
                0 => binomial(n as u64, n as u64 / 2),
                1 => 2 * binomial(n as u64 - 1, (n as u64 - 1) / 2),
                _ => 4 * binomial(n as u64 - 2, (n as u64 - 2) / 2),
            } as usize;
            Triple(2 * n as usize + 2, pow2(n) - phi, pow2(n))
        }
        FamilyId::Lmgo { n, l, k } => lmgo_closed(n, l, k)?,
        FamilyId::LmgoDual { n, l, k } => {
            let t = lmgo_closed(n, l, k)?;
            Triple(t.0, pow2(n) - t.2, pow2(n) - t.1)
        }
        FamilyId::LmgoAugmented { n, l, k } => {
            if n < 8 || n % 4 != 0 {
                return Err(Error::InvalidParameters(format!(
                    "requires n >= 8, n ≡ 0 mod 4, got {n}"
                )));
            }
            check_lk(n, l, k)?;
            lmgo_formula(n, l, k, true)
        }
        FamilyId::AdditionFamily { n, k } => {
            let max_k = addition_family_max_k(n)?;
            if k > max_k {
                return Err(Error::InvalidParameters(format!(
                    "k must be in 0..={max_k}, got {k}"
                )));
            }
            let partial = |m: u32, upto: u32| -> usize {
                (0..=upto)
                    .map(|i| binomial(m as u64, i as u64) as usize)
                    .sum()
            };
            let (factor, m) = if n % 4 == 2 { (4, n - 1) } else { (2, n) };
            Triple(
                2 * n as usize + 2,
                factor * partial(m, k),
                factor * partial(m, k + 1),
            )
        }
        FamilyId::SpecialN4 { s } => {
            if !(1..=7).contains(&s) {
                return Err(Error::InvalidParameters(format!(
                    "s must be in 1..=7, got {s}"
                )));
            }
            Triple(9, s as usize, 8 + s as usize)
        }
        FamilyId::SpecialN7 { l, k, method } => {
            let t = lmgo_closed(7, l, k)?;
            match method {
                Method::Addition => t,
                Method::Subtraction => Triple(t.0, 128 - t.2, 128 - t.1),
            }
        }
    };
    Ok(AdmissibleTriple {
        triple,
        provenance: family,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pairing::check_hurwitzian;

    #[test]
    fn h_function_values() {
        assert_eq!(h_function(1), 0);
        assert_eq!(h_function(9), 8);
        assert_eq!(h_function(12), 56);
        assert_eq!(h_function(20), 896);
        assert_eq!(h_function(24), 16 * 112);
    }

    #[test]
    fn hurwitz_radon_set_small_cases() {
        assert_eq!(hurwitz_radon_set(3).unwrap(), ElementSet::full(3).unwrap());
        assert_eq!(
            hurwitz_radon_set(4).unwrap().words(),
            (0..9).collect::<Vec<_>>()
        );
        assert!(hurwitz_radon_set(0).is_err());
    }

    #[test]
    fn unit_hset_cardinalities() {
        for n in 4..=12 {
            assert_eq!(hset_units(n).unwrap().len(), rho(n) as usize, "n = {n}");
        }
        assert_eq!(hset_units(8).unwrap().len(), 17);
        assert_eq!(hset_units(7).unwrap().len(), 16);
        assert!(hset_units(3).is_err());
    }

    #[test]
    fn pnn_shape() {
        let h = hset_pnn(6).unwrap();
        assert_eq!(h.len(), 12);
        assert!(h.contains_word(0));
        assert!(check_hurwitzian(&TwistSpec::p(6, 6).unwrap(), &h)
            .unwrap()
            .holds());
    }

    #[test]
    fn gamma_examples() {
        assert_eq!(gamma_set(5, 1, 2).unwrap().words(), vec![0b11000]);
        let g = gamma_set(5, 2, 4).unwrap();
        assert_eq!(g.len(), 5);
        for k in 2..=6 {
            for l in 1..k {
                let g = gamma_set(6, l, k).unwrap();
                assert_eq!(g.len() as u64, binomial(k as u64 - 1, 2) + l as u64);
            }
        }
        assert!(gamma_set(5, 2, 2).is_err());
        assert!(gamma_set(5, 0, 2).is_err());
        assert!(gamma_set(5, 1, 6).is_err());
    }

    #[test]
    fn small_yuzvinsky_triples() {
        assert_eq!(yuzvinsky_pair(4).unwrap().triple, Triple(10, 10, 16));
        assert_eq!(yuzvinsky_pair(5).unwrap().triple, Triple(12, 20, 32));
        assert_eq!(yuzvinsky_pair(6).unwrap().triple, Triple(14, 40, 64));
        assert!(yuzvinsky_pair(7).is_err());
        assert!(yuzvinsky_pair(3).is_err());
    }

    #[test]
    fn delta_conditions_accept_constructions() {
        for n in [4, 5, 6, 8] {
            let c = yuzvinsky_pair(n).unwrap();
            let (variant, d) = yuzvinsky_delta(&c).unwrap();
            assert!(
                check_delta_conditions(variant, &d, &c.b).unwrap().holds(),
                "n = {n}"
            );
            if variant == DeltaVariant::Mod2Full {
                let reduced = check_delta_conditions(DeltaVariant::Mod2Reduced, &d, &c.b).unwrap();
                assert!(reduced.holds());
            }
        }
    }

    #[test]
    fn zero_delta_breaks_the_antipodal_equation() {
        let n = 4;
        let b = ElementSet::from_words(n, [0b0001, 0b1110]).unwrap();
        let zero = ElementSet::empty(n).unwrap();
        let v = check_delta_conditions(DeltaVariant::Mod0, &zero, &b).unwrap();
        assert_eq!(v.witness().unwrap().shift.bits(), 0b1111);
    }

    #[test]
    fn lmgo_examples() {
        assert_eq!(lmgo_pair(5, 2, 4).unwrap().triple, Triple(10, 16, 28));
        assert_eq!(lmgo_pair(5, 3, 4).unwrap().triple, Triple(10, 22, 30));
        assert_eq!(lmgo_pair(6, 4, 5).unwrap().triple, Triple(12, 32, 52));
        assert_eq!(lmgo_pair(8, 1, 2).unwrap().triple, Triple(17, 4, 32));
        assert_eq!(lmgo_dual(6, 1, 2).unwrap().triple, Triple(12, 44, 60));
        assert_eq!(lmgo_dual(6, 1, 3).unwrap().triple, Triple(12, 38, 58));
    }

    #[test]
    fn closed_forms() {
        let t = |f| closed_form_triple(f).unwrap().triple;
        assert_eq!(t(FamilyId::YuzvinskyMod0 { n: 8 }), Triple(18, 186, 256));
        assert_eq!(t(FamilyId::Lmgo { n: 5, l: 3, k: 4 }), Triple(10, 22, 30));
        assert_eq!(t(FamilyId::HurwitzRadon { n: 7 }), Triple(16, 128, 128));
        assert_eq!(
            t(FamilyId::AdditionFamily { n: 8, k: 2 }),
            Triple(18, 74, 186)
        );
        assert_eq!(
            t(FamilyId::AdditionFamily { n: 6, k: 0 }),
            Triple(14, 4, 24)
        );
        assert_eq!(
            t(FamilyId::LmgoAugmented { n: 8, l: 1, k: 2 }),
            Triple(18, 4, 32)
        );
        assert!(closed_form_triple(FamilyId::YuzvinskyMod1 { n: 8 }).is_err());
        assert!(closed_form_triple(FamilyId::Lmgo { n: 4, l: 1, k: 2 }).is_err());
    }

    #[test]
    fn addition_family_n8() {
        let rows: Vec<Triple> = (0..=2)
            .map(|k| addition_family(8, k).unwrap().triple)
            .collect();
        assert_eq!(
            rows,
            vec![Triple(18, 2, 18), Triple(18, 18, 74), Triple(18, 74, 186)]
        );
        assert!(addition_family(8, 3).is_err());
        let border = addition_border_check(8).unwrap();
        assert_eq!(border.last_third_entry, 186);
        assert!(border.recovers_yuzvinsky);
    }
}
