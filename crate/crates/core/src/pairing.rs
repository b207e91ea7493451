//! Multiplicative pairs (A, B): criterion checks, the test function, and
//! the explicit square identity (Σ_A a_x²)(Σ_B b_y²) = Σ_{A+B} c_z².
//!
//! Three independent routes decide multiplicativity:
//! the four-term criterion quantified over outcomes z, the same criterion
//! quantified over (x, t, y), and the full symbolic expansion of Σ c_z².
//! A seeded numeric substitution serves as a fourth, probabilistic oracle.

use std::collections::HashMap;
use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::constructions::FamilyId;
use crate::error::{json_error, Error, Result};
use crate::group::{parse_word, word_string, ElementSet, GroupElement};
use crate::twist::{TwistJson, TwistSpec};

/// Default cap on card(A)²·card(A+B) for symbolic expansion.
pub const DEFAULT_SYMBOLIC_BUDGET: u128 = 1_000_000_000;

// Monomials accumulated per pass of the symbolic expansion.
const SHARD_TARGET: u128 = 1 << 22;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict<W> {
    Holds,
    Fails(W),
}

impl<W> Verdict<W> {
    pub fn holds(&self) -> bool {
        matches!(self, Verdict::Holds)
    }

    pub fn witness(&self) -> Option<&W> {
        match self {
            Verdict::Holds => None,
            Verdict::Fails(w) => Some(w),
        }
    }
}

/// An admissible size triple [r, s, N].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Triple(pub usize, pub usize, pub usize);

impl Triple {
    pub fn r(&self) -> usize {
        self.0
    }

    pub fn s(&self) -> usize {
        self.1
    }

    /// Number of squares on the right-hand side.
    pub fn n_squares(&self) -> usize {
        self.2
    }
}

impl fmt::Display for Triple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{},{}]", self.0, self.1, self.2)
    }
}

impl From<[usize; 3]> for Triple {
    fn from(v: [usize; 3]) -> Self {
        Triple(v[0], v[1], v[2])
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AdmissibleTriple {
    pub triple: Triple,
    pub provenance: FamilyId,
}

/// First violation of the criterion: outcome z and x ≠ t ∈ A with
/// x + z, t + z ∈ B.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PairWitness {
    pub z: GroupElement,
    pub x: GroupElement,
    pub t: GroupElement,
}

impl fmt::Display for PairWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "z={} x={} t={}", self.z, self.x, self.t)
    }
}

/// Violation of the (x, t, y) form: x ≠ t ∈ A, y and x + t + y ∈ B.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AltWitness {
    pub x: GroupElement,
    pub t: GroupElement,
    pub y: GroupElement,
}

impl fmt::Display for AltWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "x={} t={} y={}", self.x, self.t, self.y)
    }
}

fn check_dims(spec: &TwistSpec, a: &ElementSet, b: &ElementSet) -> Result<()> {
    let n = spec.n();
    for m in [a.n(), b.n()] {
        if m != n {
            return Err(Error::DimensionMismatch(n, m));
        }
    }
    Ok(())
}

pub fn sumset(a: &ElementSet, b: &ElementSet) -> Result<ElementSet> {
    a.sumset(b)
}

/// f(x,x+z) + f(x,t+z) + f(t,x+z) + f(t,t+z) = 1 for every z ∈ A+B and
/// x ≠ t ∈ A with x+z, t+z ∈ B. Works for any twist, perturbed or not.
/// The witness is the first failure in (o(z), o(x), o(t)) order.
pub fn check_pair_criterion(
    spec: &TwistSpec,
    a: &ElementSet,
    b: &ElementSet,
) -> Result<Verdict<PairWitness>> {
    check_dims(spec, a, b)?;
    let n = spec.n();
    let outcomes = a.sumset(b)?.words();
    let a_words = a.words();
    let f = |x, y| spec.exponent_word(x, y);
    let hit = outcomes.par_iter().find_map_first(|&z| {
        let xs: Vec<u32> = a_words
            .iter()
            .copied()
            .filter(|&x| b.contains_word(x ^ z))
            .collect();
        for (i, &x) in xs.iter().enumerate() {
            for &t in &xs[i + 1..] {
                if f(x, x ^ z) ^ f(x, t ^ z) ^ f(t, x ^ z) ^ f(t, t ^ z) != 1 {
                    return Some(PairWitness {
                        z: GroupElement::from_word(n, z),
                        x: GroupElement::from_word(n, x),
                        t: GroupElement::from_word(n, t),
                    });
                }
            }
        }
        None
    });
    Ok(hit.map_or(Verdict::Holds, Verdict::Fails))
}

/// f(x,y) + f(t,y) + f(x,x+t+y) + f(t,x+t+y) = 1 for all x ≠ t ∈ A and
/// y ∈ B with x + t + y ∈ B.
pub fn check_pair_criterion_alt(
    spec: &TwistSpec,
    a: &ElementSet,
    b: &ElementSet,
) -> Result<Verdict<AltWitness>> {
    check_dims(spec, a, b)?;
    let n = spec.n();
    let a_words = a.words();
    let b_words = b.words();
    let f = |x, y| spec.exponent_word(x, y);
    let hit = (0..a_words.len()).into_par_iter().find_map_first(|i| {
        let x = a_words[i];
        for &t in &a_words[i + 1..] {
            for &y in &b_words {
                let y2 = x ^ t ^ y;
                if b.contains_word(y2) && f(x, y) ^ f(t, y) ^ f(x, y2) ^ f(t, y2) != 1 {
                    return Some(AltWitness {
                        x: GroupElement::from_word(n, x),
                        t: GroupElement::from_word(n, t),
                        y: GroupElement::from_word(n, y),
                    });
                }
            }
        }
        None
    });
    Ok(hit.map_or(Verdict::Holds, Verdict::Fails))
}

/// c(x, t) = f(x, x+t) + f(t, x+t); only meaningful for twists linear in y.
pub fn test_function_c(spec: &TwistSpec, x: &GroupElement, t: &GroupElement) -> Result<u8> {
    if !spec.is_linear_in_second() {
        return Err(Error::NotLinear);
    }
    let s = x.add(*t)?;
    Ok(spec.f_twist(x, &s)? ^ spec.f_twist(t, &s)?)
}

#[inline]
pub(crate) fn test_function_word(spec: &TwistSpec, x: u32, t: u32) -> u32 {
    spec.exponent_word(x, x ^ t) ^ spec.exponent_word(t, x ^ t)
}

/// Holds iff c(x, t) = 1 for all distinct x, t ∈ H, i.e. (H, Z₂ⁿ) is
/// multiplicative for a twist linear in its second argument.
pub fn check_hurwitzian(
    spec: &TwistSpec,
    h: &ElementSet,
) -> Result<Verdict<(GroupElement, GroupElement)>> {
    if !spec.is_linear_in_second() {
        return Err(Error::NotLinear);
    }
    if h.n() != spec.n() {
        return Err(Error::DimensionMismatch(spec.n(), h.n()));
    }
    let n = spec.n();
    let words = h.words();
    let hit = (0..words.len()).into_par_iter().find_map_first(|i| {
        let x = words[i];
        words[i + 1..]
            .iter()
            .find(|&&t| test_function_word(spec, x, t) != 1)
            .map(|&t| (GroupElement::from_word(n, x), GroupElement::from_word(n, t)))
    });
    Ok(hit.map_or(Verdict::Holds, Verdict::Fails))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Summand {
    pub sign: i8,
    pub x: u32,
    pub y: u32,
}

/// c_z = Σ sign · a_x b_y over the listed (x, y) with x + y = z.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OutcomeTerms {
    pub z: u32,
    pub summands: Vec<Summand>,
}

/// (Σ_{x∈A} a_x²)(Σ_{y∈B} b_y²) = Σ_{z∈A+B} c_z² with every c_z listed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SquareIdentity {
    pub spec: TwistSpec,
    pub a: ElementSet,
    pub b: ElementSet,
    pub triple: Triple,
    pub terms: Vec<OutcomeTerms>,
}

/// Emit the identity of a verified multiplicative pair.
pub fn emit_identity(spec: &TwistSpec, a: &ElementSet, b: &ElementSet) -> Result<SquareIdentity> {
    match check_pair_criterion(spec, a, b)? {
        Verdict::Holds => SquareIdentity::build_unchecked(spec, a, b),
        Verdict::Fails(w) => Err(Error::NotMultiplicative(w.to_string())),
    }
}

impl SquareIdentity {
    /// Materialize the c_z without checking multiplicativity; the result
    /// is a candidate identity that may fail verification.
    pub fn build_unchecked(spec: &TwistSpec, a: &ElementSet, b: &ElementSet) -> Result<Self> {
        check_dims(spec, a, b)?;
        let sum = a.sumset(b)?;
        let a_words = a.words();
        let terms: Vec<OutcomeTerms> = sum
            .iter()
            .map(|z| OutcomeTerms {
                z,
                summands: a_words
                    .iter()
                    .filter(|&&x| b.contains_word(x ^ z))
                    .map(|&x| Summand {
                        sign: if spec.exponent_word(x, x ^ z) == 0 {
                            1
                        } else {
                            -1
                        },
                        x,
                        y: x ^ z,
                    })
                    .collect(),
            })
            .collect();
        Ok(Self {
            spec: spec.clone(),
            a: a.clone(),
            b: b.clone(),
            triple: Triple(a.len(), b.len(), sum.len()),
            terms,
        })
    }

    pub fn n(&self) -> u32 {
        self.spec.n()
    }

    /// Checks the bookkeeping invariants: sizes, the exact (x, x+z)
    /// enumeration per outcome, and that every sign is F(x, y).
    pub fn check_structure(&self) -> std::result::Result<(), String> {
        let n = self.n();
        check_dims(&self.spec, &self.a, &self.b).map_err(|e| e.to_string())?;
        let sum = self.a.sumset(&self.b).map_err(|e| e.to_string())?;
        let expected = Triple(self.a.len(), self.b.len(), sum.len());
        if self.triple != expected {
            return Err(format!(
                "triple {} does not match sets {}",
                self.triple, expected
            ));
        }
        let zs: Vec<u32> = self.terms.iter().map(|t| t.z).collect();
        if zs != sum.words() {
            return Err("outcomes do not enumerate A+B in order".into());
        }
        for term in &self.terms {
            let z = term.z;
            let listed: Vec<u32> = term.summands.iter().map(|s| s.x).collect();
            let want: Vec<u32> = self
                .a
                .iter()
                .filter(|&x| self.b.contains_word(x ^ z))
                .collect();
            if listed != want {
                return Err(format!("c_{} lists the wrong summands", word_string(n, z)));
            }
            for s in &term.summands {
                let f = self.spec.exponent_word(s.x, s.y);
                let sign = if f == 0 { 1 } else { -1 };
                if s.y != s.x ^ z || s.sign != sign {
                    return Err(format!(
                        "summand (x={}, y={}) in c_{} is inconsistent",
                        word_string(n, s.x),
                        word_string(n, s.y),
                        word_string(n, z)
                    ));
                }
            }
        }
        Ok(())
    }

    pub fn to_latex(&self) -> String {
        let mut out = format!(
            "% {} square identity over {} (n = {})\n",
            self.triple,
            self.spec.family().name(),
            self.n()
        );
        for term in &self.terms {
            let mut line = format!("c_{{{}}} = ", term.z as u64 + 1);
            for (i, s) in term.summands.iter().enumerate() {
                let sign = match (i, s.sign) {
                    (0, 1) => "",
                    (0, _) => "-",
                    (_, 1) => " + ",
                    _ => " - ",
                };
                line.push_str(&format!(
                    "{sign}a_{{{}}} b_{{{}}}",
                    s.x as u64 + 1,
                    s.y as u64 + 1
                ));
            }
            line.push_str(" \\\\\n");
            out.push_str(&line);
        }
        out
    }

    pub fn to_text(&self) -> String {
        let n = self.n();
        let mut out = format!(
            "{} identity over {} (n = {}, perturbed rows: {})\n",
            self.triple,
            self.spec.family().name(),
            n,
            self.spec.perturbations().count()
        );
        for term in &self.terms {
            let body: Vec<String> = term
                .summands
                .iter()
                .map(|s| {
                    format!(
                        "{}a[{}]b[{}]",
                        if s.sign == 1 { "+" } else { "-" },
                        word_string(n, s.x),
                        word_string(n, s.y)
                    )
                })
                .collect();
            out.push_str(&format!(
                "c[{}] = {}\n",
                word_string(n, term.z),
                body.join(" ")
            ));
        }
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&IdentityJson::from(self))
            .expect("identity serialization is infallible")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let raw: IdentityJson = serde_json::from_str(s).map_err(json_error)?;
        raw.try_into()
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SummandJson {
    pub sign: i8,
    pub x: String,
    pub y: String,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct TermJson {
    pub z: String,
    pub summands: Vec<SummandJson>,
}

/// Wire form of [`SquareIdentity`].
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct IdentityJson {
    pub n: u32,
    pub twist: TwistJson,
    #[serde(rename = "A")]
    pub a: Vec<String>,
    #[serde(rename = "B")]
    pub b: Vec<String>,
    pub triple: Triple,
    pub terms: Vec<TermJson>,
}

impl From<&SquareIdentity> for IdentityJson {
    fn from(id: &SquareIdentity) -> Self {
        let n = id.n();
        IdentityJson {
            n,
            twist: id.spec.clone().into(),
            a: id.a.iter().map(|w| word_string(n, w)).collect(),
            b: id.b.iter().map(|w| word_string(n, w)).collect(),
            triple: id.triple,
            terms: id
                .terms
                .iter()
                .map(|t| TermJson {
                    z: word_string(n, t.z),
                    summands: t
                        .summands
                        .iter()
                        .map(|s| SummandJson {
                            sign: s.sign,
                            x: word_string(n, s.x),
                            y: word_string(n, s.y),
                        })
                        .collect(),
                })
                .collect(),
        }
    }
}

impl TryFrom<IdentityJson> for SquareIdentity {
    type Error = Error;

    fn try_from(raw: IdentityJson) -> Result<Self> {
        let n = raw.n;
        if raw.twist.n != n {
            return Err(Error::DimensionMismatch(n, raw.twist.n));
        }
        let spec = TwistSpec::try_from(raw.twist)?;
        let set = |items: &[String], label: &str| -> Result<ElementSet> {
            let mut s = ElementSet::empty(n)?;
            for (i, item) in items.iter().enumerate() {
                s.insert_word(parse_word(n, item, || format!("{label}[{i}]"))?);
            }
            Ok(s)
        };
        let a = set(&raw.a, "A")?;
        let b = set(&raw.b, "B")?;
        let mut terms = Vec::with_capacity(raw.terms.len());
        for (i, t) in raw.terms.iter().enumerate() {
            let z = parse_word(n, &t.z, || format!("terms[{i}].z"))?;
            let mut summands = Vec::with_capacity(t.summands.len());
            for (j, s) in t.summands.iter().enumerate() {
                if s.sign != 1 && s.sign != -1 {
                    return Err(Error::Parse {
                        position: format!("terms[{i}].summands[{j}].sign"),
                        message: format!("expected 1 or -1, got {}", s.sign),
                    });
                }
                summands.push(Summand {
                    sign: s.sign,
                    x: parse_word(n, &s.x, || format!("terms[{i}].summands[{j}].x"))?,
                    y: parse_word(n, &s.y, || format!("terms[{i}].summands[{j}].y"))?,
                });
            }
            terms.push(OutcomeTerms { z, summands });
        }
        Ok(SquareIdentity {
            spec,
            a,
            b,
            triple: raw.triple,
            terms,
        })
    }
}

/// A monomial a_x a_t b_u b_v of Σ c_z² whose coefficient is wrong.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MonomialWitness {
    pub a: (GroupElement, GroupElement),
    pub b: (GroupElement, GroupElement),
    pub coefficient: i64,
    pub expected: i64,
}

impl fmt::Display for MonomialWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "a_{} a_{} b_{} b_{} has coefficient {} (expected {})",
            self.a.0, self.a.1, self.b.0, self.b.1, self.coefficient, self.expected
        )
    }
}

type MonomialKey = (u32, u32, u32, u32);

#[inline]
fn monomial_key(x: u32, t: u32, u: u32, v: u32) -> MonomialKey {
    let (x, t) = if x <= t { (x, t) } else { (t, x) };
    let (u, v) = if u <= v { (u, v) } else { (v, u) };
    (x, t, u, v)
}

#[inline]
fn shard_of(key: &MonomialKey, shards: u64) -> u64 {
    let h = (key.0 as u64)
        .wrapping_mul(0x9e37_79b9_7f4a_7c15)
        .wrapping_add((key.1 as u64).wrapping_mul(0xc2b2_ae3d_27d4_eb4f))
        .wrapping_add((key.2 as u64).wrapping_mul(0x1656_67b1_9e37_79f9))
        .wrapping_add((key.3 as u64).wrapping_mul(0x85eb_ca77_c2b2_ae63));
    (h >> 17) % shards
}

pub fn verify_identity_symbolic(identity: &SquareIdentity) -> Result<Verdict<MonomialWitness>> {
    verify_identity_symbolic_with_budget(identity, DEFAULT_SYMBOLIC_BUDGET)
}

/// Expand Σ c_z² into monomials a_x a_t b_u b_v with exact coefficients and
/// compare with the left-hand side: each a_x² b_y² (x ∈ A, y ∈ B) must
/// have coefficient 1 and every other monomial must cancel.
///
/// Memory is bounded by splitting the key space into shards and
/// re-scanning the terms once per shard.
pub fn verify_identity_symbolic_with_budget(
    identity: &SquareIdentity,
    budget: u128,
) -> Result<Verdict<MonomialWitness>> {
    let widest = identity
        .terms
        .iter()
        .map(|t| t.summands.len())
        .max()
        .unwrap_or(0)
        .max(identity.a.len()) as u128;
    let required = widest * widest * identity.terms.len() as u128;
    if required > budget {
        return Err(Error::BudgetExceeded { required, budget });
    }
    let pairs: u128 = identity
        .terms
        .iter()
        .map(|t| {
            let k = t.summands.len() as u128;
            k * (k + 1) / 2
        })
        .sum::<u128>()
        + (identity.a.len() * identity.b.len()) as u128;
    let shards = pairs.div_ceil(SHARD_TARGET).max(1) as u64;

    let n = identity.n();
    let a_words = identity.a.words();
    let b_words = identity.b.words();
    let mut worst: Option<(MonomialKey, i64, i64)> = None;

    for shard in 0..shards {
        let expansion: HashMap<MonomialKey, i64> = identity
            .terms
            .par_iter()
            .fold(HashMap::new, |mut acc, term| {
                let s = &term.summands;
                for i in 0..s.len() {
                    for j in i..s.len() {
                        let key = monomial_key(s[i].x, s[j].x, s[i].y, s[j].y);
                        if shard_of(&key, shards) != shard {
                            continue;
                        }
                        // i < j covers both orders of the cross product
                        let weight = if i == j { 1 } else { 2 };
                        *acc.entry(key).or_insert(0) += weight * (s[i].sign * s[j].sign) as i64;
                    }
                }
                acc
            })
            .reduce(HashMap::new, |mut a, b| {
                for (k, v) in b {
                    *a.entry(k).or_insert(0) += v;
                }
                a
            });

        let mut expansion = expansion;
        let mut offenders: Vec<(MonomialKey, i64, i64)> = Vec::new();
        for &x in &a_words {
            for &y in &b_words {
                let key = (x, x, y, y);
                if shard_of(&key, shards) != shard {
                    continue;
                }
                let got = expansion.remove(&key).unwrap_or(0);
                if got != 1 {
                    offenders.push((key, got, 1));
                }
            }
        }
        offenders.extend(
            expansion
                .into_iter()
                .filter(|(_, v)| *v != 0)
                .map(|(k, v)| (k, v, 0)),
        );
        if let Some(first) = offenders.into_iter().min_by_key(|(k, _, _)| *k) {
            if worst.is_none_or(|w| first.0 < w.0) {
                worst = Some(first);
            }
        }
    }

    Ok(match worst {
        None => Verdict::Holds,
        Some((k, coefficient, expected)) => Verdict::Fails(MonomialWitness {
            a: (
                GroupElement::from_word(n, k.0),
                GroupElement::from_word(n, k.1),
            ),
            b: (
                GroupElement::from_word(n, k.2),
                GroupElement::from_word(n, k.3),
            ),
            coefficient,
            expected,
        }),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct NumericFailure {
    pub trial: usize,
    pub lhs: i128,
    pub rhs: i128,
}

/// Both sides of the identity at a point; `a_values` and `b_values` follow
/// the o-order of A and B.
pub fn evaluate_identity(
    identity: &SquareIdentity,
    a_values: &[i64],
    b_values: &[i64],
) -> (i128, i128) {
    Evaluator::new(identity).eval(a_values, b_values)
}

// Summands resolved to positions in the o-ordered value vectors; a word
// outside A or B contributes zero.
type ResolvedSummand = (i128, Option<usize>, Option<usize>);

struct Evaluator {
    ra: usize,
    rb: usize,
    terms: Vec<Vec<ResolvedSummand>>,
}

impl Evaluator {
    fn new(identity: &SquareIdentity) -> Self {
        let index = |set: &ElementSet| -> HashMap<u32, usize> {
            set.iter().enumerate().map(|(i, w)| (w, i)).collect()
        };
        let (a_of, b_of) = (index(&identity.a), index(&identity.b));
        let terms = identity
            .terms
            .iter()
            .map(|t| {
                t.summands
                    .iter()
                    .map(|s| {
                        (
                            s.sign as i128,
                            a_of.get(&s.x).copied(),
                            b_of.get(&s.y).copied(),
                        )
                    })
                    .collect()
            })
            .collect();
        Self {
            ra: identity.a.len(),
            rb: identity.b.len(),
            terms,
        }
    }

    fn eval(&self, a: &[i64], b: &[i64]) -> (i128, i128) {
        assert_eq!(a.len(), self.ra);
        assert_eq!(b.len(), self.rb);
        let norm = |vals: &[i64]| {
            vals.iter()
                .map(|&v| (v as i128) * (v as i128))
                .sum::<i128>()
        };
        let lhs = norm(a) * norm(b);
        let rhs = self
            .terms
            .iter()
            .map(|t| {
                let c: i128 = t
                    .iter()
                    .map(|&(sign, ia, ib)| match (ia, ib) {
                        (Some(i), Some(j)) => sign * a[i] as i128 * b[j] as i128,
                        _ => 0,
                    })
                    .sum();
                c * c
            })
            .sum();
        (lhs, rhs)
    }
}

/// Substitute uniform integers in [−9, 9] for all a_x, b_y and compare both
/// sides exactly; deterministic for a given seed.
pub fn verify_identity_numeric(
    identity: &SquareIdentity,
    trials: usize,
    seed: u64,
) -> Result<Verdict<NumericFailure>> {
    if trials == 0 {
        return Err(Error::InvalidParameters(
            "numeric verification needs at least one trial".into(),
        ));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let eval = Evaluator::new(identity);
    let mut a = vec![0i64; eval.ra];
    let mut b = vec![0i64; eval.rb];
    for trial in 0..trials {
        a.iter_mut().for_each(|v| *v = rng.random_range(-9..=9));
        b.iter_mut().for_each(|v| *v = rng.random_range(-9..=9));
        let (lhs, rhs) = eval.eval(&a, &b);
        if lhs != rhs {
            return Ok(Verdict::Fails(NumericFailure { trial, lhs, rhs }));
        }
    }
    Ok(Verdict::Holds)
}
