//! Elements of Z₂ⁿ and dense subsets of it.
//!
//! An element is stored as an `n`-bit word whose most significant bit is the
//! first coordinate x₁, so the integer value of the word is `o(x) − 1` where
//! `o` is the lexicographic position used throughout the tables of H-sets.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{json_error, Error, Result};

/// Largest supported dimension for single elements.
pub const MAX_DIM: u32 = 30;

/// Default cap on `n` for anything that materializes 2ⁿ bits.
pub const DEFAULT_DENSE_LIMIT: u32 = 16;

#[inline]
pub(crate) fn mask(n: u32) -> u32 {
    if n == 0 {
        0
    } else {
        u32::MAX >> (32 - n)
    }
}

/// Single-coordinate word for 1-based coordinate `i` in dimension `n`.
#[inline]
pub(crate) fn unit(n: u32, i: u32) -> u32 {
    1 << (n - i)
}

pub(crate) fn check_dim(n: u32, limit: u32) -> Result<()> {
    if n > limit {
        Err(Error::DimensionOutOfRange(n, limit))
    } else {
        Ok(())
    }
}

/// Hurwitz–Radon number ρ(2ⁿ) = 8α + 2^β where n = 4α + β, 0 ≤ β ≤ 3.
pub fn rho(n: u32) -> u32 {
    8 * (n / 4) + (1 << (n % 4))
}

/// Binomial coefficient as an exact integer (0 when `k > n`).
pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc as u64
}

/// Named vectors e₀, ē₀, eᵢ and ēᵢ = ē₀ + eᵢ.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Basis {
    E0,
    EBar0,
    E(u32),
    EBar(u32),
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupElement {
    n: u32,
    bits: u32,
}

impl GroupElement {
    pub fn new(n: u32, bits: u32) -> Result<Self> {
        check_dim(n, MAX_DIM)?;
        if bits & !mask(n) != 0 {
            return Err(Error::WordOutOfRange {
                n,
                bits: bits as u64,
            });
        }
        Ok(Self { n, bits })
    }

    pub(crate) fn from_word(n: u32, bits: u32) -> Self {
        debug_assert!(bits & !mask(n) == 0);
        Self { n, bits }
    }

    pub fn zero(n: u32) -> Result<Self> {
        Self::new(n, 0)
    }

    /// Inverse of [`order_index`](Self::order_index).
    pub fn from_order_index(n: u32, o: u64) -> Result<Self> {
        check_dim(n, MAX_DIM)?;
        if o == 0 || o > 1u64 << n {
            return Err(Error::WordOutOfRange {
                n,
                bits: o.wrapping_sub(1),
            });
        }
        Self::new(n, (o - 1) as u32)
    }

    /// Build from the tuple (x₁, …, xₙ).
    pub fn from_coords(coords: &[u8]) -> Result<Self> {
        let n = coords.len() as u32;
        check_dim(n, MAX_DIM)?;
        let mut bits = 0u32;
        for (i, &c) in coords.iter().enumerate() {
            match c {
                0 => {}
                1 => bits |= 1 << (n - 1 - i as u32),
                _ => {
                    return Err(Error::Parse {
                        position: format!("coordinate {}", i + 1),
                        message: format!("expected 0 or 1, got {c}"),
                    })
                }
            }
        }
        Ok(Self { n, bits })
    }

    pub fn basis(n: u32, kind: Basis) -> Result<Self> {
        check_dim(n, MAX_DIM)?;
        let check = |i: u32| {
            if i == 0 || i > n {
                Err(Error::IndexOutOfRange { n, index: i })
            } else {
                Ok(i)
            }
        };
        let bits = match kind {
            Basis::E0 => 0,
            Basis::EBar0 => mask(n),
            Basis::E(i) => unit(n, check(i)?),
            Basis::EBar(i) => mask(n) ^ unit(n, check(i)?),
        };
        Ok(Self { n, bits })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn bits(&self) -> u32 {
        self.bits
    }

    /// o(x) = 1 + Σ xᵢ·2^(n−i).
    pub fn order_index(&self) -> u64 {
        self.bits as u64 + 1
    }

    pub fn weight(&self) -> u32 {
        self.bits.count_ones()
    }

    /// Coordinate xᵢ for 1-based `i`.
    pub fn coord(&self, i: u32) -> Result<u8> {
        if i == 0 || i > self.n {
            return Err(Error::IndexOutOfRange {
                n: self.n,
                index: i,
            });
        }
        Ok(((self.bits >> (self.n - i)) & 1) as u8)
    }

    pub fn coords(&self) -> Vec<u8> {
        (1..=self.n)
            .map(|i| ((self.bits >> (self.n - i)) & 1) as u8)
            .collect()
    }

    #[allow(clippy::should_implement_trait)]
    pub fn add(self, other: Self) -> Result<Self> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch(self.n, other.n));
        }
        Ok(Self {
            n: self.n,
            bits: self.bits ^ other.bits,
        })
    }

    /// Parse a tuple string such as `"0100011"`; the length fixes `n`.
    pub fn parse_tuple(s: &str) -> Result<Self> {
        let n = s.len() as u32;
        check_dim(n, MAX_DIM)?;
        let mut bits = 0u32;
        for (i, ch) in s.chars().enumerate() {
            bits <<= 1;
            match ch {
                '0' => {}
                '1' => bits |= 1,
                other => {
                    return Err(Error::Parse {
                        position: format!("character {}", i + 1),
                        message: format!("expected '0' or '1', got {other:?}"),
                    })
                }
            }
        }
        Ok(Self { n, bits })
    }
}

pub(crate) fn word_string(n: u32, bits: u32) -> String {
    (1..=n)
        .map(|i| if (bits >> (n - i)) & 1 == 1 { '1' } else { '0' })
        .collect()
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&word_string(self.n, self.bits))
    }
}

impl fmt::Debug for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self)
    }
}

impl FromStr for GroupElement {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::parse_tuple(s)
    }
}

// XOR-translation of bit positions inside one 64-bit word: bit i moves to
// bit i ^ (1 << b) for the swap at level b.
const SWAP_MASKS: [u64; 6] = [
    0x5555_5555_5555_5555,
    0x3333_3333_3333_3333,
    0x0f0f_0f0f_0f0f_0f0f,
    0x00ff_00ff_00ff_00ff,
    0x0000_ffff_0000_ffff,
    0x0000_0000_ffff_ffff,
];

#[inline]
fn permute_word(mut w: u64, lo: u32) -> u64 {
    for (b, &m) in SWAP_MASKS.iter().enumerate() {
        if lo >> b & 1 == 1 {
            let s = 1u32 << b;
            w = ((w & m) << s) | ((w >> s) & m);
        }
    }
    w
}

/// A subset of Z₂ⁿ stored as a bitset of length 2ⁿ, indexed by `o(x) − 1`.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "SetJson", into = "SetJson")]
pub struct ElementSet {
    n: u32,
    words: Vec<u64>,
}

impl ElementSet {
    pub fn empty(n: u32) -> Result<Self> {
        Self::empty_with_limit(n, DEFAULT_DENSE_LIMIT)
    }

    pub fn empty_with_limit(n: u32, limit: u32) -> Result<Self> {
        check_dim(n, limit.min(MAX_DIM))?;
        Ok(Self::blank(n))
    }

    pub(crate) fn blank(n: u32) -> Self {
        let len = (1usize << n).div_ceil(64);
        Self {
            n,
            words: vec![0; len],
        }
    }

    pub fn full(n: u32) -> Result<Self> {
        let mut s = Self::empty(n)?;
        s.fill();
        Ok(s)
    }

    fn fill(&mut self) {
        let size = 1usize << self.n;
        for w in self.words.iter_mut() {
            *w = u64::MAX;
        }
        if size < 64 {
            self.words[0] = (1u64 << size) - 1;
        }
    }

    pub fn from_elements<I>(n: u32, elements: I) -> Result<Self>
    where
        I: IntoIterator<Item = GroupElement>,
    {
        let mut s = Self::empty(n)?;
        for x in elements {
            if x.n() != n {
                return Err(Error::DimensionMismatch(n, x.n()));
            }
            s.insert_word(x.bits());
        }
        Ok(s)
    }

    pub fn from_words<I>(n: u32, words: I) -> Result<Self>
    where
        I: IntoIterator<Item = u32>,
    {
        let mut s = Self::empty(n)?;
        for w in words {
            if w & !mask(n) != 0 {
                return Err(Error::WordOutOfRange { n, bits: w as u64 });
            }
            s.insert_word(w);
        }
        Ok(s)
    }

    /// Build from a membership predicate evaluated on every word.
    pub fn from_predicate(n: u32, pred: impl Fn(u32) -> bool) -> Result<Self> {
        let mut s = Self::empty(n)?;
        for w in 0..(1u32 << n) {
            if pred(w) {
                s.insert_word(w);
            }
        }
        Ok(s)
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    /// Cardinality.
    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    #[inline]
    pub fn contains_word(&self, w: u32) -> bool {
        let w = w as usize;
        self.words[w >> 6] >> (w & 63) & 1 == 1
    }

    pub fn contains(&self, x: &GroupElement) -> bool {
        x.n() == self.n && self.contains_word(x.bits())
    }

    #[inline]
    pub(crate) fn insert_word(&mut self, w: u32) {
        let w = w as usize;
        self.words[w >> 6] |= 1 << (w & 63);
    }

    pub fn insert(&mut self, x: GroupElement) -> Result<()> {
        if x.n() != self.n {
            return Err(Error::DimensionMismatch(self.n, x.n()));
        }
        self.insert_word(x.bits());
        Ok(())
    }

    /// Member words in ascending o-order.
    pub fn iter(&self) -> impl Iterator<Item = u32> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &word)| {
            let mut w = word;
            std::iter::from_fn(move || {
                if w == 0 {
                    None
                } else {
                    let b = w.trailing_zeros();
                    w &= w - 1;
                    Some((i as u32) * 64 + b)
                }
            })
        })
    }

    pub fn words(&self) -> Vec<u32> {
        self.iter().collect()
    }

    pub fn elements(&self) -> Vec<GroupElement> {
        self.iter()
            .map(|w| GroupElement::from_word(self.n, w))
            .collect()
    }

    fn same_dim(&self, other: &Self) -> Result<()> {
        if self.n != other.n {
            Err(Error::DimensionMismatch(self.n, other.n))
        } else {
            Ok(())
        }
    }

    fn zip_with(&self, other: &Self, op: impl Fn(u64, u64) -> u64) -> Result<Self> {
        self.same_dim(other)?;
        let words = self
            .words
            .iter()
            .zip(&other.words)
            .map(|(&a, &b)| op(a, b))
            .collect();
        Ok(Self { n: self.n, words })
    }

    pub fn union(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, |a, b| a | b)
    }

    pub fn intersection(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, |a, b| a & b)
    }

    pub fn difference(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, |a, b| a & !b)
    }

    pub fn complement(&self) -> Self {
        let mut full = Self::blank(self.n);
        full.fill();
        let words = full
            .words
            .iter()
            .zip(&self.words)
            .map(|(&f, &w)| f & !w)
            .collect();
        Self { n: self.n, words }
    }

    pub fn is_subset(&self, other: &Self) -> Result<bool> {
        self.same_dim(other)?;
        Ok(self
            .words
            .iter()
            .zip(&other.words)
            .all(|(&a, &b)| a & !b == 0))
    }

    pub fn is_disjoint(&self, other: &Self) -> Result<bool> {
        self.same_dim(other)?;
        Ok(self
            .words
            .iter()
            .zip(&other.words)
            .all(|(&a, &b)| a & b == 0))
    }

    /// The coset a + S.
    pub fn translate_word(&self, a: u32) -> Self {
        let mut out = Self::blank(self.n);
        self.translate_into(a, &mut out);
        out
    }

    pub fn translate(&self, a: &GroupElement) -> Result<Self> {
        if a.n() != self.n {
            return Err(Error::DimensionMismatch(self.n, a.n()));
        }
        Ok(self.translate_word(a.bits()))
    }

    /// ORs a + S into `out`.
    fn translate_into(&self, a: u32, out: &mut Self) {
        let hi = (a >> 6) as usize;
        let lo = a & 63;
        for (j, &w) in self.words.iter().enumerate() {
            if w != 0 {
                out.words[j ^ hi] |= permute_word(w, lo);
            }
        }
    }

    /// {a + b | a ∈ self, b ∈ other}.
    pub fn sumset(&self, other: &Self) -> Result<Self> {
        self.same_dim(other)?;
        let (small, large) = if self.len() <= other.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut out = Self::blank(self.n);
        for a in small.iter() {
            large.translate_into(a, &mut out);
        }
        Ok(out)
    }
}

impl fmt::Debug for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set()
            .entries(self.iter().map(|w| word_string(self.n, w)))
            .finish()
    }
}

/// Wire form of [`ElementSet`]: `{"n":7,"elements":["0000000",...]}`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SetJson {
    pub n: u32,
    pub elements: Vec<String>,
}

pub(crate) fn parse_word(n: u32, s: &str, position: impl Fn() -> String) -> Result<u32> {
    if s.chars().count() != n as usize {
        return Err(Error::Parse {
            position: position(),
            message: format!("expected {n} characters, got {}", s.chars().count()),
        });
    }
    GroupElement::parse_tuple(s)
        .map(|x| x.bits())
        .map_err(|e| match e {
            Error::Parse {
                position: p,
                message,
            } => Error::Parse {
                position: format!("{} {}", position(), p),
                message,
            },
            other => other,
        })
}

impl TryFrom<SetJson> for ElementSet {
    type Error = Error;

    fn try_from(value: SetJson) -> Result<Self> {
        let mut set = ElementSet::empty(value.n)?;
        for (i, s) in value.elements.iter().enumerate() {
            let w = parse_word(value.n, s, || format!("elements[{i}]"))?;
            set.insert_word(w);
        }
        Ok(set)
    }
}

impl From<ElementSet> for SetJson {
    fn from(set: ElementSet) -> Self {
        SetJson {
            n: set.n,
            elements: set.iter().map(|w| word_string(set.n, w)).collect(),
        }
    }
}

impl ElementSet {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("set serialization is infallible")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str::<SetJson>(s)
            .map_err(json_error)?
            .try_into()
    }
}
