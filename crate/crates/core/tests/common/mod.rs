//! Reference implementations for tests, written against coordinate tuples
//! rather than the word-level kernels of the library.

// index loops mirror the coordinate definitions
#![allow(dead_code, clippy::needless_range_loop)]

use std::collections::BTreeMap;

use hurwitz_core::{ElementSet, Family, TwistSpec};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Coordinates (x₁, …, x_n) of a word, x₁ first.
pub fn coords(n: u32, w: u32) -> Vec<u8> {
    (1..=n).map(|i| ((w >> (n - i)) & 1) as u8).collect()
}

/// All strictly increasing index tuples of length `len` drawn from `pool`.
fn increasing_tuples(pool: &[usize], len: usize) -> Vec<Vec<usize>> {
    if len == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for (p, &i) in pool.iter().enumerate() {
        for mut rest in increasing_tuples(&pool[p + 1..], len - 1) {
            rest.insert(0, i);
            out.push(rest);
        }
    }
    out
}

/// f_m by direct enumeration of the defining index tuples.
pub fn f_tuple(m: u32, x: &[u8], y: &[u8]) -> u8 {
    let n = x.len();
    let mut acc = 0u8;
    match m {
        1 => (0..n).for_each(|i| acc ^= x[i] & y[i]),
        2 => {
            for i in 0..n {
                for j in i + 1..n {
                    acc ^= x[i] & y[j];
                }
            }
        }
        _ => {
            for l in 0..n {
                if y[l] == 0 {
                    continue;
                }
                let pool: Vec<usize> = (0..n).filter(|&i| i != l).collect();
                for t in increasing_tuples(&pool, m as usize - 1) {
                    acc ^= t.iter().fold(1, |p, &i| p & x[i]);
                }
            }
        }
    }
    acc
}

/// Unperturbed family exponent from coordinate tuples.
pub fn family_tuple(family: Family, x: &[u8], y: &[u8]) -> u8 {
    let n = x.len() as u32;
    let oct = |x: &[u8], y: &[u8]| f_tuple(1, x, y) ^ f_tuple(2, x, y) ^ f_tuple(3, x, y);
    match family {
        Family::Clifford => f_tuple(1, x, y) ^ f_tuple(2, x, y),
        Family::Octonion => oct(x, y),
        Family::P { m } => oct(x, y) ^ if m <= n { f_tuple(m, x, y) } else { 0 },
        Family::Sedenion => {
            let mut extra = 0;
            for i in 0..3 {
                for j in 0..3 {
                    for k in j + 1..3 {
                        if i != j && i != k {
                            extra ^= x[i] & y[j] & y[k] & x[3];
                        }
                    }
                }
            }
            oct(x, y) ^ f_tuple(4, x, y) ^ extra
        }
    }
}

/// Exponent of a (possibly perturbed) spec: family from tuples, then the
/// row shifts.
pub fn spec_tuple(spec: &TwistSpec, x: u32, y: u32) -> u8 {
    let n = spec.n();
    let mut e = family_tuple(spec.family(), &coords(n, x), &coords(n, y));
    for (row, delta) in spec.perturbations() {
        if row.bits() == x && delta.contains_word(y) {
            e ^= 1;
        }
    }
    e
}

/// Expands (Σ a_x²)(Σ b_y²) − Σ_z c_z² into monomials over an ordered
/// key and reports whether everything cancels. Deliberately naive.
pub fn naive_identity_holds(spec: &TwistSpec, a: &[u32], b: &[u32]) -> bool {
    let mut poly: BTreeMap<(u32, u32, u32, u32), i64> = BTreeMap::new();
    for &x in a {
        for &y in b {
            *poly.entry((x, x, y, y)).or_default() += 1;
        }
    }
    let mut outcomes: BTreeMap<u32, Vec<(i64, u32, u32)>> = BTreeMap::new();
    for &x in a {
        for &y in b {
            let sign = if spec_tuple(spec, x, y) == 0 { 1 } else { -1 };
            outcomes.entry(x ^ y).or_default().push((sign, x, y));
        }
    }
    for terms in outcomes.values() {
        for &(s1, x1, y1) in terms {
            for &(s2, x2, y2) in terms {
                let key = (x1.min(x2), x1.max(x2), y1.min(y2), y1.max(y2));
                *poly.entry(key).or_default() -= s1 * s2;
            }
        }
    }
    poly.values().all(|&c| c == 0)
}

pub fn subset_from_mask(n: u32, bits: u64) -> ElementSet {
    ElementSet::from_words(n, (0..1u32 << n).filter(|&w| bits >> w & 1 == 1)).unwrap()
}

pub fn random_subset(n: u32, rng: &mut impl Rng) -> ElementSet {
    let p: f64 = rng.random_range(0.05..0.95);
    let words: Vec<u32> = (0..1u32 << n).filter(|_| rng.random_bool(p)).collect();
    ElementSet::from_words(n, words).unwrap()
}

/// A seeded spec: a random family valid at n, optionally with random rows.
pub fn random_spec(n: u32, rng: &mut ChaCha8Rng, perturb: bool) -> TwistSpec {
    let mut families = vec![Family::Clifford, Family::Octonion];
    if n >= 4 {
        families.push(Family::P {
            m: rng.random_range(4..=n),
        });
    }
    if n == 4 {
        families.push(Family::Sedenion);
    }
    let family = families[rng.random_range(0..families.len())];
    let spec = TwistSpec::new(n, family).unwrap();
    if !perturb {
        return spec;
    }
    let rows: Vec<u32> = (0..1u32 << n).filter(|_| rng.random_bool(0.3)).collect();
    let perturbations = rows.into_iter().map(|r| {
        let d = ElementSet::from_words(n, (0..1u32 << n).filter(|_| rng.random_bool(0.5))).unwrap();
        (hurwitz_core::GroupElement::new(n, r).unwrap(), d)
    });
    spec.perturb(perturbations.collect::<Vec<_>>()).unwrap()
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}
