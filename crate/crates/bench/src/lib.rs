//! Fixed inputs shared by the kernel benchmarks.

use hurwitz_core::constructions::{hurwitz_radon_pair, yuzvinsky_pair};
use hurwitz_core::{Construction, ElementSet};

/// (H, Z₂ⁿ) in P(4); H is the Hurwitz set of size ρ(2ⁿ).
pub fn hurwitz_radon(n: u32) -> Construction {
    hurwitz_radon_pair(n).expect("valid dimension")
}

pub fn yuzvinsky(n: u32) -> Construction {
    yuzvinsky_pair(n).expect("n ≢ 3 mod 4")
}

/// A deterministic pseudo-random subset of about half of Z₂ⁿ.
pub fn scattered_set(n: u32, salt: u32) -> ElementSet {
    ElementSet::from_predicate(n, |w| {
        (w.wrapping_mul(0x9e37_79b9) ^ salt)
            .count_ones()
            .is_multiple_of(2)
    })
    .expect("valid dimension")
}
