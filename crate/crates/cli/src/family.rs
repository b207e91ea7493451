//! Family names on the command line, parameter sweeps and dispatch to the
//! constructions.

use std::ops::RangeInclusive;

use anyhow::{bail, Result};
use clap::ValueEnum;
use hurwitz_core::constructions::{
    addition_family, addition_family_max_k, hurwitz_radon_pair, lmgo_augmented, lmgo_dual,
    lmgo_pair, special_n4, special_n7, yuzvinsky_pair,
};
use hurwitz_core::{Construction, FamilyId, Method, SearchBudget};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FamilyName {
    HurwitzRadon,
    Yuzvinsky,
    Lmgo,
    LmgoDual,
    LmgoAugmented,
    Addition,
    SpecialN4,
    SpecialN7,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    Addition,
    Subtraction,
}

impl From<MethodArg> for Method {
    fn from(m: MethodArg) -> Self {
        match m {
            MethodArg::Addition => Method::Addition,
            MethodArg::Subtraction => Method::Subtraction,
        }
    }
}

/// Optional family parameters; a missing one is swept in `triples` and
/// required in `identity`.
#[derive(Debug, Clone, Copy, Default)]
pub struct Params {
    pub l: Option<u32>,
    pub k: Option<u32>,
    pub s: Option<u32>,
    pub method: Option<MethodArg>,
}

fn need(v: Option<u32>, flag: &str, family: FamilyName) -> Result<u32> {
    match v {
        Some(v) => Ok(v),
        None => bail!("--{flag} is required for --family {}", family_flag(family)),
    }
}

fn family_flag(f: FamilyName) -> String {
    f.to_possible_value()
        .map(|v| v.get_name().to_string())
        .unwrap_or_default()
}

/// The single parameter point named on the command line.
pub fn family_id(family: FamilyName, n: Option<u32>, p: &Params) -> Result<FamilyId> {
    let n_req = || need(n, "n", family);
    Ok(match family {
        FamilyName::HurwitzRadon => FamilyId::HurwitzRadon { n: n_req()? },
        FamilyName::Yuzvinsky => FamilyId::yuzvinsky(n_req()?)?,
        FamilyName::Lmgo => FamilyId::Lmgo {
            n: n_req()?,
            l: need(p.l, "l", family)?,
            k: need(p.k, "k", family)?,
        },
        FamilyName::LmgoDual => FamilyId::LmgoDual {
            n: n_req()?,
            l: need(p.l, "l", family)?,
            k: need(p.k, "k", family)?,
        },
        FamilyName::LmgoAugmented => FamilyId::LmgoAugmented {
            n: n_req()?,
            l: need(p.l, "l", family)?,
            k: need(p.k, "k", family)?,
        },
        FamilyName::Addition => FamilyId::AdditionFamily {
            n: n_req()?,
            k: need(p.k, "k", family)?,
        },
        FamilyName::SpecialN4 => FamilyId::SpecialN4 {
            s: need(p.s, "s", family)?,
        },
        FamilyName::SpecialN7 => FamilyId::SpecialN7 {
            l: need(p.l, "l", family)?,
            k: need(p.k, "k", family)?,
            method: p.method.unwrap_or(MethodArg::Addition).into(),
        },
    })
}

fn lk_points(n: u32, p: &Params) -> Vec<(u32, u32)> {
    (2..=n)
        .flat_map(|k| (1..k).map(move |l| (l, k)))
        .filter(|&(l, k)| p.l.is_none_or(|v| v == l) && p.k.is_none_or(|v| v == k))
        .collect()
}

/// Every valid parameter point of the family with n in `range`; fixed
/// parameters restrict the sweep.
pub fn sweep(family: FamilyName, range: RangeInclusive<u32>, p: &Params) -> Vec<FamilyId> {
    let mut out = Vec::new();
    for n in range {
        match family {
            FamilyName::HurwitzRadon => out.push(FamilyId::HurwitzRadon { n }),
            FamilyName::Yuzvinsky => {
                if n >= 4 {
                    out.extend(FamilyId::yuzvinsky(n).ok());
                }
            }
            FamilyName::Lmgo | FamilyName::LmgoDual if n >= 4 => {
                for (l, k) in lk_points(n, p) {
                    out.push(if family == FamilyName::Lmgo {
                        FamilyId::Lmgo { n, l, k }
                    } else {
                        FamilyId::LmgoDual { n, l, k }
                    });
                }
            }
            FamilyName::LmgoAugmented if n >= 8 && n % 4 == 0 => {
                out.extend(
                    lk_points(n, p)
                        .into_iter()
                        .map(|(l, k)| FamilyId::LmgoAugmented { n, l, k }),
                );
            }
            FamilyName::Addition => {
                if let Ok(max_k) = addition_family_max_k(n) {
                    let ks = (0..=max_k).filter(|&k| p.k.is_none_or(|v| v == k));
                    out.extend(ks.map(|k| FamilyId::AdditionFamily { n, k }));
                }
            }
            FamilyName::SpecialN4 if n == 4 => {
                let ss = (1..=7).filter(|&s| p.s.is_none_or(|v| v == s));
                out.extend(ss.map(|s| FamilyId::SpecialN4 { s }));
            }
            FamilyName::SpecialN7 if n == 7 => {
                let methods: Vec<Method> = match p.method {
                    Some(m) => vec![m.into()],
                    None => vec![Method::Addition, Method::Subtraction],
                };
                for (l, k) in lk_points(7, p) {
                    for &method in &methods {
                        out.push(FamilyId::SpecialN7 { l, k, method });
                    }
                }
            }
            _ => {}
        }
    }
    out
}

pub fn construct(id: FamilyId, budget: &SearchBudget) -> hurwitz_core::Result<Construction> {
    match id {
        FamilyId::HurwitzRadon { n } => hurwitz_radon_pair(n),
        FamilyId::YuzvinskyMod0 { n }
        | FamilyId::YuzvinskyMod1 { n }
        | FamilyId::YuzvinskyMod2 { n } => yuzvinsky_pair(n),
        FamilyId::Lmgo { n, l, k } => lmgo_pair(n, l, k),
        FamilyId::LmgoDual { n, l, k } => lmgo_dual(n, l, k),
        FamilyId::LmgoAugmented { n, l, k } => lmgo_augmented(n, l, k),
        FamilyId::AdditionFamily { n, k } => addition_family(n, k),
        FamilyId::SpecialN4 { s } => special_n4(s, budget),
        FamilyId::SpecialN7 { l, k, method } => {
            let (add, sub) = special_n7(l, k)?;
            Ok(match method {
                Method::Addition => add,
                Method::Subtraction => sub,
            })
        }
    }
}

/// `a..b`, `a..=b` (both inclusive) or a single `a`.
pub fn parse_range(s: &str) -> Result<RangeInclusive<u32>> {
    let parse = |t: &str| {
        t.trim()
            .parse::<u32>()
            .map_err(|e| anyhow::anyhow!("bad bound {t:?} in range {s:?}: {e}"))
    };
    let (lo, hi) = match s.split_once("..") {
        Some((a, b)) => (parse(a)?, parse(b.strip_prefix('=').unwrap_or(b))?),
        None => {
            let v = parse(s)?;
            (v, v)
        }
    };
    if lo > hi {
        bail!("empty range {s:?}");
    }
    Ok(lo..=hi)
}
