//! Set methods on multiplicative pairs: addition (utmost expansion),
//! subtraction, the duality predicate, and exhaustive searches.

use std::time::{Duration, Instant};

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::group::ElementSet;
use crate::pairing::{check_pair_criterion, test_function_word, Triple};
use crate::twist::TwistSpec;

/// B′ = B ∪ {y ∈ U \ B : A + y ⊆ A + B}.
///
/// One pass suffices: every added y keeps A + B′ = A + B, so later
/// candidates are tested against the same sumset.
pub fn expand_to_utmost(
    a: &ElementSet,
    b: &ElementSet,
    ambient: &ElementSet,
) -> Result<ElementSet> {
    if !b.is_subset(ambient)? {
        return Err(Error::NotSubset("B", "U"));
    }
    let sum = a.sumset(b)?;
    let a_words = a.words();
    let mut out = b.clone();
    for y in ambient.iter() {
        if !b.contains_word(y) && a_words.iter().all(|&x| sum.contains_word(x ^ y)) {
            out.insert_word(y);
        }
    }
    Ok(out)
}

/// B_new = B \ (A + C), with the realized triple [|A|, |B_new|, |A + B_new|].
pub fn method_subtraction(
    a: &ElementSet,
    b: &ElementSet,
    c: &ElementSet,
) -> Result<(ElementSet, Triple)> {
    if !c.is_subset(&a.sumset(b)?)? {
        return Err(Error::NotSubset("C", "A+B"));
    }
    let b_new = b.difference(&a.sumset(c)?)?;
    let third = a.sumset(&b_new)?.len();
    let triple = Triple(a.len(), b_new.len(), third);
    Ok((b_new, triple))
}

/// True iff A + z ⊄ A + B′ for every z ∉ B′.
pub fn dual_condition_holds(a: &ElementSet, b_prime: &ElementSet) -> Result<bool> {
    let sum = a.sumset(b_prime)?;
    let a_words = a.words();
    Ok(b_prime
        .complement()
        .iter()
        .all(|z| a_words.iter().any(|&x| !sum.contains_word(x ^ z))))
}

/// The set form of the same condition: A + (Z₂ⁿ \ (A + B′)) = Z₂ⁿ \ B′.
pub fn dual_condition_set_form(a: &ElementSet, b_prime: &ElementSet) -> Result<bool> {
    let outside = a.sumset(b_prime)?.complement();
    Ok(a.sumset(&outside)? == b_prime.complement())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchBudget {
    pub max_nodes: u64,
    pub time_limit: Option<Duration>,
    /// Candidates in o-order; otherwise shuffled by `seed`.
    pub deterministic: bool,
    pub seed: u64,
}

impl Default for SearchBudget {
    fn default() -> Self {
        Self {
            max_nodes: 50_000_000,
            time_limit: None,
            deterministic: true,
            seed: 0,
        }
    }
}

impl SearchBudget {
    pub fn with_nodes(max_nodes: u64) -> Self {
        Self {
            max_nodes,
            ..Self::default()
        }
    }

    fn validate(&self) -> Result<()> {
        if self.max_nodes == 0 || self.time_limit.is_some_and(|t| t.is_zero()) {
            return Err(Error::InvalidParameters(
                "search bounds must be positive".into(),
            ));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SearchOutcome<T> {
    Found(T),
    /// The whole space was searched without a hit.
    Exhausted,
    BudgetExceeded {
        nodes: u64,
    },
}

struct Meter {
    nodes: u64,
    max_nodes: u64,
    deadline: Option<Instant>,
}

impl Meter {
    fn new(budget: &SearchBudget) -> Self {
        Self {
            nodes: 0,
            max_nodes: budget.max_nodes,
            deadline: budget.time_limit.map(|t| Instant::now() + t),
        }
    }

    /// Count a node; false once the budget is spent.
    fn tick(&mut self) -> bool {
        self.nodes += 1;
        if self.nodes > self.max_nodes {
            return false;
        }
        !(self.nodes.is_multiple_of(4096) && self.deadline.is_some_and(|d| Instant::now() > d))
    }
}

fn candidate_order(n: u32, budget: &SearchBudget) -> Vec<u32> {
    let mut order: Vec<u32> = (0..1u32 << n).collect();
    if !budget.deterministic {
        order.shuffle(&mut ChaCha8Rng::seed_from_u64(budget.seed));
    }
    order
}

/// Largest n for which the c-graph adjacency is materialized.
pub const CLIQUE_MAX_DIM: u32 = 12;

type Bits = Vec<u64>;

fn bit(b: &Bits, i: usize) -> bool {
    b[i / 64] >> (i % 64) & 1 == 1
}

fn popcount(b: &Bits) -> u32 {
    b.iter().map(|w| w.count_ones()).sum()
}

struct Clique<'a> {
    adj: &'a [Bits],
    order: &'a [u32],
    target: usize,
    meter: Meter,
    chosen: Vec<usize>,
}

enum Step {
    Hit,
    Miss,
    OutOfBudget,
}

impl Clique<'_> {
    fn grow(&mut self, cand: &Bits) -> Step {
        if self.chosen.len() == self.target {
            return Step::Hit;
        }
        if self.chosen.len() + (popcount(cand) as usize) < self.target {
            return Step::Miss;
        }
        for (wi, &word) in cand.iter().enumerate() {
            let mut w = word;
            while w != 0 {
                let v = wi * 64 + w.trailing_zeros() as usize;
                w &= w - 1;
                if !self.meter.tick() {
                    return Step::OutOfBudget;
                }
                // later candidates only, so each clique is visited once
                let next: Bits = cand
                    .iter()
                    .zip(&self.adj[v])
                    .enumerate()
                    .map(|(j, (&c, &a))| {
                        let keep = match j.cmp(&wi) {
                            std::cmp::Ordering::Less => 0,
                            std::cmp::Ordering::Equal => w,
                            std::cmp::Ordering::Greater => u64::MAX,
                        };
                        c & a & keep
                    })
                    .collect();
                self.chosen.push(v);
                match self.grow(&next) {
                    Step::Miss => {
                        self.chosen.pop();
                    }
                    other => return other,
                }
            }
        }
        Step::Miss
    }
}

/// A set of `target` elements with c(x, t) = 1 for all distinct members,
/// found by branch-and-bound over the c-graph in candidate order.
pub fn search_clique(
    spec: &TwistSpec,
    target: usize,
    budget: &SearchBudget,
) -> Result<SearchOutcome<ElementSet>> {
    if !spec.is_linear_in_second() {
        return Err(Error::NotLinear);
    }
    budget.validate()?;
    let n = spec.n();
    if n > CLIQUE_MAX_DIM {
        return Err(Error::DimensionOutOfRange(n, CLIQUE_MAX_DIM));
    }
    let size = 1usize << n;
    if target > size {
        return Ok(SearchOutcome::Exhausted);
    }
    let order = candidate_order(n, budget);
    let blocks = size.div_ceil(64);
    // adjacency indexed by position in `order`
    let adj: Vec<Bits> = (0..size)
        .map(|i| {
            let mut row = vec![0u64; blocks];
            for j in 0..size {
                if i != j && test_function_word(spec, order[i], order[j]) == 1 {
                    row[j / 64] |= 1 << (j % 64);
                }
            }
            row
        })
        .collect();
    let mut all = vec![u64::MAX; blocks];
    if !size.is_multiple_of(64) {
        all[blocks - 1] = (1u64 << (size % 64)) - 1;
    }
    let mut search = Clique {
        adj: &adj,
        order: &order,
        target,
        meter: Meter::new(budget),
        chosen: Vec::new(),
    };
    Ok(match search.grow(&all) {
        Step::Hit => {
            debug_assert!(search
                .chosen
                .iter()
                .all(|&i| search.chosen.iter().all(|&j| i == j || bit(&adj[i], j))));
            let words = search.chosen.iter().map(|&i| search.order[i]);
            SearchOutcome::Found(ElementSet::from_words(n, words)?)
        }
        Step::Miss => SearchOutcome::Exhausted,
        Step::OutOfBudget => SearchOutcome::BudgetExceeded {
            nodes: search.meter.nodes,
        },
    })
}

/// Largest n accepted by [`search_pair_exhaustive`].
pub const PAIR_SEARCH_MAX_DIM: u32 = 4;

struct PairSearch<'a> {
    spec: &'a TwistSpec,
    order: Vec<u32>,
    r: usize,
    s: usize,
    total: usize,
    meter: Meter,
    a: Vec<u32>,
    b: Vec<u32>,
    in_b: Vec<bool>,
    // multiplicity of each word in A + B
    cover: Vec<u32>,
    covered: usize,
}

impl PairSearch<'_> {
    fn f(&self, x: u32, y: u32) -> u32 {
        self.spec.exponent_word(x, y)
    }

    /// Criterion terms that involve y as one of the two B elements.
    fn compatible(&self, y: u32) -> bool {
        for (i, &x) in self.a.iter().enumerate() {
            for &t in &self.a[i + 1..] {
                let y2 = x ^ t ^ y;
                if (self.in_b[y2 as usize] || y2 == y)
                    && self.f(x, y) ^ self.f(t, y) ^ self.f(x, y2) ^ self.f(t, y2) != 1
                {
                    return false;
                }
            }
        }
        true
    }

    fn push_b(&mut self, y: u32) {
        self.b.push(y);
        self.in_b[y as usize] = true;
        for &x in &self.a {
            let z = (x ^ y) as usize;
            if self.cover[z] == 0 {
                self.covered += 1;
            }
            self.cover[z] += 1;
        }
    }

    fn pop_b(&mut self) {
        let y = self.b.pop().expect("non-empty");
        self.in_b[y as usize] = false;
        for &x in &self.a {
            let z = (x ^ y) as usize;
            self.cover[z] -= 1;
            if self.cover[z] == 0 {
                self.covered -= 1;
            }
        }
    }

    fn grow_b(&mut self, from: usize) -> Option<bool> {
        if self.b.len() == self.s {
            return Some(self.covered == self.total);
        }
        let size = self.order.len();
        for p in from..size {
            if size - p < self.s - self.b.len() {
                break;
            }
            if !self.meter.tick() {
                return None;
            }
            let y = self.order[p];
            if !self.compatible(y) {
                continue;
            }
            self.push_b(y);
            if self.covered <= self.total {
                match self.grow_b(p + 1) {
                    Some(true) => return Some(true),
                    None => return None,
                    Some(false) => {}
                }
            }
            self.pop_b();
        }
        Some(false)
    }

    fn grow_a(&mut self, from: usize) -> Option<bool> {
        if self.a.len() == self.r {
            return self.grow_b(0);
        }
        let size = self.order.len();
        for p in from..size {
            if size - p < self.r - self.a.len() {
                break;
            }
            if !self.meter.tick() {
                return None;
            }
            self.a.push(self.order[p]);
            match self.grow_a(p + 1) {
                Some(false) => {}
                other => return other,
            }
            self.a.pop();
        }
        Some(false)
    }
}

/// A multiplicative pair (A, B) with |A| = r, |B| = s and |A + B| = N.
///
/// A is enumerated as r-subsets in candidate order; for each A, B is grown
/// one element at a time with the criterion checked incrementally and the
/// branch cut once the sumset exceeds N.
pub fn search_pair_exhaustive(
    spec: &TwistSpec,
    r: usize,
    s: usize,
    total: usize,
    budget: &SearchBudget,
) -> Result<SearchOutcome<(ElementSet, ElementSet)>> {
    budget.validate()?;
    let n = spec.n();
    if n > PAIR_SEARCH_MAX_DIM {
        return Err(Error::DimensionOutOfRange(n, PAIR_SEARCH_MAX_DIM));
    }
    let size = 1usize << n;
    if r == 0 || s == 0 || r > size || s > size || total < r.max(s) || total > size {
        return Ok(SearchOutcome::Exhausted);
    }
    let mut search = PairSearch {
        spec,
        order: candidate_order(n, budget),
        r,
        s,
        total,
        meter: Meter::new(budget),
        a: Vec::with_capacity(r),
        b: Vec::with_capacity(s),
        in_b: vec![false; size],
        cover: vec![0; size],
        covered: 0,
    };
    Ok(match search.grow_a(0) {
        Some(true) => {
            let a = ElementSet::from_words(n, search.a.iter().copied())?;
            let b = ElementSet::from_words(n, search.b.iter().copied())?;
            debug_assert!(check_pair_criterion(spec, &a, &b)?.holds());
            SearchOutcome::Found((a, b))
        }
        Some(false) => SearchOutcome::Exhausted,
        None => SearchOutcome::BudgetExceeded {
            nodes: search.meter.nodes,
        },
    })
}
