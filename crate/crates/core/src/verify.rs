//! Identity-sweep verification: every structural fact the crate claims about
//! Möbius values, chain counts, counting numbers, and Chebyshev coefficients,
//! checked instance by instance over finite parameter ranges.
//!
//! Each check produces a [`CheckResult`] with an instance count and a list of
//! concrete failures (never a panic); [`run_verification`] assembles a
//! [`VerificationReport`]. The headline check is `main-theorem`:
//! `μ(a_1^m, c^n)` — computed purely by interval enumeration — equals the
//! coefficient of `X^(n-m)` in the generalized Chebyshev polynomial
//! `T_(m+n)`, computed purely by polynomial arithmetic. The two sides share
//! no code, which is the point.
//!
//! Sweep bounds: most checks run up to `max_n`. The combinatorially
//! explosive ones are clamped to the ranges they are tractable and
//! meaningful at (`engine-agreement` and `type-invariance` to `n <= 4`;
//! `boolean-interval`, `mobpat-vanishing`, the `M` identities, and `t-closed`
//! to `n <= 5`), and a few are floored so that no enabled check can run
//! vacuously (`relation` and `c-eq` need `n >= 2`, `mobpat-vanishing` needs
//! `n >= 3`, `t-recurrence` always sweeps to at least `l = 10`).

use std::fmt;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_traits::Zero;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::chebyshev::{chebyshev_closed_form, chebyshev_recurrence, classical_first_kind};
use crate::counting::{
    alternating_sum_m, chain_t_closed, count_m_bruteforce, count_m_iterated, count_m_recurrence,
    word_type, words_of_type, WordType,
};
use crate::error::Error;
use crate::interval::{boolean_rank_check, Interval};
use crate::mobius::{hall_from, mob_pat, mobius_from, mobius_recursive, MobiusCache};
use crate::words::{GroundPoset, Letter, Word};

/// Serialize integers as decimal strings (and read them back), so report
/// consumers never face precision limits.
pub mod decimal_string {
    use std::fmt::Display;
    use std::str::FromStr;

    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<T, S>(value: &T, serializer: S) -> Result<S::Ok, S::Error>
    where
        T: Display,
        S: Serializer,
    {
        serializer.collect_str(value)
    }

    pub fn deserialize<'de, T, D>(deserializer: D) -> Result<T, D::Error>
    where
        T: FromStr,
        T::Err: Display,
        D: Deserializer<'de>,
    {
        let text = String::deserialize(deserializer)?;
        text.parse().map_err(serde::de::Error::custom)
    }
}

/// The individual verification sweeps, in canonical report order.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CheckKind {
    GoldenBase,
    MainTheorem,
    ConjectureS2,
    EmptyWord,
    Relation,
    Relation2,
    CEq,
    Reduction,
    EngineAgreement,
    BooleanInterval,
    TypeInvariance,
    MobPatVanishing,
    MRecurrence,
    MIterated,
    AlternatingSum,
    TClosed,
    TRecurrence,
}

impl CheckKind {
    pub fn all() -> &'static [CheckKind] {
        use CheckKind::*;
        &[
            GoldenBase,
            MainTheorem,
            ConjectureS2,
            EmptyWord,
            Relation,
            Relation2,
            CEq,
            Reduction,
            EngineAgreement,
            BooleanInterval,
            TypeInvariance,
            MobPatVanishing,
            MRecurrence,
            MIterated,
            AlternatingSum,
            TClosed,
            TRecurrence,
        ]
    }

    pub fn name(self) -> &'static str {
        match self {
            CheckKind::GoldenBase => "golden-base",
            CheckKind::MainTheorem => "main-theorem",
            CheckKind::ConjectureS2 => "conjecture-s2",
            CheckKind::EmptyWord => "empty-word",
            CheckKind::Relation => "relation",
            CheckKind::Relation2 => "relation2",
            CheckKind::CEq => "c-eq",
            CheckKind::Reduction => "reduction",
            CheckKind::EngineAgreement => "engine-agreement",
            CheckKind::BooleanInterval => "boolean-interval",
            CheckKind::TypeInvariance => "type-invariance",
            CheckKind::MobPatVanishing => "mobpat-vanishing",
            CheckKind::MRecurrence => "m-recurrence",
            CheckKind::MIterated => "m-iterated",
            CheckKind::AlternatingSum => "alternating-sum",
            CheckKind::TClosed => "t-closed",
            CheckKind::TRecurrence => "t-recurrence",
        }
    }

    pub fn from_name(name: &str) -> Option<CheckKind> {
        CheckKind::all().iter().copied().find(|k| k.name() == name)
    }
}

impl fmt::Display for CheckKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// One failed instance: which parameters, what was expected, what came out.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckFailure {
    pub parameters: String,
    pub expected: String,
    pub actual: String,
}

/// Outcome of one check: how many instances ran and which failed. Wall time
/// is kept for diagnostics but excluded from serialization so that report
/// output is byte-identical across runs.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CheckResult {
    pub name: String,
    #[serde(with = "decimal_string")]
    pub instances: u64,
    pub failures: Vec<CheckFailure>,
    #[serde(skip, default)]
    pub wall: Duration,
}

impl CheckResult {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Full verification outcome for one ground poset and sweep bound.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct VerificationReport {
    #[serde(with = "decimal_string")]
    pub s: u32,
    #[serde(with = "decimal_string")]
    pub max_n: usize,
    pub checks: Vec<CheckResult>,
    pub passed: bool,
}

impl VerificationReport {
    fn new(s: u32, max_n: usize, checks: Vec<CheckResult>) -> VerificationReport {
        let passed = checks.iter().all(CheckResult::passed);
        VerificationReport {
            s,
            max_n,
            checks,
            passed,
        }
    }
}

/// Instance/failure accumulator shared by all checks.
#[derive(Default)]
struct Tally {
    instances: u64,
    failures: Vec<CheckFailure>,
}

impl Tally {
    fn ok(
        &mut self,
        ok: bool,
        parameters: impl FnOnce() -> String,
        expected: impl FnOnce() -> String,
        actual: impl FnOnce() -> String,
    ) {
        self.instances += 1;
        if !ok {
            self.failures.push(CheckFailure {
                parameters: parameters(),
                expected: expected(),
                actual: actual(),
            });
        }
    }

    fn eq_big(&mut self, expected: &BigInt, actual: &BigInt, parameters: impl FnOnce() -> String) {
        self.ok(
            expected == actual,
            parameters,
            || expected.to_string(),
            || actual.to_string(),
        );
    }

    fn absorb(&mut self, other: Tally) {
        self.instances += other.instances;
        self.failures.extend(other.failures);
    }
}

fn merge(tallies: Vec<Tally>) -> Tally {
    let mut total = Tally::default();
    for t in tallies {
        total.absorb(t);
    }
    total
}

fn finish(kind: CheckKind, tally: Tally, started: Instant) -> CheckResult {
    CheckResult {
        name: kind.name().to_string(),
        instances: tally.instances,
        failures: tally.failures,
        wall: started.elapsed(),
    }
}

fn a1_power(m: usize) -> Word {
    Word::repeat(Letter::A(1), m)
}

fn mu(poset: &GroundPoset, lower: &Word, upper: &Word) -> BigInt {
    mobius_recursive(lower, upper, poset).expect("endpoints comparable by construction")
}

/// The four base values: `μ(∅,c) = s-1`, `μ(a_i,c) = -1`, `μ(c,c²) = 2s-1`,
/// `μ(a_i,c²) = -2s+1`, the latter two for every minimal letter.
pub fn verify_golden_base(poset: &GroundPoset) -> CheckResult {
    let started = Instant::now();
    let s = i64::from(poset.s());
    let mut tally = Tally::default();
    let c1 = Word::c_power(1);
    let c2 = Word::c_power(2);

    tally.eq_big(&BigInt::from(s - 1), &mu(poset, &Word::empty(), &c1), || {
        format!("mu(e, c), s={s}")
    });
    tally.eq_big(&BigInt::from(2 * s - 1), &mu(poset, &c1, &c2), || {
        format!("mu(c, cc), s={s}")
    });
    for i in 1..=poset.s() {
        let a = Word::repeat(Letter::A(i), 1);
        tally.eq_big(&BigInt::from(-1), &mu(poset, &a, &c1), || {
            format!("mu(a{i}, c), s={s}")
        });
        tally.eq_big(&BigInt::from(-2 * s + 1), &mu(poset, &a, &c2), || {
            format!("mu(a{i}, cc), s={s}")
        });
    }
    finish(CheckKind::GoldenBase, tally, started)
}

/// `μ(a_1^m, c^n) = [X^(n-m)] T_(m+n)` for `0 <= m <= n <= max_n`, with the
/// two Chebyshev engines cross-checked against each other on every instance
/// and μ taken from interval enumeration alone.
pub fn verify_main_theorem(poset: &GroundPoset, max_n: usize) -> CheckResult {
    let started = Instant::now();
    let s = poset.s();
    let pairs: Vec<(usize, usize)> = (0..=max_n)
        .flat_map(|n| (0..=n).map(move |m| (m, n)))
        .collect();
    let tallies: Vec<Tally> = pairs
        .par_iter()
        .map(|&(m, n)| {
            let mut tally = Tally::default();
            let by_recurrence = chebyshev_recurrence(s, m + n).expect("s >= 1");
            let by_closed = chebyshev_closed_form(s, m + n).expect("s >= 1");
            tally.ok(
                by_recurrence == by_closed,
                || format!("engines at s={s}, k={}", m + n),
                || by_recurrence.to_string(),
                || by_closed.to_string(),
            );
            let mu_value = mu(poset, &a1_power(m), &Word::c_power(n));
            let coeff = by_recurrence.coefficient(n - m);
            tally.eq_big(&coeff, &mu_value, || format!("s={s}, m={m}, n={n}"));
            tally
        })
        .collect();
    finish(CheckKind::MainTheorem, merge(tallies), started)
}

/// The `s = 2` statement against classical first-kind Chebyshev polynomials
/// from their own independent `2X`-recurrence. Only meaningful at `s = 2`.
pub fn verify_conjecture_s2(poset: &GroundPoset, max_n: usize) -> Result<CheckResult, Error> {
    if poset.s() != 2 {
        return Err(Error::Hypothesis(format!(
            "check conjecture-s2 requires s = 2, got s = {}",
            poset.s()
        )));
    }
    let started = Instant::now();
    let pairs: Vec<(usize, usize)> = (0..=max_n)
        .flat_map(|j| (0..=j).map(move |i| (i, j)))
        .collect();
    let tallies: Vec<Tally> = pairs
        .par_iter()
        .map(|&(i, j)| {
            let mut tally = Tally::default();
            let mu_value = mu(poset, &a1_power(i), &Word::c_power(j));
            let coeff = classical_first_kind(i + j).coefficient(j - i);
            tally.eq_big(&coeff, &mu_value, || format!("s=2, i={i}, j={j}"));
            tally
        })
        .collect();
    Ok(finish(CheckKind::ConjectureS2, merge(tallies), started))
}

/// `μ(∅, c^n) = s^(n-1)(s-1)` and `= [X^n] T_n`, for `1 <= n <= max_n`.
pub fn verify_empty_word(poset: &GroundPoset, max_n: usize) -> CheckResult {
    let started = Instant::now();
    let s = poset.s();
    let tallies: Vec<Tally> = (1..=max_n)
        .into_par_iter()
        .map(|n| {
            let mut tally = Tally::default();
            let formula = BigInt::from(s).pow(n as u32 - 1) * (BigInt::from(s) - 1);
            let mu_value = mu(poset, &Word::empty(), &Word::c_power(n));
            tally.eq_big(&formula, &mu_value, || format!("formula side, s={s}, n={n}"));
            let coeff = chebyshev_recurrence(s, n).expect("s >= 1").coefficient(n);
            tally.eq_big(&coeff, &mu_value, || {
                format!("coefficient side, s={s}, n={n}")
            });
            tally
        })
        .collect();
    finish(CheckKind::EmptyWord, merge(tallies), started)
}

/// `μ(c^m, c^n) - μ(c^(m-1), c^(n-1)) = s μ(c^m, c^(n-1))` for
/// `1 <= m < n <= max(max_n, 2)`.
pub fn verify_relation(poset: &GroundPoset, max_n: usize) -> CheckResult {
    let started = Instant::now();
    let bound = max_n.max(2);
    let s = poset.s();
    let mut cache = MobiusCache::new(*poset);
    let mut tally = Tally::default();
    for n in 2..=bound {
        for m in 1..n {
            let lhs = cache.mu_to_c_power(&Word::c_power(m), n).expect("comparable")
                - cache
                    .mu_to_c_power(&Word::c_power(m - 1), n - 1)
                    .expect("comparable");
            let rhs = BigInt::from(s)
                * cache
                    .mu_to_c_power(&Word::c_power(m), n - 1)
                    .expect("m <= n-1");
            tally.eq_big(&rhs, &lhs, || format!("s={s}, m={m}, n={n}"));
        }
    }
    finish(CheckKind::Relation, tally, started)
}

/// `μ(a_1^m, c^n) + μ(a_1^(m-1), c^(n-1)) = s μ(a_1^m, c^(n-1))` for
/// `1 <= m <= n <= max_n`, where a right side with `a_1^m` not below
/// `c^(n-1)` counts as zero (the `m = n` boundary).
pub fn verify_relation2(poset: &GroundPoset, max_n: usize) -> CheckResult {
    let started = Instant::now();
    let s = poset.s();
    let mut cache = MobiusCache::new(*poset);
    let mut tally = Tally::default();
    for n in 1..=max_n {
        for m in 1..=n {
            let lhs = cache.mu_to_c_power(&a1_power(m), n).expect("m <= n")
                + cache
                    .mu_to_c_power(&a1_power(m - 1), n - 1)
                    .expect("m-1 <= n-1");
            let rhs = if m <= n - 1 {
                BigInt::from(s) * cache.mu_to_c_power(&a1_power(m), n - 1).expect("m <= n-1")
            } else {
                BigInt::zero()
            };
            tally.eq_big(&rhs, &lhs, || format!("s={s}, m={m}, n={n}"));
        }
    }
    finish(CheckKind::Relation2, tally, started)
}

/// `μ(c^m, c^n) = Σ_(k=m)^(n-1) μ(c^m, c^k) T(k, n)` for
/// `1 <= m < n <= max(max_n, 2)`.
pub fn verify_c_eq(poset: &GroundPoset, max_n: usize) -> CheckResult {
    let started = Instant::now();
    let bound = max_n.max(2);
    let s = poset.s();
    let mut cache = MobiusCache::new(*poset);
    let mut tally = Tally::default();
    for n in 2..=bound {
        for m in 1..n {
            let lhs = cache.mu_to_c_power(&Word::c_power(m), n).expect("m < n");
            let mut rhs = BigInt::zero();
            for k in m..n {
                rhs += cache.mu_to_c_power(&Word::c_power(m), k).expect("m <= k")
                    * chain_t_closed(poset, k, n);
            }
            tally.eq_big(&rhs, &lhs, || format!("s={s}, m={m}, n={n}"));
        }
    }
    finish(CheckKind::CEq, tally, started)
}

/// `μ(a_1^m, c^n) = (-1)^m μ(c^m, c^n)` for `0 <= m <= n <= max_n`.
pub fn verify_reduction(poset: &GroundPoset, max_n: usize) -> CheckResult {
    let started = Instant::now();
    let s = poset.s();
    let mut cache = MobiusCache::new(*poset);
    let mut tally = Tally::default();
    for n in 0..=max_n {
        for m in 0..=n {
            let left = cache.mu_to_c_power(&a1_power(m), n).expect("m <= n");
            let mut right = cache.mu_to_c_power(&Word::c_power(m), n).expect("m <= n");
            if m % 2 == 1 {
                right = -right;
            }
            tally.eq_big(&right, &left, || format!("s={s}, m={m}, n={n}"));
        }
    }
    finish(CheckKind::Reduction, tally, started)
}

/// Both Möbius engines on every comparable pair inside `[∅, c^min(max_n,4)]`.
pub fn verify_engine_agreement(poset: &GroundPoset, max_n: usize) -> CheckResult {
    let started = Instant::now();
    let top = max_n.min(4);
    let interval = Interval::build(&Word::empty(), &Word::c_power(top), poset)
        .expect("empty word below any c power");
    let n = interval.len();
    let tallies: Vec<Tally> = (0..n)
        .into_par_iter()
        .map(|from| {
            let mut tally = Tally::default();
            let recursive = mobius_from(&interval, from);
            let hall = hall_from(&interval, from);
            for j in from..n {
                let comparable = interval.leq_by_index(from, j);
                let fmt_pair =
                    || format!("[{}, {}]", interval.elements()[from], interval.elements()[j]);
                let show = |v: &Option<BigInt>| match v {
                    Some(value) => value.to_string(),
                    None => "incomparable".to_string(),
                };
                if comparable {
                    tally.ok(
                        recursive[j].is_some() && recursive[j] == hall[j],
                        fmt_pair,
                        || show(&recursive[j]),
                        || show(&hall[j]),
                    );
                } else if recursive[j].is_some() || hall[j].is_some() {
                    // Engines must also agree that unrelated pairs carry no value.
                    tally.ok(false, fmt_pair, || "incomparable".to_string(), || {
                        format!("{} / {}", show(&recursive[j]), show(&hall[j]))
                    });
                }
            }
            tally
        })
        .collect();
    finish(CheckKind::EngineAgreement, merge(tallies), started)
}

/// `[w, c^l]` is Boolean of rank `l - (c-count of w)` for every word `w` of
/// every length `l <= min(max_n, 5)`.
pub fn verify_boolean_interval(poset: &GroundPoset, max_n: usize) -> CheckResult {
    let started = Instant::now();
    let bound = max_n.min(5);
    let words: Vec<Word> = (0..=bound)
        .flat_map(|len| poset.words_of_len(len))
        .collect();
    let tallies: Vec<Tally> = words
        .par_iter()
        .map(|word| {
            let mut tally = Tally::default();
            let expected_rank = word.len() - word.c_count();
            let got = boolean_rank_check(word, word.len(), poset).expect("valid word");
            tally.ok(
                got == Some(expected_rank),
                || format!("[{word}, c^{}]", word.len()),
                || format!("Boolean of rank {expected_rank}"),
                || match got {
                    Some(rank) => format!("Boolean of rank {rank}"),
                    None => "not Boolean".to_string(),
                },
            );
            tally
        })
        .collect();
    finish(CheckKind::BooleanInterval, merge(tallies), started)
}

/// `μ(w, c^n)` depends only on the type of `w`: every word is compared to
/// the canonical representative of its type, for `n <= min(max_n, 4)`.
pub fn verify_type_invariance(poset: &GroundPoset, max_n: usize) -> CheckResult {
    let started = Instant::now();
    let bound = max_n.min(4);
    let mut tally = Tally::default();
    for n in 0..=bound {
        let interval = Interval::build(&Word::empty(), &Word::c_power(n), poset)
            .expect("empty word below any c power");
        let top = interval.upper_index();
        // Pin the canonical value per type first.
        let types: Vec<(WordType, BigInt)> = (0..=n)
            .flat_map(|m| (0..=m).map(move |p| WordType::new(m, p).expect("p <= m")))
            .map(|ty| {
                let canonical = interval
                    .index_of(&ty.canonical_word())
                    .expect("canonical word lies in the interval");
                let value = mobius_from(&interval, canonical)[top]
                    .clone()
                    .expect("everything is below c^n");
                (ty, value)
            })
            .collect();
        let canonical_value = |ty: WordType| -> &BigInt {
            &types
                .iter()
                .find(|(t, _)| *t == ty)
                .expect("every type <= n is listed")
                .1
        };
        let sub: Vec<Tally> = (0..interval.len())
            .into_par_iter()
            .map(|idx| {
                let mut tally = Tally::default();
                let word = &interval.elements()[idx];
                let value = mobius_from(&interval, idx)[top]
                    .clone()
                    .expect("everything is below c^n");
                tally.eq_big(canonical_value(word_type(word)), &value, || {
                    format!("mu({word}, c^{n})")
                });
                tally
            })
            .collect();
        tally.absorb(merge(sub));
    }
    finish(CheckKind::TypeInvariance, tally, started)
}

/// Vanishing of the restricted path sums: `mob_pat(w, n) = 0` for every word
/// `w` whose type `(m, p)` satisfies `1 <= p < m < n`, with
/// `n <= min(max(max_n, 3), 5)`.
pub fn verify_mobpat_vanishing(poset: &GroundPoset, max_n: usize) -> CheckResult {
    let started = Instant::now();
    let bound = max_n.max(3).min(5);
    let mut cases: Vec<(Word, usize)> = Vec::new();
    for n in 3..=bound {
        for m in 2..n {
            for p in 1..m {
                let ty = WordType::new(m, p).expect("p < m");
                for word in words_of_type(poset, ty) {
                    cases.push((word, n));
                }
            }
        }
    }
    let tallies: Vec<Tally> = cases
        .par_iter()
        .map(|(word, n)| {
            let mut tally = Tally::default();
            let value = mob_pat(word, *n, poset).expect("|word| < n");
            tally.eq_big(&BigInt::zero(), &value, || format!("mob_pat({word}, {n})"));
            tally
        })
        .collect();
    finish(CheckKind::MobPatVanishing, merge(tallies), started)
}

/// Recurrence engine against brute force on the whole lemma domain
/// `1 <= p <= m <= n`, `p <= q <= n`, `n <= min(max_n, 5)`.
pub fn verify_m_recurrence(poset: &GroundPoset, max_n: usize) -> CheckResult {
    let started = Instant::now();
    let bound = max_n.min(5);
    let tuples = m_domain(bound);
    let tallies: Vec<Tally> = tuples
        .par_iter()
        .map(|&(m, p, n, q)| {
            let mut tally = Tally::default();
            let lower = WordType::new(m, p).expect("p <= m");
            let upper = WordType::new(n, q).expect("q <= n");
            let brute = count_m_bruteforce(poset, lower, upper);
            let rec = count_m_recurrence(poset, lower, upper);
            tally.eq_big(&brute, &rec, || format!("M(({m},{p}),({n},{q}))"));
            tally
        })
        .collect();
    finish(CheckKind::MRecurrence, merge(tallies), started)
}

/// Iterated recurrence (every depth up to `p`, including the full collapse
/// to an all-minimal left type) against brute force on the same domain.
pub fn verify_m_iterated(poset: &GroundPoset, max_n: usize) -> CheckResult {
    let started = Instant::now();
    let bound = max_n.min(5);
    let tuples = m_domain(bound);
    let tallies: Vec<Tally> = tuples
        .par_iter()
        .map(|&(m, p, n, q)| {
            let mut tally = Tally::default();
            let lower = WordType::new(m, p).expect("p <= m");
            let upper = WordType::new(n, q).expect("q <= n");
            let brute = count_m_bruteforce(poset, lower, upper);
            for depth in 1..=p {
                let got = count_m_iterated(poset, lower, upper, depth)
                    .expect("hypotheses hold on the domain");
                tally.eq_big(&brute, &got, || {
                    format!("M(({m},{p}),({n},{q})), depth {depth}")
                });
            }
            tally
        })
        .collect();
    finish(CheckKind::MIterated, merge(tallies), started)
}

fn m_domain(bound: usize) -> Vec<(usize, usize, usize, usize)> {
    let mut tuples = Vec::new();
    for n in 1..=bound {
        for m in 1..=n {
            for p in 1..=m {
                for q in p..=n {
                    tuples.push((m, p, n, q));
                }
            }
        }
    }
    tuples
}

/// `Σ_(i=0)^β (-1)^i M((α,0),(β,i)) = 0` for `1 <= α <= β <= min(max_n, 5)`.
pub fn verify_alternating_sum(poset: &GroundPoset, max_n: usize) -> CheckResult {
    let started = Instant::now();
    let bound = max_n.min(5);
    let mut tally = Tally::default();
    for beta in 1..=bound {
        for alpha in 1..=beta {
            let value = alternating_sum_m(poset, alpha, beta).expect("1 <= alpha <= beta");
            tally.eq_big(&BigInt::zero(), &value, || {
                format!("alpha={alpha}, beta={beta}")
            });
        }
    }
    finish(CheckKind::AlternatingSum, tally, started)
}

/// Closed-form `T(k,n)` against the chain-counting `mob_pat(c^k, n)` for
/// `0 <= k <= n <= min(max_n, 5)`.
pub fn verify_t_closed(poset: &GroundPoset, max_n: usize) -> CheckResult {
    let started = Instant::now();
    let bound = max_n.min(5);
    let pairs: Vec<(usize, usize)> = (0..=bound)
        .flat_map(|n| (0..=n).map(move |k| (k, n)))
        .collect();
    let tallies: Vec<Tally> = pairs
        .par_iter()
        .map(|&(k, n)| {
            let mut tally = Tally::default();
            let closed = chain_t_closed(poset, k, n);
            let chains = mob_pat(&Word::c_power(k), n, poset).expect("k <= n");
            tally.eq_big(&closed, &chains, || format!("T({k},{n})"));
            tally
        })
        .collect();
    finish(CheckKind::TClosed, merge(tallies), started)
}

/// `T(k,l) - T(k-1,l-1) = -s T(k,l-1)` for `1 <= k <= l <= max(max_n, 10)`.
pub fn verify_t_recurrence(poset: &GroundPoset, max_n: usize) -> CheckResult {
    let started = Instant::now();
    let bound = max_n.max(10);
    let s = poset.s();
    let mut tally = Tally::default();
    for l in 1..=bound {
        for k in 1..=l {
            let lhs = chain_t_closed(poset, k, l) - chain_t_closed(poset, k - 1, l - 1);
            let rhs = -(BigInt::from(s) * chain_t_closed(poset, k, l - 1));
            tally.eq_big(&rhs, &lhs, || format!("s={s}, k={k}, l={l}"));
        }
    }
    finish(CheckKind::TRecurrence, tally, started)
}

/// Run the selected checks (or all applicable ones) and assemble the report.
///
/// With no explicit selection, `conjecture-s2` is included only when
/// `s = 2`; selecting it explicitly for another `s` is an error, as is an
/// empty selection or `max_n = 0`.
pub fn run_verification(
    poset: &GroundPoset,
    max_n: usize,
    selection: Option<&[CheckKind]>,
) -> Result<VerificationReport, Error> {
    if max_n == 0 {
        return Err(Error::Hypothesis("max_n must be at least 1".to_string()));
    }
    let enabled: Vec<CheckKind> = match selection {
        Some(kinds) => {
            if kinds.is_empty() {
                return Err(Error::Hypothesis("no checks selected".to_string()));
            }
            if kinds.contains(&CheckKind::ConjectureS2) && poset.s() != 2 {
                return Err(Error::Hypothesis(format!(
                    "check conjecture-s2 requires s = 2, got s = {}",
                    poset.s()
                )));
            }
            // Canonical report order regardless of selection order.
            CheckKind::all()
                .iter()
                .copied()
                .filter(|k| kinds.contains(k))
                .collect()
        }
        None => CheckKind::all()
            .iter()
            .copied()
            .filter(|&k| k != CheckKind::ConjectureS2 || poset.s() == 2)
            .collect(),
    };
    let mut checks = Vec::with_capacity(enabled.len());
    for kind in enabled {
        let result = match kind {
            CheckKind::GoldenBase => verify_golden_base(poset),
            CheckKind::MainTheorem => verify_main_theorem(poset, max_n),
            CheckKind::ConjectureS2 => verify_conjecture_s2(poset, max_n)?,
            CheckKind::EmptyWord => verify_empty_word(poset, max_n),
            CheckKind::Relation => verify_relation(poset, max_n),
            CheckKind::Relation2 => verify_relation2(poset, max_n),
            CheckKind::CEq => verify_c_eq(poset, max_n),
            CheckKind::Reduction => verify_reduction(poset, max_n),
            CheckKind::EngineAgreement => verify_engine_agreement(poset, max_n),
            CheckKind::BooleanInterval => verify_boolean_interval(poset, max_n),
            CheckKind::TypeInvariance => verify_type_invariance(poset, max_n),
            CheckKind::MobPatVanishing => verify_mobpat_vanishing(poset, max_n),
            CheckKind::MRecurrence => verify_m_recurrence(poset, max_n),
            CheckKind::MIterated => verify_m_iterated(poset, max_n),
            CheckKind::AlternatingSum => verify_alternating_sum(poset, max_n),
            CheckKind::TClosed => verify_t_closed(poset, max_n),
            CheckKind::TRecurrence => verify_t_recurrence(poset, max_n),
        };
        checks.push(result);
    }
    Ok(VerificationReport::new(poset.s(), max_n, checks))
}
