//! Möbius values of subword-order intervals, by two independent engines.
//!
//! * [`mobius_recursive`] runs the defining recursion `μ(u,u) = 1`,
//!   `μ(u,v) = -Σ_{u<=z<v} μ(u,z)` over a materialized interval.
//! * [`mobius_hall`] counts chains: `μ(u,v) = Σ_k (-1)^k C_k`, where `C_k`
//!   is the number of chains `u = z_0 < z_1 < … < z_k = v` (`k` arrows).
//!
//! The engines share no arithmetic beyond the strict-order matrix, which is
//! what makes their agreement a meaningful check. Chain counting is exposed
//! in restricted form too: [`chain_counts`] counts chains whose intermediate
//! elements satisfy a caller-supplied predicate, [`mob`] and [`hall_sum`]
//! fold such counts with signs from `k >= 1` respectively `k >= 0` (the two
//! conventions differ exactly on the trivial chain, so they agree on every
//! pair `u < v`), and [`mob_pat`] specializes to chains toward `c^n` whose
//! intermediates all have length exactly `n` — the quantity behind the
//! single-level chain numbers `T(k,n)`.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::counting::{word_type, WordType};
use crate::error::Error;
use crate::interval::Interval;
use crate::words::{GroundPoset, Word};

/// `μ(u, v)` by the defining recursion over the interval `[u, v]`.
pub fn mobius_recursive(u: &Word, v: &Word, poset: &GroundPoset) -> Result<BigInt, Error> {
    let interval = Interval::build(u, v, poset)?;
    let values = mobius_from(&interval, interval.lower_index());
    Ok(values[interval.upper_index()]
        .clone()
        .expect("upper endpoint is comparable to lower"))
}

/// `μ(u, v)` by alternating chain counts (Philip Hall's theorem).
pub fn mobius_hall(u: &Word, v: &Word, poset: &GroundPoset) -> Result<BigInt, Error> {
    let interval = Interval::build(u, v, poset)?;
    let counts = chain_counts(
        &interval,
        interval.lower_index(),
        interval.upper_index(),
        |_| true,
    );
    Ok(hall_sum(&counts))
}

/// `μ(elements[from], elements[j])` for every `j`, by one forward pass of
/// the defining recursion. `None` marks targets not above `elements[from]`.
pub fn mobius_from(interval: &Interval, from: usize) -> Vec<Option<BigInt>> {
    let n = interval.len();
    let mut mu: Vec<Option<BigInt>> = vec![None; n];
    mu[from] = Some(BigInt::one());
    // Indices linearly extend the order, so every z < elements[j] has index
    // below j and its value is already final when j is processed.
    for j in from + 1..n {
        if !interval.strict_less(from, j) {
            continue;
        }
        let mut below = BigInt::zero();
        for (z, value) in mu.iter().enumerate().take(j).skip(from) {
            // `value` is Some exactly when elements[z] lies in [from, ·);
            // strict_less(z, j) then restricts to the half-open [from, j).
            if let Some(value) = value {
                if interval.strict_less(z, j) {
                    below += value;
                }
            }
        }
        mu[j] = Some(-below);
    }
    mu
}

/// Same values as [`mobius_from`], by layered chain counting instead of the
/// recursion: after `k` rounds the frontier holds the number of `k`-arrow
/// chains from `elements[from]` to each target, and the accumulator folds
/// them with sign `(-1)^k`.
pub fn hall_from(interval: &Interval, from: usize) -> Vec<Option<BigInt>> {
    let n = interval.len();
    let mut acc = vec![BigInt::zero(); n];
    acc[from] = BigInt::one();
    let mut frontier = vec![BigInt::zero(); n];
    frontier[from] = BigInt::one();
    let mut negative = true; // sign of the chain length about to be folded in
    loop {
        let mut next = vec![BigInt::zero(); n];
        let mut alive = false;
        for i in from..n {
            if frontier[i].is_zero() {
                continue;
            }
            for j in i + 1..n {
                if interval.strict_less(i, j) {
                    next[j] += &frontier[i];
                    alive = true;
                }
            }
        }
        if !alive {
            break;
        }
        for j in from + 1..n {
            if next[j].is_zero() {
                continue;
            }
            if negative {
                acc[j] -= &next[j];
            } else {
                acc[j] += &next[j];
            }
        }
        negative = !negative;
        frontier = next;
    }
    let mut acc = acc;
    (0..n)
        .map(|j| {
            if interval.leq_by_index(from, j) {
                Some(std::mem::take(&mut acc[j]))
            } else {
                None
            }
        })
        .collect()
}

/// Chain counts by length: `counts[k]` is the number of chains
/// `elements[from] < z_1 < … < z_{k-1} < elements[to]` with `k` arrows whose
/// intermediate elements all satisfy `admissible` (the endpoints are exempt).
/// `counts[0]` is 1 exactly when `from == to`. Trailing zeros are trimmed.
pub fn chain_counts<F>(interval: &Interval, from: usize, to: usize, admissible: F) -> Vec<BigInt>
where
    F: Fn(&Word) -> bool,
{
    let n = interval.len();
    let mut counts = vec![if from == to {
        BigInt::one()
    } else {
        BigInt::zero()
    }];
    // Only intermediates that are admissible and still below `to` matter.
    let usable: Vec<bool> = (0..n)
        .map(|j| interval.strict_less(j, to) && admissible(&interval.elements()[j]))
        .collect();
    let mut frontier = vec![BigInt::zero(); n];
    frontier[from] = BigInt::one();
    loop {
        let mut into_to = BigInt::zero();
        let mut next = vec![BigInt::zero(); n];
        let mut alive = false;
        for i in 0..n {
            if frontier[i].is_zero() {
                continue;
            }
            if interval.strict_less(i, to) {
                into_to += &frontier[i];
            }
            for j in i + 1..n {
                if usable[j] && interval.strict_less(i, j) {
                    next[j] += &frontier[i];
                    alive = true;
                }
            }
        }
        counts.push(into_to);
        if !alive {
            break;
        }
        frontier = next;
    }
    while counts.len() > 1 && counts.last().is_some_and(Zero::is_zero) {
        counts.pop();
    }
    counts
}

/// Signed fold of chain counts over proper chains only:
/// `Σ_{k>=1} (-1)^k counts[k]`. Zero on an empty or trivial-only chain set.
pub fn mob(counts: &[BigInt]) -> BigInt {
    alternating_fold(counts, 1)
}

/// Signed fold including the trivial chain: `Σ_{k>=0} (-1)^k counts[k]`.
/// This is the Möbius value when the counts run between interval endpoints.
pub fn hall_sum(counts: &[BigInt]) -> BigInt {
    alternating_fold(counts, 0)
}

/// Unsigned total number of counted chains — a debug statistic that
/// participates in no identity.
pub fn chain_census(counts: &[BigInt]) -> BigInt {
    counts.iter().sum()
}

fn alternating_fold(counts: &[BigInt], start: usize) -> BigInt {
    let mut total = BigInt::zero();
    for (k, count) in counts.iter().enumerate().skip(start) {
        if k % 2 == 0 {
            total += count;
        } else {
            total -= count;
        }
    }
    total
}

/// The restricted path sum `MobPat`: signed count of chains
/// `u < z_1 < … < z_r < c^n` whose intermediates all have length exactly
/// `n`, with sign `(-1)^(r+1)`. By convention the degenerate case
/// `u = c^n` yields `-1` (matching `T(n,n) = -1`).
///
/// Works on a reduced structure (just `u`, the length-`n` words between,
/// and `c^n`) rather than a full interval, since no other element can occur
/// in such a chain.
pub fn mob_pat(u: &Word, n: usize, poset: &GroundPoset) -> Result<BigInt, Error> {
    poset.check_word(u)?;
    let top = Word::c_power(n);
    if u.len() > n {
        return Err(Error::NotComparable {
            lower: u.to_string(),
            upper: top.to_string(),
        });
    }
    if *u == top {
        return Ok(BigInt::from(-1));
    }

    let mids: Vec<Word> = poset
        .words_of_len(n)
        .into_iter()
        .filter(|z| *z != top && *z != *u && u.leq(z))
        .collect();
    let k = mids.len();
    // Among equal-length words the subword order is letterwise domination;
    // the greedy comparison computes exactly that.
    let mut strict = vec![false; k * k];
    for i in 0..k {
        for j in 0..k {
            strict[i * k + j] = i != j && mids[i].leq(&mids[j]);
        }
    }

    // r = 0 intermediates: the direct chain u < c^n, sign (-1)^1.
    let mut total = BigInt::from(-1);
    // f[j] = number of strictly increasing r-sequences of mids ending at j.
    let mut f: Vec<BigInt> = vec![BigInt::one(); k];
    let mut positive = true; // sign (-1)^(r+1) for r = 1
    loop {
        let level: BigInt = f.iter().sum();
        if level.is_zero() {
            break;
        }
        if positive {
            total += &level;
        } else {
            total -= &level;
        }
        positive = !positive;
        let mut next = vec![BigInt::zero(); k];
        for i in 0..k {
            if f[i].is_zero() {
                continue;
            }
            for j in 0..k {
                if strict[i * k + j] {
                    next[j] += &f[i];
                }
            }
        }
        f = next;
    }
    Ok(total)
}

/// Memoizing wrapper for Möbius values against `c^n` targets.
///
/// `μ(w, c^n)` depends only on the type of `w` (a tested invariance), so the
/// cache is keyed by `(type(w), n)` and always computes from the type's
/// canonical representative. Targets that are not powers of `c` bypass the
/// cache entirely. Not synchronized: confine one cache per worker (values
/// are deterministic, so independent caches never disagree).
#[derive(Debug, Clone)]
pub struct MobiusCache {
    poset: GroundPoset,
    map: HashMap<(WordType, usize), BigInt>,
}

impl MobiusCache {
    pub fn new(poset: GroundPoset) -> MobiusCache {
        MobiusCache {
            poset,
            map: HashMap::new(),
        }
    }

    pub fn poset(&self) -> &GroundPoset {
        &self.poset
    }

    /// Number of cached type entries.
    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }

    /// `μ(w, c^n)` through the type-keyed cache.
    pub fn mu_to_c_power(&mut self, w: &Word, n: usize) -> Result<BigInt, Error> {
        self.poset.check_word(w)?;
        if w.len() > n {
            return Err(Error::NotComparable {
                lower: w.to_string(),
                upper: Word::c_power(n).to_string(),
            });
        }
        let key = (word_type(w), n);
        if let Some(value) = self.map.get(&key) {
            return Ok(value.clone());
        }
        let value = mobius_recursive(&key.0.canonical_word(), &Word::c_power(n), &self.poset)?;
        self.map.insert(key, value.clone());
        Ok(value)
    }

    /// General `μ(u, v)`: routes `c`-power targets (including the empty
    /// word) through the cache and computes everything else fresh.
    pub fn mu(&mut self, u: &Word, v: &Word) -> Result<BigInt, Error> {
        if v.c_count() == v.len() {
            self.mu_to_c_power(u, v.len())
        } else {
            mobius_recursive(u, v, &self.poset)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::parse_word;

    fn poset(s: u32) -> GroundPoset {
        GroundPoset::new(s).unwrap()
    }

    fn w(text: &str, s: u32) -> Word {
        parse_word(text, s).unwrap()
    }

    fn mu_rec(lo: &str, hi: &str, s: u32) -> BigInt {
        mobius_recursive(&w(lo, s), &w(hi, s), &poset(s)).unwrap()
    }

    fn mu_hall(lo: &str, hi: &str, s: u32) -> BigInt {
        mobius_hall(&w(lo, s), &w(hi, s), &poset(s)).unwrap()
    }

    #[test]
    fn golden_base_values() {
        for s in 1..=5u32 {
            let expect_empty_c = BigInt::from(s as i64 - 1);
            assert_eq!(mu_rec("e", "c", s), expect_empty_c, "mu(e, c) at s={s}");
            assert_eq!(mu_hall("e", "c", s), expect_empty_c);
            let expect_cc = BigInt::from(2 * s as i64 - 1);
            assert_eq!(mu_rec("c", "c,c", s), expect_cc, "mu(c, cc) at s={s}");
            let expect_a_cc = BigInt::from(-2 * (s as i64) + 1);
            for i in 1..=s {
                let a = format!("a{i}");
                assert_eq!(mu_rec(&a, "c", s), BigInt::from(-1), "mu(a{i}, c) at s={s}");
                assert_eq!(mu_rec(&a, "c,c", s), expect_a_cc, "mu(a{i}, cc) at s={s}");
            }
        }
        // Specific spot values: mu(c, cc) = 5 at s = 3, mu(e, cc) = 2 at s = 2.
        assert_eq!(mu_rec("c", "c,c", 3), BigInt::from(5));
        assert_eq!(mu_hall("e", "c,c", 2), BigInt::from(2));
        assert_eq!(mu_hall("a1", "c,c", 2), BigInt::from(-3));
    }

    #[test]
    fn reflexive_mu_is_one() {
        for text in ["e", "c", "a1,a2", "c,a1,c"] {
            assert_eq!(mu_rec(text, text, 2), BigInt::one());
            assert_eq!(mu_hall(text, text, 2), BigInt::one());
        }
    }

    #[test]
    fn incomparable_pairs_error() {
        assert!(mobius_recursive(&w("c", 2), &w("a1", 2), &poset(2)).is_err());
        assert!(mobius_hall(&w("a1,a1", 2), &w("a2,c", 2), &poset(2)).is_err());
    }

    #[test]
    fn engines_agree_on_all_pairs_up_to_ccc() {
        let p = poset(2);
        let interval = Interval::build(&Word::empty(), &Word::c_power(3), &p).unwrap();
        for from in 0..interval.len() {
            let rec = mobius_from(&interval, from);
            let hall = hall_from(&interval, from);
            assert_eq!(rec, hall, "source {}", interval.elements()[from]);
        }
    }

    #[test]
    fn defining_property_of_mobius() {
        // sum_{u <= z <= v} mu(u, z) = [u = v] on every comparable pair.
        let p = poset(2);
        let interval = Interval::build(&Word::empty(), &Word::c_power(3), &p).unwrap();
        let n = interval.len();
        for from in 0..n {
            let mu = mobius_from(&interval, from);
            for to in from..n {
                if !interval.leq_by_index(from, to) {
                    continue;
                }
                let mut total = BigInt::zero();
                for (z, value) in mu.iter().enumerate().take(to + 1).skip(from) {
                    if let Some(value) = value {
                        if interval.leq_by_index(z, to) {
                            total += value;
                        }
                    }
                }
                let expected = if from == to { BigInt::one() } else { BigInt::zero() };
                assert_eq!(
                    total, expected,
                    "pair {} <= {}",
                    interval.elements()[from],
                    interval.elements()[to]
                );
            }
        }
    }

    #[test]
    fn frozen_chain_counts_a1_to_cc() {
        // In [a1, cc] at s = 2 the chains from a1 to cc number 1 (one arrow),
        // 8 (two arrows), 10 (three arrows): counted once by hand and pinned.
        let p = poset(2);
        let interval = Interval::build(&w("a1", 2), &w("c,c", 2), &p).unwrap();
        let counts = chain_counts(
            &interval,
            interval.lower_index(),
            interval.upper_index(),
            |_| true,
        );
        let expected: Vec<BigInt> = [0, 1, 8, 10].iter().map(|&v| BigInt::from(v)).collect();
        assert_eq!(counts, expected);
        assert_eq!(mob(&counts), BigInt::from(-3));
        assert_eq!(hall_sum(&counts), BigInt::from(-3));
        assert_eq!(chain_census(&counts), BigInt::from(19));
    }

    #[test]
    fn chain_counts_against_recursive_enumeration() {
        // Exhaustive DFS oracle: enumerate chains explicitly and bucket them
        // by arrow count; the DP must match for every pair and for both an
        // unrestricted and a length-restricted predicate.
        fn dfs(
            interval: &Interval,
            current: usize,
            to: usize,
            arrows: usize,
            admissible: &dyn Fn(&Word) -> bool,
            out: &mut Vec<u64>,
        ) {
            for j in current + 1..interval.len() {
                if !interval.strict_less(current, j) {
                    continue;
                }
                if j == to {
                    if out.len() <= arrows + 1 {
                        out.resize(arrows + 2, 0);
                    }
                    out[arrows + 1] += 1;
                } else if admissible(&interval.elements()[j]) && interval.strict_less(j, to) {
                    dfs(interval, j, to, arrows + 1, admissible, out);
                }
            }
        }

        let p = poset(2);
        let interval = Interval::build(&Word::empty(), &Word::c_power(2), &p).unwrap();
        let predicates: Vec<Box<dyn Fn(&Word) -> bool>> = vec![
            Box::new(|_: &Word| true),
            Box::new(|z: &Word| z.len() == 2),
            Box::new(|z: &Word| z.c_count() == 0),
        ];
        for admissible in &predicates {
            for from in 0..interval.len() {
                for to in 0..interval.len() {
                    let mut expected = vec![u64::from(from == to)];
                    dfs(&interval, from, to, 0, admissible, &mut expected);
                    while expected.len() > 1 && *expected.last().unwrap() == 0 {
                        expected.pop();
                    }
                    let expected: Vec<BigInt> =
                        expected.into_iter().map(BigInt::from).collect();
                    let got = chain_counts(&interval, from, to, admissible);
                    assert_eq!(
                        got, expected,
                        "from {} to {}",
                        interval.elements()[from],
                        interval.elements()[to]
                    );
                }
            }
        }
    }

    #[test]
    fn path_splitting_through_intermediate() {
        // Signed chains through a fixed x factor into (signed chains u..x)
        // times (signed chains x..v).
        let p = poset(2);
        let interval = Interval::build(&Word::empty(), &Word::c_power(2), &p).unwrap();
        let lo = interval.lower_index();
        let hi = interval.upper_index();
        let all = chain_counts(&interval, lo, hi, |_| true);
        for x in lo + 1..hi {
            if !interval.strict_less(lo, x) || !interval.strict_less(x, hi) {
                continue;
            }
            let x_word = interval.elements()[x].clone();
            let avoiding = chain_counts(&interval, lo, hi, |z| *z != x_word);
            let through = mob(&all) - mob(&avoiding);
            let left = mob(&chain_counts(&interval, lo, x, |_| true));
            let right = mob(&chain_counts(&interval, x, hi, |_| true));
            assert_eq!(through, left * right, "through {x_word}");
        }
    }

    #[test]
    fn restricted_chain_example_t12() {
        // Chains c -> cc with intermediates of length 2 at s = 2: the signed
        // count is T(1,2) = 3.
        let p = poset(2);
        let interval = Interval::build(&w("c", 2), &w("c,c", 2), &p).unwrap();
        let counts = chain_counts(
            &interval,
            interval.lower_index(),
            interval.upper_index(),
            |z| z.len() == 2,
        );
        assert_eq!(mob(&counts), BigInt::from(3));
    }

    #[test]
    fn mob_of_trivial_and_empty_chain_sets() {
        assert_eq!(mob(&[]), BigInt::zero());
        assert_eq!(mob(&[BigInt::one()]), BigInt::zero());
        assert_eq!(hall_sum(&[BigInt::one()]), BigInt::one());
        assert_eq!(chain_census(&[]), BigInt::zero());
    }

    #[test]
    fn mob_pat_examples() {
        let p = poset(2);
        for n in 0..=4usize {
            assert_eq!(
                mob_pat(&Word::c_power(n), n, &p).unwrap(),
                BigInt::from(-1),
                "c^{n}"
            );
        }
        assert_eq!(mob_pat(&w("c", 2), 2, &p).unwrap(), BigInt::from(3));
        assert_eq!(mob_pat(&w("a1,c", 2), 3, &p).unwrap(), BigInt::zero());
        assert!(mob_pat(&w("c,c", 2), 1, &p).is_err());
    }

    #[test]
    fn mob_pat_matches_general_chain_machinery() {
        // The reduced computation must agree with restricted chain counts
        // over the full interval.
        for s in 1..=2u32 {
            let p = poset(s);
            for n in 1..=3usize {
                for len in 0..=n {
                    for u in p.words_of_len(len) {
                        let interval = Interval::build(&u, &Word::c_power(n), &p).unwrap();
                        let counts = chain_counts(
                            &interval,
                            interval.lower_index(),
                            interval.upper_index(),
                            |z| z.len() == n,
                        );
                        let reduced = mob_pat(&u, n, &p).unwrap();
                        let expected = if u == Word::c_power(n) {
                            BigInt::from(-1)
                        } else {
                            mob(&counts)
                        };
                        assert_eq!(reduced, expected, "s={s} u={u} n={n}");
                    }
                }
            }
        }
    }

    #[test]
    fn mob_pat_equals_chain_t_closed_on_c_powers() {
        use crate::counting::chain_t_closed;
        for s in 1..=3u32 {
            let p = poset(s);
            for n in 0..=4usize {
                for k in 0..=n {
                    assert_eq!(
                        mob_pat(&Word::c_power(k), n, &p).unwrap(),
                        chain_t_closed(&p, k, n),
                        "s={s} k={k} n={n}"
                    );
                }
            }
        }
    }

    #[test]
    fn all_minimal_words_to_c_power_of_same_length() {
        // mu(a1^m, c^m) = (-1)^m.
        use crate::words::Letter;
        for s in 1..=2u32 {
            for m in 0..=4usize {
                let u = Word::repeat(Letter::A(1), m);
                let sign = if m % 2 == 0 { 1 } else { -1 };
                assert_eq!(
                    mobius_recursive(&u, &Word::c_power(m), &poset(s)).unwrap(),
                    BigInt::from(sign),
                    "s={s} m={m}"
                );
            }
        }
    }

    #[test]
    fn cache_is_transparent_and_reused() {
        let p = poset(2);
        let mut cache = MobiusCache::new(p);
        assert!(cache.is_empty());
        let direct = mobius_recursive(&w("a1", 2), &Word::c_power(2), &p).unwrap();
        assert_eq!(cache.mu_to_c_power(&w("a1", 2), 2).unwrap(), direct);
        assert_eq!(cache.len(), 1);
        // Same type, different word: served from the same entry.
        assert_eq!(cache.mu_to_c_power(&w("a2", 2), 2).unwrap(), direct);
        assert_eq!(cache.len(), 1);
        // Different target length is a different entry.
        cache.mu_to_c_power(&w("a1", 2), 3).unwrap();
        assert_eq!(cache.len(), 2);
        // Cached values stay equal to fresh computation.
        assert_eq!(
            cache.mu_to_c_power(&w("a1", 2), 2).unwrap(),
            mobius_recursive(&w("a2", 2), &Word::c_power(2), &p).unwrap()
        );
    }

    #[test]
    fn cache_routes_non_c_power_targets_around_itself() {
        let p = poset(2);
        let mut cache = MobiusCache::new(p);
        let value = cache.mu(&w("a1", 2), &w("a1,c", 2)).unwrap();
        assert_eq!(
            value,
            mobius_recursive(&w("a1", 2), &w("a1,c", 2), &p).unwrap()
        );
        assert!(cache.is_empty(), "non-c-power target must not be cached");
        // c-power targets go through the cache, including the empty word.
        assert_eq!(cache.mu(&w("e", 2), &w("e", 2)).unwrap(), BigInt::one());
        assert_eq!(cache.len(), 1);
    }

    #[test]
    fn cache_rejects_incomparable_and_invalid() {
        let p = poset(2);
        let mut cache = MobiusCache::new(p);
        assert!(cache.mu_to_c_power(&w("c,c", 2), 1).is_err());
        assert!(cache
            .mu_to_c_power(&Word::repeat(crate::words::Letter::A(7), 1), 3)
            .is_err());
    }

    #[test]
    fn empty_word_column_small() {
        // mu(e, c^n) = s^(n-1) (s-1) for small n, both engines.
        for s in 1..=3u32 {
            let p = poset(s);
            for n in 1..=3usize {
                let expected = BigInt::from(s).pow(n as u32 - 1) * (BigInt::from(s) - 1);
                assert_eq!(
                    mobius_recursive(&Word::empty(), &Word::c_power(n), &p).unwrap(),
                    expected,
                    "recursive s={s} n={n}"
                );
                assert_eq!(
                    mobius_hall(&Word::empty(), &Word::c_power(n), &p).unwrap(),
                    expected,
                    "hall s={s} n={n}"
                );
            }
        }
    }
}
