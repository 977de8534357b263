//! Counting words by type.
//!
//! A word's *type* is the pair `(length, number of c letters)`; how many
//! words of one type dominate a fixed word turns out to depend only on the
//! fixed word's type, which is what makes the quantity
//!
//! ```text
//! M((m,p), (n,q)) = # { words w of type (n,q) : a_1^(m-p) c^p <= w }
//! ```
//!
//! well defined. Two engines compute it: direct enumeration of all
//! `C(n,q) s^(n-q)` candidate words, and a peel-one-c recurrence (with the
//! enumeration as its base case and as the fallback outside the recurrence's
//! domain). The single-level chain numbers `T(k,n)` and the alternating-sum
//! identity tie `M` to the Möbius computations elsewhere in the crate.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::arith::{alt_sign, binomial, int_pow};
use crate::error::Error;
use crate::words::{GroundPoset, Letter, Word};

/// The type of a word: its length and its number of `c` letters.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct WordType {
    len: usize,
    c_count: usize,
}

impl WordType {
    pub fn new(len: usize, c_count: usize) -> Result<WordType, Error> {
        if c_count > len {
            return Err(Error::InvalidWordType { len, c_count });
        }
        Ok(WordType { len, c_count })
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn c_count(&self) -> usize {
        self.c_count
    }

    pub fn a_count(&self) -> usize {
        self.len - self.c_count
    }

    /// The canonical representative `a_1^(m-p) c^p`: all counting and
    /// caching pins type-level quantities to this concrete word.
    pub fn canonical_word(&self) -> Word {
        let mut letters = vec![Letter::A(1); self.a_count()];
        letters.extend(std::iter::repeat(Letter::C).take(self.c_count));
        Word::new(letters)
    }
}

/// The type of a word.
pub fn word_type(w: &Word) -> WordType {
    WordType {
        len: w.len(),
        c_count: w.c_count(),
    }
}

/// All words of the given type, enumerated as (positions of `c`) x
/// (subscript assignment for the remaining letters). Deterministic order.
pub fn words_of_type(poset: &GroundPoset, ty: WordType) -> Vec<Word> {
    use itertools::Itertools;

    let s = poset.s();
    let mut out = Vec::new();
    for c_positions in (0..ty.len).combinations(ty.c_count) {
        let mut assignments: Vec<Vec<u32>> = if ty.a_count() == 0 {
            vec![Vec::new()]
        } else {
            itertools::repeat_n(1..=s, ty.a_count())
                .multi_cartesian_product()
                .collect()
        };
        for assignment in assignments.drain(..) {
            let mut letters = Vec::with_capacity(ty.len);
            let mut next_a = assignment.into_iter();
            for pos in 0..ty.len {
                if c_positions.binary_search(&pos).is_ok() {
                    letters.push(Letter::C);
                } else {
                    letters.push(Letter::A(next_a.next().expect("assignment length")));
                }
            }
            out.push(Word::new(letters));
        }
    }
    out
}

/// Number of words of type `target` lying above `w`, by direct enumeration.
pub fn count_above(poset: &GroundPoset, w: &Word, target: WordType) -> BigInt {
    BigInt::from(
        words_of_type(poset, target)
            .iter()
            .filter(|candidate| w.leq(candidate))
            .count(),
    )
}

/// `M(lower, upper)` by enumerating every word of the upper type and testing
/// it against the canonical representative of the lower type.
pub fn count_m_bruteforce(poset: &GroundPoset, lower: WordType, upper: WordType) -> BigInt {
    count_above(poset, &lower.canonical_word(), upper)
}

/// `M(lower, upper)` by the peel-one-c recurrence
///
/// ```text
/// M((m,p),(n,q)) = sum_{i=0}^{n-m} M((m-1,p-1),(n-1-i,q-1)) s^i
/// ```
///
/// applied while `1 <= p <= m <= n` and `p <= q`; outside that domain
/// (notably once `p = 0`) the brute-force engine takes over, and subterms
/// with malformed types (negative counts, more c's than letters) count as 0.
pub fn count_m_recurrence(poset: &GroundPoset, lower: WordType, upper: WordType) -> BigInt {
    fn recurse(poset: &GroundPoset, m: i64, p: i64, n: i64, q: i64) -> BigInt {
        if m < 0 || p < 0 || n < 0 || q < 0 || p > m || q > n || m > n {
            return BigInt::zero();
        }
        let in_domain = 1 <= p && p <= m && m <= n && p <= q;
        if !in_domain {
            let lower = WordType::new(m as usize, p as usize).expect("checked p <= m");
            let upper = WordType::new(n as usize, q as usize).expect("checked q <= n");
            return count_m_bruteforce(poset, lower, upper);
        }
        let mut total = BigInt::zero();
        for i in 0..=(n - m) {
            let sub = recurse(poset, m - 1, p - 1, n - 1 - i, q - 1);
            if !sub.is_zero() {
                total += sub * int_pow(poset.s(), i as usize);
            }
        }
        total
    }
    recurse(
        poset,
        lower.len as i64,
        lower.c_count as i64,
        upper.len as i64,
        upper.c_count as i64,
    )
}

/// `M(lower, upper)` by the recurrence iterated `depth` times in one shot:
///
/// ```text
/// M((m,p),(n,q)) = sum_{k=0}^{n-m} s^k C(depth+k-1, depth-1)
///                                  M((m-depth, p-depth), (n-depth-k, q-depth))
/// ```
///
/// where the inner `M` values come from the brute-force engine and malformed
/// types count as 0. Valid for `1 <= depth <= p <= m <= n` and `p <= q`;
/// `depth = p` collapses the left type to all-minimal `(m-p, 0)`.
pub fn count_m_iterated(
    poset: &GroundPoset,
    lower: WordType,
    upper: WordType,
    depth: usize,
) -> Result<BigInt, Error> {
    let (m, p) = (lower.len, lower.c_count);
    let (n, q) = (upper.len, upper.c_count);
    if depth == 0 || depth > p {
        return Err(Error::Hypothesis(format!(
            "iterated M needs 1 <= depth <= p, got depth={depth}, p={p}"
        )));
    }
    if m > n || p > q {
        return Err(Error::Hypothesis(format!(
            "iterated M needs p <= q and m <= n, got ({m},{p}) -> ({n},{q})"
        )));
    }
    let mut total = BigInt::zero();
    for k in 0..=(n - m) {
        let weight = binomial((depth + k - 1) as i64, depth as i64 - 1);
        if weight.is_zero() {
            continue;
        }
        let inner_len = n as i64 - depth as i64 - k as i64;
        let inner_c = q as i64 - depth as i64;
        let inner = if inner_len < 0 || inner_c < 0 || inner_c > inner_len {
            BigInt::zero()
        } else {
            count_m_bruteforce(
                poset,
                WordType::new(m - depth, p - depth).expect("depth <= p <= m"),
                WordType::new(inner_len as usize, inner_c as usize).expect("checked"),
            )
        };
        total += inner * int_pow(poset.s(), k) * weight;
    }
    Ok(total)
}

/// The single-level chain number
///
/// ```text
/// T(k,n) = - sum_{i=k}^{n} C(n,i) s^(n-i) (-1)^(n-i)
/// ```
///
/// for `0 <= k <= n`, and 0 for `k > n`. At `k = n` the sum collapses to the
/// single term `-1`, the convention the chain computations rely on. Equals
/// the signed count of chains `c^k < w_1 < … < w_r < c^n` with every
/// intermediate of length `n` (see `mobius::mob_pat`).
pub fn chain_t_closed(poset: &GroundPoset, k: usize, n: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let mut total = BigInt::zero();
    for i in k..=n {
        total += binomial(n as i64, i as i64) * int_pow(poset.s(), n - i) * alt_sign(n - i);
    }
    -total
}

/// The alternating sum `sum_{i=0}^{beta} (-1)^i M((alpha,0),(beta,i))`,
/// by brute force. Requires `1 <= alpha <= beta`; the interesting fact
/// (tested, not assumed) is that it always vanishes.
pub fn alternating_sum_m(
    poset: &GroundPoset,
    alpha: usize,
    beta: usize,
) -> Result<BigInt, Error> {
    if alpha == 0 || alpha > beta {
        return Err(Error::Hypothesis(format!(
            "alternating sum needs 1 <= alpha <= beta, got alpha={alpha}, beta={beta}"
        )));
    }
    let lower = WordType::new(alpha, 0).expect("0 <= alpha");
    let mut total = BigInt::zero();
    for i in 0..=beta {
        let upper = WordType::new(beta, i).expect("i <= beta");
        let term = count_m_bruteforce(poset, lower, upper) * alt_sign(i);
        total += term;
    }
    Ok(total)
}
