//! Materialized closed intervals `[u, v]` of the subword order.
//!
//! An [`Interval`] holds every word `z` with `u <= z <= v` together with the
//! full strict-order matrix between them. Elements are stored in the
//! canonical length-then-lex order, which is a linear extension of the
//! subword order, so `strict_less(i, j)` can only hold when `i < j` and all
//! downstream dynamic programming runs in a single forward pass over indices.
//!
//! Construction is generate-and-filter: every word of each length from `|u|`
//! to `|v|` is tested against both endpoints. That is exponential in `|v|`
//! and entirely adequate at the scale this crate targets (`s <= 3`,
//! `|v| <= 6`, a few thousand elements).

use num_bigint::BigInt;
use rayon::prelude::*;

use crate::arith::binomial;
use crate::error::Error;
use crate::words::{GroundPoset, Word};

/// A closed interval of the subword order with its strict-order matrix.
#[derive(Debug, Clone)]
pub struct Interval {
    poset: GroundPoset,
    elements: Vec<Word>,
    /// Row-major `n x n`; `strict[i * n + j]` iff `elements[i] < elements[j]`
    /// in the subword order. Only the upper triangle can be set, because the
    /// element order linearly extends the subword order.
    strict: Vec<bool>,
}

impl Interval {
    /// Enumerate `[lower, upper]`. Fails if either word uses letters outside
    /// the poset or if `lower` is not below `upper`.
    pub fn build(lower: &Word, upper: &Word, poset: &GroundPoset) -> Result<Interval, Error> {
        poset.check_word(lower)?;
        poset.check_word(upper)?;
        if !lower.leq(upper) {
            return Err(Error::NotComparable {
                lower: lower.to_string(),
                upper: upper.to_string(),
            });
        }

        let candidates: Vec<Word> = (lower.len()..=upper.len())
            .flat_map(|len| poset.words_of_len(len))
            .collect();
        let elements: Vec<Word> = candidates
            .into_par_iter()
            .filter(|z| lower.leq(z) && z.leq(upper))
            .collect();
        debug_assert!(elements.windows(2).all(|p| p[0] < p[1]));
        debug_assert_eq!(elements.first(), Some(lower));
        debug_assert_eq!(elements.last(), Some(upper));

        let n = elements.len();
        let mut strict = vec![false; n * n];
        strict
            .par_chunks_mut(n)
            .enumerate()
            .for_each(|(i, row)| {
                for (j, slot) in row.iter_mut().enumerate().skip(i + 1) {
                    *slot = elements[i].leq(&elements[j]);
                }
            });

        Ok(Interval {
            poset: *poset,
            elements,
            strict,
        })
    }

    pub fn poset(&self) -> &GroundPoset {
        &self.poset
    }

    /// Elements in canonical length-then-lex order. The first element is the
    /// lower endpoint, the last the upper endpoint.
    pub fn elements(&self) -> &[Word] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        // A successfully built interval always contains its endpoints.
        false
    }

    pub fn lower(&self) -> &Word {
        &self.elements[0]
    }

    pub fn upper(&self) -> &Word {
        &self.elements[self.elements.len() - 1]
    }

    pub fn lower_index(&self) -> usize {
        0
    }

    pub fn upper_index(&self) -> usize {
        self.elements.len() - 1
    }

    /// Index of a word among the elements, or `None` if it lies outside the
    /// interval. Binary search over the canonical order.
    pub fn index_of(&self, word: &Word) -> Option<usize> {
        self.elements.binary_search(word).ok()
    }

    /// Whether `elements[i] < elements[j]` strictly in the subword order.
    pub fn strict_less(&self, i: usize, j: usize) -> bool {
        self.strict[i * self.elements.len() + j]
    }

    /// Whether `elements[i] <= elements[j]` in the subword order.
    pub fn leq_by_index(&self, i: usize, j: usize) -> bool {
        i == j || self.strict_less(i, j)
    }

    /// Cover relations `(i, j)`: `elements[i] < elements[j]` with nothing
    /// strictly between. Pairs come out sorted by `i`, then `j`.
    pub fn cover_edges(&self) -> Vec<(usize, usize)> {
        let n = self.elements.len();
        (0..n)
            .into_par_iter()
            .flat_map_iter(|i| {
                let successors: Vec<usize> =
                    (i + 1..n).filter(|&j| self.strict_less(i, j)).collect();
                let mut covers = Vec::new();
                for &j in &successors {
                    if successors
                        .iter()
                        .all(|&k| k == j || !self.strict_less(k, j))
                    {
                        covers.push((i, j));
                    }
                }
                covers.into_iter()
            })
            .collect()
    }
}

/// Check that `[word, c^len]` is a Boolean lattice of the expected rank.
///
/// For a word of length `len` containing `k` letters `c`, the interval up to
/// `c^len` consists exactly of the letterwise upgrades `a_i -> c` of the
/// word, so it should be Boolean of rank `len - k`: `2^(len-k)` elements with
/// binomially distributed c-counts. Returns `Some(len - k)` when the element
/// count and all level sizes check out, `None` when some count is off (which
/// would indicate a bug, not a domain condition). The length is taken
/// explicitly and cross-checked against the word.
pub fn boolean_rank_check(
    word: &Word,
    len: usize,
    poset: &GroundPoset,
) -> Result<Option<usize>, Error> {
    poset.check_word(word)?;
    if word.len() != len {
        return Err(Error::LengthMismatch {
            expected: len,
            actual: word.len(),
        });
    }
    let base_c = word.c_count();
    let rank = len - base_c;
    let interval = Interval::build(word, &Word::c_power(len), poset)?;

    let expected_total = 1usize.checked_shl(rank as u32);
    if expected_total != Some(interval.len()) {
        return Ok(None);
    }
    let mut level_sizes = vec![0u64; rank + 1];
    for z in interval.elements() {
        let level = z.c_count() - base_c; // every element dominates `word` letterwise
        if z.len() != len || level > rank {
            return Ok(None);
        }
        level_sizes[level] += 1;
    }
    for (level, &size) in level_sizes.iter().enumerate() {
        if BigInt::from(size) != binomial(rank as i64, level as i64) {
            return Ok(None);
        }
    }
    Ok(Some(rank))
}
