//! The ground poset `P_s`, words over it, and the generalized subword order.
//!
//! `P_s` consists of `s` pairwise incomparable minimal letters `a_1, …, a_s`
//! below a single maximal letter `c`. A word `u` sits below a word `w` when
//! some strictly increasing choice of positions in `w` dominates `u` letter by
//! letter in `P_s`; such a choice of positions is an [`Embedding`]. With one
//! letter (`s = 1`) this is the classical subword/subsequence order on a
//! two-letter alphabet.
//!
//! Comparisons are decided greedily: scanning the host left to right and
//! consuming the earliest usable position is exact for this order, because any
//! embedding can be pushed left one position at a time. The same argument
//! mirrored gives the rightmost embedding, which dominates every other
//! embedding componentwise. `embeddings_in` enumerates all embeddings by
//! backtracking and is deliberately kept around as the slow reference the
//! greedy routines are tested against.

use std::fmt;

use itertools::Itertools;

use crate::error::{Error, ParseErrorKind};

/// A letter of the ground poset: one of the minimal letters `a_1, …, a_s`
/// (1-based subscript) or the maximal letter `c`.
///
/// The derived `Ord` is *not* the poset order — it is the tie-break used by
/// the canonical enumeration order on words (`a_1 < … < a_s < c`). The poset
/// order is [`Letter::leq`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Letter {
    A(u32),
    C,
}

impl Letter {
    /// The order of `P_s`: each `a_i` is below itself and `c`; distinct
    /// minimal letters are incomparable.
    pub fn leq(self, other: Letter) -> bool {
        match (self, other) {
            (Letter::A(i), Letter::A(j)) => i == j,
            (_, Letter::C) => true,
            (Letter::C, Letter::A(_)) => false,
        }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Letter::A(i) => write!(f, "a{i}"),
            Letter::C => write!(f, "c"),
        }
    }
}

/// A finite word over the ground poset. Plain value type; equality is
/// letter-sequence equality.
///
/// `Ord` is the canonical enumeration order: shorter words first, ties broken
/// lexicographically with `a_1 < … < a_s < c`. This is a linear extension of
/// the subword order — `u.leq(&w)` implies `u <= w` here — which is what lets
/// interval code process elements in one forward pass. It is *not* the
/// subword order itself; that is [`Word::leq`].
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn new(letters: Vec<Letter>) -> Word {
        Word(letters)
    }

    pub fn empty() -> Word {
        Word(Vec::new())
    }

    /// The word `letter^count`.
    pub fn repeat(letter: Letter, count: usize) -> Word {
        Word(vec![letter; count])
    }

    /// The word `c^count`, the maximum of its length level.
    pub fn c_power(count: usize) -> Word {
        Word::repeat(Letter::C, count)
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Number of `c` letters, i.e. the second component of the word's type.
    pub fn c_count(&self) -> usize {
        self.0.iter().filter(|&&l| l == Letter::C).count()
    }

    /// Whether `self` is below `host` in the subword order, decided by the
    /// greedy left-to-right scan: each pattern letter consumes the earliest
    /// remaining host position that dominates it.
    pub fn leq(&self, host: &Word) -> bool {
        let mut positions = host.0.iter();
        'pattern: for &p in &self.0 {
            for &h in positions.by_ref() {
                if p.leq(h) {
                    continue 'pattern;
                }
            }
            return false;
        }
        true
    }

    /// The componentwise largest embedding of `self` into `host`, found by
    /// the mirrored greedy scan: match the last pattern letter as far right
    /// as possible, then work leftwards. `None` when `self` is not below
    /// `host`.
    pub fn rightmost_embedding_in(&self, host: &Word) -> Option<Embedding> {
        let mut positions = vec![0usize; self.0.len()];
        let mut bound = host.0.len(); // exclusive upper bound for the next match
        for (i, &p) in self.0.iter().enumerate().rev() {
            let found = host.0[..bound].iter().rposition(|&h| p.leq(h))?;
            positions[i] = found + 1;
            bound = found;
        }
        Some(Embedding(positions))
    }

    /// Every embedding of `self` into `host`, in lexicographic order of
    /// position sequences. Exhaustive backtracking — exponential in the worst
    /// case, retained as the reference implementation for the greedy scans.
    pub fn embeddings_in(&self, host: &Word) -> Vec<Embedding> {
        fn go(
            pattern: &[Letter],
            host: &[Letter],
            start: usize,
            prefix: &mut Vec<usize>,
            out: &mut Vec<Embedding>,
        ) {
            let Some((&p, rest)) = pattern.split_first() else {
                out.push(Embedding(prefix.clone()));
                return;
            };
            for j in start..host.len() {
                if p.leq(host[j]) {
                    prefix.push(j + 1);
                    go(rest, host, j + 1, prefix, out);
                    prefix.pop();
                }
            }
        }
        let mut out = Vec::new();
        go(&self.0, &host.0, 0, &mut Vec::new(), &mut out);
        out
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "e");
        }
        write!(f, "{}", self.0.iter().join(","))
    }
}

/// A strictly increasing sequence of 1-based positions in a host word
/// witnessing one way a pattern word embeds into it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Embedding(Vec<usize>);

impl Embedding {
    pub fn positions(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

/// The ground poset `P_s`, carrying only its size. Validated once at
/// construction; the letter- and word-level operations that take a poset
/// check their arguments against `s` and report rather than panic.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GroundPoset {
    s: u32,
}

impl GroundPoset {
    pub fn new(s: u32) -> Result<GroundPoset, Error> {
        if s == 0 {
            return Err(Error::InvalidGroundSize);
        }
        Ok(GroundPoset { s })
    }

    pub fn s(&self) -> u32 {
        self.s
    }

    /// All letters of `P_s` in canonical order `a_1, …, a_s, c`.
    pub fn letters(&self) -> impl Iterator<Item = Letter> {
        (1..=self.s).map(Letter::A).chain(std::iter::once(Letter::C))
    }

    pub fn check_letter(&self, letter: Letter) -> Result<(), Error> {
        match letter {
            Letter::A(i) if i == 0 || i > self.s => {
                Err(Error::SubscriptOutOfRange { index: i, s: self.s })
            }
            _ => Ok(()),
        }
    }

    pub fn check_word(&self, word: &Word) -> Result<(), Error> {
        word.letters()
            .iter()
            .try_for_each(|&l| self.check_letter(l))
    }

    /// Letter comparison in `P_s` with subscript validation.
    pub fn letter_leq(&self, x: Letter, y: Letter) -> Result<bool, Error> {
        self.check_letter(x)?;
        self.check_letter(y)?;
        Ok(x.leq(y))
    }

    /// Word comparison in the subword order with validation.
    pub fn word_leq(&self, u: &Word, w: &Word) -> Result<bool, Error> {
        self.check_word(u)?;
        self.check_word(w)?;
        Ok(u.leq(w))
    }

    /// Validated wrapper around [`Word::rightmost_embedding_in`].
    pub fn rightmost_embedding(&self, u: &Word, w: &Word) -> Result<Option<Embedding>, Error> {
        self.check_word(u)?;
        self.check_word(w)?;
        Ok(u.rightmost_embedding_in(w))
    }

    /// Validated wrapper around [`Word::embeddings_in`].
    pub fn enumerate_embeddings(&self, u: &Word, w: &Word) -> Result<Vec<Embedding>, Error> {
        self.check_word(u)?;
        self.check_word(w)?;
        Ok(u.embeddings_in(w))
    }

    /// All `(s+1)^len` words of the given length, in canonical
    /// (lexicographic) order.
    pub fn words_of_len(&self, len: usize) -> Vec<Word> {
        if len == 0 {
            return vec![Word::empty()];
        }
        let alphabet: Vec<Letter> = self.letters().collect();
        itertools::repeat_n(alphabet, len)
            .multi_cartesian_product()
            .map(Word::new)
            .collect()
    }

    /// All words of length at most `len`, in canonical order.
    pub fn words_up_to_len(&self, len: usize) -> Vec<Word> {
        (0..=len).flat_map(|l| self.words_of_len(l)).collect()
    }
}

/// Parse the textual word syntax: comma-separated letters `a<digits>` and
/// `c`, or the single token `e` for the empty word. `s` bounds the
/// subscripts. Examples: `e`, `c`, `a1,c,a2`.
pub fn parse_word(text: &str, s: u32) -> Result<Word, Error> {
    if text == "e" {
        return Ok(Word::empty());
    }
    let mut letters = Vec::new();
    for (index, token) in text.split(',').enumerate() {
        let position = index + 1;
        if token.is_empty() {
            return Err(Error::Parse {
                position,
                kind: ParseErrorKind::EmptyToken,
            });
        }
        if token == "c" {
            letters.push(Letter::C);
            continue;
        }
        match token.strip_prefix('a') {
            Some(digits) if !digits.is_empty() && digits.bytes().all(|b| b.is_ascii_digit()) => {
                let subscript: u64 = digits.parse().map_err(|_| Error::Parse {
                    position,
                    kind: ParseErrorKind::UnknownToken(token.to_string()),
                })?;
                if subscript == 0 {
                    return Err(Error::Parse {
                        position,
                        kind: ParseErrorKind::SubscriptZero,
                    });
                }
                if subscript > u64::from(s) {
                    return Err(Error::Parse {
                        position,
                        kind: ParseErrorKind::SubscriptExceedsS {
                            index: subscript,
                            s,
                        },
                    });
                }
                letters.push(Letter::A(subscript as u32));
            }
            _ => {
                return Err(Error::Parse {
                    position,
                    kind: ParseErrorKind::UnknownToken(token.to_string()),
                })
            }
        }
    }
    Ok(Word::new(letters))
}
