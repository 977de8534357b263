//! Exact arithmetic for the generalized subword order and its Möbius
//! function.
//!
//! The ground poset `P_s` has `s` incomparable minimal letters
//! `a_1, …, a_s` below one maximal letter `c`. Words over `P_s` are ordered
//! by generalized subword containment: `u <= w` when some strictly
//! increasing sequence of positions in `w` dominates `u` letter by letter.
//! This crate computes the Möbius function of that order by two independent
//! engines (the defining recursion and alternating chain counts), builds the
//! generalized Chebyshev polynomials
//!
//! ```text
//! T_0 = 1,   T_1 = (s-1) X,   T_{k+2} = s X T_{k+1} - T_k,
//! ```
//!
//! and machine-checks the identity connecting them on finite sweeps:
//! `μ(a_1^m, c^n)` is the coefficient of `X^(n-m)` in `T_(m+n)`. At `s = 2`
//! the polynomials are the classical Chebyshev polynomials of the first
//! kind.
//!
//! All values are exact (`num-bigint`); nothing is floating point except the
//! optional numeric evaluation of polynomials.
//!
//! ```
//! use subword_mobius::{GroundPoset, Word, parse_word};
//! use subword_mobius::mobius::mobius_recursive;
//! use subword_mobius::chebyshev::chebyshev_recurrence;
//!
//! let poset = GroundPoset::new(2).unwrap();
//! let lower = parse_word("a1", 2).unwrap();
//! let upper = parse_word("c,c", 2).unwrap();
//! let mu = mobius_recursive(&lower, &upper, &poset).unwrap();
//! // mu(a_1, c^2) = -3 = coefficient of X in T_3 = 4X^3 - 3X.
//! assert_eq!(mu, chebyshev_recurrence(2, 3).unwrap().coefficient(1));
//! ```

pub mod arith;
pub mod chebyshev;
pub mod counting;
pub mod error;
pub mod interval;
pub mod mobius;
pub mod verify;
pub mod words;

pub use error::Error;
pub use interval::Interval;
pub use words::{parse_word, Embedding, GroundPoset, Letter, Word};
