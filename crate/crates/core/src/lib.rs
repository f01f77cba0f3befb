//! Engine for growing and analyzing Z-rule number triangles.
//!
//! The Z-rule combines two positive integers by `Z(a, b) = ab / gcd(a, b)^2`,
//! which acts on each prime exponent independently as an absolute difference.
//! Starting from a configurable first generation, repeated application grows a
//! triangular matrix whose per-prime exponent slices (tomographies) carry all
//! the structure: Sierpinski-type patterns, eventually periodic rows, finite
//! "soliton" clusters of high exponents, and a west edge with sharp extremes.
//!
//! Cell values are always kept in factored form — deep rows reach magnitudes
//! far beyond any fixed-width integer, while their factorizations stay short.
//!
//! Module map:
//! - [`arith`]: factored naturals, the Z-rule, and a least-prime-factor sieve;
//! - [`triangle`]: triangle growth, west edges, tomographies, reconstruction;
//! - [`gf2`]: packed bit rows for exponent slices of the square-free-kernel
//!   triangle, row periodicity, and binomial-parity words;
//! - [`structure`]: ruler sequences, Pascal-mod-2 machinery, the closed-form
//!   2-exponent predictor, soliton extraction, square-free-edge checking;
//! - [`west`]: closed forms and statistics for west-edge extremes.

pub mod arith;
pub mod factor;
pub mod gf2;
pub mod structure;
pub mod triangle;
pub mod west;

pub use arith::{FactoredNat, PrimeTable};
pub use triangle::{InitialGeneration, Tomography, Triangle, WestEdge};
