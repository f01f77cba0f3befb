//! West-edge extremes of the square-free-kernel triangle near powers of two:
//! closed-form prime selectors, engine/formula cross tables, duplicate-free
//! orderings, and comparison statistics against the naturals triangle.

use thiserror::Error;

use crate::arith::{FactoredNat, PrimeTable};
use crate::factor::{factor_u64, is_prime_u64};
use crate::triangle::{west_edge, InitialGeneration, TriangleError, WestEdge};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum WestError {
    #[error("{0} is not an odd prime")]
    NotOddPrime(u64),
    #[error("prime {p} is out of range for index {m}")]
    PrimeOutOfRange { p: u64, m: u64 },
    #[error("index {0} must be even")]
    OddIndex(u64),
    #[error("power g={0} must be at least 2")]
    PowerTooSmall(u32),
    #[error("power g={0} is too large for this build")]
    PowerTooLarge(u32),
    #[error("west edge has {len} terms, {needed} needed")]
    EdgeTooShort { needed: u64, len: usize },
    #[error(transparent)]
    Triangle(#[from] TriangleError),
}

fn require_odd_prime(p: u64) -> Result<(), WestError> {
    if p < 3 || !is_prime_u64(p) {
        return Err(WestError::NotOddPrime(p));
    }
    Ok(())
}

/// Number of window blocks contributing to position 1 when jumping `m`
/// generations: the largest `L` such that `m + 1 - i*p` stays in `0..=m` for
/// every `i = 1..=L`. Closed form `floor((m+1)/p)`.
pub fn lambda(p: u64, m: u64) -> Result<u64, WestError> {
    require_odd_prime(p)?;
    if p > m {
        return Err(WestError::PrimeOutOfRange { p, m });
    }
    Ok((m + 1) / p)
}

/// Like [`lambda`] but with the additional parity constraint: counts the `i`
/// for which `m + 1 - i*p` is even and in `0..=m`. Requires even `m`; the
/// closed form is the number of odd `i <= floor((m+1)/p)`.
pub fn mu(p: u64, m: u64) -> Result<u64, WestError> {
    require_odd_prime(p)?;
    if m % 2 != 0 {
        return Err(WestError::OddIndex(m));
    }
    if p >= m {
        return Err(WestError::PrimeOutOfRange { p, m });
    }
    Ok(((m + 1) / p).div_ceil(2))
}

/// Which west-edge index near `2^g` to evaluate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WestExtreme {
    /// Index `2^g - 1`, the local maximum.
    Minus1,
    /// Index `2^g`.
    Exact,
    /// Index `2^g + 1`, the local minimum.
    Plus1,
}

/// Closed-form value of the square-free-kernel west edge at `2^g - 1`,
/// `2^g`, or `2^g + 1`, without growing any triangle.
///
/// The parity of [`mu`] (resp. [`lambda`]) selects the odd primes dividing
/// the term at `2^g - 1` (resp. `2^g`); when `2^g - 1` is itself prime it
/// divides the term at its own index. The term at `2^g + 1` is the
/// square-free kernel of `2^g + 1`.
pub fn west_p_extreme(g: u32, which: WestExtreme) -> Result<FactoredNat, WestError> {
    if g < 2 {
        return Err(WestError::PowerTooSmall(g));
    }
    if g > 40 {
        return Err(WestError::PowerTooLarge(g));
    }
    let two_g = 1u64 << g;
    match which {
        WestExtreme::Minus1 => {
            let m = two_g - 2;
            let table = PrimeTable::new(two_g - 3);
            let mut primes: Vec<(u64, u32)> = table
                .primes()
                .filter(|&p| p >= 3 && mu(p, m).expect("odd prime below even m") % 2 == 1)
                .map(|p| (p, 1))
                .collect();
            if is_prime_u64(two_g - 1) {
                primes.push((two_g - 1, 1));
            }
            Ok(FactoredNat::from_pairs(primes))
        }
        WestExtreme::Exact => {
            let m = two_g - 1;
            let table = PrimeTable::new(m);
            let primes = table
                .primes()
                .filter(|&p| p >= 3 && lambda(p, m).expect("odd prime at most m") % 2 == 1)
                .map(|p| (p, 1));
            Ok(FactoredNat::from_pairs(primes))
        }
        WestExtreme::Plus1 => {
            Ok(FactoredNat::from_pairs(factor_u64(two_g + 1)).squarefree_kernel())
        }
    }
}

/// Provenance of an extreme-value row.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ValueSource {
    Formula,
    Engine,
}

/// One west-edge value with its index, factorization and distinct-prime
/// count.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtremeRow {
    pub m: u64,
    pub value: FactoredNat,
    pub omega: usize,
    pub source: ValueSource,
}

impl ExtremeRow {
    fn new(m: u64, value: FactoredNat, source: ValueSource) -> Self {
        let omega = value.omega();
        ExtremeRow {
            m,
            value,
            omega,
            source,
        }
    }
}

/// Engine row plus, where the closed form applies, the formula row.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WestLagRow {
    pub g: u32,
    pub engine: ExtremeRow,
    pub formula: Option<ExtremeRow>,
}

impl WestLagRow {
    pub fn agrees(&self) -> Option<bool> {
        self.formula
            .as_ref()
            .map(|f| f.value == self.engine.value)
    }
}

/// Rows `m = 2^g - 2 ..= 2^g + 2` of the square-free-kernel west edge for
/// every `g` in range, engine-computed and formula-cross-checked at the
/// three indices the closed forms cover.
pub fn table_west_lag(
    g_range: std::ops::RangeInclusive<u32>,
) -> Result<Vec<WestLagRow>, WestError> {
    let g_max = *g_range.end();
    if *g_range.start() < 2 {
        return Err(WestError::PowerTooSmall(*g_range.start()));
    }
    if g_max > 30 {
        return Err(WestError::PowerTooLarge(g_max));
    }
    let needed = (1usize << g_max) + 2;
    let edge = west_edge(&InitialGeneration::SquarefreeKernels, needed)?;
    table_west_lag_of(&edge, g_range)
}

/// Same as [`table_west_lag`] over an already computed edge.
pub fn table_west_lag_of(
    edge: &WestEdge,
    g_range: std::ops::RangeInclusive<u32>,
) -> Result<Vec<WestLagRow>, WestError> {
    let mut rows = Vec::new();
    for g in g_range {
        if g < 2 {
            return Err(WestError::PowerTooSmall(g));
        }
        let two_g = 1u64 << g;
        for m in two_g - 2..=two_g + 2 {
            if edge.len() < m as usize {
                return Err(WestError::EdgeTooShort {
                    needed: m,
                    len: edge.len(),
                });
            }
            let engine = ExtremeRow::new(m, edge.term(m as usize).clone(), ValueSource::Engine);
            let which = match m.wrapping_sub(two_g) {
                u64::MAX => Some(WestExtreme::Minus1), // m = 2^g - 1
                0 => Some(WestExtreme::Exact),
                1 => Some(WestExtreme::Plus1),
                _ => None,
            };
            let formula = which
                .map(|w| west_p_extreme(g, w))
                .transpose()?
                .map(|value| ExtremeRow::new(m, value, ValueSource::Formula));
            rows.push(WestLagRow { g, engine, formula });
        }
    }
    Ok(rows)
}

/// Distinct west-edge values in increasing order.
pub fn unique_ordered(edge: &WestEdge) -> Vec<FactoredNat> {
    let mut values = edge.terms().to_vec();
    values.sort_by(|a, b| a.cmp_value(b));
    values.dedup();
    values
}

/// One tested index of the power-of-two west-edge identity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Conjecture3Case {
    pub g: u32,
    /// The west-edge index `2^g + 1`.
    pub index: u64,
    pub engine: FactoredNat,
    /// `(2^g + 1)` divided by the largest square dividing it.
    pub expected: FactoredNat,
    pub matches: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Conjecture3Report {
    pub cases: Vec<Conjecture3Case>,
    pub all_match: bool,
}

/// Compares the naturals west edge at indices `2^g + 1` against the
/// square-reduced value of `2^g + 1`, for `g = 0..=g_max` within budget.
pub fn check_conjecture3(g_max: u32, m_budget: usize) -> Result<Conjecture3Report, WestError> {
    let needed = ((1usize << g_max) + 1).min(m_budget);
    let edge = west_edge(&InitialGeneration::Naturals, needed)?;
    check_conjecture3_of(&edge, g_max)
}

/// Same as [`check_conjecture3`] over an already computed naturals edge;
/// tests every `g <= g_max` whose index fits in the edge.
pub fn check_conjecture3_of(
    edge: &WestEdge,
    g_max: u32,
) -> Result<Conjecture3Report, WestError> {
    let mut cases = Vec::new();
    for g in 0..=g_max {
        let index = (1u64 << g) + 1;
        if edge.len() < index as usize {
            return Err(WestError::EdgeTooShort {
                needed: index,
                len: edge.len(),
            });
        }
        let engine = edge.term(index as usize).clone();
        // Dividing out the largest square keeps each exponent's parity.
        let expected = FactoredNat::from_pairs(
            factor_u64(index)
                .into_iter()
                .map(|(p, e)| (p, e % 2)),
        );
        let matches = engine == expected;
        cases.push(Conjecture3Case {
            g,
            index,
            engine,
            expected,
            matches,
        });
    }
    let all_match = cases.iter().all(|c| c.matches);
    Ok(Conjecture3Report { cases, all_match })
}

/// Term-by-term comparison of the naturals and square-free-kernel west
/// edges: where they coincide, and how many extra primes each side carries
/// over the common divisor.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComparisonStats {
    pub k: usize,
    pub equality_indices: Vec<u64>,
    /// `surplus_naturals[f]` counts indices where the naturals term has
    /// exactly `f` distinct primes beyond the gcd.
    pub surplus_naturals: Vec<u64>,
    pub surplus_kernels: Vec<u64>,
}

impl ComparisonStats {
    pub fn equality_count(&self) -> usize {
        self.equality_indices.len()
    }
}

pub fn comparison_stats(k: usize) -> Result<ComparisonStats, WestError> {
    let edge_n = west_edge(&InitialGeneration::Naturals, k)?;
    let edge_p = west_edge(&InitialGeneration::SquarefreeKernels, k)?;
    Ok(comparison_stats_of(&edge_n, &edge_p, k))
}

pub fn comparison_stats_of(edge_n: &WestEdge, edge_p: &WestEdge, k: usize) -> ComparisonStats {
    assert!(edge_n.len() >= k && edge_p.len() >= k);
    let mut equality_indices = Vec::new();
    let mut surplus_naturals = Vec::new();
    let mut surplus_kernels = Vec::new();
    let bump = |hist: &mut Vec<u64>, f: usize| {
        if hist.len() <= f {
            hist.resize(f + 1, 0);
        }
        hist[f] += 1;
    };
    for m in 1..=k {
        let a = edge_n.term(m);
        let b = edge_p.term(m);
        if a == b {
            equality_indices.push(m as u64);
        }
        let g = a.gcd(b);
        let surplus = |v: &FactoredNat| {
            v.factors()
                .iter()
                .filter(|&&(p, e)| e > g.valuation(p))
                .count()
        };
        bump(&mut surplus_naturals, surplus(a));
        bump(&mut surplus_kernels, surplus(b));
    }
    ComparisonStats {
        k,
        equality_indices,
        surplus_naturals,
        surplus_kernels,
    }
}

/// Every prime up to `m` with a flag for whether it divides the naturals
/// west-edge term at `m`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DivisorListing {
    pub m: u64,
    pub value: FactoredNat,
    pub omega: usize,
    pub primes: Vec<(u64, bool)>,
}

pub fn divisor_listing(m: usize) -> Result<DivisorListing, WestError> {
    let edge = west_edge(&InitialGeneration::Naturals, m)?;
    Ok(divisor_listing_of(&edge, m))
}

pub fn divisor_listing_of(edge: &WestEdge, m: usize) -> DivisorListing {
    assert!(edge.len() >= m && m >= 1);
    let value = edge.term(m).clone();
    let primes = if m >= 2 {
        PrimeTable::new(m as u64)
            .primes()
            .map(|p| (p, value.valuation(p) > 0))
            .collect()
    } else {
        Vec::new()
    };
    DivisorListing {
        m: m as u64,
        omega: value.omega(),
        value,
        primes,
    }
}
