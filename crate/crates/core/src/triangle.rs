//! Growing Z-rule triangles from configurable first generations, and slicing
//! them: full triangles, memory-lean west-edge sweeps, per-prime exponent
//! tomographies (full or windowed), and reconstruction from tomographies.

use thiserror::Error;

use crate::arith::{FactoredNat, PrimeTable};
use crate::factor::is_prime_u64;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum TriangleError {
    #[error("triangle size must be at least 1")]
    ZeroSize,
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("initial generation provides {available} terms, {needed} needed")]
    InsufficientTerms { needed: usize, available: usize },
    #[error("window half-width {half_width} must be positive and smaller than the seed column {center}")]
    BadHalfWidth { half_width: u64, center: u64 },
    #[error("window depth {depth} must be in 1..={half_width}")]
    BadDepth { depth: usize, half_width: u64 },
    #[error("p^g does not fit in 64 bits")]
    SeedOverflow,
    #[error("no tomography supplied for prime {0}")]
    MissingPrime(u64),
    #[error("two tomographies supplied for prime {0}")]
    DuplicatePrime(u64),
    #[error("tomography for prime {0} does not cover a full {1}-row triangle")]
    IncompleteTomography(u64, usize),
}

/// First generation of a triangle.
///
/// The spaced and sectioned variants place the multiplicative identity 1 in
/// the gaps between multiples of `p`; at the exponent level those cells carry
/// an all-zero tower, which is exactly the intended evolution.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum InitialGeneration {
    /// 1, 2, 3, ...
    Naturals,
    /// Square-free kernels of 1, 2, 3, ...
    SquarefreeKernels,
    /// `p` at every multiple of `p`, 1 elsewhere.
    PSpaced(u64),
    /// `p^(exponent of p in n)` at every multiple of `p`, 1 elsewhere.
    PSection(u64),
    /// Caller-provided values.
    Explicit(Vec<FactoredNat>),
}

impl InitialGeneration {
    /// First `len` terms of the generation.
    pub fn first_row(&self, len: usize) -> Result<Vec<FactoredNat>, TriangleError> {
        if len == 0 {
            return Err(TriangleError::ZeroSize);
        }
        match self {
            InitialGeneration::Naturals => {
                let table = PrimeTable::new(len as u64);
                Ok((1..=len as u64)
                    .map(|n| table.factorize(n).expect("n within sieve range"))
                    .collect())
            }
            InitialGeneration::SquarefreeKernels => {
                let table = PrimeTable::new(len as u64);
                Ok((1..=len as u64)
                    .map(|n| {
                        table
                            .factorize(n)
                            .expect("n within sieve range")
                            .squarefree_kernel()
                    })
                    .collect())
            }
            InitialGeneration::PSpaced(p) => {
                let p = *p;
                if !is_prime_u64(p) {
                    return Err(TriangleError::NotPrime(p));
                }
                Ok((1..=len as u64)
                    .map(|n| {
                        if n % p == 0 {
                            FactoredNat::prime_power(p, 1)
                        } else {
                            FactoredNat::one()
                        }
                    })
                    .collect())
            }
            InitialGeneration::PSection(p) => {
                let p = *p;
                if !is_prime_u64(p) {
                    return Err(TriangleError::NotPrime(p));
                }
                Ok((1..=len as u64)
                    .map(|n| {
                        let mut e = 0u32;
                        let mut m = n;
                        while m % p == 0 {
                            m /= p;
                            e += 1;
                        }
                        FactoredNat::prime_power(p, e)
                    })
                    .collect())
            }
            InitialGeneration::Explicit(values) => {
                if values.len() < len {
                    return Err(TriangleError::InsufficientTerms {
                        needed: len,
                        available: values.len(),
                    });
                }
                Ok(values[..len].to_vec())
            }
        }
    }

    pub fn label(&self) -> String {
        match self {
            InitialGeneration::Naturals => "naturals".into(),
            InitialGeneration::SquarefreeKernels => "kernels".into(),
            InitialGeneration::PSpaced(p) => format!("pspaced:{p}"),
            InitialGeneration::PSection(p) => format!("psection:{p}"),
            InitialGeneration::Explicit(_) => "explicit".into(),
        }
    }
}

/// A fully materialized triangle: row `j` holds `K - j + 1` cells.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Triangle {
    origin: String,
    rows: Vec<Vec<FactoredNat>>,
}

impl Triangle {
    pub fn size(&self) -> usize {
        self.rows.len()
    }

    pub fn origin(&self) -> &str {
        &self.origin
    }

    /// Row `j`, 1-based.
    pub fn row(&self, j: usize) -> &[FactoredNat] {
        &self.rows[j - 1]
    }

    /// Cell `(j, k)`, both 1-based.
    pub fn cell(&self, j: usize, k: usize) -> &FactoredNat {
        &self.rows[j - 1][k - 1]
    }

    pub fn rows(&self) -> &[Vec<FactoredNat>] {
        &self.rows
    }

    /// First column, top to bottom.
    pub fn west_column(&self) -> Vec<FactoredNat> {
        self.rows.iter().map(|r| r[0].clone()).collect()
    }
}

/// Builds the full `K`-row triangle grown from `gen`.
pub fn build_triangle(gen: &InitialGeneration, k: usize) -> Result<Triangle, TriangleError> {
    let first = gen.first_row(k)?;
    let mut rows = Vec::with_capacity(k);
    rows.push(first);
    for j in 1..k {
        let prev = &rows[j - 1];
        let row: Vec<FactoredNat> = prev.windows(2).map(|w| w[0].z_rule(&w[1])).collect();
        rows.push(row);
    }
    Ok(Triangle {
        origin: gen.label(),
        rows,
    })
}

/// First column of the triangle; term `m` depends only on the first `m`
/// initial cells.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WestEdge {
    origin: String,
    terms: Vec<FactoredNat>,
}

impl WestEdge {
    pub fn origin(&self) -> &str {
        &self.origin
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Term `m`, 1-based.
    pub fn term(&self, m: usize) -> &FactoredNat {
        &self.terms[m - 1]
    }

    pub fn terms(&self) -> &[FactoredNat] {
        &self.terms
    }
}

/// First `m` west-edge terms of the triangle grown from `gen`.
///
/// Runs a trapezoidal sweep that keeps a single generation in memory and
/// drops columns once they can no longer influence the west edge.
pub fn west_edge(gen: &InitialGeneration, m: usize) -> Result<WestEdge, TriangleError> {
    let first = gen.first_row(m)?;
    let terms = packed::west_sweep(&first).unwrap_or_else(|| west_sweep_generic(first));
    Ok(WestEdge {
        origin: gen.label(),
        terms,
    })
}

fn west_sweep_generic(mut row: Vec<FactoredNat>) -> Vec<FactoredNat> {
    let mut terms = Vec::with_capacity(row.len());
    terms.push(row[0].clone());
    while row.len() > 1 {
        for k in 0..row.len() - 1 {
            row[k] = row[k].z_rule(&row[k + 1]);
        }
        row.pop();
        terms.push(row[0].clone());
    }
    terms
}

/// West-edge sweep over a dense split representation.
///
/// A prime whose exponent never exceeds 1 on the first row keeps a 0/1
/// exponent forever (the absolute difference of two values never exceeds
/// their maximum), so those primes live in a per-cell bitset where the rule
/// is a plain XOR. The handful of primes that start with higher exponents
/// get one byte each, updated lane-wise. Exponents above 255 fall back to
/// the generic factored sweep.
mod packed {
    use super::FactoredNat;

    pub(super) fn west_sweep(first: &[FactoredNat]) -> Option<Vec<FactoredNat>> {
        let n = first.len();
        let mut max_exp: std::collections::BTreeMap<u64, u32> = std::collections::BTreeMap::new();
        for cell in first {
            for &(p, e) in cell.factors() {
                let slot = max_exp.entry(p).or_insert(0);
                *slot = (*slot).max(e);
            }
        }
        if max_exp.values().any(|&e| e > u8::MAX as u32) {
            return None;
        }
        let byte_primes: Vec<u64> = max_exp
            .iter()
            .filter_map(|(&p, &e)| (e >= 2).then_some(p))
            .collect();
        let bit_primes: Vec<u64> = max_exp
            .iter()
            .filter_map(|(&p, &e)| (e == 1).then_some(p))
            .collect();
        let ns = byte_primes.len();
        let nw = bit_primes.len().div_ceil(64);
        let mut bytes = vec![0u8; n * ns];
        let mut words = vec![0u64; n * nw];
        for (k, cell) in first.iter().enumerate() {
            for &(p, e) in cell.factors() {
                match byte_primes.binary_search(&p) {
                    Ok(i) => bytes[k * ns + i] = e as u8,
                    Err(_) => {
                        let i = bit_primes.binary_search(&p).expect("classified above");
                        words[k * nw + i / 64] |= 1 << (i % 64);
                    }
                }
            }
        }
        fn decode(
            byte_primes: &[u64],
            bit_primes: &[u64],
            bytes: &[u8],
            words: &[u64],
        ) -> FactoredNat {
            let small = byte_primes
                .iter()
                .zip(bytes)
                .filter_map(|(&p, &e)| (e > 0).then_some((p, e as u32)));
            let large = words.iter().enumerate().flat_map(|(w, &bits)| {
                let mut bits = bits;
                std::iter::from_fn(move || {
                    (bits != 0).then(|| {
                        let b = bits.trailing_zeros() as usize;
                        bits &= bits - 1;
                        (bit_primes[w * 64 + b], 1u32)
                    })
                })
            });
            // Two sorted streams over disjoint primes; merge keeps order.
            let mut factors: Vec<(u64, u32)> = Vec::new();
            let (mut small, mut large) = (small.peekable(), large.peekable());
            loop {
                match (small.peek(), large.peek()) {
                    (Some(&(ps, _)), Some(&(pl, _))) => {
                        factors.push(if ps < pl {
                            small.next().unwrap()
                        } else {
                            large.next().unwrap()
                        });
                    }
                    (Some(_), None) => factors.push(small.next().unwrap()),
                    (None, Some(_)) => factors.push(large.next().unwrap()),
                    (None, None) => break,
                }
            }
            FactoredNat::from_sorted_unchecked(factors)
        }
        let mut terms = Vec::with_capacity(n);
        terms.push(decode(&byte_primes, &bit_primes, &bytes[..ns], &words[..nw]));
        for len in (2..=n).rev() {
            // In-place update left to right: cell k is rewritten only after
            // it has served as the left parent, and reads cell k+1 before
            // that cell is touched.
            for k in 0..len - 1 {
                if ns > 0 {
                    let (left, right) = bytes[k * ns..(k + 2) * ns].split_at_mut(ns);
                    for (x, &y) in left.iter_mut().zip(right.iter()) {
                        *x = x.abs_diff(y);
                    }
                }
                if nw > 0 {
                    let (left, right) = words[k * nw..(k + 2) * nw].split_at_mut(nw);
                    for (x, &y) in left.iter_mut().zip(right.iter()) {
                        *x ^= y;
                    }
                }
            }
            terms.push(decode(&byte_primes, &bit_primes, &bytes[..ns], &words[..nw]));
        }
        Some(terms)
    }
}

/// Exponent lattice of one prime across a triangle (or a window of one).
///
/// `None` cells are absent: their ancestry leaves the stored window, so their
/// values are unknown rather than zero. Full tomographies have no absent
/// cells.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tomography {
    prime: u64,
    /// 1-based first-row column of the leftmost stored cell.
    window_offset: u64,
    rows: Vec<Vec<Option<u16>>>,
}

impl Tomography {
    pub fn prime(&self) -> u64 {
        self.prime
    }

    pub fn window_offset(&self) -> u64 {
        self.window_offset
    }

    pub fn depth(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<Option<u16>>] {
        &self.rows
    }

    /// Row `j`, 1-based.
    pub fn row(&self, j: usize) -> &[Option<u16>] {
        &self.rows[j - 1]
    }

    /// Cell in absolute coordinates (row `j`, first-row-aligned column `col`),
    /// both 1-based; `None` when outside the stored window or absent.
    pub fn cell(&self, j: usize, col: u64) -> Option<u16> {
        if j == 0 || j > self.rows.len() || col < self.window_offset {
            return None;
        }
        let i = (col - self.window_offset) as usize;
        self.rows[j - 1].get(i).copied().flatten()
    }

    pub fn is_windowed(&self) -> bool {
        self.window_offset != 1 || self.rows.iter().any(|r| r.iter().any(|c| c.is_none()))
    }

    /// Largest present exponent.
    pub fn max_exponent(&self) -> u16 {
        self.rows
            .iter()
            .flat_map(|r| r.iter().copied().flatten())
            .max()
            .unwrap_or(0)
    }
}

fn abs_diff_step(prev: &[Option<u16>]) -> Vec<Option<u16>> {
    prev.windows(2)
        .map(|w| match (w[0], w[1]) {
            (Some(a), Some(b)) => Some(a.abs_diff(b)),
            _ => None,
        })
        .collect()
}

/// Full `K`-row tomography of `gen` at prime `p`: row 1 is the `p`-valuation
/// of the first generation and every later row takes absolute differences.
pub fn tomography(
    gen: &InitialGeneration,
    p: u64,
    k: usize,
) -> Result<Tomography, TriangleError> {
    if !is_prime_u64(p) {
        return Err(TriangleError::NotPrime(p));
    }
    let first = gen.first_row(k)?;
    let mut rows: Vec<Vec<Option<u16>>> = Vec::with_capacity(k);
    rows.push(
        first
            .iter()
            .map(|v| Some(v.valuation(p) as u16))
            .collect(),
    );
    for j in 1..k {
        let row = abs_diff_step(&rows[j - 1]);
        rows.push(row);
    }
    Ok(Tomography {
        prime: p,
        window_offset: 1,
        rows,
    })
}

/// Tomography of the naturals triangle restricted to a window of first-row
/// columns `p^g - half_width ..= p^g + half_width`, evolved `depth` rows.
///
/// Row 1 is exact: for an offset `0 < |d| <= half_width < p^g` the valuation
/// of `p^g + d` equals the valuation of `|d|`. Deeper cells whose ancestry
/// leaves the window are absent, not zero.
pub fn windowed_tomography(
    p: u64,
    g: u32,
    half_width: u64,
    depth: usize,
) -> Result<Tomography, TriangleError> {
    if !is_prime_u64(p) {
        return Err(TriangleError::NotPrime(p));
    }
    let center = (p as u128)
        .checked_pow(g)
        .filter(|&v| v <= u64::MAX as u128)
        .ok_or(TriangleError::SeedOverflow)? as u64;
    if half_width == 0 || half_width >= center {
        return Err(TriangleError::BadHalfWidth { half_width, center });
    }
    if depth == 0 || depth as u64 > half_width {
        return Err(TriangleError::BadDepth { depth, half_width });
    }
    let width = 2 * half_width + 1;
    let valuation = |n: u64| -> u16 {
        let mut e = 0u16;
        let mut m = n;
        while m % p == 0 {
            m /= p;
            e += 1;
        }
        e
    };
    let mut first: Vec<Option<u16>> = Vec::with_capacity(width as usize);
    for i in 0..width {
        let col = center - half_width + i;
        let v = if col == center {
            g as u16
        } else {
            valuation(col.abs_diff(center))
        };
        first.push(Some(v));
    }
    let mut rows = vec![first];
    for j in 1..depth {
        let prev = &rows[j - 1];
        // Keep constant width; the rightmost cell of each new row has a
        // parent outside the window and becomes absent.
        let mut row = abs_diff_step(prev);
        row.push(None);
        rows.push(row);
    }
    Ok(Tomography {
        prime: p,
        window_offset: center - half_width,
        rows,
    })
}

/// Rebuilds a triangle as the component-wise product of per-prime
/// tomographies, checking that every prime dividing a first-row entry of
/// `gen` is covered.
pub fn reconstruct(
    gen: &InitialGeneration,
    tomographies: &[Tomography],
    k: usize,
) -> Result<Triangle, TriangleError> {
    let first = gen.first_row(k)?;
    let mut sorted: Vec<&Tomography> = tomographies.iter().collect();
    sorted.sort_by_key(|t| t.prime);
    for pair in sorted.windows(2) {
        if pair[0].prime == pair[1].prime {
            return Err(TriangleError::DuplicatePrime(pair[0].prime));
        }
    }
    for t in &sorted {
        if t.window_offset != 1 || t.depth() < k {
            return Err(TriangleError::IncompleteTomography(t.prime, k));
        }
        for j in 1..=k {
            if t.row(j).len() < k - j + 1 || t.row(j)[..k - j + 1].iter().any(|c| c.is_none()) {
                return Err(TriangleError::IncompleteTomography(t.prime, k));
            }
        }
    }
    for value in &first {
        for &(p, _) in value.factors() {
            if sorted.binary_search_by_key(&p, |t| t.prime).is_err() {
                return Err(TriangleError::MissingPrime(p));
            }
        }
    }
    let mut rows = Vec::with_capacity(k);
    for j in 1..=k {
        let mut row = Vec::with_capacity(k - j + 1);
        for i in 0..k - j + 1 {
            let pairs = sorted.iter().filter_map(|t| {
                let e = t.row(j)[i].expect("checked complete");
                (e > 0).then_some((t.prime, e as u32))
            });
            row.push(FactoredNat::from_pairs(pairs));
        }
        rows.push(row);
    }
    Ok(Triangle {
        origin: gen.label(),
        rows,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn nat(n: u64) -> FactoredNat {
        FactoredNat::from_pairs(crate::factor::factor_u64(n))
    }

    fn row_values(cells: &[FactoredNat]) -> Vec<u64> {
        cells.iter().map(|c| c.value_u128().unwrap() as u64).collect()
    }

    #[test]
    fn naturals_triangle_top_rows() {
        let t = build_triangle(&InitialGeneration::Naturals, 12).unwrap();
        assert_eq!(
            row_values(t.row(2)),
            vec![2, 6, 12, 20, 30, 42, 56, 72, 90, 110, 132]
        );
        assert_eq!(row_values(&t.row(3)[..6]), vec![3, 2, 15, 6, 35, 12]);
        assert_eq!(
            row_values(t.row(4)),
            vec![6, 30, 10, 210, 420, 84, 1260, 1980, 330]
        );
    }

    #[test]
    fn all_ones_triangle_stays_one() {
        let gen = InitialGeneration::Explicit(vec![FactoredNat::one(); 5]);
        let t = build_triangle(&gen, 5).unwrap();
        for j in 1..=5 {
            assert!(t.row(j).iter().all(|c| c.is_one()));
        }
    }

    #[test]
    fn kernel_first_row() {
        let t = build_triangle(&InitialGeneration::SquarefreeKernels, 8).unwrap();
        assert_eq!(row_values(t.row(1)), vec![1, 2, 3, 2, 5, 6, 7, 2]);
    }

    #[test]
    fn zero_size_rejected() {
        assert_eq!(
            build_triangle(&InitialGeneration::Naturals, 0),
            Err(TriangleError::ZeroSize)
        );
    }

    #[test]
    fn explicit_generation_must_cover() {
        let gen = InitialGeneration::Explicit(vec![FactoredNat::one(); 3]);
        assert_eq!(
            west_edge(&gen, 4),
            Err(TriangleError::InsufficientTerms {
                needed: 4,
                available: 3
            })
        );
    }

    #[test]
    fn west_edge_naturals_prefix() {
        let w = west_edge(&InitialGeneration::Naturals, 16).unwrap();
        assert_eq!(
            row_values(w.terms()),
            vec![1, 2, 3, 6, 5, 15, 105, 70, 1, 5, 33, 55, 65, 273, 1001, 1430]
        );
    }

    #[test]
    fn west_edge_kernels_prefix() {
        let w = west_edge(&InitialGeneration::SquarefreeKernels, 16).unwrap();
        assert_eq!(
            row_values(w.terms()),
            vec![1, 2, 3, 3, 5, 15, 105, 35, 3, 15, 11, 165, 195, 91, 3003, 2145]
        );
    }

    #[test]
    fn west_edge_constant_generation_collapses() {
        let gen = InitialGeneration::Explicit(vec![nat(12); 9]);
        let w = west_edge(&gen, 9).unwrap();
        assert_eq!(row_values(&w.terms()[1..]), vec![1; 8]);
    }

    #[test]
    fn west_edge_matches_full_triangle() {
        for m in [1usize, 2, 17, 64, 256] {
            let w = west_edge(&InitialGeneration::Naturals, m).unwrap();
            let t = build_triangle(&InitialGeneration::Naturals, m).unwrap();
            assert_eq!(w.terms(), &t.west_column()[..]);
        }
    }

    #[test]
    fn tomography_first_row_is_ruler_sequence() {
        let t = tomography(&InitialGeneration::Naturals, 2, 16).unwrap();
        let got: Vec<u16> = t.row(1).iter().map(|c| c.unwrap()).collect();
        assert_eq!(got, vec![0, 1, 0, 2, 0, 1, 0, 3, 0, 1, 0, 2, 0, 1, 0, 4]);
    }

    #[test]
    fn kernel_two_tomography_dies_out() {
        let t = tomography(&InitialGeneration::SquarefreeKernels, 2, 24).unwrap();
        assert!(t.row(2).iter().all(|c| *c == Some(1)));
        for j in 3..=24 {
            assert!(t.row(j).iter().all(|c| *c == Some(0)));
        }
    }

    #[test]
    fn large_prime_tomography_is_zero() {
        let t = tomography(&InitialGeneration::Naturals, 31, 24).unwrap();
        for j in 1..=24 {
            assert!(t.row(j).iter().all(|c| *c == Some(0)));
        }
    }

    #[test]
    fn tomography_matches_triangle_valuations() {
        let tri = build_triangle(&InitialGeneration::Naturals, 30).unwrap();
        let table = PrimeTable::new(30);
        for p in table.primes() {
            let tomo = tomography(&InitialGeneration::Naturals, p, 30).unwrap();
            for j in 1..=30 {
                for k in 1..=30 - j + 1 {
                    assert_eq!(
                        tomo.row(j)[k - 1],
                        Some(tri.cell(j, k).valuation(p) as u16),
                        "p={p} j={j} k={k}"
                    );
                }
            }
        }
    }

    #[test]
    fn tomography_rows_obey_difference_recurrence() {
        let tomo = tomography(&InitialGeneration::Naturals, 3, 40).unwrap();
        for j in 2..=40 {
            let prev = tomo.row(j - 1);
            for (i, cell) in tomo.row(j).iter().enumerate() {
                assert_eq!(
                    *cell,
                    Some(prev[i].unwrap().abs_diff(prev[i + 1].unwrap()))
                );
            }
        }
    }

    #[test]
    fn windowed_center_column() {
        let t = windowed_tomography(2, 4, 8, 8).unwrap();
        assert_eq!(t.window_offset(), 8);
        assert_eq!(t.cell(1, 16), Some(4));
        // Off-center first-row values follow the valuation of the offset.
        assert_eq!(t.cell(1, 12), Some(2));
        assert_eq!(t.cell(1, 15), Some(0));
        assert_eq!(t.cell(1, 24), Some(3));
    }

    #[test]
    fn windowed_second_row_children() {
        let t = windowed_tomography(3, 2, 4, 3).unwrap();
        assert_eq!(t.cell(2, 8), Some(2));
        assert_eq!(t.cell(2, 9), Some(2));
    }

    #[test]
    fn windowed_depth_one() {
        let t = windowed_tomography(7, 3, 10, 1).unwrap();
        assert_eq!(t.depth(), 1);
        assert_eq!(t.cell(1, 343), Some(3));
    }

    #[test]
    fn windowed_matches_full_tomography() {
        let full = tomography(&InitialGeneration::Naturals, 3, 40).unwrap();
        let win = windowed_tomography(3, 2, 6, 6).unwrap();
        for j in 1..=6 {
            for col in 3..=15u64 {
                if let Some(v) = win.cell(j, col) {
                    assert_eq!(Some(v), full.cell(j, col), "j={j} col={col}");
                }
            }
        }
    }

    #[test]
    fn windowed_absent_cells_marked() {
        let t = windowed_tomography(3, 2, 4, 4).unwrap();
        // Row j stores width - (j - 1) trusted cells.
        for j in 1..=4usize {
            let absent = t.row(j).iter().filter(|c| c.is_none()).count();
            assert_eq!(absent, j - 1);
        }
    }

    #[test]
    fn windowed_parameter_checks() {
        assert!(matches!(
            windowed_tomography(2, 3, 8, 8),
            Err(TriangleError::BadHalfWidth { .. })
        ));
        assert!(matches!(
            windowed_tomography(2, 4, 8, 9),
            Err(TriangleError::BadDepth { .. })
        ));
        assert!(matches!(
            windowed_tomography(4, 2, 3, 2),
            Err(TriangleError::NotPrime(4))
        ));
    }

    #[test]
    fn reconstruct_naturals() {
        let gen = InitialGeneration::Naturals;
        let tomos: Vec<Tomography> = PrimeTable::new(12)
            .primes()
            .map(|p| tomography(&gen, p, 12).unwrap())
            .collect();
        let rebuilt = reconstruct(&gen, &tomos, 12).unwrap();
        assert_eq!(rebuilt, build_triangle(&gen, 12).unwrap());
    }

    #[test]
    fn reconstruct_single_section() {
        let gen = InitialGeneration::PSection(5);
        let tomos = vec![tomography(&gen, 5, 20).unwrap()];
        let rebuilt = reconstruct(&gen, &tomos, 20).unwrap();
        assert_eq!(rebuilt, build_triangle(&gen, 20).unwrap());
    }

    #[test]
    fn reconstruct_flags_missing_prime() {
        let gen = InitialGeneration::Naturals;
        let tomos: Vec<Tomography> = [2u64, 3, 5]
            .iter()
            .map(|&p| tomography(&gen, p, 12).unwrap())
            .collect();
        assert_eq!(
            reconstruct(&gen, &tomos, 12),
            Err(TriangleError::MissingPrime(7))
        );
    }

    #[test]
    fn reconstruct_rejects_windowed_input() {
        let gen = InitialGeneration::PSection(2);
        let tomos = vec![windowed_tomography(2, 4, 8, 8).unwrap()];
        assert!(matches!(
            reconstruct(&gen, &tomos, 8),
            Err(TriangleError::IncompleteTomography(2, 8))
        ));
    }
}
