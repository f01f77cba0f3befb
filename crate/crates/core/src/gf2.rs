//! Bit-row machinery for the exponent slices of the square-free-kernel
//! triangle.
//!
//! Every row of such a slice is a 0/1 sequence, identified with a power
//! series over F2 whose monomials start at X^1. Passing to the next
//! generation is multiplication by (1+X)/X followed by dropping everything
//! below X^1, which on bits is `new[k] = row[k] XOR row[k+1]`. Because row 1
//! is periodic in the column direction with period `p`, so is every later
//! row, and a row may be compressed to `p` bits; compressed rows evolve with
//! wraparound and lose nothing.

use thiserror::Error;

use crate::factor::{divisors_sorted, is_prime_u64};

/// Default ceiling on the multiplicative-order exponent: period bounds
/// `2^n - 1` beyond this are rejected rather than factored at open-ended
/// cost.
pub const DEFAULT_INDEX_CEILING: u32 = 60;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum Gf2Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("prime 2 has no odd-prime row dynamics")]
    EvenPrime,
    #[error("jump distance {m} must be smaller than the row length {len}")]
    JumpTooFar { m: u64, len: usize },
    #[error("row carries no column period; cannot compress")]
    NoColumnPeriod,
    #[error("row of length {len} is shorter than its column period {period}")]
    RowTooShort { len: usize, period: usize },
    #[error("declared column period {period} is violated at position {position}")]
    PeriodViolation { period: usize, position: usize },
    #[error("order of 2 modulo {p} is {index}, above the ceiling {ceiling}")]
    IndexCeilingExceeded { p: u64, index: u32, ceiling: u32 },
}

/// Parity of a binomial coefficient `C(n, k)` by digit domination: odd
/// exactly when every binary digit of `k` is dominated by the digit of `n`.
pub fn binom_odd(n: u64, k: u64) -> bool {
    k & n == k
}

/// A truncated 0/1 row: bits for positions `1..=len`, packed 64 per word,
/// little-endian bit order inside a word.
///
/// `column_period = Some(p)` records that the row is known to repeat with
/// period `p` along the columns. A row whose length equals its column period
/// is *compressed*: it stands for the whole infinite periodic row, and
/// [`step`](BitRow::step)/[`jump`](BitRow::jump) wrap around instead of
/// truncating.
#[derive(Debug, Clone)]
pub struct BitRow {
    words: Vec<u64>,
    len: usize,
    column_period: Option<usize>,
}

impl PartialEq for BitRow {
    fn eq(&self, other: &Self) -> bool {
        self.len == other.len && self.words == other.words
    }
}

impl Eq for BitRow {}

fn word_count(len: usize) -> usize {
    len.div_ceil(64)
}

impl BitRow {
    pub fn zero(len: usize) -> Self {
        BitRow {
            words: vec![0; word_count(len)],
            len,
            column_period: None,
        }
    }

    /// Builds from booleans for positions 1, 2, 3, ...
    pub fn from_bits(bits: impl IntoIterator<Item = bool>) -> Self {
        let mut words = Vec::new();
        let mut len = 0usize;
        for b in bits {
            if len % 64 == 0 {
                words.push(0u64);
            }
            if b {
                *words.last_mut().unwrap() |= 1 << (len % 64);
            }
            len += 1;
        }
        BitRow {
            words,
            len,
            column_period: None,
        }
    }

    /// Row 1 of the `p`-exponent slice of the square-free-kernel triangle:
    /// ones exactly at the multiples of `p`, with column period `p`.
    pub fn p_spaced_row(p: u64, len: usize) -> Self {
        let mut row = BitRow::zero(len);
        let mut k = p as usize;
        while k <= len {
            row.set(k, true);
            k += p as usize;
        }
        row.column_period = Some(p as usize);
        row
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn column_period(&self) -> Option<usize> {
        self.column_period
    }

    pub fn with_column_period(mut self, period: Option<usize>) -> Self {
        self.column_period = period;
        self
    }

    pub fn is_compressed(&self) -> bool {
        self.column_period == Some(self.len) && self.len > 0
    }

    /// Bit at 1-based position `k`.
    pub fn get(&self, k: usize) -> bool {
        assert!(k >= 1 && k <= self.len, "position {k} out of 1..={}", self.len);
        self.words[(k - 1) / 64] >> ((k - 1) % 64) & 1 == 1
    }

    fn set(&mut self, k: usize, value: bool) {
        let (w, b) = ((k - 1) / 64, (k - 1) % 64);
        if value {
            self.words[w] |= 1 << b;
        } else {
            self.words[w] &= !(1 << b);
        }
    }

    pub fn iter_bits(&self) -> impl Iterator<Item = bool> + '_ {
        (1..=self.len).map(|k| self.get(k))
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    fn mask_tail(&mut self) {
        self.words.truncate(word_count(self.len));
        if self.len % 64 != 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= (1u64 << (self.len % 64)) - 1;
            }
        }
    }

    /// First `n` positions as a new row.
    pub fn truncated(&self, n: usize) -> Self {
        assert!(n <= self.len);
        let mut row = BitRow {
            words: self.words[..word_count(n)].to_vec(),
            len: n,
            column_period: self.column_period,
        };
        row.mask_tail();
        row
    }

    /// Shifts every position down by `s`: bit `k` of the result is bit
    /// `k + s` of `self`; the result keeps `len - s` positions.
    fn shifted_down(&self, s: usize) -> Self {
        let new_len = self.len - s;
        let (ws, bs) = (s / 64, s % 64);
        let mut words = vec![0u64; word_count(new_len)];
        for (i, w) in words.iter_mut().enumerate() {
            let lo = self.words.get(i + ws).copied().unwrap_or(0);
            *w = if bs == 0 {
                lo
            } else {
                let hi = self.words.get(i + ws + 1).copied().unwrap_or(0);
                lo >> bs | hi << (64 - bs)
            };
        }
        let mut row = BitRow {
            words,
            len: new_len,
            column_period: self.column_period,
        };
        row.mask_tail();
        row
    }

    fn xor_assign(&mut self, other: &Self) {
        for (w, o) in self.words.iter_mut().zip(&other.words) {
            *w ^= o;
        }
    }

    /// One generation: `new[k] = row[k] XOR row[k+1]`.
    ///
    /// On a compressed row the index wraps and the length is preserved; on a
    /// truncated row the last position is dropped since its right parent is
    /// unknown. There is never an influence from the left of position 1.
    pub fn step(&self) -> Self {
        if self.is_compressed() {
            return self.cyclic_jump(1);
        }
        if self.len == 0 {
            return self.clone();
        }
        let mut out = self.shifted_down(1);
        let keep = self.truncated(self.len - 1);
        out.xor_assign(&keep);
        out.mask_tail();
        out
    }

    /// `m` generations at once: `result[k]` XORs `row[k+j]` over exactly the
    /// `j` in `0..=m` with `C(m, j)` odd (digit domination).
    ///
    /// Truncated rows keep `len - m` determined positions and reject
    /// `m >= len`; compressed rows accept any `m` and keep their length.
    pub fn jump(&self, m: u64) -> Result<Self, Gf2Error> {
        if self.is_compressed() {
            return Ok(self.cyclic_jump(m));
        }
        if m >= self.len as u64 {
            return Err(Gf2Error::JumpTooFar { m, len: self.len });
        }
        let m = m as usize;
        let mut out = BitRow::zero(self.len - m);
        out.column_period = self.column_period;
        // Enumerate the submasks of m, i.e. the j with C(m, j) odd.
        let mut j = m;
        loop {
            out.xor_assign(&self.shifted_down(j).truncated(out.len));
            if j == 0 {
                break;
            }
            j = (j - 1) & m;
        }
        out.mask_tail();
        Ok(out)
    }

    /// Folds the row to its first `column_period` positions after checking
    /// the declared periodicity actually holds on the stored range.
    pub fn compress(&self) -> Result<Self, Gf2Error> {
        let p = self.column_period.ok_or(Gf2Error::NoColumnPeriod)?;
        if self.len < p {
            return Err(Gf2Error::RowTooShort {
                len: self.len,
                period: p,
            });
        }
        for k in 1..=self.len - p {
            if self.get(k) != self.get(k + p) {
                return Err(Gf2Error::PeriodViolation {
                    period: p,
                    position: k,
                });
            }
        }
        Ok(self.truncated(p))
    }

    /// Expands a compressed row back to `len` positions.
    pub fn expand(&self, len: usize) -> Self {
        assert!(self.is_compressed(), "expand requires a compressed row");
        let p = self.len;
        let mut row = BitRow::zero(len);
        for k in 1..=len {
            row.set(k, self.get((k - 1) % p + 1));
        }
        row.column_period = Some(p);
        row
    }

    /// Jump on a compressed row: multiplication by `(1 + Y^(p-1))^m` in
    /// F2[Y]/(Y^p + 1), evaluated by square-and-multiply.
    fn cyclic_jump(&self, m: u64) -> Self {
        debug_assert!(self.is_compressed());
        let p = self.len;
        let poly = CyclicPoly::from_row(self);
        let mut unit = CyclicPoly::zero(p);
        unit.toggle(0);
        unit.toggle(p - 1);
        let mut acc = poly;
        let mut base = unit;
        let mut e = m;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc.to_row(self.column_period)
    }
}

/// Dense polynomial over F2 modulo `Y^p + 1`, indexed by residue.
struct CyclicPoly {
    words: Vec<u64>,
    p: usize,
}

impl CyclicPoly {
    fn zero(p: usize) -> Self {
        CyclicPoly {
            words: vec![0; word_count(p)],
            p,
        }
    }

    fn get(&self, r: usize) -> bool {
        self.words[r / 64] >> (r % 64) & 1 == 1
    }

    fn toggle(&mut self, r: usize) {
        self.words[r / 64] ^= 1 << (r % 64);
    }

    /// Position `k` of a row corresponds to residue `k mod p`.
    fn from_row(row: &BitRow) -> Self {
        let p = row.len;
        let mut poly = CyclicPoly::zero(p);
        for k in 1..=p {
            if row.get(k) {
                poly.toggle(k % p);
            }
        }
        poly
    }

    fn to_row(&self, column_period: Option<usize>) -> BitRow {
        let p = self.p;
        let mut row = BitRow::zero(p);
        for k in 1..=p {
            if self.get(k % p) {
                row.set(k, true);
            }
        }
        row.column_period = column_period;
        row
    }

    fn mul(&self, other: &Self) -> Self {
        let p = self.p;
        let mut out = CyclicPoly::zero(p);
        for r in 0..p {
            if self.get(r) {
                for q in 0..p {
                    if other.get(q) {
                        out.toggle((r + q) % p);
                    }
                }
            }
        }
        out
    }
}

/// Multiplicative order of 2 modulo an odd prime `p`.
pub fn order_of_two(p: u64) -> Result<u32, Gf2Error> {
    if p == 2 {
        return Err(Gf2Error::EvenPrime);
    }
    if !is_prime_u64(p) {
        return Err(Gf2Error::NotPrime(p));
    }
    let pow_mod = |mut e: u64| -> u64 {
        let mut acc = 1u64;
        let mut base = 2u64 % p;
        while e > 0 {
            if e & 1 == 1 {
                acc = (acc as u128 * base as u128 % p as u128) as u64;
            }
            base = (base as u128 * base as u128 % p as u128) as u64;
            e >>= 1;
        }
        acc
    };
    for d in divisors_sorted(p - 1) {
        if pow_mod(d) == 1 {
            return Ok(d as u32);
        }
    }
    unreachable!("2^(p-1) = 1 mod p for odd prime p");
}

/// Minimal row period of the `p`-exponent slice of the square-free-kernel
/// triangle, together with the divisibility bound and the repeating witness
/// row.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PeriodReport {
    pub prime: u64,
    /// Rows before the periodic part begins (row 1 only).
    pub pre_period_rows: u32,
    /// Minimal period: row `2 + period` equals row 2 and no proper divisor
    /// of the period does the same.
    pub period: u64,
    /// `2^(order of 2 mod p) - 1`; the period always divides it.
    pub bound: u64,
    /// Row 2 compressed to `p` bits.
    pub witness: BitRow,
}

/// Finds the minimal period with the default exponent ceiling.
pub fn minimal_period(p: u64) -> Result<PeriodReport, Gf2Error> {
    minimal_period_bounded(p, DEFAULT_INDEX_CEILING)
}

/// Finds the minimal period, testing divisors of `2^ind - 1` in increasing
/// order on rows compressed to `p` bits.
pub fn minimal_period_bounded(p: u64, ceiling: u32) -> Result<PeriodReport, Gf2Error> {
    let index = order_of_two(p)?;
    if index > ceiling {
        return Err(Gf2Error::IndexCeilingExceeded { p, index, ceiling });
    }
    let bound = (1u64 << index) - 1;
    let row1 = BitRow::p_spaced_row(p, p as usize)
        .compress()
        .expect("row 1 is p-periodic by construction");
    let row2 = row1.step();
    for d in divisors_sorted(bound) {
        if row2.cyclic_jump(d) == row2 {
            let pre_period_rows = u32::from(row1.cyclic_jump(d) != row1);
            return Ok(PeriodReport {
                prime: p,
                pre_period_rows,
                period: d,
                bound,
                witness: row2,
            });
        }
    }
    unreachable!("the bound itself is always a period");
}

/// The `p`-exponent of west-edge term `m` of the square-free-kernel
/// triangle: jump row 1 by `m - 1` generations and read position 1.
pub fn west_bit(p: u64, m: u64) -> Result<u8, Gf2Error> {
    if !is_prime_u64(p) {
        return Err(Gf2Error::NotPrime(p));
    }
    assert!(m >= 1, "west-edge terms are 1-based");
    let row1 = BitRow::p_spaced_row(p, p as usize)
        .compress()
        .expect("row 1 is p-periodic by construction");
    Ok(u8::from(row1.cyclic_jump(m - 1).get(1)))
}

/// Row period versus west-edge period for one prime.
///
/// The west sequence inherits the row period, but could in principle repeat
/// faster; both are computed and compared rather than assumed equal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WestPeriodReport {
    pub prime: u64,
    pub row_period: u64,
    pub west_period: u64,
    pub agree: bool,
}

pub fn west_period(p: u64) -> Result<WestPeriodReport, Gf2Error> {
    let report = minimal_period(p)?;
    let pi = report.period;
    let mut row = BitRow::p_spaced_row(p, p as usize)
        .compress()
        .expect("row 1 is p-periodic by construction");
    let mut bits = Vec::with_capacity(2 * pi as usize);
    for _ in 0..2 * pi {
        row = row.step();
        bits.push(row.get(1));
    }
    let west_period = divisors_sorted(pi)
        .into_iter()
        .find(|&d| (0..pi as usize).all(|j| bits[j] == bits[j + d as usize]))
        .expect("the row period bounds the west period");
    Ok(WestPeriodReport {
        prime: p,
        row_period: pi,
        west_period,
        agree: west_period == pi,
    })
}

/// Run-length encoded 0/1 word, rendered as space-separated blocks
/// `symbol^count` (bare symbol when the count is 1).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunLengthWord {
    runs: Vec<(u8, u64)>,
}

impl RunLengthWord {
    pub fn from_bits(bits: impl IntoIterator<Item = u8>) -> Self {
        let mut runs: Vec<(u8, u64)> = Vec::new();
        for b in bits {
            match runs.last_mut() {
                Some((symbol, count)) if *symbol == b => *count += 1,
                _ => runs.push((b, 1)),
            }
        }
        RunLengthWord { runs }
    }

    pub fn runs(&self) -> &[(u8, u64)] {
        &self.runs
    }

    pub fn expanded_len(&self) -> u64 {
        self.runs.iter().map(|&(_, c)| c).sum()
    }

    pub fn expand(&self) -> Vec<u8> {
        let mut out = Vec::with_capacity(self.expanded_len() as usize);
        for &(s, c) in &self.runs {
            out.extend(std::iter::repeat(s).take(c as usize));
        }
        out
    }
}

impl std::fmt::Display for RunLengthWord {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut first = true;
        for &(symbol, count) in &self.runs {
            if !first {
                write!(f, " ")?;
            }
            first = false;
            if count == 1 {
                write!(f, "{symbol}")?;
            } else {
                write!(f, "{symbol}^{count}")?;
            }
        }
        Ok(())
    }
}

/// Parities of `C(h, k)` for `k = 0..=h`, run-length encoded.
pub fn binom_parity_word(h: u64) -> RunLengthWord {
    assert!(h >= 1);
    RunLengthWord::from_bits((0..=h).map(|k| u8::from(binom_odd(h, k))))
}
