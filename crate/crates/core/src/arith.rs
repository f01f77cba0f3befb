//! Exact arithmetic on positive integers kept in factored form, plus the
//! least-prime-factor sieve used to factor first-row entries.
//!
//! Everything downstream of the first generation stays factored: the Z-rule,
//! gcds, kernels and valuations are all linear in the number of distinct
//! primes, regardless of how astronomically large the represented value is.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigUint;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ArithError {
    #[error("{0} is outside the sieve range 1..={1}")]
    OutOfSieveRange(u64, u64),
    #[error("{0} is not prime")]
    NotPrime(u64),
}

/// A positive integer stored as its sorted prime factorization.
///
/// The empty factor list denotes 1. Primes are strictly increasing and every
/// stored exponent is at least 1; all constructors normalize to that shape.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct FactoredNat {
    factors: Vec<(u64, u32)>,
}

impl FactoredNat {
    pub fn one() -> Self {
        FactoredNat { factors: Vec::new() }
    }

    pub fn is_one(&self) -> bool {
        self.factors.is_empty()
    }

    /// A single prime power `p^e` (`e = 0` gives 1).
    pub fn prime_power(p: u64, e: u32) -> Self {
        debug_assert!(crate::factor::is_prime_u64(p), "{p} must be prime");
        if e == 0 {
            return Self::one();
        }
        FactoredNat { factors: vec![(p, e)] }
    }

    /// Builds from arbitrary `(prime, exponent)` pairs; duplicates are merged
    /// by adding exponents and zero exponents are dropped.
    pub fn from_pairs(pairs: impl IntoIterator<Item = (u64, u32)>) -> Self {
        let mut factors: Vec<(u64, u32)> = pairs.into_iter().filter(|&(_, e)| e > 0).collect();
        factors.sort_unstable_by_key(|&(p, _)| p);
        factors.dedup_by(|later, first| {
            if later.0 == first.0 {
                first.1 += later.1;
                true
            } else {
                false
            }
        });
        let out = FactoredNat { factors };
        debug_assert!(out.factors.iter().all(|&(p, _)| crate::factor::is_prime_u64(p)));
        out
    }

    pub fn factors(&self) -> &[(u64, u32)] {
        &self.factors
    }

    /// Constructor for callers that already hold a strictly sorted list of
    /// genuine prime powers (sieve output, packed-sweep decoding).
    pub(crate) fn from_sorted_unchecked(factors: Vec<(u64, u32)>) -> Self {
        debug_assert!(factors.windows(2).all(|w| w[0].0 < w[1].0));
        debug_assert!(factors.iter().all(|&(_, e)| e > 0));
        FactoredNat { factors }
    }

    /// Exponent of `p` in this number (0 when `p` does not divide it).
    pub fn valuation(&self, p: u64) -> u32 {
        match self.factors.binary_search_by_key(&p, |&(q, _)| q) {
            Ok(i) => self.factors[i].1,
            Err(_) => 0,
        }
    }

    /// The Z-rule: every prime exponent of the result is the absolute
    /// difference of the parents' exponents, i.e. `ab / gcd(a,b)^2`.
    pub fn z_rule(&self, other: &Self) -> Self {
        let mut factors = Vec::with_capacity(self.factors.len() + other.factors.len());
        let mut left = self.factors.iter().peekable();
        let mut right = other.factors.iter().peekable();
        loop {
            match (left.peek(), right.peek()) {
                (Some(&&(pa, ea)), Some(&&(pb, eb))) => match pa.cmp(&pb) {
                    Ordering::Less => {
                        factors.push((pa, ea));
                        left.next();
                    }
                    Ordering::Greater => {
                        factors.push((pb, eb));
                        right.next();
                    }
                    Ordering::Equal => {
                        let e = ea.abs_diff(eb);
                        if e > 0 {
                            factors.push((pa, e));
                        }
                        left.next();
                        right.next();
                    }
                },
                (Some(&&(p, e)), None) => {
                    factors.push((p, e));
                    left.next();
                }
                (None, Some(&&(p, e))) => {
                    factors.push((p, e));
                    right.next();
                }
                (None, None) => break,
            }
        }
        FactoredNat { factors }
    }

    /// Greatest common divisor: per-prime minimum of exponents.
    pub fn gcd(&self, other: &Self) -> Self {
        let mut factors = Vec::new();
        let mut right = other.factors.iter().peekable();
        for &(p, e) in &self.factors {
            while let Some(&&(q, _)) = right.peek() {
                if q < p {
                    right.next();
                } else {
                    break;
                }
            }
            if let Some(&&(q, f)) = right.peek() {
                if q == p {
                    factors.push((p, e.min(f)));
                }
            }
        }
        FactoredNat { factors }
    }

    /// Exact product.
    pub fn mul(&self, other: &Self) -> Self {
        let mut factors = Vec::with_capacity(self.factors.len() + other.factors.len());
        let mut left = self.factors.iter().peekable();
        let mut right = other.factors.iter().peekable();
        loop {
            match (left.peek(), right.peek()) {
                (Some(&&(pa, ea)), Some(&&(pb, eb))) => match pa.cmp(&pb) {
                    Ordering::Less => {
                        factors.push((pa, ea));
                        left.next();
                    }
                    Ordering::Greater => {
                        factors.push((pb, eb));
                        right.next();
                    }
                    Ordering::Equal => {
                        factors.push((pa, ea + eb));
                        left.next();
                        right.next();
                    }
                },
                (Some(&&(p, e)), None) => {
                    factors.push((p, e));
                    left.next();
                }
                (None, Some(&&(p, e))) => {
                    factors.push((p, e));
                    right.next();
                }
                (None, None) => break,
            }
        }
        FactoredNat { factors }
    }

    /// Product of the distinct primes dividing this number (1 maps to 1).
    pub fn squarefree_kernel(&self) -> Self {
        FactoredNat {
            factors: self.factors.iter().map(|&(p, _)| (p, 1)).collect(),
        }
    }

    /// Number of distinct prime factors.
    pub fn omega(&self) -> usize {
        self.factors.len()
    }

    pub fn is_squarefree(&self) -> bool {
        self.factors.iter().all(|&(_, e)| e == 1)
    }

    /// Natural logarithm of the represented value.
    pub fn log(&self) -> f64 {
        self.factors
            .iter()
            .map(|&(p, e)| e as f64 * (p as f64).ln())
            .sum()
    }

    /// The represented value when it fits in a `u128`.
    pub fn value_u128(&self) -> Option<u128> {
        let mut acc: u128 = 1;
        for &(p, e) in &self.factors {
            for _ in 0..e {
                acc = acc.checked_mul(p as u128)?;
            }
        }
        Some(acc)
    }

    pub fn to_biguint(&self) -> BigUint {
        let mut acc = BigUint::from(1u32);
        for &(p, e) in &self.factors {
            acc *= BigUint::from(p).pow(e);
        }
        acc
    }

    /// Exact base-10 rendering via arbitrary-precision accumulation.
    pub fn decimal_string(&self) -> String {
        self.to_biguint().to_string()
    }

    /// Short scientific rendering `d.dd e<k>` derived from the exact value
    /// (mantissa truncated, never rounded up past the true value).
    pub fn scientific_string(&self) -> String {
        let digits = self.decimal_string();
        if digits.len() <= 6 {
            return digits;
        }
        format!(
            "{}.{}e{}",
            &digits[0..1],
            &digits[1..3],
            digits.len() - 1
        )
    }

    /// Orders by represented value: compares logarithms first and falls back
    /// to exact big-integer comparison when they are too close to trust.
    pub fn cmp_value(&self, other: &Self) -> Ordering {
        if self == other {
            return Ordering::Equal;
        }
        let (la, lb) = (self.log(), other.log());
        let scale = la.abs().max(lb.abs()).max(1.0);
        if (la - lb).abs() > 1e-9 * scale {
            return la.partial_cmp(&lb).unwrap();
        }
        self.to_biguint().cmp(&other.to_biguint())
    }
}

impl fmt::Display for FactoredNat {
    /// Factored rendering, e.g. `2^3·5·11`; `1` for the empty factorization.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "1");
        }
        let mut first = true;
        for &(p, e) in &self.factors {
            if !first {
                write!(f, "·")?;
            }
            first = false;
            if e == 1 {
                write!(f, "{p}")?;
            } else {
                write!(f, "{p}^{e}")?;
            }
        }
        Ok(())
    }
}

/// Least-prime-factor sieve over `1..=limit`.
///
/// Built once, shared read-only; every first-row entry the engine ever needs
/// to factor is within the sieve range.
#[derive(Debug, Clone)]
pub struct PrimeTable {
    limit: u64,
    spf: Vec<u32>,
}

impl PrimeTable {
    pub fn new(limit: u64) -> Self {
        assert!(limit >= 1, "sieve limit must be at least 1");
        assert!(limit <= u32::MAX as u64, "sieve limit too large");
        let n = limit as usize;
        let mut spf = vec![0u32; n + 1];
        if n >= 1 {
            spf[1] = 1;
        }
        let mut i = 2usize;
        while i <= n {
            if spf[i] == 0 {
                let mut j = i;
                while j <= n {
                    if spf[j] == 0 {
                        spf[j] = i as u32;
                    }
                    j += i;
                }
            }
            i += 1;
        }
        PrimeTable { limit, spf }
    }

    pub fn limit(&self) -> u64 {
        self.limit
    }

    /// Least prime factor of `n` (`1` for `n = 1`).
    pub fn least_prime_factor(&self, n: u64) -> Result<u64, ArithError> {
        if n < 1 || n > self.limit {
            return Err(ArithError::OutOfSieveRange(n, self.limit));
        }
        Ok(self.spf[n as usize] as u64)
    }

    pub fn is_prime(&self, n: u64) -> bool {
        n >= 2 && n <= self.limit && self.spf[n as usize] as u64 == n
    }

    /// All primes up to the sieve limit, increasing.
    pub fn primes(&self) -> impl Iterator<Item = u64> + '_ {
        (2..=self.limit).filter(|&n| self.is_prime(n))
    }

    /// Factors `n` by walking the least-prime-factor chain.
    pub fn factorize(&self, n: u64) -> Result<FactoredNat, ArithError> {
        if n < 1 || n > self.limit {
            return Err(ArithError::OutOfSieveRange(n, self.limit));
        }
        let mut factors: Vec<(u64, u32)> = Vec::new();
        let mut m = n as usize;
        while m > 1 {
            let p = self.spf[m] as usize;
            let mut e = 0u32;
            while m % p == 0 {
                m /= p;
                e += 1;
            }
            factors.push((p as u64, e));
        }
        Ok(FactoredNat { factors })
    }
}
