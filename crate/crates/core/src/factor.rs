//! Factoring machinery for `u64` inputs: deterministic Miller-Rabin, trial
//! division with a Pollard-Brent fallback, and sorted divisor enumeration.
//!
//! Only used on numbers of the size `2^n - 1` for moderate `n` (period bounds)
//! and on candidate primes for input validation, so no serious tuning is
//! required here.

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1u64;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Deterministic Miller-Rabin for the full `u64` range.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for &p in &[2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n % p == 0 {
            return n == p;
        }
    }
    let mut d = n - 1;
    let s = d.trailing_zeros();
    d >>= s;
    // This base set decides primality correctly for every n < 2^64.
    'witness: for &a in &[2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn gcd_u64(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// Pollard's rho (Brent variant) for a nontrivial factor of a composite `n`.
fn pollard_rho(n: u64) -> u64 {
    if n % 2 == 0 {
        return 2;
    }
    let mut c = 1u64;
    loop {
        let mut x = 2u64;
        let mut y = 2u64;
        let mut d = 1u64;
        let f = |v: u64| (mul_mod(v, v, n) + c) % n;
        while d == 1 {
            x = f(x);
            y = f(f(y));
            d = gcd_u64(x.abs_diff(y), n);
        }
        if d != n {
            return d;
        }
        c += 1;
    }
}

/// Full factorization, sorted by prime.
pub fn factor_u64(mut n: u64) -> Vec<(u64, u32)> {
    let mut out: Vec<(u64, u32)> = Vec::new();
    if n < 2 {
        return out;
    }
    for p in [2u64, 3, 5] {
        let mut e = 0;
        while n % p == 0 {
            n /= p;
            e += 1;
        }
        if e > 0 {
            out.push((p, e));
        }
    }
    let mut d = 7u64;
    let mut step_idx = 0usize;
    // 7, 11, 13, 17, 19, 23, 29, 31, then repeat the wheel offsets.
    let steps = [4u64, 2, 4, 2, 4, 6, 2, 6];
    while d <= 100_000 && d * d <= n {
        if n % d == 0 {
            let mut e = 0;
            while n % d == 0 {
                n /= d;
                e += 1;
            }
            out.push((d, e));
        }
        d += steps[step_idx];
        step_idx = (step_idx + 1) % steps.len();
    }
    if n > 1 {
        let mut stack = vec![n];
        let mut found: Vec<u64> = Vec::new();
        while let Some(m) = stack.pop() {
            if m == 1 {
                continue;
            }
            if is_prime_u64(m) {
                found.push(m);
                continue;
            }
            let f = pollard_rho(m);
            stack.push(f);
            stack.push(m / f);
        }
        found.sort_unstable();
        for p in found {
            match out.iter_mut().find(|(q, _)| *q == p) {
                Some((_, e)) => *e += 1,
                None => out.push((p, 1)),
            }
        }
    }
    out.sort_unstable_by_key(|&(p, _)| p);
    out
}

/// All divisors of `n`, in increasing order.
pub fn divisors_sorted(n: u64) -> Vec<u64> {
    let mut divisors = vec![1u64];
    for (p, e) in factor_u64(n) {
        let current = divisors.clone();
        let mut pe = 1u64;
        for _ in 0..e {
            pe *= p;
            divisors.extend(current.iter().map(|d| d * pe));
        }
    }
    divisors.sort_unstable();
    divisors
}
