use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::{Error, Result};

const TRIAL_LIMIT: u128 = 1_000_000;
const SMALL_BASES: [u128; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
const RANDOM_ROUNDS: usize = 40;

/// Limits on integer factorization.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FactorConfig {
    /// Inputs with `|n| > ceiling` are refused.
    pub ceiling: u128,
    /// Total Pollard-rho iterations allowed per call.
    pub rho_budget: u64,
}

impl FactorConfig {
    pub const DEFAULT: FactorConfig = FactorConfig { ceiling: 1 << 96, rho_budget: 1 << 22 };

    pub fn with_ceiling(ceiling: u128) -> Self {
        FactorConfig { ceiling, ..Self::DEFAULT }
    }
}

impl Default for FactorConfig {
    fn default() -> Self {
        Self::DEFAULT
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    pub negative: bool,
    pub primes: BTreeMap<BigUint, u32>,
}

impl Factorization {
    pub fn value(&self) -> BigInt {
        let mut acc = BigUint::one();
        for (p, &e) in &self.primes {
            acc *= p.pow(e);
        }
        let acc = BigInt::from(acc);
        if self.negative {
            -acc
        } else {
            acc
        }
    }
}

/// Factors a nonzero integer by trial division up to 10^6 followed by
/// Brent's variant of Pollard rho.
pub fn factorize(n: &BigInt, cfg: &FactorConfig) -> Result<Factorization> {
    if n.is_zero() {
        return Err(Error::ZeroArgument("factorize"));
    }
    let m = n
        .abs()
        .to_u128()
        .filter(|m| *m <= cfg.ceiling)
        .ok_or_else(|| Error::FactorizationExceeded(format!("|{n}| is above the ceiling {}", cfg.ceiling)))?;
    let mut primes = BTreeMap::new();
    let mut budget = cfg.rho_budget;
    factor_into(m, &mut primes, &mut budget)?;
    Ok(Factorization {
        negative: n.is_negative(),
        primes: primes.into_iter().map(|(p, e)| (BigUint::from(p), e)).collect(),
    })
}

fn factor_into(mut m: u128, out: &mut BTreeMap<u128, u32>, budget: &mut u64) -> Result<()> {
    let mut d = 2u128;
    while d <= TRIAL_LIMIT && d * d <= m {
        while m.is_multiple_of(d) {
            *out.entry(d).or_insert(0) += 1;
            m /= d;
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if m == 1 {
        return Ok(());
    }
    let mut stack: Vec<u128> = Vec::from([m]);
    while let Some(k) = stack.pop() {
        if k == 1 {
            continue;
        }
        if is_prime_u128(k) {
            *out.entry(k).or_insert(0) += 1;
            continue;
        }
        let f = rho_split(k, budget)?;
        stack.push(f);
        stack.push(k / f);
    }
    Ok(())
}

fn mulmod(a: u128, b: u128, n: u128) -> u128 {
    if n <= u64::MAX as u128 {
        (a * b) % n
    } else {
        let p = BigUint::from(a) * BigUint::from(b) % BigUint::from(n);
        p.to_u128().expect("reduced below a u128 modulus")
    }
}

fn powmod(mut base: u128, mut exp: u128, n: u128) -> u128 {
    let mut acc = 1 % n;
    base %= n;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mulmod(acc, base, n);
        }
        base = mulmod(base, base, n);
        exp >>= 1;
    }
    acc
}

fn strong_probable_prime(n: u128, d: u128, s: u32, a: u128) -> bool {
    let mut x = powmod(a, d, n);
    if x == 1 || x == n - 1 {
        return true;
    }
    for _ in 1..s {
        x = mulmod(x, x, n);
        if x == n - 1 {
            return true;
        }
    }
    false
}

fn is_prime_u128(n: u128) -> bool {
    if n < 2 {
        return false;
    }
    for p in SMALL_BASES {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    if n <= u64::MAX as u128 {
        // these twelve bases are deterministic well beyond 2^64
        return SMALL_BASES.iter().all(|&a| strong_probable_prime(n, d, s, a));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(n as u64 ^ (n >> 64) as u64);
    (0..RANDOM_ROUNDS).all(|_| {
        let a = rng.gen_range(2..n - 1);
        strong_probable_prime(n, d, s, a)
    })
}

/// Primality: deterministic Miller-Rabin below 2^64, 40 seeded random rounds
/// above. Inputs beyond `u128` are out of range and reported as composite.
pub fn is_prime(n: &BigUint) -> bool {
    n.to_u128().is_some_and(is_prime_u128)
}

fn gcd(a: u128, b: u128) -> u128 {
    a.gcd(&b)
}

fn rho_split(n: u128, budget: &mut u64) -> Result<u128> {
    if n.is_multiple_of(2) {
        return Ok(2);
    }
    let exhausted = || Error::FactorizationExceeded(format!("Pollard rho budget exhausted on {n}"));
    for c in 1u128.. {
        let f = |x: u128| (mulmod(x, x, n) + c) % n;
        let (mut y, mut r, mut q, mut g) = (2u128, 1u64, 1u128, 1u128);
        let (mut x, mut ys) = (y, y);
        while g == 1 {
            x = y;
            for _ in 0..r {
                y = f(y);
            }
            let mut k = 0u64;
            while k < r && g == 1 {
                ys = y;
                let steps = 128.min(r - k);
                for _ in 0..steps {
                    y = f(y);
                    q = mulmod(q, x.abs_diff(y), n);
                }
                *budget = budget.checked_sub(steps).ok_or_else(exhausted)?;
                g = gcd(q, n);
                k += steps;
            }
            r *= 2;
        }
        if g == n {
            loop {
                ys = f(ys);
                g = gcd(x.abs_diff(ys), n);
                if g > 1 {
                    break;
                }
            }
        }
        if g != n {
            return Ok(g);
        }
    }
    unreachable!()
}
