//! Integer arithmetic behind the cyclic-number criterion.
//!
//! All inputs live in the signed 64-bit range; anything above `i64::MAX`
//! is rejected with [`Error::OutOfRange`].

use alloc::vec::Vec;
use core::fmt;

use crate::{Error, Result};

const MAX_INPUT: u64 = i64::MAX as u64;

fn check_range(n: u64) -> Result<u64> {
    if n > MAX_INPUT {
        Err(Error::OutOfRange(n))
    } else {
        Ok(n)
    }
}

fn check_positive(n: u64) -> Result<u64> {
    match check_range(n)? {
        0 => Err(Error::Zero),
        n => Ok(n),
    }
}

/// Prime decomposition of a positive integer.
///
/// Primes are strictly increasing and every multiplicity is at least one.
/// `1` has no factors.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Factorization {
    n: u64,
    factors: Vec<(u64, u32)>,
}

impl Factorization {
    pub fn n(&self) -> u64 {
        self.n
    }

    /// `(prime, multiplicity)` pairs in ascending prime order.
    pub fn factors(&self) -> &[(u64, u32)] {
        &self.factors
    }

    pub fn primes(&self) -> impl Iterator<Item = u64> + '_ {
        self.factors.iter().map(|&(p, _)| p)
    }

    pub fn is_squarefree(&self) -> bool {
        self.factors.iter().all(|&(_, e)| e == 1)
    }
}

impl fmt::Display for Factorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return f.write_str("1");
        }
        for (i, &(p, e)) in self.factors.iter().enumerate() {
            if i > 0 {
                f.write_str(" * ")?;
            }
            if e == 1 {
                write!(f, "{p}")?;
            } else {
                write!(f, "{p}^{e}")?;
            }
        }
        Ok(())
    }
}

/// Outcome of testing the two arithmetic conditions equivalent to
/// `gcd(n, φ(n)) = 1`: `n` is squarefree, and no prime factor `p` of `n`
/// divides `q - 1` for another prime factor `q`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct StarReport {
    pub n: u64,
    /// Smallest prime whose square divides `n`.
    pub square_prime: Option<u64>,
    /// Lexicographically smallest `(p1, p2)` of primes of `n` with `p1 | p2 - 1`.
    pub arrow_pair: Option<(u64, u64)>,
}

impl StarReport {
    pub fn squarefree_ok(&self) -> bool {
        self.square_prime.is_none()
    }

    pub fn arrow_ok(&self) -> bool {
        self.arrow_pair.is_none()
    }

    pub fn all_ok(&self) -> bool {
        self.squarefree_ok() && self.arrow_ok()
    }
}

/// Trial-division factorization.
pub fn factorize(n: u64) -> Result<Factorization> {
    let n = check_positive(n)?;
    let mut factors = Vec::new();
    let mut rest = n;
    let mut d = 2u64;
    while d * d <= rest {
        if rest % d == 0 {
            let mut e = 0;
            while rest % d == 0 {
                rest /= d;
                e += 1;
            }
            factors.push((d, e));
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if rest > 1 {
        factors.push((rest, 1));
    }
    Ok(Factorization { n, factors })
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Euler's totient, `n · ∏ (1 - 1/p)` over the primes of `n`.
pub fn euler_phi(n: u64) -> Result<u64> {
    Ok(phi_of(&factorize(n)?))
}

pub fn phi_of(fact: &Factorization) -> u64 {
    fact.factors
        .iter()
        .fold(fact.n, |acc, &(p, _)| acc / p * (p - 1))
}

pub fn gcd(a: u64, b: u64) -> Result<u64> {
    check_range(a)?;
    check_range(b)?;
    if a == 0 && b == 0 {
        return Err(Error::BothZero);
    }
    Ok(gcd_unchecked(a, b))
}

pub(crate) fn gcd_unchecked(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

pub(crate) fn lcm_unchecked(a: u64, b: u64) -> u64 {
    a / gcd_unchecked(a, b) * b
}

/// Extended Euclid: `(g, x, y)` with `a·x + b·y = g = gcd(a, b)`.
pub fn ext_gcd(a: u64, b: u64) -> Result<(u64, i64, i64)> {
    check_range(a)?;
    check_range(b)?;
    if a == 0 && b == 0 {
        return Err(Error::BothZero);
    }
    let (mut r0, mut r1) = (a as i128, b as i128);
    let (mut x0, mut x1) = (1i128, 0i128);
    let (mut y0, mut y1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (x0, x1) = (x1, x0 - q * x1);
        (y0, y1) = (y1, y0 - q * y1);
    }
    // |x0| <= b/g and |y0| <= a/g, so both fit.
    Ok((r0 as u64, x0 as i64, y0 as i64))
}

/// True iff every group of order `n` is cyclic, i.e. `gcd(n, φ(n)) = 1`.
pub fn is_cyclic_number(n: u64) -> Result<bool> {
    let phi = euler_phi(n)?;
    Ok(gcd_unchecked(n, phi) == 1)
}

pub fn check_star_conditions(n: u64) -> Result<StarReport> {
    Ok(star_report_of(&factorize(n)?))
}

pub fn star_report_of(fact: &Factorization) -> StarReport {
    let square_prime = fact.factors.iter().find(|&&(_, e)| e >= 2).map(|&(p, _)| p);
    let primes: Vec<u64> = fact.primes().collect();
    let arrow_pair = primes.iter().find_map(|&p1| {
        primes
            .iter()
            .find(|&&p2| p2 != p1 && (p2 - 1) % p1 == 0)
            .map(|&p2| (p1, p2))
    });
    StarReport {
        n: fact.n,
        square_prime,
        arrow_pair,
    }
}

/// Largest upper end accepted by [`cyclic_numbers_in`].
pub const SIEVE_LIMIT: u64 = 1_000_000;

/// Cyclic numbers in `lo..=hi`, ascending, from a totient sieve over
/// `1..=hi`.
pub fn cyclic_numbers_in(lo: u64, hi: u64) -> Result<Vec<u64>> {
    if lo == 0 {
        return Err(Error::Zero);
    }
    if hi > SIEVE_LIMIT {
        return Err(Error::OutOfRange(hi));
    }
    if lo > hi {
        return Ok(Vec::new());
    }
    let len = hi as usize + 1;
    let mut phi: Vec<u64> = (0..len as u64).collect();
    for p in 2..len {
        // untouched so far means prime
        if phi[p] == p as u64 {
            for m in (p..len).step_by(p) {
                phi[m] -= phi[m] / p as u64;
            }
        }
    }
    Ok((lo..=hi)
        .filter(|&n| gcd_unchecked(n, phi[n as usize]) == 1)
        .collect())
}

/// `base^exp mod modulus`, result in `[0, modulus)`. Negative bases are
/// reduced first.
pub fn mod_pow(base: i64, exp: u64, modulus: u64) -> Result<u64> {
    check_range(modulus)?;
    if modulus < 2 {
        return Err(Error::ModulusTooSmall(modulus));
    }
    let m = modulus as u128;
    let mut b = (base as i128).rem_euclid(modulus as i128) as u128;
    let mut e = exp;
    let mut acc = 1u128;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % m;
        }
        b = b * b % m;
        e >>= 1;
    }
    Ok(acc as u64)
}

/// Smallest `a` in `[2, p2)` whose multiplicative order modulo `p2` is
/// exactly `p1`.
pub fn element_of_order(p1: u64, p2: u64) -> Result<u64> {
    check_range(p1)?;
    check_range(p2)?;
    if !is_prime(p1) || !is_prime(p2) {
        return Err(Error::Precondition("element_of_order needs two primes"));
    }
    if !(p2 - 1).is_multiple_of(p1) {
        return Err(Error::NoElementOfOrder {
            order: p1,
            modulus: p2,
        });
    }
    // p1 is prime, so a != 1 with a^p1 = 1 has order exactly p1.
    (2..p2)
        .find(|&a| mod_pow(a as i64, p1, p2) == Ok(1))
        .ok_or(Error::NoElementOfOrder {
            order: p1,
            modulus: p2,
        })
}
