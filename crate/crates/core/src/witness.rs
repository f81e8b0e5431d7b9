//! Explicit non-cyclic groups of order `n` whenever `gcd(n, φ(n)) > 1`.
//!
//! Two constructions cover every such `n`:
//!
//! * **square**: some `p²` divides `n`. Take a `p`-cycle and an `n/p`-cycle
//!   on disjoint points. They generate a group of order `n` whose elements
//!   all have order dividing `n/p`.
//! * **arrow**: `n` is squarefree but `p1 | p2 - 1` for primes `p1, p2` of
//!   `n`. The affine maps `(x, y) ↦ (a^k x, l x + y)` on `Z_p2²`, with `a` of
//!   multiplicative order `p1`, form a nonabelian group of order `p1·p2`.
//!   A disjoint `n/(p1·p2)`-cycle pads it to order `n`.
//!
//! The point `(x, y)` of `Z_p2²` is encoded as `x·p2 + y`.

use alloc::vec::Vec;

use crate::group::{FiniteGroup, DEFAULT_CLOSURE_CAP};
use crate::numtheory::{self, is_prime, mod_pow};
use crate::perm::Permutation;
use crate::{Error, Result};

/// Certificates wider than this many points are refused at build time.
pub const DEFAULT_DEGREE_CAP: usize = 10_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum WitnessParams {
    /// `p²` divides `n`.
    Square { p: u64 },
    /// `p1 | p2 - 1`, both divide `n`, and `a` has order `p1` modulo `p2`.
    Arrow { p1: u64, p2: u64, a: u64 },
}

impl WitnessParams {
    pub fn reason(&self) -> &'static str {
        match self {
            WitnessParams::Square { .. } => "square",
            WitnessParams::Arrow { .. } => "arrow",
        }
    }

    /// Whether the arithmetic side-condition holds for `n`.
    pub fn holds_for(&self, n: u64) -> bool {
        match *self {
            WitnessParams::Square { p } => {
                is_prime(p) && p.checked_mul(p).is_some_and(|pp| n.is_multiple_of(pp))
            }
            WitnessParams::Arrow { p1, p2, a } => {
                is_prime(p1)
                    && is_prime(p2)
                    && p1 != p2
                    && (p2 - 1) % p1 == 0
                    && p1.checked_mul(p2).is_some_and(|q| n.is_multiple_of(q))
                    && a > 1
                    && a < p2
                    && mod_pow(a as i64, p1, p2) == Ok(1)
            }
        }
    }
}

/// A claim that the generators produce a non-cyclic group of order `n`.
///
/// Nothing here is trusted by [`verify_certificate`] except `n` and the
/// generators themselves.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WitnessCertificate {
    pub n: u64,
    pub params: WitnessParams,
    pub degree: usize,
    pub generators: Vec<Permutation>,
}

impl WitnessCertificate {
    pub fn claimed_order(&self) -> u64 {
        self.n
    }

    pub fn claimed_noncyclic(&self) -> bool {
        true
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerificationReport {
    pub group_size: usize,
    pub max_element_order: u64,
    pub order_ok: bool,
    pub noncyclic_ok: bool,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.order_ok && self.noncyclic_ok
    }
}

/// Copies `perm` onto points `offset..offset + perm.degree()` of a
/// permutation of `degree` points, fixing the rest.
pub fn embed(perm: &Permutation, offset: usize, degree: usize) -> Result<Permutation> {
    if offset + perm.degree() > degree {
        return Err(Error::Precondition("embedding does not fit"));
    }
    let images = (0..degree).map(|x| {
        if x >= offset && x < offset + perm.degree() {
            offset + perm.apply(x - offset)
        } else {
            x
        }
    });
    Permutation::from_images(images)
}

fn check_degree(degree: usize, cap: usize) -> Result<()> {
    if degree > cap {
        Err(Error::DegreeCapExceeded { degree, cap })
    } else {
        Ok(())
    }
}

fn to_usize(v: u64) -> Result<usize> {
    usize::try_from(v).map_err(|_| Error::OutOfRange(v))
}

pub fn witness_square_case(n: u64, p: u64) -> Result<WitnessCertificate> {
    witness_square_case_with_cap(n, p, DEFAULT_DEGREE_CAP)
}

pub fn witness_square_case_with_cap(n: u64, p: u64, cap: usize) -> Result<WitnessCertificate> {
    let params = WitnessParams::Square { p };
    if n == 0 || !params.holds_for(n) {
        return Err(Error::Precondition(
            "square case needs a prime p with p^2 | n",
        ));
    }
    let (p, m) = (to_usize(p)?, to_usize(n / p)?);
    let degree = p.checked_add(m).ok_or(Error::OutOfRange(n))?;
    check_degree(degree, cap)?;
    let first: Vec<usize> = (0..p).collect();
    let second: Vec<usize> = (p..p + m).collect();
    Ok(WitnessCertificate {
        n,
        params,
        degree,
        generators: alloc::vec![
            Permutation::cycle(&first, degree)?,
            Permutation::cycle(&second, degree)?,
        ],
    })
}

/// `f_{k,l}: (x, y) ↦ (a^k x, l x + y)` on the `p2²` points of `Z_p2²`.
pub fn affine_map(p1: u64, p2: u64, a: u64, k: u64, l: u64) -> Result<Permutation> {
    if !is_prime(p1) || !is_prime(p2) || !(p2 - 1).is_multiple_of(p1) {
        return Err(Error::Precondition(
            "affine map needs primes with p1 | p2 - 1",
        ));
    }
    if a < 2 || a >= p2 || mod_pow(a as i64, p1, p2)? != 1 {
        return Err(Error::Precondition(
            "a must have multiplicative order p1 mod p2",
        ));
    }
    if k >= p1 || l >= p2 {
        return Err(Error::Precondition("k must be below p1 and l below p2"));
    }
    Ok(affine_map_unchecked(p2, mod_pow(a as i64, k, p2)?, l))
}

fn affine_map_unchecked(p2: u64, scale: u64, shift: u64) -> Permutation {
    let points = p2 * p2;
    let images = (0..points).map(|idx| {
        let (x, y) = (idx / p2, idx % p2);
        let nx = scale * x % p2;
        let ny = (shift * x + y) % p2;
        (nx * p2 + ny) as usize
    });
    Permutation::from_images(images).expect("affine maps are bijections")
}

pub fn witness_arrow_case(n: u64, p1: u64, p2: u64) -> Result<WitnessCertificate> {
    witness_arrow_case_with_cap(n, p1, p2, DEFAULT_DEGREE_CAP)
}

pub fn witness_arrow_case_with_cap(
    n: u64,
    p1: u64,
    p2: u64,
    cap: usize,
) -> Result<WitnessCertificate> {
    if n == 0
        || !is_prime(p1)
        || !is_prime(p2)
        || p1 == p2
        || !(p2 - 1).is_multiple_of(p1)
        || !p1.checked_mul(p2).is_some_and(|q| n.is_multiple_of(q))
    {
        return Err(Error::Precondition(
            "arrow case needs distinct primes p1 | p2 - 1 with p1*p2 | n",
        ));
    }
    let a = numtheory::element_of_order(p1, p2)?;
    let square = to_usize(p2)?
        .checked_mul(to_usize(p2)?)
        .ok_or(Error::OutOfRange(p2))?;
    // A trailing 1-cycle adds nothing, so no extra point is reserved for it.
    let tail = match to_usize(n / (p1 * p2))? {
        1 => 0,
        m => m,
    };
    let degree = square.checked_add(tail).ok_or(Error::OutOfRange(n))?;
    check_degree(degree, cap)?;

    let mut generators = alloc::vec![
        embed(&affine_map(p1, p2, a, 1, 0)?, 0, degree)?,
        embed(&affine_map(p1, p2, a, 0, 1)?, 0, degree)?,
    ];
    if tail > 0 {
        let points: Vec<usize> = (square..square + tail).collect();
        generators.push(Permutation::cycle(&points, degree)?);
    }
    Ok(WitnessCertificate {
        n,
        params: WitnessParams::Arrow { p1, p2, a },
        degree,
        generators,
    })
}

/// A certificate for `n`, or `None` when every group of order `n` is
/// cyclic. The square construction wins when both apply.
pub fn build_witness(n: u64) -> Result<Option<WitnessCertificate>> {
    build_witness_with_cap(n, DEFAULT_DEGREE_CAP)
}

pub fn build_witness_with_cap(n: u64, cap: usize) -> Result<Option<WitnessCertificate>> {
    let report = numtheory::check_star_conditions(n)?;
    if let Some(p) = report.square_prime {
        return witness_square_case_with_cap(n, p, cap).map(Some);
    }
    if let Some((p1, p2)) = report.arrow_pair {
        return witness_arrow_case_with_cap(n, p1, p2, cap).map(Some);
    }
    Ok(None)
}

pub fn verify_certificate(cert: &WitnessCertificate) -> Result<VerificationReport> {
    verify_certificate_with_cap(cert, DEFAULT_CLOSURE_CAP)
}

/// Rebuilds the group from the generators and checks its order and that
/// no element has order `n`.
pub fn verify_certificate_with_cap(
    cert: &WitnessCertificate,
    cap: usize,
) -> Result<VerificationReport> {
    let group = FiniteGroup::closure_with_cap(&cert.generators, cap)?;
    let max_element_order = group.max_element_order();
    Ok(VerificationReport {
        group_size: group.order(),
        max_element_order,
        order_ok: group.order() as u64 == cert.n,
        noncyclic_ok: max_element_order < cert.n,
    })
}
