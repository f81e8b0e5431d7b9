#![allow(dead_code)]

use cyclic_core::{witness, FiniteGroup, Permutation};

pub fn cyc(points: &[usize], degree: usize) -> Permutation {
    Permutation::cycle(points, degree).unwrap()
}

pub fn group(gens: &[Permutation]) -> FiniteGroup {
    FiniteGroup::closure(gens).unwrap()
}

/// Symmetric group on three points, the nonabelian group of order 6.
pub fn s3() -> FiniteGroup {
    group(&[cyc(&[0, 1], 3), cyc(&[0, 1, 2], 3)])
}

/// Symmetries of a square: a 4-cycle and a reflection.
pub fn d8() -> FiniteGroup {
    group(&[cyc(&[0, 1, 2, 3], 4), cyc(&[1, 3], 4)])
}

pub fn cyclic_group(n: usize) -> FiniteGroup {
    group(&[cyc(&(0..n).collect::<Vec<_>>(), n)])
}

pub fn klein() -> FiniteGroup {
    group(&[cyc(&[0, 1], 4), cyc(&[2, 3], 4)])
}

/// Quaternion group as a regular permutation group of degree 8.
pub fn q8() -> FiniteGroup {
    // labels: 0=1 1=i 2=j 3=k 4=-1 5=-i 6=-j 7=-k; left multiplication by i and j
    let i = Permutation::from_images([1, 4, 3, 6, 5, 0, 7, 2]).unwrap();
    let j = Permutation::from_images([2, 7, 4, 1, 6, 3, 0, 5]).unwrap();
    group(&[i, j])
}

/// Groups built from the witness constructions for every non-cyclic-number
/// `n ≤ n_max`, plus the named groups above.
pub fn corpus(n_max: u64) -> Vec<(String, FiniteGroup)> {
    let mut out = vec![
        ("S3".to_string(), s3()),
        ("D8".to_string(), d8()),
        ("Q8".to_string(), q8()),
        ("C6".to_string(), cyclic_group(6)),
        ("V4".to_string(), klein()),
    ];
    for n in 1..=n_max {
        if let Some(cert) = witness::build_witness(n).unwrap() {
            out.push((format!("witness({n})"), group(&cert.generators)));
        }
    }
    out
}
