use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::Path;

use cyclic_core::numtheory::{self, SIEVE_LIMIT};
use cyclic_core::oracle::{self, DEFAULT_ENUMERATION_CAP};
use cyclic_core::witness::{self, VerificationReport};
use cyclic_core::{FiniteGroup, WitnessCertificate, DEFAULT_SUBGROUP_BOUND};
use serde_json::json;

use crate::format::{CertificateFile, GroupFile, SCHEMA_VERSION};

pub const EXIT_OK: u8 = 0;
pub const EXIT_NEGATIVE: u8 = 1;
pub const EXIT_USAGE: u8 = 2;

/// What a subcommand prints and how it exits.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub status: u8,
}

impl Outcome {
    fn out(stdout: String, status: u8) -> Self {
        Outcome {
            stdout,
            status,
            ..Default::default()
        }
    }

    fn fail(status: u8, message: impl std::fmt::Display) -> Self {
        Outcome {
            stderr: format!("error: {message}\n"),
            status,
            ..Default::default()
        }
    }

    fn json(value: serde_json::Value, status: u8) -> Self {
        let mut s = serde_json::to_string(&value).expect("report serializes");
        s.push('\n');
        Self::out(s, status)
    }
}

fn status_for(affirmative: bool) -> u8 {
    if affirmative {
        EXIT_OK
    } else {
        EXIT_NEGATIVE
    }
}

pub fn check(n: u64, as_json: bool) -> Outcome {
    let fact = match numtheory::factorize(n) {
        Ok(f) => f,
        Err(e) => return Outcome::fail(EXIT_USAGE, e),
    };
    let phi = numtheory::phi_of(&fact);
    let g = numtheory::gcd(n, phi).expect("n is positive");
    let star = numtheory::star_report_of(&fact);
    let cyclic = g == 1;
    let status = status_for(cyclic);

    if as_json {
        return Outcome::json(
            json!({
                "schema": SCHEMA_VERSION,
                "n": n,
                "factorization": fact.factors(),
                "phi": phi,
                "gcd": g,
                "squarefree_ok": star.squarefree_ok(),
                "square_prime": star.square_prime,
                "arrow_ok": star.arrow_ok(),
                "arrow_pair": star.arrow_pair,
                "cyclic_number": cyclic,
            }),
            status,
        );
    }

    let mut s = String::new();
    writeln!(s, "n: {n}").unwrap();
    writeln!(s, "factorization: {fact}").unwrap();
    writeln!(s, "phi: {phi}").unwrap();
    writeln!(s, "gcd(n, phi): {g}").unwrap();
    match star.square_prime {
        None => writeln!(s, "(*) squarefree: ok").unwrap(),
        Some(p) => writeln!(s, "(*) squarefree: fails at p={p} ({p}^2 divides {n})").unwrap(),
    }
    match star.arrow_pair {
        None => writeln!(s, "(**) no p | q-1: ok").unwrap(),
        Some((p1, p2)) => writeln!(
            s,
            "(**) no p | q-1: fails at p={p1}, q={p2} ({p1} divides {p2}-1)"
        )
        .unwrap(),
    }
    let verdict = if cyclic {
        "all groups cyclic"
    } else {
        "non-cyclic group exists"
    };
    writeln!(s, "verdict: {verdict}").unwrap();
    Outcome::out(s, status)
}

pub fn sieve(lo: u64, hi: u64, as_json: bool) -> Outcome {
    if lo == 0 || lo > hi || hi > SIEVE_LIMIT {
        return Outcome::fail(
            EXIT_USAGE,
            format!("range must satisfy 1 <= lo <= hi <= {SIEVE_LIMIT}"),
        );
    }
    let numbers = match numtheory::cyclic_numbers_in(lo, hi) {
        Ok(v) => v,
        Err(e) => return Outcome::fail(EXIT_USAGE, e),
    };
    if as_json {
        return Outcome::json(json!(numbers), EXIT_OK);
    }
    let mut s = String::new();
    for n in numbers {
        writeln!(s, "{n}").unwrap();
    }
    Outcome::out(s, EXIT_OK)
}

fn build(n: u64, max_degree: usize) -> Result<WitnessCertificate, Outcome> {
    if n == 0 {
        return Err(Outcome::fail(EXIT_USAGE, "n must be positive"));
    }
    match witness::build_witness_with_cap(n, max_degree) {
        Ok(Some(cert)) => Ok(cert),
        Ok(None) => Err(Outcome::fail(
            EXIT_NEGATIVE,
            format!("{n} is a cyclic number"),
        )),
        Err(e) => Err(Outcome::fail(EXIT_USAGE, e)),
    }
}

/// Writes the certificate for `n` to `out`, or returns it on stdout.
pub fn witness(n: u64, out: Option<&Path>, max_degree: usize) -> Outcome {
    let cert = match build(n, max_degree) {
        Ok(c) => c,
        Err(o) => return o,
    };
    let json = CertificateFile::from_certificate(&cert).to_json();
    match out {
        None => Outcome::out(json, EXIT_OK),
        Some(path) => match std::fs::write(path, json) {
            Ok(()) => Outcome::out(
                format!(
                    "wrote {} certificate for n={n} (degree {}) to {}\n",
                    cert.params.reason(),
                    cert.degree,
                    path.display()
                ),
                EXIT_OK,
            ),
            Err(e) => Outcome::fail(EXIT_USAGE, format!("{}: {e}", path.display())),
        },
    }
}

/// `target` is either an integer `n` (build, then verify) or a certificate
/// path.
pub fn verify(target: &str, max_order: usize, max_degree: usize, as_json: bool) -> Outcome {
    let cert = if let Ok(n) = target.parse::<u64>() {
        match build(n, max_degree) {
            Ok(c) => c,
            Err(o) => return o,
        }
    } else {
        let parsed = std::fs::read_to_string(target)
            .map_err(|e| format!("{target}: {e}"))
            .and_then(|text| CertificateFile::parse(&text).map_err(|e| e.to_string()))
            .and_then(|file| file.to_certificate().map_err(|e| e.to_string()));
        match parsed {
            Ok(c) => c,
            Err(e) => return Outcome::fail(EXIT_USAGE, e),
        }
    };
    let report = match witness::verify_certificate_with_cap(&cert, max_order) {
        Ok(r) => r,
        Err(e) => return Outcome::fail(EXIT_USAGE, e),
    };
    let status = status_for(report.passed());
    if as_json {
        return Outcome::json(verification_json(&cert, &report), status);
    }
    let mut s = String::new();
    writeln!(s, "n: {}", cert.n).unwrap();
    writeln!(s, "reason: {}", cert.params.reason()).unwrap();
    writeln!(s, "group_size: {}", report.group_size).unwrap();
    writeln!(s, "max_element_order: {}", report.max_element_order).unwrap();
    writeln!(s, "order_ok: {}", report.order_ok).unwrap();
    writeln!(s, "noncyclic_ok: {}", report.noncyclic_ok).unwrap();
    let verdict = if report.passed() {
        "verified"
    } else {
        "rejected"
    };
    writeln!(s, "verdict: {verdict}").unwrap();
    Outcome::out(s, status)
}

fn verification_json(cert: &WitnessCertificate, r: &VerificationReport) -> serde_json::Value {
    json!({
        "schema": SCHEMA_VERSION,
        "n": cert.n,
        "reason": cert.params.reason(),
        "group_size": r.group_size,
        "max_element_order": r.max_element_order,
        "order_ok": r.order_ok,
        "noncyclic_ok": r.noncyclic_ok,
        "passed": r.passed(),
    })
}

struct MaximalInfo {
    order: usize,
    normalizer: usize,
    conjugates: usize,
}

pub fn analyze(path: &Path, max_order: usize, as_json: bool) -> Outcome {
    let gens = std::fs::read_to_string(path)
        .map_err(|e| format!("{}: {e}", path.display()))
        .and_then(|text| GroupFile::parse(&text).map_err(|e| e.to_string()))
        .and_then(|file| file.permutations().map_err(|e| e.to_string()));
    let gens = match gens {
        Ok(g) => g,
        Err(e) => return Outcome::fail(EXIT_USAGE, e),
    };
    let group = match FiniteGroup::closure_with_cap(&gens, max_order) {
        Ok(g) => g,
        Err(e) => return Outcome::fail(EXIT_USAGE, e),
    };
    analyze_group(&group, as_json)
}

pub fn analyze_group(group: &FiniteGroup, as_json: bool) -> Outcome {
    let mut histogram: BTreeMap<u64, usize> = BTreeMap::new();
    for o in group.order_multiset() {
        *histogram.entry(o).or_default() += 1;
    }
    let center = group.center();
    let mut class_sizes: Vec<usize> = group.conjugacy_classes().iter().map(Vec::len).collect();
    class_sizes.sort_unstable();
    let generator = group.is_cyclic();
    let maximal: Option<Vec<MaximalInfo>> = (group.order() <= DEFAULT_SUBGROUP_BOUND).then(|| {
        group
            .maximal_subgroups(DEFAULT_SUBGROUP_BOUND)
            .expect("order within bound")
            .iter()
            .map(|f| MaximalInfo {
                order: f.order(),
                normalizer: group.normalizer(f).order(),
                conjugates: group.count_conjugate_subgroups(f),
            })
            .collect()
    });

    if as_json {
        return Outcome::json(
            json!({
                "schema": SCHEMA_VERSION,
                "order": group.order(),
                "degree": group.degree(),
                "cyclic": generator.is_some(),
                "generator": generator.map(|g| g.images().collect::<Vec<_>>()),
                "abelian": center.order() == group.order(),
                "element_orders": histogram
                    .iter()
                    .map(|(o, c)| json!({"order": o, "count": c}))
                    .collect::<Vec<_>>(),
                "center": center.order(),
                "class_sizes": class_sizes,
                "maximal_subgroups": maximal.as_ref().map(|m| m
                    .iter()
                    .map(|i| json!({
                        "order": i.order,
                        "normalizer": i.normalizer,
                        "conjugates": i.conjugates,
                    }))
                    .collect::<Vec<_>>()),
            }),
            EXIT_OK,
        );
    }

    let join = |v: &mut dyn Iterator<Item = String>| v.collect::<Vec<_>>().join(" ");
    let mut s = String::new();
    writeln!(s, "order: {}", group.order()).unwrap();
    writeln!(s, "degree: {}", group.degree()).unwrap();
    match generator {
        Some(g) => writeln!(s, "cyclic: yes, generator {g}").unwrap(),
        None => writeln!(s, "cyclic: no").unwrap(),
    }
    writeln!(
        s,
        "element_orders: {}",
        join(&mut histogram.iter().map(|(o, c)| format!("{o}x{c}")))
    )
    .unwrap();
    writeln!(s, "center: {}", center.order()).unwrap();
    writeln!(
        s,
        "class_sizes: {}",
        join(&mut class_sizes.iter().map(|c| c.to_string()))
    )
    .unwrap();
    match &maximal {
        None => writeln!(
            s,
            "maximal_subgroups: skipped (order above {DEFAULT_SUBGROUP_BOUND})"
        )
        .unwrap(),
        Some(list) => {
            writeln!(s, "maximal_subgroups: {}", list.len()).unwrap();
            for m in list {
                writeln!(
                    s,
                    "maximal: order {} normalizer {} conjugates {}",
                    m.order, m.normalizer, m.conjugates
                )
                .unwrap();
            }
        }
    }
    Outcome::out(s, EXIT_OK)
}

/// Exits 1 only if enumeration disagrees with `gcd(n, φ(n)) = 1`.
pub fn enumerate(n: usize, cap: Option<usize>, as_json: bool) -> Outcome {
    let cap = cap.unwrap_or(DEFAULT_ENUMERATION_CAP);
    let mut stderr = String::new();
    if n > DEFAULT_ENUMERATION_CAP && n <= cap.min(oracle::MAX_ENUMERATION_ORDER) {
        stderr = format!("warning: enumerating order {n} is slow (cost grows as (n-1)!)\n");
    }
    let row = match oracle::theorem_row(n, cap) {
        Ok(r) => r,
        Err(e) => return Outcome::fail(EXIT_USAGE, e),
    };
    let status = status_for(row.agrees());
    let mut outcome = if as_json {
        Outcome::json(
            json!({
                "schema": SCHEMA_VERSION,
                "n": row.n,
                "classes": row.classes,
                "cyclic_classes": row.cyclic_classes,
                "all_cyclic": row.all_cyclic(),
                "cyclic_number": row.cyclic_number,
                "agrees": row.agrees(),
                "order_multisets": row.order_multisets,
            }),
            status,
        )
    } else {
        let mut s = String::new();
        writeln!(s, "n: {}", row.n).unwrap();
        writeln!(s, "classes: {}", row.classes).unwrap();
        writeln!(s, "cyclic: {}", row.cyclic_classes).unwrap();
        for (i, orders) in row.order_multisets.iter().enumerate() {
            let orders: Vec<String> = orders.iter().map(u64::to_string).collect();
            writeln!(s, "class {}: orders {}", i + 1, orders.join(" ")).unwrap();
        }
        writeln!(s, "cyclic_number: {}", row.cyclic_number).unwrap();
        writeln!(s, "agrees: {}", row.agrees()).unwrap();
        Outcome::out(s, status)
    };
    outcome.stderr = stderr;
    outcome
}
