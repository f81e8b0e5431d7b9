//! On-disk JSON formats. Permutations are 0-based image lists everywhere.

use cyclic_core::{Permutation, WitnessCertificate, WitnessParams};
use serde::{Deserialize, Serialize};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug)]
pub struct FormatError(pub String);

impl std::fmt::Display for FormatError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for FormatError {}

impl From<serde_json::Error> for FormatError {
    fn from(e: serde_json::Error) -> Self {
        FormatError(format!("malformed JSON: {e}"))
    }
}

/// `{"degree": m, "generators": [[images…], …]}`. Certificate files parse
/// as group files too, since unknown fields are ignored.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupFile {
    pub degree: usize,
    pub generators: Vec<Vec<usize>>,
}

impl GroupFile {
    pub fn parse(text: &str) -> Result<Self, FormatError> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn permutations(&self) -> Result<Vec<Permutation>, FormatError> {
        parse_generators(self.degree, &self.generators)
    }
}

fn parse_generators(degree: usize, gens: &[Vec<usize>]) -> Result<Vec<Permutation>, FormatError> {
    if degree == 0 {
        return Err(FormatError("degree must be positive".into()));
    }
    gens.iter()
        .enumerate()
        .map(|(i, images)| {
            if images.len() != degree {
                return Err(FormatError(format!(
                    "generator {i} has {} images, expected {degree}",
                    images.len()
                )));
            }
            Permutation::from_images(images.iter().copied())
                .map_err(|e| FormatError(format!("generator {i}: {e}")))
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct ParamsJson {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub p: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub p1: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub p2: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub a: Option<u64>,
}

/// Certificate file. Field order is part of the format.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateFile {
    pub schema: u32,
    pub n: u64,
    pub reason: String,
    pub params: ParamsJson,
    pub degree: usize,
    pub generators: Vec<Vec<usize>>,
}

impl CertificateFile {
    pub fn from_certificate(cert: &WitnessCertificate) -> Self {
        let params = match cert.params {
            WitnessParams::Square { p } => ParamsJson {
                p: Some(p),
                ..Default::default()
            },
            WitnessParams::Arrow { p1, p2, a } => ParamsJson {
                p1: Some(p1),
                p2: Some(p2),
                a: Some(a),
                ..Default::default()
            },
        };
        CertificateFile {
            schema: SCHEMA_VERSION,
            n: cert.n,
            reason: cert.params.reason().to_string(),
            params,
            degree: cert.degree,
            generators: cert
                .generators
                .iter()
                .map(|g| g.images().collect())
                .collect(),
        }
    }

    pub fn parse(text: &str) -> Result<Self, FormatError> {
        let file: CertificateFile = serde_json::from_str(text)?;
        if file.schema != SCHEMA_VERSION {
            return Err(FormatError(format!(
                "unsupported schema {}, expected {SCHEMA_VERSION}",
                file.schema
            )));
        }
        Ok(file)
    }

    /// Compact JSON plus a trailing newline; byte-stable for a given
    /// certificate.
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string(self).expect("certificate serializes");
        s.push('\n');
        s
    }

    pub fn to_certificate(&self) -> Result<WitnessCertificate, FormatError> {
        let missing = |name: &str| FormatError(format!("params.{name} is missing"));
        let params = match self.reason.as_str() {
            "square" => WitnessParams::Square {
                p: self.params.p.ok_or_else(|| missing("p"))?,
            },
            "arrow" => WitnessParams::Arrow {
                p1: self.params.p1.ok_or_else(|| missing("p1"))?,
                p2: self.params.p2.ok_or_else(|| missing("p2"))?,
                a: self.params.a.ok_or_else(|| missing("a"))?,
            },
            other => return Err(FormatError(format!("unknown reason {other:?}"))),
        };
        Ok(WitnessCertificate {
            n: self.n,
            params,
            degree: self.degree,
            generators: parse_generators(self.degree, &self.generators)?,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use cyclic_core::witness::build_witness;

    #[test]
    fn square_certificate_bytes() {
        let cert = build_witness(4).unwrap().unwrap();
        assert_eq!(
            CertificateFile::from_certificate(&cert).to_json(),
            "{\"schema\":1,\"n\":4,\"reason\":\"square\",\"params\":{\"p\":2},\
             \"degree\":4,\"generators\":[[1,0,2,3],[0,1,3,2]]}\n"
        );
    }

    #[test]
    fn arrow_certificate_fields() {
        let cert = build_witness(6).unwrap().unwrap();
        let file = CertificateFile::from_certificate(&cert);
        let json = file.to_json();
        assert!(json.starts_with(
            "{\"schema\":1,\"n\":6,\"reason\":\"arrow\",\"params\":{\"p1\":2,\"p2\":3,\"a\":2},\"degree\":9,"
        ));
        assert_eq!(
            CertificateFile::parse(&json)
                .unwrap()
                .to_certificate()
                .unwrap(),
            cert
        );
    }

    #[test]
    fn rejects_bad_files() {
        assert!(CertificateFile::parse("{").is_err());
        let bad_schema =
            r#"{"schema":2,"n":4,"reason":"square","params":{"p":2},"degree":4,"generators":[]}"#;
        assert!(CertificateFile::parse(bad_schema).is_err());
        let bad_perm = r#"{"schema":1,"n":4,"reason":"square","params":{"p":2},"degree":4,"generators":[[0,0,1,2]]}"#;
        assert!(CertificateFile::parse(bad_perm)
            .unwrap()
            .to_certificate()
            .is_err());
        let missing =
            r#"{"schema":1,"n":4,"reason":"arrow","params":{"p":2},"degree":4,"generators":[]}"#;
        assert!(CertificateFile::parse(missing)
            .unwrap()
            .to_certificate()
            .is_err());
        let short = GroupFile::parse(r#"{"degree":3,"generators":[[1,0]]}"#).unwrap();
        assert!(short.permutations().is_err());
    }

    #[test]
    fn certificate_reads_as_group_file() {
        let cert = build_witness(6).unwrap().unwrap();
        let json = CertificateFile::from_certificate(&cert).to_json();
        let group = GroupFile::parse(&json).unwrap();
        assert_eq!(group.permutations().unwrap(), cert.generators);
    }
}
