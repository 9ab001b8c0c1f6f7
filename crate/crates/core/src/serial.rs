//! JSON records for certificates and alcove foldings.
//!
//! Rationals are strings, `"3"` or `"-1/2"`; weights are lists of them in
//! fundamental-weight coordinates.

use serde::{Deserialize, Serialize};

use crate::afweyl::{AffineWeight, AlcoveCertificate};
use crate::error::{Error, Result};
use crate::rational::{fmt_q, parse_q};
use crate::rootsys::{AffineLabel, FiniteWeight, FiniteWeylElement, RootSystemData};
use crate::steinberg::SteinbergCertificate;

pub fn weight_strings(x: &FiniteWeight) -> Vec<String> {
    x.coords.iter().map(fmt_q).collect()
}

pub fn parse_weight_strings(xs: &[String]) -> Result<FiniteWeight> {
    Ok(FiniteWeight::new(
        xs.iter().map(|s| parse_q(s)).collect::<Result<_>>()?,
    ))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AffineWeightRecord {
    pub classical: Vec<String>,
    pub level: i64,
    pub delta_degree: String,
}

impl From<&AffineWeight> for AffineWeightRecord {
    fn from(w: &AffineWeight) -> Self {
        AffineWeightRecord {
            classical: weight_strings(&w.classical),
            level: w.level,
            delta_degree: fmt_q(&w.degree),
        }
    }
}

impl AffineWeightRecord {
    pub fn to_weight(&self) -> Result<AffineWeight> {
        Ok(AffineWeight::new(
            parse_weight_strings(&self.classical)?,
            self.level,
            parse_q(&self.delta_degree)?,
        ))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateRecord {
    pub label: AffineLabel,
    pub level: i64,
    pub lambda: Vec<String>,
    pub mu: Vec<String>,
    pub w_word: Vec<usize>,
    #[serde(rename = "Lambda")]
    pub dominant: AffineWeightRecord,
    pub v_d_word: Vec<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub verified: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub failure: Option<String>,
}

impl CertificateRecord {
    pub fn new(cert: &SteinbergCertificate) -> Self {
        CertificateRecord {
            label: cert.label,
            level: cert.level,
            lambda: weight_strings(&cert.lambda),
            mu: weight_strings(&cert.mu),
            w_word: cert.w.word().to_vec(),
            dominant: (&cert.dominant).into(),
            v_d_word: cert.v_d_word.clone(),
            verified: None,
            failure: None,
        }
    }

    pub fn to_certificate(&self, rs: &RootSystemData) -> Result<SteinbergCertificate> {
        if self.label != rs.label {
            return Err(Error::InvalidElement(format!(
                "record is for {}, not {}",
                self.label, rs.label
            )));
        }
        let lambda = parse_weight_strings(&self.lambda)?;
        let mu = parse_weight_strings(&self.mu)?;
        rs.check_rank(&lambda)?;
        rs.check_rank(&mu)?;
        let dominant = self.dominant.to_weight()?;
        rs.check_rank(&dominant.classical)?;
        Ok(SteinbergCertificate {
            label: self.label,
            level: self.level,
            lambda,
            mu,
            w: FiniteWeylElement::from_word(rs, &self.w_word)?,
            dominant,
            v_d_word: self.v_d_word.clone(),
        })
    }
}

pub fn certificate_to_json(cert: &SteinbergCertificate, verified: Option<bool>) -> String {
    let mut rec = CertificateRecord::new(cert);
    rec.verified = verified;
    serde_json::to_string_pretty(&rec).expect("records serialize")
}

pub fn certificate_from_json(text: &str) -> Result<CertificateRecord> {
    serde_json::from_str(text).map_err(|e| Error::Serde(e.to_string()))
}

/// Folding output; `transl_coords` and `mu_prime_coords` are both `μ′`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlcoveRecord {
    pub label: AffineLabel,
    pub point: Vec<String>,
    pub word: Vec<usize>,
    pub length: usize,
    pub linear_word: Vec<usize>,
    pub transl_coords: Vec<String>,
    pub mu_prime_coords: Vec<String>,
    pub representative: Vec<String>,
}

impl AlcoveRecord {
    pub fn new(rs: &RootSystemData, point: &FiniteWeight, a: &AlcoveCertificate) -> Self {
        AlcoveRecord {
            label: rs.label,
            point: weight_strings(point),
            word: a.word.clone(),
            length: a.word.len(),
            linear_word: a.u.reduced(rs).word().to_vec(),
            transl_coords: weight_strings(&a.element.transl),
            mu_prime_coords: weight_strings(&a.mu_prime),
            representative: weight_strings(&a.representative.base),
        }
    }
}
