//! JSON form of chain certificates.
//!
//! Floats are written in scientific notation with 17 significant digits, so
//! parsing and re-serializing a certificate reproduces it byte for byte.

use flagdom_core::chainball::{
    ChainCertificate, ChainError, Complex64, CycleParam, DomainPoint, Flag, C3,
};
use serde::de::Deserializer;
use serde::ser::{Error as _, Serializer};
use serde::{Deserialize, Serialize};
use serde_json::value::RawValue;

/// `f64` that serializes as `{:.16e}`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Sci(pub f64);

impl Serialize for Sci {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        if !self.0.is_finite() {
            return Err(S::Error::custom("non-finite float in certificate"));
        }
        let raw = RawValue::from_string(format!("{:.16e}", self.0)).map_err(S::Error::custom)?;
        raw.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Sci {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        f64::deserialize(d).map(Sci)
    }
}

/// Complex number as `[re, im]`.
pub type ComplexJson = [Sci; 2];
pub type VectorJson = [ComplexJson; 3];

fn complex_json(z: Complex64) -> ComplexJson {
    [Sci(z.re), Sci(z.im)]
}

fn vector_json(v: &C3) -> VectorJson {
    [complex_json(v[0]), complex_json(v[1]), complex_json(v[2])]
}

fn vector(v: &VectorJson) -> C3 {
    C3::new(
        Complex64::new(v[0][0].0, v[0][1].0),
        Complex64::new(v[1][0].0, v[1][1].0),
        Complex64::new(v[2][0].0, v[2][1].0),
    )
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FlagJson {
    pub line: VectorJson,
    pub plane: [VectorJson; 2],
}

impl FlagJson {
    pub fn new(f: &Flag) -> Self {
        let [p0, p1] = f.plane();
        Self {
            line: vector_json(f.line()),
            plane: [vector_json(p0), vector_json(p1)],
        }
    }

    pub fn to_point(&self, tol_mem: f64, tol_psd: f64) -> Result<DomainPoint, ChainError> {
        let flag = Flag::new(
            &vector(&self.line),
            [vector(&self.plane[0]), vector(&self.plane[1])],
            tol_mem,
        )?;
        DomainPoint::new(flag, tol_psd)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CycleJson {
    #[serde(rename = "W")]
    pub w: [VectorJson; 2],
    #[serde(rename = "L")]
    pub l: VectorJson,
}

impl CycleJson {
    pub fn new(u: &CycleParam) -> Self {
        let [w0, w1] = u.w();
        Self {
            w: [vector_json(w0), vector_json(w1)],
            l: vector_json(u.l()),
        }
    }

    pub fn to_cycle(&self) -> Result<CycleParam, ChainError> {
        CycleParam::new(&vector(&self.w[0]), &vector(&self.w[1]), &vector(&self.l))
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CertificateJson {
    pub x: FlagJson,
    pub y: FlagJson,
    pub cycles: Vec<CycleJson>,
    pub waypoints: Vec<FlagJson>,
    pub residuals: Vec<Sci>,
    pub k: usize,
    pub seed: u64,
}

impl CertificateJson {
    pub fn new(c: &ChainCertificate) -> Self {
        Self {
            x: FlagJson::new(c.x.flag()),
            y: FlagJson::new(c.y.flag()),
            cycles: c.cycles.iter().map(CycleJson::new).collect(),
            waypoints: c.waypoints.iter().map(|p| FlagJson::new(p.flag())).collect(),
            residuals: c.residuals.iter().copied().map(Sci).collect(),
            k: c.k(),
            seed: c.seed,
        }
    }

    /// Rebuilds the certificate; flags are checked against `tol_mem` and
    /// the domain margins against `tol_psd`.
    pub fn to_certificate(&self, tol_mem: f64, tol_psd: f64) -> Result<ChainCertificate, ChainError> {
        Ok(ChainCertificate {
            x: self.x.to_point(tol_mem, tol_psd)?,
            y: self.y.to_point(tol_mem, tol_psd)?,
            cycles: self
                .cycles
                .iter()
                .map(CycleJson::to_cycle)
                .collect::<Result<_, _>>()?,
            waypoints: self
                .waypoints
                .iter()
                .map(|w| w.to_point(tol_mem, tol_psd))
                .collect::<Result<_, _>>()?,
            residuals: self.residuals.iter().map(|r| r.0).collect(),
            seed: self.seed,
        })
    }
}
