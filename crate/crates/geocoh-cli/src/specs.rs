//! Textual specs for states, bases and ensembles.
//!
//! Grammar (all numbers are plain decimal floats):
//!
//! ```text
//! state    := "bloch:x,y,z"
//!           | "matrix:re00,im00,re01,im01,re10,im10,re11,im11"
//!           | "mcm:q"
//! basis    := "computational" | "hadamard" | "circular" | "ex2y"
//!           | "kets:re,im,re,im;re,im,re,im"
//! ensemble := "example4:theta"
//!           | "w1:re,im,re,im|w2:re,im,re,im"
//! ```
//!
//! `ex2y` is the worked-example basis `{(|0>+2|1>)/√5, (-2|0>+|1>)/√5}`.
//! Bloch input is the primary human-facing form since it cannot violate
//! Hermiticity; raw matrices are accepted for exactness.

use std::fmt;

use geocoh::{Basis64, Complex64, Ensemble64, Ket64, Matrix64, QubitState64};

/// Input-spec failure with a message naming the violated constraint.
#[derive(Debug, Clone, PartialEq)]
pub struct SpecError(pub String);

impl fmt::Display for SpecError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl std::error::Error for SpecError {}

impl From<geocoh::Error> for SpecError {
    fn from(e: geocoh::Error) -> Self {
        SpecError(e.to_string())
    }
}

fn parse_floats(s: &str, want: usize, what: &str) -> Result<Vec<f64>, SpecError> {
    let parts: Vec<&str> = s.split(',').collect();
    if parts.len() != want {
        return Err(SpecError(format!(
            "{what} needs {want} comma-separated numbers, got {}",
            parts.len()
        )));
    }
    parts
        .iter()
        .map(|p| {
            p.trim()
                .parse::<f64>()
                .map_err(|_| SpecError(format!("{what}: `{p}` is not a number")))
        })
        .collect()
}

fn parse_ket(s: &str, what: &str) -> Result<Ket64, SpecError> {
    let v = parse_floats(s, 4, what)?;
    Ok(Ket64::new(
        Complex64::new(v[0], v[1]),
        Complex64::new(v[2], v[3]),
    )?)
}

/// Parsed state spec; keeps the raw text so reports echo it verbatim.
#[derive(Debug, Clone)]
pub struct StateSpec {
    raw: String,
    state: QubitState64,
}

impl StateSpec {
    pub fn parse(raw: &str) -> Result<Self, SpecError> {
        let state = match raw.split_once(':') {
            Some(("bloch", rest)) => {
                let v = parse_floats(rest, 3, "bloch state")?;
                QubitState64::from_bloch(v[0], v[1], v[2])?
            }
            Some(("matrix", rest)) => {
                let v = parse_floats(rest, 8, "matrix state")?;
                let m = Matrix64::new([
                    [Complex64::new(v[0], v[1]), Complex64::new(v[2], v[3])],
                    [Complex64::new(v[4], v[5]), Complex64::new(v[6], v[7])],
                ])?;
                QubitState64::new(m)?
            }
            Some(("mcm", rest)) => {
                let v = parse_floats(rest, 1, "mcm state")?;
                QubitState64::maximally_coherent_mixed(v[0])?
            }
            _ => {
                return Err(SpecError(format!(
                    "state `{raw}` must be bloch:x,y,z | matrix:8 numbers | mcm:q"
                )))
            }
        };
        Ok(Self {
            raw: raw.to_string(),
            state,
        })
    }

    pub fn raw(&self) -> &str {
        &self.raw
    }

    pub fn state(&self) -> &QubitState64 {
        &self.state
    }
}

/// The worked-example basis `{(|0>+2|1>)/√5, (-2|0>+|1>)/√5}`.
pub fn ex2y_basis() -> Basis64 {
    let s5 = 5.0f64.sqrt();
    Basis64::new(
        Ket64::from_real(1.0 / s5, 2.0 / s5).expect("normalized"),
        Ket64::from_real(-2.0 / s5, 1.0 / s5).expect("normalized"),
    )
    .expect("orthonormal")
}

/// Parsed basis spec; keeps the raw text for echoing.
#[derive(Debug, Clone)]
pub struct BasisSpec {
    raw: String,
    basis: Basis64,
}

impl BasisSpec {
    pub fn parse(raw: &str) -> Result<Self, SpecError> {
        let basis = match raw {
            "computational" => Basis64::computational(),
            "hadamard" => Basis64::hadamard(),
            "circular" => Basis64::circular(),
            "ex2y" => ex2y_basis(),
            other => match other.split_once(':') {
                Some(("kets", rest)) => {
                    let (k1, k2) = rest.split_once(';').ok_or_else(|| {
                        SpecError("kets basis needs two kets separated by `;`".to_string())
                    })?;
                    Basis64::new(parse_ket(k1, "basis ket 1")?, parse_ket(k2, "basis ket 2")?)?
                }
                _ => {
                    return Err(SpecError(format!(
                        "basis `{raw}` must be computational | hadamard | circular | ex2y | \
                         kets:re,im,re,im;re,im,re,im"
                    )))
                }
            },
        };
        Ok(Self {
            raw: raw.to_string(),
            basis,
        })
    }

    pub fn raw(&self) -> &str {
        &self.raw
    }

    pub fn basis(&self) -> &Basis64 {
        &self.basis
    }
}

/// Parsed ensemble spec.
#[derive(Debug, Clone)]
pub struct EnsembleSpec {
    raw: String,
    ensemble: Ensemble64,
}

impl EnsembleSpec {
    /// Inline form `w1:ket|w2:ket`.
    pub fn parse(raw: &str) -> Result<Self, SpecError> {
        let (first, second) = raw.split_once('|').ok_or_else(|| {
            SpecError("ensemble needs two weighted kets separated by `|`".to_string())
        })?;
        let mut parts = Vec::with_capacity(2);
        for (i, item) in [first, second].iter().enumerate() {
            let (w, ket) = item.split_once(':').ok_or_else(|| {
                SpecError(format!(
                    "ensemble element {} needs the form w:re,im,re,im",
                    i + 1
                ))
            })?;
            let weight: f64 = w
                .trim()
                .parse()
                .map_err(|_| SpecError(format!("ensemble weight `{w}` is not a number")))?;
            parts.push((weight, parse_ket(ket, "ensemble ket")?));
        }
        let ensemble = Ensemble64::new([parts[0], parts[1]])?;
        Ok(Self {
            raw: raw.to_string(),
            ensemble,
        })
    }

    /// The worked discrimination family at angle `theta`:
    /// `ψ1 = cosθ|0> + sinθ|1>`, `ψ2 = sinθ|0> + cosθ|1>`, equal weights.
    pub fn example4(theta: f64) -> Result<Self, SpecError> {
        if !theta.is_finite() || theta.abs() > core::f64::consts::FRAC_PI_4 + 1e-12 {
            return Err(SpecError(format!(
                "example4 angle {theta} outside [-π/4, π/4]"
            )));
        }
        let psi1 = Ket64::from_real(theta.cos(), theta.sin())?;
        let psi2 = Ket64::from_real(theta.sin(), theta.cos())?;
        let ensemble = Ensemble64::new([(0.5, psi1), (0.5, psi2)])?;
        Ok(Self {
            raw: format!("example4:{theta}"),
            ensemble,
        })
    }

    pub fn raw(&self) -> &str {
        &self.raw
    }

    pub fn ensemble(&self) -> &Ensemble64 {
        &self.ensemble
    }
}
