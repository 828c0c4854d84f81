use std::fmt;

use num::{BigInt, One, Zero};

use crate::error::{Error, Result};
use crate::geometry::{format_rational, Rational};

/// An exact threshold; square roots are never evaluated numerically.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Threshold {
    Rational(Rational),
    /// `coeff * sqrt(radicand)`
    SqrtScaled {
        coeff: Rational,
        radicand: Rational,
    },
    Max(Vec<Threshold>),
}

impl Threshold {
    /// Whether `value <= self`, decided exactly.
    pub fn admits(&self, value: &Rational) -> bool {
        match self {
            Threshold::Rational(t) => value <= t,
            Threshold::SqrtScaled { coeff, radicand } => {
                // coeff >= 0 here, so compare squares when value is nonnegative
                if *value <= Rational::zero() {
                    return true;
                }
                value * value <= coeff * coeff * radicand
            }
            Threshold::Max(parts) => parts.iter().any(|t| t.admits(value)),
        }
    }
}

impl fmt::Display for Threshold {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Threshold::Rational(r) => write!(f, "{}", format_rational(r)),
            Threshold::SqrtScaled { coeff, radicand } => {
                write!(
                    f,
                    "{}*sqrt({})",
                    format_rational(coeff),
                    format_rational(radicand)
                )
            }
            Threshold::Max(parts) => {
                let inner: Vec<String> = parts.iter().map(ToString::to_string).collect();
                write!(f, "max({})", inner.join(", "))
            }
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GraphKind {
    Simple,
    /// `no_homotopic_parallels` is the caller's attestation.
    Multigraph {
        no_homotopic_parallels: bool,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundEntry {
    pub name: &'static str,
    pub threshold: Threshold,
    /// `None` when the bound does not apply to this input.
    pub satisfied: Option<bool>,
    pub note: &'static str,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Possibly,
    NotGapPlanar,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DensityReport {
    pub n: usize,
    pub m: usize,
    pub k: usize,
    pub bounds: Vec<BoundEntry>,
    pub verdict: Verdict,
}

fn int(v: usize) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

fn frac(p: i64, q: i64) -> Rational {
    Rational::new(p.into(), q.into())
}

/// Edge-density filters for k-gap-planar graphs on `n` vertices.
pub fn density_report(n: usize, m: usize, k: usize, kind: GraphKind) -> Result<DensityReport> {
    if n < 3 {
        return Err(Error::InvalidParameter(format!(
            "n must be at least 3, got {n}"
        )));
    }
    if k < 1 {
        return Err(Error::InvalidParameter("k must be at least 1".into()));
    }
    let (nr, mr, kr) = (int(n), int(m), int(k));
    let simple = kind == GraphKind::Simple;
    let mut bounds = Vec::new();

    let general = Threshold::Max(vec![
        Threshold::SqrtScaled {
            coeff: frac(558, 100) * &nr,
            radicand: kr.clone(),
        },
        Threshold::Rational(frac(1717, 100) * &nr),
    ]);
    bounds.push(BoundEntry {
        name: "general",
        satisfied: simple.then(|| general.admits(&mr)),
        threshold: general,
        note: "proof-derived constants 5.58 and 17.17, conservative",
    });

    if k <= 2 {
        let t = Threshold::Rational(int(25) * (&nr - int(2)) / (int(7) - int(3) * &kr));
        bounds.push(BoundEntry {
            name: "small-k",
            satisfied: simple.then(|| t.admits(&mr)),
            threshold: t,
            note: "25(n-2)/(7-3k), only for k in {1, 2}",
        });
    }

    if k == 1 {
        let t = Threshold::Rational(int(5) * &nr - int(10));
        let applies = match kind {
            GraphKind::Simple => true,
            GraphKind::Multigraph {
                no_homotopic_parallels,
            } => no_homotopic_parallels,
        };
        bounds.push(BoundEntry {
            name: "5n-10",
            satisfied: applies.then(|| t.admits(&mr)),
            threshold: t,
            note: "k = 1; multigraphs need attested absence of homotopic parallel edges",
        });
    }

    let verdict = if bounds.iter().any(|b| b.satisfied == Some(false)) {
        Verdict::NotGapPlanar
    } else {
        Verdict::Possibly
    };
    Ok(DensityReport {
        n,
        m,
        k,
        bounds,
        verdict,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrossingLowerBounds {
    /// `(7/3) m - (25/3)(n - 2)`; vacuous when not positive.
    pub linear: Rational,
    /// `(1024/31827) m^3 / n^2`, only when `m >= (103/6) n`.
    pub cubic: Option<Rational>,
}

pub fn crossing_lower_bounds(n: usize, m: usize) -> Result<CrossingLowerBounds> {
    if n < 3 {
        return Err(Error::InvalidParameter(format!(
            "n must be at least 3, got {n}"
        )));
    }
    let (nr, mr) = (int(n), int(m));
    let linear = frac(7, 3) * &mr - frac(25, 3) * (&nr - Rational::one() - Rational::one());
    let cubic =
        (mr >= frac(103, 6) * &nr).then(|| frac(1024, 31827) * &mr * &mr * &mr / (&nr * &nr));
    Ok(CrossingLowerBounds { linear, cubic })
}
