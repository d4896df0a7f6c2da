//! The Lyubeznik numbers λ_{0,1}, λ_{1,2} and λ_{d+1,d+1} of a projective
//! variety, read off the component counts of its Γ graphs.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gamma::{build_gamma, PrimeFamily};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LyubeznikTriple {
    /// Projective dimension, one less than the Krull dimension of the ring.
    pub d: i64,
    pub lambda01: i64,
    pub lambda12: i64,
    pub lambda_top: i64,
    pub caveats: Vec<String>,
}

/// With `d = dim R - 1`: `λ_{0,1} = #Γ_d - 1`, `λ_{1,2} = #Γ_{d-1} - #Γ_d`
/// and `λ_{d+1,d+1} = #Γ_2`.
pub fn lyubeznik_triple(family: &PrimeFamily) -> Result<LyubeznikTriple> {
    let dim = family.quotient_dim();
    if dim < 2 {
        return Err(Error::Unsupported(format!(
            "Lyubeznik numbers need a ring of dimension at least 2, got {dim}"
        )));
    }
    let d = dim - 1;
    let count = |t: i64| -> Result<i64> { Ok(build_gamma(family, t)?.component_count() as i64) };
    let mut caveats = Vec::new();
    if d - 1 < 1 {
        caveats.push(format!(
            "lambda12 uses Gamma_{} since d = {d}; the graph formula is established for d >= 2",
            d - 1
        ));
    }
    Ok(LyubeznikTriple {
        d,
        lambda01: count(d)? - 1,
        lambda12: count(d - 1)? - count(d)?,
        lambda_top: count(2)?,
        caveats,
    })
}

/// Both triples of a deformation and which entries agree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LyubeznikComparison {
    pub ideal: LyubeznikTriple,
    pub initial: LyubeznikTriple,
    pub lambda01_equal: bool,
    pub lambda12_equal: bool,
    pub lambda_top_equal: bool,
    /// False when `d = 1`, where λ_{1,2} is read from Γ_0 and only reported.
    pub lambda12_asserted: bool,
}

impl LyubeznikComparison {
    /// Agreement of every asserted value.
    pub fn all_equal(&self) -> bool {
        self.lambda01_equal && self.lambda_top_equal && (self.lambda12_equal || !self.lambda12_asserted)
    }
}

pub fn compare_triples(ideal: &PrimeFamily, initial: &PrimeFamily) -> Result<LyubeznikComparison> {
    let a = lyubeznik_triple(ideal)?;
    let b = lyubeznik_triple(initial)?;
    Ok(LyubeznikComparison {
        lambda01_equal: a.lambda01 == b.lambda01,
        lambda12_equal: a.lambda12 == b.lambda12,
        lambda_top_equal: a.lambda_top == b.lambda_top,
        lambda12_asserted: a.d >= 2,
        ideal: a,
        initial: b,
    })
}
