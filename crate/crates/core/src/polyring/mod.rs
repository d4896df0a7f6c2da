//! Exact multivariate polynomials over the rationals.
//!
//! Polynomials are kept in a canonical form: no zero coefficients, distinct
//! exponent vectors, terms sorted strictly descending under graded reverse
//! lexicographic order. The active computation order never changes the
//! storage order, so structural equality is order-independent.

mod monomial;
mod order;
mod polynomial;

pub use monomial::Monomial;
pub use order::{cmp_monomials, weight_degree, MonomialOrder};
pub use polynomial::{Coefficient, Polynomial, PolynomialDisplay, Term};
pub(crate) use polynomial::write_monomial;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Variable names of a polynomial ring `K[x_1, ..., x_n]`.
///
/// Variable precedence (for lex and for grevlex ties) is declaration order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RingSpec", into = "RingSpec")]
pub struct RingDescriptor {
    names: Vec<String>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RingSpec {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    n: Option<usize>,
    names: Vec<String>,
}

impl TryFrom<RingSpec> for RingDescriptor {
    type Error = Error;

    fn try_from(spec: RingSpec) -> Result<Self> {
        if let Some(n) = spec.n {
            if n != spec.names.len() {
                return Err(Error::InvalidRing(format!(
                    "n = {n} but {} names given",
                    spec.names.len()
                )));
            }
        }
        RingDescriptor::new(spec.names)
    }
}

impl From<RingDescriptor> for RingSpec {
    fn from(r: RingDescriptor) -> Self {
        RingSpec {
            n: Some(r.names.len()),
            names: r.names,
        }
    }
}

/// True for names matching `[A-Za-z_][A-Za-z0-9_]*`.
pub fn is_valid_variable_name(name: &str) -> bool {
    let mut chars = name.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl RingDescriptor {
    pub fn new<S: Into<String>>(names: impl IntoIterator<Item = S>) -> Result<Self> {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        if names.is_empty() {
            return Err(Error::InvalidRing("a ring needs at least one variable".into()));
        }
        for (i, name) in names.iter().enumerate() {
            if !is_valid_variable_name(name) {
                return Err(Error::InvalidRing(format!("invalid variable name {name:?}")));
            }
            if names[..i].contains(name) {
                return Err(Error::InvalidRing(format!("duplicate variable name {name:?}")));
            }
        }
        Ok(RingDescriptor { names })
    }

    pub fn n(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// A variable name not yet used in this ring, preferring `base`.
    pub fn fresh_name(&self, base: &str) -> String {
        let mut candidate = base.to_string();
        while self.index_of(&candidate).is_some() {
            candidate.push('_');
        }
        candidate
    }

    /// This ring with one more variable appended at the end.
    pub fn extended(&self, name: &str) -> Result<RingDescriptor> {
        let mut names = self.names.clone();
        names.push(name.to_string());
        RingDescriptor::new(names)
    }

    pub(crate) fn check(&self, nvars: usize) -> Result<()> {
        if nvars != self.n() {
            return Err(Error::DimensionMismatch {
                expected: self.n(),
                found: nvars,
            });
        }
        Ok(())
    }
}
