use std::cmp::Ordering;
use std::fmt;

use super::Monomial;
use crate::error::{Error, Result};

/// A monomial order on `K[x_1, ..., x_n]`, with `x_1 > x_2 > ... > x_n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum MonomialOrder {
    Lex,
    GrevLex,
    /// Compare `w . a` first, then fall back to `tie`.
    Weight { w: Vec<u64>, tie: Box<MonomialOrder> },
    /// Two-block elimination order: grevlex on the flagged variables decides
    /// first, grevlex on the remaining variables breaks ties.
    Block { eliminate: Vec<bool> },
}

impl MonomialOrder {
    pub fn weight(w: Vec<u64>, tie: MonomialOrder) -> Self {
        MonomialOrder::Weight {
            w,
            tie: Box::new(tie),
        }
    }

    /// Checks that the order is well defined on a ring with `nvars` variables.
    pub fn validate(&self, nvars: usize) -> Result<()> {
        match self {
            MonomialOrder::Lex | MonomialOrder::GrevLex => Ok(()),
            MonomialOrder::Weight { w, tie } => {
                if w.len() != nvars {
                    return Err(Error::DimensionMismatch {
                        expected: nvars,
                        found: w.len(),
                    });
                }
                if w.contains(&0) {
                    return Err(Error::InvalidOrder("weights must be positive".into()));
                }
                tie.validate(nvars)
            }
            MonomialOrder::Block { eliminate } => {
                if eliminate.len() != nvars {
                    return Err(Error::DimensionMismatch {
                        expected: nvars,
                        found: eliminate.len(),
                    });
                }
                Ok(())
            }
        }
    }

    /// Compares two monomials of equal length. Lengths are not checked; use
    /// [`cmp_monomials`] at API boundaries.
    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Ordering {
        self.compare_exponents(a.exponents(), b.exponents())
    }

    fn compare_exponents(&self, a: &[u32], b: &[u32]) -> Ordering {
        match self {
            MonomialOrder::Lex => lex(a, b),
            MonomialOrder::GrevLex => grevlex(a, b),
            MonomialOrder::Weight { w, tie } => {
                let wa = dot(w, a);
                let wb = dot(w, b);
                wa.cmp(&wb).then_with(|| tie.compare_exponents(a, b))
            }
            MonomialOrder::Block { eliminate } => {
                grevlex_masked(a, b, eliminate, true).then_with(|| grevlex_masked(a, b, eliminate, false))
            }
        }
    }
}

/// `lex`, `grevlex`, `weight:3,5,6:lex` or `block:1100`.
impl fmt::Display for MonomialOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MonomialOrder::Lex => f.write_str("lex"),
            MonomialOrder::GrevLex => f.write_str("grevlex"),
            MonomialOrder::Weight { w, tie } => {
                let w: Vec<String> = w.iter().map(u64::to_string).collect();
                write!(f, "weight:{}:{tie}", w.join(","))
            }
            MonomialOrder::Block { eliminate } => {
                f.write_str("block:")?;
                for &e in eliminate {
                    f.write_str(if e { "1" } else { "0" })?;
                }
                Ok(())
            }
        }
    }
}

fn dot(w: &[u64], a: &[u32]) -> u128 {
    w.iter().zip(a).map(|(&w, &e)| w as u128 * e as u128).sum()
}

fn lex(a: &[u32], b: &[u32]) -> Ordering {
    for (x, y) in a.iter().zip(b) {
        match x.cmp(y) {
            Ordering::Equal => continue,
            other => return other,
        }
    }
    Ordering::Equal
}

// Higher total degree wins; on a tie the monomial with the smaller exponent
// in the last differing variable is larger.
fn grevlex(a: &[u32], b: &[u32]) -> Ordering {
    let da: u64 = a.iter().map(|&e| e as u64).sum();
    let db: u64 = b.iter().map(|&e| e as u64).sum();
    da.cmp(&db).then_with(|| {
        for (x, y) in a.iter().zip(b).rev() {
            match x.cmp(y) {
                Ordering::Equal => continue,
                other => return other.reverse(),
            }
        }
        Ordering::Equal
    })
}

fn grevlex_masked(a: &[u32], b: &[u32], mask: &[bool], flag: bool) -> Ordering {
    let pick = |v: &[u32]| -> Vec<u32> {
        v.iter()
            .zip(mask)
            .filter(|(_, &m)| m == flag)
            .map(|(&e, _)| e)
            .collect()
    };
    grevlex(&pick(a), &pick(b))
}

/// Compares `a` and `b` under `order`, checking that both have `order`'s arity.
pub fn cmp_monomials(order: &MonomialOrder, a: &Monomial, b: &Monomial) -> Result<Ordering> {
    if a.nvars() != b.nvars() {
        return Err(Error::DimensionMismatch {
            expected: a.nvars(),
            found: b.nvars(),
        });
    }
    order.validate(a.nvars())?;
    Ok(order.compare(a, b))
}

/// The weighted degree `w . m`.
pub fn weight_degree(w: &[u64], m: &Monomial) -> Result<u64> {
    if w.len() != m.nvars() {
        return Err(Error::DimensionMismatch {
            expected: w.len(),
            found: m.nvars(),
        });
    }
    u64::try_from(dot(w, m.exponents()))
        .map_err(|_| Error::Unsupported("weighted degree overflows u64".into()))
}
