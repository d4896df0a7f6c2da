use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::{Monomial, MonomialOrder, RingDescriptor};
use crate::error::{Error, Result};

/// Rational coefficient; `BigRational` keeps itself in lowest terms with a
/// positive denominator.
pub type Coefficient = BigRational;

pub type Term = (Coefficient, Monomial);

/// A polynomial in canonical form.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    nvars: usize,
    terms: Vec<Term>,
}

fn canonical_cmp(a: &Monomial, b: &Monomial) -> Ordering {
    MonomialOrder::GrevLex.compare(a, b)
}

impl Polynomial {
    pub fn zero(nvars: usize) -> Self {
        Polynomial {
            nvars,
            terms: Vec::new(),
        }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, Coefficient::one())
    }

    pub fn constant(nvars: usize, c: Coefficient) -> Self {
        Self::term(c, Monomial::one(nvars))
    }

    pub fn var(nvars: usize, index: usize) -> Self {
        Self::term(Coefficient::one(), Monomial::var(nvars, index))
    }

    pub fn term(c: Coefficient, m: Monomial) -> Self {
        let nvars = m.nvars();
        if c.is_zero() {
            return Self::zero(nvars);
        }
        Polynomial {
            nvars,
            terms: vec![(c, m)],
        }
    }

    /// Builds a polynomial from arbitrary terms, merging duplicates.
    ///
    /// Panics if a monomial has the wrong number of variables.
    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = Term>) -> Self {
        let mut acc: HashMap<Monomial, Coefficient> = HashMap::new();
        for (c, m) in terms {
            assert_eq!(m.nvars(), nvars, "monomial arity does not match ring");
            *acc.entry(m).or_insert_with(Coefficient::zero) += c;
        }
        let mut terms: Vec<Term> = acc
            .into_iter()
            .filter(|(_, c)| !c.is_zero())
            .map(|(m, c)| (c, m))
            .collect();
        terms.sort_by(|a, b| canonical_cmp(&b.1, &a.1));
        Polynomial { nvars, terms }
    }

    /// Builds a polynomial from terms already sorted by `order`, descending,
    /// with distinct monomials and nonzero coefficients.
    pub(crate) fn from_sorted_terms(nvars: usize, mut terms: Vec<Term>, order: &MonomialOrder) -> Self {
        if *order != MonomialOrder::GrevLex {
            terms.sort_by(|a, b| canonical_cmp(&b.1, &a.1));
        }
        Polynomial { nvars, terms }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    /// Terms, descending in grevlex.
    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    /// Number of terms.
    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(_, m)| m.is_one())
    }

    /// True for a single nonzero term.
    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn total_degree(&self) -> Option<u64> {
        self.terms.iter().map(|(_, m)| m.degree()).max()
    }

    /// Bit mask of variables that occur; requires `nvars <= 64`.
    pub fn support_mask(&self) -> u64 {
        self.terms.iter().fold(0, |acc, (_, m)| acc | m.support_mask())
    }

    pub fn involves(&self, var: usize) -> bool {
        self.terms.iter().any(|(_, m)| m.exponents()[var] > 0)
    }

    fn check_same_ring(&self, other: &Polynomial) -> Result<()> {
        if self.nvars != other.nvars {
            return Err(Error::DimensionMismatch {
                expected: self.nvars,
                found: other.nvars,
            });
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_same_ring(other)?;
        Ok(self.merge(other, false))
    }

    pub fn checked_sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_same_ring(other)?;
        Ok(self.merge(other, true))
    }

    pub fn checked_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_same_ring(other)?;
        let terms = self.terms.iter().flat_map(|(c1, m1)| {
            other
                .terms
                .iter()
                .map(move |(c2, m2)| (c1 * c2, m1.mul(m2)))
        });
        Ok(Polynomial::from_terms(self.nvars, terms))
    }

    fn merge(&self, other: &Polynomial, negate: bool) -> Polynomial {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.terms, &other.terms);
        while i < a.len() || j < b.len() {
            let ord = match (a.get(i), b.get(j)) {
                (Some(x), Some(y)) => canonical_cmp(&x.1, &y.1),
                (Some(_), None) => Ordering::Greater,
                _ => Ordering::Less,
            };
            match ord {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    let (c, m) = &b[j];
                    out.push((if negate { -c } else { c.clone() }, m.clone()));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate { &a[i].0 - &b[j].0 } else { &a[i].0 + &b[j].0 };
                    if !c.is_zero() {
                        out.push((c, a[i].1.clone()));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        Polynomial {
            nvars: self.nvars,
            terms: out,
        }
    }

    pub fn scale(&self, c: &Coefficient) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.nvars);
        }
        Polynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(a, m)| (a * c, m.clone())).collect(),
        }
    }

    /// `c * m * self`.
    pub fn mul_term(&self, c: &Coefficient, m: &Monomial) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.nvars);
        }
        // Multiplication by a monomial preserves any monomial order.
        Polynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(a, t)| (a * c, t.mul(m))).collect(),
        }
    }

    /// The order-maximal term.
    pub fn leading_term(&self, order: &MonomialOrder) -> Result<(&Coefficient, &Monomial)> {
        order.validate(self.nvars)?;
        if *order == MonomialOrder::GrevLex {
            return self.terms.first().map(|(c, m)| (c, m)).ok_or(Error::ZeroPolynomial);
        }
        self.terms
            .iter()
            .max_by(|a, b| order.compare(&a.1, &b.1))
            .map(|(c, m)| (c, m))
            .ok_or(Error::ZeroPolynomial)
    }

    pub fn leading_monomial(&self, order: &MonomialOrder) -> Option<&Monomial> {
        self.leading_term(order).ok().map(|(_, m)| m)
    }

    /// Divides by the leading coefficient under `order`; zero stays zero.
    pub fn monic(&self, order: &MonomialOrder) -> Polynomial {
        match self.leading_term(order) {
            Ok((c, _)) => {
                let inv = c.recip();
                self.scale(&inv)
            }
            Err(_) => self.clone(),
        }
    }

    /// `max_alpha w . alpha` over the support; `None` for the zero polynomial.
    pub fn weight_degree(&self, w: &[u64]) -> Result<Option<u64>> {
        let mut best = None;
        for (_, m) in &self.terms {
            let d = super::weight_degree(w, m)?;
            best = Some(best.map_or(d, |b: u64| b.max(d)));
        }
        Ok(best)
    }

    /// Terms of maximal `w`-degree.
    pub fn weight_initial_form(&self, w: &[u64]) -> Result<Polynomial> {
        let Some(top) = self.weight_degree(w)? else {
            return Ok(self.clone());
        };
        let mut terms = Vec::new();
        for (c, m) in &self.terms {
            if super::weight_degree(w, m)? == top {
                terms.push((c.clone(), m.clone()));
            }
        }
        Ok(Polynomial {
            nvars: self.nvars,
            terms,
        })
    }

    /// Embeds into a ring with `extra` more variables, appended at the end.
    pub fn extend_vars(&self, extra: usize) -> Polynomial {
        let terms = self.terms.iter().map(|(c, m)| {
            let mut m = m.clone();
            for _ in 0..extra {
                m = m.extended(0);
            }
            (c.clone(), m)
        });
        // Appending zero exponents keeps the grevlex order intact.
        Polynomial {
            nvars: self.nvars + extra,
            terms: terms.collect(),
        }
    }

    /// Substitutes `value` for the last variable.
    pub fn substitute_last(&self, value: &Coefficient) -> Polynomial {
        let terms = self.terms.iter().map(|(c, m)| {
            let (rest, e) = m.truncated();
            (c * num_traits::pow(value.clone(), e as usize), rest)
        });
        Polynomial::from_terms(self.nvars - 1, terms)
    }

    /// Drops the last variable, which must not occur.
    pub fn drop_last_var(&self) -> Option<Polynomial> {
        if self.nvars == 0 || self.involves(self.nvars - 1) {
            return None;
        }
        Some(Polynomial {
            nvars: self.nvars - 1,
            terms: self
                .terms
                .iter()
                .map(|(c, m)| (c.clone(), m.truncated().0))
                .collect(),
        })
    }

    /// Exact division, `None` when `divisor` does not divide `self`.
    pub fn div_exact(&self, divisor: &Polynomial) -> Option<Polynomial> {
        if divisor.is_zero() || self.nvars != divisor.nvars {
            return None;
        }
        let (lc, lm) = (&divisor.terms[0].0, &divisor.terms[0].1);
        let mut rest = self.clone();
        let mut quotient = Polynomial::zero(self.nvars);
        while let Some((c, m)) = rest.terms.first() {
            let q_m = m.div(lm)?;
            let q_c = c / lc;
            let step = Polynomial::term(q_c, q_m);
            rest = &rest - &(&step * divisor);
            quotient = &quotient + &step;
        }
        Some(quotient)
    }

    pub fn display<'a>(&'a self, ring: &'a RingDescriptor) -> PolynomialDisplay<'a> {
        PolynomialDisplay { poly: self, ring }
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list()
            .entries(self.terms.iter().map(|(c, m)| (c.to_string(), m)))
            .finish()
    }
}

macro_rules! binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl $trait<&Polynomial> for &Polynomial {
            type Output = Polynomial;

            /// Panics if the operands live in different rings.
            fn $method(self, rhs: &Polynomial) -> Polynomial {
                self.$checked(rhs).expect("polynomials from different rings")
            }
        }

        impl $trait<Polynomial> for Polynomial {
            type Output = Polynomial;

            fn $method(self, rhs: Polynomial) -> Polynomial {
                (&self).$method(&rhs)
            }
        }
    };
}

binop!(Add, add, checked_add);
binop!(Sub, sub, checked_sub);
binop!(Mul, mul, checked_mul);

impl Neg for &Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        Polynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(c, m)| (-c, m.clone())).collect(),
        }
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        -&self
    }
}

/// Prints a polynomial in the grammar accepted by the parser.
pub struct PolynomialDisplay<'a> {
    poly: &'a Polynomial,
    ring: &'a RingDescriptor,
}

pub(crate) fn write_monomial(f: &mut impl fmt::Write, m: &Monomial, ring: &RingDescriptor) -> fmt::Result {
    let mut first = true;
    for (i, &e) in m.exponents().iter().enumerate() {
        if e == 0 {
            continue;
        }
        if !first {
            f.write_char('*')?;
        }
        first = false;
        f.write_str(&ring.names()[i])?;
        if e > 1 {
            write!(f, "^{e}")?;
        }
    }
    if first {
        f.write_char('1')?;
    }
    Ok(())
}

impl fmt::Display for PolynomialDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.poly.is_zero() {
            return f.write_str("0");
        }
        for (i, (c, m)) in self.poly.terms.iter().enumerate() {
            let negative = c.is_negative();
            match (i, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let abs = c.abs();
            if m.is_one() {
                write!(f, "{abs}")?;
            } else {
                if !abs.is_one() {
                    write!(f, "{abs}*")?;
                }
                write_monomial(f, m, self.ring)?;
            }
        }
        Ok(())
    }
}
