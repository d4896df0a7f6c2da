//! Multivariate division over terms kept sorted by the active order.

use std::cmp::Ordering;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::polyring::{Coefficient, Monomial, MonomialOrder, Polynomial, Term};

/// Terms of `p`, descending under `order`.
pub(crate) fn sorted_terms(p: &Polynomial, order: &MonomialOrder) -> Vec<Term> {
    let mut terms = p.terms().to_vec();
    if *order != MonomialOrder::GrevLex {
        terms.sort_by(|a, b| order.compare(&b.1, &a.1));
    }
    terms
}

/// `f - c * m * g`, all operands sorted descending.
pub(crate) fn sub_scaled(
    f: &[Term],
    c: &Coefficient,
    m: &Monomial,
    g: &[Term],
    order: &MonomialOrder,
) -> Vec<Term> {
    let mut out = Vec::with_capacity(f.len() + g.len());
    let mut gi = g.iter().map(|(gc, gm)| (gc * c, gm.mul(m))).peekable();
    let mut fi = f.iter().peekable();
    loop {
        let ord = match (fi.peek(), gi.peek()) {
            (Some(a), Some(b)) => order.compare(&a.1, &b.1),
            (Some(_), None) => Ordering::Greater,
            (None, Some(_)) => Ordering::Less,
            (None, None) => break,
        };
        match ord {
            Ordering::Greater => out.push(fi.next().unwrap().clone()),
            Ordering::Less => {
                let (gc, gm) = gi.next().unwrap();
                out.push((-gc, gm));
            }
            Ordering::Equal => {
                let (a, am) = fi.next().unwrap();
                let (b, _) = gi.next().unwrap();
                let s = a - b;
                if !s.is_zero() {
                    out.push((s, am.clone()));
                }
            }
        }
    }
    out
}

/// Complete reduction of `f` by `divisors`; the first divisor whose leading
/// monomial divides the current leading term is used.
pub(crate) fn reduce_full(mut p: Vec<Term>, divisors: &[&[Term]], order: &MonomialOrder) -> Vec<Term> {
    let mut rem = Vec::new();
    while !p.is_empty() {
        let (lc, lm) = (&p[0].0, &p[0].1);
        let hit = divisors.iter().find(|g| g[0].1.divides(lm));
        match hit {
            Some(g) => {
                let q = lm.div(&g[0].1).expect("divisibility checked");
                let c = lc / &g[0].0;
                p = sub_scaled(&p, &c, &q, g, order);
            }
            None => {
                rem.push(p.remove(0));
            }
        }
    }
    rem
}

/// Remainder of `f` on division by `divisors` under `order`.
///
/// No monomial of the result is divisible by a leading monomial of a divisor,
/// and `f - r` lies in the ideal they generate. Divisors are tried in list
/// order, so the result is deterministic.
pub fn normal_form(f: &Polynomial, divisors: &[Polynomial], order: &MonomialOrder) -> Result<Polynomial> {
    let n = f.nvars();
    order.validate(n)?;
    let mut sorted = Vec::with_capacity(divisors.len());
    for g in divisors {
        if g.nvars() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: g.nvars(),
            });
        }
        if g.is_zero() {
            return Err(Error::Contract("division by the zero polynomial".into()));
        }
        sorted.push(sorted_terms(g, order));
    }
    let refs: Vec<&[Term]> = sorted.iter().map(Vec::as_slice).collect();
    let rem = reduce_full(sorted_terms(f, order), &refs, order);
    Ok(Polynomial::from_sorted_terms(n, rem, order))
}
