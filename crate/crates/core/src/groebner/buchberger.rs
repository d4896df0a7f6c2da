//! Buchberger's algorithm with the normal selection strategy and both of
//! Buchberger's criteria.

use std::collections::BTreeSet;

use num_traits::One;

use super::division::{reduce_full, sorted_terms, sub_scaled};
use crate::error::{Error, Result};
use crate::polyring::{Coefficient, Monomial, MonomialOrder, Polynomial, Term};

fn make_monic(mut p: Vec<Term>) -> Vec<Term> {
    if let Some((lc, _)) = p.first() {
        if !lc.is_one() {
            let inv = lc.recip();
            for (c, _) in p.iter_mut() {
                *c *= &inv;
            }
        }
    }
    p
}

fn s_polynomial(f: &[Term], g: &[Term], order: &MonomialOrder) -> Vec<Term> {
    let (fm, gm) = (&f[0].1, &g[0].1);
    let lcm = fm.lcm(gm);
    // Both inputs are monic.
    let uf = lcm.div(fm).expect("lcm is a multiple");
    let ug = lcm.div(gm).expect("lcm is a multiple");
    let scaled_f: Vec<Term> = f.iter().map(|(c, m)| (c.clone(), m.mul(&uf))).collect();
    sub_scaled(&scaled_f, &Coefficient::one(), &ug, g, order)
}

/// Computes the reduced Gröbner basis of the ideal generated by `gens`,
/// each element monic and sorted descending, the list sorted ascending by
/// leading monomial. `gens` must be nonzero and share `nvars`.
pub(crate) fn reduced_basis(
    nvars: usize,
    gens: &[Polynomial],
    order: &MonomialOrder,
    max_steps: u64,
) -> Result<Vec<Vec<Term>>> {
    let gens: Vec<&Polynomial> = gens.iter().filter(|g| !g.is_zero()).collect();
    if gens.is_empty() {
        return Ok(Vec::new());
    }
    if gens.iter().all(|g| g.is_monomial()) {
        let ms: Vec<Monomial> = gens.iter().map(|g| g.terms()[0].1.clone()).collect();
        return Ok(finish(
            ms.into_iter()
                .map(|m| vec![(Coefficient::one(), m)])
                .collect(),
            order,
        ));
    }

    let mut basis: Vec<Vec<Term>> = Vec::new();
    for g in &gens {
        let t = make_monic(sorted_terms(g, order));
        if t[0].1.is_one() {
            return Ok(vec![unit(nvars)]);
        }
        if !basis.contains(&t) {
            basis.push(t);
        }
    }

    // (lcm degree, i, j): normal strategy, ties by pair index.
    let mut queue: BTreeSet<(u64, usize, usize)> = BTreeSet::new();
    let mut pending: BTreeSet<(usize, usize)> = BTreeSet::new();
    let push_pair = |queue: &mut BTreeSet<(u64, usize, usize)>,
                     pending: &mut BTreeSet<(usize, usize)>,
                     basis: &[Vec<Term>],
                     i: usize,
                     j: usize| {
        let deg = basis[i][0].1.lcm(&basis[j][0].1).degree();
        queue.insert((deg, i, j));
        pending.insert((i, j));
    };
    for j in 0..basis.len() {
        for i in 0..j {
            push_pair(&mut queue, &mut pending, &basis, i, j);
        }
    }

    let mut steps = 0u64;
    while let Some((_, i, j)) = queue.pop_first() {
        pending.remove(&(i, j));
        let (mi, mj) = (&basis[i][0].1, &basis[j][0].1);
        if mi.is_coprime(mj) {
            continue;
        }
        let lcm = mi.lcm(mj);
        let chain = (0..basis.len()).any(|k| {
            k != i
                && k != j
                && basis[k][0].1.divides(&lcm)
                && !pending.contains(&(i.min(k), i.max(k)))
                && !pending.contains(&(j.min(k), j.max(k)))
        });
        if chain {
            continue;
        }
        steps += 1;
        if steps > max_steps {
            return Err(Error::StepLimit { limit: max_steps });
        }
        let s = s_polynomial(&basis[i], &basis[j], order);
        let refs: Vec<&[Term]> = basis.iter().map(Vec::as_slice).collect();
        let r = reduce_full(s, &refs, order);
        if r.is_empty() {
            continue;
        }
        let r = make_monic(r);
        if r[0].1.is_one() {
            return Ok(vec![unit(nvars)]);
        }
        basis.push(r);
        let new = basis.len() - 1;
        for k in 0..new {
            push_pair(&mut queue, &mut pending, &basis, k, new);
        }
    }
    Ok(finish(basis, order))
}

fn unit(nvars: usize) -> Vec<Term> {
    vec![(Coefficient::one(), Monomial::one(nvars))]
}

/// Minimalize, interreduce, normalize and sort a Gröbner basis.
fn finish(basis: Vec<Vec<Term>>, order: &MonomialOrder) -> Vec<Vec<Term>> {
    let leads: Vec<&Monomial> = basis.iter().map(|g| &g[0].1).collect();
    let keep: Vec<usize> = (0..basis.len())
        .filter(|&i| {
            !(0..basis.len()).any(|j| {
                j != i && leads[j].divides(leads[i]) && (leads[j] != leads[i] || j < i)
            })
        })
        .collect();
    let mut reduced: Vec<Vec<Term>> = keep
        .iter()
        .map(|&i| {
            let others: Vec<&[Term]> = keep
                .iter()
                .filter(|&&j| j != i)
                .map(|&j| basis[j].as_slice())
                .collect();
            make_monic(reduce_full(basis[i].clone(), &others, order))
        })
        .collect();
    reduced.sort_by(|a, b| order.compare(&a[0].1, &b[0].1));
    reduced
}

/// Checks Buchberger's criterion directly: every S-polynomial of `basis`
/// reduces to zero. No pair is skipped.
pub fn satisfies_buchberger_criterion(basis: &[Polynomial], order: &MonomialOrder) -> bool {
    let sorted: Vec<Vec<Term>> = basis
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| make_monic(sorted_terms(g, order)))
        .collect();
    let refs: Vec<&[Term]> = sorted.iter().map(Vec::as_slice).collect();
    for j in 0..sorted.len() {
        for i in 0..j {
            let s = s_polynomial(&sorted[i], &sorted[j], order);
            if !reduce_full(s, &refs, order).is_empty() {
                return false;
            }
        }
    }
    true
}
