use proptest::prelude::*;

use super::*;
use crate::io::parse_polynomial;
use crate::polyring::Coefficient;

fn ring(names: &[&str]) -> RingDescriptor {
    RingDescriptor::new(names.iter().copied()).unwrap()
}

fn p(r: &RingDescriptor, s: &str) -> Polynomial {
    parse_polynomial(s, r).unwrap()
}

fn ideal(r: &RingDescriptor, gens: &[&str]) -> Ideal {
    Ideal::new(r.n(), gens.iter().map(|s| p(r, s))).unwrap()
}

fn engine() -> Engine {
    Engine::default()
}

fn xyz() -> RingDescriptor {
    ring(&["x", "y", "z"])
}

fn twisted_cubic(r: &RingDescriptor) -> Ideal {
    ideal(r, &["y - x^2", "z - x^3"])
}

#[test]
fn normal_form_examples() {
    let r = ring(&["x", "y"]);
    let g = [p(&r, "x^2 - 1")];
    let nf = normal_form(&p(&r, "x^2*y + 1"), &g, &MonomialOrder::Lex).unwrap();
    assert_eq!(nf, p(&r, "y + 1"));
    assert!(normal_form(&g[0], &g, &MonomialOrder::Lex).unwrap().is_zero());
    let one = Polynomial::one(2);
    assert_eq!(normal_form(&one, &[p(&r, "x")], &MonomialOrder::Lex).unwrap(), one);
}

#[test]
fn principal_basis_is_the_monic_generator() {
    let r = ring(&["x", "y"]);
    let gb = engine().groebner(&ideal(&r, &["x^2 + y^2"]), &MonomialOrder::Lex).unwrap();
    assert_eq!(gb.basis(), &[p(&r, "x^2 + y^2")]);
    let in_i = initial_ideal(&gb);
    assert_eq!(in_i.gens(), &[Monomial::from_exponents(&[2, 0])]);
    let gb = engine().groebner(&ideal(&r, &["3*x - 6*y"]), &MonomialOrder::Lex).unwrap();
    assert_eq!(gb.basis(), &[p(&r, "x - 2*y")]);
}

#[test]
fn twisted_cubic_grevlex_basis() {
    let r = xyz();
    let gb = engine().groebner(&twisted_cubic(&r), &MonomialOrder::GrevLex).unwrap();
    let expected = vec![p(&r, "y^2 - x*z"), p(&r, "x*y - z"), p(&r, "x^2 - y")];
    assert_eq!(gb.basis(), expected.as_slice());
    assert!(satisfies_buchberger_criterion(gb.basis(), &MonomialOrder::GrevLex));
    let in_i = initial_ideal(&gb);
    assert!(!in_i.is_squarefree());
    assert_eq!(
        in_i.gens(),
        &[
            Monomial::from_exponents(&[2, 0, 0]),
            Monomial::from_exponents(&[1, 1, 0]),
            Monomial::from_exponents(&[0, 2, 0]),
        ]
    );
}

#[test]
fn twisted_cubic_lex_basis() {
    let r = xyz();
    let gb = engine().groebner(&twisted_cubic(&r), &MonomialOrder::Lex).unwrap();
    assert!(satisfies_buchberger_criterion(gb.basis(), &MonomialOrder::Lex));
    let expected = vec![
        p(&r, "y^3 - z^2"),
        p(&r, "x*z - y^2"),
        p(&r, "x*y - z"),
        p(&r, "x^2 - y"),
    ];
    assert_eq!(gb.basis(), expected.as_slice());
}

#[test]
fn basis_is_independent_of_generator_order() {
    let r = xyz();
    let a = engine().groebner(&ideal(&r, &["y - x^2", "z - x^3"]), &MonomialOrder::Lex).unwrap();
    let b = engine().groebner(&ideal(&r, &["z - x^3", "y - x^2"]), &MonomialOrder::Lex).unwrap();
    assert_eq!(a, b);
}

#[test]
fn membership_examples() {
    let r = xyz();
    let gb = engine().groebner(&twisted_cubic(&r), &MonomialOrder::GrevLex).unwrap();
    assert!(member(&p(&r, "y^2 - x*z"), &gb).unwrap());
    assert!(member(&Polynomial::zero(3), &gb).unwrap());
    let xy = engine().groebner(&ideal(&r, &["x", "y"]), &MonomialOrder::Lex).unwrap();
    assert!(!member(&Polynomial::one(3), &xy).unwrap());
}

#[test]
fn step_limit_fails_loudly() {
    let r = xyz();
    let tight = Engine::new(Limits { max_steps: 1 });
    let err = tight.groebner(&twisted_cubic(&r), &MonomialOrder::Lex).unwrap_err();
    assert_eq!(err, Error::StepLimit { limit: 1 });
}

#[test]
fn elimination_examples() {
    let r = xyz();
    let e = engine();
    let elim = e.eliminate(&twisted_cubic(&r), &[false, true, true]).unwrap();
    assert_eq!(elim.gens(), &[p(&r, "y^3 - z^2")]);
    let all = e.eliminate(&twisted_cubic(&r), &[true, true, true]).unwrap();
    assert!(e.same_ideal(&all, &twisted_cubic(&r)).unwrap());
    let r2 = ring(&["x", "y"]);
    let proj = e.eliminate(&ideal(&r2, &["x - y"]), &[false, true]).unwrap();
    assert!(proj.is_zero());
}

#[test]
fn intersection_examples() {
    let e = engine();
    let r = ring(&["x", "y", "z", "w"]);
    let xy = ideal(&r, &["x", "y"]);
    let zw = ideal(&r, &["z", "w"]);
    let expected = ideal(&r, &["x*z", "x*w", "y*z", "y*w"]);
    let fast = e.intersect(&xy, &zw).unwrap();
    let slow = e.intersect_by_elimination(&xy, &zw).unwrap();
    assert!(e.same_ideal(&fast, &expected).unwrap());
    assert!(e.same_ideal(&slow, &expected).unwrap());

    let x = ideal(&r, &["x"]);
    let y = ideal(&r, &["y"]);
    assert!(e.same_ideal(&e.intersect_by_elimination(&x, &y).unwrap(), &ideal(&r, &["x*y"])).unwrap());

    let tc = twisted_cubic(&xyz());
    let unit = Ideal::unit(3);
    assert!(e.same_ideal(&e.intersect(&tc, &unit).unwrap(), &tc).unwrap());
}

#[test]
fn colon_examples() {
    let e = engine();
    let r = ring(&["x", "y", "z", "t"]);
    let q = e.colon(&ideal(&r, &["x*y"]), &p(&r, "x")).unwrap();
    assert!(e.same_ideal(&q, &ideal(&r, &["y"])).unwrap());
    let q = e.colon_by_elimination(&ideal(&r, &["x*y"]), &p(&r, "x")).unwrap();
    assert!(e.same_ideal(&q, &ideal(&r, &["y"])).unwrap());

    let raw = ideal(&r, &["x^2 - t*y", "x^3 - t^3*z"]);
    let t = p(&r, "t");
    let q = e.colon(&raw, &t).unwrap();
    let gb = e.groebner(&q, &MonomialOrder::GrevLex).unwrap();
    assert!(gb.contains(&p(&r, "x*y - t^2*z")).unwrap());
    let raw_gb = e.groebner(&raw, &MonomialOrder::GrevLex).unwrap();
    assert!(!raw_gb.contains(&p(&r, "x*y - t^2*z")).unwrap());

    let tc = twisted_cubic(&xyz());
    assert_eq!(e.colon(&tc, &Polynomial::one(3)).unwrap(), tc);
    assert!(matches!(e.colon(&tc, &Polynomial::zero(3)), Err(Error::Contract(_))));
}

#[test]
fn radical_membership_examples() {
    let e = engine();
    let r = xyz();
    assert!(e.radical_member(&p(&r, "x"), &ideal(&r, &["x^2"])).unwrap());
    assert!(e.radical_member(&p(&r, "x + y"), &ideal(&r, &["x", "y^3"])).unwrap());
    assert!(!e.radical_member(&p(&r, "z"), &ideal(&r, &["x"])).unwrap());
}

#[test]
fn dimension_examples() {
    let e = engine();
    let r = ring(&["x", "y", "z", "w"]);
    let planes = ideal(&r, &["x*z", "x*w", "y*z", "y*w"]);
    assert_eq!(e.krull_dimension(&planes, &MonomialOrder::GrevLex).unwrap(), 2);
    assert_eq!(e.krull_dimension(&Ideal::zero(4), &MonomialOrder::Lex).unwrap(), 4);
    assert_eq!(e.krull_dimension(&Ideal::unit(4), &MonomialOrder::Lex).unwrap(), -1);
    let tc = twisted_cubic(&xyz());
    for order in [MonomialOrder::Lex, MonomialOrder::GrevLex, MonomialOrder::weight(vec![3, 5, 6], MonomialOrder::Lex)] {
        assert_eq!(e.krull_dimension(&tc, &order).unwrap(), 1);
    }
}

#[test]
fn height_examples() {
    let e = engine();
    let r = xyz();
    assert_eq!(e.height_in_quotient(&ideal(&r, &["x*y*z"]), &ideal(&r, &["x", "y"])).unwrap(), 1);
    let r4 = ring(&["x", "y", "z", "w"]);
    let planes = ideal(&r4, &["x*z", "x*w", "y*z", "y*w"]);
    assert_eq!(e.height_in_quotient(&planes, &ideal(&r4, &["x", "y", "z", "w"])).unwrap(), 2);
    let tc = twisted_cubic(&r);
    assert_eq!(e.height_in_quotient(&tc, &tc).unwrap(), 0);
    assert!(matches!(
        e.height_in_quotient(&ideal(&r, &["x"]), &ideal(&r, &["y"])),
        Err(Error::Contract(_))
    ));
}

// Random polynomials in three variables with small coefficients.
fn arb_poly(n: usize, max_exp: u32, max_terms: usize) -> impl Strategy<Value = Polynomial> {
    prop::collection::vec((-3i64..=3, prop::collection::vec(0..=max_exp, n)), 1..=max_terms).prop_map(
        move |terms| {
            Polynomial::from_terms(
                n,
                terms
                    .into_iter()
                    .map(|(c, e)| (Coefficient::from_integer(c.into()), Monomial::from_exponents(&e))),
            )
        },
    )
}

fn arb_order() -> impl Strategy<Value = MonomialOrder> {
    prop_oneof![
        Just(MonomialOrder::Lex),
        Just(MonomialOrder::GrevLex),
        Just(MonomialOrder::weight(vec![1, 2, 3], MonomialOrder::GrevLex)),
    ]
}

fn arb_monomial_ideal(n: usize) -> impl Strategy<Value = Ideal> {
    prop::collection::vec(prop::collection::vec(0u32..=2, n), 1..=3).prop_map(move |gens| {
        let gens = gens
            .into_iter()
            .map(|e| Monomial::from_exponents(&e))
            .filter(|m| !m.is_one())
            .map(|m| Polynomial::term(Coefficient::from_integer(1.into()), m));
        Ideal::new(n, gens).unwrap()
    })
}

/// All monomials in `n` variables with every exponent at most `bound`.
fn box_monomials(n: usize, bound: u32) -> Vec<Monomial> {
    let mut out = vec![vec![]];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|v: Vec<u32>| {
                (0..=bound).map(move |e| {
                    let mut w = v.clone();
                    w.push(e);
                    w
                })
            })
            .collect();
    }
    out.into_iter().map(|e| Monomial::from_exponents(&e)).collect()
}

fn divisible(gens: &Ideal, m: &Monomial) -> bool {
    gens.gens().iter().any(|g| g.terms()[0].1.divides(m))
}

fn mono_poly(m: &Monomial) -> Polynomial {
    Polynomial::term(Coefficient::from_integer(1.into()), m.clone())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn division_contract(
        f in arb_poly(3, 3, 5),
        g in prop::collection::vec(arb_poly(3, 2, 3), 1..=3),
        order in arb_order(),
    ) {
        let g: Vec<Polynomial> = g.into_iter().filter(|p| !p.is_zero()).collect();
        prop_assume!(!g.is_empty());
        let r = normal_form(&f, &g, &order).unwrap();
        let gb = engine().groebner(&Ideal::new(3, g.clone()).unwrap(), &order).unwrap();
        prop_assert!(gb.contains(&(&f - &r)).unwrap());
        let leads: Vec<&Monomial> = g.iter().map(|p| p.leading_monomial(&order).unwrap()).collect();
        for (_, m) in r.terms() {
            prop_assert!(leads.iter().all(|l| !l.divides(m)));
        }
    }

    #[test]
    fn reduced_basis_is_canonical(
        g in prop::collection::vec(arb_poly(3, 2, 3), 2..=3),
        c in -2i64..=2,
        var in 0usize..3,
        order in arb_order(),
    ) {
        let g: Vec<Polynomial> = g.into_iter().filter(|p| !p.is_zero()).collect();
        prop_assume!(g.len() >= 2);
        let e = engine();
        let base = e.groebner(&Ideal::new(3, g.clone()).unwrap(), &order).unwrap();
        prop_assert!(satisfies_buchberger_criterion(base.basis(), &order));

        let mut permuted = g.clone();
        permuted.reverse();
        prop_assert_eq!(&e.groebner(&Ideal::new(3, permuted).unwrap(), &order).unwrap(), &base);

        let mut mixed = g.clone();
        let shift = Polynomial::var(3, var).scale(&Coefficient::from_integer(c.into()));
        mixed[0] = &mixed[0] + &(&shift * &g[1]);
        prop_assume!(!mixed[0].is_zero());
        prop_assert_eq!(&e.groebner(&Ideal::new(3, mixed).unwrap(), &order).unwrap(), &base);

        let leads: Vec<&Monomial> = base.leading_monomials().collect();
        for (k, poly) in base.basis().iter().enumerate() {
            prop_assert_eq!(poly.leading_term(&order).unwrap().0, &Coefficient::from_integer(1.into()));
            for (_, m) in poly.terms() {
                for (j, l) in leads.iter().enumerate() {
                    prop_assert!(j == k || !l.divides(m));
                }
            }
        }
        for w in leads.windows(2) {
            prop_assert_eq!(order.compare(w[0], w[1]), std::cmp::Ordering::Less);
        }
    }

    #[test]
    fn generic_intersection_matches_lattice(i in arb_monomial_ideal(4), j in arb_monomial_ideal(4)) {
        let e = engine();
        let meet = e.intersect_by_elimination(&i, &j).unwrap();
        let gb = e.groebner(&meet, &MonomialOrder::GrevLex).unwrap();
        for m in box_monomials(4, 3) {
            let expected = divisible(&i, &m) && divisible(&j, &m);
            prop_assert_eq!(gb.contains(&mono_poly(&m)).unwrap(), expected);
        }
    }

    #[test]
    fn generic_colon_matches_lattice(i in arb_monomial_ideal(4), f in prop::collection::vec(0u32..=2, 4)) {
        let e = engine();
        let f = Monomial::from_exponents(&f);
        let q = e.colon_by_elimination(&i, &mono_poly(&f)).unwrap();
        let gb = e.groebner(&q, &MonomialOrder::GrevLex).unwrap();
        for m in box_monomials(4, 3) {
            prop_assert_eq!(gb.contains(&mono_poly(&m)).unwrap(), divisible(&i, &m.mul(&f)));
        }
    }

    #[test]
    fn radical_membership_matches_lattice(i in arb_monomial_ideal(4)) {
        let e = engine();
        for m in box_monomials(4, 1) {
            // m is square-free, so m is in the radical iff m^2 is in the ideal
            let square = m.mul(&m);
            prop_assert_eq!(e.radical_member(&mono_poly(&m), &i).unwrap(), divisible(&i, &square));
        }
    }

    #[test]
    fn height_of_sum_of_intersections_is_min_pairwise(
        n in 2usize..=5,
        left in prop::collection::vec(1u64..32, 1..=3),
        right in prop::collection::vec(1u64..32, 1..=3),
    ) {
        let e = engine();
        let mask = (1u64 << n) - 1;
        let primes = |masks: &[u64]| -> Vec<Ideal> {
            masks
                .iter()
                .map(|s| s & mask)
                .filter(|&s| s != 0)
                .map(|s| Ideal::variables(n, (0..n).filter(|v| s >> v & 1 == 1)))
                .collect()
        };
        let (ls, rs) = (primes(&left), primes(&right));
        prop_assume!(!ls.is_empty() && !rs.is_empty());
        let meet = |ps: &[Ideal]| ps[1..].iter().fold(ps[0].clone(), |acc, q| e.intersect(&acc, q).unwrap());
        let zero = Ideal::zero(n);
        let lhs = e.height_in_quotient(&zero, &meet(&ls).sum(&meet(&rs)).unwrap()).unwrap();
        let rhs = ls
            .iter()
            .flat_map(|a| rs.iter().map(move |b| (a, b)))
            .map(|(a, b)| e.height_in_quotient(&zero, &a.sum(b).unwrap()).unwrap())
            .min()
            .unwrap();
        prop_assert_eq!(lhs, rhs);
    }
}
