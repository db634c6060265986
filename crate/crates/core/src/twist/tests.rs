use alloc::vec;
use alloc::vec::Vec;
use super::*;
use crate::error::Error;
use crate::scalars::{Rational, XiSeries};
use crate::uea::{embed_13, embed_23, on_leg1, on_leg2, outer, swap, Tensor2};

fn q(n: i64) -> Rational {
    Rational::from_integer(n)
}

fn canonical(n: usize, k: usize) -> Realization {
    Realization::new(&TwistSpec::new(Variant::ExtendedMulti, n, k)).unwrap()
}

#[test]
fn phi_first_order_and_normalization() {
    let r = canonical(3, 2);
    let env = &r.env;
    let phi = r.phi().unwrap();
    let first = outer(&r.h, &env.generator(r.e)).scale_series(&XiSeries::xi(2));
    let truncated = phi.truncate(1);
    assert_eq!(truncated, (&env.one::<2>() + &first).truncate(1));
    assert_eq!(env.counit_leg(&phi, 0), env.one());
    assert_eq!(env.counit_leg(&phi, 1), env.one());
    let r0 = canonical(3, 0);
    assert_eq!(r0.phi().unwrap(), r0.env.one());
    assert_eq!(r0.extended().unwrap(), r0.env.one());
}

#[test]
fn extended_twist_satisfies_twist_equation() {
    for (n, k) in [(2, 4), (3, 4), (4, 3)] {
        let r = canonical(n, k);
        let f = r.extended().unwrap();
        assert!(twist_equation_residual(&r.env, &f, &Coproduct::Classical).is_zero(), "N={}", n);
        let phi = r.phi().unwrap();
        assert!(twist_equation_residual(&r.env, &phi, &Coproduct::Classical).is_zero());
    }
}

#[test]
fn single_factor_and_abstract_twists() {
    for n in [3, 4] {
        let r = Realization::new(&TwistSpec::new(Variant::ExtendedSingle, n, 3)).unwrap();
        let f = r.extended().unwrap();
        assert!(twist_equation_residual(&r.env, &f, &Coproduct::Classical).is_zero());
        assert_eq!(f, r.reversed().unwrap());
    }
    for a in [q(0), q(1), Rational::new(2, 5), q(-1)] {
        let r = Realization::new(&TwistSpec::new(Variant::AbstractL, 0, 4).with_alpha(a)).unwrap();
        let f = r.extended().unwrap();
        assert!(twist_equation_residual(&r.env, &f, &Coproduct::Classical).is_zero());
        assert_eq!(f, r.reversed().unwrap());
        assert_eq!(f, r.combined().unwrap());
    }
}

#[test]
fn three_orderings_agree() {
    for (n, k) in [(2, 4), (3, 4), (4, 3)] {
        let r = canonical(n, k);
        let f = r.extended().unwrap();
        assert_eq!(f, r.reversed().unwrap());
        assert_eq!(f, r.combined().unwrap());
    }
}

#[test]
fn unnormalized_coefficients() {
    // A = ξ(2 E12), B = E23 is the same twist as the normalized default
    let mut c = ExtensionCoefficients::canonical_multi(3);
    c.xi_normalized = false;
    c.factors[0].a_first[0] = q(2);
    let r = Realization::new(&TwistSpec::new(Variant::ExtendedMulti, 3, 3).with_coefficients(c)).unwrap();
    assert_eq!(r.extended().unwrap(), canonical(3, 3).extended().unwrap());
    // a^{12} b^{23} − a^{23} b^{12} = 1 with mixed roots
    let f = FactorCoefficients::one_root(3, 2, [q(2), q(1)], [q(1), q(1)]);
    let spec = TwistSpec::new(Variant::ExtendedMulti, 3, 3).with_coefficients(ExtensionCoefficients {
        factors: vec![f],
        xi_normalized: true,
    });
    let r = Realization::new(&spec).unwrap();
    assert!(twist_equation_residual(&r.env, &r.extended().unwrap(), &Coproduct::Classical).is_zero());
}

#[test]
fn constraint_violations_are_named() {
    let f = FactorCoefficients::one_root(3, 2, [q(1), q(0)], [q(0), q(2)]);
    let spec = TwistSpec::new(Variant::ExtendedMulti, 3, 2)
        .with_coefficients(ExtensionCoefficients { factors: vec![f], xi_normalized: true });
    match Realization::new(&spec) {
        Err(Error::Constraint { relation, .. }) => assert!(relation.contains("[A_j, B_j]")),
        other => panic!("expected constraint error, got {:?}", other.err()),
    }
    // two factors sharing a root: [A_1, B_2] ≠ 0
    let f = FactorCoefficients::one_root(3, 2, [q(1), q(0)], [q(0), q(1)]);
    let spec = TwistSpec::new(Variant::ExtendedMulti, 3, 2).with_coefficients(ExtensionCoefficients {
        factors: vec![f.clone(), f],
        xi_normalized: true,
    });
    match Realization::new(&spec) {
        Err(Error::Constraint { relation, .. }) => assert!(relation.contains("j ≠ k")),
        other => panic!("expected constraint error, got {:?}", other.err()),
    }
}

#[test]
fn factorizable_identities() {
    for (n, k) in [(2, 4), (3, 4), (4, 3)] {
        let r = canonical(n, k);
        let env = &r.env;
        let (r1, r2) = factorization_residuals(env, &r.extended().unwrap(), &Coproduct::Classical).unwrap();
        assert!(r1.is_zero() && r2.is_zero(), "N={}", n);
        let (p1, p2) = factorization_residuals(env, &r.phi().unwrap(), &Coproduct::Classical).unwrap();
        assert!(p1.is_zero() && p2.is_zero());
    }
}

#[test]
fn reversed_factor_is_a_nonfactorizable_twist_of_phi_coproduct() {
    for (n, k) in [(3, 4), (4, 3)] {
        let r = canonical(n, k);
        let env = &r.env;
        let base = Coproduct::twisted(env, &r.phi().unwrap()).unwrap();
        let t = r.phi1_tilde().unwrap();
        assert!(twist_equation_residual(env, &t, &base).is_zero());
        let (r1, _) = factorization_residuals(env, &t, &base).unwrap();
        assert!(!r1.is_zero());
        // composing the two twists reproduces the full twist
        let composed = base.then_twist(env, &t).unwrap();
        assert_eq!(composed.element(env), r.extended().unwrap());
    }
    let r = Realization::new(&TwistSpec::new(Variant::AbstractL, 0, 4)).unwrap();
    let base = Coproduct::twisted(&r.env, &r.phi().unwrap()).unwrap();
    let t = r.phi1_tilde().unwrap();
    assert!(twist_equation_residual(&r.env, &t, &base).is_zero());
    assert!(!factorization_residuals(&r.env, &t, &base).unwrap().0.is_zero());
}

#[test]
fn closed_forms_of_coproducts_and_antipodes() {
    for n in [2, 3, 4] {
        for c in golden::twisted_borel_coproducts(n, 4).unwrap() {
            assert!(c.residual.is_zero(), "N={} {}", n, c.name);
        }
        for c in golden::twisted_borel_antipodes(n, 4).unwrap() {
            assert!(c.residual.is_zero(), "N={} {}", n, c.name);
        }
    }
    for a in [q(1), q(0), Rational::new(1, 3), q(3)] {
        for c in golden::abstract_coproducts(&a, 4).unwrap() {
            assert!(c.residual.is_zero(), "α={} {}", a, c.name);
        }
    }
}

#[test]
fn e32_coproduct_matches_display() {
    let (_, residual, r) = golden::e32_coproduct(4).unwrap();
    assert!(residual.is_zero(), "{}", residual.render(r.names()));
    assert_eq!(golden::e32_closed_form(&r).len(), 7);
}

#[test]
fn r_matrix_properties() {
    for (n, k) in [(2, 4), (3, 4), (4, 3)] {
        let r = canonical(n, k);
        let env = &r.env;
        let f = r.extended().unwrap();
        let rm = universal_r(env, &f).unwrap();
        assert!(triangularity_residual(env, &rm).is_zero());
        assert!(qybe_residual(env, &rm).is_zero());
        let delta = Coproduct::twisted(env, &f).unwrap();
        let r_inv = env.invert(&rm).unwrap();
        for i in 0..env.dim() {
            let a = env.generator(i);
            let lhs = env.mul(&env.mul(&rm, &delta.apply(env, &a)), &r_inv);
            assert_eq!(lhs, delta.apply_op(env, &a));
        }
        assert!(golden::r_matrix_factorization(n, k).unwrap().is_zero());
    }
}

#[test]
fn twisted_hopf_axioms() {
    for (n, k) in [(2, 4), (3, 3), (4, 3)] {
        let r = canonical(n, k);
        let env = &r.env;
        let delta = Coproduct::twisted(env, &r.extended().unwrap()).unwrap();
        let mut gens: Vec<_> = (0..env.dim()).map(|i| env.generator(i)).collect();
        gens.push(r.sigma());
        for a in &gens {
            let res = hopf_axiom_residuals(env, &delta, a).unwrap();
            assert!(res.holds(), "N={} {:?}", n, res.failing());
            let d = delta.apply(env, a);
            let s_a = env.multiply_legs(&env.map_leg(&d, 0, |x| delta.antipode(env, x).unwrap()));
            assert_eq!(s_a, env.scalar::<1>(env.counit(a)));
        }
        let broken = Coproduct::Twisted { f: delta.element(env), f_inv: env.one() };
        assert!(!hopf_axiom_residuals(env, &broken, &r.sigma()).unwrap().holds());
    }
}

#[test]
fn inverse_pair_and_leg_conventions() {
    let r = canonical(3, 3);
    let env = &r.env;
    let f = r.extended().unwrap();
    assert_eq!(env.mul(&f, &env.invert(&f).unwrap()), env.one());
    let x = env.generator(1);
    let y = env.generator(2);
    assert_eq!(swap(&outer(&x, &y)), outer(&y, &x));
    assert_eq!(embed_13(&outer(&x, &y)), crate::uea::outer3(&x, &env.one(), &y));
    let _: Tensor2 = &on_leg1(&x) + &on_leg2(&y);
    let _ = embed_23(&f);
}

#[test]
fn first_order_of_r_is_the_limit_r_matrix() {
    use crate::liealg::classical::r0_borel;
    for n in 2..=4 {
        let r = canonical(n, 2);
        let w = classical_r(&r.env, &r.extended().unwrap()).unwrap();
        assert_eq!(w, r0_borel(n), "N={}", n);
    }
    // single factor: −(H∧E + 2Ã∧B) with Ã = ½(E12 + E13), B = E24 + E34
    let r = Realization::new(
        &TwistSpec::new(Variant::ExtendedSingle, 4, 2).with_coefficients(ExtensionCoefficients::canonical_single(4)),
    )
    .unwrap();
    let w = classical_r(&r.env, &r.extended().unwrap()).unwrap();
    let b = crate::liealg::BorelIndex { n: 4 };
    let unit = |i: usize| {
        let mut v = vec![Rational::ZERO; b.dim()];
        v[i] = Rational::ONE;
        v
    };
    let mut a_t = vec![Rational::ZERO; b.dim()];
    let mut bb = vec![Rational::ZERO; b.dim()];
    for k in 2..4 {
        a_t[b.first_row(k)] = Rational::new(1, 2);
        bb[b.last_col(k)] = Rational::ONE;
    }
    let mut expected = crate::liealg::classical::WedgeElement::zero(b.dim());
    expected.add_wedge(&unit(b.h()), &unit(b.e()), &q(-1));
    expected.add_wedge(&a_t, &bb, &q(-2));
    assert_eq!(w, expected);
}

#[test]
fn cybe_routes_agree() {
    use crate::liealg::classical::{cybe_residual, r0_borel, WedgeElement};
    use crate::liealg::make_borel_restricted;
    let r = canonical(3, 2);
    let good = r0_borel(3).to_tensor(2);
    assert!(cybe_residual_uea(&r.env, &lie_tensor_to_uea(&r.env, &good)).is_zero());
    let b = crate::liealg::BorelIndex { n: 3 };
    let mut x = vec![Rational::ZERO; 4];
    let mut y = vec![Rational::ZERO; 4];
    x[b.first_row(2)] = Rational::ONE;
    y[b.last_col(2)] = Rational::ONE;
    let mut bad = WedgeElement::zero(4);
    bad.add_wedge(&x, &y, &Rational::ONE);
    let bad = bad.to_tensor(2);
    let structural = cybe_residual(&make_borel_restricted(3).unwrap(), &bad);
    let universal = cybe_residual_uea(&r.env, &lie_tensor_to_uea(&r.env, &bad));
    assert!(!structural.is_zero());
    let mut seen = 0;
    for ([u, v, w], c) in universal.iter() {
        assert!(u.degree() == 1 && v.degree() == 1 && w.degree() == 1);
        let (i, j, k) = (u.first_index().unwrap(), v.first_index().unwrap(), w.first_index().unwrap());
        assert_eq!(structural.get(i, j, k), c);
        seen += 1;
    }
    let nonzero = (0..4)
        .flat_map(|i| (0..4).flat_map(move |j| (0..4).map(move |k| (i, j, k))))
        .filter(|&(i, j, k)| !structural.get(i, j, k).is_zero())
        .count();
    assert_eq!(seen, nonzero);
}

#[test]
fn r_matrix_basis_expansion() {
    for (n, k) in [(2, 4), (3, 3)] {
        let (sum, prod) = r_expansion_residuals(n, k).unwrap();
        assert!(sum.is_zero(), "double sum N={}: {:?}", n, sum.witness(&[]));
        assert!(prod.is_zero(), "ordered product N={}", n);
    }
    // π₁ ⊗ x₁ enters with ξ: the ξ-coefficient of R has E ⊗ H with weight 1
    let r = canonical(3, 2);
    let big_r = universal_r(&r.env, &r.extended().unwrap()).unwrap();
    let env = &r.env;
    let key = outer(&env.generator(r.e), &r.h);
    let first: Vec<_> = big_r.xi_coefficient(1);
    for ([a, b], c) in key.iter() {
        let hit = first.iter().find(|(m, _)| m[0] == *a && m[1] == *b).unwrap();
        assert_eq!(&hit.1, &c.coeff(0).clone());
    }
}

#[test]
fn real_form_inverts_the_twist() {
    use crate::liealg::{make_borel_restricted, make_gl};
    for n in 2..=4 {
        assert!(anti_automorphism_violations(&make_gl(n).unwrap(), &theta_signs_gl(n)).is_empty());
        assert!(anti_automorphism_violations(&make_borel_restricted(n).unwrap(), &theta_signs_borel(n)).is_empty());
    }
    // all signs flipped is an automorphism-up-to-sign, not an anti-automorphism
    assert!(!anti_automorphism_violations(&make_gl(3).unwrap(), &vec![Rational::ONE; 9]).is_empty());
    for (n, k) in [(2, 4), (3, 3)] {
        let r = canonical(n, k);
        assert!(involution_violations(&r.env, &theta_signs_borel(n)).is_empty());
        assert!(real_form_residual(&r).unwrap().is_zero(), "N={}", n);
    }
}
