use super::*;
use crate::liealg::classical::cybe_residual;
use proptest::prelude::*;

fn q(n: i64, d: i64) -> Rational {
    Rational::new(n, d)
}

fn diagonal(a0: i64, a1: i64, b0: i64, b1: i64) -> ActionConstants {
    // ρ(H_1) = −diag(a0, a1), ρ(H_2) = −diag(b0, b1) on (X^1, X^2), H abelian
    let z = || vec![vec![Rational::ZERO; 2]; 2];
    let mut l = vec![z(), z()];
    l[0][0][0] = Rational::from_integer(a0);
    l[0][1][1] = Rational::from_integer(a1);
    l[1][0][0] = Rational::from_integer(b0);
    l[1][1][1] = Rational::from_integer(b1);
    let c = vec![z(), z()];
    ActionConstants::new(2, &l).unwrap().with_bracket(&c).unwrap()
}

fn valid_family() -> Vec<(&'static str, ActionConstants)> {
    vec![
        ("seed", ActionConstants::seed(Rational::from_integer(2))),
        ("abelian", ActionConstants::abelian(2)),
        ("diagonal", diagonal(3, 0, 0, -1)),
        ("borel N=3", ActionConstants::borel_split(3).unwrap()),
        ("borel N=4", ActionConstants::borel_split(4).unwrap()),
        ("abstract α=1", ActionConstants::abstract_split(&Rational::ONE).unwrap()),
        ("abstract α=1/2", ActionConstants::abstract_split(&q(1, 2)).unwrap()),
    ]
}

// Shifts by a character of H keep the semidirect sum a Lie algebra but break
// C = L − Lᵀ.
fn perturbed_family() -> Vec<(&'static str, ActionConstants)> {
    vec![
        ("diagonal", diagonal(3, 1, 0, -1)),
        ("borel N=3", ActionConstants::borel_split(3).unwrap().shifted_by_character(0, &Rational::ONE)),
        ("borel N=4", ActionConstants::borel_split(4).unwrap().shifted_by_character(0, &q(-1, 2))),
        ("abstract α=1/2", ActionConstants::abstract_split(&q(1, 2)).unwrap().shifted_by_character(0, &q(3, 1))),
    ]
}

#[test]
fn borel_split_constants() {
    // H_1 = −H, H_j = E_1j, X^1 = −E, X^j = 2E_jN
    let a = ActionConstants::borel_split(3).unwrap();
    assert_eq!(a.dim(), 2);
    assert_eq!(*a.l(0, 0, 0), Rational::from_integer(2));
    assert_eq!(*a.l(0, 1, 1), Rational::ONE);
    assert_eq!(*a.l(1, 0, 1), Rational::from_integer(2));
    assert_eq!(*a.l(1, 1, 0), Rational::ZERO);
    assert_eq!(a.c(0, 1, 1), -Rational::ONE);
    assert!(borel_identification_residual(3).unwrap().is_empty());
    assert!(borel_identification_residual(4).unwrap().is_empty());
}

#[test]
fn seed_semidirect_and_r() {
    let a = ActionConstants::seed(Rational::from_integer(2));
    assert!(validate_action(&a).holds());
    let g = build_semidirect(&a).unwrap();
    let (h, x) = (g.index_of("H").unwrap(), g.index_of("X").unwrap());
    assert_eq!(g.bracket_basis(h, x), &[(x, Rational::from_integer(-2))]);
    assert!(g.bracket_basis(x, x).is_empty());
    let r = classical_r_inhom(&a);
    assert!(r.solves_cybe());
    assert_eq!(r.r.render(&r.names), "-H∧X");
}

#[test]
fn x_sector_is_abelian() {
    for (name, a) in valid_family() {
        let g = build_semidirect(&a).unwrap();
        let d = a.dim();
        for i in d..2 * d {
            for j in d..2 * d {
                assert!(g.bracket_basis(i, j).is_empty(), "{name}");
            }
        }
    }
}

#[test]
fn validity_matches_cybe() {
    for (name, a) in valid_family() {
        let report = validate_action(&a);
        assert!(report.holds(), "{name}: {:?}", report.witness());
        assert!(classical_r_inhom(&a).solves_cybe(), "{name}");
    }
    for (name, a) in perturbed_family() {
        let report = validate_action(&a);
        assert!(!report.holds(), "{name}");
        assert!(!report.bracket_mismatch.is_empty(), "{name}");
        assert!(check_jacobi(&semidirect_unchecked(&a)).holds(), "{name} should stay a Lie algebra");
        let r = classical_r_inhom(&a);
        assert!(!r.solves_cybe(), "{name}");
        assert!(build_semidirect(&a).is_err());
    }
}

#[test]
fn cybe_routes_agree() {
    for (_, a) in valid_family().into_iter().chain(perturbed_family()) {
        let r = classical_r_inhom(&a);
        let structural = cybe_residual(&semidirect_unchecked(&a), &r.r.to_tensor(0));
        assert_eq!(structural.is_zero(), r.solves_cybe());
    }
}

#[test]
fn quasi_associativity_violation_reported() {
    let a = ActionConstants::borel_split(3).unwrap().with_constant(1, 1, 1, Rational::ONE);
    let report = validate_action(&a);
    assert!(!report.quasi_associativity.is_empty());
    assert!(!report.representation.is_empty() || !report.bracket_mismatch.is_empty());
    assert!(report.witness().is_some());
}

#[test]
fn seed_cocycle_series() {
    let a = ActionConstants::seed(Rational::from_integer(2));
    let k = 6;
    let (phi, psi) = phi_psi(&a, k);
    // φ(x) = (1 − e^{−2x})/2, ψ(x) = −½ ln(1 − 2x)
    for j in 1..=k {
        let e = [j as u8];
        let phi_j = -Rational::from_integer(-2).pow(j as u32) * Rational::inv_factorial(j as u32) * q(1, 2);
        let psi_j = Rational::from_integer(2).pow(j as u32 - 1) * q(1, j as i64);
        assert_eq!(phi.components[0].coeff(&e), phi_j, "φ_{j}");
        assert_eq!(psi.components[0].coeff(&e), psi_j, "ψ_{j}");
    }
    assert_eq!(phi_coboundary(&a, k).unwrap(), phi);
}

#[test]
fn abelian_cocycle_is_identity() {
    let (phi, psi) = phi_psi(&ActionConstants::abelian(3), 4);
    assert!(phi.is_identity() && psi.is_identity());
    assert!(right_unity(&ActionConstants::abelian(3)).is_none());
}

#[test]
fn inverse_and_coboundary() {
    for (name, a) in valid_family() {
        let (phi, psi) = phi_psi(&a, 4);
        assert!(psi.compose(&phi).is_identity(), "{name}");
        assert!(phi.compose(&psi).is_identity(), "{name}");
        if let Some(cob) = phi_coboundary(&a, 4) {
            assert_eq!(cob, phi, "{name}");
        }
    }
    let e = right_unity(&ActionConstants::borel_split(3).unwrap()).unwrap();
    assert_eq!(e, vec![q(1, 2), Rational::ZERO]);
}

#[test]
fn cocycle_identities_hold() {
    let cases: Vec<(&str, ActionConstants, usize)> = vec![
        ("seed", ActionConstants::seed(Rational::from_integer(2)), 5),
        ("borel N=3", ActionConstants::borel_split(3).unwrap(), 3),
        ("abstract α=1", ActionConstants::abstract_split(&Rational::ONE).unwrap(), 3),
        ("abstract α=1/2", ActionConstants::abstract_split(&q(1, 2)).unwrap(), 3),
        ("diagonal", diagonal(3, 0, 0, -1), 3),
    ];
    for (name, a, k) in cases {
        let checks = check_cocycle_identities(&a, k).unwrap();
        assert!(checks.len() >= 4);
        for c in checks {
            assert!(c.holds, "{name}: {} {:?}", c.name, c.witness);
        }
    }
}

#[test]
fn seed_twisted_coproduct_of_x_tilde_is_primitive() {
    let t = build_cocycle_twist(&ActionConstants::seed(Rational::from_integer(2)), 4).unwrap();
    let cop = crate::twist::Coproduct::twisted(&t.env, &t.f).unwrap();
    let lhs = cop.apply(&t.env, &t.x_tilde[0]);
    let rhs = &crate::uea::on_leg1(&t.x_tilde[0]) + &crate::uea::on_leg2(&t.x_tilde[0]);
    assert_eq!(lhs, rhs);
}

#[test]
fn cocycle_twist_is_the_extended_twist() {
    assert!(cocycle_matches_extended(3, 3).unwrap().is_zero());
    assert!(cocycle_matches_extended(4, 2).unwrap().is_zero());
}

#[test]
fn invalid_action_has_no_twist() {
    let a = perturbed_family().remove(1).1;
    assert!(build_cocycle_twist(&a, 2).is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    // Quasi-associativity is exactly what makes the semidirect sum with
    // C = L − Lᵀ satisfy Jacobi.
    #[test]
    fn quasi_associativity_is_jacobi(entries in proptest::collection::vec(prop_oneof![4 => Just(0i64), 1 => -2i64..3], 8)) {
        let mut it = entries.into_iter().map(Rational::from_integer);
        let l: Vec<Vec<Vec<Rational>>> = (0..2).map(|_| (0..2).map(|_| (0..2).map(|_| it.next().unwrap()).collect()).collect()).collect();
        let a = ActionConstants::new(2, &l).unwrap();
        let report = validate_action(&a);
        let jac = check_jacobi(&semidirect_unchecked(&a)).holds();
        prop_assert_eq!(report.quasi_associativity.is_empty(), jac);
        prop_assert_eq!(report.holds(), jac);
        prop_assert!(classical_r_inhom(&a).solves_cybe());
    }
}
