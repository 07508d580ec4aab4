//! Laws of the composite mode action: vacuum modes, grading, truncation,
//! the commutator formula, and cross-checks between the recursive composite
//! machinery and the primitive generator brackets.

use core_linalg::{binomial, Sampler, Scalar};
use voa_core::{mode_act, mode_support_top, ModuleRealization, StateVector};

fn s(n: i64) -> Scalar {
    Scalar::from_int(n)
}

fn realizations() -> Vec<ModuleRealization> {
    vec![
        ModuleRealization::heisenberg(),
        ModuleRealization::virasoro(Scalar::ratio(1, 2)),
        ModuleRealization::fock(Scalar::ratio(2, 3)),
        ModuleRealization::verma(Scalar::ratio(-3, 5), Scalar::ratio(1, 7)),
    ]
}

/// Random homogeneous algebra element at a level where the algebra is
/// nonzero.
fn random_algebra(r: &ModuleRealization, sampler: &mut Sampler, max_level: i64) -> StateVector {
    loop {
        let level = sampler.int_in(1, max_level);
        if !r.algebra_basis_at_level(level).is_empty() {
            return r.random_algebra_homogeneous(level, sampler);
        }
    }
}

/// Random homogeneous module vector at a nonempty level `<= max_level`.
fn random_module(r: &ModuleRealization, sampler: &mut Sampler, max_level: i64) -> StateVector {
    loop {
        let level = sampler.int_in(0, max_level);
        if !r.basis_at_level(level).is_empty() {
            return r.random_homogeneous(level, sampler);
        }
    }
}

#[test]
fn vacuum_modes_act_as_identity_at_minus_one_only() {
    let mut sampler = Sampler::new(3);
    for r in realizations() {
        let vac = r.vacuum_vector();
        let w = r.random_homogeneous(3, &mut sampler);
        for m in -4..=3 {
            let got = mode_act(&r, &vac, m, &w).unwrap();
            if m == -1 {
                assert_eq!(got, w);
            } else {
                assert!(got.is_zero(), "vacuum mode {m} should vanish");
            }
        }
    }
}

#[test]
fn boson_pairing_and_conformal_products_match_hand_values() {
    let h = ModuleRealization::heisenberg();
    let a = h.boson_vector();
    let vac = h.vacuum_vector();

    // a_1 a = |vac>, a_0 a = 0, a_{-1} a = a(-1)^2 |vac>.
    assert_eq!(mode_act(&h, &a, 1, &a).unwrap(), vac);
    assert!(mode_act(&h, &a, 0, &a).unwrap().is_zero());
    assert_eq!(
        mode_act(&h, &a, -1, &a).unwrap(),
        StateVector::from_state(h.state(&[1, 1]).unwrap())
    );

    // The conformal vector of the boson has central charge 1:
    // omega_3 omega = 1/2 |vac>.
    let om = h.conformal_vector();
    assert_eq!(
        mode_act(&h, &om, 3, &om).unwrap(),
        vac.scale(&Scalar::ratio(1, 2))
    );
    // omega_1 omega = L(0) omega = 2 omega.
    assert_eq!(mode_act(&h, &om, 1, &om).unwrap(), om.scale(&s(2)));
    // omega_0 omega = L(-1) omega = a(-2) a(-1) |vac>.
    assert_eq!(
        mode_act(&h, &om, 0, &om).unwrap(),
        StateVector::from_state(h.state(&[2, 1]).unwrap())
    );
    // omega_2 omega = L(1) omega = 0.
    assert!(mode_act(&h, &om, 2, &om).unwrap().is_zero());

    // Same products in the Virasoro algebra at c = -26/3.
    let c = Scalar::ratio(-26, 3);
    let v = ModuleRealization::virasoro(c.clone());
    let om = v.conformal_vector();
    assert_eq!(
        mode_act(&v, &om, 3, &om).unwrap(),
        v.vacuum_vector().scale(&(c / s(2)))
    );
    assert_eq!(mode_act(&v, &om, 1, &om).unwrap(), om.scale(&s(2)));
    assert_eq!(
        mode_act(&v, &om, 0, &om).unwrap(),
        StateVector::from_state(v.state(&[3]).unwrap())
    );
}

#[test]
fn conformal_modes_give_degree_operator_and_lowest_weights() {
    // omega_1 = L(0): eigenvalue is base weight + level in every module.
    let lam = Scalar::ratio(3, 4);
    let fock = ModuleRealization::fock(lam.clone());
    let om = fock.conformal_vector();
    let base = fock.base_vector();
    let expected = lam.clone() * &lam / s(2);
    assert_eq!(
        mode_act(&fock, &om, 1, &base).unwrap(),
        base.scale(&expected)
    );
    let deep = StateVector::from_state(fock.state(&[2, 1]).unwrap());
    assert_eq!(
        mode_act(&fock, &om, 1, &deep).unwrap(),
        deep.scale(&(expected.clone() + &s(3)))
    );
    // a(0) reads the momentum.
    let a = fock.boson_vector();
    assert_eq!(mode_act(&fock, &a, 0, &deep).unwrap(), deep.scale(&lam));

    let h = Scalar::ratio(5, 9);
    let verma = ModuleRealization::verma(s(1), h.clone());
    let om = verma.conformal_vector();
    let base = verma.base_vector();
    assert_eq!(mode_act(&verma, &om, 1, &base).unwrap(), base.scale(&h));
}

#[test]
fn modes_shift_levels_exactly() {
    // level(v_m w) = level(w) + level(v) - m - 1 whenever the result is
    // nonzero, across all realizations.
    let mut sampler = Sampler::new(11);
    for r in realizations() {
        for _ in 0..15 {
            let v = random_algebra(&r, &mut sampler, 4);
            let w = random_module(&r, &mut sampler, 3);
            let wl = w.level().expect("homogeneous by construction");
            let m = sampler.int_in(-4, 4);
            let got = mode_act(&r, &v, m, &w).unwrap();
            if got.is_zero() {
                continue;
            }
            let vl = v.level().expect("homogeneous by construction");
            assert_eq!(got.level(), Some(wl + vl - m - 1));
        }
    }
}

#[test]
fn modes_vanish_beyond_the_support_top() {
    let mut sampler = Sampler::new(13);
    for r in realizations() {
        for _ in 0..10 {
            let v = random_algebra(&r, &mut sampler, 4);
            let w = random_module(&r, &mut sampler, 3);
            let top = mode_support_top(&v, &w).unwrap();
            for m in top + 1..=top + 4 {
                assert!(mode_act(&r, &v, m, &w).unwrap().is_zero());
            }
        }
    }
}

#[test]
fn commutator_formula_holds_on_random_samples() {
    // [v_p, u_r] w = sum_{i >= 0} C(p, i) (v_i u)_{p+r-i} w.
    let mut sampler = Sampler::new(17);
    let mut checked = 0usize;
    for r in realizations() {
        let voa = r.self_algebra();
        for _ in 0..13 {
            let v = random_algebra(&r, &mut sampler, 3);
            let u = random_algebra(&r, &mut sampler, 3);
            let w = random_module(&r, &mut sampler, 3);
            let p = sampler.int_in(-3, 3);
            let q = sampler.int_in(-3, 3);

            let lhs = mode_act(&r, &v, p, &mode_act(&r, &u, q, &w).unwrap())
                .unwrap()
                .sub(&mode_act(&r, &u, q, &mode_act(&r, &v, p, &w).unwrap()).unwrap());

            let mut rhs = StateVector::zero();
            let i_top = v.level().unwrap() + u.level().unwrap() - 1;
            for i in 0..=i_top.max(0) {
                let inner = mode_act(voa, &v, i, &u).unwrap();
                if inner.is_zero() {
                    continue;
                }
                let term = mode_act(&r, &inner, p + q - i, &w).unwrap();
                rhs.axpy(&binomial(p, i as u64), &term);
            }
            assert_eq!(lhs, rhs, "commutator mismatch at p={p}, q={q}");
            checked += 1;
        }
    }
    assert!(checked >= 50, "expected at least 50 samples, got {checked}");
}

#[test]
fn composite_conformal_modes_match_the_boson_bracket() {
    // In boson modules, the modes of the conformal vector are built by the
    // composite recursion; they must satisfy [L(m), a(k)] = -k a(m+k) where
    // L(m) = omega_{m+1} and a(k) is the primitive generator action.
    let mut sampler = Sampler::new(19);
    for r in [
        ModuleRealization::heisenberg(),
        ModuleRealization::fock(Scalar::ratio(-5, 4)),
    ] {
        let om = r.conformal_vector();
        for _ in 0..15 {
            let w = random_module(&r, &mut sampler, 3);
            let m = sampler.int_in(-3, 3);
            let k = sampler.int_in(-3, 3);
            let l_then_a = r.apply_generator(k, &mode_act(&r, &om, m + 1, &w).unwrap());
            let a_then_l = mode_act(&r, &om, m + 1, &r.apply_generator(k, &w)).unwrap();
            let lhs = a_then_l.sub(&l_then_a);
            let rhs = r.apply_generator(m + k, &w).scale(&s(-k));
            assert_eq!(lhs, rhs, "boson-Virasoro bracket mismatch at m={m}, k={k}");
        }
    }
}

#[test]
fn translation_mode_is_l_minus_one_on_the_vacuum() {
    // v_{-2} |vac> = L(-1) v, with L(-1) computed as omega_0.
    let mut sampler = Sampler::new(23);
    for r in [
        ModuleRealization::heisenberg(),
        ModuleRealization::virasoro(Scalar::ratio(11, 2)),
    ] {
        let vac = r.vacuum_vector();
        let om = r.conformal_vector();
        for _ in 0..8 {
            let v = random_algebra(&r, &mut sampler, 4);
            let created = mode_act(&r, &v, -2, &vac).unwrap();
            let translated = mode_act(&r, &om, 0, &v).unwrap();
            assert_eq!(created, translated);
        }
    }
}

#[test]
fn creation_recovers_the_element() {
    // Y(v, x)|vac> has no negative powers and its constant term is v.
    let mut sampler = Sampler::new(29);
    for r in [
        ModuleRealization::heisenberg(),
        ModuleRealization::virasoro(s(3)),
    ] {
        let vac = r.vacuum_vector();
        for _ in 0..8 {
            let v = random_algebra(&r, &mut sampler, 4);
            assert_eq!(mode_act(&r, &v, -1, &vac).unwrap(), v);
            for m in 0..=4 {
                assert!(mode_act(&r, &v, m, &vac).unwrap().is_zero());
            }
        }
    }
}
