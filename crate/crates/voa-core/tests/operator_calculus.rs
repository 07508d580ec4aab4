//! Vertex-operator windows, the opposite operator, exponentials of `L(1)`,
//! the parity involution, and the composition expansion.

use core_linalg::{Sampler, Scalar};
use voa_core::{
    exp_l1_apply, l1_apply, mode_act, mode_composition_expand, mode_support_top, theta_apply,
    y_o_coefficient, y_o_window, y_window, ModuleRealization, StateVector, VoaError,
};

fn s(n: i64) -> Scalar {
    Scalar::from_int(n)
}

fn random_algebra(r: &ModuleRealization, sampler: &mut Sampler, max_level: i64) -> StateVector {
    loop {
        let level = sampler.int_in(1, max_level);
        if !r.algebra_basis_at_level(level).is_empty() {
            return r.random_algebra_homogeneous(level, sampler);
        }
    }
}

fn random_module(r: &ModuleRealization, sampler: &mut Sampler, max_level: i64) -> StateVector {
    loop {
        let level = sampler.int_in(0, max_level);
        if !r.basis_at_level(level).is_empty() {
            return r.random_homogeneous(level, sampler);
        }
    }
}

#[test]
fn vertex_operator_window_reads_modes() {
    let h = ModuleRealization::heisenberg();
    let a = h.boson_vector();
    let win = y_window(&h, &a, &a, -3, 3).unwrap();
    // Coefficient of x^p is a_{-p-1} a: at p = 0 the squared creation, at
    // p = -2 the pairing a_1 a = |vac>, at p = 2 the deeper creation a_{-3} a.
    assert_eq!(
        win.coeff(0),
        StateVector::from_state(h.state(&[1, 1]).unwrap())
    );
    assert_eq!(win.coeff(-2), h.vacuum_vector());
    assert!(win.coeff(-1).is_zero());
    assert_eq!(
        win.coeff(1),
        StateVector::from_state(h.state(&[2, 1]).unwrap())
    );
    assert_eq!(
        win.coeff(2),
        StateVector::from_state(h.state(&[3, 1]).unwrap())
    );
}

#[test]
fn opposite_operator_matches_hand_computations() {
    let h = ModuleRealization::heisenberg();
    let a = h.boson_vector();
    let vac = h.vacuum_vector();

    // Y°(a, x)|vac> = -sum_{m <= -1} a(m)|vac> x^{m-1}: weight 1 and
    // L(1) a = 0, so the coefficient at p is -a_{p+1}|vac> — the leading
    // term -a at p = -2 followed by the deeper creations, nothing above.
    let win = y_o_window(&h, &a, &vac, -6, 2).unwrap();
    assert_eq!(win.coeff(-2), a.scale(&s(-1)));
    for p in -1..=2 {
        assert!(win.coeff(p).is_zero(), "unexpected coefficient at {p}");
    }
    for p in -6..=-3 {
        let deeper = StateVector::from_state(h.state(&[(-p - 1) as u32]).unwrap());
        assert_eq!(win.coeff(p), deeper.scale(&s(-1)));
    }

    // Y°(|vac>, x) w = w.
    let mut sampler = Sampler::new(5);
    let w = h.random_homogeneous(3, &mut sampler);
    let win = y_o_window(&h, &vac, &w, -4, 4).unwrap();
    for p in -4..=4 {
        if p == 0 {
            assert_eq!(win.coeff(p), w);
        } else {
            assert!(win.coeff(p).is_zero());
        }
    }

    // Y°(omega, x)|vac>: weight 2 and L(1) omega = 0, so the coefficient at
    // p = -4 is (+1) omega_{-1}|vac> = omega.
    let v = ModuleRealization::virasoro(s(1));
    let om = v.conformal_vector();
    let c4 = y_o_coefficient(&v, &om, &v.vacuum_vector(), -4).unwrap();
    assert_eq!(c4, om);
}

#[test]
fn opposite_operator_levels_drop_with_the_power() {
    // The coefficient of x^p in Y°(v, x) w sits at level(w) - wt(v) - p.
    let mut sampler = Sampler::new(31);
    for r in [
        ModuleRealization::fock(Scalar::ratio(1, 3)),
        ModuleRealization::verma(Scalar::ratio(1, 2), Scalar::ratio(1, 16)),
    ] {
        for _ in 0..8 {
            let v = random_algebra(&r, &mut sampler, 4);
            let wl = sampler.int_in(0, 3);
            let w = r.random_homogeneous(wl, &mut sampler);
            let h = v.level().unwrap();
            for p in -6..=3 {
                let coeff = y_o_coefficient(&r, &v, &w, p).unwrap();
                if coeff.is_zero() {
                    continue;
                }
                assert_eq!(coeff.level(), Some(wl - h - p));
            }
            // Beyond p = level(w) - wt(v) everything vanishes.
            for p in (wl - h + 1)..=(wl - h + 3) {
                assert!(y_o_coefficient(&r, &v, &w, p).unwrap().is_zero());
            }
        }
    }
}

#[test]
fn exponential_of_l1_matches_hand_values() {
    let v = ModuleRealization::virasoro(Scalar::ratio(1, 2));
    let vac = v.vacuum_vector();
    let om = v.conformal_vector();

    assert_eq!(exp_l1_apply(&v, &vac, &s(1)).unwrap(), vac);
    assert_eq!(exp_l1_apply(&v, &om, &s(1)).unwrap(), om);

    // L(1) L(-3)|vac> = 4 L(-2)|vac>, and L(1)^2 L(-3)|vac> = 0.
    let l3 = StateVector::from_state(v.state(&[3]).unwrap());
    assert_eq!(
        l1_apply(&v, &l3).unwrap(),
        om.scale(&s(4))
    );
    assert_eq!(
        exp_l1_apply(&v, &l3, &s(1)).unwrap(),
        l3.add(&om.scale(&s(4)))
    );
    // With a parameter t the middle term scales linearly.
    let t = Scalar::ratio(2, 7);
    assert_eq!(
        exp_l1_apply(&v, &l3, &t).unwrap(),
        l3.add(&om.scale(&(t * &s(4)))),
    );
}

#[test]
fn parity_involution_matches_hand_values_and_squares_to_identity() {
    let h = ModuleRealization::heisenberg();
    let a = h.boson_vector();
    assert_eq!(theta_apply(&h, &a).unwrap(), a.scale(&s(-1)));
    assert_eq!(theta_apply(&h, &h.conformal_vector()).unwrap(), h.conformal_vector());

    let v = ModuleRealization::virasoro(Scalar::ratio(4, 5));
    let l3 = StateVector::from_state(v.state(&[3]).unwrap());
    let om = v.conformal_vector();
    assert_eq!(
        theta_apply(&v, &l3).unwrap(),
        l3.scale(&s(-1)).add(&om.scale(&s(-4)))
    );

    // Involution: theta^2 = id on every basis state up to level 8.
    for r in [ModuleRealization::heisenberg(), ModuleRealization::virasoro(s(2))] {
        for level in 0..=8 {
            for b in r.basis_at_level(level) {
                let x = StateVector::from_state(b);
                let twice = theta_apply(&r, &theta_apply(&r, &x).unwrap()).unwrap();
                assert_eq!(twice, x);
            }
        }
    }

    // Only defined where degrees are integers.
    let verma = ModuleRealization::verma(s(1), Scalar::ratio(1, 3));
    assert!(matches!(
        theta_apply(&verma, &verma.base_vector()),
        Err(VoaError::IncompatibleState { .. })
    ));
}

#[test]
fn degree_conjugation_turns_the_exponential_parameter_multiplicative() {
    // t1^{-deg} e^{x L(1)} t1^{deg} v = e^{x t1 L(1)} v on the self module.
    let mut sampler = Sampler::new(37);
    for r in [
        ModuleRealization::heisenberg(),
        ModuleRealization::virasoro(Scalar::ratio(3, 8)),
    ] {
        for _ in 0..8 {
            let v = random_algebra(&r, &mut sampler, 5);
            let x = sampler.scalar();
            let t1 = sampler.nonzero_scalar();
            let conjugated = exp_l1_apply(&r, &v.scale_by_level_power(&t1), &x)
                .unwrap()
                .scale_by_level_power(&t1.clone().inv());
            let direct = exp_l1_apply(&r, &v, &(x.clone() * &t1)).unwrap();
            assert_eq!(conjugated, direct);
        }
    }
}

#[test]
fn composition_expansion_matches_direct_composition() {
    let mut sampler = Sampler::new(43);
    for r in [
        ModuleRealization::heisenberg(),
        ModuleRealization::virasoro(Scalar::ratio(-7, 10)),
        ModuleRealization::verma(Scalar::ratio(-7, 10), Scalar::ratio(5, 2)),
    ] {
        for _ in 0..12 {
            let u = random_algebra(&r, &mut sampler, 3);
            let v = random_algebra(&r, &mut sampler, 3);
            let w = random_module(&r, &mut sampler, 2);
            let p = sampler.int_in(-4, 2);
            let q = sampler.int_in(-4, 2);
            // Smallest admissible truncation parameters for these inputs.
            let k = mode_support_top(&u, &w).unwrap() + 1;
            let s_min = (mode_support_top(&v, &w).unwrap() - q).max(0) as u32;
            let s_used = s_min + sampler.int_in(0, 2) as u32;

            let expanded = mode_composition_expand(&r, &u, p, &v, q, &w, k, s_used).unwrap();
            let composed = mode_act(&r, &u, p, &mode_act(&r, &v, q, &w).unwrap()).unwrap();
            assert_eq!(expanded, composed, "p={p}, q={q}, k={k}, s={s_used}");
        }
    }
}

#[test]
fn composition_expansion_on_the_vacuum_reproduces_normal_ordering() {
    // u = v = a, p = q = -1, w = |vac>, k = 1, s = 1:
    // a_{-1} a_{-1} |vac> = a(-1)^2 |vac>.
    let h = ModuleRealization::heisenberg();
    let a = h.boson_vector();
    let vac = h.vacuum_vector();
    let got = mode_composition_expand(&h, &a, -1, &a, -1, &vac, 1, 1).unwrap();
    assert_eq!(got, StateVector::from_state(h.state(&[1, 1]).unwrap()));

    // u = v = omega, p = 0, q = -1, w = |vac>, k = 0, s = 0:
    // L(-1) L(-2) |vac> = L(-3)|vac>.
    let v = ModuleRealization::virasoro(s(1));
    let om = v.conformal_vector();
    let got = mode_composition_expand(&v, &om, 0, &om, -1, &v.vacuum_vector(), 0, 0).unwrap();
    assert_eq!(got, StateVector::from_state(v.state(&[3]).unwrap()));
}

#[test]
fn composition_expansion_rejects_bad_truncation_parameters() {
    let h = ModuleRealization::heisenberg();
    let a = h.boson_vector();
    // k = -1 requires a_{-1} a = 0, which fails.
    let err = mode_composition_expand(&h, &a, -1, &a, -1, &a, -1, 2).unwrap_err();
    match err {
        VoaError::ModePrecondition { mode } => assert_eq!(mode, "u_(-1) w"),
        other => panic!("expected mode precondition error, got {other:?}"),
    }
    // s too small: with q = -3 we need v_{q+s+1+m} w = 0, but a_0 a ... a_{-1} a != 0.
    let err = mode_composition_expand(&h, &a, -1, &a, -3, &a, 2, 0).unwrap_err();
    match err {
        VoaError::ModePrecondition { mode } => assert_eq!(mode, "v_(-2) w"),
        other => panic!("expected mode precondition error, got {other:?}"),
    }
}
