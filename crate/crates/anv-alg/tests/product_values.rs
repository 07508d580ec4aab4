//! Hand-checked values of the weighted residue products, plus the exact
//! identities they satisfy before any quotient is taken.

use std::sync::Arc;

use core_linalg::{binomial, Sampler, Scalar};
use voa_core::{ModuleRealization, StateVector};

use anv_alg::{
    circ_product, commutator_defect, generalized_product, star_product, star_product_right,
    translate_image, AnError,
};

fn realizations() -> Vec<Arc<ModuleRealization>> {
    vec![
        Arc::new(ModuleRealization::heisenberg()),
        Arc::new(ModuleRealization::virasoro(Scalar::ratio(1, 2))),
        Arc::new(ModuleRealization::fock(Scalar::ratio(2, 3))),
        Arc::new(ModuleRealization::verma(
            Scalar::ratio(-13, 7),
            Scalar::ratio(3, 5),
        )),
    ]
}

fn random_module(r: &ModuleRealization, max_level: i64, sampler: &mut Sampler) -> StateVector {
    loop {
        let level = sampler.int_in(0, max_level);
        if !r.basis_at_level(level).is_empty() {
            return r.random_homogeneous(level, sampler);
        }
    }
}

fn random_algebra(r: &ModuleRealization, max_level: i64, sampler: &mut Sampler) -> StateVector {
    let alg = r.self_algebra();
    loop {
        let level = sampler.int_in(0, max_level);
        if !alg.basis_at_level(level).is_empty() {
            return alg.random_algebra_homogeneous(level, sampler);
        }
    }
}

fn state(r: &ModuleRealization, parts: &[u32]) -> StateVector {
    StateVector::from_state(r.state(parts).unwrap())
}

#[test]
fn vacuum_annihilation_products_vanish() {
    let mut sampler = Sampler::new(41);
    for r in realizations() {
        let vac = r.self_algebra().vacuum_vector();
        for n in 0..=2 {
            let w = random_module(&r, 5, &mut sampler);
            let out = circ_product(&r, &vac, &w, n).unwrap();
            assert!(out.is_zero(), "vacuum circ at n = {n} on {r:?}");
        }
    }
}

#[test]
fn conformal_annihilation_product_is_a_three_term_translate() {
    // ω ∘₀ w = L(-3)w + 2 L(-2)w + L(-1)w on any module.
    let mut sampler = Sampler::new(42);
    for r in realizations() {
        let omega = r.self_algebra().conformal_vector();
        let w = random_module(&r, 4, &mut sampler);
        let got = circ_product(&r, &omega, &w, 0).unwrap();
        // L(m) acting on the module is the conformal field mode ω_{m+1},
        // uniformly across realizations.
        let l = |m: i64, w: &StateVector| voa_core::mode_act(&r, &omega, m + 1, w).unwrap();
        let mut want = l(-3, &w);
        want.axpy(&Scalar::from_int(2), &l(-2, &w));
        want.axpy(&Scalar::one(), &l(-1, &w));
        assert_eq!(got, want, "on {r:?}");
    }
}

#[test]
fn boson_self_annihilation_product_matches_hand_value() {
    // a ∘₀ a = α(-2)α(-1)|0> + α(-1)²|0>.
    let r = Arc::new(ModuleRealization::heisenberg());
    let a = r.boson_vector();
    let got = circ_product(&r, &a, &a, 0).unwrap();
    let want = state(&r, &[2, 1]).add(&state(&r, &[1, 1]));
    assert_eq!(got, want);
}

#[test]
fn sharpened_products_shift_modes_one_step_per_depth() {
    // Res_x x^{-3} (1+x)² Y(ω,x)|0> = L(-4)|0> + 2 L(-3)|0> + L(-2)|0>:
    // depth r = 1 reaches exactly one mode lower than the plain product.
    let r = Arc::new(ModuleRealization::virasoro(Scalar::ratio(-26, 5)));
    let omega = r.conformal_vector();
    let vac = r.vacuum_vector();
    let got = generalized_product(&r, &omega, &vac, 0, 1, 0).unwrap();
    let mut want = state(&r, &[4]);
    want.axpy(&Scalar::from_int(2), &state(&r, &[3]));
    want.axpy(&Scalar::one(), &state(&r, &[2]));
    assert_eq!(got, want);
}

#[test]
fn sharpened_product_at_depth_zero_is_the_plain_product() {
    let mut sampler = Sampler::new(43);
    for r in realizations() {
        for n in 0..=2 {
            let v = random_algebra(&r, 4, &mut sampler);
            let w = random_module(&r, 4, &mut sampler);
            assert_eq!(
                generalized_product(&r, &v, &w, n, 0, 0).unwrap(),
                circ_product(&r, &v, &w, n).unwrap(),
            );
        }
    }
}

#[test]
fn sharpened_product_rejects_bad_depth_parameters() {
    let r = Arc::new(ModuleRealization::heisenberg());
    let a = r.boson_vector();
    let vac = r.vacuum_vector();
    match generalized_product(&r, &a, &vac, 0, 1, 2) {
        Err(AnError::BadProductParams { r: 1, s: 2 }) => {}
        other => panic!("expected parameter rejection, got {other:?}"),
    }
    match generalized_product(&r, &a, &vac, 0, -1, -2) {
        Err(AnError::BadProductParams { .. }) => {}
        other => panic!("expected parameter rejection, got {other:?}"),
    }
    match circ_product(&r, &a, &vac, -1) {
        Err(AnError::NegativeLevel { n: -1 }) => {}
        other => panic!("expected level rejection, got {other:?}"),
    }
}

#[test]
fn vacuum_is_an_exact_two_sided_identity_for_the_multiplication() {
    // 𝟏 ∗ v = v and w ∗ 𝟏 = w hold exactly (not just modulo the ideal)
    // at every level.
    let mut sampler = Sampler::new(44);
    for r in realizations() {
        let vac = r.self_algebra().vacuum_vector();
        for n in 0..=2 {
            let w = random_module(&r, 5, &mut sampler);
            assert_eq!(star_product(&r, &vac, &w, n).unwrap(), w, "left, n = {n}");
            assert_eq!(
                star_product_right(&r, &w, &vac, n).unwrap(),
                w,
                "right, n = {n}"
            );
        }
    }
}

#[test]
fn boson_multiplication_squares_to_twice_the_conformal_vector() {
    // a ∗₀ a = α(-1)²|0> = 2ω, and a ∗₀ |0> = a.
    let r = Arc::new(ModuleRealization::heisenberg());
    let a = r.boson_vector();
    let vac = r.vacuum_vector();
    let got = star_product(&r, &a, &a, 0).unwrap();
    assert_eq!(got, state(&r, &[1, 1]));
    assert_eq!(got, r.conformal_vector().scale(&Scalar::from_int(2)));
    assert_eq!(star_product(&r, &a, &vac, 0).unwrap(), a);
}

#[test]
fn translate_image_of_the_boson_matches_hand_value() {
    // (L(-1) + L(0)) a = α(-2)|0> + α(-1)|0>.
    let r = Arc::new(ModuleRealization::heisenberg());
    let a = r.boson_vector();
    let got = translate_image(&r, &a).unwrap();
    assert_eq!(got, state(&r, &[2]).add(&state(&r, &[1])));
}

#[test]
fn commutator_defect_of_the_conformal_vector_is_the_translate_image() {
    // Res_x (1+x) Y(ω,x) w = L(-1)w + L(0)w.
    let mut sampler = Sampler::new(45);
    for r in realizations() {
        let omega = r.self_algebra().conformal_vector();
        let w = random_module(&r, 5, &mut sampler);
        assert_eq!(
            commutator_defect(&r, &omega, &w).unwrap(),
            translate_image(&r, &w).unwrap(),
        );
    }
}

#[test]
fn translate_images_multiply_to_exact_annihilation_products() {
    // (L(-1)v + L(0)v) ∗ₙ w = (-1)ⁿ (n+1) C(2n+1, n) · (v ∘ₙ w) exactly,
    // with constants 1, -6, 30 at n = 0, 1, 2. (The equivalent form
    // (2n+1)·C(2n,n) is sometimes misquoted as (2n+1)·C(2n+1,n); the n = 1
    // boson instance v = a, w = |0> pins the factor to -6.)
    let mut sampler = Sampler::new(46);
    for r in realizations() {
        for n in 0..=2i64 {
            let constant = {
                let sign = if n % 2 == 0 { Scalar::one() } else { -Scalar::one() };
                sign * Scalar::from_int(n + 1) * binomial(2 * n + 1, n as u64)
            };
            for _ in 0..5 {
                let v = random_algebra(&r, 4, &mut sampler);
                let w = random_module(&r, 3, &mut sampler);
                // The translate image of the algebra element v is taken in
                // the algebra itself, not in the module.
                let tv = translate_image(r.self_algebra(), &v).unwrap();
                let lhs = star_product(&r, &tv, &w, n).unwrap();
                let rhs = circ_product(&r, &v, &w, n).unwrap().scale(&constant);
                assert_eq!(lhs, rhs, "n = {n} on {r:?}");
            }
        }
    }
}

#[test]
fn translate_commutator_acts_coefficientwise_on_vertex_operators() {
    // [L(-1)+L(0), Y(v,x)]w = ((1+x)(d/dx)Y(v,x) + wt v · Y(v,x))w, read at
    // the coefficient of x^{-m-1}:
    //   (L(-1)+L(0))(v_m w) - v_m((L(-1)+L(0))w)
    //     = -m·v_{m-1}w + (wt v - m - 1)·v_m w.
    let mut sampler = Sampler::new(47);
    for r in realizations() {
        for _ in 0..3 {
            let v = random_algebra(&r, 4, &mut sampler);
            let wt_v = v.levels_present()[0];
            let w = random_module(&r, 4, &mut sampler);
            let tw = translate_image(&r, &w).unwrap();
            for m in -3..=3i64 {
                let vm_w = voa_core::mode_act(&r, &v, m, &w).unwrap();
                let lhs = translate_image(&r, &vm_w)
                    .unwrap()
                    .sub(&voa_core::mode_act(&r, &v, m, &tw).unwrap());
                let mut rhs = voa_core::mode_act(&r, &v, m - 1, &w)
                    .unwrap()
                    .scale(&Scalar::from_int(-m));
                rhs.axpy(&Scalar::from_int(wt_v - m - 1), &vm_w);
                assert_eq!(lhs, rhs, "mode {m} on {r:?}");
            }
        }
    }
}
