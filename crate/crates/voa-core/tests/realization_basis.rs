//! Basis enumeration, straightening rules, and lowest-weight eigenvalues,
//! pinned against independently computed values.

use core_linalg::Scalar;
use voa_core::{BasisIndexer, ModuleRealization, StateVector, VoaError};

fn s(n: i64) -> Scalar {
    Scalar::from_int(n)
}

#[test]
fn graded_dimensions_match_partition_counts() {
    // Free boson: all partitions.
    let h = ModuleRealization::heisenberg();
    let dims: Vec<usize> = (0..=6).map(|l| h.dim_at_level(l)).collect();
    assert_eq!(dims, vec![1, 1, 2, 3, 5, 7, 11]);

    // Virasoro on itself: partitions with parts >= 2.
    let v = ModuleRealization::virasoro(s(1));
    let dims: Vec<usize> = (0..=6).map(|l| v.dim_at_level(l)).collect();
    assert_eq!(dims, vec![1, 0, 1, 1, 2, 2, 4]);

    // Lowest-weight Virasoro module: again all partitions.
    let verma = ModuleRealization::verma(s(1), s(3));
    let dims: Vec<usize> = (0..=6).map(|l| verma.dim_at_level(l)).collect();
    assert_eq!(dims, vec![1, 1, 2, 3, 5, 7, 11]);

    // Momentum module over the boson: all partitions.
    let fock = ModuleRealization::fock(s(2));
    let dims: Vec<usize> = (0..=4).map(|l| fock.dim_at_level(l)).collect();
    assert_eq!(dims, vec![1, 1, 2, 3, 5]);
}

#[test]
fn basis_enumeration_is_deterministic_largest_first() {
    let h = ModuleRealization::heisenberg();
    let basis = h.basis_at_level(4);
    let parts: Vec<Vec<u32>> = basis.iter().map(|b| b.parts().to_vec()).collect();
    assert_eq!(
        parts,
        vec![
            vec![4],
            vec![3, 1],
            vec![2, 2],
            vec![2, 1, 1],
            vec![1, 1, 1, 1]
        ]
    );

    let v = ModuleRealization::virasoro(s(0));
    let basis = v.basis_at_level(6);
    let parts: Vec<Vec<u32>> = basis.iter().map(|b| b.parts().to_vec()).collect();
    assert_eq!(
        parts,
        vec![vec![6], vec![4, 2], vec![3, 3], vec![2, 2, 2]]
    );
}

#[test]
fn partition_constraints_are_enforced() {
    let v = ModuleRealization::virasoro(s(1));
    // Level-1 state of the Virasoro algebra itself is zero, so parts >= 2.
    assert_eq!(
        v.state(&[1]),
        Err(VoaError::InvalidPartition {
            part: 1,
            min_part: 2
        })
    );
    assert!(v.state(&[2]).is_ok());
    // The lowest-weight module allows part 1.
    let verma = ModuleRealization::verma(s(1), s(0));
    assert!(verma.state(&[1]).is_ok());
    // But its acting algebra still does not.
    assert_eq!(
        verma.algebra_state(&[1]),
        Err(VoaError::InvalidPartition {
            part: 1,
            min_part: 2
        })
    );
    // Descending order is required.
    assert!(matches!(
        ModuleRealization::heisenberg().state(&[1, 3]),
        Err(VoaError::UnsortedPartition { .. })
    ));
}

#[test]
fn boson_straightening_matches_hand_computation() {
    let h = ModuleRealization::heisenberg();
    let w = StateVector::from_state(h.state(&[2, 1, 1]).unwrap());

    // Creation prepends a part.
    let up = h.apply_generator(-3, &w);
    assert_eq!(up, StateVector::from_state(h.state(&[3, 2, 1, 1]).unwrap()));

    // a(1) contracts against each part 1 with pairing 1: multiplicity 2.
    let down1 = h.apply_generator(1, &w);
    assert_eq!(
        down1,
        StateVector::from_term(h.state(&[2, 1]).unwrap(), s(2))
    );

    // a(2) contracts against the part 2 with pairing 2.
    let down2 = h.apply_generator(2, &w);
    assert_eq!(
        down2,
        StateVector::from_term(h.state(&[1, 1]).unwrap(), s(2))
    );

    // a(3) finds no part 3.
    assert!(h.apply_generator(3, &w).is_zero());

    // a(0) is zero on the vacuum module...
    assert!(h.apply_generator(0, &w).is_zero());
    // ...and the momentum on a momentum module.
    let fock = ModuleRealization::fock(Scalar::ratio(3, 2));
    let fw = StateVector::from_state(fock.state(&[2]).unwrap());
    assert_eq!(
        fock.apply_generator(0, &fw),
        fw.scale(&Scalar::ratio(3, 2))
    );
}

#[test]
fn virasoro_straightening_matches_hand_computation() {
    let c = Scalar::ratio(1, 2);
    let v = ModuleRealization::virasoro(c.clone());
    let vac = v.base_vector();

    // L(-1) kills the vacuum of the algebra.
    assert!(v.apply_generator(-1, &vac).is_zero());
    // L(-1) L(-2)|vac> = L(-3)|vac>.
    let omega = v.conformal_vector();
    assert_eq!(
        v.apply_generator(-1, &omega),
        StateVector::from_state(v.state(&[3]).unwrap())
    );
    // L(1) L(-2)|vac> = 3 L(-1)|vac> = 0.
    assert!(v.apply_generator(1, &omega).is_zero());
    // L(2) L(-2)|vac> = (4 L(0) + c/2)|vac> = c/2 |vac>.
    assert_eq!(
        v.apply_generator(2, &omega),
        vac.scale(&(c.clone() / s(2)))
    );
    // L(0) eigenvalue is the level on the self module.
    let deep = StateVector::from_state(v.state(&[3, 2]).unwrap());
    assert_eq!(v.apply_generator(0, &deep), deep.scale(&s(5)));

    // On a lowest-weight module the same computations keep h.
    let h = Scalar::ratio(7, 3);
    let m = ModuleRealization::verma(c.clone(), h.clone());
    let base = m.base_vector();
    // L(-1)|h> survives.
    assert_eq!(
        m.apply_generator(-1, &base),
        StateVector::from_state(m.state(&[1]).unwrap())
    );
    // L(1) L(-2)|h> = 3 L(-1)|h>.
    let l2 = StateVector::from_state(m.state(&[2]).unwrap());
    assert_eq!(
        m.apply_generator(1, &l2),
        StateVector::from_term(m.state(&[1]).unwrap(), s(3))
    );
    // L(2) L(-2)|h> = (4h + c/2)|h>.
    assert_eq!(
        m.apply_generator(2, &l2),
        base.scale(&(h.clone() * &s(4) + &(c.clone() / s(2))))
    );
    // L(0) eigenvalue is h + level.
    let deep = StateVector::from_state(m.state(&[2, 1]).unwrap());
    assert_eq!(m.apply_generator(0, &deep), deep.scale(&(h.clone() + &s(3))));
}

#[test]
fn virasoro_bracket_is_reproduced_on_random_states() {
    // [L(m), L(k)] w = (m-k) L(m+k) w + delta_{m+k,0} (m^3-m)/12 c w,
    // checked directly against the straightening on random module states.
    let c = Scalar::ratio(-13, 7);
    let m = ModuleRealization::verma(c.clone(), Scalar::ratio(2, 5));
    let mut sampler = core_linalg::Sampler::new(41);
    for _ in 0..40 {
        let level = sampler.int_in(0, 4);
        let w = m.random_homogeneous(level, &mut sampler);
        let mm = sampler.int_in(-3, 3);
        let kk = sampler.int_in(-3, 3);
        let lhs = m
            .apply_generator(mm, &m.apply_generator(kk, &w))
            .sub(&m.apply_generator(kk, &m.apply_generator(mm, &w)));
        let mut rhs = m.apply_generator(mm + kk, &w).scale(&s(mm - kk));
        if mm + kk == 0 {
            let central = s(mm * mm * mm - mm) / s(12) * &c;
            rhs.axpy(&central, &w);
        }
        assert_eq!(lhs, rhs, "bracket mismatch at m={mm}, k={kk}");
    }
}

#[test]
fn indexer_round_trips_and_orders_by_level() {
    let h = ModuleRealization::heisenberg();
    let idx = BasisIndexer::for_module(&h, 5);
    assert_eq!(idx.len(), 1 + 1 + 2 + 3 + 5 + 7);
    assert_eq!(idx.range_at_level(3), 4..7);

    let mut sampler = core_linalg::Sampler::new(7);
    let v = h.random_homogeneous(4, &mut sampler);
    let sv = idx.to_sparse(&v).unwrap();
    assert_eq!(idx.from_sparse(&sv), v);

    for (i, state) in idx.states().iter().enumerate() {
        assert_eq!(idx.index_of(state), Some(i));
        assert_eq!(idx.state_at(i), state);
    }

    let too_deep = StateVector::from_state(h.state(&[6]).unwrap());
    assert_eq!(
        idx.to_sparse(&too_deep),
        Err(VoaError::LevelBeyondCutoff {
            level: 6,
            cutoff: 5
        })
    );

    // Algebra indexer respects the algebra constraint.
    let verma = ModuleRealization::verma(s(1), s(2));
    let aidx = BasisIndexer::for_algebra(&verma, 4);
    assert_eq!(aidx.len(), 1 + 0 + 1 + 1 + 2);
}
