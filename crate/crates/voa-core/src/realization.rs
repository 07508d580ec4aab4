//! Concrete realizations: the free-boson (rank-one Heisenberg) and Virasoro
//! vertex algebras, together with their lowest-weight modules, with exact
//! generator straightening rules.

use std::collections::HashMap;
use std::sync::Mutex;

use core_linalg::{Sampler, Scalar};

use crate::error::VoaError;
use crate::state::{BasisState, StateVector};

/// Which vertex algebra the generator modes belong to.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AlgebraKind {
    /// Rank-one free boson `a` with bracket `[a(m), a(k)] = m delta_{m+k,0}`.
    /// Central charge 1.
    Heisenberg,
    /// Virasoro generator `L` with bracket
    /// `[L(m), L(k)] = (m-k) L(m+k) + delta_{m+k,0} (m^3-m)/12 * c`.
    Virasoro { c: Scalar },
}

impl AlgebraKind {
    /// Minimum allowed partition part for elements of the algebra itself.
    ///
    /// The Virasoro vacuum module has its level-1 state `L(-1)|base>` equal
    /// to zero, so parts start at 2; the free boson allows all parts.
    pub fn min_part_self(&self) -> u32 {
        match self {
            AlgebraKind::Heisenberg => 1,
            AlgebraKind::Virasoro { .. } => 2,
        }
    }

    /// Degree of the generating field's state: 1 for the boson `a`, 2 for
    /// the conformal vector.
    pub fn generator_weight(&self) -> i64 {
        match self {
            AlgebraKind::Heisenberg => 1,
            AlgebraKind::Virasoro { .. } => 2,
        }
    }

    /// Central charge of the associated Virasoro action (1 for the boson).
    pub fn central_charge(&self) -> Scalar {
        match self {
            AlgebraKind::Heisenberg => Scalar::one(),
            AlgebraKind::Virasoro { c } => c.clone(),
        }
    }
}

/// Which module over the algebra a realization presents.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ModuleKind {
    /// The algebra acting on itself (the vacuum module).
    VoaSelf,
    /// Boson module with momentum `lambda`: `a(0)` acts as `lambda` and the
    /// lowest weight is `lambda^2 / 2`.
    Fock { lambda: Scalar },
    /// Virasoro module freely generated over a lowest-weight vector with
    /// `L(0)`-eigenvalue `h`.
    Verma { h: Scalar },
}

/// A concrete graded module with exact generator actions and memoized mode
/// tables.  Construct one per `(algebra, module)` pair; all operations in
/// this crate take the realization explicitly.
///
/// Elements of the algebra itself (used as the left input of mode actions)
/// are validated against the algebra's own partition constraint, module
/// elements against the module's.
pub struct ModuleRealization {
    algebra: AlgebraKind,
    module: ModuleKind,
    /// The algebra acting on itself, for operations on algebra elements;
    /// `None` when this realization already is the self module.
    self_algebra: Option<Box<ModuleRealization>>,
    /// Straightening cache for single generator modes on basis states.
    gen_cache: Mutex<HashMap<(i64, BasisState), StateVector>>,
    /// Cache for composite mode actions `(v_state, m, w_state)`.
    comp_cache: Mutex<HashMap<(BasisState, i64, BasisState), StateVector>>,
}

impl ModuleRealization {
    fn new(algebra: AlgebraKind, module: ModuleKind) -> Self {
        let self_algebra = if module == ModuleKind::VoaSelf {
            None
        } else {
            Some(Box::new(ModuleRealization::new(
                algebra.clone(),
                ModuleKind::VoaSelf,
            )))
        };
        ModuleRealization {
            algebra,
            module,
            self_algebra,
            gen_cache: Mutex::new(HashMap::new()),
            comp_cache: Mutex::new(HashMap::new()),
        }
    }

    /// The realization of the acting algebra on itself (this realization
    /// when it already is the self module).  Operations that manipulate
    /// algebra elements — opposite-operator coefficients, exponentials of
    /// `L(1)` on the left input, products inside the algebra — run here.
    pub fn self_algebra(&self) -> &ModuleRealization {
        match &self.self_algebra {
            None => self,
            Some(b) => b,
        }
    }

    /// Free boson acting on itself.
    pub fn heisenberg() -> Self {
        Self::new(AlgebraKind::Heisenberg, ModuleKind::VoaSelf)
    }

    /// Virasoro vertex algebra of central charge `c` acting on itself.
    pub fn virasoro(c: Scalar) -> Self {
        Self::new(AlgebraKind::Virasoro { c }, ModuleKind::VoaSelf)
    }

    /// Momentum-`lambda` boson module.
    pub fn fock(lambda: Scalar) -> Self {
        Self::new(AlgebraKind::Heisenberg, ModuleKind::Fock { lambda })
    }

    /// Virasoro module with lowest weight `h` at central charge `c`.
    pub fn verma(c: Scalar, h: Scalar) -> Self {
        Self::new(AlgebraKind::Virasoro { c }, ModuleKind::Verma { h })
    }

    /// The algebra whose modes act.
    pub fn algebra(&self) -> &AlgebraKind {
        &self.algebra
    }

    /// The module being realized.
    pub fn module(&self) -> &ModuleKind {
        &self.module
    }

    /// True when this realization is the algebra acting on itself.
    pub fn is_self_module(&self) -> bool {
        self.module == ModuleKind::VoaSelf
    }

    /// Central charge of the underlying Virasoro action.
    pub fn central_charge(&self) -> Scalar {
        self.algebra.central_charge()
    }

    /// Degree-zero eigenvalue of the lowest-weight vector: 0, `lambda^2/2`,
    /// or `h`.
    pub fn base_weight(&self) -> Scalar {
        match &self.module {
            ModuleKind::VoaSelf => Scalar::zero(),
            ModuleKind::Fock { lambda } => {
                lambda.clone() * lambda / Scalar::from_int(2)
            }
            ModuleKind::Verma { h } => h.clone(),
        }
    }

    /// Minimum partition part for module elements.
    pub fn min_part_module(&self) -> u32 {
        match (&self.algebra, &self.module) {
            (AlgebraKind::Virasoro { .. }, ModuleKind::VoaSelf) => 2,
            _ => 1,
        }
    }

    /// Minimum partition part for elements of the acting algebra.
    pub fn min_part_algebra(&self) -> u32 {
        self.algebra.min_part_self()
    }

    /// Validates and builds a module basis state from descending parts.
    pub fn state(&self, parts: &[u32]) -> Result<BasisState, VoaError> {
        let s = BasisState::from_descending(parts.to_vec())?;
        self.check_module_state(&s)?;
        Ok(s)
    }

    /// Validates and builds an algebra basis state from descending parts.
    pub fn algebra_state(&self, parts: &[u32]) -> Result<BasisState, VoaError> {
        let s = BasisState::from_descending(parts.to_vec())?;
        self.check_algebra_state(&s)?;
        Ok(s)
    }

    pub(crate) fn check_module_state(&self, s: &BasisState) -> Result<(), VoaError> {
        let min = self.min_part_module();
        match s.parts().iter().find(|&&p| p < min) {
            Some(&p) => Err(VoaError::InvalidPartition { part: p, min_part: min }),
            None => Ok(()),
        }
    }

    pub(crate) fn check_algebra_state(&self, s: &BasisState) -> Result<(), VoaError> {
        let min = self.min_part_algebra();
        match s.parts().iter().find(|&&p| p < min) {
            Some(&p) => Err(VoaError::InvalidPartition { part: p, min_part: min }),
            None => Ok(()),
        }
    }

    pub(crate) fn check_module_vector(&self, v: &StateVector) -> Result<(), VoaError> {
        for (s, _) in v.iter() {
            self.check_module_state(s)?;
        }
        Ok(())
    }

    pub(crate) fn check_algebra_vector(&self, v: &StateVector) -> Result<(), VoaError> {
        for (s, _) in v.iter() {
            self.check_algebra_state(s)?;
        }
        Ok(())
    }

    /// The lowest-weight vector of the module, as a vector.
    pub fn base_vector(&self) -> StateVector {
        StateVector::from_state(BasisState::base())
    }

    /// The vacuum of the acting algebra, as an algebra element.
    pub fn vacuum_vector(&self) -> StateVector {
        StateVector::from_state(BasisState::base())
    }

    /// The conformal vector of the acting algebra: `a(-1)^2/2 |base>` for
    /// the boson, `L(-2)|base>` for Virasoro.
    pub fn conformal_vector(&self) -> StateVector {
        match &self.algebra {
            AlgebraKind::Heisenberg => StateVector::from_term(
                BasisState::from_descending(vec![1, 1]).expect("static partition"),
                Scalar::ratio(1, 2),
            ),
            AlgebraKind::Virasoro { .. } => StateVector::from_state(
                BasisState::from_descending(vec![2]).expect("static partition"),
            ),
        }
    }

    /// The weight-one boson generator state `a(-1)|base>`; only meaningful
    /// for the Heisenberg algebra.
    pub fn boson_vector(&self) -> StateVector {
        StateVector::from_state(
            BasisState::from_descending(vec![1]).expect("static partition"),
        )
    }

    /// Module basis states at `level`, in a deterministic order (partitions
    /// enumerated largest-first, descending lexicographic).
    pub fn basis_at_level(&self, level: i64) -> Vec<BasisState> {
        enumerate_partitions(level, self.min_part_module())
    }

    /// Algebra basis states at `level` (weight), in the same deterministic
    /// order.
    pub fn algebra_basis_at_level(&self, level: i64) -> Vec<BasisState> {
        enumerate_partitions(level, self.min_part_algebra())
    }

    /// Dimension of the module's graded piece at `level`.
    pub fn dim_at_level(&self, level: i64) -> usize {
        self.basis_at_level(level).len()
    }

    /// Random module vector supported at exactly `level`, never zero.
    pub fn random_homogeneous(&self, level: i64, sampler: &mut Sampler) -> StateVector {
        let basis = self.basis_at_level(level);
        assert!(
            !basis.is_empty(),
            "no basis states at level {level} in this realization"
        );
        let mut v = StateVector::zero();
        for s in &basis {
            v.add_term(s.clone(), sampler.scalar());
        }
        if v.is_zero() {
            let pick = sampler.index(basis.len());
            v.add_term(basis[pick].clone(), sampler.nonzero_scalar());
        }
        v
    }

    /// Random algebra vector supported at exactly `level` (weight).
    ///
    /// Panics when the graded piece is zero (Virasoro weight 1); callers
    /// sampling weights should skip such levels via
    /// [`Self::algebra_basis_at_level`].
    pub fn random_algebra_homogeneous(&self, level: i64, sampler: &mut Sampler) -> StateVector {
        let basis = self.algebra_basis_at_level(level);
        assert!(
            !basis.is_empty(),
            "no algebra basis states at weight {level}"
        );
        let mut v = StateVector::zero();
        for s in &basis {
            v.add_term(s.clone(), sampler.scalar());
        }
        if v.is_zero() {
            let pick = sampler.index(basis.len());
            v.add_term(basis[pick].clone(), sampler.nonzero_scalar());
        }
        v
    }

    /// Applies the `j`-th field mode of the generating state to a module
    /// vector: for a generator of weight `d` the field mode `j` is the
    /// bracket mode `j - (d - 1)`, so boson field modes coincide with
    /// bracket modes while the conformal field mode `j` is `L(j-1)`.
    pub fn apply_field_mode(&self, j: i64, w: &StateVector) -> StateVector {
        self.apply_generator(j - (self.algebra.generator_weight() - 1), w)
    }

    /// Field mode of the generating state on a single basis state.
    pub fn field_mode_on_state(&self, j: i64, s: &BasisState) -> StateVector {
        self.generator_on_state(j - (self.algebra.generator_weight() - 1), s)
    }

    /// Applies the generator mode (`a(m)` or `L(m)`) to a module vector.
    pub fn apply_generator(&self, m: i64, w: &StateVector) -> StateVector {
        let mut out = StateVector::zero();
        for (s, c) in w.iter() {
            out.axpy(c, &self.generator_on_state(m, s));
        }
        out
    }

    /// Applies the generator mode to a single basis state, memoized.
    pub fn generator_on_state(&self, m: i64, s: &BasisState) -> StateVector {
        if let Some(hit) = self.gen_cache.lock().unwrap().get(&(m, s.clone())) {
            return hit.clone();
        }
        let result = match &self.algebra {
            AlgebraKind::Heisenberg => self.boson_on_state(m, s),
            AlgebraKind::Virasoro { .. } => self.virasoro_on_state(m, s),
        };
        self.gen_cache
            .lock()
            .unwrap()
            .insert((m, s.clone()), result.clone());
        result
    }

    /// `a(m)` on a basis state: creation prepends a part, `a(0)` is the
    /// momentum, annihilation contracts against equal parts with the pairing
    /// `[a(m), a(-m)] = m`.
    fn boson_on_state(&self, m: i64, s: &BasisState) -> StateVector {
        if m < 0 {
            let part = u32::try_from(-m).expect("mode fits in u32");
            return StateVector::from_state(s.with_part_added(part));
        }
        if m == 0 {
            return match &self.module {
                ModuleKind::Fock { lambda } => {
                    StateVector::from_term(s.clone(), lambda.clone())
                }
                _ => StateVector::zero(),
            };
        }
        let part = match u32::try_from(m) {
            Ok(p) => p,
            Err(_) => return StateVector::zero(),
        };
        let count = s.multiplicity(part);
        if count == 0 {
            return StateVector::zero();
        }
        let reduced = s.with_part_removed(part).expect("part present");
        StateVector::from_term(reduced, Scalar::from_int(count as i64 * m))
    }

    /// `L(m)` on a basis state by commuting past the leading raising
    /// operator until the word is canonical.
    fn virasoro_on_state(&self, m: i64, s: &BasisState) -> StateVector {
        let c = self.central_charge();
        match s.split_first() {
            None => {
                // Lowest-weight vector.
                if m > 0 {
                    StateVector::zero()
                } else if m == 0 {
                    StateVector::from_term(s.clone(), self.base_weight())
                } else {
                    let part = u32::try_from(-m).expect("mode fits in u32");
                    if part < self.min_part_module() {
                        // L(-1) kills the vacuum of the algebra itself.
                        StateVector::zero()
                    } else {
                        StateVector::from_state(s.with_part_added(part))
                    }
                }
            }
            Some((mu, rest)) => {
                if m == 0 {
                    // Degree operator: eigenvalue is base weight plus level.
                    let eig = self.base_weight() + &Scalar::from_int(s.level());
                    return StateVector::from_term(s.clone(), eig);
                }
                let mu_i = mu as i64;
                if m < 0 && -m >= mu_i {
                    // Canonical: prepend the new largest part.
                    let part = u32::try_from(-m).expect("mode fits in u32");
                    return StateVector::from_state(s.with_part_added(part));
                }
                // L(m) L(-mu) = L(-mu) L(m) + (m + mu) L(m - mu)
                //               + delta_{m, mu} (m^3 - m)/12 * c
                let rest_vec = StateVector::from_state(rest.clone());
                let mut out = StateVector::zero();
                let inner = self.generator_on_state(m, &rest);
                out.axpy(&Scalar::one(), &self.apply_generator(-mu_i, &inner));
                let swapped = self.generator_on_state(m - mu_i, &rest);
                out.axpy(&Scalar::from_int(m + mu_i), &swapped);
                if m == mu_i {
                    let central = Scalar::from_int(m * m * m - m) / Scalar::from_int(12) * &c;
                    out.axpy(&central, &rest_vec);
                }
                out
            }
        }
    }

    pub(crate) fn comp_cache_get(
        &self,
        key: &(BasisState, i64, BasisState),
    ) -> Option<StateVector> {
        self.comp_cache.lock().unwrap().get(key).cloned()
    }

    pub(crate) fn comp_cache_put(&self, key: (BasisState, i64, BasisState), val: StateVector) {
        self.comp_cache.lock().unwrap().insert(key, val);
    }
}

impl std::fmt::Debug for ModuleRealization {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("ModuleRealization")
            .field("algebra", &self.algebra)
            .field("module", &self.module)
            .finish()
    }
}

/// Partitions of `total` with parts `>= min_part`, parts descending, the
/// partitions themselves in descending lexicographic order (largest first).
fn enumerate_partitions(total: i64, min_part: u32) -> Vec<BasisState> {
    if total < 0 {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut current = Vec::new();
    let cap = u32::try_from(total).expect("level fits in u32");
    descend(total, cap.max(min_part), min_part, &mut current, &mut out);
    return out;

    fn descend(
        remaining: i64,
        max_part: u32,
        min_part: u32,
        current: &mut Vec<u32>,
        out: &mut Vec<BasisState>,
    ) {
        if remaining == 0 {
            out.push(
                BasisState::from_descending(current.clone()).expect("parts kept descending"),
            );
            return;
        }
        let mut p = max_part.min(u32::try_from(remaining).expect("fits"));
        while p >= min_part {
            current.push(p);
            descend(remaining - p as i64, p, min_part, current, out);
            current.pop();
            if p == min_part {
                break;
            }
            p -= 1;
        }
    }
}
