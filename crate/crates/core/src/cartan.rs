//! Cartan class of linear forms and everything it controls: stabilizers,
//! characteristic spaces, coadjoint orbit dimensions, the index of the
//! algebra, contact/Frobenius predicates and certified class bounds.
//!
//! Two independent routes compute the class. The primary route is linear
//! algebra on the skew form `B_a(i,j) = a([e_i,e_j])`: the class is the
//! rank of `B_a` stacked with the row `a`. The oracle route applies the
//! wedge-power definition directly: the class is `2p+1` when
//! `a ^ (da)^p != 0` and `(da)^(p+1) = 0`, and `2p` when `(da)^p != 0` and
//! `a ^ (da)^p = 0`. The two must agree everywhere; the test suites check
//! this continuously.

use std::collections::BTreeSet;
use std::sync::Arc;

use thiserror::Error;

use crate::forms::{self, KForm};
use crate::lie::LieAlgebra;
use crate::matrix::{self, Matrix, Subspace};
use crate::poly::MultiPoly;
use crate::rational::Rational;
use crate::sample;
use crate::symbolic::{symbolic_rank, SymbolicMatrix};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CartanError {
    #[error("the zero form has no Cartan class")]
    ZeroForm,
    #[error("form degree must be 1, got {0}")]
    NotAOneForm(usize),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Parity {
    Odd,
    Even,
}

#[derive(Clone, Debug)]
pub struct ClassReport {
    pub form: KForm,
    pub class: usize,
    pub parity: Parity,
    pub orbit_dim: usize,
    /// `A(da)`, the stabilizer of the form under the coadjoint action.
    pub stabilizer: Subspace,
    /// `C(a) = A(a) ∩ A(da)`; its codimension is the class.
    pub characteristic_space: Subspace,
}

/// Skew matrix `B(i,j) = a([e_i, e_j])` representing `da`.
pub fn bilinear_matrix(l: &LieAlgebra, alpha: &KForm) -> Matrix {
    assert_eq!(alpha.degree(), 1);
    assert_eq!(alpha.n(), l.dim());
    let coeffs = alpha.coefficients();
    let n = l.dim();
    let mut b = Matrix::zero(n, n);
    for ((i, j), v) in l.brackets() {
        let mut val = Rational::zero();
        for (&k, c) in v {
            if !coeffs[k].is_zero() {
                val += c * &coeffs[k];
            }
        }
        if !val.is_zero() {
            b.set(*i, *j, val.clone());
            b.set(*j, *i, -val);
        }
    }
    b
}

fn check_one_form(alpha: &KForm) -> Result<(), CartanError> {
    if alpha.degree() != 1 {
        return Err(CartanError::NotAOneForm(alpha.degree()));
    }
    if alpha.is_zero() {
        return Err(CartanError::ZeroForm);
    }
    Ok(())
}

/// Rank/kernel computation of the Cartan class.
pub fn cartan_class(l: &LieAlgebra, alpha: &KForm) -> Result<ClassReport, CartanError> {
    check_one_form(alpha)?;
    let n = l.dim();
    let coeffs = alpha.coefficients();
    let b = bilinear_matrix(l, alpha);
    let kernel = b.kernel_basis();
    let rank = n - kernel.len();
    debug_assert_eq!(rank % 2, 0, "skew forms have even rank");
    let vanishes_on_kernel = kernel.iter().all(|v| matrix::dot(&coeffs, v).is_zero());
    let class = if vanishes_on_kernel { rank } else { rank + 1 };
    let stabilizer = Subspace::from_spanning(n, kernel);
    let alpha_row = Matrix::from_rows(vec![coeffs.clone()]);
    let characteristic_space = Subspace::from_spanning(n, b.stack(&alpha_row).kernel_basis());
    debug_assert_eq!(characteristic_space.dim(), n - class);
    debug_assert!(stabilizer.contains_subspace(&characteristic_space));
    debug_assert!(stabilizer.dim() - characteristic_space.dim() <= 1);
    let parity = if class % 2 == 0 {
        Parity::Even
    } else {
        Parity::Odd
    };
    Ok(ClassReport {
        form: alpha.clone(),
        class,
        parity,
        orbit_dim: 2 * (class / 2),
        stabilizer,
        characteristic_space,
    })
}

/// Wedge-power definition of the Cartan class, kept as an independent
/// oracle for the rank/kernel route.
pub fn cartan_class_wedge_oracle(l: &LieAlgebra, alpha: &KForm) -> Result<usize, CartanError> {
    check_one_form(alpha)?;
    let da = forms::ce_differential(l, alpha);
    let mut p = 0;
    let mut power = KForm::scalar(l.dim(), Rational::one());
    loop {
        let next = if p == 0 {
            da.clone()
        } else {
            forms::wedge(&power, &da)
        };
        if next.is_zero() {
            break;
        }
        power = next;
        p += 1;
    }
    // (da)^p != 0 and (da)^(p+1) = 0 now.
    if forms::wedge(alpha, &power).is_zero() {
        Ok(2 * p)
    } else {
        Ok(2 * p + 1)
    }
}

/// `dim O(a) = 2 * floor(cl(a) / 2)`; closed forms have point orbits.
pub fn orbit_dimension(l: &LieAlgebra, alpha: &KForm) -> Result<usize, CartanError> {
    Ok(cartan_class(l, alpha)?.orbit_dim)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IndexReport {
    /// Minimal stabilizer dimension over all forms.
    pub index: usize,
    /// Largest Cartan class attained on the algebra, certified generically.
    pub max_class: usize,
}

/// Generic bilinear form `B(a)` with `a = sum a_i w_i` symbolic.
pub fn generic_bilinear_matrix(l: &LieAlgebra) -> SymbolicMatrix {
    let n = l.dim();
    let vars: Arc<[String]> = (1..=n).map(|i| format!("a{i}")).collect();
    let mut m = SymbolicMatrix::zero(vars.clone(), n, n);
    for ((i, j), v) in l.brackets() {
        let mut p = MultiPoly::zero(vars.clone());
        for (&k, c) in v {
            p = p.add(&MultiPoly::var(vars.clone(), k).scale(c));
        }
        if !p.is_zero() {
            m.set(*i, *j, p.clone());
            m.set(*j, *i, p.neg());
        }
    }
    m
}

/// Index and maximal class, both certified: the symbolic rank of the
/// stacked matrix `[B(a); a]` over `Q(a1..an)` is the maximum of
/// `rank [B_x; x]` over rational points `x`, and that rank is the class.
pub fn index(l: &LieAlgebra) -> IndexReport {
    let n = l.dim();
    let b = generic_bilinear_matrix(l);
    let vars = b.vars().clone();
    let a_row: Vec<MultiPoly> = (0..n).map(|i| MultiPoly::var(vars.clone(), i)).collect();
    let stacked = b.stacked(vec![a_row]);
    let generic_rank = symbolic_rank(&b);
    debug_assert_eq!(generic_rank % 2, 0);
    let max_class = symbolic_rank(&stacked);
    debug_assert!(max_class == generic_rank || max_class == generic_rank + 1);
    let index = if max_class % 2 == 1 {
        n - max_class + 1
    } else {
        n - max_class
    };
    IndexReport { index, max_class }
}

/// A concrete rational form attaining the maximal class.
///
/// First hit in the deterministic candidate enumeration; existence is
/// guaranteed because maximal class is a dense open condition.
pub fn max_class_witness(l: &LieAlgebra) -> (KForm, ClassReport) {
    max_class_witness_seeded(l, 0)
}

pub fn max_class_witness_seeded(l: &LieAlgebra, seed: u64) -> (KForm, ClassReport) {
    let target = index(l).max_class;
    for v in sample::CandidateVectors::new(l.dim(), seed).take(100_000) {
        let alpha = KForm::one_form(&v);
        if alpha.is_zero() {
            continue;
        }
        let report = cartan_class(l, &alpha).expect("nonzero form");
        if report.class == target {
            return (alpha, report);
        }
    }
    unreachable!("maximal-class witness search exhausted its candidate stream")
}

/// Contact: odd dimension `2p+1` with a form of class `2p+1`.
pub fn is_contact(l: &LieAlgebra) -> bool {
    let n = l.dim();
    n % 2 == 1 && index(l).max_class == n
}

/// Frobenius: even dimension `2p` with a form of class `2p`.
pub fn is_frobenius(l: &LieAlgebra) -> bool {
    let n = l.dim();
    n.is_multiple_of(2) && index(l).max_class == n
}

/// For a maximal-class witness, the characteristic space must be an
/// abelian subalgebra.
pub fn characteristic_space_abelian_check(l: &LieAlgebra) -> bool {
    let (_, report) = max_class_witness(l);
    let c = &report.characteristic_space;
    for (i, x) in c.basis().iter().enumerate() {
        for y in c.basis().iter().skip(i + 1) {
            if !matrix::is_zero_vector(&l.bracket(x, y)) {
                return false;
            }
        }
    }
    true
}

/// Certified universal bound: `cl(a) <= c` for every nonzero form.
///
/// The rank part checks that all larger minors of `B(a)` vanish
/// identically; the parity part is the generic vanishing test on the
/// stacked matrix. Both are inside `index`.
pub fn verify_class_upper_bound(l: &LieAlgebra, c: usize) -> bool {
    index(l).max_class <= c
}

/// Classes observed on the candidate stream: dual basis forms, pairwise
/// sums, and `budget` seeded random forms. A lower approximation of the
/// true class spectrum.
pub fn class_spectrum_sample(l: &LieAlgebra, budget: usize, seed: u64) -> BTreeSet<usize> {
    let mut spectrum = BTreeSet::new();
    for v in sample::candidates(l.dim(), budget, seed) {
        let alpha = KForm::one_form(&v);
        if alpha.is_zero() {
            continue;
        }
        spectrum.insert(cartan_class(l, &alpha).expect("nonzero").class);
    }
    spectrum
}
