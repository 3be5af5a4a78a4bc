//! Lie algebras as sparse structure-constant tensors over the rationals.
//!
//! Antisymmetry is structural: brackets are stored for `i < j` only and the
//! `i > j` values are derived by sign. The checked constructor verifies the
//! Jacobi identity; deformation intermediates may use the raw constructor
//! and rely on the deformation identities instead.

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use crate::matrix::{self, Matrix, Subspace};
use crate::rational::Rational;

pub type SparseVec = BTreeMap<usize, Rational>;

#[derive(Clone, PartialEq, Eq)]
pub struct LieAlgebra {
    dim: usize,
    basis_names: Vec<String>,
    brackets: BTreeMap<(usize, usize), SparseVec>,
}

#[derive(Debug, Error)]
pub enum LieError {
    #[error("jacobi identity fails at {} triple(s), first at ({},{},{})",
        .violations.len(), .violations[0].i + 1, .violations[0].j + 1, .violations[0].k + 1)]
    Jacobi { violations: Vec<JacobiDefect> },
    #[error("basis names must be unique and match the dimension")]
    BadBasis,
    #[error("bracket index out of range")]
    IndexOutOfRange,
    #[error("coordinate vector has wrong length (expected {expected}, got {got})")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("subspace is not an ideal: [L, I] is not contained in I")]
    NotAnIdeal,
}

/// One failing Jacobi triple together with the nonzero cyclic sum.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JacobiDefect {
    pub i: usize,
    pub j: usize,
    pub k: usize,
    pub defect: Vec<Rational>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum JacobiReport {
    Pass,
    Violations(Vec<JacobiDefect>),
}

impl JacobiReport {
    pub fn is_pass(&self) -> bool {
        matches!(self, JacobiReport::Pass)
    }
}

impl LieAlgebra {
    /// Jacobi-checked constructor.
    pub fn new(
        basis_names: Vec<String>,
        brackets: BTreeMap<(usize, usize), SparseVec>,
    ) -> Result<Self, LieError> {
        let l = Self::new_unchecked(basis_names, brackets)?;
        match l.jacobi_check() {
            JacobiReport::Pass => Ok(l),
            JacobiReport::Violations(violations) => Err(LieError::Jacobi { violations }),
        }
    }

    /// Raw constructor: structural checks only, Jacobi deferred.
    pub fn new_unchecked(
        basis_names: Vec<String>,
        brackets: BTreeMap<(usize, usize), SparseVec>,
    ) -> Result<Self, LieError> {
        let dim = basis_names.len();
        {
            let mut seen = std::collections::BTreeSet::new();
            if !basis_names.iter().all(|n| seen.insert(n)) {
                return Err(LieError::BadBasis);
            }
        }
        let mut clean = BTreeMap::new();
        for ((i, j), v) in brackets {
            if i >= j || j >= dim {
                return Err(LieError::IndexOutOfRange);
            }
            if v.keys().any(|&k| k >= dim) {
                return Err(LieError::IndexOutOfRange);
            }
            let v: SparseVec = v.into_iter().filter(|(_, c)| !c.is_zero()).collect();
            if !v.is_empty() {
                clean.insert((i, j), v);
            }
        }
        Ok(LieAlgebra {
            dim,
            basis_names,
            brackets: clean,
        })
    }

    pub fn abelian(dim: usize) -> Self {
        LieAlgebra {
            dim,
            basis_names: default_names(dim),
            brackets: BTreeMap::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn basis_names(&self) -> &[String] {
        &self.basis_names
    }

    pub fn name_index(&self, name: &str) -> Option<usize> {
        self.basis_names.iter().position(|n| n == name)
    }

    pub fn brackets(&self) -> &BTreeMap<(usize, usize), SparseVec> {
        &self.brackets
    }

    /// Structure constants agree, basis names ignored.
    pub fn same_structure(&self, other: &LieAlgebra) -> bool {
        self.dim == other.dim && self.brackets == other.brackets
    }

    /// `[e_i, e_j]` as a dense coordinate vector.
    pub fn bracket_basis(&self, i: usize, j: usize) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); self.dim];
        if i == j {
            return out;
        }
        let (key, sign) = if i < j { ((i, j), 1) } else { ((j, i), -1) };
        if let Some(v) = self.brackets.get(&key) {
            for (&k, c) in v {
                out[k] = if sign == 1 { c.clone() } else { -c };
            }
        }
        out
    }

    /// Bilinear extension of the bracket.
    pub fn bracket(&self, x: &[Rational], y: &[Rational]) -> Vec<Rational> {
        assert_eq!(x.len(), self.dim);
        assert_eq!(y.len(), self.dim);
        let mut out = vec![Rational::zero(); self.dim];
        for ((i, j), v) in &self.brackets {
            let coeff = &x[*i] * &y[*j] - &x[*j] * &y[*i];
            if coeff.is_zero() {
                continue;
            }
            for (&k, c) in v {
                out[k] += c * &coeff;
            }
        }
        out
    }

    pub fn jacobi_check(&self) -> JacobiReport {
        let mut violations = Vec::new();
        for i in 0..self.dim {
            for j in i + 1..self.dim {
                let bij = self.bracket_basis(i, j);
                for k in j + 1..self.dim {
                    let ek = matrix::unit_vector(self.dim, k);
                    let mut sum = self.bracket(&bij, &ek);
                    let bjk = self.bracket_basis(j, k);
                    let ei = matrix::unit_vector(self.dim, i);
                    for (s, t) in sum.iter_mut().zip(self.bracket(&bjk, &ei)) {
                        *s += t;
                    }
                    let bki = self.bracket_basis(k, i);
                    let ej = matrix::unit_vector(self.dim, j);
                    for (s, t) in sum.iter_mut().zip(self.bracket(&bki, &ej)) {
                        *s += t;
                    }
                    if !matrix::is_zero_vector(&sum) {
                        violations.push(JacobiDefect {
                            i,
                            j,
                            k,
                            defect: sum,
                        });
                    }
                }
            }
        }
        if violations.is_empty() {
            JacobiReport::Pass
        } else {
            JacobiReport::Violations(violations)
        }
    }

    /// Matrix of `ad X`: column `j` holds the coordinates of `[X, e_j]`.
    pub fn adjoint_matrix(&self, x: &[Rational]) -> Result<Matrix, LieError> {
        if x.len() != self.dim {
            return Err(LieError::DimensionMismatch {
                expected: self.dim,
                got: x.len(),
            });
        }
        let mut m = Matrix::zero(self.dim, self.dim);
        for j in 0..self.dim {
            let col = self.bracket(x, &matrix::unit_vector(self.dim, j));
            for i in 0..self.dim {
                if !col[i].is_zero() {
                    m.set(i, j, col[i].clone());
                }
            }
        }
        Ok(m)
    }

    /// Span of `[A, B]`.
    pub fn bracket_subspace(&self, a: &Subspace, b: &Subspace) -> Subspace {
        let mut vectors = Vec::new();
        for x in a.basis() {
            for y in b.basis() {
                let v = self.bracket(x, y);
                if !matrix::is_zero_vector(&v) {
                    vectors.push(v);
                }
            }
        }
        Subspace::from_spanning(self.dim, vectors)
    }

    pub fn derived_subalgebra(&self) -> Subspace {
        let full = Subspace::full(self.dim);
        self.bracket_subspace(&full, &full)
    }

    /// `C^1 = [g,g] ⊇ C^2 = [g, C^1] ⊇ ...`, listed until stabilization.
    /// The final entry is the stable term (zero for nilpotent algebras).
    pub fn lower_central_series(&self) -> Vec<Subspace> {
        let full = Subspace::full(self.dim);
        let mut series = vec![self.derived_subalgebra()];
        loop {
            let last = series.last().unwrap();
            let next = self.bracket_subspace(&full, last);
            if &next == last {
                break;
            }
            series.push(next);
        }
        series
    }

    /// `D^1 = [g,g] ⊇ D^2 = [D^1, D^1] ⊇ ...`, listed until stabilization.
    pub fn derived_series(&self) -> Vec<Subspace> {
        let mut series = vec![self.derived_subalgebra()];
        loop {
            let last = series.last().unwrap();
            let next = self.bracket_subspace(last, last);
            if &next == last {
                break;
            }
            series.push(next);
        }
        series
    }

    pub fn is_nilpotent(&self) -> bool {
        self.lower_central_series().last().unwrap().is_zero()
    }

    pub fn is_solvable(&self) -> bool {
        self.derived_series().last().unwrap().is_zero()
    }

    /// Smallest `k` with `C^k = 0`; equals 1 precisely for abelian algebras.
    pub fn nilpotency_step(&self) -> Option<usize> {
        let series = self.lower_central_series();
        if !series.last().unwrap().is_zero() {
            return None;
        }
        Some(series.len())
    }

    /// Kernel of the stacked adjoint system `X -> ([X, e_1], ..., [X, e_n])`.
    pub fn center(&self) -> Subspace {
        let mut rows = Vec::new();
        // Row block j expresses the linear map X -> [X, e_j].
        let mut stacked = Matrix::zero(self.dim * self.dim, self.dim);
        for j in 0..self.dim {
            for i in 0..self.dim {
                let col = self.bracket_basis(i, j);
                for (r, c) in col.into_iter().enumerate() {
                    if !c.is_zero() {
                        stacked.set(j * self.dim + r, i, c);
                    }
                }
            }
        }
        rows.extend(stacked.kernel_basis());
        Subspace::from_spanning(self.dim, rows)
    }

    pub fn is_ideal(&self, i: &Subspace) -> bool {
        let full = Subspace::full(self.dim);
        i.contains_subspace(&self.bracket_subspace(&full, i))
    }

    /// Quotient by a verified ideal; the Jacobi identity is re-checked.
    pub fn quotient_by_ideal(&self, ideal: &Subspace) -> Result<LieAlgebra, LieError> {
        if !self.is_ideal(ideal) {
            return Err(LieError::NotAnIdeal);
        }
        // Reduce modulo the ideal's RREF basis; coordinates on the non-pivot
        // axes give the quotient chart.
        let mut ideal_m = Matrix::from_rows(ideal.basis().to_vec());
        let pivots = ideal_m.rref();
        let free: Vec<usize> = (0..self.dim).filter(|c| !pivots.contains(c)).collect();
        let qdim = free.len();
        let reduce = |v: &[Rational]| -> Vec<Rational> {
            let mut w = v.to_vec();
            for (r, &c) in pivots.iter().enumerate() {
                if w[c].is_zero() {
                    continue;
                }
                let f = w[c].clone();
                for t in 0..self.dim {
                    let d = &w[t] - &(&f * ideal_m.get(r, t));
                    w[t] = d;
                }
            }
            free.iter().map(|&c| w[c].clone()).collect()
        };
        let mut brackets: BTreeMap<(usize, usize), SparseVec> = BTreeMap::new();
        for a in 0..qdim {
            for b in a + 1..qdim {
                let v = self.bracket_basis(free[a], free[b]);
                let q = reduce(&v);
                let sv: SparseVec = q
                    .into_iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .collect();
                if !sv.is_empty() {
                    brackets.insert((a, b), sv);
                }
            }
        }
        let names = free.iter().map(|&c| self.basis_names[c].clone()).collect();
        LieAlgebra::new(names, brackets)
    }

    pub fn direct_sum(&self, other: &LieAlgebra) -> LieAlgebra {
        let dim = self.dim + other.dim;
        let mut names: Vec<String> = self.basis_names.iter().map(|n| format!("L.{n}")).collect();
        names.extend(other.basis_names.iter().map(|n| format!("R.{n}")));
        let mut brackets = self.brackets.clone();
        for ((i, j), v) in &other.brackets {
            let shifted: SparseVec = v.iter().map(|(&k, c)| (k + self.dim, c.clone())).collect();
            brackets.insert((i + self.dim, j + self.dim), shifted);
        }
        LieAlgebra {
            dim,
            basis_names: names,
            brackets,
        }
    }

    /// Rename basis elements (same length required).
    pub fn with_names(mut self, names: Vec<String>) -> Self {
        assert_eq!(names.len(), self.dim);
        self.basis_names = names;
        self
    }
}

impl fmt::Debug for LieAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "LieAlgebra dim {}", self.dim)?;
        for ((i, j), v) in &self.brackets {
            let terms: Vec<String> = v
                .iter()
                .map(|(&k, c)| {
                    if c.is_one() {
                        self.basis_names[k].clone()
                    } else {
                        format!("{}*{}", c, self.basis_names[k])
                    }
                })
                .collect();
            writeln!(
                f,
                "  [{},{}] = {}",
                self.basis_names[*i],
                self.basis_names[*j],
                terms.join(" + ")
            )?;
        }
        Ok(())
    }
}

pub fn default_names(dim: usize) -> Vec<String> {
    (1..=dim).map(|i| format!("X{i}")).collect()
}

/// One bracket relation `[e_i, e_j] = sum c_k e_k`, 0-based, `i < j`.
pub type BracketTriple = (usize, usize, Vec<(usize, Rational)>);

/// Convenience builder: brackets given as `(i, j, [(k, c)])` with 0-based
/// indices, `i < j`.
pub fn algebra_from_triples(
    names: Vec<String>,
    triples: &[BracketTriple],
) -> Result<LieAlgebra, LieError> {
    let mut brackets: BTreeMap<(usize, usize), SparseVec> = BTreeMap::new();
    for (i, j, terms) in triples {
        let entry = brackets.entry((*i, *j)).or_default();
        for (k, c) in terms {
            let v = entry.remove(k).map_or(c.clone(), |old| old + c.clone());
            if v.is_zero() {
                entry.remove(k);
            } else {
                entry.insert(*k, v);
            }
        }
    }
    LieAlgebra::new(names, brackets)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, Rational};

    pub fn heisenberg3() -> LieAlgebra {
        algebra_from_triples(default_names(3), &[(0, 1, vec![(2, Rational::one())])]).unwrap()
    }

    fn sl2() -> LieAlgebra {
        // [e1,e2]=e3, [e3,e1]=2e1, [e3,e2]=-2e2
        algebra_from_triples(
            default_names(3),
            &[
                (0, 1, vec![(2, Rational::one())]),
                (0, 2, vec![(0, rat(-2, 1))]),
                (1, 2, vec![(1, rat(2, 1))]),
            ],
        )
        .unwrap()
    }

    fn filiform_l(n: usize) -> LieAlgebra {
        let names = (0..n).map(|i| format!("e{i}")).collect();
        let triples: Vec<_> = (1..n - 1)
            .map(|i| (0usize, i, vec![(i + 1, Rational::one())]))
            .collect();
        algebra_from_triples(names, &triples).unwrap()
    }

    #[test]
    fn heisenberg_passes_jacobi() {
        assert!(heisenberg3().jacobi_check().is_pass());
    }

    #[test]
    fn jacobi_violation_reported_with_defect() {
        // [e1,e2]=e1, [e2,e3]=e2, [e1,e3]=0: cyclic sum at (1,2,3) is -e1.
        let res = algebra_from_triples(
            default_names(3),
            &[
                (0, 1, vec![(0, Rational::one())]),
                (1, 2, vec![(1, Rational::one())]),
            ],
        );
        match res {
            Err(LieError::Jacobi { violations }) => {
                assert_eq!(violations.len(), 1);
                let d = &violations[0];
                assert_eq!((d.i, d.j, d.k), (0, 1, 2));
                let mut expect = vec![Rational::zero(); 3];
                expect[0] = rat(-1, 1);
                assert_eq!(d.defect, expect);
            }
            other => panic!("expected Jacobi violation, got {other:?}"),
        }
    }

    #[test]
    fn adjoint_matrix_examples() {
        let h = heisenberg3();
        let zero = h.adjoint_matrix(&vec![Rational::zero(); 3]).unwrap();
        assert!(zero.is_zero());
        let ad1 = h.adjoint_matrix(&crate::matrix::unit_vector(3, 0)).unwrap();
        assert_eq!(ad1.get(2, 1), &Rational::one());
        assert_eq!(ad1.rank(), 1);

        let l4 = filiform_l(4);
        let ad0 = l4
            .adjoint_matrix(&crate::matrix::unit_vector(4, 0))
            .unwrap();
        assert_eq!(ad0.get(2, 1), &Rational::one());
        assert_eq!(ad0.get(3, 2), &Rational::one());
        assert_eq!(ad0.rank(), 2);
    }

    #[test]
    fn series_and_predicates() {
        let ab = LieAlgebra::abelian(3);
        let s = ab.lower_central_series();
        assert_eq!(s.len(), 1);
        assert!(s[0].is_zero());
        assert!(ab.is_nilpotent());
        assert_eq!(ab.nilpotency_step(), Some(1));

        let h = heisenberg3();
        let s = h.lower_central_series();
        assert_eq!(s.len(), 2);
        assert_eq!(s[0].dim(), 1);
        assert!(s[0].contains(&crate::matrix::unit_vector(3, 2)));
        assert!(s[1].is_zero());
        assert!(h.is_nilpotent() && h.is_solvable());
        assert_eq!(h.nilpotency_step(), Some(2));

        let l5 = filiform_l(5);
        let s = l5.lower_central_series();
        assert_eq!(s.iter().filter(|t| !t.is_zero()).count(), 3);
        assert!(s.last().unwrap().is_zero());
        assert_eq!(l5.nilpotency_step(), Some(4));

        let sl = sl2();
        assert!(!sl.is_solvable());
        assert!(!sl.is_nilpotent());
        assert!(sl.center().is_zero());
    }

    #[test]
    fn center_of_heisenberg() {
        let c = heisenberg3().center();
        assert_eq!(c.dim(), 1);
        assert!(c.contains(&crate::matrix::unit_vector(3, 2)));
    }

    #[test]
    fn quotient_examples() {
        let h = heisenberg3();
        let q = h.quotient_by_ideal(&h.center()).unwrap();
        assert_eq!(q.dim(), 2);
        assert!(q.brackets().is_empty());

        let not_ideal = Subspace::from_spanning(3, vec![crate::matrix::unit_vector(3, 0)]);
        assert!(matches!(
            h.quotient_by_ideal(&not_ideal),
            Err(LieError::NotAnIdeal)
        ));
    }

    #[test]
    fn direct_sum_center() {
        let s = heisenberg3().direct_sum(&LieAlgebra::abelian(1));
        assert_eq!(s.dim(), 4);
        assert_eq!(s.center().dim(), 2);
        let ab2 = LieAlgebra::abelian(1).direct_sum(&LieAlgebra::abelian(1));
        assert!(ab2.brackets().is_empty());
    }

    #[test]
    fn center_inside_last_lcs_term() {
        for l in [heisenberg3(), filiform_l(5), filiform_l(6)] {
            let series = l.lower_central_series();
            let last_nonzero = series.iter().rev().find(|s| !s.is_zero()).unwrap();
            assert!(last_nonzero.contains_subspace(&l.center()));
        }
    }
}
