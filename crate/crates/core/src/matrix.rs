//! Dense matrices over the rationals: reduction, rank, kernels, subspaces.

use std::fmt;

use crate::rational::Rational;

#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl Matrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zero(n, n);
        for i in 0..n {
            m.set(i, i, Rational::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Matrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rational) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Rational::is_zero)
    }

    pub fn transpose(&self) -> Matrix {
        let mut out = Matrix::zero(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(j, i, self.get(i, j).clone());
            }
        }
        out
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut out = Matrix::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let v = out.get(i, j) + &(a * b);
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    pub fn apply(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(self.cols, v.len(), "dimension mismatch");
        (0..self.rows)
            .map(|i| {
                let mut acc = Rational::zero();
                for j in 0..self.cols {
                    if !v[j].is_zero() && !self.get(i, j).is_zero() {
                        acc += self.get(i, j) * &v[j];
                    }
                }
                acc
            })
            .collect()
    }

    /// Vertically stack `self` on top of `other`.
    pub fn stack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.cols, "dimension mismatch");
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Matrix {
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        }
    }

    /// In-place reduced row echelon form; returns the pivot columns.
    pub fn rref(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| !self.get(i, c).is_zero()) else {
                continue;
            };
            if p != r {
                for j in 0..self.cols {
                    self.data.swap(p * self.cols + j, r * self.cols + j);
                }
            }
            let inv = self.get(r, c).recip();
            for j in c..self.cols {
                let v = self.get(r, j) * &inv;
                self.set(r, j, v);
            }
            for i in 0..self.rows {
                if i == r || self.get(i, c).is_zero() {
                    continue;
                }
                let f = self.get(i, c).clone();
                for j in c..self.cols {
                    let v = self.get(i, j) - &(&f * self.get(r, j));
                    self.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        m.rref().len()
    }

    /// Basis of the right kernel `{x : M x = 0}`.
    ///
    /// The basis vectors are independent and their count is
    /// `cols - rank(M)`; the empty matrix has a full kernel.
    pub fn kernel_basis(&self) -> Vec<Vec<Rational>> {
        let mut m = self.clone();
        let pivots = m.rref();
        let mut basis = Vec::new();
        let mut pivot_of_col = vec![None; self.cols];
        for (r, &c) in pivots.iter().enumerate() {
            pivot_of_col[c] = Some(r);
        }
        for free in 0..self.cols {
            if pivot_of_col[free].is_some() {
                continue;
            }
            let mut v = vec![Rational::zero(); self.cols];
            v[free] = Rational::one();
            for (r, &c) in pivots.iter().enumerate() {
                v[c] = -m.get(r, free).clone();
            }
            basis.push(v);
        }
        basis
    }

    /// Nilpotency check: some power up to `n` is zero (square matrices only).
    pub fn is_nilpotent(&self) -> bool {
        assert_eq!(self.rows, self.cols);
        let mut p = self.clone();
        for _ in 0..self.rows {
            if p.is_zero() {
                return true;
            }
            p = p.mul(self);
        }
        p.is_zero()
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "[")?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|x| x.to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

/// Kernel of a rational matrix, as a list of independent annihilated vectors.
pub fn exact_kernel(m: &Matrix) -> Vec<Vec<Rational>> {
    m.kernel_basis()
}

/// A linear subspace of `Q^n`, held in reduced row echelon form so equal
/// subspaces compare equal structurally.
#[derive(Clone, PartialEq, Eq)]
pub struct Subspace {
    ambient: usize,
    basis: Vec<Vec<Rational>>,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Vec::new(),
        }
    }

    pub fn full(ambient: usize) -> Self {
        Subspace::from_spanning(ambient, (0..ambient).map(|i| unit_vector(ambient, i)))
    }

    pub fn from_spanning<I>(ambient: usize, vectors: I) -> Self
    where
        I: IntoIterator<Item = Vec<Rational>>,
    {
        let rows: Vec<Vec<Rational>> = vectors.into_iter().collect();
        for v in &rows {
            assert_eq!(v.len(), ambient, "vector length mismatch");
        }
        if rows.is_empty() {
            return Subspace::zero(ambient);
        }
        let mut m = Matrix::from_rows(rows);
        let pivots = m.rref();
        let basis = (0..pivots.len()).map(|i| m.row(i).to_vec()).collect();
        Subspace { ambient, basis }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn basis(&self) -> &[Vec<Rational>] {
        &self.basis
    }

    pub fn contains(&self, v: &[Rational]) -> bool {
        assert_eq!(v.len(), self.ambient);
        let mut rows = self.basis.clone();
        rows.push(v.to_vec());
        Matrix::from_rows(rows).rank() == self.dim()
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        other.basis.iter().all(|v| self.contains(v))
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient, other.ambient);
        Subspace::from_spanning(
            self.ambient,
            self.basis.iter().chain(other.basis.iter()).cloned(),
        )
    }

    /// Intersection via the kernel of the stacked orthogonality system.
    pub fn intersect(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient, other.ambient);
        // x in both spans: solve for coefficients over the joint basis.
        // [A^T | -B^T] kernel gives the coefficient pairs.
        let a = self.dim();
        let mut m = Matrix::zero(self.ambient, a + other.dim());
        for (j, v) in self.basis.iter().enumerate() {
            for i in 0..self.ambient {
                m.set(i, j, v[i].clone());
            }
        }
        for (j, v) in other.basis.iter().enumerate() {
            for i in 0..self.ambient {
                m.set(i, a + j, -v[i].clone());
            }
        }
        let vectors = m.kernel_basis().into_iter().map(|coeffs| {
            let mut x = vec![Rational::zero(); self.ambient];
            for (j, v) in self.basis.iter().enumerate() {
                for i in 0..self.ambient {
                    if !coeffs[j].is_zero() {
                        x[i] += &coeffs[j] * &v[i];
                    }
                }
            }
            x
        });
        Subspace::from_spanning(self.ambient, vectors)
    }
}

impl fmt::Debug for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subspace(dim {} of {})", self.dim(), self.ambient)
    }
}

pub fn unit_vector(n: usize, i: usize) -> Vec<Rational> {
    let mut v = vec![Rational::zero(); n];
    v[i] = Rational::one();
    v
}

pub fn is_zero_vector(v: &[Rational]) -> bool {
    v.iter().all(Rational::is_zero)
}

pub fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    assert_eq!(a.len(), b.len());
    let mut acc = Rational::zero();
    for (x, y) in a.iter().zip(b) {
        if !x.is_zero() && !y.is_zero() {
            acc += x * y;
        }
    }
    acc
}

pub fn scaled(v: &[Rational], c: &Rational) -> Vec<Rational> {
    v.iter().map(|x| x * c).collect()
}

pub fn add_into(acc: &mut [Rational], v: &[Rational], c: &Rational) {
    for (a, x) in acc.iter_mut().zip(v) {
        if !x.is_zero() && !c.is_zero() {
            *a += x * c;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    fn m(rows: &[&[i64]]) -> Matrix {
        Matrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| rat(x, 1)).collect())
                .collect(),
        )
    }

    #[test]
    fn identity_kernel_is_empty() {
        assert!(Matrix::identity(3).kernel_basis().is_empty());
    }

    #[test]
    fn zero_matrix_kernel_is_full() {
        let k = Matrix::zero(2, 3).kernel_basis();
        assert_eq!(k.len(), 3);
    }

    // Heisenberg bilinear form for the dual of the center: kernel is the center.
    #[test]
    fn heisenberg_form_kernel() {
        let b = m(&[&[0, 1, 0], &[-1, 0, 0], &[0, 0, 0]]);
        let k = b.kernel_basis();
        assert_eq!(k.len(), 1);
        assert_eq!(k[0], unit_vector(3, 2));
    }

    #[test]
    fn rank_plus_kernel_dim_is_cols() {
        let cases = vec![
            m(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]),
            m(&[&[0, 0], &[0, 0]]),
            m(&[&[1, 2], &[3, 4], &[5, 6]]),
        ];
        for c in cases {
            assert_eq!(c.rank() + c.kernel_basis().len(), c.cols());
            for v in c.kernel_basis() {
                assert!(is_zero_vector(&c.apply(&v)));
            }
        }
    }

    #[test]
    fn subspace_canonical_equality() {
        let s1 = Subspace::from_spanning(3, vec![vec![rat(1, 1), rat(1, 1), rat(0, 1)]]);
        let s2 = Subspace::from_spanning(3, vec![vec![rat(2, 1), rat(2, 1), rat(0, 1)]]);
        assert_eq!(s1, s2);
        assert!(s1.contains(&[rat(-3, 1), rat(-3, 1), rat(0, 1)]));
        assert!(!s1.contains(&[rat(1, 1), rat(0, 1), rat(0, 1)]));
    }

    #[test]
    fn subspace_intersection() {
        let s1 = Subspace::from_spanning(3, vec![unit_vector(3, 0), unit_vector(3, 1)]);
        let s2 = Subspace::from_spanning(
            3,
            vec![unit_vector(3, 2), vec![rat(1, 1), rat(1, 1), rat(0, 1)]],
        );
        let i = s1.intersect(&s2);
        assert_eq!(i.dim(), 1);
        assert!(i.contains(&[rat(1, 1), rat(1, 1), rat(0, 1)]));
    }

    #[test]
    fn nilpotency_detection() {
        assert!(m(&[&[0, 1], &[0, 0]]).is_nilpotent());
        assert!(!m(&[&[1, 0], &[0, 0]]).is_nilpotent());
        assert!(Matrix::zero(4, 4).is_nilpotent());
    }
}
