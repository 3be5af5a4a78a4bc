//! Matrices with polynomial entries and certified generic rank.
//!
//! The rank over the fraction field `Q(a1..an)` equals the maximal rank of
//! any rational specialization, and it is computed deterministically by
//! fraction-free (Bareiss) elimination: every intermediate entry is a minor
//! of the original matrix, so the division by the previous pivot is exact.
//! No probabilistic specialization is involved in this path.

use std::sync::Arc;

use crate::poly::MultiPoly;
use crate::rational::Rational;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SymbolicMatrix {
    rows: usize,
    cols: usize,
    vars: Arc<[String]>,
    entries: Vec<MultiPoly>,
}

impl SymbolicMatrix {
    pub fn zero(vars: Arc<[String]>, rows: usize, cols: usize) -> Self {
        let entries = vec![MultiPoly::zero(vars.clone()); rows * cols];
        SymbolicMatrix {
            rows,
            cols,
            vars,
            entries,
        }
    }

    pub fn from_fn<F>(vars: Arc<[String]>, rows: usize, cols: usize, mut f: F) -> Self
    where
        F: FnMut(usize, usize) -> MultiPoly,
    {
        let mut m = SymbolicMatrix::zero(vars, rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                let p = f(i, j);
                m.set(i, j, p);
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn vars(&self) -> &Arc<[String]> {
        &self.vars
    }

    pub fn get(&self, i: usize, j: usize) -> &MultiPoly {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, p: MultiPoly) {
        debug_assert_eq!(p.nvars(), self.vars.len());
        self.entries[i * self.cols + j] = p;
    }

    /// Append extra rows.
    pub fn stacked(&self, rows: Vec<Vec<MultiPoly>>) -> SymbolicMatrix {
        let mut entries = self.entries.clone();
        let extra = rows.len();
        for row in rows {
            assert_eq!(row.len(), self.cols);
            entries.extend(row);
        }
        SymbolicMatrix {
            rows: self.rows + extra,
            cols: self.cols,
            vars: self.vars.clone(),
            entries,
        }
    }

    /// Specialize every variable at a rational point.
    pub fn eval(&self, point: &[Rational]) -> crate::matrix::Matrix {
        let mut m = crate::matrix::Matrix::zero(self.rows, self.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                m.set(i, j, self.get(i, j).eval(point));
            }
        }
        m
    }
}

/// Rank of a polynomial matrix over the fraction field.
///
/// Equals the maximum rank among all rational specializations of the
/// variables; the empty matrix has rank 0.
pub fn symbolic_rank(m: &SymbolicMatrix) -> usize {
    if m.rows == 0 || m.cols == 0 {
        return 0;
    }
    // Work on content-stripped rows: rescaling a row by a nonzero rational
    // times a monomial is invertible over the fraction field.
    let mut w: Vec<Vec<MultiPoly>> = (0..m.rows)
        .map(|i| (0..m.cols).map(|j| m.get(i, j).clone()).collect::<Vec<_>>())
        .collect();
    strip_row_content(&mut w);

    let rows = m.rows;
    let cols = m.cols;
    let mut rank = 0;
    let mut prev_pivot = MultiPoly::one(m.vars.clone());
    for col in 0..cols {
        if rank == rows {
            break;
        }
        // Sparsest nonzero pivot keeps the minors small.
        let pivot_row = (rank..rows)
            .filter(|&i| !w[i][col].is_zero())
            .min_by_key(|&i| w[i][col].num_terms());
        let Some(p) = pivot_row else {
            continue;
        };
        w.swap(rank, p);
        let pivot = w[rank][col].clone();
        for i in rank + 1..rows {
            if w[i][col].is_zero() {
                // Still need the Bareiss scaling for untouched entries.
                for j in col + 1..cols {
                    if !w[i][j].is_zero() {
                        let num = pivot.mul(&w[i][j]);
                        w[i][j] = num.div_exact(&prev_pivot);
                    }
                }
                continue;
            }
            let factor = w[i][col].clone();
            for j in col + 1..cols {
                let num = pivot.mul(&w[i][j]).sub(&factor.mul(&w[rank][j]));
                w[i][j] = if num.is_zero() {
                    num
                } else {
                    num.div_exact(&prev_pivot)
                };
            }
            w[i][col] = MultiPoly::zero(m.vars.clone());
        }
        prev_pivot = pivot;
        rank += 1;
    }
    rank
}

fn strip_row_content(rows: &mut [Vec<MultiPoly>]) {
    for row in rows.iter_mut() {
        let nonzero: Vec<&MultiPoly> = row.iter().filter(|p| !p.is_zero()).collect();
        if nonzero.is_empty() {
            continue;
        }
        // Shared rational content across the row.
        let mut content: Option<Rational> = None;
        for p in &nonzero {
            let (c, _) = p.content().unwrap();
            content = Some(match content {
                None => c,
                Some(prev) => gcd_rational(&prev, &c),
            });
        }
        let c = content.unwrap();
        if !c.is_one() && !c.is_zero() {
            let inv = c.recip();
            for p in row.iter_mut() {
                *p = p.scale(&inv);
            }
        }
    }
}

fn gcd_rational(a: &Rational, b: &Rational) -> Rational {
    use num_integer::Integer;
    let num = a.numer().gcd(b.numer());
    let den = a.denom().lcm(b.denom());
    Rational::from_big(num, den.clone())
}
