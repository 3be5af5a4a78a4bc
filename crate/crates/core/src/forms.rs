//! Alternating k-forms on a Lie algebra: wedge products, interior products
//! and the Chevalley-Eilenberg differential.
//!
//! Sign convention, fixed once for the whole crate: `dw(X,Y) = -w([X,Y])`.
//! A Maurer-Cartan equation `dw3 = w1 ^ w2` therefore encodes the bracket
//! `[X1,X2] = -X3`.
//!
//! Terms are stored on strictly increasing index tuples with the sign
//! normalized at insertion, so equality-to-zero is structural.

use std::collections::BTreeMap;
use std::fmt;

use crate::lie::LieAlgebra;
use crate::rational::Rational;

#[derive(Clone, PartialEq, Eq)]
pub struct KForm {
    n: usize,
    degree: usize,
    terms: BTreeMap<Vec<usize>, Rational>,
}

impl KForm {
    pub fn zero(n: usize, degree: usize) -> Self {
        KForm {
            n,
            degree,
            terms: BTreeMap::new(),
        }
    }

    /// Degree-0 form (a scalar).
    pub fn scalar(n: usize, c: Rational) -> Self {
        let mut f = KForm::zero(n, 0);
        if !c.is_zero() {
            f.terms.insert(Vec::new(), c);
        }
        f
    }

    /// The dual basis 1-form of `e_i` (0-based).
    pub fn dual(n: usize, i: usize) -> Self {
        assert!(i < n);
        let mut f = KForm::zero(n, 1);
        f.terms.insert(vec![i], Rational::one());
        f
    }

    /// 1-form with the given coefficient vector.
    pub fn one_form(coeffs: &[Rational]) -> Self {
        let mut f = KForm::zero(coeffs.len(), 1);
        for (i, c) in coeffs.iter().enumerate() {
            if !c.is_zero() {
                f.terms.insert(vec![i], c.clone());
            }
        }
        f
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<usize>, &Rational)> {
        self.terms.iter()
    }

    pub fn coefficients(&self) -> Vec<Rational> {
        assert_eq!(self.degree, 1, "coefficient vector of a 1-form");
        let mut v = vec![Rational::zero(); self.n];
        for (idx, c) in &self.terms {
            v[idx[0]] = c.clone();
        }
        v
    }

    /// Add `c * w_{indices}`, normalizing order and sign. Repeated indices
    /// contribute nothing.
    pub fn add_term(&mut self, indices: &[usize], c: Rational) {
        assert_eq!(indices.len(), self.degree);
        if c.is_zero() {
            return;
        }
        let Some((sorted, sign)) = sort_with_sign(indices) else {
            return;
        };
        let c = if sign < 0 { -c } else { c };
        match self.terms.entry(sorted) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let v = e.get().clone() + c;
                if v.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = v;
                }
            }
        }
    }

    /// Value on a tuple of basis vectors (any order, duplicates allowed).
    pub fn eval_basis_tuple(&self, indices: &[usize]) -> Rational {
        assert_eq!(indices.len(), self.degree);
        let Some((sorted, sign)) = sort_with_sign(indices) else {
            return Rational::zero();
        };
        match self.terms.get(&sorted) {
            None => Rational::zero(),
            Some(c) => {
                if sign < 0 {
                    -c
                } else {
                    c.clone()
                }
            }
        }
    }

    pub fn add(&self, other: &KForm) -> KForm {
        assert_eq!(self.n, other.n);
        assert_eq!(self.degree, other.degree);
        let mut out = self.clone();
        for (idx, c) in &other.terms {
            out.add_term(idx, c.clone());
        }
        out
    }

    pub fn scale(&self, c: &Rational) -> KForm {
        if c.is_zero() {
            return KForm::zero(self.n, self.degree);
        }
        KForm {
            n: self.n,
            degree: self.degree,
            terms: self.terms.iter().map(|(i, v)| (i.clone(), v * c)).collect(),
        }
    }

    pub fn neg(&self) -> KForm {
        self.scale(&-Rational::one())
    }

    pub fn format_with_names(&self, names: &[String]) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        let mut first = true;
        for (idx, c) in &self.terms {
            let mono = if idx.is_empty() {
                c.to_string()
            } else {
                let w = idx
                    .iter()
                    .map(|&i| names[i].clone())
                    .collect::<Vec<_>>()
                    .join("^");
                if c.is_one() {
                    w
                } else if c == &-Rational::one() {
                    format!("-{w}")
                } else {
                    format!("{c}*{w}")
                }
            };
            if first {
                out.push_str(&mono);
            } else if let Some(rest) = mono.strip_prefix('-') {
                out.push_str(&format!(" - {rest}"));
            } else {
                out.push_str(&format!(" + {mono}"));
            }
            first = false;
        }
        out
    }
}

impl fmt::Debug for KForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = (1..=self.n).map(|i| format!("w{i}")).collect();
        write!(f, "{}", self.format_with_names(&names))
    }
}

/// Sort indices, returning the permutation sign; `None` on a repeated index.
fn sort_with_sign(indices: &[usize]) -> Option<(Vec<usize>, i32)> {
    let mut v = indices.to_vec();
    let mut sign = 1;
    // Insertion sort, counting transpositions.
    for i in 1..v.len() {
        let mut j = i;
        while j > 0 && v[j - 1] > v[j] {
            v.swap(j - 1, j);
            sign = -sign;
            j -= 1;
        }
    }
    for w in v.windows(2) {
        if w[0] == w[1] {
            return None;
        }
    }
    Some((v, sign))
}

/// Exterior product. Degrees add; forms of degree beyond `n` are zero.
pub fn wedge(f: &KForm, g: &KForm) -> KForm {
    assert_eq!(f.n, g.n, "forms on different algebras");
    let degree = f.degree + g.degree;
    let mut out = KForm::zero(f.n, degree);
    if degree > f.n {
        return out;
    }
    for (fi, fc) in &f.terms {
        for (gi, gc) in &g.terms {
            if let Some((merged, sign)) = merge_with_sign(fi, gi) {
                let mut c = fc * gc;
                if sign < 0 {
                    c = -c;
                }
                match out.terms.entry(merged) {
                    std::collections::btree_map::Entry::Vacant(e) => {
                        if !c.is_zero() {
                            e.insert(c);
                        }
                    }
                    std::collections::btree_map::Entry::Occupied(mut e) => {
                        let v = e.get().clone() + c;
                        if v.is_zero() {
                            e.remove();
                        } else {
                            *e.get_mut() = v;
                        }
                    }
                }
            }
        }
    }
    out
}

/// Merge two strictly increasing tuples; sign counts the transpositions of
/// the concatenation, `None` on a shared index.
fn merge_with_sign(a: &[usize], b: &[usize]) -> Option<(Vec<usize>, i32)> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let mut sign = 1;
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        if a[i] == b[j] {
            return None;
        }
        if a[i] < b[j] {
            out.push(a[i]);
            i += 1;
        } else {
            out.push(b[j]);
            if (a.len() - i) % 2 == 1 {
                sign = -sign;
            }
            j += 1;
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend_from_slice(&b[j..]);
    Some((out, sign))
}

/// `f^p` for a degree-2 form, by binary exponentiation.
pub fn wedge_power(f: &KForm, p: usize) -> KForm {
    assert_eq!(f.degree, 2, "wedge powers of degree-2 forms");
    match p {
        0 => KForm::scalar(f.n, Rational::one()),
        _ => {
            let mut base = f.clone();
            let mut exp = p;
            let mut acc: Option<KForm> = None;
            loop {
                if exp & 1 == 1 {
                    acc = Some(match acc {
                        None => base.clone(),
                        Some(a) => wedge(&a, &base),
                    });
                }
                exp >>= 1;
                if exp == 0 {
                    break;
                }
                base = wedge(&base, &base);
            }
            acc.unwrap()
        }
    }
}

/// Interior product `i(X) f`, contraction in the first slot.
pub fn interior_product(x: &[Rational], f: &KForm) -> KForm {
    assert_eq!(x.len(), f.n);
    assert!(f.degree >= 1, "interior product needs degree >= 1");
    let mut out = KForm::zero(f.n, f.degree - 1);
    for (idx, c) in &f.terms {
        for (pos, &i) in idx.iter().enumerate() {
            if x[i].is_zero() {
                continue;
            }
            let mut rest: Vec<usize> = idx.clone();
            rest.remove(pos);
            let mut coeff = c * &x[i];
            if pos % 2 == 1 {
                coeff = -coeff;
            }
            out.add_term(&rest, coeff);
        }
    }
    out
}

/// Chevalley-Eilenberg differential.
///
/// `(df)(X_0,..,X_k) = sum_{p<q} (-1)^(p+q) f([X_p,X_q], X_0,..^p..^q..,X_k)`;
/// for 1-forms this is exactly `dw(X,Y) = -w([X,Y])`.
pub fn ce_differential(l: &LieAlgebra, f: &KForm) -> KForm {
    assert_eq!(l.dim(), f.n);
    let k = f.degree;
    let n = f.n;
    let mut out = KForm::zero(n, k + 1);
    if k + 1 > n || f.is_zero() {
        return out;
    }
    let mut tuple: Vec<usize> = (0..=k).collect();
    loop {
        let mut val = Rational::zero();
        for p in 0..=k {
            for q in p + 1..=k {
                let bracket = l.bracket_basis(tuple[p], tuple[q]);
                if crate::matrix::is_zero_vector(&bracket) {
                    continue;
                }
                let mut rest = Vec::with_capacity(k);
                rest.push(0); // placeholder for the bracket slot
                for (t, &idx) in tuple.iter().enumerate() {
                    if t != p && t != q {
                        rest.push(idx);
                    }
                }
                let mut contribution = Rational::zero();
                for (m, c) in bracket.iter().enumerate() {
                    if c.is_zero() {
                        continue;
                    }
                    rest[0] = m;
                    let v = f.eval_basis_tuple(&rest);
                    if !v.is_zero() {
                        contribution += c * &v;
                    }
                }
                if (p + q) % 2 == 1 {
                    contribution = -contribution;
                }
                val += contribution;
            }
        }
        if !val.is_zero() {
            out.terms.insert(tuple.clone(), val);
        }
        if !next_combination(&mut tuple, n) {
            break;
        }
    }
    out
}

fn next_combination(tuple: &mut [usize], n: usize) -> bool {
    let k = tuple.len();
    let mut i = k;
    while i > 0 {
        i -= 1;
        if tuple[i] < n - (k - i) {
            tuple[i] += 1;
            for j in i + 1..k {
                tuple[j] = tuple[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::{algebra_from_triples, default_names};
    use crate::rational::{rat, Rational};

    fn heisenberg3() -> LieAlgebra {
        algebra_from_triples(default_names(3), &[(0, 1, vec![(2, Rational::one())])]).unwrap()
    }

    fn heisenberg5() -> LieAlgebra {
        algebra_from_triples(
            default_names(5),
            &[
                (0, 1, vec![(4, Rational::one())]),
                (2, 3, vec![(4, Rational::one())]),
            ],
        )
        .unwrap()
    }

    #[test]
    fn differential_of_center_dual_on_h3() {
        let h = heisenberg3();
        let w3 = KForm::dual(3, 2);
        let d = ce_differential(&h, &w3);
        // dw3 = -w1^w2
        let mut expect = KForm::zero(3, 2);
        expect.add_term(&[0, 1], rat(-1, 1));
        assert_eq!(d, expect);

        let w1 = KForm::dual(3, 0);
        assert!(ce_differential(&h, &w1).is_zero());
    }

    #[test]
    fn differential_on_filiform() {
        // [e0,e1]=e2, [e0,e2]=e3 on basis e0..e3; d(dual of e2) = -w0^w1.
        let names = (0..4).map(|i| format!("e{i}")).collect();
        let l4 = algebra_from_triples(
            names,
            &[
                (0, 1, vec![(2, Rational::one())]),
                (0, 2, vec![(3, Rational::one())]),
            ],
        )
        .unwrap();
        let d = ce_differential(&l4, &KForm::dual(4, 2));
        let mut expect = KForm::zero(4, 2);
        expect.add_term(&[0, 1], rat(-1, 1));
        assert_eq!(d, expect);
    }

    #[test]
    fn wedge_alternation_and_sign() {
        let w1 = KForm::dual(4, 0);
        let w2 = KForm::dual(4, 1);
        assert!(wedge(&w1, &w1).is_zero());
        let a = wedge(&w1, &w2);
        let b = wedge(&w2, &w1);
        assert_eq!(a, b.neg());
    }

    #[test]
    fn symplectic_square_on_h5() {
        // (w1^w2 + w3^w4)^2 = 2 w1^w2^w3^w4
        let mut theta = KForm::zero(5, 2);
        theta.add_term(&[0, 1], Rational::one());
        theta.add_term(&[2, 3], Rational::one());
        let sq = wedge(&theta, &theta);
        let mut expect = KForm::zero(5, 4);
        expect.add_term(&[0, 1, 2, 3], rat(2, 1));
        assert_eq!(sq, expect);
        assert_eq!(wedge_power(&theta, 2), expect);
    }

    #[test]
    fn wedge_powers_on_h5_contact_form() {
        let h5 = heisenberg5();
        let w5 = KForm::dual(5, 4);
        let d = ce_differential(&h5, &w5);
        assert!(!wedge_power(&d, 2).is_zero());
        assert!(wedge_power(&d, 3).is_zero());
        assert_eq!(wedge_power(&d, 1), d);
    }

    #[test]
    fn interior_product_cases() {
        let mut w12 = KForm::zero(3, 2);
        w12.add_term(&[0, 1], Rational::one());
        let e1 = crate::matrix::unit_vector(3, 0);
        let e3 = crate::matrix::unit_vector(3, 2);
        assert_eq!(interior_product(&e1, &w12), KForm::dual(3, 1));
        assert!(interior_product(&e3, &w12).is_zero());

        // i(e2) dw3 on h3 = +w1
        let h = heisenberg3();
        let d = ce_differential(&h, &KForm::dual(3, 2));
        let e2 = crate::matrix::unit_vector(3, 1);
        assert_eq!(interior_product(&e2, &d), KForm::dual(3, 0));
    }

    #[test]
    fn d_squared_vanishes_on_duals() {
        let h5 = heisenberg5();
        for i in 0..5 {
            let d = ce_differential(&h5, &KForm::dual(5, i));
            assert!(ce_differential(&h5, &d).is_zero());
        }
    }
}
