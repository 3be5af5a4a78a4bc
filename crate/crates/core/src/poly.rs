//! Sparse multivariate polynomials over the rationals.
//!
//! Terms are kept in a map ordered by graded lexicographic monomial order,
//! with no zero coefficients stored. This is the scalar domain for generic
//! rank computations: entries of the generic bilinear form are linear in
//! the dual coordinates `a1..an`, and fraction-free elimination keeps every
//! intermediate value a polynomial.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::rational::Rational;

/// Exponent vector with graded-lex ordering (total degree first, then lex).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn constant(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Monomial(e)
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_constant(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn div(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Clone, PartialEq, Eq)]
pub struct MultiPoly {
    vars: Arc<[String]>,
    terms: BTreeMap<Monomial, Rational>,
}

impl MultiPoly {
    pub fn zero(vars: Arc<[String]>) -> Self {
        MultiPoly {
            vars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(vars: Arc<[String]>, c: Rational) -> Self {
        let mut p = MultiPoly::zero(vars);
        if !c.is_zero() {
            let m = Monomial::constant(p.nvars());
            p.terms.insert(m, c);
        }
        p
    }

    pub fn one(vars: Arc<[String]>) -> Self {
        let one = Rational::one();
        MultiPoly::constant(vars, one)
    }

    pub fn var(vars: Arc<[String]>, i: usize) -> Self {
        let n = vars.len();
        assert!(i < n);
        let mut p = MultiPoly::zero(vars);
        p.terms.insert(Monomial::var(n, i), Rational::one());
        p
    }

    pub fn vars(&self) -> &Arc<[String]> {
        &self.vars
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn degree(&self) -> u32 {
        self.terms.keys().map(Monomial::degree).max().unwrap_or(0)
    }

    pub fn leading(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().next_back()
    }

    pub fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
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

    pub fn add(&self, other: &MultiPoly) -> MultiPoly {
        debug_assert_eq!(self.nvars(), other.nvars());
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> MultiPoly {
        MultiPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }

    pub fn sub(&self, other: &MultiPoly) -> MultiPoly {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &MultiPoly) -> MultiPoly {
        debug_assert_eq!(self.nvars(), other.nvars());
        let mut out = MultiPoly::zero(self.vars.clone());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }

    pub fn scale(&self, c: &Rational) -> MultiPoly {
        if c.is_zero() {
            return MultiPoly::zero(self.vars.clone());
        }
        MultiPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(m, k)| (m.clone(), k * c)).collect(),
        }
    }

    /// Exact division: `self = q * divisor` must hold; panics otherwise.
    ///
    /// The fraction-free elimination below only ever divides by an earlier
    /// pivot, for which exactness is guaranteed, so a failure here is a bug.
    pub fn div_exact(&self, divisor: &MultiPoly) -> MultiPoly {
        assert!(!divisor.is_zero(), "division by zero polynomial");
        let mut rem = self.clone();
        let mut quot = MultiPoly::zero(self.vars.clone());
        let (dlm, dlc) = divisor
            .leading()
            .map(|(m, c)| (m.clone(), c.clone()))
            .unwrap();
        while !rem.is_zero() {
            let (rlm, rlc) = rem.leading().map(|(m, c)| (m.clone(), c.clone())).unwrap();
            assert!(
                dlm.divides(&rlm),
                "inexact polynomial division (leading monomial)"
            );
            let qm = rlm.div(&dlm);
            let qc = &rlc / &dlc;
            let mut t = MultiPoly::zero(self.vars.clone());
            t.terms.insert(qm.clone(), qc.clone());
            rem = rem.sub(&t.mul(divisor));
            quot.add_term(qm, qc);
        }
        quot
    }

    /// Evaluate at a rational point.
    pub fn eval(&self, point: &[Rational]) -> Rational {
        assert_eq!(point.len(), self.nvars());
        let mut acc = Rational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (i, &e) in m.0.iter().enumerate() {
                if e > 0 {
                    t *= point[i].pow(e);
                }
            }
            acc += t;
        }
        acc
    }

    /// Positive rational `c` and monomial `g` with `self = c * g * primitive`,
    /// where the primitive part has coprime integer coefficients.
    pub fn content(&self) -> Option<(Rational, Monomial)> {
        if self.is_zero() {
            return None;
        }
        let mut num_gcd = BigInt::zero();
        let mut den_lcm = BigInt::one();
        let mut mono = self.terms.keys().next().unwrap().clone();
        for (m, c) in &self.terms {
            num_gcd = num_gcd.gcd(c.numer());
            den_lcm = den_lcm.lcm(c.denom());
            mono = Monomial(mono.0.iter().zip(&m.0).map(|(a, b)| (*a).min(*b)).collect());
        }
        Some((Rational::from_big(num_gcd.abs(), den_lcm), mono))
    }

    /// Strip rational and monomial content; rank computations are invariant
    /// under this rescaling.
    pub fn primitive_part(&self) -> MultiPoly {
        match self.content() {
            None => self.clone(),
            Some((c, g)) => {
                let inv = c.recip();
                MultiPoly {
                    vars: self.vars.clone(),
                    terms: self
                        .terms
                        .iter()
                        .map(|(m, k)| (m.div(&g), k * &inv))
                        .collect(),
                }
            }
        }
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in self.terms.iter().rev() {
            let mut piece = String::new();
            if m.is_constant() {
                piece.push_str(&c.to_string());
            } else {
                if !c.is_one() {
                    if c == &-Rational::one() {
                        piece.push('-');
                    } else {
                        piece.push_str(&c.to_string());
                        piece.push('*');
                    }
                }
                let mut firstv = true;
                for (i, &e) in m.0.iter().enumerate() {
                    if e == 0 {
                        continue;
                    }
                    if !firstv {
                        piece.push('*');
                    }
                    firstv = false;
                    piece.push_str(&self.vars[i]);
                    if e > 1 {
                        piece.push_str(&format!("^{e}"));
                    }
                }
            }
            if first {
                write!(f, "{piece}")?;
            } else if let Some(rest) = piece.strip_prefix('-') {
                write!(f, " - {rest}")?;
            } else {
                write!(f, " + {piece}")?;
            }
            first = false;
        }
        Ok(())
    }
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

pub fn var_context<S: AsRef<str>>(names: &[S]) -> Arc<[String]> {
    names.iter().map(|s| s.as_ref().to_string()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    fn ctx() -> Arc<[String]> {
        var_context(&["x", "y", "z"])
    }

    #[test]
    fn graded_lex_order() {
        let x = Monomial(vec![1, 0, 0]);
        let y = Monomial(vec![0, 1, 0]);
        let xy = Monomial(vec![1, 1, 0]);
        let z2 = Monomial(vec![0, 0, 2]);
        assert!(x > y);
        assert!(xy > x);
        assert!(xy > z2);
    }

    #[test]
    fn arithmetic_and_display() {
        let v = ctx();
        let x = MultiPoly::var(v.clone(), 0);
        let y = MultiPoly::var(v.clone(), 1);
        let p = x.add(&y).mul(&x.sub(&y));
        let expect = x.mul(&x).sub(&y.mul(&y));
        assert_eq!(p, expect);
        assert_eq!(p.to_string(), "x^2 - y^2");
    }

    #[test]
    fn exact_division_roundtrip() {
        let v = ctx();
        let x = MultiPoly::var(v.clone(), 0);
        let y = MultiPoly::var(v.clone(), 1);
        let a = x.add(&y);
        let b = x.mul(&x).add(&y.scale(&rat(3, 2)));
        let prod = a.mul(&b);
        assert_eq!(prod.div_exact(&a), b);
        assert_eq!(prod.div_exact(&b), a);
    }

    #[test]
    fn eval_matches_structure() {
        let v = ctx();
        let x = MultiPoly::var(v.clone(), 0);
        let z = MultiPoly::var(v.clone(), 2);
        let p = x.mul(&x).add(&z.scale(&rat(-2, 1)));
        let val = p.eval(&[rat(3, 1), rat(0, 1), rat(5, 1)]);
        assert_eq!(val, rat(-1, 1));
    }

    #[test]
    fn content_and_primitive() {
        let v = ctx();
        let x = MultiPoly::var(v.clone(), 0);
        let y = MultiPoly::var(v.clone(), 1);
        let p = x
            .mul(&y)
            .scale(&rat(4, 3))
            .add(&x.mul(&x).mul(&y).scale(&rat(2, 3)));
        let (c, g) = p.content().unwrap();
        assert_eq!(c, rat(2, 3));
        assert_eq!(g, Monomial(vec![1, 1, 0]));
        let prim = p.primitive_part();
        assert_eq!(prim.to_string(), "x + 2");
        assert_eq!(
            prim,
            MultiPoly::var(v.clone(), 0).add(&MultiPoly::constant(v, rat(2, 1)))
        );
    }
}
