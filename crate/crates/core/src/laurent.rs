//! Laurent polynomials in one formal parameter `t`.
//!
//! These carry the structure constants of a rescaled bracket `mu_t`; the
//! contraction limit at `t -> 0` exists exactly when no negative exponent
//! survives.

use std::collections::BTreeMap;
use std::fmt;

use crate::rational::Rational;

#[derive(Clone, PartialEq, Eq, Default)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, Rational>,
}

/// Outcome of evaluating `lim_{t -> 0}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Limit {
    Value(Rational),
    NoLimit,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly::default()
    }

    pub fn one() -> Self {
        LaurentPoly::monomial(Rational::one(), 0)
    }

    pub fn constant(c: Rational) -> Self {
        LaurentPoly::monomial(c, 0)
    }

    /// `c * t^k`.
    pub fn monomial(c: Rational, k: i64) -> Self {
        let mut p = LaurentPoly::zero();
        if !c.is_zero() {
            p.terms.insert(k, c);
        }
        p
    }

    pub fn t(k: i64) -> Self {
        LaurentPoly::monomial(Rational::one(), k)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&i64, &Rational)> {
        self.terms.iter()
    }

    /// `Some((c, k))` when the polynomial is a single term `c * t^k`.
    pub fn as_monomial(&self) -> Option<(Rational, i64)> {
        if self.terms.len() == 1 {
            let (k, c) = self.terms.iter().next().unwrap();
            Some((c.clone(), *k))
        } else {
            None
        }
    }

    pub fn min_exponent(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn add_term(&mut self, k: i64, c: Rational) {
        if c.is_zero() {
            return;
        }
        let v = self.terms.remove(&k).map_or(c.clone(), |old| old + c);
        if !v.is_zero() {
            self.terms.insert(k, v);
        }
    }

    pub fn add(&self, other: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.add_term(*k, c.clone());
        }
        out
    }

    pub fn neg(&self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(k, c)| (*k, -c)).collect(),
        }
    }

    pub fn sub(&self, other: &LaurentPoly) -> LaurentPoly {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (ka, ca) in &self.terms {
            for (kb, cb) in &other.terms {
                out.add_term(ka + kb, ca * cb);
            }
        }
        out
    }

    pub fn scale(&self, c: &Rational) -> LaurentPoly {
        if c.is_zero() {
            return LaurentPoly::zero();
        }
        LaurentPoly {
            terms: self.terms.iter().map(|(k, v)| (*k, v * c)).collect(),
        }
    }

    /// Multiply by `t^k`.
    pub fn shift(&self, k: i64) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (e + k, c.clone())).collect(),
        }
    }

    /// `lim_{t -> 0}`: the constant coefficient when all exponents are
    /// nonnegative, `NoLimit` otherwise.
    pub fn limit_at_zero(&self) -> Limit {
        match self.min_exponent() {
            Some(k) if k < 0 => Limit::NoLimit,
            Some(0) => Limit::Value(self.terms[&0].clone()),
            _ => Limit::Value(Rational::zero()),
        }
    }

    pub fn eval(&self, t: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for (k, c) in &self.terms {
            let p = if *k >= 0 {
                t.pow(*k as u32)
            } else {
                t.recip().pow((-k) as u32)
            };
            acc += c * &p;
        }
        acc
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in &self.terms {
            let mut piece = String::new();
            if *k == 0 {
                piece.push_str(&c.to_string());
            } else {
                if c == &-Rational::one() {
                    piece.push('-');
                } else if !c.is_one() {
                    piece.push_str(&c.to_string());
                    piece.push('*');
                }
                if *k == 1 {
                    piece.push('t');
                } else {
                    piece.push_str(&format!("t^{k}"));
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

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    #[test]
    fn limits() {
        let p = LaurentPoly::constant(rat(3, 1)).add(&LaurentPoly::monomial(rat(2, 1), 1));
        assert_eq!(p.limit_at_zero(), Limit::Value(rat(3, 1)));
        assert_eq!(LaurentPoly::t(-1).limit_at_zero(), Limit::NoLimit);
        assert_eq!(
            LaurentPoly::monomial(rat(2, 1), 2).limit_at_zero(),
            Limit::Value(Rational::zero())
        );
        assert_eq!(
            LaurentPoly::zero().limit_at_zero(),
            Limit::Value(Rational::zero())
        );
    }

    #[test]
    fn arithmetic() {
        let a = LaurentPoly::t(1).add(&LaurentPoly::t(-1));
        let b = a.mul(&a);
        assert_eq!(
            b,
            LaurentPoly::t(2)
                .add(&LaurentPoly::monomial(rat(2, 1), 0))
                .add(&LaurentPoly::t(-2))
        );
        assert_eq!(a.sub(&a), LaurentPoly::zero());
        assert_eq!(b.eval(&rat(2, 1)), rat(25, 4));
    }

    #[test]
    fn display() {
        let p = LaurentPoly::t(-1)
            .add(&LaurentPoly::monomial(rat(-3, 2), 2))
            .add(&LaurentPoly::constant(rat(1, 1)));
        assert_eq!(p.to_string(), "t^-1 + 1 - 3/2*t^2");
    }
}
