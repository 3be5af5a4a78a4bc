//! Cochain calculus for brackets: quadratic deformations, central
//! extensions by symplectic cocycles, and contraction limits over a formal
//! parameter.

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use crate::forms::{self, KForm};
use crate::laurent::{LaurentPoly, Limit};
use crate::lie::{LieAlgebra, SparseVec};
use crate::matrix::{self, Subspace};
use crate::rational::Rational;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum DeformError {
    #[error("cochain dimensions differ: {0} vs {1}")]
    DimensionMismatch(usize, usize),
    #[error("the 2-form is not closed on the base algebra")]
    NotClosed,
    #[error("the 2-form is degenerate: its top wedge power vanishes")]
    NotSymplectic,
    #[error("symplectic structures need even dimension")]
    OddDimension,
    #[error("scaling map is singular for t != 0: diagonal entry {0} is not a nonzero monomial")]
    SingularScaling(usize),
}

/// Alternating bilinear map `g x g -> g`, stored for `i < j`.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct Cochain2 {
    dim: usize,
    values: BTreeMap<(usize, usize), Vec<Rational>>,
}

impl Cochain2 {
    pub fn zero(dim: usize) -> Self {
        Cochain2 {
            dim,
            values: BTreeMap::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn set(&mut self, i: usize, j: usize, value: Vec<Rational>) {
        assert!(i != j && i < self.dim && j < self.dim);
        assert_eq!(value.len(), self.dim);
        if matrix::is_zero_vector(&value) {
            return;
        }
        if i < j {
            self.values.insert((i, j), value);
        } else {
            self.values
                .insert((j, i), value.iter().map(|c| -c).collect());
        }
    }

    pub fn from_algebra(l: &LieAlgebra) -> Self {
        let mut out = Cochain2::zero(l.dim());
        for ((i, j), v) in l.brackets() {
            let mut dense = vec![Rational::zero(); l.dim()];
            for (&k, c) in v {
                dense[k] = c.clone();
            }
            out.values.insert((*i, *j), dense);
        }
        out
    }

    /// Reinterpret as a bracket table; Jacobi is not checked here.
    pub fn into_algebra_unchecked(&self, names: Vec<String>) -> LieAlgebra {
        let mut brackets: BTreeMap<(usize, usize), SparseVec> = BTreeMap::new();
        for ((i, j), v) in &self.values {
            let sv: SparseVec = v
                .iter()
                .cloned()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .collect();
            if !sv.is_empty() {
                brackets.insert((*i, *j), sv);
            }
        }
        LieAlgebra::new_unchecked(names, brackets).expect("structurally valid")
    }

    pub fn value_basis(&self, i: usize, j: usize) -> Vec<Rational> {
        if i == j {
            return vec![Rational::zero(); self.dim];
        }
        let (key, flip) = if i < j {
            ((i, j), false)
        } else {
            ((j, i), true)
        };
        match self.values.get(&key) {
            None => vec![Rational::zero(); self.dim],
            Some(v) => {
                if flip {
                    v.iter().map(|c| -c).collect()
                } else {
                    v.clone()
                }
            }
        }
    }

    /// Bilinear evaluation.
    pub fn eval(&self, x: &[Rational], y: &[Rational]) -> Vec<Rational> {
        assert_eq!(x.len(), self.dim);
        assert_eq!(y.len(), self.dim);
        let mut out = vec![Rational::zero(); self.dim];
        for ((i, j), v) in &self.values {
            let coeff = &x[*i] * &y[*j] - &x[*j] * &y[*i];
            if coeff.is_zero() {
                continue;
            }
            matrix::add_into(&mut out, v, &coeff);
        }
        out
    }

    pub fn add(&self, other: &Cochain2) -> Cochain2 {
        assert_eq!(self.dim, other.dim);
        let mut out = self.clone();
        for ((i, j), v) in &other.values {
            let mut cur = out.value_basis(*i, *j);
            for (c, d) in cur.iter_mut().zip(v) {
                *c += d;
            }
            out.values.remove(&(*i, *j));
            if !matrix::is_zero_vector(&cur) {
                out.values.insert((*i, *j), cur);
            }
        }
        out
    }

    pub fn scale(&self, c: &Rational) -> Cochain2 {
        if c.is_zero() {
            return Cochain2::zero(self.dim);
        }
        Cochain2 {
            dim: self.dim,
            values: self
                .values
                .iter()
                .map(|(k, v)| (*k, v.iter().map(|x| x * c).collect()))
                .collect(),
        }
    }
}

impl fmt::Debug for Cochain2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Cochain2 dim {}", self.dim)?;
        for ((i, j), v) in &self.values {
            let terms: Vec<String> = v
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(k, c)| format!("{c}*e{}", k + 1))
                .collect();
            writeln!(f, "  (e{},e{}) -> {}", i + 1, j + 1, terms.join(" + "))?;
        }
        Ok(())
    }
}

/// Alternating trilinear map, stored on `i < j < k`.
#[derive(Clone, PartialEq, Eq, Default, Debug)]
pub struct Trilinear {
    dim: usize,
    values: BTreeMap<(usize, usize, usize), Vec<Rational>>,
}

impl Trilinear {
    pub fn is_zero(&self) -> bool {
        self.values.is_empty()
    }

    pub fn nonzero_triples(
        &self,
    ) -> impl Iterator<Item = (&(usize, usize, usize), &Vec<Rational>)> {
        self.values.iter()
    }
}

/// Cyclic composition
/// `(phi o psi)(X,Y,Z) = phi(psi(X,Y),Z) + phi(psi(Y,Z),X) + phi(psi(Z,X),Y)`.
///
/// `phi o phi = 0` is exactly the Jacobi identity for `phi`.
pub fn circle(phi: &Cochain2, psi: &Cochain2) -> Result<Trilinear, DeformError> {
    if phi.dim != psi.dim {
        return Err(DeformError::DimensionMismatch(phi.dim, psi.dim));
    }
    let n = phi.dim;
    let mut out = Trilinear {
        dim: n,
        values: BTreeMap::new(),
    };
    for i in 0..n {
        let ei = matrix::unit_vector(n, i);
        for j in i + 1..n {
            let ej = matrix::unit_vector(n, j);
            let psi_ij = psi.value_basis(i, j);
            for k in j + 1..n {
                let ek = matrix::unit_vector(n, k);
                let mut acc = phi.eval(&psi_ij, &ek);
                let psi_jk = psi.value_basis(j, k);
                for (a, b) in acc.iter_mut().zip(phi.eval(&psi_jk, &ei)) {
                    *a += b;
                }
                let psi_ki = psi.value_basis(k, i);
                for (a, b) in acc.iter_mut().zip(phi.eval(&psi_ki, &ej)) {
                    *a += b;
                }
                if !matrix::is_zero_vector(&acc) {
                    out.values.insert((i, j, k), acc);
                }
            }
        }
    }
    Ok(out)
}

/// Chevalley-Eilenberg coboundary `delta_mu(phi) = mu o phi + phi o mu`.
pub fn coboundary(mu: &Cochain2, phi: &Cochain2) -> Result<Trilinear, DeformError> {
    let a = circle(mu, phi)?;
    let b = circle(phi, mu)?;
    let mut values = a.values;
    for (key, v) in b.values {
        match values.entry(key) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(v);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                for (x, y) in e.get_mut().iter_mut().zip(&v) {
                    *x += y;
                }
                if matrix::is_zero_vector(e.get()) {
                    e.remove();
                }
            }
        }
    }
    Ok(Trilinear {
        dim: mu.dim,
        values,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DeformationCheck {
    Pass,
    Failed(Vec<String>),
}

impl DeformationCheck {
    pub fn is_pass(&self) -> bool {
        matches!(self, DeformationCheck::Pass)
    }
}

/// The four closure identities making `mu_0 + t phi_1 + t^2 phi_2` a Lie
/// bracket for every `t`:
/// `delta phi1 = 0`, `phi1 o phi1 + delta phi2 = 0`, `phi2 o phi2 = 0`,
/// `phi1 o phi2 + phi2 o phi1 = 0`.
pub fn verify_quadratic_deformation(
    mu0: &Cochain2,
    phi1: &Cochain2,
    phi2: &Cochain2,
) -> Result<DeformationCheck, DeformError> {
    let mut failed = Vec::new();
    if !coboundary(mu0, phi1)?.is_zero() {
        failed.push("delta_mu0(phi1) = 0".to_string());
    }
    let mut second = circle(phi1, phi1)?;
    let delta2 = coboundary(mu0, phi2)?;
    for (key, v) in delta2.values {
        match second.values.entry(key) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(v);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                for (x, y) in e.get_mut().iter_mut().zip(&v) {
                    *x += y;
                }
                if matrix::is_zero_vector(e.get()) {
                    e.remove();
                }
            }
        }
    }
    if !second.is_zero() {
        failed.push("phi1 o phi1 + delta_mu0(phi2) = 0".to_string());
    }
    if !circle(phi2, phi2)?.is_zero() {
        failed.push("phi2 o phi2 = 0".to_string());
    }
    let mut mixed = circle(phi1, phi2)?;
    for (key, v) in circle(phi2, phi1)?.values {
        match mixed.values.entry(key) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(v);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                for (x, y) in e.get_mut().iter_mut().zip(&v) {
                    *x += y;
                }
                if matrix::is_zero_vector(e.get()) {
                    e.remove();
                }
            }
        }
    }
    if !mixed.is_zero() {
        failed.push("phi1 o phi2 + phi2 o phi1 = 0".to_string());
    }
    Ok(if failed.is_empty() {
        DeformationCheck::Pass
    } else {
        DeformationCheck::Failed(failed)
    })
}

/// Specialize `mu_0 + t phi1 + t^2 phi2` at a rational `t`.
pub fn specialize(mu0: &Cochain2, phi1: &Cochain2, phi2: &Cochain2, t: &Rational) -> Cochain2 {
    mu0.add(&phi1.scale(t)).add(&phi2.scale(&(t * t)))
}

/// Closed and nondegenerate: `d theta = 0` and `theta^p != 0` on a
/// `2p`-dimensional algebra.
pub fn is_symplectic(l: &LieAlgebra, theta: &KForm) -> Result<bool, DeformError> {
    let n = l.dim();
    if !n.is_multiple_of(2) {
        return Err(DeformError::OddDimension);
    }
    assert_eq!(theta.degree(), 2);
    assert_eq!(theta.n(), n);
    if !forms::ce_differential(l, theta).is_zero() {
        return Ok(false);
    }
    Ok(!forms::wedge_power(theta, n / 2).is_zero())
}

/// Central extension of a symplectic algebra by its symplectic form:
/// `[X,Y]_new = [X,Y]_T + theta(X,Y) Z` with `Z` central. The dual of `Z`
/// is then a contact form on the extension.
pub fn central_extension(t: &LieAlgebra, theta: &KForm) -> Result<LieAlgebra, DeformError> {
    let n = t.dim();
    if !n.is_multiple_of(2) {
        return Err(DeformError::OddDimension);
    }
    if !forms::ce_differential(t, theta).is_zero() {
        return Err(DeformError::NotClosed);
    }
    if forms::wedge_power(theta, n / 2).is_zero() {
        return Err(DeformError::NotSymplectic);
    }
    let mut brackets: BTreeMap<(usize, usize), SparseVec> = BTreeMap::new();
    for i in 0..n {
        for j in i + 1..n {
            let mut sv: SparseVec = t
                .bracket_basis(i, j)
                .into_iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .collect();
            let cocycle = theta.eval_basis_tuple(&[i, j]);
            if !cocycle.is_zero() {
                sv.insert(n, cocycle);
            }
            if !sv.is_empty() {
                brackets.insert((i, j), sv);
            }
        }
    }
    let mut names = t.basis_names().to_vec();
    names.push("Z".to_string());
    LieAlgebra::new(names, brackets).map_err(|_| DeformError::NotClosed)
}

/// Triangular scaling family `f_t` with Laurent-polynomial entries.
///
/// Diagonal entries must be nonzero monomials `c * t^k`; that is exactly
/// invertibility for every `t != 0`, and it keeps the inverse inside the
/// Laurent ring. Entries above the diagonal are unrestricted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScalingMap {
    dim: usize,
    entries: BTreeMap<(usize, usize), LaurentPoly>,
}

impl ScalingMap {
    pub fn diagonal(entries: Vec<LaurentPoly>) -> Result<Self, DeformError> {
        let dim = entries.len();
        let mut map = BTreeMap::new();
        for (i, e) in entries.into_iter().enumerate() {
            if e.as_monomial().is_none() {
                return Err(DeformError::SingularScaling(i));
            }
            map.insert((i, i), e);
        }
        Ok(ScalingMap { dim, entries: map })
    }

    /// Diagonal powers `t^{k_i}`.
    pub fn diagonal_powers(ks: &[i64]) -> Self {
        ScalingMap::diagonal(ks.iter().map(|&k| LaurentPoly::t(k)).collect())
            .expect("monomials are invertible")
    }

    pub fn upper_triangular(
        dim: usize,
        entries: BTreeMap<(usize, usize), LaurentPoly>,
    ) -> Result<Self, DeformError> {
        for &(i, j) in entries.keys() {
            assert!(i <= j && j < dim, "upper-triangular entries only");
        }
        for i in 0..dim {
            match entries.get(&(i, i)) {
                Some(e) if e.as_monomial().is_some() => {}
                _ => return Err(DeformError::SingularScaling(i)),
            }
        }
        Ok(ScalingMap { dim, entries })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> LaurentPoly {
        self.entries.get(&(i, j)).cloned().unwrap_or_default()
    }

    /// Column `j` of `f_t`.
    fn column(&self, j: usize) -> Vec<LaurentPoly> {
        (0..self.dim).map(|i| self.get(i, j)).collect()
    }

    /// Solve `f_t x = b` by back substitution (diagonal entries are
    /// invertible monomials).
    fn solve(&self, b: &[LaurentPoly]) -> Vec<LaurentPoly> {
        let n = self.dim;
        let mut x = vec![LaurentPoly::zero(); n];
        for i in (0..n).rev() {
            let mut rhs = b[i].clone();
            for j in i + 1..n {
                let e = self.get(i, j);
                if !e.is_zero() && !x[j].is_zero() {
                    rhs = rhs.sub(&e.mul(&x[j]));
                }
            }
            let (c, k) = self.get(i, i).as_monomial().expect("validated");
            x[i] = rhs.shift(-k).scale(&c.recip());
        }
        x
    }
}

/// Structure constants of `mu_t = f_t^{-1} ( mu_0 (f_t x, f_t y) )`.
pub fn rescaled_brackets(
    l: &LieAlgebra,
    f: &ScalingMap,
) -> BTreeMap<(usize, usize), Vec<LaurentPoly>> {
    assert_eq!(l.dim(), f.dim());
    let n = l.dim();
    let mut out = BTreeMap::new();
    for i in 0..n {
        let fi = f.column(i);
        for j in i + 1..n {
            let fj = f.column(j);
            // mu_0(f ei, f ej) with Laurent coefficients.
            let mut value = vec![LaurentPoly::zero(); n];
            for a in 0..n {
                if fi[a].is_zero() {
                    continue;
                }
                for b in 0..n {
                    if fj[b].is_zero() || a == b {
                        continue;
                    }
                    let bracket = l.bracket_basis(a, b);
                    let scale = fi[a].mul(&fj[b]);
                    for (k, c) in bracket.iter().enumerate() {
                        if !c.is_zero() {
                            value[k] = value[k].add(&scale.scale(c));
                        }
                    }
                }
            }
            let pulled = f.solve(&value);
            if pulled.iter().any(|p| !p.is_zero()) {
                out.insert((i, j), pulled);
            }
        }
    }
    out
}

#[derive(Clone, Debug)]
pub enum Contraction {
    /// The limit algebra; Jacobi re-verified.
    Limit(LieAlgebra),
    /// Offending structure constants `((i,j,k), value)` carrying negative
    /// exponents.
    NoLimit(Vec<((usize, usize, usize), LaurentPoly)>),
}

/// Contraction `lim_{t->0} f_t^{-1} mu_0 (f_t x, f_t y)`, computed
/// symbolically. Limits of brackets are brackets, but the result is
/// re-checked anyway.
pub fn contract(l: &LieAlgebra, f: &ScalingMap) -> Result<Contraction, DeformError> {
    let mu_t = rescaled_brackets(l, f);
    let mut offending = Vec::new();
    let mut brackets: BTreeMap<(usize, usize), SparseVec> = BTreeMap::new();
    for ((i, j), value) in &mu_t {
        let mut sv = SparseVec::new();
        for (k, p) in value.iter().enumerate() {
            match p.limit_at_zero() {
                Limit::NoLimit => offending.push(((*i, *j, k), p.clone())),
                Limit::Value(c) => {
                    if !c.is_zero() {
                        sv.insert(k, c);
                    }
                }
            }
        }
        if !sv.is_empty() {
            brackets.insert((*i, *j), sv);
        }
    }
    if !offending.is_empty() {
        return Ok(Contraction::NoLimit(offending));
    }
    let limit = LieAlgebra::new(l.basis_names().to_vec(), brackets)
        .expect("limits of Jacobi-zero families are Jacobi-zero");
    Ok(Contraction::Limit(limit))
}

/// Brute-force search for a diagonal power scaling `f_t = diag(t^k_i)`
/// with `|k_i| <= bound` whose contraction limit has exactly the target's
/// structure constants. Exponent vectors are scanned in a fixed
/// lexicographic order, so the first hit is reproducible. `None` means the
/// box contained no witness, not that no contraction exists.
pub fn search_diagonal_contraction(
    l: &LieAlgebra,
    target: &LieAlgebra,
    bound: i64,
) -> Option<Vec<i64>> {
    if l.dim() != target.dim() {
        return None;
    }
    let n = l.dim();
    let mut exponents = vec![-bound; n];
    loop {
        // Limit exists iff every structure constant scales by t^(>= 0);
        // the limit keeps exactly the exponent-0 constants.
        let mut ok = true;
        let mut limit: BTreeMap<(usize, usize), SparseVec> = BTreeMap::new();
        'outer: for ((i, j), v) in l.brackets() {
            let mut sv = SparseVec::new();
            for (&k, c) in v {
                let e = exponents[*i] + exponents[*j] - exponents[k];
                match e.cmp(&0) {
                    std::cmp::Ordering::Less => {
                        ok = false;
                        break 'outer;
                    }
                    std::cmp::Ordering::Equal => {
                        sv.insert(k, c.clone());
                    }
                    std::cmp::Ordering::Greater => {}
                }
            }
            if !sv.is_empty() {
                limit.insert((*i, *j), sv);
            }
        }
        if ok && &limit == target.brackets() {
            return Some(exponents);
        }
        // next exponent vector
        let mut pos = n;
        loop {
            if pos == 0 {
                return None;
            }
            pos -= 1;
            if exponents[pos] < bound {
                exponents[pos] += 1;
                for e in exponents.iter_mut().skip(pos + 1) {
                    *e = -bound;
                }
                break;
            }
        }
    }
}

/// Search for an isomorphism of the restricted shape
/// `e_i -> d_i e_{sigma(i)}` (signed permutation with diagonal rational
/// rescaling). Full isomorphism testing is out of scope; `None` means "not
/// matched by this family", not "non-isomorphic".
pub fn match_by_scaled_permutation(
    a: &LieAlgebra,
    b: &LieAlgebra,
) -> Option<Vec<(usize, Rational)>> {
    if a.dim() != b.dim() {
        return None;
    }
    let n = a.dim();
    let mut perm: Vec<usize> = (0..n).collect();
    permute_search(a, b, &mut perm, 0)
}

fn permute_search(
    a: &LieAlgebra,
    b: &LieAlgebra,
    perm: &mut Vec<usize>,
    depth: usize,
) -> Option<Vec<(usize, Rational)>> {
    let n = a.dim();
    if depth == n {
        return solve_diagonal(a, b, perm)
            .map(|d| perm.iter().zip(d).map(|(&p, c)| (p, c)).collect::<Vec<_>>());
    }
    for i in depth..n {
        perm.swap(depth, i);
        if let Some(found) = permute_search(a, b, perm, depth + 1) {
            perm.swap(depth, i);
            return Some(found);
        }
        perm.swap(depth, i);
    }
    None
}

/// Solve `c^A_{ij,k} d_k = d_i d_j c^B_{s(i)s(j),s(k)}` for nonzero
/// diagonal scalars `d`, by propagation with free variables pinned to 1,
/// then verify every constraint.
fn solve_diagonal(a: &LieAlgebra, b: &LieAlgebra, perm: &[usize]) -> Option<Vec<Rational>> {
    let n = a.dim();
    // Constraint list: (i, j, k, ratio) with d_i * d_j = ratio * d_k.
    let mut constraints = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let va = a.bracket_basis(i, j);
            let vb = b.bracket_basis(perm[i], perm[j]);
            for k in 0..n {
                let ca = &va[k];
                let cb = &vb[perm[k]];
                match (ca.is_zero(), cb.is_zero()) {
                    (true, true) => {}
                    (false, false) => {
                        constraints.push((i, j, k, ca / cb));
                    }
                    _ => return None,
                }
            }
        }
    }
    let mut d: Vec<Option<Rational>> = vec![None; n];
    loop {
        let mut progressed = false;
        for (i, j, k, ratio) in &constraints {
            // d_i d_j = ratio * d_k
            match (d[*i].clone(), d[*j].clone(), d[*k].clone()) {
                (Some(di), Some(dj), None) => {
                    d[*k] = Some(&(&di * &dj) / ratio);
                    progressed = true;
                }
                (Some(di), None, Some(dk)) => {
                    d[*j] = Some(&(ratio * &dk) / &di);
                    progressed = true;
                }
                (None, Some(dj), Some(dk)) => {
                    d[*i] = Some(&(ratio * &dk) / &dj);
                    progressed = true;
                }
                _ => {}
            }
        }
        if d.iter().all(Option::is_some) {
            break;
        }
        if !progressed {
            match d.iter().position(Option::is_none) {
                Some(free) => {
                    d[free] = Some(Rational::one());
                }
                None => break,
            }
        }
    }
    let d: Vec<Rational> = d.into_iter().map(Option::unwrap).collect();
    if d.iter().any(Rational::is_zero) {
        return None;
    }
    for (i, j, k, ratio) in &constraints {
        if &d[*i] * &d[*j] != ratio * &d[*k] {
            return None;
        }
    }
    Some(d)
}

/// `Z` is central in the extension and the extension gains one step of
/// nilpotency; used by the construction tests.
pub fn extension_center_contains_z(l: &LieAlgebra) -> bool {
    let n = l.dim();
    l.center().contains(&matrix::unit_vector(n, n - 1))
}

/// Dual of the new central generator, a contact candidate on the extension.
pub fn extension_contact_form(l: &LieAlgebra) -> KForm {
    KForm::dual(l.dim(), l.dim() - 1)
}

/// Restriction helper for the quotient chart `t = span(e_1..e_2p)` of a
/// `2p+1`-dimensional algebra with central last generator.
pub fn central_quotient_with_cocycle(l: &LieAlgebra) -> Option<(LieAlgebra, KForm)> {
    let n = l.dim();
    if n == 0 {
        return None;
    }
    let z = matrix::unit_vector(n, n - 1);
    if !l.center().contains(&z) {
        return None;
    }
    let ideal = Subspace::from_spanning(n, vec![z]);
    let t = l.quotient_by_ideal(&ideal).ok()?;
    let mut theta = KForm::zero(n - 1, 2);
    for i in 0..n - 1 {
        for j in i + 1..n - 1 {
            let v = l.bracket_basis(i, j);
            if !v[n - 1].is_zero() {
                theta.add_term(&[i, j], v[n - 1].clone());
            }
        }
    }
    Some((t, theta))
}
