//! The `.lie` text format: algebras given either by brackets
//!
//! ```text
//! algebra h3 dim 3 basis X1 X2 X3
//! [X1,X2] = X3
//! ```
//!
//! or by Maurer-Cartan equations
//!
//! ```text
//! mc h3 dim 3 forms w1 w2 w3
//! d w3 = -1 * w1 ^ w2
//! ```
//!
//! Both encode the same structure constants under the fixed convention
//! `dw(X,Y) = -w([X,Y])`. Parsing produces a document with source spans;
//! documents convert to `LieAlgebra` values and back, and the serializer
//! emits canonical text that re-parses to an equal document.

pub mod lexer;
pub mod parser;

pub use lexer::Span;
pub use parser::{parse_document, parse_one_form, parse_scaling, parse_two_form, ParseError};

use std::collections::BTreeMap;

use crate::forms::KForm;
use crate::lie::{LieAlgebra, LieError, SparseVec};
use crate::rational::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Syntax {
    Bracket,
    MaurerCartan,
}

#[derive(Clone, Debug)]
pub enum Statement {
    /// `[e_i, e_j] = sum c_k e_k`
    Bracket {
        i: usize,
        j: usize,
        terms: Vec<(Rational, usize)>,
        span: Span,
    },
    /// `d w_k = sum c w_i ^ w_j`
    Differential {
        k: usize,
        terms: Vec<(Rational, usize, usize)>,
        span: Span,
    },
}

#[derive(Clone, Debug)]
pub struct AlgebraDocument {
    pub name: String,
    pub dim: usize,
    pub syntax: Syntax,
    /// Basis symbols (bracket syntax) or dual form symbols (MC syntax);
    /// either way these name the basis and its dual coherently.
    pub names: Vec<String>,
    pub statements: Vec<Statement>,
}

impl AlgebraDocument {
    /// Structure constants of the document (antisymmetrized, `i < j` keys).
    pub fn structure_constants(&self) -> BTreeMap<(usize, usize), SparseVec> {
        let mut brackets: BTreeMap<(usize, usize), SparseVec> = BTreeMap::new();
        let mut add = |i: usize, j: usize, k: usize, c: Rational| {
            if c.is_zero() {
                return;
            }
            let ((a, b), c) = if i < j { ((i, j), c) } else { ((j, i), -c) };
            let entry = brackets.entry((a, b)).or_default();
            let v = entry.remove(&k).map_or(c.clone(), |old| old + c);
            if v.is_zero() {
                entry.remove(&k);
            } else {
                entry.insert(k, v);
            }
        };
        for st in &self.statements {
            match st {
                Statement::Bracket { i, j, terms, .. } => {
                    for (c, k) in terms {
                        add(*i, *j, *k, c.clone());
                    }
                }
                // dw_k = c w_i ^ w_j encodes [X_i, X_j] -= c X_k.
                Statement::Differential { k, terms, .. } => {
                    for (c, i, j) in terms {
                        add(*i, *j, *k, -c.clone());
                    }
                }
            }
        }
        brackets.retain(|_, v| !v.is_empty());
        brackets
    }

    /// Jacobi-checked conversion.
    pub fn to_algebra(&self) -> Result<LieAlgebra, LieError> {
        LieAlgebra::new(self.names.clone(), self.structure_constants())
    }

    pub fn to_algebra_unchecked(&self) -> Result<LieAlgebra, LieError> {
        LieAlgebra::new_unchecked(self.names.clone(), self.structure_constants())
    }
}

/// Documents are equal when they define the same algebra in the same
/// syntax with the same symbols; spans and statement order do not matter.
impl PartialEq for AlgebraDocument {
    fn eq(&self, other: &Self) -> bool {
        self.name == other.name
            && self.dim == other.dim
            && self.syntax == other.syntax
            && self.names == other.names
            && self.structure_constants() == other.structure_constants()
    }
}

impl Eq for AlgebraDocument {}

fn render_coeff(c: &Rational, symbol: &str) -> String {
    if c.is_one() {
        symbol.to_string()
    } else if c == &-Rational::one() {
        format!("-{symbol}")
    } else {
        format!("{c}*{symbol}")
    }
}

fn render_sum(pieces: &[String]) -> String {
    if pieces.is_empty() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, piece) in pieces.iter().enumerate() {
        if i == 0 {
            out.push_str(piece);
        } else if let Some(rest) = piece.strip_prefix('-') {
            out.push_str(" - ");
            out.push_str(rest);
        } else {
            out.push_str(" + ");
            out.push_str(piece);
        }
    }
    out
}

/// Canonical text for a document: header line, then one statement per
/// nonzero bracket / differential in index order.
pub fn render_document(doc: &AlgebraDocument) -> String {
    let mut out = String::new();
    match doc.syntax {
        Syntax::Bracket => {
            out.push_str(&format!("algebra {} dim {} basis ", doc.name, doc.dim));
            out.push_str(&doc.names.join(" "));
            out.push('\n');
            for ((i, j), v) in doc.structure_constants() {
                let pieces: Vec<String> = v
                    .iter()
                    .map(|(&k, c)| render_coeff(c, &doc.names[k]))
                    .collect();
                out.push_str(&format!(
                    "[{},{}] = {}\n",
                    doc.names[i],
                    doc.names[j],
                    render_sum(&pieces)
                ));
            }
        }
        Syntax::MaurerCartan => {
            out.push_str(&format!("mc {} dim {} forms ", doc.name, doc.dim));
            out.push_str(&doc.names.join(" "));
            out.push('\n');
            // dw_k = -sum c_ij^k w_i ^ w_j
            let mut by_k: BTreeMap<usize, Vec<String>> = BTreeMap::new();
            for ((i, j), v) in doc.structure_constants() {
                for (&k, c) in v.iter() {
                    let mono = format!("{} ^ {}", doc.names[i], doc.names[j]);
                    by_k.entry(k).or_default().push(render_coeff(&-c, &mono));
                }
            }
            for (k, pieces) in by_k {
                out.push_str(&format!("d {} = {}\n", doc.names[k], render_sum(&pieces)));
            }
        }
    }
    out
}

/// Express an algebra as a document in the chosen syntax.
pub fn document_from_algebra(l: &LieAlgebra, name: &str, syntax: Syntax) -> AlgebraDocument {
    let span = Span::point(0, 0, 0);
    let statements = match syntax {
        Syntax::Bracket => l
            .brackets()
            .iter()
            .map(|((i, j), v)| Statement::Bracket {
                i: *i,
                j: *j,
                terms: v.iter().map(|(&k, c)| (c.clone(), k)).collect(),
                span,
            })
            .collect(),
        Syntax::MaurerCartan => {
            let mut by_k: BTreeMap<usize, Vec<(Rational, usize, usize)>> = BTreeMap::new();
            for ((i, j), v) in l.brackets() {
                for (&k, c) in v.iter() {
                    by_k.entry(k).or_default().push((-c, *i, *j));
                }
            }
            by_k.into_iter()
                .map(|(k, terms)| Statement::Differential { k, terms, span })
                .collect()
        }
    };
    AlgebraDocument {
        name: name.to_string(),
        dim: l.dim(),
        syntax,
        names: l.basis_names().to_vec(),
        statements,
    }
}

/// Build a 1-form over an algebra from an expression over its dual names.
pub fn one_form_from_expr(l: &LieAlgebra, text: &str) -> Result<KForm, ParseError> {
    let terms = parse_one_form(text, l.basis_names())?;
    let mut coeffs = vec![Rational::zero(); l.dim()];
    for (c, i) in terms {
        coeffs[i] += c;
    }
    Ok(KForm::one_form(&coeffs))
}

/// Build a 2-form over an algebra from a wedge expression over its duals.
pub fn two_form_from_expr(l: &LieAlgebra, text: &str) -> Result<KForm, ParseError> {
    let terms = parse_two_form(text, l.basis_names())?;
    let mut f = KForm::zero(l.dim(), 2);
    for (c, i, j) in terms {
        f.add_term(&[i, j], c);
    }
    Ok(f)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn bracket_and_mc_agree_on_h3() {
        let b = parse_document("algebra h3 dim 3 basis X1 X2 X3\n[X1,X2] = X3\n").unwrap();
        let m = parse_document("mc h3 dim 3 forms X1 X2 X3\nd X3 = -1 * X1 ^ X2\n").unwrap();
        assert_eq!(b.structure_constants(), m.structure_constants());
        assert!(b
            .to_algebra()
            .unwrap()
            .same_structure(&m.to_algebra().unwrap()));
    }

    #[test]
    fn roundtrip_both_syntaxes() {
        let entry = catalog::build_default("kaplan7").unwrap();
        for syntax in [Syntax::Bracket, Syntax::MaurerCartan] {
            let doc = document_from_algebra(&entry.algebra, "kaplan7", syntax);
            let text = render_document(&doc);
            let reparsed = parse_document(&text).unwrap();
            assert_eq!(doc, reparsed);
            let back = reparsed.to_algebra().unwrap();
            assert!(back.same_structure(&entry.algebra));
        }
    }

    #[test]
    fn form_expressions_over_algebra() {
        let entry = catalog::build_default("heisenberg").unwrap();
        let f = one_form_from_expr(&entry.algebra, "X5").unwrap();
        let report = crate::cartan::cartan_class(&entry.algebra, &f).unwrap();
        assert_eq!(report.class, 5);
        let theta = two_form_from_expr(&LieAlgebra::abelian(4), "X1^X2 + X3^X4").unwrap();
        assert!(crate::deform::is_symplectic(&LieAlgebra::abelian(4), &theta).unwrap());
    }
}
