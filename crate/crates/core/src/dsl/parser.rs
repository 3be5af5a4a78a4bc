//! Recursive-descent parser for `.lie` documents, one-form / two-form
//! expressions and scaling files. Every diagnostic carries a source span
//! and the token set that was expected at that point.

use std::collections::BTreeSet;

use crate::dsl::lexer::{tokenize, LexError, Span, Token, TokenKind};
use crate::dsl::{AlgebraDocument, Statement, Syntax};
use crate::laurent::LaurentPoly;
use crate::rational::Rational;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    pub message: String,
    pub span: Span,
    pub expected: Vec<String>,
}

impl std::fmt::Display for ParseError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}: {}", self.span, self.message)?;
        if !self.expected.is_empty() {
            write!(f, " (expected {})", self.expected.join(" or "))?;
        }
        Ok(())
    }
}

impl std::error::Error for ParseError {}

impl From<LexError> for ParseError {
    fn from(e: LexError) -> Self {
        ParseError {
            message: e.message,
            span: e.span,
            expected: Vec::new(),
        }
    }
}

struct Parser {
    tokens: Vec<Token>,
    pos: usize,
}

impl Parser {
    fn new(text: &str) -> Result<Self, ParseError> {
        Ok(Parser {
            tokens: tokenize(text)?,
            pos: 0,
        })
    }

    fn peek(&self) -> &Token {
        &self.tokens[self.pos.min(self.tokens.len() - 1)]
    }

    fn advance(&mut self) -> Token {
        let t = self.tokens[self.pos.min(self.tokens.len() - 1)].clone();
        if self.pos < self.tokens.len() - 1 {
            self.pos += 1;
        }
        t
    }

    fn error(&self, message: impl Into<String>, expected: &[&str]) -> ParseError {
        ParseError {
            message: message.into(),
            span: self.peek().span,
            expected: expected.iter().map(|s| s.to_string()).collect(),
        }
    }

    fn expect_ident(&mut self, what: &str) -> Result<(String, Span), ParseError> {
        match self.peek().kind.clone() {
            TokenKind::Ident(s) => {
                let span = self.peek().span;
                self.advance();
                Ok((s, span))
            }
            other => Err(self.error(
                format!("found {}, expected {what}", other.describe()),
                &["identifier"],
            )),
        }
    }

    fn expect_keyword(&mut self, kw: &str) -> Result<(), ParseError> {
        match self.peek().kind.clone() {
            TokenKind::Ident(s) if s == kw => {
                self.advance();
                Ok(())
            }
            other => Err(self.error(
                format!("found {}, expected keyword `{kw}`", other.describe()),
                &[kw],
            )),
        }
    }

    fn expect(&mut self, kind: &TokenKind) -> Result<Span, ParseError> {
        if &self.peek().kind == kind {
            Ok(self.advance().span)
        } else {
            Err(self.error(
                format!(
                    "found {}, expected {}",
                    self.peek().kind.describe(),
                    kind.describe()
                ),
                &[&kind.describe()],
            ))
        }
    }

    fn skip_newlines(&mut self) {
        while matches!(self.peek().kind, TokenKind::Newline) {
            self.advance();
        }
    }

    fn at_end(&self) -> bool {
        matches!(self.peek().kind, TokenKind::Eof)
    }

    fn expect_usize(&mut self, what: &str) -> Result<usize, ParseError> {
        match self.peek().kind.clone() {
            TokenKind::Int(s) => {
                let span = self.peek().span;
                self.advance();
                s.parse().map_err(|_| ParseError {
                    message: format!("{what} out of range"),
                    span,
                    expected: vec!["small positive integer".into()],
                })
            }
            other => Err(self.error(
                format!("found {}, expected {what}", other.describe()),
                &["integer"],
            )),
        }
    }

    /// `INT [/ INT]` with no leading sign.
    fn unsigned_rational(&mut self) -> Result<Rational, ParseError> {
        let span = self.peek().span;
        let num = match self.peek().kind.clone() {
            TokenKind::Int(s) => {
                self.advance();
                s
            }
            other => {
                return Err(self.error(
                    format!("found {}, expected a number", other.describe()),
                    &["integer"],
                ))
            }
        };
        if matches!(self.peek().kind, TokenKind::Slash) {
            self.advance();
            let den = match self.peek().kind.clone() {
                TokenKind::Int(s) => {
                    self.advance();
                    s
                }
                other => {
                    return Err(self.error(
                        format!("found {}, expected a denominator", other.describe()),
                        &["integer"],
                    ))
                }
            };
            let text = format!("{num}/{den}");
            text.parse().map_err(|_| ParseError {
                message: format!("invalid rational `{text}`"),
                span,
                expected: Vec::new(),
            })
        } else {
            num.parse().map_err(|_| ParseError {
                message: format!("invalid integer `{num}`"),
                span,
                expected: Vec::new(),
            })
        }
    }
}

fn resolve(names: &[String], symbol: &str, span: Span, what: &str) -> Result<usize, ParseError> {
    names.iter().position(|n| n == symbol).ok_or(ParseError {
        message: format!("undeclared {what} `{symbol}`"),
        span,
        expected: Vec::new(),
    })
}

/// Parse a complete `.lie` document.
pub fn parse_document(text: &str) -> Result<AlgebraDocument, ParseError> {
    let mut p = Parser::new(text)?;
    p.skip_newlines();
    let (kw, kw_span) = p.expect_ident("`algebra` or `mc` header")?;
    let syntax = match kw.as_str() {
        "algebra" => Syntax::Bracket,
        "mc" => Syntax::MaurerCartan,
        other => {
            return Err(ParseError {
                message: format!("unknown header keyword `{other}`"),
                span: kw_span,
                expected: vec!["algebra".into(), "mc".into()],
            })
        }
    };
    let (name, _) = p.expect_ident("algebra name")?;
    p.expect_keyword("dim")?;
    let dim = p.expect_usize("dimension")?;
    if dim == 0 {
        return Err(ParseError {
            message: "dimension must be positive".into(),
            span: kw_span,
            expected: Vec::new(),
        });
    }
    match syntax {
        Syntax::Bracket => p.expect_keyword("basis")?,
        Syntax::MaurerCartan => p.expect_keyword("forms")?,
    }
    let mut names = Vec::with_capacity(dim);
    for _ in 0..dim {
        let (symbol, span) = p.expect_ident("basis symbol")?;
        if names.contains(&symbol) {
            return Err(ParseError {
                message: format!("duplicate symbol `{symbol}`"),
                span,
                expected: Vec::new(),
            });
        }
        names.push(symbol);
    }
    let mut statements = Vec::new();
    let mut seen_bracket = BTreeSet::new();
    let mut seen_diff = BTreeSet::new();
    loop {
        p.skip_newlines();
        if p.at_end() {
            break;
        }
        match syntax {
            Syntax::Bracket => {
                let span = p.peek().span;
                p.expect(&TokenKind::LBracket)?;
                let (a, sa) = p.expect_ident("basis symbol")?;
                let i = resolve(&names, &a, sa, "basis symbol")?;
                p.expect(&TokenKind::Comma)?;
                let (b, sb) = p.expect_ident("basis symbol")?;
                let j = resolve(&names, &b, sb, "basis symbol")?;
                if i == j {
                    return Err(ParseError {
                        message: format!("bracket [{a},{a}] is identically zero"),
                        span: sb,
                        expected: Vec::new(),
                    });
                }
                p.expect(&TokenKind::RBracket)?;
                p.expect(&TokenKind::Equals)?;
                let terms = parse_vector_sum(&mut p, &names)?;
                if !seen_bracket.insert((i.min(j), i.max(j))) {
                    return Err(ParseError {
                        message: format!("duplicate definition of [{a},{b}]"),
                        span,
                        expected: Vec::new(),
                    });
                }
                statements.push(Statement::Bracket { i, j, terms, span });
            }
            Syntax::MaurerCartan => {
                let span = p.peek().span;
                p.expect_keyword("d")?;
                let (w, sw) = p.expect_ident("form symbol")?;
                let k = resolve(&names, &w, sw, "form")?;
                p.expect(&TokenKind::Equals)?;
                let terms = parse_wedge_sum(&mut p, &names)?;
                if !seen_diff.insert(k) {
                    return Err(ParseError {
                        message: format!("duplicate definition of d {w}"),
                        span,
                        expected: Vec::new(),
                    });
                }
                statements.push(Statement::Differential { k, terms, span });
            }
        }
        match p.peek().kind {
            TokenKind::Newline => {
                p.advance();
            }
            TokenKind::Eof => break,
            _ => {
                return Err(p.error(
                    format!(
                        "found {}, expected end of statement",
                        p.peek().kind.describe()
                    ),
                    &["newline", "end of input"],
                ))
            }
        }
    }
    Ok(AlgebraDocument {
        name,
        dim,
        syntax,
        names,
        statements,
    })
}

/// `0` or `c1*Sk + c2*Sl - ...` over declared symbols.
fn parse_vector_sum(
    p: &mut Parser,
    names: &[String],
) -> Result<Vec<(Rational, usize)>, ParseError> {
    let mut terms = Vec::new();
    let mut negate = false;
    loop {
        match p.peek().kind.clone() {
            TokenKind::Minus => {
                p.advance();
                negate = !negate;
                continue;
            }
            TokenKind::Plus => {
                p.advance();
                continue;
            }
            _ => {}
        }
        let coeff_sign = if negate {
            -Rational::one()
        } else {
            Rational::one()
        };
        negate = false;
        match p.peek().kind.clone() {
            TokenKind::Int(_) => {
                let c = p.unsigned_rational()?;
                if c.is_zero() && terms.is_empty() {
                    // `= 0`: the zero vector, only valid alone.
                    if matches!(p.peek().kind, TokenKind::Newline | TokenKind::Eof) {
                        return Ok(terms);
                    }
                }
                p.expect(&TokenKind::Star)?;
                let (s, span) = p.expect_ident("basis symbol")?;
                let idx = resolve(names, &s, span, "basis symbol")?;
                terms.push((coeff_sign * c, idx));
            }
            TokenKind::Ident(s) => {
                let span = p.peek().span;
                p.advance();
                let idx = resolve(names, &s, span, "basis symbol")?;
                terms.push((coeff_sign, idx));
            }
            other => {
                return Err(p.error(
                    format!("found {}, expected a term", other.describe()),
                    &["number", "identifier"],
                ))
            }
        }
        match p.peek().kind {
            TokenKind::Plus | TokenKind::Minus => continue,
            _ => break,
        }
    }
    Ok(terms)
}

/// `0` or `c * wi ^ wj + ...` over declared forms.
fn parse_wedge_sum(
    p: &mut Parser,
    names: &[String],
) -> Result<Vec<(Rational, usize, usize)>, ParseError> {
    let mut terms = Vec::new();
    let mut negate = false;
    loop {
        match p.peek().kind.clone() {
            TokenKind::Minus => {
                p.advance();
                negate = !negate;
                continue;
            }
            TokenKind::Plus => {
                p.advance();
                continue;
            }
            _ => {}
        }
        let sign = if negate {
            -Rational::one()
        } else {
            Rational::one()
        };
        negate = false;
        let coeff = match p.peek().kind.clone() {
            TokenKind::Int(_) => {
                let c = p.unsigned_rational()?;
                if c.is_zero()
                    && terms.is_empty()
                    && matches!(p.peek().kind, TokenKind::Newline | TokenKind::Eof)
                {
                    return Ok(terms);
                }
                p.expect(&TokenKind::Star)?;
                c
            }
            _ => Rational::one(),
        };
        let (a, sa) = p.expect_ident("form symbol")?;
        let i = resolve(names, &a, sa, "form")?;
        p.expect(&TokenKind::Caret)?;
        let (b, sb) = p.expect_ident("form symbol")?;
        let j = resolve(names, &b, sb, "form")?;
        if i == j {
            return Err(ParseError {
                message: format!("`{a} ^ {a}` is identically zero"),
                span: sb,
                expected: Vec::new(),
            });
        }
        terms.push((sign * coeff, i, j));
        match p.peek().kind {
            TokenKind::Plus | TokenKind::Minus => continue,
            _ => break,
        }
    }
    Ok(terms)
}

/// Standalone 1-form expression over the declared dual names:
/// `3/2*w1 - w4`.
pub fn parse_one_form(text: &str, names: &[String]) -> Result<Vec<(Rational, usize)>, ParseError> {
    let mut p = Parser::new(text)?;
    let terms = parse_vector_sum(&mut p, names)?;
    if !p.at_end() {
        return Err(p.error(
            format!("trailing {}", p.peek().kind.describe()),
            &["end of input"],
        ));
    }
    Ok(terms)
}

/// Standalone 2-form expression: `w1^w2 + 2*w3^w4`.
pub fn parse_two_form(
    text: &str,
    names: &[String],
) -> Result<Vec<(Rational, usize, usize)>, ParseError> {
    let mut p = Parser::new(text)?;
    let terms = parse_wedge_sum(&mut p, names)?;
    if !p.at_end() {
        return Err(p.error(
            format!("trailing {}", p.peek().kind.describe()),
            &["end of input"],
        ));
    }
    Ok(terms)
}

/// Scaling file: header `scaling dim N`, then `N` lines of Laurent
/// monomials `c * t^k` (`t`, `t^-2`, `3/2*t`, `1`, ...).
pub fn parse_scaling(text: &str) -> Result<Vec<LaurentPoly>, ParseError> {
    let mut p = Parser::new(text)?;
    p.skip_newlines();
    p.expect_keyword("scaling")?;
    p.expect_keyword("dim")?;
    let dim = p.expect_usize("dimension")?;
    let mut entries = Vec::with_capacity(dim);
    for _ in 0..dim {
        p.skip_newlines();
        entries.push(parse_laurent_monomial(&mut p)?);
    }
    p.skip_newlines();
    if !p.at_end() {
        return Err(p.error(
            format!("trailing {}", p.peek().kind.describe()),
            &["end of input"],
        ));
    }
    Ok(entries)
}

fn parse_laurent_monomial(p: &mut Parser) -> Result<LaurentPoly, ParseError> {
    let mut negate = false;
    while matches!(p.peek().kind, TokenKind::Minus) {
        p.advance();
        negate = !negate;
    }
    let mut coeff = match p.peek().kind.clone() {
        TokenKind::Int(_) => {
            let c = p.unsigned_rational()?;
            if matches!(p.peek().kind, TokenKind::Star) {
                p.advance();
            } else {
                // plain rational entry, no t part
                let c = if negate { -c } else { c };
                return Ok(LaurentPoly::constant(c));
            }
            c
        }
        _ => Rational::one(),
    };
    if negate {
        coeff = -coeff;
    }
    let (t, span) = p.expect_ident("`t`")?;
    if t != "t" {
        return Err(ParseError {
            message: format!("expected the parameter `t`, found `{t}`"),
            span,
            expected: vec!["t".into()],
        });
    }
    let mut exp: i64 = 1;
    if matches!(p.peek().kind, TokenKind::Caret) {
        p.advance();
        let mut neg_exp = false;
        while matches!(p.peek().kind, TokenKind::Minus) {
            p.advance();
            neg_exp = !neg_exp;
        }
        let e = p.expect_usize("exponent")? as i64;
        exp = if neg_exp { -e } else { e };
    }
    Ok(LaurentPoly::monomial(coeff, exp))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    #[test]
    fn parse_bracket_document() {
        let doc = parse_document("algebra h3 dim 3 basis X1 X2 X3\n[X1,X2] = X3\n").unwrap();
        assert_eq!(doc.name, "h3");
        assert_eq!(doc.dim, 3);
        assert_eq!(doc.syntax, Syntax::Bracket);
        assert_eq!(doc.statements.len(), 1);
    }

    #[test]
    fn parse_mc_document_with_signs() {
        let doc = parse_document("mc h3 dim 3 forms w1 w2 w3\nd w3 = -1 * w1 ^ w2\n").unwrap();
        match &doc.statements[0] {
            Statement::Differential { k, terms, .. } => {
                assert_eq!(*k, 2);
                assert_eq!(terms, &vec![(rat(-1, 1), 0, 1)]);
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn undeclared_symbol_has_span() {
        let err = parse_document("mc a dim 3 forms w1 w2 w3\nd w3 = w1 ^ w9\n").unwrap_err();
        assert!(err.message.contains("undeclared form `w9`"));
        assert_eq!(err.span.line, 2);
        assert!(err.span.col > 0);
    }

    #[test]
    fn duplicate_lhs_rejected() {
        let err = parse_document("algebra a dim 3 basis X1 X2 X3\n[X1,X2] = X3\n[X2,X1] = X3\n")
            .unwrap_err();
        assert!(err.message.contains("duplicate definition"));
    }

    #[test]
    fn zero_rhs_allowed() {
        let doc = parse_document("algebra a dim 2 basis X1 X2\n[X1,X2] = 0\n").unwrap();
        match &doc.statements[0] {
            Statement::Bracket { terms, .. } => assert!(terms.is_empty()),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn one_form_expressions() {
        let names: Vec<String> = vec!["w1".into(), "w2".into(), "w3".into()];
        let t = parse_one_form("3/2*w1 - w3", &names).unwrap();
        assert_eq!(t, vec![(rat(3, 2), 0), (rat(-1, 1), 2)]);
        assert!(parse_one_form("w9", &names).is_err());
        assert!(parse_one_form("w1 w2", &names).is_err());
    }

    #[test]
    fn scaling_files() {
        let s = parse_scaling("scaling dim 3\nt\nt\nt^2\n").unwrap();
        assert_eq!(s.len(), 3);
        assert_eq!(s[2], LaurentPoly::t(2));
        let s = parse_scaling("scaling dim 2\n-3/2*t^-1\n1\n").unwrap();
        assert_eq!(s[0], LaurentPoly::monomial(rat(-3, 2), -1));
        assert_eq!(s[1], LaurentPoly::one());
        assert!(parse_scaling("scaling dim 2\nt\n").is_err());
    }
}
