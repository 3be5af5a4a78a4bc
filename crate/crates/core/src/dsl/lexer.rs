//! Tokenizer for the `.lie` text format and the small expression languages
//! (form expressions, scaling entries) built on the same tokens.

use std::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Span {
    pub offset: usize,
    pub len: usize,
    pub line: usize,
    pub col: usize,
}

impl Span {
    pub fn point(offset: usize, line: usize, col: usize) -> Self {
        Span {
            offset,
            len: 0,
            line,
            col,
        }
    }
}

impl fmt::Display for Span {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.line, self.col)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TokenKind {
    Ident(String),
    Int(String),
    LBracket,
    RBracket,
    Comma,
    Equals,
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    Newline,
    Eof,
}

impl TokenKind {
    pub fn describe(&self) -> String {
        match self {
            TokenKind::Ident(s) => format!("identifier `{s}`"),
            TokenKind::Int(s) => format!("integer `{s}`"),
            TokenKind::LBracket => "`[`".into(),
            TokenKind::RBracket => "`]`".into(),
            TokenKind::Comma => "`,`".into(),
            TokenKind::Equals => "`=`".into(),
            TokenKind::Plus => "`+`".into(),
            TokenKind::Minus => "`-`".into(),
            TokenKind::Star => "`*`".into(),
            TokenKind::Slash => "`/`".into(),
            TokenKind::Caret => "`^`".into(),
            TokenKind::Newline => "end of line".into(),
            TokenKind::Eof => "end of input".into(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Token {
    pub kind: TokenKind,
    pub span: Span,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LexError {
    pub message: String,
    pub span: Span,
}

/// Tokenize; `#` starts a comment running to end of line. Newlines are
/// significant (they separate statements); runs collapse into one token.
pub fn tokenize(text: &str) -> Result<Vec<Token>, LexError> {
    let bytes = text.as_bytes();
    let mut tokens = Vec::new();
    let mut i = 0;
    let mut line = 1;
    let mut col = 1;
    let mut pending_newline = false;
    while i < bytes.len() {
        let c = bytes[i] as char;
        let span1 = Span {
            offset: i,
            len: 1,
            line,
            col,
        };
        match c {
            '\n' => {
                pending_newline = true;
                i += 1;
                line += 1;
                col = 1;
                continue;
            }
            ' ' | '\t' | '\r' => {
                i += 1;
                col += 1;
                continue;
            }
            '#' => {
                while i < bytes.len() && bytes[i] != b'\n' {
                    i += 1;
                }
                continue;
            }
            _ => {}
        }
        if pending_newline && !tokens.is_empty() {
            tokens.push(Token {
                kind: TokenKind::Newline,
                span: Span::point(i, line, col),
            });
        }
        pending_newline = false;
        let kind = match c {
            '[' => Some(TokenKind::LBracket),
            ']' => Some(TokenKind::RBracket),
            ',' => Some(TokenKind::Comma),
            '=' => Some(TokenKind::Equals),
            '+' => Some(TokenKind::Plus),
            '-' => Some(TokenKind::Minus),
            '*' => Some(TokenKind::Star),
            '/' => Some(TokenKind::Slash),
            '^' => Some(TokenKind::Caret),
            _ => None,
        };
        if let Some(kind) = kind {
            tokens.push(Token { kind, span: span1 });
            i += 1;
            col += 1;
            continue;
        }
        if c.is_ascii_digit() {
            let start = i;
            let start_col = col;
            while i < bytes.len() && (bytes[i] as char).is_ascii_digit() {
                i += 1;
                col += 1;
            }
            tokens.push(Token {
                kind: TokenKind::Int(text[start..i].to_string()),
                span: Span {
                    offset: start,
                    len: i - start,
                    line,
                    col: start_col,
                },
            });
            continue;
        }
        if c.is_ascii_alphabetic() || c == '_' {
            let start = i;
            let start_col = col;
            while i < bytes.len() {
                let ch = bytes[i] as char;
                if ch.is_ascii_alphanumeric() || ch == '_' || ch == '.' {
                    i += 1;
                    col += 1;
                } else {
                    break;
                }
            }
            tokens.push(Token {
                kind: TokenKind::Ident(text[start..i].to_string()),
                span: Span {
                    offset: start,
                    len: i - start,
                    line,
                    col: start_col,
                },
            });
            continue;
        }
        return Err(LexError {
            message: format!("unexpected character `{c}` (ASCII identifiers only)"),
            span: span1,
        });
    }
    tokens.push(Token {
        kind: TokenKind::Eof,
        span: Span::point(bytes.len(), line, col),
    });
    Ok(tokens)
}
