//! Structure-equation notation: a document `(dE¹, dE², …, dEⁿ)` lists the
//! differential of each dual basis covector as a signed sum of wedge
//! terms.  `parse_structure_equations` turns such a document into a Lie
//! algebra via `c_ij^k = −(coefficient of e^{ij} in dE^k)`;
//! `print_structure_equations` is its normalized inverse.
//!
//! Grammar (informal):
//!
//! ```text
//! doc     := '(' expr (',' expr)* ')'
//! expr    := ['+'|'-'] product (('+'|'-') product)*
//! product := factor (factor | '/' factor)*        juxtaposition multiplies
//! factor  := number | name | basis | '(' expr ')'
//! number  := digits ['/' digits] | digits '.' digits
//! basis   := 'e' '^' '{' digit+ '}'               each digit one index
//!          | 'e' '^' '{' int (',' int)+ '}'       comma form, indices ≥ 10
//! ```
//!
//! Products of forms are wedge products, so `e^{21}` is `−e^{12}` and
//! repeated indices vanish.  Parameter names are resolved through the
//! bound-parameter map; an unbound name is an error.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::forms::KForm;
use crate::lie::LieAlgebra;
use crate::scalar::{Mode, Scalar};

#[derive(Clone, Debug, PartialEq)]
enum TokKind {
    LParen,
    RParen,
    Comma,
    Plus,
    Minus,
    Slash,
    Number(String),
    Ident(String),
    /// 1-based index tuple, unnormalized.
    Basis(Vec<usize>),
}

#[derive(Clone, Debug)]
struct Tok {
    kind: TokKind,
    line: usize,
    col: usize,
}

fn err_at(line: usize, col: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        col,
        msg: msg.into(),
    }
}

fn tokenize(text: &str) -> Result<Vec<Tok>> {
    let mut toks = Vec::new();
    let chars: Vec<char> = text.chars().collect();
    let mut i = 0;
    let mut line = 1;
    let mut col = 1;
    let n = chars.len();
    while i < n {
        let c = chars[i];
        let (tl, tc) = (line, col);
        let advance = |i: &mut usize, line: &mut usize, col: &mut usize| {
            if chars[*i] == '\n' {
                *line += 1;
                *col = 1;
            } else {
                *col += 1;
            }
            *i += 1;
        };
        match c {
            ' ' | '\t' | '\r' | '\n' => {
                advance(&mut i, &mut line, &mut col);
            }
            '(' | ')' | ',' | '+' | '-' | '/' => {
                let kind = match c {
                    '(' => TokKind::LParen,
                    ')' => TokKind::RParen,
                    ',' => TokKind::Comma,
                    '+' => TokKind::Plus,
                    '-' => TokKind::Minus,
                    _ => TokKind::Slash,
                };
                toks.push(Tok { kind, line: tl, col: tc });
                advance(&mut i, &mut line, &mut col);
            }
            '0'..='9' => {
                let mut s = String::new();
                let mut seen_dot = false;
                while i < n && (chars[i].is_ascii_digit() || (chars[i] == '.' && !seen_dot)) {
                    if chars[i] == '.' {
                        // a dot must be followed by a digit to belong here
                        if i + 1 >= n || !chars[i + 1].is_ascii_digit() {
                            break;
                        }
                        seen_dot = true;
                    }
                    s.push(chars[i]);
                    advance(&mut i, &mut line, &mut col);
                }
                toks.push(Tok {
                    kind: TokKind::Number(s),
                    line: tl,
                    col: tc,
                });
            }
            'a'..='z' | 'A'..='Z' | '_' => {
                // the sequence "e^{" always starts a basis token, even
                // mid-identifier, so "ke^{12}" is k · e^{12}
                if c == 'e' && i + 1 < n && chars[i + 1] == '^' {
                    advance(&mut i, &mut line, &mut col); // e
                    advance(&mut i, &mut line, &mut col); // ^
                    if i >= n || chars[i] != '{' {
                        return Err(err_at(line, col, "expected '{' after 'e^'"));
                    }
                    advance(&mut i, &mut line, &mut col); // {
                    let mut body = String::new();
                    while i < n && chars[i] != '}' {
                        body.push(chars[i]);
                        advance(&mut i, &mut line, &mut col);
                    }
                    if i >= n {
                        return Err(err_at(tl, tc, "unterminated basis superscript"));
                    }
                    advance(&mut i, &mut line, &mut col); // }
                    let body = body.trim();
                    let mut idx = Vec::new();
                    if body.contains(',') {
                        for part in body.split(',') {
                            let part = part.trim();
                            let v: usize = part.parse().map_err(|_| {
                                err_at(tl, tc, format!("bad index {part:?} in superscript"))
                            })?;
                            idx.push(v);
                        }
                    } else {
                        for ch in body.chars() {
                            let d = ch.to_digit(10).ok_or_else(|| {
                                err_at(tl, tc, format!("bad digit {ch:?} in superscript"))
                            })?;
                            idx.push(d as usize);
                        }
                    }
                    if idx.is_empty() {
                        return Err(err_at(tl, tc, "empty basis superscript"));
                    }
                    toks.push(Tok {
                        kind: TokKind::Basis(idx),
                        line: tl,
                        col: tc,
                    });
                } else {
                    let mut s = String::new();
                    while i < n
                        && (chars[i].is_ascii_alphanumeric() || chars[i] == '_')
                        && !(chars[i] == 'e' && i + 1 < n && chars[i + 1] == '^')
                    {
                        s.push(chars[i]);
                        advance(&mut i, &mut line, &mut col);
                    }
                    toks.push(Tok {
                        kind: TokKind::Ident(s),
                        line: tl,
                        col: tc,
                    });
                }
            }
            other => {
                return Err(err_at(tl, tc, format!("unexpected character {other:?}")));
            }
        }
    }
    Ok(toks)
}

/// A parsed value: either a scalar or a homogeneous form.
#[derive(Clone, Debug)]
enum Value {
    Num(Scalar),
    Form(KForm),
}

struct Parser<'a> {
    toks: &'a [Tok],
    pos: usize,
    dim: usize,
    mode: Mode,
    params: &'a BTreeMap<String, Scalar>,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn next(&mut self) -> Option<&Tok> {
        let t = self.toks.get(self.pos);
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn here(&self) -> (usize, usize) {
        self.toks
            .get(self.pos)
            .or_else(|| self.toks.last())
            .map(|t| (t.line, t.col))
            .unwrap_or((1, 1))
    }

    fn starts_factor(&self) -> bool {
        matches!(
            self.peek().map(|t| &t.kind),
            Some(TokKind::Number(_))
                | Some(TokKind::Ident(_))
                | Some(TokKind::Basis(_))
                | Some(TokKind::LParen)
        )
    }

    fn expr(&mut self) -> Result<Value> {
        let mut negate = false;
        if let Some(t) = self.peek() {
            match t.kind {
                TokKind::Plus => {
                    self.pos += 1;
                }
                TokKind::Minus => {
                    negate = true;
                    self.pos += 1;
                }
                _ => {}
            }
        }
        let mut acc = self.product()?;
        if negate {
            acc = neg_value(acc);
        }
        loop {
            let (line, col) = self.here();
            let op = match self.peek().map(|t| &t.kind) {
                Some(TokKind::Plus) => 1,
                Some(TokKind::Minus) => -1,
                _ => break,
            };
            self.pos += 1;
            let mut rhs = self.product()?;
            if op < 0 {
                rhs = neg_value(rhs);
            }
            acc = add_values(acc, rhs, line, col)?;
        }
        Ok(acc)
    }

    fn product(&mut self) -> Result<Value> {
        let mut acc = self.factor()?;
        loop {
            if matches!(self.peek().map(|t| &t.kind), Some(TokKind::Slash)) {
                let (line, col) = self.here();
                self.pos += 1;
                let rhs = self.factor()?;
                acc = match (acc, rhs) {
                    (Value::Num(a), Value::Num(b)) => {
                        if b.is_zero() {
                            return Err(err_at(line, col, "division by zero"));
                        }
                        Value::Num(&a / &b)
                    }
                    _ => return Err(err_at(line, col, "'/' needs scalar operands")),
                };
            } else if self.starts_factor() {
                let (line, col) = self.here();
                let rhs = self.factor()?;
                acc = mul_values(acc, rhs, line, col)?;
            } else {
                break;
            }
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Value> {
        let (line, col) = self.here();
        let Some(tok) = self.next() else {
            return Err(err_at(line, col, "unexpected end of input"));
        };
        match tok.kind.clone() {
            TokKind::Number(s) => {
                let v = Scalar::parse(&s, self.mode)
                    .map_err(|e| err_at(line, col, format!("{e}")))?;
                Ok(Value::Num(v))
            }
            TokKind::Ident(name) => match self.params.get(&name) {
                Some(v) => {
                    let v = v
                        .to_mode(self.mode)
                        .map_err(|e| err_at(line, col, format!("{e}")))?;
                    Ok(Value::Num(v))
                }
                None => Err(Error::BadParameter(format!(
                    "unbound parameter {name:?} at line {line}, column {col}"
                ))),
            },
            TokKind::Basis(idx) => {
                for &i in &idx {
                    if i == 0 || i > self.dim {
                        return Err(err_at(
                            line,
                            col,
                            format!("index {i} out of range for dimension {}", self.dim),
                        ));
                    }
                }
                let zero_based: Vec<usize> = idx.iter().map(|&i| i - 1).collect();
                let form = KForm::from_terms(
                    zero_based.len(),
                    self.dim,
                    self.mode,
                    &[(zero_based, Scalar::one(self.mode))],
                )
                .map_err(|e| err_at(line, col, format!("{e}")))?;
                Ok(Value::Form(form))
            }
            TokKind::LParen => {
                let v = self.expr()?;
                let (l2, c2) = self.here();
                match self.next().map(|t| &t.kind) {
                    Some(TokKind::RParen) => Ok(v),
                    _ => Err(err_at(l2, c2, "expected ')'")),
                }
            }
            other => Err(err_at(line, col, format!("unexpected token {other:?}"))),
        }
    }
}

fn neg_value(v: Value) -> Value {
    match v {
        Value::Num(s) => Value::Num(-&s),
        Value::Form(f) => Value::Form(f.neg()),
    }
}

fn add_values(a: Value, b: Value, line: usize, col: usize) -> Result<Value> {
    match (a, b) {
        (Value::Num(x), Value::Num(y)) => Ok(Value::Num(&x + &y)),
        (Value::Num(x), Value::Form(f)) | (Value::Form(f), Value::Num(x)) => {
            if x.is_zero() {
                Ok(Value::Form(f))
            } else {
                Err(err_at(line, col, "cannot add a nonzero scalar and a form"))
            }
        }
        (Value::Form(f), Value::Form(g)) => {
            if f.degree() != g.degree() {
                // adding a zero form of any degree is harmless
                if f.is_zero() {
                    return Ok(Value::Form(g));
                }
                if g.is_zero() {
                    return Ok(Value::Form(f));
                }
                return Err(err_at(
                    line,
                    col,
                    format!(
                        "cannot add forms of degree {} and {}",
                        f.degree(),
                        g.degree()
                    ),
                ));
            }
            Ok(Value::Form(f.add(&g)))
        }
    }
}

fn mul_values(a: Value, b: Value, _line: usize, _col: usize) -> Result<Value> {
    Ok(match (a, b) {
        (Value::Num(x), Value::Num(y)) => Value::Num(&x * &y),
        (Value::Num(x), Value::Form(f)) | (Value::Form(f), Value::Num(x)) => {
            Value::Form(f.scale(&x))
        }
        (Value::Form(f), Value::Form(g)) => Value::Form(f.wedge(&g)),
    })
}

/// Split the top-level comma-separated expressions of a document.
fn split_top_level(toks: &[Tok]) -> Result<Vec<&[Tok]>> {
    let Some(first) = toks.first() else {
        return Err(err_at(1, 1, "empty document"));
    };
    if first.kind != TokKind::LParen {
        return Err(err_at(first.line, first.col, "document must start with '('"));
    }
    let Some(last) = toks.last() else {
        unreachable!()
    };
    if last.kind != TokKind::RParen {
        return Err(err_at(last.line, last.col, "document must end with ')'"));
    }
    let inner = &toks[1..toks.len() - 1];
    let mut pieces = Vec::new();
    let mut depth = 0usize;
    let mut start = 0usize;
    for (i, t) in inner.iter().enumerate() {
        match t.kind {
            TokKind::LParen => depth += 1,
            TokKind::RParen => {
                if depth == 0 {
                    return Err(err_at(t.line, t.col, "unbalanced ')'"));
                }
                depth -= 1;
            }
            TokKind::Comma if depth == 0 => {
                pieces.push(&inner[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    if depth != 0 {
        return Err(err_at(last.line, last.col, "unbalanced '('"));
    }
    pieces.push(&inner[start..]);
    Ok(pieces)
}

/// Parse a structure-equation document into a Lie algebra.  The number of
/// top-level expressions fixes the dimension; expression `k` must evaluate
/// to a 2-form (or zero) and contributes `c_ij^k = −(coefficient of
/// e^{ij})`.  The Jacobi identity is *not* enforced here — run
/// `check_jacobi` on the result.
pub fn parse_structure_equations(
    text: &str,
    params: &BTreeMap<String, Scalar>,
    mode: Mode,
) -> Result<LieAlgebra> {
    let toks = tokenize(text)?;
    let pieces = split_top_level(&toks)?;
    let dim = pieces.len();
    let mut entries: Vec<(usize, usize, usize, Scalar)> = Vec::new();
    for (k, piece) in pieces.iter().enumerate() {
        if piece.is_empty() {
            return Err(err_at(1, 1, format!("empty expression for entry {}", k + 1)));
        }
        let mut p = Parser {
            toks: piece,
            pos: 0,
            dim,
            mode,
            params,
        };
        let v = p.expr()?;
        if p.pos != piece.len() {
            let t = &piece[p.pos];
            return Err(err_at(t.line, t.col, "trailing input after expression"));
        }
        let form = match v {
            Value::Num(s) => {
                if s.is_zero() {
                    continue;
                }
                let t = &piece[0];
                return Err(err_at(
                    t.line,
                    t.col,
                    format!("entry {} is a nonzero scalar, not a 2-form", k + 1),
                ));
            }
            Value::Form(f) => f,
        };
        if form.is_zero() {
            continue;
        }
        if form.degree() != 2 {
            let t = &piece[0];
            return Err(err_at(
                t.line,
                t.col,
                format!(
                    "entry {} has degree {}, expected 2",
                    k + 1,
                    form.degree()
                ),
            ));
        }
        for (idx, c) in form.terms() {
            // dE^k = −Σ c_ij^k e^{ij}
            entries.push((idx[0], idx[1], k, -c));
        }
    }
    LieAlgebra::new(dim, None, mode, &entries)
}

/// Print the structure equations of an algebra as a normalized document:
/// entry `k` is the differential of the `k`-th dual covector with indices
/// in increasing order.
pub fn print_structure_equations(l: &LieAlgebra) -> String {
    let n = l.dim();
    let mode = l.mode();
    let mut parts = Vec::with_capacity(n);
    for k in 0..n {
        let mut terms: Vec<(Vec<usize>, Scalar)> = Vec::new();
        for (i, j, kk, c) in l.iter_constants() {
            if kk == k {
                terms.push((vec![i, j], -c));
            }
        }
        let form = KForm::from_terms(2, n, mode, &terms).expect("constants index the basis");
        parts.push(form.pretty());
    }
    format!("({})", parts.join(", "))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Scalar;

    fn no_params() -> BTreeMap<String, Scalar> {
        BTreeMap::new()
    }

    fn with_k(v: i64) -> BTreeMap<String, Scalar> {
        let mut m = BTreeMap::new();
        m.insert("k".to_string(), Scalar::from_int(v, Mode::Exact));
        m
    }

    fn s(v: i64) -> Scalar {
        Scalar::from_int(v, Mode::Exact)
    }

    #[test]
    fn parses_the_affine_document() {
        let l = parse_structure_equations("(0, e^{21})", &no_params(), Mode::Exact).unwrap();
        assert_eq!(l.dim(), 2);
        // e^{21} = −e^{12}, so dE² = −e^{12} and [e1, e2] = e2
        assert_eq!(l.bracket_basis(0, 1), vec![s(0), s(1)]);
        assert!(l.check_jacobi().ok);
    }

    #[test]
    fn parses_parameters_and_rationals() {
        let mut params = BTreeMap::new();
        params.insert("a".to_string(), s(3));
        let l = parse_structure_equations(
            "(0, -a e^{12} - a e^{34}, -1/2 a e^{13}, -1/2 a e^{14})",
            &params,
            Mode::Exact,
        )
        .unwrap();
        assert_eq!(l.bracket_basis(0, 1), vec![s(0), s(3), s(0), s(0)]);
        assert_eq!(
            l.bracket_basis(0, 2),
            vec![s(0), s(0), Scalar::ratio(3, 2, Mode::Exact), s(0)]
        );
        assert!(l.check_jacobi().ok);
    }

    #[test]
    fn grouped_products_distribute() {
        // k (e^{2}+2 e^{4}) e^{6} = k e^{26} + 2k e^{46}
        let l = parse_structure_equations(
            "(0, 0, 0, 0, k (e^{2} + 2 e^{4}) e^{6}, 0)",
            &with_k(3),
            Mode::Exact,
        )
        .unwrap();
        let c = l.bracket_basis(1, 5); // [e2, e6]
        assert_eq!(c[4], s(-3)); // c_26^5 = −(coefficient 3)
        let c = l.bracket_basis(3, 5);
        assert_eq!(c[4], s(-6));
    }

    #[test]
    fn juxtaposed_parameter_and_basis_without_space() {
        let l =
            parse_structure_equations("(0, 2ke^{12})", &with_k(5), Mode::Exact).unwrap();
        assert_eq!(l.bracket_basis(0, 1)[1], s(-10));
    }

    #[test]
    fn reversed_and_repeated_indices_normalize() {
        let l = parse_structure_equations("(e^{21} + e^{12}, e^{11})", &no_params(), Mode::Exact)
            .unwrap();
        // e^{21} + e^{12} = 0 and e^{11} = 0
        assert!(l.iter_constants().next().is_none());
    }

    #[test]
    fn comma_form_reaches_high_indices() {
        let mut doc = vec!["0".to_string(); 12];
        doc[11] = "e^{1,11}".to_string();
        let text = format!("({})", doc.join(", "));
        let l = parse_structure_equations(&text, &no_params(), Mode::Exact).unwrap();
        assert_eq!(l.bracket_basis(0, 10)[11], s(-1));
        // reprint uses the comma form, and the roundtrip is exact
        let printed = print_structure_equations(&l);
        assert!(printed.contains("e^{1,11}"), "{printed}");
        let l2 = parse_structure_equations(&printed, &no_params(), Mode::Exact).unwrap();
        assert_eq!(
            l.iter_constants().collect::<Vec<_>>(),
            l2.iter_constants().collect::<Vec<_>>()
        );
    }

    #[test]
    fn print_then_parse_is_identity() {
        // the 5-dim Heisenberg constants: [e1,e2] = [e3,e4] = 2 e5
        let l = LieAlgebra::new_validated(
            5,
            None,
            Mode::Exact,
            &[(0, 1, 4, s(2)), (2, 3, 4, s(2))],
        )
        .unwrap();
        let doc = print_structure_equations(&l);
        assert_eq!(doc, "(0, 0, 0, 0, -2 e^{12} - 2 e^{34})");
        let back = parse_structure_equations(&doc, &no_params(), Mode::Exact).unwrap();
        assert_eq!(
            l.iter_constants().collect::<Vec<_>>(),
            back.iter_constants().collect::<Vec<_>>()
        );
    }

    #[test]
    fn float_documents_roundtrip() {
        let l = LieAlgebra::new(
            3,
            None,
            Mode::Float,
            &[
                (0, 1, 2, Scalar::from_f64(0.125)),
                (0, 2, 1, Scalar::from_f64(-2.5)),
            ],
        )
        .unwrap();
        let doc = print_structure_equations(&l);
        let back = parse_structure_equations(&doc, &no_params(), Mode::Float).unwrap();
        assert_eq!(
            l.iter_constants().collect::<Vec<_>>(),
            back.iter_constants().collect::<Vec<_>>()
        );
    }

    #[test]
    fn error_positions_are_reported() {
        let e = parse_structure_equations("(0,\n e^{13})", &no_params(), Mode::Exact)
            .unwrap_err();
        match e {
            Error::Parse { line, col, msg } => {
                assert_eq!(line, 2);
                assert_eq!(col, 2);
                assert!(msg.contains("out of range"), "{msg}");
            }
            other => panic!("expected a parse error, got {other:?}"),
        }
        let e = parse_structure_equations("(0, q e^{12})", &no_params(), Mode::Exact)
            .unwrap_err();
        assert!(matches!(e, Error::BadParameter(_)));
        let e = parse_structure_equations("(0, e^{12) }", &no_params(), Mode::Exact)
            .unwrap_err();
        assert!(matches!(e, Error::Parse { .. }));
    }

    #[test]
    fn scalar_entries_must_vanish() {
        let e = parse_structure_equations("(0, 3)", &no_params(), Mode::Exact).unwrap_err();
        match e {
            Error::Parse { msg, .. } => assert!(msg.contains("not a 2-form"), "{msg}"),
            other => panic!("unexpected {other:?}"),
        }
        // a wedge-degree mismatch is also rejected
        let e =
            parse_structure_equations("(0, e^{123}, 0)", &no_params(), Mode::Exact).unwrap_err();
        match e {
            Error::Parse { msg, .. } => assert!(msg.contains("degree"), "{msg}"),
            other => panic!("unexpected {other:?}"),
        }
    }
}
