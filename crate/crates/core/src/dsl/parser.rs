use std::collections::HashMap;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::Zero;

use super::lexer::{tokenize, Tok, Token};
use super::{
    attach_excerpts, AlgebraDocument, BracketLine, Body, Diagnostic, Diagnostics, DifferentialLine,
    GeneratorDecl, Span,
};
use crate::algebra::{Element, FreeAlgebra, Generator, Scalar};
use crate::cdga::Cdga;

/// Nesting limit for parentheses and unary operators.
const MAX_DEPTH: usize = 128;
/// Largest exponent accepted after `^`.
const MAX_EXPONENT: u32 = 64;
/// Largest generator degree, and largest monomial degree an expression may produce.
const MAX_DEGREE: u32 = 1024;
/// Largest number of terms an intermediate expression may hold.
const MAX_TERMS: usize = 100_000;

#[derive(Debug, Clone)]
enum Expr {
    Number(Scalar, Span),
    Var(String, Span),
    Neg(Box<Expr>, Span),
    Add(Box<Expr>, Box<Expr>, Span),
    Sub(Box<Expr>, Box<Expr>, Span),
    Mul(Box<Expr>, Box<Expr>, Span),
    Pow(Box<Expr>, u32, Span),
}

impl Expr {
    fn span(&self) -> Span {
        match self {
            Expr::Number(_, s)
            | Expr::Var(_, s)
            | Expr::Neg(_, s)
            | Expr::Add(_, _, s)
            | Expr::Sub(_, _, s)
            | Expr::Mul(_, _, s)
            | Expr::Pow(_, _, s) => *s,
        }
    }
}

struct RawDecl {
    name: String,
    name_span: Span,
    degree: Option<u32>,
}

enum RawStatement {
    Differential {
        name: String,
        name_span: Span,
        expr: Expr,
        span: Span,
    },
    Bracket {
        left: (String, Span),
        right: (String, Span),
        expr: Expr,
        span: Span,
    },
}

struct Parser {
    tokens: Vec<Token>,
    pos: usize,
    depth: usize,
    diags: Vec<Diagnostic>,
}

/// Marker for an error already recorded as a diagnostic.
struct Reported;

type PResult<T> = Result<T, Reported>;

impl Parser {
    fn new(tokens: Vec<Token>, diags: Vec<Diagnostic>) -> Self {
        Self {
            tokens,
            pos: 0,
            depth: 0,
            diags,
        }
    }

    fn peek(&self) -> &Token {
        &self.tokens[self.pos]
    }

    fn peek_at(&self, offset: usize) -> &Tok {
        let i = (self.pos + offset).min(self.tokens.len() - 1);
        &self.tokens[i].tok
    }

    fn bump(&mut self) -> Token {
        let t = self.tokens[self.pos].clone();
        if self.pos + 1 < self.tokens.len() {
            self.pos += 1;
        }
        t
    }

    fn error<T>(&mut self, message: impl Into<String>, span: Span) -> PResult<T> {
        self.diags.push(Diagnostic::error(message, span));
        Err(Reported)
    }

    fn unexpected<T>(&mut self, expected: &str) -> PResult<T> {
        let t = self.peek().clone();
        self.error(format!("expected {expected}, found {}", t.tok.describe()), t.span)
    }

    fn expect(&mut self, tok: Tok, expected: &str) -> PResult<Span> {
        if self.peek().tok == tok {
            Ok(self.bump().span)
        } else {
            self.unexpected(expected)
        }
    }

    fn expect_keyword(&mut self, word: &str) -> PResult<Span> {
        match &self.peek().tok {
            Tok::Ident(s) if s == word => Ok(self.bump().span),
            _ => self.unexpected(&format!("`{word}`")),
        }
    }

    fn ident(&mut self, expected: &str) -> PResult<(String, Span)> {
        match &self.peek().tok {
            Tok::Ident(s) => {
                let s = s.clone();
                Ok((s, self.bump().span))
            }
            _ => self.unexpected(expected),
        }
    }

    fn at_statement_start(&self) -> bool {
        matches!(self.peek_at(0), Tok::LBracket | Tok::RBrace | Tok::Eof)
            || (matches!(self.peek_at(0), Tok::Ident(s) if s == "d")
                && matches!(self.peek_at(1), Tok::Ident(_))
                && matches!(self.peek_at(2), Tok::Eq))
    }

    fn synchronize(&mut self) {
        if self.peek().tok != Tok::Eof {
            self.bump();
        }
        while !self.at_statement_start() {
            self.bump();
        }
    }

    fn document(&mut self) -> PResult<(String, Span, Vec<RawDecl>, Vec<RawStatement>)> {
        self.expect_keyword("algebra")?;
        let (name, name_span) = self.ident("an algebra name")?;
        self.expect(Tok::LBrace, "`{`")?;
        self.expect_keyword("generators")?;
        self.expect(Tok::Colon, "`:` after `generators`")?;
        let decls = self.declarations();
        let mut statements = Vec::new();
        loop {
            match self.peek().tok {
                Tok::RBrace => {
                    self.bump();
                    break;
                }
                Tok::Eof => {
                    let _ = self.unexpected::<()>("`}`");
                    break;
                }
                _ => match self.statement() {
                    Ok(s) => statements.push(s),
                    Err(Reported) => self.synchronize(),
                },
            }
        }
        if self.peek().tok != Tok::Eof {
            let _ = self.unexpected::<()>("end of input after `}`");
        }
        Ok((name, name_span, decls, statements))
    }

    fn declarations(&mut self) -> Vec<RawDecl> {
        let mut decls = Vec::new();
        if !(matches!(self.peek_at(0), Tok::Ident(_)) && *self.peek_at(1) == Tok::Colon) {
            return decls;
        }
        loop {
            match self.declaration() {
                Ok(d) => decls.push(d),
                Err(Reported) => {
                    // Skip to the next comma or statement.
                    while !matches!(self.peek_at(0), Tok::Comma) && !self.at_statement_start() {
                        self.bump();
                    }
                }
            }
            if self.peek().tok == Tok::Comma {
                self.bump();
            } else {
                break;
            }
        }
        decls
    }

    fn declaration(&mut self) -> PResult<RawDecl> {
        let (name, name_span) = self.ident("a generator name")?;
        self.expect(Tok::Colon, "`:` and a degree")?;
        let t = self.peek().clone();
        let Tok::Int(text) = &t.tok else {
            return self.unexpected("a generator degree");
        };
        self.bump();
        let degree = match text.parse::<u32>() {
            Ok(0) => {
                self.diags.push(Diagnostic::error(
                    format!("generator `{name}` must have positive degree"),
                    t.span,
                ));
                None
            }
            Ok(d) if d <= MAX_DEGREE => Some(d),
            _ => {
                self.diags.push(Diagnostic::error(
                    format!("degree of `{name}` exceeds {MAX_DEGREE}"),
                    t.span,
                ));
                None
            }
        };
        Ok(RawDecl {
            name,
            name_span,
            degree,
        })
    }

    fn statement(&mut self) -> PResult<RawStatement> {
        let start = self.peek().span;
        match &self.peek().tok {
            Tok::Ident(s) if s == "d" => {
                self.bump();
                let (name, name_span) = self.ident("a generator name after `d`")?;
                self.expect(Tok::Eq, "`=`")?;
                let expr = self.expr()?;
                let span = start.to(expr.span());
                Ok(RawStatement::Differential {
                    name,
                    name_span,
                    expr,
                    span,
                })
            }
            Tok::LBracket => {
                self.bump();
                let left = self.ident("a generator name")?;
                self.expect(Tok::Comma, "`,`")?;
                let right = self.ident("a generator name")?;
                self.expect(Tok::RBracket, "`]`")?;
                self.expect(Tok::Eq, "`=`")?;
                let expr = self.expr()?;
                let span = start.to(expr.span());
                Ok(RawStatement::Bracket {
                    left,
                    right,
                    expr,
                    span,
                })
            }
            _ => self.unexpected("`d <generator> = <expression>`, a bracket `[a, b] = ...`, or `}`"),
        }
    }

    fn enter(&mut self) -> PResult<()> {
        self.depth += 1;
        if self.depth > MAX_DEPTH {
            let span = self.peek().span;
            return self.error(format!("expression nested deeper than {MAX_DEPTH} levels"), span);
        }
        Ok(())
    }

    fn expr(&mut self) -> PResult<Expr> {
        self.enter()?;
        let mut lhs = self.term()?;
        loop {
            let op = self.peek().tok.clone();
            if !matches!(op, Tok::Plus | Tok::Minus) {
                break;
            }
            self.bump();
            let rhs = self.term()?;
            let span = lhs.span().to(rhs.span());
            lhs = if op == Tok::Plus {
                Expr::Add(Box::new(lhs), Box::new(rhs), span)
            } else {
                Expr::Sub(Box::new(lhs), Box::new(rhs), span)
            };
        }
        self.depth -= 1;
        Ok(lhs)
    }

    fn term(&mut self) -> PResult<Expr> {
        let mut lhs = self.unary()?;
        while self.peek().tok == Tok::Star {
            self.bump();
            let rhs = self.unary()?;
            let span = lhs.span().to(rhs.span());
            lhs = Expr::Mul(Box::new(lhs), Box::new(rhs), span);
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> PResult<Expr> {
        match self.peek().tok {
            Tok::Minus | Tok::Plus => {
                let op = self.bump();
                self.enter()?;
                let inner = self.unary()?;
                self.depth -= 1;
                let span = op.span.to(inner.span());
                Ok(if op.tok == Tok::Minus {
                    Expr::Neg(Box::new(inner), span)
                } else {
                    inner
                })
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> PResult<Expr> {
        let base = self.primary()?;
        if self.peek().tok != Tok::Caret {
            return Ok(base);
        }
        self.bump();
        let t = self.peek().clone();
        let Tok::Int(text) = &t.tok else {
            return self.unexpected("a natural exponent after `^`");
        };
        self.bump();
        match text.parse::<u32>() {
            Ok(n) if n <= MAX_EXPONENT => Ok(Expr::Pow(Box::new(base.clone()), n, base.span().to(t.span))),
            _ => self.error(format!("exponent exceeds {MAX_EXPONENT}"), t.span),
        }
    }

    fn primary(&mut self) -> PResult<Expr> {
        let t = self.peek().clone();
        match &t.tok {
            Tok::Int(num) => {
                self.bump();
                let numerator: BigInt = num.parse().expect("lexer yields digits");
                if self.peek().tok != Tok::Slash {
                    return Ok(Expr::Number(Scalar::from_integer(numerator), t.span));
                }
                self.bump();
                let d = self.peek().clone();
                let Tok::Int(den) = &d.tok else {
                    return self.unexpected("a denominator after `/`");
                };
                self.bump();
                let denominator: BigInt = den.parse().expect("lexer yields digits");
                if denominator.is_zero() {
                    return self.error("division by zero", d.span);
                }
                Ok(Expr::Number(Scalar::new(numerator, denominator), t.span.to(d.span)))
            }
            Tok::Ident(name) => {
                self.bump();
                Ok(Expr::Var(name.clone(), t.span))
            }
            Tok::LParen => {
                self.bump();
                let inner = self.expr()?;
                let close = self.expect(Tok::RParen, "`)`")?;
                Ok(match inner {
                    Expr::Number(c, s) => Expr::Number(c, s.to(close)),
                    other => other,
                })
            }
            _ => self.unexpected("a number, a generator or `(`"),
        }
    }
}

fn eval(expr: &Expr, algebra: &Arc<FreeAlgebra>, diags: &mut Vec<Diagnostic>) -> Option<Element> {
    let result = match expr {
        Expr::Number(c, _) => Element::constant(algebra, c.clone()),
        Expr::Var(name, span) => match algebra.index_of(name) {
            Ok(i) => Element::generator(algebra, i),
            Err(_) => {
                diags.push(Diagnostic::error(format!("unknown generator `{name}`"), *span));
                return None;
            }
        },
        Expr::Neg(inner, _) => -eval(inner, algebra, diags)?,
        Expr::Add(a, b, _) | Expr::Sub(a, b, _) | Expr::Mul(a, b, _) => {
            let (a, b) = (eval(a, algebra, diags), eval(b, algebra, diags));
            let (a, b) = (a?, b?);
            match expr {
                Expr::Add(..) => &a + &b,
                Expr::Sub(..) => &a - &b,
                _ => {
                    if a.num_terms().saturating_mul(b.num_terms()) > MAX_TERMS
                        || a.max_degree().unwrap_or(0) + b.max_degree().unwrap_or(0) > MAX_DEGREE
                    {
                        diags.push(Diagnostic::error("expression too large", expr.span()));
                        return None;
                    }
                    &a * &b
                }
            }
        }
        Expr::Pow(base, n, span) => {
            let base = eval(base, algebra, diags)?;
            let mut out = Element::one(algebra);
            for _ in 0..*n {
                if out.num_terms().saturating_mul(base.num_terms()) > MAX_TERMS
                    || out.max_degree().unwrap_or(0) + base.max_degree().unwrap_or(0) > MAX_DEGREE
                {
                    diags.push(Diagnostic::error("expression too large", *span));
                    return None;
                }
                out = &out * &base;
            }
            out
        }
    };
    if result.num_terms() > MAX_TERMS {
        diags.push(Diagnostic::error("expression too large", expr.span()));
        return None;
    }
    Some(result)
}

fn homogeneity_diagnostic(e: &Element, expected: u32, what: &str, span: Span) -> Option<Diagnostic> {
    if e.is_homogeneous_of(expected) {
        return None;
    }
    let message = match e.degree() {
        Some(found) => format!("degree mismatch: {what} must have degree {expected}, found degree {found}"),
        None => format!("degree mismatch: {what} is not homogeneous (expected degree {expected})"),
    };
    Some(Diagnostic::error(message, span))
}

fn finish<T>(src: &str, mut diags: Vec<Diagnostic>, value: Option<T>) -> Result<T, Diagnostics> {
    match value {
        Some(v) if diags.is_empty() => Ok(v),
        _ => {
            diags.sort_by_key(|d| (d.line, d.column));
            attach_excerpts(src, &mut diags);
            Err(Diagnostics(diags))
        }
    }
}

/// Parses an algebra definition, reporting every problem with its position.
///
/// The result is checked for names and degrees but not yet for `d∘d = 0`;
/// see [`AlgebraDocument::to_cdga`].
pub fn parse_algebra(src: &str) -> Result<AlgebraDocument, Diagnostics> {
    let mut diags = Vec::new();
    let tokens = tokenize(src, &mut diags);
    let mut p = Parser::new(tokens, diags);
    let parsed = p.document();
    let mut diags = p.diags;
    let Ok((name, _, decls, statements)) = parsed else {
        return finish(src, diags, None);
    };

    let mut seen: HashMap<String, Span> = HashMap::new();
    let mut generators = Vec::new();
    for d in decls {
        if let Some(first) = seen.get(&d.name) {
            diags.push(Diagnostic::error(
                format!(
                    "duplicate generator `{}` (first declared at {}:{})",
                    d.name, first.line, first.column
                ),
                d.name_span,
            ));
            continue;
        }
        seen.insert(d.name.clone(), d.name_span);
        if let Some(degree) = d.degree {
            generators.push(GeneratorDecl {
                name: d.name,
                degree,
                span: d.name_span,
            });
        }
    }
    let algebra = FreeAlgebra::new(
        generators
            .iter()
            .map(|g| Generator::new(g.name.clone(), g.degree))
            .collect(),
    )
    .expect("names checked unique, degrees positive");

    let mut differential_lines = Vec::new();
    let mut bracket_lines = Vec::new();
    let mut first_kind: Option<(bool, Span)> = None;
    let mut defined: HashMap<usize, Span> = HashMap::new();
    let mut bracketed: HashMap<(usize, usize), Span> = HashMap::new();
    let mut reported_bracket_degrees = false;

    for statement in statements {
        let (is_bracket, span) = match &statement {
            RawStatement::Differential { span, .. } => (false, *span),
            RawStatement::Bracket { span, .. } => (true, *span),
        };
        match first_kind {
            None => first_kind = Some((is_bracket, span)),
            Some((kind, first)) if kind != is_bracket => {
                diags.push(Diagnostic::error(
                    format!(
                        "cannot mix `d` lines and bracket lines (first {} line at {}:{})",
                        if kind { "bracket" } else { "`d`" },
                        first.line,
                        first.column
                    ),
                    span,
                ));
                continue;
            }
            _ => {}
        }
        match statement {
            RawStatement::Differential {
                name,
                name_span,
                expr,
                span,
            } => {
                let index = algebra.index_of(&name).ok();
                if index.is_none() && !seen.contains_key(&name) {
                    diags.push(Diagnostic::error(format!("unknown generator `{name}`"), name_span));
                }
                let value = eval(&expr, &algebra, &mut diags);
                let (Some(g), Some(value)) = (index, value) else {
                    continue;
                };
                if let Some(first) = defined.get(&g) {
                    diags.push(Diagnostic::error(
                        format!(
                            "`d {name}` already defined at {}:{}",
                            first.line, first.column
                        ),
                        span,
                    ));
                    continue;
                }
                defined.insert(g, span);
                let expected = algebra.generators()[g].degree + 1;
                let what = format!("d {name}");
                if let Some(d) = homogeneity_diagnostic(&value, expected, &what, expr.span()) {
                    diags.push(d);
                    continue;
                }
                differential_lines.push(DifferentialLine {
                    generator: g,
                    value,
                    span,
                });
            }
            RawStatement::Bracket {
                left,
                right,
                expr,
                span,
            } => {
                let mut lookup = |(name, span): &(String, Span)| match algebra.index_of(name) {
                    Ok(i) => Some(i),
                    Err(_) => {
                        if !seen.contains_key(name) {
                            diags.push(Diagnostic::error(format!("unknown generator `{name}`"), *span));
                        }
                        None
                    }
                };
                let (l, r) = (lookup(&left), lookup(&right));
                let value = eval(&expr, &algebra, &mut diags);
                if !reported_bracket_degrees && algebra.generators().iter().any(|g| g.degree != 1) {
                    reported_bracket_degrees = true;
                    diags.push(Diagnostic::error(
                        "bracket lines require every generator to have degree 1",
                        span,
                    ));
                }
                let (Some(l), Some(r), Some(value)) = (l, r, value) else {
                    continue;
                };
                if let Some(d) = homogeneity_diagnostic(&value, 1, "a bracket", expr.span()) {
                    diags.push(d);
                    continue;
                }
                if l == r {
                    if !value.is_zero() {
                        diags.push(Diagnostic::error("a generator's bracket with itself must be 0", span));
                    }
                    continue;
                }
                let key = (l.min(r), l.max(r));
                if let Some(first) = bracketed.get(&key) {
                    diags.push(Diagnostic::error(
                        format!("bracket already defined at {}:{}", first.line, first.column),
                        span,
                    ));
                    continue;
                }
                bracketed.insert(key, span);
                bracket_lines.push(BracketLine {
                    left: l,
                    right: r,
                    value,
                    span,
                });
            }
        }
    }

    let body = match first_kind {
        Some((true, _)) => Body::Brackets(bracket_lines),
        _ => Body::Differential(differential_lines),
    };
    finish(
        src,
        diags,
        Some(AlgebraDocument {
            name,
            generators,
            algebra,
            body,
        }),
    )
}

/// Parses an expression over the generators of `algebra`.
pub fn parse_element_in(src: &str, algebra: &Arc<FreeAlgebra>) -> Result<Element, Diagnostics> {
    let mut diags = Vec::new();
    let tokens = tokenize(src, &mut diags);
    let mut p = Parser::new(tokens, diags);
    let expr = p.expr();
    if expr.is_ok() && p.peek().tok != Tok::Eof {
        let _ = p.unexpected::<()>("an operator or end of input");
    }
    let mut diags = p.diags;
    let value = match expr {
        Ok(e) => eval(&e, algebra, &mut diags),
        Err(Reported) => None,
    };
    finish(src, diags, value)
}

pub fn parse_element(src: &str, cdga: &Cdga) -> Result<Element, Diagnostics> {
    parse_element_in(src, cdga.algebra())
}
