//! Polynomial expressions: signed terms, `int` or `int/int` coefficients, `var^int`
//! powers, products with optional `*` (juxtaposition on the same line), and
//! parenthesized subexpressions expanded to canonical form.

use num_traits::ToPrimitive;

use crate::error::{Error, Result};
use crate::polyring::{PolyRing, Polynomial};

use super::lexer::{describe, lex, Tok, Tokens};

/// Parse one polynomial from the cursor, stopping at the first token that cannot
/// continue the expression.
pub fn parse_poly(ts: &mut Tokens, ring: &PolyRing) -> Result<Polynomial> {
    let mut acc = ring.zero();
    let mut sign = if ts.eat_sym('-') {
        -1
    } else {
        ts.eat_sym('+');
        1
    };
    loop {
        let t = term(ts, ring)?;
        acc = if sign < 0 { ring.sub(&acc, &t) } else { ring.add(&acc, &t) };
        if ts.eat_sym('+') {
            sign = 1;
        } else if ts.eat_sym('-') {
            sign = -1;
        } else {
            return Ok(acc);
        }
    }
}

fn starts_factor(t: &Tok) -> bool {
    matches!(t, Tok::Ident(_) | Tok::Int(_) | Tok::Sym('('))
}

fn term(ts: &mut Tokens, ring: &PolyRing) -> Result<Polynomial> {
    let mut acc = factor(ts, ring)?;
    loop {
        // juxtaposition only multiplies within a line, so a statement keyword on the
        // next line is never swallowed into a trailing product
        if ts.eat_sym('*')
            || (starts_factor(&ts.peek().tok) && ts.peek().line == ts.prev_line())
        {
            let f = factor(ts, ring)?;
            acc = ring.mul(&acc, &f);
        } else {
            return Ok(acc);
        }
    }
}

fn factor(ts: &mut Tokens, ring: &PolyRing) -> Result<Polynomial> {
    let base = atom(ts, ring)?;
    if ts.eat_sym('^') {
        let e = exponent(ts)?;
        Ok(ring.pow(&base, e))
    } else {
        Ok(base)
    }
}

fn exponent(ts: &mut Tokens) -> Result<u32> {
    let paren = ts.eat_sym('(') || ts.eat_sym('{');
    let n = ts.expect_int()?;
    if paren && !(ts.eat_sym(')') || ts.eat_sym('}')) {
        return ts.error("unclosed exponent");
    }
    n.to_u32().ok_or_else(|| Error::InvalidLiteral(format!("exponent {n} is too large")))
}

fn atom(ts: &mut Tokens, ring: &PolyRing) -> Result<Polynomial> {
    let t = ts.peek().clone();
    match t.tok {
        Tok::Int(num) => {
            ts.advance();
            if ts.at_sym('/') && matches!(ts.peek_at(1), Tok::Int(_)) {
                ts.advance();
                let den = ts.expect_int()?;
                let c = ring.field().from_ratio(&num, &den).map_err(|e| Error::Syntax {
                    line: t.line,
                    col: t.col,
                    msg: e.to_string(),
                })?;
                Ok(ring.constant(c))
            } else {
                Ok(ring.constant(ring.field().from_bigint(&num)))
            }
        }
        Tok::Ident(name) => {
            ts.advance();
            let idx = split_ident(&name, ring.vars()).ok_or_else(|| Error::Syntax {
                line: t.line,
                col: t.col,
                msg: format!("unknown variable `{name}`"),
            })?;
            let mut exps = vec![0u32; ring.nvars()];
            for i in idx {
                exps[i] += 1;
            }
            Ok(ring.monomial(crate::polyring::Monomial::from_exponents(&exps)))
        }
        Tok::Sym('(') => {
            ts.advance();
            let p = parse_poly(ts, ring)?;
            ts.expect_sym(')')?;
            Ok(p)
        }
        other => ts.error(format!("expected a term, found {}", describe(&other))),
    }
}

/// An identifier is a variable name, or a concatenation of variable names read
/// greedily from the left (`xy` is `x*y` when `xy` is not itself a variable).
pub fn split_ident(name: &str, vars: &[String]) -> Option<Vec<usize>> {
    if let Some(i) = vars.iter().position(|v| v == name) {
        return Some(vec![i]);
    }
    let mut out = Vec::new();
    let mut rest = name;
    while !rest.is_empty() {
        let (i, v) = vars
            .iter()
            .enumerate()
            .filter(|(_, v)| rest.starts_with(v.as_str()))
            .max_by_key(|(_, v)| v.len())?;
        out.push(i);
        rest = &rest[v.len()..];
    }
    Some(out)
}

impl PolyRing {
    /// Parse a polynomial in this ring's variables.
    pub fn parse(&self, text: &str) -> Result<Polynomial> {
        let mut ts = Tokens::new(lex(text)?);
        let p = parse_poly(&mut ts, self)?;
        if !ts.at_eof() {
            return ts.error(format!("unexpected {}", describe(&ts.peek().tok)));
        }
        Ok(p)
    }

    /// Parse a comma-separated polynomial list.
    pub fn parse_list(&self, text: &str) -> Result<Vec<Polynomial>> {
        let mut ts = Tokens::new(lex(text)?);
        let mut out = Vec::new();
        if ts.at_eof() {
            return Ok(out);
        }
        loop {
            out.push(parse_poly(&mut ts, self)?);
            if !ts.eat_sym(',') {
                break;
            }
        }
        if !ts.at_eof() {
            return ts.error(format!("unexpected {}", describe(&ts.peek().tok)));
        }
        Ok(out)
    }
}
