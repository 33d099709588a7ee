use std::collections::HashSet;

use num_traits::ToPrimitive;

use crate::coeff::Field;
use crate::error::{Error, Result};
use crate::groebner::GbConfig;
use crate::polyring::{OrderKind, PolyRing, Polynomial, RingPresentation};

use super::lexer::{describe, lex, Tok, Tokens};
use super::poly::parse_poly;
use super::{
    ArMode, Expect, IdealDecl, LemmaTask, OpTask, RingDecl, Session, Task, TaskKind,
};

fn syntax(line: usize, col: usize, msg: impl Into<String>) -> Error {
    Error::Syntax { line, col, msg: msg.into() }
}

/// Attach a position to an error raised while building a declared object.
fn located(line: usize, col: usize, e: Error) -> Error {
    match e {
        Error::Syntax { .. } => e,
        other => syntax(line, col, other.to_string()),
    }
}

/// Parse and resolve a session file. Every name is checked against the declarations
/// before it; the first problem is reported with its line and column.
pub fn parse_session(text: &str) -> Result<Session> {
    let mut p = Parser {
        ts: Tokens::new(lex(text)?),
        session: Session::default(),
        names: HashSet::new(),
        task_names: HashSet::new(),
    };
    while !p.ts.at_eof() {
        if p.ts.eat_sym(';') {
            continue;
        }
        match p.ts.peek().tok.clone() {
            Tok::Ident(k) if k == "ring" => p.ring()?,
            Tok::Ident(k) if k == "ideal" => p.ideal()?,
            Tok::Ident(k) if k == "task" => p.task()?,
            other => {
                return p.ts.error(format!(
                    "expected `ring`, `ideal`, or `task`, found {}",
                    describe(&other)
                ))
            }
        }
    }
    Ok(p.session)
}

enum Value {
    /// Token range `[start, end)`.
    Raw(usize, usize),
    Tuple(Vec<(String, String, usize, usize)>),
}

struct Param {
    key: String,
    line: usize,
    col: usize,
    value: Value,
    used: bool,
}

struct Parser {
    ts: Tokens,
    session: Session,
    /// Ring and ideal names share one namespace.
    names: HashSet<String>,
    task_names: HashSet<String>,
}

impl Parser {
    fn declare(&mut self, name: &str, line: usize, col: usize) -> Result<()> {
        if !self.names.insert(name.to_string()) {
            return Err(syntax(line, col, format!("`{name}` is already declared")));
        }
        Ok(())
    }

    fn eat_keyword(&mut self, kw: &str) -> bool {
        if matches!(&self.ts.peek().tok, Tok::Ident(s) if s == kw) {
            self.ts.advance();
            true
        } else {
            false
        }
    }

    /// Skip one value, stopping before a top-level symbol from `stops`.
    fn skip_value(&mut self, stops: &[char]) -> Result<()> {
        let mut depth = 0usize;
        loop {
            let t = self.ts.peek().clone();
            match t.tok {
                Tok::Eof => return Err(syntax(t.line, t.col, "unexpected end of input")),
                Tok::Sym(c) if depth == 0 && stops.contains(&c) => return Ok(()),
                Tok::Sym('(') | Tok::Sym('{') => depth += 1,
                Tok::Sym(')') | Tok::Sym('}') => {
                    if depth == 0 {
                        return Err(syntax(t.line, t.col, format!("unbalanced `{}`", describe(&t.tok))));
                    }
                    depth -= 1;
                }
                _ => {}
            }
            self.ts.advance();
        }
    }

    fn field(&mut self) -> Result<Field> {
        let (name, line, col) = self.ts.expect_ident()?;
        match name.as_str() {
            "Q" | "QQ" => Ok(Field::Rational),
            "Fp" | "GF" => {
                let t = self.ts.peek().clone();
                let p = self.ts.expect_int()?;
                let p = p
                    .to_u64()
                    .ok_or_else(|| syntax(t.line, t.col, format!("characteristic {p} is too large")))?;
                Field::prime(p).map_err(|e| located(t.line, t.col, e))
            }
            _ => Err(syntax(line, col, format!("unknown field `{name}`; expected `Q` or `Fp P`"))),
        }
    }

    fn int_u32(&mut self) -> Result<u32> {
        let t = self.ts.peek().clone();
        let n = self.ts.expect_int()?;
        n.to_u32().ok_or_else(|| syntax(t.line, t.col, format!("{n} is too large")))
    }

    fn poly_list(&mut self, base: &PolyRing) -> Result<Vec<Polynomial>> {
        let mut out = vec![parse_poly(&mut self.ts, base)?];
        while self.ts.eat_sym(',') {
            out.push(parse_poly(&mut self.ts, base)?);
        }
        Ok(out)
    }

    fn ring(&mut self) -> Result<()> {
        self.ts.advance();
        let (name, line, col) = if matches!(self.ts.peek().tok, Tok::Ident(_)) {
            self.ts.expect_ident()?
        } else {
            let t = self.ts.peek();
            ("R".to_string(), t.line, t.col)
        };
        self.declare(&name, line, col)?;
        self.ts.expect_sym('{')?;

        let mut field = None;
        let mut vars: Option<Vec<String>> = None;
        let mut weights: Option<Vec<u32>> = None;
        let mut order = None;
        let mut quotient = None;
        let mut seen: HashSet<String> = HashSet::new();
        while !self.ts.eat_sym('}') {
            let (key, kl, kc) = self.ts.expect_ident()?;
            if !seen.insert(key.clone()) {
                return Err(syntax(kl, kc, format!("duplicate `{key}` in ring `{name}`")));
            }
            self.ts.expect_sym('=')?;
            let empty = self.ts.at_sym(';') || self.ts.at_sym('}');
            match key.as_str() {
                "field" => field = Some(self.field()?),
                "vars" => {
                    let mut vs = vec![self.ts.expect_ident()?.0];
                    while self.ts.eat_sym(',') {
                        vs.push(self.ts.expect_ident()?.0);
                    }
                    vars = Some(vs);
                }
                "weights" if empty => {}
                "weights" => {
                    let mut ws = vec![self.int_u32()?];
                    while self.ts.eat_sym(',') {
                        ws.push(self.int_u32()?);
                    }
                    weights = Some(ws);
                }
                "order" => {
                    let (o, ol, oc) = self.ts.expect_ident()?;
                    order = Some(match o.as_str() {
                        "lex" => OrderKind::Lex,
                        "grevlex" => OrderKind::Grevlex,
                        _ => return Err(syntax(ol, oc, format!("unknown order `{o}`; expected `lex` or `grevlex`"))),
                    });
                }
                "quotient" => {
                    let t = self.ts.peek();
                    quotient = Some((self.ts.pos(), t.line, t.col));
                    self.skip_value(&[';', '}'])?;
                }
                _ => return Err(syntax(kl, kc, format!("unknown ring key `{key}`"))),
            }
            if !self.ts.eat_sym(';') {
                self.ts.expect_sym('}')?;
                break;
            }
        }
        let end = self.ts.pos();

        let vars = vars.ok_or_else(|| syntax(line, col, format!("ring `{name}` declares no `vars`")))?;
        let base = PolyRing::new(field.unwrap_or(Field::Rational), vars, weights, order.unwrap_or(OrderKind::Grevlex))
            .map_err(|e| located(line, col, e))?;
        let q = match quotient {
            Some((pos, ..)) => {
                self.ts.seek(pos);
                let q = if self.ts.at_sym(';') || self.ts.at_sym('}') { Vec::new() } else { self.poly_list(&base)? };
                if !(self.ts.at_sym(';') || self.ts.at_sym('}')) {
                    return self.ts.error(format!("unexpected {} in quotient", describe(&self.ts.peek().tok)));
                }
                self.ts.seek(end);
                q
            }
            None => Vec::new(),
        };
        let (ql, qc) = quotient.map(|(_, l, c)| (l, c)).unwrap_or((line, col));
        let ring = RingPresentation::new(base, q, GbConfig::default()).map_err(|e| located(ql, qc, e))?;
        self.session.rings.push(RingDecl { name, ring });
        Ok(())
    }

    fn ideal(&mut self) -> Result<()> {
        self.ts.advance();
        let (name, line, col) = self.ts.expect_ident()?;
        self.declare(&name, line, col)?;
        let ring = if self.eat_keyword("in") {
            let (r, rl, rc) = self.ts.expect_ident()?;
            if self.session.ring(&r).is_none() {
                return Err(syntax(rl, rc, format!("unknown ring `{r}`")));
            }
            r
        } else if self.session.rings.len() == 1 {
            self.session.rings[0].name.clone()
        } else {
            return Err(syntax(line, col, format!("ideal `{name}` needs `in RING`")));
        };
        self.ts.expect_sym('=')?;
        let base = self.session.ring(&ring).unwrap().ring.base().clone();
        let gens = self.poly_list(&base)?;
        self.session.ideals.push(IdealDecl { name, ring, gens });
        Ok(())
    }

    fn task(&mut self) -> Result<()> {
        self.ts.advance();
        let (mut kind, kl, kc) = self.ts.expect_ident()?;
        while self.ts.at_sym('-') && matches!(self.ts.peek_at(1), Tok::Ident(_)) {
            self.ts.advance();
            kind.push('-');
            kind.push_str(&self.ts.expect_ident()?.0);
        }
        self.ts.expect_sym('{')?;
        let mut params: Vec<Param> = Vec::new();
        while !self.ts.eat_sym('}') {
            let (key, line, col) = self.ts.expect_ident()?;
            if params.iter().any(|p| p.key == key) {
                return Err(syntax(line, col, format!("duplicate key `{key}`")));
            }
            self.ts.expect_sym('=')?;
            let value = if self.ts.at_sym('(')
                && matches!(self.ts.peek_at(1), Tok::Ident(_))
                && *self.ts.peek_at(2) == Tok::Sym(':')
            {
                self.tuple()?
            } else {
                let start = self.ts.pos();
                self.skip_value(&[',', '}'])?;
                if self.ts.pos() == start {
                    return Err(syntax(line, col, format!("missing value for `{key}`")));
                }
                Value::Raw(start, self.ts.pos())
            };
            params.push(Param { key, line, col, value, used: false });
            if !self.ts.eat_sym(',') {
                self.ts.expect_sym('}')?;
                break;
            }
        }
        let after = self.ts.pos();
        let task = self.build_task(&kind, kl, kc, &mut params)?;
        if let Some(p) = params.iter().find(|p| !p.used) {
            return Err(syntax(p.line, p.col, format!("unknown key `{}` for task `{kind}`", p.key)));
        }
        self.ts.seek(after);
        self.session.tasks.push(task);
        Ok(())
    }

    fn tuple(&mut self) -> Result<Value> {
        self.ts.expect_sym('(')?;
        let mut out: Vec<(String, String, usize, usize)> = Vec::new();
        while !self.ts.eat_sym(')') {
            let (k, l, c) = self.ts.expect_ident()?;
            if out.iter().any(|e| e.0 == k) {
                return Err(syntax(l, c, format!("duplicate key `{k}`")));
            }
            self.ts.expect_sym(':')?;
            let neg = self.ts.eat_sym('-');
            let t = self.ts.advance();
            let v = match t.tok {
                Tok::Ident(s) if !neg => s,
                Tok::Int(n) => format!("{}{n}", if neg { "-" } else { "" }),
                other => return Err(syntax(t.line, t.col, format!("expected a value, found {}", describe(&other)))),
            };
            out.push((k, v, l, c));
            if !self.ts.eat_sym(',') {
                self.ts.expect_sym(')')?;
                break;
            }
        }
        Ok(Value::Tuple(out))
    }

    // -- typed parameter access --------------------------------------------------

    fn find(params: &mut [Param], key: &str) -> Option<usize> {
        let k = params.iter().position(|p| p.key == key)?;
        params[k].used = true;
        Some(k)
    }

    /// Position the cursor at a raw value.
    fn enter(&mut self, p: &Param) -> Result<usize> {
        match p.value {
            Value::Raw(start, end) => {
                self.ts.seek(start);
                Ok(end)
            }
            Value::Tuple(_) => Err(syntax(p.line, p.col, format!("`{}` does not take a tuple", p.key))),
        }
    }

    fn finish(&mut self, end: usize, key: &str) -> Result<()> {
        if self.ts.pos() != end {
            return self.ts.error(format!("unexpected {} in value of `{key}`", describe(&self.ts.peek().tok)));
        }
        Ok(())
    }

    fn opt_name(&mut self, params: &mut [Param], key: &str) -> Result<Option<(String, usize, usize)>> {
        let Some(k) = Self::find(params, key) else { return Ok(None) };
        let end = self.enter(&params[k])?;
        let v = self.ts.expect_ident()?;
        self.finish(end, key)?;
        Ok(Some(v))
    }

    fn opt_int(&mut self, params: &mut [Param], key: &str) -> Result<Option<u32>> {
        let Some(k) = Self::find(params, key) else { return Ok(None) };
        let end = self.enter(&params[k])?;
        let v = self.int_u32()?;
        self.finish(end, key)?;
        Ok(Some(v))
    }

    fn int(&mut self, params: &mut [Param], key: &str, at: (usize, usize)) -> Result<u32> {
        self.opt_int(params, key)?.ok_or_else(|| missing(at, key))
    }

    fn opt_field(&mut self, params: &mut [Param], key: &str) -> Result<Option<(Field, usize, usize)>> {
        let Some(k) = Self::find(params, key) else { return Ok(None) };
        let (l, c) = (params[k].line, params[k].col);
        let end = self.enter(&params[k])?;
        let f = self.field()?;
        self.finish(end, key)?;
        Ok(Some((f, l, c)))
    }

    /// A reference to a declared ideal.
    fn ideal_ref(&mut self, params: &mut [Param], key: &str, at: (usize, usize)) -> Result<String> {
        let (name, l, c) = self.opt_name(params, key)?.ok_or_else(|| missing(at, key))?;
        if self.session.ideal(&name).is_none() {
            let what = if self.session.ring(&name).is_some() { "is a ring, not an ideal" } else { "is not declared" };
            return Err(syntax(l, c, format!("ideal `{name}` {what}")));
        }
        Ok(name)
    }

    fn same_ring(&self, a: &str, b: &str, at: (usize, usize)) -> Result<()> {
        let (ia, ib) = (self.session.ideal(a).unwrap(), self.session.ideal(b).unwrap());
        if ia.ring != ib.ring {
            return Err(syntax(
                at.0,
                at.1,
                format!("`{a}` lives in `{}` but `{b}` lives in `{}`", ia.ring, ib.ring),
            ));
        }
        Ok(())
    }

    /// A polynomial in the ring of ideal `ideal`.
    fn poly(&mut self, params: &mut [Param], key: &str, ideal: &str, at: (usize, usize)) -> Result<Polynomial> {
        let k = Self::find(params, key).ok_or_else(|| missing(at, key))?;
        let ring = &self.session.ideal(ideal).unwrap().ring;
        let base = self.session.ring(ring).unwrap().ring.base().clone();
        let end = self.enter(&params[k])?;
        let f = parse_poly(&mut self.ts, &base)?;
        self.finish(end, key)?;
        Ok(f)
    }

    fn build_task(&mut self, kind: &str, kl: usize, kc: usize, params: &mut [Param]) -> Result<Task> {
        let at = (kl, kc);
        let name = match self.opt_name(params, "name")? {
            Some((n, l, c)) => {
                if !self.task_names.insert(n.clone()) {
                    return Err(syntax(l, c, format!("task name `{n}` is already used")));
                }
                Some(n)
            }
            None => None,
        };
        let kind = match kind {
            "gb" => TaskKind::Gb { i: self.ideal_ref(params, "I", at)? },
            "op" => TaskKind::Op(self.op_task(params, at)?),
            "ar" => {
                let i = self.ideal_ref(params, "I", at)?;
                let j = self.ideal_ref(params, "J", at)?;
                self.same_ring(&i, &j, at)?;
                let mode = self.opt_name(params, "mode")?;
                let mode = match mode.as_ref().map(|m| m.0.as_str()) {
                    None | Some("table") => ArMode::Table { nmax: self.int(params, "nmax", at)? },
                    Some("strong") => ArMode::Strong { h: self.int(params, "h", at)?, n: self.int(params, "n", at)? },
                    Some("weak") => ArMode::Weak { h: self.int(params, "h", at)?, n: self.int(params, "n", at)? },
                    Some(other) => {
                        let (_, l, c) = mode.as_ref().unwrap();
                        return Err(syntax(*l, *c, format!("unknown mode `{other}`; expected table, strong, or weak")));
                    }
                };
                if let ArMode::Strong { h, n } | ArMode::Weak { h, n } = mode {
                    if h > n {
                        return Err(syntax(kl, kc, format!("need h ≤ n, got h = {h}, n = {n}")));
                    }
                }
                if mode == (ArMode::Table { nmax: 0 }) {
                    return Err(syntax(kl, kc, "nmax must be at least 1"));
                }
                TaskKind::Ar { i, j, mode }
            }
            "reltype" => TaskKind::Reltype { i: self.ideal_ref(params, "I", at)? },
            "bound" => TaskKind::Bound { j: self.ideal_ref(params, "J", at)? },
            "example1" | "example2" => {
                let n = self.int(params, "n", at)?;
                if n < 2 {
                    return Err(syntax(kl, kc, format!("the family starts at n = 2, got n = {n}")));
                }
                let (field, fl, fc) = self.opt_field(params, "field")?.unwrap_or((Field::Rational, kl, kc));
                if kind == "example1" {
                    let p = field.characteristic();
                    if p != 0 && p <= n as u64 {
                        return Err(syntax(
                            fl,
                            fc,
                            format!("example1 needs characteristic 0 or p > n, got p = {p}, n = {n}"),
                        ));
                    }
                    TaskKind::Example1 { n, field }
                } else {
                    TaskKind::Example2 { n, field }
                }
            }
            "lemma-checks" => TaskKind::Lemma(self.lemma_task(params, at)?),
            other => {
                return Err(syntax(
                    kl,
                    kc,
                    format!(
                        "unknown task kind `{other}`; expected gb, op, ar, reltype, bound, example1, example2, or lemma-checks"
                    ),
                ))
            }
        };
        let expect = match Self::find(params, "expect") {
            Some(k) => Some(self.expectation(&params[k], &kind)?),
            None => None,
        };
        Ok(Task { name, kind, expect })
    }

    fn op_task(&mut self, params: &mut [Param], at: (usize, usize)) -> Result<OpTask> {
        let (op, ol, oc) = self.opt_name(params, "op")?.ok_or_else(|| missing(at, "op"))?;
        let i = self.ideal_ref(params, "I", at)?;
        let pair = |p: &mut Self, params: &mut [Param]| -> Result<String> {
            let j = p.ideal_ref(params, "J", at)?;
            p.same_ring(&i, &j, at)?;
            Ok(j)
        };
        Ok(match op.as_str() {
            "sum" => OpTask::Sum { j: pair(self, params)?, i },
            "product" => OpTask::Product { j: pair(self, params)?, i },
            "intersect" => OpTask::Intersect { j: pair(self, params)?, i },
            "colon_ideal" => OpTask::ColonIdeal { j: pair(self, params)?, i },
            "saturate" => OpTask::Saturate { j: pair(self, params)?, i },
            "equal" => OpTask::Equal { j: pair(self, params)?, i },
            "power" => OpTask::Power { n: self.int(params, "n", at)?, i },
            "colon" => OpTask::Colon { f: self.poly(params, "f", &i, at)?, i },
            "member" => OpTask::Member { f: self.poly(params, "f", &i, at)?, i },
            "graded_dim" => OpTask::GradedDim { d: self.int(params, "d", at)? as u64, i },
            "std_monomials" => OpTask::StdMonomials { d: self.int(params, "d", at)? as u64, i },
            "membership_truncated" => OpTask::MembershipTruncated {
                f: self.poly(params, "f", &i, at)?,
                d: self.int(params, "d", at)? as u64,
                i,
            },
            other => {
                return Err(syntax(
                    ol,
                    oc,
                    format!(
                        "unknown op `{other}`; expected sum, product, power, intersect, colon, colon_ideal, \
                         saturate, member, equal, graded_dim, std_monomials, or membership_truncated"
                    ),
                ))
            }
        })
    }

    fn lemma_task(&mut self, params: &mut [Param], at: (usize, usize)) -> Result<LemmaTask> {
        let (check, cl, cc) = self.opt_name(params, "check")?.ok_or_else(|| missing(at, "check"))?;
        Ok(match check.as_str() {
            "first" => {
                let n1 = self.ideal_ref(params, "N1", at)?;
                let n2 = self.ideal_ref(params, "N2", at)?;
                self.same_ring(&n1, &n2, at)?;
                let h = self.opt_int(params, "h")?;
                let n = self.int(params, "n", at)?;
                if h.is_some_and(|h| h >= n) {
                    return Err(syntax(at.0, at.1, format!("need h < n, got h = {}, n = {n}", h.unwrap())));
                }
                LemmaTask::First { n1, n2, h, n }
            }
            "reltype" => {
                let i = self.ideal_ref(params, "I", at)?;
                let j = self.ideal_ref(params, "J", at)?;
                self.same_ring(&i, &j, at)?;
                LemmaTask::Reltype { i, j, h: self.opt_int(params, "h")?, nmax: self.int(params, "nmax", at)? }
            }
            "reduction" => {
                let i = self.ideal_ref(params, "I", at)?;
                let n = self.opt_int(params, "n")?;
                if n == Some(0) {
                    return Err(syntax(at.0, at.1, "reduction exponent must be at least 1"));
                }
                LemmaTask::Reduction { i, n, attempts: self.opt_int(params, "attempts")?.unwrap_or(50) }
            }
            other => {
                return Err(syntax(cl, cc, format!("unknown check `{other}`; expected first, reltype, or reduction")))
            }
        })
    }

    fn expectation(&mut self, p: &Param, kind: &TaskKind) -> Result<Expect> {
        let Value::Tuple(entries) = &p.value else {
            return Err(syntax(p.line, p.col, "`expect` takes a tuple such as `(in: yes, out: no)`"));
        };
        let allowed = fact_keys(kind);
        let mut out = Vec::with_capacity(entries.len());
        for (k, v, l, c) in entries {
            let ok = allowed.contains(&k.as_str())
                || (matches!(kind, TaskKind::Ar { mode: ArMode::Table { .. }, .. })
                    && k.len() > 1
                    && k.starts_with('n')
                    && k[1..].chars().all(|c| c.is_ascii_digit()));
            if !ok {
                return Err(syntax(
                    *l,
                    *c,
                    format!("`{k}` is not reported by this task; expected one of: {}", allowed.join(", ")),
                ));
            }
            if k == "equals" {
                let here = match kind {
                    TaskKind::Op(op) => op_ideal(op),
                    _ => unreachable!(),
                };
                match self.session.ideal(v) {
                    Some(d) if d.ring == self.session.ideal(here).unwrap().ring => {}
                    Some(_) => return Err(syntax(*l, *c, format!("`{v}` lives in a different ring"))),
                    None => return Err(syntax(*l, *c, format!("ideal `{v}` is not declared"))),
                }
            }
            out.push((k.clone(), normalize(v)));
        }
        Ok(out)
    }
}

fn missing(at: (usize, usize), key: &str) -> Error {
    syntax(at.0, at.1, format!("missing `{key}`"))
}

/// Canonical spelling of an expected or reported value.
pub(crate) fn normalize(v: &str) -> String {
    match v {
        "true" | "yes" => "yes".into(),
        "false" | "no" => "no".into(),
        other => other.to_string(),
    }
}

pub(crate) fn op_ideal(op: &OpTask) -> &str {
    match op {
        OpTask::Sum { i, .. }
        | OpTask::Product { i, .. }
        | OpTask::Power { i, .. }
        | OpTask::Intersect { i, .. }
        | OpTask::Colon { i, .. }
        | OpTask::ColonIdeal { i, .. }
        | OpTask::Saturate { i, .. }
        | OpTask::Member { i, .. }
        | OpTask::Equal { i, .. }
        | OpTask::GradedDim { i, .. }
        | OpTask::StdMonomials { i, .. }
        | OpTask::MembershipTruncated { i, .. } => i,
    }
}

/// Facts a task reports, and hence the keys `expect` may name.
pub(crate) fn fact_keys(kind: &TaskKind) -> Vec<&'static str> {
    match kind {
        TaskKind::Gb { .. } => vec!["size", "unit"],
        TaskKind::Op(op) => match op {
            OpTask::Member { .. } | OpTask::MembershipTruncated { .. } => vec!["member"],
            OpTask::Equal { .. } => vec!["equal"],
            OpTask::GradedDim { .. } => vec!["dim"],
            OpTask::StdMonomials { .. } => vec!["count"],
            OpTask::Saturate { .. } => vec!["size", "unit", "zero", "equals", "steps"],
            _ => vec!["size", "unit", "zero", "equals"],
        },
        TaskKind::Ar { mode: ArMode::Table { .. }, .. } => vec!["uniform", "complete"],
        TaskKind::Ar { .. } => vec!["holds"],
        TaskKind::Reltype { .. } => vec!["reltype", "ngens"],
        TaskKind::Bound { .. } => vec!["bound", "ell", "r", "e_cm"],
        TaskKind::Example1 { .. } | TaskKind::Example2 { .. } => vec!["in", "out", "identity"],
        TaskKind::Lemma(LemmaTask::First { h: Some(_), .. }) => vec!["holds"],
        TaskKind::Lemma(LemmaTask::First { h: None, .. }) => vec!["least_h"],
        TaskKind::Lemma(LemmaTask::Reltype { .. }) => vec!["holds", "reltype", "h"],
        TaskKind::Lemma(LemmaTask::Reduction { .. }) => vec!["found", "n", "attempt"],
    }
}
