use std::collections::HashMap;
use std::fmt::Write as _;
use std::time::Instant;

use serde_json::{json, Map, Value};

use crate::artinrees::{
    check_lemma_first, check_relationtype_lemma, check_strong_ar, check_weak_ar, find_ar_table,
    find_reduction_element_seeded, least_lemma_first_h, multiplicity, reltype, reltype_modulo, theorem_bound,
    verify_example1, verify_example2, ExampleVerdict, TheoremBound,
};
use crate::error::{Error, Result};
use crate::groebner::GbConfig;
use crate::ideal::Ideal;
use crate::polyring::{Polynomial, Ring};

use super::parse::normalize;
use super::{ArMode, LemmaTask, OpTask, Session, Task, TaskKind};

#[derive(Debug, Clone, Default)]
pub struct RunOptions {
    /// Overrides the Gröbner degree cap of every ring.
    pub deg_cap: Option<u64>,
    /// Worker threads for the parallel Artin-Rees grid; `None` uses the global pool.
    pub threads: Option<usize>,
    /// Seed mixed into the reduction-element search.
    pub seed: u64,
    /// Run only the task with this label.
    pub task: Option<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Pass,
    /// Ran to completion but an expectation did not match.
    Fail,
    /// Contract, argument, or other error.
    Error,
    /// A resource cap stopped the task, or part of it.
    Resource,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Error => "error",
            Status::Resource => "resource-cap",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExitStatus {
    Pass,
    ExpectationFailed,
    Error,
    ResourceCap,
}

impl ExitStatus {
    pub fn code(self) -> i32 {
        match self {
            ExitStatus::Pass => 0,
            ExitStatus::ExpectationFailed => 1,
            ExitStatus::Error => 2,
            ExitStatus::ResourceCap => 3,
        }
    }
}

/// One report record.
#[derive(Debug, Clone)]
pub struct TaskReport {
    pub label: String,
    pub kind: &'static str,
    pub inputs: Vec<(String, String)>,
    pub status: Status,
    /// Reported facts, in a fixed order per task kind.
    pub facts: Vec<(String, String)>,
    pub expected: Vec<(String, String)>,
    pub mismatches: Vec<String>,
    /// Human-readable result lines (bases, tables, relations).
    pub output: Vec<String>,
    pub witnesses: Vec<String>,
    pub error: Option<String>,
    pub elapsed_ms: f64,
    capped: bool,
}

impl TaskReport {
    fn new(label: String, kind: &'static str) -> TaskReport {
        TaskReport {
            label,
            kind,
            inputs: Vec::new(),
            status: Status::Pass,
            facts: Vec::new(),
            expected: Vec::new(),
            mismatches: Vec::new(),
            output: Vec::new(),
            witnesses: Vec::new(),
            error: None,
            elapsed_ms: 0.0,
            capped: false,
        }
    }

    pub fn fact(&self, key: &str) -> Option<&str> {
        self.facts.iter().find(|(k, _)| k == key).map(|(_, v)| v.as_str())
    }

    fn input(&mut self, k: &str, v: impl Into<String>) {
        self.inputs.push((k.to_string(), v.into()));
    }

    fn set(&mut self, k: &str, v: impl ToString) {
        self.facts.push((k.to_string(), normalize(&v.to_string())));
    }

    fn to_json(&self, timings: bool) -> Value {
        let obj = |pairs: &[(String, String)]| -> Value {
            Value::Object(pairs.iter().map(|(k, v)| (k.clone(), Value::String(v.clone()))).collect::<Map<_, _>>())
        };
        let timings = if timings { json!({ "elapsed_ms": self.elapsed_ms }) } else { json!({}) };
        json!({
            "task": self.label,
            "kind": self.kind,
            "inputs": obj(&self.inputs),
            "verdict": {
                "status": self.status.as_str(),
                "facts": obj(&self.facts),
                "expected": obj(&self.expected),
                "mismatches": self.mismatches,
                "error": self.error,
            },
            "output": self.output,
            "witnesses": self.witnesses,
            "timings": timings,
        })
    }

    fn to_text(&self, out: &mut String) {
        let _ = writeln!(out, "task {} ({}): {}", self.label, self.kind, self.status.as_str().to_uppercase());
        let section = |out: &mut String, title: &str, lines: Vec<String>| {
            if !lines.is_empty() {
                let _ = writeln!(out, "  {title}:");
                for l in lines {
                    let _ = writeln!(out, "    {l}");
                }
            }
        };
        let kv = |pairs: &[(String, String)]| pairs.iter().map(|(k, v)| format!("{k} = {v}")).collect();
        section(out, "inputs", kv(&self.inputs));
        if let Some(e) = &self.error {
            section(out, "error", vec![e.clone()]);
        }
        section(out, "facts", kv(&self.facts));
        let expected = self
            .expected
            .iter()
            .map(|(k, v)| {
                let ok = self.fact(k) == Some(v.as_str());
                format!("{k} = {v} ({})", if ok { "ok" } else { "MISMATCH" })
            })
            .collect();
        section(out, "expected", expected);
        section(out, "output", self.output.clone());
        section(out, "witnesses", self.witnesses.clone());
    }
}

#[derive(Debug, Clone)]
pub struct RunReport {
    pub tasks: Vec<TaskReport>,
}

impl RunReport {
    /// Errors dominate resource caps, which dominate expectation failures.
    pub fn exit_status(&self) -> ExitStatus {
        let has = |s: Status| self.tasks.iter().any(|t| t.status == s);
        if has(Status::Error) {
            ExitStatus::Error
        } else if has(Status::Resource) {
            ExitStatus::ResourceCap
        } else if has(Status::Fail) {
            ExitStatus::ExpectationFailed
        } else {
            ExitStatus::Pass
        }
    }

    /// Human-readable report; contains no timings, so it is reproducible byte for byte.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for (k, t) in self.tasks.iter().enumerate() {
            if k > 0 {
                out.push('\n');
            }
            t.to_text(&mut out);
        }
        out
    }

    /// One JSON object per line. With `timings = false` the `timings` objects are empty
    /// and the output is reproducible byte for byte.
    pub fn to_json(&self, timings: bool) -> String {
        let mut out = String::new();
        for t in &self.tasks {
            out.push_str(&t.to_json(timings).to_string());
            out.push('\n');
        }
        out
    }
}

/// Run the session's tasks in order. Task-level failures, including resource caps,
/// are recorded in the report; only an unknown `--task` label is an error here.
pub fn run(session: &Session, opts: &RunOptions) -> Result<RunReport> {
    match opts.threads {
        Some(n) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(n)
                .build()
                .map_err(|e| Error::Argument(e.to_string()))?;
            pool.install(|| run_inner(session, opts))
        }
        None => run_inner(session, opts),
    }
}

struct Ctx<'a> {
    ideals: HashMap<&'a str, Ideal>,
    config: GbConfig,
    seed: u64,
}

fn run_inner(session: &Session, opts: &RunOptions) -> Result<RunReport> {
    let config = GbConfig { degree_cap: opts.deg_cap.unwrap_or(GbConfig::default().degree_cap) };
    let rings: HashMap<&str, Ring> = session
        .rings
        .iter()
        .map(|r| {
            let ring = if opts.deg_cap.is_some() { r.ring.with_config(config) } else { r.ring.clone() };
            (r.name.as_str(), ring)
        })
        .collect();
    let mut ideals = HashMap::new();
    for d in &session.ideals {
        ideals.insert(d.name.as_str(), Ideal::new(&rings[d.ring.as_str()], d.gens.clone())?);
    }
    let ctx = Ctx { ideals, config, seed: opts.seed };

    let selected: Vec<usize> = (0..session.tasks.len())
        .filter(|&k| opts.task.as_ref().is_none_or(|t| *t == session.label(k)))
        .collect();
    if let (Some(t), true) = (&opts.task, selected.is_empty()) {
        return Err(Error::Argument(format!("no task labelled `{t}`")));
    }
    let mut tasks = Vec::with_capacity(selected.len());
    for k in selected {
        let task = &session.tasks[k];
        let mut rep = TaskReport::new(session.label(k), task.kind.keyword());
        let start = Instant::now();
        let outcome = ctx.exec(task, &mut rep);
        rep.elapsed_ms = start.elapsed().as_secs_f64() * 1e3;
        rep.expected = task.expect.clone().unwrap_or_default();
        match outcome {
            Ok(()) => {
                for (k, v) in &rep.expected {
                    match rep.fact(k) {
                        Some(got) if got == v => {}
                        Some(got) => rep.mismatches.push(format!("{k}: expected {v}, got {got}")),
                        None => rep.mismatches.push(format!("{k}: expected {v}, not reported")),
                    }
                }
                rep.status = if rep.capped {
                    Status::Resource
                } else if rep.mismatches.is_empty() {
                    Status::Pass
                } else {
                    Status::Fail
                };
            }
            Err(e) => {
                rep.status = if e.is_resource() { Status::Resource } else { Status::Error };
                rep.error = Some(e.to_string());
            }
        }
        tasks.push(rep);
    }
    Ok(RunReport { tasks })
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn show_ideal(i: &Ideal) -> String {
    format!("{i:?}")
}

impl Ctx<'_> {
    fn ideal(&self, name: &str) -> &Ideal {
        &self.ideals[name]
    }

    fn poly(&self, i: &Ideal, f: &Polynomial) -> String {
        i.ring().base().display(f).to_string()
    }

    /// Record an ideal operand as an input.
    fn operand(&self, rep: &mut TaskReport, key: &str, name: &str) -> Ideal {
        let i = self.ideal(name).clone();
        rep.input(key, format!("{name} = {}", show_ideal(&i)));
        i
    }

    fn exec(&self, task: &Task, rep: &mut TaskReport) -> Result<()> {
        match &task.kind {
            TaskKind::Gb { i } => {
                let i = self.operand(rep, "I", i);
                let gb = i.gb()?;
                rep.set("size", gb.len());
                rep.set("unit", yes(gb.is_unit()));
                rep.output = i.display_gb()?;
            }
            TaskKind::Op(op) => self.op(op, task, rep)?,
            TaskKind::Ar { i, j, mode } => {
                let i = self.operand(rep, "I", i);
                let j = self.operand(rep, "J", j);
                match *mode {
                    ArMode::Table { nmax } => {
                        rep.input("nmax", nmax.to_string());
                        let t = find_ar_table(&i, &j, nmax)?;
                        rep.capped = !t.complete;
                        rep.set("uniform", t.uniform.map_or("none".into(), |h| h.to_string()));
                        rep.set("complete", yes(t.complete));
                        for n in 1..=nmax {
                            rep.set(&format!("n{n}"), t.minimal_at(n).map_or("none".into(), |h| h.to_string()));
                        }
                        rep.output.push("strong instance at (n, h), h = 0..n: + holds, - fails, ? capped".into());
                        for n in 1..=nmax {
                            let row: Vec<&str> = (0..=n)
                                .map(|h| match t.cell(n, h).and_then(|c| c.holds) {
                                    Some(true) => "+",
                                    Some(false) => "-",
                                    None => "?",
                                })
                                .collect();
                            rep.output.push(format!("n={n}: {}", row.join(" ")));
                        }
                        for c in t.failures() {
                            if let Some(w) = &c.witness {
                                rep.witnesses.push(format!("n={} h={}: {}", c.n, c.h, self.poly(&i, w)));
                            }
                        }
                    }
                    ArMode::Strong { h, n } => {
                        rep.input("h", h.to_string());
                        rep.input("n", n.to_string());
                        let c = check_strong_ar(&i, &j, h, n)?;
                        rep.set("holds", yes(c.holds));
                        if let Some(w) = &c.witness {
                            rep.witnesses.push(self.poly(&i, w));
                        }
                    }
                    ArMode::Weak { h, n } => {
                        rep.input("h", h.to_string());
                        rep.input("n", n.to_string());
                        rep.set("holds", yes(check_weak_ar(&i, &j, h, n)?));
                    }
                }
            }
            TaskKind::Reltype { i } => {
                let i = self.operand(rep, "I", i);
                let r = reltype(&i)?;
                rep.set("reltype", r.reltype);
                rep.set("ngens", r.gens.len());
                let gens: Vec<String> = r.gens.iter().map(|g| self.poly(&i, g)).collect();
                rep.output.push(format!("generators: {}", gens.join(", ")));
                for f in &r.certificate {
                    rep.output.push(format!("relation (T-degree {}): {}", r.t_degree(f), r.display(f)));
                }
            }
            TaskKind::Bound { j } => {
                let j = self.operand(rep, "J", j);
                match theorem_bound(&j)? {
                    TheoremBound::Available { r, ell, bound } => {
                        rep.set("bound", bound);
                        rep.set("ell", ell);
                        rep.set("r", r);
                        rep.output.push(format!("R/J is Cohen-Macaulay of multiplicity {r}; bound max(r, ell) + ell = {bound}"));
                    }
                    TheoremBound::Unavailable { ell, e_cm } => {
                        rep.set("bound", "unavailable");
                        rep.set("ell", ell);
                        rep.set("e_cm", e_cm);
                        rep.output.push(format!(
                            "R/J has depth zero (ell = {ell}); r needs a primary decomposition; e(R/(J : m^inf)) = {e_cm}"
                        ));
                    }
                }
            }
            TaskKind::Example1 { n, field } | TaskKind::Example2 { n, field } => {
                rep.input("n", n.to_string());
                rep.input("field", field.to_string());
                let v = if matches!(task.kind, TaskKind::Example1 { .. }) {
                    verify_example1(*n, *field, self.config)?
                } else {
                    verify_example2(*n, *field, self.config)?
                };
                self.example(&v, rep);
            }
            TaskKind::Lemma(l) => self.lemma(l, rep)?,
        }
        Ok(())
    }

    fn example(&self, v: &ExampleVerdict, rep: &mut TaskReport) {
        rep.set("in", yes(v.in_lhs));
        // `out` is membership in the right-hand side I(I^{n-1} ∩ J)
        rep.set("out", yes(v.in_rhs));
        rep.set("identity", yes(v.identity));
        let base = v.ring.base();
        let q: Vec<String> = v.ring.quotient().iter().map(|p| base.display(p).to_string()).collect();
        let ws: Vec<String> = base.weights().iter().map(|w| w.to_string()).collect();
        rep.output.push(format!(
            "R = {}[{}]/({}), weights ({})",
            base.field(),
            base.vars().join(", "),
            q.join(", "),
            ws.join(", ")
        ));
        rep.output.push(format!("I = {}", show_ideal(&v.i)));
        rep.output.push(format!("J = {}", show_ideal(&v.j)));
        rep.output.push(format!("xi in I^n ∩ J: {}", yes(v.in_lhs)));
        rep.output.push(format!("xi in I(I^(n-1) ∩ J): {}", yes(v.in_rhs)));
        rep.witnesses.push(v.xi_display());
    }

    fn op(&self, op: &OpTask, task: &Task, rep: &mut TaskReport) -> Result<()> {
        let result = match op {
            OpTask::Sum { i, j } => Some(self.operand(rep, "I", i).sum(&self.operand(rep, "J", j))?),
            OpTask::Product { i, j } => Some(self.operand(rep, "I", i).product(&self.operand(rep, "J", j))?),
            OpTask::Intersect { i, j } => Some(self.operand(rep, "I", i).intersect(&self.operand(rep, "J", j))?),
            OpTask::ColonIdeal { i, j } => Some(self.operand(rep, "I", i).colon_ideal(&self.operand(rep, "J", j))?),
            OpTask::Power { i, n } => {
                let i = self.operand(rep, "I", i);
                rep.input("n", n.to_string());
                Some(i.power(*n)?)
            }
            OpTask::Colon { i, f } => {
                let i = self.operand(rep, "I", i);
                rep.input("f", self.poly(&i, f));
                Some(i.colon(f)?)
            }
            OpTask::Saturate { i, j } => {
                let i = self.operand(rep, "I", i);
                let (s, steps) = i.saturate_with_steps(&self.operand(rep, "J", j))?;
                rep.set("steps", steps);
                Some(s)
            }
            OpTask::Member { i, f } => {
                let i = self.operand(rep, "I", i);
                rep.input("f", self.poly(&i, f));
                rep.set("member", yes(i.member(f)?));
                None
            }
            OpTask::MembershipTruncated { i, f, d } => {
                let i = self.operand(rep, "I", i);
                rep.input("f", self.poly(&i, f));
                rep.input("d", d.to_string());
                rep.set("member", yes(i.membership_truncated(f, *d)?));
                None
            }
            OpTask::Equal { i, j } => {
                let eq = self.operand(rep, "I", i).equal(&self.operand(rep, "J", j))?;
                rep.set("equal", yes(eq));
                None
            }
            OpTask::GradedDim { i, d } => {
                let i = self.operand(rep, "I", i);
                rep.input("d", d.to_string());
                rep.set("dim", i.graded_dim(*d)?);
                None
            }
            OpTask::StdMonomials { i, d } => {
                let i = self.operand(rep, "I", i);
                rep.input("d", d.to_string());
                let ms = i.std_monomials(*d)?;
                rep.set("count", ms.len());
                let base = i.ring().base();
                rep.output = ms.iter().map(|m| base.fmt_monomial(m)).collect();
                None
            }
        };
        if let Some(r) = result {
            let gb = r.gb()?;
            rep.set("size", gb.len());
            rep.set("unit", yes(gb.is_unit()));
            rep.set("zero", yes(gb.is_empty()));
            if let Some((_, other)) = task.expect.iter().flatten().find(|(k, _)| k == "equals") {
                let eq = r.equal(self.ideal(other))?;
                rep.set("equals", if eq { other.clone() } else { format!("not {other}") });
            }
            rep.output = r.display_gb()?;
        }
        Ok(())
    }

    fn lemma(&self, l: &LemmaTask, rep: &mut TaskReport) -> Result<()> {
        match l {
            LemmaTask::First { n1, n2, h, n } => {
                let a = self.operand(rep, "N1", n1);
                let b = self.operand(rep, "N2", n2);
                rep.input("n", n.to_string());
                match h {
                    Some(h) => {
                        rep.input("h", h.to_string());
                        rep.set("holds", yes(check_lemma_first(&a, &b, *h, *n)?));
                    }
                    None => {
                        let least = least_lemma_first_h(&a, &b, *n)?;
                        rep.set("least_h", least.map_or("none".into(), |h| h.to_string()));
                    }
                }
            }
            LemmaTask::Reltype { i, j, h, nmax } => {
                let i = self.operand(rep, "I", i);
                let j = self.operand(rep, "J", j);
                rep.input("nmax", nmax.to_string());
                let h = match h {
                    Some(h) => *h,
                    None => reltype_modulo(&i, &j)?,
                };
                rep.input("h", h.to_string());
                let c = check_relationtype_lemma(&i, &j, h, *nmax)?;
                rep.set("holds", yes(c.holds()));
                rep.set("reltype", c.reltype);
                rep.set("h", c.h);
                for (n, w) in &c.failures {
                    let w = w.as_ref().map_or("?".into(), |w| self.poly(&i, w));
                    rep.witnesses.push(format!("n={n}: {w}"));
                }
            }
            LemmaTask::Reduction { i, n, attempts } => {
                let i = self.operand(rep, "I", i);
                rep.input("attempts", attempts.to_string());
                let range: Vec<u32> = match n {
                    Some(n) => {
                        rep.input("n", n.to_string());
                        vec![*n]
                    }
                    None => {
                        let e = multiplicity(i.ring())? as u32;
                        rep.input("n", format!("1..={e}"));
                        (1..=e.max(1)).collect()
                    }
                };
                let mut found = None;
                for n in range {
                    if let Some(r) = find_reduction_element_seeded(&i, n, *attempts as usize, self.seed)? {
                        found = Some((n, r));
                        break;
                    }
                }
                rep.set("found", yes(found.is_some()));
                if let Some((n, r)) = found {
                    rep.set("n", n);
                    rep.set("attempt", r.attempt);
                    rep.witnesses.push(self.poly(&i, &r.y));
                }
            }
        }
        Ok(())
    }
}
