use std::fmt;

use crate::polyring::{OrderKind, Polynomial};

use super::{ArMode, LemmaTask, OpTask, Session, Task, TaskKind};

/// Canonical session text; parsing it back yields an equal [`Session`].
impl fmt::Display for Session {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in &self.rings {
            let ring = &r.ring;
            let base = ring.base();
            write!(f, "ring {} {{ field = {}; vars = {}", r.name, base.field(), base.vars().join(", "))?;
            if !base.has_unit_weights() {
                let ws: Vec<String> = base.weights().iter().map(|w| w.to_string()).collect();
                write!(f, "; weights = {}", ws.join(", "))?;
            }
            let order = match base.order_kind() {
                Some(OrderKind::Lex) => "lex",
                _ => "grevlex",
            };
            write!(f, "; order = {order}")?;
            if !ring.quotient().is_empty() {
                let q: Vec<String> = ring.quotient().iter().map(|p| base.display(p).to_string()).collect();
                write!(f, "; quotient = {}", q.join(", "))?;
            }
            writeln!(f, " }}")?;
        }
        for i in &self.ideals {
            let base = self.ring(&i.ring).unwrap().ring.base();
            let gens: Vec<String> = i.gens.iter().map(|g| base.display(g).to_string()).collect();
            let gens = if gens.is_empty() { "0".to_string() } else { gens.join(", ") };
            writeln!(f, "ideal {} in {} = {}", i.name, i.ring, gens)?;
        }
        for t in &self.tasks {
            writeln!(f, "{}", self.task_line(t))?;
        }
        Ok(())
    }
}

impl Session {
    fn poly_text(&self, ideal: &str, p: &Polynomial) -> String {
        let ring = &self.ideal(ideal).unwrap().ring;
        self.ring(ring).unwrap().ring.base().display(p).to_string()
    }

    fn task_line(&self, t: &Task) -> String {
        let mut kv: Vec<(String, String)> = Vec::new();
        let mut push = |k: &str, v: String| kv.push((k.to_string(), v));
        if let Some(n) = &t.name {
            push("name", n.clone());
        }
        match &t.kind {
            TaskKind::Gb { i } | TaskKind::Reltype { i } => push("I", i.clone()),
            TaskKind::Bound { j } => push("J", j.clone()),
            TaskKind::Op(op) => {
                let (name, i) = match op {
                    OpTask::Sum { i, .. } => ("sum", i),
                    OpTask::Product { i, .. } => ("product", i),
                    OpTask::Power { i, .. } => ("power", i),
                    OpTask::Intersect { i, .. } => ("intersect", i),
                    OpTask::Colon { i, .. } => ("colon", i),
                    OpTask::ColonIdeal { i, .. } => ("colon_ideal", i),
                    OpTask::Saturate { i, .. } => ("saturate", i),
                    OpTask::Member { i, .. } => ("member", i),
                    OpTask::Equal { i, .. } => ("equal", i),
                    OpTask::GradedDim { i, .. } => ("graded_dim", i),
                    OpTask::StdMonomials { i, .. } => ("std_monomials", i),
                    OpTask::MembershipTruncated { i, .. } => ("membership_truncated", i),
                };
                push("op", name.into());
                push("I", i.clone());
                match op {
                    OpTask::Sum { j, .. }
                    | OpTask::Product { j, .. }
                    | OpTask::Intersect { j, .. }
                    | OpTask::ColonIdeal { j, .. }
                    | OpTask::Saturate { j, .. }
                    | OpTask::Equal { j, .. } => push("J", j.clone()),
                    OpTask::Power { n, .. } => push("n", n.to_string()),
                    OpTask::Colon { f, .. } | OpTask::Member { f, .. } => push("f", self.poly_text(i, f)),
                    OpTask::GradedDim { d, .. } | OpTask::StdMonomials { d, .. } => push("d", d.to_string()),
                    OpTask::MembershipTruncated { f, d, .. } => {
                        push("f", self.poly_text(i, f));
                        push("d", d.to_string());
                    }
                }
            }
            TaskKind::Ar { i, j, mode } => {
                push("I", i.clone());
                push("J", j.clone());
                match mode {
                    ArMode::Table { nmax } => {
                        push("mode", "table".into());
                        push("nmax", nmax.to_string());
                    }
                    ArMode::Strong { h, n } | ArMode::Weak { h, n } => {
                        let m = if matches!(mode, ArMode::Strong { .. }) { "strong" } else { "weak" };
                        push("mode", m.into());
                        push("h", h.to_string());
                        push("n", n.to_string());
                    }
                }
            }
            TaskKind::Example1 { n, field } | TaskKind::Example2 { n, field } => {
                push("n", n.to_string());
                push("field", field.to_string());
            }
            TaskKind::Lemma(l) => match l {
                LemmaTask::First { n1, n2, h, n } => {
                    push("check", "first".into());
                    push("N1", n1.clone());
                    push("N2", n2.clone());
                    if let Some(h) = h {
                        push("h", h.to_string());
                    }
                    push("n", n.to_string());
                }
                LemmaTask::Reltype { i, j, h, nmax } => {
                    push("check", "reltype".into());
                    push("I", i.clone());
                    push("J", j.clone());
                    if let Some(h) = h {
                        push("h", h.to_string());
                    }
                    push("nmax", nmax.to_string());
                }
                LemmaTask::Reduction { i, n, attempts } => {
                    push("check", "reduction".into());
                    push("I", i.clone());
                    if let Some(n) = n {
                        push("n", n.to_string());
                    }
                    push("attempts", attempts.to_string());
                }
            },
        }
        if let Some(e) = &t.expect {
            let items: Vec<String> = e.iter().map(|(k, v)| format!("{k}: {v}")).collect();
            push("expect", format!("({})", items.join(", ")));
        }
        let body: Vec<String> = kv.into_iter().map(|(k, v)| format!("{k} = {v}")).collect();
        format!("task {} {{ {} }}", t.kind.keyword(), body.join(", "))
    }
}
