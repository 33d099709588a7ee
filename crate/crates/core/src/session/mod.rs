//! The session-file language: ring, ideal, and task declarations; a parser with
//! line/column diagnostics; a canonical printer; and a task runner producing text or
//! JSON reports.
//!
//! ```text
//! ring R { field = Q; vars = x, y, z; weights = 1, 1, 2; order = grevlex; quotient = z^2 }
//! ideal I in R = x^2, y^2, xy + z
//! ideal J in R = z
//! task ar { I = I, J = J, mode = table, nmax = 3 }
//! task example1 { n = 2, expect = (in: yes, out: no) }
//! ```

pub mod lexer;
pub mod poly;
mod parse;
mod print;
mod run;

use crate::coeff::Field;
use crate::polyring::{Polynomial, Ring};

pub use parse::parse_session;
pub use run::{run, ExitStatus, RunOptions, RunReport, Status, TaskReport};

#[derive(Debug, Clone, PartialEq)]
pub struct RingDecl {
    pub name: String,
    pub ring: Ring,
}

#[derive(Debug, Clone, PartialEq)]
pub struct IdealDecl {
    pub name: String,
    pub ring: String,
    pub gens: Vec<Polynomial>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArMode {
    Table { nmax: u32 },
    Strong { h: u32, n: u32 },
    Weak { h: u32, n: u32 },
}

#[derive(Debug, Clone, PartialEq)]
pub enum OpTask {
    Sum { i: String, j: String },
    Product { i: String, j: String },
    Power { i: String, n: u32 },
    Intersect { i: String, j: String },
    Colon { i: String, f: Polynomial },
    ColonIdeal { i: String, j: String },
    Saturate { i: String, j: String },
    Member { i: String, f: Polynomial },
    Equal { i: String, j: String },
    GradedDim { i: String, d: u64 },
    StdMonomials { i: String, d: u64 },
    MembershipTruncated { i: String, f: Polynomial, d: u64 },
}

#[derive(Debug, Clone, PartialEq)]
pub enum LemmaTask {
    /// `N₁ ∩ (N₂ + mⁿ) ⊆ (N₁ ∩ N₂) + m^{n-h}N₁`; with `h` absent, the least valid `h`.
    First { n1: String, n2: String, h: Option<u32>, n: u32 },
    /// Strong equality for `h < n ≤ nmax` with `h` defaulting to `reltype(I·R/J)`.
    Reltype { i: String, j: String, h: Option<u32>, nmax: u32 },
    /// Reduction element search at exponent `n`, or at `1..=e` when `n` is absent.
    Reduction { i: String, n: Option<u32>, attempts: u32 },
}

#[derive(Debug, Clone, PartialEq)]
pub enum TaskKind {
    Gb { i: String },
    Op(OpTask),
    Ar { i: String, j: String, mode: ArMode },
    Reltype { i: String },
    Bound { j: String },
    Example1 { n: u32, field: Field },
    Example2 { n: u32, field: Field },
    Lemma(LemmaTask),
}

impl TaskKind {
    pub fn keyword(&self) -> &'static str {
        match self {
            TaskKind::Gb { .. } => "gb",
            TaskKind::Op(_) => "op",
            TaskKind::Ar { .. } => "ar",
            TaskKind::Reltype { .. } => "reltype",
            TaskKind::Bound { .. } => "bound",
            TaskKind::Example1 { .. } => "example1",
            TaskKind::Example2 { .. } => "example2",
            TaskKind::Lemma(_) => "lemma-checks",
        }
    }
}

/// Expected facts, compared against the task's reported facts.
pub type Expect = Vec<(String, String)>;

#[derive(Debug, Clone, PartialEq)]
pub struct Task {
    pub name: Option<String>,
    pub kind: TaskKind,
    pub expect: Option<Expect>,
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct Session {
    pub rings: Vec<RingDecl>,
    pub ideals: Vec<IdealDecl>,
    pub tasks: Vec<Task>,
}

impl Session {
    pub fn ring(&self, name: &str) -> Option<&RingDecl> {
        self.rings.iter().find(|r| r.name == name)
    }

    pub fn ideal(&self, name: &str) -> Option<&IdealDecl> {
        self.ideals.iter().find(|i| i.name == name)
    }

    /// Report label of the `k`-th task (0-based): its `name`, else `kind-(k+1)`.
    pub fn label(&self, k: usize) -> String {
        let t = &self.tasks[k];
        t.name.clone().unwrap_or_else(|| format!("{}-{}", t.kind.keyword(), k + 1))
    }
}
