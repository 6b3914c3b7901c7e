use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::Serialize;

/// The result of one invocation. Every key is always present; keys that do
/// not apply to a command are `null`.
#[derive(Debug, Default, Serialize)]
pub struct CommandResult {
    pub command: String,
    pub argv: Vec<String>,
    pub space: Option<String>,
    pub input: Option<String>,
    pub normal_form: Option<String>,
    pub count: Option<String>,
    pub pass: Option<bool>,
    pub sides: Option<Vec<Side>>,
    pub formulas: Option<Vec<FormulaRow>>,
    pub tangency: Option<TangencyReport>,
    pub oracle: Option<OracleReport>,
    pub diagnostics: Vec<String>,
    pub error: Option<ErrorInfo>,
    pub elapsed_us: Option<u64>,
}

#[derive(Debug, Serialize)]
pub struct Side {
    pub input: String,
    pub normal_form: String,
}

#[derive(Debug, Serialize)]
pub struct FormulaRow {
    pub id: String,
    pub space: String,
    pub lhs: String,
    pub rhs: String,
    pub pass: bool,
}

#[derive(Debug, Serialize)]
pub struct TangencyReport {
    pub pairs: usize,
    pub extra: String,
    pub markers: usize,
    pub expanded: String,
    pub reduced: String,
    pub reduced_symmetric: String,
    pub valuation: String,
    pub divisor: String,
    pub count: String,
    pub count_expanded: String,
    pub numerator: String,
    pub denominator: String,
    pub at: Option<TableRow>,
    pub table: Option<Vec<TableRow>>,
}

#[derive(Debug, Clone, Serialize)]
pub struct TableRow {
    pub n: i64,
    pub value: String,
}

#[derive(Debug, Serialize)]
pub struct OracleReport {
    pub kind: String,
    pub seed: Option<u64>,
    pub trials: u64,
    pub p: Option<usize>,
    pub q: Option<usize>,
    pub expected: String,
    pub results: Vec<Trial>,
    pub aggregate: BTreeMap<String, u64>,
}

#[derive(Debug, Serialize)]
pub struct Trial {
    pub index: u64,
    pub seed: Option<u64>,
    pub outcome: String,
    pub multiplicities: Option<Vec<u32>>,
    pub transversals: Option<Vec<[String; 6]>>,
    pub lines: Option<Vec<[String; 6]>>,
    pub coefficients: Option<Vec<Vec<String>>>,
    pub diagnostic: Option<String>,
}

#[derive(Debug, Serialize)]
pub struct ErrorInfo {
    pub kind: String,
    pub message: String,
    pub offset: Option<usize>,
    pub exit_code: i32,
}

impl CommandResult {
    pub fn new(command: &str, argv: &[String]) -> Self {
        Self { command: command.into(), argv: argv.to_vec(), ..Self::default() }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let mut line = |key: &str, value: &str| {
            let _ = writeln!(out, "{:<16}{value}", format!("{key}:"));
        };
        if let Some(s) = &self.space {
            line("space", s);
        }
        if let Some(s) = &self.input {
            line("input", s);
        }
        if let Some(sides) = &self.sides {
            for (i, side) in sides.iter().enumerate() {
                line(&format!("side {}", i + 1), &format!("{}  ->  {}", side.input, side.normal_form));
            }
        }
        if let Some(s) = &self.normal_form {
            line("normal form", s);
        }
        if let Some(t) = &self.tangency {
            line("pairs", &t.pairs.to_string());
            line("extra", &t.extra);
            line("expanded", &t.expanded);
            line("reduced", &t.reduced_symmetric);
            line("valuation", &t.valuation);
            line("divisor", &t.divisor);
        }
        if let Some(s) = &self.count {
            line("count", s);
        }
        if let Some(t) = &self.tangency {
            line("expanded form", &t.count_expanded);
            if let Some(at) = &t.at {
                line(&format!("at n = {}", at.n), &at.value);
            }
        }
        if let Some(rows) = &self.formulas {
            for r in rows {
                let _ = writeln!(
                    out,
                    "{:<4} {:<6} {:<6} {} = {}",
                    r.id,
                    r.space,
                    if r.pass { "pass" } else { "FAIL" },
                    r.lhs,
                    r.rhs
                );
            }
            let passed = rows.iter().filter(|r| r.pass).count();
            let _ = writeln!(out, "{passed}/{} pass", rows.len());
        }
        if let Some(o) = &self.oracle {
            render_oracle(&mut out, o);
        }
        if self.formulas.is_none() {
            if let Some(pass) = self.pass {
                let _ = writeln!(out, "{:<16}{}", "result:", if pass { "pass" } else { "fail" });
            }
        }
        for d in &self.diagnostics {
            let _ = writeln!(out, "note: {d}");
        }
        if let Some(us) = self.elapsed_us {
            let _ = writeln!(out, "{:<16}{us} us", "elapsed:");
        }
        out
    }
}

fn render_oracle(out: &mut String, o: &OracleReport) {
    let _ = write!(out, "oracle {}: {} trial(s)", o.kind, o.trials);
    if let Some(seed) = o.seed {
        let _ = write!(out, ", seed {seed}");
    }
    if let (Some(p), Some(q)) = (o.p, o.q) {
        let _ = write!(out, ", bidegree ({p},{q})");
    }
    let _ = writeln!(out, ", expected {}", o.expected);
    for t in &o.results {
        let _ = write!(out, "trial {}", t.index);
        if let Some(seed) = t.seed {
            let _ = write!(out, " (seed {seed})");
        }
        let _ = write!(out, ": {}", t.outcome);
        if let Some(m) = &t.multiplicities {
            let m: Vec<String> = m.iter().map(u32::to_string).collect();
            let _ = write!(out, " multiplicities [{}]", m.join(","));
        }
        if let Some(lines) = &t.transversals {
            for l in lines {
                let _ = write!(out, " [{}]", l.join(":"));
            }
        }
        let _ = writeln!(out);
    }
    let summary: Vec<String> = o.aggregate.iter().map(|(k, v)| format!("{k} x{v}")).collect();
    let _ = writeln!(out, "aggregate: {}", summary.join(", "));
}
