use std::collections::BTreeMap;

use num_bigint::BigInt;
use schubert_core::coincidence::chasles_count;
use schubert_core::dsl::{self, EvalError, ParseError};
use schubert_core::exactalg::AlgebraError;
use schubert_core::multipoint::{self, MultipointError};
use schubert_core::oracle::{
    chasles_diagonal_count, count_transversals, four_lines_instance, random_chasles_instance, ruling_instance,
    ruling_instance_seeded, trial_seed, OracleKind, PlueckerLine, Transversals,
};
use schubert_core::spaces::{self, make_space, verify_formulas_with, SpaceHandle, SpaceId};
use schubert_core::{Coefficient, Polynomial};

use crate::report::{CommandResult, ErrorInfo, FormulaRow, OracleReport, Side, TableRow, TangencyReport, Trial};

/// A failed command and its exit code.
#[derive(Debug)]
pub enum Failure {
    Parse { input: String, error: ParseError },
    UnknownSymbol(String),
    Codimension(String),
    Valuation(String),
    Usage(String),
    Internal(String),
}

impl Failure {
    pub fn exit_code(&self) -> i32 {
        match self {
            Failure::Parse { .. } | Failure::Usage(_) => 2,
            Failure::UnknownSymbol(_) => 3,
            Failure::Codimension(_) => 4,
            Failure::Valuation(_) => 5,
            Failure::Internal(_) => 1,
        }
    }

    fn kind(&self) -> &'static str {
        match self {
            Failure::Parse { .. } => "parse",
            Failure::UnknownSymbol(_) => "unknown_symbol",
            Failure::Codimension(_) => "codimension_mismatch",
            Failure::Valuation(_) => "unsupported_valuation",
            Failure::Usage(_) => "usage",
            Failure::Internal(_) => "internal",
        }
    }

    pub fn message(&self) -> String {
        match self {
            Failure::Parse { input, error } => {
                format!("{error}\n  {input}\n  {}^", " ".repeat(error.offset))
            }
            Failure::UnknownSymbol(m)
            | Failure::Codimension(m)
            | Failure::Valuation(m)
            | Failure::Usage(m)
            | Failure::Internal(m) => m.clone(),
        }
    }

    pub fn info(&self) -> ErrorInfo {
        let (message, offset) = match self {
            Failure::Parse { error, .. } => (error.to_string(), Some(error.offset)),
            other => (other.message(), None),
        };
        ErrorInfo { kind: self.kind().into(), message, offset, exit_code: self.exit_code() }
    }
}

impl From<AlgebraError> for Failure {
    fn from(e: AlgebraError) -> Self {
        Failure::Internal(e.to_string())
    }
}

impl From<MultipointError> for Failure {
    fn from(e: MultipointError) -> Self {
        match e {
            MultipointError::CodimensionMismatch { .. }
            | MultipointError::InvalidPairs(_)
            | MultipointError::ExtraHasMarkers => Failure::Codimension(e.to_string()),
            MultipointError::UnsupportedValuation { .. } => Failure::Valuation(e.to_string()),
            other => Failure::Internal(other.to_string()),
        }
    }
}

impl From<EvalError> for Failure {
    fn from(e: EvalError) -> Self {
        match e {
            EvalError::UnknownSymbol { .. } | EvalError::MarkerOutsideTangency(_) => {
                Failure::UnknownSymbol(e.to_string())
            }
            EvalError::Algebra(a) => a.into(),
            EvalError::Multipoint(m) => m.into(),
        }
    }
}

fn parse(text: &str) -> Result<dsl::Expr, Failure> {
    dsl::parse_expression(text).map_err(|error| Failure::Parse { input: text.into(), error })
}

fn evaluate(text: &str, space: &SpaceHandle) -> Result<Polynomial, Failure> {
    Ok(dsl::evaluate(&parse(text)?, space)?)
}

/// The count of a normal form when it is concentrated in the top degree.
fn top_count(space: &SpaceHandle, nf: &Polynomial) -> Result<Option<Coefficient>, Failure> {
    let top = space.presentation().top_degree();
    if nf.is_zero() || (nf.is_homogeneous() && nf.degree() == Some(top)) {
        Ok(Some(spaces::count(space, nf)?))
    } else {
        Ok(None)
    }
}

pub fn eval(result: &mut CommandResult, space: SpaceId, text: &str) -> Result<(), Failure> {
    let handle = make_space(space);
    result.space = Some(space.to_string());
    result.input = Some(text.into());
    let nf = evaluate(text, &handle)?;
    result.normal_form = Some(nf.to_string());
    match top_count(&handle, &nf)? {
        Some(c) => result.count = Some(c.to_string()),
        None => result
            .diagnostics
            .push(format!("not concentrated in the top degree {}; no count", handle.presentation().top_degree())),
    }
    Ok(())
}

pub fn check(result: &mut CommandResult, space: SpaceId, text: &str) -> Result<(), Failure> {
    let handle = make_space(space);
    result.space = Some(space.to_string());
    result.input = Some(text.into());
    let exprs = dsl::parse_identity(text).map_err(|error| Failure::Parse { input: text.into(), error })?;
    let mut sides = Vec::with_capacity(exprs.len());
    let mut values = Vec::with_capacity(exprs.len());
    for e in &exprs {
        let nf = dsl::evaluate(e, &handle)?;
        sides.push(Side { input: e.to_string(), normal_form: nf.to_string() });
        values.push(nf);
    }
    let pass = values.windows(2).all(|w| w[0] == w[1]);
    let difference = &values[0] - &values[values.len() - 1];
    result.normal_form = Some(handle.normal_form(&difference)?.to_string());
    result.sides = Some(sides);
    result.pass = Some(pass);
    Ok(())
}

/// A tampering directive `[SPACE:]SYM=EXPR`.
#[derive(Clone, Debug)]
pub struct Tamper {
    pub space: Option<SpaceId>,
    pub symbol: String,
    pub expr: String,
}

impl std::str::FromStr for Tamper {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let (target, expr) = s.split_once('=').ok_or("expected [SPACE:]SYM=EXPR")?;
        let (space, symbol) = match target.split_once(':') {
            Some((space, symbol)) => (Some(space.parse::<SpaceId>().map_err(|e| e.to_string())?), symbol),
            None => (None, target),
        };
        Ok(Self { space, symbol: symbol.trim().into(), expr: expr.trim().into() })
    }
}

fn tampered(id: SpaceId, tampers: &[Tamper]) -> Result<SpaceHandle, Failure> {
    let mut handle = make_space(id);
    for t in tampers {
        let applies = t.space.map_or(handle.symbols().get(&t.symbol).is_some(), |s| s == id);
        if applies {
            let value = evaluate(&t.expr, &handle)?;
            handle = handle.with_symbol(&t.symbol, value);
        }
    }
    Ok(handle)
}

pub fn formulas(result: &mut CommandResult, tampers: &[Tamper]) -> Result<(), Failure> {
    let mut handles = BTreeMap::new();
    for id in SpaceId::ALL {
        handles.insert(id.as_str(), tampered(id, tampers)?);
    }
    if !tampers.is_empty() {
        result.diagnostics.push(format!("symbol table tampered: {} directive(s)", tampers.len()));
    }
    let checks = verify_formulas_with(|id| handles[id.as_str()].clone());
    let passed = checks.iter().filter(|c| c.pass).count();
    result.pass = Some(passed == checks.len());
    result.count = Some(format!("{passed}/{}", checks.len()));
    result.formulas = Some(
        checks
            .into_iter()
            .map(|c| FormulaRow { id: c.id, space: c.space.to_string(), lhs: c.lhs, rhs: c.rhs, pass: c.pass })
            .collect(),
    );
    Ok(())
}

pub struct TangencyArgs {
    pub pairs: usize,
    pub extra: Option<String>,
    pub at: Option<i64>,
    pub table: Option<(i64, i64)>,
}

pub fn tangency(result: &mut CommandResult, args: &TangencyArgs) -> Result<(), Failure> {
    let extra_text = args.extra.clone().unwrap_or_else(|| "1".into());
    result.input = Some(extra_text.clone());
    let extra = dsl::evaluate_multipoint(&parse(&extra_text)?, 0)?;
    let t = multipoint::tangency(args.pairs, &extra)?;
    if args.pairs == 3 {
        result.diagnostics.push("three-pair counts have no independent closed form to compare against".into());
    }
    let row = |n: i64| TableRow { n, value: t.count.eval_i64(n).to_string() };
    let count = t.count.to_factored_string();
    result.count = Some(count.clone());
    result.tangency = Some(TangencyReport {
        pairs: args.pairs,
        extra: extra.to_string(),
        markers: t.expanded.markers(),
        expanded: t.expanded.to_string(),
        reduced: t.reduced.to_string(),
        reduced_symmetric: t.reduced.symmetrize().to_string(),
        valuation: t.valuation.to_string(),
        divisor: multipoint::factorial(args.pairs).to_string(),
        count,
        count_expanded: t.count.to_expanded_string(),
        numerator: t.count.numerator().to_string(),
        denominator: t.count.denominator().to_string(),
        at: args.at.map(row),
        table: args.table.map(|(a, b)| (a..=b).map(row).collect()),
    });
    Ok(())
}

#[derive(Clone, Copy, Debug)]
pub struct OracleArgs {
    pub kind: OracleKind,
    pub seed: Option<u64>,
    pub trials: u64,
    pub p: Option<usize>,
    pub q: Option<usize>,
}

fn rational_coords(line: &PlueckerLine) -> [String; 6] {
    line.normalized().coords().clone().map(|c| format!("{}/{}", c.numer(), c.denom()))
}

fn transversal_trial(index: u64, seed: Option<u64>, lines: &[PlueckerLine; 4]) -> Trial {
    let outcome = count_transversals(lines);
    let mut trial = Trial {
        index,
        seed,
        outcome: outcome.to_string(),
        multiplicities: None,
        transversals: None,
        lines: Some(lines.iter().map(rational_coords).collect()),
        coefficients: None,
        diagnostic: None,
    };
    match outcome {
        Transversals::Finite { multiplicities, lines, .. } => {
            trial.multiplicities = Some(multiplicities);
            trial.transversals = Some(lines.iter().map(rational_coords).collect());
        }
        Transversals::Infinite { diagnostic } => trial.diagnostic = Some(diagnostic),
    }
    trial
}

pub fn oracle(result: &mut CommandResult, args: OracleArgs) -> Result<(), Failure> {
    let base = args.seed.unwrap_or(0);
    let (expected, trials): (String, Vec<Trial>) = match args.kind {
        OracleKind::FourLines => {
            let trials = (0..args.trials)
                .map(|i| {
                    let seed = trial_seed(base, i);
                    transversal_trial(i, Some(seed), &four_lines_instance(seed))
                })
                .collect();
            ("Finite(2)".into(), trials)
        }
        OracleKind::FourLinesRuling => {
            let trials = (0..args.trials)
                .map(|i| match args.seed {
                    Some(s) => {
                        let seed = trial_seed(s, i);
                        transversal_trial(i, Some(seed), &ruling_instance_seeded(seed))
                    }
                    None => transversal_trial(i, None, &ruling_instance()),
                })
                .collect();
            ("Infinite".into(), trials)
        }
        OracleKind::Chasles => {
            let (p, q) = match (args.p, args.q) {
                (Some(p), Some(q)) => (p, q),
                _ => return Err(Failure::Usage("chasles needs --p and --q".into())),
            };
            let ring = chasles_count(p as u64, q as u64);
            let trials = (0..args.trials)
                .map(|i| {
                    let seed = trial_seed(base, i);
                    let instance = random_chasles_instance(p, q, seed);
                    Trial {
                        index: i,
                        seed: Some(seed),
                        outcome: chasles_diagonal_count(&instance).to_string(),
                        multiplicities: None,
                        transversals: None,
                        lines: None,
                        coefficients: Some(
                            instance.coeffs.iter().map(|row| row.iter().map(BigInt::to_string).collect()).collect(),
                        ),
                        diagnostic: None,
                    }
                })
                .collect();
            (format!("Finite({ring})"), trials)
        }
    };
    let mut aggregate = BTreeMap::new();
    for t in &trials {
        *aggregate.entry(t.outcome.clone()).or_insert(0) += 1;
    }
    result.pass = Some(trials.iter().all(|t| t.outcome == expected));
    result.count = Some(expected.clone());
    result.oracle = Some(OracleReport {
        kind: args.kind.as_str().into(),
        seed: args.seed,
        trials: args.trials,
        p: args.p,
        q: args.q,
        expected,
        results: trials,
        aggregate,
    });
    Ok(())
}
