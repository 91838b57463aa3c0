//! Command-line front end: input parsing, dispatch and report rendering.
//!
//! Input is a JSON object (or an array of them for `compare`):
//!
//! ```json
//! {"generators": [[2,0],[3,0],[0,1]], "label": "cusp-line", "degree": 6,
//!  "derivations": [[[[-1,1], 1, 1, 1]], [[[1,-1], 2, 1, 1]]]}
//! ```
//!
//! A derivation is a list of `[lambda, axis, numerator, denominator]`
//! terms with a 1-based axis.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use num_bigint::BigInt;
use serde::Deserialize;
use serde_json::{json, Value};
use thiserror::Error;

use crate::classify::{self, Status, Verdict};
use crate::error::Error;
use crate::liealg::{self, Derivation};
use crate::reconstruct;
use crate::roots::{self, RootKind};
use crate::semigroup::{same_set, AffineSemigroup};
use crate::vector::IntVector;
use crate::{corpus, Rational};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("invalid input: {0}")]
    Validation(#[from] Error),
    #[error("unknown command `{0}`")]
    UnknownCommand(String),
    #[error("{0}")]
    Usage(String),
}

pub type Term = (Vec<i64>, usize, i64, i64);

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InputSpec {
    pub generators: Vec<Vec<i64>>,
    #[serde(default)]
    pub label: Option<String>,
    #[serde(default)]
    pub degree: Option<i64>,
    #[serde(default)]
    pub bound: Option<i64>,
    #[serde(default)]
    pub derivations: Vec<Vec<Term>>,
}

impl InputSpec {
    pub fn from_semigroup(s: &AffineSemigroup, label: Option<&str>) -> Self {
        InputSpec {
            generators: s.generators().iter().map(|g| g.entries().to_vec()).collect(),
            label: label.map(str::to_string),
            degree: None,
            bound: None,
            derivations: Vec::new(),
        }
    }

    pub fn semigroup(&self) -> Result<AffineSemigroup, CliError> {
        Ok(AffineSemigroup::new(
            self.generators.iter().cloned().map(IntVector::new).collect(),
        )?)
    }

    fn derivation(&self, k: usize, n: usize) -> Result<Derivation<Rational>, CliError> {
        let terms = self
            .derivations
            .get(k)
            .ok_or_else(|| CliError::Usage(format!("input needs at least {} derivation(s)", k + 1)))?;
        let mut out = Vec::new();
        for (lambda, axis, num, den) in terms {
            if *den == 0 {
                return Err(CliError::Usage("zero denominator in derivation term".into()));
            }
            if *axis == 0 || *axis > n {
                return Err(Error::AxisOutOfRange { axis: *axis, n }.into());
            }
            let c = Rational::new(BigInt::from(*num), BigInt::from(*den));
            out.push((IntVector::new(lambda.clone()), axis - 1, c));
        }
        Ok(Derivation::from_terms(n, out)?)
    }
}

fn syntax(e: serde_json::Error) -> CliError {
    CliError::Syntax {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    }
}

/// Parses and validates one input document.
pub fn parse_input(text: &str) -> Result<InputSpec, CliError> {
    let spec: InputSpec = serde_json::from_str(text).map_err(syntax)?;
    spec.semigroup()?;
    Ok(spec)
}

/// One object, or an array of objects.
pub fn parse_inputs(text: &str) -> Result<Vec<InputSpec>, CliError> {
    let value: Value = serde_json::from_str(text).map_err(syntax)?;
    let specs: Vec<InputSpec> = match value {
        Value::Array(items) => items
            .into_iter()
            .map(serde_json::from_value)
            .collect::<Result<_, _>>()
            .map_err(syntax)?,
        v => vec![serde_json::from_value(v).map_err(syntax)?],
    };
    for s in &specs {
        s.semigroup()?;
    }
    Ok(specs)
}

/// `--gens` value: a corpus name, a JSON generator list or input object, or
/// rows separated by `;` with entries separated by `,` (`"2,0;3,0;0,1"`).
pub fn parse_gens(text: &str) -> Result<InputSpec, CliError> {
    let text = text.trim();
    if let Some(s) = corpus::by_name(text) {
        return Ok(InputSpec::from_semigroup(&s, Some(text)));
    }
    if text.starts_with('{') {
        return parse_input(text);
    }
    let generators: Vec<Vec<i64>> = if text.starts_with('[') {
        serde_json::from_str(text).map_err(syntax)?
    } else {
        text.split(';')
            .map(|row| {
                row.split(',')
                    .map(|x| x.trim().parse::<i64>())
                    .collect::<Result<Vec<_>, _>>()
                    .map_err(|e| CliError::Usage(format!("bad generator row `{row}`: {e}")))
            })
            .collect::<Result<_, _>>()?
    };
    let spec = InputSpec {
        generators,
        label: None,
        degree: None,
        bound: None,
        derivations: Vec::new(),
    };
    spec.semigroup()?;
    Ok(spec)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Command {
    Classify,
    Roots,
    Exceptional,
    Bracket,
    Member,
    Cocycle,
    Fingerprint,
    Compare,
    Reconstruct,
}

impl Command {
    pub const ALL: [Command; 9] = [
        Command::Classify,
        Command::Roots,
        Command::Exceptional,
        Command::Bracket,
        Command::Member,
        Command::Cocycle,
        Command::Fingerprint,
        Command::Compare,
        Command::Reconstruct,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Command::Classify => "classify",
            Command::Roots => "roots",
            Command::Exceptional => "exceptional",
            Command::Bracket => "bracket",
            Command::Member => "member",
            Command::Cocycle => "cocycle",
            Command::Fingerprint => "fingerprint",
            Command::Compare => "compare",
            Command::Reconstruct => "reconstruct",
        }
    }
}

impl FromStr for Command {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, CliError> {
        Command::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| CliError::UnknownCommand(s.to_string()))
    }
}

impl fmt::Display for Command {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, Default)]
pub struct Options {
    pub degree: Option<i64>,
    pub bound: Option<i64>,
    /// 1-based.
    pub axis: Option<usize>,
    pub strict: bool,
    pub reproducible: bool,
}

/// Outcome of one command. `decision` is the status the exit code is
/// derived from, for commands that answer a yes/no question.
#[derive(Clone, Debug)]
pub struct Report {
    pub command: Command,
    pub input: Vec<Value>,
    pub bounds: Value,
    pub result: Value,
    pub stabilized: bool,
    pub timing_ms: Option<u128>,
    pub decision: Option<Status>,
    pub summary: Vec<String>,
}

impl Report {
    pub fn to_json(&self) -> Value {
        let mut v = json!({
            "command": self.command.name(),
            "input": if self.input.len() == 1 { self.input[0].clone() } else { Value::Array(self.input.clone()) },
            "bounds": self.bounds,
            "result": self.result,
            "stabilized": self.stabilized,
        });
        if let Some(t) = self.timing_ms {
            v["timing_ms"] = json!(t);
        }
        v
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let labels: Vec<String> = self
            .input
            .iter()
            .map(|i| match i["label"].as_str() {
                Some(l) => format!("{l} {}", i["semigroup"].as_str().unwrap_or("")),
                None => i["semigroup"].as_str().unwrap_or("").to_string(),
            })
            .collect();
        out.push_str(&format!("{} {}\n", self.command, labels.join(" vs ")));
        let bounds: Vec<String> = self
            .bounds
            .as_object()
            .map(|m| m.iter().map(|(k, v)| format!("{k}={v}")).collect())
            .unwrap_or_default();
        let bounds = if bounds.is_empty() {
            "none".to_string()
        } else {
            bounds.join(", ")
        };
        out.push_str(&format!("bounds: {bounds}; stabilized: {}\n", self.stabilized));
        for line in &self.summary {
            out.push_str(line);
            out.push('\n');
        }
        if let Some(t) = self.timing_ms {
            out.push_str(&format!("time: {t} ms\n"));
        }
        out
    }

    /// 0 on success; under `strict`, 1 for a definite No and 3 for
    /// `UnknownUpToBound`.
    pub fn exit_code(&self, strict: bool) -> i32 {
        match (strict, self.decision) {
            (true, Some(Status::No)) => 1,
            (true, Some(Status::UnknownUpToBound)) => 3,
            _ => 0,
        }
    }
}

fn input_summary(spec: &InputSpec, s: &AffineSemigroup) -> Value {
    let mut v = json!({
        "dimension": s.dim(),
        "generators": s.generators(),
        "semigroup": s.to_string(),
    });
    if let Some(l) = &spec.label {
        v["label"] = json!(l);
    }
    v
}

fn q(x: &Rational) -> String {
    x.to_string()
}

fn kind_name(k: RootKind) -> String {
    match k {
        RootKind::Ordinary => "ordinary".into(),
        RootKind::Exceptional(i) => format!("exceptional({})", i + 1),
        RootKind::Mixed => "mixed".into(),
        RootKind::Empty => "empty".into(),
    }
}

fn derivation_json(d: &Derivation<Rational>) -> Value {
    Value::Array(
        d.terms()
            .map(|(l, i, c)| json!([l, i + 1, c.numer().to_string(), c.denom().to_string()]))
            .collect(),
    )
}

fn verdict_line(name: &str, v: &Verdict) -> String {
    let mut line = format!("{name}: {} (bound {})", v.status, v.bound);
    if let Some(w) = v.witness() {
        line.push_str(&format!(", witness {w}"));
    }
    line
}

fn status_of(b: bool) -> Status {
    if b {
        Status::Yes
    } else {
        Status::No
    }
}

fn list<T: fmt::Display>(items: &[T]) -> String {
    let parts: Vec<String> = items.iter().map(T::to_string).collect();
    format!("{{{}}}", parts.join(", "))
}

pub fn run_command(cmd: Command, specs: &[InputSpec], opts: &Options) -> Result<Report, CliError> {
    let start = Instant::now();
    let wanted = if cmd == Command::Compare { 2 } else { 1 };
    if specs.len() != wanted {
        return Err(CliError::Usage(format!(
            "`{cmd}` takes {wanted} semigroup(s), got {}",
            specs.len()
        )));
    }
    let sgs: Vec<AffineSemigroup> = specs.iter().map(InputSpec::semigroup).collect::<Result<_, _>>()?;
    let spec = &specs[0];
    let s = &sgs[0];
    let n = s.dim();
    let degree = |default: i64| opts.degree.or(spec.degree).unwrap_or(default);
    let axis = match opts.axis {
        Some(a) if a == 0 || a > n => return Err(Error::AxisOutOfRange { axis: a, n }.into()),
        a => a,
    };

    let mut decision = None;
    let mut summary = Vec::new();
    let (bounds, result, stabilized) = match cmd {
        Command::Classify => {
            let bound = opts.bound.or(spec.bound).unwrap_or_else(|| classify::default_bound(s));
            let r = classify::classify(s, bound)?;
            summary.push(format!("standard simplicial: {}", r.standard.is_standard_simplicial()));
            summary.push(verdict_line("cohen-macaulay", &r.cohen_macaulay));
            summary.push(verdict_line("buchsbaum", &r.buchsbaum));
            summary.push(format!("S' \\ S: {}", list(&r.s_prime_minus_s)));
            summary.push(format!("S~ \\ S: {}", list(&r.s_tilde_minus_s)));
            if let Some(g) = r.gorenstein {
                summary.push(format!("gorenstein: {g}"));
            }
            if let Some(t) = r.cm_type {
                summary.push(format!("cm type: {t}"));
            }
            decision = Some(r.cohen_macaulay.status);
            let stab = r.stabilized;
            (
                json!({ "bound": bound }),
                serde_json::to_value(&r).expect("serializable"),
                stab,
            )
        }
        Command::Roots => {
            let degree = degree(6);
            let bound = opts
                .bound
                .or(spec.bound)
                .unwrap_or_else(|| roots::default_root_bound(s, degree));
            let t = roots::roots_up_to(s, degree, bound)?;
            let rows: Vec<Value> = t
                .entries
                .values()
                .map(|r| {
                    let basis: Vec<Vec<String>> = r.space.basis().iter().map(|b| b.iter().map(q).collect()).collect();
                    json!({
                        "lambda": r.lambda,
                        "dim": r.dim(),
                        "kind": kind_name(r.kind),
                        "basis": basis,
                        "stabilized": r.stabilized,
                    })
                })
                .collect();
            for r in t.entries.values() {
                summary.push(format!("{}: dim {} {}", r.lambda, r.dim(), kind_name(r.kind)));
            }
            let result = json!({
                "roots": rows,
                "negative_degree_root": t.has_negative_degree_root(),
            });
            (json!({ "degree": degree, "bound": bound }), result, t.all_stabilized())
        }
        Command::Exceptional => {
            let degree = degree(6);
            let axes: Vec<usize> = match axis {
                Some(a) => vec![a - 1],
                None => (0..n).collect(),
            };
            let mut per_axis = Vec::new();
            for i in axes {
                let e = roots::exceptional_roots(s, i, degree)?;
                let g = roots::exceptional_generators(s, i, degree)?;
                summary.push(format!("axis {}: generators {}; roots {}", i + 1, list(&g), list(&e)));
                per_axis.push(json!({ "axis": i + 1, "roots": e, "generators": g }));
            }
            let result = if per_axis.len() == 1 {
                per_axis.remove(0)
            } else {
                json!({ "axes": per_axis })
            };
            (json!({ "degree": degree }), result, true)
        }
        Command::Bracket => {
            let x = spec.derivation(0, n)?;
            let y = spec.derivation(1, n)?;
            let z = x.bracket(&y)?;
            summary.push(format!("[{x}, {y}] = {z}"));
            let result = json!({ "x": derivation_json(&x), "y": derivation_json(&y), "bracket": derivation_json(&z) });
            (json!({}), result, true)
        }
        Command::Member => {
            let d = spec.derivation(0, n)?;
            let top = d.terms().map(|(l, _, _)| l.degree()).max().unwrap_or(0);
            let bound = opts
                .bound
                .or(spec.bound)
                .unwrap_or_else(|| roots::default_root_bound(s, top));
            let v = liealg::member_of_theta(s, &d, bound)?;
            summary.push(format!("derivation: {d}"));
            let mut line = verdict_line("member of theta", &v);
            if let Some(r) = &v.root {
                line.push_str(&format!(", root {r}"));
            }
            summary.push(line);
            decision = Some(v.status);
            (
                json!({ "bound": bound }),
                json!({ "derivation": derivation_json(&d), "verdict": v }),
                true,
            )
        }
        Command::Cocycle => {
            let degree = degree(8);
            let sol = liealg::degree0_derivation_space(s, degree)?;
            summary.push(format!(
                "solution dim {}, inner dim {}; restricted to |lambda| <= {}: {} vs {}",
                sol.solution_dim(),
                sol.inner_dim(),
                sol.restricted_degree,
                sol.restricted_solution_dim,
                sol.restricted_inner_dim
            ));
            summary.push(format!("restricted equal: {}", sol.restricted_equal));
            decision = Some(status_of(sol.restricted_equal));
            let result = json!({
                "unknowns": sol.unknown_index.len(),
                "equations": sol.equation_count,
                "rank": sol.rank,
                "solution_dim": sol.solution_dim(),
                "inner_dim": sol.inner_dim(),
                "inner_contained": sol.inner_contained(),
                "restricted_degree": sol.restricted_degree,
                "restricted_solution_dim": sol.restricted_solution_dim,
                "restricted_inner_dim": sol.restricted_inner_dim,
                "restricted_equal": sol.restricted_equal,
            });
            let bound = roots::default_root_bound(s, degree);
            (
                json!({ "degree": degree, "root_bound": bound }),
                result,
                sol.roots_stabilized,
            )
        }
        Command::Fingerprint => {
            let degree = degree(6);
            let f = reconstruct::fingerprint(s, degree)?;
            let ordinary: Vec<IntVector> = reconstruct::ordinary_from_fingerprint(&f).into_iter().collect();
            for (l, d) in &f.dims {
                summary.push(format!("{l}: {d}"));
            }
            summary.push(format!("full-rank roots: {}", list(&ordinary)));
            let result = json!({ "dims": f.dims, "ordinary": ordinary });
            let bound = roots::default_root_bound(s, degree);
            (json!({ "degree": degree, "root_bound": bound }), result, f.stabilized)
        }
        Command::Compare => {
            let degree = degree(6);
            let f1 = reconstruct::fingerprint(&sgs[0], degree)?;
            let f2 = reconstruct::fingerprint(&sgs[1], degree)?;
            if sgs[0].dim() != sgs[1].dim() {
                return Err(Error::DimensionMismatch {
                    expected: sgs[0].dim(),
                    found: sgs[1].dim(),
                }
                .into());
            }
            let equal = reconstruct::fingerprints_equal(&f1, &f2)?;
            let same = same_set(&sgs[0], &sgs[1]);
            summary.push(format!("fingerprints equal: {equal}; semigroups equal: {same}"));
            decision = Some(status_of(equal));
            let bounds = json!({
                "degree": degree,
                "root_bound": [roots::default_root_bound(&sgs[0], degree), roots::default_root_bound(&sgs[1], degree)],
            });
            (
                bounds,
                json!({ "fingerprints_equal": equal, "semigroups_equal": same }),
                f1.stabilized && f2.stabilized,
            )
        }
        Command::Reconstruct => {
            let r = reconstruct::gorenstein_reconstruct(s)?;
            let p = r.numerical_profile()?;
            summary.push(format!("S = {r}, frobenius {}", p.frobenius));
            let gens: Vec<i64> = r.generators().iter().map(|g| g[0]).collect();
            (
                json!({}),
                json!({ "generators": gens, "frobenius": p.frobenius, "conductor": p.conductor }),
                true,
            )
        }
    };
    Ok(Report {
        command: cmd,
        input: specs.iter().zip(&sgs).map(|(sp, s)| input_summary(sp, s)).collect(),
        bounds,
        result,
        stabilized,
        timing_ms: (!opts.reproducible).then(|| start.elapsed().as_millis()),
        decision,
        summary,
    })
}
