//! Verification reports and their JSON/CSV forms.

use std::fmt;
use std::io::{Read, Write};
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use serde_json::Value;
use thiserror::Error;

use crate::gt::{ClassificationTable, StateRow};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Error)]
pub enum ReportError {
    #[error("check {0} failed without a witness")]
    MissingWitness(String),
    #[error("unknown format {0:?} (expected json or csv)")]
    UnknownFormat(String),
    #[error("malformed {what}: {detail}")]
    Malformed { what: &'static str, detail: String },
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Csv(#[from] csv::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Anomaly,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Anomaly => "anomaly",
        })
    }
}

impl FromStr for Status {
    type Err = ReportError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "pass" => Ok(Status::Pass),
            "fail" => Ok(Status::Fail),
            "anomaly" => Ok(Status::Anomaly),
            _ => Err(ReportError::Malformed { what: "status", detail: s.to_string() }),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Check {
    pub id: String,
    pub status: Status,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Value>,
}

impl Check {
    pub fn pass(id: impl Into<String>) -> Self {
        Check { id: id.into(), status: Status::Pass, witness: None }
    }

    /// Pass or fail on `ok`; the witness is kept either way.
    pub fn from_bool(id: impl Into<String>, ok: bool, witness: impl Serialize) -> Self {
        Check {
            id: id.into(),
            status: if ok { Status::Pass } else { Status::Fail },
            witness: Some(to_value(witness)),
        }
    }

    pub fn anomaly(id: impl Into<String>, witness: impl Serialize) -> Self {
        Check { id: id.into(), status: Status::Anomaly, witness: Some(to_value(witness)) }
    }

    pub fn with_witness(mut self, witness: impl Serialize) -> Self {
        self.witness = Some(to_value(witness));
        self
    }
}

fn to_value(w: impl Serialize) -> Value {
    serde_json::to_value(w).unwrap_or_else(|e| Value::String(format!("unserializable witness: {}", e)))
}

fn nonempty(v: &Option<Value>) -> bool {
    match v {
        None | Some(Value::Null) => false,
        Some(Value::String(s)) => !s.is_empty(),
        Some(Value::Array(a)) => !a.is_empty(),
        Some(Value::Object(o)) => !o.is_empty(),
        Some(_) => true,
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub schema_version: u32,
    pub suite: String,
    pub checks: Vec<Check>,
    pub wall_time_ms: u64,
}

impl VerificationReport {
    pub fn new(suite: impl Into<String>) -> Self {
        VerificationReport { schema_version: SCHEMA_VERSION, suite: suite.into(), checks: Vec::new(), wall_time_ms: 0 }
    }

    pub fn push(&mut self, c: Check) {
        self.checks.push(c);
    }

    pub fn extend(&mut self, cs: impl IntoIterator<Item = Check>) {
        self.checks.extend(cs);
    }

    /// Sorts checks by id and verifies that every failure has a witness.
    pub fn finish(mut self, started: std::time::Instant) -> Result<Self, ReportError> {
        self.wall_time_ms = started.elapsed().as_millis() as u64;
        self.checks.sort_by(|a, b| a.id.cmp(&b.id));
        self.validate()?;
        Ok(self)
    }

    pub fn validate(&self) -> Result<(), ReportError> {
        match self.checks.iter().find(|c| c.status == Status::Fail && !nonempty(&c.witness)) {
            Some(c) => Err(ReportError::MissingWitness(c.id.clone())),
            None => Ok(()),
        }
    }

    pub fn count(&self, s: Status) -> usize {
        self.checks.iter().filter(|c| c.status == s).count()
    }

    pub fn passed(&self) -> bool {
        self.count(Status::Fail) == 0
    }

    pub fn check(&self, id: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.id == id)
    }

    /// Checks whose id starts with `prefix`.
    pub fn matching<'a>(&'a self, prefix: &'a str) -> impl Iterator<Item = &'a Check> + 'a {
        self.checks.iter().filter(move |c| c.id.starts_with(prefix))
    }

    pub fn merge(&mut self, other: VerificationReport) {
        self.checks.extend(other.checks);
        self.wall_time_ms += other.wall_time_ms;
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Json,
    Csv,
}

impl FromStr for Format {
    type Err = ReportError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            _ => Err(ReportError::UnknownFormat(s.to_string())),
        }
    }
}

#[derive(Debug, Serialize, Deserialize)]
struct ReportRow {
    schema_version: u32,
    suite: String,
    wall_time_ms: u64,
    id: String,
    status: Status,
    witness: String,
}

pub fn write_report<W: Write>(r: &VerificationReport, format: Format, mut w: W) -> Result<(), ReportError> {
    match format {
        Format::Json => {
            serde_json::to_writer_pretty(&mut w, r)?;
            writeln!(w)?;
        }
        Format::Csv => {
            let mut out = csv::Writer::from_writer(w);
            for c in &r.checks {
                out.serialize(ReportRow {
                    schema_version: r.schema_version,
                    suite: r.suite.clone(),
                    wall_time_ms: r.wall_time_ms,
                    id: c.id.clone(),
                    status: c.status,
                    witness: c.witness.as_ref().map(|v| v.to_string()).unwrap_or_default(),
                })?;
            }
            out.flush()?;
        }
    }
    Ok(())
}

/// Inverse of [`write_report`]. A CSV report without checks has no rows and
/// cannot carry its suite name, so it reads back with an empty suite.
pub fn read_report<R: Read>(format: Format, r: R) -> Result<VerificationReport, ReportError> {
    match format {
        Format::Json => Ok(serde_json::from_reader(r)?),
        Format::Csv => {
            let mut rep = VerificationReport::new("");
            for (i, row) in csv::Reader::from_reader(r).deserialize::<ReportRow>().enumerate() {
                let row = row?;
                if i == 0 {
                    rep.schema_version = row.schema_version;
                    rep.suite = row.suite.clone();
                    rep.wall_time_ms = row.wall_time_ms;
                }
                let witness = if row.witness.is_empty() { None } else { Some(serde_json::from_str(&row.witness)?) };
                rep.checks.push(Check { id: row.id, status: row.status, witness });
            }
            Ok(rep)
        }
    }
}

/// One represented generator in the matrix export: nonzero entries as
/// `[row, col, value]` triples.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GeneratorMatrix {
    pub i: i32,
    pub j: i32,
    pub entries: Vec<(usize, usize, crate::arith::QuadScalar)>,
}

/// Matrix export of a representation's generator map.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GeneratorMap {
    pub representation: String,
    pub dim: usize,
    pub generators: Vec<GeneratorMatrix>,
}

impl GeneratorMap {
    pub fn new(representation: impl Into<String>, alg: &crate::lie::OrthogonalAlgebra, mats: &[crate::arith::SparseMatrix]) -> Self {
        let generators = alg
            .generators()
            .iter()
            .zip(mats)
            .map(|(g, m)| GeneratorMatrix {
                i: g.i,
                j: g.j,
                entries: (0..m.rows()).flat_map(|r| m.row(r).iter().map(move |(c, x)| (r, *c, x.clone()))).collect(),
            })
            .collect();
        GeneratorMap { representation: representation.into(), dim: mats.first().map_or(0, |m| m.rows()), generators }
    }
}

pub fn write_table<W: Write>(t: &ClassificationTable, format: Format, mut w: W) -> Result<(), ReportError> {
    match format {
        Format::Json => {
            serde_json::to_writer_pretty(&mut w, t)?;
            writeln!(w)?;
        }
        Format::Csv => {
            let mut out = csv::Writer::from_writer(w);
            out.write_record(["lambda1", "lambda2", "T", "tau0", "N", "k", "case", "sigma", "slice_dim"])?;
            for s in &t.states {
                out.write_record([
                    t.weight[0].to_string(),
                    t.weight[1].to_string(),
                    s.t.to_string(),
                    s.tau0.to_string(),
                    s.n.to_string(),
                    s.k.to_string(),
                    s.case.clone(),
                    s.sigma.to_string(),
                    s.slice_dim.to_string(),
                ])?;
            }
            out.flush()?;
        }
    }
    Ok(())
}

pub fn read_table<R: Read>(format: Format, r: R) -> Result<ClassificationTable, ReportError> {
    match format {
        Format::Json => Ok(serde_json::from_reader(r)?),
        Format::Csv => {
            let mut weight = None;
            let mut states = Vec::new();
            for rec in csv::Reader::from_reader(r).records() {
                let rec = rec?;
                let field = |i: usize| rec.get(i).unwrap_or_default().to_string();
                let parse_q = |i: usize| {
                    field(i).parse::<crate::arith::Rational>().map_err(|e| ReportError::Malformed { what: "rational", detail: e.to_string() })
                };
                let parse_n = |i: usize| {
                    field(i).parse::<usize>().map_err(|e| ReportError::Malformed { what: "integer", detail: e.to_string() })
                };
                let w = [parse_q(0)?, parse_q(1)?];
                if weight.get_or_insert_with(|| w.clone()) != &w {
                    return Err(ReportError::Malformed { what: "table", detail: "rows disagree on the weight".into() });
                }
                states.push(StateRow {
                    t: parse_q(2)?,
                    tau0: parse_q(3)?,
                    n: parse_q(4)?,
                    k: parse_n(5)? as u32,
                    case: field(6),
                    sigma: parse_n(7)? as u8,
                    slice_dim: parse_n(8)?,
                });
            }
            let weight = weight.ok_or(ReportError::Malformed { what: "table", detail: "no rows".into() })?;
            Ok(ClassificationTable { weight, states })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{QuadScalar, Rational};

    #[test]
    fn failing_check_needs_witness() {
        let mut r = VerificationReport::new("t");
        r.push(Check { id: "b".into(), status: Status::Fail, witness: None });
        assert!(matches!(r.clone().finish(std::time::Instant::now()), Err(ReportError::MissingWitness(_))));
        r.checks[0].witness = Some(to_value("x != y"));
        r.push(Check::pass("a"));
        let r = r.finish(std::time::Instant::now()).unwrap();
        assert_eq!(r.checks[0].id, "a");
        assert!(!r.passed());
    }

    #[test]
    fn scalar_witness_shapes() {
        let c = Check::anomaly("c", QuadScalar::new(Rational::frac(-1, 2), Rational::one()));
        assert_eq!(c.witness.unwrap().to_string(), r#"{"a":"-1/2","b":"1"}"#);
    }
}
