use std::io::Write;

use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Method {
    Exact,
    ClosedForm,
    GridEstimate,
}

/// Which side of the true value a number sits on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Bound {
    Exact,
    Lower,
    Upper,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(untagged)]
pub enum Value {
    Number(f64),
    Flag(bool),
    Text(String),
}

impl Value {
    fn render(&self) -> String {
        match self {
            Value::Number(v) => num(*v),
            Value::Flag(b) => b.to_string(),
            Value::Text(s) => s.clone(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Quantity {
    pub name: String,
    pub value: Value,
    pub method: Method,
    pub bound: Bound,
    pub tolerance: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness_x: Option<Vec<f64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness_y: Option<Vec<f64>>,
}

impl Quantity {
    pub fn new(name: impl Into<String>, value: Value, method: Method, bound: Bound, tolerance: f64) -> Self {
        Self { name: name.into(), value, method, bound, tolerance, witness_x: None, witness_y: None }
    }

    pub fn exact(name: impl Into<String>, value: Value, tolerance: f64) -> Self {
        Self::new(name, value, Method::Exact, Bound::Exact, tolerance)
    }

    pub fn with_witness(mut self, x: &[f64], y: &[f64]) -> Self {
        // `+ 0.0` folds −0 into 0
        self.witness_x = Some(x.iter().map(|c| c + 0.0).collect());
        self.witness_y = Some(y.iter().map(|c| c + 0.0).collect());
        self
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CriterionRow {
    pub id: u8,
    pub name: String,
    pub passed: bool,
    pub detail: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_s: Option<f64>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Report {
    pub command: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub space: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub trials: Option<usize>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub results: Vec<Quantity>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub criteria: Vec<CriterionRow>,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub wall_time_s: Option<f64>,
}

#[derive(Serialize)]
struct QuantityRow<'a> {
    name: &'a str,
    value: String,
    method: Method,
    bound: Bound,
    tolerance: f64,
    witness_x: String,
    witness_y: String,
}

/// Shortest round-trip form, with an exponent for tiny or huge values.
fn num(v: f64) -> String {
    serde_json::to_string(&v).unwrap_or_else(|_| v.to_string())
}

fn join(v: &Option<Vec<f64>>) -> String {
    v.as_ref()
        .map(|v| v.iter().map(|c| num(*c)).collect::<Vec<_>>().join(";"))
        .unwrap_or_default()
}

impl Report {
    pub fn new(command: Vec<String>) -> Self {
        Self {
            command,
            space: None,
            seed: None,
            trials: None,
            results: Vec::new(),
            criteria: Vec::new(),
            passed: true,
            wall_time_s: None,
        }
    }

    pub fn write_json(&self, out: &mut impl Write) -> std::io::Result<()> {
        serde_json::to_writer_pretty(&mut *out, self)?;
        writeln!(out)
    }

    /// Flat rows: one per criterion for `verify`, one per quantity otherwise.
    pub fn write_csv(&self, out: &mut impl Write) -> std::io::Result<()> {
        let mut w = csv::Writer::from_writer(out);
        if !self.criteria.is_empty() {
            for c in &self.criteria {
                w.serialize(c)?;
            }
        } else {
            for q in &self.results {
                w.serialize(QuantityRow {
                    name: &q.name,
                    value: q.value.render(),
                    method: q.method,
                    bound: q.bound,
                    tolerance: q.tolerance,
                    witness_x: join(&q.witness_x),
                    witness_y: join(&q.witness_y),
                })?;
            }
        }
        w.flush()
    }
}
