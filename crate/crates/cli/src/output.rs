//! Rendering of command results as CSV or JSON.
//!
//! Numbers are written with 12 decimals in CSV and rounded to 12 significant
//! digits in JSON, with `-0` folded into `0`, so repeated runs produce
//! identical bytes.

use std::fmt::Write as _;

use serde_json::{Map, Value};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

fn clean(x: f64) -> f64 {
    if x == 0.0 {
        0.0
    } else {
        x
    }
}

pub fn fixed(x: f64) -> String {
    if x.is_finite() {
        let s = format!("{:.12}", clean(x));
        // values that round to zero print without a sign
        match s.strip_prefix('-') {
            Some(rest) if rest.bytes().all(|b| b == b'0' || b == b'.') => rest.to_string(),
            _ => s,
        }
    } else {
        x.to_string()
    }
}

/// A JSON number rounded to 12 significant digits; non-finite values become
/// `null`.
pub fn num(x: f64) -> Value {
    let r = clean(format!("{x:.11e}").parse::<f64>().unwrap_or(f64::NAN));
    serde_json::Number::from_f64(r).map_or(Value::Null, Value::Number)
}

#[derive(Debug, Clone)]
pub enum Cell {
    Num(f64),
    Bool(bool),
    Text(String),
}

impl Cell {
    fn csv(&self) -> String {
        match self {
            Cell::Num(x) => fixed(*x),
            Cell::Bool(b) => b.to_string(),
            Cell::Text(s) if s.contains([',', '"', '\n']) => {
                format!("\"{}\"", s.replace('"', "\"\""))
            }
            Cell::Text(s) => s.clone(),
        }
    }

    fn json(&self) -> Value {
        match self {
            Cell::Num(x) => num(*x),
            Cell::Bool(b) => Value::Bool(*b),
            Cell::Text(s) => Value::String(s.clone()),
        }
    }
}

impl From<f64> for Cell {
    fn from(x: f64) -> Self {
        Cell::Num(x)
    }
}

impl From<bool> for Cell {
    fn from(b: bool) -> Self {
        Cell::Bool(b)
    }
}

/// Rows in grid order, optionally followed by a summary object.
#[derive(Debug, Clone)]
pub struct Table {
    pub columns: Vec<&'static str>,
    pub rows: Vec<Vec<Cell>>,
    pub summary: Option<Value>,
}

impl Table {
    pub fn new(columns: Vec<&'static str>) -> Self {
        Self {
            columns,
            rows: Vec::new(),
            summary: None,
        }
    }

    pub fn push(&mut self, row: Vec<Cell>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }
}

#[derive(Debug, Clone)]
pub enum Report {
    Table(Table),
    /// A single (possibly nested) JSON object; flattened to `key,value` in CSV.
    Record(Value),
}

pub fn render(report: &Report, format: Format) -> String {
    match (report, format) {
        (Report::Table(t), Format::Csv) => table_csv(t),
        (Report::Table(t), Format::Json) => {
            let rows: Vec<Value> = t
                .rows
                .iter()
                .map(|r| {
                    let obj: Map<String, Value> = t
                        .columns
                        .iter()
                        .zip(r)
                        .map(|(c, v)| (c.to_string(), v.json()))
                        .collect();
                    Value::Object(obj)
                })
                .collect();
            let mut out = Map::new();
            out.insert("rows".into(), Value::Array(rows));
            if let Some(s) = &t.summary {
                out.insert("summary".into(), s.clone());
            }
            pretty(&Value::Object(out))
        }
        (Report::Record(v), Format::Json) => pretty(&rounded(v)),
        (Report::Record(v), Format::Csv) => {
            let mut out = String::from("key,value\n");
            let mut flat = Vec::new();
            flatten("", v, &mut flat);
            for (k, v) in flat {
                let _ = writeln!(out, "{k},{v}");
            }
            out
        }
    }
}

/// Rounds every non-integer number in `v` like [`num`].
pub fn rounded(v: &Value) -> Value {
    match v {
        Value::Number(n) if n.is_f64() => num(n.as_f64().unwrap_or(f64::NAN)),
        Value::Array(a) => Value::Array(a.iter().map(rounded).collect()),
        Value::Object(m) => Value::Object(m.iter().map(|(k, v)| (k.clone(), rounded(v))).collect()),
        other => other.clone(),
    }
}

fn table_csv(t: &Table) -> String {
    let mut out = t.columns.join(",");
    out.push('\n');
    for row in &t.rows {
        let line: Vec<String> = row.iter().map(Cell::csv).collect();
        out.push_str(&line.join(","));
        out.push('\n');
    }
    if let Some(s) = &t.summary {
        let _ = writeln!(out, "# {s}");
    }
    out
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("values are serializable");
    s.push('\n');
    s
}

fn flatten(prefix: &str, v: &Value, out: &mut Vec<(String, String)>) {
    let key = |k: &str| {
        if prefix.is_empty() {
            k.to_string()
        } else {
            format!("{prefix}.{k}")
        }
    };
    match v {
        Value::Object(m) => m.iter().for_each(|(k, v)| flatten(&key(k), v, out)),
        Value::Array(a) => a
            .iter()
            .enumerate()
            .for_each(|(i, v)| flatten(&key(&i.to_string()), v, out)),
        Value::Number(n) if n.is_f64() => {
            out.push((prefix.to_string(), fixed(n.as_f64().unwrap_or(f64::NAN))))
        }
        Value::Number(n) => out.push((prefix.to_string(), n.to_string())),
        Value::Null => out.push((prefix.to_string(), String::new())),
        Value::String(s) => out.push((prefix.to_string(), Cell::Text(s.clone()).csv())),
        Value::Bool(b) => out.push((prefix.to_string(), b.to_string())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn fixed_formatting() {
        assert_eq!(fixed(1.0), "1.000000000000");
        assert_eq!(fixed(-0.0), "0.000000000000");
        assert_eq!(fixed(-1e-20), "0.000000000000");
        assert_eq!(fixed(-0.25), "-0.250000000000");
        assert_eq!(num(-0.0), json!(0.0));
        assert_eq!(num(0.123_456_789_012_345), json!(0.123456789012));
        assert_eq!(num(f64::NAN), Value::Null);
        assert_eq!(num(2.220446049250313e-16), json!(2.22044604925e-16));
        assert_eq!(num(1.0 - 1e-15), json!(1.0));
    }

    #[test]
    fn table_renders_header_rows_and_summary() {
        let mut t = Table::new(vec!["p", "ok"]);
        t.push(vec![0.5.into(), true.into()]);
        t.summary = Some(json!({"x": 1}));
        let csv = render(&Report::Table(t.clone()), Format::Csv);
        assert_eq!(csv, "p,ok\n0.500000000000,true\n# {\"x\":1}\n");
        let js: Value = serde_json::from_str(&render(&Report::Table(t), Format::Json)).unwrap();
        assert_eq!(js["rows"][0]["ok"], json!(true));
        assert_eq!(js["summary"]["x"], json!(1));
    }

    #[test]
    fn records_flatten_to_key_value() {
        let v = json!({"a": {"b": [1.5, "x,y"]}, "c": null, "n": 3});
        let csv = render(&Report::Record(v), Format::Csv);
        assert_eq!(
            csv,
            "key,value\na.b.0,1.500000000000\na.b.1,\"x,y\"\nc,\nn,3\n"
        );
    }
}
