//! Tabular output in CSV or JSON with fixed, locale-independent formatting:
//! energies to 9 decimals (eV), frequencies to 3 decimals (MHz), the
//! dimensionless total as an integer in units of 1e-15, and grid values in
//! scientific notation. Identical inputs produce byte-identical output.

use serde_json::{json, Value};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Csv,
    Json,
}

/// One formatted cell. Blank cells mark structurally zero entries (the
/// delta_l0 pattern) and the singular-origin radial samples.
#[derive(Debug, Clone)]
pub enum Cell {
    Blank,
    Text(String),
    Int(i64),
    /// Fixed 3 decimals (MHz columns).
    F3(f64),
    /// Fixed 9 decimals (energies in eV, radii in a0).
    F9(f64),
    /// Fixed 12 decimals (dimensionless parameters).
    F12(f64),
    /// Scientific with 10 significant decimals (radial values).
    Sci(f64),
}

impl Cell {
    fn csv(&self) -> String {
        match self {
            Cell::Blank => String::new(),
            Cell::Text(s) => s.clone(),
            Cell::Int(i) => i.to_string(),
            Cell::F3(x) => format!("{x:.3}"),
            Cell::F9(x) => format!("{x:.9}"),
            Cell::F12(x) => format!("{x:.12}"),
            Cell::Sci(x) => format!("{x:.10e}"),
        }
    }

    fn json(&self) -> Value {
        // JSON carries the same rounded value the CSV prints, so the two
        // formats agree digit for digit.
        let reparse = |s: String| -> Value {
            s.parse::<f64>()
                .ok()
                .and_then(serde_json::Number::from_f64)
                .map(Value::Number)
                .unwrap_or(Value::Null)
        };
        match self {
            Cell::Blank => Value::Null,
            Cell::Text(s) => Value::String(s.clone()),
            Cell::Int(i) => json!(i),
            Cell::F3(_) | Cell::F9(_) | Cell::F12(_) | Cell::Sci(_) => reparse(self.csv()),
        }
    }
}

/// A header, rows of matching arity, and optional footer annotations.
#[derive(Debug, Default)]
pub struct OutputTable {
    header: Vec<&'static str>,
    rows: Vec<Vec<Cell>>,
    footers: Vec<(String, String)>,
}

impl OutputTable {
    pub fn new(header: Vec<&'static str>) -> Self {
        Self {
            header,
            ..Default::default()
        }
    }

    pub fn push_row(&mut self, row: Vec<Cell>) {
        assert_eq!(row.len(), self.header.len(), "row arity mismatch");
        self.rows.push(row);
    }

    /// Adds a named footer value (a CSV comment line / a JSON field).
    pub fn push_footer(&mut self, key: &str, value: String) {
        self.footers.push((key.to_string(), value));
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Csv => self.render_csv(),
            Format::Json => self.render_json(),
        }
    }

    fn render_csv(&self) -> String {
        let mut out = String::new();
        out.push_str(&self.header.join(","));
        out.push('\n');
        for row in &self.rows {
            let cells: Vec<String> = row.iter().map(Cell::csv).collect();
            out.push_str(&cells.join(","));
            out.push('\n');
        }
        for (key, value) in &self.footers {
            out.push_str(&format!("# {key} = {value}\n"));
        }
        out
    }

    fn render_json(&self) -> String {
        let rows: Vec<Value> = self
            .rows
            .iter()
            .map(|row| {
                let obj: serde_json::Map<String, Value> = self
                    .header
                    .iter()
                    .zip(row)
                    .map(|(key, cell)| (key.to_string(), cell.json()))
                    .collect();
                Value::Object(obj)
            })
            .collect();
        let mut root = serde_json::Map::new();
        root.insert("header".into(), json!(self.header));
        root.insert("rows".into(), Value::Array(rows));
        for (key, value) in &self.footers {
            let parsed = value
                .parse::<f64>()
                .ok()
                .and_then(serde_json::Number::from_f64)
                .map(Value::Number)
                .unwrap_or_else(|| Value::String(value.clone()));
            root.insert(key.clone(), parsed);
        }
        let mut text = serde_json::to_string_pretty(&Value::Object(root)).expect("valid json");
        text.push('\n');
        text
    }
}
