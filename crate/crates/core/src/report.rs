//! Report serialization shared by every module: a line-oriented structured
//! text format (one JSON object per line, tagged with the report kind) and a
//! CSV rendering with a fixed, documented column order.
//!
//! CSV layout rules, applied uniformly to every report type:
//! 1. nested fields flatten to dotted paths (`params.x`), tuple elements to
//!    numeric components (`windows.1`); columns appear in lexicographic
//!    path order;
//! 2. the arrays of maximal length expand to one row per element, with all
//!    scalar fields repeated on each row (so parallel per-trial or
//!    per-window vectors line up);
//! 3. shorter arrays are joined inline with `;`.

use serde::Serialize;
use serde_json::Value;
use std::collections::BTreeMap;

use crate::error::{Error, Result};

/// Output format selector used across the CLI.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputFormat {
    StructuredText,
    Csv,
}

/// One report as a single line: `{"report":"<kind>", ...fields}`.
pub fn structured_line<T: Serialize>(kind: &str, report: &T) -> Result<String> {
    let value = serde_json::to_value(report).map_err(|e| Error::Parse(e.to_string()))?;
    let mut tagged = serde_json::Map::new();
    tagged.insert("report".to_string(), Value::String(kind.to_string()));
    match value {
        Value::Object(map) => {
            for (k, v) in map {
                tagged.insert(k, v);
            }
        }
        other => {
            tagged.insert("value".to_string(), other);
        }
    }
    serde_json::to_string(&Value::Object(tagged)).map_err(|e| Error::Parse(e.to_string()))
}

fn scalar_to_string(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => String::new(),
        other => other.to_string(),
    }
}

fn flatten(prefix: &str, v: &Value, out: &mut BTreeMap<String, Value>) {
    match v {
        Value::Object(map) => {
            for (k, child) in map {
                let path = if prefix.is_empty() {
                    k.clone()
                } else {
                    format!("{prefix}.{k}")
                };
                flatten(&path, child, out);
            }
        }
        other => {
            out.insert(prefix.to_string(), other.clone());
        }
    }
}

fn csv_escape(cell: &str) -> String {
    if cell.contains(',') || cell.contains('"') || cell.contains('\n') {
        format!("\"{}\"", cell.replace('"', "\"\""))
    } else {
        cell.to_string()
    }
}

/// Renders any report as a CSV table under the module-level layout rules.
pub fn csv_table<T: Serialize>(report: &T) -> Result<String> {
    let value = serde_json::to_value(report).map_err(|e| Error::Parse(e.to_string()))?;
    // a bare top-level array is its own row source
    let value = match value {
        Value::Array(items) => {
            let mut wrap = serde_json::Map::new();
            wrap.insert("rows".to_string(), Value::Array(items));
            Value::Object(wrap)
        }
        other => other,
    };
    let mut flat = BTreeMap::new();
    flatten("", &value, &mut flat);
    let row_count = flat
        .values()
        .filter_map(|v| v.as_array().map(Vec::len))
        .max()
        .unwrap_or(1)
        .max(1);

    // per flattened path, either a constant cell or per-row cells
    enum Col {
        Constant(String),
        PerRow(Vec<BTreeMap<String, Value>>),
    }
    let mut columns: Vec<(String, Col)> = Vec::new();
    for (path, v) in &flat {
        match v {
            Value::Array(items) if items.len() == row_count => {
                let expanded = items
                    .iter()
                    .map(|item| {
                        let mut sub = BTreeMap::new();
                        match item {
                            Value::Array(tuple) => {
                                for (i, part) in tuple.iter().enumerate() {
                                    flatten(&i.to_string(), part, &mut sub);
                                }
                            }
                            other => flatten("", other, &mut sub),
                        }
                        sub
                    })
                    .collect();
                columns.push((path.clone(), Col::PerRow(expanded)));
            }
            Value::Array(items) => {
                let joined = items
                    .iter()
                    .map(scalar_to_string)
                    .collect::<Vec<_>>()
                    .join(";");
                columns.push((path.clone(), Col::Constant(joined)));
            }
            other => {
                columns.push((path.clone(), Col::Constant(scalar_to_string(other))));
            }
        }
    }

    // header: constants keep their path; expanded arrays contribute one
    // column per element sub-path
    let mut header = Vec::new();
    for (path, col) in &columns {
        match col {
            Col::Constant(_) => header.push(path.clone()),
            Col::PerRow(rows) => {
                let mut subpaths: Vec<String> =
                    rows.iter().flat_map(|m| m.keys().cloned()).collect();
                subpaths.sort();
                subpaths.dedup();
                for sp in &subpaths {
                    header.push(if sp.is_empty() {
                        path.clone()
                    } else {
                        format!("{path}.{sp}")
                    });
                }
            }
        }
    }

    let mut out = String::new();
    out.push_str(&header.iter().map(|h| csv_escape(h)).collect::<Vec<_>>().join(","));
    out.push('\n');
    for row in 0..row_count {
        let mut cells = Vec::new();
        for (path, col) in &columns {
            match col {
                Col::Constant(c) => cells.push(csv_escape(c)),
                Col::PerRow(rows) => {
                    let mut subpaths: Vec<String> =
                        rows.iter().flat_map(|m| m.keys().cloned()).collect();
                    subpaths.sort();
                    subpaths.dedup();
                    let this = &rows[row];
                    for sp in &subpaths {
                        let cell = this.get(sp).map(scalar_to_string).unwrap_or_default();
                        cells.push(csv_escape(&cell));
                    }
                    let _ = path;
                }
            }
        }
        out.push_str(&cells.join(","));
        out.push('\n');
    }
    Ok(out)
}

/// Renders a report in the requested format.
pub fn render<T: Serialize>(kind: &str, report: &T, format: OutputFormat) -> Result<String> {
    match format {
        OutputFormat::StructuredText => Ok(format!("{}\n", structured_line(kind, report)?)),
        OutputFormat::Csv => csv_table(report),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde::Serialize;

    #[derive(Serialize)]
    struct Flat {
        a: u32,
        b: String,
    }

    #[derive(Serialize)]
    struct WithRows {
        x: u32,
        windows: Vec<(u64, u64, f64)>,
        small: Vec<u32>,
    }

    #[test]
    fn structured_line_is_tagged_single_line() {
        let line = structured_line("flat", &Flat { a: 1, b: "hi".into() }).unwrap();
        assert!(line.starts_with("{\"report\":\"flat\""));
        assert!(!line.contains('\n'));
        assert!(line.contains("\"a\":1"));
    }

    #[test]
    fn csv_single_row() {
        let csv = csv_table(&Flat { a: 7, b: "x,y".into() }).unwrap();
        assert_eq!(csv, "a,b\n7,\"x,y\"\n");
    }

    #[test]
    fn csv_expands_longest_array_to_rows() {
        let csv = csv_table(&WithRows {
            x: 5,
            windows: vec![(1, 2, 0.5), (3, 4, 1.5)],
            small: vec![9],
        })
        .unwrap();
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(lines[0], "small,windows.0,windows.1,windows.2,x");
        assert_eq!(lines[1], "9,1,2,0.5,5");
        assert_eq!(lines[2], "9,3,4,1.5,5");
    }

    #[test]
    fn csv_of_top_level_array() {
        let csv = csv_table(&vec![Flat { a: 1, b: "p".into() }, Flat { a: 2, b: "q".into() }])
            .unwrap();
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(lines[0], "rows.a,rows.b");
        assert_eq!(lines, vec!["rows.a,rows.b", "1,p", "2,q"]);
    }

    #[test]
    fn parallel_arrays_stay_aligned() {
        #[derive(Serialize)]
        struct P {
            hi: Vec<f64>,
            lo: Vec<f64>,
        }
        let csv = csv_table(&P { hi: vec![1.0, 2.0], lo: vec![-1.0, -2.0] }).unwrap();
        assert_eq!(csv, "hi,lo\n1.0,-1.0\n2.0,-2.0\n");
    }
}
