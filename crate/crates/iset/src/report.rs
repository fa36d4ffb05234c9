//! Structured run reports: a key-value tree printed as indented text or JSON.
//!
//! Everything except the `timing` section is a pure function of the run
//! configuration, so identical configurations give identical payloads.

use std::fmt::Write as _;

use serde_json::{json, Map, Value};

use iset_core::Graph;

#[derive(Debug, Clone)]
pub struct Report {
    pub config: Value,
    pub graph_stats: Option<Value>,
    pub result: Value,
    pub trace: Option<Value>,
    pub verdicts: Option<Value>,
    pub warnings: Vec<String>,
    pub wall_clock_ms: f64,
    pub workers: usize,
}

impl Report {
    pub fn new(config: Value, result: Value) -> Self {
        Self {
            config,
            graph_stats: None,
            result,
            trace: None,
            verdicts: None,
            warnings: Vec::new(),
            wall_clock_ms: 0.0,
            workers: 1,
        }
    }

    /// Everything but `timing`.
    pub fn payload(&self) -> Value {
        let mut map = Map::new();
        map.insert("artifact".into(), json!({ "name": "iset", "version": env!("CARGO_PKG_VERSION") }));
        map.insert("config".into(), self.config.clone());
        if let Some(stats) = &self.graph_stats {
            map.insert("graph_stats".into(), stats.clone());
        }
        map.insert("result".into(), self.result.clone());
        if let Some(trace) = &self.trace {
            map.insert("trace".into(), trace.clone());
        }
        if let Some(verdicts) = &self.verdicts {
            map.insert("verdicts".into(), verdicts.clone());
        }
        if !self.warnings.is_empty() {
            map.insert("warnings".into(), json!(self.warnings));
        }
        Value::Object(map)
    }

    pub fn to_value(&self) -> Value {
        let mut v = self.payload();
        v.as_object_mut()
            .expect("payload is an object")
            .insert("timing".into(), json!({ "wall_clock_ms": self.wall_clock_ms, "workers": self.workers }));
        v
    }

    pub fn render(&self, as_json: bool) -> String {
        let v = self.to_value();
        if as_json {
            let mut s = serde_json::to_string_pretty(&v).expect("report serializes");
            s.push('\n');
            s
        } else {
            let mut out = String::new();
            render_text(&v, 0, &mut out);
            out
        }
    }
}

pub fn graph_stats(g: &Graph) -> Value {
    let t = g.average_degree();
    json!({
        "n": g.vertex_count(),
        "e": g.edge_count(),
        "t": t.as_f64(),
        "t_exact": t.to_string(),
        "max_degree": g.max_degree(),
        "triangle_free": g.is_triangle_free(),
    })
}

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

fn is_scalar(v: &Value) -> bool {
    !matches!(v, Value::Object(_) | Value::Array(_))
}

fn render_text(v: &Value, indent: usize, out: &mut String) {
    let pad = "  ".repeat(indent);
    match v {
        Value::Object(map) => {
            for (key, value) in map {
                match value {
                    Value::Array(items) if items.iter().all(is_scalar) => {
                        let inner: Vec<String> = items.iter().map(scalar).collect();
                        writeln!(out, "{pad}{key}: [{}]", inner.join(", ")).unwrap();
                    }
                    Value::Object(m) if m.is_empty() => writeln!(out, "{pad}{key}: {{}}").unwrap(),
                    Value::Object(_) | Value::Array(_) => {
                        writeln!(out, "{pad}{key}:").unwrap();
                        render_text(value, indent + 1, out);
                    }
                    _ => writeln!(out, "{pad}{key}: {}", scalar(value)).unwrap(),
                }
            }
        }
        Value::Array(items) => {
            for item in items {
                if is_scalar(item) {
                    writeln!(out, "{pad}- {}", scalar(item)).unwrap();
                } else {
                    writeln!(out, "{pad}-").unwrap();
                    render_text(item, indent + 1, out);
                }
            }
        }
        _ => writeln!(out, "{pad}{}", scalar(v)).unwrap(),
    }
}
