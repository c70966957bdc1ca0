//! Text formats: graphs as edge lists, JSON or DOT; signals as CSV or JSON;
//! and a JSON printer with fixed-precision numbers and sorted keys.
//!
//! Edge list: first data line `N`, then one `u v` pair per line, 0-based,
//! whitespace separated; `#` starts a comment. Graph JSON:
//! `{"n": N, "edges": [[u, v], ...]}` with edges sorted.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize, Serializer};
use serde_json::Value;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::spectral::Complex64;

/// Decimal places used for every floating-point number this crate prints.
pub const DECIMALS: usize = 12;

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut n: Option<usize> = None;
    let mut edges = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let parse = |tok: &str| {
            tok.parse::<usize>().map_err(|_| Error::Parse {
                line: line_no,
                message: format!("expected a non-negative integer, found '{tok}'"),
            })
        };
        let tokens: Vec<&str> = line.split_whitespace().collect();
        match (n, tokens.as_slice()) {
            (None, [count]) => n = Some(parse(count)?),
            (None, _) => {
                return Err(Error::Parse {
                    line: line_no,
                    message: "first line must be the vertex count".into(),
                })
            }
            (Some(_), [u, v]) => edges.push((parse(u)?, parse(v)?, line_no)),
            (Some(_), _) => {
                return Err(Error::Parse {
                    line: line_no,
                    message: format!("expected 'u v', found '{line}'"),
                })
            }
        }
    }
    let n = n.ok_or(Error::Parse {
        line: 0,
        message: "missing vertex count".into(),
    })?;
    for &(u, v, line) in &edges {
        if u >= n || v >= n {
            return Err(Error::Parse {
                line,
                message: format!("edge ({u}, {v}) out of range for {n} vertices"),
            });
        }
        if u == v {
            return Err(Error::Parse {
                line,
                message: format!("self-loop at vertex {u}"),
            });
        }
    }
    Graph::from_edges(n, edges.into_iter().map(|(u, v, _)| (u, v)))
}

pub fn to_edge_list(g: &Graph) -> String {
    let mut out = format!("{}\n", g.vertex_count());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

#[derive(Serialize, Deserialize)]
struct GraphJson {
    n: usize,
    edges: Vec<[usize; 2]>,
}

pub fn parse_graph_json(text: &str) -> Result<Graph> {
    let parsed: GraphJson = serde_json::from_str(text).map_err(|e| Error::Malformed(e.to_string()))?;
    graph_from_json(parsed)
}

fn graph_from_json(parsed: GraphJson) -> Result<Graph> {
    Graph::from_edges(parsed.n, parsed.edges.into_iter().map(|[u, v]| (u, v)))
}

/// Parses a graph from a JSON value of the form `{"n": N, "edges": [...]}`.
pub fn graph_from_value(value: &Value) -> Result<Graph> {
    let parsed: GraphJson = serde_json::from_value(value.clone()).map_err(|e| Error::Malformed(e.to_string()))?;
    graph_from_json(parsed)
}

pub fn graph_to_value(g: &Graph) -> Value {
    serde_json::json!({
        "n": g.vertex_count(),
        "edges": g.edges().map(|(u, v)| [u, v]).collect::<Vec<_>>(),
    })
}

pub fn to_graph_json(g: &Graph) -> String {
    let mut s = to_json_string(&graph_to_value(g));
    s.push('\n');
    s
}

/// Undirected DOT; every vertex is declared so isolated vertices survive.
pub fn to_dot(g: &Graph) -> String {
    let mut out = String::from("graph {\n");
    for v in 0..g.vertex_count() {
        let _ = writeln!(out, "  {v};");
    }
    for (u, v) in g.edges() {
        let _ = writeln!(out, "  {u} -- {v};");
    }
    out.push_str("}\n");
    out
}

/// One value per line; complex entries as `re,im`. Blank lines and `#`
/// comments are skipped.
pub fn parse_signal_csv(text: &str) -> Result<Vec<Complex64>> {
    let mut out = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let bad = |tok: &str| Error::Parse {
            line: idx + 1,
            message: format!("expected a number, found '{tok}'"),
        };
        let fields: Vec<&str> = line.split(',').map(str::trim).collect();
        let z = match fields.as_slice() {
            [re] => Complex64::new(re.parse().map_err(|_| bad(re))?, 0.0),
            [re, im] => Complex64::new(re.parse().map_err(|_| bad(re))?, im.parse().map_err(|_| bad(im))?),
            _ => return Err(bad(line)),
        };
        out.push(z);
    }
    Ok(out)
}

/// JSON array of numbers or of `[re, im]` pairs.
pub fn parse_signal_json(text: &str) -> Result<Vec<Complex64>> {
    let value: Value = serde_json::from_str(text).map_err(|e| Error::Malformed(e.to_string()))?;
    signal_from_value(&value)
}

pub fn signal_from_value(value: &Value) -> Result<Vec<Complex64>> {
    let items = value
        .as_array()
        .ok_or_else(|| Error::Malformed("signal must be a JSON array".into()))?;
    items
        .iter()
        .map(|item| match item {
            Value::Number(x) => Ok(Complex64::new(x.as_f64().unwrap_or(f64::NAN), 0.0)),
            Value::Array(pair) if pair.len() == 2 => match (pair[0].as_f64(), pair[1].as_f64()) {
                (Some(re), Some(im)) => Ok(Complex64::new(re, im)),
                _ => Err(Error::Malformed(format!("bad complex entry {item}"))),
            },
            _ => Err(Error::Malformed(format!("bad signal entry {item}"))),
        })
        .collect()
}

/// CSV output; real-only when every imaginary part is exactly zero.
pub fn signal_to_csv(values: &[Complex64]) -> String {
    let real = values.iter().all(|z| z.im == 0.0);
    let mut out = String::new();
    for z in values {
        if real {
            let _ = writeln!(out, "{}", format_number(z.re));
        } else {
            let _ = writeln!(out, "{},{}", format_number(z.re), format_number(z.im));
        }
    }
    out
}

/// Fixed `DECIMALS` places; negative zero prints as zero.
pub fn format_number(x: f64) -> String {
    if x.is_nan() {
        return "NaN".into();
    }
    if x.is_infinite() {
        return if x > 0.0 { "inf".into() } else { "-inf".into() };
    }
    let s = format!("{:.*}", DECIMALS, x);
    if s.starts_with('-') && s[1..].bytes().all(|c| c == b'0' || c == b'.') {
        s[1..].to_string()
    } else {
        s
    }
}

/// Compact JSON with object keys sorted and floats at `DECIMALS` places.
/// Non-finite floats become `null`.
pub fn to_json_string(value: &Value) -> String {
    let mut out = String::new();
    write_json(value, &mut out);
    out
}

/// Serializes through `serde_json::Value` then prints with [`to_json_string`].
pub fn to_json<T: Serialize>(value: &T) -> Result<String> {
    let v = serde_json::to_value(value).map_err(|e| Error::Malformed(e.to_string()))?;
    Ok(to_json_string(&v))
}

fn write_json(value: &Value, out: &mut String) {
    match value {
        Value::Null => out.push_str("null"),
        Value::Bool(b) => out.push_str(if *b { "true" } else { "false" }),
        Value::Number(num) => {
            if let Some(i) = num.as_i64() {
                let _ = write!(out, "{i}");
            } else if let Some(u) = num.as_u64() {
                let _ = write!(out, "{u}");
            } else {
                match num.as_f64() {
                    Some(x) if x.is_finite() => out.push_str(&format_number(x)),
                    _ => out.push_str("null"),
                }
            }
        }
        Value::String(s) => out.push_str(&Value::String(s.clone()).to_string()),
        Value::Array(items) => {
            out.push('[');
            for (k, item) in items.iter().enumerate() {
                if k > 0 {
                    out.push(',');
                }
                write_json(item, out);
            }
            out.push(']');
        }
        Value::Object(map) => {
            let mut keys: Vec<&String> = map.keys().collect();
            keys.sort();
            out.push('{');
            for (k, key) in keys.iter().enumerate() {
                if k > 0 {
                    out.push(',');
                }
                out.push_str(&Value::String((*key).clone()).to_string());
                out.push(':');
                write_json(&map[*key], out);
            }
            out.push('}');
        }
    }
}

/// Complex numbers serialize as `[re, im]` pairs.
pub fn serialize_complex_slice<S: Serializer>(values: &[Complex64], s: S) -> std::result::Result<S::Ok, S::Error> {
    let pairs: Vec<[f64; 2]> = values.iter().map(|z| [z.re, z.im]).collect();
    pairs.serialize(s)
}

/// Complex values as JSON: plain numbers when all imaginary parts are
/// exactly zero, otherwise `[re, im]` pairs.
pub fn complex_to_value(values: &[Complex64]) -> Value {
    if values.iter().all(|z| z.im == 0.0) {
        Value::from(values.iter().map(|z| z.re).collect::<Vec<_>>())
    } else {
        Value::from(values.iter().map(|z| vec![z.re, z.im]).collect::<Vec<_>>())
    }
}
