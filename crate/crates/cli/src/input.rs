use std::io::Read;
use std::path::Path;

use vertexfreq::io::{parse_edge_list, parse_graph_json, parse_signal_csv, parse_signal_json};
use vertexfreq::{Complex64, Graph};

use crate::{Failure, InputFormat};

pub fn read_text(path: &Path) -> Result<String, Failure> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| Failure::Domain(format!("reading stdin: {e}")))?;
        return Ok(s);
    }
    std::fs::read_to_string(path).map_err(|e| Failure::Domain(format!("{}: {e}", path.display())))
}

fn is_json(path: &Path) -> bool {
    path.extension().is_some_and(|e| e.eq_ignore_ascii_case("json"))
}

pub fn read_graph(path: &Path, format: Option<InputFormat>) -> Result<Graph, Failure> {
    let text = read_text(path)?;
    let format = format.unwrap_or(if is_json(path) {
        InputFormat::Json
    } else {
        InputFormat::Edgelist
    });
    let parsed = match format {
        InputFormat::Json => parse_graph_json(&text),
        InputFormat::Edgelist => parse_edge_list(&text),
    };
    parsed.map_err(|e| Failure::Domain(format!("{}: {e}", path.display())))
}

/// CSV by default; a `.json` file is read as a JSON array.
pub fn read_signal(path: &Path) -> Result<Vec<Complex64>, Failure> {
    let text = read_text(path)?;
    let parsed = if is_json(path) {
        parse_signal_json(&text)
    } else {
        parse_signal_csv(&text)
    };
    parsed.map_err(|e| Failure::Domain(format!("{}: {e}", path.display())))
}
