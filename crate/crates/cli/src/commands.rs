use nalgebra::DMatrix;
use serde::Deserialize;
use serde_json::{json, Value};

use vertexfreq::fiedler::{
    default_params, extend_subgraph_eigenvector, fiedler, lift_common_eigenvector, partition, partition_distance_check,
    planar_family_harness, sign_connectivity_check, verify_barren, zero_ball_scan, EigenComponent, Family, LiftResult,
    VertexPartition,
};
use vertexfreq::generators as gen;
use vertexfreq::io::{
    complex_to_value, format_number, graph_from_value, signal_from_value, signal_to_csv, to_dot, to_edge_list,
    to_graph_json, to_json, to_json_string,
};
use vertexfreq::spectral::{dft_basis, eigendecompose, sylvester_hadamard_basis, Field};
use vertexfreq::tolerance;
use vertexfreq::vertex_freq::{gft, igft, semigroup_table, translate, translation_analysis, translation_inverse};
use vertexfreq::{Complex64, EigenBasis, Graph, Signal, SpectralSignal, VertexSet};

use crate::input::{read_graph, read_signal, read_text};
use crate::*;

pub struct Output {
    pub stdout: String,
    pub code: u8,
}

impl Output {
    fn ok(stdout: String) -> Self {
        Output { stdout, code: 0 }
    }

    /// Report printed, but the check it describes failed.
    fn failed(stdout: String) -> Self {
        Output { stdout, code: 1 }
    }
}

fn usage(msg: impl Into<String>) -> Failure {
    Failure::Usage(msg.into())
}

fn line(v: &Value) -> String {
    let mut s = to_json_string(v);
    s.push('\n');
    s
}

fn report<T: serde::Serialize>(value: &T) -> Result<String, Failure> {
    let mut s = to_json(value)?;
    s.push('\n');
    Ok(s)
}

pub fn run(command: Command) -> Result<Output, Failure> {
    match command {
        Command::Generate(a) => generate(a),
        Command::Spectrum(a) => spectrum(a),
        Command::Gft(a) => transform(a),
        Command::Translate(a) => translate_cmd(a),
        Command::AnalyzeTranslation(a) => analyze(a),
        Command::Semigroup(a) => semigroup(a),
        Command::Fiedler(a) => fiedler_cmd(a),
        Command::ScanZeros(a) => scan_zeros(a),
        Command::VerifyBarren(a) => barren(a),
        Command::Lift(a) => lift(a),
        Command::HarnessPlanar(a) => harness(a),
    }
}

fn generate(a: GenerateArgs) -> Result<Output, Failure> {
    let p = &a.params;
    let arity = |k: usize| {
        if p.len() == k {
            Ok(())
        } else {
            Err(usage(format!(
                "family '{}' takes {k} parameter(s), got {}",
                a.family,
                p.len()
            )))
        }
    };
    let g = match a.family.as_str() {
        "path" => arity(1).and_then(|_| Ok(gen::path(p[0])?)),
        "cycle" => arity(1).and_then(|_| Ok(gen::cycle(p[0])?)),
        "complete" => arity(1).and_then(|_| Ok(gen::complete(p[0])?)),
        "star" => arity(1).and_then(|_| Ok(gen::star(p[0])?)),
        "bipartite" => arity(2).and_then(|_| Ok(gen::complete_bipartite(p[0], p[1])?)),
        "ladder" => arity(2).and_then(|_| Ok(gen::generalized_ladder(p[0], p[1])?)),
        "grid" => arity(2).and_then(|_| Ok(gen::grid(p[0], p[1])?)),
        "dmp" => arity(2).and_then(|_| Ok(gen::duplicated_middle_path(p[0], p[1])?)),
        "tree" => arity(1).and_then(|_| Ok(gen::random_tree(p[0], a.seed)?)),
        "barren" => arity(1).and_then(|_| Ok(gen::barren(p[0])?.0)),
        other => Err(usage(format!("unknown family '{other}'"))),
    }?;
    Ok(Output::ok(match a.format {
        GraphFormat::Edgelist => to_edge_list(&g),
        GraphFormat::Json => to_graph_json(&g),
        GraphFormat::Dot => to_dot(&g),
    }))
}

fn complex_rows(m: &DMatrix<Complex64>) -> Value {
    Value::Array(
        (0..m.nrows())
            .map(|i| complex_to_value(&m.row(i).iter().copied().collect::<Vec<_>>()))
            .collect(),
    )
}

fn spectrum(a: SpectrumArgs) -> Result<Output, Failure> {
    let g = read_graph(&a.input.graph, a.input.input_format)?;
    let b = eigendecompose(&g);
    if a.format == SignalFormat::Csv {
        if a.vectors {
            return Err(usage("--vectors needs --format json"));
        }
        let out: String = b.eigenvalues().iter().map(|l| format_number(*l) + "\n").collect();
        return Ok(Output::ok(out));
    }
    let mut v = json!({
        "n": b.dim(),
        "eigenvalues": b.eigenvalues(),
        "field": serde_json::to_value(b.field()).expect("serializable"),
    });
    if a.vectors {
        v["vectors"] = complex_rows(b.vectors());
    }
    Ok(Output::ok(line(&v)))
}

fn emit_signal(values: &[Complex64], format: SignalFormat) -> String {
    match format {
        SignalFormat::Csv => signal_to_csv(values),
        SignalFormat::Json => line(&complex_to_value(values)),
    }
}

fn transform(a: GftArgs) -> Result<Output, Failure> {
    let g = read_graph(&a.input.graph, a.input.input_format)?;
    let values = read_signal(&a.signal)?;
    let b = eigendecompose(&g);
    let out = if a.inverse {
        igft(&b, &SpectralSignal::new(values))?.into_values()
    } else {
        gft(&b, &Signal::new(values))?.into_values()
    };
    Ok(Output::ok(emit_signal(&out, a.format)))
}

fn translate_cmd(a: TranslateArgs) -> Result<Output, Failure> {
    let g = read_graph(&a.input.graph, a.input.input_format)?;
    let f = Signal::new(read_signal(&a.signal)?);
    let out = translate(&eigendecompose(&g), a.vertex, &f)?;
    Ok(Output::ok(emit_signal(out.values(), a.format)))
}

fn analyze(a: AnalyzeArgs) -> Result<Output, Failure> {
    let g = read_graph(&a.input.graph, a.input.input_format)?;
    let b = eigendecompose(&g);
    let tol = a.tol.unwrap_or_else(|| tolerance::translation_tol(b.dim()));
    let Some(i) = a.vertex else {
        let all = (0..b.dim())
            .map(|i| translation_analysis(&b, i, tol))
            .collect::<Result<Vec<_>, _>>()?;
        return Ok(Output::ok(report(&all)?));
    };
    let analysis = translation_analysis(&b, i, tol)?;
    let mut v = serde_json::to_value(&analysis).map_err(|e| Failure::Domain(e.to_string()))?;
    if a.inverse {
        let inv = translation_inverse(&b, i, tol)?;
        v["inverse"] = complex_rows(&inv.matrix);
    }
    Ok(Output::ok(line(&v)))
}

/// A basis matrix file: either an array of rows, or an object with `vectors`
/// (rows) and optional ascending `eigenvalues`.
fn read_matrix_basis(path: &std::path::Path) -> Result<EigenBasis, Failure> {
    let text = read_text(path)?;
    let value: Value = serde_json::from_str(&text).map_err(|e| Failure::Domain(format!("{}: {e}", path.display())))?;
    let (rows, eigenvalues) = match &value {
        Value::Array(_) => (&value, None),
        Value::Object(m) => (
            m.get("vectors")
                .ok_or_else(|| Failure::Domain("matrix file needs 'vectors'".into()))?,
            m.get("eigenvalues"),
        ),
        _ => return Err(Failure::Domain("matrix file must be an array or object".into())),
    };
    let rows: Vec<Vec<Complex64>> = rows
        .as_array()
        .ok_or_else(|| Failure::Domain("'vectors' must be an array of rows".into()))?
        .iter()
        .map(signal_from_value)
        .collect::<Result<_, _>>()?;
    let n = rows.len();
    if rows.iter().any(|r| r.len() != n) {
        return Err(Failure::Domain("basis matrix must be square".into()));
    }
    let eigenvalues = match eigenvalues {
        Some(v) => serde_json::from_value::<Vec<f64>>(v.clone()).map_err(|e| Failure::Domain(e.to_string()))?,
        None => vec![0.0; n],
    };
    let field = if rows.iter().flatten().all(|z| z.im == 0.0) {
        Field::Real
    } else {
        Field::Complex
    };
    let m = DMatrix::from_fn(n, n, |i, j| rows[i][j]);
    Ok(EigenBasis::new(eigenvalues, m, field, None)?)
}

fn semigroup(a: SemigroupArgs) -> Result<Output, Failure> {
    let need_n = || a.n.ok_or_else(|| usage("--n is required for this basis"));
    let b = match a.basis {
        BasisKind::Laplacian => {
            let path = a
                .graph
                .as_ref()
                .ok_or_else(|| usage("a graph file is required for --basis laplacian"))?;
            eigendecompose(&read_graph(path, a.input_format)?)
        }
        BasisKind::Dft => dft_basis(need_n()?)?,
        BasisKind::Sylvester => {
            let k = u32::try_from(need_n()?).map_err(|_| usage("--n too large"))?;
            sylvester_hadamard_basis(k)?
        }
        BasisKind::Matrix => {
            let path = a
                .matrix
                .as_ref()
                .ok_or_else(|| usage("--matrix is required for --basis matrix"))?;
            read_matrix_basis(path)?
        }
    };
    let tol = a.tol.unwrap_or(tolerance::SEMIGROUP_MATCH);
    let outcome = semigroup_table(&b, tol);
    let mut v = serde_json::to_value(&outcome).map_err(|e| Failure::Domain(e.to_string()))?;
    v["dim"] = json!(b.dim());
    v["tol"] = json!(tol);
    Ok(Output::ok(line(&v)))
}

fn partition_value(p: &VertexPartition) -> Value {
    json!({
        "positive": p.positive.as_slice(),
        "negative": p.negative.as_slice(),
        "zero": p.zero.as_slice(),
        "tol": p.tol,
    })
}

fn fiedler_partition(a: &FiedlerArgs) -> Result<(Graph, vertexfreq::fiedler::Fiedler, VertexPartition), Failure> {
    let g = read_graph(&a.input.graph, a.input.input_format)?;
    let fv = fiedler(&eigendecompose(&g), tolerance::NEGATIVE_EIGENVALUE)?;
    let tol = a.tol.unwrap_or_else(|| tolerance::partition_tol(&fv.vector));
    let p = partition(&fv.vector, tol);
    Ok((g, fv, p))
}

fn fiedler_cmd(a: FiedlerArgs) -> Result<Output, Failure> {
    let (g, fv, p) = fiedler_partition(&a)?;
    let distance = if p.positive.is_empty() || p.negative.is_empty() {
        Value::Null
    } else {
        match partition_distance_check(&g, &p)?.finite() {
            Some(d) => json!(d),
            None => json!("inf"),
        }
    };
    let (pos, neg) = sign_connectivity_check(&g, &p)?;
    let v = json!({
        "eigenvalue": fv.eigenvalue,
        "multiplicity": fv.multiplicity,
        "basis_dependent": fv.basis_dependent,
        "vector": fv.vector,
        "partition": partition_value(&p),
        "sign_distance": distance,
        "positive_connected": pos,
        "negative_connected": neg,
        "note": "negating the Fiedler vector swaps positive and negative",
    });
    Ok(Output::ok(line(&v)))
}

fn scan_zeros(a: FiedlerArgs) -> Result<Output, Failure> {
    let (g, fv, p) = fiedler_partition(&a)?;
    let r = zero_ball_scan(&g, &p)?;
    let mut v = serde_json::to_value(&r).map_err(|e| Failure::Domain(e.to_string()))?;
    v["multiplicity"] = json!(fv.multiplicity);
    v["basis_dependent"] = json!(fv.basis_dependent);
    Ok(Output::ok(line(&v)))
}

fn barren(a: BarrenArgs) -> Result<Output, Failure> {
    let r = verify_barren(a.n, a.tol)?;
    let text = if a.json {
        report(&r)?
    } else {
        let list = |xs: &[usize]| format!("{xs:?}");
        let mut out = String::new();
        let mut kv = |k: &str, v: String| out.push_str(&format!("{k} = {v}\n"));
        kv("N", r.n.to_string());
        kv("lambda1", format_number(r.lambda1));
        kv("lambda1_closed_form", format_number(r.closed_form.lambda1));
        for (k, y) in r.closed_form.y.iter().enumerate() {
            kv(&format!("y{}", k + 1), format_number(*y));
        }
        kv("discriminant", format_number(r.closed_form.discriminant));
        kv("spectrum_error", format_number(r.spectrum_error));
        kv("support", list(&r.support));
        kv("zero_set", list(&r.zero_set));
        kv("a", format_number(r.a));
        kv("b", format_number(r.b));
        kv("norm_error", format_number(r.norm_error));
        kv("passed", r.passed.to_string());
        for f in &r.failures {
            out.push_str(&format!("failure: {f}\n"));
        }
        out
    };
    Ok(if r.passed {
        Output::ok(text)
    } else {
        Output::failed(text)
    })
}

#[derive(Deserialize)]
struct ComponentSpec {
    graph: Value,
    eigenvalue: f64,
    vector: Vec<f64>,
}

#[derive(Deserialize)]
#[serde(untagged)]
enum LiftSpec {
    Common {
        components: Vec<ComponentSpec>,
        connecting: Vec<[[usize; 2]; 2]>,
        tol: Option<f64>,
    },
    Extend {
        graph: Value,
        subset: Vec<usize>,
        eigenvalue: f64,
        vector: Vec<f64>,
        tol: Option<f64>,
    },
}

fn lift(a: LiftArgs) -> Result<Output, Failure> {
    let text = read_text(&a.spec)?;
    let spec: LiftSpec = serde_json::from_str(&text)
        .map_err(|e| Failure::Domain(format!("{}: not a lift spec: {e}", a.spec.display())))?;
    let result: LiftResult = match spec {
        LiftSpec::Common {
            components,
            connecting,
            tol,
        } => {
            let components = components
                .into_iter()
                .map(|c| {
                    Ok(EigenComponent {
                        graph: graph_from_value(&c.graph)?,
                        eigenvalue: c.eigenvalue,
                        vector: c.vector,
                    })
                })
                .collect::<Result<Vec<_>, vertexfreq::Error>>()?;
            let tol = tol.unwrap_or_else(|| {
                let all: Vec<f64> = components.iter().flat_map(|c| c.vector.clone()).collect();
                tolerance::partition_tol(&all)
            });
            let edges: Vec<_> = connecting.iter().map(|[x, y]| ((x[0], x[1]), (y[0], y[1]))).collect();
            lift_common_eigenvector(&components, &edges, tol)?
        }
        LiftSpec::Extend {
            graph,
            subset,
            eigenvalue,
            vector,
            tol,
        } => {
            let g = graph_from_value(&graph)?;
            let s = VertexSet::new(g.vertex_count(), subset)?;
            let tol = tol.unwrap_or_else(|| tolerance::partition_tol(&vector));
            extend_subgraph_eigenvector(&g, &s, eigenvalue, &vector, tol)?
        }
    };
    Ok(Output::ok(report(&result)?))
}

fn harness(a: HarnessArgs) -> Result<Output, Failure> {
    let families = if a.family.is_empty() {
        Family::ALL.to_vec()
    } else {
        a.family
            .iter()
            .map(|f| f.parse::<Family>())
            .collect::<Result<Vec<_>, _>>()?
    };
    let reports = families
        .into_iter()
        .map(|f| planar_family_harness(f, &default_params(f), a.tol))
        .collect::<Result<Vec<_>, _>>()?;
    let passed = reports.iter().all(|r| r.passed);
    let v = json!({
        "families": serde_json::to_value(&reports).map_err(|e| Failure::Domain(e.to_string()))?,
        "passed": passed,
    });
    let text = line(&v);
    Ok(if passed { Output::ok(text) } else { Output::failed(text) })
}
