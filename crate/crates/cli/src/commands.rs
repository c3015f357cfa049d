use std::fs;
use std::path::{Path, PathBuf};

use rayon::prelude::*;
use serde_json::{json, Value};

use singlink::cycle::{is_rational_with, LauferOptions};
use singlink::mcg::{parse_script, verify_derivation, McgError, VerifyOptions};
use singlink::openbook::{classify_seifert, RationalGraph};
use singlink::{
    adjunction_check, canonical_surgery_diagram, intersection_matrix, is_negative_definite,
    parse_document, Cycle, Document,
};

use crate::json;
use crate::report::{
    diagram_json, diagram_precondition, open_book_json, render_table, Report, TABLE_HEADER,
};
use crate::{CliError, Format, Options, Outcome};

fn file_label(path: &Path) -> String {
    path.file_name().map_or_else(
        || path.display().to_string(),
        |n| n.to_string_lossy().into_owned(),
    )
}

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|e| CliError::Input {
        path: path.display().to_string(),
        message: e.to_string(),
    })
}

pub fn load(path: &Path) -> Result<Document, CliError> {
    let text = read(path)?;
    parse_document(&text).map_err(|e| CliError::Input {
        path: path.display().to_string(),
        message: e.to_string(),
    })
}

fn laufer(opts: &Options) -> LauferOptions {
    LauferOptions {
        coeff_cap: opts.coeff_cap,
        ..LauferOptions::default()
    }
}

fn require_definite(doc: &Document) -> Result<(), CliError> {
    if !is_negative_definite(&intersection_matrix(&doc.graph)).expect("symmetric") {
        return Err(CliError::Precondition(
            "intersection form is not negative definite, so the link is not Milnor fillable".into(),
        ));
    }
    Ok(())
}

fn rational_graph<'a>(doc: &'a Document, opts: &Options) -> Result<RationalGraph<'a>, CliError> {
    require_definite(doc)?;
    RationalGraph::with_options(&doc.graph, &laufer(opts))
        .map_err(|e| CliError::Precondition(e.to_string()))
}

fn emit(format: Format, value: &Value, table: impl FnOnce() -> String) -> String {
    match format {
        Format::Json => json::render(value),
        Format::Table => table(),
    }
}

fn key_values(rows: &[(&str, String)]) -> String {
    let width = rows.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
    rows.iter()
        .map(|(k, v)| format!("{k:<width$}  {v}\n"))
        .collect()
}

pub fn invariants(path: &Path, format: Format, opts: &Options) -> Result<Outcome, CliError> {
    let report = report_for(path, opts)?;
    let code = if report.fillable { 0 } else { 2 };
    let stdout = emit(format, &report.to_json(), || report.to_table());
    Ok(Outcome {
        stdout,
        stderr: String::new(),
        code,
    })
}

fn report_for(path: &Path, opts: &Options) -> Result<Report, CliError> {
    let doc = load(path)?;
    let mut report = Report::build(&file_label(path), doc, &laufer(opts));
    if let Err(e) = report.consistency() {
        report
            .warnings
            .push(format!("internal consistency check failed: {e}"));
    }
    Ok(report)
}

pub fn cycle(path: &Path, format: Format, opts: &Options) -> Result<Outcome, CliError> {
    let doc = load(path)?;
    require_definite(&doc)?;
    let cert = is_rational_with(&doc.graph, &laufer(opts))
        .map_err(|e| CliError::Precondition(e.to_string()))?;
    let value = json!({
        "cycle": json::ints(cert.cycle.coefficients()),
        "rational": cert.rational,
        "self_intersection": json::wide(cert.self_intersection),
        "certificate_sum": json::wide(cert.sum),
    });
    let stdout = emit(format, &value, || {
        key_values(&[
            ("cycle", cert.cycle.to_string()),
            ("Z.Z", cert.self_intersection.to_string()),
            ("Artin sum", cert.sum.to_string()),
            ("rational", cert.rational.to_string()),
        ])
    });
    Ok(Outcome::ok(stdout))
}

/// `m` is `min` or a comma separated list of positive integers.
pub fn openbook(path: &Path, m: &str, format: Format, opts: &Options) -> Result<Outcome, CliError> {
    let doc = load(path)?;
    let rg = rational_graph(&doc, opts)?;
    let ob = if m.trim() == "min" {
        rg.minimal()
    } else {
        let coeffs: Vec<i64> = m
            .split(',')
            .map(|t| t.trim().parse::<i64>())
            .collect::<Result<_, _>>()
            .map_err(|e| CliError::Usage(format!("--m `{m}`: {e}")))?;
        rg.open_book(&Cycle::new(coeffs))
            .map_err(|e| CliError::Precondition(e.to_string()))?
    };
    let value = open_book_json(&ob);
    let stdout = emit(format, &value, || {
        let join = |xs: &[i64]| {
            xs.iter()
                .map(|x| x.to_string())
                .collect::<Vec<_>>()
                .join(",")
        };
        key_values(&[
            ("m", ob.m.to_string()),
            ("n", format!("({})", join(&ob.n))),
            ("genus", ob.page_genus.to_string()),
            ("binding", ob.binding_count.to_string()),
            ("norm", ob.norm.to_string()),
            ("class", ob.class().to_string()),
        ])
    });
    Ok(Outcome::ok(stdout))
}

pub fn classify(path: &Path, format: Format, opts: &Options) -> Result<Outcome, CliError> {
    let doc = load(path)?;
    let rg = rational_graph(&doc, opts)?;
    let ob = rg.minimal();
    let class = match &doc.seifert {
        Some(s) => {
            classify_seifert(s, &doc.graph).map_err(|e| CliError::Precondition(e.to_string()))?
        }
        None => ob.class(),
    };
    let value = json!({
        "class": class.name(),
        "support": class.to_string(),
        "page_genus": json::int(ob.page_genus),
        "e0": doc.seifert.as_ref().map(|s| json::int(s.e0())),
    });
    let stdout = emit(format, &value, || {
        key_values(&[("class", class.to_string())])
    });
    Ok(Outcome::ok(stdout))
}

pub fn diagram(path: &Path, format: Format) -> Result<Outcome, CliError> {
    let doc = load(path)?;
    let g = &doc.graph;
    diagram_precondition(g).map_err(CliError::Precondition)?;
    let d = canonical_surgery_diagram(g).map_err(|e| CliError::Precondition(e.to_string()))?;
    let cert = adjunction_check(&d, g).map_err(|e| CliError::Precondition(e.to_string()))?;
    let value = diagram_json(&d, &cert);
    let stdout = emit(format, &value, || {
        let rows: Vec<Vec<String>> = d
            .components()
            .iter()
            .map(|c| {
                vec![
                    c.vertex.clone(),
                    c.weight.to_string(),
                    c.tb.to_string(),
                    c.rot.to_string(),
                    c.front.cusps_up.to_string(),
                    c.front.cusps_down.to_string(),
                ]
            })
            .collect();
        let mut out = render_table(&["vertex", "e", "tb", "rot", "up", "down"], &rows);
        out.push_str(&format!("adjunction certificate: {}\n", cert.holds));
        out
    });
    Ok(Outcome::ok(stdout))
}

pub fn mcg_verify(path: &Path, format: Format, opts: &Options) -> Result<Outcome, CliError> {
    let text = read(path)?;
    let label = path.display().to_string();
    let input = |e: McgError| CliError::Input {
        path: label.clone(),
        message: e.to_string(),
    };
    let d = parse_script(&text).map_err(input)?;
    let v = verify_derivation(
        &d,
        &VerifyOptions {
            rewrite_depth: opts.rewrite_depth,
        },
    )
    .map_err(input)?;
    let steps: Vec<Value> = v
        .steps
        .iter()
        .map(|s| {
            json!({
                "index": s.index,
                "move": s.mv.to_string(),
                "combinatorial": s.check.combinatorial,
                "homology": s.check.homology,
                "path": s.check.path.iter().map(|m| m.to_string()).collect::<Vec<_>>(),
            })
        })
        .collect();
    let value = json!({
        "surface": d.surface.name(),
        "valid": v.valid,
        "failing_step": v.failing_step,
        "failing_line": v.failing_step.map(|i| d.lines[i]),
        "reason": v.reason,
        "steps": steps,
    });
    let stdout = emit(format, &value, || {
        let mut out = format!("surface {}\n", d.surface.name());
        for s in &v.steps {
            let mark = if s.check.ok() { "ok" } else { "FAIL" };
            out.push_str(&format!(
                "step {:>3}  {:<18} {mark}\n",
                s.index,
                s.mv.to_string()
            ));
        }
        match (&v.failing_step, &v.reason) {
            (Some(i), Some(r)) => out.push_str(&format!(
                "invalid at step {i} (line {}): {r}\n",
                d.lines[*i]
            )),
            _ => out.push_str("valid\n"),
        }
        out
    });
    Ok(Outcome {
        stdout,
        stderr: String::new(),
        code: if v.valid { 0 } else { 2 },
    })
}

fn batch_files(dir: &Path) -> Result<Vec<PathBuf>, CliError> {
    let entries = fs::read_dir(dir).map_err(|e| CliError::Input {
        path: dir.display().to_string(),
        message: e.to_string(),
    })?;
    let mut files = Vec::new();
    for entry in entries {
        let entry = entry.map_err(|e| CliError::Input {
            path: dir.display().to_string(),
            message: e.to_string(),
        })?;
        let path = entry.path();
        let hidden = entry.file_name().to_string_lossy().starts_with('.');
        if path.is_file() && !hidden {
            files.push(path);
        }
    }
    files.sort_by_key(|p| p.file_name().map(|n| n.to_os_string()));
    Ok(files)
}

/// Evaluates every file of `dir` in file name order. `jobs = Some(1)` runs
/// sequentially; otherwise files are evaluated on a thread pool and the
/// output is identical.
pub fn batch(
    dir: &Path,
    format: Format,
    opts: &Options,
    jobs: Option<usize>,
) -> Result<Outcome, CliError> {
    let files = batch_files(dir)?;
    let run = |p: &PathBuf| report_for(p, opts);
    let results: Vec<Result<Report, CliError>> = match jobs {
        Some(1) => files.iter().map(run).collect(),
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build()
            .map_err(|e| CliError::Usage(e.to_string()))?
            .install(|| files.par_iter().map(run).collect()),
        None => files.par_iter().map(run).collect(),
    };
    let mut stdout = String::new();
    let mut stderr = String::new();
    let mut rows = Vec::new();
    for r in &results {
        match r {
            Ok(report) => match format {
                Format::Json => stdout.push_str(&json::render(&report.to_json())),
                Format::Table => rows.push(report.table_row()),
            },
            Err(e) => stderr.push_str(&format!("{e}\n")),
        }
    }
    if format == Format::Table {
        stdout = render_table(&TABLE_HEADER, &rows);
    }
    let code = if stderr.is_empty() { 0 } else { 1 };
    Ok(Outcome {
        stdout,
        stderr,
        code,
    })
}
