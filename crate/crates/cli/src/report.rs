use num_bigint::BigInt;
use serde_json::{json, Map, Value};

use singlink::cycle::{is_rational_with, LauferOptions, RationalityCertificate};
use singlink::legendrian::AdjunctionReport;
use singlink::openbook::RationalGraph;
use singlink::{
    adjunction_check, bad_vertices, canonical_surgery_diagram, determinant, intersection_matrix,
    is_negative_definite, smith_normal_form, Document, HomologyStructure, IntMatrix,
    LegendrianDiagram, MilnorOpenBook,
};

use crate::json;

/// Everything computed for one input file.
#[derive(Debug, Clone)]
pub struct Report {
    pub file: String,
    pub doc: Document,
    pub matrix: IntMatrix,
    pub determinant: BigInt,
    pub fillable: bool,
    pub certificate: Option<RationalityCertificate>,
    pub open_book: Option<MilnorOpenBook>,
    pub h1: Option<HomologyStructure>,
    pub diagram: Option<(LegendrianDiagram, AdjunctionReport)>,
    pub bad_vertices: Vec<String>,
    pub warnings: Vec<String>,
}

impl Report {
    pub fn build(file: &str, doc: Document, laufer: &LauferOptions) -> Report {
        let g = &doc.graph;
        let matrix = intersection_matrix(g);
        let det = determinant(&matrix);
        let fillable = is_negative_definite(&matrix).expect("intersection matrices are symmetric");
        let mut r = Report {
            file: file.to_string(),
            matrix,
            determinant: det,
            fillable,
            certificate: None,
            open_book: None,
            h1: None,
            diagram: None,
            bad_vertices: bad_vertices(g),
            warnings: Vec::new(),
            doc: doc.clone(),
        };
        if !fillable {
            r.warnings.push(
                "intersection form is not negative definite, so the link is not Milnor fillable"
                    .into(),
            );
            return r;
        }
        r.h1 = Some(smith_normal_form(&r.matrix));
        match is_rational_with(g, laufer) {
            Ok(cert) => {
                if cert.rational {
                    match RationalGraph::with_options(g, laufer) {
                        Ok(rg) => r.open_book = Some(rg.minimal()),
                        Err(e) => r.warnings.push(e.to_string()),
                    }
                } else {
                    r.warnings.push(format!(
                        "not rational (Artin sum {}); Milnor open book invariants are not computed",
                        cert.sum
                    ));
                }
                r.certificate = Some(cert);
            }
            Err(e) => r.warnings.push(format!("fundamental cycle: {e}")),
        }
        match diagram_precondition(g) {
            Ok(()) => match canonical_surgery_diagram(g) {
                Ok(d) => {
                    let cert = adjunction_check(&d, g).expect("diagram built from this graph");
                    r.diagram = Some((d, cert));
                }
                Err(e) => r.warnings.push(format!("surgery diagram: {e}")),
            },
            Err(why) => r.warnings.push(format!("no surgery diagram: {why}")),
        }
        r
    }

    pub fn rational(&self) -> Option<bool> {
        self.certificate.as_ref().map(|c| c.rational)
    }

    /// `Mn = 2 Mg - 2 + Mb`, and `|H1| = |det|` for definite forms.
    pub fn consistency(&self) -> Result<(), String> {
        if let Some(ob) = &self.open_book {
            if ob.norm != 2 * ob.page_genus - 2 + ob.binding_count {
                return Err(format!("norm {} differs from 2g - 2 + b", ob.norm));
            }
        }
        if let Some(h) = &self.h1 {
            if self.fillable && h.order.magnitude() != self.determinant.magnitude() {
                return Err(format!(
                    "|H1| = {} but |det| = {}",
                    h.order,
                    self.determinant.magnitude()
                ));
            }
        }
        Ok(())
    }

    pub fn to_json(&self) -> Value {
        let g = &self.doc.graph;
        let vertices: Vec<Value> = g
            .vertices()
            .iter()
            .map(|v| json!({"id": v.id, "weight": json::int(v.weight), "genus": v.genus}))
            .collect();
        let edges: Vec<Value> = g
            .sorted_edge_ids()
            .into_iter()
            .map(|(a, b)| json!([a, b]))
            .collect();
        let mut input = Map::new();
        input.insert("file".into(), self.file.clone().into());
        input.insert("vertices".into(), Value::Array(vertices));
        input.insert("edges".into(), Value::Array(edges));
        input.insert(
            "seifert".into(),
            self.doc.seifert.as_ref().map(|s| s.to_string()).into(),
        );

        let mut out = Map::new();
        out.insert("input".into(), Value::Object(input));
        out.insert("fillable".into(), self.fillable.into());
        out.insert("determinant".into(), json::big(&self.determinant));
        out.insert("intersection_matrix".into(), json::matrix(&self.matrix));
        out.insert("bad_vertices".into(), self.bad_vertices.clone().into());
        out.insert("warnings".into(), self.warnings.clone().into());
        out.insert("rational".into(), self.rational().into());
        out.insert(
            "certificate".into(),
            self.certificate.as_ref().map_or(Value::Null, |c| {
                json!({"self_intersection": json::wide(c.self_intersection), "sum": json::wide(c.sum)})
            }),
        );
        out.insert(
            "fundamental_cycle".into(),
            self.certificate
                .as_ref()
                .map_or(Value::Null, |c| json::ints(c.cycle.coefficients())),
        );
        out.insert(
            "open_book".into(),
            self.open_book.as_ref().map_or(Value::Null, open_book_json),
        );
        out.insert(
            "support".into(),
            self.open_book
                .as_ref()
                .map_or(Value::Null, |ob| ob.class().to_string().into()),
        );
        out.insert(
            "h1".into(),
            self.h1.as_ref().map_or(Value::Null, homology_json),
        );
        out.insert(
            "diagram".into(),
            self.diagram
                .as_ref()
                .map_or(Value::Null, |(d, c)| diagram_json(d, c)),
        );
        Value::Object(out)
    }

    pub fn to_table(&self) -> String {
        let mut rows: Vec<(&str, String)> = vec![
            ("file", self.file.clone()),
            ("vertices", self.doc.graph.len().to_string()),
            ("fillable", self.fillable.to_string()),
            ("determinant", self.determinant.to_string()),
        ];
        if let Some(c) = &self.certificate {
            rows.push(("rational", format!("{} (Artin sum {})", c.rational, c.sum)));
            rows.push(("fundamental cycle", c.cycle.to_string()));
        }
        if let Some(ob) = &self.open_book {
            rows.push(("m", ob.m.to_string()));
            rows.push(("n", format!("({})", join(&ob.n))));
            rows.push((
                "Mg / Mb / Mn",
                format!("{} / {} / {}", ob.page_genus, ob.binding_count, ob.norm),
            ));
            rows.push(("support", ob.class().to_string()));
        }
        if let Some(h) = &self.h1 {
            rows.push(("H1", h.to_string()));
        }
        if let Some((d, c)) = &self.diagram {
            let tb: Vec<i64> = d.components().iter().map(|x| x.tb).collect();
            let rot: Vec<i64> = d.components().iter().map(|x| x.rot).collect();
            rows.push(("tb", format!("({})", join(&tb))));
            rows.push(("rot", format!("({})", join(&rot))));
            rows.push(("adjunction", c.holds.to_string()));
        }
        if !self.bad_vertices.is_empty() {
            rows.push(("bad vertices", self.bad_vertices.join(", ")));
        }
        for w in &self.warnings {
            rows.push(("warning", w.clone()));
        }
        let width = rows.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
        rows.iter()
            .map(|(k, v)| format!("{k:<width$}  {v}\n"))
            .collect()
    }

    pub fn table_row(&self) -> Vec<String> {
        let dash = || "-".to_string();
        let ob = self.open_book.as_ref();
        vec![
            self.file.clone(),
            self.doc.graph.len().to_string(),
            self.fillable.to_string(),
            self.rational().map_or_else(dash, |r| r.to_string()),
            self.certificate
                .as_ref()
                .map_or_else(dash, |c| c.cycle.to_string()),
            ob.map_or_else(dash, |o| o.page_genus.to_string()),
            ob.map_or_else(dash, |o| o.binding_count.to_string()),
            ob.map_or_else(dash, |o| o.norm.to_string()),
            ob.map_or_else(dash, |o| o.class().to_string()),
            self.h1.as_ref().map_or_else(dash, |h| h.to_string()),
        ]
    }
}

pub const TABLE_HEADER: [&str; 10] = [
    "file", "r", "fillable", "rational", "cycle", "Mg", "Mb", "Mn", "class", "H1",
];

pub fn render_table(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = header.iter().map(|h| h.len()).collect();
    for row in rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.len());
        }
    }
    let line = |cells: Vec<&str>| -> String {
        let parts: Vec<String> = cells
            .iter()
            .zip(&widths)
            .map(|(c, w)| format!("{c:<w$}"))
            .collect();
        let mut s = parts.join("  ").trim_end().to_string();
        s.push('\n');
        s
    };
    let mut out = line(header.to_vec());
    for row in rows {
        out.push_str(&line(row.iter().map(String::as_str).collect()));
    }
    out
}

fn join(xs: &[i64]) -> String {
    xs.iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

/// The canonical diagram is emitted only for graphs whose weights are all at
/// most -2 and which have no bad vertex. A central `-2` vertex of degree 3
/// needs the rolled-up construction, which is not computed.
pub fn diagram_precondition(g: &singlink::PlumbingGraph) -> Result<(), String> {
    if let Some(v) = g.vertices().iter().find(|v| v.weight > -2) {
        return Err(format!(
            "vertex {} has weight {}; every weight must be <= -2",
            v.id, v.weight
        ));
    }
    let bad = bad_vertices(g);
    if !bad.is_empty() {
        return Err(format!(
            "bad vertices {} (e + d > 0); with e0 = -2 the canonical structure needs a rolled-up diagram, which is not computed",
            bad.join(", ")
        ));
    }
    Ok(())
}

pub fn open_book_json(ob: &MilnorOpenBook) -> Value {
    json!({
        "m": json::ints(ob.m.coefficients()),
        "n": json::ints(&ob.n),
        "genus": json::int(ob.page_genus),
        "binding": json::int(ob.binding_count),
        "norm": json::int(ob.norm),
        "class": ob.class().name(),
    })
}

pub fn homology_json(h: &HomologyStructure) -> Value {
    json!({
        "rank": h.rank,
        "invariant_factors": Value::Array(h.invariant_factors.iter().map(json::big).collect()),
        "order": json::big(&h.order),
        "text": h.to_string(),
    })
}

pub fn diagram_json(d: &LegendrianDiagram, cert: &AdjunctionReport) -> Value {
    let components: Vec<Value> = d
        .components()
        .iter()
        .map(|c| {
            json!({
                "vertex": c.vertex,
                "weight": json::int(c.weight),
                "tb": json::int(c.tb),
                "rot": json::int(c.rot),
                "surgery": json::int(c.surgery),
                "cusps_up": json::int(c.front.cusps_up),
                "cusps_down": json::int(c.front.cusps_down),
            })
        })
        .collect();
    let clasps: Vec<Value> = d.clasps().iter().map(|(a, b)| json!([a, b])).collect();
    json!({
        "components": components,
        "clasps": clasps,
        "orientation": d.orientation().name(),
        "certificate": {"holds": cert.holds, "failures": cert.failures},
    })
}
