//! Acceptance run: one PASS/FAIL line per criterion, non-zero exit on any
//! failure.

use std::collections::BTreeMap;
use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use singlink::cycle::{fundamental_cycle_with, LauferOptions};
use singlink::graph::families::{
    e6, e7, e8, gamma_family, lens_chain, m_family, n_family, p_family,
};
use singlink::graph::{parse_document, Document, PlumbingGraph, Vertex};
use singlink::lattice::three_holed_linking_matrix;
use singlink::mcg::action::{is_identity, preserves_form};
use singlink::mcg::{
    compare_on_homology, homology_action, parse_script, verify_derivation, verify_relation, Letter,
    SurfaceModel, TwistWord, VerifyOptions,
};
use singlink::openbook::{classify_seifert, RationalGraph};
use singlink::{
    adjunction_check, bad_vertices, canonical_surgery_diagram, classify_support, determinant,
    fundamental_cycle, intersection_matrix, is_negative_definite, is_rational,
    minimal_milnor_openbook, smith_normal_form, SupportClass,
};

/// Every compared quantity is an exact integer.
const INTEGER_TOLERANCE: i64 = 0;
const RANDOM_SCAN_ORDERS: usize = 10;
const RANDOM_PLANAR_TREES: usize = 20;
const RANDOM_WORDS: usize = 1000;
const MINIMALITY_SLACK: i64 = 2;
const MINIMALITY_MAX_VERTICES: usize = 8;
const SEED: u64 = 0x5eed_2026;
const SUITE_BUDGET: Duration = Duration::from_secs(60);

type Outcome = Result<String, String>;
type Criterion<'a> = (&'static str, Box<dyn Fn() -> Outcome + 'a>);

fn close(a: i64, b: i64) -> bool {
    (a - b).abs() <= INTEGER_TOLERANCE
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn corpus() -> BTreeMap<String, Document> {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("corpus");
    let mut out = BTreeMap::new();
    for entry in fs::read_dir(&dir).expect("corpus directory") {
        let path = entry.unwrap().path();
        if path.extension().and_then(|e| e.to_str()) != Some("plumb") {
            continue;
        }
        let text = fs::read_to_string(&path).unwrap();
        let doc = parse_document(&text).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
        out.insert(
            path.file_stem().unwrap().to_string_lossy().into_owned(),
            doc,
        );
    }
    out
}

fn script(name: &str) -> String {
    fs::read_to_string(
        PathBuf::from(env!("CARGO_MANIFEST_DIR"))
            .join("scripts")
            .join(name),
    )
    .unwrap()
}

fn coeffs(g: &PlumbingGraph) -> Result<Vec<i64>, String> {
    fundamental_cycle(g)
        .map(|c| c.coefficients().to_vec())
        .map_err(|e| e.to_string())
}

fn criterion_1() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut cases: Vec<(String, PlumbingGraph, Vec<i64>)> = Vec::new();
    for t in 2..=6i64 {
        let u = t as usize;
        cases.push((format!("N_{t}"), n_family(t), vec![1, 2, 1, 1]));
        let mut m = vec![1];
        m.extend(std::iter::repeat_n(2, u + 1));
        m.extend([1, 1]);
        cases.push((format!("M_{t}"), m_family(t), m));
        let mut gp = vec![1, 2];
        gp.extend(std::iter::repeat_n(3, u - 1));
        gp.extend([2, 1, 1]);
        cases.push((format!("Gamma_{t}"), gamma_family(t), gp));
        let mut pn: Vec<i64> = (1..=t + 1).collect();
        pn.extend((1..=t).rev());
        pn.push(1);
        cases.push((format!("P_{t}"), p_family(t), pn));
    }
    for (name, g, expect) in &cases {
        let got = coeffs(g)?;
        ensure(
            got.len() == expect.len() && got.iter().zip(expect).all(|(a, b)| close(*a, *b)),
            || format!("{name}: expected {expect:?}, got {got:?}"),
        )?;
        let mut order: Vec<usize> = (0..g.len()).collect();
        for _ in 0..RANDOM_SCAN_ORDERS {
            order.shuffle(&mut rng);
            let opts = LauferOptions {
                scan_order: Some(order.clone()),
                ..LauferOptions::default()
            };
            let z = fundamental_cycle_with(g, &opts).map_err(|e| e.to_string())?;
            ensure(z.coefficients() == &got[..], || {
                format!("{name}: scan order {order:?} gives {z}")
            })?;
        }
    }
    Ok(format!(
        "{} graphs, {RANDOM_SCAN_ORDERS} scan orders each",
        cases.len()
    ))
}

fn criterion_2() -> Outcome {
    for p in 2..=8 {
        let ob = minimal_milnor_openbook(&gamma_family(p)).map_err(|e| e.to_string())?;
        ensure(
            close(ob.page_genus, 2) && close(ob.binding_count, 1) && close(ob.norm, 3),
            || {
                format!(
                    "Gamma_{p}: (Mg, Mb, Mn) = ({}, {}, {})",
                    ob.page_genus, ob.binding_count, ob.norm
                )
            },
        )?;
    }
    let sg_upper = 1;
    for n in 2..=6 {
        let ob = minimal_milnor_openbook(&p_family(n)).map_err(|e| e.to_string())?;
        ensure(close(ob.page_genus, n) && close(ob.norm, 2 * n - 1), || {
            format!("P_{n}: Mg = {}, Mn = {}", ob.page_genus, ob.norm)
        })?;
        ensure(ob.page_genus - sg_upper >= n - 1, || {
            format!("P_{n}: gap below n-1")
        })?;
    }
    Ok("Gamma_2..8 give (2,1,3); P_2..6 give Mg = n, Mn = 2n-1".into())
}

fn random_planar_tree(rng: &mut ChaCha8Rng) -> PlumbingGraph {
    let n = rng.gen_range(1..=8usize);
    let parents: Vec<usize> = (1..n).map(|i| rng.gen_range(0..i)).collect();
    let mut deg = vec![0i64; n];
    for (i, &p) in parents.iter().enumerate() {
        deg[i + 1] += 1;
        deg[p] += 1;
    }
    let vertices: Vec<Vertex> = (0..n)
        .map(|i| Vertex::new(format!("w{i}"), rng.gen_range(-7..=-(deg[i].max(2)))))
        .collect();
    let edges: Vec<(String, String)> = parents
        .iter()
        .enumerate()
        .map(|(i, &p)| (format!("w{}", i + 1), format!("w{p}")))
        .collect();
    PlumbingGraph::new(vertices, &edges).unwrap()
}

fn criterion_3() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 3);
    for t in 0..RANDOM_PLANAR_TREES {
        let g = random_planar_tree(&mut rng);
        ensure(bad_vertices(&g).is_empty(), || {
            format!("tree {t} has a bad vertex")
        })?;
        ensure(
            is_negative_definite(&intersection_matrix(&g)).unwrap(),
            || format!("tree {t} not definite"),
        )?;
        let formula: i64 = -g
            .vertices()
            .iter()
            .zip(g.degrees())
            .map(|(v, d)| v.weight + d as i64)
            .sum::<i64>();
        let ob = minimal_milnor_openbook(&g).map_err(|e| format!("tree {t}: {e}"))?;
        ensure(
            close(ob.page_genus, 0) && close(ob.binding_count, formula),
            || {
                format!(
                    "tree {t}: formula Mb = {formula}, open book ({}, {})",
                    ob.page_genus, ob.binding_count
                )
            },
        )?;
    }
    Ok(format!("{RANDOM_PLANAR_TREES} random trees"))
}

fn criterion_4() -> Outcome {
    let mut count = 0;
    for p in 2..=30i64 {
        for q in 1..p {
            if num_integer::gcd(p, q) != 1 {
                continue;
            }
            let g = lens_chain(p, q).map_err(|e| e.to_string())?;
            let n = g.len() as i64;
            let sum: i64 = g.weights().iter().sum();
            let ob = minimal_milnor_openbook(&g).map_err(|e| format!("L({p},{q}): {e}"))?;
            ensure(close(ob.binding_count, 2 - 2 * n - sum), || {
                format!(
                    "L({p},{q}): Mb = {}, formula {}",
                    ob.binding_count,
                    2 - 2 * n - sum
                )
            })?;
            let det = determinant(&intersection_matrix(&g));
            ensure(det.magnitude() == BigInt::from(p).magnitude(), || {
                format!("L({p},{q}): |det| = {det}")
            })?;
            count += 1;
        }
    }
    Ok(format!("{count} lens spaces"))
}

fn criterion_5() -> Outcome {
    for p in 2..=8 {
        let h = smith_normal_form(&intersection_matrix(&gamma_family(p)));
        let expect: Vec<BigInt> = if p % 3 == 2 {
            vec![3.into(), 3.into()]
        } else {
            vec![9.into()]
        };
        ensure(h.rank == 0 && h.invariant_factors == expect, || {
            format!("Gamma_{p}: H1 = {h}")
        })?;
    }
    for q in 0..=10u64 {
        for r in 0..=10u64 {
            for s in 0..=10u64 {
                let formula = BigInt::from(q * r + q * s + r * s);
                let det = determinant(&three_holed_linking_matrix(q, r, s));
                ensure(det.magnitude() == formula.magnitude(), || {
                    format!("({q},{r},{s}): |det| = {det}")
                })?;
            }
        }
    }
    Ok("Gamma_2..8 invariant factors; 1331 linking matrices".into())
}

fn criterion_6(corpus: &BTreeMap<String, Document>) -> Outcome {
    let mut rational: Vec<(String, PlumbingGraph)> = vec![
        ("E6".into(), e6()),
        ("E7".into(), e7()),
        ("E8".into(), e8()),
    ];
    for t in 2..=6 {
        rational.push((format!("Gamma_{t}"), gamma_family(t)));
        rational.push((format!("N_{t}"), n_family(t)));
        rational.push((format!("M_{t}"), m_family(t)));
        rational.push((format!("P_{t}"), p_family(t)));
    }
    rational.push(("D4".into(), corpus["d4"].graph.clone()));
    for (name, g) in &rational {
        let cert = is_rational(g).map_err(|e| format!("{name}: {e}"))?;
        ensure(cert.rational && cert.sum == -2, || {
            format!("{name}: Artin sum {}", cert.sum)
        })?;
    }
    let r2 = &corpus["seifert_nonrational"].graph;
    ensure(
        is_negative_definite(&intersection_matrix(r2)).unwrap(),
        || "Y(-2;1/2,2/3,9/11) not definite".into(),
    )?;
    let cert = is_rational(r2).map_err(|e| e.to_string())?;
    ensure(!cert.rational, || {
        "Y(-2;1/2,2/3,9/11) reported rational".into()
    })?;
    let r1 = &corpus["seifert_degenerate"].graph;
    let m = intersection_matrix(r1);
    ensure(!is_negative_definite(&m).unwrap(), || {
        "Y(-2;1/2,2/3,5/6) reported definite".into()
    })?;
    ensure(determinant(&m) == BigInt::from(0), || {
        format!("Y(-2;1/2,2/3,5/6): det = {}", determinant(&m))
    })?;
    Ok(format!(
        "{} rational graphs; both negative examples",
        rational.len()
    ))
}

fn criterion_7(corpus: &BTreeMap<String, Document>) -> Outcome {
    let mut classified = 0;
    let mut skipped = Vec::new();
    for (name, doc) in corpus {
        let Some(s) = &doc.seifert else { continue };
        let definite = is_negative_definite(&intersection_matrix(&doc.graph)).unwrap();
        let rational = definite && is_rational(&doc.graph).map(|c| c.rational).unwrap_or(false);
        if !rational {
            skipped.push(name.clone());
            continue;
        }
        let class = classify_seifert(s, &doc.graph).map_err(|e| format!("{name}: {e}"))?;
        ensure((class == SupportClass::Planar) == (s.e0() <= -3), || {
            format!("{name}: {class}")
        })?;
        classified += 1;
    }
    let mut elliptic = vec![e6(), e7(), e8()];
    for t in 2..=6 {
        elliptic.push(n_family(t));
        elliptic.push(m_family(t));
    }
    elliptic.push(m_family(0));
    elliptic.push(m_family(1));
    for g in &elliptic {
        let c = classify_support(g).map_err(|e| e.to_string())?;
        ensure(c == SupportClass::Elliptic, || {
            format!("{} vertices: {c}", g.len())
        })?;
    }
    for p in 2..=8 {
        let c = classify_support(&gamma_family(p)).map_err(|e| e.to_string())?;
        ensure(c == SupportClass::Higher(2), || format!("Gamma_{p}: {c}"))?;
    }
    Ok(format!(
        "{classified} Seifert entries (skipped, no Milnor open book: {})",
        skipped.join(", ")
    ))
}

fn criterion_8(corpus: &BTreeMap<String, Document>) -> Outcome {
    let mut graphs = 0;
    let mut flips = 0;
    for (name, doc) in corpus {
        let g = &doc.graph;
        if g.weights().iter().any(|&e| e > -2) {
            continue;
        }
        let d = canonical_surgery_diagram(g).map_err(|e| format!("{name}: {e}"))?;
        for (c, v) in d.components().iter().zip(g.vertices()) {
            ensure(c.rot == c.tb + 1 && c.tb + 1 == v.weight + 2, || {
                format!(
                    "{name}/{}: tb {}, rot {}, e {}",
                    c.vertex, c.tb, c.rot, v.weight
                )
            })?;
        }
        let rep = adjunction_check(&d, g).map_err(|e| e.to_string())?;
        ensure(rep.holds, || {
            format!("{name}: certificate fails at {:?}", rep.failures)
        })?;
        for j in 0..d.components().len() {
            if let Ok(flipped) = d.flip_zigzag(j) {
                let rep = adjunction_check(&flipped, g).map_err(|e| e.to_string())?;
                ensure(!rep.holds, || {
                    format!("{name}: flip at {j} keeps the certificate")
                })?;
                flips += 1;
            }
        }
        graphs += 1;
    }
    Ok(format!(
        "{graphs} graphs, {flips} single flips all rejected"
    ))
}

fn criterion_9() -> Outcome {
    let ob = minimal_milnor_openbook(&e8()).map_err(|e| e.to_string())?;
    ensure(
        close(ob.page_genus, 1) && close(ob.binding_count, 1) && close(ob.norm, 1),
        || format!("E8: ({}, {}, {})", ob.page_genus, ob.binding_count, ob.norm),
    )?;
    Ok("E8: Mg = Mb = Mn = 1".into())
}

fn random_word(rng: &mut ChaCha8Rng, names: &[String]) -> TwistWord {
    let len = rng.gen_range(0..=12);
    TwistWord::new(
        (0..len)
            .map(|_| {
                Letter::new(
                    names[rng.gen_range(0..names.len())].clone(),
                    if rng.gen_bool(0.5) { 1 } else { -1 },
                )
            })
            .collect(),
    )
}

fn criterion_10() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 10);
    let surfaces: Vec<SurfaceModel> = [
        "one-holed-torus",
        "two-holed-torus",
        "n-family 4",
        "four-holed-torus",
    ]
    .iter()
    .map(|s| SurfaceModel::by_name(s).unwrap())
    .collect();
    for i in 0..RANDOM_WORDS {
        let s = &surfaces[i % surfaces.len()];
        let names: Vec<String> = s.curves().iter().map(|c| c.name.clone()).collect();
        let (a, b) = (random_word(&mut rng, &names), random_word(&mut rng, &names));
        let ha = homology_action(&a, s).map_err(|e| e.to_string())?;
        let hb = homology_action(&b, s).map_err(|e| e.to_string())?;
        let hab = homology_action(&a.concat(&b), s).map_err(|e| e.to_string())?;
        ensure(hab == &ha * &hb, || {
            format!("action of `{a}` `{b}` is not multiplicative")
        })?;
        ensure(
            is_identity(&(&ha * &homology_action(&a.inverse(), s).unwrap())),
            || format!("`{a}` inverse"),
        )?;
        ensure(preserves_form(&ha, s), || {
            format!("`{a}` does not preserve the form")
        })?;
    }
    let opts = VerifyOptions::default();
    let mut scripts = 0;
    for name in [
        "phi_n2",
        "phi_n3",
        "phi_n4",
        "phi_k0",
        "phi_k1",
        "phi_k2",
        "phi_p2",
        "phi_p3",
        "k2_s1_reduction",
        "d4_square",
        "psi_n3_square",
    ] {
        let d =
            parse_script(&script(&format!("{name}.deriv"))).map_err(|e| format!("{name}: {e}"))?;
        let v = verify_derivation(&d, &opts).map_err(|e| e.to_string())?;
        ensure(v.valid, || {
            format!("{name}: step {:?}: {:?}", v.failing_step, v.reason)
        })?;
        scripts += 1;
    }
    let torus = SurfaceModel::by_name("one-holed-torus").unwrap();
    let sq = compare_on_homology(
        &TwistWord::parse("(alpha^2 beta)^2").unwrap(),
        &TwistWord::parse("(alpha beta)^3").unwrap(),
        &torus,
    )
    .map_err(|e| e.to_string())?;
    ensure(sq.is_equal(), || {
        "(a^2 b)^2 and (a b)^3 differ on homology".into()
    })?;
    let mut relations = 0;
    for s in &surfaces {
        for r in s.relations() {
            ensure(verify_relation(r, s).unwrap().is_equal(), || {
                format!("{}: {}", s.name(), r.name)
            })?;
            relations += 1;
        }
    }
    let mut controls = 0;
    for name in ["corrupted_phi_n3", "corrupted_phi_p2_deleted"] {
        let bad = parse_script(&script(&format!("{name}.deriv"))).map_err(|e| e.to_string())?;
        let v = verify_derivation(&bad, &opts).map_err(|e| e.to_string())?;
        ensure(!v.valid, || format!("{name} verified"))?;
        controls += 1;
    }
    Ok(format!(
        "{RANDOM_WORDS} random word pairs, {scripts} scripts, {relations} relations, {controls} controls rejected"
    ))
}

fn criterion_11(corpus: &BTreeMap<String, Document>) -> Outcome {
    let mut checked = 0;
    let mut candidates = 0;
    for (name, doc) in corpus {
        let g = &doc.graph;
        if g.len() > MINIMALITY_MAX_VERTICES {
            continue;
        }
        let Ok(rg) = RationalGraph::new(g) else {
            continue;
        };
        let rep = rg.minimality(MINIMALITY_SLACK);
        ensure(rep.holds(), || {
            format!(
                "{name}: fundamental genus {} / sum {}, box minima {} / {}, minimizers {:?}",
                rep.minimal.page_genus,
                rep.minimal.page_genus + rep.minimal.binding_count,
                rep.min_genus,
                rep.min_sum,
                rep.minimizers
                    .iter()
                    .map(|c| c.to_string())
                    .collect::<Vec<_>>()
            )
        })?;
        checked += 1;
        candidates += rep.candidates;
    }
    Ok(format!(
        "{checked} graphs, {candidates} valid cycles enumerated"
    ))
}

fn main() -> ExitCode {
    let start = Instant::now();
    let corpus = corpus();
    let criteria: Vec<Criterion> = vec![
        ("fundamental cycles", Box::new(criterion_1)),
        ("Milnor invariants", Box::new(criterion_2)),
        ("planar family", Box::new(criterion_3)),
        ("lens spaces", Box::new(criterion_4)),
        ("first homology", Box::new(criterion_5)),
        ("rationality", Box::new(|| criterion_6(&corpus))),
        ("classification", Box::new(|| criterion_7(&corpus))),
        ("Legendrian adjunction", Box::new(|| criterion_8(&corpus))),
        ("E8 equalities", Box::new(criterion_9)),
        ("mapping class words", Box::new(criterion_10)),
        ("minimality", Box::new(|| criterion_11(&corpus))),
    ];
    let mut failed = 0;
    for (i, (title, run)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let outcome = run();
        let ms = t.elapsed().as_millis();
        match outcome {
            Ok(detail) => println!("criterion {:>2} PASS  {title}: {detail} ({ms} ms)", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {title}: {why} ({ms} ms)", i + 1);
            }
        }
    }
    let total = start.elapsed();
    println!(
        "acceptance: {} of {} passed in {:.2} s",
        criteria.len() - failed,
        criteria.len(),
        total.as_secs_f64()
    );
    if total > SUITE_BUDGET {
        println!("acceptance: over the {} s budget", SUITE_BUDGET.as_secs());
        failed += 1;
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
