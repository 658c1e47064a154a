//! The subcommands. Each one appends checks, data and text lines to a
//! report document; `report` runs them all into one.

use std::path::Path;

use chernkit::circleops::{
    character_matrix, index_data, kernel_dim_truncated, odd_character_derivation, shipped_operator, LatticeOperator,
};
use chernkit::kseq::diagram::Diagram;
use chernkit::kseq::sixterm::{MapKind, Resolution};
use chernkit::kseq::{load_shipped, parse_with_shipped, run_diagram, KseqError};
use chernkit::ncforms::ptheta::{p_theta_closed_form, perturbed_p_theta};
use chernkit::ncforms::verify::{
    compute_odd_character_integrand_for, verify_curvature_formula, verify_derivative_entries, verify_odd_character,
    verify_p_theta_for, verify_projection_identities_for, verify_realness, verify_trace_vanishing,
};
use chernkit::ncforms::TrigPoly;
use chernkit::CheckReport;
use serde_json::{json, Value};

use crate::output::{Document, Status};
use crate::{RunConfig, Target};

const NUMERIC_SEEDS: u64 = 10;
const REALNESS_SEEDS: u64 = 20;
/// Entries of the character matrix are means of trigonometric polynomials.
const CHARACTER_TOL: f64 = 1e-12;
const REPORT_WINDOWS: [usize; 3] = [64, 128, 256];
const CHARACTER_POINTS: [(f64, f64); 3] = [(1.0, 0.0), (0.0, 1.0), (2.0, 3.0)];

pub fn verify_forms(cfg: &RunConfig) -> Document {
    let mut doc = Document::new("verify-forms", cfg);
    forms_into(&mut doc, cfg);
    doc
}

pub fn index(spec: &str, cfg: &RunConfig) -> Document {
    let mut doc = Document::new("index", cfg);
    match load_operator(spec) {
        Ok(op) => {
            if let Some(entry) = index_into(&mut doc, spec, &op, &[cfg.truncation_n], None, cfg) {
                doc.set("operator", entry);
            }
        }
        Err(msg) => doc.fail_with(Status::Invalid, msg),
    }
    doc
}

pub fn character(cfg: &RunConfig) -> Document {
    let mut doc = Document::new("character", cfg);
    let entry = character_into(&mut doc, cfg.c1, cfg.c2);
    doc.set("character", entry);
    doc
}

pub fn ktheory(target: Option<Target>, file: Option<&Path>, cfg: &RunConfig) -> Document {
    let mut doc = Document::new("ktheory", cfg);
    let diagrams = match (target, file) {
        (Some(t), _) => {
            doc.set("target", t);
            target_diagrams(t)
        }
        (None, Some(path)) => std::fs::read_to_string(path)
            .map_err(|e| KseqError::InvalidInstance(format!("cannot read {}: {e}", path.display())))
            .and_then(|t| parse_with_shipped(&t))
            .map(|d| vec![d]),
        (None, None) => Err(KseqError::InvalidInstance("no target given".into())),
    };
    match diagrams {
        Ok(ds) => {
            let runs: Vec<Value> = ds.into_iter().filter_map(|d| diagram_into(&mut doc, d)).collect();
            doc.set("diagrams", runs);
        }
        Err(e) => fail_kseq(&mut doc, e),
    }
    doc
}

pub fn report(cfg: &RunConfig) -> Document {
    let mut doc = Document::new("report", cfg);
    doc.line("== differential forms ==");
    forms_into(&mut doc, cfg);

    doc.line("");
    doc.line("== circle operators ==");
    let mut ops = Vec::new();
    for (name, expected) in [("b", 1), ("b_conj", -1), ("b_flip", -1), ("identity", 0), ("conv_z", 0)] {
        let op = shipped_operator(name).expect("shipped operator");
        if let Some(e) = index_into(&mut doc, name, &op, &REPORT_WINDOWS, Some(expected), cfg) {
            ops.push(e);
        }
    }
    doc.set("operators", ops);

    doc.line("");
    doc.line("== character matrix ==");
    let chars: Vec<Value> = CHARACTER_POINTS.iter().map(|&(c1, c2)| character_into(&mut doc, c1, c2)).collect();
    doc.set("character", chars);

    doc.line("");
    doc.line("== K-theory ==");
    let mut runs = Vec::new();
    for t in [Target::S1, Target::Ss2, Target::Torus] {
        match target_diagrams(t) {
            Ok(ds) => runs.extend(ds.into_iter().filter_map(|d| diagram_into(&mut doc, d))),
            Err(e) => fail_kseq(&mut doc, e),
        }
    }
    doc.set("diagrams", runs);
    doc
}

fn forms_into(doc: &mut Document, cfg: &RunConfig) {
    let p = if cfg.mutated_fixture {
        doc.line("fixture: p_θ perturbed by 1/8 in its (1,1) entry");
        perturbed_p_theta(TrigPoly::rational(1, 8))
    } else {
        p_theta_closed_form()
    };
    doc.push_checks(verify_p_theta_for(&p, cfg.seed));
    doc.push_checks(verify_derivative_entries());
    doc.push_checks(verify_projection_identities_for(&p, cfg.seed));
    doc.push_checks([verify_trace_vanishing()]);
    doc.push_checks(verify_curvature_formula(cfg.seed, NUMERIC_SEEDS, cfg.oracle_tol));
    doc.push_checks(verify_realness(1, cfg.seed, REALNESS_SEEDS, cfg.oracle_tol));
    doc.push_checks(verify_odd_character(cfg.seed, NUMERIC_SEEDS, cfg.oracle_tol));
    match compute_odd_character_integrand_for(&p) {
        Ok(oc) => {
            doc.line(format!("odd character integrand f(θ) = {}", oc.f));
            doc.line(format!("∫₀^{{2π}} f(θ) dθ = {} ≈ {:.12}", oc.integral, oc.integral.to_complex().re));
            doc.set(
                "oddCharacter",
                json!({ "integrand": oc.f.to_string(), "integral": oc.integral.summary() }),
            );
        }
        Err(e) => doc.push_checks([CheckReport::new("odd_character_of_fixture", "Tr(p·dp∧dp) reduces to f(θ)·[u*δu]")
            .require(false)
            .detail(e.to_string())]),
    }
}

fn load_operator(spec: &str) -> Result<LatticeOperator, String> {
    if let Some(op) = shipped_operator(spec) {
        return Ok(op);
    }
    let text = std::fs::read_to_string(spec)
        .map_err(|e| format!("{spec:?} is neither a shipped operator nor a readable spec file: {e}"))?;
    LatticeOperator::from_json(&text).map_err(|e| format!("{spec}: {e}"))
}

/// Index data of one operator, with kernel counts at each window size.
/// `expected` adds a check on the index and on the kernel counts.
fn index_into(
    doc: &mut Document,
    name: &str,
    op: &LatticeOperator,
    windows: &[usize],
    expected: Option<i64>,
    cfg: &RunConfig,
) -> Option<Value> {
    let data = match index_data(op) {
        Ok(d) => d,
        Err(e) => {
            doc.fail_with(Status::Invalid, format!("{name}: {e}"));
            return None;
        }
    };
    let bw = op.bandwidth();
    if let Some(&n) = windows.iter().find(|&&n| n <= bw) {
        doc.fail_with(Status::Invalid, format!("{name}: window N = {n} does not exceed the bandwidth {bw}"));
        return None;
    }
    doc.line(format!(
        "{name}: winding at −∞ = {}, winding at +∞ = {}, index = {}",
        data.winding_minus, data.winding_plus, data.index
    ));
    let adjoint = op.adjoint();
    let mut kernels = Vec::new();
    for &n in windows {
        let ker = kernel_dim_truncated(op, n, cfg.svd_tol);
        let coker = kernel_dim_truncated(&adjoint, n, cfg.svd_tol);
        doc.line(format!("  N = {n}: dim ker = {ker}, dim ker of adjoint = {coker}"));
        let balance = ker as i64 - coker as i64;
        doc.push_checks([CheckReport::new(
            format!("index_balance[{name}, N={n}]"),
            "dim ker T − dim ker T* equals the symbol index",
        )
        .require(balance == data.index)
        .detail(format!("{ker} − {coker} = {balance}, index {}", data.index))]);
        if let Some(want) = expected {
            let (k, c) = if want >= 0 { (want as usize, 0) } else { (0, want.unsigned_abs() as usize) };
            doc.push_checks([CheckReport::new(
                format!("kernel_dims[{name}, N={n}]"),
                format!("dim ker = {k} and dim ker of adjoint = {c}"),
            )
            .require(ker == k && coker == c)
            .detail(format!("found {ker} and {coker}"))]);
        }
        kernels.push(json!({ "n": n, "kernelDim": ker, "adjointKernelDim": coker }));
    }
    if let Some(want) = expected {
        doc.push_checks([CheckReport::new(format!("fredholm_index[{name}]"), format!("ind = {want}"))
            .require(data.index == want)
            .detail(format!("found {}", data.index))]);
    }
    Some(json!({
        "name": name,
        "windingMinus": data.winding_minus,
        "windingPlus": data.winding_plus,
        "index": data.index,
        "bandwidth": bw,
        "kernels": kernels,
    }))
}

fn clean(x: f64) -> f64 {
    x + 0.0
}

fn character_into(doc: &mut Document, c1: f64, c2: f64) -> Value {
    let cm = character_matrix(c1, c2);
    let got = cm.real_entries().map(|r| r.map(clean));
    let want = [[c1, c2, 0.0], [0.0, 0.0, 0.0]];
    let dev = got.iter().flatten().zip(want.iter().flatten()).map(|(a, b)| (a - b).abs()).fold(cm.max_imag(), f64::max);
    let deriv = odd_character_derivation(c1, c2);
    let deriv = [clean(deriv.re), clean(deriv.im)];
    doc.line(format!("(c1, c2) = ({c1}, {c2})"));
    doc.line(format!("  mean recipe        {}", fmt_matrix(&got)));
    doc.line(format!("  derivation recipe  column 3 entry (1/2πi)τ(u*δu) = {} + {}i", deriv[0], deriv[1]));
    doc.push_checks([CheckReport::new(
        format!("character_matrix[{c1}, {c2}]"),
        "the character matrix is (c1 c2 0; 0 0 0) under the mean recipe",
    )
    .numeric(dev, CHARACTER_TOL)]);
    json!({
        "c1": c1,
        "c2": c2,
        "meanRecipe": got,
        "derivationRecipeColumn3": deriv,
    })
}

fn fmt_matrix(m: &[[f64; 3]; 2]) -> String {
    let row = |r: &[f64; 3]| format!("[{}, {}, {}]", r[0], r[1], r[2]);
    format!("[{}, {}]", row(&m[0]), row(&m[1]))
}

fn target_diagrams(t: Target) -> Result<Vec<Diagram>, KseqError> {
    let names: &[&str] = match t {
        Target::S1 => &["s1"],
        Target::Ss2 => &["ss2", "ss2_algebra"],
        Target::Torus => &["torus"],
    };
    names.iter().map(|n| load_shipped(n)).collect()
}

fn fail_kseq(doc: &mut Document, e: KseqError) {
    let status = match e {
        KseqError::Inconsistent(_) | KseqError::Underdetermined(_) => Status::Fail,
        _ => Status::Invalid,
    };
    doc.fail_with(status, e.to_string());
}

fn kind_name(k: &MapKind) -> &'static str {
    match k {
        MapKind::Matrix(_) => "matrix",
        MapKind::Zero => "zero",
        MapKind::Surjective => "surjective",
        MapKind::Unknown => "unknown",
    }
}

fn diagram_into(doc: &mut Document, d: Diagram) -> Option<Value> {
    let run = match run_diagram(d) {
        Ok(r) => r,
        Err(e) => {
            fail_kseq(doc, e);
            return None;
        }
    };
    let inst = &run.solved.instance;
    doc.line(format!("{}: {}", run.diagram.name, run.diagram.title));

    let mut steps = Vec::new();
    if let Some(s) = &run.diagram.suspension {
        for (alg, (k0, k1)) in s.algebras.iter().zip(&s.steps) {
            doc.line(format!("  split over {alg}: K₀ = {}, K₁ = {}", k0.short(), k1.short()));
            doc.line(format!("    K₀ = {}", k0.labeled()));
            doc.line(format!("    K₁ = {}", k1.labeled()));
            steps.push(json!({ "algebra": alg, "k0": k0, "k1": k1 }));
        }
    }

    let width = inst.nodes.iter().map(|n| n.name.chars().count()).max().unwrap_or(0);
    let mut nodes = Vec::new();
    for (i, (node, res)) in inst.nodes.iter().zip(&run.solved.resolutions).enumerate() {
        let pad = " ".repeat(width - node.name.chars().count());
        let how = match res {
            Resolution::Given => "given".to_string(),
            Resolution::Split { sub, quot } => format!("split: 0 → {} → · → {} → 0", sub.short(), quot.short()),
            Resolution::Ambiguous { sub, quot } => {
                doc.raise(Status::Ambiguous);
                let msg = format!(
                    "{}: extension 0 → {} → {} → {} → 0 cannot be decided",
                    run.diagram.name,
                    sub.labeled(),
                    node.name,
                    quot.labeled()
                );
                doc.error.get_or_insert(msg);
                format!("ambiguous: 0 → {} → · → {} → 0", sub.labeled(), quot.labeled())
            }
        };
        let shown = node.group.as_ref().map_or("?".to_string(), |g| g.labeled());
        doc.line(format!("  {}{pad} = {shown}  ({how})", node.name));
        nodes.push(json!({ "index": i, "name": node.name, "group": node.group, "resolution": res }));
    }
    let maps: Vec<Value> = inst
        .maps
        .iter()
        .map(|m| {
            let rows = m.matrix().and_then(|x| x.to_i64_rows());
            json!({ "name": m.name, "kind": kind_name(&m.kind), "matrix": rows, "derived": m.derived, "fact": m.fact })
        })
        .collect();
    if !run.solved.assumed.is_empty() {
        doc.line("  assumed facts:");
        for f in &run.solved.assumed {
            doc.line(format!("    - {f}"));
        }
    }
    doc.push_checks(run.checks.iter().cloned());
    Some(json!({
        "name": run.diagram.name,
        "title": run.diagram.title,
        "suspension": steps,
        "nodes": nodes,
        "maps": maps,
        "assumed": run.solved.assumed,
    }))
}
