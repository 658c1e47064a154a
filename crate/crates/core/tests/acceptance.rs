//! The ten acceptance criteria, each printed as one PASS/FAIL line.
//! Runs without the libtest harness so the lines always show.

mod support;

use std::time::{Duration, Instant};

use chernkit::circleops::{character_matrix, fredholm_index, kernel_dim_truncated, odd_character_derivation, op_b};
use chernkit::kseq::run_shipped;
use chernkit::ncforms::ptheta::perturbed_p_theta;
use chernkit::ncforms::verify::{
    compute_odd_character_integrand, expected_odd_integrand, verify_curvature_formula, verify_odd_character,
    verify_p_theta, verify_p_theta_for, verify_projection_identities, verify_projection_identities_for,
    verify_realness, verify_trace_vanishing,
};
use chernkit::ncforms::{GaussRational, TrigPoly};
use chernkit::{report::all_pass, CheckReport};
use num_traits::Zero;
use proptest::strategy::Strategy;
use proptest::test_runner::{Config, TestRunner};

const SEED: u64 = 1729;
const TOL: f64 = 1e-9;

struct Verdict {
    pass: bool,
    notes: Vec<String>,
}

impl Verdict {
    fn new() -> Self {
        Self { pass: true, notes: Vec::new() }
    }

    fn require(&mut self, ok: bool, what: impl Into<String>) {
        if !ok {
            self.pass = false;
            self.notes.push(what.into());
        }
    }

    fn reports(&mut self, rs: &[CheckReport]) {
        for r in rs.iter().filter(|r| !r.pass) {
            self.require(false, format!("{} failed ({})", r.name, r.symbolic_residual));
        }
    }

    fn within(&mut self, t: Duration, limit: Duration) {
        self.require(t < limit, format!("took {:.1}s, limit {:.0}s", t.as_secs_f64(), limit.as_secs_f64()));
    }
}

fn named<'a>(rs: &'a [CheckReport], name: &str) -> Option<&'a CheckReport> {
    rs.iter().find(|r| r.name == name)
}

fn c1_projection() -> Verdict {
    let mut v = Verdict::new();
    let t = Instant::now();
    let rs = verify_p_theta(SEED);
    v.within(t.elapsed(), Duration::from_secs(5));
    v.reports(&rs);
    for n in ["p_theta_idempotent", "p_theta_endpoint_0", "p_theta_endpoint_2pi"] {
        v.require(named(&rs, n).is_some_and(|r| r.pass && r.symbolic_residual == "0"), format!("{n} missing or nonzero"));
    }
    v
}

fn c2_projection_identities() -> Verdict {
    let mut v = Verdict::new();
    let rs = verify_projection_identities(SEED);
    v.reports(&rs);
    for n in ["pdpp_vanishes", "p_commutes_with_dpdp", "grading_anticommutes_with_dp"] {
        v.require(named(&rs, n).is_some_and(|r| r.pass), format!("{n} missing"));
    }
    let vacuous =
        |n: &str| named(&rs, n).is_some_and(|r| r.pass && (r.detail.contains("vacuous") || r.detail.contains("vanish")));
    v.require(vacuous("curvature_powers"), "curvature_powers not reported vacuous");
    v.require(vacuous("d_of_curvature"), "d_of_curvature not reported vacuous");

    let bad = perturbed_p_theta(TrigPoly::rational(1, 8));
    v.require(!all_pass(&verify_projection_identities_for(&bad, SEED)), "mutated p_θ passed the identities");
    v.require(!all_pass(&verify_p_theta_for(&bad, SEED)), "mutated p_θ passed as a projection");
    v
}

fn c3_trace() -> Verdict {
    let mut v = Verdict::new();
    let r = verify_trace_vanishing();
    v.require(r.pass && r.symbolic_residual == "0", format!("residual {}", r.symbolic_residual));
    v
}

fn c4_odd_character() -> Verdict {
    let mut v = Verdict::new();
    let t = Instant::now();
    match compute_odd_character_integrand() {
        Ok(oc) => {
            v.require(oc.residual.is_zero(), format!("residual {}", oc.residual));
            v.require(oc.f == expected_odd_integrand(), format!("f = {}", oc.f));
            let exact = oc.integral.two_pi_coeff.is_zero() && oc.integral.remainder == GaussRational::from_int(-1);
            v.require(exact, format!("∫f = {}", oc.integral));
        }
        Err(e) => v.require(false, e.to_string()),
    }
    let rs = verify_odd_character(SEED, 10, TOL);
    v.reports(&rs);
    let quad = named(&rs, "odd_character_quadrature");
    v.require(quad.is_some_and(|r| r.numeric_residual <= TOL), "quadrature disagrees");
    let bridge = named(&rs, "odd_character_bridge_loop");
    v.require(bridge.is_some_and(|r| r.numeric_residual <= TOL && r.seeds.len() == 10), "oracle bridge over 10 seeds");
    v.within(t.elapsed(), Duration::from_secs(30));
    v
}

fn c5_curvature() -> Verdict {
    let mut v = Verdict::new();
    let rs = verify_curvature_formula(SEED, 10, TOL);
    v.reports(&rs);
    v.require(named(&rs, "curvature_formula_free").is_some_and(|r| r.symbolic_residual == "0"), "free Γ not symbolic zero");
    v.require(
        named(&rs, "curvature_formula_numeric").is_some_and(|r| r.seeds.len() == 10 && r.numeric_residual <= TOL),
        "numeric curvature over 10 seeds",
    );
    v
}

fn c6_realness() -> Verdict {
    let mut v = Verdict::new();
    let rs = verify_realness(1, SEED, 20, TOL);
    v.reports(&rs);
    v.require(
        named(&rs, "realness_random_projections").is_some_and(|r| r.seeds.len() == 20 && r.numeric_residual <= TOL),
        "imaginary part over 20 seeds",
    );
    v
}

fn c7_index() -> Verdict {
    let mut v = Verdict::new();
    let t = Instant::now();
    let b = op_b();
    v.require(fredholm_index(&b).ok() == Some(1), "ind B ≠ 1");
    let adj = b.adjoint();
    for n in [64, 128, 256] {
        let (k, c) = (kernel_dim_truncated(&b, n, 1e-8), kernel_dim_truncated(&adj, n, 1e-8));
        v.require(k == 1 && c == 0, format!("N = {n}: ker {k}, ker* {c}"));
    }
    v.within(t.elapsed(), Duration::from_secs(10));
    v
}

fn c8_character() -> Verdict {
    let mut v = Verdict::new();
    for (c1, c2) in [(1.0, 0.0), (0.0, 1.0), (2.0, 3.0)] {
        let m = character_matrix(c1, c2);
        let want = [[c1, c2, 0.0], [0.0, 0.0, 0.0]];
        let dev = m
            .real_entries()
            .iter()
            .flatten()
            .zip(want.iter().flatten())
            .map(|(a, b)| (a - b).abs())
            .fold(m.max_imag(), f64::max);
        v.require(dev < 1e-12, format!("({c1}, {c2}): deviation {dev:e}"));
        let d = odd_character_derivation(c1, c2);
        v.require(d.re.is_finite() && d.im.is_finite(), "derivation recipe not computed");
        v.notes.push(format!("derivation recipe at ({c1}, {c2}): {:.6}", d.re));
    }
    v
}

fn c9_ktheory() -> Verdict {
    let mut v = Verdict::new();
    let expect: [(&str, usize, &str, &[&str]); 5] = [
        ("ss2", 0, "ℤ ⊕ ℤ₂", &["(1,1)", "(1,0)"]),
        ("ss2", 3, "ℤ", &["(0,1)"]),
        ("s1", 1, "ℤ²", &["[[I − H(D_θ)]_𝒦]₀", "[[H(D_θ)]_𝒦]₀"]),
        ("s1", 4, "ℤ", &["[[𝔷]_𝒦]₁"]),
        ("ss2_algebra", 1, "ℤ ⊕ ℤ₂", &["(1,1)", "(1,0)"]),
    ];
    for (name, node, group, labels) in expect {
        match run_shipped(name) {
            Ok(run) => {
                v.reports(&run.checks);
                let g = run.solved.group(node);
                v.require(g.is_some_and(|g| g.short() == group), format!("{name}[{node}] = {:?}", g.map(|g| g.short())));
                if let Some(g) = g {
                    let mut got = g.generator_labels.clone();
                    let mut want: Vec<String> = labels.iter().map(|s| s.to_string()).collect();
                    got.sort();
                    want.sort();
                    v.require(got == want, format!("{name}[{node}] labels {got:?}"));
                }
            }
            Err(e) => v.require(false, format!("{name}: {e}")),
        }
    }
    match run_shipped("torus") {
        Ok(run) => {
            v.reports(&run.checks);
            let last = run.diagram.suspension.as_ref().and_then(|s| s.steps.last());
            v.require(
                last.is_some_and(|(a, b)| a.short() == "ℤ⁴" && b.short() == "ℤ⁴"),
                "torus cosphere is not ℤ⁴, ℤ⁴",
            );
            let bracketed = last.is_some_and(|(a, b)| {
                a.generator_labels.iter().chain(&b.generator_labels).all(|l| l.starts_with('[') && l.contains(']'))
            });
            v.require(bracketed, "torus generators not in bracket notation");
        }
        Err(e) => v.require(false, format!("torus: {e}")),
    }
    v
}

fn run_property<S: Strategy>(
    v: &mut Verdict,
    name: &str,
    cases: u32,
    strategy: S,
    test: impl Fn(S::Value) -> support::Outcome,
) {
    let mut runner = TestRunner::new(Config { cases, failure_persistence: None, ..Config::default() });
    if let Err(e) = runner.run(&strategy, test) {
        v.require(false, format!("{name}: {e}"));
    }
}

fn c10_properties() -> Verdict {
    use support::*;
    let mut v = Verdict::new();
    let t = Instant::now();
    run_property(&mut v, "smith", 200, int_matrix(6, 9), |m| smith_invariants(&m));
    run_property(&mut v, "rank-nullity", 200, int_matrix(6, 9), |m| rank_nullity(&m));
    let dets = small_det_matrices();
    for m in &dets {
        if let Err(e) = cokernel_order(*m) {
            v.require(false, format!("cokernel of {m:?}: {e}"));
            break;
        }
    }
    v.notes.push(format!("cokernel order checked on all {} matrices", dets.len()));
    run_property(&mut v, "confluence", 200, (letters(14), pick_lists()), |(w, (a, b))| confluence(w, &a, &b));
    run_property(&mut v, "d²", 100, (nc_matrix(), nc_matrix(), nc_matrix()), |(a, b, c)| d_squared(a, b, c));
    run_property(&mut v, "involution", 100, (poly(), poly()), |(a, b)| star_involution(&a, &b));
    run_property(&mut v, "leibniz", 100, (poly(), poly()), |(a, b)| leibniz(&a, &b));
    run_property(&mut v, "cyclicity", 100, (nc_matrix(), nc_matrix()), |(a, b)| cyclicity(&a, &b));
    v.within(t.elapsed(), Duration::from_secs(120));
    v
}

type Criterion = (&'static str, fn() -> Verdict);

fn main() {
    let criteria: [Criterion; 10] = [
        ("p_θ is a projection with p_0 = p_2π = p_n", c1_projection),
        ("projection identities hold; top-degree items vacuous; mutants fail", c2_projection_identities),
        ("Tr(p_θ − p_n) = 0", c3_trace),
        ("odd character integrand, exact integral and oracle bridge", c4_odd_character),
        ("curvature formula, symbolic and numeric", c5_curvature),
        ("realness of the character form", c6_realness),
        ("ind B = 1 with stable truncated kernels", c7_index),
        ("character matrix (c1 c2 0; 0 0 0)", c8_character),
        ("K-groups of s1, ss2 and the torus cosphere", c9_ktheory),
        ("property suites", c10_properties),
    ];
    let total = Instant::now();
    let mut failed = Vec::new();
    for (i, (what, f)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let v = f();
        let status = if v.pass { "PASS" } else { "FAIL" };
        let mut line = format!("criterion {:>2}: {status}  {what} [{:.2}s]", i + 1, t.elapsed().as_secs_f64());
        for n in &v.notes {
            line.push_str(&format!("\n               {n}"));
        }
        println!("{line}");
        if !v.pass {
            failed.push(i + 1);
        }
    }
    println!("total {:.1}s", total.elapsed().as_secs_f64());
    if !failed.is_empty() {
        eprintln!("failed criteria: {failed:?}");
        std::process::exit(1);
    }
}
