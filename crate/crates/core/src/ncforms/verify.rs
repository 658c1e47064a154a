//! Verifiers for the projection, curvature and character identities.

use std::f64::consts::TAU;

use num_complex::Complex64;
use num_traits::Zero;

use super::error::FormError;
use super::form::{Basis, NCForm};
use super::gauss::GaussRational;
use super::integrate::{integrate_theta, IntegralValue};
use super::matrix::NcMatrix;
use super::oracle::{
    self, integrate_period, max_abs, numeric_p_theta, CMat, CommutatorModel,
    LoopModel, Model,
};
use super::poly::NCPoly;
use super::ptheta::{self, build_p_theta};
use super::trace::{reduce_mod_delta_exact, trace_cyclic_normal_form, u_star_du, TraceClass};
use super::trig::TrigPoly;
use super::word::Letter;
use crate::report::CheckReport;

/// θ values used for pointwise numeric checks.
const THETA_PROBES: [f64; 5] = [0.3, 1.1, 2.0, 3.7, 5.9];

fn form_diff(a: &NCForm, b: &NCForm) -> NCForm {
    a.sub(b).expect("forms of one dimension")
}

fn wedge(a: &NCForm, b: &NCForm) -> NCForm {
    a.wedge(b).expect("degrees within range")
}

/// `−(sin θ/8)(1−u)(1−u*)`, the expected `θ`-derivative of the (1,1) entry.
fn expected_dtheta_11() -> NCPoly {
    let one = NCPoly::one();
    let core = &(&one - &NCPoly::u()) * &(&one - &NCPoly::u_star());
    core.scale(&TrigPoly::sin_quarter(4).scale(&GaussRational::real(-1, 8)))
}

/// Exact checks on `p_θ` itself: idempotence, self-adjointness, the
/// factorization through `w_θ`, the endpoints and the closed-form derivatives.
pub fn verify_p_theta(seed: u64) -> Vec<CheckReport> {
    verify_p_theta_for(&ptheta::p_theta_closed_form(), seed)
}

pub fn verify_p_theta_for(p: &NcMatrix, seed: u64) -> Vec<CheckReport> {
    let pt = build_p_theta();
    let mut out = Vec::new();

    let sq = &(p * p) - p;
    let model = LoopModel::new(3, seed, 0);
    let mut num = 0.0f64;
    for &t in &THETA_PROBES {
        for s in [0, 9, 31] {
            let m = model.matrix(p, t, s);
            num = num.max(max_abs(&(&m * &m - &m)));
        }
    }
    out.push(
        CheckReport::new("p_theta_idempotent", "p_θ is a projection: p_θ² = p_θ")
            .symbolic(&sq, sq.is_zero())
            .numeric(num, 1e-10)
            .seeds([seed]),
    );

    let adj = &p.star() - p;
    out.push(
        CheckReport::new("p_theta_selfadjoint", "p_θ* = p_θ").symbolic(&adj, adj.is_zero()),
    );

    let conj = &(&(&pt.w * &pt.p_n) * &pt.w.star()) - p;
    out.push(
        CheckReport::new("p_theta_factorization", "p_θ = w_θ p_n w_θ* for the rotation w_θ")
            .symbolic(&conj, conj.is_zero()),
    );

    for (name, turns, text) in [
        ("p_theta_endpoint_0", 0, "p at θ = 0 equals p_n"),
        ("p_theta_endpoint_2pi", 1, "p at θ = 2π equals p_n (q = i)"),
    ] {
        let d = &p.eval_turns(turns) - &pt.p_n;
        out.push(CheckReport::new(name, text).symbolic(&d, d.is_zero()));
    }
    out
}

/// Compares `δ_X(p)` and `∂_θ p` with the entrywise formulas.
pub fn verify_derivative_entries() -> Vec<CheckReport> {
    let p = ptheta::p_theta_closed_form();
    let dp = NCForm::from_matrix(p.clone()).exterior_d();
    let dx = dp.component(Basis::X);
    let dt = dp.component(Basis::Theta);
    let a = NCPoly::scalar(ptheta::quarter_sin_half_sq());
    let du = NCPoly::du();
    let dus = NCPoly::u_star().apply_delta();
    let mut out = Vec::new();

    let e11 = &a * &(&du + &dus);
    let r11 = &(dx.get(0, 0) - &e11) + &(dx.get(1, 1) + &e11);
    out.push(
        CheckReport::new(
            "delta_p_diagonal",
            "δ_X(p)₁₁ = (sin²(θ/2)/4)(δu + δu*) and δ_X(p)₂₂ = −δ_X(p)₁₁",
        )
        .symbolic(&r11, r11.is_zero()),
    );

    // Off-diagonal entries: Leibniz on (u−1)(sin(θ/2)/2)[cos²(θ/4) + u·sin²(θ/4)]
    // keeps a −sin²(θ/4)·δu term, easy to lose when expanding by hand.
    let h = NCPoly::scalar(TrigPoly::sin_quarter(2).scale(&GaussRational::real(1, 2)));
    let cc = NCPoly::scalar(&TrigPoly::cos_quarter(1) * &TrigPoly::cos_quarter(1));
    let ss = NCPoly::scalar(&TrigPoly::sin_quarter(1) * &TrigPoly::sin_quarter(1));
    let u = NCPoly::u();
    let us = NCPoly::u_star();
    let e12 = &h * &(&(&(&cc * &du) + &(&ss * &(&(&du * &u) + &(&u * &du)))) - &(&ss * &du));
    let e21 = &h * &(&(&(&cc * &dus) + &(&ss * &(&(&dus * &us) + &(&us * &dus)))) - &(&ss * &dus));
    let r12 = &(dx.get(0, 1) - &e12) + &(dx.get(1, 0) - &e21);
    out.push(
        CheckReport::new(
            "delta_p_offdiagonal",
            "δ_X(p)₁₂, δ_X(p)₂₁ by Leibniz on the closed-form p_θ entries",
        )
        .symbolic(&r12, r12.is_zero())
        .detail("both entries include a −sin²(θ/4)·δu (resp. δu*) term"),
    );

    let t11 = expected_dtheta_11();
    let rt = &(dt.get(0, 0) - &t11) + &(dt.get(1, 1) + &t11);
    out.push(
        CheckReport::new(
            "dtheta_p_diagonal",
            "(∂p/∂θ)₁₁ = −(sin θ/8)(1−u)(1−u*) and (∂p/∂θ)₂₂ = −(∂p/∂θ)₁₁",
        )
        .symbolic(&rt, rt.is_zero()),
    );

    let quarter = GaussRational::real(1, 4);
    let half_cos = NCPoly::scalar(TrigPoly::cos_quarter(2).scale(&quarter));
    let quarter_sin = NCPoly::scalar(TrigPoly::sin_quarter(2).scale(&quarter));
    let one = NCPoly::one();
    let t12 = &(&(&(&u - &one) * &half_cos) * &(&cc + &(&u * &ss)))
        + &(&(&(&u - &one) * &h) * &(&-&quarter_sin + &(&u * &quarter_sin)));
    let r12 = dt.get(0, 1) - &t12;
    let t21_expected = t12.star();
    let r21 = dt.get(1, 0) - &t21_expected;
    out.push(
        CheckReport::new(
            "dtheta_p_offdiagonal",
            "(∂p/∂θ)₁₂ in closed form; (∂p/∂θ)₂₁ is its adjoint",
        )
        .symbolic(format!("{r12} ; {r21}"), r12.is_zero() && r21.is_zero())
        .detail("(∂p/∂θ)₂₁ equals (∂p/∂θ)₁₂ only after starring"),
    );
    out
}

/// Identities for a projection-valued 0-form.
pub fn verify_projection_identities(seed: u64) -> Vec<CheckReport> {
    verify_projection_identities_for(&ptheta::p_theta_closed_form(), seed)
}

pub fn verify_projection_identities_for(p: &NcMatrix, seed: u64) -> Vec<CheckReport> {
    let n = p.dim();
    let pf = NCForm::from_matrix(p.clone());
    let dp = pf.exterior_d();
    let dpdp = wedge(&dp, &dp);
    let mut out = Vec::new();

    // Numeric shadows evaluated on the independently built p_θ.
    let model = LoopModel::new(3, seed, 0);
    let mut r1 = 0.0f64;
    let mut r2 = 0.0f64;
    let mut r3 = 0.0f64;
    for &t in &THETA_PROBES {
        for s in [0, 13, 40] {
            let np = numeric_p_theta(&model.letter(Letter::U, s), &model.letter(Letter::DU, s), t);
            let id = CMat::identity(np.p.nrows(), np.p.nrows());
            let g = np.p.scale(2.0) - &id;
            for d in [&np.dp_x, &np.dp_theta] {
                r1 = r1.max(max_abs(&(&np.p * d * &np.p)));
                r3 = r3.max(max_abs(&(&g * d + d * &g)));
            }
            let curv = &np.dp_x * &np.dp_theta - &np.dp_theta * &np.dp_x;
            r2 = r2.max(max_abs(&(&np.p * &curv - &curv * &np.p)));
        }
    }

    let i1 = wedge(&wedge(&pf, &dp), &pf);
    out.push(
        CheckReport::new("pdpp_vanishes", "p·dp·p = 0 for a projection p")
            .symbolic(&i1, i1.is_zero())
            .numeric(r1, 1e-10)
            .seeds([seed]),
    );

    let left = wedge(&pf, &dpdp);
    let right = wedge(&dpdp, &pf);
    let mid = wedge(&left, &pf);
    let d2 = form_diff(&left, &right);
    let d2b = form_diff(&left, &mid);
    out.push(
        CheckReport::new("p_commutes_with_dpdp", "p·(dp∧dp) = p·(dp∧dp)·p = (dp∧dp)·p")
            .symbolic(format!("{d2} ; {d2b}"), d2.is_zero() && d2b.is_zero())
            .numeric(r2, 1e-10)
            .seeds([seed]),
    );

    let two_p_minus_one = form_diff(&pf.map(|m| m.scale(&TrigPoly::rational(2, 1))), &NCForm::one(n));
    let d3 = wedge(&two_p_minus_one, &dp).add(&wedge(&dp, &two_p_minus_one)).expect("same dim");
    out.push(
        CheckReport::new("grading_anticommutes_with_dp", "(2p−1)·dp = −dp·(2p−1)")
            .symbolic(&d3, d3.is_zero())
            .numeric(r3, 1e-10)
            .seeds([seed]),
    );

    // k = 1 of the power identity coincides with the first equality above;
    // k ≥ 2 lives in degree 4, which is absent over two exterior directions.
    let overflow = left.wedge(&left);
    out.push(
        CheckReport::new("curvature_powers", "(p·dp∧dp)^k = p·(dp∧dp)^k")
            .symbolic(&d2, d2.is_zero())
            .require(matches!(overflow, Err(FormError::DegreeOverflow { .. })))
            .detail("k = 1 checked symbolically; k ≥ 2 is degree 4 and vacuous (0 = 0) over {ε_X, ε_θ}"),
    );

    let d_top = left.exterior_d();
    out.push(
        CheckReport::new(
            "d_of_curvature",
            "d(p·dp∧dp) = dp∧(p·dp∧dp) + (p·dp∧dp)∧dp",
        )
        .symbolic(&d_top, d_top.is_zero())
        .detail("both sides have degree 3 and vanish identically over {ε_X, ε_θ}"),
    );

    out.push(verify_grassmann_curvature_numeric(seed, 10));
    out
}

/// The Grassmann connection `ξ ↦ p·δξ` has curvature `p·dp∧dp`, checked with
/// two non-commuting commutator derivations on random projections.
pub fn verify_grassmann_curvature_numeric(seed: u64, n_seeds: u64) -> CheckReport {
    let seeds: Vec<u64> = (seed..seed + n_seeds).collect();
    let mut worst = 0.0f64;
    for &s in &seeds {
        let mut r = oracle::rng(s);
        let n = 4;
        let p = oracle::random_projection(n, 2, &mut r);
        let k1 = oracle::random_anti_hermitian(n, &mut r);
        let k2 = oracle::random_anti_hermitian(n, &mut r);
        let k12 = oracle::commutator(&k1, &k2);
        let xi = &p * oracle::gaussian(n, &mut r);
        let d = |k: &CMat, x: &CMat| oracle::commutator(k, x);
        let nabla = |k: &CMat, x: &CMat| &p * d(k, x);
        let lhs = nabla(&k1, &nabla(&k2, &xi)) - nabla(&k2, &nabla(&k1, &xi)) - nabla(&k12, &xi);
        let (d1, d2) = (d(&k1, &p), d(&k2, &p));
        let rhs = &p * (&d1 * &d2 - &d2 * &d1) * &xi;
        worst = worst.max(max_abs(&(lhs - rhs)));
    }
    CheckReport::new(
        "grassmann_curvature_numeric",
        "the curvature of ∇⁰ξ = p·δξ is Θ₀ = p·dp∧dp",
    )
    .numeric(worst, 1e-9)
    .seeds(seeds)
}

/// `Tr(p_θ − p_n)` vanishes as a cyclic class.
pub fn verify_trace_vanishing() -> CheckReport {
    let pt = build_p_theta();
    let t = trace_cyclic_normal_form(&(&pt.p - &pt.p_n));
    CheckReport::new("trace_p_minus_pn", "τ∘Tr(p − p_n) = 0; the matrix trace already vanishes")
        .symbolic(&t, t.is_zero())
}

/// Outcome of the odd-character pipeline.
#[derive(Clone, Debug)]
pub struct OddCharacter {
    /// `Tr(p·dp∧dp)` on `(ε_X, ε_θ)` as a cyclic class before reduction.
    pub raw: TraceClass,
    /// Coefficient of `[u*·δu]` after removing `δ`-exact classes.
    pub f: TrigPoly,
    pub residual: TraceClass,
    pub integral: IntegralValue,
}

pub fn compute_odd_character_integrand() -> Result<OddCharacter, FormError> {
    compute_odd_character_integrand_for(&ptheta::p_theta_closed_form())
}

pub fn compute_odd_character_integrand_for(p: &NcMatrix) -> Result<OddCharacter, FormError> {
    let pf = NCForm::from_matrix(p.clone());
    let dp = pf.exterior_d();
    let curv = pf.wedge(&dp.wedge(&dp)?)?;
    let raw = trace_cyclic_normal_form(&curv.on_mixed_pair());
    let reduced = reduce_mod_delta_exact(&raw)?;
    let key = u_star_du();
    let f = reduced.coeff(&key);
    let residual = reduced.without(&key);
    if !residual.is_zero() {
        return Err(FormError::ReductionFailure(residual.to_string()));
    }
    let integral = integrate_theta(&f);
    Ok(OddCharacter { raw, f, residual, integral })
}

/// `(sin θ − sin(θ/2))/4`, derived independently in the commutative loop
/// algebra `u = e^{iφ}`, `δ = d/dφ`.
pub fn expected_odd_integrand() -> TrigPoly {
    (&TrigPoly::sin_quarter(4) - &TrigPoly::sin_quarter(2)).scale(&GaussRational::real(1, 4))
}

/// Residual, realness and exact value of the odd-character integrand, and
/// the numeric bridge `∫τ(Tr(p·dp∧dp))dθ = τ(u*δu)·∫f dθ`.
pub fn verify_odd_character(seed: u64, n_seeds: u64, tol: f64) -> Vec<CheckReport> {
    let mut out = Vec::new();
    let oc = match compute_odd_character_integrand() {
        Ok(oc) => oc,
        Err(e) => {
            out.push(
                CheckReport::new("odd_character_residual", "every term except u*δu is δ-exact")
                    .symbolic(e.to_string(), false),
            );
            return out;
        }
    };
    out.push(
        CheckReport::new(
            "odd_character_residual",
            "τ(Tr(p·dp∧dp)) = τ(u*δu): every other term is δ(u^m) up to cyclicity",
        )
        .symbolic(&oc.residual, oc.residual.is_zero())
        .detail(format!("{} cyclic classes before reduction", oc.raw.len())),
    );
    out.push(
        CheckReport::new("odd_character_real", "the integrand f(θ) is real-valued")
            .symbolic(&oc.f, oc.f.is_real()),
    );
    let expect = &oc.f - &expected_odd_integrand();
    out.push(
        CheckReport::new("odd_character_closed_form", "f(θ) = (sin θ − sin(θ/2))/4")
            .symbolic(&expect, expect.is_zero())
            .detail(format!("f = {}", oc.f)),
    );
    let exact = &oc.integral.two_pi_coeff;
    let expect_int = oc.integral.two_pi_coeff.is_zero()
        && oc.integral.remainder == GaussRational::from_int(-1);
    out.push(
        CheckReport::new("odd_character_integral", "∫₀^{2π} f(θ) dθ computed exactly")
            .symbolic(format!("{}", oc.integral), expect_int)
            .detail(format!("2π-coefficient {exact}; numeric value {}", oc.integral.to_complex().re)),
    );

    let exact_f = oc.integral.to_complex();
    let numeric_f = integrate_period(|t| oc.f.eval(t));
    out.push(
        CheckReport::new("odd_character_quadrature", "exact ∫f agrees with Simpson quadrature")
            .numeric(rel_err(numeric_f, exact_f), tol),
    );

    let seeds: Vec<u64> = (seed..seed + n_seeds).collect();
    let mut worst_loop = 0.0f64;
    let mut worst_comm = 0.0f64;
    for &s in &seeds {
        let lm = LoopModel::new(3, s, 0);
        let pairing = lm.tau_class(&TraceClass::of_word(u_star_du()), 0.0);
        let lhs = oracle::numeric_odd_pairing(&lm);
        worst_loop = worst_loop.max(rel_err(lhs, pairing * exact_f));

        let cm = CommutatorModel::new(3, s, 0);
        let pairing = cm.tau_class(&TraceClass::of_word(u_star_du()), 0.0);
        let lhs = oracle::numeric_odd_pairing(&cm);
        worst_comm = worst_comm.max((lhs - pairing * exact_f).norm());
    }
    out.push(
        CheckReport::new(
            "odd_character_bridge_loop",
            "∫τ(Tr(p·dp∧dp))dθ = τ(u*δu)·∫f dθ with u a winding loop of unitaries",
        )
        .numeric(worst_loop, tol)
        .seeds(seeds.clone())
        .detail("relative error; here τ(u*δu) = i"),
    );
    out.push(
        CheckReport::new(
            "odd_character_bridge_commutator",
            "same identity with δ = ad_K on a random unitary",
        )
        .numeric(worst_comm, tol)
        .seeds(seeds)
        .detail("absolute error; both sides vanish since τ∘ad_K = 0"),
    );
    out
}

fn rel_err(a: Complex64, b: Complex64) -> f64 {
    (a - b).norm() / b.norm().max(1e-300)
}

/// Curvature of `∇ = ∇⁰ + Γ` on the module element `p`, symbolically, for
/// `Γ = p·γ·p` with `γ = g₀ ε_X + cos(θ/4)·g₁ ε_θ` built on free symbols.
pub fn verify_curvature_formula(seed: u64, n_seeds: u64, tol: f64) -> Vec<CheckReport> {
    let p = ptheta::p_theta_closed_form();
    let free = vec![NCPoly::free(0), NCPoly::free(1).scale(&TrigPoly::cos_quarter(1))];
    let zero = vec![NCPoly::zero(), NCPoly::zero()];
    let mut out = Vec::new();
    for (name, gamma, text) in [
        ("curvature_formula_flat", zero, "Γ = 0: both sides reduce to Θ₀ = p·dp∧dp"),
        ("curvature_formula_free", free, "Θ = Θ₀ + p(dΓ + Γ∧Γ)p for Γ = pγp with free γ"),
    ] {
        let diff = curvature_difference(&p, &gamma);
        out.push(CheckReport::new(name, text).symbolic(&diff, diff.is_zero()));
    }
    out.push(verify_curvature_numeric(seed, n_seeds, tol));
    out
}

/// `LHS − RHS` of the curvature formula on `(ε_X, ε_θ)`.
pub fn curvature_difference(p: &NcMatrix, gamma: &[NCPoly]) -> NcMatrix {
    let n = p.dim();
    let scalar = |a: &NCPoly| NcMatrix::diag(vec![a.clone(); n]);
    let gx = &(p * &scalar(&gamma[0])) * p;
    let gt = &(p * &scalar(&gamma[1])) * p;

    let nabla_x = |xi: &NcMatrix| &(p * &xi.apply_delta()) + &(&gx * xi);
    let nabla_t = |xi: &NcMatrix| &(p * &xi.apply_dtheta()) + &(&gt * xi);
    let lhs = &(p * &(&nabla_x(&nabla_t(p)) - &nabla_t(&nabla_x(p)))) * p;

    let pf = NCForm::from_matrix(p.clone());
    let dp = pf.exterior_d();
    let theta0 = wedge(&pf, &wedge(&dp, &dp));
    let gamma_form = NCForm::homogeneous(Basis::X, gx.clone())
        .add(&NCForm::homogeneous(Basis::Theta, gt.clone()))
        .expect("same dim");
    let inner = gamma_form.exterior_d().add(&wedge(&gamma_form, &gamma_form)).expect("same dim");
    let rhs = theta0.add(&inner.left_mul(p).right_mul(p)).expect("same dim");
    &lhs - &rhs.on_mixed_pair()
}

/// The curvature formula with two non-commuting commutator derivations on a
/// random projection and a random `Γ = pγp`, including the bracket terms.
pub fn verify_curvature_numeric(seed: u64, n_seeds: u64, tol: f64) -> CheckReport {
    let seeds: Vec<u64> = (seed..seed + n_seeds).collect();
    let mut worst = 0.0f64;
    for &s in &seeds {
        let mut r = oracle::rng(s);
        let n = 4;
        let p = oracle::random_projection(n, 2, &mut r);
        let k1 = oracle::random_anti_hermitian(n, &mut r);
        let k2 = oracle::random_anti_hermitian(n, &mut r);
        let k12 = oracle::commutator(&k1, &k2);
        // Γ on the three directions X, Y, [X, Y] (independent for generic K).
        let g: Vec<CMat> = (0..3).map(|_| &p * oracle::gaussian(n, &mut r) * &p).collect();
        let d = |k: &CMat, x: &CMat| oracle::commutator(k, x);
        let nabla = |k: &CMat, gk: &CMat, x: &CMat| &p * d(k, x) + gk * x;
        let lhs = nabla(&k1, &g[0], &nabla(&k2, &g[1], &p))
            - nabla(&k2, &g[1], &nabla(&k1, &g[0], &p))
            - nabla(&k12, &g[2], &p);
        let lhs = &p * lhs * &p;
        let (d1, d2) = (d(&k1, &p), d(&k2, &p));
        let theta0 = &p * (&d1 * &d2 - &d2 * &d1);
        let dgamma = d(&k1, &g[1]) - d(&k2, &g[0]) - &g[2];
        let gg = &g[0] * &g[1] - &g[1] * &g[0];
        let rhs = theta0 + &p * (dgamma + gg) * &p;
        worst = worst.max(max_abs(&(lhs - rhs)));
    }
    CheckReport::new(
        "curvature_formula_numeric",
        "Θ = Θ₀ + p(dΓ + Γ∧Γ)p with non-commuting commutator derivations",
    )
    .numeric(worst, tol)
    .seeds(seeds)
}

/// `(1/2πi)·Tr(p·(δ₁p·δ₂p − δ₂p·δ₁p))` for a projection and two commutator
/// derivations.
pub fn realness_value(p: &CMat, k1: &CMat, k2: &CMat) -> Complex64 {
    let d1 = oracle::commutator(k1, p);
    let d2 = oracle::commutator(k2, p);
    let t = (p * (&d1 * &d2 - &d2 * &d1)).trace();
    t / Complex64::new(0.0, TAU)
}

pub fn verify_realness(k: u32, seed: u64, n_seeds: u64, tol: f64) -> Vec<CheckReport> {
    let mut out = Vec::new();
    if k != 1 {
        out.push(
            CheckReport::new("realness", "the character form is real")
                .detail("only k = 1 is non-vacuous over a 2-dimensional exterior basis")
                .require(false),
        );
        return out;
    }
    let seeds: Vec<u64> = (seed..seed + n_seeds).collect();
    let mut worst = 0.0f64;
    let mut worst_scale = 0.0f64;
    for &s in &seeds {
        let mut r = oracle::rng(s);
        let n = 3;
        let p = oracle::random_projection(n, 1, &mut r);
        let k1 = oracle::random_anti_hermitian(n, &mut r);
        let k2 = oracle::random_anti_hermitian(n, &mut r);
        let v = realness_value(&p, &k1, &k2);
        worst = worst.max(v.im.abs());
        worst_scale = worst_scale.max(v.re.abs());
    }
    out.push(
        CheckReport::new("realness_random_projections", "(1/2πi)·Tr(p·dp∧dp) is a real form")
            .numeric(worst, tol)
            .seeds(seeds)
            .detail(format!("largest real part seen {worst_scale:.3e}")),
    );

    let mut r = oracle::rng(seed);
    let k1 = oracle::random_anti_hermitian(3, &mut r);
    let k2 = oracle::random_anti_hermitian(3, &mut r);
    let at_id = realness_value(&CMat::identity(3, 3), &k1, &k2).norm();
    let at_zero = realness_value(&CMat::zeros(3, 3), &k1, &k2).norm();
    out.push(
        CheckReport::new("realness_trivial_projections", "p = 1 and p = 0 give the value 0")
            .numeric(at_id.max(at_zero), 1e-12),
    );
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn odd_character_pipeline() {
        let oc = compute_odd_character_integrand().unwrap();
        assert!(oc.residual.is_zero());
        assert_eq!(oc.f, expected_odd_integrand());
    }

    #[test]
    fn mutated_projection_breaks_pdpp() {
        let p = ptheta::perturbed_p_theta(TrigPoly::rational(1, 10));
        let reports = verify_projection_identities_for(&p, 1);
        let r = reports.iter().find(|r| r.name == "pdpp_vanishes").unwrap();
        assert!(!r.pass);
        assert_ne!(r.symbolic_residual, "0");
    }
}
