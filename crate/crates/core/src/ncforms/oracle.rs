//! Numeric substitution models for the symbolic engine.
//!
//! Two models realize the letters as matrices:
//!
//! * [`CommutatorModel`]: `u` is a random unitary and `δ = ad_K` for a random
//!   anti-Hermitian `K`; the trace is the matrix trace.
//! * [`LoopModel`]: `u(φ)` is a bandlimited loop of unitaries with
//!   `det u(φ) = e^{iφ}`, `δ = d/dφ`, and the trace is the `φ`-average of
//!   the matrix trace. Unlike the commutator model, `τ(u*δu) = i` here.

use std::f64::consts::TAU;

use nalgebra::DMatrix;
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use super::matrix::NcMatrix;
use super::poly::NCPoly;
use super::trace::TraceClass;
use super::word::{Letter, Word};

pub type CMat = DMatrix<Complex64>;

const I: Complex64 = Complex64::new(0.0, 1.0);

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn gaussian(n: usize, rng: &mut impl Rng) -> CMat {
    CMat::from_fn(n, n, |_, _| {
        let re: f64 = rng.sample(StandardNormal);
        let im: f64 = rng.sample(StandardNormal);
        Complex64::new(re, im)
    })
}

pub fn random_unitary(n: usize, rng: &mut impl Rng) -> CMat {
    gaussian(n, rng).qr().q()
}

pub fn random_hermitian(n: usize, rng: &mut impl Rng) -> CMat {
    let g = gaussian(n, rng);
    (&g + g.adjoint()).scale(0.5)
}

pub fn random_anti_hermitian(n: usize, rng: &mut impl Rng) -> CMat {
    let g = gaussian(n, rng);
    (&g - g.adjoint()).scale(0.5)
}

/// Random orthogonal projection of the given rank.
pub fn random_projection(n: usize, rank: usize, rng: &mut impl Rng) -> CMat {
    let v = random_unitary(n, rng);
    let mut d = CMat::zeros(n, n);
    for i in 0..rank.min(n) {
        d[(i, i)] = Complex64::new(1.0, 0.0);
    }
    &v * d * v.adjoint()
}

pub fn commutator(a: &CMat, b: &CMat) -> CMat {
    a * b - b * a
}

/// `ad_K^n(x)`.
pub fn ad_pow(k: &CMat, x: &CMat, n: u32) -> CMat {
    (0..n).fold(x.clone(), |acc, _| commutator(k, &acc))
}

/// A realization of the letters on a finite set of sample points.
pub trait Model {
    fn dim(&self) -> usize;
    /// Number of sample points the trace averages over.
    fn samples(&self) -> usize;
    fn letter(&self, l: Letter, s: usize) -> CMat;

    fn word(&self, w: &Word, s: usize) -> CMat {
        w.letters()
            .iter()
            .fold(CMat::identity(self.dim(), self.dim()), |acc, l| acc * self.letter(*l, s))
    }

    fn poly(&self, p: &NCPoly, theta: f64, s: usize) -> CMat {
        let n = self.dim();
        p.terms().fold(CMat::zeros(n, n), |acc, (w, c)| acc + self.word(w, s) * c.eval(theta))
    }

    /// Block matrix with each entry substituted.
    fn matrix(&self, m: &NcMatrix, theta: f64, s: usize) -> CMat {
        let (n, k) = (self.dim(), m.dim());
        let mut out = CMat::zeros(n * k, n * k);
        for (i, j, e) in m.nonzero_entries() {
            out.view_mut((i * n, j * n), (n, n)).copy_from(&self.poly(e, theta, s));
        }
        out
    }

    /// `τ` applied to a family of matrices indexed by sample point.
    fn tau(&self, f: impl Fn(usize) -> CMat) -> Complex64 {
        let total: Complex64 = (0..self.samples()).map(|s| f(s).trace()).sum();
        total / self.samples() as f64
    }

    fn tau_poly(&self, p: &NCPoly, theta: f64) -> Complex64 {
        self.tau(|s| self.poly(p, theta, s))
    }

    fn tau_class(&self, t: &TraceClass, theta: f64) -> Complex64 {
        t.terms().map(|(w, c)| c.eval(theta) * self.tau(|s| self.word(w, s))).sum()
    }
}

pub struct CommutatorModel {
    pub dim: usize,
    pub u: CMat,
    pub k: CMat,
    pub frees: Vec<CMat>,
}

impl CommutatorModel {
    pub fn new(dim: usize, seed: u64, n_free: usize) -> Self {
        assert!(dim >= 2, "model dimension must be at least 2");
        let mut r = rng(seed);
        let u = random_unitary(dim, &mut r);
        let k = random_anti_hermitian(dim, &mut r);
        let frees = (0..n_free).map(|_| random_hermitian(dim, &mut r)).collect();
        Self { dim, u, k, frees }
    }
}

impl Model for CommutatorModel {
    fn dim(&self) -> usize {
        self.dim
    }

    fn samples(&self) -> usize {
        1
    }

    fn letter(&self, l: Letter, _s: usize) -> CMat {
        match l {
            Letter::U => self.u.clone(),
            Letter::UStar => self.u.adjoint(),
            Letter::Du(n) => ad_pow(&self.k, &self.u, n),
            Letter::Free(id) => self.frees[id as usize].clone(),
            Letter::DFree(id, n) => ad_pow(&self.k, &self.frees[id as usize], n),
        }
    }
}

/// `u(φ) = V·diag(e^{iφ},1,…)·V* · W·diag(e^{iφ},e^{−iφ},1,…)·W*`.
pub struct LoopModel {
    pub dim: usize,
    pub n_samples: usize,
    v: CMat,
    w: CMat,
    /// Free symbol `g(φ) = h + c e^{iφ} + c* e^{−iφ}`, stored as `(h, c)`.
    frees: Vec<(CMat, CMat)>,
}

fn binomial(n: u32, k: u32) -> f64 {
    (0..k).fold(1.0, |acc, i| acc * (n - i) as f64 / (i + 1) as f64)
}

impl LoopModel {
    pub fn new(dim: usize, seed: u64, n_free: usize) -> Self {
        Self::with_samples(dim, seed, n_free, 48)
    }

    /// The trace average is exact for integrands of `φ`-bandwidth below
    /// `n_samples`.
    pub fn with_samples(dim: usize, seed: u64, n_free: usize, n_samples: usize) -> Self {
        assert!(dim >= 2, "model dimension must be at least 2");
        let mut r = rng(seed);
        let v = random_unitary(dim, &mut r);
        let w = random_unitary(dim, &mut r);
        let frees = (0..n_free)
            .map(|_| (random_hermitian(dim, &mut r), gaussian(dim, &mut r).scale(0.5)))
            .collect();
        Self { dim, n_samples, v, w, frees }
    }

    fn phi(&self, s: usize) -> f64 {
        TAU * s as f64 / self.n_samples as f64
    }

    /// n-th φ-derivative of `V·diag(e^{iφ},1,…)·V*`.
    fn factor_a(&self, n: u32, phi: f64) -> CMat {
        let mut d = CMat::zeros(self.dim, self.dim);
        d[(0, 0)] = I.powu(n) * Complex64::from_polar(1.0, phi);
        if n == 0 {
            for i in 1..self.dim {
                d[(i, i)] = Complex64::new(1.0, 0.0);
            }
        }
        &self.v * d * self.v.adjoint()
    }

    /// n-th φ-derivative of `W·diag(e^{iφ},e^{−iφ},1,…)·W*`.
    fn factor_b(&self, n: u32, phi: f64) -> CMat {
        let mut d = CMat::zeros(self.dim, self.dim);
        d[(0, 0)] = I.powu(n) * Complex64::from_polar(1.0, phi);
        d[(1, 1)] = (-I).powu(n) * Complex64::from_polar(1.0, -phi);
        if n == 0 {
            for i in 2..self.dim {
                d[(i, i)] = Complex64::new(1.0, 0.0);
            }
        }
        &self.w * d * self.w.adjoint()
    }

    pub fn u_derivative(&self, n: u32, s: usize) -> CMat {
        let phi = self.phi(s);
        (0..=n).fold(CMat::zeros(self.dim, self.dim), |acc, j| {
            acc + (self.factor_a(j, phi) * self.factor_b(n - j, phi)).scale(binomial(n, j))
        })
    }

    fn free_derivative(&self, id: u32, n: u32, s: usize) -> CMat {
        let (h, c) = &self.frees[id as usize];
        let e = Complex64::from_polar(1.0, self.phi(s));
        let osc = c * (I.powu(n) * e) + c.adjoint() * ((-I).powu(n) * e.conj());
        if n == 0 {
            h + osc
        } else {
            osc
        }
    }
}

impl Model for LoopModel {
    fn dim(&self) -> usize {
        self.dim
    }

    fn samples(&self) -> usize {
        self.n_samples
    }

    fn letter(&self, l: Letter, s: usize) -> CMat {
        match l {
            Letter::U => self.u_derivative(0, s),
            Letter::UStar => self.u_derivative(0, s).adjoint(),
            Letter::Du(n) => self.u_derivative(n, s),
            Letter::Free(id) => self.free_derivative(id, 0, s),
            Letter::DFree(id, n) => self.free_derivative(id, n, s),
        }
    }
}

/// Composite Simpson rule on `[a, b]` with `intervals` (even) subintervals.
pub fn simpson(f: impl Fn(f64) -> Complex64, a: f64, b: f64, intervals: usize) -> Complex64 {
    assert!(intervals >= 2 && intervals.is_multiple_of(2), "Simpson needs an even interval count");
    let h = (b - a) / intervals as f64;
    let mut acc = f(a) + f(b);
    for i in 1..intervals {
        let w = if i % 2 == 1 { 4.0 } else { 2.0 };
        acc += f(a + h * i as f64) * w;
    }
    acc * (h / 3.0)
}

/// Default θ-quadrature: Simpson with 2¹⁰ intervals over one period.
pub fn integrate_period(f: impl Fn(f64) -> Complex64) -> Complex64 {
    simpson(f, 0.0, TAU, 1 << 10)
}

/// Numeric `p_θ`, `δp_θ` and `∂_θ p_θ`, built from `w_θ` with the model's
/// `u` and `δu` and never from the symbolic closed form.
pub struct NumericPTheta {
    pub p: CMat,
    pub dp_x: CMat,
    pub dp_theta: CMat,
}

/// Since `p_n` is the projection onto the first block, `p = C·C*` with
/// `C = w_θ·(1, 0)ᵀ = (c² + s²u, sc(u* − 1))ᵀ`, `c = cos(θ/4)`, `s = sin(θ/4)`.
pub fn numeric_p_theta(u: &CMat, du: &CMat, theta: f64) -> NumericPTheta {
    let n = u.nrows();
    let id = CMat::identity(n, n);
    let (c, s) = ((theta / 4.0).cos(), (theta / 4.0).sin());
    let us = u.adjoint();
    let dus = du.adjoint();
    let stack = |top: CMat, bottom: CMat| {
        let mut m = CMat::zeros(2 * n, n);
        m.view_mut((0, 0), (n, n)).copy_from(&top);
        m.view_mut((n, 0), (n, n)).copy_from(&bottom);
        m
    };
    let col = stack(id.scale(c * c) + u.scale(s * s), (&us - &id).scale(s * c));
    let col_x = stack(du.scale(s * s), dus.scale(s * c));
    let col_t = stack(
        (u - &id).scale(c * s / 2.0),
        (&us - &id).scale((theta / 2.0).cos() / 4.0),
    );
    let col_adj = col.adjoint();
    let p = &col * &col_adj;
    let dp_x = &col_x * &col_adj + &col * col_x.adjoint();
    let dp_theta = &col_t * &col_adj + &col * col_t.adjoint();
    NumericPTheta { p, dp_x, dp_theta }
}

/// `τ(Tr(p·(δp·∂p − ∂p·δp)))` at one θ, fully numerically.
pub fn numeric_odd_integrand(model: &impl Model, theta: f64) -> Complex64 {
    odd_integrand_cached(&sample_u_du(model), theta)
}

/// `(u, δu)` at every sample point of the model.
pub fn sample_u_du(model: &impl Model) -> Vec<(CMat, CMat)> {
    (0..model.samples())
        .map(|s| (model.letter(Letter::U, s), model.letter(Letter::DU, s)))
        .collect()
}

pub fn odd_integrand_cached(samples: &[(CMat, CMat)], theta: f64) -> Complex64 {
    let total: Complex64 = samples
        .iter()
        .map(|(u, du)| {
            let np = numeric_p_theta(u, du, theta);
            (&np.p * (&np.dp_x * &np.dp_theta - &np.dp_theta * &np.dp_x)).trace()
        })
        .sum();
    total / samples.len() as f64
}

/// `∫₀^{2π} τ(Tr(p·dp∧dp)) dθ` by Simpson quadrature.
pub fn numeric_odd_pairing(model: &impl Model) -> Complex64 {
    let samples = sample_u_du(model);
    integrate_period(|t| odd_integrand_cached(&samples, t))
}

pub fn max_abs(m: &CMat) -> f64 {
    m.iter().map(|z| z.norm()).fold(0.0, f64::max)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn loop_model_is_unitary_with_winding_one() {
        let m = LoopModel::new(3, 7, 0);
        for s in [0, 5, 17] {
            let u = m.letter(Letter::U, s);
            assert!(max_abs(&(&u * u.adjoint() - CMat::identity(3, 3))) < 1e-12);
        }
        let t = m.tau(|s| m.letter(Letter::UStar, s) * m.letter(Letter::DU, s));
        assert!((t - I).norm() < 1e-12);
    }

    #[test]
    fn loop_derivative_matches_finite_difference() {
        let m = LoopModel::with_samples(3, 3, 1, 4096);
        let fd = (m.letter(Letter::U, 1) - m.letter(Letter::U, 4095)) / Complex64::new(2.0 * TAU / 4096.0, 0.0);
        assert!(max_abs(&(fd - m.letter(Letter::DU, 0))) < 1e-5);
    }

    #[test]
    fn commutator_model_trace_of_delta_vanishes() {
        let m = CommutatorModel::new(4, 11, 1);
        assert!(m.tau(|s| m.letter(Letter::DU, s)).norm() < 1e-12);
    }

    #[test]
    fn simpson_is_exact_for_half_angle_harmonics() {
        let v = integrate_period(|t| Complex64::new((t / 2.0).sin(), 0.0));
        assert!((v.re - 4.0).abs() < 1e-10);
    }

    #[test]
    fn numeric_p_is_a_projection() {
        let m = CommutatorModel::new(3, 5, 0);
        let np = numeric_p_theta(&m.u, &m.letter(Letter::DU, 0), 1.3);
        assert!(max_abs(&(&np.p * &np.p - &np.p)) < 1e-12);
    }
}
