//! The homotopy of projections joining `p_n` to itself through `u`.

use super::matrix::NcMatrix;
use super::poly::NCPoly;
use super::trig::TrigPoly;

#[derive(Clone, Debug)]
pub struct PTheta {
    pub p: NcMatrix,
    /// `diag(u,1)·R_θ·diag(u*,1)·R_θᵀ` with `R_θ` the rotation by `θ/4`.
    pub w: NcMatrix,
    pub p_n: NcMatrix,
}

fn c(t: TrigPoly) -> NCPoly {
    NCPoly::scalar(t)
}

/// `sin²(θ/2)/4`.
pub fn quarter_sin_half_sq() -> TrigPoly {
    let s = TrigPoly::sin_quarter(2);
    (&s * &s).scale(&super::gauss::GaussRational::real(1, 4))
}

/// The closed form of `p_θ`, entry by entry.
pub fn p_theta_closed_form() -> NcMatrix {
    let one = NCPoly::one();
    let u = NCPoly::u();
    let us = NCPoly::u_star();
    let a = c(quarter_sin_half_sq());
    let half_sin = c(TrigPoly::sin_quarter(2).scale(&super::gauss::GaussRational::real(1, 2)));
    let cc = c(&TrigPoly::cos_quarter(1) * &TrigPoly::cos_quarter(1));
    let ss = c(&TrigPoly::sin_quarter(1) * &TrigPoly::sin_quarter(1));
    let core = &(&one - &u) * &(&one - &us);

    let p11 = &one - &(&a * &core);
    let p22 = &a * &core;
    let p12 = &(&(&u - &one) * &half_sin) * &(&cc + &(&u * &ss));
    let p21 = &(&(&us - &one) * &half_sin) * &(&cc + &(&us * &ss));
    NcMatrix::from_rows(vec![vec![p11, p12], vec![p21, p22]])
}

pub fn w_theta() -> NcMatrix {
    let cq = c(TrigPoly::cos_quarter(1));
    let sq = c(TrigPoly::sin_quarter(1));
    let rot = NcMatrix::from_rows(vec![vec![cq.clone(), -&sq], vec![sq.clone(), cq.clone()]]);
    let rot_t = NcMatrix::from_rows(vec![vec![cq.clone(), sq.clone()], vec![-&sq, cq]]);
    let du = NcMatrix::diag(vec![NCPoly::u(), NCPoly::one()]);
    let dus = NcMatrix::diag(vec![NCPoly::u_star(), NCPoly::one()]);
    &(&(&du * &rot) * &dus) * &rot_t
}

pub fn p_n() -> NcMatrix {
    NcMatrix::diag(vec![NCPoly::one(), NCPoly::zero()])
}

pub fn build_p_theta() -> PTheta {
    PTheta { p: p_theta_closed_form(), w: w_theta(), p_n: p_n() }
}

/// `p_θ` with `c` added to its (1,1) entry; used by mutation tests.
pub fn perturbed_p_theta(c: TrigPoly) -> NcMatrix {
    let mut p = p_theta_closed_form();
    let e = p.get(0, 0) + &NCPoly::scalar(c);
    p.set(0, 0, e);
    p
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn closed_form_matches_conjugation() {
        let pt = build_p_theta();
        let conj = &(&pt.w * &pt.p_n) * &pt.w.star();
        assert_eq!(conj, pt.p);
    }

    #[test]
    fn w_is_unitary() {
        let w = w_theta();
        assert_eq!(&w * &w.star(), NcMatrix::identity(2));
    }

    #[test]
    fn endpoints() {
        let pt = build_p_theta();
        assert_eq!(pt.p.eval_turns(0), pt.p_n);
        assert_eq!(pt.p.eval_turns(1), pt.p_n);
    }

    #[test]
    fn idempotent_and_selfadjoint() {
        let p = p_theta_closed_form();
        assert_eq!(&p * &p, p);
        assert_eq!(p.star(), p);
    }
}
