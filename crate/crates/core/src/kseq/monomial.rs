//! Torus self-maps given by signed monomials and their action on `K₁`.

use std::f64::consts::TAU;

use num_complex::Complex64;

use super::error::KseqError;
use super::intmat::IntMatrix;
use crate::circleops::winding_number;

/// `±z^a w^b`; negative exponents stand for conjugates.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Monomial {
    pub sign: i8,
    pub z: i64,
    pub w: i64,
}

impl Monomial {
    pub fn new(sign: i8, z: i64, w: i64) -> Self {
        Self { sign: if sign < 0 { -1 } else { 1 }, z, w }
    }

    pub fn eval(&self, z: Complex64, w: Complex64) -> Complex64 {
        let s = f64::from(self.sign);
        z.powi(self.z as i32) * w.powi(self.w as i32) * s
    }

    /// Parses `z`, `-z^2*wbar`, `conj(w)^3`, `z w`, `1`. Also accepts `z̄`.
    pub fn parse(s: &str) -> Result<Self, KseqError> {
        let unsupported = || KseqError::Unsupported(format!("not a signed monomial: {s:?}"));
        let mut t = s.trim().replace("z̄", "zbar").replace("w̄", "wbar").replace(' ', "*");
        let mut sign = 1i8;
        if let Some(r) = t.strip_prefix('-') {
            sign = -1;
            t = r.trim_start_matches('*').to_string();
        } else if let Some(r) = t.strip_prefix('+') {
            t = r.to_string();
        }
        if t.is_empty() {
            return Err(unsupported());
        }
        let (mut z, mut w) = (0i64, 0i64);
        for factor in t.split('*').filter(|f| !f.is_empty()) {
            let (base, exp) = match factor.split_once('^') {
                Some((b, e)) => (b, e.parse::<i64>().map_err(|_| unsupported())?),
                None => (factor, 1),
            };
            match base {
                "1" => {}
                "z" => z += exp,
                "w" => w += exp,
                "zbar" | "conj(z)" => z -= exp,
                "wbar" | "conj(w)" => w -= exp,
                _ => return Err(unsupported()),
            }
        }
        Ok(Self::new(sign, z, w))
    }
}

/// Parses `(f, g)` into the two coordinates of a torus map.
pub fn parse_torus_map(s: &str) -> Result<[Monomial; 2], KseqError> {
    let inner = s.trim().strip_prefix('(').and_then(|r| r.strip_suffix(')')).ok_or_else(|| {
        KseqError::Parse(format!("expected \"(f, g)\", got {s:?}"))
    })?;
    let parts: Vec<&str> = inner.split(',').collect();
    if parts.len() != 2 {
        return Err(KseqError::Parse(format!("expected two coordinates in {s:?}")));
    }
    Ok([Monomial::parse(parts[0])?, Monomial::parse(parts[1])?])
}

/// Matrix of `φ*` on the basis `[𝔷]₁, [𝔴]₁` of `K₁(C(T²))`: the column of
/// generator `j` is the exponent vector of coordinate `j`. Signs drop out
/// because `−1` is joined to `1` in the unitary group.
pub fn induced_monomial_map_k1(map: &[Monomial; 2]) -> IntMatrix {
    IntMatrix::from_rows(&[vec![map[0].z, map[1].z], vec![map[0].w, map[1].w]])
}

/// The same matrix read from winding numbers of sampled loops: coordinate
/// `j` is restricted to a `z`-circle and to a `w`-circle through a generic
/// base point.
pub fn induced_map_by_winding(map: &[Monomial; 2], samples: usize) -> Result<IntMatrix, KseqError> {
    let base = Complex64::from_polar(1.0, 0.37);
    let circle = |k: usize| Complex64::from_polar(1.0, TAU * k as f64 / samples as f64);
    let wind = |f: &dyn Fn(Complex64) -> Complex64| {
        let pts: Vec<Complex64> = (0..samples).map(|k| f(circle(k))).collect();
        winding_number(&pts).map_err(|e| KseqError::Unsupported(e.to_string()))
    };
    let mut rows = vec![vec![0i64; 2]; 2];
    for (j, m) in map.iter().enumerate() {
        rows[0][j] = wind(&|z| m.eval(z, base))?;
        rows[1][j] = wind(&|w| m.eval(base, w))?;
    }
    Ok(IntMatrix::from_rows(&rows))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gluing_map() {
        let m = parse_torus_map("(z, -z^2*wbar)").unwrap();
        assert_eq!(m[1], Monomial::new(-1, 2, -1));
        let k = induced_monomial_map_k1(&m);
        assert_eq!(k, IntMatrix::from_rows(&[vec![1, 2], vec![0, -1]]));
        assert_eq!(induced_map_by_winding(&m, 64).unwrap(), k);
    }

    #[test]
    fn identity_and_swap() {
        let id = parse_torus_map("(z, w)").unwrap();
        assert_eq!(induced_monomial_map_k1(&id), IntMatrix::identity(2));
        let sw = parse_torus_map("(w, z)").unwrap();
        assert_eq!(induced_monomial_map_k1(&sw), IntMatrix::from_rows(&[vec![0, 1], vec![1, 0]]));
    }

    #[test]
    fn rejects_non_monomials() {
        assert!(Monomial::parse("z + w").is_err());
        assert!(Monomial::parse("2z").is_err());
        assert!(parse_torus_map("z, w").is_err());
        assert_eq!(Monomial::parse("z̄ w").unwrap(), Monomial::new(1, -1, 1));
    }
}
