//! `K_i(C(S¹, X)) ≅ K_i(X) ⊕ K_{1−i}(X)` with labelled generators.

use super::group::FGAbelian;

fn tag(op: &str, algebra: &str, label: &str, degree: char) -> String {
    format!("[{op}_{algebra}{label}]{degree}")
}

/// One step of the split: the new `K₀` gains `θ_X` of the old `K₁`
/// generators and the new `K₁` gains `β_X` of the old `K₀` generators.
pub fn suspension_split(k0: &FGAbelian, k1: &FGAbelian, algebra: &str) -> (FGAbelian, FGAbelian) {
    let theta = k1.clone().with_labels(k1.generator_labels.iter().map(|l| tag("θ", algebra, l, '₀')).collect());
    let beta = k0.clone().with_labels(k0.generator_labels.iter().map(|l| tag("β", algebra, l, '₁')).collect());
    (k0.direct_sum(&theta), k1.direct_sum(&beta))
}

/// Applies the split once per algebra, renaming generators afterwards
/// according to `identify` (for instance the Bott generator of the point
/// as the coordinate loop).
pub fn iterate_suspension(
    k0: FGAbelian,
    k1: FGAbelian,
    algebras: &[String],
    identify: &[(String, String)],
) -> Vec<(FGAbelian, FGAbelian)> {
    let rename = |g: FGAbelian| {
        let labels = g
            .generator_labels
            .iter()
            .map(|l| identify.iter().fold(l.clone(), |acc, (from, to)| acc.replace(from.as_str(), to)))
            .collect();
        g.with_labels(labels)
    };
    let mut out = Vec::with_capacity(algebras.len());
    let (mut a, mut b) = (k0, k1);
    for alg in algebras {
        let (x, y) = suspension_split(&a, &b, alg);
        a = rename(x);
        b = rename(y);
        out.push((a.clone(), b.clone()));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn point() -> (FGAbelian, FGAbelian) {
        (FGAbelian::free_labeled(vec!["[1]₀".into()]), FGAbelian::zero())
    }

    #[test]
    fn circle_from_point() {
        let (k0, k1) = point();
        let (a, b) = suspension_split(&k0, &k1, "ℂ");
        assert_eq!(a.labeled(), "[1]₀ℤ");
        assert_eq!(b.labeled(), "[β_ℂ[1]₀]₁ℤ");
    }

    #[test]
    fn three_steps_give_rank_four() {
        let (k0, k1) = point();
        let algs: Vec<String> = ["ℂ", "C(S¹)", "C(T)"].iter().map(|s| s.to_string()).collect();
        let id = vec![("[β_ℂ[1]₀]₁".to_string(), "[𝔴]₁".to_string())];
        let steps = iterate_suspension(k0, k1, &algs, &id);
        assert_eq!(steps[1].0.labeled(), "[1]₀ℤ ⊕ [θ_C(S¹)[𝔴]₁]₀ℤ");
        let (a, b) = &steps[2];
        assert_eq!((a.short(), b.short()), ("ℤ⁴".to_string(), "ℤ⁴".to_string()));
        assert!(b.generator_labels.contains(&"[β_C(T)[θ_C(S¹)[𝔴]₁]₀]₁".to_string()));
    }
}
