mod support;

use chernkit::ncforms::{Basis, NCForm, Word};
use proptest::prelude::*;
use support::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn rewriting_is_confluent(w in letters(14), (a, b) in pick_lists()) {
        confluence(w, &a, &b)?;
    }

    #[test]
    fn reduction_is_associative(a in letters(6), b in letters(6), c in letters(6)) {
        let (a, b, c) = (Word::reduce(a), Word::reduce(b), Word::reduce(c));
        prop_assert_eq!(a.concat(&b).concat(&c), a.concat(&b.concat(&c)));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn star_is_an_antimultiplicative_involution(a in poly(), b in poly()) {
        star_involution(&a, &b)?;
    }

    #[test]
    fn derivations_satisfy_leibniz(a in poly(), b in poly()) {
        leibniz(&a, &b)?;
    }

    #[test]
    fn derivations_commute(a in poly()) {
        prop_assert_eq!(a.apply_delta().apply_dtheta(), a.apply_dtheta().apply_delta());
    }

    #[test]
    fn d_squared_vanishes(m0 in nc_matrix(), mx in nc_matrix(), mt in nc_matrix()) {
        d_squared(m0, mx, mt)?;
    }

    #[test]
    fn d_is_a_graded_derivation(m0 in nc_matrix(), mx in nc_matrix()) {
        let a = NCForm::from_matrix(m0);
        let b = NCForm::homogeneous(Basis::X, mx);
        let lhs = a.wedge(&b).unwrap().exterior_d();
        let rhs = a.exterior_d().wedge(&b).unwrap().add(&a.wedge(&b.exterior_d()).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn trace_is_cyclic(x in nc_matrix(), y in nc_matrix()) {
        cyclicity(&x, &y)?;
    }
}
