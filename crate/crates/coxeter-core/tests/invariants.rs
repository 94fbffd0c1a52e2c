//! Property tests for the word machinery.

use coxeter_core::{invert, multiply, normal_form, reduce, Caps, CoxeterMatrix, Word};
use proptest::prelude::*;

fn test_matrices() -> Vec<CoxeterMatrix> {
    vec![
        CoxeterMatrix::dihedral(Some(3)),
        CoxeterMatrix::dihedral(Some(4)),
        CoxeterMatrix::dihedral(None),
        CoxeterMatrix::from_table(&[&[1, 3, 2], &[3, 1, 3], &[2, 3, 1]]).unwrap(),
        CoxeterMatrix::from_table(&[&[1, 2, 3], &[2, 1, 6], &[3, 6, 1]]).unwrap(),
    ]
}

fn caps() -> Caps {
    Caps::default()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn normal_form_is_idempotent(
        mi in 0usize..5,
        letters in proptest::collection::vec(0u8..3, 0..10),
    ) {
        let m = &test_matrices()[mi];
        let letters: Vec<u8> =
            letters.into_iter().map(|l| l % m.rank() as u8).collect();
        let g = normal_form(m, &Word(letters), &caps()).unwrap();
        let again = normal_form(m, g.normal(), &caps()).unwrap();
        prop_assert_eq!(&again, &g);
        prop_assert_eq!(again.length(), g.normal().len());
    }

    #[test]
    fn reduce_preserves_parity_and_never_grows(
        mi in 0usize..5,
        letters in proptest::collection::vec(0u8..3, 0..10),
    ) {
        let m = &test_matrices()[mi];
        let letters: Vec<u8> =
            letters.into_iter().map(|l| l % m.rank() as u8).collect();
        let n = letters.len();
        let red = reduce(m, &Word(letters), &caps()).unwrap();
        prop_assert!(red.len() <= n);
        prop_assert_eq!(red.len() % 2, n % 2);
    }

    #[test]
    fn inverse_is_a_two_sided_inverse(
        mi in 0usize..5,
        letters in proptest::collection::vec(0u8..3, 0..8),
    ) {
        let m = &test_matrices()[mi];
        let letters: Vec<u8> =
            letters.into_iter().map(|l| l % m.rank() as u8).collect();
        let a = normal_form(m, &Word(letters), &caps()).unwrap();
        let ainv = invert(m, &a, &caps()).unwrap();
        prop_assert!(multiply(m, &a, &ainv, &caps()).unwrap().is_identity());
        prop_assert!(multiply(m, &ainv, &a, &caps()).unwrap().is_identity());
    }

    #[test]
    fn multiplication_is_associative(
        mi in 0usize..5,
        la in proptest::collection::vec(0u8..3, 0..5),
        lb in proptest::collection::vec(0u8..3, 0..5),
        lc in proptest::collection::vec(0u8..3, 0..5),
    ) {
        let m = &test_matrices()[mi];
        let fix = |ls: Vec<u8>| -> Vec<u8> {
            ls.into_iter().map(|l| l % m.rank() as u8).collect()
        };
        let a = normal_form(m, &Word(fix(la)), &caps()).unwrap();
        let b = normal_form(m, &Word(fix(lb)), &caps()).unwrap();
        let c = normal_form(m, &Word(fix(lc)), &caps()).unwrap();
        let ab_c = multiply(m, &multiply(m, &a, &b, &caps()).unwrap(), &c, &caps()).unwrap();
        let a_bc = multiply(m, &a, &multiply(m, &b, &c, &caps()).unwrap(), &caps()).unwrap();
        prop_assert_eq!(ab_c, a_bc);
    }
}
