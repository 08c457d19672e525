mod common;

use common::{coords, elem, towers};
use proptest::prelude::*;

proptest! {
    #[test]
    fn ring_axioms(k in 0usize..8, a in coords(), b in coords(), c in coords()) {
        let f = &towers()[k];
        let (a, b, c) = (elem(f, &a), elem(f, &b), elem(f, &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&(&a - &b) + &b, a.clone());
    }

    #[test]
    fn units_invert(k in 0usize..8, a in coords()) {
        let f = &towers()[k];
        let a = elem(f, &a);
        prop_assume!(!a.is_zero());
        prop_assert!((&a * &a.inv().unwrap()).is_one());
        prop_assert!(f.zero().inv().is_err());
    }

    #[test]
    fn equality_is_equality_of_canonical_forms(k in 0usize..8, a in coords(), b in coords()) {
        let f = &towers()[k];
        let (x, y) = (elem(f, &a), elem(f, &b));
        prop_assert_eq!(x == y, x.to_string() == y.to_string());
        prop_assert_eq!(x == y, x.coords_over(&f.prime_field()).unwrap() == y.coords_over(&f.prime_field()).unwrap());
    }

    #[test]
    fn frobenius_is_a_ring_endomorphism(k in 1usize..6, a in coords(), b in coords()) {
        let f = &towers()[k];
        let p = f.characteristic();
        prop_assert!(p > 0);
        let (a, b) = (elem(f, &a), elem(f, &b));
        prop_assert_eq!((&a + &b).frobenius(), &a.frobenius() + &b.frobenius());
        prop_assert_eq!((&a * &b).frobenius(), &a.frobenius() * &b.frobenius());
        prop_assert_eq!(a.frobenius(), a.pow(p));
    }
}

#[test]
fn characteristics() {
    let chars: Vec<u64> = towers().iter().map(|f| f.characteristic()).collect();
    assert_eq!(chars, vec![0, 7, 2, 2, 2, 3, 0, 0]);
}
