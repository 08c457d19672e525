mod common;

use common::elem;
use gscheme::catalog::third_roots_good_basis;
use gscheme::hopf::{constant_group, multiplicative_kernel, roots_of_unity, truncated_additive, verify_bialgebra, CayleyTable, HopfData};
use gscheme::{Field, Matrix};
use proptest::prelude::*;

fn zoo() -> Vec<HopfData> {
    let qq = Field::rationals();
    let f2 = Field::prime(2).unwrap();
    let f3 = Field::prime(3).unwrap();
    vec![
        roots_of_unity(&qq, 3).unwrap(),
        third_roots_good_basis(&qq).unwrap().0,
        constant_group(&qq, &CayleyTable::cyclic(3)).unwrap(),
        constant_group(&f3, &CayleyTable::symmetric(3)).unwrap(),
        truncated_additive(&f3, 3, 1).unwrap(),
        truncated_additive(&f2, 2, 2).unwrap(),
        multiplicative_kernel(&f2, 2).unwrap().product(&constant_group(&f2, &CayleyTable::cyclic(2)).unwrap()).unwrap(),
    ]
}

fn matrix(field: &Field, e: usize, entries: &[i64]) -> Option<Matrix> {
    let rows = (0..e).map(|i| (0..e).map(|j| elem(field, &[entries[i * e + j]])).collect()).collect();
    let m = Matrix::from_rows(field, rows).unwrap();
    m.inverse().ok().map(|_| m)
}

fn entries() -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(-3i64..=3, 36)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn change_basis_is_functorial(k in 0usize..7, a in entries(), b in entries()) {
        let zoo = zoo();
        let h = &zoo[k];
        let (e, f) = (h.dim(), h.field());
        let (Some(m), Some(n)) = (matrix(f, e, &a), matrix(f, e, &b)) else { return Ok(()) };
        let once = h.change_basis(&m.mul(&n).unwrap()).unwrap();
        let twice = h.change_basis(&n).unwrap().change_basis(&m).unwrap();
        prop_assert_eq!(once.mult(), twice.mult());
        prop_assert_eq!(once.comult(), twice.comult());
        prop_assert_eq!(once.counit(), twice.counit());
        prop_assert_eq!(once.unit(), twice.unit());
        prop_assert_eq!(once.antipode(), twice.antipode());
        prop_assert!(verify_bialgebra(&once).all_pass());
        let back = once.change_basis(&m.mul(&n).unwrap().inverse().unwrap()).unwrap();
        prop_assert_eq!(back.mult(), h.mult());
        prop_assert_eq!(back.comult(), h.comult());
    }

    #[test]
    fn good_basis_normalises_the_counit(k in 0usize..7, a in entries()) {
        let zoo = zoo();
        let h = &zoo[k];
        let Some(m) = matrix(h.field(), h.dim(), &a) else { return Ok(()) };
        let moved = h.change_basis(&m).unwrap();
        let (good, t) = moved.good_basis().unwrap();
        prop_assert!(good.is_good_basis());
        prop_assert!(good.counit()[0].is_one() && good.counit()[1..].iter().all(|x| x.is_zero()));
        let again = moved.change_basis(&t).unwrap();
        prop_assert_eq!(again.mult(), good.mult());
    }
}

#[test]
fn identity_is_neutral() {
    for h in zoo() {
        let same = h.change_basis(&Matrix::identity(h.field(), h.dim())).unwrap();
        assert_eq!((same.mult(), same.comult(), same.counit(), same.unit()), (h.mult(), h.comult(), h.counit(), h.unit()));
    }
}

#[test]
fn antipodes_of_constant_groups_invert() {
    let qq = Field::rationals();
    let groups = [CayleyTable::cyclic(4), CayleyTable::cyclic(5), CayleyTable::klein(), CayleyTable::symmetric(3)];
    for g in groups {
        let s = constant_group(&qq, &g).unwrap().solve_antipode().unwrap();
        let s = s.antipode().unwrap();
        for x in 0..g.order() {
            for y in 0..g.order() {
                let expected = if y == g.inverse(x) { qq.one() } else { qq.zero() };
                assert_eq!(s[(y, x)], expected);
            }
        }
    }
}
