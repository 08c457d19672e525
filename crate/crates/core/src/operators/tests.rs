use super::*;
use crate::hopf::{constant_group, multiplicative_kernel, roots_of_unity, trivial, truncated_additive, CayleyTable};
use crate::parse::{parse_elem, parse_poly, parse_univariate};

fn third_roots_good(field: &Field) -> HopfData {
    let h = roots_of_unity(field, 3).unwrap();
    let t = |s: &str| parse_elem(field, s).unwrap();
    let nb = vec![
        vec![t("1/3"), t("1/3"), t("1/3")],
        vec![t("-1/3"), t("1/3"), t("0")],
        vec![t("-1/3"), t("0"), t("1/3")],
    ];
    h.change_basis_to(&nb).unwrap().0
}

fn cube_root_two() -> Field {
    let qq = Field::rationals();
    qq.extension("r", parse_univariate(&qq, "r", "r^3-2").unwrap()).unwrap()
}

fn elems(f: &Field, xs: &[&str]) -> Vec<FieldElem> {
    xs.iter().map(|x| parse_elem(f, x).unwrap()).collect()
}

fn polys(r: &PolyRing, xs: &[&str]) -> Vec<Poly> {
    xs.iter().map(|x| parse_poly(r, x).unwrap()).collect()
}

#[test]
fn cube_root_action_in_the_good_basis() {
    let qq = Field::rationals();
    let k = cube_root_two();
    // ∂(r) = r⊗ε in the group-like basis, transported to the good basis
    let eps = roots_of_unity(&qq, 3).unwrap();
    let a = FieldAction::new(&eps, &k, &[("r".into(), elems(&k, &["0", "r", "0"]))]).unwrap();
    let spec = OperatorSpec::on_field(a);
    assert!(spec.check().unwrap().passes());
    let good = third_roots_good(&qq);
    let t = |s: &str| parse_elem(&qq, s).unwrap();
    let p = Matrix::from_rows(
        &qq,
        vec![vec![t("1/3"), t("-1/3"), t("-1/3")], vec![t("1/3"), t("1/3"), t("0")], vec![t("1/3"), t("0"), t("1/3")]],
    )
    .unwrap();
    let moved = spec.change_basis(&p.inverse().unwrap()).unwrap();
    assert_eq!(moved.hopf(), &good);
    assert_eq!(moved.action().images()[0].1, elems(&k, &["r", "2*r", "-r"]));
    let report = moved.check().unwrap();
    assert!(report.passes(), "{report:?}");
    // ∂1∂1 = 2∂0 + ∂1 on r: both sides 4r
    let r = k.generator().unwrap();
    let d = moved.extend_field(&r);
    assert_eq!(moved.extend_field(&d[1])[1], parse_elem(&k, "4*r").unwrap());
}

#[test]
fn scalars_follow_the_unit() {
    let qq = Field::rationals();
    let good = third_roots_good(&qq);
    let spec = OperatorSpec::on_field(FieldAction::trivial(&good));
    assert_eq!(spec.extend_field(&qq.one()), elems(&qq, &["1", "-1", "-1"]));
    assert_eq!(spec.extend_field(&qq.from_i64(5)), elems(&qq, &["5", "-5", "-5"]));
}

#[test]
fn leibniz_in_characteristic_two() {
    let f2 = Field::prime(2).unwrap();
    let ga = truncated_additive(&f2, 2, 1).unwrap();
    let ring = PolyRing::new(&f2, vec!["x".into()]).unwrap();
    let spec = OperatorSpec::on_algebra(FieldAction::trivial(&ga), &ring, vec![], vec![polys(&ring, &["x", "x^2"])]).unwrap();
    let d = spec.extend(&parse_poly(&ring, "x^3").unwrap()).unwrap();
    assert_eq!(d, polys(&ring, &["x^3", "x^4"]));
    assert!(spec.check().unwrap().passes());

    let bad = OperatorSpec::on_algebra(FieldAction::trivial(&ga), &ring, vec![], vec![polys(&ring, &["x", "x+1"])]).unwrap();
    let fails = bad.check_iterativity().unwrap();
    assert_eq!(fails.len(), 1);
    assert_eq!((fails[0].i, fails[0].j, fails[0].lhs.as_str(), fails[0].rhs.as_str()), (1, 1, "x+1", "0"));
}

#[test]
fn trivial_scheme_is_vacuous() {
    let qq = Field::rationals();
    let ring = PolyRing::new(&qq, vec!["x".into()]).unwrap();
    let t = trivial(&qq);
    let spec = OperatorSpec::on_algebra(FieldAction::trivial(&t), &ring, vec![], vec![polys(&ring, &["x"])]).unwrap();
    assert!(spec.check().unwrap().passes());
}

#[test]
fn well_definedness_on_a_quotient() {
    let f2 = Field::prime(2).unwrap();
    let ga = truncated_additive(&f2, 2, 1).unwrap();
    let ring = PolyRing::new(&f2, vec!["x".into(), "y".into()]).unwrap();
    let rel = polys(&ring, &["y-x^2"]);
    let good = OperatorSpec::on_algebra(
        FieldAction::trivial(&ga),
        &ring,
        rel.clone(),
        vec![polys(&ring, &["x", "y"]), polys(&ring, &["y", "0"])],
    )
    .unwrap();
    assert!(good.check_well_defined().unwrap().is_empty());
    let bad = OperatorSpec::on_algebra(
        FieldAction::trivial(&ga),
        &ring,
        rel,
        vec![polys(&ring, &["x", "1"]), polys(&ring, &["y", "1"])],
    )
    .unwrap();
    let fails = bad.check_well_defined().unwrap();
    assert_eq!(fails.len(), 1);
    assert_eq!((fails[0].component, fails[0].normal_form.as_str()), (1, "1"));
}

#[test]
fn tower_relations_are_checked() {
    let k = cube_root_two();
    let qq = Field::rationals();
    let eps = roots_of_unity(&qq, 3).unwrap();
    // r ↦ 2r⊗ε does not respect r³ = 2
    let a = FieldAction::new(&eps, &k, &[("r".into(), elems(&k, &["0", "2*r", "0"]))]).unwrap();
    let fails = OperatorSpec::on_field(a).check_well_defined().unwrap();
    assert_eq!(fails.len(), 1);
    assert_eq!(fails[0].component, 0);
    assert!(FieldAction::new(&eps, &k, &[]).is_err());
    assert!(FieldAction::new(&eps, &k, &[("s".into(), elems(&k, &["0", "r", "0"]))]).is_err());
}

#[test]
fn constants_of_the_cube_root_action() {
    let qq = Field::rationals();
    let k = cube_root_two();
    let good = third_roots_good(&qq);
    let a = FieldAction::new(&good, &k, &[("r".into(), elems(&k, &["r", "2*r", "-r"]))]).unwrap();
    let c = OperatorSpec::on_field(a).constants().unwrap();
    assert_eq!(c.basis, vec![k.one()]);
    assert_eq!((c.degree, c.order, c.bound_holds), (3, 3, true));
}

#[test]
fn constants_of_frobenius_on_f4() {
    let f2 = Field::prime(2).unwrap();
    let f4 = f2.extension("a", parse_univariate(&f2, "a", "a^2+a+1").unwrap()).unwrap();
    let z2 = constant_group(&f2, &CayleyTable::cyclic(2)).unwrap();
    let a = FieldAction::new(&z2, &f4, &[("a".into(), elems(&f4, &["a", "a+1"]))]).unwrap();
    let spec = OperatorSpec::on_field(a);
    assert!(spec.check().unwrap().passes());
    let c = spec.constants().unwrap();
    assert_eq!(c.basis, vec![f4.one()]);
    assert_eq!(c.degree, 2);
    let triv = OperatorSpec::on_field(FieldAction::new(&z2, &f4, &[("a".into(), elems(&f4, &["a", "a"]))]).unwrap());
    assert_eq!(triv.constants().unwrap().degree, 1);
}

#[test]
fn rule_tables_for_third_roots() {
    let table = RuleTable::derive(&third_roots_good(&Field::rationals()));
    assert_eq!(
        table.render_product(&table.product[1]),
        "∂1(xy) = (-2∂1(x)∂1(y)-∂1(x)∂2(y)-∂2(x)∂1(y)+∂2(x)∂2(y))/3"
    );
    assert_eq!(
        table.render_product(&table.product[2]),
        "∂2(xy) = (∂1(x)∂1(y)-∂1(x)∂2(y)-∂2(x)∂1(y)-2∂2(x)∂2(y))/3"
    );
    let it = |i: usize, j: usize| table.render_iterativity(&table.iterativity[i * 3 + j]);
    assert_eq!(it(1, 1), "∂1∘∂1 = 2∂0+∂1");
    assert_eq!(it(2, 2), "∂2∘∂2 = 2∂0+∂2");
    assert_eq!(it(1, 2), "∂1∘∂2 = -∂0-∂1-∂2");
    assert_eq!(it(2, 1), "∂2∘∂1 = -∂0-∂1-∂2");
    assert_eq!(table.render_product(&table.product[0]), "∂0(xy) = xy");
}

#[test]
fn rule_tables_for_truncated_schemes() {
    let f2 = Field::prime(2).unwrap();
    let gm = RuleTable::derive(&multiplicative_kernel(&f2, 2).unwrap());
    assert_eq!(gm.render_product(&gm.product[1]), "∂1(xy) = x∂1(y)+∂1(x)y");
    assert_eq!(gm.render_iterativity(&gm.iterativity[3]), "∂1∘∂1 = ∂1");

    let f3 = Field::prime(3).unwrap();
    let ga = RuleTable::derive(&truncated_additive(&f3, 3, 1).unwrap());
    let it = |i: usize, j: usize| ga.render_iterativity(&ga.iterativity[i * 3 + j]);
    assert_eq!(it(1, 1), "∂1∘∂1 = 2∂2");
    assert_eq!(it(1, 2), "∂1∘∂2 = 0");
    assert_eq!(it(2, 2), "∂2∘∂2 = 0");
    assert_eq!(ga.render_product(&ga.product[2]), "∂2(xy) = x∂2(y)+∂1(x)∂1(y)+∂2(x)y");
}

/// `𝔽₄[x, y]` with `σ` swapping `x, y` and fixing nothing in `𝔽₄`, and `D`.
fn desk_instance(dx: &str, dy: &str, dsx: &str, dsy: &str) -> OperatorSpec {
    let f2 = Field::prime(2).unwrap();
    let f4 = f2.extension("a", parse_univariate(&f2, "a", "a^2+a+1").unwrap()).unwrap();
    let h = truncated_additive(&f2, 2, 1).unwrap().product(&constant_group(&f2, &CayleyTable::cyclic(2)).unwrap()).unwrap();
    let action = FieldAction::new(&h, &f4, &[("a".into(), elems(&f4, &["a", "a+1", "0", "0"]))]).unwrap();
    let ring = PolyRing::new(&f4, vec!["x".into(), "y".into()]).unwrap();
    OperatorSpec::on_algebra(
        action,
        &ring,
        vec![],
        vec![polys(&ring, &["x", "y", dx, dsx]), polys(&ring, &["y", "x", dy, dsy])],
    )
    .unwrap()
}

#[test]
fn decomposing_a_commuting_product_action() {
    let spec = desk_instance("1", "1", "1", "1");
    assert!(spec.check().unwrap().passes());
    let d = decompose_product_action(&spec).unwrap();
    assert!(d.passes(), "{:?}", d.commutation);
    let ring = spec.ring();
    assert_eq!(d.left.images()[0], polys(ring, &["x", "1"]));
    assert_eq!(d.right.images()[0], polys(ring, &["x", "y"]));
}

#[test]
fn decomposing_a_non_commuting_action() {
    // D(x) = y, D(y) = 0 while σ swaps: σD(x) = x but Dσ(x) = 0
    let spec = desk_instance("y", "0", "0", "x");
    let d = decompose_product_action(&spec).unwrap();
    assert!(d.left_report.passes() && d.right_report.passes());
    assert!(!d.passes());
    let f = &d.commutation[0];
    assert_eq!((f.i, f.j, f.generator.as_str()), (1, 1, "x"));
    assert!(!spec.check().unwrap().passes());
}

#[test]
fn decomposing_needs_a_layout() {
    let qq = Field::rationals();
    let spec = OperatorSpec::on_field(FieldAction::trivial(&third_roots_good(&qq)));
    assert!(matches!(decompose_product_action(&spec), Err(Error::NotAProduct)));
    let t = trivial(&qq).product(&third_roots_good(&qq)).unwrap();
    let d = decompose_product_action(&OperatorSpec::on_field(FieldAction::trivial(&t))).unwrap();
    assert!(d.passes());
    assert_eq!(d.right.hopf(), &third_roots_good(&qq));
}
