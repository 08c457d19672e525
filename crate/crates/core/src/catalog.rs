//! Worked actions shipped with the library, used by the test suites and
//! the command-line front end.

use rand::Rng;

use crate::error::{Error, Result};
use crate::field::{Field, FieldElem};
use crate::hopf::{constant_group, multiplicative_kernel, roots_of_unity, trivial, truncated_additive, CayleyTable, HopfData};
use crate::linalg::Matrix;
use crate::operators::{FieldAction, OperatorSpec};
use crate::parse::{parse_elem, parse_poly, parse_univariate};
use crate::poly::PolyRing;

pub struct Shipped {
    pub name: &'static str,
    pub spec: OperatorSpec,
}

fn elems(f: &Field, xs: &[&str]) -> Result<Vec<FieldElem>> {
    xs.iter().map(|x| parse_elem(f, x)).collect()
}

pub fn simple_extension(base: &Field, name: &str, minpoly: &str) -> Result<Field> {
    base.extension(name, parse_univariate(base, name, minpoly)?)
}

/// `b_0 = (1+ε+ε²)/3`, `b_1 = (ε−1)/3`, `b_2 = (ε²−1)/3` in the group-like
/// basis of `roots_of_unity(3)`, with the transform from that basis.
pub fn third_roots_good_basis(field: &Field) -> Result<(HopfData, Matrix)> {
    let h = roots_of_unity(field, 3)?;
    let nb = vec![
        elems(field, &["1/3", "1/3", "1/3"])?,
        elems(field, &["-1/3", "1/3", "0"])?,
        elems(field, &["-1/3", "0", "1/3"])?,
    ];
    h.change_basis_to(&nb)
}

/// The idempotents `b'_k = (1/3)Σ_j ζ^{-jk}ε^j`, written in the good basis of
/// [`third_roots_good_basis`] over `field ∋ ζ`. Returns the moved data and
/// the coordinate transform from the good basis.
pub fn third_roots_idempotent_basis(field: &Field, zeta: &FieldElem) -> Result<(HopfData, Matrix)> {
    if !zeta.pow(3).is_one() || zeta.is_one() {
        return Err(Error::InvalidField(format!("{zeta} is not a primitive cube root of unity")));
    }
    let (good, to_good) = third_roots_good_basis(field)?;
    let third = field.from_i64(3).inv()?;
    let zinv = zeta.inv()?;
    let vectors: Vec<Vec<FieldElem>> = (0..3u64)
        .map(|k| {
            let eps: Vec<FieldElem> = (0..3u64).map(|j| &zinv.pow(j * k) * &third).collect();
            to_good.mul_vec(&eps)
        })
        .collect::<Result<_>>()?;
    good.change_basis_to(&vectors)
}

pub fn f4() -> Result<Field> {
    simple_extension(&Field::prime(2)?, "a", "a^2+a+1")
}

/// `𝔾_a[1] × (ℤ/2)` over `𝔽₂` with `D = 0` and `σ` the Frobenius on `𝔽₄`.
pub fn additive_times_frobenius() -> Result<FieldAction> {
    let f2 = Field::prime(2)?;
    let k = f4()?;
    let h = truncated_additive(&f2, 2, 1)?.product(&constant_group(&f2, &CayleyTable::cyclic(2))?)?;
    FieldAction::new(&h, &k, &[("a".into(), elems(&k, &["a", "a+1", "0", "0"])?)])
}

/// `𝔽₄[x, y]` under `𝔾_a[1] × (ℤ/2)` with `σ` the Frobenius on `𝔽₄`; the
/// arguments are `D(x)`, `D(y)`, `(Dσ)(x)`, `(Dσ)(y)`, with `σ` swapping `x` and `y`.
pub fn desk_product_action(dx: &str, dy: &str, dsx: &str, dsy: &str) -> Result<OperatorSpec> {
    let action = additive_times_frobenius()?;
    let ring = PolyRing::new(action.field(), vec!["x".into(), "y".into()])?;
    let p = |s: &str| parse_poly(&ring, s);
    let images = vec![vec![p("x")?, p("y")?, p(dx)?, p(dsx)?], vec![p("y")?, p("x")?, p(dy)?, p(dsy)?]];
    OperatorSpec::on_algebra(action, &ring, vec![], images)
}

/// `r ↦ r⊗ε` on `ℚ(ζ)(∛2)`, moved to the idempotent basis where the scheme
/// is the constant group `ℤ/3`.
pub fn cube_root_over_cyclotomic() -> Result<OperatorSpec> {
    let qq = Field::rationals();
    let kz = simple_extension(&qq, "z", "z^2+z+1")?;
    let k = simple_extension(&kz, "r", "r^3-2")?;
    let eps = roots_of_unity(&qq, 3)?.base_change(&kz)?;
    let start = FieldAction::new(&eps, &k, &[("r".into(), elems(&k, &["0", "r", "0"])?)])?;
    let z = kz.generator().unwrap();
    let zinv = z.inv()?;
    let third = kz.from_i64(3).inv()?;
    let vectors: Vec<Vec<FieldElem>> =
        (0..3u64).map(|k| (0..3u64).map(|j| &zinv.pow(j * k) * &third).collect()).collect();
    let (_, m) = eps.change_basis_to(&vectors)?;
    OperatorSpec::on_field(start).change_basis(&m)
}

/// Every shipped action of a finite group scheme on a field.
pub fn shipped_field_actions() -> Result<Vec<Shipped>> {
    let qq = Field::rationals();
    let f2 = Field::prime(2)?;
    let f3 = Field::prime(3)?;
    let k4 = f4()?;
    let k8 = simple_extension(&f2, "a", "a^3+a+1")?;
    let kr = simple_extension(&qq, "r", "r^3-2")?;
    let kz = simple_extension(&qq, "z", "z^2+z+1")?;
    let z2 = constant_group(&f2, &CayleyTable::cyclic(2))?;
    let z3 = constant_group(&f2, &CayleyTable::cyclic(3))?;
    let (good, _) = third_roots_good_basis(&qq)?;
    let on = |h: &HopfData, k: &Field, images: Vec<(&str, Vec<FieldElem>)>| -> Result<OperatorSpec> {
        let images: Vec<(String, Vec<FieldElem>)> = images.into_iter().map(|(n, v)| (n.to_string(), v)).collect();
        Ok(OperatorSpec::on_field(FieldAction::new(h, k, &images)?))
    };
    Ok(vec![
        Shipped { name: "trivial_qq", spec: OperatorSpec::on_field(FieldAction::trivial(&trivial(&qq))) },
        Shipped { name: "cube_root_two", spec: on(&good, &kr, vec![("r", elems(&kr, &["r", "2*r", "-r"])?)])? },
        Shipped { name: "cube_root_two_cyclotomic", spec: cube_root_over_cyclotomic()? },
        Shipped {
            name: "conjugation_q_zeta",
            spec: on(&constant_group(&qq, &CayleyTable::cyclic(2))?, &kz, vec![("z", elems(&kz, &["z", "-1-z"])?)])?,
        },
        Shipped { name: "frobenius_f4", spec: on(&z2, &k4, vec![("a", elems(&k4, &["a", "a+1"])?)])? },
        Shipped { name: "frobenius_f8", spec: on(&z3, &k8, vec![("a", elems(&k8, &["a", "a^2", "a^2+a"])?)])? },
        Shipped { name: "fixed_f4", spec: on(&z2, &k4, vec![("a", elems(&k4, &["a", "a"])?)])? },
        Shipped {
            name: "additive_f2",
            spec: OperatorSpec::on_field(FieldAction::trivial(&truncated_additive(&f2, 2, 1)?)),
        },
        Shipped {
            name: "additive_f3_height2",
            spec: OperatorSpec::on_field(FieldAction::trivial(&truncated_additive(&f3, 3, 2)?)),
        },
        Shipped {
            name: "multiplicative_f2",
            spec: OperatorSpec::on_field(FieldAction::trivial(&multiplicative_kernel(&f2, 2)?)),
        },
        Shipped { name: "additive_times_frobenius_f4", spec: OperatorSpec::on_field(additive_times_frobenius()?) },
    ])
}

/// Uniform element of a finite field tower.
pub fn random_element<R: Rng>(field: &Field, rng: &mut R) -> Result<FieldElem> {
    let p = field.characteristic();
    if p == 0 {
        return Err(Error::InvalidField(format!("{field} is infinite")));
    }
    let prime = field.prime_field();
    let coords: Vec<FieldElem> =
        (0..field.absolute_degree()).map(|_| prime.from_i64(rng.gen_range(0..p) as i64)).collect();
    field.from_coords_over(&prime, &coords)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_shipped_action_passes_its_checks() {
        for s in shipped_field_actions().unwrap() {
            let report = s.spec.check().unwrap();
            assert!(report.passes(), "{}: {report:?}", s.name);
        }
    }

    #[test]
    fn cube_root_over_the_cyclotomic_field() {
        let spec = cube_root_over_cyclotomic().unwrap();
        let k = spec.field().clone();
        assert_eq!(spec.action().images()[0].1, elems(&k, &["r", "z*r", "z^2*r"]).unwrap());
        let kz = k.base().unwrap().clone();
        let z3 = constant_group(&kz, &CayleyTable::cyclic(3)).unwrap();
        assert_eq!(spec.hopf().mult(), z3.mult());
        assert_eq!(spec.hopf().comult(), z3.comult());
        assert_eq!(spec.constants().unwrap().degree, 3);
    }

    #[test]
    fn random_elements_cover_f4() {
        use rand::SeedableRng;
        let k = f4().unwrap();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0);
        let mut seen: Vec<FieldElem> = Vec::new();
        for _ in 0..64 {
            let x = random_element(&k, &mut rng).unwrap();
            if !seen.contains(&x) {
                seen.push(x);
            }
        }
        assert_eq!(seen.len(), 4);
        assert!(random_element(&Field::rationals(), &mut rng).is_err());
    }

    #[test]
    fn desk_actions() {
        assert!(desk_product_action("1", "1", "1", "1").unwrap().check().unwrap().passes());
        assert!(!desk_product_action("y", "0", "0", "x").unwrap().check().unwrap().passes());
    }
}
