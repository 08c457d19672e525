#![allow(dead_code)]

use gscheme::catalog::simple_extension;
use gscheme::{Field, FieldElem, Monomial, Poly, PolyRing};
use proptest::prelude::*;

pub fn elem(field: &Field, coords: &[i64]) -> FieldElem {
    let prime = field.prime_field();
    let n = field.absolute_degree();
    let c: Vec<FieldElem> = (0..n).map(|k| prime.from_i64(coords.get(k).copied().unwrap_or(0))).collect();
    field.from_coords_over(&prime, &c).unwrap()
}

pub fn coords() -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(-4i64..=4, 6)
}

/// Up to `terms` terms with exponents below `deg` in `nvars` variables.
pub fn poly_data(nvars: usize, deg: u32, terms: usize) -> impl Strategy<Value = Vec<(Monomial, Vec<i64>)>> {
    prop::collection::vec((prop::collection::vec(0..deg, nvars), coords()), 0..=terms)
}

pub fn poly(ring: &PolyRing, data: &[(Monomial, Vec<i64>)]) -> Poly {
    data.iter().fold(ring.zero(), |acc, (m, c)| acc.add(&ring.monomial(m.clone(), elem(ring.field(), c))))
}

pub fn ring(field: &Field, vars: &[&str]) -> PolyRing {
    PolyRing::new(field, vars.iter().map(|v| v.to_string()).collect()).unwrap()
}

/// A small zoo of towers: primes, `𝔽₄`, `𝔽₁₆ = 𝔽₄(b)`, `ℚ(∛2)`, `ℚ(ζ)(∛2)`.
pub fn towers() -> Vec<Field> {
    let qq = Field::rationals();
    let f2 = Field::prime(2).unwrap();
    let f4 = simple_extension(&f2, "a", "a^2+a+1").unwrap();
    let f16 = simple_extension(&f4, "b", "b^2+b+a").unwrap();
    let f9 = simple_extension(&Field::prime(3).unwrap(), "i", "i^2+1").unwrap();
    let kr = simple_extension(&qq, "r", "r^3-2").unwrap();
    let kz = simple_extension(&qq, "z", "z^2+z+1").unwrap();
    let kzr = simple_extension(&kz, "r", "r^3-2").unwrap();
    vec![qq, Field::prime(7).unwrap(), f2, f4, f16, f9, kr, kzr]
}
