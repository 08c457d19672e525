mod common;

use common::{poly, poly_data, ring};
use gscheme::groebner::s_polynomial;
use gscheme::{Field, Ideal, Monomial, MonomialOrder};
use proptest::prelude::*;

type Data = Vec<(Monomial, Vec<i64>)>;

fn orders() -> impl Strategy<Value = MonomialOrder> {
    prop_oneof![Just(MonomialOrder::Lex), Just(MonomialOrder::Grevlex), Just(MonomialOrder::InvLex)]
}

fn fields() -> Vec<Field> {
    vec![Field::rationals(), Field::prime(5).unwrap(), common::towers()[3].clone()]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn normal_forms(k in 0usize..3, order in orders(), gens in prop::collection::vec(poly_data(3, 3, 3), 1..=3), f in poly_data(3, 4, 5)) {
        let field = &fields()[k];
        let r = ring(field, &["x", "y", "z"]);
        let gens: Vec<_> = gens.iter().map(|g: &Data| poly(&r, g)).collect();
        let ideal = Ideal::new(&r, gens.clone()).unwrap().with_groebner(order).unwrap();
        let gb = ideal.groebner().unwrap();
        let f = poly(&r, &f);
        let nf = gb.normal_form(&f);
        prop_assert_eq!(gb.normal_form(&nf), nf.clone());

        let (q, rem) = gb.reduce_with_cofactors(&f);
        prop_assert_eq!(&rem, &nf);
        let recombined = q.iter().zip(gb.polys()).fold(rem.clone(), |acc, (qi, g)| acc.add(&qi.mul(g)));
        prop_assert_eq!(recombined, f.clone());
        prop_assert!(ideal.contains(&f.sub(&nf)).unwrap());
        for g in &gens {
            prop_assert!(gb.normal_form(g).is_zero());
        }

        for (a, g) in gb.polys().iter().enumerate() {
            for h in &gb.polys()[a + 1..] {
                prop_assert!(gb.normal_form(&s_polynomial(g, h, order).unwrap()).is_zero());
            }
        }

        let again = Ideal::new(&r, gens).unwrap().with_groebner(order).unwrap();
        let again = again.groebner().unwrap();
        prop_assert_eq!(
            again.polys().iter().map(|p| p.to_string()).collect::<Vec<_>>(),
            gb.polys().iter().map(|p| p.to_string()).collect::<Vec<_>>()
        );
    }
}
