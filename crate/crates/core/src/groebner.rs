//! Ideals of polynomial rings, Buchberger's algorithm and normal forms.
//!
//! The engine is deterministic: critical pairs are processed by the normal
//! selection strategy (smallest lcm first, ties broken by pair index) and
//! the returned reduced basis is monic and sorted by leading monomial,
//! largest first.

use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::field::FieldElem;
use crate::poly::{Monomial, MonomialOrder, Poly, PolyRing};

type Terms = Vec<(Monomial, FieldElem)>;

fn divides(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

fn lcm(a: &[u32], b: &[u32]) -> Monomial {
    a.iter().zip(b).map(|(x, y)| *x.max(y)).collect()
}

fn quotient(a: &[u32], b: &[u32]) -> Monomial {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

fn coprime(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| *x == 0 || *y == 0)
}

/// `p - c·m·g` for descending term lists; `m·g` stays sorted because
/// monomial orders are multiplicative.
fn sub_scaled(p: &[(Monomial, FieldElem)], c: &FieldElem, m: &[u32], g: &[(Monomial, FieldElem)], order: MonomialOrder) -> Terms {
    let shifted = g.iter().map(|(gm, gc)| (gm.iter().zip(m).map(|(a, b)| a + b).collect::<Monomial>(), gc * c));
    let mut out = Vec::with_capacity(p.len() + g.len());
    let mut pi = p.iter().peekable();
    let mut si = shifted.peekable();
    loop {
        match (pi.peek(), si.peek()) {
            (None, None) => break,
            (Some(_), None) => out.push(pi.next().unwrap().clone()),
            (None, Some(_)) => {
                let (m, c) = si.next().unwrap();
                out.push((m, -c));
            }
            (Some(a), Some(b)) => match order.cmp(&a.0, &b.0) {
                std::cmp::Ordering::Greater => out.push(pi.next().unwrap().clone()),
                std::cmp::Ordering::Less => {
                    let (m, c) = si.next().unwrap();
                    out.push((m, -c));
                }
                std::cmp::Ordering::Equal => {
                    let (am, ac) = pi.next().unwrap();
                    let (_, bc) = si.next().unwrap();
                    let d = ac - &bc;
                    if !d.is_zero() {
                        out.push((am.clone(), d));
                    }
                }
            },
        }
    }
    out
}

fn make_monic(t: Terms) -> Result<Terms> {
    match t.first() {
        None => Ok(t),
        Some((_, c)) if c.is_one() => Ok(t),
        Some((_, c)) => {
            let inv = c.inv()?;
            Ok(t.into_iter().map(|(m, x)| (m, &x * &inv)).collect())
        }
    }
}

/// Full reduction of `f` modulo monic `basis`; when `cofactors` is given,
/// accumulates the quotient terms so that `f = Σ q_i·g_i + r`.
fn reduce(
    f: Terms,
    basis: &[Terms],
    order: MonomialOrder,
    mut cofactors: Option<&mut Vec<Terms>>,
) -> Terms {
    let mut p = f;
    let mut rem: Terms = Vec::new();
    while let Some((lm, lc)) = p.first().cloned() {
        match basis.iter().position(|g| divides(&g[0].0, &lm)) {
            Some(k) => {
                let m = quotient(&lm, &basis[k][0].0);
                if let Some(q) = cofactors.as_deref_mut() {
                    q[k].push((m.clone(), lc.clone()));
                }
                p = sub_scaled(&p[1..], &lc, &m, &basis[k][1..], order);
            }
            None => {
                rem.push((lm, lc));
                p.remove(0);
            }
        }
    }
    rem
}

fn s_poly_terms(f: &Terms, g: &Terms, order: MonomialOrder) -> Terms {
    // both monic
    let l = lcm(&f[0].0, &g[0].0);
    let mf = quotient(&l, &f[0].0);
    let mg = quotient(&l, &g[0].0);
    let one = f[0].1.field().one();
    let fm: Terms = f[1..].iter().map(|(m, c)| (m.iter().zip(&mf).map(|(a, b)| a + b).collect(), c.clone())).collect();
    sub_scaled(&fm, &one, &mg, &g[1..], order)
}

fn to_terms(p: &Poly, order: MonomialOrder) -> Terms {
    p.sorted_terms(order)
}

fn buchberger(gens: &[Poly], order: MonomialOrder) -> Result<Vec<Terms>> {
    let mut basis: Vec<Terms> = Vec::new();
    for g in gens {
        if g.is_zero() {
            continue;
        }
        let t = make_monic(to_terms(g, order))?;
        if !basis.contains(&t) {
            basis.push(t);
        }
    }
    if basis.is_empty() {
        return Ok(basis);
    }
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    for j in 0..basis.len() {
        for i in 0..j {
            pairs.push((i, j));
        }
    }
    let unit = |b: &[Terms]| b.iter().any(|g| g[0].0.iter().all(|&x| x == 0));
    while !pairs.is_empty() && !unit(&basis) {
        let best = (0..pairs.len())
            .min_by(|&a, &b| {
                let (ai, aj) = pairs[a];
                let (bi, bj) = pairs[b];
                let la = lcm(&basis[ai][0].0, &basis[aj][0].0);
                let lb = lcm(&basis[bi][0].0, &basis[bj][0].0);
                order.cmp(&la, &lb).then((ai, aj).cmp(&(bi, bj)))
            })
            .unwrap();
        let (i, j) = pairs.remove(best);
        if coprime(&basis[i][0].0, &basis[j][0].0) {
            continue;
        }
        let s = s_poly_terms(&basis[i], &basis[j], order);
        let r = reduce(s, &basis, order, None);
        if r.is_empty() {
            continue;
        }
        let r = make_monic(r)?;
        let k = basis.len();
        basis.push(r);
        for i in 0..k {
            pairs.push((i, k));
        }
    }
    if unit(&basis) {
        let one = basis[0][0].1.field().one();
        let nv = basis[0][0].0.len();
        return Ok(vec![vec![(vec![0; nv], one)]]);
    }
    // minimal basis
    let mut keep = Vec::new();
    for (i, g) in basis.iter().enumerate() {
        let redundant = basis.iter().enumerate().any(|(j, h)| {
            j != i && divides(&h[0].0, &g[0].0) && (h[0].0 != g[0].0 || j < i)
        });
        if !redundant {
            keep.push(g.clone());
        }
    }
    // interreduce tails
    let mut reduced = Vec::with_capacity(keep.len());
    for (i, g) in keep.iter().enumerate() {
        let others: Vec<Terms> = keep.iter().enumerate().filter(|(j, _)| *j != i).map(|(_, h)| h.clone()).collect();
        let tail = reduce(g[1..].to_vec(), &others, order, None);
        let mut t = vec![g[0].clone()];
        t.extend(tail);
        reduced.push(t);
    }
    reduced.sort_by(|a, b| order.cmp(&b[0].0, &a[0].0));
    Ok(reduced)
}

/// A reduced Gröbner basis together with the order it was computed for.
#[derive(Clone, Debug, PartialEq)]
pub struct GroebnerBasis {
    order: MonomialOrder,
    polys: Vec<Poly>,
    terms: Vec<Terms>,
}

impl GroebnerBasis {
    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn polys(&self) -> &[Poly] {
        &self.polys
    }

    pub fn normal_form(&self, f: &Poly) -> Poly {
        let r = reduce(to_terms(f, self.order), &self.terms, self.order, None);
        Poly::from_terms(f.ring(), r)
    }

    /// Returns `(q, r)` with `f = Σ q[i]·polys[i] + r` and `r` reduced.
    pub fn reduce_with_cofactors(&self, f: &Poly) -> (Vec<Poly>, Poly) {
        let mut q = vec![Vec::new(); self.terms.len()];
        let r = reduce(to_terms(f, self.order), &self.terms, self.order, Some(&mut q));
        let ring = f.ring();
        (q.into_iter().map(|t| Poly::from_terms(ring, t)).collect(), Poly::from_terms(ring, r))
    }

    pub fn is_unit(&self) -> bool {
        self.polys.len() == 1 && self.polys[0].as_constant().is_some_and(|c| !c.is_zero())
    }
}

/// `lcm/LT(f)·f − lcm/LT(g)·g` after normalising both to be monic.
pub fn s_polynomial(f: &Poly, g: &Poly, order: MonomialOrder) -> Result<Poly> {
    let a = make_monic(to_terms(f, order))?;
    let b = make_monic(to_terms(g, order))?;
    if a.is_empty() || b.is_empty() {
        return Ok(f.ring().zero());
    }
    Ok(Poly::from_terms(f.ring(), s_poly_terms(&a, &b, order)))
}

/// A presented ideal: a ring, a generating list and an optional cached
/// reduced Gröbner basis.
#[derive(Clone, Debug)]
pub struct Ideal {
    ring: PolyRing,
    generators: Vec<Poly>,
    order: MonomialOrder,
    cache: OnceLock<GroebnerBasis>,
}

impl Ideal {
    pub fn new(ring: &PolyRing, generators: Vec<Poly>) -> Result<Self> {
        if let Some(g) = generators.iter().find(|g| g.ring() != ring) {
            return Err(Error::RingMismatch(format!("generator {g} lives in {:?}, not {ring:?}", g.ring())));
        }
        Ok(Ideal { ring: ring.clone(), generators, order: MonomialOrder::default(), cache: OnceLock::new() })
    }

    pub fn zero(ring: &PolyRing) -> Self {
        Ideal::new(ring, Vec::new()).unwrap()
    }

    pub fn ring(&self) -> &PolyRing {
        &self.ring
    }

    pub fn generators(&self) -> &[Poly] {
        &self.generators
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    /// Selects `order` for later normal forms without computing a basis.
    pub fn with_order(mut self, order: MonomialOrder) -> Self {
        if self.order != order {
            self.order = order;
            self.cache = OnceLock::new();
        }
        self
    }

    /// Computes and caches the reduced basis for `order`.
    pub fn with_groebner(mut self, order: MonomialOrder) -> Result<Self> {
        if self.order != order {
            self.order = order;
            self.cache = OnceLock::new();
        }
        self.groebner()?;
        Ok(self)
    }

    pub fn groebner(&self) -> Result<&GroebnerBasis> {
        if let Some(b) = self.cache.get() {
            return Ok(b);
        }
        let terms = buchberger(&self.generators, self.order)?;
        let polys = terms.iter().map(|t| Poly::from_terms(&self.ring, t.clone())).collect();
        Ok(self.cache.get_or_init(|| GroebnerBasis { order: self.order, polys, terms }))
    }

    pub fn cached_basis(&self) -> Option<&GroebnerBasis> {
        self.cache.get()
    }

    pub fn normal_form(&self, f: &Poly) -> Result<Poly> {
        if f.ring() != &self.ring {
            return Err(Error::RingMismatch(format!("{f} is not in {:?}", self.ring)));
        }
        Ok(self.groebner()?.normal_form(f))
    }

    pub fn contains(&self, f: &Poly) -> Result<bool> {
        Ok(self.normal_form(f)?.is_zero())
    }

    /// `true` when every generator of `other` lies in `self`.
    pub fn contains_ideal(&self, other: &Ideal) -> Result<bool> {
        if other.ring != self.ring {
            return Err(Error::RingMismatch("ideals live in different rings".into()));
        }
        for g in &other.generators {
            if !self.contains(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn is_unit(&self) -> Result<bool> {
        Ok(self.groebner()?.is_unit())
    }
}

pub fn groebner_basis(ideal: &Ideal, order: MonomialOrder) -> Result<Ideal> {
    ideal.clone().with_groebner(order)
}

pub fn ideal_membership(f: &Poly, ideal: &Ideal) -> Result<bool> {
    ideal.contains(f)
}

/// `J ⊆ I` at the level of presented ideals.
pub fn ideal_in_ideal(j: &Ideal, i: &Ideal) -> Result<bool> {
    i.contains_ideal(j)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Field;
    use crate::parse::parse_poly;

    fn ring(field: &Field, vars: &[&str]) -> PolyRing {
        PolyRing::new(field, vars.iter().map(|s| s.to_string()).collect()).unwrap()
    }

    fn ideal(r: &PolyRing, gens: &[&str]) -> Ideal {
        Ideal::new(r, gens.iter().map(|g| parse_poly(r, g).unwrap()).collect()).unwrap()
    }

    fn basis_strings(i: &Ideal, order: MonomialOrder) -> Vec<String> {
        i.clone().with_groebner(order).unwrap().groebner().unwrap().polys().iter().map(|p| p.display_with(order)).collect()
    }

    #[test]
    fn principal_ideals() {
        let qq = Field::rationals();
        let r = ring(&qq, &["X"]);
        for order in [MonomialOrder::Grevlex, MonomialOrder::Lex] {
            assert_eq!(basis_strings(&ideal(&r, &["X"]), order), vec!["X"]);
        }
        let f2 = Field::prime(2).unwrap();
        let r2 = ring(&f2, &["X"]);
        assert_eq!(basis_strings(&ideal(&r2, &["X^2+1"]), MonomialOrder::Grevlex), vec!["X^2+1"]);
    }

    #[test]
    fn one_s_polynomial_step() {
        let r = ring(&Field::rationals(), &["Y", "X"]);
        let i = ideal(&r, &["Y - X^2", "Y"]);
        assert_eq!(basis_strings(&i, MonomialOrder::Lex), vec!["Y", "X^2"]);
    }

    #[test]
    fn membership_examples() {
        let qq = Field::rationals();
        let r = ring(&qq, &["X"]);
        assert!(ideal(&r, &["X"]).contains(&parse_poly(&r, "X^2").unwrap()).unwrap());
        assert!(!ideal(&r, &["X^2"]).contains(&parse_poly(&r, "X+1").unwrap()).unwrap());
        let r2 = ring(&qq, &["X_0", "X_1", "Xp"]);
        let i = ideal(&r2, &["X_1 - X_0^2", "Xp"]);
        assert!(i.contains(&parse_poly(&r2, "X_1 - X_0^2").unwrap()).unwrap());
        let j = ideal(&r2, &["X_1 - X_0^2"]);
        assert!(ideal_in_ideal(&j, &i).unwrap());
        assert!(!ideal_in_ideal(&i, &j).unwrap());
    }

    #[test]
    fn unit_ideal_collapses() {
        let r = ring(&Field::rationals(), &["x", "y"]);
        let i = ideal(&r, &["x*y - 1", "x"]);
        assert!(i.is_unit().unwrap());
        assert_eq!(basis_strings(&i, MonomialOrder::Grevlex), vec!["1"]);
    }

    #[test]
    fn buchberger_criterion_on_output() {
        let f3 = Field::prime(3).unwrap();
        let r = ring(&f3, &["x", "y", "z"]);
        let i = ideal(&r, &["x^2*y - z", "x*y^2 + y", "x*z - y^2 + 1"]);
        for order in [MonomialOrder::Grevlex, MonomialOrder::Lex, MonomialOrder::InvLex] {
            let gb = i.clone().with_groebner(order).unwrap();
            let b = gb.groebner().unwrap();
            for f in b.polys() {
                for g in b.polys() {
                    let s = s_polynomial(f, g, order).unwrap();
                    assert!(b.normal_form(&s).is_zero());
                }
            }
            for g in i.generators() {
                assert!(gb.contains(g).unwrap());
            }
        }
    }

    #[test]
    fn cofactors_account_for_the_difference() {
        let qq = Field::rationals();
        let r = ring(&qq, &["x", "y"]);
        let i = ideal(&r, &["x^2 - y", "x*y - 1"]);
        let b = i.groebner().unwrap();
        let f = parse_poly(&r, "x^3*y + 2*x*y^2 - y + 7").unwrap();
        let (q, rem) = b.reduce_with_cofactors(&f);
        let mut acc = rem.clone();
        for (qi, gi) in q.iter().zip(b.polys()) {
            acc = &acc + &(qi * gi);
        }
        assert_eq!(acc, f);
        assert_eq!(b.normal_form(&rem), rem);
    }

    #[test]
    fn ring_mismatch_is_reported() {
        let qq = Field::rationals();
        let r1 = ring(&qq, &["x"]);
        let r2 = ring(&qq, &["y"]);
        assert!(Ideal::new(&r1, vec![r2.var(0)]).is_err());
        assert!(ideal(&r1, &["x"]).contains(&r2.var(0)).is_err());
    }
}
