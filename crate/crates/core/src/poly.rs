//! Sparse multivariate polynomials over a field tower.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::field::{is_identifier, Field, FieldElem};

pub type Monomial = Vec<u32>;

/// Monomial orders. Variable priority follows declaration order except for
/// [`MonomialOrder::InvLex`], which is lex with the last declared variable
/// largest.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default, serde::Serialize)]
#[serde(rename_all = "lowercase")]
pub enum MonomialOrder {
    #[default]
    Grevlex,
    Lex,
    InvLex,
}

impl MonomialOrder {
    pub fn cmp(&self, a: &[u32], b: &[u32]) -> Ordering {
        match self {
            MonomialOrder::Lex => a.cmp(b),
            MonomialOrder::InvLex => a.iter().rev().cmp(b.iter().rev()),
            MonomialOrder::Grevlex => {
                let da: u64 = a.iter().map(|&x| x as u64).sum();
                let db: u64 = b.iter().map(|&x| x as u64).sum();
                da.cmp(&db).then_with(|| {
                    for (x, y) in a.iter().zip(b).rev() {
                        if x != y {
                            return y.cmp(x);
                        }
                    }
                    Ordering::Equal
                })
            }
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "grevlex" => Ok(MonomialOrder::Grevlex),
            "lex" => Ok(MonomialOrder::Lex),
            "invlex" => Ok(MonomialOrder::InvLex),
            other => Err(Error::Parse(format!("unknown monomial order {other:?}"))),
        }
    }
}

#[derive(Clone)]
pub struct PolyRing(Arc<RingInner>);

#[derive(PartialEq)]
struct RingInner {
    field: Field,
    vars: Vec<String>,
}

impl PartialEq for PolyRing {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || *self.0 == *other.0
    }
}

impl Eq for PolyRing {}

impl PolyRing {
    pub fn new(field: &Field, vars: Vec<String>) -> Result<Self> {
        for (i, v) in vars.iter().enumerate() {
            if !is_identifier(v) {
                return Err(Error::Parse(format!("variable name {v:?} is not an identifier")));
            }
            if vars[..i].contains(v) || field.generator_names().contains(v) {
                return Err(Error::RingMismatch(format!("variable name {v} is used twice")));
            }
        }
        Ok(PolyRing(Arc::new(RingInner { field: field.clone(), vars })))
    }

    pub fn field(&self) -> &Field {
        &self.0.field
    }

    pub fn vars(&self) -> &[String] {
        &self.0.vars
    }

    pub fn nvars(&self) -> usize {
        self.0.vars.len()
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.0.vars.iter().position(|v| v == name)
    }

    pub fn zero(&self) -> Poly {
        Poly { ring: self.clone(), terms: BTreeMap::new() }
    }

    pub fn one(&self) -> Poly {
        self.constant(self.field().one())
    }

    pub fn constant(&self, c: FieldElem) -> Poly {
        let mut p = self.zero();
        if !c.is_zero() {
            p.terms.insert(vec![0; self.nvars()], c);
        }
        p
    }

    pub fn var(&self, i: usize) -> Poly {
        let mut m = vec![0; self.nvars()];
        m[i] = 1;
        self.monomial(m, self.field().one())
    }

    pub fn var_named(&self, name: &str) -> Option<Poly> {
        self.var_index(name).map(|i| self.var(i))
    }

    pub fn monomial(&self, m: Monomial, c: FieldElem) -> Poly {
        assert_eq!(m.len(), self.nvars());
        let mut p = self.zero();
        if !c.is_zero() {
            p.terms.insert(m, c);
        }
        p
    }

    /// Same variables over a larger field.
    pub fn with_field(&self, field: &Field) -> Result<PolyRing> {
        PolyRing::new(field, self.vars().to_vec())
    }
}

impl fmt::Debug for PolyRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[{}]", self.field(), self.vars().join(","))
    }
}

#[derive(Clone)]
pub struct Poly {
    ring: PolyRing,
    terms: BTreeMap<Monomial, FieldElem>,
}

impl PartialEq for Poly {
    fn eq(&self, other: &Self) -> bool {
        self.terms == other.terms && self.ring == other.ring
    }
}

impl Eq for Poly {}

impl Poly {
    pub fn ring(&self) -> &PolyRing {
        &self.ring
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &FieldElem)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &[u32]) -> FieldElem {
        self.terms.get(m).cloned().unwrap_or_else(|| self.ring.field().zero())
    }

    /// The constant term, or `None` when the polynomial is not constant.
    pub fn as_constant(&self) -> Option<FieldElem> {
        match self.terms.len() {
            0 => Some(self.ring.field().zero()),
            1 => {
                let (m, c) = self.terms.iter().next().unwrap();
                m.iter().all(|&x| x == 0).then(|| c.clone())
            }
            _ => None,
        }
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.iter().sum()).max()
    }

    pub fn leading_term(&self, order: MonomialOrder) -> Option<(&Monomial, &FieldElem)> {
        self.terms.iter().max_by(|a, b| order.cmp(a.0, b.0))
    }

    /// Terms sorted from largest to smallest under `order`.
    pub fn sorted_terms(&self, order: MonomialOrder) -> Vec<(Monomial, FieldElem)> {
        let mut t: Vec<_> = self.terms.iter().map(|(m, c)| (m.clone(), c.clone())).collect();
        t.sort_by(|a, b| order.cmp(&b.0, &a.0));
        t
    }

    pub(crate) fn from_terms(ring: &PolyRing, terms: impl IntoIterator<Item = (Monomial, FieldElem)>) -> Poly {
        let mut p = ring.zero();
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    fn check_ring(&self, other: &Poly) {
        if self.ring != other.ring {
            panic!("polynomial ring mismatch: {:?} vs {:?}", self.ring, other.ring);
        }
    }

    fn add_term(&mut self, m: Monomial, c: FieldElem) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = o.get() + &c;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn add(&self, other: &Poly) -> Poly {
        self.check_ring(other);
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> Poly {
        Poly { ring: self.ring.clone(), terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect() }
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        self.check_ring(other);
        let mut out = self.ring.zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                let m: Monomial = m1.iter().zip(m2).map(|(a, b)| a + b).collect();
                out.add_term(m, c1 * c2);
            }
        }
        out
    }

    pub fn scale(&self, c: &FieldElem) -> Poly {
        if c.is_zero() {
            return self.ring.zero();
        }
        Poly { ring: self.ring.clone(), terms: self.terms.iter().map(|(m, x)| (m.clone(), x * c)).collect() }
    }

    pub fn mul_term(&self, m: &[u32], c: &FieldElem) -> Poly {
        if c.is_zero() {
            return self.ring.zero();
        }
        Poly {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(k, x)| (k.iter().zip(m).map(|(a, b)| a + b).collect(), x * c))
                .collect(),
        }
    }

    pub fn pow(&self, mut e: u32) -> Poly {
        let mut acc = self.ring.one();
        let mut b = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&b);
            }
            e >>= 1;
            if e > 0 {
                b = b.mul(&b);
            }
        }
        acc
    }

    /// Ring homomorphism sending variable `i` to `images[i]`; coefficients
    /// are embedded into the target field.
    pub fn substitute(&self, images: &[Poly]) -> Result<Poly> {
        if images.len() != self.ring.nvars() {
            return Err(Error::RingMismatch(format!(
                "{} images for {} variables",
                images.len(),
                self.ring.nvars()
            )));
        }
        let target = match images.first() {
            Some(p) => p.ring.clone(),
            None => return Ok(self.clone()),
        };
        if images.iter().any(|p| p.ring != target) {
            return Err(Error::RingMismatch("substitution images live in different rings".into()));
        }
        let mut cache: BTreeMap<(usize, u32), Poly> = BTreeMap::new();
        let mut out = target.zero();
        for (m, c) in &self.terms {
            let mut t = target.constant(target.field().embed(c)?);
            for (i, &k) in m.iter().enumerate() {
                if k == 0 {
                    continue;
                }
                let p = cache.entry((i, k)).or_insert_with(|| images[i].pow(k));
                t = t.mul(p);
            }
            out = out.add(&t);
        }
        Ok(out)
    }

    pub fn evaluate(&self, point: &[FieldElem]) -> Result<FieldElem> {
        if point.len() != self.ring.nvars() {
            return Err(Error::DimensionMismatch(format!(
                "point has {} coordinates, ring has {} variables",
                point.len(),
                self.ring.nvars()
            )));
        }
        let field = self.ring.field();
        let mut acc = field.zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (x, &k) in point.iter().zip(m) {
                if k > 0 {
                    t = &t * &x.pow(k as u64);
                }
            }
            acc = &acc + &t;
        }
        Ok(acc)
    }

    /// Applies `f` to each coefficient, landing in `target` (same variable
    /// count).
    pub fn map_coefficients(&self, target: &PolyRing, f: impl Fn(&FieldElem) -> Result<FieldElem>) -> Result<Poly> {
        if target.nvars() != self.ring.nvars() {
            return Err(Error::RingMismatch("variable count differs".into()));
        }
        let mut out = target.zero();
        for (m, c) in &self.terms {
            out.add_term(m.clone(), f(c)?);
        }
        Ok(out)
    }

    /// Moves the polynomial into a ring with the same variables over a
    /// field containing this one.
    pub fn embed(&self, target: &PolyRing) -> Result<Poly> {
        if target.vars() != self.ring.vars() {
            return Err(Error::RingMismatch("variables differ".into()));
        }
        self.map_coefficients(target, |c| target.field().embed(c))
    }

    pub fn monic(&self, order: MonomialOrder) -> Result<Poly> {
        match self.leading_term(order) {
            None => Ok(self.clone()),
            Some((_, c)) => Ok(self.scale(&c.inv()?)),
        }
    }

    /// Renders with terms in descending `order`.
    pub fn display_with(&self, order: MonomialOrder) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let vars = self.ring.vars();
        let mut out = String::new();
        for (idx, (m, c)) in self.sorted_terms(order).iter().enumerate() {
            let mono: Vec<String> = m
                .iter()
                .enumerate()
                .filter(|(_, &k)| k > 0)
                .map(|(i, &k)| if k == 1 { vars[i].clone() } else { format!("{}^{k}", vars[i]) })
                .collect();
            let mono = mono.join("*");
            let term = if mono.is_empty() {
                c.to_string()
            } else if c.is_one() {
                mono
            } else if (-c).is_one() {
                format!("-{mono}")
            } else {
                let s = c.to_string();
                if s[1..].contains(['+', '-']) {
                    format!("({s})*{mono}")
                } else {
                    format!("{s}*{mono}")
                }
            };
            if idx == 0 {
                out.push_str(&term);
            } else if let Some(rest) = term.strip_prefix('-') {
                out.push('-');
                out.push_str(rest);
            } else {
                out.push('+');
                out.push_str(&term);
            }
        }
        out
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_with(MonomialOrder::Grevlex))
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl serde::Serialize for Poly {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

macro_rules! forward_poly_binop {
    ($tr:ident, $method:ident) => {
        impl std::ops::$tr<&Poly> for &Poly {
            type Output = Poly;
            fn $method(self, rhs: &Poly) -> Poly {
                Poly::$method(self, rhs)
            }
        }
        impl std::ops::$tr<Poly> for Poly {
            type Output = Poly;
            fn $method(self, rhs: Poly) -> Poly {
                Poly::$method(&self, &rhs)
            }
        }
    };
}

forward_poly_binop!(Add, add);
forward_poly_binop!(Sub, sub);
forward_poly_binop!(Mul, mul);

impl std::ops::Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly::neg(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring(field: &Field, vars: &[&str]) -> PolyRing {
        PolyRing::new(field, vars.iter().map(|s| s.to_string()).collect()).unwrap()
    }

    #[test]
    fn difference_of_squares() {
        let r = ring(&Field::rationals(), &["X", "Y"]);
        let (x, y) = (r.var(0), r.var(1));
        let p = &(&x + &y) * &(&x - &y);
        assert_eq!(p, &x.pow(2) - &y.pow(2));
        assert_eq!(p.to_string(), "X^2-Y^2");
    }

    #[test]
    fn freshman_dream_mod_two() {
        let r = ring(&Field::prime(2).unwrap(), &["X", "Y"]);
        let (x, y) = (r.var(0), r.var(1));
        assert_eq!((&x + &y).pow(2), &x.pow(2) + &y.pow(2));
    }

    #[test]
    fn substitution_changes_ring() {
        let f2 = Field::prime(2).unwrap();
        let src = ring(&f2, &["X"]);
        let dst = ring(&f2, &["X_0", "X_1"]);
        let p = src.var(0).pow(2);
        let q = p.substitute(&[dst.var(0)]).unwrap();
        assert_eq!(q, dst.var(0).pow(2));
        assert_eq!(q.to_string(), "X_0^2");
        assert!(p.substitute(&[]).is_err());
    }

    #[test]
    fn orders_compare_as_documented() {
        use Ordering::*;
        // x = [1,0,0] vs y^2 = [0,2,0]
        assert_eq!(MonomialOrder::Lex.cmp(&[1, 0, 0], &[0, 2, 0]), Greater);
        assert_eq!(MonomialOrder::Grevlex.cmp(&[1, 0, 0], &[0, 2, 0]), Less);
        assert_eq!(MonomialOrder::InvLex.cmp(&[1, 0, 0], &[0, 1, 0]), Less);
        // grevlex tie-break: x*z < y^2
        assert_eq!(MonomialOrder::Grevlex.cmp(&[1, 0, 1], &[0, 2, 0]), Less);
    }

    #[test]
    fn rejects_duplicate_variables() {
        let qq = Field::rationals();
        assert!(PolyRing::new(&qq, vec!["x".into(), "x".into()]).is_err());
        let k = qq.extension("r", vec![qq.from_i64(-2), qq.zero(), qq.one()]).unwrap();
        assert!(PolyRing::new(&k, vec!["r".into()]).is_err());
    }

    #[test]
    fn evaluation_matches_substitution() {
        let f5 = Field::prime(5).unwrap();
        let r = ring(&f5, &["x", "y"]);
        let p = &(&r.var(0).pow(3) * &r.var(1)) + &r.constant(f5.from_i64(2));
        let pt = [f5.from_i64(2), f5.from_i64(3)];
        assert_eq!(p.evaluate(&pt).unwrap(), f5.from_i64(26));
    }
}
