//! Exact arithmetic in towers of fields.
//!
//! A tower starts at either the rationals or a prime field and is built by
//! adjoining roots of monic polynomials, one generator per level. Elements
//! are always stored in reduced form: rationals in lowest terms, residues in
//! `[0, p)`, and extension elements as coefficient vectors of degree below
//! the minimal polynomial with trailing zeros stripped. Two elements are
//! equal exactly when their stored representations coincide.
//!
//! Irreducibility of a declared minimal polynomial is taken on trust. A
//! reducible one shows up later, as [`Error::InversionFailure`] when some
//! nonzero element turns out to be a zero divisor.

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

#[derive(Clone)]
pub struct Field(Arc<Node>);

struct Node {
    kind: Kind,
    characteristic: u64,
    absolute_degree: usize,
}

#[derive(Clone, PartialEq)]
enum Kind {
    Rationals,
    Prime(u64),
    Extension {
        base: Field,
        name: String,
        /// Monic, constant term first.
        minpoly: Vec<FieldElem>,
    },
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0.kind == other.0.kind
    }
}

impl Eq for Field {}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

impl Field {
    pub fn rationals() -> Self {
        Field(Arc::new(Node { kind: Kind::Rationals, characteristic: 0, absolute_degree: 1 }))
    }

    pub fn prime(p: u64) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::InvalidField(format!("modulus {p} is not prime")));
        }
        if p > u32::MAX as u64 {
            return Err(Error::InvalidField(format!("modulus {p} exceeds 32 bits")));
        }
        Ok(Field(Arc::new(Node { kind: Kind::Prime(p), characteristic: p, absolute_degree: 1 })))
    }

    /// Adjoins a root `name` of `minpoly` (coefficients in `self`, constant
    /// term first) to this field.
    pub fn extension(&self, name: &str, minpoly: Vec<FieldElem>) -> Result<Self> {
        let minpoly = trim(minpoly);
        if minpoly.len() < 3 {
            return Err(Error::InvalidField(format!(
                "minimal polynomial for {name} must have degree at least 2"
            )));
        }
        if minpoly.iter().any(|c| &c.field != self) {
            return Err(Error::InvalidField(format!(
                "minimal polynomial for {name} has coefficients outside {self}"
            )));
        }
        if !minpoly.last().unwrap().is_one() {
            return Err(Error::InvalidField(format!("minimal polynomial for {name} is not monic")));
        }
        if !is_identifier(name) {
            return Err(Error::InvalidField(format!("generator name {name:?} is not an identifier")));
        }
        if self.generator_names().iter().any(|n| n == name) {
            return Err(Error::InvalidField(format!("generator name {name} already used in the tower")));
        }
        let degree = minpoly.len() - 1;
        Ok(Field(Arc::new(Node {
            characteristic: self.characteristic(),
            absolute_degree: self.absolute_degree() * degree,
            kind: Kind::Extension { base: self.clone(), name: name.to_string(), minpoly },
        })))
    }

    pub fn characteristic(&self) -> u64 {
        self.0.characteristic
    }

    /// Degree over the prime field.
    pub fn absolute_degree(&self) -> usize {
        self.0.absolute_degree
    }

    /// Degree over the immediate base (1 for prime fields and the rationals).
    pub fn relative_degree(&self) -> usize {
        match &self.0.kind {
            Kind::Extension { minpoly, .. } => minpoly.len() - 1,
            _ => 1,
        }
    }

    pub fn base(&self) -> Option<&Field> {
        match &self.0.kind {
            Kind::Extension { base, .. } => Some(base),
            _ => None,
        }
    }

    pub fn generator_name(&self) -> Option<&str> {
        match &self.0.kind {
            Kind::Extension { name, .. } => Some(name),
            _ => None,
        }
    }

    pub fn minpoly(&self) -> Option<&[FieldElem]> {
        match &self.0.kind {
            Kind::Extension { minpoly, .. } => Some(minpoly),
            _ => None,
        }
    }

    pub fn is_prime_field(&self) -> bool {
        !matches!(self.0.kind, Kind::Extension { .. })
    }

    /// The tower from this field down to its prime field, top first.
    pub fn tower(&self) -> Vec<Field> {
        let mut out = vec![self.clone()];
        while let Some(b) = out.last().unwrap().base() {
            out.push(b.clone());
        }
        out
    }

    pub fn prime_field(&self) -> Field {
        self.tower().pop().unwrap()
    }

    /// Generator names of the tower, bottom level first.
    pub fn generator_names(&self) -> Vec<String> {
        let mut names: Vec<String> =
            self.tower().iter().filter_map(|f| f.generator_name().map(str::to_string)).collect();
        names.reverse();
        names
    }

    pub fn contains_subfield(&self, sub: &Field) -> bool {
        self.tower().iter().any(|f| f == sub)
    }

    pub fn degree_over(&self, sub: &Field) -> Result<usize> {
        if !self.contains_subfield(sub) {
            return Err(Error::IncompatibleTowers(format!("{sub} is not a subfield of {self}")));
        }
        Ok(self.absolute_degree() / sub.absolute_degree())
    }

    pub fn zero(&self) -> FieldElem {
        let value = match &self.0.kind {
            Kind::Rationals => Value::Rational(BigRational::zero()),
            Kind::Prime(_) => Value::Residue(0),
            Kind::Extension { .. } => Value::Poly(Vec::new()),
        };
        FieldElem { field: self.clone(), value }
    }

    pub fn one(&self) -> FieldElem {
        self.from_i64(1)
    }

    pub fn from_i64(&self, n: i64) -> FieldElem {
        self.from_bigint(&BigInt::from(n))
    }

    pub fn from_bigint(&self, n: &BigInt) -> FieldElem {
        let value = match &self.0.kind {
            Kind::Rationals => Value::Rational(BigRational::from_integer(n.clone())),
            Kind::Prime(p) => {
                let r = n.mod_floor(&BigInt::from(*p));
                Value::Residue(r.to_u64().unwrap())
            }
            Kind::Extension { base, .. } => Value::Poly(trim(vec![base.from_bigint(n)])),
        };
        FieldElem { field: self.clone(), value }
    }

    pub fn from_rational(&self, q: &BigRational) -> Result<FieldElem> {
        let num = self.from_bigint(q.numer());
        let den = self.from_bigint(q.denom());
        num.div(&den)
    }

    /// The adjoined root of the top level.
    pub fn generator(&self) -> Option<FieldElem> {
        match &self.0.kind {
            Kind::Extension { base, .. } => Some(FieldElem {
                field: self.clone(),
                value: Value::Poly(vec![base.zero(), base.one()]),
            }),
            _ => None,
        }
    }

    /// The generator of the tower level named `name`, embedded in this field.
    pub fn generator_named(&self, name: &str) -> Option<FieldElem> {
        self.tower()
            .into_iter()
            .find(|f| f.generator_name() == Some(name))
            .and_then(|f| f.generator())
            .map(|g| self.embed(&g).expect("tower level embeds"))
    }

    /// Builds an element of an extension from base coefficients (constant
    /// first), reducing modulo the minimal polynomial.
    pub fn from_base_coeffs(&self, coeffs: Vec<FieldElem>) -> Result<FieldElem> {
        let (base, minpoly) = match &self.0.kind {
            Kind::Extension { base, minpoly, .. } => (base, minpoly),
            _ => return Err(Error::InvalidField(format!("{self} is not an extension"))),
        };
        if coeffs.iter().any(|c| &c.field != base) {
            return Err(Error::FieldMismatch(format!("{base}"), "coefficient".into()));
        }
        Ok(FieldElem { field: self.clone(), value: Value::Poly(poly_rem_monic(coeffs, minpoly)) })
    }

    /// Maps an element of a subfield in this tower into this field.
    pub fn embed(&self, x: &FieldElem) -> Result<FieldElem> {
        if &x.field == self {
            return Ok(x.clone());
        }
        match &self.0.kind {
            Kind::Extension { base, .. } => {
                let inner = base.embed(x)?;
                Ok(FieldElem { field: self.clone(), value: Value::Poly(trim(vec![inner])) })
            }
            _ => Err(Error::IncompatibleTowers(format!("{} does not embed into {self}", x.field))),
        }
    }

    /// Inverse of [`FieldElem::coords_over`].
    pub fn from_coords_over(&self, sub: &Field, coords: &[FieldElem]) -> Result<FieldElem> {
        if self == sub {
            if coords.len() != 1 {
                return Err(Error::DimensionMismatch(format!("expected 1 coordinate, got {}", coords.len())));
            }
            return Ok(coords[0].clone());
        }
        let base = self
            .base()
            .ok_or_else(|| Error::IncompatibleTowers(format!("{sub} is not a subfield of {self}")))?;
        let inner = base.degree_over(sub)?;
        let d = self.relative_degree();
        if coords.len() != d * inner {
            return Err(Error::DimensionMismatch(format!(
                "expected {} coordinates, got {}",
                d * inner,
                coords.len()
            )));
        }
        let coeffs = coords
            .chunks(inner)
            .map(|c| base.from_coords_over(sub, c))
            .collect::<Result<Vec<_>>>()?;
        self.from_base_coeffs(coeffs)
    }

    /// Power basis of this field over `sub`, matching [`FieldElem::coords_over`].
    pub fn basis_over(&self, sub: &Field) -> Result<Vec<FieldElem>> {
        let n = self.degree_over(sub)?;
        (0..n)
            .map(|k| {
                let coords: Vec<FieldElem> =
                    (0..n).map(|t| if t == k { sub.one() } else { sub.zero() }).collect();
                self.from_coords_over(sub, &coords)
            })
            .collect()
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0.kind {
            Kind::Rationals => write!(f, "QQ"),
            Kind::Prime(p) => write!(f, "GF({p})"),
            Kind::Extension { base, name, minpoly } => {
                write!(f, "{base}[{name}]/({})", UniPoly { coeffs: minpoly, var: name })
            }
        }
    }
}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

pub(crate) fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

#[derive(Clone)]
pub struct FieldElem {
    field: Field,
    value: Value,
}

#[derive(Clone, PartialEq)]
enum Value {
    Rational(BigRational),
    Residue(u64),
    /// Coefficients in the base field, constant first, no trailing zeros.
    Poly(Vec<FieldElem>),
}

impl PartialEq for FieldElem {
    fn eq(&self, other: &Self) -> bool {
        self.value == other.value && self.field == other.field
    }
}

impl Eq for FieldElem {}

fn trim(mut v: Vec<FieldElem>) -> Vec<FieldElem> {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
    v
}

fn poly_add(a: &[FieldElem], b: &[FieldElem]) -> Vec<FieldElem> {
    let (long, short) = if a.len() >= b.len() { (a, b) } else { (b, a) };
    let mut out = long.to_vec();
    for (o, s) in out.iter_mut().zip(short) {
        *o = &*o + s;
    }
    trim(out)
}

fn poly_mul(a: &[FieldElem], b: &[FieldElem]) -> Vec<FieldElem> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let zero = a[0].field.zero();
    let mut out = vec![zero; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] = &out[i + j] + &(x * y);
        }
    }
    trim(out)
}

fn poly_rem_monic(a: Vec<FieldElem>, m: &[FieldElem]) -> Vec<FieldElem> {
    let mut a = trim(a);
    let d = m.len() - 1;
    while a.len() > d {
        let lead = a.pop().unwrap();
        let shift = a.len() - d;
        for k in 0..d {
            a[shift + k] = &a[shift + k] - &(&lead * &m[k]);
        }
        a = trim(a);
    }
    a
}

/// Division with remainder by a polynomial whose leading coefficient must be
/// invertible.
fn poly_divrem(a: &[FieldElem], b: &[FieldElem]) -> Result<(Vec<FieldElem>, Vec<FieldElem>)> {
    let lead_inv = b.last().expect("nonzero divisor").inv()?;
    let mut r = a.to_vec();
    if r.len() < b.len() {
        return Ok((Vec::new(), r));
    }
    let zero = b[0].field.zero();
    let mut q = vec![zero; r.len() - b.len() + 1];
    while r.len() >= b.len() && !r.is_empty() {
        let shift = r.len() - b.len();
        let c = r.last().unwrap() * &lead_inv;
        for (k, bk) in b.iter().enumerate() {
            r[shift + k] = &r[shift + k] - &(&c * bk);
        }
        q[shift] = c;
        r.pop();
        r = trim(r);
    }
    Ok((trim(q), r))
}

fn poly_sub(a: &[FieldElem], b: &[FieldElem]) -> Vec<FieldElem> {
    let neg: Vec<FieldElem> = b.iter().map(|c| -c).collect();
    poly_add(a, &neg)
}

fn mod_pow(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u64 % p;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    acc
}

impl FieldElem {
    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn is_zero(&self) -> bool {
        match &self.value {
            Value::Rational(r) => r.is_zero(),
            Value::Residue(r) => *r == 0,
            Value::Poly(c) => c.is_empty(),
        }
    }

    pub fn is_one(&self) -> bool {
        match &self.value {
            Value::Rational(r) => r.is_one(),
            Value::Residue(r) => *r == 1,
            Value::Poly(c) => c.len() == 1 && c[0].is_one(),
        }
    }

    /// The rational value when the element lives in the rationals.
    pub fn as_rational(&self) -> Option<&BigRational> {
        match &self.value {
            Value::Rational(r) => Some(r),
            _ => None,
        }
    }

    pub fn as_residue(&self) -> Option<u64> {
        match &self.value {
            Value::Residue(r) => Some(*r),
            _ => None,
        }
    }

    /// Coefficients over the immediate base, constant first, padded to the
    /// relative degree. For prime fields this is `[self]`.
    pub fn base_coeffs(&self) -> Vec<FieldElem> {
        match (&self.value, self.field.base()) {
            (Value::Poly(c), Some(base)) => {
                let mut out = c.clone();
                out.resize(self.field.relative_degree(), base.zero());
                out
            }
            _ => vec![self.clone()],
        }
    }

    fn check_same(&self, other: &Self) {
        if self.field != other.field {
            panic!("field mismatch: {} vs {}", self.field, other.field);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        self.check_same(other);
        let value = match (&self.value, &other.value) {
            (Value::Rational(a), Value::Rational(b)) => Value::Rational(a + b),
            (Value::Residue(a), Value::Residue(b)) => Value::Residue((a + b) % self.field.characteristic()),
            (Value::Poly(a), Value::Poly(b)) => Value::Poly(poly_add(a, b)),
            _ => unreachable!("representation does not match field"),
        };
        FieldElem { field: self.field.clone(), value }
    }

    pub fn neg(&self) -> Self {
        let value = match &self.value {
            Value::Rational(a) => Value::Rational(-a),
            Value::Residue(a) => {
                let p = self.field.characteristic();
                Value::Residue((p - a) % p)
            }
            Value::Poly(a) => Value::Poly(a.iter().map(|c| c.neg()).collect()),
        };
        FieldElem { field: self.field.clone(), value }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.check_same(other);
        let value = match (&self.value, &other.value) {
            (Value::Rational(a), Value::Rational(b)) => Value::Rational(a * b),
            (Value::Residue(a), Value::Residue(b)) => Value::Residue(a * b % self.field.characteristic()),
            (Value::Poly(a), Value::Poly(b)) => {
                let m = self.field.minpoly().unwrap();
                Value::Poly(poly_rem_monic(poly_mul(a, b), m))
            }
            _ => unreachable!("representation does not match field"),
        };
        FieldElem { field: self.field.clone(), value }
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::InversionFailure("0".into()));
        }
        let value = match &self.value {
            Value::Rational(a) => Value::Rational(a.recip()),
            Value::Residue(a) => {
                let p = self.field.characteristic();
                Value::Residue(mod_pow(*a, p - 2, p))
            }
            Value::Poly(a) => {
                let m = self.field.minpoly().unwrap();
                let base = self.field.base().unwrap();
                let (mut r0, mut r1) = (m.to_vec(), a.clone());
                let (mut s0, mut s1) = (Vec::new(), vec![base.one()]);
                while !r1.is_empty() {
                    let (q, r) = poly_divrem(&r0, &r1).map_err(|_| Error::InversionFailure(self.to_string()))?;
                    let s2 = poly_sub(&s0, &poly_mul(&q, &s1));
                    r0 = std::mem::replace(&mut r1, r);
                    s0 = std::mem::replace(&mut s1, s2);
                }
                if r0.len() != 1 {
                    return Err(Error::InversionFailure(self.to_string()));
                }
                let c = r0[0].inv().map_err(|_| Error::InversionFailure(self.to_string()))?;
                let s: Vec<FieldElem> = s0.iter().map(|x| x * &c).collect();
                Value::Poly(poly_rem_monic(s, m))
            }
        };
        Ok(FieldElem { field: self.field.clone(), value })
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        self.check_same(other);
        Ok(self.mul(&other.inv()?))
    }

    pub fn pow(&self, mut e: u64) -> Self {
        let mut acc = self.field.one();
        let mut b = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&b);
            }
            b = b.mul(&b);
            e >>= 1;
        }
        acc
    }

    /// `x ↦ x^p`; the identity map in characteristic zero.
    pub fn frobenius(&self) -> Self {
        match self.field.characteristic() {
            0 => self.clone(),
            p => self.pow(p),
        }
    }

    /// Coordinates over a subfield `sub` of the tower with respect to the
    /// power basis, lowest generator varying slowest within each level.
    pub fn coords_over(&self, sub: &Field) -> Result<Vec<FieldElem>> {
        if &self.field == sub {
            return Ok(vec![self.clone()]);
        }
        match self.field.base() {
            Some(_) => {
                let mut out = Vec::new();
                for c in self.base_coeffs() {
                    out.extend(c.coords_over(sub)?);
                }
                Ok(out)
            }
            None => Err(Error::IncompatibleTowers(format!("{sub} is not a subfield of {}", self.field))),
        }
    }

    /// `true` when the printed form needs parentheses as a factor.
    fn is_compound(&self) -> bool {
        let s = self.to_string();
        s[1..].contains(['+', '-'])
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $inner:ident) => {
        impl std::ops::$tr<&FieldElem> for &FieldElem {
            type Output = FieldElem;
            fn $method(self, rhs: &FieldElem) -> FieldElem {
                FieldElem::$inner(self, rhs)
            }
        }
        impl std::ops::$tr<FieldElem> for FieldElem {
            type Output = FieldElem;
            fn $method(self, rhs: FieldElem) -> FieldElem {
                FieldElem::$inner(&self, &rhs)
            }
        }
    };
}

forward_binop!(Add, add, add);
forward_binop!(Sub, sub, sub);
forward_binop!(Mul, mul, mul);

impl std::ops::Neg for &FieldElem {
    type Output = FieldElem;
    fn neg(self) -> FieldElem {
        FieldElem::neg(self)
    }
}

impl std::ops::Neg for FieldElem {
    type Output = FieldElem;
    fn neg(self) -> FieldElem {
        FieldElem::neg(&self)
    }
}

struct UniPoly<'a> {
    coeffs: &'a [FieldElem],
    var: &'a str,
}

impl fmt::Display for UniPoly<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let term = if k == 0 {
                c.to_string()
            } else {
                let power = if k == 1 { self.var.to_string() } else { format!("{}^{k}", self.var) };
                if c.is_one() {
                    power
                } else if (-c).is_one() {
                    format!("-{power}")
                } else if c.is_compound() {
                    format!("({c})*{power}")
                } else {
                    format!("{c}*{power}")
                }
            };
            if first {
                f.write_str(&term)?;
            } else if let Some(rest) = term.strip_prefix('-') {
                write!(f, "-{rest}")?;
            } else {
                write!(f, "+{term}")?;
            }
            first = false;
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

impl fmt::Display for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.value {
            Value::Rational(r) => {
                if r.is_integer() {
                    write!(f, "{}", r.numer())
                } else {
                    let sign = if r.is_negative() { "-" } else { "" };
                    write!(f, "{sign}{}/{}", r.numer().abs(), r.denom())
                }
            }
            Value::Residue(r) => write!(f, "{r}"),
            Value::Poly(c) => {
                let name = self.field.generator_name().unwrap();
                write!(f, "{}", UniPoly { coeffs: c, var: name })
            }
        }
    }
}

impl fmt::Debug for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl serde::Serialize for FieldElem {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}
