//! Multiplicative and iterativity rules read off from structure constants.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::One;
use serde::Serialize;

use crate::field::FieldElem;
use crate::hopf::HopfData;

/// `∂_component(xy) = Σ coefficient·∂_left(x)·∂_right(y)`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ProductRule {
    pub component: usize,
    pub terms: Vec<ProductTerm>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ProductTerm {
    pub left: usize,
    pub right: usize,
    pub coefficient: FieldElem,
}

/// `∂_i∘∂_j = Σ coefficient·∂_index`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct IterativityRule {
    pub i: usize,
    pub j: usize,
    pub terms: Vec<IterativityTerm>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct IterativityTerm {
    pub index: usize,
    pub coefficient: FieldElem,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RuleTable {
    pub good_basis: bool,
    pub product: Vec<ProductRule>,
    pub iterativity: Vec<IterativityRule>,
}

pub fn derive_product_rules(h: &HopfData) -> Vec<ProductRule> {
    let e = h.dim();
    (0..e)
        .map(|l| ProductRule {
            component: l,
            terms: (0..e)
                .flat_map(|i| (0..e).map(move |j| (i, j)))
                .filter_map(|(i, j)| {
                    let c = h.mult().get(i, j, l);
                    (!c.is_zero()).then(|| ProductTerm { left: i, right: j, coefficient: c.clone() })
                })
                .collect(),
        })
        .collect()
}

pub fn derive_iterativity_rules(h: &HopfData) -> Vec<IterativityRule> {
    let e = h.dim();
    (0..e)
        .flat_map(|i| (0..e).map(move |j| (i, j)))
        .map(|(i, j)| IterativityRule {
            i,
            j,
            terms: (0..e)
                .filter_map(|l| {
                    let c = h.comult().get(i, j, l);
                    (!c.is_zero()).then(|| IterativityTerm { index: l, coefficient: c.clone() })
                })
                .collect(),
        })
        .collect()
}

impl RuleTable {
    pub fn derive(h: &HopfData) -> Self {
        RuleTable {
            good_basis: h.is_good_basis(),
            product: derive_product_rules(h),
            iterativity: derive_iterativity_rules(h),
        }
    }

    fn operator(&self, i: usize, arg: &str) -> String {
        if self.good_basis && i == 0 {
            arg.to_string()
        } else {
            format!("∂{i}({arg})")
        }
    }

    pub fn render_product(&self, rule: &ProductRule) -> String {
        let monomials: Vec<String> = rule
            .terms
            .iter()
            .map(|t| format!("{}{}", self.operator(t.left, "x"), self.operator(t.right, "y")))
            .collect();
        let coeffs: Vec<&FieldElem> = rule.terms.iter().map(|t| &t.coefficient).collect();
        format!("∂{}(xy) = {}", rule.component, combination(&coeffs, &monomials))
    }

    pub fn render_iterativity(&self, rule: &IterativityRule) -> String {
        let monomials: Vec<String> = rule.terms.iter().map(|t| format!("∂{}", t.index)).collect();
        let coeffs: Vec<&FieldElem> = rule.terms.iter().map(|t| &t.coefficient).collect();
        format!("∂{}∘∂{} = {}", rule.i, rule.j, combination(&coeffs, &monomials))
    }

    /// One line per rule; the trivial rule for `∂_0` in a good basis is
    /// omitted from the product section.
    pub fn render_text(&self) -> String {
        let mut out = String::from("multiplicative rules:\n");
        for r in &self.product {
            if self.good_basis && r.component == 0 {
                continue;
            }
            out.push_str("  ");
            out.push_str(&self.render_product(r));
            out.push('\n');
        }
        out.push_str("iterativity rules:\n");
        for r in &self.iterativity {
            if self.good_basis && (r.i == 0 || r.j == 0) {
                continue;
            }
            out.push_str("  ");
            out.push_str(&self.render_iterativity(r));
            out.push('\n');
        }
        out
    }
}

/// Renders `Σ c_k·m_k`; rational coefficients share a common denominator.
fn combination(coeffs: &[&FieldElem], monomials: &[String]) -> String {
    if coeffs.is_empty() {
        return "0".into();
    }
    let rationals: Option<Vec<_>> = coeffs.iter().map(|c| c.as_rational().cloned()).collect();
    if let Some(qs) = rationals {
        let den = qs.iter().fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
        let nums: Vec<BigInt> = qs.iter().map(|q| q.numer() * (&den / q.denom())).collect();
        let body = join_terms(nums.iter().map(|n| integer_coefficient(n)).zip(monomials));
        return if den.is_one() { body } else { format!("({body})/{den}") };
    }
    join_terms(coeffs.iter().map(|c| general_coefficient(c)).zip(monomials))
}

/// `(negative, printed coefficient without sign)`; an empty coefficient means 1.
type Signed = (bool, String);

fn integer_coefficient(n: &BigInt) -> Signed {
    let neg = n.sign() == num_bigint::Sign::Minus;
    let abs = n.magnitude().to_string();
    (neg, if abs == "1" { String::new() } else { abs })
}

fn general_coefficient(c: &FieldElem) -> Signed {
    if c.is_one() {
        return (false, String::new());
    }
    if let Some(r) = c.as_residue() {
        return (false, r.to_string());
    }
    if (-c).is_one() {
        return (true, String::new());
    }
    let s = c.to_string();
    if s[1..].contains(['+', '-']) {
        (false, format!("({s})"))
    } else if let Some(rest) = s.strip_prefix('-') {
        (true, rest.to_string())
    } else {
        (false, s)
    }
}

fn join_terms<'a>(terms: impl Iterator<Item = (Signed, &'a String)>) -> String {
    let mut out = String::new();
    for (k, ((neg, c), m)) in terms.enumerate() {
        match (k, neg) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push('-'),
            (_, false) => out.push('+'),
        }
        out.push_str(&c);
        out.push_str(m);
    }
    out
}
