//! Constructors for the standard finite group schemes.

use super::{HopfData, Tensor3};
use crate::error::{Error, Result};
use crate::field::{Field, FieldElem};

/// Multiplication table of a finite group with the identity at index 0;
/// `table[g][h]` is the index of `g·h`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CayleyTable {
    table: Vec<Vec<usize>>,
}

impl CayleyTable {
    pub fn new(table: Vec<Vec<usize>>) -> Result<Self> {
        let n = table.len();
        let bad = |msg: &str| Err(Error::InvalidGroup(msg.into()));
        if n == 0 {
            return bad("empty table");
        }
        if table.iter().any(|r| r.len() != n || r.iter().any(|&x| x >= n)) {
            return bad("table must be square with entries below its order");
        }
        if (0..n).any(|g| table[0][g] != g || table[g][0] != g) {
            return bad("index 0 must be the identity");
        }
        for g in 0..n {
            let mut seen = vec![false; n];
            for h in 0..n {
                if std::mem::replace(&mut seen[table[g][h]], true) {
                    return bad("rows must be permutations");
                }
            }
            for h in 0..n {
                for k in 0..n {
                    if table[table[g][h]][k] != table[g][table[h][k]] {
                        return bad("multiplication is not associative");
                    }
                }
            }
        }
        Ok(CayleyTable { table })
    }

    pub fn order(&self) -> usize {
        self.table.len()
    }

    pub fn mul(&self, g: usize, h: usize) -> usize {
        self.table[g][h]
    }

    pub fn inverse(&self, g: usize) -> usize {
        (0..self.order()).find(|&h| self.table[g][h] == 0).expect("group element without inverse")
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.table
    }

    pub fn cyclic(n: usize) -> Self {
        CayleyTable { table: (0..n).map(|g| (0..n).map(|h| (g + h) % n).collect()).collect() }
    }

    pub fn klein() -> Self {
        Self::direct_product(&Self::cyclic(2), &Self::cyclic(2))
    }

    /// Permutations of `{0..n}` in lexicographic order of their one-line
    /// notation, composed as `(σ·τ)(x) = σ(τ(x))`.
    pub fn symmetric(n: usize) -> Self {
        let mut perms: Vec<Vec<usize>> = vec![(0..n).collect()];
        loop {
            let mut p = perms.last().unwrap().clone();
            let Some(i) = (1..n).rev().find(|&i| p[i - 1] < p[i]) else { break };
            let j = (i..n).rev().find(|&j| p[j] > p[i - 1]).unwrap();
            p.swap(i - 1, j);
            p[i..].reverse();
            perms.push(p);
        }
        let index = |q: &Vec<usize>| perms.iter().position(|p| p == q).unwrap();
        let table = perms
            .iter()
            .map(|s| perms.iter().map(|t| index(&t.iter().map(|&x| s[x]).collect())).collect())
            .collect();
        CayleyTable { table }
    }

    /// Pairs `(g, h)` at index `g·|b| + h`.
    pub fn direct_product(a: &CayleyTable, b: &CayleyTable) -> Self {
        let (na, nb) = (a.order(), b.order());
        let table = (0..na * nb)
            .map(|x| (0..na * nb).map(|y| a.mul(x / nb, y / nb) * nb + b.mul(x % nb, y % nb)).collect())
            .collect();
        CayleyTable { table }
    }
}

pub fn trivial(field: &Field) -> HopfData {
    let mut t = Tensor3::zeros(field, 1);
    t.set(0, 0, 0, field.one());
    HopfData::from_parts(field, vec!["1".into()], t.clone(), t, vec![field.one()], vec![field.one()])
}

/// `Func(G, k)` with the indicator basis `e_g`.
pub fn constant_group(field: &Field, group: &CayleyTable) -> Result<HopfData> {
    let n = group.order();
    let mut mult = Tensor3::zeros(field, n);
    let mut comult = Tensor3::zeros(field, n);
    for g in 0..n {
        mult.set(g, g, g, field.one());
        for h in 0..n {
            comult.set(g, h, group.mul(g, h), field.one());
        }
    }
    let mut counit = vec![field.zero(); n];
    counit[0] = field.one();
    let names = (0..n).map(|g| format!("e{g}")).collect();
    Ok(HopfData::from_parts(field, names, mult, comult, counit, vec![field.one(); n]))
}

fn check_char(field: &Field, p: u64, what: &str) -> Result<()> {
    if field.characteristic() != p || p == 0 {
        return Err(Error::CharacteristicObstruction(format!(
            "{what} needs characteristic {p}, field {field} has characteristic {}",
            field.characteristic()
        )));
    }
    Ok(())
}

/// `k[v]/(v^n)` with basis `1, v, …, v^{n-1}` and `μ(v)` given as terms
/// `(i, j, c)` meaning `c·v^i⊗v^j`.
fn truncated_monomial(field: &Field, n: usize, delta_v: &[(usize, usize, FieldElem)]) -> HopfData {
    let mut mult = Tensor3::zeros(field, n);
    for i in 0..n {
        for j in 0..n - i {
            mult.set(i, j, i + j, field.one());
        }
    }
    // μ(v^k) as an n×n coefficient matrix, built by repeated multiplication in H⊗H
    let mut comult = Tensor3::zeros(field, n);
    let mut power = vec![vec![field.zero(); n]; n];
    power[0][0] = field.one();
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                comult.set(i, j, k, power[i][j].clone());
            }
        }
        let mut next = vec![vec![field.zero(); n]; n];
        for i in 0..n {
            for j in 0..n {
                if power[i][j].is_zero() {
                    continue;
                }
                for (a, b, c) in delta_v {
                    if i + a < n && j + b < n {
                        next[i + a][j + b] = &next[i + a][j + b] + &(&power[i][j] * c);
                    }
                }
            }
        }
        power = next;
    }
    let mut counit = vec![field.zero(); n];
    counit[0] = field.one();
    let mut unit = vec![field.zero(); n];
    unit[0] = field.one();
    let names = (0..n).map(|k| if k == 0 { "1".to_string() } else { format!("v^{k}") }).collect();
    HopfData::from_parts(field, names, mult, comult, counit, unit)
}

/// `k[v]/(v^{p^m})` with `μ(v) = v⊗1 + 1⊗v`.
pub fn truncated_additive(field: &Field, p: u64, m: u32) -> Result<HopfData> {
    check_char(field, p, "truncated additive group")?;
    if m == 0 {
        return Err(Error::ShapeMismatch("height must be positive".into()));
    }
    let n = p.checked_pow(m).filter(|&n| n <= 4096).ok_or_else(|| Error::ShapeMismatch("order too large".into()))?;
    Ok(truncated_monomial(field, n as usize, &[(1, 0, field.one()), (0, 1, field.one())]))
}

/// `k[v]/(v^p)` with `μ(v) = v⊗1 + 1⊗v + v⊗v`.
pub fn multiplicative_kernel(field: &Field, p: u64) -> Result<HopfData> {
    check_char(field, p, "Frobenius kernel of the multiplicative group")?;
    let one = field.one();
    Ok(truncated_monomial(field, p as usize, &[(1, 0, one.clone()), (0, 1, one.clone()), (1, 1, one)]))
}

/// `k[ε]/(εⁿ − 1)` with group-like basis `ε^k`, so `π(ε^k) = 1`; this basis
/// is not good.
pub fn roots_of_unity(field: &Field, n: usize) -> Result<HopfData> {
    if n == 0 {
        return Err(Error::ShapeMismatch("order must be positive".into()));
    }
    let mut mult = Tensor3::zeros(field, n);
    let mut comult = Tensor3::zeros(field, n);
    for i in 0..n {
        comult.set(i, i, i, field.one());
        for j in 0..n {
            mult.set(i, j, (i + j) % n, field.one());
        }
    }
    let mut unit = vec![field.zero(); n];
    unit[0] = field.one();
    let names = (0..n).map(|k| if k == 0 { "1".to_string() } else { format!("eps^{k}") }).collect();
    let mut h = HopfData::from_parts(field, names, mult, comult, vec![field.one(); n], unit);
    let p = field.characteristic();
    if p != 0 && n as u64 % p == 0 {
        h.push_note(format!("characteristic {p} divides {n}: the group scheme is not etale"));
    }
    Ok(h)
}
