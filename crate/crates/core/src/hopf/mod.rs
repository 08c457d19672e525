//! Finite-dimensional Hopf algebras given by structure constants.
//!
//! With respect to a basis `b_0, …, b_{e-1}` the data are
//!
//! * `mult[i][j][l]`: `b_i·b_j = Σ_l mult[i][j][l]·b_l`,
//! * `comult[i][j][l]`: `μ(b_l) = Σ_{i,j} comult[i][j][l]·b_i⊗b_j`,
//! * `counit[i] = π(b_i)` and `unit` with `1_H = Σ_i unit[i]·b_i`,
//! * optionally the antipode as the matrix `S` with `S(b_l) = Σ_k S[k][l]·b_k`.
//!
//! Basis changes are described by the coordinate transform `M`: an element
//! with coordinates `x` in the old basis has coordinates `M·x` in the new
//! one. Consequently operator tuples transform as `∂' = M·∂`.

mod builtin;
mod verify;

pub use builtin::{
    constant_group, multiplicative_kernel, roots_of_unity, trivial, truncated_additive, CayleyTable,
};
pub use verify::{mutation_survey, verify_bialgebra, BialgebraReport, Law, LawReport, Mutation, MutationSurvey, Tensor};

use crate::error::{Error, Result};
use crate::field::{Field, FieldElem};
use crate::linalg::Matrix;

/// A cube of structure constants indexed `(i, j, l)`.
#[derive(Clone, PartialEq, Debug)]
pub struct Tensor3 {
    e: usize,
    data: Vec<FieldElem>,
}

impl Tensor3 {
    pub fn zeros(field: &Field, e: usize) -> Self {
        Tensor3 { e, data: vec![field.zero(); e * e * e] }
    }

    pub fn from_nested(field: &Field, e: usize, nested: Vec<Vec<Vec<FieldElem>>>) -> Result<Self> {
        if nested.len() != e || nested.iter().any(|r| r.len() != e || r.iter().any(|c| c.len() != e)) {
            return Err(Error::ShapeMismatch(format!("structure tensor must be {e}x{e}x{e}")));
        }
        let data: Vec<FieldElem> = nested.into_iter().flatten().flatten().collect();
        if data.iter().any(|x| x.field() != field) {
            return Err(Error::FieldMismatch(field.to_string(), "structure constant".into()));
        }
        Ok(Tensor3 { e, data })
    }

    pub fn dim(&self) -> usize {
        self.e
    }

    pub fn get(&self, i: usize, j: usize, l: usize) -> &FieldElem {
        &self.data[(i * self.e + j) * self.e + l]
    }

    pub fn get_mut(&mut self, i: usize, j: usize, l: usize) -> &mut FieldElem {
        &mut self.data[(i * self.e + j) * self.e + l]
    }

    pub fn set(&mut self, i: usize, j: usize, l: usize, x: FieldElem) {
        *self.get_mut(i, j, l) = x;
    }

    pub fn to_nested(&self) -> Vec<Vec<Vec<FieldElem>>> {
        (0..self.e).map(|i| (0..self.e).map(|j| (0..self.e).map(|l| self.get(i, j, l).clone()).collect()).collect()).collect()
    }

    /// Nonzero entries as `(i, j, l, value)`.
    pub fn nonzero(&self) -> Vec<(usize, usize, usize, FieldElem)> {
        let e = self.e;
        let mut out = Vec::new();
        for i in 0..e {
            for j in 0..e {
                for l in 0..e {
                    let x = self.get(i, j, l);
                    if !x.is_zero() {
                        out.push((i, j, l, x.clone()));
                    }
                }
            }
        }
        out
    }

    fn embed(&self, bigger: &Field) -> Result<Self> {
        Ok(Tensor3 { e: self.e, data: self.data.iter().map(|x| bigger.embed(x)).collect::<Result<_>>()? })
    }
}

impl serde::Serialize for Tensor3 {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_nested().serialize(s)
    }
}

/// Records that a Hopf algebra was built as `left ⊗ right`, basis index
/// `i·e_right + j` for `b_i ⊗ b'_j`.
#[derive(Clone, Debug, PartialEq)]
pub struct ProductLayout {
    pub left: Box<HopfData>,
    pub right: Box<HopfData>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct HopfData {
    field: Field,
    basis_names: Vec<String>,
    mult: Tensor3,
    comult: Tensor3,
    counit: Vec<FieldElem>,
    unit: Vec<FieldElem>,
    antipode: Option<Matrix>,
    layout: Option<ProductLayout>,
    notes: Vec<String>,
}

/// Raw structure data, checked for shape only.
pub struct RawHopf {
    pub field: Field,
    pub basis_names: Vec<String>,
    pub mult: Vec<Vec<Vec<FieldElem>>>,
    pub comult: Vec<Vec<Vec<FieldElem>>>,
    pub counit: Vec<FieldElem>,
    pub unit: Vec<FieldElem>,
    pub antipode: Option<Vec<Vec<FieldElem>>>,
}

pub fn build_hopf(raw: RawHopf) -> Result<HopfData> {
    let e = raw.basis_names.len();
    if e == 0 {
        return Err(Error::ShapeMismatch("dimension must be positive".into()));
    }
    let field = raw.field;
    let mult = Tensor3::from_nested(&field, e, raw.mult)?;
    let comult = Tensor3::from_nested(&field, e, raw.comult)?;
    for (name, v) in [("counit", &raw.counit), ("unit", &raw.unit)] {
        if v.len() != e {
            return Err(Error::ShapeMismatch(format!("{name} must have {e} entries")));
        }
        if v.iter().any(|x| x.field() != &field) {
            return Err(Error::FieldMismatch(field.to_string(), name.into()));
        }
    }
    let antipode = match raw.antipode {
        None => None,
        Some(rows) => {
            let m = Matrix::from_rows(&field, rows)?;
            if m.rows() != e || m.cols() != e {
                return Err(Error::ShapeMismatch(format!("antipode must be {e}x{e}")));
            }
            Some(m)
        }
    };
    Ok(HopfData {
        field,
        basis_names: raw.basis_names,
        mult,
        comult,
        counit: raw.counit,
        unit: raw.unit,
        antipode,
        layout: None,
        notes: Vec::new(),
    })
}

impl HopfData {
    pub(crate) fn from_parts(
        field: &Field,
        basis_names: Vec<String>,
        mult: Tensor3,
        comult: Tensor3,
        counit: Vec<FieldElem>,
        unit: Vec<FieldElem>,
    ) -> Self {
        HopfData {
            field: field.clone(),
            basis_names,
            mult,
            comult,
            counit,
            unit,
            antipode: None,
            layout: None,
            notes: Vec::new(),
        }
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    /// The order `e = dim H`.
    pub fn dim(&self) -> usize {
        self.basis_names.len()
    }

    pub fn basis_names(&self) -> &[String] {
        &self.basis_names
    }

    pub fn mult(&self) -> &Tensor3 {
        &self.mult
    }

    pub fn comult(&self) -> &Tensor3 {
        &self.comult
    }

    pub fn counit(&self) -> &[FieldElem] {
        &self.counit
    }

    pub fn unit(&self) -> &[FieldElem] {
        &self.unit
    }

    pub fn antipode(&self) -> Option<&Matrix> {
        self.antipode.as_ref()
    }

    pub fn layout(&self) -> Option<&ProductLayout> {
        self.layout.as_ref()
    }

    pub fn notes(&self) -> &[String] {
        &self.notes
    }

    pub(crate) fn push_note(&mut self, note: String) {
        self.notes.push(note);
    }

    pub(crate) fn mult_mut(&mut self) -> &mut Tensor3 {
        &mut self.mult
    }

    pub(crate) fn comult_mut(&mut self) -> &mut Tensor3 {
        &mut self.comult
    }

    pub(crate) fn counit_mut(&mut self) -> &mut Vec<FieldElem> {
        &mut self.counit
    }

    pub(crate) fn unit_mut(&mut self) -> &mut Vec<FieldElem> {
        &mut self.unit
    }

    pub fn with_basis_names(mut self, names: Vec<String>) -> Result<Self> {
        if names.len() != self.dim() {
            return Err(Error::ShapeMismatch(format!("expected {} basis names", self.dim())));
        }
        self.basis_names = names;
        Ok(self)
    }

    /// `π(b_0) = 1` and `π(b_i) = 0` for `i > 0`.
    pub fn is_good_basis(&self) -> bool {
        self.counit[0].is_one() && self.counit[1..].iter().all(FieldElem::is_zero)
    }

    /// Product of two elements given by coordinates.
    pub fn multiply(&self, x: &[FieldElem], y: &[FieldElem]) -> Vec<FieldElem> {
        let e = self.dim();
        let mut out = vec![self.field.zero(); e];
        for (i, j, l, c) in self.mult.nonzero() {
            if x[i].is_zero() || y[j].is_zero() {
                continue;
            }
            out[l] = &out[l] + &(&c * &(&x[i] * &y[j]));
        }
        out
    }

    /// Solves the convolution identities `m(S⊗id)μ = u∘π = m(id⊗S)μ` for `S`
    /// and stores it.
    pub fn solve_antipode(&self) -> Result<HopfData> {
        let e = self.dim();
        let f = &self.field;
        let n = e * e;
        // unknown S[k][i] at column k*e + i
        let mut rows = Vec::with_capacity(2 * n);
        let mut rhs = Vec::with_capacity(2 * n);
        let comult = self.comult.nonzero();
        let mult = self.mult.nonzero();
        for side in 0..2 {
            for l in 0..e {
                let mut block = vec![vec![f.zero(); n]; e];
                for (i, j, ll, c) in &comult {
                    if *ll != l {
                        continue;
                    }
                    for (a, b, t, m) in &mult {
                        let coef = c * m;
                        if side == 0 {
                            // S(b_i)·b_j: a = k, b = j
                            if b == j {
                                let col = a * e + i;
                                block[*t][col] = &block[*t][col] + &coef;
                            }
                        } else if a == i {
                            // b_i·S(b_j): b = k
                            let col = b * e + j;
                            block[*t][col] = &block[*t][col] + &coef;
                        }
                    }
                }
                for (t, row) in block.into_iter().enumerate() {
                    rows.push(row);
                    rhs.push(&self.counit[l] * &self.unit[t]);
                }
            }
        }
        let m = Matrix::from_rows(f, rows)?;
        let sol = m.solve(&rhs).map_err(|err| match err {
            Error::NoSolution => Error::NoAntipode,
            other => other,
        })?;
        let mut s = Matrix::zeros(f, e, e);
        for k in 0..e {
            for i in 0..e {
                s[(k, i)] = sol[k * e + i].clone();
            }
        }
        let mut out = self.clone();
        out.antipode = Some(s);
        Ok(out)
    }

    /// Transports all structure data along the coordinate transform `m`.
    pub fn change_basis(&self, m: &Matrix) -> Result<HopfData> {
        let e = self.dim();
        if m.rows() != e || m.cols() != e {
            return Err(Error::ShapeMismatch(format!("basis change must be {e}x{e}")));
        }
        if m.field() != &self.field {
            return Err(Error::FieldMismatch(self.field.to_string(), m.field().to_string()));
        }
        let p = m.inverse()?;
        if m.is_identity() {
            return Ok(self.clone());
        }
        let f = &self.field;
        let mult_nz = self.mult.nonzero();
        let comult_nz = self.comult.nonzero();

        // b'_i b'_j = Σ P[a][i] P[b][j] m[a][b][l] b_l, b_l = Σ_t M[t][l] b'_t
        let mut mult = Tensor3::zeros(f, e);
        for (a, b, l, c) in &mult_nz {
            for i in 0..e {
                if p[(*a, i)].is_zero() {
                    continue;
                }
                for j in 0..e {
                    if p[(*b, j)].is_zero() {
                        continue;
                    }
                    let w = &(&p[(*a, i)] * &p[(*b, j)]) * c;
                    for t in 0..e {
                        if m[(t, *l)].is_zero() {
                            continue;
                        }
                        let v = mult.get(i, j, t) + &(&w * &m[(t, *l)]);
                        mult.set(i, j, t, v);
                    }
                }
            }
        }
        // μ(b'_t) = Σ_l P[l][t] Σ c[a][b][l] b_a⊗b_b, b_a = Σ_i M[i][a] b'_i
        let mut comult = Tensor3::zeros(f, e);
        for (a, b, l, c) in &comult_nz {
            for t in 0..e {
                if p[(*l, t)].is_zero() {
                    continue;
                }
                let w = c * &p[(*l, t)];
                for i in 0..e {
                    if m[(i, *a)].is_zero() {
                        continue;
                    }
                    let w2 = &w * &m[(i, *a)];
                    for j in 0..e {
                        if m[(j, *b)].is_zero() {
                            continue;
                        }
                        let v = comult.get(i, j, t) + &(&w2 * &m[(j, *b)]);
                        comult.set(i, j, t, v);
                    }
                }
            }
        }
        let counit = p.transpose().mul_vec(&self.counit)?;
        let unit = m.mul_vec(&self.unit)?;
        let antipode = match &self.antipode {
            Some(s) => Some(m.mul(s)?.mul(&p)?),
            None => None,
        };
        Ok(HopfData {
            field: f.clone(),
            basis_names: (0..e).map(|i| format!("b{i}")).collect(),
            mult,
            comult,
            counit,
            unit,
            antipode,
            layout: None,
            notes: self.notes.clone(),
        })
    }

    /// Changes to the basis whose `j`-th vector has old coordinates
    /// `new_basis[j]`; returns the new data and the coordinate transform.
    pub fn change_basis_to(&self, new_basis: &[Vec<FieldElem>]) -> Result<(HopfData, Matrix)> {
        let e = self.dim();
        if new_basis.len() != e || new_basis.iter().any(|v| v.len() != e) {
            return Err(Error::ShapeMismatch(format!("new basis must consist of {e} vectors of length {e}")));
        }
        let p = Matrix::from_rows(&self.field, new_basis.to_vec())?.transpose();
        let m = p.inverse()?;
        Ok((self.change_basis(&m)?, m))
    }

    /// Moves to a good basis: the first `b_k` with `π(b_k) ≠ 0` is scaled
    /// into slot 0 and `π(b_i)·b'_0` is subtracted from every other vector.
    pub fn good_basis(&self) -> Result<(HopfData, Matrix)> {
        let e = self.dim();
        let f = &self.field;
        let k = self
            .counit
            .iter()
            .position(|x| !x.is_zero())
            .ok_or_else(|| Error::ShapeMismatch("counit vanishes identically".into()))?;
        let pk_inv = self.counit[k].inv()?;
        let mut p = Matrix::zeros(f, e, e);
        p[(k, 0)] = pk_inv.clone();
        let mut col = 1;
        for i in (0..e).filter(|&i| i != k) {
            p[(i, col)] = f.one();
            p[(k, col)] = -(&self.counit[i] * &pk_inv);
            col += 1;
        }
        let m = p.inverse()?;
        if m.is_identity() {
            return Ok((self.clone(), m));
        }
        Ok((self.change_basis(&m)?, m))
    }

    /// The same structure constants over a larger field of the tower.
    pub fn base_change(&self, bigger: &Field) -> Result<HopfData> {
        if bigger == &self.field {
            return Ok(self.clone());
        }
        if !bigger.contains_subfield(&self.field) {
            return Err(Error::IncompatibleTowers(format!("{} is not a subfield of {bigger}", self.field)));
        }
        let embed = |v: &[FieldElem]| v.iter().map(|x| bigger.embed(x)).collect::<Result<Vec<_>>>();
        let layout = match &self.layout {
            Some(l) => Some(ProductLayout {
                left: Box::new(l.left.base_change(bigger)?),
                right: Box::new(l.right.base_change(bigger)?),
            }),
            None => None,
        };
        Ok(HopfData {
            field: bigger.clone(),
            basis_names: self.basis_names.clone(),
            mult: self.mult.embed(bigger)?,
            comult: self.comult.embed(bigger)?,
            counit: embed(&self.counit)?,
            unit: embed(&self.unit)?,
            antipode: self.antipode.as_ref().map(|s| s.embed(bigger)).transpose()?,
            layout,
            notes: self.notes.clone(),
        })
    }

    /// Tensor product Hopf algebra with basis `b_i ⊗ b'_j` at index
    /// `i·e₂ + j`.
    pub fn product(&self, other: &HopfData) -> Result<HopfData> {
        if self.field != other.field {
            return Err(Error::FieldMismatch(self.field.to_string(), other.field.to_string()));
        }
        let (e1, e2) = (self.dim(), other.dim());
        let e = e1 * e2;
        let f = &self.field;
        let idx = |i: usize, j: usize| i * e2 + j;
        let kron = |a: &Tensor3, b: &Tensor3| {
            let mut t = Tensor3::zeros(f, e);
            let bnz = b.nonzero();
            for (i, k, s, x) in a.nonzero() {
                for (j, l, u, y) in &bnz {
                    t.set(idx(i, *j), idx(k, *l), idx(s, *u), &x * y);
                }
            }
            t
        };
        let outer = |a: &[FieldElem], b: &[FieldElem]| {
            a.iter().flat_map(|x| b.iter().map(move |y| x * y)).collect::<Vec<_>>()
        };
        let antipode = match (&self.antipode, &other.antipode) {
            (Some(s1), Some(s2)) => {
                let mut s = Matrix::zeros(f, e, e);
                for a in 0..e1 {
                    for b in 0..e1 {
                        for c in 0..e2 {
                            for d in 0..e2 {
                                s[(idx(a, c), idx(b, d))] = &s1[(a, b)] * &s2[(c, d)];
                            }
                        }
                    }
                }
                Some(s)
            }
            _ => None,
        };
        let basis_names = self
            .basis_names
            .iter()
            .flat_map(|a| other.basis_names.iter().map(move |b| format!("{a}*{b}")))
            .collect();
        let mut notes = self.notes.clone();
        notes.extend(other.notes.iter().cloned());
        Ok(HopfData {
            field: f.clone(),
            basis_names,
            mult: kron(&self.mult, &other.mult),
            comult: kron(&self.comult, &other.comult),
            counit: outer(&self.counit, &other.counit),
            unit: outer(&self.unit, &other.unit),
            antipode,
            layout: Some(ProductLayout { left: Box::new(self.clone()), right: Box::new(other.clone()) }),
            notes,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_elem;

    fn elems(f: &Field, xs: &[&str]) -> Vec<FieldElem> {
        xs.iter().map(|x| parse_elem(f, x).unwrap()).collect()
    }

    /// The non-good ε-basis of the third roots of unity over QQ changed to
    /// `(1+ε+ε²)/3, (ε−1)/3, (ε²−1)/3`.
    fn third_roots_paper_basis() -> (HopfData, Matrix) {
        let qq = Field::rationals();
        let h = roots_of_unity(&qq, 3).unwrap();
        let nb = vec![
            elems(&qq, &["1/3", "1/3", "1/3"]),
            elems(&qq, &["-1/3", "1/3", "0"]),
            elems(&qq, &["-1/3", "0", "1/3"]),
        ];
        h.change_basis_to(&nb).unwrap()
    }

    #[test]
    fn paper_basis_is_good_with_expected_unit() {
        let (h, _) = third_roots_paper_basis();
        assert!(h.is_good_basis());
        let qq = Field::rationals();
        assert_eq!(h.unit(), elems(&qq, &["1", "-1", "-1"]).as_slice());
        assert!(verify_bialgebra(&h).all_pass());
    }

    #[test]
    fn paper_multiplication_table() {
        let (h, _) = third_roots_paper_basis();
        let qq = Field::rationals();
        let row = |i, j| (0..3).map(|l| h.mult().get(i, j, l).clone()).collect::<Vec<_>>();
        assert_eq!(row(0, 0), elems(&qq, &["1", "0", "0"]));
        assert_eq!(row(0, 1), elems(&qq, &["0", "0", "0"]));
        assert_eq!(row(0, 2), elems(&qq, &["0", "0", "0"]));
        assert_eq!(row(1, 1), elems(&qq, &["0", "-2/3", "1/3"]));
        assert_eq!(row(2, 2), elems(&qq, &["0", "1/3", "-2/3"]));
        assert_eq!(row(1, 2), elems(&qq, &["0", "-1/3", "-1/3"]));
    }

    #[test]
    fn paper_comultiplication_table() {
        let (h, _) = third_roots_paper_basis();
        let qq = Field::rationals();
        let mat = |l| (0..3).flat_map(|i| (0..3).map(move |j| (i, j))).map(|(i, j)| h.comult().get(i, j, l).clone()).collect::<Vec<_>>();
        assert_eq!(mat(0), elems(&qq, &["1", "0", "0", "0", "2", "-1", "0", "-1", "2"]));
        assert_eq!(mat(1), elems(&qq, &["0", "1", "0", "1", "1", "-1", "0", "-1", "0"]));
        assert_eq!(mat(2), elems(&qq, &["0", "0", "1", "0", "0", "-1", "1", "-1", "1"]));
    }

    #[test]
    fn good_basis_pivots() {
        let f2 = Field::prime(2).unwrap();
        let gm = multiplicative_kernel(&f2, 2).unwrap();
        let swap = Matrix::from_rows(&f2, vec![elems(&f2, &["0", "1"]), elems(&f2, &["1", "0"])]).unwrap();
        let swapped = gm.change_basis(&swap).unwrap();
        assert!(!swapped.is_good_basis());
        let (good, m) = swapped.good_basis().unwrap();
        assert!(good.is_good_basis());
        assert_eq!(m, swap);
        assert_eq!(good.comult(), gm.comult());

        let (same, id) = gm.good_basis().unwrap();
        assert!(id.is_identity());
        assert_eq!(same, gm);

        let qq = Field::rationals();
        let (g3, _) = roots_of_unity(&qq, 3).unwrap().good_basis().unwrap();
        assert!(g3.is_good_basis());
        assert!(verify_bialgebra(&g3).all_pass());
    }

    #[test]
    fn scaling_a_basis_vector() {
        let f3 = Field::prime(3).unwrap();
        let h = truncated_additive(&f3, 3, 1).unwrap();
        // new coordinates are twice the old ones, so v = 2·b'_1
        let m = Matrix::from_rows(&f3, vec![elems(&f3, &["1", "0", "0"]), elems(&f3, &["0", "2", "0"]), elems(&f3, &["0", "0", "1"])]).unwrap();
        let h2 = h.change_basis(&m).unwrap();
        // μ(v²) contains 2·v⊗v = 8·b'_1⊗b'_1
        assert_eq!(h2.comult().get(1, 1, 2), &f3.from_i64(2));
        // (b'_1)² = v²/4
        assert_eq!(h2.mult().get(1, 1, 2), &f3.from_i64(1));
        assert!(verify_bialgebra(&h2).all_pass());
    }

    #[test]
    fn change_basis_is_functorial() {
        let qq = Field::rationals();
        let h = roots_of_unity(&qq, 3).unwrap();
        let m = Matrix::from_rows(&qq, vec![elems(&qq, &["1", "2", "0"]), elems(&qq, &["0", "1", "0"]), elems(&qq, &["1", "0", "3"])]).unwrap();
        let n = Matrix::from_rows(&qq, vec![elems(&qq, &["2", "0", "0"]), elems(&qq, &["1", "1", "0"]), elems(&qq, &["0", "-1", "1"])]).unwrap();
        let lhs = h.change_basis(&m.mul(&n).unwrap()).unwrap();
        let rhs = h.change_basis(&n).unwrap().change_basis(&m).unwrap();
        assert_eq!(lhs, rhs);
        assert!(verify_bialgebra(&lhs).all_pass());
        let singular = Matrix::zeros(&qq, 3, 3);
        assert_eq!(h.change_basis(&singular), Err(Error::SingularMatrix));
    }

    #[test]
    fn antipodes() {
        let f3 = Field::prime(3).unwrap();
        let s = truncated_additive(&f3, 3, 1).unwrap().solve_antipode().unwrap();
        let s = s.antipode().unwrap();
        assert_eq!(s.mul_vec(&elems(&f3, &["0", "1", "0"])).unwrap(), elems(&f3, &["0", "2", "0"]));

        let qq = Field::rationals();
        let z3 = constant_group(&qq, &CayleyTable::cyclic(3)).unwrap().solve_antipode().unwrap();
        let s = z3.antipode().unwrap();
        for g in 0..3 {
            for h in 0..3 {
                let expected = if h == (3 - g) % 3 { qq.one() } else { qq.zero() };
                assert_eq!(s[(h, g)], expected);
            }
        }
        let t = trivial(&qq).solve_antipode().unwrap();
        assert!(t.antipode().unwrap().is_identity());
    }

    #[test]
    fn bialgebra_without_antipode() {
        // the monoid {1, 0} under multiplication: Func(M, QQ) is a bialgebra, not Hopf
        let qq = Field::rationals();
        let (o, z) = (qq.one(), qq.zero());
        let delta = |a: usize, b: usize, l: usize| if a == b && b == l { o.clone() } else { z.clone() };
        // basis e_1 (index 0), e_0 (index 1); products 1·1=1, else 0
        let prod = |i: usize, j: usize| if i == 0 && j == 0 { 0 } else { 1 };
        let raw = RawHopf {
            field: qq.clone(),
            basis_names: vec!["e1".into(), "e0".into()],
            mult: (0..2).map(|i| (0..2).map(|j| (0..2).map(|l| delta(i, j, l)).collect()).collect()).collect(),
            comult: (0..2)
                .map(|i| (0..2).map(|j| (0..2).map(|l| if prod(i, j) == l { o.clone() } else { z.clone() }).collect()).collect())
                .collect(),
            counit: vec![o.clone(), z.clone()],
            unit: vec![o.clone(), o.clone()],
            antipode: None,
        };
        let h = build_hopf(raw).unwrap();
        assert!(verify_bialgebra(&h).all_pass());
        assert_eq!(h.solve_antipode(), Err(Error::NoAntipode));
    }

    #[test]
    fn base_change_and_products() {
        let f2 = Field::prime(2).unwrap();
        let ga = truncated_additive(&f2, 2, 1).unwrap();
        let f4 = f2.extension("a", elems(&f2, &["1", "1", "1"])).unwrap();
        let big = ga.base_change(&f4).unwrap();
        assert!(verify_bialgebra(&big).all_pass());
        assert_eq!(ga.base_change(&f2).unwrap(), ga);
        assert!(ga.base_change(&Field::rationals()).is_err());

        let z2 = constant_group(&f2, &CayleyTable::cyclic(2)).unwrap();
        let prod = ga.product(&z2).unwrap();
        assert_eq!(prod.dim(), 4);
        assert!(verify_bialgebra(&prod).all_pass());
        assert!(prod.solve_antipode().is_ok());

        let triv = trivial(&f2);
        let with_trivial = ga.product(&triv).unwrap();
        assert_eq!(with_trivial.mult(), ga.mult());
        assert_eq!(with_trivial.comult(), ga.comult());

        let qq = Field::rationals();
        let c2 = constant_group(&qq, &CayleyTable::cyclic(2)).unwrap();
        let klein = constant_group(&qq, &CayleyTable::klein()).unwrap();
        let c2c2 = c2.product(&c2).unwrap();
        assert_eq!(c2c2.mult(), klein.mult());
        assert_eq!(c2c2.comult(), klein.comult());
        assert_eq!(c2c2.counit(), klein.counit());
        assert_eq!(c2c2.unit(), klein.unit());
        assert!(ga.product(&c2).is_err());
    }
}
