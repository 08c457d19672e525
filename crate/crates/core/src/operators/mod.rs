//! Operator tuples `∂ = (∂_0, …, ∂_{e-1})` of a finite group scheme acting on
//! field towers and on finitely presented algebras over them.
//!
//! An element `r` is sent to `∂(r) = Σ_i ∂_i(r)⊗b_i` in the twisted tensor
//! ring, stored as the vector of its components along the basis of `H`.

mod decompose;
mod rules;

pub use decompose::{decompose_product_action, CommutationFailure, Decomposition};
pub use rules::{derive_iterativity_rules, derive_product_rules, IterativityRule, ProductRule, RuleTable};

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::{Field, FieldElem};
use crate::groebner::Ideal;
use crate::hopf::HopfData;
use crate::linalg::Matrix;
use crate::poly::{MonomialOrder, Poly, PolyRing};

/// Components of an element of `R ⊗^∂ H` along `b_0, …, b_{e-1}`.
pub type TwistedTensor<T> = Vec<T>;

/// Ring elements that can serve as components of a twisted tensor.
pub trait Component: Clone + PartialEq + fmt::Display {
    fn zero_like(&self) -> Self;
    fn plus(&self, other: &Self) -> Self;
    fn times(&self, other: &Self) -> Self;
    fn scaled(&self, c: &FieldElem) -> Self;
    fn is_zero_component(&self) -> bool;
}

impl Component for FieldElem {
    fn zero_like(&self) -> Self {
        self.field().zero()
    }
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
    fn times(&self, other: &Self) -> Self {
        self * other
    }
    fn scaled(&self, c: &FieldElem) -> Self {
        self * c
    }
    fn is_zero_component(&self) -> bool {
        self.is_zero()
    }
}

impl Component for Poly {
    fn zero_like(&self) -> Self {
        self.ring().zero()
    }
    fn plus(&self, other: &Self) -> Self {
        self.add(other)
    }
    fn times(&self, other: &Self) -> Self {
        self.mul(other)
    }
    fn scaled(&self, c: &FieldElem) -> Self {
        self.scale(c)
    }
    fn is_zero_component(&self) -> bool {
        self.is_zero()
    }
}

/// Structure constants of `H` embedded into the carrier field, arranged for
/// twisted-tensor arithmetic.
#[derive(Clone, Debug)]
pub struct StructureTable {
    e: usize,
    field: Field,
    /// `mult[l]` lists `(i, j, m[i][j][l])`.
    mult: Vec<Vec<(usize, usize, FieldElem)>>,
    /// `comult[i][j]` lists `(l, c[i][j][l])`.
    comult: Vec<Vec<Vec<(usize, FieldElem)>>>,
    unit: Vec<FieldElem>,
    counit: Vec<FieldElem>,
}

impl StructureTable {
    pub fn new(h: &HopfData, field: &Field) -> Result<Self> {
        let e = h.dim();
        let mut mult = vec![Vec::new(); e];
        for (i, j, l, c) in h.mult().nonzero() {
            mult[l].push((i, j, field.embed(&c)?));
        }
        let mut comult = vec![vec![Vec::new(); e]; e];
        for (i, j, l, c) in h.comult().nonzero() {
            comult[i][j].push((l, field.embed(&c)?));
        }
        let embed = |v: &[FieldElem]| v.iter().map(|x| field.embed(x)).collect::<Result<Vec<_>>>();
        Ok(StructureTable { e, field: field.clone(), mult, comult, unit: embed(h.unit())?, counit: embed(h.counit())? })
    }

    pub fn dim(&self) -> usize {
        self.e
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn unit(&self) -> &[FieldElem] {
        &self.unit
    }

    pub fn counit(&self) -> &[FieldElem] {
        &self.counit
    }

    /// `c[i][j][l]` as a sparse list over `l`.
    pub fn comult_terms(&self, i: usize, j: usize) -> &[(usize, FieldElem)] {
        &self.comult[i][j]
    }

    /// `(a·b)_l = Σ m[i][j][l]·a_i·b_j`.
    pub fn twisted_mul<T: Component>(&self, a: &[T], b: &[T]) -> Vec<T> {
        let zero = a[0].zero_like();
        let mut products: Vec<Option<T>> = vec![None; self.e * self.e];
        let mut out = vec![zero; self.e];
        for (l, terms) in self.mult.iter().enumerate() {
            for (i, j, c) in terms {
                if a[*i].is_zero_component() || b[*j].is_zero_component() {
                    continue;
                }
                let p = products[i * self.e + j].get_or_insert_with(|| a[*i].times(&b[*j]));
                out[l] = out[l].plus(&p.scaled(c));
            }
        }
        out
    }

    /// The image of `one` under `c ↦ c⊗1_H`, i.e. `(u_0·one, …)`.
    pub fn scalar<T: Component>(&self, x: &T) -> Vec<T> {
        self.unit.iter().map(|u| x.scaled(u)).collect()
    }

    pub fn add<T: Component>(&self, a: &[T], b: &[T]) -> Vec<T> {
        a.iter().zip(b).map(|(x, y)| x.plus(y)).collect()
    }

    /// `Σ_i π_i·a_i`.
    pub fn counit_apply<T: Component>(&self, a: &[T]) -> T {
        a.iter().zip(&self.counit).fold(a[0].zero_like(), |acc, (x, p)| acc.plus(&x.scaled(p)))
    }

    /// `Σ_l c[i][j][l]·a_l`, the right-hand side of iterativity.
    pub fn iterate<T: Component>(&self, i: usize, j: usize, a: &[T]) -> T {
        self.comult[i][j].iter().fold(a[0].zero_like(), |acc, (l, c)| acc.plus(&a[*l].scaled(c)))
    }
}

#[derive(Clone, Debug)]
struct Level {
    field: Field,
    name: String,
    image: Vec<FieldElem>,
    /// `∂(g)^k` for `k = 0, …, [L : base]`.
    powers: Vec<Vec<FieldElem>>,
}

/// A candidate action on a tower `K ⊇ k`, where `k` is the field of `H`:
/// scalars of `k` act by `∂_i(c) = u_i·c` and each generator above `k`
/// carries an explicit image.
#[derive(Clone, Debug)]
pub struct FieldAction {
    hopf: HopfData,
    table: StructureTable,
    field: Field,
    levels: Vec<Level>,
}

impl FieldAction {
    /// `images` assigns to every tower generator strictly above the field
    /// of `hopf` the components of its image.
    pub fn new(hopf: &HopfData, field: &Field, images: &[(String, Vec<FieldElem>)]) -> Result<Self> {
        let k = hopf.field();
        if !field.contains_subfield(k) {
            return Err(Error::IncompatibleTowers(format!("{k} is not a subfield of {field}")));
        }
        let e = hopf.dim();
        let table = StructureTable::new(hopf, field)?;
        let mut above: Vec<Field> = field.tower().into_iter().take_while(|f| f != k).collect();
        above.reverse();
        for (name, _) in images {
            if !above.iter().any(|f| f.generator_name() == Some(name)) {
                return Err(Error::ShapeMismatch(format!("{name} is not a tower generator above {k}")));
            }
        }
        let mut levels = Vec::new();
        for lf in above {
            let name = lf.generator_name().unwrap().to_string();
            let image = images
                .iter()
                .find(|(n, _)| n == &name)
                .ok_or_else(|| Error::ShapeMismatch(format!("missing image for generator {name}")))?
                .1
                .iter()
                .map(|x| field.embed(x))
                .collect::<Result<Vec<_>>>()?;
            if image.len() != e {
                return Err(Error::ShapeMismatch(format!("image of {name} must have {e} components")));
            }
            let d = lf.relative_degree();
            let mut powers = vec![table.scalar(&field.one())];
            for _ in 0..d {
                let next = table.twisted_mul(powers.last().unwrap(), &image);
                powers.push(next);
            }
            levels.push(Level { field: lf, name, image, powers });
        }
        Ok(FieldAction { hopf: hopf.clone(), table, field: field.clone(), levels })
    }

    /// The action of `∂_i(c) = u_i·c` with no generators above `field`.
    pub fn trivial(hopf: &HopfData) -> Self {
        FieldAction::new(hopf, hopf.field(), &[]).expect("scalar action on the base field")
    }

    pub fn hopf(&self) -> &HopfData {
        &self.hopf
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn table(&self) -> &StructureTable {
        &self.table
    }

    /// Generator names above the field of `H`, bottom first, with images.
    pub fn images(&self) -> Vec<(String, Vec<FieldElem>)> {
        self.levels.iter().map(|l| (l.name.clone(), l.image.clone())).collect()
    }

    pub fn apply(&self, x: &FieldElem) -> Vec<FieldElem> {
        let x = self.field.embed(x).expect("element of a subfield of the carrier");
        self.apply_at(self.levels.len(), &x)
    }

    fn apply_at(&self, depth: usize, x: &FieldElem) -> Vec<FieldElem> {
        if depth == 0 {
            return self.table.scalar(&self.field.embed(x).expect("base embeds"));
        }
        let level = &self.levels[depth - 1];
        debug_assert_eq!(x.field(), &level.field);
        let mut acc = vec![self.field.zero(); self.table.e];
        for (k, c) in x.base_coeffs().iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let dc = self.apply_at(depth - 1, c);
            acc = self.table.add(&acc, &self.table.twisted_mul(&dc, &level.powers[k]));
        }
        acc
    }

    /// `P^∂(∂(g))` for the minimal polynomial `P` of every generator; all
    /// zero exactly when the action respects the tower relations.
    fn relation_defects(&self) -> Vec<(String, Vec<FieldElem>)> {
        let mut out = Vec::new();
        for (depth, level) in self.levels.iter().enumerate() {
            let minpoly = level.field.minpoly().unwrap();
            let mut acc = vec![self.field.zero(); self.table.e];
            for (k, c) in minpoly.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                let dc = self.apply_at(depth, c);
                acc = self.table.add(&acc, &self.table.twisted_mul(&dc, &level.powers[k]));
            }
            out.push((level.name.clone(), acc));
        }
        out
    }

    fn change_basis(&self, hopf: &HopfData, m: &Matrix) -> Result<FieldAction> {
        let m = m.embed(&self.field)?;
        let images: Vec<(String, Vec<FieldElem>)> =
            self.levels.iter().map(|l| Ok((l.name.clone(), m.mul_vec(&l.image)?))).collect::<Result<_>>()?;
        FieldAction::new(hopf, &self.field, &images)
    }
}

/// The image of `f ∈ K[x̄]` in `target ⊗^∂ H` under the extension of
/// `x_j ↦ images[j]` by the multiplicative rule, coefficients acting
/// through `action`.
pub fn twisted_image(action: &FieldAction, target: &PolyRing, f: &Poly, images: &[Vec<Poly>]) -> TwistedTensor<Poly> {
    let table = action.table();
    let e = table.dim();
    let one: Vec<Poly> = table.scalar(&target.one());
    let mut powers: Vec<Vec<Vec<Poly>>> = vec![vec![one]; images.len()];
    let mut acc = vec![target.zero(); e];
    for (m, c) in f.terms() {
        let mut t: Vec<Poly> = action.apply(c).into_iter().map(|x| target.constant(x)).collect();
        for (v, &k) in m.iter().enumerate() {
            if k == 0 {
                continue;
            }
            while powers[v].len() <= k as usize {
                let next = table.twisted_mul(powers[v].last().unwrap(), &images[v]);
                powers[v].push(next);
            }
            t = table.twisted_mul(&t, &powers[v][k as usize]);
        }
        acc = table.add(&acc, &t);
    }
    acc
}

/// A candidate `𝔤`-structure on `K[x̄]/I`; with no variables the carrier is
/// the field `K` itself.
#[derive(Clone, Debug)]
pub struct OperatorSpec {
    action: FieldAction,
    ring: PolyRing,
    ideal: Ideal,
    images: Vec<Vec<Poly>>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct IterativityFailure {
    pub i: usize,
    pub j: usize,
    pub generator: String,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct WellDefinedFailure {
    pub relation: String,
    pub component: usize,
    pub normal_form: String,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct OperatorReport {
    /// Generators on which `Σ_i π_i∂_i` differs from the identity.
    pub counit: Vec<String>,
    pub iterativity: Vec<IterativityFailure>,
    pub well_defined: Vec<WellDefinedFailure>,
}

impl OperatorReport {
    pub fn passes(&self) -> bool {
        self.counit.is_empty() && self.iterativity.is_empty() && self.well_defined.is_empty()
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Constants {
    /// Basis of `K^𝔤` over the field of `H`, in echelon form on coordinates.
    pub basis: Vec<FieldElem>,
    pub dimension: usize,
    pub field_degree: usize,
    /// `[K : K^𝔤]`.
    pub degree: usize,
    pub order: usize,
    pub bound_holds: bool,
}

impl OperatorSpec {
    pub fn on_field(action: FieldAction) -> Self {
        let ring = PolyRing::new(action.field(), Vec::new()).expect("empty variable list");
        OperatorSpec { ideal: Ideal::zero(&ring), ring, action, images: Vec::new() }
    }

    /// `images[j]` holds `∂_0(x_j), …, ∂_{e-1}(x_j)` in `ring`.
    pub fn on_algebra(action: FieldAction, ring: &PolyRing, relations: Vec<Poly>, images: Vec<Vec<Poly>>) -> Result<Self> {
        if ring.field() != action.field() {
            return Err(Error::FieldMismatch(ring.field().to_string(), action.field().to_string()));
        }
        let e = action.hopf().dim();
        if images.len() != ring.nvars() {
            return Err(Error::ShapeMismatch(format!("{} image tuples for {} variables", images.len(), ring.nvars())));
        }
        for (name, im) in ring.vars().iter().zip(&images) {
            if im.len() != e {
                return Err(Error::ShapeMismatch(format!("image of {name} must have {e} components")));
            }
            if im.iter().any(|p| p.ring() != ring) {
                return Err(Error::RingMismatch(format!("image of {name} lies outside the carrier")));
            }
        }
        let ideal = Ideal::new(ring, relations)?;
        Ok(OperatorSpec { action, ring: ring.clone(), ideal, images })
    }

    pub fn hopf(&self) -> &HopfData {
        self.action.hopf()
    }

    pub fn field(&self) -> &Field {
        self.action.field()
    }

    pub fn action(&self) -> &FieldAction {
        &self.action
    }

    pub fn ring(&self) -> &PolyRing {
        &self.ring
    }

    pub fn ideal(&self) -> &Ideal {
        &self.ideal
    }

    pub fn images(&self) -> &[Vec<Poly>] {
        &self.images
    }

    pub fn table(&self) -> &StructureTable {
        self.action.table()
    }

    pub fn is_field(&self) -> bool {
        self.ring.nvars() == 0
    }

    pub fn extend_field(&self, x: &FieldElem) -> Vec<FieldElem> {
        self.action.apply(x)
    }

    /// `∂(f)` via the multiplicative rule and the action on coefficients.
    pub fn extend(&self, f: &Poly) -> Result<TwistedTensor<Poly>> {
        if f.ring() != &self.ring {
            return Err(Error::RingMismatch(format!("{f} is not in the carrier ring")));
        }
        Ok(twisted_image(&self.action, &self.ring, f, &self.images))
    }

    /// Sets the monomial order used for normal forms modulo the relations.
    pub fn with_order(mut self, order: MonomialOrder) -> Result<Self> {
        self.ideal = self.ideal.with_order(order);
        Ok(self)
    }

    fn reduce(&self, f: &Poly) -> Result<Poly> {
        if self.ideal.generators().is_empty() {
            Ok(f.clone())
        } else {
            self.ideal.normal_form(f)
        }
    }

    /// Generator names and their images, field generators first.
    fn generators(&self) -> Vec<(String, Poly, Vec<Poly>)> {
        let mut out = Vec::new();
        for (name, image) in self.action.images() {
            let g = self.field().generator_named(&name).unwrap();
            out.push((name, self.ring.constant(g), image.into_iter().map(|x| self.ring.constant(x)).collect()));
        }
        for (j, name) in self.ring.vars().iter().enumerate() {
            out.push((name.clone(), self.ring.var(j), self.images[j].clone()));
        }
        out
    }

    pub fn check_counit(&self) -> Result<Vec<String>> {
        let mut failing = Vec::new();
        for (name, g, image) in self.generators() {
            if !self.reduce(&self.table().counit_apply(&image).sub(&g))?.is_zero() {
                failing.push(name);
            }
        }
        Ok(failing)
    }

    /// `∂_i(∂_j(g)) = Σ_l c[i][j][l]·∂_l(g)` on every generator `g`.
    pub fn check_iterativity(&self) -> Result<Vec<IterativityFailure>> {
        let table = self.table();
        let e = table.dim();
        let mut failures = Vec::new();
        for (name, _, image) in self.generators() {
            let second: Vec<Vec<Poly>> = image.iter().map(|p| self.extend(p)).collect::<Result<_>>()?;
            for i in 0..e {
                for j in 0..e {
                    let lhs = &second[j][i];
                    let rhs = table.iterate(i, j, &image);
                    if !self.reduce(&lhs.sub(&rhs))?.is_zero() {
                        failures.push(IterativityFailure {
                            i,
                            j,
                            generator: name.clone(),
                            lhs: self.reduce(lhs)?.to_string(),
                            rhs: self.reduce(&rhs)?.to_string(),
                        });
                    }
                }
            }
        }
        Ok(failures)
    }

    /// Every component of `∂` applied to each relation of the carrier, and
    /// of each tower minimal polynomial, must vanish in the carrier.
    pub fn check_well_defined(&self) -> Result<Vec<WellDefinedFailure>> {
        let mut failures = Vec::new();
        for (name, defect) in self.action.relation_defects() {
            for (l, x) in defect.iter().enumerate() {
                if !x.is_zero() {
                    failures.push(WellDefinedFailure {
                        relation: format!("minimal polynomial of {name}"),
                        component: l,
                        normal_form: x.to_string(),
                    });
                }
            }
        }
        for f in self.ideal.generators() {
            for (l, c) in self.extend(f)?.iter().enumerate() {
                let nf = self.reduce(c)?;
                if !nf.is_zero() {
                    failures.push(WellDefinedFailure { relation: f.to_string(), component: l, normal_form: nf.to_string() });
                }
            }
        }
        Ok(failures)
    }

    pub fn check(&self) -> Result<OperatorReport> {
        Ok(OperatorReport {
            counit: self.check_counit()?,
            iterativity: self.check_iterativity()?,
            well_defined: self.check_well_defined()?,
        })
    }

    /// The same action written in the basis of `hopf.change_basis(m)`.
    pub fn change_basis(&self, m: &Matrix) -> Result<OperatorSpec> {
        let hopf = self.hopf().change_basis(m)?;
        let action = self.action.change_basis(&hopf, m)?;
        let mk = m.embed(self.field())?;
        let e = self.table().dim();
        let images = self
            .images
            .iter()
            .map(|im| {
                (0..e)
                    .map(|t| {
                        (0..e).fold(self.ring.zero(), |acc, l| acc.add(&im[l].scale(&mk[(t, l)])))
                    })
                    .collect()
            })
            .collect();
        Ok(OperatorSpec { action, ring: self.ring.clone(), ideal: self.ideal.clone(), images })
    }

    /// `K^𝔤 = {x : ∂_i(x) = u_i·x}` as a subspace of `K` over the field of `H`.
    pub fn constants(&self) -> Result<Constants> {
        if !self.is_field() {
            return Err(Error::RingMismatch("constants are computed for field carriers".into()));
        }
        let report = self.check()?;
        if !report.passes() {
            return Err(Error::IllDefined("the action fails the counit, iterativity or well-definedness checks".into()));
        }
        let k = self.hopf().field();
        let big = self.field();
        let basis = big.basis_over(k)?;
        let n = basis.len();
        let table = self.table();
        let e = table.dim();
        let mut rows = vec![Vec::with_capacity(n); e * n];
        for beta in &basis {
            let d = self.action.apply(beta);
            for i in 0..e {
                let diff = &d[i] - &(&table.unit()[i] * beta);
                for (t, c) in diff.coords_over(k)?.into_iter().enumerate() {
                    rows[i * n + t].push(c);
                }
            }
        }
        let kernel = Matrix::from_rows(k, rows)?.kernel()?;
        let elems = kernel.iter().map(|v| big.from_coords_over(k, v)).collect::<Result<Vec<_>>>()?;
        let dim = elems.len();
        if dim == 0 {
            return Err(Error::IllDefined("no nonzero constants".into()));
        }
        let degree = n / dim;
        Ok(Constants { basis: elems, dimension: dim, field_degree: n, degree, order: e, bound_holds: degree <= e })
    }
}

#[cfg(test)]
mod tests;
