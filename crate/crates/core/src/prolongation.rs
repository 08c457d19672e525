//! Prolongations `∇(V)` of affine varieties over a `𝔤`-field, the maps
//! `c_V : ∇(V) → ∇(∇(V))` and `π`, and the geometric-axiom checks.
//!
//! The coordinate `X_j^{(i)}` of `∇(V)` is the variable `{X_j}_{i}` at index
//! `i·n + j` (level major). Applying the construction twice names the
//! coordinate with outer level `i` and inner coordinate `(l, j)` as
//! `{X_j}_{l}_{i}`, at index `i·n·e + l·n + j`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::FieldElem;
use crate::groebner::Ideal;
use crate::operators::{twisted_image, FieldAction, OperatorReport, OperatorSpec, StructureTable};
use crate::poly::{MonomialOrder, Poly, PolyRing};

/// Order used to reduce higher coordinates towards level 0.
pub const REDUCTION_ORDER: MonomialOrder = MonomialOrder::InvLex;

/// `V ⊆ 𝔸ⁿ_K` given by generators of `I(V)`, over a `𝔤`-field `K`.
#[derive(Clone, Debug)]
pub struct Variety {
    action: FieldAction,
    ring: PolyRing,
    ideal: Ideal,
}

impl Variety {
    pub fn new(action: &FieldAction, ring: &PolyRing, generators: Vec<Poly>) -> Result<Self> {
        if ring.field() != action.field() {
            return Err(Error::FieldMismatch(ring.field().to_string(), action.field().to_string()));
        }
        if !action.hopf().is_good_basis() {
            return Err(Error::NotGoodBasis("prolongations are built in a good basis".into()));
        }
        let generators = generators.into_iter().filter(|g| !g.is_zero()).collect();
        let ideal = Ideal::new(ring, generators)?.with_order(REDUCTION_ORDER);
        Ok(Variety { action: action.clone(), ring: ring.clone(), ideal })
    }

    pub fn affine_space(action: &FieldAction, ring: &PolyRing) -> Result<Self> {
        Variety::new(action, ring, Vec::new())
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

    pub fn generators(&self) -> &[Poly] {
        self.ideal.generators()
    }

    pub fn dim(&self) -> usize {
        self.ring.nvars()
    }

    fn order(&self) -> usize {
        self.action.hopf().dim()
    }

    pub fn contains_point(&self, a: &[FieldElem]) -> Result<bool> {
        for g in self.generators() {
            if !g.evaluate(a)?.is_zero() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    fn require_point(&self, a: &[FieldElem]) -> Result<()> {
        if a.len() != self.dim() {
            return Err(Error::DimensionMismatch(format!("point has {} coordinates, V lives in {}-space", a.len(), self.dim())));
        }
        if !self.contains_point(a)? {
            let shown: Vec<String> = a.iter().map(ToString::to_string).collect();
            return Err(Error::PointNotOnVariety(format!("({})", shown.join(", "))));
        }
        Ok(())
    }
}

/// Coordinates of `∇(𝔸ⁿ)` for the variables of `ring`.
pub fn nabla_ring(ring: &PolyRing, e: usize) -> Result<PolyRing> {
    let names = (0..e).flat_map(|i| ring.vars().iter().map(move |v| format!("{v}_{i}"))).collect();
    PolyRing::new(ring.field(), names)
}

/// `X_j ↦ (X_j^{(0)}, …, X_j^{(e-1)})` in the ring of `∇(𝔸ⁿ)`.
fn generic_images(nabla: &PolyRing, n: usize, e: usize) -> Vec<Vec<Poly>> {
    (0..n).map(|j| (0..e).map(|i| nabla.var(i * n + j)).collect()).collect()
}

#[derive(Clone, Debug)]
pub struct ProlongationVariety {
    source: Variety,
    ring: PolyRing,
    ideal: Ideal,
}

/// `I(∇V)`: every nonzero component of the image of every generator of
/// `I(V)` under `X_j ↦ Σ_i X_j^{(i)}⊗b_i`, generator index major.
pub fn prolongation_ideal(v: &Variety) -> Result<ProlongationVariety> {
    let e = v.order();
    let n = v.dim();
    let ring = nabla_ring(&v.ring, e)?;
    let images = generic_images(&ring, n, e);
    let mut generators = Vec::new();
    for f in v.generators() {
        generators.extend(twisted_image(&v.action, &ring, f, &images).into_iter().filter(|p| !p.is_zero()));
    }
    let ideal = Ideal::new(&ring, generators)?.with_order(REDUCTION_ORDER);
    Ok(ProlongationVariety { source: v.clone(), ring, ideal })
}

/// `∂̃_i(X_j^{(l)}) = Σ_s c[i][l][s]·X_j^{(s)}` on `K[X^{(·)}]` modulo
/// `relations`.
pub fn canonical_operator(action: &FieldAction, nabla: &PolyRing, n: usize, relations: Vec<Poly>) -> Result<OperatorSpec> {
    let table = action.table();
    let e = table.dim();
    if nabla.nvars() != n * e {
        return Err(Error::DimensionMismatch(format!("expected {} prolongation variables", n * e)));
    }
    let images = (0..e)
        .flat_map(|l| (0..n).map(move |j| (l, j)))
        .map(|(l, j)| {
            (0..e)
                .map(|i| {
                    table
                        .comult_terms(i, l)
                        .iter()
                        .fold(nabla.zero(), |acc, (s, c)| acc.add(&nabla.var(s * n + j).scale(c)))
                })
                .collect()
        })
        .collect();
    OperatorSpec::on_algebra(action.clone(), nabla, relations, images)?.with_order(REDUCTION_ORDER)
}

/// `c_V` as the list of its output coordinates, in the ∇∇ variable order:
/// coordinate `(i, (l, j))` is `Σ_s c[i][l][s]·X_j^{(s)}`.
pub fn c_map(table: &StructureTable, nabla: &PolyRing, n: usize) -> Vec<Poly> {
    let e = table.dim();
    let mut out = Vec::with_capacity(n * e * e);
    for i in 0..e {
        for l in 0..e {
            for j in 0..n {
                let p = table
                    .comult_terms(i, l)
                    .iter()
                    .fold(nabla.zero(), |acc, (s, c)| acc.add(&nabla.var(s * n + j).scale(c)));
                out.push(p);
            }
        }
    }
    out
}

/// `π : ∇(∇V) → ∇V`, the outer level-0 coordinates.
pub fn pi_map(nabla_nabla: &PolyRing, inner: usize) -> Vec<Poly> {
    (0..inner).map(|k| nabla_nabla.var(k)).collect()
}

impl ProlongationVariety {
    pub fn source(&self) -> &Variety {
        &self.source
    }

    pub fn ring(&self) -> &PolyRing {
        &self.ring
    }

    pub fn ideal(&self) -> &Ideal {
        &self.ideal
    }

    pub fn generators(&self) -> &[Poly] {
        self.ideal.generators()
    }

    /// `∇(V)` as a variety in its own right, ready to be prolonged again.
    pub fn as_variety(&self) -> Result<Variety> {
        Variety::new(&self.source.action, &self.ring, self.generators().to_vec())
    }

    pub fn canonical_operator(&self) -> Result<OperatorSpec> {
        canonical_operator(&self.source.action, &self.ring, self.source.dim(), self.generators().to_vec())
    }

    pub fn c_map(&self) -> Vec<Poly> {
        c_map(self.source.action.table(), &self.ring, self.source.dim())
    }
}

/// `∂_V(a) = (∂_i(a_j))`, level major.
pub fn nabla_point(v: &Variety, a: &[FieldElem]) -> Result<Vec<FieldElem>> {
    v.require_point(a)?;
    Ok(nabla_coordinates(&v.action, a))
}

fn nabla_coordinates(action: &FieldAction, a: &[FieldElem]) -> Vec<FieldElem> {
    let e = action.hopf().dim();
    let images: Vec<Vec<FieldElem>> = a.iter().map(|x| action.apply(x)).collect();
    (0..e).flat_map(|i| images.iter().map(move |im| im[i].clone())).collect()
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct L2Report {
    pub nabla_point: Vec<FieldElem>,
    /// `∂_{∇V}(∂_V(a))`.
    pub lhs: Vec<FieldElem>,
    /// `c_V(∂_V(a))`.
    pub rhs: Vec<FieldElem>,
    pub on_prolongation: bool,
    pub holds: bool,
}

/// Compares `∂_{∇V}∘∂_V` with `c_V∘∂_V` at `a`.
pub fn check_l2(v: &Variety, a: &[FieldElem]) -> Result<L2Report> {
    v.require_point(a)?;
    let b = nabla_coordinates(&v.action, a);
    let lhs = nabla_coordinates(&v.action, &b);
    let table = v.action.table();
    let (e, n) = (table.dim(), v.dim());
    let field = v.action.field();
    let mut rhs = Vec::with_capacity(n * e * e);
    for i in 0..e {
        for l in 0..e {
            for j in 0..n {
                rhs.push(table.comult_terms(i, l).iter().fold(field.zero(), |acc, (s, c)| &acc + &(&b[s * n + j] * c)));
            }
        }
    }
    let nabla = prolongation_ideal(v)?;
    let mut on_prolongation = true;
    for g in nabla.generators() {
        if !g.evaluate(&b)?.is_zero() {
            on_prolongation = false;
        }
    }
    Ok(L2Report { holds: lhs == rhs, nabla_point: b, lhs, rhs, on_prolongation })
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Certificate {
    pub generator: String,
    pub normal_form: String,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct AxiomReport {
    #[serde(rename = "W_in_nablaV")]
    pub w_in_nabla_v: bool,
    #[serde(rename = "cW_in_nablaW")]
    pub cw_in_nabla_w: bool,
    /// Normal forms modulo `I(W)` of the generators of `I(∇V)`.
    pub nabla_v_certificates: Vec<Certificate>,
    /// Normal forms modulo `I(W)` of the pullbacks along `c_V` of the
    /// generators of `I(∇W)`.
    pub c_certificates: Vec<Certificate>,
    pub irreducibility: &'static str,
}

impl AxiomReport {
    pub fn passes(&self) -> bool {
        self.w_in_nabla_v && self.cw_in_nabla_w
    }
}

/// An instance `(V, W)` with `W` given by generators in the coordinates of
/// `∇(V)`.
#[derive(Clone, Debug)]
pub struct AxiomInstance {
    pub v: Variety,
    pub nabla_v: ProlongationVariety,
    pub w: Variety,
}

impl AxiomInstance {
    pub fn new(v: &Variety, w_generators: Vec<Poly>) -> Result<Self> {
        let nabla_v = prolongation_ideal(v)?;
        if let Some(g) = w_generators.iter().find(|g| g.ring() != nabla_v.ring()) {
            return Err(Error::RingMismatch(format!("{g} is not in the coordinates of the prolongation")));
        }
        let w = Variety::new(&v.action, nabla_v.ring(), w_generators)?;
        if w.ideal.is_unit()? {
            return Err(Error::EmptyVariety);
        }
        Ok(AxiomInstance { v: v.clone(), nabla_v, w })
    }
}

fn certify(ideal: &Ideal, polys: &[Poly], labels: &[Poly]) -> Result<(bool, Vec<Certificate>)> {
    let mut all = true;
    let mut certs = Vec::with_capacity(polys.len());
    for (p, label) in polys.iter().zip(labels) {
        let nf = ideal.normal_form(p)?;
        all &= nf.is_zero();
        certs.push(Certificate { generator: label.display_with(REDUCTION_ORDER), normal_form: nf.display_with(REDUCTION_ORDER) });
    }
    Ok((all, certs))
}

pub fn check_axiom_instance(instance: &AxiomInstance) -> Result<AxiomReport> {
    let w = &instance.w;
    let nv = instance.nabla_v.generators();
    let (w_in, nabla_v_certificates) = certify(w.ideal(), nv, nv)?;
    let nabla_w = prolongation_ideal(w)?;
    let c = instance.nabla_v.c_map();
    let pulled: Vec<Poly> = nabla_w.generators().iter().map(|g| g.substitute(&c)).collect::<Result<_>>()?;
    let (cw_in, c_certificates) = certify(w.ideal(), &pulled, nabla_w.generators())?;
    Ok(AxiomReport {
        w_in_nabla_v: w_in,
        cw_in_nabla_w: cw_in,
        nabla_v_certificates,
        c_certificates,
        irreducibility: "assumed",
    })
}

#[derive(Clone, Debug)]
pub struct GenericPoint {
    /// The operator `∂′` on `K[W]`.
    pub spec: OperatorSpec,
    pub report: OperatorReport,
    /// Normal forms of the generators of `I(W)` at `∂′_V(b)`.
    pub mainprop2: Vec<Certificate>,
}

impl GenericPoint {
    pub fn passes(&self) -> bool {
        self.report.passes() && self.mainprop2.iter().all(|c| c.normal_form == "0")
    }
}

/// The structure on `K[W]` obtained from `c_V` restricted to `W`:
/// `∂′_i(X_j^{(l)})` is the `(i, (l, j))` coordinate of `c_V` reduced
/// modulo `I(W)`.
pub fn generic_point_operator(instance: &AxiomInstance) -> Result<GenericPoint> {
    let report = check_axiom_instance(instance)?;
    if !report.passes() {
        return Err(Error::ChecksNotPassed(format!(
            "W_in_nablaV = {}, cW_in_nablaW = {}",
            report.w_in_nabla_v, report.cw_in_nabla_w
        )));
    }
    let w = &instance.w;
    let ring = w.ring();
    let n = instance.v.dim();
    let e = instance.v.order();
    let c = instance.nabla_v.c_map();
    let mut images = vec![Vec::with_capacity(e); n * e];
    for i in 0..e {
        for k in 0..n * e {
            images[k].push(w.ideal().normal_form(&c[i * n * e + k])?);
        }
    }
    let spec = OperatorSpec::on_algebra(w.action.clone(), ring, w.generators().to_vec(), images)?.with_order(REDUCTION_ORDER)?;
    let op_report = spec.check()?;

    // b = (X_j^{(0)}), and ∂′_V(b) has coordinate (i, j) equal to ∂′_i(X_j^{(0)})
    let point: Vec<Poly> = (0..e).flat_map(|i| (0..n).map(move |j| (i, j))).map(|(i, j)| spec.images()[j][i].clone()).collect();
    let mut mainprop2 = Vec::new();
    for g in w.generators() {
        let nf = w.ideal().normal_form(&g.substitute(&point)?)?;
        mainprop2.push(Certificate { generator: g.display_with(REDUCTION_ORDER), normal_form: nf.display_with(REDUCTION_ORDER) });
    }
    Ok(GenericPoint { spec, report: op_report, mainprop2 })
}
