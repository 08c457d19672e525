//! Splitting an action of `𝔤₁ × 𝔤₂` into the actions of the two factors.

use serde::Serialize;

use super::{FieldAction, OperatorReport, OperatorSpec};
use crate::error::{Error, Result};
use crate::field::FieldElem;
use crate::poly::Poly;

/// A pair `(i, j)` and generator on which `∂_{(i,j)}` differs from the
/// composite of the factor operators taken in the order `first`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CommutationFailure {
    pub i: usize,
    pub j: usize,
    pub generator: String,
    pub first: Factor,
    pub composite: String,
    pub expected: String,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Factor {
    Left,
    Right,
}

#[derive(Clone, Debug)]
pub struct Decomposition {
    pub left: OperatorSpec,
    pub right: OperatorSpec,
    pub left_report: OperatorReport,
    pub right_report: OperatorReport,
    pub commutation: Vec<CommutationFailure>,
}

impl Decomposition {
    pub fn passes(&self) -> bool {
        self.left_report.passes() && self.right_report.passes() && self.commutation.is_empty()
    }
}

/// Restricts `∂` along the counits: `∂¹_i = Σ_j π₂(b'_j)·∂_{(i,j)}` and
/// `∂²_j = Σ_i π₁(b_i)·∂_{(i,j)}`, then checks `∂_{(i,j)} = ∂¹_i∘∂²_j =
/// ∂²_j∘∂¹_i` on generators.
pub fn decompose_product_action(spec: &OperatorSpec) -> Result<Decomposition> {
    let layout = spec.hopf().layout().ok_or(Error::NotAProduct)?;
    let (h1, h2) = (&*layout.left, &*layout.right);
    let (e1, e2) = (h1.dim(), h2.dim());
    let field = spec.field();
    let pi1: Vec<FieldElem> = h1.counit().iter().map(|x| field.embed(x)).collect::<Result<_>>()?;
    let pi2: Vec<FieldElem> = h2.counit().iter().map(|x| field.embed(x)).collect::<Result<_>>()?;
    let ring = spec.ring();

    let restrict_left = |im: &[Poly]| -> Vec<Poly> {
        (0..e1).map(|i| (0..e2).fold(ring.zero(), |acc, j| acc.add(&im[i * e2 + j].scale(&pi2[j])))).collect()
    };
    let restrict_right = |im: &[Poly]| -> Vec<Poly> {
        (0..e2).map(|j| (0..e1).fold(ring.zero(), |acc, i| acc.add(&im[i * e2 + j].scale(&pi1[i])))).collect()
    };
    let consts = |im: &[FieldElem]| im.iter().map(|x| ring.constant(x.clone())).collect::<Vec<_>>();
    let unconst = |im: Vec<Poly>| im.into_iter().map(|p| p.as_constant().unwrap()).collect::<Vec<_>>();

    let field_images = spec.action().images();
    let build = |h: &crate::hopf::HopfData, restrict: &dyn Fn(&[Poly]) -> Vec<Poly>| -> Result<OperatorSpec> {
        let images: Vec<(String, Vec<FieldElem>)> =
            field_images.iter().map(|(n, im)| (n.clone(), unconst(restrict(&consts(im))))).collect();
        let action = FieldAction::new(h, field, &images)?;
        if spec.is_field() {
            Ok(OperatorSpec::on_field(action))
        } else {
            let var_images = spec.images().iter().map(|im| restrict(im)).collect();
            OperatorSpec::on_algebra(action, ring, spec.ideal().generators().to_vec(), var_images)
        }
    };
    let left = build(h1, &restrict_left)?;
    let right = build(h2, &restrict_right)?;

    let mut generators: Vec<(String, Vec<Poly>)> =
        field_images.iter().map(|(n, im)| (n.clone(), consts(im))).collect();
    for (v, im) in ring.vars().iter().zip(spec.images()) {
        generators.push((v.clone(), im.clone()));
    }
    let reduce = |f: &Poly| -> Result<Poly> {
        if spec.ideal().generators().is_empty() {
            Ok(f.clone())
        } else {
            spec.ideal().normal_form(f)
        }
    };
    let mut commutation = Vec::new();
    for (name, image) in &generators {
        let l_img = restrict_left(image);
        let r_img = restrict_right(image);
        let l_then: Vec<Vec<Poly>> = l_img.iter().map(|p| right.extend(p)).collect::<Result<_>>()?;
        let r_then: Vec<Vec<Poly>> = r_img.iter().map(|p| left.extend(p)).collect::<Result<_>>()?;
        for i in 0..e1 {
            for j in 0..e2 {
                let expected = &image[i * e2 + j];
                // ∂²_j(∂¹_i(g)) applies the left factor first
                for (first, composite) in [(Factor::Left, &l_then[i][j]), (Factor::Right, &r_then[j][i])] {
                    if !reduce(&composite.sub(expected))?.is_zero() {
                        commutation.push(CommutationFailure {
                            i,
                            j,
                            generator: name.clone(),
                            first,
                            composite: reduce(composite)?.to_string(),
                            expected: reduce(expected)?.to_string(),
                        });
                    }
                }
            }
        }
    }
    Ok(Decomposition {
        left_report: left.check()?,
        right_report: right.check()?,
        left,
        right,
        commutation,
    })
}
