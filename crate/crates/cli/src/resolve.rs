//! Turning declarations into library objects.

use std::collections::BTreeMap;

use gscheme::hopf::{
    build_hopf, constant_group, multiplicative_kernel, roots_of_unity, trivial, truncated_additive, CayleyTable, HopfData,
    RawHopf,
};
use gscheme::operators::{FieldAction, OperatorSpec};
use gscheme::parse::{parse_elem, parse_poly, parse_univariate};
use gscheme::prolongation::Variety;
use gscheme::{Field, FieldElem, Matrix, Poly, PolyRing};

use crate::document::{Builtin, GroupDecl, HopfDecl, ProblemDocument, SCHEMA_VERSION};
use crate::CliError;

pub struct Resolver<'a> {
    doc: &'a ProblemDocument,
    fields: BTreeMap<String, Field>,
    hopf: BTreeMap<String, HopfData>,
    visiting: Vec<String>,
}

fn malformed(msg: impl Into<String>) -> CliError {
    CliError::Malformed(msg.into())
}

impl<'a> Resolver<'a> {
    pub fn new(doc: &'a ProblemDocument) -> Result<Self, CliError> {
        if doc.schema_version != SCHEMA_VERSION {
            return Err(malformed(format!("unsupported schema_version {}, expected {SCHEMA_VERSION}", doc.schema_version)));
        }
        Ok(Resolver { doc, fields: BTreeMap::new(), hopf: BTreeMap::new(), visiting: Vec::new() })
    }

    fn enter(&mut self, kind: &str, name: &str) -> Result<(), CliError> {
        let key = format!("{kind}:{name}");
        if self.visiting.contains(&key) {
            return Err(malformed(format!("cyclic reference through {kind} {name}")));
        }
        self.visiting.push(key);
        Ok(())
    }

    pub fn field(&mut self, name: &str) -> Result<Field, CliError> {
        if let Some(f) = self.fields.get(name) {
            return Ok(f.clone());
        }
        if name == "QQ" {
            return Ok(Field::rationals());
        }
        if let Some(p) = name.strip_prefix("GF(").and_then(|s| s.strip_suffix(')')) {
            let p: u64 = p.parse().map_err(|_| malformed(format!("bad prime field {name}")))?;
            return Ok(Field::prime(p)?);
        }
        let decl = self.doc.fields.get(name).ok_or_else(|| malformed(format!("unknown field {name}")))?;
        self.enter("field", name)?;
        let base = self.field(&decl.base)?;
        let minpoly = parse_univariate(&base, &decl.generator, &decl.minpoly)?;
        let f = base.extension(&decl.generator, minpoly)?;
        self.visiting.pop();
        self.fields.insert(name.to_string(), f.clone());
        Ok(f)
    }

    pub fn hopf(&mut self, name: &str) -> Result<HopfData, CliError> {
        if let Some(h) = self.hopf.get(name) {
            return Ok(h.clone());
        }
        let decl = self.doc.hopf.get(name).ok_or_else(|| malformed(format!("unknown Hopf algebra {name}")))?;
        self.enter("hopf", name)?;
        let h = self.build_hopf(decl)?;
        self.visiting.pop();
        self.hopf.insert(name.to_string(), h.clone());
        Ok(h)
    }

    fn build_hopf(&mut self, decl: &HopfDecl) -> Result<HopfData, CliError> {
        let given = [decl.builtin.is_some(), decl.raw.is_some(), decl.product.is_some()];
        if given.iter().filter(|x| **x).count() != 1 {
            return Err(malformed("a Hopf declaration needs exactly one of builtin, raw, product"));
        }
        let field = || decl.field.clone().ok_or_else(|| malformed("missing field"));
        let mut h = if let Some(b) = decl.builtin {
            let f = self.field(&field()?)?;
            let need = |x: Option<u64>, what: &str| x.ok_or_else(|| malformed(format!("{b:?} needs {what}")));
            match b {
                Builtin::Trivial => trivial(&f),
                Builtin::ConstantGroup => {
                    let g = decl.group.as_ref().ok_or_else(|| malformed("constant_group needs group"))?;
                    constant_group(&f, &group(g)?)?
                }
                Builtin::TruncatedAdditive => {
                    truncated_additive(&f, need(decl.p, "p")?, decl.m.ok_or_else(|| malformed("truncated_additive needs m"))?)?
                }
                Builtin::MultiplicativeKernel => multiplicative_kernel(&f, need(decl.p, "p")?)?,
                Builtin::RootsOfUnity => roots_of_unity(&f, decl.n.ok_or_else(|| malformed("roots_of_unity needs n"))?)?,
            }
        } else if let Some(raw) = &decl.raw {
            let f = self.field(&field()?)?;
            let vec = |v: &[String]| elems(&f, v);
            let cube = |c: &[Vec<Vec<String>>]| c.iter().map(|r| r.iter().map(|x| vec(x)).collect()).collect::<Result<Vec<Vec<_>>, _>>();
            build_hopf(RawHopf {
                field: f.clone(),
                basis_names: raw.basis_names.clone(),
                mult: cube(&raw.mult)?,
                comult: cube(&raw.comult)?,
                counit: vec(&raw.counit)?,
                unit: vec(&raw.unit)?,
                antipode: raw.antipode.as_ref().map(|s| s.iter().map(|r| vec(r)).collect()).transpose()?,
            })?
        } else {
            let [a, b] = decl.product.as_ref().unwrap();
            let (a, b) = (self.hopf(a)?, self.hopf(b)?);
            a.product(&b)?
        };
        if let Some(k) = &decl.base_change {
            h = h.base_change(&self.field(k)?)?;
        }
        if decl.matrix.is_some() && decl.new_basis.is_some() {
            return Err(malformed("give either matrix or new_basis, not both"));
        }
        if let Some(m) = &decl.matrix {
            h = h.change_basis(&matrix(h.field(), m)?)?;
        }
        if let Some(nb) = &decl.new_basis {
            h = h.change_basis_to(&rows(h.field(), nb)?)?.0;
        }
        if decl.good_basis {
            h = h.good_basis()?.0;
        }
        if let Some(names) = &decl.basis_names {
            h = h.with_basis_names(names.clone())?;
        }
        Ok(h)
    }

    pub fn operator(&mut self, name: &str) -> Result<OperatorSpec, CliError> {
        let decl = self.doc.operators.get(name).ok_or_else(|| malformed(format!("unknown operator {name}")))?;
        let h = self.hopf(&decl.hopf)?;
        let k = self.field(&decl.field)?;
        let images: Vec<(String, Vec<FieldElem>)> =
            decl.images.iter().map(|(g, v)| Ok((g.clone(), elems(&k, v)?))).collect::<Result<_, CliError>>()?;
        let action = FieldAction::new(&h, &k, &images)?;
        let Some(ring) = &decl.ring else { return Ok(OperatorSpec::on_field(action)) };
        let r = PolyRing::new(&k, ring.vars.clone())?;
        if let Some(extra) = ring.images.keys().find(|v| r.var_index(v).is_none()) {
            return Err(malformed(format!("image given for unknown variable {extra}")));
        }
        let images = ring
            .vars
            .iter()
            .map(|v| {
                let im = ring.images.get(v).ok_or_else(|| malformed(format!("missing image for variable {v}")))?;
                polys(&r, im)
            })
            .collect::<Result<_, _>>()?;
        Ok(OperatorSpec::on_algebra(action, &r, polys(&r, &ring.relations)?, images)?)
    }

    pub fn variety(&mut self, name: &str) -> Result<Variety, CliError> {
        let decl = self.doc.varieties.get(name).ok_or_else(|| malformed(format!("unknown variety {name}")))?;
        let spec = self.operator(&decl.operator)?;
        if !spec.is_field() {
            return Err(malformed(format!("variety {name} needs an operator on a field")));
        }
        let r = PolyRing::new(spec.field(), decl.vars.clone())?;
        Ok(Variety::new(spec.action(), &r, polys(&r, &decl.generators)?)?)
    }
}

fn group(g: &GroupDecl) -> Result<CayleyTable, CliError> {
    Ok(match g {
        GroupDecl::Cyclic(n) if *n > 0 => CayleyTable::cyclic(*n),
        GroupDecl::Symmetric(n) if (1..=5).contains(n) => CayleyTable::symmetric(*n),
        GroupDecl::Cyclic(_) | GroupDecl::Symmetric(_) => return Err(malformed("group size out of range")),
        GroupDecl::Klein => CayleyTable::klein(),
        GroupDecl::Table(t) => CayleyTable::new(t.clone())?,
        GroupDecl::Product(a, b) => CayleyTable::direct_product(&group(a)?, &group(b)?),
    })
}

pub fn elems(f: &Field, xs: &[String]) -> Result<Vec<FieldElem>, CliError> {
    xs.iter().map(|x| Ok(parse_elem(f, x)?)).collect()
}

pub fn rows(f: &Field, xs: &[Vec<String>]) -> Result<Vec<Vec<FieldElem>>, CliError> {
    xs.iter().map(|r| elems(f, r)).collect()
}

pub fn matrix(f: &Field, xs: &[Vec<String>]) -> Result<Matrix, CliError> {
    Ok(Matrix::from_rows(f, rows(f, xs)?)?)
}

pub fn polys(r: &PolyRing, xs: &[String]) -> Result<Vec<Poly>, CliError> {
    xs.iter().map(|x| Ok(parse_poly(r, x)?)).collect()
}
