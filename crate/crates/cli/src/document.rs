//! The JSON problem document.

use std::collections::BTreeMap;

use serde::Deserialize;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProblemDocument {
    pub schema_version: u32,
    #[serde(default)]
    pub fields: BTreeMap<String, FieldDecl>,
    #[serde(default)]
    pub hopf: BTreeMap<String, HopfDecl>,
    #[serde(default)]
    pub operators: BTreeMap<String, OperatorDecl>,
    #[serde(default)]
    pub varieties: BTreeMap<String, VarietyDecl>,
    #[serde(default)]
    pub commands: BTreeMap<String, CommandArgs>,
}

/// A simple extension `base[generator]/(minpoly)`; `QQ` and `GF(p)` need no
/// declaration.
#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FieldDecl {
    pub base: String,
    pub generator: String,
    pub minpoly: String,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HopfDecl {
    pub builtin: Option<Builtin>,
    pub raw: Option<RawDecl>,
    pub product: Option<[String; 2]>,
    pub field: Option<String>,
    pub group: Option<GroupDecl>,
    pub p: Option<u64>,
    pub m: Option<u32>,
    pub n: Option<usize>,
    /// Applied in this order after construction.
    pub base_change: Option<String>,
    pub matrix: Option<Vec<Vec<String>>>,
    pub new_basis: Option<Vec<Vec<String>>>,
    #[serde(default)]
    pub good_basis: bool,
    pub basis_names: Option<Vec<String>>,
}

#[derive(Clone, Copy, Debug, Deserialize, PartialEq, Eq)]
#[serde(rename_all = "snake_case")]
pub enum Builtin {
    Trivial,
    ConstantGroup,
    TruncatedAdditive,
    MultiplicativeKernel,
    RootsOfUnity,
}

#[derive(Debug, Deserialize)]
#[serde(rename_all = "snake_case", deny_unknown_fields)]
pub enum GroupDecl {
    Cyclic(usize),
    Symmetric(usize),
    Klein,
    Table(Vec<Vec<usize>>),
    Product(Box<GroupDecl>, Box<GroupDecl>),
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RawDecl {
    pub basis_names: Vec<String>,
    pub mult: Vec<Vec<Vec<String>>>,
    pub comult: Vec<Vec<Vec<String>>>,
    pub counit: Vec<String>,
    pub unit: Vec<String>,
    pub antipode: Option<Vec<Vec<String>>>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OperatorDecl {
    pub hopf: String,
    pub field: String,
    #[serde(default)]
    pub images: BTreeMap<String, Vec<String>>,
    pub ring: Option<RingDecl>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RingDecl {
    pub vars: Vec<String>,
    #[serde(default)]
    pub relations: Vec<String>,
    pub images: BTreeMap<String, Vec<String>>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct VarietyDecl {
    pub operator: String,
    pub vars: Vec<String>,
    #[serde(default)]
    pub generators: Vec<String>,
}

/// Arguments of one command; which keys are required depends on the command.
#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CommandArgs {
    pub hopf: Option<String>,
    pub operator: Option<String>,
    pub variety: Option<String>,
    #[serde(rename = "W")]
    pub w: Option<Vec<String>>,
    pub matrix: Option<Vec<Vec<String>>>,
    pub new_basis: Option<Vec<Vec<String>>>,
    pub points: Option<Vec<Vec<String>>>,
    pub random_points: Option<usize>,
    pub samples: Option<usize>,
}
