use std::fmt::Write as _;

use gscheme::catalog::random_element;
use gscheme::hopf::{mutation_survey, verify_bialgebra, HopfData};
use gscheme::operators::{decompose_product_action, OperatorReport, OperatorSpec, RuleTable};
use gscheme::prolongation::{
    check_axiom_instance, check_l2, generic_point_operator, nabla_ring, pi_map, prolongation_ideal, AxiomInstance,
    Certificate, Variety, REDUCTION_ORDER,
};
use gscheme::{FieldElem, Poly};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::document::{CommandArgs, ProblemDocument};
use crate::resolve::{elems, matrix, polys, rows, Resolver};
use crate::{CliError, Options};

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Command {
    HopfVerify,
    HopfAntipode,
    HopfMutate,
    Rules,
    BasisChange,
    ActionCheck,
    Constants,
    Prolong,
    CMap,
    AxiomCheck,
    GenericPoint,
    DecomposeProduct,
    L2Check,
}

impl Command {
    pub const ALL: [Command; 13] = [
        Command::HopfVerify,
        Command::HopfAntipode,
        Command::HopfMutate,
        Command::Rules,
        Command::BasisChange,
        Command::ActionCheck,
        Command::Constants,
        Command::Prolong,
        Command::CMap,
        Command::AxiomCheck,
        Command::GenericPoint,
        Command::DecomposeProduct,
        Command::L2Check,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Command::HopfVerify => "hopf-verify",
            Command::HopfAntipode => "hopf-antipode",
            Command::HopfMutate => "hopf-mutate",
            Command::Rules => "rules",
            Command::BasisChange => "basis-change",
            Command::ActionCheck => "action-check",
            Command::Constants => "constants",
            Command::Prolong => "prolong",
            Command::CMap => "c-map",
            Command::AxiomCheck => "axiom-check",
            Command::GenericPoint => "generic-point",
            Command::DecomposeProduct => "decompose-product",
            Command::L2Check => "l2-check",
        }
    }
}

pub struct Report {
    pub json: Value,
    pub text: String,
    pub passes: bool,
}

/// Mutation surveys at or above this rate pass.
const DETECTION_THRESHOLD: (usize, usize) = (99, 100);

pub fn execute(command: Command, doc: &ProblemDocument, options: Options) -> Result<Report, CliError> {
    let empty = CommandArgs::default();
    let args = doc.commands.get(command.name()).unwrap_or(&empty);
    let mut r = Resolver::new(doc)?;
    let mut report = match command {
        Command::HopfVerify => hopf_verify(&mut r, args),
        Command::HopfAntipode => hopf_antipode(&mut r, args),
        Command::HopfMutate => hopf_mutate(&mut r, args, options.seed),
        Command::Rules => rules(&mut r, args),
        Command::BasisChange => basis_change(&mut r, args),
        Command::ActionCheck => action_check(&mut r, args),
        Command::Constants => constants(&mut r, args),
        Command::Prolong => prolong(&mut r, args),
        Command::CMap => c_map(&mut r, args),
        Command::AxiomCheck => axiom_check(&mut r, args),
        Command::GenericPoint => generic_point(&mut r, args),
        Command::DecomposeProduct => decompose(&mut r, args),
        Command::L2Check => l2_check(&mut r, args, options.seed),
    }?;
    if let Value::Object(map) = &mut report.json {
        map.insert("command".into(), json!(command.name()));
        map.insert("passes".into(), json!(report.passes));
    }
    Ok(report)
}

fn required<'a>(x: &'a Option<String>, what: &str) -> Result<&'a str, CliError> {
    x.as_deref().ok_or_else(|| CliError::Malformed(format!("command needs \"{what}\"")))
}

fn strings<T: ToString>(xs: &[T]) -> Vec<String> {
    xs.iter().map(ToString::to_string).collect()
}

fn poly_strings(xs: &[Poly]) -> Vec<String> {
    xs.iter().map(|p| p.display_with(REDUCTION_ORDER)).collect()
}

/// `Σ c_k·name_k` with unit coefficients suppressed.
fn linear(terms: &[(FieldElem, &str)]) -> String {
    let mut out = String::new();
    for (c, name) in terms.iter().filter(|(c, _)| !c.is_zero()) {
        let s = c.to_string();
        let compound = s.len() > 1 && s[1..].contains(['+', '-']);
        let (neg, body) = match s.strip_prefix('-') {
            Some(rest) if !compound => (true, rest.to_string()),
            _ if compound => (false, format!("({s})")),
            _ => (false, s),
        };
        if neg {
            out.push('-');
        } else if !out.is_empty() {
            out.push('+');
        }
        if body != "1" {
            out.push_str(&body);
            out.push('*');
        }
        out.push_str(name);
    }
    if out.is_empty() {
        "0".into()
    } else {
        out
    }
}

fn hopf_json(h: &HopfData) -> Value {
    json!({
        "field": h.field().to_string(),
        "basis": h.basis_names(),
        "mult": h.mult(),
        "comult": h.comult(),
        "counit": h.counit(),
        "unit": h.unit(),
        "antipode": h.antipode(),
        "good_basis": h.is_good_basis(),
        "notes": h.notes(),
    })
}

fn hopf_text(h: &HopfData) -> String {
    let names: Vec<&str> = h.basis_names().iter().map(String::as_str).collect();
    let e = h.dim();
    let mut out = format!("basis: {} over {}\n", names.join(", "), h.field());
    out.push_str("multiplication:\n");
    for i in 0..e {
        for j in 0..e {
            let terms: Vec<(FieldElem, &str)> = (0..e).map(|l| (h.mult().get(i, j, l).clone(), names[l])).collect();
            let _ = writeln!(out, "  {}·{} = {}", names[i], names[j], linear(&terms));
        }
    }
    out.push_str("comultiplication:\n");
    for l in 0..e {
        let pairs: Vec<String> = (0..e).flat_map(|i| (0..e).map(move |j| (i, j))).map(|(i, j)| format!("{}⊗{}", names[i], names[j])).collect();
        let terms: Vec<(FieldElem, &str)> = (0..e * e).map(|k| (h.comult().get(k / e, k % e, l).clone(), pairs[k].as_str())).collect();
        let _ = writeln!(out, "  μ({}) = {}", names[l], linear(&terms));
    }
    let _ = writeln!(out, "counit: ({})", strings(h.counit()).join(", "));
    let _ = writeln!(out, "unit: 1 = {}", linear(&h.unit().iter().cloned().zip(names.iter().copied()).collect::<Vec<_>>()));
    for n in h.notes() {
        let _ = writeln!(out, "note: {n}");
    }
    out
}

fn hopf_verify(r: &mut Resolver, args: &CommandArgs) -> Result<Report, CliError> {
    let name = required(&args.hopf, "hopf")?;
    let h = r.hopf(name)?;
    let report = verify_bialgebra(&h);
    let antipode = if h.antipode().is_some() { Ok(h.clone()) } else { h.solve_antipode() };
    let antipode_exists = antipode.is_ok();
    let passes = report.all_pass() && antipode_exists;
    let laws: Vec<Value> = report
        .laws
        .iter()
        .map(|l| json!({ "law": l.law, "holds": l.violations.is_empty(), "violations": l.violations }))
        .collect();
    let mut text = format!("hopf-verify {name}: dimension {}, good basis: {}\n", h.dim(), report.good_basis);
    for l in &report.laws {
        let status = if l.violations.is_empty() { "ok".to_string() } else { format!("FAILS at {} index tuples, first {:?}", l.violations.len(), l.violations[0]) };
        let _ = writeln!(text, "  {}: {status}", serde_json::to_value(l.law).unwrap().as_str().unwrap());
    }
    let _ = writeln!(text, "  antipode exists: {antipode_exists}");
    for n in h.notes() {
        let _ = writeln!(text, "  note: {n}");
    }
    Ok(Report {
        json: json!({
            "hopf": name,
            "field": h.field().to_string(),
            "dimension": h.dim(),
            "good_basis": report.good_basis,
            "laws": laws,
            "antipode_exists": antipode_exists,
            "notes": h.notes(),
        }),
        text,
        passes,
    })
}

fn hopf_antipode(r: &mut Resolver, args: &CommandArgs) -> Result<Report, CliError> {
    let name = required(&args.hopf, "hopf")?;
    let h = r.hopf(name)?;
    match h.solve_antipode() {
        Ok(s) => {
            let m = s.antipode().unwrap();
            let names = s.basis_names();
            let mut text = format!("antipode of {name}:\n");
            for l in 0..s.dim() {
                let terms: Vec<(FieldElem, &str)> = (0..s.dim()).map(|k| (m[(k, l)].clone(), names[k].as_str())).collect();
                let _ = writeln!(text, "  S({}) = {}", names[l], linear(&terms));
            }
            Ok(Report { json: json!({ "hopf": name, "antipode": m }), text, passes: true })
        }
        Err(gscheme::Error::NoAntipode) => Ok(Report {
            json: json!({ "hopf": name, "antipode": null, "failure": "no antipode: S*id = id*S = u∘π has no solution" }),
            text: format!("{name}: no antipode exists\n"),
            passes: false,
        }),
        Err(e) => Err(e.into()),
    }
}

fn hopf_mutate(r: &mut Resolver, args: &CommandArgs, seed: u64) -> Result<Report, CliError> {
    let name = required(&args.hopf, "hopf")?;
    let h = r.hopf(name)?;
    let e = h.dim();
    let total = 2 * e * e * e + 2 * e;
    let samples = args.samples.unwrap_or(total);
    let survey = mutation_survey(&h, samples, seed);
    let (num, den) = DETECTION_THRESHOLD;
    let passes = survey.detected * den >= survey.sampled * num;
    let text = format!(
        "hopf-mutate {name} (seed {seed}): {} of {} mutations detected, {} degenerate\n{}",
        survey.detected,
        survey.sampled,
        survey.degenerate.len(),
        survey.degenerate.iter().map(|m| format!("  degenerate: {:?} {:?}\n", m.tensor, m.index)).collect::<String>()
    );
    Ok(Report {
        json: json!({
            "hopf": name,
            "seed": seed,
            "population": total,
            "sampled": survey.sampled,
            "detected": survey.detected,
            "detection_rate": format!("{}/{}", survey.detected, survey.sampled),
            "threshold": format!("{num}/{den}"),
            "degenerate": survey.degenerate,
        }),
        text,
        passes,
    })
}

fn rules(r: &mut Resolver, args: &CommandArgs) -> Result<Report, CliError> {
    let name = required(&args.hopf, "hopf")?;
    let h = r.hopf(name)?;
    let table = RuleTable::derive(&h);
    let product: Vec<String> = table.product.iter().map(|p| table.render_product(p)).collect();
    let iterativity: Vec<String> = table.iterativity.iter().map(|p| table.render_iterativity(p)).collect();
    Ok(Report {
        json: json!({
            "hopf": name,
            "good_basis": table.good_basis,
            "product": table.product,
            "iterativity": table.iterativity,
            "product_text": product,
            "iterativity_text": iterativity,
        }),
        text: table.render_text(),
        passes: true,
    })
}

fn basis_change(r: &mut Resolver, args: &CommandArgs) -> Result<Report, CliError> {
    let name = required(&args.hopf, "hopf")?;
    let h = r.hopf(name)?;
    let (moved, m) = match (&args.matrix, &args.new_basis) {
        (Some(m), None) => {
            let m = matrix(h.field(), m)?;
            (h.change_basis(&m)?, m)
        }
        (None, Some(nb)) => h.change_basis_to(&rows(h.field(), nb)?)?,
        _ => return Err(CliError::Malformed("basis-change needs exactly one of matrix, new_basis".into())),
    };
    let inverse = m.inverse()?;
    let mut text = format!("basis-change {name}\ncoordinate transform M (∂' = M·∂):\n");
    for i in 0..m.rows() {
        let _ = writeln!(text, "  ({})", strings(m.row(i)).join(", "));
    }
    text.push_str(&hopf_text(&moved));
    Ok(Report {
        json: json!({ "hopf": name, "transform": m, "inverse": inverse, "result": hopf_json(&moved) }),
        text,
        passes: true,
    })
}

fn report_text(report: &OperatorReport) -> String {
    let mut out = String::new();
    if report.counit.is_empty() {
        out.push_str("  counit: ok\n");
    }
    for g in &report.counit {
        let _ = writeln!(out, "  counit FAILS on {g}");
    }
    if report.iterativity.is_empty() {
        out.push_str("  iterativity: ok\n");
    }
    for f in &report.iterativity {
        let _ = writeln!(out, "  iterativity FAILS: ∂{}∘∂{}({}) = {} but Σ c·∂_l = {}", f.i, f.j, f.generator, f.lhs, f.rhs);
    }
    if report.well_defined.is_empty() {
        out.push_str("  well-defined: ok\n");
    }
    for f in &report.well_defined {
        let _ = writeln!(out, "  well-definedness FAILS: component {} of {} reduces to {}", f.component, f.relation, f.normal_form);
    }
    out
}

fn images_json(spec: &OperatorSpec) -> Value {
    let mut map = serde_json::Map::new();
    for (g, im) in spec.action().images() {
        map.insert(g, json!(strings(&im)));
    }
    for (v, im) in spec.ring().vars().iter().zip(spec.images()) {
        map.insert(v.clone(), json!(poly_strings(im)));
    }
    Value::Object(map)
}

fn images_text(spec: &OperatorSpec) -> String {
    let mut out = String::new();
    for (g, im) in spec.action().images() {
        for (i, x) in im.iter().enumerate() {
            let _ = writeln!(out, "  ∂{i}({g}) = {x}");
        }
    }
    for (v, im) in spec.ring().vars().iter().zip(spec.images()) {
        for (i, p) in im.iter().enumerate() {
            let _ = writeln!(out, "  ∂{i}({v}) = {}", p.display_with(REDUCTION_ORDER));
        }
    }
    out
}

fn action_check(r: &mut Resolver, args: &CommandArgs) -> Result<Report, CliError> {
    let name = required(&args.operator, "operator")?;
    let spec = r.operator(name)?;
    let report = spec.check()?;
    Ok(Report {
        text: format!("action-check {name}\n{}", report_text(&report)),
        passes: report.passes(),
        json: json!({ "operator": name, "report": report }),
    })
}

fn constants(r: &mut Resolver, args: &CommandArgs) -> Result<Report, CliError> {
    let name = required(&args.operator, "operator")?;
    let spec = r.operator(name)?;
    let c = spec.constants()?;
    let text = format!(
        "constants of {name}: basis [{}], [K:K^g] = {}, e = {}, bound holds: {}\n",
        strings(&c.basis).join(", "),
        c.degree,
        c.order,
        c.bound_holds
    );
    Ok(Report { passes: c.bound_holds, json: json!({ "operator": name, "constants": c }), text })
}

fn prolong(r: &mut Resolver, args: &CommandArgs) -> Result<Report, CliError> {
    let name = required(&args.variety, "variety")?;
    let v = r.variety(name)?;
    let nv = prolongation_ideal(&v)?;
    let op = nv.canonical_operator()?;
    let gens = poly_strings(nv.generators());
    let mut text = format!("prolongation of {name} in {}\nI(∇V) generators:\n", nv.ring().vars().join(", "));
    for g in &gens {
        let _ = writeln!(text, "  {g}");
    }
    text.push_str("canonical operator:\n");
    text.push_str(&images_text(&op));
    Ok(Report {
        json: json!({
            "variety": name,
            "variables": nv.ring().vars(),
            "generators": gens,
            "canonical_operator": images_json(&op),
        }),
        text,
        passes: true,
    })
}

fn c_map(r: &mut Resolver, args: &CommandArgs) -> Result<Report, CliError> {
    let name = required(&args.variety, "variety")?;
    let v = r.variety(name)?;
    let nv = prolongation_ideal(&v)?;
    let c = nv.c_map();
    let e = v.action().hopf().dim();
    let nn = nabla_ring(nv.ring(), e)?;
    let back: Vec<Poly> = pi_map(&nn, nv.ring().nvars()).iter().map(|p| p.substitute(&c)).collect::<Result<_, _>>()?;
    let identity = back.iter().enumerate().all(|(k, p)| p == &nv.ring().var(k));
    let coords = poly_strings(&c);
    let mut text = format!("c_V for {name}\n");
    for (t, p) in nn.vars().iter().zip(&coords) {
        let _ = writeln!(text, "  {t} ↦ {p}");
    }
    let _ = writeln!(text, "π∘c = id: {identity}");
    Ok(Report {
        json: json!({
            "variety": name,
            "source_variables": nv.ring().vars(),
            "target_variables": nn.vars(),
            "coordinates": coords,
            "pi_c_identity": identity,
        }),
        text,
        passes: identity,
    })
}

fn instance(r: &mut Resolver, args: &CommandArgs) -> Result<(String, Variety, AxiomInstance), CliError> {
    let name = required(&args.variety, "variety")?.to_string();
    let v = r.variety(&name)?;
    let w = args.w.as_ref().ok_or_else(|| CliError::Malformed("command needs \"W\"".into()))?;
    let e = v.action().hopf().dim();
    let ring = nabla_ring(v.ring(), e)?;
    let w = polys(&ring, w)?;
    let inst = AxiomInstance::new(&v, w)?;
    Ok((name, v, inst))
}

fn certificates_text(label: &str, certs: &[Certificate]) -> String {
    let mut out = String::new();
    for c in certs {
        let mark = if c.normal_form == "0" { "" } else { "  <- nonzero" };
        let _ = writeln!(out, "  {label} {} ≡ {}{mark}", c.generator, c.normal_form);
    }
    out
}

fn axiom_check(r: &mut Resolver, args: &CommandArgs) -> Result<Report, CliError> {
    let (name, _, inst) = instance(r, args)?;
    let report = check_axiom_instance(&inst)?;
    let text = format!(
        "axiom-check {name}\n  W_in_nablaV: {}\n{}  cW_in_nablaW: {}\n{}  irreducibility: {}\n",
        report.w_in_nabla_v,
        certificates_text("I(∇V):", &report.nabla_v_certificates),
        report.cw_in_nabla_w,
        certificates_text("c*I(∇W):", &report.c_certificates),
        report.irreducibility,
    );
    Ok(Report { passes: report.passes(), json: json!({ "variety": name, "report": report }), text })
}

fn generic_point(r: &mut Resolver, args: &CommandArgs) -> Result<Report, CliError> {
    let (name, _, inst) = instance(r, args)?;
    let gp = generic_point_operator(&inst)?;
    let text = format!(
        "generic point of W over {name}\n{}{}{}",
        images_text(&gp.spec),
        report_text(&gp.report),
        certificates_text("mainprop2:", &gp.mainprop2)
    );
    Ok(Report {
        passes: gp.passes(),
        json: json!({
            "variety": name,
            "operator": images_json(&gp.spec),
            "report": gp.report,
            "mainprop2": gp.mainprop2,
        }),
        text,
    })
}

fn decompose(r: &mut Resolver, args: &CommandArgs) -> Result<Report, CliError> {
    let name = required(&args.operator, "operator")?;
    let spec = r.operator(name)?;
    let d = decompose_product_action(&spec)?;
    let mut text = format!("decompose-product {name}\nleft factor:\n{}{}", images_text(&d.left), report_text(&d.left_report));
    let _ = write!(text, "right factor:\n{}{}", images_text(&d.right), report_text(&d.right_report));
    if d.commutation.is_empty() {
        text.push_str("commutation: ok\n");
    }
    for f in &d.commutation {
        let _ = writeln!(
            text,
            "commutation FAILS at ({}, {}) on {}: {:?} first gives {}, expected {}",
            f.i, f.j, f.generator, f.first, f.composite, f.expected
        );
    }
    Ok(Report {
        passes: d.passes(),
        json: json!({
            "operator": name,
            "left": { "images": images_json(&d.left), "report": d.left_report },
            "right": { "images": images_json(&d.right), "report": d.right_report },
            "commutation": d.commutation,
        }),
        text,
    })
}

/// Draws points of `V` uniformly from `𝔸ⁿ(K)` and keeps those on `V`.
fn random_points(v: &Variety, count: usize, seed: u64) -> Result<Vec<Vec<FieldElem>>, CliError> {
    let field = v.action().field();
    if field.characteristic() == 0 {
        return Err(CliError::Malformed("random points need a finite carrier field".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    let mut attempts = 0;
    while out.len() < count && attempts < 1000 * count {
        attempts += 1;
        let a: Vec<FieldElem> = (0..v.dim()).map(|_| random_element(field, &mut rng)).collect::<Result<_, _>>()?;
        if v.contains_point(&a)? {
            out.push(a);
        }
    }
    Ok(out)
}

fn l2_check(r: &mut Resolver, args: &CommandArgs, seed: u64) -> Result<Report, CliError> {
    let name = required(&args.variety, "variety")?;
    let v = r.variety(name)?;
    let mut points = match &args.points {
        Some(ps) => ps.iter().map(|p| elems(v.action().field(), p)).collect::<Result<Vec<_>, _>>()?,
        None => Vec::new(),
    };
    if let Some(n) = args.random_points {
        points.extend(random_points(&v, n, seed)?);
    }
    if points.is_empty() {
        return Err(CliError::Malformed("l2-check needs points or random_points".into()));
    }
    let mut results = Vec::new();
    let mut text = format!("l2-check {name} (seed {seed})\n");
    let mut passes = true;
    for a in &points {
        let rep = check_l2(&v, a)?;
        passes &= rep.holds && rep.on_prolongation;
        let _ = writeln!(
            text,
            "  a = ({}): ∂_V(a) on ∇V: {}, ∂_∇V∘∂_V = c_V∘∂_V: {}",
            strings(a).join(", "),
            rep.on_prolongation,
            rep.holds
        );
        results.push(json!({ "point": a, "report": rep }));
    }
    Ok(Report { json: json!({ "variety": name, "seed": seed, "points": results }), text, passes })
}
