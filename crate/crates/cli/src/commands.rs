use std::collections::BTreeMap;

use serde::Serialize;
use serde_json::json;

use lca_duality::algebra::{atoms_of, check_boolean_laws, ultrafilters, BooleanAlgebra, Mask, Powerset, Ultrafilter};
use lca_duality::contact::{check_contact_axioms, check_lca, check_nca, Contact, FiniteLca, Lca, SampleConfig};
use lca_duality::descriptor::{AlgebraDesc, ContactDesc, ElementDesc, HomDesc, LcaDesc, SpaceDesc};
use lca_duality::duality::{check_morphism_conditions, psi_a_morphism, psi_a_object, round_trip_lca, round_trip_space, DualSpace};
use lca_duality::error::{Error, Result};
use lca_duality::extension::proximity::{
    check_admissible, reconstruct_local_proximity, restrict_local_proximity, LocalProximitySpace, RcLca,
};
use lca_duality::extension::wallman::wallman_check;
use lca_duality::extension::{
    admissible_ncrs_finite, alexandroff_ncr, beta_ncr, compare_ncr, inf_ncr, is_admissible_ncr, sup_ncr,
};
use lca_duality::frame::{
    frame_of_delta_ideals, ib_u, iota, is_delta_ideal, open_set_dual, principal_delta_ideal, regular_closed_dual,
    DeltaIdeal, DualConstruction,
};
use lca_duality::report::{witness, Condition, ConditionReport, Provenance};
use lca_duality::space::{dual_morphism, map_properties, rc_algebra, FiniteSpace, PointSet};

use crate::dot::extension_lattice;
use crate::request::{field, Request};
use crate::Verdict;

pub struct Output {
    pub verdict: Verdict,
    pub dot: Option<String>,
}

impl From<Verdict> for Output {
    fn from(verdict: Verdict) -> Self {
        Output { verdict, dot: None }
    }
}

const EX: Provenance = Provenance::Exhaustive;

fn points(space: &FiniteSpace, s: PointSet) -> Vec<String> {
    atoms_of(s).map(|i| space.labels()[i].clone()).collect()
}

fn lca(req: &Request) -> Result<Lca> {
    req.lca_desc()?.build()
}

fn finite_lca(req: &Request) -> Result<FiniteLca> {
    req.lca_desc()?.build_finite()
}

fn describe_lca(l: &FiniteLca) -> LcaDesc {
    LcaDesc::describe(&Lca::Finite(l.clone()))
}

fn mask(p: &Powerset, e: &ElementDesc) -> Result<Mask> {
    e.build_mask(p)
}

/// The relation a command acts on: the top-level `contact` when it is not
/// part of the LCA, otherwise the LCA's own relation.
fn relation(req: &Request, l: &Lca) -> Result<Contact> {
    match &req.contact {
        Some(c) if !req.contact_is_lca_part() => c.build(&l.algebra(), Some(l)),
        _ => Ok(l.rho()),
    }
}

fn algebra(req: &Request) -> Result<BooleanAlgebra> {
    match (&req.algebra, &req.lca) {
        (Some(a), _) => a.build(),
        (None, Some(l)) => l.algebra.build(),
        (None, None) => Err(Error::Input("the request needs an `algebra` field".into())),
    }
}

fn describe_ultrafilter(u: &Ultrafilter) -> String {
    match u {
        Ultrafilter::Principal { atom } => format!("principal at {atom}"),
        Ultrafilter::FreeCofinite => "free cofinite".into(),
        Ultrafilter::FreeResidue { residue, modulus } => format!("free at residue {residue} mod {modulus}"),
    }
}

fn check_algebra(req: &Request) -> Result<Output> {
    let alg = algebra(req)?;
    let inv = ultrafilters(&alg);
    let principal: serde_json::Value = match &alg {
        BooleanAlgebra::Powerset(p) => json!(p.labels()),
        _ => json!("every natural number"),
    };
    let result = json!({
        "algebra": AlgebraDesc::describe(&alg),
        "elements": alg.as_powerset().map(Powerset::size),
        "ultrafilters": {
            "principal": principal,
            "free": inv.free.iter().map(describe_ultrafilter).collect::<Vec<_>>(),
        },
    });
    Ok(Verdict::from_report("check-algebra", check_boolean_laws(&alg, &SampleConfig::default()), None)
        .with_result(result)
        .into())
}

fn check_relation(req: &Request, name: &str, check: fn(&Contact) -> ConditionReport) -> Result<Output> {
    let alg = algebra(req)?;
    let context = req.lca.as_ref().map(LcaDesc::build).transpose()?;
    let c = field(&req.contact, "contact")?.build(&alg, context.as_ref())?;
    Ok(Verdict::from_report(name, check(&c), None).with_result(ContactDesc::describe(&c)).into())
}

fn check_lca_cmd(req: &Request) -> Result<Output> {
    let l = lca(req)?;
    Ok(Verdict::from_report("check-lca", check_lca(&l), None).with_result(LcaDesc::describe(&l)).into())
}

fn rc_result(space: &FiniteSpace) -> Result<serde_json::Value> {
    let rc = rc_algebra(space)?;
    let atoms: BTreeMap<String, Vec<String>> = rc
        .algebra()
        .atoms()
        .map(|i| (rc.algebra().label(i).to_string(), points(space, rc.atom_sets()[i])))
        .collect();
    Ok(json!({ "lca": describe_lca(rc.lca()), "atoms": atoms }))
}

fn dualize(req: &Request) -> Result<Output> {
    if let Some(s) = &req.space {
        let space = s.build()?;
        let v = Verdict::from_report("dualize", ConditionReport::default(), None).with_result(rc_result(&space)?);
        return Ok(Output { verdict: v, dot: Some(space.to_dot("space")) });
    }
    let l = finite_lca(req)?;
    let report = check_lca(&Lca::Finite(l.clone()));
    if !report.holds_all() {
        return Ok(Verdict::from_report("dualize", report, None).into());
    }
    let dual = psi_a_object(&l)?;
    let v = Verdict::from_report("dualize", report, None).with_result(dual.summary(l.algebra()));
    Ok(Output { verdict: v, dot: Some(dual.space.to_dot("dual")) })
}

fn flags_report(props: &lca_duality::space::MapPropertyReport, names: &[&str]) -> ConditionReport {
    let mut r = ConditionReport::default();
    for (name, flag) in props.flags() {
        if names.contains(&name) {
            r.push(Condition::from_witness(name, EX, flag.witness.clone().map(|w| witness([("detail", w)]))));
        }
    }
    r
}

fn dual_map(req: &Request) -> Result<Output> {
    let f = field(&req.map, "map")?.build()?;
    let props = map_properties(&f);
    let report = flags_report(&props, &["continuous", "skeletal"]);
    if !report.holds_all() {
        return Ok(Verdict::from_report("dual-map", report, None).with_result(&props).into());
    }
    let d = dual_morphism(&f)?;
    let result = json!({
        "source": describe_lca(d.source.lca()),
        "target": describe_lca(d.target.lca()),
        "hom": HomDesc::describe(&d.hom),
        "properties": props,
    });
    Ok(Verdict::from_report("dual-map", report, None).with_result(result).into())
}

fn check_morphism(req: &Request) -> Result<Output> {
    let source = finite_lca(req)?;
    let target = field(&req.target, "target")?.build_finite()?;
    let phi = field(&req.hom, "hom")?.build(source.algebra(), target.algebra())?;
    let report = check_morphism_conditions(&phi, &source, &target)?;
    let default = vec!["EL1".to_string(), "L2".to_string()];
    let require = req.require.as_ref().unwrap_or(&default);
    if let Some(bad) = require.iter().find(|n| report.get(n).is_none()) {
        return Err(Error::Input(format!("unknown condition {bad:?}")));
    }
    let required: Vec<&str> = require.iter().map(String::as_str).collect();
    let is_morphism = report.holds("EL1") && report.holds("L2");
    let result = if is_morphism {
        let m = psi_a_morphism(&phi, &source, &target)?;
        let images: BTreeMap<String, String> = (0..m.source().n())
            .map(|x| (m.source().labels()[x].clone(), m.target().labels()[m.images()[x]].clone()))
            .collect();
        json!({ "dual_map": { "images": images, "properties": map_properties(&m) } })
    } else {
        json!({ "dual_map": null })
    };
    Ok(Verdict::from_report("check-morphism", report, Some(&required)).with_result(result).into())
}

fn round_trip(req: &Request) -> Result<Output> {
    if let Some(s) = &req.space {
        let space = s.build()?;
        let images = round_trip_space(&space)?;
        let dual = psi_a_object(rc_algebra(&space)?.lca())?;
        let map: BTreeMap<String, String> = images
            .iter()
            .enumerate()
            .map(|(x, &i)| (space.labels()[x].clone(), dual.space.labels()[i].clone()))
            .collect();
        let mut report = ConditionReport::default();
        report.push(Condition::pass("homeomorphism", EX));
        return Ok(Verdict::from_report("round-trip", report, None).with_result(json!({ "points": map })).into());
    }
    let l = finite_lca(req)?;
    let rt = round_trip_lca(&l)?;
    let result = json!({ "hom": HomDesc::describe(&rt.hom), "rc": rc_result(rt.rc.space())? });
    Ok(Verdict::from_report("round-trip", rt.report, None).with_result(result).into())
}

fn render_ideal(l: &FiniteLca, i: DeltaIdeal) -> ElementDesc {
    ElementDesc::describe_mask(l.algebra(), i.top)
}

fn frame(req: &Request) -> Result<Output> {
    let l = finite_lca(req)?;
    let dual = psi_a_object(&l)?;
    let fr = frame_of_delta_ideals(&l);
    let ideals = fr.ideals();
    let img: Vec<PointSet> = ideals.iter().map(|&i| iota(&l, &dual, i)).collect::<Result<_>>()?;
    let mut r = ConditionReport::default();
    let opens = dual.space.opens();
    let missed = opens.iter().find(|u| !img.contains(u));
    let dup = (0..img.len()).find_map(|a| (a + 1..img.len()).find(|&b| img[a] == img[b]).map(|b| (a, b)));
    let render = |a: usize| l.algebra().render(ideals[a].top);
    r.push(Condition::from_witness(
        "iota_bijective",
        EX,
        missed
            .map(|&u| witness([("open", dual.space.render(u))]))
            .or_else(|| dup.map(|(a, b)| witness([("I", render(a)), ("J", render(b))]))),
    ));
    let pairs = || (0..ideals.len()).flat_map(|a| (0..ideals.len()).map(move |b| (a, b)));
    let order = pairs().find(|&(a, b)| fr.le(ideals[a], ideals[b]) != (img[a] & !img[b] == 0));
    r.push(Condition::from_witness("iota_order", EX, order.map(|(a, b)| witness([("I", render(a)), ("J", render(b))]))));
    let lattice = pairs().find(|&(a, b)| {
        iota(&l, &dual, fr.join(ideals[a], ideals[b])).ok() != Some(img[a] | img[b])
            || iota(&l, &dual, fr.meet(ideals[a], ideals[b])).ok() != Some(img[a] & img[b])
    });
    r.push(Condition::from_witness(
        "iota_frame",
        EX,
        lattice.map(|(a, b)| witness([("I", render(a)), ("J", render(b))])),
    ));
    let inverse = (0..ideals.len()).find(|&a| ib_u(&l, &dual, img[a]).ok() != Some(ideals[a]));
    r.push(Condition::from_witness("ib_u_inverse", EX, inverse.map(|a| witness([("I", render(a))]))));
    let principal: Vec<PointSet> = l
        .algebra()
        .elements()
        .map(|a| iota(&l, &dual, principal_delta_ideal(&l, a)))
        .collect::<Result<_>>()?;
    let ro_miss = (0..=dual.space.full())
        .find(|&u| dual.space.is_regular_open(u) != principal.contains(&u));
    r.push(Condition::from_witness(
        "principal_regular_open",
        EX,
        ro_miss.map(|u| witness([("open", dual.space.render(u))])),
    ));
    let result: Vec<serde_json::Value> = ideals
        .iter()
        .zip(&img)
        .map(|(&i, &u)| json!({ "ideal": render_ideal(&l, i), "open": points(&dual.space, u) }))
        .collect();
    Ok(Verdict::from_report("frame", r, None).with_result(json!({ "ideals": result })).into())
}

/// Reads the `ideal` field and reports whether it is a δ-ideal.
fn delta_ideal(req: &Request, l: &FiniteLca) -> Result<(DeltaIdeal, Condition)> {
    let top = mask(l.algebra(), field(&req.ideal, "ideal")?)?;
    Ok((DeltaIdeal { top }, is_delta_ideal(l, top)))
}

fn iota_cmd(req: &Request) -> Result<Output> {
    let l = finite_lca(req)?;
    let (i, cond) = delta_ideal(req, &l)?;
    let mut r = ConditionReport::default();
    let holds = cond.holds;
    r.push(cond);
    let v = Verdict::from_report("iota", r, None);
    if !holds {
        return Ok(v.into());
    }
    let dual = psi_a_object(&l)?;
    let u = iota(&l, &dual, i)?;
    Ok(v.with_result(json!({ "open": points(&dual.space, u), "dual": dual.summary(l.algebra()) })).into())
}

fn construction_verdict(name: &str, pre: ConditionReport, d: DualConstruction, ambient: &DualSpace) -> Verdict {
    let required: Vec<String> = d.report.conditions.iter().filter(|c| c.note.is_none()).map(|c| c.name.clone()).collect();
    let mut report = pre;
    report.extend(d.report);
    let names: Vec<&str> = required.iter().map(String::as_str).collect();
    let result = json!({
        "lca": describe_lca(&d.lca),
        "hom": HomDesc::describe(&d.hom),
        "image": points(&ambient.space, d.image),
    });
    Verdict::from_report(name, report, Some(&names)).with_result(result)
}

fn open_dual(req: &Request) -> Result<Output> {
    let l = finite_lca(req)?;
    let (i, cond) = delta_ideal(req, &l)?;
    let mut pre = ConditionReport::default();
    if !cond.holds {
        pre.push(cond);
        return Ok(Verdict::from_report("open-dual", pre, None).into());
    }
    pre.push(cond);
    let d = open_set_dual(&l, i)?;
    let ambient = psi_a_object(&l)?;
    Ok(construction_verdict("open-dual", pre, d, &ambient).into())
}

fn closed_dual(req: &Request) -> Result<Output> {
    let l = finite_lca(req)?;
    let a0 = mask(l.algebra(), field(&req.element, "element")?)?;
    let d = regular_closed_dual(&l, a0)?;
    let ambient = psi_a_object(&l)?;
    Ok(construction_verdict("closed-dual", ConditionReport::default(), d, &ambient).into())
}

fn relations(req: &Request, l: &Lca) -> Result<Vec<Contact>> {
    field(&req.relations, "relations")?.iter().map(|c| c.build(&l.algebra(), Some(l))).collect()
}

fn compactify(name: &str, req: &Request) -> Result<Output> {
    let l = lca(req)?;
    let alg = l.algebra();
    let relation = match name {
        "compactify alexandroff" => alexandroff_ncr(&l),
        "compactify beta" => beta_ncr(&l)?,
        "compactify sup" => sup_ncr(&l, &relations(req, &l)?)?,
        "compactify inf" => inf_ncr(&l, &relations(req, &l)?)?,
        _ => {
            let first = field(&req.first, "first")?.build(&alg, Some(&l))?;
            let second = field(&req.second, "second")?.build(&alg, Some(&l))?;
            let cmp = compare_ncr(&first, &second)?;
            let v = Verdict::from_report(name, ConditionReport::default(), None).with_result(cmp);
            return Ok(Output { verdict: v, dot: extension_lattice(&l)? });
        }
    };
    let v = Verdict::from_report(name, is_admissible_ncr(&l, &relation)?, None)
        .with_result(ContactDesc::describe(&relation));
    Ok(Output { verdict: v, dot: extension_lattice(&l)? })
}

fn proximity_restrict(req: &Request) -> Result<Output> {
    let p = field(&req.proximity, "proximity")?;
    let pts = Powerset::new(p.points.clone())?;
    let alg = BooleanAlgebra::Powerset(pts.clone());
    let rho = p.contact.build(&alg, None)?;
    let rho = rho.as_finite().ok_or_else(|| Error::Input("a proximity needs a finite relation".into()))?.clone();
    let bounded = mask(&pts, &p.bounded)?;
    let pre = LocalProximitySpace::check(&rho, bounded)?;
    if !pre.holds_all() {
        return Ok(Verdict::from_report("proximity restrict", pre, None).into());
    }
    let r = restrict_local_proximity(&LocalProximitySpace::new(rho, bounded)?)?;
    let result = json!({
        "space": SpaceDesc::describe(r.result.rc.space()),
        "lca": describe_lca(&r.result.lca),
    });
    Ok(Verdict::from_report("proximity restrict", r.report, None).with_result(result).into())
}

fn proximity_reconstruct(req: &Request) -> Result<Output> {
    let space = field(&req.space, "space")?.build()?;
    let rc = rc_algebra(&space)?;
    let alg = BooleanAlgebra::Powerset(rc.algebra().clone());
    let rho = field(&req.contact, "contact")?.build(&alg, None)?;
    let rho = rho.as_finite().ok_or_else(|| Error::Input("the relation must be finite".into()))?.clone();
    let bounded = field(&req.bounded, "bounded")?.build(&alg)?.top_mask(rc.algebra());
    let x = RcLca { lca: FiniteLca::new(rho, bounded)?, rc };
    let report = check_admissible(&x);
    if !report.holds_all() {
        return Ok(Verdict::from_report("proximity reconstruct", report, None).into());
    }
    let p = reconstruct_local_proximity(&x)?;
    let result = json!({
        "points": p.points().labels(),
        "contact": ContactDesc::describe(&Contact::Finite(p.rho().clone())),
        "bounded": ElementDesc::describe_mask(p.points(), p.bounded()),
        "separated": p.is_separated(),
    });
    Ok(Verdict::from_report("proximity reconstruct", report, None).with_result(result).into())
}

fn wallman(req: &Request) -> Result<Output> {
    let l = lca(req)?;
    let c = relation(req, &l)?;
    let alg = l.algebra();
    let family = field(&req.family, "family")?.iter().map(|e| e.build(&alg)).collect::<Result<Vec<_>>>()?;
    Ok(Verdict::from_report("wallman", wallman_check(&l, &c, &family)?, None).into())
}

#[derive(Serialize)]
struct Summary {
    lca: LcaDesc,
    #[serde(skip_serializing_if = "Option::is_none")]
    dual: Option<lca_duality::duality::DualSpaceSummary>,
    alexandroff: ContactDesc,
    #[serde(skip_serializing_if = "Option::is_none")]
    beta: Option<ContactDesc>,
    #[serde(skip_serializing_if = "Option::is_none")]
    admissible_relations: Option<usize>,
}

fn report(req: &Request) -> Result<Output> {
    let l = lca(req)?;
    let checks = check_lca(&l);
    let ok = checks.holds_all();
    let (dual, admissible) = match (&l, ok) {
        (Lca::Finite(f), true) => (Some(psi_a_object(f)?.summary(f.algebra())), Some(admissible_ncrs_finite(f)?.len())),
        _ => (None, None),
    };
    let summary = Summary {
        lca: LcaDesc::describe(&l),
        dual,
        alexandroff: ContactDesc::describe(&alexandroff_ncr(&l)),
        beta: beta_ncr(&l).ok().map(|b| ContactDesc::describe(&b)),
        admissible_relations: admissible,
    };
    Ok(Verdict::from_report("report", checks, None).with_result(summary).into())
}

pub fn dispatch(name: &str, req: &Request) -> Result<Output> {
    match name {
        "check-algebra" => check_algebra(req),
        "check-contact" => check_relation(req, name, check_contact_axioms),
        "check-nca" => check_relation(req, name, check_nca),
        "check-lca" => check_lca_cmd(req),
        "dualize" => dualize(req),
        "dual-map" => dual_map(req),
        "check-morphism" => check_morphism(req),
        "round-trip" => round_trip(req),
        "frame" => frame(req),
        "iota" => iota_cmd(req),
        "open-dual" => open_dual(req),
        "closed-dual" => closed_dual(req),
        "proximity restrict" => proximity_restrict(req),
        "proximity reconstruct" => proximity_reconstruct(req),
        "wallman" => wallman(req),
        "report" => report(req),
        n if n.starts_with("compactify ") => compactify(n, req),
        n => Err(Error::Input(format!("unknown command {n:?}"))),
    }
}
