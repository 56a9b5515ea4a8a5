//! The Wallman-type criterion for extensions given by an admissible relation,
//! and the proximity a finite compactification induces on its dense part.

use crate::algebra::{BooleanAlgebra, Element, Mask, NatSet, Powerset};
use crate::contact::{pair_witness, Contact, FiniteContact, FiniteKind, Lca, SampleConfig, Sampler};
use crate::error::{input, Error, Result};
use crate::report::{witness, Condition, ConditionReport, Provenance};
use crate::space::SpaceMap;

use super::is_admissible_ncr;

/// Checks whether `family` witnesses that the extension given by `c` is of
/// Wallman type.
///
/// Reports `meet_closed` (the family is closed under meets), `agreement`
/// (`a ρ b` iff `a C b` on the family) and `separation` (whenever `a ≪_C c`
/// there are `b₁, b₂` in the family with `a ≤ b₁ ≤ b₂* ≤ c`). Separation is
/// exhaustive on finite algebras and sampled on symbolic ones.
pub fn wallman_check(l: &Lca, c: &Contact, family: &[Element]) -> Result<ConditionReport> {
    let adm = is_admissible_ncr(l, c)?;
    if let Some(bad) = adm.failed().next() {
        return Err(Error::Precondition(format!("the relation is not admissible: {} fails", bad.name)));
    }
    let alg = l.algebra();
    for e in family {
        alg.validate(e)?;
    }
    match (l, c) {
        (Lca::Finite(fl), Contact::Finite(fc)) => {
            let masks: Vec<Mask> = family.iter().filter_map(Element::as_mask).collect();
            Ok(finite_check(fl.algebra(), fl.rho(), fc, &masks))
        }
        (Lca::Symbolic(sl), Contact::Symbolic { kernel, .. }) => {
            let sets: Vec<NatSet> = family.iter().filter_map(|e| e.as_natset().cloned()).collect();
            let rho = Contact::Symbolic { algebra: alg.clone(), kernel: sl.rho.clone() };
            let c = Contact::Symbolic { algebra: alg.clone(), kernel: kernel.clone() };
            Ok(symbolic_check(&alg, &rho, &c, &sets, &SampleConfig::default()))
        }
        _ => input("the relation and the LCA live on different algebras"),
    }
}

fn finite_check(alg: &Powerset, rho: &FiniteContact, c: &FiniteContact, family: &[Mask]) -> ConditionReport {
    let ex = Provenance::Exhaustive;
    let mut r = ConditionReport::default();
    let render = |a: Mask| alg.render(a);
    let meet = family
        .iter()
        .find_map(|&a| family.iter().find(|&&b| !family.contains(&(a & b))).map(|&b| (a, b)));
    r.push(Condition::from_witness("meet_closed", ex, meet.map(|(a, b)| witness([("a", render(a)), ("b", render(b))]))));
    let agree = family
        .iter()
        .find_map(|&a| family.iter().find(|&&b| rho.related(a, b) != c.related(a, b)).map(|&b| (a, b)));
    r.push(Condition::from_witness("agreement", ex, agree.map(|(a, b)| witness([("a", render(a)), ("b", render(b))]))));
    let sep = alg.elements().find_map(|a| {
        alg.elements()
            .find(|&x| {
                c.way_inside(a, x)
                    && !family.iter().any(|&b1| {
                        a & !b1 == 0 && family.iter().any(|&b2| b1 & b2 == 0 && alg.complement(b2) & !x == 0)
                    })
            })
            .map(|x| (a, x))
    });
    r.push(Condition::from_witness("separation", ex, sep.map(|(a, x)| witness([("a", render(a)), ("c", render(x))]))));
    r
}

fn symbolic_check(
    alg: &BooleanAlgebra,
    rho: &Contact,
    c: &Contact,
    family: &[NatSet],
    cfg: &SampleConfig,
) -> ConditionReport {
    let ex = Provenance::Exhaustive;
    let nat = |s: &NatSet| Element::Nat(s.clone());
    let mut r = ConditionReport::default();
    let meet = family
        .iter()
        .find_map(|a| family.iter().find(|b| !family.contains(&a.meet(b))).map(|b| (a, b)));
    r.push(Condition::from_witness("meet_closed", ex, meet.map(|(a, b)| pair_witness(a, b))));
    let agree = family.iter().find_map(|a| {
        family.iter().find(|b| rho.related(&nat(a), &nat(b)) != c.related(&nat(a), &nat(b))).map(|b| (a, b))
    });
    r.push(Condition::from_witness("agreement", ex, agree.map(|(a, b)| pair_witness(a, b))));
    let mut s = Sampler::new(alg, cfg);
    let mut pairs: Vec<(NatSet, NatSet)> = family.iter().map(|b| (b.clone(), b.clone())).collect();
    for _ in 0..cfg.samples {
        let a = s.next();
        let x = s.next().join(&a);
        pairs.push((a, x));
    }
    let sep = pairs.into_iter().find(|(a, x)| {
        !c.related(&nat(a), &nat(&x.complement()))
            && !family.iter().any(|b1| {
                a.is_subset(b1) && family.iter().any(|b2| !b1.intersects(b2) && b2.complement().is_subset(x))
            })
    });
    r.push(Condition::from_witness(
        "separation",
        Provenance::Sampled,
        sep.map(|(a, x)| witness([("a", a.to_string()), ("c", x.to_string())])),
    ));
    r
}

/// The proximity `M δ N` iff `cl(e(M)) ∩ cl(e(N)) ≠ ∅` induced on the
/// source of a dense embedding `e` into a finite space.
pub fn njastad_delta(e: &SpaceMap) -> Result<FiniteContact> {
    let (src, tgt) = (e.source(), e.target());
    let pts = Powerset::new(src.labels().to_vec())?;
    let img = e.image(src.full());
    if img.count_ones() as usize != src.n() {
        return Err(Error::Precondition("the map is not injective".into()));
    }
    if !tgt.is_dense(img) {
        return Err(Error::Precondition(format!("the image {} is not dense", tgt.render(img))));
    }
    let cl: Vec<u64> = pts.elements().map(|m| tgt.closure(e.image(m))).collect();
    Ok(FiniteContact::from_fn(&pts, FiniteKind::Derived("njastad".into()), |m, n| {
        cl[m as usize] & cl[n as usize] != 0
    }))
}
