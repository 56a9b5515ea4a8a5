//! Clusters, the dual space of a finite local contact algebra, and the
//! conditions on homomorphisms that match classes of continuous maps.

use serde::{Deserialize, Serialize};

use crate::algebra::{ElemSet, FiniteHom, Mask, Powerset};
use crate::contact::{FiniteContact, FiniteLca, Lca};
use crate::error::{Error, Result};
use crate::report::{witness, Condition, ConditionReport, Provenance};
use crate::space::{dual_morphism, map_properties, rc_algebra, DualMorphism, FiniteSpace, PointSet, SpaceMap};

/// A cluster of a finite contact algebra.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Cluster {
    pub members: ElemSet,
    /// Atoms `p` with `σ_p` equal to this cluster, ascending.
    pub witnesses: Vec<usize>,
    pub bounded: bool,
}

impl Cluster {
    pub fn contains(&self, a: Mask) -> bool {
        self.members.contains(a)
    }
}

/// `σ_p = {a : a C p}`.
pub fn sigma(c: &FiniteContact, p: usize) -> ElemSet {
    c.algebra().elements().filter(|&a| c.related(a, 1 << p)).collect()
}

/// Why `members` is not a cluster of `c`, if it is not one.
pub fn cluster_defect(c: &FiniteContact, members: &ElemSet) -> Option<String> {
    let alg = c.algebra();
    if members.is_empty() {
        return Some("empty".into());
    }
    for a in members.iter() {
        if let Some(b) = members.iter().find(|&b| !c.related(a, b)) {
            return Some(format!("{} and {} are not in contact", alg.render(a), alg.render(b)));
        }
    }
    for a in alg.elements() {
        for b in alg.elements() {
            if members.contains(a | b) && !members.contains(a) && !members.contains(b) {
                return Some(format!("{} is a member but neither part is", alg.render(a | b)));
            }
        }
    }
    alg.elements()
        .find(|&a| !members.contains(a) && members.iter().all(|b| c.related(a, b)))
        .map(|a| format!("{} touches every member but is missing", alg.render(a)))
}

/// The kernel property: `a ∈ σ` and `b* ∉ σ` imply `a ∧ b ∈ σ`.
pub fn kernel_property_witness(alg: &Powerset, members: &ElemSet) -> Option<(Mask, Mask)> {
    alg.elements().filter(|&a| members.contains(a)).find_map(|a| {
        alg.elements()
            .find(|&b| !members.contains(alg.complement(b)) && !members.contains(a & b))
            .map(|b| (a, b))
    })
}

/// All clusters of the form `σ_p`, deduplicated; `bounded_top` marks
/// clusters meeting `↓bounded_top` as bounded.
pub fn clusters(c: &FiniteContact, bounded_top: Mask) -> Vec<Cluster> {
    let mut out: Vec<Cluster> = Vec::new();
    for p in c.algebra().atoms() {
        let members = sigma(c, p);
        if let Some(existing) = out.iter_mut().find(|k| k.members == members) {
            existing.witnesses.push(p);
            continue;
        }
        if cluster_defect(c, &members).is_some() {
            continue;
        }
        let bounded = members.iter().any(|a| a & !bounded_top == 0);
        out.push(Cluster { members, witnesses: vec![p], bounded });
    }
    out
}

/// The dual space of a finite local contact algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualSpace {
    pub space: FiniteSpace,
    /// The bounded clusters of `(A, C_ρ)`, one per point.
    pub points: Vec<Cluster>,
    /// `λ(a)`: the points whose cluster contains `a`, indexed by element.
    pub lambda: Vec<PointSet>,
}

impl DualSpace {
    pub fn lambda(&self, a: Mask) -> PointSet {
        self.lambda[a as usize]
    }

    /// The point whose cluster is `σ_p`.
    pub fn point_of_atom(&self, p: usize) -> Option<usize> {
        self.points.iter().position(|k| k.witnesses.contains(&p))
    }
}

/// Points are the bounded clusters of `(A, C_ρ)`; closed sets are generated
/// by the sets `λ(a)`.
pub fn psi_a_object(l: &FiniteLca) -> Result<DualSpace> {
    let alg = l.algebra();
    let c = l.c_rho();
    let points: Vec<Cluster> = clusters(&c, l.bounded()).into_iter().filter(|k| k.bounded).collect();
    let labels: Vec<String> = points.iter().map(|k| alg.label(k.witnesses[0]).to_string()).collect();
    let lambda: Vec<PointSet> = alg
        .elements()
        .map(|a| (0..points.len()).filter(|&i| points[i].contains(a)).fold(0, |acc, i| acc | 1 << i))
        .collect();
    let space = FiniteSpace::from_closed_family(labels, &lambda)?;
    Ok(DualSpace { space, points, lambda })
}

/// The dual space of any LCA; symbolic algebras are refused.
pub fn psi_a(l: &Lca) -> Result<DualSpace> {
    match l {
        Lca::Finite(l) => psi_a_object(l),
        Lca::Symbolic(_) => Err(Error::Unsupported("the dual of a symbolic algebra is not a finite space".into())),
    }
}

fn same_algebras(phi: &FiniteHom, source: &FiniteLca, target: &FiniteLca) -> Result<()> {
    if phi.source() != source.algebra() || phi.target() != target.algebra() {
        return Err(Error::Input("homomorphism does not connect the given algebras".into()));
    }
    Ok(())
}

/// The map `Ψᵃ(B) → Ψᵃ(A)` dual to `φ: A → B`, sending `σ_q` to
/// `σ_{φ_Λ(q)}`.
pub fn psi_a_morphism(phi: &FiniteHom, source: &FiniteLca, target: &FiniteLca) -> Result<SpaceMap> {
    same_algebras(phi, source, target)?;
    let report = check_morphism_conditions(phi, source, target)?;
    for name in ["EL1", "L2"] {
        if let Some(c) = report.get(name).filter(|c| !c.holds) {
            return Err(Error::Precondition(format!("{name} fails at {:?}", c.witness)));
        }
    }
    let da = psi_a_object(source)?;
    let db = psi_a_object(target)?;
    let mut images = Vec::with_capacity(db.points.len());
    for point in &db.points {
        let mut image = None;
        for &q in &point.witnesses {
            let p = phi.adjoint(1 << q).trailing_zeros() as usize;
            let i = da
                .point_of_atom(p)
                .ok_or_else(|| Error::Internal(format!("σ_{} is not a point of the dual", source.algebra().label(p))))?;
            if image.is_some_and(|j| j != i) {
                return Err(Error::Internal("dual map depends on the witness ultrafilter".into()));
            }
            image = Some(i);
        }
        images.push(image.expect("clusters have witnesses"));
    }
    SpaceMap::new(db.space, da.space, images)
}

/// The full battery of morphism conditions for `φ: (A,ρ,IB) → (B,η,IB′)`.
pub fn check_morphism_conditions(phi: &FiniteHom, source: &FiniteLca, target: &FiniteLca) -> Result<ConditionReport> {
    same_algebras(phi, source, target)?;
    let (a_alg, b_alg) = (source.algebra(), target.algebra());
    let (rho, eta) = (source.rho(), target.rho());
    let lam = |b: Mask| phi.adjoint(b);
    let ex = Provenance::Exhaustive;
    let bb = |names: [&str; 2], x: Mask, y: Mask| witness([(names[0], b_alg.render(x)), (names[1], b_alg.render(y))]);
    let b_pairs = || b_alg.elements().flat_map(|x| b_alg.elements().map(move |y| (x, y)));
    let mut r = ConditionReport::default();

    let el1 = b_pairs().find(|&(x, y)| eta.related(x, y) && !rho.related(lam(x), lam(y)));
    r.push(Condition::from_witness("EL1", ex, el1.map(|(x, y)| bb(["a", "b"], x, y))));

    let l2 = b_alg.elements().find(|&b| target.is_bounded(b) && !source.is_bounded(lam(b)));
    r.push(Condition::from_witness("L2", ex, l2.map(|b| witness([("b", b_alg.render(b))]))));

    let l3 = a_alg.elements().find(|&a| source.is_bounded(a) && !target.is_bounded(phi.apply(a)));
    r.push(Condition::from_witness("L3", ex, l3.map(|a| witness([("a", a_alg.render(a))]))));

    let lo = a_alg.elements().find_map(|a| {
        b_alg
            .elements()
            .find(|&b| target.is_bounded(b) && rho.related(a, lam(b)) && !eta.related(phi.apply(a), b))
            .map(|b| (a, b))
    });
    r.push(Condition::from_witness(
        "LO",
        ex,
        lo.map(|(a, b)| witness([("a", a_alg.render(a)), ("b", b_alg.render(b))])),
    ));

    let is = a_alg.atoms().filter(|&p| source.is_bounded(1 << p)).find(|&p| {
        !b_alg.atoms().any(|q| target.is_bounded(1 << q) && rho.related(lam(1 << q), 1 << p))
    });
    r.push(Condition::from_witness("IS", ex, is.map(|p| witness([("u", format!("↑{}", a_alg.label(p)))]))));

    let ls = b_pairs().find(|&(x, y)| {
        target.is_bounded(x) && target.is_bounded(y) && rho.related(lam(x), lam(y)) && !eta.related(x, y)
    });
    r.push(Condition::from_witness("LS", ex, ls.map(|(x, y)| bb(["a", "b"], x, y))));

    let els = b_pairs().find(|&(x, y)| rho.related(lam(x), lam(y)) && !eta.related(x, y));
    r.push(Condition::from_witness("ELS", ex, els.map(|(x, y)| bb(["a", "b"], x, y))));

    let (c, c2) = (source.c_rho(), target.c_rho());
    let fs = b_pairs().find(|&(x, y)| c.related(lam(x), lam(y)) && !c2.related(x, y));
    r.push(
        Condition::from_witness("FS", ex, fs.map(|(x, y)| bb(["a", "b"], x, y)))
            .with_note("also serves as the compact-case conditions F1 and CO"),
    );

    let inj = a_alg.atoms().find(|&p| phi.images()[p] == 0);
    r.push(Condition::from_witness(
        "injective",
        ex,
        inj.map(|p| witness([("atom", a_alg.label(p).to_string()), ("image", "{}".into())])),
    ));
    let sur = a_alg.atoms().find(|&p| phi.images()[p].count_ones() > 1);
    r.push(Condition::from_witness(
        "surjective",
        ex,
        sur.map(|p| witness([("atom", a_alg.label(p).to_string()), ("image", b_alg.render(phi.images()[p]))])),
    ));
    let iso = inj.or(sur);
    r.push(Condition::from_witness(
        "boolean_iso",
        ex,
        iso.map(|p| witness([("atom", a_alg.label(p).to_string()), ("image", b_alg.render(phi.images()[p]))])),
    ));
    Ok(r)
}

/// Injective, and reflecting both contact and boundedness.
pub fn is_lca_embedding(phi: &FiniteHom, source: &FiniteLca, target: &FiniteLca) -> Result<ConditionReport> {
    same_algebras(phi, source, target)?;
    let alg = source.algebra();
    let ex = Provenance::Exhaustive;
    let mut r = ConditionReport::default();
    let inj = alg.atoms().find(|&p| phi.images()[p] == 0);
    r.push(Condition::from_witness("injective", ex, inj.map(|p| witness([("atom", alg.label(p).to_string())]))));
    let contact = alg.elements().find_map(|a| {
        alg.elements()
            .find(|&b| source.rho().related(a, b) != target.rho().related(phi.apply(a), phi.apply(b)))
            .map(|b| (a, b))
    });
    r.push(Condition::from_witness(
        "reflects_contact",
        ex,
        contact.map(|(a, b)| witness([("a", alg.render(a)), ("b", alg.render(b))])),
    ));
    let bounded = alg.elements().find(|&a| source.is_bounded(a) != target.is_bounded(phi.apply(a)));
    r.push(Condition::from_witness("reflects_bounded", ex, bounded.map(|a| witness([("a", alg.render(a))]))));
    Ok(r)
}

/// Condition names satisfied by the dual of a dense embedding.
pub const DENSE_PART_CONDITIONS: [&str; 4] = ["EL1", "L2", "LO", "boolean_iso"];
/// Condition names satisfied by the dual of a closed embedding.
pub const CLOSED_PART_CONDITIONS: [&str; 3] = ["LS", "L2", "L3"];

/// An embedding split as a dense embedding followed by a closed inclusion.
#[derive(Clone, Debug)]
pub struct EmbeddingFactorization {
    /// `X → cl(f(X))`.
    pub dense: SpaceMap,
    /// `cl(f(X)) ↪ Y`.
    pub closed: SpaceMap,
    /// Dual of the dense part.
    pub dense_dual: DualMorphism,
    /// Dual of the closed part.
    pub closed_dual: DualMorphism,
    /// Condition report for the dense part's dual.
    pub dense_report: ConditionReport,
    /// Condition report for the closed part's dual.
    pub closed_report: ConditionReport,
}

pub fn factor_embedding(f: &SpaceMap) -> Result<EmbeddingFactorization> {
    let props = map_properties(f);
    for (name, flag) in [("an embedding", &props.embedding), ("skeletal", &props.skeletal)] {
        if let Some(w) = &flag.witness {
            return Err(Error::Precondition(format!("map is not {name}: {w}")));
        }
    }
    let y = f.target();
    let z_set = y.closure(f.image(f.source().full()));
    let z = y.subspace(z_set);
    let z_index: Vec<usize> = (0..y.n()).filter(|&i| z_set >> i & 1 == 1).collect();
    let dense_images = f.images().iter().map(|&i| z_index.iter().position(|&j| j == i).expect("image lies in its closure")).collect();
    let dense = SpaceMap::new(f.source().clone(), z.clone(), dense_images)?;
    let closed = SpaceMap::new(z, y.clone(), z_index)?;
    let dense_dual = dual_morphism(&dense)?;
    let closed_dual = dual_morphism(&closed)?;
    let whole = dual_morphism(f)?;
    if closed_dual.hom.then(&dense_dual.hom)? != whole.hom {
        return Err(Error::Internal("dual of the factorization does not compose to the dual map".into()));
    }
    let dense_report = check_morphism_conditions(&dense_dual.hom, dense_dual.source.lca(), dense_dual.target.lca())?;
    let closed_report = check_morphism_conditions(&closed_dual.hom, closed_dual.source.lca(), closed_dual.target.lca())?;
    Ok(EmbeddingFactorization { dense, closed, dense_dual, closed_dual, dense_report, closed_report })
}

/// The point bijection `x ↦ σ_x` from a discrete space onto the dual of its
/// regular closed algebra, checked to be a homeomorphism.
pub fn round_trip_space(x: &FiniteSpace) -> Result<Vec<usize>> {
    if !x.is_discrete() {
        return Err(Error::Unsupported("only discrete finite spaces are locally compact Hausdorff".into()));
    }
    let rc = rc_algebra(x)?;
    let dual = psi_a_object(rc.lca())?;
    let alg = rc.algebra();
    let mut images = Vec::with_capacity(x.n());
    for point in 0..x.n() {
        let sigma_x: ElemSet = alg.elements().filter(|&f| rc.to_points(f) >> point & 1 == 1).collect();
        let i = dual
            .points
            .iter()
            .position(|k| k.members == sigma_x)
            .ok_or_else(|| Error::Internal(format!("σ_{} is not a point of the dual", x.labels()[point])))?;
        images.push(i);
    }
    let t = SpaceMap::new(x.clone(), dual.space.clone(), images.clone())?;
    let p = map_properties(&t);
    if !(p.injective.holds && p.surjective.holds && p.continuous.holds && p.open.holds) {
        return Err(Error::Internal("x ↦ σ_x is not a homeomorphism".into()));
    }
    Ok(images)
}

/// The isomorphism `a ↦ λ(a)` from `L` onto the regular closed algebra of
/// its dual space, with the report confirming it is an LCA isomorphism.
#[derive(Clone, Debug)]
pub struct LcaRoundTrip {
    pub hom: FiniteHom,
    pub rc: crate::space::RcAlgebra,
    pub report: ConditionReport,
}

pub fn round_trip_lca(l: &FiniteLca) -> Result<LcaRoundTrip> {
    let dual = psi_a_object(l)?;
    let rc = rc_algebra(&dual.space)?;
    let alg = l.algebra();
    let images = alg
        .atoms()
        .map(|p| {
            rc.from_points(dual.lambda(1 << p))
                .ok_or_else(|| Error::Precondition(format!("λ({}) is not regular closed", alg.label(p))))
        })
        .collect::<Result<Vec<_>>>()?;
    let hom = FiniteHom::new(alg.clone(), rc.algebra().clone(), images)
        .map_err(|e| Error::Precondition(format!("λ is not a homomorphism: {e}")))?;
    let mut report = is_lca_embedding(&hom, l, rc.lca())?;
    report.push(Condition::from_witness(
        "surjective",
        Provenance::Exhaustive,
        alg.atoms().find(|&p| hom.images()[p].count_ones() != 1).map(|p| witness([("atom", alg.label(p).to_string())])),
    ));
    Ok(LcaRoundTrip { hom, rc, report })
}

/// Serializable summary of a dual space.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DualSpaceSummary {
    pub points: Vec<String>,
    pub opens: Vec<Vec<String>>,
    /// Cluster members of each point, rendered.
    pub clusters: Vec<Vec<String>>,
}

impl DualSpace {
    pub fn summary(&self, alg: &Powerset) -> DualSpaceSummary {
        let names = |s: PointSet| -> Vec<String> {
            crate::algebra::atoms_of(s).map(|i| self.space.labels()[i].clone()).collect()
        };
        DualSpaceSummary {
            points: self.space.labels().to_vec(),
            opens: self.space.opens().iter().map(|&u| names(u)).collect(),
            clusters: self.points.iter().map(|k| k.members.iter().map(|a| alg.render(a)).collect()).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::contact::FiniteContact;

    #[test]
    fn overlap_clusters_are_principal_upsets() {
        let alg = Powerset::with_atoms(2);
        let ks = clusters(&FiniteContact::overlap(&alg), alg.top());
        assert_eq!(ks.len(), 2);
        let expected: ElemSet = [0b01, 0b11].into_iter().collect();
        assert_eq!(ks[0].members, expected);
    }

    #[test]
    fn connected_pair_has_one_cluster() {
        let alg = Powerset::with_atoms(2);
        let ks = clusters(&FiniteContact::atom_graph(&alg, &[(0, 1)]).unwrap(), alg.top());
        assert_eq!(ks.len(), 1);
        assert_eq!(ks[0].witnesses, vec![0, 1]);
        assert_eq!(ks[0].members.len(), 3);
        let one = Powerset::with_atoms(1);
        assert_eq!(clusters(&FiniteContact::overlap(&one), 1).len(), 1);
    }

    #[test]
    fn dual_of_overlap_is_discrete() {
        let d = psi_a_object(&FiniteLca::overlap_all(&Powerset::with_atoms(3))).unwrap();
        assert!(d.space.is_discrete());
        assert_eq!(d.space.n(), 3);
        let g = FiniteLca::new(FiniteContact::atom_graph(&Powerset::with_atoms(2), &[(0, 1)]).unwrap(), 0b11).unwrap();
        assert_eq!(psi_a_object(&g).unwrap().space.n(), 1);
    }

    fn dual_of(images: Vec<usize>, m: usize, n: usize) -> DualMorphism {
        let f = SpaceMap::new(FiniteSpace::discrete_n(m), FiniteSpace::discrete_n(n), images).unwrap();
        dual_morphism(&f).unwrap()
    }

    #[test]
    fn constant_map_conditions() {
        let d = dual_of(vec![0, 0], 2, 1);
        let r = check_morphism_conditions(&d.hom, d.source.lca(), d.target.lca()).unwrap();
        assert!(r.holds("IS"));
        let ls = r.get("LS").unwrap();
        assert!(!ls.holds);
        assert_eq!(ls.witness, witness([("a", "{1}".into()), ("b", "{2}".into())]));
        assert!(is_lca_embedding(&d.hom, d.source.lca(), d.target.lca()).unwrap().holds_all());
    }

    #[test]
    fn injection_conditions() {
        let d = dual_of(vec![0], 1, 2);
        let r = check_morphism_conditions(&d.hom, d.source.lca(), d.target.lca()).unwrap();
        assert!(r.holds("LS"));
        assert!(!r.holds("IS"));
    }

    #[test]
    fn swap_dualizes_back_to_swap() {
        let d = dual_of(vec![1, 0], 2, 2);
        let f = psi_a_morphism(&d.hom, d.source.lca(), d.target.lca()).unwrap();
        assert_eq!(f.images(), &[1, 0]);
        let c = dual_of(vec![0, 0], 2, 1);
        let g = psi_a_morphism(&c.hom, c.source.lca(), c.target.lca()).unwrap();
        assert_eq!(g.images(), &[0, 0]);
    }

    #[test]
    fn natural_epimorphism_is_not_an_embedding() {
        let a = Powerset::with_atoms(3);
        let (b, phi) = crate::algebra::relative_algebra(&a, 0b011).unwrap();
        let r = is_lca_embedding(&phi, &FiniteLca::overlap_all(&a), &FiniteLca::overlap_all(&b)).unwrap();
        assert!(!r.holds("injective"));
    }

    #[test]
    fn round_trips() {
        for n in 1..=5 {
            let bij = round_trip_space(&FiniteSpace::discrete_n(n)).unwrap();
            assert_eq!(bij.len(), n);
        }
        for n in 1..=4 {
            let rt = round_trip_lca(&FiniteLca::overlap_all(&Powerset::with_atoms(n))).unwrap();
            assert!(rt.report.holds_all());
        }
        let sierpinski = FiniteSpace::new(["a", "b"], &[0b01]).unwrap();
        assert!(matches!(round_trip_space(&sierpinski), Err(Error::Unsupported(_))));
    }

    #[test]
    fn factor_inclusion_into_sierpinski() {
        let s = FiniteSpace::new(["a", "b"], &[0b01]).unwrap();
        let f = SpaceMap::new(FiniteSpace::discrete(["a"]).unwrap(), s, vec![0]).unwrap();
        let fac = factor_embedding(&f).unwrap();
        assert_eq!(fac.closed.images(), &[0, 1]);
        for name in DENSE_PART_CONDITIONS {
            assert!(fac.dense_report.holds(name), "{name}");
        }
        for name in CLOSED_PART_CONDITIONS {
            assert!(fac.closed_report.holds(name), "{name}");
        }
    }
}
