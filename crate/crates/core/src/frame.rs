//! δ-ideals, their frame, and the dual constructions for open and regular
//! closed subsets of the dual space.

use crate::algebra::{relative_algebra, submasks, FiniteHom, Mask, Powerset};
use crate::contact::{check_lca, FiniteContact, FiniteKind, FiniteLca, Lca};
use crate::duality::{check_morphism_conditions, psi_a_morphism, psi_a_object, DualSpace};
use crate::error::{Error, Result};
use crate::report::{witness, Condition, ConditionReport, Provenance};
use crate::space::{expand, map_properties, PointSet, SpaceMap};

/// A δ-ideal of a finite LCA. Every ideal of a finite algebra is principal,
/// so it is stored as its largest element.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DeltaIdeal {
    pub top: Mask,
}

/// The least element of `↓top` that breaks the δ-ideal conditions.
pub fn delta_ideal_defect(l: &FiniteLca, top: Mask) -> Option<Mask> {
    submasks(top).find(|&a| !l.is_bounded(a) || !submasks(top).any(|b| l.way_inside(a, b)))
}

/// Whether `↓top` is a δ-ideal: it lies inside IB and every member is way
/// inside some member.
pub fn is_delta_ideal(l: &FiniteLca, top: Mask) -> Condition {
    let alg = l.algebra();
    Condition::from_witness(
        "delta_ideal",
        Provenance::Exhaustive,
        delta_ideal_defect(l, top).map(|a| witness([("a", alg.render(a))])),
    )
}

/// `{b ∈ IB : b ≪ a}`.
pub fn principal_delta_ideal(l: &FiniteLca, a: Mask) -> DeltaIdeal {
    let top = l
        .algebra()
        .elements()
        .filter(|&b| l.is_bounded(b) && l.way_inside(b, a))
        .fold(0, |acc, b| acc | b);
    DeltaIdeal { top }
}

/// All δ-ideals of a finite LCA, ordered by inclusion-compatible mask order.
#[derive(Clone, Debug)]
pub struct DeltaIdealFrame {
    lca: FiniteLca,
    ideals: Vec<DeltaIdeal>,
}

impl DeltaIdealFrame {
    pub fn ideals(&self) -> &[DeltaIdeal] {
        &self.ideals
    }

    pub fn lca(&self) -> &FiniteLca {
        &self.lca
    }

    pub fn bottom(&self) -> DeltaIdeal {
        DeltaIdeal { top: 0 }
    }

    /// The largest δ-ideal; it is IB itself when IB is a δ-ideal.
    pub fn top(&self) -> DeltaIdeal {
        self.ideals.iter().copied().max_by_key(|i| i.top.count_ones()).unwrap_or(self.bottom())
    }

    pub fn le(&self, i: DeltaIdeal, j: DeltaIdeal) -> bool {
        i.top & !j.top == 0
    }

    /// The δ-ideal generated by the union.
    pub fn join(&self, i: DeltaIdeal, j: DeltaIdeal) -> DeltaIdeal {
        self.ideals
            .iter()
            .copied()
            .filter(|k| self.le(i, *k) && self.le(j, *k))
            .min_by_key(|k| k.top.count_ones())
            .expect("the frame has a top above every ideal")
    }

    /// The largest δ-ideal inside the intersection.
    pub fn meet(&self, i: DeltaIdeal, j: DeltaIdeal) -> DeltaIdeal {
        self.largest_below(i.top & j.top).expect("{0} is a δ-ideal")
    }

    fn largest_below(&self, t: Mask) -> Option<DeltaIdeal> {
        let top = self.ideals.iter().filter(|k| k.top & !t == 0).fold(0, |acc, k| acc | k.top);
        self.ideals.iter().copied().find(|k| k.top == top)
    }

    /// Whether the intersection of two δ-ideals is already a δ-ideal.
    pub fn intersection_is_delta(&self, i: DeltaIdeal, j: DeltaIdeal) -> bool {
        delta_ideal_defect(&self.lca, i.top & j.top).is_none()
    }
}

pub fn frame_of_delta_ideals(l: &FiniteLca) -> DeltaIdealFrame {
    let ideals = submasks(l.bounded())
        .filter(|&t| delta_ideal_defect(l, t).is_none())
        .map(|top| DeltaIdeal { top })
        .collect();
    DeltaIdealFrame { lca: l.clone(), ideals }
}

/// `ι(I) = ⋃{λ(a) : a ∈ I}`.
pub fn iota(l: &FiniteLca, dual: &DualSpace, i: DeltaIdeal) -> Result<PointSet> {
    if let Some(a) = delta_ideal_defect(l, i.top) {
        return Err(Error::Precondition(format!("not a δ-ideal: {} cannot be refined", l.algebra().render(a))));
    }
    Ok(submasks(i.top).fold(0, |acc, a| acc | dual.lambda(a)))
}

/// `IB_U = {b ∈ IB : λ(b) ⊆ U}`.
pub fn ib_u(l: &FiniteLca, dual: &DualSpace, u: PointSet) -> Result<DeltaIdeal> {
    if !dual.space.is_open(u) {
        return Err(Error::Precondition(format!("{} is not open", dual.space.render(u))));
    }
    let top = l
        .algebra()
        .elements()
        .filter(|&b| l.is_bounded(b) && dual.lambda(b) & !u == 0)
        .fold(0, |acc, b| acc | b);
    Ok(DeltaIdeal { top })
}

/// The outcome of a dual-object construction.
#[derive(Clone, Debug)]
pub struct DualConstruction {
    pub lca: FiniteLca,
    /// The natural epimorphism `a ↦ a ∧ a0`.
    pub hom: FiniteHom,
    /// `Ψᵃ(φ)`, from the new dual space into the old one.
    pub dual_map: SpaceMap,
    /// The points of `Ψᵃ(L)` hit by the dual map.
    pub image: PointSet,
    pub report: ConditionReport,
}

fn check(name: &str, holds: bool, detail: impl FnOnce() -> String) -> Condition {
    Condition::from_witness(name, Provenance::Exhaustive, (!holds).then(|| witness([("detail", detail())])))
}

fn epimorphism(a: &Powerset, a0: Mask) -> Result<(Powerset, FiniteHom)> {
    if a0 == 0 {
        let trivial = Powerset::with_atoms(0);
        let hom = FiniteHom::new(a.clone(), trivial.clone(), vec![0; a.n()])?;
        return Ok((trivial, hom));
    }
    relative_algebra(a, a0)
}

fn finish(
    l: &FiniteLca,
    lca: FiniteLca,
    hom: FiniteHom,
    required: &[&str],
    reported: &[&str],
    expected_image: PointSet,
    flags: &[&str],
) -> Result<DualConstruction> {
    let ambient = psi_a_object(l)?;
    let mut report = ConditionReport::default();
    let lca_report = check_lca(&Lca::Finite(lca.clone()));
    report.push(check("lca", lca_report.holds_all(), || {
        lca_report.failed().map(|c| c.name.clone()).collect::<Vec<_>>().join(",")
    }));
    let conditions = check_morphism_conditions(&hom, l, &lca)?;
    for name in required.iter().chain(reported) {
        let c = conditions.get(name).expect("known condition").clone();
        report.push(if reported.contains(name) { c.with_note("reported, not required") } else { c });
    }
    let dual_map = psi_a_morphism(&hom, l, &lca)?;
    let image = dual_map.image(dual_map.source().full());
    let props = map_properties(&dual_map);
    for &flag in flags {
        let (_, f) = props.flags().into_iter().find(|(n, _)| *n == flag).expect("known flag");
        report.push(check(flag, f.holds, || f.witness.clone().unwrap_or_default()));
    }
    report.push(check("image", image == expected_image, || {
        format!("image {} differs from {}", ambient.space.render(image), ambient.space.render(expected_image))
    }));
    let failed: Vec<String> = report
        .conditions
        .iter()
        .filter(|c| !c.holds && !reported.contains(&c.name.as_str()))
        .map(|c| c.name.clone())
        .collect();
    if !failed.is_empty() {
        return Err(Error::Internal(format!("construction failed its verification: {}", failed.join(", "))));
    }
    Ok(DualConstruction { lca, hom, dual_map, image, report })
}

/// The LCA whose dual is the open subspace `ι(I)`.
///
/// `B = A|a_I` with `a η b` iff some `c ∈ I` and some point `σ` of the dual
/// contain `a`, `b` and `c`; the bounded ideal of `B` is `I`.
pub fn open_set_dual(l: &FiniteLca, i: DeltaIdeal) -> Result<DualConstruction> {
    let ambient = psi_a_object(l)?;
    let expected = iota(l, &ambient, i)?;
    let (b_alg, hom) = epimorphism(l.algebra(), i.top)?;
    let members: Vec<Mask> = submasks(i.top).collect();
    let eta = FiniteContact::from_fn(&b_alg, FiniteKind::Derived("open_dual".into()), |x, y| {
        let (x, y) = (expand(x, i.top), expand(y, i.top));
        ambient
            .points
            .iter()
            .any(|k| k.contains(x) && k.contains(y) && members.iter().any(|&c| k.contains(c)))
    });
    let lca = FiniteLca::new(eta, b_alg.top())?;
    finish(l, lca, hom, &["EL1", "L2", "LO"], &["L3"], expected, &["open", "injective", "continuous"])
}

/// The LCA whose dual is the regular closed subspace `λ(a0)`.
pub fn regular_closed_dual(l: &FiniteLca, a0: Mask) -> Result<DualConstruction> {
    if a0 == 0 {
        return Err(Error::Degenerate("a0 must be nonzero".into()));
    }
    let ambient = psi_a_object(l)?;
    let (b_alg, hom) = relative_algebra(l.algebra(), a0)?;
    let rho = l.rho();
    let eta = FiniteContact::from_fn(&b_alg, FiniteKind::Derived("restriction".into()), |x, y| {
        rho.related(expand(x, a0), expand(y, a0))
    });
    let lca = FiniteLca::new(eta, hom.apply(l.bounded()))?;
    finish(
        l,
        lca,
        hom,
        &["LS", "L2", "L3"],
        &[],
        ambient.lambda(a0),
        &["closed", "quasi_open", "injective", "continuous"],
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn overlap(n: usize) -> FiniteLca {
        FiniteLca::overlap_all(&Powerset::with_atoms(n))
    }

    #[test]
    fn delta_ideal_examples() {
        let l = overlap(3);
        assert!(is_delta_ideal(&l, 0).holds);
        let p = principal_delta_ideal(&l, 0b011);
        assert_eq!(p.top, 0b011);
        let g = FiniteLca::new(FiniteContact::atom_graph(&Powerset::with_atoms(2), &[(0, 1)]).unwrap(), 0b11).unwrap();
        let c = is_delta_ideal(&g, 0b01);
        assert!(!c.holds);
        assert_eq!(c.witness, witness([("a", "{p}".into())]));
    }

    #[test]
    fn frame_sizes() {
        assert_eq!(frame_of_delta_ideals(&overlap(2)).ideals().len(), 4);
        assert_eq!(frame_of_delta_ideals(&overlap(3)).ideals().len(), 8);
        assert_eq!(frame_of_delta_ideals(&overlap(0)).ideals().len(), 1);
        assert_eq!(frame_of_delta_ideals(&overlap(1)).ideals().len(), 2);
    }

    #[test]
    fn frame_operations() {
        let f = frame_of_delta_ideals(&overlap(3));
        let (i, j) = (DeltaIdeal { top: 0b011 }, DeltaIdeal { top: 0b110 });
        assert_eq!(f.join(i, j).top, 0b111);
        assert_eq!(f.meet(i, j).top, 0b010);
        assert!(f.intersection_is_delta(i, j));
    }

    #[test]
    fn iota_examples() {
        let l = overlap(3);
        let d = psi_a_object(&l).unwrap();
        assert_eq!(iota(&l, &d, DeltaIdeal { top: 0 }).unwrap(), 0);
        assert_eq!(iota(&l, &d, DeltaIdeal { top: 0b111 }).unwrap(), d.space.full());
        let u = iota(&l, &d, DeltaIdeal { top: 0b001 }).unwrap();
        assert_eq!(u.count_ones(), 1);
        assert!(d.space.is_regular_open(u));
        assert_eq!(ib_u(&l, &d, u).unwrap().top, 0b001);
    }

    #[test]
    fn open_dual_examples() {
        let l = overlap(3);
        let full = open_set_dual(&l, DeltaIdeal { top: 0b111 }).unwrap();
        assert_eq!(full.hom, FiniteHom::identity(l.algebra()));
        let two = open_set_dual(&l, DeltaIdeal { top: 0b011 }).unwrap();
        assert_eq!(two.lca.algebra().n(), 2);
        assert_eq!(two.image.count_ones(), 2);
        let none = open_set_dual(&l, DeltaIdeal { top: 0 }).unwrap();
        assert_eq!(none.lca.algebra().n(), 0);
        assert_eq!(none.image, 0);
    }

    #[test]
    fn closed_dual_examples() {
        let l = overlap(3);
        let id = regular_closed_dual(&l, 0b111).unwrap();
        assert_eq!(id.hom, FiniteHom::identity(l.algebra()));
        let two = regular_closed_dual(&l, 0b011).unwrap();
        assert!(two.dual_map.source().is_discrete());
        assert_eq!(two.image.count_ones(), 2);
        assert_eq!(regular_closed_dual(&l, 0b100).unwrap().image.count_ones(), 1);
        assert!(matches!(regular_closed_dual(&l, 0), Err(Error::Degenerate(_))));
    }
}
