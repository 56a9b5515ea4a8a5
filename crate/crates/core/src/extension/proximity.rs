//! Finite local proximity spaces, their induced topology, and the passage to
//! and from admissible LCAs on the regular closed sets.

use crate::algebra::{atoms_of, submasks, Mask, Powerset};
use crate::contact::{check_finite_lca, FiniteContact, FiniteKind, FiniteLca};
use crate::error::{Error, Result};
use crate::report::{witness, Condition, ConditionReport, Provenance};
use crate::space::{rc_algebra, FiniteSpace, PointSet, RcAlgebra};

const EX: Provenance = Provenance::Exhaustive;

/// A relation on the subsets of a finite point set together with a
/// boundedness ideal `↓bounded`.
///
/// Points are the atoms of the underlying powerset, so a subset of points and
/// an element of the algebra share one bitmask.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocalProximitySpace {
    lca: FiniteLca,
}

impl LocalProximitySpace {
    /// Checks the contact axioms, BC1 and BC2, and reports whether the space
    /// is separated.
    pub fn check(rho: &FiniteContact, bounded: Mask) -> Result<ConditionReport> {
        let l = FiniteLca::new(rho.clone(), bounded)?;
        let mut r = ConditionReport::default();
        r.conditions.extend(check_finite_lca(&l).conditions.into_iter().filter(|c| c.name != "BC3"));
        Ok(r)
    }

    pub fn new(rho: FiniteContact, bounded: Mask) -> Result<Self> {
        if let Some(bad) = Self::check(&rho, bounded)?.failed().next() {
            return Err(Error::Precondition(format!("not a local proximity space: {} fails", bad.name)));
        }
        Ok(LocalProximitySpace { lca: FiniteLca::new(rho, bounded)? })
    }

    /// The points, as the atoms of a powerset.
    pub fn points(&self) -> &Powerset {
        self.lca.algebra()
    }

    pub fn rho(&self) -> &FiniteContact {
        self.lca.rho()
    }

    /// The largest bounded set.
    pub fn bounded(&self) -> Mask {
        self.lca.bounded()
    }

    pub fn as_lca(&self) -> &FiniteLca {
        &self.lca
    }

    /// Whether distinct points are never in proximity.
    pub fn is_separated(&self) -> bool {
        self.separation_witness().is_none()
    }

    fn separation_witness(&self) -> Option<(usize, usize)> {
        let n = self.points().n();
        (0..n).find_map(|x| (0..n).find(|&y| x != y && self.rho().related(1 << x, 1 << y)).map(|y| (x, y)))
    }

    /// `cl(M) = {x : {x} ρ M}`.
    pub fn closure(&self, m: Mask) -> Mask {
        self.points().atoms().filter(|&x| self.rho().related(1 << x, m)).fold(0, |acc, x| acc | 1 << x)
    }

    /// The topology whose closure operator is [`closure`](Self::closure).
    ///
    /// Fails when the operator is not idempotent.
    pub fn induced_space(&self) -> Result<FiniteSpace> {
        let pts = self.points();
        if let Some(m) = pts.elements().find(|&m| self.closure(self.closure(m)) != self.closure(m)) {
            return Err(Error::Precondition(format!("closure is not idempotent at {}", pts.render(m))));
        }
        let closed: Vec<PointSet> = pts.elements().filter(|&m| self.closure(m) == m).collect();
        FiniteSpace::from_closed_family(pts.labels().to_vec(), &closed)
    }
}

/// An LCA on the regular closed sets of a finite space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RcLca {
    pub rc: RcAlgebra,
    pub lca: FiniteLca,
}

impl RcLca {
    /// Same space, same contact table and same bounded top.
    pub fn same_as(&self, other: &RcLca) -> bool {
        self.rc.space() == other.rc.space()
            && self.lca.bounded() == other.lca.bounded()
            && self.lca.rho().same_table(other.lca.rho())
    }
}

/// LCA axioms plus admissibility for the space: overlapping regular closed
/// sets are related (A1), and every interior point of `F` is interior to a
/// bounded `G ≪ F` (A2).
pub fn check_admissible(x: &RcLca) -> ConditionReport {
    let (rc, l) = (&x.rc, &x.lca);
    let alg = l.algebra();
    let space = rc.space();
    let mut r = check_finite_lca(l);
    let a1 = alg
        .elements()
        .find_map(|f| alg.elements().find(|&g| rc.to_points(f) & rc.to_points(g) != 0 && !l.rho().related(f, g)).map(|g| (f, g)));
    r.push(Condition::from_witness("A1", EX, a1.map(|(f, g)| witness([("F", alg.render(f)), ("G", alg.render(g))]))));
    let a2 = alg.elements().find_map(|f| {
        let inside = space.interior(rc.to_points(f));
        atoms_of(inside)
            .find(|&p| {
                !submasks(l.bounded())
                    .any(|g| space.interior(rc.to_points(g)) >> p & 1 == 1 && l.way_inside(g, f))
            })
            .map(|p| (f, p))
    });
    r.push(Condition::from_witness(
        "A2",
        EX,
        a2.map(|(f, p)| witness([("F", alg.render(f)), ("x", space.labels()[p].clone())])),
    ));
    r
}

/// The outcome of [`restrict_local_proximity`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Restriction {
    pub result: RcLca,
    /// Admissibility of the result plus the separation flag of the input.
    pub report: ConditionReport,
}

/// Restricts `ρ` and `IB` to the regular closed sets of the induced
/// topology.
///
/// Non-separated inputs are accepted as long as their closure operator is a
/// topology; the report carries a `separated` condition.
pub fn restrict_local_proximity(p: &LocalProximitySpace) -> Result<Restriction> {
    let space = p.induced_space()?;
    let rc = rc_algebra(&space)?;
    let alg = rc.algebra().clone();
    let rho = FiniteContact::from_fn(&alg, FiniteKind::Derived("restricted".into()), |f, g| {
        p.rho().related(rc.to_points(f), rc.to_points(g))
    });
    let bounded = (0..rc.atom_sets().len())
        .filter(|&i| rc.atom_sets()[i] & !p.bounded() == 0)
        .fold(0, |acc, i| acc | 1 << i);
    let result = RcLca { lca: FiniteLca::new(rho, bounded)?, rc };
    let mut report = check_admissible(&result);
    let sep = p.separation_witness().map(|(x, y)| {
        let pts = p.points();
        witness([("x", pts.label(x).to_string()), ("y", pts.label(y).to_string())])
    });
    report.push(Condition::from_witness("separated", EX, sep));
    Ok(Restriction { result, report })
}

/// The local proximity space on the points of the space whose restriction
/// to the regular closed sets is `x`.
///
/// `IB` is everything below a bounded regular closed set, and `M (-ρ) N` iff
/// for every bounded `B` there are a bounded `F` and a regular closed `G`
/// with `M ∩ B ⊆ int F`, `N ⊆ int G` and `F (-ρ′) G`.
pub fn reconstruct_local_proximity(x: &RcLca) -> Result<LocalProximitySpace> {
    if let Some(bad) = check_admissible(x).failed().next() {
        return Err(Error::Precondition(format!("the RC pair is not admissible: {} fails", bad.name)));
    }
    let (rc, l) = (&x.rc, &x.lca);
    let space = rc.space();
    let pts = Powerset::new(space.labels().to_vec())?;
    let top = rc.to_points(l.bounded());
    let rc_elems: Vec<(Mask, PointSet)> = rc.algebra().elements().map(|f| (f, space.interior(rc.to_points(f)))).collect();
    let separated = |m: Mask, n: Mask| {
        rc_elems.iter().filter(|&&(f, _)| l.is_bounded(f)).any(|&(f, int_f)| {
            m & top & !int_f == 0 && rc_elems.iter().any(|&(g, int_g)| n & !int_g == 0 && !l.rho().related(f, g))
        })
    };
    let rho = FiniteContact::from_fn(&pts, FiniteKind::Derived("reconstructed".into()), |m, n| !separated(m, n));
    LocalProximitySpace::new(rho, top)
}

/// Every local proximity space on `n` labelled points (`n ≤ 4`).
pub fn local_proximity_spaces(n: usize) -> Vec<LocalProximitySpace> {
    assert!(n <= 4, "enumeration is limited to 4 points");
    let pts = Powerset::new((1..=n).map(|i| i.to_string())).expect("valid labels");
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|p| (p + 1..n).map(move |q| (p, q))).collect();
    let mut out = Vec::new();
    for bits in 0u32..1 << pairs.len() {
        let edges: Vec<(usize, usize)> =
            pairs.iter().enumerate().filter(|(i, _)| bits >> i & 1 == 1).map(|(_, &e)| e).collect();
        let rho = FiniteContact::atom_graph(&pts, &edges).expect("edges are in range");
        for bounded in pts.elements() {
            if let Ok(p) = LocalProximitySpace::new(rho.clone(), bounded) {
                out.push(p);
            }
        }
    }
    out
}

/// Every admissible LCA on the regular closed sets of `space`.
pub fn admissible_rc_lcas(space: &FiniteSpace) -> Result<Vec<RcLca>> {
    let rc = rc_algebra(space)?;
    let alg = rc.algebra().clone();
    let n = alg.n();
    if n > 4 {
        return Err(Error::Unsupported(format!("RC(X) has {n} atoms; enumeration is limited to 4")));
    }
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|p| (p + 1..n).map(move |q| (p, q))).collect();
    let mut out = Vec::new();
    for bits in 0u32..1 << pairs.len() {
        let edges: Vec<(usize, usize)> =
            pairs.iter().enumerate().filter(|(i, _)| bits >> i & 1 == 1).map(|(_, &e)| e).collect();
        let rho = FiniteContact::atom_graph(&alg, &edges)?;
        for bounded in alg.elements() {
            let cand = RcLca { rc: rc.clone(), lca: FiniteLca::new(rho.clone(), bounded)? };
            if check_admissible(&cand).holds_all() {
                out.push(cand);
            }
        }
    }
    Ok(out)
}
