use crate::algebra::{atoms_of, ElemSet, Mask, Powerset};
use crate::error::{input, Result};
use crate::report::{witness, Condition, ConditionReport, Provenance};

/// How a finite relation was built.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum FiniteKind {
    Overlap,
    /// Overlap plus the listed atom adjacencies.
    AtomGraph(Vec<(usize, usize)>),
    /// A hand-entered table; `completed` records whether upward closure
    /// added pairs.
    Explicit { completed: bool },
    /// Produced by a named construction.
    Derived(String),
}

/// A binary relation on a finite powerset, stored as a full table.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FiniteContact {
    algebra: Powerset,
    rows: Vec<ElemSet>,
    kind: FiniteKind,
}

impl FiniteContact {
    pub fn from_fn(algebra: &Powerset, kind: FiniteKind, f: impl Fn(Mask, Mask) -> bool) -> Self {
        let rows = algebra
            .elements()
            .map(|a| algebra.elements().filter(|&b| f(a, b)).collect())
            .collect();
        FiniteContact { algebra: algebra.clone(), rows, kind }
    }

    pub fn overlap(algebra: &Powerset) -> Self {
        Self::from_fn(algebra, FiniteKind::Overlap, |a, b| a & b != 0)
    }

    /// Overlap extended additively by symmetric atom adjacencies.
    pub fn atom_graph(algebra: &Powerset, edges: &[(usize, usize)]) -> Result<Self> {
        let n = algebra.n();
        if let Some(&(p, q)) = edges.iter().find(|&&(p, q)| p >= n || q >= n) {
            return input(format!("atom edge ({p},{q}) out of range"));
        }
        let mut adj = vec![0 as Mask; n];
        for &(p, q) in edges {
            adj[p] |= 1 << q;
            adj[q] |= 1 << p;
        }
        let mut norm: Vec<(usize, usize)> = edges.iter().map(|&(p, q)| (p.min(q), p.max(q))).collect();
        norm.sort_unstable();
        norm.dedup();
        let reach = |a: Mask| atoms_of(a).fold(a, |acc, i| acc | adj[i]);
        Ok(Self::from_fn(algebra, FiniteKind::AtomGraph(norm), |a, b| reach(a) & b != 0))
    }

    /// The upward closure of a list of related pairs.
    pub fn explicit(algebra: &Powerset, pairs: &[(Mask, Mask)]) -> Result<Self> {
        let top = algebra.top();
        if pairs.iter().any(|&(a, b)| (a | b) & !top != 0) {
            return input("explicit pair mentions atoms outside the algebra");
        }
        let rel = Self::from_fn(algebra, FiniteKind::Explicit { completed: false }, |a, b| {
            pairs.iter().any(|&(x, y)| x & !a == 0 && y & !b == 0)
        });
        let completed = rel.pair_count() != {
            let mut p = pairs.to_vec();
            p.sort_unstable();
            p.dedup();
            p.len()
        };
        Ok(FiniteContact { kind: FiniteKind::Explicit { completed }, ..rel })
    }

    pub fn algebra(&self) -> &Powerset {
        &self.algebra
    }

    pub fn kind(&self) -> &FiniteKind {
        &self.kind
    }

    pub fn related(&self, a: Mask, b: Mask) -> bool {
        self.rows[a as usize].contains(b)
    }

    /// Everything related to `a`.
    pub fn row(&self, a: Mask) -> &ElemSet {
        &self.rows[a as usize]
    }

    pub fn way_inside(&self, a: Mask, b: Mask) -> bool {
        !self.related(a, self.algebra.complement(b))
    }

    pub fn pair_count(&self) -> usize {
        self.rows.iter().map(ElemSet::len).sum()
    }

    /// `self ⊆ other`, with the least pair of `self` missing from `other`.
    pub fn subset_witness(&self, other: &FiniteContact) -> Option<(Mask, Mask)> {
        self.algebra
            .elements()
            .find_map(|a| self.rows[a as usize].iter().find(|&b| !other.related(a, b)).map(|b| (a, b)))
    }

    pub fn is_subset(&self, other: &FiniteContact) -> bool {
        self.subset_witness(other).is_none()
    }

    /// Pairs of distinct atoms that are related.
    pub fn atom_edges(&self) -> Vec<(usize, usize)> {
        let n = self.algebra.n();
        let mut out = Vec::new();
        for p in 0..n {
            for q in p + 1..n {
                if self.related(1 << p, 1 << q) {
                    out.push((p, q));
                }
            }
        }
        out
    }

    /// Same table, relabelled as a derived construction.
    pub fn derived(mut self, name: &str) -> Self {
        self.kind = FiniteKind::Derived(name.into());
        self
    }

    /// All related pairs in ascending order.
    pub fn pairs(&self) -> Vec<(Mask, Mask)> {
        self.algebra
            .elements()
            .flat_map(|a| self.rows[a as usize].iter().map(move |b| (a, b)))
            .collect()
    }

    /// Whether two relations have the same table, ignoring provenance.
    pub fn same_table(&self, other: &FiniteContact) -> bool {
        self.algebra == other.algebra && self.rows == other.rows
    }
}

/// A finite local contact algebra; the bounded ideal is `↓bounded`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FiniteLca {
    rho: FiniteContact,
    bounded: Mask,
}

impl FiniteLca {
    pub fn new(rho: FiniteContact, bounded: Mask) -> Result<Self> {
        if bounded & !rho.algebra.top() != 0 {
            return input("bounded ideal generator leaves the algebra");
        }
        Ok(FiniteLca { rho, bounded })
    }

    /// `(P(n), overlap, all)`.
    pub fn overlap_all(algebra: &Powerset) -> Self {
        FiniteLca { rho: FiniteContact::overlap(algebra), bounded: algebra.top() }
    }

    pub fn algebra(&self) -> &Powerset {
        &self.rho.algebra
    }

    pub fn rho(&self) -> &FiniteContact {
        &self.rho
    }

    /// The largest bounded element.
    pub fn bounded(&self) -> Mask {
        self.bounded
    }

    pub fn is_bounded(&self, a: Mask) -> bool {
        a & !self.bounded == 0
    }

    pub fn way_inside(&self, a: Mask, b: Mask) -> bool {
        self.rho.way_inside(a, b)
    }

    pub fn c_rho(&self) -> FiniteContact {
        FiniteContact::from_fn(self.algebra(), FiniteKind::Derived("c_rho".into()), |a, b| {
            self.rho.related(a, b) || (!self.is_bounded(a) && !self.is_bounded(b))
        })
    }
}

const EX: Provenance = Provenance::Exhaustive;

fn pair(alg: &Powerset, names: [&str; 2], a: Mask, b: Mask) -> Vec<(String, String)> {
    witness([(names[0], alg.render(a)), (names[1], alg.render(b))])
}

fn triple(alg: &Powerset, a: Mask, b: Mask, c: Mask) -> Vec<(String, String)> {
    witness([("a", alg.render(a)), ("b", alg.render(b)), ("c", alg.render(c))])
}

fn first_pair(alg: &Powerset, mut bad: impl FnMut(Mask, Mask) -> bool) -> Option<(Mask, Mask)> {
    alg.elements().find_map(|a| alg.elements().find(|&b| bad(a, b)).map(|b| (a, b)))
}

pub(crate) fn check_contact_axioms(c: &FiniteContact) -> ConditionReport {
    let alg = c.algebra();
    let mut r = ConditionReport::default();
    let c1 = first_pair(alg, |a, b| {
        (c.related(a, b) && (a == 0 || b == 0)) || (b == a && a != 0 && !c.related(a, a))
    });
    r.push(Condition::from_witness("C1", EX, c1.map(|(a, b)| pair(alg, ["a", "b"], a, b))));
    let c2 = first_pair(alg, |a, b| c.related(a, b) != c.related(b, a));
    r.push(Condition::from_witness("C2", EX, c2.map(|(a, b)| pair(alg, ["a", "b"], a, b))));
    let mut c3 = None;
    'outer: for a in alg.elements() {
        for b in alg.elements() {
            for d in alg.elements() {
                let right = c.related(a, b | d) != (c.related(a, b) || c.related(a, d));
                let left = c.related(b | d, a) != (c.related(b, a) || c.related(d, a));
                if right || left {
                    c3 = Some(triple(alg, a, b, d));
                    break 'outer;
                }
            }
        }
    }
    r.push(Condition::from_witness("C3", EX, c3));
    let c4 = first_pair(alg, |a, b| a & b != 0 && !c.related(a, b));
    r.push(Condition::from_witness("C4", EX, c4.map(|(a, b)| pair(alg, ["a", "b"], a, b))));
    r
}

pub(crate) fn check_nca(c: &FiniteContact) -> ConditionReport {
    let alg = c.algebra();
    let mut r = check_contact_axioms(c);
    let normal = first_pair(alg, |a, b| {
        !c.related(a, b) && !alg.elements().any(|x| !c.related(a, x) && !c.related(alg.complement(x), b))
    });
    r.push(Condition::from_witness("normality", EX, normal.map(|(a, b)| pair(alg, ["a", "b"], a, b))));
    let ext = alg
        .elements()
        .find(|&a| a != alg.top() && !alg.elements().any(|b| b != 0 && !c.related(b, a)));
    r.push(Condition::from_witness("extensionality", EX, ext.map(|a| witness([("a", alg.render(a))]))));
    r
}

pub(crate) fn check_lca(l: &FiniteLca) -> ConditionReport {
    let alg = l.algebra();
    let rho = l.rho();
    let mut r = check_contact_axioms(rho);
    let bounded: Vec<Mask> = alg.elements().filter(|&b| l.is_bounded(b)).collect();
    let bc1 = first_pair(alg, |a, c| {
        l.is_bounded(a) && l.way_inside(a, c) && !bounded.iter().any(|&b| l.way_inside(a, b) && l.way_inside(b, c))
    });
    r.push(Condition::from_witness("BC1", EX, bc1.map(|(a, c)| pair(alg, ["a", "c"], a, c))));
    let bc2 = first_pair(alg, |a, b| rho.related(a, b) && !bounded.iter().any(|&d| rho.related(a, b & d)));
    r.push(Condition::from_witness("BC2", EX, bc2.map(|(a, b)| pair(alg, ["a", "b"], a, b))));
    let bc3 = alg.elements().find(|&a| a != 0 && !bounded.iter().any(|&b| b != 0 && l.way_inside(b, a)));
    r.push(Condition::from_witness("BC3", EX, bc3.map(|a| witness([("a", alg.render(a))]))));
    r
}
