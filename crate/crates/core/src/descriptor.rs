//! JSON descriptors for algebras, elements, relations, LCAs, spaces, maps
//! and homomorphisms.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::algebra::{atoms_of, BooleanAlgebra, Element, FiniteHom, Ideal, Mask, NatSet, NatSetParts, Powerset};
use crate::contact::{c_rho, Contact, FiniteContact, FiniteKind, FiniteLca, Lca, SymbolicContact, SymbolicLca};
use crate::error::{input, Result};
use crate::extension::beta_ncr;
use crate::space::{FiniteSpace, PointSet, SpaceMap};

/// `{"kind":"powerset","atoms":[..]}`, `{"kind":"finite_cofinite"}` or
/// `{"kind":"ult_periodic","modulus":m}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum AlgebraDesc {
    Powerset { atoms: Vec<String> },
    FiniteCofinite,
    UltPeriodic { modulus: u64 },
}

impl AlgebraDesc {
    pub fn build(&self) -> Result<BooleanAlgebra> {
        use crate::algebra::{make_algebra, AlgebraKind};
        make_algebra(match self {
            AlgebraDesc::Powerset { atoms } => AlgebraKind::Powerset(atoms.clone()),
            AlgebraDesc::FiniteCofinite => AlgebraKind::FiniteCofinite,
            AlgebraDesc::UltPeriodic { modulus } => AlgebraKind::UltPeriodic(*modulus),
        })
    }

    pub fn describe(alg: &BooleanAlgebra) -> Self {
        match alg {
            BooleanAlgebra::Powerset(p) => AlgebraDesc::Powerset { atoms: p.labels().to_vec() },
            BooleanAlgebra::FiniteCofinite => AlgebraDesc::FiniteCofinite,
            BooleanAlgebra::UltPeriodic { modulus } => AlgebraDesc::UltPeriodic { modulus: *modulus },
        }
    }
}

/// An element: `{"atoms":[..]}` on a powerset; `{"finite":[..]}`,
/// `{"cofinite_except":[..]}` or the periodic wire form on the naturals.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ElementDesc {
    Atoms { atoms: Vec<String> },
    Finite { finite: Vec<u64> },
    CofiniteExcept { cofinite_except: Vec<u64> },
    Periodic(NatSetParts),
}

impl ElementDesc {
    pub fn build(&self, alg: &BooleanAlgebra) -> Result<Element> {
        let e = match (self, alg) {
            (ElementDesc::Atoms { atoms }, BooleanAlgebra::Powerset(p)) => Element::Atoms(p.element(atoms)?),
            (ElementDesc::Atoms { .. }, _) => return input("atom lists only name elements of a powerset"),
            (_, BooleanAlgebra::Powerset(_)) => return input("elements of a powerset are given as atom lists"),
            (ElementDesc::Finite { finite }, _) => Element::Nat(NatSet::finite(finite.iter().copied())),
            (ElementDesc::CofiniteExcept { cofinite_except }, _) => {
                Element::Nat(NatSet::cofinite_except(cofinite_except.iter().copied()))
            }
            (ElementDesc::Periodic(parts), _) => Element::Nat(NatSet::try_from(parts.clone())?),
        };
        alg.validate(&e)?;
        Ok(e)
    }

    pub fn build_mask(&self, p: &Powerset) -> Result<Mask> {
        match self {
            ElementDesc::Atoms { atoms } => p.element(atoms),
            _ => input("elements of a powerset are given as atom lists"),
        }
    }

    pub fn describe(alg: &BooleanAlgebra, e: &Element) -> Self {
        match (alg, e) {
            (BooleanAlgebra::Powerset(p), Element::Atoms(m)) => ElementDesc::Atoms { atoms: p.atom_labels(*m) },
            (_, Element::Nat(s)) if s.is_finite() => ElementDesc::Finite { finite: s.prefix() },
            (_, Element::Nat(s)) if s.is_cofinite() => {
                ElementDesc::CofiniteExcept { cofinite_except: s.complement().prefix() }
            }
            (_, Element::Nat(s)) => ElementDesc::Periodic(NatSetParts::from(s)),
            (_, Element::Atoms(m)) => ElementDesc::Atoms { atoms: atoms_of(*m).map(|i| i.to_string()).collect() },
        }
    }

    pub fn describe_mask(p: &Powerset, m: Mask) -> Self {
        ElementDesc::Atoms { atoms: p.atom_labels(m) }
    }
}

/// A contact relation.
///
/// `c_rho` and `beta` without explicit parts refer to the surrounding LCA.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum ContactDesc {
    Overlap,
    AtomGraph {
        edges: Vec<(String, String)>,
    },
    CRho {
        #[serde(default, skip_serializing_if = "Option::is_none")]
        rho: Option<Box<ContactDesc>>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        bounded: Option<BoundedDesc>,
    },
    Beta,
    Partition {
        modulus: u64,
    },
    Explicit {
        pairs: Vec<(ElementDesc, ElementDesc)>,
    },
}

impl ContactDesc {
    /// Builds the relation on `alg`; `context` resolves `c_rho` and `beta`.
    pub fn build(&self, alg: &BooleanAlgebra, context: Option<&Lca>) -> Result<Contact> {
        match (self, alg) {
            (ContactDesc::Overlap, BooleanAlgebra::Powerset(p)) => Ok(Contact::Finite(FiniteContact::overlap(p))),
            (ContactDesc::Overlap, _) => Ok(symbolic(alg, SymbolicContact::Overlap)),
            (ContactDesc::AtomGraph { edges }, BooleanAlgebra::Powerset(p)) => {
                let idx = |l: &str| p.index_of(l).map_or_else(|| input(format!("unknown atom {l:?}")), Ok);
                let edges = edges.iter().map(|(a, b)| Ok((idx(a)?, idx(b)?))).collect::<Result<Vec<_>>>()?;
                Ok(Contact::Finite(FiniteContact::atom_graph(p, &edges)?))
            }
            (ContactDesc::Partition { modulus }, BooleanAlgebra::Powerset(_)) => {
                input(format!("partition relation mod {modulus} needs an algebra of subsets of the naturals"))
            }
            (ContactDesc::AtomGraph { .. }, _) => input("atom graphs need a powerset algebra"),
            (ContactDesc::Partition { modulus: 0 }, _) => input("partition modulus must be positive"),
            (ContactDesc::Partition { modulus }, _) => Ok(symbolic(alg, SymbolicContact::Partition(*modulus))),
            (ContactDesc::Explicit { pairs }, BooleanAlgebra::Powerset(p)) => {
                let pairs = pairs
                    .iter()
                    .map(|(a, b)| Ok((a.build_mask(p)?, b.build_mask(p)?)))
                    .collect::<Result<Vec<_>>>()?;
                Ok(Contact::Finite(FiniteContact::explicit(p, &pairs)?))
            }
            (ContactDesc::Explicit { .. }, _) => input("explicit relations need a powerset algebra"),
            (ContactDesc::CRho { rho: Some(rho), bounded: Some(bounded) }, _) => {
                let rho = rho.build(alg, context)?;
                let bounded = bounded.build(alg)?;
                Ok(c_rho(&assemble(alg, rho, bounded)?))
            }
            (ContactDesc::CRho { rho: None, bounded: None }, _) => Ok(c_rho(&lca_context(alg, context)?)),
            (ContactDesc::CRho { .. }, _) => input("c_rho needs both rho and bounded, or neither"),
            (ContactDesc::Beta, _) => beta_ncr(&lca_context(alg, context)?),
        }
    }

    /// A descriptor for a built relation.
    pub fn describe(c: &Contact) -> Self {
        match c {
            Contact::Finite(f) => describe_finite(f),
            Contact::Symbolic { algebra, kernel } => describe_kernel(algebra, kernel),
        }
    }
}

fn symbolic(alg: &BooleanAlgebra, kernel: SymbolicContact) -> Contact {
    Contact::Symbolic { algebra: alg.clone(), kernel }
}

fn lca_context(alg: &BooleanAlgebra, context: Option<&Lca>) -> Result<Lca> {
    match context {
        Some(l) if &l.algebra() == alg => Ok(l.clone()),
        Some(_) => input("the relation and its LCA live on different algebras"),
        None => input("c_rho and beta without parts need a surrounding LCA"),
    }
}

fn describe_finite(f: &FiniteContact) -> ContactDesc {
    let p = f.algebra();
    if *f.kind() == FiniteKind::Overlap || f.same_table(&FiniteContact::overlap(p)) {
        return ContactDesc::Overlap;
    }
    let edges = f.atom_edges();
    if FiniteContact::atom_graph(p, &edges).is_ok_and(|g| g.same_table(f)) {
        let label = |i: usize| p.label(i).to_string();
        return ContactDesc::AtomGraph { edges: edges.into_iter().map(|(a, b)| (label(a), label(b))).collect() };
    }
    let pairs = f.pairs();
    let minimal = pairs
        .iter()
        .filter(|&&(a, b)| !pairs.iter().any(|&(x, y)| (x, y) != (a, b) && x & !a == 0 && y & !b == 0))
        .map(|&(a, b)| (ElementDesc::describe_mask(p, a), ElementDesc::describe_mask(p, b)))
        .collect();
    ContactDesc::Explicit { pairs: minimal }
}

fn describe_kernel(alg: &BooleanAlgebra, k: &SymbolicContact) -> ContactDesc {
    match k {
        SymbolicContact::Overlap => ContactDesc::Overlap,
        SymbolicContact::Partition(m) => ContactDesc::Partition { modulus: *m },
        SymbolicContact::CRho { rho, bounded } => ContactDesc::CRho {
            rho: Some(Box::new(describe_kernel(alg, rho))),
            bounded: Some(BoundedDesc::describe(alg, bounded)),
        },
    }
}

/// A boundedness ideal.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum BoundedDesc {
    All,
    Finite,
    Principal { top: ElementDesc },
    List { elements: Vec<ElementDesc> },
}

impl BoundedDesc {
    pub fn build(&self, alg: &BooleanAlgebra) -> Result<Ideal> {
        Ok(match self {
            BoundedDesc::All => Ideal::All,
            BoundedDesc::Finite => Ideal::FiniteElements,
            BoundedDesc::Principal { top } => Ideal::Principal(top.build(alg)?),
            BoundedDesc::List { elements } => {
                let gens = elements.iter().map(|e| e.build(alg)).collect::<Result<Vec<_>>>()?;
                Ideal::generated(alg, &gens)
            }
        })
    }

    pub fn describe(alg: &BooleanAlgebra, i: &Ideal) -> Self {
        match i {
            Ideal::All => BoundedDesc::All,
            Ideal::Principal(e) if *e == alg.one() => BoundedDesc::All,
            Ideal::FiniteElements => BoundedDesc::Finite,
            Ideal::Principal(e) => BoundedDesc::Principal { top: ElementDesc::describe(alg, e) },
        }
    }
}

fn assemble(alg: &BooleanAlgebra, rho: Contact, bounded: Ideal) -> Result<Lca> {
    match (alg, rho) {
        (BooleanAlgebra::Powerset(p), Contact::Finite(rho)) => {
            Ok(Lca::Finite(FiniteLca::new(rho, bounded.top_mask(p))?))
        }
        (_, Contact::Symbolic { kernel, .. }) => {
            Ok(Lca::Symbolic(SymbolicLca { algebra: alg.clone(), rho: kernel, bounded }))
        }
        _ => input("the relation and the algebra do not match"),
    }
}

/// `{"algebra":..,"contact":..,"bounded":..}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LcaDesc {
    pub algebra: AlgebraDesc,
    pub contact: ContactDesc,
    pub bounded: BoundedDesc,
}

impl LcaDesc {
    pub fn build(&self) -> Result<Lca> {
        let alg = self.algebra.build()?;
        if matches!(self.contact, ContactDesc::Beta | ContactDesc::CRho { rho: None, .. }) {
            return input("an LCA's own relation cannot refer to the LCA");
        }
        let rho = self.contact.build(&alg, None)?;
        let bounded = self.bounded.build(&alg)?;
        assemble(&alg, rho, bounded)
    }

    /// Builds a finite LCA, rejecting symbolic ones.
    pub fn build_finite(&self) -> Result<FiniteLca> {
        match self.build()? {
            Lca::Finite(l) => Ok(l),
            Lca::Symbolic(_) => input("this operation needs a finite LCA"),
        }
    }

    pub fn describe(l: &Lca) -> Self {
        let alg = l.algebra();
        LcaDesc {
            algebra: AlgebraDesc::describe(&alg),
            contact: ContactDesc::describe(&l.rho()),
            bounded: BoundedDesc::describe(&alg, &l.bounded()),
        }
    }
}

/// `{"points":[..],"opens":[[..],..]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SpaceDesc {
    pub points: Vec<String>,
    pub opens: Vec<Vec<String>>,
}

impl SpaceDesc {
    pub fn build(&self) -> Result<FiniteSpace> {
        let find = |l: &String| {
            self.points.iter().position(|p| p == l).map_or_else(|| input(format!("unknown point {l:?}")), Ok)
        };
        let opens = self
            .opens
            .iter()
            .map(|u| u.iter().try_fold(0 as PointSet, |acc, l| Ok(acc | 1 << find(l)?)))
            .collect::<Result<Vec<_>>>()?;
        FiniteSpace::new(self.points.clone(), &opens)
    }

    pub fn describe(s: &FiniteSpace) -> Self {
        SpaceDesc {
            points: s.labels().to_vec(),
            opens: s.opens().iter().map(|&u| atoms_of(u).map(|i| s.labels()[i].clone()).collect()).collect(),
        }
    }
}

/// `{"source":..,"target":..,"images":{point:point}}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MapDesc {
    pub source: SpaceDesc,
    pub target: SpaceDesc,
    pub images: BTreeMap<String, String>,
}

impl MapDesc {
    pub fn build(&self) -> Result<SpaceMap> {
        let (src, tgt) = (self.source.build()?, self.target.build()?);
        let images = src
            .labels()
            .iter()
            .map(|x| {
                let y = self.images.get(x).map_or_else(|| input(format!("no image for point {x:?}")), Ok)?;
                tgt.index_of(y).map_or_else(|| input(format!("unknown target point {y:?}")), Ok)
            })
            .collect::<Result<Vec<_>>>()?;
        if let Some(extra) = self.images.keys().find(|k| src.index_of(k).is_none()) {
            return input(format!("image given for unknown point {extra:?}"));
        }
        SpaceMap::new(src, tgt, images)
    }
}

/// `{"images":{atom:element}}` for a homomorphism between finite algebras.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HomDesc {
    pub images: BTreeMap<String, ElementDesc>,
}

impl HomDesc {
    pub fn build(&self, source: &Powerset, target: &Powerset) -> Result<FiniteHom> {
        let images = source
            .labels()
            .iter()
            .map(|a| {
                self.images
                    .get(a)
                    .map_or_else(|| input(format!("no image for atom {a:?}")), Ok)?
                    .build_mask(target)
            })
            .collect::<Result<Vec<_>>>()?;
        if let Some(extra) = self.images.keys().find(|k| source.index_of(k).is_none()) {
            return input(format!("image given for unknown atom {extra:?}"));
        }
        FiniteHom::new(source.clone(), target.clone(), images)
    }

    pub fn describe(h: &FiniteHom) -> Self {
        let (s, t) = (h.source(), h.target());
        HomDesc {
            images: s
                .atoms()
                .map(|i| (s.label(i).to_string(), ElementDesc::describe_mask(t, h.images()[i])))
                .collect(),
        }
    }
}
