//! Contact relations, normal contact algebras and local contact algebras.

mod finite;
mod symbolic;

pub use finite::{FiniteContact, FiniteKind, FiniteLca};
pub use symbolic::{random_element, SampleConfig, SymbolicContact, SymbolicLca};
pub(crate) use finite::{check_lca as check_finite_lca, check_nca as check_finite_nca};
pub(crate) use symbolic::{
    check_lca as check_symbolic_lca, check_nca as check_symbolic_nca,
    pair_witness, sampled_subset_witness, Sampler};

use crate::algebra::{BooleanAlgebra, Element, Ideal};
use crate::error::Result;
use crate::report::ConditionReport;

/// A contact relation on a finite or symbolic algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Contact {
    Finite(FiniteContact),
    Symbolic { algebra: BooleanAlgebra, kernel: SymbolicContact },
}

impl Contact {
    pub fn algebra(&self) -> BooleanAlgebra {
        match self {
            Contact::Finite(c) => BooleanAlgebra::Powerset(c.algebra().clone()),
            Contact::Symbolic { algebra, .. } => algebra.clone(),
        }
    }

    pub fn related(&self, a: &Element, b: &Element) -> bool {
        match (self, a, b) {
            (Contact::Finite(c), Element::Atoms(x), Element::Atoms(y)) => c.related(*x, *y),
            (Contact::Symbolic { kernel, .. }, Element::Nat(x), Element::Nat(y)) => kernel.related(x, y),
            _ => panic!("element kind does not match the relation"),
        }
    }

    pub fn as_finite(&self) -> Option<&FiniteContact> {
        match self {
            Contact::Finite(c) => Some(c),
            Contact::Symbolic { .. } => None,
        }
    }
}

/// A local contact algebra `(A, ρ, IB)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Lca {
    Finite(FiniteLca),
    Symbolic(SymbolicLca),
}

impl Lca {
    pub fn algebra(&self) -> BooleanAlgebra {
        match self {
            Lca::Finite(l) => BooleanAlgebra::Powerset(l.algebra().clone()),
            Lca::Symbolic(l) => l.algebra.clone(),
        }
    }

    pub fn rho(&self) -> Contact {
        match self {
            Lca::Finite(l) => Contact::Finite(l.rho().clone()),
            Lca::Symbolic(l) => Contact::Symbolic { algebra: l.algebra.clone(), kernel: l.rho.clone() },
        }
    }

    pub fn bounded(&self) -> Ideal {
        match self {
            Lca::Finite(l) => Ideal::Principal(Element::Atoms(l.bounded())),
            Lca::Symbolic(l) => l.bounded.clone(),
        }
    }

    pub fn as_finite(&self) -> Option<&FiniteLca> {
        match self {
            Lca::Finite(l) => Some(l),
            Lca::Symbolic(_) => None,
        }
    }

    pub fn as_symbolic(&self) -> Option<&SymbolicLca> {
        match self {
            Lca::Symbolic(l) => Some(l),
            Lca::Finite(_) => None,
        }
    }
}

/// Checks the contact axioms C1 to C4.
///
/// Finite relations are checked exhaustively; symbolic ones on a seeded
/// sample, with structural provenance where the kernel guarantees the axiom.
pub fn check_contact_axioms(c: &Contact) -> ConditionReport {
    match c {
        Contact::Finite(c) => finite::check_contact_axioms(c),
        Contact::Symbolic { algebra, kernel } => {
            symbolic::check_contact_axioms(algebra, kernel, &SampleConfig::default())
        }
    }
}

/// Checks the contact axioms plus normality and extensionality.
pub fn check_nca(c: &Contact) -> ConditionReport {
    match c {
        Contact::Finite(c) => finite::check_nca(c),
        Contact::Symbolic { algebra, kernel } => symbolic::check_nca(algebra, kernel, &SampleConfig::default()),
    }
}

/// Checks the contact axioms plus BC1 to BC3.
pub fn check_lca(l: &Lca) -> ConditionReport {
    match l {
        Lca::Finite(l) => finite::check_lca(l),
        Lca::Symbolic(l) => symbolic::check_lca(l, &SampleConfig::default()),
    }
}

/// `a ≪ b`, that is `a` is not in contact with the complement of `b`.
pub fn way_inside(l: &Lca, a: &Element, b: &Element) -> bool {
    let alg = l.algebra();
    !l.rho().related(a, &alg.complement(b))
}

/// The relation `a C_ρ b` iff `a ρ b` or neither `a` nor `b` is bounded.
pub fn c_rho(l: &Lca) -> Contact {
    match l {
        Lca::Finite(l) => Contact::Finite(l.c_rho()),
        Lca::Symbolic(l) => Contact::Symbolic {
            algebra: l.algebra.clone(),
            kernel: SymbolicContact::c_rho(&l.rho, &l.bounded),
        },
    }
}

/// Validates that an element belongs to the LCA's algebra.
pub fn validate_element(l: &Lca, a: &Element) -> Result<()> {
    l.algebra().validate(a)
}
