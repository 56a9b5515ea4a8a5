use crate::error::{input, Result};

use super::{atoms_of, Mask, NatSet, Powerset};

/// A complete Boolean homomorphism between finite powersets.
///
/// Stored by the images of the source atoms. Completeness forces these
/// images to be pairwise disjoint with join equal to the target top; an
/// atom may map to 0.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FiniteHom {
    source: Powerset,
    target: Powerset,
    images: Vec<Mask>,
}

impl FiniteHom {
    pub fn new(source: Powerset, target: Powerset, images: Vec<Mask>) -> Result<Self> {
        if images.len() != source.n() {
            return input(format!(
                "expected images for {} source atoms, got {}",
                source.n(),
                images.len()
            ));
        }
        let mut seen = 0;
        for (i, &img) in images.iter().enumerate() {
            if img & !target.top() != 0 {
                return input(format!("image of {} leaves the target algebra", source.label(i)));
            }
            if img & seen != 0 {
                return input(format!("image of {} overlaps an earlier image", source.label(i)));
            }
            seen |= img;
        }
        if seen != target.top() {
            return input("atom images do not cover the target top");
        }
        Ok(FiniteHom { source, target, images })
    }

    pub fn identity(algebra: &Powerset) -> Self {
        FiniteHom {
            source: algebra.clone(),
            target: algebra.clone(),
            images: algebra.atoms().map(|i| 1 << i).collect(),
        }
    }

    /// The hom `a ↦ g⁻¹(a)` induced by a map `g` from target atoms to source
    /// atoms.
    pub fn from_preimage_map(source: Powerset, target: Powerset, g: &[usize]) -> Result<Self> {
        if g.len() != target.n() {
            return input("preimage map must assign a source atom to every target atom");
        }
        let mut images = vec![0; source.n()];
        for (q, &p) in g.iter().enumerate() {
            if p >= source.n() {
                return input(format!("source atom index {p} out of range"));
            }
            images[p] |= 1 << q;
        }
        FiniteHom::new(source, target, images)
    }

    pub fn source(&self) -> &Powerset {
        &self.source
    }

    pub fn target(&self) -> &Powerset {
        &self.target
    }

    pub fn images(&self) -> &[Mask] {
        &self.images
    }

    pub fn apply(&self, a: Mask) -> Mask {
        atoms_of(a).fold(0, |acc, i| acc | self.images[i])
    }

    /// The lower adjoint `b ↦ ⋀{a : b ≤ φ(a)}`.
    pub fn adjoint(&self, b: Mask) -> Mask {
        self.source
            .atoms()
            .filter(|&i| self.images[i] & b != 0)
            .fold(0, |acc, i| acc | 1 << i)
    }

    pub fn is_injective(&self) -> bool {
        self.images.iter().all(|&m| m != 0)
    }

    pub fn is_surjective(&self) -> bool {
        self.images.iter().all(|m| m.count_ones() <= 1)
    }

    pub fn is_isomorphism(&self) -> bool {
        self.is_injective() && self.is_surjective()
    }

    /// `other ∘ self`.
    pub fn then(&self, other: &FiniteHom) -> Result<FiniteHom> {
        if self.target != other.source {
            return input("homomorphisms are not composable");
        }
        let images = self.images.iter().map(|&m| other.apply(m)).collect();
        FiniteHom::new(self.source.clone(), other.target.clone(), images)
    }
}

/// The homomorphisms between symbolic algebras whose adjoint has a closed
/// form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SymbolicHom {
    Identity,
    /// `a ↦ a ∧ top` onto `↓top`.
    Restriction(NatSet),
}

impl SymbolicHom {
    pub fn apply(&self, a: &NatSet) -> NatSet {
        match self {
            SymbolicHom::Identity => a.clone(),
            SymbolicHom::Restriction(top) => a.meet(top),
        }
    }

    pub fn adjoint(&self, b: &NatSet) -> NatSet {
        b.clone()
    }
}
