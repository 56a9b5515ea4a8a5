//! Decidable Boolean algebras: finite powersets and two families of subsets
//! of the naturals.

mod elemset;
mod hom;
mod laws;
mod natset;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{input, Error, Result};

pub use elemset::ElemSet;
pub use hom::{FiniteHom, SymbolicHom};
pub use laws::check_boolean_laws;
pub use natset::{NatSet, NatSetParts, MAX_MODULUS, MAX_THRESHOLD};
pub(crate) use natset::{gcd, lcm};

/// Largest number of atoms a finite algebra may carry.
///
/// Contact relations on a finite algebra are stored as full element-pair
/// tables, so the element count `2^n` must stay small.
pub const MAX_ATOMS: usize = 8;

/// An element of a finite powerset, as a bitmask over its atoms.
pub type Mask = u64;

const DEFAULT_LABELS: [&str; 8] = ["p", "q", "r", "s", "t", "u", "v", "w"];

/// The powerset of a finite, labelled atom set.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Powerset {
    labels: Vec<String>,
}

impl Powerset {
    pub fn new<S: Into<String>>(labels: impl IntoIterator<Item = S>) -> Result<Self> {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        if labels.len() > MAX_ATOMS {
            return input(format!("at most {MAX_ATOMS} atoms are supported, got {}", labels.len()));
        }
        for (i, l) in labels.iter().enumerate() {
            if l.is_empty() {
                return input("atom labels must be nonempty");
            }
            if labels[..i].contains(l) {
                return input(format!("duplicate atom label {l:?}"));
            }
        }
        Ok(Powerset { labels })
    }

    /// `P(n)` with atoms labelled `p, q, r, ...`.
    ///
    /// # Panics
    ///
    /// If `n > MAX_ATOMS`.
    pub fn with_atoms(n: usize) -> Self {
        assert!(n <= MAX_ATOMS, "at most {MAX_ATOMS} atoms");
        Powerset { labels: DEFAULT_LABELS[..n].iter().map(|s| s.to_string()).collect() }
    }

    pub fn n(&self) -> usize {
        self.labels.len()
    }

    pub fn size(&self) -> usize {
        1 << self.n()
    }

    pub fn top(&self) -> Mask {
        (1u64 << self.n()) - 1
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, atom: usize) -> &str {
        &self.labels[atom]
    }

    /// All elements in ascending mask order.
    pub fn elements(&self) -> impl Iterator<Item = Mask> {
        0..(1u64 << self.n())
    }

    /// Atom indices in ascending order.
    pub fn atoms(&self) -> impl Iterator<Item = usize> {
        0..self.n()
    }

    pub fn complement(&self, a: Mask) -> Mask {
        self.top() & !a
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// The element consisting of the named atoms.
    pub fn element<S: AsRef<str>>(&self, labels: &[S]) -> Result<Mask> {
        labels.iter().try_fold(0, |acc, l| {
            let l = l.as_ref();
            self.index_of(l)
                .map(|i| acc | (1 << i))
                .ok_or_else(|| Error::Input(format!("unknown atom {l:?}")))
        })
    }

    pub fn atom_labels(&self, a: Mask) -> Vec<String> {
        atoms_of(a).map(|i| self.labels[i].clone()).collect()
    }

    /// Renders an element as `{p,q}`.
    pub fn render(&self, a: Mask) -> String {
        format!("{{{}}}", self.atom_labels(a).join(","))
    }

    /// The powerset of the atoms below `a0`, keeping their labels.
    pub fn restrict(&self, a0: Mask) -> Powerset {
        Powerset { labels: atoms_of(a0).map(|i| self.labels[i].clone()).collect() }
    }
}

/// Indices of the atoms in `a`, ascending.
pub fn atoms_of(a: Mask) -> impl Iterator<Item = usize> {
    (0..64).filter(move |i| a >> i & 1 == 1)
}

/// All submasks of `a` in ascending order.
pub fn submasks(a: Mask) -> impl Iterator<Item = Mask> {
    (0..=a).filter(move |s| s & !a == 0)
}

/// A decidable Boolean algebra.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum BooleanAlgebra {
    Powerset(Powerset),
    /// Finite and cofinite subsets of the naturals.
    FiniteCofinite,
    /// Ultimately periodic subsets of the naturals whose period divides the
    /// modulus.
    UltPeriodic { modulus: u64 },
}

/// An element of a [`BooleanAlgebra`].
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Element {
    Atoms(Mask),
    Nat(NatSet),
}

impl fmt::Debug for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Element::Atoms(m) => write!(f, "Atoms({m:#b})"),
            Element::Nat(s) => write!(f, "Nat({s})"),
        }
    }
}

impl Element {
    pub fn as_mask(&self) -> Option<Mask> {
        match self {
            Element::Atoms(m) => Some(*m),
            Element::Nat(_) => None,
        }
    }

    pub fn as_natset(&self) -> Option<&NatSet> {
        match self {
            Element::Nat(s) => Some(s),
            Element::Atoms(_) => None,
        }
    }

    fn zip(&self, other: &Element, f: fn(Mask, Mask) -> Mask, g: fn(&NatSet, &NatSet) -> NatSet) -> Element {
        match (self, other) {
            (Element::Atoms(a), Element::Atoms(b)) => Element::Atoms(f(*a, *b)),
            (Element::Nat(a), Element::Nat(b)) => Element::Nat(g(a, b)),
            _ => panic!("elements of different algebras combined"),
        }
    }

    pub fn meet(&self, other: &Element) -> Element {
        self.zip(other, |a, b| a & b, NatSet::meet)
    }

    pub fn join(&self, other: &Element) -> Element {
        self.zip(other, |a, b| a | b, NatSet::join)
    }

    pub fn minus(&self, other: &Element) -> Element {
        self.zip(other, |a, b| a & !b, NatSet::minus)
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Element::Atoms(a) => *a == 0,
            Element::Nat(s) => s.is_empty(),
        }
    }

    pub fn le(&self, other: &Element) -> bool {
        self.minus(other).is_zero()
    }

    pub fn intersects(&self, other: &Element) -> bool {
        !self.meet(other).is_zero()
    }
}

impl BooleanAlgebra {
    pub fn is_finite(&self) -> bool {
        matches!(self, BooleanAlgebra::Powerset(_))
    }

    pub fn as_powerset(&self) -> Option<&Powerset> {
        match self {
            BooleanAlgebra::Powerset(p) => Some(p),
            _ => None,
        }
    }

    /// The modulus every element's period must divide (symbolic algebras).
    pub fn modulus(&self) -> Option<u64> {
        match self {
            BooleanAlgebra::Powerset(_) => None,
            BooleanAlgebra::FiniteCofinite => Some(1),
            BooleanAlgebra::UltPeriodic { modulus } => Some(*modulus),
        }
    }

    pub fn zero(&self) -> Element {
        match self {
            BooleanAlgebra::Powerset(_) => Element::Atoms(0),
            _ => Element::Nat(NatSet::empty()),
        }
    }

    pub fn one(&self) -> Element {
        match self {
            BooleanAlgebra::Powerset(p) => Element::Atoms(p.top()),
            _ => Element::Nat(NatSet::full()),
        }
    }

    pub fn complement(&self, a: &Element) -> Element {
        match (self, a) {
            (BooleanAlgebra::Powerset(p), Element::Atoms(m)) => Element::Atoms(p.complement(*m)),
            (_, Element::Nat(s)) => Element::Nat(s.complement()),
            _ => panic!("element does not belong to this algebra"),
        }
    }

    /// Checks that `a` is an element of this algebra.
    pub fn validate(&self, a: &Element) -> Result<()> {
        match (self, a) {
            (BooleanAlgebra::Powerset(p), Element::Atoms(m)) if m & !p.top() == 0 => Ok(()),
            (BooleanAlgebra::Powerset(_), Element::Atoms(_)) => input("element mentions atoms outside the algebra"),
            (BooleanAlgebra::FiniteCofinite, Element::Nat(s)) if s.modulus() == 1 => Ok(()),
            (BooleanAlgebra::FiniteCofinite, Element::Nat(s)) => {
                input(format!("{s} is neither finite nor cofinite"))
            }
            (BooleanAlgebra::UltPeriodic { modulus }, Element::Nat(s)) if modulus % s.modulus() == 0 => Ok(()),
            (BooleanAlgebra::UltPeriodic { modulus }, Element::Nat(s)) => {
                input(format!("{s} has period {} which does not divide {modulus}", s.modulus()))
            }
            _ => input("element kind does not match the algebra"),
        }
    }

    /// Renders an element in the algebra's notation.
    pub fn render(&self, a: &Element) -> String {
        match (self, a) {
            (BooleanAlgebra::Powerset(p), Element::Atoms(m)) => p.render(*m),
            (_, Element::Nat(s)) => s.to_string(),
            (_, Element::Atoms(m)) => format!("{m:#b}"),
        }
    }

    /// Every element, for finite algebras.
    pub fn elements(&self) -> Option<Vec<Element>> {
        self.as_powerset().map(|p| p.elements().map(Element::Atoms).collect())
    }
}

/// Builds the algebra `↓a0` with relative complement, together with the
/// natural epimorphism `a ↦ a ∧ a0`.
pub fn relative_algebra(algebra: &Powerset, a0: Mask) -> Result<(Powerset, FiniteHom)> {
    if a0 == 0 {
        return Err(Error::Degenerate("the relative algebra of 0 is trivial".into()));
    }
    if a0 & !algebra.top() != 0 {
        return input("a0 mentions atoms outside the algebra");
    }
    let target = algebra.restrict(a0);
    let mut next = 0;
    let images = algebra
        .atoms()
        .map(|i| {
            if a0 >> i & 1 == 1 {
                next += 1;
                1 << (next - 1)
            } else {
                0
            }
        })
        .collect();
    let hom = FiniteHom::new(algebra.clone(), target.clone(), images)?;
    Ok((target, hom))
}

/// An ideal of a Boolean algebra.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Ideal {
    All,
    /// The finite elements of a symbolic algebra.
    FiniteElements,
    /// `↓top`.
    Principal(Element),
}

impl Ideal {
    pub fn contains(&self, a: &Element) -> bool {
        match self {
            Ideal::All => true,
            Ideal::FiniteElements => match a {
                Element::Nat(s) => s.is_finite(),
                Element::Atoms(_) => true,
            },
            Ideal::Principal(top) => a.le(top),
        }
    }

    /// The ideal generated by a list of elements.
    pub fn generated(algebra: &BooleanAlgebra, generators: &[Element]) -> Ideal {
        let top = generators.iter().fold(algebra.zero(), |acc, g| acc.join(g));
        Ideal::Principal(top)
    }

    /// The largest element of the ideal, on finite algebras.
    pub fn top_mask(&self, algebra: &Powerset) -> Mask {
        match self {
            Ideal::All | Ideal::FiniteElements => algebra.top(),
            Ideal::Principal(e) => e.as_mask().unwrap_or(0) & algebra.top(),
        }
    }
}

/// An ultrafilter of one of the supported algebras.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Ultrafilter {
    /// `↑atom`; for symbolic algebras the atom is a natural number.
    Principal { atom: u64 },
    /// The cofinite sets.
    FreeCofinite,
    /// Sets containing almost all of one residue class.
    FreeResidue { residue: u64, modulus: u64 },
}

impl Ultrafilter {
    pub fn contains(&self, a: &Element) -> bool {
        match (self, a) {
            (Ultrafilter::Principal { atom }, Element::Atoms(m)) => *atom < 64 && m >> atom & 1 == 1,
            (Ultrafilter::Principal { atom }, Element::Nat(s)) => s.contains(*atom),
            (Ultrafilter::FreeCofinite, Element::Nat(s)) => s.is_cofinite(),
            (Ultrafilter::FreeResidue { residue, modulus }, Element::Nat(s)) => {
                s.infinite_in_class(*residue, *modulus)
            }
            _ => false,
        }
    }

    pub fn is_principal(&self) -> bool {
        matches!(self, Ultrafilter::Principal { .. })
    }
}

/// The ultrafilters of an algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UltrafilterInventory {
    /// Principal ultrafilters, listed when there are finitely many.
    pub principal: Vec<Ultrafilter>,
    /// Whether every natural number yields a principal ultrafilter.
    pub principal_at_every_natural: bool,
    /// The free ultrafilters.
    pub free: Vec<Ultrafilter>,
}

pub fn ultrafilters(algebra: &BooleanAlgebra) -> UltrafilterInventory {
    match algebra {
        BooleanAlgebra::Powerset(p) => UltrafilterInventory {
            principal: p.atoms().map(|i| Ultrafilter::Principal { atom: i as u64 }).collect(),
            principal_at_every_natural: false,
            free: Vec::new(),
        },
        BooleanAlgebra::FiniteCofinite => UltrafilterInventory {
            principal: Vec::new(),
            principal_at_every_natural: true,
            free: vec![Ultrafilter::FreeCofinite],
        },
        BooleanAlgebra::UltPeriodic { modulus } => UltrafilterInventory {
            principal: Vec::new(),
            principal_at_every_natural: true,
            free: (0..*modulus)
                .map(|residue| Ultrafilter::FreeResidue { residue, modulus: *modulus })
                .collect(),
        },
    }
}

/// Validates an algebra descriptor's parameters and builds the handle.
pub fn make_algebra(kind: AlgebraKind) -> Result<BooleanAlgebra> {
    match kind {
        AlgebraKind::Powerset(labels) => Ok(BooleanAlgebra::Powerset(Powerset::new(labels)?)),
        AlgebraKind::FiniteCofinite => Ok(BooleanAlgebra::FiniteCofinite),
        AlgebraKind::UltPeriodic(m) if m == 0 || m > MAX_MODULUS => {
            input(format!("modulus must lie in 1..={MAX_MODULUS}, got {m}"))
        }
        AlgebraKind::UltPeriodic(m) => Ok(BooleanAlgebra::UltPeriodic { modulus: m }),
    }
}

/// Parameters accepted by [`make_algebra`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AlgebraKind {
    Powerset(Vec<String>),
    FiniteCofinite,
    UltPeriodic(u64),
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn powerset_counts() {
        let p = Powerset::with_atoms(3);
        assert_eq!(p.size(), 8);
        assert_eq!(p.atoms().count(), 3);
        assert_eq!(Powerset::with_atoms(1).size(), 2);
    }

    #[test]
    fn labels_and_rendering() {
        let p = Powerset::new(["a", "b", "c"]).unwrap();
        let e = p.element(&["c", "a"]).unwrap();
        assert_eq!(p.render(e), "{a,c}");
        assert!(p.element(&["z"]).is_err());
        assert!(Powerset::new(["a", "a"]).is_err());
    }

    #[test]
    fn relative_algebra_table() {
        let a = Powerset::with_atoms(3);
        let (b, phi) = relative_algebra(&a, 0b011).unwrap();
        assert_eq!(b.labels(), ["p", "q"]);
        assert_eq!(b.render(phi.apply(0b110)), "{q}");
        let (full, id) = relative_algebra(&a, a.top()).unwrap();
        assert_eq!(full, a);
        assert!(a.elements().all(|x| id.apply(x) == x));
        let (tiny, _) = relative_algebra(&a, 0b100).unwrap();
        assert_eq!(tiny.size(), 2);
        assert!(matches!(relative_algebra(&a, 0), Err(Error::Degenerate(_))));
    }

    #[test]
    fn make_algebra_rejects_zero_modulus() {
        assert!(make_algebra(AlgebraKind::UltPeriodic(0)).is_err());
        let alg = make_algebra(AlgebraKind::UltPeriodic(2)).unwrap();
        let evens = Element::Nat(NatSet::residue_class(0, 2));
        assert!(alg.validate(&evens).is_ok());
        assert!(BooleanAlgebra::FiniteCofinite.validate(&evens).is_err());
    }

    #[test]
    fn ultrafilter_inventory() {
        let inv = ultrafilters(&BooleanAlgebra::Powerset(Powerset::with_atoms(2)));
        assert_eq!(inv.principal.len(), 2);
        let inv = ultrafilters(&BooleanAlgebra::FiniteCofinite);
        assert_eq!(inv.free, vec![Ultrafilter::FreeCofinite]);
        let cof = Element::Nat(NatSet::cofinite_except([0]));
        assert!(inv.free[0].contains(&cof));
        assert!(!inv.free[0].contains(&Element::Nat(NatSet::finite([0]))));
    }

    #[test]
    fn ideals() {
        let alg = BooleanAlgebra::Powerset(Powerset::with_atoms(3));
        let i = Ideal::generated(&alg, &[Element::Atoms(0b001), Element::Atoms(0b010)]);
        assert!(i.contains(&Element::Atoms(0b011)));
        assert!(!i.contains(&Element::Atoms(0b100)));
        assert!(Ideal::FiniteElements.contains(&Element::Nat(NatSet::finite([3]))));
        assert!(!Ideal::FiniteElements.contains(&Element::Nat(NatSet::full())));
    }
}
