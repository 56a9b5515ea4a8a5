//! Finite topological spaces, maps between them, and regular closed algebras.

use serde::{Deserialize, Serialize};

use crate::algebra::{atoms_of, FiniteHom, Mask, Powerset, MAX_ATOMS};
use crate::contact::{FiniteContact, FiniteLca};
use crate::error::{input, Error, Result};

/// Largest number of points a finite space may have.
pub const MAX_POINTS: usize = 16;

/// A set of points, as a bitmask over point indices.
pub type PointSet = u64;

/// A finite topological space given by its open sets.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FiniteSpace {
    labels: Vec<String>,
    opens: Vec<PointSet>,
}

fn check_labels(labels: &[String]) -> Result<()> {
    if labels.len() > MAX_POINTS {
        return input(format!("at most {MAX_POINTS} points are supported, got {}", labels.len()));
    }
    for (i, l) in labels.iter().enumerate() {
        if labels[..i].contains(l) {
            return input(format!("duplicate point label {l:?}"));
        }
    }
    Ok(())
}

/// Closes a family of sets under pairwise unions and intersections.
fn lattice_closure(family: impl IntoIterator<Item = PointSet>, full: PointSet) -> Vec<PointSet> {
    let mut sets: Vec<PointSet> = family.into_iter().chain([0, full]).collect();
    sets.sort_unstable();
    sets.dedup();
    loop {
        let n = sets.len();
        let mut fresh = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                for s in [sets[i] | sets[j], sets[i] & sets[j]] {
                    if sets.binary_search(&s).is_err() {
                        fresh.push(s);
                    }
                }
            }
        }
        if fresh.is_empty() {
            return sets;
        }
        sets.extend(fresh);
        sets.sort_unstable();
        sets.dedup();
    }
}

/// Packs the bits of `set` selected by `sub` into the low bits.
pub fn compress(set: PointSet, sub: PointSet) -> PointSet {
    atoms_of(sub).enumerate().fold(0, |acc, (k, i)| acc | ((set >> i & 1) << k))
}

/// Inverse of [`compress`].
pub fn expand(set: PointSet, sub: PointSet) -> PointSet {
    atoms_of(sub).enumerate().fold(0, |acc, (k, i)| acc | ((set >> k & 1) << i))
}

impl FiniteSpace {
    /// Builds a space from its complete list of open sets.
    pub fn new<S: Into<String>>(labels: impl IntoIterator<Item = S>, opens: &[PointSet]) -> Result<Self> {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        check_labels(&labels)?;
        let full = (1u64 << labels.len()) - 1;
        if opens.iter().any(|&u| u & !full != 0) {
            return input("open set mentions unknown points");
        }
        let closed = lattice_closure(opens.iter().copied(), full);
        let mut given: Vec<PointSet> = opens.iter().copied().chain([0, full]).collect();
        given.sort_unstable();
        given.dedup();
        if closed != given {
            return input("opens are not closed under union and intersection");
        }
        Ok(FiniteSpace { labels, opens: closed })
    }

    /// The topology generated by a subbase.
    pub fn from_subbase<S: Into<String>>(labels: impl IntoIterator<Item = S>, subbase: &[PointSet]) -> Result<Self> {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        check_labels(&labels)?;
        let full = (1u64 << labels.len()) - 1;
        let opens = lattice_closure(subbase.iter().map(|s| s & full), full);
        Ok(FiniteSpace { labels, opens })
    }

    /// The topology whose closed sets are generated by `closed`.
    pub fn from_closed_family<S: Into<String>>(
        labels: impl IntoIterator<Item = S>,
        closed: &[PointSet],
    ) -> Result<Self> {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        let full = (1u64 << labels.len()) - 1;
        let sub: Vec<PointSet> = closed.iter().map(|c| full & !c).collect();
        Self::from_subbase(labels, &sub)
    }

    pub fn discrete<S: Into<String>>(labels: impl IntoIterator<Item = S>) -> Result<Self> {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        let singles: Vec<PointSet> = (0..labels.len()).map(|i| 1 << i).collect();
        Self::from_subbase(labels, &singles)
    }

    /// The discrete space on points labelled `1..=n`.
    pub fn discrete_n(n: usize) -> Self {
        Self::discrete((1..=n).map(|i| i.to_string())).expect("valid discrete space")
    }

    /// Every topology on `n` labelled points, one per preorder.
    pub fn all_topologies(n: usize) -> Vec<FiniteSpace> {
        assert!(n <= 5, "enumeration is limited to 5 points");
        let labels: Vec<String> = (1..=n).map(|i| i.to_string()).collect();
        let off: Vec<(usize, usize)> = (0..n).flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j))).collect();
        let mut out = Vec::new();
        for code in 0u64..(1 << off.len()) {
            let mut le = vec![0 as PointSet; n];
            for (i, row) in le.iter_mut().enumerate() {
                *row = 1 << i;
            }
            for (k, &(i, j)) in off.iter().enumerate() {
                if code >> k & 1 == 1 {
                    le[i] |= 1 << j;
                }
            }
            let transitive = (0..n).all(|i| atoms_of(le[i]).all(|j| le[j] & !le[i] == 0));
            if !transitive {
                continue;
            }
            let full = (1u64 << n) - 1;
            let opens: Vec<PointSet> = (0..=full).filter(|&u| atoms_of(u).all(|i| le[i] & !u == 0)).collect();
            out.push(FiniteSpace { labels: labels.clone(), opens });
        }
        out
    }

    pub fn n(&self) -> usize {
        self.labels.len()
    }

    pub fn full(&self) -> PointSet {
        (1u64 << self.n()) - 1
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn opens(&self) -> &[PointSet] {
        &self.opens
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// The point set with the given labels.
    pub fn points<S: AsRef<str>>(&self, labels: &[S]) -> Result<PointSet> {
        labels.iter().try_fold(0, |acc, l| {
            let l = l.as_ref();
            self.index_of(l)
                .map(|i| acc | 1 << i)
                .ok_or_else(|| Error::Input(format!("unknown point {l:?}")))
        })
    }

    pub fn render(&self, s: PointSet) -> String {
        let names: Vec<&str> = atoms_of(s).map(|i| self.labels[i].as_str()).collect();
        format!("{{{}}}", names.join(","))
    }

    pub fn is_open(&self, s: PointSet) -> bool {
        self.opens.binary_search(&s).is_ok()
    }

    pub fn is_closed(&self, s: PointSet) -> bool {
        self.is_open(self.full() & !s)
    }

    pub fn closed_sets(&self) -> impl Iterator<Item = PointSet> + '_ {
        self.opens.iter().map(|u| self.full() & !u)
    }

    pub fn interior(&self, s: PointSet) -> PointSet {
        self.opens.iter().filter(|&&u| u & !s == 0).fold(0, |acc, u| acc | u)
    }

    pub fn closure(&self, s: PointSet) -> PointSet {
        self.full() & !self.interior(self.full() & !s)
    }

    /// The smallest open set containing point `x`.
    pub fn min_neighbourhood(&self, x: usize) -> PointSet {
        self.opens.iter().filter(|&&u| u >> x & 1 == 1).fold(self.full(), |acc, u| acc & u)
    }

    pub fn is_dense(&self, s: PointSet) -> bool {
        self.closure(s) == self.full()
    }

    pub fn is_discrete(&self) -> bool {
        self.opens.len() == 1 << self.n()
    }

    pub fn is_regular_closed(&self, s: PointSet) -> bool {
        self.closure(self.interior(s)) == s
    }

    pub fn is_regular_open(&self, s: PointSet) -> bool {
        self.interior(self.closure(s)) == s
    }

    /// All regular closed sets, ascending.
    pub fn regular_closed_sets(&self) -> Vec<PointSet> {
        let mut v: Vec<PointSet> = self.opens.iter().map(|&u| self.closure(u)).collect();
        v.sort_unstable();
        v.dedup();
        v
    }

    /// The subspace on `sub`, with points renumbered in ascending order.
    pub fn subspace(&self, sub: PointSet) -> FiniteSpace {
        let labels = atoms_of(sub).map(|i| self.labels[i].clone()).collect();
        let mut opens: Vec<PointSet> = self.opens.iter().map(|&u| compress(u, sub)).collect();
        opens.sort_unstable();
        opens.dedup();
        FiniteSpace { labels, opens }
    }

    /// `x ≤ y` iff `x` lies in the closure of `y`.
    pub fn specializes(&self, x: usize, y: usize) -> bool {
        self.closure(1 << y) >> x & 1 == 1
    }

    /// The specialization order as a DOT digraph of covering edges.
    pub fn to_dot(&self, name: &str) -> String {
        let n = self.n();
        let mut out = format!("digraph \"{name}\" {{\n");
        for l in &self.labels {
            out.push_str(&format!("  \"{l}\";\n"));
        }
        for x in 0..n {
            for y in 0..n {
                if x == y || !self.specializes(x, y) || self.specializes(y, x) {
                    continue;
                }
                let covered = (0..n).any(|z| {
                    z != x && z != y && self.specializes(x, z) && self.specializes(z, y)
                        && !self.specializes(z, x) && !self.specializes(y, z)
                });
                if !covered {
                    out.push_str(&format!("  \"{}\" -> \"{}\";\n", self.labels[y], self.labels[x]));
                }
            }
        }
        out.push_str("}\n");
        out
    }
}

/// A function between the points of two finite spaces.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SpaceMap {
    source: FiniteSpace,
    target: FiniteSpace,
    images: Vec<usize>,
}

impl SpaceMap {
    pub fn new(source: FiniteSpace, target: FiniteSpace, images: Vec<usize>) -> Result<Self> {
        if images.len() != source.n() {
            return input("a map needs an image for every source point");
        }
        if let Some(&bad) = images.iter().find(|&&y| y >= target.n()) {
            return input(format!("image index {bad} is not a target point"));
        }
        Ok(SpaceMap { source, target, images })
    }

    pub fn identity(space: &FiniteSpace) -> Self {
        SpaceMap { source: space.clone(), target: space.clone(), images: (0..space.n()).collect() }
    }

    pub fn source(&self) -> &FiniteSpace {
        &self.source
    }

    pub fn target(&self) -> &FiniteSpace {
        &self.target
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn image(&self, s: PointSet) -> PointSet {
        atoms_of(s).fold(0, |acc, x| acc | 1 << self.images[x])
    }

    pub fn preimage(&self, t: PointSet) -> PointSet {
        (0..self.source.n()).filter(|&x| t >> self.images[x] & 1 == 1).fold(0, |acc, x| acc | 1 << x)
    }

    /// `other ∘ self`.
    pub fn then(&self, other: &SpaceMap) -> Result<SpaceMap> {
        if self.target != other.source {
            return input("maps are not composable");
        }
        let images = self.images.iter().map(|&y| other.images[y]).collect();
        SpaceMap::new(self.source.clone(), other.target.clone(), images)
    }

    pub fn properties(&self) -> MapPropertyReport {
        map_properties(self)
    }
}

/// One computed map property.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MapFlag {
    pub holds: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

impl MapFlag {
    fn from(witness: Option<String>) -> Self {
        MapFlag { holds: witness.is_none(), witness }
    }
}

/// Topological properties of a map, each with a counterexample when false.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MapPropertyReport {
    pub continuous: MapFlag,
    pub open: MapFlag,
    pub closed: MapFlag,
    pub perfect: MapFlag,
    pub skeletal: MapFlag,
    pub quasi_open: MapFlag,
    pub semi_open: MapFlag,
    pub injective: MapFlag,
    pub surjective: MapFlag,
    pub dense_image: MapFlag,
    pub embedding: MapFlag,
}

impl MapPropertyReport {
    /// Flags as `(name, flag)` pairs in a fixed order.
    pub fn flags(&self) -> [(&'static str, &MapFlag); 11] {
        [
            ("continuous", &self.continuous),
            ("open", &self.open),
            ("closed", &self.closed),
            ("perfect", &self.perfect),
            ("skeletal", &self.skeletal),
            ("quasi_open", &self.quasi_open),
            ("semi_open", &self.semi_open),
            ("injective", &self.injective),
            ("surjective", &self.surjective),
            ("dense_image", &self.dense_image),
            ("embedding", &self.embedding),
        ]
    }
}

/// Interior of `t` inside the subspace `s` of `space`.
fn relative_interior(space: &FiniteSpace, s: PointSet, t: PointSet) -> PointSet {
    space.opens().iter().map(|&v| v & s).filter(|&w| w & !t == 0).fold(0, |acc, w| acc | w)
}

pub fn map_properties(f: &SpaceMap) -> MapPropertyReport {
    let (x, y) = (&f.source, &f.target);
    let continuous = y
        .opens()
        .iter()
        .find(|&&v| !x.is_open(f.preimage(v)))
        .map(|&v| format!("open {} has non-open preimage {}", y.render(v), x.render(f.preimage(v))));
    let open = x
        .opens()
        .iter()
        .find(|&&u| !y.is_open(f.image(u)))
        .map(|&u| format!("open {} has non-open image {}", x.render(u), y.render(f.image(u))));
    let closed = x
        .closed_sets()
        .find(|&c| !y.is_closed(f.image(c)))
        .map(|c| format!("closed {} has non-closed image {}", x.render(c), y.render(f.image(c))));
    let perfect = continuous
        .clone()
        .map(|w| format!("not continuous: {w}"))
        .or_else(|| closed.clone().map(|w| format!("not closed: {w}")));
    let skeletal = y
        .opens()
        .iter()
        .find(|&&v| y.is_dense(v) && !x.is_dense(f.preimage(v)))
        .map(|&v| format!("dense open {} has non-dense preimage {}", y.render(v), x.render(f.preimage(v))));
    let quasi_open = x
        .opens()
        .iter()
        .find(|&&u| u != 0 && y.interior(f.image(u)) == 0)
        .map(|&u| format!("open {} has image {} with empty interior", x.render(u), y.render(f.image(u))));
    let fx = f.image(x.full());
    let semi_open = atoms_of(fx)
        .find(|&p| {
            !atoms_of(f.preimage(1 << p)).any(|q| {
                let img = f.image(x.min_neighbourhood(q));
                relative_interior(y, fx, img) >> p & 1 == 1
            })
        })
        .map(|p| format!("no preimage of {} sends its neighbourhoods onto neighbourhoods", y.labels()[p]));
    let injective = (0..x.n())
        .find_map(|a| ((a + 1)..x.n()).find(|&b| f.images[a] == f.images[b]).map(|b| (a, b)))
        .map(|(a, b)| format!("{} and {} share an image", x.labels()[a], x.labels()[b]));
    let surjective = atoms_of(y.full() & !fx).next().map(|p| format!("{} is not hit", y.labels()[p]));
    let dense_image = (!y.is_dense(fx)).then(|| format!("image {} is not dense", y.render(fx)));
    let embedding = injective
        .clone()
        .map(|w| format!("not injective: {w}"))
        .or_else(|| continuous.clone().map(|w| format!("not continuous: {w}")))
        .or_else(|| {
            x.opens()
                .iter()
                .find(|&&u| !y.opens().iter().any(|&v| f.preimage(v) == u))
                .map(|&u| format!("open {} is not a trace of an open set", x.render(u)))
        });
    MapPropertyReport {
        continuous: MapFlag::from(continuous),
        open: MapFlag::from(open),
        closed: MapFlag::from(closed),
        perfect: MapFlag::from(perfect),
        skeletal: MapFlag::from(skeletal),
        quasi_open: MapFlag::from(quasi_open),
        semi_open: MapFlag::from(semi_open),
        injective: MapFlag::from(injective),
        surjective: MapFlag::from(surjective),
        dense_image: MapFlag::from(dense_image),
        embedding: MapFlag::from(embedding),
    }
}

/// The regular closed sets of a finite space as a local contact algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RcAlgebra {
    space: FiniteSpace,
    atom_sets: Vec<PointSet>,
    lca: FiniteLca,
}

impl RcAlgebra {
    pub fn space(&self) -> &FiniteSpace {
        &self.space
    }

    /// Point sets of the atoms (minimal nonempty regular closed sets).
    pub fn atom_sets(&self) -> &[PointSet] {
        &self.atom_sets
    }

    pub fn lca(&self) -> &FiniteLca {
        &self.lca
    }

    pub fn algebra(&self) -> &Powerset {
        self.lca.algebra()
    }

    pub fn to_points(&self, a: Mask) -> PointSet {
        atoms_of(a).fold(0, |acc, i| acc | self.atom_sets[i])
    }

    /// The element whose union is exactly `s`, if `s` is regular closed.
    pub fn from_points(&self, s: PointSet) -> Option<Mask> {
        let m = (0..self.atom_sets.len())
            .filter(|&i| self.atom_sets[i] & !s == 0)
            .fold(0, |acc, i| acc | 1 << i);
        (self.to_points(m) == s).then_some(m)
    }
}

/// `RC(X)` with `F ρ G` iff `F ∩ G ≠ ∅` and every element bounded.
pub fn rc_algebra(space: &FiniteSpace) -> Result<RcAlgebra> {
    let rc = space.regular_closed_sets();
    let atom_sets: Vec<PointSet> = rc
        .iter()
        .copied()
        .filter(|&f| f != 0 && !rc.iter().any(|&g| g != 0 && g != f && g & !f == 0))
        .collect();
    if atom_sets.len() > MAX_ATOMS {
        return Err(Error::Unsupported(format!(
            "RC(X) has {} atoms; at most {MAX_ATOMS} are supported",
            atom_sets.len()
        )));
    }
    let labels: Vec<String> = atom_sets
        .iter()
        .map(|&s| atoms_of(s).map(|i| space.labels()[i].as_str()).collect::<Vec<_>>().join("+"))
        .collect();
    let algebra = Powerset::new(labels)?;
    let mut edges = Vec::new();
    for i in 0..atom_sets.len() {
        for j in i + 1..atom_sets.len() {
            if atom_sets[i] & atom_sets[j] != 0 {
                edges.push((i, j));
            }
        }
    }
    let contact = FiniteContact::atom_graph(&algebra, &edges)?.derived("rc_intersection");
    let lca = FiniteLca::new(contact, algebra.top())?;
    let rca = RcAlgebra { space: space.clone(), atom_sets, lca };
    if rc.iter().any(|&f| rca.from_points(f).is_none()) {
        return Err(Error::Internal("regular closed set is not a union of atoms".into()));
    }
    Ok(rca)
}

/// The homomorphism `F ↦ cl(int(f⁻¹(F)))` from `RC(Y)` to `RC(X)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualMorphism {
    /// `RC(Y)`, the source of the homomorphism.
    pub source: RcAlgebra,
    /// `RC(X)`.
    pub target: RcAlgebra,
    pub hom: FiniteHom,
}

/// The dual of a continuous skeletal map.
pub fn dual_morphism(f: &SpaceMap) -> Result<DualMorphism> {
    let props = map_properties(f);
    for (name, flag) in [("continuous", &props.continuous), ("skeletal", &props.skeletal)] {
        if let Some(w) = &flag.witness {
            return Err(Error::Precondition(format!("map is not {name}: {w}")));
        }
    }
    let source = rc_algebra(f.target())?;
    let target = rc_algebra(f.source())?;
    let x = f.source();
    let phi = |s: PointSet| x.closure(x.interior(f.preimage(s)));
    let images = source
        .atom_sets()
        .iter()
        .map(|&a| {
            target
                .from_points(phi(a))
                .ok_or_else(|| Error::Internal("image of a regular closed set is not regular closed".into()))
        })
        .collect::<Result<Vec<_>>>()?;
    let hom = FiniteHom::new(source.algebra().clone(), target.algebra().clone(), images)
        .map_err(|e| Error::Internal(format!("dual map is not a complete homomorphism: {e}")))?;
    for a in source.algebra().elements() {
        if target.to_points(hom.apply(a)) != phi(source.to_points(a)) {
            return Err(Error::Internal("dual map disagrees with its atom extension".into()));
        }
    }
    Ok(DualMorphism { source, target, hom })
}

/// Mutually inverse isomorphisms between `RC(Y)` and `RC(X)` for a dense
/// subspace `X` of `Y`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DenseSubspaceIso {
    pub rc_space: RcAlgebra,
    pub rc_subspace: RcAlgebra,
    /// `F ↦ F ∩ X`.
    pub restrict: FiniteHom,
    /// `G ↦ cl_Y(G)`.
    pub extend: FiniteHom,
}

pub fn dense_subspace_iso(space: &FiniteSpace, sub: PointSet) -> Result<DenseSubspaceIso> {
    if !space.is_dense(sub) {
        return Err(Error::Precondition(format!("{} is not dense", space.render(sub))));
    }
    let xs = space.subspace(sub);
    let rc_space = rc_algebra(space)?;
    let rc_subspace = rc_algebra(&xs)?;
    let internal = |what: &str| Error::Internal(format!("{what} does not send atoms to regular closed sets"));
    let restrict_images = rc_space
        .atom_sets()
        .iter()
        .map(|&f| rc_subspace.from_points(compress(f & sub, sub)).ok_or_else(|| internal("restriction")))
        .collect::<Result<Vec<_>>>()?;
    let extend_images = rc_subspace
        .atom_sets()
        .iter()
        .map(|&g| rc_space.from_points(space.closure(expand(g, sub))).ok_or_else(|| internal("extension")))
        .collect::<Result<Vec<_>>>()?;
    let restrict = FiniteHom::new(rc_space.algebra().clone(), rc_subspace.algebra().clone(), restrict_images)?;
    let extend = FiniteHom::new(rc_subspace.algebra().clone(), rc_space.algebra().clone(), extend_images)?;
    Ok(DenseSubspaceIso { rc_space, rc_subspace, restrict, extend })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sierpinski() -> FiniteSpace {
        FiniteSpace::new(["a", "b"], &[0b01]).unwrap()
    }

    #[test]
    fn topology_counts() {
        assert_eq!(FiniteSpace::all_topologies(1).len(), 1);
        assert_eq!(FiniteSpace::all_topologies(2).len(), 4);
        assert_eq!(FiniteSpace::all_topologies(3).len(), 29);
        assert_eq!(FiniteSpace::all_topologies(4).len(), 355);
    }

    #[test]
    fn rejects_non_topologies() {
        assert!(FiniteSpace::new(["a", "b", "c"], &[0b001, 0b010]).is_err());
        assert!(FiniteSpace::new(["a", "a"], &[]).is_err());
    }

    #[test]
    fn rc_of_examples() {
        let d2 = rc_algebra(&FiniteSpace::discrete_n(2)).unwrap();
        assert_eq!(d2.algebra().n(), 2);
        assert!(d2.lca().rho().same_table(&FiniteContact::overlap(d2.algebra())));
        let s = rc_algebra(&sierpinski()).unwrap();
        assert_eq!(s.atom_sets(), &[0b11]);
        assert_eq!(rc_algebra(&FiniteSpace::discrete_n(3)).unwrap().algebra().size(), 8);
    }

    #[test]
    fn constant_map_flags() {
        let f = SpaceMap::new(FiniteSpace::discrete_n(2), FiniteSpace::discrete_n(1), vec![0, 0]).unwrap();
        let p = f.properties();
        for flag in [&p.continuous, &p.surjective, &p.open, &p.closed, &p.perfect, &p.quasi_open, &p.semi_open] {
            assert!(flag.holds);
        }
        assert!(!p.injective.holds);
        let d = dual_morphism(&f).unwrap();
        assert_eq!(d.hom.apply(0b1), 0b11);
    }

    #[test]
    fn inclusion_into_sierpinski() {
        let f = SpaceMap::new(FiniteSpace::discrete(["a"]).unwrap(), sierpinski(), vec![0]).unwrap();
        let p = f.properties();
        assert!(p.continuous.holds && p.open.holds && p.dense_image.holds && p.injective.holds);
        assert!(!p.closed.holds);
        assert!(p.closed.witness.is_some());
    }

    #[test]
    fn swap_dualizes_to_atom_swap() {
        let d2 = FiniteSpace::discrete_n(2);
        let f = SpaceMap::new(d2.clone(), d2, vec![1, 0]).unwrap();
        let d = dual_morphism(&f).unwrap();
        assert_eq!(d.hom.images(), &[0b10, 0b01]);
    }

    #[test]
    fn identity_dualizes_to_identity() {
        for x in FiniteSpace::all_topologies(3) {
            let d = dual_morphism(&SpaceMap::identity(&x)).unwrap();
            assert_eq!(d.hom, FiniteHom::identity(d.source.algebra()));
        }
    }

    #[test]
    fn point_into_indiscrete_is_skeletal_not_quasi_open() {
        let indiscrete = FiniteSpace::new(["a", "b"], &[]).unwrap();
        let f = SpaceMap::new(FiniteSpace::discrete(["x"]).unwrap(), indiscrete, vec![0]).unwrap();
        let p = f.properties();
        assert!(p.continuous.holds && p.skeletal.holds);
        assert!(!p.quasi_open.holds);
    }

    #[test]
    fn dense_subspace_examples() {
        let iso = dense_subspace_iso(&sierpinski(), 0b01).unwrap();
        assert_eq!(iso.rc_space.algebra().size(), 2);
        assert_eq!(iso.rc_subspace.algebra().size(), 2);
        let y = FiniteSpace::from_subbase(["a", "b", "c"], &[0b001, 0b010]).unwrap();
        let iso = dense_subspace_iso(&y, 0b011).unwrap();
        assert!(iso.restrict.then(&iso.extend).unwrap() == FiniteHom::identity(iso.rc_space.algebra()));
        assert!(dense_subspace_iso(&y, 0b100).is_err());
    }

    #[test]
    fn dot_has_specialization_edge() {
        let dot = sierpinski().to_dot("S");
        assert!(dot.contains("\"a\" -> \"b\""));
    }
}
