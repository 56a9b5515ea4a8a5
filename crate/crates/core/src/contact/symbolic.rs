use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{BooleanAlgebra, Element, Ideal, NatSet};
use crate::report::{witness, Condition, ConditionReport, Provenance};

/// Contact kernels on the algebras of subsets of the naturals.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum SymbolicContact {
    Overlap,
    /// Overlap, plus contact between sets that are both infinite inside a
    /// common residue class modulo `k`.
    Partition(u64),
    /// `a ρ b`, or neither `a` nor `b` bounded.
    CRho { rho: Box<SymbolicContact>, bounded: Ideal },
}

impl SymbolicContact {
    pub fn c_rho(rho: &SymbolicContact, bounded: &Ideal) -> SymbolicContact {
        SymbolicContact::CRho { rho: Box::new(rho.clone()), bounded: bounded.clone() }
    }

    pub fn related(&self, a: &NatSet, b: &NatSet) -> bool {
        match self {
            SymbolicContact::Overlap => a.intersects(b),
            SymbolicContact::Partition(k) => {
                a.intersects(b) || (0..*k).any(|r| a.infinite_in_class(r, *k) && b.infinite_in_class(r, *k))
            }
            SymbolicContact::CRho { rho, bounded } => {
                rho.related(a, b)
                    || (!bounded.contains(&Element::Nat(a.clone())) && !bounded.contains(&Element::Nat(b.clone())))
            }
        }
    }

    pub fn way_inside(&self, a: &NatSet, b: &NatSet) -> bool {
        !self.related(a, &b.complement())
    }

    /// Moduli whose residue classes the kernel can see.
    pub fn moduli(&self) -> Vec<u64> {
        match self {
            SymbolicContact::Overlap => vec![1],
            SymbolicContact::Partition(k) => vec![1, *k],
            SymbolicContact::CRho { rho, .. } => rho.moduli(),
        }
    }

    /// Whether the kernel is one whose contact axioms hold by construction.
    fn structural(&self) -> bool {
        match self {
            SymbolicContact::Overlap | SymbolicContact::Partition(_) => true,
            SymbolicContact::CRho { rho, bounded } => rho.structural() && *bounded != Ideal::All,
        }
    }
}

/// A local contact algebra over the naturals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymbolicLca {
    pub algebra: BooleanAlgebra,
    pub rho: SymbolicContact,
    pub bounded: Ideal,
}

impl SymbolicLca {
    /// `(FiniteCofinite, overlap, finite)`.
    pub fn finite_cofinite() -> Self {
        SymbolicLca {
            algebra: BooleanAlgebra::FiniteCofinite,
            rho: SymbolicContact::Overlap,
            bounded: Ideal::FiniteElements,
        }
    }

    /// `(UltPeriodic(m), overlap, finite)`.
    pub fn ult_periodic(modulus: u64) -> Self {
        SymbolicLca {
            algebra: BooleanAlgebra::UltPeriodic { modulus },
            rho: SymbolicContact::Overlap,
            bounded: Ideal::FiniteElements,
        }
    }

    pub fn is_bounded(&self, a: &NatSet) -> bool {
        self.bounded.contains(&Element::Nat(a.clone()))
    }
}

/// Sampling parameters for symbolic checks.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SampleConfig {
    pub samples: usize,
    pub seed: u64,
}

impl Default for SampleConfig {
    fn default() -> Self {
        SampleConfig { samples: 200, seed: 0x5eed }
    }
}

fn divisors(m: u64) -> Vec<u64> {
    (1..=m).filter(|d| m % d == 0).collect()
}

/// A random element of a symbolic algebra.
///
/// Thresholds stay below 12 and periods divide the algebra's modulus, so
/// combinations stay inside the algebra.
pub fn random_element(algebra: &BooleanAlgebra, rng: &mut impl Rng) -> NatSet {
    let m = algebra.modulus().unwrap_or(1);
    let threshold = rng.gen_range(0..12u64);
    let prefix: Vec<u64> = (0..threshold).filter(|_| rng.gen_bool(0.5)).collect();
    let shape = rng.gen_range(0..4);
    let (residues, modulus): (Vec<u64>, u64) = match shape {
        0 => (Vec::new(), 1),
        1 => (vec![0], 1),
        _ => {
            let ds = divisors(m);
            let d = ds[rng.gen_range(0..ds.len())];
            ((0..d).filter(|_| rng.gen_bool(0.5)).collect(), d)
        }
    };
    NatSet::new(prefix, threshold, residues, modulus).expect("generated parts are valid")
}

/// Candidate witnesses for existential axioms built from the given sets.
pub(crate) fn candidate_pool(seeds: &[&NatSet], kernel: &SymbolicContact, extra: Option<&NatSet>) -> Vec<NatSet> {
    let mut base: Vec<NatSet> = vec![NatSet::empty(), NatSet::full()];
    for s in seeds {
        base.push((*s).clone());
        base.push(s.complement());
    }
    if let Some(e) = extra {
        base.push(e.clone());
    }
    let moduli = kernel.moduli();
    let n = base.len();
    for i in 0..n {
        for &k in &moduli {
            base.push(base[i].saturate(k));
        }
    }
    let n = base.len();
    let mut pool = base.clone();
    for i in 0..n {
        for j in i + 1..n {
            pool.push(base[i].meet(&base[j]));
        }
    }
    let singles: Vec<NatSet> = pool.iter().filter_map(NatSet::least).map(NatSet::singleton).collect();
    pool.extend(singles);
    pool.sort();
    pool.dedup();
    pool
}

pub(crate) struct Sampler {
    rng: ChaCha8Rng,
    algebra: BooleanAlgebra,
}

impl Sampler {
    pub(crate) fn new(algebra: &BooleanAlgebra, cfg: &SampleConfig) -> Self {
        Sampler { rng: ChaCha8Rng::seed_from_u64(cfg.seed), algebra: algebra.clone() }
    }

    pub(crate) fn next(&mut self) -> NatSet {
        random_element(&self.algebra, &mut self.rng)
    }

    /// A pair biased towards being separated by `kernel`.
    pub(crate) fn separated_pair(&mut self, kernel: &SymbolicContact) -> (NatSet, NatSet) {
        let a = self.next();
        let mut b = self.next().minus(&a);
        for k in kernel.moduli() {
            if self.rng.gen_bool(0.5) {
                b = b.minus(&a.saturate(k));
            }
        }
        if self.rng.gen_bool(0.25) {
            b = b.finite_part();
        }
        (a, b)
    }
}

fn w(names: &[&str], sets: &[&NatSet]) -> Vec<(String, String)> {
    names.iter().zip(sets).map(|(n, s)| (n.to_string(), s.to_string())).collect()
}

pub(crate) fn check_contact_axioms(
    algebra: &BooleanAlgebra,
    kernel: &SymbolicContact,
    cfg: &SampleConfig,
) -> ConditionReport {
    let prov = if kernel.structural() { Provenance::Structural } else { Provenance::Sampled };
    let mut s = Sampler::new(algebra, cfg);
    let (mut c1, mut c2, mut c3, mut c4) = (None, None, None, None);
    let zero = NatSet::empty();
    for _ in 0..cfg.samples {
        let (a, b, c) = (s.next(), s.next(), s.next());
        if c1.is_none() && (kernel.related(&a, &zero) || (!a.is_empty() && !kernel.related(&a, &a))) {
            c1 = Some(w(&["a"], &[&a]));
        }
        if c2.is_none() && kernel.related(&a, &b) != kernel.related(&b, &a) {
            c2 = Some(w(&["a", "b"], &[&a, &b]));
        }
        if c3.is_none() && kernel.related(&a, &b.join(&c)) != (kernel.related(&a, &b) || kernel.related(&a, &c)) {
            c3 = Some(w(&["a", "b", "c"], &[&a, &b, &c]));
        }
        if c4.is_none() && a.intersects(&b) && !kernel.related(&a, &b) {
            c4 = Some(w(&["a", "b"], &[&a, &b]));
        }
    }
    let mut r = ConditionReport::default();
    for (name, wit) in [("C1", c1), ("C2", c2), ("C3", c3), ("C4", c4)] {
        r.push(Condition::from_witness(name, prov, wit));
    }
    r
}

pub(crate) fn check_nca(algebra: &BooleanAlgebra, kernel: &SymbolicContact, cfg: &SampleConfig) -> ConditionReport {
    let mut r = check_contact_axioms(algebra, kernel, cfg);
    let mut s = Sampler::new(algebra, cfg);
    let (mut normal, mut ext) = (None, None);
    for _ in 0..cfg.samples {
        let (a, b) = s.separated_pair(kernel);
        if normal.is_none() && !kernel.related(&a, &b) {
            let pool = candidate_pool(&[&a, &b], kernel, None);
            if !pool.iter().any(|c| !kernel.related(&a, c) && !kernel.related(&c.complement(), &b)) {
                normal = Some(w(&["a", "b"], &[&a, &b]));
            }
        }
        let a = s.next();
        if ext.is_none() && !a.is_full() {
            let pool = candidate_pool(&[&a], kernel, None);
            if !pool.iter().any(|b| !b.is_empty() && !kernel.related(b, &a)) {
                ext = Some(w(&["a"], &[&a]));
            }
        }
    }
    r.push(Condition::from_witness("normality", Provenance::Sampled, normal));
    r.push(Condition::from_witness("extensionality", Provenance::Sampled, ext));
    r
}

pub(crate) fn check_lca(l: &SymbolicLca, cfg: &SampleConfig) -> ConditionReport {
    let rho = &l.rho;
    let mut r = check_contact_axioms(&l.algebra, rho, cfg);
    let top = match &l.bounded {
        Ideal::Principal(Element::Nat(t)) => Some(t.clone()),
        _ => None,
    };
    let mut s = Sampler::new(&l.algebra, cfg);
    let (mut bc1, mut bc2, mut bc3) = (None, None, None);
    for _ in 0..cfg.samples {
        let (a, c) = (s.next(), s.next());
        let a = if l.is_bounded(&a) { a } else { a.finite_part() };
        if bc1.is_none() && l.is_bounded(&a) && rho.way_inside(&a, &c) {
            let pool = candidate_pool(&[&a, &c], rho, top.as_ref());
            if !pool.iter().any(|b| l.is_bounded(b) && rho.way_inside(&a, b) && rho.way_inside(b, &c)) {
                bc1 = Some(w(&["a", "c"], &[&a, &c]));
            }
        }
        for (a, b) in [(s.next(), s.next()), s.separated_pair(rho)] {
            if bc2.is_none() && rho.related(&a, &b) {
                let pool = candidate_pool(&[&a, &b], rho, top.as_ref());
                if !pool.iter().any(|d| l.is_bounded(d) && rho.related(&a, &b.meet(d))) {
                    bc2 = Some(w(&["a", "b"], &[&a, &b]));
                }
            }
        }
        let a = s.next();
        if bc3.is_none() && !a.is_empty() {
            let pool = candidate_pool(&[&a], rho, top.as_ref());
            if !pool.iter().any(|b| !b.is_empty() && l.is_bounded(b) && rho.way_inside(b, &a)) {
                bc3 = Some(w(&["a"], &[&a]));
            }
        }
    }
    for (name, wit) in [("BC1", bc1), ("BC2", bc2), ("BC3", bc3)] {
        r.push(Condition::from_witness(name, Provenance::Sampled, wit));
    }
    r
}

/// Checks that every sampled pair related by `small` is related by `large`.
pub(crate) fn sampled_subset_witness(
    algebra: &BooleanAlgebra,
    small: &SymbolicContact,
    large: &SymbolicContact,
    cfg: &SampleConfig,
) -> Option<(NatSet, NatSet)> {
    let mut s = Sampler::new(algebra, cfg);
    (0..cfg.samples).find_map(|i| {
        let (a, b) = if i % 2 == 0 { (s.next(), s.next()) } else { s.separated_pair(small) };
        (small.related(&a, &b) && !large.related(&a, &b)).then_some((a, b))
    })
}

/// Witness pairs for reports.
pub(crate) fn pair_witness(a: &NatSet, b: &NatSet) -> Vec<(String, String)> {
    witness([("a", a.to_string()), ("b", b.to_string())])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn finite_cofinite_is_lca() {
        let l = SymbolicLca::finite_cofinite();
        let r = check_lca(&l, &SampleConfig::default());
        assert!(r.holds_all(), "{r:?}");
        assert_eq!(r.get("C3").unwrap().provenance, Provenance::Structural);
    }

    #[test]
    fn c_rho_examples() {
        let l = SymbolicLca::finite_cofinite();
        let c = SymbolicContact::c_rho(&l.rho, &l.bounded);
        assert!(!c.related(&NatSet::finite([0, 1]), &NatSet::finite([2, 3])));
        assert!(c.related(&NatSet::cofinite_except([0]), &NatSet::cofinite_except([1])));
        let cfg = SampleConfig::default();
        assert!(check_nca(&l.algebra, &c, &cfg).holds_all());
    }

    #[test]
    fn partitions_are_nca() {
        let alg = BooleanAlgebra::UltPeriodic { modulus: 6 };
        for k in [1, 2, 3, 6] {
            let r = check_nca(&alg, &SymbolicContact::Partition(k), &SampleConfig::default());
            assert!(r.holds_all(), "k={k}: {r:?}");
        }
    }

    #[test]
    fn partition_is_not_an_lca_relation() {
        let l = SymbolicLca {
            algebra: BooleanAlgebra::UltPeriodic { modulus: 4 },
            rho: SymbolicContact::Partition(2),
            bounded: Ideal::FiniteElements,
        };
        assert!(!check_lca(&l, &SampleConfig::default()).holds("BC2"));
    }

    #[test]
    fn principal_bounded_ideal_fails_bc3() {
        let l = SymbolicLca {
            bounded: Ideal::Principal(Element::Nat(NatSet::residue_class(0, 2))),
            ..SymbolicLca::ult_periodic(2)
        };
        assert!(!check_lca(&l, &SampleConfig::default()).holds("BC3"));
    }
}
