//! Independent oracles used by the integration tests.
//!
//! Everything here recomputes its answer from definitions by brute force and
//! shares no code with the library beyond the data types.

#![allow(dead_code)]

use std::collections::{BTreeSet, HashMap};

use lca_duality::algebra::{Mask, NatSet, Powerset};
use lca_duality::contact::FiniteContact;

/// How far the truncation oracle looks into the naturals.
pub const HORIZON: u64 = 300;

/// A set counts as infinite inside a residue class when it has a member of
/// that class in the upper half of the horizon.
const TAIL: u64 = HORIZON / 2;

pub fn truncate(s: &NatSet) -> Vec<bool> {
    (0..HORIZON).map(|n| s.contains(n)).collect()
}

pub fn overlaps_truncated(a: &NatSet, b: &NatSet) -> bool {
    (0..HORIZON).any(|n| a.contains(n) && b.contains(n))
}

pub fn infinite_in_class_truncated(s: &NatSet, r: u64, k: u64) -> bool {
    (TAIL..HORIZON).any(|n| n % k == r && s.contains(n))
}

/// Overlap, or both sets infinite in one residue class modulo `k`.
pub fn partition_truncated(k: u64, a: &NatSet, b: &NatSet) -> bool {
    overlaps_truncated(a, b)
        || (0..k).any(|r| infinite_in_class_truncated(a, r, k) && infinite_in_class_truncated(b, r, k))
}

/// The product of the mod-2 and mod-3 one-point-per-class extensions: two
/// sets touch when they overlap or are both infinite in some class
/// `(r mod 2, s mod 3)`.
pub fn product_2_3_truncated(a: &NatSet, b: &NatSet) -> bool {
    let both = |r: u64, s: u64| {
        let inf = |x: &NatSet| (TAIL..HORIZON).any(|n| n % 2 == r && n % 3 == s && x.contains(n));
        inf(a) && inf(b)
    };
    overlaps_truncated(a, b) || (0..2).any(|r| (0..3).any(|s| both(r, s)))
}

fn way_inside(rho: &FiniteContact, top: Mask, x: Mask, y: Mask) -> bool {
    !rho.related(x, top & !y)
}

/// `C_βρ` as a greatest fixpoint: the interpolating pairs are the largest
/// set `R` of way-inside pairs where every `(x, y) ∈ R` has some `z` with
/// `(x, z), (z, y) ∈ R`. Then `a (-C) b` iff `(a, b*) ∈ R`.
pub fn beta_gfp(rho: &FiniteContact) -> BTreeSet<(Mask, Mask)> {
    let alg = rho.algebra();
    let top = alg.top();
    let mut r: BTreeSet<(Mask, Mask)> = alg
        .elements()
        .flat_map(|x| alg.elements().map(move |y| (x, y)))
        .filter(|&(x, y)| way_inside(rho, top, x, y))
        .collect();
    loop {
        let keep: BTreeSet<(Mask, Mask)> = r
            .iter()
            .copied()
            .filter(|&(x, y)| alg.elements().any(|z| r.contains(&(x, z)) && r.contains(&(z, y))))
            .collect();
        if keep.len() == r.len() {
            return related_from_interpolants(alg, &keep);
        }
        r = keep;
    }
}

fn related_from_interpolants(alg: &Powerset, r: &BTreeSet<(Mask, Mask)>) -> BTreeSet<(Mask, Mask)> {
    let top = alg.top();
    alg.elements()
        .flat_map(|a| alg.elements().map(move |b| (a, b)))
        .filter(|&(a, b)| !r.contains(&(a, top & !b)))
        .collect()
}

/// `C_βρ` by explicit search for dyadic chains `a = c_0 ≪ c_{1/2^d} ≪ … ≪ c_1 = b*`
/// of depth `depth`.
pub fn beta_dyadic(rho: &FiniteContact, depth: u32) -> BTreeSet<(Mask, Mask)> {
    let alg = rho.algebra();
    let top = alg.top();
    let mut memo: HashMap<(Mask, Mask, u32), bool> = HashMap::new();
    fn chain(
        rho: &FiniteContact,
        top: Mask,
        x: Mask,
        y: Mask,
        d: u32,
        memo: &mut HashMap<(Mask, Mask, u32), bool>,
    ) -> bool {
        if let Some(&v) = memo.get(&(x, y, d)) {
            return v;
        }
        let v = way_inside(rho, top, x, y)
            && (d == 0
                || (0..=top)
                    .filter(|z| z & !top == 0)
                    .any(|z| chain(rho, top, x, z, d - 1, memo) && chain(rho, top, z, y, d - 1, memo)));
        memo.insert((x, y, d), v);
        v
    }
    let r: BTreeSet<(Mask, Mask)> = alg
        .elements()
        .flat_map(|x| alg.elements().map(move |y| (x, y)))
        .filter(|&(x, y)| chain(rho, top, x, y, depth, &mut memo))
        .collect();
    related_from_interpolants(alg, &r)
}

pub fn table(c: &FiniteContact) -> BTreeSet<(Mask, Mask)> {
    let alg = c.algebra();
    alg.elements()
        .flat_map(|a| alg.elements().map(move |b| (a, b)))
        .filter(|&(a, b)| c.related(a, b))
        .collect()
}

/// Every cluster of a finite contact relation, found by testing every set of
/// elements against the three cluster axioms.
pub fn brute_clusters(c: &FiniteContact) -> Vec<BTreeSet<Mask>> {
    let alg = c.algebra();
    let elems: Vec<Mask> = alg.elements().collect();
    assert!(elems.len() <= 16, "brute force is limited to 4 atoms");
    let mut out = Vec::new();
    for code in 1u32..1 << elems.len() {
        let s: BTreeSet<Mask> = (0..elems.len()).filter(|i| code >> i & 1 == 1).map(|i| elems[i]).collect();
        let pairwise = s.iter().all(|&a| s.iter().all(|&b| c.related(a, b)));
        let prime = elems
            .iter()
            .all(|&a| elems.iter().all(|&b| !s.contains(&(a | b)) || s.contains(&a) || s.contains(&b)));
        let maximal = elems.iter().all(|&a| s.contains(&a) || !s.iter().all(|&b| c.related(a, b)));
        if pairwise && prime && maximal {
            out.push(s);
        }
    }
    out
}

/// `a ∈ σ`, `b* ∉ σ` and `a ∧ b ∉ σ`.
pub fn kernel_violation(alg: &Powerset, sigma: &BTreeSet<Mask>) -> Option<(Mask, Mask)> {
    let top = alg.top();
    sigma
        .iter()
        .find_map(|&a| alg.elements().find(|&b| !sigma.contains(&(top & !b)) && !sigma.contains(&(a & b))).map(|b| (a, b)))
}

/// The adjoint of a complete homomorphism given by atom images: the least
/// `a` with `b ≤ φ(a)`.
pub fn brute_adjoint(atom_images: &[Mask], b: Mask) -> Mask {
    let n = atom_images.len();
    let apply = |a: Mask| (0..n).filter(|&p| a >> p & 1 == 1).fold(0, |acc, p| acc | atom_images[p]);
    (0..1u64 << n)
        .filter(|&a| b & !apply(a) == 0)
        .min_by_key(|a| a.count_ones())
        .expect("the top element maps onto everything")
}

/// Every function from an `n`-element set to an `m`-element set.
pub fn all_functions(n: usize, m: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    for _ in 0..n {
        out = out.into_iter().flat_map(|f| (0..m).map(move |y| [f.clone(), vec![y]].concat())).collect();
    }
    out
}

/// Every symmetric atom graph on `n` atoms.
pub fn atom_graphs(alg: &Powerset) -> Vec<FiniteContact> {
    let n = alg.n();
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|p| (p + 1..n).map(move |q| (p, q))).collect();
    (0u32..1 << pairs.len())
        .map(|bits| {
            let edges: Vec<(usize, usize)> =
                pairs.iter().enumerate().filter(|(i, _)| bits >> i & 1 == 1).map(|(_, &e)| e).collect();
            FiniteContact::atom_graph(alg, &edges).expect("edges are in range")
        })
        .collect()
}
