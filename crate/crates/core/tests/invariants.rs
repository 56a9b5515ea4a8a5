mod support;

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use lca_duality::algebra::{BooleanAlgebra, NatSet, Powerset};
use lca_duality::contact::{check_contact_axioms, random_element, Contact, FiniteContact, Lca, SymbolicContact, SymbolicLca};
use lca_duality::extension::{compare_ncr, inf_ncr, sup_ncr, NcrOrder};
use lca_duality::space::{dense_subspace_iso, dual_morphism, map_properties, rc_algebra, FiniteSpace, SpaceMap};

const ALG: BooleanAlgebra = BooleanAlgebra::UltPeriodic { modulus: 12 };

fn natset() -> impl Strategy<Value = NatSet> {
    any::<u64>().prop_map(|seed| random_element(&ALG, &mut ChaCha8Rng::seed_from_u64(seed)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn boolean_laws_hold(a in natset(), b in natset(), c in natset()) {
        prop_assert_eq!(a.join(&b).complement(), a.complement().meet(&b.complement()));
        prop_assert_eq!(a.meet(&b).complement(), a.complement().join(&b.complement()));
        prop_assert_eq!(a.meet(&b.join(&c)), a.meet(&b).join(&a.meet(&c)));
        prop_assert_eq!(a.join(&a.meet(&b)), a.clone());
        prop_assert!(a.meet(&a.complement()).is_empty());
        prop_assert!(a.join(&a.complement()).is_full());
        prop_assert_eq!(a.complement().complement(), a.clone());
        prop_assert_eq!(a.minus(&b), a.meet(&b.complement()));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn natset_operations_match_truncation(a in natset(), b in natset()) {
        let (ta, tb) = (support::truncate(&a), support::truncate(&b));
        let zip = |f: fn(bool, bool) -> bool| -> Vec<bool> { ta.iter().zip(&tb).map(|(&x, &y)| f(x, y)).collect() };
        prop_assert_eq!(support::truncate(&a.meet(&b)), zip(|x, y| x && y));
        prop_assert_eq!(support::truncate(&a.join(&b)), zip(|x, y| x || y));
        prop_assert_eq!(support::truncate(&a.minus(&b)), zip(|x, y| x && !y));
        prop_assert_eq!(support::truncate(&a.complement()), ta.iter().map(|x| !x).collect::<Vec<_>>());
        prop_assert_eq!(a.is_subset(&b), ta.iter().zip(&tb).all(|(&x, &y)| !x || y));
        prop_assert_eq!(a.intersects(&b), support::overlaps_truncated(&a, &b));
        prop_assert_eq!(a.is_finite(), !(0..12).any(|r| support::infinite_in_class_truncated(&a, r, 12)));
        for k in [2u64, 3, 4, 6] {
            let lib = SymbolicContact::Partition(k).related(&a, &b);
            prop_assert_eq!(lib, support::partition_truncated(k, &a, &b));
        }
    }
}

fn contact_on(n: usize) -> impl Strategy<Value = FiniteContact> {
    let pairs = n * (n.saturating_sub(1)) / 2;
    (0u32..1 << pairs).prop_map(move |bits| {
        let alg = Powerset::with_atoms(n);
        let all: Vec<(usize, usize)> = (0..n).flat_map(|p| (p + 1..n).map(move |q| (p, q))).collect();
        let edges: Vec<_> = all.iter().enumerate().filter(|(i, _)| bits >> i & 1 == 1).map(|(_, &e)| e).collect();
        FiniteContact::atom_graph(&alg, &edges).unwrap()
    })
}

proptest! {
    #[test]
    fn way_inside_is_monotone(c in (1usize..=4).prop_flat_map(contact_on), seed in any::<u64>()) {
        let alg = c.algebra().clone();
        let top = alg.top();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        use rand::Rng;
        for _ in 0..50 {
            let (a, b) = (rng.gen_range(0..=top), rng.gen_range(0..=top));
            let (shrink, grow) = (rng.gen_range(0..=top), rng.gen_range(0..=top));
            if c.way_inside(a, b) {
                prop_assert!(c.way_inside(a & shrink, b | grow));
                prop_assert!(a & !b == 0);
            }
        }
    }
}

fn all_topologies_up_to(n: usize) -> Vec<FiniteSpace> {
    (1..=n).flat_map(FiniteSpace::all_topologies).collect()
}

fn open_maps(x: &FiniteSpace, y: &FiniteSpace) -> Vec<SpaceMap> {
    support::all_functions(x.n(), y.n())
        .into_iter()
        .map(|images| SpaceMap::new(x.clone(), y.clone(), images).unwrap())
        .filter(|f| {
            let p = map_properties(f);
            p.continuous.holds && p.open.holds
        })
        .collect()
}

#[test]
fn duals_compose_for_open_maps() {
    let spaces = all_topologies_up_to(2);
    let mut checked = 0;
    for x in &spaces {
        for y in &spaces {
            for z in &spaces {
                for f in open_maps(x, y) {
                    for g in open_maps(y, z) {
                        let gf = f.then(&g).unwrap();
                        let composed = dual_morphism(&g).unwrap().hom.then(&dual_morphism(&f).unwrap().hom).unwrap();
                        assert_eq!(dual_morphism(&gf).unwrap().hom, composed);
                        checked += 1;
                    }
                }
            }
        }
    }
    assert!(checked > 50);
}

#[test]
fn identity_dualizes_to_identity() {
    for x in all_topologies_up_to(3) {
        let d = dual_morphism(&SpaceMap::identity(&x)).unwrap();
        assert!(d.hom.is_isomorphism());
        assert!(d.source.algebra().atoms().all(|p| d.hom.images()[p] == 1 << p));
    }
}

#[test]
fn dense_subspaces_share_regular_closed_algebras() {
    for y in all_topologies_up_to(4) {
        for sub in 1..=y.full() {
            if !y.is_dense(sub) {
                continue;
            }
            let iso = dense_subspace_iso(&y, sub).unwrap();
            let there = iso.restrict.then(&iso.extend).unwrap();
            let back = iso.extend.then(&iso.restrict).unwrap();
            assert!(iso.rc_space.algebra().atoms().all(|p| there.images()[p] == 1 << p));
            assert!(iso.rc_subspace.algebra().atoms().all(|p| back.images()[p] == 1 << p));
        }
    }
}

#[test]
fn regular_closed_contact_satisfies_axioms() {
    for x in all_topologies_up_to(4) {
        let rc = rc_algebra(&x).unwrap();
        let r = check_contact_axioms(&Contact::Finite(rc.lca().rho().clone()));
        assert!(r.holds_all(), "{:?}: {r:?}", x.opens());
    }
}

fn partition(k: u64) -> Contact {
    let kernel = if k == 12 { SymbolicContact::Overlap } else { SymbolicContact::Partition(k) };
    Contact::Symbolic { algebra: ALG, kernel }
}

fn below_or_equal(a: &Contact, b: &Contact) -> bool {
    matches!(compare_ncr(a, b).unwrap().order, NcrOrder::Below | NcrOrder::Equal)
}

#[test]
fn partition_family_is_a_lattice() {
    let l = Lca::Symbolic(SymbolicLca::ult_periodic(12));
    let divisors = [1u64, 2, 3, 4, 6, 12];
    for &p in &divisors {
        for &q in divisors.iter().filter(|&&q| q >= p) {
            let (cp, cq) = (partition(p), partition(q));
            let sup = sup_ncr(&l, &[cp.clone(), cq.clone()]).unwrap();
            let inf = inf_ncr(&l, &[cp.clone(), cq.clone()]).unwrap();
            assert!(below_or_equal(&cp, &sup) && below_or_equal(&cq, &sup), "sup of {p}, {q}");
            assert!(below_or_equal(&inf, &cp) && below_or_equal(&inf, &cq), "inf of {p}, {q}");
            for &r in &divisors {
                let cr = partition(r);
                if below_or_equal(&cp, &cr) && below_or_equal(&cq, &cr) {
                    assert!(below_or_equal(&sup, &cr), "sup of {p}, {q} above bound {r}");
                }
                if below_or_equal(&cr, &cp) && below_or_equal(&cr, &cq) {
                    assert!(below_or_equal(&cr, &inf), "inf of {p}, {q} below bound {r}");
                }
            }
        }
    }
}
