//! Boolean algebra laws, checked on the elements an algebra actually builds.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::contact::{random_element, SampleConfig};
use crate::report::{witness, Condition, ConditionReport, Provenance};

use super::{BooleanAlgebra, Element};

/// Finite algebras with at most this many elements are checked on every
/// triple; larger ones on a seeded sample.
const EXHAUSTIVE_TRIPLES: usize = 64;

type Law = fn(&BooleanAlgebra, &Element, &Element, &Element) -> bool;

const LAWS: [(&str, Law); 5] = [
    ("complement", |alg, a, _, _| {
        a.meet(&alg.complement(a)).is_zero() && a.join(&alg.complement(a)) == alg.one()
    }),
    ("involution", |alg, a, _, _| alg.complement(&alg.complement(a)) == *a),
    ("de_morgan", |alg, a, b, _| {
        alg.complement(&a.join(b)) == alg.complement(a).meet(&alg.complement(b))
            && alg.complement(&a.meet(b)) == alg.complement(a).join(&alg.complement(b))
    }),
    ("absorption", |_, a, b, _| a.join(&a.meet(b)) == *a && a.meet(&a.join(b)) == *a),
    ("distributive", |_, a, b, c| a.meet(&b.join(c)) == a.meet(b).join(&a.meet(c))),
];

/// Checks complement, involution, De Morgan, absorption and distributivity.
pub fn check_boolean_laws(alg: &BooleanAlgebra, cfg: &SampleConfig) -> ConditionReport {
    let (triples, provenance): (Vec<[Element; 3]>, Provenance) = match alg.elements() {
        Some(all) if all.len() <= EXHAUSTIVE_TRIPLES => {
            let mut t = Vec::with_capacity(all.len().pow(3));
            for a in &all {
                for b in &all {
                    for c in &all {
                        t.push([a.clone(), b.clone(), c.clone()]);
                    }
                }
            }
            (t, Provenance::Exhaustive)
        }
        Some(all) => {
            use rand::seq::SliceRandom;
            let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
            let pick = |rng: &mut ChaCha8Rng| all.choose(rng).expect("nonempty").clone();
            ((0..cfg.samples).map(|_| [pick(&mut rng), pick(&mut rng), pick(&mut rng)]).collect(), Provenance::Sampled)
        }
        None => {
            let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
            let mut pick = || Element::Nat(random_element(alg, &mut rng));
            ((0..cfg.samples).map(|_| [pick(), pick(), pick()]).collect(), Provenance::Sampled)
        }
    };
    let mut r = ConditionReport::default();
    for (name, law) in LAWS {
        let bad = triples.iter().find(|[a, b, c]| !law(alg, a, b, c));
        r.push(Condition::from_witness(
            name,
            provenance,
            bad.map(|[a, b, c]| witness([("a", alg.render(a)), ("b", alg.render(b)), ("c", alg.render(c))])),
        ));
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Powerset;

    #[test]
    fn supported_algebras_satisfy_the_laws() {
        let cfg = SampleConfig::default();
        for alg in [
            BooleanAlgebra::Powerset(Powerset::with_atoms(3)),
            BooleanAlgebra::Powerset(Powerset::with_atoms(8)),
            BooleanAlgebra::FiniteCofinite,
            BooleanAlgebra::UltPeriodic { modulus: 6 },
        ] {
            let r = check_boolean_laws(&alg, &cfg);
            assert!(r.holds_all(), "{alg:?}: {r:?}");
        }
    }

    #[test]
    fn provenance_follows_size() {
        let cfg = SampleConfig::default();
        let small = check_boolean_laws(&BooleanAlgebra::Powerset(Powerset::with_atoms(2)), &cfg);
        assert_eq!(small.conditions[0].provenance, Provenance::Exhaustive);
        let big = check_boolean_laws(&BooleanAlgebra::Powerset(Powerset::with_atoms(7)), &cfg);
        assert_eq!(big.conditions[0].provenance, Provenance::Sampled);
    }
}
