//! DOT renderings of the lattice of admissible extension relations.

use lca_duality::algebra::{BooleanAlgebra, Powerset};
use lca_duality::contact::{FiniteContact, FiniteLca, Lca};
use lca_duality::error::Result;
use lca_duality::extension::{admissible_ncrs_finite, beta_relation};

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('"', "\\\""))
}

fn finite_label(alg: &Powerset, c: &FiniteContact, least: &FiniteContact, greatest: &FiniteContact) -> String {
    let edges: Vec<String> =
        c.atom_edges().iter().map(|&(p, q)| format!("{}-{}", alg.label(p), alg.label(q))).collect();
    let mut label = if edges.is_empty() { "overlap".to_string() } else { edges.join(" ") };
    if c.same_table(least) {
        label.push_str(" (C_rho)");
    }
    if c.same_table(greatest) {
        label.push_str(" (C_beta)");
    }
    label
}

/// Hasse diagram of `⪯_c`, with edges pointing upwards.
fn hasse(labels: &[String], below: impl Fn(usize, usize) -> bool) -> String {
    let n = labels.len();
    let mut out = String::from("digraph \"K_a\" {\n  rankdir=BT;\n");
    for l in labels {
        out.push_str(&format!("  {};\n", quote(l)));
    }
    for i in 0..n {
        for j in 0..n {
            if i == j || !below(i, j) {
                continue;
            }
            let covered = (0..n).any(|k| k != i && k != j && below(i, k) && below(k, j));
            if !covered {
                out.push_str(&format!("  {} -> {};\n", quote(&labels[i]), quote(&labels[j])));
            }
        }
    }
    out.push_str("}\n");
    out
}

fn finite_lattice(l: &FiniteLca) -> Result<String> {
    let all = admissible_ncrs_finite(l)?;
    let (least, greatest) = (l.c_rho(), beta_relation(l.rho()));
    let labels: Vec<String> = all.iter().map(|c| finite_label(l.algebra(), c, &least, &greatest)).collect();
    // strictly below in ⪯_c: a strict superset
    Ok(hasse(&labels, |i, j| all[j].is_subset(&all[i]) && !all[i].is_subset(&all[j])))
}

/// Partition relations mod each divisor of the modulus.
fn partition_lattice(modulus: u64) -> String {
    let ds: Vec<u64> = (1..=modulus).filter(|d| modulus % d == 0).collect();
    let labels: Vec<String> = ds
        .iter()
        .map(|&d| match d {
            _ if d == modulus => format!("overlap (mod {d}, C_beta)"),
            1 => "mod 1 (C_rho)".to_string(),
            _ => format!("mod {d}"),
        })
        .collect();
    hasse(&labels, |i, j| ds[i] != ds[j] && ds[j] % ds[i] == 0)
}

/// The lattice of admissible relations of `l`, where it can be listed.
pub fn extension_lattice(l: &Lca) -> Result<Option<String>> {
    match l {
        Lca::Finite(f) => finite_lattice(f).map(Some),
        Lca::Symbolic(s) => Ok(match s.algebra {
            BooleanAlgebra::UltPeriodic { modulus } if modulus <= 64 => Some(partition_lattice(modulus)),
            BooleanAlgebra::FiniteCofinite => Some(hasse(&["C_rho".into(), "overlap (C_beta)".into()], |i, j| i < j)),
            _ => None,
        }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn divisor_lattice_of_six() {
        let d = partition_lattice(6);
        assert!(d.contains("\"mod 1 (C_rho)\" -> \"mod 2\""));
        assert!(d.contains("\"mod 3\" -> \"overlap (mod 6, C_beta)\""));
        assert!(!d.contains("\"mod 1 (C_rho)\" -> \"overlap (mod 6, C_beta)\""));
    }

    #[test]
    fn single_relation_has_no_edges() {
        let l = Lca::Finite(FiniteLca::overlap_all(&Powerset::with_atoms(2)));
        let d = extension_lattice(&l).unwrap().unwrap();
        assert!(d.contains("overlap (C_rho) (C_beta)"));
        assert!(!d.contains("->"));
    }
}
