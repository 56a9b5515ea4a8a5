use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{input, Result};

/// Largest modulus accepted from external input.
pub const MAX_MODULUS: u64 = 1 << 16;
/// Largest threshold accepted from external input.
pub const MAX_THRESHOLD: u64 = 1 << 16;

/// An ultimately periodic subset of the naturals.
///
/// Below `threshold` membership is read from an explicit table; from the
/// threshold on, `n` is a member iff `n mod modulus` is a member residue.
/// Values are kept in canonical form: the modulus is the least period of the
/// residue pattern and the threshold is as small as possible, so structural
/// equality is set equality.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NatSet {
    head: Vec<bool>,
    cycle: Vec<bool>,
}

pub(crate) fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

pub(crate) fn lcm(a: u64, b: u64) -> u64 {
    a / gcd(a, b) * b
}

impl NatSet {
    /// Builds a set from explicit members below `threshold` and the member
    /// residues modulo `modulus` used from the threshold on.
    pub fn new(
        prefix: impl IntoIterator<Item = u64>,
        threshold: u64,
        residues: impl IntoIterator<Item = u64>,
        modulus: u64,
    ) -> Result<Self> {
        if modulus == 0 || modulus > MAX_MODULUS {
            return input(format!("modulus must lie in 1..={MAX_MODULUS}, got {modulus}"));
        }
        if threshold > MAX_THRESHOLD {
            return input(format!("threshold {threshold} exceeds {MAX_THRESHOLD}"));
        }
        let mut head = vec![false; threshold as usize];
        for n in prefix {
            if n >= threshold {
                return input(format!("prefix member {n} is not below threshold {threshold}"));
            }
            head[n as usize] = true;
        }
        let mut cycle = vec![false; modulus as usize];
        for r in residues {
            if r >= modulus {
                return input(format!("residue {r} is not below modulus {modulus}"));
            }
            cycle[r as usize] = true;
        }
        Ok(Self::from_parts(head, cycle))
    }

    fn from_parts(head: Vec<bool>, cycle: Vec<bool>) -> Self {
        let mut s = NatSet { head, cycle };
        s.normalize();
        s
    }

    fn normalize(&mut self) {
        let m = self.cycle.len();
        for d in 1..=m {
            if m % d == 0 && (0..m).all(|r| self.cycle[r] == self.cycle[r % d]) {
                self.cycle.truncate(d);
                break;
            }
        }
        let d = self.cycle.len();
        while let Some(&last) = self.head.last() {
            let n = self.head.len() - 1;
            if last == self.cycle[n % d] {
                self.head.pop();
            } else {
                break;
            }
        }
    }

    pub fn empty() -> Self {
        NatSet { head: Vec::new(), cycle: vec![false] }
    }

    pub fn full() -> Self {
        NatSet { head: Vec::new(), cycle: vec![true] }
    }

    pub fn singleton(n: u64) -> Self {
        Self::finite([n])
    }

    pub fn finite(members: impl IntoIterator<Item = u64>) -> Self {
        let members: Vec<u64> = members.into_iter().collect();
        let t = members.iter().map(|&n| n + 1).max().unwrap_or(0) as usize;
        let mut head = vec![false; t];
        for n in members {
            head[n as usize] = true;
        }
        Self::from_parts(head, vec![false])
    }

    pub fn cofinite_except(missing: impl IntoIterator<Item = u64>) -> Self {
        Self::finite(missing).complement()
    }

    /// All naturals congruent to `residue` modulo `modulus`.
    pub fn residue_class(residue: u64, modulus: u64) -> Self {
        let m = modulus.max(1) as usize;
        let mut cycle = vec![false; m];
        cycle[(residue % modulus.max(1)) as usize] = true;
        Self::from_parts(Vec::new(), cycle)
    }

    pub fn contains(&self, n: u64) -> bool {
        match self.head.get(n as usize) {
            Some(&b) => b,
            None => self.cycle[(n % self.modulus()) as usize],
        }
    }

    pub fn threshold(&self) -> u64 {
        self.head.len() as u64
    }

    pub fn modulus(&self) -> u64 {
        self.cycle.len() as u64
    }

    /// Explicit members below the threshold.
    pub fn prefix(&self) -> Vec<u64> {
        (0..self.head.len() as u64).filter(|&n| self.head[n as usize]).collect()
    }

    /// Member residues used from the threshold on.
    pub fn residues(&self) -> Vec<u64> {
        (0..self.modulus()).filter(|&r| self.cycle[r as usize]).collect()
    }

    fn combine(&self, other: &NatSet, op: impl Fn(bool, bool) -> bool) -> NatSet {
        let t = self.head.len().max(other.head.len());
        let l = lcm(self.modulus(), other.modulus()) as usize;
        let head = (0..t as u64).map(|n| op(self.contains(n), other.contains(n))).collect();
        let cycle = (0..l)
            .map(|r| op(self.cycle[r % self.cycle.len()], other.cycle[r % other.cycle.len()]))
            .collect();
        NatSet::from_parts(head, cycle)
    }

    pub fn meet(&self, other: &NatSet) -> NatSet {
        self.combine(other, |a, b| a && b)
    }

    pub fn join(&self, other: &NatSet) -> NatSet {
        self.combine(other, |a, b| a || b)
    }

    pub fn minus(&self, other: &NatSet) -> NatSet {
        self.combine(other, |a, b| a && !b)
    }

    pub fn complement(&self) -> NatSet {
        NatSet {
            head: self.head.iter().map(|b| !b).collect(),
            cycle: self.cycle.iter().map(|b| !b).collect(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.head.is_empty() && self.cycle == [false]
    }

    pub fn is_full(&self) -> bool {
        self.head.is_empty() && self.cycle == [true]
    }

    pub fn is_subset(&self, other: &NatSet) -> bool {
        self.minus(other).is_empty()
    }

    pub fn intersects(&self, other: &NatSet) -> bool {
        !self.meet(other).is_empty()
    }

    pub fn is_finite(&self) -> bool {
        self.cycle.iter().all(|b| !b)
    }

    pub fn is_cofinite(&self) -> bool {
        self.cycle.iter().all(|&b| b)
    }

    /// Whether infinitely many members are congruent to `residue` modulo `k`.
    pub fn infinite_in_class(&self, residue: u64, k: u64) -> bool {
        let g = gcd(self.modulus(), k.max(1));
        let target = residue % g;
        (0..self.modulus()).any(|s| self.cycle[s as usize] && s % g == target)
    }

    /// Adds every member of each class modulo `k` that this set meets
    /// infinitely often.
    pub fn saturate(&self, k: u64) -> NatSet {
        let k = k.max(1);
        (0..k)
            .filter(|&r| self.infinite_in_class(r, k))
            .fold(self.clone(), |acc, r| acc.join(&NatSet::residue_class(r, k)))
    }

    /// Members strictly below the threshold, as a finite set.
    pub fn finite_part(&self) -> NatSet {
        NatSet::finite(self.prefix())
    }

    pub fn least(&self) -> Option<u64> {
        if let Some(n) = self.head.iter().position(|&b| b) {
            return Some(n as u64);
        }
        let t = self.threshold();
        (t..t + self.modulus()).find(|&n| self.contains(n))
    }
}

impl fmt::Debug for NatSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

fn list(items: &[u64]) -> String {
    items.iter().map(u64::to_string).collect::<Vec<_>>().join(",")
}

impl fmt::Display for NatSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let t = self.threshold();
        if self.is_finite() {
            return write!(f, "{{{}}}", list(&self.prefix()));
        }
        if self.is_cofinite() {
            let missing: Vec<u64> = (0..t).filter(|&n| !self.contains(n)).collect();
            return if missing.is_empty() {
                write!(f, "N")
            } else {
                write!(f, "N\\{{{}}}", list(&missing))
            };
        }
        let prefix = self.prefix();
        if !prefix.is_empty() {
            write!(f, "{{{}}} + ", list(&prefix))?;
        }
        write!(f, "{{n>={t} : n mod {} in {{{}}}}}", self.modulus(), list(&self.residues()))
    }
}

/// Wire form of a [`NatSet`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NatSetParts {
    pub prefix: Vec<u64>,
    pub threshold: u64,
    pub residues: Vec<u64>,
    pub modulus: u64,
}

impl From<&NatSet> for NatSetParts {
    fn from(s: &NatSet) -> Self {
        NatSetParts {
            prefix: s.prefix(),
            threshold: s.threshold(),
            residues: s.residues(),
            modulus: s.modulus(),
        }
    }
}

impl TryFrom<NatSetParts> for NatSet {
    type Error = crate::Error;

    fn try_from(p: NatSetParts) -> Result<Self> {
        NatSet::new(p.prefix, p.threshold, p.residues, p.modulus)
    }
}
