use serde::{Deserialize, Serialize};

/// How a condition's verdict was obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Provenance {
    /// Every instance was checked.
    Exhaustive,
    /// A seeded random sample of instances was checked.
    Sampled,
    /// Holds by the shape of the relation kernel; samples were still run.
    Structural,
}

/// The verdict on one named condition.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Condition {
    pub name: String,
    pub holds: bool,
    pub provenance: Provenance,
    /// Named parts of the least counterexample found, if any.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub witness: Vec<(String, String)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl Condition {
    pub fn pass(name: &str, provenance: Provenance) -> Self {
        Condition { name: name.into(), holds: true, provenance, witness: Vec::new(), note: None }
    }

    pub fn fail(name: &str, provenance: Provenance, witness: Vec<(String, String)>) -> Self {
        Condition { name: name.into(), holds: false, provenance, witness, note: None }
    }

    pub fn from_witness(name: &str, provenance: Provenance, witness: Option<Vec<(String, String)>>) -> Self {
        match witness {
            None => Condition::pass(name, provenance),
            Some(w) => Condition::fail(name, provenance, w),
        }
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }
}

/// An ordered list of condition verdicts.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConditionReport {
    pub conditions: Vec<Condition>,
}

impl ConditionReport {
    pub fn push(&mut self, c: Condition) {
        self.conditions.push(c);
    }

    pub fn extend(&mut self, other: ConditionReport) {
        self.conditions.extend(other.conditions);
    }

    pub fn holds_all(&self) -> bool {
        self.conditions.iter().all(|c| c.holds)
    }

    pub fn get(&self, name: &str) -> Option<&Condition> {
        self.conditions.iter().find(|c| c.name == name)
    }

    /// Whether the named condition is present and holds.
    pub fn holds(&self, name: &str) -> bool {
        self.get(name).is_some_and(|c| c.holds)
    }

    pub fn failed(&self) -> impl Iterator<Item = &Condition> {
        self.conditions.iter().filter(|c| !c.holds)
    }
}

/// Builds a witness list from name/value pairs.
pub fn witness<const N: usize>(pairs: [(&str, String); N]) -> Vec<(String, String)> {
    pairs.into_iter().map(|(k, v)| (k.to_string(), v)).collect()
}
