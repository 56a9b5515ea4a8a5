use serde::Deserialize;

use lca_duality::descriptor::{AlgebraDesc, BoundedDesc, ContactDesc, ElementDesc, HomDesc, LcaDesc, MapDesc, SpaceDesc};
use lca_duality::error::{Error, Result};

/// A local proximity space: points, a relation on their subsets and the
/// largest bounded set.
#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProximityDesc {
    pub points: Vec<String>,
    pub contact: ContactDesc,
    pub bounded: ElementDesc,
}

/// Every descriptor a command may read. Each command uses the fields it
/// needs and rejects requests missing them.
///
/// An LCA is given either as `lca` or as top-level `algebra`, `contact` and
/// `bounded`.
#[derive(Clone, Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Request {
    pub algebra: Option<AlgebraDesc>,
    pub contact: Option<ContactDesc>,
    pub bounded: Option<BoundedDesc>,
    pub lca: Option<LcaDesc>,
    /// The target LCA of a morphism.
    pub target: Option<LcaDesc>,
    pub hom: Option<HomDesc>,
    pub space: Option<SpaceDesc>,
    pub map: Option<MapDesc>,
    /// The largest element of a δ-ideal.
    pub ideal: Option<ElementDesc>,
    pub element: Option<ElementDesc>,
    pub family: Option<Vec<ElementDesc>>,
    pub relations: Option<Vec<ContactDesc>>,
    pub first: Option<ContactDesc>,
    pub second: Option<ContactDesc>,
    pub proximity: Option<ProximityDesc>,
    /// Conditions that decide the status of `check-morphism`.
    pub require: Option<Vec<String>>,
}

pub(crate) fn missing<T>(field: &str) -> Result<T> {
    Err(Error::Input(format!("the request needs a `{field}` field")))
}

pub(crate) fn field<'a, T>(v: &'a Option<T>, name: &str) -> Result<&'a T> {
    v.as_ref().map_or_else(|| missing(name), Ok)
}

impl Request {
    pub fn lca_desc(&self) -> Result<LcaDesc> {
        if let Some(l) = &self.lca {
            return Ok(l.clone());
        }
        match (&self.algebra, &self.contact, &self.bounded) {
            (Some(algebra), Some(contact), Some(bounded)) => {
                Ok(LcaDesc { algebra: algebra.clone(), contact: contact.clone(), bounded: bounded.clone() })
            }
            _ => missing("lca"),
        }
    }

    /// Whether the top-level `contact` is the LCA's own relation rather than
    /// a separate one.
    pub fn contact_is_lca_part(&self) -> bool {
        self.lca.is_none() && self.bounded.is_some()
    }
}
