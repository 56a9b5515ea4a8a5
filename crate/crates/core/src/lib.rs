//! Finite and symbolic local contact algebras, their dual spaces, and the
//! lattice of extensions they encode.
//!
//! Finite algebras are powersets of at most eight labelled atoms; the
//! symbolic algebras are the finite-cofinite subsets of the naturals and the
//! eventually periodic subsets with a fixed period bound.
//!
//! ```
//! use lca_duality::algebra::Powerset;
//! use lca_duality::contact::{check_lca, FiniteLca, Lca};
//!
//! let l = Lca::Finite(FiniteLca::overlap_all(&Powerset::with_atoms(3)));
//! assert!(check_lca(&l).holds_all());
//! ```

pub mod algebra;
pub mod contact;
pub mod descriptor;
pub mod duality;
pub mod error;
pub mod extension;
pub mod frame;
pub mod report;
pub mod space;

pub use error::{Error, Result};
pub use report::{Condition, ConditionReport, Provenance};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/algebras.md")]
    mod algebras {}
    #[doc = include_str!("../../../book/src/contact.md")]
    mod contact {}
    #[doc = include_str!("../../../book/src/duality.md")]
    mod duality {}
    #[doc = include_str!("../../../book/src/frames.md")]
    mod frames {}
    #[doc = include_str!("../../../book/src/extensions.md")]
    mod extensions {}
    #[doc = include_str!("../../../book/src/proximity.md")]
    mod proximity {}
}
