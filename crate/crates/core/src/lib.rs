//! Finite many-valued matrix logics over Goedel chains with involution and
//! Lukasiewicz chains: evaluation, consequence, catalogs of intermediate
//! logics and their paraconsistency classification.

pub mod algebra;
pub mod analysis;
pub mod catalog;
pub mod entailment;
pub mod error;
pub mod formula;
pub mod random;

pub use algebra::{Chain, ChainKind, Component, Elem, OrderFilter, ProductMatrix};
pub use entailment::{Limits, Verdict};
pub use error::{Error, Result};
pub use formula::Formula;
