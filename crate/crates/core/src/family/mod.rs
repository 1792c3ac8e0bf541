//! Graph families: data model, JSON spec documents, the built-in catalog, and
//! realization of individual members.

pub mod catalog;
pub mod graph;
pub mod realize;
pub mod spec;
pub mod wep;

use thiserror::Error;

pub use catalog::{builtin, builtins, BUILTIN_NAMES};
pub use graph::Graph;
pub use realize::realize;
pub use spec::{parse_family_spec, FamilySpec, QubitLaw};
pub use wep::{sld_from_wep, wep_from_sld, Sld, Wep};

#[derive(Debug, Error)]
pub enum FamilyError {
    #[error("malformed family spec: {0}")]
    Malformed(String),
    #[error("invalid family: {0}")]
    Invalid(String),
    #[error("{0} is not injective")]
    NotInjective(&'static str),
    #[error("boundary subgraphs are not isomorphic: edge status of boundary pair ({a}, {b}) differs in the replacement")]
    BoundaryNotIsomorphic { a: usize, b: usize },
    #[error("replacement graph has {replacement} vertices but the boundary has {boundary}")]
    ReplacementTooSmall { replacement: usize, boundary: usize },
    #[error("unknown family {0:?}")]
    UnknownFamily(String),
    #[error("member {0} is an artificial prefix member without a concrete graph")]
    NotRealizable(usize),
}
