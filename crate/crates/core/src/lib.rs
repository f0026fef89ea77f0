//! Finite models of protomodular frames: operation tables, an equational
//! checker, the protomodular property checkers, translation groups, the
//! group-theoretic reconstructions, and exhaustive search over small carriers.

pub mod error;
pub mod fixtures;
pub mod group;
pub mod model;
pub mod protomod;
pub mod reconstruct;
pub mod search;
pub mod termlang;
mod textfmt;
pub mod translations;

pub use error::{Error, Result};
pub use model::{parse_algebra, serialize_algebra, FiniteModel, ProtomodularFrame, Signature};
