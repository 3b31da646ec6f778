//! Finite groups, Cayley digraphs and oriented regular representations.

pub mod error;
pub mod group;
pub mod aut;
pub mod digraph;
pub mod constructions;
pub mod classify;
pub mod presentation;
mod util;

pub use error::{Error, Result};
pub use group::{Elem, FiniteGroup, GeneratingTuple, Subset};
pub use presentation::{Presentation, Word};
