//! Coxeter groups, Artin braid words and presentations of pure braid groups.

#![allow(clippy::needless_range_loop)]

pub mod braid;
pub mod coxeter;
pub mod embedding;
pub mod error;
pub mod free;
pub mod nmap;
pub mod oracle;
pub mod schreier;
pub mod snf;

pub use coxeter::{Caps, CoxElem, CoxeterSystem, CoxeterType, Gen, GenSet, Reflection, Side};
pub use error::{Error, Result};
