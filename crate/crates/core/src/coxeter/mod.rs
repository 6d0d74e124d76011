//! Coxeter systems and exact arithmetic in `W`.

mod braid_class;
mod element;
mod engine;
mod parabolic;
mod reflection;
mod system;

pub use element::{CoxElem, Side};
pub use reflection::{ExchangeCertificate, Reflection};
pub(crate) use system::{gen_set, gens_of};
pub use system::{Caps, CoxeterSystem, CoxeterType, FiniteInfo, Gen, GenSet};
