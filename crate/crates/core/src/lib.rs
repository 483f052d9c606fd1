pub mod artinian;
pub mod class;
pub mod cli;
pub mod error;
pub mod json;
pub mod matrix;
pub mod mf;
pub mod module;
pub mod random;
pub mod ring;
pub mod smith;

pub use error::{Error, Result};
pub use matrix::RingMatrix;
pub use module::ModuleInvariants;
pub use ring::{Ring, RingElement};
