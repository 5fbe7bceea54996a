//! Grammar compression laboratory.

pub mod boost;
pub mod cfg;
pub mod compress;
pub mod error;
pub mod gen;
pub mod rna;
pub mod slg;
pub mod symbol;
pub mod verify;

pub use error::{Error, Result};
pub use slg::{GrammarStats, Slg, SlgBuilder};
pub use symbol::{Symbol, Terminal};
