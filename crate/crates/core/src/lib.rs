//! Exact and numeric verification toolkit for Humbert-Edge curves of type 5,
//! their Kummer surfaces and the moduli of their branch sets.

pub mod arith;
pub mod config;
pub mod error;
pub mod fixtures;
pub mod geom;
pub mod hecurve;
pub mod kummer;
pub mod moduli;
pub mod theta;

pub use error::{Error, Result};
