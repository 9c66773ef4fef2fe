//! Halfspace calculus for finite CAT(0) cube complexes.
//!
//! Everything works dually, through halfspaces: a finite pocset of
//! halfspaces, its consistent orientations (the Roller-style points),
//! the cube complex they span, intervals, medians, probability-measure
//! lifts, and signed-permutation orbit checks on interval endpoints.

pub mod actions;
pub mod cli;
pub mod corpus;
pub mod cubulation;
pub mod error;
pub mod intervals;
pub mod io;
pub mod lifting;
pub mod pocset;
pub mod roller;
pub mod zdmodel;

pub use cubulation::{CubeComplex, Orientation, WalledSpace};
pub use error::CubistError;
pub use pocset::{Halfspace, HalfspaceSystem, PairRelation};
