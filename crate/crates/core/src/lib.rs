//! Exact combinatorics for equivariant K-theory Chevalley coefficients of
//! Kac-Moody flag manifolds.
//!
//! Three independent models compute the same coefficients: LS paths
//! ([`lspath`]), the alcove model ([`alcove`]) and the nilHecke recurrence
//! ([`kring`]).

#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod alcove;
pub mod cartan;
pub mod error;
pub mod kring;
pub mod lifts;
pub mod lspath;
pub mod weyl;

pub use alcove::{lex_cmp, AdaptedSequence, AlcoveModel, AlcoveTree, Hyperplane, Monotone, ReflOrder};
pub use cartan::{Coroot, Gcm, NodeSet, Rational, Realization, Weight};
pub use error::{Error, Result};
pub use kring::{ChevalleyRow, LaurentPoly, NilHeckeCoeffs};
pub use weyl::{Ball, BruhatGraph, Coset, Side, WeylElt, DEFAULT_LAYER_CAP};
pub use lspath::{ChartCase, ChartKind, ChartReport, IString, LsModel, LsPath};
