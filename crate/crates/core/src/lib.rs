//! Finite digroups and left skew braces represented as explicit operation
//! tables.
//!
//! A digroup is one carrier with two group structures `*` and `∘` sharing the
//! identity; a left skew brace is a digroup with
//! `a∘(b*c) = (a∘b) * a⁻* * (a∘c)`. The crate decides these axioms and the
//! related equivalences by exhaustive checking, builds inner and outer
//! semidirect products together with their action triples, computes ideal
//! commutators and centers, and produces set-theoretic Yang–Baxter solutions.
//!
//! Every carrier is `0..n` and index 0 is the identity of every group
//! structure involved.

pub mod catalog;
pub mod digroup;
pub mod enumerate;
mod error;
pub mod format;
pub mod group;
pub mod ideal_algebra;
mod map;
pub mod semidirect;
pub mod ybe;

pub use digroup::{Digroup, IdealSet};
pub use error::{Error, Result};
pub use group::FiniteGroup;
pub use map::ElementMap;
pub use semidirect::{DigroupAction, InnerDecomposition};
pub use ybe::SetSolution;

/// Size bounds for the exhaustive searches.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Largest carrier accepted by automorphism, ideal, decomposition and
    /// isomorphism searches, and the largest `|Y|·|K|` accepted by the
    /// outer-product brace criterion.
    pub max_order: usize,
    /// Largest order for which all group tables are enumerated.
    pub max_enumeration_order: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_order: 12,
            max_enumeration_order: 8,
        }
    }
}

impl Limits {
    pub fn with_max_order(max_order: usize) -> Self {
        Limits {
            max_order,
            ..Limits::default()
        }
    }

    pub(crate) fn check_order(&self, order: usize) -> Result<()> {
        if order > self.max_order {
            Err(Error::OrderBoundExceeded {
                order,
                bound: self.max_order,
            })
        } else {
            Ok(())
        }
    }
}
