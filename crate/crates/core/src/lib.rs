//! Tropical level-set decomposition of Young's lattice `L(m, n)`.
//!
//! Partitions are modelled as degree-`m` monomials in `z_0, ..., z_n`
//! ([`poset`]). Tropical polynomials attached to the secant ideals of the
//! rational normal curve ([`tropical`], [`factorization`]) split each slice
//! `A_n(m)` into level sets `Q_n(d_0, ..., d_k)` ([`level_sets`]). The
//! raising/lowering algorithm covers every level set by monotonic saturated
//! chains and, where possible, stitches them into symmetric chain
//! decompositions ([`chain`]). [`verify`] re-checks every claim independently.

pub mod chain;
pub mod error;
pub mod factorization;
pub mod level_sets;
pub mod poset;
pub mod tropical;
pub mod verify;

pub use chain::{Chain, ChainFamily, FamilyKind, Rectangle, Scd, Side};
pub use error::{Error, Result};
pub use factorization::Tableau;
pub use level_sets::{LevelSet, Signature};
pub use poset::{ColorMove, Monomial, Partition};

/// Size caps shared by the enumerating operations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Config {
    /// Largest `C(n + m, n)` any operation may enumerate.
    pub max_poset: u64,
    /// Largest element count handed to the Sperner matching.
    pub max_sperner: usize,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            max_poset: 2_000_000,
            max_sperner: 2000,
        }
    }
}
