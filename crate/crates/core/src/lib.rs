//! Exact computations in the slice Burnside ring of small finite groups.

mod bitset;
pub mod biset;
pub mod constants;
pub mod corpus;
pub mod error;
pub mod group;
pub mod gset;
pub mod ideals;
pub mod linalg;
pub mod rational;
pub mod ring;
pub mod verify;

pub use bitset::BitSet;
pub use error::{Error, Result};
pub use ideals::{GroupUniverse, SliceFamily};
pub use group::{FiniteGroup, GroupRef, Subgroup, SubgroupLattice};
pub use ring::{MarkMatrix, SliceClass, SliceElement, SliceRing};
