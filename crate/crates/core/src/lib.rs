//! Generic extensions of semisimple invariant subspaces of nilpotent
//! linear operators.
//!
//! An invariant subspace `U ⊆ V` of a nilpotent operator `φ` with
//! `φ(U) = 0` is determined up to isomorphism by two partitions: the Jordan
//! type `beta` of `φ` and the Jordan type `gamma` of the operator induced on
//! `V / U`. They differ by a horizontal strip, i.e. a Littlewood-Richardson
//! tableau whose entries are all 1.
//!
//! * [`partitions`]: partition arithmetic.
//! * [`objects`]: the strip pairs, their picket decompositions, rendering,
//!   enumeration and the text grammar.
//! * [`homs`]: hom dimensions and orbit dimensions.
//! * [`orders`]: dominance / hom / degeneration orders and Hasse diagrams.
//! * [`genext`]: the generic extension `Y ∗ X`, explicit extension
//!   witnesses, and the monoid structure.
//! * [`oracle`]: brute-force extensions over `F_p`, used as ground truth.
//! * [`verify`]: exhaustive property sweeps.

pub mod error;
pub mod genext;
pub mod homs;
pub mod objects;
pub mod oracle;
pub mod orders;
pub mod partitions;
pub mod verify;

pub use error::{Error, Result};
pub use genext::{candidate_filter, extension_witness, generator_word, star, star_power};
pub use objects::{enumerate_s1, objects_up_to, Picket, PicketSum, S1Object, TableauFormat};
pub use partitions::Partition;
