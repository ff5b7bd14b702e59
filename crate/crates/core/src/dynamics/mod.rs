//! Inflation and deflation, equivalence of blow-ups, shifts on equivalence
//! classes, self-similarities, patch search and the local-rigidity heuristic.

mod equivalence;
mod inflation;
mod patches;
mod rigidity;

pub use equivalence::{check_equivalence, self_similarity, shift_class, ClassRep, EquivalenceWitness, ShiftDirection};
pub use inflation::{deflate, hierarchy_check, inflate};
pub use patches::{find_patch_occurrences, letter_occurrences};
pub use rigidity::{neighbor_map_check, RigidityReport, Verdict};
