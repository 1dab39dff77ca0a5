//! Purely atomic permutative representations of a k-graph, evaluated
//! exactly on finitely supported vectors over a finite window of basis
//! points.

pub mod ck;
pub mod decide;
pub mod decompose;
pub mod identities;
pub mod intertwiner;
pub mod memo;
pub mod report;
pub mod setexpr;
pub mod spec;
pub mod vector;

pub use ck::verify_ck;
pub use decide::{
    are_disjoint, atom_dimension, atom_mass, cyclic_vector, is_irreducible, is_monic, unitarily_equivalent,
    verify_purely_atomic, CyclicVector, EquivalenceVerdict, Reason,
};
pub use decompose::{as_semibranching, decompose_slices, encoding, shift_index, verify_encoding, Slice, SliceDecomposition};
pub use identities::{distinct_paths, verify_atom_limits, verify_k_partition, verify_pvm_identities};
pub use intertwiner::Intertwiner;
pub use memo::Memo;
pub use report::{CheckFailure, CheckReport, Tally};
pub use setexpr::SetExpr;
pub use spec::{describe_path, AtomicRepSpec, IndexPoint, Mutated, OrbitSpec, Representation};
pub use vector::Vector;
