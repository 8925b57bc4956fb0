//! Exact-arithmetic invariants of the homogeneous spaces `G/H` attached to
//! unipotent classes of simple simply-connected complex algebraic groups,
//! where `H` is the image of the SL2 subgroup produced by the class.
//!
//! The crate computes, with no floating point anywhere:
//!
//! * root data for all simple types A–G (Cartan matrices, positive roots,
//!   fundamental degrees, weight multiplicities by the Freudenthal recursion),
//! * unipotent classes: constrained partitions for the classical series,
//!   curated label/diagram tables for the exceptional ones, and weighted
//!   Dynkin diagrams,
//! * restrictions of representations to the SL2 subgroup: weight multisets,
//!   string decompositions, character polynomials, and Dynkin indices by two
//!   independent routes,
//! * homotopy invariants of the quotient: dimension, quite-even status,
//!   pi_1..pi_3, the pi_4..pi_6 table for types B/C, and rational sphere
//!   decompositions,
//! * the K-theory ideal of the quotient in `Z[x]` together with its mod-p
//!   reductions and Koszul homology (closed form plus a Smith-normal-form
//!   oracle),
//! * a distinguishing pipeline that compares two quotients invariant by
//!   invariant and reports `Distinct`, `Undetermined`, or `Identical`.
//!
//! Start with the `examples/` directory: each example exercises one major
//! capability end to end. The `sl2q` binary exposes the same functionality as
//! a small command-line tool.

pub mod classify;
pub mod cli;
pub mod error;
pub mod invariants;
pub mod ktheory;
pub mod orbits;
pub mod root_data;
pub mod sl2restrict;

pub use classify::{
    classify_dimension, d4_report, distinguish, ClassificationReport, Outcome, SpaceId, Verdict,
    Witness,
};
pub use error::{Error, Result};
pub use invariants::{homotopy_report, FiniteAbelianGroup, HomotopyReport};
pub use ktheory::profile::{ideal_generators, ideal_profile, IdealProfile, PrimeReduction};
pub use orbits::{
    enumerate_classes, load_exceptional_table, OrbitTable, Partition, TableStore, UnipotentClass,
    WeightedDiagram,
};
pub use root_data::{build_root_system, Basis, GroupType, RootSystem, Series, WeightVector};
pub use sl2restrict::{dynkin_index, sl2_decompose, Side, WeightMultiset};
