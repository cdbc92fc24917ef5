//! Exact and numerical machinery for small quantum codes, built around
//! the ((5,6,2)) nonadditive code on five qubits.
//!
//! The crate provides:
//!
//! - **Pauli algebra** ([`pauli`]): signed Pauli strings in symplectic
//!   bit form with exact phase tracking.
//! - **Operator kernel** ([`expansion`], [`dense`]): Hermitian operators
//!   as real combinations of Pauli labels — exact rationals for
//!   transcribed objects, floats for search iterates — plus dense
//!   2ⁿ×2ⁿ realizations and state vectors.
//! - **Stabilizer groups** ([`stabilizer`]): closure from generators,
//!   characters and eigenspace projectors, coset unions and their
//!   minimum distance.
//! - **Code analysis** ([`analysis`]): projector verification,
//!   Knill–Laflamme distance, weight enumerators, stabilizer
//!   containment, coset reconstruction, and the canonical ((5,6,2))
//!   projector with its explicit basis.
//! - **Symmetries** ([`symmetry`]): qubit permutations with per-qubit
//!   signed rotations, group closure and orders, and the eigenspace
//!   structure of the code.
//! - **Discovery** ([`discovery`]): the randomized search that finds the
//!   code numerically — enumerator forcing alternated with the
//!   eigenvalue-polishing map M′ = 2M²−M⁴.
//! - **Text formats** ([`textio`]): expansion, state, group, and
//!   symmetry files.
//!
//! ```
//! use pentacode::analysis::five_six_two_projector;
//!
//! let code = five_six_two_projector();
//! assert_eq!(code.rank(), 6);
//! assert_eq!(code.min_distance(0.0), 2);
//! ```

pub mod analysis;
pub mod dense;
pub mod discovery;
pub mod error;
pub mod expansion;
pub mod pauli;
pub mod stabilizer;
pub mod symmetry;
pub mod textio;

pub use analysis::{
    analyze, enumerator_a, enumerator_b, five_six_two_basis, five_six_two_projector, CodeProjector,
    VerificationReport, WeightEnumerator,
};
pub use dense::{DenseOperator, StateVector};
pub use error::{Error, Result};
pub use expansion::{Coefficient, Exact, ExactExpansion, FloatExpansion, PauliExpansion};
pub use pauli::{Letter, PauliLabel, PauliString};
pub use stabilizer::{Character, CosetUnion, StabilizerGroup};
pub use symmetry::{SymmetryElement, SymmetryLevel};
