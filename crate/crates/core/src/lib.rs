//! Exact computations in the free 2-associative bialgebra on planar trees.
//!
//! The crate builds the free algebra with its two products and two
//! coproducts, the convolution idempotent onto primitives, the structure
//! isomorphism with a tensor coalgebra, the B∞ operations `M_pq` and the
//! Hochschild complexes used to test acyclicity. All arithmetic is exact.

pub mod bialgebra;
pub mod binfty;
pub mod error;
pub mod free2as;
pub mod homology;
pub mod linalg;
pub mod linear;
pub mod projector;
pub mod sampling;
pub mod tensor;
pub mod trees;

pub use error::{Error, Result};
pub use free2as::{Basis, DecoratedTree, FreeElement, Label, Tag, TaggedTree};
pub use linear::{LinComb, Rational};
pub use trees::PlanarTree;
pub use binfty::{BInftyElement, Expr, FreeBInfty, TwoAsAlgebra};
pub use homology::ChainComplexSlice;
pub use projector::{BasisIndex, GradedEndoMap, StructureIso};
pub use tensor::{BInfty, GradedBasis, Letter, Word};
