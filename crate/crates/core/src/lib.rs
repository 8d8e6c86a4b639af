//! Exact computations on flag domains `D = G/V` of simple real groups with a
//! compact Cartan subgroup.
//!
//! The symbolic half works entirely in simple-root coordinates with
//! arbitrary-precision rationals:
//!
//! * [`roots`] builds root systems of types A through G.
//! * [`chevalley`] provides Chevalley-basis structure constants, the bracket,
//!   the Killing form and the conjugation of the equal-rank real form.
//! * [`grading`] turns a `{V, K, Q}` labeling of the simple roots into the
//!   grading element and the graded decomposition of the complex algebra.
//! * [`analysis`] computes bracket-generation closures, the `f` ideal,
//!   Hermitian centers and the classical / non-classical verdict.
//! * [`verify`] packages the invariant suites used by the self-test.
//!
//! The numeric half, [`chainball`], works with flags in `C^3` for the
//! non-classical `SU(2,1)/T` domain and builds explicit chains of compact
//! cycles joining pairs of points.

pub mod analysis;
pub mod chainball;
pub mod chevalley;
pub mod grading;
pub mod linalg;
pub mod roots;
pub mod verify;

/// Exact rational scalar used throughout the symbolic modules.
pub type Rational = num_rational::BigRational;

pub use analysis::{classify, ClassificationReport, FIdeal, Fibration, RootSupportedSubspace};
pub use chevalley::{BasisElement, LieElement, RealFormConjugation, StructureTable};
pub use grading::{DomainSpec, GradedDecomposition, Label, Splits};
pub use roots::{Coweight, Family, Root, RootSystem, RootSystemType};
