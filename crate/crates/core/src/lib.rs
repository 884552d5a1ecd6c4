//! Exact-arithmetic verification of the numerical geometry of Inoue surfaces
//! with `p_g = 0` and `K² = 7`.
//!
//! The library mechanically checks, over the integers and the exact
//! rationals, every numerical step in the standard construction of these
//! surfaces as bidouble covers of the four-nodal cubic and in the
//! "enough automorphisms" argument for the vanishing of the Albanese
//! kernel `T(S)`:
//!
//! * [`picard`] — the rank-7 Picard lattice of the plane blown up in six
//!   points, with its intersection form and canonical class;
//! * [`quadrilateral`] — an explicit rational-coordinate model of the
//!   complete quadrilateral and the named curve classes living on the
//!   blow-up;
//! * [`linalg`] — exact rational matrices, Gaussian elimination, and a
//!   fraction-free integer rank routine used as an independent cross-check;
//! * [`linear_systems`] — `h⁰` of any divisor class by exact interpolation
//!   (plane forms with assigned base-point multiplicities);
//! * [`cover`] — branch data and numerical invariants of the bidouble
//!   cover, including the character decomposition of the bicanonical
//!   system;
//! * [`group_algebra`] — rational group algebras, subgroup sums `z(H)`,
//!   two-sided ideal membership, and the "enough automorphisms" criterion;
//! * [`involution`] — fixed-point counts and Picard-rank bookkeeping for
//!   involutions on regular surfaces, the admissible-`k` enumeration, and
//!   the final verdict assembly.
//!
//! All computation is exact: integer arithmetic in the lattice, `BigRational`
//! arithmetic in every matrix. No floating point is used anywhere.

pub mod cover;
pub mod group_algebra;
pub mod involution;
pub mod linalg;
pub mod linear_systems;
pub mod picard;
pub mod quadrilateral;

pub use cover::{BranchData, BranchReport, CoverInvariants};
pub use involution::{BlochVerdict, CaseRecord, InvolutionProfile, ScanResult};
pub use picard::DivisorClass;
pub use quadrilateral::{NamedClassTable, PointConfiguration, ProjPoint};
