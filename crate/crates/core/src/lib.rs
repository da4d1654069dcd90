//! Exact computations in the character rings of the groups `Sp_{2n}`,
//! `Sl_{2n}` and `E_6`, and their use in classifying the ways a theta
//! divisor splits as a sum of two subvarieties.
//!
//! Weights are stored in canonical integer coordinates: `ε`-coordinates in
//! `Z^n` for type `C_n`, `Z^{2n}` modulo `(1, …, 1)` for type `A_{2n-1}`
//! (normalized so that the largest of the last `n` entries is zero), and
//! Dynkin labels for `E_6`.
//!
//! ```
//! use thetasum_core::{charring, RootSystem, RootSystemKind};
//!
//! let e6 = RootSystem::build(RootSystemKind::E6).unwrap();
//! let adjoint = e6.fundamental_weight(2).unwrap();
//! assert_eq!(charring::weyl_dimension(&e6, adjoint), 78.into());
//! ```

pub mod brillnoether;
pub mod charring;
pub mod dominance;
pub mod error;
pub mod lambdaring;
pub mod rootsys;
pub mod weyl;

pub use brillnoether::{CaseSpec, ClassificationReport, SupportExpr};
pub use charring::{CharElem, IrrDecomposition};
pub use dominance::{DominanceWitness, ReductionTrace};
pub use error::{Error, Result};
pub use rootsys::{Basis, DominantWeight, Limits, RootSystem, RootSystemKind, Weight};
pub use weyl::OrbitSum;
