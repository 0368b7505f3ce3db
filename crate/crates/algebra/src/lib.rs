//! Exact model of the 248-dimensional complex Lie algebra of type E8,
//! realized as e7 + P + P + C^3 over the cyclotomic field Q(zeta_24),
//! together with its order-three and order-four linear transformations
//! and the solvers that certify their fixed spaces and operator identities.

pub mod cayley;
pub mod e8;
pub mod fixpoints;
pub mod freudenthal;
pub mod jordan;
pub mod linalg;
pub mod scalar;

pub use scalar::{root_of_unity, root_of_unity_float, Scalar};
