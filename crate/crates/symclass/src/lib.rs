//! Exact-arithmetic engine for the centers of symmetric group algebras:
//! symmetric functions in the power-sum basis, a brute-force group-algebra
//! oracle, normal-ordered differential operators, vertex-operator modes,
//! normalized class expansions, and Gaussian matrix-integral combinatorics.

pub mod classexp;
pub mod diffop;
pub mod oracle;
pub mod partition;
pub mod perm;
pub mod qlaurent;
pub mod scalar;
pub mod schur;
pub mod symfunc;
pub mod tseries;
pub mod verify;
pub mod vertex;
pub mod wick;

pub use partition::Partition;
pub use perm::Perm;
pub use scalar::Rat;
