//! Sums-of-squares identities from twisted group algebras over Z₂ⁿ.
//!
//! Elements of Z₂ⁿ are n-bit words ([`GroupElement`]); subsets are dense
//! bitsets ([`ElementSet`]). A [`TwistSpec`] fixes the twisting function
//! f: Z₂ⁿ × Z₂ⁿ → Z₂ of the algebra with basis product u_x u_y = (−1)^f(x,y) u_{x+y}.
//! A pair (A, B) is multiplicative when the Euclidean norm is multiplicative
//! on elements supported in A and B, which yields an identity
//! (Σ_A a²)(Σ_B b²) = Σ_{A+B} c² of size [|A|, |B|, |A+B|].

pub mod constructions;
pub mod error;
pub mod group;
pub mod pairing;
pub mod quasialgebra;
pub mod setops;
pub mod twist;

pub use constructions::{Construction, FamilyId, Method};
pub use error::{Error, Result};
pub use group::{rho, Basis, ElementSet, GroupElement, SetJson};
pub use pairing::{AdmissibleTriple, SquareIdentity, Triple, Verdict};
pub use quasialgebra::AlgebraElement;
pub use setops::{SearchBudget, SearchOutcome};
pub use twist::{Family, TwistJson, TwistSpec};
