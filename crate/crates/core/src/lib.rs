//! Simple-minded systems (sms's) over self-injective Nakayama algebras.
//!
//! The algebra `A_n^ell` is the path algebra of the cyclic quiver
//! `1 -> 2 -> ... -> n -> 1` modulo all paths of length `ell + 1`. Every
//! indecomposable module is uniserial, so it is pinned down by its top
//! vertex and its Loewy length; all functor actions (`tau`, `nu`, syzygy)
//! become closed-form index maps on those two numbers.
//!
//! An sms is a set of stable bricks that behaves like the set of simples
//! in the stable module category. Over `A_n^ell` the sms's are governed by
//! the non-crossing partitions of `{1..e}`, `e = gcd(n, ell)`: every
//! partition/index pair `(p, k)` yields a long-type and a short-type
//! family, and these families exhaust all sms's. This crate constructs the
//! families, verifies sms-hood from first principles, enumerates all sms's
//! on small algebras, and certifies the combinatorial Hom formulas against
//! an independent linear-algebra oracle over prime fields.
//!
//! The crate is `no_std` (with `alloc`); IO, JSON and the command line
//! live in the companion `nakayama-sms-cli` crate.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod algebra;
pub mod arcs;
pub mod error;
pub mod noncrossing;
pub mod oracle;
pub mod sms;
pub mod stable_hom;
pub mod verifier;

pub use algebra::{Algebra, IndecModule, Symbol};
pub use error::Error;
pub use noncrossing::NonCrossingPartition;
pub use sms::{FamilyKind, FamilyLabel, SmsCandidate};
pub use verifier::{SmsFailure, SmsVerdict};
