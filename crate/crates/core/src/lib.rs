//! Exact-arithmetic engine for truth-invariant cylindrical algebraic
//! decomposition (CAD) of quantifier-free nonlinear real arithmetic,
//! exploiting multiple equational constraints in both projection and
//! lifting, with Groebner-basis constraint derivation and an executable
//! cell-count bound calculator.
//!
//! The pipeline runs in phases: parse a formula over an ordered variable
//! list ([`formula`]), identify and designate equational constraints
//! ([`ecprep`]), project down to the real line ([`projection`]), then lift
//! back up cell by cell ([`lifting`]), all orchestrated by [`engine`].
//! Everything is computed exactly over the rationals; real algebraic
//! sample coordinates live in [`realalg`].

pub mod bounds;
pub mod ecprep;
pub mod engine;
pub mod formula;
pub mod lifting;
pub mod polyring;
pub mod projection;
pub mod realalg;
pub mod report;
