//! Compiles every Rust snippet of the guide in `book/` as a doc-test.

#[doc = include_str!("../../../book/src/introduction.md")]
pub mod introduction {}

#[doc = include_str!("../../../book/src/monoid-ring.md")]
pub mod monoid_ring {}

#[doc = include_str!("../../../book/src/continuants.md")]
pub mod continuants {}

#[doc = include_str!("../../../book/src/families-and-signs.md")]
pub mod families_and_signs {}

#[doc = include_str!("../../../book/src/closed-forms.md")]
pub mod closed_forms {}

#[doc = include_str!("../../../book/src/identities.md")]
pub mod identities {}

#[doc = include_str!("../../../book/src/sequences.md")]
pub mod sequences {}

#[doc = include_str!("../../../book/src/cli.md")]
pub mod cli {}
