//! Direct descriptions of the continuant supports and coefficients.
//!
//! Nothing here calls the recurrences of [`crate::continuants`]; the two
//! modules are independent routes to the same polynomials.

mod closed_forms;
mod family;
mod seq_family;
mod sign;

pub use closed_forms::{
    combinatorial_c, combinatorial_d, combinatorial_g, combinatorial_h, combinatorial_p,
    combinatorial_q, combinatorial_r, em_c, em_g, family_sum, signed_family_sum,
    signed_phi_family_sum,
};
pub use family::{enumerate_family, for_each_in_family, for_each_in_family_with_g, Family};
pub use seq_family::{enumerate_seq_family, for_each_in_seq_family, SeqFamily};
pub use sign::{g, g_direct, g_of_index, g_of_index_direct};
