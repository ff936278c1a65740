//! Counting sequences, generating functions, and the identity verifier.

mod integer;
mod sequences;
mod verify;

pub use integer::{
    c_signed_count, d_signed_count, fibonacci_via_formulas, pell_via_formulas, pell_via_rational,
    r_sign_split, r_signed_count, tau_fibonacci_via_v, tau_pell_via_v, u_signed_count,
    v_signed_length_count, weighted_sign_sum,
};
pub use sequences::{gf_coefficients, poly_mul, sequence, SequenceName, SequenceTable, ONE_PLUS_X_PAIRS};
pub use verify::{verify, verify_all, Failure, Identity, Status, VerificationReport, RATIONAL_PELL_KMAX, TRIG_TOLERANCE};
