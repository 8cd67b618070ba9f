//! Symplectic representation of Dehn twist words and Meyer-cocycle
//! signatures, computed in exact arithmetic.

mod cocycle;
pub mod linalg;
mod symplectic;

pub use cocycle::{meyer_inertia, meyer_tau, signature_from_word, word_product, CALIBRATION_SIGN};
pub use symplectic::{check_twist_vector, symplectic_form, transvection, SympMatrix, TwistWord};
