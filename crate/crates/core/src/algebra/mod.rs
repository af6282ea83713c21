//! Exact rational arithmetic: polynomials, multinomials and closed forms.

pub mod closed;
pub mod comb;
pub mod poly;

pub use closed::{closed_hookp, closed_hookp2, closed_hookp_at, leaf_product};
pub use comb::{factorial, multinomial};
pub use poly::{int, rat, Polynomial};
pub use num_rational::BigRational;
