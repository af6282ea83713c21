//! Constructive bijections on colored labelled forests.

pub mod code;
pub mod psi;

pub use code::{code_box_size, decode, encode, for_each_code, window_widths, CodeSequence};
pub use psi::{psi, psi_transport, PsiCase};
