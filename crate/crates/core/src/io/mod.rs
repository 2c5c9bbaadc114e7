//! The presentation-file format and canonical printing.
//!
//! ```text
//! # comment
//! vars x1 < x2 < x3
//! order deglex
//! poly f = 2 <x2 x3 : 2> - 2 <x2 x3 : 1> + 3/4 <x1 x3 : 2>
//! rel <x1 x1 : 2> = <x2 : 1>
//! ```

pub mod parse;
pub mod print;

pub use parse::{parse_file, parse_monomial, parse_poly, PresentationFile};
pub use print::{format_amonomial, format_apoly, format_file, format_header, format_monomial, format_poly};
