//! Text and JSON boundaries.

pub mod expr;
pub mod json;

pub use expr::{
    parse, parse_form, parse_generators, parse_multivector, print_canonical, print_form, Kind,
    ParseError, ParseErrorKind, Value,
};
pub use json::{from_json, to_json, JsonError};
