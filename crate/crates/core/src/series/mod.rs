//! Declarative series: term templates, their evaluators and the built-in catalog.
//!
//! - [`template`]: factor records for one summand
//! - [`notation`]: compact product strings for templates
//! - [`sum`]: series definitions, partial and nonterminating sums
//! - [`expr`]: expression trees over series, products and scalars
//! - [`catalog`]: the named series

pub mod catalog;
pub mod expr;
pub mod notation;
pub mod sum;
pub mod template;

pub use catalog::{builtin, builtins, BUILTIN_NAMES};
pub use expr::{ratio, Count, Env, Expr};
pub use notation::{parse_template, tpl};
pub use sum::{limit_sum, partial_sum, term, LimitSum, SeriesDef, SeriesRange, Terms};
pub use template::{FactorSpec, GeometricSpec, Length, LinearFactorSpec, Side, TermTemplate};
