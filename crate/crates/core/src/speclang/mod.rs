//! The f-system description language, the check pipeline and its reports.

pub mod builtin;
pub mod doc;
pub mod format;
pub mod parse;
pub mod pipeline;
pub mod report;
pub mod templates;

pub use doc::{Diagnostic, Model, SpecDocument};
pub use format::format_spec;
pub use parse::{load, parse_spec};
pub use pipeline::{run_pipeline, Report};
