//! Graph input formats, character syntax, and the invariant report.

mod parse;
mod report;

pub use parse::{
    parse_character, parse_dsl, parse_edgelist, parse_graph, parse_structured, write_edgelist,
    write_structured, GraphFormat,
};
pub use report::{build_report, compare_graphs, Comparison, InvariantReport, ReportOptions};
