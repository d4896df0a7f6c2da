//! Text formats: polynomial parsing, corpus entries, reports and DOT export.

mod corpus;
mod dot;
mod parser;
mod report;

pub use corpus::{load_corpus, CorpusEntry, EntryLimits, OrderSpec, TieSpec};
pub use dot::{gamma_to_dot, prime_labels};
pub use parser::parse_polynomial;
pub use report::{run_entry, CorpusSummary, ReportEnvelope, SummaryRow, TOOL_VERSION};
