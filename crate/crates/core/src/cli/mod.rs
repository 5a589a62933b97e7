//! JSON workspaces and the commands run on them.
//!
//! A workspace is one JSON document holding named algebras, modules,
//! morphisms, cochains, crossed modules, short exact sequences, extensions
//! and a list of command requests. Everything is validated on load; the
//! commands then produce a [`Report`] with one PASS/FAIL item per check.

mod commands;
mod document;
mod workspace;

use std::fmt;

use thiserror::Error;

pub use commands::{run_command, run_command_with, Command, Report, ReportItem, RunOptions, Status, COCHAIN_DIM_WARNING};
pub use document::{
    AlgebraDoc, AlgebraKind, BracketDoc, CochainDoc, CommandDoc, CrossedModuleDoc, Document, EntryDoc, ExtensionDoc,
    LinkDoc, MatrixText, ModuleDoc, MorphismDoc, ScalarText, SequenceDoc,
};
pub use workspace::{
    parse_workspace, parse_workspace_with, serialize_workspace, to_document, AlgebraEntry, AlgebraObject, CochainEntry,
    CrossedEntry, CrossedObject, ExtensionEntry, ModuleEntry, ModuleObject, MorphismEntry, MorphismObject, ParseOptions,
    SequenceEntry, SequenceObject, Workspace,
};

/// Where in the document an error was found.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Location {
    pub path: String,
    pub line: Option<usize>,
    pub column: Option<usize>,
}

impl fmt::Display for Location {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(if self.path.is_empty() { "document" } else { &self.path })?;
        match (self.line, self.column) {
            (Some(l), Some(c)) => write!(f, " (line {l}, column {c})"),
            (Some(l), None) => write!(f, " (line {l})"),
            _ => Ok(()),
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CliError {
    #[error("PARSE_ERROR at {location}: {message}")]
    Parse { location: Location, message: String },
    #[error("UNRESOLVED_REFERENCE at {location}: {object} refers to undefined {kind} {reference:?}")]
    Unresolved { object: String, kind: String, reference: String, location: Location },
    #[error("VALIDATION_FAIL at {location}: {object}: {message}")]
    Validation { object: String, message: String, location: Location },
}

impl CliError {
    pub fn code(&self) -> &'static str {
        match self {
            CliError::Parse { .. } => "PARSE_ERROR",
            CliError::Unresolved { .. } => "UNRESOLVED_REFERENCE",
            CliError::Validation { .. } => "VALIDATION_FAIL",
        }
    }

    pub fn location(&self) -> &Location {
        match self {
            CliError::Parse { location, .. }
            | CliError::Unresolved { location, .. }
            | CliError::Validation { location, .. } => location,
        }
    }
}
