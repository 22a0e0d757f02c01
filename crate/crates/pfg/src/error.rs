use thiserror::Error;

use crate::partition::Partition;

/// Errors surfaced by the fallible operations of this crate.
///
/// Operations that are total over their documented domain return plain values
/// and are absent here; everything that can reject an input or detect an
/// internal exactness failure goes through this enum.
#[derive(Debug, Error)]
pub enum Error {
    /// An operation that needs at least one part was handed the empty shape.
    #[error("{op}: the empty partition is not a valid input")]
    EmptyPartition { op: &'static str },

    /// A character evaluation was requested for a class of the wrong size.
    #[error("shape [{shape}] has {shape_size} boxes but class [{class}] has {class_size}")]
    SizeMismatch {
        shape: Partition,
        class: Partition,
        shape_size: usize,
        class_size: usize,
    },

    /// Parameters outside the supported domain (bad k, graph order too large,
    /// a hypothesis of the requested identity not met, malformed input text).
    #[error("domain: {0}")]
    Domain(String),

    /// An exactness guarantee failed internally.  The spectra of these graphs
    /// are integral, so an inexact division indicates a bug, never bad input.
    #[error("internal consistency: {0}")]
    InternalConsistency(String),

    /// An assembled spectrum violated one of its defining aggregate identities.
    #[error("table invariant: {0}")]
    TableInvariant(String),
}

pub type Result<T> = std::result::Result<T, Error>;
