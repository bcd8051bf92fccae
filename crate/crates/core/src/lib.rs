//! Context-based Arabic root extraction.
//!
//! Candidate roots come from affix segmentation, template matching, weak-letter
//! expansion and dictionary validation ([`morphology`]). When a word admits
//! more than one root, the one whose derived forms associate most strongly
//! with the surrounding words in a corpus co-occurrence matrix is selected
//! ([`cooccurrence`], [`disambiguation`]). [`evaluation`] scores a stemmer
//! against gold word–root pairs.

pub mod config;
pub mod cooccurrence;
pub mod corpus;
pub mod disambiguation;
pub mod error;
pub mod evaluation;
pub mod morphology;
pub mod pipeline;

pub use cooccurrence::{AssociationMeasure, ContextMatrix, MeasureKind, Scorer, Vocabulary};
pub use corpus::{NormalizedToken, StopwordList, Token};
pub use error::{Error, Result};
pub use morphology::{CandidateRoot, Pattern, Resources};
