//! Candidate-root generation.
//!
//! A word is split into every admissible prefix / infix / suffix triple, each
//! infix is aligned with the templates of the same length, weak letters in the
//! extracted root are varied, and whatever survives the root dictionary is a
//! candidate. Infixes of exactly two letters are also read as a bare root that
//! lost a weak or doubled letter.

mod lexicon;
mod pattern;
mod segment;
mod weak;

use std::collections::HashSet;
use std::fs;
use std::path::Path;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

pub use lexicon::{AffixLists, RootDictionary};
pub use pattern::{match_pattern, Cell, Pattern};
pub use segment::{segment, Segmentation, MIN_INFIX};
pub use weak::{expand_weak, is_hamza_seat, is_weak, weak_variants, WeakVariant, HAMZA_SEATS, WEAK_LETTERS};

pub const PREFIX_FILE: &str = "prefixes.txt";
pub const SUFFIX_FILE: &str = "suffixes.txt";
pub const PATTERN_FILE: &str = "patterns.txt";
pub const ROOT_FILE: &str = "roots.txt";

static BUNDLED_PREFIXES: &str = include_str!("../../resources/prefixes.txt");
static BUNDLED_SUFFIXES: &str = include_str!("../../resources/suffixes.txt");
static BUNDLED_PATTERNS: &str = include_str!("../../resources/patterns.txt");
static BUNDLED_ROOTS: &str = include_str!("../../resources/roots.txt");

impl Serialize for Pattern {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// Parses a pattern file, keeping file order and dropping repeats.
pub fn parse_patterns(text: &str, source: &Path) -> Result<Vec<Pattern>> {
    let mut seen = HashSet::new();
    let mut patterns = Vec::new();
    for (line, entry) in lexicon::entries(text) {
        let pattern = Pattern::parse(entry).map_err(|e| Error::format(source, line, e.to_string()))?;
        if seen.insert(pattern.clone()) {
            patterns.push(pattern);
        }
    }
    Ok(patterns)
}

/// The linguistic resources used for candidate generation.
#[derive(Debug, Clone)]
pub struct Resources {
    pub affixes: AffixLists,
    pub patterns: Vec<Pattern>,
    pub dictionary: RootDictionary,
}

impl Resources {
    /// Reads the four resource files from `dir`.
    pub fn load(dir: &Path) -> Result<Self> {
        let read = |name: &str| {
            let path = dir.join(name);
            fs::read_to_string(&path).map_err(|e| Error::io(&path, e)).map(|text| (text, path))
        };
        let (prefixes, prefix_path) = read(PREFIX_FILE)?;
        let (suffixes, suffix_path) = read(SUFFIX_FILE)?;
        let (patterns, pattern_path) = read(PATTERN_FILE)?;
        let (roots, root_path) = read(ROOT_FILE)?;
        Ok(Resources {
            affixes: AffixLists::parse(&prefixes, &suffixes, (&prefix_path, &suffix_path))?,
            patterns: parse_patterns(&patterns, &pattern_path)?,
            dictionary: RootDictionary::parse(&roots, &root_path)?,
        })
    }

    /// The lists shipped with the crate.
    pub fn bundled() -> Self {
        let name = |f: &str| Path::new("<bundled>").join(f);
        Resources {
            affixes: AffixLists::parse(BUNDLED_PREFIXES, BUNDLED_SUFFIXES, (&name(PREFIX_FILE), &name(SUFFIX_FILE)))
                .expect("bundled affixes parse"),
            patterns: parse_patterns(BUNDLED_PATTERNS, &name(PATTERN_FILE)).expect("bundled patterns parse"),
            dictionary: RootDictionary::parse(BUNDLED_ROOTS, &name(ROOT_FILE)).expect("bundled roots parse"),
        }
    }

    /// Patterns whose root arity equals `arity`, in file order.
    pub fn patterns_of_arity(&self, arity: usize) -> impl Iterator<Item = &Pattern> {
        self.patterns.iter().filter(move |p| p.root_arity() == arity)
    }
}

/// Reads the resource directory.
pub fn load_resources(dir: &Path) -> Result<Resources> {
    Resources::load(dir)
}

/// A dictionary-validated root and how it was reached.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CandidateRoot {
    pub root: String,
    #[serde(flatten)]
    pub segmentation: Segmentation,
    pub pattern: Pattern,
    /// Slot letters as read off the infix, before weak-letter variation.
    pub raw_root: String,
    pub weak_variant: WeakVariant,
}

/// All candidate roots of a normalized word, deduplicated by root string.
///
/// Order follows segmentation order, then pattern order, then weak-variant
/// order; the first provenance of each root is kept.
pub fn generate_candidates(word: &str, resources: &Resources) -> Vec<CandidateRoot> {
    let biliteral = Pattern::biliteral();
    let mut seen: HashSet<String> = HashSet::new();
    let mut out = Vec::new();

    for seg in segment(word, &resources.affixes) {
        let infix_len = seg.infix_len();
        let templates = resources
            .patterns
            .iter()
            .filter(|p| p.len() == infix_len)
            .chain((infix_len == 2).then_some(&biliteral));
        for pattern in templates {
            let Some(raw) = pattern.extract(&seg.infix) else {
                continue;
            };
            for (root, weak_variant) in weak_variants(&raw) {
                if resources.dictionary.contains(&root) && seen.insert(root.clone()) {
                    out.push(CandidateRoot {
                        root,
                        segmentation: seg.clone(),
                        pattern: pattern.clone(),
                        raw_root: raw.clone(),
                        weak_variant,
                    });
                }
            }
        }
    }
    out
}
