use std::cmp::Reverse;

use serde::Serialize;

use super::lexicon::AffixLists;

/// A prefix / infix / suffix split of a word.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Segmentation {
    pub prefix: String,
    pub infix: String,
    pub suffix: String,
}

impl Segmentation {
    pub fn infix_len(&self) -> usize {
        self.infix.chars().count()
    }

    pub fn reconstruct(&self) -> String {
        format!("{}{}{}", self.prefix, self.infix, self.suffix)
    }
}

/// Shortest infix kept by segmentation.
pub const MIN_INFIX: usize = 2;

/// Every split of `word` into a listed prefix, an infix of at least two
/// letters and a listed suffix. Longest infixes come first; ties are ordered
/// by prefix then suffix.
pub fn segment(word: &str, affixes: &AffixLists) -> Vec<Segmentation> {
    let mut out = Vec::new();
    for prefix in affixes.prefixes() {
        let Some(rest) = word.strip_prefix(prefix) else {
            continue;
        };
        for suffix in affixes.suffixes() {
            let Some(infix) = rest.strip_suffix(suffix) else {
                continue;
            };
            if infix.chars().count() >= MIN_INFIX {
                out.push(Segmentation {
                    prefix: prefix.to_string(),
                    infix: infix.to_string(),
                    suffix: suffix.to_string(),
                });
            }
        }
    }
    out.sort_by(|a, b| {
        (Reverse(a.infix_len()), &a.prefix, &a.suffix).cmp(&(Reverse(b.infix_len()), &b.prefix, &b.suffix))
    });
    out
}
