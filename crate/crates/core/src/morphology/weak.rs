use std::fmt;

use serde::{Serialize, Serializer};

/// The weak letters alef, waw and yeh, in canonical order.
pub const WEAK_LETTERS: [char; 3] = ['ا', 'و', 'ي'];

/// Letters tried, in order, when restoring a lost weak letter.
const INSERTED: [char; 3] = ['و', 'ي', 'ا'];

/// Hamza carriers that normalization leaves in place. In a raw root they
/// stand for the dictionary's alef or for a weak letter.
pub const HAMZA_SEATS: [char; 3] = ['ء', 'ئ', 'ؤ'];

pub fn is_weak(c: char) -> bool {
    WEAK_LETTERS.contains(&c)
}

pub fn is_hamza_seat(c: char) -> bool {
    HAMZA_SEATS.contains(&c)
}

/// How a root variant differs from the raw extracted root.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum WeakVariant {
    None,
    /// The weak letter at `position` was swapped for another weak letter.
    Substitution { position: usize, from: char, to: char },
    /// A weak letter was restored at `position` of a two-letter raw root.
    Insertion { position: usize, letter: char },
    /// The final letter of a two-letter raw root was doubled.
    Doubling,
}

impl fmt::Display for WeakVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            WeakVariant::None => f.write_str("none"),
            WeakVariant::Substitution { position, from, to } => write!(f, "substitute {from}>{to} at {position}"),
            WeakVariant::Insertion { position, letter } => write!(f, "insert {letter} at {position}"),
            WeakVariant::Doubling => f.write_str("double final"),
        }
    }
}

impl Serialize for WeakVariant {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// Root variants of `raw` paired with the change that produced them.
///
/// Order: `raw` itself, single weak-letter substitutions left to right (a
/// hamza seat counts as weak and may become any of the three), then
/// for two-letter roots the weak insertions at each position and the doubled
/// final letter. Duplicates keep their first occurrence.
pub fn weak_variants(raw: &str) -> Vec<(String, WeakVariant)> {
    let letters: Vec<char> = raw.chars().collect();
    let mut out: Vec<(String, WeakVariant)> = vec![(raw.to_string(), WeakVariant::None)];
    let mut push = |candidate: Vec<char>, variant: WeakVariant| {
        let s: String = candidate.into_iter().collect();
        if !out.iter().any(|(existing, _)| *existing == s) {
            out.push((s, variant));
        }
    };

    for (position, &from) in letters.iter().enumerate() {
        if !is_weak(from) && !is_hamza_seat(from) {
            continue;
        }
        for to in WEAK_LETTERS.into_iter().filter(|&w| w != from) {
            let mut candidate = letters.clone();
            candidate[position] = to;
            push(candidate, WeakVariant::Substitution { position, from, to });
        }
    }

    if letters.len() == 2 {
        for position in 0..=2 {
            for letter in INSERTED {
                let mut candidate = letters.clone();
                candidate.insert(position, letter);
                push(candidate, WeakVariant::Insertion { position, letter });
            }
        }
        let mut doubled = letters.clone();
        doubled.push(letters[1]);
        push(doubled, WeakVariant::Doubling);
    }
    out
}

/// Root variants of `raw`, without provenance.
pub fn expand_weak(raw: &str) -> Vec<String> {
    weak_variants(raw).into_iter().map(|(s, _)| s).collect()
}
