use std::fmt;

use crate::corpus::{is_arabic_letter, normalize};
use crate::error::{Error, Result};

/// One position of a template: a fixed letter or a numbered root slot.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Cell {
    Literal(char),
    Slot(u8),
}

/// A derivational template in digit-slot notation.
///
/// `1ا23` is the active-participle template: slot 1, a literal alef, then
/// slots 2 and 3. Slots first appear in increasing order; only slot 3 may
/// repeat.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Pattern {
    cells: Vec<Cell>,
    arity: usize,
}

impl Pattern {
    /// Parses the digit-slot encoding. Literal letters are normalized.
    pub fn parse(text: &str) -> Result<Self> {
        let invalid = |reason: &str| Error::InvalidPattern {
            pattern: text.to_string(),
            reason: reason.to_string(),
        };
        let normalized = normalize(text.trim());
        if normalized.is_empty() {
            return Err(invalid("empty pattern"));
        }

        let mut cells = Vec::new();
        let mut seen = [0usize; 6];
        let mut next_slot = 1u8;
        for c in normalized.chars() {
            match c {
                '1'..='5' => {
                    let slot = c as u8 - b'0';
                    if seen[slot as usize] == 0 {
                        if slot != next_slot {
                            return Err(invalid("slots out of first-occurrence order"));
                        }
                        next_slot += 1;
                    } else if slot != 3 {
                        return Err(invalid("only slot 3 may repeat"));
                    }
                    seen[slot as usize] += 1;
                    cells.push(Cell::Slot(slot));
                }
                c if is_arabic_letter(c) => cells.push(Cell::Literal(c)),
                _ => return Err(invalid("cells must be Arabic letters or slots 1-5")),
            }
        }

        let arity = (next_slot - 1) as usize;
        if !(3..=5).contains(&arity) {
            return Err(invalid("root arity must be 3, 4 or 5"));
        }
        Ok(Pattern { cells, arity })
    }

    /// The implicit two-slot template used for infixes that lost a weak letter.
    pub(crate) fn biliteral() -> Self {
        Pattern {
            cells: vec![Cell::Slot(1), Cell::Slot(2)],
            arity: 2,
        }
    }

    pub fn cells(&self) -> &[Cell] {
        &self.cells
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    /// Number of distinct root slots.
    pub fn root_arity(&self) -> usize {
        self.arity
    }

    /// Pours a root into the template. `None` when the root length differs
    /// from the arity.
    pub fn instantiate(&self, root: &str) -> Option<String> {
        let letters: Vec<char> = root.chars().collect();
        if letters.len() != self.arity {
            return None;
        }
        Some(
            self.cells
                .iter()
                .map(|cell| match *cell {
                    Cell::Literal(c) => c,
                    Cell::Slot(s) => letters[s as usize - 1],
                })
                .collect(),
        )
    }

    /// Aligns an infix with the template and collects the slot letters.
    pub fn extract(&self, infix: &str) -> Option<String> {
        let letters: Vec<char> = infix.chars().collect();
        if letters.len() != self.cells.len() {
            return None;
        }
        let mut root: [Option<char>; 5] = [None; 5];
        for (cell, &letter) in self.cells.iter().zip(&letters) {
            match *cell {
                Cell::Literal(c) if c != letter => return None,
                Cell::Literal(_) => {}
                Cell::Slot(s) => {
                    let slot = &mut root[s as usize - 1];
                    match *slot {
                        Some(prev) if prev != letter => return None,
                        _ => *slot = Some(letter),
                    }
                }
            }
        }
        Some(root[..self.arity].iter().map(|c| c.expect("every slot filled")).collect())
    }
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for cell in &self.cells {
            match *cell {
                Cell::Literal(c) => write!(f, "{c}")?,
                Cell::Slot(s) => write!(f, "{s}")?,
            }
        }
        Ok(())
    }
}

/// Extracts the raw root of `infix` under `pattern`, if they align.
pub fn match_pattern(infix: &str, pattern: &Pattern) -> Option<String> {
    pattern.extract(infix)
}
