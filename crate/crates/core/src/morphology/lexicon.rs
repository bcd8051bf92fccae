//! Affix lists and the root dictionary.

use std::collections::BTreeSet;
use std::path::Path;

use crate::corpus::normalize;
use crate::error::{Error, Result};

/// Yields `(line_number, entry)` for non-blank, non-comment lines.
pub(crate) fn entries(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

/// Prefix and suffix inventories. Both always contain the empty affix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AffixLists {
    prefixes: BTreeSet<String>,
    suffixes: BTreeSet<String>,
}

impl Default for AffixLists {
    fn default() -> Self {
        AffixLists {
            prefixes: BTreeSet::from([String::new()]),
            suffixes: BTreeSet::from([String::new()]),
        }
    }
}

impl AffixLists {
    pub fn new<I, J, S, T>(prefixes: I, suffixes: J) -> Self
    where
        I: IntoIterator<Item = S>,
        J: IntoIterator<Item = T>,
        S: AsRef<str>,
        T: AsRef<str>,
    {
        let mut lists = AffixLists::default();
        lists.prefixes.extend(prefixes.into_iter().map(|p| normalize(p.as_ref())));
        lists.suffixes.extend(suffixes.into_iter().map(|s| normalize(s.as_ref())));
        lists
    }

    /// Parses the prefix and suffix files; `source` names them in errors.
    pub fn parse(prefixes: &str, suffixes: &str, sources: (&Path, &Path)) -> Result<Self> {
        let mut lists = AffixLists::default();
        parse_affixes(prefixes, sources.0, &mut lists.prefixes)?;
        parse_affixes(suffixes, sources.1, &mut lists.suffixes)?;
        Ok(lists)
    }

    pub fn prefixes(&self) -> impl Iterator<Item = &str> {
        self.prefixes.iter().map(String::as_str)
    }

    pub fn suffixes(&self) -> impl Iterator<Item = &str> {
        self.suffixes.iter().map(String::as_str)
    }

    pub fn is_prefix(&self, affix: &str) -> bool {
        self.prefixes.contains(affix)
    }

    pub fn is_suffix(&self, affix: &str) -> bool {
        self.suffixes.contains(affix)
    }
}

fn parse_affixes(text: &str, source: &Path, into: &mut BTreeSet<String>) -> Result<()> {
    for (line, entry) in entries(text) {
        if entry.chars().any(char::is_whitespace) {
            return Err(Error::format(source, line, format!("affix {entry:?} contains whitespace")));
        }
        into.insert(normalize(entry));
    }
    Ok(())
}

/// Known roots of three to five letters, stored normalized.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct RootDictionary {
    roots: BTreeSet<String>,
}

impl RootDictionary {
    pub fn new<I, S>(roots: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        let mut dict = RootDictionary::default();
        for root in roots {
            dict.insert(root.as_ref())?;
        }
        Ok(dict)
    }

    pub fn parse(text: &str, source: &Path) -> Result<Self> {
        let mut dict = RootDictionary::default();
        for (line, entry) in entries(text) {
            dict.insert(entry).map_err(|e| Error::format(source, line, e.to_string()))?;
        }
        Ok(dict)
    }

    fn insert(&mut self, root: &str) -> Result<()> {
        let root = normalize(root.trim());
        let len = root.chars().count();
        if !(3..=5).contains(&len) || root.chars().any(char::is_whitespace) {
            return Err(Error::InvalidRoot(root));
        }
        self.roots.insert(root);
        Ok(())
    }

    pub fn contains(&self, root: &str) -> bool {
        self.roots.contains(root)
    }

    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &str> {
        self.roots.iter().map(String::as_str)
    }
}
