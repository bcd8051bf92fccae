//! Corpus ingestion: tokenization, orthographic normalization and stopword
//! filtering.
//!
//! The output of [`prepare`] is the filtered token stream that both matrix
//! construction and stemming consume. Filtering renumbers tokens, so two words
//! are adjacent for windowing purposes when only stopwords, digits,
//! punctuation or foreign tokens separate them in the raw text.

use std::collections::BTreeSet;
use std::fmt;
use std::fs;
use std::path::{Path, PathBuf};

use crate::error::{Error, Result};

const TATWEEL: char = '\u{0640}';
const ALEF: char = '\u{0627}';
const YEH: char = '\u{064A}';
const ALEF_MAKSURA: char = '\u{0649}';

static BUNDLED_STOPWORDS: &str = include_str!("../resources/stopwords.txt");

/// Harakat, tanween, shadda and sukun.
pub fn is_diacritic(c: char) -> bool {
    ('\u{064B}'..='\u{0652}').contains(&c)
}

/// A base Arabic letter (hamza forms included, tatweel excluded).
pub fn is_arabic_letter(c: char) -> bool {
    matches!(c, '\u{0621}'..='\u{063A}' | '\u{0641}'..='\u{064A}' | '\u{0671}'..='\u{06D3}')
}

fn is_arabic_mark(c: char) -> bool {
    matches!(
        c,
        '\u{0610}'..='\u{061A}'
            | '\u{064B}'..='\u{065F}'
            | '\u{0670}'
            | '\u{06D6}'..='\u{06DC}'
            | '\u{06DF}'..='\u{06E4}'
            | '\u{06E7}'..='\u{06E8}'
            | '\u{06EA}'..='\u{06ED}'
    )
}

fn is_word_char(c: char) -> bool {
    c.is_alphanumeric() || is_arabic_mark(c) || ('\u{0300}'..='\u{036F}').contains(&c)
}

/// A document as read from disk.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RawDocument {
    pub doc_id: String,
    pub text: String,
}

/// A surface token and its 0-based position in the document's token sequence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Token {
    pub surface: String,
    pub position: usize,
}

/// Splits text into word tokens and single-character punctuation tokens.
///
/// Words are maximal runs of letters, digits and combining marks. Every other
/// non-whitespace character becomes a token of its own.
pub fn tokenize(text: &str) -> Vec<Token> {
    let mut tokens = Vec::new();
    let mut current = String::new();

    let push = |surface: &mut String, tokens: &mut Vec<Token>| {
        if !surface.is_empty() {
            let position = tokens.len();
            tokens.push(Token {
                surface: std::mem::take(surface),
                position,
            });
        }
    };

    for c in text.chars() {
        if c.is_whitespace() {
            push(&mut current, &mut tokens);
        } else if is_word_char(c) {
            current.push(c);
        } else {
            push(&mut current, &mut tokens);
            let mut punct = c.to_string();
            push(&mut punct, &mut tokens);
        }
    }
    push(&mut current, &mut tokens);
    tokens
}

/// Applies the orthographic normalization rules to a string.
///
/// Removes diacritics and tatweel, folds hamza-carrying alefs to bare alef and
/// alef maksura to yeh. Teh marbuta is kept.
pub fn normalize(text: &str) -> String {
    text.chars()
        .filter(|&c| !is_diacritic(c) && c != TATWEEL)
        .map(|c| match c {
            '\u{0623}' | '\u{0625}' | '\u{0622}' => ALEF,
            ALEF_MAKSURA => YEH,
            other => other,
        })
        .collect()
}

/// A non-empty, normalized word.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct NormalizedToken(String);

impl NormalizedToken {
    /// Normalizes `text`, returning `None` when nothing survives.
    pub fn new(text: &str) -> Option<Self> {
        let normalized = normalize(text);
        if normalized.is_empty() {
            None
        } else {
            Some(NormalizedToken(normalized))
        }
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }

    pub fn into_string(self) -> String {
        self.0
    }

    /// Every character is an Arabic letter.
    pub fn is_arabic_word(&self) -> bool {
        self.0.chars().all(|c| is_arabic_letter(c) || is_arabic_mark(c))
            && self.0.chars().any(is_arabic_letter)
    }

    pub fn is_numeric(&self) -> bool {
        self.0.chars().all(|c| c.is_numeric())
    }

    pub fn is_punctuation(&self) -> bool {
        self.0.chars().all(|c| !is_word_char(c))
    }
}

impl AsRef<str> for NormalizedToken {
    fn as_ref(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for NormalizedToken {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// Normalizes a token's surface form.
pub fn normalize_token(token: &Token) -> Option<NormalizedToken> {
    NormalizedToken::new(&token.surface)
}

/// A set of normalized function words excluded from counting and stemming.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct StopwordList {
    entries: BTreeSet<String>,
}

impl StopwordList {
    pub fn new<I, S>(entries: I) -> Self
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        let entries = entries
            .into_iter()
            .map(|e| normalize(e.as_ref().trim()))
            .filter(|e| !e.is_empty())
            .collect();
        StopwordList { entries }
    }

    /// Parses the one-entry-per-line format; `#` starts a comment line.
    pub fn parse(text: &str) -> Self {
        Self::new(
            text.lines()
                .map(str::trim)
                .filter(|l| !l.is_empty() && !l.starts_with('#')),
        )
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
        Ok(Self::parse(&text))
    }

    /// The curated list shipped with the crate.
    pub fn bundled() -> Self {
        Self::parse(BUNDLED_STOPWORDS)
    }

    pub fn contains(&self, word: &str) -> bool {
        self.entries.contains(word)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &str> {
        self.entries.iter().map(String::as_str)
    }
}

/// Why a token does not take part in counting or stemming.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Exclusion {
    Stopword,
    Punctuation,
    Numeric,
    NonArabic,
}

impl Exclusion {
    pub fn as_str(self) -> &'static str {
        match self {
            Exclusion::Stopword => "stopword",
            Exclusion::Punctuation => "punctuation",
            Exclusion::Numeric => "numeric",
            Exclusion::NonArabic => "non-arabic",
        }
    }
}

/// Classifies a normalized token; `None` means the token is kept.
pub fn exclusion(token: &NormalizedToken, stopwords: &StopwordList) -> Option<Exclusion> {
    if token.is_punctuation() {
        Some(Exclusion::Punctuation)
    } else if token.is_numeric() {
        Some(Exclusion::Numeric)
    } else if !token.is_arabic_word() {
        Some(Exclusion::NonArabic)
    } else if stopwords.contains(token.as_str()) {
        Some(Exclusion::Stopword)
    } else {
        None
    }
}

/// Drops stopwords, punctuation, digit runs and non-Arabic tokens.
pub fn filter_tokens(tokens: Vec<NormalizedToken>, stopwords: &StopwordList) -> Vec<NormalizedToken> {
    tokens
        .into_iter()
        .filter(|t| exclusion(t, stopwords).is_none())
        .collect()
}

/// Tokenizes, normalizes and filters raw text in one pass.
pub fn prepare(text: &str, stopwords: &StopwordList) -> Vec<NormalizedToken> {
    let normalized = tokenize(text).iter().filter_map(normalize_token).collect();
    filter_tokens(normalized, stopwords)
}

/// How a corpus path is laid out on disk.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CorpusFormat {
    /// A directory with one document per file.
    Directory,
    /// A single file with one document per line.
    Lines,
}

impl CorpusFormat {
    pub fn detect(path: &Path) -> Self {
        if path.is_dir() {
            CorpusFormat::Directory
        } else {
            CorpusFormat::Lines
        }
    }
}

/// Reads a corpus. Directory entries are read in file-name order; hidden
/// files and subdirectories are skipped.
pub fn load_corpus(path: &Path, format: CorpusFormat) -> Result<Vec<RawDocument>> {
    match format {
        CorpusFormat::Directory => {
            let entries = fs::read_dir(path).map_err(|e| Error::io(path, e))?;
            let mut files: Vec<PathBuf> = Vec::new();
            for entry in entries {
                let entry = entry.map_err(|e| Error::io(path, e))?;
                let file_path = entry.path();
                let hidden = entry.file_name().to_string_lossy().starts_with('.');
                if file_path.is_file() && !hidden {
                    files.push(file_path);
                }
            }
            files.sort();
            files
                .into_iter()
                .map(|file| {
                    let text = fs::read_to_string(&file).map_err(|e| Error::io(&file, e))?;
                    let doc_id = file
                        .file_name()
                        .map(|n| n.to_string_lossy().into_owned())
                        .unwrap_or_default();
                    Ok(RawDocument { doc_id, text })
                })
                .collect()
        }
        CorpusFormat::Lines => {
            let text = fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
            Ok(text
                .lines()
                .enumerate()
                .filter(|(_, line)| !line.trim().is_empty())
                .map(|(i, line)| RawDocument {
                    doc_id: format!("line-{}", i + 1),
                    text: line.to_string(),
                })
                .collect())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn surfaces(tokens: &[Token]) -> Vec<(&str, usize)> {
        tokens.iter().map(|t| (t.surface.as_str(), t.position)).collect()
    }

    fn toks(words: &[&str]) -> Vec<NormalizedToken> {
        words.iter().map(|w| NormalizedToken::new(w).unwrap()).collect()
    }

    #[test]
    fn tokenize_empty() {
        assert!(tokenize("").is_empty());
        assert!(tokenize("  \n\t").is_empty());
    }

    #[test]
    fn tokenize_punctuation_is_separate() {
        let tokens = tokenize("قال د .");
        assert_eq!(surfaces(&tokens), vec![("قال", 0), ("د", 1), (".", 2)]);
    }

    #[test]
    fn tokenize_keeps_digit_runs() {
        let tokens = tokenize("افتتاح الدورة 23");
        assert_eq!(surfaces(&tokens), vec![("افتتاح", 0), ("الدورة", 1), ("23", 2)]);
    }

    #[test]
    fn tokenize_splits_attached_punctuation() {
        let tokens = tokenize("الأويرا، وقال:");
        assert_eq!(
            surfaces(&tokens),
            vec![("الأويرا", 0), ("،", 1), ("وقال", 2), (":", 3)]
        );
    }

    #[test]
    fn tokenize_keeps_diacritics_inside_words() {
        let tokens = tokenize("كِتَاب جديد");
        assert_eq!(tokens.len(), 2);
        assert_eq!(tokens[0].surface, "كِتَاب");
    }

    #[test]
    fn normalize_rules() {
        assert_eq!(normalize("كِتَاب"), "كتاب");
        assert_eq!(normalize("إن"), "ان");
        assert_eq!(normalize("أحمد"), "احمد");
        assert_eq!(normalize("آمال"), "امال");
        assert_eq!(normalize("مستشفى"), "مستشفي");
        assert_eq!(normalize("كتـــاب"), "كتاب");
        assert_eq!(normalize("مدرسة"), "مدرسة");
        assert_eq!(normalize("كتاب"), "كتاب");
    }

    #[test]
    fn all_diacritic_token_is_dropped() {
        assert_eq!(NormalizedToken::new("\u{064E}\u{0651}"), None);
    }

    #[test]
    fn filter_removes_stopwords() {
        let stop = StopwordList::new(["إن"]);
        let out = filter_tokens(toks(&["قال", "إن", "الدورة"]), &stop);
        assert_eq!(out, toks(&["قال", "الدورة"]));
    }

    #[test]
    fn filter_drops_punctuation_and_digits() {
        let stop = StopwordList::default();
        assert!(filter_tokens(toks(&["."]), &stop).is_empty());
        let out = filter_tokens(toks(&["الجمعة", "24", "توفير"]), &stop);
        assert_eq!(out, toks(&["الجمعة", "توفير"]));
        let out = filter_tokens(toks(&["ABC", "٢٤", "كتب"]), &stop);
        assert_eq!(out, toks(&["كتب"]));
    }

    #[test]
    fn stopword_file_parsing() {
        let list = StopwordList::parse("# particles\nإن\n\n  في  \n#x\nعلى\n");
        assert_eq!(list.len(), 3);
        assert!(list.contains("ان"));
        assert!(list.contains("في"));
        assert!(!list.contains("#x"));
    }

    #[test]
    fn bundled_stopwords_are_normalization_stable() {
        let list = StopwordList::bundled();
        assert!(list.len() >= 100);
        for entry in list.iter() {
            assert_eq!(normalize(entry), entry);
        }
        assert!(list.contains("ان"));
        assert!(list.contains("ال"));
    }

    #[test]
    fn prepare_renumbers_through_filters() {
        let stop = StopwordList::bundled();
        let out = prepare("وقال د . إن افتتاح الدورة 23", &stop);
        let words: Vec<&str> = out.iter().map(|t| t.as_str()).collect();
        assert_eq!(words, vec!["وقال", "د", "افتتاح", "الدورة"]);
    }

    #[test]
    fn corpus_directory_is_read_in_name_order() {
        let dir = tempfile::tempdir().unwrap();
        fs::write(dir.path().join("b.txt"), "ثاني").unwrap();
        fs::write(dir.path().join("a.txt"), "اول").unwrap();
        fs::write(dir.path().join(".hidden"), "x").unwrap();
        let docs = load_corpus(dir.path(), CorpusFormat::Directory).unwrap();
        let ids: Vec<&str> = docs.iter().map(|d| d.doc_id.as_str()).collect();
        assert_eq!(ids, vec!["a.txt", "b.txt"]);
    }

    #[test]
    fn corpus_lines_skip_blank() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("c.txt");
        fs::write(&path, "اول\n\nثاني\n").unwrap();
        assert_eq!(CorpusFormat::detect(&path), CorpusFormat::Lines);
        let docs = load_corpus(&path, CorpusFormat::Lines).unwrap();
        assert_eq!(docs.len(), 2);
        assert_eq!(docs[1].doc_id, "line-3");
    }

    #[test]
    fn missing_corpus_is_an_io_error() {
        let err = load_corpus(Path::new("/nonexistent/corpus"), CorpusFormat::Directory);
        assert!(matches!(err, Err(Error::Io { .. })));
    }

    proptest! {
        #[test]
        fn normalize_is_idempotent(s in "[\\u{0600}-\\u{06FF} a-z0-9.]{0,40}") {
            let once = normalize(&s);
            prop_assert_eq!(normalize(&once), once);
        }

        #[test]
        fn tokens_follow_source_order(s in "[\\u{0621}-\\u{064A}\\u{064B}-\\u{0652} .،0-9]{0,60}") {
            let tokens = tokenize(&s);
            let mut cursor = 0;
            for (i, t) in tokens.iter().enumerate() {
                prop_assert_eq!(t.position, i);
                prop_assert!(!t.surface.chars().any(char::is_whitespace));
                let found = s[cursor..].find(&t.surface);
                prop_assert!(found.is_some());
                cursor += found.unwrap() + t.surface.len();
            }
        }

        #[test]
        fn filter_output_is_subsequence(words in proptest::collection::vec("[\\u{0627}-\\u{064A}0-9.]{1,5}", 0..30)) {
            let stop = StopwordList::new(["في", "من"]);
            let input: Vec<NormalizedToken> = words.iter().filter_map(|w| NormalizedToken::new(w)).collect();
            let output = filter_tokens(input.clone(), &stop);
            let mut it = input.iter();
            for kept in &output {
                prop_assert!(it.any(|x| x == kept));
            }
        }
    }
}
