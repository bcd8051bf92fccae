//! Contextual root selection.
//!
//! Each candidate root is expanded into the surface words its templates
//! derive, the derived words attested in the matrix are scored against the
//! context words, and the root with the highest mean association wins.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use crate::cooccurrence::{AssociationMeasure, ContextMatrix, Scorer, Vocabulary};
use crate::corpus::{self, NormalizedToken, StopwordList, Token};
use crate::error::{Error, Result};
use crate::morphology::{generate_candidates, CandidateRoot, Pattern, Resources, Segmentation, WeakVariant};

/// Which context words take part in scoring.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub enum ContextMode {
    /// Only the nearest preceding content word.
    #[default]
    PreviousWord,
    /// Every content word within the matrix window on both sides.
    FullWindow,
}

impl ContextMode {
    pub fn as_str(self) -> &'static str {
        match self {
            ContextMode::PreviousWord => "previous",
            ContextMode::FullWindow => "window",
        }
    }
}

impl fmt::Display for ContextMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for ContextMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "previous" | "previous-word" => Ok(ContextMode::PreviousWord),
            "window" | "full-window" => Ok(ContextMode::FullWindow),
            other => Err(Error::Config(format!("unknown context mode {other:?}"))),
        }
    }
}

/// Normalized, stopword-free words around the target, nearest last in
/// `preceding` and nearest first in `following`.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct StemContext {
    pub preceding: Vec<String>,
    pub following: Vec<String>,
}

impl StemContext {
    pub fn new<I, J, S, T>(preceding: I, following: J) -> Self
    where
        I: IntoIterator<Item = S>,
        J: IntoIterator<Item = T>,
        S: Into<String>,
        T: Into<String>,
    {
        StemContext {
            preceding: preceding.into_iter().map(Into::into).collect(),
            following: following.into_iter().map(Into::into).collect(),
        }
    }

    /// The window around position `index` of a filtered word sequence.
    pub fn around<W: AsRef<str>>(words: &[W], index: usize, window_n: usize) -> Self {
        let reach = window_n.saturating_sub(1);
        let start = index.saturating_sub(reach);
        let end = (index + 1 + reach).min(words.len());
        StemContext::new(
            words[start..index].iter().map(|w| w.as_ref().to_string()),
            words[(index + 1).min(end)..end].iter().map(|w| w.as_ref().to_string()),
        )
    }

    /// Normalizes and filters raw surrounding tokens, keeping at most
    /// `window_n - 1` words on each side.
    pub fn from_raw<S: AsRef<str>>(
        preceding: &[S],
        following: &[S],
        stopwords: &StopwordList,
        window_n: usize,
    ) -> Self {
        let keep = window_n.saturating_sub(1);
        let clean = |raw: &[S]| -> Vec<String> {
            let normalized = raw.iter().filter_map(|t| NormalizedToken::new(t.as_ref())).collect();
            corpus::filter_tokens(normalized, stopwords)
                .into_iter()
                .map(NormalizedToken::into_string)
                .collect()
        };
        let mut before = clean(preceding);
        let before = before.split_off(before.len().saturating_sub(keep));
        let mut after = clean(following);
        after.truncate(keep);
        StemContext {
            preceding: before,
            following: after,
        }
    }

    /// The words scored against under `mode`.
    pub fn scoring_words(&self, mode: ContextMode) -> Vec<&str> {
        match mode {
            ContextMode::PreviousWord => self.preceding.last().map(String::as_str).into_iter().collect(),
            ContextMode::FullWindow => self
                .preceding
                .iter()
                .chain(&self.following)
                .map(String::as_str)
                .collect(),
        }
    }
}

/// Surface words derived from a root that the matrix knows about.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DerivedWords {
    pub words: BTreeSet<String>,
    /// How many of `words` are in the vocabulary; zero means `words` is the
    /// bare-root fallback.
    pub in_vocab: usize,
}

/// Instantiates every template of the root's arity, adds the bare root, and
/// keeps the attested forms. Falls back to the bare root alone when nothing
/// is attested.
pub fn derive_words(root: &str, patterns: &[Pattern], vocab: &Vocabulary) -> DerivedWords {
    let arity = root.chars().count();
    let words: BTreeSet<String> = patterns
        .iter()
        .filter(|p| p.root_arity() == arity)
        .filter_map(|p| p.instantiate(root))
        .chain(std::iter::once(root.to_string()))
        .filter(|w| vocab.contains(w))
        .collect();
    if words.is_empty() {
        DerivedWords {
            words: BTreeSet::from([root.to_string()]),
            in_vocab: 0,
        }
    } else {
        let in_vocab = words.len();
        DerivedWords { words, in_vocab }
    }
}

/// A root with its contextual score and tie-breaking statistics.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ScoredRoot {
    pub root: String,
    pub score: f64,
    pub derived_in_vocab: usize,
    /// Target marginal of the bare root string.
    pub frequency: u64,
}

impl ScoredRoot {
    /// Ranking used for selection: higher score, more attested derivations,
    /// more frequent bare root, then the lexicographically smaller root.
    fn rank(&self, other: &Self) -> Ordering {
        self.score
            .total_cmp(&other.score)
            .then(self.derived_in_vocab.cmp(&other.derived_in_vocab))
            .then(self.frequency.cmp(&other.frequency))
            .then_with(|| other.root.cmp(&self.root))
    }
}

/// Mean association over every (derived word, context word) pair. Unseen
/// pairs contribute zero under every measure.
fn mean_association(scorer: &Scorer<'_>, derived: &BTreeSet<String>, context: &[&str]) -> f64 {
    if context.is_empty() || derived.is_empty() {
        return 0.0;
    }
    let mut sum = 0.0;
    for d in derived {
        for c in context {
            let s = scorer.score_words(d, c);
            if s.is_finite() {
                sum += s;
            }
        }
    }
    sum / (derived.len() * context.len()) as f64
}

/// Selection outcome: the winner and the full score table in candidate order.
#[derive(Debug, Clone, PartialEq)]
pub struct Selection {
    pub chosen: usize,
    pub table: Vec<ScoredRoot>,
}

impl Selection {
    pub fn root(&self) -> &str {
        &self.table[self.chosen].root
    }
}

/// Why a token produced no root.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Fallback {
    Empty,
    Stopword,
    Punctuation,
    Numeric,
    NonArabic,
    NoCandidates,
}

impl From<corpus::Exclusion> for Fallback {
    fn from(e: corpus::Exclusion) -> Self {
        match e {
            corpus::Exclusion::Stopword => Fallback::Stopword,
            corpus::Exclusion::Punctuation => Fallback::Punctuation,
            corpus::Exclusion::Numeric => Fallback::Numeric,
            corpus::Exclusion::NonArabic => Fallback::NonArabic,
        }
    }
}

/// One row of the per-word score table.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CandidateReport {
    pub root: String,
    pub score: f64,
    pub derived_in_vocab: usize,
    pub frequency: u64,
    #[serde(flatten)]
    pub segmentation: Segmentation,
    pub pattern: Pattern,
    pub raw_root: String,
    pub weak_variant: WeakVariant,
}

impl CandidateReport {
    fn new(scored: ScoredRoot, provenance: CandidateRoot) -> Self {
        CandidateReport {
            root: scored.root,
            score: scored.score,
            derived_in_vocab: scored.derived_in_vocab,
            frequency: scored.frequency,
            segmentation: provenance.segmentation,
            pattern: provenance.pattern,
            raw_root: provenance.raw_root,
            weak_variant: provenance.weak_variant,
        }
    }
}

/// Diagnostic record for one stemmed token.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct StemRecord {
    pub position: usize,
    pub input: String,
    pub normalized: String,
    pub root: Option<String>,
    pub fallback: Option<Fallback>,
    pub context: Vec<String>,
    pub candidates: Vec<CandidateReport>,
}

/// Root selection against one matrix, measure and context policy.
#[derive(Debug, Clone)]
pub struct Disambiguator<'a> {
    resources: &'a Resources,
    scorer: Scorer<'a>,
    mode: ContextMode,
}

impl<'a> Disambiguator<'a> {
    pub fn new(
        resources: &'a Resources,
        matrix: &'a ContextMatrix,
        measure: AssociationMeasure,
        mode: ContextMode,
    ) -> Result<Self> {
        Ok(Disambiguator {
            resources,
            scorer: Scorer::new(matrix, measure)?,
            mode,
        })
    }

    pub fn matrix(&self) -> &'a ContextMatrix {
        self.scorer.matrix()
    }

    pub fn resources(&self) -> &'a Resources {
        self.resources
    }

    pub fn mode(&self) -> ContextMode {
        self.mode
    }

    pub fn derive_words(&self, root: &str) -> DerivedWords {
        derive_words(root, &self.resources.patterns, self.matrix().vocabulary())
    }

    pub fn score_root(&self, root: &str, context: &StemContext) -> ScoredRoot {
        let derived = self.derive_words(root);
        let score = mean_association(&self.scorer, &derived.words, &context.scoring_words(self.mode));
        ScoredRoot {
            root: root.to_string(),
            score,
            derived_in_vocab: derived.in_vocab,
            frequency: self.matrix().frequency(root),
        }
    }

    /// Scores every candidate and returns the best under [`ScoredRoot`]'s
    /// ranking.
    pub fn select_root(&self, candidates: &[CandidateRoot], context: &StemContext) -> Result<Selection> {
        if candidates.is_empty() {
            return Err(Error::NoCandidates);
        }
        let table: Vec<ScoredRoot> = candidates.iter().map(|c| self.score_root(&c.root, context)).collect();
        let chosen = (0..table.len())
            .reduce(|best, i| if table[i].rank(&table[best]).is_gt() { i } else { best })
            .expect("non-empty table");
        Ok(Selection { chosen, table })
    }

    /// Stems an already-normalized word with a prepared context.
    pub fn stem_normalized(&self, position: usize, input: &str, word: &str, context: &StemContext) -> StemRecord {
        let candidates = generate_candidates(word, self.resources);
        let mut record = StemRecord {
            position,
            input: input.to_string(),
            normalized: word.to_string(),
            root: None,
            fallback: None,
            context: context.scoring_words(self.mode).into_iter().map(String::from).collect(),
            candidates: Vec::new(),
        };
        match self.select_root(&candidates, context) {
            Ok(selection) => {
                record.root = Some(selection.root().to_string());
                record.candidates = selection
                    .table
                    .into_iter()
                    .zip(candidates)
                    .map(|(scored, provenance)| CandidateReport::new(scored, provenance))
                    .collect();
            }
            Err(_) => record.fallback = Some(Fallback::NoCandidates),
        }
        record
    }

    /// Stems a raw token given raw neighbouring tokens.
    pub fn stem<S: AsRef<str>>(
        &self,
        word: &str,
        preceding: &[S],
        following: &[S],
        stopwords: &StopwordList,
    ) -> StemRecord {
        let context = StemContext::from_raw(preceding, following, stopwords, self.matrix().window_n());
        match NormalizedToken::new(word) {
            None => skipped(0, word, String::new(), Fallback::Empty),
            Some(token) => match corpus::exclusion(&token, stopwords) {
                Some(reason) => skipped(0, word, token.into_string(), reason.into()),
                None => self.stem_normalized(0, word, token.as_str(), &context),
            },
        }
    }

    /// Stems every token of a document. Context windows are taken over the
    /// filtered token sequence; excluded tokens get a record with a fallback
    /// reason. Output order matches input order.
    pub fn stem_tokens(&self, tokens: &[Token], stopwords: &StopwordList) -> Vec<StemRecord> {
        let normalized: Vec<Option<NormalizedToken>> = tokens.iter().map(corpus::normalize_token).collect();
        let mut kept: Vec<&str> = Vec::new();
        let mut slot: Vec<Option<usize>> = Vec::with_capacity(tokens.len());
        for n in &normalized {
            match n {
                Some(t) if corpus::exclusion(t, stopwords).is_none() => {
                    slot.push(Some(kept.len()));
                    kept.push(t.as_str());
                }
                _ => slot.push(None),
            }
        }
        let window_n = self.matrix().window_n();
        tokens
            .par_iter()
            .zip(normalized.par_iter())
            .zip(slot.par_iter())
            .map(|((token, norm), slot)| match (norm, slot) {
                (None, _) => skipped(token.position, &token.surface, String::new(), Fallback::Empty),
                (Some(n), None) => {
                    let reason = corpus::exclusion(n, stopwords).expect("excluded token");
                    skipped(token.position, &token.surface, n.to_string(), reason.into())
                }
                (Some(n), Some(i)) => {
                    let context = StemContext::around(&kept, *i, window_n);
                    self.stem_normalized(token.position, &token.surface, n.as_str(), &context)
                }
            })
            .collect()
    }
}

fn skipped(position: usize, input: &str, normalized: String, reason: Fallback) -> StemRecord {
    StemRecord {
        position,
        input: input.to_string(),
        normalized,
        root: None,
        fallback: Some(reason),
        context: Vec::new(),
        candidates: Vec::new(),
    }
}

/// Free-function form of [`Disambiguator::score_root`].
pub fn score_root(
    root: &str,
    context: &StemContext,
    resources: &Resources,
    matrix: &ContextMatrix,
    measure: AssociationMeasure,
    mode: ContextMode,
) -> Result<ScoredRoot> {
    Ok(Disambiguator::new(resources, matrix, measure, mode)?.score_root(root, context))
}

/// Free-function form of [`Disambiguator::select_root`].
pub fn select_root(
    candidates: &[CandidateRoot],
    context: &StemContext,
    resources: &Resources,
    matrix: &ContextMatrix,
    measure: AssociationMeasure,
    mode: ContextMode,
) -> Result<Selection> {
    Disambiguator::new(resources, matrix, measure, mode)?.select_root(candidates, context)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cooccurrence::build_matrix;
    use crate::morphology::{AffixLists, RootDictionary};

    fn patterns(list: &[&str]) -> Vec<Pattern> {
        list.iter().map(|p| Pattern::parse(p).unwrap()).collect()
    }

    fn vocab(words: &[&str]) -> Vocabulary {
        let mut v = Vocabulary::new();
        for w in words {
            v.insert(w);
        }
        v
    }

    fn resources() -> Resources {
        Resources {
            affixes: AffixLists::new(["و", "ال", "ل", "ب", "بال"], ["ة", "ات"]),
            patterns: patterns(&["123", "1ا23", "12ا3", "12ي3", "م123", "12و3"]),
            dictionary: RootDictionary::new(["كتب", "قول", "قيل", "دور", "دير", "ودر", "صغر", "سرح"]).unwrap(),
        }
    }

    fn candidate(root: &str) -> CandidateRoot {
        CandidateRoot {
            root: root.to_string(),
            segmentation: Segmentation {
                prefix: String::new(),
                infix: root.to_string(),
                suffix: String::new(),
            },
            pattern: Pattern::parse("123").unwrap(),
            raw_root: root.to_string(),
            weak_variant: WeakVariant::None,
        }
    }

    #[test]
    fn derive_words_keeps_attested_forms() {
        let derived = derive_words("كتب", &patterns(&["123", "1ا23", "12ا3"]), &vocab(&["كاتب", "كتب", "قلم"]));
        assert_eq!(derived.words, BTreeSet::from(["كاتب".to_string(), "كتب".to_string()]));
        assert_eq!(derived.in_vocab, 2);
    }

    #[test]
    fn derive_words_falls_back_to_root() {
        let derived = derive_words("كتب", &patterns(&["1ا23"]), &Vocabulary::new());
        assert_eq!(derived.words, BTreeSet::from(["كتب".to_string()]));
        assert_eq!(derived.in_vocab, 0);
    }

    #[test]
    fn derive_words_matches_brute_force_instantiation() {
        let pats = patterns(&["123", "1ا23", "12ا3", "م123", "12و3", "م12و3", "1234"]);
        let v = vocab(&["قول", "مقول", "قوال", "مقال", "قاول", "بيت"]);
        let derived = derive_words("قول", &pats, &v);
        // Hand instantiation: قول, قاول, قوال, مقول, قوول, مقوول.
        let mut expected = BTreeSet::new();
        for (pattern, word) in [("123", "قول"), ("1ا23", "قاول"), ("12ا3", "قوال"), ("م123", "مقول"), ("12و3", "قوول"), ("م12و3", "مقوول")] {
            assert_eq!(Pattern::parse(pattern).unwrap().instantiate("قول").unwrap(), word);
            if v.contains(word) {
                expected.insert(word.to_string());
            }
        }
        assert_eq!(derived.words, expected);
        assert_eq!(derived.in_vocab, 4);
    }

    #[test]
    fn context_window_extraction() {
        let words = ["a", "b", "c", "d", "e"];
        let ctx = StemContext::around(&words, 2, 3);
        assert_eq!(ctx.preceding, vec!["a", "b"]);
        assert_eq!(ctx.following, vec!["d", "e"]);
        assert_eq!(ctx.scoring_words(ContextMode::PreviousWord), vec!["b"]);
        assert_eq!(ctx.scoring_words(ContextMode::FullWindow), vec!["a", "b", "d", "e"]);
        let edge = StemContext::around(&words, 0, 2);
        assert!(edge.preceding.is_empty());
        assert_eq!(edge.following, vec!["b"]);
        let last = StemContext::around(&words, 4, 3);
        assert!(last.following.is_empty());
    }

    #[test]
    fn raw_context_is_filtered_and_trimmed() {
        let stop = StopwordList::new(["في", "ان"]);
        let ctx = StemContext::from_raw(&["الكتاب", "في", "المدرسة", "إن"], &["،", "الطلاب", "يقرؤون", "كثيرا"], &stop, 3);
        assert_eq!(ctx.preceding, vec!["الكتاب", "المدرسة"]);
        assert_eq!(ctx.following, vec!["الطلاب", "يقرؤون"]);
    }

    /// Root A's derivations (كاتب) sit next to the context word; root B's
    /// (مدار) never do.
    fn toy_matrix() -> ContextMatrix {
        let docs = vec![
            vec!["الرسالة", "كاتب", "قصة"],
            vec!["الرسالة", "كاتب"],
            vec!["مدار", "الارض"],
            vec!["قصة", "طويلة"],
        ];
        build_matrix(&docs, 2).unwrap()
    }

    #[test]
    fn single_pair_score_is_the_association() {
        let m = toy_matrix();
        let r = resources();
        let ctx = StemContext::new(["الرسالة"], Vec::<String>::new());
        let measure = AssociationMeasure::spmi(0.75).unwrap();
        let scored = score_root("كتب", &ctx, &r, &m, measure, ContextMode::PreviousWord).unwrap();
        let direct = crate::cooccurrence::association(&m, "كاتب", "الرسالة", measure).unwrap();
        assert_eq!(scored.score, direct);
        assert_eq!(scored.derived_in_vocab, 1);
    }

    #[test]
    fn empty_context_scores_zero() {
        let m = toy_matrix();
        let scored = score_root("كتب", &StemContext::default(), &resources(), &m, AssociationMeasure::ppmi(), ContextMode::FullWindow).unwrap();
        assert_eq!(scored.score, 0.0);
    }

    #[test]
    fn supported_root_beats_unsupported() {
        let m = toy_matrix();
        let r = resources();
        let ctx = StemContext::new(["الرسالة"], Vec::<String>::new());
        for measure in [AssociationMeasure::pmi(), AssociationMeasure::ppmi(), AssociationMeasure::spmi(0.75).unwrap()] {
            let d = Disambiguator::new(&r, &m, measure, ContextMode::PreviousWord).unwrap();
            let a = d.score_root("كتب", &ctx);
            let b = d.score_root("دور", &ctx);
            assert!(a.score > 0.0, "{measure:?}");
            assert_eq!(b.score, 0.0);
            let sel = d.select_root(&[candidate("دور"), candidate("كتب")], &ctx).unwrap();
            assert_eq!(sel.root(), "كتب");
            assert_eq!(sel.table.len(), 2);
        }
    }

    #[test]
    fn selection_tie_breaks() {
        let m = toy_matrix();
        let r = resources();
        let d = Disambiguator::new(&r, &m, AssociationMeasure::ppmi(), ContextMode::PreviousWord).unwrap();
        let ctx = StemContext::default();
        // Both zero, neither attested: lexicographic order.
        let sel = d.select_root(&[candidate("ودر"), candidate("دور")], &ctx).unwrap();
        assert_eq!(sel.root(), "دور");
        // Equal scores: the root with attested derivations wins.
        let sel = d.select_root(&[candidate("دور"), candidate("كتب")], &ctx).unwrap();
        assert_eq!(sel.root(), "كتب");
        // A lone candidate is returned whatever its score.
        let sel = d.select_root(&[candidate("صغر")], &ctx).unwrap();
        assert_eq!(sel.root(), "صغر");
        assert!(matches!(d.select_root(&[], &ctx), Err(Error::NoCandidates)));
    }

    #[test]
    fn frequency_breaks_ties_before_spelling() {
        let docs = vec![vec!["دير", "قديم"], vec!["دير", "جبل"], vec!["دور", "اول"]];
        let m = build_matrix(&docs, 2).unwrap();
        let r = resources();
        let d = Disambiguator::new(&r, &m, AssociationMeasure::ppmi(), ContextMode::PreviousWord).unwrap();
        let sel = d.select_root(&[candidate("دور"), candidate("دير")], &StemContext::default()).unwrap();
        assert_eq!(sel.table[0].derived_in_vocab, 1);
        assert_eq!(sel.table[1].derived_in_vocab, 1);
        assert_eq!((sel.table[0].frequency, sel.table[1].frequency), (1, 2));
        assert_eq!(sel.root(), "دير");
    }

    #[test]
    fn stem_skips_function_words_and_symbols() {
        let m = toy_matrix();
        let r = resources();
        let stop = StopwordList::new(["إن"]);
        let d = Disambiguator::new(&r, &m, AssociationMeasure::spmi(0.75).unwrap(), ContextMode::PreviousWord).unwrap();
        let none: [&str; 0] = [];
        assert_eq!(d.stem("إن", &none, &none, &stop).fallback, Some(Fallback::Stopword));
        assert_eq!(d.stem(".", &none, &none, &stop).fallback, Some(Fallback::Punctuation));
        assert_eq!(d.stem("23", &none, &none, &stop).fallback, Some(Fallback::Numeric));
        assert_eq!(d.stem("Opera", &none, &none, &stop).fallback, Some(Fallback::NonArabic));
        assert_eq!(d.stem("د", &none, &none, &stop).fallback, Some(Fallback::NoCandidates));
        let rec = d.stem("وقال", &["الرسالة"], &none, &stop);
        assert!(matches!(rec.root.as_deref(), Some("قول") | Some("قيل")));
        assert_eq!(rec.candidates.len(), 2);
    }

    #[test]
    fn stem_tokens_preserves_order_and_positions() {
        let m = toy_matrix();
        let r = resources();
        let stop = StopwordList::new(["إن"]);
        let d = Disambiguator::new(&r, &m, AssociationMeasure::ppmi(), ContextMode::PreviousWord).unwrap();
        let tokens = corpus::tokenize("الرسالة الكاتب ، إن 23 الصغير");
        let records = d.stem_tokens(&tokens, &stop);
        assert_eq!(records.len(), tokens.len());
        for (i, rec) in records.iter().enumerate() {
            assert_eq!(rec.position, i);
        }
        assert_eq!(records[1].root.as_deref(), Some("كتب"));
        assert_eq!(records[1].context, vec!["الرسالة"]);
        assert_eq!(records[2].fallback, Some(Fallback::Punctuation));
        assert_eq!(records[3].fallback, Some(Fallback::Stopword));
        assert_eq!(records[4].fallback, Some(Fallback::Numeric));
        assert_eq!(records[5].root.as_deref(), Some("صغر"));
        // Context skips the excluded tokens.
        assert_eq!(records[5].context, vec!["الكاتب"]);
    }

    #[test]
    fn context_mode_parsing() {
        assert_eq!("previous".parse::<ContextMode>().unwrap(), ContextMode::PreviousWord);
        assert_eq!("window".parse::<ContextMode>().unwrap(), ContextMode::FullWindow);
        assert!("both".parse::<ContextMode>().is_err());
    }
}
