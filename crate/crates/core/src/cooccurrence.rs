//! Sliding-window context matrix and PMI-family association scores.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::fs::File;
use std::io::{self, BufRead, BufReader, BufWriter, Write};
use std::path::Path;
use std::str::FromStr;

use rayon::prelude::*;

use crate::error::{Error, Result};

const MAGIC: &str = "ROOTSTEM-MATRIX";
const VERSION: &str = "v1";

/// Dense indices for the words of a matrix, in insertion order.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Vocabulary {
    words: Vec<String>,
    index: HashMap<String, usize>,
}

impl Vocabulary {
    pub fn new() -> Self {
        Self::default()
    }

    /// Returns the index of `word`, assigning the next free one if needed.
    pub fn insert(&mut self, word: &str) -> usize {
        if let Some(&i) = self.index.get(word) {
            return i;
        }
        let i = self.words.len();
        self.words.push(word.to_string());
        self.index.insert(word.to_string(), i);
        i
    }

    pub fn get(&self, word: &str) -> Option<usize> {
        self.index.get(word).copied()
    }

    pub fn contains(&self, word: &str) -> bool {
        self.index.contains_key(word)
    }

    pub fn word(&self, index: usize) -> &str {
        &self.words[index]
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &str> {
        self.words.iter().map(String::as_str)
    }
}

/// Word-by-context co-occurrence counts.
///
/// Zero counts are never stored. Marginals and the total are derived from the
/// counts and kept in sync by every constructor.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ContextMatrix {
    window_n: usize,
    vocab: Vocabulary,
    counts: BTreeMap<(usize, usize), u64>,
    target_marginals: Vec<u64>,
    context_marginals: Vec<u64>,
    total: u64,
}

impl ContextMatrix {
    /// Assembles a matrix from index-pair counts. Repeated pairs are summed and
    /// zero counts ignored.
    pub fn from_counts<I>(window_n: usize, vocab: Vocabulary, counts: I) -> Result<Self>
    where
        I: IntoIterator<Item = ((usize, usize), u64)>,
    {
        if window_n < 2 {
            return Err(Error::InvalidWindow(window_n));
        }
        let mut merged = BTreeMap::new();
        for ((t, c), n) in counts {
            assert!(
                t < vocab.len() && c < vocab.len(),
                "count index out of vocabulary range"
            );
            if n > 0 {
                *merged.entry((t, c)).or_insert(0) += n;
            }
        }
        Ok(Self::with_marginals(window_n, vocab, merged))
    }

    /// Builds a matrix from `(target, context, count)` word triples, assigning
    /// vocabulary indices in order of first mention.
    pub fn from_word_counts<S: AsRef<str>>(window_n: usize, triples: &[(S, S, u64)]) -> Result<Self> {
        let mut vocab = Vocabulary::new();
        let mut counts = Vec::with_capacity(triples.len());
        for (t, c, n) in triples {
            let ti = vocab.insert(t.as_ref());
            let ci = vocab.insert(c.as_ref());
            counts.push(((ti, ci), *n));
        }
        Self::from_counts(window_n, vocab, counts)
    }

    fn with_marginals(window_n: usize, vocab: Vocabulary, counts: BTreeMap<(usize, usize), u64>) -> Self {
        let mut target_marginals = vec![0; vocab.len()];
        let mut context_marginals = vec![0; vocab.len()];
        let mut total = 0;
        for (&(t, c), &n) in &counts {
            target_marginals[t] += n;
            context_marginals[c] += n;
            total += n;
        }
        ContextMatrix {
            window_n,
            vocab,
            counts,
            target_marginals,
            context_marginals,
            total,
        }
    }

    pub fn window_n(&self) -> usize {
        self.window_n
    }

    pub fn vocabulary(&self) -> &Vocabulary {
        &self.vocab
    }

    pub fn total(&self) -> u64 {
        self.total
    }

    pub fn is_empty(&self) -> bool {
        self.total == 0
    }

    /// Number of distinct non-zero cells.
    pub fn nnz(&self) -> usize {
        self.counts.len()
    }

    pub fn count(&self, target: usize, context: usize) -> u64 {
        self.counts.get(&(target, context)).copied().unwrap_or(0)
    }

    /// Count for a pair of words; zero when either is unknown.
    pub fn word_count(&self, target: &str, context: &str) -> u64 {
        match (self.vocab.get(target), self.vocab.get(context)) {
            (Some(t), Some(c)) => self.count(t, c),
            _ => 0,
        }
    }

    pub fn target_marginal(&self, index: usize) -> u64 {
        self.target_marginals[index]
    }

    pub fn context_marginal(&self, index: usize) -> u64 {
        self.context_marginals[index]
    }

    /// Target marginal of a word, zero when out of vocabulary.
    pub fn frequency(&self, word: &str) -> u64 {
        self.vocab.get(word).map_or(0, |i| self.target_marginals[i])
    }

    /// Non-zero cells in (target, context) order.
    pub fn iter(&self) -> impl Iterator<Item = ((usize, usize), u64)> + '_ {
        self.counts.iter().map(|(&k, &v)| (k, v))
    }

    /// The same matrix with every count multiplied by `factor`.
    pub fn scaled(&self, factor: u64) -> Self {
        let counts = self.counts.iter().map(|(&k, &v)| (k, v * factor)).collect();
        Self::with_marginals(self.window_n, self.vocab.clone(), counts)
    }

    /// Writes the TSV matrix format.
    pub fn save<W: Write>(&self, mut out: W) -> io::Result<()> {
        writeln!(
            out,
            "{MAGIC}\t{VERSION}\twindow={}\ttotal={}\tvocab={}",
            self.window_n,
            self.total,
            self.vocab.len()
        )?;
        for (i, word) in self.vocab.iter().enumerate() {
            writeln!(out, "{i}\t{word}")?;
        }
        for (&(t, c), n) in &self.counts {
            writeln!(out, "{t}\t{c}\t{n}")?;
        }
        out.flush()
    }

    pub fn save_to(&self, path: &Path) -> Result<()> {
        let file = File::create(path).map_err(|e| Error::io(path, e))?;
        self.save(BufWriter::new(file)).map_err(|e| Error::io(path, e))
    }

    pub fn load_from(path: &Path) -> Result<Self> {
        let file = File::open(path).map_err(|e| Error::io(path, e))?;
        Self::load(BufReader::new(file), path)
    }

    /// Parses the TSV matrix format. `source` is only used in error messages.
    pub fn load<R: BufRead>(reader: R, source: &Path) -> Result<Self> {
        let bad = |line: usize, msg: String| Error::format(source, line, msg);
        let mut lines = reader.lines().enumerate().map(|(i, l)| (i + 1, l));

        let (_, header) = lines
            .next()
            .ok_or_else(|| bad(1, "missing header".into()))?;
        let header = header.map_err(|e| Error::io(source, e))?;
        let fields: Vec<&str> = header.split('\t').collect();
        if fields.len() != 5 || fields[0] != MAGIC {
            return Err(bad(1, format!("malformed header {header:?}")));
        }
        if fields[1] != VERSION {
            return Err(bad(1, format!("unsupported version {:?}", fields[1])));
        }
        let header_value = |field: &str, key: &str| -> Result<u64> {
            field
                .strip_prefix(key)
                .and_then(|v| v.strip_prefix('='))
                .and_then(|v| v.parse().ok())
                .ok_or_else(|| bad(1, format!("malformed header field {field:?}")))
        };
        let window_n = header_value(fields[2], "window")? as usize;
        let total = header_value(fields[3], "total")?;
        let vocab_len = header_value(fields[4], "vocab")? as usize;
        if window_n < 2 {
            return Err(bad(1, format!("window must be at least 2, got {window_n}")));
        }

        let mut vocab = Vocabulary::new();
        for expected in 0..vocab_len {
            let (lineno, line) = lines
                .next()
                .ok_or_else(|| bad(expected + 2, "vocabulary ends early".into()))?;
            let line = line.map_err(|e| Error::io(source, e))?;
            let (index, word) = line
                .split_once('\t')
                .ok_or_else(|| bad(lineno, format!("malformed vocabulary line {line:?}")))?;
            if index.parse::<usize>().ok() != Some(expected) {
                return Err(bad(lineno, format!("expected vocabulary index {expected}")));
            }
            if word.is_empty() || word.contains('\t') || vocab.contains(word) {
                return Err(bad(lineno, format!("invalid or duplicate word {word:?}")));
            }
            vocab.insert(word);
        }

        let mut counts = BTreeMap::new();
        let mut previous: Option<(usize, usize)> = None;
        let mut sum: u64 = 0;
        for (lineno, line) in lines {
            let line = line.map_err(|e| Error::io(source, e))?;
            let parts: Vec<&str> = line.split('\t').collect();
            let parsed = match parts.as_slice() {
                [t, c, n] => t
                    .parse::<usize>()
                    .ok()
                    .zip(c.parse::<usize>().ok())
                    .zip(n.parse::<u64>().ok()),
                _ => None,
            };
            let ((t, c), n) = parsed.ok_or_else(|| bad(lineno, format!("malformed count line {line:?}")))?;
            if t >= vocab_len || c >= vocab_len {
                return Err(bad(lineno, format!("index out of range in {line:?}")));
            }
            if n == 0 {
                return Err(bad(lineno, "zero count stored".into()));
            }
            if previous.is_some_and(|p| p >= (t, c)) {
                return Err(bad(lineno, "count lines not strictly sorted".into()));
            }
            previous = Some((t, c));
            sum = sum
                .checked_add(n)
                .ok_or_else(|| bad(lineno, "count total overflows".into()))?;
            counts.insert((t, c), n);
        }
        if sum != total {
            return Err(bad(1, format!("header total {total} but counts sum to {sum}")));
        }
        Ok(Self::with_marginals(window_n, vocab, counts))
    }
}

/// Assigns indices in first-occurrence order across all documents.
fn vocabulary_of<D, W>(documents: &[D]) -> Vocabulary
where
    D: AsRef<[W]>,
    W: AsRef<str>,
{
    let mut vocab = Vocabulary::new();
    for doc in documents {
        for word in doc.as_ref() {
            vocab.insert(word.as_ref());
        }
    }
    vocab
}

fn count_document<W: AsRef<str>>(
    doc: &[W],
    vocab: &Vocabulary,
    window_n: usize,
    counts: &mut HashMap<(usize, usize), u64>,
) {
    let ids: Vec<usize> = doc
        .iter()
        .map(|w| vocab.get(w.as_ref()).expect("word indexed"))
        .collect();
    let reach = window_n - 1;
    for (i, &target) in ids.iter().enumerate() {
        let lo = i.saturating_sub(reach);
        let hi = (i + reach).min(ids.len() - 1);
        for (j, &context) in ids.iter().enumerate().take(hi + 1).skip(lo) {
            if j != i {
                *counts.entry((target, context)).or_insert(0) += 1;
            }
        }
    }
}

/// Counts symmetric window co-occurrences: every pair of positions closer
/// than `window_n` within the same document contributes one event.
pub fn build_matrix<D, W>(documents: &[D], window_n: usize) -> Result<ContextMatrix>
where
    D: AsRef<[W]>,
    W: AsRef<str>,
{
    if window_n < 2 {
        return Err(Error::InvalidWindow(window_n));
    }
    let vocab = vocabulary_of(documents);
    let mut counts = HashMap::new();
    for doc in documents {
        count_document(doc.as_ref(), &vocab, window_n, &mut counts);
    }
    ContextMatrix::from_counts(window_n, vocab, counts)
}

/// Same result as [`build_matrix`], counting documents on the current rayon pool.
pub fn build_matrix_parallel<D, W>(documents: &[D], window_n: usize) -> Result<ContextMatrix>
where
    D: AsRef<[W]> + Sync,
    W: AsRef<str>,
{
    if window_n < 2 {
        return Err(Error::InvalidWindow(window_n));
    }
    let vocab = vocabulary_of(documents);
    let counts = documents
        .par_iter()
        .fold(HashMap::new, |mut acc, doc| {
            count_document(doc.as_ref(), &vocab, window_n, &mut acc);
            acc
        })
        .reduce(HashMap::new, |mut a, b| {
            for (k, v) in b {
                *a.entry(k).or_insert(0) += v;
            }
            a
        });
    ContextMatrix::from_counts(window_n, vocab, counts)
}

/// Which member of the PMI family to compute.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MeasureKind {
    Pmi,
    Ppmi,
    Spmi,
}

impl MeasureKind {
    pub fn as_str(self) -> &'static str {
        match self {
            MeasureKind::Pmi => "pmi",
            MeasureKind::Ppmi => "ppmi",
            MeasureKind::Spmi => "spmi",
        }
    }
}

impl fmt::Display for MeasureKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for MeasureKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "pmi" => Ok(MeasureKind::Pmi),
            "ppmi" => Ok(MeasureKind::Ppmi),
            "spmi" => Ok(MeasureKind::Spmi),
            other => Err(Error::Config(format!("unknown measure {other:?}"))),
        }
    }
}

/// An association measure with its context-smoothing exponent.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AssociationMeasure {
    kind: MeasureKind,
    alpha: f64,
}

impl AssociationMeasure {
    pub const DEFAULT_ALPHA: f64 = 0.75;

    pub fn new(kind: MeasureKind, alpha: f64) -> Result<Self> {
        if !(alpha > 0.0 && alpha <= 1.0) {
            return Err(Error::InvalidAlpha(alpha));
        }
        Ok(AssociationMeasure { kind, alpha })
    }

    pub fn pmi() -> Self {
        AssociationMeasure {
            kind: MeasureKind::Pmi,
            alpha: 1.0,
        }
    }

    pub fn ppmi() -> Self {
        AssociationMeasure {
            kind: MeasureKind::Ppmi,
            alpha: 1.0,
        }
    }

    pub fn spmi(alpha: f64) -> Result<Self> {
        Self::new(MeasureKind::Spmi, alpha)
    }

    pub fn kind(&self) -> MeasureKind {
        self.kind
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    /// PPMI and SPMI never go below zero.
    pub fn is_nonnegative(&self) -> bool {
        self.kind != MeasureKind::Pmi
    }
}

/// Association scores against a fixed matrix, with the smoothed context
/// distribution computed once.
///
/// Every measure reduces to `log2(count * norm / (target * context'))`, where
/// `context'` is the (possibly smoothed) context marginal and `norm` its sum.
/// For PMI and PPMI that is the plain marginal and the total.
#[derive(Debug, Clone)]
pub struct Scorer<'m> {
    matrix: &'m ContextMatrix,
    measure: AssociationMeasure,
    context_mass: Vec<f64>,
    norm: f64,
}

impl<'m> Scorer<'m> {
    pub fn new(matrix: &'m ContextMatrix, measure: AssociationMeasure) -> Result<Self> {
        if matrix.is_empty() {
            return Err(Error::EmptyMatrix);
        }
        let context_mass: Vec<f64> = match measure.kind {
            MeasureKind::Spmi => matrix
                .context_marginals
                .iter()
                .map(|&m| (m as f64).powf(measure.alpha))
                .collect(),
            MeasureKind::Pmi | MeasureKind::Ppmi => {
                matrix.context_marginals.iter().map(|&m| m as f64).collect()
            }
        };
        let norm = context_mass.iter().sum();
        Ok(Scorer {
            matrix,
            measure,
            context_mass,
            norm,
        })
    }

    pub fn measure(&self) -> AssociationMeasure {
        self.measure
    }

    pub fn matrix(&self) -> &'m ContextMatrix {
        self.matrix
    }

    /// Score for a pair of indices. Zero counts yield 0 for PPMI/SPMI and
    /// negative infinity for PMI.
    pub fn score(&self, target: usize, context: usize) -> f64 {
        let count = self.matrix.count(target, context);
        if count == 0 {
            return self.missing();
        }
        let ratio = (count as f64 * self.norm)
            / (self.matrix.target_marginals[target] as f64 * self.context_mass[context]);
        let value = ratio.log2();
        match self.measure.kind {
            MeasureKind::Pmi => value,
            MeasureKind::Ppmi | MeasureKind::Spmi => value.max(0.0),
        }
    }

    /// Score for a pair of words; out-of-vocabulary words count as unseen.
    pub fn score_words(&self, target: &str, context: &str) -> f64 {
        let vocab = &self.matrix.vocab;
        match (vocab.get(target), vocab.get(context)) {
            (Some(t), Some(c)) => self.score(t, c),
            _ => self.missing(),
        }
    }

    fn missing(&self) -> f64 {
        match self.measure.kind {
            MeasureKind::Pmi => f64::NEG_INFINITY,
            MeasureKind::Ppmi | MeasureKind::Spmi => 0.0,
        }
    }
}

/// One-off association between two words.
pub fn association(matrix: &ContextMatrix, target: &str, context: &str, measure: AssociationMeasure) -> Result<f64> {
    Ok(Scorer::new(matrix, measure)?.score_words(target, context))
}
