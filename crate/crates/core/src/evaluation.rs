//! Gold-standard scoring: stemming accuracy and cluster-overlap metrics.
//!
//! Cluster metrics are computed per evaluated word. For a word `w`, `X` is
//! the extracted cluster containing it and `Y` the gold cluster containing
//! it; each metric is the mean over words of
//!
//! * accuracy: `|X ∩ Y| / |X ∪ Y|`
//! * precision: `|X ∩ Y| / |Y|`
//! * recall: `|X ∩ Y| / |X|`
//!
//! and F1 is the harmonic mean of the averaged precision and recall.
//! Classification zeroes the overlap when the two labels differ; clustering
//! ignores labels.

use std::collections::{BTreeMap, BTreeSet, HashSet};
use std::fs;
use std::path::Path;

use serde::Serialize;

use crate::corpus::normalize;
use crate::error::{Error, Result};

/// Label prefix for words the stemmer could not root. Gold labels are roots
/// and never start with it.
pub const UNROOTED_PREFIX: &str = "∅:";

pub fn unrooted_label(word: &str) -> String {
    format!("{UNROOTED_PREFIX}{word}")
}

/// A gold annotation. `gold_root` is absent for stopwords, numbers,
/// punctuation and other rootless tokens.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct GoldPair {
    pub word: String,
    pub gold_root: Option<String>,
}

/// A gold file row with its line number.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GoldRow {
    pub line: usize,
    pub pair: GoldPair,
}

/// Parses `word<TAB>root` rows. Blank lines and `#` comments are skipped.
pub fn parse_gold_rows(text: &str, source: &Path) -> Result<Vec<GoldRow>> {
    let mut rows = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let raw = raw.trim_end_matches('\r');
        if raw.trim().is_empty() || raw.trim_start().starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = raw.split('\t').collect();
        if fields.len() != 2 {
            return Err(Error::format(
                source,
                line,
                format!("expected 2 tab-separated columns, found {}", fields.len()),
            ));
        }
        let word = normalize(fields[0].trim());
        if word.is_empty() {
            return Err(Error::format(source, line, "empty word column"));
        }
        let root = normalize(fields[1].trim());
        rows.push(GoldRow {
            line,
            pair: GoldPair {
                word,
                gold_root: (!root.is_empty()).then_some(root),
            },
        });
    }
    Ok(rows)
}

pub fn load_gold_rows(path: &Path) -> Result<Vec<GoldRow>> {
    let text = fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
    parse_gold_rows(&text, path)
}

/// Collapses repeated `(word, root)` rows, keeping first-occurrence order.
pub fn dedup_pairs<'a, I: IntoIterator<Item = &'a GoldPair>>(pairs: I) -> Vec<GoldPair> {
    let mut seen = HashSet::new();
    pairs.into_iter().filter(|p| seen.insert(*p)).cloned().collect()
}

/// Reads a gold file into deduplicated pairs.
pub fn load_gold(path: &Path) -> Result<Vec<GoldPair>> {
    let rows = load_gold_rows(path)?;
    Ok(dedup_pairs(rows.iter().map(|r| &r.pair)))
}

/// Fraction of rooted pairs whose predicted root equals the gold root.
/// Rootless pairs are skipped; a `None` prediction counts as wrong.
pub fn stemming_accuracy<F>(pairs: &[GoldPair], mut stemmer: F) -> Result<f64>
where
    F: FnMut(&GoldPair) -> Option<String>,
{
    let mut total = 0usize;
    let mut correct = 0usize;
    for pair in pairs {
        let Some(gold) = &pair.gold_root else { continue };
        total += 1;
        if stemmer(pair).as_deref() == Some(gold.as_str()) {
            correct += 1;
        }
    }
    if total == 0 {
        return Err(Error::EmptyGold);
    }
    Ok(correct as f64 / total as f64)
}

/// Words grouped by label. Every word sits under exactly one label.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ClusterSet {
    clusters: BTreeMap<String, BTreeSet<String>>,
    labels: BTreeMap<String, String>,
}

impl ClusterSet {
    pub fn label_of(&self, word: &str) -> Option<&str> {
        self.labels.get(word).map(String::as_str)
    }

    pub fn cluster(&self, label: &str) -> Option<&BTreeSet<String>> {
        self.clusters.get(label)
    }

    /// Clusters in label order.
    pub fn iter(&self) -> impl Iterator<Item = (&str, &BTreeSet<String>)> {
        self.clusters.iter().map(|(l, ws)| (l.as_str(), ws))
    }

    pub fn len(&self) -> usize {
        self.clusters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.clusters.is_empty()
    }

    pub fn word_count(&self) -> usize {
        self.labels.len()
    }
}

/// Groups words by label. A word assigned twice keeps its first label.
pub fn build_clusters<I, W, L>(assignments: I) -> ClusterSet
where
    I: IntoIterator<Item = (W, L)>,
    W: Into<String>,
    L: Into<String>,
{
    let mut set = ClusterSet::default();
    for (word, label) in assignments {
        let word = word.into();
        if set.labels.contains_key(&word) {
            continue;
        }
        let label = label.into();
        set.clusters.entry(label.clone()).or_default().insert(word.clone());
        set.labels.insert(word, label);
    }
    set
}

/// Averaged cluster-overlap scores over `n` words.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct MetricsReport {
    pub accuracy: f64,
    pub precision: f64,
    pub recall: f64,
    pub f1: f64,
    pub n: usize,
}

/// `2PR / (P + R)`, or zero when both are zero.
pub fn harmonic_f1(precision: f64, recall: f64) -> f64 {
    if precision + recall > 0.0 {
        2.0 * precision * recall / (precision + recall)
    } else {
        0.0
    }
}

fn overlap_metrics<S: AsRef<str>>(
    extracted: &ClusterSet,
    gold: &ClusterSet,
    words: &[S],
    label_aware: bool,
) -> Result<MetricsReport> {
    // Summing in sorted word order makes the result independent of input order.
    let words: BTreeSet<&str> = words.iter().map(AsRef::as_ref).collect();
    let (mut acc, mut prec, mut rec) = (0.0, 0.0, 0.0);
    for &w in &words {
        let missing = || Error::MissingWord(w.to_string());
        let x_label = extracted.label_of(w).ok_or_else(missing)?;
        let y_label = gold.label_of(w).ok_or_else(missing)?;
        let x = &extracted.clusters[x_label];
        let y = &gold.clusters[y_label];
        let raw = x.intersection(y).count();
        let inter = if label_aware && x_label != y_label { 0 } else { raw };
        let union = x.len() + y.len() - raw;
        acc += inter as f64 / union as f64;
        prec += inter as f64 / y.len() as f64;
        rec += inter as f64 / x.len() as f64;
    }
    let n = words.len();
    if n == 0 {
        return Ok(MetricsReport {
            accuracy: 0.0,
            precision: 0.0,
            recall: 0.0,
            f1: 0.0,
            n,
        });
    }
    let (accuracy, precision, recall) = (acc / n as f64, prec / n as f64, rec / n as f64);
    Ok(MetricsReport {
        accuracy,
        precision,
        recall,
        f1: harmonic_f1(precision, recall),
        n,
    })
}

/// Label-aware overlap: a word scores only when its extracted label equals
/// its gold label.
pub fn classification_metrics<S: AsRef<str>>(
    extracted: &ClusterSet,
    gold: &ClusterSet,
    words: &[S],
) -> Result<MetricsReport> {
    overlap_metrics(extracted, gold, words, true)
}

/// Label-agnostic overlap between each word's extracted and gold clusters.
pub fn clustering_metrics<S: AsRef<str>>(
    extracted: &ClusterSet,
    gold: &ClusterSet,
    words: &[S],
) -> Result<MetricsReport> {
    overlap_metrics(extracted, gold, words, false)
}
