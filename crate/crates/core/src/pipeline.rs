//! End-to-end runs: corpus to matrix, text to root records, gold file to
//! metrics. The command-line front end is a thin wrapper over these.

use std::collections::BTreeMap;
use std::io::{self, Write};

use rayon::prelude::*;
use serde::Serialize;

use crate::cooccurrence::{build_matrix_parallel, ContextMatrix};
use crate::corpus::{self, RawDocument, StopwordList, Token};
use crate::disambiguation::{Disambiguator, StemRecord};
use crate::error::{Error, Result};
use crate::evaluation::{
    self, build_clusters, classification_metrics, clustering_metrics, unrooted_label, ClusterSet, GoldRow,
    MetricsReport,
};
use crate::morphology::generate_candidates;

/// Counts reported after building a matrix.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct BuildSummary {
    pub documents: usize,
    pub vocabulary: usize,
    pub total: u64,
    pub nonzero: usize,
}

/// Normalized, filtered word sequences, one per document, in input order.
pub fn prepare_documents(documents: &[RawDocument], stopwords: &StopwordList) -> Vec<Vec<String>> {
    documents
        .par_iter()
        .map(|d| {
            corpus::prepare(&d.text, stopwords)
                .into_iter()
                .map(corpus::NormalizedToken::into_string)
                .collect()
        })
        .collect()
}

/// Builds the co-occurrence matrix of a corpus. Fails when there are no
/// documents or no content words survive filtering.
pub fn build(
    documents: &[RawDocument],
    stopwords: &StopwordList,
    window_n: usize,
) -> Result<(ContextMatrix, BuildSummary)> {
    if window_n < 2 {
        return Err(Error::InvalidWindow(window_n));
    }
    if documents.is_empty() {
        return Err(Error::EmptyCorpus("no documents".into()));
    }
    let prepared = prepare_documents(documents, stopwords);
    let matrix = build_matrix_parallel(&prepared, window_n)?;
    if matrix.vocabulary().is_empty() {
        return Err(Error::EmptyCorpus("no content words after filtering".into()));
    }
    let summary = BuildSummary {
        documents: documents.len(),
        vocabulary: matrix.vocabulary().len(),
        total: matrix.total(),
        nonzero: matrix.nnz(),
    };
    Ok((matrix, summary))
}

pub fn write_build_summary<W: Write>(summary: &BuildSummary, mut out: W) -> io::Result<()> {
    writeln!(out, "documents\t{}", summary.documents)?;
    writeln!(out, "vocabulary\t{}", summary.vocabulary)?;
    writeln!(out, "total\t{}", summary.total)?;
    writeln!(out, "nonzero\t{}", summary.nonzero)
}

/// One record per token of `text`, in token order.
pub fn stem_text(disambiguator: &Disambiguator<'_>, text: &str, stopwords: &StopwordList) -> Vec<StemRecord> {
    disambiguator.stem_tokens(&corpus::tokenize(text), stopwords)
}

/// Writes records as JSON lines.
pub fn write_records<W: Write>(records: &[StemRecord], mut out: W) -> io::Result<()> {
    for record in records {
        serde_json::to_writer(&mut out, record)?;
        out.write_all(b"\n")?;
    }
    Ok(())
}

/// Outcome for one rooted gold pair.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PairOutcome {
    pub word: String,
    pub gold_root: String,
    pub predicted: Option<String>,
    /// Candidate roots in generation order.
    pub candidates: Vec<String>,
}

impl PairOutcome {
    pub fn correct(&self) -> bool {
        self.predicted.as_deref() == Some(self.gold_root.as_str())
    }

    pub fn covered(&self) -> bool {
        self.candidates.contains(&self.gold_root)
    }
}

/// Everything `evaluate` measures.
#[derive(Debug, Clone, PartialEq)]
pub struct EvaluationReport {
    pub pairs: Vec<PairOutcome>,
    pub stemming_accuracy: f64,
    pub classification: MetricsReport,
    pub clustering: MetricsReport,
    pub extracted: ClusterSet,
    pub gold: ClusterSet,
}

impl EvaluationReport {
    pub fn coverage(&self) -> f64 {
        if self.pairs.is_empty() {
            return 0.0;
        }
        self.pairs.iter().filter(|p| p.covered()).count() as f64 / self.pairs.len() as f64
    }
}

/// Stems the gold words and scores the result.
///
/// The gold rows are read as running text, so each word's context is its
/// neighbours in the file after filtering. A pair repeated in the file is
/// judged at its first occurrence. For clustering, a word carrying several
/// gold roots keeps the first one.
pub fn evaluate(
    disambiguator: &Disambiguator<'_>,
    rows: &[GoldRow],
    stopwords: &StopwordList,
) -> Result<EvaluationReport> {
    let tokens: Vec<Token> = rows
        .iter()
        .enumerate()
        .map(|(position, r)| Token {
            surface: r.pair.word.clone(),
            position,
        })
        .collect();
    let records = disambiguator.stem_tokens(&tokens, stopwords);

    let mut first: BTreeMap<&evaluation::GoldPair, usize> = BTreeMap::new();
    let mut order = Vec::new();
    for (i, row) in rows.iter().enumerate() {
        if row.pair.gold_root.is_some() && !first.contains_key(&row.pair) {
            first.insert(&row.pair, i);
            order.push(i);
        }
    }
    if order.is_empty() {
        return Err(Error::EmptyGold);
    }

    let pairs: Vec<PairOutcome> = order
        .iter()
        .map(|&i| {
            let record = &records[i];
            let candidates = if record.fallback.is_none() {
                record.candidates.iter().map(|c| c.root.clone()).collect()
            } else {
                generate_candidates(&rows[i].pair.word, disambiguator.resources())
                    .into_iter()
                    .map(|c| c.root)
                    .collect()
            };
            PairOutcome {
                word: rows[i].pair.word.clone(),
                gold_root: rows[i].pair.gold_root.clone().expect("rooted pair"),
                predicted: record.root.clone(),
                candidates,
            }
        })
        .collect();

    let stemming_accuracy = pairs.iter().filter(|p| p.correct()).count() as f64 / pairs.len() as f64;

    let gold = build_clusters(pairs.iter().map(|p| (p.word.clone(), p.gold_root.clone())));
    let extracted = build_clusters(pairs.iter().map(|p| {
        let label = p.predicted.clone().unwrap_or_else(|| unrooted_label(&p.word));
        (p.word.clone(), label)
    }));
    let words: Vec<&str> = pairs.iter().map(|p| p.word.as_str()).collect();
    let classification = classification_metrics(&extracted, &gold, &words)?;
    let clustering = clustering_metrics(&extracted, &gold, &words)?;

    Ok(EvaluationReport {
        pairs,
        stemming_accuracy,
        classification,
        clustering,
        extracted,
        gold,
    })
}

fn join(words: impl IntoIterator<Item = impl AsRef<str>>) -> String {
    words.into_iter().map(|w| w.as_ref().to_string()).collect::<Vec<_>>().join(",")
}

/// Writes the per-pair table, cluster listings and `METRIC` lines.
pub fn write_report<W: Write>(report: &EvaluationReport, mut out: W) -> io::Result<()> {
    writeln!(out, "# word\tgold\tpredicted\tcorrect\tcovered\tcandidates")?;
    for p in &report.pairs {
        writeln!(
            out,
            "PAIR\t{}\t{}\t{}\t{}\t{}\t{}",
            p.word,
            p.gold_root,
            p.predicted.as_deref().unwrap_or("-"),
            p.correct(),
            p.covered(),
            join(&p.candidates)
        )?;
    }
    for (name, set) in [("GOLD", &report.gold), ("EXTRACTED", &report.extracted)] {
        for (label, words) in set.iter() {
            writeln!(out, "{name}\t{label}\t{}", join(words))?;
        }
    }
    let metric = |out: &mut W, name: &str, value: f64| writeln!(out, "METRIC\t{name}\t{value:.6}");
    metric(&mut out, "coverage", report.coverage())?;
    metric(&mut out, "stemming_accuracy", report.stemming_accuracy)?;
    for (mode, m) in [("classification", &report.classification), ("clustering", &report.clustering)] {
        metric(&mut out, &format!("{mode}_accuracy"), m.accuracy)?;
        metric(&mut out, &format!("{mode}_precision"), m.precision)?;
        metric(&mut out, &format!("{mode}_recall"), m.recall)?;
        metric(&mut out, &format!("{mode}_f1"), m.f1)?;
    }
    writeln!(out, "METRIC\tn\t{}", report.classification.n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cooccurrence::AssociationMeasure;
    use crate::disambiguation::ContextMode;
    use crate::evaluation::parse_gold_rows;
    use crate::morphology::{AffixLists, Pattern, Resources, RootDictionary};
    use std::path::Path;

    fn resources() -> Resources {
        Resources {
            affixes: AffixLists::new(["و", "ال", "ب", "بال", "ل"], ["ة"]),
            patterns: ["123", "1ا23", "12ي3", "م123"].iter().map(|p| Pattern::parse(p).unwrap()).collect(),
            dictionary: RootDictionary::new(["كتب", "قول", "قيل", "صغر", "سرح", "درس"]).unwrap(),
        }
    }

    fn docs(texts: &[&str]) -> Vec<RawDocument> {
        texts
            .iter()
            .enumerate()
            .map(|(i, t)| RawDocument {
                doc_id: format!("d{i}"),
                text: t.to_string(),
            })
            .collect()
    }

    #[test]
    fn build_reports_counts() {
        let stop = StopwordList::new(["في"]);
        let (m, s) = build(&docs(&["الكاتب في المدرسة", "الكاتب الصغير"]), &stop, 2).unwrap();
        assert_eq!(s.documents, 2);
        assert_eq!(s.vocabulary, 3);
        // Pairs (الكاتب, المدرسة) and (الكاتب, الصغير), each counted both ways.
        assert_eq!(s.total, 4);
        assert_eq!(m.total(), 4);
        let mut out = Vec::new();
        write_build_summary(&s, &mut out).unwrap();
        assert_eq!(String::from_utf8(out).unwrap(), "documents\t2\nvocabulary\t3\ntotal\t4\nnonzero\t4\n");
    }

    #[test]
    fn empty_corpora_are_rejected() {
        let stop = StopwordList::new(["في"]);
        assert!(matches!(build(&[], &stop, 3), Err(Error::EmptyCorpus(_))));
        assert!(matches!(build(&docs(&["في ."]), &stop, 3), Err(Error::EmptyCorpus(_))));
        assert!(matches!(build(&docs(&["كتب"]), &stop, 1), Err(Error::InvalidWindow(1))));
    }

    #[test]
    fn perfect_gold_scores_one() {
        let stop = StopwordList::new(["في"]);
        let (m, _) = build(&docs(&["الكاتب الصغير بالمسرح", "كتب الدرس"]), &stop, 3).unwrap();
        let r = resources();
        let d = Disambiguator::new(&r, &m, AssociationMeasure::spmi(0.75).unwrap(), ContextMode::PreviousWord).unwrap();
        let rows = parse_gold_rows(
            "الكاتب\tكتب\nفي\t\nالصغير\tصغر\nبالمسرح\tسرح\n24\t\nالكاتب\tكتب\n",
            Path::new("g"),
        )
        .unwrap();
        let report = evaluate(&d, &rows, &stop).unwrap();
        assert_eq!(report.pairs.len(), 3);
        assert_eq!(report.stemming_accuracy, 1.0);
        assert_eq!(report.coverage(), 1.0);
        let mut out = Vec::new();
        write_report(&report, &mut out).unwrap();
        let text = String::from_utf8(out).unwrap();
        let metrics: Vec<&str> = text.lines().filter(|l| l.starts_with("METRIC\t")).collect();
        assert_eq!(metrics.len(), 11);
        for line in &metrics[..10] {
            assert!(line.ends_with("\t1.000000"), "{line}");
        }
        assert_eq!(metrics[10], "METRIC\tn\t3");
    }

    #[test]
    fn unrooted_prediction_counts_against() {
        let stop = StopwordList::new(["في"]);
        let (m, _) = build(&docs(&["الكاتب الصغير"]), &stop, 3).unwrap();
        let r = resources();
        let d = Disambiguator::new(&r, &m, AssociationMeasure::ppmi(), ContextMode::PreviousWord).unwrap();
        let rows = parse_gold_rows("الكاتب\tكتب\nزززز\tزهر\n", Path::new("g")).unwrap();
        let report = evaluate(&d, &rows, &stop).unwrap();
        assert_eq!(report.stemming_accuracy, 0.5);
        assert!(!report.pairs[1].covered());
        assert_eq!(report.extracted.label_of("زززز"), Some("∅:زززز"));
        assert!(report.classification.accuracy < 1.0);

        let none = parse_gold_rows("في\t\n", Path::new("g")).unwrap();
        assert!(matches!(evaluate(&d, &none, &stop), Err(Error::EmptyGold)));
    }

    #[test]
    fn records_serialize_as_json_lines() {
        let stop = StopwordList::new(["في"]);
        let (m, _) = build(&docs(&["الكاتب الصغير"]), &stop, 3).unwrap();
        let r = resources();
        let d = Disambiguator::new(&r, &m, AssociationMeasure::ppmi(), ContextMode::PreviousWord).unwrap();
        let records = stem_text(&d, "الكاتب في .", &stop);
        let mut out = Vec::new();
        write_records(&records, &mut out).unwrap();
        let text = String::from_utf8(out).unwrap();
        let lines: Vec<serde_json::Value> = text.lines().map(|l| serde_json::from_str(l).unwrap()).collect();
        assert_eq!(lines.len(), 3);
        assert_eq!(lines[0]["root"], "كتب");
        assert_eq!(lines[0]["candidates"][0]["pattern"], "1ا23");
        assert_eq!(lines[1]["fallback"], "stopword");
        assert_eq!(lines[2]["fallback"], "punctuation");
        assert!(stem_text(&d, "", &stop).is_empty());
    }
}
