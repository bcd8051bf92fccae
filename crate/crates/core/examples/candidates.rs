//! Prints the candidate roots of each argument, or with `--corpus DIR` the
//! content words of a corpus that have none.

use std::collections::BTreeMap;
use std::path::Path;

use rootstem::corpus::{load_corpus, prepare, normalize, CorpusFormat, StopwordList};
use rootstem::morphology::{generate_candidates, Resources};

fn main() {
    let r = Resources::bundled();
    let args: Vec<String> = std::env::args().skip(1).collect();
    if args.first().map(String::as_str) == Some("--corpus") {
        let docs = load_corpus(Path::new(&args[1]), CorpusFormat::Directory).expect("corpus");
        let stop = StopwordList::bundled();
        let mut missing: BTreeMap<String, usize> = BTreeMap::new();
        for d in &docs {
            for w in prepare(&d.text, &stop) {
                if generate_candidates(w.as_str(), &r).is_empty() {
                    *missing.entry(w.into_string()).or_default() += 1;
                }
            }
        }
        for (w, n) in missing {
            println!("{n}\t{w}");
        }
        return;
    }
    for word in args {
        let w = normalize(&word);
        let roots: Vec<String> = generate_candidates(&w, &r).into_iter().map(|c| c.root).collect();
        println!("{word}\t{}", roots.join(" "));
    }
}
