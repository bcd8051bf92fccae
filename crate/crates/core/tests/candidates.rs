use std::collections::BTreeSet;

use proptest::prelude::*;
use rootstem::morphology::{generate_candidates, AffixLists, Pattern, Resources, RootDictionary};

/// Every root reachable from `word`, computed from scratch: all
/// prefix/suffix cuts, a direct slot-by-slot template match, and weak-letter
/// variants enumerated without reference to the library's ordering. Hamza
/// seats vary like weak letters.
fn oracle(word: &str, r: &Resources) -> BTreeSet<String> {
    let chars: Vec<char> = word.chars().collect();
    let weak = ['ا', 'و', 'ي'];
    let mut found = BTreeSet::new();
    for i in 0..=chars.len() {
        for j in i..=chars.len() {
            let prefix: String = chars[..i].iter().collect();
            let suffix: String = chars[j..].iter().collect();
            let infix = &chars[i..j];
            if infix.len() < 2 || !r.affixes.is_prefix(&prefix) || !r.affixes.is_suffix(&suffix) {
                continue;
            }
            let mut raws: Vec<Vec<char>> = Vec::new();
            for p in &r.patterns {
                let cells: Vec<char> = p.to_string().chars().collect();
                if cells.len() != infix.len() {
                    continue;
                }
                let mut slots: [Option<char>; 6] = [None; 6];
                let ok = cells.iter().zip(infix).all(|(&cell, &c)| match cell.to_digit(10) {
                    Some(d) => match slots[d as usize] {
                        Some(prev) => prev == c,
                        None => {
                            slots[d as usize] = Some(c);
                            true
                        }
                    },
                    None => cell == c,
                });
                if ok {
                    raws.push(slots.iter().flatten().copied().collect());
                }
            }
            if infix.len() == 2 {
                raws.push(infix.to_vec());
            }
            for raw in raws {
                let mut variants = vec![raw.clone()];
                for k in 0..raw.len() {
                    if weak.contains(&raw[k]) || ['ء', 'ئ', 'ؤ'].contains(&raw[k]) {
                        for w in weak {
                            let mut v = raw.clone();
                            v[k] = w;
                            variants.push(v);
                        }
                    }
                }
                if raw.len() == 2 {
                    for k in 0..=2 {
                        for w in weak {
                            let mut v = raw.clone();
                            v.insert(k, w);
                            variants.push(v);
                        }
                    }
                    variants.push(vec![raw[0], raw[1], raw[1]]);
                }
                for v in variants {
                    let s: String = v.into_iter().collect();
                    if r.dictionary.contains(&s) {
                        found.insert(s);
                    }
                }
            }
        }
    }
    found
}

fn roots(word: &str, r: &Resources) -> Vec<String> {
    generate_candidates(word, r).into_iter().map(|c| c.root).collect()
}

#[test]
fn validation_excerpt_rows_are_covered() {
    let r = Resources::bundled();
    let rows = [
        ("الجمعة", "جمع"),
        ("بالمسرح", "سرح"),
        ("الصغير", "صغر"),
        ("لدار", "دور"),
        ("وقال", "قول"),
        ("مرعي", "رعي"),
        ("عضو", "عضو"),
        ("المصري", "مصر"),
        ("افتتاح", "فتح"),
        ("الدورة", "دور"),
    ];
    for (word, root) in rows {
        let found = roots(word, &r);
        assert!(found.contains(&root.to_string()), "{word}: {found:?}");
    }
}

#[test]
fn bundled_candidates_match_oracle_on_common_words() {
    let r = Resources::bundled();
    for word in [
        "والكاتبون", "المدرسة", "يستخدمون", "بالمسرح", "وقال", "قل", "الدورة", "استقبال", "المعلمين",
        "فسيكتبونها", "مكتبات", "اجتماع", "ترجمة", "المتحدة", "القاهرة", "للطلاب",
    ] {
        let got: BTreeSet<String> = roots(word, &r).into_iter().collect();
        assert_eq!(got, oracle(word, &r), "{word}");
    }
}

#[test]
fn candidates_are_unique_and_in_dictionary() {
    let r = Resources::bundled();
    for word in ["وقال", "الدورة", "يستخدمون", "قل"] {
        let found = roots(word, &r);
        let unique: BTreeSet<&String> = found.iter().collect();
        assert_eq!(unique.len(), found.len(), "{word}");
        assert!(found.iter().all(|root| r.dictionary.contains(root)));
    }
}

fn toy() -> Resources {
    Resources {
        affixes: AffixLists::new(["و", "ال", "وال", "ب", "بال", "ل", "ي", "ت"], ["ة", "ون", "ات", "ها", "ي"]),
        patterns: ["123", "1ا23", "12ا3", "12ي3", "م123", "ا1ت23", "است123", "1234", "ت12ي3"]
            .iter()
            .map(|p| Pattern::parse(p).unwrap())
            .collect(),
        dictionary: RootDictionary::new([
            "كتب", "قول", "قيل", "دور", "دير", "قلل", "سلم", "علم", "وصل", "بني", "ترجم", "ملك", "لمس", "سمع",
        ])
        .unwrap(),
    }
}

proptest! {
    #[test]
    fn generation_matches_oracle(word in "[كتبقولدرسمعلصنيجهاةئء]{1,9}") {
        let r = toy();
        let got: BTreeSet<String> = roots(&word, &r).into_iter().collect();
        prop_assert_eq!(got, oracle(&word, &r));
    }
}
