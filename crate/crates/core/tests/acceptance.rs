//! Acceptance gate: one PASS/FAIL line per criterion.

mod common;

use std::collections::{BTreeMap, BTreeSet};
use std::time::{Duration, Instant};

use regex::Regex;
use tokipona::grammar::{parse, parse_text, pi_readings, tokenize, ParseOptions, Token, CORPUS};
use tokipona::highlight::{build_scheme, validate_syntax_file, vim_syntax_string, MergeMode, SchemeConfig};
use tokipona::phonotactics::{count_possible_words, CountingMode};
use tokipona::stats::{self, Percent, Restrict, Scope, SentenceSpaceQuery};
use tokipona::synth::{letter_count, synth_poem, PoemSpec, SynthConfig, Synthesizer};
use tokipona::wordnet::{self, build_mapping, MappingMode};
use tokipona::{Lexicon, PosTag};

/// Tolerance on printed percentages, in percentage points.
const PERCENT_TOL: f64 = 0.01;
/// Relative band on the three WordNet mapping totals.
const WORDNET_BAND: f64 = 0.10;
const STRICT_ENUMERATION_BUDGET: Duration = Duration::from_secs(10);
const SUITE_BUDGET: Duration = Duration::from_secs(120);
const SYNTH_SENTENCES: usize = 1000;

type Verdict = Result<String, String>;

fn check(cond: bool, what: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(what.into())
    }
}

fn close(p: Percent, expected: f64) -> bool {
    (p.as_f64() - expected).abs() <= PERCENT_TOL + 1e-9 && (p.hundredths() as f64 / 100.0 - expected).abs() <= PERCENT_TOL + 1e-9
}

fn c1_word_space() -> Verdict {
    let paper: Vec<u64> = (1..=3).map(|n| count_possible_words(n, CountingMode::PaperCompatible).unwrap()).collect();
    check(paper == [96, 8256, 710016], format!("paper counts {paper:?}"))?;
    let start = Instant::now();
    let mut strict = Vec::new();
    for n in 1..=3 {
        let brute = common::strict_count_bruteforce(n);
        let got = count_possible_words(n, CountingMode::Strict).unwrap();
        check(got == brute, format!("strict n={n}: {got} vs enumeration {brute}"))?;
        strict.push(got);
    }
    let took = start.elapsed();
    check(took < STRICT_ENUMERATION_BUDGET, format!("enumeration took {took:?}"))?;
    Ok(format!("paper {paper:?}, strict {strict:?} = enumeration ({took:.2?})"))
}

fn c2_sentence_space() -> Verdict {
    let q = SentenceSpaceQuery { n: 1, v: 1, o: 1, p: 1, with_particles: true };
    let got = stats::sentence_space(q).map_err(|e| e.to_string())?;
    check(got == 4_300_066_310_805, format!("got {got}"))?;
    let printed = format!("{:.6e}", got as f64);
    check(printed == "4.300066e12", format!("printed {printed}"))?;
    Ok(format!("{got}"))
}

fn c3_table1(lex: &Lexicon) -> Verdict {
    let expected = [
        (PosTag::Noun, 58, 49),
        (PosTag::Adjective, 40, 34),
        (PosTag::Verb, 15, 13),
        (PosTag::Particle, 12, 12),
        (PosTag::Pre, 6, 6),
        (PosTag::Preposition, 5, 5),
        (PosTag::Number, 4, 1),
    ];
    let h = stats::pos_histogram(lex);
    for (tag, all, chosen) in expected {
        check(h.get(tag) == (all, chosen), format!("{tag}: {:?} vs ({all}, {chosen})", h.get(tag)))?;
    }
    check((h.total_all, h.total_chosen) == (140, 120), format!("totals {} / {}", h.total_all, h.total_chosen))?;
    Ok("16 cells equal, totals 140/120".into())
}

fn c4_table2(lex: &Lexicon) -> Verdict {
    let all = stats::syllable_frequency(lex, Scope::All);
    let middle = stats::syllable_frequency(lex, Scope::Middle);
    let top = &all.rows[0];
    check(top.item == "li" && top.count == 13 && close(top.percent, 5.53), format!("ALL top {top:?}"))?;
    let top = &middle.rows[0];
    check(top.item == "la" && top.count == 2 && close(top.percent, 15.38), format!("MIDDLE top {top:?}"))?;
    check(all.total == 235 && all.distinct() == 68, format!("totals {} / {}", all.total, all.distinct()))?;
    check(middle.total == 13, format!("middle total {}", middle.total))?;
    Ok("li 13 5.53%, la 2 15.38%, 235 / 68 / 13".into())
}

fn c5_table3(lex: &Lexicon) -> Verdict {
    let all = stats::letter_frequency(lex, Scope::All, Restrict::All);
    let last = stats::letter_frequency(lex, Scope::Last, Restrict::All);
    let last_c = stats::letter_frequency(lex, Scope::Last, Restrict::Consonants);
    let pct = |t: &stats::PositionalFrequencyTable, l: &str| t.get(l).map(|r| r.percent).ok_or(format!("no row {l}"));
    check(close(pct(&all, "a")?, 16.35), "a (ALL)")?;
    check(close(pct(&last_c, "n")?, 100.0), "n (LAST, consonants)")?;
    check(close(pct(&last, "i")?, 20.97), "i (LAST)")?;
    for l in ["j", "k", "l", "m", "p", "s", "t", "w"] {
        check(close(pct(&last, l)?, 0.0), format!("{l} (LAST) not zero"))?;
    }
    Ok("a 16.35%, n 100.00%, i 20.97%, jklmpstw 0.00%".into())
}

fn c6_lengths(lex: &Lexicon) -> Verdict {
    let r = stats::word_length_report(lex);
    let counts = [r.count(1), r.count(2), r.count(3)];
    check(counts == [26, 85, 13], format!("counts {counts:?}"))?;
    for (k, p) in [(1, 20.97), (2, 68.55), (3, 10.48)] {
        let row = r.rows.iter().find(|x| x.syllables == k).unwrap();
        check(close(row.percent, p), format!("{k} syllables: {}", row.percent))?;
    }
    Ok("26/85/13, 20.97/68.55/10.48".into())
}

fn c7_corpus(lex: &Lexicon) -> Verdict {
    let tokens = tokenize(CORPUS, lex);
    let out = parse(&tokens, lex, &ParseOptions::lenient());
    let errors: Vec<String> = out.errors().map(|d| d.to_string()).collect();
    check(errors.is_empty(), format!("hard errors: {errors:?}"))?;
    let rebuilt: Vec<&Token> = out.sentences.iter().flat_map(|s| s.tokens()).collect();
    let a: Vec<&str> = rebuilt.iter().map(|t| t.surface.as_str()).collect();
    let b: Vec<&str> = tokens.iter().map(|t| t.surface.as_str()).collect();
    check(a == b, "token sequences differ")?;
    let unparsed: String = out.sentences.iter().map(|s| s.unparse()).collect::<Vec<_>>().join(" ");
    let original = tokenize(&unparsed, lex);
    check(
        original.iter().map(|t| &t.surface).eq(tokens.iter().map(|t| &t.surface)),
        "unparse does not retokenize to the input",
    )?;
    Ok(format!("{} sentences, {} tokens, 0 hard errors", out.sentences.len(), tokens.len()))
}

fn c8_pi() -> Verdict {
    let mut shapes = 0;
    let mut readings = 0;
    for len in 1..=8usize {
        for mask in 0u32..(1 << len) {
            if mask.count_ones() > 3 {
                continue;
            }
            let words: Vec<&str> = (0..len).map(|i| if mask >> i & 1 == 1 { "pi" } else { "jan" }).collect();
            let oracle = common::cfg_pi_brackets(&words);
            let got = match pi_readings(&common::word_tokens(&words)) {
                Ok(r) => {
                    let mut b: Vec<String> = r.iter().map(|p| p.bracketed()).collect();
                    b.sort();
                    b
                }
                Err(_) => Vec::new(),
            };
            check(got == oracle, format!("{}: {got:?} vs {oracle:?}", words.join(" ")))?;
            shapes += 1;
            readings += got.len();
        }
    }
    let two = pi_readings(&common::word_tokens(&["jan", "pi", "toki", "pona", "pi", "sona", "mute"])).map_err(|e| e.to_string())?;
    check(two.len() == 2, format!("two-pi phrase gave {} readings", two.len()))?;
    Ok(format!("{shapes} shapes, {readings} readings equal the grammar; two pi -> 2"))
}

fn c9_synthesis(lex: &Lexicon) -> Verdict {
    let run = |seed: u64| -> Result<Vec<String>, String> {
        let mut s = Synthesizer::new(lex, SynthConfig::with_seed(seed)).map_err(|e| e.to_string())?;
        let mut texts = Vec::new();
        for _ in 0..SYNTH_SENTENCES {
            let sent = s.sentence();
            let text = sent.unparse();
            let out = parse_text(&text, lex, &ParseOptions::strict());
            check(out.diagnostics.is_empty(), format!("{text}: {:?}", out.diagnostics))?;
            check(out.sentences == vec![sent], format!("{text}: tree differs"))?;
            texts.push(text);
        }
        Ok(texts)
    };
    let a = run(2024)?;
    check(a == run(2024)?, "same seed, different output")?;
    check(a != run(2025)?, "different seeds, same output")?;
    let spec = PoemSpec { stanzas: 3, verses_per_stanza: 4, phonemes_per_verse: 11 };
    let poem = synth_poem(lex, &SynthConfig::with_seed(7), &spec).map_err(|e| e.to_string())?;
    check(poem == synth_poem(lex, &SynthConfig::with_seed(7), &spec).unwrap(), "poem not reproducible")?;
    let verses: Vec<&str> = poem.lines().filter(|l| !l.is_empty()).collect();
    check(verses.len() == 12, format!("{} verses", verses.len()))?;
    check(verses.iter().all(|v| letter_count(v) == 11), format!("verse lengths off: {verses:?}"))?;
    Ok(format!("{SYNTH_SENTENCES} sentences strict-clean, reproducible; 12 verses of 11 letters"))
}

fn c10_highlight(lex: &Lexicon) -> Verdict {
    let distinct: BTreeSet<&str> = lex.distinct().map(|l| l.surface.as_str()).collect();
    check(distinct.len() == 120, "distinct words")?;
    let keyword = Regex::new(r"^syn keyword tp[A-Z]+( [a-z]+)+$").unwrap();
    let other = Regex::new(r#"^(|".*|if exists\("b:current_syntax"\)|  finish|endif|let b:current_syntax = "tokipona"|syn match tp[A-Z]+ ".+"|hi def link tp[A-Z]+ [A-Za-z][A-Za-z0-9_]*)$"#).unwrap();
    for mode in MergeMode::ALL {
        let cfg = SchemeConfig { merge_mode: mode, ..Default::default() };
        let scheme = build_scheme(lex, &cfg).map_err(|e| e.to_string())?;
        let mut seen: BTreeMap<&str, usize> = BTreeMap::new();
        for g in scheme.keyword_groups() {
            for m in &g.members {
                if let Some(c) = lex.canonical(m) {
                    if c.surface == *m {
                        *seen.entry(distinct.get(m.as_str()).copied().unwrap_or("?")).or_default() += 1;
                    }
                }
            }
        }
        check(seen.keys().copied().collect::<BTreeSet<_>>() == distinct, format!("{mode:?}: groups do not cover the words"))?;
        check(seen.values().all(|&n| n == 1), format!("{mode:?}: a word sits in two groups"))?;
        let sizes: usize = scheme.keyword_groups().map(|g| g.distinct).sum();
        check(sizes == 120, format!("{mode:?}: sizes sum to {sizes}"))?;
        let text = vim_syntax_string(&scheme);
        validate_syntax_file(&text).map_err(|e| format!("{mode:?}: {e}"))?;
        for line in text.lines() {
            check(keyword.is_match(line) || other.is_match(line), format!("{mode:?}: line {line:?}"))?;
        }
        let again = vim_syntax_string(&build_scheme(lex, &cfg).unwrap());
        check(text == again, format!("{mode:?}: regeneration differs"))?;
    }
    let full = build_scheme(lex, &SchemeConfig::default()).unwrap();
    let h = stats::pos_histogram(lex);
    for tag in PosTag::ALL {
        let g = full.group(&format!("tp{tag}")).ok_or(format!("no group for {tag}"))?;
        check(g.distinct == h.get(tag).1, format!("tp{tag}: {} vs {}", g.distinct, h.get(tag).1))?;
    }
    Ok("3 merge modes partition 120 words; files valid and stable; FULL = Chosen column".into())
}

fn c11_wordnet(lex: &Lexicon) -> Verdict {
    let db = wordnet::load_wordnet_db(&wordnet::default_db_dir()).map_err(|e| format!("database unavailable: {e}"))?;
    {
        check(db.total_synsets() == 117_659, format!("total synsets {}", db.total_synsets()))?;
        let maps: Vec<_> = MappingMode::ALL.iter().map(|&m| build_mapping(lex, &db, m)).collect();
        let totals: Vec<usize> = maps.iter().map(|m| m.total_synsets).collect();
        for (got, target) in totals.iter().zip([4027.0, 3929.0, 2462.0]) {
            let dev = (*got as f64 - target) / target;
            check(dev.abs() <= WORDNET_BAND, format!("total {got} is {:+.1}% from {target}", dev * 100.0))?;
        }
        let (all, noprep, matched) = (&maps[0], &maps[1], &maps[2]);
        let mut violations = 0;
        for l in lex.entries() {
            let w = &l.surface;
            if !noprep.synsets_of(w).is_subset(&all.synsets_of(w)) || !matched.synsets_of(w).is_subset(&all.synsets_of(w)) {
                violations += 1;
            }
            if l.has_tag(PosTag::Preposition) && noprep.map.contains_key(w) {
                violations += 1;
            }
        }
        let union_noprep: BTreeSet<_> = noprep.map.values().flatten().collect();
        let union_all: BTreeSet<_> = all.map.values().flatten().collect();
        check(union_noprep.is_subset(&union_all), "NO_PREPOSITIONS not within ALL")?;
        check(violations == 0, format!("{violations} subset violations"))?;
        Ok(format!("117659 synsets; totals {totals:?} vs [4027, 3929, 2462]; subset laws hold"))
    }
}

fn main() {
    let start = Instant::now();
    let lex = Lexicon::embedded();
    let mut results: Vec<(u32, &str, Option<Verdict>)> = vec![
        (1, "word-space counts", Some(c1_word_space())),
        (2, "sentence space", Some(c2_sentence_space())),
        (3, "POS table", Some(c3_table1(&lex))),
        (4, "syllable table", Some(c4_table2(&lex))),
        (5, "letter table", Some(c5_table3(&lex))),
        (6, "word lengths", Some(c6_lengths(&lex))),
        (7, "corpus round trip", Some(c7_corpus(&lex))),
        (8, "pi readings", Some(c8_pi())),
        (9, "synthesis closure", Some(c9_synthesis(&lex))),
        (10, "highlight partition", Some(c10_highlight(&lex))),
        (11, "wordnet mapping", Some(c11_wordnet(&lex))),
    ];
    let took = start.elapsed();
    results.push((
        12,
        "runtime",
        Some(if took < SUITE_BUDGET {
            Ok(format!("acceptance work (all oracles) {took:.2?} < {SUITE_BUDGET:?}"))
        } else {
            Err(format!("took {took:?}"))
        }),
    ));
    let mut failed = Vec::new();
    for (n, name, verdict) in &results {
        match verdict {
            Some(Ok(detail)) => println!("criterion {n:>2} PASS  {name}: {detail}"),
            Some(Err(why)) => {
                println!("criterion {n:>2} FAIL  {name}: {why}");
                failed.push(*n);
            }
            None => println!("criterion {n:>2} NOT RUN  {name}"),
        }
    }
    if !failed.is_empty() {
        println!("failed criteria: {failed:?}");
        std::process::exit(1);
    }
}
