//! The official 124-lemma vocabulary.
//!
//! The bundled table lives in `data/lexicon.tsv`; [`Lexicon::load`] checks it
//! against the published vocabulary counts before handing it out, so a bad
//! transcription fails at load time instead of skewing every statistic.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::path::Path;
use std::str::FromStr;

use serde::Serialize;
use thiserror::Error;

use crate::phonotactics::{self, CountingMode};

const EMBEDDED: &str = include_str!("../data/lexicon.tsv");

pub const LEMMA_COUNT: usize = 124;
pub const DISTINCT_COUNT: usize = 120;
pub const CONTENT_WORD_COUNT: usize = 107;

pub const PURE_PARTICLES: [&str; 10] = ["li", "e", "la", "pi", "a", "o", "anu", "en", "seme", "mu"];
pub const SOLE_PREPOSITIONS: [&str; 3] = ["kepeken", "lon", "tan"];
pub const PREPOSITIONS: [&str; 5] = ["kepeken", "lon", "sama", "tan", "tawa"];
pub const PRE_VERBS: [&str; 6] = ["wile", "ken", "awen", "kama", "lukin", "sona"];
pub const SYNONYM_GROUPS: [[&str; 2]; 4] = [["a", "kin"], ["lukin", "oko"], ["sin", "namako"], ["ale", "ali"]];

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum PosTag {
    Noun,
    Adjective,
    Verb,
    Particle,
    Pre,
    Preposition,
    Number,
}

impl PosTag {
    /// Display order: NOUN, ADJECTIVE, VERB, PARTICLE, PRE, PREPOSITION, NUMBER.
    pub const ALL: [PosTag; 7] = [
        PosTag::Noun,
        PosTag::Adjective,
        PosTag::Verb,
        PosTag::Particle,
        PosTag::Pre,
        PosTag::Preposition,
        PosTag::Number,
    ];

    /// First match in this list is a lemma's chosen tag.
    pub const PRECEDENCE: [PosTag; 7] = [
        PosTag::Pre,
        PosTag::Verb,
        PosTag::Preposition,
        PosTag::Particle,
        PosTag::Adjective,
        PosTag::Noun,
        PosTag::Number,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            PosTag::Noun => "NOUN",
            PosTag::Adjective => "ADJECTIVE",
            PosTag::Verb => "VERB",
            PosTag::Particle => "PARTICLE",
            PosTag::Pre => "PRE",
            PosTag::Preposition => "PREPOSITION",
            PosTag::Number => "NUMBER",
        }
    }

    /// Picks the preferred tag among `tags`.
    pub fn choose(tags: &[PosTag]) -> Option<PosTag> {
        PosTag::PRECEDENCE.iter().copied().find(|t| tags.contains(t))
    }
}

impl fmt::Display for PosTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for PosTag {
    type Err = LexiconError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        PosTag::ALL
            .iter()
            .copied()
            .find(|t| t.as_str() == s.trim())
            .ok_or_else(|| LexiconError::UnknownTag(s.trim().to_string()))
    }
}

/// English words of one dictionary sense (the co-glosses between semicolons
/// of the printed dictionary).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Sense {
    pub english_lemmas: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Lemma {
    pub surface: String,
    pub tags: Vec<PosTag>,
    pub chosen: PosTag,
    pub senses: Vec<Sense>,
    pub synonym_group: Option<String>,
}

impl Lemma {
    pub fn has_tag(&self, tag: PosTag) -> bool {
        self.tags.contains(&tag)
    }

    pub fn is_pure_particle(&self) -> bool {
        self.tags == [PosTag::Particle]
    }

    pub fn is_sole_preposition(&self) -> bool {
        self.tags == [PosTag::Preposition]
    }

    pub fn is_pre_verb(&self) -> bool {
        self.has_tag(PosTag::Pre)
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum LexiconError {
    #[error("cannot read lexicon {path}: {message}")]
    Io { path: String, message: String },
    #[error("line {line}: {message}")]
    MalformedRow { line: usize, message: String },
    #[error("unknown POS tag {0:?}")]
    UnknownTag(String),
    #[error("lemma count {0} ≠ {LEMMA_COUNT}")]
    LemmaCount(usize),
    #[error("distinct word count {0} ≠ {DISTINCT_COUNT}")]
    DistinctCount(usize),
    #[error("duplicate lemma {0:?}")]
    Duplicate(String),
    #[error("lemma {surface:?} is not a valid word: {reason}")]
    InvalidSurface { surface: String, reason: String },
    #[error("synonym groups {0} differ from the official four")]
    SynonymGroups(String),
    #[error("synonyms {0} and {1} carry different tags")]
    SynonymTagMismatch(String, String),
    #[error("{which} count for {tag} is {found}, expected {expected}")]
    TagCount { which: &'static str, tag: PosTag, found: usize, expected: usize },
    #[error("{which} set {found:?} differs from {expected:?}")]
    WordSet { which: &'static str, found: Vec<String>, expected: Vec<String> },
}

/// Tag-incidence counts (all tags, chosen tag) per POS, over distinct words.
pub const TAG_COUNTS: [(PosTag, usize, usize); 7] = [
    (PosTag::Noun, 58, 49),
    (PosTag::Adjective, 40, 34),
    (PosTag::Verb, 15, 13),
    (PosTag::Particle, 12, 12),
    (PosTag::Pre, 6, 6),
    (PosTag::Preposition, 5, 5),
    (PosTag::Number, 4, 1),
];

#[derive(Debug, Clone, Serialize)]
pub struct Lexicon {
    entries: Vec<Lemma>,
    #[serde(skip)]
    index: HashMap<String, usize>,
}

impl Lexicon {
    /// The bundled vocabulary. Panics only if the embedded table is corrupt,
    /// which the test suite rules out.
    pub fn embedded() -> Lexicon {
        Lexicon::parse(EMBEDDED).expect("embedded lexicon is valid")
    }

    /// Loads `path` if given, otherwise the bundled vocabulary.
    pub fn load(path: Option<&Path>) -> Result<Lexicon, LexiconError> {
        match path {
            None => Lexicon::parse(EMBEDDED),
            Some(p) => {
                let text = std::fs::read_to_string(p).map_err(|e| LexiconError::Io {
                    path: p.display().to_string(),
                    message: e.to_string(),
                })?;
                Lexicon::parse(&text)
            }
        }
    }

    /// Parses and validates a lexicon table.
    pub fn parse(text: &str) -> Result<Lexicon, LexiconError> {
        let lex = Lexicon::parse_rows(text)?;
        lex.validate()?;
        Ok(lex)
    }

    /// Parses a lexicon table without checking the vocabulary invariants.
    pub fn parse_rows(text: &str) -> Result<Lexicon, LexiconError> {
        let mut entries = Vec::new();
        let mut header_seen = false;
        for (n, raw) in text.lines().enumerate() {
            let line = n + 1;
            if raw.trim().is_empty() || raw.starts_with('#') {
                continue;
            }
            if !header_seen {
                if !raw.starts_with("surface\t") {
                    return Err(LexiconError::MalformedRow {
                        line,
                        message: "missing header row".into(),
                    });
                }
                header_seen = true;
                continue;
            }
            entries.push(parse_row(raw, line)?);
        }
        let mut index = HashMap::new();
        for (i, e) in entries.iter().enumerate() {
            if index.insert(e.surface.clone(), i).is_some() {
                return Err(LexiconError::Duplicate(e.surface.clone()));
            }
        }
        Ok(Lexicon { entries, index })
    }

    fn validate(&self) -> Result<(), LexiconError> {
        if self.entries.len() != LEMMA_COUNT {
            return Err(LexiconError::LemmaCount(self.entries.len()));
        }
        for e in &self.entries {
            if let Err(v) = phonotactics::validate_word(&e.surface, CountingMode::Strict) {
                return Err(LexiconError::InvalidSurface {
                    surface: e.surface.clone(),
                    reason: v.to_string(),
                });
            }
        }
        self.validate_synonyms()?;
        let distinct = self.distinct().count();
        if distinct != DISTINCT_COUNT {
            return Err(LexiconError::DistinctCount(distinct));
        }
        let histogram = self.tag_histogram();
        for (tag, all, chosen) in TAG_COUNTS {
            let (found_all, found_chosen) = histogram[&tag];
            if found_all != all {
                return Err(LexiconError::TagCount { which: "all-tag", tag, found: found_all, expected: all });
            }
            if found_chosen != chosen {
                return Err(LexiconError::TagCount {
                    which: "chosen-tag",
                    tag,
                    found: found_chosen,
                    expected: chosen,
                });
            }
        }
        check_set(
            "pure-particle",
            self.distinct().filter(|l| l.is_pure_particle()),
            &PURE_PARTICLES,
        )?;
        check_set(
            "sole-preposition",
            self.distinct().filter(|l| l.is_sole_preposition()),
            &SOLE_PREPOSITIONS,
        )?;
        check_set("preposition", self.distinct().filter(|l| l.has_tag(PosTag::Preposition)), &PREPOSITIONS)?;
        check_set("pre-verb", self.distinct().filter(|l| l.is_pre_verb()), &PRE_VERBS)?;
        Ok(())
    }

    fn validate_synonyms(&self) -> Result<(), LexiconError> {
        let mut groups: BTreeMap<&str, Vec<&Lemma>> = BTreeMap::new();
        for e in &self.entries {
            if let Some(g) = &e.synonym_group {
                groups.entry(g.as_str()).or_default().push(e);
            }
        }
        let mut found: BTreeSet<BTreeSet<&str>> = BTreeSet::new();
        for members in groups.values() {
            found.insert(members.iter().map(|l| l.surface.as_str()).collect());
            if let Some(first) = members.first() {
                if let Some(other) = members.iter().find(|l| l.tags != first.tags) {
                    return Err(LexiconError::SynonymTagMismatch(first.surface.clone(), other.surface.clone()));
                }
            }
        }
        let expected: BTreeSet<BTreeSet<&str>> =
            SYNONYM_GROUPS.iter().map(|g| g.iter().copied().collect()).collect();
        if found != expected {
            return Err(LexiconError::SynonymGroups(format!("{found:?}")));
        }
        Ok(())
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &[Lemma] {
        &self.entries
    }

    /// Exact lookup on the lowercase surface. Capitalised words (names)
    /// never match.
    pub fn lookup(&self, surface: &str) -> Option<&Lemma> {
        self.index.get(surface).map(|&i| &self.entries[i])
    }

    pub fn contains(&self, surface: &str) -> bool {
        self.index.contains_key(surface)
    }

    /// The canonical member of `surface`'s synonym group (itself when it has
    /// no synonym).
    pub fn canonical<'a>(&'a self, surface: &str) -> Option<&'a Lemma> {
        let lemma = self.lookup(surface)?;
        match &lemma.synonym_group {
            None => Some(lemma),
            Some(g) => self.group_head(g),
        }
    }

    /// The member named first in the group id (`a-kin` gives `a`), else the
    /// alphabetically first member.
    fn group_head(&self, group: &str) -> Option<&Lemma> {
        let members = || self.entries.iter().filter(move |e| e.synonym_group.as_deref() == Some(group));
        let named = group.split('-').next().unwrap_or(group);
        members().find(|e| e.surface == named).or_else(|| members().min_by(|a, b| a.surface.cmp(&b.surface)))
    }

    /// One lemma per synonym group: the 120 distinct words, in file order.
    pub fn distinct(&self) -> impl Iterator<Item = &Lemma> {
        self.entries.iter().filter(move |e| match &e.synonym_group {
            None => true,
            Some(g) => self.group_head(g).is_some_and(|h| h.surface == e.surface),
        })
    }

    /// Distinct words minus pure particles and words that are only
    /// prepositions.
    pub fn content_words(&self) -> Vec<&Lemma> {
        self.distinct()
            .filter(|l| !l.is_pure_particle() && !l.is_sole_preposition())
            .collect()
    }

    /// (all-tag count, chosen-tag count) per POS over distinct words.
    pub fn tag_histogram(&self) -> BTreeMap<PosTag, (usize, usize)> {
        let mut out: BTreeMap<PosTag, (usize, usize)> = PosTag::ALL.iter().map(|&t| (t, (0, 0))).collect();
        for lemma in self.distinct() {
            for t in &lemma.tags {
                out.get_mut(t).expect("all tags present").0 += 1;
            }
            out.get_mut(&lemma.chosen).expect("all tags present").1 += 1;
        }
        out
    }

    pub fn is_particle(&self, surface: &str) -> bool {
        self.lookup(surface).is_some_and(Lemma::is_pure_particle)
    }

    pub fn is_preposition(&self, surface: &str) -> bool {
        self.lookup(surface).is_some_and(|l| l.has_tag(PosTag::Preposition))
    }

    pub fn is_pre_verb(&self, surface: &str) -> bool {
        self.lookup(surface).is_some_and(Lemma::is_pre_verb)
    }

    /// Serialises the lexicon in the bundled TSV dialect.
    pub fn to_tsv(&self) -> String {
        let mut out = String::from("surface\ttags\tsynonym\tsenses\n");
        for e in &self.entries {
            let tags: Vec<&str> = e.tags.iter().map(|t| t.as_str()).collect();
            let senses: Vec<String> = e.senses.iter().map(|s| s.english_lemmas.join(";")).collect();
            out.push_str(&format!(
                "{}\t{}\t{}\t{}\n",
                e.surface,
                tags.join(","),
                e.synonym_group.as_deref().unwrap_or("-"),
                senses.join("|")
            ));
        }
        out
    }
}

fn check_set<'a>(
    which: &'static str,
    found: impl Iterator<Item = &'a Lemma>,
    expected: &[&str],
) -> Result<(), LexiconError> {
    let found: BTreeSet<String> = found.map(|l| l.surface.clone()).collect();
    let expected: BTreeSet<String> = expected.iter().map(|s| s.to_string()).collect();
    if found != expected {
        return Err(LexiconError::WordSet {
            which,
            found: found.into_iter().collect(),
            expected: expected.into_iter().collect(),
        });
    }
    Ok(())
}

fn parse_row(raw: &str, line: usize) -> Result<Lemma, LexiconError> {
    let malformed = |message: String| LexiconError::MalformedRow { line, message };
    let cols: Vec<&str> = raw.split('\t').collect();
    if cols.len() != 4 {
        return Err(malformed(format!("expected 4 tab-separated columns, found {}", cols.len())));
    }
    let surface = cols[0].trim().to_string();
    if surface.is_empty() || surface.chars().any(|c| !c.is_ascii_lowercase()) {
        return Err(malformed(format!("bad surface {surface:?}")));
    }
    let mut tags = Vec::new();
    for t in cols[1].split(',') {
        let tag: PosTag = t.parse().map_err(|e: LexiconError| malformed(e.to_string()))?;
        if tags.contains(&tag) {
            return Err(malformed(format!("duplicate tag {tag}")));
        }
        tags.push(tag);
    }
    let chosen = PosTag::choose(&tags).ok_or_else(|| malformed("no tags".into()))?;
    let synonym_group = match cols[2].trim() {
        "-" => None,
        "" => return Err(malformed("empty synonym column".into())),
        g => Some(g.to_string()),
    };
    let mut senses = Vec::new();
    for sense in cols[3].split('|') {
        let english_lemmas: Vec<String> = sense.split(';').map(|s| s.trim().to_string()).collect();
        if english_lemmas.iter().any(|g| g.is_empty() || g.chars().any(char::is_uppercase)) {
            return Err(malformed(format!("bad sense {sense:?}")));
        }
        senses.push(Sense { english_lemmas });
    }
    Ok(Lemma { surface, tags, chosen, senses, synonym_group })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn embedded_loads() {
        let lex = Lexicon::load(None).unwrap();
        assert_eq!(lex.len(), 124);
        assert_eq!(lex.distinct().count(), 120);
    }

    #[test]
    fn chosen_histogram_matches_table() {
        let lex = Lexicon::embedded();
        let h = lex.tag_histogram();
        assert_eq!(h[&PosTag::Noun].1, 49);
        assert_eq!(h[&PosTag::Adjective].1, 34);
        assert_eq!(h[&PosTag::Verb].1, 13);
        assert_eq!(h[&PosTag::Particle].1, 12);
        assert_eq!(h[&PosTag::Pre].1, 6);
        assert_eq!(h[&PosTag::Preposition].1, 5);
        assert_eq!(h[&PosTag::Number].1, 1);
    }

    #[test]
    fn short_table_is_rejected() {
        let mut text: Vec<&str> = EMBEDDED.lines().collect();
        text.pop();
        let err = Lexicon::parse(&text.join("\n")).unwrap_err();
        assert_eq!(err, LexiconError::LemmaCount(123));
        assert_eq!(err.to_string(), "lemma count 123 ≠ 124");
    }

    #[test]
    fn tag_mismatch_is_reported() {
        let text = EMBEDDED.replace("tu\tNUMBER\t", "tu\tNOUN\t");
        let err = Lexicon::parse(&text).unwrap_err();
        assert!(matches!(err, LexiconError::TagCount { tag: PosTag::Noun, .. }), "{err}");
    }

    #[test]
    fn malformed_rows() {
        let err = Lexicon::parse_rows("surface\ttags\tsynonym\tsenses\ntoki\tVERB\n").unwrap_err();
        assert!(matches!(err, LexiconError::MalformedRow { line: 2, .. }));
        let err = Lexicon::parse_rows("toki\tVERB\t-\ttalk\n").unwrap_err();
        assert!(matches!(err, LexiconError::MalformedRow { line: 1, .. }));
        let err = Lexicon::parse_rows("surface\ttags\tsynonym\tsenses\ntoki\tVERB,FOO\t-\ttalk\n").unwrap_err();
        assert!(err.to_string().contains("FOO"));
    }

    #[test]
    fn lookup_examples() {
        let lex = Lexicon::embedded();
        assert!(lex.lookup("wile").unwrap().has_tag(PosTag::Pre));
        assert!(lex.lookup("xyz").is_none());
        assert!(lex.lookup("Toki").is_none());
        let toki = lex.lookup("toki").unwrap();
        assert_eq!(phonotactics::syllabify(&toki.surface).unwrap().len(), 2);
    }

    #[test]
    fn content_words_examples() {
        let lex = Lexicon::embedded();
        let content = lex.content_words();
        assert_eq!(content.len(), 107);
        assert!(!content.iter().any(|l| l.surface == "li"));
        assert!(content.iter().any(|l| l.surface == "tawa"));
        assert!(!content.iter().any(|l| l.surface == "lon"));
    }

    #[test]
    fn chosen_is_recomputable() {
        for lemma in Lexicon::embedded().entries() {
            assert_eq!(PosTag::choose(&lemma.tags), Some(lemma.chosen));
        }
    }

    #[test]
    fn canonical_members() {
        let lex = Lexicon::embedded();
        assert_eq!(lex.canonical("oko").unwrap().surface, "lukin");
        assert_eq!(lex.canonical("kin").unwrap().surface, "a");
        assert_eq!(lex.canonical("toki").unwrap().surface, "toki");
    }

    #[test]
    fn tsv_round_trip() {
        let lex = Lexicon::embedded();
        let again = Lexicon::parse(&lex.to_tsv()).unwrap();
        assert_eq!(lex.entries(), again.entries());
    }
}
