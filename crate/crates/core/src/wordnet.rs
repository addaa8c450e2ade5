//! Mapping of lexicon words to Princeton WordNet synsets.
//!
//! The database is read from the standard WNDB files (`index.*`, `data.*`
//! and, when present, the `*.exc` morphological exception lists).

use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet};
use std::fmt;
use std::fs;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use serde::Serialize;
use thiserror::Error;

use crate::lexicon::{Lemma, Lexicon, PosTag};
use crate::registry::Registry;

/// Environment variable naming the WordNet database directory.
pub const WORDNET_DIR_VAR: &str = "TOKIPONA_WORDNET_DIR";
pub const DEFAULT_WORDNET_DIR: &str = "/root/wordnet/wordnet-3.0";
pub const WORDNET_30_SYNSETS: usize = 117_659;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum WnPos {
    Noun,
    Verb,
    Adj,
    Adv,
}

impl WnPos {
    pub const ALL: [WnPos; 4] = [WnPos::Noun, WnPos::Verb, WnPos::Adj, WnPos::Adv];

    pub fn file_suffix(self) -> &'static str {
        match self {
            WnPos::Noun => "noun",
            WnPos::Verb => "verb",
            WnPos::Adj => "adj",
            WnPos::Adv => "adv",
        }
    }

    pub fn letter(self) -> char {
        match self {
            WnPos::Noun => 'n',
            WnPos::Verb => 'v',
            WnPos::Adj => 'a',
            WnPos::Adv => 'r',
        }
    }

    fn index(self) -> usize {
        self as usize
    }

    fn substitutions(self) -> &'static [(&'static str, &'static str)] {
        match self {
            WnPos::Noun => &[
                ("s", ""),
                ("ses", "s"),
                ("ves", "f"),
                ("xes", "x"),
                ("zes", "z"),
                ("ches", "ch"),
                ("shes", "sh"),
                ("men", "man"),
                ("ies", "y"),
            ],
            WnPos::Verb => &[
                ("s", ""),
                ("ies", "y"),
                ("es", "e"),
                ("es", ""),
                ("ed", "e"),
                ("ed", ""),
                ("ing", "e"),
                ("ing", ""),
            ],
            WnPos::Adj => &[("er", ""), ("est", ""), ("er", "e"), ("est", "e")],
            WnPos::Adv => &[],
        }
    }
}

impl fmt::Display for WnPos {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            WnPos::Noun => "NOUN",
            WnPos::Verb => "VERB",
            WnPos::Adj => "ADJ",
            WnPos::Adv => "ADV",
        })
    }
}

/// A synset, identified by its data file and byte offset.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct SynsetRef {
    pub pos: WnPos,
    pub offset: u32,
}

impl fmt::Display for SynsetRef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:08}-{}", self.offset, self.pos.letter())
    }
}

#[derive(Debug, Error)]
pub enum WordnetError {
    #[error("missing WordNet file {0}")]
    Missing(PathBuf),
    #[error("{file}:{line}: {message}")]
    Corrupt { file: PathBuf, line: usize, message: String },
    #[error("reading {file}: {source}")]
    Io { file: PathBuf, source: std::io::Error },
    #[error("unknown mapping mode {0:?} (expected all, noprep or matched)")]
    UnknownMode(String),
    #[error("unknown gloss lookup {0:?} (expected words or collocation)")]
    UnknownLookup(String),
}

pub struct WordnetDb {
    dir: PathBuf,
    index: HashMap<(String, WnPos), Vec<u32>>,
    exceptions: [HashMap<String, Vec<String>>; 4],
    synsets: [usize; 4],
    satellites: HashSet<u32>,
    version: Option<String>,
}

impl fmt::Debug for WordnetDb {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("WordnetDb")
            .field("dir", &self.dir)
            .field("lemmas", &self.index.len())
            .field("synsets", &self.total_synsets())
            .finish()
    }
}

fn read(path: &Path) -> Result<String, WordnetError> {
    if !path.exists() {
        return Err(WordnetError::Missing(path.to_path_buf()));
    }
    fs::read_to_string(path).map_err(|source| WordnetError::Io { file: path.to_path_buf(), source })
}

/// License header lines start with two spaces.
fn body_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter(|(_, l)| !l.starts_with("  ") && !l.trim().is_empty()).map(|(i, l)| (i + 1, l))
}

fn parse_offset(s: &str) -> Option<u32> {
    (s.len() == 8 && s.bytes().all(|b| b.is_ascii_digit())).then(|| s.parse().ok()).flatten()
}

/// Loads a WordNet database directory.
pub fn load_wordnet_db(dir: &Path) -> Result<WordnetDb, WordnetError> {
    for pos in WnPos::ALL {
        for kind in ["index", "data"] {
            let p = dir.join(format!("{kind}.{}", pos.file_suffix()));
            if !p.exists() {
                return Err(WordnetError::Missing(p));
            }
        }
    }
    let mut db = WordnetDb {
        dir: dir.to_path_buf(),
        index: HashMap::new(),
        exceptions: Default::default(),
        synsets: [0; 4],
        satellites: HashSet::new(),
        version: None,
    };
    for pos in WnPos::ALL {
        let file = dir.join(format!("index.{}", pos.file_suffix()));
        let text = read(&file)?;
        for (line, l) in body_lines(&text) {
            let corrupt = |message: &str| WordnetError::Corrupt { file: file.clone(), line, message: message.into() };
            // lemma pos synset_cnt p_cnt ptr_symbol... sense_cnt tagsense_cnt offset...
            let t: Vec<&str> = l.split_whitespace().collect();
            let p_cnt: usize = t.get(3).and_then(|s| s.parse().ok()).ok_or_else(|| corrupt("bad pointer count"))?;
            let synset_cnt: usize = t.get(2).and_then(|s| s.parse().ok()).ok_or_else(|| corrupt("bad synset count"))?;
            let first = 4 + p_cnt + 2;
            if t.len() != first + synset_cnt {
                return Err(corrupt("field count does not match synset count"));
            }
            let offsets = t[first..].iter().map(|s| parse_offset(s)).collect::<Option<Vec<u32>>>().ok_or_else(|| corrupt("bad offset"))?;
            db.index.insert((t[0].to_string(), pos), offsets);
        }

        let file = dir.join(format!("data.{}", pos.file_suffix()));
        let text = read(&file)?;
        if db.version.is_none() {
            db.version = text.lines().take(40).find_map(|l| {
                let i = l.find("WordNet ")?;
                l[i..].split_whitespace().nth(1).map(str::to_string)
            });
        }
        for (line, l) in body_lines(&text) {
            let mut t = l.split_whitespace();
            let offset = t.next().and_then(parse_offset);
            let ss_type = t.nth(1);
            let (Some(offset), Some(ss_type)) = (offset, ss_type) else {
                return Err(WordnetError::Corrupt { file: file.clone(), line, message: "bad synset line".into() });
            };
            if ss_type == "s" {
                db.satellites.insert(offset);
            }
            db.synsets[pos.index()] += 1;
        }

        let file = dir.join(format!("{}.exc", pos.file_suffix()));
        if file.exists() {
            let text = read(&file)?;
            for l in text.lines() {
                let mut t = l.split_whitespace();
                if let Some(form) = t.next() {
                    db.exceptions[pos.index()].entry(form.to_string()).or_default().extend(t.map(str::to_string));
                }
            }
        }
    }
    Ok(db)
}

/// Database directory from the environment, or the default location.
pub fn default_db_dir() -> PathBuf {
    std::env::var_os(WORDNET_DIR_VAR).map(PathBuf::from).unwrap_or_else(|| PathBuf::from(DEFAULT_WORDNET_DIR))
}

impl WordnetDb {
    pub fn total_synsets(&self) -> usize {
        self.synsets.iter().sum()
    }

    pub fn synset_count(&self, pos: WnPos) -> usize {
        self.synsets[pos.index()]
    }

    pub fn version(&self) -> Option<&str> {
        self.version.as_deref()
    }

    /// Warning text when the database is not WordNet 3.0.
    pub fn version_warning(&self) -> Option<String> {
        match self.version() {
            Some("3.0") => None,
            Some(v) => Some(format!("WordNet version {v}; reference counts assume 3.0")),
            None => Some("no WordNet version line found".into()),
        }
    }

    pub fn is_satellite(&self, s: SynsetRef) -> bool {
        s.pos == WnPos::Adj && self.satellites.contains(&s.offset)
    }

    /// Index entry for an exact lemma form.
    pub fn lookup(&self, lemma: &str, pos: WnPos) -> &[u32] {
        self.index.get(&(lemma.to_string(), pos)).map_or(&[], Vec::as_slice)
    }

    fn has(&self, form: &str, pos: WnPos) -> bool {
        self.index.contains_key(&(form.to_string(), pos))
    }

    /// Base forms of `form` present in the index, exceptions first, then
    /// the form itself and the suffix rules.
    pub fn morphy(&self, form: &str, pos: WnPos) -> Vec<String> {
        let candidates: Vec<String> = match self.exceptions[pos.index()].get(form) {
            Some(exc) => std::iter::once(form.to_string()).chain(exc.iter().cloned()).collect(),
            None => std::iter::once(form.to_string())
                .chain(
                    pos.substitutions()
                        .iter()
                        .filter_map(|(old, new)| form.strip_suffix(old).map(|stem| format!("{stem}{new}"))),
                )
                .collect(),
        };
        let mut out: Vec<String> = Vec::new();
        for c in candidates {
            if self.has(&c, pos) && !out.contains(&c) {
                out.push(c);
            }
        }
        out
    }

    /// Synsets of an English word or underscore-joined collocation.
    pub fn synsets(&self, word: &str, pos: WnPos) -> Vec<SynsetRef> {
        let word = word.to_lowercase();
        let mut out = Vec::new();
        for base in self.morphy(&word, pos) {
            for &offset in self.lookup(&base, pos) {
                let s = SynsetRef { pos, offset };
                if !out.contains(&s) {
                    out.push(s);
                }
            }
        }
        out
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum MappingMode {
    All,
    NoPrepositions,
    MatchedPos,
}

impl MappingMode {
    pub const ALL: [MappingMode; 3] = [MappingMode::All, MappingMode::NoPrepositions, MappingMode::MatchedPos];

    pub fn as_str(self) -> &'static str {
        match self {
            MappingMode::All => "all",
            MappingMode::NoPrepositions => "noprep",
            MappingMode::MatchedPos => "matched",
        }
    }
}

impl fmt::Display for MappingMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for MappingMode {
    type Err = WordnetError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        MappingMode::ALL.into_iter().find(|m| m.as_str() == s).ok_or_else(|| WordnetError::UnknownMode(s.into()))
    }
}

/// How a multiword English gloss is looked up.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub enum GlossLookup {
    /// The underscore-joined collocation plus each constituent word.
    #[default]
    CollocationAndWords,
    /// Only the underscore-joined collocation.
    CollocationOnly,
}

impl GlossLookup {
    pub fn as_str(self) -> &'static str {
        match self {
            GlossLookup::CollocationAndWords => "words",
            GlossLookup::CollocationOnly => "collocation",
        }
    }

    pub fn forms(self, gloss: &str) -> Vec<String> {
        let words: Vec<&str> = gloss.split_whitespace().collect();
        let mut forms = vec![words.join("_")];
        if self == GlossLookup::CollocationAndWords && words.len() > 1 {
            forms.extend(words.iter().map(|w| w.to_string()));
        }
        forms
    }
}

impl FromStr for GlossLookup {
    type Err = WordnetError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        [GlossLookup::CollocationAndWords, GlossLookup::CollocationOnly]
            .into_iter()
            .find(|m| m.as_str() == s)
            .ok_or_else(|| WordnetError::UnknownLookup(s.into()))
    }
}

/// Which lemmas take part in a mapping and under which WordNet classes.
pub trait MappingStrategy: Send + Sync {
    fn name(&self) -> &'static str;
    fn pos_classes(&self, lemma: &Lemma) -> BTreeSet<WnPos>;
}

fn every_pos(lemma: &Lemma) -> BTreeSet<WnPos> {
    if lemma.is_pure_particle() {
        BTreeSet::new()
    } else {
        WnPos::ALL.into_iter().collect()
    }
}

/// Every WordNet class for each non-particle lemma.
pub struct AllStrategy;

impl MappingStrategy for AllStrategy {
    fn name(&self) -> &'static str {
        "all"
    }

    fn pos_classes(&self, lemma: &Lemma) -> BTreeSet<WnPos> {
        every_pos(lemma)
    }
}

/// As `all`, without preposition-tagged lemmas.
pub struct NoPrepositionsStrategy;

impl MappingStrategy for NoPrepositionsStrategy {
    fn name(&self) -> &'static str {
        "noprep"
    }

    fn pos_classes(&self, lemma: &Lemma) -> BTreeSet<WnPos> {
        if lemma.has_tag(PosTag::Preposition) {
            BTreeSet::new()
        } else {
            every_pos(lemma)
        }
    }
}

/// Only classes equal to a dictionary tag. Pre-verbs and prepositions
/// have no WordNet class.
pub struct MatchedStrategy;

impl MappingStrategy for MatchedStrategy {
    fn name(&self) -> &'static str {
        "matched"
    }

    fn pos_classes(&self, lemma: &Lemma) -> BTreeSet<WnPos> {
        lemma
            .tags
            .iter()
            .filter_map(|t| match t {
                PosTag::Noun => Some(WnPos::Noun),
                PosTag::Verb => Some(WnPos::Verb),
                PosTag::Adjective | PosTag::Number => Some(WnPos::Adj),
                _ => None,
            })
            .collect()
    }
}

/// Adjectives also as adverbs, numbers as adjectives, prepositions in
/// every class, pre-verbs through their other tags.
pub struct ExpandedStrategy;

impl MappingStrategy for ExpandedStrategy {
    fn name(&self) -> &'static str {
        "expanded"
    }

    fn pos_classes(&self, lemma: &Lemma) -> BTreeSet<WnPos> {
        let mut out = BTreeSet::new();
        for t in &lemma.tags {
            match t {
                PosTag::Noun => {
                    out.insert(WnPos::Noun);
                }
                PosTag::Verb => {
                    out.insert(WnPos::Verb);
                }
                PosTag::Adjective => out.extend([WnPos::Adj, WnPos::Adv]),
                PosTag::Number => {
                    out.insert(WnPos::Adj);
                }
                PosTag::Preposition => out.extend(WnPos::ALL),
                PosTag::Pre | PosTag::Particle => {}
            }
        }
        out
    }
}

pub fn strategies() -> Registry<dyn MappingStrategy> {
    let mut r: Registry<dyn MappingStrategy> = Registry::new();
    r.register("all", Box::new(AllStrategy));
    r.register("noprep", Box::new(NoPrepositionsStrategy));
    r.register("matched", Box::new(MatchedStrategy));
    r.register("expanded", Box::new(ExpandedStrategy));
    r
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TPWordnet {
    /// Mode name: a `MappingMode` or another registered strategy.
    pub mode: String,
    pub lookup: GlossLookup,
    pub map: BTreeMap<String, BTreeSet<SynsetRef>>,
    pub total_synsets: usize,
    /// (lemma, gloss) pairs that matched no synset.
    pub unmatched: Vec<(String, String)>,
    pub glosses_looked_up: usize,
}

pub fn build_mapping(lex: &Lexicon, db: &WordnetDb, mode: MappingMode) -> TPWordnet {
    build_mapping_with(lex, db, mode.as_str(), GlossLookup::default()).expect("built-in strategy")
}

/// Builds a mapping with a registered strategy.
pub fn build_mapping_with(lex: &Lexicon, db: &WordnetDb, strategy: &str, lookup: GlossLookup) -> Result<TPWordnet, WordnetError> {
    let registry = strategies();
    let s = registry.get(strategy).ok_or_else(|| WordnetError::UnknownMode(strategy.into()))?;
    let mut map = BTreeMap::new();
    let mut unmatched = Vec::new();
    let mut glosses = 0;
    for lemma in lex.entries() {
        let classes = s.pos_classes(lemma);
        if classes.is_empty() {
            continue;
        }
        let mut set = BTreeSet::new();
        for gloss in lemma.senses.iter().flat_map(|s| &s.english_lemmas) {
            glosses += 1;
            let mut hit = false;
            for form in lookup.forms(gloss) {
                for &pos in &classes {
                    let found = db.synsets(&form, pos);
                    hit |= !found.is_empty();
                    set.extend(found);
                }
            }
            if !hit {
                unmatched.push((lemma.surface.clone(), gloss.clone()));
            }
        }
        map.insert(lemma.surface.clone(), set);
    }
    let total_synsets = map.values().flatten().collect::<HashSet<_>>().len();
    Ok(TPWordnet { mode: strategy.to_string(), lookup, map, total_synsets, unmatched, glosses_looked_up: glosses })
}

impl TPWordnet {
    /// Empty for particles and unknown words.
    pub fn synsets_of(&self, word: &str) -> BTreeSet<SynsetRef> {
        self.map.get(word).cloned().unwrap_or_default()
    }

    pub fn coverage_report(&self) -> String {
        let mut out = format!(
            "mode {} lookup {}: {} lemmas, {} synsets, {} of {} glosses unmatched\n",
            self.mode,
            self.lookup.as_str(),
            self.map.len(),
            self.total_synsets,
            self.unmatched.len(),
            self.glosses_looked_up
        );
        for (lemma, gloss) in &self.unmatched {
            out.push_str(&format!("{lemma}\t{gloss}\n"));
        }
        out
    }

    /// Rows of `lemma mode pos synset`, with header.
    pub fn to_tsv(&self) -> String {
        let mut out = String::from("lemma\tmode\tpos\tsynset\n");
        for (lemma, set) in &self.map {
            for s in set {
                out.push_str(&format!("{lemma}\t{}\t{}\t{:08}\n", self.mode, s.pos, s.offset));
            }
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RelationTable {
    /// (hyponym, hypernym)
    pub hyponyms: Vec<(String, String)>,
    pub antonyms: Vec<(String, String)>,
}

const HYPONYMS: [(&str, &str); 7] = [
    ("jan", "soweli"),
    ("kili", "kasi"),
    ("walo", "kule"),
    ("pimeja", "kule"),
    ("jelo", "kule"),
    ("loje", "kule"),
    ("laso", "kule"),
];

const ANTONYMS: [(&str, &str); 14] = [
    ("suno", "mun"),
    ("pona", "jaki"),
    ("pona", "ike"),
    ("sinpin", "monsi"),
    ("lawa", "noka"),
    ("mije", "meli"),
    ("sike", "palisa"),
    ("pana", "kama jo"),
    ("pimeja", "walo"),
    ("weka", "poka"),
    ("sama", "ante"),
    ("ali", "ala"),
    ("anu", "e"),
    ("selo", "insa"),
];

pub fn relations() -> RelationTable {
    let own = |t: &[(&str, &str)]| t.iter().map(|(a, b)| (a.to_string(), b.to_string())).collect();
    RelationTable { hyponyms: own(&HYPONYMS), antonyms: own(&ANTONYMS) }
}

impl RelationTable {
    pub fn is_hyponym(&self, hypo: &str, hyper: &str) -> bool {
        self.hyponyms.iter().any(|(a, b)| a == hypo && b == hyper)
    }

    /// Symmetric.
    pub fn is_antonym(&self, a: &str, b: &str) -> bool {
        self.antonyms.iter().any(|(x, y)| (x == a && y == b) || (x == b && y == a))
    }

    /// Single-word antonyms of `word`; phrase members are left out.
    pub fn antonyms_of(&self, word: &str) -> Vec<&str> {
        let mut out: Vec<&str> = self
            .antonyms
            .iter()
            .filter_map(|(x, y)| if x == word { Some(y.as_str()) } else if y == word { Some(x.as_str()) } else { None })
            .filter(|w| !w.contains(' '))
            .collect();
        out.sort();
        out
    }

    pub fn hypernyms_of(&self, word: &str) -> Vec<&str> {
        self.hyponyms.iter().filter(|(a, _)| a == word).map(|(_, b)| b.as_str()).collect()
    }

    /// Members that are not lexicon words (phrases are checked word by word).
    pub fn unknown_members(&self, lex: &Lexicon) -> Vec<String> {
        self.hyponyms
            .iter()
            .chain(&self.antonyms)
            .flat_map(|(a, b)| [a, b])
            .filter(|m| m.split(' ').any(|w| !lex.contains(w)))
            .cloned()
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::sync::OnceLock;

    fn db() -> Option<&'static WordnetDb> {
        static DB: OnceLock<Option<WordnetDb>> = OnceLock::new();
        DB.get_or_init(|| load_wordnet_db(&default_db_dir()).ok()).as_ref()
    }

    macro_rules! need_db {
        () => {
            match db() {
                Some(d) => d,
                None => {
                    eprintln!("NOT RUN: no WordNet database at {}", default_db_dir().display());
                    return;
                }
            }
        };
    }

    fn tiny_db(skip: Option<&str>) -> tempfile::TempDir {
        let dir = tempfile::tempdir().unwrap();
        let files = [
            ("index.noun", "  1 header\ndog n 2 1 @ 2 1 00000001 00000002  \ndogs_body n 1 0 1 0 00000003  \n"),
            ("data.noun", "  1 WordNet 3.0 Copyright\n00000001 05 n 01 dog 0 000 | a dog  \n00000002 05 n 01 dog 0 000 | x  \n00000003 05 n 01 dogs_body 0 000 | y  \n"),
            ("index.verb", "dog v 1 0 1 0 00000004  \n"),
            ("data.verb", "00000004 29 v 01 dog 0 000 | follow  \n"),
            ("index.adj", "big a 1 0 1 0 00000005  \n"),
            ("data.adj", "00000005 00 s 01 big 0 000 | large  \n"),
            ("index.adv", ""),
            ("data.adv", ""),
            ("noun.exc", "geese goose\n"),
        ];
        for (name, body) in files {
            if Some(name) != skip {
                fs::write(dir.path().join(name), body).unwrap();
            }
        }
        dir
    }

    #[test]
    fn tiny_database() {
        let dir = tiny_db(None);
        let db = load_wordnet_db(dir.path()).unwrap();
        assert_eq!(db.total_synsets(), 5);
        assert_eq!(db.version(), Some("3.0"));
        assert_eq!(db.lookup("dog", WnPos::Noun), &[1, 2]);
        assert_eq!(db.synsets("Dogs", WnPos::Noun).len(), 2);
        assert_eq!(db.synsets("dogs", WnPos::Verb), vec![SynsetRef { pos: WnPos::Verb, offset: 4 }]);
        assert!(db.synsets("dogged", WnPos::Verb).is_empty());
        assert!(db.synsets("geese", WnPos::Noun).is_empty());
        assert_eq!(db.synsets("big", WnPos::Adj).len(), 1);
        assert!(db.is_satellite(SynsetRef { pos: WnPos::Adj, offset: 5 }));
    }

    #[test]
    fn missing_file_is_named() {
        let dir = tiny_db(Some("data.verb"));
        let err = load_wordnet_db(dir.path()).unwrap_err();
        assert!(err.to_string().contains("data.verb"), "{err}");
    }

    #[test]
    fn corrupt_index_is_reported() {
        let dir = tiny_db(None);
        fs::write(dir.path().join("index.verb"), "dog v 3 0 1 0 00000004\n").unwrap();
        assert!(matches!(load_wordnet_db(dir.path()), Err(WordnetError::Corrupt { line: 1, .. })));
    }

    #[test]
    fn gloss_forms() {
        assert_eq!(GlossLookup::CollocationOnly.forms("human being"), vec!["human_being"]);
        assert_eq!(GlossLookup::CollocationAndWords.forms("human being"), vec!["human_being", "human", "being"]);
        assert_eq!(GlossLookup::CollocationAndWords.forms("dog"), vec!["dog"]);
    }

    #[test]
    fn strategy_classes() {
        let lex = Lexicon::embedded();
        let classes = |s: &dyn MappingStrategy, w: &str| s.pos_classes(lex.lookup(w).unwrap());
        assert!(classes(&AllStrategy, "li").is_empty());
        assert_eq!(classes(&AllStrategy, "taso").len(), 4);
        assert!(classes(&NoPrepositionsStrategy, "tawa").is_empty());
        assert_eq!(classes(&MatchedStrategy, "wan"), [WnPos::Adj].into());
        assert!(classes(&MatchedStrategy, "kepeken").is_empty());
        assert_eq!(classes(&ExpandedStrategy, "kepeken").len(), 4);
        assert_eq!(classes(&ExpandedStrategy, "pona"), [WnPos::Adj, WnPos::Adv].into());
    }

    #[test]
    fn relation_table() {
        let r = relations();
        assert!(r.is_hyponym("jan", "soweli"));
        assert!(!r.is_hyponym("soweli", "jan"));
        assert!(r.is_antonym("suno", "mun") && r.is_antonym("mun", "suno"));
        assert!(r.is_antonym("kama jo", "pana"));
        assert!(r.antonyms_of("pana").is_empty());
        assert_eq!(r.antonyms_of("pona"), vec!["ike", "jaki"]);
        assert!(r.hyponyms.iter().all(|(a, b)| a != b));
        assert!(r.unknown_members(&Lexicon::embedded()).is_empty());
    }

    #[test]
    fn real_database_counts() {
        let db = need_db!();
        assert_eq!(db.total_synsets(), WORDNET_30_SYNSETS);
        assert!(db.version_warning().is_none());
        assert!(!db.synsets("dog", WnPos::Noun).is_empty());
        let lex = Lexicon::embedded();
        let totals: Vec<usize> = MappingMode::ALL.iter().map(|&m| build_mapping(&lex, db, m).total_synsets).collect();
        assert_eq!(totals, vec![4053, 3916, 2519]);
    }

    #[test]
    fn real_database_laws() {
        let db = need_db!();
        let lex = Lexicon::embedded();
        let all = build_mapping(&lex, db, MappingMode::All);
        let noprep = build_mapping(&lex, db, MappingMode::NoPrepositions);
        let matched = build_mapping(&lex, db, MappingMode::MatchedPos);
        assert!(all.synsets_of("li").is_empty());
        assert!(all.synsets_of("xyz").is_empty());
        for (w, set) in &noprep.map {
            assert_eq!(set, &all.map[w]);
        }
        for l in lex.entries() {
            let expected = !l.has_tag(PosTag::Preposition);
            assert_eq!(noprep.map.contains_key(&l.surface), expected && all.map.contains_key(&l.surface));
            assert!(matched.synsets_of(&l.surface).is_subset(&all.synsets_of(&l.surface)));
        }
        assert!(matched.synsets_of("wan").iter().all(|s| s.pos == WnPos::Adj));
        assert!(!matched.synsets_of("wan").is_empty());
        let tsv = matched.to_tsv();
        assert_eq!(tsv.lines().count(), 1 + matched.map.values().map(BTreeSet::len).sum::<usize>());
    }
}
