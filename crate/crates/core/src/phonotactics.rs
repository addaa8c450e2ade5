//! Syllable structure, word validation and word-space counting.
//!
//! Toki Pona syllables follow `(C)V(n)`: an optional consonant onset, a
//! vowel nucleus and an optional coda `n`. Every syllable after the first
//! must carry an onset, so a word has at most one way to be split.

use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::registry::Registry;

pub const VOWELS: [char; 5] = ['a', 'e', 'i', 'o', 'u'];
pub const CONSONANTS: [char; 9] = ['j', 'k', 'l', 'm', 'n', 'p', 's', 't', 'w'];

/// Longest word (in syllables) accepted by [`count_possible_words`].
pub const MAX_COUNTED_SYLLABLES: usize = 6;

/// Onset/nucleus pairs that never form a syllable.
pub const FORBIDDEN_PAIRS: [(char, char); 4] = [('j', 'i'), ('w', 'u'), ('w', 'o'), ('t', 'i')];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum LetterClass {
    Vowel,
    Consonant,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct Letter {
    pub ch: char,
    pub class: LetterClass,
}

impl Letter {
    pub fn new(ch: char) -> Option<Self> {
        if VOWELS.contains(&ch) {
            Some(Letter { ch, class: LetterClass::Vowel })
        } else if CONSONANTS.contains(&ch) {
            Some(Letter { ch, class: LetterClass::Consonant })
        } else {
            None
        }
    }

    /// The 14 letters: vowels first, then consonants.
    pub fn alphabet() -> impl Iterator<Item = Letter> {
        VOWELS.iter().chain(CONSONANTS.iter()).filter_map(|&c| Letter::new(c))
    }
}

pub fn is_vowel(c: char) -> bool {
    VOWELS.contains(&c)
}

pub fn is_consonant(c: char) -> bool {
    CONSONANTS.contains(&c)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct Syllable {
    pub onset: Option<char>,
    pub nucleus: char,
    pub coda_n: bool,
}

impl Syllable {
    pub fn is_forbidden_pair(&self) -> bool {
        match self.onset {
            Some(c) => FORBIDDEN_PAIRS.contains(&(c, self.nucleus)),
            None => false,
        }
    }

    pub fn len(&self) -> usize {
        1 + usize::from(self.onset.is_some()) + usize::from(self.coda_n)
    }

    pub fn is_empty(&self) -> bool {
        false
    }
}

impl fmt::Display for Syllable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(c) = self.onset {
            write!(f, "{c}")?;
        }
        write!(f, "{}", self.nucleus)?;
        if self.coda_n {
            write!(f, "n")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct SyllabifiedWord {
    syllables: Vec<Syllable>,
}

impl SyllabifiedWord {
    pub fn syllables(&self) -> &[Syllable] {
        &self.syllables
    }

    pub fn len(&self) -> usize {
        self.syllables.len()
    }

    pub fn is_empty(&self) -> bool {
        self.syllables.is_empty()
    }

    pub fn strings(&self) -> Vec<String> {
        self.syllables.iter().map(ToString::to_string).collect()
    }
}

impl fmt::Display for SyllabifiedWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.syllables {
            write!(f, "{s}")?;
        }
        Ok(())
    }
}

/// Why a string is not a (mode-valid) Toki Pona word.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Violation {
    #[error("empty word")]
    Empty,
    #[error("illegal letter {0:?}")]
    IllegalLetter(char),
    #[error("consonant cluster {0}{1}")]
    ConsonantCluster(char, char),
    #[error("vowel {0} without onset after the first syllable")]
    MissingOnset(char),
    #[error("word ends in consonant {0}")]
    FinalConsonant(char),
    #[error("forbidden syllable {0}")]
    ForbiddenSyllable(String),
    #[error("forbidden sequence n{0}")]
    ForbiddenNasalSequence(char),
    #[error("syllable count {0} outside 1..={MAX_COUNTED_SYLLABLES}")]
    SyllableCountOutOfRange(usize),
}

/// Splits a word into `(C)V(n)` syllables without checking the forbidden
/// sequences. `n` is a coda when it is word-final or precedes a consonant.
pub fn parse_syllables(word: &str) -> Result<Vec<Syllable>, Violation> {
    let chars: Vec<char> = word.chars().collect();
    if chars.is_empty() {
        return Err(Violation::Empty);
    }
    if let Some(&bad) = chars.iter().find(|c| !is_vowel(**c) && !is_consonant(**c)) {
        return Err(Violation::IllegalLetter(bad));
    }
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let onset = if is_consonant(c) {
            match chars.get(i + 1) {
                None => return Err(Violation::FinalConsonant(c)),
                Some(&next) if is_consonant(next) => {
                    return Err(Violation::ConsonantCluster(c, next))
                }
                Some(_) => {
                    i += 1;
                    Some(c)
                }
            }
        } else {
            if !out.is_empty() {
                return Err(Violation::MissingOnset(c));
            }
            None
        };
        let nucleus = chars[i];
        i += 1;
        let coda_n = chars.get(i) == Some(&'n')
            && chars.get(i + 1).is_none_or(|&next| is_consonant(next));
        if coda_n {
            i += 1;
        }
        out.push(Syllable { onset, nucleus, coda_n });
    }
    Ok(out)
}

fn nasal_conflict(syllables: &[Syllable]) -> Option<char> {
    syllables.windows(2).find_map(|w| match (w[0].coda_n, w[1].onset) {
        (true, Some(c @ ('n' | 'm'))) => Some(c),
        _ => None,
    })
}

/// Deterministic split of a lowercase word into syllables. Rejects the
/// forbidden `nn`/`nm` sequences but not the onset/nucleus pairs, which
/// depend on the counting mode (see [`validate_word`]).
pub fn syllabify(word: &str) -> Result<SyllabifiedWord, Violation> {
    let syllables = parse_syllables(word)?;
    if let Some(c) = nasal_conflict(&syllables) {
        return Err(Violation::ForbiddenNasalSequence(c));
    }
    Ok(SyllabifiedWord { syllables })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum CountingMode {
    /// Only the codaless syllables ji, wu, wo, ti are excluded; nn/nm across
    /// syllables is not subtracted. Reproduces 96 / 8256 / 710016.
    PaperCompatible,
    /// ji, wu, wo, ti are excluded with or without coda, and nn/nm across a
    /// syllable boundary is rejected.
    Strict,
}

impl CountingMode {
    pub const ALL: [CountingMode; 2] = [CountingMode::PaperCompatible, CountingMode::Strict];

    pub fn name(self) -> &'static str {
        match self {
            CountingMode::PaperCompatible => "paper",
            CountingMode::Strict => "strict",
        }
    }

    pub fn rules(self) -> &'static dyn PhonotacticRules {
        match self {
            CountingMode::PaperCompatible => &PaperCompatibleRules,
            CountingMode::Strict => &StrictRules,
        }
    }
}

impl std::str::FromStr for CountingMode {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "paper" | "paper-compatible" | "paper_compatible" => Ok(CountingMode::PaperCompatible),
            "strict" => Ok(CountingMode::Strict),
            other => Err(format!("unknown counting mode {other:?} (expected paper|strict)")),
        }
    }
}

/// One reading of the forbidden-sequence rule.
pub trait PhonotacticRules: Send + Sync {
    fn name(&self) -> &'static str;

    /// Checks an already split word against the mode's constraints.
    fn check(&self, syllables: &[Syllable]) -> Result<(), Violation>;

    /// Number of words with exactly `n` syllables.
    fn count(&self, n: usize) -> u64;
}

pub struct PaperCompatibleRules;

impl PhonotacticRules for PaperCompatibleRules {
    fn name(&self) -> &'static str {
        "paper"
    }

    fn check(&self, syllables: &[Syllable]) -> Result<(), Violation> {
        match syllables.iter().find(|s| !s.coda_n && s.is_forbidden_pair()) {
            Some(s) => Err(Violation::ForbiddenSyllable(s.to_string())),
            None => Ok(()),
        }
    }

    fn count(&self, n: usize) -> u64 {
        // 10 onsets (incl. none) x 5 vowels x 2 codas, minus the 4 pairs;
        // later syllables have 9 onsets.
        let first = 10 * 5 * 2 - 4;
        let later: u64 = 9 * 5 * 2 - 4;
        first * later.pow(n as u32 - 1)
    }
}

pub struct StrictRules;

impl PhonotacticRules for StrictRules {
    fn name(&self) -> &'static str {
        "strict"
    }

    fn check(&self, syllables: &[Syllable]) -> Result<(), Violation> {
        if let Some(s) = syllables.iter().find(|s| s.is_forbidden_pair()) {
            return Err(Violation::ForbiddenSyllable(s.to_string()));
        }
        match nasal_conflict(syllables) {
            Some(c) => Err(Violation::ForbiddenNasalSequence(c)),
            None => Ok(()),
        }
    }

    fn count(&self, n: usize) -> u64 {
        // State: whether the previous syllable ends in n.
        // First syllable: 92 legal, half of them with coda.
        let mut open: u64 = 46;
        let mut closed: u64 = 46;
        for _ in 1..n {
            // Later syllables: 9 onsets x 5 vowels minus 4 pairs = 41 per coda choice.
            // Of those, onsets n and m give 10 per coda choice.
            let next_open = open * 41 + closed * (41 - 10);
            let next_closed = open * 41 + closed * (41 - 10);
            open = next_open;
            closed = next_closed;
        }
        open + closed
    }
}

pub fn rules_registry() -> Registry<dyn PhonotacticRules> {
    let mut reg: Registry<dyn PhonotacticRules> = Registry::new();
    reg.register("paper", Box::new(PaperCompatibleRules));
    reg.register("strict", Box::new(StrictRules));
    reg
}

/// Validates `word` under `mode`, returning its syllables on success.
pub fn validate_word(word: &str, mode: CountingMode) -> Result<Vec<Syllable>, Violation> {
    let syllables = parse_syllables(word)?;
    mode.rules().check(&syllables)?;
    Ok(syllables)
}

pub fn is_valid_word(word: &str, mode: CountingMode) -> bool {
    validate_word(word, mode).is_ok()
}

/// Exact number of distinct letter strings with `n_syllables` syllables
/// that validate under `mode`.
pub fn count_possible_words(n_syllables: usize, mode: CountingMode) -> Result<u64, Violation> {
    if !(1..=MAX_COUNTED_SYLLABLES).contains(&n_syllables) {
        return Err(Violation::SyllableCountOutOfRange(n_syllables));
    }
    Ok(mode.rules().count(n_syllables))
}

/// A capitalised name transliterated into Toki Pona phonotactics.
pub fn validate_proper_noun(word: &str) -> bool {
    let mut chars = word.chars();
    let Some(first) = chars.next() else {
        return false;
    };
    if !first.is_uppercase() || chars.clone().any(char::is_uppercase) {
        return false;
    }
    let lowered: String = first.to_lowercase().chain(chars).collect();
    is_valid_word(&lowered, CountingMode::Strict)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn split(word: &str) -> Vec<String> {
        syllabify(word).unwrap().strings()
    }

    #[test]
    fn alphabet_has_fourteen_letters() {
        let letters: Vec<Letter> = Letter::alphabet().collect();
        assert_eq!(letters.len(), 14);
        assert_eq!(letters.iter().filter(|l| l.class == LetterClass::Vowel).count(), 5);
    }

    #[test]
    fn syllabify_examples() {
        assert_eq!(split("toki"), ["to", "ki"]);
        assert_eq!(split("sitelen"), ["si", "te", "len"]);
        assert_eq!(split("kepeken"), ["ke", "pe", "ken"]);
        assert_eq!(split("sinpin"), ["sin", "pin"]);
        assert_eq!(split("ona"), ["o", "na"]);
        assert_eq!(split("a"), ["a"]);
        assert_eq!(split("anpa"), ["an", "pa"]);
    }

    #[test]
    fn syllabify_errors() {
        assert_eq!(syllabify("nnama"), Err(Violation::ConsonantCluster('n', 'n')));
        assert_eq!(syllabify("panna"), Err(Violation::ForbiddenNasalSequence('n')));
        assert_eq!(syllabify("kanmi"), Err(Violation::ForbiddenNasalSequence('m')));
        assert_eq!(syllabify("tok"), Err(Violation::FinalConsonant('k')));
        assert_eq!(syllabify("aa"), Err(Violation::MissingOnset('a')));
        assert_eq!(syllabify("pxna"), Err(Violation::IllegalLetter('x')));
        assert_eq!(syllabify(""), Err(Violation::Empty));
        assert_eq!(syllabify("kta"), Err(Violation::ConsonantCluster('k', 't')));
    }

    #[test]
    fn validate_modes() {
        assert!(is_valid_word("pona", CountingMode::Strict));
        let err = validate_word("wuta", CountingMode::Strict).unwrap_err();
        assert_eq!(err.to_string(), "forbidden syllable wu");
        assert!(is_valid_word("jin", CountingMode::PaperCompatible));
        assert!(!is_valid_word("jin", CountingMode::Strict));
        assert!(!is_valid_word("ti", CountingMode::PaperCompatible));
        assert!(is_valid_word("panna", CountingMode::PaperCompatible));
        assert!(!is_valid_word("panna", CountingMode::Strict));
    }

    #[test]
    fn counts() {
        let paper = CountingMode::PaperCompatible;
        assert_eq!(count_possible_words(1, paper), Ok(96));
        assert_eq!(count_possible_words(2, paper), Ok(8256));
        assert_eq!(count_possible_words(3, paper), Ok(710016));
        assert_eq!(count_possible_words(2, CountingMode::Strict), Ok(6624));
        assert!(count_possible_words(0, paper).is_err());
        assert!(count_possible_words(7, paper).is_err());
    }

    #[test]
    fn proper_nouns() {
        assert!(validate_proper_noun("Pije"));
        assert!(validate_proper_noun("Sonja"));
        assert!(!validate_proper_noun("pije"));
        assert!(!validate_proper_noun("Xena"));
        assert!(!validate_proper_noun("PIje"));
        assert!(validate_proper_noun("Kipo"));
    }

    #[test]
    fn registry_has_both_modes() {
        let reg = rules_registry();
        assert_eq!(reg.names().collect::<Vec<_>>(), ["paper", "strict"]);
        assert_eq!(reg.get("strict").unwrap().count(1), 92);
    }
}
