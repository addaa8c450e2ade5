//! Vocabulary statistics: POS histograms, syllable and letter frequencies,
//! word lengths and the sentence-space formula.
//!
//! Counts are the source of truth. Percentages are kept as exact fractions
//! and only rounded (half up, two decimals) when displayed.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::lexicon::{Lexicon, PosTag};
use crate::phonotactics::{self, CONSONANTS, VOWELS};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum StatsError {
    #[error("sentence needs at least one non-empty phrase")]
    EmptySentence,
    #[error("sentence space overflows 128 bits")]
    Overflow,
}

/// An exact ratio `num / den` shown as a percentage.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Percent {
    pub num: u64,
    pub den: u64,
}

impl Percent {
    pub fn new(num: u64, den: u64) -> Self {
        Percent { num, den }
    }

    /// Percentage in hundredths of a percent, rounded half up.
    pub fn hundredths(self) -> u64 {
        if self.den == 0 {
            return 0;
        }
        (self.num * 20_000 + self.den) / (2 * self.den)
    }

    pub fn as_f64(self) -> f64 {
        if self.den == 0 {
            0.0
        } else {
            self.num as f64 * 100.0 / self.den as f64
        }
    }
}

impl fmt::Display for Percent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let h = self.hundredths();
        write!(f, "{}.{:02}%", h / 100, h % 100)
    }
}

impl Serialize for Percent {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let h = self.hundredths();
        s.serialize_str(&format!("{}.{:02}", h / 100, h % 100))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PosRow {
    pub tag: PosTag,
    pub all: usize,
    pub chosen: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PosHistogram {
    pub rows: Vec<PosRow>,
    pub total_all: usize,
    pub total_chosen: usize,
}

impl PosHistogram {
    pub fn get(&self, tag: PosTag) -> (usize, usize) {
        self.rows
            .iter()
            .find(|r| r.tag == tag)
            .map(|r| (r.all, r.chosen))
            .unwrap_or((0, 0))
    }
}

/// Tag incidence and chosen tags over the 120 distinct words.
pub fn pos_histogram(lex: &Lexicon) -> PosHistogram {
    let h = lex.tag_histogram();
    let rows: Vec<PosRow> = PosTag::ALL
        .iter()
        .map(|&tag| PosRow { tag, all: h[&tag].0, chosen: h[&tag].1 })
        .collect();
    PosHistogram {
        total_all: rows.iter().map(|r| r.all).sum(),
        total_chosen: rows.iter().map(|r| r.chosen).sum(),
        rows,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Scope {
    All,
    First,
    Last,
    Middle,
}

impl Scope {
    pub const ALL: [Scope; 4] = [Scope::All, Scope::First, Scope::Last, Scope::Middle];

    pub fn as_str(self) -> &'static str {
        match self {
            Scope::All => "ALL",
            Scope::First => "FIRST",
            Scope::Last => "LAST",
            Scope::Middle => "MIDDLE",
        }
    }

    /// Picks the items of one word that fall in this scope. A single item
    /// is both first and last.
    fn select<T>(self, items: &[T]) -> &[T] {
        match (self, items.len()) {
            (_, 0) => items,
            (Scope::All, _) => items,
            (Scope::First, _) => &items[..1],
            (Scope::Last, n) => &items[n - 1..],
            (Scope::Middle, n) if n <= 2 => &items[..0],
            (Scope::Middle, n) => &items[1..n - 1],
        }
    }
}

impl fmt::Display for Scope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl std::str::FromStr for Scope {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Scope::ALL
            .iter()
            .copied()
            .find(|sc| sc.as_str().eq_ignore_ascii_case(s))
            .ok_or_else(|| format!("unknown scope {s:?} (expected all, first, last or middle)"))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Restrict {
    All,
    Vowels,
    Consonants,
}

impl Restrict {
    fn admits(self, c: char) -> bool {
        match self {
            Restrict::All => true,
            Restrict::Vowels => phonotactics::is_vowel(c),
            Restrict::Consonants => phonotactics::is_consonant(c),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FrequencyRow {
    pub item: String,
    pub count: u64,
    pub percent: Percent,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PositionalFrequencyTable {
    pub scope: Scope,
    pub total: u64,
    pub rows: Vec<FrequencyRow>,
}

impl PositionalFrequencyTable {
    fn from_counts(scope: Scope, counts: BTreeMap<String, u64>) -> Self {
        let total: u64 = counts.values().sum();
        let mut rows: Vec<FrequencyRow> = counts
            .into_iter()
            .map(|(item, count)| FrequencyRow { item, count, percent: Percent::new(count, total) })
            .collect();
        rows.sort_by(|a, b| match b.count.cmp(&a.count) {
            Ordering::Equal => a.item.cmp(&b.item),
            o => o,
        });
        PositionalFrequencyTable { scope, total, rows }
    }

    pub fn get(&self, item: &str) -> Option<&FrequencyRow> {
        self.rows.iter().find(|r| r.item == item)
    }

    pub fn distinct(&self) -> usize {
        self.rows.iter().filter(|r| r.count > 0).count()
    }
}

fn syllable_strings(lex: &Lexicon) -> Vec<Vec<String>> {
    lex.entries()
        .iter()
        .map(|l| {
            phonotactics::syllabify(&l.surface)
                .expect("lexicon surfaces are validated on load")
                .strings()
        })
        .collect()
}

/// Syllable frequencies over all 124 lemmas.
pub fn syllable_frequency(lex: &Lexicon, scope: Scope) -> PositionalFrequencyTable {
    let mut counts: BTreeMap<String, u64> = BTreeMap::new();
    for word in syllable_strings(lex) {
        for s in scope.select(&word) {
            *counts.entry(s.clone()).or_default() += 1;
        }
    }
    PositionalFrequencyTable::from_counts(scope, counts)
}

/// Letter frequencies, optionally renormalised within vowels or
/// consonants. Every admitted letter gets a row, even with count zero.
pub fn letter_frequency(lex: &Lexicon, scope: Scope, restrict: Restrict) -> PositionalFrequencyTable {
    let mut counts: BTreeMap<String, u64> = VOWELS
        .iter()
        .chain(CONSONANTS.iter())
        .filter(|&&c| restrict.admits(c))
        .map(|c| (c.to_string(), 0))
        .collect();
    for lemma in lex.entries() {
        let letters: Vec<char> = lemma.surface.chars().collect();
        for &c in scope.select(&letters) {
            if restrict.admits(c) {
                *counts.entry(c.to_string()).or_default() += 1;
            }
        }
    }
    PositionalFrequencyTable::from_counts(scope, counts)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SentenceSpaceQuery {
    pub n: u32,
    pub v: u32,
    pub o: u32,
    pub p: u32,
    pub with_particles: bool,
}

pub const CONTENT_CHOICES: u128 = 107;
pub const PREPOSITION_CHOICES: u128 = 5;
pub const PARTICLE_CHOICES: u128 = 9;

/// Number of sentences with the given phrase sizes:
/// `107^(n+v+o+p) · 5 · 9^4` (the last factor only with particles).
pub fn sentence_space(q: SentenceSpaceQuery) -> Result<u128, StatsError> {
    let words = q.n + q.v + q.o + q.p;
    if words == 0 {
        return Err(StatsError::EmptySentence);
    }
    let mut delta = CONTENT_CHOICES.checked_pow(words).ok_or(StatsError::Overflow)?;
    delta = delta.checked_mul(PREPOSITION_CHOICES).ok_or(StatsError::Overflow)?;
    if q.with_particles {
        delta = delta.checked_mul(PARTICLE_CHOICES.pow(4)).ok_or(StatsError::Overflow)?;
    }
    Ok(delta)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LengthRow {
    pub syllables: usize,
    pub count: u64,
    pub percent: Percent,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WordLengthReport {
    pub total: u64,
    pub rows: Vec<LengthRow>,
}

impl WordLengthReport {
    pub fn count(&self, syllables: usize) -> u64 {
        self.rows.iter().find(|r| r.syllables == syllables).map_or(0, |r| r.count)
    }
}

/// Syllable-count distribution of the lemmas, with one trailing zero row to
/// show where it stops.
pub fn word_length_report(lex: &Lexicon) -> WordLengthReport {
    let lengths: Vec<usize> = syllable_strings(lex).iter().map(Vec::len).collect();
    let total = lengths.len() as u64;
    let max = lengths.iter().copied().max().unwrap_or(0);
    let rows = (1..=max + 1)
        .map(|k| {
            let count = lengths.iter().filter(|&&l| l == k).count() as u64;
            LengthRow { syllables: k, count, percent: Percent::new(count, total) }
        })
        .collect();
    WordLengthReport { total, rows }
}
