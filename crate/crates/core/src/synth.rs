//! Seeded synthesis of phrases, sentences, paragraphs and poems.
//!
//! Randomness comes from ChaCha8 seeded with `seed_from_u64`; floats and
//! weighted choices are derived from `next_u64` directly so output is
//! byte-identical on every platform.
//!
//! Sentences follow one template family: subject, one or more predicates,
//! up to two objects per predicate and at most one prepositional phrase at
//! the end. Sentences are built as trees and rendered from them, so every
//! output parses back to the tree it came from.

use std::collections::{BTreeMap, VecDeque};
use std::io::{BufRead, Write};

use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};
use serde::Serialize;
use thiserror::Error;

use crate::grammar::{Clause, Coordinated, Modifier, Object, PhraseNode, PiGroup, Predicate, PrepPhrase, Role, Sentence, Token, TokenKind};
use crate::lexicon::{Lemma, Lexicon, PosTag};

pub const RETRY_BUDGET: usize = 1000;
/// Cheapest sentence: a bare mi or sina plus a two-letter verb.
const MIN_SENTENCE_WORDS: usize = 2;
const MIN_SENTENCE_LETTERS: usize = 4;

#[derive(Debug, Error)]
pub enum SynthError {
    #[error("invalid configuration: {0}")]
    Config(String),
    #[error("invalid specification: {0}")]
    Spec(String),
    #[error("could not satisfy {0} within {RETRY_BUDGET} attempts")]
    Unsatisfiable(String),
    #[error("candidates per round must be at least 2, got {0}")]
    TooFewCandidates(usize),
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SynthConfig {
    pub seed: u64,
    /// Weights for phrases of 1..=4 words.
    pub phrase_len_weights: [f64; 4],
    /// Weights for 0..=2 objects per predicate.
    pub object_count_weights: [f64; 3],
    pub prep_probability: f64,
    pub pi_probability: f64,
    /// Extra weight per earlier use of a word, in [0, 1].
    pub reuse_bias: f64,
    /// Chance of each further li-predicate (never after a bare mi or sina).
    pub extra_predicate_probability: f64,
}

impl Default for SynthConfig {
    fn default() -> Self {
        SynthConfig {
            seed: 0,
            phrase_len_weights: [0.45, 0.35, 0.15, 0.05],
            object_count_weights: [0.35, 0.5, 0.15],
            prep_probability: 0.25,
            pi_probability: 0.15,
            reuse_bias: 0.5,
            extra_predicate_probability: 0.15,
        }
    }
}

impl SynthConfig {
    pub fn with_seed(seed: u64) -> Self {
        SynthConfig { seed, ..Default::default() }
    }

    pub fn validate(&self) -> Result<(), SynthError> {
        fn distribution(name: &str, w: &[f64]) -> Result<(), SynthError> {
            if w.iter().any(|x| !x.is_finite() || *x < 0.0) {
                return Err(SynthError::Config(format!("{name} has a negative or non-finite weight")));
            }
            let sum: f64 = w.iter().sum();
            if (sum - 1.0).abs() > 1e-9 {
                return Err(SynthError::Config(format!("{name} sums to {sum}, not 1")));
            }
            Ok(())
        }
        distribution("phrase_len_weights", &self.phrase_len_weights)?;
        distribution("object_count_weights", &self.object_count_weights)?;
        for (name, p) in [
            ("prep_probability", self.prep_probability),
            ("pi_probability", self.pi_probability),
            ("reuse_bias", self.reuse_bias),
            ("extra_predicate_probability", self.extra_predicate_probability),
        ] {
            if !(0.0..=1.0).contains(&p) {
                return Err(SynthError::Config(format!("{name} = {p} is outside [0, 1]")));
            }
        }
        Ok(())
    }
}

/// Portable helpers over ChaCha8.
#[derive(Debug, Clone)]
pub struct Rng(ChaCha8Rng);

impl Rng {
    pub fn new(seed: u64) -> Self {
        Rng(ChaCha8Rng::seed_from_u64(seed))
    }

    /// Uniform in [0, 1) with 53 bits.
    pub fn unit(&mut self) -> f64 {
        (self.0.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }

    pub fn chance(&mut self, p: f64) -> bool {
        self.unit() < p
    }

    /// Index drawn proportionally to `weights`.
    pub fn weighted(&mut self, weights: &[f64]) -> usize {
        let total: f64 = weights.iter().sum();
        let mut r = self.unit() * total;
        for (i, w) in weights.iter().enumerate() {
            if r < *w {
                return i;
            }
            r -= w;
        }
        weights.iter().rposition(|w| *w > 0.0).unwrap_or(0)
    }
}

/// Multiset of content words used so far, optionally limited to the most
/// recent `capacity` uses.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct ContextTracker {
    counts: BTreeMap<String, u64>,
    capacity: Option<usize>,
    #[serde(skip)]
    history: VecDeque<String>,
}

impl ContextTracker {
    pub fn new(capacity: Option<usize>) -> Self {
        ContextTracker { capacity, ..Default::default() }
    }

    /// Records a use of `lemma`. Particles and words that are only
    /// prepositions are ignored.
    pub fn record(&mut self, lemma: &Lemma) {
        if lemma.is_pure_particle() || lemma.is_sole_preposition() {
            return;
        }
        *self.counts.entry(lemma.surface.clone()).or_default() += 1;
        if let Some(cap) = self.capacity {
            self.history.push_back(lemma.surface.clone());
            while self.history.len() > cap {
                let old = self.history.pop_front().expect("non-empty");
                if let Some(c) = self.counts.get_mut(&old) {
                    *c -= 1;
                    if *c == 0 {
                        self.counts.remove(&old);
                    }
                }
            }
        }
    }

    pub fn count(&self, surface: &str) -> u64 {
        self.counts.get(surface).copied().unwrap_or(0)
    }

    pub fn total(&self) -> u64 {
        self.counts.values().sum()
    }

    /// Draws from `pool` with weight `1 + bias · count` per word.
    pub fn sample<'a>(&self, pool: &[&'a Lemma], bias: f64, rng: &mut Rng) -> &'a Lemma {
        let weights: Vec<f64> = pool.iter().map(|l| 1.0 + bias * self.count(&l.surface) as f64).collect();
        pool[rng.weighted(&weights)]
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ParagraphSpec {
    pub sentences: usize,
    pub max_words: Option<usize>,
    pub max_letters: Option<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PoemSpec {
    pub stanzas: usize,
    pub verses_per_stanza: usize,
    pub phonemes_per_verse: usize,
}

/// Optional constraints on one sentence.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SentenceShape {
    /// Force a one-word subject.
    pub subject: Option<String>,
    pub object_count: Option<usize>,
    pub with_prep: Option<bool>,
}

/// Phonemes are letters: the orthography writes one letter per phoneme.
pub fn letter_count(text: &str) -> usize {
    text.chars().filter(|c| c.is_alphabetic()).count()
}

pub fn word_count(text: &str) -> usize {
    text.split_whitespace()
        .filter(|w| w.chars().any(char::is_alphabetic))
        .count()
}

/// Assigns spans as tokens are produced in written order.
struct Writer {
    pos: usize,
}

impl Writer {
    fn word(&mut self, surface: &str) -> Token {
        let start = if self.pos == 0 { 0 } else { self.pos + 1 };
        self.pos = start + surface.chars().count();
        Token::new(surface, TokenKind::Word, (start, self.pos))
    }

    fn punct(&mut self, surface: &str) -> Token {
        let start = self.pos;
        self.pos += 1;
        Token::new(surface, TokenKind::Punct, (start, self.pos))
    }
}

type Pick<'a> = for<'p> fn(&'p Pools<'a>) -> &'p Vec<&'a Lemma>;

struct Pools<'a> {
    content: Vec<&'a Lemma>,
    /// Content words that never open a prepositional phrase.
    modifiers: Vec<&'a Lemma>,
    prepositions: Vec<&'a Lemma>,
}

pub struct Synthesizer<'a> {
    lex: &'a Lexicon,
    cfg: SynthConfig,
    rng: Rng,
    tracker: ContextTracker,
    pools: Pools<'a>,
}

impl<'a> Synthesizer<'a> {
    pub fn new(lex: &'a Lexicon, cfg: SynthConfig) -> Result<Self, SynthError> {
        cfg.validate()?;
        let content = lex.content_words();
        let modifiers = content.iter().copied().filter(|l| !l.has_tag(PosTag::Preposition)).collect();
        let prepositions = lex.distinct().filter(|l| l.has_tag(PosTag::Preposition)).collect();
        Ok(Synthesizer {
            lex,
            rng: Rng::new(cfg.seed),
            cfg,
            tracker: ContextTracker::default(),
            pools: Pools { content, modifiers, prepositions },
        })
    }

    pub fn tracker(&self) -> &ContextTracker {
        &self.tracker
    }

    pub fn tracker_mut(&mut self) -> &mut ContextTracker {
        &mut self.tracker
    }

    fn draw(&mut self, pool: Pick<'a>) -> &'a Lemma {
        let lemma = self.tracker.sample(pool(&self.pools), self.cfg.reuse_bias, &mut self.rng);
        self.tracker.record(lemma);
        lemma
    }

    fn phrase_len(&mut self) -> usize {
        self.rng.weighted(&self.cfg.phrase_len_weights) + 1
    }

    fn build_phrase(&mut self, w: &mut Writer, role: Role, head_pool: Pick<'a>) -> PhraseNode {
        let len = self.phrase_len();
        let head = self.draw(head_pool);
        let mut node = PhraseNode::new(w.word(&head.surface), role);
        if role == Role::VerbHead && head.is_pre_verb() {
            return node;
        }
        let with_pi = len >= 3 && self.rng.chance(self.cfg.pi_probability);
        let plain = if with_pi { len - 3 } else { len - 1 };
        for _ in 0..plain {
            let m = self.draw(|p| &p.modifiers);
            node.modifiers.push(Modifier::Word(w.word(&m.surface)));
        }
        if with_pi {
            let pi = w.word("pi");
            let a = self.draw(|p| &p.modifiers);
            let mut inner = PhraseNode::new(w.word(&a.surface), Role::NounHead);
            let b = self.draw(|p| &p.modifiers);
            inner.modifiers.push(Modifier::Word(w.word(&b.surface)));
            node.modifiers.push(Modifier::Pi(PiGroup { pi, inner }));
        }
        node
    }

    /// A noun or verb phrase headed by a content word.
    pub fn phrase(&mut self, role: Role) -> PhraseNode {
        self.build_phrase(&mut Writer { pos: 0 }, role, |p| &p.content)
    }

    fn prep_phrase(&mut self, w: &mut Writer) -> PrepPhrase {
        let prep = self.draw(|p| &p.prepositions);
        let prep = w.word(&prep.surface);
        let complement = self.build_phrase(w, Role::NounHead, |p| &p.modifiers);
        PrepPhrase { prep, complement }
    }

    pub fn sentence(&mut self) -> Sentence {
        self.sentence_with(&SentenceShape::default())
    }

    pub fn sentence_with(&mut self, shape: &SentenceShape) -> Sentence {
        let mut w = Writer { pos: 0 };
        let subject = match &shape.subject {
            Some(word) => {
                let lemma = self.lex.lookup(word).expect("forced subject is a lexicon word");
                self.tracker.record(lemma);
                PhraseNode::new(w.word(word), Role::NounHead)
            }
            None => self.build_phrase(&mut w, Role::NounHead, |p| &p.content),
        };
        let bare_pronoun = subject.is_bare() && (subject.head.is("mi") || subject.head.is("sina"));
        let mut n_predicates = 1;
        while !bare_pronoun && n_predicates < 3 && self.rng.chance(self.cfg.extra_predicate_probability) {
            n_predicates += 1;
        }
        let with_prep = shape.with_prep.unwrap_or_else(|| self.rng.chance(self.cfg.prep_probability));
        let mut clause = Clause {
            subject: Some(Coordinated::single(subject)),
            li_elided: bare_pronoun,
            ..Default::default()
        };
        for i in 0..n_predicates {
            let marker = if bare_pronoun { None } else { Some(w.word("li")) };
            let objects = shape.object_count.unwrap_or_else(|| self.rng.weighted(&self.cfg.object_count_weights));
            let last = i + 1 == n_predicates;
            let mut verb = self.build_phrase(&mut w, Role::VerbHead, |p| &p.content);
            let mut pred = Predicate { marker, possessive_pi: None, preverbs: Vec::new(), verb: None, objects: Vec::new() };
            if last && with_prep && objects == 0 {
                if verb.modifiers.is_empty() && self.lex.is_pre_verb(&verb.head.surface) {
                    // A bare pre-verb before a preposition would read as a chain.
                } else {
                    verb.preps.push(self.prep_phrase(&mut w));
                }
            }
            pred.verb = Some(Coordinated::single(verb));
            for j in 0..objects {
                let e = w.word("e");
                let mut phrase = self.build_phrase(&mut w, Role::NounHead, |p| &p.content);
                if last && with_prep && j + 1 == objects {
                    phrase.preps.push(self.prep_phrase(&mut w));
                }
                pred.objects.push(Object { e, phrase: Coordinated::single(phrase) });
            }
            clause.predicates.push(pred);
        }
        Sentence { clause, interjections: Vec::new(), terminator: Some(w.punct(".")) }
    }

    /// Runs `make` until `accept` holds, restoring the tracker after each
    /// rejected attempt.
    fn retry<T>(
        &mut self,
        what: &str,
        mut make: impl FnMut(&mut Self) -> T,
        accept: impl Fn(&T) -> bool,
    ) -> Result<T, SynthError> {
        for _ in 0..RETRY_BUDGET {
            let saved = self.tracker.clone();
            let item = make(self);
            if accept(&item) {
                return Ok(item);
            }
            self.tracker = saved;
        }
        Err(SynthError::Unsatisfiable(what.to_string()))
    }

    pub fn paragraph(&mut self, spec: &ParagraphSpec) -> Result<String, SynthError> {
        if spec.sentences == 0 {
            return Err(SynthError::Spec("a paragraph needs at least one sentence".into()));
        }
        if spec.max_words == Some(0) || spec.max_letters == Some(0) {
            return Err(SynthError::Spec("bounds must be positive".into()));
        }
        let (mut words, mut letters) = (0usize, 0usize);
        let mut out: Vec<String> = Vec::with_capacity(spec.sentences);
        for i in 0..spec.sentences {
            let after = spec.sentences - i - 1;
            let word_room = spec.max_words.map(|m| m.saturating_sub(words + after * MIN_SENTENCE_WORDS));
            let letter_room = spec.max_letters.map(|m| m.saturating_sub(letters + after * MIN_SENTENCE_LETTERS));
            let text = self.retry(
                &format!("sentence {} of the paragraph", i + 1),
                |s| s.sentence().unparse(),
                |t| {
                    word_room.is_none_or(|r| word_count(t) <= r) && letter_room.is_none_or(|r| letter_count(t) <= r)
                },
            )?;
            words += word_count(&text);
            letters += letter_count(&text);
            out.push(text);
        }
        Ok(out.join(" "))
    }

    /// A verse: a phrase or a short clause, without final punctuation.
    pub fn verse(&mut self, phonemes: usize) -> Result<String, SynthError> {
        self.retry(
            &format!("a verse of {phonemes} phonemes"),
            |s| {
                if s.rng.chance(0.5) {
                    let p = s.phrase(Role::NounHead);
                    let mut toks = Vec::new();
                    p.tokens(&mut toks);
                    crate::grammar::detokenize(toks)
                } else {
                    let sentence = s.sentence();
                    let toks: Vec<&Token> = sentence.tokens().into_iter().filter(|t| !t.is_punct()).collect();
                    crate::grammar::detokenize(toks)
                }
            },
            |t| letter_count(t) == phonemes,
        )
    }

    pub fn poem(&mut self, spec: &PoemSpec) -> Result<String, SynthError> {
        if spec.stanzas == 0 || spec.verses_per_stanza == 0 || spec.phonemes_per_verse == 0 {
            return Err(SynthError::Spec("poem dimensions must be positive".into()));
        }
        let mut stanzas = Vec::with_capacity(spec.stanzas);
        for _ in 0..spec.stanzas {
            let mut verses = Vec::with_capacity(spec.verses_per_stanza);
            for _ in 0..spec.verses_per_stanza {
                verses.push(self.verse(spec.phonemes_per_verse)?);
            }
            stanzas.push(verses.join("\n"));
        }
        Ok(stanzas.join("\n\n") + "\n")
    }

    fn record_text(&mut self, text: &str) {
        let lex = self.lex;
        for word in text.split(|c: char| !c.is_alphabetic()) {
            if let Some(l) = lex.lookup(word) {
                self.tracker.record(l);
            }
        }
    }
}

pub fn synth_paragraph(lex: &Lexicon, cfg: &SynthConfig, spec: &ParagraphSpec) -> Result<String, SynthError> {
    Synthesizer::new(lex, cfg.clone())?.paragraph(spec)
}

pub fn synth_poem(lex: &Lexicon, cfg: &SynthConfig, spec: &PoemSpec) -> Result<String, SynthError> {
    Synthesizer::new(lex, cfg.clone())?.poem(spec)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ComposeUnit {
    Sentence,
    Verse { phonemes: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComposeOutcome {
    pub text: String,
    /// False when input ended before an explicit finish.
    pub finished: bool,
}

/// Interactive composition over a line protocol. Each round prints
/// candidates numbered 1..=k and reads one command: a number picks that
/// candidate, `r` draws fresh candidates for the same round, `f` finishes.
/// Only picked text feeds the context tracker.
pub fn interactive_compose(
    lex: &Lexicon,
    cfg: &SynthConfig,
    unit: ComposeUnit,
    k: usize,
    input: &mut impl BufRead,
    output: &mut impl Write,
) -> Result<ComposeOutcome, SynthError> {
    if k < 2 {
        return Err(SynthError::TooFewCandidates(k));
    }
    let mut synth = Synthesizer::new(lex, cfg.clone())?;
    let separator = match unit {
        ComposeUnit::Sentence => " ",
        ComposeUnit::Verse { .. } => "\n",
    };
    let mut picked: Vec<String> = Vec::new();
    let mut round = 1;
    let mut candidates: Vec<String> = Vec::new();
    let mut line = String::new();
    loop {
        if candidates.is_empty() {
            let saved = synth.tracker.clone();
            for _ in 0..k {
                let c = match unit {
                    ComposeUnit::Sentence => synth.sentence().unparse(),
                    ComposeUnit::Verse { phonemes } => synth.verse(phonemes)?,
                };
                candidates.push(c);
                synth.tracker = saved.clone();
            }
        }
        writeln!(output, "round {round}")?;
        for (i, c) in candidates.iter().enumerate() {
            writeln!(output, "{}) {}", i + 1, c)?;
        }
        write!(output, "> ")?;
        output.flush()?;
        line.clear();
        if input.read_line(&mut line)? == 0 {
            writeln!(output)?;
            return Ok(ComposeOutcome { text: picked.join(separator), finished: false });
        }
        match line.trim() {
            "f" => return Ok(ComposeOutcome { text: picked.join(separator), finished: true }),
            "r" => candidates.clear(),
            cmd => match cmd.parse::<usize>() {
                Ok(n) if (1..=k).contains(&n) => {
                    let choice = candidates.swap_remove(n - 1);
                    synth.record_text(&choice);
                    picked.push(choice);
                    candidates.clear();
                    round += 1;
                }
                _ => writeln!(output, "expected a number from 1 to {k}, r or f")?,
            },
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grammar::{parse_text, ParseOptions};

    fn lex() -> Lexicon {
        Lexicon::embedded()
    }

    #[test]
    fn config_validation() {
        assert!(SynthConfig::default().validate().is_ok());
        let bad = SynthConfig { phrase_len_weights: [0.5, 0.5, 0.5, 0.0], ..Default::default() };
        assert!(bad.validate().is_err());
        let bad = SynthConfig { reuse_bias: 1.5, ..Default::default() };
        assert!(bad.validate().is_err());
    }

    #[test]
    fn single_word_phrase_is_deterministic() {
        let lex = lex();
        let cfg = SynthConfig { phrase_len_weights: [1.0, 0.0, 0.0, 0.0], ..SynthConfig::with_seed(7) };
        let a = Synthesizer::new(&lex, cfg.clone()).unwrap().phrase(Role::NounHead);
        let b = Synthesizer::new(&lex, cfg).unwrap().phrase(Role::NounHead);
        assert_eq!(a, b);
        assert!(a.modifiers.is_empty());
        assert!(lex.content_words().iter().any(|l| l.surface == a.head.surface));
    }

    #[test]
    fn pi_is_forced() {
        let lex = lex();
        let cfg = SynthConfig { phrase_len_weights: [0.0, 0.0, 0.5, 0.5], pi_probability: 1.0, ..SynthConfig::with_seed(3) };
        let mut s = Synthesizer::new(&lex, cfg).unwrap();
        for _ in 0..50 {
            let p = s.phrase(Role::NounHead);
            assert!(p.modifiers.iter().any(|m| matches!(m, Modifier::Pi(_))), "{}", p.bracketed());
        }
    }

    #[test]
    fn reuse_bias_weighting() {
        let lex = lex();
        let pool = lex.content_words();
        let mut tracker = ContextTracker::default();
        let moku = lex.lookup("moku").unwrap();
        for _ in 0..100 {
            tracker.record(moku);
        }
        let mut rng = Rng::new(11);
        let n = 10_000;
        let hits = (0..n).filter(|_| tracker.sample(&pool, 1.0, &mut rng).surface == "moku").count() as f64;
        let p = 101.0 / (101.0 + (pool.len() - 1) as f64);
        let sd = (n as f64 * p * (1.0 - p)).sqrt();
        assert!((hits - n as f64 * p).abs() < 3.0 * sd, "hits {hits}, expected {}", n as f64 * p);
    }

    #[test]
    fn tracker_ignores_particles_and_windows() {
        let lex = lex();
        let mut t = ContextTracker::new(Some(2));
        t.record(lex.lookup("li").unwrap());
        t.record(lex.lookup("lon").unwrap());
        assert_eq!(t.total(), 0);
        for w in ["moku", "telo", "moku"] {
            t.record(lex.lookup(w).unwrap());
        }
        assert_eq!((t.count("moku"), t.count("telo")), (1, 1));
    }

    #[test]
    fn sentences_parse_back_to_themselves() {
        let lex = lex();
        let mut s = Synthesizer::new(&lex, SynthConfig::with_seed(5)).unwrap();
        for _ in 0..200 {
            let sent = s.sentence();
            let text = sent.unparse();
            let out = parse_text(&text, &lex, &ParseOptions::strict());
            assert!(out.diagnostics.is_empty(), "{text}: {:?}", out.diagnostics);
            assert_eq!(out.sentences, vec![sent], "{text}");
        }
    }

    #[test]
    fn forced_shapes() {
        let lex = lex();
        let mut s = Synthesizer::new(&lex, SynthConfig::with_seed(9)).unwrap();
        let shape = SentenceShape { subject: Some("mi".into()), object_count: Some(1), with_prep: Some(false) };
        for _ in 0..20 {
            let sent = s.sentence_with(&shape);
            let text = sent.unparse();
            assert!(text.starts_with("mi "));
            assert!(!text.split(' ').any(|w| w == "li"), "{text}");
            assert_eq!(text.split(' ').filter(|w| *w == "e").count(), 1, "{text}");
        }
    }

    #[test]
    fn paragraph_bounds_and_determinism() {
        let lex = lex();
        let spec = ParagraphSpec { sentences: 3, max_words: None, max_letters: None };
        let a = synth_paragraph(&lex, &SynthConfig::with_seed(1), &spec).unwrap();
        let b = synth_paragraph(&lex, &SynthConfig::with_seed(1), &spec).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.matches('.').count(), 3);
        let tight = ParagraphSpec { sentences: 1, max_words: None, max_letters: Some(40) };
        let t = synth_paragraph(&lex, &SynthConfig::with_seed(2), &tight).unwrap();
        assert!(letter_count(&t) <= 40);
        let impossible = ParagraphSpec { sentences: 3, max_words: Some(3), max_letters: None };
        assert!(matches!(synth_paragraph(&lex, &SynthConfig::with_seed(2), &impossible), Err(SynthError::Unsatisfiable(_))));
    }

    #[test]
    fn poem_shape() {
        let lex = lex();
        let spec = PoemSpec { stanzas: 2, verses_per_stanza: 4, phonemes_per_verse: 12 };
        let poem = synth_poem(&lex, &SynthConfig::with_seed(4), &spec).unwrap();
        assert_eq!(poem, synth_poem(&lex, &SynthConfig::with_seed(4), &spec).unwrap());
        let stanzas: Vec<&str> = poem.trim_end().split("\n\n").collect();
        assert_eq!(stanzas.len(), 2);
        let verses: Vec<&str> = poem.lines().filter(|l| !l.is_empty()).collect();
        assert_eq!(verses.len(), 8);
        assert!(verses.iter().all(|v| letter_count(v) == 12));
        let one = PoemSpec { stanzas: 1, verses_per_stanza: 1, phonemes_per_verse: 1 };
        assert!(synth_poem(&lex, &SynthConfig::with_seed(4), &one).is_err());
    }

    #[test]
    fn compose_protocol() {
        let lex = lex();
        let cfg = SynthConfig::with_seed(21);
        let run = |script: &str| {
            let mut out = Vec::new();
            let r = interactive_compose(&lex, &cfg, ComposeUnit::Sentence, 3, &mut script.as_bytes(), &mut out).unwrap();
            (r, String::from_utf8(out).unwrap())
        };
        let (a, log) = run("1\n1\nf\n");
        assert!(a.finished);
        assert_eq!(a.text.matches('.').count(), 2);
        assert_eq!(run("1\n1\nf\n").0, a);
        assert!(log.contains("round 3"));

        let (r, log) = run("r\n2\nf\n");
        let rounds: Vec<&str> = log.lines().map(|l| l.trim_start_matches("> ")).filter(|l| l.starts_with("round")).collect();
        assert_eq!(rounds, vec!["round 1", "round 1", "round 2"]);
        assert_eq!(r.text.matches('.').count(), 1);

        let (partial, _) = run("2\n");
        assert!(!partial.finished);
        assert_eq!(partial.text.matches('.').count(), 1);

        let (_, log) = run("9\nf\n");
        assert!(log.contains("expected a number"));
        let mut sink = Vec::new();
        assert!(interactive_compose(&lex, &cfg, ComposeUnit::Sentence, 1, &mut "".as_bytes(), &mut sink).is_err());
    }

    #[test]
    fn picked_words_are_favoured() {
        let lex = lex();
        let overlap = |bias: f64| -> usize {
            (0..150u64)
                .map(|seed| {
                    let cfg = SynthConfig { reuse_bias: bias, ..SynthConfig::with_seed(seed) };
                    let mut out = Vec::new();
                    let r = interactive_compose(&lex, &cfg, ComposeUnit::Sentence, 2, &mut "1\n".as_bytes(), &mut out)
                        .unwrap();
                    let picked: Vec<&str> = r.text.split(|c: char| !c.is_alphabetic()).filter(|w| !w.is_empty()).collect();
                    let log = String::from_utf8(out).unwrap();
                    let round2 = log.split("round 2").nth(1).unwrap().to_string();
                    round2
                        .split(|c: char| !c.is_alphabetic())
                        .filter(|w| picked.contains(w) && lex.content_words().iter().any(|l| l.surface == *w))
                        .count()
                })
                .sum()
        };
        let (with, without) = (overlap(1.0), overlap(0.0));
        assert!(with > without, "with bias {with}, without {without}");
    }
}
