//! Positional part-of-speech tagging over a parsed sentence.
//!
//! Heads of noun slots are nouns and their qualifiers adjectives; qualifiers
//! in the predicate are adverbs. A predicate head is a verb after an explicit
//! li or o or when objects follow; otherwise it may be read as noun, verb or
//! adjective and gets a hybrid tag. Dictionary resolution narrows hybrids to
//! the word's own dictionary classes when that leaves anything.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use serde::Serialize;

use super::token::{Token, TokenKind};
use super::tree::{Clause, Coordinated, Modifier, PhraseNode, Predicate, PrepPhrase, Sentence};
use crate::lexicon::{Lexicon, PosTag};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Tag {
    Noun,
    Adjective,
    Verb,
    Adverb,
    Preposition,
    Particle,
    Number,
    Proper,
    Punctuation,
}

impl Tag {
    pub fn as_str(self) -> &'static str {
        match self {
            Tag::Noun => "NOUN",
            Tag::Adjective => "ADJECTIVE",
            Tag::Verb => "VERB",
            Tag::Adverb => "ADVERB",
            Tag::Preposition => "PREPOSITION",
            Tag::Particle => "PARTICLE",
            Tag::Number => "NUMBER",
            Tag::Proper => "PROPER",
            Tag::Punctuation => "PUNCT",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum Assignment {
    Single(Tag),
    /// At least two candidates.
    Hybrid(BTreeSet<Tag>),
}

impl Assignment {
    fn nva() -> Self {
        Assignment::Hybrid([Tag::Noun, Tag::Verb, Tag::Adjective].into_iter().collect())
    }

    pub fn single(&self) -> Option<Tag> {
        match self {
            Assignment::Single(t) => Some(*t),
            Assignment::Hybrid(_) => None,
        }
    }
}

impl fmt::Display for Assignment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Assignment::Single(t) => f.write_str(t.as_str()),
            Assignment::Hybrid(set) => {
                let names: Vec<&str> = set.iter().map(|t| t.as_str()).collect();
                write!(f, "HYBRID({})", names.join("|"))
            }
        }
    }
}

/// How to tag the head of a preposition's complement.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub enum PrepositionTreatment {
    #[default]
    Hybrid,
    Noun,
    Adjective,
    Verb,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct TagOptions {
    pub resolve_with_dictionary: bool,
    pub prepositions: PrepositionTreatment,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TaggedToken {
    pub token: Token,
    pub assignment: Assignment,
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Ctx {
    Noun,
    Verb { hybrid: bool },
    Complement,
}

struct Tagger<'a> {
    lex: &'a Lexicon,
    opts: TagOptions,
    out: HashMap<(usize, usize), Assignment>,
}

impl Tagger<'_> {
    fn set(&mut self, t: &Token, a: Assignment) {
        self.out.insert(t.span, a);
    }

    fn fixed(&self, t: &Token) -> Option<Tag> {
        match t.kind {
            TokenKind::Proper | TokenKind::Foreign => Some(Tag::Proper),
            TokenKind::Punct | TokenKind::Colon => Some(Tag::Punctuation),
            TokenKind::Word if self.lex.is_particle(&t.surface) => Some(Tag::Particle),
            _ => None,
        }
    }

    fn head(&mut self, t: &Token, ctx: Ctx) {
        let a = match (self.fixed(t), ctx) {
            (Some(tag), _) => Assignment::Single(tag),
            (None, Ctx::Noun) => Assignment::Single(Tag::Noun),
            (None, Ctx::Verb { hybrid: false }) => Assignment::Single(Tag::Verb),
            (None, Ctx::Verb { hybrid: true }) => Assignment::nva(),
            (None, Ctx::Complement) => match self.opts.prepositions {
                PrepositionTreatment::Hybrid => Assignment::nva(),
                PrepositionTreatment::Noun => Assignment::Single(Tag::Noun),
                PrepositionTreatment::Adjective => Assignment::Single(Tag::Adjective),
                PrepositionTreatment::Verb => Assignment::Single(Tag::Verb),
            },
        };
        self.set(t, a);
    }

    fn modifier(&mut self, t: &Token, ctx: Ctx) {
        let tag = self.fixed(t).unwrap_or_else(|| {
            if self.lex.lookup(&t.surface).is_some_and(|l| l.has_tag(PosTag::Number)) {
                Tag::Number
            } else if matches!(ctx, Ctx::Verb { .. }) {
                Tag::Adverb
            } else {
                Tag::Adjective
            }
        });
        self.set(t, Assignment::Single(tag));
    }

    fn phrase(&mut self, p: &PhraseNode, ctx: Ctx) {
        self.head(&p.head, ctx);
        for m in &p.modifiers {
            match m {
                Modifier::Word(t) => self.modifier(t, ctx),
                Modifier::Pi(g) => {
                    self.set(&g.pi, Assignment::Single(Tag::Particle));
                    self.phrase(&g.inner, Ctx::Noun);
                }
            }
        }
        for pp in &p.preps {
            self.pp(pp);
        }
    }

    fn pp(&mut self, pp: &PrepPhrase) {
        self.set(&pp.prep, Assignment::Single(Tag::Preposition));
        self.phrase(&pp.complement, Ctx::Complement);
    }

    fn coordinated(&mut self, c: &Coordinated, ctx: Ctx) {
        self.phrase(&c.first, ctx);
        for (conj, p) in &c.rest {
            self.set(conj, Assignment::Single(Tag::Particle));
            self.phrase(p, ctx);
        }
    }

    fn predicate(&mut self, p: &Predicate) {
        for t in p.marker.iter().chain(p.possessive_pi.iter()) {
            self.set(t, Assignment::Single(Tag::Particle));
        }
        for t in &p.preverbs {
            self.set(t, Assignment::Single(Tag::Verb));
        }
        let hybrid = p.marker.is_none() && p.objects.is_empty();
        if let Some(v) = &p.verb {
            self.coordinated(v, Ctx::Verb { hybrid });
        }
        for o in &p.objects {
            self.set(&o.e, Assignment::Single(Tag::Particle));
            self.coordinated(&o.phrase, Ctx::Noun);
        }
    }

    fn clause(&mut self, c: &Clause) {
        for ctx in &c.contexts {
            self.clause(ctx);
        }
        for t in c.continuation.iter().chain(c.la.iter()) {
            self.set(t, Assignment::Single(Tag::Particle));
        }
        if let Some(v) = &c.vocative {
            self.coordinated(&v.phrase, Ctx::Noun);
            if let Some(o) = &v.o {
                self.set(o, Assignment::Single(Tag::Particle));
            }
        }
        if let Some(s) = &c.subject {
            self.coordinated(s, Ctx::Noun);
        }
        for p in &c.predicates {
            self.predicate(p);
        }
        for pp in &c.prepositional {
            self.pp(pp);
        }
    }

    fn resolve(&self, t: &Token, a: Assignment) -> Assignment {
        let Assignment::Hybrid(set) = &a else { return a };
        let Some(lemma) = self.lex.lookup(&t.surface) else { return a };
        let dict: BTreeSet<Tag> = lemma
            .tags
            .iter()
            .filter_map(|tag| match tag {
                PosTag::Noun => Some(Tag::Noun),
                PosTag::Adjective | PosTag::Number => Some(Tag::Adjective),
                PosTag::Verb | PosTag::Pre => Some(Tag::Verb),
                PosTag::Particle | PosTag::Preposition => None,
            })
            .collect();
        let narrowed: BTreeSet<Tag> = set.intersection(&dict).copied().collect();
        match narrowed.len() {
            0 => a,
            1 => Assignment::Single(*narrowed.iter().next().expect("one element")),
            _ => Assignment::Hybrid(narrowed),
        }
    }
}

/// Tags every token of `sentence`, in source order.
pub fn pos_tag(sentence: &Sentence, lex: &Lexicon, opts: TagOptions) -> Vec<TaggedToken> {
    let mut tagger = Tagger { lex, opts, out: HashMap::new() };
    tagger.clause(&sentence.clause);
    sentence
        .tokens()
        .into_iter()
        .map(|t| {
            let a = tagger
                .out
                .get(&t.span)
                .cloned()
                .unwrap_or_else(|| Assignment::Single(tagger.fixed(t).unwrap_or(Tag::Particle)));
            let a = if opts.resolve_with_dictionary { tagger.resolve(t, a) } else { a };
            TaggedToken { token: t.clone(), assignment: a }
        })
        .collect()
}
