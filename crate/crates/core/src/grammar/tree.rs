use serde::Serialize;

use super::token::Token;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Role {
    NounHead,
    VerbHead,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum Modifier {
    Word(Token),
    Pi(PiGroup),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PiGroup {
    pub pi: Token,
    pub inner: PhraseNode,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PrepPhrase {
    pub prep: Token,
    pub complement: PhraseNode,
}

/// A head word with its qualifiers. Prepositional phrases following the
/// phrase attach flatly to it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PhraseNode {
    pub head: Token,
    pub modifiers: Vec<Modifier>,
    pub role: Role,
    pub preps: Vec<PrepPhrase>,
}

impl PhraseNode {
    pub fn new(head: Token, role: Role) -> Self {
        PhraseNode { head, modifiers: Vec::new(), role, preps: Vec::new() }
    }

    pub fn is_bare(&self) -> bool {
        self.modifiers.is_empty() && self.preps.is_empty()
    }

    /// Words of the phrase excluding prepositional phrases.
    pub fn word_count(&self) -> usize {
        1 + self
            .modifiers
            .iter()
            .map(|m| match m {
                Modifier::Word(_) => 1,
                Modifier::Pi(g) => g.inner.word_count(),
            })
            .sum::<usize>()
    }

    /// Bracketed form, e.g. `jan (pi toki pona)`.
    pub fn bracketed(&self) -> String {
        let mut out = self.head.surface.clone();
        for m in &self.modifiers {
            match m {
                Modifier::Word(t) => {
                    out.push(' ');
                    out.push_str(&t.surface);
                }
                Modifier::Pi(g) => {
                    out.push_str(" (pi ");
                    out.push_str(&g.inner.bracketed());
                    out.push(')');
                }
            }
        }
        for p in &self.preps {
            out.push_str(" [");
            out.push_str(&p.prep.surface);
            out.push(' ');
            out.push_str(&p.complement.bracketed());
            out.push(']');
        }
        out
    }

    pub fn tokens<'a>(&'a self, out: &mut Vec<&'a Token>) {
        out.push(&self.head);
        for m in &self.modifiers {
            match m {
                Modifier::Word(t) => out.push(t),
                Modifier::Pi(g) => {
                    out.push(&g.pi);
                    g.inner.tokens(out);
                }
            }
        }
        for p in &self.preps {
            out.push(&p.prep);
            p.complement.tokens(out);
        }
    }
}

/// Phrases joined by `en` or `anu`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Coordinated {
    pub first: PhraseNode,
    pub rest: Vec<(Token, PhraseNode)>,
}

impl Coordinated {
    pub fn single(phrase: PhraseNode) -> Self {
        Coordinated { first: phrase, rest: Vec::new() }
    }

    pub fn phrases(&self) -> impl Iterator<Item = &PhraseNode> {
        std::iter::once(&self.first).chain(self.rest.iter().map(|(_, p)| p))
    }

    pub fn tokens<'a>(&'a self, out: &mut Vec<&'a Token>) {
        self.first.tokens(out);
        for (conj, p) in &self.rest {
            out.push(conj);
            p.tokens(out);
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Object {
    pub e: Token,
    pub phrase: Coordinated,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Predicate {
    /// `li` or `o`; absent after bare mi/sina and in fragments.
    pub marker: Option<Token>,
    /// `pi` of the possessive `li pi` construction.
    pub possessive_pi: Option<Token>,
    pub preverbs: Vec<Token>,
    /// Absent only when a fragment starts directly with `e`.
    pub verb: Option<Coordinated>,
    pub objects: Vec<Object>,
}

impl Predicate {
    pub fn tokens<'a>(&'a self, out: &mut Vec<&'a Token>) {
        out.extend(self.marker.iter());
        out.extend(self.possessive_pi.iter());
        out.extend(self.preverbs.iter());
        if let Some(v) = &self.verb {
            v.tokens(out);
        }
        for o in &self.objects {
            out.push(&o.e);
            o.phrase.tokens(out);
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Vocative {
    pub phrase: Coordinated,
    /// The `o` closing the address. When the clause goes on with a command,
    /// the `o` is stored as that predicate's marker instead.
    pub o: Option<Token>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Clause {
    /// la-conditions, outermost first.
    pub contexts: Vec<Clause>,
    /// The `la` following this clause when it is a context.
    pub la: Option<Token>,
    /// Leading particle of a clause that continues an earlier sentence.
    pub continuation: Option<Token>,
    pub vocative: Option<Vocative>,
    pub subject: Option<Coordinated>,
    pub predicates: Vec<Predicate>,
    /// Clause-level prepositional phrases (a clause that is just a PP).
    pub prepositional: Vec<PrepPhrase>,
    /// The `seme` the sentence asks about.
    pub question_focus: Option<Token>,
    pub li_elided: bool,
}

impl Clause {
    /// Structural tokens in written order (interjections excluded).
    pub fn tokens<'a>(&'a self, out: &mut Vec<&'a Token>) {
        for c in &self.contexts {
            c.tokens(out);
        }
        out.extend(self.continuation.iter());
        if let Some(v) = &self.vocative {
            v.phrase.tokens(out);
            out.extend(v.o.iter());
        }
        if let Some(s) = &self.subject {
            s.tokens(out);
        }
        for p in &self.predicates {
            p.tokens(out);
        }
        for p in &self.prepositional {
            out.push(&p.prep);
            p.complement.tokens(out);
        }
        out.extend(self.la.iter());
    }
}

/// One parsed sentence: its clause plus the tokens stripped before
/// structural parsing (commas and the interjections a, kin, mu).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Sentence {
    pub clause: Clause,
    pub interjections: Vec<Token>,
    pub terminator: Option<Token>,
}

impl Sentence {
    /// Every token of the sentence in source order, rebuilt from the tree.
    pub fn tokens(&self) -> Vec<&Token> {
        let mut structural = Vec::new();
        self.clause.tokens(&mut structural);
        let mut out = Vec::with_capacity(structural.len() + self.interjections.len() + 1);
        let mut inter = self.interjections.iter().peekable();
        for t in structural {
            while let Some(i) = inter.next_if(|i| i.span.0 < t.span.0) {
                out.push(i);
            }
            out.push(t);
        }
        out.extend(inter);
        out.extend(self.terminator.iter());
        out
    }

    pub fn unparse(&self) -> String {
        super::token::detokenize(self.tokens())
    }
}
