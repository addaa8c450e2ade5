use serde::Serialize;

use super::pi::{self, PiError};
use super::token::{tokenize, Token, TokenKind};
use super::tree::{Clause, Coordinated, Modifier, Object, PhraseNode, PrepPhrase, Predicate, Role, Sentence, Vocative};
use crate::lexicon::Lexicon;

/// Parser switches. All default to false, which is strict canon.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct ParseOptions {
    /// Accept `li` after a bare mi or sina.
    pub lenient_li: bool,
    /// Accept `:` alone in place of `e ni:`.
    pub colon_shorthand: bool,
    /// Accept possessive `li pi`.
    pub pije_pi_possession: bool,
    /// Accept `en` outside subjects.
    pub extended_en_anu: bool,
    /// Accept sentences that open with li, e or pi, continuing the previous
    /// one.
    pub elided_heads: bool,
}

impl ParseOptions {
    pub fn strict() -> Self {
        ParseOptions::default()
    }

    pub fn lenient() -> Self {
        ParseOptions {
            lenient_li: true,
            colon_shorthand: true,
            pije_pi_possession: true,
            extended_en_anu: true,
            elided_heads: true,
        }
    }

    pub fn is_strict(&self) -> bool {
        *self == ParseOptions::strict()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub enum Severity {
    Error,
    Warning,
    Note,
}

impl Severity {
    pub fn as_str(self) -> &'static str {
        match self {
            Severity::Error => "error",
            Severity::Warning => "warning",
            Severity::Note => "note",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Diagnostic {
    pub severity: Severity,
    pub message: String,
    pub span: (usize, usize),
    /// Index of the sentence in the input.
    pub sentence: usize,
}

impl std::fmt::Display for Diagnostic {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "{}: sentence {}, chars {}..{}: {}",
            self.severity.as_str(),
            self.sentence + 1,
            self.span.0,
            self.span.1,
            self.message
        )
    }
}

#[derive(Debug, Clone, Default, Serialize)]
pub struct ParseOutput {
    pub sentences: Vec<Sentence>,
    /// Errors and warnings.
    pub diagnostics: Vec<Diagnostic>,
    /// Alternative readings the tree does not show.
    pub ambiguities: Vec<Diagnostic>,
}

impl ParseOutput {
    pub fn errors(&self) -> impl Iterator<Item = &Diagnostic> {
        self.diagnostics.iter().filter(|d| d.severity == Severity::Error)
    }

    pub fn has_errors(&self) -> bool {
        self.errors().next().is_some()
    }
}

/// Words that fill phrase slots although the dictionary lists them only as
/// particles.
const SLOT_PARTICLES: [&str; 3] = ["seme", "kin", "mu"];

struct Parser<'a> {
    lex: &'a Lexicon,
    opts: ParseOptions,
    sentence: usize,
    diagnostics: Vec<Diagnostic>,
    ambiguities: Vec<Diagnostic>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Slot {
    Subject,
    Verb,
    Object,
    Vocative,
}

type Hard = Diagnostic;

impl<'a> Parser<'a> {
    fn diag(&self, severity: Severity, message: impl Into<String>, span: (usize, usize)) -> Diagnostic {
        Diagnostic { severity, message: message.into(), span, sentence: self.sentence }
    }

    fn warn(&mut self, message: impl Into<String>, span: (usize, usize)) {
        let d = self.diag(Severity::Warning, message, span);
        self.diagnostics.push(d);
    }

    fn note(&mut self, message: impl Into<String>, span: (usize, usize)) {
        let d = self.diag(Severity::Note, message, span);
        self.ambiguities.push(d);
    }

    fn error(&self, message: impl Into<String>, span: (usize, usize)) -> Hard {
        self.diag(Severity::Error, message, span)
    }

    fn pi_error(&self, e: PiError) -> Hard {
        self.error(e.to_string(), e.span())
    }

    fn is_content(&self, t: &Token) -> bool {
        match t.kind {
            TokenKind::Word => !self.lex.is_particle(&t.surface) || SLOT_PARTICLES.contains(&t.surface.as_str()),
            TokenKind::Proper | TokenKind::Foreign | TokenKind::Unknown => true,
            TokenKind::Punct | TokenKind::Colon => false,
        }
    }

    fn is_prep(&self, t: &Token) -> bool {
        t.kind == TokenKind::Word && self.lex.is_preposition(&t.surface)
    }

    fn is_marker(t: &Token) -> bool {
        t.is("li") || t.is("o") || t.is("e")
    }

    fn sentence(&mut self, tokens: &[Token], terminator: Option<&Token>) -> Result<Sentence, Hard> {
        let (interjections, core): (Vec<Token>, Vec<Token>) =
            tokens.iter().cloned().partition(|t| t.surface == "," || t.is("a"));
        let mut clause = Clause::default();
        if !core.is_empty() {
            let mut segments: Vec<&[Token]> = Vec::new();
            let mut las: Vec<&Token> = Vec::new();
            let mut start = 0;
            for (i, t) in core.iter().enumerate() {
                if t.is("la") {
                    if i == start {
                        return Err(self.error("misplaced la", t.span));
                    }
                    segments.push(&core[start..i]);
                    las.push(t);
                    start = i + 1;
                }
            }
            if start == core.len() {
                return Err(self.error("la must be followed by a clause", core[core.len() - 1].span));
            }
            segments.push(&core[start..]);
            let (main, contexts) = segments.split_last().expect("at least one segment");
            for (seg, la) in contexts.iter().zip(las) {
                let mut c = self.clause(seg, true)?;
                c.la = Some(la.clone());
                clause.contexts.push(c);
            }
            let body = self.clause(main, false)?;
            clause = Clause { contexts: clause.contexts, ..body };
            clause.question_focus = core.iter().find(|t| t.is("seme")).cloned();
            if let Some(term) = terminator.filter(|t| t.kind == TokenKind::Colon) {
                self.check_colon(&clause, term);
            }
        }
        Ok(Sentence { clause, interjections, terminator: terminator.cloned() })
    }

    fn check_colon(&mut self, clause: &Clause, colon: &Token) {
        if self.opts.colon_shorthand {
            return;
        }
        let ends_in_ni = clause
            .predicates
            .last()
            .and_then(|p| p.objects.last())
            .map(|o| {
                let mut toks = Vec::new();
                o.phrase.tokens(&mut toks);
                toks.last().is_some_and(|t| t.is("ni"))
            })
            .unwrap_or(false);
        if !ends_in_ni {
            self.warn("':' without a preceding 'e ni'", colon.span);
        }
    }

    fn clause(&mut self, seg: &[Token], context: bool) -> Result<Clause, Hard> {
        let first = &seg[0];
        let mut clause = Clause::default();

        if first.is("o") {
            clause.predicates = self.predicates(seg)?;
            return Ok(clause);
        }

        if first.is("li") || first.is("e") || first.is("pi") {
            if !self.opts.elided_heads {
                return Err(self.error(format!("sentence cannot start with {}", first.surface), first.span));
            }
            self.warn(format!("sentence starts with {} and continues an earlier one", first.surface), first.span);
            if first.is("li") {
                clause.predicates = self.predicates(seg)?;
            } else if first.is("e") {
                clause.predicates = vec![self.predicate(None, seg)?];
            } else {
                if seg.len() == 1 {
                    return Err(self.pi_error(PiError::Dangling { span: first.span }));
                }
                clause = self.clause(&seg[1..], context)?;
                clause.continuation = Some(first.clone());
            }
            return Ok(clause);
        }

        if self.is_prep(first) && seg.len() >= 2 && self.is_content(&seg[1]) && !seg.iter().any(Self::is_marker) {
            clause.prepositional = self.prep_chain(seg, 0)?;
            return Ok(clause);
        }

        if (first.is("mi") || first.is("sina"))
            && seg.len() >= 2
            && self.is_content(&seg[1])
            && !seg.iter().any(|t| t.is("li"))
        {
            clause.subject = Some(Coordinated::single(PhraseNode::new(first.clone(), Role::NounHead)));
            clause.li_elided = true;
            clause.predicates = self.predicates(&seg[1..])?;
            return Ok(clause);
        }

        let Some(m) = seg.iter().position(Self::is_marker) else {
            if !context {
                self.warn("sentence has no li", first.span);
            }
            clause.predicates = vec![self.predicate(None, seg)?];
            return Ok(clause);
        };
        let marker = &seg[m];
        if marker.is("li") {
            let subject = self.coordinated(&seg[..m], Role::NounHead, Slot::Subject)?;
            if is_bare_mi_sina(&subject) && !self.opts.lenient_li {
                self.warn(format!("li after {}", subject.first.head.surface), marker.span);
            }
            clause.subject = Some(subject);
            clause.predicates = self.predicates(&seg[m..])?;
        } else if marker.is("o") {
            let phrase = self.coordinated(&seg[..m], Role::NounHead, Slot::Vocative)?;
            let rest = &seg[m + 1..];
            let full_clause = rest.iter().any(|t| t.is("li")) || rest.first().is_some_and(|t| t.is("mi") || t.is("sina"));
            if rest.is_empty() || full_clause {
                if !rest.is_empty() {
                    let inner = self.clause(rest, context)?;
                    if inner.vocative.is_some() || !inner.contexts.is_empty() {
                        return Err(self.error("second vocative in one clause", rest[0].span));
                    }
                    clause = inner;
                }
                clause.vocative = Some(Vocative { phrase, o: Some(marker.clone()) });
            } else {
                clause.vocative = Some(Vocative { phrase, o: None });
                clause.predicates = self.predicates(&seg[m..])?;
            }
        } else {
            if !context {
                self.warn("sentence has no subject", first.span);
            }
            clause.predicates = self.predicates(seg)?;
        }
        Ok(clause)
    }

    /// Splits at li and o; every chunk after the first starts with one.
    fn predicates(&mut self, seg: &[Token]) -> Result<Vec<Predicate>, Hard> {
        let mut starts: Vec<usize> =
            seg.iter().enumerate().filter(|(_, t)| t.is("li") || t.is("o")).map(|(i, _)| i).collect();
        if starts.first() != Some(&0) {
            starts.insert(0, 0);
        }
        let mut out = Vec::with_capacity(starts.len());
        for (n, &s) in starts.iter().enumerate() {
            let end = starts.get(n + 1).copied().unwrap_or(seg.len());
            let chunk = &seg[s..end];
            if chunk[0].is("li") || chunk[0].is("o") {
                if chunk.len() == 1 {
                    return Err(self.error(format!("empty predicate after {}", chunk[0].surface), chunk[0].span));
                }
                out.push(self.predicate(Some(&chunk[0]), &chunk[1..])?);
            } else {
                out.push(self.predicate(None, chunk)?);
            }
        }
        Ok(out)
    }

    fn predicate(&mut self, marker: Option<&Token>, mut body: &[Token]) -> Result<Predicate, Hard> {
        let mut pred = Predicate {
            marker: marker.cloned(),
            possessive_pi: None,
            preverbs: Vec::new(),
            verb: None,
            objects: Vec::new(),
        };
        if body[0].is("pi") {
            if !(self.opts.pije_pi_possession && marker.is_some_and(|m| m.is("li"))) {
                return Err(self.pi_error(PiError::Initial { span: body[0].span }));
            }
            if body.len() == 1 {
                return Err(self.pi_error(PiError::Dangling { span: body[0].span }));
            }
            pred.possessive_pi = Some(body[0].clone());
            body = &body[1..];
        }
        let first_e = body.iter().position(|t| t.is("e")).unwrap_or(body.len());
        let verb_part = &body[..first_e];
        if verb_part.is_empty() {
            if let Some(m) = marker {
                return Err(self.error(format!("empty predicate after {}", m.surface), m.span));
            }
        } else {
            let mut i = 0;
            while i + 1 < verb_part.len()
                && verb_part[i].kind == TokenKind::Word
                && self.lex.is_pre_verb(&verb_part[i].surface)
                && self.is_content(&verb_part[i + 1])
                && !verb_part[i + 1].is("pi")
            {
                pred.preverbs.push(verb_part[i].clone());
                i += 1;
            }
            if let Some(pv) = pred.preverbs.first() {
                let span = (pv.span.0, verb_part[i].span.1);
                self.note("pre-verb chain may also read as verb plus adverb", span);
            }
            pred.verb = Some(self.coordinated(&verb_part[i..], Role::VerbHead, Slot::Verb)?);
        }
        let mut rest = &body[first_e..];
        while let Some(e) = rest.first() {
            let end = rest[1..].iter().position(|t| t.is("e")).map_or(rest.len(), |p| p + 1);
            if end == 1 {
                return Err(self.error("empty phrase after e", e.span));
            }
            let phrase = self.coordinated(&rest[1..end], Role::NounHead, Slot::Object)?;
            pred.objects.push(Object { e: e.clone(), phrase });
            rest = &rest[end..];
        }
        Ok(pred)
    }

    fn coordinated(&mut self, tokens: &[Token], role: Role, slot: Slot) -> Result<Coordinated, Hard> {
        let conj = |t: &Token| t.is("en") || t.is("anu");
        let mut parts: Vec<(Option<&Token>, &[Token])> = Vec::new();
        let mut start = 0;
        let mut pending: Option<&Token> = None;
        for (i, t) in tokens.iter().enumerate() {
            if conj(t) {
                if i == start {
                    return Err(self.error(format!("{} without a preceding phrase", t.surface), t.span));
                }
                parts.push((pending, &tokens[start..i]));
                pending = Some(t);
                start = i + 1;
            }
        }
        if start == tokens.len() {
            let span = pending.map_or(tokens.last().map_or((0, 0), |t| t.span), |t| t.span);
            return Err(self.error("coordinator without a following phrase", span));
        }
        parts.push((pending, &tokens[start..]));
        let mut iter = parts.into_iter();
        let (_, first) = iter.next().expect("non-empty");
        let mut out = Coordinated::single(self.phrase(first, role)?);
        for (c, part) in iter {
            let c = c.expect("later parts follow a coordinator");
            if c.is("en") && slot != Slot::Subject && !self.opts.extended_en_anu {
                self.warn("en outside a subject", c.span);
            }
            out.rest.push((c.clone(), self.phrase(part, role)?));
        }
        Ok(out)
    }

    fn pp_start(&self, tokens: &[Token], i: usize) -> bool {
        i + 1 < tokens.len()
            && self.is_prep(&tokens[i])
            && self.is_content(&tokens[i + 1])
            && !tokens[i + 1].is("pi")
            && (i == 0 || !tokens[i - 1].is("pi"))
    }

    fn phrase(&mut self, tokens: &[Token], role: Role) -> Result<PhraseNode, Hard> {
        let head = &tokens[0];
        if !head.is("pi") && !self.is_content(head) {
            return Err(self.error(format!("{} cannot head a phrase", head.surface), head.span));
        }
        let first_pp = (1..tokens.len()).find(|&i| self.pp_start(tokens, i)).unwrap_or(tokens.len());
        let mut node = self.core(&tokens[..first_pp], role)?;
        node.preps = self.prep_chain(tokens, first_pp)?;
        Ok(node)
    }

    /// Prepositional phrases starting at `from`, each running to the next.
    fn prep_chain(&mut self, tokens: &[Token], from: usize) -> Result<Vec<PrepPhrase>, Hard> {
        let mut out = Vec::new();
        let mut i = from;
        while i < tokens.len() {
            let end = (i + 1..tokens.len()).find(|&j| self.pp_start(tokens, j)).unwrap_or(tokens.len());
            let prep = &tokens[i];
            let complement = self.core(&tokens[i + 1..end], Role::NounHead)?;
            if i > 0 {
                self.note(format!("{} may also qualify the preceding word", prep.surface), prep.span);
            }
            out.push(PrepPhrase { prep: prep.clone(), complement });
            i = end;
        }
        Ok(out)
    }

    /// A phrase without prepositional phrases, in its flat pi reading.
    fn core(&mut self, tokens: &[Token], role: Role) -> Result<PhraseNode, Hard> {
        if let Some(t) = tokens.iter().find(|t| !t.is("pi") && !self.is_content(t)) {
            return Err(self.error(format!("unexpected {} inside a phrase", t.surface), t.span));
        }
        let split = pi::split(tokens).map_err(|e| self.pi_error(e))?;
        if self.opts.is_strict() {
            for (p, g) in &split.groups {
                if g.len() == 1 {
                    self.warn("pi before a single word", p.span);
                }
            }
        }
        let k = split.groups.len();
        if k >= 2 {
            let span = (tokens[0].span.0, tokens[tokens.len() - 1].span.1);
            self.note(format!("{k} pi groups admit {} readings", pi::reading_count(k)), span);
        }
        let node = pi::flat_reading(tokens, role).map_err(|e| self.pi_error(e))?;
        debug_assert!(node.modifiers.iter().all(|m| matches!(m, Modifier::Word(_) | Modifier::Pi(_))));
        Ok(node)
    }
}

fn is_bare_mi_sina(c: &Coordinated) -> bool {
    c.rest.is_empty() && c.first.is_bare() && (c.first.head.is("mi") || c.first.head.is("sina"))
}

/// Parses a token stream into sentences, one per terminator.
pub fn parse(tokens: &[Token], lex: &Lexicon, opts: &ParseOptions) -> ParseOutput {
    let mut p = Parser { lex, opts: *opts, sentence: 0, diagnostics: Vec::new(), ambiguities: Vec::new() };
    let mut out = Vec::new();
    let mut start = 0;
    let mut bounds = Vec::new();
    for (i, t) in tokens.iter().enumerate() {
        if t.is_terminator() {
            bounds.push((start, i, Some(t)));
            start = i + 1;
        }
    }
    if start < tokens.len() {
        bounds.push((start, tokens.len(), None));
    }
    for (s, e, term) in bounds {
        let body = &tokens[s..e];
        if body.is_empty() {
            if let Some(t) = term {
                p.warn("empty sentence", t.span);
            }
            continue;
        }
        for t in body {
            if let Some(msg) = t.diagnostic() {
                p.warn(msg, t.span);
            }
        }
        match p.sentence(body, term) {
            Ok(s) => out.push(s),
            Err(d) => p.diagnostics.push(d),
        }
        p.sentence += 1;
    }
    ParseOutput { sentences: out, diagnostics: p.diagnostics, ambiguities: p.ambiguities }
}

pub fn parse_text(text: &str, lex: &Lexicon, opts: &ParseOptions) -> ParseOutput {
    parse(&tokenize(text, lex), lex, opts)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn one(text: &str, opts: ParseOptions) -> (Sentence, ParseOutput) {
        let out = parse_text(text, &Lexicon::embedded(), &opts);
        assert!(!out.has_errors(), "{text}: {:?}", out.diagnostics);
        (out.sentences[0].clone(), out)
    }

    fn words(c: &Coordinated) -> String {
        let mut t = Vec::new();
        c.tokens(&mut t);
        t.iter().map(|t| t.surface.as_str()).collect::<Vec<_>>().join(" ")
    }

    #[test]
    fn ona_li_pona() {
        let (s, out) = one("ona li pona.", ParseOptions::strict());
        assert_eq!(words(s.clause.subject.as_ref().unwrap()), "ona");
        assert_eq!(s.clause.predicates.len(), 1);
        assert_eq!(words(s.clause.predicates[0].verb.as_ref().unwrap()), "pona");
        assert!(out.diagnostics.is_empty());
    }

    #[test]
    fn two_objects_with_elided_li() {
        let (s, out) = one("mi wile e moku e telo.", ParseOptions::strict());
        let c = &s.clause;
        assert!(c.li_elided);
        assert_eq!(words(c.subject.as_ref().unwrap()), "mi");
        let p = &c.predicates[0];
        assert!(p.preverbs.is_empty());
        assert_eq!(words(p.verb.as_ref().unwrap()), "wile");
        let objs: Vec<String> = p.objects.iter().map(|o| words(&o.phrase)).collect();
        assert_eq!(objs, vec!["moku", "telo"]);
        assert!(out.diagnostics.is_empty());
    }

    #[test]
    fn la_context_and_question() {
        let (s, _) = one("tan seme la sina pana e sike?", ParseOptions::strict());
        let c = &s.clause;
        assert_eq!(c.contexts.len(), 1);
        let ctx = &c.contexts[0];
        assert_eq!(ctx.prepositional[0].prep.surface, "tan");
        assert_eq!(ctx.prepositional[0].complement.head.surface, "seme");
        assert_eq!(words(c.subject.as_ref().unwrap()), "sina");
        assert_eq!(words(c.predicates[0].verb.as_ref().unwrap()), "pana");
        assert_eq!(words(&c.predicates[0].objects[0].phrase), "sike");
        assert_eq!(c.question_focus.as_ref().unwrap().surface, "seme");
        assert_eq!(s.terminator.as_ref().unwrap().surface, "?");
    }

    #[test]
    fn prepositional_phrase_attaches() {
        let (s, out) = one("jan kala li lape lon ni.", ParseOptions::strict());
        let verb = &s.clause.predicates[0].verb.as_ref().unwrap().first;
        assert_eq!(verb.head.surface, "lape");
        assert_eq!(verb.preps[0].prep.surface, "lon");
        assert_eq!(verb.preps[0].complement.head.surface, "ni");
        assert_eq!(out.ambiguities.len(), 1);
    }

    #[test]
    fn preverb_chain() {
        let (s, out) = one("mi wile pali e sitelen.", ParseOptions::strict());
        let p = &s.clause.predicates[0];
        assert_eq!(p.preverbs[0].surface, "wile");
        assert_eq!(p.verb.as_ref().unwrap().first.head.surface, "pali");
        assert!(out.ambiguities.iter().any(|a| a.message.contains("pre-verb")));
    }

    #[test]
    fn pi_group_in_tree() {
        let (s, _) = one("jan pi toki pona li kama.", ParseOptions::strict());
        assert_eq!(s.clause.subject.as_ref().unwrap().first.bracketed(), "jan (pi toki pona)");
    }

    #[test]
    fn strict_hard_errors() {
        let lex = Lexicon::embedded();
        for bad in ["e moku.", "li pona.", "jan pi.", "jan pi pi ike li pona.", "ona li.", "la ona li pona.", "ona li pona la."] {
            let out = parse_text(bad, &lex, &ParseOptions::strict());
            assert!(out.has_errors(), "{bad} should fail");
        }
    }

    #[test]
    fn lenient_accepts_continuations() {
        let lex = Lexicon::embedded();
        for text in ["li sona.", "e sitelen tawa kama sona.", "pi ilo nanpa en nanpa nasin."] {
            let out = parse_text(text, &lex, &ParseOptions::lenient());
            assert!(!out.has_errors(), "{text}: {:?}", out.diagnostics);
            assert_eq!(out.sentences[0].unparse(), text);
        }
    }

    #[test]
    fn li_after_mi() {
        let lex = Lexicon::embedded();
        let strict = parse_text("sina li wawa.", &lex, &ParseOptions::strict());
        assert!(!strict.has_errors());
        assert_eq!(strict.diagnostics.len(), 1);
        let lenient = parse_text("sina li wawa.", &lex, &ParseOptions { lenient_li: true, ..Default::default() });
        assert!(lenient.diagnostics.is_empty());
        assert!(!lenient.sentences[0].clause.li_elided);
    }

    #[test]
    fn vocatives_and_imperatives() {
        let (s, _) = one("jan o pona.", ParseOptions::strict());
        assert!(s.clause.vocative.as_ref().unwrap().o.is_none());
        assert!(s.clause.predicates[0].marker.as_ref().unwrap().is("o"));
        let (s, _) = one("o pona tawa jan.", ParseOptions::strict());
        assert!(s.clause.vocative.is_none());
        assert_eq!(s.unparse(), "o pona tawa jan.");
        let (s, _) = one("jan Pije o, sina li pona.", ParseOptions::lenient());
        assert!(s.clause.vocative.as_ref().unwrap().o.is_some());
        assert_eq!(s.unparse(), "jan Pije o, sina li pona.");
    }

    #[test]
    fn colon_shorthand() {
        let lex = Lexicon::embedded();
        let strict = parse_text("mi toki:", &lex, &ParseOptions::strict());
        assert_eq!(strict.diagnostics.len(), 1);
        let ok = parse_text("mi toki e ni:", &lex, &ParseOptions::strict());
        assert!(ok.diagnostics.is_empty());
        let short = parse_text("mi toki:", &lex, &ParseOptions { colon_shorthand: true, ..Default::default() });
        assert!(short.diagnostics.is_empty());
    }

    #[test]
    fn possessive_pi() {
        let lex = Lexicon::embedded();
        assert!(parse_text("ni li pi mi.", &lex, &ParseOptions::strict()).has_errors());
        let out = parse_text("ni li pi mi.", &lex, &ParseOptions { pije_pi_possession: true, ..Default::default() });
        assert!(!out.has_errors());
        assert_eq!(out.sentences[0].unparse(), "ni li pi mi.");
    }

    #[test]
    fn interjections_round_trip() {
        let (s, _) = one("pona kepeken weka 'p' li ona, a.", ParseOptions::lenient());
        assert_eq!(s.interjections.len(), 2);
        assert_eq!(s.unparse(), "pona kepeken weka 'p' li ona, a.");
    }
}
