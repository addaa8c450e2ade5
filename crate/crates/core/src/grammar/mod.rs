//! Tokenizer, parser, pi-reading enumeration and tagger for the li/e/la/pi
//! grammar.

pub mod parse;
pub mod pi;
pub mod print;
pub mod tagger;
pub mod token;
pub mod tree;

pub use parse::{parse, parse_text, Diagnostic, ParseOptions, ParseOutput, Severity};
pub use pi::{pi_readings, PiError};
pub use tagger::{pos_tag, Assignment, PrepositionTreatment, Tag, TagOptions, TaggedToken};
pub use token::{detokenize, tokenize, Token, TokenKind};
pub use tree::{Clause, Coordinated, Modifier, Object, PhraseNode, PiGroup, Predicate, PrepPhrase, Role, Sentence, Vocative};

/// A short text of 28 sentences used as a parser regression corpus.
pub const CORPUS: &str = include_str!("../../data/corpus.txt");

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lexicon::Lexicon;

    #[test]
    fn corpus_round_trips() {
        let lex = Lexicon::embedded();
        let tokens = tokenize(CORPUS, &lex);
        let out = parse(&tokens, &lex, &ParseOptions::lenient());
        let errors: Vec<String> = out.errors().map(|d| d.to_string()).collect();
        assert!(errors.is_empty(), "{errors:#?}");
        assert_eq!(out.sentences.len(), 28);
        let rebuilt: Vec<&Token> = out.sentences.iter().flat_map(|s| s.tokens()).collect();
        assert_eq!(rebuilt, tokens.iter().collect::<Vec<_>>());
    }
}
