use std::fmt;

use serde::Serialize;

use crate::lexicon::Lexicon;
use crate::phonotactics;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum TokenKind {
    /// A lexicon word.
    Word,
    /// A capitalised name that is a valid Toki Pona word.
    Proper,
    /// One of `. ! ? ,`.
    Punct,
    Colon,
    /// Quoted material or a capitalised name that is not Toki Pona.
    Foreign,
    /// A lowercase word missing from the lexicon.
    Unknown,
}

impl TokenKind {
    pub fn as_str(self) -> &'static str {
        match self {
            TokenKind::Word => "WORD",
            TokenKind::Proper => "PROPER",
            TokenKind::Punct => "PUNCT",
            TokenKind::Colon => "COLON",
            TokenKind::Foreign => "FOREIGN",
            TokenKind::Unknown => "UNKNOWN",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Token {
    pub surface: String,
    pub kind: TokenKind,
    /// Character offsets `[start, end)` into the source text.
    pub span: (usize, usize),
}

impl Token {
    pub fn new(surface: impl Into<String>, kind: TokenKind, span: (usize, usize)) -> Self {
        Token { surface: surface.into(), kind, span }
    }

    pub fn is(&self, word: &str) -> bool {
        self.kind == TokenKind::Word && self.surface == word
    }

    pub fn is_punct(&self) -> bool {
        matches!(self.kind, TokenKind::Punct | TokenKind::Colon)
    }

    /// Ends a sentence: `. ! ? :`.
    pub fn is_terminator(&self) -> bool {
        self.kind == TokenKind::Colon || (self.kind == TokenKind::Punct && self.surface != ",")
    }

    /// Problem with the token itself, independent of its position.
    pub fn diagnostic(&self) -> Option<String> {
        match self.kind {
            TokenKind::Unknown => Some(format!("unknown word {:?}", self.surface)),
            _ => None,
        }
    }
}

impl fmt::Display for Token {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.surface)
    }
}

fn is_punct_char(c: char) -> bool {
    matches!(c, '.' | '!' | '?' | ',' | ':')
}

fn classify(word: &str, lex: &Lexicon) -> TokenKind {
    if lex.contains(word) {
        TokenKind::Word
    } else if phonotactics::validate_proper_noun(word) {
        TokenKind::Proper
    } else if word.chars().next().is_some_and(char::is_uppercase) {
        TokenKind::Foreign
    } else {
        TokenKind::Unknown
    }
}

/// Splits text into words and punctuation. Never fails; problems are
/// reported per token through [`Token::diagnostic`].
pub fn tokenize(text: &str, lex: &Lexicon) -> Vec<Token> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        if c.is_whitespace() {
            i += 1;
        } else if is_punct_char(c) {
            let kind = if c == ':' { TokenKind::Colon } else { TokenKind::Punct };
            out.push(Token::new(c.to_string(), kind, (i, i + 1)));
            i += 1;
        } else if c == '\'' || c == '"' {
            let close = chars[i + 1..].iter().position(|&d| d == c).map(|p| i + 1 + p + 1);
            let end = close.unwrap_or_else(|| {
                let rest = chars[i..].iter().position(|d| d.is_whitespace());
                rest.map_or(chars.len(), |p| i + p)
            });
            out.push(Token::new(chars[i..end].iter().collect::<String>(), TokenKind::Foreign, (i, end)));
            i = end;
        } else {
            let start = i;
            while i < chars.len() && !chars[i].is_whitespace() && !is_punct_char(chars[i]) {
                i += 1;
            }
            let word: String = chars[start..i].iter().collect();
            let kind = classify(&word, lex);
            out.push(Token::new(word, kind, (start, i)));
        }
    }
    out
}

/// Joins tokens back into text: words separated by one space, punctuation
/// attached to the preceding token.
pub fn detokenize<'a>(tokens: impl IntoIterator<Item = &'a Token>) -> String {
    let mut out = String::new();
    for t in tokens {
        if !out.is_empty() && !t.is_punct() {
            out.push(' ');
        }
        out.push_str(&t.surface);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn kinds(text: &str) -> Vec<(String, TokenKind)> {
        tokenize(text, &Lexicon::embedded()).into_iter().map(|t| (t.surface, t.kind)).collect()
    }

    #[test]
    fn basic_examples() {
        use TokenKind::*;
        assert_eq!(kinds("mi moku."), vec![("mi".into(), Word), ("moku".into(), Word), (".".into(), Punct)]);
        assert_eq!(kinds("jan Pije"), vec![("jan".into(), Word), ("Pije".into(), Proper)]);
        let t = kinds("toki e ni:");
        assert_eq!(t.last().unwrap(), &(":".into(), Colon));
        assert_eq!(t[2], ("ni".into(), Word));
    }

    #[test]
    fn foreign_and_unknown() {
        let lex = Lexicon::embedded();
        let t = tokenize("weka 'p' li Birns-Sprage xyz", &lex);
        assert_eq!(t[1].kind, TokenKind::Foreign);
        assert_eq!(t[1].surface, "'p'");
        assert_eq!(t[3].kind, TokenKind::Foreign);
        assert_eq!(t[4].kind, TokenKind::Unknown);
        assert!(t[4].diagnostic().unwrap().contains("xyz"));
    }

    #[test]
    fn spans_are_char_offsets() {
        let t = tokenize("ona, a.", &Lexicon::embedded());
        let spans: Vec<_> = t.iter().map(|t| t.span).collect();
        assert_eq!(spans, vec![(0, 3), (3, 4), (5, 6), (6, 7)]);
    }

    #[test]
    fn detokenize_round_trip() {
        let lex = Lexicon::embedded();
        let text = "sitelen sona, sitelen musi.";
        assert_eq!(detokenize(&tokenize(text, &lex)), text);
    }
}
