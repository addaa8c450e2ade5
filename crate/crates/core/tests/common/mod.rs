//! Independent oracles shared by the integration tests.
#![allow(dead_code)]

use regex::Regex;

/// All bracketings of a word sequence under `Phrase := Word+ ('pi' Phrase)*`,
/// written like `PhraseNode::bracketed`.
pub fn cfg_pi_brackets(words: &[&str]) -> Vec<String> {
    fn phrase(ts: &[&str]) -> Vec<String> {
        let mut out = Vec::new();
        for m in 1..=ts.len() {
            if ts[..m].contains(&"pi") {
                break;
            }
            let head = ts[..m].join(" ");
            for tail in tails(&ts[m..]) {
                out.push(format!("{head}{tail}"));
            }
        }
        out
    }
    fn tails(ts: &[&str]) -> Vec<String> {
        if ts.is_empty() {
            return vec![String::new()];
        }
        if ts[0] != "pi" {
            return Vec::new();
        }
        let mut out = Vec::new();
        for k in 2..=ts.len() {
            for inner in phrase(&ts[1..k]) {
                for rest in tails(&ts[k..]) {
                    out.push(format!(" (pi {inner}){rest}"));
                }
            }
        }
        out
    }
    let mut out = phrase(words);
    out.sort();
    out
}

/// Strict-mode word count by enumerating letter strings with `n` vowels and
/// testing each against a regular expression plus the banned substrings.
pub fn strict_count_bruteforce(n: usize) -> u64 {
    const LETTERS: &[u8] = b"aeioujklmnpstw";
    let word = Regex::new(r"^[jklmnpstw]?[aeiou]n?(?:[jklmnpstw][aeiou]n?)*$").unwrap();
    let banned = ["ji", "wu", "wo", "ti", "nn", "nm"];
    fn rec(buf: &mut Vec<u8>, vowels: usize, n: usize, f: &mut dyn FnMut(&[u8])) {
        if vowels == n {
            f(buf);
        }
        if buf.len() == 3 * n {
            return;
        }
        for &c in LETTERS {
            let v = b"aeiou".contains(&c);
            if vowels + v as usize > n {
                continue;
            }
            // Two consonants in a row only after a coda n.
            if !v && buf.last().is_some_and(|p| !b"aeiou".contains(p) && *p != b'n') {
                continue;
            }
            buf.push(c);
            rec(buf, vowels + v as usize, n, f);
            buf.pop();
        }
    }
    let mut count = 0;
    rec(&mut Vec::new(), 0, n, &mut |s: &[u8]| {
        let s = std::str::from_utf8(s).unwrap();
        if word.is_match(s) && !banned.iter().any(|b| s.contains(b)) {
            count += 1;
        }
    });
    count
}

/// Space-separated tokens as `Token`s with character spans.
pub fn word_tokens(words: &[&str]) -> Vec<tokipona::grammar::Token> {
    let mut pos = 0;
    words
        .iter()
        .map(|w| {
            let t = tokipona::grammar::Token::new(*w, tokipona::grammar::TokenKind::Word, (pos, pos + w.len()));
            pos += w.len() + 1;
            t
        })
        .collect()
}
