//! Readings of phrases with several `pi` groups.
//!
//! Every group qualifies either the phrase head or an earlier group that is
//! still open (on the right edge of the tree built so far). A reading is the
//! list of parent choices; readings are listed in lexicographic order of
//! that list, so the flat reading (every group qualifies the head) comes
//! first. `k` groups give Catalan(k) readings.

use thiserror::Error;

use super::token::Token;
use super::tree::{Modifier, PhraseNode, PiGroup, Role};

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum PiError {
    #[error("pi cannot start a phrase")]
    Initial { span: (usize, usize) },
    #[error("pi followed by pi")]
    Double { span: (usize, usize) },
    #[error("dangling pi at the end of a phrase")]
    Dangling { span: (usize, usize) },
}

impl PiError {
    pub fn span(&self) -> (usize, usize) {
        match self {
            PiError::Initial { span } | PiError::Double { span } | PiError::Dangling { span } => *span,
        }
    }
}

/// A phrase cut at its `pi` tokens.
#[derive(Debug, Clone)]
pub struct PiSplit<'a> {
    pub head: &'a [Token],
    pub groups: Vec<(&'a Token, &'a [Token])>,
}

pub fn split(tokens: &[Token]) -> Result<PiSplit<'_>, PiError> {
    let pis: Vec<usize> = tokens.iter().enumerate().filter(|(_, t)| t.is("pi")).map(|(i, _)| i).collect();
    if let Some(&0) = pis.first() {
        return Err(PiError::Initial { span: tokens[0].span });
    }
    let head_end = pis.first().copied().unwrap_or(tokens.len());
    let mut groups = Vec::with_capacity(pis.len());
    for (n, &p) in pis.iter().enumerate() {
        let end = pis.get(n + 1).copied().unwrap_or(tokens.len());
        if end == p + 1 {
            return Err(if end == tokens.len() {
                PiError::Dangling { span: tokens[p].span }
            } else {
                PiError::Double { span: tokens[end].span }
            });
        }
        groups.push((&tokens[p], &tokens[p + 1..end]));
    }
    Ok(PiSplit { head: &tokens[..head_end], groups })
}

fn words(tokens: &[Token], role: Role) -> PhraseNode {
    let mut node = PhraseNode::new(tokens[0].clone(), role);
    node.modifiers.extend(tokens[1..].iter().cloned().map(Modifier::Word));
    node
}

/// Parent vectors: entry `i` is 0 for the head or `j` for group `j - 1`.
pub fn attachments(k: usize) -> Vec<Vec<usize>> {
    fn rec(i: usize, k: usize, spine: &[usize], current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if i == k {
            out.push(current.clone());
            return;
        }
        for depth in 0..spine.len() {
            let parent = spine[depth];
            let mut next: Vec<usize> = spine[..=depth].to_vec();
            next.push(i + 1);
            current.push(parent);
            rec(i + 1, k, &next, current, out);
            current.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, k, &[0], &mut Vec::new(), &mut out);
    out
}

fn build(split: &PiSplit<'_>, parents: &[usize], role: Role) -> PhraseNode {
    fn node(id: usize, split: &PiSplit<'_>, parents: &[usize], role: Role) -> PhraseNode {
        let mut n = if id == 0 { words(split.head, role) } else { words(split.groups[id - 1].1, Role::NounHead) };
        for (g, &p) in parents.iter().enumerate() {
            if p == id {
                n.modifiers.push(Modifier::Pi(PiGroup {
                    pi: split.groups[g].0.clone(),
                    inner: node(g + 1, split, parents, role),
                }));
            }
        }
        n
    }
    node(0, split, parents, role)
}

/// The reading where every group qualifies the head.
pub fn flat_reading(tokens: &[Token], role: Role) -> Result<PhraseNode, PiError> {
    let s = split(tokens)?;
    Ok(build(&s, &vec![0; s.groups.len()], role))
}

/// All readings of a word sequence with embedded `pi` tokens, flat first.
pub fn pi_readings(tokens: &[Token]) -> Result<Vec<PhraseNode>, PiError> {
    let s = split(tokens)?;
    Ok(attachments(s.groups.len()).iter().map(|p| build(&s, p, Role::NounHead)).collect())
}

/// Catalan(k): the number of readings with `k` pi groups.
pub fn reading_count(k: usize) -> u64 {
    let mut c: u64 = 1;
    for i in 0..k as u64 {
        c = c * 2 * (2 * i + 1) / (i + 2);
    }
    c
}
