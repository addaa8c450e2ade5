//! Toki Pona as a formal system.
//!
//! The crate bundles the official vocabulary and builds everything else on
//! top of it: syllable rules and word-space counts, vocabulary statistics, a
//! parser and tagger for the li/e/la/pi grammar, seeded text synthesis,
//! editor highlight schemes and a mapping onto WordNet synsets.

pub mod grammar;
pub mod highlight;
pub mod lexicon;
pub mod phonotactics;
pub mod registry;
pub mod stats;
pub mod synth;
pub mod wordnet;

pub use lexicon::{Lemma, Lexicon, PosTag, Sense};
pub use phonotactics::{CountingMode, Syllable, SyllabifiedWord};

/// Any error raised by the crate.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error(transparent)]
    Lexicon(#[from] lexicon::LexiconError),
    #[error(transparent)]
    Phonotactics(#[from] phonotactics::Violation),
    #[error(transparent)]
    Stats(#[from] stats::StatsError),
    #[error(transparent)]
    Pi(#[from] grammar::PiError),
    #[error(transparent)]
    Synth(#[from] synth::SynthError),
    #[error(transparent)]
    Highlight(#[from] highlight::HighlightError),
    #[error(transparent)]
    Wordnet(#[from] wordnet::WordnetError),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
