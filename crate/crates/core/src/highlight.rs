//! Highlight schemes built from chosen POS tags, with Vim, HTML and ANSI
//! output.

use std::collections::BTreeMap;
use std::fmt;
use std::io::{self, Write};
use std::str::FromStr;

use serde::Serialize;
use thiserror::Error;

use crate::grammar::{tokenize, TokenKind};
use crate::lexicon::{Lexicon, PosTag};
use crate::registry::Registry;

pub const PROPER_GROUP: &str = "tpPROPER";
pub const REST_GROUP: &str = "tpREST";
pub const PROPER_PATTERN: &str = r"\<[AEIOUJKLMNPSTW][aeioujklmnpstw]*\>";

#[derive(Debug, Error, PartialEq, Eq)]
pub enum HighlightError {
    #[error("unknown highlight group {0:?}")]
    UnknownGroup(String),
    #[error("invalid link target {0:?}")]
    BadTarget(String),
    #[error("unknown merge mode {0:?} (expected full, particles or particles-preps)")]
    UnknownMergeMode(String),
    #[error("bad palette entry {0:?}")]
    BadPalette(String),
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub enum MergeMode {
    #[default]
    Full,
    ParticlesVsRest,
    ParticlesPrepsVsRest,
}

impl MergeMode {
    pub const ALL: [MergeMode; 3] = [MergeMode::Full, MergeMode::ParticlesVsRest, MergeMode::ParticlesPrepsVsRest];

    pub fn as_str(self) -> &'static str {
        match self {
            MergeMode::Full => "full",
            MergeMode::ParticlesVsRest => "particles",
            MergeMode::ParticlesPrepsVsRest => "particles-preps",
        }
    }

    fn group_for(self, chosen: PosTag) -> String {
        let kept = match self {
            MergeMode::Full => true,
            MergeMode::ParticlesVsRest => chosen == PosTag::Particle,
            MergeMode::ParticlesPrepsVsRest => matches!(chosen, PosTag::Particle | PosTag::Preposition),
        };
        if kept {
            format!("tp{chosen}")
        } else {
            REST_GROUP.to_string()
        }
    }
}

impl FromStr for MergeMode {
    type Err = HighlightError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        MergeMode::ALL
            .iter()
            .copied()
            .find(|m| m.as_str() == s)
            .ok_or_else(|| HighlightError::UnknownMergeMode(s.to_string()))
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SchemeConfig {
    pub merge_mode: MergeMode,
    /// Overrides of the default link targets, by group name.
    pub link_map: BTreeMap<String, String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HighlightGroup {
    pub name: String,
    /// Every lemma surface in the group, synonyms included, sorted.
    pub members: Vec<String>,
    /// Members after collapsing synonyms.
    pub distinct: usize,
    pub pattern: Option<String>,
    pub link_target: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HighlightScheme {
    pub merge_mode: MergeMode,
    pub groups: Vec<HighlightGroup>,
}

impl HighlightScheme {
    pub fn group(&self, name: &str) -> Option<&HighlightGroup> {
        self.groups.iter().find(|g| g.name == name)
    }

    pub fn keyword_groups(&self) -> impl Iterator<Item = &HighlightGroup> {
        self.groups.iter().filter(|g| g.pattern.is_none())
    }

    /// Group of a lexicon word.
    pub fn group_of(&self, surface: &str) -> Option<&HighlightGroup> {
        self.keyword_groups().find(|g| g.members.binary_search_by(|m| m.as_str().cmp(surface)).is_ok())
    }
}

/// Default link targets, one per group.
pub fn default_link(group: &str) -> &'static str {
    match group {
        "tpPARTICLE" => "Statement",
        "tpPREPOSITION" => "Special",
        "tpPRE" => "PreProc",
        "tpVERB" => "Function",
        "tpADJECTIVE" => "Identifier",
        "tpNUMBER" => "Number",
        "tpPROPER" => "Constant",
        _ => "Normal",
    }
}

fn valid_target(t: &str) -> bool {
    let mut chars = t.chars();
    chars.next().is_some_and(|c| c.is_ascii_alphabetic()) && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

pub fn build_scheme(lex: &Lexicon, cfg: &SchemeConfig) -> Result<HighlightScheme, HighlightError> {
    let mut order: Vec<String> = Vec::new();
    let mut members: BTreeMap<String, Vec<String>> = BTreeMap::new();
    let mut distinct: BTreeMap<String, usize> = BTreeMap::new();
    for tag in PosTag::ALL {
        let name = cfg.merge_mode.group_for(tag);
        if !order.contains(&name) {
            order.push(name);
        }
    }
    for lemma in lex.entries() {
        members.entry(cfg.merge_mode.group_for(lemma.chosen)).or_default().push(lemma.surface.clone());
    }
    for lemma in lex.distinct() {
        *distinct.entry(cfg.merge_mode.group_for(lemma.chosen)).or_default() += 1;
    }
    order.retain(|g| members.contains_key(g));
    order.push(PROPER_GROUP.to_string());
    for (group, target) in &cfg.link_map {
        if !order.contains(group) {
            return Err(HighlightError::UnknownGroup(group.clone()));
        }
        if !valid_target(target) {
            return Err(HighlightError::BadTarget(target.clone()));
        }
    }
    let groups = order
        .into_iter()
        .map(|name| {
            let link_target = cfg.link_map.get(&name).cloned().unwrap_or_else(|| default_link(&name).to_string());
            let proper = name == PROPER_GROUP;
            let mut m = members.remove(&name).unwrap_or_default();
            m.sort();
            HighlightGroup {
                distinct: distinct.get(&name).copied().unwrap_or(0),
                members: m,
                pattern: proper.then(|| PROPER_PATTERN.to_string()),
                link_target,
                name,
            }
        })
        .collect();
    Ok(HighlightScheme { merge_mode: cfg.merge_mode, groups })
}

pub fn emit_vim_syntax(scheme: &HighlightScheme, out: &mut impl Write) -> io::Result<()> {
    writeln!(out, "\" Vim syntax file")?;
    writeln!(out, "\" Language: Toki Pona")?;
    writeln!(out, "\" Groups by preferred part of speech, merge mode {}", scheme.merge_mode.as_str())?;
    writeln!(out)?;
    writeln!(out, "if exists(\"b:current_syntax\")")?;
    writeln!(out, "  finish")?;
    writeln!(out, "endif")?;
    writeln!(out)?;
    for g in scheme.keyword_groups() {
        writeln!(out, "syn keyword {} {}", g.name, g.members.join(" "))?;
    }
    for g in scheme.groups.iter().filter(|g| g.pattern.is_some()) {
        writeln!(out, "syn match {} \"{}\"", g.name, g.pattern.as_deref().unwrap_or_default())?;
    }
    writeln!(out)?;
    for g in &scheme.groups {
        writeln!(out, "hi def link {} {}", g.name, g.link_target)?;
    }
    writeln!(out)?;
    writeln!(out, "let b:current_syntax = \"tokipona\"")
}

pub fn vim_syntax_string(scheme: &HighlightScheme) -> String {
    let mut buf = Vec::new();
    emit_vim_syntax(scheme, &mut buf).expect("writing to memory cannot fail");
    String::from_utf8(buf).expect("ascii output")
}

pub fn emit_filetype_detect(out: &mut impl Write) -> io::Result<()> {
    writeln!(out, "\" Toki Pona filetype detection")?;
    writeln!(out, "au BufRead,BufNewFile *.tp set filetype=tokipona")?;
    writeln!(out, "au BufRead,BufNewFile *.tokipona set filetype=tokipona")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SyntaxLine {
    Blank,
    Comment,
    Guard,
    Keyword,
    Pattern,
    Link,
}

fn is_group(s: &str) -> bool {
    s.strip_prefix("tp").is_some_and(|r| !r.is_empty() && r.chars().all(|c| c.is_ascii_uppercase()))
}

/// Classifies one line of an emitted syntax file.
pub fn classify_syntax_line(line: &str) -> Option<SyntaxLine> {
    const GUARD: [&str; 4] = ["if exists(\"b:current_syntax\")", "  finish", "endif", "let b:current_syntax = \"tokipona\""];
    if line.is_empty() {
        return Some(SyntaxLine::Blank);
    }
    if line.starts_with('"') {
        return Some(SyntaxLine::Comment);
    }
    if GUARD.contains(&line) {
        return Some(SyntaxLine::Guard);
    }
    let parts: Vec<&str> = line.split(' ').collect();
    match parts.as_slice() {
        ["syn", "keyword", group, words @ ..]
            if is_group(group) && !words.is_empty() && words.iter().all(|w| !w.is_empty() && w.chars().all(|c| c.is_ascii_lowercase())) =>
        {
            Some(SyntaxLine::Keyword)
        }
        ["syn", "match", group, ..] if is_group(group) => {
            let rest = &line[line.find(group).expect("present") + group.len() + 1..];
            (rest.len() >= 2 && rest.starts_with('"') && rest.ends_with('"')).then_some(SyntaxLine::Pattern)
        }
        ["hi", "def", "link", group, target] if is_group(group) && valid_target(target) => Some(SyntaxLine::Link),
        _ => None,
    }
}

/// Checks every line against the syntax-file line grammar.
pub fn validate_syntax_file(text: &str) -> Result<(), String> {
    for (i, line) in text.lines().enumerate() {
        if classify_syntax_line(line).is_none() {
            return Err(format!("line {}: {line:?} matches no syntax-file form", i + 1));
        }
    }
    Ok(())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Rgb(pub u8, pub u8, pub u8);

impl Rgb {
    pub fn hex(self) -> String {
        format!("#{:02x}{:02x}{:02x}", self.0, self.1, self.2)
    }
}

impl FromStr for Rgb {
    type Err = HighlightError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || HighlightError::BadPalette(s.to_string());
        let h = s.strip_prefix('#').ok_or_else(bad)?;
        if h.len() != 6 || !h.is_ascii() {
            return Err(bad());
        }
        let byte = |i: usize| u8::from_str_radix(&h[i..i + 2], 16).map_err(|_| bad());
        Ok(Rgb(byte(0)?, byte(2)?, byte(4)?))
    }
}

impl fmt::Display for Rgb {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.hex())
    }
}

pub const ERROR_STYLE: &str = "tpERROR";

/// Group name to colour. `tpERROR` colours unknown words; groups without an
/// entry use the foreground colour.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Palette {
    pub foreground: Rgb,
    pub background: Rgb,
    pub colors: BTreeMap<String, Rgb>,
}

impl Default for Palette {
    fn default() -> Self {
        let colors = [
            ("tpNOUN", Rgb(0xeb, 0xdb, 0xb2)),
            ("tpADJECTIVE", Rgb(0x83, 0xa5, 0x98)),
            ("tpVERB", Rgb(0xb8, 0xbb, 0x26)),
            ("tpPARTICLE", Rgb(0xfb, 0x49, 0x34)),
            ("tpPRE", Rgb(0xd3, 0x86, 0x9b)),
            ("tpPREPOSITION", Rgb(0xfa, 0xbd, 0x2f)),
            ("tpNUMBER", Rgb(0xfe, 0x80, 0x19)),
            ("tpPROPER", Rgb(0x8e, 0xc0, 0x7c)),
            ("tpREST", Rgb(0xeb, 0xdb, 0xb2)),
            (ERROR_STYLE, Rgb(0xcc, 0x24, 0x1d)),
        ];
        Palette {
            foreground: Rgb(0xeb, 0xdb, 0xb2),
            background: Rgb(0x28, 0x28, 0x28),
            colors: colors.into_iter().map(|(k, v)| (k.to_string(), v)).collect(),
        }
    }
}

impl Palette {
    pub fn color(&self, group: &str) -> Rgb {
        self.colors.get(group).copied().unwrap_or(self.foreground)
    }

    /// Reads `group<TAB>#rrggbb` lines over the defaults. `foreground` and
    /// `background` are accepted as group names.
    pub fn parse(text: &str) -> Result<Palette, HighlightError> {
        let mut p = Palette::default();
        for line in text.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#')) {
            let (k, v) = line.split_once(char::is_whitespace).ok_or_else(|| HighlightError::BadPalette(line.into()))?;
            let rgb: Rgb = v.trim().parse()?;
            match k {
                "foreground" => p.foreground = rgb,
                "background" => p.background = rgb,
                _ => {
                    p.colors.insert(k.to_string(), rgb);
                }
            }
        }
        Ok(p)
    }
}

/// Style of one token: a group name, `tpERROR`, or none for punctuation
/// and quoted material. Depends only on the token and the scheme.
pub fn token_style(surface: &str, kind: TokenKind, scheme: &HighlightScheme) -> Option<String> {
    match kind {
        TokenKind::Word => scheme.group_of(surface).map(|g| g.name.clone()),
        TokenKind::Proper => Some(PROPER_GROUP.to_string()),
        TokenKind::Unknown => Some(ERROR_STYLE.to_string()),
        TokenKind::Foreign | TokenKind::Punct | TokenKind::Colon => None,
    }
}

/// Walks `text`, yielding gaps between tokens verbatim and tokens with
/// their style.
fn segments(text: &str, lex: &Lexicon, scheme: &HighlightScheme) -> Vec<(String, Option<String>, bool)> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut pos = 0;
    for t in tokenize(text, lex) {
        if t.span.0 > pos {
            out.push((chars[pos..t.span.0].iter().collect(), None, false));
        }
        out.push((t.surface.clone(), token_style(&t.surface, t.kind, scheme), true));
        pos = t.span.1;
    }
    if pos < chars.len() {
        out.push((chars[pos..].iter().collect(), None, false));
    }
    out
}

pub trait Renderer: Send + Sync {
    fn name(&self) -> &'static str;
    fn render(&self, text: &str, lex: &Lexicon, scheme: &HighlightScheme, palette: &Palette) -> String;
}

pub fn escape_html(s: &str) -> String {
    let mut out = String::with_capacity(s.len());
    for c in s.chars() {
        match c {
            '&' => out.push_str("&amp;"),
            '<' => out.push_str("&lt;"),
            '>' => out.push_str("&gt;"),
            '"' => out.push_str("&quot;"),
            '\'' => out.push_str("&#39;"),
            _ => out.push(c),
        }
    }
    out
}

pub struct HtmlRenderer;

impl Renderer for HtmlRenderer {
    fn name(&self) -> &'static str {
        "html"
    }

    fn render(&self, text: &str, lex: &Lexicon, scheme: &HighlightScheme, palette: &Palette) -> String {
        let mut body = String::new();
        for (s, style, is_token) in segments(text, lex, scheme) {
            if !is_token {
                body.push_str(&escape_html(&s));
                continue;
            }
            let (class, css) = match style.as_deref() {
                Some(ERROR_STYLE) => (
                    ERROR_STYLE,
                    format!("color:{};text-decoration:underline wavy", palette.color(ERROR_STYLE)),
                ),
                Some(g) => (g, format!("color:{}", palette.color(g))),
                None => ("tpPLAIN", format!("color:{}", palette.foreground)),
            };
            body.push_str(&format!("<span class=\"{class}\" style=\"{css}\">{}</span>", escape_html(&s)));
        }
        format!(
            "<!DOCTYPE html>\n<html lang=\"tok\">\n<head>\n<meta charset=\"utf-8\">\n<title>toki pona</title>\n</head>\n\
             <body style=\"background:{};color:{}\">\n<pre style=\"font-family:monospace\">{body}</pre>\n</body>\n</html>\n",
            palette.background, palette.foreground
        )
    }
}

/// Standard 16-colour terminal palette (xterm defaults).
const ANSI16: [Rgb; 16] = [
    Rgb(0, 0, 0),
    Rgb(205, 0, 0),
    Rgb(0, 205, 0),
    Rgb(205, 205, 0),
    Rgb(0, 0, 238),
    Rgb(205, 0, 205),
    Rgb(0, 205, 205),
    Rgb(229, 229, 229),
    Rgb(127, 127, 127),
    Rgb(255, 0, 0),
    Rgb(0, 255, 0),
    Rgb(255, 255, 0),
    Rgb(92, 92, 255),
    Rgb(255, 0, 255),
    Rgb(0, 255, 255),
    Rgb(255, 255, 255),
];

fn distance(a: Rgb, b: Rgb) -> u32 {
    let d = |x: u8, y: u8| (x as i32 - y as i32).pow(2) as u32;
    d(a.0, b.0) + d(a.1, b.1) + d(a.2, b.2)
}

/// SGR foreground code of the nearest of the 16 standard colours.
pub fn ansi16_code(c: Rgb) -> u8 {
    let i = (0..16).min_by_key(|&i| distance(c, ANSI16[i])).expect("non-empty") as u8;
    if i < 8 {
        30 + i
    } else {
        90 + i - 8
    }
}

/// Index into the 6×6×6 colour cube of 256-colour terminals.
pub fn ansi256_index(c: Rgb) -> u8 {
    let level = |v: u8| ((v as u16 * 5 + 127) / 255) as u8;
    16 + 36 * level(c.0) + 6 * level(c.1) + level(c.2)
}

fn render_ansi(text: &str, lex: &Lexicon, scheme: &HighlightScheme, sgr: impl Fn(Rgb) -> String, palette: &Palette) -> String {
    let mut out = String::new();
    for (s, style, _) in segments(text, lex, scheme) {
        match style.as_deref() {
            Some(ERROR_STYLE) => out.push_str(&format!("\x1b[4;{}m{s}\x1b[0m", sgr(palette.color(ERROR_STYLE)))),
            Some(g) => out.push_str(&format!("\x1b[{}m{s}\x1b[0m", sgr(palette.color(g)))),
            None => out.push_str(&s),
        }
    }
    out
}

pub struct Ansi16Renderer;

impl Renderer for Ansi16Renderer {
    fn name(&self) -> &'static str {
        "ansi16"
    }

    fn render(&self, text: &str, lex: &Lexicon, scheme: &HighlightScheme, palette: &Palette) -> String {
        render_ansi(text, lex, scheme, |c| ansi16_code(c).to_string(), palette)
    }
}

pub struct Ansi256Renderer;

impl Renderer for Ansi256Renderer {
    fn name(&self) -> &'static str {
        "ansi256"
    }

    fn render(&self, text: &str, lex: &Lexicon, scheme: &HighlightScheme, palette: &Palette) -> String {
        render_ansi(text, lex, scheme, |c| format!("38;5;{}", ansi256_index(c)), palette)
    }
}

pub fn renderers() -> Registry<dyn Renderer> {
    let mut r: Registry<dyn Renderer> = Registry::new();
    r.register("html", Box::new(HtmlRenderer));
    r.register("ansi16", Box::new(Ansi16Renderer));
    r.register("ansi256", Box::new(Ansi256Renderer));
    r
}

pub fn render_html(text: &str, lex: &Lexicon, scheme: &HighlightScheme, palette: &Palette) -> String {
    HtmlRenderer.render(text, lex, scheme, palette)
}
