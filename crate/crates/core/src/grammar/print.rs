//! Outline serialisation of parse trees.
//!
//! A tree is flattened into rows of (depth, label, value). The text form
//! writes one row per line:
//!
//! ```text
//! line  := indent label [" " value]
//! indent:= "  " repeated depth times
//! label := sentence | context | clause | la | continuation | vocative | o
//!        | subject | predicate | marker | possessive | preverb | verb
//!        | object | e | phrase | conj | head | mod | pi | prep
//!        | complement | prepositional | focus | interjection | terminator
//! ```
//!
//! The TSV form has the header `depth\tlabel\tvalue` and one row per line.
//! Values are token surfaces, or `li-elided` on a clause row.

use serde::Serialize;

use super::tree::{Clause, Coordinated, Modifier, PhraseNode, PrepPhrase, Sentence};

pub const LABELS: [&str; 26] = [
    "sentence",
    "context",
    "clause",
    "la",
    "continuation",
    "vocative",
    "o",
    "subject",
    "predicate",
    "marker",
    "possessive",
    "preverb",
    "verb",
    "object",
    "e",
    "phrase",
    "conj",
    "head",
    "mod",
    "pi",
    "prep",
    "complement",
    "focus",
    "interjection",
    "terminator",
    "prepositional",
];

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OutlineRow {
    pub depth: usize,
    pub label: String,
    pub value: String,
}

struct Outline(Vec<OutlineRow>);

impl Outline {
    fn row(&mut self, depth: usize, label: &str, value: &str) {
        self.0.push(OutlineRow { depth, label: label.to_string(), value: value.to_string() });
    }

    fn phrase(&mut self, d: usize, p: &PhraseNode) {
        self.row(d, "phrase", "");
        self.row(d + 1, "head", &p.head.surface);
        for m in &p.modifiers {
            match m {
                Modifier::Word(t) => self.row(d + 1, "mod", &t.surface),
                Modifier::Pi(g) => {
                    self.row(d + 1, "pi", &g.pi.surface);
                    self.phrase(d + 2, &g.inner);
                }
            }
        }
        for pp in &p.preps {
            self.pp(d + 1, pp);
        }
    }

    fn pp(&mut self, d: usize, pp: &PrepPhrase) {
        self.row(d, "prep", &pp.prep.surface);
        self.row(d + 1, "complement", "");
        self.phrase(d + 2, &pp.complement);
    }

    fn coordinated(&mut self, d: usize, c: &Coordinated) {
        self.phrase(d, &c.first);
        for (conj, p) in &c.rest {
            self.row(d, "conj", &conj.surface);
            self.phrase(d, p);
        }
    }

    fn clause(&mut self, d: usize, c: &Clause) {
        self.row(d, "clause", if c.li_elided { "li-elided" } else { "" });
        for ctx in &c.contexts {
            self.row(d + 1, "context", "");
            self.clause(d + 2, ctx);
        }
        if let Some(t) = &c.continuation {
            self.row(d + 1, "continuation", &t.surface);
        }
        if let Some(v) = &c.vocative {
            self.row(d + 1, "vocative", "");
            self.coordinated(d + 2, &v.phrase);
            if let Some(o) = &v.o {
                self.row(d + 2, "o", &o.surface);
            }
        }
        if let Some(s) = &c.subject {
            self.row(d + 1, "subject", "");
            self.coordinated(d + 2, s);
        }
        for p in &c.predicates {
            self.row(d + 1, "predicate", "");
            if let Some(m) = &p.marker {
                self.row(d + 2, "marker", &m.surface);
            }
            if let Some(pi) = &p.possessive_pi {
                self.row(d + 2, "possessive", &pi.surface);
            }
            for pv in &p.preverbs {
                self.row(d + 2, "preverb", &pv.surface);
            }
            if let Some(v) = &p.verb {
                self.row(d + 2, "verb", "");
                self.coordinated(d + 3, v);
            }
            for o in &p.objects {
                self.row(d + 2, "object", "");
                self.row(d + 3, "e", &o.e.surface);
                self.coordinated(d + 3, &o.phrase);
            }
        }
        if !c.prepositional.is_empty() {
            self.row(d + 1, "prepositional", "");
            for pp in &c.prepositional {
                self.pp(d + 2, pp);
            }
        }
        if let Some(q) = &c.question_focus {
            self.row(d + 1, "focus", &q.surface);
        }
        if let Some(la) = &c.la {
            self.row(d + 1, "la", &la.surface);
        }
    }
}

pub fn outline(s: &Sentence) -> Vec<OutlineRow> {
    let mut o = Outline(Vec::new());
    o.row(0, "sentence", "");
    o.clause(1, &s.clause);
    for t in &s.interjections {
        o.row(1, "interjection", &t.surface);
    }
    if let Some(t) = &s.terminator {
        o.row(1, "terminator", &t.surface);
    }
    o.0
}

pub fn to_text(rows: &[OutlineRow]) -> String {
    let mut out = String::new();
    for r in rows {
        out.push_str(&"  ".repeat(r.depth));
        out.push_str(&r.label);
        if !r.value.is_empty() {
            out.push(' ');
            out.push_str(&r.value);
        }
        out.push('\n');
    }
    out
}

pub const TSV_HEADER: &str = "depth\tlabel\tvalue";

pub fn to_tsv(rows: &[OutlineRow]) -> String {
    let mut out = String::from(TSV_HEADER);
    out.push('\n');
    for r in rows {
        out.push_str(&format!("{}\t{}\t{}\n", r.depth, r.label, r.value));
    }
    out
}

pub fn from_tsv(text: &str) -> Result<Vec<OutlineRow>, String> {
    let mut lines = text.lines();
    if lines.next() != Some(TSV_HEADER) {
        return Err("missing outline header".into());
    }
    lines
        .enumerate()
        .map(|(i, line)| {
            let cols: Vec<&str> = line.split('\t').collect();
            if cols.len() != 3 {
                return Err(format!("row {}: expected 3 columns", i + 1));
            }
            let depth = cols[0].parse().map_err(|e| format!("row {}: {e}", i + 1))?;
            Ok(OutlineRow { depth, label: cols[1].to_string(), value: cols[2].to_string() })
        })
        .collect()
}

/// Checks text output against the line grammar above.
pub fn check_text(text: &str) -> Result<(), String> {
    let mut prev_depth: Option<usize> = None;
    for (n, line) in text.lines().enumerate() {
        let body = line.trim_start_matches(' ');
        let indent = line.len() - body.len();
        if indent % 2 != 0 {
            return Err(format!("line {}: odd indentation", n + 1));
        }
        let depth = indent / 2;
        if prev_depth.map_or(depth != 0, |p| depth > p + 1) {
            return Err(format!("line {}: indentation jumps", n + 1));
        }
        let label = body.split(' ').next().unwrap_or("");
        if !LABELS.contains(&label) {
            return Err(format!("line {}: unknown label {label:?}", n + 1));
        }
        prev_depth = Some(depth);
    }
    Ok(())
}
