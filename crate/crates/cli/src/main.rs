mod output;

use std::error::Error;
use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use output::{Format, Table};
use tokipona::grammar::print::{outline, to_text};
use tokipona::grammar::{parse_text, pos_tag, ParseOptions, PrepositionTreatment, TagOptions};
use tokipona::highlight::{self, build_scheme, MergeMode, Palette, SchemeConfig};
use tokipona::phonotactics::{count_possible_words, syllabify, validate_word, CountingMode};
use tokipona::stats::{self, Restrict, Scope, SentenceSpaceQuery};
use tokipona::synth::{self, ComposeUnit, ParagraphSpec, PoemSpec, SynthConfig, Synthesizer};
use tokipona::wordnet::{self, GlossLookup};
use tokipona::Lexicon;

type Fallible<T> = Result<T, Box<dyn Error>>;

#[derive(Parser)]
#[command(name = "tokipona", version, about = "Toki Pona lexicon, grammar, generation and WordNet tools")]
struct Cli {
    /// Lexicon TSV to use instead of the bundled one.
    #[arg(long, global = true)]
    lexicon: Option<PathBuf>,
    /// Seed for every randomized command.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Vocabulary statistics.
    Stats(StatsArgs),
    /// Split words into syllables.
    Syllabify {
        #[arg(required = true)]
        words: Vec<String>,
    },
    /// Check words against the phonotactic rules.
    Validate {
        #[arg(required = true)]
        words: Vec<String>,
        #[arg(long, value_enum, default_value_t = ModeArg::Paper)]
        mode: ModeArg,
    },
    /// Number of possible words with a given syllable count.
    Count {
        /// Defaults to 1, 2 and 3.
        #[arg(long)]
        syllables: Option<usize>,
        #[arg(long, value_enum, default_value_t = ModeArg::Paper)]
        mode: ModeArg,
    },
    /// Parse text (argument or standard input) into trees.
    Parse(TextArgs),
    /// Part-of-speech tags for each token.
    Tag {
        #[command(flatten)]
        text: TextArgs,
        /// Narrow hybrid tags with the dictionary tags of each word.
        #[arg(long)]
        dictionary: bool,
        #[arg(long, value_enum, default_value_t = PrepArg::Hybrid)]
        prepositions: PrepArg,
    },
    /// Generate text.
    #[command(subcommand)]
    Synth(SynthCommand),
    /// Pick among generated candidates, reading choices from standard input.
    Compose {
        #[arg(long, value_enum, default_value_t = UnitArg::Sentence)]
        unit: UnitArg,
        /// Letters per verse, for `--unit verse`.
        #[arg(long, default_value_t = 12)]
        phonemes: usize,
        #[arg(long, default_value_t = 3)]
        candidates: usize,
    },
    /// Syntax-highlight schemes and highlighted output.
    #[command(subcommand)]
    Highlight(HighlightCommand),
    /// WordNet synset mappings.
    #[command(subcommand)]
    Wordnet(WordnetCommand),
}

#[derive(Args)]
struct StatsArgs {
    #[arg(long, value_enum, default_value_t = TableArg::Pos)]
    table: TableArg,
    /// Position filter for syllable and letter tables; all four by default.
    #[arg(long, value_enum)]
    scope: Option<ScopeArg>,
    #[arg(long, value_enum, default_value_t = RestrictArg::All)]
    restrict: RestrictArg,
    /// Phrase sizes N,V,O,P for `--table space`.
    #[arg(long, default_value = "1,1,1,1", value_parser = parse_space)]
    space: [u32; 4],
    /// Leave particles out of the sentence-space count.
    #[arg(long)]
    no_particles: bool,
}

#[derive(Args)]
struct TextArgs {
    /// Text to read; standard input when absent.
    text: Option<String>,
    /// Use the strict grammar options.
    #[arg(long)]
    strict: bool,
}

#[derive(Subcommand)]
enum SynthCommand {
    /// Independent sentences.
    Sentences {
        #[arg(long, default_value_t = 5)]
        count: usize,
    },
    Paragraph {
        #[arg(long, default_value_t = 5)]
        sentences: usize,
        #[arg(long)]
        max_words: Option<usize>,
        #[arg(long)]
        max_letters: Option<usize>,
    },
    Poem {
        #[arg(long, default_value_t = 2)]
        stanzas: usize,
        #[arg(long, default_value_t = 4)]
        verses: usize,
        /// Letters per verse.
        #[arg(long, default_value_t = 12)]
        phonemes: usize,
    },
}

#[derive(Args)]
struct SchemeArgs {
    #[arg(long, default_value = "full", value_parser = parse_merge)]
    merge: MergeMode,
    /// Link override, GROUP=TARGET; repeatable.
    #[arg(long = "link", value_parser = parse_link)]
    links: Vec<(String, String)>,
}

#[derive(Subcommand)]
enum HighlightCommand {
    /// Write syntax/tokipona.vim and ftdetect/tokipona.vim under a directory.
    EmitVim {
        #[arg(long)]
        out: PathBuf,
        #[command(flatten)]
        scheme: SchemeArgs,
    },
    /// Groups with their sizes and link targets.
    Groups {
        #[command(flatten)]
        scheme: SchemeArgs,
    },
    /// Standalone HTML page.
    Html {
        text: Option<String>,
        #[command(flatten)]
        scheme: SchemeArgs,
        /// Lines of `group #rrggbb`.
        #[arg(long)]
        palette: Option<PathBuf>,
    },
    /// Terminal escape sequences.
    Ansi {
        text: Option<String>,
        #[command(flatten)]
        scheme: SchemeArgs,
        #[arg(long)]
        palette: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = ColorsArg::C256)]
        colors: ColorsArg,
    },
}

#[derive(Subcommand)]
enum WordnetCommand {
    /// Build a mapping and dump it.
    Build {
        /// WordNet database directory.
        #[arg(long)]
        db: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = MappingArg::All)]
        mode: MappingArg,
        /// Multiword gloss lookup.
        #[arg(long, value_enum, default_value_t = LookupArg::Words)]
        lookup: LookupArg,
        /// Registered strategy name, overriding --mode.
        #[arg(long)]
        strategy: Option<String>,
        /// Write the coverage report to this file.
        #[arg(long)]
        coverage: Option<PathBuf>,
    },
    /// Synset totals of the database.
    Info {
        #[arg(long)]
        db: Option<PathBuf>,
    },
    /// Hyponym and antonym pairs.
    Relations,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Paper,
    Strict,
}

#[derive(Clone, Copy, ValueEnum)]
enum TableArg {
    Pos,
    Syllables,
    Letters,
    Lengths,
    Space,
}

#[derive(Clone, Copy, ValueEnum)]
enum ScopeArg {
    All,
    First,
    Last,
    Middle,
}

#[derive(Clone, Copy, ValueEnum)]
enum RestrictArg {
    All,
    Vowels,
    Consonants,
}

#[derive(Clone, Copy, ValueEnum)]
enum PrepArg {
    Hybrid,
    Noun,
    Adjective,
    Verb,
}

#[derive(Clone, Copy, ValueEnum)]
enum UnitArg {
    Sentence,
    Verse,
}

#[derive(Clone, Copy, ValueEnum)]
enum ColorsArg {
    #[value(name = "16")]
    C16,
    #[value(name = "256")]
    C256,
}

#[derive(Clone, Copy, ValueEnum)]
enum MappingArg {
    All,
    Noprep,
    Matched,
}

#[derive(Clone, Copy, ValueEnum)]
enum LookupArg {
    Words,
    Collocation,
}

impl From<ModeArg> for CountingMode {
    fn from(m: ModeArg) -> Self {
        match m {
            ModeArg::Paper => CountingMode::PaperCompatible,
            ModeArg::Strict => CountingMode::Strict,
        }
    }
}

impl From<ScopeArg> for Scope {
    fn from(s: ScopeArg) -> Self {
        match s {
            ScopeArg::All => Scope::All,
            ScopeArg::First => Scope::First,
            ScopeArg::Last => Scope::Last,
            ScopeArg::Middle => Scope::Middle,
        }
    }
}

fn parse_merge(s: &str) -> Result<MergeMode, String> {
    s.parse().map_err(|e: highlight::HighlightError| e.to_string())
}

fn parse_space(s: &str) -> Result<[u32; 4], String> {
    let parts = s.split(',').map(|p| p.trim().parse::<u32>().map_err(|e| format!("{p:?}: {e}"))).collect::<Result<Vec<_>, _>>()?;
    parts.try_into().map_err(|_| format!("expected four sizes N,V,O,P, got {s:?}"))
}

fn parse_link(s: &str) -> Result<(String, String), String> {
    s.split_once('=').map(|(g, t)| (g.to_string(), t.to_string())).ok_or_else(|| format!("expected GROUP=TARGET, got {s:?}"))
}

/// Output plus whether the command found a domain failure.
struct Report {
    out: String,
    failed: bool,
}

impl From<String> for Report {
    fn from(out: String) -> Self {
        Report { out, failed: false }
    }
}

fn read_text(text: Option<String>) -> Fallible<String> {
    match text {
        Some(t) if t != "-" => Ok(t),
        _ => {
            let mut s = String::new();
            io::stdin().read_to_string(&mut s)?;
            Ok(s)
        }
    }
}

fn scheme(lex: &Lexicon, args: SchemeArgs) -> Fallible<highlight::HighlightScheme> {
    let cfg = SchemeConfig { merge_mode: args.merge, link_map: args.links.into_iter().collect() };
    Ok(build_scheme(lex, &cfg)?)
}

fn palette(path: Option<PathBuf>) -> Fallible<Palette> {
    match path {
        Some(p) => Ok(Palette::parse(&fs::read_to_string(&p).map_err(|e| format!("{}: {e}", p.display()))?)?),
        None => Ok(Palette::default()),
    }
}

fn frequency_rows(t: &mut Table, table: &stats::PositionalFrequencyTable, restrict: Option<Restrict>) {
    for (rank, r) in table.rows.iter().enumerate() {
        let mut row = vec![table.scope.as_str().to_string()];
        if let Some(rs) = restrict {
            row.push(restrict_name(rs).to_string());
        }
        row.extend([(rank + 1).to_string(), r.item.clone(), r.count.to_string(), r.percent.to_string(), table.total.to_string()]);
        t.push(row);
    }
}

fn restrict_name(r: Restrict) -> &'static str {
    match r {
        Restrict::All => "all",
        Restrict::Vowels => "vowels",
        Restrict::Consonants => "consonants",
    }
}

fn cmd_stats(lex: &Lexicon, a: StatsArgs) -> Fallible<Table> {
    let scopes: Vec<Scope> = a.scope.map_or(Scope::ALL.to_vec(), |s| vec![s.into()]);
    Ok(match a.table {
        TableArg::Pos => {
            let h = stats::pos_histogram(lex);
            let mut t = Table::new(&["tag", "all", "chosen"]);
            for r in &h.rows {
                t.push(vec![r.tag.to_string(), r.all.to_string(), r.chosen.to_string()]);
            }
            t.push(vec!["TOTAL".into(), h.total_all.to_string(), h.total_chosen.to_string()]);
            t
        }
        TableArg::Syllables => {
            let mut t = Table::new(&["scope", "rank", "syllable", "count", "percent", "total"]);
            for s in scopes {
                frequency_rows(&mut t, &stats::syllable_frequency(lex, s), None);
            }
            t
        }
        TableArg::Letters => {
            let restrict = match a.restrict {
                RestrictArg::All => Restrict::All,
                RestrictArg::Vowels => Restrict::Vowels,
                RestrictArg::Consonants => Restrict::Consonants,
            };
            let mut t = Table::new(&["scope", "restrict", "rank", "letter", "count", "percent", "total"]);
            for s in scopes {
                frequency_rows(&mut t, &stats::letter_frequency(lex, s, restrict), Some(restrict));
            }
            t
        }
        TableArg::Lengths => {
            let r = stats::word_length_report(lex);
            let mut t = Table::new(&["syllables", "count", "percent"]);
            for row in &r.rows {
                t.push(vec![row.syllables.to_string(), row.count.to_string(), row.percent.to_string()]);
            }
            t.push(vec!["TOTAL".into(), r.total.to_string(), "100.00%".into()]);
            t
        }
        TableArg::Space => {
            let q = SentenceSpaceQuery { n: a.space[0], v: a.space[1], o: a.space[2], p: a.space[3], with_particles: !a.no_particles };
            let n = stats::sentence_space(q)?;
            let mut t = Table::new(&["n", "v", "o", "p", "particles", "sentences"]);
            t.push(vec![q.n.to_string(), q.v.to_string(), q.o.to_string(), q.p.to_string(), q.with_particles.to_string(), n.to_string()]);
            t
        }
    })
}

fn parse_options(strict: bool) -> ParseOptions {
    if strict {
        ParseOptions::strict()
    } else {
        ParseOptions::lenient()
    }
}

fn cmd_parse(lex: &Lexicon, a: TextArgs, format: Format) -> Fallible<Report> {
    let text = read_text(a.text)?;
    let out = parse_text(&text, lex, &parse_options(a.strict));
    for d in out.diagnostics.iter().chain(&out.ambiguities) {
        eprintln!("{d}");
    }
    let failed = out.has_errors();
    let body = if format == Format::Text {
        out.sentences.iter().map(|s| to_text(&outline(s))).collect::<Vec<_>>().join("\n")
    } else {
        let mut t = Table::new(&["sentence", "depth", "label", "value"]);
        for (i, s) in out.sentences.iter().enumerate() {
            for r in outline(s) {
                t.push(vec![(i + 1).to_string(), r.depth.to_string(), r.label, r.value]);
            }
        }
        t.render(format)
    };
    Ok(Report { out: body, failed })
}

fn cmd_tag(lex: &Lexicon, a: TextArgs, dictionary: bool, prep: PrepArg) -> Fallible<(Table, bool)> {
    let text = read_text(a.text)?;
    let out = parse_text(&text, lex, &parse_options(a.strict));
    for d in &out.diagnostics {
        eprintln!("{d}");
    }
    let prepositions = match prep {
        PrepArg::Hybrid => PrepositionTreatment::Hybrid,
        PrepArg::Noun => PrepositionTreatment::Noun,
        PrepArg::Adjective => PrepositionTreatment::Adjective,
        PrepArg::Verb => PrepositionTreatment::Verb,
    };
    let opts = TagOptions { resolve_with_dictionary: dictionary, prepositions };
    let mut t = Table::new(&["sentence", "index", "token", "tag"]);
    for (i, s) in out.sentences.iter().enumerate() {
        for (j, tt) in pos_tag(s, lex, opts).into_iter().enumerate() {
            t.push(vec![(i + 1).to_string(), (j + 1).to_string(), tt.token.surface, tt.assignment.to_string()]);
        }
    }
    Ok((t, out.has_errors()))
}

fn cmd_synth(lex: &Lexicon, cfg: &SynthConfig, cmd: SynthCommand, format: Format) -> Fallible<String> {
    let (text, table) = match cmd {
        SynthCommand::Sentences { count } => {
            let mut s = Synthesizer::new(lex, cfg.clone())?;
            let mut t = Table::new(&["index", "text"]);
            let mut lines = String::new();
            for i in 0..count {
                let sentence = s.sentence().unparse();
                lines.push_str(&sentence);
                lines.push('\n');
                t.push(vec![(i + 1).to_string(), sentence]);
            }
            (lines, t)
        }
        SynthCommand::Paragraph { sentences, max_words, max_letters } => {
            let p = synth::synth_paragraph(lex, cfg, &ParagraphSpec { sentences, max_words, max_letters })?;
            let mut t = Table::new(&["index", "text"]);
            t.push(vec!["1".into(), p.clone()]);
            (p + "\n", t)
        }
        SynthCommand::Poem { stanzas, verses, phonemes } => {
            let poem = synth::synth_poem(lex, cfg, &PoemSpec { stanzas, verses_per_stanza: verses, phonemes_per_verse: phonemes })?;
            let mut t = Table::new(&["stanza", "verse", "text"]);
            for (i, stanza) in poem.trim_end().split("\n\n").enumerate() {
                for (j, verse) in stanza.lines().enumerate() {
                    t.push(vec![(i + 1).to_string(), (j + 1).to_string(), verse.to_string()]);
                }
            }
            (poem, t)
        }
    };
    Ok(if format == Format::Text { text } else { table.render(format) })
}

fn cmd_highlight(lex: &Lexicon, cmd: HighlightCommand, format: Format) -> Fallible<String> {
    Ok(match cmd {
        HighlightCommand::EmitVim { out, scheme: args } => {
            let s = scheme(lex, args)?;
            let syntax = out.join("syntax").join("tokipona.vim");
            let detect = out.join("ftdetect").join("tokipona.vim");
            for p in [&syntax, &detect] {
                fs::create_dir_all(p.parent().expect("has parent"))?;
            }
            fs::write(&syntax, highlight::vim_syntax_string(&s))?;
            let mut buf = Vec::new();
            highlight::emit_filetype_detect(&mut buf)?;
            fs::write(&detect, buf)?;
            let mut t = Table::new(&["file"]);
            t.push(vec![syntax.display().to_string()]);
            t.push(vec![detect.display().to_string()]);
            t.render(format)
        }
        HighlightCommand::Groups { scheme: args } => {
            let s = scheme(lex, args)?;
            let mut t = Table::new(&["group", "distinct", "members", "link"]);
            for g in &s.groups {
                let members = g.pattern.clone().unwrap_or_else(|| g.members.join(" "));
                t.push(vec![g.name.clone(), g.distinct.to_string(), members, g.link_target.clone()]);
            }
            t.render(format)
        }
        HighlightCommand::Html { text, scheme: args, palette: p } => {
            let text = read_text(text)?;
            highlight::render_html(&text, lex, &scheme(lex, args)?, &palette(p)?)
        }
        HighlightCommand::Ansi { text, scheme: args, palette: p, colors } => {
            let text = read_text(text)?;
            let name = match colors {
                ColorsArg::C16 => "ansi16",
                ColorsArg::C256 => "ansi256",
            };
            let renderers = highlight::renderers();
            let r = renderers.get(name).expect("registered");
            r.render(&text, lex, &scheme(lex, args)?, &palette(p)?)
        }
    })
}

fn load_db(db: Option<PathBuf>) -> Fallible<wordnet::WordnetDb> {
    let db = wordnet::load_wordnet_db(&db.unwrap_or_else(wordnet::default_db_dir))?;
    if let Some(w) = db.version_warning() {
        eprintln!("warning: {w}");
    }
    Ok(db)
}

fn cmd_wordnet(lex: &Lexicon, cmd: WordnetCommand, format: Format) -> Fallible<String> {
    Ok(match cmd {
        WordnetCommand::Build { db, mode, lookup, strategy, coverage } => {
            let db = load_db(db)?;
            let name = strategy.unwrap_or_else(|| {
                match mode {
                    MappingArg::All => "all",
                    MappingArg::Noprep => "noprep",
                    MappingArg::Matched => "matched",
                }
                .to_string()
            });
            let lookup = match lookup {
                LookupArg::Words => GlossLookup::CollocationAndWords,
                LookupArg::Collocation => GlossLookup::CollocationOnly,
            };
            let m = wordnet::build_mapping_with(lex, &db, &name, lookup)?;
            if let Some(p) = coverage {
                fs::write(&p, m.coverage_report())?;
            }
            match format {
                Format::Text => m.coverage_report(),
                Format::Tsv => m.to_tsv(),
                Format::JsonLines => {
                    let mut t = Table::new(&["lemma", "mode", "pos", "synset"]);
                    for (lemma, set) in &m.map {
                        for s in set {
                            t.push(vec![lemma.clone(), m.mode.clone(), s.pos.to_string(), format!("{:08}", s.offset)]);
                        }
                    }
                    t.render(format)
                }
            }
        }
        WordnetCommand::Info { db } => {
            let db = load_db(db)?;
            let mut t = Table::new(&["pos", "synsets"]);
            for pos in wordnet::WnPos::ALL {
                t.push(vec![pos.to_string(), db.synset_count(pos).to_string()]);
            }
            t.push(vec!["TOTAL".into(), db.total_synsets().to_string()]);
            t.render(format)
        }
        WordnetCommand::Relations => {
            let r = wordnet::relations();
            let mut t = Table::new(&["relation", "first", "second"]);
            for (a, b) in &r.hyponyms {
                t.push(vec!["hyponym".into(), a.clone(), b.clone()]);
            }
            for (a, b) in &r.antonyms {
                t.push(vec!["antonym".into(), a.clone(), b.clone()]);
            }
            t.render(format)
        }
    })
}

fn run(cli: Cli) -> Fallible<Report> {
    let lex = Lexicon::load(cli.lexicon.as_deref())?;
    let format = cli.format;
    let cfg = SynthConfig::with_seed(cli.seed);
    Ok(match cli.command {
        Command::Stats(a) => cmd_stats(&lex, a)?.render(format).into(),
        Command::Syllabify { words } => {
            let mut t = Table::new(&["word", "syllables", "count", "error"]);
            let mut failed = false;
            for w in words {
                match syllabify(&w) {
                    Ok(s) => t.push(vec![w, s.strings().join("-"), s.len().to_string(), String::new()]),
                    Err(e) => {
                        failed = true;
                        eprintln!("{w}: {e}");
                        t.push(vec![w, String::new(), "0".into(), e.to_string()]);
                    }
                }
            }
            Report { out: t.render(format), failed }
        }
        Command::Validate { words, mode } => {
            let mode: CountingMode = mode.into();
            let mut t = Table::new(&["word", "mode", "valid", "reason"]);
            let mut failed = false;
            for w in words {
                let r = validate_word(&w, mode);
                failed |= r.is_err();
                let reason = r.as_ref().err().map(ToString::to_string).unwrap_or_default();
                t.push(vec![w, mode.name().into(), r.is_ok().to_string(), reason]);
            }
            Report { out: t.render(format), failed }
        }
        Command::Count { syllables, mode } => {
            let mode: CountingMode = mode.into();
            let mut t = Table::new(&["syllables", "mode", "words"]);
            for n in syllables.map_or(vec![1, 2, 3], |n| vec![n]) {
                t.push(vec![n.to_string(), mode.name().into(), count_possible_words(n, mode)?.to_string()]);
            }
            t.render(format).into()
        }
        Command::Parse(a) => cmd_parse(&lex, a, format)?,
        Command::Tag { text, dictionary, prepositions } => {
            let (t, failed) = cmd_tag(&lex, text, dictionary, prepositions)?;
            Report { out: t.render(format), failed }
        }
        Command::Synth(c) => cmd_synth(&lex, &cfg, c, format)?.into(),
        Command::Compose { unit, phonemes, candidates } => {
            let unit = match unit {
                UnitArg::Sentence => ComposeUnit::Sentence,
                UnitArg::Verse => ComposeUnit::Verse { phonemes },
            };
            let stdin = io::stdin();
            let mut input = stdin.lock();
            let stdout = io::stdout();
            let mut out = stdout.lock();
            let outcome = synth::interactive_compose(&lex, &cfg, unit, candidates, &mut input, &mut out)?;
            if !outcome.finished {
                eprintln!("input ended before f; keeping the picks so far");
            }
            let lead = if outcome.finished { "\n" } else { "" };
            Report::from(format!("{lead}{}\n", outcome.text))
        }
        Command::Highlight(c) => cmd_highlight(&lex, c, format)?.into(),
        Command::Wordnet(c) => cmd_wordnet(&lex, c, format)?.into(),
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(report) => {
            let mut stdout = io::stdout().lock();
            if stdout.write_all(report.out.as_bytes()).and_then(|_| stdout.flush()).is_err() {
                return ExitCode::from(1);
            }
            if report.failed {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(e) => {
            eprintln!("tokipona: {e}");
            ExitCode::from(1)
        }
    }
}
