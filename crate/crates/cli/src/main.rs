mod input;
mod render;

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Duration;

use altlab::algebra::{ContentMorphism, MonoidDump, RecognizedLanguage};
use altlab::chains::{saturate_with, Chain, FamilyDump, SaturationOptions};
use altlab::deciders::{classify_with, compute_b_schemas, decide_separation_with, Logic};
use altlab::oracle::{brute_chains, ef_leq_with_budget, verify_bundle, witness_for_chain, BundleCheck, GameConfig};
use altlab::{Alphabet, ErrorKind, LetterSet};
use clap::{Args, Parser, Subcommand, ValueEnum};
use log::{info, LevelFilter};
use serde_json::json;

use input::{load_dfa, CliError, LanguageArgs};

#[derive(Debug, Parser)]
#[command(name = "altlab", version, about = "Quantifier alternation decisions for regular languages")]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Args)]
struct Global {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    /// Largest syntactic monoid accepted
    #[arg(long, default_value_t = 64, global = true)]
    max_monoid: usize,
    /// Largest number of maximal chain sets kept during saturation
    #[arg(long, default_value_t = 20_000, global = true)]
    max_sets: usize,
    #[arg(long, default_value_t = 300, global = true)]
    timeout_secs: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the syntactic ordered monoid
    Monoid {
        #[command(flatten)]
        lang: LanguageArgs,
        /// Print the JSON dump (same as --format json)
        #[arg(long)]
        dump: bool,
    },
    /// Saturate compatible sets of chains and print the maximal sets
    Chains {
        #[command(flatten)]
        lang: LanguageArgs,
        #[arg(long, default_value_t = 2)]
        length: usize,
        /// Only this sub-alphabet, e.g. `{a}` or `ab`
        #[arg(long)]
        alphabet_subset: Option<String>,
        /// Print the JSON dump (same as --format json)
        #[arg(long)]
        dump: bool,
    },
    /// Print the B-schemas
    Schemas {
        #[command(flatten)]
        lang: LanguageArgs,
        #[arg(long)]
        alphabet_subset: Option<String>,
    },
    /// Decide every class of the hierarchy
    Classify {
        #[command(flatten)]
        lang: LanguageArgs,
    },
    /// Decide whether the first language is separable from the second
    Separate(SeparateArgs),
    /// Build and verify witness words for a saturated chain
    Witness {
        #[command(flatten)]
        lang: LanguageArgs,
        /// Element ids, e.g. `0,1`
        #[arg(long)]
        chain: String,
        #[arg(long, default_value_t = 1)]
        rank: usize,
        #[arg(long)]
        alphabet_subset: Option<String>,
    },
    /// Brute-force ground truth
    #[command(subcommand)]
    Oracle(OracleCommand),
}

#[derive(Debug, Args)]
struct SeparateArgs {
    #[arg(long, conflicts_with = "dfa1", required_unless_present = "dfa1")]
    regex1: Option<String>,
    #[arg(long, conflicts_with = "dfa2", required_unless_present = "dfa2")]
    regex2: Option<String>,
    /// Alphabet shared by --regex1 and --regex2
    #[arg(long)]
    alphabet: Option<String>,
    #[arg(long)]
    dfa1: Option<PathBuf>,
    #[arg(long)]
    dfa2: Option<PathBuf>,
    #[arg(long, default_value = "sigma2")]
    logic: String,
}

#[derive(Debug, Subcommand)]
enum OracleCommand {
    /// Play the game for w <= w2
    Ef {
        #[arg(long)]
        alphabet: String,
        /// First word (`_` for the empty word)
        #[arg(long)]
        word1: String,
        #[arg(long)]
        word2: String,
        #[arg(long, default_value_t = 2)]
        level: usize,
        #[arg(long, default_value_t = 2)]
        rank: usize,
    },
    /// Enumerate chains realized by short words
    BruteChains {
        #[command(flatten)]
        lang: LanguageArgs,
        #[command(flatten)]
        brute: BruteArgs,
    },
    /// Compare brute-force chains with saturated ones
    Compare {
        #[command(flatten)]
        lang: LanguageArgs,
        #[command(flatten)]
        brute: BruteArgs,
    },
}

#[derive(Debug, Clone, Args)]
struct BruteArgs {
    #[arg(long, default_value_t = 2)]
    level: usize,
    #[arg(long, default_value_t = 2)]
    rank: usize,
    #[arg(long, default_value_t = 2)]
    length: usize,
    #[arg(long, default_value_t = 6)]
    max_len: usize,
}

fn main() -> ExitCode {
    init_logging();
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            println!("{out}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(match &e {
                CliError::Core(e) => match e.kind() {
                    ErrorKind::Input => 2,
                    ErrorKind::ResourceCap => 3,
                    ErrorKind::Internal => 4,
                },
                CliError::Io(_) => 2,
                CliError::Internal(_) => 4,
            })
        }
    }
}

fn init_logging() {
    let level = match std::env::var("ALTLAB_LOG").as_deref() {
        Ok("trace") => LevelFilter::Trace,
        Ok("info") => LevelFilter::Info,
        _ => LevelFilter::Error,
    };
    env_logger::Builder::new().filter_level(level).format_timestamp(None).init();
}

impl Global {
    fn saturation(&self, max_length: usize) -> SaturationOptions {
        SaturationOptions {
            max_sets: self.max_sets,
            timeout: Some(Duration::from_secs(self.timeout_secs)),
            max_length: max_length.max(3),
            ..SaturationOptions::default()
        }
    }

    fn json(&self) -> bool {
        self.format == Format::Json
    }
}

fn subset(l: &RecognizedLanguage, text: Option<&str>) -> Result<Option<LetterSet>, CliError> {
    Ok(match text {
        Some(t) => Some(l.alphabet().subset(t)?),
        None => None,
    })
}

fn pretty(v: &serde_json::Value) -> String {
    serde_json::to_string_pretty(v).expect("values serialize")
}

fn run(cli: &Cli) -> Result<String, CliError> {
    let g = &cli.global;
    match &cli.command {
        Command::Monoid { lang, dump } => {
            let l = lang.load(g.max_monoid)?;
            info!("syntactic monoid has {} elements", l.monoid().size());
            if *dump || g.json() {
                Ok(MonoidDump::from_language(&l).to_json())
            } else {
                Ok(render::monoid(&l))
            }
        }
        Command::Chains {
            lang,
            length,
            alphabet_subset,
            dump,
        } => {
            let l = lang.load(g.max_monoid)?;
            let only = subset(&l, alphabet_subset.as_deref())?;
            let beta = ContentMorphism::new(l.morphism.clone());
            let family = saturate_with(&beta, *length, &g.saturation(*length))?;
            if *dump || g.json() {
                Ok(FamilyDump::new(&family, only).to_json())
            } else {
                Ok(render::family(&l, &family, only))
            }
        }
        Command::Schemas { lang, alphabet_subset } => {
            let l = lang.load(g.max_monoid)?;
            let only = subset(&l, alphabet_subset.as_deref())?;
            let beta = ContentMorphism::new(l.morphism.clone());
            let family = saturate_with(&beta, 2, &g.saturation(2))?;
            let alphabets: Vec<LetterSet> = match only {
                Some(b) => vec![b],
                None => LetterSet::all_by_size(l.alphabet().len()),
            };
            let per: Vec<(LetterSet, _)> = alphabets.into_iter().map(|b| (b, compute_b_schemas(&family, b))).collect();
            if g.json() {
                let map: serde_json::Map<String, serde_json::Value> = per
                    .iter()
                    .map(|(b, s)| (l.alphabet().render_subset(*b), serde_json::to_value(s).expect("schemas serialize")))
                    .collect();
                Ok(pretty(&serde_json::Value::Object(map)))
            } else {
                Ok(render::schemas(&l, &per))
            }
        }
        Command::Classify { lang } => {
            let l = lang.load(g.max_monoid)?;
            let report = classify_with(&l, &g.saturation(3))?;
            if g.json() {
                Ok(pretty(&report.to_json()))
            } else {
                Ok(render::report(&l, &report))
            }
        }
        Command::Separate(args) => {
            let logic: Logic = args.logic.parse()?;
            let alphabet = args.alphabet.as_deref();
            let load = |regex: &Option<String>, dfa: &Option<PathBuf>| -> Result<RecognizedLanguage, CliError> {
                let dfa = load_dfa(regex.as_deref(), alphabet, dfa.as_ref())?;
                Ok(altlab::algebra::syntactic_morphism(&dfa, g.max_monoid)?)
            };
            let l1 = load(&args.regex1, &args.dfa1)?;
            let l2 = load(&args.regex2, &args.dfa2)?;
            let verdict = decide_separation_with(&l1, &l2, logic, &g.saturation(2))?;
            if g.json() {
                Ok(pretty(&serde_json::to_value(&verdict).expect("verdicts serialize")))
            } else {
                Ok(render::separation(&verdict, logic))
            }
        }
        Command::Witness {
            lang,
            chain,
            rank,
            alphabet_subset,
        } => {
            let l = lang.load(g.max_monoid)?;
            let only = subset(&l, alphabet_subset.as_deref())?;
            let chain = Chain::parse(chain)
                .ok_or_else(|| altlab::Error::InvalidArgument(format!("cannot parse chain '{chain}'")))?;
            let beta = ContentMorphism::new(l.morphism.clone());
            let family = saturate_with(&beta, chain.len(), &g.saturation(chain.len()))?;
            let bundle = witness_for_chain(&family, &chain, only, *rank)?;
            let check = verify_bundle(&bundle, &beta);
            let out = if g.json() {
                pretty(&json!({
                    "chain": bundle.chain,
                    "rank": bundle.rank,
                    "alphabet": l.alphabet().render_subset(bundle.alphabet),
                    "words": bundle.words.iter().map(|w| l.alphabet().render(w)).collect::<Vec<_>>(),
                    "flags": bundle.flags,
                    "verified": check.passed(),
                    "diagnosis": match &check { BundleCheck::Failed(d) => Some(d.clone()), BundleCheck::Passed => None },
                }))
            } else {
                render::bundle(&l, &bundle, &check)
            };
            match check {
                BundleCheck::Passed => Ok(out),
                BundleCheck::Failed(d) => {
                    println!("{out}");
                    Err(CliError::Internal(format!("witness failed verification: {d}")))
                }
            }
        }
        Command::Oracle(cmd) => oracle(g, cmd),
    }
}

fn oracle(g: &Global, cmd: &OracleCommand) -> Result<String, CliError> {
    match cmd {
        OracleCommand::Ef {
            alphabet,
            word1,
            word2,
            level,
            rank,
        } => {
            let alphabet = Alphabet::parse(alphabet)?;
            let (w1, w2) = (alphabet.word(word1)?, alphabet.word(word2)?);
            let holds = ef_leq_with_budget(&w1, &w2, GameConfig::new(*level, *rank), 1 << 24)?;
            if g.json() {
                Ok(pretty(&json!({ "level": level, "rank": rank, "leq": holds })))
            } else {
                Ok(format!("{word1} <=[{level},{rank}] {word2}: {}", if holds { "yes" } else { "no" }))
            }
        }
        OracleCommand::BruteChains { lang, brute } => {
            let l = lang.load(g.max_monoid)?;
            let beta = ContentMorphism::new(l.morphism.clone());
            let got = brute_chains(&beta, brute.level, brute.rank, brute.length, brute.max_len)?;
            if g.json() {
                Ok(pretty(&json!({
                    "level": got.level,
                    "rank": got.rank,
                    "length": got.length,
                    "max_len": got.max_len,
                    "approximation": altlab::oracle::BruteChains::APPROXIMATION,
                    "chains": got.chains,
                })))
            } else {
                let mut out = format!(
                    "chains of length {} at level {}, rank {}, words <= {}\n({})\n",
                    got.length,
                    got.level,
                    got.rank,
                    got.max_len,
                    altlab::oracle::BruteChains::APPROXIMATION
                );
                for c in &got.chains {
                    out.push_str(&format!("  {}\n", render::chain(&l, c)));
                }
                Ok(out.trim_end().to_string())
            }
        }
        OracleCommand::Compare { lang, brute } => {
            let l = lang.load(g.max_monoid)?;
            let beta = ContentMorphism::new(l.morphism.clone());
            let got = brute_chains(&beta, 2, brute.rank, brute.length, brute.max_len)?;
            let family = saturate_with(&beta, brute.length, &g.saturation(brute.length))?;
            let saturated = family.chains(None);
            let missing: Vec<&Chain> = saturated.iter().filter(|c| !got.contains(c, None)).collect();
            let extra: Vec<&Chain> = got.chains.iter().filter(|c| !saturated.contains(c)).collect();
            if g.json() {
                Ok(pretty(&json!({
                    "rank": brute.rank,
                    "length": brute.length,
                    "max_len": brute.max_len,
                    "saturated_not_found": missing,
                    "found_not_saturated": extra,
                })))
            } else {
                let list = |v: &[&Chain]| v.iter().map(|c| render::chain(&l, c)).collect::<Vec<_>>().join(" ");
                Ok(format!(
                    "saturated chains: {}\nbrute-force chains: {}\nsaturated but not found with words <= {}: {}\nfound at rank {} but not saturated: {}",
                    saturated.len(),
                    got.chains.len(),
                    brute.max_len,
                    list(&missing),
                    brute.rank,
                    list(&extra)
                ))
            }
        }
    }
}
