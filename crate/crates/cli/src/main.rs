//! Batch frontend: validate, stats, compare, align, heads, roundtrip.
//!
//! Exit codes: 0 success, 1 validation failures (or a failed roundtrip
//! check), 2 usage/IO errors.

mod report;

use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use cgel_core::compare::{compare_corpus, pair_with_conllu, CompareOptions, PairingMode};
use cgel_core::conllu::read_conllu;
use cgel_core::notation::{parse_document_with, serialize_document, NotationDocument, ParserOptions};
use cgel_core::ptb::read_ptb;
use cgel_core::tree::CgelTree;
use cgel_core::validate::{validate_corpus, RuleProfile};
use cgel_core::AlignmentOptions;

#[derive(Parser)]
#[command(name = "cgel", version, about = "CGEL treebank toolkit", max_term_width = 100)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Tsv,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum PairBy {
    /// Match sentences via `sent_id` metadata.
    SentId,
    /// Match sentences by position in the files.
    Order,
}

#[derive(Args)]
struct CommonOpts {
    /// Report format.
    #[arg(long, value_enum, default_value = "tsv", global = true)]
    format: Format,
    /// Write reports into this directory instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Tolerate minor label-spelling variants from other corpus revisions.
    #[arg(long, global = true)]
    compat_labels: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Check trees against the structural rule catalog.
    Validate {
        #[command(flatten)]
        common: CommonOpts,
        /// `all` or a comma-separated rule list, e.g. `HEAD-1,GAP-1`.
        #[arg(long, default_value = "all")]
        profile: String,
        /// Tree files in the textual notation (`-` for stdin).
        #[arg(required = true)]
        files: Vec<String>,
    },
    /// Tree/token counts, label census, and POS entropy.
    Stats {
        #[command(flatten)]
        common: CommonOpts,
        #[arg(required = true)]
        files: Vec<String>,
    },
    /// Compare against parallel UD (and optionally PTB) treebanks.
    Compare {
        #[command(flatten)]
        common: CommonOpts,
        /// Parallel CoNLL-U file.
        #[arg(long, required = true)]
        ud: PathBuf,
        /// Parallel Penn-bracketed file (paired by order).
        #[arg(long)]
        ptb: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "sent-id")]
        pair_by: PairBy,
        /// Case-insensitive second pass for residual tokens.
        #[arg(long)]
        case_fallback: bool,
        #[arg(required = true)]
        files: Vec<String>,
    },
    /// Dump the token alignment as TSV.
    Align {
        #[command(flatten)]
        common: CommonOpts,
        #[arg(long, required = true)]
        ud: PathBuf,
        #[arg(long, value_enum, default_value = "sent-id")]
        pair_by: PairBy,
        #[arg(long)]
        case_fallback: bool,
        #[arg(required = true)]
        files: Vec<String>,
    },
    /// Extract per-token dependency heads.
    Heads {
        #[command(flatten)]
        common: CommonOpts,
        #[arg(required = true)]
        files: Vec<String>,
    },
    /// Reparse, canonicalize, and verify the round trip.
    Roundtrip {
        #[command(flatten)]
        common: CommonOpts,
        #[arg(required = true)]
        files: Vec<String>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("{} {err:#}", diag_prefix("error", "31"));
            ExitCode::from(2)
        }
    }
}

/// Colors a diagnostic prefix when CGEL_TOOLKIT_COLOR (always|never|auto)
/// allows it.
fn diag_prefix(label: &str, sgr: &str) -> String {
    use std::io::IsTerminal;
    let mode = std::env::var("CGEL_TOOLKIT_COLOR").unwrap_or_else(|_| "auto".to_string());
    let colored = match mode.as_str() {
        "always" => true,
        "never" => false,
        _ => std::io::stderr().is_terminal(),
    };
    if colored {
        format!("\x1b[{sgr}m{label}:\x1b[0m")
    } else {
        format!("{label}:")
    }
}

fn read_input(path: &str) -> anyhow::Result<String> {
    if path == "-" {
        let mut buf = String::new();
        std::io::stdin().read_to_string(&mut buf)?;
        Ok(buf)
    } else {
        std::fs::read_to_string(path)
            .map_err(|e| anyhow::anyhow!("cannot read `{path}`: {e}"))
    }
}

fn load_trees(files: &[String], compat: bool) -> anyhow::Result<Vec<CgelTree>> {
    let options = ParserOptions {
        compat_labels: compat,
    };
    let mut trees = Vec::new();
    for file in files {
        let text = read_input(file)?;
        let doc = parse_document_with(&text, &options)
            .map_err(|e| anyhow::anyhow!("{file}: {e}"))?;
        trees.extend(doc.trees);
    }
    Ok(trees)
}

fn emit(common: &CommonOpts, name: &str, content: &str) -> anyhow::Result<()> {
    match &common.out {
        Some(dir) => {
            std::fs::create_dir_all(dir)?;
            let ext = match common.format {
                Format::Tsv => "tsv",
                Format::Json => "json",
            };
            let path = dir.join(format!("{name}.{ext}"));
            std::fs::write(&path, content)?;
            eprintln!("wrote {}", path.display());
        }
        None => print!("{content}"),
    }
    Ok(())
}

fn run(cli: Cli) -> anyhow::Result<ExitCode> {
    match cli.command {
        Command::Validate {
            common,
            profile,
            files,
        } => {
            let profile = RuleProfile::parse(&profile)
                .ok_or_else(|| anyhow::anyhow!("unknown rule profile `{profile}`"))?;
            let trees = load_trees(&files, common.compat_labels)?;
            let report = validate_corpus(trees.iter(), &profile);
            let content = match common.format {
                Format::Tsv => report.to_text(),
                Format::Json => report.to_json() + "\n",
            };
            emit(&common, "validation", &content)?;
            let errors = report.errors().count();
            let warnings = report.warnings().count();
            if errors > 0 {
                eprintln!(
                    "{} {errors} error(s), {warnings} warning(s) in {} tree(s)",
                    diag_prefix("error", "31"),
                    trees.len()
                );
                Ok(ExitCode::from(1))
            } else {
                if warnings > 0 {
                    eprintln!(
                        "{} {warnings} warning(s) in {} tree(s)",
                        diag_prefix("warning", "33"),
                        trees.len()
                    );
                }
                Ok(ExitCode::SUCCESS)
            }
        }
        Command::Stats { common, files } => {
            let trees = load_trees(&files, common.compat_labels)?;
            let content = match common.format {
                Format::Tsv => report::stats_tsv(&trees),
                Format::Json => report::stats_json(&trees)?,
            };
            emit(&common, "stats", &content)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Compare {
            common,
            ud,
            ptb,
            pair_by,
            case_fallback,
            files,
        } => {
            let trees = load_trees(&files, common.compat_labels)?;
            let sentences = read_conllu(&read_input(&ud.to_string_lossy())?)?;
            let pairs = pair_with_conllu(&trees, &sentences, pairing_mode(pair_by))
                .map_err(|e| anyhow::anyhow!("pairing failed: {e}"))?;
            let ptb_trees = match &ptb {
                Some(path) => {
                    let trees = read_ptb(&read_input(&path.to_string_lossy())?)?;
                    if trees.len() != pairs.len() {
                        anyhow::bail!(
                            "pairing failed: {} PTB trees for {} sentences",
                            trees.len(),
                            pairs.len()
                        );
                    }
                    trees
                }
                None => Vec::new(),
            };
            let ptb_refs: Vec<Option<&cgel_core::ptb::PtbTree>> = (0..pairs.len())
                .map(|i| ptb_trees.get(i))
                .collect();
            let options = CompareOptions {
                alignment: AlignmentOptions { case_fallback },
                count_root_match: true,
            };
            let comparison = compare_corpus(&pairs, &ptb_refs, &options)?;
            let content = match common.format {
                Format::Tsv => report::compare_tsv(&comparison),
                Format::Json => report::compare_json(&comparison)?,
            };
            emit(&common, "compare", &content)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Align {
            common,
            ud,
            pair_by,
            case_fallback,
            files,
        } => {
            let trees = load_trees(&files, common.compat_labels)?;
            let sentences = read_conllu(&read_input(&ud.to_string_lossy())?)?;
            let pairs = pair_with_conllu(&trees, &sentences, pairing_mode(pair_by))
                .map_err(|e| anyhow::anyhow!("pairing failed: {e}"))?;
            let options = AlignmentOptions { case_fallback };
            let content = report::alignment_tsv(&pairs, &options);
            emit(&common, "alignment", &content)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Heads { common, files } => {
            let trees = load_trees(&files, common.compat_labels)?;
            let content = match common.format {
                Format::Tsv => report::heads_tsv(&trees)?,
                Format::Json => report::heads_json(&trees)?,
            };
            emit(&common, "heads", &content)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Roundtrip { common, files } => {
            let trees = load_trees(&files, common.compat_labels)?;
            let doc = NotationDocument { trees };
            let canonical = serialize_document(&doc);
            let reparsed = parse_document_with(
                &canonical,
                &ParserOptions {
                    compat_labels: false,
                },
            )?;
            if reparsed != doc {
                eprintln!(
                    "{} canonical form does not reparse to the same trees",
                    diag_prefix("error", "31")
                );
                return Ok(ExitCode::from(1));
            }
            match &common.out {
                Some(dir) => {
                    std::fs::create_dir_all(dir)?;
                    let path = dir.join("canonical.cgel");
                    std::fs::write(&path, &canonical)?;
                    eprintln!("wrote {}", path.display());
                }
                None => print!("{canonical}"),
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn pairing_mode(p: PairBy) -> PairingMode {
    match p {
        PairBy::SentId => PairingMode::BySentId,
        PairBy::Order => PairingMode::ByOrder,
    }
}
