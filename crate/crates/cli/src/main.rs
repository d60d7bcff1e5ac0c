//! expandnet: align a bitext with dictionary support, project senses
//! across the alignments, and score the results.
//!
//! Exit codes: 0 success, 1 usage error, 2 input or processing error.

use std::collections::BTreeMap;
use std::fs::File;
use std::io::{self, BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use expandnet::io::pharaoh::format_pharaoh;
use expandnet::io::{
    load_corpus, load_dictionary, load_gold_file, load_gold_senses, load_pharaoh_file,
    load_wordnet_tsv, override_base_links, read_inventory_keys, write_inventory, CorpusLoad,
    InventoryFormat, SkippedRecord,
};
use expandnet::{
    alignment_counts, dbalign, merge_pair_mwes, project_corpus, sense_key_counts, AlignmentSet,
    BitextPair, Dictionary, EvalCounts, EvalReport, ProjectionConfig, Rational, SenseInventory,
};

#[derive(Parser)]
#[command(
    name = "expandnet",
    version,
    about = "Dictionary-based word alignment and cross-lingual sense projection"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Align each corpus pair, writing one Pharaoh line per pair
    Align(AlignArgs),
    /// Project senses over the alignments and write the inventory
    Project(ProjectArgs),
    /// Score predicted alignments against gold links
    EvalAlign(EvalAlignArgs),
    /// Score a generated inventory against a gold sense list
    EvalSenses(EvalSensesArgs),
}

#[derive(Args)]
struct CorpusInput {
    /// Corpus file, one JSON record per line
    corpus: PathBuf,
    /// Bilingual dictionary TSV (source TAB target)
    #[arg(long)]
    dict: PathBuf,
    /// Sidecar Pharaoh file overriding the in-record base links
    #[arg(long)]
    base_links: Option<PathBuf>,
    /// Keep word-level tokens instead of merging dictionary MWEs
    #[arg(long)]
    no_mwe_merge: bool,
}

#[derive(Args)]
struct AlignArgs {
    #[command(flatten)]
    input: CorpusInput,
    /// Output file (stdout when omitted)
    #[arg(short, long)]
    output: Option<PathBuf>,
    /// Write a JSON run report
    #[arg(long)]
    report: Option<PathBuf>,
}

#[derive(Args)]
struct ProjectArgs {
    #[command(flatten)]
    input: CorpusInput,
    /// Require matching coarse POS tags
    #[arg(long)]
    pos_filter: bool,
    /// Disable the orthographic-match exception
    #[arg(long)]
    no_ortho_exception: bool,
    /// Known senses to skip, TSV (synset TAB lemma)
    #[arg(long)]
    existing_wordnet: Option<PathBuf>,
    /// Inventory output format
    #[arg(long, value_enum, default_value_t = FormatArg::Tsv)]
    format: FormatArg,
    /// Output file (stdout when omitted)
    #[arg(short, long)]
    output: Option<PathBuf>,
    /// Write a JSON run report
    #[arg(long)]
    report: Option<PathBuf>,
}

#[derive(Args)]
struct EvalAlignArgs {
    /// Predicted alignments, one Pharaoh line per pair
    pred: PathBuf,
    /// Gold alignments; `i-j` marks sure links, `i?j` possible-only
    gold: PathBuf,
    /// Write a JSON report
    #[arg(long)]
    report: Option<PathBuf>,
}

#[derive(Args)]
struct EvalSensesArgs {
    /// Generated inventory file
    generated: PathBuf,
    /// Gold senses, TSV (lemma TAB synset)
    gold: PathBuf,
    /// Format of the generated inventory
    #[arg(long, value_enum, default_value_t = FormatArg::Tsv)]
    format: FormatArg,
    /// Write a JSON report
    #[arg(long)]
    report: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Tsv,
    Jsonl,
}

impl From<FormatArg> for InventoryFormat {
    fn from(arg: FormatArg) -> InventoryFormat {
        match arg {
            FormatArg::Tsv => InventoryFormat::Tsv,
            FormatArg::Jsonl => InventoryFormat::Jsonl,
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            let wanted = matches!(
                err.kind(),
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion
            );
            let _ = err.print();
            return if wanted {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            };
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<()> {
    match cli.command {
        Command::Align(args) => run_align(args),
        Command::Project(args) => run_project(args),
        Command::EvalAlign(args) => run_eval_align(args),
        Command::EvalSenses(args) => run_eval_senses(args),
    }
}

/// Loads corpus + dictionary, applies the sidecar override and MWE
/// merging, and reports skipped records on stderr.
fn prepare(input: &CorpusInput) -> Result<(Vec<BitextPair>, Dictionary, Vec<SkippedRecord>)> {
    let dict = load_dictionary(open(&input.dict)?)
        .with_context(|| format!("loading dictionary {}", input.dict.display()))?;
    if dict.is_empty() {
        eprintln!("warning: dictionary {} is empty", input.dict.display());
    }
    let mut load: CorpusLoad = load_corpus(open(&input.corpus)?)
        .with_context(|| format!("loading corpus {}", input.corpus.display()))?;
    if let Some(path) = &input.base_links {
        let links = load_pharaoh_file(open(path)?)
            .with_context(|| format!("loading base links {}", path.display()))?;
        override_base_links(&mut load, &links)
            .with_context(|| format!("applying base links {}", path.display()))?;
    }
    for skip in &load.skipped {
        eprintln!(
            "warning: skipped pair {} (line {}): {}",
            skip.id.as_deref().unwrap_or("?"),
            skip.line,
            skip.reason
        );
    }
    let pairs = load
        .document
        .pairs
        .iter()
        .map(|pair| {
            if input.no_mwe_merge {
                pair.clone()
            } else {
                merge_pair_mwes(pair, &dict)
            }
        })
        .collect();
    Ok((pairs, dict, load.skipped))
}

fn run_align(args: AlignArgs) -> Result<()> {
    let (pairs, dict, skipped) = prepare(&args.input)?;
    let mut out = output(args.output.as_deref())?;
    let mut total_links = 0usize;
    for pair in &pairs {
        let aligned: AlignmentSet = dbalign(pair, &dict);
        total_links += aligned.len();
        writeln!(out, "{}", format_pharaoh(aligned.iter()))?;
    }
    out.flush()?;
    if let Some(path) = &args.report {
        let report = json!({
            "pairs": pairs.len(),
            "dictionary_pairs": dict.len(),
            "links": total_links,
            "skipped": skip_json(&skipped),
        });
        write_json(path, &report)?;
    }
    Ok(())
}

fn run_project(args: ProjectArgs) -> Result<()> {
    let (pairs, dict, skipped) = prepare(&args.input)?;
    let existing_wordnet = match &args.existing_wordnet {
        Some(path) => Some(
            load_wordnet_tsv(open(path)?)
                .with_context(|| format!("loading wordnet {}", path.display()))?,
        ),
        None => None,
    };
    let cfg = ProjectionConfig {
        pos_filter_enabled: args.pos_filter,
        orthographic_exception_enabled: !args.no_ortho_exception,
        existing_wordnet,
    };
    let inventory: SenseInventory = project_corpus(&pairs, &dict, &cfg);

    let mut out = output(args.output.as_deref())?;
    write_inventory(&mut out, &inventory, args.format.into())?;
    out.flush()?;

    if let Some(path) = &args.report {
        let mut rules: BTreeMap<String, usize> = BTreeMap::new();
        for (_, occurrences) in inventory.iter() {
            for (rule, n) in SenseInventory::rule_breakdown(occurrences) {
                *rules.entry(rule.as_str().to_string()).or_insert(0) += n;
            }
        }
        let report = json!({
            "pairs": pairs.len(),
            "dictionary_pairs": dict.len(),
            "senses": inventory.len(),
            "occurrences": inventory.total(),
            "rules": rules,
            "skipped": skip_json(&skipped),
        });
        write_json(path, &report)?;
    }
    Ok(())
}

fn run_eval_align(args: EvalAlignArgs) -> Result<()> {
    let predicted = load_pharaoh_file(open(&args.pred)?)
        .with_context(|| format!("loading predictions {}", args.pred.display()))?;
    let gold = load_gold_file(open(&args.gold)?)
        .with_context(|| format!("loading gold links {}", args.gold.display()))?;
    anyhow::ensure!(
        predicted.len() == gold.len(),
        "predictions have {} lines but gold has {}",
        predicted.len(),
        gold.len()
    );

    let mut counts = EvalCounts::default();
    for (line_no, (links, gold_line)) in predicted.iter().zip(&gold).enumerate() {
        let mut matching = AlignmentSet::new();
        matching.extend(links.iter().copied());
        anyhow::ensure!(
            matching.len() == links.len(),
            "line {}: predicted links are not a one-to-one matching",
            line_no + 1
        );
        counts += alignment_counts(&matching, gold_line);
    }
    let report = counts.report::<Rational>();
    print_report(&report, predicted.len())?;
    if let Some(path) = &args.report {
        write_json(path, &report_json(&report, predicted.len()))?;
    }
    Ok(())
}

fn run_eval_senses(args: EvalSensesArgs) -> Result<()> {
    let generated = read_inventory_keys(open(&args.generated)?, args.format.into())
        .with_context(|| format!("loading inventory {}", args.generated.display()))?;
    let gold = load_gold_senses(open(&args.gold)?)
        .with_context(|| format!("loading gold senses {}", args.gold.display()))?;
    let report = sense_key_counts(generated, &gold).report::<Rational>();
    print_report(&report, 1)?;
    if let Some(path) = &args.report {
        write_json(path, &report_json(&report, 1))?;
    }
    Ok(())
}

fn print_report(report: &EvalReport<Rational>, pairs: usize) -> Result<()> {
    let approx = report.approx();
    let stdout = io::stdout();
    let mut out = stdout.lock();
    writeln!(out, "pairs          {pairs}")?;
    writeln!(out, "predicted      {}", report.counts.predicted)?;
    writeln!(out, "gold sure      {}", report.counts.gold_sure)?;
    writeln!(out, "gold possible  {}", report.counts.gold_possible)?;
    writeln!(
        out,
        "precision      {:.4}  ({})",
        approx.precision, report.precision
    )?;
    writeln!(
        out,
        "recall         {:.4}  ({})",
        approx.recall, report.recall
    )?;
    writeln!(out, "f1             {:.4}  ({})", approx.f1, report.f1)?;
    writeln!(out, "aer            {:.4}  ({})", approx.aer, report.aer)?;
    Ok(())
}

fn report_json(report: &EvalReport<Rational>, pairs: usize) -> serde_json::Value {
    let approx = report.approx();
    json!({
        "pairs": pairs,
        "counts": {
            "predicted": report.counts.predicted,
            "gold_sure": report.counts.gold_sure,
            "gold_possible": report.counts.gold_possible,
            "hit_sure": report.counts.hit_sure,
            "hit_possible": report.counts.hit_possible,
        },
        "precision": approx.precision,
        "recall": approx.recall,
        "f1": approx.f1,
        "aer": approx.aer,
        "exact": {
            "precision": report.precision.to_string(),
            "recall": report.recall.to_string(),
            "f1": report.f1.to_string(),
            "aer": report.aer.to_string(),
        },
    })
}

fn skip_json(skipped: &[SkippedRecord]) -> serde_json::Value {
    json!(skipped
        .iter()
        .map(|s| json!({"line": s.line, "id": s.id, "reason": s.reason}))
        .collect::<Vec<_>>())
}

fn open(path: &Path) -> Result<BufReader<File>> {
    Ok(BufReader::new(File::open(path).with_context(|| {
        format!("cannot open {}", path.display())
    })?))
}

fn output(path: Option<&Path>) -> Result<Box<dyn Write>> {
    match path {
        Some(path) => {
            let file =
                File::create(path).with_context(|| format!("cannot create {}", path.display()))?;
            Ok(Box::new(BufWriter::new(file)))
        }
        None => Ok(Box::new(BufWriter::new(io::stdout()))),
    }
}

fn write_json(path: &Path, value: &serde_json::Value) -> Result<()> {
    let mut file = BufWriter::new(
        File::create(path).with_context(|| format!("cannot create {}", path.display()))?,
    );
    serde_json::to_writer_pretty(&mut file, value)?;
    writeln!(file)?;
    Ok(())
}
