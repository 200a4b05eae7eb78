use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::Arc;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use deltaring::analysis;
use deltaring::classify::{self, ClassifyOptions, Mode, SpectralFlavor};
use deltaring::constructions::describe;
use deltaring::harness::{self, Corpus, HarnessError, SuiteOptions};
use deltaring::ring::capacity_from_env;
use deltaring::{BuildContext, ConstructionDescriptor, FiniteRing, RingError};

#[derive(Parser)]
#[command(name = "deltaring", version, about = "Δ(R), Δ-quasipolarity and related predicates on finite rings")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,
    /// Worker threads (default: available parallelism).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Uniquely Δ-clean counts only commuting decompositions.
    #[arg(long, global = true)]
    strict_commuting: bool,
    /// Include wall-clock milliseconds in reports.
    #[arg(long, global = true)]
    timing: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Md,
}

#[derive(Clone, Copy, ValueEnum)]
enum Flavor {
    Delta,
    Jacobson,
    Quasipolar,
    Unit,
}

impl From<Flavor> for SpectralFlavor {
    fn from(f: Flavor) -> Self {
        match f {
            Flavor::Delta => SpectralFlavor::Delta,
            Flavor::Jacobson => SpectralFlavor::Jacobson,
            Flavor::Quasipolar => SpectralFlavor::Quasipolar,
            Flavor::Unit => SpectralFlavor::UnitVariant,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Classification report for one ring.
    Classify { spec: String },
    /// Δ(R) and J(R).
    Delta { spec: String },
    /// Spectral idempotents of one element.
    Spectral {
        spec: String,
        #[arg(long)]
        element: usize,
        #[arg(long, value_enum, default_value_t = Flavor::Delta)]
        flavor: Flavor,
    },
    /// Run the check suite over a corpus.
    Verify {
        /// Corpus manifest (default: the bundled corpus).
        #[arg(long)]
        manifest: Option<PathBuf>,
        /// Only these checks (repeatable).
        #[arg(long = "check")]
        checks: Vec<String>,
    },
    /// Check the ring axioms.
    Validate { spec: String },
    /// List the rings of a corpus with their sizes.
    Corpus {
        #[arg(long)]
        manifest: Option<PathBuf>,
    },
    /// Table of element indices and their structural forms.
    Describe { spec: String },
}

struct Failure {
    kind: &'static str,
    message: String,
    code: u8,
}

impl From<RingError> for Failure {
    fn from(e: RingError) -> Self {
        let code = if matches!(e, RingError::Capacity { .. }) { 3 } else { 2 };
        Failure {
            kind: e.kind(),
            message: e.to_string(),
            code,
        }
    }
}

impl From<HarnessError> for Failure {
    fn from(e: HarnessError) -> Self {
        let message = e.to_string();
        match e.ring_error() {
            Some(inner) => Failure {
                message,
                ..Failure::from(inner.clone())
            },
            None => Failure {
                kind: "usage",
                message,
                code: 2,
            },
        }
    }
}

/// A rendered report plus whether it records a failure (exit 1).
struct Output {
    text: String,
    failed: bool,
}

fn json_text<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("serializable")
}

fn build(spec: &str) -> Result<Arc<FiniteRing>, RingError> {
    let descriptor = ConstructionDescriptor::parse(spec)?;
    BuildContext::default().build(&descriptor)
}

fn load_corpus(manifest: Option<&PathBuf>) -> Result<Corpus, HarnessError> {
    match manifest {
        Some(path) => Corpus::from_path(path, capacity_from_env()),
        None => harness::default_corpus(capacity_from_env()),
    }
}

fn listed(r: &FiniteRing, set: &deltaring::ElementSet) -> String {
    let items: Vec<String> = set.iter().map(|x| format!("{x} = {}", describe(r, x))).collect();
    if items.is_empty() {
        "∅".into()
    } else {
        items.join(", ")
    }
}

fn classify_cmd(cli: &Cli, spec: &str) -> Result<Output, Failure> {
    let r = build(spec)?;
    let started = Instant::now();
    let report = classify::classification_report(
        &r,
        ClassifyOptions {
            mode: Mode::FirstWitness,
            strict_delta_commuting: cli.strict_commuting,
        },
    );
    let millis = started.elapsed().as_millis() as u64;
    let text = match cli.format {
        Format::Json => {
            let mut value = serde_json::to_value(&report).expect("serializable");
            if cli.timing {
                value["millis"] = json!(millis);
            }
            json_text(&value)
        }
        Format::Md => {
            let value = serde_json::to_value(&report).expect("serializable");
            let mut out = format!("# {} ({} elements)\n\n| property | holds | witness |\n|---|---|---|\n", report.ring, report.size);
            for (key, v) in value.as_object().expect("object") {
                if let Some(b) = v.as_bool() {
                    let witness = report
                        .witnesses
                        .get(key.as_str())
                        .and_then(|w| w.first())
                        .map(|&x| format!("{x} = {}", describe(&r, x)))
                        .unwrap_or_default();
                    out.push_str(&format!("| {key} | {b} | {witness} |\n"));
                }
            }
            let s = &report.sizes;
            out.push_str(&format!(
                "\n|U| = {}, |Id| = {}, |Nil| = {}, |J| = {}, |Δ| = {}, |qnil| = {}\n",
                s.units, s.idempotents, s.nilpotents, s.jacobson, s.delta, s.qnil
            ));
            if cli.timing {
                out.push_str(&format!("\n{millis} ms\n"));
            }
            out
        }
    };
    Ok(Output { text, failed: false })
}

fn delta_cmd(cli: &Cli, spec: &str) -> Result<Output, Failure> {
    let r = build(spec)?;
    let delta = analysis::delta(&r);
    let j = analysis::jacobson_radical(&r);
    let text = match cli.format {
        Format::Json => json_text(&json!({
            "ring": r.descriptor().to_string(),
            "delta": delta.to_vec(),
            "jacobson": j.to_vec(),
            "equal": delta == j,
        })),
        Format::Md => format!(
            "# {}\n\n- Δ(R): {}\n- J(R): {}\n- Δ(R) = J(R): {}\n",
            r.descriptor(),
            listed(&r, delta),
            listed(&r, j),
            delta == j
        ),
    };
    Ok(Output { text, failed: false })
}

fn spectral_cmd(cli: &Cli, spec: &str, element: usize, flavor: Flavor) -> Result<Output, Failure> {
    let r = build(spec)?;
    r.element(element)?;
    let flavor = SpectralFlavor::from(flavor);
    let ids = classify::spectral_idempotents(&r, element, flavor);
    let text = match cli.format {
        Format::Json => json_text(&json!({
            "ring": r.descriptor().to_string(),
            "element": element,
            "form": describe(&r, element),
            "flavor": flavor,
            "idempotents": ids.to_vec(),
            "forms": ids.iter().map(|x| describe(&r, x)).collect::<Vec<_>>(),
        })),
        Format::Md => format!(
            "# {}\n\nspectral idempotents of {} = {}: {}\n",
            r.descriptor(),
            element,
            describe(&r, element),
            listed(&r, &ids)
        ),
    };
    Ok(Output { text, failed: false })
}

fn verify_cmd(cli: &Cli, manifest: Option<&PathBuf>, checks: &[String]) -> Result<Output, Failure> {
    let corpus = load_corpus(manifest)?;
    let report = harness::run_suite(
        &corpus,
        &SuiteOptions {
            checks: checks.to_vec(),
            timing: cli.timing,
        },
    )?;
    let text = match cli.format {
        Format::Json => report.to_json(),
        Format::Md => harness::render_markdown(&report),
    };
    Ok(Output {
        text,
        failed: report.has_failures(),
    })
}

fn validate_cmd(cli: &Cli, spec: &str) -> Result<Output, Failure> {
    let r = build(spec)?;
    let report = r.validate();
    let text = match cli.format {
        Format::Json => json_text(&json!({
            "ring": r.descriptor().to_string(),
            "report": report,
        })),
        Format::Md => {
            let mut out = format!(
                "# {} ({} elements)\n\nsampling: {}\n\n",
                r.descriptor(),
                report.size,
                serde_json::to_string(&report.sampling).expect("serializable")
            );
            if report.is_ring() {
                out.push_str("all ring axioms hold\n");
            }
            for v in &report.violations {
                out.push_str(&format!("- {:?} fails at {:?}\n", v.axiom, v.witness));
            }
            out
        }
    };
    Ok(Output {
        text,
        failed: !report.is_ring(),
    })
}

fn corpus_cmd(cli: &Cli, manifest: Option<&PathBuf>) -> Result<Output, Failure> {
    let corpus = load_corpus(manifest)?;
    let rows: Vec<_> = corpus
        .rings
        .iter()
        .map(|e| json!({"line": e.line, "ring": e.ring.descriptor().to_string(), "size": e.ring.size()}))
        .collect();
    let text = match cli.format {
        Format::Json => json_text(&rows),
        Format::Md => {
            let mut out = String::from("| line | ring | size |\n|---|---|---|\n");
            for e in &corpus.rings {
                out.push_str(&format!("| {} | `{}` | {} |\n", e.line, e.ring.descriptor(), e.ring.size()));
            }
            out
        }
    };
    Ok(Output { text, failed: false })
}

fn describe_cmd(cli: &Cli, spec: &str) -> Result<Output, Failure> {
    let r = build(spec)?;
    let text = match cli.format {
        Format::Json => json_text(&json!({
            "ring": r.descriptor().to_string(),
            "zero": r.zero(),
            "one": r.one(),
            "elements": r.elements().map(|x| describe(&r, x)).collect::<Vec<_>>(),
        })),
        Format::Md => {
            let mut out = format!("# {}\n\n| index | element |\n|---|---|\n", r.descriptor());
            for x in r.elements() {
                out.push_str(&format!("| {x} | {} |\n", describe(&r, x)));
            }
            out
        }
    };
    Ok(Output { text, failed: false })
}

fn run(cli: &Cli) -> Result<Output, Failure> {
    match &cli.command {
        Command::Classify { spec } => classify_cmd(cli, spec),
        Command::Delta { spec } => delta_cmd(cli, spec),
        Command::Spectral {
            spec,
            element,
            flavor,
        } => spectral_cmd(cli, spec, *element, *flavor),
        Command::Verify { manifest, checks } => verify_cmd(cli, manifest.as_ref(), checks),
        Command::Validate { spec } => validate_cmd(cli, spec),
        Command::Corpus { manifest } => corpus_cmd(cli, manifest.as_ref()),
        Command::Describe { spec } => describe_cmd(cli, spec),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                e.exit();
            }
            let text = e.to_string();
            let first = text
                .lines()
                .find(|l| !l.trim().is_empty())
                .unwrap_or("invalid arguments")
                .trim_start_matches("error: ");
            eprintln!("error[usage]: {first}");
            return ExitCode::from(2);
        }
    };
    if let Some(jobs) = cli.jobs {
        if jobs == 0 {
            eprintln!("error[usage]: --jobs must be at least 1");
            return ExitCode::from(2);
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global()
            .expect("thread pool configured once");
    }
    match run(&cli) {
        Ok(out) => {
            println!("{}", out.text.trim_end());
            ExitCode::from(if out.failed { 1 } else { 0 })
        }
        Err(f) => {
            let message = f.message.replace('\n', " ");
            eprintln!("error[{}]: {message}", f.kind);
            ExitCode::from(f.code)
        }
    }
}
