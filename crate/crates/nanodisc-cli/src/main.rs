//! Command-line surface for the nanodisc toolkit.
//!
//! Exit codes: 0 success / all checks pass, 1 usage error, 2 verification
//! failure, 3 I/O error.

use std::fmt::Write as _;
use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};

use nanodisc::dot::{emit_dot_fullerene, emit_dot_triangulation};
use nanodisc::graph6::{decode_graph6, encode_graph6};
use nanodisc::lattice::build_patch;
use nanodisc::metrics::diameter;
use nanodisc::surface::{dualize, glue, CubicPlaneGraph, SphereTriangulation};
use nanodisc::verify::{certify_built, check_embedded, scan, Certificate, DualBoundMode, ScanReport};
use nanodisc::Graph;

const EXIT_USAGE: u8 = 1;
const EXIT_VERIFICATION: u8 = 2;
const EXIT_IO: u8 = 3;

#[derive(Parser)]
#[command(
    name = "nanodisc",
    version,
    about = "Build, export and certify glued-lattice fullerene nanodiscs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Print elapsed wall time to stderr.
    #[arg(long, global = true)]
    timing: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Build the fullerene for (r, t) and write it in the chosen format.
    Generate {
        #[arg(long)]
        r: u32,
        #[arg(long)]
        t: u32,
        /// Export the glued sphere triangulation instead of its dual.
        #[arg(long)]
        dual: bool,
        #[arg(long, value_enum)]
        format: Format,
        /// Output path; stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Certify one family member and print the certificate JSON.
    Verify {
        #[arg(long)]
        r: u32,
        #[arg(long)]
        t: u32,
        #[arg(long, value_enum, default_value_t = DualBoundArg::Auto)]
        lemma2: DualBoundArg,
    },
    /// Exact diameter and witness pair for one family member.
    Diameter {
        #[arg(long)]
        r: u32,
        #[arg(long)]
        t: u32,
    },
    /// Certify every (r, t) up to a radius and report counterexamples to
    /// the conjectured diameter floor.
    Scan {
        #[arg(long = "max-r")]
        max_r: u32,
        /// Emit the full certificate list as JSON instead of a table.
        #[arg(long)]
        json: bool,
    },
    /// Verify an arbitrary fullerene supplied as a graph6 file.
    CheckInput {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long, value_enum, default_value_t = DualBoundArg::Auto)]
        lemma2: DualBoundArg,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Graph6,
    Dot,
    AdjacencyText,
    FacesText,
    CertificateJson,
}

#[derive(Clone, Copy, ValueEnum)]
enum DualBoundArg {
    Auto,
    Exhaustive,
    Sampled,
    Skip,
}

impl From<DualBoundArg> for DualBoundMode {
    fn from(a: DualBoundArg) -> Self {
        match a {
            DualBoundArg::Auto => DualBoundMode::Auto,
            DualBoundArg::Exhaustive => DualBoundMode::Exhaustive,
            DualBoundArg::Sampled => DualBoundMode::Sampled,
            DualBoundArg::Skip => DualBoundMode::Skip,
        }
    }
}

enum CliError {
    Usage(String),
    Verification(String),
    Io(String),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => EXIT_USAGE,
            CliError::Verification(_) => EXIT_VERIFICATION,
            CliError::Io(_) => EXIT_IO,
        }
    }

    fn message(&self) -> &str {
        match self {
            CliError::Usage(m) | CliError::Verification(m) | CliError::Io(m) => m,
        }
    }
}

/// Parameter errors are usage mistakes; everything else from the library
/// is a failed verification of the data at hand.
fn lib_error(e: nanodisc::Error) -> CliError {
    use nanodisc::Error::*;
    match e {
        InvalidRadius { .. } | InvalidTwist { .. } | RadiusMismatch { .. } => {
            CliError::Usage(e.to_string())
        }
        other => CliError::Verification(other.to_string()),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let benign = matches!(
                e.kind(),
                ErrorKind::DisplayHelp
                    | ErrorKind::DisplayVersion
                    | ErrorKind::DisplayHelpOnMissingArgumentOrSubcommand
            );
            let _ = e.print();
            return if benign {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(EXIT_USAGE)
            };
        }
    };
    let started = Instant::now();
    let outcome = run(cli.command);
    if cli.timing {
        eprintln!("elapsed: {:?}", started.elapsed());
    }
    match outcome {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {}", e.message());
            ExitCode::from(e.exit_code())
        }
    }
}

fn build_pair(r: u32, t: u32) -> Result<(SphereTriangulation, CubicPlaneGraph), CliError> {
    let north = build_patch(r).map_err(lib_error)?;
    let south = build_patch(r).map_err(lib_error)?;
    let sphere = glue(&north, &south, t).map_err(lib_error)?;
    let g = dualize(&sphere).map_err(lib_error)?;
    Ok((sphere, g))
}

fn write_output(out: &Option<PathBuf>, bytes: &[u8]) -> Result<(), CliError> {
    match out {
        Some(path) => fs::write(path, bytes)
            .map_err(|e| CliError::Io(format!("cannot write {}: {e}", path.display()))),
        None => {
            use std::io::Write;
            std::io::stdout()
                .write_all(bytes)
                .map_err(|e| CliError::Io(format!("cannot write to stdout: {e}")))
        }
    }
}

fn adjacency_text<G: Graph + ?Sized>(g: &G) -> String {
    let mut s = String::new();
    writeln!(s, "{} {}", g.vertex_count(), g.edge_count()).unwrap();
    for v in 0..g.vertex_count() as u32 {
        write!(s, "{v}:").unwrap();
        for &w in g.neighbors(v) {
            write!(s, " {w}").unwrap();
        }
        s.push('\n');
    }
    s
}

fn faces_text(faces: &[Vec<u32>]) -> String {
    let mut s = String::new();
    writeln!(s, "{}", faces.len()).unwrap();
    for (i, face) in faces.iter().enumerate() {
        write!(s, "{i}:").unwrap();
        for &v in face {
            write!(s, " {v}").unwrap();
        }
        s.push('\n');
    }
    s
}

fn certificate_json(cert: &Certificate) -> String {
    let mut s = serde_json::to_string_pretty(cert).expect("certificate serializes");
    s.push('\n');
    s
}

fn run(command: Command) -> Result<u8, CliError> {
    match command {
        Command::Generate {
            r,
            t,
            dual,
            format,
            out,
        } => {
            let (sphere, g) = build_pair(r, t)?;
            let bytes: Vec<u8> = match (format, dual) {
                (Format::Graph6, false) => {
                    let mut b = encode_graph6(&g).map_err(lib_error)?;
                    b.push(b'\n');
                    b
                }
                (Format::Graph6, true) => {
                    let mut b = encode_graph6(&sphere).map_err(lib_error)?;
                    b.push(b'\n');
                    b
                }
                (Format::Dot, false) => emit_dot_fullerene(&g, &sphere).into_bytes(),
                (Format::Dot, true) => emit_dot_triangulation(&sphere).into_bytes(),
                (Format::AdjacencyText, false) => adjacency_text(&g).into_bytes(),
                (Format::AdjacencyText, true) => adjacency_text(&sphere).into_bytes(),
                (Format::FacesText, false) => faces_text(&g.faces).into_bytes(),
                (Format::FacesText, true) => {
                    let triangles: Vec<Vec<u32>> =
                        sphere.triangles.iter().map(|t| t.to_vec()).collect();
                    faces_text(&triangles).into_bytes()
                }
                (Format::CertificateJson, _) => {
                    let cert =
                        certify_built(&sphere, &g, DualBoundMode::Auto).map_err(lib_error)?;
                    certificate_json(&cert).into_bytes()
                }
            };
            write_output(&out, &bytes)?;
            Ok(0)
        }
        Command::Verify { r, t, lemma2 } => {
            let (sphere, g) = build_pair(r, t)?;
            let cert = certify_built(&sphere, &g, lemma2.into()).map_err(lib_error)?;
            print!("{}", certificate_json(&cert));
            Ok(if cert.all_pass() { 0 } else { EXIT_VERIFICATION })
        }
        Command::Diameter { r, t } => {
            let (_, g) = build_pair(r, t)?;
            let w = diameter(&g).map_err(lib_error)?;
            println!("r={r} t={t} n={}", g.vertex_count());
            println!("diameter: {}", w.value);
            println!("witness: {} {}", w.pair.0, w.pair.1);
            Ok(0)
        }
        Command::Scan { max_r, json } => {
            let report = scan(max_r, DualBoundMode::Auto).map_err(lib_error)?;
            if json {
                print!("{}", scan_json(&report));
            } else {
                print!("{}", scan_table(&report));
            }
            Ok(if report.all_pass() { 0 } else { EXIT_VERIFICATION })
        }
        Command::CheckInput { input, lemma2 } => {
            let raw = fs::read(&input)
                .map_err(|e| CliError::Io(format!("cannot read {}: {e}", input.display())))?;
            let trimmed = trim_trailing_newlines(&raw);
            let simple = decode_graph6(trimmed).map_err(lib_error)?;
            let embedded = nanodisc::embed::recover_embedding(&simple).map_err(lib_error)?;
            let report = check_embedded(&embedded, lemma2.into()).map_err(lib_error)?;
            let mut text = serde_json::to_string_pretty(&report).expect("report serializes");
            text.push('\n');
            print!("{text}");
            Ok(if report.all_pass() { 0 } else { EXIT_VERIFICATION })
        }
    }
}

fn trim_trailing_newlines(raw: &[u8]) -> &[u8] {
    let mut end = raw.len();
    while end > 0 && (raw[end - 1] == b'\n' || raw[end - 1] == b'\r') {
        end -= 1;
    }
    &raw[..end]
}

fn scan_table(report: &ScanReport) -> String {
    let mut s = String::new();
    writeln!(
        s,
        "{:>4} {:>4} {:>7} {:>9} {:>11} {:>8} {:>15}",
        "r", "t", "n", "diameter", "conjecture", "4r", "counterexample"
    )
    .unwrap();
    for c in &report.certificates {
        writeln!(
            s,
            "{:>4} {:>4} {:>7} {:>9} {:>11} {:>8} {:>15}",
            c.r,
            c.t,
            c.n,
            c.diameter,
            c.bounds.conjecture,
            c.bounds.theorem1,
            if c.counterexample { "yes" } else { "no" }
        )
        .unwrap();
    }
    match report.minimum_counterexample_n() {
        Some(n) => writeln!(s, "minimum counterexample: n={n}").unwrap(),
        None => writeln!(s, "minimum counterexample: none").unwrap(),
    }
    s
}

fn scan_json(report: &ScanReport) -> String {
    #[derive(serde::Serialize)]
    struct ScanJson<'a> {
        certificates: &'a [Certificate],
        minimum_counterexample_n: Option<u32>,
    }
    let mut s = serde_json::to_string_pretty(&ScanJson {
        certificates: &report.certificates,
        minimum_counterexample_n: report.minimum_counterexample_n(),
    })
    .expect("scan report serializes");
    s.push('\n');
    s
}
