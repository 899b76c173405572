mod codes;
mod file;

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;

use rmcodes::bounds::{ball_size_exact, ball_size_upper, max_k_theorem2, packing_bound, theorem2_check};
use rmcodes::oracle::{verify, Checks, VerificationReport};
use rmcodes::perm::{phi, rank, unrank};
use rmcodes::{build_codebook, Codebook, Error, Permutation, SystematicCode};

use codes::CodeArgs;
use file::{CodeFile, Header};

/// Codebooks above this many information symbols are written as spec files.
const MAX_ENUM_K: usize = 9;

#[derive(Parser, Debug)]
#[command(name = "rmcodes", version, about = "Systematic error-correcting codes for rank modulation")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Enumerate a code into a codebook file.
    Build {
        #[command(flatten)]
        code: CodeArgs,
        /// Output path; standard output when omitted.
        #[arg(long, short)]
        output: Option<PathBuf>,
        /// Write only the header, without codewords.
        #[arg(long)]
        spec_only: bool,
    },
    /// Encode one information permutation.
    Encode {
        #[command(flatten)]
        code: CodeArgs,
        /// Codebook or spec file to take the code from.
        #[arg(long, conflicts_with = "construction")]
        file: Option<PathBuf>,
        #[arg(long)]
        info: String,
    },
    /// Decode one received word.
    Decode {
        #[command(flatten)]
        code: CodeArgs,
        /// Codebook or spec file to take the code from.
        #[arg(long, conflicts_with = "construction")]
        file: Option<PathBuf>,
        #[arg(long)]
        received: String,
    },
    /// Check a codebook file by brute force.
    Verify {
        path: PathBuf,
        /// Comma-separated subset of distance,systematic,decode.
        #[arg(long, default_value = "distance,systematic,decode")]
        checks: String,
        /// Worker threads for the distance and decode sweeps.
        #[arg(long, default_value_t = 1)]
        workers: usize,
    },
    /// Tabulate ball sizes and existence bounds.
    Bounds {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        d: Option<u64>,
        #[arg(long)]
        k: Option<usize>,
        /// Ball radius; defaults to the packing radius of --d.
        #[arg(long)]
        r: Option<u64>,
        /// Print only the ball sizes.
        #[arg(long)]
        ball: bool,
        /// Print only the largest k the existence bound guarantees.
        #[arg(long)]
        maxk: bool,
    },
    /// Change the representation of a file or a single permutation.
    Convert {
        #[arg(long, group = "source")]
        input: Option<PathBuf>,
        #[arg(long, group = "source")]
        perm: Option<String>,
        /// Lexicographic rank (0-based) to unrank; needs --n.
        #[arg(long, group = "source", requires = "n")]
        rank: Option<String>,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, value_enum)]
        to: Target,
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Target {
    Codebook,
    Spec,
    Rank,
    Factoradic,
    Inverse,
    Perm,
}

/// A message plus the exit status it maps to.
#[derive(Debug)]
pub struct Failure {
    code: u8,
    msg: String,
}

impl Failure {
    pub fn usage(msg: impl Into<String>) -> Self {
        Self { code: 2, msg: msg.into() }
    }

    fn check(msg: impl Into<String>) -> Self {
        Self { code: 1, msg: msg.into() }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::InvalidArgument(_) => 2,
            Error::Uncorrectable(_) => 3,
            Error::InfeasibleParameters(_) | Error::ConstructionFailure(_) | Error::Internal(_) => 1,
        };
        Self { code, msg: e.to_string() }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli.command) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(f) => {
            eprintln!("rmcodes: {}", f.msg);
            ExitCode::from(f.code)
        }
    }
}

fn run(cmd: Command) -> Result<String, Failure> {
    match cmd {
        Command::Build { code, output, spec_only } => cmd_build(&code, output.as_deref(), spec_only),
        Command::Encode { code, file, info } => {
            let code = load_code(&code, file.as_deref())?;
            let info: Permutation = info.parse()?;
            Ok(format!("{}\n", code.encode(&info)?))
        }
        Command::Decode { code, file, received } => {
            let code = load_code(&code, file.as_deref())?;
            let received: Permutation = received.parse()?;
            Ok(format!("{}\n", code.decode(&received)?))
        }
        Command::Verify { path, checks, workers } => cmd_verify(&path, &checks, workers),
        Command::Bounds { n, d, k, r, ball, maxk } => cmd_bounds(n, d, k, r, ball, maxk),
        Command::Convert {
            input,
            perm,
            rank,
            n,
            to,
            output,
        } => {
            let text = match (input, perm, rank) {
                (Some(path), _, _) => convert_file(&path, to)?,
                (_, Some(p), _) => convert_perm(&p.parse()?, to)?,
                (_, _, Some(r)) => convert_rank(&r, n.unwrap_or(0), to)?,
                _ => return Err(Failure::usage("one of --input, --perm or --rank is required")),
            };
            emit(text, output.as_deref())
        }
    }
}

fn read_file(path: &Path) -> Result<CodeFile, Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))?;
    file::parse(&text).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))
}

fn emit(text: String, output: Option<&Path>) -> Result<String, Failure> {
    match output {
        Some(path) => {
            std::fs::write(path, text).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))?;
            Ok(String::new())
        }
        None => Ok(text),
    }
}

fn load_code(args: &CodeArgs, path: Option<&Path>) -> Result<Box<dyn SystematicCode>, Failure> {
    match path {
        Some(path) => match read_file(path)? {
            CodeFile::Codebook(h, words) => codes::from_header(&h, Some(&words)),
            CodeFile::Spec(h) => codes::from_header(&h, None),
        },
        None => codes::from_args(args),
    }
}

fn header_of(code: &dyn SystematicCode) -> Header {
    Header {
        metric: code.metric(),
        construction: code.construction(),
        n: code.length(),
        k: code.info_len(),
        d: code.designed_distance(),
        params: code.params().into_iter().map(|(k, v)| (k.to_string(), v)).collect(),
    }
}

fn cmd_build(args: &CodeArgs, output: Option<&Path>, spec_only: bool) -> Result<String, Failure> {
    let code = codes::from_args(args)?;
    let header = header_of(code.as_ref());
    let text = if spec_only || code.info_len() > MAX_ENUM_K {
        file::render_spec(&header)
    } else {
        let cb = build_codebook(code.as_ref())?;
        file::render_codebook(&header, cb.codewords())
    };
    emit(text, output)
}

fn parse_checks(spec: &str) -> Result<(bool, bool, bool), Failure> {
    let mut flags = (false, false, false);
    for name in spec.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        match name {
            "distance" => flags.0 = true,
            "systematic" => flags.1 = true,
            "decode" => flags.2 = true,
            "all" => flags = (true, true, true),
            other => return Err(Failure::usage(format!("unknown check {other:?}"))),
        }
    }
    Ok(flags)
}

fn cmd_verify(path: &Path, checks: &str, workers: usize) -> Result<String, Failure> {
    let (distance, systematic, decode) = parse_checks(checks)?;
    let (header, code, words) = match read_file(path)? {
        CodeFile::Codebook(h, words) => {
            let code = codes::from_header(&h, Some(&words))?;
            (h, code, words)
        }
        CodeFile::Spec(h) => {
            let code = codes::from_header(&h, None)?;
            let words = build_codebook(code.as_ref())?.codewords().to_vec();
            (h, code, words)
        }
    };
    let cb = Codebook::new(header.n, header.k, header.d, header.metric, header.construction, words)?;
    let checks = Checks {
        distance,
        systematic,
        decode: decode.then(|| code.decoding_radius()),
    };
    let report = verify(&cb, checks, Some(|g: &Permutation| code.decode(g)), workers.max(1))?;
    let text = render_report(&report);
    if report.passed() {
        Ok(text)
    } else {
        print!("{text}");
        Err(Failure::check("verification failed"))
    }
}

fn verdict(ok: bool) -> &'static str {
    if ok {
        "PASS"
    } else {
        "FAIL"
    }
}

fn render_report(r: &VerificationReport) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "codebook: {} {} n={} k={} d={} size={}",
        r.construction,
        r.metric.as_str(),
        r.n,
        r.k,
        r.d_claimed,
        r.size
    );
    if let Some(d) = r.measured_min_distance {
        let _ = writeln!(out, "distance: {} (measured {d}, claimed {})", verdict(d >= r.d_claimed), r.d_claimed);
    }
    if let Some(ok) = r.systematic_ok {
        let _ = writeln!(out, "systematic: {}", verdict(ok));
    }
    if let Some(radius) = r.decode_radius {
        let _ = writeln!(
            out,
            "decode: {} (radius {radius}, {} trials, {} failures)",
            verdict(r.decode_failures.is_empty()),
            r.decode_trials,
            r.decode_failures.len()
        );
        if let Some(f) = r.decode_failures.first() {
            let got = match &f.outcome {
                Ok(p) => p.to_string(),
                Err(e) => e.to_string(),
            };
            let _ = writeln!(out, "  first failure: codeword {} received {} gave {got}", f.codeword, f.received);
        }
    }
    let _ = writeln!(out, "result: {}", verdict(r.passed()));

    let _ = writeln!(out, "construction={}", r.construction);
    let _ = writeln!(out, "metric={}", r.metric.as_str());
    let _ = writeln!(out, "n={}", r.n);
    let _ = writeln!(out, "k={}", r.k);
    let _ = writeln!(out, "d_claimed={}", r.d_claimed);
    let _ = writeln!(out, "size={}", r.size);
    if let Some(d) = r.measured_min_distance {
        let _ = writeln!(out, "min_distance={d}");
    }
    if let Some(ok) = r.distance_ok() {
        let _ = writeln!(out, "distance_ok={ok}");
    }
    if let Some(ok) = r.systematic_ok {
        let _ = writeln!(out, "systematic_ok={ok}");
    }
    if let (Some(radius), Some(ok)) = (r.decode_radius, r.decode_ok()) {
        let _ = writeln!(out, "decode_radius={radius}");
        let _ = writeln!(out, "decode_trials={}", r.decode_trials);
        let _ = writeln!(out, "decode_failures={}", r.decode_failures.len());
        let _ = writeln!(out, "decode_ok={ok}");
    }
    let _ = writeln!(out, "elapsed_ms={}", r.elapsed.as_millis());
    let _ = writeln!(out, "passed={}", r.passed());
    out
}

fn table(cols: &[(&str, String)]) -> String {
    let head: Vec<&str> = cols.iter().map(|(h, _)| *h).collect();
    let vals: Vec<&str> = cols.iter().map(|(_, v)| v.as_str()).collect();
    format!("{}\n{}\n", head.join("\t"), vals.join("\t"))
}

fn cmd_bounds(n: usize, d: Option<u64>, k: Option<usize>, r: Option<u64>, ball: bool, maxk: bool) -> Result<String, Failure> {
    if n == 0 {
        return Err(Failure::usage("--n must be positive"));
    }
    let diameter = (n * (n - 1) / 2) as u64;
    let packing_radius = d.map(|d| (d.saturating_sub(1) / 2).min(diameter));
    if ball {
        let r = r
            .or(packing_radius)
            .ok_or_else(|| Failure::usage("--ball needs --r or --d"))?;
        return Ok(table(&[
            ("n", n.to_string()),
            ("r", r.to_string()),
            ("ball_exact", ball_size_exact(n, r)?.to_string()),
            ("ball_upper", ball_size_upper(n, r).to_string()),
        ]));
    }
    let d = d.ok_or_else(|| Failure::usage("--d is required unless --ball is given"))?;
    if d == 0 {
        return Err(Failure::usage("--d must be positive"));
    }
    let max_k = max_k_theorem2(n, d);
    if maxk {
        return Ok(table(&[("n", n.to_string()), ("d", d.to_string()), ("max_k", max_k.to_string())]));
    }
    if let Some(k) = k {
        let rep = theorem2_check(n, k, d)?;
        return Ok(table(&[
            ("n", n.to_string()),
            ("d", d.to_string()),
            ("k", k.to_string()),
            ("r", rep.r.to_string()),
            ("ball_exact", rep.ball_exact.to_string()),
            ("ball_upper", rep.ball_upper.to_string()),
            ("packing_bound", rep.packing_bound.to_string()),
            ("gv_lhs", rep.gv_lhs.to_string()),
            ("gv_rhs", rep.gv_rhs.to_string()),
            ("gv_satisfied", rep.gv_satisfied.to_string()),
            ("max_k", max_k.to_string()),
        ]));
    }
    let r = packing_radius.unwrap_or(0);
    Ok(table(&[
        ("n", n.to_string()),
        ("d", d.to_string()),
        ("r", r.to_string()),
        ("ball_exact", ball_size_exact(n, r)?.to_string()),
        ("ball_upper", ball_size_upper(n, r).to_string()),
        ("packing_bound", packing_bound(n, d).to_string()),
        ("max_k", max_k.to_string()),
    ]))
}

fn factoradic_line(f: &Permutation) -> String {
    let v = phi(f);
    v.digits().iter().map(usize::to_string).collect::<Vec<_>>().join(" ")
}

fn convert_file(path: &Path, to: Target) -> Result<String, Failure> {
    let parsed = read_file(path)?;
    let header = parsed.header().clone();
    let words = match parsed {
        CodeFile::Codebook(_, words) => words,
        CodeFile::Spec(h) if to != Target::Spec => {
            let code = codes::from_header(&h, None)?;
            build_codebook(code.as_ref())?.codewords().to_vec()
        }
        CodeFile::Spec(_) => Vec::new(),
    };
    let per_line = |f: &dyn Fn(&Permutation) -> String| words.iter().map(|w| f(w) + "\n").collect::<String>();
    match to {
        Target::Codebook => Ok(file::render_codebook(&header, &words)),
        Target::Spec => Ok(file::render_spec(&header)),
        Target::Rank => Ok(per_line(&|w| rank(w).to_string())),
        Target::Factoradic => Ok(per_line(&factoradic_line)),
        Target::Inverse | Target::Perm => Err(Failure::usage("a file converts to codebook, spec, rank or factoradic")),
    }
}

fn convert_perm(f: &Permutation, to: Target) -> Result<String, Failure> {
    match to {
        Target::Rank => Ok(format!("{}\n", rank(f))),
        Target::Factoradic => Ok(format!("{}\n", factoradic_line(f))),
        Target::Inverse => Ok(format!("{}\n", f.inverse())),
        Target::Perm => Ok(format!("{f}\n")),
        Target::Codebook | Target::Spec => Err(Failure::usage("a permutation converts to rank, factoradic or inverse")),
    }
}

fn convert_rank(r: &str, n: usize, to: Target) -> Result<String, Failure> {
    let r = BigUint::from_str(r).map_err(|_| Failure::usage(format!("rank {r:?} is not a non-negative integer")))?;
    let f = unrank(&r, n)?;
    match to {
        Target::Perm => Ok(format!("{f}\n")),
        other => convert_perm(&f, other),
    }
}
