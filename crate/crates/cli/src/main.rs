//! `necklaces`: count, enumerate and classify fixed-content necklaces, apply
//! the unstable-necklace injection, and run the verification sweeps.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage or input error.

use std::io::{self, BufWriter, Write};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use necklaces::counting::{bound_terms, count_lyndon, count_necklaces, BigCount};
use necklaces::generation::{classify, generate, GenKind, Stability};
use necklaces::mapping::{apply_decomposed, decompose, equality_status};
use necklaces::oracle::{Oracle, DEFAULT_CAP};
use necklaces::verify::{
    verify_bound, verify_equality, verify_injectivity, verify_oracle, verify_witnesses,
};
use necklaces::{counting, Content, Word};

const EXIT_VERIFY_FAILED: u8 = 1;
const EXIT_USAGE: u8 = 2;

#[derive(Parser)]
#[command(
    name = "necklaces",
    version,
    about = "Fixed-content necklaces, Lyndon words and the Pascal-like bound"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print N, L, the bound's right-hand side and the gap for a content
    Count {
        #[command(flatten)]
        content: ContentArgs,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Stream the words of one kind with the given content, one per line
    Enumerate {
        #[command(flatten)]
        content: ContentArgs,
        #[arg(long, value_enum, default_value_t = Kind::Necklace)]
        kind: Kind,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Refuse contents longer than this
        #[arg(long, default_value_t = 64)]
        max_len: usize,
    },
    /// Decompose an unstable necklace and apply the injection to it
    Map {
        /// Word in the text encoding, e.g. 01120112 or 0,11,3
        word: String,
        /// Alphabet size; inferred from the largest symbol when omitted
        #[arg(long)]
        k: Option<usize>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Run an exhaustive verification sweep
    Verify {
        #[arg(value_enum)]
        suite: SuiteArg,
        /// Largest length to sweep (suite-specific default)
        #[arg(long)]
        max_n: Option<usize>,
        /// Alphabet size for the bound, injectivity and oracle suites
        #[arg(long, default_value_t = 2)]
        k: usize,
        /// Largest total length the brute-force oracle will enumerate
        #[arg(long, default_value_t = DEFAULT_CAP)]
        oracle_cap: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Tabulate N(n,d), L(n-1,d), L(n-1,d-1) and the gap for all 0 < d < n
    Table {
        #[arg(long, default_value_t = 20)]
        max_n: usize,
        #[arg(long, value_enum, default_value_t = TableFormat::Tsv)]
        format: TableFormat,
    },
}

#[derive(Args)]
struct ContentArgs {
    /// Symbol counts n_0,n_1,...; the alphabet size is the number of entries
    #[arg(long, conflicts_with_all = ["n", "d"], required_unless_present_all = ["n", "d"])]
    content: Option<String>,
    /// Binary length (with -d)
    #[arg(short = 'n', requires = "d")]
    n: Option<usize>,
    /// Binary density (with -n)
    #[arg(short = 'd', requires = "n")]
    d: Option<usize>,
}

impl ContentArgs {
    fn resolve(&self) -> necklaces::Result<(Content, bool)> {
        match (&self.content, self.n, self.d) {
            (Some(text), _, _) => Ok((Content::parse(text)?, false)),
            (None, Some(n), Some(d)) => Ok((Content::binary(n, d)?, true)),
            _ => unreachable!("clap enforces one of --content or -n/-d"),
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Jsonl,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TableFormat {
    Tsv,
    Jsonl,
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Prenecklace,
    Necklace,
    Lyndon,
}

impl From<Kind> for GenKind {
    fn from(kind: Kind) -> Self {
        match kind {
            Kind::Prenecklace => GenKind::Prenecklace,
            Kind::Necklace => GenKind::Necklace,
            Kind::Lyndon => GenKind::Lyndon,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    Bound,
    Injectivity,
    Equality,
    Witnesses,
    Oracle,
}

/// Failure of a command, mapped onto the exit-code contract.
enum Failure {
    Input(String),
    Verification,
    Io(io::Error),
}

impl From<necklaces::Error> for Failure {
    fn from(e: necklaces::Error) -> Self {
        Failure::Input(e.to_string())
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

type CmdResult = Result<(), Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let result = run(cli.command, &mut out).and_then(|()| out.flush().map_err(Failure::Io));
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification) => ExitCode::from(EXIT_VERIFY_FAILED),
        Err(Failure::Input(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(EXIT_USAGE)
        }
        Err(Failure::Io(e)) if e.kind() == io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(Failure::Io(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}

fn run(command: Command, out: &mut impl Write) -> CmdResult {
    match command {
        Command::Count { content, format } => cmd_count(&content, format, out),
        Command::Enumerate {
            content,
            kind,
            format,
            max_len,
        } => cmd_enumerate(&content, kind.into(), format, max_len, out),
        Command::Map { word, k, format } => cmd_map(&word, k, format, out),
        Command::Verify {
            suite,
            max_n,
            k,
            oracle_cap,
            format,
        } => cmd_verify(suite, max_n, k, oracle_cap, format, out),
        Command::Table { max_n, format } => cmd_table(max_n, format, out),
    }
}

fn term_label(content: &Content, binary: bool, symbol: usize) -> String {
    let c = content.decrement(symbol).expect("positive counts");
    if binary {
        format!("L({},{})", c.total(), c.count(1))
    } else {
        format!("L_{}({c})", c.alphabet_size())
    }
}

fn cmd_count(args: &ContentArgs, format: Format, out: &mut impl Write) -> CmdResult {
    let (content, binary) = args.resolve()?;
    let necklaces = count_necklaces(&content)?;
    let lyndon = count_lyndon(&content)?;
    let terms = if content.all_positive() {
        Some(bound_terms(&content)?)
    } else {
        None
    };
    let rhs: Option<BigCount> = terms.as_ref().map(|t| t.iter().cloned().sum());
    let gap = rhs.as_ref().map(|r| r.signed_diff(&necklaces));
    match format {
        Format::Text => {
            writeln!(out, "content  {content}")?;
            writeln!(out, "N        {necklaces}")?;
            writeln!(out, "L        {lyndon}")?;
            match (&terms, &rhs, &gap) {
                (Some(terms), Some(rhs), Some(gap)) => {
                    let labels: Vec<String> = (0..terms.len())
                        .map(|i| term_label(&content, binary, i))
                        .collect();
                    let values: Vec<String> = terms.iter().map(|t| t.to_string()).collect();
                    writeln!(
                        out,
                        "rhs      {rhs} = {} = {}",
                        labels.join(" + "),
                        values.join(" + ")
                    )?;
                    writeln!(out, "gap      {gap}")?;
                }
                _ => writeln!(out, "rhs      undefined (every count must be positive)")?,
            }
        }
        Format::Jsonl => {
            let record = json!({
                "content": content,
                "n": content.total(),
                "necklaces": necklaces,
                "lyndon": lyndon,
                "rhs": rhs,
                "rhs_terms": terms,
                "gap": gap.map(|g| g.to_string()),
            });
            writeln!(out, "{record}")?;
        }
    }
    Ok(())
}

fn cmd_enumerate(
    args: &ContentArgs,
    kind: GenKind,
    format: Format,
    max_len: usize,
    out: &mut impl Write,
) -> CmdResult {
    let (content, _) = args.resolve()?;
    if content.total() > max_len {
        return Err(Failure::Input(format!(
            "length {} exceeds --max-len {max_len}",
            content.total()
        )));
    }
    let k = content.alphabet_size();
    let with_stability = kind == GenKind::Necklace && content.total() >= 2;
    let mut stream = generate(&content, kind)?;
    while let Some(symbols) = stream.advance() {
        let word = Word::new(symbols.to_vec(), k)?;
        match format {
            Format::Text => writeln!(out, "{word}")?,
            Format::Jsonl if with_stability => {
                let stable = classify(&word)? == Stability::Stable;
                writeln!(out, "{}", json!({ "word": word, "stable": stable }))?
            }
            Format::Jsonl => writeln!(out, "{}", json!({ "word": word }))?,
        }
    }
    Ok(())
}

fn cmd_map(text: &str, k: Option<usize>, format: Format, out: &mut impl Write) -> CmdResult {
    let word = match k {
        Some(k) => Word::parse(text, k)?,
        None => Word::parse_inferred(text)?,
    };
    let dec = decompose(&word)?;
    let image = apply_decomposed(&word, &dec);
    match format {
        Format::Text => {
            writeln!(out, "word    {word}")?;
            writeln!(out, "p       {}", dec.p)?;
            writeln!(out, "j       {}", dec.j)?;
            writeln!(out, "i       {}", dec.i)?;
            writeln!(out, "z       {}", dec.z)?;
            writeln!(out, "x       {}", dec.x)?;
            writeln!(out, "branch  {}", dec.branch())?;
            writeln!(out, "image   {image}")?;
        }
        Format::Jsonl => {
            let record = json!({
                "word": word,
                "decomposition": dec,
                "branch": dec.branch(),
                "image": image,
                "image_is_lyndon": true,
            });
            writeln!(out, "{record}")?;
        }
    }
    Ok(())
}

/// Largest `--max-n` accepted per suite.
fn suite_cap(suite: SuiteArg, oracle_cap: usize) -> usize {
    match suite {
        SuiteArg::Bound => 200,
        SuiteArg::Injectivity => 16,
        SuiteArg::Equality => 200,
        SuiteArg::Witnesses => 16,
        SuiteArg::Oracle => oracle_cap,
    }
}

fn cmd_verify(
    suite: SuiteArg,
    max_n: Option<usize>,
    k: usize,
    oracle_cap: usize,
    format: Format,
    out: &mut impl Write,
) -> CmdResult {
    let max_n = max_n.unwrap_or(match suite {
        SuiteArg::Bound => 64,
        SuiteArg::Injectivity => 12,
        SuiteArg::Equality => 30,
        SuiteArg::Witnesses => 14,
        SuiteArg::Oracle => 12,
    });
    let cap = suite_cap(suite, oracle_cap);
    if max_n > cap {
        return Err(Failure::Input(format!(
            "--max-n {max_n} exceeds the cap {cap} for this suite"
        )));
    }
    let oracle = Oracle::with_cap(oracle_cap);
    let report = match suite {
        SuiteArg::Bound => verify_bound(max_n, k)?,
        SuiteArg::Injectivity => verify_injectivity(max_n, k)?,
        SuiteArg::Equality => verify_equality(max_n),
        SuiteArg::Witnesses => verify_witnesses(max_n, max_n, &oracle),
        SuiteArg::Oracle => verify_oracle(max_n, k, &oracle)?,
    };
    match format {
        Format::Text => write!(out, "{report}")?,
        Format::Jsonl => writeln!(
            out,
            "{}",
            serde_json::to_string(&report).expect("report serializes")
        )?,
    }
    if report.passed() {
        Ok(())
    } else {
        Err(Failure::Verification)
    }
}

fn cmd_table(max_n: usize, format: TableFormat, out: &mut impl Write) -> CmdResult {
    const CAP: usize = 200;
    if max_n > CAP {
        return Err(Failure::Input(format!(
            "--max-n {max_n} exceeds the cap {CAP}"
        )));
    }
    if format == TableFormat::Tsv {
        writeln!(out, "n\td\tN\tL(n-1,d)\tL(n-1,d-1)\tgap\tequality")?;
    }
    for n in 2..=max_n {
        for d in 1..n {
            let necklaces = counting::binary_necklaces(n, d)?;
            let upper = counting::binary_lyndon(n - 1, d)?;
            let lower = counting::binary_lyndon(n - 1, d - 1)?;
            let gap = (upper.clone() + &lower).signed_diff(&necklaces);
            let equality = equality_status(n, d)?.is_equality();
            match format {
                TableFormat::Tsv => writeln!(
                    out,
                    "{n}\t{d}\t{necklaces}\t{upper}\t{lower}\t{gap}\t{equality}"
                )?,
                TableFormat::Jsonl => {
                    let record = json!({
                        "n": n,
                        "d": d,
                        "N": necklaces,
                        "L_upper": upper,
                        "L_lower": lower,
                        "gap": gap.to_string(),
                        "equality": equality,
                    });
                    writeln!(out, "{record}")?
                }
            }
        }
    }
    Ok(())
}
