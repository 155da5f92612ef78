mod bench;
mod selftest;

use std::fs;
use std::io::{self, BufRead, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use lcew_core::bmm::{multiply, naive_product, CooMatrix};
use lcew_core::periodicity::{default_t, deterministic_borders, prefix_array, quantum_borders};
use lcew_core::pmwe::pmwe_search;
use lcew_core::{occurrences, LcewIndex, Mode, WildcardText};

#[derive(Parser, Debug)]
#[command(name = "lcew", version, about = "Longest common extensions on strings with wildcards")]
struct Cli {
    /// Byte that stands for the wildcard in text files.
    #[arg(long, global = true, default_value = "?", value_parser = parse_wildcard)]
    wildcard: u8,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build an index, then answer `i j` (or `query i j`) lines from stdin.
    Build {
        text: PathBuf,
        #[arg(long)]
        t: Option<usize>,
        /// Write the Jump table (row-major, little-endian i32) to this file.
        #[arg(long)]
        dump_jump: Option<PathBuf>,
    },
    /// Answer one query, or a batch file of `i j` lines.
    Query {
        text: PathBuf,
        i: Option<usize>,
        j: Option<usize>,
        #[arg(long)]
        t: Option<usize>,
        #[arg(long)]
        batch: Option<PathBuf>,
    },
    /// Start positions of exact occurrences, one per line.
    Match { text: PathBuf, pattern: PathBuf },
    /// Boolean product of two matrices in coordinate format.
    Bmm {
        a: PathBuf,
        b: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
        /// Use the triple-loop product instead.
        #[arg(long)]
        naive: bool,
    },
    /// End positions of substrings within `k` edits of the pattern.
    Pmwe {
        text: PathBuf,
        pattern: PathBuf,
        #[arg(short)]
        k: usize,
    },
    /// Prefix array, quantum border array and quantum period array.
    Arrays {
        text: PathBuf,
        #[arg(long)]
        t: Option<usize>,
        /// Ask for the deterministic variants (not supported).
        #[arg(long)]
        deterministic: bool,
    },
    /// Sweep t over powers of two and print CSV.
    Bench {
        /// Read the text from a file instead of generating one.
        #[arg(long)]
        text: Option<PathBuf>,
        #[arg(long, default_value_t = 1 << 16)]
        n: usize,
        #[arg(long, default_value_t = 256)]
        groups: usize,
        #[arg(long, default_value_t = 4)]
        sigma: usize,
        #[arg(long, default_value_t = 20_000)]
        queries: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
    /// Run the randomized oracle-equivalence suites.
    Selftest {
        #[arg(long, default_value_t = 7)]
        seed: u64,
    },
}

fn parse_wildcard(s: &str) -> Result<u8, String> {
    match s.as_bytes() {
        [b] => Ok(*b),
        _ => Err(format!("wildcard must be a single byte, got {s:?}")),
    }
}

#[derive(Debug)]
pub enum CliError {
    /// Bad input or parameters: exit code 2.
    Usage(String),
    /// A self-test failed: exit code 1.
    Failed(String),
}

impl From<lcew_core::Error> for CliError {
    fn from(e: lcew_core::Error) -> Self {
        CliError::Usage(e.to_string())
    }
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError::Usage(e.to_string())
    }
}

type CliResult = Result<(), CliError>;

fn read_bytes(path: &Path) -> Result<Vec<u8>, CliError> {
    let mut raw = fs::read(path).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))?;
    if raw.last() == Some(&b'\n') {
        raw.pop();
        if raw.last() == Some(&b'\r') {
            raw.pop();
        }
    }
    Ok(raw)
}

fn read_text(path: &Path, wildcard: u8) -> Result<WildcardText, CliError> {
    let raw = read_bytes(path)?;
    WildcardText::new(&raw, wildcard).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))
}

fn build_index(text: WildcardText, t: Option<usize>) -> Result<LcewIndex, CliError> {
    let t = t.unwrap_or_else(|| default_t(&text));
    if t == 0 {
        return Err(CliError::Usage("t must be at least 1".into()));
    }
    Ok(LcewIndex::build(text, t)?)
}

/// Parses `i j` or `query i j`; blank lines and `#` comments yield `None`.
fn parse_query(line: &str, line_no: usize) -> Result<Option<(usize, usize)>, CliError> {
    let line = line.trim();
    if line.is_empty() || line.starts_with('#') {
        return Ok(None);
    }
    let mut fields: Vec<&str> = line.split_whitespace().collect();
    if fields.first() == Some(&"query") {
        fields.remove(0);
    }
    let bad = || CliError::Usage(format!("line {line_no}: expected \"i j\", got {line:?}"));
    if fields.len() != 2 {
        return Err(bad());
    }
    let i = fields[0].parse().map_err(|_| bad())?;
    let j = fields[1].parse().map_err(|_| bad())?;
    Ok(Some((i, j)))
}

fn answer_lines<R: BufRead, W: Write>(index: &LcewIndex, input: R, out: &mut W) -> CliResult {
    for (k, line) in input.lines().enumerate() {
        if let Some((i, j)) = parse_query(&line?, k + 1)? {
            writeln!(out, "{}", index.lcew(i, j)?)?;
        }
    }
    Ok(())
}

fn describe(index: &LcewIndex) -> String {
    let text = index.text();
    let mode = match index.mode() {
        Mode::Tradeoff => "tradeoff",
        Mode::Kangaroo => "kangaroo",
    };
    format!(
        "n={} D={} G={} |Tr|={} t={} lambda={} mode={mode} cells={}",
        text.len(),
        text.wildcard_count(),
        text.group_count(),
        text.transitions().len(),
        index.t(),
        index.selection().lambda(),
        index.table_cells()
    )
}

fn run(cli: Cli) -> CliResult {
    let w = cli.wildcard;
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    match cli.command {
        Command::Build { text, t, dump_jump } => {
            let index = build_index(read_text(&text, w)?, t)?;
            eprintln!("{}", describe(&index));
            if let Some(path) = dump_jump {
                let table = index
                    .jump_table()
                    .ok_or_else(|| CliError::Usage("no Jump table in kangaroo mode (t > |Tr|)".into()))?;
                table.write_le(BufWriter::new(fs::File::create(&path)?))?;
            }
            answer_lines(&index, io::stdin().lock(), &mut out)?;
        }
        Command::Query { text, i, j, t, batch } => {
            let index = build_index(read_text(&text, w)?, t)?;
            match (i, j, batch) {
                (Some(i), Some(j), None) => writeln!(out, "{}", index.lcew(i, j)?)?,
                (None, None, Some(path)) => {
                    let file = fs::File::open(&path).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))?;
                    answer_lines(&index, io::BufReader::new(file), &mut out)?;
                }
                _ => return Err(CliError::Usage("give either I J or --batch FILE".into())),
            }
        }
        Command::Match { text, pattern } => {
            let t = read_bytes(&text)?;
            let p = read_bytes(&pattern)?;
            if p.is_empty() || t.is_empty() {
                return Err(CliError::Usage("pattern and text must be non-empty".into()));
            }
            // One shared alphabet for both strings.
            let mut joined = p.clone();
            joined.extend_from_slice(&t);
            let joined = WildcardText::new(&joined, w)?;
            let (ps, ts) = joined.symbols().split_at(p.len());
            for pos in occurrences(ps, ts)?.positions() {
                writeln!(out, "{pos}")?;
            }
        }
        Command::Bmm { a, b, output, naive } => {
            let read = |p: &Path| -> Result<CooMatrix, CliError> {
                let s = fs::read_to_string(p).map_err(|e| CliError::Usage(format!("{}: {e}", p.display())))?;
                CooMatrix::parse(&s).map_err(|e| CliError::Usage(format!("{}: {e}", p.display())))
            };
            let (a, b) = (read(&a)?, read(&b)?);
            let c = if naive { naive_product(&a, &b)? } else { multiply(&a, &b)? };
            match output {
                Some(path) => fs::write(path, c.to_coo_string())?,
                None => out.write_all(c.to_coo_string().as_bytes())?,
            }
        }
        Command::Pmwe { text, pattern, k } => {
            let t = read_text(&text, w)?;
            let p = read_text(&pattern, w)?;
            for pos in pmwe_search(&t, &p, k)?.positions {
                writeln!(out, "{pos}")?;
            }
        }
        Command::Arrays { text, t, deterministic } => {
            let text = read_text(&text, w)?;
            if deterministic {
                deterministic_borders(&text)?;
            }
            let t = t.unwrap_or_else(|| default_t(&text));
            let pi = prefix_array(&text, t)?;
            let q = quantum_borders(&pi);
            for row in [&pi.pi, &q.borders, &q.periods] {
                let line: Vec<String> = row.iter().map(usize::to_string).collect();
                writeln!(out, "{}", line.join(" "))?;
            }
        }
        Command::Bench { text, n, groups, sigma, queries, seed } => {
            let raw = match text {
                Some(path) => read_bytes(&path)?,
                None => bench::generate(n, groups, sigma, seed)?,
            };
            let text = WildcardText::new(&raw, w)?;
            bench::sweep(&text, queries, seed, &mut out)?;
        }
        Command::Selftest { seed } => selftest::run(seed, &mut out)?,
    }
    out.flush()?;
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(CliError::Failed(msg)) => {
            eprintln!("selftest failed: {msg}");
            ExitCode::from(1)
        }
    }
}
