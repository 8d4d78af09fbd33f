//! `dyck`: generate, rank, unrank and convert Dyck words from the shell.
//!
//! Results go to stdout, one item per line; diagnostics go to stderr.
//! Exit status: 0 on success, 2 on usage or validation errors, 3 on count
//! overflow.

use std::io::{self, BufWriter, Write};
use std::process::ExitCode;

use clap::{ArgGroup, Parser, Subcommand, ValueEnum};

use dyck::{
    catalan_alternating, catalan_closed_form, lex_rank, lex_words, revlex_positions, swap_words,
    unrank_traced, BallotTable, BinaryTree, DyckWord, PositionVector,
};

/// Largest semilength the CLI accepts; keeps every count within u64.
const MAX_N: u64 = 35;

#[derive(Parser)]
#[command(name = "dyck", version, about = "Generate, rank, unrank and convert Dyck words")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Enumerate all Dyck words of semilength n, one per line
    Gen {
        /// Semilength (number of 1s)
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..=MAX_N))]
        n: u64,
        /// Enumeration order
        #[arg(long, value_enum, default_value_t = GenOrder::Lex)]
        order: GenOrder,
        /// Output representation
        #[arg(long, value_enum, default_value_t = Representation::Bits)]
        format: Representation,
        /// Stop after this many items
        #[arg(long)]
        limit: Option<usize>,
    },
    /// 1-based rank of a word within its enumeration order
    #[command(group(ArgGroup::new("input").required(true)))]
    Rank {
        /// Semilength (number of 1s)
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..=MAX_N))]
        n: u64,
        /// Word as an ASCII string over 0/1
        #[arg(long, group = "input")]
        bits: Option<String>,
        /// Positions of the 1s, space-separated 1-based decimals
        #[arg(long, group = "input")]
        positions: Option<String>,
        /// Which enumeration the rank refers to
        #[arg(long, value_enum, default_value_t = RankOrder::Revlex)]
        order: RankOrder,
    },
    /// Word at a given 1-based rank
    Unrank {
        /// Semilength (number of 1s)
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..=MAX_N))]
        n: u64,
        /// Rank in [1, C_n]
        #[arg(long)]
        rank: u64,
        /// Which enumeration the rank refers to
        #[arg(long, value_enum, default_value_t = RankOrder::Revlex)]
        order: RankOrder,
        /// Output representation
        #[arg(long, value_enum, default_value_t = Representation::Bits)]
        format: Representation,
        /// Print the subtraction trace to stderr
        #[arg(long)]
        trace: bool,
    },
    /// The nth Catalan number
    Catalan {
        #[arg(long, value_parser = clap::value_parser!(u64).range(0..=MAX_N))]
        n: u64,
        /// Computation route; all three agree
        #[arg(long, value_enum, default_value_t = CatalanMethod::Table)]
        method: CatalanMethod,
    },
    /// Print the ballot-number triangle f(i,j) up to row n
    Table {
        #[arg(long, value_parser = clap::value_parser!(u64).range(0..=MAX_N))]
        n: u64,
    },
    /// Encode a binary tree (grammar: "." | "(" tree tree ")") as a word
    EncodeTree {
        #[arg(long)]
        tree: String,
    },
    /// Decode a word into its binary tree
    DecodeTree {
        #[arg(long)]
        bits: String,
    },
}

#[derive(Copy, Clone, ValueEnum)]
enum GenOrder {
    Lex,
    Revlex,
    Swap,
}

#[derive(Copy, Clone, ValueEnum)]
enum RankOrder {
    Revlex,
    Lex,
}

#[derive(Copy, Clone, ValueEnum)]
enum Representation {
    Bits,
    Positions,
}

#[derive(Copy, Clone, ValueEnum)]
enum CatalanMethod {
    Table,
    Alternating,
    Closed,
}

#[derive(Debug)]
enum CliError {
    Usage(String),
    Overflow(String),
    Io(io::Error),
}

impl CliError {
    /// Attributes a library error to the flag whose value caused it.
    fn from_flag(flag: &str, err: dyck::Error) -> Self {
        match err {
            dyck::Error::Overflow => CliError::Overflow(format!("{flag}: {err}")),
            _ => CliError::Usage(format!("{flag}: {err}")),
        }
    }

    fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Overflow(_) => 3,
            CliError::Io(_) => 2,
        }
    }
}

impl From<io::Error> for CliError {
    fn from(err: io::Error) -> Self {
        CliError::Io(err)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    match run(cli.command, &mut out).and_then(|()| out.flush().map_err(CliError::Io)) {
        Ok(()) => ExitCode::SUCCESS,
        // a closed pipe downstream is a normal way to stop early
        Err(CliError::Io(err)) if err.kind() == io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(err) => {
            let message = match &err {
                CliError::Usage(m) | CliError::Overflow(m) => m.clone(),
                CliError::Io(e) => e.to_string(),
            };
            eprintln!("error: {message}");
            ExitCode::from(err.exit_code())
        }
    }
}

fn run(command: Command, out: &mut impl Write) -> Result<(), CliError> {
    match command {
        Command::Gen {
            n,
            order,
            format,
            limit,
        } => {
            let n = n as usize;
            let lines: Box<dyn Iterator<Item = String>> = match (order, format) {
                (GenOrder::Lex, Representation::Bits) => {
                    Box::new(lex_words(n).map(|w| w.to_string()))
                }
                (GenOrder::Lex, Representation::Positions) => Box::new(
                    lex_words(n).map(|w| PositionVector::from_word(&w).to_string()),
                ),
                (GenOrder::Revlex, Representation::Bits) => {
                    Box::new(revlex_positions(n).map(|p| p.to_word().to_string()))
                }
                (GenOrder::Revlex, Representation::Positions) => {
                    Box::new(revlex_positions(n).map(|p| p.to_string()))
                }
                (GenOrder::Swap, Representation::Bits) => {
                    Box::new(swap_words(n).map(|w| w.to_string()))
                }
                (GenOrder::Swap, Representation::Positions) => Box::new(
                    swap_words(n).map(|w| PositionVector::from_word(&w).to_string()),
                ),
            };
            let limit = limit.unwrap_or(usize::MAX);
            for line in lines.take(limit) {
                writeln!(out, "{line}")?;
            }
        }
        Command::Rank {
            n,
            bits,
            positions,
            order,
        } => {
            let n = n as usize;
            let table = make_table(n)?;
            let word = match (bits, positions) {
                (Some(bits), None) => parse_word("--bits", &bits, n)?,
                (None, Some(positions)) => parse_positions(&positions, n)?.to_word(),
                _ => unreachable!("clap enforces exactly one input"),
            };
            let nr = match order {
                RankOrder::Revlex => dyck::rank_word(&word, &table),
                RankOrder::Lex => lex_rank(&word, &table),
            }
            .map_err(|e| CliError::from_flag("--bits/--positions", e))?;
            writeln!(out, "{nr}")?;
        }
        Command::Unrank {
            n,
            rank,
            order,
            format,
            trace,
        } => {
            let n = n as usize;
            let table = make_table(n)?;
            let effective = match order {
                RankOrder::Revlex => rank,
                RankOrder::Lex => {
                    let max = table
                        .get(n, n)
                        .map_err(|e| CliError::from_flag("--n", e))?;
                    if rank < 1 || rank > max {
                        return Err(CliError::Usage(format!(
                            "--rank: rank {rank} outside [1, {max}]"
                        )));
                    }
                    max + 1 - rank
                }
            };
            let (p, subtractions) = unrank_traced(effective, n, &table)
                .map_err(|e| CliError::from_flag("--rank", e))?;
            if trace {
                let mut line = subtractions.start.to_string();
                for f in &subtractions.subtracted {
                    line.push_str(&format!(" - {f}"));
                }
                eprintln!("{line}");
            }
            match format {
                Representation::Bits => writeln!(out, "{}", p.to_word())?,
                Representation::Positions => writeln!(out, "{p}")?,
            }
        }
        Command::Catalan { n, method } => {
            let n = n as usize;
            let value = match method {
                CatalanMethod::Table => dyck::catalan(n),
                CatalanMethod::Alternating => {
                    if n == 0 {
                        return Err(CliError::Usage(
                            "--method alternating requires --n >= 1".into(),
                        ));
                    }
                    catalan_alternating(n)
                }
                CatalanMethod::Closed => catalan_closed_form(n),
            }
            .map_err(|e| CliError::from_flag("--n", e))?;
            writeln!(out, "{value}")?;
        }
        Command::Table { n } => {
            let n = n as usize;
            let table = make_table(n)?;
            write_triangle(out, &table)?;
        }
        Command::EncodeTree { tree } => {
            let tree: BinaryTree = tree
                .parse()
                .map_err(|e| CliError::from_flag("--tree", e))?;
            let word = tree.encode().map_err(|e| CliError::from_flag("--tree", e))?;
            writeln!(out, "{word}")?;
        }
        Command::DecodeTree { bits } => {
            let word: DyckWord = bits
                .parse()
                .map_err(|e| CliError::from_flag("--bits", e))?;
            writeln!(out, "{}", BinaryTree::decode(&word))?;
        }
    }
    Ok(())
}

fn make_table(n: usize) -> Result<BallotTable, CliError> {
    BallotTable::new(n).map_err(|e| CliError::from_flag("--n", e))
}

fn parse_word(flag: &str, input: &str, n: usize) -> Result<DyckWord, CliError> {
    let word: DyckWord = input.parse().map_err(|e| CliError::from_flag(flag, e))?;
    if word.semilength() != n {
        return Err(CliError::Usage(format!(
            "{flag}: word has semilength {} but --n is {n}",
            word.semilength()
        )));
    }
    Ok(word)
}

fn parse_positions(input: &str, n: usize) -> Result<PositionVector, CliError> {
    let values = input
        .split_whitespace()
        .map(|tok| {
            tok.parse::<usize>().map_err(|_| {
                CliError::Usage(format!("--positions: '{tok}' is not a non-negative integer"))
            })
        })
        .collect::<Result<Vec<usize>, CliError>>()?;
    PositionVector::new(values, n).map_err(|e| CliError::from_flag("--positions", e))
}

/// The triangle in table layout: rows j from n down to 0, columns i from 0
/// to n, entries right-aligned, a final row labelling the columns with i.
fn write_triangle(out: &mut impl Write, table: &BallotTable) -> Result<(), CliError> {
    let n = table.n_max();
    let entry = |i: usize, j: usize| table.get(i, j).expect("i <= n_max");
    let width = (0..=n)
        .map(|i| entry(i, 0).max(entry(i, i)).to_string().len())
        .max()
        .unwrap_or(1)
        .max(n.to_string().len());
    let label_width = n.to_string().len();
    for j in (0..=n).rev() {
        let mut line = format!("{j:>label_width$}");
        for i in 0..=n {
            if i >= j {
                line.push_str(&format!(" {:>width$}", entry(i, j)));
            } else {
                line.push_str(&" ".repeat(width + 1));
            }
        }
        writeln!(out, "{}", line.trim_end())?;
    }
    let mut footer = " ".repeat(label_width);
    for i in 0..=n {
        footer.push_str(&format!(" {i:>width$}"));
    }
    writeln!(out, "{footer}")?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn overflow_exits_3_other_library_errors_exit_2() {
        assert_eq!(CliError::from_flag("--n", dyck::Error::Overflow).exit_code(), 3);
        assert_eq!(
            CliError::from_flag("--n", dyck::Error::EmptyWord).exit_code(),
            2
        );
        assert_eq!(
            CliError::from_flag(
                "--rank",
                dyck::Error::RankOutOfRange { rank: 0, max: 14 }
            )
            .exit_code(),
            2
        );
    }

    #[test]
    fn triangle_layout_small() {
        let table = BallotTable::new(2).unwrap();
        let mut buf = Vec::new();
        write_triangle(&mut buf, &table).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert_eq!(text, "2     2\n1   1 2\n0 1 1 1\n  0 1 2\n");
    }
}
