use std::fs::File;
use std::io::{self, BufRead, BufReader};
use std::path::PathBuf;

use clap::{Args, ValueEnum};
use qcover_core::extremal::build_b;
use qcover_core::graph6::{from_graph6, read_stream};
use qcover_core::Graph;

use crate::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Family {
    /// `B(n,k,δ) = K_δ ∨ (K_{n−2δ−k} ∪ ‾K_{δ+k})`
    #[value(name = "B", alias = "b")]
    B,
}

/// Exactly one graph source per invocation.
#[derive(Args, Debug, Clone)]
#[group(id = "source", required = true, multiple = false)]
pub struct Source {
    /// A single graph6 string.
    #[arg(long)]
    pub g6: Option<String>,
    /// A file with one graph6 record per line.
    #[arg(long)]
    pub file: Option<PathBuf>,
    /// Read graph6 records from standard input.
    #[arg(long)]
    pub stdin: bool,
    /// Build a member of a named family (needs --n, --k, --delta).
    #[arg(long, value_enum)]
    pub construct: Option<Family>,
}

/// Family parameters, named as in the library.
#[derive(Args, Debug, Clone, Copy)]
pub struct FamilyParams {
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long, default_value_t = 1)]
    pub k: usize,
    #[arg(long, default_value_t = 2)]
    pub delta: usize,
}

impl FamilyParams {
    pub fn n(&self) -> Result<usize, CliError> {
        self.n.ok_or_else(|| CliError::Usage("--n is required here".into()))
    }
}

/// A labeled input graph; `label` is a line number or a short name.
pub struct Item {
    pub label: String,
    pub graph: Graph,
}

fn from_lines(reader: impl BufRead) -> Result<Vec<Item>, CliError> {
    let mut out = Vec::new();
    for item in read_stream(reader) {
        let item = item?;
        let graph = item
            .graph
            .map_err(|e| CliError::Usage(format!("line {}: {e}", item.line)))?;
        out.push(Item {
            label: item.line.to_string(),
            graph,
        });
    }
    Ok(out)
}

/// Loads every graph from the chosen source. Any malformed record fails
/// the whole invocation.
pub fn load(source: &Source, params: &FamilyParams) -> Result<Vec<Item>, CliError> {
    if let Some(text) = &source.g6 {
        let graph = from_graph6(text.trim_end().as_bytes()).map_err(|e| CliError::Usage(format!("--g6: {e}")))?;
        return Ok(vec![Item {
            label: "g6".into(),
            graph,
        }]);
    }
    if let Some(path) = &source.file {
        let f = File::open(path).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))?;
        return from_lines(BufReader::new(f));
    }
    if source.stdin {
        return from_lines(io::stdin().lock());
    }
    match source.construct {
        Some(Family::B) => {
            let n = params.n()?;
            let inst = build_b(n, params.k, params.delta)?;
            Ok(vec![Item {
                label: format!("B({n},{},{})", params.k, params.delta),
                graph: inst.graph,
            }])
        }
        None => Err(CliError::Usage("no graph source given".into())),
    }
}
