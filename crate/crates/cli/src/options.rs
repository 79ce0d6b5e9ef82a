use std::path::{Path, PathBuf};

use clap::Args;
use ismzv::schur::DiagonalWeightSequence;
use ismzv::Partition;
use serde::de::DeserializeOwned;
use serde::Deserialize;

use crate::Failure;

/// A flag value written as JSON on the command line, e.g. `--shape [2,1]`.
#[derive(Debug, Clone, Deserialize)]
#[serde(transparent)]
pub struct Json<T>(pub T);

fn parse_json<T: DeserializeOwned>(s: &str) -> Result<Json<T>, String> {
    serde_json::from_str(s)
        .map(Json)
        .map_err(|e| format!("expected JSON: {e}"))
}

/// Options shared by every subcommand. A `--config` file holds the same keys
/// as a JSON object; flags given on the command line take precedence.
#[derive(Debug, Clone, Default, Args, Deserialize)]
#[serde(default, rename_all = "kebab-case", deny_unknown_fields)]
pub struct Options {
    /// Partition as a JSON array, e.g. [3,1]
    #[arg(long, value_parser = parse_json::<Partition>)]
    pub shape: Option<Json<Partition>>,

    /// Tableau weights row by row, e.g. [[2,1],[3]]
    #[arg(long, value_parser = parse_json::<Vec<Vec<i64>>>)]
    pub entries: Option<Json<Vec<Vec<i64>>>>,

    /// Index sequence for a single-column value, e.g. [2,1,3]
    #[arg(long, value_parser = parse_json::<Vec<i64>>)]
    pub keys: Option<Json<Vec<i64>>>,

    /// Diagonal weights as a JSON object from offset to weight, e.g. {"-1":2,"0":3}
    #[arg(long, value_parser = parse_json::<DiagonalWeightSequence>)]
    pub diagonal: Option<Json<DiagonalWeightSequence>>,

    /// Truncation bound: summation variables range over 1..N
    #[arg(long = "N")]
    #[serde(rename = "N")]
    pub n: Option<usize>,

    /// Layer height for the single-layer check
    #[arg(long = "M")]
    #[serde(rename = "M")]
    pub m: Option<usize>,

    /// Upper zero counts per column for the single-layer check, e.g. [2,1,0]
    #[arg(long, value_parser = parse_json::<Vec<usize>>)]
    pub b: Option<Json<Vec<usize>>>,

    /// Coefficient ring: rational, qseries:Q or qsym
    #[arg(long)]
    pub ring: Option<String>,

    /// Largest partition size in sweeps
    #[arg(long)]
    pub max_cells: Option<usize>,

    /// Seed for random diagonal weights
    #[arg(long)]
    pub seed: Option<u64>,

    /// Random diagonal sequences per instance
    #[arg(long)]
    pub draws: Option<u64>,

    /// Write the JSON document here instead of standard output
    #[arg(long)]
    pub output: Option<PathBuf>,

    /// Read further options from a JSON file
    #[arg(long)]
    #[serde(skip)]
    pub config: Option<PathBuf>,
}

impl Options {
    /// Fills unset fields from the `--config` file, if one was given.
    pub fn resolve(self) -> Result<Options, Failure> {
        let Some(path) = self.config.clone() else {
            return Ok(self);
        };
        let file = read_config(&path)?;
        Ok(Options {
            shape: self.shape.or(file.shape),
            entries: self.entries.or(file.entries),
            keys: self.keys.or(file.keys),
            diagonal: self.diagonal.or(file.diagonal),
            n: self.n.or(file.n),
            m: self.m.or(file.m),
            b: self.b.or(file.b),
            ring: self.ring.or(file.ring),
            max_cells: self.max_cells.or(file.max_cells),
            seed: self.seed.or(file.seed),
            draws: self.draws.or(file.draws),
            output: self.output.or(file.output),
            config: Some(path),
        })
    }

    pub fn shape(&self) -> Option<&Partition> {
        self.shape.as_ref().map(|s| &s.0)
    }

    pub fn diagonal(&self) -> Option<&DiagonalWeightSequence> {
        self.diagonal.as_ref().map(|d| &d.0)
    }
}

fn read_config(path: &Path) -> Result<Options, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::Input(format!("cannot read config {}: {e}", path.display())))?;
    serde_json::from_str(&text)
        .map_err(|e| Failure::Input(format!("bad config {}: {e}", path.display())))
}
