//! Graph sources named on the command line: a file path or `gen:<kind>:<params>`.

use std::fs::File;
use std::io::BufReader;
use std::path::PathBuf;

use crate::error::{Error, Result};
use crate::graph::{generate, load_edge_list, EdgeList, GraphKind};

#[derive(Debug, Clone, PartialEq)]
pub enum GraphSource {
    File(PathBuf),
    Generated(GraphKind),
}

impl GraphSource {
    /// Parses `gen:path:1024`, `gen:grid:100:100`, `gen:random:2000:0.005[:seed]`
    /// and so on; anything else is a file path. Seeded generators without an
    /// explicit seed use `default_seed`.
    pub fn parse(spec: &str, default_seed: u64) -> Result<Self> {
        match spec.strip_prefix("gen:") {
            Some(rest) => {
                let parts: Vec<&str> = rest.split(':').collect();
                GraphKind::from_parts(&parts, default_seed)
                    .map(GraphSource::Generated)
                    .map_err(|_| Error::Source(spec.to_string()))
            }
            None if spec.is_empty() => Err(Error::Source(spec.to_string())),
            None => Ok(GraphSource::File(PathBuf::from(spec))),
        }
    }

    pub fn load(&self) -> Result<EdgeList> {
        match self {
            GraphSource::File(path) => load_edge_list(BufReader::new(File::open(path)?)),
            GraphSource::Generated(kind) => generate(kind),
        }
    }
}
