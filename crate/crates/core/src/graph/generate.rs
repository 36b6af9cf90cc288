use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::EdgeList;
use crate::error::{Error, Result};

/// Synthetic graph families.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum GraphKind {
    Path(usize),
    /// Vertex 0 is the center.
    Star(usize),
    Grid { rows: usize, cols: usize },
    /// Erdős–Rényi G(n, p).
    Random { n: usize, p: f64, seed: u64 },
    Complete(usize),
    /// Uniform random recursive tree with shuffled labels.
    Tree { n: usize, seed: u64 },
}

pub fn generate(kind: &GraphKind) -> Result<EdgeList> {
    let positive = |what: &str, x: usize| {
        if x == 0 {
            Err(Error::Generator(format!("{what} must be positive")))
        } else {
            Ok(x)
        }
    };
    match *kind {
        GraphKind::Path(n) => {
            let n = positive("n", n)?;
            EdgeList::new(n, (1..n).map(|v| (v - 1, v)))
        }
        GraphKind::Star(n) => {
            let n = positive("n", n)?;
            EdgeList::new(n, (1..n).map(|v| (0, v)))
        }
        GraphKind::Grid { rows, cols } => {
            let rows = positive("rows", rows)?;
            let cols = positive("cols", cols)?;
            let id = |r: usize, c: usize| r * cols + c;
            let mut edges = Vec::with_capacity(2 * rows * cols);
            for r in 0..rows {
                for c in 0..cols {
                    if c + 1 < cols {
                        edges.push((id(r, c), id(r, c + 1)));
                    }
                    if r + 1 < rows {
                        edges.push((id(r, c), id(r + 1, c)));
                    }
                }
            }
            EdgeList::new(rows * cols, edges)
        }
        GraphKind::Random { n, p, seed } => {
            let n = positive("n", n)?;
            if !(0.0..=1.0).contains(&p) {
                return Err(Error::Generator(format!("edge probability {p} outside [0, 1]")));
            }
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut edges = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    if rng.gen::<f64>() < p {
                        edges.push((u, v));
                    }
                }
            }
            EdgeList::new(n, edges)
        }
        GraphKind::Complete(n) => {
            let n = positive("n", n)?;
            EdgeList::new(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
        }
        GraphKind::Tree { n, seed } => {
            let n = positive("n", n)?;
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut label: Vec<usize> = (0..n).collect();
            label.shuffle(&mut rng);
            let edges: Vec<_> = (1..n).map(|v| (label[rng.gen_range(0..v)], label[v])).collect();
            EdgeList::new(n, edges)
        }
    }
}

impl fmt::Display for GraphKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphKind::Path(n) => write!(f, "path:{n}"),
            GraphKind::Star(n) => write!(f, "star:{n}"),
            GraphKind::Grid { rows, cols } => write!(f, "grid:{rows}:{cols}"),
            GraphKind::Random { n, p, seed } => write!(f, "random:{n}:{p}:{seed}"),
            GraphKind::Complete(n) => write!(f, "complete:{n}"),
            GraphKind::Tree { n, seed } => write!(f, "tree:{n}:{seed}"),
        }
    }
}

impl GraphKind {
    /// Parses `kind` followed by its parameters, e.g. `["grid", "3", "4"]`.
    /// Seeded kinds take an optional trailing seed, falling back to `default_seed`.
    pub fn from_parts(parts: &[&str], default_seed: u64) -> Result<Self> {
        let bad = || Error::Generator(parts.join(":"));
        let int = |s: &str| s.parse::<usize>().map_err(|_| bad());
        let seed = |s: Option<&&str>| match s {
            Some(s) => s.parse::<u64>().map_err(|_| bad()),
            None => Ok(default_seed),
        };
        let (&kind, args) = parts.split_first().ok_or_else(bad)?;
        let kind = match (kind, args.len()) {
            ("path", 1) => GraphKind::Path(int(args[0])?),
            ("star", 1) => GraphKind::Star(int(args[0])?),
            ("complete", 1) => GraphKind::Complete(int(args[0])?),
            ("grid", 2) => GraphKind::Grid { rows: int(args[0])?, cols: int(args[1])? },
            ("random", 2 | 3) => GraphKind::Random {
                n: int(args[0])?,
                p: args[1].parse().map_err(|_| bad())?,
                seed: seed(args.get(2))?,
            },
            ("tree", 1 | 2) => GraphKind::Tree { n: int(args[0])?, seed: seed(args.get(1))? },
            _ => return Err(bad()),
        };
        Ok(kind)
    }
}

impl FromStr for GraphKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parts: Vec<&str> = s.split(':').collect();
        Self::from_parts(&parts, 0)
    }
}
