//! Rooted spanning forest strategies behind a common trait, selectable by name.

pub mod bfs;
pub mod cc;
pub mod euler;
pub mod pr_rst;

use std::time::Instant;

use crate::engine::{Engine, StepReport};
use crate::error::{Error, Result};
use crate::forest::RootedForest;
use crate::graph::Graph;

pub use bfs::Bfs;
pub use euler::CcEuler;
pub use pr_rst::PrRst;

/// Knobs shared by every strategy; each one reads what it needs.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AlgoConfig {
    /// Pointer-jump rounds per barrier in PR-RST.
    pub jump_batch: usize,
    /// Worker threads per step.
    pub workers: usize,
}

impl Default for AlgoConfig {
    fn default() -> Self {
        Self { jump_batch: pr_rst::DEFAULT_JUMP_BATCH, workers: 1 }
    }
}

pub trait RstAlgorithm: Send + Sync {
    fn name(&self) -> &'static str;

    /// Builds a rooted spanning forest of `g`. The component of `root` is
    /// rooted at `root`; how other components pick roots is strategy specific.
    fn construct(&self, g: &Graph, root: usize, engine: &mut Engine) -> Result<RootedForest>;

    fn workers(&self) -> usize {
        1
    }

    /// Runs on a fresh engine and reports its step counts and wall time.
    fn run(&self, g: &Graph, root: usize) -> Result<(RootedForest, StepReport)> {
        let mut engine = Engine::new(self.workers());
        let start = Instant::now();
        let forest = self.construct(g, root, &mut engine)?;
        Ok((forest, engine.report(start.elapsed())))
    }
}

pub type Factory = Box<dyn Fn(&AlgoConfig) -> Box<dyn RstAlgorithm> + Send + Sync>;

/// Name → strategy factory table, in registration order.
pub struct Registry {
    entries: Vec<(String, Factory)>,
}

impl Registry {
    pub fn empty() -> Self {
        Self { entries: Vec::new() }
    }

    /// Replaces any earlier entry of the same name.
    pub fn register<F>(&mut self, name: &str, factory: F)
    where
        F: Fn(&AlgoConfig) -> Box<dyn RstAlgorithm> + Send + Sync + 'static,
    {
        self.entries.retain(|(n, _)| n != name);
        self.entries.push((name.to_string(), Box::new(factory)));
    }

    pub fn create(&self, name: &str, config: &AlgoConfig) -> Result<Box<dyn RstAlgorithm>> {
        self.entries
            .iter()
            .find(|(n, _)| n == name)
            .map(|(_, f)| f(config))
            .ok_or_else(|| Error::UnknownAlgorithm(name.to_string()))
    }

    pub fn names(&self) -> impl Iterator<Item = &str> {
        self.entries.iter().map(|(n, _)| n.as_str())
    }
}

impl Default for Registry {
    fn default() -> Self {
        let mut r = Self::empty();
        r.register(bfs::NAME, |c| Box::new(Bfs { workers: c.workers }));
        r.register(euler::NAME, |c| Box::new(CcEuler { workers: c.workers }));
        r.register(pr_rst::NAME, |c| Box::new(PrRst { jump_batch: c.jump_batch, workers: c.workers }));
        r
    }
}

pub(crate) fn check_vertex(g: &Graph, v: usize) -> Result<()> {
    let n = g.num_vertices();
    if v >= n {
        return Err(Error::VertexOutOfRange { vertex: v, n });
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_names() {
        let r = Registry::default();
        assert_eq!(r.names().collect::<Vec<_>>(), ["bfs", "cc-euler", "pr-rst"]);
        for name in ["bfs", "cc-euler", "pr-rst"] {
            assert_eq!(r.create(name, &AlgoConfig::default()).unwrap().name(), name);
        }
        assert!(matches!(r.create("dfs", &AlgoConfig::default()), Err(Error::UnknownAlgorithm(_))));
    }

    #[test]
    fn register_overrides() {
        let mut r = Registry::default();
        r.register("bfs", |_| Box::new(PrRst { jump_batch: 1, workers: 1 }));
        assert_eq!(r.create("bfs", &AlgoConfig::default()).unwrap().name(), "pr-rst");
        assert_eq!(r.names().count(), 3);
    }
}
