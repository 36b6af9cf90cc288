//! Benchmark protocol: one warm-up run, five timed runs, median wall time.

use std::io::{Read, Write};

use serde::{Deserialize, Serialize};

use crate::algo::RstAlgorithm;
use crate::error::Result;
use crate::graph::Graph;
use crate::validate::validate_rooted_forest;

pub const WARMUP_RUNS: usize = 1;
pub const TIMED_RUNS: usize = 5;

/// One CSV row. Column order is the field order.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BenchRecord {
    pub dataset: String,
    pub algorithm: String,
    pub n: usize,
    pub m: usize,
    pub root: usize,
    pub median_ms: f64,
    pub steps: u64,
    pub work: u64,
    pub tree_depth: usize,
    pub components: usize,
    pub valid: bool,
}

pub const CSV_HEADER: &str = "dataset,algorithm,n,m,root,median_ms,steps,work,tree_depth,components,valid";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RunKind {
    Warmup,
    Timed,
}

pub fn median(values: &[f64]) -> f64 {
    let mut v = values.to_vec();
    v.sort_by(f64::total_cmp);
    let mid = v.len() / 2;
    if v.len() % 2 == 1 {
        v[mid]
    } else {
        (v[mid - 1] + v[mid]) / 2.0
    }
}

/// A bench row plus the raw per-run wall times behind its median.
#[derive(Debug, Clone, PartialEq)]
pub struct BenchOutcome {
    pub record: BenchRecord,
    pub warmup_ms: Vec<f64>,
    pub timed_ms: Vec<f64>,
}

/// Runs `alg` under the protocol and validates the last output. `probe` is
/// called before every execution. A failing run or an invalid output yields a
/// row with `valid == false`.
pub fn bench_protocol(
    dataset: &str,
    g: &Graph,
    alg: &dyn RstAlgorithm,
    root: usize,
    probe: &mut dyn FnMut(RunKind),
) -> BenchOutcome {
    let record = BenchRecord {
        dataset: dataset.to_string(),
        algorithm: alg.name().to_string(),
        n: g.num_vertices(),
        m: g.num_edges(),
        root,
        median_ms: 0.0,
        steps: 0,
        work: 0,
        tree_depth: 0,
        components: 0,
        valid: false,
    };
    let mut out = BenchOutcome { record, warmup_ms: Vec::new(), timed_ms: Vec::new() };
    let mut last = None;
    let schedule =
        std::iter::repeat_n(RunKind::Warmup, WARMUP_RUNS).chain(std::iter::repeat_n(RunKind::Timed, TIMED_RUNS));
    for kind in schedule {
        probe(kind);
        let Ok((forest, report)) = alg.run(g, root) else {
            return out;
        };
        let ms = report.wall_time.as_secs_f64() * 1e3;
        match kind {
            RunKind::Warmup => out.warmup_ms.push(ms),
            RunKind::Timed => out.timed_ms.push(ms),
        }
        last = Some((forest, report));
    }
    let (forest, report) = last.expect("at least one run");
    let r = &mut out.record;
    r.median_ms = median(&out.timed_ms);
    r.steps = report.steps;
    r.work = report.work;
    r.components = forest.roots.len();
    if let Ok(v) = validate_rooted_forest(g, &forest) {
        r.tree_depth = v.max_depth();
        r.valid = v.ok;
    }
    out
}

pub fn bench_row(
    dataset: &str,
    g: &Graph,
    alg: &dyn RstAlgorithm,
    root: usize,
    probe: &mut dyn FnMut(RunKind),
) -> BenchRecord {
    bench_protocol(dataset, g, alg, root, probe).record
}

pub fn write_csv<W: Write>(records: &[BenchRecord], w: W) -> Result<()> {
    let mut out = csv::Writer::from_writer(w);
    if records.is_empty() {
        out.write_record(CSV_HEADER.split(','))?;
    }
    for r in records {
        out.serialize(r)?;
    }
    out.flush()?;
    Ok(())
}

pub fn read_csv<R: Read>(r: R) -> Result<Vec<BenchRecord>> {
    let mut rdr = csv::Reader::from_reader(r);
    Ok(rdr.deserialize().collect::<std::result::Result<_, _>>()?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algo::{Bfs, CcEuler};
    use crate::graph::{build_csr, generate, GraphKind};

    #[test]
    fn medians() {
        assert_eq!(median(&[5.0, 1.0, 3.0, 2.0, 4.0]), 3.0);
        assert_eq!(median(&[4.0, 1.0]), 2.5);
    }

    #[test]
    fn six_executions_per_row() {
        let g = build_csr(&generate(&GraphKind::Path(64)).unwrap());
        let mut seen = Vec::new();
        let r = bench_row("p", &g, &Bfs::default(), 0, &mut |k| seen.push(k));
        assert_eq!(seen.len(), 6);
        assert_eq!(seen[0], RunKind::Warmup);
        assert!(seen[1..].iter().all(|&k| k == RunKind::Timed));
        assert!(r.valid);
        assert_eq!(r.tree_depth, 63);
    }

    #[test]
    fn bad_root_gives_invalid_row() {
        let g = build_csr(&generate(&GraphKind::Path(4)).unwrap());
        let r = bench_row("p", &g, &CcEuler::default(), 10, &mut |_| {});
        assert!(!r.valid);
    }

    #[test]
    fn csv_header_and_round_trip() {
        let g = build_csr(&generate(&GraphKind::Star(10)).unwrap());
        let rows = vec![bench_row("gen:star:10", &g, &Bfs::default(), 5, &mut |_| {})];
        let mut buf = Vec::new();
        write_csv(&rows, &mut buf).unwrap();
        let text = String::from_utf8(buf.clone()).unwrap();
        assert_eq!(text.lines().next().unwrap(), CSV_HEADER);
        assert_eq!(read_csv(&buf[..]).unwrap(), rows);
        assert_eq!(rows[0].root, 5);

        let mut empty = Vec::new();
        write_csv(&[], &mut empty).unwrap();
        assert_eq!(String::from_utf8(empty).unwrap().trim_end(), CSV_HEADER);
    }
}
