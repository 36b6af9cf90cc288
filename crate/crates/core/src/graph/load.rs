use std::io::BufRead;

use super::EdgeList;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy)]
pub struct LoadOptions {
    /// Remap external ids onto `0..k` by sorted order. When disabled, the vertex
    /// count is one more than the largest id seen.
    pub remap: bool,
}

impl Default for LoadOptions {
    fn default() -> Self {
        Self { remap: true }
    }
}

pub fn load_edge_list<R: BufRead>(reader: R) -> Result<EdgeList> {
    load_edge_list_with(reader, LoadOptions::default())
}

/// Reads whitespace-separated `u v` pairs. Lines starting with `#` or `%` are
/// comments; after a `%%` banner, a three-token first data line is treated as a
/// Matrix Market size header and skipped.
pub fn load_edge_list_with<R: BufRead>(reader: R, opts: LoadOptions) -> Result<EdgeList> {
    let mut raw: Vec<(u64, u64)> = Vec::new();
    let mut banner = false;
    let mut first_data = true;

    for (idx, line) in reader.lines().enumerate() {
        let line = line?;
        let lineno = idx + 1;
        let trimmed = line.trim();
        if trimmed.is_empty() {
            continue;
        }
        if trimmed.starts_with("%%") {
            banner = true;
            continue;
        }
        if trimmed.starts_with('#') || trimmed.starts_with('%') {
            continue;
        }
        let tokens: Vec<&str> = trimmed.split_whitespace().collect();
        let is_first = std::mem::replace(&mut first_data, false);
        if is_first && banner && tokens.len() == 3 {
            continue;
        }
        if tokens.len() != 2 {
            return Err(Error::Parse {
                line: lineno,
                message: format!("expected 2 tokens, found {}", tokens.len()),
            });
        }
        let parse = |t: &str| {
            t.parse::<u64>()
                .map_err(|_| Error::Parse { line: lineno, message: format!("`{t}` is not a vertex id") })
        };
        raw.push((parse(tokens[0])?, parse(tokens[1])?));
    }

    if raw.is_empty() {
        return Err(Error::EmptyInput);
    }

    let mut ids: Vec<u64> = raw.iter().flat_map(|&(u, v)| [u, v]).collect();
    ids.sort_unstable();
    ids.dedup();
    let max_id = *ids.last().expect("nonempty");

    if !opts.remap || max_id + 1 == ids.len() as u64 {
        let n = usize::try_from(max_id + 1).map_err(|_| Error::TooLarge(usize::MAX))?;
        let edges = raw.into_iter().map(|(u, v)| (u as usize, v as usize));
        return EdgeList::new(n, edges);
    }

    let index = |x: u64| ids.binary_search(&x).expect("id collected above");
    let edges: Vec<(usize, usize)> = raw.iter().map(|&(u, v)| (index(u), index(v))).collect();
    Ok(EdgeList::new(ids.len(), edges)?.with_original_ids(Some(ids)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn load(text: &str) -> Result<EdgeList> {
        load_edge_list(text.as_bytes())
    }

    #[test]
    fn plain_pairs() {
        let el = load("0 1\n1 2\n").unwrap();
        assert_eq!(el.num_vertices(), 3);
        assert_eq!(el.edges(), &[(0, 1), (1, 2)]);
        assert!(el.original_ids().is_none());
    }

    #[test]
    fn comments_loops_duplicates() {
        let el = load("# c\n0 0\n0 1\n1 0\n").unwrap();
        assert_eq!(el.num_vertices(), 2);
        assert_eq!(el.edges(), &[(0, 1)]);
    }

    #[test]
    fn sparse_ids_remapped() {
        // sorted unique ids [3, 7] -> positions [0, 1]
        let el = load("3 7\n").unwrap();
        assert_eq!(el.num_vertices(), 2);
        assert_eq!(el.edges(), &[(0, 1)]);
        assert_eq!(el.original_ids(), Some(&[3u64, 7][..]));

        let el = load_edge_list_with("3 7\n".as_bytes(), LoadOptions { remap: false }).unwrap();
        assert_eq!(el.num_vertices(), 8);
    }

    #[test]
    fn matrix_market_header() {
        let el = load("%%MatrixMarket matrix coordinate pattern symmetric\n% x\n3 3 2\n1 2\n2 3\n").unwrap();
        assert_eq!(el.num_vertices(), 3);
        assert_eq!(el.edges(), &[(0, 1), (1, 2)]);
        assert_eq!(el.original_ids(), Some(&[1u64, 2, 3][..]));
        // without a banner the 3-token line is an error
        assert!(matches!(load("3 3 2\n1 2\n"), Err(Error::Parse { line: 1, .. })));
    }

    #[test]
    fn errors_carry_line_numbers() {
        assert!(matches!(load("0 1\n1 x\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(load("0 1\n\n# c\n4\n"), Err(Error::Parse { line: 4, .. })));
        assert!(matches!(load(""), Err(Error::EmptyInput)));
        assert!(matches!(load("# only comments\n"), Err(Error::EmptyInput)));
    }
}
