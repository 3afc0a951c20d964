//! Text formats: edge lists, DIMACS-style graphs, weight files, and report
//! emission as JSON or CSV.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::Path;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::dp::{Certificate, DpSolution, DpStats};
use crate::error::{Error, Result};
use crate::graph::{EdgeWeights, Graph, VertexWeights, WeightMap};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    #[default]
    Edgelist,
    Dimacs,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "edgelist" => Ok(Format::Edgelist),
            "dimacs" => Ok(Format::Dimacs),
            other => Err(Error::InvalidArgument(format!("unknown graph format {other:?}"))),
        }
    }
}

fn parse_err<T>(line: usize, msg: impl Into<String>) -> Result<T> {
    Err(Error::Parse { line, msg: msg.into() })
}

fn fields<const N: usize>(line: usize, text: &str) -> Result<[u64; N]> {
    let parts: Vec<&str> = text.split_whitespace().collect();
    if parts.len() != N {
        return parse_err(line, format!("expected {N} fields, found {}", parts.len()));
    }
    let mut out = [0u64; N];
    for (slot, p) in out.iter_mut().zip(&parts) {
        *slot = p.parse().or_else(|_| parse_err(line, format!("{p:?} is not a non-negative integer")))?;
    }
    Ok(out)
}

/// Collects edges, rejecting loops, duplicates and out-of-range ids with the
/// offending line number.
struct EdgeSink {
    n: usize,
    edges: Vec<(usize, usize)>,
    seen: std::collections::HashSet<(usize, usize)>,
}

impl EdgeSink {
    fn new(n: usize) -> Self {
        EdgeSink { n, edges: Vec::new(), seen: Default::default() }
    }

    fn push(&mut self, line: usize, u: u64, v: u64) -> Result<()> {
        let (u, v) = (u as usize, v as usize);
        if u >= self.n || v >= self.n {
            return parse_err(line, format!("edge {u} {v} out of range for {} vertices", self.n));
        }
        if u == v {
            return parse_err(line, format!("self-loop at {u}"));
        }
        if !self.seen.insert((u.min(v), u.max(v))) {
            return parse_err(line, format!("duplicate edge {u} {v}"));
        }
        self.edges.push((u, v));
        Ok(())
    }

    fn finish(self, declared_m: u64, line: usize) -> Result<Graph> {
        if self.edges.len() as u64 != declared_m {
            return parse_err(line, format!("header declares {declared_m} edges, found {}", self.edges.len()));
        }
        Graph::from_edges(self.n, &self.edges)
    }
}

/// `n m` header, then one `u v` pair per line. Blank lines are ignored.
pub fn parse_edgelist(text: &str) -> Result<Graph> {
    let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l.trim())).filter(|(_, l)| !l.is_empty());
    let Some((hl, header)) = lines.next() else {
        return parse_err(1, "missing \"n m\" header");
    };
    let [n, m] = fields::<2>(hl, header)?;
    let mut sink = EdgeSink::new(n as usize);
    let mut last = hl;
    for (i, l) in lines {
        let [u, v] = fields::<2>(i, l)?;
        sink.push(i, u, v)?;
        last = i;
    }
    sink.finish(m, last)
}

pub fn write_edgelist(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.m());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

/// `c` comment lines, a `p edge n m` header, and 1-indexed `e u v` lines.
pub fn parse_dimacs(text: &str) -> Result<Graph> {
    let mut sink: Option<(EdgeSink, u64)> = None;
    let mut last = 0;
    for (i, raw) in text.lines().enumerate() {
        let (i, l) = (i + 1, raw.trim());
        last = i;
        if l.is_empty() || l.starts_with('c') {
            continue;
        }
        let mut parts = l.split_whitespace();
        match (parts.next(), &mut sink) {
            (Some("p"), None) => {
                let kind = parts.next();
                if !matches!(kind, Some("edge" | "col")) {
                    return parse_err(i, "expected \"p edge n m\"");
                }
                let [n, m] = fields::<2>(i, &parts.collect::<Vec<_>>().join(" "))?;
                sink = Some((EdgeSink::new(n as usize), m));
            }
            (Some("p"), Some(_)) => return parse_err(i, "second problem line"),
            (Some("e"), Some((s, _))) => {
                let [u, v] = fields::<2>(i, &parts.collect::<Vec<_>>().join(" "))?;
                if u == 0 || v == 0 {
                    return parse_err(i, "vertex ids are 1-indexed");
                }
                s.push(i, u - 1, v - 1)?;
            }
            (Some("e"), None) => return parse_err(i, "edge before problem line"),
            (Some(tok), _) => return parse_err(i, format!("unknown line type {tok:?}")),
            (None, _) => unreachable!("blank lines skipped"),
        }
    }
    match sink {
        Some((s, m)) => s.finish(m, last),
        None => parse_err(last.max(1), "missing problem line"),
    }
}

pub fn write_dimacs(g: &Graph) -> String {
    let mut out = format!("p edge {} {}\n", g.n(), g.m());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "e {} {}", u + 1, v + 1);
    }
    out
}

pub fn parse_graph_str(text: &str, format: Format) -> Result<Graph> {
    match format {
        Format::Edgelist => parse_edgelist(text),
        Format::Dimacs => parse_dimacs(text),
    }
}

pub fn parse_graph(path: &Path, format: Format) -> Result<Graph> {
    parse_graph_str(&std::fs::read_to_string(path)?, format)
}

/// `id value` lines give vertex weights (unlisted vertices weigh 1);
/// `u v value` lines give edge weights. Mixing the two is an error.
pub fn parse_weights(text: &str, g: &Graph) -> Result<WeightMap> {
    let mut vertex: Option<Vec<u64>> = None;
    let mut edge: Option<BTreeMap<(usize, usize), u64>> = None;
    for (i, raw) in text.lines().enumerate() {
        let (i, l) = (i + 1, raw.trim());
        if l.is_empty() || l.starts_with('#') {
            continue;
        }
        match l.split_whitespace().count() {
            2 if edge.is_none() => {
                let [v, w] = fields::<2>(i, l)?;
                let v = v as usize;
                if v >= g.n() {
                    return parse_err(i, format!("vertex {v} out of range"));
                }
                vertex.get_or_insert_with(|| vec![1; g.n()])[v] = w;
            }
            3 if vertex.is_none() => {
                let [u, v, w] = fields::<3>(i, l)?;
                let (u, v) = (u as usize, v as usize);
                if u >= g.n() || v >= g.n() || !g.has_edge(u, v) {
                    return parse_err(i, format!("{u} {v} is not an edge"));
                }
                edge.get_or_insert_with(BTreeMap::new).insert((u.min(v), u.max(v)), w);
            }
            2 | 3 => return parse_err(i, "vertex and edge weights mixed in one file"),
            k => return parse_err(i, format!("expected 2 or 3 fields, found {k}")),
        }
    }
    Ok(match (vertex, edge) {
        (_, Some(e)) => WeightMap::Edge(EdgeWeights(e)),
        (Some(v), None) => WeightMap::Vertex(VertexWeights(v)),
        (None, None) => WeightMap::Vertex(VertexWeights::unit(g.n())),
    })
}

pub fn write_vertex_weights(w: &VertexWeights) -> String {
    w.0.iter().enumerate().map(|(v, x)| format!("{v} {x}\n")).collect()
}

/// Solver output as `{problem, value, certificate, stats}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolutionDocument {
    pub problem: String,
    pub value: u64,
    pub certificate: Certificate,
    pub stats: DpStats,
}

impl SolutionDocument {
    pub fn new(problem: impl Into<String>, sol: &DpSolution) -> Self {
        SolutionDocument { problem: problem.into(), value: sol.value, certificate: sol.certificate.clone(), stats: sol.stats }
    }
}

/// Pretty JSON terminated by a newline.
pub fn to_json<T: Serialize + ?Sized>(value: &T) -> Result<String> {
    let mut s = serde_json::to_string_pretty(value)?;
    s.push('\n');
    Ok(s)
}

/// A row of a CSV report.
pub trait CsvRow {
    fn header() -> &'static [&'static str];
    fn cells(&self) -> Vec<String>;
}

fn csv_cell(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

pub fn to_csv<R: CsvRow>(rows: &[R]) -> String {
    let mut out = R::header().join(",");
    out.push('\n');
    for r in rows {
        let cells: Vec<String> = r.cells().iter().map(|c| csv_cell(c)).collect();
        out.push_str(&cells.join(","));
        out.push('\n');
    }
    out
}

/// Writes `records` as JSON or CSV.
pub fn write_report<R: CsvRow + Serialize>(path: &Path, records: &[R], json: bool) -> Result<()> {
    let body = if json { to_json(records)? } else { to_csv(records) };
    std::fs::write(path, body)?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::GraphSpec;

    #[test]
    fn edgelist_examples() {
        let g = parse_edgelist("3 2\n0 1\n1 2").unwrap();
        assert_eq!(g, GraphSpec::Path(3).build());
        assert_eq!(parse_edgelist("0 0\n").unwrap(), Graph::empty(0));
        let err = parse_edgelist("3 2\n0 1\n1 0\n").unwrap_err();
        assert_eq!(err, Error::Parse { line: 3, msg: "duplicate edge 1 0".into() });
    }

    #[test]
    fn edgelist_errors_name_lines() {
        let line = |t: &str| match parse_edgelist(t) {
            Err(Error::Parse { line, .. }) => line,
            other => panic!("{other:?}"),
        };
        assert_eq!(line(""), 1);
        assert_eq!(line("3 1\n0 x\n"), 2);
        assert_eq!(line("3 2\n0 1\n1 2 3\n"), 3);
        assert_eq!(line("3 1\n0 3\n"), 2);
        assert_eq!(line("3 1\n1 1\n"), 2);
        assert_eq!(line("3 2\n0 1\n"), 2);
    }

    #[test]
    fn edgelist_round_trip() {
        for g in [GraphSpec::Petersen.build(), GraphSpec::Grid { rows: 3, cols: 4 }.build(), Graph::empty(4)] {
            assert_eq!(parse_edgelist(&write_edgelist(&g)).unwrap(), g);
            assert_eq!(parse_dimacs(&write_dimacs(&g)).unwrap(), g);
        }
    }

    #[test]
    fn dimacs_examples() {
        let g = parse_dimacs("c triangle\np edge 3 3\ne 1 2\ne 2 3\ne 1 3\n").unwrap();
        assert_eq!(g, GraphSpec::Complete(3).build());
        assert!(matches!(parse_dimacs("e 1 2\n"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(parse_dimacs("p edge 2 1\ne 0 1\n"), Err(Error::Parse { line: 2, .. })));
    }

    #[test]
    fn weight_files() {
        let g = GraphSpec::Path(3).build();
        assert_eq!(parse_weights("1 5\n", &g).unwrap(), WeightMap::Vertex(VertexWeights(vec![1, 5, 1])));
        let WeightMap::Edge(e) = parse_weights("1 0 4\n", &g).unwrap() else { panic!() };
        assert_eq!((e.get(0, 1), e.get(1, 2)), (4, 1));
        assert!(matches!(parse_weights("0 1\n0 1 2\n", &g), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_weights("0 2 1\n", &g), Err(Error::Parse { line: 1, .. })));
        let w = VertexWeights(vec![3, 0, 7]);
        assert_eq!(parse_weights(&write_vertex_weights(&w), &g).unwrap(), WeightMap::Vertex(w));
    }

    struct Row(&'static str, u64);

    impl CsvRow for Row {
        fn header() -> &'static [&'static str] {
            &["name", "value"]
        }
        fn cells(&self) -> Vec<String> {
            vec![self.0.to_string(), self.1.to_string()]
        }
    }

    #[test]
    fn csv_quotes_cells() {
        assert_eq!(to_csv(&[Row("a,b", 1), Row("c", 2)]), "name,value\n\"a,b\",1\nc,2\n");
    }

    #[derive(Serialize)]
    struct Rec {
        name: &'static str,
        value: u64,
    }

    impl CsvRow for Rec {
        fn header() -> &'static [&'static str] {
            &["name", "value"]
        }
        fn cells(&self) -> Vec<String> {
            vec![self.name.to_string(), self.value.to_string()]
        }
    }

    #[test]
    fn files_round_trip() {
        let dir = tempfile::tempdir().unwrap();
        let g = GraphSpec::Grid { rows: 2, cols: 3 }.build();
        let path = dir.path().join("g.col");
        std::fs::write(&path, write_dimacs(&g)).unwrap();
        assert_eq!(parse_graph(&path, Format::Dimacs).unwrap(), g);
        assert!(matches!(parse_graph(&dir.path().join("missing"), Format::Edgelist), Err(Error::Io(_))));
        let rows = [Rec { name: "a", value: 1 }];
        let csv = dir.path().join("r.csv");
        write_report(&csv, &rows, false).unwrap();
        assert_eq!(std::fs::read_to_string(&csv).unwrap(), "name,value\na,1\n");
        let json = dir.path().join("r.json");
        write_report(&json, &rows, true).unwrap();
        let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&json).unwrap()).unwrap();
        assert_eq!(v[0]["value"], 1);
    }
}
