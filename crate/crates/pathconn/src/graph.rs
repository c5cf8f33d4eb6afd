//! Simple undirected graphs with explicit edge sets, and the labeling that
//! ties a complete bipartite graph to the usual `x_i` / `y_j` part notation.
//!
//! Vertices are ids `0..n-1`. A [`BipartiteLabeling`] for `K_{a,b}` maps id
//! `i < a` to `x_{i+1}` and id `a + j` to `y_{j+1}`, so subscripts in part
//! notation are 1-based while ids stay 0-based.

use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};

/// Largest vertex count supported. Adjacency rows are single machine words
/// so every set operation in the oracle stays branch-free.
pub const MAX_VERTICES: usize = 64;

/// An undirected simple graph: a vertex count and a set of unordered edges.
///
/// No self-loops, no duplicate edges, every endpoint `< n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Graph {
    n: usize,
    edges: BTreeSet<(u32, u32)>,
    #[serde(skip)]
    adj: Vec<u64>,
}

impl Graph {
    /// Builds a graph from an edge list. Edges are stored as a set, so
    /// duplicates collapse; `(u, v)` and `(v, u)` denote the same edge.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (u32, u32)>) -> Result<Graph> {
        if n > MAX_VERTICES {
            return Err(Error::TooLarge(format!(
                "{n} vertices (maximum {MAX_VERTICES})"
            )));
        }
        let mut set = BTreeSet::new();
        let mut adj = vec![0u64; n];
        for (u, v) in edges {
            if u == v {
                return Err(Error::invalid(format!("self-loop at vertex {u}")));
            }
            if u as usize >= n || v as usize >= n {
                return Err(Error::invalid(format!(
                    "edge ({u},{v}) has an endpoint outside 0..{n}"
                )));
            }
            set.insert(normalize_edge(u, v));
            adj[u as usize] |= 1 << v;
            adj[v as usize] |= 1 << u;
        }
        Ok(Graph { n, edges: set, adj })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn has_edge(&self, u: u32, v: u32) -> bool {
        u != v && self.edges.contains(&normalize_edge(u, v))
    }

    /// Edges in ascending `(min, max)` order.
    pub fn edges(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.edges.iter().copied()
    }

    /// Neighbor ids of `v` in ascending order.
    pub fn neighbors(&self, v: u32) -> impl Iterator<Item = u32> + '_ {
        let mask = self.adj_mask(v);
        (0..self.n as u32).filter(move |u| mask >> u & 1 == 1)
    }

    /// Neighbors of `v` as a bitmask over vertex ids.
    pub fn adj_mask(&self, v: u32) -> u64 {
        self.adj[v as usize]
    }

    pub fn degree(&self, v: u32) -> usize {
        self.adj_mask(v).count_ones() as usize
    }

    pub fn contains_vertex(&self, v: u32) -> bool {
        (v as usize) < self.n
    }

    /// Parses the graph text format:
    ///
    /// ```text
    /// # comment
    /// 3        <- vertex count
    /// 0 1
    /// 1 2
    /// ```
    ///
    /// Blank lines and `#` comments are ignored. Self-loop lines and lines
    /// repeating an already-present edge (in either orientation) are
    /// rejected, with 1-based line numbers in the error.
    pub fn from_text(text: &str) -> Result<Graph> {
        let mut n: Option<usize> = None;
        let mut seen = BTreeSet::new();
        let mut edges = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = match raw.find('#') {
                Some(pos) => &raw[..pos],
                None => raw,
            }
            .trim();
            if line.is_empty() {
                continue;
            }
            match n {
                None => {
                    n = Some(line.parse().map_err(|_| Error::Parse {
                        line: line_no,
                        message: format!("expected vertex count, found {line:?}"),
                    })?);
                }
                Some(n) => {
                    let mut it = line.split_whitespace();
                    let (u, v) = match (it.next(), it.next(), it.next()) {
                        (Some(u), Some(v), None) => (u, v),
                        _ => {
                            return Err(Error::Parse {
                                line: line_no,
                                message: format!("expected \"u v\", found {line:?}"),
                            })
                        }
                    };
                    let parse = |tok: &str| {
                        tok.parse::<u32>().map_err(|_| Error::Parse {
                            line: line_no,
                            message: format!("invalid vertex id {tok:?}"),
                        })
                    };
                    let (u, v) = (parse(u)?, parse(v)?);
                    if u == v {
                        return Err(Error::Parse {
                            line: line_no,
                            message: format!("self-loop at vertex {u}"),
                        });
                    }
                    if u as usize >= n || v as usize >= n {
                        return Err(Error::Parse {
                            line: line_no,
                            message: format!("vertex id out of range 0..{n}"),
                        });
                    }
                    if !seen.insert(normalize_edge(u, v)) {
                        return Err(Error::Parse {
                            line: line_no,
                            message: format!("duplicate edge {u} {v}"),
                        });
                    }
                    edges.push((u, v));
                }
            }
        }
        match n {
            Some(n) => Graph::new(n, edges),
            None => Err(Error::Parse {
                line: text.lines().count().max(1),
                message: "missing vertex count line".into(),
            }),
        }
    }

    /// Renders the graph in the text format accepted by [`Graph::from_text`].
    pub fn to_text(&self) -> String {
        let mut out = format!("{}\n", self.n);
        for (u, v) in &self.edges {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }
}

fn normalize_edge(u: u32, v: u32) -> (u32, u32) {
    if u <= v {
        (u, v)
    } else {
        (v, u)
    }
}

/// The complete graph `K_n`.
pub fn make_complete(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(Error::invalid("complete graph needs at least one vertex"));
    }
    let edges = (0..n as u32).flat_map(|u| (u + 1..n as u32).map(move |v| (u, v)));
    Graph::new(n, edges)
}

/// The complete bipartite graph `K_{a,b}` together with its part labeling.
///
/// Ids `0..a` form part X, ids `a..a+b` form part Y; every cross pair is an
/// edge and there are no intra-part edges.
pub fn make_complete_bipartite(a: usize, b: usize) -> Result<(Graph, BipartiteLabeling)> {
    let labeling = BipartiteLabeling::new(a, b)?;
    let edges = (0..a as u32).flat_map(|u| (0..b as u32).map(move |j| (u, a as u32 + j)));
    let graph = Graph::new(a + b, edges)?;
    Ok((graph, labeling))
}

/// Which part of the bipartition a vertex belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Part {
    X,
    Y,
}

/// The `(a, b)` shape of a complete bipartite graph plus the bijection
/// between vertex ids and the `x_1..x_a` / `y_1..y_b` names.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct BipartiteLabeling {
    a: usize,
    b: usize,
}

impl BipartiteLabeling {
    pub fn new(a: usize, b: usize) -> Result<BipartiteLabeling> {
        if a == 0 || b == 0 {
            return Err(Error::invalid("both parts must be nonempty"));
        }
        if a + b > MAX_VERTICES {
            return Err(Error::TooLarge(format!(
                "{} vertices (maximum {MAX_VERTICES})",
                a + b
            )));
        }
        Ok(BipartiteLabeling { a, b })
    }

    pub fn a(&self) -> usize {
        self.a
    }

    pub fn b(&self) -> usize {
        self.b
    }

    pub fn n(&self) -> usize {
        self.a + self.b
    }

    /// Id of `x_i` (1-based subscript).
    pub fn x(&self, i: usize) -> u32 {
        assert!(1 <= i && i <= self.a, "x_{i} out of range");
        (i - 1) as u32
    }

    /// Id of `y_j` (1-based subscript).
    pub fn y(&self, j: usize) -> u32 {
        assert!(1 <= j && j <= self.b, "y_{j} out of range");
        (self.a + j - 1) as u32
    }

    pub fn part(&self, id: u32) -> Part {
        assert!((id as usize) < self.n(), "vertex {id} out of range");
        if (id as usize) < self.a {
            Part::X
        } else {
            Part::Y
        }
    }

    /// All ids of part X in ascending order.
    pub fn xs(&self) -> Vec<u32> {
        (0..self.a as u32).collect()
    }

    /// All ids of part Y in ascending order.
    pub fn ys(&self) -> Vec<u32> {
        (self.a as u32..self.n() as u32).collect()
    }

    /// Part-notation label of a vertex, e.g. `x1` or `y3`.
    pub fn label(&self, id: u32) -> String {
        match self.part(id) {
            Part::X => format!("x{}", id + 1),
            Part::Y => format!("y{}", id as usize - self.a + 1),
        }
    }

    /// Parses `x3` / `y1` (or a raw id) back to a vertex id.
    pub fn parse_label(&self, label: &str) -> Result<u32> {
        let label = label.trim();
        let bad = || Error::invalid(format!("unknown vertex label {label:?}"));
        if let Some(sub) = label.strip_prefix(['x', 'X']) {
            let i: usize = sub.parse().map_err(|_| bad())?;
            if i < 1 || i > self.a {
                return Err(Error::invalid(format!(
                    "x{i} out of range: part X has {} vertices",
                    self.a
                )));
            }
            return Ok(self.x(i));
        }
        if let Some(sub) = label.strip_prefix(['y', 'Y']) {
            let j: usize = sub.parse().map_err(|_| bad())?;
            if j < 1 || j > self.b {
                return Err(Error::invalid(format!(
                    "y{j} out of range: part Y has {} vertices",
                    self.b
                )));
            }
            return Ok(self.y(j));
        }
        let id: u32 = label.parse().map_err(|_| bad())?;
        if id as usize >= self.n() {
            return Err(Error::invalid(format!("vertex id {id} out of range")));
        }
        Ok(id)
    }

    /// Parses a comma-separated list of labels into a vertex set.
    pub fn parse_set(&self, list: &str) -> Result<BTreeSet<u32>> {
        let mut out = BTreeSet::new();
        for tok in list.split(',') {
            let id = self.parse_label(tok)?;
            if !out.insert(id) {
                return Err(Error::invalid(format!(
                    "vertex {} listed twice",
                    self.label(id)
                )));
            }
        }
        Ok(out)
    }

    /// True iff `g` is exactly the `K_{a,b}` this labeling describes:
    /// all `a * b` cross edges and nothing else.
    pub fn describes(&self, g: &Graph) -> bool {
        g.n() == self.n()
            && g.edge_count() == self.a * self.b
            && g.edges().all(|(u, v)| self.part(u) != self.part(v))
    }
}

impl fmt::Display for BipartiteLabeling {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "K_{{{},{}}}", self.a, self.b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complete_bipartite_sizes() {
        let (g, _) = make_complete_bipartite(1, 1).unwrap();
        assert_eq!((g.n(), g.edge_count()), (2, 1));
        let (g, _) = make_complete_bipartite(3, 3).unwrap();
        assert_eq!((g.n(), g.edge_count()), (6, 9));
        let (g, _) = make_complete_bipartite(2, 5).unwrap();
        assert_eq!((g.n(), g.edge_count()), (7, 10));
    }

    #[test]
    fn complete_sizes() {
        assert_eq!(make_complete(4).unwrap().edge_count(), 6);
        assert_eq!(make_complete(1).unwrap().edge_count(), 0);
        assert_eq!(make_complete(7).unwrap().edge_count(), 21);
    }

    #[test]
    fn zero_sizes_rejected() {
        assert!(matches!(
            make_complete_bipartite(0, 3),
            Err(Error::InvalidArgument(_))
        ));
        assert!(matches!(
            make_complete_bipartite(3, 0),
            Err(Error::InvalidArgument(_))
        ));
        assert!(matches!(make_complete(0), Err(Error::InvalidArgument(_))));
    }

    #[test]
    fn bipartite_degrees() {
        for (a, b) in [(1usize, 1usize), (2, 3), (4, 4), (3, 7)] {
            let (g, lab) = make_complete_bipartite(a, b).unwrap();
            for x in lab.xs() {
                assert_eq!(g.degree(x), b);
            }
            for y in lab.ys() {
                assert_eq!(g.degree(y), a);
            }
            assert!(lab.describes(&g));
        }
    }

    #[test]
    fn labeling_round_trip() {
        let lab = BipartiteLabeling::new(3, 5).unwrap();
        assert_eq!(lab.label(0), "x1");
        assert_eq!(lab.label(2), "x3");
        assert_eq!(lab.label(3), "y1");
        assert_eq!(lab.label(7), "y5");
        for id in 0..8 {
            assert_eq!(lab.parse_label(&lab.label(id)).unwrap(), id);
        }
        assert_eq!(lab.parse_label("6").unwrap(), 6);
        assert!(lab.parse_label("x4").is_err());
        assert!(lab.parse_label("y6").is_err());
        assert!(lab.parse_label("z1").is_err());
        let s = lab.parse_set("x1,y1,y2").unwrap();
        assert_eq!(s.into_iter().collect::<Vec<_>>(), vec![0, 3, 4]);
        assert!(lab.parse_set("x1,x1").is_err());
    }

    #[test]
    fn describes_rejects_wrong_graphs() {
        let lab = BipartiteLabeling::new(2, 2).unwrap();
        let (g, _) = make_complete_bipartite(2, 2).unwrap();
        assert!(lab.describes(&g));
        let missing = Graph::new(4, [(0, 2), (0, 3), (1, 2)]).unwrap();
        assert!(!lab.describes(&missing));
        let intra = Graph::new(4, [(0, 2), (0, 3), (1, 2), (0, 1)]).unwrap();
        assert!(!lab.describes(&intra));
    }

    #[test]
    fn text_format_round_trip() {
        let text = "# path on three vertices\n3\n0 1\n1 2\n";
        let g = Graph::from_text(text).unwrap();
        assert_eq!(g.n(), 3);
        assert_eq!(g.edge_count(), 2);
        assert!(g.has_edge(0, 1) && g.has_edge(1, 2) && !g.has_edge(0, 2));
        let again = Graph::from_text(&g.to_text()).unwrap();
        assert_eq!(again, g);
    }

    #[test]
    fn text_format_errors_carry_line_numbers() {
        let dup = Graph::from_text("3\n0 1\n1 0\n");
        assert_eq!(
            dup,
            Err(Error::Parse {
                line: 3,
                message: "duplicate edge 1 0".into()
            })
        );
        assert!(matches!(
            Graph::from_text("3\n2 2\n"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(matches!(
            Graph::from_text("2\n0 5\n"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(matches!(
            Graph::from_text("# nothing\n"),
            Err(Error::Parse { .. })
        ));
        assert!(matches!(
            Graph::from_text("3\n0 1 2\n"),
            Err(Error::Parse { line: 2, .. })
        ));
    }

    #[test]
    fn duplicate_edges_collapse_in_constructor() {
        let g = Graph::new(3, [(0, 1), (1, 0), (1, 2)]).unwrap();
        assert_eq!(g.edge_count(), 2);
    }

    #[test]
    fn neighbors_ascending() {
        let g = Graph::new(4, [(2, 0), (2, 3), (2, 1)]).unwrap();
        assert_eq!(g.neighbors(2).collect::<Vec<_>>(), vec![0, 1, 3]);
    }
}
