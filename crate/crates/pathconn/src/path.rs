//! Paths, S-path families, and the validators that make the definitions
//! executable.
//!
//! For a vertex set `S` with `|S| >= 2`, an *S-path* is a simple path whose
//! vertex set contains `S`. Two S-paths are *internally disjoint* when they
//! share no edge and their vertex sets intersect exactly in `S`. The
//! validators here check those two clauses literally, pair by pair.

use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// An ordered sequence of distinct vertices. Stored in canonical
/// orientation: a path equals its reverse, and the stored direction is the
/// one whose first vertex id is the smaller endpoint.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct Path {
    vertices: Vec<u32>,
}

impl Path {
    /// Builds a path from a vertex sequence, canonicalizing orientation.
    /// Fails on an empty sequence or a repeated vertex.
    pub fn new(vertices: impl Into<Vec<u32>>) -> Result<Path> {
        let mut vertices = vertices.into();
        if vertices.is_empty() {
            return Err(Error::invalid("a path needs at least one vertex"));
        }
        let distinct: BTreeSet<u32> = vertices.iter().copied().collect();
        if distinct.len() != vertices.len() {
            return Err(Error::invalid("path repeats a vertex"));
        }
        if vertices.first() > vertices.last() {
            vertices.reverse();
        }
        Ok(Path { vertices })
    }

    pub fn vertices(&self) -> &[u32] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        false // a path always has at least one vertex
    }

    pub fn contains(&self, v: u32) -> bool {
        self.vertices.contains(&v)
    }

    pub fn vertex_set(&self) -> BTreeSet<u32> {
        self.vertices.iter().copied().collect()
    }

    /// Consecutive pairs, each normalized to `(min, max)`.
    pub fn edges(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.vertices
            .windows(2)
            .map(|w| if w[0] <= w[1] { (w[0], w[1]) } else { (w[1], w[0]) })
    }

    /// True iff every consecutive pair is an edge of `g` and every vertex
    /// exists in `g`. Single-vertex paths are trivially paths.
    pub fn is_path_in(&self, g: &Graph) -> bool {
        self.vertices.iter().all(|&v| g.contains_vertex(v))
            && self.edges().all(|(u, v)| g.has_edge(u, v))
    }
}

impl fmt::Display for Path {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.vertices.iter().enumerate() {
            if i > 0 {
                write!(f, "-")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

/// Decides whether `p` is an S-path of `g` for the set `s`: a simple path in
/// `g` whose vertices contain every element of `s`.
///
/// A non-edge step makes the answer `false`; an out-of-range id in `s` or
/// `p` is an error.
pub fn is_s_path(g: &Graph, s: &BTreeSet<u32>, p: &Path) -> Result<bool> {
    check_s(g, s)?;
    if let Some(&v) = p.vertices().iter().find(|&&v| !g.contains_vertex(v)) {
        return Err(Error::invalid(format!("path vertex {v} out of range")));
    }
    Ok(p.is_path_in(g) && s.iter().all(|&v| p.contains(v)))
}

fn check_s(g: &Graph, s: &BTreeSet<u32>) -> Result<()> {
    if s.len() < 2 {
        return Err(Error::invalid("S needs at least two vertices"));
    }
    if let Some(&v) = s.iter().find(|&&v| !g.contains_vertex(v)) {
        return Err(Error::invalid(format!("S contains out-of-range id {v}")));
    }
    Ok(())
}

/// A target set `S` plus paths claimed pairwise internally disjoint.
///
/// Plain data; validity is established by [`validate_family`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SPathFamily {
    pub s: BTreeSet<u32>,
    pub paths: Vec<Path>,
}

impl SPathFamily {
    pub fn new(s: BTreeSet<u32>, paths: Vec<Path>) -> SPathFamily {
        SPathFamily { s, paths }
    }

    pub fn len(&self) -> usize {
        self.paths.len()
    }

    pub fn is_empty(&self) -> bool {
        self.paths.is_empty()
    }
}

/// One defect found by [`validate_family`]. Pair violations name both paths
/// (0-based indices) and the clause that failed.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum Violation {
    /// `|S| < 2`.
    SetTooSmall { size: usize },
    /// Path `index` is not a simple path of the graph.
    NotAPath { index: usize, reason: String },
    /// Path `index` misses a vertex of `S`.
    MissesS { index: usize, missing: Vec<u32> },
    /// Paths `first` and `second` share edges (edge clause).
    SharedEdges {
        first: usize,
        second: usize,
        edges: Vec<(u32, u32)>,
    },
    /// Paths `first` and `second` share vertices outside `S` (vertex clause).
    SharedVerticesOutsideS {
        first: usize,
        second: usize,
        vertices: Vec<u32>,
    },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::SetTooSmall { size } => {
                write!(f, "S has {size} vertices, need at least 2")
            }
            Violation::NotAPath { index, reason } => {
                write!(f, "path #{index} is not a path: {reason}")
            }
            Violation::MissesS { index, missing } => {
                write!(f, "path #{index} misses S vertices {missing:?}")
            }
            Violation::SharedEdges {
                first,
                second,
                edges,
            } => write!(f, "paths #{first} and #{second} share edges {edges:?}"),
            Violation::SharedVerticesOutsideS {
                first,
                second,
                vertices,
            } => write!(
                f,
                "paths #{first} and #{second} meet outside S at {vertices:?}"
            ),
        }
    }
}

/// Outcome of validating a family: empty means the family is a set of
/// pairwise internally disjoint S-paths.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_ok() {
            return write!(f, "ok");
        }
        for (i, v) in self.violations.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

/// Checks every path and every pair of paths in `fam` against the S-path and
/// internal-disjointness definitions, reporting all violations rather than
/// stopping at the first.
///
/// `fam.s` must be a subset of the graph's vertices; that is a precondition,
/// not a reported violation.
pub fn validate_family(g: &Graph, fam: &SPathFamily) -> Result<ValidationReport> {
    if let Some(&v) = fam.s.iter().find(|&&v| !g.contains_vertex(v)) {
        return Err(Error::invalid(format!("S contains out-of-range id {v}")));
    }
    let mut violations = Vec::new();
    if fam.s.len() < 2 {
        violations.push(Violation::SetTooSmall { size: fam.s.len() });
    }

    for (i, p) in fam.paths.iter().enumerate() {
        if let Some(&v) = p.vertices().iter().find(|&&v| !g.contains_vertex(v)) {
            violations.push(Violation::NotAPath {
                index: i,
                reason: format!("vertex {v} out of range"),
            });
            continue;
        }
        let bad_steps: Vec<_> = p.edges().filter(|&(u, v)| !g.has_edge(u, v)).collect();
        if !bad_steps.is_empty() {
            violations.push(Violation::NotAPath {
                index: i,
                reason: format!("non-edge steps {bad_steps:?}"),
            });
        }
        let missing: Vec<u32> = fam.s.iter().copied().filter(|&v| !p.contains(v)).collect();
        if !missing.is_empty() {
            violations.push(Violation::MissesS { index: i, missing });
        }
    }

    for i in 0..fam.paths.len() {
        for j in i + 1..fam.paths.len() {
            let (p, q) = (&fam.paths[i], &fam.paths[j]);
            let p_edges: BTreeSet<_> = p.edges().collect();
            let shared_edges: Vec<_> = q.edges().filter(|e| p_edges.contains(e)).collect();
            if !shared_edges.is_empty() {
                violations.push(Violation::SharedEdges {
                    first: i,
                    second: j,
                    edges: shared_edges,
                });
            }
            let p_verts = p.vertex_set();
            let outside: Vec<u32> = q
                .vertices()
                .iter()
                .copied()
                .filter(|v| p_verts.contains(v) && !fam.s.contains(v))
                .collect();
            if !outside.is_empty() {
                violations.push(Violation::SharedVerticesOutsideS {
                    first: i,
                    second: j,
                    vertices: outside,
                });
            }
        }
    }

    Ok(ValidationReport { violations })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::make_complete_bipartite;

    fn set(ids: &[u32]) -> BTreeSet<u32> {
        ids.iter().copied().collect()
    }

    #[test]
    fn canonical_orientation() {
        let p = Path::new(vec![3, 1, 0]).unwrap();
        assert_eq!(p.vertices(), &[0, 1, 3]);
        let q = Path::new(vec![0, 1, 3]).unwrap();
        assert_eq!(p, q);
    }

    #[test]
    fn rejects_duplicates_and_empty() {
        assert!(Path::new(vec![0, 1, 0]).is_err());
        assert!(Path::new(Vec::new()).is_err());
    }

    #[test]
    fn s_path_examples_in_k33() {
        let (g, lab) = make_complete_bipartite(3, 3).unwrap();
        let (x, y) = (|i| lab.x(i), |j| lab.y(j));

        let p = Path::new(vec![x(1), y(1)]).unwrap();
        assert!(is_s_path(&g, &set(&[x(1), y(1)]), &p).unwrap());

        // x2 y2 x1 y1 x3 contains {x1,x2,x3,y1} and only uses cross edges.
        let p = Path::new(vec![x(2), y(2), x(1), y(1), x(3)]).unwrap();
        assert!(is_s_path(&g, &set(&[x(1), x(2), x(3), y(1)]), &p).unwrap());

        // x1 x2 is not an edge of a bipartite graph.
        let p = Path::new(vec![x(1), x(2)]).unwrap();
        assert!(!is_s_path(&g, &set(&[x(1), x(2)]), &p).unwrap());
    }

    #[test]
    fn s_path_argument_errors() {
        let (g, _) = make_complete_bipartite(2, 2).unwrap();
        let p = Path::new(vec![0, 2]).unwrap();
        assert!(is_s_path(&g, &set(&[0]), &p).is_err());
        assert!(is_s_path(&g, &set(&[0, 9]), &p).is_err());
        let bad = Path::new(vec![0, 9]).unwrap();
        assert!(is_s_path(&g, &set(&[0, 2]), &bad).is_err());
    }

    #[test]
    fn family_repeating_a_path_shares_edges() {
        let (g, lab) = make_complete_bipartite(2, 2).unwrap();
        let p = Path::new(vec![lab.y(1), lab.x(1), lab.y(2), lab.x(2)]).unwrap();
        let fam = SPathFamily::new(set(&[lab.x(1), lab.x(2), lab.y(1), lab.y(2)]), vec![p.clone(), p]);
        let report = validate_family(&g, &fam).unwrap();
        assert!(!report.is_ok());
        assert!(report
            .violations
            .iter()
            .any(|v| matches!(v, Violation::SharedEdges { first: 0, second: 1, .. })));
    }

    #[test]
    fn family_meeting_outside_s_fails_vertex_clause() {
        let (g, lab) = make_complete_bipartite(3, 3).unwrap();
        let s = set(&[lab.x(1), lab.y(1)]);
        // Both paths pass through x2, which is not in S.
        let p = Path::new(vec![lab.x(1), lab.y(2), lab.x(2), lab.y(1)]).unwrap();
        let q = Path::new(vec![lab.x(1), lab.y(3), lab.x(2), lab.y(1)]).unwrap();
        let fam = SPathFamily::new(s, vec![p, q]);
        let report = validate_family(&g, &fam).unwrap();
        let expected = lab.x(2);
        assert!(report.violations.iter().any(|v| matches!(
            v,
            Violation::SharedVerticesOutsideS { vertices, .. } if vertices == &vec![expected]
        )));
    }

    #[test]
    fn validator_reports_every_violation() {
        let (g, lab) = make_complete_bipartite(2, 2).unwrap();
        let s = set(&[lab.x(1), lab.y(1)]);
        let p = Path::new(vec![lab.x(1), lab.y(1)]).unwrap();
        let misses = Path::new(vec![lab.x(2), lab.y(2)]).unwrap();
        let fam = SPathFamily::new(s, vec![p.clone(), p, misses]);
        let report = validate_family(&g, &fam).unwrap();
        // Duplicate pair shares an edge; third path misses S entirely.
        assert!(report.violations.len() >= 2);
    }

    #[test]
    fn edge_disjoint_family_uses_at_most_all_edges() {
        // Pairwise edge-disjointness bounds total edge usage by |E|.
        let (g, lab) = make_complete_bipartite(4, 4).unwrap();
        let p1 = Path::new(vec![
            lab.y(1), lab.x(1), lab.y(2), lab.x(2), lab.y(3), lab.x(3), lab.y(4), lab.x(4),
        ])
        .unwrap();
        let p2 = Path::new(vec![
            lab.y(3), lab.x(1), lab.y(4), lab.x(2), lab.y(1), lab.x(3), lab.y(2), lab.x(4),
        ])
        .unwrap();
        let s: BTreeSet<u32> = (0..8).collect();
        let fam = SPathFamily::new(s, vec![p1, p2]);
        assert!(validate_family(&g, &fam).unwrap().is_ok());
        let total: usize = fam.paths.iter().map(|p| p.len() - 1).sum();
        assert!(total <= g.edge_count());
    }
}
