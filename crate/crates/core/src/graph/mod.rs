//! Simple undirected graphs, degree invariants and the structural
//! predicates used to classify equality cases.

mod edgelist;
pub mod generators;
mod graph6;

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use edgelist::{parse_edge_list, EdgeListError};
pub use graph6::{parse_graph6, serialize_graph6, Graph6Error, GRAPH6_MAX_ORDER};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("a graph needs at least one vertex")]
    Empty,
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("edge ({0}, {1}) references a vertex outside 0..{2}")]
    VertexOutOfRange(usize, usize, usize),
    #[error("invalid family parameters: {0}")]
    InvalidParameters(String),
}

/// A simple undirected graph on vertices `0..n`.
///
/// Edges are stored once as `(i, j)` with `i < j`, sorted. Neighbour lists
/// are derived from the edge set and kept sorted, so the adjacency relation
/// is symmetric by construction.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    neighbors: Vec<Vec<usize>>,
}

impl Graph {
    /// Builds a graph from an edge iterator. Duplicate pairs (in either
    /// orientation) are collapsed.
    pub fn new<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        if n == 0 {
            return Err(GraphError::Empty);
        }
        let mut set = BTreeSet::new();
        for (a, b) in edges {
            if a >= n || b >= n {
                return Err(GraphError::VertexOutOfRange(a, b, n));
            }
            if a == b {
                return Err(GraphError::SelfLoop(a));
            }
            set.insert((a.min(b), a.max(b)));
        }
        Ok(Self::from_sorted_edges(n, set.into_iter().collect()))
    }

    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self, GraphError> {
        Self::new(n, std::iter::empty())
    }

    // Caller guarantees: sorted, unique, i < j < n.
    pub(crate) fn from_sorted_edges(n: usize, edges: Vec<(usize, usize)>) -> Self {
        let mut neighbors = vec![Vec::new(); n];
        for &(i, j) in &edges {
            neighbors[i].push(j);
            neighbors[j].push(i);
        }
        for row in &mut neighbors {
            row.sort_unstable();
        }
        Self { n, edges, neighbors }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn size(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.neighbors[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.neighbors[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.neighbors.iter().map(Vec::len).collect()
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        a < self.n && b < self.n && self.neighbors[a].binary_search(&b).is_ok()
    }

    /// Boolean adjacency rows.
    pub fn adjacency_rows(&self) -> Vec<Vec<bool>> {
        let mut rows = vec![vec![false; self.n]; self.n];
        for &(i, j) in &self.edges {
            rows[i][j] = true;
            rows[j][i] = true;
        }
        rows
    }

    /// The complement: `{i, j}` is an edge iff it is not an edge here.
    pub fn complement(&self) -> Self {
        let mut edges = Vec::with_capacity(self.n * (self.n - 1) / 2 - self.size());
        for j in 0..self.n {
            for i in 0..j {
                if !self.has_edge(i, j) {
                    edges.push((i, j));
                }
            }
        }
        edges.sort_unstable();
        Self::from_sorted_edges(self.n, edges)
    }

    /// Disjoint union; vertices of `other` are shifted by `self.order()`.
    pub fn disjoint_union(&self, other: &Graph) -> Self {
        let shift = self.n;
        let mut edges = self.edges.clone();
        edges.extend(other.edges.iter().map(|&(i, j)| (i + shift, j + shift)));
        Self::from_sorted_edges(self.n + other.n, edges)
    }

    /// Subgraph induced by `vertices`, relabelled `0..vertices.len()` in the
    /// given order.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Result<Self, GraphError> {
        let mut index = vec![usize::MAX; self.n];
        for (k, &v) in vertices.iter().enumerate() {
            index[v] = k;
        }
        let edges = self
            .edges
            .iter()
            .filter(|&&(i, j)| index[i] != usize::MAX && index[j] != usize::MAX)
            .map(|&(i, j)| (index[i], index[j]));
        Graph::new(vertices.len(), edges)
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Self {
        assert_eq!(perm.len(), self.n, "permutation length must equal order");
        let mut edges: Vec<_> = self
            .edges
            .iter()
            .map(|&(i, j)| {
                let (a, b) = (perm[i], perm[j]);
                (a.min(b), a.max(b))
            })
            .collect();
        edges.sort_unstable();
        Self::from_sorted_edges(self.n, edges)
    }

    pub fn to_graph6(&self) -> String {
        serialize_graph6(self).expect("order exceeds graph6 range")
    }

    /// Connected components, each sorted, ordered by smallest member.
    pub fn connected_components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut components = Vec::new();
        for start in 0..self.n {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut stack = vec![start];
            let mut component = Vec::new();
            while let Some(v) = stack.pop() {
                component.push(v);
                for &w in &self.neighbors[v] {
                    if !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
            component.sort_unstable();
            components.push(component);
        }
        components
    }

    pub fn component_of(&self, v: usize) -> Vec<usize> {
        self.connected_components()
            .into_iter()
            .find(|c| c.binary_search(&v).is_ok())
            .expect("every vertex lies in a component")
    }

    pub fn is_connected(&self) -> bool {
        self.connected_components().len() == 1
    }

    pub fn has_isolated_vertex(&self) -> bool {
        self.neighbors.iter().any(Vec::is_empty)
    }

    pub fn is_regular(&self) -> bool {
        let d = self.degree(0);
        self.neighbors.iter().all(|r| r.len() == d)
    }

    /// Every edge joins two vertices of equal degree, i.e. each component is
    /// regular.
    pub fn is_componentwise_regular(&self) -> bool {
        self.edges.iter().all(|&(i, j)| self.degree(i) == self.degree(j))
    }

    pub fn is_complete(&self) -> bool {
        self.size() == self.n * (self.n - 1) / 2
    }

    /// Every vertex has degree exactly one: the graph is `(n/2) K_2`.
    pub fn is_perfect_matching(&self) -> bool {
        self.neighbors.iter().all(|r| r.len() == 1)
    }

    /// Two-colouring of the whole vertex set, if one exists.
    pub fn bipartition(&self) -> Option<Vec<bool>> {
        let mut colour: Vec<Option<bool>> = vec![None; self.n];
        for start in 0..self.n {
            if colour[start].is_some() {
                continue;
            }
            colour[start] = Some(false);
            let mut stack = vec![start];
            while let Some(v) = stack.pop() {
                let c = colour[v].unwrap();
                for &w in &self.neighbors[v] {
                    match colour[w] {
                        None => {
                            colour[w] = Some(!c);
                            stack.push(w);
                        }
                        Some(cw) if cw == c => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        Some(colour.into_iter().map(Option::unwrap).collect())
    }

    /// Part sizes `(a, b)` with `a <= b` when the graph is `K_{a,b}` on all
    /// of its vertices (both parts non-empty).
    pub fn complete_bipartite_parts(&self) -> Option<(usize, usize)> {
        if self.n < 2 || !self.is_connected() {
            return None;
        }
        let colour = self.bipartition()?;
        let a = colour.iter().filter(|&&c| c).count();
        let b = self.n - a;
        (self.size() == a * b).then_some((a.min(b), a.max(b)))
    }

    /// The component containing `v` is a star `K_{1,m}` (m >= 1) centred at
    /// `v`. Both ends of a `K_2` count as centres.
    pub fn is_star_center(&self, v: usize) -> bool {
        let d = self.degree(v);
        d >= 1 && self.neighbors[v].iter().all(|&w| self.degree(w) == 1)
    }

    /// `(n, k, lambda, mu)` when the graph is strongly regular. Complete and
    /// edgeless graphs are excluded (one of lambda/mu is undefined).
    pub fn strongly_regular_parameters(&self) -> Option<(usize, usize, usize, usize)> {
        if !self.is_regular() || self.size() == 0 || self.is_complete() {
            return None;
        }
        let rows = self.adjacency_rows();
        let mut lambda = None;
        let mut mu = None;
        for j in 0..self.n {
            for i in 0..j {
                let common = (0..self.n).filter(|&w| rows[i][w] && rows[j][w]).count();
                let slot = if rows[i][j] { &mut lambda } else { &mut mu };
                match *slot {
                    None => *slot = Some(common),
                    Some(c) if c != common => return None,
                    Some(_) => {}
                }
            }
        }
        Some((self.n, self.degree(0), lambda?, mu?))
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph").field("n", &self.n).field("edges", &self.edges).finish()
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match serialize_graph6(self) {
            Ok(s) => f.write_str(&s),
            Err(_) => write!(f, "<graph n={} e={}>", self.n, self.size()),
        }
    }
}

/// Degree sequence and the degree-based invariants built on it. All
/// integers are exact.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeProfile {
    pub degrees: Vec<usize>,
    pub delta_min: usize,
    pub delta_max: usize,
    pub edge_count: usize,
    /// Forgotten index, the sum of cubed degrees.
    pub forgotten: u64,
}

impl DegreeProfile {
    pub fn of(g: &Graph) -> Self {
        let degrees = g.degrees();
        let forgotten = degrees.iter().map(|&d| (d as u64).pow(3)).sum();
        Self {
            delta_min: *degrees.iter().min().unwrap(),
            delta_max: *degrees.iter().max().unwrap(),
            edge_count: g.size(),
            forgotten,
            degrees,
        }
    }

    pub fn order(&self) -> usize {
        self.degrees.len()
    }

    /// `n - 1`, the degree of a vertex in `K_n`.
    pub fn n_hat(&self) -> usize {
        self.order() - 1
    }

    /// Forgotten index by the edge formula: sum over edges of `d_i^2 + d_j^2`.
    pub fn forgotten_by_edges(&self, g: &Graph) -> u64 {
        g.edges()
            .iter()
            .map(|&(i, j)| {
                let (a, b) = (self.degrees[i] as u64, self.degrees[j] as u64);
                a * a + b * b
            })
            .sum()
    }

    /// `(delta_max/delta_min + delta_min/delta_max) / 2`, the degree-ratio
    /// factor that appears in nearly every bound.
    ///
    /// For regular graphs (including the edgeless one) this is exactly 1.
    /// It is undefined when `delta_min = 0 < delta_max`.
    pub fn ratio_factor(&self) -> Option<f64> {
        if self.delta_min == self.delta_max {
            Some(1.0)
        } else if self.delta_min == 0 {
            None
        } else {
            let (lo, hi) = (self.delta_min as f64, self.delta_max as f64);
            Some(0.5 * (hi / lo + lo / hi))
        }
    }
}

pub fn degree_profile(g: &Graph) -> DegreeProfile {
    DegreeProfile::of(g)
}

pub fn connected_components(g: &Graph) -> Vec<Vec<usize>> {
    g.connected_components()
}

#[cfg(test)]
mod tests {
    use super::generators::*;
    use super::*;

    #[test]
    fn rejects_self_loops_and_out_of_range() {
        assert_eq!(Graph::new(2, [(0, 0)]), Err(GraphError::SelfLoop(0)));
        assert!(matches!(Graph::new(2, [(0, 2)]), Err(GraphError::VertexOutOfRange(0, 2, 2))));
        assert_eq!(Graph::new(0, []), Err(GraphError::Empty));
    }

    #[test]
    fn duplicate_edges_collapse() {
        let g = Graph::new(3, [(0, 1), (1, 0), (2, 1)]).unwrap();
        assert_eq!(g.edges(), &[(0, 1), (1, 2)]);
        assert!(g.has_edge(1, 0) && g.has_edge(0, 1));
    }

    #[test]
    fn degree_profiles() {
        let p3 = DegreeProfile::of(&path(3).unwrap());
        assert_eq!(p3.degrees, vec![1, 2, 1]);
        assert_eq!((p3.delta_min, p3.delta_max, p3.edge_count), (1, 2, 2));
        assert_eq!(p3.forgotten, 10);
        assert_eq!(p3.forgotten_by_edges(&path(3).unwrap()), 10);

        let e4 = DegreeProfile::of(&Graph::empty(4).unwrap());
        assert_eq!(e4.degrees, vec![0; 4]);
        assert_eq!(e4.forgotten, 0);

        assert_eq!(DegreeProfile::of(&path(4).unwrap()).forgotten, 18);
    }

    #[test]
    fn components() {
        let two_k2 = matching(4).unwrap();
        assert_eq!(two_k2.connected_components(), vec![vec![0, 1], vec![2, 3]]);
        assert_eq!(complete(5).unwrap().connected_components().len(), 1);
        assert_eq!(Graph::empty(3).unwrap().connected_components(), vec![vec![0], vec![1], vec![2]]);
    }

    #[test]
    fn complement_involution_and_c5() {
        let c5 = cycle(5).unwrap();
        let co = c5.complement();
        assert_eq!(co.degrees(), vec![2; 5]);
        assert_eq!(co.complement(), c5);
    }

    #[test]
    fn structural_predicates() {
        assert_eq!(complete_bipartite(2, 3).unwrap().complete_bipartite_parts(), Some((2, 3)));
        assert_eq!(path(4).unwrap().complete_bipartite_parts(), None);
        assert_eq!(cycle(4).unwrap().complete_bipartite_parts(), Some((2, 2)));
        assert!(star(3).unwrap().is_star_center(0));
        assert!(!star(3).unwrap().is_star_center(1));
        assert!(complete(2).unwrap().is_star_center(1));
        let k3_k2 = complete(3).unwrap().disjoint_union(&complete(2).unwrap());
        assert!(!k3_k2.is_regular());
        assert!(k3_k2.is_componentwise_regular());
        assert_eq!(cycle(5).unwrap().strongly_regular_parameters(), Some((5, 2, 0, 1)));
        assert_eq!(complete(4).unwrap().strongly_regular_parameters(), None);
    }

    #[test]
    fn induced_and_permuted() {
        let p4 = path(4).unwrap();
        let sub = p4.induced_subgraph(&[1, 2, 3]).unwrap();
        assert_eq!(sub, path(3).unwrap());
        let q = p4.permuted(&[3, 2, 1, 0]);
        assert_eq!(q, p4);
    }
}
