//! Loopless digraphs on vertices `0..n` with exact degree statistics.
//!
//! Digons (2-cycles `u -> v -> u`) are representable; most algorithms in the
//! crate require their absence ("oriented") and check it as a precondition.
//! Adjacency lists are kept sorted ascending so every iteration order in the
//! crate is deterministic.

use crate::error::Error;
use crate::halfint::HalfInt;

/// A digraph with no self-loops and no duplicate arcs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Digraph {
    out_adj: Vec<Vec<usize>>,
    in_adj: Vec<Vec<usize>>,
    edge_count: usize,
}

/// Per-vertex degree pairs plus the two degree maxima used by the bounds.
///
/// `max_avg` is the largest (out + in)/2 over all vertices, a half-integer;
/// `max_geom_sq` is the largest out·in, kept squared so it stays an integer.
/// Both are 0 on the empty digraph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeStats {
    pub per_vertex: Vec<(usize, usize)>,
    pub max_avg: HalfInt,
    pub max_geom_sq: u64,
}

/// An induced subgraph together with its vertex renaming.
///
/// New vertex `i` of `graph` corresponds to original vertex `old_of_new[i]`;
/// the list is sorted ascending.
#[derive(Clone, Debug)]
pub struct InducedSubgraph {
    pub graph: Digraph,
    pub old_of_new: Vec<usize>,
}

impl InducedSubgraph {
    /// New index of an original vertex, if it is in the subgraph.
    pub fn new_of_old(&self, old: usize) -> Option<usize> {
        self.old_of_new.binary_search(&old).ok()
    }
}

impl Digraph {
    /// The edgeless digraph on `n` vertices.
    pub fn empty(n: usize) -> Digraph {
        Digraph {
            out_adj: vec![Vec::new(); n],
            in_adj: vec![Vec::new(); n],
            edge_count: 0,
        }
    }

    /// Builds a digraph from `(u, v)` arcs, rejecting out-of-range endpoints,
    /// self-loops, and duplicate arcs.
    pub fn from_edge_list(n: usize, edges: &[(usize, usize)]) -> Result<Digraph, Error> {
        let mut g = Digraph::empty(n);
        for &(u, v) in edges {
            if u >= n {
                return Err(Error::VertexOutOfRange { v: u, n });
            }
            if v >= n {
                return Err(Error::VertexOutOfRange { v, n });
            }
            if u == v {
                return Err(Error::SelfLoop { v });
            }
            g.out_adj[u].push(v);
            g.in_adj[v].push(u);
        }
        for u in 0..n {
            g.out_adj[u].sort_unstable();
            g.in_adj[u].sort_unstable();
            if let Some(w) = g.out_adj[u].windows(2).find(|w| w[0] == w[1]) {
                return Err(Error::DuplicateEdge { u, v: w[0] });
            }
        }
        g.edge_count = edges.len();
        Ok(g)
    }

    pub fn vertex_count(&self) -> usize {
        self.out_adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn out_neighbors(&self, v: usize) -> &[usize] {
        &self.out_adj[v]
    }

    pub fn in_neighbors(&self, v: usize) -> &[usize] {
        &self.in_adj[v]
    }

    pub fn out_degree(&self, v: usize) -> usize {
        self.out_adj[v].len()
    }

    pub fn in_degree(&self, v: usize) -> usize {
        self.in_adj[v].len()
    }

    /// (out-degree + in-degree) / 2 of one vertex.
    pub fn avg_degree(&self, v: usize) -> HalfInt {
        HalfInt::from_twice((self.out_degree(v) + self.in_degree(v)) as i64)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.out_adj[u].binary_search(&v).is_ok()
    }

    /// All arcs, sorted by (source, target).
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.out_adj
            .iter()
            .enumerate()
            .flat_map(|(u, outs)| outs.iter().map(move |&v| (u, v)))
    }

    pub fn degree_stats(&self) -> DegreeStats {
        let mut per_vertex = Vec::with_capacity(self.vertex_count());
        let mut max_twice = 0i64;
        let mut max_geom_sq = 0u64;
        for v in 0..self.vertex_count() {
            let d_out = self.out_degree(v);
            let d_in = self.in_degree(v);
            per_vertex.push((d_out, d_in));
            max_twice = max_twice.max((d_out + d_in) as i64);
            max_geom_sq = max_geom_sq.max(d_out as u64 * d_in as u64);
        }
        DegreeStats {
            per_vertex,
            max_avg: HalfInt::from_twice(max_twice),
            max_geom_sq,
        }
    }

    /// Largest average degree over all vertices; 0 on the empty digraph.
    pub fn max_avg_degree(&self) -> HalfInt {
        self.degree_stats().max_avg
    }

    /// A digon `u <-> v` if one exists, lowest (u, v) first.
    pub fn digon_witness(&self) -> Option<(usize, usize)> {
        for u in 0..self.vertex_count() {
            for &v in &self.out_adj[u] {
                if v > u && self.has_edge(v, u) {
                    return Some((u, v));
                }
            }
        }
        None
    }

    /// True when the digraph has no digon.
    pub fn is_oriented(&self) -> bool {
        self.digon_witness().is_none()
    }

    /// Subgraph induced by a vertex set (duplicates collapse, order ignored).
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Result<InducedSubgraph, Error> {
        let n = self.vertex_count();
        let mut old_of_new: Vec<usize> = vertices.to_vec();
        old_of_new.sort_unstable();
        old_of_new.dedup();
        if let Some(&v) = old_of_new.last() {
            if v >= n {
                return Err(Error::VertexOutOfRange { v, n });
            }
        }
        let mut new_of_old = vec![usize::MAX; n];
        for (i, &v) in old_of_new.iter().enumerate() {
            new_of_old[v] = i;
        }
        let mut edges = Vec::new();
        for &u in &old_of_new {
            for &v in &self.out_adj[u] {
                if new_of_old[v] != usize::MAX {
                    edges.push((new_of_old[u], new_of_old[v]));
                }
            }
        }
        let graph = Digraph::from_edge_list(old_of_new.len(), &edges)
            .expect("induced edges are valid by construction");
        Ok(InducedSubgraph { graph, old_of_new })
    }

    /// Weakly connected components (edge directions ignored), each sorted
    /// ascending, listed by smallest member.
    pub fn weak_components(&self) -> Vec<Vec<usize>> {
        let n = self.vertex_count();
        let mut seen = vec![false; n];
        let mut components = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut comp = vec![start];
            let mut queue = vec![start];
            seen[start] = true;
            while let Some(u) = queue.pop() {
                for &w in self.out_adj[u].iter().chain(self.in_adj[u].iter()) {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        queue.push(w);
                    }
                }
            }
            comp.sort_unstable();
            components.push(comp);
        }
        components
    }
}
