//! Weak m-degeneracy: peeling, verification, and the coloring type.
//!
//! A digraph is weakly m-degenerate when every nonempty induced subgraph has
//! a vertex of out-degree < m or in-degree < m. The peeling procedure
//! ([`peel`]) repeatedly deletes the lowest-indexed vertex that is deficient
//! on some side; it ends with the empty graph exactly on the weakly
//! m-degenerate inputs, and the leftover (the *core*) is a canonical witness
//! otherwise: the unique maximal induced subgraph with all out- and
//! in-degrees at least m. For m = 1 weak degeneracy coincides with
//! acyclicity, which [`is_acyclic`] checks independently by DFS.

use crate::error::Error;
use crate::graph::Digraph;

/// Which degree of a peeled vertex was below m at removal time.
///
/// A vertex deficient on both sides records `Out` (out is checked first).
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum Side {
    Out,
    In,
}

/// Outcome of [`peel`]: removal order with deficiency sides, plus the core
/// (sorted ascending, empty iff the digraph is weakly m-degenerate).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PeelResult {
    pub order: Vec<(usize, Side)>,
    pub core: Vec<usize>,
}

/// A vertex-to-color assignment. Colors are `0..num_colors` where
/// `num_colors` is one more than the largest color used (0 when there are no
/// vertices); classes in the middle may be empty, trailing ones may not.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coloring {
    assignment: Vec<usize>,
    num_colors: usize,
}

impl Coloring {
    pub fn new(assignment: Vec<usize>) -> Coloring {
        let num_colors = assignment.iter().max().map_or(0, |&c| c + 1);
        Coloring { assignment, num_colors }
    }

    pub fn color(&self, v: usize) -> usize {
        self.assignment[v]
    }

    pub fn num_colors(&self) -> usize {
        self.num_colors
    }

    pub fn assignment(&self) -> &[usize] {
        &self.assignment
    }

    /// Vertices of one class, ascending.
    pub fn class_members(&self, c: usize) -> Vec<usize> {
        (0..self.assignment.len())
            .filter(|&v| self.assignment[v] == c)
            .collect()
    }

    /// All classes, indexed by color.
    pub fn classes(&self) -> Vec<Vec<usize>> {
        let mut classes = vec![Vec::new(); self.num_colors];
        for (v, &c) in self.assignment.iter().enumerate() {
            classes[c].push(v);
        }
        classes
    }

    /// Renumbers colors by first appearance in vertex order and drops unused
    /// classes; the partition itself is unchanged.
    pub fn compacted(&self) -> Coloring {
        let mut rename = vec![usize::MAX; self.num_colors];
        let mut next = 0;
        let assignment = self
            .assignment
            .iter()
            .map(|&c| {
                if rename[c] == usize::MAX {
                    rename[c] = next;
                    next += 1;
                }
                rename[c]
            })
            .collect();
        Coloring { assignment, num_colors: next }
    }
}

/// Result of [`verify_coloring`]: either every class is weakly m-degenerate,
/// or the first offending class (lowest color) with its core as witness.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Valid,
    Invalid { class: usize, core: Vec<usize> },
}

impl Verdict {
    pub fn is_valid(&self) -> bool {
        matches!(self, Verdict::Valid)
    }
}

/// Runs the peeling procedure at threshold m.
///
/// Repeatedly removes the lowest-indexed vertex whose current out-degree or
/// in-degree is below m, recording the deficient side, until no vertex
/// qualifies; the survivors form the core.
pub fn peel(d: &Digraph, m: usize) -> Result<PeelResult, Error> {
    if m == 0 {
        return Err(Error::ZeroM);
    }
    let n = d.vertex_count();
    let mut alive = vec![true; n];
    let mut out_deg: Vec<usize> = (0..n).map(|v| d.out_degree(v)).collect();
    let mut in_deg: Vec<usize> = (0..n).map(|v| d.in_degree(v)).collect();
    let mut order = Vec::new();
    loop {
        let mut removed = None;
        for v in 0..n {
            if !alive[v] {
                continue;
            }
            if out_deg[v] < m {
                removed = Some((v, Side::Out));
                break;
            }
            if in_deg[v] < m {
                removed = Some((v, Side::In));
                break;
            }
        }
        let Some((v, side)) = removed else { break };
        alive[v] = false;
        for &w in d.out_neighbors(v) {
            if alive[w] {
                in_deg[w] -= 1;
            }
        }
        for &w in d.in_neighbors(v) {
            if alive[w] {
                out_deg[w] -= 1;
            }
        }
        order.push((v, side));
    }
    let core = (0..n).filter(|&v| alive[v]).collect();
    Ok(PeelResult { order, core })
}

/// True when peeling at threshold m eliminates every vertex.
pub fn is_weakly_m_degenerate(d: &Digraph, m: usize) -> Result<bool, Error> {
    Ok(peel(d, m)?.core.is_empty())
}

/// DFS acyclicity test, independent of the peeling machinery. Digons count
/// as cycles.
pub fn is_acyclic(d: &Digraph) -> bool {
    const WHITE: u8 = 0;
    const GRAY: u8 = 1;
    const BLACK: u8 = 2;
    let n = d.vertex_count();
    let mut state = vec![WHITE; n];
    for root in 0..n {
        if state[root] != WHITE {
            continue;
        }
        // stack of (vertex, next out-neighbor position)
        let mut stack = vec![(root, 0usize)];
        state[root] = GRAY;
        while let Some(&mut (v, ref mut idx)) = stack.last_mut() {
            if *idx < d.out_degree(v) {
                let w = d.out_neighbors(v)[*idx];
                *idx += 1;
                match state[w] {
                    GRAY => return false,
                    WHITE => {
                        state[w] = GRAY;
                        stack.push((w, 0));
                    }
                    _ => {}
                }
            } else {
                state[v] = BLACK;
                stack.pop();
            }
        }
    }
    true
}

/// Checks that every color class induces a weakly m-degenerate subgraph.
///
/// On failure reports the lowest offending color and the core of its class
/// (in original vertex ids) as the witness.
pub fn verify_coloring(d: &Digraph, coloring: &Coloring, m: usize) -> Result<Verdict, Error> {
    if m == 0 {
        return Err(Error::ZeroM);
    }
    let n = d.vertex_count();
    if coloring.assignment().len() != n {
        return Err(Error::AssignmentLength {
            expected: n,
            actual: coloring.assignment().len(),
        });
    }
    for (class, members) in coloring.classes().into_iter().enumerate() {
        let sub = d.induced_subgraph(&members)?;
        let result = peel(&sub.graph, m)?;
        if !result.core.is_empty() {
            let core = result.core.iter().map(|&v| sub.old_of_new[v]).collect();
            return Ok(Verdict::Invalid { class, core });
        }
    }
    Ok(Verdict::Valid)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Digraph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Digraph::from_edge_list(n, &edges).unwrap()
    }

    #[test]
    fn peel_rejects_m_zero() {
        assert_eq!(peel(&Digraph::empty(1), 0), Err(Error::ZeroM));
    }

    #[test]
    fn peel_on_path_removes_everything() {
        let g = Digraph::from_edge_list(3, &[(0, 1), (1, 2)]).unwrap();
        let r = peel(&g, 1).unwrap();
        assert_eq!(
            r.order,
            vec![(0, Side::In), (1, Side::In), (2, Side::Out)]
        );
        assert!(r.core.is_empty());
        assert!(is_weakly_m_degenerate(&g, 1).unwrap());
    }

    #[test]
    fn peel_leaves_cycle_core_at_m_one() {
        let g = cycle(3);
        let r = peel(&g, 1).unwrap();
        assert!(r.order.is_empty());
        assert_eq!(r.core, vec![0, 1, 2]);
        // a pendant vertex peels away, the cycle stays
        let g = Digraph::from_edge_list(4, &[(0, 1), (1, 2), (2, 0), (2, 3)]).unwrap();
        let r = peel(&g, 1).unwrap();
        assert_eq!(r.order, vec![(3, Side::Out)]);
        assert_eq!(r.core, vec![0, 1, 2]);
    }

    #[test]
    fn cycle_is_weakly_2_degenerate() {
        let g = cycle(3);
        let r = peel(&g, 2).unwrap();
        assert_eq!(
            r.order,
            vec![(0, Side::Out), (1, Side::Out), (2, Side::Out)]
        );
        assert!(r.core.is_empty());
    }

    #[test]
    fn digon_is_not_weakly_1_degenerate() {
        let g = Digraph::from_edge_list(2, &[(0, 1), (1, 0)]).unwrap();
        assert!(!is_weakly_m_degenerate(&g, 1).unwrap());
        assert!(is_weakly_m_degenerate(&g, 2).unwrap());
    }

    #[test]
    fn acyclicity_matches_expectations() {
        assert!(is_acyclic(&Digraph::empty(0)));
        assert!(is_acyclic(&Digraph::empty(4)));
        assert!(is_acyclic(&Digraph::from_edge_list(3, &[(0, 1), (1, 2), (0, 2)]).unwrap()));
        assert!(!is_acyclic(&cycle(3)));
        assert!(!is_acyclic(&Digraph::from_edge_list(2, &[(0, 1), (1, 0)]).unwrap()));
        // cycle not reachable from vertex 0
        assert!(!is_acyclic(&Digraph::from_edge_list(4, &[(0, 1), (2, 3), (3, 2)]).unwrap()));
    }

    #[test]
    fn coloring_accessors() {
        let c = Coloring::new(vec![0, 2, 0, 1]);
        assert_eq!(c.num_colors(), 3);
        assert_eq!(c.color(1), 2);
        assert_eq!(c.class_members(0), vec![0, 2]);
        assert_eq!(c.classes(), vec![vec![0, 2], vec![3], vec![1]]);
        assert_eq!(Coloring::new(Vec::new()).num_colors(), 0);
    }

    #[test]
    fn compaction_renumbers_by_first_appearance() {
        let c = Coloring::new(vec![2, 0, 2, 5]);
        let k = c.compacted();
        assert_eq!(k.assignment(), &[0, 1, 0, 2]);
        assert_eq!(k.num_colors(), 3);
    }

    #[test]
    fn verification_reports_first_bad_class() {
        let g = cycle(3);
        let good = Coloring::new(vec![0, 0, 1]);
        assert_eq!(verify_coloring(&g, &good, 1).unwrap(), Verdict::Valid);
        let bad = Coloring::new(vec![1, 1, 1]);
        assert_eq!(
            verify_coloring(&g, &bad, 1).unwrap(),
            Verdict::Invalid { class: 1, core: vec![0, 1, 2] }
        );
        // the whole cycle in one class is fine at m = 2
        assert_eq!(verify_coloring(&g, &bad, 2).unwrap(), Verdict::Valid);
        let short = Coloring::new(vec![0, 1]);
        assert_eq!(
            verify_coloring(&g, &short, 1),
            Err(Error::AssignmentLength { expected: 3, actual: 2 })
        );
    }
}
