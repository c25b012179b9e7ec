//! Partitions of V(D) into classes with prescribed max-average-degree
//! ceilings, found by local search.
//!
//! The objective is f(P) = Σ_i Δ̄_i·|V_i| + (cross edges)/2 over partitions
//! P = (V_1..V_s) with ceilings Δ̄_i. Moving one vertex changes f by a
//! half-integer, and at any local maximum an averaging argument forces
//! Δ̄(induced V_i) ≤ Δ̄_i for every class, provided
//! Δ̄(D) ≤ slack + Σ Δ̄_i where the slack is (s−1)/2 ([`lovasz_partition`])
//! or, for the stronger variant, (s−2)/2 ([`modlov_partition`]).
//!
//! The stronger variant additionally makes every ceiling-1 class acyclic:
//! with Δ̄(class) ≤ 1, any directed cycle in the class is chordless and a
//! whole weak component (a *Brooks cycle*), and the tighter slack guarantees
//! some cycle vertex can move to another class without decreasing f. The
//! escape loop alternates such moves with re-optimization; termination is
//! guarded by a move cap since the theory bounds it only for inputs that
//! avoid the F/G patterns (which are a precondition here).
//!
//! Determinism: classes are ordered internally by (ceiling descending, input
//! position ascending), and seeding, scans and escape moves all follow that
//! canonical order. Consequently permuting the input targets permutes the
//! output classes correspondingly.

use crate::degeneracy::is_acyclic;
use crate::error::Error;
use crate::graph::Digraph;
use crate::halfint::HalfInt;
use crate::patterns::first_pattern_violation;

/// Which feasibility form a target list is meant for.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum SlackKind {
    /// Δ̄(D) ≤ (s−1)/2 + Σ targets.
    Lovasz,
    /// Δ̄(D) ≤ (s−2)/2 + Σ targets.
    ModLov,
}

/// Per-class ceilings Δ̄_1..Δ̄_s plus the slack form they were built for.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartitionTargets {
    targets: Vec<HalfInt>,
    kind: SlackKind,
}

impl PartitionTargets {
    /// Targets must be nonempty and nonnegative. (A target of 0 is legal:
    /// it forces an edgeless class, which the remainder part of the improved
    /// plan may require.)
    pub fn new(targets: Vec<HalfInt>, kind: SlackKind) -> Result<PartitionTargets, Error> {
        if targets.is_empty() {
            return Err(Error::EmptyTargets);
        }
        for (class, &t) in targets.iter().enumerate() {
            if t < HalfInt::ZERO {
                return Err(Error::NegativeTarget { class, value: t });
            }
        }
        Ok(PartitionTargets { targets, kind })
    }

    pub fn targets(&self) -> &[HalfInt] {
        &self.targets
    }

    pub fn num_classes(&self) -> usize {
        self.targets.len()
    }

    pub fn slack_kind(&self) -> SlackKind {
        self.kind
    }

    fn slack_for(&self, kind: SlackKind) -> HalfInt {
        let s = self.targets.len() as i64;
        match kind {
            SlackKind::Lovasz => HalfInt::from_twice(s - 1),
            SlackKind::ModLov => HalfInt::from_twice(s - 2),
        }
    }

    /// The slack term of this target list's own kind.
    pub fn slack(&self) -> HalfInt {
        self.slack_for(self.kind)
    }

    /// slack + Σ targets; inputs with Δ̄ above this are infeasible.
    pub fn capacity(&self) -> HalfInt {
        self.slack() + self.targets.iter().copied().sum()
    }

    /// Checks Δ̄ against the capacity of this target list's own kind.
    pub fn check_feasible(&self, max_avg: HalfInt) -> Result<(), Error> {
        self.check_feasible_for(max_avg, self.kind)
    }

    fn check_feasible_for(&self, max_avg: HalfInt, kind: SlackKind) -> Result<(), Error> {
        let capacity = self.slack_for(kind) + self.targets.iter().copied().sum();
        if max_avg > capacity {
            return Err(Error::TargetsInfeasible { max_avg, capacity });
        }
        Ok(())
    }
}

/// A total assignment of vertices to classes 0..num_classes−1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Partition {
    class_of: Vec<usize>,
    num_classes: usize,
}

impl Partition {
    pub fn new(class_of: Vec<usize>, num_classes: usize) -> Result<Partition, Error> {
        for &c in &class_of {
            if c >= num_classes {
                return Err(Error::ClassOutOfRange { class: c, num_classes });
            }
        }
        Ok(Partition { class_of, num_classes })
    }

    pub fn class_of(&self, v: usize) -> usize {
        self.class_of[v]
    }

    pub fn assignment(&self) -> &[usize] {
        &self.class_of
    }

    pub fn num_classes(&self) -> usize {
        self.num_classes
    }

    /// Vertices of one class, ascending.
    pub fn class_members(&self, class: usize) -> Vec<usize> {
        (0..self.class_of.len())
            .filter(|&v| self.class_of[v] == class)
            .collect()
    }

    pub fn classes(&self) -> Vec<Vec<usize>> {
        let mut classes = vec![Vec::new(); self.num_classes];
        for (v, &c) in self.class_of.iter().enumerate() {
            classes[c].push(v);
        }
        classes
    }
}

/// Exact objective value Σ_i Δ̄_i·|V_i| + (cross edges)/2.
pub fn f_objective(
    d: &Digraph,
    p: &Partition,
    t: &PartitionTargets,
) -> Result<HalfInt, Error> {
    if p.class_of.len() != d.vertex_count() {
        return Err(Error::AssignmentLength {
            expected: d.vertex_count(),
            actual: p.class_of.len(),
        });
    }
    if p.num_classes != t.num_classes() {
        return Err(Error::ClassCountMismatch {
            classes: p.num_classes,
            targets: t.num_classes(),
        });
    }
    let mut twice = 0i64;
    for &c in &p.class_of {
        twice += t.targets[c].twice();
    }
    for (u, v) in d.edges() {
        if p.class_of[u] != p.class_of[v] {
            twice += 1;
        }
    }
    Ok(HalfInt::from_twice(twice))
}

/// Local-search state over canonically ordered classes.
struct Search<'a> {
    d: &'a Digraph,
    /// ceilings in canonical order (descending, ties by input position)
    targets: Vec<HalfInt>,
    /// canonical class index -> input target position
    to_input: Vec<usize>,
    class_of: Vec<usize>,
    /// deg_to[v][c] = number of neighbors (out + in) of v in canonical class c
    deg_to: Vec<Vec<usize>>,
    f_twice: i64,
}

impl<'a> Search<'a> {
    fn new(d: &'a Digraph, t: &PartitionTargets) -> Search<'a> {
        let s = t.num_classes();
        let mut to_input: Vec<usize> = (0..s).collect();
        to_input.sort_by(|&a, &b| t.targets[b].cmp(&t.targets[a]).then(a.cmp(&b)));
        let targets: Vec<HalfInt> = to_input.iter().map(|&i| t.targets[i]).collect();
        let n = d.vertex_count();
        let class_of: Vec<usize> = (0..n).map(|v| v % s).collect();
        let mut deg_to = vec![vec![0usize; s]; n];
        for (u, v) in d.edges() {
            deg_to[u][class_of[v]] += 1;
            deg_to[v][class_of[u]] += 1;
        }
        let mut f_twice = 0i64;
        for v in 0..n {
            f_twice += targets[class_of[v]].twice();
        }
        for (u, v) in d.edges() {
            if class_of[u] != class_of[v] {
                f_twice += 1;
            }
        }
        Search { d, targets, to_input, class_of, deg_to, f_twice }
    }

    /// Change in 2·f if v moves to canonical class b.
    fn delta_twice(&self, v: usize, b: usize) -> i64 {
        let a = self.class_of[v];
        self.targets[b].twice() - self.targets[a].twice() + self.deg_to[v][a] as i64
            - self.deg_to[v][b] as i64
    }

    fn apply(&mut self, v: usize, b: usize) {
        let a = self.class_of[v];
        self.f_twice += self.delta_twice(v, b);
        self.class_of[v] = b;
        for &w in self.d.out_neighbors(v).iter().chain(self.d.in_neighbors(v)) {
            self.deg_to[w][a] -= 1;
            self.deg_to[w][b] += 1;
        }
    }

    /// First-improvement scan (vertices ascending, destinations in canonical
    /// order), restarting after every accepted move. Each accepted move
    /// raises 2·f by at least 1 and f is bounded, so this terminates.
    fn optimize(&mut self) {
        let n = self.d.vertex_count();
        let s = self.targets.len();
        'outer: loop {
            for v in 0..n {
                for b in 0..s {
                    if b != self.class_of[v] && self.delta_twice(v, b) > 0 {
                        self.apply(v, b);
                        continue 'outer;
                    }
                }
            }
            break;
        }
        debug_assert_eq!(self.f_twice, self.recompute_f_twice());
    }

    fn recompute_f_twice(&self) -> i64 {
        let mut twice = 0i64;
        for v in 0..self.d.vertex_count() {
            twice += self.targets[self.class_of[v]].twice();
        }
        for (u, v) in self.d.edges() {
            if self.class_of[u] != self.class_of[v] {
                twice += 1;
            }
        }
        twice
    }

    /// Δ̄ of the subgraph induced by canonical class c, doubled. Within-class
    /// degree of v is exactly deg_to[v][class_of(v)].
    fn class_max_avg_twice(&self, c: usize) -> i64 {
        (0..self.d.vertex_count())
            .filter(|&v| self.class_of[v] == c)
            .map(|v| self.deg_to[v][c] as i64)
            .max()
            .unwrap_or(0)
    }

    /// The averaging argument guarantees this at any local optimum under
    /// the feasibility precondition; a failure here is a bug.
    fn assert_ceilings(&self) {
        for c in 0..self.targets.len() {
            assert!(
                self.class_max_avg_twice(c) <= self.targets[c].twice(),
                "class ceiling violated at a local optimum (class {c})"
            );
        }
    }

    fn members(&self, c: usize) -> Vec<usize> {
        (0..self.d.vertex_count())
            .filter(|&v| self.class_of[v] == c)
            .collect()
    }

    fn into_partition(self) -> Partition {
        let class_of = self
            .class_of
            .iter()
            .map(|&c| self.to_input[c])
            .collect();
        Partition { class_of, num_classes: self.targets.len() }
    }
}

fn require_oriented(d: &Digraph) -> Result<(), Error> {
    match d.digon_witness() {
        Some((u, v)) => Err(Error::NotOriented { u, v }),
        None => Ok(()),
    }
}

/// Partitions an oriented digraph so every class i satisfies
/// Δ̄(class i) ≤ targets[i], given Δ̄(D) ≤ (s−1)/2 + Σ targets.
pub fn lovasz_partition(d: &Digraph, t: &PartitionTargets) -> Result<Partition, Error> {
    require_oriented(d)?;
    t.check_feasible_for(d.max_avg_degree(), SlackKind::Lovasz)?;
    let mut search = Search::new(d, t);
    search.optimize();
    search.assert_ceilings();
    Ok(search.into_partition())
}

/// A directed cycle in `members`'s induced subgraph that is chordless and a
/// whole weak component, in traversal order from its smallest vertex.
fn brooks_cycle_in(d: &Digraph, members: &[usize]) -> Option<Vec<usize>> {
    let sub = d
        .induced_subgraph(members)
        .expect("class members are valid vertices");
    let g = &sub.graph;
    for comp in g.weak_components() {
        if comp.len() < 2 {
            continue;
        }
        if comp.iter().all(|&v| g.out_degree(v) == 1 && g.in_degree(v) == 1) {
            let start = comp[0];
            let mut cycle = vec![sub.old_of_new[start]];
            let mut cur = g.out_neighbors(start)[0];
            while cur != start {
                cycle.push(sub.old_of_new[cur]);
                cur = g.out_neighbors(cur)[0];
            }
            return Some(cycle);
        }
    }
    None
}

/// Finds a Brooks cycle in the given class, which must have target exactly 1.
pub fn find_brooks_cycle(
    d: &Digraph,
    p: &Partition,
    t: &PartitionTargets,
    class: usize,
) -> Result<Option<Vec<usize>>, Error> {
    if p.class_of.len() != d.vertex_count() {
        return Err(Error::AssignmentLength {
            expected: d.vertex_count(),
            actual: p.class_of.len(),
        });
    }
    if p.num_classes != t.num_classes() {
        return Err(Error::ClassCountMismatch {
            classes: p.num_classes,
            targets: t.num_classes(),
        });
    }
    if class >= p.num_classes {
        return Err(Error::ClassOutOfRange { class, num_classes: p.num_classes });
    }
    if t.targets[class] != HalfInt::ONE {
        return Err(Error::NotUnitTarget { class });
    }
    Ok(brooks_cycle_in(d, &p.class_members(class)))
}

/// [`modlov_partition`] plus the number of cycle-escape moves it needed.
pub fn modlov_partition_with_moves(
    d: &Digraph,
    t: &PartitionTargets,
) -> Result<(Partition, usize), Error> {
    require_oriented(d)?;
    if let Some((id, witness)) = first_pattern_violation(d) {
        return Err(Error::PatternFound { id, witness });
    }
    t.check_feasible_for(d.max_avg_degree(), SlackKind::ModLov)?;

    let n = d.vertex_count();
    let s = t.num_classes();
    let cap = 4 * n * s;
    let mut moves = 0usize;
    let mut search = Search::new(d, t);
    search.optimize();
    loop {
        search.assert_ceilings();
        let found = (0..s)
            .filter(|&c| search.targets[c] == HalfInt::ONE)
            .find_map(|c| brooks_cycle_in(d, &search.members(c)).map(|cyc| (c, cyc)));
        let Some((c, cycle)) = found else { break };
        let v0 = cycle[0];
        debug_assert_eq!(search.deg_to[v0][c], 2);
        // Some destination with d̄ into it ≤ its ceiling must exist: if every
        // other class held > ceiling worth of v0's neighbors, v0's degree
        // would exceed 2·Δ̄(D) under the (s−2)/2 capacity. Guaranteed, so a
        // miss is a bug.
        let dest = (0..s)
            .find(|&j| j != c && (search.deg_to[v0][j] as i64) <= search.targets[j].twice())
            .expect("escape destination exists under the modlov precondition");
        assert!(search.delta_twice(v0, dest) >= 0, "escape move must not decrease f");
        moves += 1;
        if moves > cap {
            return Err(Error::IterationCapExceeded { cap });
        }
        search.apply(v0, dest);
        search.optimize();
    }
    for c in 0..s {
        if search.targets[c] == HalfInt::ONE {
            let sub = d
                .induced_subgraph(&search.members(c))
                .expect("class members are valid vertices");
            assert!(is_acyclic(&sub.graph), "unit-target class must end acyclic");
        }
    }
    Ok((search.into_partition(), moves))
}

/// Like [`lovasz_partition`] but with the tighter feasibility form
/// Δ̄(D) ≤ (s−2)/2 + Σ targets, on digraphs avoiding the F and G patterns;
/// additionally every class with target exactly 1 induces an acyclic
/// subgraph.
pub fn modlov_partition(d: &Digraph, t: &PartitionTargets) -> Result<Partition, Error> {
    modlov_partition_with_moves(d, t).map(|(p, _)| p)
}
