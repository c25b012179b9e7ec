//! Constructive colorings whose classes are weakly m-degenerate, and the
//! palette plans that bound how many colors they need.
//!
//! Two pipelines are provided. [`fracdelta_coloring`] works for any m with
//! Δ̄ ≥ 2m: it splits the digraph into classes of ceiling 2m (plus one
//! remainder class), colors every main class with two colors via
//! [`bounded_coloring`], and finishes the remainder greedily, achieving
//! ⌊(Δ̄ − s/2)/m⌋ + 1 colors. [`improved_acyclic_coloring`] is the m = 1
//! specialization that reaches ⌊(2/3)Δ̄ + 1/2⌋ + 1 colors on digraphs
//! avoiding the F and G patterns, by making every unit-ceiling class
//! outright acyclic.

use crate::decomposition::{
    lovasz_partition, modlov_partition, PartitionTargets, SlackKind,
};
use crate::degeneracy::{peel, verify_coloring, Coloring};
use crate::error::Error;
use crate::graph::Digraph;
use crate::halfint::HalfInt;
use crate::oracle::find_km_coloring;
use std::collections::VecDeque;

/// Palette plan for the Δ̄ ≥ 2m pipeline: s classes of ceiling 2m, an
/// optional remainder class of ceiling r − 1/2, and the color budget.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FracDeltaPlan {
    pub m: usize,
    pub delta_bar: HalfInt,
    /// Number of ceiling-2m classes: ⌊(Δ̄ + 1/2)/(2m + 1/2)⌋.
    pub s: usize,
    /// Leftover Δ̄ + 1/2 − s·(2m + 1/2), in [0, 2m + 1/2).
    pub r: HalfInt,
    pub targets: PartitionTargets,
    /// ⌊(Δ̄ − s/2)/m⌋ + 1 colors suffice.
    pub bound: usize,
}

impl FracDeltaPlan {
    pub fn new(m: usize, delta_bar: HalfInt) -> Result<FracDeltaPlan, Error> {
        if m == 0 {
            return Err(Error::ZeroM);
        }
        let threshold = HalfInt::from_int(2 * m as i64);
        if delta_bar < threshold {
            return Err(Error::DegreeBelowThreshold { max_avg: delta_bar, threshold });
        }
        let t = delta_bar.twice();
        let unit = 4 * m as i64 + 1;
        let s = (t + 1).div_euclid(unit);
        let r = HalfInt::from_twice(t + 1 - s * unit);
        debug_assert!(s >= 1 && r >= HalfInt::ZERO && r.twice() <= unit - 1);
        let mut targets = vec![threshold; s as usize];
        if r >= HalfInt::HALF {
            targets.push(r - HalfInt::HALF);
        }
        let targets = PartitionTargets::new(targets, SlackKind::Lovasz)?;
        let bound = ((t - s).div_euclid(2 * m as i64) + 1) as usize;
        Ok(FracDeltaPlan { m, delta_bar, s: s as usize, r, targets, bound })
    }
}

/// Palette plan for the acyclic pipeline: s classes of ceiling 1, an
/// optional remainder class of ceiling r − 1/2, and the color budget.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ImprovedPlan {
    pub delta_bar: HalfInt,
    /// Number of ceiling-1 classes: ⌊(Δ̄ + 1)/(3/2)⌋.
    pub s: usize,
    /// Leftover Δ̄ + 1 − s·(3/2), in [0, 3/2).
    pub r: HalfInt,
    pub targets: PartitionTargets,
    /// ⌊(2/3)Δ̄ + 1/2⌋ + 1 colors suffice.
    pub bound: usize,
}

impl ImprovedPlan {
    pub fn new(delta_bar: HalfInt) -> Result<ImprovedPlan, Error> {
        if delta_bar < HalfInt::ZERO {
            return Err(Error::DegreeBelowThreshold {
                max_avg: delta_bar,
                threshold: HalfInt::ZERO,
            });
        }
        let t = delta_bar.twice();
        let s = (t + 2).div_euclid(3);
        let r = HalfInt::from_twice(t + 2 - 3 * s);
        debug_assert!(r.twice() >= 0 && r.twice() <= 2);
        let mut targets = vec![HalfInt::ONE; s as usize];
        if r >= HalfInt::HALF {
            targets.push(r - HalfInt::HALF);
        }
        let targets = PartitionTargets::new(targets, SlackKind::ModLov)?;
        let bound = ((2 * t + 3).div_euclid(6) + 1) as usize;
        Ok(ImprovedPlan { delta_bar, s: s as usize, r, targets, bound })
    }
}

/// ⌊Δ̄/m⌋ + 1, the color count the plain greedy sweep never exceeds.
pub fn greedy_bound(max_avg: HalfInt, m: usize) -> Result<usize, Error> {
    if m == 0 {
        return Err(Error::ZeroM);
    }
    assert!(max_avg >= HalfInt::ZERO, "degrees are nonnegative");
    Ok((max_avg.div_floor(HalfInt::from_int(m as i64)) + 1) as usize)
}

/// ⌊(4/5)Δ̄ + 2/5⌋ + 1, the earlier best bound for acyclic colorings; the
/// improved pipeline stays at or below it from Δ̄ = 2 on.
pub fn four_fifths_bound(max_avg: HalfInt) -> usize {
    assert!(max_avg >= HalfInt::ZERO, "degrees are nonnegative");
    ((2 * max_avg.twice() + 2).div_euclid(5) + 1) as usize
}

fn colored_count(side: &[usize], color: &[usize]) -> usize {
    side.iter().filter(|&&w| color[w] != usize::MAX).count()
}

/// First color in 0..k that fewer than m already-colored neighbors of v use
/// on the side with fewer colored neighbors (ties prefer the out-side), or
/// on the other side if the first is exhausted.
fn pick_color(g: &Digraph, v: usize, color: &[usize], m: usize, k: usize) -> Option<usize> {
    let free = |side: &[usize]| {
        let mut counts = vec![0usize; k];
        for &w in side {
            if color[w] != usize::MAX {
                counts[color[w]] += 1;
            }
        }
        (0..k).find(|&c| counts[c] < m)
    };
    let out = g.out_neighbors(v);
    let inn = g.in_neighbors(v);
    let (first, second) = if colored_count(out, color) <= colored_count(inn, color) {
        (out, inn)
    } else {
        (inn, out)
    };
    free(first).or_else(|| free(second))
}

/// Colors vertices in index order, reusing the first color that fewer than
/// m colored neighbors hold on the sparser side and opening a new color
/// when none qualifies. Never needs more than ⌊Δ̄/m⌋ + 1 colors; classes are
/// weakly m-degenerate because each vertex, removed in reverse insertion
/// order, is deficient toward what remains.
pub fn greedy_coloring(d: &Digraph, m: usize) -> Result<Coloring, Error> {
    if m == 0 {
        return Err(Error::ZeroM);
    }
    let n = d.vertex_count();
    let mut color = vec![usize::MAX; n];
    let mut num_colors = 0usize;
    for v in 0..n {
        let out = d.out_neighbors(v);
        let inn = d.in_neighbors(v);
        let side = if colored_count(out, &color) <= colored_count(inn, &color) {
            out
        } else {
            inn
        };
        let mut counts = vec![0usize; num_colors + 1];
        for &w in side {
            if color[w] != usize::MAX {
                counts[color[w]] += 1;
            }
        }
        let c = (0..=num_colors)
            .find(|&c| counts[c] < m)
            .expect("a fresh color is never saturated");
        color[v] = c;
        num_colors = num_colors.max(c + 1);
    }
    let coloring = Coloring::new(color);
    assert!(coloring.num_colors() <= greedy_bound(d.max_avg_degree(), m)?);
    Ok(coloring)
}

/// Breadth-first order over the undirected skeleton from `start`, skipping
/// `blocked` vertices, visiting neighbors in ascending order.
fn bfs_order(g: &Digraph, start: usize, blocked: &[bool]) -> Vec<usize> {
    let mut seen = blocked.to_vec();
    let mut order = Vec::new();
    let mut queue = VecDeque::new();
    seen[start] = true;
    queue.push_back(start);
    while let Some(v) = queue.pop_front() {
        order.push(v);
        let mut nbrs: Vec<usize> = g
            .out_neighbors(v)
            .iter()
            .chain(g.in_neighbors(v))
            .copied()
            .collect();
        nbrs.sort_unstable();
        for w in nbrs {
            if !seen[w] {
                seen[w] = true;
                queue.push_back(w);
            }
        }
    }
    order
}

/// Searches for a vertex u and m+1 of its one-side neighbors whose removal
/// keeps the component weakly connected. Scans u ascending, out-side before
/// in-side, subsets in lexicographic order.
fn find_separator(g: &Digraph, m: usize) -> Option<(Vec<usize>, usize)> {
    let n = g.vertex_count();
    let r = m + 1;
    for u in 0..n {
        for side in [g.out_neighbors(u), g.in_neighbors(u)] {
            if side.len() < r {
                continue;
            }
            let mut idx: Vec<usize> = (0..r).collect();
            'subsets: loop {
                let chosen: Vec<usize> = idx.iter().map(|&i| side[i]).collect();
                let mut blocked = vec![false; n];
                for &v in &chosen {
                    blocked[v] = true;
                }
                if bfs_order(g, u, &blocked).len() == n - r {
                    return Some((chosen, u));
                }
                let mut i = r;
                loop {
                    if i == 0 {
                        break 'subsets;
                    }
                    i -= 1;
                    if idx[i] != i + side.len() - r {
                        idx[i] += 1;
                        for j in i + 1..r {
                            idx[j] = idx[j - 1] + 1;
                        }
                        break;
                    }
                }
            }
        }
    }
    None
}

/// Colors one weakly connected component with the palette 0..k.
fn color_component(g: &Digraph, m: usize, k: usize) -> Result<Vec<usize>, Error> {
    let n = g.vertex_count();
    let peeled = peel(g, k * m)?;
    let mut color = vec![usize::MAX; n];
    if peeled.core.is_empty() {
        // Reverse peel order: each vertex was deficient toward exactly the
        // set colored before it, so under km ≤ k·m some color stays open.
        for &(v, _) in peeled.order.iter().rev() {
            color[v] = pick_color(g, v, &color, m, k)
                .expect("a peeled vertex sees fewer than km colored neighbors on a side");
        }
        return Ok(color);
    }
    // A stuck vertex has both sides ≥ km, hence degree sum ≥ 2km; with
    // Δ̄ ≤ km that pins every core vertex at exactly km/km and cuts it off
    // from any peeled part. A weakly connected component is therefore
    // either fully peeled or fully stuck and km-regular.
    debug_assert!(peeled.order.is_empty());
    if let Some((sep, anchor)) = find_separator(g, m) {
        for &v in &sep {
            color[v] = 0;
        }
        let mut blocked = vec![false; n];
        for &v in &sep {
            blocked[v] = true;
        }
        let order = bfs_order(g, anchor, &blocked);
        debug_assert_eq!(order.len(), n - sep.len());
        // Farthest vertices first: everyone but the anchor still has an
        // uncolored neighbor (its search parent), so a color is always
        // free; the anchor goes last, where the m+1 like-colored separator
        // vertices on one of its sides leave a color unsaturated there.
        for &v in order.iter().skip(1).rev() {
            color[v] = pick_color(g, v, &color, m, k)
                .expect("a vertex with an uncolored neighbor sees a free color");
        }
        color[anchor] = pick_color(g, anchor, &color, m, k)
            .expect("the separator side of the anchor has a free color");
        return Ok(color);
    }
    if n > 64 {
        return Err(Error::SizeCapExceeded { n, cap: 64 });
    }
    match find_km_coloring(g, m, k)? {
        Some(exact) => Ok(exact.assignment().to_vec()),
        None => Err(Error::SearchExhausted),
    }
}

/// Colors an oriented digraph with Δ̄ ≤ k·m using at most k colors, one
/// weak component at a time: peel at threshold km and color backwards, or,
/// on km-regular components, buy breathing room by giving m+1 one-side
/// neighbors of an anchor vertex one shared color.
pub fn bounded_coloring(d: &Digraph, m: usize, k: usize) -> Result<Coloring, Error> {
    if m == 0 {
        return Err(Error::ZeroM);
    }
    if k < 2 {
        return Err(Error::PaletteTooSmall { k });
    }
    if let Some((u, v)) = d.digon_witness() {
        return Err(Error::NotOriented { u, v });
    }
    let limit = HalfInt::from_int((k * m) as i64);
    let max_avg = d.max_avg_degree();
    if max_avg > limit {
        return Err(Error::DegreeAboveLimit { max_avg, limit });
    }
    let mut color = vec![usize::MAX; d.vertex_count()];
    for comp in d.weak_components() {
        let sub = d.induced_subgraph(&comp)?;
        let local = color_component(&sub.graph, m, k)?;
        for (new, &old) in sub.old_of_new.iter().enumerate() {
            color[old] = local[new];
        }
    }
    let coloring = Coloring::new(color);
    assert!(coloring.num_colors() <= k);
    Ok(coloring)
}

/// The full Δ̄ ≥ 2m pipeline: plan, partition, two colors per main class,
/// greedy remainder, then compaction. The result is verified before it is
/// returned, along with the plan that certifies the bound.
pub fn fracdelta_coloring(d: &Digraph, m: usize) -> Result<(Coloring, FracDeltaPlan), Error> {
    if let Some((u, v)) = d.digon_witness() {
        return Err(Error::NotOriented { u, v });
    }
    let plan = FracDeltaPlan::new(m, d.max_avg_degree())?;
    let partition = lovasz_partition(d, &plan.targets)?;
    let mut assignment = vec![usize::MAX; d.vertex_count()];
    let mut palette_used = 0usize;
    for class in 0..plan.targets.num_classes() {
        let members = partition.class_members(class);
        let sub = d.induced_subgraph(&members)?;
        let local = if class < plan.s {
            bounded_coloring(&sub.graph, m, 2)?
        } else {
            greedy_coloring(&sub.graph, m)?
        };
        for (new, &old) in sub.old_of_new.iter().enumerate() {
            assignment[old] = palette_used + local.color(new);
        }
        palette_used += local.num_colors();
    }
    assert!(palette_used <= plan.bound, "palette exceeded the planned bound");
    let coloring = Coloring::new(assignment).compacted();
    assert!(
        verify_coloring(d, &coloring, m)?.is_valid(),
        "pipeline produced an invalid coloring"
    );
    Ok((coloring, plan))
}

/// The m = 1 pipeline for digraphs avoiding the F and G patterns: the
/// stronger partition makes every unit-ceiling class acyclic, so each takes
/// a single color, and the remainder class (ceiling ≤ 1/2) takes at most
/// one more.
pub fn improved_acyclic_coloring(d: &Digraph) -> Result<(Coloring, ImprovedPlan), Error> {
    if let Some((u, v)) = d.digon_witness() {
        return Err(Error::NotOriented { u, v });
    }
    let plan = ImprovedPlan::new(d.max_avg_degree())?;
    let partition = modlov_partition(d, &plan.targets)?;
    let mut assignment = vec![usize::MAX; d.vertex_count()];
    let mut palette_used = 0usize;
    for class in 0..plan.targets.num_classes() {
        let members = partition.class_members(class);
        if class < plan.s {
            if members.is_empty() {
                continue;
            }
            for &v in &members {
                assignment[v] = palette_used;
            }
            palette_used += 1;
        } else {
            let sub = d.induced_subgraph(&members)?;
            let local = greedy_coloring(&sub.graph, 1)?;
            for (new, &old) in sub.old_of_new.iter().enumerate() {
                assignment[old] = palette_used + local.color(new);
            }
            palette_used += local.num_colors();
        }
    }
    assert!(palette_used <= plan.bound, "palette exceeded the planned bound");
    let coloring = Coloring::new(assignment).compacted();
    assert!(
        verify_coloring(d, &coloring, 1)?.is_valid(),
        "pipeline produced an invalid coloring"
    );
    Ok((coloring, plan))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::patterns::PatternId;

    fn half(twice: i64) -> HalfInt {
        HalfInt::from_twice(twice)
    }

    fn cycle(n: usize) -> Digraph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Digraph::from_edge_list(n, &edges).unwrap()
    }

    fn r5() -> Digraph {
        let mut edges = Vec::new();
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((i, (i + 2) % 5));
        }
        Digraph::from_edge_list(5, &edges).unwrap()
    }

    fn digon() -> Digraph {
        Digraph::from_edge_list(2, &[(0, 1), (1, 0)]).unwrap()
    }

    #[test]
    fn fracdelta_plan_values() {
        let p = FracDeltaPlan::new(1, half(4)).unwrap();
        assert_eq!((p.s, p.r, p.bound), (1, HalfInt::ZERO, 2));
        assert_eq!(p.targets.targets(), &[half(4)]);

        let p = FracDeltaPlan::new(1, half(20)).unwrap();
        assert_eq!((p.s, p.r, p.bound), (4, HalfInt::HALF, 9));
        assert_eq!(p.targets.targets(), &[half(4), half(4), half(4), half(4), half(0)]);

        let p = FracDeltaPlan::new(2, half(8)).unwrap();
        assert_eq!((p.s, p.bound), (1, 2));
        assert_eq!(p.targets.targets(), &[half(8)]);

        assert_eq!(FracDeltaPlan::new(0, half(4)), Err(Error::ZeroM));
        assert_eq!(
            FracDeltaPlan::new(1, half(3)),
            Err(Error::DegreeBelowThreshold { max_avg: half(3), threshold: half(4) })
        );
    }

    #[test]
    fn improved_plan_values() {
        let cases = [
            (0, 0, vec![half(1)], 1),
            (2, 1, vec![half(2), half(0)], 2),
            (3, 1, vec![half(2), half(1)], 2),
            (4, 2, vec![half(2), half(2)], 2),
            (5, 2, vec![half(2), half(2), half(0)], 3),
        ];
        for (t, s, targets, bound) in cases {
            let p = ImprovedPlan::new(half(t)).unwrap();
            assert_eq!(p.s, s, "s at twice-degree {t}");
            assert_eq!(p.targets.targets(), &targets[..], "targets at twice-degree {t}");
            assert_eq!(p.bound, bound, "bound at twice-degree {t}");
        }
        assert!(ImprovedPlan::new(half(-1)).is_err());
    }

    #[test]
    fn plans_use_their_capacity_exactly() {
        for m in 1..=3 {
            for t in (4 * m as i64)..=60 {
                let p = FracDeltaPlan::new(m, half(t)).unwrap();
                assert_eq!(p.targets.capacity(), half(t), "fracdelta at m={m}, t={t}");
            }
        }
        for t in 0..=60 {
            let p = ImprovedPlan::new(half(t)).unwrap();
            assert_eq!(p.targets.capacity(), half(t), "improved at t={t}");
        }
    }

    #[test]
    fn bound_formulas() {
        assert_eq!(greedy_bound(half(4), 2).unwrap(), 2);
        assert_eq!(greedy_bound(half(5), 1).unwrap(), 3);
        assert_eq!(greedy_bound(half(0), 3).unwrap(), 1);
        assert_eq!(greedy_bound(half(4), 0), Err(Error::ZeroM));
        assert_eq!(four_fifths_bound(half(4)), 3);
        assert_eq!(four_fifths_bound(half(20)), 9);
    }

    #[test]
    fn greedy_traces() {
        let c = greedy_coloring(&r5(), 2).unwrap();
        assert_eq!(c.assignment(), &[0, 0, 0, 0, 1]);
        let c = greedy_coloring(&digon(), 1).unwrap();
        assert_eq!(c.assignment(), &[0, 1]);
        assert_eq!(greedy_coloring(&digon(), 0), Err(Error::ZeroM));
    }

    #[test]
    fn greedy_respects_its_bound_on_tournaments() {
        for n in [3, 5, 7, 9, 11] {
            let t = crate::generators::rotational_tournament(n).unwrap();
            let c = greedy_coloring(&t, 1).unwrap();
            assert!(verify_coloring(&t, &c, 1).unwrap().is_valid());
            assert!(c.num_colors() <= greedy_bound(t.max_avg_degree(), 1).unwrap());
        }
    }

    #[test]
    fn bounded_preconditions() {
        assert_eq!(bounded_coloring(&r5(), 0, 2), Err(Error::ZeroM));
        assert_eq!(bounded_coloring(&r5(), 2, 1), Err(Error::PaletteTooSmall { k: 1 }));
        assert_eq!(bounded_coloring(&digon(), 1, 2), Err(Error::NotOriented { u: 0, v: 1 }));
        let t7 = crate::generators::rotational_tournament(7).unwrap();
        assert_eq!(
            bounded_coloring(&t7, 1, 2),
            Err(Error::DegreeAboveLimit { max_avg: half(6), limit: half(4) })
        );
    }

    #[test]
    fn bounded_peel_path() {
        // Δ̄ < km, so peeling consumes the whole digraph
        let c = bounded_coloring(&r5(), 2, 2).unwrap();
        assert_eq!(c.assignment(), &[1, 0, 0, 0, 0]);
        assert!(verify_coloring(&r5(), &c, 2).unwrap().is_valid());

        let c5 = cycle(5);
        let c = bounded_coloring(&c5, 1, 2).unwrap();
        assert_eq!(c.assignment(), &[1, 0, 0, 0, 0]);
        assert!(verify_coloring(&c5, &c, 1).unwrap().is_valid());
    }

    #[test]
    fn bounded_separator_path() {
        // the tournament is 2-regular, so nothing peels at threshold 2
        let c = bounded_coloring(&r5(), 1, 2).unwrap();
        assert_eq!(c.assignment(), &[1, 0, 0, 0, 1]);
        assert!(verify_coloring(&r5(), &c, 1).unwrap().is_valid());
        assert_eq!(c.num_colors(), 2);
    }

    #[test]
    fn bounded_handles_components_independently() {
        // two 5-cycles side by side share the palette
        let mut edges = Vec::new();
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((5 + i, 5 + (i + 1) % 5));
        }
        let g = Digraph::from_edge_list(10, &edges).unwrap();
        let c = bounded_coloring(&g, 1, 2).unwrap();
        assert!(verify_coloring(&g, &c, 1).unwrap().is_valid());
        assert_eq!(c.num_colors(), 2);
        assert_eq!(c.assignment()[..5], c.assignment()[5..]);
    }

    #[test]
    fn fracdelta_pipeline_on_tournament() {
        let (c, plan) = fracdelta_coloring(&r5(), 1).unwrap();
        assert_eq!(plan.bound, 2);
        assert_eq!(c.assignment(), &[0, 1, 1, 1, 0]);
        assert_eq!(c.num_colors(), 2);
    }

    #[test]
    fn fracdelta_preconditions() {
        assert_eq!(
            fracdelta_coloring(&digon(), 1),
            Err(Error::NotOriented { u: 0, v: 1 })
        );
        assert_eq!(
            fracdelta_coloring(&cycle(3), 1),
            Err(Error::DegreeBelowThreshold { max_avg: half(2), threshold: half(4) })
        );
    }

    #[test]
    fn improved_pipeline_on_cycles() {
        let (c, plan) = improved_acyclic_coloring(&cycle(6)).unwrap();
        assert_eq!(plan.bound, 2);
        assert_eq!(c.assignment(), &[0, 1, 0, 1, 0, 1]);

        // two disjoint triangles: one acyclic class plus the remainder
        let g = Digraph::from_edge_list(6, &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)])
            .unwrap();
        let (c, plan) = improved_acyclic_coloring(&g).unwrap();
        assert_eq!(plan.bound, 2);
        assert_eq!(c.assignment(), &[0, 1, 0, 0, 0, 1]);
    }

    #[test]
    fn improved_pipeline_via_escape_move() {
        let edges = [
            (0, 2), (2, 4), (4, 0),
            (1, 0), (3, 0), (5, 2), (7, 2), (9, 4), (11, 4),
        ];
        let g = Digraph::from_edge_list(13, &edges).unwrap();
        let (c, plan) = improved_acyclic_coloring(&g).unwrap();
        assert_eq!(plan.bound, 2);
        assert_eq!(c.num_colors(), 2);
        assert_eq!(
            c.assignment(),
            &[0, 1, 1, 1, 1, 0, 1, 0, 1, 0, 1, 0, 1]
        );
    }

    #[test]
    fn improved_pipeline_rejects_patterns_and_digons() {
        match improved_acyclic_coloring(&r5()) {
            Err(Error::PatternFound { id, witness }) => {
                assert_eq!(id, PatternId::G2);
                assert_eq!(witness, [0, 1, 2, 3]);
            }
            other => panic!("expected a pattern rejection, got {other:?}"),
        }
        assert_eq!(
            improved_acyclic_coloring(&digon()).unwrap_err(),
            Error::NotOriented { u: 0, v: 1 }
        );
    }

    #[test]
    fn improved_pipeline_on_empty_and_tiny_inputs() {
        let (c, plan) = improved_acyclic_coloring(&Digraph::empty(0)).unwrap();
        assert_eq!(c.num_colors(), 0);
        assert_eq!(plan.bound, 1);
        let (c, plan) = improved_acyclic_coloring(&Digraph::empty(4)).unwrap();
        assert_eq!(c.num_colors(), 1);
        assert_eq!(plan.bound, 1);
    }
}
