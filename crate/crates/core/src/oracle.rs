//! Exact reference computations on small digraphs.
//!
//! Everything here is deliberately independent of the faster machinery in
//! the rest of the crate so it can serve as ground truth in tests.
//! [`weak_degeneracy_bruteforce`] checks the defining subset condition
//! directly rather than peeling, and [`exact_chi_m`] runs a canonical
//! backtracking search over all colorings. Sizes are capped because both
//! are exponential.

use crate::degeneracy::{verify_coloring, Coloring};
use crate::error::Error;
use crate::graph::Digraph;

/// Default vertex cap for [`exact_chi_m`].
pub const EXACT_SIZE_CAP: usize = 12;

/// Vertex cap for [`weak_degeneracy_bruteforce`] (it enumerates all 2^n
/// vertex subsets).
pub const BRUTEFORCE_SIZE_CAP: usize = 20;

/// An exact chromatic value together with an optimal coloring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactResult {
    /// The minimum number of classes.
    pub chi: usize,
    /// A coloring attaining it, using colors 0..chi.
    pub witness: Coloring,
    /// Whether the witness was re-validated through the public verifier.
    pub certificate_checked: bool,
}

fn adjacency_masks(d: &Digraph) -> (Vec<u64>, Vec<u64>) {
    let n = d.vertex_count();
    let mut out = vec![0u64; n];
    let mut inn = vec![0u64; n];
    for (u, v) in d.edges() {
        out[u] |= 1 << v;
        inn[v] |= 1 << u;
    }
    (out, inn)
}

/// Whether `mask` induces a weakly m-degenerate subgraph, by iterated
/// removal of deficient vertices. Removal order does not matter: degrees
/// only drop when vertices leave, so any greedy order empties the set
/// exactly when every nonempty subset has a deficient vertex.
fn mask_class_ok(out: &[u64], inn: &[u64], m: usize, mask: u64) -> bool {
    let mut cur = mask;
    'peel: while cur != 0 {
        let mut bits = cur;
        while bits != 0 {
            let v = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            if ((out[v] & cur).count_ones() as usize) < m
                || ((inn[v] & cur).count_ones() as usize) < m
            {
                cur &= !(1u64 << v);
                continue 'peel;
            }
        }
        return false;
    }
    true
}

/// Checks weak m-degeneracy straight from the definition: every nonempty
/// vertex subset must contain a vertex with fewer than m out-neighbors or
/// fewer than m in-neighbors inside the subset.
pub fn weak_degeneracy_bruteforce(d: &Digraph, m: usize) -> Result<bool, Error> {
    if m == 0 {
        return Err(Error::ZeroM);
    }
    let n = d.vertex_count();
    if n > BRUTEFORCE_SIZE_CAP {
        return Err(Error::SizeCapExceeded { n, cap: BRUTEFORCE_SIZE_CAP });
    }
    let (out, inn) = adjacency_masks(d);
    for mask in 1u64..(1u64 << n) {
        let mut deficient = false;
        let mut bits = mask;
        while bits != 0 {
            let v = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            if ((out[v] & mask).count_ones() as usize) < m
                || ((inn[v] & mask).count_ones() as usize) < m
            {
                deficient = true;
                break;
            }
        }
        if !deficient {
            return Ok(false);
        }
    }
    Ok(true)
}

fn search(
    v: usize,
    used: usize,
    k: usize,
    m: usize,
    out: &[u64],
    inn: &[u64],
    color: &mut [usize],
    class_mask: &mut [u64],
) -> bool {
    if v == color.len() {
        return true;
    }
    // Colors are introduced in order, so only one fresh color needs trying.
    let lim = (used + 1).min(k);
    for c in 0..lim {
        let grown = class_mask[c] | (1u64 << v);
        if mask_class_ok(out, inn, m, grown) {
            let saved = class_mask[c];
            color[v] = c;
            class_mask[c] = grown;
            if search(v + 1, used.max(c + 1), k, m, out, inn, color, class_mask) {
                return true;
            }
            class_mask[c] = saved;
        }
    }
    false
}

fn find_assignment(d: &Digraph, m: usize, k: usize) -> Option<Vec<usize>> {
    let n = d.vertex_count();
    let (out, inn) = adjacency_masks(d);
    let mut color = vec![0usize; n];
    let mut class_mask = vec![0u64; k];
    if search(0, 0, k, m, &out, &inn, &mut color, &mut class_mask) {
        Some(color)
    } else {
        None
    }
}

/// Searches for a coloring with at most k classes, each weakly m-degenerate.
/// Pruning on partial classes is sound because a class that already fails
/// the subset condition cannot be repaired by adding vertices.
pub fn find_km_coloring(d: &Digraph, m: usize, k: usize) -> Result<Option<Coloring>, Error> {
    if m == 0 {
        return Err(Error::ZeroM);
    }
    if k == 0 {
        return Err(Error::PaletteTooSmall { k });
    }
    let n = d.vertex_count();
    if n > 64 {
        return Err(Error::SizeCapExceeded { n, cap: 64 });
    }
    if n == 0 {
        return Ok(Some(Coloring::new(Vec::new())));
    }
    Ok(find_assignment(d, m, k).map(Coloring::new))
}

/// Exact χ_m by iterative deepening, capped at [`EXACT_SIZE_CAP`] vertices.
pub fn exact_chi_m(d: &Digraph, m: usize) -> Result<ExactResult, Error> {
    exact_chi_m_with_cap(d, m, EXACT_SIZE_CAP)
}

/// [`exact_chi_m`] with a custom vertex cap (at most 64).
pub fn exact_chi_m_with_cap(d: &Digraph, m: usize, cap: usize) -> Result<ExactResult, Error> {
    if m == 0 {
        return Err(Error::ZeroM);
    }
    let cap = cap.min(64);
    let n = d.vertex_count();
    if n > cap {
        return Err(Error::SizeCapExceeded { n, cap });
    }
    if n == 0 {
        let witness = Coloring::new(Vec::new());
        let certificate_checked = verify_coloring(d, &witness, m)?.is_valid();
        return Ok(ExactResult { chi: 0, witness, certificate_checked });
    }
    for k in 1..=n {
        if let Some(assignment) = find_assignment(d, m, k) {
            let witness = Coloring::new(assignment);
            debug_assert_eq!(
                witness.num_colors(),
                k,
                "a witness at the minimal depth uses every color"
            );
            let certificate_checked = verify_coloring(d, &witness, m)?.is_valid();
            assert!(certificate_checked, "exact search produced an invalid witness");
            return Ok(ExactResult { chi: k, witness, certificate_checked });
        }
    }
    unreachable!("singleton classes are always weakly m-degenerate")
}

/// Whether χ_m(D) = k and deleting any single vertex drops it below k.
pub fn is_km_critical(d: &Digraph, k: usize, m: usize) -> Result<bool, Error> {
    let full = exact_chi_m(d, m)?;
    if full.chi != k {
        return Ok(false);
    }
    let n = d.vertex_count();
    for v in 0..n {
        let rest: Vec<usize> = (0..n).filter(|&u| u != v).collect();
        let sub = d.induced_subgraph(&rest)?.graph;
        if exact_chi_m(&sub, m)?.chi >= k {
            return Ok(false);
        }
    }
    Ok(true)
}
