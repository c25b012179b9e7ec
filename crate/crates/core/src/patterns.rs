//! Detection of the four fixed 4-vertex obstruction patterns F1, F2, G1, G2.
//!
//! On vertices a, b, c, d (numbered 0..4 here):
//!
//! - F1 = {a→b, b→c, a→d, d→c}  (two directed 2-paths from a to c)
//! - F2 = F1 ∪ {b→d}
//! - G1 = F1 ∪ {c→a}
//! - G2 = F2 ∪ {c→a}
//!
//! A digraph *avoids F* when it contains neither F1 nor F2 as an induced
//! subdigraph (induced: non-edges must match as well), and likewise *avoids
//! G* for G1, G2. Absence of all four is the precondition of the improved
//! acyclic coloring pipeline.
//!
//! Detection is brute force over all 4-subsets with canonical adjacency
//! masks (minimum over the 24 relabelings), which is exact and fast enough
//! at desk scale.

use crate::graph::Digraph;
use std::fmt;
use std::sync::OnceLock;

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum PatternId {
    F1,
    F2,
    G1,
    G2,
}

impl PatternId {
    pub fn all() -> [PatternId; 4] {
        [PatternId::F1, PatternId::F2, PatternId::G1, PatternId::G2]
    }
}

impl fmt::Display for PatternId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            PatternId::F1 => "F1",
            PatternId::F2 => "F2",
            PatternId::G1 => "G1",
            PatternId::G2 => "G2",
        };
        f.write_str(name)
    }
}

/// One of the four fixed patterns, as an edge list on vertices 0..4.
#[derive(Copy, Clone, Debug)]
pub struct Pattern {
    pub id: PatternId,
    pub edges: &'static [(usize, usize)],
}

pub const PATTERNS: [Pattern; 4] = [
    Pattern { id: PatternId::F1, edges: &[(0, 1), (1, 2), (0, 3), (3, 2)] },
    Pattern { id: PatternId::F2, edges: &[(0, 1), (1, 2), (0, 3), (3, 2), (1, 3)] },
    Pattern { id: PatternId::G1, edges: &[(0, 1), (1, 2), (0, 3), (3, 2), (2, 0)] },
    Pattern { id: PatternId::G2, edges: &[(0, 1), (1, 2), (0, 3), (3, 2), (1, 3), (2, 0)] },
];

impl Pattern {
    pub fn get(id: PatternId) -> &'static Pattern {
        &PATTERNS[id as usize]
    }

    pub fn digraph(&self) -> Digraph {
        Digraph::from_edge_list(4, self.edges).expect("pattern edge lists are valid")
    }

    /// 16-bit adjacency mask, bit 4i+j set iff i→j.
    fn mask(&self) -> u16 {
        self.edges.iter().fold(0, |m, &(i, j)| m | 1 << (4 * i + j))
    }

    fn canonical_mask(&self) -> u16 {
        canonicalize(self.mask())
    }
}

fn permutations4() -> &'static [[usize; 4]; 24] {
    static PERMS: OnceLock<[[usize; 4]; 24]> = OnceLock::new();
    PERMS.get_or_init(|| {
        let mut perms = [[0; 4]; 24];
        let mut k = 0;
        for a in 0..4 {
            for b in 0..4 {
                for c in 0..4 {
                    for d in 0..4 {
                        let p = [a, b, c, d];
                        if (0..4).all(|v| p.contains(&v)) {
                            perms[k] = p;
                            k += 1;
                        }
                    }
                }
            }
        }
        debug_assert_eq!(k, 24);
        perms
    })
}

fn remap(mask: u16, perm: &[usize; 4]) -> u16 {
    let mut out = 0;
    for i in 0..4 {
        for j in 0..4 {
            if mask & (1 << (4 * i + j)) != 0 {
                out |= 1 << (4 * perm[i] + perm[j]);
            }
        }
    }
    out
}

/// Minimum adjacency mask over all 24 relabelings; equal canonical masks
/// characterize isomorphic 4-vertex digraphs.
fn canonicalize(mask: u16) -> u16 {
    permutations4()
        .iter()
        .map(|p| remap(mask, p))
        .min()
        .unwrap()
}

/// Row-major adjacency bitset for O(1) edge probes during the subset scan.
struct AdjBits {
    words: usize,
    bits: Vec<u64>,
}

impl AdjBits {
    fn new(d: &Digraph) -> AdjBits {
        let n = d.vertex_count();
        let words = n.div_ceil(64);
        let mut bits = vec![0u64; n * words];
        for (u, v) in d.edges() {
            bits[u * words + v / 64] |= 1 << (v % 64);
        }
        AdjBits { words, bits }
    }

    fn has(&self, u: usize, v: usize) -> bool {
        self.bits[u * self.words + v / 64] & (1 << (v % 64)) != 0
    }
}

/// Scans 4-subsets in lexicographic order for the first one isomorphic to
/// any of the wanted patterns. At most one pattern can match a given subset
/// since the four are pairwise non-isomorphic.
fn scan(d: &Digraph, wanted: &[&'static Pattern]) -> Option<(PatternId, [usize; 4])> {
    let n = d.vertex_count();
    if n < 4 {
        return None;
    }
    let adj = AdjBits::new(d);
    let targets: Vec<(PatternId, u32, u16)> = wanted
        .iter()
        .map(|p| (p.id, p.edges.len() as u32, p.canonical_mask()))
        .collect();
    for i in 0..n {
        for j in (i + 1)..n {
            for k in (j + 1)..n {
                for l in (k + 1)..n {
                    let sub = [i, j, k, l];
                    let mut mask: u16 = 0;
                    for (p, &u) in sub.iter().enumerate() {
                        for (q, &v) in sub.iter().enumerate() {
                            if p != q && adj.has(u, v) {
                                mask |= 1 << (4 * p + q);
                            }
                        }
                    }
                    let edge_count = mask.count_ones();
                    if targets.iter().any(|&(_, ec, _)| ec == edge_count) {
                        let canon = canonicalize(mask);
                        for &(id, ec, target) in &targets {
                            if ec == edge_count && canon == target {
                                return Some((id, sub));
                            }
                        }
                    }
                }
            }
        }
    }
    None
}

/// Lexicographically first 4-subset of D inducing a copy of the pattern.
pub fn contains_induced(d: &Digraph, id: PatternId) -> Option<[usize; 4]> {
    scan(d, &[Pattern::get(id)]).map(|(_, witness)| witness)
}

/// No induced F1 and no induced F2.
pub fn avoids_f(d: &Digraph) -> bool {
    scan(d, &[Pattern::get(PatternId::F1), Pattern::get(PatternId::F2)]).is_none()
}

/// No induced G1 and no induced G2.
pub fn avoids_g(d: &Digraph) -> bool {
    scan(d, &[Pattern::get(PatternId::G1), Pattern::get(PatternId::G2)]).is_none()
}

/// First violation among all four patterns (lexicographic subset order),
/// for precondition error reporting.
pub fn first_pattern_violation(d: &Digraph) -> Option<(PatternId, [usize; 4])> {
    let all: Vec<&'static Pattern> = PATTERNS.iter().collect();
    scan(d, &all)
}
