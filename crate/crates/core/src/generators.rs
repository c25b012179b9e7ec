//! Digraph families for tests and experiments.
//!
//! Random generators take an explicit u64 seed and are fully deterministic:
//! the same seed yields the same digraph on every platform and in every
//! release, because the random stream comes from a fixed, self-contained
//! SplitMix64 implementation rather than an external library whose stream
//! might change between versions.

use std::collections::HashSet;

use crate::error::Error;
use crate::graph::Digraph;
use crate::halfint::HalfInt;

/// SplitMix64 pseudorandom generator (Steele, Lea and Flood's mixing
/// constants). Not cryptographic; chosen for speed, tiny state and a
/// well-known reference stream.
#[derive(Clone, Debug)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> SplitMix64 {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// Uniform value in 0..bound. Plain modulo; the bias is negligible for
    /// the small bounds used here.
    pub fn below(&mut self, bound: usize) -> usize {
        assert!(bound > 0, "below(0) is meaningless");
        (self.next_u64() % bound as u64) as usize
    }

    /// Fisher-Yates shuffle.
    pub fn shuffle<T>(&mut self, xs: &mut [T]) {
        for i in (1..xs.len()).rev() {
            let j = self.below(i + 1);
            xs.swap(i, j);
        }
    }
}

/// The directed cycle 0 → 1 → … → n−1 → 0.
pub fn directed_cycle(n: usize) -> Result<Digraph, Error> {
    if n < 2 {
        return Err(Error::TooFewVertices { n, min: 2 });
    }
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Ok(Digraph::from_edge_list(n, &edges).expect("cycle edges are valid"))
}

/// The rotational tournament on odd n: i → i+k (mod n) for k = 1..=(n−1)/2.
pub fn rotational_tournament(n: usize) -> Result<Digraph, Error> {
    if n % 2 == 0 {
        return Err(Error::EvenOrder { n });
    }
    let mut edges = Vec::new();
    for i in 0..n {
        for k in 1..=(n - 1) / 2 {
            edges.push((i, (i + k) % n));
        }
    }
    Ok(Digraph::from_edge_list(n, &edges).expect("tournament edges are valid"))
}

/// A random oriented digraph with Δ̄ ≤ max_avg: unordered pairs are visited
/// in shuffled order, oriented by a coin flip, and kept only while both
/// endpoints stay within degree sum 2·max_avg. Degrees saturate toward the
/// bound when enough pairs are available.
pub fn random_oriented(n: usize, max_avg: HalfInt, seed: u64) -> Digraph {
    let cap = max_avg.twice().max(0) as usize;
    let mut rng = SplitMix64::new(seed);
    let mut pairs = Vec::new();
    for u in 0..n {
        for v in (u + 1)..n {
            pairs.push((u, v));
        }
    }
    rng.shuffle(&mut pairs);
    let mut deg_sum = vec![0usize; n];
    let mut edges = Vec::new();
    for (u, v) in pairs {
        if deg_sum[u] < cap && deg_sum[v] < cap {
            deg_sum[u] += 1;
            deg_sum[v] += 1;
            if rng.next_u64() & 1 == 0 {
                edges.push((u, v));
            } else {
                edges.push((v, u));
            }
        }
    }
    Digraph::from_edge_list(n, &edges).expect("distinct oriented pairs are valid")
}

/// A random functional digraph (every out-degree exactly 1) without digons.
/// Candidate maps are drawn whole and rejected while any 2-cycle remains.
pub fn random_functional(n: usize, seed: u64) -> Result<Digraph, Error> {
    if n < 3 {
        return Err(Error::TooFewVertices { n, min: 3 });
    }
    let mut rng = SplitMix64::new(seed);
    const ATTEMPTS: usize = 1000;
    for _ in 0..ATTEMPTS {
        let f: Vec<usize> = (0..n).map(|v| (v + 1 + rng.below(n - 1)) % n).collect();
        if (0..n).any(|v| f[f[v]] == v) {
            continue;
        }
        let edges: Vec<_> = (0..n).map(|v| (v, f[v])).collect();
        return Ok(Digraph::from_edge_list(n, &edges).expect("functional edges are valid"));
    }
    Err(Error::RetriesExhausted { attempts: ATTEMPTS })
}

/// A random oriented digraph with every in- and out-degree equal to deg,
/// built as a union of deg permutations. Each permutation is redrawn until
/// it adds no self-loop, digon or duplicate edge. Needs n ≥ 2·deg + 1, since
/// a vertex must see 2·deg distinct neighbors.
pub fn random_regular_digraph(n: usize, deg: usize, seed: u64) -> Result<Digraph, Error> {
    if n < 2 * deg + 1 {
        return Err(Error::TooFewVertices { n, min: 2 * deg + 1 });
    }
    let mut rng = SplitMix64::new(seed);
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut seen: HashSet<(usize, usize)> = HashSet::new();
    const ATTEMPTS: usize = 500;
    for _ in 0..deg {
        let mut accepted = false;
        for _ in 0..ATTEMPTS {
            let mut sigma: Vec<usize> = (0..n).collect();
            rng.shuffle(&mut sigma);
            let ok = (0..n).all(|u| {
                sigma[u] != u
                    && sigma[sigma[u]] != u
                    && !seen.contains(&(u, sigma[u]))
                    && !seen.contains(&(sigma[u], u))
            });
            if ok {
                for (u, &v) in sigma.iter().enumerate() {
                    seen.insert((u, v));
                    edges.push((u, v));
                }
                accepted = true;
                break;
            }
        }
        if !accepted {
            return Err(Error::RetriesExhausted { attempts: ATTEMPTS });
        }
    }
    Ok(Digraph::from_edge_list(n, &edges).expect("permutation unions are valid"))
}
