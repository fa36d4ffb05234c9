//! Random and structured graph families used as test beds.

use alloc::vec;
use alloc::vec::Vec;

use rand::seq::SliceRandom;
use rand::Rng as _;

use crate::graph::Graph;
use crate::rng::seeded;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum GenerateError {
    #[error("edge probability {0} is outside [0, 1]")]
    Probability(f64),
    #[error("{0} must be at least 1")]
    TooSmall(&'static str),
}

fn check_probability(p: f64) -> Result<(), GenerateError> {
    if (0.0..=1.0).contains(&p) {
        Ok(())
    } else {
        Err(GenerateError::Probability(p))
    }
}

/// Erdős–Rényi `G(n, p)`.
pub fn gen_gnp(n: usize, p: f64, seed: u64) -> Result<Graph, GenerateError> {
    check_probability(p)?;
    let mut rng = seeded(seed);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Ok(Graph::from_edge_list(n, &edges).expect("generated pairs are valid"))
}

/// Random bipartite graph: left side `0..left`, right side `left..left+right`,
/// each cross pair an edge with probability `p`.
pub fn gen_bipartite(left: usize, right: usize, p: f64, seed: u64) -> Result<Graph, GenerateError> {
    check_probability(p)?;
    let mut rng = seeded(seed);
    let mut edges = Vec::new();
    for u in 0..left {
        for v in left..left + right {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Ok(Graph::from_edge_list(left + right, &edges).expect("generated pairs are valid"))
}

/// Triangle-free process run to saturation: visit all pairs in uniformly
/// random order and keep a pair iff its endpoints have no common neighbour.
pub fn gen_triangle_free_process(n: usize, seed: u64) -> Result<Graph, GenerateError> {
    if n == 0 {
        return Err(GenerateError::TooSmall("n"));
    }
    let mut rng = seeded(seed);
    let words = n.div_ceil(64);
    let mut rows = vec![0u64; n * words];
    let mut pairs: Vec<(u32, u32)> = Vec::with_capacity(n * (n - 1) / 2);
    for u in 0..n as u32 {
        for v in u + 1..n as u32 {
            pairs.push((u, v));
        }
    }
    pairs.shuffle(&mut rng);
    let mut edges = Vec::new();
    for (u, v) in pairs {
        let (u, v) = (u as usize, v as usize);
        let ru = &rows[u * words..(u + 1) * words];
        let rv = &rows[v * words..(v + 1) * words];
        if ru.iter().zip(rv).any(|(a, b)| a & b != 0) {
            continue;
        }
        rows[u * words + v / 64] |= 1 << (v % 64);
        rows[v * words + u / 64] |= 1 << (u % 64);
        edges.push((u, v));
    }
    Ok(Graph::from_edge_list(n, &edges).expect("generated pairs are valid"))
}

/// `r` disjoint copies of `K_k`; copy `j` occupies `j*k..(j+1)*k`.
pub fn gen_clique_union(r: usize, k: usize) -> Result<Graph, GenerateError> {
    if r == 0 {
        return Err(GenerateError::TooSmall("r"));
    }
    if k == 0 {
        return Err(GenerateError::TooSmall("k"));
    }
    let mut edges = Vec::with_capacity(r * k * (k - 1) / 2);
    for j in 0..r {
        let base = j * k;
        for a in 0..k {
            for b in a + 1..k {
                edges.push((base + a, base + b));
            }
        }
    }
    Ok(Graph::from_edge_list(r * k, &edges).expect("generated pairs are valid"))
}
