//! Seeded random 2-graphs for property checks.
//!
//! Each graph has 1 to 3 vertices, at most 3 edges of each color between any
//! ordered pair of vertices, and no sinks or sources. The color-1 matrix is
//! drawn first; the color-2 matrix is drawn from those commuting with it, and
//! the squares pair blue-red paths with red-blue paths by a random bijection
//! for each pair of endpoints.

use num_bigint::BigInt;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::degree::Degree;
use crate::fixtures::disjoint_union;
use crate::graph::{KGraph, Presentation};

/// Graphs with more than this many paths of degree `(3,3)` are redrawn.
pub const MAX_PATHS_33: usize = 2000;

const NAMES: [&str; 3] = ["u", "v", "w"];

type Small = Vec<Vec<u32>>;

fn mul(a: &Small, b: &Small) -> Small {
    let n = a.len();
    (0..n)
        .map(|i| (0..n).map(|j| (0..n).map(|t| a[i][t] * b[t][j]).sum()).collect())
        .collect()
}

fn rows_and_cols_nonzero(m: &Small) -> bool {
    let n = m.len();
    (0..n).all(|i| m[i].iter().any(|&x| x > 0)) && (0..n).all(|j| (0..n).any(|i| m[i][j] > 0))
}

fn biased_entry(rng: &mut impl Rng) -> u32 {
    match rng.gen_range(0..10) {
        0..=3 => 0,
        4..=7 => 1,
        8 => 2,
        _ => 3,
    }
}

fn all_matrices(n: usize, max: u32) -> impl Iterator<Item = Small> {
    let cells = n * n;
    let base = max + 1;
    (0..base.pow(cells as u32)).map(move |mut code| {
        let mut m = vec![vec![0; n]; n];
        for c in 0..cells {
            m[c / n][c % n] = code % base;
            code /= base;
        }
        m
    })
}

/// Builds a 2-graph with the given coordinate matrices, or `None` if they do
/// not commute. `m[source][range]` counts edges.
pub fn graph_from_matrices(m1: &Small, m2: &Small, rng: &mut impl Rng) -> Option<KGraph> {
    let n = m1.len();
    if mul(m1, m2) != mul(m2, m1) {
        return None;
    }
    let mut p = Presentation::new(2);
    for name in &NAMES[..n] {
        p.vertex(*name);
    }
    // edges[color][source][range] holds names.
    let mut edges = vec![vec![vec![Vec::new(); n]; n]; 2];
    for (c, m) in [m1, m2].into_iter().enumerate() {
        let letter = if c == 0 { 'b' } else { 'r' };
        let mut counter = 0;
        for s in 0..n {
            for r in 0..n {
                for _ in 0..m[s][r] {
                    let id = format!("{letter}{counter}");
                    counter += 1;
                    p.edge(id.clone(), c + 1, NAMES[s], NAMES[r]);
                    edges[c][s][r].push(id);
                }
            }
        }
    }
    for s in 0..n {
        for r in 0..n {
            // [a, b] with a blue, b red: r(a) = r, s(a) = r(b) = x, s(b) = s.
            let mut blue_red = Vec::new();
            let mut red_blue = Vec::new();
            let (blue, red) = (&edges[0], &edges[1]);
            for (x, (blue_x, red_x)) in blue.iter().zip(red).enumerate() {
                for a in &blue_x[r] {
                    for b in &red[s][x] {
                        blue_red.push((a.clone(), b.clone()));
                    }
                }
                for c in &red_x[r] {
                    for d in &blue[s][x] {
                        red_blue.push((c.clone(), d.clone()));
                    }
                }
            }
            debug_assert_eq!(blue_red.len(), red_blue.len());
            red_blue.shuffle(rng);
            for ((a, b), (c, d)) in blue_red.iter().zip(&red_blue) {
                p.square(a, b, c, d);
            }
        }
    }
    Some(p.build().expect("commuting matrices give a valid 2-graph"))
}

/// One random graph, or `None` if the draw was rejected.
pub fn random_kgraph(rng: &mut impl Rng) -> Option<KGraph> {
    let n = rng.gen_range(1..=3);
    let m1: Small = (0..n).map(|_| (0..n).map(|_| biased_entry(rng)).collect()).collect();
    if !rows_and_cols_nonzero(&m1) {
        return None;
    }
    let max = if n == 3 { 2 } else { 3 };
    let m1m = m1.clone();
    let candidates: Vec<Small> = all_matrices(n, max)
        .filter(|m2| rows_and_cols_nonzero(m2) && mul(&m1m, m2) == mul(m2, &m1m))
        .collect();
    let m2 = candidates.choose(rng)?.clone();
    let g = graph_from_matrices(&m1, &m2, rng)?;
    let size = g.count_paths(&Degree::new(vec![3, 3])).ok()?;
    let total: BigInt = (0..size.rows()).flat_map(|i| size.row(i)).sum();
    (total <= BigInt::from(MAX_PATHS_33)).then_some(g)
}

/// `count` graphs drawn deterministically from `seed`.
pub fn corpus(seed: u64, count: usize) -> Vec<KGraph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        if let Some(g) = random_kgraph(&mut rng) {
            out.push(g);
        }
    }
    out
}

/// The corpus plus disjoint unions of consecutive members, which are never
/// strongly connected.
pub fn extended_corpus(seed: u64, count: usize) -> Vec<KGraph> {
    let base = corpus(seed, count);
    let mut out = base.clone();
    for pair in base.chunks(2).take(count / 4 + 1) {
        if let [g, h] = pair {
            if g.vertex_count() + h.vertex_count() <= 4 {
                out.push(disjoint_union(g, h));
            }
        }
    }
    out.push(crate::fixtures::t1_t1());
    out
}
