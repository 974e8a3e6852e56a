//! Brute-force references shared by the integration tests.
#![allow(dead_code)]

use gammagraphs::Graph;

/// Floyd-Warshall distances, `u32::MAX` for unreachable pairs.
pub fn distances(g: &Graph) -> Vec<Vec<u32>> {
    let n = g.vertex_count();
    let mut d = vec![vec![u32::MAX; n]; n];
    for (u, row) in d.iter_mut().enumerate() {
        row[u] = 0;
        for v in g.neighbors(u).iter() {
            row[v] = 1;
        }
    }
    for m in 0..n {
        for u in 0..n {
            for v in 0..n {
                let via = d[u][m].saturating_add(d[m][v]);
                if via < d[u][v] {
                    d[u][v] = via;
                }
            }
        }
    }
    d
}

/// Every subset of the vertex set tested directly; returns the minimum size
/// and all dominating sets of that size in lexicographic order.
pub fn brute_min_dominating(g: &Graph, d: u32) -> (usize, Vec<Vec<usize>>) {
    let n = g.vertex_count();
    let dist = distances(g);
    let mut best = n + 1;
    let mut sets: Vec<Vec<usize>> = Vec::new();
    for mask in 1u32..(1 << n) {
        let size = mask.count_ones() as usize;
        if size > best {
            continue;
        }
        let dominated = (0..n).all(|v| (0..n).any(|s| mask >> s & 1 == 1 && dist[s][v] <= d));
        if !dominated {
            continue;
        }
        if size < best {
            best = size;
            sets.clear();
        }
        sets.push((0..n).filter(|&s| mask >> s & 1 == 1).collect());
    }
    sets.sort();
    (best, sets)
}

/// All `k`-subsets of `0..n` as bitmasks.
pub fn k_subset_masks(n: usize, k: usize) -> Vec<u32> {
    (0u32..(1 << n)).filter(|m| m.count_ones() as usize == k).collect()
}

/// Whether some assignment of distinct `k`-subsets of a `universe`-symbol
/// set to the vertices satisfies the adjacency rule.
pub fn brute_labellable(g: &Graph, k: usize, universe: usize) -> bool {
    let n = g.vertex_count();
    let sets = k_subset_masks(universe, k);
    let mut chosen = vec![0u32; n];
    fn go(g: &Graph, k: usize, sets: &[u32], chosen: &mut Vec<u32>, v: usize) -> bool {
        if v == chosen.len() {
            return true;
        }
        for &s in sets {
            let ok = (0..v).all(|u| {
                let shared = (s & chosen[u]).count_ones() as usize;
                shared != k && g.has_edge(u, v) == (shared + 1 == k)
            });
            if ok {
                chosen[v] = s;
                if go(g, k, sets, chosen, v + 1) {
                    return true;
                }
            }
        }
        false
    }
    go(g, k, &sets, &mut chosen, 0)
}

/// Random graph with each edge present with probability `p`.
pub fn random_graph(rng: &mut impl rand::Rng, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for v in 1..n {
        for u in 0..v {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

/// Induced paths `(end, middle, end)` on three vertices.
pub fn induced_paths(g: &Graph) -> Vec<(usize, usize, usize)> {
    let n = g.vertex_count();
    let mut out = Vec::new();
    for m in 0..n {
        for a in 0..n {
            for b in a + 1..n {
                if a != m && b != m && g.has_edge(a, m) && g.has_edge(b, m) && !g.has_edge(a, b) {
                    out.push((a, m, b));
                }
            }
        }
    }
    out
}

pub fn triangles(g: &Graph) -> Vec<[usize; 3]> {
    let n = g.vertex_count();
    let mut out = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                if g.has_edge(a, b) && g.has_edge(a, c) && g.has_edge(b, c) {
                    out.push([a, b, c]);
                }
            }
        }
    }
    out
}

/// Induced copies of `K_4 - e` as the two triangles sharing the edge `{x, y}`.
pub fn diamonds(g: &Graph) -> Vec<([usize; 3], [usize; 3])> {
    let n = g.vertex_count();
    let mut out = Vec::new();
    for x in 0..n {
        for y in x + 1..n {
            if !g.has_edge(x, y) {
                continue;
            }
            for a in 0..n {
                for b in a + 1..n {
                    let fresh = ![x, y].contains(&a) && ![x, y].contains(&b);
                    if fresh
                        && !g.has_edge(a, b)
                        && [a, b].iter().all(|&t| g.has_edge(t, x) && g.has_edge(t, y))
                    {
                        out.push(([x, y, a], [x, y, b]));
                    }
                }
            }
        }
    }
    out
}
