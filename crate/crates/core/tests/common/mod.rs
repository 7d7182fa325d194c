//! Brute-force oracles shared by the integration tests. They favour
//! obviousness over speed and share no code with the library searches.

#![allow(dead_code)]

use std::collections::HashSet;

use rand::rngs::StdRng;
use rand::Rng;
use rgk::canon::canonical_form;
use rgk::{CanonicalForm, Graph};

pub fn random_graph(rng: &mut StdRng, n: usize, density: f64) -> Graph {
    let mut g = Graph::empty(n).unwrap();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(density) {
                g.add_edge(u, v);
            }
        }
    }
    g
}

/// Try every injective map of pattern vertices into host vertices.
pub fn naive_embeds(pattern: &Graph, host: &Graph) -> bool {
    fn extend(p: &Graph, h: &Graph, map: &mut Vec<usize>, used: &mut Vec<bool>) -> bool {
        let v = map.len();
        if v == p.order() {
            return true;
        }
        for x in 0..h.order() {
            if used[x] || !(0..v).all(|u| !p.has_edge(u, v) || h.has_edge(map[u], x)) {
                continue;
            }
            used[x] = true;
            map.push(x);
            if extend(p, h, map, used) {
                return true;
            }
            map.pop();
            used[x] = false;
        }
        false
    }
    pattern.order() <= host.order() && extend(pattern, host, &mut Vec::new(), &mut vec![false; host.order()])
}

/// Every assignment of `k` colours, smallest `k` first.
pub fn naive_chromatic(g: &Graph) -> usize {
    let n = g.order();
    (1..=n.max(1))
        .find(|&k| {
            (0..k.pow(n as u32)).any(|code| {
                let colour: Vec<usize> = (0..n).map(|v| code / k.pow(v as u32) % k).collect();
                g.edges().all(|(u, v)| colour[u] != colour[v])
            })
        })
        .unwrap()
}

/// Minimum colour class size over proper colourings with exactly chi colours.
pub fn naive_surplus(g: &Graph) -> usize {
    let n = g.order();
    let k = naive_chromatic(g);
    (0..k.pow(n as u32))
        .filter_map(|code| {
            let colour: Vec<usize> = (0..n).map(|v| code / k.pow(v as u32) % k).collect();
            if !g.edges().all(|(u, v)| colour[u] != colour[v]) {
                return None;
            }
            let sizes: Vec<usize> = (0..k).map(|c| colour.iter().filter(|&&x| x == c).count()).collect();
            sizes.iter().all(|&s| s > 0).then(|| *sizes.iter().min().unwrap())
        })
        .min()
        .unwrap()
}

/// Free trees on `n` vertices: all edge sets of size `n - 1` that connect,
/// deduplicated by canonical form.
pub fn naive_trees(n: usize) -> HashSet<CanonicalForm> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
    let mut out = HashSet::new();
    let mut pick = Vec::new();
    fn walk(
        n: usize,
        pairs: &[(usize, usize)],
        start: usize,
        pick: &mut Vec<(usize, usize)>,
        out: &mut HashSet<CanonicalForm>,
    ) {
        if pick.len() + 1 == n {
            let g = Graph::from_edges(n, pick.iter().copied()).unwrap();
            if g.is_connected() {
                out.insert(canonical_form(&g).unwrap());
            }
            return;
        }
        for i in start..pairs.len() {
            pick.push(pairs[i]);
            walk(n, pairs, i + 1, pick, out);
            pick.pop();
        }
    }
    if n == 1 {
        out.insert(canonical_form(&Graph::empty(1).unwrap()).unwrap());
    } else {
        walk(n, &pairs, 0, &mut pick, &mut out);
    }
    out
}

/// `G ⊆ mK_2 + K_{k-1}(m)`: some vertex set `A` induces maximum degree at
/// most one and the rest is `(k-1)`-colourable.
pub fn matching_split_oracle(g: &Graph, k: usize) -> bool {
    let n = g.order();
    (0u32..1 << n).any(|a| {
        let inside: Vec<usize> = (0..n).filter(|&v| a >> v & 1 == 1).collect();
        let outside: Vec<usize> = (0..n).filter(|&v| a >> v & 1 == 0).collect();
        let low_degree = inside.iter().all(|&v| inside.iter().filter(|&&u| g.has_edge(u, v)).count() <= 1);
        if !low_degree {
            return false;
        }
        if outside.is_empty() {
            return true;
        }
        if k == 1 {
            return false;
        }
        naive_chromatic(&g.induced_subgraph(&outside).unwrap()) < k
    })
}
