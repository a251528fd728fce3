//! Shared helpers for the integration and acceptance suites: labeled graph
//! enumeration over edge masks of K_n, brute-force isomorphism
//! canonicalization, and oracles kept independent of the library's own
//! algorithms.

#![allow(dead_code)]

use gallai::graph::{Graph, Orientation};

/// The potential edges of K_n in lexicographic order; an edge mask indexes
/// into this list.
pub fn edge_slots(n: usize) -> Vec<(u32, u32)> {
    let mut slots = Vec::new();
    for u in 0..n as u32 {
        for v in u + 1..n as u32 {
            slots.push((u, v));
        }
    }
    slots
}

pub fn graph_from_mask(n: usize, mask: u64) -> Graph {
    let slots = edge_slots(n);
    let edges = slots
        .iter()
        .enumerate()
        .filter(|&(i, _)| mask >> i & 1 == 1)
        .map(|(_, &e)| e);
    Graph::new(n, edges).unwrap()
}

pub fn mask_of_graph(g: &Graph) -> u64 {
    let slots = edge_slots(g.vertex_count());
    let mut mask = 0u64;
    for (i, &(u, v)) in slots.iter().enumerate() {
        if g.has_edge(u as usize, v as usize) {
            mask |= 1 << i;
        }
    }
    mask
}

/// All labeled graphs on n vertices, as edge masks.
pub fn all_graph_masks(n: usize) -> impl Iterator<Item = u64> {
    let m = n * (n - 1) / 2;
    0..1u64 << m
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut items: Vec<usize> = (0..n).collect();
    fn heap(k: usize, items: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k <= 1 {
            out.push(items.clone());
            return;
        }
        for i in 0..k {
            heap(k - 1, items, out);
            if k.is_multiple_of(2) {
                items.swap(i, k - 1);
            } else {
                items.swap(0, k - 1);
            }
        }
    }
    heap(n, &mut items, &mut out);
    out
}

/// Smallest edge mask over all vertex relabelings: a canonical form for
/// isomorphism classes, brute force.
pub fn canonical_mask(n: usize, mask: u64) -> u64 {
    let slots = edge_slots(n);
    let mut slot_index = vec![vec![0usize; n]; n];
    for (i, &(u, v)) in slots.iter().enumerate() {
        slot_index[u as usize][v as usize] = i;
        slot_index[v as usize][u as usize] = i;
    }
    let mut best = u64::MAX;
    for perm in permutations(n) {
        let mut relabeled = 0u64;
        for (i, &(u, v)) in slots.iter().enumerate() {
            if mask >> i & 1 == 1 {
                relabeled |= 1 << slot_index[perm[u as usize]][perm[v as usize]];
            }
        }
        best = best.min(relabeled);
    }
    best
}

pub fn apply_permutation(g: &Graph, perm: &[usize]) -> Graph {
    let edges = g
        .edges()
        .iter()
        .map(|&(u, v)| (perm[u as usize] as u32, perm[v as usize] as u32));
    Graph::new(g.vertex_count(), edges).unwrap()
}

pub fn cycle(n: usize) -> Graph {
    Graph::new(n, (0..n).map(|i| (i as u32, ((i + 1) % n) as u32))).unwrap()
}

pub fn complete(n: usize) -> Graph {
    Graph::new(n, edge_slots(n)).unwrap()
}

pub fn k4_minus_edge() -> Graph {
    Graph::new(4, [(0, 1), (1, 2), (2, 3), (0, 3), (1, 3)]).unwrap()
}

pub fn petersen() -> Graph {
    let mut edges: Vec<(u32, u32)> = (0..5).map(|i| (i, (i + 1) % 5)).collect();
    edges.extend((0..5).map(|i| (i, i + 5)));
    edges.extend((0..5u32).map(|i| (i + 5, (i + 2) % 5 + 5)));
    Graph::new(10, edges).unwrap()
}

/// All simple cycles of a graph as vertex sets, by plain path backtracking.
fn all_cycle_vertex_sets(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.vertex_count();
    let mut cycles = Vec::new();
    let mut path: Vec<usize> = Vec::new();
    fn extend(
        g: &Graph,
        path: &mut Vec<usize>,
        used: &mut Vec<bool>,
        cycles: &mut Vec<Vec<usize>>,
    ) {
        let last = *path.last().unwrap();
        let start = path[0];
        for v in g.neighbors(last) {
            if v == start && path.len() >= 3 {
                cycles.push(path.clone());
            }
            if v > start && !used[v] {
                used[v] = true;
                path.push(v);
                extend(g, path, used, cycles);
                path.pop();
                used[v] = false;
            }
        }
    }
    for s in 0..n {
        let mut used = vec![false; n];
        used[s] = true;
        path.push(s);
        extend(g, &mut path, &mut used, &mut cycles);
        path.pop();
    }
    cycles
}

/// Independent Gallai-tree oracle: blocks computed by grouping edges that
/// share a simple cycle (union-find), bridges as their own blocks; each
/// block classified directly by edge count.
pub fn gallai_tree_by_definition(g: &Graph) -> bool {
    assert!(g.is_connected());
    let edges = g.edges();
    let edge_index = |u: usize, v: usize| {
        let key = (u.min(v) as u32, u.max(v) as u32);
        edges.binary_search(&key).unwrap()
    };
    let mut parent: Vec<usize> = (0..edges.len()).collect();
    fn find(parent: &mut Vec<usize>, x: usize) -> usize {
        if parent[x] != x {
            let root = find(parent, parent[x]);
            parent[x] = root;
        }
        parent[x]
    }
    for cyc in all_cycle_vertex_sets(g) {
        let first = edge_index(cyc[0], cyc[1]);
        for i in 0..cyc.len() {
            let e = edge_index(cyc[i], cyc[(i + 1) % cyc.len()]);
            let (a, b) = (find(&mut parent, first), find(&mut parent, e));
            parent[a] = b;
        }
    }
    let mut blocks: std::collections::HashMap<usize, Vec<usize>> = std::collections::HashMap::new();
    for i in 0..edges.len() {
        let root = find(&mut parent, i);
        blocks.entry(root).or_default().push(i);
    }
    for members in blocks.values() {
        let mut verts = std::collections::BTreeSet::new();
        for &i in members {
            verts.insert(edges[i].0 as usize);
            verts.insert(edges[i].1 as usize);
        }
        let k = verts.len();
        let m = members.len();
        let complete = m == k * (k - 1) / 2;
        let odd_cycle = m == k && k % 2 == 1 && k >= 3;
        if !complete && !odd_cycle {
            return false;
        }
    }
    true
}

/// Census by definition: iterate subsets, recount degrees from scratch.
pub fn census_by_definition(d: &Orientation) -> (u64, u64) {
    let m = d.edge_count();
    let n = d.base().vertex_count();
    let mut even = 0;
    let mut odd = 0;
    for subset in 0u64..1 << m {
        let mut diff = vec![0i64; n];
        for (i, &(t, h)) in d.directed_edges().iter().enumerate() {
            if subset >> i & 1 == 1 {
                diff[h as usize] += 1;
                diff[t as usize] -= 1;
            }
        }
        if diff.iter().all(|&x| x == 0) {
            if subset.count_ones() % 2 == 0 {
                even += 1;
            } else {
                odd += 1;
            }
        }
    }
    (even, odd)
}
