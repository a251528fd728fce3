//! Block structure of a graph: biconnected components, Gallai-tree
//! recognition, the even-cycle-with-at-most-one-chord witness, and the
//! predecessor ordering used to orient edges.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// Blocks (maximal 2-connected subgraphs, bridges, isolated vertices) and
/// cut vertices of a graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlockDecomposition {
    /// Vertex sets of the blocks, sorted by smallest contained vertex.
    pub blocks: Vec<Vec<usize>>,
    pub cut_vertices: Vec<usize>,
}

/// An even cycle together with its at most one chord, in canonical cyclic
/// order: the sequence starts at the smallest cycle vertex and runs in the
/// direction whose second vertex is smaller.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CycleWitness {
    pub cycle: Vec<usize>,
    pub chord: Option<(usize, usize)>,
}

impl CycleWitness {
    pub fn vertex_set(&self) -> VertexSet {
        VertexSet::from_iter(self.cycle.iter().copied())
    }

    pub fn len(&self) -> usize {
        self.cycle.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cycle.is_empty()
    }

    /// Checks the witness invariants against a host graph, independently of
    /// how the witness was produced.
    pub fn validate(&self, graph: &Graph) -> Result<()> {
        let len = self.cycle.len();
        if len < 4 || !len.is_multiple_of(2) {
            return Err(Error::Logic(format!(
                "witness cycle has length {len}, expected an even length >= 4"
            )));
        }
        for i in 0..len {
            let u = self.cycle[i];
            let v = self.cycle[(i + 1) % len];
            if !graph.has_edge(u, v) {
                return Err(Error::Logic(format!(
                    "consecutive witness vertices {u} and {v} are not adjacent"
                )));
            }
        }
        let (induced, _) = graph.induced_subgraph(self.vertex_set())?;
        let expected = len + usize::from(self.chord.is_some());
        if induced.edge_count() != expected {
            return Err(Error::Logic(format!(
                "witness induces {} edges, expected {expected}",
                induced.edge_count()
            )));
        }
        if let Some((a, b)) = self.chord {
            let pos_a = self.cycle.iter().position(|&v| v == a);
            let pos_b = self.cycle.iter().position(|&v| v == b);
            let (pa, pb) = match (pos_a, pos_b) {
                (Some(pa), Some(pb)) => (pa, pb),
                _ => {
                    return Err(Error::Logic(
                        "chord endpoint is not a cycle vertex".into(),
                    ))
                }
            };
            let gap = pa.abs_diff(pb);
            if gap <= 1 || gap >= len - 1 {
                return Err(Error::Logic(
                    "chord joins consecutive cycle vertices".into(),
                ));
            }
            if !graph.has_edge(a, b) {
                return Err(Error::Logic("stated chord is not an edge".into()));
            }
        }
        Ok(())
    }
}

/// A permutation of the vertices in which every vertex except the root has
/// an earlier neighbor.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexOrdering {
    pub order: Vec<usize>,
    pub root: usize,
}

impl VertexOrdering {
    pub fn validate(&self, graph: &Graph) -> Result<()> {
        let n = graph.vertex_count();
        if self.order.len() != n {
            return Err(Error::Logic("ordering is not a permutation".into()));
        }
        let mut seen = VertexSet::EMPTY;
        for &v in &self.order {
            if v >= n || seen.contains(v) {
                return Err(Error::Logic("ordering is not a permutation".into()));
            }
            seen.insert(v);
        }
        if self.order.first() != Some(&self.root) {
            return Err(Error::Logic("ordering does not start at its root".into()));
        }
        let adj = graph.adjacency_masks();
        let mut earlier = VertexSet::EMPTY;
        for &v in &self.order {
            if v != self.root && adj[v] & earlier.0 == 0 {
                return Err(Error::Logic(format!(
                    "vertex {v} has no earlier neighbor in the ordering"
                )));
            }
            earlier.insert(v);
        }
        Ok(())
    }
}

/// Biconnected components via DFS low-points. Bridges become 2-vertex
/// blocks and isolated vertices become singleton blocks, so every vertex is
/// in at least one block and every edge in exactly one.
pub fn block_decomposition(graph: &Graph) -> BlockDecomposition {
    let n = graph.vertex_count();
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); n];
    for &(u, v) in graph.edges() {
        adj[u as usize].push(v as usize);
        adj[v as usize].push(u as usize);
    }

    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0usize; n];
    let mut timer = 0usize;
    let mut edge_stack: Vec<(usize, usize)> = Vec::new();
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    let mut is_cut = vec![false; n];

    // Iterative DFS; each frame is (vertex, parent, next neighbor index).
    let mut stack: Vec<(usize, usize, usize)> = Vec::new();
    for root in 0..n {
        if disc[root] != usize::MAX {
            continue;
        }
        if adj[root].is_empty() {
            disc[root] = timer;
            timer += 1;
            blocks.push(vec![root]);
            continue;
        }
        disc[root] = timer;
        low[root] = timer;
        timer += 1;
        let mut root_children = 0usize;
        stack.push((root, usize::MAX, 0));
        while let Some(&mut (u, parent, ref mut idx)) = stack.last_mut() {
            if *idx < adj[u].len() {
                let v = adj[u][*idx];
                *idx += 1;
                if disc[v] == usize::MAX {
                    edge_stack.push((u, v));
                    disc[v] = timer;
                    low[v] = timer;
                    timer += 1;
                    if u == root {
                        root_children += 1;
                    }
                    stack.push((v, u, 0));
                } else if v != parent && disc[v] < disc[u] {
                    edge_stack.push((u, v));
                    low[u] = low[u].min(disc[v]);
                }
            } else {
                stack.pop();
                if let Some(&mut (p, _, _)) = stack.last_mut() {
                    low[p] = low[p].min(low[u]);
                    if low[u] >= disc[p] {
                        // p closes a block containing the subtree edge (p, u).
                        let mut members = VertexSet::EMPTY;
                        while let Some(&(a, b)) = edge_stack.last() {
                            if disc[a] >= disc[u] || (a, b) == (p, u) {
                                members.insert(a);
                                members.insert(b);
                                edge_stack.pop();
                                if (a, b) == (p, u) {
                                    break;
                                }
                            } else {
                                break;
                            }
                        }
                        blocks.push(members.to_vec());
                        if p != root {
                            is_cut[p] = true;
                        }
                    }
                }
            }
        }
        if root_children >= 2 {
            is_cut[root] = true;
        }
    }

    blocks.sort();
    let cut_vertices = (0..n).filter(|&v| is_cut[v]).collect();
    BlockDecomposition {
        blocks,
        cut_vertices,
    }
}

/// How a single block classifies under the Gallai-tree test.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BlockKind {
    /// Complete graph of any size; triangles land here, not in `OddCycle`.
    Complete,
    /// Chordless odd cycle of length >= 5.
    OddCycle,
    Other,
}

pub fn classify_block(graph: &Graph, block: &[usize]) -> Result<BlockKind> {
    let set = VertexSet::from_iter(block.iter().copied());
    let (induced, _) = graph.induced_subgraph(set)?;
    let k = induced.vertex_count();
    let m = induced.edge_count();
    if m == k * (k - 1) / 2 {
        return Ok(BlockKind::Complete);
    }
    if k >= 5 && k % 2 == 1 && m == k && induced.degrees().iter().all(|&d| d == 2) {
        // 2-regular with m = k inside a block, hence a single odd cycle.
        return Ok(BlockKind::OddCycle);
    }
    Ok(BlockKind::Other)
}

/// True iff every block of the (connected) graph is a complete graph or a
/// chordless odd cycle.
pub fn is_gallai_tree(graph: &Graph) -> Result<bool> {
    if !graph.is_connected() {
        return Err(Error::Domain(
            "Gallai-tree classification requires a connected graph".into(),
        ));
    }
    let decomposition = block_decomposition(graph);
    for block in &decomposition.blocks {
        if classify_block(graph, block)? == BlockKind::Other {
            return Ok(false);
        }
    }
    Ok(true)
}

/// A cycle is "bad" when its vertex set induces neither a complete graph
/// nor a chordless odd cycle.
fn cycle_is_bad(graph: &Graph, cycle: &[usize]) -> bool {
    let len = cycle.len();
    let set = VertexSet::from_iter(cycle.iter().copied());
    let m = graph
        .edges()
        .iter()
        .filter(|&&(u, v)| set.contains(u as usize) && set.contains(v as usize))
        .count();
    if m == len * (len - 1) / 2 {
        return false; // induces a complete graph
    }
    // m == len means the induced subgraph is exactly the cycle itself.
    !(m == len && len % 2 == 1)
}

/// Enumerates simple cycles of exact length `len` in canonical form (start
/// at the smallest cycle vertex, second vertex smaller than the last) and
/// returns the lexicographically smallest bad one, if any.
fn smallest_bad_cycle_of_length(graph: &Graph, within: &[usize], len: usize) -> Option<Vec<usize>> {
    let adj = graph.adjacency_masks();
    let allowed = VertexSet::from_iter(within.iter().copied());
    let mut best: Option<Vec<usize>> = None;

    fn extend(
        adj: &[u64],
        allowed: u64,
        path: &mut Vec<usize>,
        used: u64,
        len: usize,
        graph: &Graph,
        best: &mut Option<Vec<usize>>,
    ) {
        let last = *path.last().unwrap();
        let start = path[0];
        if path.len() == len {
            if adj[last] >> start & 1 == 1 && path[1] < path[len - 1] {
                if let Some(b) = best.as_ref() {
                    if path.as_slice() >= b.as_slice() {
                        return;
                    }
                }
                if cycle_is_bad(graph, path) {
                    *best = Some(path.clone());
                }
            }
            return;
        }
        let mut candidates = adj[last] & allowed & !used;
        // Only vertices larger than the start keep the form canonical.
        candidates &= !((1u64 << start) | ((1u64 << start) - 1));
        while candidates != 0 {
            let v = candidates.trailing_zeros() as usize;
            candidates &= candidates - 1;
            path.push(v);
            extend(adj, allowed, path, used | 1 << v, len, graph, best);
            path.pop();
        }
    }

    let mut starts = within.to_vec();
    starts.sort_unstable();
    for &s in &starts {
        let mut path = vec![s];
        extend(&adj, allowed.0, &mut path, 1 << s, len, graph, &mut best);
    }
    best
}

/// Finds an even cycle with at most one chord, induced, in a connected
/// graph that is not a Gallai tree.
///
/// The search picks the first block that is neither complete nor an odd
/// cycle and enumerates its cycles shortest-first, returning the canonical
/// smallest "bad" cycle; the witness invariants are re-checked before
/// returning.
pub fn find_witness_cycle(graph: &Graph) -> Result<CycleWitness> {
    if !graph.is_connected() {
        return Err(Error::Domain(
            "witness search requires a connected graph".into(),
        ));
    }
    let decomposition = block_decomposition(graph);
    let block = decomposition
        .blocks
        .iter()
        .find(|b| matches!(classify_block(graph, b), Ok(BlockKind::Other)))
        .ok_or_else(|| {
            Error::Domain("graph is a Gallai tree; no witness cycle exists".into())
        })?;

    for len in 3..=block.len() {
        if let Some(cycle) = smallest_bad_cycle_of_length(graph, block, len) {
            let set = VertexSet::from_iter(cycle.iter().copied());
            let (induced, back) = graph.induced_subgraph(set)?;
            let mut chord = None;
            let pos: std::collections::HashMap<usize, usize> =
                cycle.iter().enumerate().map(|(i, &v)| (v, i)).collect();
            for &(u, v) in induced.edges() {
                let (a, b) = (back[u as usize], back[v as usize]);
                let gap = pos[&a].abs_diff(pos[&b]);
                if gap != 1 && gap != len - 1 {
                    if chord.is_some() {
                        return Err(Error::Logic(
                            "shortest bad cycle carries more than one chord".into(),
                        ));
                    }
                    chord = Some((a.min(b), a.max(b)));
                }
            }
            let witness = CycleWitness { cycle, chord };
            witness.validate(graph)?;
            return Ok(witness);
        }
    }
    Err(Error::Logic(
        "no bad cycle found in a block that is neither complete nor an odd cycle".into(),
    ))
}

/// Breadth-first level ordering of a spanning tree rooted at `root`;
/// within a level vertices come in ascending id order.
pub fn spanning_ordering(graph: &Graph, root: usize) -> Result<VertexOrdering> {
    if root >= graph.vertex_count() {
        return Err(Error::Domain(format!("root {root} is not a vertex")));
    }
    if !graph.is_connected() {
        return Err(Error::Domain(
            "spanning ordering requires a connected graph".into(),
        ));
    }
    let adj = graph.adjacency_masks();
    let mut order = vec![root];
    let mut seen = VertexSet::singleton(root);
    let mut level = VertexSet::singleton(root);
    while !level.is_empty() {
        let mut next = 0u64;
        for v in level.iter() {
            next |= adj[v];
        }
        level = VertexSet(next).difference(seen);
        seen = seen.union(level);
        order.extend(level.iter()); // bitmask iteration is ascending
    }
    let ordering = VertexOrdering { order, root };
    ordering.validate(graph)?;
    Ok(ordering)
}
