//! Simple undirected graphs on dense vertex ids `0..n`, plus orientations
//! and bitmask vertex sets.
//!
//! Everything here is a plain immutable value. The library guarantees
//! correctness only up to [`MAX_VERTICES`] vertices; the exponential
//! routines elsewhere enforce tighter limits of their own.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Hard cap on the number of vertices, so vertex sets fit in a `u64`.
pub const MAX_VERTICES: usize = 64;

/// A subset of the vertices of some graph, stored as a bitmask.
#[derive(
    Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize,
)]
pub struct VertexSet(pub u64);

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut mask = 0u64;
        for v in iter {
            mask |= 1u64 << v;
        }
        VertexSet(mask)
    }
}

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub fn singleton(v: usize) -> Self {
        VertexSet(1u64 << v)
    }

    pub fn full(n: usize) -> Self {
        if n == 64 {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    pub fn contains(self, v: usize) -> bool {
        self.0 >> v & 1 == 1
    }

    pub fn insert(&mut self, v: usize) {
        self.0 |= 1u64 << v;
    }

    pub fn remove(&mut self, v: usize) {
        self.0 &= !(1u64 << v);
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_subset_of(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn union(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 | other.0)
    }

    pub fn intersection(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & other.0)
    }

    pub fn difference(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & !other.0)
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut rest = self.0;
        std::iter::from_fn(move || {
            if rest == 0 {
                None
            } else {
                let v = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(v)
            }
        })
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

/// Finite simple undirected graph.
///
/// Vertices are `0..vertex_count`; edges are stored sorted with `u < v` in
/// each pair, so equal graphs compare equal structurally. Symbolic vertex
/// names from the edge-list format survive as optional labels.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Graph {
    vertex_count: usize,
    edges: Vec<(u32, u32)>,
    labels: Option<Vec<String>>,
}

impl Graph {
    pub fn new(vertex_count: usize, edges: impl IntoIterator<Item = (u32, u32)>) -> Result<Self> {
        if vertex_count > MAX_VERTICES {
            return Err(Error::Capacity(format!(
                "graph has {vertex_count} vertices, limit is {MAX_VERTICES}"
            )));
        }
        let mut norm: Vec<(u32, u32)> = Vec::new();
        for (u, v) in edges {
            if u == v {
                return Err(Error::Validation(format!("loop at vertex {u}")));
            }
            if u as usize >= vertex_count || v as usize >= vertex_count {
                return Err(Error::Validation(format!(
                    "edge ({u}, {v}) has an endpoint outside 0..{vertex_count}"
                )));
            }
            norm.push((u.min(v), u.max(v)));
        }
        norm.sort_unstable();
        norm.dedup();
        Ok(Graph {
            vertex_count,
            edges: norm,
            labels: None,
        })
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.vertex_count {
            return Err(Error::Validation(format!(
                "{} labels for {} vertices",
                labels.len(),
                self.vertex_count
            )));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges as sorted `(u, v)` pairs with `u < v`.
    pub fn edges(&self) -> &[(u32, u32)] {
        &self.edges
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn label_of(&self, v: usize) -> String {
        match &self.labels {
            Some(labels) => labels[v].clone(),
            None => v.to_string(),
        }
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        let (a, b) = (u.min(v) as u32, u.max(v) as u32);
        self.edges.binary_search(&(a, b)).is_ok()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges
            .iter()
            .filter(|&&(a, b)| a as usize == v || b as usize == v)
            .count()
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0usize; self.vertex_count];
        for &(u, v) in &self.edges {
            deg[u as usize] += 1;
            deg[v as usize] += 1;
        }
        deg
    }

    pub fn max_degree(&self) -> usize {
        self.degrees().into_iter().max().unwrap_or(0)
    }

    /// Neighborhoods as bitmasks, indexed by vertex.
    pub fn adjacency_masks(&self) -> Vec<u64> {
        let mut adj = vec![0u64; self.vertex_count];
        for &(u, v) in &self.edges {
            adj[u as usize] |= 1u64 << v;
            adj[v as usize] |= 1u64 << u;
        }
        adj
    }

    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        let mut out: Vec<usize> = Vec::new();
        for &(a, b) in &self.edges {
            if a as usize == v {
                out.push(b as usize);
            } else if b as usize == v {
                out.push(a as usize);
            }
        }
        out.sort_unstable();
        out
    }

    pub fn all_vertices(&self) -> VertexSet {
        VertexSet::full(self.vertex_count)
    }

    /// True for the empty graph, single vertices, and any graph where every
    /// vertex is reachable from vertex 0.
    pub fn is_connected(&self) -> bool {
        if self.vertex_count <= 1 {
            return true;
        }
        let adj = self.adjacency_masks();
        let mut seen = 1u64;
        let mut frontier = 1u64;
        while frontier != 0 {
            let mut next = 0u64;
            let mut rest = frontier;
            while rest != 0 {
                let v = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                next |= adj[v];
            }
            frontier = next & !seen;
            seen |= next;
        }
        seen == self.all_vertices().0
    }

    /// Subgraph induced on `set`, with vertices renumbered densely.
    /// The returned mapping sends each new id to its old id, in increasing
    /// old-id order.
    pub fn induced_subgraph(&self, set: VertexSet) -> Result<(Graph, Vec<usize>)> {
        if !set.is_subset_of(self.all_vertices()) {
            return Err(Error::Validation(
                "vertex set contains vertices outside the graph".into(),
            ));
        }
        let old_ids = set.to_vec();
        let mut new_id = vec![usize::MAX; self.vertex_count];
        for (i, &v) in old_ids.iter().enumerate() {
            new_id[v] = i;
        }
        let edges = self
            .edges
            .iter()
            .filter(|&&(u, v)| set.contains(u as usize) && set.contains(v as usize))
            .map(|&(u, v)| (new_id[u as usize] as u32, new_id[v as usize] as u32));
        let graph = Graph::new(old_ids.len(), edges)?;
        Ok((graph, old_ids))
    }

    /// Contracts `set` to a single new vertex, merging parallel edges and
    /// dropping loops. Returns the contracted graph, the id of the merged
    /// vertex, and the map from old vertex ids to new ones.
    pub fn contract_set(&self, set: VertexSet) -> Result<(Graph, usize, Vec<usize>)> {
        if set.is_empty() {
            return Err(Error::Domain("cannot contract an empty vertex set".into()));
        }
        if !set.is_subset_of(self.all_vertices()) {
            return Err(Error::Validation(
                "vertex set contains vertices outside the graph".into(),
            ));
        }
        // Outside vertices keep their relative order; the merged vertex
        // comes last.
        let mut mapping = vec![usize::MAX; self.vertex_count];
        let mut next = 0usize;
        for (v, slot) in mapping.iter_mut().enumerate() {
            if !set.contains(v) {
                *slot = next;
                next += 1;
            }
        }
        let merged = next;
        for v in set.iter() {
            mapping[v] = merged;
        }
        let edges = self
            .edges
            .iter()
            .map(|&(u, v)| (mapping[u as usize] as u32, mapping[v as usize] as u32))
            .filter(|&(u, v)| u != v);
        let graph = Graph::new(merged + 1, edges)?;
        Ok((graph, merged, mapping))
    }
}

/// A direction assignment on every edge of a base graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Orientation {
    base: Graph,
    /// `(tail, head)` per base edge, aligned with `base.edges()`.
    directed: Vec<(u32, u32)>,
}

impl Orientation {
    /// Builds an orientation from arcs given in any order; each base edge
    /// must be covered exactly once.
    pub fn new(base: Graph, arcs: Vec<(u32, u32)>) -> Result<Self> {
        if arcs.len() != base.edge_count() {
            return Err(Error::Validation(format!(
                "{} directions for {} edges",
                arcs.len(),
                base.edge_count()
            )));
        }
        let mut by_edge = std::collections::HashMap::new();
        for &(t, h) in &arcs {
            if by_edge.insert((t.min(h), t.max(h)), (t, h)).is_some() {
                return Err(Error::Validation(format!(
                    "edge ({}, {}) directed more than once",
                    t.min(h),
                    t.max(h)
                )));
            }
        }
        let directed = base
            .edges()
            .iter()
            .map(|edge| {
                by_edge.get(edge).copied().ok_or_else(|| {
                    Error::Validation(format!(
                        "no direction given for edge ({}, {})",
                        edge.0, edge.1
                    ))
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Orientation { base, directed })
    }

    /// Orients each base edge `(u, v)` with `u < v` from `u` to `v` when the
    /// corresponding flag is false, and from `v` to `u` when true.
    pub fn from_flip_mask(base: Graph, mask: u64) -> Result<Self> {
        if base.edge_count() > 64 {
            return Err(Error::Capacity("too many edges for a flip mask".into()));
        }
        let directed = base
            .edges()
            .iter()
            .enumerate()
            .map(|(i, &(u, v))| if mask >> i & 1 == 1 { (v, u) } else { (u, v) })
            .collect();
        Orientation::new(base, directed)
    }

    pub fn base(&self) -> &Graph {
        &self.base
    }

    pub fn directed_edges(&self) -> &[(u32, u32)] {
        &self.directed
    }

    pub fn edge_count(&self) -> usize {
        self.directed.len()
    }

    pub fn in_degrees(&self) -> Vec<usize> {
        let mut indeg = vec![0usize; self.base.vertex_count()];
        for &(_, h) in &self.directed {
            indeg[h as usize] += 1;
        }
        indeg
    }

    pub fn out_degrees(&self) -> Vec<usize> {
        let mut outdeg = vec![0usize; self.base.vertex_count()];
        for &(t, _) in &self.directed {
            outdeg[t as usize] += 1;
        }
        outdeg
    }
}

/// Graph serialization format.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Format {
    EdgeList,
    Dimacs,
}

impl std::str::FromStr for Format {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "edgelist" | "edge_list" => Ok(Format::EdgeList),
            "dimacs" => Ok(Format::Dimacs),
            other => Err(Error::Validation(format!("unknown format '{other}'"))),
        }
    }
}

/// Parses the plain edge-list format: one "u v" pair per line, `#` comments
/// and blank lines ignored.
///
/// When every vertex name is a nonnegative integer, the integers are used
/// as vertex ids directly (so serialization round-trips to the identical
/// graph); otherwise vertices are numbered by first appearance and the
/// names are kept as labels.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut pairs: Vec<(String, String)> = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let tokens: Vec<&str> = line.split_whitespace().collect();
        if tokens.len() != 2 {
            return Err(Error::Parse {
                line: lineno + 1,
                msg: format!("expected two tokens, found {}", tokens.len()),
            });
        }
        if tokens[0] == tokens[1] {
            return Err(Error::Validation(format!(
                "loop at vertex '{}' (line {})",
                tokens[0],
                lineno + 1
            )));
        }
        pairs.push((tokens[0].to_string(), tokens[1].to_string()));
    }

    let numeric: Option<Vec<(u32, u32)>> = pairs
        .iter()
        .map(|(a, b)| match (a.parse::<u32>(), b.parse::<u32>()) {
            (Ok(u), Ok(v)) if (u as usize) < MAX_VERTICES && (v as usize) < MAX_VERTICES => {
                Some((u, v))
            }
            _ => None,
        })
        .collect();
    if let Some(edges) = numeric {
        let n = edges
            .iter()
            .map(|&(u, v)| u.max(v) as usize + 1)
            .max()
            .unwrap_or(0);
        return Graph::new(n, edges);
    }

    let mut names: Vec<String> = Vec::new();
    let mut index_of = std::collections::HashMap::<String, u32>::new();
    let mut edges: Vec<(u32, u32)> = Vec::new();
    for (a, b) in pairs {
        let mut ids = [0u32; 2];
        for (slot, token) in ids.iter_mut().zip([a, b]) {
            *slot = *index_of.entry(token.clone()).or_insert_with(|| {
                names.push(token);
                (names.len() - 1) as u32
            });
        }
        edges.push((ids[0], ids[1]));
    }
    let n = names.len();
    Graph::new(n, edges)?.with_labels(names)
}

/// Result of parsing a DIMACS .col file: the graph plus any non-fatal
/// irregularities found along the way.
#[derive(Debug, Clone)]
pub struct ParsedDimacs {
    pub graph: Graph,
    pub warnings: Vec<String>,
}

/// Parses DIMACS .col: `c` comments, one `p edge n m` line, then `e u v`
/// lines with 1-based vertex indices.
pub fn parse_dimacs(text: &str) -> Result<ParsedDimacs> {
    let mut n: Option<usize> = None;
    let mut declared_m = 0usize;
    let mut edges: Vec<(u32, u32)> = Vec::new();
    let mut warnings = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('c') {
            continue;
        }
        let tokens: Vec<&str> = line.split_whitespace().collect();
        match tokens[0] {
            "p" => {
                if n.is_some() {
                    return Err(Error::Parse {
                        line: lineno + 1,
                        msg: "duplicate 'p' line".into(),
                    });
                }
                if tokens.len() != 4 || tokens[1] != "edge" {
                    return Err(Error::Parse {
                        line: lineno + 1,
                        msg: "expected 'p edge n m'".into(),
                    });
                }
                n = Some(tokens[2].parse().map_err(|_| Error::Parse {
                    line: lineno + 1,
                    msg: format!("bad vertex count '{}'", tokens[2]),
                })?);
                declared_m = tokens[3].parse().map_err(|_| Error::Parse {
                    line: lineno + 1,
                    msg: format!("bad edge count '{}'", tokens[3]),
                })?;
            }
            "e" => {
                let n = n.ok_or(Error::Parse {
                    line: lineno + 1,
                    msg: "'e' line before 'p' line".into(),
                })?;
                if tokens.len() != 3 {
                    return Err(Error::Parse {
                        line: lineno + 1,
                        msg: "expected 'e u v'".into(),
                    });
                }
                let mut ids = [0usize; 2];
                for (slot, token) in ids.iter_mut().zip(&tokens[1..]) {
                    *slot = token.parse().map_err(|_| Error::Parse {
                        line: lineno + 1,
                        msg: format!("bad vertex '{token}'"),
                    })?;
                    if *slot < 1 || *slot > n {
                        return Err(Error::Parse {
                            line: lineno + 1,
                            msg: format!("vertex {slot} outside 1..={n}"),
                        });
                    }
                }
                if ids[0] == ids[1] {
                    return Err(Error::Validation(format!(
                        "loop at vertex {} (line {})",
                        ids[0],
                        lineno + 1
                    )));
                }
                edges.push((ids[0] as u32 - 1, ids[1] as u32 - 1));
            }
            other => {
                return Err(Error::Parse {
                    line: lineno + 1,
                    msg: format!("unknown line type '{other}'"),
                });
            }
        }
    }
    let n = n.ok_or(Error::Parse {
        line: text.lines().count().max(1),
        msg: "missing 'p' line".into(),
    })?;
    let graph = Graph::new(n, edges)?;
    if graph.edge_count() != declared_m {
        warnings.push(format!(
            "header declares {declared_m} edges, found {} distinct edges",
            graph.edge_count()
        ));
    }
    Ok(ParsedDimacs { graph, warnings })
}

/// Serializes a graph; the output re-parses to an equal graph. Edges are
/// emitted sorted so the representation is canonical.
pub fn serialize(graph: &Graph, format: Format) -> String {
    let mut out = String::new();
    match format {
        Format::EdgeList => {
            for &(u, v) in graph.edges() {
                let _ = writeln!(
                    out,
                    "{} {}",
                    graph.label_of(u as usize),
                    graph.label_of(v as usize)
                );
            }
            // Isolated vertices have no edge line; a comment records the
            // vertex count so parse(serialize(G)) = G only when none exist.
            if graph.edge_count() == 0 && graph.vertex_count() > 0 {
                let _ = writeln!(out, "# {} isolated vertices", graph.vertex_count());
            }
        }
        Format::Dimacs => {
            let _ = writeln!(out, "p edge {} {}", graph.vertex_count(), graph.edge_count());
            for &(u, v) in graph.edges() {
                let _ = writeln!(out, "e {} {}", u + 1, v + 1);
            }
        }
    }
    out
}

pub fn parse(text: &str, format: Format) -> Result<Graph> {
    match format {
        Format::EdgeList => parse_edge_list(text),
        Format::Dimacs => parse_dimacs(text).map(|p| p.graph),
    }
}
