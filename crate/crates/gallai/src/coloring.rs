//! List colorings: complete backtracking search for a coloring from given
//! lists, an exhaustive for-all-lists choosability oracle for tiny graphs,
//! and a seeded randomized trial harness for degree- and max-degree lists.

use rand::prelude::*;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::structure::is_gallai_tree;

/// Choosability oracle capacity: exhaustive list enumeration.
pub const CHOOSABLE_MAX_VERTICES: usize = 6;
pub const CHOOSABLE_MAX_TOTAL_LIST_SIZE: usize = 20;

/// One color list per vertex, stored as bitmasks over colors `0..64`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ListAssignment {
    lists: Vec<u64>,
}

impl ListAssignment {
    pub fn from_colors(lists: Vec<Vec<u32>>) -> Result<Self> {
        let mut masks = Vec::with_capacity(lists.len());
        for (v, list) in lists.iter().enumerate() {
            if list.is_empty() {
                return Err(Error::Validation(format!("empty list for vertex {v}")));
            }
            let mut mask = 0u64;
            for &c in list {
                if c >= 64 {
                    return Err(Error::Validation(format!(
                        "color {c} outside the supported palette 0..64"
                    )));
                }
                mask |= 1 << c;
            }
            masks.push(mask);
        }
        Ok(ListAssignment { lists: masks })
    }

    pub fn from_masks(lists: Vec<u64>) -> Result<Self> {
        if lists.contains(&0) {
            return Err(Error::Validation("empty list".into()));
        }
        Ok(ListAssignment { lists })
    }

    pub fn len(&self) -> usize {
        self.lists.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lists.is_empty()
    }

    pub fn masks(&self) -> &[u64] {
        &self.lists
    }

    pub fn colors_of(&self, v: usize) -> Vec<u32> {
        (0..64).filter(|&c| self.lists[v] >> c & 1 == 1).collect()
    }
}

/// Complete backtracking list-coloring search over a set of "positions"
/// with bitmask adjacency and bitmask lists. Picks the position with the
/// fewest remaining colors, ties by index; colors tried in ascending order.
fn search_positions(pos_adj: &[u64], avail: &mut [u64], colored: u64, colors: &mut [u32]) -> bool {
    let k = pos_adj.len();
    if colored.count_ones() as usize == k {
        return true;
    }
    let mut pick = usize::MAX;
    let mut best = u32::MAX;
    for (i, &a) in avail.iter().enumerate() {
        if colored >> i & 1 == 0 {
            let count = a.count_ones();
            if count < best {
                best = count;
                pick = i;
            }
        }
    }
    if best == 0 {
        return false;
    }
    let mut options = avail[pick];
    while options != 0 {
        let c = options.trailing_zeros();
        options &= options - 1;
        colors[pick] = c;
        let mut touched = 0u64;
        let mut rest = pos_adj[pick] & !colored;
        while rest != 0 {
            let j = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            if avail[j] >> c & 1 == 1 {
                avail[j] &= !(1u64 << c);
                touched |= 1 << j;
            }
        }
        if search_positions(pos_adj, avail, colored | 1 << pick, colors) {
            return true;
        }
        let mut rest = touched;
        while rest != 0 {
            let j = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            avail[j] |= 1u64 << c;
        }
    }
    false
}

fn colorable_on(adj: &[u64], verts: &[usize], lists: &[u64]) -> Option<Vec<u32>> {
    let k = verts.len();
    if k == 0 {
        return Some(Vec::new());
    }
    let mut pos_of = std::collections::HashMap::new();
    for (i, &v) in verts.iter().enumerate() {
        pos_of.insert(v, i);
    }
    let mut pos_adj = vec![0u64; k];
    for (i, &v) in verts.iter().enumerate() {
        for (&u, &j) in pos_of.iter() {
            if adj[v] >> u & 1 == 1 {
                pos_adj[i] |= 1 << j;
            }
        }
    }
    let mut avail = lists.to_vec();
    let mut colors = vec![0u32; k];
    if search_positions(&pos_adj, &mut avail, 0, &mut colors) {
        Some(colors)
    } else {
        None
    }
}

/// Finds a proper coloring drawing each vertex's color from its list, or
/// `None` when none exists. The search is complete.
pub fn find_list_coloring(graph: &Graph, lists: &ListAssignment) -> Result<Option<Vec<u32>>> {
    if lists.len() != graph.vertex_count() {
        return Err(Error::Validation(format!(
            "{} lists for {} vertices",
            lists.len(),
            graph.vertex_count()
        )));
    }
    let adj = graph.adjacency_masks();
    let verts: Vec<usize> = (0..graph.vertex_count()).collect();
    Ok(colorable_on(&adj, &verts, lists.masks()))
}

/// Checks that a coloring is proper and drawn from the lists; used by tests
/// as a verifier independent of the search.
pub fn check_coloring(graph: &Graph, lists: &ListAssignment, colors: &[u32]) -> Result<()> {
    if colors.len() != graph.vertex_count() {
        return Err(Error::Validation("wrong number of colors".into()));
    }
    for (v, &c) in colors.iter().enumerate() {
        if lists.masks()[v] >> c & 1 == 0 {
            return Err(Error::Validation(format!(
                "vertex {v} colored {c}, not in its list"
            )));
        }
    }
    for &(u, v) in graph.edges() {
        if colors[u as usize] == colors[v as usize] {
            return Err(Error::Validation(format!(
                "adjacent vertices {u} and {v} share color {}",
                colors[u as usize]
            )));
        }
    }
    Ok(())
}

#[derive(Debug, Clone, Copy)]
pub struct ChoosabilityOptions {
    /// When false, runs the plain audit enumeration: every list assignment
    /// over the palette `{0..sum(f)-1}`, no canonicalization, no
    /// subset reductions. Exponentially slower; for cross-checks only.
    pub symmetry_pruning: bool,
}

impl Default for ChoosabilityOptions {
    fn default() -> Self {
        ChoosabilityOptions {
            symmetry_pruning: true,
        }
    }
}

pub fn is_f_choosable(graph: &Graph, f: &[usize]) -> Result<bool> {
    is_f_choosable_with(graph, f, ChoosabilityOptions::default())
}

/// True iff the graph can be properly colored from EVERY assignment of
/// lists with `|L(v)| = f(v)` over the palette `{0..sum(f)-1}`. A palette
/// of that size suffices since an assignment uses at most `sum(f)` distinct
/// colors and colorability is invariant under injective color renaming.
pub fn is_f_choosable_with(graph: &Graph, f: &[usize], opts: ChoosabilityOptions) -> Result<bool> {
    let n = graph.vertex_count();
    if f.len() != n {
        return Err(Error::Validation(format!(
            "{} list sizes for {n} vertices",
            f.len()
        )));
    }
    if f.contains(&0) {
        return Err(Error::Domain("list size 0 requested".into()));
    }
    let total: usize = f.iter().sum();
    if n > CHOOSABLE_MAX_VERTICES || total > CHOOSABLE_MAX_TOTAL_LIST_SIZE {
        return Err(Error::Capacity(format!(
            "choosability oracle is limited to {CHOOSABLE_MAX_VERTICES} vertices and \
             total list size {CHOOSABLE_MAX_TOTAL_LIST_SIZE} (got n={n}, total={total})"
        )));
    }
    if n == 0 {
        return Ok(true);
    }
    if opts.symmetry_pruning {
        let mut checker = Choosability::new(graph, f);
        Ok(!checker.bad(graph.all_vertices().0))
    } else {
        Ok(!audit_bad_assignment_exists(graph, f, total))
    }
}

/// `f(v) = degree(v)` choosability; rejects graphs with an isolated vertex,
/// whose required list would be empty.
pub fn is_degree_choosable(graph: &Graph) -> Result<bool> {
    let degrees = graph.degrees();
    if let Some(v) = degrees.iter().position(|&d| d == 0) {
        return Err(Error::Domain(format!(
            "vertex {v} has degree 0; a degree-sized list would be empty"
        )));
    }
    is_f_choosable(graph, &degrees)
}

/// Memoized search for a "bad" (uncolorable) list assignment, quantified
/// over induced subgraphs.
///
/// `bad(S)` holds iff some assignment with `|L(v)| = f(v)` on `G[S]` is
/// uncolorable. Three exact reductions keep the enumeration small:
///
/// * components: an assignment is bad iff it is bad on some component;
/// * stripping: a vertex with `f(v)` larger than its degree inside `G[S]`
///   can always be colored last, so `bad(S) = bad(S - v)`;
/// * minimality: a bad assignment with a color private to one list stays
///   bad after deleting that vertex, so at `S` itself only assignments in
///   which every color appears in at least two lists need enumerating,
///   and those are generated once per color-renaming class.
struct Choosability<'a> {
    adj: Vec<u64>,
    f: &'a [usize],
    memo: std::collections::HashMap<u64, bool>,
}

impl<'a> Choosability<'a> {
    fn new(graph: &Graph, f: &'a [usize]) -> Self {
        Choosability {
            adj: graph.adjacency_masks(),
            f,
            memo: std::collections::HashMap::new(),
        }
    }

    fn component_of(&self, start: usize, within: u64) -> u64 {
        let mut seen = 1u64 << start;
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0u64;
            let mut rest = frontier;
            while rest != 0 {
                let v = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                next |= self.adj[v] & within;
            }
            frontier = next & !seen;
            seen |= next;
        }
        seen
    }

    fn bad(&mut self, set: u64) -> bool {
        if set == 0 {
            return false;
        }
        if let Some(&cached) = self.memo.get(&set) {
            return cached;
        }
        let result = self.bad_uncached(set);
        self.memo.insert(set, result);
        result
    }

    fn bad_uncached(&mut self, set: u64) -> bool {
        let first = set.trailing_zeros() as usize;
        let comp = self.component_of(first, set);
        if comp != set {
            return self.bad(comp) || self.bad(set & !comp);
        }
        let mut rest = set;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            if self.f[v] > (self.adj[v] & set).count_ones() as usize {
                return self.bad(set & !(1u64 << v));
            }
        }
        let mut rest = set;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            if self.bad(set & !(1u64 << v)) {
                return true;
            }
        }
        self.bad_core_assignment_exists(set)
    }

    /// Enumerates, up to color renaming, the assignments on `G[set]` in
    /// which every color appears in at least two lists, and reports whether
    /// any of them is uncolorable.
    fn bad_core_assignment_exists(&self, set: u64) -> bool {
        let mut verts: Vec<usize> = (0..64).filter(|&v| set >> v & 1 == 1).collect();
        // Larger lists first: the canonical first list is then as large as
        // possible and singleton pruning bites earlier.
        verts.sort_by_key(|&v| (std::cmp::Reverse(self.f[v]), v));
        let k = verts.len();
        let mut suffix = vec![0usize; k + 1];
        for i in (0..k).rev() {
            suffix[i] = suffix[i + 1] + self.f[verts[i]];
        }
        let total = suffix[0];
        let mut state = CoreEnum {
            adj: &self.adj,
            f: self.f,
            verts: &verts,
            suffix: &suffix,
            lists: vec![0u64; k],
            occurrences: vec![0u8; total + 1],
            singles: 0,
            used: 0,
        };
        state.recurse(0)
    }
}

struct CoreEnum<'a> {
    adj: &'a [u64],
    f: &'a [usize],
    verts: &'a [usize],
    suffix: &'a [usize],
    lists: Vec<u64>,
    occurrences: Vec<u8>,
    singles: usize,
    used: usize,
}

impl CoreEnum<'_> {
    fn add_color(&mut self, c: usize) {
        self.occurrences[c] += 1;
        match self.occurrences[c] {
            1 => self.singles += 1,
            2 => self.singles -= 1,
            _ => {}
        }
    }

    fn remove_color(&mut self, c: usize) {
        match self.occurrences[c] {
            1 => self.singles -= 1,
            2 => self.singles += 1,
            _ => {}
        }
        self.occurrences[c] -= 1;
    }

    fn recurse(&mut self, i: usize) -> bool {
        if i == self.verts.len() {
            if self.singles != 0 {
                return false;
            }
            return colorable_on(self.adj, self.verts, &self.lists).is_none();
        }
        let fv = self.f[self.verts[i]];
        // Reused colors first, so assignments with few colors (identical
        // lists in particular) are tried early.
        for reused in (0..=fv.min(self.used)).rev() {
            let fresh = fv - reused;
            for reused_mask in k_subset_masks(self.used, reused) {
                let mut mask = reused_mask;
                for b in 0..fresh {
                    mask |= 1 << (self.used + b);
                }
                let saved_used = self.used;
                self.lists[i] = mask;
                let mut bits = mask;
                while bits != 0 {
                    let c = bits.trailing_zeros() as usize;
                    bits &= bits - 1;
                    self.add_color(c);
                }
                self.used += fresh;
                // Every singleton color still needs a second occurrence in
                // the remaining lists.
                let viable = self.singles <= self.suffix[i + 1];
                if viable && self.recurse(i + 1) {
                    return true;
                }
                let mut bits = mask;
                while bits != 0 {
                    let c = bits.trailing_zeros() as usize;
                    bits &= bits - 1;
                    self.remove_color(c);
                }
                self.used = saved_used;
            }
        }
        false
    }
}

/// All `k`-subsets of `{0..m-1}` as bitmasks, in lexicographic order.
fn k_subset_masks(m: usize, k: usize) -> Vec<u64> {
    if k > m {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut combo: Vec<usize> = (0..k).collect();
    loop {
        out.push(combo.iter().fold(0u64, |acc, &c| acc | 1 << c));
        let mut j = k;
        loop {
            if j == 0 {
                return out;
            }
            j -= 1;
            if combo[j] < m - (k - j) {
                combo[j] += 1;
                for l in j + 1..k {
                    combo[l] = combo[l - 1] + 1;
                }
                break;
            }
        }
    }
}

/// Plain audit enumeration: every assignment of `f(v)`-subsets of the
/// palette, checked one by one.
fn audit_bad_assignment_exists(graph: &Graph, f: &[usize], palette: usize) -> bool {
    let n = graph.vertex_count();
    let adj = graph.adjacency_masks();
    let verts: Vec<usize> = (0..n).collect();
    let mut lists = vec![0u64; n];

    fn rec(
        v: usize,
        n: usize,
        per_vertex: &[Vec<u64>],
        lists: &mut [u64],
        adj: &[u64],
        verts: &[usize],
    ) -> bool {
        if v == n {
            return colorable_on(adj, verts, lists).is_none();
        }
        for &mask in &per_vertex[v] {
            lists[v] = mask;
            if rec(v + 1, n, per_vertex, lists, adj, verts) {
                return true;
            }
        }
        false
    }

    let per_vertex: Vec<Vec<u64>> = f.iter().map(|&s| k_subset_masks(palette, s)).collect();
    rec(0, n, &per_vertex, &mut lists, &adj, &verts)
}

/// Which list size the randomized trial harness uses.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ListSizeMode {
    Degree,
    MaxDegree,
}

/// One failed trial: the assignment that could not be colored.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TrialFailure {
    pub trial: u64,
    pub lists: Vec<Vec<u32>>,
}

/// Outcome of a batch of randomized list-coloring trials.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TrialReport {
    pub trials: u64,
    pub failure_count: u64,
    pub failures: Vec<TrialFailure>,
    pub seed: u64,
    pub palette_size: u32,
    pub size_mode: ListSizeMode,
    /// Set when failures occurred on a connected non-Gallai-tree graph,
    /// where a proper coloring is guaranteed to exist: such a failure is a
    /// bug, not data.
    pub fatal: bool,
}

/// Runs `trials` independent uniformly random list assignments with
/// `|L(v)|` = degree(v) or the maximum degree, and attempts to color each.
/// Trial `i` draws from stream `i` of a ChaCha generator seeded with
/// `seed`, so reports are reproducible and order-independent.
pub fn random_degree_list_trial(
    graph: &Graph,
    size_mode: ListSizeMode,
    palette_size: u32,
    trials: u64,
    seed: u64,
) -> Result<TrialReport> {
    let sizes: Vec<usize> = match size_mode {
        ListSizeMode::Degree => graph.degrees(),
        ListSizeMode::MaxDegree => vec![graph.max_degree(); graph.vertex_count()],
    };
    if palette_size > 64 {
        return Err(Error::Capacity("palette limited to 64 colors".into()));
    }
    for (v, &s) in sizes.iter().enumerate() {
        if s == 0 {
            return Err(Error::Domain(format!(
                "vertex {v} would receive an empty list"
            )));
        }
        if s > palette_size as usize {
            return Err(Error::Domain(format!(
                "vertex {v} needs a list of size {s} but the palette has {palette_size} colors"
            )));
        }
    }

    let guaranteed = graph.is_connected() && !is_gallai_tree(graph).unwrap_or(true);
    let mut failures = Vec::new();
    for trial in 0..trials {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(trial);
        let lists: Vec<Vec<u32>> = sizes
            .iter()
            .map(|&s| {
                let mut colors: Vec<u32> = (0..palette_size).collect();
                colors.partial_shuffle(&mut rng, s);
                let mut chosen: Vec<u32> = colors[..s].to_vec();
                chosen.sort_unstable();
                chosen
            })
            .collect();
        let assignment = ListAssignment::from_colors(lists.clone())?;
        if find_list_coloring(graph, &assignment)?.is_none() {
            failures.push(TrialFailure { trial, lists });
        }
    }

    Ok(TrialReport {
        trials,
        failure_count: failures.len() as u64,
        fatal: guaranteed && !failures.is_empty(),
        failures,
        seed,
        palette_size,
        size_mode,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        Graph::new(n, (0..n).map(|i| (i as u32, ((i + 1) % n) as u32))).unwrap()
    }

    fn complete(n: usize) -> Graph {
        let mut edges = Vec::new();
        for u in 0..n as u32 {
            for v in u + 1..n as u32 {
                edges.push((u, v));
            }
        }
        Graph::new(n, edges).unwrap()
    }

    fn uniform_lists(n: usize, colors: Vec<u32>) -> ListAssignment {
        ListAssignment::from_colors(vec![colors; n]).unwrap()
    }

    #[test]
    fn even_cycle_two_colors() {
        let g = cycle(4);
        let lists = uniform_lists(4, vec![0, 1]);
        let coloring = find_list_coloring(&g, &lists).unwrap().unwrap();
        check_coloring(&g, &lists, &coloring).unwrap();
    }

    #[test]
    fn k4_needs_four_colors() {
        let g = complete(4);
        assert!(find_list_coloring(&g, &uniform_lists(4, vec![0, 1, 2]))
            .unwrap()
            .is_none());
    }

    #[test]
    fn c4_with_shifted_lists() {
        let g = cycle(4);
        let lists = ListAssignment::from_colors(vec![
            vec![0, 1],
            vec![1, 2],
            vec![2, 3],
            vec![3, 0],
        ])
        .unwrap();
        let coloring = find_list_coloring(&g, &lists).unwrap().unwrap();
        check_coloring(&g, &lists, &coloring).unwrap();
    }

    #[test]
    fn choosability_small_cycles() {
        assert!(!is_f_choosable(&cycle(3), &[2, 2, 2]).unwrap());
        assert!(is_f_choosable(&cycle(4), &[2, 2, 2, 2]).unwrap());
    }

    #[test]
    fn k4_not_degree_choosable() {
        assert!(!is_f_choosable(&complete(4), &[3, 3, 3, 3]).unwrap());
        assert!(!is_degree_choosable(&complete(4)).unwrap());
    }

    #[test]
    fn degree_choosable_examples() {
        assert!(is_degree_choosable(&cycle(4)).unwrap());
        assert!(!is_degree_choosable(&cycle(5)).unwrap());
        let bowtie = Graph::new(5, [(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)]).unwrap();
        assert!(!is_degree_choosable(&bowtie).unwrap());
    }

    #[test]
    fn degree_choosable_rejects_isolated_vertex() {
        let g = Graph::new(3, [(0, 1)]).unwrap();
        assert!(matches!(is_degree_choosable(&g), Err(Error::Domain(_))));
    }

    #[test]
    fn pruned_matches_audit_on_small_instances() {
        let audit = ChoosabilityOptions {
            symmetry_pruning: false,
        };
        let cases: Vec<(Graph, Vec<usize>)> = vec![
            (cycle(3), vec![2, 2, 2]),
            (cycle(4), vec![2, 2, 2, 2]),
            (complete(3), vec![2, 2, 2]),
            (complete(3), vec![3, 2, 2]),
            (Graph::new(4, [(0, 1), (1, 2), (2, 3)]).unwrap(), vec![1, 2, 2, 1]),
            (Graph::new(4, [(0, 1), (1, 2), (2, 3), (0, 3), (1, 3)]).unwrap(), vec![2, 3, 2, 3]),
        ];
        for (g, f) in cases {
            assert_eq!(
                is_f_choosable(&g, &f).unwrap(),
                is_f_choosable_with(&g, &f, audit).unwrap(),
                "disagreement on f={f:?}"
            );
        }
    }

    #[test]
    fn capacity_errors() {
        let g = complete(6);
        assert!(matches!(
            is_f_choosable(&g, &[4, 4, 4, 4, 4, 4]),
            Err(Error::Capacity(_))
        ));
    }

    #[test]
    fn trial_harness_zero_failures_on_k4_minus_edge() {
        let g = Graph::new(4, [(0, 1), (1, 2), (2, 3), (0, 3), (1, 3)]).unwrap();
        let report =
            random_degree_list_trial(&g, ListSizeMode::Degree, 6, 200, 7).unwrap();
        assert_eq!(report.failure_count, 0);
        assert!(!report.fatal);
    }

    #[test]
    fn trial_harness_is_reproducible() {
        let g = cycle(4);
        let a = random_degree_list_trial(&g, ListSizeMode::Degree, 5, 50, 42).unwrap();
        let b = random_degree_list_trial(&g, ListSizeMode::Degree, 5, 50, 42).unwrap();
        assert_eq!(a, b);
        let c = random_degree_list_trial(&g, ListSizeMode::Degree, 5, 50, 43).unwrap();
        assert!(a.seed != c.seed);
    }

    #[test]
    fn trial_harness_rejects_undersized_palette() {
        let g = complete(4);
        assert!(matches!(
            random_degree_list_trial(&g, ListSizeMode::Degree, 2, 10, 0),
            Err(Error::Domain(_))
        ));
    }
}
