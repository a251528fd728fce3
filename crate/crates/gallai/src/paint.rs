//! The marking/removal coloring game: Mr. Paint marks a nonempty set of
//! remaining vertices, Mrs. Correct removes an independent subset of the
//! marked vertices and pays one eraser on every marked vertex she does not
//! remove. Paint wins when a marked vertex can neither be removed nor pay;
//! Correct wins when the graph empties. The solver decides the game value
//! exactly by memoized minimax.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// Solver capacity: game trees are explored exhaustively.
pub const SOLVER_MAX_VERTICES: usize = 10;

/// Remaining vertices and per-vertex eraser counts of a game in progress.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GameState {
    pub host: Graph,
    pub remaining: VertexSet,
    /// Eraser counts, indexed by vertex; meaningful only on `remaining`.
    pub erasers: Vec<u32>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PaintMove {
    pub marked: VertexSet,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CorrectMove {
    pub removed: VertexSet,
}

/// How Mrs. Correct's options are enumerated.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SolveMode {
    /// Only maximal independent subsets of the marked set. Removing a
    /// larger independent set removes more and charges fewer erasers, so
    /// this is dominant; the equivalence with `Audit` is a tested property.
    Restricted,
    /// Every independent subset of the marked set, the empty set included.
    Audit,
}

/// All vertices remaining, erasers given per vertex.
pub fn initial_state(graph: &Graph, erasers: &[i64]) -> Result<GameState> {
    if erasers.len() != graph.vertex_count() {
        return Err(Error::Validation(format!(
            "{} eraser counts for {} vertices",
            erasers.len(),
            graph.vertex_count()
        )));
    }
    if let Some(v) = erasers.iter().position(|&e| e < 0) {
        return Err(Error::Validation(format!(
            "negative eraser count at vertex {v}"
        )));
    }
    Ok(GameState {
        host: graph.clone(),
        remaining: graph.all_vertices(),
        erasers: erasers.iter().map(|&e| e as u32).collect(),
    })
}

fn is_independent(adj: &[u64], set: VertexSet) -> bool {
    set.iter().all(|v| adj[v] & set.0 == 0)
}

/// Plays one round. Errors on an illegal paint move, a dependent removal
/// set, or a charged vertex without an eraser left; the last case is
/// exactly the position in which Mr. Paint wins.
pub fn apply_round(state: &GameState, paint: &PaintMove, correct: &CorrectMove) -> Result<GameState> {
    if paint.marked.is_empty() {
        return Err(Error::Domain("paint move must mark a nonempty set".into()));
    }
    if !paint.marked.is_subset_of(state.remaining) {
        return Err(Error::Domain(
            "paint move marks vertices that were already removed".into(),
        ));
    }
    if !correct.removed.is_subset_of(paint.marked) {
        return Err(Error::Domain(
            "removed set must be a subset of the marked set".into(),
        ));
    }
    let adj = state.host.adjacency_masks();
    if !is_independent(&adj, correct.removed) {
        return Err(Error::Domain("removed set is not independent".into()));
    }
    let charged = paint.marked.difference(correct.removed);
    if let Some(v) = charged.iter().find(|&v| state.erasers[v] == 0) {
        return Err(Error::Domain(format!(
            "vertex {v} is marked, not removed, and out of erasers"
        )));
    }
    let mut next = state.clone();
    next.remaining = state.remaining.difference(correct.removed);
    for v in charged.iter() {
        next.erasers[v] -= 1;
    }
    Ok(next)
}

struct Solver<'a> {
    adj: &'a [u64],
    mode: SolveMode,
    memo: HashMap<(u64, Vec<u32>), bool>,
    /// Independent (restricted: maximal independent) subsets per marked set.
    options: HashMap<u64, Vec<u64>>,
}

impl Solver<'_> {
    fn correct_options(&mut self, marked: u64) -> &[u64] {
        if !self.options.contains_key(&marked) {
            let mut list: Vec<u64> = Vec::new();
            // enumerate subsets of marked
            let mut sub = marked;
            loop {
                let set = VertexSet(sub);
                if is_independent(self.adj, set) {
                    let keep = match self.mode {
                        SolveMode::Audit => true,
                        SolveMode::Restricted => {
                            // maximal within marked: everything marked and
                            // unremoved has a neighbor in the removed set
                            VertexSet(marked & !sub)
                                .iter()
                                .all(|v| self.adj[v] & sub != 0)
                        }
                    };
                    if keep {
                        list.push(sub);
                    }
                }
                if sub == 0 {
                    break;
                }
                sub = (sub - 1) & marked;
            }
            // Larger removals first: they tend to win faster.
            list.sort_by_key(|s| std::cmp::Reverse(s.count_ones()));
            self.options.insert(marked, list);
        }
        &self.options[&marked]
    }

    fn wins(&mut self, remaining: u64, erasers: &[u32]) -> bool {
        if remaining == 0 {
            return true;
        }
        // Erasers a vertex could still spend are bounded by the number of
        // rounds left; under maximal play that is |remaining| - 1 for any
        // vertex that is eventually removed. Capping merges equivalent
        // states. Audit mode runs uncapped.
        let cap = match self.mode {
            SolveMode::Restricted => remaining.count_ones().saturating_sub(1),
            SolveMode::Audit => u32::MAX,
        };
        let key_erasers: Vec<u32> = erasers
            .iter()
            .enumerate()
            .map(|(v, &e)| {
                if remaining >> v & 1 == 1 {
                    e.min(cap)
                } else {
                    0
                }
            })
            .collect();
        let key = (remaining, key_erasers);
        if let Some(&cached) = self.memo.get(&key) {
            return cached;
        }
        let erasers = key.1.clone();

        let mut correct_always_answers = true;
        let mut marked = remaining;
        'paint: loop {
            // iterate nonempty subsets of remaining, largest first
            let options = self.correct_options(marked).to_vec();
            let mut answered = false;
            for removed in options {
                let charged = marked & !removed;
                if VertexSet(charged).iter().any(|v| erasers[v] == 0) {
                    continue;
                }
                let mut next_erasers = erasers.clone();
                for v in VertexSet(charged).iter() {
                    next_erasers[v] -= 1;
                }
                if self.wins(remaining & !removed, &next_erasers) {
                    answered = true;
                    break;
                }
            }
            if !answered {
                correct_always_answers = false;
                break 'paint;
            }
            marked = (marked - 1) & remaining;
            if marked == 0 {
                break;
            }
        }

        self.memo.insert(key, correct_always_answers);
        correct_always_answers
    }
}

/// Exact game value: does Mrs. Correct win from this state with optimal
/// play on both sides?
pub fn correct_wins(state: &GameState) -> Result<bool> {
    correct_wins_with_mode(state, SolveMode::Restricted)
}

pub fn correct_wins_with_mode(state: &GameState, mode: SolveMode) -> Result<bool> {
    if state.remaining.len() > SOLVER_MAX_VERTICES {
        return Err(Error::Capacity(format!(
            "game solver is limited to {SOLVER_MAX_VERTICES} remaining vertices"
        )));
    }
    let adj = state.host.adjacency_masks();
    let mut solver = Solver {
        adj: &adj,
        mode,
        memo: HashMap::new(),
        options: HashMap::new(),
    };
    Ok(solver.wins(state.remaining.0, &state.erasers))
}

/// `k`-paintability: every vertex starts with `k - 1` erasers.
pub fn is_k_paintable(graph: &Graph, k: i64) -> Result<bool> {
    is_k_paintable_with_mode(graph, k, SolveMode::Restricted)
}

pub fn is_k_paintable_with_mode(graph: &Graph, k: i64, mode: SolveMode) -> Result<bool> {
    if k <= 0 {
        return Err(Error::Domain(format!("paintability number must be positive, got {k}")));
    }
    let erasers = vec![k - 1; graph.vertex_count()];
    correct_wins_with_mode(&initial_state(graph, &erasers)?, mode)
}

/// Degree paintability: every vertex starts with `degree - 1` erasers.
pub fn is_degree_paintable(graph: &Graph) -> Result<bool> {
    is_degree_paintable_with_mode(graph, SolveMode::Restricted)
}

pub fn is_degree_paintable_with_mode(graph: &Graph, mode: SolveMode) -> Result<bool> {
    let degrees = graph.degrees();
    if let Some(v) = degrees.iter().position(|&d| d == 0) {
        return Err(Error::Domain(format!(
            "vertex {v} has degree 0 and cannot start with -1 erasers"
        )));
    }
    let erasers: Vec<i64> = degrees.iter().map(|&d| d as i64 - 1).collect();
    correct_wins_with_mode(&initial_state(graph, &erasers)?, mode)
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

    #[test]
    fn initial_state_examples() {
        let s = initial_state(&cycle(4), &[1, 1, 1, 1]).unwrap();
        assert_eq!(s.remaining.len(), 4);
        assert_eq!(s.erasers, vec![1, 1, 1, 1]);

        let k1 = initial_state(&complete(1), &[0]).unwrap();
        assert_eq!(k1.remaining.len(), 1);

        // degree - 1 erasers on K4 minus an edge
        let g = Graph::new(4, [(0, 1), (1, 2), (2, 3), (0, 3), (1, 3)]).unwrap();
        let erasers: Vec<i64> = g.degrees().iter().map(|&d| d as i64 - 1).collect();
        let s = initial_state(&g, &erasers).unwrap();
        assert_eq!(s.erasers, vec![1, 2, 1, 2]);
    }

    #[test]
    fn initial_state_rejects_negative() {
        assert!(initial_state(&cycle(3), &[1, -1, 1]).is_err());
    }

    #[test]
    fn apply_round_examples() {
        let s = initial_state(&cycle(4), &[1, 1, 1, 1]).unwrap();
        let next = apply_round(
            &s,
            &PaintMove {
                marked: VertexSet::from_iter([0, 1]),
            },
            &CorrectMove {
                removed: VertexSet::singleton(0),
            },
        )
        .unwrap();
        assert!(!next.remaining.contains(0));
        assert_eq!(next.erasers[1], 0);

        // removing an independent marked pair costs nothing
        let next = apply_round(
            &s,
            &PaintMove {
                marked: VertexSet::from_iter([0, 2]),
            },
            &CorrectMove {
                removed: VertexSet::from_iter([0, 2]),
            },
        )
        .unwrap();
        assert_eq!(next.erasers, vec![1, 1, 1, 1]);
        assert_eq!(next.remaining.len(), 2);
    }

    #[test]
    fn apply_round_rejects_exhausted_eraser() {
        let mut s = initial_state(&cycle(4), &[1, 1, 1, 1]).unwrap();
        s.erasers[0] = 0;
        let res = apply_round(
            &s,
            &PaintMove {
                marked: VertexSet::singleton(0),
            },
            &CorrectMove {
                removed: VertexSet::EMPTY,
            },
        );
        assert!(matches!(res, Err(Error::Domain(_))));
    }

    #[test]
    fn apply_round_rejects_dependent_removal() {
        let s = initial_state(&cycle(4), &[1, 1, 1, 1]).unwrap();
        let res = apply_round(
            &s,
            &PaintMove {
                marked: VertexSet::from_iter([0, 1]),
            },
            &CorrectMove {
                removed: VertexSet::from_iter([0, 1]),
            },
        );
        assert!(matches!(res, Err(Error::Domain(_))));
    }

    #[test]
    fn empty_state_wins() {
        let mut s = initial_state(&cycle(3), &[1, 1, 1]).unwrap();
        s.remaining = VertexSet::EMPTY;
        assert!(correct_wins(&s).unwrap());
    }

    #[test]
    fn cycle_paintability() {
        assert!(!is_k_paintable(&cycle(3), 2).unwrap());
        assert!(is_k_paintable(&cycle(3), 3).unwrap());
        assert!(is_k_paintable(&cycle(4), 2).unwrap());
        assert!(!is_k_paintable(&cycle(5), 2).unwrap());
        assert!(is_k_paintable(&cycle(5), 3).unwrap());
    }

    #[test]
    fn complete_graph_paintability() {
        assert!(!is_k_paintable(&complete(4), 3).unwrap());
        assert!(is_k_paintable(&complete(4), 4).unwrap());
    }

    #[test]
    fn degree_paintability_examples() {
        let k4_minus_e = Graph::new(4, [(0, 1), (1, 2), (2, 3), (0, 3), (1, 3)]).unwrap();
        assert!(is_degree_paintable(&k4_minus_e).unwrap());
        assert!(is_degree_paintable(&cycle(4)).unwrap());
        assert!(!is_degree_paintable(&cycle(5)).unwrap());
    }

    #[test]
    fn k_must_be_positive() {
        assert!(is_k_paintable(&cycle(3), 0).is_err());
    }

    #[test]
    fn restricted_matches_audit_small() {
        for (g, k) in [
            (cycle(3), 2),
            (cycle(3), 3),
            (cycle(4), 2),
            (complete(4), 3),
            (complete(4), 4),
        ] {
            assert_eq!(
                is_k_paintable_with_mode(&g, k, SolveMode::Restricted).unwrap(),
                is_k_paintable_with_mode(&g, k, SolveMode::Audit).unwrap(),
                "modes disagree for k={k}"
            );
        }
    }

    #[test]
    fn solver_capacity() {
        let g = cycle(11);
        assert!(matches!(is_k_paintable(&g, 2), Err(Error::Capacity(_))));
    }
}
