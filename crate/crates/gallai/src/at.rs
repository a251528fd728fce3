//! Eulerian subgraph parity counts, the graph-polynomial coefficient
//! oracle, and the orientation whose census certifies list colorability.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, Orientation};
use crate::structure::{find_witness_cycle, spanning_ordering, CycleWitness, VertexOrdering};

/// Exhaustive census capacity: at most `2^24` edge subsets.
pub const CENSUS_EDGE_BOUND: usize = 24;

/// Polynomial expansion capacity.
pub const POLYNOMIAL_EDGE_BOUND: usize = 14;

/// Counts of even and odd Eulerian edge subsets of an orientation. The
/// empty subset is Eulerian and even, so `even_count >= 1` always.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct EulerianCensus {
    pub even_count: u64,
    pub odd_count: u64,
    pub difference: i64,
    pub edge_subsets_examined: u64,
}

/// Everything produced while building the certifying orientation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrientationReport {
    pub orientation: Orientation,
    pub min_out_degree: usize,
    pub in_degree_per_vertex: Vec<usize>,
    pub census: EulerianCensus,
    pub witness: CycleWitness,
    pub ordering: VertexOrdering,
}

/// Enumerates every edge subset and counts those in which each vertex has
/// equal in- and out-degree, split by subset-size parity.
///
/// Subsets are walked in Gray-code order so each step toggles one edge and
/// the balance check is O(1) per subset.
pub fn eulerian_census(orientation: &Orientation) -> Result<EulerianCensus> {
    eulerian_census_with_bound(orientation, CENSUS_EDGE_BOUND)
}

pub fn eulerian_census_with_bound(
    orientation: &Orientation,
    edge_bound: usize,
) -> Result<EulerianCensus> {
    let m = orientation.edge_count();
    if m > edge_bound {
        return Err(Error::Capacity(format!(
            "census enumeration needs 2^{m} subsets, bound is 2^{edge_bound}"
        )));
    }
    let n = orientation.base().vertex_count();
    let edges = orientation.directed_edges();

    // diff[v] = in-degree minus out-degree of v within the current subset.
    let mut diff = vec![0i32; n];
    let mut unbalanced = 0usize;
    let mut in_subset = vec![false; m];
    let mut size = 0usize;
    let mut even = 0u64;
    let mut odd = 0u64;

    let total: u64 = 1u64 << m;
    for code in 0..total {
        if code > 0 {
            let bit = code.trailing_zeros() as usize;
            let (t, h) = edges[bit];
            let sign: i32 = if in_subset[bit] { -1 } else { 1 };
            in_subset[bit] = !in_subset[bit];
            size = if sign == 1 { size + 1 } else { size - 1 };
            for (v, delta) in [(h as usize, sign), (t as usize, -sign)] {
                let before = diff[v];
                diff[v] = before + delta;
                if before == 0 {
                    unbalanced += 1;
                } else if diff[v] == 0 {
                    unbalanced -= 1;
                }
            }
        }
        if unbalanced == 0 {
            if size.is_multiple_of(2) {
                even += 1;
            } else {
                odd += 1;
            }
        }
    }

    Ok(EulerianCensus {
        even_count: even,
        odd_count: odd,
        difference: even as i64 - odd as i64,
        edge_subsets_examined: total,
    })
}

/// Expands the product over directed edges `(t, h)` of `(x_t - x_h)` and
/// returns the exact coefficient of the monomial in which each vertex `v`
/// appears with exponent equal to its in-degree.
///
/// This is an oracle independent of the census enumeration; only the
/// absolute values of the two quantities are guaranteed to agree.
pub fn polynomial_coefficient(orientation: &Orientation) -> Result<i64> {
    polynomial_coefficient_with_bound(orientation, POLYNOMIAL_EDGE_BOUND)
}

pub fn polynomial_coefficient_with_bound(
    orientation: &Orientation,
    edge_bound: usize,
) -> Result<i64> {
    let m = orientation.edge_count();
    if m > edge_bound {
        return Err(Error::Capacity(format!(
            "polynomial expansion has 2^{m} terms, bound is 2^{edge_bound}"
        )));
    }
    let target = orientation.in_degrees();
    let n = orientation.base().vertex_count();
    let edges = orientation.directed_edges();

    fn expand(
        edges: &[(u32, u32)],
        idx: usize,
        exponents: &mut [usize],
        target: &[usize],
        sign: i64,
    ) -> i64 {
        if idx == edges.len() {
            return sign;
        }
        let (t, h) = edges[idx];
        let mut total = 0i64;
        // pick x_t (coefficient +1)
        if exponents[t as usize] < target[t as usize] {
            exponents[t as usize] += 1;
            total += expand(edges, idx + 1, exponents, target, sign);
            exponents[t as usize] -= 1;
        }
        // pick -x_h
        if exponents[h as usize] < target[h as usize] {
            exponents[h as usize] += 1;
            total += expand(edges, idx + 1, exponents, target, -sign);
            exponents[h as usize] -= 1;
        }
        total
    }

    let mut exponents = vec![0usize; n];
    Ok(expand(edges, 0, &mut exponents, &target, 1))
}

/// True iff the even and odd Eulerian subgraph counts differ.
pub fn verify_at_condition(orientation: &Orientation) -> Result<bool> {
    Ok(eulerian_census(orientation)?.difference != 0)
}

/// Builds the orientation certifying list degree colorability of a
/// connected non-Gallai-tree graph:
///
/// 1. find a witness cycle `C` (even, at most one chord),
/// 2. contract `C` to a vertex `w` and take the breadth-first predecessor
///    ordering of the contracted graph rooted at `w`,
/// 3. expand `w` back into the vertices of `C` in canonical cyclic order,
/// 4. orient the edges of `C` cyclically and every other edge (including
///    the chord) from the later ordering position to the earlier one.
///
/// Every vertex ends up with an out-going edge and the Eulerian census has
/// a nonzero difference; both are asserted before returning.
pub fn build_brooks_orientation(graph: &Graph) -> Result<OrientationReport> {
    let witness = find_witness_cycle(graph)?;
    let cycle_set = witness.vertex_set();
    let (contracted, merged, _) = graph.contract_set(cycle_set)?;
    let contracted_ordering = spanning_ordering(&contracted, merged)?;

    // Rebuild the ordering on the original graph, expanding the merged
    // vertex into the witness cycle. The contraction puts outside vertices
    // first in increasing id order, so position i < merged maps back to the
    // i-th vertex outside the cycle.
    let outside: Vec<usize> = (0..graph.vertex_count())
        .filter(|&v| !cycle_set.contains(v))
        .collect();
    let mut order: Vec<usize> = Vec::with_capacity(graph.vertex_count());
    for &v in &contracted_ordering.order {
        if v == merged {
            order.extend(witness.cycle.iter().copied());
        } else {
            order.push(outside[v]);
        }
    }
    let ordering = VertexOrdering {
        root: order[0],
        order,
    };
    ordering.validate(graph)?;

    let mut pos = vec![0usize; graph.vertex_count()];
    for (i, &v) in ordering.order.iter().enumerate() {
        pos[v] = i;
    }
    let len = witness.cycle.len();
    let mut cycle_succ = vec![usize::MAX; graph.vertex_count()];
    for i in 0..len {
        cycle_succ[witness.cycle[i]] = witness.cycle[(i + 1) % len];
    }

    let directed = graph
        .edges()
        .iter()
        .map(|&(u, v)| {
            let (u, v) = (u as usize, v as usize);
            // cycle edges follow the cycle; everything else, the chord
            // included, points from later to earlier in the ordering
            if cycle_succ[u] == v {
                (u as u32, v as u32)
            } else if cycle_succ[v] == u || pos[u] < pos[v] {
                (v as u32, u as u32)
            } else {
                (u as u32, v as u32)
            }
        })
        .collect();
    let orientation = Orientation::new(graph.clone(), directed)?;

    let out_degrees = orientation.out_degrees();
    let min_out_degree = out_degrees.iter().copied().min().unwrap_or(0);
    if min_out_degree < 1 {
        return Err(Error::Logic(
            "constructed orientation has a vertex with no out-going edge".into(),
        ));
    }
    let census = eulerian_census(&orientation)?;
    if census.difference == 0 {
        return Err(Error::Logic(
            "constructed orientation has equal even and odd Eulerian counts".into(),
        ));
    }

    Ok(OrientationReport {
        in_degree_per_vertex: orientation.in_degrees(),
        min_out_degree,
        census,
        witness,
        ordering,
        orientation,
    })
}
