//! Cross-checks between the census, the polynomial coefficient, the
//! choosability oracle, and the paint-game solver.

mod common;

use common::*;
use gallai::at::{build_brooks_orientation, eulerian_census, polynomial_coefficient};
use gallai::coloring::{is_f_choosable, is_f_choosable_with, ChoosabilityOptions};
use gallai::graph::Orientation;
use gallai::paint::{
    correct_wins, correct_wins_with_mode, initial_state, is_k_paintable, is_k_paintable_with_mode,
    SolveMode,
};
use gallai::structure::is_gallai_tree;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[test]
fn census_agrees_with_definition_on_random_orientations() {
    let mut rng = ChaCha8Rng::seed_from_u64(31);
    for _ in 0..200 {
        let n = rng.gen_range(2..=7usize);
        let m = n * (n - 1) / 2;
        let mask = rng.gen::<u64>() & ((1 << m) - 1);
        let g = graph_from_mask(n, mask);
        let flips = rng.gen::<u64>() & ((1u64 << g.edge_count()) - 1);
        let d = Orientation::from_flip_mask(g, flips).unwrap();
        let census = eulerian_census(&d).unwrap();
        assert_eq!(
            (census.even_count, census.odd_count),
            census_by_definition(&d)
        );
        assert_eq!(
            census.difference,
            census.even_count as i64 - census.odd_count as i64
        );
    }
}

#[test]
fn census_is_invariant_under_relabeling() {
    let mut rng = ChaCha8Rng::seed_from_u64(37);
    for _ in 0..100 {
        let n = rng.gen_range(2..=6usize);
        let m = n * (n - 1) / 2;
        let mask = rng.gen::<u64>() & ((1 << m) - 1);
        let g = graph_from_mask(n, mask);
        let flips = rng.gen::<u64>() & ((1u64 << g.edge_count()) - 1);
        let d = Orientation::from_flip_mask(g.clone(), flips).unwrap();

        let mut perm: Vec<usize> = (0..n).collect();
        for i in (1..n).rev() {
            perm.swap(i, rng.gen_range(0..=i));
        }
        let h = apply_permutation(&g, &perm);
        let arcs: Vec<(u32, u32)> = d
            .directed_edges()
            .iter()
            .map(|&(t, hd)| (perm[t as usize] as u32, perm[hd as usize] as u32))
            .collect();
        let d2 = Orientation::new(h, arcs).unwrap();

        let c1 = eulerian_census(&d).unwrap();
        let c2 = eulerian_census(&d2).unwrap();
        assert_eq!((c1.even_count, c1.odd_count), (c2.even_count, c2.odd_count));
    }
}

#[test]
fn coefficient_magnitude_equals_census_difference() {
    let mut rng = ChaCha8Rng::seed_from_u64(41);
    for _ in 0..200 {
        let n = rng.gen_range(2..=6usize);
        let m = n * (n - 1) / 2;
        let mask = rng.gen::<u64>() & ((1 << m) - 1);
        let g = graph_from_mask(n, mask);
        if g.edge_count() > 14 {
            continue;
        }
        let flips = rng.gen::<u64>() & ((1u64 << g.edge_count()) - 1);
        let d = Orientation::from_flip_mask(g, flips).unwrap();
        let coef = polynomial_coefficient(&d).unwrap();
        let census = eulerian_census(&d).unwrap();
        assert_eq!(coef.unsigned_abs(), census.difference.unsigned_abs() as u64);
    }
}

#[test]
fn brooks_orientation_certificate_holds_up_to_n6() {
    // Exhaustive over isomorphism classes of connected non-Gallai graphs.
    for n in 4..=6usize {
        let mut seen = std::collections::HashSet::new();
        for mask in all_graph_masks(n) {
            if !seen.insert(canonical_mask(n, mask)) {
                continue;
            }
            let g = graph_from_mask(n, mask);
            if !g.is_connected() || is_gallai_tree(&g).unwrap() {
                continue;
            }
            let report = build_brooks_orientation(&g).unwrap();
            assert!(report.min_out_degree >= 1);
            assert_ne!(report.census.difference, 0);
            let shape = (report.census.even_count, report.census.odd_count);
            match report.witness.chord {
                None => assert_eq!(shape, (2, 0), "n={n} mask={mask}"),
                Some(_) => assert!(
                    shape == (3, 0) || shape == (2, 1),
                    "n={n} mask={mask} shape={shape:?}"
                ),
            }
            // in-degrees stay below the degree, so lists of size
            // in-degree + 1 fit inside degree-sized lists
            for (v, &indeg) in report.in_degree_per_vertex.iter().enumerate() {
                assert!(indeg < g.degree(v));
            }
        }
    }
}

#[test]
fn nonzero_difference_implies_in_degree_plus_one_choosable() {
    // the Alon-Tarsi direction, exhaustively at n = 4
    for mask in all_graph_masks(4) {
        let g = graph_from_mask(4, mask);
        let m = g.edge_count();
        for flips in 0u64..1 << m {
            let d = Orientation::from_flip_mask(g.clone(), flips).unwrap();
            let census = eulerian_census(&d).unwrap();
            if census.difference == 0 {
                continue;
            }
            let f: Vec<usize> = d.in_degrees().iter().map(|&x| x + 1).collect();
            assert!(
                is_f_choosable(&g, &f).unwrap(),
                "mask={mask} flips={flips}"
            );
        }
    }
}

#[test]
fn pruned_choosability_matches_audit_enumeration() {
    let mut rng = ChaCha8Rng::seed_from_u64(43);
    let audit = ChoosabilityOptions {
        symmetry_pruning: false,
    };
    let mut done = 0;
    while done < 40 {
        let n = rng.gen_range(2..=4usize);
        let m = n * (n - 1) / 2;
        let mask = rng.gen::<u64>() & ((1 << m) - 1);
        let g = graph_from_mask(n, mask);
        let f: Vec<usize> = (0..n).map(|_| rng.gen_range(1..=2usize)).collect();
        if f.iter().sum::<usize>() > 8 {
            continue;
        }
        assert_eq!(
            is_f_choosable(&g, &f).unwrap(),
            is_f_choosable_with(&g, &f, audit).unwrap(),
            "n={n} mask={mask} f={f:?}"
        );
        done += 1;
    }
}

#[test]
fn restricted_solver_matches_audit_solver_up_to_n5() {
    for n in 1..=5usize {
        let mut seen = std::collections::HashSet::new();
        for mask in all_graph_masks(n) {
            if !seen.insert(canonical_mask(n, mask)) {
                continue;
            }
            let g = graph_from_mask(n, mask);
            let eraser_choices: [Vec<i64>; 2] = [
                g.degrees().iter().map(|&d| d.saturating_sub(1) as i64).collect(),
                vec![1; n],
            ];
            for erasers in eraser_choices {
                let state = initial_state(&g, &erasers).unwrap();
                assert_eq!(
                    correct_wins(&state).unwrap(),
                    correct_wins_with_mode(&state, SolveMode::Audit).unwrap(),
                    "n={n} mask={mask} erasers={erasers:?}"
                );
            }
        }
    }
}

#[test]
fn extra_erasers_never_hurt() {
    let mut rng = ChaCha8Rng::seed_from_u64(47);
    for _ in 0..150 {
        let n = rng.gen_range(1..=5usize);
        let m = n * (n - 1) / 2;
        let mask = if m == 0 { 0 } else { rng.gen::<u64>() & ((1 << m) - 1) };
        let g = graph_from_mask(n, mask);
        let erasers: Vec<i64> = (0..n).map(|_| rng.gen_range(0..=2i64)).collect();
        let state = initial_state(&g, &erasers).unwrap();
        if !correct_wins(&state).unwrap() {
            continue;
        }
        let mut bumped = erasers.clone();
        bumped[rng.gen_range(0..n)] += 1;
        let state2 = initial_state(&g, &bumped).unwrap();
        assert!(correct_wins(&state2).unwrap(), "erasers={erasers:?}");
    }
}

#[test]
fn paintable_implies_choosable_up_to_n5() {
    for n in 2..=5usize {
        let mut seen = std::collections::HashSet::new();
        for mask in all_graph_masks(n) {
            if !seen.insert(canonical_mask(n, mask)) {
                continue;
            }
            let g = graph_from_mask(n, mask);
            for k in 2..=3i64 {
                if is_k_paintable(&g, k).unwrap() {
                    let f = vec![k as usize; n];
                    assert!(
                        is_f_choosable(&g, &f).unwrap(),
                        "n={n} mask={mask} k={k}"
                    );
                }
            }
        }
    }
}

#[test]
fn paint_solver_modes_agree_on_k_paintability() {
    let mut rng = ChaCha8Rng::seed_from_u64(53);
    for _ in 0..60 {
        let n = rng.gen_range(2..=5usize);
        let m = n * (n - 1) / 2;
        let mask = rng.gen::<u64>() & ((1 << m) - 1);
        let g = graph_from_mask(n, mask);
        let k = rng.gen_range(1..=3i64);
        assert_eq!(
            is_k_paintable(&g, k).unwrap(),
            is_k_paintable_with_mode(&g, k, SolveMode::Audit).unwrap()
        );
    }
}
