mod common;

use proptest::prelude::*;
use rand::Rng;

use common::{random_matrix, tp_instance};
use sst_core::graph::random_graph;
use sst_core::tp::{
    chain_decomposition, check_laminar_recursion_property, check_recursion_property, equicolor_recursive,
    extended_clique_matrix, forest_representation, is_trivially_perfect, is_tu_determinant, is_tu_ghouila_houri,
    ordering_matrix, ForestRep, TuConfig, TuWitness,
};
use sst_core::{
    automorphism_generators, build_stringent_sst_table, ExtendedMatrix, Graph, OrbitRule, SstCliqueCut,
};

fn tu_both(m: &ExtendedMatrix) -> (bool, bool) {
    let cfg = TuConfig::default();
    (
        is_tu_determinant(m, &cfg).unwrap().is_tu,
        is_tu_ghouila_houri(m, &cfg).unwrap().is_tu,
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn forest_closure_reproduces_the_graph(seed in any::<u64>()) {
        let (parents, g) = tp_instance(seed, 16);
        let f = forest_representation(&g).unwrap();
        prop_assert_eq!(f.to_graph(), g.clone());
        // the peeled forest need not equal the generating one, but both
        // describe the same graph
        prop_assert_eq!(Graph::from_forest(&parents).unwrap(), g);
    }

    #[test]
    fn automorphism_orbits_split_into_equal_chains(seed in any::<u64>()) {
        let (_, g) = tp_instance(seed, 16);
        let f = forest_representation(&g).unwrap();
        let gens = automorphism_generators(&g).unwrap();
        for orbit in gens.orbits() {
            let chains = chain_decomposition(&f, &orbit.members).unwrap();
            for c in &chains {
                prop_assert!(g.is_clique(c));
            }
        }
    }

    #[test]
    fn path_disjoint_sets_are_stable_sets((seed, mask) in (any::<u64>(), any::<u16>())) {
        let (_, g) = tp_instance(seed, 12);
        let f = forest_representation(&g).unwrap();
        let set: Vec<usize> = (0..g.n()).filter(|&i| mask >> i & 1 == 1).collect();
        prop_assert_eq!(f.is_path_disjoint(&set), g.is_stable(&set));
    }

    #[test]
    fn checkers_agree_on_random_extended_matrices(seed in any::<u64>()) {
        let mut r = common::rng(seed);
        let n = r.gen_range(2..=8);
        let g = random_graph(seed, n, r.gen_range(0.2..0.8));
        let cuts: Vec<SstCliqueCut> = (0..r.gen_range(0..=3))
            .map(|_| {
                let leader = r.gen_range(0..n);
                SstCliqueCut::plain(leader, (leader + r.gen_range(1..n)) % n)
            })
            .collect();
        let m = extended_clique_matrix(&g, &cuts, r.gen_bool(0.5)).unwrap();
        let (d, gh) = tu_both(&m);
        prop_assert_eq!(d, gh);
    }

    #[test]
    fn checkers_agree_on_dense_random_matrices(seed in any::<u64>()) {
        let mut r = common::rng(seed);
        let rows = r.gen_range(1..=8);
        let cols = r.gen_range(1..=8);
        let m = ExtendedMatrix::from_entries(random_matrix(&mut r, rows, cols, 0.5)).unwrap();
        let cfg = TuConfig::default();
        let d = is_tu_determinant(&m, &cfg).unwrap();
        let gh = is_tu_ghouila_houri(&m, &cfg).unwrap();
        prop_assert_eq!(d.is_tu, gh.is_tu);
        if let Some(TuWitness::Submatrix { rows, cols, det }) = d.witness {
            let sub: Vec<Vec<i8>> = rows.iter().map(|&i| cols.iter().map(|&j| m.entries[i][j]).collect()).collect();
            prop_assert_eq!(sst_core::tp::determinant(&sub), det);
            prop_assert!(det.abs() > 1);
        }
    }

    #[test]
    fn clique_matrices_of_tp_graphs_are_tu(seed in any::<u64>()) {
        let (_, g) = tp_instance(seed, 14);
        let m = extended_clique_matrix(&g, &[], false).unwrap();
        prop_assert_eq!(tu_both(&m), (true, true));
    }
}

/// Stringent plain cuts whose orbits contain no edge keep the extended
/// clique matrix TU, and their orbit family has the laminar recursion
/// property.
#[test]
fn edge_free_stringent_orbits() {
    let mut tested = 0;
    for seed in 0..400u64 {
        let (_, g) = tp_instance(9000 + seed, 14);
        let gens = automorphism_generators(&g).unwrap();
        let rule = if seed % 2 == 0 { OrbitRule::Min } else { OrbitRule::Max };
        let t = build_stringent_sst_table(&gens, rule, 50).unwrap();
        if t.rounds.is_empty() || t.rounds.iter().any(|r| !g.is_stable(&r.orbit)) {
            continue;
        }
        tested += 1;
        let m = extended_clique_matrix(&g, &t.plain_cuts(), false).unwrap();
        assert_eq!(tu_both(&m), (true, true), "seed {seed}");
        let f = forest_representation(&g).unwrap();
        let orbits: Vec<Vec<usize>> = t.rounds.iter().map(|r| r.orbit.clone()).collect();
        assert!(check_laminar_recursion_property(&f, &orbits).is_some(), "seed {seed}: {orbits:?}");
    }
    assert!(tested >= 50, "only {tested} edge-free instances");
}

/// Random laminar families of stable sets with the laminar recursion
/// property give TU ordering matrices.
#[test]
fn laminar_recursion_families_give_tu_ordering_matrices() {
    let mut r = common::rng(11);
    let mut tested = 0;
    let mut attempts = 0;
    while tested < 150 {
        attempts += 1;
        assert!(attempts < 100_000, "only {tested} families found");
        let n = r.gen_range(3..=11);
        let parents = sst_core::graph::random_forest(attempts, n);
        let f = ForestRep::from_parents(parents).unwrap();
        let g = f.to_graph();
        // a top-level stable set, optionally with nested stable subsets
        let top: Vec<usize> = (0..n).filter(|_| r.gen_bool(0.5)).collect();
        let top: Vec<usize> = {
            let mut s: Vec<usize> = Vec::new();
            for v in top {
                if s.iter().all(|&u| !g.has_edge(u, v)) {
                    s.push(v);
                }
            }
            s
        };
        if top.len() < 2 {
            continue;
        }
        let mut family = vec![top.clone()];
        if r.gen_bool(0.7) && top.len() >= 3 {
            let inner: Vec<usize> = top[1..].iter().copied().filter(|_| r.gen_bool(0.6)).collect();
            if inner.len() >= 2 {
                family.push(inner);
            }
        }
        let rest: Vec<usize> = (0..n).filter(|v| !top.contains(v)).collect();
        let mut other: Vec<usize> = Vec::new();
        for v in rest {
            if r.gen_bool(0.5) && other.iter().all(|&u| !g.has_edge(u, v)) {
                other.push(v);
            }
        }
        if other.len() >= 2 {
            family.push(other);
        }
        let Some(us) = check_laminar_recursion_property(&f, &family) else {
            continue;
        };
        let rows: Vec<(usize, Vec<usize>)> = family
            .iter()
            .zip(&us)
            .map(|(s, &u)| (u, s.iter().copied().filter(|&v| v != u).collect()))
            .collect();
        let m = ordering_matrix(&g, &rows).unwrap();
        assert_eq!(tu_both(&m), (true, true), "forest {:?}, family {family:?}", f.parents());
        tested += 1;
    }
}

/// Signed path counts agree with a direct count over the chosen paths.
#[test]
fn signed_counts_match_direct_path_counts() {
    let mut r = common::rng(12);
    for seed in 0..300u64 {
        let n = r.gen_range(1..=12);
        let f = ForestRep::from_parents(sst_core::graph::random_forest(seed, n)).unwrap();
        let leaves = f.leaves();
        let paths: Vec<usize> = leaves.iter().copied().filter(|_| r.gen_bool(0.7)).collect();
        if paths.is_empty() {
            continue;
        }
        let s = vec![paths[0]];
        let e = equicolor_recursive(&f, &[s], &paths).unwrap();
        let delta = e.delta(&f);
        for v in 0..n {
            let direct: i64 = paths
                .iter()
                .filter(|&&p| f.is_ancestor_or_self(v, p))
                .map(|&p| e.sign[p] as i64)
                .sum();
            assert_eq!(delta[v], direct);
            if !f.is_leaf(v) {
                let below: i64 = f.children(v).iter().map(|&c| delta[c]).sum();
                assert_eq!(delta[v], below + e.sign[v] as i64);
            }
        }
    }
}

#[test]
fn documented_negative_controls() {
    // adjacent leader and follower without deletion: rows [1,1] and [-1,1]
    let k2 = Graph::from_edges(2, &[(0, 1)]).unwrap();
    let m = extended_clique_matrix(&k2, &[SstCliqueCut::plain(0, 1)], false).unwrap();
    let rep = is_tu_determinant(&m, &TuConfig::default()).unwrap();
    assert_eq!(
        rep.witness,
        Some(TuWitness::Submatrix {
            rows: vec![0, 1],
            cols: vec![0, 1],
            det: 2
        })
    );
    let reduced = extended_clique_matrix(&k2, &[SstCliqueCut::plain(0, 1)], true).unwrap();
    assert_eq!(tu_both(&reduced), (true, true));

    // triangle with two pendants and the cut between the pendants
    let g = sst_core::instances::interval_cut_example();
    assert!(!is_trivially_perfect(&g));
    let m = extended_clique_matrix(&g, &[SstCliqueCut::plain(3, 4)], false).unwrap();
    assert_eq!((m.rows(), m.cols()), (4, 5));
    assert_eq!(tu_both(&m), (false, false));
}

#[test]
fn recursion_property_examples() {
    let f = ForestRep::from_parents(vec![None, Some(0), Some(0), Some(1), Some(2)]).unwrap();
    assert!(check_recursion_property(&f, &[vec![3, 4]]));
    assert!(!check_recursion_property(&f, &[vec![3, 4], vec![4]]));
    assert!(check_recursion_property(&f, &[vec![3], vec![4]]));
}
