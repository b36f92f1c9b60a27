mod common;

use proptest::prelude::*;
use rand::Rng;

use common::{weighted_symmetric, VARIANTS};
use sst_core::sst::{is_laminar, repair_solution, set_satisfies_cuts};
use sst_core::{
    automorphism_generators, brute_force_max_stable, build_sst_table, build_stringent_sst_table, is_stringent,
    satisfies_cuts, sst_clique_cuts, GeneratorSet, Graph, OrbitRule, Permutation, SstCliqueCut, SstTable,
};

fn table(gens: &GeneratorSet, rule: OrbitRule, stringent: bool) -> SstTable {
    if stringent {
        build_stringent_sst_table(gens, rule, 50).unwrap()
    } else {
        build_sst_table(gens, rule, 50).unwrap()
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn tables_are_well_formed(seed in any::<u64>(), variant in 0usize..4) {
        let g = weighted_symmetric(seed, 12);
        let gens = automorphism_generators(&g).unwrap();
        let (rule, stringent) = VARIANTS[variant];
        let t = table(&gens, rule, stringent);
        prop_assert!(t.is_laminar());
        let mut previous: Option<GeneratorSet> = None;
        for r in &t.rounds {
            prop_assert!(r.orbit.binary_search(&r.leader).is_ok());
            prop_assert_eq!(r.followers.len() + 1, r.orbit.len());
            prop_assert!(r.followers.iter().all(|f| *f != r.leader && r.orbit.binary_search(f).is_ok()));
            let group = gens.pointwise_stabilizer(&r.stabilized).unwrap();
            prop_assert_eq!(&group.orbit(r.leader).unwrap().members, &r.orbit);
            if let Some(prev) = &previous {
                let chain = prev.stabilizer_chain(&[]).unwrap();
                prop_assert!(group.generators().iter().all(|p| chain.contains(p)));
            }
            previous = Some(group);
        }
        if stringent {
            prop_assert!(is_stringent(&t, &gens).unwrap());
        }
    }

    #[test]
    fn cuts_keep_an_optimum(seed in any::<u64>(), variant in 0usize..4) {
        let g = weighted_symmetric(seed, 10);
        let gens = automorphism_generators(&g).unwrap();
        let (rule, stringent) = VARIANTS[variant];
        let t = table(&gens, rule, stringent);
        let best = brute_force_max_stable(&g, &[]).unwrap().value;
        prop_assert_eq!(brute_force_max_stable(&g, &t.plain_cuts()).unwrap().value, best);
        prop_assert_eq!(brute_force_max_stable(&g, &sst_clique_cuts(&t, &g)).unwrap().value, best);
    }

    #[test]
    fn clique_cuts_dominate_plain_cuts(seed in any::<u64>(), mask in any::<u16>()) {
        let g = weighted_symmetric(seed, 10);
        let gens = automorphism_generators(&g).unwrap();
        let t = build_sst_table(&gens, OrbitRule::Min, 50).unwrap();
        let clique = sst_clique_cuts(&t, &g);
        for c in &clique {
            prop_assert!(g.is_clique(&c.clique));
        }
        let members: Vec<usize> = (0..g.n()).filter(|&i| mask >> i & 1 == 1).collect();
        let plain_ok = set_satisfies_cuts(g.n(), &members, &t.plain_cuts());
        let clique_ok = set_satisfies_cuts(g.n(), &members, &clique);
        prop_assert!(!clique_ok || plain_ok);
        if g.is_stable(&members) {
            prop_assert_eq!(plain_ok, clique_ok);
        }
    }

    #[test]
    fn repaired_vectors_are_feasible_images(seed in any::<u64>(), variant in 0usize..4, mask in any::<u8>()) {
        let g = weighted_symmetric(seed, 8);
        let n = g.n();
        let gens = automorphism_generators(&g).unwrap();
        let (rule, stringent) = VARIANTS[variant];
        let t = table(&gens, rule, stringent);
        let x: Vec<u8> = (0..n).map(|i| mask >> i & 1).collect();
        let y = repair_solution(&x, &gens, &t).unwrap();
        prop_assert!(satisfies_cuts(&y, &t.plain_cuts()));
        let elements = gens.enumerate_elements(40_320).unwrap();
        prop_assert!(elements.iter().any(|p| p.apply_to_vector(&x).unwrap() == y));
        let weight = |v: &[u8]| (0..n).map(|i| v[i] as i64 * g.weight(i)).sum::<i64>();
        prop_assert_eq!(weight(&x), weight(&y));
    }
}

/// With leaders `0, 1, 2, ...`, the lexicographically largest vector of
/// every orbit satisfies all plain cuts.
#[test]
fn lexicographic_maxima_satisfy_cuts() {
    let mut checked = 0;
    for seed in 0..80u64 {
        let g = common::symmetric_shape(seed, 8);
        let n = g.n();
        let gens = automorphism_generators(&g).unwrap();
        let t = SstTable::with_leaders(&gens, &(0..n).collect::<Vec<_>>(), false).unwrap();
        let cuts = t.plain_cuts();
        let elements = gens.enumerate_elements(40_320).unwrap();
        for mask in 0u32..(1 << n) {
            let x: Vec<u8> = (0..n).map(|i| (mask >> i & 1) as u8).collect();
            let lex_max = elements
                .iter()
                .map(|p: &Permutation| p.apply_to_vector(&x).unwrap())
                .max()
                .unwrap();
            assert!(satisfies_cuts(&lex_max, &cuts), "seed {seed}: {lex_max:?}");
            checked += 1;
        }
    }
    assert!(checked > 1000);
}

#[test]
fn orbit_families_are_laminar_for_random_leaders() {
    let mut r = common::rng(3);
    for seed in 0..60u64 {
        let g = common::symmetric_shape(seed, 10);
        let gens = automorphism_generators(&g).unwrap();
        let mut leaders: Vec<usize> = (0..g.n()).collect();
        for i in (1..leaders.len()).rev() {
            leaders.swap(i, r.gen_range(0..=i));
        }
        for stringent in [false, true] {
            let t = SstTable::with_leaders(&gens, &leaders, stringent).unwrap();
            let orbits: Vec<Vec<usize>> = t.rounds.iter().map(|r| r.orbit.clone()).collect();
            assert!(is_laminar(&orbits), "seed {seed}");
        }
    }
}

#[test]
fn documented_tables() {
    let k3 = Graph::from_edges(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
    let s3 = automorphism_generators(&k3).unwrap();
    let t = build_sst_table(&s3, OrbitRule::Min, 50).unwrap();
    assert_eq!(t.pairs(), vec![(0, 1), (0, 2), (1, 2)]);
    assert_eq!(
        sst_clique_cuts(&t, &k3)[0],
        SstCliqueCut {
            leader: 0,
            clique: vec![1, 2]
        }
    );
    assert_eq!(repair_solution(&[0, 0, 1], &s3, &t).unwrap(), vec![1, 0, 0]);

    let path = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
    let t = build_sst_table(&automorphism_generators(&path).unwrap(), OrbitRule::Max, 50).unwrap();
    assert_eq!(t.pairs(), vec![(0, 2)]);
    assert!(build_sst_table(&GeneratorSet::trivial(4), OrbitRule::Min, 50).unwrap().rounds.is_empty());
}

#[test]
fn stringency_example_clique_cuts_are_singletons() {
    let g = sst_core::instances::stringency_example();
    let gens = automorphism_generators(&g).unwrap();
    let t = SstTable::with_leaders(&gens, &[0], false).unwrap();
    let cuts = sst_clique_cuts(&t, &g);
    assert_eq!(cuts, (1..6).map(|f| SstCliqueCut::plain(0, f)).collect::<Vec<_>>());
}

#[test]
fn feasibility_examples() {
    let cut = [SstCliqueCut::plain(0, 1)];
    assert!(satisfies_cuts(&[0, 0], &cut));
    assert!(satisfies_cuts(&[1, 1], &cut));
    assert!(!satisfies_cuts(&[0, 1], &cut));
}
