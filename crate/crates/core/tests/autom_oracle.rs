mod common;

use std::collections::BTreeSet;

use rand::Rng;
use sst_core::autom::validate_generators;
use sst_core::graph::{random_graph, random_weights};
use sst_core::{automorphism_generators, is_automorphism, Graph, Permutation};

/// All permutations of `0..n` in lexicographic order.
fn all_permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut p: Vec<usize> = (0..n).collect();
    loop {
        out.push(p.clone());
        let Some(i) = (1..n).rev().find(|&i| p[i - 1] < p[i]) else {
            return out;
        };
        let j = (i..n).rev().find(|&j| p[j] > p[i - 1]).unwrap();
        p.swap(i - 1, j);
        p[i..].reverse();
    }
}

fn check_against_brute_force(g: &Graph) {
    let gens = automorphism_generators(g).unwrap();
    for p in gens.generators() {
        assert!(is_automorphism(g, p));
    }
    let got: BTreeSet<Vec<usize>> = gens
        .enumerate_elements(40_320)
        .unwrap()
        .iter()
        .map(|p| p.images().to_vec())
        .collect();
    let expected: BTreeSet<Vec<usize>> = all_permutations(g.n())
        .into_iter()
        .filter(|imgs| is_automorphism(g, &Permutation::new(imgs.clone()).unwrap()))
        .collect();
    assert_eq!(got, expected, "graph {:?} weights {:?}", g.edges(), g.weights());
}

#[test]
fn group_equals_brute_force_on_random_graphs() {
    let mut r = common::rng(1);
    for seed in 0..120u64 {
        let n = r.gen_range(1..=7);
        let mut g = random_graph(seed, n, r.gen_range(0.0..1.0));
        if seed % 3 == 0 {
            g.set_weights(random_weights(seed, n, 1, 2, true)).unwrap();
        }
        check_against_brute_force(&g);
    }
}

#[test]
fn group_equals_brute_force_on_symmetric_graphs() {
    for seed in 0..60u64 {
        let g = common::symmetric_shape(seed, 8);
        check_against_brute_force(&g);
    }
}

#[test]
fn documented_groups() {
    let k3 = Graph::from_edges(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
    assert_eq!(automorphism_generators(&k3).unwrap().order(), Some(6));
    let path = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
    let g = automorphism_generators(&path).unwrap();
    assert_eq!(g.order(), Some(2));
    assert!(g.contains(&Permutation::parse_cycles("(1,3)", 3).unwrap()));
    let weighted = path.clone().with_weights(vec![1, 1, 2]).unwrap();
    assert!(automorphism_generators(&weighted).unwrap().is_trivial());
    assert!(is_automorphism(&path, &Permutation::identity(3)));
    assert!(!is_automorphism(&path, &Permutation::parse_cycles("(1,2)", 3).unwrap()));
}

#[test]
fn foreign_generators_are_validated() {
    let path = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
    let gens = sst_core::GeneratorSet::parse("(1,3)\n(1,2)", 3).unwrap();
    assert_eq!(validate_generators(&path, &gens), Err(1));
}
