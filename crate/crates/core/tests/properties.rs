use std::collections::{HashMap, HashSet};

use kgraph::corpus::{corpus, random_kgraph};
use kgraph::ktheory::{k_groups_with, KOptions, Mode};
use kgraph::words::matrix_conditions;
use kgraph::{
    check_rs, cokernel, dual, minor_gcd_invariants, parse_kgraph, path_of_word, serialize_kgraph,
    smith_normal_form, word_of_path, BigInt, Degree, IntMatrix, KGraph, Path, Presentation,
    RsOptions, VertexId,
};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn d(c: &[u32]) -> Degree {
    Degree::new(c.to_vec())
}

fn graph_from_seed(seed: u64) -> KGraph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    loop {
        if let Some(g) = random_kgraph(&mut rng) {
            return g;
        }
    }
}

fn arb_graph() -> impl Strategy<Value = KGraph> {
    any::<u64>().prop_map(graph_from_seed)
}

fn arb_matrix() -> impl Strategy<Value = IntMatrix> {
    (1usize..=4, 1usize..=6).prop_flat_map(|(r, c)| {
        proptest::collection::vec(proptest::collection::vec(-3i64..=3, c), r)
            .prop_map(|rows| IntMatrix::from_rows(&rows))
    })
}

fn all_paths_up_to(g: &KGraph, top: &Degree) -> Vec<Path> {
    top.interval()
        .iter()
        .flat_map(|n| g.paths_of_degree(n).expect("within cap"))
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn snf_reconstructs_and_matches_minors(a in arb_matrix()) {
        let r = smith_normal_form(&a);
        prop_assert_eq!(&(&(&r.u * &r.s) * &r.v), &a);
        prop_assert!(r.u.determinant().abs().is_one());
        prop_assert!(r.v.determinant().abs().is_one());
        for w in r.diag.windows(2) {
            prop_assert!(w[0] >= BigInt::zero());
            prop_assert!(w[1].is_zero() || (!w[0].is_zero() && w[1].is_multiple_of(&w[0])));
        }
        prop_assert_eq!(minor_gcd_invariants(&a).unwrap(), r.diag);
    }

    #[test]
    fn cokernel_free_rank_is_rows_minus_rank(a in arb_matrix()) {
        prop_assert_eq!(cokernel(&a).free_rank, a.rows() - a.rational_rank());
    }

    #[test]
    fn cokernel_ignores_column_order(
        (a, perm) in arb_matrix().prop_flat_map(|a| {
            let cols: Vec<usize> = (0..a.cols()).collect();
            (Just(a), Just(cols).prop_shuffle())
        })
    ) {
        prop_assert_eq!(cokernel(&a), cokernel(&a.permute_columns(&perm)));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn serialization_round_trips(g in arb_graph()) {
        let text = serialize_kgraph(&g);
        let back = parse_kgraph(&text).unwrap();
        prop_assert_eq!(&back, &g);
        prop_assert_eq!(serialize_kgraph(&back), text);
    }

    #[test]
    fn coordinate_matrices_commute(g in arb_graph()) {
        let ms = g.coordinate_matrices();
        prop_assert_eq!(&ms[0] * &ms[1], &ms[1] * &ms[0]);
    }

    #[test]
    fn factorizations_are_unique(g in arb_graph()) {
        for n in d(&[2, 2]).interval() {
            let paths: HashSet<Path> = g.paths_of_degree(&n).unwrap().into_iter().collect();
            for m in n.interval() {
                let rest = n.checked_sub(&m).unwrap();
                let mut seen: HashMap<Path, usize> = HashMap::new();
                for mu in g.paths_of_degree(&m).unwrap() {
                    for nu in g.paths_from(mu.source(), &rest).unwrap() {
                        *seen.entry(g.compose(&mu, &nu).unwrap()).or_default() += 1;
                    }
                }
                prop_assert_eq!(seen.len(), paths.len());
                for (lam, count) in &seen {
                    prop_assert_eq!(*count, 1);
                    prop_assert!(paths.contains(lam));
                    let head = g.segment(lam, &Degree::zero(2), &m).unwrap();
                    let tail = g.segment(lam, &m, &n).unwrap();
                    prop_assert_eq!(&g.compose(&head, &tail).unwrap(), lam);
                }
            }
        }
    }

    #[test]
    fn degree_is_additive(g in arb_graph()) {
        for lam in all_paths_up_to(&g, &d(&[1, 1])) {
            for mu in all_paths_up_to(&g, &d(&[1, 1])) {
                if lam.source() != mu.range() {
                    prop_assert!(g.compose(&lam, &mu).is_err());
                    continue;
                }
                let c = g.compose(&lam, &mu).unwrap();
                prop_assert_eq!(c.degree(), &(lam.degree() + mu.degree()));
                prop_assert_eq!((c.range(), c.source()), (lam.range(), mu.source()));
            }
        }
    }

    #[test]
    fn normalize_is_idempotent(g in arb_graph()) {
        for lam in all_paths_up_to(&g, &d(&[1, 1])) {
            for mu in g.paths_from(lam.source(), &d(&[1, 1])).unwrap() {
                let raw: Vec<_> = lam.edges().iter().chain(mu.edges()).copied().collect();
                let once = g.normalize(&raw).unwrap();
                prop_assert_eq!(&g.normalize(once.edges()).unwrap(), &once);
                prop_assert_eq!(once.degree(), &(lam.degree() + mu.degree()));
                prop_assert_eq!((once.range(), once.source()), (lam.range(), mu.source()));
            }
        }
    }

    #[test]
    fn duals_are_zero_one(g in arb_graph()) {
        for p in [d(&[1, 1]), d(&[2, 1]), d(&[1, 2])] {
            for m in dual(&g, &p).unwrap().graph.coordinate_matrices() {
                prop_assert!(m.is_zero_one(), "p={} gives\n{}", p, m);
            }
        }
    }

    #[test]
    fn at_most_one_dual_path_between_vertices(g in arb_graph()) {
        for p in [d(&[1, 0]), d(&[0, 1]), d(&[1, 1]), d(&[2, 1])] {
            let h = dual(&g, &p).unwrap().graph;
            for n in p.interval() {
                let mut seen = HashSet::new();
                for lam in h.paths_of_degree(&n).unwrap() {
                    prop_assert!(seen.insert((lam.range(), lam.source())), "p={} n={}", p, n);
                }
            }
        }
    }

    #[test]
    fn duals_have_no_sources(g in arb_graph()) {
        for p in [d(&[1, 0]), d(&[0, 1]), d(&[1, 1]), d(&[2, 1])] {
            prop_assert!(dual(&g, &p).unwrap().graph.structural_report().no_sources);
        }
    }

    #[test]
    fn dual_paths_count_like_base_paths(g in arb_graph()) {
        let p = d(&[1, 1]);
        let h = dual(&g, &p).unwrap();
        for n in d(&[2, 2]).interval() {
            for beta in h.graph.vertex_ids() {
                let in_dual = h.graph.paths_from(beta, &n).unwrap().len();
                let base = g.paths_from(h.vertex_path(beta).source(), &n).unwrap().len();
                prop_assert_eq!(in_dual, base);
            }
        }
    }

    #[test]
    fn dual_composition_lifts(g in arb_graph()) {
        let p = d(&[1, 1]);
        let h = dual(&g, &p).unwrap();
        let small = all_paths_up_to(&h.graph, &d(&[1, 1]));
        for lam in &small {
            for mu in h.graph.paths_from(lam.source(), &d(&[1, 1])).unwrap() {
                let both = h.graph.compose(lam, &mu).unwrap();
                let lifted = h.underlying(&g, &both).unwrap();
                prop_assert_eq!(lifted.degree(), &(&p + both.degree()));
                let ul = h.underlying(&g, lam).unwrap();
                let um = h.underlying(&g, &mu).unwrap();
                let tail = g.segment(&um, &p, um.degree()).unwrap();
                prop_assert_eq!(&g.compose(&ul, &tail).unwrap(), &lifted);
            }
        }
    }

    #[test]
    fn words_round_trip(g in arb_graph()) {
        let one = dual(&g, &Degree::ones(2)).unwrap().graph;
        for lam in all_paths_up_to(&one, &d(&[2, 2])) {
            let w = word_of_path(&one, &lam).unwrap();
            prop_assert_eq!(&path_of_word(&one, &w).unwrap(), &lam);
        }
    }

    #[test]
    fn one_duals_satisfy_matrix_conditions(g in arb_graph()) {
        let one = dual(&g, &Degree::ones(2)).unwrap().graph;
        let c = matrix_conditions(&one).unwrap();
        prop_assert!(c.h0 && c.h1a && c.h1b);
        prop_assert_eq!(c.h2, g.structural_report().strongly_connected);
    }

    #[test]
    fn h3_witnesses_are_literal(g in arb_graph()) {
        let one = dual(&g, &Degree::ones(2)).unwrap().graph;
        let opts = RsOptions { h3_bound: 2, h3_margin: d(&[1, 1]) };
        let r = check_rs(&one, &opts).unwrap();
        prop_assert_eq!(r.h3_witnesses.len() + r.h3_failures.len(), r.h3_window.len());
        for (m, w) in &r.h3_witnesses {
            let other = m.offset(&w.position).unwrap();
            prop_assert!(other <= *w.path.degree());
            prop_assert_ne!(
                one.vertex_at(&w.path, &w.position).unwrap(),
                one.vertex_at(&w.path, &other).unwrap()
            );
        }
    }

    #[test]
    fn ranks_agree_and_dual_degree_is_irrelevant(g in arb_graph()) {
        let base = k_groups_with(&g, Mode::Dual, &KOptions::groups_only()).unwrap();
        prop_assert_eq!(base.k0_rank(), base.k1_rank());
        for p in [d(&[2, 1]), d(&[1, 2])] {
            let opts = KOptions { p: Some(p), rs: None };
            prop_assert!(k_groups_with(&g, Mode::Dual, &opts).unwrap().same_groups(&base));
        }
    }

    #[test]
    fn torsion_ignores_vertex_names(g in arb_graph()) {
        let renamed = relabel(&g);
        for mode in [Mode::Dual, Mode::Direct] {
            let a = k_groups_with(&g, mode, &KOptions::groups_only()).unwrap();
            let b = k_groups_with(&renamed, mode, &KOptions::groups_only()).unwrap();
            prop_assert_eq!(a.k0, b.k0);
            prop_assert_eq!(a.k1, b.k1);
        }
    }
}

/// Renames vertices so that their canonical order is reversed.
fn relabel(g: &KGraph) -> KGraph {
    let p = g.presentation();
    let n = p.vertices.len();
    let names: HashMap<String, String> = p
        .vertices
        .iter()
        .enumerate()
        .map(|(i, v)| (v.id.clone(), format!("x{}", n - i)))
        .collect();
    let mut q = Presentation::new(p.rank);
    for v in &p.vertices {
        q.vertex(names[&v.id].clone());
    }
    for e in &p.edges {
        q.edge(e.id.clone(), e.color, names[&e.source].clone(), names[&e.range].clone());
    }
    for s in &p.squares {
        q.square(&s.edges[0], &s.edges[1], &s.edges[2], &s.edges[3]);
    }
    q.build().unwrap()
}

#[test]
fn factorization_exhaustive_to_three_three() {
    for g in corpus(11, 8) {
        for lam in all_paths_up_to(&g, &d(&[3, 3])) {
            for m in lam.degree().interval() {
                let head = g.segment(&lam, &Degree::zero(2), &m).unwrap();
                let tail = g.segment(&lam, &m, lam.degree()).unwrap();
                assert_eq!(head.degree(), &m);
                assert_eq!(g.compose(&head, &tail).unwrap(), lam);
            }
        }
    }
}

#[test]
fn counts_match_enumeration_to_three_three() {
    for g in corpus(12, 8) {
        for n in d(&[3, 3]).interval() {
            let counts = g.count_paths(&n).unwrap();
            for w in g.vertex_ids() {
                let mut by_source: HashMap<VertexId, usize> = HashMap::new();
                for lam in g.paths_from(w, &n).unwrap() {
                    *by_source.entry(lam.source()).or_default() += 1;
                }
                for v in g.vertex_ids() {
                    let want = by_source.get(&v).copied().unwrap_or(0);
                    assert_eq!(counts[(v.index(), w.index())], BigInt::from(want));
                }
            }
        }
    }
}
