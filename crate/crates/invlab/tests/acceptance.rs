//! Acceptance gate: one test per release criterion, each printing a
//! pass line on success. Run with `--nocapture` to see the lines.

use invlab::connectivity::{is_eulerian, is_k_arc_strong, is_k_strong};
use invlab::construct::{
    make_kstrong_2k, single_inversion_19k, three_inversions_11k, tt_construct,
};
use invlab::digraph::{Digraph, Tournament};
use invlab::exact::{
    census_row, cut_cover_number, enumerate_tournaments, sinv_exact, CutCoverMode, Goal,
    SearchBudget, SinvOutcome,
};
use invlab::family::InversionFamily;
use invlab::gadgets::{
    cutcover_to_arcstrong, cutcover_to_strong, lifted_cut_cover, witness_sizet, witness_t1,
    witness_t2,
};
use invlab::graph::SimpleGraph;
use invlab::median::{
    check_reachability_bound, is_feedback_valid, local_median_order, median_order,
};
use invlab::randomized::{
    estimate_success_probability, mkstrich_pipeline, random_kstrong_vectors, upper_mprime_driver,
    Experiment, RandomizedConfig,
};
use std::time::Instant;

fn pass(criterion: usize, what: &str) {
    println!("criterion {criterion} ({what}): pass");
}

fn exact_value(d: &Digraph, goal: Goal) -> usize {
    sinv_exact(d, goal, &SearchBudget::default())
        .unwrap()
        .value()
        .expect("value within default budget")
}

/// Exhausts families of at most `max_t` sets and asserts none reaches the
/// goal.
fn assert_needs_more_than(d: &Digraph, goal: Goal, max_t: usize) {
    let budget = SearchBudget {
        max_t,
        ..SearchBudget::default()
    };
    match sinv_exact(d, goal, &budget).unwrap() {
        SinvOutcome::Unknown {
            lower_bound,
            capped,
            ..
        } => {
            assert!(!capped, "exhaustion must finish, not hit the node cap");
            assert_eq!(lower_bound, max_t + 1);
        }
        SinvOutcome::Exact { value, .. } => {
            panic!("expected no family of size <= {max_t}, found one of {value}")
        }
    }
}

#[test]
fn c1_exact_small_values() {
    let start = Instant::now();
    let r5 = Tournament::rotative(2);
    assert_eq!(exact_value(r5.as_digraph(), Goal::Acyclic), 2);

    let cases = [
        (5, Goal::KArcStrong { k: 2 }, 2),
        (5, Goal::KStrong { k: 2 }, 2),
        (6, Goal::KStrong { k: 2 }, 1),
        (7, Goal::KStrong { k: 3 }, 2),
        (9, Goal::KStrong { k: 3 }, 1),
    ];
    for (n, goal, expect) in cases {
        let tt = Tournament::transitive(n);
        assert_eq!(exact_value(tt.as_digraph(), goal), expect, "TT{n} {goal:?}");
    }
    assert!(
        start.elapsed().as_secs() < 60,
        "criterion 1 budget is one minute"
    );
    pass(1, "exact small values");
}

#[test]
fn c2_census_worst_cases() {
    let start = Instant::now();
    let budget = SearchBudget::default();
    let class_counts = [(3, 2), (4, 4), (5, 12), (6, 56), (7, 456)];
    for (n, classes) in class_counts {
        assert_eq!(
            enumerate_tournaments(n).unwrap().len(),
            classes,
            "order {n}"
        );
        let row = census_row(n, 1, &budget, 2).unwrap();
        assert_eq!(row.classes, classes);
        assert_eq!(row.m_k, 1, "m_1({n})");
        assert_eq!(row.m_prime_k, 1, "m'_1({n})");
    }

    let row = census_row(5, 2, &budget, 2).unwrap();
    assert_eq!(row.m_k, 2, "m_2(5)");
    assert_eq!(row.m_prime_k, 2, "m'_2(5)");
    // The transitive tournament attains both maxima.
    let tt5 = Tournament::transitive(5);
    assert_eq!(
        exact_value(tt5.as_digraph(), Goal::KStrong { k: 2 }),
        row.m_k
    );
    assert_eq!(
        exact_value(tt5.as_digraph(), Goal::KArcStrong { k: 2 }),
        row.m_prime_k
    );
    assert!(
        start.elapsed().as_secs() < 600,
        "criterion 2 budget is ten minutes"
    );
    pass(2, "census worst cases");
}

#[test]
fn c3_eulerian_is_two_arc_strong_at_order_five() {
    let mut eulerian_count = 0usize;
    for bits in 0..1u32 << 10 {
        let mut arcs = Vec::with_capacity(10);
        let mut pos = 0;
        for i in 0..5 {
            for j in i + 1..5 {
                if bits >> pos & 1 == 1 {
                    arcs.push((i, j));
                } else {
                    arcs.push((j, i));
                }
                pos += 1;
            }
        }
        let d = Digraph::from_arcs(5, &arcs).unwrap();
        let eulerian = is_eulerian(&d);
        assert_eq!(
            eulerian,
            is_k_arc_strong(&d, 2).unwrap().holds,
            "bits {bits:#012b}"
        );
        eulerian_count += usize::from(eulerian);
    }
    assert_eq!(eulerian_count, 24);
    pass(3, "eulerian equals 2-arc-strong at order 5");
}

#[test]
fn c4_constructions_verified() {
    // One inversion above the 19k threshold.
    for (k, n, seeds) in [(1usize, 17usize, 500u64), (2, 36, 100)] {
        for seed in 0..seeds {
            let t = Tournament::random(n, seed);
            let cert = single_inversion_19k(&t, k).unwrap();
            assert!(cert.verified, "k={k} seed {seed}");
            assert!(cert.family_size <= 1, "k={k} seed {seed}");
            let fixed = cert.family.apply(t.as_digraph());
            assert!(is_k_strong(&fixed, k).holds, "k={k} seed {seed}");
        }
    }

    // Three inversions above the 11k threshold.
    for (k, n, seeds) in [(1usize, 9usize, 500u64), (2, 20, 100)] {
        for seed in 0..seeds {
            let t = Tournament::random(n, seed);
            let cert = three_inversions_11k(&t, k).unwrap();
            assert!(cert.verified, "k={k} seed {seed}");
            assert!(cert.family_size <= 3, "k={k} seed {seed}");
        }
    }

    // The in-degree sweep never needs more than 2k sets; check every class
    // of order 5 at k=2.
    for t in enumerate_tournaments(5).unwrap() {
        let cert = make_kstrong_2k(&t, 2).unwrap();
        assert!(cert.verified);
        assert!(cert.family_size <= 4);
    }

    // The transitive construction matches the closed form: one wrap-around
    // set once three k-blocks fit, two parity classes below that.
    for k in 1..=4usize {
        for n in 2 * k + 1..=4 * k {
            let expect = if n >= 3 * k { 1 } else { 2 };
            let cert = tt_construct(n, k).unwrap();
            assert_eq!(cert.family_size, expect, "TT{n} at k={k}");
        }
    }
    // And the closed form is the true minimum where the oracle can see it.
    for (n, k) in [(3, 1), (4, 1), (5, 2), (6, 2), (7, 2), (8, 2), (7, 3)] {
        let tt = Tournament::transitive(n);
        let expect = if n >= 3 * k { 1 } else { 2 };
        assert_eq!(exact_value(tt.as_digraph(), Goal::KStrong { k }), expect);
    }
    pass(4, "constructions verified");
}

#[test]
fn c5_lower_bound_witnesses() {
    let t1 = witness_t1(2).unwrap();
    let clock = Instant::now();
    assert_needs_more_than(t1.as_digraph(), Goal::KStrong { k: 2 }, 1);
    assert!(
        clock.elapsed().as_secs() < 1,
        "T1 exhaustion under a second"
    );

    let t2 = witness_t2(2).unwrap();
    let clock = Instant::now();
    assert_needs_more_than(t2.as_digraph(), Goal::KArcStrong { k: 2 }, 1);
    assert!(
        clock.elapsed().as_secs() < 1,
        "T2 exhaustion under a second"
    );

    let (w, s) = witness_sizet(2).unwrap();
    let clock = Instant::now();
    for set_bits in 0..1u32 << w.n() {
        let set: Vec<usize> = (0..w.n()).filter(|&v| set_bits >> v & 1 == 1).collect();
        let flipped = w.invert(&set);
        assert!(
            (0..w.n()).any(|v| v != s && (flipped.out_degree(v) == 0 || flipped.in_degree(v) == 0)),
            "inverting {set:?} left no sink or source besides {s}"
        );
    }
    assert!(
        clock.elapsed().as_secs() < 1,
        "catcher exhaustion under a second"
    );
    pass(5, "lower bound witnesses");
}

#[test]
fn c6_gadget_equalities() {
    let bases = [
        ("K2", SimpleGraph::complete(2)),
        ("P3", SimpleGraph::path(3)),
        ("K3", SimpleGraph::complete(3)),
    ];
    for (name, g) in &bases {
        let cover = cut_cover_number(g, CutCoverMode::Formula).unwrap();
        let family = lifted_cut_cover(g, 1).unwrap();
        assert_eq!(family.len(), cover, "{name} upper family size");

        let arc_gadget = cutcover_to_arcstrong(g, 1).unwrap();
        let fixed = family.apply(&arc_gadget);
        assert!(
            is_k_arc_strong(&fixed, 1).unwrap().holds,
            "{name} arc upper"
        );
        if cover > 0 {
            assert_needs_more_than(&arc_gadget, Goal::KArcStrong { k: 1 }, cover - 1);
        }

        let vertex_gadget = cutcover_to_strong(g, 1).unwrap();
        let fixed = family.apply(&vertex_gadget);
        assert!(is_k_strong(&fixed, 1).holds, "{name} vertex upper");
        if cover > 0 {
            assert_needs_more_than(&vertex_gadget, Goal::KStrong { k: 1 }, cover - 1);
        }
    }

    // The closed-form cover number agrees with direct search.
    for seed in 0..50u64 {
        let n = 2 + (seed as usize % 7);
        let g = SimpleGraph::gnp(n, 0.4 + 0.3 * (seed % 3) as f64 / 2.0, 900 + seed);
        assert_eq!(
            cut_cover_number(&g, CutCoverMode::Formula).unwrap(),
            cut_cover_number(&g, CutCoverMode::Direct).unwrap(),
            "seed {seed}"
        );
    }
    pass(6, "gadget equalities");
}

#[test]
fn c7_median_order_properties() {
    for seed in 0..500u64 {
        let n = 6 + (seed as usize % 7);
        let t = Tournament::random(n, 31 * seed + 5);
        let order = median_order(&t);
        assert!(
            is_feedback_valid(&t, &order.order),
            "seed {seed} interval test"
        );

        // Drop a third of the vertices, never the first of the order.
        let f: Vec<usize> = order.order[1..].iter().copied().take(n / 3).collect();
        assert!(
            check_reachability_bound(&t, &order, &f).unwrap(),
            "seed {seed} reach bound"
        );
    }
    // Larger orders go through local search and keep the interval property.
    for seed in 0..5u64 {
        let t = Tournament::random(30, seed);
        let order = local_median_order(&t, seed);
        assert!(is_feedback_valid(&t, &order.order));
        assert!(check_reachability_bound(&t, &order, &order.order[21..]).unwrap());
    }
    pass(7, "median order properties");
}

#[test]
fn c8_probabilistic_machinery() {
    // Hitting a fixed image of a full-rank 3x6 bit matrix.
    let est =
        estimate_success_probability(&Experiment::MatrixImage { q: 3, q_prime: 6 }, 100_000, 1)
            .unwrap();
    assert!((est.rate - 0.125).abs() <= 0.01, "rate {}", est.rate);

    // Two prescribed dot products against distinct nonzero vectors.
    let t = 5;
    let bound = 0.25 - 0.75 / ((1u64 << t) as f64 - 1.0);
    for (i, (x, y)) in [(false, false), (false, true), (true, false), (true, true)]
        .into_iter()
        .enumerate()
    {
        let est = estimate_success_probability(
            &Experiment::PairProducts { t, x, y },
            100_000,
            40 + i as u64,
        )
        .unwrap();
        assert!(
            est.rate >= bound,
            "({x}, {y}) rate {} below {bound}",
            est.rate
        );
    }

    // Randomized constructions: verified, deterministic per seed, within
    // the 2k sweep bound.
    let k = 2;
    for seed in 0..10u64 {
        let t = Tournament::random(15, 100 + seed);
        let cfg = RandomizedConfig {
            seed,
            ..RandomizedConfig::default()
        };
        let a = random_kstrong_vectors(&t, k, &cfg).unwrap();
        let b = random_kstrong_vectors(&t, k, &cfg).unwrap();
        assert!(a.verified);
        assert_eq!(a.family, b.family, "seed {seed} determinism");
        assert!(a.family_size <= 2 * k, "seed {seed} sweep bound");

        let c = upper_mprime_driver(&t, k, &cfg).unwrap();
        let d = upper_mprime_driver(&t, k, &cfg).unwrap();
        assert!(c.verified);
        assert_eq!(c.family, d.family, "seed {seed} driver determinism");
        assert!(c.family_size <= 2 * k, "seed {seed} driver bound");
        let fixed = c.family.apply(t.as_digraph());
        assert!(is_k_arc_strong(&fixed, k).unwrap().holds);
    }
    for seed in 0..10u64 {
        let t = Tournament::random(5, 200 + seed);
        let cfg = RandomizedConfig {
            seed,
            ..RandomizedConfig::default()
        };
        let a = mkstrich_pipeline(&t, k, &cfg).unwrap();
        let b = mkstrich_pipeline(&t, k, &cfg).unwrap();
        assert!(a.verified);
        assert_eq!(a.family, b.family);
        assert!(a.family_size <= 2 * k);
    }

    // Inversion counts stay meaningful: the identity family is rejected by
    // the verifier unless the input already has the property.
    let tt = Tournament::transitive(5);
    let empty = invlab::certificate::Certificate::new(
        invlab::certificate::Property::KStrong { k: 2 },
        InversionFamily::empty(),
        "identity",
    )
    .verify(tt.as_digraph());
    assert!(!empty.verified);
    pass(8, "probabilistic machinery");
}
