//! Generated hard instances and lower-bound witnesses, each carrying a
//! machine-checkable expected property.

use invlab::digraph::Digraph;
use invlab::exact::{cut_cover_number, sinv_exact, CutCoverMode, Goal, SearchBudget, SinvOutcome};
use invlab::family::InversionFamily;
use invlab::gadgets::{
    cutcover_to_arcstrong, lifted_cut_cover, meksat_digraph, meksat_fixing_set, random_meksat,
    witness_sizet, witness_t1,
};
use invlab::graph::SimpleGraph;

fn main() {
    let budget = SearchBudget::default();

    // A monotone equitable instance: each clause of 2k+1 distinct variables
    // wants at least k true and at least k false. Satisfiability transfers
    // to "one inversion makes the reduction digraph k-strong".
    let inst = random_meksat(1, 4, 3, 2024).unwrap();
    let d = meksat_digraph(&inst).unwrap();
    let sat = inst.brute_force_satisfiable().unwrap();
    let one = sinv_exact(&d, Goal::KStrong { k: 1 }, &budget).unwrap();
    println!(
        "instance satisfiable: {sat}; reduction fixed by one inversion: {:?}",
        one.value()
    );
    if sat {
        let assignment = (0..16u32)
            .map(|bits| (0..4).map(|i| bits >> i & 1 == 1).collect::<Vec<_>>())
            .find(|a| inst.check(a))
            .unwrap();
        let set = meksat_fixing_set(&inst, &assignment).unwrap();
        let fixed = InversionFamily::new(vec![set]).apply(&d);
        assert!(invlab::connectivity::is_k_strong(&fixed, 1).holds);
        println!("fixing set from a satisfying assignment verified");
    }

    // Graph gadgets tie the inversion number to the cut cover number,
    // which is ceil(log2 chi).
    let g = SimpleGraph::complete(3);
    let cover = cut_cover_number(&g, CutCoverMode::Formula).unwrap();
    let gadget = cutcover_to_arcstrong(&g, 1).unwrap();
    let family = lifted_cut_cover(&g, 1).unwrap();
    let fixed = family.apply(&gadget);
    assert!(
        invlab::connectivity::is_k_arc_strong(&fixed, 1)
            .unwrap()
            .holds
    );
    println!(
        "K3 gadget on {} vertices: cover number {cover}, lifted family of {} verified",
        gadget.n(),
        family.len()
    );

    // Lower-bound witnesses: a pair catcher keeps a sink or source through
    // any single inversion.
    let (w, s) = witness_sizet(2).unwrap();
    let survives =
        |d: &Digraph| (0..d.n()).any(|v| v != s && (d.out_degree(v) == 0 || d.in_degree(v) == 0));
    assert!(survives(&w.invert(&[1, 3, 4])));
    println!(
        "pair catcher of order {} survives a sample inversion",
        w.n()
    );

    // Tournament witnesses show one inversion is not always enough.
    let t1 = witness_t1(2).unwrap();
    let out = sinv_exact(
        t1.as_digraph(),
        Goal::KStrong { k: 2 },
        &SearchBudget {
            max_t: 1,
            ..SearchBudget::default()
        },
    )
    .unwrap();
    match out {
        SinvOutcome::Unknown { lower_bound, .. } => {
            println!("order-7 witness needs more than one set for 2-strong (bound {lower_bound})")
        }
        SinvOutcome::Exact { .. } => unreachable!(),
    }
}
