//! The exhaustive solver: smallest inversion family reaching a goal, with
//! honest lower bounds when a budget stops the search.

use invlab::digraph::Tournament;
use invlab::exact::{sinv_exact, Goal, SearchBudget, SinvOutcome};

fn main() {
    let budget = SearchBudget::default();

    // Two inversions suffice to make the rotative 5-tournament acyclic,
    // and one is provably not enough.
    let r5 = Tournament::rotative(2);
    let out = sinv_exact(r5.as_digraph(), Goal::Acyclic, &budget).unwrap();
    println!("rotative(2) to acyclic: {}", out.describe());
    assert_eq!(out.value(), Some(2));

    // The transitive 5-tournament needs two inversions for 2-arc-strength
    // but only one at order 6.
    for (n, expect) in [(5, 2), (6, 1)] {
        let tt = Tournament::transitive(n);
        let out = sinv_exact(tt.as_digraph(), Goal::KArcStrong { k: 2 }, &budget).unwrap();
        println!("TT{n} to 2-arc-strong: {}", out.describe());
        assert_eq!(out.value(), Some(expect));
    }

    // An exhausted size cap is not a failure: it proves a lower bound.
    let tt5 = Tournament::transitive(5);
    let capped = SearchBudget {
        max_t: 1,
        ..SearchBudget::default()
    };
    let out = sinv_exact(tt5.as_digraph(), Goal::KStrong { k: 2 }, &capped).unwrap();
    match out {
        SinvOutcome::Unknown {
            lower_bound,
            capped,
            ..
        } => {
            assert!(!capped);
            println!("TT5 to 2-strong with families of size <= 1: none, so the minimum is >= {lower_bound}");
        }
        SinvOutcome::Exact { .. } => unreachable!("two sets are needed"),
    }

    // Families come back with the outcome and verify against the goal.
    let out = sinv_exact(tt5.as_digraph(), Goal::KStrong { k: 2 }, &budget).unwrap();
    if let SinvOutcome::Exact { value, family } = out {
        let fixed = family.apply(tt5.as_digraph());
        assert!(invlab::connectivity::is_k_strong(&fixed, 2).holds);
        println!("TT5 to 2-strong: {value} sets, e.g. {:?}", family.sets);
    }
}
