//! Orienting free edges of a mixed graph so every vertex balances, and
//! completing a tournament to an eulerian one on extra vertices.

use invlab::connectivity::{is_eulerian, is_k_arc_strong};
use invlab::digraph::Tournament;
use invlab::mixed::{
    complete_to_eulerian_tournament, eulerian_orientation, MixedGraph, Orientation,
};

fn main() {
    // A 4-cycle of free edges plus a fixed digon: every degree is even, so
    // a balanced orientation exists.
    let m = MixedGraph::new(4, &[(0, 1), (1, 2), (2, 3), (3, 0)], &[(0, 2), (2, 0)]).unwrap();
    match eulerian_orientation(&m).unwrap() {
        Orientation::Oriented(d) => {
            assert!(is_eulerian(&d));
            println!("oriented: {:?}", d.arcs().collect::<Vec<_>>());
        }
        Orientation::Infeasible(w) => println!("no orientation: {w:?}"),
    }

    // A triangle with both arcs fixed to leave vertex 0 cannot balance:
    // the witness names the overloaded side.
    let m = MixedGraph::new(3, &[(1, 2)], &[(0, 1), (0, 2)]).unwrap();
    if let Orientation::Infeasible(w) = eulerian_orientation(&m).unwrap() {
        println!("infeasible witness: {w:?}");
    }

    // A tournament of odd order 2k+1 can be rebalanced into an eulerian one
    // while freezing every arc at a chosen small set, provided those
    // vertices already have out-degree k. In TT7 only vertex 3 does.
    let t = Tournament::transitive(7);
    let completed = complete_to_eulerian_tournament(&t, &[3]).unwrap();
    assert!(is_eulerian(completed.as_digraph()));
    for v in 0..7 {
        assert_eq!(completed.beats(3, v), t.beats(3, v));
    }
    println!(
        "TT7 rebalanced around vertex 3: eulerian, 3-arc-strong = {}",
        is_k_arc_strong(completed.as_digraph(), 3).unwrap().holds
    );
}
