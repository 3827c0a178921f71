//! Connectivity verdicts with explicit witnesses: separators for missing
//! vertex connectivity, out-sections for missing arc connectivity.

use invlab::connectivity::{is_eulerian, is_k_arc_strong, is_k_strong};
use invlab::digraph::Tournament;

fn main() {
    // The rotative tournament on 2k+1 vertices is the canonical k-strong,
    // k-arc-strong, eulerian example.
    let r5 = Tournament::rotative(2);
    let d = r5.as_digraph();
    assert!(is_k_strong(d, 2).holds);
    assert!(is_k_arc_strong(d, 2).unwrap().holds);
    assert!(is_eulerian(d));
    println!("rotative k=2: 2-strong, 2-arc-strong, eulerian");

    // But not 3-strong: five vertices are too few.
    let v = is_k_strong(d, 3);
    println!(
        "rotative k=2 vs 3-strong: holds={} witness={:?}",
        v.holds, v.witness
    );

    // A transitive tournament is not even 1-strong; the witness names a
    // separator (here empty: removing nothing already leaves it non-strong).
    let tt5 = Tournament::transitive(5);
    let v = is_k_strong(tt5.as_digraph(), 1);
    assert!(!v.holds);
    println!("TT5 vs strong: witness={:?}", v.witness.unwrap());

    // Arc connectivity witnesses are proper subsets with too few leaving
    // arcs.
    let v = is_k_arc_strong(tt5.as_digraph(), 1).unwrap();
    println!("TT5 vs 1-arc-strong: witness={:?}", v.witness.unwrap());

    // One inversion repairs it: {0, 4} only reverses the source-to-sink
    // arc, closing a spanning cycle.
    let fixed = tt5.invert(&[0, 4]);
    assert!(is_k_strong(fixed.as_digraph(), 1).holds);
    println!("TT5 after inverting {{0,4}}: strong");
}
