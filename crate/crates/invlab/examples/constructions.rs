//! Deterministic constructions: verified inversion families reaching
//! strongness targets, never searching.

use invlab::construct::{make_2strong, make_kstrong_2k, make_strong_k1, tt_construct};
use invlab::digraph::Tournament;

fn main() {
    // The transitive tournament is the adversarial input throughout; a
    // random tournament of this order is usually 2-strong already and the
    // constructions correctly return empty families there.
    let tt = Tournament::transitive(12);

    // One inversion always suffices for strong: invert the two endpoints
    // of a hamiltonian path.
    let cert = make_strong_k1(&tt).unwrap();
    assert!(cert.verified);
    println!(
        "strong:    {} set(s) {:?}",
        cert.family_size, cert.family.sets
    );
    let cert = make_2strong(&tt).unwrap();
    assert!(cert.family_size <= 2);
    println!("2-strong:  {} set(s)", cert.family_size);

    // The in-degree sweep reaches k-strong with at most 2k inversions.
    for k in [2, 3] {
        let cert = make_kstrong_2k(&tt, k).unwrap();
        assert!(cert.family_size <= 2 * k);
        println!("{k}-strong:  {} set(s), bound {}", cert.family_size, 2 * k);
    }

    // Transitive tournaments have a closed-form minimum; the constructed
    // family attains it.
    for (n, k) in [(5, 2), (6, 2), (7, 3), (9, 3)] {
        let cert = tt_construct(n, k).unwrap();
        println!("TT{n} to {k}-strong: {} set(s)", cert.family_size);
    }
}
