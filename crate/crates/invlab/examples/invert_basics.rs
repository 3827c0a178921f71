//! The core operation: reverse every arc with both endpoints in a chosen
//! vertex set, leaving digons and outside arcs untouched.

use invlab::digraph::Digraph;
use invlab::family::{InversionFamily, VectorLabeling};

fn main() {
    // A 4-cycle with a chord and one digon between 0 and 2.
    let d =
        Digraph::from_arcs(4, &[(0, 1), (1, 2), (2, 3), (3, 0), (1, 3), (0, 2), (2, 0)]).unwrap();
    println!("start:        {:?}", d.arcs().collect::<Vec<_>>());

    let once = d.invert(&[1, 2, 3]);
    println!("invert 1,2,3: {:?}", once.arcs().collect::<Vec<_>>());

    // Inverting the same set twice is the identity.
    let twice = once.invert(&[1, 2, 3]);
    assert_eq!(twice, d);

    // The digon 0<->2 survives any inversion touching it.
    assert_eq!(once.pair_arcs(0, 2), 2);

    // Families apply left to right; the result only depends on how often
    // each pair is covered.
    let family = InversionFamily::new(vec![vec![0, 1], vec![1, 2, 3]]);
    let applied = family.apply(&d);
    println!(
        "family of {}: {:?}",
        family.len(),
        applied.arcs().collect::<Vec<_>>()
    );

    // A vector labeling is the same data pair-wise: an arc flips exactly
    // when the endpoint labels have odd intersection. Coordinate i of the
    // labels is set i of the family.
    let labels = VectorLabeling::from_family(4, &family);
    assert_eq!(labels.apply(&d), family.apply(&d));
    println!("labels: {:?}", labels.vectors);

    let round = VectorLabeling::new(2, vec![0b01, 0b11, 0b10, 0b00]);
    println!("coordinate sets: {:?}", round.to_family().sets);
}
