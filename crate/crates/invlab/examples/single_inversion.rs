//! Above modest order thresholds, one inversion reaches k-arc-strong and
//! three suffice much earlier, both found through a median order.

use invlab::connectivity::is_k_arc_strong;
use invlab::construct::{single_inversion_19k, single_inversion_layered, three_inversions_11k};
use invlab::digraph::Tournament;

fn main() {
    // One set at order 19k-2.
    let t = Tournament::random(17, 11);
    let cert = single_inversion_19k(&t, 1).unwrap();
    assert_eq!(cert.family_size, 1);
    let fixed = cert.family.apply(t.as_digraph());
    assert!(is_k_arc_strong(&fixed, 1).unwrap().holds);
    println!(
        "order 17, k=1: one set of {} vertices",
        cert.family.sets[0].len()
    );

    // Three sets already at order 11k-2.
    let t = Tournament::random(20, 5);
    let cert = three_inversions_11k(&t, 2).unwrap();
    assert!(cert.family_size <= 3);
    println!("order 20, k=2: {} sets", cert.family_size);

    // Below the threshold the construction declines instead of guessing.
    let small = Tournament::random(10, 1);
    println!(
        "order 10, k=1 via 19k: {:?}",
        single_inversion_19k(&small, 1).err()
    );

    // The layered variant needs nested dominant layers rather than a
    // minimum order; it works on transitive tournaments of any size.
    let tt = Tournament::transitive(25);
    let cert = single_inversion_layered(&tt, 2).unwrap();
    assert_eq!(cert.family_size, 1);
    println!(
        "TT25, k=2 layered: one set of {} vertices",
        cert.family.sets[0].len()
    );
}
