//! Median orders: vertex orders with the fewest backward arcs, the main
//! structural tool behind the single-inversion constructions.

use invlab::digraph::Tournament;
use invlab::median::{
    backward_arc_count, check_reachability_bound, exact_median_order, local_median_order,
    median_order,
};

fn main() {
    let t = Tournament::random(10, 77);

    // Exact search is affordable at small orders.
    let exact = exact_median_order(&t).unwrap();
    println!(
        "exact:  {:?} with {} backward arcs",
        exact.order, exact.backward_count
    );

    // Local search scales further and often lands on the same count.
    let local = local_median_order(&t, 5);
    println!(
        "local:  {:?} with {} backward arcs",
        local.order, local.backward_count
    );
    assert!(local.backward_count >= exact.backward_count);

    // median_order picks the exact algorithm while it is affordable.
    let auto = median_order(&t);
    assert_eq!(auto.backward_count, exact.backward_count);

    // The counts come from one shared definition.
    assert_eq!(backward_arc_count(&t, &exact.order), exact.backward_count);

    // Under a median order, the first vertex still reaches at least
    // n - 2|F| vertices after any vertex set F is deleted.
    let f = vec![exact.order[8], exact.order[9]];
    assert!(check_reachability_bound(&t, &exact, &f).unwrap());
    println!("first vertex keeps its reach after deleting {f:?}");
}
