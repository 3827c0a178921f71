//! Worst-case minimum family sizes over every tournament class of one
//! order, computed by canonical enumeration plus the exact solver.

use invlab::exact::{census_row, enumerate_tournaments, SearchBudget};

fn main() {
    let budget = SearchBudget::default();

    // Class counts grow fast: 2, 4, 12, 56, 456 for orders 3 to 7.
    for n in 3..=6 {
        println!(
            "order {n}: {} classes",
            enumerate_tournaments(n).unwrap().len()
        );
    }

    // Every tournament of order 5 becomes strong with one inversion, and
    // some need two for 2-strong.
    for k in [1, 2] {
        let row = census_row(5, k, &budget, 2).unwrap();
        println!(
            "n=5 k={k}: m_k={} (witness bits {}), m'_k={} (witness bits {})",
            row.m_k, row.m_k_witness, row.m_prime_k, row.m_prime_k_witness
        );
    }
}
