//! On-disk formats: bit-packed tournaments (.trn), arc-list digraphs (.dg),
//! and DOT export.

use invlab::digraph::{Digraph, Tournament};
use invlab::io::{emit_dg, emit_trn, parse_dg, parse_trn, to_dot};

fn main() {
    // Tournaments pack the strict upper triangle into one bit line: bit p
    // covers the p-th pair (i, j) with i < j, 1 meaning i beats j.
    let t = Tournament::rotative(2);
    let text = emit_trn(&t);
    print!("trn:\n{text}");
    assert_eq!(parse_trn(&text).unwrap(), t);

    // General digraphs list vertex count, arc count, then one arc per line.
    let d = Digraph::from_arcs(3, &[(0, 1), (1, 0), (1, 2)]).unwrap();
    let text = emit_dg(&d);
    print!("dg:\n{text}");
    assert_eq!(parse_dg(&text).unwrap(), d);

    // Parse errors carry 1-based line numbers.
    println!("{}", parse_dg("3 1\n0 7\n").unwrap_err());
    println!("{}", parse_trn("5\n101\n").unwrap_err());

    // DOT output draws digons as single double-headed edges.
    print!("dot:\n{}", to_dot(&d));
}
