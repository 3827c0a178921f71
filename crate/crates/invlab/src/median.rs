//! Vertex orders minimizing backward arcs, exactly on small tournaments and
//! by local search elsewhere.
//!
//! The constructions downstream never need true minimality, only the interval
//! property a relocation-stable order satisfies: every vertex beats at least
//! half of any window following it and loses to at least half of any window
//! preceding it. Local search under single-vertex relocation is stationary
//! exactly when that property holds, so both producers guarantee it.

use crate::digraph::Tournament;
use crate::error::Error;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

/// Cap for the exact subset dynamic program.
pub const EXACT_ORDER_MAX: usize = 22;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexOrder {
    pub order: Vec<usize>,
    /// Arcs pointing from a later position to an earlier one.
    pub backward_count: usize,
}

/// Arcs of `t` going right-to-left under `order`.
pub fn backward_arc_count(t: &Tournament, order: &[usize]) -> usize {
    let mut count = 0;
    for i in 0..order.len() {
        for j in i + 1..order.len() {
            if t.beats(order[j], order[i]) {
                count += 1;
            }
        }
    }
    count
}

/// Interval property: for every window `order[i..=j]`, the first vertex beats
/// at least half of the rest of the window and the last vertex loses to at
/// least half of the rest.
pub fn is_feedback_valid(t: &Tournament, order: &[usize]) -> bool {
    let n = order.len();
    for i in 0..n {
        let mut wins = 0usize;
        for j in i + 1..n {
            if t.beats(order[i], order[j]) {
                wins += 1;
            }
            if 2 * wins < j - i {
                return false;
            }
        }
    }
    for j in 0..n {
        let mut losses = 0usize;
        for i in (0..j).rev() {
            if t.beats(order[i], order[j]) {
                losses += 1;
            }
            if 2 * losses < j - i {
                return false;
            }
        }
    }
    true
}

/// Minimum-backward order by dynamic programming over vertex subsets, ties
/// broken toward the lexicographically smallest order.
pub fn exact_median_order(t: &Tournament) -> Result<VertexOrder, Error> {
    let n = t.n();
    if n > EXACT_ORDER_MAX {
        return Err(Error::TooLarge {
            what: "exact order instance",
            limit: EXACT_ORDER_MAX,
            got: n,
        });
    }
    let in_mask: Vec<u32> = (0..n)
        .map(|v| {
            let mut m = 0u32;
            for u in 0..n {
                if u != v && t.beats(u, v) {
                    m |= 1 << u;
                }
            }
            m
        })
        .collect();
    // best[s] = fewest backward arcs in an arrangement of the vertex set s.
    // Choosing the first element v of s makes every arc into v from the rest
    // of s backward.
    let full = (1u32 << n) - 1;
    let mut best = vec![u16::MAX; 1 << n];
    best[0] = 0;
    for s in 1..=full {
        let mut acc = u16::MAX;
        let mut rest = s;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let others = s & !(1 << v);
            let cost = (in_mask[v] & others).count_ones() as u16 + best[others as usize];
            acc = acc.min(cost);
        }
        best[s as usize] = acc;
    }
    let mut order = Vec::with_capacity(n);
    let mut s = full;
    while s != 0 {
        let mut rest = s;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let others = s & !(1 << v);
            let cost = (in_mask[v] & others).count_ones() as u16 + best[others as usize];
            if cost == best[s as usize] {
                order.push(v);
                s = others;
                break;
            }
        }
    }
    let backward_count = best[full as usize] as usize;
    debug_assert_eq!(backward_count, backward_arc_count(t, &order));
    Ok(VertexOrder {
        order,
        backward_count,
    })
}

/// Runs relocation search from `start` until no single-vertex move helps.
pub fn local_search_from(t: &Tournament, start: Vec<usize>) -> VertexOrder {
    let n = start.len();
    assert_eq!(n, t.n(), "order length mismatch");
    let mut order = start;
    let mut backward = backward_arc_count(t, &order);
    'scan: loop {
        for i in 0..n {
            // Move order[i] rightward past j, or leftward before j.
            let mut delta = 0i64;
            for j in i + 1..n {
                if t.beats(order[i], order[j]) {
                    delta += 1;
                } else {
                    delta -= 1;
                }
                if delta < 0 {
                    let v = order.remove(i);
                    order.insert(j, v);
                    backward = (backward as i64 + delta) as usize;
                    continue 'scan;
                }
            }
            let mut delta = 0i64;
            for j in (0..i).rev() {
                if t.beats(order[j], order[i]) {
                    delta += 1;
                } else {
                    delta -= 1;
                }
                if delta < 0 {
                    let v = order.remove(i);
                    order.insert(j, v);
                    backward = (backward as i64 + delta) as usize;
                    continue 'scan;
                }
            }
        }
        break;
    }
    debug_assert_eq!(backward, backward_arc_count(t, &order));
    assert!(
        is_feedback_valid(t, &order),
        "relocation-stable order must satisfy the interval property"
    );
    VertexOrder {
        order,
        backward_count: backward,
    }
}

/// Relocation-stable order from a seeded random start.
pub fn local_median_order(t: &Tournament, seed: u64) -> VertexOrder {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut start: Vec<usize> = (0..t.n()).collect();
    start.shuffle(&mut rng);
    local_search_from(t, start)
}

/// Exact order when the subset DP fits, local search above that.
pub fn median_order(t: &Tournament) -> VertexOrder {
    if t.n() <= EXACT_ORDER_MAX {
        exact_median_order(t).expect("size checked")
    } else {
        local_median_order(t, 0)
    }
}

/// Whether the first vertex of `order` still reaches at least `n - 2|f|`
/// vertices after deleting the vertex set `f`.
pub fn check_reachability_bound(
    t: &Tournament,
    order: &VertexOrder,
    f: &[usize],
) -> Result<bool, Error> {
    let n = t.n();
    let v1 = *order
        .order
        .first()
        .ok_or_else(|| Error::Invalid("empty order".into()))?;
    for &v in f {
        if v >= n {
            return Err(Error::Invalid(format!("vertex {v} out of range for n={n}")));
        }
        if v == v1 {
            return Err(Error::Invalid(format!(
                "first vertex {v1} of the order may not be deleted"
            )));
        }
    }
    let mut removed = vec![false; n];
    for &v in f {
        removed[v] = true;
    }
    let mut seen = vec![false; n];
    seen[v1] = true;
    let mut stack = vec![v1];
    let mut reach = 1usize;
    while let Some(u) = stack.pop() {
        for w in t.out_neighbors(u) {
            if !removed[w] && !seen[w] {
                seen[w] = true;
                reach += 1;
                stack.push(w);
            }
        }
    }
    Ok(reach + 2 * f.len() >= n)
}
