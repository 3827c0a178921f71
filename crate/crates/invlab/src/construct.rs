//! Deterministic inversion families that make tournaments k-strong, each
//! returned as a certificate that has been re-verified by flow before it is
//! handed back.

use crate::certificate::{Certificate, Property};
use crate::connectivity::{is_k_strong, is_strong};
use crate::digraph::Tournament;
use crate::error::Error;
use crate::family::InversionFamily;
use crate::median::median_order;
use serde::{Deserialize, Serialize};

/// Role-labeled vertex blocks used by the split constructions. The `a0`,
/// `a1`, `b0`, `b1` blocks are the crossing-repair picks inside `a` and `b`,
/// and `xs` holds the inversion sets assembled from them.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PartitionPlan {
    pub a: Vec<usize>,
    pub b: Vec<usize>,
    pub c: Vec<usize>,
    pub a0: Vec<usize>,
    pub a1: Vec<usize>,
    pub b0: Vec<usize>,
    pub b1: Vec<usize>,
    pub xs: Vec<Vec<usize>>,
}

fn certify(
    t: &Tournament,
    k: usize,
    sets: Vec<Vec<usize>>,
    provenance: &str,
) -> Result<Certificate, Error> {
    let family = InversionFamily::new(sets).without_noops();
    let cert = Certificate::new(Property::KStrong { k }, family, provenance).verify(t.as_digraph());
    if !cert.verified {
        return Err(Error::VerificationFailed(format!(
            "{provenance} did not make the input {k}-strong"
        )));
    }
    Ok(cert)
}

/// Hamiltonian path by insertion: each new vertex goes in front of the first
/// vertex it beats, or at the end.
fn hamiltonian_path(t: &Tournament) -> Vec<usize> {
    let mut path: Vec<usize> = vec![0];
    for v in 1..t.n() {
        let pos = path
            .iter()
            .position(|&u| t.beats(v, u))
            .unwrap_or(path.len());
        path.insert(pos, v);
    }
    debug_assert!(path.windows(2).all(|w| t.beats(w[0], w[1])));
    path
}

/// One inversion making `t` strong: the endpoints of a hamiltonian path.
pub fn make_strong_k1(t: &Tournament) -> Result<Certificate, Error> {
    if t.n() < 3 {
        return Err(Error::Invalid(format!(
            "making a tournament strong needs at least 3 vertices, got {}",
            t.n()
        )));
    }
    let provenance = "path endpoint inversion";
    if is_strong(t.as_digraph()) {
        return certify(t, 1, vec![], provenance);
    }
    let path = hamiltonian_path(t);
    let mut ends = vec![path[0], *path.last().unwrap()];
    ends.sort_unstable();
    certify(t, 1, vec![ends], provenance)
}

struct Shape {
    arcs: [(usize, usize); 10],
    sets: &'static [&'static [usize]],
}

/// The non-strong 5-vertex shapes with a hand-checked repair family each.
/// Vertices are the shape's own labels 0..5.
const SHAPES: [Shape; 4] = [
    // Transitive chain 0 -> 1 -> 2 -> 3 -> 4.
    Shape {
        arcs: [
            (0, 1),
            (0, 2),
            (0, 3),
            (0, 4),
            (1, 2),
            (1, 3),
            (1, 4),
            (2, 3),
            (2, 4),
            (3, 4),
        ],
        sets: &[&[0, 1, 3, 4], &[0, 4]],
    },
    // The strong 4-tournament on 0..4 beating a common sink 4.
    Shape {
        arcs: [
            (0, 1),
            (1, 2),
            (2, 3),
            (3, 0),
            (2, 0),
            (3, 1),
            (0, 4),
            (1, 4),
            (2, 4),
            (3, 4),
        ],
        sets: &[&[2, 3, 4], &[2, 3]],
    },
    // Source 0 over the triangle 1 -> 2 -> 3 -> 1, all beating sink 4.
    Shape {
        arcs: [
            (0, 1),
            (0, 2),
            (0, 3),
            (1, 2),
            (2, 3),
            (3, 1),
            (0, 4),
            (1, 4),
            (2, 4),
            (3, 4),
        ],
        sets: &[&[0, 1, 4]],
    },
    // Dominant pair 0 -> 1 over the triangle 2 -> 3 -> 4 -> 2.
    Shape {
        arcs: [
            (0, 1),
            (0, 2),
            (0, 3),
            (0, 4),
            (1, 2),
            (1, 3),
            (1, 4),
            (2, 3),
            (3, 4),
            (4, 2),
        ],
        sets: &[&[1, 2, 3, 4], &[0, 1, 2]],
    },
];

fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn go(rest: &mut Vec<usize>, acc: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest.is_empty() {
            out.push(acc.clone());
            return;
        }
        for i in 0..rest.len() {
            let v = rest.remove(i);
            acc.push(v);
            go(rest, acc, out);
            acc.pop();
            rest.insert(i, v);
        }
    }
    let mut out = Vec::new();
    go(&mut (0..n).collect(), &mut Vec::new(), &mut out);
    out
}

/// Matches a non-strong 5-tournament (or its converse) against the known
/// shapes and maps the shape's repair family through the found relabeling.
/// The same family works for the converse because inverting commutes with
/// reversing all arcs.
fn five_vertex_sets(t: &Tournament) -> Result<Vec<Vec<usize>>, Error> {
    let conv = t.converse();
    let perms = permutations(5);
    for cand in [t, &conv] {
        for shape in &SHAPES {
            for p in &perms {
                if shape.arcs.iter().all(|&(i, j)| cand.beats(p[i], p[j])) {
                    return Ok(shape
                        .sets
                        .iter()
                        .map(|s| {
                            let mut set: Vec<usize> = s.iter().map(|&i| p[i]).collect();
                            set.sort_unstable();
                            set
                        })
                        .collect());
                }
            }
        }
    }
    Err(Error::VerificationFailed(
        "5-vertex input matches no non-strong shape".into(),
    ))
}

/// The two-triangles tournament: three vertices of out-degree 4 over three of
/// out-degree 1. Repaired by one set per triangle, sharing a crossing pair.
fn two_triangles_sets(t: &Tournament) -> Result<Vec<Vec<usize>>, Error> {
    let bad = || Error::VerificationFailed("peeling left an unexpected 6-vertex shape".into());
    if t.n() != 6 {
        return Err(bad());
    }
    let top: Vec<usize> = (0..6).filter(|&v| t.out_degree(v) == 4).collect();
    let bot: Vec<usize> = (0..6).filter(|&v| t.out_degree(v) == 1).collect();
    if top.len() != 3 || bot.len() != 3 {
        return Err(bad());
    }
    if !top.iter().all(|&u| bot.iter().all(|&w| t.beats(u, w))) {
        return Err(bad());
    }
    let mut first = top.clone();
    first.push(bot[0]);
    first.sort_unstable();
    let mut second = bot.clone();
    second.push(top[0]);
    second.sort_unstable();
    Ok(vec![first, second])
}

fn two_strong_sets(t: &Tournament) -> Result<Vec<Vec<usize>>, Error> {
    let n = t.n();
    if is_k_strong(t.as_digraph(), 2).holds {
        return Ok(vec![]);
    }
    if n == 5 {
        if !is_strong(t.as_digraph()) {
            return five_vertex_sets(t);
        }
        // Strong case: walk a hamiltonian cycle and reverse the minority
        // chord direction, one pair at a time.
        let cycle = permutations(4)
            .iter()
            .map(|p| {
                let mut c = vec![0];
                c.extend(p.iter().map(|&i| i + 1));
                c
            })
            .find(|c| (0..5).all(|i| t.beats(c[i], c[(i + 1) % 5])))
            .expect("strong tournaments have a hamiltonian cycle");
        let mut with = Vec::new();
        let mut against = Vec::new();
        for i in 0..5 {
            let u = cycle[i];
            let w = cycle[(i + 2) % 5];
            let mut pair = vec![u, w];
            pair.sort_unstable();
            if t.beats(u, w) {
                with.push(pair);
            } else {
                against.push(pair);
            }
        }
        return Ok(if with.len() <= against.len() {
            with
        } else {
            against
        });
    }
    // Peel a vertex that keeps degree slack, repair the rest, and lift the
    // sets back through the relabeling.
    if let Some(v) = (0..n).find(|&v| t.out_degree(v).min(t.in_degree(v)) >= 2) {
        let rest: Vec<usize> = (0..n).filter(|&u| u != v).collect();
        let sets = two_strong_sets(&t.induced(&rest))?;
        return Ok(sets
            .into_iter()
            .map(|s| s.into_iter().map(|i| rest[i]).collect())
            .collect());
    }
    two_triangles_sets(t)
}

/// At most two inversions making `t` 2-strong.
pub fn make_2strong(t: &Tournament) -> Result<Certificate, Error> {
    if t.n() < 5 {
        return Err(Error::Invalid(format!(
            "making a tournament 2-strong needs at least 5 vertices, got {}",
            t.n()
        )));
    }
    let sets = two_strong_sets(t)?;
    certify(t, 2, sets, "chord repair and shape templates")
}

/// At most 2k inversions: sweep the first 2k positions into agreement with a
/// rotative core on the first 2k+1 vertices while pointing every later vertex
/// into the first k positions and out of the next k.
pub fn make_kstrong_2k(t: &Tournament, k: usize) -> Result<Certificate, Error> {
    let n = t.n();
    if n < 2 * k + 1 {
        return Err(Error::Invalid(format!(
            "need at least {} vertices for strength {k}, got {n}",
            2 * k + 1
        )));
    }
    let provenance = "sweep to rotative core";
    if k == 0 || is_k_strong(t.as_digraph(), k).holds {
        return certify(t, k, vec![], provenance);
    }
    let target = Tournament::rotative(k);
    let mut cur = t.as_digraph().clone();
    let mut sets = Vec::with_capacity(2 * k);
    for i in 0..2 * k {
        let mut x = vec![i];
        for j in i + 1..2 * k + 1 {
            if cur.has_arc(i, j) != target.beats(i, j) {
                x.push(j);
            }
        }
        for j in 2 * k + 1..n {
            let flip = if i < k {
                cur.has_arc(i, j)
            } else {
                cur.has_arc(j, i)
            };
            if flip {
                x.push(j);
            }
        }
        cur = cur.invert(&x);
        sets.push(x);
    }
    debug_assert_eq!(
        cur.induced(&(0..2 * k + 1).collect::<Vec<_>>()),
        *target.as_digraph()
    );
    certify(t, k, sets, provenance)
}

/// The exact-cost family for the transitive tournament: one wrap-around set
/// when three blocks of size k fit, otherwise the two parity classes.
pub fn tt_construct(n: usize, k: usize) -> Result<Certificate, Error> {
    if n < 2 * k + 1 {
        return Err(Error::Invalid(format!(
            "need at least {} vertices for strength {k}, got {n}",
            2 * k + 1
        )));
    }
    let t = Tournament::transitive(n);
    let sets = if k == 0 {
        vec![]
    } else if n >= 3 * k {
        let mut wrap: Vec<usize> = (0..k).collect();
        wrap.extend(2 * k..n);
        vec![wrap]
    } else {
        vec![
            (0..n).filter(|i| i % 2 == 0).collect(),
            (0..n).filter(|i| i % 2 == 1).collect(),
        ]
    };
    certify(&t, k, sets, "transitive block rotation")
}

fn block_order(t: &Tournament, verts: &[usize]) -> Vec<usize> {
    let sub = t.induced(verts);
    median_order(&sub)
        .order
        .into_iter()
        .map(|i| verts[i])
        .collect()
}

/// Picks 2k vertices inside each side so that inverting across repairs the
/// crossing arcs: on the `a` side, the tail-of-order vertices that are short
/// on out-neighbours in `b` plus a head-of-order filler; mirrored on the `b`
/// side with in-neighbours from `a`.
fn crossing_plan(t: &Tournament, a: &[usize], b: &[usize], k: usize) -> PartitionPlan {
    let m = a.len();
    debug_assert!(m == b.len() && m >= 4 * k && k >= 1);
    let a_order = block_order(t, a);
    let b_order = block_order(t, b);
    let a0: Vec<usize> = a_order[m - 2 * k..]
        .iter()
        .copied()
        .filter(|&v| b.iter().filter(|&&w| t.beats(v, w)).count() < k)
        .collect();
    let a1: Vec<usize> = a_order[..2 * k - a0.len()].to_vec();
    let b0: Vec<usize> = b_order[..2 * k]
        .iter()
        .copied()
        .filter(|&v| a.iter().filter(|&&w| t.beats(w, v)).count() < k)
        .collect();
    let b1: Vec<usize> = b_order[m - (2 * k - b0.len())..].to_vec();
    debug_assert_eq!(a0.len() + a1.len(), 2 * k);
    debug_assert_eq!(b0.len() + b1.len(), 2 * k);
    PartitionPlan {
        a: a.to_vec(),
        b: b.to_vec(),
        c: Vec::new(),
        a0,
        a1,
        b0,
        b1,
        xs: Vec::new(),
    }
}

fn sorted_union(parts: &[&[usize]]) -> Vec<usize> {
    let mut out: Vec<usize> = parts.iter().flat_map(|p| p.iter().copied()).collect();
    out.sort_unstable();
    out
}

/// The crossing-repair set for equal sides of size 6k: after inverting it,
/// no k-1 deletions can cut every path from `a`-vertices into `b`, nor every
/// path from `a` onto a `b`-vertex.
pub fn crossing_repair_set(
    t: &Tournament,
    a: &[usize],
    b: &[usize],
    k: usize,
) -> Result<Vec<usize>, Error> {
    if k == 0 {
        return Err(Error::Invalid("strength 0 needs no repair set".into()));
    }
    if a.len() != 6 * k || b.len() != 6 * k {
        return Err(Error::Invalid(format!(
            "sides must each have {} vertices, got {} and {}",
            6 * k,
            a.len(),
            b.len()
        )));
    }
    let mut all = sorted_union(&[a, b]);
    all.dedup();
    if all.len() != a.len() + b.len() || all != (0..t.n()).collect::<Vec<_>>() {
        return Err(Error::Invalid("sides must partition the vertex set".into()));
    }
    let plan = crossing_plan(t, a, b, k);
    Ok(sorted_union(&[&plan.a0, &plan.a1, &plan.b0, &plan.b1]))
}

/// One inversion making `t` k-strong, for n at least 19k-2: repair the
/// crossing arcs between the last 6k and first 6k vertices of a
/// feedback-valid order.
pub fn single_inversion_19k(t: &Tournament, k: usize) -> Result<Certificate, Error> {
    let provenance = "order split single repair set";
    if k == 0 {
        return certify(t, 0, vec![], provenance);
    }
    let n = t.n();
    if n < 19 * k - 2 {
        return Err(Error::Invalid(format!(
            "need at least {} vertices for strength {k}, got {n}",
            19 * k - 2
        )));
    }
    let order = median_order(t).order;
    let b = &order[..6 * k];
    let a = &order[n - 6 * k..];
    let plan = crossing_plan(t, a, b, k);
    let x = sorted_union(&[&plan.a0, &plan.a1, &plan.b0, &plan.b1]);
    certify(t, k, vec![x], provenance)
}

/// Three inversions making `t` k-strong, for n at least 11k-2. The sets
/// cancel inside each side, so only the arcs between the two picks flip.
pub fn three_inversions_11k(t: &Tournament, k: usize) -> Result<Certificate, Error> {
    let provenance = "order split three crossing sets";
    if k == 0 {
        return certify(t, 0, vec![], provenance);
    }
    let n = t.n();
    if n < 11 * k - 2 {
        return Err(Error::Invalid(format!(
            "need at least {} vertices for strength {k}, got {n}",
            11 * k - 2
        )));
    }
    let order = median_order(t).order;
    let b = &order[..4 * k];
    let a = &order[n - 4 * k..];
    let plan = crossing_plan(t, a, b, k);
    let x1 = sorted_union(&[&plan.a0, &plan.a1]);
    let x2 = sorted_union(&[&plan.b0, &plan.b1]);
    let x3 = sorted_union(&[&x1, &x2]);
    certify(t, k, vec![x1, x2, x3], provenance)
}

type Layers = (Vec<usize>, Vec<usize>, Vec<usize>);

/// Nested dominant layers: repeatedly take a maximum out-degree vertex
/// (smallest index on ties) and restrict to its out-neighbourhood. The first
/// k picks dominate everything later, the next 2k-1 dominate the final pool.
fn peel_layers(t: &Tournament, k: usize) -> Result<Layers, Error> {
    let mut pool: Vec<usize> = (0..t.n()).collect();
    let mut picks = Vec::with_capacity(3 * k - 1);
    for step in 0..3 * k - 1 {
        if pool.is_empty() {
            return Err(Error::EmbeddingFailed(format!(
                "layer pool ran dry after {step} picks on {} vertices",
                t.n()
            )));
        }
        let mut best = pool[0];
        let mut best_deg = 0;
        for &v in &pool {
            let deg = pool.iter().filter(|&&u| t.beats(v, u)).count();
            if deg > best_deg {
                best = v;
                best_deg = deg;
            }
        }
        picks.push(best);
        pool.retain(|&u| u != best && t.beats(best, u));
    }
    if pool.len() < k {
        return Err(Error::EmbeddingFailed(format!(
            "final layer needs {k} vertices, only {} remain on {} vertices",
            pool.len(),
            t.n()
        )));
    }
    let a3 = pool[..k].to_vec();
    let a1 = picks[..k].to_vec();
    let a2 = picks[k..].to_vec();
    debug_assert!(a1
        .iter()
        .all(|&u| a2.iter().chain(&a3).all(|&v| t.beats(u, v))));
    debug_assert!(a2.iter().all(|&u| a3.iter().all(|&v| t.beats(u, v))));
    Ok((a1, a2, a3))
}

/// One inversion built from three nested layers of sizes k, 2k-1, k: flip
/// the outer layers plus every outside vertex that is short on neighbours
/// into the layer union. Succeeds whenever n is at least k times 2^(3k-1);
/// below that the peeling may run dry and reports it.
pub fn single_inversion_layered(t: &Tournament, k: usize) -> Result<Certificate, Error> {
    let provenance = "dominant layer single set";
    if k == 0 {
        return certify(t, 0, vec![], provenance);
    }
    let (a1, a2, a3) = peel_layers(t, k)?;
    let layers = sorted_union(&[&a1, &a2, &a3]);
    let mut in_layers = vec![false; t.n()];
    for &v in &layers {
        in_layers[v] = true;
    }
    let short: Vec<usize> = (0..t.n())
        .filter(|&v| !in_layers[v])
        .filter(|&v| {
            let out = layers.iter().filter(|&&u| t.beats(v, u)).count();
            out < k || layers.len() - out < k
        })
        .collect();
    let x = sorted_union(&[&a1, &a3, &short]);
    certify(t, k, vec![x], provenance)
}

/// At most n-1 sets turning `t1` into exactly `t2`: position i gets the set
/// of later vertices whose arc with it disagrees.
pub fn transform_between(t1: &Tournament, t2: &Tournament) -> Result<InversionFamily, Error> {
    if t1.n() != t2.n() {
        return Err(Error::Invalid(format!(
            "tournaments have different orders {} and {}",
            t1.n(),
            t2.n()
        )));
    }
    let n = t1.n();
    let mut cur = t1.as_digraph().clone();
    let mut sets = Vec::new();
    for i in 0..n.saturating_sub(1) {
        let mut x = vec![i];
        for j in i + 1..n {
            if cur.has_arc(i, j) != t2.beats(i, j) {
                x.push(j);
            }
        }
        if x.len() >= 2 {
            cur = cur.invert(&x);
            sets.push(x);
        }
    }
    if cur != *t2.as_digraph() {
        return Err(Error::VerificationFailed(
            "sweep did not reproduce the target".into(),
        ));
    }
    Ok(InversionFamily::new(sets))
}
