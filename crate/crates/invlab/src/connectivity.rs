//! Connectivity checks with refutable answers.
//!
//! Every negative verdict carries a witness that a brute-force re-check can
//! confirm: a vertex cut, a set with too few leaving arcs, or a size bound.
//! Positive verdicts rest on max-flow, so they are exact, not heuristic.

use crate::digraph::Digraph;
use crate::error::Error;
use serde::{Deserialize, Serialize};
use std::collections::VecDeque;

/// Dense-matrix max flow. Augments along shortest residual paths, so with a
/// small `limit` the number of rounds is at most `limit`.
#[derive(Clone)]
pub(crate) struct DenseFlow {
    n: usize,
    cap: Vec<i64>,
}

impl DenseFlow {
    pub(crate) fn new(n: usize) -> Self {
        DenseFlow {
            n,
            cap: vec![0; n * n],
        }
    }

    pub(crate) fn add_cap(&mut self, u: usize, v: usize, c: i64) {
        assert!(u < self.n && v < self.n && u != v);
        self.cap[u * self.n + v] += c;
    }

    pub(crate) fn cap(&self, u: usize, v: usize) -> i64 {
        self.cap[u * self.n + v]
    }

    /// Runs to completion or until the flow reaches `limit`, whichever comes
    /// first. Leaves residual capacities behind for cut extraction.
    pub(crate) fn max_flow(&mut self, s: usize, t: usize, limit: i64) -> i64 {
        assert_ne!(s, t);
        let n = self.n;
        let mut total = 0;
        let mut parent = vec![usize::MAX; n];
        while total < limit {
            parent.iter_mut().for_each(|p| *p = usize::MAX);
            parent[s] = s;
            let mut queue = VecDeque::new();
            queue.push_back(s);
            'bfs: while let Some(u) = queue.pop_front() {
                for (v, p) in parent.iter_mut().enumerate() {
                    if *p == usize::MAX && self.cap[u * n + v] > 0 {
                        *p = u;
                        if v == t {
                            break 'bfs;
                        }
                        queue.push_back(v);
                    }
                }
            }
            if parent[t] == usize::MAX {
                break;
            }
            let mut bottleneck = i64::MAX;
            let mut v = t;
            while v != s {
                let u = parent[v];
                bottleneck = bottleneck.min(self.cap[u * n + v]);
                v = u;
            }
            bottleneck = bottleneck.min(limit - total);
            let mut v = t;
            while v != s {
                let u = parent[v];
                self.cap[u * n + v] -= bottleneck;
                self.cap[v * n + u] += bottleneck;
                v = u;
            }
            total += bottleneck;
        }
        total
    }

    /// Vertices reachable from `s` in the residual network.
    pub(crate) fn source_side(&self, s: usize) -> Vec<bool> {
        let n = self.n;
        let mut seen = vec![false; n];
        seen[s] = true;
        let mut stack = vec![s];
        while let Some(u) = stack.pop() {
            for (v, was) in seen.iter_mut().enumerate() {
                if !*was && self.cap[u * n + v] > 0 {
                    *was = true;
                    stack.push(v);
                }
            }
        }
        seen
    }
}

/// Strongly connected components in topological order of the condensation
/// (components with no incoming arcs from later components come first).
pub fn strong_components(d: &Digraph) -> Vec<Vec<usize>> {
    let n = d.n();
    let mut finish = Vec::with_capacity(n);
    let mut seen = vec![false; n];
    for start in 0..n {
        if seen[start] {
            continue;
        }
        // Iterative DFS recording finish order.
        let mut stack = vec![(start, d.out_neighbors(start))];
        seen[start] = true;
        while let Some((v, iter)) = stack.last_mut() {
            match iter.next() {
                Some(w) if !seen[w] => {
                    seen[w] = true;
                    stack.push((w, d.out_neighbors(w)));
                }
                Some(_) => {}
                None => {
                    finish.push(*v);
                    stack.pop();
                }
            }
        }
    }
    let mut comps = Vec::new();
    let mut assigned = vec![false; n];
    for &root in finish.iter().rev() {
        if assigned[root] {
            continue;
        }
        let mut comp = vec![root];
        assigned[root] = true;
        let mut stack = vec![root];
        while let Some(v) = stack.pop() {
            for w in d.in_neighbors(v) {
                if !assigned[w] {
                    assigned[w] = true;
                    comp.push(w);
                    stack.push(w);
                }
            }
        }
        comp.sort_unstable();
        comps.push(comp);
    }
    comps
}

pub fn is_strong(d: &Digraph) -> bool {
    d.n() >= 1 && strong_components(d).len() == 1
}

/// What a failed connectivity check points at.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum WitnessKind {
    /// Deleting `members` leaves a digraph that is not strong.
    VertexSet,
    /// `members` is a proper nonempty vertex set with only `deficit` leaving arcs.
    ArcSide,
    /// `members` traps more imbalance than its free boundary can absorb.
    InfeasibleSet,
    /// The digraph has only `deficit` vertices, too few for the requirement.
    TooSmall,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CutWitness {
    pub kind: WitnessKind,
    pub members: Vec<usize>,
    /// Separator size, leaving-arc count, vertex count, or excess imbalance,
    /// depending on `kind`.
    pub deficit: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub holds: bool,
    pub witness: Option<CutWitness>,
}

impl Verdict {
    fn yes() -> Self {
        Verdict {
            holds: true,
            witness: None,
        }
    }

    pub(crate) fn no(kind: WitnessKind, members: Vec<usize>, deficit: usize) -> Self {
        Verdict {
            holds: false,
            witness: Some(CutWitness {
                kind,
                members,
                deficit,
            }),
        }
    }
}

/// Deleting any `k - 1` vertices must leave a strong digraph, and there must
/// be at least `k + 1` vertices to delete from.
pub fn is_k_strong(d: &Digraph, k: usize) -> Verdict {
    let n = d.n();
    if n < k + 1 {
        return Verdict::no(WitnessKind::TooSmall, Vec::new(), n);
    }
    if k == 0 {
        return Verdict::yes();
    }
    if !is_strong(d) {
        return Verdict::no(WitnessKind::VertexSet, Vec::new(), 0);
    }
    if k == 1 {
        return Verdict::yes();
    }
    // Internally disjoint paths only matter for pairs without a direct arc.
    for u in 0..n {
        for v in 0..n {
            if u == v || d.has_arc(u, v) {
                continue;
            }
            // Split each vertex: w enters at node w, leaves at node n + w.
            let mut net = DenseFlow::new(2 * n);
            for w in 0..n {
                net.add_cap(w, n + w, 1);
            }
            for (x, y) in d.arcs() {
                net.add_cap(n + x, y, k as i64);
            }
            let flow = net.max_flow(n + u, v, k as i64);
            if (flow as usize) < k {
                let side = net.source_side(n + u);
                let separator: Vec<usize> = (0..n)
                    .filter(|&w| w != u && w != v && side[w] && !side[n + w])
                    .collect();
                return Verdict::no(WitnessKind::VertexSet, separator, flow as usize);
            }
        }
    }
    Verdict::yes()
}

/// Every proper nonempty vertex set must have at least `k` leaving arcs.
pub fn is_k_arc_strong(d: &Digraph, k: usize) -> Result<Verdict, Error> {
    let n = d.n();
    if n < 2 {
        return Err(Error::Invalid(format!(
            "arc connectivity needs at least 2 vertices, got {n}"
        )));
    }
    if k == 0 {
        return Ok(Verdict::yes());
    }
    for v in 1..n {
        // Root side: sets containing vertex 0 but not v.
        let mut net = DenseFlow::new(n);
        for (x, y) in d.arcs() {
            net.add_cap(x, y, 1);
        }
        let flow = net.max_flow(0, v, k as i64);
        if (flow as usize) < k {
            let side = net.source_side(0);
            let members: Vec<usize> = (0..n).filter(|&w| side[w]).collect();
            return Ok(Verdict::no(WitnessKind::ArcSide, members, flow as usize));
        }
        // And sets containing v but not vertex 0.
        let mut net = DenseFlow::new(n);
        for (x, y) in d.arcs() {
            net.add_cap(x, y, 1);
        }
        let flow = net.max_flow(v, 0, k as i64);
        if (flow as usize) < k {
            let side = net.source_side(v);
            let members: Vec<usize> = (0..n).filter(|&w| side[w]).collect();
            return Ok(Verdict::no(WitnessKind::ArcSide, members, flow as usize));
        }
    }
    Ok(Verdict::yes())
}

/// Equal in- and out-degree at every vertex.
pub fn is_eulerian(d: &Digraph) -> bool {
    (0..d.n()).all(|v| d.out_degree(v) == d.in_degree(v))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::digraph::{random_digraph, Tournament};

    fn brute_is_k_strong(d: &Digraph, k: usize) -> bool {
        let n = d.n();
        if n < k + 1 {
            return false;
        }
        // Every deletion of fewer than k vertices must leave a strong digraph.
        for mask in 0u32..1 << n {
            let removed = mask.count_ones() as usize;
            if removed >= k {
                continue;
            }
            let kept: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 0).collect();
            if !is_strong(&d.induced(&kept)) {
                return false;
            }
        }
        true
    }

    fn brute_is_k_arc_strong(d: &Digraph, k: usize) -> bool {
        let n = d.n();
        for mask in 1u32..(1 << n) - 1 {
            let mut leaving = 0;
            for (u, v) in d.arcs() {
                if mask >> u & 1 == 1 && mask >> v & 1 == 0 {
                    leaving += 1;
                }
            }
            if leaving < k {
                return false;
            }
        }
        true
    }

    #[test]
    fn vertex_connectivity_matches_brute_force() {
        for seed in 0..120 {
            let n = 2 + (seed as usize % 6);
            let d = random_digraph(n, 0.55, seed);
            for k in 0..4 {
                let verdict = is_k_strong(&d, k);
                assert_eq!(
                    verdict.holds,
                    brute_is_k_strong(&d, k),
                    "n={n} k={k} seed={seed}"
                );
                if let Some(w) = verdict.witness {
                    match w.kind {
                        WitnessKind::TooSmall => assert!(n < k + 1),
                        WitnessKind::VertexSet => {
                            assert!(w.members.len() < k || (w.members.is_empty() && k >= 1));
                            let kept: Vec<usize> =
                                (0..n).filter(|v| !w.members.contains(v)).collect();
                            assert!(!is_strong(&d.induced(&kept)));
                        }
                        _ => panic!("wrong witness kind {:?}", w.kind),
                    }
                }
            }
        }
    }

    #[test]
    fn arc_connectivity_matches_brute_force() {
        for seed in 0..120 {
            let n = 2 + (seed as usize % 6);
            let d = random_digraph(n, 0.55, 1000 + seed);
            for k in 0..4 {
                let verdict = is_k_arc_strong(&d, k).unwrap();
                assert_eq!(
                    verdict.holds,
                    brute_is_k_arc_strong(&d, k),
                    "n={n} k={k} seed={seed}"
                );
                if let Some(w) = verdict.witness {
                    assert_eq!(w.kind, WitnessKind::ArcSide);
                    assert!(!w.members.is_empty() && w.members.len() < n);
                    let leaving = d
                        .arcs()
                        .filter(|&(u, v)| w.members.contains(&u) && !w.members.contains(&v))
                        .count();
                    assert_eq!(leaving, w.deficit);
                    assert!(leaving < k);
                }
            }
        }
    }

    #[test]
    fn rotative_tournament_connectivity() {
        for k in 1..4 {
            let r = Tournament::rotative(k).into_digraph();
            assert!(is_k_strong(&r, k).holds);
            assert!(is_k_arc_strong(&r, k).unwrap().holds);
            assert!(!is_k_arc_strong(&r, k + 1).unwrap().holds);
            assert!(!is_k_strong(&r, k + 1).holds);
        }
    }

    #[test]
    fn transitive_tournament_is_not_strong() {
        let t = Tournament::transitive(5).into_digraph();
        let verdict = is_k_strong(&t, 1);
        assert!(!verdict.holds);
        assert_eq!(verdict.witness.unwrap().members, Vec::<usize>::new());
        assert!(!is_strong(&t));
        assert!(is_k_strong(&t, 0).holds);
    }

    #[test]
    fn component_topological_order() {
        // Two triangles, all arcs from the first to the second.
        let mut arcs = vec![(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)];
        for u in 0..3 {
            for v in 3..6 {
                arcs.push((u, v));
            }
        }
        let d = Digraph::from_arcs(6, &arcs).unwrap();
        let comps = strong_components(&d);
        assert_eq!(comps, vec![vec![0, 1, 2], vec![3, 4, 5]]);
    }

    #[test]
    fn eulerian_checks() {
        assert!(is_eulerian(&Tournament::rotative(2).into_digraph()));
        assert!(is_eulerian(&Tournament::rotative(3).into_digraph()));
        assert!(!is_eulerian(&Tournament::transitive(3).into_digraph()));
        let cycle4 = Digraph::from_arcs(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert!(is_eulerian(&cycle4));
        assert!(is_eulerian(&Digraph::empty(3)));
    }

    #[test]
    fn labeled_eulerian_tournament_counts() {
        // 1, 2, 24 eulerian tournaments on 1, 3, 5 labeled vertices.
        for (n, want) in [(1usize, 1usize), (3, 2), (5, 24)] {
            let pairs = n * (n - 1) / 2;
            let mut count = 0;
            for mask in 0u32..1 << pairs {
                let mut arcs = Vec::with_capacity(pairs);
                let mut bit = 0;
                for i in 0..n {
                    for j in i + 1..n {
                        if mask >> bit & 1 == 1 {
                            arcs.push((i, j));
                        } else {
                            arcs.push((j, i));
                        }
                        bit += 1;
                    }
                }
                if is_eulerian(&Digraph::from_arcs(n, &arcs).unwrap()) {
                    count += 1;
                }
            }
            assert_eq!(count, want, "n={n}");
        }
    }

    #[test]
    fn small_sizes() {
        let single = Digraph::empty(1);
        assert!(is_strong(&single));
        assert!(is_k_strong(&single, 0).holds);
        let v = is_k_strong(&single, 1);
        assert!(!v.holds);
        assert_eq!(v.witness.unwrap().kind, WitnessKind::TooSmall);
        assert!(is_k_arc_strong(&single, 1).is_err());
        let digon = Digraph::from_arcs(2, &[(0, 1), (1, 0)]).unwrap();
        assert!(is_k_arc_strong(&digon, 1).unwrap().holds);
        assert!(!is_k_arc_strong(&digon, 2).unwrap().holds);
        assert!(is_k_strong(&digon, 1).holds);
    }
}
