//! Mixed graphs and eulerian completion.
//!
//! A mixed graph has some pairs already oriented (arcs, digons allowed) and
//! some left free (edges). [`eulerian_orientation`] orients the free edges so
//! that every vertex ends balanced, or returns a set that provably traps more
//! imbalance than its free boundary can carry away.

use crate::connectivity::{CutWitness, DenseFlow, WitnessKind};
use crate::digraph::{Digraph, Tournament};
use crate::error::Error;

/// Vertices `0..n` with undirected edges and directed arcs. A pair carries at
/// most one edge or one arc, except that opposite arcs (a digon) may coexist.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MixedGraph {
    n: usize,
    edges: Vec<(usize, usize)>,
    arcs: Vec<(usize, usize)>,
}

impl MixedGraph {
    pub fn new(n: usize, edges: &[(usize, usize)], arcs: &[(usize, usize)]) -> Result<Self, Error> {
        let mut edge_norm = Vec::with_capacity(edges.len());
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::Invalid(format!(
                    "edge ({u}, {v}) out of range for n={n}"
                )));
            }
            if u == v {
                return Err(Error::Invalid(format!("loop edge at {u}")));
            }
            edge_norm.push((u.min(v), u.max(v)));
        }
        edge_norm.sort_unstable();
        if edge_norm.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::Invalid("duplicate edge".into()));
        }
        let mut arc_norm = arcs.to_vec();
        for &(u, v) in arcs {
            if u >= n || v >= n {
                return Err(Error::Invalid(format!(
                    "arc ({u}, {v}) out of range for n={n}"
                )));
            }
            if u == v {
                return Err(Error::Invalid(format!("loop arc at {u}")));
            }
        }
        arc_norm.sort_unstable();
        if arc_norm.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::Invalid("duplicate arc".into()));
        }
        for &(u, v) in &arc_norm {
            if edge_norm.binary_search(&(u.min(v), u.max(v))).is_ok() {
                return Err(Error::Invalid(format!(
                    "pair ({u}, {v}) carries both an edge and an arc"
                )));
            }
        }
        Ok(MixedGraph {
            n,
            edges: edge_norm,
            arcs: arc_norm,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn arcs(&self) -> &[(usize, usize)] {
        &self.arcs
    }

    /// Underlying multigraph degree: incident edges plus incident arcs.
    pub fn degree(&self, v: usize) -> usize {
        let e = self
            .edges
            .iter()
            .filter(|&&(a, b)| a == v || b == v)
            .count();
        let a = self.arcs.iter().filter(|&&(x, y)| x == v || y == v).count();
        e + a
    }
}

/// Outcome of trying to orient the free edges.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Orientation {
    Oriented(Digraph),
    /// No balanced orientation exists; the witness set has more arc imbalance
    /// than free boundary edges.
    Infeasible(CutWitness),
}

/// Orients every free edge so all vertices end with equal in- and out-degree,
/// keeping the arcs as given. Needs every underlying degree even.
pub fn eulerian_orientation(m: &MixedGraph) -> Result<Orientation, Error> {
    let n = m.n();
    for v in 0..n {
        let d = m.degree(v);
        if !d.is_multiple_of(2) {
            return Err(Error::Invalid(format!(
                "vertex {v} has odd degree {d}, no balanced orientation exists"
            )));
        }
    }
    // Imbalance under the arcs plus a default low-to-high edge orientation.
    // Each flow unit re-orients one default edge and moves two units of
    // out-minus-in imbalance across it.
    let mut beta = vec![0i64; n];
    for &(u, v) in m.arcs() {
        beta[u] += 1;
        beta[v] -= 1;
    }
    for &(u, v) in m.edges() {
        beta[u] += 1;
        beta[v] -= 1;
    }
    let s = n;
    let t = n + 1;
    let mut net = DenseFlow::new(n + 2);
    let mut need = 0;
    for (v, &b) in beta.iter().enumerate() {
        debug_assert_eq!(b.rem_euclid(2), 0);
        let delta = b / 2;
        if delta > 0 {
            net.add_cap(s, v, delta);
            need += delta;
        } else if delta < 0 {
            net.add_cap(v, t, -delta);
        }
    }
    for &(u, v) in m.edges() {
        net.add_cap(u, v, 1);
    }
    let flow = net.max_flow(s, t, need);
    if flow == need {
        let mut arcs: Vec<(usize, usize)> = m.arcs().to_vec();
        for &(u, v) in m.edges() {
            if net.cap(u, v) > 0 {
                arcs.push((u, v));
            } else {
                arcs.push((v, u));
            }
        }
        let d = Digraph::from_arcs(n, &arcs).expect("oriented edges stay simple");
        debug_assert!(crate::connectivity::is_eulerian(&d));
        return Ok(Orientation::Oriented(d));
    }
    let side = net.source_side(s);
    let members: Vec<usize> = (0..n).filter(|&v| side[v]).collect();
    let mut imbalance = 0i64;
    for &(u, v) in m.arcs() {
        match (side[u], side[v]) {
            (true, false) => imbalance += 1,
            (false, true) => imbalance -= 1,
            _ => {}
        }
    }
    let boundary = m
        .edges()
        .iter()
        .filter(|&&(u, v)| side[u] != side[v])
        .count() as i64;
    debug_assert!(imbalance > boundary);
    Ok(Orientation::Infeasible(CutWitness {
        kind: WitnessKind::InfeasibleSet,
        members,
        deficit: (imbalance - boundary) as usize,
    }))
}

/// Replaces every arc of `t` not touching `x` by a free edge, then orients
/// those edges so the result is balanced, hence k-arc-strong. Every vertex of
/// `x` must already sit at out-degree k, and `x` must be small enough that a
/// balanced completion always exists.
pub fn complete_to_eulerian_tournament(t: &Tournament, x: &[usize]) -> Result<Tournament, Error> {
    let n = t.n();
    if n.is_multiple_of(2) {
        return Err(Error::Invalid(format!(
            "balanced tournaments need an odd vertex count, got {n}"
        )));
    }
    let k = (n - 1) / 2;
    let mut in_x = vec![false; n];
    for &v in x {
        if v >= n {
            return Err(Error::Invalid(format!("vertex {v} out of range for n={n}")));
        }
        if in_x[v] {
            return Err(Error::Invalid(format!("vertex {v} listed twice")));
        }
        in_x[v] = true;
    }
    if 3 * x.len() > 2 * k {
        return Err(Error::TooLarge {
            what: "frozen vertex set",
            limit: 2 * k / 3,
            got: x.len(),
        });
    }
    for &v in x {
        if t.out_degree(v) != k {
            return Err(Error::Invalid(format!(
                "vertex {v} has out-degree {}, needs {k} to stay balanced",
                t.out_degree(v)
            )));
        }
    }
    let mut arcs = Vec::new();
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            let oriented = (u, v, t.beats(u, v));
            if in_x[u] || in_x[v] {
                let (a, b, fwd) = oriented;
                arcs.push(if fwd { (a, b) } else { (b, a) });
            } else {
                edges.push((u, v));
            }
        }
    }
    let m = MixedGraph::new(n, &edges, &arcs)?;
    match eulerian_orientation(&m)? {
        Orientation::Oriented(d) => Tournament::try_new(d),
        Orientation::Infeasible(w) => Err(Error::VerificationFailed(format!(
            "no balanced completion found, blocked by {:?}; the size bound should rule this out",
            w.members
        ))),
    }
}
