//! Dense digraphs over vertices `0..n` and the inversion operation.
//!
//! Inverting a vertex set `X` reverses every arc with both endpoints in `X`
//! and touches nothing else. Digons (a pair of opposite arcs) are mapped to
//! digons and non-adjacent pairs stay non-adjacent, so the underlying
//! multigraph is preserved.

use crate::error::Error;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::fmt;
use std::ops::Deref;

/// Immutable digraph on vertices `0..n` with bit-packed adjacency rows.
///
/// Bit `v` of row `u` is the arc `u -> v`. Loops are never present; a pair
/// of vertices may carry zero, one, or two arcs.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Digraph {
    n: usize,
    words: usize,
    adj: Vec<u64>,
}

impl Digraph {
    pub fn empty(n: usize) -> Self {
        let words = n.div_ceil(64).max(1);
        Digraph {
            n,
            words,
            adj: vec![0; n * words],
        }
    }

    /// Builds a digraph from an arc list. Rejects loops, out-of-range
    /// endpoints, and repeated arcs.
    pub fn from_arcs(n: usize, arcs: &[(usize, usize)]) -> Result<Self, Error> {
        let mut d = Digraph::empty(n);
        for &(u, v) in arcs {
            if u >= n || v >= n {
                return Err(Error::Invalid(format!(
                    "arc ({u},{v}) out of range for n={n}"
                )));
            }
            if u == v {
                return Err(Error::Invalid(format!("loop at vertex {u}")));
            }
            if d.has_arc(u, v) {
                return Err(Error::Invalid(format!("duplicate arc ({u},{v})")));
            }
            d.set_arc(u, v, true);
        }
        Ok(d)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        self.adj[u * self.words + v / 64] >> (v % 64) & 1 == 1
    }

    #[inline]
    fn set_arc(&mut self, u: usize, v: usize, present: bool) {
        let w = u * self.words + v / 64;
        let bit = 1u64 << (v % 64);
        if present {
            self.adj[w] |= bit;
        } else {
            self.adj[w] &= !bit;
        }
    }

    pub fn arcs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| self.out_neighbors(u).map(move |v| (u, v)))
    }

    pub fn arc_count(&self) -> usize {
        self.adj.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn out_degree(&self, u: usize) -> usize {
        let row = &self.adj[u * self.words..(u + 1) * self.words];
        row.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn in_degree(&self, v: usize) -> usize {
        (0..self.n).filter(|&u| self.has_arc(u, v)).count()
    }

    pub fn out_neighbors(&self, u: usize) -> impl Iterator<Item = usize> + '_ {
        let row = &self.adj[u * self.words..(u + 1) * self.words];
        row.iter().enumerate().flat_map(|(wi, &w)| {
            let mut bits = w;
            std::iter::from_fn(move || {
                if bits == 0 {
                    None
                } else {
                    let b = bits.trailing_zeros() as usize;
                    bits &= bits - 1;
                    Some(wi * 64 + b)
                }
            })
        })
    }

    pub fn in_neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.n).filter(move |&u| self.has_arc(u, v))
    }

    /// Adjacency row as a single word. Only valid for `n <= 64`.
    #[inline]
    pub fn out_mask64(&self, u: usize) -> u64 {
        debug_assert!(self.n <= 64);
        self.adj[u * self.words]
    }

    /// Number of arcs between `u` and `v` in either direction (0, 1, or 2).
    pub fn pair_arcs(&self, u: usize, v: usize) -> u8 {
        self.has_arc(u, v) as u8 + self.has_arc(v, u) as u8
    }

    pub fn has_digon(&self) -> bool {
        (0..self.n).any(|u| (u + 1..self.n).any(|v| self.pair_arcs(u, v) == 2))
    }

    pub fn is_tournament(&self) -> bool {
        (0..self.n).all(|u| (u + 1..self.n).all(|v| self.pair_arcs(u, v) == 1))
    }

    pub fn is_oriented(&self) -> bool {
        !self.has_digon()
    }

    /// Subdigraph induced by `verts`; vertex `i` of the result is `verts[i]`.
    /// `verts` must be distinct and in range.
    pub fn induced(&self, verts: &[usize]) -> Digraph {
        let mut d = Digraph::empty(verts.len());
        for (i, &u) in verts.iter().enumerate() {
            assert!(u < self.n, "vertex {u} out of range");
            for (j, &v) in verts.iter().enumerate() {
                if i != j {
                    assert_ne!(u, v, "repeated vertex {u} in induced set");
                    if self.has_arc(u, v) {
                        d.set_arc(i, j, true);
                    }
                }
            }
        }
        d
    }

    /// Reverses every arc. Equivalent to inverting the full vertex set.
    pub fn converse(&self) -> Digraph {
        let mut d = Digraph::empty(self.n);
        for u in 0..self.n {
            for v in self.out_neighbors(u) {
                d.set_arc(v, u, true);
            }
        }
        d
    }

    /// Reverses all arcs with both endpoints in `set`. Panics on an
    /// out-of-range or repeated vertex.
    pub fn invert(&self, set: &[usize]) -> Digraph {
        let mut d = self.clone();
        for (idx, &u) in set.iter().enumerate() {
            assert!(u < self.n, "vertex {u} out of range");
            for &v in &set[..idx] {
                assert_ne!(u, v, "repeated vertex {u} in inversion set");
                let uv = d.has_arc(u, v);
                let vu = d.has_arc(v, u);
                d.set_arc(u, v, vu);
                d.set_arc(v, u, uv);
            }
        }
        d
    }

    /// True when the digraph has no directed cycle.
    pub fn is_acyclic(&self) -> bool {
        let mut out_deg: Vec<usize> = (0..self.n).map(|u| self.out_degree(u)).collect();
        let mut stack: Vec<usize> = (0..self.n).filter(|&u| out_deg[u] == 0).collect();
        let mut removed = vec![false; self.n];
        let mut count = 0;
        while let Some(v) = stack.pop() {
            if removed[v] {
                continue;
            }
            removed[v] = true;
            count += 1;
            for u in self.in_neighbors(v) {
                if !removed[u] {
                    out_deg[u] -= 1;
                    if out_deg[u] == 0 {
                        stack.push(u);
                    }
                }
            }
        }
        count == self.n
    }
}

impl fmt::Debug for Digraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Digraph(n={}, arcs={:?})",
            self.n,
            self.arcs().collect::<Vec<_>>()
        )
    }
}

/// Seeded random digraph: every ordered pair `(u, v)`, `u != v`, carries an
/// arc independently with probability `arc_prob`. Digons can occur.
pub fn random_digraph(n: usize, arc_prob: f64, seed: u64) -> Digraph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut d = Digraph::empty(n);
    for u in 0..n {
        for v in 0..n {
            if u != v && rng.gen_bool(arc_prob) {
                d.set_arc(u, v, true);
            }
        }
    }
    d
}

/// A digraph with exactly one arc per vertex pair.
#[derive(Clone, PartialEq, Eq)]
pub struct Tournament(Digraph);

impl Tournament {
    pub fn try_new(d: Digraph) -> Result<Self, Error> {
        if d.n == 0 {
            return Err(Error::Invalid(
                "tournament needs at least one vertex".into(),
            ));
        }
        for u in 0..d.n {
            if d.has_arc(u, u) {
                return Err(Error::Invalid(format!("loop at vertex {u}")));
            }
            for v in u + 1..d.n {
                if d.pair_arcs(u, v) != 1 {
                    return Err(Error::Invalid(format!(
                        "pair ({u},{v}) carries {} arcs, want exactly 1",
                        d.pair_arcs(u, v)
                    )));
                }
            }
        }
        Ok(Tournament(d))
    }

    /// Arc `i -> j` exactly when `i < j`.
    pub fn transitive(n: usize) -> Self {
        assert!(n >= 1);
        let mut d = Digraph::empty(n);
        for i in 0..n {
            for j in i + 1..n {
                d.set_arc(i, j, true);
            }
        }
        Tournament(d)
    }

    /// The rotative tournament on `2k+1` vertices: arc `i -> j` exactly when
    /// `(i - j) mod (2k+1)` lies in `1..=k`. It is eulerian and k-strong.
    pub fn rotative(k: usize) -> Self {
        let n = 2 * k + 1;
        let mut d = Digraph::empty(n);
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    let diff = (i + n - j) % n;
                    if (1..=k).contains(&diff) {
                        d.set_arc(i, j, true);
                    }
                }
            }
        }
        Tournament(d)
    }

    /// Seeded uniform random tournament: each pair is oriented by an
    /// independent fair coin.
    pub fn random(n: usize, seed: u64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        Self::random_with(n, &mut rng)
    }

    pub fn random_with<R: Rng>(n: usize, rng: &mut R) -> Self {
        assert!(n >= 1);
        let mut d = Digraph::empty(n);
        for i in 0..n {
            for j in i + 1..n {
                if rng.gen_bool(0.5) {
                    d.set_arc(i, j, true);
                } else {
                    d.set_arc(j, i, true);
                }
            }
        }
        Tournament(d)
    }

    #[inline]
    pub fn beats(&self, u: usize, v: usize) -> bool {
        self.0.has_arc(u, v)
    }

    pub fn invert(&self, set: &[usize]) -> Tournament {
        Tournament(self.0.invert(set))
    }

    pub fn converse(&self) -> Tournament {
        Tournament(self.0.converse())
    }

    pub fn induced(&self, verts: &[usize]) -> Tournament {
        Tournament(self.0.induced(verts))
    }

    pub fn as_digraph(&self) -> &Digraph {
        &self.0
    }

    pub fn into_digraph(self) -> Digraph {
        self.0
    }
}

impl Deref for Tournament {
    type Target = Digraph;
    fn deref(&self) -> &Digraph {
        &self.0
    }
}

impl fmt::Debug for Tournament {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Tournament(n={}, arcs={:?})",
            self.0.n,
            self.0.arcs().collect::<Vec<_>>()
        )
    }
}
