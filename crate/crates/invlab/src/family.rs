//! Inversion families and their linear-algebra view.
//!
//! Applying a family reverses the arc `uv` exactly when an odd number of the
//! family's sets contain both `u` and `v`, so the result does not depend on
//! the order of the sets. A [`VectorLabeling`] encodes the same data as one
//! t-bit vector per vertex: coordinate `i` is the indicator of set `i`, and
//! the arc `uv` is reversed exactly when the inner product of the two vectors
//! over GF(2) is 1.

use crate::digraph::Digraph;
use serde::{Deserialize, Serialize};

/// An unordered multiset of vertex subsets to invert.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InversionFamily {
    pub sets: Vec<Vec<usize>>,
}

impl InversionFamily {
    pub fn new(sets: Vec<Vec<usize>>) -> Self {
        InversionFamily { sets }
    }

    pub fn empty() -> Self {
        InversionFamily { sets: Vec::new() }
    }

    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    /// Applies the whole family at once via per-pair flip parity.
    pub fn apply(&self, d: &Digraph) -> Digraph {
        let n = d.n();
        let mut flip = vec![false; n * n];
        for set in &self.sets {
            for (i, &u) in set.iter().enumerate() {
                assert!(u < n, "vertex {u} out of range");
                for &v in &set[..i] {
                    assert_ne!(u, v, "repeated vertex {u} in inversion set");
                    flip[u.max(v) * n + u.min(v)] ^= true;
                }
            }
        }
        let mut out = d.clone();
        for u in 0..n {
            for v in 0..u {
                if flip[u * n + v] {
                    out = out.invert(&[u, v]);
                }
            }
        }
        out
    }

    /// Largest vertex mentioned, if any.
    pub fn max_vertex(&self) -> Option<usize> {
        self.sets.iter().flatten().copied().max()
    }

    /// Drops sets of size 0 or 1, which invert nothing.
    pub fn without_noops(mut self) -> Self {
        self.sets.retain(|s| s.len() >= 2);
        self
    }
}

/// One t-bit vector per vertex, `t <= 64`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VectorLabeling {
    pub t: usize,
    pub vectors: Vec<u64>,
}

impl VectorLabeling {
    pub fn new(t: usize, vectors: Vec<u64>) -> Self {
        assert!(t <= 64, "labeling dimension capped at 64");
        if t < 64 {
            for &v in &vectors {
                assert!(v < 1u64 << t, "vector wider than t={t} bits");
            }
        }
        VectorLabeling { t, vectors }
    }

    /// Coordinate `i` becomes the set of vertices whose bit `i` is 1.
    /// Empty coordinates are kept so the family always has `t` sets.
    pub fn to_family(&self) -> InversionFamily {
        let sets = (0..self.t)
            .map(|i| {
                (0..self.vectors.len())
                    .filter(|&v| self.vectors[v] >> i & 1 == 1)
                    .collect()
            })
            .collect();
        InversionFamily { sets }
    }

    /// Inverse of [`to_family`](Self::to_family): set `i` becomes bit `i`.
    pub fn from_family(n: usize, family: &InversionFamily) -> Self {
        assert!(family.len() <= 64, "labeling dimension capped at 64");
        let mut vectors = vec![0u64; n];
        for (i, set) in family.sets.iter().enumerate() {
            for &v in set {
                assert!(v < n, "vertex {v} out of range");
                vectors[v] |= 1 << i;
            }
        }
        VectorLabeling {
            t: family.len(),
            vectors,
        }
    }

    /// Reverses the arc `uv` exactly when `<vec(u), vec(v)> = 1` over GF(2).
    pub fn apply(&self, d: &Digraph) -> Digraph {
        let n = d.n();
        assert_eq!(n, self.vectors.len(), "labeling size mismatch");
        let mut out = d.clone();
        for u in 0..n {
            for v in 0..u {
                if (self.vectors[u] & self.vectors[v]).count_ones() % 2 == 1 {
                    out = out.invert(&[u, v]);
                }
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::digraph::{random_digraph, Tournament};
    use rand::seq::SliceRandom;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn sequential_apply(d: &Digraph, fam: &InversionFamily) -> Digraph {
        let mut cur = d.clone();
        for set in &fam.sets {
            cur = cur.invert(set);
        }
        cur
    }

    #[test]
    fn family_application_matches_sequential_in_every_order() {
        let d = Tournament::random(6, 5).into_digraph();
        let sets = [vec![0, 1, 2], vec![1, 2, 3, 4], vec![0, 4, 5]];
        let perms = [
            [0, 1, 2],
            [0, 2, 1],
            [1, 0, 2],
            [1, 2, 0],
            [2, 0, 1],
            [2, 1, 0],
        ];
        let reference = InversionFamily::new(sets.to_vec()).apply(&d);
        for p in perms {
            let fam = InversionFamily::new(p.iter().map(|&i| sets[i].clone()).collect());
            assert_eq!(sequential_apply(&d, &fam), reference);
            assert_eq!(fam.apply(&d), reference);
        }
    }

    #[test]
    fn set_order_inside_a_set_does_not_matter() {
        let mut rng = ChaCha8Rng::seed_from_u64(17);
        for trial in 0..500 {
            let n = 3 + (trial % 6);
            let d = random_digraph(n, 0.5, 9000 + trial as u64);
            let mut verts: Vec<usize> = (0..n).collect();
            verts.shuffle(&mut rng);
            let take = rng.gen_range(2..=n);
            let scrambled = verts[..take].to_vec();
            let mut sorted = scrambled.clone();
            sorted.sort_unstable();
            let fam = InversionFamily::new(vec![scrambled]);
            assert_eq!(fam.apply(&d), d.invert(&sorted));
            assert_eq!(fam.apply(&d), sequential_apply(&d, &fam));
        }
    }

    #[test]
    fn repeated_set_cancels() {
        let d = random_digraph(7, 0.5, 2);
        let fam = InversionFamily::new(vec![vec![0, 3, 5], vec![0, 3, 5]]);
        assert_eq!(fam.apply(&d), d);
    }

    #[test]
    fn labeling_agrees_with_family_on_seeded_instances() {
        let mut rng = ChaCha8Rng::seed_from_u64(99);
        for trial in 0..1000 {
            let n = 2 + (trial % 7);
            let t = trial % 5;
            let d = random_digraph(n, 0.5, trial as u64);
            let mut sets = Vec::new();
            for _ in 0..t {
                let mut verts: Vec<usize> = (0..n).collect();
                verts.shuffle(&mut rng);
                let take = rng.gen_range(0..=n);
                let mut s = verts[..take].to_vec();
                s.sort_unstable();
                sets.push(s);
            }
            let fam = InversionFamily::new(sets);
            let lab = VectorLabeling::from_family(n, &fam);
            assert_eq!(lab.apply(&d), fam.apply(&d));
            assert_eq!(lab.to_family().apply(&d), fam.apply(&d));
        }
    }

    #[test]
    fn labeling_round_trips_through_family() {
        let lab = VectorLabeling::new(3, vec![0b101, 0b011, 0b000, 0b111]);
        let back = VectorLabeling::from_family(4, &lab.to_family());
        assert_eq!(lab, back);
    }
}
