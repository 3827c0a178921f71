//! Generators for hardness instances and fixed lower-bound witnesses.
//!
//! Three families live here. A reduction from monotone equitable
//! satisfiability yields oriented graphs that a single inversion repairs
//! exactly when the formula is satisfiable. Two cut cover gadgets turn an
//! undirected graph into an oriented graph whose minimum strengthening
//! family has the size of the graph's smallest cut cover. The witness
//! builders return digraphs and tournaments that provably need more
//! inversions than a single set, or a logarithmic number of sets, to reach
//! their connectivity target.

use std::collections::BTreeSet;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::connectivity::{self, DenseFlow};
use crate::digraph::{Digraph, Tournament};
use crate::error::Error;
use crate::exact;
use crate::family::InversionFamily;
use crate::graph::SimpleGraph;

/// Largest variable count [`MekSatInstance::brute_force_satisfiable`] accepts.
pub const BRUTE_FORCE_VAR_MAX: usize = 24;

const SIZET_MAX_T: usize = 7;
const ARBN1_MAX_N: usize = 4096;
const EXTREMINF_MAX_N: usize = 1000;

/// A monotone equitable satisfiability instance. Every clause holds exactly
/// `2k+1` distinct nonnegated variables, and an assignment satisfies the
/// instance when every clause receives at least `k` true and at least `k`
/// false variables.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MekSatInstance {
    pub k: usize,
    /// Number of variables; clauses refer to them as `0..variables`.
    pub variables: usize,
    pub clauses: Vec<Vec<usize>>,
}

impl MekSatInstance {
    pub fn new(k: usize, variables: usize, clauses: Vec<Vec<usize>>) -> Result<Self, Error> {
        let inst = MekSatInstance {
            k,
            variables,
            clauses,
        };
        inst.validate()?;
        Ok(inst)
    }

    /// Re-checks the arity and variable-range invariants. Useful because the
    /// fields are public and may have been edited since construction.
    pub fn validate(&self) -> Result<(), Error> {
        if self.k == 0 {
            return Err(Error::Invalid("clause arity 2k+1 needs k >= 1".into()));
        }
        let arity = 2 * self.k + 1;
        for (idx, clause) in self.clauses.iter().enumerate() {
            if clause.len() != arity {
                return Err(Error::Invalid(format!(
                    "clause {idx} has {} variables, arity must be exactly {arity}",
                    clause.len()
                )));
            }
            let distinct: BTreeSet<usize> = clause.iter().copied().collect();
            if distinct.len() != arity {
                return Err(Error::Invalid(format!("clause {idx} repeats a variable")));
            }
            if let Some(&big) = distinct.iter().next_back() {
                if big >= self.variables {
                    return Err(Error::Invalid(format!(
                        "clause {idx} uses variable {big}, but only {} exist",
                        self.variables
                    )));
                }
            }
        }
        Ok(())
    }

    /// True when `assignment` gives every clause at least `k` true and at
    /// least `k` false variables.
    pub fn check(&self, assignment: &[bool]) -> bool {
        assert_eq!(assignment.len(), self.variables);
        self.clauses.iter().all(|clause| {
            let true_count = clause.iter().filter(|&&x| assignment[x]).count();
            true_count >= self.k && clause.len() - true_count >= self.k
        })
    }

    /// Exhaustive satisfiability test over all assignments. Errs when the
    /// instance has more than [`BRUTE_FORCE_VAR_MAX`] variables.
    pub fn brute_force_satisfiable(&self) -> Result<bool, Error> {
        self.validate()?;
        if self.variables > BRUTE_FORCE_VAR_MAX {
            return Err(Error::TooLarge {
                what: "brute-force satisfiability instance",
                limit: BRUTE_FORCE_VAR_MAX,
                got: self.variables,
            });
        }
        let mut assignment = vec![false; self.variables];
        Ok((0u64..1 << self.variables).any(|mask| {
            for (x, slot) in assignment.iter_mut().enumerate() {
                *slot = mask >> x & 1 == 1;
            }
            self.check(&assignment)
        }))
    }
}

/// Draws a reproducible instance with `clause_count` distinct clauses, each
/// a uniform `(2k+1)`-subset of the variables.
pub fn random_meksat(
    k: usize,
    variables: usize,
    clause_count: usize,
    seed: u64,
) -> Result<MekSatInstance, Error> {
    if k == 0 {
        return Err(Error::Invalid("clause arity 2k+1 needs k >= 1".into()));
    }
    let arity = 2 * k + 1;
    if variables < arity {
        return Err(Error::Invalid(format!(
            "need at least {arity} variables for arity {arity}, got {variables}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut pool: Vec<usize> = (0..variables).collect();
    let mut clauses: BTreeSet<Vec<usize>> = BTreeSet::new();
    let mut attempts: u64 = 0;
    while clauses.len() < clause_count {
        attempts += 1;
        if attempts > 200 + 50 * clause_count as u64 {
            return Err(Error::RetriesExhausted {
                attempts,
                last_failure: format!(
                    "only {} distinct clauses found, wanted {clause_count}",
                    clauses.len()
                ),
            });
        }
        pool.shuffle(&mut rng);
        let mut clause = pool[..arity].to_vec();
        clause.sort_unstable();
        clauses.insert(clause);
    }
    MekSatInstance::new(k, variables, clauses.into_iter().collect())
}

/// Builds the oriented graph whose single-inversion behaviour mirrors the
/// instance: an anchor block `S` of `2k+1` vertices carrying a rotative
/// tournament, one vertex per variable, and one vertex per clause. The first
/// `k` anchor vertices beat every variable vertex, the next `k` lose to
/// every variable vertex, and each variable vertex beats the vertices of the
/// clauses containing it. The result can be made `k`-strong (equivalently
/// `k`-arc-strong) by one inversion exactly when the instance is
/// satisfiable. Order is `(2k+1) + variables + clauses`.
pub fn meksat_digraph(inst: &MekSatInstance) -> Result<Digraph, Error> {
    inst.validate()?;
    let k = inst.k;
    let width = 2 * k + 1;
    let n = width + inst.variables + inst.clauses.len();
    let var_vertex = |x: usize| width + x;
    let clause_vertex = |c: usize| width + inst.variables + c;
    let mut arcs = Vec::new();
    push_rotative_block(&mut arcs, k, 0);
    for x in 0..inst.variables {
        for i in 0..k {
            arcs.push((i, var_vertex(x)));
        }
        for i in k..2 * k {
            arcs.push((var_vertex(x), i));
        }
    }
    for (c, clause) in inst.clauses.iter().enumerate() {
        for &x in clause {
            arcs.push((var_vertex(x), clause_vertex(c)));
        }
    }
    let d = Digraph::from_arcs(n, &arcs)?;
    assert!(d.is_oriented());
    let anchor: Vec<usize> = (0..width).collect();
    assert!(connectivity::is_k_strong(&d.induced(&anchor), k).holds);
    for c in 0..inst.clauses.len() {
        assert_eq!(d.in_degree(clause_vertex(c)), width);
        assert_eq!(d.out_degree(clause_vertex(c)), 0);
    }
    for x in 0..inst.variables {
        let occurrences = inst.clauses.iter().filter(|cl| cl.contains(&x)).count();
        assert_eq!(d.in_degree(var_vertex(x)), k);
        assert_eq!(d.out_degree(var_vertex(x)), k + occurrences);
    }
    Ok(d)
}

/// The single set whose inversion repairs [`meksat_digraph`]'s output when
/// `assignment` satisfies the instance: all clause vertices plus the
/// vertices of the variables set to true.
pub fn meksat_fixing_set(inst: &MekSatInstance, assignment: &[bool]) -> Result<Vec<usize>, Error> {
    inst.validate()?;
    if assignment.len() != inst.variables {
        return Err(Error::Invalid(format!(
            "assignment covers {} variables, instance has {}",
            assignment.len(),
            inst.variables
        )));
    }
    let width = 2 * inst.k + 1;
    let mut set: Vec<usize> = (0..inst.variables)
        .filter(|&x| assignment[x])
        .map(|x| width + x)
        .collect();
    set.extend(width + inst.variables..width + inst.variables + inst.clauses.len());
    Ok(set)
}

/// Raises an instance's parameter from `k` to `k+1` while preserving
/// satisfiability in both directions. Two fresh blocks of `k+3` variables
/// are pinned to opposite truth values by clauses over the blocks alone, and
/// the first variable of each block joins every original clause.
pub fn meksat_lift(inst: &MekSatInstance) -> Result<MekSatInstance, Error> {
    inst.validate()?;
    let k = inst.k;
    let block = k + 3;
    let first_fresh = inst.variables;
    let pool: Vec<usize> = (first_fresh..first_fresh + 2 * block).collect();
    let mut clauses = Vec::new();
    // New clauses drop 3 of the 2k+6 fresh variables; keeping the first
    // block's share at k+1 or k+2 means dropping 1 or 2 of its members.
    for a in 0..pool.len() {
        for b in a + 1..pool.len() {
            for c in b + 1..pool.len() {
                let dropped_from_first = [a, b, c].iter().filter(|&&i| i < block).count();
                if dropped_from_first == 1 || dropped_from_first == 2 {
                    clauses.push(
                        (0..pool.len())
                            .filter(|&i| i != a && i != b && i != c)
                            .map(|i| pool[i])
                            .collect(),
                    );
                }
            }
        }
    }
    for clause in &inst.clauses {
        let mut lifted = clause.clone();
        lifted.push(first_fresh);
        lifted.push(first_fresh + block);
        lifted.sort_unstable();
        clauses.push(lifted);
    }
    MekSatInstance::new(k + 1, first_fresh + 2 * block, clauses)
}

/// Index of block vertex `j` for edge `edge_idx` in the cut cover gadget
/// layout: graph vertices first, then one block of `2k+1` vertices per edge
/// in edge order, then the anchor block.
fn block_vertex(g: &SimpleGraph, k: usize, edge_idx: usize, j: usize) -> usize {
    g.n() + edge_idx * (2 * k + 1) + j
}

fn anchor_base(g: &SimpleGraph, k: usize) -> usize {
    g.n() + g.edge_count() * (2 * k + 1)
}

fn push_rotative_block(arcs: &mut Vec<(usize, usize)>, k: usize, base: usize) {
    for (i, j) in Tournament::rotative(k).as_digraph().arcs() {
        arcs.push((base + i, base + j));
    }
}

/// Oriented graph whose minimum family for reaching `k`-arc-strength equals
/// the graph's cut covering number. Each edge `uv` with `u < v` grows a
/// block of `2k+1` vertices: `u` beats the first `k` block vertices, block
/// vertices 2 through `k` beat `v`, and `v` beats the first block vertex,
/// so the block's boundary balances only once some set splits `u` from `v`.
/// A rotative anchor block exchanges `k` arcs with every graph vertex.
/// Order is `|V| + (2k+1)|E| + (2k+1)`.
pub fn cutcover_to_arcstrong(g: &SimpleGraph, k: usize) -> Result<Digraph, Error> {
    if k == 0 {
        return Err(Error::Invalid("cut cover gadgets need k >= 1".into()));
    }
    let width = 2 * k + 1;
    let anchor = anchor_base(g, k);
    let mut arcs = Vec::new();
    push_rotative_block(&mut arcs, k, anchor);
    for v in 0..g.n() {
        for i in 0..k {
            arcs.push((v, anchor + i));
        }
        for i in k..2 * k {
            arcs.push((anchor + i, v));
        }
    }
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        let z = block_vertex(g, k, e, 0);
        push_rotative_block(&mut arcs, k, z);
        for j in 0..k {
            arcs.push((u, z + j));
        }
        for j in 1..k {
            arcs.push((z + j, v));
        }
        arcs.push((v, z));
    }
    let d = Digraph::from_arcs(g.n() + g.edge_count() * width + width, &arcs)?;
    assert!(d.is_oriented());
    let anchor_block: Vec<usize> = (anchor..anchor + width).collect();
    assert!(connectivity::is_k_arc_strong(&d.induced(&anchor_block), k)?.holds);
    Ok(d)
}

/// Companion gadget for plain `k`-strength, with the same layout and order
/// formula as [`cutcover_to_arcstrong`]. Every edge block exchanges `k` arcs
/// with the anchor's first `k-1` vertices, and both edge endpoints beat
/// their block's first vertex, so deleting those `k-1` anchor vertices
/// leaves each block reachable only through an endpoint split.
pub fn cutcover_to_strong(g: &SimpleGraph, k: usize) -> Result<Digraph, Error> {
    if k == 0 {
        return Err(Error::Invalid("cut cover gadgets need k >= 1".into()));
    }
    let width = 2 * k + 1;
    let anchor = anchor_base(g, k);
    let mut arcs = Vec::new();
    push_rotative_block(&mut arcs, k, anchor);
    for v in 0..g.n() {
        for i in 0..k {
            arcs.push((v, anchor + i));
        }
        for i in k..2 * k {
            arcs.push((anchor + i, v));
        }
    }
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        let z = block_vertex(g, k, e, 0);
        push_rotative_block(&mut arcs, k, z);
        for j in 0..k {
            for w in 0..k - 1 {
                arcs.push((z + j, anchor + w));
            }
        }
        for j in k..2 * k {
            for w in 0..k - 1 {
                arcs.push((anchor + w, z + j));
            }
        }
        arcs.push((u, z));
        arcs.push((v, z));
    }
    let d = Digraph::from_arcs(g.n() + g.edge_count() * width + width, &arcs)?;
    assert!(d.is_oriented());
    let anchor_block: Vec<usize> = (anchor..anchor + width).collect();
    assert!(connectivity::is_k_strong(&d.induced(&anchor_block), k).holds);
    Ok(d)
}

/// Translates an optimal cut cover of `g` into an inversion family for the
/// cut cover gadgets. Both gadget variants share their vertex layout, so the
/// same family serves either. Each cover set keeps its graph vertices and
/// gains the first block vertex of every edge assigned to it; an edge cut by
/// several sets goes to the earliest one.
pub fn lifted_cut_cover(g: &SimpleGraph, k: usize) -> Result<InversionFamily, Error> {
    if k == 0 {
        return Err(Error::Invalid("cut cover gadgets need k >= 1".into()));
    }
    let mut sets = exact::cut_cover_family(g)?;
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        let cut_by = (0..sets.len())
            .find(|&i| sets[i].contains(&u) != sets[i].contains(&v))
            .expect("an optimal cover cuts every edge");
        sets[cut_by].push(block_vertex(g, k, e, 0));
    }
    Ok(InversionFamily::new(sets))
}

/// Digraph made of a core of `2^(t-1) + 1` vertices and one catcher vertex
/// per core pair, with both pair members shooting into their catcher. Any
/// family of fewer than `t` sets treats some core pair uniformly and leaves
/// its catcher a source or a sink, so the returned distinguished core vertex
/// never has to absorb the defect. Order is `2^(t-1) + 1` plus the number of
/// core pairs; `t` is capped at 7 (order 2145).
pub fn witness_sizet(t: usize) -> Result<(Digraph, usize), Error> {
    if t == 0 {
        return Err(Error::Invalid("the pair witness needs t >= 1".into()));
    }
    if t > SIZET_MAX_T {
        return Err(Error::TooLarge {
            what: "pair witness parameter",
            limit: SIZET_MAX_T,
            got: t,
        });
    }
    let core = (1usize << (t - 1)) + 1;
    let n = core + core * (core - 1) / 2;
    let mut arcs = Vec::new();
    let mut catcher = core;
    for s1 in 0..core {
        for s2 in s1 + 1..core {
            arcs.push((s1, catcher));
            arcs.push((s2, catcher));
            catcher += 1;
        }
    }
    let d = Digraph::from_arcs(n, &arcs)?;
    for v in core..n {
        assert_eq!(d.in_degree(v), 2);
        assert_eq!(d.out_degree(v), 0);
    }
    assert_eq!(d.induced(&(0..core).collect::<Vec<usize>>()).arc_count(), 0);
    assert!(t == 1 || underlying_two_edge_connected(&d));
    Ok((d, 0))
}

/// Two-edge-connected digraph on exactly `n` vertices that keeps a sink or a
/// source through any family of at most `ceil(log2 n)/2 - 1` inversions.
/// Orders 3 to 5 orient a cycle with one arc flipped; larger orders pad the
/// pair witness with pendant vertices tied to its distinguished core vertex
/// by digons. `n` is capped at 4096.
pub fn witness_arbn1(n: usize) -> Result<Digraph, Error> {
    if n < 3 {
        return Err(Error::Invalid(format!(
            "the sink witness needs n >= 3, got {n}"
        )));
    }
    if n > ARBN1_MAX_N {
        return Err(Error::TooLarge {
            what: "sink witness order",
            limit: ARBN1_MAX_N,
            got: n,
        });
    }
    let d = if n <= 5 {
        let mut arcs: Vec<(usize, usize)> = (0..n - 1).map(|i| (i, i + 1)).collect();
        arcs.push((0, n - 1));
        Digraph::from_arcs(n, &arcs)?
    } else {
        let levels = (n - 1).ilog2() as usize + 1;
        let (inner, s) = witness_sizet(levels.div_ceil(2))?;
        assert!(inner.n() <= n);
        let mut arcs: Vec<(usize, usize)> = inner.arcs().collect();
        for pendant in inner.n()..n {
            arcs.push((s, pendant));
            arcs.push((pendant, s));
        }
        Digraph::from_arcs(n, &arcs)?
    };
    assert!((0..d.n()).any(|v| d.in_degree(v) == 0 || d.out_degree(v) == 0));
    assert!(underlying_two_edge_connected(&d));
    Ok(d)
}

/// Digraph on `n` vertices whose underlying multigraph is `2k`-edge-connected
/// yet which cannot reach `k`-arc-strength with `ceil(log2(n-k+1))/2 - 1` or
/// fewer inversions. A clique of `k-1` vertices joined to everything by digons
/// wraps the sink witness on the remaining `n-k+1` vertices; digons survive
/// every inversion, so the wrapped part must shed its sinks and sources on
/// its own. The edge connectivity is verified by flow before returning, and
/// `n` is capped at 1000 to keep that check fast.
pub fn witness_extreminf(n: usize, k: usize) -> Result<Digraph, Error> {
    if k == 0 {
        return Err(Error::Invalid("the padded witness needs k >= 1".into()));
    }
    if n < k + 2 {
        return Err(Error::Invalid(format!(
            "the padded witness needs n >= k+2, got n={n}, k={k}"
        )));
    }
    if n > EXTREMINF_MAX_N {
        return Err(Error::TooLarge {
            what: "flow-verified witness order",
            limit: EXTREMINF_MAX_N,
            got: n,
        });
    }
    let inner = witness_arbn1(n - k + 1)?;
    let base = inner.n();
    let mut arcs: Vec<(usize, usize)> = inner.arcs().collect();
    for s in base..n {
        for v in 0..base {
            arcs.push((s, v));
            arcs.push((v, s));
        }
        for s2 in s + 1..n {
            arcs.push((s, s2));
            arcs.push((s2, s));
        }
    }
    let d = Digraph::from_arcs(n, &arcs)?;
    if !underlying_edge_connectivity_at_least(&d, 2 * k) {
        return Err(Error::VerificationFailed(format!(
            "padded witness failed its {}-edge-connectivity check",
            2 * k
        )));
    }
    Ok(d)
}

/// Tournament on `5k-3` vertices that no single inversion makes `k`-strong.
/// Blocks: a rotative tournament `A` of order `2k-1`, then `k-1` middle
/// vertices `B` ordered transitively, then a rotative tournament `C` of
/// order `2k-1`, with `A` beating `B` and `C`, and `B` beating `C`.
pub fn witness_t1(k: usize) -> Result<Tournament, Error> {
    if k < 2 {
        return Err(Error::Invalid(format!(
            "the three-block witness needs k >= 2, got {k}"
        )));
    }
    let a_len = 2 * k - 1;
    let b_end = a_len + (k - 1);
    let n = 5 * k - 3;
    let mut arcs = Vec::new();
    push_rotative_block(&mut arcs, k - 1, 0);
    push_rotative_block(&mut arcs, k - 1, b_end);
    for i in a_len..b_end {
        for j in i + 1..b_end {
            arcs.push((i, j));
        }
    }
    for a in 0..a_len {
        for rest in a_len..n {
            arcs.push((a, rest));
        }
    }
    for b in a_len..b_end {
        for c in b_end..n {
            arcs.push((b, c));
        }
    }
    let t = Tournament::try_new(Digraph::from_arcs(n, &arcs)?)?;
    let front: Vec<usize> = (0..a_len).collect();
    let back: Vec<usize> = (b_end..n).collect();
    assert!(connectivity::is_eulerian(t.induced(&front).as_digraph()));
    assert!(connectivity::is_eulerian(t.induced(&back).as_digraph()));
    for a in 0..a_len {
        for rest in a_len..n {
            assert!(t.beats(a, rest));
        }
    }
    for b in a_len..b_end {
        for c in b_end..n {
            assert!(t.beats(b, c));
        }
    }
    Ok(t)
}

/// Tournament on `4k-2` vertices that no single inversion makes
/// `k`-arc-strong: two rotative blocks of order `2k-1` with the first
/// beating the second.
pub fn witness_t2(k: usize) -> Result<Tournament, Error> {
    if k < 2 {
        return Err(Error::Invalid(format!(
            "the two-block witness needs k >= 2, got {k}"
        )));
    }
    let half = 2 * k - 1;
    let n = 4 * k - 2;
    let mut arcs = Vec::new();
    push_rotative_block(&mut arcs, k - 1, 0);
    push_rotative_block(&mut arcs, k - 1, half);
    for a in 0..half {
        for b in half..n {
            arcs.push((a, b));
        }
    }
    let t = Tournament::try_new(Digraph::from_arcs(n, &arcs)?)?;
    let front: Vec<usize> = (0..half).collect();
    let back: Vec<usize> = (half..n).collect();
    assert!(connectivity::is_eulerian(t.induced(&front).as_digraph()));
    assert!(connectivity::is_eulerian(t.induced(&back).as_digraph()));
    for a in 0..half {
        for b in half..n {
            assert!(t.beats(a, b));
        }
    }
    Ok(t)
}

/// True when the underlying multigraph (one edge per arc, so a digon counts
/// as two parallel edges) is connected and bridgeless.
fn underlying_two_edge_connected(d: &Digraph) -> bool {
    let n = d.n();
    if n <= 1 {
        return true;
    }
    let mut adj: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n];
    for (id, (u, v)) in d.arcs().enumerate() {
        adj[u].push((v, id));
        adj[v].push((u, id));
    }
    let unseen = usize::MAX;
    let mut disc = vec![unseen; n];
    let mut low = vec![unseen; n];
    let mut timer = 0;
    disc[0] = timer;
    low[0] = timer;
    timer += 1;
    let mut stack: Vec<(usize, usize, usize)> = vec![(0, usize::MAX, 0)];
    while let Some(&(v, via, i)) = stack.last() {
        if i < adj[v].len() {
            stack.last_mut().unwrap().2 += 1;
            let (to, id) = adj[v][i];
            if id == via {
                continue;
            }
            if disc[to] == unseen {
                disc[to] = timer;
                low[to] = timer;
                timer += 1;
                stack.push((to, id, 0));
            } else if disc[to] < low[v] {
                low[v] = disc[to];
            }
        } else {
            stack.pop();
            if let Some(&(p, _, _)) = stack.last() {
                if low[v] < low[p] {
                    low[p] = low[v];
                }
                if low[v] > disc[p] {
                    return false;
                }
            }
        }
    }
    timer == n
}

/// Checks that the underlying multigraph has edge connectivity at least
/// `bound`, via max flow from vertex 0 to every other vertex with one unit
/// of undirected capacity per arc.
fn underlying_edge_connectivity_at_least(d: &Digraph, bound: usize) -> bool {
    if bound == 0 {
        return true;
    }
    let n = d.n();
    if n < 2 {
        return false;
    }
    let mut template = DenseFlow::new(n);
    for (u, v) in d.arcs() {
        template.add_cap(u, v, 1);
        template.add_cap(v, u, 1);
    }
    (1..n).all(|t| template.clone().max_flow(0, t, bound as i64) >= bound as i64)
}
