//! Brute-force ground truth at small scale.
//!
//! The searcher treats an inversion family as one subset per coordinate and
//! enumerates strictly increasing nonzero column masks, so permutations and
//! cancelling repeats of the same set are never revisited. Each recursion
//! step applies one set in place via row XOR, which keeps the work per node
//! proportional to the set size instead of rebuilding the digraph.

use crate::certificate::Property;
use crate::digraph::{Digraph, Tournament};
use crate::error::Error;
use crate::family::InversionFamily;
use crate::graph::SimpleGraph;
use crate::io::emit_trn;
use serde::{Deserialize, Serialize};
use std::collections::HashMap;

/// Largest instance the subset searcher accepts.
pub const SEARCH_MAX_N: usize = 24;
/// Largest instance the class enumerator accepts.
pub const ENUMERATE_MAX_N: usize = 7;
/// Largest instance the exact coloring DP accepts.
pub const CHROMATIC_MAX_N: usize = 16;
/// Largest instance the direct cut-cover search accepts.
pub const CUT_COVER_DIRECT_MAX_N: usize = 10;

/// What the searched family must achieve.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case", tag = "property")]
pub enum Goal {
    Acyclic,
    KStrong { k: usize },
    KArcStrong { k: usize },
}

impl From<Goal> for Property {
    fn from(g: Goal) -> Property {
        match g {
            Goal::Acyclic => Property::Acyclic,
            Goal::KStrong { k } => Property::KStrong { k },
            Goal::KArcStrong { k } => Property::KArcStrong { k },
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchBudget {
    /// Largest family size to try before giving up.
    pub max_t: usize,
    /// Maximum number of set applications across the whole search.
    pub node_cap: u64,
    /// Restrict to sorted families of nonzero, non-singleton sets. Turning
    /// this off enumerates raw per-coordinate labelings instead, for
    /// cross-checking only.
    pub symmetry_breaking: bool,
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget {
            max_t: 4,
            node_cap: 50_000_000,
            symmetry_breaking: true,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "kebab-case")]
pub enum SinvOutcome {
    /// The minimum family size, with a witnessing family.
    Exact {
        value: usize,
        family: InversionFamily,
    },
    /// Everything below `lower_bound` is exhausted and fails. `capped` means
    /// the node budget interrupted the next level; otherwise the size cap
    /// ended the search honestly.
    Unknown {
        lower_bound: usize,
        nodes: u64,
        capped: bool,
    },
}

impl SinvOutcome {
    pub fn value(&self) -> Option<usize> {
        match self {
            SinvOutcome::Exact { value, .. } => Some(*value),
            SinvOutcome::Unknown { .. } => None,
        }
    }

    pub fn describe(&self) -> String {
        match self {
            SinvOutcome::Exact { value, .. } => format!("exact value {value}"),
            SinvOutcome::Unknown {
                lower_bound,
                nodes,
                capped,
            } => {
                if *capped {
                    format!(
                        "unknown: node budget hit after {nodes} applications; \
                         every family of fewer than {lower_bound} sets fails"
                    )
                } else {
                    format!(
                        "unknown: every family of fewer than {lower_bound} sets fails \
                         ({nodes} applications)"
                    )
                }
            }
        }
    }
}

/// Bit rows of a digraph, kept alongside their transpose so both degree
/// directions and both reachability directions stay cheap.
struct Rows {
    n: usize,
    out: Vec<u64>,
    inn: Vec<u64>,
    /// Per row, the neighbours joined by exactly one arc. Inversion-invariant.
    asym: Vec<u64>,
}

impl Rows {
    fn new(d: &Digraph) -> Rows {
        let n = d.n();
        let out: Vec<u64> = (0..n).map(|u| d.out_mask64(u)).collect();
        let mut inn = vec![0u64; n];
        for (u, &row) in out.iter().enumerate() {
            let mut rest = row;
            while rest != 0 {
                let v = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                inn[v] |= 1 << u;
            }
        }
        let asym = (0..n).map(|u| out[u] ^ inn[u]).collect();
        Rows { n, out, inn, asym }
    }

    /// Reverses every single arc inside the set `c`. Involution.
    fn toggle(&mut self, c: u64) {
        let mut rest = c;
        while rest != 0 {
            let u = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let m = c & !(1u64 << u) & self.asym[u];
            self.out[u] ^= m;
            self.inn[u] ^= m;
        }
    }

    fn full(&self) -> u64 {
        if self.n == 64 {
            u64::MAX
        } else {
            (1u64 << self.n) - 1
        }
    }

    fn to_digraph(&self) -> Digraph {
        let mut arcs = Vec::new();
        for u in 0..self.n {
            let mut rest = self.out[u];
            while rest != 0 {
                let v = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                arcs.push((u, v));
            }
        }
        Digraph::from_arcs(self.n, &arcs).expect("rows stay loop-free")
    }
}

fn reach(rows: &[u64], start: usize, allowed: u64) -> u64 {
    let mut seen = 1u64 << start;
    let mut frontier = seen;
    while frontier != 0 {
        let mut next = 0u64;
        let mut f = frontier;
        while f != 0 {
            let v = f.trailing_zeros() as usize;
            f &= f - 1;
            next |= rows[v];
        }
        next &= allowed & !seen;
        seen |= next;
        frontier = next;
    }
    seen
}

fn strong_within(r: &Rows, allowed: u64) -> bool {
    if allowed == 0 {
        return false;
    }
    let start = allowed.trailing_zeros() as usize;
    reach(&r.out, start, allowed) == allowed && reach(&r.inn, start, allowed) == allowed
}

fn rows_is_acyclic(r: &Rows) -> bool {
    let mut alive = r.full();
    'peel: while alive != 0 {
        let mut rest = alive;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            if r.out[v] & alive == 0 {
                alive &= !(1u64 << v);
                continue 'peel;
            }
        }
        return false;
    }
    true
}

fn binom_sum(n: usize, up_to: usize) -> u64 {
    let mut total = 0u64;
    let mut c = 1u64;
    for s in 0..=up_to {
        total = total.saturating_add(c);
        c = c.saturating_mul((n - s) as u64) / (s as u64 + 1);
    }
    total
}

/// All `size`-subsets of `pool` bits, ascending.
fn for_each_subset(pool: u64, size: usize, f: &mut impl FnMut(u64) -> bool) -> bool {
    fn go(pool: u64, size: usize, acc: u64, f: &mut impl FnMut(u64) -> bool) -> bool {
        if size == 0 {
            return f(acc);
        }
        let mut rest = pool;
        while rest != 0 {
            let v = rest.trailing_zeros();
            rest &= rest - 1;
            if (rest.count_ones() as usize) < size - 1 {
                break;
            }
            if !go(rest, size - 1, acc | 1u64 << v, f) {
                return false;
            }
        }
        true
    }
    go(pool, size, 0, f)
}

fn rows_is_k_strong(r: &Rows, k: usize) -> bool {
    let n = r.n;
    if n < k + 1 {
        return false;
    }
    if k == 0 {
        return true;
    }
    let full = r.full();
    if k == 1 {
        return strong_within(r, full);
    }
    if binom_sum(n, k - 1) <= 200_000 {
        for s in 0..k {
            let ok = for_each_subset(full, s, &mut |removed| strong_within(r, full & !removed));
            if !ok {
                return false;
            }
        }
        true
    } else {
        crate::connectivity::is_k_strong(&r.to_digraph(), k).holds
    }
}

fn rows_is_k_arc_strong(r: &Rows, k: usize) -> bool {
    let n = r.n;
    if n < 2 {
        return false;
    }
    if k == 0 {
        return true;
    }
    let full = r.full();
    if k == 1 {
        return strong_within(r, full);
    }
    if n <= 13 {
        for s in 1..full {
            let mut leaving = 0usize;
            let mut rest = s;
            while rest != 0 {
                let u = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                leaving += (r.out[u] & full & !s).count_ones() as usize;
            }
            if leaving < k {
                return false;
            }
        }
        true
    } else {
        crate::connectivity::is_k_arc_strong(&r.to_digraph(), k)
            .map(|v| v.holds)
            .unwrap_or(false)
    }
}

fn goal_holds(r: &Rows, goal: Goal) -> bool {
    match goal {
        Goal::Acyclic => rows_is_acyclic(r),
        Goal::KStrong { k } | Goal::KArcStrong { k } if k > 0 => {
            for v in 0..r.n {
                if (r.out[v].count_ones() as usize) < k || (r.inn[v].count_ones() as usize) < k {
                    return false;
                }
            }
            match goal {
                Goal::KStrong { k } => rows_is_k_strong(r, k),
                Goal::KArcStrong { k } => rows_is_k_arc_strong(r, k),
                Goal::Acyclic => unreachable!(),
            }
        }
        Goal::KStrong { k } => rows_is_k_strong(r, k),
        Goal::KArcStrong { k } => rows_is_k_arc_strong(r, k),
    }
}

struct Searcher {
    rows: Rows,
    goal: Goal,
    nodes: u64,
    node_cap: u64,
    capped: bool,
}

impl Searcher {
    /// DFS over strictly increasing column masks with at least two bits.
    /// Returns the chosen columns on success.
    fn sorted_level(&mut self, depth: usize, min_mask: u64, picked: &mut Vec<u64>) -> bool {
        if depth == 0 {
            return goal_holds(&self.rows, self.goal);
        }
        let top = self.rows.full();
        let mut c = min_mask;
        while c <= top {
            if c.count_ones() >= 2 {
                if self.nodes >= self.node_cap {
                    self.capped = true;
                    return false;
                }
                self.nodes += 1;
                self.rows.toggle(c);
                picked.push(c);
                if self.sorted_level(depth - 1, c + 1, picked) {
                    return true;
                }
                picked.pop();
                self.rows.toggle(c);
                if self.capped {
                    return false;
                }
            }
            c += 1;
        }
        false
    }

    /// Raw enumeration of every tuple of columns, duplicates and degenerate
    /// sets included. Exists to validate the restricted search against.
    fn raw_level(&mut self, depth: usize, picked: &mut Vec<u64>) -> bool {
        if depth == 0 {
            return goal_holds(&self.rows, self.goal);
        }
        let top = self.rows.full();
        for c in 0..=top {
            if self.nodes >= self.node_cap {
                self.capped = true;
                return false;
            }
            self.nodes += 1;
            self.rows.toggle(c);
            picked.push(c);
            if self.raw_level(depth - 1, picked) {
                return true;
            }
            picked.pop();
            self.rows.toggle(c);
            if self.capped {
                return false;
            }
        }
        false
    }
}

fn mask_to_set(c: u64) -> Vec<usize> {
    let mut set = Vec::new();
    let mut rest = c;
    while rest != 0 {
        let v = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        set.push(v);
    }
    set
}

fn validate_search_input(d: &Digraph, goal: Goal) -> Result<(), Error> {
    if d.n() > SEARCH_MAX_N {
        return Err(Error::TooLarge {
            what: "exact search instance",
            limit: SEARCH_MAX_N,
            got: d.n(),
        });
    }
    match goal {
        Goal::Acyclic => {
            if !d.is_oriented() {
                return Err(Error::Invalid(
                    "a digon survives every inversion, no family can make this acyclic".into(),
                ));
            }
        }
        Goal::KArcStrong { .. } => {
            if d.n() < 2 {
                return Err(Error::Invalid(
                    "arc connectivity needs at least 2 vertices".into(),
                ));
            }
        }
        Goal::KStrong { .. } => {}
    }
    Ok(())
}

/// Smallest number of inversions turning `d` into a digraph with the goal
/// property, by iterative deepening over family sizes.
pub fn sinv_exact(d: &Digraph, goal: Goal, budget: &SearchBudget) -> Result<SinvOutcome, Error> {
    validate_search_input(d, goal)?;
    let mut s = Searcher {
        rows: Rows::new(d),
        goal,
        nodes: 0,
        node_cap: budget.node_cap,
        capped: false,
    };
    for t in 0..=budget.max_t {
        let mut picked = Vec::with_capacity(t);
        let found = if budget.symmetry_breaking {
            s.sorted_level(t, 0, &mut picked)
        } else {
            s.raw_level(t, &mut picked)
        };
        if found {
            return Ok(SinvOutcome::Exact {
                value: t,
                family: InversionFamily::new(picked.iter().map(|&c| mask_to_set(c)).collect()),
            });
        }
        if s.capped {
            return Ok(SinvOutcome::Unknown {
                lower_bound: t,
                nodes: s.nodes,
                capped: true,
            });
        }
    }
    Ok(SinvOutcome::Unknown {
        lower_bound: budget.max_t + 1,
        nodes: s.nodes,
        capped: false,
    })
}

/// Same verdict as [`sinv_exact`], splitting the first-set choices over
/// `jobs` worker threads. Each worker gets an equal share of the node budget,
/// and ties among successes resolve toward the smallest first set, matching
/// the serial search whenever no worker hits its budget share.
/// One worker's report: the family it found as bit masks, applications
/// spent, and whether its node share ran out.
type WorkerFind = (Option<(u64, Vec<u64>)>, u64, bool);

pub fn sinv_exact_jobs(
    d: &Digraph,
    goal: Goal,
    budget: &SearchBudget,
    jobs: usize,
) -> Result<SinvOutcome, Error> {
    if jobs <= 1 {
        return sinv_exact(d, goal, budget);
    }
    validate_search_input(d, goal)?;
    if !budget.symmetry_breaking {
        return sinv_exact(d, goal, budget);
    }
    let share = (budget.node_cap / jobs as u64).max(1);
    let base = Rows::new(d);
    let top = base.full();
    let mut total_nodes = 0u64;
    for t in 0..=budget.max_t {
        if t == 0 {
            let r = Rows::new(d);
            if goal_holds(&r, goal) {
                return Ok(SinvOutcome::Exact {
                    value: 0,
                    family: InversionFamily::empty(),
                });
            }
            continue;
        }
        let results: Vec<WorkerFind> = std::thread::scope(|scope| {
            let handles: Vec<_> = (0..jobs)
                .map(|w| {
                    scope.spawn(move || {
                        let mut s = Searcher {
                            rows: Rows::new(d),
                            goal,
                            nodes: 0,
                            node_cap: share,
                            capped: false,
                        };
                        let mut rank = 0usize;
                        let mut c = 0u64;
                        while c <= top {
                            if c.count_ones() >= 2 {
                                if rank % jobs == w {
                                    if s.nodes >= s.node_cap {
                                        s.capped = true;
                                        break;
                                    }
                                    s.nodes += 1;
                                    s.rows.toggle(c);
                                    let mut picked = vec![c];
                                    if s.sorted_level(t - 1, c + 1, &mut picked) {
                                        return (Some((c, picked)), s.nodes, s.capped);
                                    }
                                    s.rows.toggle(c);
                                    if s.capped {
                                        break;
                                    }
                                }
                                rank += 1;
                            }
                            c += 1;
                        }
                        (None, s.nodes, s.capped)
                    })
                })
                .collect();
            handles.into_iter().map(|h| h.join().unwrap()).collect()
        });
        let mut best: Option<(u64, Vec<u64>)> = None;
        let mut capped = false;
        for (hit, nodes, c) in results {
            total_nodes += nodes;
            capped |= c;
            if let Some((first, picked)) = hit {
                if best.as_ref().is_none_or(|(b, _)| first < *b) {
                    best = Some((first, picked));
                }
            }
        }
        if let Some((_, picked)) = best {
            return Ok(SinvOutcome::Exact {
                value: t,
                family: InversionFamily::new(picked.iter().map(|&c| mask_to_set(c)).collect()),
            });
        }
        if capped {
            return Ok(SinvOutcome::Unknown {
                lower_bound: t,
                nodes: total_nodes,
                capped: true,
            });
        }
    }
    Ok(SinvOutcome::Unknown {
        lower_bound: budget.max_t + 1,
        nodes: total_nodes,
        capped: false,
    })
}

/// All vertex bijections respecting out-degree classes, as `maps[pos] = vertex`.
fn degree_respecting_maps(t: &Tournament) -> Vec<Vec<usize>> {
    let n = t.n();
    let mut by_degree: Vec<(usize, usize)> = (0..n).map(|v| (t.out_degree(v), v)).collect();
    by_degree.sort_unstable();
    // Group vertices sharing a degree; positions for a group are contiguous.
    let mut groups: Vec<Vec<usize>> = Vec::new();
    for (i, &(d, v)) in by_degree.iter().enumerate() {
        if i > 0 && by_degree[i - 1].0 == d {
            groups.last_mut().unwrap().push(v);
        } else {
            groups.push(vec![v]);
        }
    }
    let mut maps = vec![Vec::with_capacity(n)];
    for g in &groups {
        let mut extended = Vec::new();
        for prefix in &maps {
            permute_into(g, prefix, &mut extended);
        }
        maps = extended;
    }
    maps
}

fn permute_into(group: &[usize], prefix: &[usize], out: &mut Vec<Vec<usize>>) {
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
    let mut rest = group.to_vec();
    let mut acc = prefix.to_vec();
    go(&mut rest, &mut acc, out);
}

fn key_under(t: &Tournament, map: &[usize]) -> u128 {
    let n = map.len();
    let mut key = 0u128;
    for i in 0..n {
        for j in i + 1..n {
            key <<= 1;
            if t.beats(map[i], map[j]) {
                key |= 1;
            }
        }
    }
    key
}

/// Isomorphism-invariant key: the smallest upper-triangle bitstring over all
/// degree-respecting relabelings. Equal keys mean isomorphic tournaments.
pub fn canonical_key(t: &Tournament) -> u128 {
    assert!(t.n() <= 16, "canonical key fits 16 vertices");
    degree_respecting_maps(t)
        .iter()
        .map(|m| key_under(t, m))
        .min()
        .expect("at least the identity map")
}

/// The relabeling of `t` that realizes [`canonical_key`].
pub fn canonical_rep(t: &Tournament) -> Tournament {
    let maps = degree_respecting_maps(t);
    let best = maps
        .iter()
        .min_by_key(|m| key_under(t, m))
        .expect("at least the identity map");
    let n = t.n();
    let mut arcs = Vec::with_capacity(n * (n - 1) / 2);
    for i in 0..n {
        for j in i + 1..n {
            arcs.push(if t.beats(best[i], best[j]) {
                (i, j)
            } else {
                (j, i)
            });
        }
    }
    Tournament::try_new(Digraph::from_arcs(n, &arcs).unwrap()).unwrap()
}

/// Number of relabelings fixing `t` exactly.
pub fn automorphism_count(t: &Tournament) -> usize {
    let identity = key_under(t, &(0..t.n()).collect::<Vec<_>>());
    degree_respecting_maps(t)
        .iter()
        .filter(|m| key_under(t, m) == identity)
        .count()
}

/// One representative per isomorphism class, grown by adding a vertex to the
/// representatives one size down and deduplicating canonical keys.
pub fn enumerate_tournaments(n: usize) -> Result<Vec<Tournament>, Error> {
    if n == 0 || n > ENUMERATE_MAX_N {
        return Err(Error::TooLarge {
            what: "class enumeration size",
            limit: ENUMERATE_MAX_N,
            got: n,
        });
    }
    let mut reps = vec![Tournament::try_new(Digraph::empty(1)).unwrap()];
    for m in 2..=n {
        let mut seen: HashMap<u128, Tournament> = HashMap::new();
        for rep in &reps {
            for row in 0u64..1 << (m - 1) {
                let mut arcs: Vec<(usize, usize)> = rep.as_digraph().arcs().collect();
                let newcomer = m - 1;
                for v in 0..m - 1 {
                    if row >> v & 1 == 1 {
                        arcs.push((newcomer, v));
                    } else {
                        arcs.push((v, newcomer));
                    }
                }
                let t = Tournament::try_new(Digraph::from_arcs(m, &arcs).unwrap()).unwrap();
                let key = canonical_key(&t);
                seen.entry(key).or_insert_with(|| canonical_rep(&t));
            }
        }
        let mut pairs: Vec<(u128, Tournament)> = seen.into_iter().collect();
        pairs.sort_unstable_by_key(|&(k, _)| k);
        reps = pairs.into_iter().map(|(_, t)| t).collect();
    }
    Ok(reps)
}

/// Worst-case minimum family sizes over all classes of one order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusRow {
    pub n: usize,
    pub k: usize,
    pub classes: usize,
    /// max over classes of the smallest family reaching k-strong.
    pub m_k: usize,
    /// trn bit line of a class attaining `m_k`.
    pub m_k_witness: String,
    /// max over classes of the smallest family reaching k-arc-strong.
    pub m_prime_k: usize,
    pub m_prime_k_witness: String,
}

fn trn_bits(t: &Tournament) -> String {
    emit_trn(t).lines().nth(1).unwrap_or_default().to_string()
}

/// Runs the oracle over every class of order `n` and reports the maxima.
pub fn census_row(
    n: usize,
    k: usize,
    budget: &SearchBudget,
    jobs: usize,
) -> Result<CensusRow, Error> {
    if n < 2 * k + 1 {
        return Err(Error::Invalid(format!(
            "census needs n >= 2k+1, got n={n}, k={k}"
        )));
    }
    let reps = enumerate_tournaments(n)?;
    let solve = |rep: &Tournament, goal: Goal| -> Result<usize, Error> {
        match sinv_exact(rep.as_digraph(), goal, budget)? {
            SinvOutcome::Exact { value, .. } => Ok(value),
            outcome => Err(Error::VerificationFailed(format!(
                "census oracle undecided on {}: {}",
                trn_bits(rep),
                outcome.describe()
            ))),
        }
    };
    let worker = |chunk: &[Tournament]| -> Result<Vec<(usize, usize)>, Error> {
        chunk
            .iter()
            .map(|rep| {
                Ok((
                    solve(rep, Goal::KStrong { k })?,
                    solve(rep, Goal::KArcStrong { k })?,
                ))
            })
            .collect()
    };
    let values: Vec<(usize, usize)> = if jobs <= 1 || reps.len() < 2 * jobs {
        worker(&reps)?
    } else {
        let chunk_len = reps.len().div_ceil(jobs);
        let chunks: Vec<&[Tournament]> = reps.chunks(chunk_len).collect();
        let results: Vec<Result<Vec<(usize, usize)>, Error>> = std::thread::scope(|scope| {
            let handles: Vec<_> = chunks
                .into_iter()
                .map(|chunk| scope.spawn(move || worker(chunk)))
                .collect();
            handles.into_iter().map(|h| h.join().unwrap()).collect()
        });
        let mut all = Vec::with_capacity(reps.len());
        for r in results {
            all.extend(r?);
        }
        all
    };
    let mut row = CensusRow {
        n,
        k,
        classes: reps.len(),
        m_k: 0,
        m_k_witness: trn_bits(&reps[0]),
        m_prime_k: 0,
        m_prime_k_witness: trn_bits(&reps[0]),
    };
    for (rep, &(v_strong, v_arc)) in reps.iter().zip(&values) {
        debug_assert!(v_arc <= v_strong, "arc variant can never cost more");
        if v_strong > row.m_k {
            row.m_k = v_strong;
            row.m_k_witness = trn_bits(rep);
        }
        if v_arc > row.m_prime_k {
            row.m_prime_k = v_arc;
            row.m_prime_k_witness = trn_bits(rep);
        }
    }
    Ok(row)
}

/// Exact chromatic number by covering the vertex set with independent sets,
/// one vertex forced per step.
pub fn chromatic_number(g: &SimpleGraph) -> Result<usize, Error> {
    coloring_dp(g).map(|(chi, _)| chi)
}

/// A proper coloring using [`chromatic_number`] colors, as color classes.
pub fn optimal_coloring(g: &SimpleGraph) -> Result<Vec<Vec<usize>>, Error> {
    coloring_dp(g).map(|(_, classes)| classes)
}

fn coloring_dp(g: &SimpleGraph) -> Result<(usize, Vec<Vec<usize>>), Error> {
    let n = g.n();
    if n > CHROMATIC_MAX_N {
        return Err(Error::TooLarge {
            what: "exact coloring instance",
            limit: CHROMATIC_MAX_N,
            got: n,
        });
    }
    if n == 0 {
        return Ok((0, Vec::new()));
    }
    let mut adj = vec![0u32; n];
    for &(u, v) in g.edges() {
        adj[u] |= 1 << v;
        adj[v] |= 1 << u;
    }
    let full = if n == 32 { u32::MAX } else { (1u32 << n) - 1 };
    let mut indep = vec![false; 1 << n];
    indep[0] = true;
    for s in 1..=full {
        let v = s.trailing_zeros() as usize;
        let rest = s & (s - 1);
        indep[s as usize] = indep[rest as usize] && adj[v] & rest == 0;
    }
    // colors[s] = fewest independent sets covering s. The lowest vertex of s
    // must land in one of them, so only subsets containing it are tried.
    let mut colors = vec![u8::MAX; 1 << n];
    colors[0] = 0;
    for s in 1..=full {
        let low = 1u32 << s.trailing_zeros();
        let mut best = u8::MAX;
        // Enumerate subsets of s containing the lowest bit.
        let pool = s & !low;
        let mut sub = pool;
        loop {
            let class = sub | low;
            if indep[class as usize] {
                best = best.min(colors[(s & !class) as usize].saturating_add(1));
            }
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & pool;
        }
        colors[s as usize] = best;
    }
    let chi = colors[full as usize] as usize;
    let mut classes = Vec::with_capacity(chi);
    let mut s = full;
    while s != 0 {
        let low = 1u32 << s.trailing_zeros();
        let pool = s & !low;
        let mut sub = pool;
        let mut chosen = None;
        loop {
            let class = sub | low;
            if indep[class as usize] && colors[(s & !class) as usize] + 1 == colors[s as usize] {
                let better = chosen.is_none_or(|c: u32| class < c);
                if better {
                    chosen = Some(class);
                }
            }
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & pool;
        }
        let class = chosen.expect("dp table admits a cover");
        classes.push(mask_to_set(class as u64));
        s &= !class;
    }
    Ok((chi, classes))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CutCoverMode {
    /// ceil(log2 chromatic_number).
    Formula,
    /// Search families of vertex subsets whose cuts cover every edge.
    Direct,
}

/// Fewest subsets X₁..X_r such that every edge crosses some (X_i, rest) cut.
pub fn cut_cover_number(g: &SimpleGraph, mode: CutCoverMode) -> Result<usize, Error> {
    match mode {
        CutCoverMode::Formula => {
            let chi = chromatic_number(g)?;
            Ok((usize::BITS - (chi.max(1) - 1).leading_zeros()) as usize)
        }
        CutCoverMode::Direct => {
            let n = g.n();
            if n > CUT_COVER_DIRECT_MAX_N {
                return Err(Error::TooLarge {
                    what: "direct cut cover instance",
                    limit: CUT_COVER_DIRECT_MAX_N,
                    got: n,
                });
            }
            let m = g.edge_count();
            let edge_full = if m == 64 { u64::MAX } else { (1u64 << m) - 1 };
            // A cut equals its complement's cut, so vertex 0 stays outside.
            let free = n.saturating_sub(1);
            let covered: Vec<u64> = (0u64..1 << free)
                .map(|x| {
                    let side = x << 1;
                    let mut mask = 0u64;
                    for (e, &(u, v)) in g.edges().iter().enumerate() {
                        if (side >> u & 1) != (side >> v & 1) {
                            mask |= 1 << e;
                        }
                    }
                    mask
                })
                .collect();
            fn covers(covered: &[u64], from: usize, left: usize, acc: u64, want: u64) -> bool {
                if acc == want {
                    return true;
                }
                if left == 0 {
                    return false;
                }
                for i in from..covered.len() {
                    if covers(covered, i + 1, left - 1, acc | covered[i], want) {
                        return true;
                    }
                }
                false
            }
            for r in 0..=n.max(1) {
                if covers(&covered, 0, r, 0, edge_full) {
                    return Ok(r);
                }
            }
            unreachable!("binary codes always cover");
        }
    }
}

/// A family of ceil(log2 chi) subsets whose cuts cover every edge, from the
/// binary code of an optimal coloring.
pub fn cut_cover_family(g: &SimpleGraph) -> Result<Vec<Vec<usize>>, Error> {
    let classes = optimal_coloring(g)?;
    let chi = classes.len();
    let r = (usize::BITS - (chi.max(1) - 1).leading_zeros()) as usize;
    let mut color_of = vec![0usize; g.n()];
    for (c, class) in classes.iter().enumerate() {
        for &v in class {
            color_of[v] = c;
        }
    }
    let family = (0..r)
        .map(|bit| {
            (0..g.n())
                .filter(|&v| color_of[v] >> bit & 1 == 1)
                .collect()
        })
        .collect();
    Ok(family)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::connectivity;
    use crate::digraph::random_digraph;

    #[test]
    fn row_checkers_agree_with_flow_checkers() {
        for seed in 0..80 {
            let n = 2 + (seed as usize % 6);
            let d = random_digraph(n, 0.5, 3000 + seed);
            let r = Rows::new(&d);
            assert_eq!(rows_is_acyclic(&r), d.is_acyclic());
            for k in 0..4 {
                assert_eq!(
                    rows_is_k_strong(&r, k),
                    connectivity::is_k_strong(&d, k).holds,
                    "k-strong n={n} k={k} seed={seed}"
                );
                assert_eq!(
                    rows_is_k_arc_strong(&r, k),
                    connectivity::is_k_arc_strong(&d, k).unwrap().holds,
                    "k-arc n={n} k={k} seed={seed}"
                );
            }
        }
    }

    #[test]
    fn toggling_matches_family_application() {
        for seed in 0..50 {
            let d = random_digraph(7, 0.5, 4000 + seed);
            let mut r = Rows::new(&d);
            r.toggle(0b0110101);
            r.toggle(0b1110000);
            let fam = InversionFamily::new(vec![vec![0, 2, 4, 5], vec![4, 5, 6]]);
            assert_eq!(r.to_digraph(), fam.apply(&d));
        }
    }

    #[test]
    fn triangle_needs_one_set_to_get_strong() {
        let d = Tournament::transitive(3).into_digraph();
        match sinv_exact(&d, Goal::KStrong { k: 1 }, &SearchBudget::default()).unwrap() {
            SinvOutcome::Exact { value, family } => {
                assert_eq!(value, 1);
                assert!(connectivity::is_strong(&family.apply(&d)));
            }
            other => panic!("expected exact, got {}", other.describe()),
        }
    }

    #[test]
    fn already_satisfied_inputs_cost_zero() {
        let r5 = Tournament::rotative(2).into_digraph();
        let outcome = sinv_exact(&r5, Goal::KArcStrong { k: 2 }, &SearchBudget::default());
        assert_eq!(outcome.unwrap().value(), Some(0));
        let tt = Tournament::transitive(5).into_digraph();
        let outcome = sinv_exact(&tt, Goal::Acyclic, &SearchBudget::default());
        assert_eq!(outcome.unwrap().value(), Some(0));
    }

    #[test]
    fn digons_block_the_acyclic_goal() {
        let d = Digraph::from_arcs(2, &[(0, 1), (1, 0)]).unwrap();
        assert!(sinv_exact(&d, Goal::Acyclic, &SearchBudget::default()).is_err());
    }

    #[test]
    fn budget_caps_produce_honest_unknowns() {
        let d = Tournament::transitive(6).into_digraph();
        let tight = SearchBudget {
            max_t: 0,
            node_cap: 1_000_000,
            symmetry_breaking: true,
        };
        match sinv_exact(&d, Goal::KStrong { k: 2 }, &tight).unwrap() {
            SinvOutcome::Unknown {
                lower_bound,
                capped,
                ..
            } => {
                assert_eq!(lower_bound, 1);
                assert!(!capped);
            }
            other => panic!("expected unknown, got {}", other.describe()),
        }
        let choked = SearchBudget {
            max_t: 3,
            node_cap: 5,
            symmetry_breaking: true,
        };
        match sinv_exact(&d, Goal::KStrong { k: 2 }, &choked).unwrap() {
            SinvOutcome::Unknown { capped, .. } => assert!(capped),
            other => panic!("expected capped unknown, got {}", other.describe()),
        }
    }

    #[test]
    fn symmetry_breaking_matches_raw_enumeration() {
        for seed in 0..30 {
            let n = 3 + (seed as usize % 3);
            let d = Tournament::random(n, 7000 + seed).into_digraph();
            for goal in [Goal::Acyclic, Goal::KStrong { k: 1 }] {
                let restricted = SearchBudget {
                    max_t: 2,
                    node_cap: 10_000_000,
                    symmetry_breaking: true,
                };
                let raw = SearchBudget {
                    symmetry_breaking: false,
                    ..restricted.clone()
                };
                let a = sinv_exact(&d, goal, &restricted).unwrap().value();
                let b = sinv_exact(&d, goal, &raw).unwrap().value();
                assert_eq!(a, b, "goal {goal:?} seed {seed}");
            }
        }
    }

    #[test]
    fn parallel_search_matches_serial() {
        for seed in 0..12 {
            let d = Tournament::random(6, 8000 + seed).into_digraph();
            for goal in [
                Goal::Acyclic,
                Goal::KStrong { k: 1 },
                Goal::KStrong { k: 2 },
            ] {
                let budget = SearchBudget::default();
                let serial = sinv_exact(&d, goal, &budget).unwrap();
                let parallel = sinv_exact_jobs(&d, goal, &budget, 3).unwrap();
                assert_eq!(serial, parallel, "goal {goal:?} seed {seed}");
            }
        }
    }

    #[test]
    fn converse_has_equal_cost() {
        for seed in 0..40 {
            let d = Tournament::random(5, 9000 + seed).into_digraph();
            let budget = SearchBudget::default();
            for goal in [Goal::KStrong { k: 1 }, Goal::KArcStrong { k: 2 }] {
                let a = sinv_exact(&d, goal, &budget).unwrap().value();
                let b = sinv_exact(&d.converse(), goal, &budget).unwrap().value();
                assert_eq!(a, b, "goal {goal:?} seed {seed}");
            }
        }
    }

    #[test]
    fn class_counts_by_size() {
        let want = [1usize, 1, 2, 4, 12, 56, 456];
        for (i, &w) in want.iter().enumerate() {
            let n = i + 1;
            assert_eq!(enumerate_tournaments(n).unwrap().len(), w, "n={n}");
        }
        assert!(enumerate_tournaments(8).is_err());
        assert!(enumerate_tournaments(0).is_err());
    }

    #[test]
    fn classes_match_direct_canonicalization_of_all_labeled_tournaments() {
        for n in 2..=5usize {
            let pairs = n * (n - 1) / 2;
            let mut keys = std::collections::HashSet::new();
            for mask in 0u64..1 << pairs {
                let mut arcs = Vec::with_capacity(pairs);
                let mut bit = 0;
                for i in 0..n {
                    for j in i + 1..n {
                        arcs.push(if mask >> bit & 1 == 1 { (i, j) } else { (j, i) });
                        bit += 1;
                    }
                }
                let t = Tournament::try_new(Digraph::from_arcs(n, &arcs).unwrap()).unwrap();
                keys.insert(canonical_key(&t));
            }
            assert_eq!(keys.len(), enumerate_tournaments(n).unwrap().len(), "n={n}");
        }
    }

    #[test]
    fn orbit_sizes_add_up_to_all_labelings() {
        for n in [5usize, 6] {
            let reps = enumerate_tournaments(n).unwrap();
            let factorial: usize = (1..=n).product();
            let total: usize = reps.iter().map(|t| factorial / automorphism_count(t)).sum();
            assert_eq!(total, 1 << (n * (n - 1) / 2), "n={n}");
        }
    }

    #[test]
    fn canonical_key_is_isomorphism_invariant() {
        let t = Tournament::random(6, 77);
        let key = canonical_key(&t);
        // Relabel by a few permutations and re-canonicalize.
        for shift in 1..6 {
            let perm: Vec<usize> = (0..6).map(|v| (v + shift) % 6).collect();
            let mut arcs = Vec::new();
            for i in 0..6 {
                for j in 0..6 {
                    if i != j && t.beats(perm[i], perm[j]) {
                        arcs.push((i, j));
                    }
                }
            }
            let relabeled = Tournament::try_new(Digraph::from_arcs(6, &arcs).unwrap()).unwrap();
            assert_eq!(canonical_key(&relabeled), key);
        }
        let rep = canonical_rep(&t);
        assert_eq!(canonical_key(&rep), key);
        assert_eq!(
            key_under(&rep, &(0..6).collect::<Vec<_>>()),
            key,
            "representative realizes its own key"
        );
    }

    #[test]
    fn small_census_values() {
        let row = census_row(3, 1, &SearchBudget::default(), 1).unwrap();
        assert_eq!((row.classes, row.m_k, row.m_prime_k), (2, 1, 1));
        let row = census_row(5, 2, &SearchBudget::default(), 2).unwrap();
        assert_eq!((row.classes, row.m_k, row.m_prime_k), (12, 2, 2));
        assert!(census_row(4, 2, &SearchBudget::default(), 1).is_err());
    }

    #[test]
    fn chromatic_numbers() {
        assert_eq!(chromatic_number(&SimpleGraph::complete(4)).unwrap(), 4);
        assert_eq!(chromatic_number(&SimpleGraph::cycle(5)).unwrap(), 3);
        assert_eq!(chromatic_number(&SimpleGraph::cycle(6)).unwrap(), 2);
        assert_eq!(
            chromatic_number(&SimpleGraph::new(3, &[]).unwrap()).unwrap(),
            1
        );
        let petersen = SimpleGraph::new(
            10,
            &[
                (0, 1),
                (1, 2),
                (2, 3),
                (3, 4),
                (4, 0),
                (5, 7),
                (7, 9),
                (9, 6),
                (6, 8),
                (8, 5),
                (0, 5),
                (1, 6),
                (2, 7),
                (3, 8),
                (4, 9),
            ],
        )
        .unwrap();
        assert_eq!(chromatic_number(&petersen).unwrap(), 3);
        for seed in 0..20 {
            let g = SimpleGraph::gnp(7, 0.5, seed);
            let classes = optimal_coloring(&g).unwrap();
            assert_eq!(classes.len(), chromatic_number(&g).unwrap());
            let mut seen = vec![false; 7];
            for class in &classes {
                for &v in class {
                    assert!(!seen[v]);
                    seen[v] = true;
                }
                for &u in class {
                    for &v in class {
                        assert!(u == v || !g.has_edge(u, v));
                    }
                }
            }
            assert!(seen.into_iter().all(|s| s));
        }
    }

    #[test]
    fn cut_cover_modes_agree() {
        assert_eq!(
            cut_cover_number(&SimpleGraph::complete(2), CutCoverMode::Direct).unwrap(),
            1
        );
        assert_eq!(
            cut_cover_number(&SimpleGraph::complete(4), CutCoverMode::Formula).unwrap(),
            2
        );
        assert_eq!(
            cut_cover_number(&SimpleGraph::new(3, &[]).unwrap(), CutCoverMode::Direct).unwrap(),
            0
        );
        for seed in 0..30 {
            let g = SimpleGraph::gnp(6, 0.45, 100 + seed);
            let f = cut_cover_number(&g, CutCoverMode::Formula).unwrap();
            let d = cut_cover_number(&g, CutCoverMode::Direct).unwrap();
            assert_eq!(f, d, "seed={seed}");
            let family = cut_cover_family(&g).unwrap();
            assert_eq!(family.len(), f);
            for &(u, v) in g.edges() {
                assert!(
                    family.iter().any(|x| x.contains(&u) != x.contains(&v)),
                    "edge ({u},{v}) uncovered, seed={seed}"
                );
            }
        }
    }
}
