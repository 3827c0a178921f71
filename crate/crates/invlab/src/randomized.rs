//! Randomized constructions run as verify-and-retry algorithms: every draw
//! is seeded, every success is re-checked by flow, and exhausted retries fall
//! back to the deterministic sweep instead of failing silently.

use crate::certificate::{Certificate, Property};
use crate::connectivity::is_k_strong;
use crate::construct::{make_kstrong_2k, transform_between};
use crate::digraph::{Digraph, Tournament};
use crate::error::Error;
use crate::family::{InversionFamily, VectorLabeling};
use crate::mixed::complete_to_eulerian_tournament;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

/// Knobs for the randomized procedures. A run is fully determined by the
/// input, the strength k, and this struct.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RandomizedConfig {
    pub seed: u64,
    pub max_retries: u64,
    /// Starting dimension for the vector labeling scheme.
    pub t_start: usize,
    /// The dimension doubles after each exhausted retry round, up to here.
    pub t_cap: usize,
    /// Slack parameter carried into reports; correctness never relies on it.
    pub epsilon: f64,
    /// Batch size for the balanced pipeline; derived from k when unset.
    pub q: Option<usize>,
    /// Random round count for the balanced pipeline; derived from k when unset.
    pub q_star: Option<usize>,
}

impl Default for RandomizedConfig {
    fn default() -> Self {
        RandomizedConfig {
            seed: 0,
            max_retries: 64,
            t_start: 3,
            t_cap: 64,
            epsilon: 0.25,
            q: None,
            q_star: None,
        }
    }
}

/// Per-vertex distance of the in-degree from k over a designated half of the
/// vertex set.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DefectProfile {
    pub half: Vec<usize>,
    pub defect: Vec<usize>,
}

impl DefectProfile {
    pub fn max(&self) -> usize {
        self.defect.iter().copied().max().unwrap_or(0)
    }
}

pub fn defect_profile(d: &Digraph, k: usize, half: &[usize]) -> DefectProfile {
    DefectProfile {
        half: half.to_vec(),
        defect: half.iter().map(|&b| d.in_degree(b).abs_diff(k)).collect(),
    }
}

fn arc_certify(
    t: &Tournament,
    k: usize,
    sets: Vec<Vec<usize>>,
    provenance: &str,
) -> Result<Certificate, Error> {
    let family = InversionFamily::new(sets).without_noops();
    let cert =
        Certificate::new(Property::KArcStrong { k }, family, provenance).verify(t.as_digraph());
    if !cert.verified {
        return Err(Error::VerificationFailed(format!(
            "{provenance} did not make the input {k}-arc-strong"
        )));
    }
    Ok(cert)
}

fn bit_mask(width: usize) -> u64 {
    if width >= 64 {
        u64::MAX
    } else {
        (1u64 << width) - 1
    }
}

/// Labels every vertex with a uniform nonzero bit vector and inverts the per-
/// bit sets; retries with fresh draws, doubling the dimension when a round of
/// retries fails, and re-verifies every success.
pub fn random_kstrong_vectors(
    t: &Tournament,
    k: usize,
    cfg: &RandomizedConfig,
) -> Result<Certificate, Error> {
    if cfg.t_start == 0 || cfg.t_start > 64 || cfg.t_cap > 64 || cfg.t_cap < cfg.t_start {
        return Err(Error::Invalid(format!(
            "vector dimensions must satisfy 1 <= start <= cap <= 64, got start {} cap {}",
            cfg.t_start, cfg.t_cap
        )));
    }
    let n = t.n();
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut attempts: u64 = 0;
    let mut dim = cfg.t_start;
    loop {
        for _ in 0..cfg.max_retries.max(1) {
            attempts += 1;
            let mask = bit_mask(dim);
            let vectors: Vec<u64> = (0..n)
                .map(|_| loop {
                    let v = rng.gen::<u64>() & mask;
                    if v != 0 {
                        break v;
                    }
                })
                .collect();
            let family = VectorLabeling::new(dim, vectors)
                .to_family()
                .without_noops();
            if is_k_strong(&family.apply(t.as_digraph()), k).holds {
                let cert = Certificate::new(
                    Property::KStrong { k },
                    family,
                    &format!("random vertex vectors of dimension {dim}"),
                )
                .verify(t.as_digraph());
                return Ok(cert);
            }
        }
        if dim * 2 > cfg.t_cap {
            return Err(Error::RetriesExhausted {
                attempts,
                last_failure: format!(
                    "no labeling up to dimension {dim} made the {n}-vertex input {k}-strong"
                ),
            });
        }
        dim *= 2;
    }
}

fn pipeline_q(k: usize, cfg: &RandomizedConfig) -> usize {
    cfg.q
        .unwrap_or_else(|| ((k as f64).log2() / 4.0).ceil() as usize)
}

fn pipeline_q_star(k: usize, cfg: &RandomizedConfig) -> usize {
    cfg.q_star
        .unwrap_or_else(|| (k as f64).log2().powi(2).ceil() as usize)
}

fn rank_f2(vecs: &[u128]) -> usize {
    let mut basis: Vec<u128> = Vec::new();
    for &v in vecs {
        let mut v = v;
        for &b in &basis {
            let high = 127 - b.leading_zeros();
            if v >> high & 1 == 1 {
                v ^= b;
            }
        }
        if v != 0 {
            basis.push(v);
        }
    }
    basis.len()
}

fn for_each_combination(n: usize, q: usize, mut f: impl FnMut(&[usize]) -> bool) -> bool {
    fn go(
        start: usize,
        n: usize,
        left: usize,
        acc: &mut Vec<usize>,
        f: &mut impl FnMut(&[usize]) -> bool,
    ) -> bool {
        if left == 0 {
            return f(acc);
        }
        for i in start..=n - left {
            acc.push(i);
            if !go(i + 1, n, left - 1, acc, f) {
                return false;
            }
            acc.pop();
        }
        true
    }
    go(0, n, q, &mut Vec::new(), &mut f)
}

/// Splits the half into same-defect-parity batches of size q, as many as fit
/// under 3tq <= 2k.
fn parity_batches(d: &Digraph, k: usize, half: &[usize], q: usize) -> Vec<Vec<usize>> {
    let mut buckets: [Vec<usize>; 2] = [Vec::new(), Vec::new()];
    for &b in half {
        buckets[d.in_degree(b).abs_diff(k) % 2].push(b);
    }
    let mut batches = Vec::new();
    loop {
        if 3 * (batches.len() + 1) * q > 2 * k {
            break;
        }
        match buckets.iter_mut().find(|bk| bk.len() >= q) {
            Some(bucket) => batches.push(bucket.drain(..q).collect()),
            None => break,
        }
    }
    batches
}

/// Grows the batch into a set whose inversion zeroes every member's defect.
/// Each added vertex flips one arc at every member, so defects move by
/// exactly one per step; members at the current maximum get the direction
/// that shrinks them. Returns None when no candidate fits.
fn zero_batch(d: &Digraph, k: usize, a: &[usize], batch: &[usize]) -> Option<Vec<usize>> {
    let mut u = d.invert(batch);
    let mut y: Vec<usize> = batch.to_vec();
    let max_defect = |u: &Digraph| {
        batch
            .iter()
            .map(|&v| u.in_degree(v).abs_diff(k))
            .max()
            .unwrap()
    };
    let mut p = max_defect(&u);
    while p > 0 {
        let cand = a.iter().copied().filter(|x| !y.contains(x)).find(|&x| {
            batch.iter().all(|&bv| {
                let surplus = u.in_degree(bv) as i64 - k as i64;
                if surplus.unsigned_abs() as usize != p {
                    return true;
                }
                if surplus > 0 {
                    u.has_arc(x, bv)
                } else {
                    u.has_arc(bv, x)
                }
            })
        })?;
        let before: Vec<usize> = batch.iter().map(|&v| u.in_degree(v)).collect();
        for &m in &y {
            u = u.invert(&[cand, m]);
        }
        for (i, &bv) in batch.iter().enumerate() {
            assert_eq!(
                u.in_degree(bv).abs_diff(before[i]),
                1,
                "one flipped arc must move each member's defect by exactly one"
            );
        }
        let next = max_defect(&u);
        if next >= p {
            return None;
        }
        p = next;
        y.push(cand);
    }
    Some(y)
}

/// Stages after a good random round: zero the batched defects, freeze the
/// covered half and complete the rest to a balanced tournament, then sweep
/// the rest onto that completion. Returns every inversion set used.
fn finish_from_balanced(
    t_prime: &Tournament,
    k: usize,
    q: usize,
    a: &[usize],
    b: &[usize],
) -> Result<Vec<Vec<usize>>, String> {
    let batches = parity_batches(t_prime.as_digraph(), k, b, q);
    if batches.is_empty() {
        return Err("no parity-homogeneous batch fits under the size budget".into());
    }
    let mut ys: Vec<Vec<usize>> = Vec::new();
    for batch in &batches {
        match zero_batch(t_prime.as_digraph(), k, a, batch) {
            Some(y) => ys.push(y),
            None => return Err("defect zeroing ran out of candidates".into()),
        }
    }
    let second = InversionFamily::new(ys.clone()).apply(t_prime.as_digraph());
    let second = Tournament::try_new(second).map_err(|e| e.to_string())?;
    let mut covered: Vec<usize> = batches.concat();
    covered.sort_unstable();
    let third = complete_to_eulerian_tournament(&second, &covered).map_err(|e| e.to_string())?;
    let rest: Vec<usize> = (0..t_prime.n()).filter(|v| !covered.contains(v)).collect();
    let zs = transform_between(&second.induced(&rest), &third.induced(&rest))
        .map_err(|e| e.to_string())?;
    let mut sets = ys;
    sets.extend(
        zs.sets
            .iter()
            .map(|s| s.iter().map(|&i| rest[i]).collect::<Vec<usize>>()),
    );
    Ok(sets)
}

fn pipeline_sets(
    t: &Tournament,
    k: usize,
    cfg: &RandomizedConfig,
) -> Result<Vec<Vec<usize>>, String> {
    let n = t.n();
    let q = pipeline_q(k, cfg);
    let q_star = pipeline_q_star(k, cfg);
    if q == 0 || q_star == 0 {
        return Err("batch parameters degenerate at this strength".into());
    }
    if q_star > 128 {
        return Err(format!("round count {q_star} exceeds the vector width"));
    }
    let a: Vec<usize> = (0..k).collect();
    let b: Vec<usize> = (k..n).collect();
    if combinations_at_most(b.len(), q, 200_000).is_none() {
        return Err(format!(
            "event checks need too many {q}-subsets of {} vertices",
            b.len()
        ));
    }
    let e1_bound = 2.0 * (k as f64).sqrt() * (k as f64).log2();
    let e3_bound = 5.0 * (k as f64).sqrt() * (k as f64).log2();
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut last = String::from("no attempt made");
    for round in 0..cfg.max_retries.max(1) {
        let member: Vec<Vec<bool>> = (0..q_star)
            .map(|_| (0..n).map(|_| rng.gen::<bool>()).collect())
            .collect();
        let xs: Vec<Vec<usize>> = member
            .iter()
            .map(|row| (0..n).filter(|&v| row[v]).collect())
            .collect();
        let t_prime = InversionFamily::new(xs.clone()).apply(t.as_digraph());
        let t_prime = Tournament::try_new(t_prime).expect("inversion preserves tournaments");
        if b.iter()
            .any(|&v| t_prime.in_degree(v).abs_diff(k) as f64 >= e1_bound)
        {
            last = format!("round {round}: an in-degree defect reached the threshold");
            continue;
        }
        let vecs: Vec<u128> = b
            .iter()
            .map(|&v| {
                member
                    .iter()
                    .enumerate()
                    .fold(0u128, |acc, (i, row)| acc | (u128::from(row[v]) << i))
            })
            .collect();
        let mut reason = None;
        for_each_combination(b.len(), q, |combo| {
            let chosen: Vec<u128> = combo.iter().map(|&i| vecs[i]).collect();
            if rank_f2(&chosen) < q {
                reason = Some(format!(
                    "round {round}: a membership vector batch is linearly dependent"
                ));
                return false;
            }
            for pattern in 0..1u32 << q {
                let common = a
                    .iter()
                    .filter(|&&x| {
                        combo.iter().enumerate().all(|(i, &bi)| {
                            if pattern >> i & 1 == 1 {
                                t_prime.has_arc(b[bi], x)
                            } else {
                                t_prime.has_arc(x, b[bi])
                            }
                        })
                    })
                    .count();
                if common as f64 <= e3_bound {
                    reason = Some(format!(
                        "round {round}: a common neighbourhood fell under the threshold"
                    ));
                    return false;
                }
            }
            true
        });
        if let Some(r) = reason {
            last = r;
            continue;
        }
        let mut sets = xs;
        sets.extend(finish_from_balanced(&t_prime, k, q, &a, &b)?);
        return Ok(sets);
    }
    Err(last)
}

fn combinations_at_most(n: usize, q: usize, cap: u64) -> Option<u64> {
    let mut total: u64 = 1;
    for i in 0..q.min(n) {
        total = total.checked_mul((n - i) as u64)? / (i as u64 + 1);
        if total > cap {
            return None;
        }
    }
    Some(total)
}

/// The balanced-half pipeline for tournaments on exactly 2k+1 vertices:
/// random rounds gated by exact event checks, defect zeroing in parity
/// batches, balanced completion, and a finishing sweep. When the event
/// thresholds cannot be met at this scale it falls back to the deterministic
/// sweep, and says so in the provenance.
pub fn mkstrich_pipeline(
    t: &Tournament,
    k: usize,
    cfg: &RandomizedConfig,
) -> Result<Certificate, Error> {
    let n = t.n();
    if n != 2 * k + 1 {
        return Err(Error::Invalid(format!(
            "the balanced pipeline needs exactly {} vertices for strength {k}, got {n}",
            2 * k + 1
        )));
    }
    if k == 0 {
        return arc_certify(t, 0, vec![], "random batch pipeline");
    }
    match pipeline_sets(t, k, cfg) {
        Ok(sets) => arc_certify(t, k, sets, "random batch pipeline"),
        Err(reason) => {
            let base = make_kstrong_2k(t, k)?;
            arc_certify(
                t,
                k,
                base.family.sets.clone(),
                &format!("random batch pipeline fell back to the sweep ({reason})"),
            )
        }
    }
}

fn driver_sets(
    t: &Tournament,
    k: usize,
    cfg: &RandomizedConfig,
    rng: &mut ChaCha8Rng,
    fell_back: &mut bool,
) -> Result<Vec<Vec<usize>>, Error> {
    let n = t.n();
    if n == 2 * k + 1 {
        return match pipeline_sets(t, k, cfg) {
            Ok(sets) => Ok(sets),
            Err(_) => {
                *fell_back = true;
                Ok(make_kstrong_2k(t, k)?.family.sets)
            }
        };
    }
    if n > 4 * k - 2 {
        // Large orders guarantee a vertex with k arcs each way; dropping it
        // preserves any strength the rest achieves.
        let v = match (0..n).find(|&v| t.out_degree(v).min(t.in_degree(v)) >= k) {
            Some(v) => v,
            None => {
                *fell_back = true;
                return Ok(make_kstrong_2k(t, k)?.family.sets);
            }
        };
        let rest: Vec<usize> = (0..n).filter(|&u| u != v).collect();
        let sub_sets = driver_sets(&t.induced(&rest), k, cfg, rng, fell_back)?;
        return Ok(lift(sub_sets, &rest));
    }
    let mid_threshold = 2.0 * k as f64 + 1.0 + 6.0 * (k as f64).sqrt() * (k as f64).log2();
    if n as f64 > mid_threshold {
        // Mid range: invert the small half together with a random subset of
        // the big half until the small half has k arcs each way into it.
        let a: Vec<usize> =
            (0..2 * k + 1 + (mid_threshold - 2.0 * k as f64 - 1.0) as usize).collect();
        let b: Vec<usize> = (a.len()..n).collect();
        for _ in 0..cfg.max_retries.max(1) {
            let mut set: Vec<usize> = b.clone();
            set.extend(a.iter().copied().filter(|_| rng.gen::<bool>()));
            set.sort_unstable();
            let t_prime = InversionFamily::new(vec![set.clone()]).apply(t.as_digraph());
            let t_prime = Tournament::try_new(t_prime).expect("inversion preserves tournaments");
            let good = b.iter().all(|&v| {
                let into = a.iter().filter(|&&x| t_prime.has_arc(x, v)).count();
                let out_of = a.iter().filter(|&&x| t_prime.has_arc(v, x)).count();
                into >= k && out_of >= k
            });
            if good {
                let sub_sets = driver_sets(&t_prime.induced(&a), k, cfg, rng, fell_back)?;
                let mut sets = vec![set];
                sets.extend(lift(sub_sets, &a));
                return Ok(sets);
            }
        }
        *fell_back = true;
        return Ok(make_kstrong_2k(t, k)?.family.sets);
    }
    // Small range: flip arcs at one vertex until it has k arcs each way,
    // then drop it and recurse.
    let v = 0;
    let mut fix: Vec<usize> = Vec::new();
    if t.in_degree(v) < k {
        fix.push(v);
        fix.extend(
            (0..n)
                .filter(|&u| u != v && t.beats(v, u))
                .take(k - t.in_degree(v)),
        );
    } else if t.out_degree(v) < k {
        fix.push(v);
        fix.extend(
            (0..n)
                .filter(|&u| u != v && t.beats(u, v))
                .take(k - t.out_degree(v)),
        );
    }
    let t_prime = InversionFamily::new(vec![fix.clone()])
        .without_noops()
        .apply(t.as_digraph());
    let t_prime = Tournament::try_new(t_prime).expect("inversion preserves tournaments");
    debug_assert!(t_prime.out_degree(v).min(t_prime.in_degree(v)) >= k);
    let rest: Vec<usize> = (1..n).collect();
    let sub_sets = driver_sets(&t_prime.induced(&rest), k, cfg, rng, fell_back)?;
    let mut sets = Vec::new();
    if fix.len() >= 2 {
        sets.push(fix);
    }
    sets.extend(lift(sub_sets, &rest));
    Ok(sets)
}

fn lift(sets: Vec<Vec<usize>>, verts: &[usize]) -> Vec<Vec<usize>> {
    sets.into_iter()
        .map(|s| s.into_iter().map(|i| verts[i]).collect())
        .collect()
}

/// Size dispatch for arc-strength on any order at least 2k+1: peel large
/// orders down, randomly repair the mid range, fix vertices in the small
/// range, and hand the balanced base case to the pipeline.
pub fn upper_mprime_driver(
    t: &Tournament,
    k: usize,
    cfg: &RandomizedConfig,
) -> Result<Certificate, Error> {
    let n = t.n();
    if n < 2 * k + 1 {
        return Err(Error::Invalid(format!(
            "need at least {} vertices for arc-strength {k}, got {n}",
            2 * k + 1
        )));
    }
    if k == 0 {
        return arc_certify(t, 0, vec![], "size dispatch driver");
    }
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut fell_back = false;
    let mut sets = driver_sets(t, k, cfg, &mut rng, &mut fell_back)?;
    // The recursion fixes vertices one set at a time, so deep inputs can
    // pile up more sets than the plain sweep; the sweep family is always
    // the ceiling of what this driver reports.
    if sets.len() > 2 * k {
        sets = make_kstrong_2k(t, k)?.family.sets;
        fell_back = true;
    }
    let provenance = if fell_back {
        "size dispatch driver (with sweep fallback)"
    } else {
        "size dispatch driver"
    };
    arc_certify(t, k, sets, provenance)
}

/// A repeatable Monte-Carlo experiment over F2.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case", tag = "kind")]
pub enum Experiment {
    /// Success when A w = v for a fixed full-rank q x q' bit matrix A, a
    /// fixed target v, and w drawn uniformly from all of F2^q'.
    MatrixImage { q: usize, q_prime: usize },
    /// Success when a uniform nonzero w has prescribed dot products with two
    /// fixed distinct nonzero vectors.
    PairProducts { t: usize, x: bool, y: bool },
}

/// A Monte-Carlo rate with an exact binomial confidence interval.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RateEstimate {
    pub trials: u64,
    pub successes: u64,
    pub rate: f64,
    pub ci_low: f64,
    pub ci_high: f64,
    pub confidence: f64,
}

fn parity(x: u64) -> bool {
    x.count_ones() % 2 == 1
}

/// Runs the experiment with one derived stream per trial, so the outcome is
/// independent of evaluation order.
pub fn estimate_success_probability(
    experiment: &Experiment,
    trials: u64,
    seed: u64,
) -> Result<RateEstimate, Error> {
    if trials == 0 {
        return Err(Error::Invalid("need at least one trial".into()));
    }
    enum Prepared {
        Always,
        Matrix {
            rows: Vec<u64>,
            v: u64,
            mask: u64,
        },
        Pair {
            u: u64,
            w: u64,
            mask: u64,
            x: bool,
            y: bool,
        },
    }
    let mut setup = ChaCha8Rng::seed_from_u64(seed);
    setup.set_stream(0);
    let prepared = match *experiment {
        Experiment::MatrixImage { q, q_prime } => {
            if q > q_prime || q_prime > 64 {
                return Err(Error::Invalid(format!(
                    "matrix shape needs q <= q' <= 64, got {q} x {q_prime}"
                )));
            }
            if q == 0 {
                Prepared::Always
            } else {
                let mask = bit_mask(q_prime);
                let rows = loop {
                    let rows: Vec<u64> = (0..q).map(|_| setup.gen::<u64>() & mask).collect();
                    let as_wide: Vec<u128> = rows.iter().map(|&r| u128::from(r)).collect();
                    if rank_f2(&as_wide) == q {
                        break rows;
                    }
                };
                let v = setup.gen::<u64>() & bit_mask(q);
                Prepared::Matrix { rows, v, mask }
            }
        }
        Experiment::PairProducts { t, x, y } => {
            if !(2..=64).contains(&t) {
                return Err(Error::Invalid(format!(
                    "pair products need 2 <= t <= 64, got {t}"
                )));
            }
            Prepared::Pair {
                u: 0b01,
                w: 0b10,
                mask: bit_mask(t),
                x,
                y,
            }
        }
    };
    let mut successes = 0u64;
    for trial in 0..trials {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(trial + 1);
        let hit = match &prepared {
            Prepared::Always => true,
            Prepared::Matrix { rows, v, mask } => {
                let w = rng.gen::<u64>() & mask;
                let image = rows
                    .iter()
                    .enumerate()
                    .fold(0u64, |acc, (i, &r)| acc | (u64::from(parity(r & w)) << i));
                image == *v
            }
            Prepared::Pair { u, w, mask, x, y } => {
                let draw = loop {
                    let d = rng.gen::<u64>() & mask;
                    if d != 0 {
                        break d;
                    }
                };
                parity(draw & u) == *x && parity(draw & w) == *y
            }
        };
        if hit {
            successes += 1;
        }
    }
    let confidence = 0.95;
    let (ci_low, ci_high) = clopper_pearson(successes, trials, confidence);
    Ok(RateEstimate {
        trials,
        successes,
        rate: successes as f64 / trials as f64,
        ci_low,
        ci_high,
        confidence,
    })
}

/// P[X >= s] for X ~ Bin(n, p), summed stably through an online log-sum-exp.
fn binom_tail_ge(n: u64, s: u64, p: f64) -> f64 {
    if s == 0 {
        return 1.0;
    }
    let p = p.clamp(1e-300, 1.0 - 1e-16);
    let (lp, lq) = (p.ln(), (1.0 - p).ln());
    // start at j = s with ln C(n, s)
    let mut ln_c = 0.0;
    for i in 1..=s {
        ln_c += ((n - s + i) as f64).ln() - (i as f64).ln();
    }
    let mut max_term = f64::NEG_INFINITY;
    let mut sum = 0.0;
    let mut term = ln_c + s as f64 * lp + (n - s) as f64 * lq;
    for j in s..=n {
        if term > max_term {
            sum = sum * (max_term - term).exp() + 1.0;
            max_term = term;
        } else {
            sum += (term - max_term).exp();
        }
        if j < n {
            term += ((n - j) as f64).ln() - ((j + 1) as f64).ln() + lp - lq;
        }
    }
    (max_term + sum.ln()).exp().min(1.0)
}

/// Exact binomial confidence interval by bisection on the tail probability.
fn clopper_pearson(successes: u64, trials: u64, confidence: f64) -> (f64, f64) {
    let alpha = 1.0 - confidence;
    let low = if successes == 0 {
        0.0
    } else {
        let (mut lo, mut hi) = (0.0f64, 1.0f64);
        for _ in 0..80 {
            let mid = 0.5 * (lo + hi);
            if binom_tail_ge(trials, successes, mid) < alpha / 2.0 {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        0.5 * (lo + hi)
    };
    let high = if successes == trials {
        1.0
    } else {
        let (mut lo, mut hi) = (0.0f64, 1.0f64);
        for _ in 0..80 {
            let mid = 0.5 * (lo + hi);
            // P[X <= s] = 1 - P[X >= s+1]
            if 1.0 - binom_tail_ge(trials, successes + 1, mid) > alpha / 2.0 {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        0.5 * (lo + hi)
    };
    (low, high)
}
