//! Representation ring of the dual group GL_n: Littlewood-Richardson
//! coefficients, iterated tensor multiplicities, weight sets, and witness
//! searches for the minuscule and PRV criteria.
//!
//! Tensor multiplicities are the quantity every cross-check in the crate
//! leans on, so they are computed twice by design: the LR rule here is the
//! primary route, and [`schur`] multiplies Schur polynomials outright as an
//! independent oracle. The two must agree on every sweep instance.

pub mod schur;

use std::collections::{BTreeSet, HashMap};
use std::sync::{OnceLock, RwLock};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::weights::{
    dominance_leq, dominance_leq_trimmed, normalize_instance, partitions_of, DominantCoweight,
};

pub use schur::schur_product_oracle;

// ---------------------------------------------------------------------------
// Memoization
//
// LR coefficients and tensor multiplicities are pure functions of trimmed
// partitions, so a process-wide table guarded for exclusive writes is safe;
// results are deterministic regardless of scheduling.
// ---------------------------------------------------------------------------

type LrKey = (Vec<i64>, Vec<i64>, Vec<i64>);
type TmKey = (Vec<Vec<i64>>, Vec<i64>);

fn lr_memo() -> &'static RwLock<HashMap<LrKey, u64>> {
    static MEMO: OnceLock<RwLock<HashMap<LrKey, u64>>> = OnceLock::new();
    MEMO.get_or_init(|| RwLock::new(HashMap::new()))
}

fn tm_memo() -> &'static RwLock<HashMap<TmKey, u64>> {
    static MEMO: OnceLock<RwLock<HashMap<TmKey, u64>>> = OnceLock::new();
    MEMO.get_or_init(|| RwLock::new(HashMap::new()))
}

// ---------------------------------------------------------------------------
// Littlewood-Richardson rule
// ---------------------------------------------------------------------------

/// Multiplicity of `V_lam` in `V_mu ⊗ V_nu`: the number of LR skew tableaux
/// of shape `lam/mu` and content `nu`. Zero when the sums mismatch or
/// `lam/mu` is not a valid skew shape.
pub fn lr_coefficient(
    mu: &DominantCoweight,
    nu: &DominantCoweight,
    lam: &DominantCoweight,
) -> Result<u64> {
    for c in [mu, nu, lam] {
        if !c.is_partition() {
            return Err(Error::invalid(format!(
                "lr_coefficient needs partitions, got {c}"
            )));
        }
    }
    if mu.rank() != lam.rank() || nu.rank() != lam.rank() {
        return Err(Error::invalid("lr_coefficient: rank mismatch"));
    }
    Ok(lr_trimmed(&mu.trimmed()?, &nu.trimmed()?, &lam.trimmed()?))
}

/// LR coefficient on trimmed partitions, memoized.
pub(crate) fn lr_trimmed(mu: &[i64], nu: &[i64], lam: &[i64]) -> u64 {
    let musum: i64 = mu.iter().sum();
    let nusum: i64 = nu.iter().sum();
    let lamsum: i64 = lam.iter().sum();
    if musum + nusum != lamsum {
        return 0;
    }
    if mu.len() > lam.len() || mu.iter().zip(lam).any(|(m, l)| m > l) {
        return 0;
    }
    let key = (mu.to_vec(), nu.to_vec(), lam.to_vec());
    if let Some(&v) = lr_memo().read().unwrap().get(&key) {
        return v;
    }
    let v = count_lr_tableaux(lam, mu, nu);
    lr_memo().write().unwrap().insert(key, v);
    v
}

/// Counts skew semistandard tableaux of shape `lam/mu` and content `nu`
/// whose reverse reading word (rows right-to-left, top row first) is a
/// lattice word.
fn count_lr_tableaux(lam: &[i64], mu: &[i64], nu: &[i64]) -> u64 {
    // Cells in reverse reading order.
    let mut cells: Vec<(usize, usize)> = Vec::new();
    for (i, &lam_i) in lam.iter().enumerate() {
        let mu_i = mu.get(i).copied().unwrap_or(0);
        for j in (mu_i..lam_i).rev() {
            cells.push((i, j as usize));
        }
    }
    if cells.is_empty() {
        return if nu.is_empty() { 1 } else { 0 };
    }
    let values = nu.len();
    let mut grid: Vec<Vec<usize>> =
        lam.iter().map(|&l| vec![0usize; l as usize]).collect();
    let mut counts = vec![0i64; values + 1];

    fn rec(
        pos: usize,
        cells: &[(usize, usize)],
        lam: &[i64],
        mu: &[i64],
        nu: &[i64],
        grid: &mut Vec<Vec<usize>>,
        counts: &mut Vec<i64>,
    ) -> u64 {
        if pos == cells.len() {
            return 1; // content bounds plus total size force counts == nu
        }
        let (i, j) = cells[pos];
        let mut total = 0u64;
        for v in 1..=nu.len() {
            if counts[v] >= nu[v - 1] {
                continue; // content exhausted
            }
            if v >= 2 && counts[v] >= counts[v - 1] {
                continue; // lattice word prefix condition
            }
            // Row entries weakly increase left to right; (i, j+1) was
            // already filled because rows are scanned right to left.
            if (j as i64) + 1 < lam[i] && v > grid[i][j + 1] {
                continue;
            }
            // Column entries strictly increase; the cell above is only
            // constrained when it lies in the skew shape.
            if i > 0 && (j as i64) >= mu.get(i - 1).copied().unwrap_or(0) {
                if v <= grid[i - 1][j] {
                    continue;
                }
            }
            grid[i][j] = v;
            counts[v] += 1;
            total += rec(pos + 1, cells, lam, mu, nu, grid, counts);
            counts[v] -= 1;
            grid[i][j] = 0;
        }
        total
    }

    rec(0, &cells, lam, mu, nu, &mut grid, &mut counts)
}

// ---------------------------------------------------------------------------
// Iterated tensor multiplicities
// ---------------------------------------------------------------------------

/// `dim V^lam_{mu_bullet}`: multiplicity of `V_lam` in the tensor product of
/// the `V_mu_i`, by peeling off the last factor with the LR rule. Inputs are
/// normalized by central shifts first, so arbitrary dominant coweights are
/// accepted. `r = 0` gives 1 exactly for `lam = 0`.
pub fn tensor_multiplicity(mu_list: &[DominantCoweight], lam: &DominantCoweight) -> Result<u64> {
    let (mus, lam) = normalize_instance(mu_list, lam)?;
    if !lam.is_partition() {
        return Ok(0); // cannot be dominated by |mu_bullet|
    }
    let n = lam.rank();
    let mut trimmed: Vec<Vec<i64>> = Vec::with_capacity(mus.len());
    for m in &mus {
        trimmed.push(m.trimmed()?);
    }
    Ok(tensor_multiplicity_trimmed(&trimmed, &lam.trimmed()?, n))
}

fn tensor_multiplicity_trimmed(mus: &[Vec<i64>], lam: &[i64], n: usize) -> u64 {
    let total: i64 = mus.iter().map(|m| m.iter().sum::<i64>()).sum();
    if total != lam.iter().sum::<i64>() {
        return 0;
    }
    match mus.len() {
        0 => return u64::from(lam.is_empty()),
        1 => return u64::from(mus[0] == lam),
        _ => {}
    }
    let key = (mus.to_vec(), lam.to_vec());
    if let Some(&v) = tm_memo().read().unwrap().get(&key) {
        return v;
    }

    let (prefix, last) = mus.split_at(mus.len() - 1);
    let last = &last[0];
    let prefix_total: i64 = prefix.iter().map(|m| m.iter().sum::<i64>()).sum();
    // Componentwise sum of the prefix bounds the intermediate shapes.
    let mut bound = vec![0i64; prefix.iter().map(Vec::len).max().unwrap_or(0)];
    for m in prefix {
        for (acc, p) in bound.iter_mut().zip(m) {
            *acc += p;
        }
    }
    let mut total_mult = 0u64;
    for nu in partitions_of(prefix_total, n) {
        if !dominance_leq_trimmed(&nu, &bound) {
            continue;
        }
        let c = lr_trimmed(&nu, last, lam);
        if c == 0 {
            continue;
        }
        let inner = tensor_multiplicity_trimmed(prefix, &nu, n);
        total_mult += c * inner;
    }
    tm_memo().write().unwrap().insert(key, total_mult);
    total_mult
}

/// `dim V^lam_{mu_bullet} > 0`.
pub fn rep_nonvanishing(mu_list: &[DominantCoweight], lam: &DominantCoweight) -> Result<bool> {
    Ok(tensor_multiplicity(mu_list, lam)? > 0)
}

// ---------------------------------------------------------------------------
// Weight sets
// ---------------------------------------------------------------------------

/// The set of weights of `V_mu`: all rearrangements of the dominant
/// coweights `nu <= mu` with equal sum. Closed under coordinate permutation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WeightSet {
    weights: BTreeSet<Vec<i64>>,
}

impl WeightSet {
    pub fn contains(&self, v: &[i64]) -> bool {
        self.weights.contains(v)
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &Vec<i64>> {
        self.weights.iter()
    }
}

/// Weights of the irreducible representation with highest weight `mu`.
pub fn weight_set(mu: &DominantCoweight) -> Result<WeightSet> {
    let shift = -mu.parts()[mu.rank() - 1].min(0);
    let shifted = mu.shift(shift);
    let mut weights = BTreeSet::new();
    for nu in crate::weights::dominated_partitions(&shifted)? {
        for perm in unique_permutations(nu.parts()) {
            weights.insert(perm.iter().map(|p| p - shift).collect());
        }
    }
    Ok(WeightSet { weights })
}

/// All distinct rearrangements of `v`, ascending lexicographic.
pub(crate) fn unique_permutations(v: &[i64]) -> Vec<Vec<i64>> {
    let mut cur = v.to_vec();
    cur.sort_unstable();
    let mut out = vec![cur.clone()];
    while next_permutation(&mut cur) {
        out.push(cur.clone());
    }
    out
}

fn next_permutation(v: &mut [i64]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// Checks that the weights of `V_{|mu_bullet|}` coincide with the
/// elementwise sumset of the factors' weight sets.
pub fn sumset_lemma_check(mu_list: &[DominantCoweight]) -> Result<bool> {
    let Some(first) = mu_list.first() else {
        return Ok(true); // empty product: both sides are {0}
    };
    let n = first.rank();
    let total = DominantCoweight::sum_of(mu_list, n)?;
    let lhs = weight_set(&total)?;

    let mut sums: BTreeSet<Vec<i64>> = BTreeSet::new();
    sums.insert(vec![0; n]);
    for mu in mu_list {
        let ws = weight_set(mu)?;
        let mut next = BTreeSet::new();
        for s in &sums {
            for w in ws.iter() {
                next.insert(s.iter().zip(w).map(|(a, b)| a + b).collect());
            }
        }
        sums = next;
    }
    Ok(lhs.weights == sums)
}

// ---------------------------------------------------------------------------
// Witness searches
// ---------------------------------------------------------------------------

/// A certificate that `lam = w_1 mu'_1 + ... + w_r mu'_r` with dominant
/// `mu'_i <= mu_i`: each summand is a rearrangement of the matching
/// `mu'_i`, and the representation-ring property holds for `mu'_bullet`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PrvWitness {
    pub mu_prime: Vec<DominantCoweight>,
    pub summands: Vec<Vec<i64>>,
}

/// For minuscule factors, finds rearrangements `nu_i` of the `mu_i` with
/// `sum nu_i = lam`. Existence is guaranteed whenever `lam <= |mu_bullet|`,
/// so `None` for such instances is a test failure upstream.
///
/// Candidates are scanned in descending lexicographic order at each depth,
/// making the returned witness deterministic.
pub fn minuscule_witness(
    mu_list: &[DominantCoweight],
    lam: &DominantCoweight,
) -> Result<Option<Vec<Vec<i64>>>> {
    for mu in mu_list {
        if !crate::weights::is_minuscule(mu) {
            return Err(Error::invalid(format!(
                "minuscule_witness requires minuscule factors, got {mu}"
            )));
        }
    }
    let candidates: Vec<Vec<Vec<i64>>> = mu_list
        .iter()
        .map(|mu| {
            let mut perms = unique_permutations(mu.parts());
            perms.reverse(); // descending lexicographic
            perms
        })
        .collect();
    Ok(search_summands(&candidates, mu_list, lam))
}

/// Searches for weights `nu_i` of `V_{mu_i}` summing to `lam`; on success
/// the witness is verified against the tensor multiplicity of the sorted
/// summands before being returned.
pub fn prv_witness(
    mu_list: &[DominantCoweight],
    lam: &DominantCoweight,
) -> Result<Option<PrvWitness>> {
    let candidates: Vec<Vec<Vec<i64>>> = mu_list
        .iter()
        .map(|mu| {
            weight_set(mu).map(|ws| {
                let mut v: Vec<Vec<i64>> = ws.iter().cloned().collect();
                v.reverse(); // descending lexicographic
                v
            })
        })
        .collect::<Result<_>>()?;
    let Some(summands) = search_summands(&candidates, mu_list, lam) else {
        return Ok(None);
    };
    let mu_prime: Vec<DominantCoweight> = summands
        .iter()
        .map(|s| DominantCoweight::sort_descending(s.clone()))
        .collect::<Result<_>>()?;
    for (mp, mu) in mu_prime.iter().zip(mu_list) {
        if !dominance_leq(mp, mu)? {
            return Err(Error::SelfCheck(format!(
                "witness part {mp} is not dominated by {mu}"
            )));
        }
    }
    if tensor_multiplicity(&mu_prime, lam)? == 0 {
        return Err(Error::SelfCheck(format!(
            "witness mu' for lam={lam} has zero tensor multiplicity"
        )));
    }
    Ok(Some(PrvWitness { mu_prime, summands }))
}

/// Depth-first search for one summand per factor with total `lam`, pruning
/// by the coordinatewise min/max the remaining factors can still supply.
fn search_summands(
    candidates: &[Vec<Vec<i64>>],
    mu_list: &[DominantCoweight],
    lam: &DominantCoweight,
) -> Option<Vec<Vec<i64>>> {
    let n = lam.rank();
    let r = mu_list.len();
    // suffix_min[k], suffix_max[k]: coordinate bounds over factors k..r.
    let mut suffix_min = vec![0i64; r + 1];
    let mut suffix_max = vec![0i64; r + 1];
    for k in (0..r).rev() {
        let parts = mu_list[k].parts();
        suffix_min[k] = suffix_min[k + 1] + parts[parts.len() - 1];
        suffix_max[k] = suffix_max[k + 1] + parts[0];
    }

    let mut chosen: Vec<Vec<i64>> = Vec::with_capacity(r);
    let mut partial = vec![0i64; n];

    fn rec(
        k: usize,
        candidates: &[Vec<Vec<i64>>],
        lam: &[i64],
        suffix_min: &[i64],
        suffix_max: &[i64],
        partial: &mut Vec<i64>,
        chosen: &mut Vec<Vec<i64>>,
    ) -> bool {
        let r = candidates.len();
        if k == r {
            return partial.iter().zip(lam).all(|(a, b)| a == b);
        }
        for cand in &candidates[k] {
            let feasible = (0..partial.len()).all(|j| {
                let need = lam[j] - partial[j] - cand[j];
                suffix_min[k + 1] <= need && need <= suffix_max[k + 1]
            });
            if !feasible {
                continue;
            }
            for (p, c) in partial.iter_mut().zip(cand) {
                *p += c;
            }
            chosen.push(cand.clone());
            if rec(k + 1, candidates, lam, suffix_min, suffix_max, partial, chosen) {
                return true;
            }
            chosen.pop();
            for (p, c) in partial.iter_mut().zip(cand) {
                *p -= c;
            }
        }
        false
    }

    if rec(
        0,
        candidates,
        lam.parts(),
        &suffix_min,
        &suffix_max,
        &mut partial,
        &mut chosen,
    ) {
        Some(chosen)
    } else {
        None
    }
}

#[cfg(test)]
mod tests;
