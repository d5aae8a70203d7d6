//! Root-datum combinatorics for GL_n: dominant coweights, dominance order,
//! the rho pairing, minusculity, and a few classical partition statistics.
//!
//! A dominant coweight is a weakly decreasing integer vector of length `n`.
//! It simultaneously indexes K-orbits on the affine Grassmannian, highest
//! weight representations of the dual group, and basis elements of the
//! spherical Hecke algebra, so almost every module in the crate starts here.

use std::fmt;

use num_bigint::BigInt;
use num_rational::Rational64;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

// ---------------------------------------------------------------------------
// DominantCoweight
// ---------------------------------------------------------------------------

/// A weakly decreasing integer vector of length `n` (the rank).
///
/// Entries may be negative; a coweight with all parts `>= 0` is a partition.
/// The canonical normalization ([`normalize_instance`]) shifts instance data
/// by central coweights so that everything becomes a partition before any
/// enumeration runs.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct DominantCoweight {
    parts: Vec<i64>,
}

impl DominantCoweight {
    /// Builds a coweight, rejecting vectors that are not weakly decreasing
    /// or have zero length.
    pub fn new(parts: Vec<i64>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::invalid("coweight must have rank >= 1"));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::invalid(format!(
                "coweight {:?} is not weakly decreasing",
                parts
            )));
        }
        Ok(DominantCoweight { parts })
    }

    /// The zero coweight of rank `n`.
    pub fn zero(n: usize) -> Self {
        DominantCoweight {
            parts: vec![0; n.max(1)],
        }
    }

    /// Sorts an arbitrary integer vector into a dominant coweight.
    pub fn sort_descending(mut v: Vec<i64>) -> Result<Self> {
        v.sort_unstable_by(|a, b| b.cmp(a));
        DominantCoweight::new(v)
    }

    /// Parses the comma-separated wire form, e.g. `"2,1,0"`.
    pub fn parse(s: &str) -> Result<Self> {
        let parts = s
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<i64>()
                    .map_err(|_| Error::invalid(format!("bad coweight entry {p:?} in {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        DominantCoweight::new(parts)
    }

    pub fn parts(&self) -> &[i64] {
        &self.parts
    }

    pub fn rank(&self) -> usize {
        self.parts.len()
    }

    pub fn sum(&self) -> i64 {
        self.parts.iter().sum()
    }

    pub fn is_partition(&self) -> bool {
        *self.parts.last().unwrap() >= 0
    }

    pub fn is_zero(&self) -> bool {
        self.parts.iter().all(|&p| p == 0)
    }

    /// Parts with trailing zeros removed; the rank-free shape of a partition.
    /// Errors on negative parts since the trimmed form makes no sense there.
    pub fn trimmed(&self) -> Result<Vec<i64>> {
        if !self.is_partition() {
            return Err(Error::invalid(format!(
                "cannot trim non-partition coweight {self}"
            )));
        }
        let mut v = self.parts.clone();
        while v.last() == Some(&0) {
            v.pop();
        }
        Ok(v)
    }

    /// Re-embeds a trimmed partition at rank `n`.
    pub fn from_trimmed(trimmed: &[i64], n: usize) -> Result<Self> {
        if trimmed.len() > n {
            return Err(Error::invalid(format!(
                "partition {:?} has more than {} parts",
                trimmed, n
            )));
        }
        let mut parts = trimmed.to_vec();
        parts.resize(n, 0);
        DominantCoweight::new(parts)
    }

    /// Coordinate-wise sum; the `|mu_bullet|` of a tuple of factors.
    pub fn sum_of(list: &[DominantCoweight], n: usize) -> Result<Self> {
        let mut parts = vec![0i64; n];
        for mu in list {
            if mu.rank() != n {
                return Err(Error::invalid(format!(
                    "rank mismatch: expected {n}, got {} in {mu}",
                    mu.rank()
                )));
            }
            for (acc, p) in parts.iter_mut().zip(mu.parts()) {
                *acc += p;
            }
        }
        // A sum of weakly decreasing vectors is weakly decreasing.
        DominantCoweight::new(parts)
    }

    /// Adds `c` to every part (a central shift).
    pub fn shift(&self, c: i64) -> Self {
        DominantCoweight {
            parts: self.parts.iter().map(|p| p + c).collect(),
        }
    }
}

impl fmt::Display for DominantCoweight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", s.join(","))
    }
}

// ---------------------------------------------------------------------------
// Dominance order
// ---------------------------------------------------------------------------

/// Dominance order: `a <= b` iff `b - a` is a nonnegative sum of positive
/// coroots. For GL_n that means equal coordinate sums plus the prefix-sum
/// inequalities; coweights with unequal sums are incomparable.
pub fn dominance_leq(a: &DominantCoweight, b: &DominantCoweight) -> Result<bool> {
    if a.rank() != b.rank() {
        return Err(Error::invalid(format!(
            "dominance comparison of ranks {} and {}",
            a.rank(),
            b.rank()
        )));
    }
    Ok(dominance_leq_slices(a.parts(), b.parts()))
}

/// Slice form of [`dominance_leq`]; lengths must already agree.
pub(crate) fn dominance_leq_slices(a: &[i64], b: &[i64]) -> bool {
    debug_assert_eq!(a.len(), b.len());
    let mut pa = 0i64;
    let mut pb = 0i64;
    for i in 0..a.len() {
        pa += a[i];
        pb += b[i];
        if i + 1 < a.len() && pa > pb {
            return false;
        }
    }
    pa == pb
}

/// Dominance for trimmed partitions of possibly different lengths; both are
/// zero-padded to a common length first.
pub fn dominance_leq_trimmed(a: &[i64], b: &[i64]) -> bool {
    let n = a.len().max(b.len());
    let mut pa = 0i64;
    let mut pb = 0i64;
    for i in 0..n {
        pa += a.get(i).copied().unwrap_or(0);
        pb += b.get(i).copied().unwrap_or(0);
        if i + 1 < n && pa > pb {
            return false;
        }
    }
    pa == pb
}

// ---------------------------------------------------------------------------
// rho pairing and friends
// ---------------------------------------------------------------------------

/// Pairing of an integer vector with `rho = ((n-1)/2, (n-3)/2, ..., -(n-1)/2)`,
/// half the sum of the positive roots. Exact rational arithmetic; the
/// denominator is always 1 or 2.
pub fn rho_pairing(v: &[i64]) -> Rational64 {
    let n = v.len() as i64;
    let twice: i64 = v
        .iter()
        .enumerate()
        .map(|(i, &x)| (n + 1 - 2 * (i as i64 + 1)) * x)
        .sum();
    Rational64::new(twice, 2)
}

/// The integer `<rho, b - a>` for equal-sum coweights, where integrality is
/// guaranteed. Errors if the pairing is not an integer.
pub fn rho_degree(a: &DominantCoweight, b: &DominantCoweight) -> Result<i64> {
    if a.rank() != b.rank() {
        return Err(Error::invalid("rho_degree: rank mismatch"));
    }
    let v: Vec<i64> = b
        .parts()
        .iter()
        .zip(a.parts())
        .map(|(x, y)| x - y)
        .collect();
    let r = rho_pairing(&v);
    if !r.denom().is_one() {
        return Err(Error::SelfCheck(format!(
            "rho pairing {r} is not integral for difference {v:?}"
        )));
    }
    Ok(*r.numer())
}

/// True iff all root pairings with `mu` lie in {-1, 0, 1}; for GL_n this
/// means the parts take at most two adjacent values.
pub fn is_minuscule(mu: &DominantCoweight) -> bool {
    let parts = mu.parts();
    parts[0] - parts[parts.len() - 1] <= 1
}

/// The classical statistic `n(lambda) = sum (i-1) lambda_i` on partitions.
pub fn n_stat(lam: &DominantCoweight) -> Result<i64> {
    if !lam.is_partition() {
        return Err(Error::invalid(format!("n_stat needs a partition, got {lam}")));
    }
    Ok(lam
        .parts()
        .iter()
        .enumerate()
        .map(|(i, &p)| i as i64 * p)
        .sum())
}

/// Dimension of the irreducible GL_n representation with highest weight
/// `lam`: the product over `i < j` of `(lam_i - lam_j + j - i) / (j - i)`,
/// evaluated exactly.
pub fn weyl_dimension(lam: &DominantCoweight) -> BigInt {
    let parts = lam.parts();
    let n = parts.len();
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..n {
        for j in (i + 1)..n {
            num *= BigInt::from(parts[i] - parts[j] + (j - i) as i64);
            den *= BigInt::from((j - i) as i64);
        }
    }
    debug_assert!((&num % &den).is_zero(), "Weyl dimension must divide exactly");
    num / den
}

// ---------------------------------------------------------------------------
// Canonical normalization
// ---------------------------------------------------------------------------

/// Shifts an instance `(mu_bullet, lambda)` by central coweights so every
/// factor becomes a partition: `mu_i += c_i * (1,...,1)` with
/// `c_i = -min(mu_i)`, and `lambda += (sum c_i) * (1,...,1)`.
///
/// Translation elements are invertible in the Hecke algebra and tensoring by
/// the determinant character is invertible, so all structure constants and
/// multiplicities are unchanged; this is asserted as a tested invariant
/// rather than assumed silently.
///
/// The shifted `lambda` need not be a partition; when it is not, it cannot
/// be dominated by `|mu_bullet|` and every count for the instance is zero.
pub fn normalize_instance(
    mu_list: &[DominantCoweight],
    lam: &DominantCoweight,
) -> Result<(Vec<DominantCoweight>, DominantCoweight)> {
    let n = lam.rank();
    let mut total_shift = 0i64;
    let mut mus = Vec::with_capacity(mu_list.len());
    for mu in mu_list {
        if mu.rank() != n {
            return Err(Error::invalid(format!(
                "rank mismatch: lambda has rank {n}, factor {mu} has rank {}",
                mu.rank()
            )));
        }
        let c = -mu.parts()[mu.rank() - 1].min(0);
        total_shift += c;
        mus.push(mu.shift(c));
    }
    Ok((mus, lam.shift(total_shift)))
}

// ---------------------------------------------------------------------------
// Partition enumeration
// ---------------------------------------------------------------------------

/// All partitions of `total` with at most `max_parts` parts, each part at
/// most `max_part`, in descending lexicographic order.
pub fn partitions_bounded(total: i64, max_parts: usize, max_part: i64) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    if total < 0 {
        return out;
    }
    let mut cur: Vec<i64> = Vec::new();
    fn rec(remaining: i64, max_next: i64, slots: usize, cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if remaining == 0 {
            out.push(cur.clone());
            return;
        }
        if slots == 0 || max_next <= 0 {
            return;
        }
        let hi = max_next.min(remaining);
        for part in (1..=hi).rev() {
            // Feasibility: the remaining slots must be able to absorb the rest.
            if part * slots as i64 >= remaining {
                cur.push(part);
                rec(remaining - part, part, slots - 1, cur, out);
                cur.pop();
            }
        }
    }
    rec(total, max_part, max_parts, &mut cur, &mut out);
    out
}

/// All partitions of `total` with at most `max_parts` parts.
pub fn partitions_of(total: i64, max_parts: usize) -> Vec<Vec<i64>> {
    partitions_bounded(total, max_parts, total)
}

/// All rank-`n` partitions `nu` with `|nu| = |bound|` and `nu <= bound` in
/// dominance (`bound` must be a partition). Includes `bound` itself.
pub fn dominated_partitions(bound: &DominantCoweight) -> Result<Vec<DominantCoweight>> {
    if !bound.is_partition() {
        return Err(Error::invalid(format!(
            "dominated_partitions needs a partition, got {bound}"
        )));
    }
    let n = bound.rank();
    let mut out = Vec::new();
    for p in partitions_of(bound.sum(), n) {
        let cand = DominantCoweight::from_trimmed(&p, n)?;
        if dominance_leq(&cand, bound)? {
            out.push(cand);
        }
    }
    Ok(out)
}

/// Conjugate (transpose) of a trimmed partition.
pub fn conjugate_partition(parts: &[i64]) -> Vec<i64> {
    if parts.is_empty() {
        return Vec::new();
    }
    let max = parts[0];
    (1..=max)
        .map(|j| parts.iter().filter(|&&p| p >= j).count() as i64)
        .collect()
}
