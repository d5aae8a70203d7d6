//! Dense row-vector linear algebra over the small fields of [`super::gf`].
//!
//! Vectors are rows, matrices are lists of rows, and a linear map acts by
//! `v -> v * M`. Subspaces are kept in reduced row echelon form, which is
//! unique per subspace: two `Subspace` values are equal iff their matrices
//! are identical, so echelon matrices double as canonical names.

use crate::budget::Budget;
use crate::error::Result;

use super::gf::FieldSpec;

/// A subspace of F_q^ambient in reduced row echelon form (no zero rows,
/// pivot columns strictly increasing, pivots 1 with zeros elsewhere in
/// their columns).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subspace {
    ambient: usize,
    rows: Vec<Vec<u8>>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Subspace {
            ambient,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn full(ambient: usize) -> Self {
        let rows: Vec<Vec<u8>> = (0..ambient)
            .map(|i| {
                let mut r = vec![0u8; ambient];
                r[i] = 1;
                r
            })
            .collect();
        Subspace {
            ambient,
            rows,
            pivots: (0..ambient).collect(),
        }
    }

    /// Row space of arbitrary spanning rows.
    pub fn from_rows(ambient: usize, mut rows: Vec<Vec<u8>>, f: &FieldSpec) -> Self {
        debug_assert!(rows.iter().all(|r| r.len() == ambient));
        let pivots = rref(&mut rows, f);
        Subspace { ambient, rows, pivots }
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<u8>] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Reduces `v` modulo the subspace; the result is zero iff `v` lies in
    /// the subspace, and its nonzero coordinates sit at non-pivot columns.
    pub fn reduce(&self, mut v: Vec<u8>, f: &FieldSpec) -> Vec<u8> {
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            let c = v[p];
            if c != 0 {
                for (x, y) in v.iter_mut().zip(row) {
                    *x = f.sub(*x, f.mul(c, *y));
                }
            }
        }
        v
    }

    pub fn contains(&self, v: &[u8], f: &FieldSpec) -> bool {
        self.reduce(v.to_vec(), f).iter().all(|&x| x == 0)
    }

    /// Coordinates of `v` in the echelon basis; only meaningful when the
    /// subspace contains `v` (the coordinate of row `i` is `v[pivot_i]`).
    pub fn coords(&self, v: &[u8]) -> Vec<u8> {
        self.pivots.iter().map(|&p| v[p]).collect()
    }

    /// Linear combination of the basis rows with the given coordinates.
    pub fn from_coords(&self, coords: &[u8], f: &FieldSpec) -> Vec<u8> {
        debug_assert_eq!(coords.len(), self.dim());
        let mut v = vec![0u8; self.ambient];
        for (c, row) in coords.iter().zip(&self.rows) {
            if *c != 0 {
                for (x, y) in v.iter_mut().zip(row) {
                    *x = f.add(*x, f.mul(*c, *y));
                }
            }
        }
        v
    }

    pub fn sum(&self, other: &Subspace, f: &FieldSpec) -> Subspace {
        let mut rows = self.rows.clone();
        rows.extend(other.rows.iter().cloned());
        Subspace::from_rows(self.ambient, rows, f)
    }
}

/// In-place reduced row echelon form; returns the pivot columns.
pub fn rref(rows: &mut Vec<Vec<u8>>, f: &FieldSpec) -> Vec<usize> {
    let ambient = rows.first().map(Vec::len).unwrap_or(0);
    let mut pivots = Vec::new();
    let mut r = 0usize;
    for col in 0..ambient {
        let Some(sel) = (r..rows.len()).find(|&i| rows[i][col] != 0) else {
            continue;
        };
        rows.swap(r, sel);
        let inv = f.inv(rows[r][col]);
        for x in rows[r].iter_mut() {
            *x = f.mul(*x, inv);
        }
        for i in 0..rows.len() {
            if i != r && rows[i][col] != 0 {
                let c = rows[i][col];
                for j in 0..ambient {
                    let sub = f.mul(c, rows[r][j]);
                    rows[i][j] = f.sub(rows[i][j], sub);
                }
            }
        }
        pivots.push(col);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    rows.truncate(r);
    pivots
}

/// `v * M` where `M` has one row per coordinate of `v`.
pub fn row_times_matrix(v: &[u8], mat: &[Vec<u8>], f: &FieldSpec) -> Vec<u8> {
    let cols = mat.first().map(Vec::len).unwrap_or(0);
    let mut out = vec![0u8; cols];
    for (c, row) in v.iter().zip(mat) {
        if *c != 0 {
            for (o, m) in out.iter_mut().zip(row) {
                *o = f.add(*o, f.mul(*c, *m));
            }
        }
    }
    out
}

/// Image of a subspace under `v -> v * M`.
pub fn image(s: &Subspace, mat: &[Vec<u8>], f: &FieldSpec) -> Subspace {
    let cols = mat.first().map(Vec::len).unwrap_or(0);
    let rows: Vec<Vec<u8>> = s
        .rows()
        .iter()
        .map(|r| row_times_matrix(r, mat, f))
        .collect();
    Subspace::from_rows(cols, rows, f)
}

/// `{ x in F^m : x * M = 0 }` for an `m`-row matrix, via elimination on the
/// augmented matrix `[M | I]`.
pub fn left_kernel(mat: &[Vec<u8>], m: usize, f: &FieldSpec) -> Subspace {
    debug_assert_eq!(mat.len(), m);
    let cols = mat.first().map(Vec::len).unwrap_or(0);
    let mut aug: Vec<Vec<u8>> = (0..m)
        .map(|i| {
            let mut r = mat[i].clone();
            r.extend(std::iter::repeat(0u8).take(m));
            r[cols + i] = 1;
            r
        })
        .collect();
    // Eliminate using only the first `cols` columns for pivots.
    let mut r = 0usize;
    for col in 0..cols {
        let Some(sel) = (r..aug.len()).find(|&i| aug[i][col] != 0) else {
            continue;
        };
        aug.swap(r, sel);
        let inv = f.inv(aug[r][col]);
        for x in aug[r].iter_mut() {
            *x = f.mul(*x, inv);
        }
        for i in 0..aug.len() {
            if i != r && aug[i][col] != 0 {
                let c = aug[i][col];
                for j in 0..cols + m {
                    let sub = f.mul(c, aug[r][j]);
                    aug[i][j] = f.sub(aug[i][j], sub);
                }
            }
        }
        r += 1;
    }
    let kernel_rows: Vec<Vec<u8>> = aug[r..]
        .iter()
        .map(|row| row[cols..].to_vec())
        .collect();
    Subspace::from_rows(m, kernel_rows, f)
}

/// Visits every `k`-dimensional subspace of F_q^m exactly once, in a
/// deterministic order (pivot combinations lexicographic, then free entries
/// in odometer order). Each candidate charges one unit of budget.
pub fn enumerate_subspaces<V>(
    m: usize,
    k: usize,
    f: &FieldSpec,
    budget: &Budget,
    visit: &mut V,
) -> Result<()>
where
    V: FnMut(Subspace) -> Result<()>,
{
    if k > m {
        return Ok(());
    }
    if k == 0 {
        budget.charge(1)?;
        return visit(Subspace::zero(m));
    }
    let q = f.q() as u8;
    // Iterate k-subsets of 0..m as pivot columns, lexicographically.
    let mut pivots: Vec<usize> = (0..k).collect();
    loop {
        let pivot_set: Vec<bool> = {
            let mut s = vec![false; m];
            for &p in &pivots {
                s[p] = true;
            }
            s
        };
        // Free slots: entries right of each pivot, outside pivot columns.
        let mut free: Vec<(usize, usize)> = Vec::new();
        for (i, &p) in pivots.iter().enumerate() {
            for j in (p + 1)..m {
                if !pivot_set[j] {
                    free.push((i, j));
                }
            }
        }
        let mut values = vec![0u8; free.len()];
        loop {
            budget.charge(1)?;
            let mut rows: Vec<Vec<u8>> = vec![vec![0u8; m]; k];
            for (i, &p) in pivots.iter().enumerate() {
                rows[i][p] = 1;
            }
            for (&(i, j), &v) in free.iter().zip(&values) {
                rows[i][j] = v;
            }
            visit(Subspace {
                ambient: m,
                rows,
                pivots: pivots.clone(),
            })?;
            // Advance the odometer.
            let mut pos = 0usize;
            while pos < values.len() {
                values[pos] += 1;
                if values[pos] < q {
                    break;
                }
                values[pos] = 0;
                pos += 1;
            }
            if pos == values.len() {
                break;
            }
        }
        // Next pivot combination.
        let mut i = k;
        loop {
            if i == 0 {
                return Ok(());
            }
            i -= 1;
            if pivots[i] + 1 <= m - (k - i) {
                pivots[i] += 1;
                for j in (i + 1)..k {
                    pivots[j] = pivots[j - 1] + 1;
                }
                break;
            }
        }
    }
}

/// Total number of subspaces of F_q^m over all dimensions, saturating.
/// Used to predict whether a full echelon sweep is affordable.
pub fn total_subspaces(m: usize, q: u32) -> u128 {
    let mut total: u128 = 0;
    for k in 0..=m {
        total = total.saturating_add(gaussian_binomial(m, k, q));
    }
    total
}

/// Gaussian binomial coefficient `[m choose k]_q`, saturating at u128::MAX.
pub fn gaussian_binomial(m: usize, k: usize, q: u32) -> u128 {
    if k > m {
        return 0;
    }
    // prod_{i=0}^{k-1} (q^(m-i) - 1) / (q^(i+1) - 1), computed exactly by
    // alternating multiply/divide to keep intermediate values integral.
    let mut num: u128 = 1;
    let q = q as u128;
    let pow = |e: usize| -> u128 { q.checked_pow(e as u32).unwrap_or(u128::MAX) };
    for i in 0..k {
        num = num.saturating_mul(pow(m - i) - 1);
        num /= pow(i + 1) - 1;
    }
    num
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::budget::{Budget, DEFAULT_BUDGET};

    fn budget() -> Budget {
        Budget::new(DEFAULT_BUDGET, "linalg test")
    }

    #[test]
    fn rref_canonicalizes_spanning_sets() {
        let f = FieldSpec::new(3).unwrap();
        let a = Subspace::from_rows(3, vec![vec![1, 2, 0], vec![0, 1, 1]], &f);
        let b = Subspace::from_rows(3, vec![vec![1, 0, 1], vec![2, 1, 2], vec![1, 2, 0]], &f);
        assert_eq!(a, b);
        assert_eq!(a.dim(), 2);
        assert!(a.contains(&[2, 1, 2], &f));
        assert!(!a.contains(&[0, 0, 1], &f));
    }

    #[test]
    fn coords_roundtrip() {
        let f = FieldSpec::new(5).unwrap();
        let s = Subspace::from_rows(4, vec![vec![1, 0, 2, 3], vec![0, 1, 4, 1]], &f);
        let v = s.from_coords(&[2, 3], &f);
        assert!(s.contains(&v, &f));
        assert_eq!(s.coords(&v), vec![2, 3]);
    }

    #[test]
    fn left_kernel_of_a_nilpotent_shift() {
        let f = FieldSpec::new(2).unwrap();
        // t on basis e0, e1: e0 -> e1 -> 0.
        let t = vec![vec![0, 1], vec![0, 0]];
        let k = left_kernel(&t, 2, &f);
        assert_eq!(k.dim(), 1);
        assert!(k.contains(&[0, 1], &f));
    }

    #[test]
    fn kernel_plus_image_dimensions() {
        let f = FieldSpec::new(4).unwrap();
        let t = vec![
            vec![0, 1, 0, 0],
            vec![0, 0, 0, 0],
            vec![0, 0, 0, 3],
            vec![0, 0, 0, 0],
        ];
        let ker = left_kernel(&t, 4, &f);
        let im = image(&Subspace::full(4), &t, &f);
        assert_eq!(ker.dim() + im.dim(), 4);
    }

    #[test]
    fn subspace_counts_match_gaussian_binomials() {
        for q in [2u32, 3] {
            let f = FieldSpec::new(q).unwrap();
            for m in 0..=4usize {
                for k in 0..=m {
                    let mut count = 0u128;
                    let mut seen = std::collections::BTreeSet::new();
                    enumerate_subspaces(m, k, &f, &budget(), &mut |s| {
                        count += 1;
                        assert_eq!(s.dim(), k);
                        assert!(seen.insert(s), "duplicate subspace");
                        Ok(())
                    })
                    .unwrap();
                    assert_eq!(count, gaussian_binomial(m, k, q), "m={m} k={k} q={q}");
                }
            }
        }
    }

    #[test]
    fn gaussian_binomial_values() {
        assert_eq!(gaussian_binomial(2, 1, 2), 3);
        assert_eq!(gaussian_binomial(4, 2, 2), 35);
        assert_eq!(gaussian_binomial(6, 3, 3), 33880);
        assert_eq!(total_subspaces(2, 2), 1 + 3 + 1);
    }
}
