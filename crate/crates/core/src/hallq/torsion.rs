//! Finite torsion modules over F_q[[t]] and exhaustive enumeration of their
//! t-stable subspaces.
//!
//! `M_lam = ⊕_i O/t^(lam_i)` is modeled as F_q^d (d = |lam|) together with
//! the nilpotent matrix of multiplication by t; submodules are t-stable
//! subspaces in canonical echelon form. Enumeration has two interchangeable
//! strategies:
//!
//! * an echelon sweep over *all* subspaces with a t-stability filter, used
//!   when the predicted subspace count is small;
//! * a recursion along the socle filtration that only ever enumerates
//!   subspaces of quotients with at most `parts(lam)` generators, used when
//!   the sweep would be too large.
//!
//! Every submodule `N` corresponds to exactly one pair (image of `N` in
//! `M/soc M`, complement data in `P/tP` where `P` is the preimage), which is
//! what the recursion walks. Both strategies produce identical sorted
//! output, and tests hold them against each other.

use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::weights::conjugate_partition;

use super::gf::FieldSpec;
use super::linalg::{
    enumerate_subspaces, image, left_kernel, row_times_matrix, total_subspaces, Subspace,
};

/// Above this predicted subspace count the echelon sweep hands over to the
/// socle recursion.
const ECHELON_SWEEP_CUTOFF: u128 = 20_000;

// ---------------------------------------------------------------------------
// Nilpotent modules in abstract coordinates
// ---------------------------------------------------------------------------

/// F_q^dim with a nilpotent operator acting by `v -> v * t`; the abstract
/// coordinate form shared by ambient modules, submodules and quotients.
#[derive(Debug, Clone)]
pub struct Nilmodule {
    dim: usize,
    t: Vec<Vec<u8>>,
}

impl Nilmodule {
    /// Wraps an operator matrix, verifying nilpotency.
    pub fn new(t: Vec<Vec<u8>>, f: &FieldSpec) -> Result<Self> {
        let dim = t.len();
        if t.iter().any(|r| r.len() != dim) {
            return Err(Error::invalid("operator matrix must be square"));
        }
        let m = Nilmodule { dim, t };
        let mut s = Subspace::full(dim);
        for _ in 0..=dim {
            if s.dim() == 0 {
                return Ok(m);
            }
            s = image(&s, &m.t, f);
        }
        Err(Error::invalid("operator is not nilpotent"))
    }

    pub(crate) fn new_unchecked(t: Vec<Vec<u8>>) -> Self {
        Nilmodule { dim: t.len(), t }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn operator(&self) -> &[Vec<u8>] {
        &self.t
    }

    /// Elementary-divisor type: the partition `nu` with
    /// `nu'_j = dim(t^(j-1) M / t^j M)`, read off from ranks of powers.
    pub fn type_partition(&self, f: &FieldSpec) -> Vec<i64> {
        let mut dims = vec![self.dim];
        let mut cur = Subspace::full(self.dim);
        while cur.dim() > 0 {
            cur = image(&cur, &self.t, f);
            dims.push(cur.dim());
        }
        let conj: Vec<i64> = dims
            .windows(2)
            .map(|w| (w[0] - w[1]) as i64)
            .collect();
        conjugate_partition(&conj)
    }

    /// The module structure induced on a t-stable subspace, in the
    /// subspace's echelon coordinates.
    pub fn restrict(&self, sub: &Subspace, f: &FieldSpec) -> Nilmodule {
        let t = sub
            .rows()
            .iter()
            .map(|row| {
                let img = row_times_matrix(row, &self.t, f);
                debug_assert!(sub.contains(&img, f), "subspace is not t-stable");
                sub.coords(&img)
            })
            .collect();
        Nilmodule {
            dim: sub.dim(),
            t,
        }
    }

    /// Type of the quotient by a t-stable subspace `w`:
    /// `nu'_j = dim(t^(j-1) M + W) - dim(t^j M + W)`.
    pub fn quotient_type(&self, w: &Subspace, f: &FieldSpec) -> Vec<i64> {
        let mut dims = vec![self.dim];
        let mut power = Subspace::full(self.dim);
        loop {
            power = image(&power, &self.t, f);
            let combined = power.sum(w, f);
            dims.push(combined.dim());
            if combined.dim() == w.dim() {
                break;
            }
        }
        let conj: Vec<i64> = dims
            .windows(2)
            .map(|w| (w[0] - w[1]) as i64)
            .filter(|&d| d > 0)
            .collect();
        conjugate_partition(&conj)
    }

    /// Quotient by a t-stable subspace, with the data needed to move
    /// vectors both ways.
    fn quotient(&self, sub: &Subspace, f: &FieldSpec) -> QuotientModule {
        let nonpivot: Vec<usize> =
            (0..self.dim).filter(|c| !sub.pivots().contains(c)).collect();
        let project = |v: Vec<u8>| -> Vec<u8> {
            let red = sub.reduce(v, f);
            nonpivot.iter().map(|&c| red[c]).collect()
        };
        let t = nonpivot
            .iter()
            .map(|&c| {
                let mut e = vec![0u8; self.dim];
                e[c] = 1;
                project(row_times_matrix(&e, &self.t, f))
            })
            .collect();
        QuotientModule {
            module: Nilmodule {
                dim: nonpivot.len(),
                t,
            },
            nonpivot,
            ambient_dim: self.dim,
        }
    }
}

/// A quotient `F^m / W` in explicit coordinates (the non-pivot columns of
/// `W`), with projection and lifting helpers.
struct QuotientModule {
    module: Nilmodule,
    nonpivot: Vec<usize>,
    ambient_dim: usize,
}

impl QuotientModule {
    fn project(&self, v: Vec<u8>, sub: &Subspace, f: &FieldSpec) -> Vec<u8> {
        let red = sub.reduce(v, f);
        self.nonpivot.iter().map(|&c| red[c]).collect()
    }

    /// The canonical lift: non-pivot coordinates as given, zeros at pivots.
    fn lift(&self, v: &[u8]) -> Vec<u8> {
        let mut out = vec![0u8; self.ambient_dim];
        for (&c, &x) in self.nonpivot.iter().zip(v) {
            out[c] = x;
        }
        out
    }
}

// ---------------------------------------------------------------------------
// Enumeration of t-stable subspaces
// ---------------------------------------------------------------------------

/// All t-stable subspaces of the module, sorted canonically (dimension,
/// then echelon rows). Picks the strategy by predicted cost.
pub fn enumerate_tstable(m: &Nilmodule, f: &FieldSpec, budget: &Budget) -> Result<Vec<Subspace>> {
    if total_subspaces(m.dim, f.q()) <= ECHELON_SWEEP_CUTOFF {
        enumerate_tstable_echelon(m, f, budget)
    } else {
        enumerate_tstable_socle(m, f, budget)
    }
}

/// Echelon sweep: every subspace of F^dim, filtered by t-stability.
pub fn enumerate_tstable_echelon(
    m: &Nilmodule,
    f: &FieldSpec,
    budget: &Budget,
) -> Result<Vec<Subspace>> {
    let mut out = Vec::new();
    for k in 0..=m.dim {
        enumerate_subspaces(m.dim, k, f, budget, &mut |s| {
            let stable = s
                .rows()
                .iter()
                .all(|row| s.contains(&row_times_matrix(row, &m.t, f), f));
            if stable {
                out.push(s);
            }
            Ok(())
        })?;
    }
    out.sort_unstable_by(|a, b| (a.dim(), a.rows()).cmp(&(b.dim(), b.rows())));
    Ok(out)
}

/// Socle recursion: a t-stable `N` is reconstructed from its image `Nbar`
/// in `M/soc(M)` plus a subspace of `P/tP` covering the socle directions,
/// where `P` is the preimage of `Nbar`. Each `N` appears exactly once.
pub fn enumerate_tstable_socle(
    m: &Nilmodule,
    f: &FieldSpec,
    budget: &Budget,
) -> Result<Vec<Subspace>> {
    if m.dim == 0 {
        budget.charge(1)?;
        return Ok(vec![Subspace::zero(0)]);
    }
    let socle = left_kernel(&m.t, m.dim, f);
    debug_assert!(socle.dim() > 0, "nilpotent operator must have a kernel");
    let quotient = m.quotient(&socle, f);
    let downstairs = enumerate_tstable_socle(&quotient.module, f, budget)?;

    let mut out = Vec::new();
    for nbar in &downstairs {
        // P = preimage of Nbar in F^dim.
        let mut p_rows: Vec<Vec<u8>> =
            nbar.rows().iter().map(|r| quotient.lift(r)).collect();
        p_rows.extend(socle.rows().iter().cloned());
        let p = Subspace::from_rows(m.dim, p_rows, f);
        debug_assert_eq!(p.dim(), nbar.dim() + socle.dim());

        let tp = image(&p, &m.t, f);
        // Coordinates inside P: tP and the socle, re-echelonized there.
        let tp_in_p = Subspace::from_rows(
            p.dim(),
            tp.rows().iter().map(|r| p.coords(r)).collect(),
            f,
        );
        let head_dim = p.dim() - tp_in_p.dim();
        let head_nonpivot: Vec<usize> = (0..p.dim())
            .filter(|c| !tp_in_p.pivots().contains(c))
            .collect();
        let project_head = |v: Vec<u8>| -> Vec<u8> {
            let red = tp_in_p.reduce(v, f);
            head_nonpivot.iter().map(|&c| red[c]).collect()
        };
        let socle_head = Subspace::from_rows(
            head_dim,
            socle
                .rows()
                .iter()
                .map(|r| project_head(p.coords(r)))
                .collect(),
            f,
        );

        // Subspaces of P/tP that, together with the socle image, fill it.
        for k in (head_dim - socle_head.dim())..=head_dim {
            enumerate_subspaces(head_dim, k, f, budget, &mut |cand| {
                if cand.sum(&socle_head, f).dim() != head_dim {
                    return Ok(());
                }
                // Lift: head coords -> P coords -> ambient rows, plus tP.
                let mut rows: Vec<Vec<u8>> = cand
                    .rows()
                    .iter()
                    .map(|r| {
                        let mut in_p = vec![0u8; p.dim()];
                        for (&c, &x) in head_nonpivot.iter().zip(r.iter()) {
                            in_p[c] = x;
                        }
                        p.from_coords(&in_p, f)
                    })
                    .collect();
                rows.extend(tp.rows().iter().cloned());
                let n = Subspace::from_rows(m.dim, rows, f);
                debug_assert_eq!(n.dim(), tp.dim() + cand.dim());
                out.push(n);
                Ok(())
            })?;
        }
    }
    out.sort_unstable_by(|a, b| (a.dim(), a.rows()).cmp(&(b.dim(), b.rows())));
    Ok(out)
}

// ---------------------------------------------------------------------------
// FiniteTorsionModule and Submodule
// ---------------------------------------------------------------------------

/// The module `M_lam = ⊕_i O/t^(lam_i)` over F_q, of F_q-dimension `|lam|`,
/// with basis `e_(i,j) = t^j` in component `i` and `t` acting as the shift
/// `e_(i,j) -> e_(i,j+1)`.
#[derive(Debug, Clone)]
pub struct FiniteTorsionModule {
    lam: Vec<i64>,
    nil: Nilmodule,
}

impl FiniteTorsionModule {
    /// Builds `M_lam` from a trimmed partition.
    pub fn new(lam: &[i64], _f: &FieldSpec) -> Result<Self> {
        if lam.windows(2).any(|w| w[0] < w[1]) || lam.iter().any(|&p| p <= 0) {
            return Err(Error::invalid(format!(
                "module type must be a trimmed partition, got {lam:?}"
            )));
        }
        let dim: usize = lam.iter().map(|&p| p as usize).sum();
        let mut t = vec![vec![0u8; dim]; dim];
        let mut offset = 0usize;
        for &part in lam {
            let part = part as usize;
            for j in 0..part - 1 {
                t[offset + j][offset + j + 1] = 1;
            }
            offset += part;
        }
        Ok(FiniteTorsionModule {
            lam: lam.to_vec(),
            nil: Nilmodule { dim, t },
        })
    }

    pub fn type_partition(&self) -> &[i64] {
        &self.lam
    }

    pub fn dim(&self) -> usize {
        self.nil.dim
    }

    pub fn nilmodule(&self) -> &Nilmodule {
        &self.nil
    }
}

/// A t-stable subspace of a [`FiniteTorsionModule`] in canonical echelon
/// form; equality of echelon matrices is equality of submodules.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Submodule {
    space: Subspace,
}

impl Submodule {
    /// Wraps spanning rows, verifying closure under t.
    pub fn new(m: &FiniteTorsionModule, rows: Vec<Vec<u8>>, f: &FieldSpec) -> Result<Self> {
        let space = Subspace::from_rows(m.dim(), rows, f);
        for row in space.rows() {
            let img = row_times_matrix(row, m.nil.operator(), f);
            if !space.contains(&img, f) {
                return Err(Error::invalid(
                    "rows do not span a t-stable subspace".to_string(),
                ));
            }
        }
        Ok(Submodule { space })
    }

    pub fn space(&self) -> &Subspace {
        &self.space
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }
}

/// Elementary-divisor type of a submodule, as a trimmed partition.
pub fn module_type(m: &FiniteTorsionModule, n: &Submodule, f: &FieldSpec) -> Vec<i64> {
    m.nil.restrict(&n.space, f).type_partition(f)
}

/// Type of the quotient `M/N`.
pub fn quotient_type(m: &FiniteTorsionModule, n: &Submodule, f: &FieldSpec) -> Vec<i64> {
    m.nil.quotient_type(&n.space, f)
}

/// Every t-stable subspace of `M`, optionally filtered by F_q-codimension,
/// in canonical order.
pub fn enumerate_submodules(
    m: &FiniteTorsionModule,
    colength: Option<usize>,
    f: &FieldSpec,
    budget: &Budget,
) -> Result<Vec<Submodule>> {
    let all = enumerate_tstable(&m.nil, f, budget)?;
    Ok(all
        .into_iter()
        .filter(|s| colength.map_or(true, |c| s.dim() + c == m.dim()))
        .map(|space| Submodule { space })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::budget::{Budget, DEFAULT_BUDGET};

    fn budget() -> Budget {
        Budget::new(DEFAULT_BUDGET, "torsion test")
    }

    fn module(lam: &[i64], q: u32) -> (FiniteTorsionModule, FieldSpec) {
        let f = FieldSpec::new(q).unwrap();
        (FiniteTorsionModule::new(lam, &f).unwrap(), f)
    }

    #[test]
    fn full_module_has_its_own_type() {
        for lam in [vec![2, 1], vec![3], vec![1, 1, 1], vec![2, 2, 2]] {
            let (m, f) = module(&lam, 3);
            let full = Submodule::new(&m, Subspace::full(m.dim()).rows().to_vec(), &f).unwrap();
            assert_eq!(module_type(&m, &full, &f), lam);
            let zero = Submodule::new(&m, vec![], &f).unwrap();
            assert_eq!(module_type(&m, &zero, &f), Vec::<i64>::new());
            assert_eq!(quotient_type(&m, &zero, &f), lam);
        }
    }

    #[test]
    fn t_times_a_length_two_cyclic_module_is_a_line() {
        let (m, f) = module(&[2], 5);
        let tm = Submodule::new(&m, vec![vec![0, 1]], &f).unwrap();
        assert_eq!(module_type(&m, &tm, &f), vec![1]);
        assert_eq!(quotient_type(&m, &tm, &f), vec![1]);
    }

    #[test]
    fn non_stable_rows_are_rejected() {
        let (m, f) = module(&[2], 2);
        // The line through e_(0,0) is not t-stable (t moves it to e_(0,1)).
        assert!(Submodule::new(&m, vec![vec![1, 0]], &f).is_err());
    }

    #[test]
    fn lines_in_a_socle_module() {
        // M_(1,1) over F_2: t = 0, so every subspace is a submodule;
        // colength 1 gives the 3 lines of F_2^2.
        let (m, f) = module(&[1, 1], 2);
        let subs = enumerate_submodules(&m, Some(1), &f, &budget()).unwrap();
        assert_eq!(subs.len(), 3);
        for s in &subs {
            assert_eq!(module_type(&m, s, &f), vec![1]);
            assert_eq!(quotient_type(&m, s, &f), vec![1]);
        }
    }

    #[test]
    fn unique_index_q_submodule_of_a_cyclic_module() {
        for q in [2, 3, 5, 7] {
            let (m, f) = module(&[2], q);
            let subs = enumerate_submodules(&m, Some(1), &f, &budget()).unwrap();
            assert_eq!(subs.len(), 1, "q={q}");
        }
    }

    #[test]
    fn colength_zero_is_the_module_itself() {
        let (m, f) = module(&[2, 1], 3);
        let subs = enumerate_submodules(&m, Some(0), &f, &budget()).unwrap();
        assert_eq!(subs.len(), 1);
        assert_eq!(subs[0].dim(), m.dim());
    }

    #[test]
    fn strategies_agree_on_small_modules() {
        for lam in [vec![1], vec![2], vec![1, 1], vec![2, 1], vec![2, 2], vec![3, 1]] {
            for q in [2u32, 3] {
                let (m, f) = module(&lam, q);
                let a = enumerate_tstable_echelon(m.nilmodule(), &f, &budget()).unwrap();
                let b = enumerate_tstable_socle(m.nilmodule(), &f, &budget()).unwrap();
                assert_eq!(a, b, "lam={lam:?} q={q}");
            }
        }
    }

    #[test]
    fn socle_recursion_handles_larger_fields() {
        // M_(1,1) over F_13: 2 + (13+1) subspaces, all t-stable since t = 0.
        let (m, f) = module(&[1, 1], 13);
        let subs = enumerate_tstable_socle(m.nilmodule(), &f, &budget()).unwrap();
        assert_eq!(subs.len(), 16);
    }

    #[test]
    fn submodule_counts_by_type_in_m22() {
        // Hand count in M_(2,2): a type-(2) submodule is generated by any of
        // its q^2 - q vectors of t-order two, and q^4 - q^2 such vectors
        // exist, so there are (q^4 - q^2)/(q^2 - q) = q(q+1) = 12 at q = 3.
        let (m, f) = module(&[2, 2], 3);
        let subs = enumerate_submodules(&m, None, &f, &budget()).unwrap();
        let type2 = subs
            .iter()
            .filter(|s| module_type(&m, s, &f) == vec![2])
            .count();
        assert_eq!(type2, 12);
        // Exactly one submodule of type (1,1): the socle.
        let type11 = subs
            .iter()
            .filter(|s| module_type(&m, s, &f) == vec![1, 1])
            .count();
        assert_eq!(type11, 1);
    }

    #[test]
    fn nilmodule_rejects_non_nilpotent_operators() {
        let f = FieldSpec::new(2).unwrap();
        let id = vec![vec![1, 0], vec![0, 1]];
        assert!(Nilmodule::new(id, &f).is_err());
        let shift = vec![vec![0, 1], vec![0, 0]];
        assert!(Nilmodule::new(shift, &f).is_ok());
    }

    #[test]
    fn budget_trips_on_large_sweeps() {
        let (m, f) = module(&[2, 2], 3);
        let tight = Budget::new(5, "tight torsion");
        let err = enumerate_submodules(&m, None, &f, &tight).unwrap_err();
        assert!(matches!(err, Error::BudgetExceeded { .. }), "{err}");
    }
}
