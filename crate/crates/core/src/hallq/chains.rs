//! Literal enumeration of submodule chains
//! `M_lam = N_0 ⊇ N_1 ⊇ ... ⊇ N_r = 0`, bucketed by the tuple of quotient
//! types — the direct, no-shortcuts route to structure constants and fiber
//! counts.
//!
//! Each inner module is carried in its own echelon coordinates, so a chain
//! step enumerates t-stable subspaces of the current module, checks the
//! quotient type against the step's coweight (equality or dominance), and
//! recurses. Partial chains whose residual type cannot be absorbed by the
//! remaining coweights are pruned: the convolution morphism is surjective,
//! so a completion exists iff the residual type is dominated by the sum of
//! the remaining factors.

use std::collections::BTreeMap;

use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::weights::dominance_leq_trimmed;

use super::gf::FieldSpec;
use super::torsion::{enumerate_tstable, FiniteTorsionModule, Nilmodule};

/// How a chain step's quotient type must relate to the step coweight.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TypeBound {
    /// `type(N_(i-1)/N_i) = mu_i`: counts the open stratum, i.e. the Hecke
    /// structure constant.
    Exact,
    /// `type(N_(i-1)/N_i) <= mu_i`: counts the whole fiber.
    Dominated,
}

/// Counts of chains bucketed by their tuple of quotient types (trimmed
/// partitions). Only realized (nonzero) strata appear.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct StratumTable {
    entries: BTreeMap<Vec<Vec<i64>>, u64>,
}

impl StratumTable {
    pub fn total(&self) -> u64 {
        self.entries.values().sum()
    }

    pub fn get(&self, key: &[Vec<i64>]) -> u64 {
        self.entries.get(key).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Vec<Vec<i64>>, &u64)> {
        self.entries.iter()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    fn add(&mut self, key: Vec<Vec<i64>>, count: u64) {
        *self.entries.entry(key).or_insert(0) += count;
    }
}

/// Enumerates all chains in `M_lam` with quotient types constrained by
/// `mu_list` under `bound`, returning per-stratum counts.
///
/// `mu_list` entries are trimmed partitions. An empty list counts the empty
/// chain, which exists exactly when the module is zero.
pub fn chain_strata(
    lam: &[i64],
    mu_list: &[Vec<i64>],
    bound: TypeBound,
    f: &FieldSpec,
    budget: &Budget,
) -> Result<StratumTable> {
    let mut table = StratumTable::default();
    let total: i64 = mu_list.iter().map(|m| m.iter().sum::<i64>()).sum();
    if total != lam.iter().sum::<i64>() {
        return Ok(table); // no chains: colengths cannot match
    }
    let module = FiniteTorsionModule::new(lam, f)?;
    if mu_list.is_empty() {
        if module.dim() == 0 {
            table.add(Vec::new(), 1);
        }
        return Ok(table);
    }

    // suffix_sum[i] = mu_i + ... + mu_r as a trimmed partition.
    let mut suffix_sums: Vec<Vec<i64>> = vec![Vec::new(); mu_list.len() + 1];
    for i in (0..mu_list.len()).rev() {
        let mut s = suffix_sums[i + 1].clone();
        if s.len() < mu_list[i].len() {
            s.resize(mu_list[i].len(), 0);
        }
        for (acc, p) in s.iter_mut().zip(&mu_list[i]) {
            *acc += p;
        }
        suffix_sums[i] = s;
    }

    let mut key: Vec<Vec<i64>> = Vec::with_capacity(mu_list.len());
    walk(
        module.nilmodule().clone(),
        0,
        mu_list,
        &suffix_sums,
        bound,
        f,
        budget,
        &mut key,
        &mut table,
    )?;
    Ok(table)
}

#[allow(clippy::too_many_arguments)]
fn walk(
    current: Nilmodule,
    step: usize,
    mu_list: &[Vec<i64>],
    suffix_sums: &[Vec<i64>],
    bound: TypeBound,
    f: &FieldSpec,
    budget: &Budget,
    key: &mut Vec<Vec<i64>>,
    table: &mut StratumTable,
) -> Result<()> {
    budget.charge(1)?;
    let mu = &mu_list[step];
    let colength: i64 = mu.iter().sum();

    if step + 1 == mu_list.len() {
        // Final step: N_r = 0, so the quotient is the current module itself.
        debug_assert_eq!(current.dim() as i64, colength);
        let qtype = current.type_partition(f);
        if type_matches(&qtype, mu, bound) {
            key.push(qtype);
            table.add(key.clone(), 1);
            key.pop();
        }
        return Ok(());
    }

    for sub in enumerate_tstable(&current, f, budget)? {
        if sub.dim() as i64 + colength != current.dim() as i64 {
            continue;
        }
        let qtype = current.quotient_type(&sub, f);
        if !type_matches(&qtype, mu, bound) {
            continue;
        }
        let inner = current.restrict(&sub, f);
        let rtype = inner.type_partition(f);
        // Completion exists iff the residual type fits the remaining budget.
        if !dominance_leq_trimmed(&rtype, &suffix_sums[step + 1]) {
            continue;
        }
        key.push(qtype);
        walk(inner, step + 1, mu_list, suffix_sums, bound, f, budget, key, table)?;
        key.pop();
    }
    Ok(())
}

fn type_matches(qtype: &[i64], mu: &[i64], bound: TypeBound) -> bool {
    match bound {
        TypeBound::Exact => qtype == mu,
        TypeBound::Dominated => dominance_leq_trimmed(qtype, mu),
    }
}

/// Independent total-count route used by tests: chains with fixed colengths
/// and *no* type constraints, counted by recursing on submodule types with
/// memoization. Cross-checks the chain walker's bucket sums.
pub fn free_chain_count(
    lam: &[i64],
    colengths: &[usize],
    f: &FieldSpec,
    budget: &Budget,
) -> Result<u64> {
    let total: usize = colengths.iter().sum();
    if total as i64 != lam.iter().sum::<i64>() {
        return Ok(0);
    }
    let mut memo: BTreeMap<(Vec<i64>, usize), u64> = BTreeMap::new();
    fn rec(
        lam: &[i64],
        step: usize,
        colengths: &[usize],
        f: &FieldSpec,
        budget: &Budget,
        memo: &mut BTreeMap<(Vec<i64>, usize), u64>,
    ) -> Result<u64> {
        if step == colengths.len() {
            return Ok(u64::from(lam.is_empty()));
        }
        if let Some(&v) = memo.get(&(lam.to_vec(), step)) {
            return Ok(v);
        }
        let module = FiniteTorsionModule::new(lam, f)?;
        let mut acc = 0u64;
        for sub in super::torsion::enumerate_submodules(&module, Some(colengths[step]), f, budget)? {
            let ntype = super::torsion::module_type(&module, &sub, f);
            acc += rec(&ntype, step + 1, colengths, f, budget, memo)?;
        }
        memo.insert((lam.to_vec(), step), acc);
        Ok(acc)
    }
    rec(lam, 0, colengths, f, budget, &mut memo)
}
