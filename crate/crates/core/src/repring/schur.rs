//! Independent multiplicity oracle via Schur polynomial arithmetic.
//!
//! Multiplies the Schur polynomials of the factors outright (each generated
//! as a sum over semistandard tableaux in `n` variables) and expands the
//! product in the Schur basis by repeatedly subtracting the Schur polynomial
//! of the leading dominant monomial. No Littlewood-Richardson combinatorics
//! anywhere on this path, which is the point: it cross-checks the LR rule.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::weights::{normalize_instance, DominantCoweight};

/// Symmetric polynomial in `n` variables: exponent vector -> coefficient.
type Poly = BTreeMap<Vec<i64>, BigInt>;

/// Multiplicity of `V_lam` in the product of the `V_mu_i`, computed purely
/// with Schur polynomial arithmetic in `n = rank` variables. Same contract
/// as `tensor_multiplicity`.
pub fn schur_product_oracle(
    mu_list: &[DominantCoweight],
    lam: &DominantCoweight,
    budget: &Budget,
) -> Result<u64> {
    let (mus, lam) = normalize_instance(mu_list, lam)?;
    if !lam.is_partition() {
        return Ok(0);
    }
    let n = lam.rank();
    let total: i64 = mus.iter().map(DominantCoweight::sum).sum();
    if total != lam.sum() {
        return Ok(0);
    }

    let mut product: Poly = BTreeMap::new();
    product.insert(vec![0; n], BigInt::from(1));
    for mu in &mus {
        let factor = schur_polynomial(&mu.trimmed()?, n, budget)?;
        product = multiply(&product, &factor, budget)?;
    }

    let expansion = expand_in_schur_basis(product, n, budget)?;
    let want = lam.parts().to_vec();
    Ok(expansion.get(&want).copied().unwrap_or(0))
}

/// Schur polynomial `s_mu(x_1..x_n)` as a sum over semistandard tableaux of
/// shape `mu` with entries in `1..=n`.
fn schur_polynomial(mu: &[i64], n: usize, budget: &Budget) -> Result<Poly> {
    let mut poly: Poly = BTreeMap::new();
    if mu.len() > n {
        return Ok(poly); // no tableaux, zero polynomial
    }
    if mu.is_empty() {
        poly.insert(vec![0; n], BigInt::from(1));
        return Ok(poly);
    }
    let rows = mu.len();
    let mut tableau: Vec<Vec<usize>> = mu.iter().map(|&l| vec![0; l as usize]).collect();
    let mut content = vec![0i64; n];

    // Fill cells row by row, left to right: rows weakly increase, columns
    // strictly increase.
    let mut cells: Vec<(usize, usize)> = Vec::new();
    for (i, &l) in mu.iter().enumerate() {
        for j in 0..l as usize {
            cells.push((i, j));
        }
    }

    fn rec(
        pos: usize,
        cells: &[(usize, usize)],
        n: usize,
        rows: usize,
        tableau: &mut Vec<Vec<usize>>,
        content: &mut Vec<i64>,
        poly: &mut Poly,
        budget: &Budget,
    ) -> Result<()> {
        if pos == cells.len() {
            let e = poly.entry(content.clone()).or_insert_with(BigInt::zero);
            *e += 1;
            return Ok(());
        }
        budget.charge(1)?;
        let (i, j) = cells[pos];
        let lo = if i > 0 { tableau[i - 1][j] + 1 } else { 1 };
        let lo = if j > 0 { lo.max(tableau[i][j - 1]) } else { lo };
        // Leave room for the strictly increasing cells below in this column.
        let below = (i + 1..rows).filter(|&r| tableau[r].len() > j).count();
        let hi = n - below;
        for v in lo..=hi {
            tableau[i][j] = v;
            content[v - 1] += 1;
            rec(pos + 1, cells, n, rows, tableau, content, poly, budget)?;
            content[v - 1] -= 1;
        }
        tableau[i][j] = 0;
        Ok(())
    }

    rec(0, &cells, n, rows, &mut tableau, &mut content, &mut poly, budget)?;
    Ok(poly)
}

fn multiply(a: &Poly, b: &Poly, budget: &Budget) -> Result<Poly> {
    budget.charge((a.len() * b.len()) as u64)?;
    let mut out: Poly = BTreeMap::new();
    for (ea, ca) in a {
        for (eb, cb) in b {
            let exp: Vec<i64> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
            let e = out.entry(exp).or_insert_with(BigInt::zero);
            *e += ca * cb;
        }
    }
    out.retain(|_, c| !c.is_zero());
    Ok(out)
}

/// Expands a symmetric polynomial in the Schur basis by leading-term
/// subtraction, returning partition -> multiplicity.
fn expand_in_schur_basis(
    mut poly: Poly,
    n: usize,
    budget: &Budget,
) -> Result<BTreeMap<Vec<i64>, u64>> {
    let mut out = BTreeMap::new();
    loop {
        let (lead, coeff) = match poly.last_key_value() {
            Some((exp, coeff)) => (exp.clone(), coeff.clone()),
            None => break,
        };
        budget.charge(poly.len() as u64)?;
        // The lexicographically largest exponent of a symmetric polynomial
        // is weakly decreasing; anything else means the input was not
        // symmetric, i.e. an upstream bug.
        if lead.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::SelfCheck(format!(
                "leading monomial {lead:?} of a symmetric polynomial is not dominant"
            )));
        }
        if coeff.is_negative() {
            return Err(Error::SelfCheck(format!(
                "negative multiplicity {coeff} at {lead:?} in Schur expansion"
            )));
        }
        let mult = coeff.to_u64().ok_or_else(|| {
            Error::invalid(format!("multiplicity {coeff} does not fit in u64"))
        })?;
        let mut trimmed = lead.clone();
        while trimmed.last() == Some(&0) {
            trimmed.pop();
        }
        let s = schur_polynomial(&trimmed, n, budget)?;
        for (e, c) in &s {
            let entry = poly.entry(e.clone()).or_insert_with(BigInt::zero);
            *entry -= c * BigInt::from(mult);
        }
        poly.retain(|_, c| !c.is_zero());
        out.insert(lead, mult);
    }
    Ok(out)
}
