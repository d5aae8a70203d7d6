//! Small finite fields F_q for the supported prime powers, as dense
//! operation tables.
//!
//! Supported sizes: 2, 3, 4, 5, 7, 8, 9, 11, 13. The non-prime fields use
//! fixed irreducible moduli (x^2+x+1 for F_4, x^3+x+1 for F_8, x^2+1 over
//! F_3 for F_9); elements are encoded as base-p digit strings so `0` and `1`
//! are always the additive and multiplicative identities. The field axioms
//! are checked exhaustively on every construction — at q <= 13 that costs
//! nothing and turns any table bug into an immediate loud failure.

use crate::error::{Error, Result};

/// Field sizes the engine supports, ascending.
pub const SUPPORTED_FIELDS: &[u32] = &[2, 3, 4, 5, 7, 8, 9, 11, 13];

/// Modulus coefficients (ascending, without the leading 1) for the
/// non-prime sizes.
fn modulus_for(q: u32) -> Option<(u32, Vec<u8>)> {
    match q {
        4 => Some((2, vec![1, 1])),    // x^2 + x + 1 over F_2
        8 => Some((2, vec![1, 1, 0])), // x^3 + x + 1 over F_2
        9 => Some((3, vec![1, 0])),    // x^2 + 1 over F_3
        _ => None,
    }
}

/// Arithmetic tables for one F_q. Elements are `0..q` as `u8`.
#[derive(Debug, Clone)]
pub struct FieldSpec {
    q: u32,
    add: Vec<u8>,
    mul: Vec<u8>,
    neg: Vec<u8>,
    inv: Vec<u8>,
}

impl FieldSpec {
    pub fn new(q: u32) -> Result<Self> {
        if !SUPPORTED_FIELDS.contains(&q) {
            return Err(Error::invalid(format!(
                "unsupported field size {q}; supported: {SUPPORTED_FIELDS:?}"
            )));
        }
        let spec = match modulus_for(q) {
            None => Self::prime_field(q),
            Some((p, modulus)) => Self::extension_field(q, p, &modulus),
        };
        spec.check_axioms()?;
        Ok(spec)
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    fn prime_field(q: u32) -> Self {
        let n = q as usize;
        let mut add = vec![0u8; n * n];
        let mut mul = vec![0u8; n * n];
        let mut neg = vec![0u8; n];
        let mut inv = vec![0u8; n];
        for a in 0..n {
            neg[a] = ((q as usize - a) % n) as u8;
            for b in 0..n {
                add[a * n + b] = ((a + b) % n) as u8;
                mul[a * n + b] = ((a * b) % n) as u8;
                if (a * b) % n == 1 {
                    inv[a] = b as u8;
                }
            }
        }
        FieldSpec { q, add, mul, neg, inv }
    }

    fn extension_field(q: u32, p: u32, modulus: &[u8]) -> Self {
        let n = q as usize;
        let deg = modulus.len();
        let pp = p as usize;

        let digits = |x: usize| -> Vec<u8> {
            let mut v = Vec::with_capacity(deg);
            let mut x = x;
            for _ in 0..deg {
                v.push((x % pp) as u8);
                x /= pp;
            }
            v
        };
        let index = |d: &[u8]| -> usize {
            d.iter().rev().fold(0usize, |acc, &c| acc * pp + c as usize)
        };

        let mut add = vec![0u8; n * n];
        let mut mul = vec![0u8; n * n];
        let mut neg = vec![0u8; n];
        let mut inv = vec![0u8; n];
        for a in 0..n {
            let da = digits(a);
            let negd: Vec<u8> = da.iter().map(|&c| ((pp - c as usize) % pp) as u8).collect();
            neg[a] = index(&negd) as u8;
            for b in 0..n {
                let db = digits(b);
                let sum: Vec<u8> = da
                    .iter()
                    .zip(&db)
                    .map(|(&x, &y)| ((x as usize + y as usize) % pp) as u8)
                    .collect();
                add[a * n + b] = index(&sum) as u8;

                // Polynomial product reduced by the modulus.
                let mut prod = vec![0usize; 2 * deg - 1];
                for (i, &x) in da.iter().enumerate() {
                    for (j, &y) in db.iter().enumerate() {
                        prod[i + j] += x as usize * y as usize;
                    }
                }
                for k in (deg..prod.len()).rev() {
                    let c = prod[k] % pp;
                    prod[k] = 0;
                    // x^k = x^(k-deg) * (-(modulus sans leading term))
                    for (i, &m) in modulus.iter().enumerate() {
                        let sub = c * m as usize % pp;
                        prod[k - deg + i] = (prod[k - deg + i] + pp - sub) % pp;
                    }
                }
                let red: Vec<u8> = prod[..deg].iter().map(|&c| (c % pp) as u8).collect();
                mul[a * n + b] = index(&red) as u8;
            }
        }
        for a in 1..n {
            for b in 1..n {
                if mul[a * n + b] == 1 {
                    inv[a] = b as u8;
                }
            }
        }
        FieldSpec { q, add, mul, neg, inv }
    }

    /// Exhaustive verification of the field axioms over all elements.
    fn check_axioms(&self) -> Result<()> {
        let n = self.q as usize;
        let fail = |msg: String| Err(Error::SelfCheck(format!("F_{} tables: {msg}", self.q)));
        for a in 0..n as u8 {
            if self.add(a, 0) != a || self.mul(a, 1) != a {
                return fail(format!("identity laws fail at {a}"));
            }
            if self.add(a, self.neg(a)) != 0 {
                return fail(format!("negation fails at {a}"));
            }
            if a != 0 && self.mul(a, self.inv(a)) != 1 {
                return fail(format!("inversion fails at {a}"));
            }
            for b in 0..n as u8 {
                if self.add(a, b) != self.add(b, a) || self.mul(a, b) != self.mul(b, a) {
                    return fail(format!("commutativity fails at ({a},{b})"));
                }
                for c in 0..n as u8 {
                    if self.add(self.add(a, b), c) != self.add(a, self.add(b, c)) {
                        return fail(format!("additive associativity fails at ({a},{b},{c})"));
                    }
                    if self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c)) {
                        return fail(format!("multiplicative associativity fails at ({a},{b},{c})"));
                    }
                    if self.mul(a, self.add(b, c)) != self.add(self.mul(a, b), self.mul(a, c)) {
                        return fail(format!("distributivity fails at ({a},{b},{c})"));
                    }
                }
            }
        }
        Ok(())
    }

    #[inline]
    pub fn add(&self, a: u8, b: u8) -> u8 {
        self.add[a as usize * self.q as usize + b as usize]
    }

    #[inline]
    pub fn mul(&self, a: u8, b: u8) -> u8 {
        self.mul[a as usize * self.q as usize + b as usize]
    }

    #[inline]
    pub fn neg(&self, a: u8) -> u8 {
        self.neg[a as usize]
    }

    #[inline]
    pub fn inv(&self, a: u8) -> u8 {
        debug_assert!(a != 0, "inverse of zero");
        self.inv[a as usize]
    }

    #[inline]
    pub fn sub(&self, a: u8, b: u8) -> u8 {
        self.add(a, self.neg(b))
    }
}
