//! Exponent vectors and monomial orders.

use crate::error::{Error, Result};
use smallvec::SmallVec;
use std::cmp::Ordering;

pub type Exps = SmallVec<[u32; 8]>;

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial {
    exps: Exps,
}

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial {
            exps: std::iter::repeat(0).take(nvars).collect(),
        }
    }

    pub fn from_exps(exps: impl Into<Exps>) -> Self {
        Monomial { exps: exps.into() }
    }

    pub fn var(nvars: usize, i: usize, e: u32) -> Self {
        let mut m = Monomial::one(nvars);
        m.exps[i] = e;
        m
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn exp(&self, i: usize) -> u32 {
        self.exps[i]
    }

    pub fn exps(&self) -> &[u32] {
        &self.exps
    }

    pub fn deg(&self) -> u32 {
        self.exps.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.nvars(), other.nvars());
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        debug_assert_eq!(self.nvars(), other.nvars());
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// `other / self`, when divisible.
    pub fn try_div_into(&self, other: &Monomial) -> Option<Monomial> {
        if !self.divides(other) {
            return None;
        }
        Some(Monomial {
            exps: other
                .exps
                .iter()
                .zip(&self.exps)
                .map(|(a, b)| a - b)
                .collect(),
        })
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.nvars(), other.nvars());
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| *a.max(b))
                .collect(),
        }
    }

    pub fn coprime(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Bitmask of variables appearing with positive exponent. Rings are
    /// limited to 64 variables by the dimension routine, which is far beyond
    /// anything this artifact constructs.
    pub fn support_mask(&self) -> u64 {
        let mut m = 0u64;
        for (i, &e) in self.exps.iter().enumerate() {
            if e > 0 {
                m |= 1 << i;
            }
        }
        m
    }
}

/// Monomial orders. `Block(k)` eliminates the first `k` variables: grevlex is
/// compared on each block, the first block dominating.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub enum MonomialOrder {
    GrevLex,
    Lex,
    Block(usize),
}

fn grevlex_slice(a: &[u32], b: &[u32]) -> Ordering {
    let da: u32 = a.iter().sum();
    let db: u32 = b.iter().sum();
    match da.cmp(&db) {
        Ordering::Equal => {}
        ord => return ord,
    }
    for i in (0..a.len()).rev() {
        if a[i] != b[i] {
            // smaller exponent in the last differing position is greater
            return b[i].cmp(&a[i]);
        }
    }
    Ordering::Equal
}

fn lex_slice(a: &[u32], b: &[u32]) -> Ordering {
    for i in 0..a.len() {
        if a[i] != b[i] {
            return a[i].cmp(&b[i]);
        }
    }
    Ordering::Equal
}

pub(crate) fn cmp_mono(order: MonomialOrder, a: &Monomial, b: &Monomial) -> Ordering {
    debug_assert_eq!(a.nvars(), b.nvars());
    match order {
        MonomialOrder::GrevLex => grevlex_slice(a.exps(), b.exps()),
        MonomialOrder::Lex => lex_slice(a.exps(), b.exps()),
        MonomialOrder::Block(k) => {
            let k = k.min(a.nvars());
            match grevlex_slice(&a.exps()[..k], &b.exps()[..k]) {
                Ordering::Equal => grevlex_slice(&a.exps()[k..], &b.exps()[k..]),
                ord => ord,
            }
        }
    }
}

/// Strict total multiplicative order on same-length monomials.
pub fn monomial_compare(order: MonomialOrder, a: &Monomial, b: &Monomial) -> Result<Ordering> {
    if a.nvars() != b.nvars() {
        return Err(Error::domain(format!(
            "monomial length mismatch: {} vs {}",
            a.nvars(),
            b.nvars()
        )));
    }
    Ok(cmp_mono(order, a, b))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::from_exps(Exps::from_slice(e))
    }

    #[test]
    fn grevlex_degree_tie() {
        // x^2 y vs x y^2 in vars (x, y): degree tie, smaller last exponent wins
        assert_eq!(
            monomial_compare(MonomialOrder::GrevLex, &m(&[2, 1]), &m(&[1, 2])).unwrap(),
            Ordering::Greater
        );
    }

    #[test]
    fn reflexive() {
        assert_eq!(
            monomial_compare(MonomialOrder::Lex, &m(&[3, 1]), &m(&[3, 1])).unwrap(),
            Ordering::Equal
        );
    }

    #[test]
    fn lex_ignores_degree() {
        // x vs y^9 with x > y
        assert_eq!(
            monomial_compare(MonomialOrder::Lex, &m(&[1, 0]), &m(&[0, 9])).unwrap(),
            Ordering::Greater
        );
    }

    #[test]
    fn length_mismatch_rejected() {
        assert!(monomial_compare(MonomialOrder::Lex, &m(&[1]), &m(&[1, 0])).is_err());
    }

    #[test]
    fn block_eliminates_first_vars() {
        // With Block(1), any positive power of the first variable dominates
        let t = m(&[1, 0, 0]);
        let xy = m(&[0, 5, 5]);
        assert_eq!(cmp_mono(MonomialOrder::Block(1), &t, &xy), Ordering::Greater);
    }
}
