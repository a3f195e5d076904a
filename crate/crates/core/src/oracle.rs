//! Independent cross-checks used by the self-test suites: a degree-bounded
//! linear-algebra syzygy oracle and a brute-force dimension oracle.

use crate::error::{Error, Result};
use crate::field::{Coeff, Field};
use crate::ideal::Ideal;
use crate::module::{module_contains, syzygies, FreeVector};
use crate::monomial::{Exps, Monomial};
use crate::poly::Polynomial;

/// All monomials of total degree ≤ d in n variables, deterministic order.
fn monomials_up_to(n: usize, d: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    let mut exps = vec![0u32; n];
    fn rec(n: usize, d: u32, pos: usize, exps: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if pos == n {
            out.push(Monomial::from_exps(Exps::from_slice(exps)));
            return;
        }
        for e in 0..=d {
            exps[pos] = e;
            rec(n, d - e, pos + 1, exps, out);
            exps[pos] = 0;
        }
    }
    rec(n, d, 0, &mut exps, &mut out);
    out
}

/// Reduced row echelon form in place; returns pivot column per row.
fn rref(field: Field, m: &mut Vec<Vec<Coeff>>) -> Vec<usize> {
    let rows = m.len();
    if rows == 0 {
        return Vec::new();
    }
    let cols = m[0].len();
    let mut pivots = Vec::new();
    let mut row = 0usize;
    for col in 0..cols {
        if row >= rows {
            break;
        }
        let Some(pr) = (row..rows).find(|&r| !field.is_zero(&m[r][col])) else {
            continue;
        };
        m.swap(row, pr);
        let inv = field.inv(&m[row][col]).unwrap();
        for c in col..cols {
            m[row][c] = field.mul(&m[row][c], &inv);
        }
        for r in 0..rows {
            if r != row && !field.is_zero(&m[r][col]) {
                let factor = m[r][col].clone();
                for c in col..cols {
                    let sub = field.mul(&m[row][c], &factor);
                    m[r][c] = field.sub(&m[r][c], &sub);
                }
            }
        }
        pivots.push(col);
        row += 1;
    }
    pivots
}

/// Basis of the right nullspace of the matrix, one vector per free column.
fn nullspace(field: Field, mut m: Vec<Vec<Coeff>>, cols: usize) -> Vec<Vec<Coeff>> {
    let pivots = rref(field, &mut m);
    let is_pivot: Vec<bool> = {
        let mut v = vec![false; cols];
        for &p in &pivots {
            v[p] = true;
        }
        v
    };
    let mut basis = Vec::new();
    for free in 0..cols {
        if is_pivot[free] {
            continue;
        }
        let mut vec = vec![field.zero(); cols];
        vec[free] = field.one();
        for (r, &p) in pivots.iter().enumerate() {
            vec[p] = field.neg(&m[r][free]);
        }
        basis.push(vec);
    }
    basis
}

/// Every syzygy of `g` whose entries have degree ≤ d lies in the module
/// generated by the Gröbner-computed syzygies. The bounded syzygies are
/// found independently, as the nullspace of a dense linear system.
pub fn syzygy_complete_up_to_degree(g: &[FreeVector], d: u32) -> Result<bool> {
    let first = g
        .first()
        .ok_or_else(|| Error::precondition("empty family"))?;
    let ring = first.ring().clone();
    let field = ring.field();
    let n = ring.nvars();
    let m_rank = first.rank();
    let k = g.len();

    let unknown_monos = monomials_up_to(n, d);
    let gen_deg = g
        .iter()
        .flat_map(|v| v.entries().iter())
        .filter_map(|p| p.total_degree())
        .max()
        .unwrap_or(0);
    let eq_monos = monomials_up_to(n, d + gen_deg);
    let mono_index = |m: &Monomial| eq_monos.iter().position(|x| x == m).unwrap();

    let ncols = k * unknown_monos.len();
    // one equation per (component, monomial) pair
    let mut rows = vec![vec![field.zero(); ncols]; m_rank * eq_monos.len()];
    for (gi, gv) in g.iter().enumerate() {
        for (ui, um) in unknown_monos.iter().enumerate() {
            let col = gi * unknown_monos.len() + ui;
            for comp in 0..m_rank {
                for (pm, pc) in gv.entry(comp).terms() {
                    let target = pm.mul(um);
                    let row = comp * eq_monos.len() + mono_index(&target);
                    rows[row][col] = field.add(&rows[row][col], pc);
                }
            }
        }
    }

    let computed = syzygies(g)?;
    for vec in nullspace(field, rows, ncols) {
        let mut entries = Vec::with_capacity(k);
        for gi in 0..k {
            let terms: Vec<(Monomial, Coeff)> = unknown_monos
                .iter()
                .enumerate()
                .map(|(ui, um)| (um.clone(), vec[gi * unknown_monos.len() + ui].clone()))
                .collect();
            entries.push(Polynomial::from_terms(&ring, terms));
        }
        let candidate = FreeVector::new(&ring, entries)?;
        if candidate.is_zero() {
            continue;
        }
        if !module_contains(&computed, &candidate)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Dimension of a monomial ideal by direct subset enumeration: the largest
/// variable subset S such that no generator is supported inside S.
pub fn monomial_dimension_oracle(i: &Ideal) -> Result<i64> {
    let ring = i.ring().clone();
    let n = ring.nvars();
    if n > 20 {
        return Err(Error::domain("oracle limited to 20 variables"));
    }
    let mut masks = Vec::new();
    for g in i.gens() {
        if g.terms().len() != 1 {
            return Err(Error::precondition("oracle requires monomial generators"));
        }
        let (m, _) = &g.terms()[0];
        if m.is_one() {
            return Ok(-1);
        }
        masks.push(m.support_mask());
    }
    let mut best: i64 = -1;
    for subset in 0u64..(1u64 << n) {
        if masks.iter().all(|m| m & !subset != 0) {
            best = best.max(subset.count_ones() as i64);
        }
    }
    Ok(best)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Field;
    use crate::monomial::MonomialOrder;
    use crate::poly::{PolyRing, RingOps, RingRef};
    use crate::text::parse_poly;

    fn qring2() -> RingRef {
        PolyRing::new(
            Field::Rational,
            vec!["x".into(), "y".into()],
            MonomialOrder::GrevLex,
        )
        .unwrap()
    }

    #[test]
    fn syzygy_oracle_regular_sequence() {
        let r = qring2();
        let g: Vec<FreeVector> = ["x^2 + y", "x^5"]
            .iter()
            .map(|s| FreeVector::new(&r, vec![parse_poly(&r, s).unwrap()]).unwrap())
            .collect();
        assert!(syzygy_complete_up_to_degree(&g, 6).unwrap());
    }

    #[test]
    fn syzygy_oracle_three_gens() {
        let r = qring2();
        let g: Vec<FreeVector> = ["x^2", "x*y", "y^2"]
            .iter()
            .map(|s| FreeVector::new(&r, vec![parse_poly(&r, s).unwrap()]).unwrap())
            .collect();
        assert!(syzygy_complete_up_to_degree(&g, 4).unwrap());
    }

    #[test]
    fn syzygy_oracle_detects_missing_generator() {
        let r = qring2();
        let g: Vec<FreeVector> = ["x", "y"]
            .iter()
            .map(|s| FreeVector::new(&r, vec![parse_poly(&r, s).unwrap()]).unwrap())
            .collect();
        let full = syzygies(&g).unwrap();
        assert_eq!(full.len(), 1);
        // drop the only syzygy: completeness against an empty set must fail
        let candidate = &full[0];
        assert!(!module_contains(&[], candidate).unwrap());
    }

    #[test]
    fn dimension_oracle_matches() {
        let r = qring2();
        let i = Ideal::new(&r, vec![parse_poly(&r, "x^2*y").unwrap()]);
        assert_eq!(monomial_dimension_oracle(&i).unwrap(), 1);
        assert_eq!(i.dimension().dim, 1);
        let unit = Ideal::new(&r, vec![r.one()]);
        assert_eq!(monomial_dimension_oracle(&unit).unwrap(), -1);
        let zero = Ideal::zero(&r);
        assert_eq!(monomial_dimension_oracle(&zero).unwrap(), 2);
    }
}
