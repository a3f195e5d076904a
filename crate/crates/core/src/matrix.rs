//! Polynomial matrices and minor ideals.

use crate::error::{Error, Result};
use crate::ideal::Ideal;
use crate::poly::{PolyRing, Polynomial, RingOps, RingRef};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyMatrix {
    ring: RingRef,
    rows: usize,
    cols: usize,
    entries: Vec<Polynomial>, // row-major
}

impl PolyMatrix {
    pub fn new(ring: &RingRef, rows: usize, cols: usize, entries: Vec<Polynomial>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::domain("matrix entry count mismatch"));
        }
        for e in &entries {
            if !PolyRing::same(e.ring(), ring) {
                return Err(Error::RingMismatch("matrix entry outside ring".into()));
            }
        }
        Ok(PolyMatrix {
            ring: ring.clone(),
            rows,
            cols,
            entries,
        })
    }

    pub fn zero(ring: &RingRef, rows: usize, cols: usize) -> Self {
        PolyMatrix {
            ring: ring.clone(),
            rows,
            cols,
            entries: (0..rows * cols).map(|_| ring.zero()).collect(),
        }
    }

    pub fn identity(ring: &RingRef, n: usize) -> Self {
        let mut m = Self::zero(ring, n, n);
        for i in 0..n {
            *m.get_mut(i, i) = ring.one();
        }
        m
    }

    pub fn ring(&self) -> &RingRef {
        &self.ring
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Polynomial {
        &self.entries[i * self.cols + j]
    }

    pub fn get_mut(&mut self, i: usize, j: usize) -> &mut Polynomial {
        &mut self.entries[i * self.cols + j]
    }

    pub fn column(&self, j: usize) -> Vec<Polynomial> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    /// Keep the listed columns, in the given order.
    pub fn select_columns(&self, cols: &[usize]) -> PolyMatrix {
        let entries = (0..self.rows)
            .flat_map(|i| cols.iter().map(move |&j| self.get(i, j).clone()))
            .collect();
        PolyMatrix {
            ring: self.ring.clone(),
            rows: self.rows,
            cols: cols.len(),
            entries,
        }
    }

    /// Horizontal concatenation.
    pub fn augment(&self, other: &PolyMatrix) -> Result<PolyMatrix> {
        if self.rows != other.rows || !PolyRing::same(&self.ring, &other.ring) {
            return Err(Error::domain("augment shape or ring mismatch"));
        }
        let mut entries = Vec::with_capacity(self.rows * (self.cols + other.cols));
        for i in 0..self.rows {
            for j in 0..self.cols {
                entries.push(self.get(i, j).clone());
            }
            for j in 0..other.cols {
                entries.push(other.get(i, j).clone());
            }
        }
        Ok(PolyMatrix {
            ring: self.ring.clone(),
            rows: self.rows,
            cols: self.cols + other.cols,
            entries,
        })
    }

    /// [row vector] · M, for a row vector of length `rows`.
    pub fn row_vec_mul(&self, row: &[Polynomial]) -> Result<Vec<Polynomial>> {
        if row.len() != self.rows {
            return Err(Error::domain("row vector length mismatch"));
        }
        let mut out = Vec::with_capacity(self.cols);
        for j in 0..self.cols {
            let mut acc = self.ring.zero();
            for i in 0..self.rows {
                acc = acc.add(&row[i].mul(self.get(i, j)));
            }
            out.push(acc);
        }
        Ok(out)
    }

    fn det_rec(&self, rows: &[usize], cols: &[usize]) -> Polynomial {
        if rows.is_empty() {
            return self.ring.one();
        }
        // Laplace expansion along the first listed row
        let mut acc = self.ring.zero();
        let r = rows[0];
        for (k, &c) in cols.iter().enumerate() {
            let e = self.get(r, c);
            if e.is_zero() {
                continue;
            }
            let sub_cols: Vec<usize> = cols
                .iter()
                .enumerate()
                .filter_map(|(i, &cc)| if i != k { Some(cc) } else { None })
                .collect();
            let minor = self.det_rec(&rows[1..], &sub_cols);
            let term = e.mul(&minor);
            acc = if k % 2 == 0 { acc.add(&term) } else { acc.sub(&term) };
        }
        acc
    }

    pub fn determinant(&self) -> Result<Polynomial> {
        if self.rows != self.cols {
            return Err(Error::domain("determinant of a non-square matrix"));
        }
        let idx: Vec<usize> = (0..self.rows).collect();
        Ok(self.det_rec(&idx, &idx))
    }

    /// Ideal generated by all t×t minors, 1 ≤ t ≤ min(rows, cols).
    pub fn minors(&self, t: usize) -> Result<Ideal> {
        if t == 0 {
            return Err(Error::domain("minor size must be at least 1"));
        }
        if t > self.rows || t > self.cols {
            return Err(Error::domain(format!(
                "minor size {} out of range for {}x{} matrix",
                t, self.rows, self.cols
            )));
        }
        let mut gens = Vec::new();
        for rows in combinations(self.rows, t) {
            for cols in combinations(self.cols, t) {
                gens.push(self.det_rec(&rows, &cols));
            }
        }
        Ok(Ideal::new(&self.ring, gens))
    }

    /// Minor ideal with out-of-range sizes mapped to (1) / (0) instead of an
    /// error; used by Fitting-ideal computations.
    pub fn minors_clamped(&self, t: isize) -> Ideal {
        if t <= 0 {
            return Ideal::new(&self.ring, vec![self.ring.one()]);
        }
        let t = t as usize;
        if t > self.rows || t > self.cols {
            return Ideal::zero(&self.ring);
        }
        self.minors(t).unwrap()
    }
}

pub(crate) fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(n: usize, k: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(n, k, i + 1, cur, out);
            cur.pop();
        }
    }
    rec(n, k, 0, &mut cur, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Field;
    use crate::monomial::MonomialOrder;
    use crate::text::parse_poly;

    fn uring() -> RingRef {
        PolyRing::new(
            Field::Rational,
            vec!["U11".into(), "U12".into(), "U21".into(), "U22".into()],
            MonomialOrder::GrevLex,
        )
        .unwrap()
    }

    #[test]
    fn generic_two_by_two_determinant() {
        let r = uring();
        let m = PolyMatrix::new(
            &r,
            2,
            2,
            vec![r.var(0), r.var(1), r.var(2), r.var(3)],
        )
        .unwrap();
        let det = m.minors(2).unwrap();
        let expect = Ideal::new(&r, vec![parse_poly(&r, "U11*U22 - U12*U21").unwrap()]);
        assert!(det.equals(&expect).unwrap());
    }

    #[test]
    fn identity_minors_unit() {
        let r = uring();
        let m = PolyMatrix::identity(&r, 2);
        assert!(!m.minors(2).unwrap().is_proper());
    }

    #[test]
    fn dependent_rows_vanish() {
        let r = PolyRing::new(
            Field::Rational,
            vec!["x".into(), "y".into()],
            MonomialOrder::GrevLex,
        )
        .unwrap();
        let m = PolyMatrix::new(
            &r,
            2,
            2,
            vec![r.var(0), r.var(1), r.var(0), r.var(1)],
        )
        .unwrap();
        assert!(m.minors(2).unwrap().is_zero_ideal());
        assert!(m.minors(3).is_err());
    }

    #[test]
    fn minors_permutation_invariant() {
        let r = uring();
        let m = PolyMatrix::new(
            &r,
            2,
            2,
            vec![r.var(0), r.var(1), r.var(2), r.var(3)],
        )
        .unwrap();
        let swapped = m.select_columns(&[1, 0]);
        assert!(m
            .minors(1)
            .unwrap()
            .equals(&swapped.minors(1).unwrap())
            .unwrap());
        assert!(m
            .minors(2)
            .unwrap()
            .equals(&swapped.minors(2).unwrap())
            .unwrap());
    }
}
