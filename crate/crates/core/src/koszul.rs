//! The Koszul complex K_•(f;R) as a differential graded algebra.
//!
//! Elements are stored as maps from strictly increasing index subsets of
//! {1..r} (encoded as bitmasks) to polynomial coefficients. All signs derive
//! from transposition counts of the subset-merge, validated by ∂² = 0.

use crate::error::{Error, Result};
use crate::matrix::combinations;
use crate::module::{syzygies, syzygies_mod, FreeVector};
use crate::poly::{PolyRing, Polynomial, RingOps, RingRef};
use crate::ideal::Ideal;
use std::collections::BTreeMap;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KoszulElement {
    ring: RingRef,
    r: usize,
    terms: BTreeMap<u64, Polynomial>,
}

/// Number of inversions between two disjoint masks: pairs (i ∈ a, j ∈ b)
/// with i > j. Odd count flips the wedge sign.
fn merge_sign_negative(a: u64, b: u64) -> bool {
    let mut inv = 0u32;
    let mut bits = a;
    while bits != 0 {
        let i = bits.trailing_zeros();
        inv += (b & ((1u64 << i) - 1)).count_ones();
        bits &= bits - 1;
    }
    inv % 2 == 1
}

impl KoszulElement {
    pub fn zero(ring: &RingRef, r: usize) -> Self {
        KoszulElement {
            ring: ring.clone(),
            r,
            terms: BTreeMap::new(),
        }
    }

    /// The scalar c, a degree-0 form.
    pub fn scalar(r: usize, c: &Polynomial) -> Self {
        let mut e = Self::zero(c.ring(), r);
        e.add_term(0, c.clone());
        e
    }

    /// Basis form e_S for the subset encoded by `mask`.
    pub fn basis(ring: &RingRef, r: usize, mask: u64) -> Self {
        let mut e = Self::zero(ring, r);
        e.add_term(mask, ring.one());
        e
    }

    /// e_i, 0-indexed.
    pub fn generator(ring: &RingRef, r: usize, i: usize) -> Self {
        Self::basis(ring, r, 1u64 << i)
    }

    pub fn ring(&self) -> &RingRef {
        &self.ring
    }

    pub fn rank(&self) -> usize {
        self.r
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (u64, &Polynomial)> {
        self.terms.iter().map(|(m, p)| (*m, p))
    }

    pub fn coefficient(&self, mask: u64) -> Polynomial {
        self.terms
            .get(&mask)
            .cloned()
            .unwrap_or_else(|| self.ring.zero())
    }

    /// Coefficient of the top form e_1∧…∧e_r.
    pub fn top_coefficient(&self) -> Polynomial {
        let full = if self.r == 0 { 0 } else { (1u64 << self.r) - 1 };
        self.coefficient(full)
    }

    fn add_term(&mut self, mask: u64, p: Polynomial) {
        if p.is_zero() {
            return;
        }
        match self.terms.remove(&mask) {
            None => {
                self.terms.insert(mask, p);
            }
            Some(q) => {
                let s = q.add(&p);
                if !s.is_zero() {
                    self.terms.insert(mask, s);
                }
            }
        }
    }

    pub fn add(&self, other: &KoszulElement) -> Result<KoszulElement> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        for (m, p) in &other.terms {
            out.add_term(*m, p.clone());
        }
        Ok(out)
    }

    pub fn neg(&self) -> KoszulElement {
        KoszulElement {
            ring: self.ring.clone(),
            r: self.r,
            terms: self.terms.iter().map(|(m, p)| (*m, p.neg())).collect(),
        }
    }

    pub fn scale(&self, c: &Polynomial) -> KoszulElement {
        let mut out = Self::zero(&self.ring, self.r);
        for (m, p) in &self.terms {
            out.add_term(*m, p.mul(c));
        }
        out
    }

    fn check_compatible(&self, other: &KoszulElement) -> Result<()> {
        if self.r != other.r {
            return Err(Error::domain("Koszul rank mismatch"));
        }
        if !PolyRing::same(&self.ring, &other.ring) {
            return Err(Error::RingMismatch("Koszul elements over different rings".into()));
        }
        Ok(())
    }

    /// Exterior product with shuffle signs.
    pub fn wedge(&self, other: &KoszulElement) -> Result<KoszulElement> {
        self.check_compatible(other)?;
        let mut out = Self::zero(&self.ring, self.r);
        for (ma, pa) in &self.terms {
            for (mb, pb) in &other.terms {
                if ma & mb != 0 {
                    continue;
                }
                let prod = pa.mul(pb);
                let signed = if merge_sign_negative(*ma, *mb) {
                    prod.neg()
                } else {
                    prod
                };
                out.add_term(ma | mb, signed);
            }
        }
        Ok(out)
    }

    /// ∂(e_S) = Σ_k (−1)^{k+1} f_{S_k} e_{S∖S_k}, extended linearly.
    pub fn differential(&self, f: &[Polynomial]) -> Result<KoszulElement> {
        if f.len() != self.r {
            return Err(Error::domain("sequence length must match Koszul rank"));
        }
        let mut out = Self::zero(&self.ring, self.r);
        for (mask, p) in &self.terms {
            let mut bits = *mask;
            let mut k = 0usize; // 0-based position within S
            while bits != 0 {
                let i = bits.trailing_zeros() as usize;
                let coeff = p.mul(&f[i]);
                let signed = if k % 2 == 0 { coeff } else { coeff.neg() };
                out.add_term(mask & !(1u64 << i), signed);
                bits &= bits - 1;
                k += 1;
            }
        }
        Ok(out)
    }

    /// Cardinality of every stored subset, when they all agree.
    pub fn homogeneous_degree(&self) -> Option<usize> {
        let mut deg = None;
        for m in self.terms.keys() {
            let d = m.count_ones() as usize;
            match deg {
                None => deg = Some(d),
                Some(e) if e != d => return None,
                _ => {}
            }
        }
        deg
    }
}

#[derive(Clone, Debug)]
pub struct CycleBasis {
    pub degree: usize,
    pub generators: Vec<KoszulElement>,
}

/// Subsets of {1..r} of cardinality k as masks, in lexicographic order of
/// the increasing index lists.
pub(crate) fn subset_masks(r: usize, k: usize) -> Vec<u64> {
    combinations(r, k)
        .into_iter()
        .map(|c| c.iter().fold(0u64, |m, &i| m | (1u64 << i)))
        .collect()
}

fn cycles_impl(
    f: &[Polynomial],
    i: usize,
    modulus: Option<&Ideal>,
) -> Result<CycleBasis> {
    let r = f.len();
    if i > r {
        return Err(Error::domain(format!(
            "cycle degree {} out of range for rank {}",
            i, r
        )));
    }
    let ring = f
        .first()
        .ok_or_else(|| Error::precondition("empty sequence"))?
        .ring()
        .clone();
    if i == 0 {
        return Ok(CycleBasis {
            degree: 0,
            generators: vec![KoszulElement::scalar(r, &ring.one())],
        });
    }
    let src = subset_masks(r, i);
    let tgt = subset_masks(r, i - 1);
    let tgt_pos: BTreeMap<u64, usize> = tgt.iter().enumerate().map(|(p, m)| (*m, p)).collect();
    // columns of ∂_i as vectors in R^{|tgt|}
    let mut cols = Vec::with_capacity(src.len());
    for &mask in &src {
        let d = KoszulElement::basis(&ring, r, mask).differential(f)?;
        let mut entries = vec![ring.zero(); tgt.len()];
        for (m, p) in d.terms() {
            entries[tgt_pos[&m]] = p.clone();
        }
        cols.push(FreeVector::new(&ring, entries)?);
    }
    let syz = match modulus {
        None => syzygies(&cols)?,
        Some(b) => syzygies_mod(&cols, b)?,
    };
    let generators = syz
        .iter()
        .map(|s| {
            let mut z = KoszulElement::zero(&ring, r);
            for (pos, &mask) in src.iter().enumerate() {
                let c = s.entry(pos);
                if !c.is_zero() {
                    z.add_term(mask, c.clone());
                }
            }
            z
        })
        .collect();
    Ok(CycleBasis {
        degree: i,
        generators,
    })
}

/// Module generators of Z_i(f;R) = ker(∂_i: K_i → K_{i−1}).
pub fn cycles(f: &[Polynomial], i: usize) -> Result<CycleBasis> {
    cycles_impl(f, i, None)
}

/// Module generators of Z_i(f̄; R/b): kernel of ∂_i with entries read
/// modulo b, returned as lifts to R.
pub fn cycles_mod(f: &[Polynomial], i: usize, b: &Ideal) -> Result<CycleBasis> {
    cycles_impl(f, i, Some(b))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Field;
    use crate::monomial::MonomialOrder;
    use crate::text::parse_poly;

    fn qring() -> RingRef {
        PolyRing::new(
            Field::Rational,
            vec!["x".into(), "y".into()],
            MonomialOrder::GrevLex,
        )
        .unwrap()
    }

    fn uring() -> RingRef {
        PolyRing::new(
            Field::Rational,
            vec!["U11".into(), "U12".into(), "U21".into(), "U22".into()],
            MonomialOrder::GrevLex,
        )
        .unwrap()
    }

    #[test]
    fn wedge_basis_forms() {
        let r = qring();
        let e1 = KoszulElement::generator(&r, 2, 0);
        let e2 = KoszulElement::generator(&r, 2, 1);
        let w = e1.wedge(&e2).unwrap();
        assert_eq!(w.coefficient(0b11), r.one());
        assert!(e1.wedge(&e1).unwrap().is_zero());
        // anticommutativity in degree 1
        let w2 = e2.wedge(&e1).unwrap();
        assert_eq!(w2.coefficient(0b11), r.one().neg());
    }

    #[test]
    fn wedge_generic_columns() {
        let r = uring();
        // (U11·e1 + U21·e2) ∧ (U12·e1 + U22·e2) = (U11·U22 − U21·U12)·e{1,2}
        let z1 = KoszulElement::generator(&r, 2, 0)
            .scale(&r.var(0))
            .add(&KoszulElement::generator(&r, 2, 1).scale(&r.var(2)))
            .unwrap();
        let z2 = KoszulElement::generator(&r, 2, 0)
            .scale(&r.var(1))
            .add(&KoszulElement::generator(&r, 2, 1).scale(&r.var(3)))
            .unwrap();
        let w = z1.wedge(&z2).unwrap();
        let expect = parse_poly(&r, "U11*U22 - U12*U21").unwrap();
        assert_eq!(w.coefficient(0b11), expect);
    }

    #[test]
    fn differential_definitions() {
        let r = qring();
        let f = [
            parse_poly(&r, "x^2 + y").unwrap(),
            parse_poly(&r, "x^5").unwrap(),
        ];
        let e1 = KoszulElement::generator(&r, 2, 0);
        assert_eq!(e1.differential(&f).unwrap().coefficient(0), f[0]);
        let e12 = KoszulElement::basis(&r, 2, 0b11);
        let d = e12.differential(&f).unwrap();
        // ∂(e{1,2}) = f1·e2 − f2·e1
        assert_eq!(d.coefficient(0b10), f[0]);
        assert_eq!(d.coefficient(0b01), f[1].neg());
        assert!(d.differential(&f).unwrap().is_zero());
    }

    #[test]
    fn d_squared_zero_rank_three() {
        let r = qring();
        let f = [r.var(0), r.var(1), r.var(0).mul(&r.var(1))];
        let e123 = KoszulElement::basis(&r, 3, 0b111);
        let d = e123.differential(&f).unwrap();
        assert!(d.differential(&f).unwrap().is_zero());
    }

    #[test]
    fn leibniz_rule() {
        let r = qring();
        let f = [
            parse_poly(&r, "x^2 + y").unwrap(),
            parse_poly(&r, "x^5").unwrap(),
        ];
        let a = KoszulElement::generator(&r, 2, 0).scale(&r.var(1)); // degree 1
        let b = KoszulElement::generator(&r, 2, 1).scale(&r.var(0)); // degree 1
        let lhs = a.wedge(&b).unwrap().differential(&f).unwrap();
        let rhs = a
            .differential(&f)
            .unwrap()
            .wedge(&b)
            .unwrap()
            .add(&a.wedge(&b.differential(&f).unwrap()).unwrap().neg())
            .unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn cycles_of_regular_sequence() {
        let r = qring();
        let f = [
            parse_poly(&r, "x^2 + y").unwrap(),
            parse_poly(&r, "x^5").unwrap(),
        ];
        let z0 = cycles(&f, 0).unwrap();
        assert_eq!(z0.generators.len(), 1);
        assert_eq!(z0.generators[0].coefficient(0), r.one());

        let z1 = cycles(&f, 1).unwrap();
        assert_eq!(z1.generators.len(), 1);
        let g = &z1.generators[0];
        assert!(g.differential(&f).unwrap().is_zero());
        // up to unit: x^5·e1 − (x^2+y)·e2
        let c1 = g.coefficient(0b01);
        let c2 = g.coefficient(0b10);
        assert!(c1.mul(&f[0]).add(&c2.mul(&f[1])).is_zero());
        assert!(!c1.is_zero());

        let z2 = cycles(&f, 2).unwrap();
        assert!(z2.generators.is_empty());
        assert!(cycles(&f, 3).is_err());
    }

    #[test]
    fn every_cycle_generator_is_a_cycle() {
        let r = qring();
        let f = [r.var(0), r.var(1), r.var(0).pow(2)];
        for i in 0..=3 {
            for z in cycles(&f, i).unwrap().generators {
                assert!(z.differential(&f).unwrap().is_zero());
                assert_eq!(z.homogeneous_degree(), if i == 0 { Some(0) } else { Some(i) });
            }
        }
    }

    #[test]
    fn product_of_cycles_is_cycle() {
        let r = qring();
        let f = [r.var(0), r.var(1), r.var(0).mul(&r.var(1))];
        let z1 = cycles(&f, 1).unwrap();
        for a in &z1.generators {
            for b in &z1.generators {
                let w = a.wedge(b).unwrap();
                assert!(w.differential(&f).unwrap().is_zero());
            }
        }
    }
}
