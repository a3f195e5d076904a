//! Gröbner-basis kernel and the ideal-theoretic calculus built on it.

use crate::error::{Error, Result};

use crate::monomial::{Monomial, MonomialOrder};
use crate::poly::{PolyRing, Polynomial, RingOps, RingRef};
use std::cmp::Ordering;
use std::sync::OnceLock;

/// Fresh elimination variable; `@` keeps it out of the user namespace.
pub const AUX_VAR: &str = "@t";

/// Ideal handle: generator list plus a write-once cached reduced Gröbner
/// basis under the ring's declared order.
#[derive(Debug)]
pub struct Ideal {
    ring: RingRef,
    gens: Vec<Polynomial>,
    gb: OnceLock<Vec<Polynomial>>,
}

impl Clone for Ideal {
    fn clone(&self) -> Self {
        let gb = OnceLock::new();
        if let Some(b) = self.gb.get() {
            let _ = gb.set(b.clone());
        }
        Ideal {
            ring: self.ring.clone(),
            gens: self.gens.clone(),
            gb,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Height {
    Finite(usize),
    Infinite,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct DimensionResult {
    /// Krull dimension of R/I; -1 for the unit ideal.
    pub dim: i64,
    pub height: Height,
}

impl Ideal {
    /// Zero generators are purged; the zero ideal keeps an empty list.
    pub fn new(ring: &RingRef, gens: Vec<Polynomial>) -> Ideal {
        let gens = gens.into_iter().filter(|g| !g.is_zero()).collect();
        Ideal {
            ring: ring.clone(),
            gens,
            gb: OnceLock::new(),
        }
    }

    pub fn zero(ring: &RingRef) -> Ideal {
        Ideal::new(ring, Vec::new())
    }

    pub fn ring(&self) -> &RingRef {
        &self.ring
    }

    pub fn gens(&self) -> &[Polynomial] {
        &self.gens
    }

    pub fn is_zero_ideal(&self) -> bool {
        self.gens.is_empty()
    }

    /// Reduced Gröbner basis under the ring's order; computed once and cached.
    pub fn groebner_basis(&self) -> &[Polynomial] {
        self.gb.get_or_init(|| buchberger(&self.ring, &self.gens))
    }

    pub fn normal_form(&self, f: &Polynomial) -> Result<Polynomial> {
        if !PolyRing::same(f.ring(), &self.ring) {
            return Err(Error::RingMismatch("normal form across rings".into()));
        }
        Ok(reduce(f, self.groebner_basis()))
    }

    pub fn contains_poly(&self, f: &Polynomial) -> Result<bool> {
        Ok(self.normal_form(f)?.is_zero())
    }

    pub fn contains_ideal(&self, other: &Ideal) -> Result<bool> {
        for g in other.gens() {
            if !self.contains_poly(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn equals(&self, other: &Ideal) -> Result<bool> {
        if !PolyRing::same(&self.ring, &other.ring) {
            return Err(Error::RingMismatch("ideal comparison across rings".into()));
        }
        Ok(self.groebner_basis() == other.groebner_basis())
    }

    pub fn is_proper(&self) -> bool {
        !self
            .groebner_basis()
            .iter()
            .any(|g| g.is_constant() && !g.is_zero())
    }

    pub fn sum(&self, other: &Ideal) -> Ideal {
        let mut gens = self.gens.clone();
        gens.extend(other.gens.iter().cloned());
        Ideal::new(&self.ring, gens)
    }

    pub fn sum_polys(&self, extra: &[Polynomial]) -> Ideal {
        let mut gens = self.gens.clone();
        gens.extend(extra.iter().cloned());
        Ideal::new(&self.ring, gens)
    }

    /// Generators of I ∩ K[vars k..n], computed under a block-elimination
    /// order and returned in the original ring.
    pub fn eliminate(&self, first_k: usize) -> Ideal {
        let n = self.ring.nvars();
        let elim_ring = PolyRing::new(
            self.ring.field(),
            self.ring.var_names().to_vec(),
            MonomialOrder::Block(first_k),
        )
        .unwrap();
        let id: Vec<usize> = (0..n).collect();
        let gens: Vec<Polynomial> = self
            .gens
            .iter()
            .map(|g| g.inject(&elim_ring, &id))
            .collect();
        let gb = buchberger(&elim_ring, &gens);
        let kept: Vec<Polynomial> = gb
            .into_iter()
            .filter(|g| g.terms().iter().all(|(m, _)| (0..first_k).all(|i| m.exp(i) == 0)))
            .map(|g| g.inject(&self.ring, &id))
            .collect();
        Ideal::new(&self.ring, kept)
    }

    /// I ∩ J via the auxiliary-variable construction: eliminate `@t` from
    /// t·I + (1−t)·J with `@t` prepended.
    pub fn intersect(&self, other: &Ideal) -> Result<Ideal> {
        if !PolyRing::same(&self.ring, &other.ring) {
            return Err(Error::RingMismatch("intersection across rings".into()));
        }
        let ext = extend_prepend(&self.ring, &[AUX_VAR], MonomialOrder::Block(1))?;
        let shift: Vec<usize> = (1..=self.ring.nvars()).collect();
        let t = ext.var(0);
        let one_minus_t = ext.one().sub(&t);
        let mut gens = Vec::new();
        for g in &self.gens {
            gens.push(t.mul(&g.inject(&ext, &shift)));
        }
        for g in &other.gens {
            gens.push(one_minus_t.mul(&g.inject(&ext, &shift)));
        }
        let gb = buchberger(&ext, &gens);
        let kept: Vec<Polynomial> = gb
            .into_iter()
            .filter(|g| g.terms().iter().all(|(m, _)| m.exp(0) == 0))
            .map(|g| {
                // drop the aux coordinate
                let terms = g
                    .terms()
                    .iter()
                    .map(|(m, c)| {
                        (
                            Monomial::from_exps(crate::monomial::Exps::from_slice(&m.exps()[1..])),
                            c.clone(),
                        )
                    })
                    .collect();
                Polynomial::from_terms(&self.ring, terms)
            })
            .collect();
        Ok(Ideal::new(&self.ring, kept))
    }

    /// I : J = ⋂_{g ∈ gens(J), g ≠ 0} (I ∩ (g)) / g.
    pub fn colon(&self, other: &Ideal) -> Result<Ideal> {
        if !PolyRing::same(&self.ring, &other.ring) {
            return Err(Error::RingMismatch("colon across rings".into()));
        }
        let nonzero: Vec<&Polynomial> = other.gens.iter().filter(|g| !g.is_zero()).collect();
        if nonzero.is_empty() {
            return Err(Error::domain("colon by the zero ideal"));
        }
        let mut acc: Option<Ideal> = None;
        for g in nonzero {
            let principal = Ideal::new(&self.ring, vec![(*g).clone()]);
            let inter = self.intersect(&principal)?;
            let divided: Vec<Polynomial> = inter
                .gens()
                .iter()
                .map(|h| {
                    h.try_div_exact(g)
                        .expect("element of I ∩ (g) is a multiple of g")
                })
                .collect();
            let quotient = Ideal::new(&self.ring, divided);
            acc = Some(match acc {
                None => quotient,
                Some(prev) => prev.intersect(&quotient)?,
            });
        }
        Ok(acc.unwrap())
    }

    /// Rabinowitsch: f ∈ √I ⇔ 1 ∈ I + (1 − t·f).
    pub fn radical_member(&self, f: &Polynomial) -> Result<bool> {
        if !PolyRing::same(f.ring(), &self.ring) {
            return Err(Error::RingMismatch("radical membership across rings".into()));
        }
        if f.is_zero() {
            return Ok(true);
        }
        let ext = extend_prepend(&self.ring, &[AUX_VAR], MonomialOrder::GrevLex)?;
        let shift: Vec<usize> = (1..=self.ring.nvars()).collect();
        let t = ext.var(0);
        let mut gens: Vec<Polynomial> = self.gens.iter().map(|g| g.inject(&ext, &shift)).collect();
        gens.push(ext.one().sub(&t.mul(&f.inject(&ext, &shift))));
        let gb = buchberger(&ext, &gens);
        Ok(gb.iter().any(|g| g.is_constant() && !g.is_zero()))
    }

    /// Dimension by the independent-set method on the initial ideal;
    /// height = n − dim for proper ideals.
    pub fn dimension(&self) -> DimensionResult {
        let n = self.ring.nvars();
        assert!(n <= 64, "dimension supports at most 64 variables");
        if !self.is_proper() {
            return DimensionResult {
                dim: -1,
                height: Height::Infinite,
            };
        }
        let masks: Vec<u64> = self
            .groebner_basis()
            .iter()
            .map(|g| g.leading().unwrap().0.support_mask())
            .collect();
        let dim = max_independent_set(n, &masks);
        DimensionResult {
            dim: dim as i64,
            height: Height::Finite(n - dim),
        }
    }
}

/// Largest subset of variables whose span avoids every support mask.
pub(crate) fn max_independent_set(n: usize, lm_masks: &[u64]) -> usize {
    let mut best = 0usize;
    for subset in 0u64..(1u64 << n) {
        let size = subset.count_ones() as usize;
        if size <= best {
            continue;
        }
        if lm_masks.iter().all(|m| m & !subset != 0) {
            best = size;
        }
    }
    best
}

/// Same field and names with extra variables prepended.
pub fn extend_prepend(ring: &RingRef, names: &[&str], order: MonomialOrder) -> Result<RingRef> {
    let mut vars: Vec<String> = names.iter().map(|s| s.to_string()).collect();
    vars.extend(ring.var_names().iter().cloned());
    PolyRing::new(ring.field(), vars, order)
}

/// Same field and names with extra variables appended.
pub fn extend_append(ring: &RingRef, names: &[String], order: MonomialOrder) -> Result<RingRef> {
    let mut vars: Vec<String> = ring.var_names().to_vec();
    vars.extend(names.iter().cloned());
    PolyRing::new(ring.field(), vars, order)
}

/// Full multivariate division remainder: no remainder term is divisible by
/// any leading monomial of `gs`.
pub fn reduce(f: &Polynomial, gs: &[Polynomial]) -> Polynomial {
    let ring = f.ring().clone();
    let field = ring.field();
    let leads: Vec<(&Monomial, u64, u32)> = gs
        .iter()
        .map(|g| {
            let lm = g.leading().expect("nonzero reducer").0;
            (lm, lm.support_mask(), lm.deg())
        })
        .collect();
    let mut rem_terms: Vec<(Monomial, crate::field::Coeff)> = Vec::new();
    let mut p = f.clone();
    'outer: while let Some((lm, lc)) = p.leading() {
        let mask = lm.support_mask();
        let deg = lm.deg();
        for (gi, (glm, gmask, gdeg)) in leads.iter().enumerate() {
            if *gdeg <= deg && gmask & !mask == 0 {
                if let Some(q) = glm.try_div_into(lm) {
                    let g = &gs[gi];
                    let glc = g.leading().unwrap().1;
                    let qc = field.mul(lc, &field.inv(glc).unwrap());
                    p = p.sub(&g.mul_term(&q, &qc));
                    continue 'outer;
                }
            }
        }
        rem_terms.push((lm.clone(), lc.clone()));
        p = p.sub(&ring.monomial_poly(lm.clone(), lc.clone()));
    }
    Polynomial::from_terms(&ring, rem_terms)
}

/// The S-polynomial of two nonzero polynomials over the same ring.
pub fn s_polynomial(f: &Polynomial, g: &Polynomial) -> Polynomial {
    let field = f.ring().field();
    let (flm, flc) = f.leading().unwrap();
    let (glm, glc) = g.leading().unwrap();
    let l = flm.lcm(glm);
    let fm = flm.try_div_into(&l).unwrap();
    let gm = glm.try_div_into(&l).unwrap();
    let fs = f.mul_term(&fm, &field.inv(flc).unwrap());
    let gs = g.mul_term(&gm, &field.inv(glc).unwrap());
    fs.sub(&gs)
}

/// Buchberger with the coprime and chain pair-discarding criteria and
/// normal (smallest-lcm) selection; output is the reduced basis, monic,
/// sorted descending by leading monomial.
pub fn buchberger(ring: &RingRef, gens: &[Polynomial]) -> Vec<Polynomial> {
    let mut basis: Vec<Polynomial> = gens.iter().filter(|g| !g.is_zero()).cloned().collect();
    if basis.is_empty() {
        return Vec::new();
    }
    // pending pairs sorted descending by lcm so the smallest pops last
    let mut pairs: Vec<(Monomial, usize, usize)> = Vec::new();
    let mut pending = std::collections::HashSet::<(usize, usize)>::new();

    let push_pair = |pairs: &mut Vec<(Monomial, usize, usize)>,
                     pending: &mut std::collections::HashSet<(usize, usize)>,
                     basis: &[Polynomial],
                     i: usize,
                     j: usize| {
        let l = basis[i]
            .leading()
            .unwrap()
            .0
            .lcm(basis[j].leading().unwrap().0);
        let pos = pairs
            .binary_search_by(|(m, pi, pj)| {
                match ring.cmp_monomials(&l, m) {
                    Ordering::Equal => (i, j).cmp(&(*pi, *pj)),
                    ord => ord,
                }
            })
            .unwrap_or_else(|e| e);
        pairs.insert(pos, (l, i, j));
        pending.insert((i, j));
    };

    for j in 1..basis.len() {
        for i in 0..j {
            push_pair(&mut pairs, &mut pending, &basis, i, j);
        }
    }

    while let Some((l, i, j)) = pairs.pop() {
        pending.remove(&(i, j));
        let fi = &basis[i];
        let fj = &basis[j];
        if fi.leading().unwrap().0.coprime(fj.leading().unwrap().0) {
            continue;
        }
        // chain criterion
        let mut skip = false;
        for (k, g) in basis.iter().enumerate() {
            if k == i || k == j {
                continue;
            }
            let lmk = g.leading().unwrap().0;
            if lmk.divides(&l)
                && !pending.contains(&(i.min(k), i.max(k)))
                && !pending.contains(&(j.min(k), j.max(k)))
            {
                skip = true;
                break;
            }
        }
        if skip {
            continue;
        }
        let s = s_polynomial(fi, fj);
        let h = reduce(&s, &basis);
        if !h.is_zero() {
            let new = basis.len();
            basis.push(h.monic());
            for i in 0..new {
                push_pair(&mut pairs, &mut pending, &basis, i, new);
            }
        }
    }

    interreduce(ring, basis)
}

fn interreduce(ring: &RingRef, mut basis: Vec<Polynomial>) -> Vec<Polynomial> {
    // minimalize: drop elements whose leading monomial is divisible by another's
    let mut keep = vec![true; basis.len()];
    for i in 0..basis.len() {
        if !keep[i] {
            continue;
        }
        let lmi = basis[i].leading().unwrap().0.clone();
        for j in 0..basis.len() {
            if i == j || !keep[j] {
                continue;
            }
            let lmj = basis[j].leading().unwrap().0;
            if lmj.divides(&lmi) && (lmi != *lmj || j < i) {
                keep[i] = false;
                break;
            }
        }
    }
    let minimal: Vec<Polynomial> = basis
        .drain(..)
        .zip(keep)
        .filter_map(|(g, k)| if k { Some(g) } else { None })
        .collect();
    // tail-reduce each against the others
    let mut reduced = Vec::with_capacity(minimal.len());
    for i in 0..minimal.len() {
        let others: Vec<Polynomial> = minimal
            .iter()
            .enumerate()
            .filter_map(|(j, g)| if j != i { Some(g.clone()) } else { None })
            .collect();
        let r = reduce(&minimal[i], &others);
        if !r.is_zero() {
            reduced.push(r.monic());
        }
    }
    reduced.sort_by(|a, b| ring.cmp_monomials(b.leading().unwrap().0, a.leading().unwrap().0));
    reduced
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Field;
    use crate::text::parse_poly;

    fn qring(vars: &[&str]) -> RingRef {
        PolyRing::new(
            Field::Rational,
            vars.iter().map(|s| s.to_string()).collect(),
            MonomialOrder::GrevLex,
        )
        .unwrap()
    }

    fn ideal(r: &RingRef, gens: &[&str]) -> Ideal {
        Ideal::new(r, gens.iter().map(|s| parse_poly(r, s).unwrap()).collect())
    }

    #[test]
    fn gb_difference() {
        let r = qring(&["x", "y"]);
        let i = ideal(&r, &["x^2", "x^2 + y"]);
        let gb = i.groebner_basis();
        assert_eq!(gb.len(), 2);
        assert_eq!(gb[0].to_string(), "x^2");
        assert_eq!(gb[1].to_string(), "y");
    }

    #[test]
    fn gb_zero_ideal() {
        let r = qring(&["x", "y"]);
        assert!(Ideal::zero(&r).groebner_basis().is_empty());
    }

    #[test]
    fn gb_univariate_gcd() {
        // oracle: gcd(x^2-1, x^3-1) = x-1
        let r = qring(&["x"]);
        let i = ideal(&r, &["x^2 - 1", "x^3 - 1"]);
        let gb = i.groebner_basis();
        assert_eq!(gb.len(), 1);
        assert_eq!(gb[0].to_string(), "x - 1");
    }

    #[test]
    fn normal_form_cases() {
        let r = qring(&["x", "y"]);
        let i = ideal(&r, &["x"]);
        assert!(i
            .normal_form(&parse_poly(&r, "x^2").unwrap())
            .unwrap()
            .is_zero());
        let j = ideal(&r, &["x^2"]);
        assert_eq!(
            j.normal_form(&parse_poly(&r, "y").unwrap()).unwrap().to_string(),
            "y"
        );
        // x^2 y mod (x^2 - y) = y^2, by hand division
        let k = ideal(&r, &["x^2 - y"]);
        assert_eq!(
            k.normal_form(&parse_poly(&r, "x^2*y").unwrap())
                .unwrap()
                .to_string(),
            "y^2"
        );
        // idempotence
        let f = parse_poly(&r, "x^3*y + x*y^2 + 5").unwrap();
        let nf = k.normal_form(&f).unwrap();
        assert_eq!(k.normal_form(&nf).unwrap(), nf);
    }

    #[test]
    fn membership_and_equality() {
        let r = qring(&["x", "y"]);
        let i = ideal(&r, &["x", "y"]);
        assert!(i.contains_poly(&parse_poly(&r, "x + y").unwrap()).unwrap());
        let a = ideal(&r, &["x^2", "x*y"]);
        let b = ideal(&r, &["x^2", "x*y", "x^2 + x*y"]);
        assert!(a.equals(&b).unwrap());
        let j = ideal(&r, &["x^2"]);
        assert!(!j.contains_poly(&parse_poly(&r, "x").unwrap()).unwrap());
    }

    #[test]
    fn eliminate_cases() {
        let r = qring(&["t", "x"]);
        let i = ideal(&r, &["t*x - 1"]);
        assert!(i.eliminate(1).is_zero_ideal());

        let r2 = qring(&["t", "x", "y"]);
        let j = ideal(&r2, &["t - x", "t - y"]);
        let e = j.eliminate(1);
        assert!(e.contains_poly(&parse_poly(&r2, "x - y").unwrap()).unwrap());
        assert_eq!(e.groebner_basis().len(), 1);

        let k = ideal(&r2, &["t*x", "t - y"]);
        let e2 = k.eliminate(1);
        let expect = ideal(&r2, &["x*y"]);
        assert!(e2.equals(&expect).unwrap());
    }

    #[test]
    fn intersect_cases() {
        let r = qring(&["x", "y"]);
        let a = ideal(&r, &["x"]);
        let b = ideal(&r, &["y"]);
        assert!(a
            .intersect(&b)
            .unwrap()
            .equals(&ideal(&r, &["x*y"]))
            .unwrap());
        assert!(a.intersect(&a).unwrap().equals(&a).unwrap());
        let c = ideal(&r, &["x^2", "y"]);
        let expect = ideal(&r, &["x^2", "x*y"]);
        assert!(c.intersect(&a).unwrap().equals(&expect).unwrap());
    }

    #[test]
    fn colon_cases() {
        let r = qring(&["x", "y"]);
        let i = ideal(&r, &["x^2", "y^2"]);
        let j = ideal(&r, &["x", "y"]);
        let q = i.colon(&j).unwrap();
        // sandwich: I ⊆ (I:J), (I:J)·J ⊆ I
        assert!(q.contains_ideal(&i).unwrap());
        for a in q.gens() {
            for b in j.gens() {
                assert!(i.contains_poly(&a.mul(b)).unwrap());
            }
        }
        // I : (1) = I
        let unit = ideal(&r, &["1"]);
        assert!(i.colon(&unit).unwrap().equals(&i).unwrap());
        // colon by zero ideal rejected
        assert!(i.colon(&Ideal::zero(&r)).is_err());
    }

    #[test]
    fn radical_membership() {
        let r = qring(&["x", "y"]);
        let i = ideal(&r, &["x^2"]);
        assert!(i.radical_member(&parse_poly(&r, "x").unwrap()).unwrap());
        assert!(!i.radical_member(&parse_poly(&r, "y").unwrap()).unwrap());
        let j = ideal(&r, &["x^2", "y^3"]);
        assert!(j.radical_member(&parse_poly(&r, "x + y").unwrap()).unwrap());
    }

    #[test]
    fn dimension_cases() {
        let r = qring(&["x", "y"]);
        let i = ideal(&r, &["x"]);
        let d = i.dimension();
        assert_eq!(d.dim, 1);
        assert_eq!(d.height, Height::Finite(1));

        let hyper = ideal(&r, &["x*y"]);
        assert_eq!(hyper.dimension().dim, 1);

        let r4 = qring(&["x0", "x1", "x2", "x3"]);
        let m = ideal(&r4, &["x0", "x1", "x2", "x3"]);
        let d4 = m.dimension();
        assert_eq!(d4.dim, 0);
        assert_eq!(d4.height, Height::Finite(4));

        let unit = ideal(&r, &["1"]);
        assert_eq!(unit.dimension().dim, -1);
        assert_eq!(unit.dimension().height, Height::Infinite);

        assert_eq!(Ideal::zero(&r).dimension().dim, 2);
    }

    #[test]
    fn buchberger_criterion_spolys_reduce_to_zero() {
        let r = qring(&["x", "y", "z"]);
        let i = ideal(&r, &["x^2 - y*z", "y^2 - x*z", "z^2 - x*y"]);
        let gb = i.groebner_basis();
        for a in 0..gb.len() {
            for b in (a + 1)..gb.len() {
                let s = s_polynomial(&gb[a], &gb[b]);
                assert!(reduce(&s, gb).is_zero());
            }
        }
    }
}
