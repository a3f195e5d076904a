//! Free-module Gröbner machinery: kernels (syzygies), membership, and
//! expressing elements in terms of generators.

use crate::error::{Error, Result};
use crate::field::Coeff;
use crate::ideal::Ideal;
use crate::matrix::PolyMatrix;
use crate::monomial::Monomial;
use crate::poly::{PolyRing, Polynomial, RingOps, RingRef};
use std::cmp::Ordering;

/// Element of a free module R^rank with polynomial entries.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FreeVector {
    ring: RingRef,
    entries: Vec<Polynomial>,
}

impl FreeVector {
    pub fn new(ring: &RingRef, entries: Vec<Polynomial>) -> Result<Self> {
        for e in &entries {
            if !PolyRing::same(e.ring(), ring) {
                return Err(Error::RingMismatch("vector entry outside ring".into()));
            }
        }
        Ok(FreeVector {
            ring: ring.clone(),
            entries,
        })
    }

    pub fn zero(ring: &RingRef, rank: usize) -> Self {
        FreeVector {
            ring: ring.clone(),
            entries: (0..rank).map(|_| ring.zero()).collect(),
        }
    }

    pub fn unit(ring: &RingRef, rank: usize, pos: usize) -> Self {
        let mut v = Self::zero(ring, rank);
        v.entries[pos] = ring.one();
        v
    }

    pub fn ring(&self) -> &RingRef {
        &self.ring
    }

    pub fn rank(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[Polynomial] {
        &self.entries
    }

    pub fn entry(&self, i: usize) -> &Polynomial {
        &self.entries[i]
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero())
    }

    pub fn dot(&self, polys: &[Polynomial]) -> Polynomial {
        assert_eq!(polys.len(), self.rank());
        let mut acc = self.ring.zero();
        for (e, p) in self.entries.iter().zip(polys) {
            acc = acc.add(&e.mul(p));
        }
        acc
    }
}

/// Internal flat representation: (position, monomial, coefficient) terms in
/// strictly descending order under the module order.
#[derive(Clone, Debug, PartialEq, Eq)]
struct ModElem {
    terms: Vec<(u32, Monomial, Coeff)>,
}

/// Position-block module order: components below `split` dominate the rest;
/// inside a block the ring order decides, then the smaller position wins.
#[derive(Clone)]
struct ModCtx {
    ring: RingRef,
    split: usize,
}

impl ModCtx {
    fn cmp(&self, a: &(u32, Monomial, Coeff), b: &(u32, Monomial, Coeff)) -> Ordering {
        let ba = (a.0 as usize) >= self.split;
        let bb = (b.0 as usize) >= self.split;
        match (ba, bb) {
            (false, true) => return Ordering::Greater,
            (true, false) => return Ordering::Less,
            _ => {}
        }
        match self.ring.cmp_monomials(&a.1, &b.1) {
            Ordering::Equal => b.0.cmp(&a.0),
            ord => ord,
        }
    }

    fn from_vec(&self, v: &FreeVector) -> ModElem {
        let mut terms: Vec<(u32, Monomial, Coeff)> = Vec::new();
        for (pos, p) in v.entries().iter().enumerate() {
            for (m, c) in p.terms() {
                terms.push((pos as u32, m.clone(), c.clone()));
            }
        }
        terms.sort_by(|a, b| self.cmp(b, a));
        ModElem { terms }
    }

    fn to_vec(&self, e: &ModElem, rank: usize) -> FreeVector {
        let mut per_pos: Vec<Vec<(Monomial, Coeff)>> = vec![Vec::new(); rank];
        for (p, m, c) in &e.terms {
            per_pos[*p as usize].push((m.clone(), c.clone()));
        }
        FreeVector {
            ring: self.ring.clone(),
            entries: per_pos
                .into_iter()
                .map(|ts| Polynomial::from_terms(&self.ring, ts))
                .collect(),
        }
    }

    fn add(&self, a: &ModElem, b: &ModElem) -> ModElem {
        let field = self.ring.field();
        let mut out = Vec::with_capacity(a.terms.len() + b.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < a.terms.len() && j < b.terms.len() {
            match self.cmp(&a.terms[i], &b.terms[j]) {
                Ordering::Greater => {
                    out.push(a.terms[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push(b.terms[j].clone());
                    j += 1;
                }
                Ordering::Equal => {
                    let s = field.add(&a.terms[i].2, &b.terms[j].2);
                    if !field.is_zero(&s) {
                        out.push((a.terms[i].0, a.terms[i].1.clone(), s));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a.terms[i..]);
        out.extend_from_slice(&b.terms[j..]);
        ModElem { terms: out }
    }

    fn neg(&self, a: &ModElem) -> ModElem {
        let field = self.ring.field();
        ModElem {
            terms: a
                .terms
                .iter()
                .map(|(p, m, c)| (*p, m.clone(), field.neg(c)))
                .collect(),
        }
    }

    fn sub(&self, a: &ModElem, b: &ModElem) -> ModElem {
        self.add(a, &self.neg(b))
    }

    fn mul_term(&self, a: &ModElem, m: &Monomial, c: &Coeff) -> ModElem {
        let field = self.ring.field();
        ModElem {
            terms: a
                .terms
                .iter()
                .map(|(p, mm, k)| (*p, mm.mul(m), field.mul(k, c)))
                .collect(),
        }
    }

    fn monic(&self, a: &ModElem) -> ModElem {
        match a.terms.first() {
            None => a.clone(),
            Some((_, _, c)) => {
                let field = self.ring.field();
                let inv = field.inv(c).unwrap();
                ModElem {
                    terms: a
                        .terms
                        .iter()
                        .map(|(p, m, k)| (*p, m.clone(), field.mul(k, &inv)))
                        .collect(),
                }
            }
        }
    }

    /// Full normal form against `basis`.
    fn reduce(&self, f: &ModElem, basis: &[ModElem]) -> ModElem {
        let field = self.ring.field();
        let mut rem: Vec<(u32, Monomial, Coeff)> = Vec::new();
        let mut p = f.clone();
        'outer: while let Some((pos, lm, lc)) = p.terms.first().cloned() {
            for g in basis {
                let (gpos, glm, glc) = g.terms.first().expect("nonzero reducer");
                if *gpos == pos {
                    if let Some(q) = glm.try_div_into(&lm) {
                        let qc = field.mul(&lc, &field.inv(glc).unwrap());
                        p = self.sub(&p, &self.mul_term(g, &q, &qc));
                        continue 'outer;
                    }
                }
            }
            rem.push((pos, lm.clone(), lc.clone()));
            p = self.sub(
                &p,
                &ModElem {
                    terms: vec![(pos, lm, lc)],
                },
            );
        }
        ModElem { terms: rem }
    }

    fn s_pair(&self, f: &ModElem, g: &ModElem) -> Option<ModElem> {
        let field = self.ring.field();
        let (fp, flm, flc) = f.terms.first()?;
        let (gp, glm, glc) = g.terms.first()?;
        if fp != gp {
            return None;
        }
        let l = flm.lcm(glm);
        let fm = flm.try_div_into(&l).unwrap();
        let gm = glm.try_div_into(&l).unwrap();
        let fs = self.mul_term(f, &fm, &field.inv(flc).unwrap());
        let gs = self.mul_term(g, &gm, &field.inv(glc).unwrap());
        Some(self.sub(&fs, &gs))
    }

    fn buchberger(&self, gens: &[ModElem]) -> Vec<ModElem> {
        let mut basis: Vec<ModElem> = gens
            .iter()
            .filter(|g| !g.terms.is_empty())
            .map(|g| self.monic(g))
            .collect();
        let mut queue: Vec<(usize, usize)> = Vec::new();
        for j in 1..basis.len() {
            for i in 0..j {
                queue.push((i, j));
            }
        }
        // normal selection: smallest lcm first among same-position pairs
        while !queue.is_empty() {
            let mut best: Option<(usize, (u32, Monomial))> = None;
            for (qi, &(i, j)) in queue.iter().enumerate() {
                let (fp, flm, _) = basis[i].terms.first().unwrap();
                let (gp, glm, _) = basis[j].terms.first().unwrap();
                if fp != gp {
                    continue;
                }
                let key = (*fp, flm.lcm(glm));
                let better = match &best {
                    None => true,
                    Some((_, bk)) => {
                        key.0 < bk.0
                            || (key.0 == bk.0
                                && self.ring.cmp_monomials(&key.1, &bk.1) == Ordering::Less)
                    }
                };
                if better {
                    best = Some((qi, key));
                }
            }
            let (qi, _) = match best {
                Some(b) => b,
                None => break, // only cross-position pairs remain
            };
            let (i, j) = queue.swap_remove(qi);
            let s = match self.s_pair(&basis[i], &basis[j]) {
                Some(s) => s,
                None => continue,
            };
            let h = self.reduce(&s, &basis);
            if !h.terms.is_empty() {
                let new = basis.len();
                basis.push(self.monic(&h));
                for k in 0..new {
                    queue.push((k, new));
                }
            }
        }
        self.interreduce(basis)
    }

    fn interreduce(&self, basis: Vec<ModElem>) -> Vec<ModElem> {
        let mut keep = vec![true; basis.len()];
        for i in 0..basis.len() {
            if !keep[i] {
                continue;
            }
            let (pi, mi, _) = basis[i].terms.first().unwrap().clone();
            for j in 0..basis.len() {
                if i == j || !keep[j] {
                    continue;
                }
                let (pj, mj, _) = basis[j].terms.first().unwrap();
                if *pj == pi && mj.divides(&mi) && (mi != *mj || j < i) {
                    keep[i] = false;
                    break;
                }
            }
        }
        let minimal: Vec<ModElem> = basis
            .into_iter()
            .zip(keep)
            .filter_map(|(g, k)| if k { Some(g) } else { None })
            .collect();
        let mut out = Vec::with_capacity(minimal.len());
        for i in 0..minimal.len() {
            let others: Vec<ModElem> = minimal
                .iter()
                .enumerate()
                .filter_map(|(j, g)| if j != i { Some(g.clone()) } else { None })
                .collect();
            let r = self.reduce(&minimal[i], &others);
            if !r.terms.is_empty() {
                out.push(self.monic(&r));
            }
        }
        out.sort_by(|a, b| self.cmp(b.terms.first().unwrap(), a.terms.first().unwrap()));
        out
    }
}

fn check_family(g: &[FreeVector]) -> Result<(RingRef, usize)> {
    let first = g
        .first()
        .ok_or_else(|| Error::precondition("empty generator family"))?;
    let ring = first.ring().clone();
    let rank = first.rank();
    for v in g {
        if !PolyRing::same(v.ring(), &ring) {
            return Err(Error::RingMismatch("mixed rings in family".into()));
        }
        if v.rank() != rank {
            return Err(Error::domain("mixed ranks in family"));
        }
    }
    Ok((ring, rank))
}

/// Generators of { h ∈ R^k : Σ h_i·g_i = 0 }, by a Gröbner basis of the
/// graph module R^m ⊕ R^k under the order eliminating the first m positions.
pub fn syzygies(g: &[FreeVector]) -> Result<Vec<FreeVector>> {
    let (ring, m) = check_family(g)?;
    let k = g.len();
    let ctx = ModCtx {
        ring: ring.clone(),
        split: m,
    };
    let graph: Vec<ModElem> = g
        .iter()
        .enumerate()
        .map(|(i, v)| {
            let mut entries = v.entries().to_vec();
            entries.extend((0..k).map(|j| if j == i { ring.one() } else { ring.zero() }));
            ctx.from_vec(&FreeVector {
                ring: ring.clone(),
                entries,
            })
        })
        .collect();
    let gb = ctx.buchberger(&graph);
    let mut out = Vec::new();
    for e in &gb {
        if e.terms.iter().all(|(p, _, _)| (*p as usize) >= m) {
            let full = ctx.to_vec(e, m + k);
            let tail = FreeVector {
                ring: ring.clone(),
                entries: full.entries()[m..].to_vec(),
            };
            if !tail.is_zero() {
                out.push(tail);
            }
        }
    }
    Ok(out)
}

/// Syzygies of the images of `g` in (R/b)^m: kernel generators of
/// R^k → (R/b)^m, obtained by adjoining b·ε_l relations and projecting.
pub fn syzygies_mod(g: &[FreeVector], b: &Ideal) -> Result<Vec<FreeVector>> {
    let (ring, m) = check_family(g)?;
    let k = g.len();
    let mut fam = g.to_vec();
    for l in 0..m {
        for bg in b.gens() {
            let mut v = FreeVector::zero(&ring, m);
            v.entries[l] = bg.clone();
            fam.push(v);
        }
    }
    let syz = syzygies(&fam)?;
    let mut out = Vec::new();
    for s in syz {
        let head = FreeVector {
            ring: ring.clone(),
            entries: s.entries()[..k].to_vec(),
        };
        if !head.is_zero() {
            out.push(head);
        }
    }
    Ok(out)
}

/// Membership of `v` in the submodule generated by `gens`.
pub fn module_contains(gens: &[FreeVector], v: &FreeVector) -> Result<bool> {
    if gens.is_empty() {
        return Ok(v.is_zero());
    }
    let (ring, rank) = check_family(gens)?;
    if v.rank() != rank || !PolyRing::same(v.ring(), &ring) {
        return Err(Error::domain("vector shape mismatch"));
    }
    let ctx = ModCtx {
        ring: ring.clone(),
        split: rank,
    };
    let gens_m: Vec<ModElem> = gens.iter().map(|g| ctx.from_vec(g)).collect();
    let gb = ctx.buchberger(&gens_m);
    Ok(ctx.reduce(&ctx.from_vec(v), &gb).terms.is_empty())
}

/// Expresses polynomials as R-combinations of a fixed family `f`, via the
/// scalar graph module R ⊕ R^r.
pub struct Lifter {
    ring: RingRef,
    r: usize,
    ctx: ModCtx,
    gb: Vec<ModElem>,
}

impl Lifter {
    pub fn new(f: &[Polynomial]) -> Result<Lifter> {
        let first = f
            .first()
            .ok_or_else(|| Error::precondition("empty family to lift through"))?;
        let ring = first.ring().clone();
        let r = f.len();
        let ctx = ModCtx {
            ring: ring.clone(),
            split: 1,
        };
        let graph: Vec<ModElem> = f
            .iter()
            .enumerate()
            .map(|(i, p)| {
                let mut entries = vec![p.clone()];
                entries.extend((0..r).map(|j| if j == i { ring.one() } else { ring.zero() }));
                ctx.from_vec(&FreeVector {
                    ring: ring.clone(),
                    entries,
                })
            })
            .collect();
        let gb = ctx.buchberger(&graph);
        Ok(Lifter { ring, r, ctx, gb })
    }

    /// Cofactors h with a = Σ h_i·f_i, or `None` when a ∉ (f).
    pub fn lift(&self, a: &Polynomial) -> Option<Vec<Polynomial>> {
        let mut entries = vec![a.clone()];
        entries.extend((0..self.r).map(|_| self.ring.zero()));
        let v = FreeVector {
            ring: self.ring.clone(),
            entries,
        };
        let rem = self.ctx.reduce(&self.ctx.from_vec(&v), &self.gb);
        let full = self.ctx.to_vec(&rem, 1 + self.r);
        if !full.entry(0).is_zero() {
            return None;
        }
        Some(full.entries()[1..].iter().map(|w| w.neg()).collect())
    }
}

/// Fitt_0(I/𝔞) for I = (f), 𝔞 = (f·Φ): r×r minors of [Φ | Syz(f)].
pub fn fitting_zero(f: &[Polynomial], phi: &PolyMatrix) -> Result<Ideal> {
    let r = f.len();
    if phi.rows() != r {
        return Err(Error::domain("presentation matrix row count must match |f|"));
    }
    let ring = f[0].ring().clone();
    let as_vecs: Vec<FreeVector> = f
        .iter()
        .map(|p| FreeVector::new(&ring, vec![p.clone()]).unwrap())
        .collect();
    let syz = syzygies(&as_vecs)?;
    let mut entries = Vec::new();
    for i in 0..r {
        for j in 0..phi.cols() {
            entries.push(phi.get(i, j).clone());
        }
        for s in &syz {
            entries.push(s.entry(i).clone());
        }
    }
    let pres = PolyMatrix::new(&ring, r, phi.cols() + syz.len(), entries)?;
    Ok(pres.minors_clamped(r as isize))
}
