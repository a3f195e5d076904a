//! Sparse exact multivariate polynomials.

use crate::error::{Error, Result};
use crate::field::{Coeff, Field};
use crate::monomial::{cmp_mono, Monomial, MonomialOrder};
use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

pub type RingRef = Arc<PolyRing>;

#[derive(Debug, PartialEq, Eq)]
pub struct PolyRing {
    field: Field,
    vars: Vec<String>,
    order: MonomialOrder,
}

impl PolyRing {
    pub fn new(field: Field, vars: Vec<String>, order: MonomialOrder) -> Result<RingRef> {
        for (i, v) in vars.iter().enumerate() {
            if vars[..i].contains(v) {
                return Err(Error::domain(format!("duplicate variable name `{}`", v)));
            }
        }
        Ok(Arc::new(PolyRing { field, vars, order }))
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn var_names(&self) -> &[String] {
        &self.vars
    }

    pub fn var_name(&self, i: usize) -> &str {
        &self.vars[i]
    }

    pub fn find_var(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn same(a: &RingRef, b: &RingRef) -> bool {
        Arc::ptr_eq(a, b) || **a == **b
    }

    pub fn cmp_monomials(&self, a: &Monomial, b: &Monomial) -> Ordering {
        cmp_mono(self.order, a, b)
    }
}

/// Ring operations and constructors that need the `Arc` handle.
pub trait RingOps {
    fn zero(&self) -> Polynomial;
    fn one(&self) -> Polynomial;
    fn var(&self, i: usize) -> Polynomial;
    fn constant(&self, c: Coeff) -> Polynomial;
    fn constant_i64(&self, v: i64) -> Polynomial;
    fn monomial_poly(&self, m: Monomial, c: Coeff) -> Polynomial;
}

impl RingOps for RingRef {
    fn zero(&self) -> Polynomial {
        Polynomial {
            ring: self.clone(),
            terms: Vec::new(),
        }
    }

    fn one(&self) -> Polynomial {
        self.constant(self.field().one())
    }

    fn var(&self, i: usize) -> Polynomial {
        assert!(i < self.nvars());
        self.monomial_poly(Monomial::var(self.nvars(), i, 1), self.field().one())
    }

    fn constant(&self, c: Coeff) -> Polynomial {
        if self.field().is_zero(&c) {
            return self.zero();
        }
        self.monomial_poly(Monomial::one(self.nvars()), c)
    }

    fn constant_i64(&self, v: i64) -> Polynomial {
        self.constant(self.field().from_i64(v))
    }

    fn monomial_poly(&self, m: Monomial, c: Coeff) -> Polynomial {
        if self.field().is_zero(&c) {
            return self.zero();
        }
        Polynomial {
            ring: self.clone(),
            terms: vec![(m, c)],
        }
    }
}

/// Sparse polynomial; terms are kept in strictly descending order under the
/// ring's monomial order with no zero coefficients.
#[derive(Clone, Debug)]
pub struct Polynomial {
    ring: RingRef,
    terms: Vec<(Monomial, Coeff)>,
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        PolyRing::same(&self.ring, &other.ring) && self.terms == other.terms
    }
}
impl Eq for Polynomial {}

impl Polynomial {
    pub fn from_terms(ring: &RingRef, terms: Vec<(Monomial, Coeff)>) -> Polynomial {
        let field = ring.field();
        let mut map: HashMap<Monomial, Coeff> = HashMap::with_capacity(terms.len());
        for (m, c) in terms {
            assert_eq!(m.nvars(), ring.nvars(), "monomial arity mismatch");
            match map.entry(m) {
                std::collections::hash_map::Entry::Occupied(mut e) => {
                    let s = field.add(e.get(), &c);
                    if field.is_zero(&s) {
                        e.remove();
                    } else {
                        *e.get_mut() = s;
                    }
                }
                std::collections::hash_map::Entry::Vacant(e) => {
                    if !field.is_zero(&c) {
                        e.insert(c);
                    }
                }
            }
        }
        let mut v: Vec<(Monomial, Coeff)> = map.into_iter().collect();
        v.sort_by(|(a, _), (b, _)| ring.cmp_monomials(b, a));
        Polynomial {
            ring: ring.clone(),
            terms: v,
        }
    }

    pub fn ring(&self) -> &RingRef {
        &self.ring
    }

    pub fn terms(&self) -> &[(Monomial, Coeff)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.len() <= 1 && self.terms.iter().all(|(m, _)| m.is_one())
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.deg()).max()
    }

    /// Leading (maximal) term; `None` on zero.
    pub fn leading(&self) -> Option<(&Monomial, &Coeff)> {
        self.terms.first().map(|(m, c)| (m, c))
    }

    /// Leading term as an operation with the spec'd error on zero input.
    pub fn leading_term(&self) -> Result<(Monomial, Coeff)> {
        self.leading()
            .map(|(m, c)| (m.clone(), c.clone()))
            .ok_or_else(|| Error::domain("leading term of the zero polynomial"))
    }

    fn assert_same_ring(&self, other: &Polynomial) {
        assert!(
            PolyRing::same(&self.ring, &other.ring),
            "polynomials from different rings"
        );
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        self.assert_same_ring(other);
        let field = self.ring.field();
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < other.terms.len() {
            let (ma, ca) = &self.terms[i];
            let (mb, cb) = &other.terms[j];
            match self.ring.cmp_monomials(ma, mb) {
                Ordering::Greater => {
                    out.push((ma.clone(), ca.clone()));
                    i += 1;
                }
                Ordering::Less => {
                    out.push((mb.clone(), cb.clone()));
                    j += 1;
                }
                Ordering::Equal => {
                    let s = field.add(ca, cb);
                    if !field.is_zero(&s) {
                        out.push((ma.clone(), s));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.terms[i..]);
        out.extend_from_slice(&other.terms[j..]);
        Polynomial {
            ring: self.ring.clone(),
            terms: out,
        }
    }

    pub fn neg(&self) -> Polynomial {
        let field = self.ring.field();
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), field.neg(c)))
                .collect(),
        }
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        self.assert_same_ring(other);
        let field = self.ring.field();
        let mut map: HashMap<Monomial, Coeff> = HashMap::new();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let m = ma.mul(mb);
                let c = field.mul(ca, cb);
                match map.entry(m) {
                    std::collections::hash_map::Entry::Occupied(mut e) => {
                        let s = field.add(e.get(), &c);
                        if field.is_zero(&s) {
                            e.remove();
                        } else {
                            *e.get_mut() = s;
                        }
                    }
                    std::collections::hash_map::Entry::Vacant(e) => {
                        if !field.is_zero(&c) {
                            e.insert(c);
                        }
                    }
                }
            }
        }
        let mut v: Vec<(Monomial, Coeff)> = map.into_iter().collect();
        v.sort_by(|(a, _), (b, _)| self.ring.cmp_monomials(b, a));
        Polynomial {
            ring: self.ring.clone(),
            terms: v,
        }
    }

    pub fn scalar_mul(&self, c: &Coeff) -> Polynomial {
        let field = self.ring.field();
        if field.is_zero(c) {
            return self.ring.zero();
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, k)| (m.clone(), field.mul(k, c)))
                .collect(),
        }
    }

    pub fn mul_term(&self, m: &Monomial, c: &Coeff) -> Polynomial {
        let field = self.ring.field();
        if field.is_zero(c) {
            return self.ring.zero();
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(mm, k)| (mm.mul(m), field.mul(k, c)))
                .collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut acc = self.ring.one();
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Scale so the leading coefficient is 1. Zero stays zero.
    pub fn monic(&self) -> Polynomial {
        match self.leading() {
            None => self.clone(),
            Some((_, c)) => {
                let inv = self.ring.field().inv(c).expect("nonzero leading coefficient");
                self.scalar_mul(&inv)
            }
        }
    }

    /// Exact division by `g`; `None` when `g` does not divide `self`.
    pub fn try_div_exact(&self, g: &Polynomial) -> Option<Polynomial> {
        self.assert_same_ring(g);
        let field = self.ring.field();
        let (glm, glc) = g.leading()?;
        let glc_inv = field.inv(glc).unwrap();
        let mut rem = self.clone();
        let mut quot: Vec<(Monomial, Coeff)> = Vec::new();
        while let Some((lm, lc)) = rem.leading() {
            let qm = glm.try_div_into(lm)?;
            let qc = field.mul(lc, &glc_inv);
            rem = rem.sub(&g.mul_term(&qm, &qc));
            quot.push((qm, qc));
        }
        Some(Polynomial::from_terms(&self.ring, quot))
    }

    /// Checked arithmetic entry point used by the front end.
    pub fn binop(op: &str, f: &Polynomial, g: &Polynomial) -> Result<Polynomial> {
        if !PolyRing::same(f.ring(), g.ring()) {
            return Err(Error::RingMismatch(format!(
                "operands of `{}` live in different rings",
                op
            )));
        }
        match op {
            "add" => Ok(f.add(g)),
            "sub" => Ok(f.sub(g)),
            "mul" => Ok(f.mul(g)),
            _ => Err(Error::domain(format!("unknown operation `{}`", op))),
        }
    }

    /// Map into `target` by sending variable `i` to `images[i]`.
    pub fn substitute(&self, target: &RingRef, images: &[Polynomial]) -> Result<Polynomial> {
        if images.len() != self.ring.nvars() {
            return Err(Error::domain("substitution image count mismatch"));
        }
        for im in images {
            if !PolyRing::same(im.ring(), target) {
                return Err(Error::RingMismatch(
                    "substitution image outside target ring".into(),
                ));
            }
        }
        if self.ring.field() != target.field() {
            return Err(Error::RingMismatch("substitution across different fields".into()));
        }
        let mut acc = target.zero();
        for (m, c) in &self.terms {
            let mut t = target.constant(c.clone());
            for i in 0..self.ring.nvars() {
                let e = m.exp(i);
                if e > 0 {
                    t = t.mul(&images[i].pow(e));
                }
            }
            acc = acc.add(&t);
        }
        Ok(acc)
    }

    /// Cheap variable-renaming injection: variable `i` maps to variable
    /// `var_map[i]` of `target`. Coefficients are reused unchanged.
    pub fn inject(&self, target: &RingRef, var_map: &[usize]) -> Polynomial {
        assert_eq!(var_map.len(), self.ring.nvars());
        assert_eq!(self.ring.field(), target.field());
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut exps = vec![0u32; target.nvars()];
                for i in 0..m.nvars() {
                    exps[var_map[i]] += m.exp(i);
                }
                (Monomial::from_exps(crate::monomial::Exps::from_vec(exps)), c.clone())
            })
            .collect();
        Polynomial::from_terms(target, terms)
    }

    /// Injection by matching variable names; fails if a used variable is
    /// missing from the target ring.
    pub fn inject_by_name(&self, target: &RingRef) -> Result<Polynomial> {
        let mut var_map = Vec::with_capacity(self.ring.nvars());
        for name in self.ring.var_names() {
            match target.find_var(name) {
                Some(j) => var_map.push(j),
                None => {
                    let used = self
                        .terms
                        .iter()
                        .any(|(m, _)| m.exp(self.ring.find_var(name).unwrap()) > 0);
                    if used {
                        return Err(Error::RingMismatch(format!(
                            "variable `{}` missing from target ring",
                            name
                        )));
                    }
                    var_map.push(usize::MAX);
                }
            }
        }
        // unused missing variables map anywhere; route them to 0 safely
        let var_map: Vec<usize> = var_map
            .into_iter()
            .map(|v| if v == usize::MAX { 0 } else { v })
            .collect();
        Ok(self.inject(target, &var_map))
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(out, "0");
        }
        let field = self.ring.field();
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let neg = field.is_negative(c);
            let abs = if neg { field.neg(c) } else { c.clone() };
            if i == 0 {
                if neg {
                    write!(out, "-")?;
                }
            } else if neg {
                write!(out, " - ")?;
            } else {
                write!(out, " + ")?;
            }
            let mut wrote_factor = false;
            if !field.is_one(&abs) || m.is_one() {
                write!(out, "{}", abs)?;
                wrote_factor = true;
            }
            for v in 0..m.nvars() {
                let e = m.exp(v);
                if e == 0 {
                    continue;
                }
                if wrote_factor {
                    write!(out, "*")?;
                }
                write!(out, "{}", self.ring.var_name(v))?;
                if e > 1 {
                    write!(out, "^{}", e)?;
                }
                wrote_factor = true;
            }
        }
        Ok(())
    }
}
