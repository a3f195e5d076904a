//! Coefficient fields: exact rationals and prime fields F_p with p < 2^31.

use num::{BigInt, BigRational, One, Signed, Zero};
use std::fmt;

/// Field descriptor carried by every polynomial ring.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub enum Field {
    Rational,
    /// F_p for a prime p < 2^31.
    Prime(u32),
}

/// A scalar; the variant must agree with the owning ring's [`Field`].
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Coeff {
    Rat(BigRational),
    Fp(u64),
}

impl Field {
    pub fn zero(&self) -> Coeff {
        match self {
            Field::Rational => Coeff::Rat(BigRational::zero()),
            Field::Prime(_) => Coeff::Fp(0),
        }
    }

    pub fn one(&self) -> Coeff {
        match self {
            Field::Rational => Coeff::Rat(BigRational::one()),
            Field::Prime(_) => Coeff::Fp(1),
        }
    }

    pub fn from_i64(&self, v: i64) -> Coeff {
        match self {
            Field::Rational => Coeff::Rat(BigRational::from(BigInt::from(v))),
            Field::Prime(p) => {
                let p = *p as i64;
                Coeff::Fp(v.rem_euclid(p) as u64)
            }
        }
    }

    pub fn from_ratio(&self, num: &BigInt, den: &BigInt) -> Option<Coeff> {
        if den.is_zero() {
            return None;
        }
        match self {
            Field::Rational => Some(Coeff::Rat(BigRational::new(num.clone(), den.clone()))),
            Field::Prime(p) => {
                let p_big = BigInt::from(*p);
                let n = ((num % &p_big) + &p_big) % &p_big;
                let d = ((den % &p_big) + &p_big) % &p_big;
                let n: u64 = n.try_into().ok()?;
                let d: u64 = d.try_into().ok()?;
                if d == 0 {
                    return None;
                }
                let dinv = fp_inv(d, *p as u64)?;
                Some(Coeff::Fp(n * dinv % *p as u64))
            }
        }
    }

    pub fn add(&self, a: &Coeff, b: &Coeff) -> Coeff {
        match (self, a, b) {
            (Field::Rational, Coeff::Rat(x), Coeff::Rat(y)) => Coeff::Rat(x + y),
            (Field::Prime(p), Coeff::Fp(x), Coeff::Fp(y)) => Coeff::Fp((x + y) % *p as u64),
            _ => panic!("coefficient does not match field"),
        }
    }

    pub fn sub(&self, a: &Coeff, b: &Coeff) -> Coeff {
        self.add(a, &self.neg(b))
    }

    pub fn mul(&self, a: &Coeff, b: &Coeff) -> Coeff {
        match (self, a, b) {
            (Field::Rational, Coeff::Rat(x), Coeff::Rat(y)) => Coeff::Rat(x * y),
            (Field::Prime(p), Coeff::Fp(x), Coeff::Fp(y)) => Coeff::Fp(x * y % *p as u64),
            _ => panic!("coefficient does not match field"),
        }
    }

    pub fn neg(&self, a: &Coeff) -> Coeff {
        match (self, a) {
            (Field::Rational, Coeff::Rat(x)) => Coeff::Rat(-x),
            (Field::Prime(p), Coeff::Fp(x)) => {
                let p = *p as u64;
                Coeff::Fp(if *x == 0 { 0 } else { p - x })
            }
            _ => panic!("coefficient does not match field"),
        }
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self, a: &Coeff) -> Option<Coeff> {
        match (self, a) {
            (Field::Rational, Coeff::Rat(x)) => {
                if x.is_zero() {
                    None
                } else {
                    Some(Coeff::Rat(x.recip()))
                }
            }
            (Field::Prime(p), Coeff::Fp(x)) => fp_inv(*x, *p as u64).map(Coeff::Fp),
            _ => panic!("coefficient does not match field"),
        }
    }

    pub fn is_zero(&self, a: &Coeff) -> bool {
        match a {
            Coeff::Rat(x) => x.is_zero(),
            Coeff::Fp(x) => *x == 0,
        }
    }

    pub fn is_one(&self, a: &Coeff) -> bool {
        match a {
            Coeff::Rat(x) => x.is_one(),
            Coeff::Fp(x) => *x == 1,
        }
    }

    /// True when the coefficient prints with a leading minus sign.
    pub fn is_negative(&self, a: &Coeff) -> bool {
        match a {
            Coeff::Rat(x) => x.is_negative(),
            Coeff::Fp(_) => false,
        }
    }
}

fn fp_inv(a: u64, p: u64) -> Option<u64> {
    if a % p == 0 {
        return None;
    }
    // Fermat: a^(p-2) mod p.
    let mut base = a % p;
    let mut exp = p - 2;
    let mut acc: u64 = 1;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    Some(acc)
}

impl fmt::Display for Coeff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Coeff::Rat(x) => write!(f, "{}", x),
            Coeff::Fp(x) => write!(f, "{}", x),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn field_axioms_fp() {
        let f = Field::Prime(5);
        for v in 0..5i64 {
            let a = f.from_i64(v);
            assert!(f.is_zero(&f.add(&a, &f.neg(&a))));
            if !f.is_zero(&a) {
                let inv = f.inv(&a).unwrap();
                assert!(f.is_one(&f.mul(&a, &inv)));
            }
        }
    }

    #[test]
    fn field_axioms_rational() {
        let f = Field::Rational;
        let a = f.from_ratio(&BigInt::from(6), &BigInt::from(-4)).unwrap();
        // reduced with positive denominator
        match &a {
            Coeff::Rat(r) => {
                assert_eq!(r.numer(), &BigInt::from(-3));
                assert_eq!(r.denom(), &BigInt::from(2));
            }
            _ => unreachable!(),
        }
        assert!(f.is_one(&f.mul(&a, &f.inv(&a).unwrap())));
    }

    #[test]
    fn fp_mod_reduction() {
        let f = Field::Prime(5);
        // 2 * 3 = 6 = 1 mod 5
        assert!(f.is_one(&f.mul(&f.from_i64(2), &f.from_i64(3))));
        assert_eq!(f.from_i64(-1), Coeff::Fp(4));
    }
}
