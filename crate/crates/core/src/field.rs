//! Exact coefficient fields.
//!
//! A [`Field`] is a descriptor object: elements are plain values and every
//! operation goes through the descriptor. This lets a prime field carry its
//! modulus at runtime while the rationals stay a zero-sized type.

use alloc::string::{String, ToString};
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::Error;
use crate::matrix::{self, Matrix};

#[allow(clippy::wrong_self_convention)]
pub trait Field: Clone + fmt::Debug {
    type Elem: Clone + PartialEq + Eq + fmt::Debug;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn from_i64(&self, n: i64) -> Self::Elem;

    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    /// Multiplicative inverse, `None` for zero.
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;
    fn is_zero(&self, a: &Self::Elem) -> bool;

    /// 0 for the rationals, `p` for `F_p`.
    fn characteristic(&self) -> u64;

    /// Maps the rational number `num/den` into the field.
    fn from_fraction(&self, num: &BigInt, den: &BigInt) -> Result<Self::Elem, Error>;

    fn format(&self, a: &Self::Elem) -> String;

    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }

    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Option<Self::Elem> {
        self.inv(b).map(|bi| self.mul(a, &bi))
    }

    fn pow(&self, a: &Self::Elem, mut e: u32) -> Self::Elem {
        let mut base = a.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        acc
    }

    /// Rank of a matrix over this field.
    fn rank(&self, m: &Matrix<Self::Elem>) -> usize {
        matrix::gauss_rank(self, m)
    }

    /// Parses `n`, `-n` or `n/d`.
    fn parse(&self, s: &str) -> Result<Self::Elem, Error> {
        let (num, den) = parse_fraction(s)?;
        self.from_fraction(&num, &den)
    }
}

pub(crate) fn parse_fraction(s: &str) -> Result<(BigInt, BigInt), Error> {
    let s = s.trim();
    let bad = || Error::Parse(alloc::format!("invalid rational `{s}`"));
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let num: BigInt = n.parse().map_err(|_| bad())?;
    let den: BigInt = d.parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(Error::Parse(alloc::format!("zero denominator in `{s}`")));
    }
    Ok((num, den))
}

/// The field of rational numbers with arbitrary-precision numerator and
/// denominator.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Rationals;

impl Field for Rationals {
    type Elem = BigRational;

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }

    fn one(&self) -> BigRational {
        BigRational::one()
    }

    fn from_i64(&self, n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }

    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }

    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }

    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }

    fn inv(&self, a: &BigRational) -> Option<BigRational> {
        if a.is_zero() {
            None
        } else {
            Some(a.recip())
        }
    }

    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }

    fn characteristic(&self) -> u64 {
        0
    }

    fn from_fraction(&self, num: &BigInt, den: &BigInt) -> Result<BigRational, Error> {
        if den.is_zero() {
            return Err(Error::Parse("zero denominator".into()));
        }
        // Ratio::new reduces and normalizes the sign of the denominator.
        Ok(BigRational::new(num.clone(), den.clone()))
    }

    fn format(&self, a: &BigRational) -> String {
        a.to_string()
    }

    fn rank(&self, m: &Matrix<BigRational>) -> usize {
        bareiss_rank(m)
    }
}

/// Rank over the rationals by fraction-free elimination: rows are cleared of
/// denominators and reduced with Bareiss' exact-division update.
pub fn bareiss_rank(m: &Matrix<BigRational>) -> usize {
    let (rows, cols) = (m.rows(), m.cols());
    let mut a: alloc::vec::Vec<alloc::vec::Vec<BigInt>> = (0..rows)
        .map(|i| {
            let row = m.row(i);
            let lcm = row
                .iter()
                .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
            row.iter()
                .map(|x| x.numer() * (&lcm / x.denom()))
                .collect()
        })
        .collect();

    let mut rank = 0;
    let mut prev = BigInt::one();
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let Some(piv) = (rank..rows).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        a.swap(rank, piv);
        for r in rank + 1..rows {
            for c in col + 1..cols {
                let v = &a[rank][col] * &a[r][c] - &a[r][col] * &a[rank][c];
                a[r][c] = v / &prev;
            }
            a[r][col] = BigInt::zero();
        }
        prev = a[rank][col].clone();
        rank += 1;
    }
    rank
}

/// The prime field `F_p`. Intended for exhaustive oracles over small fields.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    /// Fails unless `p` is prime and below 2^32.
    pub fn new(p: u64) -> Result<Self, Error> {
        if p >= 1 << 32 || !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(Self { p })
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    fn reduce_big(&self, n: &BigInt) -> u64 {
        let p = BigInt::from(self.p);
        let r = n.mod_floor(&p);
        r.to_u64().unwrap_or(0)
    }
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl Field for PrimeField {
    type Elem = u64;

    fn zero(&self) -> u64 {
        0
    }

    fn one(&self) -> u64 {
        1 % self.p
    }

    fn from_i64(&self, n: i64) -> u64 {
        n.rem_euclid(self.p as i64) as u64
    }

    fn add(&self, a: &u64, b: &u64) -> u64 {
        (a + b) % self.p
    }

    fn sub(&self, a: &u64, b: &u64) -> u64 {
        (a + self.p - b) % self.p
    }

    fn mul(&self, a: &u64, b: &u64) -> u64 {
        ((*a as u128 * *b as u128) % self.p as u128) as u64
    }

    fn neg(&self, a: &u64) -> u64 {
        (self.p - a) % self.p
    }

    fn inv(&self, a: &u64) -> Option<u64> {
        if *a == 0 {
            return None;
        }
        // Fermat: a^(p-2).
        Some(self.pow(a, (self.p - 2) as u32))
    }

    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }

    fn characteristic(&self) -> u64 {
        self.p
    }

    fn from_fraction(&self, num: &BigInt, den: &BigInt) -> Result<u64, Error> {
        let d = self.reduce_big(den);
        let di = self.inv(&d).ok_or_else(|| {
            Error::Parse(alloc::format!("denominator {den} vanishes mod {}", self.p))
        })?;
        Ok(self.mul(&self.reduce_big(num), &di))
    }

    fn format(&self, a: &u64) -> String {
        a.to_string()
    }
}
