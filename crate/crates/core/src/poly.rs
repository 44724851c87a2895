//! Homogeneous polynomials in `x0..x{n-1}`.
//!
//! Monomials are exponent vectors. The fixed monomial order is graded
//! lexicographic with `x0 > x1 > ... > x{n-1}`: within one degree,
//! `x0^d` comes first and `x{n-1}^d` last.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::Error;
use crate::field::Field;

pub type Exponents = Vec<u32>;

/// All exponent vectors of `num_vars` variables summing to `degree`, in
/// descending lexicographic order.
pub fn monomials(num_vars: usize, degree: u32) -> Vec<Exponents> {
    fn go(prefix: &mut Exponents, left: usize, degree: u32, out: &mut Vec<Exponents>) {
        if left == 1 {
            prefix.push(degree);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        for e in (0..=degree).rev() {
            prefix.push(e);
            go(prefix, left - 1, degree - e, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if num_vars == 0 {
        if degree == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    go(&mut Vec::with_capacity(num_vars), num_vars, degree, &mut out);
    out
}

/// `dim S_d` for `S = k[x0..x{n-1}]`, zero for negative `d`.
pub fn num_monomials(num_vars: usize, degree: i64) -> usize {
    if degree < 0 {
        return 0;
    }
    if num_vars == 0 {
        return usize::from(degree == 0);
    }
    // C(degree + n - 1, n - 1)
    let k = num_vars as u128 - 1;
    let mut acc: u128 = 1;
    for i in 1..=k {
        acc = acc * (degree as u128 + i) / i;
    }
    acc as usize
}

/// Position of each monomial in a list.
pub fn monomial_index(monos: &[Exponents]) -> BTreeMap<Exponents, usize> {
    monos.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect()
}

/// A homogeneous polynomial. The zero polynomial exists at every degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomogPoly<E> {
    num_vars: usize,
    degree: u32,
    terms: BTreeMap<Exponents, E>,
}

impl<E: Clone + PartialEq> HomogPoly<E> {
    pub fn zero(num_vars: usize, degree: u32) -> Self {
        Self { num_vars, degree, terms: BTreeMap::new() }
    }

    pub fn constant<F: Field<Elem = E>>(field: &F, num_vars: usize, c: E) -> Self {
        let mut p = Self::zero(num_vars, 0);
        if !field.is_zero(&c) {
            p.terms.insert(vec![0; num_vars], c);
        }
        p
    }

    pub fn one<F: Field<Elem = E>>(field: &F, num_vars: usize) -> Self {
        Self::constant(field, num_vars, field.one())
    }

    pub fn variable<F: Field<Elem = E>>(field: &F, num_vars: usize, i: usize) -> Self {
        let mut e = vec![0; num_vars];
        e[i] = 1;
        let mut p = Self::zero(num_vars, 1);
        p.terms.insert(e, field.one());
        p
    }

    /// The linear form `Σ coeffs[i] * x_i`.
    pub fn linear<F: Field<Elem = E>>(field: &F, coeffs: &[E]) -> Self {
        let n = coeffs.len();
        let terms = coeffs.iter().enumerate().filter(|(_, c)| !field.is_zero(c)).map(|(i, c)| {
            let mut e = vec![0; n];
            e[i] = 1;
            (e, c.clone())
        });
        Self { num_vars: n, degree: 1, terms: terms.collect() }
    }

    /// Collects terms, summing repeated monomials and dropping zeros.
    pub fn from_terms<F: Field<Elem = E>>(
        field: &F,
        num_vars: usize,
        degree: u32,
        terms: impl IntoIterator<Item = (Exponents, E)>,
    ) -> Result<Self, Error> {
        let mut p = Self::zero(num_vars, degree);
        for (e, c) in terms {
            if e.len() != num_vars {
                return Err(Error::DimensionMismatch { expected: num_vars, found: e.len() });
            }
            let d: u32 = e.iter().sum();
            if d != degree {
                return Err(Error::DegreeMismatch { expected: degree.into(), found: d.into() });
            }
            p.add_term(field, e, c);
        }
        Ok(p)
    }

    fn add_term<F: Field<Elem = E>>(&mut self, field: &F, e: Exponents, c: E) {
        if field.is_zero(&c) {
            return;
        }
        match self.terms.get_mut(&e) {
            Some(v) => {
                *v = field.add(v, &c);
                if field.is_zero(v) {
                    self.terms.remove(&e);
                }
            }
            None => {
                self.terms.insert(e, c);
            }
        }
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in descending monomial order.
    pub fn terms(&self) -> impl Iterator<Item = (&Exponents, &E)> {
        self.terms.iter().rev()
    }

    pub fn coefficient<F: Field<Elem = E>>(&self, field: &F, e: &[u32]) -> E {
        self.terms.get(e).cloned().unwrap_or_else(|| field.zero())
    }

    /// The same polynomial recorded at another degree; only zero polynomials
    /// can change degree.
    pub fn with_degree(mut self, degree: u32) -> Result<Self, Error> {
        if !self.is_zero() && degree != self.degree {
            return Err(Error::DegreeMismatch { expected: degree.into(), found: self.degree.into() });
        }
        self.degree = degree;
        Ok(self)
    }

    fn check_compatible(&self, other: &Self) -> Result<(), Error> {
        if self.num_vars != other.num_vars {
            return Err(Error::DimensionMismatch { expected: self.num_vars, found: other.num_vars });
        }
        Ok(())
    }

    /// Sum of two polynomials of equal degree. A zero summand adopts the
    /// degree of the other one.
    pub fn add<F: Field<Elem = E>>(&self, field: &F, other: &Self) -> Result<Self, Error> {
        self.check_compatible(other)?;
        if other.is_zero() {
            return Ok(self.clone());
        }
        if self.is_zero() {
            return Ok(other.clone());
        }
        if self.degree != other.degree {
            return Err(Error::DegreeMismatch { expected: self.degree.into(), found: other.degree.into() });
        }
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(field, e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn neg<F: Field<Elem = E>>(&self, field: &F) -> Self {
        let terms = self.terms.iter().map(|(e, c)| (e.clone(), field.neg(c))).collect();
        Self { num_vars: self.num_vars, degree: self.degree, terms }
    }

    pub fn sub<F: Field<Elem = E>>(&self, field: &F, other: &Self) -> Result<Self, Error> {
        self.add(field, &other.neg(field))
    }

    pub fn scale<F: Field<Elem = E>>(&self, field: &F, c: &E) -> Self {
        if field.is_zero(c) {
            return Self::zero(self.num_vars, self.degree);
        }
        let terms = self.terms.iter().map(|(e, v)| (e.clone(), field.mul(v, c))).collect();
        Self { num_vars: self.num_vars, degree: self.degree, terms }
    }

    pub fn mul<F: Field<Elem = E>>(&self, field: &F, other: &Self) -> Result<Self, Error> {
        self.check_compatible(other)?;
        let mut out = Self::zero(self.num_vars, self.degree + other.degree);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.add_term(field, e, field.mul(ca, cb));
            }
        }
        Ok(out)
    }

    pub fn pow<F: Field<Elem = E>>(&self, field: &F, e: u32) -> Self {
        let mut acc = Self::one(field, self.num_vars);
        for _ in 0..e {
            acc = acc.mul(field, self).expect("same ring");
        }
        acc
    }

    /// Value at the given coordinates (no normalization is applied, so
    /// scaling the point by `c` scales the value by `c^degree`).
    pub fn eval<F: Field<Elem = E>>(&self, field: &F, point: &[E]) -> Result<E, Error> {
        if point.len() != self.num_vars {
            return Err(Error::DimensionMismatch { expected: self.num_vars, found: point.len() });
        }
        let mut total = field.zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (x, &k) in point.iter().zip(e) {
                if k > 0 {
                    t = field.mul(&t, &field.pow(x, k));
                }
            }
            total = field.add(&total, &t);
        }
        Ok(total)
    }

    /// Coefficient vector with respect to `monomials(num_vars, degree)`.
    pub fn coefficients<F: Field<Elem = E>>(&self, field: &F) -> Vec<E> {
        monomials(self.num_vars, self.degree)
            .iter()
            .map(|m| self.coefficient(field, m))
            .collect()
    }

    /// Text form, e.g. `3*x0^2*x1 - 1/2*x2^3`.
    pub fn format<F: Field<Elem = E>>(&self, field: &F) -> String {
        if self.is_zero() {
            return String::from("0");
        }
        let mut out = String::new();
        for (k, (e, c)) in self.terms().enumerate() {
            let mut coef = field.format(c);
            let negative = coef.starts_with('-');
            if negative {
                coef.remove(0);
            }
            if k == 0 {
                if negative {
                    out.push('-');
                }
            } else {
                out.push_str(if negative { " - " } else { " + " });
            }
            let mut factors: Vec<String> = Vec::new();
            let constant = e.iter().all(|&x| x == 0);
            if constant || coef != "1" {
                factors.push(coef);
            }
            for (i, &x) in e.iter().enumerate() {
                match x {
                    0 => {}
                    1 => factors.push(alloc::format!("x{i}")),
                    _ => factors.push(alloc::format!("x{i}^{x}")),
                }
            }
            out.push_str(&factors.join("*"));
        }
        out
    }

    /// Parses the text form. The degree is read off the terms; `0` parses to
    /// the zero polynomial of degree 0.
    pub fn parse<F: Field<Elem = E>>(field: &F, num_vars: usize, text: &str) -> Result<Self, Error> {
        let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(Error::Parse("empty polynomial".into()));
        }
        let mut pieces: Vec<(bool, &str)> = Vec::new();
        let bytes = compact.as_bytes();
        let mut start = 0;
        let mut negative = false;
        for i in 0..=bytes.len() {
            let at_sign = i < bytes.len()
                && (bytes[i] == b'+' || bytes[i] == b'-')
                && (i == 0 || !matches!(bytes[i - 1], b'^' | b'/' | b'*'));
            if i == bytes.len() || at_sign {
                if i > start {
                    pieces.push((negative, &compact[start..i]));
                } else if i > 0 {
                    return Err(Error::Parse(alloc::format!("dangling sign in `{text}`")));
                }
                if i < bytes.len() {
                    negative = bytes[i] == b'-';
                    start = i + 1;
                }
            }
        }

        let mut degree: Option<u32> = None;
        let mut terms = Vec::new();
        for (neg, piece) in pieces {
            let (e, mut c) = parse_term(field, num_vars, piece)?;
            if neg {
                c = field.neg(&c);
            }
            let d: u32 = e.iter().sum();
            match degree {
                None => degree = Some(d),
                Some(prev) if prev != d => {
                    return Err(Error::Parse(alloc::format!(
                        "`{text}` is not homogeneous (degrees {prev} and {d})"
                    )))
                }
                _ => {}
            }
            terms.push((e, c));
        }
        let p = Self::from_terms(field, num_vars, degree.unwrap_or(0), terms)?;
        if p.is_zero() {
            return Ok(Self::zero(num_vars, 0));
        }
        Ok(p)
    }
}

fn parse_term<F: Field>(field: &F, num_vars: usize, piece: &str) -> Result<(Exponents, F::Elem), Error> {
    let mut e = vec![0u32; num_vars];
    let mut c = field.one();
    for factor in piece.split('*') {
        if factor.is_empty() {
            return Err(Error::Parse(alloc::format!("empty factor in `{piece}`")));
        }
        if let Some(rest) = factor.strip_prefix('x') {
            let (idx, exp) = match rest.split_once('^') {
                Some((i, k)) => (i, k),
                None => (rest, "1"),
            };
            let idx: usize = idx
                .parse()
                .map_err(|_| Error::Parse(alloc::format!("bad variable `{factor}`")))?;
            let exp: u32 = exp
                .parse()
                .map_err(|_| Error::Parse(alloc::format!("bad exponent `{factor}`")))?;
            if idx >= num_vars {
                return Err(Error::Parse(alloc::format!(
                    "variable `x{idx}` out of range for {num_vars} variables"
                )));
            }
            e[idx] += exp;
        } else {
            c = field.mul(&c, &field.parse(factor)?);
        }
    }
    Ok((e, c))
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;
    use alloc::vec::Vec;
    use crate::field::Rationals;

    #[test]
    fn monomial_counts() {
        assert_eq!(monomials(3, 0), vec![vec![0, 0, 0]]);
        assert_eq!(monomials(3, 1).len(), 3);
        assert_eq!(monomials(3, 4).len(), 15);
        assert_eq!(num_monomials(3, 4), 15);
        assert_eq!(num_monomials(3, -1), 0);
        assert_eq!(num_monomials(4, 3), 20);
    }

    #[test]
    fn monomial_order_is_graded_lex() {
        assert_eq!(
            monomials(3, 2),
            vec![
                vec![2, 0, 0],
                vec![1, 1, 0],
                vec![1, 0, 1],
                vec![0, 2, 0],
                vec![0, 1, 1],
                vec![0, 0, 2]
            ]
        );
    }

    fn pt(v: &[i64]) -> Vec<num_rational::BigRational> {
        v.iter().map(|&x| Rationals.from_i64(x)).collect()
    }

    #[test]
    fn evaluation_examples() {
        let q = Rationals;
        let f = HomogPoly::parse(&q, 3, "x0*x2").unwrap();
        assert_eq!(f.eval(&q, &pt(&[1, 0, 1])).unwrap(), q.one());
        assert_eq!(f.eval(&q, &pt(&[0, 1, 1])).unwrap(), q.zero());
        let g = HomogPoly::parse(&q, 3, "x0^2 - x1*x2").unwrap();
        assert_eq!(g.eval(&q, &pt(&[2, 1, 4])).unwrap(), q.zero());
        assert!(g.eval(&q, &pt(&[1, 1])).is_err());
    }

    #[test]
    fn parse_and_format() {
        let q = Rationals;
        let f = HomogPoly::parse(&q, 3, "3*x0^2*x1 - 1/2*x2^3").unwrap();
        assert_eq!(f.degree(), 3);
        assert_eq!(f.format(&q), "3*x0^2*x1 - 1/2*x2^3");
        let g = HomogPoly::parse(&q, 3, "-x1 + x0 - 2/4*x2").unwrap();
        assert_eq!(g.format(&q), "x0 - x1 - 1/2*x2");
        assert_eq!(HomogPoly::parse(&q, 2, "x0 - x0").unwrap(), HomogPoly::zero(2, 0));
        assert_eq!(HomogPoly::parse(&q, 2, "-7/3").unwrap().format(&q), "-7/3");
    }

    #[test]
    fn parse_rejects_bad_input() {
        let q = Rationals;
        assert!(HomogPoly::parse(&q, 3, "x0 + x1^2").is_err());
        assert!(HomogPoly::parse(&q, 2, "x2").is_err());
        assert!(HomogPoly::parse(&q, 2, "x0 +").is_err());
        assert!(HomogPoly::parse(&q, 2, "").is_err());
        assert!(HomogPoly::parse(&q, 2, "x0**x1").is_err());
    }

    #[test]
    fn zero_polynomial_at_any_degree() {
        let z: HomogPoly<num_rational::BigRational> = HomogPoly::zero(3, 5);
        assert!(z.is_zero());
        assert_eq!(z.degree(), 5);
        assert!(z.clone().with_degree(2).is_ok());
        let x = HomogPoly::variable(&Rationals, 3, 0);
        assert!(x.with_degree(2).is_err());
    }

    #[test]
    fn add_requires_equal_degree() {
        let q = Rationals;
        let a = HomogPoly::parse(&q, 3, "x0").unwrap();
        let b = HomogPoly::parse(&q, 3, "x1^2").unwrap();
        assert!(a.add(&q, &b).is_err());
        assert_eq!(a.add(&q, &HomogPoly::zero(3, 7)).unwrap(), a);
    }

    #[test]
    fn powers_of_linear_forms() {
        let q = Rationals;
        let l = HomogPoly::parse(&q, 2, "x0 + x1").unwrap();
        assert_eq!(l.pow(&q, 2).format(&q), "x0^2 + 2*x0*x1 + x1^2");
        assert_eq!(l.pow(&q, 0), HomogPoly::one(&q, 2));
    }
}
