//! Finite formal linear combinations with exact rational coefficients.

use std::collections::btree_map::{self, BTreeMap};
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Exact coefficient type used throughout the crate.
pub type Rational = BigRational;

pub fn rational(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Parses `p` or `p/q` with an optional sign.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("invalid rational `{s}`"));
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n, d),
        None => (s, "1"),
    };
    let num: BigInt = num.trim().parse().map_err(|_| bad())?;
    let den: BigInt = den.trim().parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(bad());
    }
    Ok(Rational::new(num, den))
}

pub fn format_rational(q: &Rational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// A finite linear combination `Σ c_b b` with no zero coefficients stored.
///
/// Terms are kept in a `BTreeMap`, so iteration follows the basis order and
/// equality of combinations is structural.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LinComb<B: Ord> {
    terms: BTreeMap<B, Rational>,
}

impl<B: Ord> Default for LinComb<B> {
    fn default() -> Self {
        LinComb { terms: BTreeMap::new() }
    }
}

impl<B: Ord> LinComb<B> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn from_basis(b: B) -> Self {
        Self::term(b, Rational::one())
    }

    pub fn term(b: B, c: Rational) -> Self {
        let mut out = Self::zero();
        out.add_term(b, c);
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, b: B, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(b) {
            btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn coeff(&self, b: &B) -> Rational {
        self.terms.get(b).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn iter(&self) -> btree_map::Iter<'_, B, Rational> {
        self.terms.iter()
    }

    pub fn basis(&self) -> impl Iterator<Item = &B> {
        self.terms.keys()
    }

    pub fn scaled(&self, c: &Rational) -> Self
    where
        B: Clone,
    {
        if c.is_zero() {
            return Self::zero();
        }
        LinComb {
            terms: self.terms.iter().map(|(b, x)| (b.clone(), x * c)).collect(),
        }
    }

    pub fn add_scaled(&mut self, other: &Self, c: &Rational)
    where
        B: Clone,
    {
        if c.is_zero() {
            return;
        }
        for (b, x) in other.iter() {
            self.add_term(b.clone(), x * c);
        }
    }

    /// Applies a linear map given on basis elements.
    pub fn map_linear<C: Ord + Clone, F>(&self, mut f: F) -> LinComb<C>
    where
        F: FnMut(&B) -> LinComb<C>,
    {
        let mut out = LinComb::zero();
        for (b, c) in self.iter() {
            out.add_scaled(&f(b), c);
        }
        out
    }

    /// Relabels basis elements; colliding images are summed.
    pub fn map_basis<C: Ord, F>(&self, mut f: F) -> LinComb<C>
    where
        F: FnMut(&B) -> C,
    {
        let mut out = LinComb::zero();
        for (b, c) in self.iter() {
            out.add_term(f(b), c.clone());
        }
        out
    }

    /// Bilinear extension of a map given on pairs of basis elements.
    pub fn bilinear<C, D: Ord + Clone, F>(&self, other: &LinComb<C>, mut f: F) -> LinComb<D>
    where
        C: Ord,
        F: FnMut(&B, &C) -> LinComb<D>,
    {
        let mut out = LinComb::zero();
        for (a, x) in self.iter() {
            for (b, y) in other.iter() {
                out.add_scaled(&f(a, b), &(x * y));
            }
        }
        out
    }

    pub fn filter<F: FnMut(&B) -> bool>(&self, mut keep: F) -> Self
    where
        B: Clone,
    {
        LinComb {
            terms: self
                .terms
                .iter()
                .filter(|(b, _)| keep(b))
                .map(|(b, c)| (b.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn into_terms(self) -> BTreeMap<B, Rational> {
        self.terms
    }
}

impl<B: Ord> FromIterator<(B, Rational)> for LinComb<B> {
    fn from_iter<I: IntoIterator<Item = (B, Rational)>>(iter: I) -> Self {
        let mut out = Self::zero();
        for (b, c) in iter {
            out.add_term(b, c);
        }
        out
    }
}

impl<'a, B: Ord> IntoIterator for &'a LinComb<B> {
    type Item = (&'a B, &'a Rational);
    type IntoIter = btree_map::Iter<'a, B, Rational>;

    fn into_iter(self) -> Self::IntoIter {
        self.terms.iter()
    }
}

impl<B: Ord + Clone> AddAssign<&LinComb<B>> for LinComb<B> {
    fn add_assign(&mut self, rhs: &LinComb<B>) {
        for (b, c) in rhs.iter() {
            self.add_term(b.clone(), c.clone());
        }
    }
}

impl<B: Ord + Clone> SubAssign<&LinComb<B>> for LinComb<B> {
    fn sub_assign(&mut self, rhs: &LinComb<B>) {
        for (b, c) in rhs.iter() {
            self.add_term(b.clone(), -c.clone());
        }
    }
}

impl<B: Ord + Clone> Add for &LinComb<B> {
    type Output = LinComb<B>;

    fn add(self, rhs: &LinComb<B>) -> LinComb<B> {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl<B: Ord + Clone> Add for LinComb<B> {
    type Output = LinComb<B>;

    fn add(mut self, rhs: LinComb<B>) -> LinComb<B> {
        self += &rhs;
        self
    }
}

impl<B: Ord + Clone> Sub for &LinComb<B> {
    type Output = LinComb<B>;

    fn sub(self, rhs: &LinComb<B>) -> LinComb<B> {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl<B: Ord + Clone> Sub for LinComb<B> {
    type Output = LinComb<B>;

    fn sub(mut self, rhs: LinComb<B>) -> LinComb<B> {
        self -= &rhs;
        self
    }
}

impl<B: Ord> Neg for LinComb<B> {
    type Output = LinComb<B>;

    fn neg(self) -> LinComb<B> {
        LinComb {
            terms: self.terms.into_iter().map(|(b, c)| (b, -c)).collect(),
        }
    }
}

impl<B: Ord + Clone> Mul<&Rational> for &LinComb<B> {
    type Output = LinComb<B>;

    fn mul(self, rhs: &Rational) -> LinComb<B> {
        self.scaled(rhs)
    }
}

impl<B: Ord + fmt::Debug> fmt::Debug for LinComb<B> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (b, c)) in self.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{} {:?}", format_rational(c), b)?;
        }
        Ok(())
    }
}

/// Renders `c1 b1 + c2 b2 + ...` using the basis `Display` impl; `0` for the empty sum.
impl<B: Ord + fmt::Display> fmt::Display for LinComb<B> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (b, c)) in self.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{} {}", format_rational(c), b)?;
        }
        Ok(())
    }
}

/// Largest absolute numerator, handy for quick size reports.
pub fn max_abs_numerator<B: Ord>(x: &LinComb<B>) -> BigInt {
    x.iter().map(|(_, c)| c.numer().abs()).max().unwrap_or_default()
}
