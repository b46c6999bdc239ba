//! Exact arithmetic: rationals, polynomials in the formal highest weight λ,
//! generalized binomial coefficients and integer partitions.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Arbitrary precision rational, always kept in lowest terms.
pub type Rational = num_rational::BigRational;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Generalized binomial coefficient `a(a-1)...(a-m+1)/m!`, valid for negative `a`.
pub fn binom(a: i64, m: u32) -> Rational {
    Rational::from_integer(binom_int(a, m))
}

pub(crate) fn binom_int(a: i64, m: u32) -> BigInt {
    if a >= 0 && (m as i64) > a {
        return BigInt::zero();
    }
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..m as i64 {
        num *= a - i;
        den *= i + 1;
    }
    num / den
}

/// `(-1)^e` for any integer exponent.
pub fn sign(e: i64) -> i64 {
    if e.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

/// Univariate polynomial in λ with rational coefficients. Zero coefficients are never stored.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct LambdaPoly {
    coeffs: BTreeMap<u32, Rational>,
}

impl LambdaPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::monomial(0, c)
    }

    /// The formal variable λ.
    pub fn lambda() -> Self {
        Self::monomial(1, Rational::one())
    }

    pub fn monomial(degree: u32, c: Rational) -> Self {
        let mut coeffs = BTreeMap::new();
        if !c.is_zero() {
            coeffs.insert(degree, c);
        }
        Self { coeffs }
    }

    pub fn from_coeffs<I: IntoIterator<Item = (u32, Rational)>>(it: I) -> Self {
        let mut p = Self::zero();
        for (d, c) in it {
            p += Self::monomial(d, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// True when the polynomial has no positive-degree terms.
    pub fn is_lambda_free(&self) -> bool {
        self.coeffs.keys().all(|&d| d == 0)
    }

    pub fn degree(&self) -> Option<u32> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn coeff(&self, degree: u32) -> Rational {
        self.coeffs.get(&degree).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn constant_term(&self) -> Rational {
        self.coeff(0)
    }

    pub fn coeffs(&self) -> impl Iterator<Item = (u32, &Rational)> {
        self.coeffs.iter().map(|(d, c)| (*d, c))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            coeffs: self.coeffs.iter().map(|(d, x)| (*d, x * c)).collect(),
        }
    }

    pub fn evaluate_at(&self, x: &Rational) -> Rational {
        // Horner from the top degree down.
        let Some(top) = self.degree() else {
            return Rational::zero();
        };
        let mut acc = Rational::zero();
        for d in (0..=top).rev() {
            acc = acc * x + self.coeff(d);
        }
        acc
    }

    fn add_term(&mut self, degree: u32, c: Rational) {
        if c.is_zero() {
            return;
        }
        let slot = self.coeffs.entry(degree).or_insert_with(Rational::zero);
        *slot += c;
        if slot.is_zero() {
            self.coeffs.remove(&degree);
        }
    }
}

impl AddAssign for LambdaPoly {
    fn add_assign(&mut self, rhs: Self) {
        for (d, c) in rhs.coeffs {
            self.add_term(d, c);
        }
    }
}

impl<'a> AddAssign<&'a LambdaPoly> for LambdaPoly {
    fn add_assign(&mut self, rhs: &'a LambdaPoly) {
        for (d, c) in &rhs.coeffs {
            self.add_term(*d, c.clone());
        }
    }
}

impl SubAssign for LambdaPoly {
    fn sub_assign(&mut self, rhs: Self) {
        for (d, c) in rhs.coeffs {
            self.add_term(d, -c);
        }
    }
}

impl Add for LambdaPoly {
    type Output = LambdaPoly;
    fn add(mut self, rhs: Self) -> Self {
        self += rhs;
        self
    }
}

impl Sub for LambdaPoly {
    type Output = LambdaPoly;
    fn sub(mut self, rhs: Self) -> Self {
        self -= rhs;
        self
    }
}

impl Neg for LambdaPoly {
    type Output = LambdaPoly;
    fn neg(self) -> Self {
        Self {
            coeffs: self.coeffs.into_iter().map(|(d, c)| (d, -c)).collect(),
        }
    }
}

impl<'a> Mul<&'a LambdaPoly> for &'a LambdaPoly {
    type Output = LambdaPoly;
    fn mul(self, rhs: &'a LambdaPoly) -> LambdaPoly {
        let mut out = LambdaPoly::zero();
        for (da, ca) in &self.coeffs {
            for (db, cb) in &rhs.coeffs {
                out.add_term(da + db, ca * cb);
            }
        }
        out
    }
}

impl Mul for LambdaPoly {
    type Output = LambdaPoly;
    fn mul(self, rhs: Self) -> Self {
        &self * &rhs
    }
}

impl From<Rational> for LambdaPoly {
    fn from(c: Rational) -> Self {
        Self::constant(c)
    }
}

impl From<i64> for LambdaPoly {
    fn from(c: i64) -> Self {
        Self::constant(rat(c))
    }
}

impl fmt::Display for LambdaPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (d, c)) in self.coeffs.iter().rev().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            let unit = abs.is_one();
            match d {
                0 => write!(f, "{abs}")?,
                _ => {
                    if !unit {
                        write!(f, "{abs}*")?;
                    }
                    write!(f, "lambda")?;
                    if *d > 1 {
                        write!(f, "^{d}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LambdaPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LambdaPoly({self})")
    }
}

/// A weakly decreasing sequence of positive integers.
///
/// Ordered by size first, then lexicographically on the parts, so that for a
/// fixed size `(1, 1, ..., 1)` comes first and `(n)` last.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition {
    size: u32,
    parts: Vec<u32>,
}

impl Partition {
    pub fn empty() -> Self {
        Self::default()
    }

    /// Builds a partition from parts in any order. Zero parts are rejected.
    pub fn new(mut parts: Vec<u32>) -> Option<Self> {
        if parts.contains(&0) {
            return None;
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        let size = parts.iter().sum();
        Some(Self { size, parts })
    }

    pub fn ones(n: u32) -> Self {
        Self {
            size: n,
            parts: vec![1; n as usize],
        }
    }

    pub fn size(&self) -> u32 {
        self.size
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn multiplicity(&self, part: u32) -> usize {
        self.parts.iter().filter(|&&p| p == part).count()
    }

    pub fn with_part(&self, part: u32) -> Self {
        debug_assert!(part > 0);
        let pos = self.parts.partition_point(|&p| p >= part);
        let mut parts = self.parts.clone();
        parts.insert(pos, part);
        Self {
            size: self.size + part,
            parts,
        }
    }

    pub fn without_part(&self, part: u32) -> Option<Self> {
        let pos = self.parts.iter().position(|&p| p == part)?;
        let mut parts = self.parts.clone();
        parts.remove(pos);
        Some(Self {
            size: self.size - part,
            parts,
        })
    }

    /// Splits off the largest part.
    pub fn split_first(&self) -> Option<(u32, Self)> {
        let (&first, rest) = self.parts.split_first()?;
        Some((
            first,
            Self {
                size: self.size - first,
                parts: rest.to_vec(),
            },
        ))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.parts)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// All partitions of `n`, in ascending [`Partition`] order.
pub fn partitions_of(n: u32) -> Vec<Partition> {
    fn go(remaining: u32, max_part: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if remaining == 0 {
            out.push(prefix.clone());
            return;
        }
        for p in 1..=max_part.min(remaining) {
            prefix.push(p);
            go(remaining - p, p, prefix, out);
            prefix.pop();
        }
    }
    let mut raw = Vec::new();
    go(n, n, &mut Vec::new(), &mut raw);
    // Parts are pushed with ascending first part, and the recursion keeps the
    // sequence lexicographically ascending already.
    raw.into_iter()
        .map(|parts| Partition { size: n, parts })
        .collect()
}

/// All partitions of size at most `n`, in ascending order.
pub fn partitions_up_to(n: u32) -> Vec<Partition> {
    (0..=n).flat_map(partitions_of).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn binom_examples() {
        assert_eq!(binom(5, 2), rat(10));
        assert_eq!(binom(-1, 2), rat(1));
        assert_eq!(binom(-3, 2), rat(6));
        assert_eq!(binom(-7, 0), rat(1));
        assert_eq!(binom(2, 5), rat(0));
        assert_eq!(binom(-1, 3), rat(-1));
    }

    #[test]
    fn partitions_examples() {
        assert_eq!(partitions_of(0), vec![Partition::empty()]);
        assert_eq!(partitions_of(1), vec![Partition::new(vec![1]).unwrap()]);
        assert_eq!(partitions_of(4).len(), 5);
        let four: Vec<Vec<u32>> = partitions_of(4).iter().map(|p| p.parts().to_vec()).collect();
        assert_eq!(
            four,
            vec![vec![1, 1, 1, 1], vec![2, 1, 1], vec![2, 2], vec![3, 1], vec![4]]
        );
        let mut sorted = partitions_of(6);
        sorted.sort();
        assert_eq!(sorted, partitions_of(6));
    }

    // Independent count via the pentagonal-free recursion p(n, k) = p(n, k-1) + p(n-k, k).
    fn partition_count_oracle(n: u32) -> usize {
        fn p(n: i64, k: i64) -> usize {
            if n == 0 {
                return 1;
            }
            if n < 0 || k == 0 {
                return 0;
            }
            p(n, k - 1) + p(n - k, k)
        }
        p(n as i64, n as i64)
    }

    #[test]
    fn partition_counts_match_oracle() {
        let classical = [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77];
        for n in 0..=12u32 {
            let ps = partitions_of(n);
            assert_eq!(ps.len(), partition_count_oracle(n));
            assert_eq!(ps.len(), classical[n as usize]);
            let mut dedup = ps.clone();
            dedup.dedup();
            assert_eq!(dedup.len(), ps.len());
            assert!(ps.iter().all(|p| p.size() == n && p.parts().windows(2).all(|w| w[0] >= w[1])));
        }
    }

    #[test]
    fn poly_examples() {
        let l = LambdaPoly::lambda();
        assert_eq!((&l * &l).evaluate_at(&rat(3)), rat(9));
        assert!(LambdaPoly::zero().is_zero());
        let prod = (l.clone() + LambdaPoly::one()) * (l.clone() - LambdaPoly::one());
        assert_eq!(prod, &l * &l - LambdaPoly::one());
        assert_eq!(prod.to_string(), "lambda^2 - 1");
        assert!((l.clone() - l).is_zero());
    }

    #[test]
    fn partition_edit() {
        let p = Partition::new(vec![1, 3, 1]).unwrap();
        assert_eq!(p.parts(), &[3, 1, 1]);
        assert_eq!(p.with_part(2).parts(), &[3, 2, 1, 1]);
        assert_eq!(p.without_part(1).unwrap().parts(), &[3, 1]);
        assert!(p.without_part(2).is_none());
        assert_eq!(p.multiplicity(1), 2);
        assert!(Partition::new(vec![0, 1]).is_none());
    }

    proptest! {
        #[test]
        fn pascal(a in -30i64..30, m in 1u32..12) {
            prop_assert_eq!(binom(a, m), binom(a - 1, m) + binom(a - 1, m - 1));
        }

        #[test]
        fn rational_field_laws(a in -50i64..50, b in 1i64..20, c in -50i64..50, d in 1i64..20, e in -9i64..9) {
            let x = ratio(a, b);
            let y = ratio(c, d);
            let z = rat(e);
            prop_assert_eq!(&x + &y, &y + &x);
            prop_assert_eq!((&x * &y) * &z, &x * (&y * &z));
            prop_assert_eq!(&x * (&y + &z), &x * &y + &x * &z);
            let s = &x + &y;
            prop_assert_eq!(num_integer::Integer::gcd(s.numer(), s.denom()), BigInt::one());
            prop_assert!(s.denom().is_positive());
        }

        #[test]
        fn poly_eval_is_ring_hom(a in proptest::collection::vec(-5i64..5, 0..4),
                                 b in proptest::collection::vec(-5i64..5, 0..4),
                                 x in -4i64..4) {
            let pa = LambdaPoly::from_coeffs(a.iter().enumerate().map(|(i, c)| (i as u32, rat(*c))));
            let pb = LambdaPoly::from_coeffs(b.iter().enumerate().map(|(i, c)| (i as u32, rat(*c))));
            let x = rat(x);
            prop_assert_eq!((&pa * &pb).evaluate_at(&x), pa.evaluate_at(&x) * pb.evaluate_at(&x));
            prop_assert_eq!((pa.clone() + pb.clone()).evaluate_at(&x), pa.evaluate_at(&x) + pb.evaluate_at(&x));
        }
    }
}
