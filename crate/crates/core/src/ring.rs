//! Catalogued Euclidean domains and their elements.
//!
//! Two rings are supported: the integers and univariate polynomials with
//! rational coefficients. Elements carry their ring implicitly through the
//! enum variant; matrices carry an explicit [`RingSpec`] and reject mixed
//! operations before any element arithmetic happens.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum RingSpec {
    Integers,
    RationalPolynomials,
}

impl RingSpec {
    pub fn zero(self) -> Elem {
        match self {
            RingSpec::Integers => Elem::Int(BigInt::zero()),
            RingSpec::RationalPolynomials => Elem::Poly(Poly::zero()),
        }
    }

    pub fn one(self) -> Elem {
        self.from_i64(1)
    }

    pub fn from_i64(self, n: i64) -> Elem {
        match self {
            RingSpec::Integers => Elem::Int(BigInt::from(n)),
            RingSpec::RationalPolynomials => Elem::Poly(Poly::constant(BigRational::from_integer(n.into()))),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            RingSpec::Integers => "Integers",
            RingSpec::RationalPolynomials => "RationalPolynomials",
        }
    }

    pub fn parse(s: &str) -> Option<RingSpec> {
        match s {
            "Integers" | "Z" => Some(RingSpec::Integers),
            "RationalPolynomials" | "Q[x]" => Some(RingSpec::RationalPolynomials),
            _ => None,
        }
    }
}

impl fmt::Display for RingSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Dense polynomial over the rationals, lowest degree first, no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Poly {
    coeffs: Vec<BigRational>,
}

impl Poly {
    pub fn zero() -> Poly {
        Poly { coeffs: Vec::new() }
    }

    pub fn constant(c: BigRational) -> Poly {
        Poly::from_coeffs(vec![c])
    }

    /// The indeterminate `x`.
    pub fn x() -> Poly {
        Poly::from_coeffs(vec![BigRational::zero(), BigRational::one()])
    }

    pub fn from_coeffs(mut coeffs: Vec<BigRational>) -> Poly {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Poly {
        Poly::from_coeffs(coeffs.iter().map(|&c| BigRational::from_integer(c.into())).collect())
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn lead(&self) -> Option<&BigRational> {
        self.coeffs.last()
    }

    fn add(&self, other: &Poly) -> Poly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let zero = BigRational::zero();
        let coeffs =
            (0..n).map(|i| self.coeffs.get(i).unwrap_or(&zero) + other.coeffs.get(i).unwrap_or(&zero)).collect();
        Poly::from_coeffs(coeffs)
    }

    fn neg(&self) -> Poly {
        Poly { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }

    fn mul(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![BigRational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly::from_coeffs(out)
    }

    fn div_rem(&self, divisor: &Poly) -> (Poly, Poly) {
        let dd = divisor.degree().expect("polynomial division by zero");
        let lead_inv = divisor.lead().unwrap().recip();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigRational::zero(); self.coeffs.len().saturating_sub(dd)];
        while rem.len() > dd && !rem.is_empty() {
            let k = rem.len() - 1 - dd;
            let c = rem.last().unwrap() * &lead_inv;
            for (i, b) in divisor.coeffs.iter().enumerate() {
                rem[k + i] -= &c * b;
            }
            quot[k] = c;
            rem.pop();
            while rem.last().is_some_and(|c| c.is_zero()) {
                rem.pop();
            }
        }
        (Poly::from_coeffs(quot), Poly::from_coeffs(rem))
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (deg, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let abs = c.abs();
            if first {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            first = false;
            let unit = abs.is_one();
            match deg {
                0 => write!(f, "{abs}")?,
                _ => {
                    if !unit {
                        write!(f, "{abs}*")?;
                    }
                    if deg == 1 {
                        f.write_str("x")?;
                    } else {
                        write!(f, "x^{deg}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

/// An element of one of the catalogued rings.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Elem {
    Int(BigInt),
    Poly(Poly),
}

impl From<i64> for Elem {
    fn from(n: i64) -> Elem {
        Elem::Int(BigInt::from(n))
    }
}

impl From<BigInt> for Elem {
    fn from(n: BigInt) -> Elem {
        Elem::Int(n)
    }
}

impl From<Poly> for Elem {
    fn from(p: Poly) -> Elem {
        Elem::Poly(p)
    }
}

fn mixed() -> ! {
    panic!("mixed-ring element arithmetic")
}

impl Elem {
    pub fn ring(&self) -> RingSpec {
        match self {
            Elem::Int(_) => RingSpec::Integers,
            Elem::Poly(_) => RingSpec::RationalPolynomials,
        }
    }

    pub fn as_int(&self) -> Option<&BigInt> {
        match self {
            Elem::Int(n) => Some(n),
            Elem::Poly(_) => None,
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Elem::Int(n) => n.is_zero(),
            Elem::Poly(p) => p.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Elem::Int(n) => n.is_one(),
            Elem::Poly(p) => p.degree() == Some(0) && p.coeffs[0].is_one(),
        }
    }

    pub fn is_unit(&self) -> bool {
        match self {
            Elem::Int(n) => n.magnitude().is_one(),
            Elem::Poly(p) => p.degree() == Some(0),
        }
    }

    pub fn add(&self, other: &Elem) -> Elem {
        match (self, other) {
            (Elem::Int(a), Elem::Int(b)) => Elem::Int(a + b),
            (Elem::Poly(a), Elem::Poly(b)) => Elem::Poly(a.add(b)),
            _ => mixed(),
        }
    }

    pub fn sub(&self, other: &Elem) -> Elem {
        match (self, other) {
            (Elem::Int(a), Elem::Int(b)) => Elem::Int(a - b),
            (Elem::Poly(a), Elem::Poly(b)) => Elem::Poly(a.add(&b.neg())),
            _ => mixed(),
        }
    }

    pub fn mul(&self, other: &Elem) -> Elem {
        match (self, other) {
            (Elem::Int(a), Elem::Int(b)) => Elem::Int(a * b),
            (Elem::Poly(a), Elem::Poly(b)) => Elem::Poly(a.mul(b)),
            _ => mixed(),
        }
    }

    pub fn neg(&self) -> Elem {
        match self {
            Elem::Int(a) => Elem::Int(-a),
            Elem::Poly(a) => Elem::Poly(a.neg()),
        }
    }

    /// Compares Euclidean norms (absolute value, or degree).
    pub fn cmp_norm(&self, other: &Elem) -> Ordering {
        match (self, other) {
            (Elem::Int(a), Elem::Int(b)) => a.magnitude().cmp(b.magnitude()),
            (Elem::Poly(a), Elem::Poly(b)) => a.degree().cmp(&b.degree()),
            _ => mixed(),
        }
    }

    /// Euclidean division `self = q * divisor + r` with `r` of smaller norm
    /// than `divisor` (or zero). Integer quotients are rounded to nearest.
    pub fn div_rem(&self, divisor: &Elem) -> (Elem, Elem) {
        match (self, divisor) {
            (Elem::Int(a), Elem::Int(b)) => {
                let (mut q, mut r) = a.div_rem(b);
                let twice: BigInt = &r * 2;
                if twice.magnitude() > b.magnitude() {
                    if r.sign() == b.sign() {
                        q += 1;
                        r -= b;
                    } else {
                        q -= 1;
                        r += b;
                    }
                }
                (Elem::Int(q), Elem::Int(r))
            }
            (Elem::Poly(a), Elem::Poly(b)) => {
                let (q, r) = a.div_rem(b);
                (Elem::Poly(q), Elem::Poly(r))
            }
            _ => mixed(),
        }
    }

    /// `Some(q)` with `q * self == other` when `self` divides `other`.
    pub fn divides(&self, other: &Elem) -> Option<Elem> {
        if self.is_zero() {
            return other.is_zero().then(|| self.clone());
        }
        let (q, r) = other.div_rem(self);
        r.is_zero().then_some(q)
    }

    /// A unit `u` such that `self * u` is the canonical associate
    /// (non-negative integer, monic polynomial). Zero maps to one.
    pub fn canonical_unit(&self) -> Elem {
        match self {
            Elem::Int(a) => Elem::Int(if a.is_negative() { -BigInt::one() } else { BigInt::one() }),
            Elem::Poly(p) => match p.lead() {
                None => RingSpec::RationalPolynomials.one(),
                Some(c) => Elem::Poly(Poly::constant(c.recip())),
            },
        }
    }

    pub fn canonical(&self) -> Elem {
        self.mul(&self.canonical_unit())
    }

    /// Inverse of a unit.
    pub fn unit_inverse(&self) -> Option<Elem> {
        match self {
            Elem::Int(a) if a.magnitude().is_one() => Some(Elem::Int(a.clone())),
            Elem::Poly(p) if p.degree() == Some(0) => Some(Elem::Poly(Poly::constant(p.coeffs[0].recip()))),
            _ => None,
        }
    }

    /// Normal-form representative of `self` modulo `m`: in `[0, |m|)` for
    /// integers, the division remainder for polynomials; `self` when `m = 0`.
    pub fn residue(&self, m: &Elem) -> Elem {
        if m.is_zero() {
            return self.clone();
        }
        match (self, m) {
            (Elem::Int(a), Elem::Int(b)) => Elem::Int(a.mod_floor(&b.abs())),
            _ => self.div_rem(m).1,
        }
    }

    pub fn gcd(&self, other: &Elem) -> Elem {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        a.canonical()
    }
}

impl fmt::Display for Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Elem::Int(n) => write!(f, "{n}"),
            Elem::Poly(p) => write!(f, "{p}"),
        }
    }
}
