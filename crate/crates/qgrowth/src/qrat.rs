//! Exact arithmetic in the field of rational functions of one
//! indeterminate `q` over the rationals.
//!
//! Values are stored as a reduced fraction of integer-coefficient
//! polynomials. Reduction divides out the polynomial gcd and the shared
//! integer content, and fixes the sign of the denominator's leading
//! coefficient, so equality is plain component-wise comparison.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// Polynomial in `q` with arbitrary-precision integer coefficients,
/// ascending degree order. The zero polynomial is the empty sequence.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct QPoly {
    coeffs: Vec<BigInt>,
}

impl QPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        QPoly { coeffs }
    }

    pub fn zero() -> Self {
        QPoly { coeffs: vec![] }
    }

    pub fn one() -> Self {
        QPoly::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        QPoly::new(vec![c])
    }

    /// The monomial q^a.
    pub fn monomial(a: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); a + 1];
        coeffs[a] = BigInt::one();
        QPoly { coeffs }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    fn leading(&self) -> BigInt {
        self.coeffs.last().cloned().unwrap_or_else(BigInt::zero)
    }

    /// gcd of the coefficients, taken positive; 0 for the zero polynomial.
    pub fn content(&self) -> BigInt {
        self.coeffs
            .iter()
            .fold(BigInt::zero(), |acc, c| acc.gcd(c))
    }

    fn scale_down(&self, d: &BigInt) -> QPoly {
        QPoly::new(self.coeffs.iter().map(|c| c / d).collect())
    }

    fn primitive(&self) -> QPoly {
        if self.is_zero() {
            return QPoly::zero();
        }
        let mut p = self.scale_down(&self.content());
        if p.leading().is_negative() {
            p = p.neg_poly();
        }
        p
    }

    fn neg_poly(&self) -> QPoly {
        QPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }

    fn add_poly(&self, rhs: &QPoly) -> QPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = vec![BigInt::zero(); n];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[i] += c;
        }
        for (i, c) in rhs.coeffs.iter().enumerate() {
            out[i] += c;
        }
        QPoly::new(out)
    }

    fn mul_poly(&self, rhs: &QPoly) -> QPoly {
        if self.is_zero() || rhs.is_zero() {
            return QPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        QPoly::new(out)
    }

    /// Pseudo-remainder of self by rhs (rhs nonzero).
    fn prem(&self, rhs: &QPoly) -> QPoly {
        let db = rhs.degree().expect("prem by zero");
        let lb = rhs.leading();
        let mut rem = self.clone();
        while let Some(dr) = rem.degree() {
            if dr < db {
                break;
            }
            let lr = rem.leading();
            // rem <- lb*rem - lr*q^(dr-db)*rhs
            let mut next = vec![BigInt::zero(); dr];
            for (i, c) in rem.coeffs.iter().enumerate().take(dr) {
                next[i] = c * &lb;
            }
            for (j, c) in rhs.coeffs.iter().enumerate().take(db) {
                next[j + dr - db] -= c * &lr;
            }
            rem = QPoly::new(next);
        }
        rem
    }

    /// Primitive polynomial gcd (Euclidean with pseudo-remainders).
    pub fn gcd(&self, rhs: &QPoly) -> QPoly {
        let mut a = self.primitive();
        let mut b = rhs.primitive();
        if a.is_zero() {
            return b;
        }
        while !b.is_zero() {
            if a.degree() < b.degree() {
                std::mem::swap(&mut a, &mut b);
                continue;
            }
            let r = a.prem(&b).primitive();
            a = b;
            b = r;
        }
        a
    }

    /// Exact quotient; panics if the division is not exact.
    fn div_exact(&self, rhs: &QPoly) -> QPoly {
        if self.is_zero() {
            return QPoly::zero();
        }
        let db = rhs.degree().expect("division by zero polynomial");
        let da = self.degree().unwrap();
        assert!(da >= db, "inexact polynomial division");
        let lb = rhs.leading();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); da - db + 1];
        for i in (0..=da - db).rev() {
            let (c, r) = rem[i + db].div_rem(&lb);
            assert!(r.is_zero(), "inexact polynomial division");
            for (j, bc) in rhs.coeffs.iter().enumerate() {
                let prod = bc * &c;
                rem[i + j] -= prod;
            }
            quot[i] = c;
        }
        assert!(rem.iter().all(|c| c.is_zero()), "inexact polynomial division");
        QPoly::new(quot)
    }

    pub fn eval(&self, q0: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * q0 + BigRational::from_integer(c.clone());
        }
        acc
    }
}

impl fmt::Display for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, "-")?;
            } else {
                write!(f, "+")?;
            }
            let unit_coeff = mag.is_one() && i > 0;
            if !unit_coeff {
                write!(f, "{mag}")?;
            }
            if i == 1 {
                if !unit_coeff {
                    write!(f, "*")?;
                }
                write!(f, "q")?;
            } else if i > 1 {
                if !unit_coeff {
                    write!(f, "*")?;
                }
                write!(f, "q^{i}")?;
            }
        }
        Ok(())
    }
}

/// Reduced fraction of two [`QPoly`] values; the universal weight object.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct QRat {
    num: QPoly,
    den: QPoly,
}

impl QRat {
    pub fn new(num: QPoly, den: QPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::reduce(num, den))
    }

    fn reduce(num: QPoly, den: QPoly) -> Self {
        if num.is_zero() {
            return QRat {
                num: QPoly::zero(),
                den: QPoly::one(),
            };
        }
        let g = num.gcd(&den);
        let mut num = num.div_exact(&g);
        let mut den = den.div_exact(&g);
        let c = num.content().gcd(&den.content());
        if !c.is_one() {
            num = num.scale_down(&c);
            den = den.scale_down(&c);
        }
        if den.leading().is_negative() {
            num = num.neg_poly();
            den = den.neg_poly();
        }
        QRat { num, den }
    }

    pub fn zero() -> Self {
        QRat {
            num: QPoly::zero(),
            den: QPoly::one(),
        }
    }

    pub fn one() -> Self {
        QRat {
            num: QPoly::one(),
            den: QPoly::one(),
        }
    }

    pub fn from_int(n: i64) -> Self {
        QRat {
            num: QPoly::constant(BigInt::from(n)),
            den: QPoly::one(),
        }
    }

    pub fn num(&self) -> &QPoly {
        &self.num
    }

    pub fn den(&self) -> &QPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num == self.den
    }

    pub fn inv(&self) -> Result<Self> {
        QRat::new(self.den.clone(), self.num.clone())
    }

    pub fn checked_div(&self, rhs: &QRat) -> Result<Self> {
        if rhs.is_zero() {
            return Err(Error::DivisionByZero);
        }
        QRat::new(
            self.num.mul_poly(&rhs.den),
            self.den.mul_poly(&rhs.num),
        )
    }

    /// Exact value at q = q0; errors when q0 is a pole.
    pub fn eval(&self, q0: &BigRational) -> Result<BigRational> {
        let d = self.den.eval(q0);
        if d.is_zero() {
            return Err(Error::Pole);
        }
        Ok(self.num.eval(q0) / d)
    }
}

/// The monomial q^a.
pub fn qpow(a: usize) -> QRat {
    QRat {
        num: QPoly::monomial(a),
        den: QPoly::one(),
    }
}

/// 1 - q^a (zero for a = 0).
pub fn one_minus_qpow(a: usize) -> QRat {
    QRat::new(QPoly::one().add_poly(&QPoly::monomial(a).neg_poly()), QPoly::one()).unwrap()
}

impl Add for &QRat {
    type Output = QRat;
    fn add(self, rhs: &QRat) -> QRat {
        QRat::reduce(
            self.num
                .mul_poly(&rhs.den)
                .add_poly(&rhs.num.mul_poly(&self.den)),
            self.den.mul_poly(&rhs.den),
        )
    }
}

impl Sub for &QRat {
    type Output = QRat;
    fn sub(self, rhs: &QRat) -> QRat {
        self + &(-rhs)
    }
}

impl Mul for &QRat {
    type Output = QRat;
    fn mul(self, rhs: &QRat) -> QRat {
        QRat::reduce(self.num.mul_poly(&rhs.num), self.den.mul_poly(&rhs.den))
    }
}

impl Div for &QRat {
    type Output = QRat;
    fn div(self, rhs: &QRat) -> QRat {
        self.checked_div(rhs).expect("division by zero QRat")
    }
}

impl Neg for &QRat {
    type Output = QRat;
    fn neg(self) -> QRat {
        QRat {
            num: self.num.neg_poly(),
            den: self.den.clone(),
        }
    }
}

impl fmt::Display for QRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == QPoly::one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

fn coeffs_to_json(p: &QPoly) -> Vec<i64> {
    p.coeffs()
        .iter()
        .map(|c| i64::try_from(c).expect("coefficient exceeds i64 in serialization"))
        .collect()
}

impl Serialize for QRat {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("QRat", 2)?;
        s.serialize_field("num", &coeffs_to_json(&self.num))?;
        s.serialize_field("den", &coeffs_to_json(&self.den))?;
        s.end()
    }
}
