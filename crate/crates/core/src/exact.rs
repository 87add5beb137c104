//! Dense square matrices and polynomials over arbitrary-precision integers.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::{BigInt, Sign as BigSign};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::de::{self, Deserializer};
use serde::ser::Serializer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Square integer matrix, row-major.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ExactMatrix {
    n: usize,
    data: Vec<BigInt>,
}

impl ExactMatrix {
    pub fn zero(n: usize) -> Self {
        ExactMatrix {
            n,
            data: vec![BigInt::zero(); n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n);
        for i in 0..n {
            m.data[i * n + i] = BigInt::one();
        }
        m
    }

    pub fn from_rows<T: Into<BigInt> + Clone>(rows: &[Vec<T>]) -> Result<Self> {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * n);
        for row in rows {
            if row.len() != n {
                return Err(Error::DimensionMismatch {
                    left: n,
                    right: row.len(),
                });
            }
            data.extend(row.iter().cloned().map(Into::into));
        }
        Ok(ExactMatrix { n, data })
    }

    /// The permutation matrix exchanging rows `i` and `j` of the identity.
    /// `exchange(n, i, i)` is the identity.
    pub fn exchange(n: usize, i: usize, j: usize) -> Self {
        let mut m = Self::identity(n);
        if i != j {
            m.data[i * n + i] = BigInt::zero();
            m.data[j * n + j] = BigInt::zero();
            m.data[i * n + j] = BigInt::one();
            m.data[j * n + i] = BigInt::one();
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: impl Into<BigInt>) {
        self.data[i * self.n + j] = v.into();
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.data[i * self.n..(i + 1) * self.n]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[BigInt]> {
        self.data.chunks(self.n.max(1)).take(self.n)
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        let n = self.n;
        self.data.iter().enumerate().all(|(k, v)| {
            if k / n == k % n {
                v.is_one()
            } else {
                v.is_zero()
            }
        })
    }

    /// Indices of rows containing a nonzero entry.
    pub fn nonzero_rows(&self) -> Vec<usize> {
        (0..self.n)
            .filter(|&i| self.row(i).iter().any(|v| !v.is_zero()))
            .collect()
    }

    pub fn transpose(&self) -> Self {
        let n = self.n;
        let mut out = Self::zero(n);
        for i in 0..n {
            for j in 0..n {
                out.data[j * n + i] = self.data[i * n + j].clone();
            }
        }
        out
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        ExactMatrix {
            n: self.n,
            data: self.data.iter().map(|v| v * c).collect(),
        }
    }

    pub fn scale_i64(&self, c: i64) -> Self {
        self.scale(&BigInt::from(c))
    }

    pub fn matmul(&self, other: &ExactMatrix) -> Result<ExactMatrix> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch {
                left: self.n,
                right: other.n,
            });
        }
        let n = self.n;
        let mut out = Self::zero(n);
        for i in 0..n {
            for k in 0..n {
                let a = &self.data[i * n + k];
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = &other.data[k * n + j];
                    if !b.is_zero() {
                        out.data[i * n + j] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn try_add(&self, other: &ExactMatrix) -> Result<ExactMatrix> {
        self.zip_with(other, |a, b| a + b)
    }

    pub fn try_sub(&self, other: &ExactMatrix) -> Result<ExactMatrix> {
        self.zip_with(other, |a, b| a - b)
    }

    fn zip_with(
        &self,
        other: &ExactMatrix,
        f: impl Fn(&BigInt, &BigInt) -> BigInt,
    ) -> Result<ExactMatrix> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch {
                left: self.n,
                right: other.n,
            });
        }
        Ok(ExactMatrix {
            n: self.n,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| f(a, b))
                .collect(),
        })
    }

    /// `self^k` by binary exponentiation; `self^0 = I`.
    pub fn pow(&self, mut k: u64) -> ExactMatrix {
        let mut result = Self::identity(self.n);
        let mut base = self.clone();
        while k > 0 {
            if k & 1 == 1 {
                result = &result * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Determinant by fraction-free (Bareiss) elimination.
    pub fn det(&self) -> BigInt {
        let n = self.n;
        if n == 0 {
            return BigInt::one();
        }
        let mut m = self.data.clone();
        let mut negate = false;
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if m[k * n + k].is_zero() {
                let Some(p) = (k + 1..n).find(|&i| !m[i * n + k].is_zero()) else {
                    return BigInt::zero();
                };
                for j in 0..n {
                    m.swap(k * n + j, p * n + j);
                }
                negate = !negate;
            }
            let pivot = m[k * n + k].clone();
            for i in k + 1..n {
                let lead = m[i * n + k].clone();
                for j in k + 1..n {
                    let v = &m[i * n + j] * &pivot - &lead * &m[k * n + j];
                    // exact by Sylvester's identity
                    m[i * n + j] = v / &prev;
                }
                m[i * n + k] = BigInt::zero();
            }
            prev = pivot;
        }
        let d = m[n * n - 1].clone();
        if negate {
            -d
        } else {
            d
        }
    }

    /// Monic characteristic polynomial `det(xI - A)`, computed with the
    /// division-free Berkowitz recurrence.
    pub fn char_poly(&self) -> IntPolynomial {
        let n = self.n;
        // coefficients from the highest degree down
        let mut v: Vec<BigInt> = vec![BigInt::one()];
        for r in 0..n {
            let mut t = vec![BigInt::zero(); r + 2];
            t[0] = BigInt::one();
            t[1] = -self.get(r, r).clone();
            let mut w: Vec<BigInt> = (0..r).map(|i| self.get(i, r).clone()).collect();
            for slot in t.iter_mut().skip(2) {
                let dot: BigInt = (0..r).map(|j| self.get(r, j) * &w[j]).sum();
                *slot = -dot;
                w = (0..r)
                    .map(|i| (0..r).map(|j| self.get(i, j) * &w[j]).sum())
                    .collect();
            }
            let mut next = vec![BigInt::zero(); r + 2];
            for (i, slot) in next.iter_mut().enumerate() {
                for (j, vj) in v.iter().enumerate().take(i + 1) {
                    *slot += &t[i - j] * vj;
                }
            }
            v = next;
        }
        v.reverse();
        IntPolynomial::new(v)
    }

    /// Collision-free byte encoding: a dimension header followed by every
    /// entry (row-major) as a sign byte, a 4-byte magnitude length and the
    /// big-endian magnitude.
    pub fn canonical_key(&self) -> Vec<u8> {
        let mut key = Vec::with_capacity(8 + self.data.len() * 6);
        key.extend_from_slice(&(self.n as u64).to_be_bytes());
        for v in &self.data {
            let (sign, mag) = v.to_bytes_be();
            key.push(match sign {
                BigSign::Minus => 0,
                BigSign::NoSign => 1,
                BigSign::Plus => 2,
            });
            let mag: &[u8] = if v.is_zero() { &[] } else { &mag };
            key.extend_from_slice(&(mag.len() as u32).to_be_bytes());
            key.extend_from_slice(mag);
        }
        key
    }

    /// Largest absolute entry, in bits.
    pub fn max_entry_bits(&self) -> u64 {
        self.data.iter().map(|v| v.bits()).max().unwrap_or(0)
    }

    pub fn to_i64_rows(&self) -> Option<Vec<Vec<i64>>> {
        self.rows()
            .map(|r| r.iter().map(ToPrimitive::to_i64).collect())
            .collect()
    }
}

impl Mul for &ExactMatrix {
    type Output = ExactMatrix;

    /// Panics on a dimension mismatch; use [`ExactMatrix::matmul`] for a
    /// checked product.
    fn mul(self, rhs: &ExactMatrix) -> ExactMatrix {
        self.matmul(rhs).expect("matrix dimensions agree")
    }
}

impl Add for &ExactMatrix {
    type Output = ExactMatrix;

    fn add(self, rhs: &ExactMatrix) -> ExactMatrix {
        self.try_add(rhs).expect("matrix dimensions agree")
    }
}

impl Sub for &ExactMatrix {
    type Output = ExactMatrix;

    fn sub(self, rhs: &ExactMatrix) -> ExactMatrix {
        self.try_sub(rhs).expect("matrix dimensions agree")
    }
}

impl Neg for &ExactMatrix {
    type Output = ExactMatrix;

    fn neg(self) -> ExactMatrix {
        ExactMatrix {
            n: self.n,
            data: self.data.iter().map(|v| -v).collect(),
        }
    }
}

impl fmt::Display for ExactMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, row) in self.rows().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            f.write_str("[")?;
            for (j, v) in row.iter().enumerate() {
                if j > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{v}")?;
            }
            f.write_str("]")?;
        }
        f.write_str("]")
    }
}

/// Serialized as an array of integer rows. Entries outside the `i64` range
/// are written as decimal strings.
impl Serialize for ExactMatrix {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let rows: Vec<Vec<serde_json::Value>> = self
            .rows()
            .map(|r| r.iter().map(entry_to_json).collect())
            .collect();
        rows.serialize(serializer)
    }
}

fn entry_to_json(v: &BigInt) -> serde_json::Value {
    match v.to_i64() {
        Some(x) => serde_json::Value::from(x),
        None => serde_json::Value::from(v.to_string()),
    }
}

impl<'de> Deserialize<'de> for ExactMatrix {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let rows: Vec<Vec<serde_json::Value>> = Vec::deserialize(deserializer)?;
        let rows: Vec<Vec<BigInt>> = rows
            .into_iter()
            .map(|r| {
                r.into_iter()
                    .map(|v| match v {
                        serde_json::Value::Number(x) => x
                            .as_i64()
                            .map(BigInt::from)
                            .ok_or_else(|| de::Error::custom("non-integer matrix entry")),
                        serde_json::Value::String(s) => s
                            .parse::<BigInt>()
                            .map_err(|_| de::Error::custom("bad integer string")),
                        _ => Err(de::Error::custom("matrix entries must be integers")),
                    })
                    .collect()
            })
            .collect::<std::result::Result<_, _>>()?;
        ExactMatrix::from_rows(&rows).map_err(de::Error::custom)
    }
}

/// Integer polynomial, coefficients from the constant term up.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn one() -> Self {
        Self::from_i64(&[1])
    }

    /// `x^d - 1`
    pub fn x_pow_minus_one(d: usize) -> Self {
        let mut c = vec![BigInt::zero(); d + 1];
        c[0] = BigInt::from(-1);
        c[d] = BigInt::one();
        Self::new(c)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(One::is_one)
    }

    pub fn mul(&self, other: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || other.is_zero() {
            return IntPolynomial::new(vec![]);
        }
        let mut c = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                c[i + j] += a * b;
            }
        }
        IntPolynomial::new(c)
    }

    /// Quotient and remainder by a monic divisor (both integral).
    pub fn div_rem_monic(&self, divisor: &IntPolynomial) -> (IntPolynomial, IntPolynomial) {
        assert!(divisor.is_monic(), "divisor must be monic");
        let dd = divisor.coeffs.len() - 1;
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (IntPolynomial::new(vec![]), self.clone());
        }
        let mut quot = vec![BigInt::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let lead = rem[k + dd].clone();
            if lead.is_zero() {
                continue;
            }
            for (i, d) in divisor.coeffs.iter().enumerate() {
                rem[k + i] -= &lead * d;
            }
            quot[k] = lead;
        }
        (IntPolynomial::new(quot), IntPolynomial::new(rem))
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            first = false;
            let show_mag = !mag.is_one() || k == 0;
            if show_mag {
                write!(f, "{mag}")?;
            }
            match k {
                0 => {}
                1 => f.write_str("x")?,
                _ => write!(f, "x^{k}")?,
            }
        }
        Ok(())
    }
}

/// The `d`-th cyclotomic polynomial, by dividing `x^d - 1` by `Φ_e` for
/// every proper divisor `e` of `d`.
pub fn cyclotomic(d: usize) -> IntPolynomial {
    assert!(d >= 1, "cyclotomic index must be positive");
    let mut p = IntPolynomial::x_pow_minus_one(d);
    for e in 1..d {
        if d.is_multiple_of(e) {
            let (q, r) = p.div_rem_monic(&cyclotomic(e));
            debug_assert!(r.is_zero());
            p = q;
        }
    }
    p
}

/// Euler's totient.
pub fn euler_phi(mut d: u64) -> u64 {
    let mut result = d;
    let mut p = 2;
    while p * p <= d {
        if d.is_multiple_of(p) {
            while d.is_multiple_of(p) {
                d /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if d > 1 {
        result -= result / d;
    }
    result
}

pub(crate) fn lcm_u64(a: u64, b: u64) -> u64 {
    a.lcm(&b)
}
