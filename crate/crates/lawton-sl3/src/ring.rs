//! Minimal commutative-ring abstraction so that the trace polynomials and
//! 3×3 matrix algebra run over floats, integers and exact number fields.

use num_complex::Complex64;
use num_rational::Ratio;
use num_traits::{One, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

pub trait Ring:
    Clone + PartialEq + fmt::Debug + Add<Output = Self> + Sub<Output = Self> + Mul<Output = Self> + Neg<Output = Self>
{
    fn from_int(n: i64) -> Self;

    fn zero() -> Self {
        Self::from_int(0)
    }

    fn one() -> Self {
        Self::from_int(1)
    }

    fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = acc * self.clone();
        }
        acc
    }
}

impl Ring for i128 {
    fn from_int(n: i64) -> Self {
        n.into()
    }
}

impl Ring for Complex64 {
    fn from_int(n: i64) -> Self {
        Complex64::new(n as f64, 0.0)
    }
}

pub type Q = Ratio<i128>;

/// a + b√D with a, b rational. D is a fixed squarefree integer.
#[derive(Clone, Copy, PartialEq, Eq)]
pub struct Quad<const D: i64> {
    pub a: Q,
    pub b: Q,
}

/// ℚ(i)
pub type Gaussian = Quad<-1>;
/// ℚ(√2)
pub type Sqrt2 = Quad<2>;
/// ℚ(√−3), containing the cube roots of unity.
pub type Eisenstein = Quad<-3>;

impl<const D: i64> Quad<D> {
    pub fn new(a: Q, b: Q) -> Self {
        Self { a, b }
    }

    /// (a_num/a_den) + (b_num/b_den)√D
    pub fn from_parts(a_num: i128, a_den: i128, b_num: i128, b_den: i128) -> Self {
        Self { a: Q::new(a_num, a_den), b: Q::new(b_num, b_den) }
    }

    /// √D itself.
    pub fn root() -> Self {
        Self { a: Q::zero(), b: Q::one() }
    }

    pub fn conj(&self) -> Self {
        Self { a: self.a, b: -self.b }
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn to_complex(&self) -> Complex64 {
        let f = |q: &Q| *q.numer() as f64 / *q.denom() as f64;
        let s = (D.abs() as f64).sqrt();
        if D < 0 {
            Complex64::new(f(&self.a), f(&self.b) * s)
        } else {
            Complex64::new(f(&self.a) + f(&self.b) * s, 0.0)
        }
    }
}

impl<const D: i64> Add for Quad<D> {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        Self { a: self.a + o.a, b: self.b + o.b }
    }
}

impl<const D: i64> Sub for Quad<D> {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        Self { a: self.a - o.a, b: self.b - o.b }
    }
}

impl<const D: i64> Mul for Quad<D> {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        Self { a: self.a * o.a + Q::from_integer(D.into()) * self.b * o.b, b: self.a * o.b + self.b * o.a }
    }
}

impl<const D: i64> Neg for Quad<D> {
    type Output = Self;
    fn neg(self) -> Self {
        Self { a: -self.a, b: -self.b }
    }
}

impl<const D: i64> Ring for Quad<D> {
    fn from_int(n: i64) -> Self {
        Self { a: Q::from_integer(n.into()), b: Q::zero() }
    }
}

impl<const D: i64> fmt::Debug for Quad<D> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl<const D: i64> fmt::Display for Quad<D> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let root = if D == -1 { "i".to_string() } else { format!("√{D}") };
        match (self.a.is_zero(), self.b.is_zero()) {
            (_, true) => write!(f, "{}", self.a),
            (true, false) => write!(f, "{}{root}", self.b),
            (false, false) if self.b < Q::zero() => write!(f, "{}-{}{root}", self.a, -self.b),
            (false, false) => write!(f, "{}+{}{root}", self.a, self.b),
        }
    }
}

/// Univariate integer polynomial, coefficients in increasing degree.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct UniPoly(Vec<i128>);

impl UniPoly {
    pub fn new(mut coeffs: Vec<i128>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        Self(coeffs)
    }

    /// The indeterminate.
    pub fn var() -> Self {
        Self(vec![0, 1])
    }

    pub fn coeffs(&self) -> &[i128] {
        &self.0
    }

    pub fn derivative(&self) -> Self {
        Self::new(self.0.iter().enumerate().skip(1).map(|(i, c)| c * i as i128).collect())
    }

    pub fn eval<T: Ring>(&self, t: &T) -> T {
        self.0.iter().rev().fold(T::zero(), |acc, &c| acc * t.clone() + T::from_int(c as i64))
    }
}

impl Add for UniPoly {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        let n = self.0.len().max(o.0.len());
        Self::new((0..n).map(|i| self.0.get(i).unwrap_or(&0) + o.0.get(i).unwrap_or(&0)).collect())
    }
}

impl Sub for UniPoly {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        self + (-o)
    }
}

impl Neg for UniPoly {
    type Output = Self;
    fn neg(self) -> Self {
        Self(self.0.into_iter().map(|c| -c).collect())
    }
}

impl Mul for UniPoly {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        if self.0.is_empty() || o.0.is_empty() {
            return Self(vec![]);
        }
        let mut out = vec![0i128; self.0.len() + o.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in o.0.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }
}

impl Ring for UniPoly {
    fn from_int(n: i64) -> Self {
        Self::new(vec![n.into()])
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quadratic_arithmetic() {
        let i = Gaussian::root();
        assert_eq!(i * i, Gaussian::from_int(-1));
        let s = Sqrt2::from_parts(2, 1, 2, 1);
        assert_eq!(s * s, Sqrt2::from_parts(12, 1, 8, 1));
        let omega = Eisenstein::from_parts(-1, 2, 1, 2);
        assert_eq!(omega.pow(3), Eisenstein::one());
        assert_eq!(omega * omega + omega + Eisenstein::one(), Eisenstein::zero());
        assert!((omega.to_complex().norm() - 1.0).abs() < 1e-15);
    }

    #[test]
    fn display() {
        assert_eq!(Sqrt2::from_parts(5, 1, 4, 1).to_string(), "5+4√2");
        assert_eq!(Gaussian::from_parts(-1, 1, -2, 1).to_string(), "-1-2i");
        assert_eq!(Eisenstein::from_parts(-3, 2, 1, 2).to_string(), "-3/2+1/2√-3");
    }

    #[test]
    fn polynomials() {
        let r = UniPoly::var();
        let p = (r.clone() - UniPoly::from_int(2)).pow(2);
        assert_eq!(p.coeffs(), &[4, -4, 1]);
        assert_eq!(p.derivative().coeffs(), &[-4, 2]);
        assert_eq!(p.eval(&7i128), 25);
    }
}
