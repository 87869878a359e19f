use crate::ring::Ring;
use crate::{LawtonError, TraceCoords, TraceCoordinates};
use num_complex::Complex64;
use rand::Rng;

/// 3×3 matrix over a commutative ring, row major.
#[derive(Debug, Clone, PartialEq)]
pub struct Mat3<T>(pub [[T; 3]; 3]);

impl<T: Ring> Mat3<T> {
    pub fn identity() -> Self {
        Self::from_fn(|i, j| if i == j { T::one() } else { T::zero() })
    }

    pub fn from_fn(f: impl Fn(usize, usize) -> T) -> Self {
        Self([0, 1, 2].map(|i| [0, 1, 2].map(|j| f(i, j))))
    }

    pub fn diag(d: [T; 3]) -> Self {
        Self::from_fn(|i, j| if i == j { d[i].clone() } else { T::zero() })
    }

    pub fn trace(&self) -> T {
        self.0[0][0].clone() + self.0[1][1].clone() + self.0[2][2].clone()
    }

    pub fn mul(&self, o: &Self) -> Self {
        Self::from_fn(|i, j| {
            (0..3).fold(T::zero(), |acc, k| acc + self.0[i][k].clone() * o.0[k][j].clone())
        })
    }

    pub fn sub(&self, o: &Self) -> Self {
        Self::from_fn(|i, j| self.0[i][j].clone() - o.0[i][j].clone())
    }

    pub fn add(&self, o: &Self) -> Self {
        Self::from_fn(|i, j| self.0[i][j].clone() + o.0[i][j].clone())
    }

    pub fn scale(&self, c: &T) -> Self {
        Self::from_fn(|i, j| self.0[i][j].clone() * c.clone())
    }

    fn minor(&self, i: usize, j: usize) -> T {
        let r = |k: usize| if k < i { k } else { k + 1 };
        let c = |k: usize| if k < j { k } else { k + 1 };
        self.0[r(0)][c(0)].clone() * self.0[r(1)][c(1)].clone()
            - self.0[r(0)][c(1)].clone() * self.0[r(1)][c(0)].clone()
    }

    pub fn det(&self) -> T {
        (0..3).fold(T::zero(), |acc, j| {
            let t = self.0[0][j].clone() * self.minor(0, j);
            if j % 2 == 0 {
                acc + t
            } else {
                acc - t
            }
        })
    }

    /// Transposed cofactor matrix; the inverse when det = 1.
    pub fn adjugate(&self) -> Self {
        Self::from_fn(|i, j| {
            let m = self.minor(j, i);
            if (i + j) % 2 == 0 {
                m
            } else {
                -m
            }
        })
    }
}

impl Mat3<Complex64> {
    /// Largest entry modulus.
    pub fn max_norm(&self) -> f64 {
        self.0.iter().flatten().map(|z| z.norm()).fold(0.0, f64::max)
    }

    pub fn inverse(&self) -> Self {
        let d = self.det();
        let adj = self.adjugate();
        Self::from_fn(|i, j| adj.0[i][j] / d)
    }
}

/// Coordinates of (A, B) for matrices of determinant exactly one, using the
/// adjugate as inverse.
pub fn trace_coords_exact<T: Ring>(a: &Mat3<T>, b: &Mat3<T>) -> Result<TraceCoords<T>, LawtonError> {
    if a.det() != T::one() || b.det() != T::one() {
        return Err(LawtonError::NotUnimodular(format!("det A = {:?}, det B = {:?}", a.det(), b.det())));
    }
    let (ai, bi) = (a.adjugate(), b.adjugate());
    Ok(coords_from(a, b, &ai, &bi))
}

fn coords_from<T: Ring>(a: &Mat3<T>, b: &Mat3<T>, ai: &Mat3<T>, bi: &Mat3<T>) -> TraceCoords<T> {
    let ab = a.mul(b);
    TraceCoords {
        x: a.trace(),
        y: b.trace(),
        z: ab.trace(),
        u: ai.trace(),
        v: bi.trace(),
        w: bi.mul(ai).trace(),
        r: a.mul(bi).trace(),
        s: ai.mul(b).trace(),
        tau: ab.mul(ai).mul(bi).trace(),
    }
}

/// A complex 3×3 matrix with |det − 1| within the tolerance it was checked
/// against.
#[derive(Debug, Clone, PartialEq)]
pub struct Sl3Matrix {
    m: Mat3<Complex64>,
}

impl Sl3Matrix {
    pub fn new(m: Mat3<Complex64>, tol: f64) -> Result<Self, LawtonError> {
        let d = m.det();
        if (d - Complex64::new(1.0, 0.0)).norm() > tol {
            return Err(LawtonError::NotUnimodular(format!("det = {d}")));
        }
        Ok(Self { m })
    }

    pub fn from_rows(rows: [[Complex64; 3]; 3], tol: f64) -> Result<Self, LawtonError> {
        Self::new(Mat3(rows), tol)
    }

    pub fn matrix(&self) -> &Mat3<Complex64> {
        &self.m
    }

    pub fn inverse(&self) -> Self {
        Self { m: self.m.inverse() }
    }

    /// g·self·g⁻¹ for an invertible g.
    pub fn conjugate_by(&self, g: &Mat3<Complex64>) -> Self {
        Self { m: g.mul(&self.m).mul(&g.inverse()) }
    }
}

/// x = tr A, y = tr B, z = tr AB, u = tr A⁻¹, v = tr B⁻¹, w = tr (AB)⁻¹,
/// r = tr AB⁻¹, s = tr A⁻¹B, τ = tr ABA⁻¹B⁻¹.
pub fn trace_coords(a: &Sl3Matrix, b: &Sl3Matrix) -> TraceCoordinates {
    coords_from(&a.m, &b.m, &a.m.inverse(), &b.m.inverse())
}

/// |τ² − Pτ + Q| / max(1, |P|, |Q|).
pub fn lawton_residual(a: &Sl3Matrix, b: &Sl3Matrix) -> f64 {
    let c = trace_coords(a, b);
    let (p, q) = (crate::eval_p(&c), crate::eval_q(&c));
    (c.tau * c.tau - p * c.tau + q).norm() / 1f64.max(p.norm()).max(q.norm())
}

/// Largest entry of A³ − (tr A)A² + (tr A⁻¹)A − Id.
pub fn cayley_hamilton_residual(a: &Sl3Matrix) -> f64 {
    let m = &a.m;
    let m2 = m.mul(m);
    let m3 = m2.mul(m);
    m3.sub(&m2.scale(&m.trace()))
        .add(&m.scale(&m.inverse().trace()))
        .sub(&Mat3::identity())
        .max_norm()
}

/// Draws with |det| below this are rejected.
pub const SINGULAR_CUTOFF: f64 = 1e-6;

/// Entries with real and imaginary parts uniform in [−1, 1], divided by a
/// cube root of the determinant. Returns the matrix and the number of
/// rejected draws.
pub fn random_unimodular<R: Rng>(rng: &mut R) -> (Sl3Matrix, u32) {
    let mut rejected = 0;
    loop {
        let mut entry = || Complex64::new(rng.random_range(-1.0..=1.0), rng.random_range(-1.0..=1.0));
        let m = Mat3([(); 3].map(|_| [(); 3].map(|_| entry())));
        let d = m.det();
        if d.norm() < SINGULAR_CUTOFF {
            rejected += 1;
            continue;
        }
        let c = d.powf(1.0 / 3.0);
        let m = m.scale(&(Complex64::new(1.0, 0.0) / c));
        let m = Sl3Matrix::new(m, 1e-9).expect("normalised determinant is 1 up to rounding");
        return (m, rejected);
    }
}
