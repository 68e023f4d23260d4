//! Quaternions with the Hamilton product.
//!
//! A quaternion is written `h = a + b*i + c*j + d*k`, or in its complex
//! split form `h = z + j*u` with `z = a + b*i` and `u = c - d*i`. The split
//! is chosen so that left multiplication by a unit complex number `t` acts
//! as `(z, u) -> (t*z, conj(t)*u)`.

use super::{AlgebraError, UNIT_TOL};
use num_complex::Complex64;
use std::ops::{Add, Mul, Neg, Sub};

#[derive(Clone, Copy, Debug, PartialEq, Default)]
pub struct Quaternion {
    /// Coefficient of 1.
    pub a: f64,
    /// Coefficient of i.
    pub b: f64,
    /// Coefficient of j.
    pub c: f64,
    /// Coefficient of k.
    pub d: f64,
}

impl Quaternion {
    pub const ZERO: Quaternion = Quaternion { a: 0.0, b: 0.0, c: 0.0, d: 0.0 };
    pub const ONE: Quaternion = Quaternion { a: 1.0, b: 0.0, c: 0.0, d: 0.0 };
    pub const I: Quaternion = Quaternion { a: 0.0, b: 1.0, c: 0.0, d: 0.0 };
    pub const J: Quaternion = Quaternion { a: 0.0, b: 0.0, c: 1.0, d: 0.0 };
    pub const K: Quaternion = Quaternion { a: 0.0, b: 0.0, c: 0.0, d: 1.0 };

    pub fn new(a: f64, b: f64, c: f64, d: f64) -> Self {
        Quaternion { a, b, c, d }
    }

    /// Builds `z + j*u`.
    pub fn from_split(z: Complex64, u: Complex64) -> Self {
        Quaternion { a: z.re, b: z.im, c: u.re, d: -u.im }
    }

    /// The complex split `(z, u)` with `self = z + j*u`.
    pub fn split(&self) -> (Complex64, Complex64) {
        (
            Complex64::new(self.a, self.b),
            Complex64::new(self.c, -self.d),
        )
    }

    pub fn from_coords(c: [f64; 4]) -> Self {
        Quaternion { a: c[0], b: c[1], c: c[2], d: c[3] }
    }

    pub fn coords(&self) -> [f64; 4] {
        [self.a, self.b, self.c, self.d]
    }

    /// Embeds a complex number as `a + b*i`.
    pub fn from_complex(z: Complex64) -> Self {
        Quaternion { a: z.re, b: z.im, c: 0.0, d: 0.0 }
    }

    pub fn conj(&self) -> Self {
        Quaternion { a: self.a, b: -self.b, c: -self.c, d: -self.d }
    }

    pub fn norm_sq(&self) -> f64 {
        self.a * self.a + self.b * self.b + self.c * self.c + self.d * self.d
    }

    pub fn norm(&self) -> f64 {
        self.norm_sq().sqrt()
    }

    pub fn scaled(&self, s: f64) -> Self {
        Quaternion { a: self.a * s, b: self.b * s, c: self.c * s, d: self.d * s }
    }

    pub fn inverse(&self) -> Option<Self> {
        let n = self.norm_sq();
        if n == 0.0 {
            None
        } else {
            Some(self.conj().scaled(1.0 / n))
        }
    }

    pub fn dot(&self, other: &Self) -> f64 {
        self.a * other.a + self.b * other.b + self.c * other.c + self.d * other.d
    }

    pub fn distance(&self, other: &Self) -> f64 {
        (*self - *other).norm()
    }

    pub fn normalized(&self) -> Result<UnitQuaternion, AlgebraError> {
        let n = self.norm();
        if n < 1e-300 {
            return Err(AlgebraError::NormalizeZero { norm: n });
        }
        Ok(UnitQuaternion(self.scaled(1.0 / n)))
    }
}

impl Add for Quaternion {
    type Output = Quaternion;
    fn add(self, o: Quaternion) -> Quaternion {
        Quaternion::new(self.a + o.a, self.b + o.b, self.c + o.c, self.d + o.d)
    }
}

impl Sub for Quaternion {
    type Output = Quaternion;
    fn sub(self, o: Quaternion) -> Quaternion {
        Quaternion::new(self.a - o.a, self.b - o.b, self.c - o.c, self.d - o.d)
    }
}

impl Neg for Quaternion {
    type Output = Quaternion;
    fn neg(self) -> Quaternion {
        Quaternion::new(-self.a, -self.b, -self.c, -self.d)
    }
}

/// Hamilton product: `i*j = k`, `j*k = i`, `k*i = j`.
impl Mul for Quaternion {
    type Output = Quaternion;
    fn mul(self, o: Quaternion) -> Quaternion {
        Quaternion {
            a: self.a * o.a - self.b * o.b - self.c * o.c - self.d * o.d,
            b: self.a * o.b + self.b * o.a + self.c * o.d - self.d * o.c,
            c: self.a * o.c - self.b * o.d + self.c * o.a + self.d * o.b,
            d: self.a * o.d + self.b * o.c - self.c * o.b + self.d * o.a,
        }
    }
}

/// A quaternion with `|norm^2 - 1| <= 1e-12`, the element type of the
/// 3-sphere group.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct UnitQuaternion(Quaternion);

impl UnitQuaternion {
    pub const ONE: UnitQuaternion = UnitQuaternion(Quaternion::ONE);

    pub fn try_new(q: Quaternion) -> Result<Self, AlgebraError> {
        let n2 = q.norm_sq();
        if (n2 - 1.0).abs() > UNIT_TOL {
            return Err(AlgebraError::NotUnit { norm: n2.sqrt(), tol: UNIT_TOL });
        }
        Ok(UnitQuaternion(q))
    }

    /// Rescales to unit norm; errors only on (near-)zero input.
    pub fn new_normalize(q: Quaternion) -> Result<Self, AlgebraError> {
        q.normalized()
    }

    pub fn as_quaternion(&self) -> &Quaternion {
        &self.0
    }

    pub fn into_inner(self) -> Quaternion {
        self.0
    }

    pub fn conj(&self) -> UnitQuaternion {
        UnitQuaternion(self.0.conj())
    }

    /// Unit complex number embedded in the (1, i) plane.
    pub fn from_angle(theta: f64) -> Self {
        UnitQuaternion(Quaternion::new(theta.cos(), theta.sin(), 0.0, 0.0))
    }
}

impl std::ops::Deref for UnitQuaternion {
    type Target = Quaternion;
    fn deref(&self) -> &Quaternion {
        &self.0
    }
}

impl Mul for UnitQuaternion {
    type Output = UnitQuaternion;
    fn mul(self, o: UnitQuaternion) -> UnitQuaternion {
        UnitQuaternion(self.0 * o.0)
    }
}
