//! Octonions over the basis `1, l, i, il, j, jl, k, kl`.
//!
//! The product is generated from the quaternions by Cayley-Dickson doubling
//! with `l` as the doubling unit:
//!
//! ```text
//! (p + q*l)(r + s*l) = (p*r - conj(s)*q) + (s*p + q*conj(r))*l
//! ```
//!
//! With this convention `i*l = il` while `l*i = -il`, and the torus of
//! automorphisms fixing `1` and `l` rotates the `(i,il)`, `(j,jl)`,
//! `(k,kl)` planes (see [`super::OctonionAutomorphism`]). Basis products are
//! exact: every product of two basis elements is plus or minus a basis
//! element with no rounding.

use super::quaternion::Quaternion;
use std::ops::{Add, Mul, Neg, Sub};

pub const OCTONION_BASIS_NAMES: [&str; 8] = ["1", "l", "i", "il", "j", "jl", "k", "kl"];

#[derive(Clone, Copy, Debug, PartialEq, Default)]
pub struct Octonion {
    /// Coefficients in basis order `1, l, i, il, j, jl, k, kl`.
    pub coeffs: [f64; 8],
}

impl Octonion {
    pub const ZERO: Octonion = Octonion { coeffs: [0.0; 8] };

    pub fn new(coeffs: [f64; 8]) -> Self {
        Octonion { coeffs }
    }

    /// The basis element with the given index (0 = `1`, 1 = `l`, ...).
    pub fn basis(idx: usize) -> Self {
        let mut coeffs = [0.0; 8];
        coeffs[idx] = 1.0;
        Octonion { coeffs }
    }

    pub fn one() -> Self {
        Octonion::basis(0)
    }

    /// Builds `p + q*l` from quaternion halves.
    pub fn from_halves(p: Quaternion, q: Quaternion) -> Self {
        Octonion {
            coeffs: [p.a, q.a, p.b, q.b, p.c, q.c, p.d, q.d],
        }
    }

    /// The quaternion halves `(p, q)` with `self = p + q*l`.
    pub fn halves(&self) -> (Quaternion, Quaternion) {
        let c = &self.coeffs;
        (
            Quaternion::new(c[0], c[2], c[4], c[6]),
            Quaternion::new(c[1], c[3], c[5], c[7]),
        )
    }

    pub fn conj(&self) -> Self {
        let mut coeffs = self.coeffs;
        for v in coeffs.iter_mut().skip(1) {
            *v = -*v;
        }
        Octonion { coeffs }
    }

    pub fn norm_sq(&self) -> f64 {
        self.coeffs.iter().map(|v| v * v).sum()
    }

    pub fn norm(&self) -> f64 {
        self.norm_sq().sqrt()
    }

    pub fn scaled(&self, s: f64) -> Self {
        let mut coeffs = self.coeffs;
        for v in coeffs.iter_mut() {
            *v *= s;
        }
        Octonion { coeffs }
    }

    pub fn distance(&self, other: &Self) -> f64 {
        (*self - *other).norm()
    }

    /// Signed structure constant: `basis(p) * basis(q) = sign * basis(index)`.
    pub fn basis_product(p: usize, q: usize) -> (i32, usize) {
        let prod = Octonion::basis(p) * Octonion::basis(q);
        let mut hit = None;
        for (idx, &v) in prod.coeffs.iter().enumerate() {
            if v != 0.0 {
                assert!(hit.is_none(), "basis product is not a signed basis element");
                assert!(v == 1.0 || v == -1.0);
                hit = Some((v as i32, idx));
            }
        }
        hit.expect("basis product vanished")
    }
}

impl Add for Octonion {
    type Output = Octonion;
    fn add(self, o: Octonion) -> Octonion {
        let mut coeffs = [0.0; 8];
        for (v, (x, y)) in coeffs.iter_mut().zip(self.coeffs.iter().zip(o.coeffs.iter())) {
            *v = x + y;
        }
        Octonion { coeffs }
    }
}

impl Sub for Octonion {
    type Output = Octonion;
    fn sub(self, o: Octonion) -> Octonion {
        let mut coeffs = [0.0; 8];
        for (v, (x, y)) in coeffs.iter_mut().zip(self.coeffs.iter().zip(o.coeffs.iter())) {
            *v = x - y;
        }
        Octonion { coeffs }
    }
}

impl Neg for Octonion {
    type Output = Octonion;
    fn neg(self) -> Octonion {
        self.scaled(-1.0)
    }
}

impl Mul for Octonion {
    type Output = Octonion;
    fn mul(self, o: Octonion) -> Octonion {
        let (p, q) = self.halves();
        let (r, s) = o.halves();
        let first = p * r - s.conj() * q;
        let second = s * p + q * r.conj();
        Octonion::from_halves(first, second)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quaternion_subalgebra() {
        // i*j = k inside the octonions
        let i = Octonion::basis(2);
        let j = Octonion::basis(4);
        let k = Octonion::basis(6);
        assert_eq!(i * j, k);
        // restriction to span(1,i,j,k) is the Hamilton product
        let p = Quaternion::new(0.2, -0.7, 0.4, 0.1);
        let q = Quaternion::new(-0.3, 0.5, 0.9, -0.2);
        let oct = Octonion::from_halves(p, Quaternion::ZERO) * Octonion::from_halves(q, Quaternion::ZERO);
        assert_eq!(oct, Octonion::from_halves(p * q, Quaternion::ZERO));
    }

    #[test]
    fn doubling_unit_squares_to_minus_one() {
        let l = Octonion::basis(1);
        assert_eq!(l * l, -Octonion::one());
    }

    #[test]
    fn il_versus_li() {
        let l = Octonion::basis(1);
        let i = Octonion::basis(2);
        let il = Octonion::basis(3);
        assert_eq!(i * l, il);
        assert_eq!(l * i, -il);
    }

    #[test]
    fn basis_table_is_signed_and_norm_multiplicative() {
        for p in 0..8 {
            for q in 0..8 {
                let (sign, idx) = Octonion::basis_product(p, q);
                assert!(sign == 1 || sign == -1);
                assert!(idx < 8);
                // exact norm multiplicativity on basis elements
                let prod = Octonion::basis(p) * Octonion::basis(q);
                assert_eq!(prod.norm_sq(), 1.0);
            }
        }
    }

    #[test]
    fn alternative_on_basis_pairs() {
        // x(xy) = (xx)y for all basis pairs
        for p in 0..8 {
            for q in 0..8 {
                let x = Octonion::basis(p);
                let y = Octonion::basis(q);
                let lhs = x * (x * y);
                let rhs = (x * x) * y;
                assert_eq!(lhs, rhs, "alternativity failed on ({p}, {q})");
            }
        }
    }

    #[test]
    fn norm_multiplicative_on_floats() {
        let mut state = 0xdeadbeefdeadbeefu64;
        let mut next = move || {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            (state >> 11) as f64 / (1u64 << 53) as f64 - 0.5
        };
        for _ in 0..2_000 {
            let x = Octonion::new(std::array::from_fn(|_| next()));
            let y = Octonion::new(std::array::from_fn(|_| next()));
            let residual = ((x * y).norm() - x.norm() * y.norm()).abs();
            assert!(residual <= 1e-12, "residual {residual}");
        }
    }
}
