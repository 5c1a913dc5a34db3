//! Quaternion algebra over `f64`.
//!
//! Points and vectors of 3-space are imaginary quaternions `x i + y j + z k`.
//! For two imaginary quaternions `a b = -a.b + a x b`, so the dot and cross
//! products fall out of the Hamilton product.

use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Default relative tolerance for geometric predicates.
pub const DEFAULT_TOL: f64 = 1e-9;

/// `r + x i + y j + z k`.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct Quaternion {
    pub r: f64,
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl Quaternion {
    pub const ZERO: Quaternion = Quaternion::new(0.0, 0.0, 0.0, 0.0);
    pub const ONE: Quaternion = Quaternion::new(1.0, 0.0, 0.0, 0.0);
    pub const I: Quaternion = Quaternion::new(0.0, 1.0, 0.0, 0.0);
    pub const J: Quaternion = Quaternion::new(0.0, 0.0, 1.0, 0.0);
    pub const K: Quaternion = Quaternion::new(0.0, 0.0, 0.0, 1.0);

    pub const fn new(r: f64, x: f64, y: f64, z: f64) -> Self {
        Quaternion { r, x, y, z }
    }

    /// The imaginary quaternion `x i + y j + z k`.
    pub const fn point(x: f64, y: f64, z: f64) -> Self {
        Quaternion::new(0.0, x, y, z)
    }

    pub const fn real(r: f64) -> Self {
        Quaternion::new(r, 0.0, 0.0, 0.0)
    }

    pub fn from_array(a: [f64; 4]) -> Self {
        Quaternion::new(a[0], a[1], a[2], a[3])
    }

    pub fn to_array(self) -> [f64; 4] {
        [self.r, self.x, self.y, self.z]
    }

    /// Imaginary coefficients `[x, y, z]`.
    pub fn xyz(self) -> [f64; 3] {
        [self.x, self.y, self.z]
    }

    pub fn re(self) -> f64 {
        self.r
    }

    pub fn im(self) -> Quaternion {
        Quaternion::point(self.x, self.y, self.z)
    }

    pub fn conj(self) -> Quaternion {
        Quaternion::new(self.r, -self.x, -self.y, -self.z)
    }

    pub fn norm_sqr(self) -> f64 {
        self.r * self.r + self.x * self.x + self.y * self.y + self.z * self.z
    }

    pub fn norm(self) -> f64 {
        // hypot-style scaling keeps tiny and huge quaternions finite
        let m = self.max_abs();
        if m == 0.0 || !m.is_finite() {
            return m;
        }
        let s = self / m;
        m * s.norm_sqr().sqrt()
    }

    /// Largest absolute coefficient.
    pub fn max_abs(self) -> f64 {
        self.r
            .abs()
            .max(self.x.abs())
            .max(self.y.abs())
            .max(self.z.abs())
    }

    pub fn is_zero(self) -> bool {
        self.r == 0.0 && self.x == 0.0 && self.y == 0.0 && self.z == 0.0
    }

    pub fn is_finite(self) -> bool {
        self.r.is_finite() && self.x.is_finite() && self.y.is_finite() && self.z.is_finite()
    }

    /// `conj(q) / |q|^2`.
    pub fn inverse(self) -> Result<Quaternion> {
        if self.is_zero() {
            return Err(Error::ZeroInverse);
        }
        let m = self.max_abs();
        let s = self / m;
        Ok(s.conj() / (s.norm_sqr() * m))
    }

    /// Euclidean inner product on R^4. For imaginary quaternions this is the
    /// dot product of 3-space.
    pub fn dot(self, other: Quaternion) -> f64 {
        self.r * other.r + self.x * other.x + self.y * other.y + self.z * other.z
    }

    /// Cross product of the imaginary parts.
    pub fn cross(self, other: Quaternion) -> Quaternion {
        Quaternion::point(
            self.y * other.z - self.z * other.y,
            self.z * other.x - self.x * other.z,
            self.x * other.y - self.y * other.x,
        )
    }

    pub fn distance(self, other: Quaternion) -> f64 {
        (self - other).norm()
    }

    /// `self / |self|`, or an error for zero.
    pub fn normalized(self) -> Result<Quaternion> {
        let n = self.norm();
        if n == 0.0 {
            return Err(Error::Degenerate(
                "cannot normalize a zero quaternion".into(),
            ));
        }
        Ok(self / n)
    }
}

impl Add for Quaternion {
    type Output = Quaternion;
    fn add(self, o: Quaternion) -> Quaternion {
        Quaternion::new(self.r + o.r, self.x + o.x, self.y + o.y, self.z + o.z)
    }
}

impl Sub for Quaternion {
    type Output = Quaternion;
    fn sub(self, o: Quaternion) -> Quaternion {
        Quaternion::new(self.r - o.r, self.x - o.x, self.y - o.y, self.z - o.z)
    }
}

impl Neg for Quaternion {
    type Output = Quaternion;
    fn neg(self) -> Quaternion {
        Quaternion::new(-self.r, -self.x, -self.y, -self.z)
    }
}

/// Hamilton product.
impl Mul for Quaternion {
    type Output = Quaternion;
    fn mul(self, o: Quaternion) -> Quaternion {
        Quaternion::new(
            self.r * o.r - self.x * o.x - self.y * o.y - self.z * o.z,
            self.r * o.x + self.x * o.r + self.y * o.z - self.z * o.y,
            self.r * o.y - self.x * o.z + self.y * o.r + self.z * o.x,
            self.r * o.z + self.x * o.y - self.y * o.x + self.z * o.r,
        )
    }
}

impl Mul<f64> for Quaternion {
    type Output = Quaternion;
    fn mul(self, s: f64) -> Quaternion {
        Quaternion::new(self.r * s, self.x * s, self.y * s, self.z * s)
    }
}

impl Mul<Quaternion> for f64 {
    type Output = Quaternion;
    fn mul(self, q: Quaternion) -> Quaternion {
        q * self
    }
}

impl Div<f64> for Quaternion {
    type Output = Quaternion;
    fn div(self, s: f64) -> Quaternion {
        Quaternion::new(self.r / s, self.x / s, self.y / s, self.z / s)
    }
}

impl AddAssign for Quaternion {
    fn add_assign(&mut self, o: Quaternion) {
        *self = *self + o;
    }
}

impl SubAssign for Quaternion {
    fn sub_assign(&mut self, o: Quaternion) {
        *self = *self - o;
    }
}

impl MulAssign<f64> for Quaternion {
    fn mul_assign(&mut self, s: f64) {
        *self = *self * s;
    }
}

impl Sum for Quaternion {
    fn sum<I: Iterator<Item = Quaternion>>(iter: I) -> Quaternion {
        iter.fold(Quaternion::ZERO, Add::add)
    }
}

impl fmt::Display for Quaternion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + {}i + {}j + {}k", self.r, self.x, self.y, self.z)
    }
}

/// Largest pairwise distance among `points`.
pub fn characteristic_scale(points: &[Quaternion]) -> f64 {
    let mut scale = 0.0_f64;
    for (n, a) in points.iter().enumerate() {
        for b in &points[n + 1..] {
            scale = scale.max(a.distance(*b));
        }
    }
    scale
}

fn vanishes(d: Quaternion, scale: f64) -> bool {
    d.norm() <= f64::EPSILON * scale.max(f64::MIN_POSITIVE)
}

/// `(p0 - p1)(p1 - p2)^-1 (p2 - p3)(p3 - p0)^-1`, in exactly this factor order.
pub fn cross_ratio(
    p0: Quaternion,
    p1: Quaternion,
    p2: Quaternion,
    p3: Quaternion,
) -> Result<Quaternion> {
    let scale = characteristic_scale(&[p0, p1, p2, p3]);
    let d12 = p1 - p2;
    let d30 = p3 - p0;
    if vanishes(d12, scale) {
        return Err(Error::Degenerate(
            "cross-ratio factor p1 - p2 vanishes".into(),
        ));
    }
    if vanishes(d30, scale) {
        return Err(Error::Degenerate(
            "cross-ratio factor p3 - p0 vanishes".into(),
        ));
    }
    Ok((p0 - p1) * d12.inverse()? * (p2 - p3) * d30.inverse()?)
}

/// `|im cr| / (1 + |cr|)`; zero exactly when the four points are cocircular.
pub fn cocircularity_residual(
    p0: Quaternion,
    p1: Quaternion,
    p2: Quaternion,
    p3: Quaternion,
) -> Result<f64> {
    let pts = [p0, p1, p2, p3];
    let scale = characteristic_scale(&pts);
    for a in 0..4 {
        for b in a + 1..4 {
            if vanishes(pts[a] - pts[b], scale) {
                return Err(Error::Coincident(format!(
                    "points {a} and {b} of the quadruple"
                )));
            }
        }
    }
    let cr = cross_ratio(p0, p1, p2, p3)?;
    Ok(cr.im().norm() / (1.0 + cr.norm()))
}

/// Whether four pairwise distinct points lie on one circle. Collinear
/// quadruples count as cocircular (a line is a circle through infinity).
pub fn is_cocircular(
    p0: Quaternion,
    p1: Quaternion,
    p2: Quaternion,
    p3: Quaternion,
    tol: f64,
) -> Result<bool> {
    Ok(cocircularity_residual(p0, p1, p2, p3)? <= tol)
}

/// `|(b - a) x (c - a)| / (|b - a| |c - a|)`, the sine of the angle at `a`.
pub fn collinearity_residual(a: Quaternion, b: Quaternion, c: Quaternion) -> f64 {
    let u = b - a;
    let v = c - a;
    let denom = u.norm() * v.norm();
    if denom == 0.0 {
        return 0.0;
    }
    u.cross(v).norm() / denom
}

pub fn is_collinear(a: Quaternion, b: Quaternion, c: Quaternion, tol: f64) -> bool {
    collinearity_residual(a, b, c) <= tol
}
