//! Compactified space, homogeneous pairs and sphere inversions.

use std::fmt;

use crate::error::{Error, Result};
use crate::quat::{Quaternion, DEFAULT_TOL};

/// `w` counts as zero when `|w| <= INFINITY_EPS * |u|`.
pub const INFINITY_EPS: f64 = 1e-14;

/// A point of R^3 together with the point at infinity.
///
/// Finite points always have a zero real part.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ExtendedPoint(Option<Quaternion>);

impl ExtendedPoint {
    pub const INFINITY: ExtendedPoint = ExtendedPoint(None);

    /// Rejects quaternions with a nonzero real part.
    pub fn new(q: Quaternion) -> Result<Self> {
        if q.r != 0.0 {
            return Err(Error::NotImaginary(q.r));
        }
        if !q.is_finite() {
            return Err(Error::Degenerate("point has non-finite coordinates".into()));
        }
        Ok(ExtendedPoint(Some(q)))
    }

    /// Keeps only the imaginary part of `q`.
    pub fn from_im(q: Quaternion) -> Self {
        ExtendedPoint(Some(q.im()))
    }

    pub fn xyz(x: f64, y: f64, z: f64) -> Self {
        ExtendedPoint(Some(Quaternion::point(x, y, z)))
    }

    pub fn finite(self) -> Option<Quaternion> {
        self.0
    }

    pub fn is_infinite(self) -> bool {
        self.0.is_none()
    }

    /// Finite coordinates or [`Error::AtInfinity`].
    pub fn expect_finite(self) -> Result<Quaternion> {
        self.0.ok_or(Error::AtInfinity)
    }

    /// `inf == inf`; finite points within `tol * max(1, |a|, |b|)`.
    pub fn approx_eq(self, other: ExtendedPoint, tol: f64) -> bool {
        match (self.0, other.0) {
            (None, None) => true,
            (Some(a), Some(b)) => a.distance(b) <= tol * 1f64.max(a.norm()).max(b.norm()),
            _ => false,
        }
    }
}

impl From<Quaternion> for ExtendedPoint {
    fn from(q: Quaternion) -> Self {
        ExtendedPoint::from_im(q)
    }
}

impl fmt::Display for ExtendedPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.0 {
            None => write!(f, "inf"),
            // adding 0.0 turns -0 into 0
            Some(p) => write!(f, "{} {} {}", p.x + 0.0, p.y + 0.0, p.z + 0.0),
        }
    }
}

/// A pair `(u, w)` standing for the point `u w^-1`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HomogeneousPoint {
    pub u: Quaternion,
    pub w: Quaternion,
}

impl HomogeneousPoint {
    pub fn new(u: Quaternion, w: Quaternion) -> Result<Self> {
        if u.is_zero() && w.is_zero() {
            return Err(Error::Degenerate("homogeneous pair (0, 0)".into()));
        }
        Ok(HomogeneousPoint { u, w })
    }

    /// `(p w, w)`, the control pair of point `p` with weight `w`.
    pub fn weighted(p: Quaternion, w: Quaternion) -> Self {
        HomogeneousPoint { u: p * w, w }
    }

    /// `(p, 1)` for finite points and `(1, 0)` for infinity.
    pub fn from_point(p: ExtendedPoint) -> Self {
        match p.finite() {
            Some(q) => HomogeneousPoint {
                u: q,
                w: Quaternion::ONE,
            },
            None => HomogeneousPoint {
                u: Quaternion::ONE,
                w: Quaternion::ZERO,
            },
        }
    }

    /// `(u conj(w) + w conj(u)) / 2`, the real part of `u conj(w)`.
    pub fn study_form(&self) -> f64 {
        (self.u * self.w.conj() + self.w * self.u.conj()).r * 0.5
    }

    /// Scale-free Study residual `|S(u, w)| / (|u|^2 + |w|^2)`.
    ///
    /// For `w != 0` this is `|re p| / (1 + |p|^2)` with `p = u w^-1`.
    pub fn study_residual(&self) -> f64 {
        let m = self.u.max_abs().max(self.w.max_abs());
        if m == 0.0 {
            return 0.0;
        }
        let h = HomogeneousPoint {
            u: self.u / m,
            w: self.w / m,
        };
        h.study_form().abs() / (h.u.norm_sqr() + h.w.norm_sqr())
    }

    pub fn on_study_quadric(&self, tol: f64) -> bool {
        self.study_residual() <= tol
    }

    /// Projection `u w^-1`, or infinity when `w` vanishes.
    pub fn project(&self) -> Result<ExtendedPoint> {
        self.project_with_tol(DEFAULT_TOL)
    }

    pub fn project_with_tol(&self, tol: f64) -> Result<ExtendedPoint> {
        let residual = self.study_residual();
        if residual > tol {
            return Err(Error::OffStudyQuadric { residual });
        }
        Ok(self.project_unchecked())
    }

    /// Projection that drops the real part without checking the Study form.
    pub fn project_unchecked(&self) -> ExtendedPoint {
        if self.w.norm() <= INFINITY_EPS * self.u.norm() {
            return ExtendedPoint::INFINITY;
        }
        // w^-1 cannot fail: w is nonzero here
        ExtendedPoint::from_im(self.u * self.w.inverse().unwrap_or(Quaternion::ZERO))
    }

    /// Representative scaled so its largest real coefficient is +-1.
    pub fn normalized(&self) -> HomogeneousPoint {
        let m = self.u.max_abs().max(self.w.max_abs());
        if m == 0.0 {
            return *self;
        }
        HomogeneousPoint {
            u: self.u / m,
            w: self.w / m,
        }
    }

    /// Right multiplication of both entries; preserves the projected point.
    pub fn right_mul(&self, c: Quaternion) -> HomogeneousPoint {
        HomogeneousPoint {
            u: self.u * c,
            w: self.w * c,
        }
    }

    pub fn scale(&self, c: f64) -> HomogeneousPoint {
        HomogeneousPoint {
            u: self.u * c,
            w: self.w * c,
        }
    }
}

/// Sphere with imaginary center and positive radius.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SphereOfInversion {
    center: Quaternion,
    radius: f64,
}

impl SphereOfInversion {
    pub fn new(center: Quaternion, radius: f64) -> Result<Self> {
        if center.r != 0.0 {
            return Err(Error::NotImaginary(center.r));
        }
        if !(radius > 0.0 && radius.is_finite()) {
            return Err(Error::Degenerate(format!(
                "inversion radius {radius} must be positive"
            )));
        }
        Ok(SphereOfInversion { center, radius })
    }

    pub fn center(&self) -> Quaternion {
        self.center
    }

    pub fn radius(&self) -> f64 {
        self.radius
    }

    /// `q - r^2 (p - q)^-1`, swapping the center with infinity.
    pub fn invert_point(&self, p: ExtendedPoint) -> ExtendedPoint {
        let q = self.center;
        match p.finite() {
            None => ExtendedPoint::from_im(q),
            Some(p) => {
                let d = p - q;
                match d.inverse() {
                    Ok(d_inv) => ExtendedPoint::from_im(q - d_inv * (self.radius * self.radius)),
                    Err(_) => ExtendedPoint::INFINITY,
                }
            }
        }
    }

    /// Transport of a homogeneous pair: `(q u - (r^2 + q^2) w, u - q w)`.
    pub fn invert_homogeneous(&self, h: &HomogeneousPoint) -> HomogeneousPoint {
        let q = self.center;
        let r2q2 = Quaternion::real(self.radius * self.radius) + q * q;
        HomogeneousPoint {
            u: q * h.u - r2q2 * h.w,
            w: h.u - q * h.w,
        }
    }
}
