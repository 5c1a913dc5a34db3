//! Circle, line and sphere fits used by the validators.

use nalgebra::DMatrix;

use crate::error::{Error, Result};
use crate::moebius::ExtendedPoint;
use crate::quat::{characteristic_scale, cocircularity_residual, Quaternion};

/// A circle or a line (a circle through infinity).
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum GenCircle {
    Circle {
        center: Quaternion,
        normal: Quaternion,
        radius: f64,
        start: Quaternion,
    },
    Line {
        point: Quaternion,
        dir: Quaternion,
    },
}

impl GenCircle {
    /// The generalized circle through three distinct points. Nearly collinear
    /// triples (sine of the angle below `1e-12`) give a line.
    pub fn through(a: Quaternion, b: Quaternion, c: Quaternion) -> Result<Self> {
        let u = b - a;
        let v = c - a;
        if u.norm() == 0.0 || v.norm() == 0.0 || (b - c).norm() == 0.0 {
            return Err(Error::Coincident("circle through three points".into()));
        }
        let n = u.cross(v);
        if n.norm() <= 1e-12 * u.norm() * v.norm() {
            let dir = if u.norm() >= v.norm() { u } else { v };
            return Ok(GenCircle::Line {
                point: a,
                dir: dir.normalized()?,
            });
        }
        let nn = n.norm_sqr();
        let center = a + (v.cross(n) * u.norm_sqr() + n.cross(u) * v.norm_sqr()) / (2.0 * nn);
        Ok(GenCircle::Circle {
            center,
            normal: n.normalized()?,
            radius: (a - center).norm(),
            start: a,
        })
    }

    /// Euclidean distance from `x` to the curve.
    pub fn distance(&self, x: Quaternion) -> f64 {
        match *self {
            GenCircle::Line { point, dir } => (x - point).cross(dir).norm(),
            GenCircle::Circle {
                center,
                normal,
                radius,
                ..
            } => {
                let d = x - center;
                let h = d.dot(normal);
                let rho = (d - normal * h).norm();
                (h * h + (rho - radius) * (rho - radius)).sqrt()
            }
        }
    }

    /// Point at angle `theta` from the first defining point (circles), or at
    /// signed distance `theta` along the line.
    pub fn point_at(&self, theta: f64) -> Quaternion {
        match *self {
            GenCircle::Line { point, dir } => point + dir * theta,
            GenCircle::Circle {
                center,
                normal,
                radius,
                start,
            } => {
                let e1 = (start - center) / radius;
                let e2 = normal.cross(e1);
                center + (e1 * theta.cos() + e2 * theta.sin()) * radius
            }
        }
    }
}

/// Largest cocircularity residual of the finite `samples` against the
/// generalized circle through `refs`. Samples on top of a reference point
/// count as zero.
pub fn circle_membership(refs: [Quaternion; 3], samples: &[ExtendedPoint]) -> Result<f64> {
    GenCircle::through(refs[0], refs[1], refs[2])?;
    let size = characteristic_scale(&refs);
    let mut worst = 0.0_f64;
    for x in samples.iter().filter_map(|p| p.finite()) {
        if refs.iter().any(|r| x.distance(*r) <= 1e-12 * size) {
            continue;
        }
        worst = worst.max(cocircularity_residual(refs[0], refs[1], refs[2], x)?);
    }
    Ok(worst)
}

/// Smallest singular value of the normalized sphere/plane fit system.
///
/// Finite points are centered and scaled to unit size, then fitted with
/// `a |y|^2 + b.y + c = 0`. When any point is infinite only planes
/// (`a = 0`) are admissible. Zero means exactly cospherical (or coplanar).
pub fn cosphericity_residual(points: &[ExtendedPoint]) -> f64 {
    let finite: Vec<Quaternion> = points.iter().filter_map(|p| p.finite()).collect();
    let with_infinity = finite.len() < points.len();
    let cols = if with_infinity { 4 } else { 5 };
    if finite.len() < cols {
        return 0.0;
    }
    let centroid = finite.iter().copied().sum::<Quaternion>() / finite.len() as f64;
    let scale = finite
        .iter()
        .map(|p| p.distance(centroid))
        .fold(0.0, f64::max);
    if scale == 0.0 {
        return 0.0;
    }
    let mut m = DMatrix::<f64>::zeros(finite.len(), cols);
    for (row, p) in finite.iter().enumerate() {
        let y = (*p - centroid) / scale;
        let mut col = 0;
        if !with_infinity {
            m[(row, 0)] = y.norm_sqr();
            col = 1;
        }
        m[(row, col)] = y.x;
        m[(row, col + 1)] = y.y;
        m[(row, col + 2)] = y.z;
        m[(row, col + 3)] = 1.0;
    }
    m.singular_values()
        .iter()
        .copied()
        .fold(f64::INFINITY, f64::min)
}

#[cfg(test)]
mod tests {
    use super::*;

    const I: Quaternion = Quaternion::I;
    const J: Quaternion = Quaternion::J;
    const K: Quaternion = Quaternion::K;

    #[test]
    fn circle_through_three_axis_points() {
        let c = GenCircle::through(I, J, K).unwrap();
        let GenCircle::Circle { center, radius, .. } = c else {
            panic!("expected a circle")
        };
        let third = Quaternion::point(1.0, 1.0, 1.0) / 3.0;
        assert!(center.distance(third) < 1e-15);
        assert!((radius - (2.0f64 / 3.0).sqrt()).abs() < 1e-15);
        assert!(c.distance(-I) > 1.0);
        for t in [0.3, 1.0, 2.5] {
            assert!(c.distance(c.point_at(t)) < 1e-15);
        }
    }

    #[test]
    fn collinear_triple_is_a_line() {
        let c = GenCircle::through(Quaternion::ZERO, I, I * 3.0).unwrap();
        assert!(matches!(c, GenCircle::Line { .. }));
        assert!(c.distance(I * -7.0) < 1e-15);
        assert!((c.distance(I + J) - 1.0).abs() < 1e-15);
    }

    #[test]
    fn cube_corners_are_cospherical() {
        let mut pts = Vec::new();
        for n in 0..8 {
            let b = |k: usize| ((n >> k) & 1) as f64;
            pts.push(ExtendedPoint::xyz(b(0), b(1), b(2)));
        }
        assert!(cosphericity_residual(&pts) < 1e-14);
        pts[7] = ExtendedPoint::xyz(1.0, 1.0, 1.2);
        assert!(cosphericity_residual(&pts) > 1e-3);
    }

    #[test]
    fn planar_points_with_infinity() {
        let mut pts = vec![ExtendedPoint::INFINITY];
        for n in 0..7 {
            let t = n as f64;
            pts.push(ExtendedPoint::xyz(t.cos() * 2.0, t.sin() + t, 0.0));
        }
        assert!(cosphericity_residual(&pts) < 1e-14);
        // six points on a sphere are not enough once infinity is present
        pts[3] = ExtendedPoint::xyz(0.0, 0.0, 1.0);
        assert!(cosphericity_residual(&pts) > 1e-3);
    }
}
