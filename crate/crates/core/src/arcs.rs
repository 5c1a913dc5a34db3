//! Circular arcs and semi-lines as degree-one quaternionic Bezier curves.

use serde::{Deserialize, Serialize};

use crate::bezier::QBObject;
use crate::error::{Error, Result};
use crate::moebius::HomogeneousPoint;
use crate::quat::{characteristic_scale, Quaternion};

/// Which of the two arcs between the endpoints a three-point arc takes.
///
/// With the weights `w0 = (q - p0)^-1`, `w1 = (p1 - q)^-1` taken literally the
/// curve passes through `q` (at `t = 1/2` when `q` bisects the arc).
/// `Complementary` negates `w1` and yields the arc avoiding `q`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ArcBranch {
    #[default]
    Literal,
    Complementary,
}

fn imaginary(name: &str, q: Quaternion) -> Result<()> {
    if q.r != 0.0 {
        return Err(Error::Scene(format!(
            "{name} must be imaginary, real part is {}",
            q.r
        )));
    }
    Ok(())
}

fn distinct(pts: &[(&str, Quaternion)]) -> Result<()> {
    let coords: Vec<Quaternion> = pts.iter().map(|p| p.1).collect();
    let scale = characteristic_scale(&coords);
    for (n, a) in pts.iter().enumerate() {
        for b in &pts[n + 1..] {
            if a.1.distance(b.1) <= f64::EPSILON * scale || scale == 0.0 {
                return Err(Error::Coincident(format!("{} and {}", a.0, b.0)));
            }
        }
    }
    Ok(())
}

/// Arc from `p0` to `p1` leaving `p0` along `v1`.
///
/// Controls `(p0, 1)` and `(p1 w1, w1)` with `w1 = (p1 - p0)^-1 v1`; `v1` is
/// normalized first.
pub fn arc_endpoints_tangent(p0: Quaternion, p1: Quaternion, v1: Quaternion) -> Result<QBObject> {
    imaginary("p0", p0)?;
    imaginary("p1", p1)?;
    imaginary("v1", v1)?;
    distinct(&[("p0", p0), ("p1", p1)])?;
    let v1 = v1.normalized()?;
    let w1 = (p1 - p0).inverse()? * v1;
    QBObject::new(
        1,
        vec![
            HomogeneousPoint::weighted(p0, Quaternion::ONE),
            HomogeneousPoint::weighted(p1, w1),
        ],
    )
}

/// Ray `{p1 + s v1 : s >= 0}` traversed from infinity at `t = 0` to `p1` at
/// `t = 1`. Controls `(1, 0)` and `(-p1 v1, -v1)` with `v1` normalized, so
/// `t = 1/2` lands on `p1 + v1 / |v1|`.
pub fn semiline(p1: Quaternion, v1: Quaternion) -> Result<QBObject> {
    imaginary("p1", p1)?;
    imaginary("v1", v1)?;
    if v1.is_zero() {
        return Err(Error::Degenerate("semi-line direction is zero".into()));
    }
    let v1 = v1.normalized()?;
    QBObject::new(
        1,
        vec![
            HomogeneousPoint {
                u: Quaternion::ONE,
                w: Quaternion::ZERO,
            },
            HomogeneousPoint::weighted(p1, -v1),
        ],
    )
}

/// Arc from `p0` to `p1` on the circle through `q`, with weights
/// `w0 = (q - p0)^-1` and `w1 = +-(p1 - q)^-1` per `branch`.
pub fn arc_through_point(
    p0: Quaternion,
    p1: Quaternion,
    q: Quaternion,
    branch: ArcBranch,
) -> Result<QBObject> {
    imaginary("p0", p0)?;
    imaginary("p1", p1)?;
    imaginary("q", q)?;
    distinct(&[("p0", p0), ("p1", p1), ("q", q)])?;
    let w0 = (q - p0).inverse()?;
    let mut w1 = (p1 - q).inverse()?;
    if branch == ArcBranch::Complementary {
        w1 = -w1;
    }
    QBObject::new(
        1,
        vec![
            HomogeneousPoint::weighted(p0, w0),
            HomogeneousPoint::weighted(p1, w1),
        ],
    )
}
