//! Dupin cyclide principal patches as bilinear quaternionic Bezier patches.
//!
//! Corners follow the reversed binary order `0 = 00, 1 = 10, 2 = 01, 3 = 11`;
//! the tangents `v1`, `v2` live at `p0` and `v3 = v1 v2`.

use crate::bezier::{grid, interior, linspace, QBObject};
use crate::error::{Error, Result};
use crate::fit::circle_membership;
use crate::frame::Frame;
use crate::moebius::{ExtendedPoint, HomogeneousPoint};
use crate::quat::{
    characteristic_scale, cocircularity_residual, collinearity_residual, Quaternion, DEFAULT_TOL,
};
use crate::report::{Check, Report};

/// Construction data for a principal patch.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PrincipalPatchSpec {
    pub corners: [ExtendedPoint; 4],
    pub v1: Quaternion,
    pub v2: Quaternion,
}

impl PrincipalPatchSpec {
    /// Dispatches on whether `p0` is infinite. Only `p0` may be infinite.
    pub fn build(&self, tol: f64) -> Result<QBObject> {
        let [p0, p1, p2, p3] = self.corners;
        let finite = |p: ExtendedPoint, name: &str| {
            p.finite()
                .ok_or_else(|| Error::Degenerate(format!("corner {name} may not be infinite")))
        };
        let (p1, p2, p3) = (finite(p1, "p1")?, finite(p2, "p2")?, finite(p3, "p3")?);
        match p0.finite() {
            None => infinite_patch(p1, p2, p3, self.v1, self.v2, tol),
            Some(p0) => finite_patch(p0, p1, p2, p3, self.v1, self.v2, tol),
        }
    }
}

/// Patch with `p0 = inf`: controls `(1, 0)`, `(p_i w_i, w_i)` with
/// `w1 = -v1`, `w2 = -v2`, `w3 = (p1 - p2) v3`.
pub fn principal_patch_infinite(
    p1: Quaternion,
    p2: Quaternion,
    p3: Quaternion,
    v1: Quaternion,
    v2: Quaternion,
) -> Result<QBObject> {
    infinite_patch(p1, p2, p3, v1, v2, DEFAULT_TOL)
}

/// Patch with finite corners: `w0 = 1`, `w1 = q1 v1`, `w2 = q2 v2`,
/// `w3 = q3 (q1 - q2) v3` where `q_i = (p_i - p0)^-1`.
pub fn principal_patch_finite(
    p0: Quaternion,
    p1: Quaternion,
    p2: Quaternion,
    p3: Quaternion,
    v1: Quaternion,
    v2: Quaternion,
) -> Result<QBObject> {
    finite_patch(p0, p1, p2, p3, v1, v2, DEFAULT_TOL)
}

fn infinite_patch(
    p1: Quaternion,
    p2: Quaternion,
    p3: Quaternion,
    v1: Quaternion,
    v2: Quaternion,
    tol: f64,
) -> Result<QBObject> {
    let frame = Frame::with_tol(v1, v2, tol)?;
    let scale = characteristic_scale(&[p1, p2, p3]);
    if p1.distance(p2) <= f64::EPSILON * scale || scale == 0.0 {
        return Err(Error::Coincident("p1 and p2".into()));
    }
    let residual = collinearity_residual(p1, p2, p3);
    if residual > tol {
        return Err(Error::NotCollinear {
            what: "corners p1, p2, p3".into(),
            residual,
        });
    }
    let w1 = -frame.v1();
    let w2 = -frame.v2();
    let w3 = (p1 - p2) * frame.v3();
    QBObject::with_tol(
        2,
        vec![
            HomogeneousPoint {
                u: Quaternion::ONE,
                w: Quaternion::ZERO,
            },
            HomogeneousPoint::weighted(p1, w1),
            HomogeneousPoint::weighted(p2, w2),
            HomogeneousPoint::weighted(p3, w3),
        ],
        tol,
    )
}

fn finite_patch(
    p0: Quaternion,
    p1: Quaternion,
    p2: Quaternion,
    p3: Quaternion,
    v1: Quaternion,
    v2: Quaternion,
    tol: f64,
) -> Result<QBObject> {
    let frame = Frame::with_tol(v1, v2, tol)?;
    let pts = [p0, p1, p2, p3];
    let scale = characteristic_scale(&pts);
    for (n, p) in pts.iter().enumerate().skip(1) {
        if p.distance(p0) <= f64::EPSILON * scale || scale == 0.0 {
            return Err(Error::Coincident(format!("p0 and p{n}")));
        }
    }
    if let Some(residual) = corner_cocircularity(&pts)? {
        if residual > tol {
            return Err(Error::NotCocircular {
                what: "patch corners".into(),
                residual,
            });
        }
    }
    let q1 = (p1 - p0).inverse()?;
    let q2 = (p2 - p0).inverse()?;
    let q3 = (p3 - p0).inverse()?;
    let weights = [
        Quaternion::ONE,
        q1 * frame.v1(),
        q2 * frame.v2(),
        q3 * (q1 - q2) * frame.v3(),
    ];
    let control = pts
        .iter()
        .zip(weights)
        .map(|(p, w)| HomogeneousPoint::weighted(*p, w))
        .collect();
    QBObject::with_tol(2, control, tol)
}

/// Cocircularity residual of four finite corners, or `None` when two of them
/// coincide (allowed for `p3` against `p1` or `p2`).
fn corner_cocircularity(pts: &[Quaternion; 4]) -> Result<Option<f64>> {
    let scale = characteristic_scale(pts);
    for a in 0..4 {
        for b in a + 1..4 {
            if pts[a].distance(pts[b]) <= 1e-12 * scale {
                return Ok(None);
            }
        }
    }
    // cyclic order around the patch boundary: 0, 1, 3, 2
    cocircularity_residual(pts[0], pts[1], pts[3], pts[2]).map(Some)
}

/// Largest relative distance of `samples` points of a curve from the circle
/// through its points at `t = 1/4, 1/2, 3/4`.
pub fn curve_circle_residual(curve: &QBObject, samples: usize) -> Result<f64> {
    let mut refs = [Quaternion::ZERO; 3];
    for (r, t) in refs.iter_mut().zip([0.25, 0.5, 0.75]) {
        *r = curve.eval(&[t])?.expect_finite()?;
    }
    let pts = linspace(samples)
        .into_iter()
        .map(|t| curve.eval(&[t]))
        .collect::<Result<Vec<_>>>()?;
    circle_membership(refs, &pts)
}

/// Largest `|<a, b>| / (|a| |b|)` over pairs of partials on the interior grid.
/// Points where a partial vanishes are skipped.
pub(crate) fn orthogonality_residual(obj: &QBObject, res: usize) -> Result<f64> {
    let mut worst = 0.0_f64;
    for params in grid(&interior(res), obj.arity()) {
        let d = obj.partials(&params)?;
        for a in 0..d.len() {
            for b in a + 1..d.len() {
                let denom = d[a].norm() * d[b].norm();
                if denom > 0.0 {
                    worst = worst.max(d[a].dot(d[b]).abs() / denom);
                }
            }
        }
    }
    Ok(worst)
}

fn record(report: &mut Report, name: &str, value: Result<f64>, threshold: f64) {
    report.push(match value {
        Ok(r) => Check::at_most(name, r, threshold),
        Err(e) => Check::failed(name, e.to_string()),
    });
}

/// Principal-patch checks on a `res x res` sampling:
/// orthogonality of the partials (threshold `10 * tol`), cocircularity of
/// the corners and circularity of the four boundary curves (threshold `tol`).
pub fn validate_principal(patch: &QBObject, res: usize, tol: f64) -> Report {
    let mut report = Report::default();
    if patch.arity() != 2 {
        report.push(Check::failed(
            "arity",
            format!("expected a patch, got arity {}", patch.arity()),
        ));
        return report;
    }
    record(
        &mut report,
        "orthogonality",
        orthogonality_residual(patch, res),
        10.0 * tol,
    );

    let corners = match patch.corners() {
        Ok(c) => c,
        Err(e) => {
            report.push(Check::failed("corners", e.to_string()));
            return report;
        }
    };
    let finite: Vec<Quaternion> = corners.iter().filter_map(|c| c.finite()).collect();
    let corner_check = match finite.len() {
        4 => {
            let pts = [finite[0], finite[1], finite[2], finite[3]];
            match corner_cocircularity(&pts) {
                Ok(Some(r)) => Check::at_most("corner_cocircularity", r, tol),
                Ok(None) => Check::at_most("corner_cocircularity", 0.0, tol)
                    .with_message("coincident corners"),
                Err(e) => Check::failed("corner_cocircularity", e.to_string()),
            }
        }
        3 => Check::at_most(
            "corner_cocircularity",
            collinearity_residual(finite[0], finite[1], finite[2]),
            tol,
        ),
        n => Check::failed(
            "corner_cocircularity",
            format!("{} infinite corners", 4 - n),
        ),
    };
    report.push(corner_check);

    for (param, label) in [(0, "s"), (1, "t")] {
        for side in 0..2 {
            let name = format!("boundary.{label}{side}");
            let residual = patch
                .restrict(param, side)
                .and_then(|curve| curve_circle_residual(&curve, res.max(5)));
            record(&mut report, &name, residual, tol);
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::moebius::SphereOfInversion;

    const I: Quaternion = Quaternion::I;
    const J: Quaternion = Quaternion::J;
    const K: Quaternion = Quaternion::K;
    const ZERO: Quaternion = Quaternion::ZERO;

    fn at(p: &QBObject, s: f64, t: f64) -> ExtendedPoint {
        p.eval(&[s, t]).unwrap()
    }

    #[test]
    fn infinite_patch_corners() {
        let p = principal_patch_infinite(I, J, (I + J) * 0.5, I, J).unwrap();
        assert!(at(&p, 0.0, 0.0).is_infinite());
        assert!(at(&p, 1.0, 0.0).approx_eq(I.into(), 1e-15));
        assert!(at(&p, 0.0, 1.0).approx_eq(J.into(), 1e-15));
        assert!(at(&p, 1.0, 1.0).approx_eq(((I + J) * 0.5).into(), 1e-15));
        let d = p.partials(&[0.3, 0.7]).unwrap();
        assert!(d[0].dot(d[1]).abs() < 1e-9);
    }

    #[test]
    fn infinite_patch_boundary_is_a_line() {
        let p = principal_patch_infinite(I, J, (I + J) * 0.5, I, J).unwrap();
        let edge = p.restrict(1, 0).unwrap();
        // finite samples, plus the endpoint p1 and an interior sample
        let mid = edge.eval(&[0.5]).unwrap().finite().unwrap();
        for t in linspace(9).into_iter().skip(1) {
            let x = edge.eval(&[t]).unwrap().finite().unwrap();
            assert!(collinearity_residual(I, mid, x) < 1e-12);
        }
    }

    #[test]
    fn unit_square_has_unit_weights() {
        let p = principal_patch_finite(ZERO, I, J, I + J, I, J).unwrap();
        assert_eq!(p.weights(), vec![Quaternion::ONE; 4]);
        assert!(at(&p, 0.5, 0.5).approx_eq(((I + J) * 0.5).into(), 1e-15));
        let expect = [ZERO, I, J, I + J];
        for (n, (s, t)) in [(0.0, 0.0), (1.0, 0.0), (0.0, 1.0), (1.0, 1.0)]
            .into_iter()
            .enumerate()
        {
            assert!(at(&p, s, t).approx_eq(expect[n].into(), 1e-15));
        }
        let report = validate_principal(&p, 33, DEFAULT_TOL);
        assert!(report.passed(), "{report}");
        assert!(
            report.checks.iter().all(|c| c.residual <= 1e-10),
            "{report}"
        );
    }

    #[test]
    fn off_circle_corner_rejected() {
        let r = principal_patch_finite(ZERO, I, J, I + J + K * 1e-2, I, J);
        assert!(matches!(r, Err(Error::NotCocircular { .. })));
        let r = principal_patch_infinite(I, J, I + J, I, J);
        assert!(matches!(r, Err(Error::NotCollinear { .. })));
        assert!(matches!(
            principal_patch_finite(ZERO, ZERO, J, I + J, I, J),
            Err(Error::Coincident(_))
        ));
        assert!(matches!(
            principal_patch_finite(ZERO, I, J, I + J, I, I + J),
            Err(Error::NotOrthogonal { .. })
        ));
    }

    #[test]
    fn perturbed_patch_fails_validation() {
        // build with loosened tolerance, then validate at the default one
        let spec = PrincipalPatchSpec {
            corners: [ZERO.into(), I.into(), J.into(), (I + J + K * 1e-2).into()],
            v1: I,
            v2: J,
        };
        let p = spec.build(1.0).unwrap();
        let report = validate_principal(&p, 9, DEFAULT_TOL);
        assert!(!report.get("corner_cocircularity").unwrap().passed);
    }

    #[test]
    fn coincident_p3_is_allowed() {
        let p = principal_patch_finite(ZERO, I, J, I, I, J).unwrap();
        assert!(at(&p, 1.0, 1.0).approx_eq(I.into(), 1e-15));
    }

    #[test]
    fn inversion_of_infinite_patch_matches_finite_patch() {
        let (p1, p2, p3) = (
            Quaternion::point(1.0, 0.5, 0.0),
            Quaternion::point(-0.2, 1.4, 0.0),
            Quaternion::point(0.4, 0.95, 0.0),
        );
        let (v1, v2) = (Quaternion::point(0.6, 0.0, 0.8), J);
        let inf = principal_patch_infinite(p1, p2, p3, v1, v2).unwrap();
        let s = SphereOfInversion::new(Quaternion::point(0.3, -0.7, 0.4), 1.0).unwrap();
        let moved = inf.map_controls(|h| s.invert_homogeneous(h));
        let c = s.center();
        let img = |p: Quaternion| s.invert_point(p.into()).finite().unwrap();
        let fin = principal_patch_finite(c, img(p1), img(p2), img(p3), v1, v2).unwrap();
        for params in grid(&linspace(7), 2) {
            let a = moved.eval(&params).unwrap();
            let b = fin.eval(&params).unwrap();
            let direct = s.invert_point(inf.eval(&params).unwrap());
            assert!(a.approx_eq(b, 1e-10), "{a} vs {b}");
            assert!(a.approx_eq(direct, 1e-10));
        }
    }
}
