//! Dupin cyclidic cubes as trilinear quaternionic Bezier volumes.
//!
//! Corners follow the reversed binary order `0 = 000, 1 = 100, 2 = 010,
//! 3 = 110, 4 = 001, 5 = 101, 6 = 011, 7 = 111`. A cube is fixed by the seven
//! corners `p0..p6` and an orthonormal frame `(v1, v2, v3 = v1 v2)` at `p0`;
//! the last corner `p7` is always derived as the Miquel point of the others.
//!
//! With `p0 = inf` the faces through `p0` are planar and the Miquel point is
//! the concurrence point of the circles `(p1, p3, p5)`, `(p2, p3, p6)` and
//! `(p4, p5, p6)`:
//!
//! ```text
//! A = (p4 - p1)(p3 - p5)(p1 - p2)
//! B = (p1 - p2)(p6 - p3)(p2 - p4)
//! C = (p2 - p4)(p5 - p6)(p4 - p1)
//! p7 = p1 + A (A - B)^-1 (p2 - p1)
//! w7 = (p7 - p1)^-1 A = (p7 - p2)^-1 B = (p7 - p4)^-1 C
//! ```
//!
//! The finite case is the same computation on `q_i = (p_i - p0)^-1`, which is
//! what the unit inversion about `p0` does to the corners.

use crate::bezier::{grid, interior, QBObject};
use crate::error::{Error, Result};
use crate::fit::cosphericity_residual;
use crate::frame::Frame;
use crate::moebius::{ExtendedPoint, HomogeneousPoint};
use crate::patches::validate_principal;
use crate::quat::{
    characteristic_scale, cocircularity_residual, collinearity_residual, Quaternion, DEFAULT_TOL,
};
use crate::report::{Check, Report};

/// Largest pairwise deviation tolerated between the three `w7` expressions
/// before construction is refused, unless the construction tolerance is
/// looser still.
pub const W7_GATE: f64 = 1e-6;

/// Construction data for a DC cube. `p7`, when given, is only compared with
/// the derived Miquel point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DCCubeSpec {
    pub corners: [ExtendedPoint; 7],
    pub frame: Frame,
    pub p7: Option<ExtendedPoint>,
}

/// Miquel point with the spread of its three closed forms.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MiquelPoint {
    pub point: ExtendedPoint,
    /// Largest distance between the three closed forms over the input scale.
    pub agreement: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct DCCube {
    pub object: QBObject,
    pub p7: ExtendedPoint,
    pub weights: [Quaternion; 8],
    /// The three `w7` expressions before averaging.
    pub w7_candidates: [Quaternion; 3],
    /// Largest pairwise relative deviation among `w7_candidates`.
    pub w7_deviation: f64,
    pub miquel_agreement: f64,
    /// Distance of the optional input `p7` from the derived one, over scale.
    pub p7_input_deviation: Option<f64>,
}

/// The right factors `A`, `B`, `C` of the `w7` expressions for corners
/// `[p1, p2, p3, p4, p5, p6]`.
pub fn miquel_factors(p: &[Quaternion; 6]) -> [Quaternion; 3] {
    let [p1, p2, p3, p4, p5, p6] = *p;
    [
        (p4 - p1) * (p3 - p5) * (p1 - p2),
        (p1 - p2) * (p6 - p3) * (p2 - p4),
        (p2 - p4) * (p5 - p6) * (p4 - p1),
    ]
}

fn relative_deviation(values: &[Quaternion]) -> f64 {
    let mut worst = 0.0_f64;
    for (n, a) in values.iter().enumerate() {
        for b in &values[n + 1..] {
            let size = a.norm().max(b.norm());
            if size > 0.0 {
                worst = worst.max((*a - *b).norm() / size);
            }
        }
    }
    worst
}

/// `base + F (F - G)^-1 (next - base)`, refusing a vanishing `F - G`.
fn miquel_form(
    base: Quaternion,
    next: Quaternion,
    f: Quaternion,
    g: Quaternion,
    factor: &'static str,
) -> Result<Quaternion> {
    let d = f - g;
    if d.norm() <= 1e-13 * f.norm().max(g.norm()) {
        return Err(Error::DegenerateMiquel { factor });
    }
    Ok(base + f * d.inverse()? * (next - base))
}

/// The three closed forms for the concurrence point of the circles through
/// `(p1, p3, p5)`, `(p2, p3, p6)`, `(p4, p5, p6)`. The first one is required;
/// the other two feed the agreement measure when their denominators survive.
fn miquel_forms(p: &[Quaternion; 6]) -> Result<(Quaternion, f64)> {
    let [p1, p2, _, p4, _, _] = *p;
    let [a, b, c] = miquel_factors(p);
    let main = miquel_form(p1, p2, a, b, "A - B")?;
    let alternatives = [
        miquel_form(p2, p4, b, c, "B - C"),
        miquel_form(p4, p1, c, a, "C - A"),
    ];
    let scale = characteristic_scale(p).max(main.norm());
    let agreement = alternatives
        .iter()
        .filter_map(|r| r.as_ref().ok())
        .map(|alt| alt.distance(main) / scale)
        .fold(0.0, f64::max);
    Ok((main, agreement))
}

/// Miquel point for `p0 = inf` and corners `[p1, p2, p3, p4, p5, p6]`.
pub fn miquel_infinite(p: &[Quaternion; 6]) -> Result<MiquelPoint> {
    let (point, agreement) = miquel_forms(p)?;
    Ok(MiquelPoint {
        point: ExtendedPoint::from_im(point),
        agreement,
    })
}

/// `q_i = (p_i - p0)^-1` for `i = 1..=6`, in corner order.
fn inverted_corners(p: &[Quaternion; 7]) -> Result<[Quaternion; 6]> {
    let scale = characteristic_scale(p);
    let mut q = [Quaternion::ZERO; 6];
    for i in 1..7 {
        let d = p[i] - p[0];
        if d.norm() <= f64::EPSILON * scale || scale == 0.0 {
            return Err(Error::Coincident(format!("p0 and p{i}")));
        }
        q[i - 1] = d.inverse()?;
    }
    Ok(q)
}

/// Relative size of `q7` below which `p7` is reported as infinite.
const Q7_INFINITY: f64 = 1e-12;

fn miquel_from_q(p0: Quaternion, q: &[Quaternion; 6]) -> Result<(Quaternion, MiquelPoint)> {
    let (q7, agreement_q) = miquel_forms(q)?;
    let q_scale = q.iter().map(|v| v.norm()).fold(0.0, f64::max);
    if q7.norm() <= Q7_INFINITY * q_scale {
        return Ok((
            q7,
            MiquelPoint {
                point: ExtendedPoint::INFINITY,
                agreement: agreement_q,
            },
        ));
    }
    let p7 = p0 + q7.inverse()?;
    // express the spread of the closed forms in point space
    let forms = [
        Some(q7),
        miquel_form(
            q[1],
            q[3],
            miquel_factors(q)[1],
            miquel_factors(q)[2],
            "B' - C'",
        )
        .ok(),
        miquel_form(
            q[3],
            q[0],
            miquel_factors(q)[2],
            miquel_factors(q)[0],
            "C' - A'",
        )
        .ok(),
    ];
    let pts: Vec<Quaternion> = forms
        .iter()
        .flatten()
        .filter_map(|v| v.inverse().ok())
        .map(|v| p0 + v)
        .collect();
    let mut all = vec![p0];
    all.extend(q.iter().filter_map(|v| v.inverse().ok()).map(|v| p0 + v));
    let scale = characteristic_scale(&all).max(p7.distance(p0));
    let agreement = pts
        .iter()
        .map(|x| x.distance(p7) / scale)
        .fold(0.0, f64::max);
    Ok((
        q7,
        MiquelPoint {
            point: ExtendedPoint::from_im(p7),
            agreement,
        },
    ))
}

/// Miquel point `p0 + [q1 + A'(A' - B')^-1 (q2 - q1)]^-1` for finite corners
/// `[p0, ..., p6]`. A vanishing bracket gives `p7 = inf`.
pub fn miquel_finite(p: &[Quaternion; 7]) -> Result<MiquelPoint> {
    let q = inverted_corners(p)?;
    Ok(miquel_from_q(p[0], &q)?.1)
}

fn check_collinear(
    a: Quaternion,
    b: Quaternion,
    c: Quaternion,
    what: &str,
    tol: f64,
) -> Result<()> {
    let residual = collinearity_residual(a, b, c);
    if residual > tol {
        return Err(Error::NotCollinear {
            what: what.into(),
            residual,
        });
    }
    Ok(())
}

fn check_cocircular(pts: [Quaternion; 4], what: &str, tol: f64) -> Result<()> {
    let scale = characteristic_scale(&pts);
    for a in 0..4 {
        for b in a + 1..4 {
            if pts[a].distance(pts[b]) <= 1e-12 * scale {
                return Ok(());
            }
        }
    }
    let residual = cocircularity_residual(pts[0], pts[1], pts[2], pts[3])?;
    if residual > tol {
        return Err(Error::NotCocircular {
            what: what.into(),
            residual,
        });
    }
    Ok(())
}

/// Left factors `(x - y)^-1`, refusing coincidences with `p7`.
fn inv_diff(x: Quaternion, y: Quaternion, factor: &'static str) -> Result<Quaternion> {
    let d = x - y;
    if d.norm() <= 1e-13 * x.norm().max(y.norm()).max(f64::MIN_POSITIVE) {
        return Err(Error::DegenerateMiquel { factor });
    }
    d.inverse()
}

fn average(values: &[Quaternion; 3]) -> Quaternion {
    (values[0] + values[1] + values[2]) / 3.0
}

/// Cube with `p0 = inf` from corners `[p1, p2, p3, p4, p5, p6]`.
pub fn dc_cube_infinite(p: &[Quaternion; 6], frame: &Frame) -> Result<DCCube> {
    infinite_cube(p, frame, DEFAULT_TOL)
}

/// Edges through `p0 = inf` must be straight: `p3`, `p5`, `p6` on the lines
/// `p1 p2`, `p1 p4`, `p2 p4`.
pub fn check_infinite_corners(p: &[Quaternion; 6], tol: f64) -> Result<()> {
    let [p1, p2, p3, p4, p5, p6] = *p;
    check_collinear(p1, p2, p3, "p3 on line(p1, p2)", tol)?;
    check_collinear(p1, p4, p5, "p5 on line(p1, p4)", tol)?;
    check_collinear(p2, p4, p6, "p6 on line(p2, p4)", tol)
}

/// The three faces through `p0` must have cocircular corners.
pub fn check_finite_corners(p: &[Quaternion; 7], tol: f64) -> Result<()> {
    let [p0, p1, p2, p3, p4, p5, p6] = *p;
    check_cocircular([p0, p1, p3, p2], "p3 on circle(p0, p1, p2)", tol)?;
    check_cocircular([p0, p1, p5, p4], "p5 on circle(p0, p1, p4)", tol)?;
    check_cocircular([p0, p2, p6, p4], "p6 on circle(p0, p2, p4)", tol)
}

fn infinite_cube(p: &[Quaternion; 6], frame: &Frame, tol: f64) -> Result<DCCube> {
    let [p1, p2, p3, p4, p5, p6] = *p;
    check_infinite_corners(p, tol)?;
    let miquel = miquel_infinite(p)?;
    let p7 = miquel.point.expect_finite()?;
    let [a, b, c] = miquel_factors(p);
    let candidates = [
        inv_diff(p7, p1, "p7 - p1")? * a,
        inv_diff(p7, p2, "p7 - p2")? * b,
        inv_diff(p7, p4, "p7 - p4")? * c,
    ];
    let deviation = relative_deviation(&candidates);
    if deviation > W7_GATE.max(tol) {
        return Err(Error::WeightMismatch { deviation });
    }
    let [v1, v2, v3] = frame.vectors();
    let weights = [
        Quaternion::ZERO,
        -v1,
        -v2,
        (p1 - p2) * v3,
        -v3,
        (p4 - p1) * v2,
        (p2 - p4) * v1,
        average(&candidates),
    ];
    let points = [p1, p2, p3, p4, p5, p6, p7];
    let mut control = vec![HomogeneousPoint {
        u: Quaternion::ONE,
        w: Quaternion::ZERO,
    }];
    control.extend(
        points
            .iter()
            .zip(&weights[1..])
            .map(|(p, w)| HomogeneousPoint::weighted(*p, *w)),
    );
    Ok(DCCube {
        object: QBObject::with_tol(3, control, tol)?,
        p7: miquel.point,
        weights,
        w7_candidates: candidates,
        w7_deviation: deviation,
        miquel_agreement: miquel.agreement,
        p7_input_deviation: None,
    })
}

/// Cube with finite corners `[p0, ..., p6]`.
pub fn dc_cube_finite(p: &[Quaternion; 7], frame: &Frame) -> Result<DCCube> {
    finite_cube(p, frame, DEFAULT_TOL)
}

fn finite_cube(p: &[Quaternion; 7], frame: &Frame, tol: f64) -> Result<DCCube> {
    let [p0, p1, p2, p3, p4, p5, p6] = *p;
    let q = inverted_corners(p)?;
    check_finite_corners(p, tol)?;
    let (q7, miquel) = miquel_from_q(p0, &q)?;
    let [q1, q2, q3, q4, q5, q6] = q;
    let [a, b, c] = miquel_factors(&q);
    // w7 = -q7 X with X = (q7 - q_i)^-1 F; the spread of X is the spread of w7
    let xs = [
        inv_diff(q7, q1, "q7 - q1")? * a,
        inv_diff(q7, q2, "q7 - q2")? * b,
        inv_diff(q7, q4, "q7 - q4")? * c,
    ];
    let deviation = relative_deviation(&xs);
    if deviation > W7_GATE.max(tol) {
        return Err(Error::WeightMismatch { deviation });
    }
    let [v1, v2, v3] = frame.vectors();
    let x = average(&xs);
    let weights = [
        Quaternion::ONE,
        q1 * v1,
        q2 * v2,
        q3 * (q1 - q2) * v3,
        q4 * v3,
        q5 * (q4 - q1) * v2,
        q6 * (q2 - q4) * v1,
        -(q7 * x),
    ];
    let mut control: Vec<HomogeneousPoint> = [p0, p1, p2, p3, p4, p5, p6]
        .iter()
        .zip(&weights)
        .map(|(p, w)| HomogeneousPoint::weighted(*p, *w))
        .collect();
    // p7 w7 = -(1 + p0 q7) X stays finite when p7 = inf
    control.push(HomogeneousPoint {
        u: -((Quaternion::ONE + p0 * q7) * x),
        w: weights[7],
    });
    Ok(DCCube {
        object: QBObject::with_tol(3, control, tol)?,
        p7: miquel.point,
        weights,
        w7_candidates: xs.map(|x| -(q7 * x)),
        w7_deviation: deviation,
        miquel_agreement: miquel.agreement,
        p7_input_deviation: None,
    })
}

impl DCCubeSpec {
    pub fn build(&self, tol: f64) -> Result<DCCube> {
        let mut finite = [Quaternion::ZERO; 7];
        for (n, c) in self.corners.iter().enumerate().skip(1) {
            finite[n] = c
                .finite()
                .ok_or_else(|| Error::Degenerate(format!("corner p{n} may not be infinite")))?;
        }
        let mut cube = match self.corners[0].finite() {
            None => {
                let p: [Quaternion; 6] = finite[1..].try_into().expect("six corners");
                infinite_cube(&p, &self.frame, tol)?
            }
            Some(p0) => {
                finite[0] = p0;
                finite_cube(&finite, &self.frame, tol)?
            }
        };
        if let Some(given) = self.p7 {
            let pts: Vec<Quaternion> = self.corners.iter().filter_map(|c| c.finite()).collect();
            let scale = characteristic_scale(&pts).max(f64::MIN_POSITIVE);
            let deviation = match (given.finite(), cube.p7.finite()) {
                (None, None) => 0.0,
                (Some(a), Some(b)) => a.distance(b) / scale,
                _ => f64::INFINITY,
            };
            cube.p7_input_deviation = Some(deviation);
        }
        Ok(cube)
    }
}

/// Orthogonality residual of the three partials and the smallest absolute
/// Jacobian `|<ds x dt, du>|` over the interior grid.
fn volume_residuals(cube: &QBObject, res: usize) -> Result<(f64, f64)> {
    let mut ortho = 0.0_f64;
    let mut jac = f64::INFINITY;
    for params in grid(&interior(res), 3) {
        let d = cube.partials(&params)?;
        for a in 0..3 {
            for b in a + 1..3 {
                let denom = d[a].norm() * d[b].norm();
                if denom > 0.0 {
                    ortho = ortho.max(d[a].dot(d[b]).abs() / denom);
                }
            }
        }
        jac = jac.min(d[0].cross(d[1]).dot(d[2]).abs());
    }
    Ok((ortho, jac))
}

/// Face order used by validation and meshing: `s = 0, s = 1, t = 0, t = 1,
/// u = 0, u = 1`.
pub const FACES: [(usize, usize, &str); 6] = [
    (0, 0, "s0"),
    (0, 1, "s1"),
    (1, 0, "t0"),
    (1, 1, "t1"),
    (2, 0, "u0"),
    (2, 1, "u1"),
];

/// DC-cube checks on a `res^3` interior grid: pairwise orthogonality of the
/// partials (threshold `10 * tol`), smallest |Jacobian| (must be positive),
/// cosphericity of the corners, and every principal-patch check on each face.
pub fn validate_dc_cube(cube: &QBObject, res: usize, tol: f64) -> Report {
    let mut report = Report::default();
    if cube.arity() != 3 {
        report.push(Check::failed(
            "arity",
            format!("expected a cube, got arity {}", cube.arity()),
        ));
        return report;
    }
    match volume_residuals(cube, res) {
        Ok((ortho, jac)) => {
            report.push(Check::at_most("orthogonality", ortho, 10.0 * tol));
            report.push(Check::above("jacobian_min", jac, 0.0));
        }
        Err(e) => report.push(Check::failed("orthogonality", e.to_string())),
    }
    match cube.corners() {
        Ok(corners) => report.push(Check::at_most(
            "cosphericity",
            cosphericity_residual(&corners),
            tol,
        )),
        Err(e) => report.push(Check::failed("cosphericity", e.to_string())),
    }
    for (param, side, label) in FACES {
        match cube.restrict(param, side) {
            Ok(face) => report.extend_prefixed(
                &format!("face.{label}"),
                validate_principal(&face, res, tol),
            ),
            Err(e) => report.push(Check::failed(format!("face.{label}"), e.to_string())),
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bezier::linspace;
    use crate::quat::is_cocircular;

    const I: Quaternion = Quaternion::I;
    const J: Quaternion = Quaternion::J;
    const K: Quaternion = Quaternion::K;
    const ZERO: Quaternion = Quaternion::ZERO;
    const ONE: Quaternion = Quaternion::ONE;

    fn midpoint_config() -> [Quaternion; 6] {
        [I, J, (I + J) * 0.5, K, (I + K) * 0.5, (J + K) * 0.5]
    }

    fn unit_cube_points() -> [Quaternion; 7] {
        [ZERO, I, J, I + J, K, I + K, J + K]
    }

    /// Second intersection of two coplanar circles that share `common`: the
    /// reflection of `common` across the line joining their centers.
    fn second_intersection(
        c1: [Quaternion; 3],
        c2: [Quaternion; 3],
        common: Quaternion,
    ) -> Quaternion {
        let center =
            |t: [Quaternion; 3]| match crate::fit::GenCircle::through(t[0], t[1], t[2]).unwrap() {
                crate::fit::GenCircle::Circle { center, .. } => center,
                _ => panic!("collinear triple"),
            };
        let (a, b) = (center(c1), center(c2));
        let axis = (b - a).normalized().unwrap();
        let d = common - a;
        let foot = a + axis * d.dot(axis);
        foot * 2.0 - common
    }

    #[test]
    fn midpoint_miquel_point() {
        let p = midpoint_config();
        let m = miquel_infinite(&p).unwrap();
        let expect = Quaternion::point(1.0, 1.0, 1.0) / 3.0;
        let got = m.point.finite().unwrap();
        assert!(got.distance(expect) < 1e-12, "{got}");
        assert!(m.agreement < 1e-12);
        let oracle = second_intersection([p[0], p[2], p[4]], [p[1], p[2], p[5]], p[2]);
        assert!(oracle.distance(expect) < 1e-12);
        for triple in [[p[0], p[2], p[4]], [p[1], p[2], p[5]], [p[3], p[4], p[5]]] {
            assert!(is_cocircular(triple[0], triple[1], triple[2], got, 1e-9).unwrap());
        }
    }

    #[test]
    fn unit_cube_finite() {
        let p = unit_cube_points();
        let m = miquel_finite(&p).unwrap();
        assert!(m.point.approx_eq(ExtendedPoint::from_im(I + J + K), 1e-15));
        let cube = dc_cube_finite(&p, &Frame::standard()).unwrap();
        for w in cube.weights {
            assert!((w - ONE).norm() < 1e-15, "{w}");
        }
        for params in crate::bezier::grid(&linspace(5), 3) {
            let f = cube.object.eval(&params).unwrap().finite().unwrap();
            let expect = Quaternion::point(params[0], params[1], params[2]);
            assert!(f.distance(expect) < 1e-15);
        }
        let report = validate_dc_cube(&cube.object, 5, DEFAULT_TOL);
        assert!(report.passed(), "{report}");
        assert!((report.get("jacobian_min").unwrap().residual - 1.0).abs() < 1e-14);
    }

    #[test]
    fn unit_cube_p7_is_inverted_midpoint_miquel() {
        // Inv_0^1 sends the unit-cube corners i, j, k to -i, -j, -k etc.; the
        // midpoint configuration is the image of the cube scaled by 2.
        let s = crate::moebius::SphereOfInversion::new(ZERO, 1.0).unwrap();
        let cube: [Quaternion; 7] = unit_cube_points().map(|q| q * 2.0);
        let img: Vec<Quaternion> = cube[1..]
            .iter()
            .map(|q| s.invert_point((*q).into()).finite().unwrap())
            .collect();
        let inf = miquel_infinite(&img.clone().try_into().unwrap()).unwrap();
        let back = s.invert_point(inf.point);
        let fin = miquel_finite(&cube).unwrap();
        assert!(back.approx_eq(fin.point, 1e-14));
        assert!(fin
            .point
            .approx_eq(ExtendedPoint::from_im((I + J + K) * 2.0), 1e-14));
    }

    #[test]
    fn infinite_midpoint_cube() {
        let p = midpoint_config();
        let cube = dc_cube_infinite(&p, &Frame::standard()).unwrap();
        assert!(cube.w7_deviation < 1e-10);
        let corners = cube.object.corners().unwrap();
        assert!(corners[0].is_infinite());
        for (n, q) in p.iter().enumerate() {
            assert!(corners[n + 1].approx_eq((*q).into(), 1e-14));
        }
        assert!(corners[7].approx_eq(cube.p7, 1e-14));
        let report = validate_dc_cube(&cube.object, 5, DEFAULT_TOL);
        assert!(report.passed(), "{report}");
    }

    #[test]
    fn degenerate_miquel_configuration() {
        // p3 = p1, p5 = p1 make A vanish; B vanishes with p6 = p3
        let p = [I, J, I, K, I, I];
        assert!(matches!(
            miquel_infinite(&p),
            Err(Error::DegenerateMiquel { .. })
        ));
    }

    #[test]
    fn perturbed_inputs_are_rejected() {
        let mut p = unit_cube_points();
        p[6] += Quaternion::point(0.0, 0.0, 0.05);
        assert!(matches!(
            dc_cube_finite(&p, &Frame::standard()),
            Err(Error::NotCocircular { .. })
        ));
        let mut p = midpoint_config();
        p[5] += Quaternion::point(0.01, 0.0, 0.0);
        assert!(matches!(
            dc_cube_infinite(&p, &Frame::standard()),
            Err(Error::NotCollinear { .. })
        ));
        let mut p = unit_cube_points();
        p[3] = ZERO;
        assert!(matches!(
            dc_cube_finite(&p, &Frame::standard()),
            Err(Error::Coincident(_))
        ));
    }

    #[test]
    fn spec_dispatch_and_p7_comparison() {
        let mut corners = [ExtendedPoint::INFINITY; 7];
        for (n, q) in unit_cube_points().iter().enumerate() {
            corners[n] = (*q).into();
        }
        let spec = DCCubeSpec {
            corners,
            frame: Frame::standard(),
            p7: Some((I + J + K).into()),
        };
        let cube = spec.build(DEFAULT_TOL).unwrap();
        assert!(cube.p7_input_deviation.unwrap() < 1e-15);
        let spec = DCCubeSpec {
            p7: Some((I + J).into()),
            ..spec
        };
        assert!(spec.build(DEFAULT_TOL).unwrap().p7_input_deviation.unwrap() > 0.1);
        let mut inf = corners;
        inf[0] = ExtendedPoint::INFINITY;
        for (n, q) in midpoint_config().iter().enumerate() {
            inf[n + 1] = (*q).into();
        }
        let spec = DCCubeSpec {
            corners: inf,
            frame: Frame::standard(),
            p7: None,
        };
        assert!(spec
            .build(DEFAULT_TOL)
            .unwrap()
            .object
            .corner(0)
            .unwrap()
            .is_infinite());
    }
}
