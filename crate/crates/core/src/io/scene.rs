//! JSON scene files.
//!
//! ```json
//! {
//!   "tolerance": 1e-9,
//!   "objects": [
//!     {"id": "a", "kind": "arc", "p0": [1, 0, 0], "p1": [-1, 0, 0], "v1": [0, -1, 0]},
//!     {"id": "c", "kind": "cube",
//!      "corners": [[0,0,0], [1,0,0], [0,1,0], [1,1,0], [0,0,1], [1,0,1], [0,1,1]],
//!      "frame": {"v1": [1,0,0], "v2": [0,1,0]}}
//!   ]
//! }
//! ```
//!
//! Points are `[x, y, z]`, `[0, x, y, z]` or `"inf"`.

use std::collections::HashSet;
use std::fmt;

use serde::de::{self, Deserializer};
use serde::ser::Serializer;
use serde::{Deserialize, Serialize};

use crate::arcs::{arc_endpoints_tangent, arc_through_point, semiline, ArcBranch};
use crate::bezier::{linspace, QBObject};
use crate::cubes::{validate_dc_cube, DCCube, DCCubeSpec};
use crate::error::{Error, Result};
use crate::frame::Frame;
use crate::moebius::ExtendedPoint;
use crate::nets::{build_net, validate_net, CyclidicNet, NetSpec};
use crate::patches::{curve_circle_residual, validate_principal, PrincipalPatchSpec};
use crate::quat::{Quaternion, DEFAULT_TOL};
use crate::report::{Check, Report};

#[derive(Deserialize)]
#[serde(untagged)]
enum PointRepr {
    Word(String),
    Coords(Vec<f64>),
}

impl Serialize for ExtendedPoint {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self.finite() {
            None => s.serialize_str("inf"),
            Some(p) => p.xyz().serialize(s),
        }
    }
}

impl<'de> Deserialize<'de> for ExtendedPoint {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        match PointRepr::deserialize(d)? {
            PointRepr::Word(w) if w == "inf" => Ok(ExtendedPoint::INFINITY),
            PointRepr::Word(w) => Err(de::Error::custom(format!(
                "expected a coordinate array or \"inf\", got \"{w}\""
            ))),
            PointRepr::Coords(c) => {
                let q = match c[..] {
                    [x, y, z] => Quaternion::point(x, y, z),
                    [r, x, y, z] => Quaternion::new(r, x, y, z),
                    _ => {
                        return Err(de::Error::custom(format!(
                            "a point needs 3 or 4 components, got {}",
                            c.len()
                        )))
                    }
                };
                ExtendedPoint::new(q).map_err(de::Error::custom)
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FrameSpec {
    pub v1: ExtendedPoint,
    pub v2: ExtendedPoint,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub v3: Option<ExtendedPoint>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Shape {
    /// Either `v1` (tangent at `p0`) or `through` (a third circle point).
    Arc {
        p0: ExtendedPoint,
        p1: ExtendedPoint,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        v1: Option<ExtendedPoint>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        through: Option<ExtendedPoint>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        branch: Option<ArcBranch>,
    },
    Semiline {
        p1: ExtendedPoint,
        v1: ExtendedPoint,
    },
    Patch {
        corners: [ExtendedPoint; 4],
        v1: ExtendedPoint,
        v2: ExtendedPoint,
    },
    Cube {
        corners: [ExtendedPoint; 7],
        frame: FrameSpec,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        p7: Option<ExtendedPoint>,
    },
    /// `vertices` list `(a, b, c)` with `a` fastest, then `b`, then `c`.
    Net {
        dims: [usize; 3],
        vertices: Vec<ExtendedPoint>,
        frame: FrameSpec,
    },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SceneObject {
    pub id: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tolerance: Option<f64>,
    #[serde(flatten)]
    pub shape: Shape,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Scene {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tolerance: Option<f64>,
    pub objects: Vec<SceneObject>,
}

/// A constructed scene object.
#[derive(Debug, Clone, PartialEq)]
pub enum Built {
    Curve(QBObject),
    Patch(QBObject),
    Cube(Box<DCCube>),
    Net(CyclidicNet),
}

fn vector(name: &str, p: ExtendedPoint) -> Result<Quaternion> {
    p.finite()
        .ok_or_else(|| Error::Scene(format!("{name} may not be \"inf\"")))
}

impl FrameSpec {
    pub fn build(&self, tol: f64) -> Result<Frame> {
        let (v1, v2) = (vector("v1", self.v1)?, vector("v2", self.v2)?);
        match self.v3 {
            None => Frame::with_tol(v1, v2, tol),
            Some(v3) => Frame::from_triple(v1, v2, vector("v3", v3)?, tol),
        }
    }
}

impl Shape {
    pub fn kind(&self) -> &'static str {
        match self {
            Shape::Arc { .. } => "arc",
            Shape::Semiline { .. } => "semiline",
            Shape::Patch { .. } => "patch",
            Shape::Cube { .. } => "cube",
            Shape::Net { .. } => "net",
        }
    }

    pub fn build(&self, tol: f64) -> Result<Built> {
        match self {
            Shape::Arc {
                p0,
                p1,
                v1,
                through,
                branch,
            } => {
                let (p0, p1) = (vector("p0", *p0)?, vector("p1", *p1)?);
                let curve = match (v1, through) {
                    (Some(v1), None) => {
                        if branch.is_some() {
                            return Err(Error::Scene(
                                "branch only applies to arcs given by \"through\"".into(),
                            ));
                        }
                        arc_endpoints_tangent(p0, p1, vector("v1", *v1)?)?
                    }
                    (None, Some(q)) => arc_through_point(
                        p0,
                        p1,
                        vector("through", *q)?,
                        branch.unwrap_or_default(),
                    )?,
                    _ => {
                        return Err(Error::Scene(
                            "an arc needs exactly one of \"v1\" and \"through\"".into(),
                        ))
                    }
                };
                Ok(Built::Curve(curve))
            }
            Shape::Semiline { p1, v1 } => Ok(Built::Curve(semiline(
                vector("p1", *p1)?,
                vector("v1", *v1)?,
            )?)),
            Shape::Patch { corners, v1, v2 } => {
                let spec = PrincipalPatchSpec {
                    corners: *corners,
                    v1: vector("v1", *v1)?,
                    v2: vector("v2", *v2)?,
                };
                Ok(Built::Patch(spec.build(tol)?))
            }
            Shape::Cube { corners, frame, p7 } => {
                let spec = DCCubeSpec {
                    corners: *corners,
                    frame: frame.build(tol)?,
                    p7: *p7,
                };
                Ok(Built::Cube(Box::new(spec.build(tol)?)))
            }
            Shape::Net {
                dims,
                vertices,
                frame,
            } => {
                let vertices = vertices
                    .iter()
                    .enumerate()
                    .map(|(n, v)| vector(&format!("net vertex {n}"), *v))
                    .collect::<Result<Vec<_>>>()?;
                let spec = NetSpec {
                    dims: *dims,
                    vertices,
                    seed_frame: frame.build(tol)?,
                };
                Ok(Built::Net(build_net(&spec, tol)?))
            }
        }
    }
}

impl Built {
    /// The single QB object, if this is not a net.
    pub fn object(&self) -> Option<&QBObject> {
        match self {
            Built::Curve(o) | Built::Patch(o) => Some(o),
            Built::Cube(c) => Some(&c.object),
            Built::Net(_) => None,
        }
    }

    pub fn validate(&self, res: usize, tol: f64) -> Report {
        match self {
            Built::Curve(curve) => {
                let mut report = Report::default();
                let study = curve
                    .control()
                    .iter()
                    .map(|h| h.study_residual())
                    .fold(0.0, f64::max);
                report.push(Check::at_most("study", study, tol));
                report.push(match curve_circle_residual(curve, res.max(5)) {
                    Ok(r) => Check::at_most("circle", r, tol),
                    Err(e) => Check::failed("circle", e.to_string()),
                });
                report
            }
            Built::Patch(patch) => validate_principal(patch, res, tol),
            Built::Cube(cube) => {
                let mut report = Report::default();
                report.push(Check::at_most("w7_agreement", cube.w7_deviation, tol));
                report.push(Check::at_most(
                    "miquel_agreement",
                    cube.miquel_agreement,
                    tol,
                ));
                if let Some(d) = cube.p7_input_deviation {
                    report.push(Check::at_most("p7_input", d, tol));
                }
                report
                    .checks
                    .extend(validate_dc_cube(&cube.object, res, tol).checks);
                report
            }
            Built::Net(net) => validate_net(net, res, tol),
        }
    }
}

impl SceneObject {
    /// Object tolerance, else the scene's, else the default.
    pub fn tolerance_in(&self, scene: &Scene) -> f64 {
        self.tolerance.or(scene.tolerance).unwrap_or(DEFAULT_TOL)
    }

    pub fn build(&self, tol: f64) -> Result<Built> {
        self.shape.build(tol)
    }
}

impl Scene {
    pub fn from_json(text: &str) -> Result<Scene> {
        let scene: Scene = serde_json::from_str(text).map_err(|e| Error::Scene(e.to_string()))?;
        let mut seen = HashSet::new();
        for o in &scene.objects {
            if !seen.insert(o.id.as_str()) {
                return Err(Error::Scene(format!("duplicate object id \"{}\"", o.id)));
            }
        }
        Ok(scene)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("scenes always serialize")
    }

    pub fn get(&self, id: &str) -> Result<&SceneObject> {
        self.objects
            .iter()
            .find(|o| o.id == id)
            .ok_or_else(|| Error::Scene(format!("no object with id \"{id}\"")))
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ObjectReport {
    pub id: String,
    pub kind: String,
    pub passed: bool,
    pub checks: Vec<Check>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SceneReport {
    pub passed: bool,
    pub objects: Vec<ObjectReport>,
}

/// Builds and validates every object. A construction error becomes a failed
/// `construction` check. `tol`, when given, overrides all scene tolerances.
pub fn validate_scene(scene: &Scene, res: usize, tol: Option<f64>) -> SceneReport {
    let objects: Vec<ObjectReport> = scene
        .objects
        .iter()
        .map(|o| {
            let tol = tol.unwrap_or_else(|| o.tolerance_in(scene));
            let report = match o.build(tol) {
                Ok(built) => built.validate(res, tol),
                Err(e) => Report {
                    checks: vec![Check::failed("construction", e.to_string())],
                },
            };
            ObjectReport {
                id: o.id.clone(),
                kind: o.shape.kind().into(),
                passed: report.passed(),
                checks: report.checks,
            }
        })
        .collect();
    SceneReport {
        passed: objects.iter().all(|o| o.passed),
        objects,
    }
}

impl fmt::Display for SceneReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for o in &self.objects {
            writeln!(
                f,
                "{} {} ({})",
                if o.passed { "PASS" } else { "FAIL" },
                o.id,
                o.kind
            )?;
            for c in &o.checks {
                writeln!(f, "  {c}")?;
            }
        }
        writeln!(
            f,
            "{}",
            if self.passed {
                "all checks passed"
            } else {
                "validation failed"
            }
        )
    }
}

/// Samples an object on the inclusive grid with `n` values per parameter.
pub fn sample_grid(obj: &QBObject, n: usize) -> Result<Vec<(Vec<f64>, ExtendedPoint)>> {
    crate::bezier::grid(&linspace(n), obj.arity())
        .into_iter()
        .map(|p| obj.eval(&p).map(|x| (p, x)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    const UNIT_CUBE: &str = r#"{"objects": [{"id": "c", "kind": "cube",
        "corners": [[0,0,0], [1,0,0], [0,1,0], [1,1,0], [0,0,1], [1,0,1], [0,1,1]],
        "frame": {"v1": [1,0,0], "v2": [0,1,0], "v3": [0,0,1]}, "p7": [1,1,1]}]}"#;

    #[test]
    fn parses_points() {
        let p: ExtendedPoint = serde_json::from_str("[0, 1, 2, 3]").unwrap();
        assert_eq!(p, ExtendedPoint::xyz(1.0, 2.0, 3.0));
        let p: ExtendedPoint = serde_json::from_str("\"inf\"").unwrap();
        assert!(p.is_infinite());
        assert!(serde_json::from_str::<ExtendedPoint>("[1, 1, 2, 3]").is_err());
        assert!(serde_json::from_str::<ExtendedPoint>("[1, 2]").is_err());
        assert!(serde_json::from_str::<ExtendedPoint>("\"infinity\"").is_err());
    }

    #[test]
    fn unit_cube_scene_validates() {
        let scene = Scene::from_json(UNIT_CUBE).unwrap();
        let report = validate_scene(&scene, 9, None);
        assert!(report.passed, "{report}");
        for c in &report.objects[0].checks {
            if c.comparison == crate::report::Comparison::AtMost {
                assert!(c.residual <= 1e-10, "{c}");
            }
        }
    }

    #[test]
    fn round_trip_is_exact() {
        let text = r#"{"tolerance": 1e-7, "objects": [
            {"id": "a", "kind": "arc", "p0": [0.1, 0.2, 0.30000000000000004], "p1": [-1, 0, 0], "through": [0, 1, 0], "branch": "complementary"},
            {"id": "s", "kind": "semiline", "p1": [0, 0, 0], "v1": [1, 0, 0]},
            {"id": "p", "kind": "patch", "corners": ["inf", [1,0,0], [0,1,0], [2,-1,0]], "v1": [1,0,0], "v2": [0,1,0], "tolerance": 0.001}
        ]}"#;
        let scene = Scene::from_json(text).unwrap();
        let again = Scene::from_json(&scene.to_json()).unwrap();
        assert_eq!(scene, again);
        let Shape::Arc { p0, .. } = &again.objects[0].shape else {
            panic!()
        };
        assert_eq!(
            p0.finite().unwrap().z.to_bits(),
            0.30000000000000004_f64.to_bits()
        );
    }

    #[test]
    fn bad_scenes() {
        assert!(Scene::from_json("{").is_err());
        assert!(Scene::from_json(r#"{"objects": [{"id": "x", "kind": "torus"}]}"#).is_err());
        let dup = r#"{"objects": [{"id": "x", "kind": "semiline", "p1": [0,0,0], "v1": [1,0,0]},
                                  {"id": "x", "kind": "semiline", "p1": [0,0,0], "v1": [1,0,0]}]}"#;
        assert!(Scene::from_json(dup).is_err());
        let both = r#"{"objects": [{"id": "x", "kind": "arc", "p0": [1,0,0], "p1": [0,1,0], "v1": [0,1,0], "through": [0,0,1]}]}"#;
        let report = validate_scene(&Scene::from_json(both).unwrap(), 5, None);
        assert!(!report.passed);
        assert_eq!(report.objects[0].checks[0].name, "construction");
    }
}
