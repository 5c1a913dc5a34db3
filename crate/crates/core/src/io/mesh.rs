//! Triangle meshes sampled from patches, cubes and nets, written as ASCII OBJ
//! or PLY.

use std::fmt::Write;
use std::str::FromStr;

use crate::bezier::{grid, linspace, QBObject};
use crate::cubes::FACES;
use crate::error::{Error, Result};
use crate::nets::CyclidicNet;
use crate::quat::Quaternion;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MeshFormat {
    Obj,
    Ply,
}

impl FromStr for MeshFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "obj" => Ok(MeshFormat::Obj),
            "ply" => Ok(MeshFormat::Ply),
            _ => Err(Error::Scene(format!(
                "unknown mesh format \"{s}\" (expected obj or ply)"
            ))),
        }
    }
}

/// Vertices and triangles, split into named groups of consecutive triangles.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct Mesh {
    pub vertices: Vec<Quaternion>,
    pub triangles: Vec<[usize; 3]>,
    /// Group name and index of its first triangle.
    pub groups: Vec<(String, usize)>,
}

/// Shortest decimal that parses back to `x`; `-0` prints as `0`.
pub fn format_number(x: f64) -> String {
    format!("{}", x + 0.0)
}

/// `x` rounded to 15 significant digits, for console output where the last
/// bits of rounding noise only distract.
pub fn format_short(x: f64) -> String {
    if !x.is_finite() || x == 0.0 {
        return format_number(x);
    }
    let rounded: f64 = format!("{x:.14e}").parse().expect("formatted float parses");
    format_number(rounded)
}

/// `(res + 1)^2` samples with `s` fastest and two triangles per grid quad,
/// `(v00, v10, v11)` and `(v00, v11, v01)`.
pub fn patch_mesh(patch: &QBObject, res: usize) -> Result<Mesh> {
    if patch.arity() != 2 {
        return Err(Error::Arity {
            expected: 2,
            got: patch.arity(),
        });
    }
    if res == 0 {
        return Err(Error::Degenerate(
            "mesh resolution must be at least 1".into(),
        ));
    }
    let vertices = grid(&linspace(res + 1), 2)
        .iter()
        .map(|p| patch.eval(p)?.finite().ok_or(Error::MeshThroughInfinity))
        .collect::<Result<Vec<_>>>()?;
    let row = res + 1;
    let mut triangles = Vec::with_capacity(2 * res * res);
    for j in 0..res {
        for i in 0..res {
            let v00 = i + row * j;
            let (v10, v01, v11) = (v00 + 1, v00 + row, v00 + row + 1);
            triangles.push([v00, v10, v11]);
            triangles.push([v00, v11, v01]);
        }
    }
    Ok(Mesh {
        vertices,
        triangles,
        groups: vec![(String::new(), 0)],
    })
}

impl Mesh {
    /// Appends `other` as the group `name`.
    pub fn append(&mut self, name: impl Into<String>, other: Mesh) {
        let offset = self.vertices.len();
        self.groups.push((name.into(), self.triangles.len()));
        self.vertices.extend(other.vertices);
        self.triangles
            .extend(other.triangles.iter().map(|t| t.map(|v| v + offset)));
    }

    pub fn to_obj(&self) -> String {
        let mut out = String::new();
        for v in &self.vertices {
            writeln!(
                out,
                "v {} {} {}",
                format_number(v.x),
                format_number(v.y),
                format_number(v.z)
            )
            .unwrap();
        }
        let mut groups = self.groups.iter().peekable();
        for (n, t) in self.triangles.iter().enumerate() {
            while let Some((name, _)) = groups.next_if(|g| g.1 == n) {
                if !name.is_empty() {
                    writeln!(out, "g {name}").unwrap();
                }
            }
            writeln!(out, "f {} {} {}", t[0] + 1, t[1] + 1, t[2] + 1).unwrap();
        }
        out
    }

    pub fn to_ply(&self) -> String {
        let mut out = String::new();
        writeln!(out, "ply\nformat ascii 1.0").unwrap();
        writeln!(out, "element vertex {}", self.vertices.len()).unwrap();
        writeln!(
            out,
            "property double x\nproperty double y\nproperty double z"
        )
        .unwrap();
        writeln!(out, "element face {}", self.triangles.len()).unwrap();
        writeln!(out, "property list uchar int vertex_indices\nend_header").unwrap();
        for v in &self.vertices {
            writeln!(
                out,
                "{} {} {}",
                format_number(v.x),
                format_number(v.y),
                format_number(v.z)
            )
            .unwrap();
        }
        for t in &self.triangles {
            writeln!(out, "3 {} {} {}", t[0], t[1], t[2]).unwrap();
        }
        out
    }

    pub fn render(&self, format: MeshFormat) -> String {
        match format {
            MeshFormat::Obj => self.to_obj(),
            MeshFormat::Ply => self.to_ply(),
        }
    }
}

/// The six faces in the order `s0, s1, t0, t1, u0, u1`.
pub fn cube_mesh(cube: &QBObject, res: usize) -> Result<Mesh> {
    cube_faces(cube, res, "")
}

fn cube_faces(cube: &QBObject, res: usize, prefix: &str) -> Result<Mesh> {
    let mut mesh = Mesh::default();
    for (param, side, label) in FACES {
        mesh.append(
            format!("{prefix}{label}"),
            patch_mesh(&cube.restrict(param, side)?, res)?,
        );
    }
    Ok(mesh)
}

/// All six faces of every cell, cells in storage order.
pub fn net_mesh(net: &CyclidicNet, res: usize) -> Result<Mesh> {
    let mut mesh = Mesh::default();
    for cell in &net.cells {
        let [a, b, c] = cell.index;
        let faces = cube_faces(&cell.cube.object, res, &format!("cell_{a}_{b}_{c}_"))?;
        let offset = mesh.vertices.len();
        let first = mesh.triangles.len();
        mesh.groups
            .extend(faces.groups.into_iter().map(|(n, t)| (n, t + first)));
        mesh.vertices.extend(faces.vertices);
        mesh.triangles
            .extend(faces.triangles.iter().map(|t| t.map(|v| v + offset)));
    }
    Ok(mesh)
}
