//! 3D cyclidic nets: a vertex grid, one frame at the origin vertex, and a DC
//! cube per cell.
//!
//! Frames travel along grid edges by reflection in the median plane of the
//! edge. A reflected `v1` (along an `a` edge) points back into the cell it
//! came from, so the cell with origin `(a, b, c)` uses the vertex frame with
//! `v1`, `v2` multiplied by `(-1)^a`, `(-1)^b`.

use std::collections::VecDeque;

use crate::bezier::{grid, interior, QBObject};
use crate::cubes::{validate_dc_cube, DCCube, DCCubeSpec};
use crate::error::{Error, Result};
use crate::frame::Frame;
use crate::moebius::ExtendedPoint;
use crate::quat::{characteristic_scale, Quaternion};
use crate::report::{Check, Report};

/// Reflects `v1`, `v2` across the plane orthogonal to `p_next - p` and sets
/// `v3 = v1 v2`.
pub fn reflect_frame(frame: &Frame, p: Quaternion, p_next: Quaternion) -> Result<Frame> {
    let n = p_next - p;
    if n.norm() <= f64::EPSILON * p.norm().max(p_next.norm()) || n.is_zero() {
        return Err(Error::Coincident("neighbouring net vertices".into()));
    }
    let n2 = n.norm_sqr();
    let reflect = |v: Quaternion| (v - n * (2.0 * v.dot(n) / n2)).im();
    Frame::with_tol(reflect(frame.v1()), reflect(frame.v2()), 1e-6)
}

/// Vertex grid with `dims` cells per direction; vertex `(a, b, c)` is stored
/// at `a + (nx + 1) * (b + (ny + 1) * c)`.
#[derive(Debug, Clone, PartialEq)]
pub struct NetSpec {
    pub dims: [usize; 3],
    pub vertices: Vec<Quaternion>,
    pub seed_frame: Frame,
}

#[derive(Debug, Clone, PartialEq)]
pub struct NetCell {
    pub index: [usize; 3],
    pub spec: DCCubeSpec,
    pub cube: DCCube,
}

#[derive(Debug, Clone, PartialEq)]
pub struct CyclidicNet {
    pub dims: [usize; 3],
    pub vertices: Vec<Quaternion>,
    pub frames: Vec<Frame>,
    /// Cells with the first index varying fastest.
    pub cells: Vec<NetCell>,
}

impl NetSpec {
    pub fn vertex_index(&self, v: [usize; 3]) -> usize {
        vertex_index(self.dims, v)
    }
}

fn vertex_index(dims: [usize; 3], v: [usize; 3]) -> usize {
    v[0] + (dims[0] + 1) * (v[1] + (dims[1] + 1) * v[2])
}

fn vertex_count(dims: [usize; 3]) -> usize {
    (dims[0] + 1) * (dims[1] + 1) * (dims[2] + 1)
}

fn unit(d: usize) -> [usize; 3] {
    let mut e = [0; 3];
    e[d] = 1;
    e
}

fn add(v: [usize; 3], e: [usize; 3]) -> [usize; 3] {
    [v[0] + e[0], v[1] + e[1], v[2] + e[2]]
}

/// Breadth-first propagation from `(0, 0, 0)`, neighbours tried in the order
/// `+a, +b, +c, -a, -b, -c`; afterwards every grid edge is checked.
fn propagate_frames(spec: &NetSpec, tol: f64) -> Result<Vec<Frame>> {
    let dims = spec.dims;
    let mut frames: Vec<Option<Frame>> = vec![None; vertex_count(dims)];
    frames[0] = Some(spec.seed_frame);
    let mut queue = VecDeque::from([[0usize; 3]]);
    while let Some(v) = queue.pop_front() {
        let frame = frames[vertex_index(dims, v)].expect("queued vertices have frames");
        for step in 0..6 {
            let d = step % 3;
            let next = if step < 3 {
                if v[d] == dims[d] {
                    continue;
                }
                add(v, unit(d))
            } else {
                if v[d] == 0 {
                    continue;
                }
                let mut w = v;
                w[d] -= 1;
                w
            };
            let slot = vertex_index(dims, next);
            if frames[slot].is_none() {
                let p = spec.vertices[vertex_index(dims, v)];
                frames[slot] = Some(reflect_frame(&frame, p, spec.vertices[slot])?);
                queue.push_back(next);
            }
        }
    }
    let frames: Vec<Frame> = frames
        .into_iter()
        .map(|f| f.expect("grid is connected"))
        .collect();
    for c in 0..=dims[2] {
        for b in 0..=dims[1] {
            for a in 0..=dims[0] {
                let v = [a, b, c];
                for d in 0..3 {
                    if v[d] == dims[d] {
                        continue;
                    }
                    let w = add(v, unit(d));
                    let (iv, iw) = (vertex_index(dims, v), vertex_index(dims, w));
                    let moved = reflect_frame(&frames[iv], spec.vertices[iv], spec.vertices[iw])?;
                    let deviation = moved.deviation(&frames[iw]);
                    if deviation > tol {
                        return Err(Error::FramePropagation {
                            vertex: w,
                            deviation,
                        });
                    }
                }
            }
        }
    }
    Ok(frames)
}

fn parity(n: usize) -> f64 {
    if n.is_multiple_of(2) {
        1.0
    } else {
        -1.0
    }
}

/// Factor `w1 w0^-1` that fixes the parametrization of an edge.
fn edge_ratio(cube: &QBObject, from: usize, to: usize) -> Result<Quaternion> {
    let c = cube.control();
    Ok(c[to].w * c[from].w.inverse()?)
}

/// Builds every cell with the finite cube construction, then rescales each
/// cell's parameters so that edges shared with earlier cells carry the same
/// parametrization.
pub fn build_net(spec: &NetSpec, tol: f64) -> Result<CyclidicNet> {
    let dims = spec.dims;
    if dims.contains(&0) {
        return Err(Error::Degenerate("net dimensions must be positive".into()));
    }
    if spec.vertices.len() != vertex_count(dims) {
        return Err(Error::Scene(format!(
            "net with dims {dims:?} needs {} vertices, got {}",
            vertex_count(dims),
            spec.vertices.len()
        )));
    }
    if let Some(v) = spec.vertices.iter().find(|v| v.r != 0.0 || !v.is_finite()) {
        return Err(Error::Scene(format!(
            "net vertex {v} must be a finite imaginary quaternion"
        )));
    }
    let frames = propagate_frames(spec, tol.max(1e-12) * 1e3)?;
    let mut cells: Vec<NetCell> = Vec::with_capacity(dims.iter().product());
    for c in 0..dims[2] {
        for b in 0..dims[1] {
            for a in 0..dims[0] {
                let index = [a, b, c];
                let cell =
                    build_cell(spec, &frames, &cells, index, tol).map_err(|e| Error::Cell {
                        cell: index,
                        source: Box::new(e),
                    })?;
                cells.push(cell);
            }
        }
    }
    Ok(CyclidicNet {
        dims,
        vertices: spec.vertices.clone(),
        frames,
        cells,
    })
}

fn cell_slot(dims: [usize; 3], cell: [usize; 3]) -> usize {
    cell[0] + dims[0] * (cell[1] + dims[1] * cell[2])
}

fn build_cell(
    spec: &NetSpec,
    frames: &[Frame],
    done: &[NetCell],
    index: [usize; 3],
    tol: f64,
) -> Result<NetCell> {
    let dims = spec.dims;
    let mut corners = [ExtendedPoint::INFINITY; 7];
    for (n, corner) in corners.iter_mut().enumerate() {
        let v = add(index, [n & 1, (n >> 1) & 1, (n >> 2) & 1]);
        *corner = ExtendedPoint::from_im(spec.vertices[vertex_index(dims, v)]);
    }
    let p7 = spec.vertices[vertex_index(dims, add(index, [1, 1, 1]))];
    let origin = frames[vertex_index(dims, index)];
    let frame = origin.with_signs(parity(index[0]), parity(index[1]));
    let cube_spec = DCCubeSpec {
        corners,
        frame,
        p7: Some(ExtendedPoint::from_im(p7)),
    };
    let mut cube = cube_spec.build(tol)?;
    let deviation = cube.p7_input_deviation.unwrap_or(0.0);
    if deviation > tol.max(1e-12) * 1e3 {
        return Err(Error::Degenerate(format!(
            "vertex {:?} is off the Miquel point of its cell (relative deviation {deviation:e})",
            add(index, [1, 1, 1])
        )));
    }
    for d in 0..3 {
        let Some(e) = (0..3).find(|e| *e != d && index[*e] > 0) else {
            continue;
        };
        let mut prev = index;
        prev[e] -= 1;
        let neighbour = &done[cell_slot(dims, prev)].cube.object;
        let target = edge_ratio(neighbour, 1 << e, (1 << e) + (1 << d))?;
        let own = edge_ratio(&cube.object, 0, 1 << d)?;
        let lambda = target * own.inverse()?;
        let residual = lambda.im().norm() / lambda.norm();
        if residual > 1e-6 || lambda.r <= 0.0 {
            return Err(Error::EdgeMismatch {
                cell: index,
                residual,
            });
        }
        cube.object = cube.object.reparametrize(d, lambda.r);
    }
    let weights = cube.object.weights();
    cube.weights.copy_from_slice(&weights);
    Ok(NetCell {
        index,
        spec: cube_spec,
        cube,
    })
}

impl CyclidicNet {
    pub fn cell(&self, index: [usize; 3]) -> Option<&NetCell> {
        if (0..3).any(|d| index[d] >= self.dims[d]) {
            return None;
        }
        self.cells.get(cell_slot(self.dims, index))
    }

    /// Largest distance, over the scale of the vertices, between the two
    /// evaluations of every face shared by adjacent cells on a `res x res`
    /// interior grid.
    pub fn shared_face_residual(&self, res: usize) -> Result<f64> {
        let scale = characteristic_scale(&self.vertices);
        let mut worst = 0.0_f64;
        for cell in &self.cells {
            for d in 0..3 {
                let next = add(cell.index, unit(d));
                let Some(other) = self.cell(next) else {
                    continue;
                };
                let a = cell.cube.object.restrict(d, 1)?;
                let b = other.cube.object.restrict(d, 0)?;
                for params in grid(&interior(res), 2) {
                    let pa = a.eval(&params)?.expect_finite()?;
                    let pb = b.eval(&params)?.expect_finite()?;
                    worst = worst.max(pa.distance(pb) / scale);
                }
            }
        }
        Ok(worst)
    }
}

/// Every cell through [`validate_dc_cube`] plus the shared-face agreement.
pub fn validate_net(net: &CyclidicNet, res: usize, tol: f64) -> Report {
    let mut report = Report::default();
    for cell in &net.cells {
        let [a, b, c] = cell.index;
        report.extend_prefixed(
            &format!("cell[{a},{b},{c}]"),
            validate_dc_cube(&cell.cube.object, res, tol),
        );
    }
    match net.shared_face_residual(res) {
        Ok(r) => report.push(Check::at_most("shared_faces", r, tol)),
        Err(e) => report.push(Check::failed("shared_faces", e.to_string())),
    }
    report
}
