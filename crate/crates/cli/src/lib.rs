//! `cyclide` command-line interface.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use cyclide::cubes::{
    check_finite_corners, check_infinite_corners, miquel_finite, miquel_infinite, MiquelPoint,
};
use cyclide::io::scene::{sample_grid, ObjectReport};
use cyclide::io::{
    cube_mesh, format_short, net_mesh, patch_mesh, validate_scene, Built, MeshFormat, Scene,
    SceneReport, Shape,
};
use cyclide::nets::validate_net;
use cyclide::{Check, ExtendedPoint, Quaternion};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

const VALIDATE_RES: usize = 33;
const MESH_RES: usize = 65;

#[derive(Debug, Parser)]
#[command(
    name = "cyclide",
    version,
    about = "Quaternionic Bezier arcs, cyclide patches, cyclidic cubes and nets"
)]
pub struct Cli {
    /// Tolerance for every check, overriding the scene's own.
    #[arg(long, global = true)]
    pub tol: Option<f64>,
    /// Samples per parameter (validation) or subdivisions (meshing).
    #[arg(long, global = true)]
    pub res: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build and validate every object of a scene.
    Validate {
        /// Scene file (JSON).
        scene: PathBuf,
        /// Write the report as JSON to this path (`-` for stdout).
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Print the Miquel point of a cube, given by a scene or seven points.
    Miquel {
        /// A scene file, or seven points `x,y,z` / `inf` for p0..p6.
        #[arg(num_args = 1..=7, required = true, allow_hyphen_values = true)]
        inputs: Vec<String>,
        /// Cube id when reading a scene (default: the first cube).
        #[arg(long)]
        id: Option<String>,
    },
    /// Sample an object at given parameters or on a grid.
    Eval {
        /// Scene file (JSON).
        scene: PathBuf,
        /// Object id within the scene.
        id: String,
        /// Parameter values, one per parameter of the object.
        #[arg(long, num_args = 1..=3, conflicts_with = "grid")]
        at: Option<Vec<f64>>,
        /// Inclusive grid with this many values per parameter.
        #[arg(long)]
        grid: Option<usize>,
        /// Cell `a,b,c` of a net.
        #[arg(long)]
        cell: Option<String>,
    },
    /// Export a patch, cube or net as a triangle mesh.
    Mesh {
        /// Scene file (JSON).
        scene: PathBuf,
        /// Object id within the scene.
        id: String,
        #[command(flatten)]
        output: MeshOutput,
    },
    /// Build a net, print its vertex frames and validate its cells.
    Net {
        /// Scene file (JSON).
        scene: PathBuf,
        /// Net id (default: the first net).
        #[arg(long)]
        id: Option<String>,
        /// Write the report as JSON to this path (`-` for stdout).
        #[arg(long)]
        json: Option<PathBuf>,
        #[command(flatten)]
        output: MeshOutput,
    },
}

#[derive(Debug, Args)]
pub struct MeshOutput {
    /// Mesh format, `obj` or `ply`.
    #[arg(long, default_value = "obj")]
    pub format: String,
    /// Mesh output path; standard output when absent for `mesh`.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

/// A failure with its exit code.
#[derive(Debug)]
pub struct Failure {
    pub code: i32,
    pub message: String,
}

fn usage(message: impl ToString) -> Failure {
    Failure {
        code: EXIT_USAGE,
        message: message.to_string(),
    }
}

/// A closed stdout ends the run quietly.
fn written(e: std::io::Error) -> Failure {
    if e.kind() == std::io::ErrorKind::BrokenPipe {
        return Failure {
            code: EXIT_PASS,
            message: String::new(),
        };
    }
    failed(e)
}

fn failed(message: impl ToString) -> Failure {
    Failure {
        code: EXIT_FAIL,
        message: message.to_string(),
    }
}

type Outcome = std::result::Result<i32, Failure>;

fn load(path: &Path) -> std::result::Result<Scene, Failure> {
    let text = fs::read_to_string(path)
        .map_err(|e| usage(format!("cannot read {}: {e}", path.display())))?;
    Scene::from_json(&text).map_err(|e| usage(format!("{}: {e}", path.display())))
}

fn write_file(path: &Path, text: &str, out: &mut dyn Write) -> std::result::Result<(), Failure> {
    if path == Path::new("-") {
        out.write_all(text.as_bytes()).map_err(written)
    } else {
        fs::write(path, text).map_err(|e| failed(format!("cannot write {}: {e}", path.display())))
    }
}

fn parse_point(s: &str) -> std::result::Result<ExtendedPoint, Failure> {
    if s == "inf" {
        return Ok(ExtendedPoint::INFINITY);
    }
    let c: Vec<f64> = s
        .split(',')
        .map(|v| v.trim().parse::<f64>())
        .collect::<std::result::Result<_, _>>()
        .map_err(|e| usage(format!("bad point \"{s}\": {e}")))?;
    match c[..] {
        [x, y, z] => Ok(ExtendedPoint::xyz(x, y, z)),
        _ => Err(usage(format!("bad point \"{s}\": expected x,y,z or inf"))),
    }
}

fn show(p: ExtendedPoint) -> String {
    match p.finite() {
        None => "inf".into(),
        Some(q) => format!(
            "{} {} {}",
            format_short(q.x),
            format_short(q.y),
            format_short(q.z)
        ),
    }
}

fn build(scene: &Scene, id: &str, tol: Option<f64>) -> std::result::Result<(Built, f64), Failure> {
    let object = scene.get(id).map_err(usage)?;
    let tol = tol.unwrap_or_else(|| object.tolerance_in(scene));
    let built = object
        .build(tol)
        .map_err(|e| failed(format!("{id}: {e}")))?;
    Ok((built, tol))
}

fn first_of_kind(
    scene: &Scene,
    kind: &str,
    id: Option<String>,
) -> std::result::Result<String, Failure> {
    match id {
        Some(id) => Ok(id),
        None => scene
            .objects
            .iter()
            .find(|o| o.shape.kind() == kind)
            .map(|o| o.id.clone())
            .ok_or_else(|| usage(format!("scene has no {kind}"))),
    }
}

/// Miquel point of cube corners that pass the construction preconditions.
fn miquel(corners: &[ExtendedPoint; 7], tol: f64) -> cyclide::Result<MiquelPoint> {
    let mut finite = [Quaternion::ZERO; 7];
    for (n, c) in corners.iter().enumerate().skip(1) {
        finite[n] = c.finite().ok_or_else(|| {
            cyclide::Error::Degenerate(format!("corner p{n} may not be infinite"))
        })?;
    }
    match corners[0].finite() {
        None => {
            let p: [Quaternion; 6] = finite[1..].try_into().expect("six corners");
            check_infinite_corners(&p, tol)?;
            miquel_infinite(&p)
        }
        Some(p0) => {
            finite[0] = p0;
            check_finite_corners(&finite, tol)?;
            miquel_finite(&finite)
        }
    }
}

fn cmd_miquel(
    inputs: &[String],
    id: Option<String>,
    tol: Option<f64>,
    out: &mut dyn Write,
) -> Outcome {
    let mut scene_tol = cyclide::DEFAULT_TOL;
    let corners: [ExtendedPoint; 7] = match inputs.len() {
        1 => {
            let scene = load(Path::new(&inputs[0]))?;
            let id = first_of_kind(&scene, "cube", id)?;
            let object = scene.get(&id).map_err(usage)?;
            scene_tol = object.tolerance_in(&scene);
            match &object.shape {
                Shape::Cube { corners, .. } => *corners,
                other => return Err(usage(format!("{id} is a {}, not a cube", other.kind()))),
            }
        }
        7 => {
            let pts = inputs
                .iter()
                .map(|s| parse_point(s))
                .collect::<std::result::Result<Vec<_>, _>>()?;
            pts.try_into().expect("seven points")
        }
        n => {
            return Err(usage(format!(
                "expected a scene file or 7 points, got {n} arguments"
            )))
        }
    };
    let m = miquel(&corners, tol.unwrap_or(scene_tol)).map_err(failed)?;
    writeln!(out, "{}", show(m.point)).map_err(written)?;
    writeln!(out, "agreement {:e}", m.agreement).map_err(written)?;
    Ok(EXIT_PASS)
}

fn emit_report(report: &SceneReport, json: Option<&Path>, out: &mut dyn Write) -> Outcome {
    match json {
        Some(path) => {
            let text = serde_json::to_string_pretty(report).map_err(failed)? + "\n";
            write_file(path, &text, out)?;
        }
        None => write!(out, "{report}").map_err(written)?,
    }
    Ok(if report.passed { EXIT_PASS } else { EXIT_FAIL })
}

fn cmd_validate(
    scene: &Path,
    json: Option<&Path>,
    tol: Option<f64>,
    res: usize,
    out: &mut dyn Write,
) -> Outcome {
    let scene = load(scene)?;
    emit_report(&validate_scene(&scene, res, tol), json, out)
}

fn cmd_eval(
    scene: &Path,
    id: &str,
    at: Option<Vec<f64>>,
    grid: Option<usize>,
    cell: Option<String>,
    tol: Option<f64>,
    out: &mut dyn Write,
) -> Outcome {
    let scene = load(scene)?;
    let (built, _) = build(&scene, id, tol)?;
    let object = match (&built, cell) {
        (Built::Net(net), Some(cell)) => {
            let idx: Vec<usize> = cell
                .split(',')
                .map(|v| v.trim().parse())
                .collect::<std::result::Result<_, _>>()
                .map_err(|e| usage(format!("bad cell \"{cell}\": {e}")))?;
            let idx: [usize; 3] = idx.try_into().map_err(|_| usage("a cell index is a,b,c"))?;
            &net.cell(idx)
                .ok_or_else(|| usage(format!("net {id} has no cell {cell}")))?
                .cube
                .object
        }
        (Built::Net(_), None) => return Err(usage("evaluating a net needs --cell a,b,c")),
        (_, Some(_)) => return Err(usage("--cell only applies to nets")),
        (b, None) => b.object().expect("non-net objects have a QB object"),
    };
    let points = match (at, grid) {
        (Some(params), _) => vec![object.eval(&params).map_err(usage)?],
        (None, Some(n)) => sample_grid(object, n)
            .map_err(usage)?
            .into_iter()
            .map(|(_, p)| p)
            .collect(),
        (None, None) => return Err(usage("give --at or --grid")),
    };
    for p in points {
        writeln!(out, "{}", show(p)).map_err(written)?;
    }
    Ok(EXIT_PASS)
}

fn render_mesh(
    built: &Built,
    res: usize,
    output: &MeshOutput,
) -> std::result::Result<String, Failure> {
    let format: MeshFormat = output.format.parse().map_err(usage)?;
    let mesh = match built {
        Built::Patch(p) => patch_mesh(p, res),
        Built::Cube(c) => cube_mesh(&c.object, res),
        Built::Net(n) => net_mesh(n, res),
        Built::Curve(_) => return Err(usage("only patches, cubes and nets can be meshed")),
    }
    .map_err(failed)?;
    Ok(mesh.render(format))
}

fn cmd_mesh(
    scene: &Path,
    id: &str,
    output: &MeshOutput,
    tol: Option<f64>,
    res: usize,
    out: &mut dyn Write,
) -> Outcome {
    let scene = load(scene)?;
    let (built, _) = build(&scene, id, tol)?;
    let text = render_mesh(&built, res, output)?;
    write_file(output.out.as_deref().unwrap_or(Path::new("-")), &text, out)?;
    Ok(EXIT_PASS)
}

fn cmd_net(
    scene: &Path,
    id: Option<String>,
    json: Option<&Path>,
    output: &MeshOutput,
    tol: Option<f64>,
    res: Option<usize>,
    out: &mut dyn Write,
) -> Outcome {
    let scene = load(scene)?;
    let id = first_of_kind(&scene, "net", id)?;
    let object = scene.get(&id).map_err(usage)?;
    if object.shape.kind() != "net" {
        return Err(usage(format!(
            "{id} is a {}, not a net",
            object.shape.kind()
        )));
    }
    let tol = tol.unwrap_or_else(|| object.tolerance_in(&scene));
    let built = match object.build(tol) {
        Ok(b) => b,
        Err(e) => {
            let report = SceneReport {
                passed: false,
                objects: vec![ObjectReport {
                    id: id.clone(),
                    kind: "net".into(),
                    passed: false,
                    checks: vec![Check::failed("construction", e.to_string())],
                }],
            };
            return emit_report(&report, json, out);
        }
    };
    let Built::Net(net) = &built else {
        unreachable!("kind checked above")
    };
    if json.is_none() {
        let [nx, ny, nz] = net.dims;
        writeln!(out, "net {id}: {nx}x{ny}x{nz} cells").map_err(written)?;
        for c in 0..=nz {
            for b in 0..=ny {
                for a in 0..=nx {
                    let f = net.frames[a + (nx + 1) * (b + (ny + 1) * c)];
                    let v = f.vectors().map(|q| show(ExtendedPoint::from_im(q)));
                    writeln!(out, "frame {a} {b} {c}: {} | {} | {}", v[0], v[1], v[2])
                        .map_err(written)?;
                }
            }
        }
    }
    let report = validate_net(net, res.unwrap_or(VALIDATE_RES), tol);
    if let Some(path) = &output.out {
        let text = render_mesh(&built, res.unwrap_or(MESH_RES), output)?;
        write_file(path, &text, out)?;
    }
    let scene_report = SceneReport {
        passed: report.passed(),
        objects: vec![ObjectReport {
            id,
            kind: "net".into(),
            passed: report.passed(),
            checks: report.checks,
        }],
    };
    emit_report(&scene_report, json, out)
}

/// Runs a parsed command line, writing normal output to `out`. Errors go to
/// the returned [`Failure`].
pub fn run(cli: Cli, out: &mut dyn Write) -> Outcome {
    if let Some(tol) = cli.tol {
        if !(tol > 0.0 && tol.is_finite()) {
            return Err(usage(format!("--tol must be positive, got {tol}")));
        }
    }
    if cli.res == Some(0) {
        return Err(usage("--res must be positive"));
    }
    match cli.command {
        Command::Validate { scene, json } => cmd_validate(
            &scene,
            json.as_deref(),
            cli.tol,
            cli.res.unwrap_or(VALIDATE_RES),
            out,
        ),
        Command::Miquel { inputs, id } => cmd_miquel(&inputs, id, cli.tol, out),
        Command::Eval {
            scene,
            id,
            at,
            grid,
            cell,
        } => cmd_eval(&scene, &id, at, grid, cell, cli.tol, out),
        Command::Mesh { scene, id, output } => cmd_mesh(
            &scene,
            &id,
            &output,
            cli.tol,
            cli.res.unwrap_or(MESH_RES),
            out,
        ),
        Command::Net {
            scene,
            id,
            json,
            output,
        } => cmd_net(&scene, id, json.as_deref(), &output, cli.tol, cli.res, out),
    }
}
