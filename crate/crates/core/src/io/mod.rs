//! Scene files, reports and mesh export.

pub mod mesh;
pub mod scene;

pub use mesh::{cube_mesh, format_number, format_short, net_mesh, patch_mesh, Mesh, MeshFormat};
pub use scene::{validate_scene, Built, Scene, SceneObject, SceneReport, Shape};
