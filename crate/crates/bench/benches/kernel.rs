use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use cyclide::bezier::{grid, linspace};
use cyclide::cubes::{
    dc_cube_finite, dc_cube_infinite, miquel_finite, miquel_infinite, validate_dc_cube,
};
use cyclide::fixtures::{random_finite_cube, random_infinite_cube};
use cyclide::nets::build_net;
use cyclide::{Frame, NetSpec, Quaternion, DEFAULT_TOL};
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn unit_grid(n: usize) -> NetSpec {
    let mut vertices = Vec::new();
    for c in 0..=n {
        for b in 0..=n {
            for a in 0..=n {
                vertices.push(Quaternion::point(a as f64, b as f64, c as f64));
            }
        }
    }
    NetSpec {
        dims: [n; 3],
        vertices,
        seed_frame: Frame::standard(),
    }
}

fn construction(c: &mut Criterion) {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let (finite, frame) = random_finite_cube(&mut rng);
    let (infinite, frame_inf) = random_infinite_cube(&mut rng);
    c.bench_function("miquel_finite", |b| {
        b.iter(|| miquel_finite(black_box(&finite)))
    });
    c.bench_function("miquel_infinite", |b| {
        b.iter(|| miquel_infinite(black_box(&infinite)))
    });
    c.bench_function("dc_cube_finite", |b| {
        b.iter(|| dc_cube_finite(black_box(&finite), &frame))
    });
    c.bench_function("dc_cube_infinite", |b| {
        b.iter(|| dc_cube_infinite(black_box(&infinite), &frame_inf))
    });
}

fn evaluation(c: &mut Criterion) {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let (p, frame) = random_finite_cube(&mut rng);
    let cube = dc_cube_finite(&p, &frame).unwrap().object;
    let samples = grid(&linspace(9), 3);
    c.bench_function("eval_729", |b| {
        b.iter(|| {
            samples.iter().for_each(|s| {
                black_box(cube.eval(black_box(s)).unwrap());
            })
        })
    });
    c.bench_function("partials_729", |b| {
        b.iter(|| {
            samples.iter().for_each(|s| {
                black_box(cube.partials(black_box(s)).unwrap());
            })
        })
    });
    c.bench_function("validate_dc_cube_res9", |b| {
        b.iter(|| validate_dc_cube(black_box(&cube), 9, DEFAULT_TOL))
    });
}

fn nets(c: &mut Criterion) {
    let spec = unit_grid(3);
    c.bench_function("build_net_3x3x3", |b| {
        b.iter(|| build_net(black_box(&spec), DEFAULT_TOL).unwrap())
    });
}

criterion_group!(benches, construction, evaluation, nets);
criterion_main!(benches);
