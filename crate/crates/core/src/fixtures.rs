//! Random well-conditioned construction data for tests and benchmarks.

use std::f64::consts::TAU;

use rand::Rng;

use crate::cubes::{dc_cube_finite, dc_cube_infinite};
use crate::fit::GenCircle;
use crate::frame::Frame;
use crate::quat::Quaternion;

/// Point with coordinates uniform in `[-1, 1]`.
pub fn random_point<R: Rng + ?Sized>(rng: &mut R) -> Quaternion {
    Quaternion::point(
        rng.random_range(-1.0..1.0),
        rng.random_range(-1.0..1.0),
        rng.random_range(-1.0..1.0),
    )
}

pub fn random_direction<R: Rng + ?Sized>(rng: &mut R) -> Quaternion {
    loop {
        let v = random_point(rng);
        let n = v.norm();
        if n > 0.2 && n <= 1.0 {
            return v / n;
        }
    }
}

pub fn random_frame<R: Rng + ?Sized>(rng: &mut R) -> Frame {
    loop {
        let v1 = random_direction(rng);
        let v = random_direction(rng);
        let v2 = v - v1 * v.dot(v1);
        if v2.norm() > 0.3 {
            return Frame::new(v1, v2.normalized().expect("nonzero"))
                .expect("orthonormal by construction");
        }
    }
}

fn min_separation(points: &[Quaternion]) -> f64 {
    let mut m = f64::INFINITY;
    for (n, a) in points.iter().enumerate() {
        for b in &points[n + 1..] {
            m = m.min(a.distance(*b));
        }
    }
    m
}

/// Triangle whose smallest angle is at least ~10 degrees.
fn random_triangle<R: Rng + ?Sized>(rng: &mut R) -> [Quaternion; 3] {
    loop {
        let t = [random_point(rng), random_point(rng), random_point(rng)];
        let ok = (0..3).all(|n| {
            let (a, b, c) = (t[n], t[(n + 1) % 3], t[(n + 2) % 3]);
            let (u, v) = (b - a, c - a);
            let s = u.cross(v).norm() / (u.norm() * v.norm());
            s > 0.17
        });
        if ok && min_separation(&t) > 0.3 {
            return t;
        }
    }
}

/// A point on the circle through `a`, `b`, `c`, at least `gap` radians away
/// from all three.
pub fn point_on_circle<R: Rng + ?Sized>(
    rng: &mut R,
    a: Quaternion,
    b: Quaternion,
    c: Quaternion,
    gap: f64,
) -> Option<Quaternion> {
    let GenCircle::Circle {
        center,
        normal,
        radius,
        start,
    } = GenCircle::through(a, b, c).ok()?
    else {
        return None;
    };
    let e1 = (start - center) / radius;
    let e2 = normal.cross(e1);
    let angle = |x: Quaternion| {
        let d = x - center;
        d.dot(e2).atan2(d.dot(e1)).rem_euclid(TAU)
    };
    let taken = [angle(a), angle(b), angle(c)];
    for _ in 0..64 {
        let theta: f64 = rng.random_range(0.0..TAU);
        let clear = taken.iter().all(|t| {
            let d = (theta - t).rem_euclid(TAU);
            d.min(TAU - d) > gap
        });
        if clear {
            return Some(GenCircle::through(a, b, c).ok()?.point_at(theta));
        }
    }
    None
}

/// A point `a + s (b - a)` on the line through `a` and `b`, away from both.
fn point_on_line<R: Rng + ?Sized>(rng: &mut R, a: Quaternion, b: Quaternion) -> Quaternion {
    loop {
        let s: f64 = rng.random_range(-1.0..2.0);
        if s.abs() > 0.2 && (s - 1.0).abs() > 0.2 {
            return a + (b - a) * s;
        }
    }
}

/// Finite corners `[p0, ..., p6]` and a frame admitting a DC cube whose eight
/// corners are pairwise well separated.
pub fn random_finite_cube<R: Rng + ?Sized>(rng: &mut R) -> ([Quaternion; 7], Frame) {
    loop {
        let p0 = random_point(rng);
        let [p1, p2, p4] = random_triangle(rng);
        let (Some(p3), Some(p5), Some(p6)) = (
            point_on_circle(rng, p0, p1, p2, 0.3),
            point_on_circle(rng, p0, p1, p4, 0.3),
            point_on_circle(rng, p0, p2, p4, 0.3),
        ) else {
            continue;
        };
        let p = [p0, p1, p2, p3, p4, p5, p6];
        let frame = random_frame(rng);
        let Ok(cube) = dc_cube_finite(&p, &frame) else {
            continue;
        };
        let Some(p7) = cube.p7.finite() else {
            continue;
        };
        let mut all = p.to_vec();
        all.push(p7);
        let extent = all.iter().map(|q| q.distance(p0)).fold(0.0, f64::max);
        if min_separation(&all) > 0.05 && extent < 20.0 {
            return (p, frame);
        }
    }
}

/// Corners `[p1, ..., p6]` for `p0 = inf` and a frame.
pub fn random_infinite_cube<R: Rng + ?Sized>(rng: &mut R) -> ([Quaternion; 6], Frame) {
    loop {
        let [p1, p2, p4] = random_triangle(rng);
        let p3 = point_on_line(rng, p1, p2);
        let p5 = point_on_line(rng, p1, p4);
        let p6 = point_on_line(rng, p2, p4);
        let p = [p1, p2, p3, p4, p5, p6];
        let frame = random_frame(rng);
        let Ok(cube) = dc_cube_infinite(&p, &frame) else {
            continue;
        };
        let p7 = cube.p7.finite().expect("finite for p0 = inf");
        let mut all = p.to_vec();
        all.push(p7);
        if min_separation(&all) > 0.05 && p7.norm() < 20.0 {
            return (p, frame);
        }
    }
}

/// Corners `[p0, p1, p2, p3]` with `p3` on the circle through the others.
pub fn random_finite_patch<R: Rng + ?Sized>(rng: &mut R) -> ([Quaternion; 4], Frame) {
    loop {
        let [p0, p1, p2] = random_triangle(rng);
        if let Some(p3) = point_on_circle(rng, p0, p1, p2, 0.3) {
            return ([p0, p1, p2, p3], random_frame(rng));
        }
    }
}

/// Corners `[p1, p2, p3]` with `p3` on the line through `p1`, `p2`.
pub fn random_infinite_patch<R: Rng + ?Sized>(rng: &mut R) -> ([Quaternion; 3], Frame) {
    loop {
        let (p1, p2) = (random_point(rng), random_point(rng));
        if p1.distance(p2) > 0.3 {
            return ([p1, p2, point_on_line(rng, p1, p2)], random_frame(rng));
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quat::{is_cocircular, is_collinear};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn fixtures_satisfy_their_preconditions() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..20 {
            let ([p0, p1, p2, p3, p4, p5, p6], _) = random_finite_cube(&mut rng);
            assert!(is_cocircular(p0, p1, p3, p2, 1e-12).unwrap());
            assert!(is_cocircular(p0, p1, p5, p4, 1e-12).unwrap());
            assert!(is_cocircular(p0, p2, p6, p4, 1e-12).unwrap());
            let ([p1, p2, p3, p4, p5, p6], _) = random_infinite_cube(&mut rng);
            assert!(is_collinear(p1, p2, p3, 1e-12));
            assert!(is_collinear(p1, p4, p5, 1e-12));
            assert!(is_collinear(p2, p4, p6, 1e-12));
        }
    }
}
