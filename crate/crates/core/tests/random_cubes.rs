use cyclide::cubes::{dc_cube_finite, dc_cube_infinite, validate_dc_cube};
use cyclide::fixtures::{random_finite_cube, random_infinite_cube};
use cyclide::DEFAULT_TOL;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

#[test]
fn random_cubes_are_dc_cubes() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for n in 0..40 {
        let cube = if n % 2 == 0 {
            let (p, f) = random_finite_cube(&mut rng);
            dc_cube_finite(&p, &f).unwrap()
        } else {
            let (p, f) = random_infinite_cube(&mut rng);
            dc_cube_infinite(&p, &f).unwrap()
        };
        assert!(cube.w7_deviation <= 1e-9, "w7 {}", cube.w7_deviation);
        assert!(
            cube.miquel_agreement <= 1e-9,
            "miquel {}",
            cube.miquel_agreement
        );
        let report = validate_dc_cube(&cube.object, 9, DEFAULT_TOL);
        assert!(report.passed(), "cube {n}\n{report}");
    }
}
