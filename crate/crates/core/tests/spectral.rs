use std::f64::consts::PI;

use num_complex::Complex64;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use tfns::fracops::TimeGrid;
use tfns::specfun::gamma_fn;
use tfns::spectral::{
    advection_divergence, divergence, inner_product, leray_project, nonlinear_term, norm_pqt,
    pressure_recover, random_bandlimited, read_field, taylor_green, transform_forward,
    transform_inverse, write_field, NormSpec, ScalarField, SpectralField, TorusGrid, Trajectory,
};

fn grid(dim: usize, m: usize) -> TorusGrid {
    TorusGrid::new(dim, m).unwrap()
}

fn max_diff(a: &[Vec<f64>], b: &[Vec<f64>]) -> f64 {
    a.iter()
        .flatten()
        .zip(b.iter().flatten())
        .map(|(x, y)| (x - y).abs())
        .fold(0.0, f64::max)
}

fn random_samples(g: &TorusGrid, seed: u64) -> Vec<Vec<f64>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..g.dim())
        .map(|_| (0..g.modes()).map(|_| rng.gen_range(-1.0..1.0)).collect())
        .collect()
}

fn random_div_free(g: &TorusGrid, band: usize, seed: u64) -> SpectralField {
    random_bandlimited(g, band, 1.0, true, &mut ChaCha8Rng::seed_from_u64(seed)).unwrap()
}

#[test]
fn grid_rejects_bad_shapes() {
    assert!(TorusGrid::new(2, 15).is_err());
    assert!(TorusGrid::new(4, 8).is_err());
    assert!(TorusGrid::new(0, 8).is_err());
    let u = SpectralField::zeros(&grid(2, 8));
    let v = SpectralField::zeros(&grid(2, 16));
    assert!(u.add(&v).is_err());
    assert!(transform_forward(&grid(2, 8), &[vec![0.0; 64]]).is_err());
}

#[test]
fn transform_examples() {
    let g = grid(2, 16);
    let zero = transform_forward(&g, &vec![vec![0.0; g.modes()]; 2]).unwrap();
    assert_eq!(zero.max_abs(), 0.0);
    let u = SpectralField::from_fn(&g, |x| vec![x[0].cos(), 0.0]).unwrap();
    for (i, z) in u.components()[0].iter().enumerate() {
        let k = g.wavenumber(i);
        let want = if k == [1, 0] || k == [-1, 0] { 0.5 } else { 0.0 };
        assert!((z - Complex64::new(want, 0.0)).norm() < 1e-15, "{k:?}");
    }
}

#[test]
fn round_trip_and_parseval() {
    for &(d, m) in &[(2, 32), (3, 16)] {
        let g = grid(d, m);
        let s = random_samples(&g, 7);
        let u = transform_forward(&g, &s).unwrap();
        let back = transform_inverse(&u);
        let scale = s.iter().flatten().fold(0.0f64, |a, x| a.max(x.abs()));
        assert!(max_diff(&back, &s) <= 1e-12 * scale);
        let phys: f64 = s.iter().flatten().map(|x| x * x).sum::<f64>() * g.cell_volume();
        assert!((u.l2_norm().powi(2) - phys).abs() <= 1e-10 * phys);
        assert!(u.conjugate_symmetry_error() < 1e-15);
    }
}

#[test]
fn projector_examples() {
    let g = grid(2, 16);
    let phi = ScalarField::from_fn(&g, |x| (x[0] + x[1]).sin()).unwrap();
    assert!(leray_project(&phi.gradient()).max_abs() < 1e-15);
    let tg = taylor_green(&g, 1.0).unwrap();
    assert!(leray_project(&tg).sub(&tg).unwrap().max_abs() < 1e-15);
    // mean flow passes through
    let mean = SpectralField::from_fn(&g, |_| vec![0.3, -0.7]).unwrap();
    let p = leray_project(&mean).to_physical();
    assert!(p[0].iter().all(|v| (v - 0.3).abs() < 1e-15));
    assert!(p[1].iter().all(|v| (v + 0.7).abs() < 1e-15));
    assert!(leray_project(&mean).is_div_free());
}

#[test]
fn divergence_examples() {
    let g = grid(2, 16);
    let a = SpectralField::from_fn(&g, |x| vec![x[1].sin(), 0.0]).unwrap();
    assert!(divergence(&a).max_abs() < 1e-15);
    let b = SpectralField::from_fn(&g, |x| vec![x[0].sin(), 0.0]).unwrap();
    let db = divergence(&b).to_physical();
    for (i, v) in db.iter().enumerate() {
        assert!((v - g.point(i)[0].cos()).abs() < 1e-13);
    }
}

#[test]
fn nonlinear_term_examples() {
    let g = grid(2, 32);
    assert_eq!(nonlinear_term(&SpectralField::zeros(&g)).max_abs(), 0.0);
    assert_eq!(pressure_recover(&SpectralField::zeros(&g)).max_abs(), 0.0);
    let tg = taylor_green(&g, 1.0).unwrap();
    assert!(nonlinear_term(&tg).max_abs() < 1e-14);
    // shear flow: u⊗u = sin²x₂ e₁⊗e₁ has no x₁ dependence
    let shear = SpectralField::from_fn(&g, |x| vec![x[1].sin(), 0.0]).unwrap();
    assert!(advection_divergence(&shear).max_abs() < 1e-15);
    assert!(pressure_recover(&shear).max_abs() < 1e-15);
}

/// Conjugate-symmetric random coefficients on |k_j| ≤ 2.
fn small_mode_field(g: &TorusGrid, seed: u64) -> SpectralField {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut comps = vec![vec![Complex64::default(); g.modes()]; 2];
    for c in comps.iter_mut() {
        for k1 in -2i64..=2 {
            for k2 in -2i64..=2 {
                let i = g.index_of(&[k1, k2]);
                let j = g.index_of(&[-k1, -k2]);
                if i > j {
                    continue;
                }
                let z = Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
                if i == j {
                    c[i] = Complex64::new(z.re, 0.0);
                } else {
                    c[i] = z;
                    c[j] = z.conj();
                }
            }
        }
    }
    SpectralField::from_components(g.clone(), comps, false).unwrap()
}

#[test]
fn advection_matches_brute_force_convolution() {
    let g = grid(2, 16);
    let u = small_mode_field(&g, 11);
    let c = u.components();
    let fast = advection_divergence(&u);
    let mut worst = 0.0f64;
    for k1 in -4i64..=4 {
        for k2 in -4i64..=4 {
            let mut want = [Complex64::default(); 2];
            for p1 in -2i64..=2 {
                for p2 in -2i64..=2 {
                    let (q1, q2) = (k1 - p1, k2 - p2);
                    if q1.abs() > 2 || q2.abs() > 2 {
                        continue;
                    }
                    let ip = g.index_of(&[p1, p2]);
                    let iq = g.index_of(&[q1, q2]);
                    for j in 0..2 {
                        // i Σ_k ξ_k (u^j u^k)^(ξ)
                        let t = c[j][ip] * (c[0][iq] * k1 as f64 + c[1][iq] * k2 as f64);
                        want[j] += Complex64::i() * t;
                    }
                }
            }
            let i = g.index_of(&[k1, k2]);
            for j in 0..2 {
                worst = worst.max((fast.components()[j][i] - want[j]).norm());
            }
        }
    }
    assert!(worst < 1e-13, "{worst}");
}

#[test]
fn taylor_green_pressure() {
    let g = grid(2, 32);
    let p = pressure_recover(&taylor_green(&g, 1.0).unwrap()).to_physical();
    for (i, v) in p.iter().enumerate() {
        let x = g.point(i);
        assert!((v - ((2.0 * x[0]).cos() + (2.0 * x[1]).cos()) / 4.0).abs() < 1e-14);
    }
}

#[test]
fn pressure_gradient_identity() {
    for &(d, m, band) in &[(2, 32, 5), (3, 16, 3)] {
        let g = grid(d, m);
        let u = random_div_free(&g, band, 3);
        let adv = advection_divergence(&u);
        let complement = adv.sub(&leray_project(&adv)).unwrap();
        let grad_p = pressure_recover(&u).gradient();
        assert!(grad_p.add(&complement).unwrap().max_abs() < 1e-10);
        assert!(leray_project(&grad_p).max_abs() < 1e-12);
    }
}

#[test]
fn field_io_round_trip() {
    let g = grid(3, 8);
    let u = random_div_free(&g, 2, 5);
    let mut buf = Vec::new();
    write_field(&mut buf, &u, 0.25).unwrap();
    let (v, t) = read_field(buf.as_slice()).unwrap();
    assert_eq!(t, 0.25);
    assert!(v.is_div_free());
    assert_eq!(v.components(), u.components());
    let mut bad = buf.clone();
    bad[0] = b'X';
    assert!(read_field(bad.as_slice()).is_err());
    assert!(read_field(&buf[..buf.len() - 8]).is_err());
}

fn constant_traj(g: &TorusGrid, c: f64, steps: usize, t_end: f64) -> Trajectory {
    let u = SpectralField::from_fn(g, |_| vec![c, 0.0]).unwrap();
    Trajectory::new(TimeGrid::new(t_end, steps).unwrap(), vec![u; steps + 1]).unwrap()
}

#[test]
fn norm_examples() {
    let g = grid(2, 16);
    let t = constant_traj(&g, 1.5, 8, 0.5);
    let v = norm_pqt(&t, NormSpec::new(2.0, 2.0, 0.5).unwrap()).unwrap();
    assert!((v - 1.5 * 2.0 * PI * 0.5f64.sqrt()).abs() < 1e-12);
    let z = constant_traj(&g, 0.0, 8, 0.5);
    assert_eq!(norm_pqt(&z, NormSpec::new(3.0, 4.0, 0.5).unwrap()).unwrap(), 0.0);
    assert!(NormSpec::new(0.5, 2.0, 1.0).is_err());
    assert!(NormSpec::new(2.0, 0.9, 1.0).is_err());
    assert!(norm_pqt(&t, NormSpec::new(2.0, 2.0, 0.75).unwrap()).is_err());
}

#[test]
fn sine_norms_match_closed_form() {
    let g = grid(2, 64);
    let u = SpectralField::from_fn(&g, |x| vec![x[0].sin(), 0.0]).unwrap();
    let t = Trajectory::new(TimeGrid::new(1.0, 4).unwrap(), vec![u; 5]).unwrap();
    for &p in &[2.0, 3.0, 4.0, 6.0] {
        // ∫₀^{2π}|sin|^p = 2√π Γ((p+1)/2)/Γ(p/2+1)
        let one = 2.0 * PI.sqrt() * gamma_fn((p + 1.0) / 2.0).unwrap() / gamma_fn(p / 2.0 + 1.0).unwrap();
        let want = (2.0 * PI * one).powf(1.0 / p);
        let got = norm_pqt(&t, NormSpec::new(p, f64::INFINITY, 1.0).unwrap()).unwrap();
        assert!((got - want).abs() < 1e-6, "p={p}: {got} vs {want}");
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn projector_algebra(seed in any::<u64>(), three in any::<bool>()) {
        let g = if three { grid(3, 8) } else { grid(2, 16) };
        let u = transform_forward(&g, &random_samples(&g, seed)).unwrap();
        let p = leray_project(&u);
        prop_assert!(leray_project(&p).sub(&p).unwrap().max_abs() < 1e-13);
        prop_assert!(divergence(&p).max_abs() < 1e-12);
        prop_assert!(p.conjugate_symmetry_error() < 1e-14);
        let phi = ScalarField::from_physical(&g, &random_samples(&g, seed ^ 1)[0]).unwrap();
        prop_assert!(leray_project(&phi.gradient()).max_abs() < 1e-12);
    }

    #[test]
    fn transport_is_energy_neutral(seed in any::<u64>(), band in 1usize..=5) {
        let g = grid(2, 16);
        let u = random_div_free(&g, band, seed);
        let f = nonlinear_term(&u);
        prop_assert!(inner_product(&f, &u).unwrap().abs() < 1e-8);
        prop_assert!(f.is_div_free() && f.max_divergence() < 1e-12);
        prop_assert!(f.conjugate_symmetry_error() < 1e-14);
        prop_assert!(pressure_recover(&u).coeffs()[0].norm() == 0.0);
    }

    #[test]
    fn norm_is_homogeneous(c in -3.0f64..3.0, p in 1.0f64..6.0, q in 1.0f64..6.0, seed in any::<u64>()) {
        let g = grid(2, 8);
        let u = transform_forward(&g, &random_samples(&g, seed)).unwrap();
        let times = TimeGrid::new(1.0, 3).unwrap();
        let fields: Vec<_> = (0..4).map(|k| u.scale(1.0 + k as f64)).collect();
        let t = Trajectory::new(times, fields).unwrap();
        let spec = NormSpec::new(p, q, 0.8).unwrap();
        let a = norm_pqt(&t, spec).unwrap();
        let b = norm_pqt(&t.map(|f| f.scale(c)), spec).unwrap();
        prop_assert!((b - c.abs() * a).abs() <= 1e-12 * a.max(1.0));
    }
}
