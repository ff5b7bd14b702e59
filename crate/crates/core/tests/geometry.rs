mod common;

use tifs_core::fixtures;
use tifs_core::geometry::{
    attractor_deterministic, chaos_game, hutchinson_step, pi_realize, ImplicitCloud, DEFAULT_BURN_IN,
};
use tifs_core::Word;

#[test]
fn one_sweep_refines_by_one_level() {
    for (name, t) in common::systems() {
        let seeds = t.seeds();
        for d in 0..=5 {
            let cloud = attractor_deterministic(&t, d, &seeds).unwrap();
            let swept = hutchinson_step(&t, &cloud);
            let next = attractor_deterministic(&t, d + 1, &seeds).unwrap();
            assert_eq!(swept.len(), next.len(), "{name} d={d}");
            for i in 0..next.len() {
                assert_eq!(swept.tag(i), next.tag(i));
                let gap = swept.point(i).iter().zip(next.point(i)).map(|(a, b)| (a - b).abs()).fold(0.0, f64::max);
                assert!(gap < 1e-12, "{name} d={d}");
            }
        }
    }
}

#[test]
fn error_bound_shrinks_geometrically() {
    for (_, t) in common::systems() {
        let seeds = t.seeds();
        let b: Vec<f64> = (0..5).map(|d| attractor_deterministic(&t, d, &seeds).unwrap().error_bound()).collect();
        for w in b.windows(2) {
            assert!((w[1] / w[0] - t.contraction()).abs() < 1e-12);
        }
    }
}

#[test]
fn coarse_clouds_sit_near_fine_ones() {
    for (name, t) in common::systems() {
        let coarse = attractor_deterministic(&t, 6, &t.seeds()).unwrap();
        let fine = ImplicitCloud::new(&t, 10);
        assert!(fine.one_sided_distance(&coarse) <= coarse.error_bound() + 1e-12, "{name}");
        let finer = attractor_deterministic(&t, 9, &t.seeds()).unwrap();
        let coarse_implicit = ImplicitCloud::new(&t, 6);
        assert!(coarse_implicit.one_sided_distance(&finer) <= coarse.error_bound() + 1e-12, "{name}");
    }
}

#[test]
fn bin_attractor_is_the_unit_interval() {
    let bin = fixtures::bin();
    let d = 12;
    let cloud = attractor_deterministic(&bin, d, &bin.seeds()).unwrap();
    let mut xs: Vec<f64> = cloud.points().map(|(p, _)| p[0]).collect();
    xs.sort_by(f64::total_cmp);
    let eps = cloud.error_bound();
    assert!(xs[0] >= -eps && *xs.last().unwrap() <= 1.0 + eps);
    assert!(xs.windows(2).all(|w| w[1] - w[0] <= 0.5f64.powi(d as i32) + 1e-15));
}

#[test]
fn pi_is_nested_along_prefixes() {
    for (name, t) in common::systems() {
        let sigma = t.words(4, tifs_core::Orientation::Forward, None).swap_remove(1);
        for k in 0..sigma.len() {
            let inner = pi_realize(&t, &sigma, 6).unwrap();
            let outer = pi_realize(&t, &sigma.prefix(k), 8).unwrap();
            let outer_implicit_gap = inner
                .points()
                .map(|(p, _)| outer.points().map(|(q, _)| dist(p, q)).fold(f64::INFINITY, f64::min))
                .fold(0.0, f64::max);
            assert!(outer_implicit_gap <= outer.error_bound() + 1e-12, "{name} σ={sigma} k={k}");
        }
    }
}

#[test]
fn pi_of_fib_right_piece() {
    let fib = fixtures::fib();
    let a = fixtures::golden_ratio_conjugate();
    let cloud = pi_realize(&fib, &Word::forward([2]), 10).unwrap();
    let (lo, hi) = cloud.bounding_box().unwrap();
    assert!(lo[0] >= a - 1e-12 && hi[0] <= 1.0 + 1e-12);
    assert!(lo[0] - a < cloud.error_bound() && 1.0 - hi[0] < cloud.error_bound());
}

#[test]
fn chaos_game_is_reproducible_and_close() {
    for t in [fixtures::bin(), fixtures::sier(), fixtures::gd2()] {
        let a = chaos_game(&t, 2000, 42, DEFAULT_BURN_IN);
        let b = chaos_game(&t, 2000, 42, DEFAULT_BURN_IN);
        assert_eq!(a, b);
        let c = chaos_game(&t, 2000, 43, DEFAULT_BURN_IN);
        assert_ne!(a, c);
        let reference = ImplicitCloud::new(&t, 14);
        assert!(reference.one_sided_distance(&a) <= 1e-3);
        for (p, v) in a.points() {
            assert!(reference.distance(p, Some(v)) <= 1e-3, "point tagged with the wrong component");
        }
    }
    let single = chaos_game(&fixtures::bin(), 1, 0, DEFAULT_BURN_IN);
    assert_eq!(single.len(), 1);
    assert!((0.0..=1.0).contains(&single.point(0)[0]));
}

fn dist(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y) * (x - y)).sum::<f64>().sqrt()
}
