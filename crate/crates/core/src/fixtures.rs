//! The four reference systems used throughout the tests and the CLI examples.
//!
//! * `BIN`: two halving maps of `[0, 1]`.
//! * `FIB`: ratios `a` and `a²` with `a = (√5 − 1)/2`, splitting `[0, 1]` into `[0, a] ∪ [a, 1]`.
//! * `SIER`: the Sierpinski triangle with base `1/2`.
//! * `GD2`: a two-vertex system on the line, `A¹ ⊂ [0, 4/7]` and `A² ⊂ [2, 15/7]`.

use alloc::string::{String, ToString};
use alloc::vec;

use crate::system::{RawMap, RawTifs, Tifs};

fn line_map(a: u32, q: f64, tail: u32, head: u32) -> RawMap {
    RawMap { a, o: vec![1.0], q: vec![q], tail, head }
}

fn plane_map(qx: f64, qy: f64) -> RawMap {
    RawMap { a: 1, o: vec![1.0, 0.0, 0.0, 1.0], q: vec![qx, qy], tail: 1, head: 1 }
}

/// `(√5 − 1)/2`.
pub fn golden_ratio_conjugate() -> f64 {
    (libm::sqrt(5.0) - 1.0) / 2.0
}

pub fn bin_raw() -> RawTifs {
    RawTifs {
        dimension: 1,
        base_ratio: String::from("0.5"),
        vertices: vec![1],
        maps: vec![line_map(1, 0.0, 1, 1), line_map(1, 0.5, 1, 1)],
    }
}

pub fn fib_raw() -> RawTifs {
    let a = golden_ratio_conjugate();
    RawTifs {
        dimension: 1,
        base_ratio: a.to_string(),
        vertices: vec![1],
        maps: vec![line_map(1, 0.0, 1, 1), line_map(2, 1.0 - a * a, 1, 1)],
    }
}

pub fn sier_raw() -> RawTifs {
    RawTifs {
        dimension: 2,
        base_ratio: String::from("0.5"),
        vertices: vec![1],
        maps: vec![plane_map(0.0, 0.0), plane_map(0.5, 0.0), plane_map(0.0, 0.5)],
    }
}

pub fn gd2_raw() -> RawTifs {
    RawTifs {
        dimension: 1,
        base_ratio: String::from("0.5"),
        vertices: vec![1, 2],
        maps: vec![line_map(1, 0.0, 1, 1), line_map(1, -0.5, 1, 2), line_map(2, 2.0, 2, 1)],
    }
}

pub fn bin() -> Tifs {
    Tifs::from_raw(&bin_raw()).expect("BIN fixture is valid")
}

pub fn fib() -> Tifs {
    Tifs::from_raw(&fib_raw()).expect("FIB fixture is valid")
}

pub fn sier() -> Tifs {
    Tifs::from_raw(&sier_raw()).expect("SIER fixture is valid")
}

pub fn gd2() -> Tifs {
    Tifs::from_raw(&gd2_raw()).expect("GD2 fixture is valid")
}

/// `(name, system)` for every fixture, in a fixed order.
pub fn all() -> [(&'static str, Tifs); 4] {
    [("BIN", bin()), ("FIB", fib()), ("SIER", sier()), ("GD2", gd2())]
}
