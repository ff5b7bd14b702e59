//! Fixture-level acceptance checks. Runs as a plain binary and prints one
//! `PASS`/`FAIL` line per check; any failure makes the process exit non-zero.

use std::path::Path;
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use tifs_core::address::{absolute_address, absolute_addresses, tile_from_absolute};
use tifs_core::dynamics::{
    check_equivalence, deflate, find_patch_occurrences, hierarchy_check, inflate, neighbor_map_check, Verdict,
};
use tifs_core::fixtures;
use tifs_core::geometry::{chaos_game, ImplicitCloud, DEFAULT_BURN_IN};
use tifs_core::rng::ChaosRng;
use tifs_core::symbolic::{omega, predecessor_decomposition, reassemble, split};
use tifs_core::tiling::{blow_up_frame, canonical_tiling, tiling_of, tiling_of_prefix};
use tifs_core::{AffineMap, Orientation, Tifs, Tiling, Word};

type Outcome = Result<String, String>;
type Check = (&'static str, fn() -> Outcome);

fn ensure(ok: bool, why: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(why())
    }
}

fn within(elapsed: Duration, limit: Duration) -> Result<(), String> {
    ensure(elapsed < limit, || format!("took {elapsed:?}, limit {limit:?}"))
}

fn fib_address_tables() -> Outcome {
    let fib = fixtures::fib();
    let expected: [&[&str]; 4] = [
        &["∅.1", "∅.2"],
        &["∅.11", "∅.12", "∅.2"],
        &["∅.111", "∅.112", "∅.12", "∅.21", "∅.22"],
        &["∅.1111", "∅.1112", "∅.112", "∅.121", "∅.122", "∅.211", "∅.212", "∅.22"],
    ];
    let start = Instant::now();
    let tables: Vec<Vec<String>> =
        (0..4).map(|k| omega(&fib, k, None).iter().map(|w| format!("∅.{w}")).collect()).collect();
    let elapsed = start.elapsed();
    for (k, (got, want)) in tables.iter().zip(expected).enumerate() {
        ensure(got == want, || format!("k={k}: {got:?}"))?;
    }
    within(elapsed, Duration::from_millis(1))?;
    Ok(format!("k = 0..3 exact, {elapsed:?}"))
}

fn fib_letter_strings() -> Outcome {
    let fib = fixtures::fib();
    let expected = ["ls", "lsl", "lslls", "lsllslsl", "lsllslsllslls"];
    let start = Instant::now();
    let mut got = Vec::new();
    for k in 0..5 {
        got.push(canonical_tiling(&fib, k, None).letters(&fib).map_err(|e| e.to_string())?);
    }
    let elapsed = start.elapsed();
    ensure(got == expected, || format!("{got:?}"))?;
    within(elapsed, Duration::from_millis(1))?;
    Ok(format!("T_0..T_4 exact, {elapsed:?}"))
}

fn level_counts() -> Outcome {
    let (fib, bin) = (fixtures::fib(), fixtures::bin());
    let start = Instant::now();
    let f: Vec<usize> = (0..=20).map(|k| omega(&fib, k, None).len()).collect();
    let b: Vec<usize> = (0..=16).map(|k| omega(&bin, k, None).len()).collect();
    let elapsed = start.elapsed();
    for k in 2..=20 {
        ensure(f[k] == f[k - 1] + f[k - 2], || format!("FIB k={k}: {} ≠ {} + {}", f[k], f[k - 1], f[k - 2]))?;
    }
    for (k, &n) in b.iter().enumerate() {
        ensure(n == 1 << (k + 1), || format!("BIN k={k}: {n}"))?;
    }
    within(elapsed, Duration::from_secs(1))?;
    Ok(format!("|Ω_20| = {} for FIB, BIN to k = 16, {elapsed:?}", f[20]))
}

fn bin_tile_addresses() -> Outcome {
    let bin = fixtures::bin();
    let hulls = [(0.0, 1.0)];
    let outer = tiling_of(&bin, &Word::reversed([2, 1])).map_err(|e| e.to_string())?;
    let tile = outer
        .tiles()
        .iter()
        .find(|x| {
            let (lo, hi) = x.interval(&hulls);
            (lo - 1.0).abs() < 1e-12 && (hi - 1.5).abs() < 1e-12
        })
        .ok_or("no tile [1, 1.5] in Π(21)")?;
    let err = |e: tifs_core::Error| e.to_string();
    let a1 = absolute_address(&bin, tile, &Word::reversed([1])).map_err(err)?;
    let a21 = absolute_address(&bin, tile, &Word::reversed([2, 1])).map_err(err)?;
    ensure(a1.to_string() == "1.21" && a21.to_string() == "21.211", || format!("{a1}, {a21}"))?;
    let both = absolute_addresses(&bin, tile, &[Word::reversed([1]), Word::reversed([2, 1])]).map_err(err)?;
    ensure(both == [a1.clone(), a21.clone()], || format!("{both:?}"))?;
    for a in [&a1, &a21] {
        let (lo, hi) = tile_from_absolute(&bin, a).map_err(err)?.interval(&hulls);
        ensure((lo - 1.0).abs() <= 1e-12 && (hi - 1.5).abs() <= 1e-12, || format!("{a} → [{lo}, {hi}]"))?;
    }
    Ok(String::from("1.21 and 21.211, both invert to [1, 1.5]"))
}

fn random_reversed(t: &Tifs, rng: &mut ChaosRng, len: usize) -> Word {
    let mut symbols = Vec::with_capacity(len);
    for _ in 0..len {
        let options: Vec<u16> = match symbols.last() {
            None => t.symbols().collect(),
            Some(&l) => t.continuations(Orientation::Reversed, Some(l), None).to_vec(),
        };
        symbols.push(options[rng.below(options.len())]);
    }
    Word::reversed(symbols)
}

fn nesting() -> Outcome {
    let mut rng = ChaosRng::new(2024);
    let mut checked = 0;
    for (name, t) in [("BIN", fixtures::bin()), ("FIB", fixtures::fib()), ("GD2", fixtures::gd2())] {
        for _ in 0..100 {
            let len = rng.below(9);
            let theta = random_reversed(&t, &mut rng, len);
            for k in 0..len {
                let inner = tiling_of_prefix(&t, &theta, k).map_err(|e| e.to_string())?;
                let outer = tiling_of_prefix(&t, &theta, k + 1).map_err(|e| e.to_string())?;
                ensure(inner.is_subset_of(&outer, 1e-9), || format!("{name} θ={theta} k={k}"))?;
                checked += 1;
            }
        }
    }
    Ok(format!("{checked} inclusions over 300 words"))
}

fn endpoints(t: &Tifs, tiling: &Tiling) -> Result<Vec<(f64, f64)>, String> {
    Ok(tiling.by_position(t).map_err(|e| e.to_string())?.into_iter().map(|(_, iv)| iv).collect())
}

fn blow_ups_are_canonical() -> Outcome {
    let (mut worst_1d, mut worst_2d, mut count) = (0.0f64, 0.0f64, 0usize);
    for (name, t) in fixtures::all() {
        let base = tifs_core::geometry::attractor_deterministic(&t, 2, &t.seeds()).map_err(|e| e.to_string())?;
        for len in 0..=6 {
            for theta in t.words(len, Orientation::Reversed, None) {
                let pi = tiling_of(&t, &theta).map_err(|e| e.to_string())?;
                let (e, level, root) = blow_up_frame(&t, &theta).map_err(|e| e.to_string())?;
                let expected = canonical_tiling(&t, level, root).mapped(&e);
                ensure(pi.len() == expected.len(), || format!("{name} θ={theta}: tile counts differ"))?;
                if t.dim() == 1 {
                    let (a, b) = (endpoints(&t, &pi)?, endpoints(&t, &expected)?);
                    for (x, y) in a.iter().zip(&b) {
                        worst_1d = worst_1d.max((x.0 - y.0).abs()).max((x.1 - y.1).abs());
                    }
                } else {
                    for (x, y) in pi.tiles().iter().zip(expected.tiles()) {
                        ensure(x.body == y.body && x.prototile == y.prototile, || {
                            format!("{name} θ={theta}: bodies differ")
                        })?;
                        let (cx, cy) = (
                            base.component(x.prototile.vertex).mapped(&x.map),
                            base.component(y.prototile.vertex).mapped(&y.map),
                        );
                        for i in 0..cx.len() {
                            let d =
                                cx.point(i).iter().zip(cy.point(i)).map(|(p, q)| (p - q) * (p - q)).sum::<f64>().sqrt();
                            worst_2d = worst_2d.max(d);
                        }
                    }
                }
                count += 1;
            }
        }
    }
    ensure(worst_1d <= 1e-9, || format!("1D endpoint deviation {worst_1d:e}"))?;
    ensure(worst_2d <= 1e-6, || format!("2D cloud deviation {worst_2d:e}"))?;
    Ok(format!("{count} contexts; max deviation 1D {worst_1d:.1e}, 2D {worst_2d:.1e}"))
}

fn splitting() -> Outcome {
    let mut checks = 0;
    for (name, t) in fixtures::all() {
        let mut roots: Vec<_> = t.vertices().map(Some).collect();
        roots.push(None);
        for &root in &roots {
            let mut cur = omega(&t, 0, root);
            for k in 0..=12 {
                let next = split(&t, &cur);
                let direct = omega(&t, k + 1, root);
                ensure(next.words() == direct.words(), || format!("{name} k={k} root={root:?}"))?;
                cur = next;
                checks += 1;
            }
            for k in t.a_max()..=10u32 {
                for l in 0..=k - t.a_max() {
                    let blocks = predecessor_decomposition(&t, k, l, root).map_err(|e| e.to_string())?;
                    ensure(reassemble(&blocks) == omega(&t, k, root).into_words(), || format!("{name} k={k} l={l}"))?;
                    checks += 1;
                }
            }
        }
    }
    Ok(format!("{checks} level identities"))
}

fn inflation_and_hierarchy() -> Outcome {
    let mut hierarchy = 0;
    for (name, t) in fixtures::all() {
        for k in 1..=10 {
            let tk = canonical_tiling(&t, k, None);
            let down = deflate(&t, &tk).map_err(|e| format!("{name} k={k}: {e}"))?;
            ensure(down.same_tiles(&canonical_tiling(&t, k - 1, None), 1e-9), || format!("{name}: deflate T_{k}"))?;
            ensure(inflate(&t, &down).same_tiles(&tk, 1e-9), || format!("{name}: inflate T_{}", k - 1))?;
        }
        for len in 0..=6 {
            for theta in t.words(len, Orientation::Reversed, None) {
                for k in 0..=len.min(4) {
                    let ok = hierarchy_check(&t, &theta, k).map_err(|e| format!("{name} θ={theta} k={k}: {e}"))?;
                    ensure(ok, || format!("{name} θ={theta} k={k}: hierarchy mismatch"))?;
                    hierarchy += 1;
                }
            }
        }
    }
    Ok(format!("k ≤ 10 round trips, {hierarchy} hierarchy checks"))
}

fn bin_equivalence() -> Outcome {
    let bin = fixtures::bin();
    let plus_one = AffineMap::translation(bin.base(), vec![1.0]);
    let mut count = 0;
    for gamma in bin.words(5, Orientation::Reversed, None) {
        let theta = Word::reversed([1]).concat(&gamma);
        let psi = Word::reversed([2]).concat(&gamma);
        let w = check_equivalence(&bin, &theta, &psi, 4).map_err(|e| format!("γ={gamma}: {e}"))?;
        ensure((w.p, w.q) == (1, 1), || format!("γ={gamma}: p={} q={}", w.p, w.q))?;
        ensure(w.e.approx_eq(&plus_one, 1e-12), || format!("γ={gamma}: E = {:?}", w.e))?;
        for m in 0..=5 {
            let image = tiling_of_prefix(&bin, &psi, m).map_err(|e| e.to_string())?.mapped(&w.e);
            let target = tiling_of_prefix(&bin, &theta, m + 1).map_err(|e| e.to_string())?;
            ensure(image.is_subset_of(&target, 1e-9), || format!("γ={gamma} m={m}"))?;
            count += 1;
        }
    }
    Ok(format!("p = q = 1, E(x) = x + 1, {count} inclusions"))
}

fn dimensions() -> Outcome {
    let cases = [
        ("BIN", fixtures::bin(), 1.0, 1e-9),
        ("FIB", fixtures::fib(), 1.0, 1e-6),
        ("SIER", fixtures::sier(), 3f64.ln() / 2f64.ln(), 1e-6),
    ];
    let mut notes = Vec::new();
    for (name, t, want, tol) in cases {
        let start = Instant::now();
        let d = t.hausdorff_dimension().map_err(|e| e.to_string())?;
        let elapsed = start.elapsed();
        ensure((d - want).abs() <= tol, || format!("{name}: {d} vs {want}"))?;
        within(elapsed, Duration::from_millis(10)).map_err(|e| format!("{name}: {e}"))?;
        notes.push(format!("{name} {d:.10} ({elapsed:?})"));
    }
    Ok(notes.join(", "))
}

fn chaos_game_accuracy() -> Outcome {
    let mut notes = Vec::new();
    for (name, t) in [("BIN", fixtures::bin()), ("SIER", fixtures::sier())] {
        let start = Instant::now();
        let cloud = chaos_game(&t, 100_000, 12345, DEFAULT_BURN_IN);
        let reference = ImplicitCloud::new(&t, 20);
        let outlier = reference.first_outlier(&cloud, 1e-3, false);
        let elapsed = start.elapsed();
        ensure(outlier.is_none(), || format!("{name}: point {outlier:?} is farther than 1e-3"))?;
        let again = chaos_game(&t, 100_000, 12345, DEFAULT_BURN_IN);
        let bytes =
            |c: &tifs_core::geometry::PointCloud| c.coords().iter().flat_map(|x| x.to_le_bytes()).collect::<Vec<u8>>();
        ensure(bytes(&cloud) == bytes(&again), || format!("{name}: rerun differs"))?;
        within(elapsed, Duration::from_secs(5)).map_err(|e| format!("{name}: {e}"))?;
        notes.push(format!("{name} ({elapsed:.2?})"));
    }
    Ok(notes.join(", "))
}

fn rigidity() -> Outcome {
    let bin = neighbor_map_check(&fixtures::bin(), 12, 1e-9).map_err(|e| e.to_string())?;
    ensure(bin.verdict == Verdict::Fails, || format!("BIN verdict {:?}", bin.verdict))?;
    ensure(bin.witnesses.iter().any(|w| (w.shift()[0].abs() - 0.5).abs() < 1e-12), || {
        String::from("BIN: no witness ±1/2")
    })?;
    let fib = neighbor_map_check(&fixtures::fib(), 12, 1e-9).map_err(|e| e.to_string())?;
    ensure(fib.verdict == Verdict::Passes, || format!("FIB verdict {:?}", fib.verdict))?;
    Ok(format!("BIN fails ({} witnesses), FIB passes at depth 12", bin.witnesses.len()))
}

fn patch_counts() -> Outcome {
    let fib = fixtures::fib();
    let t0 = canonical_tiling(&fib, 0, None);
    // Words with exponent sum k over parts {1, 2}.
    let mut oracle = vec![1usize, 1];
    for k in 2..=8 {
        oracle.push(oracle[k - 1] + oracle[k - 2]);
    }
    let mut found = Vec::new();
    for k in 0..=8 {
        let n = find_patch_occurrences(&canonical_tiling(&fib, k, None), t0.tiles(), None).len();
        ensure(n == oracle[k as usize], || format!("k={k}: {n} vs {}", oracle[k as usize]))?;
        found.push(n);
    }
    ensure(found[3] == 3 && found[4] == 5, || format!("{found:?}"))?;
    Ok(format!("{found:?}"))
}

fn cli_stability() -> Outcome {
    let bin = env!("CARGO_BIN_EXE_tifs");
    let fixture = |n: &str| {
        Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(format!("{n}.json")).display().to_string()
    };
    let (fib, binc, sier) = (fixture("fib"), fixture("bin"), fixture("sier"));
    let runs: [Vec<&str>; 6] = [
        vec!["omega", "--config", &fib, "-k", "5"],
        vec!["tiles", "--config", &fib, "--theta", "2112"],
        vec!["addresses", "--config", &binc, "--theta", "2121"],
        vec!["dimension", "--config", &sier],
        vec!["render", "--config", &fib, "-k", "6"],
        vec![
            "render", "--config", &sier, "--kind", "chaos", "-n", "20000", "--seed", "99", "--width", "128",
            "--height", "128",
        ],
    ];
    let mut total = 0;
    for args in &runs {
        let a = Command::new(bin).args(args).output().map_err(|e| e.to_string())?;
        let b = Command::new(bin).args(args).output().map_err(|e| e.to_string())?;
        ensure(a.status.success() && b.status.success(), || {
            format!("{args:?}: {}", String::from_utf8_lossy(&a.stderr))
        })?;
        ensure(!a.stdout.is_empty() && a.stdout == b.stdout, || format!("{args:?}: output differs"))?;
        total += a.stdout.len();
    }
    Ok(format!("{} commands, {total} bytes identical across two runs", runs.len()))
}

fn main() -> ExitCode {
    let checks: [Check; 14] = [
        ("fib relative-address tables", fib_address_tables),
        ("fib letter strings", fib_letter_strings),
        ("level counts", level_counts),
        ("bin absolute addresses", bin_tile_addresses),
        ("nesting of blow-ups", nesting),
        ("blow-ups as moved canonical tilings", blow_ups_are_canonical),
        ("splitting and predecessor decomposition", splitting),
        ("inflation, deflation, hierarchy", inflation_and_hierarchy),
        ("bin equivalence witness", bin_equivalence),
        ("dimension", dimensions),
        ("chaos game", chaos_game_accuracy),
        ("rigidity heuristic", rigidity),
        ("patch counts", patch_counts),
        ("cli byte stability", cli_stability),
    ];
    let mut failed = 0;
    for (i, (name, check)) in checks.iter().enumerate() {
        let start = Instant::now();
        let outcome = check();
        let elapsed = start.elapsed();
        match outcome {
            Ok(note) => println!("PASS {:02} {name}: {note} [{elapsed:.2?}]", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {:02} {name}: {why} [{elapsed:.2?}]", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", checks.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
