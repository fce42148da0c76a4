//! Acceptance criteria, one line per criterion.
//!
//! Runs as a plain binary so the report is always printed. Ranks marked slow
//! run only with `--ignored` or `--include-ignored`, e.g.
//! `cargo test --release -p cellrook-cli --test acceptance -- --include-ignored`.

use std::collections::HashSet;
use std::process::{Command, ExitCode};
use std::time::Instant;

use cellrook::enumerate::{enumerate, Universe};
use cellrook::geometry::format;
use cellrook::rook::{self, class_count, square_complement, switching_polynomial};
use cellrook::{Cell, CellCollection, RookConfig};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

/// Tolerance for every criterion: none. Counts, coefficients and cell sets
/// must match exactly.
fn within(got: u64, want: u64) -> bool {
    got == want
}

const POLY_COUNTS: [(usize, usize); 9] =
    [(2, 1), (3, 2), (4, 5), (5, 12), (6, 35), (7, 108), (8, 369), (9, 1285), (10, 4655)];
const POLY_COUNTS_SLOW: [(usize, usize); 2] = [(11, 17073), (12, 63600)];
const COLLECTION_COUNTS: [(usize, usize); 7] =
    [(2, 2), (3, 5), (4, 22), (5, 94), (6, 524), (7, 3031), (8, 18770)];
const COLLECTION_COUNTS_SLOW: [(usize, usize); 2] = [(9, 118133), (10, 758381)];

const POLY_CORPUS: (usize, usize, usize) = (1, 8, 533);
const COLLECTION_CORPUS: (usize, usize, usize) = (2, 6, 647);

const RANDOM_SHAPES: usize = 200;
const RANDOM_MAX_RANK: usize = 8;
const RANDOM_SEED: u64 = 0x5eed;

type Outcome = Result<String, String>;
type Criterion<'a> = (&'static str, Box<dyn Fn() -> Outcome + 'a>);

fn cli_count(universe: &str, rank: usize) -> Result<usize, String> {
    let out = Command::new(env!("CARGO_BIN_EXE_cellrook"))
        .args(["enumerate", "--rank", &rank.to_string(), "--universe", universe, "--emit", "count"])
        .output()
        .map_err(|e| e.to_string())?;
    if !out.status.success() {
        return Err(format!("exit {:?}: {}", out.status.code(), String::from_utf8_lossy(&out.stderr)));
    }
    String::from_utf8_lossy(&out.stdout).trim().parse().map_err(|e| format!("bad count: {e}"))
}

fn counts(universe: &str, table: &[(usize, usize)]) -> Outcome {
    let mut got = Vec::new();
    for &(rank, want) in table {
        let n = cli_count(universe, rank)?;
        if !within(n as u64, want as u64) {
            return Err(format!("rank {rank}: {n}, expected {want}"));
        }
        got.push(n.to_string());
    }
    Ok(got.join(", "))
}

fn corpus(universe: Universe, (lo, hi, total): (usize, usize, usize)) -> Vec<CellCollection> {
    let shapes: Vec<CellCollection> =
        (lo..=hi).flat_map(|n| enumerate(universe, n).expect("rank in range")).collect();
    assert_eq!(shapes.len(), total, "{universe:?} corpus size");
    shapes
}

fn palindromic_iff_stable(polys: &[CellCollection], colls: &[CellCollection]) -> Outcome {
    let mut stable = 0;
    for p in polys.iter().chain(colls) {
        let palindromic = switching_polynomial(p).is_palindromic();
        let domino = p.is_domino_stable();
        if palindromic != domino {
            return Err(format!("palindromic={palindromic} domino_stable={domino}\n{}", format::to_grid(p)));
        }
        stable += domino as usize;
    }
    Ok(format!("{} shapes, {stable} domino-stable, 0 exceptions", polys.len() + colls.len()))
}

fn binom(n: u64, k: u64) -> u64 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

fn rectangle_formula() -> Outcome {
    let mut checked = 0;
    for m in 1..=5i32 {
        for n in 1..=5i32 {
            let p = CellCollection::new((1..=m).flat_map(|x| (1..=n).map(move |y| Cell::new(x, y)))).unwrap();
            for k in 0..=m.min(n) as u64 {
                let got = class_count(&p, k as usize).map_err(|e| e.to_string())? as u64;
                let want = binom(m as u64, k) * binom(n as u64, k);
                if !within(got, want) {
                    return Err(format!("{m}x{n}, k={k}: {got}, expected {want}"));
                }
                checked += 1;
            }
        }
    }
    Ok(format!("{checked} (m, n, k) triples"))
}

fn stable_structure(polys: &[CellCollection]) -> Outcome {
    let mut seen = 0;
    for p in polys.iter().filter(|p| p.is_domino_stable()) {
        let d = rook::rook_number(p);
        let classes = class_count(p, d).map_err(|e| e.to_string())?;
        let sides: usize = p.stable_squares().iter().map(|s| s.gluing.as_ref().map_or(0, |g| g.width())).sum();
        if classes != 1 || sides != d {
            return Err(format!("{classes} top classes, side sum {sides}, rook number {d}\n{}", format::to_grid(p)));
        }
        seen += 1;
    }
    Ok(format!("{seen} domino-stable polyominoes"))
}

fn strict_inequality(polys: &[CellCollection], colls: &[CellCollection]) -> Outcome {
    let mut seen = 0;
    for p in polys.iter().chain(colls) {
        let poly = switching_polynomial(p);
        if poly.leading() != 1 || p.is_domino_stable() {
            continue;
        }
        let d = poly.degree();
        if poly.coeff(1) >= poly.coeff(d - 1) {
            return Err(format!("{poly}\n{}", format::to_grid(p)));
        }
        seen += 1;
    }
    Ok(format!("{seen} shapes with a single top class, not domino-stable"))
}

fn complement_example() -> Outcome {
    let f: RookConfig = [(1, 2), (6, 4), (7, 6)].into_iter().map(Cell::from).collect();
    let want: RookConfig = [(2, 1), (3, 3), (4, 5), (5, 7), (8, 8)].into_iter().map(Cell::from).collect();
    let got = square_complement(8, &f).map_err(|e| e.to_string())?;
    if got == want {
        Ok(format!("{f} -> {got}"))
    } else {
        Err(format!("{f} -> {got}, expected {want}"))
    }
}

/// Largest non-attacking subset by exhaustive search; attacks walk the gap-free segment.
fn brute_rook_number(cells: &[(i32, i32)]) -> usize {
    let set: HashSet<(i32, i32)> = cells.iter().copied().collect();
    let attack = |a: (i32, i32), b: (i32, i32)| {
        if a.1 == b.1 {
            (a.0.min(b.0)..=a.0.max(b.0)).all(|x| set.contains(&(x, a.1)))
        } else if a.0 == b.0 {
            (a.1.min(b.1)..=a.1.max(b.1)).all(|y| set.contains(&(a.0, y)))
        } else {
            false
        }
    };
    let n = cells.len();
    (0u32..1 << n)
        .filter(|mask| {
            let chosen: Vec<_> = (0..n).filter(|i| mask >> i & 1 == 1).map(|i| cells[i]).collect();
            chosen.iter().enumerate().all(|(i, &a)| chosen[i + 1..].iter().all(|&b| !attack(a, b)))
        })
        .map(|mask| mask.count_ones() as usize)
        .max()
        .unwrap_or(0)
}

fn oracle_agreement() -> Outcome {
    let mut rng = StdRng::seed_from_u64(RANDOM_SEED);
    for _ in 0..RANDOM_SHAPES {
        let k = rng.gen_range(1..=RANDOM_MAX_RANK);
        let p = CellCollection::new((0..k).map(|_| Cell::new(rng.gen_range(1..=5), rng.gen_range(1..=5)))).unwrap();
        let cells: Vec<_> = p.cells().iter().map(|c| (c.x, c.y)).collect();
        let (got, want) = (rook::rook_number(&p), brute_rook_number(&cells));
        if !within(got as u64, want as u64) {
            return Err(format!("matching {got}, brute force {want}\n{}", format::to_grid(&p)));
        }
    }
    Ok(format!("{RANDOM_SHAPES} random shapes, seed {RANDOM_SEED:#x}"))
}

fn main() -> ExitCode {
    let args: Vec<String> = std::env::args().collect();
    if args.iter().any(|a| a == "--list") {
        println!("acceptance: test");
        return ExitCode::SUCCESS;
    }
    let slow = args.iter().any(|a| a == "--ignored" || a == "--include-ignored");

    let polys = corpus(Universe::Polyomino, POLY_CORPUS);
    let colls = corpus(Universe::Collection, COLLECTION_CORPUS);

    let mut criteria: Vec<Criterion> = vec![
        ("1 polyomino counts, ranks 2-10", Box::new(|| counts("poly", &POLY_COUNTS))),
        ("2 weakly connected collection counts, ranks 2-8", Box::new(|| counts("collection", &COLLECTION_COUNTS))),
        ("3 palindromic iff domino-stable over both corpora", Box::new(|| palindromic_iff_stable(&polys, &colls))),
        ("4 rectangle class counts C(m,k)C(n,k), m,n <= 5", Box::new(rectangle_formula)),
        ("5 domino-stable: one top class, rook number = sum of square sides", Box::new(|| stable_structure(&polys))),
        ("6 single top class, not domino-stable: r~1 < r~(d-1)", Box::new(|| strict_inequality(&polys, &colls))),
        ("7 complement on the 8x8 board", Box::new(complement_example)),
        ("8 matching rook number equals brute force", Box::new(oracle_agreement)),
    ];
    if slow {
        criteria.push(("1s polyomino counts, ranks 11-12 (slow)", Box::new(|| counts("poly", &POLY_COUNTS_SLOW))));
        criteria.push((
            "2s weakly connected collection counts, ranks 9-10 (slow)",
            Box::new(|| counts("collection", &COLLECTION_COUNTS_SLOW)),
        ));
    }

    let mut failed = 0;
    for (name, run) in &criteria {
        let start = Instant::now();
        let outcome = run();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS  criterion {name}: {detail} ({secs:.2}s)"),
            Err(why) => {
                failed += 1;
                println!("FAIL  criterion {name}: {why} ({secs:.2}s)");
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
