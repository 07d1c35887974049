//! Acceptance suite. Run with `cargo test -p noncrossing --test acceptance`;
//! prints one PASS/FAIL line per criterion and exits nonzero on any failure.

use std::collections::{HashMap, HashSet};
use std::f64::consts::PI;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use noncrossing::encoding::{decode, encode, encode_pair, pair_to_ncp};
use noncrossing::enumerate::{catalan, enumerate_dyck, enumerate_ncp, enumerate_pair};
use noncrossing::experiment::{chi_square_quantile, convergence, uniformity, Sampler};
use noncrossing::growth::{apply_move, grow_ncp, uniform_pair_direct, GrowthMove, GrowthRng, Model, MoveKind};
use noncrossing::lamination::{fused_pair_lamination, hausdorff, lamination_of};
use noncrossing::moves::{insert_long_chord, insert_short_chord, insert_vertex, slice, slice_end};
use noncrossing::{Frame, NoncrossingPartition};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(limit: Duration, start: Instant) -> Result<(), String> {
    let spent = start.elapsed();
    ensure(spent < limit, || format!("took {spent:.2?}, limit {limit:.0?}"))
}

fn counting() -> Outcome {
    let start = Instant::now();
    for n in 1..=8 {
        let c = catalan(n as u64);
        let ncp = enumerate_ncp(n).map_err(|e| e.to_string())?.len() as u128;
        let dyck = enumerate_dyck(2 * n).map_err(|e| e.to_string())?.len() as u128;
        ensure(ncp == c && dyck == c, || format!("n={n}: ncp {ncp}, dyck {dyck}, catalan {c}"))?;
    }
    for n in 1..=6 {
        let pair = enumerate_pair(2 * n).map_err(|e| e.to_string())?.len() as u128;
        ensure(pair == catalan(n as u64), || format!("2n={}: {pair} pair partitions", 2 * n))?;
    }
    ensure(catalan(8) == 1430, || format!("C_8 = {}", catalan(8)))?;
    within(Duration::from_secs(60), start)?;
    Ok("n <= 8 (pairs 2n <= 12), C_8 = 1430".into())
}

fn bijection() -> Outcome {
    for n in 1..=8 {
        let table = enumerate_ncp(n).map_err(|e| e.to_string())?;
        let mut image = HashSet::new();
        for p in &table {
            let path = encode(p);
            let (first, second) = decode(&path);
            ensure(first == *p, || format!("decode(encode({p})) = {first}"))?;
            ensure(second == p.kreweras(), || format!("complement of {p}: decoded {second}, direct {}", p.kreweras()))?;
            image.insert(path);
        }
        let all: HashSet<_> = enumerate_dyck(2 * n).map_err(|e| e.to_string())?.iter().cloned().collect();
        ensure(image.len() == table.len() && image == all, || format!("n={n}: encode is not onto"))?;
    }
    Ok("exhaustive n <= 8".into())
}

fn involution() -> Outcome {
    for n in 1..=8 {
        for p in &enumerate_ncp(n).map_err(|e| e.to_string())? {
            ensure(p.kreweras().kreweras() == *p, || format!("K(K({p})) != {p}"))?;
            // reading each complement on even labels turns the frame back by π/n
            let relabeled = p.kreweras().with_frame(Frame::Even).kreweras().with_frame(Frame::Even).rotate(1);
            ensure(relabeled == *p, || format!("relabeled double complement of {p} is {relabeled}"))?;
        }
    }
    Ok("exhaustive n <= 8, both frame readings".into())
}

fn commutation() -> Outcome {
    let mut checked = 0usize;
    for n in 1..=6 {
        for p in &enumerate_ncp(n).map_err(|e| e.to_string())? {
            let path = encode(p);
            for k in 0..=2 * n {
                let inserted = insert_vertex(p, k).map_err(|e| e.to_string())?;
                ensure(encode(&inserted) == path.marchal_insert(k).unwrap(), || format!("insert {p} k={k}"))?;
                let sliced = slice(p, k).map_err(|e| e.to_string())?;
                ensure(encode(&sliced) == path.marchal_lift(k).unwrap(), || format!("slice {p} k={k}"))?;
                checked += 2;
            }
        }
    }
    for n in 1..=5 {
        for p in &enumerate_pair(2 * n).map_err(|e| e.to_string())? {
            let path = encode_pair(p).map_err(|e| e.to_string())?;
            for k in 0..=2 * n {
                let short = insert_short_chord(p, k).map_err(|e| e.to_string())?;
                ensure(encode_pair(&short).unwrap() == path.marchal_insert(k).unwrap(), || format!("short {p} k={k}"))?;
                let long = insert_long_chord(p, k).map_err(|e| e.to_string())?;
                ensure(encode_pair(&long).unwrap() == path.marchal_lift(k).unwrap(), || format!("long {p} k={k}"))?;
                checked += 2;
            }
        }
    }
    Ok(format!("{checked} moves, ncp n <= 6, pair 2n <= 10"))
}

fn end_identities() -> Outcome {
    let mut degenerate = 0usize;
    for n in 1..=6 {
        for p in &enumerate_ncp(n).map_err(|e| e.to_string())? {
            for k in 0..=2 * n {
                let l = slice_end(p, k).map_err(|e| e.to_string())?;
                ensure(l == encode(p).lift_end(k).unwrap(), || format!("{p} k={k}: l differs from path"))?;
                if l == k {
                    degenerate += 1;
                    ensure(slice(p, k).unwrap() == insert_vertex(p, k).unwrap(), || format!("{p} k={k}"))?;
                }
            }
            if n <= 5 {
                let top = 2 * n;
                let (i0, it) = (insert_vertex(p, 0).unwrap(), insert_vertex(p, top).unwrap());
                ensure(it.rotate(1) == i0, || format!("insert ends of {p}: {i0} vs {it}"))?;
                let (s0, st) = (slice(p, 0).unwrap(), slice(p, top).unwrap());
                // the even relabel of an odd-frame complement is a rotation by π/(n+1)
                let turned = s0.kreweras().with_frame(Frame::Even);
                ensure(turned == st, || format!("slice ends of {p}: {s0} vs {st}"))?;
            }
        }
    }
    Ok(format!("{degenerate} cases with l = k; end rotations n <= 5"))
}

fn one_step_counts(model: Model, n: usize) -> Result<HashMap<NoncrossingPartition, usize>, String> {
    let (sources, kinds) = match model {
        Model::Ncp => (enumerate_ncp(n), [MoveKind::InsertVertex, MoveKind::Slice]),
        Model::Pair => (enumerate_pair(2 * n), [MoveKind::ShortChord, MoveKind::LongChord]),
    };
    let mut counts = HashMap::new();
    for p in &sources.map_err(|e| e.to_string())? {
        let path = match model {
            Model::Ncp => encode(p),
            Model::Pair => encode_pair(p).map_err(|e| e.to_string())?,
        };
        for k in 0..=2 * n {
            for kind in kinds {
                let next = apply_move(&path, GrowthMove { kind, k }).map_err(|e| e.to_string())?;
                *counts.entry(model.decode(&next)).or_insert(0) += 1;
            }
        }
    }
    Ok(counts)
}

fn uniformity_criterion() -> Outcome {
    let mut notes = Vec::new();
    for (model, seed) in [(Model::Ncp, 2024), (Model::Pair, 2025)] {
        for n in 1..=4 {
            let counts = one_step_counts(model, n)?;
            let targets = catalan(n as u64 + 1) as usize;
            ensure(counts.len() == targets && counts.values().all(|&c| c == n + 2), || {
                format!("{} n={n}: {} targets, counts {:?}", model.name(), counts.len(), counts.values().collect::<HashSet<_>>())
            })?;
        }
        for sampler in [Sampler::Marchal, Sampler::Direct] {
            let start = Instant::now();
            let report = uniformity(model, sampler, 4, 100_000, seed).map_err(|e| e.to_string())?;
            within(Duration::from_secs(60), start)?;
            ensure(report.categories == 14, || format!("{} categories", report.categories))?;
            ensure((report.critical - chi_square_quantile(13, 0.999)).abs() < 1e-12, || "quantile".into())?;
            ensure(report.passes(), || {
                format!("{} {:?}: chi2 {:.3} >= {:.3}", model.name(), sampler, report.statistic, report.critical)
            })?;
            notes.push(format!("{}/{:?} chi2={:.2}", model.name(), sampler, report.statistic));
        }
    }
    Ok(format!("one-step exact n <= 4; {} < 34.528", notes.join(", ")))
}

fn fused_pair_bound() -> Outcome {
    const DELTA: f64 = 1e-3;
    let check = |p: &NoncrossingPartition| -> Result<f64, String> {
        let d = hausdorff(&lamination_of(p), &fused_pair_lamination(p).map_err(|e| e.to_string())?, DELTA)
            .map_err(|e| e.to_string())?;
        let bound = PI / p.n() as f64 + DELTA;
        ensure(d < bound, || format!("{p}: d_H={d} >= {bound}"))?;
        Ok(d / (PI / p.n() as f64))
    };
    let mut worst: f64 = 0.0;
    for n in 1..=6 {
        for p in &enumerate_pair(2 * n).map_err(|e| e.to_string())? {
            worst = worst.max(check(p)?);
        }
    }
    for size in [100, 1000] {
        for stream in 0..100 {
            let p = uniform_pair_direct(size / 2, &mut GrowthRng::split(55, stream)).into_inner();
            worst = worst.max(check(&p)?);
        }
    }
    Ok(format!("max d_H / (π/2n) = {worst:.6}"))
}

/// Medians measured on the first verified run (seeds 1..=20, δ = 1e-3).
const PINNED_MEDIANS: [f64; 4] = [0.40185102819370205, 0.325126724408472, 0.19384600453904824, 0.08533264803023871];

fn convergence_criterion() -> Outcome {
    let start = Instant::now();
    let seeds: Vec<u64> = (1..=20).collect();
    let sizes = [16, 64, 256, 1024];
    let report = convergence(Model::Ncp, &seeds, &sizes, 4096, 1e-3).map_err(|e| e.to_string())?;
    let medians = report.medians();
    within(Duration::from_secs(600), start)?;
    ensure(medians.windows(2).all(|w| w[1] < w[0]), || format!("medians not decreasing: {medians:?}"))?;
    for (m, pinned) in medians.iter().zip(PINNED_MEDIANS) {
        ensure(*m <= pinned * (1.0 + 1e-9), || format!("median {m} above pinned {pinned}"))?;
    }
    Ok(format!("medians {medians:?}"))
}

fn half_path() -> Outcome {
    for n in 1..=6 {
        for p in &enumerate_pair(2 * n).map_err(|e| e.to_string())? {
            let merged = pair_to_ncp(p).map_err(|e| e.to_string())?;
            ensure(encode(&merged) == encode_pair(p).unwrap(), || format!("{p} fuses to {merged}"))?;
        }
    }
    Ok("all pair partitions 2n <= 12".into())
}

fn performance() -> Outcome {
    let start = Instant::now();
    let (p, trajectory) = grow_ncp(50_000, &mut GrowthRng::new(10));
    let grown = start.elapsed();
    ensure(grown < Duration::from_secs(30), || format!("growth took {grown:.2?}"))?;
    let replayed = trajectory.replay_final().map_err(|e| e.to_string())?;
    ensure(replayed.to_string() == p.to_string(), || "replay differs from the grown partition".into())?;
    let reparsed: noncrossing::GrowthTrajectory = trajectory.to_string().parse().map_err(|e: noncrossing::Error| e.to_string())?;
    ensure(reparsed.replay_final().unwrap() == p, || "replay from text differs".into())?;
    Ok(format!("n = 50000 grown in {grown:.2?}, replay byte-identical"))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("counting", counting),
        ("bijection", bijection),
        ("kreweras involution", involution),
        ("move commutation", commutation),
        ("end identities", end_identities),
        ("growth uniformity", uniformity_criterion),
        ("fused pair distance bound", fused_pair_bound),
        ("coupled convergence", convergence_criterion),
        ("half-path identity", half_path),
        ("large growth and replay", performance),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let spent = start.elapsed();
        match outcome {
            Ok(detail) => println!("PASS {:>2} {name}: {detail} [{spent:.2?}]", i + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL {:>2} {name}: {detail} [{spent:.2?}]", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
