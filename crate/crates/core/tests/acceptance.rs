//! One PASS/FAIL line per acceptance criterion; exits nonzero if any fails.

mod common;

use std::fs;
use std::process::Command;
use std::time::Instant;

use flipcss::analytics::{case_code, gcd, predict, scan_fixed_n, CaseLabel, ScanRow};
use flipcss::codes::{random_ldpc, repetition_code};
use flipcss::construct::{assemble, classify, hgp_reference, validate_css, ConstructionSpec};
use flipcss::metrics::{
    compute_k, compute_metrics, distance_estimate, distance_exact, MetricsOptions, DEFAULT_BUDGET,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use common::{random_codes, random_legal_spec};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn check(ok: bool, detail: String) -> Outcome {
    if ok {
        Ok(detail)
    } else {
        Err(detail)
    }
}

fn css_theorem() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let mut failures = Vec::new();
    let mut per_d = [0usize; 3];
    for i in 0..1200 {
        let d = [2, 3, 4][i % 3];
        // every sector stays within 12 x 12; larger D uses smaller sectors
        let max_dim = [12, 7, 4][i % 3];
        let spec = random_legal_spec(&mut rng, d);
        let codes = random_codes(&mut rng, d, max_dim);
        let code = assemble(&spec, &codes).map_err(|e| e.to_string())?;
        per_d[i % 3] += 1;
        if !validate_css(&code) {
            failures.push(format!("{spec}"));
        }
    }
    check(
        failures.is_empty(),
        format!(
            "{} legal specs (D=2/3/4: {:?}), violations: {:?}",
            per_d.iter().sum::<usize>(),
            per_d,
            failures
        ),
    )
}

fn hgp_reduction() -> Outcome {
    let spec = ConstructionSpec::parse(2, "BC", "1").unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut pairs = Vec::new();
    for _ in 0..20 {
        let mut code = || {
            let (r, c) = (rng.gen_range(1..=8), rng.gen_range(2..=10));
            random_ldpc(r, c, rng.gen_range(1..=c.min(4)), rng.gen()).unwrap()
        };
        pairs.push((code(), code()));
    }
    for l1 in 2..=6 {
        for l2 in 2..=6 {
            pairs.push((repetition_code(l1).unwrap(), repetition_code(l2).unwrap()));
        }
    }
    let mismatched = pairs
        .iter()
        .filter(|(a, b)| {
            let code = assemble(&spec, &[a.clone(), b.clone()]).unwrap();
            (code.hx, code.hz) != hgp_reference(a, b)
        })
        .count();
    check(
        mismatched == 0,
        format!(
            "{} pairs (20 random, 25 repetition), {mismatched} mismatches",
            pairs.len()
        ),
    )
}

fn census() -> Outcome {
    let t = Instant::now();
    let classes = classify(3).map_err(|e| e.to_string())?;
    let elapsed = t.elapsed();
    let mut members: Vec<usize> = classes.iter().map(|c| c.members).collect();
    let listed = members.clone();
    members.sort_unstable();
    check(
        members == [3, 3, 4, 4] && elapsed.as_secs_f64() < 1.0,
        format!(
            "{} classes, members {listed:?}, {elapsed:.2?}",
            classes.len()
        ),
    )
}

fn k_grid() -> Outcome {
    let mut bad = Vec::new();
    let mut count = 0;
    for case in [CaseLabel::A, CaseLabel::B, CaseLabel::D] {
        for l1 in 1..=6 {
            for l2 in 1..=6 {
                for l3 in 1..=6 {
                    let l = [l1, l2, l3];
                    let k = compute_k(&case_code(case, l).unwrap());
                    let p = predict(case, l).unwrap().k.unwrap();
                    count += 1;
                    if k != p {
                        bad.push(format!("{case}{l:?}: {k} vs {p}"));
                    }
                }
            }
        }
    }
    check(
        bad.is_empty(),
        format!("{count} (case, L) pairs, mismatches: {bad:?}"),
    )
}

fn small_distances() -> Outcome {
    let mut bad = Vec::new();
    let mut count = 0;
    for case in CaseLabel::ALL {
        for mask in 0..8 {
            let l = [0, 1, 2].map(|s| 2 + (mask >> s & 1));
            let code = case_code(case, l).unwrap();
            let exact =
                distance_exact(&code, DEFAULT_BUDGET).map_err(|e| format!("{case}{l:?}: {e}"))?;
            let est = distance_estimate(&code, 10_000, 1).unwrap();
            // for case C this is min(L1, L2, L3, beta)
            let p = predict(case, l).unwrap();
            count += 1;
            if exact.d != p.d || est.d != exact.d {
                bad.push(format!(
                    "{case}{l:?}: exact {} estimate {} closed form {}",
                    exact.d, est.d, p.d
                ));
            }
        }
    }
    check(
        bad.is_empty(),
        format!("{count} instances, exact = closed form = estimate; mismatches: {bad:?}"),
    )
}

fn has_row(rows: &[ScanRow], cases: &[CaseLabel], ls: &[[usize; 3]], k: usize, d: usize) -> bool {
    rows.iter()
        .any(|r| cases.contains(&r.case) && ls.contains(&r.l) && r.k == k && r.d == Some(d))
}

fn fixed_n_scan() -> Outcome {
    use CaseLabel::{B, D};
    let opts = MetricsOptions {
        trials: 5000,
        seed: 1,
        ..MetricsOptions::default()
    };
    let r144 = scan_fixed_n(144, &CaseLabel::ALL, &opts).map_err(|e| e.to_string())?;
    let r432 = scan_fixed_n(432, &CaseLabel::ALL, &opts).map_err(|e| e.to_string())?;
    let found = [
        has_row(&r144, &[B, D], &[[1, 6, 6], [2, 3, 6]], 4, 6),
        has_row(&r144, &[D], &[[3, 3, 4]], 36, 4),
        has_row(&r432, &[B, D], &[[2, 6, 9]], 8, 9),
        has_row(&r432, &[D], &[[3, 3, 12]], 100, 6),
    ];
    check(
        found.iter().all(|&f| f),
        format!(
            "n=144: {} rows, n=432: {} rows; targets (1,6,6)|(2,3,6) k=4 d=6, (3,3,4) k=36 d=4, (2,6,9) k=8 d=9, (3,3,12) k=100 d=6 found: {found:?}",
            r144.len(),
            r432.len()
        ),
    )
}

fn case_c_bound() -> Outcome {
    let opts = MetricsOptions {
        trials: 5000,
        seed: 1,
        ..MetricsOptions::default()
    };
    let measure = |l: [usize; 3]| {
        compute_metrics(&case_code(CaseLabel::C, l).unwrap(), &opts)
            .unwrap()
            .d
            .unwrap()
    };
    let mut bad = Vec::new();
    let mut shared = 0;
    for l1 in 2..=5 {
        for l2 in 2..=5 {
            for l3 in 2..=5 {
                let l = [l1, l2, l3];
                let d = measure(l);
                let shares = gcd(l1, l2) > 1 || gcd(l1, l3) > 1 || gcd(l2, l3) > 1;
                shared += shares as usize;
                if d > 5 || (shares && d > 4) {
                    bad.push(format!("{l:?}: d={d}"));
                }
            }
        }
    }
    // no triple in 2..=5 is pairwise coprime with min >= 5; check the first one that is
    let d567 = measure([5, 6, 7]);
    if d567 != 5 {
        bad.push(format!("[5, 6, 7]: d={d567}"));
    }
    check(
        bad.is_empty(),
        format!("64 triples all d <= 5, {shared} with a shared divisor all d <= 4; (5,6,7) d={d567}; violations: {bad:?}"),
    )
}

fn row_weights() -> Outcome {
    let expected = |case| match case {
        CaseLabel::A => (6, 4),
        CaseLabel::B => (6, 6),
        _ => (14, 14),
    };
    let mut bad = Vec::new();
    let mut count = 0;
    for case in CaseLabel::ALL {
        for l1 in 2..=5 {
            for l2 in 2..=5 {
                for l3 in 2..=5 {
                    let code = case_code(case, [l1, l2, l3]).unwrap();
                    let (wz, wx) = expected(case);
                    count += 1;
                    let z_ok = (0..code.hz.rows()).all(|r| code.hz.row_weight(r) == wz);
                    let x_ok = (0..code.hx.rows()).all(|r| code.hx.row_weight(r) == wx);
                    if !(z_ok && x_ok) {
                        bad.push(format!("{case}[{l1},{l2},{l3}]"));
                    }
                }
            }
        }
    }
    check(
        bad.is_empty(),
        format!(
            "{count} codes with L_i in 2..=5 (Z/X: A 6/4, B 6/6, C,D 14/14); violations: {bad:?}"
        ),
    )
}

fn cli_reproducible() -> Outcome {
    let bin = env!("CARGO_BIN_EXE_flipcss");
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let out = dir.path().join("build");
    let out = out.to_str().unwrap();
    let commands: Vec<Vec<&str>> = vec![
        vec![
            "build", "--case", "D", "--rep", "2,3,3", "--format", "mtx", "--out", out,
        ],
        vec![
            "build",
            "--d",
            "2",
            "--seed-blocks",
            "BC",
            "--flips",
            "1",
            "--rep",
            "3,3",
            "--format",
            "alist",
            "--out",
            out,
        ],
        vec![
            "metrics", "--case", "C", "--rep", "3,3,4", "--budget", "0", "--trials", "300",
            "--seed", "5",
        ],
        vec![
            "metrics", "--case", "B", "--rep", "2,3,3", "--format", "csv",
        ],
        vec!["validate", "--case", "A", "--rep", "3,3,3"],
        vec!["scan", "--n", "48", "--trials", "200", "--seed", "3"],
        vec![
            "scan", "--n", "48", "--cases", "B,D", "--budget", "0", "--trials", "200", "--format",
            "csv",
        ],
        vec!["classify", "--d", "3"],
        vec!["classify", "--d", "4", "--format", "csv"],
        vec!["lattice", "--case", "C", "--rep", "2,3,2"],
    ];
    let snapshot = |args: &[&str]| -> Result<Vec<u8>, String> {
        let o = Command::new(bin)
            .args(args)
            .output()
            .map_err(|e| e.to_string())?;
        if !o.status.success() {
            return Err(format!("{args:?} exited with {:?}", o.status.code()));
        }
        let mut bytes = o.stdout;
        if args[0] == "build" {
            for name in ["hx.mtx", "hz.mtx", "hx.alist", "hz.alist", "layout.json"] {
                if let Ok(b) = fs::read(dir.path().join("build").join(name)) {
                    bytes.extend(b);
                }
            }
        }
        Ok(bytes)
    };
    let mut differing = Vec::new();
    for args in &commands {
        if snapshot(args)? != snapshot(args)? {
            differing.push(args.join(" "));
        }
    }
    check(
        differing.is_empty(),
        format!(
            "{} commands run twice, differing: {differing:?}",
            commands.len()
        ),
    )
}

fn main() {
    let criteria: [Criterion; 9] = [
        ("CSS theorem on random legal specs", css_theorem),
        ("D = 2 equals the hypergraph product", hgp_reduction),
        ("classification census of D = 3", census),
        ("k closed forms on the 1..=6 grid", k_grid),
        (
            "exact and estimated distance at L_i in {2,3}",
            small_distances,
        ),
        ("fixed-n scan optima at n = 144 and 432", fixed_n_scan),
        ("case C distance bound", case_c_bound),
        ("check weights", row_weights),
        ("byte-identical CLI reruns", cli_reproducible),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let outcome = std::panic::catch_unwind(run).unwrap_or_else(|_| Err("panicked".into()));
        let (tag, detail) = match outcome {
            Ok(d) => ("PASS", d),
            Err(d) => {
                failed += 1;
                ("FAIL", d)
            }
        };
        println!(
            "criterion {} {tag}: {name}: {detail} [{:.1?}]",
            i + 1,
            t.elapsed()
        );
    }
    println!(
        "acceptance: {} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
