//! Acceptance suite. One PASS/FAIL line per criterion; exits nonzero if any fails.
//! Run with `cargo test -p gonal-cli --test acceptance`.

use gonal_cli::run;
use gonal_core::hirzebruch::{arithmetic_genus, DivisorClass};
use gonal_core::invariants::{a_min, delta, enumerate_admissible, lambda_max};
use gonal_core::nodecurve::{build_node_plan, keylemma_rank_check, rank_experiment, rank_experiment_tpos, tpos_basis, CurveFile};
use gonal_core::rng::derive_seed;
use gonal_core::scroll::deg_min_surface;
use gonal_core::strata::{dim_m_lambda, dim_m_lambda_t, dim_w_lambda, generic_maximality_violations, theta_fiber_dim};
use std::collections::BTreeSet;
use std::path::Path;
use std::time::{Duration, Instant};

const P: u64 = 10007;
const SEED: u64 = 1;
const TRIALS: usize = 200;
const MIN_PASS_RATE: f64 = 0.95;
const MAX_RETRIES: usize = 16;
const GENUS_RANGE: std::ops::RangeInclusive<i64> = 10..=60;
const RANK_MAX_GENUS: i64 = 24;
const BOUNDARY_MAX_GENUS: i64 = 200;

const LIMIT_1: Duration = Duration::from_secs(1);
const LIMIT_2: Duration = Duration::from_secs(5);
const LIMIT_3: Duration = Duration::from_secs(60);
const LIMIT_4: Duration = Duration::from_secs(120);
const LIMIT_5: Duration = Duration::from_secs(10);
const LIMIT_7: Duration = Duration::from_secs(60);

const FIXTURES: [(i64, i64, i64, i64); 7] =
    [(10, 5, 1, 3), (10, 5, 2, 2), (12, 6, 2, 3), (12, 6, 3, 3), (12, 6, 1, 4), (13, 6, 3, 3), (14, 6, 3, 4)];

struct Verdict {
    ok: bool,
    detail: String,
}

fn admissible_lambdas(g: i64, t: i64) -> Vec<i64> {
    let set: BTreeSet<i64> = enumerate_admissible(g, t).unwrap().iter().map(|x| x.lambda).collect();
    set.into_iter().collect()
}

fn formula_identities() -> Verdict {
    let mut bad = Vec::new();
    let mut n = 0;
    for g in GENUS_RANGE {
        for t in 0..=(g + 3) / 6 {
            for lambda in admissible_lambdas(g, t) {
                n += 1;
                let d = delta(g, lambda, t);
                let pa = arithmetic_genus(&DivisorClass::gonal(lambda, t)).unwrap();
                if pa != g + d {
                    bad.push(format!("p_a at ({g},{t},{lambda}) = {pa}"));
                }
                if deg_min_surface(g, lambda, t) != 4 * (lambda - t - 2) - d {
                    bad.push(format!("deg_min_surface at ({g},{t},{lambda})"));
                }
                let (w, th, m) = if t == 0 {
                    (dim_w_lambda(g, lambda), theta_fiber_dim(g, lambda), dim_m_lambda(g, lambda))
                } else {
                    let (w, m) = dim_m_lambda_t(g, lambda, t).unwrap();
                    (w, t + 5, m)
                };
                if w - th != m {
                    bad.push(format!("dim_W - theta != dim_M at ({g},{t},{lambda})"));
                }
            }
        }
        if dim_m_lambda(g, lambda_max(g)) != 2 * g + 3 {
            bad.push(format!("top stratum at g = {g}"));
        }
    }
    Verdict { ok: bad.is_empty(), detail: format!("{n} (g,t,lambda) cases; mismatches {bad:?}") }
}

fn generic_maximality() -> Verdict {
    let mut bad = Vec::new();
    for g in GENUS_RANGE {
        bad.extend(generic_maximality_violations(g).unwrap());
    }
    Verdict { ok: bad.is_empty(), detail: format!("g in {GENUS_RANGE:?}; violations {bad:?}") }
}

fn keylemma_rank() -> Verdict {
    let mut worst: Option<(f64, (i64, i64, i64, i64))> = None;
    let mut bad = Vec::new();
    let mut n = 0;
    for g in 10..=RANK_MAX_GENUS {
        for tup in enumerate_admissible(g, 0).unwrap() {
            n += 1;
            let e = rank_experiment(g, tup.lambda, tup.a, tup.b, P, SEED, TRIALS).unwrap();
            let key = (g, tup.lambda, tup.a, tup.b);
            if worst.map_or(true, |(r, _)| e.pass_rate < r) {
                worst = Some((e.pass_rate, key));
            }
            if e.pass_rate < MIN_PASS_RATE {
                bad.push(format!("{key:?} pass rate {}", e.pass_rate));
            }
            for (s, _) in &e.failures {
                let plan = build_node_plan(g, tup.lambda, tup.a, tup.b, P, derive_seed(*s, &[1])).unwrap();
                if !keylemma_rank_check(&plan).unwrap().pass {
                    bad.push(format!("{key:?} seed {s}: failure persists on retry"));
                }
            }
        }
    }
    Verdict {
        ok: bad.is_empty(),
        detail: format!("{n} tuples x {TRIALS} plans; lowest pass rate {worst:?}; {bad:?}"),
    }
}

fn cli(args: &[&str]) -> gonal_cli::Outcome {
    run(std::iter::once("gonal").chain(args.iter().copied()))
}

fn construct_path(dir: &Path, (g, l, a, b): (i64, i64, i64, i64)) -> std::path::PathBuf {
    dir.join(format!("curve_{g}_{l}_{a}_{b}.json"))
}

fn existence(dir: &Path) -> Verdict {
    let mut bad = Vec::new();
    let mut attempts = Vec::new();
    for fx in FIXTURES {
        let (g, l, a, b) = fx;
        let out = construct_path(dir, fx);
        let o = cli(&[
            "--seed", &SEED.to_string(), "construct", &g.to_string(), &l.to_string(), &a.to_string(), &b.to_string(),
            "--p", &P.to_string(), "--max-retries", &MAX_RETRIES.to_string(), "--out", out.to_str().unwrap(),
        ]);
        if o.code != 0 {
            bad.push(format!("{fx:?}: exit {} {}", o.code, o.stderr.trim()));
            continue;
        }
        let f = CurveFile::from_json(&std::fs::read_to_string(&out).unwrap()).unwrap();
        let c = &f.certificates;
        let d = delta(g, l, 0) as usize;
        let irreducible = matches!(serde_json::to_value(c.irreducibility.tag).unwrap().as_str(), Some("certified" | "certified-by-fallback"));
        let ok = f.nodes.len() == d
            && c.singular_sweep.pass
            && c.singular_sweep.extra_singular.is_empty()
            && irreducible
            && 3 * (l - 1) - d as i64 == g
            && c.genus == g
            && (c.recovered_scroll[0], c.recovered_scroll[1]) == (a, b)
            && c.attempts <= MAX_RETRIES;
        attempts.push(c.attempts);
        if !ok {
            bad.push(format!("{fx:?}: incomplete certificate"));
        }
    }
    Verdict { ok: bad.is_empty(), detail: format!("{} fixtures, samples used {attempts:?}; {bad:?}", FIXTURES.len()) }
}

fn round_trip(dir: &Path) -> Verdict {
    let mut bad = Vec::new();
    for fx in FIXTURES {
        let path = construct_path(dir, fx);
        let Ok(text) = std::fs::read_to_string(&path) else {
            bad.push(format!("{fx:?}: no file"));
            continue;
        };
        let o = cli(&["verify", path.to_str().unwrap()]);
        if o.code != 0 {
            bad.push(format!("{fx:?}: verify exit {}", o.code));
        }
        let mut f = CurveFile::from_json(&text).unwrap();
        let x: u64 = f.coeffs[1][1].parse().unwrap();
        f.coeffs[1][1] = ((x + 1) % P).to_string();
        let bad_path = path.with_extension("perturbed.json");
        std::fs::write(&bad_path, f.to_json()).unwrap();
        let o = cli(&["verify", bad_path.to_str().unwrap()]);
        if o.code == 0 {
            bad.push(format!("{fx:?}: perturbed file still verifies"));
        }
    }
    Verdict { ok: bad.is_empty(), detail: format!("{} files, each also perturbed; {bad:?}", FIXTURES.len()) }
}

fn fibre_tables() -> Verdict {
    let o = cli(&["fibers", "--level", "1"]);
    let v: serde_json::Value = serde_json::from_str(&o.stdout).unwrap();
    let rows = v["results"].as_array().unwrap();
    let nodes: Vec<&str> = rows
        .iter()
        .filter(|r| r["singularities"][0]["family"] == "node")
        .map(|r| r["pattern"]["case"].as_str().unwrap())
        .collect();
    let cusps: Vec<&str> = rows
        .iter()
        .filter(|r| r["singularities"][0]["family"] == "cusp")
        .map(|r| r["pattern"]["case"].as_str().unwrap())
        .collect();
    let level1 = o.code == 0 && rows.len() == 7 && nodes == ["a", "c", "e", "g"] && cusps == ["b", "d", "f"];

    let o = cli(&["fibers", "--level", "2"]);
    let v: serde_json::Value = serde_json::from_str(&o.stdout).unwrap();
    let sets = |kind: &str| -> BTreeSet<Vec<String>> {
        v["results"]
            .as_array()
            .unwrap()
            .iter()
            .filter(|r| r["fiber"]["kind"] == kind)
            .map(|r| {
                let mut s: Vec<String> = r["singularities"]
                    .as_array()
                    .unwrap()
                    .iter()
                    .map(|x| format!("{} {} {}", x["attitude"].as_str().unwrap(), x["family"].as_str().unwrap(), x["kind"]))
                    .collect();
                s.sort();
                s
            })
            .collect()
    };
    let want_a: BTreeSet<Vec<String>> = [
        vec!["transversal node 2"],
        vec!["transversal cusp 2"],
        vec!["transversal node 1", "transversal node 1"],
        vec!["transversal cusp 1", "transversal node 1"],
        vec!["transversal cusp 1", "transversal cusp 1"],
    ]
    .iter()
    .map(|r| r.iter().map(|s| s.to_string()).collect())
    .collect();
    let want_d: BTreeSet<Vec<String>> =
        [vec!["tangential node 2".to_string()], vec!["tangential cusp 2".to_string()]].into_iter().collect();
    let (got_a, got_d) = (sets("FnA"), sets("FnD"));
    let level2 = got_a == want_a && got_d == want_d;
    let script = cli(&["fibers", "--script", "f,i"]);
    let d2 = script.code == 0 && script.stdout.contains("\"F2(D)\"");
    Verdict {
        ok: level1 && level2 && d2,
        detail: format!("level 1 nodes {nodes:?} cusps {cusps:?}; level 2 F2(A) {} rows, F2(D) {} rows; script f,i -> F2(D) {d2}", got_a.len(), got_d.len()),
    }
}

fn tpos_rank() -> Verdict {
    let mut bad = Vec::new();
    let mut n = 0;
    let mut worst = 1.0f64;
    for g in 10..=RANK_MAX_GENUS {
        for t in 1..=(g + 3) / 6 {
            for lambda in admissible_lambdas(g, t) {
                if delta(g, lambda, t) < 1 {
                    continue;
                }
                n += 1;
                if tpos_basis(lambda, t).len() as i64 != 5 * (lambda - t) + 5 {
                    bad.push(format!("basis size at ({g},{t},{lambda})"));
                }
                let e = rank_experiment_tpos(g, lambda, t, P, SEED, TRIALS).unwrap();
                worst = worst.min(e.pass_rate);
                if e.pass_rate < MIN_PASS_RATE {
                    bad.push(format!("({g},{t},{lambda}) pass rate {}", e.pass_rate));
                }
            }
        }
    }
    Verdict { ok: n > 0 && bad.is_empty(), detail: format!("{n} (g,t,lambda) cases with delta >= 1; lowest pass rate {worst}; {bad:?}") }
}

fn boundary_agreement() -> Verdict {
    let mut n = 0;
    let mut bad = Vec::new();
    for g in 10..=BOUNDARY_MAX_GENUS {
        for t in 0..=(g + 3) / 6 {
            let num = 2 * g + 3 * t + 6;
            if num % 5 != 0 {
                continue;
            }
            let lambda = num / 5;
            n += 1;
            let slope_branch = (lambda - t - 4 + 1).div_euclid(2);
            let genus_branch = g - 2 * lambda + t + 1;
            if slope_branch != genus_branch || a_min(g, lambda, t) != genus_branch {
                bad.push((g, t, lambda));
            }
        }
    }
    Verdict { ok: n > 0 && bad.is_empty(), detail: format!("{n} boundary solutions with g <= {BOUNDARY_MAX_GENUS}; disagreements {bad:?}") }
}

fn main() {
    let dir = tempfile::tempdir().unwrap();
    let criteria: Vec<(&str, Option<Duration>, Box<dyn Fn() -> Verdict + '_>)> = vec![
        ("1 formula identities", Some(LIMIT_1), Box::new(formula_identities)),
        ("2 generic-stratum maximality", Some(LIMIT_2), Box::new(generic_maximality)),
        ("3 node-condition rank, t = 0", Some(LIMIT_3), Box::new(keylemma_rank)),
        ("4 existence construction", Some(LIMIT_4), Box::new(|| existence(dir.path()))),
        ("5 verify round trip", Some(LIMIT_5), Box::new(|| round_trip(dir.path()))),
        ("6 fibre tables", None, Box::new(fibre_tables)),
        ("7 node-condition rank, t >= 1", Some(LIMIT_7), Box::new(tpos_rank)),
        ("8 a_min boundary agreement", None, Box::new(boundary_agreement)),
    ];
    let mut failed = 0;
    for (name, limit, f) in criteria {
        let start = Instant::now();
        let v = f();
        let took = start.elapsed();
        let in_time = limit.map_or(true, |l| took <= l);
        let ok = v.ok && in_time;
        if !ok {
            failed += 1;
        }
        let limit_text = limit.map_or("no limit".to_string(), |l| format!("limit {l:?}"));
        println!("{} criterion {name}: {} [{:.3?}, {limit_text}]", if ok { "PASS" } else { "FAIL" }, v.detail, took);
    }
    println!("acceptance: {} of 8 criteria passed", 8 - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
