//! Acceptance criteria, one PASS/FAIL line each.

use std::process::{Command, Stdio};
use std::time::{Duration, Instant};

use flexgroup::classify::verify::{
    rank_tuples, verify_d2_case, verify_lemma_suite, verify_thm_1_flexible, verify_thm_2_flexible, Analysis,
    CheckRecord,
};
use flexgroup::flexibility::cycliciser_subgroup;
use flexgroup::group::iso::are_isomorphic;
use flexgroup::group::{elementary_abelian, quotient};
use flexgroup::subgroups::{center, join_elements, SubgroupSet};
use flexgroup::{
    constructive_affine_extension, min_generators, parse_group_spec, FiniteGroup, FlexEngine, FlexOptions,
    VerifyOptions,
};
use flexgroup_cli::catalog;
use rand::rngs::StdRng;
use rand::{RngExt, SeedableRng};

const RANK_BUDGET: Duration = Duration::from_secs(5);
const Q8_BUDGET: Duration = Duration::from_secs(1);
const THM1_BUDGET: Duration = Duration::from_secs(300);
const THM2_BUDGET: Duration = Duration::from_secs(600);
const D2_BUDGET: Duration = Duration::from_secs(120);
const LEMMA_BUDGET: Duration = Duration::from_secs(600);
const SWEEP_MAX_ORDER: usize = 128;
const RANDOM_EXTENSIONS: usize = 1000;
const EXTENSION_SEED: u64 = 20_241_015;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn catalog_groups() -> Vec<(String, FiniteGroup)> {
    catalog::select(Some(SWEEP_MAX_ORDER), &[]).expect("catalog builds").into_iter().map(|(e, g)| (e.name, g)).collect()
}

fn within(start: Instant, budget: Duration, what: &str) -> Result<(), String> {
    let t = start.elapsed();
    if t <= budget {
        Ok(())
    } else {
        Err(format!("{what} took {t:?}, budget {budget:?}"))
    }
}

fn disagreements(name: &str, recs: &[CheckRecord]) -> Vec<String> {
    recs.iter()
        .filter(|r| !r.agree)
        .map(|r| format!("{name}: {} expected {} observed {} ({})", r.name, r.expected, r.observed, r.details))
        .collect()
}

/// Closure by repeated multiplication, independent of the library.
fn generated_order(g: &FiniteGroup, seeds: &[usize]) -> usize {
    let mut s = vec![false; g.order()];
    s[g.identity()] = true;
    let mut frontier: Vec<usize> = seeds.to_vec();
    for &x in seeds {
        s[x] = true;
    }
    let mut all: Vec<usize> = (0..g.order()).filter(|&x| s[x]).collect();
    while let Some(x) = frontier.pop() {
        for y in all.clone() {
            for z in [g.mul(x, y), g.mul(y, x)] {
                if !s[z] {
                    s[z] = true;
                    all.push(z);
                    frontier.push(z);
                }
            }
        }
    }
    all.len()
}

fn is_prime(n: usize) -> bool {
    n >= 2 && (2..n).take_while(|q| q * q <= n).all(|q| !n.is_multiple_of(q))
}

fn criterion_1() -> Outcome {
    let mut cases: Vec<(String, usize)> = Vec::new();
    for p in (2..=31).filter(|&p| is_prime(p)) {
        cases.push((format!("C{p}"), 1));
    }
    for p in [2usize, 3, 5, 7] {
        let mut r = 1;
        while p.pow(r as u32) <= 81 {
            cases.push((format!("E({p},{r})"), r));
            r += 1;
        }
    }
    for (p, r, s) in [(3, 2, 2), (3, 3, 2), (5, 2, 4), (5, 2, 2)] {
        cases.push((format!("Aff({p},{r},{s})"), r + 1));
    }
    for (spec, want) in &cases {
        let start = Instant::now();
        let g = parse_group_spec(spec).map_err(|e| e.to_string())?;
        let got = min_generators(&g);
        if got.d != *want {
            return Err(format!("{spec}: d = {}, expected {want}", got.d));
        }
        if generated_order(&g, &got.witness) != g.order() {
            return Err(format!("{spec}: witness {:?} does not generate", got.witness));
        }
        within(start, RANK_BUDGET, spec)?;
    }
    Ok(format!("{} groups", cases.len()))
}

fn criterion_2() -> Outcome {
    let start = Instant::now();
    let g = parse_group_spec("Q8").unwrap();
    let e = FlexEngine::new(&g);
    let z = center(&g).members();
    let involution = z.iter().copied().find(|&x| x != g.identity()).unwrap();
    let v1 = e.verdict(1).unwrap();
    let v2 = e.verdict(2).unwrap();
    let cyc = cycliciser_subgroup(&g).unwrap();
    let (q, _) = quotient(&g, &cyc).unwrap();
    let checks = [
        ("d = 2", e.rank() == 2),
        ("not 1-flexible", !v1.flexible),
        ("counterexample is the central involution", v1.counterexample == Some(vec![involution])),
        ("the involution is -1", g.label(involution) == "-1" && z.len() == 2),
        ("2-flexible", v2.flexible),
        ("|Cyc| = 2", cyc.order() == 2),
        ("Q8/Cyc = 2^2", are_isomorphic(&q, &elementary_abelian(2, 2).unwrap()).unwrap()),
    ];
    for (what, ok) in checks {
        if !ok {
            return Err(what.to_string());
        }
    }
    within(start, Q8_BUDGET, "Q8")?;
    Ok("d=2, k1 false via -1, k2 true, Cyc order 2".into())
}

fn criterion_3() -> Outcome {
    let start = Instant::now();
    let opts = VerifyOptions::default();
    let mut bad = Vec::new();
    let mut n = 0;
    for (name, g) in catalog_groups().iter().filter(|(_, g)| g.order() > 1) {
        let a = Analysis::new(g, &opts.flex).unwrap();
        bad.extend(disagreements(name, &verify_thm_1_flexible(&a, &opts).unwrap()));
        n += 1;
    }
    within(start, THM1_BUDGET, "thm1 sweep")?;
    if bad.is_empty() {
        Ok(format!("{n} groups, 0 disagreements"))
    } else {
        Err(bad.join("; "))
    }
}

fn criterion_4() -> Outcome {
    let start = Instant::now();
    let positives = ["E(2,3)", "E(2,4)", "E(3,3)", "Aff(3,2,2)", "Aff(3,3,2)", "Aff(5,2,4)"];
    let negatives = ["E(2,2)xC4", "C2xC4xC2"];
    let mut bad = Vec::new();
    let mut seen = Vec::new();
    for (name, g) in catalog_groups() {
        let a = Analysis::new(&g, &FlexOptions::default()).unwrap();
        if a.d() < 3 {
            continue;
        }
        let recs = verify_thm_2_flexible(&a).unwrap();
        bad.extend(disagreements(&name, &recs));
        let two = a.verdict(2).flexible;
        if positives.contains(&name.as_str()) && !two {
            bad.push(format!("{name} should be 2-flexible"));
        }
        if negatives.contains(&name.as_str()) && two {
            bad.push(format!("{name} should not be 2-flexible"));
        }
        seen.push(name);
    }
    for want in positives.iter().chain(&negatives) {
        if !seen.iter().any(|s| s == want) {
            bad.push(format!("{want} missing from the d >= 3 sweep"));
        }
    }
    within(start, THM2_BUDGET, "thm2 sweep")?;
    if bad.is_empty() {
        Ok(format!("{} groups with d >= 3", seen.len()))
    } else {
        Err(bad.join("; "))
    }
}

fn criterion_5() -> Outcome {
    let start = Instant::now();
    let mut bad = Vec::new();
    let mut n = 0;
    let mut central_checked = false;
    for (name, g) in catalog_groups() {
        let a = Analysis::new(&g, &FlexOptions::default()).unwrap();
        if a.d() != 2 {
            continue;
        }
        n += 1;
        let recs = verify_d2_case(&a).unwrap();
        bad.extend(disagreements(&name, &recs));
        if name == "MM(5,2,2,4)" {
            central_checked = recs.iter().any(|r| r.name.contains("central b^q") && r.agree);
        }
    }
    if !central_checked {
        bad.push("MM(5,2,2,4) central b^q check missing".into());
    }
    within(start, D2_BUDGET, "d2 sweep")?;
    if bad.is_empty() {
        Ok(format!("{n} groups with d = 2"))
    } else {
        Err(bad.join("; "))
    }
}

fn criterion_6() -> Outcome {
    let start = Instant::now();
    let opts = VerifyOptions::default();
    let mut bad = Vec::new();
    let mut applicable = 0;
    for (name, g) in catalog_groups() {
        let a = Analysis::new(&g, &opts.flex).unwrap();
        let recs = verify_lemma_suite(&a, &opts).unwrap();
        bad.extend(disagreements(&name, &recs));
        applicable += recs.iter().filter(|r| r.is_applicable()).count();
        let triple = recs.iter().find(|r| r.name.starts_with("triple-cyclic")).unwrap();
        let want = if g.order() <= 24 { "exhaustive" } else { "10000 random" };
        if !triple.details.starts_with(want) {
            bad.push(format!("{name}: triple-cyclic ran as {:?}", triple.details));
        }
    }
    within(start, LEMMA_BUDGET, "lemma sweep")?;
    if bad.is_empty() {
        Ok(format!("{applicable} applicable lemma checks"))
    } else {
        Err(bad.join("; "))
    }
}

fn criterion_7() -> Outcome {
    let check = |g: &FiniteGroup, t: &[usize], d: usize| -> Result<(), String> {
        let ext = constructive_affine_extension(g, t).map_err(|e| format!("{t:?}: {e}"))?;
        let mut all = t.to_vec();
        all.extend_from_slice(&ext);
        if ext.len() != d - t.len() || generated_order(g, &all) != g.order() {
            return Err(format!("{t:?} extended by {ext:?} fails"));
        }
        Ok(())
    };

    let g = parse_group_spec("Aff(3,2,2)").unwrap();
    let a = Analysis::new(&g, &FlexOptions::default()).unwrap();
    let mut exhaustive = 0;
    for k in 0..=2 {
        for t in rank_tuples(&a, k) {
            check(&g, &t, 3)?;
            exhaustive += 1;
        }
    }

    let g = parse_group_spec("Aff(3,3,2)").unwrap();
    let e = FlexEngine::new(&g);
    let trivial = SubgroupSet::trivial(&g);
    let mut rng = StdRng::seed_from_u64(EXTENSION_SEED);
    let mut sampled = 0;
    while sampled < RANDOM_EXTENSIONS {
        let k = rng.random_range(1..=3usize);
        let mut t: Vec<usize> = (0..k).map(|_| rng.random_range(0..g.order())).collect();
        t.sort();
        t.dedup();
        if t.len() != k || e.known_rank(&join_elements(&g, &trivial, &t)) != Some(k) {
            continue;
        }
        check(&g, &t, 4)?;
        sampled += 1;
    }
    Ok(format!("{exhaustive} tuples in Aff(3,2,2), {sampled} random tuples in Aff(3,3,2)"))
}

fn criterion_8() -> Outcome {
    let dir = std::env::temp_dir().join(format!("flexgroup-acceptance-{}", std::process::id()));
    std::fs::create_dir_all(&dir).map_err(|e| e.to_string())?;
    let mut outputs = Vec::new();
    for jobs in ["1", "4"] {
        let out = dir.join(format!("jobs{jobs}.json"));
        let status = Command::new(env!("CARGO_BIN_EXE_flexgroup"))
            .args(["verify", "all", "--jobs", jobs, "--out"])
            .arg(&out)
            .stderr(Stdio::null())
            .status()
            .map_err(|e| e.to_string())?;
        if !status.success() {
            return Err(format!("verify all --jobs {jobs} exited with {status}"));
        }
        outputs.push(std::fs::read(&out).map_err(|e| e.to_string())?);
    }
    let _ = std::fs::remove_dir_all(&dir);
    if outputs[0] == outputs[1] {
        Ok(format!("{} bytes identical for --jobs 1 and 4", outputs[0].len()))
    } else {
        Err("reports differ between --jobs 1 and --jobs 4".into())
    }
}

fn main() {
    let criteria: [Criterion; 8] = [
        ("rank values", criterion_1),
        ("Q8 facts", criterion_2),
        ("1-flexible oracle equivalence", criterion_3),
        ("2-flexible oracle equivalence (d >= 3)", criterion_4),
        ("d = 2 classification", criterion_5),
        ("lemma suite", criterion_6),
        ("constructive extension", criterion_7),
        ("determinism across --jobs", criterion_8),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        match f() {
            Ok(msg) => println!("PASS criterion {}: {name} ({msg}) [{:.2}s]", i + 1, start.elapsed().as_secs_f64()),
            Err(msg) => {
                failed += 1;
                println!("FAIL criterion {}: {name}: {msg}", i + 1);
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
