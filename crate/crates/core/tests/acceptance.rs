//! End-to-end acceptance run over the test corpus. Prints one line per
//! criterion and exits non-zero if any criterion fails.

mod common;

use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use tiltlab::heart::resolution::e_ext;
use tiltlab::heart::WindowComplex;
use tiltlab::repcat::indecomposables::{indecomposable_modules, DEFAULT_SAMPLES};
use tiltlab::repcat::{ext_dim, hom_basis, Representation};
use tiltlab::silting::enumerate::{by_clique, by_mutation, same_classes, EnumerationOptions};
use tiltlab::silting::SiltingComplex;
use tiltlab::tiltcheck::air::check_air_tilting;
use tiltlab::tiltcheck::bijection::verify_bijection;
use tiltlab::tiltcheck::equiv::equivalence_row;
use tiltlab::tiltcheck::tilting::{check_quasi_tilting, check_tilting, injectives_in_fac, TiltingVerdict};
use tiltlab::tiltcheck::torsion::verify_torsion_reports;
use tiltlab::tiltcheck::trials::{closure_trials, schanuel_trials, CLOSURES};
use tiltlab::tiltcheck::universe::{Universe, UniverseOptions};
use tiltlab::tiltcheck::{presentation_of, windows_of, Membership};
use tiltlab::Algebra;

const SEED: u64 = 0;
const ORACLE_LIMIT: Duration = Duration::from_secs(10);
const ENUMERATION_LIMIT: Duration = Duration::from_secs(60);
const BIJECTION_LIMIT: Duration = Duration::from_secs(300);
const CLOSURE_TRIALS: usize = 500;
const SCHANUEL_TRIALS: usize = 100;
const DEPTH_PAIRS: usize = 200;
const QUASI_BUDGET: usize = 20;
const SMALL_PRIME: u32 = 31;
const PRIMES: (u32, u32) = (1009, 2003);

struct Case {
    name: String,
    alg: Algebra,
    d: usize,
    universe: Universe,
    classes: Vec<SiltingComplex>,
    images: Vec<Vec<WindowComplex>>,
}

fn corpus_algebras(p: u32) -> Vec<(&'static str, Algebra, Vec<usize>)> {
    vec![
        ("A1", Algebra::linear_a(p, 1), vec![1, 2, 3]),
        ("A2", Algebra::linear_a(p, 2), vec![1, 2]),
        ("A3", Algebra::linear_a(p, 3), vec![1]),
        ("N3", Algebra::linear_rad2(p, 3), vec![1, 2]),
    ]
}

fn build_corpus(p: u32) -> Vec<Case> {
    let mut out = Vec::new();
    for (name, alg, ds) in corpus_algebras(p) {
        for d in ds {
            let universe = Universe::build(&alg, d, &UniverseOptions::default()).unwrap();
            let classes = by_mutation(&alg, d, &EnumerationOptions::default()).unwrap();
            let images = classes.iter().map(|s| windows_of(&alg, s).unwrap()).collect();
            out.push(Case { name: format!("{name} d={d}"), alg: alg.clone(), d, universe, classes, images });
        }
    }
    out
}

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome { pass, detail: detail.into() }
}

/// Hom and Ext between all indecomposables with dimension bound 3.
fn hom_ext_oracles() -> Outcome {
    let t = Instant::now();
    let mut pairs = 0;
    let mut failures = Vec::new();
    for n in [2, 3] {
        for p in [PRIMES.0, SMALL_PRIME] {
            let alg = Algebra::linear_a(p, n);
            let mods: Vec<Representation> = indecomposable_modules(&alg, 3, DEFAULT_SAMPLES, SEED).unwrap();
            if mods.len() != n * (n + 1) / 2 {
                failures.push(format!("A{n}: {} indecomposables", mods.len()));
            }
            for m in &mods {
                for x in &mods {
                    pairs += 1;
                    let hom = hom_basis(&alg, m, x).len();
                    let expected = if p == SMALL_PRIME {
                        let count = common::exhaustive_hom_count(&alg, m, x);
                        (0..=8).find(|&k| (p as u64).pow(k) == count).map(|k| k as usize)
                    } else {
                        Some(common::hom_dim_oracle(&alg, m, x))
                    };
                    if expected != Some(hom) {
                        failures.push(format!("A{n} p={p} Hom{:?}->{:?}", m.dims(), x.dims()));
                    }
                    let ext1 = hom as i64 - common::euler_form(&alg, m.dims(), x.dims());
                    if ext_dim(&alg, m, x, 1).unwrap() as i64 != ext1 || ext_dim(&alg, m, x, 2).unwrap() != 0 {
                        failures.push(format!("A{n} p={p} Ext{:?}->{:?}", m.dims(), x.dims()));
                    }
                }
            }
        }
    }
    let el = t.elapsed();
    outcome(failures.is_empty() && el < ORACLE_LIMIT, format!("{pairs} pairs, {} mismatches {failures:?}, {el:.2?} (limit {ORACLE_LIMIT:?})", failures.len()))
}

fn enumeration_counts() -> Outcome {
    let mut lines = Vec::new();
    let mut pass = true;
    for (n, expected) in [(2, 5), (3, 14)] {
        let t = Instant::now();
        let alg = Algebra::linear_a(PRIMES.0, n);
        let opts = EnumerationOptions::default();
        let a = by_mutation(&alg, 1, &opts).unwrap();
        let modules = indecomposable_modules(&alg, 3, DEFAULT_SAMPLES, SEED).unwrap();
        let b = by_clique(&alg, 1, &modules, &opts).unwrap();
        let agree = a.len() == b.len() && same_classes(&alg, &a, &b, SEED).unwrap();
        let el = t.elapsed();
        pass &= a.len() == expected && agree && el < ENUMERATION_LIMIT;
        lines.push(format!("A{n}: mutation {} clique {} (expected {expected}, agree {agree}, {el:.2?})", a.len(), b.len()));
    }
    outcome(pass, lines.join("; "))
}

fn bijection(corpus: &[Case]) -> Outcome {
    let t = Instant::now();
    let mut lines = Vec::new();
    let mut pass = true;
    for c in corpus {
        let u = Universe::build(&c.alg, c.d, &UniverseOptions::default()).unwrap();
        let r = verify_bijection(&c.alg, &u, &EnumerationOptions::default()).unwrap();
        pass &= r.pass && r.collisions.is_empty() && r.unmatched_families == 0 && r.methods_agree != Some(false);
        pass &= r.rows.iter().all(|row| row.air_tilting && row.mismatches.is_empty() && row.presentation_recovered);
        lines.push(format!("{} {}/{}", c.name, r.silting_classes, r.air_families));
    }
    let el = t.elapsed();
    pass &= el < BIJECTION_LIMIT;
    outcome(pass, format!("classes/AIR families: {}; {el:.2?} (limit {BIJECTION_LIMIT:?})", lines.join(", ")))
}

fn torsion_suite(corpus: &[Case]) -> Outcome {
    let mut checked = 0;
    let mut failures = Vec::new();
    for c in corpus {
        let reports: Vec<_> = c.classes.par_iter().map(|s| verify_torsion_reports(&c.alg, s, &c.universe, SEED).unwrap()).collect();
        for (i, r) in reports.iter().enumerate() {
            checked += 1;
            if !(r.pass && r.realizability_failures.is_empty() && r.level_failures.is_empty() && r.summands_missing == 0) {
                failures.push(format!("{} class {i}", c.name));
            }
        }
    }
    outcome(failures.is_empty(), format!("{checked} classes, failures {failures:?}"))
}

fn closure_suite(corpus: &[Case]) -> Outcome {
    let mut subjects = 0;
    let mut trivial = 0;
    let mut totals = vec![0usize; CLOSURES.len()];
    let mut failures = Vec::new();
    for c in corpus {
        let results: Vec<_> = c
            .images
            .par_iter()
            .map(|m| {
                let verified = check_quasi_tilting(&c.alg, m, &c.universe, QUASI_BUDGET, SEED).unwrap().verdict.holds();
                let tallies = if m.is_empty() { vec![] } else { closure_trials(&c.alg, std::slice::from_ref(m), &c.universe, CLOSURE_TRIALS, SEED).unwrap() };
                (verified, tallies)
            })
            .collect();
        for (i, (verified, tallies)) in results.into_iter().enumerate() {
            if !verified {
                failures.push(format!("{} class {i} not quasi-tilting", c.name));
                continue;
            }
            if tallies.is_empty() {
                trivial += 1;
                continue;
            }
            subjects += 1;
            for (k, t) in tallies.iter().enumerate() {
                totals[k] += t.trials;
                if t.trials != CLOSURE_TRIALS || !t.counterexamples.is_empty() {
                    failures.push(format!("{} class {i} {:?}: {} trials {:?}", c.name, t.closure, t.trials, t.counterexamples));
                }
            }
        }
    }
    let per: Vec<String> = CLOSURES.iter().zip(&totals).map(|(c, n)| format!("{c:?} {n}")).collect();
    outcome(
        failures.is_empty(),
        format!("{subjects} subjects x {CLOSURE_TRIALS} per property ({trivial} zero subjects skipped); totals {}; failures {failures:?}", per.join(", ")),
    )
}

fn checker_agreement(corpus: &[Case]) -> Outcome {
    let mut rows = 0;
    let mut failures = Vec::new();
    for c in corpus {
        let n = c.alg.vertex_count();
        let mut objects: Vec<(String, Vec<WindowComplex>)> =
            c.images.iter().enumerate().map(|(i, m)| (format!("class {i}"), m.clone())).collect();
        objects.extend(c.universe.objects.iter().enumerate().map(|(i, o)| (format!("object {i}"), vec![o.window.clone()])));
        let simples: Vec<WindowComplex> = (0..n).map(|v| WindowComplex::module(&c.alg, c.d, c.alg.simple(v), 0).unwrap()).collect();
        if n > 1 {
            objects.push(("all simples".into(), simples.clone()));
        }
        let results: Vec<_> =
            objects.par_iter().map(|(label, m)| (label.clone(), equivalence_row(&c.alg, label, m, &c.universe, QUASI_BUDGET, SEED))).collect();
        for (label, r) in results {
            rows += 1;
            match r {
                Ok(row) if row.consistent() => {}
                Ok(row) => failures.push(format!("{} {label}: {row:?}", c.name)),
                Err(e) => failures.push(format!("{} {label}: {e}", c.name)),
            }
        }
    }
    // negative controls
    let alg = Algebra::linear_a(PRIMES.0, 2);
    let u = Universe::build(&alg, 1, &UniverseOptions::default()).unwrap();
    let s: Vec<WindowComplex> = (0..2).map(|v| WindowComplex::module(&alg, 1, alg.simple(v), 0).unwrap()).collect();
    let report = check_tilting(&alg, &s, SEED).unwrap();
    let fails_t2 = matches!(&report.direct_route, TiltingVerdict::NotTilting(w) if w.starts_with("E^1"));
    if !fails_t2 || report.verdict.is_tilting() {
        failures.push(format!("S1+S2: {report:?}"));
    }
    let mut controls = 1;
    for x in &s {
        controls += 1;
        let pres = presentation_of(&alg, std::slice::from_ref(x), 1, SEED).unwrap();
        // the presentation of the summand alone, without P(v)[d] completion
        let alone = SiltingComplex::new(1, pres.summands.iter().take(1).cloned().collect());
        let air = check_air_tilting(&alg, std::slice::from_ref(x), &alone, &u, SEED).unwrap();
        let tilting = check_tilting(&alg, std::slice::from_ref(x), SEED).unwrap().verdict.is_tilting();
        let quasi = equivalence_row(&alg, "singleton", std::slice::from_ref(x), &u, QUASI_BUDGET, SEED).unwrap();
        if air.air_tilting || tilting || !air.silting.starts_with("K0 rank") || !quasi.consistent() {
            failures.push(format!("singleton {:?}: air {} ({}) tilting {tilting}", x.homology_dims(&alg), air.air_tilting, air.silting));
        }
    }
    outcome(failures.is_empty(), format!("{rows} corpus rows + {controls} negative controls, disagreements {failures:?}"))
}

fn injectives(corpus: &[Case]) -> Outcome {
    let mut tilting = 0;
    let mut failures = Vec::new();
    let mut witness = None;
    for c in corpus {
        for (i, m) in c.images.iter().enumerate() {
            let is_tilting = check_tilting(&c.alg, m, SEED).unwrap().verdict.is_tilting();
            let inj = injectives_in_fac(&c.alg, m, c.d, SEED).unwrap();
            if is_tilting {
                tilting += 1;
                if inj.iter().any(|&x| x != Membership::In) {
                    failures.push(format!("{} class {i}: {inj:?}", c.name));
                }
            } else if witness.is_none() && c.name.starts_with("N3") {
                if let Some(v) = inj.iter().position(|&x| x != Membership::In) {
                    witness = Some(format!("{} class {i}: J({})[{}] {:?}", c.name, v + 1, c.d - 1, inj[v]));
                }
            }
        }
    }
    outcome(
        failures.is_empty() && witness.is_some(),
        format!("{tilting} tilting classes all In; non-tilting witness {}; failures {failures:?}", witness.unwrap_or_else(|| "none".into())),
    )
}

fn fingerprint(alg: &Algebra, c: &Case) -> (usize, usize, Vec<Vec<Vec<Vec<usize>>>>, Vec<Vec<usize>>) {
    let mut prints: Vec<Vec<Vec<Vec<usize>>>> =
        c.images.iter().map(|m| { let mut p: Vec<_> = m.iter().map(|x| x.homology_dims(alg)).collect(); p.sort(); p }).collect();
    prints.sort();
    let mut mods: Vec<Representation> = c.universe.modules.clone();
    mods.sort_by(|a, b| a.dims().cmp(b.dims()));
    let mut dims = Vec::new();
    for m in &mods {
        for x in &mods {
            let wm = WindowComplex::module(alg, c.d, m.clone(), 0).unwrap();
            let wx = WindowComplex::module(alg, c.d, x.clone(), 0).unwrap();
            dims.push((0..=c.d as i64).map(|i| e_ext(alg, &wm, &wx, i, 2 * c.d + 3).unwrap()).collect());
        }
    }
    (c.classes.len(), c.universe.modules.len(), prints, dims)
}

fn stability(corpus: &[Case]) -> Outcome {
    // depth 2d+3 against 2d+6
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut depth_mismatches = Vec::new();
    for _ in 0..DEPTH_PAIRS {
        let c = &corpus[rng.gen_range(0..corpus.len())];
        let objs = &c.universe.objects;
        let x = &objs[rng.gen_range(0..objs.len())].window;
        let y = &objs[rng.gen_range(0..objs.len())].window;
        let i = rng.gen_range(0..=c.d as i64 + 3);
        let short = e_ext(&c.alg, x, y, i, 2 * c.d + 3).unwrap();
        let long = e_ext(&c.alg, x, y, i, 2 * c.d + 6).unwrap();
        if short != long {
            depth_mismatches.push(format!("{} E^{i}: {short} vs {long}", c.name));
        }
    }
    // same seed, same bytes
    let c = corpus.last().unwrap();
    let run = || {
        let u = Universe::build(&c.alg, c.d, &UniverseOptions::default()).unwrap();
        let b = verify_bijection(&c.alg, &u, &EnumerationOptions::default()).unwrap();
        let t = verify_torsion_reports(&c.alg, &c.classes[c.classes.len() / 2], &u, SEED).unwrap();
        let q = closure_trials(&c.alg, std::slice::from_ref(&c.images[1]), &u, 50, SEED).unwrap();
        serde_json::to_string(&(b, t, q)).unwrap()
    };
    let (first, second) = (run(), run());
    let identical = first == second;
    // another prime
    let other = build_corpus(PRIMES.1);
    let mut prime_mismatches = Vec::new();
    for (a, b) in corpus.iter().zip(&other) {
        if fingerprint(&a.alg, a) != fingerprint(&b.alg, b) {
            prime_mismatches.push(a.name.clone());
        }
    }
    outcome(
        depth_mismatches.is_empty() && identical && prime_mismatches.is_empty(),
        format!(
            "{DEPTH_PAIRS} depth pairs, {} mismatches; rerun identical {identical} ({} bytes); p={} vs p={} mismatches {prime_mismatches:?}",
            depth_mismatches.len(),
            first.len(),
            PRIMES.0,
            PRIMES.1
        ),
    )
}

fn schanuel(corpus: &[Case]) -> Outcome {
    let mut lines = Vec::new();
    let mut pass = true;
    for c in corpus {
        let gens = &c.classes[c.classes.len() / 2].summands;
        let objs: Vec<_> = c.universe.objects.iter().map(|o| o.presentation.clone()).collect();
        let t = schanuel_trials(&c.alg, gens, &objs, SCHANUEL_TRIALS, SEED);
        pass &= t.trials == SCHANUEL_TRIALS && t.failures.is_empty() && t.undecided == 0;
        lines.push(format!("{} {}/{}/{}", c.name, t.trials, t.failures.len(), t.undecided));
    }
    outcome(pass, format!("trials/failures/undecided: {}", lines.join(", ")))
}

fn main() {
    let t = Instant::now();
    let corpus = build_corpus(PRIMES.0);
    println!("corpus built in {:.2?}", t.elapsed());
    let criteria: Vec<(&str, Box<dyn Fn() -> Outcome + '_>)> = vec![
        ("Hom/Ext oracle agreement", Box::new(hom_ext_oracles)),
        ("enumeration counts", Box::new(enumeration_counts)),
        ("silting / AIR tilting bijection", Box::new(|| bijection(&corpus))),
        ("torsion pair suite", Box::new(|| torsion_suite(&corpus))),
        ("quasi-tilting closure trials", Box::new(|| closure_suite(&corpus))),
        ("tilting checker agreement", Box::new(|| checker_agreement(&corpus))),
        ("injectives in Fac_d", Box::new(|| injectives(&corpus))),
        ("stability and determinism", Box::new(|| stability(&corpus))),
        ("Schanuel isomorphisms", Box::new(|| schanuel(&corpus))),
    ];
    let mut failed = 0;
    for (k, (title, run)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let o = run();
        failed += usize::from(!o.pass);
        println!("criterion {} [{title}]: {} in {:.2?}: {}", k + 1, if o.pass { "PASS" } else { "FAIL" }, t.elapsed(), o.detail);
    }
    println!("acceptance: {}/{} criteria pass", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
