//! The three subcommands, producing a JSON report and an exit code.

use std::fs;
use std::path::{Path, PathBuf};

use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};
use tiltlab::heart::resolution::{default_depth, e_ext};
use tiltlab::heart::WindowComplex;
use tiltlab::io::{parse_objects, proj_to_json, AlgebraSpec, Object};
use tiltlab::silting::enumerate::{by_clique, by_mutation, same_classes, EnumerationOptions, DEFAULT_MAX_CLASSES};
use tiltlab::silting::{basic_summands, integer_determinant, SiltingComplex};
use tiltlab::tiltcheck::air::check_air_tilting;
use tiltlab::tiltcheck::bijection::verify_bijection;
use tiltlab::tiltcheck::equiv::equivalence_row;
use tiltlab::tiltcheck::tilting::{check_quasi_tilting, check_tilting};
use tiltlab::tiltcheck::torsion::verify_torsion_reports;
use tiltlab::tiltcheck::trials::{closure_trials, schanuel_trials};
use tiltlab::tiltcheck::universe::{Universe, UniverseOptions};
use tiltlab::tiltcheck::{presentation_of, windows_of};
use tiltlab::{Algebra, Error};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_BUDGET: i32 = 2;
pub const EXIT_INPUT: i32 = 3;
pub const EXIT_UNKNOWN: i32 = 4;

/// Random extensions tested by the quasi-tilting check.
const QUASI_BUDGET: usize = 20;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum MethodArg {
    Mutation,
    Clique,
    Both,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Target {
    Air,
    Quasi,
    Tilting,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Theorem {
    Bijection,
    Torsion,
    Qtilt,
    Equiv,
}

#[derive(Clone, Debug)]
pub struct RunConfig {
    pub spec: PathBuf,
    pub d: Option<usize>,
    pub method: MethodArg,
    pub seed: u64,
    pub depth: Option<usize>,
    pub universe_dim_bound: usize,
    pub max_classes: usize,
    pub trials: usize,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            spec: PathBuf::new(),
            d: None,
            method: MethodArg::Mutation,
            seed: 0,
            depth: None,
            universe_dim_bound: 3,
            max_classes: DEFAULT_MAX_CLASSES,
            trials: 500,
        }
    }
}

pub struct Outcome {
    pub report: Value,
    pub code: i32,
}

impl Outcome {
    fn error(code: i32, e: impl std::fmt::Display) -> Self {
        Outcome { report: json!({ "error": e.to_string() }), code }
    }
}

/// Exit code of a library error.
fn code_of(e: &Error) -> i32 {
    match e {
        Error::BudgetExceeded(_) => EXIT_BUDGET,
        Error::UndecidedIso | Error::RandomBudgetExhausted(_) | Error::CheckerDisagreement(_) => EXIT_UNKNOWN,
        _ => EXIT_INPUT,
    }
}

struct Loaded {
    spec: AlgebraSpec,
    alg: Algebra,
    d: usize,
}

fn load(cfg: &RunConfig) -> Result<Loaded, Outcome> {
    let text = fs::read_to_string(&cfg.spec)
        .map_err(|e| Outcome::error(EXIT_INPUT, format!("{}: {e}", cfg.spec.display())))?;
    let spec = AlgebraSpec::parse(&text).map_err(|e| Outcome::error(EXIT_INPUT, e))?;
    let alg = spec.build().map_err(|e| Outcome::error(EXIT_INPUT, e))?;
    let d = cfg.d.unwrap_or(spec.d);
    if d == 0 {
        return Err(Outcome::error(EXIT_INPUT, "d must be at least 1"));
    }
    Ok(Loaded { spec, alg, d })
}

fn universe(l: &Loaded, cfg: &RunConfig) -> tiltlab::Result<Universe> {
    let opts = UniverseOptions { dim_bound: cfg.universe_dim_bound, seed: cfg.seed, ..Default::default() };
    Universe::build(&l.alg, l.d, &opts)
}

fn enumeration_options(cfg: &RunConfig) -> EnumerationOptions {
    EnumerationOptions { seed: cfg.seed, max_classes: cfg.max_classes }
}

fn header(l: &Loaded, cfg: &RunConfig) -> Value {
    let spec = AlgebraSpec { d: l.d, ..l.spec.clone() };
    json!({ "algebra": spec, "d": l.d, "seed": cfg.seed })
}

fn finish(result: tiltlab::Result<(Value, bool)>, mut head: Value) -> Outcome {
    match result {
        Ok((body, pass)) => {
            head["pass"] = json!(pass);
            head["report"] = body;
            Outcome { report: head, code: if pass { EXIT_PASS } else { EXIT_FAIL } }
        }
        Err(e) => {
            head["error"] = json!(e.to_string());
            Outcome { report: head, code: code_of(&e) }
        }
    }
}

fn class_json(alg: &Algebra, i: usize, s: &SiltingComplex) -> Value {
    let k0 = s.k0_matrix(alg);
    json!({
        "index": i,
        "summands": s.summands.iter().map(|x| proj_to_json(alg, x)).collect::<Vec<_>>(),
        "k0": k0,
        "k0_determinant": integer_determinant(&k0),
        "certificate": "silting",
    })
}

pub fn cmd_enumerate(cfg: &RunConfig) -> Outcome {
    let l = match load(cfg) {
        Ok(l) => l,
        Err(o) => return o,
    };
    let mut head = header(&l, cfg);
    head["method"] = json!(cfg.method);
    let opts = enumeration_options(cfg);
    let run = || -> tiltlab::Result<(Vec<SiltingComplex>, Option<bool>)> {
        let clique = |alg: &Algebra| -> tiltlab::Result<Vec<SiltingComplex>> {
            let modules = tiltlab::repcat::indecomposables::indecomposable_modules(
                alg,
                cfg.universe_dim_bound,
                tiltlab::repcat::indecomposables::DEFAULT_SAMPLES,
                cfg.seed,
            )?;
            by_clique(alg, l.d, &modules, &opts)
        };
        match cfg.method {
            MethodArg::Mutation => Ok((by_mutation(&l.alg, l.d, &opts)?, None)),
            MethodArg::Clique => Ok((clique(&l.alg)?, None)),
            MethodArg::Both => {
                let a = by_mutation(&l.alg, l.d, &opts)?;
                let b = clique(&l.alg)?;
                let agree = same_classes(&l.alg, &a, &b, cfg.seed)?;
                Ok((a, Some(agree)))
            }
        }
    };
    match run() {
        Ok((classes, agree)) => {
            head["count"] = json!(classes.len());
            head["methods_agree"] = json!(agree);
            head["classes"] = Value::Array(classes.iter().enumerate().map(|(i, s)| class_json(&l.alg, i, s)).collect());
            let code = if agree == Some(false) { EXIT_FAIL } else { EXIT_PASS };
            Outcome { report: head, code }
        }
        Err(e) => {
            head["error"] = json!(e.to_string());
            Outcome { report: head, code: code_of(&e) }
        }
    }
}

/// `M` and its presentation from an object file.
fn read_objects(l: &Loaded, cfg: &RunConfig, path: &Path) -> Result<(Vec<WindowComplex>, SiltingComplex), Outcome> {
    let text = fs::read_to_string(path).map_err(|e| Outcome::error(EXIT_INPUT, format!("{}: {e}", path.display())))?;
    let objects = parse_objects(&l.alg, l.d, &text).map_err(|e| Outcome::error(EXIT_INPUT, e))?;
    let alg = &l.alg;
    let built = || -> tiltlab::Result<(Vec<WindowComplex>, SiltingComplex)> {
        if objects.iter().all(|o| matches!(o, Object::Projective(_))) {
            let parts: Vec<_> = objects.iter().filter_map(|o| if let Object::Projective(x) = o { Some(x.clone()) } else { None }).collect();
            let s = SiltingComplex::new(l.d, basic_summands(alg, &parts, cfg.seed)?);
            Ok((windows_of(alg, &s)?, s))
        } else {
            let mut m = Vec::new();
            for o in &objects {
                match o {
                    Object::Window(w) => m.push(w.clone()),
                    Object::Projective(x) => m.push(tiltlab::heart::truncate_window(alg, x, l.d)?),
                }
            }
            let s = presentation_of(alg, &m, l.d, cfg.seed)?;
            Ok((m, s))
        }
    };
    built().map_err(|e| Outcome::error(code_of(&e), e))
}

pub fn cmd_check(cfg: &RunConfig, target: Target, object: &Path) -> Outcome {
    let l = match load(cfg) {
        Ok(l) => l,
        Err(o) => return o,
    };
    let (m, s) = match read_objects(&l, cfg, object) {
        Ok(x) => x,
        Err(o) => return o,
    };
    let mut head = header(&l, cfg);
    head["target"] = json!(target);
    head["summands"] = json!(m.len());
    let alg = &l.alg;
    let result = (|| -> tiltlab::Result<(Value, bool)> {
        match target {
            Target::Air => {
                let u = universe(&l, cfg)?;
                let r = check_air_tilting(alg, &m, &s, &u, cfg.seed)?;
                let presentation: Vec<_> = s.summands.iter().map(|x| proj_to_json(alg, x)).collect();
                Ok((json!({ "universe": u.len(), "presentation": presentation, "check": r }), r.air_tilting))
            }
            Target::Quasi => {
                let u = universe(&l, cfg)?;
                let r = check_quasi_tilting(alg, &m, &u, QUASI_BUDGET, cfg.seed)?;
                Ok((json!({ "universe": u.len(), "check": r }), r.verdict.holds()))
            }
            Target::Tilting => {
                let depth = cfg.depth.unwrap_or(default_depth(l.d));
                let r = check_tilting(alg, &m, cfg.seed)?;
                let mut ext = Vec::new();
                for (a, x) in m.iter().enumerate() {
                    for (b, y) in m.iter().enumerate() {
                        for k in 1..=l.d as i64 {
                            let dim = e_ext(alg, x, y, k, depth)?;
                            if dim != 0 {
                                ext.push(json!({ "from": a, "to": b, "degree": k, "dim": dim }));
                            }
                        }
                    }
                }
                let pass = r.verdict.is_tilting();
                Ok((json!({ "depth": depth, "check": r, "nonzero_ext": ext }), pass))
            }
        }
    })();
    finish(result, head)
}

pub fn cmd_verify(cfg: &RunConfig, theorem: Theorem) -> Outcome {
    let l = match load(cfg) {
        Ok(l) => l,
        Err(o) => return o,
    };
    let mut head = header(&l, cfg);
    head["theorem"] = json!(theorem);
    let alg = &l.alg;
    let opts = enumeration_options(cfg);
    let result = (|| -> tiltlab::Result<(Value, bool)> {
        let u = universe(&l, cfg)?;
        match theorem {
            Theorem::Bijection => {
                let r = verify_bijection(alg, &u, &opts)?;
                Ok((serde_json::to_value(&r).expect("report serializes"), r.pass))
            }
            Theorem::Torsion => {
                let classes = by_mutation(alg, l.d, &opts)?;
                let rows: Vec<_> = classes
                    .par_iter()
                    .map(|s| verify_torsion_reports(alg, s, &u, cfg.seed))
                    .collect::<tiltlab::Result<_>>()?;
                let pass = rows.iter().all(|r| r.pass);
                Ok((json!({ "universe": u.len(), "classes": classes.len(), "rows": rows }), pass))
            }
            Theorem::Qtilt => {
                let classes = by_mutation(alg, l.d, &opts)?;
                let subjects: Vec<Vec<WindowComplex>> =
                    classes.iter().map(|s| windows_of(alg, s)).collect::<tiltlab::Result<_>>()?;
                let per: Vec<_> = subjects
                    .par_iter()
                    .map(|m| closure_trials(alg, std::slice::from_ref(m), &u, cfg.trials, cfg.seed))
                    .collect::<tiltlab::Result<_>>()?;
                let mut totals = Vec::new();
                for (k, first) in per.first().cloned().unwrap_or_default().iter().enumerate() {
                    let trials: usize = per.iter().map(|p| p[k].trials).sum();
                    let counterexamples: Vec<String> =
                        per.iter().enumerate().flat_map(|(i, p)| p[k].counterexamples.iter().map(move |c| format!("class {i}: {c}"))).collect();
                    totals.push(json!({ "closure": first.closure, "trials": trials, "counterexamples": counterexamples }));
                }
                let gens: Vec<_> = classes.iter().flat_map(|s| s.summands.clone()).collect();
                let objs: Vec<_> = u.objects.iter().map(|o| o.presentation.clone()).collect();
                let sch = schanuel_trials(alg, &gens, &objs, 100, cfg.seed);
                let pass = totals.iter().all(|t| t["counterexamples"].as_array().is_some_and(|a| a.is_empty()))
                    && sch.failures.is_empty()
                    && sch.undecided == 0;
                Ok((json!({ "universe": u.len(), "subjects": subjects.len(), "closures": totals, "schanuel": sch }), pass))
            }
            Theorem::Equiv => {
                let classes = by_mutation(alg, l.d, &opts)?;
                let mut corpus: Vec<(String, Vec<WindowComplex>)> = Vec::new();
                for (i, s) in classes.iter().enumerate() {
                    corpus.push((format!("class {i}"), windows_of(alg, s)?));
                }
                let simples: Vec<WindowComplex> = (0..alg.vertex_count())
                    .map(|v| WindowComplex::module(alg, l.d, alg.simple(v), 0))
                    .collect::<tiltlab::Result<_>>()?;
                for (v, x) in simples.iter().enumerate() {
                    corpus.push((format!("S{}", v + 1), vec![x.clone()]));
                }
                if simples.len() > 1 {
                    corpus.push(("all simples".into(), simples.clone()));
                }
                let rows: Vec<_> = corpus
                    .par_iter()
                    .map(|(label, m)| equivalence_row(alg, label, m, &u, 20, cfg.seed))
                    .collect::<tiltlab::Result<_>>()?;
                let pass = rows.iter().all(|r| r.consistent());
                Ok((json!({ "universe": u.len(), "rows": rows }), pass))
            }
        }
    })();
    finish(result, head)
}
