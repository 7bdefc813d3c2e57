//! JSON formats: algebra specs, complexes of projectives and complexes of
//! representations. Vertices are 1-based in files.

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::algebra::{Algebra, Arrow};
use crate::complex::ModComplex;
use crate::error::{Error, Result};
use crate::heart::{to_window, WindowComplex};
use crate::homotopy::{AlgMatrix, ProjComplex};
use crate::linalg::Matrix;
use crate::repcat::{ModuleMap, Representation};

fn parse_err(e: serde_json::Error) -> Error {
    Error::Parse(format!("line {} column {}: {e}", e.line(), e.column()))
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct AlgebraSpec {
    pub p: u32,
    pub vertices: usize,
    /// `[id, source, target]`, endpoints 1-based.
    pub arrows: Vec<(Value, usize, usize)>,
    /// Forbidden paths as arrow ids in traversal order.
    #[serde(default)]
    pub relations: Vec<Vec<Value>>,
    pub d: usize,
}

fn id_string(v: &Value) -> Result<String> {
    match v {
        Value::String(s) => Ok(s.clone()),
        Value::Number(n) => Ok(n.to_string()),
        other => Err(Error::Spec(format!("arrow id must be a string or number, got {other}"))),
    }
}

impl AlgebraSpec {
    pub fn parse(text: &str) -> Result<Self> {
        let spec: AlgebraSpec = serde_json::from_str(text).map_err(parse_err)?;
        if spec.d == 0 {
            return Err(Error::Spec("d must be at least 1".into()));
        }
        Ok(spec)
    }

    pub fn build(&self) -> Result<Algebra> {
        let mut arrows = Vec::new();
        for (id, s, t) in &self.arrows {
            if *s == 0 || *t == 0 || *s > self.vertices || *t > self.vertices {
                return Err(Error::Spec(format!("arrow {id} has an endpoint outside 1..{}", self.vertices)));
            }
            arrows.push(Arrow { id: id_string(id)?, source: s - 1, target: t - 1 });
        }
        let mut relations = Vec::new();
        for r in &self.relations {
            let mut path = Vec::new();
            for id in r {
                let id = id_string(id)?;
                let k = arrows
                    .iter()
                    .position(|a| a.id == id)
                    .ok_or_else(|| Error::Spec(format!("relation uses unknown arrow {id}")))?;
                path.push(k);
            }
            relations.push(path);
        }
        Algebra::new(self.p, self.vertices, arrows, relations)
    }

    /// Spec of an existing algebra with window size `d`.
    pub fn from_algebra(alg: &Algebra, d: usize) -> Self {
        let arrows = alg.arrows().iter().map(|a| (Value::String(a.id.clone()), a.source + 1, a.target + 1)).collect();
        let relations = alg
            .relations()
            .iter()
            .map(|r| r.iter().map(|&k| Value::String(alg.arrows()[k].id.clone())).collect())
            .collect();
        AlgebraSpec { p: alg.prime(), vertices: alg.vertex_count(), arrows, relations, d }
    }
}

/// Complex of projectives: `terms[k]` holds the multiplicity of each `P(i)`
/// in degree `window[0] + k`; summands are ordered by vertex. Each entry of
/// `diff[k]` is `[row, col, coefficients]`, the coefficients running over
/// the basis paths from the row vertex to the column vertex.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProjComplexJson {
    pub window: (i64, i64),
    pub terms: Vec<Vec<usize>>,
    pub diff: Vec<Vec<(usize, usize, Vec<u32>)>>,
}

/// Complex of representations with dense matrices, `maps[a]` of size
/// `dims[target] x dims[source]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RepresentationJson {
    pub dims: Vec<usize>,
    pub arrows: Vec<Vec<Vec<u32>>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WindowComplexJson {
    pub window: (i64, i64),
    pub terms: Vec<RepresentationJson>,
    /// Per degree, one matrix per vertex.
    pub diff: Vec<Vec<Vec<Vec<u32>>>>,
}

/// Reorders the summands of every term by vertex.
pub fn canonical_order(x: &ProjComplex) -> ProjComplex {
    let perms: Vec<Vec<usize>> = x
        .terms
        .iter()
        .map(|t| {
            let mut idx: Vec<usize> = (0..t.len()).collect();
            idx.sort_by_key(|&i| t[i]);
            idx
        })
        .collect();
    let terms = x.terms.iter().zip(&perms).map(|(t, p)| p.iter().map(|&i| t[i]).collect()).collect();
    let diffs = x.diffs.iter().enumerate().map(|(k, d)| d.select(&perms[k + 1], &perms[k])).collect();
    ProjComplex { lo: x.lo, terms, diffs }
}

pub fn proj_to_json(alg: &Algebra, x: &ProjComplex) -> ProjComplexJson {
    let x = canonical_order(&x.trimmed());
    let n = alg.vertex_count();
    let terms = x
        .terms
        .iter()
        .map(|t| {
            let mut m = vec![0; n];
            for &v in t {
                m[v] += 1;
            }
            m
        })
        .collect();
    let diff = x
        .diffs
        .iter()
        .enumerate()
        .map(|(k, d)| {
            let mut entries = Vec::new();
            for r in 0..d.rows {
                for c in 0..d.cols {
                    let e = d.get(r, c);
                    if Algebra::is_zero(e) {
                        continue;
                    }
                    let paths = alg.paths(x.terms[k + 1][r], x.terms[k][c]);
                    entries.push((r, c, paths.iter().map(|&b| e[b]).collect()));
                }
            }
            entries
        })
        .collect();
    let window = if x.terms.is_empty() { (0, -1) } else { (x.lo, x.hi()) };
    ProjComplexJson { window, terms, diff }
}

pub fn proj_from_json(alg: &Algebra, j: &ProjComplexJson) -> Result<ProjComplex> {
    let n = alg.vertex_count();
    let (lo, hi) = j.window;
    if j.terms.len() as i64 != (hi - lo + 1).max(0) {
        return Err(Error::Parse(format!("window [{lo}, {hi}] does not match {} terms", j.terms.len())));
    }
    if j.diff.len() != j.terms.len().saturating_sub(1) {
        return Err(Error::Parse("need one differential between consecutive terms".into()));
    }
    let mut terms = Vec::new();
    for m in &j.terms {
        if m.len() != n {
            return Err(Error::Parse(format!("term has {} multiplicities, expected {n}", m.len())));
        }
        terms.push((0..n).flat_map(|v| std::iter::repeat_n(v, m[v])).collect::<Vec<_>>());
    }
    let mut diffs = Vec::new();
    for (k, entries) in j.diff.iter().enumerate() {
        let (src, tgt): (&Vec<usize>, &Vec<usize>) = (&terms[k], &terms[k + 1]);
        let mut d = AlgMatrix::zeros(alg, tgt.len(), src.len());
        for (r, c, coeffs) in entries {
            if *r >= tgt.len() || *c >= src.len() {
                return Err(Error::Parse(format!("entry ({r}, {c}) outside the differential in degree {}", lo + k as i64)));
            }
            let paths = alg.paths(tgt[*r], src[*c]);
            if coeffs.len() != paths.len() {
                return Err(Error::Parse(format!("entry ({r}, {c}) needs {} coefficients", paths.len())));
            }
            let mut e = alg.zero();
            for (&b, &x) in paths.iter().zip(coeffs) {
                e[b] = x % alg.prime();
            }
            d.set(*r, *c, e);
        }
        diffs.push(d);
    }
    let x = ProjComplex { lo, terms, diffs };
    if !x.is_complex(alg) {
        return Err(Error::Parse("differentials do not square to zero".into()));
    }
    Ok(x)
}

fn matrix_rows(m: &Matrix) -> Vec<Vec<u32>> {
    (0..m.rows()).map(|r| m.row(r).to_vec()).collect()
}

fn matrix_from_rows(p: u32, rows: usize, cols: usize, data: &[Vec<u32>]) -> Result<Matrix> {
    if data.len() != rows || data.iter().any(|r| r.len() != cols) {
        return Err(Error::Parse(format!("expected a {rows} x {cols} matrix")));
    }
    Ok(Matrix::from_vec(p, rows, cols, data.iter().flatten().map(|&x| x % p).collect()))
}

pub fn rep_to_json(m: &Representation) -> RepresentationJson {
    RepresentationJson { dims: m.dims().to_vec(), arrows: m.arrow_maps().iter().map(matrix_rows).collect() }
}

pub fn rep_from_json(alg: &Algebra, j: &RepresentationJson) -> Result<Representation> {
    if j.dims.len() != alg.vertex_count() || j.arrows.len() != alg.arrows().len() {
        return Err(Error::Parse("representation does not match the quiver".into()));
    }
    let maps = alg
        .arrows()
        .iter()
        .zip(&j.arrows)
        .map(|(a, m)| matrix_from_rows(alg.prime(), j.dims[a.target], j.dims[a.source], m))
        .collect::<Result<Vec<_>>>()?;
    let rep = Representation::new(j.dims.clone(), maps);
    if !rep.satisfies_relations(alg) {
        return Err(Error::Parse("representation violates the relations".into()));
    }
    Ok(rep)
}

pub fn mod_to_json(c: &ModComplex) -> WindowComplexJson {
    WindowComplexJson {
        window: (c.lo, c.hi()),
        terms: c.terms.iter().map(rep_to_json).collect(),
        diff: c.diffs.iter().map(|d| d.maps.iter().map(matrix_rows).collect()).collect(),
    }
}

pub fn window_to_json(w: &WindowComplex) -> WindowComplexJson {
    mod_to_json(&w.cx)
}

/// Reads a complex of representations and truncates it into the window;
/// homology outside `[-d+1, 0]` is rejected.
pub fn window_from_json(alg: &Algebra, d: usize, j: &WindowComplexJson) -> Result<WindowComplex> {
    let (lo, hi) = j.window;
    if j.terms.len() as i64 != (hi - lo + 1).max(0) || j.diff.len() != j.terms.len().saturating_sub(1) {
        return Err(Error::Parse(format!("window [{lo}, {hi}] does not match the terms")));
    }
    let terms = j.terms.iter().map(|t| rep_from_json(alg, t)).collect::<Result<Vec<_>>>()?;
    let mut diffs = Vec::new();
    for (k, per_vertex) in j.diff.iter().enumerate() {
        if per_vertex.len() != alg.vertex_count() {
            return Err(Error::Parse("differential needs one matrix per vertex".into()));
        }
        let maps = (0..alg.vertex_count())
            .map(|v| matrix_from_rows(alg.prime(), terms[k + 1].dims()[v], terms[k].dims()[v], &per_vertex[v]))
            .collect::<Result<Vec<_>>>()?;
        diffs.push(ModuleMap { maps });
    }
    let cx = ModComplex::new(lo, terms, diffs);
    if !cx.is_complex(alg) {
        return Err(Error::Parse("not a complex of representations".into()));
    }
    to_window(alg, &cx, d, lo.min(WindowComplex::lo(d)))
}

/// Object files: a list whose entries are complexes of projectives or of
/// representations, told apart by the shape of `terms`.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ObjectJson {
    Projective(ProjComplexJson),
    Representations(WindowComplexJson),
}

#[derive(Clone, Debug)]
pub enum Object {
    Projective(ProjComplex),
    Window(WindowComplex),
}

pub fn parse_objects(alg: &Algebra, d: usize, text: &str) -> Result<Vec<Object>> {
    let raw: Vec<ObjectJson> = serde_json::from_str(text).map_err(parse_err)?;
    raw.iter()
        .map(|o| match o {
            ObjectJson::Projective(j) => Ok(Object::Projective(proj_from_json(alg, j)?)),
            ObjectJson::Representations(j) => Ok(Object::Window(window_from_json(alg, d, j)?)),
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::heart::resolution::p_presentation;
    use crate::homotopy::iso::{iso_k, DEFAULT_TRIALS};

    const A2: &str = r#"{"p": 1009, "vertices": 2, "arrows": [["a", 1, 2]], "relations": [], "d": 1}"#;

    #[test]
    fn spec_roundtrip() {
        let spec = AlgebraSpec::parse(A2).unwrap();
        let alg = spec.build().unwrap();
        assert_eq!(alg.dim(), 3);
        let again = AlgebraSpec::from_algebra(&alg, 1).build().unwrap();
        assert_eq!(again.dim(), 3);
        let bad = A2.replace("\"d\": 1", "\"d\": 0");
        assert!(matches!(AlgebraSpec::parse(&bad), Err(Error::Spec(_))));
        assert!(matches!(AlgebraSpec::parse("{\n\"p\": 3,"), Err(Error::Parse(m)) if m.starts_with("line 2")));
    }

    #[test]
    fn numeric_arrow_ids_and_relations() {
        let text = r#"{"p": 7, "vertices": 3, "arrows": [[1, 1, 2], [2, 2, 3]], "relations": [[1, 2]], "d": 2}"#;
        let alg = AlgebraSpec::parse(text).unwrap().build().unwrap();
        assert_eq!(alg.dim(), 5);
    }

    #[test]
    fn complexes_roundtrip() {
        let alg = Algebra::linear_rad2(1009, 3);
        let w = WindowComplex::module(&alg, 2, alg.simple(0), 1).unwrap();
        let x = p_presentation(&alg, &w);
        let j = proj_to_json(&alg, &x);
        let back = proj_from_json(&alg, &j).unwrap();
        assert!(iso_k(&alg, &x, &back, DEFAULT_TRIALS, 0).is_yes());
        let text = serde_json::to_string(&j).unwrap();
        assert_eq!(serde_json::to_string(&proj_to_json(&alg, &back)).unwrap(), text);
        let wj = window_to_json(&w);
        assert_eq!(window_from_json(&alg, 2, &wj).unwrap(), w);
    }

    #[test]
    fn homology_outside_window_rejected() {
        let alg = Algebra::linear_a(1009, 2);
        let c = ModComplex::stalk(alg.simple(0), -1);
        assert_eq!(window_from_json(&alg, 1, &mod_to_json(&c)), Err(Error::HomologyOutsideWindow(-1)));
        let objs = format!("[{}]", serde_json::to_string(&mod_to_json(&c)).unwrap());
        assert!(parse_objects(&alg, 1, &objs).is_err());
        let p = format!("[{}]", serde_json::to_string(&proj_to_json(&alg, &ProjComplex::regular(&alg))).unwrap());
        assert!(matches!(parse_objects(&alg, 1, &p).unwrap()[0], Object::Projective(_)));
    }
}
