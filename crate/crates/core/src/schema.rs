//! Serialized interchange formats: the variety description document read by
//! the CLI and the analysis report it writes back out.
//!
//! Both documents are strict JSON: a `schema_version` field gates future
//! format changes and unknown fields are rejected so golden files cannot
//! drift silently. All numeric input is integer; report coordinates are
//! printed exactly (as `p/q` strings over the rationals, residues over a
//! prime field), never as floats, so a fixed seed reproduces a report
//! byte for byte.

use serde::{Deserialize, Serialize};

use crate::classify::{CaseId, CaseLabel, StructuralReport, VarietyModel, Witnesses};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::geometry::builders::{
    cone, conic_in_plane, line_through, linear_map, linear_reembed, plane_through,
    rational_normal_curve, scroll, veronese,
};
use crate::geometry::{MultiPoly, PolyMap, Term};
use crate::linalg::ProjSubspace;
use crate::props::SuiteReport;

/// Version of both document formats. Bump on any field change.
pub const SCHEMA_VERSION: u32 = 1;

fn check_version(v: u32) -> Result<()> {
    if v != SCHEMA_VERSION {
        return Err(Error::InvalidModel(format!(
            "unsupported schema_version {v}, this build reads version {SCHEMA_VERSION}"
        )));
    }
    Ok(())
}

/// One monomial of a raw coordinate polynomial.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TermDoc {
    pub coeff: i64,
    pub exps: Vec<u32>,
}

/// Recipe for one parametrized component. The named builders cover the
/// standard constructions; `raw` accepts an explicit multihomogeneous
/// polynomial map and makes the format closed under serialization.
///
/// The JSON form is a flat object tagged by `"kind"`; each kind takes
/// exactly its own fields and anything else is an error (the conversion
/// goes through a shadow struct because serde's strict mode does not
/// reach inside internally tagged enums).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "BuilderRepr", into = "BuilderRepr")]
pub enum BuilderDoc {
    /// Quadratic embedding of the plane into P^5.
    Veronese,
    /// Plane spanned by three independent points.
    Plane { points: Vec<Vec<i64>> },
    /// Line spanned by two independent points.
    Line { points: Vec<Vec<i64>> },
    /// Linear subspace spanned by the given independent rows.
    Linear { rows: Vec<Vec<i64>> },
    /// Degree-d rational normal curve in P^d.
    RationalNormalCurve { degree: u32 },
    /// Conic through the first and last of three spanning points.
    Conic { points: Vec<Vec<i64>> },
    /// Cone over `base` with the given apex.
    Cone { vertex: Vec<i64>, base: Box<BuilderDoc> },
    /// Ruled surface joining two directrices with a shared domain shape.
    Scroll { a: Box<BuilderDoc>, b: Box<BuilderDoc> },
    /// Explicit coordinate polynomials, one term list per coordinate.
    Raw {
        block_sizes: Vec<usize>,
        multidegree: Vec<u32>,
        coords: Vec<Vec<TermDoc>>,
    },
}

/// Wire form of `BuilderDoc`: every field of every kind, all optional.
/// Strictness happens in two layers: serde rejects field names outside
/// this list, and the conversion rejects fields that do not belong to
/// the named kind.
#[derive(Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct BuilderRepr {
    kind: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    points: Option<Vec<Vec<i64>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    rows: Option<Vec<Vec<i64>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    degree: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    vertex: Option<Vec<i64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    base: Option<Box<BuilderDoc>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    a: Option<Box<BuilderDoc>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    b: Option<Box<BuilderDoc>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    block_sizes: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    multidegree: Option<Vec<u32>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    coords: Option<Vec<Vec<TermDoc>>>,
}

impl BuilderRepr {
    fn bare(kind: &str) -> BuilderRepr {
        BuilderRepr {
            kind: kind.into(),
            points: None,
            rows: None,
            degree: None,
            vertex: None,
            base: None,
            a: None,
            b: None,
            block_sizes: None,
            multidegree: None,
            coords: None,
        }
    }

    fn present(&self) -> Vec<&'static str> {
        let mut p = Vec::new();
        if self.points.is_some() {
            p.push("points");
        }
        if self.rows.is_some() {
            p.push("rows");
        }
        if self.degree.is_some() {
            p.push("degree");
        }
        if self.vertex.is_some() {
            p.push("vertex");
        }
        if self.base.is_some() {
            p.push("base");
        }
        if self.a.is_some() {
            p.push("a");
        }
        if self.b.is_some() {
            p.push("b");
        }
        if self.block_sizes.is_some() {
            p.push("block_sizes");
        }
        if self.multidegree.is_some() {
            p.push("multidegree");
        }
        if self.coords.is_some() {
            p.push("coords");
        }
        p
    }
}

impl TryFrom<BuilderRepr> for BuilderDoc {
    type Error = Error;

    fn try_from(r: BuilderRepr) -> Result<BuilderDoc> {
        let want: &[&str] = match r.kind.as_str() {
            "veronese" => &[],
            "plane" | "line" | "conic" => &["points"],
            "linear" => &["rows"],
            "rational_normal_curve" => &["degree"],
            "cone" => &["vertex", "base"],
            "scroll" => &["a", "b"],
            "raw" => &["block_sizes", "multidegree", "coords"],
            other => {
                return Err(Error::InvalidModel(format!(
                    "unknown builder kind `{other}`"
                )))
            }
        };
        let have = r.present();
        if have != want {
            return Err(Error::InvalidModel(format!(
                "builder kind `{}` takes fields {want:?}, document has {have:?}",
                r.kind
            )));
        }
        Ok(match r.kind.as_str() {
            "veronese" => BuilderDoc::Veronese,
            "plane" => BuilderDoc::Plane {
                points: r.points.unwrap(),
            },
            "line" => BuilderDoc::Line {
                points: r.points.unwrap(),
            },
            "conic" => BuilderDoc::Conic {
                points: r.points.unwrap(),
            },
            "linear" => BuilderDoc::Linear {
                rows: r.rows.unwrap(),
            },
            "rational_normal_curve" => BuilderDoc::RationalNormalCurve {
                degree: r.degree.unwrap(),
            },
            "cone" => BuilderDoc::Cone {
                vertex: r.vertex.unwrap(),
                base: r.base.unwrap(),
            },
            "scroll" => BuilderDoc::Scroll {
                a: r.a.unwrap(),
                b: r.b.unwrap(),
            },
            _ => BuilderDoc::Raw {
                block_sizes: r.block_sizes.unwrap(),
                multidegree: r.multidegree.unwrap(),
                coords: r.coords.unwrap(),
            },
        })
    }
}

impl From<BuilderDoc> for BuilderRepr {
    fn from(d: BuilderDoc) -> BuilderRepr {
        match d {
            BuilderDoc::Veronese => BuilderRepr::bare("veronese"),
            BuilderDoc::Plane { points } => BuilderRepr {
                points: Some(points),
                ..BuilderRepr::bare("plane")
            },
            BuilderDoc::Line { points } => BuilderRepr {
                points: Some(points),
                ..BuilderRepr::bare("line")
            },
            BuilderDoc::Conic { points } => BuilderRepr {
                points: Some(points),
                ..BuilderRepr::bare("conic")
            },
            BuilderDoc::Linear { rows } => BuilderRepr {
                rows: Some(rows),
                ..BuilderRepr::bare("linear")
            },
            BuilderDoc::RationalNormalCurve { degree } => BuilderRepr {
                degree: Some(degree),
                ..BuilderRepr::bare("rational_normal_curve")
            },
            BuilderDoc::Cone { vertex, base } => BuilderRepr {
                vertex: Some(vertex),
                base: Some(base),
                ..BuilderRepr::bare("cone")
            },
            BuilderDoc::Scroll { a, b } => BuilderRepr {
                a: Some(a),
                b: Some(b),
                ..BuilderRepr::bare("scroll")
            },
            BuilderDoc::Raw {
                block_sizes,
                multidegree,
                coords,
            } => BuilderRepr {
                block_sizes: Some(block_sizes),
                multidegree: Some(multidegree),
                coords: Some(coords),
                ..BuilderRepr::bare("raw")
            },
        }
    }
}

impl BuilderDoc {
    pub fn build(&self, label: &str) -> Result<PolyMap> {
        match self {
            BuilderDoc::Veronese => Ok(veronese(label)),
            BuilderDoc::Plane { points } => plane_through(label, points),
            BuilderDoc::Line { points } => line_through(label, points),
            BuilderDoc::Linear { rows } => linear_map(label, rows),
            BuilderDoc::RationalNormalCurve { degree } => {
                rational_normal_curve(label, *degree)
            }
            BuilderDoc::Conic { points } => conic_in_plane(label, points),
            BuilderDoc::Cone { vertex, base } => {
                let base = base.build(&format!("{label}.base"))?;
                cone(label, vertex, &base)
            }
            BuilderDoc::Scroll { a, b } => {
                let a = a.build(&format!("{label}.a"))?;
                let b = b.build(&format!("{label}.b"))?;
                scroll(label, &a, &b)
            }
            BuilderDoc::Raw {
                block_sizes,
                multidegree,
                coords,
            } => {
                let coords = coords
                    .iter()
                    .map(|terms| {
                        let terms = terms
                            .iter()
                            .map(|t| Term {
                                coeff: t.coeff,
                                exps: t.exps.clone(),
                            })
                            .collect();
                        MultiPoly::new(block_sizes.clone(), multidegree.clone(), terms)
                    })
                    .collect::<Result<Vec<_>>>()?;
                PolyMap::new(label, coords)
            }
        }
    }

    /// Lossless encoding of an already-built map.
    pub fn raw_from_map(map: &PolyMap) -> BuilderDoc {
        BuilderDoc::Raw {
            block_sizes: map.block_sizes().to_vec(),
            multidegree: map.multidegree().to_vec(),
            coords: map
                .coords()
                .iter()
                .map(|p| {
                    p.terms()
                        .iter()
                        .map(|t| TermDoc {
                            coeff: t.coeff,
                            exps: t.exps.clone(),
                        })
                        .collect()
                })
                .collect(),
        }
    }
}

/// One component entry: a label, a builder recipe, an optional change of
/// coordinates applied after building, and the ambient dimension the
/// result must land in (a cross-check against silent typos in the data).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ComponentDoc {
    pub label: String,
    pub ambient_dim: usize,
    pub builder: BuilderDoc,
    /// Rows of an injective linear map; row i is the image of the i-th
    /// coordinate point of the built map's target space.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub reembed: Option<Vec<Vec<i64>>>,
}

impl ComponentDoc {
    pub fn build(&self) -> Result<PolyMap> {
        let mut map = self.builder.build(&self.label)?;
        if let Some(rows) = &self.reembed {
            map = linear_reembed(&map, rows)?;
        }
        if map.ambient_dim() != self.ambient_dim {
            return Err(Error::InvalidModel(format!(
                "component `{}` declares ambient dimension {} but builds in dimension {}",
                self.label,
                self.ambient_dim,
                map.ambient_dim()
            )));
        }
        Ok(map)
    }
}

/// Top-level variety description document.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct VarietyDoc {
    pub schema_version: u32,
    pub components: Vec<ComponentDoc>,
}

impl VarietyDoc {
    /// Build and validate the model. Components come back sorted by label,
    /// matching the order reports use.
    pub fn to_model(&self) -> Result<VarietyModel> {
        check_version(self.schema_version)?;
        let components = self
            .components
            .iter()
            .map(ComponentDoc::build)
            .collect::<Result<Vec<_>>>()?;
        VarietyModel::new(components)
    }

    /// Lossless encoding of a model via raw coordinate polynomials.
    pub fn from_model(model: &VarietyModel) -> VarietyDoc {
        VarietyDoc {
            schema_version: SCHEMA_VERSION,
            components: model
                .components()
                .iter()
                .map(|c| ComponentDoc {
                    label: c.label().to_string(),
                    ambient_dim: c.ambient_dim(),
                    builder: BuilderDoc::raw_from_map(c),
                    reembed: None,
                })
                .collect(),
        }
    }

    pub fn from_json(text: &str) -> Result<VarietyDoc> {
        serde_json::from_str(text)
            .map_err(|e| Error::InvalidModel(format!("variety document: {e}")))
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("document serializes");
        s.push('\n');
        s
    }
}

/// Analysis verdict: can the union be isomorphically projected to P^4.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Verdict {
    #[serde(rename = "j-embeddable")]
    JEmbeddable,
    #[serde(rename = "not-j-embeddable")]
    NotJEmbeddable,
}

/// Per-component measurements in a report.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ComponentEntry {
    pub label: String,
    pub dim: usize,
    pub span_dim: i64,
    pub vertex_dim: i64,
    pub secant_dim: i64,
    pub is_linear: bool,
    pub is_cone: bool,
    pub is_veronese: bool,
}

/// Per-pair measurements: the join dimension, the dimension m of the span
/// of the union, and the dimension of L, the intersection of the two
/// component spans.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PairEntry {
    pub i: usize,
    pub j: usize,
    pub join_dim: i64,
    pub m: i64,
    #[serde(rename = "L_dim")]
    pub l_dim: i64,
}

/// Case witnesses with exact printed coordinates: points as coordinate
/// vectors, subspaces as basis matrices (rows span the subspace).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WitnessDoc {
    pub vertex_p: Option<Vec<String>>,
    pub vertex_q: Option<Vec<String>>,
    pub line_l: Option<Vec<Vec<String>>>,
    pub plane_pi: Option<Vec<Vec<String>>>,
    pub flag_h: Option<Vec<Vec<String>>>,
    pub flag_k: Option<Vec<Vec<String>>>,
    pub cone_lines: Vec<Vec<Vec<String>>>,
    pub tangency_points: Vec<Vec<String>>,
}

fn point_doc<F: Field>(f: &F, p: &[F::Elem]) -> Vec<String> {
    p.iter().map(|x| f.format(x)).collect()
}

fn subspace_doc<F: Field>(f: &F, s: &ProjSubspace<F>) -> Vec<Vec<String>> {
    (0..s.rank()).map(|i| point_doc(f, s.basis().row(i))).collect()
}

impl WitnessDoc {
    pub fn from_witnesses<F: Field>(f: &F, w: &Witnesses<F>) -> WitnessDoc {
        WitnessDoc {
            vertex_p: w.vertex_p.as_ref().map(|p| point_doc(f, p)),
            vertex_q: w.vertex_q.as_ref().map(|p| point_doc(f, p)),
            line_l: w.line_l.as_ref().map(|s| subspace_doc(f, s)),
            plane_pi: w.plane_pi.as_ref().map(|s| subspace_doc(f, s)),
            flag_h: w.flag_h.as_ref().map(|s| subspace_doc(f, s)),
            flag_k: w.flag_k.as_ref().map(|s| subspace_doc(f, s)),
            cone_lines: w.cone_lines.iter().map(|s| subspace_doc(f, s)).collect(),
            tangency_points: w.tangency_points.iter().map(|p| point_doc(f, p)).collect(),
        }
    }

    fn is_empty(&self) -> bool {
        self.vertex_p.is_none()
            && self.vertex_q.is_none()
            && self.line_l.is_none()
            && self.plane_pi.is_none()
            && self.flag_h.is_none()
            && self.flag_k.is_none()
            && self.cone_lines.is_empty()
            && self.tangency_points.is_empty()
    }
}

/// Full analysis report. Field names are stable within a schema version;
/// coordinates are exact strings, everything else is integer or boolean,
/// so serialization is reproducible byte for byte.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ReportDoc {
    pub schema_version: u32,
    pub seed: u64,
    pub trials: usize,
    pub field: String,
    pub ambient_dim: usize,
    pub components: Vec<ComponentEntry>,
    pub pairs: Vec<PairEntry>,
    pub total_span_dim: i64,
    pub verdict: Verdict,
    pub case_id: CaseId,
    pub witnesses: WitnessDoc,
    /// Triples (i, j, join dimension) with join dimension above 4;
    /// secant obstructions appear with i == j.
    pub offending_pairs: Vec<(usize, usize, i64)>,
    pub lints: Vec<String>,
}

impl ReportDoc {
    pub fn build<F: Field>(
        f: &F,
        seed: u64,
        trials: usize,
        model: &VarietyModel,
        report: &StructuralReport<F>,
        label: &CaseLabel<F>,
    ) -> ReportDoc {
        ReportDoc {
            schema_version: SCHEMA_VERSION,
            seed,
            trials,
            field: f.name(),
            ambient_dim: model.ambient_dim(),
            components: report
                .components
                .iter()
                .map(|c| ComponentEntry {
                    label: c.label.clone(),
                    dim: c.dim,
                    span_dim: c.span_dim,
                    vertex_dim: c.vertex_dim,
                    secant_dim: c.secant_dim,
                    is_linear: c.is_linear,
                    is_cone: c.is_cone,
                    is_veronese: c.is_veronese,
                })
                .collect(),
            pairs: report
                .pairs
                .iter()
                .map(|p| PairEntry {
                    i: p.i,
                    j: p.j,
                    join_dim: p.join_dim,
                    m: p.m,
                    l_dim: p.l_dim,
                })
                .collect(),
            total_span_dim: report.total_span_dim,
            verdict: if report.j_embeddable {
                Verdict::JEmbeddable
            } else {
                Verdict::NotJEmbeddable
            },
            case_id: label.case,
            witnesses: WitnessDoc::from_witnesses(f, &label.witnesses),
            offending_pairs: report.offending_pairs(),
            lints: report.lints.clone(),
        }
    }

    pub fn from_json(text: &str) -> Result<ReportDoc> {
        let doc: ReportDoc = serde_json::from_str(text)
            .map_err(|e| Error::InvalidModel(format!("report document: {e}")))?;
        check_version(doc.schema_version)?;
        Ok(doc)
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    /// Plain-text rendering of the same data.
    pub fn render_text(&self) -> String {
        use std::fmt::Write;
        let mut out = String::new();
        let w = &mut out;
        let _ = writeln!(
            w,
            "union of {} component(s) in P^{}, field {}, seed {}, trials {}",
            self.components.len(),
            self.ambient_dim,
            self.field,
            self.seed,
            self.trials
        );
        for c in &self.components {
            let mut flags = Vec::new();
            if c.is_linear {
                flags.push("linear");
            }
            if c.is_cone {
                flags.push("cone");
            }
            if c.is_veronese {
                flags.push("veronese");
            }
            let flags = if flags.is_empty() {
                String::new()
            } else {
                format!("  [{}]", flags.join(", "))
            };
            let _ = writeln!(
                w,
                "  {}: dim {}, span {}, vertex {}, secant {}{}",
                c.label, c.dim, c.span_dim, c.vertex_dim, c.secant_dim, flags
            );
        }
        for p in &self.pairs {
            let (a, b) = (&self.components[p.i].label, &self.components[p.j].label);
            let _ = writeln!(
                w,
                "  join [{a}; {b}] = {}  (m = {}, dim L = {})",
                p.join_dim, p.m, p.l_dim
            );
        }
        let _ = writeln!(w, "total span: {}", self.total_span_dim);
        let verdict = match self.verdict {
            Verdict::JEmbeddable => "isomorphically projectable to P^4",
            Verdict::NotJEmbeddable => "NOT isomorphically projectable to P^4",
        };
        let _ = writeln!(w, "verdict: {verdict}");
        let _ = writeln!(w, "case: {}", self.case_id);
        if !self.offending_pairs.is_empty() {
            for &(i, j, d) in &self.offending_pairs {
                if i == j {
                    let _ = writeln!(
                        w,
                        "  obstruction: secant variety of {} has dimension {}",
                        self.components[i].label, d
                    );
                } else {
                    let _ = writeln!(
                        w,
                        "  obstruction: join [{}; {}] has dimension {}",
                        self.components[i].label, self.components[j].label, d
                    );
                }
            }
        }
        if !self.witnesses.is_empty() {
            let _ = writeln!(w, "witnesses:");
            let pt = |v: &Vec<String>| format!("({})", v.join(" : "));
            let rows = |m: &Vec<Vec<String>>| {
                m.iter().map(&pt).collect::<Vec<_>>().join(", ")
            };
            if let Some(p) = &self.witnesses.vertex_p {
                let _ = writeln!(w, "  vertex P = {}", pt(p));
            }
            if let Some(q) = &self.witnesses.vertex_q {
                let _ = writeln!(w, "  vertex Q = {}", pt(q));
            }
            if let Some(l) = &self.witnesses.line_l {
                let _ = writeln!(w, "  line l spanned by {}", rows(l));
            }
            if let Some(pi) = &self.witnesses.plane_pi {
                let _ = writeln!(w, "  plane pi spanned by {}", rows(pi));
            }
            if let Some(h) = &self.witnesses.flag_h {
                let _ = writeln!(w, "  flat H spanned by {}", rows(h));
            }
            if let Some(k) = &self.witnesses.flag_k {
                let _ = writeln!(w, "  flat K spanned by {}", rows(k));
            }
            for l in &self.witnesses.cone_lines {
                let _ = writeln!(w, "  cone line spanned by {}", rows(l));
            }
            for t in &self.witnesses.tangency_points {
                let _ = writeln!(w, "  tangency point {}", pt(t));
            }
        }
        if !self.lints.is_empty() {
            let _ = writeln!(w, "lints:");
            for l in &self.lints {
                let _ = writeln!(w, "  {l}");
            }
        }
        out
    }
}

/// Serialized outcome of a property-suite run.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PropsDoc {
    pub schema_version: u32,
    pub seed: u64,
    pub field: String,
    pub instances_per_clause: usize,
    pub passed: bool,
    pub suites: Vec<SuiteReport>,
}

impl PropsDoc {
    pub fn build<F: Field>(
        f: &F,
        seed: u64,
        instances_per_clause: usize,
        suites: Vec<SuiteReport>,
    ) -> PropsDoc {
        PropsDoc {
            schema_version: SCHEMA_VERSION,
            seed,
            field: f.name(),
            instances_per_clause,
            passed: suites.iter().all(SuiteReport::passed),
            suites,
        }
    }

    pub fn from_json(text: &str) -> Result<PropsDoc> {
        let doc: PropsDoc = serde_json::from_str(text)
            .map_err(|e| Error::InvalidModel(format!("props document: {e}")))?;
        check_version(doc.schema_version)?;
        Ok(doc)
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("props report serializes");
        s.push('\n');
        s
    }

    /// Pass/fail matrix, one line per clause, violations listed with the
    /// seed that reproduces each as instance zero of a rerun.
    pub fn render_text(&self) -> String {
        use std::fmt::Write;
        let mut out = String::new();
        let w = &mut out;
        let _ = writeln!(
            w,
            "property suites: field {}, seed {}, {} instance(s) per clause",
            self.field, self.seed, self.instances_per_clause
        );
        let mut failed = 0usize;
        for s in &self.suites {
            for c in &s.clauses {
                let tag = if c.violations.is_empty() {
                    "PASS"
                } else {
                    failed += 1;
                    "FAIL"
                };
                let _ = writeln!(
                    w,
                    "  {tag} {} :: {} ({} instances, {} violations)",
                    s.suite,
                    c.clause,
                    c.instances,
                    c.violations.len()
                );
                for v in &c.violations {
                    let _ = writeln!(w, "       repro seed {}: {}", v.repro_seed, v.detail);
                }
            }
        }
        if failed == 0 {
            let _ = writeln!(w, "all clauses passed");
        } else {
            let _ = writeln!(w, "{failed} clause(s) failed");
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classify::analyze;
    use crate::corpus::golden_corpus;
    use crate::field::Rationals;
    use crate::terracini::GenericityConfig;

    fn sample_doc() -> VarietyDoc {
        VarietyDoc {
            schema_version: SCHEMA_VERSION,
            components: vec![
                ComponentDoc {
                    label: "Y".into(),
                    ambient_dim: 5,
                    builder: BuilderDoc::Veronese,
                    reembed: None,
                },
                ComponentDoc {
                    label: "B".into(),
                    ambient_dim: 5,
                    builder: BuilderDoc::Plane {
                        points: vec![
                            vec![1, 0, 0, 0, 0, 0],
                            vec![0, 1, 0, 0, 0, 0],
                            vec![0, 0, 0, 1, 0, 0],
                        ],
                    },
                    reembed: None,
                },
            ],
        }
    }

    #[test]
    fn documents_build_and_round_trip() {
        let doc = sample_doc();
        let text = doc.to_json();
        let back = VarietyDoc::from_json(&text).unwrap();
        assert_eq!(doc, back);
        let model = back.to_model().unwrap();
        assert_eq!(model.components().len(), 2);
        // VarietyModel sorts by label.
        assert_eq!(model.components()[0].label(), "B");
    }

    #[test]
    fn raw_encoding_is_lossless() {
        let model = sample_doc().to_model().unwrap();
        let doc = VarietyDoc::from_model(&model);
        let again = doc.to_model().unwrap();
        for (a, b) in model.components().iter().zip(again.components()) {
            assert_eq!(a.label(), b.label());
            assert_eq!(a.coords(), b.coords());
        }
        // And survives a JSON round trip unchanged.
        let back = VarietyDoc::from_json(&doc.to_json()).unwrap();
        assert_eq!(doc, back);
    }

    #[test]
    fn corpus_models_survive_raw_round_trip() {
        for case in golden_corpus(7).unwrap().iter().take(6) {
            let doc = VarietyDoc::from_model(&case.model);
            let again = doc.to_model().unwrap();
            for (a, b) in case.model.components().iter().zip(again.components()) {
                assert_eq!(a.coords(), b.coords(), "case {}", case.name);
            }
        }
    }

    #[test]
    fn unknown_fields_are_rejected() {
        let text = r#"{"schema_version":1,"components":[],"extra":true}"#;
        assert!(VarietyDoc::from_json(text).is_err());
        let text = r#"{"schema_version":1,"components":[
            {"label":"Y","ambient_dim":5,"builder":{"kind":"veronese","degree":2}}]}"#;
        assert!(VarietyDoc::from_json(text).is_err());
    }

    #[test]
    fn wrong_schema_version_is_rejected() {
        let mut doc = sample_doc();
        doc.schema_version = 99;
        let text = doc.to_json();
        let parsed = VarietyDoc::from_json(&text).unwrap();
        assert!(parsed.to_model().is_err());
    }

    #[test]
    fn ambient_declaration_is_checked() {
        let mut doc = sample_doc();
        doc.components[0].ambient_dim = 4;
        assert!(doc.to_model().is_err());
    }

    #[test]
    fn reembed_rows_are_applied() {
        let doc = VarietyDoc {
            schema_version: SCHEMA_VERSION,
            components: vec![ComponentDoc {
                label: "C".into(),
                ambient_dim: 4,
                builder: BuilderDoc::RationalNormalCurve { degree: 2 },
                reembed: Some(vec![
                    vec![1, 0, 0, 0, 0],
                    vec![0, 1, 0, 0, 0],
                    vec![0, 0, 1, 0, 0],
                ]),
            }],
        };
        let model = doc.to_model().unwrap();
        assert_eq!(model.components()[0].ambient_dim(), 4);
    }

    #[test]
    fn props_doc_round_trips_and_renders() {
        let f = Rationals;
        let suites = crate::props::all_suites(&f, 2, 5).unwrap();
        let doc = PropsDoc::build(&f, 5, 2, suites);
        assert!(doc.passed);
        let text = doc.to_json();
        let back = PropsDoc::from_json(&text).unwrap();
        assert_eq!(doc, back);
        assert!(doc.render_text().contains("PASS"));
    }

    #[test]
    fn report_serializes_deterministically_and_round_trips() {
        let f = Rationals;
        let model = sample_doc().to_model().unwrap();
        let cfg = GenericityConfig::new(3);
        let report = analyze(&f, &model, &cfg).unwrap();
        let label = crate::classify::classify(&f, &model, &report, &cfg).unwrap();
        let doc = ReportDoc::build(&f, 3, cfg.trials, &model, &report, &label);
        let a = doc.to_json();
        let b = doc.to_json();
        assert_eq!(a, b);
        let back = ReportDoc::from_json(&a).unwrap();
        assert_eq!(doc, back);
        assert_eq!(back.to_json(), a);
        assert!(!doc.render_text().is_empty());
    }
}
