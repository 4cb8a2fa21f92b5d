//! Structural analysis of unions of parametrized surfaces and the decision
//! procedure on top of it. A union embeds into P^4 by a projection that is
//! an isomorphism on the variety exactly when every pairwise join, secant
//! varieties included, has dimension at most 4; `analyze` computes those
//! dimensions and `classify` names the geometric shape of embeddable
//! unions, returning coordinate witnesses for the shape's special points,
//! lines and flags.

mod tangency;
mod tree;

pub use tangency::locate_veronese_tangency;
pub use tree::{classify_pair, classify_union};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::Field;
use crate::geometry::PolyMap;
use crate::linalg::ProjSubspace;
use crate::terracini::{
    join_dimension, secant_dimension, span_subspace, vertex, GenericityConfig,
};

/// A union of parametrized components sharing one ambient projective space.
/// Components are sorted by label at construction so every derived report
/// is independent of input order.
#[derive(Clone, Debug)]
pub struct VarietyModel {
    ambient_dim: usize,
    components: Vec<PolyMap>,
}

impl VarietyModel {
    pub fn new(components: Vec<PolyMap>) -> Result<Self> {
        let Some(first) = components.first() else {
            return Err(Error::InvalidModel(
                "a model needs at least one component".into(),
            ));
        };
        let ambient_dim = first.ambient_dim();
        for c in &components {
            if c.ambient_dim() != ambient_dim {
                return Err(Error::AmbientMismatch(ambient_dim, c.ambient_dim()));
            }
            if c.label().is_empty() {
                return Err(Error::InvalidModel("empty component label".into()));
            }
        }
        let mut components = components;
        components.sort_by(|a, b| a.label().cmp(b.label()));
        for w in components.windows(2) {
            if w[0].label() == w[1].label() {
                return Err(Error::InvalidModel(format!(
                    "duplicate component label `{}`",
                    w[0].label()
                )));
            }
        }
        Ok(VarietyModel {
            ambient_dim,
            components,
        })
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn components(&self) -> &[PolyMap] {
        &self.components
    }
}

/// Intrinsic measurements of one component. The boolean flags are all
/// derived from the three measured quantities, never recomputed, so a
/// report can not disagree with itself.
#[derive(Clone, Debug)]
pub struct ComponentReport<F: Field> {
    pub label: String,
    pub dim: usize,
    pub span: ProjSubspace<F>,
    pub span_dim: i64,
    pub vertex: ProjSubspace<F>,
    pub vertex_dim: i64,
    pub secant_dim: i64,
    pub is_linear: bool,
    pub is_cone: bool,
    pub is_veronese: bool,
}

impl<F: Field> ComponentReport<F> {
    fn measure(f: &F, v: &PolyMap, cfg: &GenericityConfig) -> Result<Self> {
        let span = span_subspace(f, v, cfg)?;
        let vert = vertex(f, v, cfg)?;
        let secant = secant_dimension(f, v, cfg)?.value;
        let dim = v.dim_source();
        let span_dim = span.dim();
        let is_linear = span_dim == dim as i64;
        let is_cone = !vert.is_empty() && !is_linear;
        let is_veronese = dim == 2 && span_dim == 5 && secant == 4 && vert.is_empty();
        Ok(ComponentReport {
            label: v.label().to_string(),
            dim,
            span_dim,
            vertex_dim: vert.dim(),
            span,
            vertex: vert,
            secant_dim: secant,
            is_linear,
            is_cone,
            is_veronese,
        })
    }

    /// The vertex as a point when it is zero-dimensional.
    pub fn vertex_point(&self) -> Option<Vec<F::Elem>> {
        if self.vertex.dim() == 0 {
            Some(self.vertex.basis().row(0).to_vec())
        } else {
            None
        }
    }
}

/// Joint measurements of one unordered component pair.
#[derive(Clone, Debug)]
pub struct PairReport<F: Field> {
    pub i: usize,
    pub j: usize,
    pub join_dim: i64,
    /// Dimension of the span of the union of the two component spans.
    pub m: i64,
    /// Intersection of the two component spans.
    pub l: ProjSubspace<F>,
    pub l_dim: i64,
}

/// Everything `analyze` measures about a model, plus the embeddability
/// verdict those measurements imply.
#[derive(Clone, Debug)]
pub struct StructuralReport<F: Field> {
    pub components: Vec<ComponentReport<F>>,
    pub pairs: Vec<PairReport<F>>,
    pub total_span_dim: i64,
    pub j_embeddable: bool,
    pub lints: Vec<String>,
}

impl<F: Field> StructuralReport<F> {
    /// Pair lookup by component indices, either order.
    pub fn pair(&self, i: usize, j: usize) -> &PairReport<F> {
        let (a, b) = if i < j { (i, j) } else { (j, i) };
        self.pairs
            .iter()
            .find(|p| p.i == a && p.j == b)
            .expect("pair reports cover all index pairs")
    }

    /// Pairs whose join exceeds dimension 4, the obstructions to
    /// embeddability. Secant obstructions appear as (i, i).
    pub fn offending_pairs(&self) -> Vec<(usize, usize, i64)> {
        let mut out: Vec<(usize, usize, i64)> = self
            .components
            .iter()
            .enumerate()
            .filter(|(_, c)| c.secant_dim > 4)
            .map(|(i, c)| (i, i, c.secant_dim))
            .collect();
        out.extend(
            self.pairs
                .iter()
                .filter(|p| p.join_dim > 4)
                .map(|p| (p.i, p.j, p.join_dim)),
        );
        out
    }
}

/// Measures every component and every pair of a model. Components and
/// pairs are processed in parallel; each measurement derives its own RNG
/// from the seed and the participating labels, so the schedule cannot
/// change any result.
pub fn analyze<F: Field>(
    f: &F,
    model: &VarietyModel,
    cfg: &GenericityConfig,
) -> Result<StructuralReport<F>> {
    let maps = model.components();
    let components: Vec<ComponentReport<F>> = maps
        .par_iter()
        .map(|v| {
            ComponentReport::measure(f, v, cfg).map_err(|e| match e {
                Error::Genericity(msg) => {
                    Error::Genericity(format!("component `{}`: {msg}", v.label()))
                }
                other => other,
            })
        })
        .collect::<Result<_>>()?;

    let n = maps.len();
    let mut idx = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            idx.push((i, j));
        }
    }
    let pairs: Vec<PairReport<F>> = idx
        .par_iter()
        .map(|&(i, j)| {
            let join = join_dimension(f, &maps[i], &maps[j], cfg).map_err(|e| match e {
                Error::Genericity(msg) => Error::Genericity(format!(
                    "pair (`{}`, `{}`): {msg}",
                    maps[i].label(),
                    maps[j].label()
                )),
                other => other,
            })?;
            let m = components[i].span.span2(&components[j].span)?.dim();
            let l = components[i].span.intersect(&components[j].span)?;
            Ok(PairReport {
                i,
                j,
                join_dim: join.value,
                m,
                l_dim: l.dim(),
                l,
            })
        })
        .collect::<Result<_>>()?;

    let mut total = ProjSubspace::empty(f.clone(), model.ambient_dim());
    for c in &components {
        total = total.span2(&c.span)?;
    }

    let j_embeddable = components.iter().all(|c| c.secant_dim <= 4)
        && pairs.iter().all(|p| p.join_dim <= 4);

    let mut lints = Vec::new();
    for p in &pairs {
        if components[p.i].span == components[p.j].span {
            lints.push(format!(
                "components `{}` and `{}` have identical linear spans; duplicated geometry?",
                components[p.i].label, components[p.j].label
            ));
        }
    }
    for c in &components {
        if c.dim != 2 {
            lints.push(format!(
                "component `{}` is {}-dimensional; only surfaces are classifiable",
                c.label, c.dim
            ));
        }
    }

    Ok(StructuralReport {
        components,
        pairs,
        total_span_dim: total.dim(),
        j_embeddable,
        lints,
    })
}

/// The classification outcome vocabulary. Tokens are stable identifiers
/// used in reports and golden files.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum CaseId {
    #[serde(rename = "Irr-LowSpan")]
    IrrLowSpan,
    #[serde(rename = "Irr-Veronese")]
    IrrVeronese,
    #[serde(rename = "Irr-Cone")]
    IrrCone,
    #[serde(rename = "Pair-1")]
    Pair1,
    #[serde(rename = "Pair-2")]
    Pair2,
    #[serde(rename = "Pair-3")]
    Pair3,
    #[serde(rename = "Pair-4")]
    Pair4,
    #[serde(rename = "Pair-5")]
    Pair5,
    #[serde(rename = "Pair-6")]
    Pair6,
    #[serde(rename = "Multi-Ver-TangentPlanes")]
    MultiVerTangentPlanes,
    #[serde(rename = "Multi-CommonVertex")]
    MultiCommonVertex,
    #[serde(rename = "Con4Nuovo-i")]
    Con4NuovoI,
    #[serde(rename = "Con4Nuovo-ii")]
    Con4NuovoII,
    #[serde(rename = "Con4-i")]
    Con4I,
    #[serde(rename = "Con4-ii")]
    Con4II,
    #[serde(rename = "Con4-iii")]
    Con4III,
    #[serde(rename = "Con4-iv")]
    Con4IV,
    #[serde(rename = "Con4-v")]
    Con4V,
    #[serde(rename = "Lungo-i")]
    LungoI,
    #[serde(rename = "Lungo-ii")]
    LungoII,
    #[serde(rename = "Lungo-iii")]
    LungoIII,
    #[serde(rename = "Lungo-iv")]
    LungoIV,
    #[serde(rename = "Lungo-v")]
    LungoV,
    #[serde(rename = "Lungo-vi")]
    LungoVI,
    #[serde(rename = "Solo3-Planes")]
    Solo3Planes,
    #[serde(rename = "Solo3-Mixed")]
    Solo3Mixed,
    #[serde(rename = "LowSpan-Union")]
    LowSpanUnion,
    #[serde(rename = "NotJEmbeddable")]
    NotJEmbeddable,
    #[serde(rename = "Unmatched")]
    Unmatched,
}

impl CaseId {
    pub fn token(self) -> &'static str {
        match self {
            CaseId::IrrLowSpan => "Irr-LowSpan",
            CaseId::IrrVeronese => "Irr-Veronese",
            CaseId::IrrCone => "Irr-Cone",
            CaseId::Pair1 => "Pair-1",
            CaseId::Pair2 => "Pair-2",
            CaseId::Pair3 => "Pair-3",
            CaseId::Pair4 => "Pair-4",
            CaseId::Pair5 => "Pair-5",
            CaseId::Pair6 => "Pair-6",
            CaseId::MultiVerTangentPlanes => "Multi-Ver-TangentPlanes",
            CaseId::MultiCommonVertex => "Multi-CommonVertex",
            CaseId::Con4NuovoI => "Con4Nuovo-i",
            CaseId::Con4NuovoII => "Con4Nuovo-ii",
            CaseId::Con4I => "Con4-i",
            CaseId::Con4II => "Con4-ii",
            CaseId::Con4III => "Con4-iii",
            CaseId::Con4IV => "Con4-iv",
            CaseId::Con4V => "Con4-v",
            CaseId::LungoI => "Lungo-i",
            CaseId::LungoII => "Lungo-ii",
            CaseId::LungoIII => "Lungo-iii",
            CaseId::LungoIV => "Lungo-iv",
            CaseId::LungoV => "Lungo-v",
            CaseId::LungoVI => "Lungo-vi",
            CaseId::Solo3Planes => "Solo3-Planes",
            CaseId::Solo3Mixed => "Solo3-Mixed",
            CaseId::LowSpanUnion => "LowSpan-Union",
            CaseId::NotJEmbeddable => "NotJEmbeddable",
            CaseId::Unmatched => "Unmatched",
        }
    }
}

impl std::fmt::Display for CaseId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.token())
    }
}

/// Coordinate witnesses backing a case assignment: the special point(s),
/// line, plane and higher flags the matched shape is built around. Fields
/// are populated per case; absent ones are None or empty.
#[derive(Clone, Debug)]
pub struct Witnesses<F: Field> {
    pub vertex_p: Option<Vec<F::Elem>>,
    pub vertex_q: Option<Vec<F::Elem>>,
    pub line_l: Option<ProjSubspace<F>>,
    pub plane_pi: Option<ProjSubspace<F>>,
    pub flag_h: Option<ProjSubspace<F>>,
    pub flag_k: Option<ProjSubspace<F>>,
    pub cone_lines: Vec<ProjSubspace<F>>,
    pub tangency_points: Vec<Vec<F::Elem>>,
}

impl<F: Field> Witnesses<F> {
    pub fn none() -> Self {
        Witnesses {
            vertex_p: None,
            vertex_q: None,
            line_l: None,
            plane_pi: None,
            flag_h: None,
            flag_k: None,
            cone_lines: Vec::new(),
            tangency_points: Vec::new(),
        }
    }
}

#[derive(Clone, Debug)]
pub struct CaseLabel<F: Field> {
    pub case: CaseId,
    pub witnesses: Witnesses<F>,
}

impl<F: Field> CaseLabel<F> {
    pub fn bare(case: CaseId) -> Self {
        CaseLabel {
            case,
            witnesses: Witnesses::none(),
        }
    }
}

/// Assigns the classification case. Requires a surface model (every
/// component 2-dimensional), a report produced by `analyze` on the same
/// model, and the genericity configuration for the handful of extra
/// tangent queries some cases need.
///
/// The dispatch order fixes all clause overlaps deterministically: the
/// embeddability verdict first, then branches by decreasing maximal
/// component span, and inside a branch the lowest-numbered clause wins.
/// `Unmatched` means the measurements fit no shape on the list, which on
/// verified inputs indicates a genericity failure rather than a new shape.
pub fn classify<F: Field>(
    f: &F,
    model: &VarietyModel,
    report: &StructuralReport<F>,
    cfg: &GenericityConfig,
) -> Result<CaseLabel<F>> {
    if report.components.len() != model.components().len() {
        return Err(Error::DomainMismatch(
            "report does not match model (component count)".into(),
        ));
    }
    for (c, v) in report.components.iter().zip(model.components()) {
        if c.label != v.label() {
            return Err(Error::DomainMismatch(
                "report does not match model (labels)".into(),
            ));
        }
        if v.dim_source() != 2 {
            return Err(Error::InvalidModel(format!(
                "component `{}` is {}-dimensional; classification covers unions of surfaces",
                v.label(),
                v.dim_source()
            )));
        }
    }
    if !report.j_embeddable {
        return Ok(CaseLabel::bare(CaseId::NotJEmbeddable));
    }
    if model.components().len() == 1 {
        return Ok(classify_irreducible(&report.components[0]));
    }
    tree::classify_reducible(f, model, report, cfg)
}

/// Single-component case assignment. Inside the embeddable regime the
/// trichotomy is: small span, or the quadratic embedding of the plane, or
/// a cone; anything else means the measurements are inconsistent.
pub fn classify_irreducible<F: Field>(comp: &ComponentReport<F>) -> CaseLabel<F> {
    if comp.span_dim <= 4 {
        return CaseLabel::bare(CaseId::IrrLowSpan);
    }
    if comp.is_veronese {
        return CaseLabel::bare(CaseId::IrrVeronese);
    }
    if comp.is_cone {
        let mut w = Witnesses::none();
        w.vertex_p = comp.vertex_point();
        if comp.vertex.dim() == 1 {
            w.line_l = Some(comp.vertex.clone());
        }
        return CaseLabel {
            case: CaseId::IrrCone,
            witnesses: w,
        };
    }
    CaseLabel::bare(CaseId::Unmatched)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rationals;
    use crate::geometry::builders::{plane_through, veronese};

    fn cfg() -> GenericityConfig {
        GenericityConfig::new(11)
    }

    fn basis_vec(len: usize, i: usize) -> Vec<i64> {
        let mut v = vec![0; len];
        v[i] = 1;
        v
    }

    #[test]
    fn model_sorts_components_and_rejects_duplicates() {
        let b = plane_through("b", &[basis_vec(6, 0), basis_vec(6, 1), basis_vec(6, 2)]).unwrap();
        let a = veronese("a");
        let m = VarietyModel::new(vec![b.clone(), a.clone()]).unwrap();
        assert_eq!(m.components()[0].label(), "a");
        assert_eq!(m.components()[1].label(), "b");
        assert!(VarietyModel::new(vec![a.clone(), a]).is_err());
        assert!(VarietyModel::new(vec![]).is_err());
    }

    #[test]
    fn analyze_flags_are_consistent_with_measurements() {
        let m = VarietyModel::new(vec![
            veronese("y"),
            plane_through("b", &[basis_vec(6, 0), basis_vec(6, 1), basis_vec(6, 3)]).unwrap(),
        ])
        .unwrap();
        let rep = analyze(&Rationals, &m, &cfg()).unwrap();
        let y = &rep.components[1];
        assert!(y.is_veronese && !y.is_cone && !y.is_linear);
        assert_eq!(y.secant_dim, 4);
        let b = &rep.components[0];
        assert!(b.is_linear && !b.is_cone);
        assert_eq!(b.span_dim, 2);
        assert_eq!(rep.pairs.len(), 1);
        assert_eq!(rep.total_span_dim, 5);
    }

    #[test]
    fn case_tokens_round_trip_through_json() {
        for case in [
            CaseId::Pair3,
            CaseId::Con4NuovoI,
            CaseId::LungoVI,
            CaseId::Solo3Planes,
            CaseId::NotJEmbeddable,
        ] {
            let s = serde_json::to_string(&case).unwrap();
            assert_eq!(s, format!("\"{}\"", case.token()));
            let back: CaseId = serde_json::from_str(&s).unwrap();
            assert_eq!(back, case);
        }
    }
}
