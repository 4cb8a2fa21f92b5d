//! The reducible branch of the classification decision tree. Dispatch is
//! by decreasing maximal component span: a component spanning a P^5 or
//! more, then a component spanning a P^4, then pairs of 3-dimensional
//! spans stretching past a P^4 together, then everything small. Inside a
//! branch, clauses are tried lowest-numbered first, so overlapping shapes
//! resolve deterministically. Every positive answer re-verifies the full
//! clause membership of every component; a failed verification falls
//! through, and a union fitting nothing is Unmatched.

use crate::error::{Error, Result};
use crate::field::Field;
use crate::geometry::PolyMap;
use crate::linalg::ProjSubspace;
use crate::terracini::{tangent_meets, GenericityConfig};

use super::tangency::locate_veronese_tangency;
use super::{
    CaseId, CaseLabel, ComponentReport, PairReport, StructuralReport, VarietyModel, Witnesses,
};

struct Ctx<'a, F: Field> {
    f: &'a F,
    model: &'a VarietyModel,
    report: &'a StructuralReport<F>,
    cfg: &'a GenericityConfig,
}

impl<'a, F: Field> Ctx<'a, F> {
    fn r(&self) -> usize {
        self.report.components.len()
    }

    fn comp(&self, i: usize) -> &ComponentReport<F> {
        &self.report.components[i]
    }

    fn map(&self, i: usize) -> &PolyMap {
        &self.model.components()[i]
    }

    fn pair(&self, i: usize, j: usize) -> &PairReport<F> {
        self.report.pair(i, j)
    }

    fn others(&self, i: usize) -> Vec<usize> {
        (0..self.r()).filter(|&j| j != i).collect()
    }

    fn is_plane(&self, i: usize) -> bool {
        self.comp(i).is_linear
    }

    /// The vertex as a point for cones with zero-dimensional vertex.
    fn cone_point_vertex(&self, i: usize) -> Option<Vec<F::Elem>> {
        let c = self.comp(i);
        if c.is_cone {
            c.vertex_point()
        } else {
            None
        }
    }

    fn is_cone_with_vertex(&self, i: usize, p: &[F::Elem]) -> bool {
        match self.cone_point_vertex(i) {
            Some(v) => ProjSubspace::points_equal(self.f, &v, p),
            None => false,
        }
    }

    fn plane_through(&self, i: usize, p: &[F::Elem]) -> Result<bool> {
        Ok(self.is_plane(i) && self.comp(i).span.contains_point(p)?)
    }

    fn meets(&self, a: &ProjSubspace<F>, b: &ProjSubspace<F>) -> Result<bool> {
        Ok(!a.intersect(b)?.is_empty())
    }

    /// Whether every generic tangent space of component i meets the
    /// target. Planes are their own tangent spaces everywhere, so for
    /// them the question is decided exactly by one intersection.
    fn tangent_meets_target(&self, i: usize, target: &ProjSubspace<F>) -> Result<bool> {
        if self.is_plane(i) {
            return self.meets(&self.comp(i).span, target);
        }
        tangent_meets(self.f, self.map(i), target, self.cfg)
    }

    /// Indices whose pair with `i` spans a P^5 or more.
    fn companions(&self, i: usize) -> Vec<usize> {
        self.others(i)
            .into_iter()
            .filter(|&j| self.pair(i, j).m >= 5)
            .collect()
    }

    fn unmatched(&self) -> Result<CaseLabel<F>> {
        Ok(CaseLabel::bare(CaseId::Unmatched))
    }
}

pub(super) fn classify_reducible<F: Field>(
    f: &F,
    model: &VarietyModel,
    report: &StructuralReport<F>,
    cfg: &GenericityConfig,
) -> Result<CaseLabel<F>> {
    let ctx = Ctx {
        f,
        model,
        report,
        cfg,
    };
    if ctx.r() == 2 {
        if ctx.pair(0, 1).m >= 5 {
            return pair_tree(&ctx);
        }
        return small_span_tree(&ctx);
    }
    union_tree(&ctx)
}

/// Two components whose spans together reach a P^5 or beyond.
pub fn classify_pair<F: Field>(
    f: &F,
    model: &VarietyModel,
    report: &StructuralReport<F>,
    cfg: &GenericityConfig,
) -> Result<CaseLabel<F>> {
    if report.components.len() != 2 {
        return Err(Error::DomainMismatch(
            "pair classification needs exactly two components".into(),
        ));
    }
    let ctx = Ctx {
        f,
        model,
        report,
        cfg,
    };
    if ctx.pair(0, 1).m >= 5 {
        pair_tree(&ctx)
    } else {
        small_span_tree(&ctx)
    }
}

/// Three or more components.
pub fn classify_union<F: Field>(
    f: &F,
    model: &VarietyModel,
    report: &StructuralReport<F>,
    cfg: &GenericityConfig,
) -> Result<CaseLabel<F>> {
    if report.components.len() < 3 {
        return Err(Error::DomainMismatch(
            "union classification needs at least three components".into(),
        ));
    }
    let ctx = Ctx {
        f,
        model,
        report,
        cfg,
    };
    union_tree(&ctx)
}

fn union_tree<F: Field>(ctx: &Ctx<'_, F>) -> Result<CaseLabel<F>> {
    if ctx.report.total_span_dim <= 4 {
        return Ok(CaseLabel::bare(CaseId::LowSpanUnion));
    }
    let max_span = ctx
        .report
        .components
        .iter()
        .map(|c| c.span_dim)
        .max()
        .unwrap_or(-1);
    if max_span >= 5 {
        return high_span_tree(ctx);
    }
    if max_span == 4 {
        return span4_tree(ctx);
    }
    if ctx.report.pairs.iter().any(|p| p.m >= 5) {
        return lungo_tree(ctx);
    }
    small_span_tree(ctx)
}

/// Every pair of spans fits in a common P^4: either a union of pairwise
/// meeting planes, or a mixed union whose span intersections are forced
/// large by the modular law. A leftover component spanning a P^4 can only
/// happen with everything inside it, which is the trivially embeddable
/// low-span case.
fn small_span_tree<F: Field>(ctx: &Ctx<'_, F>) -> Result<CaseLabel<F>> {
    if ctx.report.pairs.iter().any(|p| p.m >= 5) {
        return ctx.unmatched();
    }
    let comps = &ctx.report.components;
    if comps.iter().all(|c| c.is_linear) {
        // Planes whose pairwise spans stay in a P^4 always intersect.
        if ctx.report.pairs.iter().any(|p| p.l_dim < 0) {
            return ctx.unmatched();
        }
        return Ok(CaseLabel::bare(CaseId::Solo3Planes));
    }
    if comps.iter().all(|c| c.span_dim <= 3) {
        // Intersection floors by span: 3+3 needs a plane, 3+2 a line,
        // 2+2 a point. With every union in a P^4 these are equivalent to
        // the modular law, so a miss means inconsistent measurements.
        for p in &ctx.report.pairs {
            let need = comps[p.i].span_dim + comps[p.j].span_dim - 4;
            if p.l_dim < need {
                return ctx.unmatched();
            }
        }
        return Ok(CaseLabel::bare(CaseId::Solo3Mixed));
    }
    if ctx.report.total_span_dim <= 4 {
        return Ok(CaseLabel::bare(CaseId::LowSpanUnion));
    }
    ctx.unmatched()
}

fn pair_tree<F: Field>(ctx: &Ctx<'_, F>) -> Result<CaseLabel<F>> {
    for (a, b) in [(0, 1), (1, 0)] {
        if let Some(lbl) = try_veronese_tangent_plane(ctx, a, b)? {
            return Ok(lbl);
        }
    }
    // Two cones sharing their whole vertex.
    let (c0, c1) = (ctx.comp(0), ctx.comp(1));
    if c0.is_cone && c1.is_cone && c0.vertex == c1.vertex {
        let mut w = Witnesses::none();
        w.vertex_p = c0.vertex_point();
        if c0.vertex.dim() == 1 {
            w.line_l = Some(c0.vertex.clone());
        }
        return Ok(CaseLabel {
            case: CaseId::Pair4,
            witnesses: w,
        });
    }
    for (a, b) in [(0, 1), (1, 0)] {
        // Cone plus a plane through its vertex.
        if let Some(p) = ctx.cone_point_vertex(a) {
            if ctx.plane_through(b, &p)? {
                let mut w = Witnesses::none();
                w.vertex_p = Some(p);
                w.plane_pi = Some(ctx.comp(b).span.clone());
                return Ok(CaseLabel {
                    case: CaseId::Pair5,
                    witnesses: w,
                });
            }
        }
    }
    for (a, b) in [(0, 1), (1, 0)] {
        // A surface filling a P^4 without being a cone, plus a plane
        // cutting that P^4 along a line every tangent space meets: the
        // surface sits in a 3-dimensional cone with that line as vertex.
        let ca = ctx.comp(a);
        if !ca.is_cone && ca.span_dim == 4 && ctx.is_plane(b) {
            let l = &ctx.pair(a, b).l;
            if l.dim() == 1 && tangent_meets(ctx.f, ctx.map(a), l, ctx.cfg)? {
                let mut w = Witnesses::none();
                w.line_l = Some(l.clone());
                w.plane_pi = Some(ctx.comp(b).span.clone());
                return Ok(CaseLabel {
                    case: CaseId::Pair6,
                    witnesses: w,
                });
            }
        }
    }
    ctx.unmatched()
}

/// Checks whether component b is the tangent plane of the quadratically
/// embedded plane a, returning the verified label with the tangency point.
fn try_veronese_tangent_plane<F: Field>(
    ctx: &Ctx<'_, F>,
    a: usize,
    b: usize,
) -> Result<Option<CaseLabel<F>>> {
    let pt = match verify_tangent_plane(ctx, a, b)? {
        Some(pt) => pt,
        None => return Ok(None),
    };
    let mut w = Witnesses::none();
    w.tangency_points.push(pt);
    w.plane_pi = Some(ctx.comp(b).span.clone());
    Ok(Some(CaseLabel {
        case: CaseId::Pair3,
        witnesses: w,
    }))
}

/// Locates and re-verifies the point where plane b touches surface a.
/// Returns the tangency image point, or None when b is not a tangent
/// plane of a.
fn verify_tangent_plane<F: Field>(
    ctx: &Ctx<'_, F>,
    a: usize,
    b: usize,
) -> Result<Option<Vec<F::Elem>>> {
    if !(ctx.comp(a).is_veronese && ctx.is_plane(b)) {
        return Ok(None);
    }
    let plane = &ctx.comp(b).span;
    if !ctx.comp(a).span.contains(plane)? {
        return Ok(None);
    }
    let t = match locate_veronese_tangency(ctx.f, ctx.map(a), plane)? {
        Some(t) => t,
        None => return Ok(None),
    };
    let tangent = ctx.map(a).tangent_space_elems(ctx.f, &t)?;
    if tangent != *plane {
        return Ok(None);
    }
    Ok(Some(ctx.map(a).evaluate_elems(ctx.f, &t)?))
}

/// Some component spans a P^5 or more: the union is a Veronese with
/// tangent planes at distinct points, or everything shares one cone
/// vertex.
fn high_span_tree<F: Field>(ctx: &Ctx<'_, F>) -> Result<CaseLabel<F>> {
    let high: Vec<usize> = (0..ctx.r())
        .filter(|&i| ctx.comp(i).span_dim >= 5)
        .collect();

    if high.len() == 1 && ctx.comp(high[0]).is_veronese {
        let v1 = high[0];
        let mut pts: Vec<Vec<F::Elem>> = Vec::new();
        let mut ok = true;
        for j in ctx.others(v1) {
            match verify_tangent_plane(ctx, v1, j)? {
                Some(pt) => pts.push(pt),
                None => {
                    ok = false;
                    break;
                }
            }
        }
        if ok {
            for i in 0..pts.len() {
                for j in i + 1..pts.len() {
                    if ProjSubspace::points_equal(ctx.f, &pts[i], &pts[j]) {
                        ok = false;
                    }
                }
            }
        }
        if ok {
            let mut w = Witnesses::none();
            w.tangency_points = pts;
            return Ok(CaseLabel {
                case: CaseId::MultiVerTangentPlanes,
                witnesses: w,
            });
        }
    }

    for &c in &high {
        if let Some(p) = ctx.cone_point_vertex(c) {
            let mut ok = true;
            for j in ctx.others(c) {
                if !(ctx.is_cone_with_vertex(j, &p) || ctx.plane_through(j, &p)?) {
                    ok = false;
                    break;
                }
            }
            if ok {
                let mut w = Witnesses::none();
                w.vertex_p = Some(p);
                return Ok(CaseLabel {
                    case: CaseId::MultiCommonVertex,
                    witnesses: w,
                });
            }
        }
    }
    ctx.unmatched()
}

/// The maximal span is a P^4. Non-cone anchors are tried before cone
/// anchors, matching the order of the two shapes' statements.
fn span4_tree<F: Field>(ctx: &Ctx<'_, F>) -> Result<CaseLabel<F>> {
    let span4: Vec<usize> = (0..ctx.r())
        .filter(|&i| ctx.comp(i).span_dim == 4)
        .collect();
    for &v1 in &span4 {
        if !ctx.comp(v1).is_cone {
            if let Some(lbl) = try_line_vertex_cone_shape(ctx, v1)? {
                return Ok(lbl);
            }
        }
    }
    for &v1 in &span4 {
        if let Some(p) = ctx.cone_point_vertex(v1) {
            if ctx.comp(v1).span_dim == 4 {
                if let Some(lbl) = try_point_vertex_cone_shape(ctx, v1, &p)? {
                    return Ok(lbl);
                }
            }
        }
    }
    ctx.unmatched()
}

/// The anchor is a non-cone surface spanning a P^4, forced inside
/// 3-dimensional cones with line vertices by companion planes: each
/// companion must be a plane cutting the anchor's span along a line that
/// every tangent space of the anchor meets. Components inside the
/// anchor's span must have tangent spaces meeting every witnessed line.
/// One distinct line is the first clause, several are the second.
fn try_line_vertex_cone_shape<F: Field>(
    ctx: &Ctx<'_, F>,
    v1: usize,
) -> Result<Option<CaseLabel<F>>> {
    let companions = ctx.companions(v1);
    if companions.is_empty() {
        return Ok(None);
    }
    let mut lines: Vec<ProjSubspace<F>> = Vec::new();
    for &j in &companions {
        if !ctx.is_plane(j) {
            return Ok(None);
        }
        let l = &ctx.pair(v1, j).l;
        if l.dim() != 1 {
            return Ok(None);
        }
        if !tangent_meets(ctx.f, ctx.map(v1), l, ctx.cfg)? {
            return Ok(None);
        }
        if !lines.iter().any(|k| k == l) {
            lines.push(l.clone());
        }
    }
    for j in ctx.others(v1) {
        if companions.contains(&j) {
            continue;
        }
        if !ctx.comp(v1).span.contains(&ctx.comp(j).span)? {
            return Ok(None);
        }
        for l in &lines {
            if !ctx.tangent_meets_target(j, l)? {
                return Ok(None);
            }
        }
    }
    let case = if lines.len() == 1 {
        CaseId::Con4NuovoI
    } else {
        CaseId::Con4NuovoII
    };
    let mut w = Witnesses::none();
    w.cone_lines = lines;
    Ok(Some(CaseLabel { case, witnesses: w }))
}

/// The anchor is a cone with point vertex P spanning a P^4 (called K).
/// Companions must share the vertex or be planes through it; the five
/// clauses are separated by the flag H built from the companions' traces
/// on K.
fn try_point_vertex_cone_shape<F: Field>(
    ctx: &Ctx<'_, F>,
    v1: usize,
    p: &[F::Elem],
) -> Result<Option<CaseLabel<F>>> {
    let companions = ctx.companions(v1);
    if companions.is_empty() {
        return Ok(None);
    }
    for &j in &companions {
        if !(ctx.is_cone_with_vertex(j, p) || ctx.plane_through(j, p)?) {
            return Ok(None);
        }
    }

    // First clause: everything is a cone with vertex P or a plane
    // through P.
    let mut all_share = true;
    for j in ctx.others(v1) {
        if !(ctx.is_cone_with_vertex(j, p) || ctx.plane_through(j, p)?) {
            all_share = false;
            break;
        }
    }
    if all_share {
        let mut w = Witnesses::none();
        w.vertex_p = Some(p.to_vec());
        return Ok(Some(CaseLabel {
            case: CaseId::Con4I,
            witnesses: w,
        }));
    }

    let k1 = &ctx.comp(v1).span;

    // Second clause: a companion cone spans its own P^4 cutting K along a
    // 3-space H; all such companions must cut the same H.
    let a3: Vec<usize> = companions
        .iter()
        .copied()
        .filter(|&j| ctx.comp(j).is_cone && ctx.pair(v1, j).l_dim == 3)
        .collect();
    if let Some(&first) = a3.first() {
        let h = ctx.pair(v1, first).l.clone();
        for &j in &a3[1..] {
            if ctx.pair(v1, j).l != h {
                return Ok(None);
            }
        }
        for &j in &companions {
            let tr = &ctx.pair(v1, j).l;
            let good = if ctx.comp(j).is_cone {
                match tr.dim() {
                    3 => true,
                    2 => ctx.comp(j).span_dim == 3 && h.contains(tr)?,
                    _ => false,
                }
            } else {
                tr.dim() == 1 && h.contains(tr)?
            };
            if !good {
                return Ok(None);
            }
        }
        for j in ctx.others(v1) {
            if companions.contains(&j) {
                continue;
            }
            let ok = ctx.is_cone_with_vertex(j, p)
                || ctx.plane_through(j, p)?
                || h.contains(&ctx.comp(j).span)?;
            if !ok {
                return Ok(None);
            }
        }
        let mut w = Witnesses::none();
        w.vertex_p = Some(p.to_vec());
        w.flag_h = Some(h);
        w.flag_k = Some(ctx.comp(first).span.clone());
        return Ok(Some(CaseLabel {
            case: CaseId::Con4II,
            witnesses: w,
        }));
    }

    // Remaining clauses: H spans the companion traces on K. Companion
    // cones must trace planes with 3-dimensional spans, companion planes
    // must trace lines; other trace shapes force the first clause, which
    // already failed.
    let mut h = ProjSubspace::empty(ctx.f.clone(), ctx.model.ambient_dim());
    for &j in &companions {
        let tr = &ctx.pair(v1, j).l;
        let good = if ctx.comp(j).is_cone {
            tr.dim() == 2 && ctx.comp(j).span_dim == 3
        } else {
            tr.dim() == 1
        };
        if !good {
            return Ok(None);
        }
        h = h.span2(tr)?;
    }

    let case = match h.dim() {
        3 => {
            for j in ctx.others(v1) {
                if companions.contains(&j) {
                    continue;
                }
                let ok = ctx.is_cone_with_vertex(j, p)
                    || ctx.plane_through(j, p)?
                    || h.contains(&ctx.comp(j).span)?;
                if !ok {
                    return Ok(None);
                }
            }
            CaseId::Con4III
        }
        2 => {
            for j in ctx.others(v1) {
                if companions.contains(&j) {
                    continue;
                }
                let c = ctx.comp(j);
                let ok = ctx.is_cone_with_vertex(j, p)
                    || ctx.plane_through(j, p)?
                    || (c.span_dim == 3 && c.span.contains(&h)?)
                    || (c.is_linear && c.span.intersect(&h)?.dim() >= 1);
                if !ok {
                    return Ok(None);
                }
            }
            CaseId::Con4IV
        }
        1 => {
            for j in ctx.others(v1) {
                if companions.contains(&j) {
                    continue;
                }
                let c = ctx.comp(j);
                let ok = (c.is_cone && h.contains(&c.vertex)?)
                    || (c.span_dim == 3 && c.span.contains(&h)?)
                    || (c.is_linear && ctx.meets(&c.span, &h)?);
                if !ok {
                    return Ok(None);
                }
            }
            CaseId::Con4V
        }
        _ => return Ok(None),
    };

    let mut w = Witnesses::none();
    w.vertex_p = Some(p.to_vec());
    if h.dim() == 1 {
        w.line_l = Some(h.clone());
    }
    w.flag_h = Some(h);
    w.flag_k = Some(k1.clone());
    Ok(Some(CaseLabel { case, witnesses: w }))
}

/// Every span is at most 3-dimensional but some pair stretches to a P^5:
/// the anchors are pairs of cones sharing a vertex or a cone with a plane
/// through its vertex, and the six clauses follow the anchor's shape.
fn lungo_tree<F: Field>(ctx: &Ctx<'_, F>) -> Result<CaseLabel<F>> {
    // Scan anchors: every wide pair must fit one of the three shapes.
    let mut cone_cone_point: Option<usize> = None;
    let mut cone_cone_line: Option<(usize, usize)> = None;
    let mut cone_plane: Option<(usize, usize)> = None;
    for pr in &ctx.report.pairs {
        if pr.m < 5 {
            continue;
        }
        let (i, j) = (pr.i, pr.j);
        let vi = ctx.cone_point_vertex(i);
        let vj = ctx.cone_point_vertex(j);
        if let (Some(a), Some(b)) = (&vi, &vj) {
            if !ProjSubspace::points_equal(ctx.f, a, b) {
                return ctx.unmatched();
            }
            match pr.l_dim {
                0 => {
                    cone_cone_point.get_or_insert(i);
                }
                1 => {
                    cone_cone_line.get_or_insert((i, j));
                }
                _ => return ctx.unmatched(),
            }
            continue;
        }
        let mut matched = false;
        for (a, b) in [(i, j), (j, i)] {
            if let Some(v) = ctx.cone_point_vertex(a) {
                if ctx.plane_through(b, &v)? {
                    cone_plane.get_or_insert((a, b));
                    matched = true;
                    break;
                }
            }
        }
        if !matched {
            return ctx.unmatched();
        }
    }

    if let Some(a) = cone_cone_point {
        return lungo_common_vertex(ctx, a);
    }
    if let Some((a, b)) = cone_cone_line {
        return lungo_line_anchor(ctx, a, b);
    }
    if let Some((a, b)) = cone_plane {
        return lungo_plane_anchor(ctx, a, b);
    }
    ctx.unmatched()
}

/// Plane side conditions shared by several clauses: meet the target, meet
/// every other plane, and cut at least a line on every 3-dimensional
/// span. When the plane passes through P, the span-cutting condition is
/// only required against non-cone surfaces.
fn lungo_plane_conditions<F: Field>(
    ctx: &Ctx<'_, F>,
    j: usize,
    target: &ProjSubspace<F>,
    p: Option<&[F::Elem]>,
) -> Result<bool> {
    let sp = &ctx.comp(j).span;
    if !ctx.meets(sp, target)? {
        return Ok(false);
    }
    for k in 0..ctx.r() {
        if k != j && ctx.is_plane(k) && !ctx.meets(sp, &ctx.comp(k).span)? {
            return Ok(false);
        }
    }
    let exempt_cones = match p {
        Some(pt) => sp.contains_point(pt)?,
        None => false,
    };
    for k in 0..ctx.r() {
        if k == j || ctx.comp(k).span_dim != 3 {
            continue;
        }
        if exempt_cones && ctx.comp(k).is_cone {
            continue;
        }
        if sp.intersect(&ctx.comp(k).span)?.dim() < 1 {
            return Ok(false);
        }
    }
    Ok(true)
}

/// First clause: cones with one common vertex plus planes through it.
fn lungo_common_vertex<F: Field>(ctx: &Ctx<'_, F>, anchor: usize) -> Result<CaseLabel<F>> {
    let p = ctx
        .cone_point_vertex(anchor)
        .expect("anchor verified as cone with point vertex");
    for j in 0..ctx.r() {
        if !(ctx.is_cone_with_vertex(j, &p) || ctx.plane_through(j, &p)?) {
            return ctx.unmatched();
        }
    }
    let mut w = Witnesses::none();
    w.vertex_p = Some(p);
    Ok(CaseLabel {
        case: CaseId::LungoI,
        witnesses: w,
    })
}

/// Anchor: two cones with the same vertex whose spans meet along a line.
/// One cone vertex overall gives the third clause, two give the second.
fn lungo_line_anchor<F: Field>(ctx: &Ctx<'_, F>, a: usize, b: usize) -> Result<CaseLabel<F>> {
    let p = ctx
        .cone_point_vertex(a)
        .expect("anchor verified as cone with point vertex");
    let l = ctx.pair(a, b).l.clone();

    let mut vertices: Vec<Vec<F::Elem>> = Vec::new();
    for j in 0..ctx.r() {
        if !ctx.comp(j).is_cone {
            continue;
        }
        let Some(v) = ctx.cone_point_vertex(j) else {
            return ctx.unmatched();
        };
        if !vertices
            .iter()
            .any(|u| ProjSubspace::points_equal(ctx.f, u, &v))
        {
            vertices.push(v);
        }
    }

    match vertices.len() {
        1 => {
            // All cones share P; other 3-spans pass through the line and
            // cut a plane on every cone's span.
            for j in 0..ctx.r() {
                let c = ctx.comp(j);
                if c.is_cone {
                    if !ctx.is_cone_with_vertex(j, &p) {
                        return ctx.unmatched();
                    }
                } else if c.span_dim == 3 {
                    if !c.span.contains(&l)? {
                        return ctx.unmatched();
                    }
                    for k in 0..ctx.r() {
                        if ctx.comp(k).is_cone
                            && c.span.intersect(&ctx.comp(k).span)?.dim() < 2
                        {
                            return ctx.unmatched();
                        }
                    }
                } else if !lungo_plane_conditions(ctx, j, &l, Some(&p))? {
                    return ctx.unmatched();
                }
            }
            let mut w = Witnesses::none();
            w.vertex_p = Some(p);
            w.line_l = Some(l);
            Ok(CaseLabel {
                case: CaseId::LungoIII,
                witnesses: w,
            })
        }
        2 => {
            // Two vertices P and Q, both on the anchor line. Spans of
            // cones with different vertices must meet in planes.
            let q = if ProjSubspace::points_equal(ctx.f, &vertices[0], &p) {
                vertices[1].clone()
            } else {
                vertices[0].clone()
            };
            if !l.contains_point(&q)? || !l.contains_point(&p)? {
                return ctx.unmatched();
            }
            for i in 0..ctx.r() {
                for j in i + 1..ctx.r() {
                    let (ci, cj) = (ctx.comp(i), ctx.comp(j));
                    if ci.is_cone && cj.is_cone && ci.vertex != cj.vertex {
                        if ctx.pair(i, j).l_dim < 2 {
                            return ctx.unmatched();
                        }
                    }
                }
            }
            for j in 0..ctx.r() {
                let c = ctx.comp(j);
                if c.is_cone {
                    continue;
                }
                if c.span_dim == 3 {
                    for k in 0..ctx.r() {
                        if ctx.comp(k).is_cone
                            && c.span.intersect(&ctx.comp(k).span)?.dim() < 2
                        {
                            return ctx.unmatched();
                        }
                    }
                } else if !c.span.contains(&l)?
                    && !lungo_plane_conditions(ctx, j, &l, None)?
                {
                    return ctx.unmatched();
                }
            }
            let mut w = Witnesses::none();
            w.vertex_p = Some(p);
            w.vertex_q = Some(q);
            w.line_l = Some(l);
            Ok(CaseLabel {
                case: CaseId::LungoII,
                witnesses: w,
            })
        }
        _ => ctx.unmatched(),
    }
}

/// Anchor: a cone with vertex P and a plane through P meeting the cone's
/// span only at P. The sub-shape depends on a second wide 3-span and on
/// how the span of the anchor pair's surfaces meets the plane.
fn lungo_plane_anchor<F: Field>(ctx: &Ctx<'_, F>, a: usize, b: usize) -> Result<CaseLabel<F>> {
    let p = ctx
        .cone_point_vertex(a)
        .expect("anchor verified as cone with point vertex");
    let a_span = &ctx.comp(a).span;
    let ap_span = &ctx.comp(b).span;

    let other_wide = (0..ctx.r())
        .find(|&j| j != a && ctx.comp(j).span_dim == 3 && ctx.comp(j).span != *a_span);

    let Some(bb) = other_wide else {
        // Last clause: all 3-spans are cones with vertex P sharing the
        // anchor's span H; the anchor plane meets H only at P.
        let h = a_span.clone();
        for j in 0..ctx.r() {
            let c = ctx.comp(j);
            if c.span_dim == 3 {
                if !(ctx.is_cone_with_vertex(j, &p) && c.span == h) {
                    return ctx.unmatched();
                }
            }
        }
        if ap_span.intersect(&h)?.dim() != 0 {
            return ctx.unmatched();
        }
        for j in 0..ctx.r() {
            if j == b || !ctx.is_plane(j) {
                continue;
            }
            let sp = &ctx.comp(j).span;
            let ok = sp.contains_point(&p)?
                || (ctx.meets(sp, ap_span)?
                    && sp.intersect(&h)?.dim() >= 1
                    && lungo_planes_pairwise(ctx, j)?);
            if !ok {
                return ctx.unmatched();
            }
        }
        let mut w = Witnesses::none();
        w.vertex_p = Some(p);
        w.flag_h = Some(h);
        w.plane_pi = Some(ap_span.clone());
        return Ok(CaseLabel {
            case: CaseId::LungoVI,
            witnesses: w,
        });
    };

    let pi = ctx.pair(a, bb).l.clone();
    if pi.dim() != 2 {
        return ctx.unmatched();
    }
    let n = a_span.span2(&ctx.comp(bb).span)?;
    let cut = n.intersect(ap_span)?;

    match cut.dim() {
        0 => {
            // Fourth clause: the anchor plane meets N only at P. Cones
            // carry vertex P and spans through pi; other wide surfaces
            // span through pi and cut a line on the anchor plane.
            if !pi.contains_point(&p)? {
                return ctx.unmatched();
            }
            for j in 0..ctx.r() {
                if j == b {
                    continue;
                }
                let c = ctx.comp(j);
                if c.span_dim == 3 {
                    if !c.span.contains(&pi)? {
                        return ctx.unmatched();
                    }
                    let on_anchor_plane = c.span.intersect(ap_span)?.dim() >= 1;
                    if !(ctx.is_cone_with_vertex(j, &p) || on_anchor_plane) {
                        return ctx.unmatched();
                    }
                } else if c.is_linear
                    && !lungo_plane_conditions(ctx, j, ap_span, Some(&p))?
                {
                    return ctx.unmatched();
                }
            }
            let mut w = Witnesses::none();
            w.vertex_p = Some(p);
            w.plane_pi = Some(pi);
            Ok(CaseLabel {
                case: CaseId::LungoIV,
                witnesses: w,
            })
        }
        1 => {
            // Fifth clause: the anchor plane meets N along a line. Cones
            // have vertices on the anchor plane and spans through pi;
            // non-cone wide surfaces need P inside pi.
            let p_in_pi = pi.contains_point(&p)?;
            for j in 0..ctx.r() {
                if j == b {
                    continue;
                }
                let c = ctx.comp(j);
                if c.span_dim == 3 {
                    if !c.span.contains(&pi)? {
                        return ctx.unmatched();
                    }
                    if c.is_cone {
                        let Some(v) = ctx.cone_point_vertex(j) else {
                            return ctx.unmatched();
                        };
                        if !ap_span.contains_point(&v)? {
                            return ctx.unmatched();
                        }
                    } else if !(p_in_pi && c.span.intersect(ap_span)?.dim() >= 1) {
                        return ctx.unmatched();
                    }
                } else if c.is_linear {
                    let through_vertices = lungo_through_all_vertices(ctx, j)?;
                    if !through_vertices
                        && !lungo_plane_conditions(ctx, j, ap_span, None)?
                    {
                        return ctx.unmatched();
                    }
                }
            }
            let mut w = Witnesses::none();
            w.vertex_p = Some(p);
            w.plane_pi = Some(pi);
            w.line_l = Some(cut);
            Ok(CaseLabel {
                case: CaseId::LungoV,
                witnesses: w,
            })
        }
        _ => ctx.unmatched(),
    }
}

/// Whether plane j meets every other plane component.
fn lungo_planes_pairwise<F: Field>(ctx: &Ctx<'_, F>, j: usize) -> Result<bool> {
    let sp = &ctx.comp(j).span;
    for k in 0..ctx.r() {
        if k != j && ctx.is_plane(k) && !ctx.meets(sp, &ctx.comp(k).span)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Whether plane j passes through the vertex of every cone component.
fn lungo_through_all_vertices<F: Field>(ctx: &Ctx<'_, F>, j: usize) -> Result<bool> {
    let sp = &ctx.comp(j).span;
    for k in 0..ctx.r() {
        if !ctx.comp(k).is_cone {
            continue;
        }
        match ctx.cone_point_vertex(k) {
            Some(v) => {
                if !sp.contains_point(&v)? {
                    return Ok(false);
                }
            }
            None => return Ok(false),
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::super::{analyze, classify, CaseId, VarietyModel};
    use crate::field::Rationals;
    use crate::geometry::builders::{
        cone, conic_in_plane, plane_through, rational_normal_curve, scroll, veronese,
    };
    use crate::geometry::{MultiPoly, PolyMap};
    use crate::linalg::ProjSubspace;
    use crate::terracini::GenericityConfig;

    fn cfg() -> GenericityConfig {
        GenericityConfig::new(23)
    }

    fn e(len: usize, i: usize) -> Vec<i64> {
        let mut v = vec![0; len];
        v[i] = 1;
        v
    }

    fn run(model: VarietyModel) -> (CaseId, super::super::Witnesses<Rationals>) {
        let rep = analyze(&Rationals, &model, &cfg()).unwrap();
        assert!(rep.j_embeddable, "test shape must be embeddable");
        let lbl = classify(&Rationals, &model, &rep, &cfg()).unwrap();
        (lbl.case, lbl.witnesses)
    }

    #[test]
    fn veronese_with_its_tangent_plane() {
        // The tangent plane at the image of (1:0:0) is the span of the
        // first three coordinate points.
        let m = VarietyModel::new(vec![
            veronese("v"),
            plane_through("t", &[e(6, 0), e(6, 1), e(6, 2)]).unwrap(),
        ])
        .unwrap();
        let (case, w) = run(m);
        assert_eq!(case, CaseId::Pair3);
        assert_eq!(w.tangency_points.len(), 1);
        let expect = ProjSubspace::from_i64_rows(Rationals, 5, &[e(6, 0)]).unwrap();
        assert!(expect.contains_point(&w.tangency_points[0]).unwrap());
    }

    #[test]
    fn two_cones_sharing_an_apex() {
        let c1 = conic_in_plane("b1", &[e(7, 0), e(7, 1), e(7, 2)]).unwrap();
        let c2 = conic_in_plane("b2", &[e(7, 3), e(7, 4), e(7, 5)]).unwrap();
        let m = VarietyModel::new(vec![
            cone("a1", &e(7, 6), &c1).unwrap(),
            cone("a2", &e(7, 6), &c2).unwrap(),
        ])
        .unwrap();
        let (case, w) = run(m);
        assert_eq!(case, CaseId::Pair4);
        let apex = w.vertex_p.expect("point vertex witness");
        let expect = ProjSubspace::from_i64_rows(Rationals, 6, &[e(7, 6)]).unwrap();
        assert!(expect.contains_point(&apex).unwrap());
    }

    #[test]
    fn cone_with_a_plane_through_its_apex() {
        let base = conic_in_plane("b", &[e(6, 0), e(6, 1), e(6, 2)]).unwrap();
        let m = VarietyModel::new(vec![
            cone("a", &e(6, 5), &base).unwrap(),
            plane_through("p", &[e(6, 3), e(6, 4), e(6, 5)]).unwrap(),
        ])
        .unwrap();
        let (case, w) = run(m);
        assert_eq!(case, CaseId::Pair5);
        assert!(w.vertex_p.is_some() && w.plane_pi.is_some());
    }

    #[test]
    fn scroll_in_a_line_vertex_cone_with_a_plane() {
        // Directrices: a conic and a doubly covered line. Every tangent
        // plane of the scroll meets the line spanned by the fourth and
        // fifth coordinate points, so the scroll lies in a 3-dimensional
        // cone with that line as vertex.
        let a = conic_in_plane("a", &[e(6, 0), e(6, 1), e(6, 2)]).unwrap();
        let mut coords = Vec::new();
        for i in 0..6 {
            coords.push(match i {
                3 => MultiPoly::monomial(vec![2], vec![2], 1, vec![2, 0]).unwrap(),
                4 => MultiPoly::monomial(vec![2], vec![2], 1, vec![0, 2]).unwrap(),
                _ => MultiPoly::zero(vec![2], vec![2]),
            });
        }
        let b = PolyMap::new("b", coords).unwrap();
        let m = VarietyModel::new(vec![
            scroll("s", &a, &b).unwrap(),
            plane_through("p", &[e(6, 3), e(6, 4), e(6, 5)]).unwrap(),
        ])
        .unwrap();
        let (case, w) = run(m);
        assert_eq!(case, CaseId::Pair6);
        let l = w.line_l.expect("vertex line witness");
        let expect = ProjSubspace::from_i64_rows(Rationals, 5, &[e(6, 3), e(6, 4)]).unwrap();
        assert_eq!(l, expect);
    }

    #[test]
    fn three_pairwise_meeting_planes() {
        let m = VarietyModel::new(vec![
            plane_through("a", &[e(6, 0), e(6, 1), e(6, 2)]).unwrap(),
            plane_through("b", &[e(6, 0), e(6, 3), e(6, 4)]).unwrap(),
            plane_through("c", &[e(6, 1), e(6, 3), e(6, 5)]).unwrap(),
        ])
        .unwrap();
        let (case, _) = run(m);
        assert_eq!(case, CaseId::Solo3Planes);
    }

    #[test]
    fn veronese_with_two_tangent_planes() {
        // Tangent planes at the images of (1:0:0) and (0:0:1).
        let m = VarietyModel::new(vec![
            veronese("v"),
            plane_through("t1", &[e(6, 0), e(6, 1), e(6, 2)]).unwrap(),
            plane_through("t2", &[e(6, 2), e(6, 4), e(6, 5)]).unwrap(),
        ])
        .unwrap();
        let (case, w) = run(m);
        assert_eq!(case, CaseId::MultiVerTangentPlanes);
        assert_eq!(w.tangency_points.len(), 2);
    }

    #[test]
    fn cone_over_twisted_cubic_with_planes_through_apex() {
        let base = rational_normal_curve("b", 3).unwrap();
        let mut rows = Vec::new();
        for r in 0..4 {
            rows.push(e(6, r));
        }
        let wide = crate::geometry::builders::linear_reembed(&base, &rows).unwrap();
        let m = VarietyModel::new(vec![
            cone("v1", &e(6, 4), &wide).unwrap(),
            plane_through("p1", &[e(6, 0), e(6, 4), e(6, 5)]).unwrap(),
            plane_through("p2", &[e(6, 0), e(6, 1), e(6, 4)]).unwrap(),
        ])
        .unwrap();
        let (case, w) = run(m);
        assert_eq!(case, CaseId::Con4I);
        assert!(w.vertex_p.is_some());
    }
}
