//! Constructors for the standard parametrized varieties.
//!
//! Every builder validates its input exactly over the rationals (the
//! coefficients are integers, so rank checks are exact) and rejects
//! degenerate configurations instead of silently producing a smaller
//! variety than the caller asked for.

use crate::error::{Error, Result};
use crate::field::{Field, Rationals};
use crate::geometry::map::PolyMap;
use crate::geometry::poly::{MultiPoly, Term};
use crate::linalg::Matrix;

fn unit_exps(total: usize, i: usize) -> Vec<u32> {
    let mut e = vec![0u32; total];
    e[i] = 1;
    e
}

fn rank_of_i64(rows: &[Vec<i64>]) -> Result<usize> {
    Ok(Matrix::from_i64_rows(Rationals, rows)?.rank())
}

/// Linear embedding of P^{k-1} spanned by the given coordinate rows. The
/// rows must be independent, otherwise the map has a base locus and the
/// image is strictly smaller than advertised.
pub fn linear_map(label: impl Into<String>, rows: &[Vec<i64>]) -> Result<PolyMap> {
    let label = label.into();
    let k = rows.len();
    if k < 2 {
        return Err(Error::DegenerateBuilder(format!(
            "`{label}`: a linear image needs at least 2 spanning points"
        )));
    }
    let width = rows[0].len();
    if width < k || rows.iter().any(|r| r.len() != width) {
        return Err(Error::DegenerateBuilder(format!(
            "`{label}`: spanning rows must share a length of at least {k}"
        )));
    }
    if rank_of_i64(rows)? != k {
        return Err(Error::DegenerateBuilder(format!(
            "`{label}`: spanning points are linearly dependent"
        )));
    }
    let coords = (0..width)
        .map(|j| {
            let terms = rows
                .iter()
                .enumerate()
                .filter(|(_, r)| r[j] != 0)
                .map(|(i, r)| Term {
                    coeff: r[j],
                    exps: unit_exps(k, i),
                })
                .collect();
            MultiPoly::new(vec![k], vec![1], terms)
        })
        .collect::<Result<Vec<_>>>()?;
    PolyMap::new(label, coords)
}

/// Plane spanned by three independent points.
pub fn plane_through(label: impl Into<String>, points: &[Vec<i64>]) -> Result<PolyMap> {
    let label = label.into();
    if points.len() != 3 {
        return Err(Error::DegenerateBuilder(format!(
            "`{label}`: a plane is spanned by exactly 3 points"
        )));
    }
    linear_map(label, points)
}

/// Line spanned by two independent points.
pub fn line_through(label: impl Into<String>, points: &[Vec<i64>]) -> Result<PolyMap> {
    let label = label.into();
    if points.len() != 2 {
        return Err(Error::DegenerateBuilder(format!(
            "`{label}`: a line is spanned by exactly 2 points"
        )));
    }
    linear_map(label, points)
}

/// The quadratic embedding of P^2 into P^5. Coordinates are the six
/// degree-2 monomials in graded lexicographic order, so (1:0:0) maps to
/// the first coordinate point.
pub fn veronese(label: impl Into<String>) -> PolyMap {
    let exps = [
        [2, 0, 0],
        [1, 1, 0],
        [1, 0, 1],
        [0, 2, 0],
        [0, 1, 1],
        [0, 0, 2],
    ];
    let coords = exps
        .iter()
        .map(|e| MultiPoly::monomial(vec![3], vec![2], 1, e.to_vec()).unwrap())
        .collect();
    PolyMap::new(label, coords).unwrap()
}

/// Degree-d rational normal curve in P^d: (s:t) -> (s^d : ... : t^d).
pub fn rational_normal_curve(label: impl Into<String>, d: u32) -> Result<PolyMap> {
    let label = label.into();
    if d == 0 {
        return Err(Error::DegenerateBuilder(format!(
            "`{label}`: curve degree must be positive"
        )));
    }
    let coords = (0..=d)
        .map(|i| MultiPoly::monomial(vec![2], vec![d], 1, vec![d - i, i]).unwrap())
        .collect();
    PolyMap::new(label, coords)
}

/// Composes a map with an injective linear change of coordinates. Row i is
/// the image of the i-th target coordinate point of `map`, so the rows must
/// be independent; projections are deliberately not expressible here.
pub fn linear_reembed(map: &PolyMap, rows: &[Vec<i64>]) -> Result<PolyMap> {
    let old = map.ambient_dim() + 1;
    if rows.len() != old {
        return Err(Error::DegenerateBuilder(format!(
            "`{}`: reembedding needs {} rows, got {}",
            map.label(),
            old,
            rows.len()
        )));
    }
    let width = rows[0].len();
    if width < old || rows.iter().any(|r| r.len() != width) {
        return Err(Error::DegenerateBuilder(format!(
            "`{}`: reembedding rows must share a length of at least {old}",
            map.label()
        )));
    }
    if rank_of_i64(rows)? != old {
        return Err(Error::DegenerateBuilder(format!(
            "`{}`: reembedding matrix is not injective",
            map.label()
        )));
    }
    let zero = MultiPoly::zero(
        map.block_sizes().to_vec(),
        map.multidegree().to_vec(),
    );
    let coords = (0..width)
        .map(|j| {
            map.coords()
                .iter()
                .enumerate()
                .try_fold(zero.clone(), |acc, (i, c)| acc.add(&c.scale(rows[i][j])))
        })
        .collect::<Result<Vec<_>>>()?;
    PolyMap::new(map.label(), coords)
}

/// Smooth conic inside the plane spanned by three independent points,
/// parametrized as p0 s^2 + p1 st + p2 t^2. It passes through p0 and p2
/// and is tangent there to the lines toward p1.
pub fn conic_in_plane(label: impl Into<String>, points: &[Vec<i64>]) -> Result<PolyMap> {
    let label = label.into();
    if points.len() != 3 {
        return Err(Error::DegenerateBuilder(format!(
            "`{label}`: a conic needs 3 spanning points"
        )));
    }
    if rank_of_i64(points)? != 3 {
        return Err(Error::DegenerateBuilder(format!(
            "`{label}`: conic spanning points are linearly dependent"
        )));
    }
    let rnc = rational_normal_curve(label.clone(), 2)?;
    linear_reembed(&rnc, points)
}

/// Cone over `base` with apex at `vertex`. Parametrized on P^1 x (domain of
/// base) as lambda * m(q) * vertex + mu * base(q), where m is the monomial
/// in the leading variables that matches the base multidegree. The vertex
/// must lie outside the linear span of the base.
pub fn cone(label: impl Into<String>, vertex: &[i64], base: &PolyMap) -> Result<PolyMap> {
    let label = label.into();
    if vertex.len() != base.ambient_dim() + 1 {
        return Err(Error::AmbientMismatch(vertex.len(), base.ambient_dim() + 1));
    }
    if vertex.iter().all(|&v| v == 0) {
        return Err(Error::DegenerateBuilder(format!(
            "`{label}`: zero vector is not a projective vertex"
        )));
    }
    let span = base.coefficient_span(&Rationals)?;
    let vertex_q: Vec<_> = vertex.iter().map(|&v| Rationals.from_i64(v)).collect();
    if span.contains_point(&vertex_q)? {
        return Err(Error::DegenerateBuilder(format!(
            "`{label}`: vertex lies in the span of the base"
        )));
    }

    let base_vars = base.total_vars();
    let mut blocks = vec![2usize];
    blocks.extend_from_slice(base.block_sizes());
    let mut md = vec![1u32];
    md.extend_from_slice(base.multidegree());

    // Degree-matching monomial: leading variable of each base block raised
    // to that block's degree.
    let mut m_exps = vec![0u32; base_vars];
    let mut off = 0;
    for (b, &size) in base.block_sizes().iter().enumerate() {
        m_exps[off] = base.multidegree()[b];
        off += size;
    }

    let coords = (0..=base.ambient_dim())
        .map(|j| {
            let mut terms = Vec::new();
            if vertex[j] != 0 {
                let mut exps = vec![1, 0];
                exps.extend_from_slice(&m_exps);
                terms.push(Term {
                    coeff: vertex[j],
                    exps,
                });
            }
            for t in base.coords()[j].terms() {
                let mut exps = vec![0, 1];
                exps.extend_from_slice(&t.exps);
                terms.push(Term {
                    coeff: t.coeff,
                    exps,
                });
            }
            MultiPoly::new(blocks.clone(), md.clone(), terms)
        })
        .collect::<Result<Vec<_>>>()?;
    PolyMap::new(label, coords)
}

/// Ruled surface joining two curves over one shared parameter: the point
/// at (lambda:mu, q) is lambda * a(q) + mu * b(q). Both directrices must
/// share domain shape, multidegree and ambient space.
pub fn scroll(label: impl Into<String>, a: &PolyMap, b: &PolyMap) -> Result<PolyMap> {
    let label = label.into();
    if a.block_sizes() != b.block_sizes() || a.multidegree() != b.multidegree() {
        return Err(Error::DomainMismatch(format!(
            "`{label}`: directrices have different domain shapes"
        )));
    }
    if a.ambient_dim() != b.ambient_dim() {
        return Err(Error::AmbientMismatch(a.ambient_dim(), b.ambient_dim()));
    }
    let base_vars = a.total_vars();
    let mut blocks = vec![2usize];
    blocks.extend_from_slice(a.block_sizes());
    let mut md = vec![1u32];
    md.extend_from_slice(a.multidegree());

    let coords = (0..=a.ambient_dim())
        .map(|j| {
            let mut terms = Vec::new();
            for t in a.coords()[j].terms() {
                let mut exps = Vec::with_capacity(base_vars + 2);
                exps.extend_from_slice(&[1, 0]);
                exps.extend_from_slice(&t.exps);
                terms.push(Term { coeff: t.coeff, exps });
            }
            for t in b.coords()[j].terms() {
                let mut exps = Vec::with_capacity(base_vars + 2);
                exps.extend_from_slice(&[0, 1]);
                exps.extend_from_slice(&t.exps);
                terms.push(Term { coeff: t.coeff, exps });
            }
            MultiPoly::new(blocks.clone(), md.clone(), terms)
        })
        .collect::<Result<Vec<_>>>()?;
    PolyMap::new(label, coords)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::ProjSubspace;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn q(v: i64) -> num_rational::BigRational {
        Rationals.from_i64(v)
    }

    fn basis_vec(len: usize, i: usize) -> Vec<i64> {
        let mut v = vec![0; len];
        v[i] = 1;
        v
    }

    #[test]
    fn veronese_hits_first_coordinate_point() {
        let v = veronese("v");
        let img = v.evaluate(&Rationals, &[1, 0, 0]).unwrap();
        let e0: Vec<_> = (0..6).map(|i| q((i == 0) as i64)).collect();
        assert!(ProjSubspace::points_equal(&Rationals, &img, &e0));
        assert_eq!(v.coefficient_span(&Rationals).unwrap().dim(), 5);
    }

    #[test]
    fn veronese_tangent_at_coordinate_point() {
        let v = veronese("v");
        let t = v.tangent_space(&Rationals, &[1, 0, 0]).unwrap();
        let expected =
            ProjSubspace::from_i64_rows(Rationals, 5, &[basis_vec(6, 0), basis_vec(6, 1), basis_vec(6, 2)])
                .unwrap();
        assert_eq!(t, expected);
    }

    #[test]
    fn rnc_spans_its_ambient() {
        let c = rational_normal_curve("c3", 3).unwrap();
        assert_eq!(c.ambient_dim(), 3);
        assert_eq!(c.coefficient_span(&Rationals).unwrap().dim(), 3);
        let t = c.tangent_space(&Rationals, &[2, 1]).unwrap();
        assert_eq!(t.dim(), 1);
    }

    #[test]
    fn cone_tangents_contain_vertex() {
        // Quadric cone in P^3 over a plane conic, apex at e3.
        let base = linear_reembed(
            &rational_normal_curve("b", 2).unwrap(),
            &[basis_vec(4, 0), basis_vec(4, 1), basis_vec(4, 2)],
        )
        .unwrap();
        let k = cone("k", &basis_vec(4, 3), &base).unwrap();
        assert_eq!(k.dim_source(), 2);
        let vtx: Vec<_> = basis_vec(4, 3).iter().map(|&v| q(v)).collect();
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..8 {
            let p = k.random_param(&mut rng);
            let t = match k.tangent_space(&Rationals, &p) {
                Ok(t) => t,
                Err(_) => continue,
            };
            assert!(t.contains_point(&vtx).unwrap());
        }
    }

    #[test]
    fn cone_rejects_vertex_inside_base_span() {
        let base = linear_reembed(
            &rational_normal_curve("b", 2).unwrap(),
            &[basis_vec(4, 0), basis_vec(4, 1), basis_vec(4, 2)],
        )
        .unwrap();
        let r = cone("k", &[1, 1, 1, 0], &base);
        assert!(matches!(r, Err(Error::DegenerateBuilder(_))));
    }

    #[test]
    fn plane_rejects_collinear_points() {
        let r = plane_through(
            "p",
            &[vec![1, 0, 0, 0], vec![0, 1, 0, 0], vec![1, 1, 0, 0]],
        );
        assert!(matches!(r, Err(Error::DegenerateBuilder(_))));
    }

    #[test]
    fn reembed_rejects_rank_deficient_matrix() {
        let c = rational_normal_curve("c", 2).unwrap();
        let r = linear_reembed(&c, &[vec![1, 0, 0, 0], vec![0, 1, 0, 0], vec![1, 1, 0, 0]]);
        assert!(matches!(r, Err(Error::DegenerateBuilder(_))));
    }

    #[test]
    fn quartic_scroll_is_a_surface_spanning_p4() {
        let conic = conic_in_plane(
            "a",
            &[basis_vec(5, 0), basis_vec(5, 1), basis_vec(5, 2)],
        )
        .unwrap();
        let directrix = linear_reembed(
            &rational_normal_curve("d", 2).unwrap(),
            &[basis_vec(5, 3), vec![0, 0, 0, 0, 0], basis_vec(5, 4)],
        );
        // The middle row is zero, so that reembedding must be rejected;
        // build the directrix explicitly instead.
        assert!(directrix.is_err());
        let directrix = PolyMap::new(
            "d",
            vec![
                MultiPoly::zero(vec![2], vec![2]),
                MultiPoly::zero(vec![2], vec![2]),
                MultiPoly::zero(vec![2], vec![2]),
                MultiPoly::monomial(vec![2], vec![2], 1, vec![2, 0]).unwrap(),
                MultiPoly::monomial(vec![2], vec![2], 1, vec![0, 2]).unwrap(),
            ],
        )
        .unwrap();
        let s = scroll("s", &conic, &directrix).unwrap();
        assert_eq!(s.dim_source(), 2);
        assert_eq!(s.coefficient_span(&Rationals).unwrap().dim(), 4);
        let t = s.tangent_space(&Rationals, &[1, 2, 3, 5]).unwrap();
        assert_eq!(t.dim(), 2);
    }

    #[test]
    fn conic_in_plane_touches_its_frame() {
        let c = conic_in_plane(
            "c",
            &[vec![1, 0, 0, 0], vec![0, 1, 0, 0], vec![0, 0, 1, 0]],
        )
        .unwrap();
        let at_s = c.evaluate(&Rationals, &[1, 0]).unwrap();
        assert!(ProjSubspace::points_equal(
            &Rationals,
            &at_s,
            &[q(1), q(0), q(0), q(0)]
        ));
        let at_t = c.evaluate(&Rationals, &[0, 1]).unwrap();
        assert!(ProjSubspace::points_equal(
            &Rationals,
            &at_t,
            &[q(0), q(0), q(1), q(0)]
        ));
    }
}
