//! Independent second opinions on dimensions.
//!
//! The primary engine measures joins through spans of tangent spaces. The
//! routines here measure the same quantities along a different route: the
//! join is written down as one explicit multihomogeneous map and its
//! dimension read off a single Jacobian rank, spans are ranks of point
//! clouds, and quadric counts are coranks of monomial evaluation matrices.
//! Agreement between the two routes is what the test suite leans on.

use crate::error::{Error, Result};
use crate::field::Field;
use crate::geometry::map::PolyMap;
use crate::geometry::poly::{MultiPoly, Term};
use crate::linalg::Matrix;
use crate::terracini::derive_rng;

/// Explicit parametrization of the join of two varieties on
/// P^1 x (domain of a) x (domain of b):
///
///   (lambda:mu, p, q) -> lambda * a(p) * m_b(q) + mu * b(q) * m_a(p)
///
/// where m_a and m_b are the monomials in the leading variables of each
/// block that make both terms share one multidegree. Generic samples avoid
/// the extra base locus those monomials introduce.
pub fn join_map(a: &PolyMap, b: &PolyMap) -> Result<PolyMap> {
    if a.ambient_dim() != b.ambient_dim() {
        return Err(Error::AmbientMismatch(a.ambient_dim(), b.ambient_dim()));
    }
    let a_vars = a.total_vars();
    let b_vars = b.total_vars();

    let mut blocks = vec![2usize];
    blocks.extend_from_slice(a.block_sizes());
    blocks.extend_from_slice(b.block_sizes());
    let mut md = vec![1u32];
    md.extend_from_slice(a.multidegree());
    md.extend_from_slice(b.multidegree());

    let leading_exps = |m: &PolyMap| {
        let mut e = vec![0u32; m.total_vars()];
        let mut off = 0;
        for (i, &size) in m.block_sizes().iter().enumerate() {
            e[off] = m.multidegree()[i];
            off += size;
        }
        e
    };
    let m_a = leading_exps(a);
    let m_b = leading_exps(b);

    let coords = (0..=a.ambient_dim())
        .map(|j| {
            let mut terms = Vec::new();
            for t in a.coords()[j].terms() {
                let mut exps = Vec::with_capacity(2 + a_vars + b_vars);
                exps.extend_from_slice(&[1, 0]);
                exps.extend_from_slice(&t.exps);
                exps.extend_from_slice(&m_b);
                terms.push(Term { coeff: t.coeff, exps });
            }
            for t in b.coords()[j].terms() {
                let mut exps = Vec::with_capacity(2 + a_vars + b_vars);
                exps.extend_from_slice(&[0, 1]);
                exps.extend_from_slice(&m_a);
                exps.extend_from_slice(&t.exps);
                terms.push(Term { coeff: t.coeff, exps });
            }
            MultiPoly::new(blocks.clone(), md.clone(), terms)
        })
        .collect::<Result<Vec<_>>>()?;
    PolyMap::new(format!("join({}, {})", a.label(), b.label()), coords)
}

/// Join dimension as the Jacobian rank of the explicit join map, maximized
/// over a few samples. Rank undershoots on special samples and never
/// overshoots, so the maximum is the generic value.
pub fn join_dimension_oracle<F: Field>(
    f: &F,
    a: &PolyMap,
    b: &PolyMap,
    seed: u64,
    trials: usize,
) -> Result<i64> {
    let jm = join_map(a, b)?;
    let mut rng = derive_rng(seed, "oracle-join", &[a.label(), b.label()]);
    let mut best: i64 = -1;
    for _ in 0..trials.max(2) {
        let p = jm.random_param(&mut rng);
        let rank = jm.jacobian(f, &p)?.rank();
        best = best.max(rank as i64 - 1);
    }
    Ok(best)
}

pub fn secant_dimension_oracle<F: Field>(
    f: &F,
    v: &PolyMap,
    seed: u64,
    trials: usize,
) -> Result<i64> {
    join_dimension_oracle(f, v, v, seed, trials)
}

/// Span dimension as the rank of a cloud of 2(N+1) image points.
pub fn span_dim_oracle<F: Field>(f: &F, v: &PolyMap, seed: u64) -> Result<i64> {
    let n = v.ambient_dim();
    let want = 2 * (n + 1);
    let mut rng = derive_rng(seed, "oracle-span", &[v.label()]);
    let mut rows = Vec::with_capacity(want);
    let mut budget = 4 * want;
    while rows.len() < want && budget > 0 {
        budget -= 1;
        let p = v.random_param(&mut rng);
        match v.evaluate(f, &p) {
            Ok(pt) => rows.push(pt),
            Err(Error::BasePoint(_)) => continue,
            Err(e) => return Err(e),
        }
    }
    if rows.len() < want {
        return Err(Error::Genericity(format!(
            "span oracle({}): too many base-locus samples",
            v.label()
        )));
    }
    Ok(Matrix::from_rows(f.clone(), rows)?.rank() as i64 - 1)
}

/// Number of linearly independent quadrics vanishing on the variety,
/// computed as the corank of the evaluation matrix of all degree-2
/// monomials at a generous cloud of image points.
pub fn quadric_count<F: Field>(f: &F, v: &PolyMap, seed: u64) -> Result<usize> {
    let n = v.ambient_dim();
    let monos: Vec<(usize, usize)> = (0..=n)
        .flat_map(|i| (i..=n).map(move |j| (i, j)))
        .collect();
    let want = monos.len() + 5;
    let mut rng = derive_rng(seed, "oracle-quadrics", &[v.label()]);
    let mut best_rank = 0usize;
    for _ in 0..2 {
        let mut rows = Vec::with_capacity(want);
        let mut budget = 4 * want;
        while rows.len() < want && budget > 0 {
            budget -= 1;
            let p = v.random_param(&mut rng);
            let pt = match v.evaluate(f, &p) {
                Ok(pt) => pt,
                Err(Error::BasePoint(_)) => continue,
                Err(e) => return Err(e),
            };
            let row: Vec<F::Elem> = monos.iter().map(|&(i, j)| f.mul(&pt[i], &pt[j])).collect();
            rows.push(row);
        }
        if rows.len() < want {
            return Err(Error::Genericity(format!(
                "quadric count({}): too many base-locus samples",
                v.label()
            )));
        }
        best_rank = best_rank.max(Matrix::from_rows(f.clone(), rows)?.rank());
    }
    Ok(monos.len() - best_rank)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, Rationals, DEFAULT_PRIME};
    use crate::geometry::builders::{
        cone, linear_reembed, plane_through, rational_normal_curve, veronese,
    };
    use crate::terracini::{join_dimension, secant_dimension, GenericityConfig};

    fn basis_vec(len: usize, i: usize) -> Vec<i64> {
        let mut v = vec![0; len];
        v[i] = 1;
        v
    }

    #[test]
    fn oracle_agrees_with_engine_on_plane_joins() {
        let a = plane_through("a", &[basis_vec(6, 0), basis_vec(6, 1), basis_vec(6, 2)]).unwrap();
        let b = plane_through("b", &[basis_vec(6, 3), basis_vec(6, 4), basis_vec(6, 5)]).unwrap();
        let engine = join_dimension(&Rationals, &a, &b, &GenericityConfig::new(5)).unwrap();
        let oracle = join_dimension_oracle(&Rationals, &a, &b, 5, 3).unwrap();
        assert_eq!(engine.value, 5);
        assert_eq!(oracle, 5);
    }

    #[test]
    fn oracle_agrees_on_deficient_secants() {
        let fq = PrimeField::new(DEFAULT_PRIME).unwrap();
        let v = veronese("v");
        assert_eq!(secant_dimension_oracle(&fq, &v, 9, 3).unwrap(), 4);
        assert_eq!(secant_dimension(&fq, &v, &GenericityConfig::new(9)).unwrap().value, 4);

        let c = rational_normal_curve("c4", 4).unwrap();
        assert_eq!(secant_dimension_oracle(&fq, &c, 9, 3).unwrap(), 3);
    }

    #[test]
    fn span_oracle_matches_coefficient_span() {
        let v = veronese("v");
        assert_eq!(span_dim_oracle(&Rationals, &v, 1).unwrap(), 5);
        assert_eq!(v.coefficient_span(&Rationals).unwrap().dim(), 5);

        let c = rational_normal_curve("c3", 3).unwrap();
        assert_eq!(span_dim_oracle(&Rationals, &c, 1).unwrap(), 3);
    }

    #[test]
    fn quadric_counts_of_classical_varieties() {
        let fq = PrimeField::new(DEFAULT_PRIME).unwrap();
        assert_eq!(quadric_count(&fq, &veronese("v"), 3).unwrap(), 6);

        let base = linear_reembed(
            &rational_normal_curve("b", 2).unwrap(),
            &[basis_vec(4, 0), basis_vec(4, 1), basis_vec(4, 2)],
        )
        .unwrap();
        let k = cone("k", &basis_vec(4, 3), &base).unwrap();
        assert_eq!(quadric_count(&fq, &k, 3).unwrap(), 1);

        let p = plane_through("p", &[basis_vec(6, 0), basis_vec(6, 1), basis_vec(6, 2)]).unwrap();
        assert_eq!(quadric_count(&fq, &p, 3).unwrap(), 15);

        let c3 = rational_normal_curve("c3", 3).unwrap();
        assert_eq!(quadric_count(&fq, &c3, 3).unwrap(), 3);
    }

    #[test]
    fn join_with_a_cone_vertex_collapses() {
        // Joining a cone with its own apex point reproduces the cone.
        let base = linear_reembed(
            &rational_normal_curve("b", 2).unwrap(),
            &[basis_vec(5, 0), basis_vec(5, 1), basis_vec(5, 2)],
        )
        .unwrap();
        let k = cone("k", &basis_vec(5, 3), &base).unwrap();
        let apex_curve = linear_reembed(
            &rational_normal_curve("apex", 1).unwrap(),
            &[basis_vec(5, 3), basis_vec(5, 4)],
        )
        .unwrap();
        // Join of the cone with a line through its apex: adding the apex
        // direction is free, the second line point adds one.
        let d = join_dimension_oracle(&Rationals, &k, &apex_curve, 11, 3).unwrap();
        assert_eq!(d, 3);
    }
}
