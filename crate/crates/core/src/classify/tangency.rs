//! Exact location of the point where a plane touches a quadratically
//! parametrized surface. Linear forms vanishing on the plane pull back to
//! quadratic forms on the parameter plane; the plane is a tangent plane
//! exactly when all those quadratics are singular at one common parameter,
//! and that parameter is the tangency. Singularity of a quadratic form is
//! a linear condition (the kernel of its constant Hessian), so the search
//! is a single exact kernel computation rather than a sampling loop.

use crate::error::{Error, Result};
use crate::field::Field;
use crate::geometry::{MultiPoly, PolyMap};
use crate::linalg::{Matrix, ProjSubspace};

/// Constant second partial of a quadratic form.
fn second_partial(p: &MultiPoly, a: usize, b: usize) -> i64 {
    let d = p.derivative(a).derivative(b);
    d.terms().first().map(|t| t.coeff).unwrap_or(0)
}

/// Finds the parameter at which `plane` is the embedded tangent plane of
/// `v`, or None when it is tangent nowhere. `v` must be parametrized by
/// one block of three variables in degree 2 (the quadratic embedding of
/// P^2, possibly re-embedded linearly); other shapes are refused, since
/// the Hessian argument does not apply to them.
///
/// Soundness: a common singular parameter t of every pulled-back form
/// forces the 3-dimensional space of pulled-back forms to be exactly the
/// quadratics singular at t, whose common zero locus meets the surface in
/// the tangent plane at the image of t. The caller still re-verifies by
/// comparing tangent spaces, which keeps this routine honest about
/// degenerate inputs.
pub fn locate_veronese_tangency<F: Field>(
    f: &F,
    v: &PolyMap,
    plane: &ProjSubspace<F>,
) -> Result<Option<Vec<F::Elem>>> {
    if v.block_sizes() != [3] || v.multidegree() != [2] {
        return Err(Error::TangencyNotLocated(format!(
            "`{}`: tangency location needs a degree-2 parametrization by one \
             block of three variables",
            v.label()
        )));
    }
    if plane.ambient_dim() != v.ambient_dim() {
        return Err(Error::AmbientMismatch(v.ambient_dim(), plane.ambient_dim()));
    }
    if plane.dim() != 2 {
        return Ok(None);
    }

    // Hessians of the coordinates, constant 3x3 integer matrices.
    let hessians: Vec<[[i64; 3]; 3]> = v
        .coords()
        .iter()
        .map(|c| {
            let mut h = [[0i64; 3]; 3];
            for (a, row) in h.iter_mut().enumerate() {
                for (b, entry) in row.iter_mut().enumerate() {
                    *entry = second_partial(c, a, b);
                }
            }
            h
        })
        .collect();

    // Linear forms vanishing on the plane combine the coordinate Hessians
    // into the Hessians of the pulled-back quadratics.
    let forms = plane.basis().kernel();
    let mut stacked: Vec<Vec<F::Elem>> = Vec::with_capacity(3 * forms.rows());
    for r in 0..forms.rows() {
        let c = forms.row(r);
        let mut m = vec![vec![f.zero(); 3]; 3];
        for (j, h) in hessians.iter().enumerate() {
            if f.is_zero(&c[j]) {
                continue;
            }
            for a in 0..3 {
                for b in 0..3 {
                    if h[a][b] != 0 {
                        let add = f.mul(&c[j], &f.from_i64(h[a][b]));
                        m[a][b] = f.add(&m[a][b], &add);
                    }
                }
            }
        }
        stacked.extend(m);
    }
    let common = Matrix::from_rows(f.clone(), stacked)?.kernel();
    if common.rows() != 1 {
        return Ok(None);
    }
    Ok(Some(common.row(0).to_vec()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, Rationals, DEFAULT_PRIME};
    use crate::geometry::builders::{linear_reembed, plane_through, veronese};

    #[test]
    fn finds_the_tangency_of_a_tangent_plane() {
        // The tangent plane at the image of (1:0:0) is spanned by the
        // images' first derivative directions: e0, e1, e2.
        let y = veronese("y");
        let plane = ProjSubspace::from_i64_rows(
            Rationals,
            5,
            &[
                vec![1, 0, 0, 0, 0, 0],
                vec![0, 1, 0, 0, 0, 0],
                vec![0, 0, 1, 0, 0, 0],
            ],
        )
        .unwrap();
        let t = locate_veronese_tangency(&Rationals, &y, &plane)
            .unwrap()
            .expect("tangent plane has a tangency");
        let tangent = y.tangent_space_elems(&Rationals, &t).unwrap();
        assert_eq!(tangent, plane);
    }

    #[test]
    fn tangency_at_a_general_point_round_trips() {
        let y = veronese("y");
        let fq = PrimeField::new(DEFAULT_PRIME).unwrap();
        let tangent = y.tangent_space(&fq, &[3, -2, 7]).unwrap();
        let t = locate_veronese_tangency(&fq, &y, &tangent)
            .unwrap()
            .expect("tangency exists");
        // The located parameter reproduces the same tangent plane.
        assert_eq!(y.tangent_space_elems(&fq, &t).unwrap(), tangent);
    }

    #[test]
    fn secant_plane_is_tangent_nowhere() {
        let y = veronese("y");
        // A plane through three general points of the surface.
        let p1 = y.evaluate(&Rationals, &[1, 0, 0]).unwrap();
        let p2 = y.evaluate(&Rationals, &[0, 1, 0]).unwrap();
        let p3 = y.evaluate(&Rationals, &[0, 0, 1]).unwrap();
        let rows = vec![p1, p2, p3];
        let plane = ProjSubspace::from_rows(Rationals, 5, rows.clone()).unwrap();
        assert!(locate_veronese_tangency(&Rationals, &y, &plane)
            .unwrap()
            .is_none());
    }

    #[test]
    fn reembedded_surface_still_locates() {
        let y = veronese("y");
        // An injective linear re-embedding into P^6 with dense rows.
        let rows: Vec<Vec<i64>> = vec![
            vec![1, 0, 0, 0, 0, 2, 0],
            vec![0, 1, 0, 0, 3, 0, 0],
            vec![0, 0, 1, 0, 0, 0, 1],
            vec![1, 0, 0, 1, 0, 0, 0],
            vec![0, 2, 0, 0, 1, 0, 0],
            vec![0, 0, 5, 0, 0, 1, 1],
        ];
        let yy = linear_reembed(&y, &rows).unwrap();
        let tangent = yy.tangent_space(&Rationals, &[2, 1, -1]).unwrap();
        let t = locate_veronese_tangency(&Rationals, &yy, &tangent)
            .unwrap()
            .expect("tangency exists");
        assert_eq!(yy.tangent_space_elems(&Rationals, &t).unwrap(), tangent);
    }

    #[test]
    fn refuses_non_quadratic_parametrizations() {
        let p =
            plane_through("p", &[vec![1, 0, 0, 0], vec![0, 1, 0, 0], vec![0, 0, 1, 0]]).unwrap();
        let target = ProjSubspace::from_i64_rows(
            Rationals,
            3,
            &[vec![1, 0, 0, 0], vec![0, 1, 0, 0], vec![0, 0, 1, 0]],
        )
        .unwrap();
        assert!(matches!(
            locate_veronese_tangency(&Rationals, &p, &target),
            Err(Error::TangencyNotLocated(_))
        ));
    }
}
