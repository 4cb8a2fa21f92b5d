//! Parametrized projective varieties.
//!
//! A `PolyMap` is a rational map from a product of projective spaces into
//! P^N, given by coordinates that are multihomogeneous polynomials of one
//! shared multidegree. Coefficients are integers, so the same map can be
//! evaluated exactly over any field.

use crate::error::{Error, Result};
use crate::field::Field;
use crate::geometry::poly::MultiPoly;
use crate::linalg::{Matrix, ProjSubspace};
use rand::Rng;

/// Parameter sample: one integer per domain variable, flattened block by
/// block. Integer samples evaluate identically over every field.
pub type ParamPoint = Vec<i64>;

/// Sampling box for generic parameter values.
pub const SAMPLE_BOUND: i64 = 10_000;

#[derive(Clone, Debug, PartialEq)]
pub struct PolyMap {
    label: String,
    coords: Vec<MultiPoly>,
}

impl PolyMap {
    /// Builds a map from its coordinate polynomials. All coordinates must
    /// share one block structure and multidegree, at least one must be
    /// nonzero, and the multidegree must not be identically zero.
    pub fn new(label: impl Into<String>, coords: Vec<MultiPoly>) -> Result<Self> {
        let label = label.into();
        if coords.len() < 2 {
            return Err(Error::InvalidPoly(format!(
                "`{label}`: a projective image needs at least 2 coordinates"
            )));
        }
        let shape = (coords[0].block_sizes().to_vec(), coords[0].multidegree().to_vec());
        for c in &coords {
            if (c.block_sizes(), c.multidegree()) != (&shape.0[..], &shape.1[..]) {
                return Err(Error::InvalidPoly(format!(
                    "`{label}`: coordinates disagree on block structure or multidegree"
                )));
            }
        }
        if shape.1.iter().all(|&d| d == 0) {
            return Err(Error::InvalidPoly(format!(
                "`{label}`: constant map (multidegree zero)"
            )));
        }
        if coords.iter().all(|c| c.is_zero()) {
            return Err(Error::InvalidPoly(format!(
                "`{label}`: all coordinates are zero"
            )));
        }
        Ok(PolyMap { label, coords })
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn with_label(&self, label: impl Into<String>) -> PolyMap {
        PolyMap {
            label: label.into(),
            coords: self.coords.clone(),
        }
    }

    pub fn coords(&self) -> &[MultiPoly] {
        &self.coords
    }

    pub fn block_sizes(&self) -> &[usize] {
        self.coords[0].block_sizes()
    }

    pub fn multidegree(&self) -> &[u32] {
        self.coords[0].multidegree()
    }

    pub fn total_vars(&self) -> usize {
        self.coords[0].total_vars()
    }

    /// Projective dimension of the domain product.
    pub fn dim_source(&self) -> usize {
        self.total_vars() - self.block_sizes().len()
    }

    /// N for the target space P^N.
    pub fn ambient_dim(&self) -> usize {
        self.coords.len() - 1
    }

    /// Samples one integer parameter point, no block identically zero.
    pub fn random_param<R: Rng + ?Sized>(&self, rng: &mut R) -> ParamPoint {
        let mut p = vec![0i64; self.total_vars()];
        let mut off = 0;
        for &size in self.block_sizes() {
            loop {
                for v in p[off..off + size].iter_mut() {
                    *v = rng.gen_range(-SAMPLE_BOUND..=SAMPLE_BOUND);
                }
                if p[off..off + size].iter().any(|&v| v != 0) {
                    break;
                }
            }
            off += size;
        }
        p
    }

    fn check_arity(&self, len: usize) -> Result<()> {
        if len != self.total_vars() {
            return Err(Error::DomainMismatch(format!(
                "`{}`: {} parameter values, expected {}",
                self.label,
                len,
                self.total_vars()
            )));
        }
        Ok(())
    }

    /// Evaluates the map at a field-valued parameter point. Errors when
    /// every coordinate vanishes (the sample hit the base locus).
    pub fn evaluate_elems<F: Field>(&self, f: &F, vals: &[F::Elem]) -> Result<Vec<F::Elem>> {
        self.check_arity(vals.len())?;
        let out: Vec<F::Elem> = self.coords.iter().map(|c| c.evaluate(f, vals)).collect();
        if out.iter().all(|x| f.is_zero(x)) {
            return Err(Error::BasePoint(self.label.clone()));
        }
        Ok(out)
    }

    /// Evaluates the map at an integer parameter point.
    pub fn evaluate<F: Field>(&self, f: &F, param: &[i64]) -> Result<Vec<F::Elem>> {
        self.check_arity(param.len())?;
        let vals: Vec<F::Elem> = param.iter().map(|&v| f.from_i64(v)).collect();
        self.evaluate_elems(f, &vals)
    }

    pub fn image_point<F: Field>(&self, f: &F, param: &[i64]) -> Result<ProjSubspace<F>> {
        ProjSubspace::point(f.clone(), self.ambient_dim(), self.evaluate(f, param)?)
    }

    /// Jacobian at a field-valued parameter point: one row per domain
    /// variable, one column per target coordinate.
    pub fn jacobian_elems<F: Field>(&self, f: &F, vals: &[F::Elem]) -> Result<Matrix<F>> {
        self.check_arity(vals.len())?;
        let rows: Vec<Vec<F::Elem>> = (0..self.total_vars())
            .map(|v| {
                self.coords
                    .iter()
                    .map(|c| c.derivative(v).evaluate(f, vals))
                    .collect()
            })
            .collect();
        Matrix::from_rows(f.clone(), rows)
    }

    pub fn jacobian<F: Field>(&self, f: &F, param: &[i64]) -> Result<Matrix<F>> {
        self.check_arity(param.len())?;
        let vals: Vec<F::Elem> = param.iter().map(|&v| f.from_i64(v)).collect();
        self.jacobian_elems(f, &vals)
    }

    /// Embedded (projective) tangent space at the image of a field-valued
    /// parameter point. The Jacobian row space contains the image point, so
    /// for a sample that is smooth and generic on a variety of dimension d
    /// the rank is d + 1. Any smaller rank is reported as a singular sample
    /// so callers can resample; this routine refuses to guess.
    pub fn tangent_space_elems<F: Field>(
        &self,
        f: &F,
        vals: &[F::Elem],
    ) -> Result<ProjSubspace<F>> {
        // Base-locus samples have rank-deficient, pointless Jacobians.
        self.evaluate_elems(f, vals)?;
        let jac = self.jacobian_elems(f, vals)?;
        let t = ProjSubspace::from_matrix(self.ambient_dim(), &jac)?;
        let want = self.dim_source() + 1;
        if t.rank() != want {
            return Err(Error::SingularSample {
                label: self.label.clone(),
                got: t.rank(),
                want,
            });
        }
        Ok(t)
    }

    pub fn tangent_space<F: Field>(&self, f: &F, param: &[i64]) -> Result<ProjSubspace<F>> {
        self.check_arity(param.len())?;
        let vals: Vec<F::Elem> = param.iter().map(|&v| f.from_i64(v)).collect();
        self.tangent_space_elems(f, &vals)
    }

    /// Exact linear span of the image: every image point is the
    /// monomial-weighted combination of the coefficient rows, and generic
    /// samples realize the whole row space.
    pub fn coefficient_span<F: Field>(&self, f: &F) -> Result<ProjSubspace<F>> {
        let mut mono: Vec<&[u32]> = Vec::new();
        for c in &self.coords {
            for t in c.terms() {
                if !mono.contains(&&t.exps[..]) {
                    mono.push(&t.exps);
                }
            }
        }
        let rows: Vec<Vec<F::Elem>> = mono
            .iter()
            .map(|m| {
                self.coords
                    .iter()
                    .map(|c| {
                        let coeff = c
                            .terms()
                            .iter()
                            .find(|t| t.exps == **m)
                            .map(|t| t.coeff)
                            .unwrap_or(0);
                        f.from_i64(coeff)
                    })
                    .collect()
            })
            .collect();
        ProjSubspace::from_rows(f.clone(), self.ambient_dim(), rows)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, Rationals};
    use crate::geometry::poly::Term;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn conic_p2() -> PolyMap {
        // (s:t) -> (s^2 : st : t^2), the smooth conic in P^2.
        let m = |e: Vec<u32>| MultiPoly::monomial(vec![2], vec![2], 1, e).unwrap();
        PolyMap::new("conic", vec![m(vec![2, 0]), m(vec![1, 1]), m(vec![0, 2])]).unwrap()
    }

    #[test]
    fn evaluate_and_base_point() {
        let c = conic_p2();
        let f = Rationals;
        let p = c.evaluate(&f, &[2, 3]).unwrap();
        assert_eq!(p, vec![f.from_i64(4), f.from_i64(6), f.from_i64(9)]);

        // A map whose coordinates share the common factor s hits its base
        // locus at s = 0.
        let m = |e: Vec<u32>| MultiPoly::monomial(vec![2], vec![2], 1, e).unwrap();
        let degenerate = PolyMap::new("sliced", vec![m(vec![2, 0]), m(vec![1, 1])]).unwrap();
        assert!(matches!(
            degenerate.evaluate(&f, &[0, 1]),
            Err(Error::BasePoint(_))
        ));
    }

    #[test]
    fn tangent_contains_image_point() {
        let c = conic_p2();
        let f = Rationals;
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..10 {
            let p = c.random_param(&mut rng);
            let t = c.tangent_space(&f, &p).unwrap();
            assert_eq!(t.dim(), 1);
            let img = c.evaluate(&f, &p).unwrap();
            assert!(t.contains_point(&img).unwrap());
        }
    }

    #[test]
    fn tangent_matches_over_prime_field() {
        let c = conic_p2();
        let fq = PrimeField::new(crate::field::DEFAULT_PRIME).unwrap();
        let t = c.tangent_space(&fq, &[3, 5]).unwrap();
        assert_eq!(t.dim(), 1);
    }

    #[test]
    fn coefficient_span_of_conic_fills_plane() {
        let c = conic_p2();
        let s = c.coefficient_span(&Rationals).unwrap();
        assert_eq!(s.dim(), 2);
    }

    #[test]
    fn rejects_shape_mismatch() {
        let a = MultiPoly::monomial(vec![2], vec![2], 1, vec![2, 0]).unwrap();
        let b = MultiPoly::monomial(vec![2], vec![3], 1, vec![2, 1]).unwrap();
        assert!(PolyMap::new("bad", vec![a, b]).is_err());
    }

    #[test]
    fn rejects_constant_map() {
        let one = MultiPoly::new(
            vec![2],
            vec![0],
            vec![Term { coeff: 1, exps: vec![0, 0] }],
        )
        .unwrap();
        assert!(PolyMap::new("const", vec![one.clone(), one]).is_err());
    }

    #[test]
    fn random_param_avoids_zero_blocks() {
        let c = conic_p2();
        let mut rng = ChaCha8Rng::seed_from_u64(0);
        for _ in 0..100 {
            let p = c.random_param(&mut rng);
            assert!(p.iter().any(|&v| v != 0));
            assert!(p.iter().all(|&v| v.abs() <= SAMPLE_BOUND));
        }
    }
}
