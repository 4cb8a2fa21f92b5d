//! Multihomogeneous polynomials with integer coefficients.
//!
//! Variables are grouped into blocks, one block per projective factor of the
//! domain; every term must have the same total degree inside each block (the
//! multidegree). Terms are kept sorted by exponent vector with no zero
//! coefficients, so equality of polynomials is structural equality.

use crate::error::{Error, Result};
use crate::field::Field;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Term {
    pub coeff: i64,
    pub exps: Vec<u32>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiPoly {
    block_sizes: Vec<usize>,
    multidegree: Vec<u32>,
    terms: Vec<Term>,
}

impl MultiPoly {
    pub fn new(block_sizes: Vec<usize>, multidegree: Vec<u32>, terms: Vec<Term>) -> Result<Self> {
        if block_sizes.len() != multidegree.len() {
            return Err(Error::InvalidPoly(
                "one multidegree entry per block required".into(),
            ));
        }
        if block_sizes.iter().any(|&s| s == 0) {
            return Err(Error::InvalidPoly("empty variable block".into()));
        }
        let total: usize = block_sizes.iter().sum();
        for t in &terms {
            if t.exps.len() != total {
                return Err(Error::InvalidPoly(format!(
                    "term has {} exponents, expected {}",
                    t.exps.len(),
                    total
                )));
            }
            let mut off = 0;
            for (b, &size) in block_sizes.iter().enumerate() {
                let d: u32 = t.exps[off..off + size].iter().sum();
                if d != multidegree[b] {
                    return Err(Error::InvalidPoly(format!(
                        "term degree {} in block {} does not match multidegree {}",
                        d, b, multidegree[b]
                    )));
                }
                off += size;
            }
        }
        let mut p = MultiPoly {
            block_sizes,
            multidegree,
            terms,
        };
        p.normalize();
        Ok(p)
    }

    pub fn zero(block_sizes: Vec<usize>, multidegree: Vec<u32>) -> Self {
        MultiPoly {
            block_sizes,
            multidegree,
            terms: Vec::new(),
        }
    }

    fn normalize(&mut self) {
        self.terms.sort_by(|a, b| a.exps.cmp(&b.exps));
        let mut out: Vec<Term> = Vec::with_capacity(self.terms.len());
        for t in self.terms.drain(..) {
            match out.last_mut() {
                Some(last) if last.exps == t.exps => last.coeff += t.coeff,
                _ => out.push(t),
            }
        }
        out.retain(|t| t.coeff != 0);
        self.terms = out;
    }

    pub fn block_sizes(&self) -> &[usize] {
        &self.block_sizes
    }
    pub fn multidegree(&self) -> &[u32] {
        &self.multidegree
    }
    pub fn terms(&self) -> &[Term] {
        &self.terms
    }
    pub fn total_vars(&self) -> usize {
        self.block_sizes.iter().sum()
    }
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn var_index(&self, block: usize, i: usize) -> usize {
        self.block_sizes[..block].iter().sum::<usize>() + i
    }

    fn check_same_shape(&self, other: &MultiPoly) -> Result<()> {
        if self.block_sizes != other.block_sizes || self.multidegree != other.multidegree {
            return Err(Error::InvalidPoly(
                "polynomials have different block structure or multidegree".into(),
            ));
        }
        Ok(())
    }

    pub fn add(&self, other: &MultiPoly) -> Result<MultiPoly> {
        self.check_same_shape(other)?;
        let mut terms = self.terms.clone();
        terms.extend(other.terms.iter().cloned());
        let mut p = MultiPoly {
            block_sizes: self.block_sizes.clone(),
            multidegree: self.multidegree.clone(),
            terms,
        };
        p.normalize();
        Ok(p)
    }

    pub fn scale(&self, c: i64) -> MultiPoly {
        let mut p = self.clone();
        for t in p.terms.iter_mut() {
            t.coeff *= c;
        }
        p.normalize();
        p
    }

    /// Product of two polynomials over the same blocks; multidegrees add.
    pub fn mul(&self, other: &MultiPoly) -> Result<MultiPoly> {
        if self.block_sizes != other.block_sizes {
            return Err(Error::InvalidPoly(
                "product requires identical variable blocks".into(),
            ));
        }
        let md: Vec<u32> = self
            .multidegree
            .iter()
            .zip(&other.multidegree)
            .map(|(a, b)| a + b)
            .collect();
        let mut terms = Vec::with_capacity(self.terms.len() * other.terms.len());
        for a in &self.terms {
            for b in &other.terms {
                let exps: Vec<u32> = a.exps.iter().zip(&b.exps).map(|(x, y)| x + y).collect();
                terms.push(Term {
                    coeff: a.coeff * b.coeff,
                    exps,
                });
            }
        }
        let mut p = MultiPoly {
            block_sizes: self.block_sizes.clone(),
            multidegree: md,
            terms,
        };
        p.normalize();
        Ok(p)
    }

    /// Partial derivative with respect to one flat variable index. The
    /// multidegree drops by one in that variable's block.
    pub fn derivative(&self, var: usize) -> MultiPoly {
        let block = {
            let mut off = 0;
            let mut found = 0;
            for (b, &size) in self.block_sizes.iter().enumerate() {
                if var < off + size {
                    found = b;
                    break;
                }
                off += size;
            }
            found
        };
        let mut md = self.multidegree.clone();
        if md[block] == 0 {
            return MultiPoly::zero(self.block_sizes.clone(), md);
        }
        md[block] -= 1;
        let terms = self
            .terms
            .iter()
            .filter(|t| t.exps[var] > 0)
            .map(|t| {
                let mut exps = t.exps.clone();
                exps[var] -= 1;
                Term {
                    coeff: t.coeff * t.exps[var] as i64,
                    exps,
                }
            })
            .collect();
        let mut p = MultiPoly {
            block_sizes: self.block_sizes.clone(),
            multidegree: md,
            terms,
        };
        p.normalize();
        p
    }

    pub fn evaluate<F: Field>(&self, f: &F, vals: &[F::Elem]) -> F::Elem {
        debug_assert_eq!(vals.len(), self.total_vars());
        let mut acc = f.zero();
        for t in &self.terms {
            let mut m = f.from_i64(t.coeff);
            for (v, &e) in vals.iter().zip(&t.exps) {
                for _ in 0..e {
                    m = f.mul(&m, v);
                }
            }
            acc = f.add(&acc, &m);
        }
        acc
    }

    /// Convenience constructor for a single monomial.
    pub fn monomial(
        block_sizes: Vec<usize>,
        multidegree: Vec<u32>,
        coeff: i64,
        exps: Vec<u32>,
    ) -> Result<MultiPoly> {
        MultiPoly::new(block_sizes, multidegree, vec![Term { coeff, exps }])
    }
}
