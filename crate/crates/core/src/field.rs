//! Scalar fields for exact computation.
//!
//! Two implementations: arbitrary-precision rationals (the default) and a
//! prime field `Z/p` with `p > 2^31`. Every scalar is kept in canonical form:
//! rationals fully reduced with positive denominator, prime-field elements in
//! `[0, p)`. Elimination is exposed through the field so the rational field
//! can use a fraction-free (Bareiss) pivot scheme while the prime field uses
//! plain Gauss-Jordan.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// A field of scalars. The field value itself carries runtime configuration
/// (the prime modulus); elements are plain data.
pub trait Field: Clone + PartialEq + fmt::Debug + Send + Sync + 'static {
    type Elem: Clone + PartialEq + fmt::Debug + Send + Sync + 'static;

    fn name(&self) -> String;
    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn from_i64(&self, v: i64) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn inv(&self, a: &Self::Elem) -> Result<Self::Elem>;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn format(&self, a: &Self::Elem) -> String;

    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Result<Self::Elem> {
        Ok(self.mul(a, &self.inv(b)?))
    }

    /// Reduce `rows` in place to canonical reduced row-echelon form over the
    /// full row count (zero rows sink to the bottom). Returns the pivot
    /// columns; the rank is their number.
    fn rref_rows(&self, rows: &mut [Vec<Self::Elem>]) -> Vec<usize> {
        gauss_jordan(self, rows)
    }
}

/// Textbook Gauss-Jordan over any field. Pivots are normalised to 1 and
/// cleared above and below, so the output is the unique RREF.
pub(crate) fn gauss_jordan<F: Field + ?Sized>(f: &F, rows: &mut [Vec<F::Elem>]) -> Vec<usize> {
    let m = rows.len();
    if m == 0 {
        return Vec::new();
    }
    let n = rows[0].len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..n {
        if r == m {
            break;
        }
        let Some(pr) = (r..m).find(|&i| !f.is_zero(&rows[i][c])) else {
            continue;
        };
        rows.swap(r, pr);
        let inv = f
            .inv(&rows[r][c])
            .expect("pivot is nonzero by construction");
        for j in c..n {
            rows[r][j] = f.mul(&rows[r][j], &inv);
        }
        for i in 0..m {
            if i != r && !f.is_zero(&rows[i][c]) {
                let factor = rows[i][c].clone();
                for j in c..n {
                    let t = f.mul(&factor, &rows[r][j]);
                    rows[i][j] = f.sub(&rows[i][j], &t);
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// The field of arbitrary-precision rationals.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub struct Rationals;

impl Field for Rationals {
    type Elem = BigRational;

    fn name(&self) -> String {
        "rational".into()
    }
    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn from_i64(&self, v: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(v))
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }
    fn inv(&self, a: &BigRational) -> Result<BigRational> {
        if a.is_zero() {
            return Err(Error::DivisionByZero("the rationals"));
        }
        Ok(a.recip())
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
    fn format(&self, a: &BigRational) -> String {
        if a.denom().is_one() {
            a.numer().to_string()
        } else {
            format!("{}/{}", a.numer(), a.denom())
        }
    }

    /// Fraction-free elimination: rows are scaled to primitive integer
    /// vectors, a Bareiss forward pass keeps every intermediate entry an
    /// exact minor of the input, and a short rational back-substitution
    /// produces the canonical RREF. This bounds coefficient growth far
    /// better than naive rational pivoting.
    fn rref_rows(&self, rows: &mut [Vec<BigRational>]) -> Vec<usize> {
        let m = rows.len();
        if m == 0 {
            return Vec::new();
        }
        let n = rows[0].len();

        let mut int_rows: Vec<Vec<BigInt>> = rows
            .iter()
            .map(|row| {
                let mut lcm = BigInt::one();
                for x in row {
                    if !x.is_zero() {
                        lcm = lcm.lcm(x.denom());
                    }
                }
                let scaled: Vec<BigInt> = row
                    .iter()
                    .map(|x| {
                        let r = x * BigRational::from_integer(lcm.clone());
                        debug_assert!(r.denom().is_one());
                        r.numer().clone()
                    })
                    .collect();
                primitive_part(scaled)
            })
            .collect();

        // Bareiss forward pass with row pivoting and column skipping; each
        // division by the previous pivot is exact (Sylvester's identity).
        let mut pivots = Vec::new();
        let mut prev = BigInt::one();
        let mut r = 0;
        for c in 0..n {
            if r == m {
                break;
            }
            let Some(pr) = (r..m).find(|&i| !int_rows[i][c].is_zero()) else {
                continue;
            };
            int_rows.swap(r, pr);
            let (head, tail) = int_rows.split_at_mut(r + 1);
            let prow = &head[r];
            for row in tail.iter_mut() {
                let lead = std::mem::replace(&mut row[c], BigInt::zero());
                for j in (c + 1)..n {
                    let num = &prow[c] * &row[j] - &lead * &prow[j];
                    let (q, rem) = num.div_rem(&prev);
                    assert!(rem.is_zero(), "fraction-free elimination invariant");
                    row[j] = q;
                }
            }
            prev = int_rows[r][c].clone();
            pivots.push(c);
            r += 1;
        }

        // Back-substitute over the rationals on the (small) echelon block.
        let rank = pivots.len();
        let mut reduced: Vec<Vec<BigRational>> = int_rows[..rank]
            .iter()
            .map(|row| row.iter().map(|x| BigRational::from_integer(x.clone())).collect())
            .collect();
        for i in (0..rank).rev() {
            let pc = pivots[i];
            let inv = reduced[i][pc].recip();
            for j in pc..n {
                reduced[i][j] = &reduced[i][j] * &inv;
            }
            for k in 0..i {
                if !reduced[k][pc].is_zero() {
                    let factor = reduced[k][pc].clone();
                    for j in pc..n {
                        let t = &factor * &reduced[i][j];
                        reduced[k][j] = &reduced[k][j] - t;
                    }
                }
            }
        }

        for (i, row) in rows.iter_mut().enumerate() {
            if i < rank {
                row.clone_from_slice(&reduced[i]);
            } else {
                for x in row.iter_mut() {
                    *x = BigRational::zero();
                }
            }
        }
        pivots
    }
}

fn primitive_part(mut row: Vec<BigInt>) -> Vec<BigInt> {
    let mut g = BigInt::zero();
    for x in &row {
        if !x.is_zero() {
            g = g.gcd(x);
        }
    }
    if g > BigInt::one() {
        for x in row.iter_mut() {
            *x = &*x / &g;
        }
    }
    row
}

/// The prime field `Z/p` for a configured prime `p > 2^31`. Elements are
/// canonical representatives in `[0, p)`; arithmetic widens through `u128`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct PrimeField {
    p: u64,
}

/// Default modulus: the Mersenne prime `2^61 - 1`.
pub const DEFAULT_PRIME: u64 = 2_305_843_009_213_693_951;

impl PrimeField {
    pub fn new(p: u64) -> Result<Self> {
        if p <= (1u64 << 31) {
            return Err(Error::InvalidModel(format!(
                "prime modulus must exceed 2^31, got {p}"
            )));
        }
        if !is_prime_u64(p) {
            return Err(Error::InvalidModel(format!("{p} is not prime")));
        }
        Ok(PrimeField { p })
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }
}

impl Field for PrimeField {
    type Elem = u64;

    fn name(&self) -> String {
        format!("prime:{}", self.p)
    }
    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1
    }
    fn from_i64(&self, v: i64) -> u64 {
        let m = v.rem_euclid(self.p as i64);
        m as u64
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        let s = (*a as u128) + (*b as u128);
        (s % self.p as u128) as u64
    }
    fn sub(&self, a: &u64, b: &u64) -> u64 {
        if a >= b {
            a - b
        } else {
            self.p - (b - a)
        }
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        ((*a as u128 * *b as u128) % self.p as u128) as u64
    }
    fn neg(&self, a: &u64) -> u64 {
        if *a == 0 {
            0
        } else {
            self.p - a
        }
    }
    fn inv(&self, a: &u64) -> Result<u64> {
        if *a == 0 {
            return Err(Error::DivisionByZero("the prime field"));
        }
        // Extended Euclid on (a, p); p prime so the gcd is 1.
        let (mut r0, mut r1) = (*a as i128, self.p as i128);
        let (mut s0, mut s1) = (1i128, 0i128);
        while r1 != 0 {
            let q = r0 / r1;
            (r0, r1) = (r1, r0 - q * r1);
            (s0, s1) = (s1, s0 - q * s1);
        }
        debug_assert_eq!(r0, 1);
        Ok(s0.rem_euclid(self.p as i128) as u64)
    }
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    fn format(&self, a: &u64) -> String {
        a.to_string()
    }
}

/// Deterministic Miller-Rabin for u64 (the listed bases are a complete set).
fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == p {
            return true;
        }
        if n % p == 0 {
            return false;
        }
    }
    let mut d = n - 1;
    let mut s = 0u32;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    let mulmod = |a: u64, b: u64| ((a as u128 * b as u128) % n as u128) as u64;
    let powmod = |mut base: u64, mut e: u64| {
        let mut acc = 1u64;
        base %= n;
        while e > 0 {
            if e & 1 == 1 {
                acc = mulmod(acc, base);
            }
            base = mulmod(base, base);
            e >>= 1;
        }
        acc
    };
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = powmod(a, d);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mulmod(x, x);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Signed;

    #[test]
    fn rational_canonical_form() {
        let f = Rationals;
        let x = f.div(&f.from_i64(6), &f.from_i64(-4)).unwrap();
        assert_eq!(f.format(&x), "-3/2");
        assert!(x.denom().is_positive());
        let y = f.div(&f.from_i64(4), &f.from_i64(2)).unwrap();
        assert_eq!(f.format(&y), "2");
    }

    #[test]
    fn rational_division_by_zero_is_an_error() {
        let f = Rationals;
        assert!(f.inv(&f.zero()).is_err());
    }

    #[test]
    fn prime_field_basics() {
        let f = PrimeField::new(DEFAULT_PRIME).unwrap();
        let a = f.from_i64(-3);
        assert_eq!(a, DEFAULT_PRIME - 3);
        let inv = f.inv(&f.from_i64(12345)).unwrap();
        assert_eq!(f.mul(&inv, &f.from_i64(12345)), 1);
        assert!(f.inv(&0).is_err());
    }

    #[test]
    fn prime_field_rejects_small_or_composite_moduli() {
        assert!(PrimeField::new(101).is_err());
        assert!(PrimeField::new((1u64 << 32) + 1).is_err()); // 641 * 6700417
        assert!(PrimeField::new(DEFAULT_PRIME).is_ok());
    }

    #[test]
    fn miller_rabin_agrees_with_trial_division_on_small_numbers() {
        let naive = |n: u64| n >= 2 && (2..n).take_while(|d| d * d <= n).all(|d| n % d != 0);
        for n in 0..2_000u64 {
            assert_eq!(is_prime_u64(n), naive(n), "n = {n}");
        }
    }
}
