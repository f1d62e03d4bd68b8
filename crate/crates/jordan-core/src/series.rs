//! Truncated power series in `z` over an exact coefficient ring, and Laurent
//! polynomials in a second variable `t`.
//!
//! The working ring for the residue equations is `Z[t, 1/t][[z]]` truncated at
//! a fixed order in `z`. A coefficient of such a series is a Laurent
//! polynomial in `t`; extracting the `t^{-1}` coefficient degree by degree is
//! the residue operation the solvers are built on.
//!
//! The series type [`TSeries`] is generic over its scalar: integer
//! coefficients give ordinary counting series, Laurent-polynomial
//! coefficients give two-variable character series, and any other exact ring
//! satisfying [`Scalar`] works the same way.

use std::collections::BTreeMap;
use std::fmt;
use std::mem;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::{BigInt, BigUint, Sign};
use num_traits::{One, Zero};
use thiserror::Error;

/// Errors from series and Laurent-polynomial arithmetic.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SeriesError {
    /// Binary operation on series truncated at different orders.
    #[error("truncation orders differ: {0} vs {1}")]
    TruncMismatch(usize, usize),
    /// Inversion requires the constant term to be exactly 1.
    #[error("cannot invert a series whose constant term is not 1")]
    NonUnitConstant,
    /// Multiplicity extraction requires invariance under `t -> 1/t`.
    #[error("coefficient at z-degree {0} is not symmetric under t -> 1/t")]
    Asymmetric(usize),
}

/// Coefficient-ring bound for [`TSeries`]: exact equality, ring operations by
/// value, and explicit zero/one. Satisfied by `BigInt`, [`LaurentPoly`], and
/// the machine floats (floats are admissible instantiations but nothing in
/// this crate uses them: every downstream check demands exact zeros).
pub trait Scalar:
    Clone + PartialEq + Zero + One + Neg<Output = Self> + Sub<Output = Self>
{
}

impl<T> Scalar for T where
    T: Clone + PartialEq + Zero + One + Neg<Output = T> + Sub<Output = T>
{
}

/// Laurent polynomial in `t` with arbitrary-precision integer coefficients.
///
/// Zero coefficients are never stored, so structural equality is semantic
/// equality.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct LaurentPoly {
    coeffs: BTreeMap<i64, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::t_pow(0)
    }

    /// The monomial `t^k`.
    pub fn t_pow(k: i64) -> Self {
        let mut coeffs = BTreeMap::new();
        coeffs.insert(k, BigInt::one());
        LaurentPoly { coeffs }
    }

    /// Builds from `(exponent, coefficient)` pairs, summing repeats and
    /// dropping zeros.
    pub fn from_terms<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = (i64, BigInt)>,
    {
        let mut p = Self::zero();
        for (k, c) in terms {
            p.add_term(k, c);
        }
        p
    }

    /// The character `t^{-k} + t^{-k+1} + ... + t^k` of the irreducible
    /// two-variable weight string of highest weight `2k`.
    pub fn p_char(k: u32) -> Self {
        let k = i64::from(k);
        Self::from_terms((-k..=k).map(|j| (j, BigInt::one())))
    }

    /// Adds `c * t^k` in place.
    pub fn add_term(&mut self, k: i64, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.coeffs.entry(k) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// The coefficient of `t^k` (zero when absent).
    pub fn coeff(&self, k: i64) -> BigInt {
        self.coeffs.get(&k).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Iterates `(exponent, coefficient)` in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        self.coeffs.iter().map(|(k, c)| (*k, c))
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.coeffs.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.coeffs.keys().next_back().copied()
    }

    /// Whether the polynomial is invariant under `t -> 1/t`.
    pub fn is_symmetric(&self) -> bool {
        self.coeffs.iter().all(|(k, c)| self.coeff(-k) == *c)
    }

    /// The coefficient of `t^{-1}`. This is the residue at `t = 0` of the
    /// 1-form `a dt` when `a` is read as a Laurent series in `t`.
    pub fn residue(&self) -> BigInt {
        self.coeff(-1)
    }

    /// Multiplicity of the weight string of highest weight `2k` in a
    /// symmetric Laurent polynomial: `c_k - c_{k+1}` where `c_j` is the
    /// coefficient of `t^j`.
    pub fn multiplicity(&self, k: u32) -> Result<BigInt, SeriesError> {
        if !self.is_symmetric() {
            return Err(SeriesError::Asymmetric(0));
        }
        let k = i64::from(k);
        Ok(self.coeff(k) - self.coeff(k + 1))
    }

    /// Substitutes `t = 1`, summing all coefficients.
    pub fn eval_one(&self) -> BigInt {
        self.coeffs.values().sum()
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LaurentPoly {
            coeffs: self.coeffs.iter().map(|(k, v)| (*k, v * c)).collect(),
        }
    }
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;
    fn add(mut self, rhs: LaurentPoly) -> LaurentPoly {
        for (k, c) in rhs.coeffs {
            self.add_term(k, c);
        }
        self
    }
}

impl AddAssign for LaurentPoly {
    fn add_assign(&mut self, rhs: LaurentPoly) {
        for (k, c) in rhs.coeffs {
            self.add_term(k, c);
        }
    }
}

impl Sub for LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: LaurentPoly) -> LaurentPoly {
        self + (-rhs)
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            coeffs: self.coeffs.into_iter().map(|(k, c)| (k, -c)).collect(),
        }
    }
}

impl Mul for LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        &self * &rhs
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (i, a) in &self.coeffs {
            for (j, b) in &rhs.coeffs {
                out.add_term(i + j, a * b);
            }
        }
        out
    }
}

impl Zero for LaurentPoly {
    fn zero() -> Self {
        LaurentPoly::zero()
    }
    fn is_zero(&self) -> bool {
        LaurentPoly::is_zero(self)
    }
}

impl One for LaurentPoly {
    fn one() -> Self {
        LaurentPoly::one()
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in &self.coeffs {
            if first {
                write!(f, "{}", term_string(*k, c, false))?;
                first = false;
            } else {
                write!(f, " {}", term_string(*k, c, true))?;
            }
        }
        Ok(())
    }
}

fn term_string(k: i64, c: &BigInt, with_sign: bool) -> String {
    let (sign, mag) = if c.sign() == Sign::Minus {
        ("-", -c)
    } else {
        ("+", c.clone())
    };
    let coeff = if mag.is_one() && k != 0 {
        String::new()
    } else {
        mag.to_string()
    };
    let var = match k {
        0 => String::new(),
        1 => "t".to_string(),
        _ => format!("t^{k}"),
    };
    let body = match (coeff.is_empty(), var.is_empty()) {
        (true, _) => var,
        (false, true) => coeff,
        (false, false) => format!("{coeff}*{var}"),
    };
    if with_sign {
        format!("{sign} {body}")
    } else if sign == "-" {
        format!("-{body}")
    } else {
        body
    }
}

/// Residue kernel `1/t - 1`: paired against a symmetric Laurent polynomial,
/// its residue is the multiplicity of the trivial weight string.
pub fn string0_kernel() -> LaurentPoly {
    LaurentPoly::from_terms([(-1, BigInt::one()), (0, -BigInt::one())])
}

/// Residue kernel `1 - t`: paired against a symmetric Laurent polynomial,
/// its residue is the multiplicity of the highest-weight-2 string.
pub fn string2_kernel() -> LaurentPoly {
    LaurentPoly::from_terms([(0, BigInt::one()), (1, -BigInt::one())])
}

/// Power series in `z` truncated at a fixed order.
///
/// The coefficient vector always has length `trunc + 1`; arithmetic never
/// reads or writes degrees above `trunc`. Binary operations require equal
/// truncation orders and report a mismatch as an error (the panicking
/// operator impls delegate to the checked methods).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TSeries<C> {
    trunc: usize,
    coeffs: Vec<C>,
}

impl<C: Scalar> TSeries<C> {
    /// The zero series truncated at `trunc`.
    pub fn new(trunc: usize) -> Self {
        TSeries {
            trunc,
            coeffs: vec![C::zero(); trunc + 1],
        }
    }

    /// The constant series 1.
    pub fn one(trunc: usize) -> Self {
        let mut s = Self::new(trunc);
        s.coeffs[0] = C::one();
        s
    }

    /// Builds from `(z-degree, coefficient)` pairs; degrees above `trunc`
    /// are dropped, repeated degrees are summed.
    pub fn from_terms<I>(trunc: usize, terms: I) -> Self
    where
        I: IntoIterator<Item = (usize, C)>,
    {
        let mut s = Self::new(trunc);
        for (d, c) in terms {
            if d <= trunc {
                let cur = mem::replace(&mut s.coeffs[d], C::zero());
                s.coeffs[d] = cur + c;
            }
        }
        s
    }

    pub fn trunc(&self) -> usize {
        self.trunc
    }

    /// The coefficient of `z^d`. Panics if `d > trunc`.
    pub fn coeff(&self, d: usize) -> &C {
        &self.coeffs[d]
    }

    /// Overwrites the coefficient of `z^d`. Panics if `d > trunc`.
    pub fn set_coeff(&mut self, d: usize, c: C) {
        self.coeffs[d] = c;
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// Re-truncates to a lower order, dropping higher coefficients.
    pub fn truncated(&self, trunc: usize) -> Self {
        assert!(trunc <= self.trunc, "cannot extend a truncated series");
        TSeries {
            trunc,
            coeffs: self.coeffs[..=trunc].to_vec(),
        }
    }

    /// Applies `f` to every coefficient, keeping the truncation order.
    pub fn map<D: Scalar>(&self, f: impl FnMut(&C) -> D) -> TSeries<D> {
        TSeries {
            trunc: self.trunc,
            coeffs: self.coeffs.iter().map(f).collect(),
        }
    }

    fn check_trunc(&self, rhs: &Self) -> Result<(), SeriesError> {
        if self.trunc == rhs.trunc {
            Ok(())
        } else {
            Err(SeriesError::TruncMismatch(self.trunc, rhs.trunc))
        }
    }

    pub fn checked_add(&self, rhs: &Self) -> Result<Self, SeriesError> {
        self.check_trunc(rhs)?;
        Ok(TSeries {
            trunc: self.trunc,
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a.clone() + b.clone())
                .collect(),
        })
    }

    pub fn checked_sub(&self, rhs: &Self) -> Result<Self, SeriesError> {
        self.check_trunc(rhs)?;
        Ok(TSeries {
            trunc: self.trunc,
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a.clone() - b.clone())
                .collect(),
        })
    }

    /// Truncated Cauchy product.
    pub fn checked_mul(&self, rhs: &Self) -> Result<Self, SeriesError> {
        self.check_trunc(rhs)?;
        let n = self.trunc;
        let mut out = vec![C::zero(); n + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().take(n + 1 - i).enumerate() {
                if b.is_zero() {
                    continue;
                }
                let cur = mem::replace(&mut out[i + j], C::zero());
                out[i + j] = cur + a.clone() * b.clone();
            }
        }
        Ok(TSeries {
            trunc: n,
            coeffs: out,
        })
    }

    /// Multiplicative inverse; the constant term must be exactly 1.
    pub fn inv(&self) -> Result<Self, SeriesError> {
        if !self.coeffs[0].is_one() {
            return Err(SeriesError::NonUnitConstant);
        }
        let n = self.trunc;
        let mut inv = vec![C::zero(); n + 1];
        inv[0] = C::one();
        for d in 1..=n {
            // b_d = -(a_1 b_{d-1} + ... + a_d b_0) since a_0 = 1.
            let mut acc = C::zero();
            for i in 1..=d {
                if self.coeffs[i].is_zero() || inv[d - i].is_zero() {
                    continue;
                }
                acc = acc + self.coeffs[i].clone() * inv[d - i].clone();
            }
            inv[d] = -acc;
        }
        Ok(TSeries {
            trunc: n,
            coeffs: inv,
        })
    }

    /// Integer power with arbitrary-precision exponent. Negative exponents
    /// require an invertible series (constant term 1).
    pub fn pow(&self, m: &BigInt) -> Result<Self, SeriesError> {
        let base = if m.sign() == Sign::Minus {
            self.inv()?
        } else {
            self.clone()
        };
        Ok(base.pow_magnitude(m.magnitude()))
    }

    pub fn pow_u64(&self, m: u64) -> Self {
        self.pow_magnitude(&BigUint::from(m))
    }

    fn pow_magnitude(&self, m: &BigUint) -> Self {
        let mut acc = Self::one(self.trunc);
        if m.is_zero() {
            return acc;
        }
        let bits = m.bits();
        for i in (0..bits).rev() {
            acc = acc.checked_mul(&acc).expect("same truncation");
            if m.bit(i) {
                acc = acc.checked_mul(self).expect("same truncation");
            }
        }
        acc
    }
}

impl<C: Scalar> Add for &TSeries<C> {
    type Output = TSeries<C>;
    fn add(self, rhs: &TSeries<C>) -> TSeries<C> {
        self.checked_add(rhs).expect("mismatched truncation orders")
    }
}

impl<C: Scalar> Sub for &TSeries<C> {
    type Output = TSeries<C>;
    fn sub(self, rhs: &TSeries<C>) -> TSeries<C> {
        self.checked_sub(rhs).expect("mismatched truncation orders")
    }
}

impl<C: Scalar> Mul for &TSeries<C> {
    type Output = TSeries<C>;
    fn mul(self, rhs: &TSeries<C>) -> TSeries<C> {
        self.checked_mul(rhs).expect("mismatched truncation orders")
    }
}

impl<C: Scalar> Neg for TSeries<C> {
    type Output = TSeries<C>;
    fn neg(self) -> TSeries<C> {
        TSeries {
            trunc: self.trunc,
            coeffs: self.coeffs.into_iter().map(|c| -c).collect(),
        }
    }
}

impl TSeries<LaurentPoly> {
    /// Extracts the `t^{-1}` coefficient of every `z`-coefficient, producing
    /// an integer series: the residue of `(self) dt` at `t = 0`, degree by
    /// degree in `z`.
    pub fn residue(&self) -> TSeries<BigInt> {
        self.map(LaurentPoly::residue)
    }

    /// Multiplicity of the weight string of highest weight `2k`, degree by
    /// degree. Every coefficient must be symmetric under `t -> 1/t`.
    pub fn multiplicity(&self, k: u32) -> Result<TSeries<BigInt>, SeriesError> {
        let mut out = TSeries::new(self.trunc);
        for d in 0..=self.trunc {
            let c = &self.coeffs[d];
            if !c.is_symmetric() {
                return Err(SeriesError::Asymmetric(d));
            }
            let k = i64::from(k);
            out.set_coeff(d, c.coeff(k) - c.coeff(k + 1));
        }
        Ok(out)
    }

    /// Whether every coefficient is symmetric under `t -> 1/t`.
    pub fn is_symmetric(&self) -> bool {
        self.coeffs.iter().all(LaurentPoly::is_symmetric)
    }

    /// Substitutes `t = 1` in every coefficient.
    pub fn eval_t_one(&self) -> TSeries<BigInt> {
        self.map(LaurentPoly::eval_one)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn bi(v: i64) -> BigInt {
        BigInt::from(v)
    }

    #[test]
    fn laurent_product_and_symmetry() {
        let p1 = LaurentPoly::p_char(1);
        let sq = &p1 * &p1;
        // P_1^2 = P_2 + P_1 + P_0.
        let expect = LaurentPoly::p_char(2) + LaurentPoly::p_char(1) + LaurentPoly::p_char(0);
        assert_eq!(sq, expect);
        assert!(sq.is_symmetric());
        assert_eq!(sq.eval_one(), bi(9));
    }

    #[test]
    fn residue_identities_on_weight_strings() {
        // Res (1/t - 1) P_0 dt = 1 and Res (1 - t) P_1 dt = 1.
        let ker0 = LaurentPoly::from_terms([(-1, bi(1)), (0, bi(-1))]);
        let ker1 = LaurentPoly::from_terms([(0, bi(1)), (1, bi(-1))]);
        assert_eq!((&ker0 * &LaurentPoly::p_char(0)).residue(), bi(1));
        assert_eq!((&ker1 * &LaurentPoly::p_char(1)).residue(), bi(1));
        // Higher strings are annihilated by both kernels.
        for k in 1..6u32 {
            assert_eq!((&ker0 * &LaurentPoly::p_char(k)).residue(), bi(0));
        }
        assert_eq!((&ker1 * &LaurentPoly::p_char(0)).residue(), bi(0));
        for k in 2..6u32 {
            assert_eq!((&ker1 * &LaurentPoly::p_char(k)).residue(), bi(0));
        }
    }

    #[test]
    fn multiplicity_recovers_string_decomposition() {
        let a = &LaurentPoly::p_char(1) * &LaurentPoly::p_char(1);
        let mut rebuilt = LaurentPoly::zero();
        for k in 0..=2u32 {
            let m = a.multiplicity(k).unwrap();
            rebuilt += LaurentPoly::p_char(k).scale(&m);
        }
        assert_eq!(rebuilt, a);
        assert_eq!(a.multiplicity(0).unwrap(), bi(1));
        assert_eq!(a.multiplicity(3).unwrap(), bi(0));
    }

    #[test]
    fn multiplicity_rejects_asymmetric_input() {
        let t = LaurentPoly::t_pow(1);
        assert!(t.multiplicity(0).is_err());
    }

    #[test]
    fn series_product_truncates() {
        // (1 + z t)(1 - z t) = 1 - z^2 t^2 at truncation order 2.
        let plus = TSeries::from_terms(2, [(0, LaurentPoly::one()), (1, LaurentPoly::t_pow(1))]);
        let minus = TSeries::from_terms(
            2,
            [(0, LaurentPoly::one()), (1, -LaurentPoly::t_pow(1))],
        );
        let prod = &plus * &minus;
        assert_eq!(*prod.coeff(0), LaurentPoly::one());
        assert!(prod.coeff(1).is_zero());
        assert_eq!(*prod.coeff(2), -LaurentPoly::t_pow(2));
    }

    #[test]
    fn geometric_series_inverse() {
        let one_minus_z: TSeries<BigInt> =
            TSeries::from_terms(3, [(0, bi(1)), (1, bi(-1))]);
        let inv = one_minus_z.inv().unwrap();
        for d in 0..=3 {
            assert_eq!(*inv.coeff(d), bi(1));
        }
        assert_eq!(&inv * &one_minus_z, TSeries::one(3));
    }

    #[test]
    fn powers_compose() {
        let f: TSeries<BigInt> = TSeries::from_terms(6, [(0, bi(1)), (1, bi(2)), (3, bi(-1))]);
        let p3 = f.pow(&bi(3)).unwrap();
        let p_neg3 = f.pow(&bi(-3)).unwrap();
        assert_eq!(&p3 * &p_neg3, TSeries::one(6));
        assert_eq!(f.pow(&bi(0)).unwrap(), TSeries::one(6));
        let manual = &(&f * &f) * &f;
        assert_eq!(p3, manual);
    }

    #[test]
    fn truncation_mismatch_is_an_error() {
        let a: TSeries<BigInt> = TSeries::one(3);
        let b: TSeries<BigInt> = TSeries::one(4);
        assert_eq!(
            a.checked_mul(&b),
            Err(SeriesError::TruncMismatch(3, 4))
        );
    }

    #[test]
    fn per_degree_residue_and_multiplicity() {
        // (1 - z P_1)^{-1} has coefficient P_1^d at degree d.
        let f = TSeries::from_terms(
            3,
            [(0, LaurentPoly::one()), (1, -LaurentPoly::p_char(1))],
        );
        let g = f.inv().unwrap();
        assert_eq!(*g.coeff(2), &LaurentPoly::p_char(1) * &LaurentPoly::p_char(1));
        assert!(g.is_symmetric());
        let m0 = g.multiplicity(0).unwrap();
        // Multiplicity of the trivial string in P_1^d is the number of
        // balanced walks: 1, 0, 1, 1 for d = 0..3.
        assert_eq!(
            (0..=3).map(|d| m0.coeff(d).clone()).collect::<Vec<_>>(),
            vec![bi(1), bi(0), bi(1), bi(1)]
        );
        // P_1^3 = P_3 + 2 P_2 + 3 P_1 + P_0.
        let m1 = g.multiplicity(1).unwrap();
        assert_eq!(*m1.coeff(3), bi(3));
    }

    fn arb_laurent() -> impl Strategy<Value = LaurentPoly> {
        proptest::collection::vec((-4i64..=4, -5i64..=5), 0..6).prop_map(|terms| {
            LaurentPoly::from_terms(terms.into_iter().map(|(k, c)| (k, BigInt::from(c))))
        })
    }

    fn arb_symmetric_laurent() -> impl Strategy<Value = LaurentPoly> {
        proptest::collection::vec((0i64..=4, -5i64..=5), 0..5).prop_map(|terms| {
            let mut p = LaurentPoly::zero();
            for (k, c) in terms {
                p.add_term(k, BigInt::from(c));
                if k != 0 {
                    p.add_term(-k, BigInt::from(c));
                }
            }
            p
        })
    }

    fn arb_series() -> impl Strategy<Value = TSeries<BigInt>> {
        proptest::collection::vec(-6i64..=6, 7).prop_map(|cs| {
            TSeries::from_terms(6, cs.into_iter().enumerate().map(|(d, c)| (d, bi(c))))
        })
    }

    proptest! {
        #[test]
        fn laurent_mul_is_commutative_and_associative(
            a in arb_laurent(), b in arb_laurent(), c in arb_laurent()
        ) {
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        }

        #[test]
        fn residue_kernels_match_multiplicities(a in arb_symmetric_laurent()) {
            // The two extraction routes agree on symmetric inputs:
            // Res (1/t - 1) a dt = [a : string 0], Res (1 - t) a dt = [a : string 2].
            let ker0 = LaurentPoly::from_terms([(-1, BigInt::one()), (0, -BigInt::one())]);
            let ker1 = LaurentPoly::from_terms([(0, BigInt::one()), (1, -BigInt::one())]);
            prop_assert_eq!((&ker0 * &a).residue(), a.multiplicity(0).unwrap());
            prop_assert_eq!((&ker1 * &a).residue(), a.multiplicity(1).unwrap());
        }

        #[test]
        fn series_ring_laws(a in arb_series(), b in arb_series(), c in arb_series()) {
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            let left = &a * &(&b + &c);
            let right = &(&a * &b) + &(&a * &c);
            prop_assert_eq!(left, right);
        }

        #[test]
        fn inverse_round_trip(a in arb_series()) {
            let mut u = a.clone();
            u.set_coeff(0, BigInt::one());
            let inv = u.inv().unwrap();
            prop_assert_eq!(&u * &inv, TSeries::one(6));
        }
    }
}
