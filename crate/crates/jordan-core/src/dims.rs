//! Degree-by-degree solvers for the residue equations that determine the
//! conjectured dimension sequences `a_n(D)` (graded dimensions) and
//! `b_n(D)` (inner-derivation dimensions).
//!
//! Weak form: find the unique integer sequences with
//!
//! ```text
//! Res (1/t - 1) Phi dt = 1,   Res (1 - t) Phi dt = -D z,
//! Phi = prod_n (1 - z^n t)^{a_n} (1 - z^n / t)^{a_n} (1 - z^n)^{a_n + b_n}.
//! ```
//!
//! Weakest form: find the unique `a_n` with `Res psi * g dt = 0` where
//! `psi = D z / t + (1 - D z) - t` and
//! `g = prod_n (1 - z^n (t + 1/t) + z^{2n})^{a_n}`.
//!
//! Both systems are triangular: once everything below degree `d` is fixed,
//! the degree-`d` residue coefficient is linear in the degree-`d` unknown
//! with coefficient exactly -1. The solvers exploit that, then re-substitute
//! the full solution and fail hard if either equation is not reproduced.

use std::fs;
use std::path::{Path, PathBuf};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::series::{string0_kernel, string2_kernel, LaurentPoly, SeriesError, TSeries};
use crate::{CharSeries, IntSeries};

#[derive(Debug, Error)]
pub enum DimError {
    #[error("generator count must be at least 1, got {0}")]
    InvalidD(u32),
    #[error("re-substituted solution fails the {form} residue equations at D={d}, N={n}")]
    SelfCheck { form: SolveForm, d: u32, n: usize },
    #[error(transparent)]
    Series(#[from] SeriesError),
    #[error("cache i/o: {0}")]
    Cache(#[from] std::io::Error),
}

/// Which equation system a table solves.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SolveForm {
    Weak,
    Weakest,
}

impl std::fmt::Display for SolveForm {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            SolveForm::Weak => write!(f, "weak"),
            SolveForm::Weakest => write!(f, "weakest"),
        }
    }
}

/// Solved dimension sequences through degree `n_max`. Entry `a[i]` holds the
/// degree-`i+1` value; the weakest form has an empty `b`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DimTable {
    pub d: u32,
    pub n_max: usize,
    pub a: Vec<BigInt>,
    pub b: Vec<BigInt>,
}

impl DimTable {
    /// The degree-`n` graded dimension, 1-indexed.
    pub fn a_at(&self, n: usize) -> &BigInt {
        &self.a[n - 1]
    }

    /// The degree-`n` inner-derivation dimension, 1-indexed.
    pub fn b_at(&self, n: usize) -> &BigInt {
        &self.b[n - 1]
    }

    /// Entries below zero, as (degree, sequence-name) pairs. The solvers do
    /// not forbid negative values; conjecturally they never occur, so
    /// reports must surface them.
    pub fn negative_entries(&self) -> Vec<(usize, &'static str)> {
        let mut out = Vec::new();
        for (i, v) in self.a.iter().enumerate() {
            if v.sign() == num_bigint::Sign::Minus {
                out.push((i + 1, "a"));
            }
        }
        for (i, v) in self.b.iter().enumerate() {
            if v.sign() == num_bigint::Sign::Minus {
                out.push((i + 1, "b"));
            }
        }
        out
    }
}

// 1 - z^n (t + 1/t) + z^{2n}, the product of the two linear t-factors.
fn quadratic_factor(trunc: usize, n: usize) -> CharSeries {
    let mut neg_pair = -LaurentPoly::t_pow(1);
    neg_pair.add_term(-1, -BigInt::one());
    TSeries::from_terms(
        trunc,
        [(0, LaurentPoly::one()), (n, neg_pair), (2 * n, LaurentPoly::one())],
    )
}

// 1 - z^n.
fn z_factor(trunc: usize, n: usize) -> CharSeries {
    TSeries::from_terms(trunc, [(0, LaurentPoly::one()), (n, -LaurentPoly::one())])
}

// psi = (1 - t) + D z (1/t - 1).
fn psi(trunc: usize, d: u32) -> CharSeries {
    TSeries::from_terms(
        trunc,
        [
            (0, string2_kernel()),
            (1, string0_kernel().scale(&BigInt::from(d))),
        ],
    )
}

/// The three-factor product `Phi` of a weak-form table, truncated at `trunc`.
/// The table must reach `min(trunc, ...)`: degrees above `n_max` contribute
/// factors only beyond the truncation order, so `n_max >= trunc` suffices.
pub fn phi_product(tbl: &DimTable, trunc: usize) -> Result<CharSeries, DimError> {
    let mut phi = TSeries::one(trunc);
    for n in 1..=tbl.n_max.min(trunc) {
        let a = tbl.a_at(n);
        let ab = a + tbl.b_at(n);
        phi = phi.checked_mul(&quadratic_factor(trunc, n).pow(a)?)?;
        phi = phi.checked_mul(&z_factor(trunc, n).pow(&ab)?)?;
    }
    Ok(phi)
}

/// The two-factor product with the `(1 - z^n)` factors dropped.
pub fn phi_product_no_z(tbl: &DimTable, trunc: usize) -> Result<CharSeries, DimError> {
    let mut phi = TSeries::one(trunc);
    for n in 1..=tbl.n_max.min(trunc) {
        phi = phi.checked_mul(&quadratic_factor(trunc, n).pow(tbl.a_at(n))?)?;
    }
    Ok(phi)
}

// Residue of kernel * series, degree by degree.
fn residue_against(kernel: &LaurentPoly, series: &CharSeries) -> IntSeries {
    series.map(|c| (kernel * c).residue())
}

/// Solves the weak form through degree `n_max`.
pub fn solve_weak(d: u32, n_max: usize) -> Result<DimTable, DimError> {
    if d == 0 {
        return Err(DimError::InvalidD(d));
    }
    let k0 = string0_kernel();
    let k2 = string2_kernel();
    let mut phi = TSeries::one(n_max);
    let mut a = Vec::with_capacity(n_max);
    let mut b = Vec::with_capacity(n_max);
    for n in 1..=n_max {
        // With factors below degree n in place, the degree-n residue
        // coefficients are off from their targets by exactly -a_n and -b_n.
        let coeff = phi.coeff(n);
        let target2 = if n == 1 { BigInt::from(-(i64::from(d))) } else { BigInt::zero() };
        let a_n = (&k2 * coeff).residue() - target2;
        let b_n = (&k0 * coeff).residue();
        let ab = &a_n + &b_n;
        phi = phi.checked_mul(&quadratic_factor(n_max, n).pow(&a_n)?)?;
        phi = phi.checked_mul(&z_factor(n_max, n).pow(&ab)?)?;
        a.push(a_n);
        b.push(b_n);
    }
    let tbl = DimTable { d, n_max, a, b };

    // Re-substitute and verify both residue equations exactly.
    let full = phi_product(&tbl, n_max)?;
    let res0 = residue_against(&k0, &full);
    let res2 = residue_against(&k2, &full);
    let mut want0 = IntSeries::new(n_max);
    want0.set_coeff(0, BigInt::one());
    let mut want2 = IntSeries::new(n_max);
    if n_max >= 1 {
        want2.set_coeff(1, BigInt::from(-(i64::from(d))));
    }
    let anchors_ok = n_max == 0
        || (tbl.a[0] == BigInt::from(d) && tbl.b[0].is_zero());
    if res0 != want0 || res2 != want2 || !anchors_ok {
        return Err(DimError::SelfCheck { form: SolveForm::Weak, d, n: n_max });
    }
    Ok(tbl)
}

/// Solves the weakest form through degree `n_max`; only `a` is determined.
pub fn solve_weakest(d: u32, n_max: usize) -> Result<DimTable, DimError> {
    if d == 0 {
        return Err(DimError::InvalidD(d));
    }
    let psi_series = psi(n_max, d);
    let mut g = TSeries::one(n_max);
    let mut a = Vec::with_capacity(n_max);
    for n in 1..=n_max {
        // Degree-n coefficient of Res(psi * g) is linear in a_n with
        // coefficient -1: the factor contributes -a_n (t + 1/t) at z^n and
        // Res (1 - t)(t + 1/t) dt = 1.
        let partial = psi_series.checked_mul(&g)?;
        let a_n = partial.coeff(n).residue();
        g = g.checked_mul(&quadratic_factor(n_max, n).pow(&a_n)?)?;
        a.push(a_n);
    }
    let tbl = DimTable { d, n_max, a, b: Vec::new() };

    let full = psi_series.checked_mul(&phi_product_no_z(&tbl, n_max)?)?;
    if !full.residue().is_zero() {
        return Err(DimError::SelfCheck { form: SolveForm::Weakest, d, n: n_max });
    }
    Ok(tbl)
}

/// Cross-checks between the two solvers and the linearity reduction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionReport {
    pub d: u32,
    pub n_max: usize,
    /// The two solvers produce the same `a`-sequence.
    pub same_a: bool,
    /// `Res(psi * Phi) = 0` for the full three-factor product.
    pub full_residue_zero: bool,
    /// `Res(psi * Phi') = 0` with the `(1 - z^n)` factors dropped.
    pub reduced_residue_zero: bool,
}

impl ReductionReport {
    pub fn consistent(&self) -> bool {
        self.same_a && self.full_residue_zero && self.reduced_residue_zero
    }
}

pub fn verify_reduction(d: u32, n_max: usize) -> Result<ReductionReport, DimError> {
    let weak = solve_weak(d, n_max)?;
    let weakest = solve_weakest(d, n_max)?;
    let psi_series = psi(n_max, d);
    let full = psi_series.checked_mul(&phi_product(&weak, n_max)?)?;
    let reduced = psi_series.checked_mul(&phi_product_no_z(&weak, n_max)?)?;
    Ok(ReductionReport {
        d,
        n_max,
        same_a: weak.a == weakest.a,
        full_residue_zero: full.residue().is_zero(),
        reduced_residue_zero: reduced.residue().is_zero(),
    })
}

#[derive(Serialize, Deserialize)]
struct CacheRecord {
    form: String,
    #[serde(rename = "D")]
    d: u32,
    #[serde(rename = "N")]
    n: usize,
    a: Vec<String>,
    b: Vec<String>,
}

/// Disk cache of solved tables, one JSON file per (form, D, N) key. Big
/// integers are stored as decimal strings.
#[derive(Debug, Clone)]
pub struct SolveCache {
    dir: PathBuf,
}

impl SolveCache {
    pub fn new(dir: impl AsRef<Path>) -> std::io::Result<Self> {
        fs::create_dir_all(dir.as_ref())?;
        Ok(SolveCache { dir: dir.as_ref().to_path_buf() })
    }

    fn path(&self, form: SolveForm, d: u32, n: usize) -> PathBuf {
        self.dir.join(format!("{form}_D{d}_N{n}.json"))
    }

    /// Loads a cached table; unreadable or mismatched files count as absent.
    pub fn load(&self, form: SolveForm, d: u32, n: usize) -> Option<DimTable> {
        let text = fs::read_to_string(self.path(form, d, n)).ok()?;
        let rec: CacheRecord = serde_json::from_str(&text).ok()?;
        if rec.form != form.to_string() || rec.d != d || rec.n != n || rec.a.len() != n {
            return None;
        }
        let parse = |v: &[String]| -> Option<Vec<BigInt>> {
            v.iter().map(|s| s.parse().ok()).collect()
        };
        Some(DimTable { d, n_max: n, a: parse(&rec.a)?, b: parse(&rec.b)? })
    }

    pub fn store(&self, form: SolveForm, tbl: &DimTable) -> std::io::Result<()> {
        let rec = CacheRecord {
            form: form.to_string(),
            d: tbl.d,
            n: tbl.n_max,
            a: tbl.a.iter().map(|v| v.to_string()).collect(),
            b: tbl.b.iter().map(|v| v.to_string()).collect(),
        };
        fs::write(self.path(form, tbl.d, tbl.n_max), serde_json::to_string_pretty(&rec)?)
    }
}

/// Cache-aware wrapper around the two solvers.
pub fn solve_cached(
    form: SolveForm,
    d: u32,
    n_max: usize,
    cache: Option<&SolveCache>,
) -> Result<DimTable, DimError> {
    if let Some(c) = cache {
        if let Some(tbl) = c.load(form, d, n_max) {
            return Ok(tbl);
        }
    }
    let tbl = match form {
        SolveForm::Weak => solve_weak(d, n_max)?,
        SolveForm::Weakest => solve_weakest(d, n_max)?,
    };
    if let Some(c) = cache {
        c.store(form, &tbl)?;
    }
    Ok(tbl)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::closed::{r, s};

    fn bi(v: i64) -> BigInt {
        BigInt::from(v)
    }

    #[test]
    fn one_generator_baseline() {
        let tbl = solve_weak(1, 30).unwrap();
        assert!(tbl.a.iter().all(|v| v.is_one()));
        assert!(tbl.b.iter().all(|v| v.is_zero()));
    }

    #[test]
    fn two_generators_match_closed_forms() {
        let tbl = solve_weak(2, 15).unwrap();
        for n in 1..=15 {
            assert_eq!(*tbl.a_at(n), s(n as u32, 2), "a_{n}");
            assert_eq!(*tbl.b_at(n), r(n as u32, 2), "b_{n}");
        }
        assert_eq!(*tbl.a_at(4), bi(10));
        assert_eq!(*tbl.a_at(15), bi(16512));
        assert_eq!(*tbl.b_at(15), bi(15288));
    }

    #[test]
    fn three_generators_first_deviation() {
        let tbl = solve_weak(3, 8).unwrap();
        for n in 1..=7 {
            assert_eq!(*tbl.a_at(n), s(n as u32, 3), "a_{n}");
        }
        assert_eq!(*tbl.a_at(8), s(8, 3) + bi(3));
        assert_eq!(*tbl.a_at(8), bi(3324));
        for n in 1..=8 {
            assert_eq!(*tbl.b_at(n), r(n as u32, 3), "b_{n}");
        }
    }

    #[test]
    fn four_generators_offsets() {
        let tbl = solve_weak(4, 7).unwrap();
        let a_offsets: Vec<BigInt> =
            (1..=7).map(|n| tbl.a_at(n) - s(n as u32, 4)).collect();
        assert_eq!(
            a_offsets,
            [0, 0, 0, -1, -4, -20, -60].map(bi).to_vec()
        );
        let b_offsets: Vec<BigInt> =
            (1..=7).map(|n| tbl.b_at(n) - r(n as u32, 4)).collect();
        assert_eq!(b_offsets, [0, 0, 0, 0, -4, -16, -80].map(bi).to_vec());
    }

    #[test]
    fn weakest_equals_weak() {
        for d in 1..=4 {
            let weak = solve_weak(d, 12).unwrap();
            let weakest = solve_weakest(d, 12).unwrap();
            assert_eq!(weak.a, weakest.a, "D={d}");
        }
    }

    #[test]
    fn prefix_stability() {
        for d in 1..=3 {
            let short = solve_weak(d, 6).unwrap();
            let long = solve_weak(d, 10).unwrap();
            assert_eq!(short.a[..], long.a[..6]);
            assert_eq!(short.b[..], long.b[..6]);
            let ws = solve_weakest(d, 6).unwrap();
            let wl = solve_weakest(d, 10).unwrap();
            assert_eq!(ws.a[..], wl.a[..6]);
        }
    }

    #[test]
    fn reduction_consistency() {
        for d in 1..=3 {
            let report = verify_reduction(d, 10).unwrap();
            assert!(report.consistent(), "D={d}: {report:?}");
        }
    }

    #[test]
    fn degree_two_is_symmetric_square() {
        for d in 1..=6u32 {
            let tbl = solve_weak(d, 2).unwrap();
            assert_eq!(*tbl.a_at(1), BigInt::from(d));
            assert_eq!(*tbl.a_at(2), BigInt::from(d * (d + 1) / 2));
            assert!(tbl.b_at(1).is_zero());
        }
    }

    #[test]
    fn phi_of_ones_is_triple_product() {
        // The D=1 table gives the classical three-factor product.
        let tbl = solve_weak(1, 12).unwrap();
        let phi = phi_product(&tbl, 12).unwrap();
        let mut explicit = TSeries::one(12);
        for n in 1..=12 {
            explicit = explicit
                .checked_mul(&quadratic_factor(12, n))
                .unwrap()
                .checked_mul(&z_factor(12, n))
                .unwrap();
        }
        assert_eq!(phi, explicit);
    }

    #[test]
    fn empty_table_gives_one() {
        let tbl = DimTable { d: 1, n_max: 0, a: vec![], b: vec![] };
        assert_eq!(phi_product(&tbl, 0).unwrap(), TSeries::one(0));
    }

    #[test]
    fn negative_entry_flagging() {
        let tbl = DimTable {
            d: 2,
            n_max: 3,
            a: vec![bi(2), bi(-3), bi(1)],
            b: vec![bi(0), bi(0), bi(-1)],
        };
        assert_eq!(tbl.negative_entries(), vec![(2, "a"), (3, "b")]);
        assert!(solve_weak(2, 10).unwrap().negative_entries().is_empty());
    }

    #[test]
    fn cache_round_trip() {
        let dir = tempfile::tempdir().unwrap();
        let cache = SolveCache::new(dir.path()).unwrap();
        let solved = solve_cached(SolveForm::Weak, 3, 6, Some(&cache)).unwrap();
        let reloaded = cache.load(SolveForm::Weak, 3, 6).unwrap();
        assert_eq!(solved, reloaded);
        assert!(cache.load(SolveForm::Weak, 3, 7).is_none());
        assert!(cache.load(SolveForm::Weakest, 3, 6).is_none());
        let again = solve_cached(SolveForm::Weak, 3, 6, Some(&cache)).unwrap();
        assert_eq!(solved, again);
    }

    #[test]
    fn rejects_zero_generators() {
        assert!(matches!(solve_weak(0, 5), Err(DimError::InvalidD(0))));
        assert!(matches!(solve_weakest(0, 5), Err(DimError::InvalidD(0))));
    }
}
