//! Closed-form word counts: the dimension `s_n(D)` of the reversal-fixed
//! subspace of degree-`n` tensors, the inner-derivation dimension `r_n(D)`,
//! and the chiral cyclic-word count `c_n(D)`, together with a brute-force
//! census oracle that recounts everything by direct enumeration.
//!
//! Conventions: words are over an alphabet of `D` letters; the reversal
//! involution fixes each letter. A cyclic word (necklace) is a word up to
//! rotation; a bracelet is a word up to rotation and reversal. `c_n(D)`
//! counts mirror pairs of necklaces that are not individually
//! reversal-symmetric, so `c = necklaces - bracelets`.

use num_bigint::BigInt;
use num_traits::Zero;
use rayon::prelude::*;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CensusError {
    /// Enumerating `d^n` words would exceed the configured bound.
    #[error("word enumeration {d}^{n} exceeds the bound of {bound} words")]
    BudgetExceeded { d: u32, n: usize, bound: u64 },
}

/// Largest word count `necklace_bracelet_bruteforce` will enumerate.
pub const ENUMERATION_BOUND: u64 = 10_000_000;

/// Euler's totient of `m >= 1`.
pub fn totient(m: u64) -> u64 {
    assert!(m >= 1, "totient requires m >= 1");
    let mut n = m;
    let mut phi = m;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            while n.is_multiple_of(p) {
                n /= p;
            }
            phi -= phi / p;
        }
        p += 1;
    }
    if n > 1 {
        phi -= phi / n;
    }
    phi
}

fn divisors(m: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut i = 1;
    while i * i <= m {
        if m.is_multiple_of(i) {
            small.push(i);
            if i != m / i {
                large.push(m / i);
            }
        }
        i += 1;
    }
    large.reverse();
    small.extend(large);
    small
}

fn pow_d(d: u32, e: u64) -> BigInt {
    BigInt::from(d).pow(e as u32)
}

/// Exactly divides, panicking if the division has a remainder. The closed
/// formulas below are integer-valued; a nonzero remainder means a formula
/// was transcribed wrong.
fn exact_div(num: BigInt, den: u64) -> BigInt {
    use num_integer::Integer;
    let (q, r) = num.div_rem(&BigInt::from(den));
    assert!(r.is_zero(), "closed formula produced a non-integer");
    q
}

/// Dimension of the reversal-fixed subspace in degree `n` over `D` letters:
/// `(D^n + D^ceil(n/2)) / 2`.
pub fn s(n: u32, d: u32) -> BigInt {
    assert!(n >= 1, "s(n, D) requires n >= 1");
    let half = n.div_ceil(2);
    exact_div(pow_d(d, n as u64) + pow_d(d, half as u64), 2)
}

fn totient_power_sum(n: u64, d: u32) -> BigInt {
    divisors(n)
        .into_iter()
        .map(|i| BigInt::from(totient(i)) * pow_d(d, n / i))
        .sum()
}

/// Dimension of the degree-`n` inner-derivation space of the reversal-fixed
/// algebra on `D` letters. Degree 1 is 0: inner derivations start in
/// degree 2.
pub fn r(n: u32, d: u32) -> BigInt {
    assert!(n >= 1, "r(n, D) requires n >= 1");
    if n == 1 {
        return BigInt::zero();
    }
    let sum = totient_power_sum(n as u64, d);
    if n.is_multiple_of(2) {
        // r_{2m} = D^{2m}/2 + (D-1) D^m / 4 - (1/4m) sum_{i | 2m} phi(i) D^{2m/i}.
        let m = u64::from(n) / 2;
        let num = BigInt::from(2 * m) * pow_d(d, 2 * m)
            + BigInt::from(m) * BigInt::from(d as i64 - 1) * pow_d(d, m)
            - sum;
        exact_div(num, 4 * m)
    } else {
        // r_{2m+1} = D^{2m+1}/2 - (1/(4m+2)) sum_{i | 2m+1} phi(i) D^{(2m+1)/i}.
        let num = BigInt::from(n) * pow_d(d, n as u64) - sum;
        exact_div(num, 2 * u64::from(n))
    }
}

/// Number of mirror pairs of cyclic words of length `n` over `D` letters
/// (necklaces that are not reversal-symmetric, counted per pair).
pub fn c(n: u32, d: u32) -> BigInt {
    assert!(n >= 1, "c(n, D) requires n >= 1");
    let sum = totient_power_sum(n as u64, d);
    if n.is_multiple_of(2) {
        // c_{2m} = (1/4m) sum_{i | 2m} phi(i) D^{2m/i} - (D+1) D^m / 4.
        let m = u64::from(n) / 2;
        let num = sum - BigInt::from(m) * BigInt::from(d as u64 + 1) * pow_d(d, m);
        exact_div(num, 4 * m)
    } else {
        // c_{2m+1} = (1/(4m+2)) sum phi(i) D^{(2m+1)/i} - D^{m+1}/2.
        let m = u64::from(n) / 2;
        let num = sum - BigInt::from(n) * pow_d(d, m + 1);
        exact_div(num, 2 * u64::from(n))
    }
}

/// Exhaustive counts over all `D^n` words.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WordCensus {
    pub n: usize,
    pub d: u32,
    /// Total number of words, `D^n`.
    pub words: u64,
    /// Words equal to their own reversal.
    pub sigma_fixed: u64,
    /// Rotation classes.
    pub necklaces: u64,
    /// Rotation-and-reversal classes.
    pub bracelets: u64,
    /// Mirror pairs of necklaces: `necklaces - bracelets`.
    pub oriented_pairs: u64,
}

impl WordCensus {
    /// Necklaces whose rotation class is fixed by reversal.
    pub fn reversal_fixed_necklaces(&self) -> u64 {
        2 * self.bracelets - self.necklaces
    }
}

/// Counts words, palindromes, necklaces, and bracelets of length `n` over
/// `D` letters by enumerating every word and keeping canonical (lexicographic
/// least) rotation representatives.
pub fn necklace_bracelet_bruteforce(n: usize, d: u32) -> Result<WordCensus, CensusError> {
    assert!(n >= 1 && d >= 1);
    let total = (d as u64).checked_pow(n as u32).filter(|&t| t <= ENUMERATION_BOUND);
    let Some(total) = total else {
        return Err(CensusError::BudgetExceeded { d, n, bound: ENUMERATION_BOUND });
    };

    // Stratify by leading letter; counts are additive over strata.
    let stride = total / d as u64;
    let (sigma_fixed, necklaces, bracelets) = (0..d as u64)
        .into_par_iter()
        .map(|lead| {
            let mut digits = vec![0u8; n];
            let mut fixed = 0u64;
            let mut neck = 0u64;
            let mut brac = 0u64;
            for code in lead * stride..(lead + 1) * stride {
                decode(code, d, &mut digits);
                if digits.iter().eq(digits.iter().rev()) {
                    fixed += 1;
                }
                if is_least_rotation(&digits) {
                    neck += 1;
                    if not_beaten_by_reversal(&digits) {
                        brac += 1;
                    }
                }
            }
            (fixed, neck, brac)
        })
        .reduce(|| (0, 0, 0), |a, b| (a.0 + b.0, a.1 + b.1, a.2 + b.2));

    Ok(WordCensus {
        n,
        d,
        words: total,
        sigma_fixed,
        necklaces,
        bracelets,
        oriented_pairs: necklaces - bracelets,
    })
}

fn decode(mut code: u64, d: u32, out: &mut [u8]) {
    for slot in out.iter_mut().rev() {
        *slot = (code % d as u64) as u8;
        code /= d as u64;
    }
}

fn rotation_cmp(word: &[u8], shift: usize) -> std::cmp::Ordering {
    let n = word.len();
    for i in 0..n {
        let ord = word[(i + shift) % n].cmp(&word[i]);
        if ord != std::cmp::Ordering::Equal {
            return ord;
        }
    }
    std::cmp::Ordering::Equal
}

// Compares the reversed rotation v[i] = word[(shift - i) mod n] against word.
fn reversed_rotation_cmp(word: &[u8], shift: usize) -> std::cmp::Ordering {
    let n = word.len();
    for i in 0..n {
        let ord = word[(shift + n - i) % n].cmp(&word[i]);
        if ord != std::cmp::Ordering::Equal {
            return ord;
        }
    }
    std::cmp::Ordering::Equal
}

fn is_least_rotation(word: &[u8]) -> bool {
    (1..word.len()).all(|s| rotation_cmp(word, s) != std::cmp::Ordering::Less)
}

// For a word already least among its rotations: whether it is also least in
// the full dihedral orbit.
fn not_beaten_by_reversal(word: &[u8]) -> bool {
    (0..word.len()).all(|s| reversed_rotation_cmp(word, s) != std::cmp::Ordering::Less)
}
