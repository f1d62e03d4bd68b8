//! The character ring of polynomial general-linear representations tensored
//! with Laurent characters of the adjoint circle: truncated symmetric series
//! in `z_1..z_D` whose coefficients are Laurent polynomials in `t`.
//!
//! Classes are stored on the monomial-symmetric basis, keyed by the
//! partition of exponents and the `t`-exponent. The two nonstandard
//! operations are the lambda operation (alternating sum of exterior powers,
//! extended to virtual classes by multiplicativity) and the change of basis
//! to Schur functions by leading-monomial elimination.
//!
//! Weight strings in `t` are the characters `P_k = t^{-k} + ... + t^k`; the
//! adjoint weights sit at `t`-exponents -1, 0, 1.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_integer::binomial;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::partitions::{kostka, monomial_ones, Partition, PartitionError};
use crate::IntSeries;

/// Soft limits on variable count and truncation order. Computations beyond
/// them are not wrong, only expensive; callers opt in explicitly.
pub const ENVELOPE_MAX_D: u32 = 6;
pub const ENVELOPE_MAX_TRUNC: usize = 12;

/// Hard representation limits of the packed monomial encoding.
const PACK_BITS: u32 = 5;
const PACK_MAX_VARS: u32 = 12;
const PACK_MAX_EXP: u64 = (1 << PACK_BITS) - 1;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CharError {
    #[error("classes have different shapes: ({d1} vars, order {n1}) vs ({d2} vars, order {n2})")]
    ShapeMismatch { d1: u32, n1: usize, d2: u32, n2: usize },
    #[error("operation requires the monomial basis")]
    NotMonomial,
    #[error("lambda is defined on classes with zero constant term")]
    NonzeroConstantTerm,
    #[error("class is not symmetric under t -> 1/t")]
    Asymmetric,
    #[error("{d} variables at order {trunc} exceeds the supported envelope ({ENVELOPE_MAX_D} vars, order {ENVELOPE_MAX_TRUNC}); pass the override to proceed")]
    EnvelopeExceeded { d: u32, trunc: usize },
    #[error("unsupported shape: {0} variables or order {1} beyond the packed representation")]
    RepresentationLimit(u32, usize),
    #[error(transparent)]
    Partition(#[from] PartitionError),
}

/// Whether coefficients are read against monomial-symmetric functions or
/// Schur functions.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CharBasis {
    Monomial,
    Schur,
}

/// A truncated virtual character: integer combination of `m_lambda * t^j`
/// (monomial basis) or `s_lambda * t^j` (Schur basis), with `|lambda|`
/// bounded by the truncation order and height bounded by the variable count.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CharClass {
    d: u32,
    trunc: usize,
    basis: CharBasis,
    terms: BTreeMap<(Partition, i64), BigInt>,
}

/// Checks the soft envelope unless the caller forces past it.
pub fn check_envelope(d: u32, trunc: usize, force: bool) -> Result<(), CharError> {
    if !force && (d > ENVELOPE_MAX_D || trunc > ENVELOPE_MAX_TRUNC) {
        return Err(CharError::EnvelopeExceeded { d, trunc });
    }
    if u64::from(d) > u64::from(PACK_MAX_VARS) || trunc as u64 > PACK_MAX_EXP {
        return Err(CharError::RepresentationLimit(d, trunc));
    }
    Ok(())
}

impl CharClass {
    /// The zero class.
    pub fn new(d: u32, trunc: usize) -> Self {
        CharClass { d, trunc, basis: CharBasis::Monomial, terms: BTreeMap::new() }
    }

    /// The constant class 1.
    pub fn one(d: u32, trunc: usize) -> Self {
        let mut c = Self::new(d, trunc);
        c.add_term(Partition::empty(), 0, BigInt::one());
        c
    }

    /// The class of the natural module: `m_(1) = z_1 + ... + z_D`.
    pub fn natural(d: u32, trunc: usize) -> Self {
        let mut c = Self::new(d, trunc);
        if trunc >= 1 && d >= 1 {
            c.add_term(Partition::of(&[1]), 0, BigInt::one());
        }
        c
    }

    /// The scalar class `P_k = t^{-k} + ... + t^k`.
    pub fn weight_string(k: u32, d: u32, trunc: usize) -> Self {
        let mut c = Self::new(d, trunc);
        for j in -i64::from(k)..=i64::from(k) {
            c.add_term(Partition::empty(), j, BigInt::one());
        }
        c
    }

    pub fn from_terms<I>(d: u32, trunc: usize, terms: I) -> Self
    where
        I: IntoIterator<Item = (Partition, i64, BigInt)>,
    {
        let mut c = Self::new(d, trunc);
        for (p, j, v) in terms {
            c.add_term(p, j, v);
        }
        c
    }

    pub fn d(&self) -> u32 {
        self.d
    }

    pub fn trunc(&self) -> usize {
        self.trunc
    }

    pub fn basis(&self) -> CharBasis {
        self.basis
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, p: &Partition, t_exp: i64) -> BigInt {
        self.terms
            .get(&(p.clone(), t_exp))
            .cloned()
            .unwrap_or_else(BigInt::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(Partition, i64), &BigInt)> {
        self.terms.iter()
    }

    /// Adds `v * basis_p * t^j`, dropping out-of-range or cancelled terms.
    /// Diagrams taller than the variable count are identically zero.
    pub fn add_term(&mut self, p: Partition, t_exp: i64, v: BigInt) {
        if v.is_zero() || p.size() > self.trunc as u64 || p.height() > self.d as usize {
            return;
        }
        match self.terms.entry((p, t_exp)) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(v);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += v;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    fn check_shape(&self, rhs: &Self) -> Result<(), CharError> {
        if self.d != rhs.d || self.trunc != rhs.trunc {
            return Err(CharError::ShapeMismatch {
                d1: self.d,
                n1: self.trunc,
                d2: rhs.d,
                n2: rhs.trunc,
            });
        }
        Ok(())
    }

    pub fn checked_add(&self, rhs: &Self) -> Result<Self, CharError> {
        self.check_shape(rhs)?;
        let mut out = self.clone();
        for ((p, j), v) in &rhs.terms {
            out.add_term(p.clone(), *j, v.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, rhs: &Self) -> Result<Self, CharError> {
        self.check_shape(rhs)?;
        let mut out = self.clone();
        for ((p, j), v) in &rhs.terms {
            out.add_term(p.clone(), *j, -v.clone());
        }
        Ok(out)
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        if k.is_zero() {
            return Self::new(self.d, self.trunc);
        }
        let mut out = self.clone();
        for v in out.terms.values_mut() {
            *v *= k;
        }
        out
    }

    pub fn neg(&self) -> Self {
        self.scale(&-BigInt::one())
    }

    /// The part of total `z`-degree exactly `n`.
    pub fn degree_part(&self, n: u64) -> Self {
        let mut out = Self::new(self.d, self.trunc);
        out.basis = self.basis;
        for ((p, j), v) in &self.terms {
            if p.size() == n {
                out.terms.insert((p.clone(), *j), v.clone());
            }
        }
        out
    }

    /// Whether the coefficient of `t^j` equals the coefficient of `t^{-j}`
    /// for every monomial.
    pub fn is_symmetric(&self) -> bool {
        self.terms
            .iter()
            .all(|((p, j), v)| self.coeff(p, -j) == *v)
    }

    // Dense expansion: every term of the monomial orbit of each stored
    // partition, as (packed exponent code, z-degree, t-exponent, value).
    fn dense_terms(&self) -> Vec<(u64, u64, i64, BigInt)> {
        let mut out = Vec::new();
        for ((p, j), v) in &self.terms {
            for code in monomial_orbit_codes(p, self.d) {
                out.push((code, p.size(), *j, v.clone()));
            }
        }
        out
    }

    /// Product of two monomial-basis classes, truncated.
    pub fn mul(&self, rhs: &Self) -> Result<Self, CharError> {
        self.check_shape(rhs)?;
        if self.basis != CharBasis::Monomial || rhs.basis != CharBasis::Monomial {
            return Err(CharError::NotMonomial);
        }
        let a = self.dense_terms();
        let b = rhs.dense_terms();
        let mut acc: HashMap<(u64, i64), BigInt> = HashMap::new();
        for (ca, dega, ta, va) in &a {
            for (cb, degb, tb, vb) in &b {
                if dega + degb > self.trunc as u64 {
                    continue;
                }
                // Packed fields cannot carry: each exponent is bounded by
                // the truncation order, which fits the field width.
                let entry = acc.entry((ca + cb, ta + tb)).or_insert_with(BigInt::zero);
                *entry += va * vb;
            }
        }
        Ok(Self::collect_dense(self.d, self.trunc, acc))
    }

    // Keeps only the weakly decreasing representative of each orbit; for a
    // symmetric accumulator this is exactly the monomial-basis coordinate.
    fn collect_dense(d: u32, trunc: usize, acc: HashMap<(u64, i64), BigInt>) -> Self {
        let mut out = Self::new(d, trunc);
        for ((code, t_exp), v) in acc {
            if v.is_zero() {
                continue;
            }
            let exps = unpack(code, d);
            if exps.windows(2).all(|w| w[0] >= w[1]) {
                let parts: Vec<u32> = exps
                    .into_iter()
                    .take_while(|&e| e > 0)
                    .map(|e| e as u32)
                    .collect();
                out.add_term(Partition::new(parts).unwrap(), t_exp, v);
            }
        }
        out
    }

    /// The lambda operation: for `c = sum m_w [w]` over weights `w` (pairs
    /// of a `z`-monomial and a `t`-power), returns `prod_w (1 - w)^{m_w}`
    /// truncated. Defined on classes with zero constant term; negative
    /// multiplicities expand through the geometric series.
    pub fn lambda(&self) -> Result<Self, CharError> {
        if self.basis != CharBasis::Monomial {
            return Err(CharError::NotMonomial);
        }
        let weights = self.dense_terms();
        if weights.iter().any(|(_, deg, _, _)| *deg == 0) {
            return Err(CharError::NonzeroConstantTerm);
        }
        let mut acc: HashMap<(u64, i64), BigInt> = HashMap::new();
        acc.insert((0, 0), BigInt::one());
        for (code, deg, t_exp, mult) in weights {
            // (1 - w)^m = sum_k binom(m, k) (-w)^k, truncated at the order;
            // for m < 0 the binomial series has all-positive coefficients
            // binom(-m + k - 1, k).
            let kmax = self.trunc as u64 / deg;
            let mut factor: Vec<(u64, i64, BigInt)> = Vec::new();
            let negative = mult.is_negative();
            let mag = mult.abs();
            for k in 0..=kmax {
                let kb = BigInt::from(k);
                let coeff = if negative {
                    binomial(&mag + &kb - BigInt::one(), kb)
                } else {
                    if BigInt::from(k) > mag {
                        break;
                    }
                    let b = binomial(mag.clone(), kb);
                    if k % 2 == 1 {
                        -b
                    } else {
                        b
                    }
                };
                factor.push((code * k, t_exp * k as i64, coeff));
            }
            let mut next: HashMap<(u64, i64), BigInt> = HashMap::with_capacity(acc.len() * 2);
            for ((c0, t0), v0) in &acc {
                let deg0 = unpack_degree(*c0, self.d);
                for (cf, tf, vf) in &factor {
                    if deg0 + unpack_degree(*cf, self.d) > self.trunc as u64 {
                        continue;
                    }
                    let entry = next.entry((c0 + cf, t0 + tf)).or_insert_with(BigInt::zero);
                    *entry += v0 * vf;
                }
            }
            next.retain(|_, v| !v.is_zero());
            acc = next;
        }
        Ok(Self::collect_dense(self.d, self.trunc, acc))
    }

    /// Multiplicity class of the weight string `P_k`: for each monomial,
    /// the `t^k` coefficient minus the `t^{k+1}` coefficient. The input
    /// must be symmetric in `t`; the output is a pure (t-free) class.
    pub fn string_multiplicity(&self, k: u32) -> Result<Self, CharError> {
        if !self.is_symmetric() {
            return Err(CharError::Asymmetric);
        }
        let k = i64::from(k);
        let mut out = Self::new(self.d, self.trunc);
        out.basis = self.basis;
        let partitions: std::collections::BTreeSet<Partition> =
            self.terms.keys().map(|(p, _)| p.clone()).collect();
        for p in partitions {
            let v = self.coeff(&p, k) - self.coeff(&p, k + 1);
            out.add_term(p, 0, v);
        }
        Ok(out)
    }

    /// Change of basis from monomial to Schur coefficients, by repeatedly
    /// stripping the lexicographically leading monomial (the Kostka matrix
    /// is unitriangular from lex-leading terms).
    pub fn schur_decompose(&self) -> Result<BTreeMap<(Partition, i64), BigInt>, CharError> {
        if self.basis != CharBasis::Monomial {
            return Err(CharError::NotMonomial);
        }
        let mut out = BTreeMap::new();
        // Work per t-exponent; degrees do not interact.
        let mut slices: BTreeMap<i64, BTreeMap<Partition, BigInt>> = BTreeMap::new();
        for ((p, j), v) in &self.terms {
            slices.entry(*j).or_default().insert(p.clone(), v.clone());
        }
        for (j, mut slice) in slices {
            while let Some((lead, coeff)) = slice.iter().next_back().map(|(p, v)| (p.clone(), v.clone())) {
                slice.remove(&lead);
                if coeff.is_zero() {
                    continue;
                }
                out.insert((lead.clone(), j), coeff.clone());
                // Subtract coeff * s_lead; its lex-leading monomial is
                // m_lead, already removed above.
                for (mu, k) in schur_in_monomials(&lead, self.d) {
                    if mu == lead {
                        continue;
                    }
                    let delta = -&coeff * k;
                    match slice.entry(mu) {
                        std::collections::btree_map::Entry::Vacant(e) => {
                            e.insert(delta);
                        }
                        std::collections::btree_map::Entry::Occupied(mut e) => {
                            *e.get_mut() += delta;
                            if e.get().is_zero() {
                                e.remove();
                            }
                        }
                    }
                }
            }
        }
        Ok(out)
    }

    /// The same class re-expressed on the Schur basis.
    pub fn to_schur_basis(&self) -> Result<Self, CharError> {
        let mut out = Self::new(self.d, self.trunc);
        out.basis = CharBasis::Schur;
        out.terms = self.schur_decompose()?;
        Ok(out)
    }

    /// Substitutes `z_i = 1` for a `t`-free class, giving one integer per
    /// `z`-degree.
    pub fn specialize_ones(&self) -> Result<IntSeries, CharError> {
        if self.terms.keys().any(|(_, j)| *j != 0) {
            return Err(CharError::Asymmetric);
        }
        let mut out = IntSeries::new(self.trunc);
        for ((p, _), v) in &self.terms {
            let deg = p.size() as usize;
            let unit = match self.basis {
                CharBasis::Monomial => monomial_ones(p, self.d),
                CharBasis::Schur => p.dim_gl(self.d),
            };
            let cur = out.coeff(deg).clone();
            out.set_coeff(deg, cur + v * unit);
        }
        Ok(out)
    }

    /// Substitutes `z_i = 1` keeping `t`: one Laurent polynomial per degree.
    pub fn specialize_ones_t(&self) -> Result<crate::CharSeries, CharError> {
        if self.basis != CharBasis::Monomial {
            return Err(CharError::NotMonomial);
        }
        let mut out = crate::CharSeries::new(self.trunc);
        for ((p, j), v) in &self.terms {
            let deg = p.size() as usize;
            let mut cur = out.coeff(deg).clone();
            cur.add_term(*j, v * monomial_ones(p, self.d));
            out.set_coeff(deg, cur);
        }
        Ok(out)
    }
}

/// The Schur class of a diagram in `D` variables at the given truncation:
/// zero when the diagram is taller than `D`.
pub fn char_of_schur(y: &Partition, d: u32, trunc: usize) -> CharClass {
    let mut out = CharClass::new(d, trunc);
    if y.height() > d as usize || y.size() > trunc as u64 {
        return out;
    }
    for (mu, k) in schur_in_monomials(y, d) {
        out.add_term(mu, 0, k);
    }
    out
}

// s_y = sum over partitions mu of Kostka(y, mu) m_mu, heights capped at d.
fn schur_in_monomials(y: &Partition, d: u32) -> Vec<(Partition, BigInt)> {
    Partition::all_of_size(y.size())
        .into_iter()
        .filter(|mu| mu.height() <= d as usize)
        .filter_map(|mu| {
            let k = kostka(y, mu.parts());
            if k.is_zero() {
                None
            } else {
                Some((mu, k))
            }
        })
        .collect()
}

// Packed exponent vectors: PACK_BITS bits per variable, leftmost variable in
// the highest field so packed order matches lex order on exponent vectors.
fn pack(exps: &[u64]) -> u64 {
    let mut code = 0u64;
    for &e in exps {
        debug_assert!(e <= PACK_MAX_EXP);
        code = (code << PACK_BITS) | e;
    }
    code
}

fn unpack(code: u64, d: u32) -> Vec<u64> {
    let mut out = vec![0u64; d as usize];
    let mut c = code;
    for slot in out.iter_mut().rev() {
        *slot = c & PACK_MAX_EXP;
        c >>= PACK_BITS;
    }
    out
}

fn unpack_degree(code: u64, d: u32) -> u64 {
    let mut total = 0;
    let mut c = code;
    for _ in 0..d {
        total += c & PACK_MAX_EXP;
        c >>= PACK_BITS;
    }
    total
}

// All packed codes in the orbit of a partition under permuting variables:
// the distinct rearrangements of the padded exponent vector.
fn monomial_orbit_codes(p: &Partition, d: u32) -> Vec<u64> {
    let mut exps: Vec<u64> = p.parts().iter().map(|&x| u64::from(x)).collect();
    exps.resize(d as usize, 0);
    let mut out = Vec::new();
    distinct_permutations(&mut exps, 0, &mut out);
    out
}

fn distinct_permutations(exps: &mut Vec<u64>, from: usize, out: &mut Vec<u64>) {
    if from == exps.len() {
        out.push(pack(exps));
        return;
    }
    let mut seen = Vec::new();
    for i in from..exps.len() {
        if seen.contains(&exps[i]) {
            continue;
        }
        seen.push(exps[i]);
        exps.swap(from, i);
        distinct_permutations(exps, from + 1, out);
        exps.swap(from, i);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bi(v: i64) -> BigInt {
        BigInt::from(v)
    }

    fn p(parts: &[u32]) -> Partition {
        Partition::of(parts)
    }

    #[test]
    fn monomial_product_basics() {
        let k = CharClass::natural(2, 4);
        let sq = k.mul(&k).unwrap();
        assert_eq!(sq.coeff(&p(&[2]), 0), bi(1));
        assert_eq!(sq.coeff(&p(&[1, 1]), 0), bi(2));
        let one = CharClass::one(2, 4);
        assert_eq!(k.mul(&one).unwrap(), k);
    }

    #[test]
    fn natural_square_in_schur_basis() {
        let k = CharClass::natural(3, 4);
        let schur = k.mul(&k).unwrap().schur_decompose().unwrap();
        assert_eq!(schur.get(&(p(&[2]), 0)), Some(&bi(1)));
        assert_eq!(schur.get(&(p(&[1, 1]), 0)), Some(&bi(1)));
        assert_eq!(schur.len(), 2);
    }

    #[test]
    fn lambda_of_natural_is_alternating_exterior_sum() {
        let lam = CharClass::natural(3, 3).lambda().unwrap();
        assert_eq!(lam.coeff(&Partition::empty(), 0), bi(1));
        assert_eq!(lam.coeff(&p(&[1]), 0), bi(-1));
        assert_eq!(lam.coeff(&p(&[1, 1]), 0), bi(1));
        assert_eq!(lam.coeff(&p(&[1, 1, 1]), 0), bi(-1));
        assert_eq!(lam.coeff(&p(&[2]), 0), bi(0));
    }

    #[test]
    fn lambda_of_negated_line_is_geometric() {
        let lam = CharClass::natural(1, 5).neg().lambda().unwrap();
        for n in 0..=5u32 {
            let part = if n == 0 { Partition::empty() } else { p(&[n]) };
            assert_eq!(lam.coeff(&part, 0), bi(1), "degree {n}");
        }
    }

    #[test]
    fn lambda_rejects_constant_terms() {
        assert!(CharClass::one(2, 3).lambda().is_err());
    }

    #[test]
    fn lambda_is_multiplicative() {
        // Mixed virtual classes with t-weights on a small shape.
        let cases: Vec<CharClass> = vec![
            CharClass::from_terms(
                2,
                5,
                [(p(&[1]), 1, bi(1)), (p(&[1]), -1, bi(1)), (p(&[2]), 0, bi(-1))],
            ),
            CharClass::from_terms(2, 5, [(p(&[1]), 0, bi(2)), (p(&[1, 1]), 0, bi(-2))]),
            CharClass::from_terms(2, 5, [(p(&[2, 1]), 2, bi(1)), (p(&[1]), 0, bi(-1))]),
        ];
        for a in &cases {
            for b in &cases {
                let sum = a.checked_add(b).unwrap();
                let left = sum.lambda().unwrap();
                let right = a.lambda().unwrap().mul(&b.lambda().unwrap()).unwrap();
                assert_eq!(left, right);
            }
        }
    }

    #[test]
    fn schur_decompose_cube_of_line_sum() {
        let k = CharClass::natural(3, 3);
        let cube = k.mul(&k).unwrap().mul(&k).unwrap();
        let schur = cube.schur_decompose().unwrap();
        assert_eq!(schur.get(&(p(&[3]), 0)), Some(&bi(1)));
        assert_eq!(schur.get(&(p(&[2, 1]), 0)), Some(&bi(2)));
        assert_eq!(schur.get(&(p(&[1, 1, 1]), 0)), Some(&bi(1)));
        assert_eq!(schur.len(), 3);
    }

    #[test]
    fn schur_weyl_multiplicities() {
        for d in 3..=4u32 {
            for n in 1..=6u64 {
                let k = CharClass::natural(d, n as usize);
                let mut power = CharClass::one(d, n as usize);
                for _ in 0..n {
                    power = power.mul(&k).unwrap();
                }
                let schur = power.schur_decompose().unwrap();
                for y in Partition::all_of_size(n) {
                    let expect = if y.height() <= d as usize { y.dim_sn() } else { bi(0) };
                    let got = schur.get(&(y.clone(), 0)).cloned().unwrap_or_else(BigInt::zero);
                    assert_eq!(got, expect, "D={d} n={n} {y}");
                }
            }
        }
    }

    #[test]
    fn exterior_square_is_column_schur() {
        let c = CharClass::from_terms(3, 2, [(p(&[1, 1]), 0, bi(1))]);
        let schur = c.schur_decompose().unwrap();
        assert_eq!(schur.get(&(p(&[1, 1]), 0)), Some(&bi(1)));
        assert_eq!(schur.len(), 1);
    }

    #[test]
    fn string_multiplicity_extraction() {
        let k = CharClass::natural(3, 3);
        let p1 = CharClass::weight_string(1, 3, 3);
        let c = k.mul(&p1).unwrap();
        assert_eq!(c.string_multiplicity(1).unwrap(), k);
        assert!(c.string_multiplicity(0).unwrap().is_zero());
        // Reconstruction: sum over k of [c : P_k] * P_k.
        let mix = CharClass::from_terms(
            2,
            4,
            [(p(&[2]), 0, bi(3)), (p(&[1, 1]), 0, bi(-1))],
        );
        let c = mix
            .mul(&CharClass::weight_string(2, 2, 4))
            .unwrap()
            .checked_add(&k2_class())
            .unwrap();
        let mut rebuilt = CharClass::new(2, 4);
        for s in 0..=4u32 {
            let m = c.string_multiplicity(s).unwrap();
            rebuilt = rebuilt
                .checked_add(&m.mul(&CharClass::weight_string(s, 2, 4)).unwrap())
                .unwrap();
        }
        assert_eq!(rebuilt, c);
    }

    fn k2_class() -> CharClass {
        CharClass::from_terms(2, 4, [(p(&[1]), 0, bi(1))])
            .mul(&CharClass::weight_string(1, 2, 4))
            .unwrap()
    }

    #[test]
    fn schur_class_constructor() {
        assert!(char_of_schur(&p(&[1, 1, 1]), 2, 4).is_zero());
        assert_eq!(char_of_schur(&p(&[1]), 4, 4), CharClass::natural(4, 4));
        let spec = char_of_schur(&p(&[2, 1]), 3, 4).specialize_ones().unwrap();
        assert_eq!(*spec.coeff(3), bi(8));
    }

    #[test]
    fn schur_specialization_matches_hook_content() {
        for n in 1..=8u64 {
            for y in Partition::all_of_size(n) {
                for d in 1..=4u32 {
                    let c = char_of_schur(&y, d, n as usize);
                    let spec = c.specialize_ones().unwrap();
                    assert_eq!(*spec.coeff(n as usize), y.dim_gl(d), "{y} D={d}");
                }
            }
        }
    }

    #[test]
    fn decompose_inverts_schur_constructor() {
        for n in 1..=6u64 {
            for y in Partition::all_of_size(n) {
                if y.height() > 3 {
                    continue;
                }
                let schur = char_of_schur(&y, 3, 6).schur_decompose().unwrap();
                assert_eq!(schur.len(), 1, "{y}");
                assert_eq!(schur.get(&(y.clone(), 0)), Some(&bi(1)));
            }
        }
    }

    #[test]
    fn envelope_gate() {
        assert!(check_envelope(4, 8, false).is_ok());
        assert!(matches!(
            check_envelope(7, 5, false),
            Err(CharError::EnvelopeExceeded { .. })
        ));
        assert!(check_envelope(7, 5, true).is_ok());
        assert!(matches!(
            check_envelope(13, 5, true),
            Err(CharError::RepresentationLimit(13, 5))
        ));
    }
}
