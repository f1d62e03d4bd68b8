//! Partition (Young diagram) combinatorics: dimensions of symmetric-group
//! and general-linear irreducibles by hook formulas, one-box branching
//! (restriction and induction), Kostka numbers, virtual integer classes of
//! symmetric-group representations, and the closed dimension formulas for
//! the missing-tetrad spaces M and their inner-derivation analogues MD.
//!
//! Diagrams are stored as weakly decreasing part lists. The textual form is
//! comma-joined parts ("4,1,1,1,1"); the empty diagram prints as "".

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::binomial;
use num_traits::{One, Zero};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PartitionError {
    #[error("parts must be positive and weakly decreasing, got {0:?}")]
    InvalidParts(Vec<u32>),
    #[error("cannot parse {0:?} as a partition")]
    Parse(String),
    #[error("no closed dimension formula in degree {0}")]
    UnsupportedDegree(u32),
    #[error("class size mismatch: expected diagrams of size {expected}, got {got}")]
    SizeMismatch { expected: u64, got: u64 },
}

/// A partition: weakly decreasing sequence of positive integers. The empty
/// partition is allowed and indexes the trivial representation of the
/// trivial group.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self, PartitionError> {
        let ok = parts.iter().all(|&p| p > 0) && parts.windows(2).all(|w| w[0] >= w[1]);
        if ok {
            Ok(Partition { parts })
        } else {
            Err(PartitionError::InvalidParts(parts))
        }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// Convenience constructor that panics on invalid input; for literals.
    pub fn of(parts: &[u32]) -> Self {
        Partition::new(parts.to_vec()).expect("valid partition literal")
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn size(&self) -> u64 {
        self.parts.iter().map(|&p| u64::from(p)).sum()
    }

    pub fn height(&self) -> usize {
        self.parts.len()
    }

    pub fn conjugate(&self) -> Partition {
        let cols = usize::try_from(self.parts.first().copied().unwrap_or(0)).unwrap();
        let parts = (0..cols)
            .map(|j| self.parts.iter().take_while(|&&p| p as usize > j).count() as u32)
            .collect();
        Partition { parts }
    }

    /// Column heights `c_1 >= c_2 >= ...` (the conjugate's parts).
    pub fn column_heights(&self) -> Vec<u32> {
        self.conjugate().parts
    }

    fn hook_lengths(&self) -> Vec<u64> {
        let conj = self.conjugate();
        let mut hooks = Vec::with_capacity(self.size() as usize);
        for (i, &row) in self.parts.iter().enumerate() {
            for j in 0..row as usize {
                let arm = row as u64 - 1 - j as u64;
                let leg = u64::from(conj.parts[j]) - 1 - i as u64;
                hooks.push(arm + leg + 1);
            }
        }
        hooks
    }

    /// Dimension of the symmetric-group irreducible indexed by this diagram:
    /// `n!` divided by the product of hook lengths.
    pub fn dim_sn(&self) -> BigInt {
        let mut num = BigInt::one();
        for k in 1..=self.size() {
            num *= BigInt::from(k);
        }
        let mut den = BigInt::one();
        for h in self.hook_lengths() {
            den *= BigInt::from(h);
        }
        num / den
    }

    /// Dimension of the general-linear irreducible with this highest weight
    /// in `D` variables: product over cells of `(D + content) / hook`;
    /// zero when the diagram is taller than `D`.
    pub fn dim_gl(&self, d: u32) -> BigInt {
        if self.height() > d as usize {
            return BigInt::zero();
        }
        let mut num = BigInt::one();
        for (i, &row) in self.parts.iter().enumerate() {
            for j in 0..row as i64 {
                num *= BigInt::from(i64::from(d) + j - i as i64);
            }
        }
        let mut den = BigInt::one();
        for h in self.hook_lengths() {
            den *= BigInt::from(h);
        }
        num / den
    }

    /// Row indices from which one box can be removed leaving a partition.
    pub fn removable_rows(&self) -> Vec<usize> {
        (0..self.parts.len())
            .filter(|&i| i + 1 == self.parts.len() || self.parts[i] > self.parts[i + 1])
            .collect()
    }

    /// Row indices where one box can be added leaving a partition; the index
    /// equal to the height means a new bottom row.
    pub fn addable_rows(&self) -> Vec<usize> {
        (0..=self.parts.len())
            .filter(|&i| i == 0 || i == self.parts.len() || self.parts[i] < self.parts[i - 1])
            .collect()
    }

    pub fn with_box_removed(&self, row: usize) -> Partition {
        let mut parts = self.parts.clone();
        parts[row] -= 1;
        if parts[row] == 0 {
            parts.remove(row);
        }
        Partition { parts }
    }

    pub fn with_box_added(&self, row: usize) -> Partition {
        let mut parts = self.parts.clone();
        if row == parts.len() {
            parts.push(1);
        } else {
            parts[row] += 1;
        }
        Partition { parts }
    }

    /// All partitions of `n`, in decreasing lexicographic order.
    pub fn all_of_size(n: u64) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut stack = Vec::new();
        fn rec(remaining: u64, max: u64, stack: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if remaining == 0 {
                out.push(Partition { parts: stack.clone() });
                return;
            }
            let mut p = remaining.min(max);
            while p >= 1 {
                stack.push(p as u32);
                rec(remaining - p, p, stack, out);
                stack.pop();
                p -= 1;
            }
        }
        rec(n, n, &mut stack, &mut out);
        out
    }
}

/// Ordering groups diagrams by size first, then lexicographically on parts,
/// so the maximum among diagrams of one size is the lex-leading one.
impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.size()
            .cmp(&other.size())
            .then_with(|| self.parts.cmp(&other.parts))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for p in &self.parts {
            if !first {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
            first = false;
        }
        Ok(())
    }
}

impl FromStr for Partition {
    type Err = PartitionError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s.trim().is_empty() {
            return Ok(Partition::empty());
        }
        let parts: Result<Vec<u32>, _> = s.split(',').map(|p| p.trim().parse()).collect();
        let parts = parts.map_err(|_| PartitionError::Parse(s.to_string()))?;
        Partition::new(parts).map_err(|_| PartitionError::Parse(s.to_string()))
    }
}

/// Number of column-strict fillings of `lambda` with content `weight`
/// (the Kostka number). The weight may be any composition; the count is
/// invariant under permuting it.
pub fn kostka(lambda: &Partition, weight: &[u32]) -> BigInt {
    if weight.iter().map(|&w| u64::from(w)).sum::<u64>() != lambda.size() {
        return BigInt::zero();
    }
    // Grow the diagram by one horizontal strip per weight entry.
    let mut states: BTreeMap<Vec<u32>, BigInt> = BTreeMap::new();
    states.insert(Vec::new(), BigInt::one());
    for &w in weight {
        let mut next: BTreeMap<Vec<u32>, BigInt> = BTreeMap::new();
        for (mu, count) in &states {
            for nu in horizontal_strip_extensions(mu, w, lambda.parts()) {
                *next.entry(nu).or_insert_with(BigInt::zero) += count;
            }
        }
        states = next;
    }
    states.remove(lambda.parts()).unwrap_or_else(BigInt::zero)
}

// All partitions nu obtained from mu by adding a horizontal strip of `strip`
// boxes while staying inside `bound` row-wise.
fn horizontal_strip_extensions(mu: &[u32], strip: u32, bound: &[u32]) -> Vec<Vec<u32>> {
    let rows = bound.len();
    let mut out = Vec::new();
    let mut nu: Vec<u32> = Vec::with_capacity(rows);
    fn rec(
        row: usize,
        rows: usize,
        left: u32,
        mu: &[u32],
        bound: &[u32],
        nu: &mut Vec<u32>,
        out: &mut Vec<Vec<u32>>,
    ) {
        if row == rows {
            if left == 0 {
                let mut v = nu.clone();
                while v.last() == Some(&0) {
                    v.pop();
                }
                out.push(v);
            }
            return;
        }
        let old = mu.get(row).copied().unwrap_or(0);
        // Strip condition: the new row may not pass under last round's
        // previous row; weak decrease against the already-chosen row above.
        let cap_strip = if row == 0 { u32::MAX } else { mu.get(row - 1).copied().unwrap_or(0) };
        let cap_shape = if row == 0 { bound[0] } else { nu[row - 1].min(bound[row]) };
        let hi = old.saturating_add(left).min(cap_strip).min(cap_shape);
        if old > hi {
            return;
        }
        for new in (old..=hi).rev() {
            nu.push(new);
            rec(row + 1, rows, left - (new - old), mu, bound, nu, out);
            nu.pop();
        }
    }
    rec(0, rows, strip, mu, bound, &mut nu, &mut out);
    out
}

/// Value at `x_1 = ... = x_D = 1` of the monomial symmetric function of
/// `mu`: the number of distinct rearrangements of `mu` padded with zeros to
/// `D` slots.
pub fn monomial_ones(mu: &Partition, d: u32) -> BigInt {
    let height = mu.height() as u32;
    if height > d {
        return BigInt::zero();
    }
    let mut count = binomial(BigInt::from(d), BigInt::from(height));
    // Multiply by (height)! / prod over equal-part groups of (group size)!.
    let mut i = 0;
    let parts = mu.parts();
    let mut perms = BigInt::one();
    for k in 1..=height {
        perms *= BigInt::from(k);
    }
    while i < parts.len() {
        let j = (i..parts.len()).take_while(|&j| parts[j] == parts[i]).count();
        let mut fact = BigInt::one();
        for k in 1..=j {
            fact *= BigInt::from(k as u32);
        }
        perms /= fact;
        i += j;
    }
    count *= perms;
    count
}

/// Integer linear combination of symmetric-group irreducibles of a fixed
/// size. Negative coefficients are allowed; they arise in intermediate
/// branching arithmetic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VirtualSymClass {
    n: u64,
    coeffs: BTreeMap<Partition, BigInt>,
}

impl VirtualSymClass {
    pub fn new(n: u64) -> Self {
        VirtualSymClass { n, coeffs: BTreeMap::new() }
    }

    pub fn from_terms<I>(n: u64, terms: I) -> Result<Self, PartitionError>
    where
        I: IntoIterator<Item = (Partition, BigInt)>,
    {
        let mut c = Self::new(n);
        for (p, k) in terms {
            c.add_term(p, k)?;
        }
        Ok(c)
    }

    pub fn size(&self) -> u64 {
        self.n
    }

    pub fn add_term(&mut self, p: Partition, k: BigInt) -> Result<(), PartitionError> {
        if p.size() != self.n {
            return Err(PartitionError::SizeMismatch { expected: self.n, got: p.size() });
        }
        if k.is_zero() {
            return Ok(());
        }
        match self.coeffs.entry(p) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(k);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += k;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
        Ok(())
    }

    pub fn coeff(&self, p: &Partition) -> BigInt {
        self.coeffs.get(p).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &BigInt)> {
        self.coeffs.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn support_len(&self) -> usize {
        self.coeffs.len()
    }

    /// Total dimension: sum of coefficients times hook-length dimensions.
    pub fn dim(&self) -> BigInt {
        self.coeffs
            .iter()
            .map(|(p, k)| k * p.dim_sn())
            .sum()
    }

    pub fn checked_add(&self, rhs: &Self) -> Result<Self, PartitionError> {
        if self.n != rhs.n {
            return Err(PartitionError::SizeMismatch { expected: self.n, got: rhs.n });
        }
        let mut out = self.clone();
        for (p, k) in &rhs.coeffs {
            out.add_term(p.clone(), k.clone())?;
        }
        Ok(out)
    }

    pub fn checked_sub(&self, rhs: &Self) -> Result<Self, PartitionError> {
        if self.n != rhs.n {
            return Err(PartitionError::SizeMismatch { expected: self.n, got: rhs.n });
        }
        let mut out = self.clone();
        for (p, k) in &rhs.coeffs {
            out.add_term(p.clone(), -k.clone())?;
        }
        Ok(out)
    }

    /// Restriction to the next smaller symmetric group: every diagram is
    /// replaced by the sum of its one-box deletions.
    pub fn restrict(&self) -> VirtualSymClass {
        assert!(self.n >= 1, "cannot restrict size-0 classes");
        let mut out = VirtualSymClass::new(self.n - 1);
        for (p, k) in &self.coeffs {
            for row in p.removable_rows() {
                out.add_term(p.with_box_removed(row), k.clone()).unwrap();
            }
        }
        out
    }

    /// Induction to the next larger symmetric group: every diagram is
    /// replaced by the sum of its one-box additions.
    pub fn induce(&self) -> VirtualSymClass {
        let mut out = VirtualSymClass::new(self.n + 1);
        for (p, k) in &self.coeffs {
            for row in p.addable_rows() {
                out.add_term(p.with_box_added(row), k.clone()).unwrap();
            }
        }
        out
    }
}

/// The class equation carrying the multilinear missing-tetrad class to the
/// next inner-derivation class: `Ind(Res(cM)) - cM`.
pub fn md_class_from_m(c_m: &VirtualSymClass) -> VirtualSymClass {
    c_m.restrict()
        .induce()
        .checked_sub(c_m)
        .expect("Ind after Res preserves size")
}

/// Multilinear missing-tetrad class: a size-`D+1` symmetric-group class
/// whose dimension equals the multilinear missing-tetrad dimension in
/// degree `D`. Known for `D <= 7`; zero for `D <= 3`.
pub fn multilinear_m_class(d: u32) -> Result<VirtualSymClass, PartitionError> {
    let one = BigInt::one;
    let two = || BigInt::from(2);
    let terms: Vec<(Partition, BigInt)> = match d {
        0..=3 => Vec::new(),
        4 => vec![(Partition::of(&[1, 1, 1, 1, 1]), one())],
        5 => vec![(Partition::of(&[2, 1, 1, 1, 1]), one())],
        6 => vec![(Partition::of(&[3, 1, 1, 1, 1]), two())],
        7 => vec![
            (Partition::of(&[4, 1, 1, 1, 1]), two()),
            (Partition::of(&[3, 2, 1, 1, 1]), one()),
            (Partition::of(&[2, 2, 1, 1, 1, 1]), one()),
            (Partition::of(&[3, 1, 1, 1, 1, 1]), one()),
        ],
        _ => return Err(PartitionError::UnsupportedDegree(d)),
    };
    VirtualSymClass::from_terms(u64::from(d) + 1, terms)
}

/// Multilinear inner-derivation gap class, size `D`. Zero for `D <= 4`;
/// for `D = 8` it is derived from the `D = 7` missing-tetrad class through
/// the class equation.
pub fn multilinear_md_class(d: u32) -> Result<VirtualSymClass, PartitionError> {
    let one = BigInt::one;
    let two = || BigInt::from(2);
    let terms: Vec<(Partition, BigInt)> = match d {
        0..=4 => Vec::new(),
        5 => vec![(Partition::of(&[2, 1, 1, 1]), one())],
        6 => vec![
            (Partition::of(&[1, 1, 1, 1, 1, 1]), one()),
            (Partition::of(&[2, 1, 1, 1, 1]), one()),
            (Partition::of(&[3, 1, 1, 1]), one()),
            (Partition::of(&[2, 2, 1, 1]), one()),
        ],
        7 => vec![
            (Partition::of(&[2, 1, 1, 1, 1, 1]), two()),
            (Partition::of(&[2, 2, 1, 1, 1]), two()),
            (Partition::of(&[3, 1, 1, 1, 1]), two()),
            (Partition::of(&[3, 2, 1, 1]), two()),
            (Partition::of(&[4, 1, 1, 1]), two()),
        ],
        8 => return Ok(md_class_from_m(&multilinear_m_class(7)?)),
        _ => return Err(PartitionError::UnsupportedDegree(d)),
    };
    VirtualSymClass::from_terms(u64::from(d), terms)
}

/// Closed dimension of the degree-`n` missing-tetrad space over `D`
/// generators. Zero below degree 4; no formula above degree 7.
pub fn closed_dim_m(n: u32, d: u32) -> Result<BigInt, PartitionError> {
    let d_big = BigInt::from(d);
    let choose = |k: u32| binomial(d_big.clone(), BigInt::from(k));
    Ok(match n {
        0..=3 => BigInt::zero(),
        4 => choose(4),
        5 => d_big.clone() * choose(4),
        6 => BigInt::from(2) * binomial(BigInt::from(d + 1), BigInt::from(2)) * choose(4),
        7 => {
            BigInt::from(2) * d_big.clone() * binomial(BigInt::from(d + 1), BigInt::from(2))
                * choose(4)
                - Partition::of(&[3, 2, 1, 1]).dim_gl(d)
        }
        _ => return Err(PartitionError::UnsupportedDegree(n)),
    })
}

/// Closed dimension of the degree-`n` gap between inner derivations of the
/// reversal-fixed algebra and of its special Jordan subalgebra. Zero below
/// degree 5; no closed formula above degree 7.
pub fn closed_dim_md(n: u32, d: u32) -> Result<BigInt, PartitionError> {
    let d_big = BigInt::from(d);
    let choose = |k: u32| binomial(d_big.clone(), BigInt::from(k));
    Ok(match n {
        0..=4 => BigInt::zero(),
        5 => d_big.clone() * choose(4) - choose(5),
        6 => choose(6) + d_big.clone() * d_big.clone() * choose(4) - d_big.clone() * choose(5),
        7 => {
            BigInt::from(2)
                * (d_big.clone() * Partition::of(&[3, 1, 1, 1]).dim_gl(d)
                    + binomial(d_big.clone(), BigInt::from(2)) * choose(5)
                    - choose(7))
        }
        _ => return Err(PartitionError::UnsupportedDegree(n)),
    })
}

/// Column-height constraints on the diagrams of a purported multilinear
/// missing-tetrad class: every diagram must have first column of height at
/// least 5, or first two columns of height exactly 4; and when
/// `D mod 4` is 2 or 3 the first column may not exceed `D - 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColumnCheck {
    pub violations: Vec<(Partition, String)>,
}

impl ColumnCheck {
    pub fn pass(&self) -> bool {
        self.violations.is_empty()
    }
}

pub fn check_c1_constraint(c: &VirtualSymClass, d: u32) -> ColumnCheck {
    let mut violations = Vec::new();
    let bound_applies = d % 4 == 2 || d % 4 == 3;
    for (p, _) in c.terms() {
        let cols = p.column_heights();
        let c1 = cols.first().copied().unwrap_or(0);
        let c2 = cols.get(1).copied().unwrap_or(0);
        if !(c1 >= 5 || (c1 == 4 && c2 == 4)) {
            violations.push((p.clone(), format!("first columns {c1},{c2} too short")));
        }
        if bound_applies && c1 > d - 1 {
            violations.push((p.clone(), format!("first column {c1} exceeds {}", d - 1)));
        }
    }
    ColumnCheck { violations }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::of(parts)
    }

    fn bi(v: i64) -> BigInt {
        BigInt::from(v)
    }

    #[test]
    fn symmetric_group_dimensions() {
        assert_eq!(p(&[3, 1, 1, 1, 1]).dim_sn(), bi(15));
        assert_eq!(p(&[1, 1, 1, 1, 1]).dim_sn(), bi(1));
        assert_eq!(p(&[4, 1, 1, 1, 1]).dim_sn(), bi(35));
        assert_eq!(p(&[3, 2, 1, 1, 1]).dim_sn(), bi(64));
        assert_eq!(p(&[2, 2, 1, 1, 1, 1]).dim_sn(), bi(20));
        assert_eq!(p(&[3, 1, 1, 1, 1, 1]).dim_sn(), bi(21));
        assert_eq!(p(&[2, 2, 1, 1, 1]).dim_sn(), bi(14));
        assert_eq!(Partition::empty().dim_sn(), bi(1));
    }

    #[test]
    fn general_linear_dimensions() {
        assert_eq!(p(&[1, 1, 1]).dim_gl(2), bi(0));
        assert_eq!(p(&[3, 1, 1, 1]).dim_gl(4), bi(10));
        assert_eq!(p(&[3, 2, 1, 1]).dim_gl(4), bi(20));
        assert_eq!(p(&[3, 3, 2]).dim_gl(3), bi(3));
        assert_eq!(p(&[2]).dim_gl(2), bi(3));
        assert_eq!(p(&[1]).dim_gl(7), bi(7));
    }

    #[test]
    fn hook_dimension_sum_of_squares() {
        for n in 1..=8u64 {
            let total: BigInt = Partition::all_of_size(n)
                .iter()
                .map(|y| {
                    let d = y.dim_sn();
                    &d * &d
                })
                .sum();
            let mut fact = BigInt::one();
            for k in 1..=n {
                fact *= BigInt::from(k);
            }
            assert_eq!(total, fact, "degree {n}");
        }
    }

    #[test]
    fn schur_weyl_dimension_sum() {
        for d in 1..=4u32 {
            for n in 1..=7u64 {
                let total: BigInt = Partition::all_of_size(n)
                    .iter()
                    .map(|y| y.dim_sn() * y.dim_gl(d))
                    .sum();
                assert_eq!(total, BigInt::from(d).pow(n as u32), "D={d} n={n}");
            }
        }
    }

    #[test]
    fn conjugation_is_an_involution() {
        for n in 0..=8u64 {
            for y in Partition::all_of_size(n) {
                assert_eq!(y.conjugate().conjugate(), y);
                assert_eq!(y.conjugate().dim_sn(), y.dim_sn());
            }
        }
    }

    #[test]
    fn display_round_trip() {
        let y = p(&[4, 1, 1, 1, 1]);
        assert_eq!(y.to_string(), "4,1,1,1,1");
        assert_eq!("4,1,1,1,1".parse::<Partition>().unwrap(), y);
        assert_eq!("".parse::<Partition>().unwrap(), Partition::empty());
        assert!("1,4".parse::<Partition>().is_err());
    }

    #[test]
    fn restriction_examples() {
        let c = VirtualSymClass::from_terms(5, [(p(&[1, 1, 1, 1, 1]), bi(1))]).unwrap();
        let res = c.restrict();
        assert_eq!(res.coeff(&p(&[1, 1, 1, 1])), bi(1));
        assert_eq!(res.support_len(), 1);

        // One-box deletion preserves total dimension.
        for n in 1..=7u64 {
            for y in Partition::all_of_size(n) {
                let c = VirtualSymClass::from_terms(n, [(y.clone(), bi(1))]).unwrap();
                assert_eq!(c.restrict().dim(), y.dim_sn());
            }
        }
    }

    #[test]
    fn induction_examples() {
        let c = VirtualSymClass::from_terms(1, [(p(&[1]), bi(1))]).unwrap();
        let ind = c.induce();
        assert_eq!(ind.coeff(&p(&[2])), bi(1));
        assert_eq!(ind.coeff(&p(&[1, 1])), bi(1));

        // One-box addition multiplies total dimension by n + 1.
        for n in 1..=7u64 {
            for y in Partition::all_of_size(n) {
                let c = VirtualSymClass::from_terms(n, [(y.clone(), bi(1))]).unwrap();
                assert_eq!(c.induce().dim(), BigInt::from(n + 1) * y.dim_sn());
            }
        }
    }

    #[test]
    fn restriction_of_m7_class() {
        let m7 = multilinear_m_class(7).unwrap();
        let res = m7.restrict();
        let expect = VirtualSymClass::from_terms(
            7,
            [
                (p(&[3, 1, 1, 1, 1]), bi(4)),
                (p(&[2, 1, 1, 1, 1, 1]), bi(2)),
                (p(&[2, 2, 1, 1, 1]), bi(2)),
                (p(&[4, 1, 1, 1]), bi(2)),
                (p(&[3, 2, 1, 1]), bi(1)),
            ],
        )
        .unwrap();
        assert_eq!(res, expect);
    }

    #[test]
    fn ind_res_of_single_diagram() {
        let c = VirtualSymClass::from_terms(7, [(p(&[3, 1, 1, 1, 1]), bi(1))]).unwrap();
        let ir = c.restrict().induce();
        let expect = VirtualSymClass::from_terms(
            7,
            [
                (p(&[3, 1, 1, 1, 1]), bi(2)),
                (p(&[2, 1, 1, 1, 1, 1]), bi(1)),
                (p(&[2, 2, 1, 1, 1]), bi(1)),
                (p(&[4, 1, 1, 1]), bi(1)),
                (p(&[3, 2, 1, 1]), bi(1)),
            ],
        )
        .unwrap();
        assert_eq!(ir, expect);
    }

    #[test]
    fn md_classes_from_class_equation() {
        // Size 5: from the alternating class.
        let md5 = md_class_from_m(&multilinear_m_class(4).unwrap());
        assert_eq!(md5, multilinear_md_class(5).unwrap());
        // Sizes 6 and 7 reproduce the known lists.
        let md6 = md_class_from_m(&multilinear_m_class(5).unwrap());
        assert_eq!(md6, multilinear_md_class(6).unwrap());
        let md7 = md_class_from_m(&multilinear_m_class(6).unwrap());
        assert_eq!(md7, multilinear_md_class(7).unwrap());
        assert_eq!(md7.dim(), bi(180));
    }

    #[test]
    fn md8_class_and_dimension() {
        let md8 = multilinear_md_class(8).unwrap();
        assert_eq!(md8.dim(), bi(1225));
        let expect = VirtualSymClass::from_terms(
            8,
            [
                (p(&[4, 1, 1, 1, 1]), bi(4)),
                (p(&[3, 2, 1, 1, 1]), bi(6)),
                (p(&[2, 2, 1, 1, 1, 1]), bi(3)),
                (p(&[3, 1, 1, 1, 1, 1]), bi(5)),
                (p(&[2, 1, 1, 1, 1, 1, 1]), bi(2)),
                (p(&[2, 2, 2, 1, 1]), bi(2)),
                (p(&[5, 1, 1, 1]), bi(2)),
                (p(&[4, 2, 1, 1]), bi(3)),
                (p(&[3, 3, 1, 1]), bi(1)),
                (p(&[3, 2, 2, 1]), bi(1)),
            ],
        )
        .unwrap();
        assert_eq!(md8, expect);
    }

    #[test]
    fn class_dimensions_match_multilinear_counts() {
        assert_eq!(multilinear_m_class(4).unwrap().dim(), bi(1));
        assert_eq!(multilinear_m_class(5).unwrap().dim(), bi(5));
        assert_eq!(multilinear_m_class(6).unwrap().dim(), bi(30));
        assert_eq!(multilinear_m_class(7).unwrap().dim(), bi(175));
        assert_eq!(multilinear_md_class(5).unwrap().dim(), bi(4));
        assert_eq!(multilinear_md_class(6).unwrap().dim(), bi(25));
        // Class-equation dimension identity: dim MD(D+1) = D dim M(D).
        for d in 4..=7u32 {
            let m = multilinear_m_class(d).unwrap();
            assert_eq!(
                md_class_from_m(&m).dim(),
                BigInt::from(d) * m.dim()
            );
        }
    }

    #[test]
    fn closed_m_dimensions() {
        assert_eq!(closed_dim_m(4, 3).unwrap(), bi(0));
        assert_eq!(closed_dim_m(4, 4).unwrap(), bi(1));
        assert_eq!(closed_dim_m(6, 4).unwrap(), bi(20));
        assert_eq!(closed_dim_m(7, 4).unwrap(), bi(60));
        assert_eq!(closed_dim_m(2, 7).unwrap(), bi(0));
        assert!(closed_dim_m(8, 2).is_err());
    }

    #[test]
    fn closed_md_dimensions() {
        assert_eq!(closed_dim_md(5, 4).unwrap(), bi(4));
        assert_eq!(closed_dim_md(6, 4).unwrap(), bi(16));
        assert_eq!(closed_dim_md(7, 4).unwrap(), bi(80));
        for n in 0..=4u32 {
            assert_eq!(closed_dim_md(n, 6).unwrap(), bi(0));
        }
        assert!(closed_dim_md(8, 2).is_err());
    }

    #[test]
    fn column_constraints_on_m_classes() {
        for d in 4..=7u32 {
            let check = check_c1_constraint(&multilinear_m_class(d).unwrap(), d);
            assert!(check.pass(), "D={d}: {:?}", check.violations);
        }
        // A diagram with a short first column trips assertion 1.
        let bad = VirtualSymClass::from_terms(5, [(p(&[4, 1]), bi(1))]).unwrap();
        assert!(!check_c1_constraint(&bad, 4).pass());
    }

    #[test]
    fn kostka_values() {
        assert_eq!(kostka(&p(&[2, 1]), &[1, 1, 1]), bi(2));
        assert_eq!(kostka(&p(&[2, 1]), &[2, 1]), bi(1));
        assert_eq!(kostka(&p(&[2, 1]), &[1, 2]), bi(1));
        assert_eq!(kostka(&p(&[2, 1]), &[3]), bi(0));
        // Leading row: always exactly one filling.
        for n in 1..=6u32 {
            for w in Partition::all_of_size(u64::from(n)) {
                assert_eq!(kostka(&p(&[n]), w.parts()), bi(1));
            }
        }
        // Multilinear weight recovers the hook-length dimension.
        for n in 1..=6u64 {
            let ones = vec![1u32; n as usize];
            for y in Partition::all_of_size(n) {
                assert_eq!(kostka(&y, &ones), y.dim_sn(), "{y}");
            }
        }
    }

    #[test]
    fn hook_content_matches_kostka_specialization() {
        // dim_gl(Y, D) = sum over weights mu of K_{Y,mu} * monomial_ones(mu, D).
        for n in 1..=6u64 {
            for y in Partition::all_of_size(n) {
                for d in 1..=4u32 {
                    let total: BigInt = Partition::all_of_size(n)
                        .iter()
                        .map(|mu| kostka(&y, mu.parts()) * monomial_ones(mu, d))
                        .sum();
                    assert_eq!(total, y.dim_gl(d), "{y} at D={d}");
                }
            }
        }
    }
}
