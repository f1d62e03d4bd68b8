//! Brute-force ground truth inside the tensor algebra on `D` generators.
//!
//! Words are the monomial basis of the degree-`n` component; subspaces are
//! held as echelonized lists of sparse integer rows under the lexicographic
//! word order. The spans computed here are the free special Jordan algebra
//! `SJ(D)` (closure of the generators under `a∘b = ab + ba`, which spans
//! the same subspace as the halved product), the reversal-fixed space
//! `CJ(D)` spanned by `w + rev(w)`, and the inner-derivation images
//! `sum_i [x_i, CJ_{n-1}]` and `[SJ, SJ]`. Closing echelon bases under the
//! bilinear product spans the same space as all bracketed monomials.
//!
//! Everything is exact: rows are primitive integer vectors (content 1,
//! positive pivot coefficient) and elimination is fraction-free. The
//! canonical reduced form, and therefore every dimension, is independent
//! of insertion order and parallel scheduling. A configurable budget caps
//! the number of stored nonzero entries.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde_json::json;
use thiserror::Error;

use crate::dims::{phi_product, DimError, DimTable};
use crate::series::{string0_kernel, string2_kernel, LaurentPoly};
use crate::{CharSeries, IntSeries};

/// Default cap on stored nonzero entries per basis.
pub const DEFAULT_ENTRY_BUDGET: usize = 10_000_000;

/// Hard cap on the number of words in one space.
const MAX_WORDS: u64 = 2_000_000;

#[derive(Debug, Error)]
pub enum OracleError {
    #[error("entry budget exceeded: {entries} stored entries, budget {budget}")]
    BudgetExceeded { entries: usize, budget: usize },
    #[error("word space with {0} words exceeds the supported size")]
    SpaceTooLarge(u64),
    #[error("alphabet size {0} unsupported; need 1 to 9 generators")]
    AlphabetSize(u32),
    #[error("multidegree {0:?} does not fit degree {1} over {2} generators")]
    Multidegree(Vec<u32>, usize, u32),
    #[error("bases live in different word spaces")]
    SpaceMismatch,
    #[error("exact coefficient exceeded the fixed-precision range")]
    Overflow,
    #[error(transparent)]
    Dim(#[from] DimError),
}

#[derive(Debug, Clone)]
pub struct OracleConfig {
    pub entry_budget: usize,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig { entry_budget: DEFAULT_ENTRY_BUDGET }
    }
}

/// The words indexing one homogeneous component: either all `D^n` words of
/// length `n` or the block of one multidegree. Codes are base-`D` integers,
/// most significant letter first, so ascending code order is lexicographic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WordSpace {
    d: u32,
    len: usize,
    codes: Vec<u64>,
    index: Option<HashMap<u64, u32>>,
}

impl WordSpace {
    pub fn full(len: usize, d: u32) -> Result<Self, OracleError> {
        if d == 0 || d > 9 {
            return Err(OracleError::AlphabetSize(d));
        }
        let count = (u64::from(d))
            .checked_pow(len as u32)
            .filter(|&c| c <= MAX_WORDS)
            .ok_or(OracleError::SpaceTooLarge(u64::MAX))?;
        Ok(WordSpace { d, len, codes: (0..count).collect(), index: None })
    }

    /// The block of all words with letter `i` occurring exactly
    /// `multidegree[i]` times. The multidegree may be shorter than `D`;
    /// missing entries are zero.
    pub fn multidegree(multidegree: &[u32], d: u32) -> Result<Self, OracleError> {
        if d == 0 || d > 9 {
            return Err(OracleError::AlphabetSize(d));
        }
        let len: u64 = multidegree.iter().map(|&m| u64::from(m)).sum();
        if multidegree.len() > d as usize || len == 0 {
            return Err(OracleError::Multidegree(
                multidegree.to_vec(),
                len as usize,
                d,
            ));
        }
        let mut counts = vec![0u32; d as usize];
        counts[..multidegree.len()].copy_from_slice(multidegree);
        let mut codes = Vec::new();
        let mut word = Vec::with_capacity(len as usize);
        gen_block(&mut counts, &mut word, len as usize, d, &mut codes);
        if codes.len() as u64 > MAX_WORDS {
            return Err(OracleError::SpaceTooLarge(codes.len() as u64));
        }
        let index = codes
            .iter()
            .enumerate()
            .map(|(i, &c)| (c, i as u32))
            .collect();
        Ok(WordSpace { d, len: len as usize, codes, index: Some(index) })
    }

    pub fn d(&self) -> u32 {
        self.d
    }

    pub fn word_len(&self) -> usize {
        self.len
    }

    pub fn dim(&self) -> usize {
        self.codes.len()
    }

    pub fn code(&self, idx: u32) -> u64 {
        self.codes[idx as usize]
    }

    fn index_of(&self, code: u64) -> Option<u32> {
        match &self.index {
            None => (code < self.codes.len() as u64).then_some(code as u32),
            Some(map) => map.get(&code).copied(),
        }
    }

    pub fn digits(&self, idx: u32) -> Vec<u8> {
        let mut out = vec![0u8; self.len];
        let mut c = self.code(idx);
        for slot in out.iter_mut().rev() {
            *slot = (c % u64::from(self.d)) as u8;
            c /= u64::from(self.d);
        }
        out
    }

    /// The word as a string of 1-based generator digits.
    pub fn word_string(&self, idx: u32) -> String {
        self.digits(idx)
            .into_iter()
            .map(|g| char::from(b'1' + g))
            .collect()
    }

    pub fn multidegree_of(&self, idx: u32) -> Vec<u32> {
        let mut m = vec![0u32; self.d as usize];
        for g in self.digits(idx) {
            m[g as usize] += 1;
        }
        m
    }

    fn reversed_code(&self, code: u64) -> u64 {
        let d = u64::from(self.d);
        let mut c = code;
        let mut out = 0;
        for _ in 0..self.len {
            out = out * d + c % d;
            c /= d;
        }
        out
    }
}

fn gen_block(counts: &mut Vec<u32>, word: &mut Vec<u8>, len: usize, d: u32, out: &mut Vec<u64>) {
    if word.len() == len {
        let code = word.iter().fold(0u64, |acc, &g| acc * u64::from(d) + u64::from(g));
        out.push(code);
        return;
    }
    for g in 0..d as usize {
        if counts[g] == 0 {
            continue;
        }
        counts[g] -= 1;
        word.push(g as u8);
        gen_block(counts, word, len, d, out);
        word.pop();
        counts[g] += 1;
    }
}

/// Sparse vector over a word space: sorted (index, coefficient) pairs.
/// Coefficients are fixed-width integers with checked arithmetic; any
/// overflow surfaces as an error instead of a wrong answer. Rows are
/// content-stripped after every elimination step, which keeps the
/// coefficients small in practice.
pub type Row = Vec<(u32, i128)>;

fn content(row: &Row) -> i128 {
    let mut g: i128 = 0;
    for &(_, v) in row {
        g = g.gcd(&v);
        if g == 1 {
            break;
        }
    }
    g
}

fn strip_content(row: &mut Row) {
    let g = content(row);
    if g > 1 {
        for (_, v) in row.iter_mut() {
            *v /= g;
        }
    }
}

fn normalize(row: &mut Row) {
    if row.is_empty() {
        return;
    }
    let mut g = content(row);
    if row[0].1 < 0 {
        g = -g;
    }
    if g != 1 {
        for (_, v) in row.iter_mut() {
            *v /= g;
        }
    }
}

fn mul_add(ca: i128, a: i128, cb: i128, b: i128) -> Result<i128, OracleError> {
    ca.checked_mul(a)
        .and_then(|x| cb.checked_mul(b).and_then(|y| x.checked_add(y)))
        .ok_or(OracleError::Overflow)
}

// ca * a + cb * b over merged sorted indices, all products checked.
fn linear_combine(a: &Row, ca: i128, b: &Row, cb: i128) -> Result<Row, OracleError> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].0.cmp(&b[j].0) {
            std::cmp::Ordering::Less => {
                out.push((a[i].0, ca.checked_mul(a[i].1).ok_or(OracleError::Overflow)?));
                i += 1;
            }
            std::cmp::Ordering::Greater => {
                out.push((b[j].0, cb.checked_mul(b[j].1).ok_or(OracleError::Overflow)?));
                j += 1;
            }
            std::cmp::Ordering::Equal => {
                let v = mul_add(ca, a[i].1, cb, b[j].1)?;
                if v != 0 {
                    out.push((a[i].0, v));
                }
                i += 1;
                j += 1;
            }
        }
    }
    for &(idx, v) in &a[i..] {
        out.push((idx, ca.checked_mul(v).ok_or(OracleError::Overflow)?));
    }
    for &(idx, v) in &b[j..] {
        out.push((idx, cb.checked_mul(v).ok_or(OracleError::Overflow)?));
    }
    Ok(out)
}

/// An echelonized spanning set: primitive integer rows with distinct pivot
/// words, pivots being lexicographically least words of their rows.
#[derive(Debug, Clone)]
pub struct SpanBasis {
    space: WordSpace,
    rows: Vec<Row>,
    by_pivot: BTreeMap<u32, usize>,
    entries: usize,
    budget: usize,
    canonical: bool,
}

impl SpanBasis {
    pub fn new(space: WordSpace, cfg: &OracleConfig) -> Self {
        SpanBasis {
            space,
            rows: Vec::new(),
            by_pivot: BTreeMap::new(),
            entries: 0,
            budget: cfg.entry_budget,
            canonical: true,
        }
    }

    pub fn space(&self) -> &WordSpace {
        &self.space
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn entry_count(&self) -> usize {
        self.entries
    }

    /// Reduces against all rows whose pivot occurs in the vector;
    /// fraction-free, with a content strip per step.
    pub fn reduce(&self, mut vec: Row) -> Result<Row, OracleError> {
        loop {
            let Some(&(lead, a)) = vec.first() else { return Ok(vec) };
            let Some(&row_idx) = self.by_pivot.get(&lead) else { return Ok(vec) };
            let row = &self.rows[row_idx];
            vec = linear_combine(&vec, row[0].1, row, -a)?;
            strip_content(&mut vec);
        }
    }

    /// Inserts one vector; returns whether the rank grew.
    pub fn insert(&mut self, vec: Row) -> Result<bool, OracleError> {
        let mut vec = self.reduce(vec)?;
        if vec.is_empty() {
            return Ok(false);
        }
        normalize(&mut vec);
        self.entries += vec.len();
        if self.entries > self.budget {
            return Err(OracleError::BudgetExceeded {
                entries: self.entries,
                budget: self.budget,
            });
        }
        self.by_pivot.insert(vec[0].0, self.rows.len());
        self.rows.push(vec);
        self.canonical = self.rows.len() == 1;
        Ok(true)
    }

    pub fn contains_vec(&self, vec: Row) -> Result<bool, OracleError> {
        Ok(self.reduce(vec)?.is_empty())
    }

    /// Whether every row of the other basis lies in this span. Both bases
    /// must index the same word space.
    pub fn contains(&self, other: &SpanBasis) -> Result<bool, OracleError> {
        if self.space != other.space {
            return Err(OracleError::SpaceMismatch);
        }
        for row in &other.rows {
            if !self.contains_vec(row.clone())? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Back-substitutes to the unique reduced form: rows ordered by pivot,
    /// each pivot word absent from every other row, rows primitive with
    /// positive pivot coefficient. The result does not depend on the
    /// insertion history.
    pub fn canonicalize(&mut self) -> Result<(), OracleError> {
        if self.canonical {
            return Ok(());
        }
        let mut rows: Vec<Row> = Vec::with_capacity(self.rows.len());
        for &idx in self.by_pivot.values() {
            rows.push(std::mem::take(&mut self.rows[idx]));
        }
        for k in (0..rows.len()).rev() {
            let pivot_row = std::mem::take(&mut rows[k]);
            let pivot = pivot_row[0].0;
            for row in rows.iter_mut().take(k) {
                let Some(pos) = row.binary_search_by_key(&pivot, |e| e.0).ok() else {
                    continue;
                };
                let c = row[pos].1;
                *row = linear_combine(row, pivot_row[0].1, &pivot_row, -c)?;
                normalize(row);
            }
            rows[k] = pivot_row;
        }
        self.entries = rows.iter().map(Row::len).sum();
        self.by_pivot = rows
            .iter()
            .enumerate()
            .map(|(i, r)| (r[0].0, i))
            .collect();
        self.rows = rows;
        self.canonical = true;
        if self.entries > self.budget {
            return Err(OracleError::BudgetExceeded {
                entries: self.entries,
                budget: self.budget,
            });
        }
        Ok(())
    }

    /// Rows in pivot order.
    pub fn rows(&self) -> impl Iterator<Item = &Row> {
        self.by_pivot.values().map(|&i| &self.rows[i])
    }

    /// Per-multidegree dimension counts. Every row is homogeneous in the
    /// multidegree, so counting pivots per block is exact.
    pub fn weight_character(&self) -> BTreeMap<Vec<u32>, u64> {
        let mut out = BTreeMap::new();
        for &pivot in self.by_pivot.keys() {
            *out.entry(self.space.multidegree_of(pivot)).or_insert(0) += 1;
        }
        out
    }

    /// One JSON object per row in pivot order, entries scaled so the pivot
    /// coefficient is exactly 1; words rendered as 1-based digit strings.
    pub fn export_jsonl(&mut self) -> Result<String, OracleError> {
        self.canonicalize()?;
        let mut out = String::new();
        for row in self.rows() {
            let pivot_coeff = row[0].1;
            let mut entries = serde_json::Map::new();
            for (idx, v) in row {
                entries.insert(
                    self.space.word_string(*idx),
                    json!(format_ratio(*v, pivot_coeff)),
                );
            }
            let line = json!({
                "pivot": self.space.word_string(row[0].0),
                "entries": entries,
            });
            out.push_str(&line.to_string());
            out.push('\n');
        }
        Ok(out)
    }
}

fn format_ratio(num: i128, den: i128) -> String {
    let g = num.gcd(&den);
    let (n, d) = (num / g, den / g);
    if d == 1 {
        n.to_string()
    } else {
        format!("{n}/{d}")
    }
}

// p*q as an index map into the target space, letter counts adding.
fn concat_code(space_p: &WordSpace, cp: u64, space_q: &WordSpace, cq: u64) -> u64 {
    cp * u64::from(space_p.d()).pow(space_q.word_len() as u32) + cq
}

// u*v + sign*v*u assembled in the target space; sign -1 gives the
// commutator, +1 the unhalved Jordan product.
fn two_sided_product(
    u: &Row,
    us: &WordSpace,
    v: &Row,
    vs: &WordSpace,
    target: &WordSpace,
    sign: i128,
) -> Result<Row, OracleError> {
    let mut acc: BTreeMap<u32, i128> = BTreeMap::new();
    for &(iu, cu) in u {
        let cu_code = us.code(iu);
        for &(iv, cv) in v {
            let cv_code = vs.code(iv);
            let fwd = concat_code(us, cu_code, vs, cv_code);
            let bwd = concat_code(vs, cv_code, us, cu_code);
            let prod = cu.checked_mul(cv).ok_or(OracleError::Overflow)?;
            let fwd_idx = target
                .index_of(fwd)
                .expect("product word stays in the block");
            let bwd_idx = target
                .index_of(bwd)
                .expect("product word stays in the block");
            let slot = acc.entry(fwd_idx).or_insert(0);
            *slot = slot.checked_add(prod).ok_or(OracleError::Overflow)?;
            let back = prod.checked_mul(sign).ok_or(OracleError::Overflow)?;
            let slot = acc.entry(bwd_idx).or_insert(0);
            *slot = slot.checked_add(back).ok_or(OracleError::Overflow)?;
        }
    }
    Ok(acc.into_iter().filter(|&(_, v)| v != 0).collect())
}

// Parallel construction of candidate vectors from an indexed pair list,
// inserted in list order so the result is schedule-independent.
fn insert_products(
    basis: &mut SpanBasis,
    pairs: &[(usize, usize)],
    left: &SpanBasis,
    right: &SpanBasis,
    sign: i128,
) -> Result<(), OracleError> {
    for chunk in pairs.chunks(1024) {
        let candidates: Vec<Result<Row, OracleError>> = chunk
            .par_iter()
            .map(|&(iu, iv)| {
                two_sided_product(
                    &left.rows[iu],
                    &left.space,
                    &right.rows[iv],
                    &right.space,
                    &basis.space,
                    sign,
                )
            })
            .collect();
        for vec in candidates {
            basis.insert(vec?)?;
        }
    }
    Ok(())
}

fn validate_multidegree(m: &[u32], n: usize, d: u32) -> Result<Vec<u32>, OracleError> {
    let sum: u64 = m.iter().map(|&x| u64::from(x)).sum();
    if m.len() > d as usize || sum != n as u64 {
        return Err(OracleError::Multidegree(m.to_vec(), n, d));
    }
    let mut full = vec![0u32; d as usize];
    full[..m.len()].copy_from_slice(m);
    Ok(full)
}

fn singleton_space(d: u32, letter: usize) -> Result<WordSpace, OracleError> {
    let mut m = vec![0u32; d as usize];
    m[letter] = 1;
    WordSpace::multidegree(&m, d)
}

/// The reversal-fixed span: one generator `w + rev(w)` per word.
pub fn span_cj(
    n: usize,
    d: u32,
    multidegree: Option<&[u32]>,
    cfg: &OracleConfig,
) -> Result<SpanBasis, OracleError> {
    let space = match multidegree {
        None => WordSpace::full(n, d)?,
        Some(m) => WordSpace::multidegree(&validate_multidegree(m, n, d)?, d)?,
    };
    let mut basis = SpanBasis::new(space, cfg);
    for idx in 0..basis.space.dim() as u32 {
        let code = basis.space.code(idx);
        let rev = basis.space.reversed_code(code);
        let rev_idx = basis
            .space
            .index_of(rev)
            .expect("reversal preserves the multidegree");
        let vec: Row = if rev_idx == idx {
            vec![(idx, 1)]
        } else {
            let (a, b) = (idx.min(rev_idx), idx.max(rev_idx));
            vec![(a, 1), (b, 1)]
        };
        basis.insert(vec)?;
    }
    Ok(basis)
}

// Full-degree chain SJ_1, ..., SJ_n, each closed under the product from
// all earlier degrees.
fn sj_full_chain(n: usize, d: u32, cfg: &OracleConfig) -> Result<Vec<SpanBasis>, OracleError> {
    let mut chain: Vec<SpanBasis> = Vec::with_capacity(n);
    for m in 1..=n {
        let mut basis = SpanBasis::new(WordSpace::full(m, d)?, cfg);
        if m == 1 {
            for i in 0..d {
                basis.insert(vec![(i, 1)])?;
            }
        } else {
            for p in 1..=m / 2 {
                let q = m - p;
                let (left, right) = (&chain[p - 1], &chain[q - 1]);
                let mut pairs = Vec::with_capacity(left.rank() * right.rank());
                for iu in 0..left.rank() {
                    let start = if p == q { iu } else { 0 };
                    for iv in start..right.rank() {
                        pairs.push((iu, iv));
                    }
                }
                insert_products(&mut basis, &pairs, left, right, 1)?;
            }
        }
        chain.push(basis);
    }
    Ok(chain)
}

// Memoized per-multidegree SJ blocks, keyed by the padded multidegree.
struct BlockCache<'a> {
    d: u32,
    cfg: &'a OracleConfig,
    memo: HashMap<Vec<u32>, SpanBasis>,
}

impl<'a> BlockCache<'a> {
    fn new(d: u32, cfg: &'a OracleConfig) -> Self {
        BlockCache { d, cfg, memo: HashMap::new() }
    }

    fn ensure_sj(&mut self, m: &[u32]) -> Result<(), OracleError> {
        if self.memo.contains_key(m) {
            return Ok(());
        }
        let total: u64 = m.iter().map(|&x| u64::from(x)).sum();
        let space = WordSpace::multidegree(m, self.d)?;
        let mut basis = SpanBasis::new(space, self.cfg);
        if total == 1 {
            basis.insert(vec![(0, 1)])?;
        } else {
            for (m1, m2) in splits(m) {
                self.ensure_sj(&m1)?;
                self.ensure_sj(&m2)?;
                let left = &self.memo[&m1];
                let right = &self.memo[&m2];
                let mut pairs = Vec::with_capacity(left.rank() * right.rank());
                for iu in 0..left.rank() {
                    let start = if m1 == m2 { iu } else { 0 };
                    for iv in start..right.rank() {
                        pairs.push((iu, iv));
                    }
                }
                insert_products(&mut basis, &pairs, left, right, 1)?;
            }
        }
        self.memo.insert(m.to_vec(), basis);
        Ok(())
    }

    fn take(&mut self, m: &[u32]) -> SpanBasis {
        self.memo.remove(m).expect("block built before take")
    }
}

// Unordered pairs (m1, m2) of nonzero multidegrees summing to m,
// represented with m1 lexicographically at most m2.
fn splits(m: &[u32]) -> Vec<(Vec<u32>, Vec<u32>)> {
    let mut out = Vec::new();
    let mut m1 = vec![0u32; m.len()];
    loop {
        // Mixed-radix increment over all componentwise submultidegrees.
        let mut pos = 0;
        loop {
            if pos == m.len() {
                return out;
            }
            if m1[pos] < m[pos] {
                m1[pos] += 1;
                break;
            }
            m1[pos] = 0;
            pos += 1;
        }
        let m2: Vec<u32> = m.iter().zip(&m1).map(|(&a, &b)| a - b).collect();
        if m2.iter().all(|&x| x == 0) {
            continue;
        }
        if m1 <= m2 {
            out.push((m1.clone(), m2));
        }
    }
}

/// The free special Jordan span at degree `n`, optionally restricted to
/// one multidegree block.
pub fn span_sj(
    n: usize,
    d: u32,
    multidegree: Option<&[u32]>,
    cfg: &OracleConfig,
) -> Result<SpanBasis, OracleError> {
    match multidegree {
        None => Ok(sj_full_chain(n, d, cfg)?.pop().expect("nonempty chain")),
        Some(m) => {
            let full = validate_multidegree(m, n, d)?;
            let mut cache = BlockCache::new(d, cfg);
            cache.ensure_sj(&full)?;
            Ok(cache.take(&full))
        }
    }
}

/// The span of `sum_i [x_i, CJ_{n-1}]`.
pub fn span_inner_cj(
    n: usize,
    d: u32,
    multidegree: Option<&[u32]>,
    cfg: &OracleConfig,
) -> Result<SpanBasis, OracleError> {
    let space = match multidegree {
        None => WordSpace::full(n, d)?,
        Some(m) => WordSpace::multidegree(&validate_multidegree(m, n, d)?, d)?,
    };
    let mut basis = SpanBasis::new(space, cfg);
    if n < 2 {
        return Ok(basis);
    }
    match multidegree {
        None => {
            let sub = span_cj(n - 1, d, None, cfg)?;
            for i in 0..d as usize {
                let letter = singleton_space(d, i)?;
                let row: Row = vec![(0, 1)];
                for u in sub.rows() {
                    let vec =
                        two_sided_product(&row, &letter, u, &sub.space, &basis.space, -1)?;
                    basis.insert(vec)?;
                }
            }
        }
        Some(m) => {
            let full = validate_multidegree(m, n, d)?;
            for i in 0..d as usize {
                if full[i] == 0 {
                    continue;
                }
                let mut rest = full.clone();
                rest[i] -= 1;
                if rest.iter().all(|&x| x == 0) {
                    continue;
                }
                let sub = span_cj(n - 1, d, Some(&rest), cfg)?;
                let letter = singleton_space(d, i)?;
                let row: Row = vec![(0, 1)];
                for u in sub.rows() {
                    let vec =
                        two_sided_product(&row, &letter, u, &sub.space, &basis.space, -1)?;
                    basis.insert(vec)?;
                }
            }
        }
    }
    Ok(basis)
}

/// The span of all commutators `[u, v]` with `u, v` in the special Jordan
/// span and degrees summing to `n`.
pub fn span_inner_sj(
    n: usize,
    d: u32,
    multidegree: Option<&[u32]>,
    cfg: &OracleConfig,
) -> Result<SpanBasis, OracleError> {
    match multidegree {
        None => {
            let mut basis = SpanBasis::new(WordSpace::full(n, d)?, cfg);
            if n < 2 {
                return Ok(basis);
            }
            let chain = sj_full_chain(n - 1, d, cfg)?;
            for p in 1..=n / 2 {
                let q = n - p;
                let (left, right) = (&chain[p - 1], &chain[q - 1]);
                let mut pairs = Vec::new();
                for iu in 0..left.rank() {
                    let start = if p == q { iu + 1 } else { 0 };
                    for iv in start..right.rank() {
                        pairs.push((iu, iv));
                    }
                }
                insert_products(&mut basis, &pairs, left, right, -1)?;
            }
            Ok(basis)
        }
        Some(m) => {
            let full = validate_multidegree(m, n, d)?;
            let mut basis = SpanBasis::new(WordSpace::multidegree(&full, d)?, cfg);
            let mut cache = BlockCache::new(d, cfg);
            for (m1, m2) in splits(&full) {
                cache.ensure_sj(&m1)?;
                cache.ensure_sj(&m2)?;
                let left = &cache.memo[&m1];
                let right = &cache.memo[&m2];
                let mut pairs = Vec::new();
                for iu in 0..left.rank() {
                    let start = if m1 == m2 { iu + 1 } else { 0 };
                    for iv in start..right.rank() {
                        pairs.push((iu, iv));
                    }
                }
                insert_products(&mut basis, &pairs, left, right, -1)?;
            }
            Ok(basis)
        }
    }
}

/// Outcome of expanding the triple-product identity and its two residue
/// consequences to a fixed order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JacobiReport {
    pub trunc: usize,
    pub product_matches: bool,
    pub residue0_is_one: bool,
    pub residue2_is_neg_z: bool,
}

impl JacobiReport {
    pub fn holds(&self) -> bool {
        self.product_matches && self.residue0_is_one && self.residue2_is_neg_z
    }
}

/// Expands `prod (1 - z^n t)(1 - z^n / t)(1 - z^n)` to the given order and
/// compares with the alternating string sum
/// `sum (-1)^k z^{k(k+1)/2} P_k`, then checks the two residue kernels.
pub fn jacobi_triple_check(trunc: usize) -> Result<JacobiReport, OracleError> {
    let ones = DimTable {
        d: 1,
        n_max: trunc,
        a: vec![BigInt::one(); trunc],
        b: vec![BigInt::zero(); trunc],
    };
    let phi = phi_product(&ones, trunc)?;
    let mut rhs = CharSeries::new(trunc);
    let mut k = 0u32;
    loop {
        let deg = (k as usize * (k as usize + 1)) / 2;
        if deg > trunc {
            break;
        }
        let mut coeff = rhs.coeff(deg).clone();
        let s = LaurentPoly::p_char(k);
        let s = if k % 2 == 1 { s.scale(&BigInt::from(-1)) } else { s };
        coeff += s;
        rhs.set_coeff(deg, coeff);
        k += 1;
    }
    let product_matches = phi == rhs;
    let res0 = kernelled_residue(&phi, string0_kernel());
    let res2 = kernelled_residue(&phi, string2_kernel());
    let mut expect0 = IntSeries::new(trunc);
    expect0.set_coeff(0, BigInt::one());
    let mut expect2 = IntSeries::new(trunc);
    if trunc >= 1 {
        expect2.set_coeff(1, -BigInt::one());
    }
    Ok(JacobiReport {
        trunc,
        product_matches,
        residue0_is_one: res0 == expect0,
        residue2_is_neg_z: res2 == expect2,
    })
}

fn kernelled_residue(phi: &CharSeries, kernel: LaurentPoly) -> IntSeries {
    let mut scaled = phi.clone();
    for deg in 0..=phi.trunc() {
        let c = scaled.coeff(deg).clone() * kernel.clone();
        scaled.set_coeff(deg, c);
    }
    scaled.residue()
}
