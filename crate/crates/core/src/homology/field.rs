//! Coefficient fields and the exact linear algebra built on them.

use std::collections::HashMap;
use std::fmt::Debug;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Characteristic of the coefficient field: 0 means the rationals.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "u64", into = "u64")]
pub struct FieldChar(u64);

impl FieldChar {
    pub const RATIONALS: FieldChar = FieldChar(0);

    pub fn new(p: u64) -> Result<Self> {
        if p == 0 || is_prime(p) {
            Ok(FieldChar(p))
        } else {
            Err(Error::CompositeCharacteristic(p))
        }
    }

    pub fn value(self) -> u64 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl Default for FieldChar {
    fn default() -> Self {
        FieldChar::RATIONALS
    }
}

impl TryFrom<u64> for FieldChar {
    type Error = Error;
    fn try_from(p: u64) -> Result<Self> {
        FieldChar::new(p)
    }
}

impl From<FieldChar> for u64 {
    fn from(c: FieldChar) -> u64 {
        c.0
    }
}

impl std::fmt::Display for FieldChar {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.0)
    }
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

pub trait Field: Sync {
    type Elem: Clone + PartialEq + Debug + Send + Sync;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn from_i64(&self, v: i64) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    /// Panics on zero.
    fn inv(&self, a: &Self::Elem) -> Self::Elem;
}

#[derive(Clone, Copy, Debug, Default)]
pub struct Rationals;

impl Field for Rationals {
    type Elem = BigRational;

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn from_i64(&self, v: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(v))
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
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
    fn inv(&self, a: &BigRational) -> BigRational {
        assert!(!a.is_zero(), "inverse of zero");
        a.recip()
    }
}

#[derive(Clone, Copy, Debug)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self> {
        if is_prime(p) {
            Ok(PrimeField { p })
        } else {
            Err(Error::CompositeCharacteristic(p))
        }
    }
}

impl Field for PrimeField {
    type Elem = u64;

    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1 % self.p
    }
    fn from_i64(&self, v: i64) -> u64 {
        v.rem_euclid(self.p as i64) as u64
    }
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        ((*a as u128 + *b as u128) % self.p as u128) as u64
    }
    fn sub(&self, a: &u64, b: &u64) -> u64 {
        ((*a as u128 + self.p as u128 - *b as u128) % self.p as u128) as u64
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
    fn inv(&self, a: &u64) -> u64 {
        assert!(*a != 0, "inverse of zero");
        // Fermat: a^(p-2).
        let (mut base, mut exp, mut acc) = (*a, self.p - 2, 1u64);
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            exp >>= 1;
        }
        acc
    }
}

/// Sparse vector: sorted `(index, nonzero value)` pairs.
pub type SparseVec<E> = Vec<(usize, E)>;

/// `target - scale * row` on sparse vectors.
fn sub_scaled<F: Field>(
    field: &F,
    target: &SparseVec<F::Elem>,
    scale: &F::Elem,
    row: &SparseVec<F::Elem>,
) -> SparseVec<F::Elem> {
    let mut out = Vec::with_capacity(target.len() + row.len());
    let (mut i, mut j) = (0, 0);
    while i < target.len() || j < row.len() {
        if j == row.len() || (i < target.len() && target[i].0 < row[j].0) {
            out.push(target[i].clone());
            i += 1;
        } else if i == target.len() || row[j].0 < target[i].0 {
            out.push((row[j].0, field.neg(&field.mul(scale, &row[j].1))));
            j += 1;
        } else {
            let v = field.sub(&target[i].1, &field.mul(scale, &row[j].1));
            if !field.is_zero(&v) {
                out.push((target[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

fn scaled<F: Field>(field: &F, v: &SparseVec<F::Elem>, s: &F::Elem) -> SparseVec<F::Elem> {
    v.iter().map(|(i, x)| (*i, field.mul(x, s))).collect()
}

/// Row-echelon basis that grows one vector at a time.
///
/// Each stored row starts at its pivot with value 1 and is zero at every other
/// row's pivot.
pub struct Echelon<'f, F: Field> {
    field: &'f F,
    rows: Vec<SparseVec<F::Elem>>,
    pivot_row: HashMap<usize, usize>,
}

impl<'f, F: Field> Echelon<'f, F> {
    pub fn new(field: &'f F) -> Self {
        Echelon {
            field,
            rows: Vec::new(),
            pivot_row: HashMap::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduces `v` against the stored pivots.
    pub fn reduce(&self, v: &SparseVec<F::Elem>) -> SparseVec<F::Elem> {
        let mut v = v.clone();
        let mut pos = 0;
        // Subtracting a row only touches indices at or after its pivot.
        while pos < v.len() {
            match self.pivot_row.get(&v[pos].0) {
                Some(&r) => {
                    let scale = v[pos].1.clone();
                    v = sub_scaled(self.field, &v, &scale, &self.rows[r]);
                }
                None => pos += 1,
            }
        }
        v
    }

    /// Adds `v` to the span; returns whether it was independent.
    pub fn insert(&mut self, v: &SparseVec<F::Elem>) -> bool {
        let r = self.reduce(v);
        let Some((pivot, lead)) = r.first().cloned() else {
            return false;
        };
        let row = scaled(self.field, &r, &self.field.inv(&lead));
        for k in 0..self.rows.len() {
            if let Ok(p) = self.rows[k].binary_search_by_key(&pivot, |e| e.0) {
                let scale = self.rows[k][p].1.clone();
                self.rows[k] = sub_scaled(self.field, &self.rows[k], &scale, &row);
            }
        }
        self.pivot_row.insert(pivot, self.rows.len());
        self.rows.push(row);
        true
    }
}

/// Rank of the span of the given sparse vectors.
pub fn rank_of<F: Field>(field: &F, vectors: &[SparseVec<F::Elem>]) -> usize {
    let mut ech = Echelon::new(field);
    for v in vectors {
        ech.insert(v);
    }
    ech.rank()
}

/// Basis of `{ y : Σ_j y_j · columns[j] = 0 }`, as sparse vectors over column indices.
pub fn kernel_basis<F: Field>(field: &F, columns: &[SparseVec<F::Elem>]) -> Vec<SparseVec<F::Elem>> {
    // Reduced columns with pivot value 1, each paired with the combination of
    // original columns producing it.
    let mut basis: Vec<(SparseVec<F::Elem>, SparseVec<F::Elem>)> = Vec::new();
    let mut pivot_of: HashMap<usize, usize> = HashMap::new();
    let mut kernel = Vec::new();
    for (j, col) in columns.iter().enumerate() {
        let mut v = col.clone();
        let mut combo: SparseVec<F::Elem> = vec![(j, field.one())];
        // Eliminating the smallest pivot index first terminates: rows only
        // touch indices at or after their pivot.
        while let Some(pos) = v.iter().position(|(i, _)| pivot_of.contains_key(i)) {
            let scale = v[pos].1.clone();
            let (row, row_combo) = &basis[pivot_of[&v[pos].0]];
            v = sub_scaled(field, &v, &scale, row);
            combo = sub_scaled(field, &combo, &scale, row_combo);
        }
        match v.first().cloned() {
            None => kernel.push(combo),
            Some((pivot, lead)) => {
                let inv = field.inv(&lead);
                pivot_of.insert(pivot, basis.len());
                basis.push((scaled(field, &v, &inv), scaled(field, &combo, &inv)));
            }
        }
    }
    kernel
}

/// Rank of an integer matrix by fraction-free (Bareiss) elimination.
pub fn rank_bareiss(matrix: &[Vec<i64>]) -> usize {
    let mut a: Vec<Vec<BigInt>> = matrix
        .iter()
        .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
        .collect();
    let rows = a.len();
    if rows == 0 {
        return 0;
    }
    let cols = a[0].len();
    let mut prev = BigInt::one();
    let mut rank = 0;
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let Some(p) = (rank..rows).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        a.swap(rank, p);
        for r in rank + 1..rows {
            for c in col + 1..cols {
                let v = (&a[rank][col] * &a[r][c] - &a[r][col] * &a[rank][c]) / &prev;
                a[r][c] = v;
            }
            a[r][col] = BigInt::zero();
        }
        prev = a[rank][col].clone();
        rank += 1;
    }
    rank
}

/// Rank of an integer matrix over the field of characteristic `ch`.
pub fn integer_matrix_rank(matrix: &[Vec<i64>], ch: FieldChar) -> usize {
    if ch.is_zero() {
        return rank_bareiss(matrix);
    }
    let field = PrimeField::new(ch.value()).expect("validated characteristic");
    let cols = matrix.first().map_or(0, Vec::len);
    let columns: Vec<SparseVec<u64>> = (0..cols)
        .map(|c| {
            matrix
                .iter()
                .enumerate()
                .filter_map(|(r, row)| {
                    let v = field.from_i64(row[c]);
                    (v != 0).then_some((r, v))
                })
                .collect()
        })
        .collect();
    rank_of(&field, &columns)
}
