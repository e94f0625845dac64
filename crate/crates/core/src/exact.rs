//! Exact sparse linear algebra over arbitrary-precision rationals.
//!
//! Every representation operator in this crate is an [`ExactMatrix`].
//! There is no floating point and no tolerance anywhere: equality is
//! structural equality of canonical forms (reduced scalars, no stored
//! zero entries).

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num::{BigInt, BigRational, One, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::grading::Degree2;

/// An arbitrary-precision rational in reduced form with positive
/// denominator. The text form is always "num/den" (e.g. "-3/2", "0/1").
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ExactScalar(BigRational);

impl ExactScalar {
    pub fn zero() -> Self {
        ExactScalar(BigRational::zero())
    }

    pub fn one() -> Self {
        ExactScalar(BigRational::one())
    }

    pub fn from_int(value: i64) -> Self {
        ExactScalar(BigRational::from_integer(BigInt::from(value)))
    }

    pub fn new(numer: i64, denom: i64) -> Result<Self> {
        if denom == 0 {
            return Err(Error::InvalidScalar("zero denominator".into()));
        }
        Ok(ExactScalar(BigRational::new(
            BigInt::from(numer),
            BigInt::from(denom),
        )))
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    /// Multiplies by (-1)^degree.
    pub fn with_sign(self, degree: Degree2) -> Self {
        if degree.is_odd() {
            -self
        } else {
            self
        }
    }
}

impl From<i64> for ExactScalar {
    fn from(value: i64) -> Self {
        ExactScalar::from_int(value)
    }
}

impl fmt::Display for ExactScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.0.numer(), self.0.denom())
    }
}

impl FromStr for ExactScalar {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidScalar(format!("expected \"num/den\" or \"num\", got {s:?}"));
        let parse_int = |t: &str| BigInt::from_str(t.trim()).map_err(|_| bad());
        match s.split_once('/') {
            None => Ok(ExactScalar(BigRational::from_integer(parse_int(s)?))),
            Some((n, d)) => {
                let denom = parse_int(d)?;
                if denom.is_zero() {
                    return Err(Error::InvalidScalar("zero denominator".into()));
                }
                Ok(ExactScalar(BigRational::new(parse_int(n)?, denom)))
            }
        }
    }
}

macro_rules! scalar_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for ExactScalar {
            type Output = ExactScalar;
            fn $method(self, rhs: ExactScalar) -> ExactScalar {
                ExactScalar(self.0.$method(rhs.0))
            }
        }

        impl<'a, 'b> $trait<&'b ExactScalar> for &'a ExactScalar {
            type Output = ExactScalar;
            fn $method(self, rhs: &'b ExactScalar) -> ExactScalar {
                ExactScalar((&self.0).$method(&rhs.0))
            }
        }
    };
}

scalar_binop!(Add, add);
scalar_binop!(Sub, sub);
scalar_binop!(Mul, mul);

impl Neg for ExactScalar {
    type Output = ExactScalar;
    fn neg(self) -> ExactScalar {
        ExactScalar(-self.0)
    }
}

impl Neg for &ExactScalar {
    type Output = ExactScalar;
    fn neg(self) -> ExactScalar {
        ExactScalar(-&self.0)
    }
}

impl Serialize for ExactScalar {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for ExactScalar {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let text = String::deserialize(deserializer)?;
        text.parse().map_err(D::Error::custom)
    }
}

/// A sparse matrix over [`ExactScalar`] keyed by 1-based (row, column).
/// Zero entries are never stored; two matrices are equal exactly when
/// their dimensions and entry maps coincide.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactMatrix {
    rows: usize,
    cols: usize,
    entries: BTreeMap<(usize, usize), ExactScalar>,
}

impl ExactMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        ExactMatrix {
            rows,
            cols,
            entries: BTreeMap::new(),
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = ExactMatrix::zero(n, n);
        for i in 1..=n {
            m.entries.insert((i, i), ExactScalar::one());
        }
        m
    }

    /// The elementary matrix with a single 1 in row i, column j.
    pub fn elementary(n: usize, i: usize, j: usize) -> Result<Self> {
        let check = |what, index: usize| {
            if index == 0 || index > n {
                Err(Error::IndexOutOfRange {
                    what,
                    index,
                    bound: n,
                })
            } else {
                Ok(())
            }
        };
        check("row", i)?;
        check("column", j)?;
        let mut m = ExactMatrix::zero(n, n);
        m.entries.insert((i, j), ExactScalar::one());
        Ok(m)
    }

    pub fn diagonal_from(values: &[ExactScalar]) -> Self {
        let n = values.len();
        let mut m = ExactMatrix::zero(n, n);
        for (k, v) in values.iter().enumerate() {
            if !v.is_zero() {
                m.entries.insert((k + 1, k + 1), v.clone());
            }
        }
        m
    }

    /// Diagonal matrix of integer signs, used for Klein operators.
    pub fn diagonal_signs(signs: &[i64]) -> Self {
        let values: Vec<ExactScalar> = signs.iter().map(|s| ExactScalar::from_int(*s)).collect();
        ExactMatrix::diagonal_from(&values)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, i: usize, j: usize) -> Option<&ExactScalar> {
        self.entries.get(&(i, j))
    }

    /// Entry value with zero fill.
    pub fn entry(&self, i: usize, j: usize) -> ExactScalar {
        self.get(i, j).cloned().unwrap_or_else(ExactScalar::zero)
    }

    /// Iterates stored (necessarily nonzero) entries in row-major order.
    pub fn iter(&self) -> impl Iterator<Item = (usize, usize, &ExactScalar)> {
        self.entries.iter().map(|(&(i, j), v)| (i, j, v))
    }

    /// Adds into an entry, dropping it when the sum cancels to zero.
    pub(crate) fn insert_add(&mut self, i: usize, j: usize, value: ExactScalar) {
        if value.is_zero() {
            return;
        }
        match self.entries.entry((i, j)) {
            std::collections::btree_map::Entry::Vacant(slot) => {
                slot.insert(value);
            }
            std::collections::btree_map::Entry::Occupied(mut slot) => {
                let sum = &*slot.get() + &value;
                if sum.is_zero() {
                    slot.remove();
                } else {
                    *slot.get_mut() = sum;
                }
            }
        }
    }

    fn check_same_shape(&self, other: &Self, op: &'static str) -> Result<()> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::DimensionMismatch {
                op,
                lhs_rows: self.rows,
                lhs_cols: self.cols,
                rhs_rows: other.rows,
                rhs_cols: other.cols,
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_same_shape(other, "add")?;
        let mut out = self.clone();
        for (i, j, v) in other.iter() {
            out.insert_add(i, j, v.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_same_shape(other, "sub")?;
        let mut out = self.clone();
        for (i, j, v) in other.iter() {
            out.insert_add(i, j, -v);
        }
        Ok(out)
    }

    pub fn scale(&self, factor: &ExactScalar) -> Self {
        if factor.is_zero() {
            return ExactMatrix::zero(self.rows, self.cols);
        }
        let mut out = ExactMatrix::zero(self.rows, self.cols);
        for (i, j, v) in self.iter() {
            out.entries.insert((i, j), factor * v);
        }
        out
    }

    pub fn neg(&self) -> Self {
        let mut out = ExactMatrix::zero(self.rows, self.cols);
        for (i, j, v) in self.iter() {
            out.entries.insert((i, j), -v);
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch {
                op: "mul",
                lhs_rows: self.rows,
                lhs_cols: self.cols,
                rhs_rows: other.rows,
                rhs_cols: other.cols,
            });
        }
        // Group the right factor by row so each left entry only visits
        // compatible entries.
        let mut rhs_rows: BTreeMap<usize, Vec<(usize, &ExactScalar)>> = BTreeMap::new();
        for (k, j, v) in other.iter() {
            rhs_rows.entry(k).or_default().push((j, v));
        }
        let mut out = ExactMatrix::zero(self.rows, other.cols);
        for (i, k, a) in self.iter() {
            if let Some(row) = rhs_rows.get(&k) {
                for (j, b) in row {
                    out.insert_add(i, *j, a * b);
                }
            }
        }
        Ok(out)
    }

    /// ab - (-1)^sign ba: the commutator for sign 0, the anticommutator
    /// for sign 1.
    pub fn graded_bracket(&self, other: &Self, sign: Degree2) -> Result<Self> {
        if self.rows != self.cols || other.rows != other.cols {
            return Err(Error::InvalidMatrix(
                "graded_bracket requires square matrices".into(),
            ));
        }
        self.check_same_shape(other, "graded_bracket")?;
        let ab = self.mul(other)?;
        let ba = other.mul(self)?;
        if sign.is_odd() {
            ab.add(&ba)
        } else {
            ab.sub(&ba)
        }
    }

    /// If column k has support only at row k (a zero column counts,
    /// with eigenvalue 0), returns the diagonal entry; otherwise the
    /// column is not an eigencolumn.
    pub fn eigenvalue_on_basis_vector(&self, k: usize) -> Result<ExactScalar> {
        if k == 0 || k > self.cols {
            return Err(Error::IndexOutOfRange {
                what: "column",
                index: k,
                bound: self.cols,
            });
        }
        for (i, j, _) in self.iter() {
            if j == k && i != k {
                return Err(Error::NotEigencolumn { col: k });
            }
        }
        Ok(self.entry(k, k))
    }

    /// Returns Some(c) when the matrix equals c times the identity.
    pub fn scalar_multiple_of_identity(&self) -> Option<ExactScalar> {
        if self.rows != self.cols || self.rows == 0 {
            return None;
        }
        if self.entries.keys().any(|&(i, j)| i != j) {
            return None;
        }
        let first = self.entry(1, 1);
        for k in 2..=self.rows {
            if self.entry(k, k) != first {
                return None;
            }
        }
        Some(first)
    }

    /// True when every diagonal entry position off the diagonal is empty.
    pub fn is_diagonal(&self) -> bool {
        self.entries.keys().all(|&(i, j)| i == j)
    }
}

#[derive(Serialize, Deserialize)]
struct MatrixJson {
    rows: usize,
    cols: usize,
    entries: Vec<(usize, usize, ExactScalar)>,
}

impl Serialize for ExactMatrix {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        MatrixJson {
            rows: self.rows,
            cols: self.cols,
            entries: self
                .iter()
                .map(|(i, j, v)| (i, j, v.clone()))
                .collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for ExactMatrix {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let raw = MatrixJson::deserialize(deserializer)?;
        let mut out = ExactMatrix::zero(raw.rows, raw.cols);
        for (i, j, v) in raw.entries {
            if i == 0 || i > raw.rows || j == 0 || j > raw.cols {
                return Err(D::Error::custom(format!("entry ({i},{j}) out of range")));
            }
            if v.is_zero() {
                return Err(D::Error::custom(format!(
                    "stored zero entry at ({i},{j}) violates canonical form"
                )));
            }
            if out.entries.insert((i, j), v).is_some() {
                return Err(D::Error::custom(format!("duplicate entry at ({i},{j})")));
            }
        }
        Ok(out)
    }
}
