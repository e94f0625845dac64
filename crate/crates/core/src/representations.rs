//! Concrete weight-diagonal representations and Gelfand-Zetlin pattern
//! machinery.
//!
//! A [`WeightDiagonalRep`] packages one matrix per basis element E_ij of
//! gl(m|n) together with an integer weight vector per basis vector; the
//! Cartan generators must act diagonally with exactly those weights.
//! Weights are typed as integers, so half-integer-weight modules are
//! unrepresentable by construction and every Klein operator is an
//! involution.
//!
//! The smallest honest test beds are the defining representation (where
//! every Klein factor happens to act trivially on the occupied block)
//! and its graded tensor powers (where the signs are nontrivial).

use std::fmt;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::exact::{ExactMatrix, ExactScalar};
use crate::grading::{Degree2, GradedSignature};

/// A gl(m|n) representation with diagonal Cartan action and integer
/// weights.
///
/// Validity contract: a well-formed value also satisfies the gl(m|n)
/// relations ([`crate::superalgebra::verify_super_relations`] returns an
/// empty report). The bundled constructors guarantee this; the
/// [`WeightDiagonalRep::corrupted`] hook deliberately breaks it for
/// negative controls.
#[derive(Clone, Debug, PartialEq)]
pub struct WeightDiagonalRep {
    m: usize,
    n: usize,
    dim: usize,
    /// Row-major by (i, j): entry (i-1)*r + (j-1) is the matrix of E_ij.
    generators: Vec<ExactMatrix>,
    /// weights[v-1][t-1] is the eigenvalue of E_tt on basis vector v.
    weights: Vec<Vec<i64>>,
}

impl WeightDiagonalRep {
    pub fn new(
        m: usize,
        n: usize,
        generators: Vec<ExactMatrix>,
        weights: Vec<Vec<i64>>,
    ) -> Result<Self> {
        let r = m + n;
        if r == 0 {
            return Err(Error::InvalidRepresentation(
                "ambient gl(m|n) must have m+n >= 1".into(),
            ));
        }
        if generators.len() != r * r {
            return Err(Error::InvalidRepresentation(format!(
                "expected {} generator matrices, got {}",
                r * r,
                generators.len()
            )));
        }
        let dim = weights.len();
        if dim == 0 {
            return Err(Error::InvalidRepresentation("empty basis".into()));
        }
        if let Some(w) = weights.iter().find(|w| w.len() != r) {
            return Err(Error::InvalidRepresentation(format!(
                "weight vector length {} does not match rank {r}",
                w.len()
            )));
        }
        if let Some(g) = generators.iter().find(|g| g.rows() != dim || g.cols() != dim) {
            return Err(Error::InvalidRepresentation(format!(
                "generator matrix is {}x{}, expected {dim}x{dim}",
                g.rows(),
                g.cols()
            )));
        }
        let rep = WeightDiagonalRep {
            m,
            n,
            dim,
            generators,
            weights,
        };
        rep.check_cartan_diagonal()?;
        rep.check_weight_shifts()?;
        Ok(rep)
    }

    fn check_cartan_diagonal(&self) -> Result<()> {
        for t in 1..=self.rank() {
            let g = self.generator(t, t)?;
            if !g.is_diagonal() {
                return Err(Error::InvalidRepresentation(format!(
                    "E_{t}{t} is not diagonal"
                )));
            }
            for v in 1..=self.dim {
                if g.entry(v, v) != ExactScalar::from_int(self.weights[v - 1][t - 1]) {
                    return Err(Error::InvalidRepresentation(format!(
                        "E_{t}{t} eigenvalue on basis vector {v} disagrees with the weight table"
                    )));
                }
            }
        }
        Ok(())
    }

    /// Every generator must shift weights by the root: a nonzero entry
    /// of E_ij maps a vector of weight w to weight w + e_i - e_j.
    fn check_weight_shifts(&self) -> Result<()> {
        let r = self.rank();
        for i in 1..=r {
            for j in 1..=r {
                let g = self.generator(i, j)?;
                for (u, v, _) in g.iter() {
                    for t in 1..=r {
                        let shift = (t == i) as i64 - (t == j) as i64;
                        if self.weights[u - 1][t - 1] != self.weights[v - 1][t - 1] + shift {
                            return Err(Error::InvalidRepresentation(format!(
                                "E_{i}{j} entry ({u},{v}) violates the weight shift"
                            )));
                        }
                    }
                }
            }
        }
        Ok(())
    }

    /// Ambient superalgebra block sizes (m, n).
    pub fn ambient(&self) -> (usize, usize) {
        (self.m, self.n)
    }

    pub fn rank(&self) -> usize {
        self.m + self.n
    }

    pub fn dimension(&self) -> usize {
        self.dim
    }

    /// The signature (m,0|n,0); the colour-degenerate splitting used for
    /// plain gl(m|n) computations on this representation.
    pub fn ambient_signature(&self) -> GradedSignature {
        GradedSignature::new(self.m, 0, self.n, 0).expect("rank >= 1")
    }

    pub fn generator(&self, i: usize, j: usize) -> Result<&ExactMatrix> {
        let r = self.rank();
        let check = |what, index: usize| {
            if index == 0 || index > r {
                Err(Error::IndexOutOfRange {
                    what,
                    index,
                    bound: r,
                })
            } else {
                Ok(())
            }
        };
        check("row", i)?;
        check("column", j)?;
        Ok(&self.generators[(i - 1) * r + (j - 1)])
    }

    /// Weight vector of basis vector v (1-based).
    pub fn weight(&self, v: usize) -> Result<&[i64]> {
        if v == 0 || v > self.dim {
            return Err(Error::IndexOutOfRange {
                what: "basis vector",
                index: v,
                bound: self.dim,
            });
        }
        Ok(&self.weights[v - 1])
    }

    /// gl(m|n) parity of basis vector v: the parity of the total weight
    /// carried by the odd coordinates.
    pub fn basis_parity(&self, v: usize) -> Result<Degree2> {
        let w = self.weight(v)?;
        Ok(Degree2::from_parity(w[self.m..].iter().sum::<i64>()))
    }

    /// Parity of the basis element E_ij in the ambient gl(m|n).
    pub fn generator_parity(&self, i: usize, j: usize) -> Result<Degree2> {
        self.generator(i, j)?;
        let d = |t: usize| Degree2::from_parity((t > self.m) as i64);
        Ok(d(i) + d(j))
    }

    /// Negative-control hook: flips the sign of E_{1,r} (for r >= 2) and
    /// bumps one weight-table entry by 1. The result deliberately
    /// violates the representation contract so that every relation
    /// sweep has something to catch.
    pub fn corrupted(&self) -> Self {
        let mut broken = self.clone();
        let r = self.rank();
        if r >= 2 {
            let idx = r - 1; // (i,j) = (1,r)
            broken.generators[idx] = broken.generators[idx].neg();
        }
        broken.weights[0][0] += 1;
        broken
    }
}

/// The r-dimensional representation of gl(m|n) by the elementary
/// matrices themselves; basis vector k has the k-th unit weight.
pub fn defining_rep(sig: &GradedSignature) -> WeightDiagonalRep {
    let r = sig.rank();
    let mut generators = Vec::with_capacity(r * r);
    for i in 1..=r {
        for j in 1..=r {
            generators.push(ExactMatrix::elementary(r, i, j).expect("indices in range"));
        }
    }
    let weights = (1..=r)
        .map(|k| (1..=r).map(|t| (t == k) as i64).collect())
        .collect();
    WeightDiagonalRep::new(sig.m(), sig.n(), generators, weights)
        .expect("defining representation is well formed")
}

/// Graded tensor product of two representations of the same gl(m|n):
/// basis e_x (x) e_y ordered lexicographically, action
/// x(v (x) w) = (xv) (x) w + (-1)^{d(x) d(v)} v (x) (xw), weights adding
/// componentwise.
pub fn graded_tensor_product(
    a: &WeightDiagonalRep,
    b: &WeightDiagonalRep,
) -> Result<WeightDiagonalRep> {
    if a.ambient() != b.ambient() {
        return Err(Error::InvalidRepresentation(format!(
            "ambient mismatch: gl({}|{}) vs gl({}|{})",
            a.m, a.n, b.m, b.n
        )));
    }
    let r = a.rank();
    let (ad, bd) = (a.dim, b.dim);
    let dim = ad * bd;
    let fuse = |x: usize, y: usize| (x - 1) * bd + y;

    let mut generators = Vec::with_capacity(r * r);
    for i in 1..=r {
        for j in 1..=r {
            let d_ij = a.generator_parity(i, j)?;
            let mut g = ExactMatrix::zero(dim, dim);
            for (u, v, c) in a.generator(i, j)?.iter() {
                for y in 1..=bd {
                    g.insert_add(fuse(u, y), fuse(v, y), c.clone());
                }
            }
            for x in 1..=ad {
                let sign = d_ij * a.basis_parity(x)?;
                for (u, v, c) in b.generator(i, j)?.iter() {
                    g.insert_add(fuse(x, u), fuse(x, v), c.clone().with_sign(sign));
                }
            }
            generators.push(g);
        }
    }

    let mut weights = Vec::with_capacity(dim);
    for x in 1..=ad {
        for y in 1..=bd {
            let wx = a.weight(x)?;
            let wy = b.weight(y)?;
            weights.push((0..r).map(|t| wx[t] + wy[t]).collect());
        }
    }
    WeightDiagonalRep::new(a.m, a.n, generators, weights)
}

pub fn graded_tensor_square(rep: &WeightDiagonalRep) -> Result<WeightDiagonalRep> {
    graded_tensor_product(rep, rep)
}

/// k-th graded tensor power by left-to-right iteration; k >= 1.
pub fn graded_tensor_power(rep: &WeightDiagonalRep, k: usize) -> Result<WeightDiagonalRep> {
    if k == 0 {
        return Err(Error::InvalidRepresentation(
            "tensor power requires k >= 1".into(),
        ));
    }
    let mut out = rep.clone();
    for _ in 1..k {
        out = graded_tensor_product(&out, rep)?;
    }
    Ok(out)
}

/// Triangular Gelfand-Zetlin pattern: rows of lengths r, r-1, ..., 1
/// listed top-down, with non-negative integer entries. Only shape and
/// non-negativity are validated here; admissibility conditions are the
/// responsibility of whoever supplies the patterns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GZPattern {
    sig: GradedSignature,
    rows: Vec<Vec<i64>>,
}

impl GZPattern {
    pub fn new(sig: GradedSignature, rows: Vec<Vec<i64>>) -> Result<Self> {
        let r = sig.rank();
        if rows.len() != r {
            return Err(Error::InvalidPattern(format!(
                "expected {r} rows, got {}",
                rows.len()
            )));
        }
        for (pos, row) in rows.iter().enumerate() {
            let expected = r - pos;
            if row.len() != expected {
                return Err(Error::InvalidPattern(format!(
                    "row {} of length {} should have length {expected}",
                    pos + 1,
                    row.len()
                )));
            }
            if row.iter().any(|&e| e < 0) {
                return Err(Error::InvalidPattern("negative entry".into()));
            }
        }
        Ok(GZPattern { sig, rows })
    }

    /// The 0/1 pattern labelling basis vector k of the defining module:
    /// row i sums to 1 exactly when i >= k, with the single 1 leading.
    pub fn defining_basis_pattern(sig: GradedSignature, k: usize) -> Result<Self> {
        sig.check_index("basis vector", k)?;
        let r = sig.rank();
        let rows = (1..=r)
            .rev()
            .map(|len| (0..len).map(|p| (p == 0 && len >= k) as i64).collect())
            .collect();
        GZPattern::new(sig, rows)
    }

    pub fn signature(&self) -> &GradedSignature {
        &self.sig
    }

    pub fn rank(&self) -> usize {
        self.sig.rank()
    }

    /// Rows top-down, as printed: first the length-r row.
    pub fn rows(&self) -> &[Vec<i64>] {
        &self.rows
    }

    pub fn top_row(&self) -> &[i64] {
        &self.rows[0]
    }

    /// Row sum |mu_i| for 0 <= i <= r, with |mu_0| = 0.
    pub fn row_sum(&self, i: usize) -> Result<i64> {
        if i == 0 {
            return Ok(0);
        }
        let r = self.rank();
        if i > r {
            return Err(Error::IndexOutOfRange {
                what: "pattern row",
                index: i,
                bound: r,
            });
        }
        Ok(self.rows[r - i].iter().sum())
    }

    /// The sequence |mu_1|, ..., |mu_r|.
    pub fn row_sums(&self) -> Vec<i64> {
        (1..=self.rank())
            .map(|i| self.row_sum(i).expect("in range"))
            .collect()
    }

    /// Eigenvalue of E_ii on this basis vector: |mu_i| - |mu_{i-1}|.
    pub fn cartan_eigenvalue(&self, i: usize) -> Result<i64> {
        self.sig.check_index("Cartan generator", i)?;
        Ok(self.row_sum(i)? - self.row_sum(i - 1)?)
    }

    /// Eigenvalue of the Klein operator B_k: (-1)^{|mu_k|}. B_0 acts as
    /// the identity.
    pub fn b_sign(&self, k: usize) -> Result<i64> {
        Ok(if self.row_sum(k)? % 2 == 0 { 1 } else { -1 })
    }

    /// Diagonal action of the lifted Cartan generators, identical to
    /// [`GZPattern::cartan_eigenvalue`].
    pub fn colour_diagonal_action(&self, i: usize) -> Result<i64> {
        self.cartan_eigenvalue(i)
    }

    /// The full weight vector (all Cartan eigenvalues).
    pub fn weight(&self) -> Vec<i64> {
        (1..=self.rank())
            .map(|i| self.cartan_eigenvalue(i).expect("in range"))
            .collect()
    }
}

#[derive(Serialize, Deserialize)]
struct PatternJson {
    sig: String,
    rows: Vec<Vec<i64>>,
}

impl Serialize for GZPattern {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        PatternJson {
            sig: self.sig.to_string(),
            rows: self.rows.clone(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for GZPattern {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let raw = PatternJson::deserialize(deserializer)?;
        let sig: GradedSignature = raw.sig.parse().map_err(D::Error::custom)?;
        GZPattern::new(sig, raw.rows).map_err(D::Error::custom)
    }
}

/// A simple raising generator E_{i,i+1} or lowering generator
/// E_{i+1,i}, identified by the boundary index i.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ChevalleyGenerator {
    Raising(usize),
    Lowering(usize),
}

impl ChevalleyGenerator {
    pub fn from_pair(i: usize, j: usize) -> Result<Self> {
        if j == i + 1 {
            Ok(ChevalleyGenerator::Raising(i))
        } else if i == j + 1 {
            Ok(ChevalleyGenerator::Lowering(j))
        } else {
            Err(Error::NonChevalleyGenerator { i, j })
        }
    }

    /// The (row, column) index pair of the generator.
    pub fn pair(self) -> (usize, usize) {
        match self {
            ChevalleyGenerator::Raising(i) => (i, i + 1),
            ChevalleyGenerator::Lowering(i) => (i + 1, i),
        }
    }

    /// The index i with 1 <= i < r shared by E_{i,i+1} and E_{i+1,i}.
    pub fn boundary_index(self) -> usize {
        match self {
            ChevalleyGenerator::Raising(i) | ChevalleyGenerator::Lowering(i) => i,
        }
    }

    pub fn is_raising(self) -> bool {
        matches!(self, ChevalleyGenerator::Raising(_))
    }
}

impl fmt::Display for ChevalleyGenerator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (i, j) = self.pair();
        write!(f, "E_{i},{j}")
    }
}

/// Applies the colour sign rule to one Chevalley matrix element: the
/// value is unchanged unless the boundary index equals m (factor
/// (-1)^{|mu_{m1}|}) or m+n1 (factor (-1)^{|mu_m|}); when both coincide
/// (n1 = 0) both factors apply. `mu` must be the pattern the Klein
/// factor acts on: the ket for raising generators, the bra for lowering
/// ones. The two agree on the relevant row sums whenever m2 > 0 and
/// n1 > 0, since then the boundary generators do not touch rows m1 or m.
pub fn sign_lift_matrix_element(
    sig: &GradedSignature,
    generator: ChevalleyGenerator,
    raw: ExactScalar,
    mu: &GZPattern,
) -> Result<ExactScalar> {
    let r = sig.rank();
    let i = generator.boundary_index();
    if i == 0 || i + 1 > r {
        let (gi, gj) = generator.pair();
        return Err(Error::NonChevalleyGenerator { i: gi, j: gj });
    }
    if mu.rank() != r {
        return Err(Error::InvalidPattern(format!(
            "pattern rank {} does not match signature rank {r}",
            mu.rank()
        )));
    }
    let mut exponent = 0i64;
    if i == sig.m() {
        exponent += mu.row_sum(sig.m1())?;
    }
    if i == sig.m() + sig.n1() {
        exponent += mu.row_sum(sig.m())?;
    }
    Ok(raw.with_sign(Degree2::from_parity(exponent)))
}

/// Source of Chevalley matrix elements (mu'|E|mu) between pattern-
/// labelled basis vectors, together with the diagonal data implied by
/// the row sums of the patterns themselves.
pub trait MatrixElementProvider {
    /// Ambient gl(m|n) block sizes.
    fn ambient(&self) -> (usize, usize);

    fn dimension(&self) -> usize;

    /// Pattern labelling basis vector v (1-based).
    fn pattern(&self, v: usize) -> Result<&GZPattern>;

    /// (bra| E |ket) for the given Chevalley generator.
    fn chevalley_element(
        &self,
        generator: ChevalleyGenerator,
        bra: usize,
        ket: usize,
    ) -> Result<ExactScalar>;
}

/// The bundled provider for the defining module: basis vector k is
/// labelled by [`GZPattern::defining_basis_pattern`] and the Chevalley
/// matrix elements are those of the elementary matrices.
pub struct DefiningPatternProvider {
    sig: GradedSignature,
    patterns: Vec<GZPattern>,
}

impl DefiningPatternProvider {
    pub fn new(sig: GradedSignature) -> Result<Self> {
        let patterns = (1..=sig.rank())
            .map(|k| GZPattern::defining_basis_pattern(sig, k))
            .collect::<Result<Vec<_>>>()?;
        Ok(DefiningPatternProvider { sig, patterns })
    }
}

impl MatrixElementProvider for DefiningPatternProvider {
    fn ambient(&self) -> (usize, usize) {
        (self.sig.m(), self.sig.n())
    }

    fn dimension(&self) -> usize {
        self.sig.rank()
    }

    fn pattern(&self, v: usize) -> Result<&GZPattern> {
        self.sig.check_index("basis vector", v)?;
        Ok(&self.patterns[v - 1])
    }

    fn chevalley_element(
        &self,
        generator: ChevalleyGenerator,
        bra: usize,
        ket: usize,
    ) -> Result<ExactScalar> {
        self.sig.check_index("bra", bra)?;
        self.sig.check_index("ket", ket)?;
        let (p, q) = generator.pair();
        Ok(if bra == p && ket == q {
            ExactScalar::one()
        } else {
            ExactScalar::zero()
        })
    }
}

/// Assembles the full matrix of a lifted Chevalley generator from a
/// provider by routing every raw matrix element through
/// [`sign_lift_matrix_element`] with the Klein-side pattern.
pub fn sign_lifted_chevalley_matrix(
    provider: &dyn MatrixElementProvider,
    sig: &GradedSignature,
    generator: ChevalleyGenerator,
) -> Result<ExactMatrix> {
    let (m, n) = provider.ambient();
    if sig.m() != m || sig.n() != n {
        return Err(Error::SignatureMismatch {
            sig: sig.to_string(),
            m,
            n,
        });
    }
    let dim = provider.dimension();
    let mut out = ExactMatrix::zero(dim, dim);
    for bra in 1..=dim {
        for ket in 1..=dim {
            let raw = provider.chevalley_element(generator, bra, ket)?;
            if raw.is_zero() {
                continue;
            }
            let side = if generator.is_raising() { ket } else { bra };
            let lifted = sign_lift_matrix_element(sig, generator, raw, provider.pattern(side)?)?;
            out.insert_add(bra, ket, lifted);
        }
    }
    Ok(out)
}
