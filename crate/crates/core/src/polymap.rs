//! Polynomial maps `K^d -> K^d` and square matrices of polynomials:
//! symbolic Jacobians, matrix powers, determinants, and the nilpotency
//! index used throughout the inversion theory.

use std::fmt;

use num_traits::One;

use crate::error::Error;
use crate::poly::{Degree, Polynomial};
use crate::rational::Rational;

/// Dimension bound for the cofactor determinant; expansion is exponential.
pub const DETERMINANT_DIM_BOUND: usize = 8;

/// A polynomial map `F = (F_1, ..., F_d)` with every component living in
/// the same `d` variables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyMap {
    components: Vec<Polynomial>,
}

impl PolyMap {
    pub fn new(components: Vec<Polynomial>) -> Result<Self, Error> {
        let dim = components.len();
        for c in &components {
            if c.dimension() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    found: c.dimension(),
                });
            }
        }
        Ok(PolyMap { components })
    }

    pub fn identity(dim: usize) -> Self {
        PolyMap {
            components: (0..dim).map(|k| Polynomial::var(dim, k)).collect(),
        }
    }

    pub fn zero(dim: usize) -> Self {
        PolyMap {
            components: vec![Polynomial::zero(dim); dim],
        }
    }

    pub fn dimension(&self) -> usize {
        self.components.len()
    }

    pub fn component(&self, i: usize) -> &Polynomial {
        &self.components[i]
    }

    pub fn components(&self) -> &[Polynomial] {
        &self.components
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().all(Polynomial::is_zero)
    }

    /// `max deg F_i`.
    pub fn degree(&self) -> Degree {
        self.components
            .iter()
            .map(Polynomial::degree)
            .max()
            .unwrap_or(Degree::NegInfinity)
    }

    /// Componentwise sum.
    pub fn add(&self, other: &PolyMap) -> PolyMap {
        assert_eq!(self.dimension(), other.dimension(), "map dimension mismatch");
        PolyMap {
            components: self
                .components
                .iter()
                .zip(&other.components)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    /// Componentwise difference.
    pub fn sub(&self, other: &PolyMap) -> PolyMap {
        assert_eq!(self.dimension(), other.dimension(), "map dimension mismatch");
        PolyMap {
            components: self
                .components
                .iter()
                .zip(&other.components)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    /// The cubic (or general) part `H = F - Id`.
    pub fn minus_identity(&self) -> PolyMap {
        self.sub(&PolyMap::identity(self.dimension()))
    }

    /// Jacobian matrix `(dF_i/dX_j)`.
    pub fn jacobian(&self) -> PolyMatrix {
        let d = self.dimension();
        PolyMatrix {
            entries: self
                .components
                .iter()
                .map(|f| (0..d).map(|j| f.partial_derivative(j)).collect())
                .collect(),
        }
    }

    /// True when `F = Id + H` with every nonzero `H_i` homogeneous of one
    /// common degree `>= 2`. This is the shape for which `det JF = 1` is
    /// equivalent to `(JH)^d = 0`.
    pub fn is_identity_plus_homogeneous(&self) -> bool {
        let h = self.minus_identity();
        let mut common: Option<u32> = None;
        for hi in &h.components {
            match hi.degree().as_finite() {
                None => continue,
                Some(deg) => {
                    if !hi.is_homogeneous() || deg < 2 {
                        return false;
                    }
                    match common {
                        None => common = Some(deg),
                        Some(c) if c == deg => {}
                        Some(_) => return false,
                    }
                }
            }
        }
        true
    }
}

impl fmt::Display for PolyMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.components.iter().enumerate() {
            writeln!(f, "F{} = {}", i + 1, c)?;
        }
        Ok(())
    }
}

/// Outcome of the nilpotency-index search on a polynomial matrix.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NilpotencyIndex {
    /// Smallest `g` with `M^g = 0`.
    Index(usize),
    /// No power up to the cap vanished.
    NotNilpotent,
}

impl fmt::Display for NilpotencyIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NilpotencyIndex::Index(g) => write!(f, "{g}"),
            NilpotencyIndex::NotNilpotent => write!(f, "NOT_NILPOTENT"),
        }
    }
}

/// Square matrix of polynomials, all sharing the ambient dimension.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyMatrix {
    entries: Vec<Vec<Polynomial>>,
}

impl PolyMatrix {
    pub fn new(entries: Vec<Vec<Polynomial>>) -> Result<Self, Error> {
        let d = entries.len();
        for (i, row) in entries.iter().enumerate() {
            if row.len() != d {
                return Err(Error::NonSquareMatrix {
                    rows: d,
                    row: i + 1,
                    cols: row.len(),
                });
            }
            for e in row {
                if e.dimension() != d {
                    return Err(Error::DimensionMismatch {
                        expected: d,
                        found: e.dimension(),
                    });
                }
            }
        }
        Ok(PolyMatrix { entries })
    }

    pub fn identity(dim: usize) -> Self {
        PolyMatrix {
            entries: (0..dim)
                .map(|i| {
                    (0..dim)
                        .map(|j| {
                            if i == j {
                                Polynomial::one(dim)
                            } else {
                                Polynomial::zero(dim)
                            }
                        })
                        .collect()
                })
                .collect(),
        }
    }

    pub fn dimension(&self) -> usize {
        self.entries.len()
    }

    pub fn entry(&self, i: usize, j: usize) -> &Polynomial {
        &self.entries[i][j]
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().flatten().all(Polynomial::is_zero)
    }

    /// Exact polynomial matrix product.
    pub fn matrix_mul(&self, other: &PolyMatrix) -> PolyMatrix {
        let d = self.dimension();
        assert_eq!(d, other.dimension(), "matrix dimension mismatch");
        let entries = (0..d)
            .map(|i| {
                (0..d)
                    .map(|j| {
                        let mut acc = Polynomial::zero(d);
                        for k in 0..d {
                            let a = &self.entries[i][k];
                            let b = &other.entries[k][j];
                            if a.is_zero() || b.is_zero() {
                                continue;
                            }
                            acc = &acc + &(a * b);
                        }
                        acc
                    })
                    .collect()
            })
            .collect();
        PolyMatrix { entries }
    }

    /// Matrix-vector product `(M v)_i = sum_j M_ij v_j` with a map as the
    /// vector.
    pub fn mul_map(&self, v: &PolyMap) -> PolyMap {
        let d = self.dimension();
        assert_eq!(d, v.dimension(), "matrix/map dimension mismatch");
        let components = (0..d)
            .map(|i| {
                let mut acc = Polynomial::zero(d);
                for j in 0..d {
                    let m = &self.entries[i][j];
                    let vj = v.component(j);
                    if m.is_zero() || vj.is_zero() {
                        continue;
                    }
                    acc = &acc + &(m * vj);
                }
                acc
            })
            .collect();
        PolyMap { components }
    }

    /// Smallest `g <= cap` with `M^g = 0`, computed by iterated
    /// multiplication (every intermediate power is needed anyway).
    ///
    /// A sensible cap is the dimension `d`: a nilpotent `d x d` matrix
    /// over the polynomial ring already satisfies `M^d = 0`, so searching
    /// further cannot change the answer.
    pub fn nilpotency_index(&self, cap: usize) -> NilpotencyIndex {
        assert!(cap >= 1, "nilpotency cap must be at least 1");
        let mut power = self.clone();
        for g in 1..=cap {
            if power.is_zero() {
                return NilpotencyIndex::Index(g);
            }
            if g < cap {
                power = power.matrix_mul(self);
            }
        }
        NilpotencyIndex::NotNilpotent
    }

    /// Exact symbolic determinant by cofactor expansion along rows, with
    /// memoization on column subsets. Exponential in `d`; rejected above
    /// [`DETERMINANT_DIM_BOUND`].
    pub fn determinant(&self) -> Result<Polynomial, Error> {
        let d = self.dimension();
        if d > DETERMINANT_DIM_BOUND {
            return Err(Error::DeterminantBound {
                dimension: d,
                bound: DETERMINANT_DIM_BOUND,
            });
        }
        if d == 0 {
            return Ok(Polynomial::constant(0, Rational::one()));
        }
        let full: u32 = (1u32 << d) - 1;
        let mut memo: Vec<Option<Polynomial>> = vec![None; 1 << d];
        Ok(self.det_minor(full, &mut memo))
    }

    /// Determinant of the minor over the rows `d - popcount(cols) .. d`
    /// and the column subset `cols`, expanding along the first row.
    fn det_minor(&self, cols: u32, memo: &mut Vec<Option<Polynomial>>) -> Polynomial {
        let d = self.dimension();
        if cols == 0 {
            return Polynomial::one(d);
        }
        if let Some(p) = &memo[cols as usize] {
            return p.clone();
        }
        let row = d - cols.count_ones() as usize;
        let mut acc = Polynomial::zero(d);
        let mut sign_positive = true;
        for j in 0..d {
            if cols & (1 << j) == 0 {
                continue;
            }
            let e = &self.entries[row][j];
            if !e.is_zero() {
                let sub = self.det_minor(cols & !(1 << j), memo);
                let contrib = e * &sub;
                acc = if sign_positive { &acc + &contrib } else { &acc - &contrib };
            }
            sign_positive = !sign_positive;
        }
        memo[cols as usize] = Some(acc.clone());
        acc
    }
}

/// Keller test for maps `F = Id + H` with `H` homogeneous of degree at
/// least two: `det JF = 1` exactly when `(JH)^d = 0`, so the check runs on
/// the nilpotency side where no determinant bound applies.
pub fn is_keller(f: &PolyMap) -> Result<bool, Error> {
    if !f.is_identity_plus_homogeneous() {
        return Err(Error::BadMapForm(
            "expected Id + H with H homogeneous of degree >= 2".to_string(),
        ));
    }
    let d = f.dimension();
    let jh = f.minus_identity().jacobian();
    Ok(matches!(jh.nilpotency_index(d.max(1)), NilpotencyIndex::Index(_)))
}
