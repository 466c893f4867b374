//! Cubic-linear maps `F = Id + H` with `H_i = L_i^3` for linear forms
//! `L_i = a_i1 X_1 + ... + a_id X_d`, built from their coefficient matrix
//! `A = (a_ij)`, plus seeded generators for families with controlled
//! Jacobian nilpotency.
//!
//! # Matrix file format
//!
//! A map is persisted as its coefficient matrix:
//!
//! ```text
//! dim 3
//! entries
//! 0 1/2 -1
//! 0 0 2
//! 0 0 0
//! ```
//!
//! Entries are rationals (`p`, `-p`, or `p/q`) separated by single spaces,
//! one row per line. Writing always emits reduced fractions, so
//! write -> parse -> write is byte-identical.

use std::path::Path;

use num_traits::{ToPrimitive, Zero};

use crate::error::Error;
use crate::poly::Polynomial;
use crate::polymap::PolyMap;
use crate::rational::{frac, rat, Rational};
use crate::rng::SplitMix64;

/// A map determined by its coefficient matrix, with the linear forms,
/// cubic part `H`, and full map `F = Id + H` expanded once at
/// construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DruzkowskiMap {
    matrix: Vec<Vec<Rational>>,
    linear_forms: Vec<Polynomial>,
    cubic: PolyMap,
    map: PolyMap,
}

impl DruzkowskiMap {
    /// Builds the map from a square coefficient matrix.
    pub fn from_matrix(matrix: Vec<Vec<Rational>>) -> Result<Self, Error> {
        let d = matrix.len();
        for (i, row) in matrix.iter().enumerate() {
            if row.len() != d {
                return Err(Error::NonSquareMatrix {
                    rows: d,
                    row: i + 1,
                    cols: row.len(),
                });
            }
        }
        let linear_forms: Vec<Polynomial> =
            matrix.iter().map(|row| Polynomial::linear_form(row)).collect();
        let cubic = PolyMap::new(linear_forms.iter().map(|l| l.pow(3)).collect())
            .expect("components share the matrix dimension");
        let map = PolyMap::identity(d).add(&cubic);
        Ok(DruzkowskiMap {
            matrix,
            linear_forms,
            cubic,
            map,
        })
    }

    pub fn dimension(&self) -> usize {
        self.matrix.len()
    }

    /// The coefficient matrix `A`.
    pub fn matrix(&self) -> &[Vec<Rational>] {
        &self.matrix
    }

    pub fn coefficient(&self, i: usize, j: usize) -> &Rational {
        &self.matrix[i][j]
    }

    /// The linear form `L_i` (0-based index).
    pub fn linear_form(&self, i: usize) -> &Polynomial {
        &self.linear_forms[i]
    }

    pub fn linear_forms(&self) -> &[Polynomial] {
        &self.linear_forms
    }

    /// `H = (L_1^3, ..., L_d^3)`.
    pub fn cubic_part(&self) -> &PolyMap {
        &self.cubic
    }

    /// `F = Id + H`.
    pub fn map(&self) -> &PolyMap {
        &self.map
    }

    pub fn to_matrix_text(&self) -> String {
        let mut out = format!("dim {}\nentries\n", self.dimension());
        for row in &self.matrix {
            let fields: Vec<String> = row.iter().map(Rational::to_string).collect();
            out.push_str(&fields.join(" "));
            out.push('\n');
        }
        out
    }

    pub fn write_matrix_file(&self, path: impl AsRef<Path>) -> Result<(), Error> {
        let path = path.as_ref();
        std::fs::write(path, self.to_matrix_text())
            .map_err(|e| Error::io(path.display().to_string(), e))
    }

    pub fn parse_matrix_text(text: &str) -> Result<Self, Error> {
        let mut lines = text.lines().enumerate();
        let (_, header) = lines.next().ok_or_else(|| Error::Parse {
            line: 1,
            field: None,
            message: "empty file, expected `dim <n>`".to_string(),
        })?;
        let dim: usize = header
            .strip_prefix("dim ")
            .and_then(|n| n.trim().parse().ok())
            .ok_or_else(|| Error::Parse {
                line: 1,
                field: None,
                message: format!("expected `dim <n>`, found {header:?}"),
            })?;
        match lines.next() {
            Some((_, l)) if l.trim() == "entries" => {}
            other => {
                return Err(Error::Parse {
                    line: 2,
                    field: None,
                    message: format!(
                        "expected `entries`, found {:?}",
                        other.map(|(_, l)| l).unwrap_or("<eof>")
                    ),
                })
            }
        }
        let mut matrix = Vec::with_capacity(dim);
        for row_idx in 0..dim {
            let (lineno, line) = lines.next().ok_or_else(|| Error::Parse {
                line: 3 + row_idx,
                field: None,
                message: format!("missing row {} of {dim}", row_idx + 1),
            })?;
            let fields: Vec<&str> = line.split_whitespace().collect();
            if fields.len() != dim {
                return Err(Error::Parse {
                    line: lineno + 1,
                    field: None,
                    message: format!("expected {dim} entries, found {}", fields.len()),
                });
            }
            let mut row = Vec::with_capacity(dim);
            for (col, field) in fields.iter().enumerate() {
                let value =
                    crate::rational::parse_rational(field).map_err(|message| Error::Parse {
                        line: lineno + 1,
                        field: Some(col + 1),
                        message,
                    })?;
                row.push(value);
            }
            matrix.push(row);
        }
        if let Some((lineno, line)) = lines.find(|(_, l)| !l.trim().is_empty()) {
            return Err(Error::Parse {
                line: lineno + 1,
                field: None,
                message: format!("unexpected trailing content {line:?}"),
            });
        }
        DruzkowskiMap::from_matrix(matrix)
    }

    pub fn read_matrix_file(path: impl AsRef<Path>) -> Result<Self, Error> {
        let path = path.as_ref();
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::io(path.display().to_string(), e))?;
        Self::parse_matrix_text(&text)
    }
}

/// The classical five-variable family whose inverse reaches the maximal
/// degree 9 allowed for index-3 Jacobians:
///
/// ```text
/// L_1 = a2*X2 + a3*X3 + a4*X4 + a5*X5
/// L_2 = b3*X3 + b4*X4 + b5*X5
/// L_3 = L_4 = L_5 = 0
/// ```
///
/// `params` is `(a2, a3, a4, a5, b3, b4, b5)`.
pub fn example_family(params: &[Rational; 7]) -> DruzkowskiMap {
    let z = Rational::zero;
    let matrix = vec![
        vec![z(), params[0].clone(), params[1].clone(), params[2].clone(), params[3].clone()],
        vec![z(), z(), params[4].clone(), params[5].clone(), params[6].clone()],
        vec![z(); 5],
        vec![z(); 5],
        vec![z(); 5],
    ];
    DruzkowskiMap::from_matrix(matrix).expect("matrix is square by construction")
}

/// The default coefficient pool: small numerators and denominators keep
/// coefficient growth manageable in degree-27 intermediates.
pub fn default_pool() -> Vec<Rational> {
    vec![rat(-2), rat(-1), frac(-1, 2), frac(1, 2), rat(1), rat(2)]
}

/// Configuration for the seeded leveled generator.
#[derive(Debug, Clone)]
pub struct GeneratorConfig {
    pub dimension: usize,
    /// Target level count `g`; the generated `JH` satisfies `(JH)^g = 0`.
    pub levels: usize,
    pub seed: u64,
    /// Fill probability for each allowed matrix position, in `(0, 1]`.
    pub density: Rational,
    pub pool: Vec<Rational>,
}

impl GeneratorConfig {
    pub fn new(
        dimension: usize,
        levels: usize,
        seed: u64,
        density: Rational,
        pool: Vec<Rational>,
    ) -> Result<Self, Error> {
        if dimension == 0 {
            return Err(Error::InvalidConfig("dimension must be positive".to_string()));
        }
        if levels == 0 || levels > dimension {
            return Err(Error::InvalidConfig(format!(
                "level count must satisfy 1 <= g <= d, got g={levels}, d={dimension}"
            )));
        }
        if density <= Rational::zero() || density > Rational::from_integer(1.into()) {
            return Err(Error::InvalidConfig(format!(
                "density must lie in (0, 1], got {density}"
            )));
        }
        if density.numer().to_u64().is_none() || density.denom().to_u64().is_none() {
            return Err(Error::InvalidConfig(
                "density numerator/denominator must fit in 64 bits".to_string(),
            ));
        }
        if pool.is_empty() || pool.iter().all(Rational::is_zero) {
            return Err(Error::InvalidConfig(
                "coefficient pool needs at least one nonzero value".to_string(),
            ));
        }
        Ok(GeneratorConfig {
            dimension,
            levels,
            seed,
            density,
            pool,
        })
    }

    /// `new` with the default pool.
    pub fn with_default_pool(
        dimension: usize,
        levels: usize,
        seed: u64,
        density: Rational,
    ) -> Result<Self, Error> {
        GeneratorConfig::new(dimension, levels, seed, density, default_pool())
    }
}

/// Generates a map whose variables split into `g` contiguous levels, with
/// row `i` allowed nonzero entries only in columns of strictly higher
/// levels. Along any product path the level strictly increases, so
/// `(JH)^g = 0` by construction.
///
/// Draw order (one SplitMix64 stream seeded with `config.seed`):
/// 1. the level boundaries: Fisher-Yates shuffle of `[1, .., d-1]`, first
///    `g - 1` entries sorted ascending become the cut points;
/// 2. row-major over allowed positions: one Bernoulli(density) draw, then
///    one pool-index draw if the position is filled.
pub fn generate_leveled(config: &GeneratorConfig) -> DruzkowskiMap {
    let d = config.dimension;
    let g = config.levels;
    let mut rng = SplitMix64::new(config.seed);

    let mut candidates: Vec<usize> = (1..d).collect();
    rng.shuffle(&mut candidates);
    let mut cuts: Vec<usize> = candidates.into_iter().take(g - 1).collect();
    cuts.sort_unstable();

    // level[k] = index of the contiguous block containing variable k
    let mut level = vec![0usize; d];
    let mut current = 0usize;
    for (k, lv) in level.iter_mut().enumerate() {
        while current < cuts.len() && k >= cuts[current] {
            current += 1;
        }
        *lv = current;
    }

    let num = config.density.numer().to_u64().expect("validated at construction");
    let den = config.density.denom().to_u64().expect("validated at construction");
    let mut matrix = vec![vec![Rational::zero(); d]; d];
    for i in 0..d {
        for j in 0..d {
            if level[j] > level[i] && rng.next_bernoulli(num, den) {
                matrix[i][j] = config.pool[rng.next_below(config.pool.len())].clone();
            }
        }
    }
    DruzkowskiMap::from_matrix(matrix).expect("matrix is square by construction")
}

/// Builds `A = u v^T` from explicit vectors, requiring `v^T u = 0` so that
/// `A^2 = (v^T u) * A = 0`.
pub fn square_zero_from_vectors(u: &[Rational], v: &[Rational]) -> Result<DruzkowskiMap, Error> {
    if u.len() != v.len() {
        return Err(Error::DimensionMismatch {
            expected: u.len(),
            found: v.len(),
        });
    }
    let dot: Rational = u.iter().zip(v).map(|(a, b)| a * b).sum();
    if !dot.is_zero() {
        return Err(Error::GenerationFailure(format!(
            "v^T u = {dot}, expected 0"
        )));
    }
    let matrix = u
        .iter()
        .map(|ui| v.iter().map(|vj| ui * vj).collect())
        .collect();
    DruzkowskiMap::from_matrix(matrix)
}

/// Seeded generator for rank-one maps with `A^2 = 0`.
///
/// Indices are shuffled and paired; each pair `(s, t)` receives pool
/// values `u_s, u_t` and the orthogonal completion `v_s = u_t`,
/// `v_t = -u_s`, so `u_s v_s + u_t v_t = 0` termwise (a leftover index on
/// odd `d` gets `v = 0`). This needs the pool to be closed under
/// negation; otherwise generation fails explicitly.
///
/// Note `A^2 = 0` does *not* force `(JH)^2 = 0` symbolically: the entries
/// of `(JH)^2` carry the weights `u_j^3 v_j` instead of `u_j v_j`.
pub fn generate_square_zero(
    d: usize,
    seed: u64,
    pool: &[Rational],
) -> Result<DruzkowskiMap, Error> {
    if d < 2 {
        return Err(Error::InvalidConfig(format!(
            "square-zero generation needs d >= 2, got {d}"
        )));
    }
    if pool.is_empty() || pool.iter().all(Rational::is_zero) {
        return Err(Error::InvalidConfig(
            "coefficient pool needs at least one nonzero value".to_string(),
        ));
    }
    for p in pool {
        if !pool.contains(&-p.clone()) {
            return Err(Error::GenerationFailure(format!(
                "pool is not closed under negation (missing {}), cannot enforce v^T u = 0",
                -p.clone()
            )));
        }
    }

    let mut rng = SplitMix64::new(seed);
    let mut indices: Vec<usize> = (0..d).collect();
    rng.shuffle(&mut indices);

    let mut u = vec![Rational::zero(); d];
    let mut v = vec![Rational::zero(); d];
    for pair in indices.chunks(2) {
        match *pair {
            [s, t] => {
                u[s] = pool[rng.next_below(pool.len())].clone();
                u[t] = pool[rng.next_below(pool.len())].clone();
                v[s] = u[t].clone();
                v[t] = -u[s].clone();
            }
            [r] => {
                u[r] = pool[rng.next_below(pool.len())].clone();
                // v[r] stays 0
            }
            _ => unreachable!(),
        }
    }
    square_zero_from_vectors(&u, &v)
}
