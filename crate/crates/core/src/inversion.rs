//! The inversion algorithm for maps `F = Id + H` with `H` homogeneous of
//! degree 3.
//!
//! For each coordinate `i` the engine iterates the sequence
//!
//! ```text
//! P_0 = X_i,   P_1 = H_i,   P_j = P_{j-1}(F) - P_{j-1}(X)
//! ```
//!
//! `F` is invertible exactly when every sequence reaches zero, at some
//! first index `m_i`, and then the inverse is the alternating sum
//! `G_i = sum_{l < m_i} (-1)^l P_l`. Every inverse produced here is also
//! composition-checked by [`verify_inverse`] in the test suites.
//!
//! The default iteration cap is `(3^(d-1) + 1) / 2`, derived from the
//! automorphism degree bound `deg F^{-1} <= (deg F)^(d-1)` together with
//! the observation that the minimal degree of a nonzero `P_j` grows by at
//! least 2 per step (see [`default_cap`]); it is not part of the original
//! algorithm statement and can be overridden.

use std::fmt;

use num_bigint::BigInt;
use num_traits::One;

use crate::error::Error;
use crate::poly::{BudgetExceeded, Degree, Polynomial};
use crate::polymap::PolyMap;
use crate::rational::{factorial, Rational};

/// How a coordinate's sequence ended.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Termination {
    /// First index `m` with `P_m = 0`.
    Resolved(usize),
    /// All of `P_1 ..= P_cap` are nonzero.
    CapReached,
    /// A polynomial exceeded the term budget before the sequence settled.
    BudgetExceeded,
}

impl Termination {
    pub fn resolved(self) -> Option<usize> {
        match self {
            Termination::Resolved(m) => Some(m),
            _ => None,
        }
    }
}

/// Record of one coordinate's `P_j` sequence.
#[derive(Debug, Clone)]
pub struct CoordinateTrace {
    /// `P_0 ..= P_last` as computed (ends with the zero polynomial when
    /// the sequence resolved).
    pub steps: Vec<Polynomial>,
    /// Total degree of each step, parallel to `steps`.
    pub degrees: Vec<Degree>,
    pub termination: Termination,
}

/// Full record of an inversion run.
#[derive(Debug, Clone)]
pub struct InversionTrace {
    pub dimension: usize,
    pub coordinates: Vec<CoordinateTrace>,
    /// Iteration cap in force during the run.
    pub cap: usize,
    /// Set when the run used the *default* cap and some coordinate ran to
    /// it without resolving: by the degree-bound argument behind
    /// [`default_cap`], such a map has no polynomial inverse.
    pub provably_not_invertible: bool,
}

impl InversionTrace {
    pub fn termination_index(&self, i: usize) -> Option<usize> {
        self.coordinates[i].termination.resolved()
    }

    /// Structured text report: per coordinate, each step's degree (`0`
    /// marks the zero polynomial) and the termination index.
    pub fn to_report(&self) -> String {
        let mut out = format!("inversion-trace v1\ndim {}\ncap {}\n", self.dimension, self.cap);
        for (i, coord) in self.coordinates.iter().enumerate() {
            let m = match coord.termination {
                Termination::Resolved(m) => m.to_string(),
                Termination::CapReached | Termination::BudgetExceeded => "UNRESOLVED".to_string(),
            };
            out.push_str(&format!("coordinate {} m={}\n", i + 1, m));
            for (j, (p, deg)) in coord.steps.iter().zip(&coord.degrees).enumerate() {
                if p.is_zero() {
                    out.push_str(&format!("  P_{j} 0\n"));
                } else {
                    out.push_str(&format!("  P_{j} deg={deg}\n"));
                }
            }
        }
        out
    }
}

impl fmt::Display for InversionTrace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_report())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InversionStatus {
    Inverted,
    Inconclusive,
}

/// Result of [`invert`]: the inverse map when every coordinate resolved
/// within the cap, plus the full trace either way.
#[derive(Debug, Clone)]
pub struct InversionResult {
    pub status: InversionStatus,
    pub inverse: Option<PolyMap>,
    pub trace: InversionTrace,
}

/// Knobs for [`invert_with`]; `None` means the derived default cap and no
/// term budget.
#[derive(Debug, Clone, Copy, Default)]
pub struct InvertOptions {
    pub cap: Option<usize>,
    pub term_budget: Option<usize>,
}

/// Default iteration cap `(3^(d-1) + 1) / 2`.
///
/// If `F = Id + H` (cubic `H`) is invertible, `deg F^{-1} <= 3^(d-1)`.
/// The minimal degree of a nonzero `P_j` is at least `2j + 1` (degree 3
/// at `j = 1`, and substituting `X + H` raises the minimal degree by at
/// least 2 per step), so a sequence still nonzero past this cap would
/// contribute terms above the inverse-degree bound. Saturates for `d`
/// far beyond desk scale.
pub fn default_cap(d: usize) -> usize {
    let e = (d as u32).saturating_sub(1);
    match 3u128.checked_pow(e) {
        Some(p) => usize::try_from((p + 1) / 2).unwrap_or(usize::MAX),
        None => usize::MAX,
    }
}

/// Extracts `H = F - Id`, requiring every component to be zero or
/// homogeneous of degree exactly 3.
fn cubic_part(f: &PolyMap) -> Result<PolyMap, Error> {
    let h = f.minus_identity();
    for (i, hi) in h.components().iter().enumerate() {
        let ok = match hi.degree().as_finite() {
            None => true,
            Some(3) => hi.is_homogeneous(),
            Some(_) => false,
        };
        if !ok {
            return Err(Error::BadMapForm(format!(
                "component {} of F - Id is not zero or homogeneous of degree 3",
                i + 1
            )));
        }
    }
    Ok(h)
}

fn compute_sequence(f: &PolyMap, i: usize, cap: usize, budget: Option<usize>) -> CoordinateTrace {
    let d = f.dimension();
    let mut steps = vec![Polynomial::var(d, i)];
    let mut termination = Termination::CapReached;
    for j in 1..=cap {
        let prev = steps.last().unwrap();
        let next = match prev.compose_budgeted(f.components(), budget) {
            Ok(composed) => &composed - prev,
            Err(BudgetExceeded) => {
                termination = Termination::BudgetExceeded;
                break;
            }
        };
        let resolved = next.is_zero();
        steps.push(next);
        if resolved {
            termination = Termination::Resolved(j);
            break;
        }
    }
    let degrees = steps.iter().map(Polynomial::degree).collect();
    CoordinateTrace {
        steps,
        degrees,
        termination,
    }
}

/// The sequence `P_0, P_1, ...` for one coordinate, up to the first zero
/// term or to `cap`, whichever comes first.
///
/// Panics if `F - Id` is not a (possibly zero) homogeneous cubic; use
/// [`invert`] for validated input handling.
pub fn p_sequence(f: &PolyMap, coordinate: usize, cap: usize) -> Vec<Polynomial> {
    cubic_part(f).expect("p_sequence requires F = Id + cubic H");
    assert!(cap >= 1, "cap must be at least 1");
    compute_sequence(f, coordinate, cap, None).steps
}

/// Runs the inversion algorithm with the default cap and no budget.
pub fn invert(f: &PolyMap) -> Result<InversionResult, Error> {
    invert_with(f, InvertOptions::default())
}

pub fn invert_with(f: &PolyMap, options: InvertOptions) -> Result<InversionResult, Error> {
    cubic_part(f)?;
    let d = f.dimension();
    let cap = options.cap.unwrap_or_else(|| default_cap(d));
    let coordinates: Vec<CoordinateTrace> = (0..d)
        .map(|i| compute_sequence(f, i, cap, options.term_budget))
        .collect();

    let all_resolved = coordinates
        .iter()
        .all(|c| matches!(c.termination, Termination::Resolved(_)));
    let inverse = all_resolved.then(|| {
        let components = coordinates
            .iter()
            .map(|c| {
                let m = c.termination.resolved().unwrap();
                let mut g = Polynomial::zero(d);
                for (l, p) in c.steps[..m].iter().enumerate() {
                    g = if l % 2 == 0 { &g + p } else { &g - p };
                }
                g
            })
            .collect();
        PolyMap::new(components).expect("inverse components share the dimension")
    });

    // only the default cap carries the degree-bound argument
    let provably_not_invertible = !all_resolved
        && options.cap.is_none()
        && coordinates
            .iter()
            .all(|c| !matches!(c.termination, Termination::BudgetExceeded));

    Ok(InversionResult {
        status: if all_resolved {
            InversionStatus::Inverted
        } else {
            InversionStatus::Inconclusive
        },
        inverse,
        trace: InversionTrace {
            dimension: d,
            coordinates,
            cap,
            provably_not_invertible,
        },
    })
}

/// Checks `G(F) = Id` and `F(G) = Id` by exact composition.
pub fn verify_inverse(f: &PolyMap, g: &PolyMap) -> bool {
    let d = f.dimension();
    if g.dimension() != d {
        return false;
    }
    (0..d).all(|i| {
        g.component(i).compose(f.components()) == Polynomial::var(d, i)
            && f.component(i).compose(g.components()) == Polynomial::var(d, i)
    })
}

/// The finite Taylor expansion of `p(X + H) - p(X)`: returns exactly
/// `deg p` components, the `n`-th (1-based) being
/// `sum_{|alpha| = n} (1/alpha!) D^alpha p * H^alpha`. Components may be
/// zero; they always sum to `p.compose(Id + H) - p` exactly.
pub fn taylor_components(p: &Polynomial, h: &PolyMap) -> Vec<Polynomial> {
    let d = p.dimension();
    assert_eq!(d, h.dimension(), "polynomial/map dimension mismatch");
    let Some(max_order) = p.degree().as_finite() else {
        return Vec::new();
    };
    let max_order = max_order as usize;
    if max_order == 0 {
        return Vec::new();
    }
    let mut ctx = TaylorCtx {
        h,
        components: vec![Polynomial::zero(d); max_order],
        hpows: (0..d).map(|_| vec![Polynomial::one(d)]).collect(),
        max_order,
    };
    ctx.descend(0, p.clone(), 0, BigInt::one(), Polynomial::one(d));
    ctx.components
}

struct TaylorCtx<'a> {
    h: &'a PolyMap,
    components: Vec<Polynomial>,
    hpows: Vec<Vec<Polynomial>>,
    max_order: usize,
}

impl TaylorCtx<'_> {
    /// Enumerates multi-indices variable by variable, carrying the
    /// current derivative `dp`, the order `|alpha|` so far, `alpha!`, and
    /// the product `H^alpha`.
    fn descend(
        &mut self,
        var: usize,
        dp: Polynomial,
        order: usize,
        alpha_factorial: BigInt,
        hprod: Polynomial,
    ) {
        if var == self.h.dimension() {
            if order >= 1 {
                let weight = Rational::new(BigInt::one(), alpha_factorial);
                let term = (&dp * &hprod).scale(&weight);
                self.components[order - 1] = &self.components[order - 1] + &term;
            }
            return;
        }
        let h_var_zero = self.h.component(var).is_zero();
        // alpha_var = 0 branch reuses everything as-is
        self.descend(var + 1, dp.clone(), order, alpha_factorial.clone(), hprod.clone());
        if h_var_zero {
            return;
        }
        let mut derivative = dp;
        for e in 1..=(self.max_order - order) {
            derivative = derivative.partial_derivative(var);
            if derivative.is_zero() {
                break;
            }
            while self.hpows[var].len() <= e {
                let next = self.hpows[var].last().unwrap() * self.h.component(var);
                self.hpows[var].push(next);
            }
            let fact = &alpha_factorial * factorial(e as u32);
            let product = &hprod * &self.hpows[var][e];
            self.descend(var + 1, derivative.clone(), order + e, fact, product);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    fn x(dim: usize, var: usize) -> Polynomial {
        Polynomial::var(dim, var)
    }

    /// F = (X1 + X2^3, X2): the smallest nontrivial cubic-linear map.
    fn shear() -> PolyMap {
        let d = 2;
        PolyMap::new(vec![&x(d, 0) + &x(d, 1).pow(3), x(d, 1)]).unwrap()
    }

    #[test]
    fn zero_cubic_part_stops_immediately() {
        let f = PolyMap::identity(3);
        let seq = p_sequence(&f, 0, 10);
        assert_eq!(seq.len(), 2);
        assert_eq!(seq[0], x(3, 0));
        assert!(seq[1].is_zero());
    }

    #[test]
    fn identity_inverts_to_identity() {
        let f = PolyMap::identity(4);
        let result = invert(&f).unwrap();
        assert_eq!(result.status, InversionStatus::Inverted);
        assert_eq!(result.inverse.as_ref().unwrap(), &PolyMap::identity(4));
        for i in 0..4 {
            assert_eq!(result.trace.termination_index(i), Some(1));
        }
    }

    #[test]
    fn shear_inverts_with_m_two() {
        let f = shear();
        let result = invert(&f).unwrap();
        assert_eq!(result.status, InversionStatus::Inverted);
        let g = result.inverse.unwrap();
        // frozen expectation: G = (Y1 - Y2^3, Y2); composition cancels
        let d = 2;
        let expected =
            PolyMap::new(vec![&x(d, 0) - &x(d, 1).pow(3), x(d, 1)]).unwrap();
        assert_eq!(g, expected);
        assert_eq!(result.trace.termination_index(0), Some(2));
        assert_eq!(result.trace.termination_index(1), Some(1));
        assert!(verify_inverse(&f, &g));
    }

    #[test]
    fn verify_inverse_accepts_and_rejects() {
        assert!(verify_inverse(&PolyMap::identity(2), &PolyMap::identity(2)));
        let f = shear();
        let d = 2;
        let wrong = PolyMap::new(vec![&x(d, 0) + &x(d, 1).pow(3), x(d, 1)]).unwrap();
        assert!(!verify_inverse(&f, &wrong));
    }

    #[test]
    fn invert_rejects_wrong_form() {
        let d = 2;
        // quadratic part
        let f = PolyMap::new(vec![&x(d, 0) + &x(d, 1).pow(2), x(d, 1)]).unwrap();
        assert!(matches!(invert(&f), Err(Error::BadMapForm(_))));
        // inhomogeneous cubic part
        let g = PolyMap::new(vec![
            &x(d, 0) + &(&x(d, 1).pow(3) + &x(d, 1)),
            x(d, 1),
        ])
        .unwrap();
        assert!(matches!(invert(&g), Err(Error::BadMapForm(_))));
    }

    #[test]
    fn one_dimensional_cubic_is_provably_not_invertible() {
        // F = X1 + X1^3; default cap in d=1 is 1 and P_1 = X1^3 != 0
        let d = 1;
        let f = PolyMap::new(vec![&x(d, 0) + &x(d, 0).pow(3)]).unwrap();
        let result = invert(&f).unwrap();
        assert_eq!(result.status, InversionStatus::Inconclusive);
        assert!(result.inverse.is_none());
        assert!(result.trace.provably_not_invertible);

        // with an explicit cap the degree argument no longer applies
        let overridden = invert_with(
            &f,
            InvertOptions {
                cap: Some(4),
                term_budget: None,
            },
        )
        .unwrap();
        assert_eq!(overridden.status, InversionStatus::Inconclusive);
        assert!(!overridden.trace.provably_not_invertible);
    }

    #[test]
    fn budget_exhaustion_is_reported() {
        let d = 1;
        let f = PolyMap::new(vec![&x(d, 0) + &x(d, 0).pow(3)]).unwrap();
        let result = invert_with(
            &f,
            InvertOptions {
                cap: Some(20),
                term_budget: Some(5),
            },
        )
        .unwrap();
        assert_eq!(result.status, InversionStatus::Inconclusive);
        assert!(!result.trace.provably_not_invertible);
        assert!(matches!(
            result.trace.coordinates[0].termination,
            Termination::BudgetExceeded
        ));
    }

    #[test]
    fn default_cap_values() {
        assert_eq!(default_cap(1), 1);
        assert_eq!(default_cap(2), 2);
        assert_eq!(default_cap(3), 5);
        assert_eq!(default_cap(5), 41);
        assert_eq!(default_cap(6), 122);
    }

    #[test]
    fn taylor_components_basic() {
        // p = X1^2, h = (X2, 0): components [2 X1 X2, X2^2]
        let d = 2;
        let p = x(d, 0).pow(2);
        let h = PolyMap::new(vec![x(d, 1), Polynomial::zero(d)]).unwrap();
        let comps = taylor_components(&p, &h);
        assert_eq!(comps.len(), 2);
        assert_eq!(comps[0], (&x(d, 0) * &x(d, 1)).scale(&rat(2)));
        assert_eq!(comps[1], x(d, 1).pow(2));

        let sum = &comps[0] + &comps[1];
        let f: Vec<Polynomial> = vec![&x(d, 0) + &x(d, 1), x(d, 1)];
        assert_eq!(sum, &p.compose(&f) - &p);
    }

    #[test]
    fn taylor_components_degenerate_inputs() {
        let d = 2;
        let h = PolyMap::new(vec![x(d, 1), Polynomial::zero(d)]).unwrap();
        assert!(taylor_components(&Polynomial::constant(d, rat(7)), &h).is_empty());
        assert!(taylor_components(&Polynomial::zero(d), &h).is_empty());
    }

    #[test]
    fn trace_report_format() {
        let f = shear();
        let result = invert(&f).unwrap();
        let report = result.trace.to_report();
        let expected = "inversion-trace v1\n\
                        dim 2\n\
                        cap 2\n\
                        coordinate 1 m=2\n\
                        \x20 P_0 deg=1\n\
                        \x20 P_1 deg=3\n\
                        \x20 P_2 0\n\
                        coordinate 2 m=1\n\
                        \x20 P_0 deg=1\n\
                        \x20 P_1 0\n";
        assert_eq!(report, expected);
    }
}
