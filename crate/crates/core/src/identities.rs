//! Symbolic checks of the polynomial identities forced by `(JH)^3 = 0`,
//! and the closed forms they imply for `P_3` and `P_4`.
//!
//! With `L_i` the linear forms and `A = (a_ij)` the coefficient matrix,
//! the identities are
//!
//! ```text
//! eq3:  sum_{j,k} a_ij a_jk a_kl L_j^2 L_k^2                      = 0   for all i, l
//! eq4:  sum_{j,k} a_ij a_jk a_kl (a_jm L_j L_k^2 + a_km L_j^2 L_k) = 0  for all i, l, m
//! eq8:  sum_{j,k} a_ij a_jk L_j^2 L_k^3                           = 0   for all i
//! eq9:  sum_{j,k} a_ij a_jk a_jm L_j L_k^3                        = 0   for all i, m
//! eq10: sum_{j,k} a_ij a_jk a_jm a_jn L_k^3
//!         = -3 sum_{j,k} a_ij a_jk a_jm a_kn L_j L_k^2            for all i, m, n
//! ```
//!
//! Each check fully expands the indexed sum over all index tuples; these
//! expansions are the independent oracle against the inversion engine, so
//! no algebraic shortcuts are taken.

use std::fmt;

use num_traits::Zero;

use crate::druzkowski::DruzkowskiMap;
use crate::poly::Polynomial;
use crate::rational::{rat, Rational};

/// First offending index tuple and its nonzero residual.
#[derive(Debug, Clone)]
pub struct IdentityViolation {
    /// `(index name, 1-based value)` pairs, e.g. `[("i", 1), ("l", 2)]`.
    pub indices: Vec<(&'static str, usize)>,
    pub residual: Polynomial,
}

/// Outcome of one identity check.
#[derive(Debug, Clone)]
pub struct IdentityCheck {
    pub name: &'static str,
    pub violation: Option<IdentityViolation>,
}

impl IdentityCheck {
    pub fn passed(&self) -> bool {
        self.violation.is_none()
    }
}

impl fmt::Display for IdentityCheck {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.violation {
            None => write!(f, "{} PASS", self.name),
            Some(v) => {
                let at: Vec<String> =
                    v.indices.iter().map(|(n, i)| format!("{n}={i}")).collect();
                write!(
                    f,
                    "{} FAIL at {}: residual = {}",
                    self.name,
                    at.join(", "),
                    v.residual
                )
            }
        }
    }
}

/// All five checks on one map.
#[derive(Debug, Clone)]
pub struct IdentityReport {
    pub checks: Vec<IdentityCheck>,
}

impl IdentityReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(IdentityCheck::passed)
    }
}

impl fmt::Display for IdentityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for check in &self.checks {
            writeln!(f, "{check}")?;
        }
        Ok(())
    }
}

/// Precomputed powers of the linear forms.
struct Instance<'a> {
    map: &'a DruzkowskiMap,
    sq: Vec<Polynomial>,
    cube: Vec<Polynomial>,
}

impl<'a> Instance<'a> {
    fn new(map: &'a DruzkowskiMap) -> Self {
        let sq = map.linear_forms().iter().map(|l| l.pow(2)).collect();
        let cube = map.linear_forms().iter().map(|l| l.pow(3)).collect();
        Instance { map, sq, cube }
    }

    fn a(&self, i: usize, j: usize) -> &Rational {
        self.map.coefficient(i, j)
    }

    fn dim(&self) -> usize {
        self.map.dimension()
    }
}

pub fn check_eq3(map: &DruzkowskiMap) -> IdentityCheck {
    let inst = Instance::new(map);
    let d = inst.dim();
    for i in 0..d {
        for l in 0..d {
            let mut sum = Polynomial::zero(d);
            for j in 0..d {
                if inst.a(i, j).is_zero() {
                    continue;
                }
                for k in 0..d {
                    let c = inst.a(i, j) * inst.a(j, k) * inst.a(k, l);
                    if c.is_zero() {
                        continue;
                    }
                    sum = &sum + &(&inst.sq[j] * &inst.sq[k]).scale(&c);
                }
            }
            if !sum.is_zero() {
                return IdentityCheck {
                    name: "eq3",
                    violation: Some(IdentityViolation {
                        indices: vec![("i", i + 1), ("l", l + 1)],
                        residual: sum,
                    }),
                };
            }
        }
    }
    IdentityCheck {
        name: "eq3",
        violation: None,
    }
}

pub fn check_eq4(map: &DruzkowskiMap) -> IdentityCheck {
    let inst = Instance::new(map);
    let d = inst.dim();
    for i in 0..d {
        for l in 0..d {
            for m in 0..d {
                let mut sum = Polynomial::zero(d);
                for j in 0..d {
                    if inst.a(i, j).is_zero() {
                        continue;
                    }
                    for k in 0..d {
                        let c = inst.a(i, j) * inst.a(j, k) * inst.a(k, l);
                        if c.is_zero() {
                            continue;
                        }
                        let lin = map.linear_form(j);
                        let link = map.linear_form(k);
                        let first = (lin * &inst.sq[k]).scale(&(&c * inst.a(j, m)));
                        let second = (&inst.sq[j] * link).scale(&(&c * inst.a(k, m)));
                        sum = &(&sum + &first) + &second;
                    }
                }
                if !sum.is_zero() {
                    return IdentityCheck {
                        name: "eq4",
                        violation: Some(IdentityViolation {
                            indices: vec![("i", i + 1), ("l", l + 1), ("m", m + 1)],
                            residual: sum,
                        }),
                    };
                }
            }
        }
    }
    IdentityCheck {
        name: "eq4",
        violation: None,
    }
}

pub fn check_eq8(map: &DruzkowskiMap) -> IdentityCheck {
    let inst = Instance::new(map);
    let d = inst.dim();
    for i in 0..d {
        let mut sum = Polynomial::zero(d);
        for j in 0..d {
            if inst.a(i, j).is_zero() {
                continue;
            }
            for k in 0..d {
                let c = inst.a(i, j) * inst.a(j, k);
                if c.is_zero() {
                    continue;
                }
                sum = &sum + &(&inst.sq[j] * &inst.cube[k]).scale(&c);
            }
        }
        if !sum.is_zero() {
            return IdentityCheck {
                name: "eq8",
                violation: Some(IdentityViolation {
                    indices: vec![("i", i + 1)],
                    residual: sum,
                }),
            };
        }
    }
    IdentityCheck {
        name: "eq8",
        violation: None,
    }
}

pub fn check_eq9(map: &DruzkowskiMap) -> IdentityCheck {
    let inst = Instance::new(map);
    let d = inst.dim();
    for i in 0..d {
        for m in 0..d {
            let mut sum = Polynomial::zero(d);
            for j in 0..d {
                if (inst.a(i, j) * inst.a(j, m)).is_zero() {
                    continue;
                }
                for k in 0..d {
                    let c = inst.a(i, j) * inst.a(j, k) * inst.a(j, m);
                    if c.is_zero() {
                        continue;
                    }
                    sum = &sum + &(map.linear_form(j) * &inst.cube[k]).scale(&c);
                }
            }
            if !sum.is_zero() {
                return IdentityCheck {
                    name: "eq9",
                    violation: Some(IdentityViolation {
                        indices: vec![("i", i + 1), ("m", m + 1)],
                        residual: sum,
                    }),
                };
            }
        }
    }
    IdentityCheck {
        name: "eq9",
        violation: None,
    }
}

pub fn check_eq10(map: &DruzkowskiMap) -> IdentityCheck {
    let inst = Instance::new(map);
    let d = inst.dim();
    for i in 0..d {
        for m in 0..d {
            for n in 0..d {
                // residual = LHS + 3 * (negated RHS sum)
                let mut sum = Polynomial::zero(d);
                for j in 0..d {
                    let base = inst.a(i, j) * inst.a(j, m);
                    if base.is_zero() {
                        continue;
                    }
                    for k in 0..d {
                        let c = &base * inst.a(j, k);
                        if c.is_zero() {
                            continue;
                        }
                        let lhs_c = &c * inst.a(j, n);
                        if !lhs_c.is_zero() {
                            sum = &sum + &inst.cube[k].scale(&lhs_c);
                        }
                        let rhs_c = &c * inst.a(k, n) * rat(3);
                        if !rhs_c.is_zero() {
                            sum = &sum + &(map.linear_form(j) * &inst.sq[k]).scale(&rhs_c);
                        }
                    }
                }
                if !sum.is_zero() {
                    return IdentityCheck {
                        name: "eq10",
                        violation: Some(IdentityViolation {
                            indices: vec![("i", i + 1), ("m", m + 1), ("n", n + 1)],
                            residual: sum,
                        }),
                    };
                }
            }
        }
    }
    IdentityCheck {
        name: "eq10",
        violation: None,
    }
}

/// Runs all five checks (silently fine on non-nilpotent input; the checks
/// then simply fail).
pub fn check_all(map: &DruzkowskiMap) -> IdentityReport {
    IdentityReport {
        checks: vec![
            check_eq3(map),
            check_eq4(map),
            check_eq8(map),
            check_eq9(map),
            check_eq10(map),
        ],
    }
}

/// The three Taylor components of `P_2^i` for a cubic-linear map, valid
/// for *any* coefficient matrix:
///
/// ```text
/// Q_21 = 3 L_i^2 sum_j a_ij L_j^3
/// Q_22 = 3 L_i   sum_{j,k} a_ij a_ik L_j^3 L_k^3
/// Q_23 =         sum_{j,k,l} a_ij a_ik a_il L_j^3 L_k^3 L_l^3
/// ```
pub fn q2_closed_forms(map: &DruzkowskiMap, i: usize) -> [Polynomial; 3] {
    let inst = Instance::new(map);
    let d = inst.dim();
    let mut single = Polynomial::zero(d);
    for j in 0..d {
        if !inst.a(i, j).is_zero() {
            single = &single + &inst.cube[j].scale(inst.a(i, j));
        }
    }
    let mut double = Polynomial::zero(d);
    for j in 0..d {
        if inst.a(i, j).is_zero() {
            continue;
        }
        for k in 0..d {
            let c = inst.a(i, j) * inst.a(i, k);
            if !c.is_zero() {
                double = &double + &(&inst.cube[j] * &inst.cube[k]).scale(&c);
            }
        }
    }
    let triple = triple_cube_sum(&inst, i);
    [
        (&inst.sq[i] * &single).scale(&rat(3)),
        (map.linear_form(i) * &double).scale(&rat(3)),
        triple,
    ]
}

/// `sum_{j,k,l} a_ij a_ik a_il L_j^3 L_k^3 L_l^3`.
fn triple_cube_sum(inst: &Instance<'_>, i: usize) -> Polynomial {
    let d = inst.dim();
    let mut sum = Polynomial::zero(d);
    for j in 0..d {
        if inst.a(i, j).is_zero() {
            continue;
        }
        for k in 0..d {
            let cjk = inst.a(i, j) * inst.a(i, k);
            if cjk.is_zero() {
                continue;
            }
            let pjk = &inst.cube[j] * &inst.cube[k];
            for l in 0..d {
                let c = &cjk * inst.a(i, l);
                if !c.is_zero() {
                    sum = &sum + &(&pjk * &inst.cube[l]).scale(&c);
                }
            }
        }
    }
    sum
}

/// Closed form `P_3^i = 6 L_i sum_{j,k} a_ij a_ik L_j^3 L_k^3
/// + 6 sum_{j,k,l} a_ij a_ik a_il L_j^3 L_k^3 L_l^3`, which equals the
/// algorithm's `P_3^i` whenever `(JH)^3 = 0`.
pub fn p3_closed_form(map: &DruzkowskiMap, i: usize) -> Polynomial {
    let inst = Instance::new(map);
    let d = inst.dim();
    let mut double = Polynomial::zero(d);
    for j in 0..d {
        if inst.a(i, j).is_zero() {
            continue;
        }
        for k in 0..d {
            let c = inst.a(i, j) * inst.a(i, k);
            if !c.is_zero() {
                double = &double + &(&inst.cube[j] * &inst.cube[k]).scale(&c);
            }
        }
    }
    let head = (map.linear_form(i) * &double).scale(&rat(6));
    &head + &triple_cube_sum(&inst, i).scale(&rat(6))
}

/// Closed form `P_4^i = 6 sum_{j,k,l} a_ij a_ik a_il L_j^3 L_k^3 L_l^3`,
/// which equals the algorithm's `P_4^i` whenever `(JH)^3 = 0`.
pub fn p4_closed_form(map: &DruzkowskiMap, i: usize) -> Polynomial {
    let inst = Instance::new(map);
    triple_cube_sum(&inst, i).scale(&rat(6))
}
