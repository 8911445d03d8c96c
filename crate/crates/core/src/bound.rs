//! Assembly of the universal sum-concentration bound and its companions:
//! the inverted sum of averaged quantile profiles, the union-bound
//! baseline, closed-form power/exponential envelope corollaries, moment
//! inequalities and the grid convexity checks behind them.

use serde::{Deserialize, Serialize};

use crate::curve::{Axis, FuncTerms, MonotoneCurve};
use crate::dist::Distribution;
use crate::error::{Error, Result};
use crate::ext::ExtReal;
use crate::hardy::{hardy_of, HardyProfile};
use crate::quad::adaptive_simpson;

/// Relative tolerance for grid convexity certification.
pub const CONVEXITY_TOL: f64 = 1e-9;
/// Points in the default certification grid.
pub const CONVEXITY_GRID_POINTS: usize = 512;

/// Which construction produced a bound.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum BoundKind {
    /// Inverted sum of averaged tail-quantile profiles; bounds the
    /// survival of the raw sum `X₁+⋯+Xₙ`.
    Theorem1,
    /// Single-marginal form; bounds the survival of the average
    /// `(1/n)ΣXₖ` independently of n.
    Iid,
    /// Union bound `min(1, n·S(t))` for the average.
    NaiveUnion { n: u32 },
    /// Power-envelope corollary with its constant.
    CorollaryPower { q: f64, factor: f64 },
    /// Exponential-envelope corollary (constant e).
    CorollaryExp { factor: f64 },
}

/// Result of one grid convexity certification.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ConvexityCertificate {
    pub label: String,
    pub grid_lo: f64,
    pub grid_hi: f64,
    pub points: usize,
    pub passed: bool,
    /// Largest relative slope decrease observed (negative slack means a
    /// clean pass).
    pub worst_violation: f64,
    /// Grid triple witnessing the worst violation, when one exists.
    pub witness: Option<[f64; 3]>,
}

/// A survival bound together with its provenance.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BoundReport {
    pub bound: MonotoneCurve,
    pub inputs: Vec<Distribution>,
    #[serde(flatten)]
    pub kind: BoundKind,
    pub convexity_certificates: Vec<ConvexityCertificate>,
}

/// Survival bound for the raw sum of laws with the given marginals,
/// under arbitrary dependence: the inverse of the summed averaged
/// quantile profiles.
pub fn theorem1_bound(mus: &[Distribution]) -> Result<BoundReport> {
    if mus.is_empty() {
        return Err(Error::Argument("need at least one marginal".into()));
    }
    let mut hs = Vec::with_capacity(mus.len());
    for mu in mus {
        hs.push(hardy_of(mu)?.curve().clone());
    }
    let sum = MonotoneCurve::pointwise_sum(&hs)?;
    Ok(BoundReport {
        bound: sum.invert(),
        inputs: mus.to_vec(),
        kind: BoundKind::Theorem1,
        convexity_certificates: vec![],
    })
}

/// Survival bound for the average of identically distributed variables;
/// free of the number of summands.
pub fn iid_bound(mu: &Distribution) -> Result<BoundReport> {
    let h = hardy_of(mu)?;
    Ok(BoundReport {
        bound: h.curve().invert(),
        inputs: vec![mu.clone()],
        kind: BoundKind::Iid,
        convexity_certificates: vec![],
    })
}

/// Union bound for the average: `min(1, n·S(t))`.
pub fn naive_union_bound(mu: &Distribution, n: u32) -> Result<BoundReport> {
    if n == 0 {
        return Err(Error::Argument("need at least one summand".into()));
    }
    mu.validate()?;
    let s = mu.survival_curve();
    let bound = if n == 1 {
        s
    } else {
        s.scale(n as f64, Axis::Y)?.clip_above(1.0)
    };
    Ok(BoundReport {
        bound,
        inputs: vec![mu.clone()],
        kind: BoundKind::NaiveUnion { n },
        convexity_certificates: vec![],
    })
}

/// Default certification grid: geometric, spanning six decades clipped
/// to the curve's domain.
fn certification_grid(alpha: &MonotoneCurve) -> Vec<f64> {
    let dom = alpha.domain();
    let mut lo = 1e-3f64;
    let mut hi = 1e3f64;
    if dom.lo.is_finite() && dom.lo.value() > 0.0 {
        lo = lo.max(dom.lo.value() * (1.0 + 1e-9));
    }
    if dom.hi.is_finite() {
        hi = hi.min(dom.hi.value() * (1.0 - 1e-9));
    }
    if !(lo < hi) {
        return vec![];
    }
    let n = CONVEXITY_GRID_POINTS;
    let ratio = (hi / lo).ln() / (n - 1) as f64;
    (0..n).map(|i| lo * (ratio * i as f64).exp()).collect()
}

/// Second-difference convexity verdict on a grid of (x, y) pairs.
fn grid_convexity(xs: &[f64], ys: &[f64], tol: f64) -> (bool, f64, Option<[f64; 3]>) {
    let mut worst = f64::NEG_INFINITY;
    let mut witness = None;
    for i in 0..xs.len().saturating_sub(2) {
        let s1 = (ys[i + 1] - ys[i]) / (xs[i + 1] - xs[i]);
        let s2 = (ys[i + 2] - ys[i + 1]) / (xs[i + 2] - xs[i + 1]);
        let scale = 1.0f64.max(s1.abs()).max(s2.abs());
        let violation = (s1 - s2) / scale;
        if violation > worst {
            worst = violation;
            witness = Some([xs[i], xs[i + 1], xs[i + 2]]);
        }
    }
    if worst == f64::NEG_INFINITY {
        return (true, 0.0, None);
    }
    (worst <= tol, worst, if worst > tol { witness } else { None })
}

fn certify_composition(
    alpha: &MonotoneCurve,
    label: &str,
    map: impl Fn(f64) -> f64,
) -> Result<ConvexityCertificate> {
    let grid = certification_grid(alpha);
    if grid.len() < 3 {
        return Err(Error::Argument(
            "certification grid does not intersect the envelope domain".into(),
        ));
    }
    let mut ys = Vec::with_capacity(grid.len());
    for &t in &grid {
        let v = alpha.eval(t)?;
        if !v.is_singleton() {
            return Err(Error::Precondition {
                message: format!("envelope jumps at {t}; composition is not convex"),
                witness: Some([t, v.lo().value(), v.hi().value()]),
            });
        }
        let y = v.lo().value();
        if !(y > 0.0) {
            return Err(Error::Precondition {
                message: format!("envelope must be positive, got {y} at {t}"),
                witness: Some([t, y, y]),
            });
        }
        ys.push(map(y));
    }
    let (passed, worst, witness) = grid_convexity(&grid, &ys, CONVEXITY_TOL);
    Ok(ConvexityCertificate {
        label: label.to_string(),
        grid_lo: grid[0],
        grid_hi: *grid.last().unwrap(),
        points: grid.len(),
        passed,
        worst_violation: worst,
        witness,
    })
}

/// Power-envelope corollary: if the survival operator is dominated by a
/// positive envelope whose `(-1/q)`-power is convex, the average's
/// survival is dominated by `(q/(q-1))^q` times the envelope.
pub fn corollary_power_bound(alpha: &MonotoneCurve, q: f64) -> Result<BoundReport> {
    if !(q > 1.0) || !q.is_finite() {
        return Err(Error::Argument(format!("need q > 1, got {q}")));
    }
    let cert = certify_composition(alpha, &format!("t -> alpha(t)^(-1/{q})"), |y| {
        y.powf(-1.0 / q)
    })?;
    if !cert.passed {
        return Err(Error::Precondition {
            message: format!(
                "convexity certificate failed for alpha^(-1/q), violation {}",
                cert.worst_violation
            ),
            witness: cert.witness,
        });
    }
    let factor = (q / (q - 1.0)).powf(q);
    let bound = alpha.scale(factor, Axis::Y)?.clip_above(1.0);
    Ok(BoundReport {
        bound,
        inputs: vec![],
        kind: BoundKind::CorollaryPower { q, factor },
        convexity_certificates: vec![cert],
    })
}

/// Exponential-envelope corollary: if `-log ∘ alpha` is convex the
/// average's survival is dominated by `e·alpha`.
pub fn corollary_exp_bound(alpha: &MonotoneCurve) -> Result<BoundReport> {
    let cert = certify_composition(alpha, "t -> -log(alpha(t))", |y| -y.ln())?;
    if !cert.passed {
        return Err(Error::Precondition {
            message: format!(
                "convexity certificate failed for -log(alpha), violation {}",
                cert.worst_violation
            ),
            witness: cert.witness,
        });
    }
    let factor = std::f64::consts::E;
    let bound = alpha.scale(factor, Axis::Y)?.clip_above(1.0);
    Ok(BoundReport {
        bound,
        inputs: vec![],
        kind: BoundKind::CorollaryExp { factor },
        convexity_certificates: vec![cert],
    })
}

/// The three quantities of the moment comparison: the Lq-integral of the
/// averaged profile, the Hardy-constant bound on it, and the raw moment
/// (the Jensen-route bound).
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct MomentBoundCheck {
    pub q: f64,
    /// `∫₀¹ H(T)(p)^q dp`
    pub lhs: f64,
    /// `(q/(q-1))^q · E[X^q]`
    pub rhs: f64,
    /// `E[X^q]`
    pub jensen_rhs: f64,
    pub lhs_le_rhs: bool,
}

/// Computes the moment comparison for a nonnegative law with a finite
/// q-th moment.
pub fn moment_bound_check(mu: &Distribution, q: f64) -> Result<MomentBoundCheck> {
    if !(q > 1.0) || !q.is_finite() {
        return Err(Error::Argument(format!("need q > 1, got {q}")));
    }
    let m_q = mu.moment(q)?;
    let h = hardy_of(mu)?;
    let lhs = hardy_power_integral(&h, q)?;
    let rhs = (q / (q - 1.0)).powf(q) * m_q;
    Ok(MomentBoundCheck {
        q,
        lhs,
        rhs,
        jensen_rhs: m_q,
        lhs_le_rhs: lhs <= rhs + 1e-9 * rhs.abs().max(1.0),
    })
}

/// `∫₀¹ H(p)^q dp` with closed forms per segment and adaptive quadrature
/// for the transcendental remainder.
fn hardy_power_integral(h: &HardyProfile, q: f64) -> Result<f64> {
    let mut total = 0.0;
    for seg in &h.segments {
        let a = seg.p_lo.min(1.0);
        let b = if seg.p_hi.is_finite() {
            seg.p_hi.value().min(1.0)
        } else {
            1.0
        };
        if b <= a {
            continue;
        }
        total += segment_power_integral(&seg.terms, q, a, b)?;
    }
    if !total.is_finite() {
        return Err(Error::Capability("power integral diverged".into()));
    }
    Ok(total)
}

fn segment_power_integral(terms: &FuncTerms, q: f64, a: f64, b: f64) -> Result<f64> {
    // Constant piece.
    if terms.is_affine() && terms.linear == 0.0 {
        if terms.konst < 0.0 {
            return Err(Error::Capability(
                "negative profile values have no real q-th power".into(),
            ));
        }
        return Ok(terms.konst.powf(q) * (b - a));
    }
    // Affine piece.
    if terms.is_affine() {
        let at = |p: f64| terms.konst + terms.linear * p;
        if at(a) < 0.0 || at(b) < 0.0 {
            return Err(Error::Capability(
                "negative profile values have no real q-th power".into(),
            ));
        }
        let anti = |p: f64| at(p).powf(q + 1.0) / (terms.linear * (q + 1.0));
        return Ok(anti(b) - anti(a));
    }
    // Pure power piece: (c p^e)^q.
    if terms.konst == 0.0
        && terms.linear == 0.0
        && terms.recip == 0.0
        && terms.log == 0.0
        && terms.exps.is_empty()
        && terms.powers.len() == 1
    {
        let (c, e) = terms.powers[0];
        if c > 0.0 {
            let eq = e * q;
            let cq = c.powf(q);
            if eq == -1.0 {
                return Ok(cq * (b.ln() - a.ln()));
            }
            let anti = |p: f64| cq * p.powf(eq + 1.0) / (eq + 1.0);
            if eq <= -1.0 && a == 0.0 {
                return Err(Error::Capability("power integral diverges at 0".into()));
            }
            return Ok(anti(b) - anti(a));
        }
    }
    // Small integer exponents expand within the monomial family.
    if q.fract() == 0.0 && (2.0..=12.0).contains(&q) {
        if let Some(expanded) = terms.pow_int(q as u32) {
            if a == 0.0 {
                if let Some(v) = expanded.integral_from_zero(b) {
                    return Ok(v);
                }
            } else {
                return Ok(expanded.integral(a, b));
            }
        }
    }
    // Transcendental remainder: adaptive quadrature. The integrand is
    // continuous on (a, b]; a possible endpoint singularity at 0 is
    // integrable for log-type profiles.
    let f = |p: f64| terms.eval(p).powf(q);
    let lo = if a == 0.0 { 1e-300 } else { a };
    Ok(adaptive_simpson(&f, lo, b, 1e-9))
}

/// `m_{q,λ}(a, b) = (λ a^{-1/q} + (1-λ) b^{-1/q})^{-q}`, the power-mean
/// interpolation that tends to the weighted geometric mean as q grows.
pub fn power_geometric_mean(a: f64, b: f64, lambda: f64, q: f64) -> f64 {
    assert!(a > 0.0 && b > 0.0, "power-geometric mean needs positive arguments");
    (lambda * a.powf(-1.0 / q) + (1.0 - lambda) * b.powf(-1.0 / q)).powf(-q)
}

/// Verdicts of the grid convexity comparison between power-composed and
/// exponential-composed views of a scalar function.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ConvexityEquivalenceReport {
    /// (q, convex, concave) verdicts for `t ↦ f(t^{-q})`.
    pub per_q: Vec<(f64, bool, bool)>,
    /// Verdicts for `t ↦ f(e^{-t})`.
    pub exp_convex: bool,
    pub exp_concave: bool,
    pub f_nondecreasing: bool,
    pub f_nonincreasing: bool,
    /// All-q convexity implies exp-convexity (and the concave twin).
    pub forward_convex_holds: bool,
    pub forward_concave_holds: bool,
    /// Monotone converses; absent when the function is not monotone in
    /// the required direction.
    pub converse_convex_holds: Option<bool>,
    pub converse_concave_holds: Option<bool>,
}

/// Grid check of the equivalence between all-power convexity and
/// exponential convexity of compositions of `f`.
pub fn convexity_equivalence_check<F: Fn(f64) -> f64>(
    f: F,
    qs: &[f64],
    grid: &[f64],
    require_converse: bool,
) -> Result<ConvexityEquivalenceReport> {
    if grid.len() < 3 {
        return Err(Error::Argument("grid needs at least three points".into()));
    }
    for w in grid.windows(2) {
        if !(w[0] > 0.0 && w[1] > w[0]) {
            return Err(Error::Argument(
                "grid must be positive and strictly increasing".into(),
            ));
        }
    }
    let mut per_q = Vec::with_capacity(qs.len());
    let mut args: Vec<f64> = Vec::new();
    for &q in qs {
        if !(q > 0.0) {
            return Err(Error::Argument(format!("exponent {q} must be positive")));
        }
        let ys: Vec<f64> = grid
            .iter()
            .map(|&t| {
                let x = t.powf(-q);
                args.push(x);
                f(x)
            })
            .collect();
        let (cvx, _, _) = grid_convexity(grid, &ys, CONVEXITY_TOL);
        let neg: Vec<f64> = ys.iter().map(|y| -y).collect();
        let (ccv, _, _) = grid_convexity(grid, &neg, CONVEXITY_TOL);
        per_q.push((q, cvx, ccv));
    }
    let exp_ys: Vec<f64> = grid
        .iter()
        .map(|&t| {
            let x = (-t).exp();
            args.push(x);
            f(x)
        })
        .collect();
    let (exp_convex, _, _) = grid_convexity(grid, &exp_ys, CONVEXITY_TOL);
    let neg: Vec<f64> = exp_ys.iter().map(|y| -y).collect();
    let (exp_concave, _, _) = grid_convexity(grid, &neg, CONVEXITY_TOL);

    // Monotonicity of f itself over every argument the compositions hit.
    args.sort_by(f64::total_cmp);
    args.dedup();
    let vals: Vec<f64> = args.iter().map(|&x| f(x)).collect();
    let slack = |v: f64| CONVEXITY_TOL * 1.0f64.max(v.abs());
    let f_nondecreasing = vals.windows(2).all(|w| w[1] >= w[0] - slack(w[0]));
    let f_nonincreasing = vals.windows(2).all(|w| w[1] <= w[0] + slack(w[0]));

    if require_converse && !f_nondecreasing && !f_nonincreasing {
        return Err(Error::Precondition {
            message: "converse check requires a monotone function".into(),
            witness: None,
        });
    }

    let all_q_convex = per_q.iter().all(|&(_, c, _)| c);
    let all_q_concave = per_q.iter().all(|&(_, _, c)| c);
    Ok(ConvexityEquivalenceReport {
        per_q,
        exp_convex,
        exp_concave,
        f_nondecreasing,
        f_nonincreasing,
        forward_convex_holds: !all_q_convex || exp_convex,
        forward_concave_holds: !all_q_concave || exp_concave,
        converse_convex_holds: f_nondecreasing.then_some(!exp_convex || all_q_convex),
        converse_concave_holds: f_nonincreasing.then_some(!exp_concave || all_q_concave),
    })
}
