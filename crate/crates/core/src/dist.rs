//! Probability measures on ℝ and their survival / tail-quantile curves.

use std::sync::Arc;

use rand::distributions::Open01;
use rand::Rng;
use serde::{Deserialize, Serialize};
use statrs::function::gamma::gamma;

use crate::curve::{FuncTerms, MonotoneCurve, SegForm, Tail};
use crate::error::{Error, Result};
use crate::ext::{ExtReal, Interval};

const MASS_SUM_TOL: f64 = 1e-12;

/// Tagged representation of a probability measure on ℝ.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Distribution {
    /// Finite atomic measure; atoms are (value, mass) with strictly
    /// increasing values and masses summing to 1.
    Discrete { atoms: Vec<(f64, f64)> },
    /// Continuous measure given by a piecewise-linear CDF on knots
    /// (t, F(t)) with F(first) = 0 and F(last) = 1.
    PiecewiseLinearCdf { knots: Vec<(f64, f64)> },
    Exponential { rate: f64 },
    /// Survival S(t) = min(1, (t/scale)^{-exponent}); exponent > 1 keeps
    /// the expectation finite.
    Pareto { exponent: f64, scale: f64 },
    Uniform { a: f64, b: f64 },
}

use Distribution::*;

impl Distribution {
    pub fn dirac(c: f64) -> Distribution {
        Discrete {
            atoms: vec![(c, 1.0)],
        }
    }

    pub fn bernoulli(p: f64) -> Distribution {
        assert!((0.0..=1.0).contains(&p));
        if p == 0.0 {
            Self::dirac(0.0)
        } else if p == 1.0 {
            Self::dirac(1.0)
        } else {
            Discrete {
                atoms: vec![(0.0, 1.0 - p), (1.0, p)],
            }
        }
    }

    pub fn validate(&self) -> Result<()> {
        match self {
            Discrete { atoms } => {
                if atoms.is_empty() {
                    return Err(Error::Argument("discrete law needs at least one atom".into()));
                }
                let mut sum = 0.0;
                for (i, &(v, m)) in atoms.iter().enumerate() {
                    if !v.is_finite() || !m.is_finite() || m <= 0.0 {
                        return Err(Error::Argument(format!("bad atom {i}: ({v}, {m})")));
                    }
                    if i > 0 && v <= atoms[i - 1].0 {
                        return Err(Error::Argument(
                            "atom values must be strictly increasing".into(),
                        ));
                    }
                    sum += m;
                }
                if (sum - 1.0).abs() > MASS_SUM_TOL {
                    return Err(Error::Argument(format!(
                        "atom masses sum to {sum}, expected 1"
                    )));
                }
                Ok(())
            }
            PiecewiseLinearCdf { knots } => {
                if knots.len() < 2 {
                    return Err(Error::Argument("piecewise CDF needs at least two knots".into()));
                }
                for w in knots.windows(2) {
                    if w[1].0 <= w[0].0 {
                        return Err(Error::Argument("knot abscissas must increase".into()));
                    }
                    if w[1].1 < w[0].1 {
                        return Err(Error::Argument("CDF must be nondecreasing".into()));
                    }
                }
                if knots[0].1 != 0.0 || (knots[knots.len() - 1].1 - 1.0).abs() > MASS_SUM_TOL {
                    return Err(Error::Argument("CDF must run from 0 to 1".into()));
                }
                Ok(())
            }
            Exponential { rate } => {
                if !(*rate > 0.0) || !rate.is_finite() {
                    return Err(Error::Argument("rate must be positive".into()));
                }
                Ok(())
            }
            Pareto { exponent, scale } => {
                if !(*exponent > 1.0) || !exponent.is_finite() {
                    return Err(Error::Argument(
                        "tail exponent must exceed 1 for a finite expectation".into(),
                    ));
                }
                if !(*scale > 0.0) || !scale.is_finite() {
                    return Err(Error::Argument("scale must be positive".into()));
                }
                Ok(())
            }
            Uniform { a, b } => {
                if !(a < b) || !a.is_finite() || !b.is_finite() {
                    return Err(Error::Argument("uniform needs a < b".into()));
                }
                Ok(())
            }
        }
    }

    /// Survival operator `t ↦ [P(X > t), P(X ≥ t)]`.
    pub fn survival_curve(&self) -> MonotoneCurve {
        match self {
            Discrete { atoms } => {
                let mut verts = Vec::with_capacity(2 * atoms.len());
                let mut above = 1.0; // P(X >= v_i)
                for &(v, m) in atoms {
                    verts.push((v, above));
                    above -= m;
                    verts.push((v, above.max(0.0)));
                }
                // Force the terminal level to exactly zero.
                if let Some(last) = verts.last_mut() {
                    last.1 = 0.0;
                }
                let segs = vec![SegForm::Affine; verts.len() - 1];
                MonotoneCurve::from_parts(verts, segs, Tail::Horizontal, Tail::Horizontal)
                    .expect("discrete survival curve is valid")
            }
            PiecewiseLinearCdf { knots } => {
                let mut verts: Vec<(f64, f64)> =
                    knots.iter().map(|&(t, f)| (t, 1.0 - f)).collect();
                if let Some(last) = verts.last_mut() {
                    last.1 = 0.0;
                }
                let segs = vec![SegForm::Affine; verts.len() - 1];
                MonotoneCurve::from_parts(verts, segs, Tail::Horizontal, Tail::Horizontal)
                    .expect("piecewise survival curve is valid")
            }
            Exponential { rate } => {
                let f = Arc::new(FuncTerms::exponential(1.0, -rate));
                let hi = 16.0 / rate;
                let xs = crate::curve::refine(&f, 0.0, hi);
                let mut verts: Vec<(f64, f64)> = xs.iter().map(|&x| (x, f.eval(x))).collect();
                verts[0].1 = 1.0;
                let segs = vec![SegForm::Func(f.clone()); verts.len() - 1];
                MonotoneCurve::from_parts(
                    verts,
                    segs,
                    Tail::Horizontal,
                    Tail::Curve {
                        f,
                        of_y: false,
                        limit: ExtReal::POS_INF,
                    },
                )
                .expect("exponential survival curve is valid")
            }
            Pareto { exponent, scale } => {
                let f = Arc::new(FuncTerms::power(scale.powf(*exponent), -exponent));
                let hi = scale * 32.0;
                let xs = crate::curve::refine(&f, *scale, hi);
                let mut verts: Vec<(f64, f64)> = xs.iter().map(|&x| (x, f.eval(x))).collect();
                verts[0].1 = 1.0;
                let segs = vec![SegForm::Func(f.clone()); verts.len() - 1];
                MonotoneCurve::from_parts(
                    verts,
                    segs,
                    Tail::Horizontal,
                    Tail::Curve {
                        f,
                        of_y: false,
                        limit: ExtReal::POS_INF,
                    },
                )
                .expect("pareto survival curve is valid")
            }
            Uniform { a, b } => MonotoneCurve::polyline(
                vec![(*a, 1.0), (*b, 0.0)],
                Tail::Horizontal,
                Tail::Horizontal,
            )
            .expect("uniform survival curve is valid"),
        }
    }

    /// Tail-quantile operator, exactly the graph transpose of the
    /// survival operator.
    pub fn tail_quantile_curve(&self) -> MonotoneCurve {
        self.survival_curve().invert()
    }

    /// Expectation, in closed form per family.
    pub fn expectation(&self) -> Result<f64> {
        Ok(match self {
            Discrete { atoms } => atoms.iter().map(|&(v, m)| v * m).sum(),
            PiecewiseLinearCdf { knots } => {
                // Piecewise-uniform density: each knot interval carries
                // mass dF at mean midpoint.
                knots
                    .windows(2)
                    .map(|w| {
                        let ((t0, f0), (t1, f1)) = (w[0], w[1]);
                        (f1 - f0) * 0.5 * (t0 + t1)
                    })
                    .sum()
            }
            Exponential { rate } => 1.0 / rate,
            Pareto { exponent, scale } => scale * exponent / (exponent - 1.0),
            Uniform { a, b } => 0.5 * (a + b),
        })
    }

    /// Raw moment `E[X^q] = ∫₀^∞ T(p)^q dp` for laws supported on
    /// `[0, ∞)`.
    pub fn moment(&self, q: f64) -> Result<f64> {
        if !(q > 0.0) || !q.is_finite() {
            return Err(Error::Argument(format!("moment order must be positive, got {q}")));
        }
        let support_lo = self.support_lo();
        if support_lo < 0.0 {
            return Err(Error::Capability(
                "moments are defined for laws supported on [0, inf)".into(),
            ));
        }
        Ok(match self {
            Discrete { atoms } => atoms.iter().map(|&(v, m)| m * v.powf(q)).sum(),
            PiecewiseLinearCdf { knots } => knots
                .windows(2)
                .map(|w| {
                    let ((t0, f0), (t1, f1)) = (w[0], w[1]);
                    // Uniform chunk of mass (f1-f0) on [t0, t1].
                    (f1 - f0) * (t1.powf(q + 1.0) - t0.powf(q + 1.0)) / ((q + 1.0) * (t1 - t0))
                })
                .sum(),
            Exponential { rate } => gamma(q + 1.0) / rate.powf(q),
            Pareto { exponent, scale } => {
                if q >= *exponent {
                    return Err(Error::Capability(format!(
                        "moment of order {q} diverges for tail exponent {exponent}"
                    )));
                }
                scale.powf(q) * exponent / (exponent - q)
            }
            Uniform { a, b } => (b.powf(q + 1.0) - a.powf(q + 1.0)) / ((q + 1.0) * (b - a)),
        })
    }

    fn support_lo(&self) -> f64 {
        match self {
            Discrete { atoms } => atoms[0].0,
            PiecewiseLinearCdf { knots } => knots[0].0,
            Exponential { .. } => 0.0,
            Pareto { scale, .. } => *scale,
            Uniform { a, .. } => *a,
        }
    }

    /// The full tail-quantile value at a level `p ∈ [0, 1]`, in closed
    /// form. `None` when the level is not attained (e.g. level 0 for
    /// laws with unbounded support).
    pub fn tail_quantile_interval(&self, p: f64) -> Option<Interval> {
        assert!((0.0..=1.0).contains(&p), "tail level must be in [0, 1]");
        match self {
            Discrete { atoms } => {
                // Suffix masses: s_i = P(X >= v_i), decreasing in i... s_0 = 1.
                if p == 0.0 {
                    return Some(Interval::new(
                        ExtReal::new(atoms[atoms.len() - 1].0),
                        ExtReal::POS_INF,
                    ));
                }
                if p == 1.0 {
                    return Some(Interval::new(ExtReal::NEG_INF, ExtReal::new(atoms[0].0)));
                }
                // Levels between suffix sums select a single atom; exact
                // suffix-sum levels span between neighbouring atoms.
                let n = atoms.len();
                let mut above = 0.0; // P(X > v_i) walking from the top
                let mut hi_atom = atoms[n - 1].0;
                for i in (0..n).rev() {
                    let (v, m) = atoms[i];
                    let at_least = above + m; // P(X >= v)
                    if p < at_least && p > above {
                        return Some(Interval::point(v));
                    }
                    if p == above {
                        // Level exactly between atom i and the one above.
                        return Some(Interval::of(v, hi_atom));
                    }
                    above = at_least;
                    hi_atom = v;
                }
                // p == 1 was handled; p == P(X >= v_0) = 1 within rounding.
                Some(Interval::new(ExtReal::NEG_INF, ExtReal::new(atoms[0].0)))
            }
            PiecewiseLinearCdf { knots } => {
                let n = knots.len();
                if p == 0.0 {
                    return Some(Interval::new(
                        ExtReal::new(knots[n - 1].0),
                        ExtReal::POS_INF,
                    ));
                }
                if p == 1.0 {
                    return Some(Interval::new(ExtReal::NEG_INF, ExtReal::new(knots[0].0)));
                }
                // Find the knot interval with 1 - F crossing p.
                for w in knots.windows(2) {
                    let ((t0, f0), (t1, f1)) = (w[0], w[1]);
                    let (s0, s1) = (1.0 - f0, 1.0 - f1);
                    if p <= s0 && p >= s1 {
                        if s0 == s1 {
                            return Some(Interval::of(t0, t1));
                        }
                        let t = t0 + (t1 - t0) * (s0 - p) / (s0 - s1);
                        return Some(Interval::point(t));
                    }
                }
                None
            }
            Exponential { rate } => {
                if p == 0.0 {
                    None
                } else if p == 1.0 {
                    Some(Interval::new(ExtReal::NEG_INF, ExtReal::new(0.0)))
                } else {
                    Some(Interval::point(-p.ln() / rate))
                }
            }
            Pareto { exponent, scale } => {
                if p == 0.0 {
                    None
                } else if p == 1.0 {
                    Some(Interval::new(ExtReal::NEG_INF, ExtReal::new(*scale)))
                } else {
                    Some(Interval::point(scale * p.powf(-1.0 / exponent)))
                }
            }
            Uniform { a, b } => {
                if p == 0.0 {
                    Some(Interval::new(ExtReal::new(*b), ExtReal::POS_INF))
                } else if p == 1.0 {
                    Some(Interval::new(ExtReal::NEG_INF, ExtReal::new(*a)))
                } else {
                    Some(Interval::point(b - p * (b - a)))
                }
            }
        }
    }

    /// Lower endpoint of the tail quantile at an interior level; the
    /// inverse-transform sampling kernel.
    pub fn tail_quantile_lower(&self, p: f64) -> f64 {
        debug_assert!(p > 0.0 && p < 1.0, "interior tail level expected");
        match self {
            Discrete { atoms } => {
                let n = atoms.len();
                let mut above = 0.0;
                for i in (0..n).rev() {
                    let (v, m) = atoms[i];
                    if p <= above + m {
                        return v;
                    }
                    above += m;
                }
                atoms[0].0
            }
            PiecewiseLinearCdf { .. } => self
                .tail_quantile_interval(p)
                .expect("interior level always attained")
                .lo()
                .value(),
            Exponential { rate } => -p.ln() / rate,
            Pareto { exponent, scale } => scale * p.powf(-1.0 / exponent),
            Uniform { a, b } => b - p * (b - a),
        }
    }

    /// Survival values `[P(X > t), P(X ≥ t)]` in closed form.
    pub fn survival_interval(&self, t: f64) -> Interval {
        match self {
            Discrete { atoms } => {
                let gt: f64 = atoms.iter().filter(|&&(v, _)| v > t).map(|&(_, m)| m).sum();
                let ge: f64 = atoms
                    .iter()
                    .filter(|&&(v, _)| v >= t)
                    .map(|&(_, m)| m)
                    .sum();
                Interval::of(gt.min(1.0), ge.min(1.0))
            }
            PiecewiseLinearCdf { knots } => {
                let n = knots.len();
                if t <= knots[0].0 {
                    return Interval::point(1.0);
                }
                if t >= knots[n - 1].0 {
                    return Interval::point(0.0);
                }
                for w in knots.windows(2) {
                    let ((t0, f0), (t1, f1)) = (w[0], w[1]);
                    if t >= t0 && t <= t1 {
                        let f = f0 + (f1 - f0) * (t - t0) / (t1 - t0);
                        return Interval::point(1.0 - f);
                    }
                }
                unreachable!()
            }
            Exponential { rate } => {
                if t < 0.0 {
                    Interval::point(1.0)
                } else {
                    Interval::point((-rate * t).exp())
                }
            }
            Pareto { exponent, scale } => {
                if t <= *scale {
                    Interval::point(1.0)
                } else {
                    Interval::point((t / scale).powf(-exponent))
                }
            }
            Uniform { a, b } => {
                if t <= *a {
                    Interval::point(1.0)
                } else if t >= *b {
                    Interval::point(0.0)
                } else {
                    Interval::point((b - t) / (b - a))
                }
            }
        }
    }

    /// Cumulative distribution function (continuous laws only need it
    /// for goodness-of-fit statistics).
    pub fn cdf(&self, t: f64) -> f64 {
        1.0 - self.survival_interval(t).lo().value()
    }

    /// Inverse-transform sample: the lower tail-quantile endpoint at a
    /// uniform level drawn from the open unit interval.
    pub fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> f64 {
        let u: f64 = rng.sample(Open01);
        self.tail_quantile_lower(u)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curve::Axis;
    use rand::SeedableRng;
    use rand_chacha::ChaCha12Rng;

    fn bern_half() -> Distribution {
        Distribution::bernoulli(0.5)
    }

    #[test]
    fn survival_examples() {
        let b = bern_half().survival_curve();
        assert_eq!(b.eval(0.0).unwrap(), Interval::of(0.5, 1.0));
        assert_eq!(b.eval(0.5).unwrap(), Interval::point(0.5));
        assert_eq!(b.eval(1.0).unwrap(), Interval::of(0.0, 0.5));
        assert_eq!(b.eval(-3.0).unwrap(), Interval::point(1.0));
        assert_eq!(b.eval(2.0).unwrap(), Interval::point(0.0));

        let e = Exponential { rate: 1.0 }.survival_curve();
        let v = e.eval(std::f64::consts::LN_2).unwrap().lo().value();
        assert!((v - 0.5).abs() < 1e-15);

        let d = Distribution::dirac(2.5).survival_curve();
        let incr = MonotoneCurve::incr(2.5);
        for t in [-1.0, 2.5, 3.0] {
            assert_eq!(d.eval(t).unwrap(), incr.eval(t).unwrap());
        }
    }

    #[test]
    fn tail_quantile_examples() {
        let t = bern_half().tail_quantile_curve();
        assert_eq!(t.eval(0.25).unwrap(), Interval::point(1.0));
        assert_eq!(t.eval(0.75).unwrap(), Interval::point(0.0));
        assert_eq!(t.eval(0.5).unwrap(), Interval::of(0.0, 1.0));

        let te = Exponential { rate: 1.0 }.tail_quantile_curve();
        for p in [0.1, 0.5, 0.9] {
            let v = te.eval(p).unwrap().lo().value();
            assert!((v - (-p.ln())).abs() < 1e-14);
        }

        let tu = Uniform { a: 0.0, b: 1.0 }.tail_quantile_curve();
        for p in [0.2, 0.5, 0.8] {
            let v = tu.eval(p).unwrap().lo().value();
            assert!((v - (1.0 - p)).abs() < 1e-15);
        }
    }

    #[test]
    fn closed_form_quantiles_match_curve_route() {
        let dists = [
            bern_half(),
            Discrete {
                atoms: vec![(-1.0, 0.25), (0.5, 0.25), (2.0, 0.5)],
            },
            Exponential { rate: 2.0 },
            Pareto {
                exponent: 2.0,
                scale: 1.0,
            },
            Uniform { a: -1.0, b: 3.0 },
        ];
        for d in &dists {
            let curve = d.tail_quantile_curve();
            for k in 1..40 {
                let p = k as f64 / 40.0;
                let via_curve = curve.eval(p).unwrap();
                let closed = d.tail_quantile_interval(p).unwrap();
                assert!(
                    (via_curve.lo().value() - closed.lo().value()).abs() < 1e-9
                        && (via_curve.hi().value() - closed.hi().value()).abs() < 1e-9,
                    "{d:?} at {p}: curve {via_curve} vs closed {closed}"
                );
            }
        }
    }

    #[test]
    fn expectations() {
        assert_eq!(bern_half().expectation().unwrap(), 0.5);
        assert_eq!(Exponential { rate: 4.0 }.expectation().unwrap(), 0.25);
        assert_eq!(
            Pareto {
                exponent: 2.0,
                scale: 1.0
            }
            .expectation()
            .unwrap(),
            2.0
        );
        assert_eq!(Uniform { a: 0.0, b: 1.0 }.expectation().unwrap(), 0.5);
    }

    #[test]
    fn expectation_matches_quantile_integral() {
        let dists = [
            bern_half(),
            Discrete {
                atoms: vec![(-2.0, 0.3), (0.0, 0.2), (1.5, 0.5)],
            },
            Exponential { rate: 1.0 },
            Pareto {
                exponent: 3.0,
                scale: 0.5,
            },
            Uniform { a: -1.0, b: 2.0 },
        ];
        for d in &dists {
            let t = d.tail_quantile_curve();
            let integral = t.integrate(0.0, 1.0).unwrap();
            let e = d.expectation().unwrap();
            assert!((integral - e).abs() < 1e-10, "{d:?}: {integral} vs {e}");
        }
    }

    #[test]
    fn moments() {
        assert_eq!(bern_half().moment(3.0).unwrap(), 0.5);
        let m2 = Exponential { rate: 1.0 }.moment(2.0).unwrap();
        assert!((m2 - 2.0).abs() < 1e-12);
        assert_eq!(Distribution::dirac(2.0).moment(5.0).unwrap(), 32.0);
        let m = Pareto {
            exponent: 2.0,
            scale: 1.0,
        }
        .moment(1.5)
        .unwrap();
        assert!((m - 4.0).abs() < 1e-12);
        assert!(Pareto {
            exponent: 2.0,
            scale: 1.0
        }
        .moment(2.0)
        .is_err());
        assert!(Discrete {
            atoms: vec![(-1.0, 0.5), (1.0, 0.5)]
        }
        .moment(2.0)
        .is_err());
    }

    #[test]
    fn moment_one_is_expectation() {
        let dists = [
            bern_half(),
            Exponential { rate: 0.7 },
            Pareto {
                exponent: 4.0,
                scale: 2.0,
            },
            Uniform { a: 0.5, b: 3.0 },
        ];
        for d in &dists {
            assert!(
                (d.moment(1.0).unwrap() - d.expectation().unwrap()).abs() < 1e-10,
                "{d:?}"
            );
        }
    }

    #[test]
    fn survival_values_stay_in_unit_interval() {
        let d = Discrete {
            atoms: vec![(0.0, 0.25), (1.0, 0.25), (2.0, 0.5)],
        };
        let s = d.survival_curve();
        for t in [-5.0, 0.0, 0.5, 1.0, 1.5, 2.0, 9.0] {
            let v = s.eval(t).unwrap();
            assert!(v.lo().value() >= 0.0 && v.hi().value() <= 1.0);
        }
        assert_eq!(s.right_tail(), &Tail::Horizontal);
        assert_eq!(s.left_tail(), &Tail::Horizontal);
    }

    #[test]
    fn dirac_sampling_is_constant() {
        let mut rng = ChaCha12Rng::seed_from_u64(7);
        let d = Distribution::dirac(3.25);
        for _ in 0..100 {
            assert_eq!(d.sample(&mut rng), 3.25);
        }
    }

    #[test]
    fn bernoulli_sampling_frequency() {
        let mut rng = ChaCha12Rng::seed_from_u64(12345);
        let d = bern_half();
        let n = 1_000_000;
        let ones = (0..n).filter(|_| d.sample(&mut rng) == 1.0).count();
        let frac = ones as f64 / n as f64;
        assert!((0.4985..=0.5015).contains(&frac), "frac = {frac}");
    }

    #[test]
    fn exponential_sampling_ks() {
        let mut rng = ChaCha12Rng::seed_from_u64(99);
        let d = Exponential { rate: 1.0 };
        let n = 1_000_000;
        let mut xs: Vec<f64> = (0..n).map(|_| d.sample(&mut rng)).collect();
        xs.sort_by(f64::total_cmp);
        let ks = crate::stats::ks_statistic(&xs, |x| d.cdf(x));
        assert!(ks < 0.002, "ks = {ks}");
    }

    #[test]
    fn scaled_survival_is_distribution_of_scaled_variable() {
        // Sanity for the x-axis scaling used by bound assembly.
        let d = Exponential { rate: 1.0 };
        let s = d.survival_curve().scale(2.0, Axis::X).unwrap();
        let v = s.eval(2.0).unwrap().lo().value();
        assert!((v - (-1.0f64).exp()).abs() < 1e-14);
    }

    #[test]
    fn distribution_json_round_trip() {
        let d = Discrete {
            atoms: vec![(0.0, 0.5), (1.0, 0.5)],
        };
        let j = serde_json::to_string(&d).unwrap();
        assert!(j.contains("\"kind\":\"discrete\""));
        let back: Distribution = serde_json::from_str(&j).unwrap();
        assert_eq!(back, d);
        let e: Distribution =
            serde_json::from_str(r#"{"kind":"exponential","rate":1.5}"#).unwrap();
        assert_eq!(e, Exponential { rate: 1.5 });
    }

    #[test]
    fn validation_rejects_bad_inputs() {
        assert!(Discrete {
            atoms: vec![(0.0, 0.5), (0.0, 0.5)]
        }
        .validate()
        .is_err());
        assert!(Discrete {
            atoms: vec![(0.0, 0.6), (1.0, 0.6)]
        }
        .validate()
        .is_err());
        assert!(Exponential { rate: 0.0 }.validate().is_err());
        assert!(Pareto {
            exponent: 1.0,
            scale: 1.0
        }
        .validate()
        .is_err());
        assert!(Uniform { a: 1.0, b: 1.0 }.validate().is_err());
    }
}
