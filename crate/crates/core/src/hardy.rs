//! Running-average (Hardy) transform of tail-quantile curves, the
//! normalized mean gap, and the two-jump limiting survival profile.
//!
//! `H(f)(p) = (1/p)∫₀ᵖ f` applied to a tail-quantile operator is the
//! expected-shortfall profile of the law; its value at 1 is the mean.

use serde::{Deserialize, Serialize};

use crate::curve::{FuncTerms, MonotoneCurve, SegForm, Tail};
use crate::dist::Distribution;
use crate::error::{Error, Result};
use crate::ext::{ExtReal, Interval};

/// One closed-form piece of a Hardy profile; `terms` typically reads
/// `a + b·p + c/p` plus log/power carries from transcendental inputs.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct HardySeg {
    pub p_lo: f64,
    /// Upper endpoint; `inf` for the unbounded final piece.
    pub p_hi: ExtReal,
    pub terms: FuncTerms,
}

/// The Hardy transform of a tail-quantile-like curve, with exact
/// per-segment coefficients and a curve view for order comparisons.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct HardyProfile {
    pub base: MonotoneCurve,
    pub segments: Vec<HardySeg>,
    /// `H(f)(0) = f(0)` when 0 is attained by the input.
    pub endpoint_zero: Option<Interval>,
    /// `(p_f, (1/p_f)∫₀^{p_f} f)`; the value there is the half-line
    /// `(-inf, hi]`.
    pub endpoint_pf: Option<(f64, f64)>,
    curve: MonotoneCurve,
}

impl HardyProfile {
    /// Curve view of the profile (for order comparisons and plotting).
    pub fn curve(&self) -> &MonotoneCurve {
        &self.curve
    }

    /// Upper domain endpoint of the input curve.
    pub fn p_sup(&self) -> ExtReal {
        match self.endpoint_pf {
            Some((p_f, _)) => ExtReal::new(p_f),
            None => ExtReal::POS_INF,
        }
    }

    /// Full interval value at `p`.
    pub fn eval(&self, p: f64) -> Result<Interval> {
        if let Some((p_f, hi)) = self.endpoint_pf {
            if p == p_f {
                return Ok(Interval::new(ExtReal::NEG_INF, ExtReal::new(hi)));
            }
        }
        if p == 0.0 {
            if let Some(z) = self.endpoint_zero {
                return Ok(z);
            }
        }
        if p > 0.0 {
            if let Some(seg) = self.segment_at(p) {
                return Ok(Interval::point(seg.terms.eval(p)));
            }
        }
        Err(Error::Domain {
            x: p,
            dom: Interval::new(
                ExtReal::new(0.0),
                self.p_sup(),
            ),
        })
    }

    /// Singleton value on the open interior `(0, p_f)`.
    pub fn value(&self, p: f64) -> Result<f64> {
        if p > 0.0 {
            if let Some(seg) = self.segment_at(p) {
                return Ok(seg.terms.eval(p));
            }
        }
        Err(Error::Domain {
            x: p,
            dom: Interval::new(ExtReal::new(0.0), self.p_sup()),
        })
    }

    fn segment_at(&self, p: f64) -> Option<&HardySeg> {
        if p <= 0.0 {
            return None;
        }
        let idx = self.segments.partition_point(|s| ExtReal::new(p) > s.p_hi);
        let seg = self.segments.get(idx)?;
        if p >= seg.p_lo || idx == 0 {
            Some(seg)
        } else {
            None
        }
    }
}

/// Computes the Hardy transform of `f`.
///
/// `f` must be a tail-quantile-like curve: its domain starts at 0
/// (attained or as an asymptote) and its segments carry affine, power or
/// log forms integrable at 0.
pub fn hardy_transform(f: &MonotoneCurve) -> Result<HardyProfile> {
    let dom = f.domain();
    if dom.lo != ExtReal::new(0.0) {
        return Err(Error::Argument(format!(
            "hardy transform needs a domain starting at 0, got {}",
            dom.as_interval()
        )));
    }
    let verts = f.vertices();
    let x0 = verts[0].0;
    let (xn, yn) = *verts.last().unwrap();
    let p_f = dom.hi;

    let unsupported = || {
        Error::Capability(
            "hardy transform needs affine/power/log segment forms".into(),
        )
    };

    // Ordered list of (a, b, terms) regions covering (0, p_f).
    let mut regions: Vec<(f64, ExtReal, FuncTerms)> = Vec::new();
    if x0 > 0.0 {
        match f.left_tail() {
            Tail::Curve { f: tf, of_y: false, .. } => {
                regions.push((0.0, ExtReal::new(x0), (**tf).clone()));
            }
            _ => return Err(unsupported()),
        }
    }
    for i in 0..f.segments().len() {
        let (ax, ay) = verts[i];
        let (bx, by) = verts[i + 1];
        if bx == ax {
            continue; // jumps carry no mass
        }
        let terms = match &f.segments()[i] {
            SegForm::Affine => {
                let slope = (by - ay) / (bx - ax);
                FuncTerms::affine(ay - slope * ax, slope)
            }
            SegForm::Func(tf) => (**tf).clone(),
            SegForm::FuncOfY(_) => return Err(unsupported()),
        };
        regions.push((ax, ExtReal::new(bx), terms));
    }
    if p_f > ExtReal::new(xn) {
        match f.right_tail() {
            Tail::Horizontal => regions.push((xn, p_f, FuncTerms::constant(yn))),
            Tail::Ray { slope } => {
                regions.push((xn, p_f, FuncTerms::affine(yn - slope * xn, *slope)))
            }
            Tail::Curve { f: tf, of_y: false, .. } => {
                regions.push((xn, p_f, (**tf).clone()));
            }
            _ => return Err(unsupported()),
        }
    }
    if regions.is_empty() {
        return Err(Error::Argument(
            "hardy transform of a curve with an empty interior".into(),
        ));
    }

    // Accumulate ∫₀^x f across regions and emit the averaged pieces.
    let mut segments: Vec<HardySeg> = Vec::with_capacity(regions.len());
    let mut cum = 0.0f64;
    for (i, (a, b, terms)) in regions.iter().enumerate() {
        let c0 = if *a == 0.0 {
            // Antiderivatives of the permitted forms vanish at 0.
            0.0
        } else {
            cum - terms.antideriv_at(*a)
        };
        let h = terms
            .averaging_transform(c0)
            .ok_or_else(unsupported)?;
        segments.push(HardySeg {
            p_lo: *a,
            p_hi: *b,
            terms: h,
        });
        if b.is_finite() {
            cum += if *a == 0.0 {
                terms.integral_from_zero(b.value()).ok_or_else(|| {
                    Error::Capability("input is not integrable at 0 (infinite mean)".into())
                })?
            } else {
                terms.integral(*a, b.value())
            };
        } else if i + 1 != regions.len() {
            return Err(Error::Argument("unbounded region before the last".into()));
        }
        if !cum.is_finite() {
            return Err(Error::Capability(
                "input is not integrable at 0 (infinite mean)".into(),
            ));
        }
    }

    let endpoint_zero = if x0 == 0.0 { Some(f.eval(0.0)?) } else { None };
    let endpoint_pf = if p_f.is_finite() {
        Some((p_f.value(), cum / p_f.value()))
    } else {
        None
    };

    // Curve view: one vertex per region boundary, exact segment forms.
    let mut cverts: Vec<(f64, f64)> = Vec::with_capacity(segments.len() + 2);
    let mut csegs: Vec<SegForm> = Vec::with_capacity(segments.len() + 1);
    if let Some(z) = endpoint_zero {
        cverts.push((0.0, z.lo().value()));
    }
    for seg in &segments {
        if cverts.is_empty() && seg.p_lo > 0.0 {
            cverts.push((seg.p_lo, seg.terms.eval(seg.p_lo)));
        }
        if !seg.p_hi.is_finite() {
            // The unbounded final piece becomes the right tail below.
            continue;
        }
        let hi = seg.p_hi.value();
        let end_val = seg.terms.eval(hi);
        if cverts.is_empty() {
            // Domain open at 0: the view starts at this region's end and
            // the left tail carries the asymptote.
            cverts.push((hi, end_val));
            continue;
        }
        let prev = *cverts.last().unwrap();
        // Clamp tiny upward noise so the view stays monotone.
        let end = (hi, end_val.min(prev.1));
        if end != prev {
            let form = if seg.terms.is_affine() {
                SegForm::Affine
            } else {
                SegForm::Func(std::sync::Arc::new(seg.terms.clone()))
            };
            cverts.push(end);
            csegs.push(form);
        }
    }
    let left_tail = if endpoint_zero.is_some() {
        Tail::Vertical
    } else {
        Tail::Curve {
            f: std::sync::Arc::new(segments[0].terms.clone()),
            of_y: false,
            limit: ExtReal::new(0.0),
        }
    };
    let right_tail = if p_f.is_finite() {
        Tail::Vertical
    } else {
        Tail::Curve {
            f: std::sync::Arc::new(segments.last().unwrap().terms.clone()),
            of_y: false,
            limit: ExtReal::POS_INF,
        }
    };
    if cverts.is_empty() {
        // Fully asymptotic profile (open at 0, unbounded above): anchor
        // one vertex at an interior point.
        let anchor = 1.0f64;
        cverts.push((anchor, segments.last().unwrap().terms.eval(anchor)));
    }
    let curve = MonotoneCurve::from_parts(cverts, csegs, left_tail, right_tail)?;

    Ok(HardyProfile {
        base: f.clone(),
        segments,
        endpoint_zero,
        endpoint_pf,
        curve,
    })
}

/// Hardy transform of the tail-quantile curve of a law.
pub fn hardy_of(mu: &Distribution) -> Result<HardyProfile> {
    mu.validate()?;
    hardy_transform(&mu.tail_quantile_curve())
}

/// Normalized gap `Δ(p) = (H(T)(p) − E[X]) / (1 − p)` on `p ∈ (0, 1)`.
/// Nonnegative; zero exactly when the law is a point mass.
pub fn delta(mu: &Distribution, p: f64) -> Result<f64> {
    if !(p > 0.0 && p < 1.0) {
        return Err(Error::Argument(format!(
            "gap level must lie in (0, 1), got {p}"
        )));
    }
    let h = hardy_of(mu)?;
    delta_from_profile(&h, mu, p)
}

pub(crate) fn delta_from_profile(h: &HardyProfile, mu: &Distribution, p: f64) -> Result<f64> {
    let e = mu.expectation()?;
    let d = (h.value(p)? - e) / (1.0 - p);
    Ok(d.max(0.0))
}

/// The limiting two-jump survival profile at level `p`: 1 below
/// `H(T)(p) − Δ(p)`, the plateau `{p}` between the jumps, 0 above
/// `H(T)(p)`. At `p = 1` it degenerates to the unit step at the mean.
pub fn limiting_survival(mu: &Distribution, p: f64) -> Result<MonotoneCurve> {
    if !(p > 0.0 && p <= 1.0) {
        return Err(Error::Argument(format!(
            "level must lie in (0, 1], got {p}"
        )));
    }
    if p == 1.0 {
        return Ok(MonotoneCurve::incr(mu.expectation()?));
    }
    let (a, b) = limiting_jumps(mu, p)?;
    if a >= b {
        return Ok(MonotoneCurve::incr(b));
    }
    MonotoneCurve::polyline(
        vec![(a, 1.0), (a, p), (b, p), (b, 0.0)],
        Tail::Horizontal,
        Tail::Horizontal,
    )
}

/// Jump locations `(H(T)(p) − Δ(p), H(T)(p))` of the limiting profile.
pub fn limiting_jumps(mu: &Distribution, p: f64) -> Result<(f64, f64)> {
    if p == 1.0 {
        let e = mu.expectation()?;
        return Ok((e, e));
    }
    let h = hardy_of(mu)?;
    let b = h.value(p)?;
    let d = delta_from_profile(&h, mu, p)?;
    Ok((b - d, b))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dist::Distribution;

    const LN2: f64 = std::f64::consts::LN_2;

    #[test]
    fn hardy_of_pareto_tail_quantile() {
        // T(p) = p^{-1/2}; H(T)(p) = 2 p^{-1/2}; at 0.25 the value is 4.
        let mu = Distribution::Pareto {
            exponent: 2.0,
            scale: 1.0,
        };
        let h = hardy_of(&mu).unwrap();
        assert!((h.value(0.25).unwrap() - 4.0).abs() < 1e-12);
        for p in [1e-6f64, 0.01, 0.37, 0.99] {
            let expect = 2.0 * p.powf(-0.5);
            let got = h.value(p).unwrap();
            assert!(
                ((got - expect) / expect).abs() < 1e-12,
                "p={p}: {got} vs {expect}"
            );
        }
    }

    #[test]
    fn hardy_of_neg_log() {
        // H(-log) = 1 - log on (0, inf).
        let neg_log = MonotoneCurve::exp_profile().invert();
        let h = hardy_transform(&neg_log).unwrap();
        for p in [1e-8f64, 0.001, 0.5, 1.0 - 1e-9, 2.5] {
            let expect = 1.0 - p.ln();
            let got = h.value(p).unwrap();
            assert!(
                ((got - expect) / expect).abs() < 1e-12,
                "p={p}: {got} vs {expect}"
            );
        }
        assert!(h.endpoint_pf.is_none());
    }

    #[test]
    fn hardy_of_exponential_at_one_is_the_mean() {
        let mu = Distribution::Exponential { rate: 1.0 };
        let h = hardy_of(&mu).unwrap();
        let at_one = h.eval(1.0).unwrap();
        assert_eq!(at_one.lo(), ExtReal::NEG_INF);
        assert!((at_one.hi().value() - 1.0).abs() < 1e-10);
        // Interior values follow 1 - ln p.
        for p in [0.1, 0.5, 0.9] {
            assert!((h.value(p).unwrap() - (1.0 - p.ln())).abs() < 1e-10);
        }
    }

    #[test]
    fn hardy_of_bernoulli_is_piecewise() {
        let mu = Distribution::bernoulli(0.5);
        let h = hardy_of(&mu).unwrap();
        assert!((h.value(0.3).unwrap() - 1.0).abs() < 1e-15);
        assert!((h.value(0.75).unwrap() - 2.0 / 3.0).abs() < 1e-15);
        // H(0) = T(0) = [1, inf).
        let z = h.eval(0.0).unwrap();
        assert_eq!(z.lo(), ExtReal::new(1.0));
        assert_eq!(z.hi(), ExtReal::POS_INF);
        // Pieces agree at the junction.
        assert!((h.value(0.5 - 1e-13).unwrap() - h.value(0.5 + 1e-13).unwrap()).abs() < 1e-10);
    }

    #[test]
    fn hardy_rejects_divergent_inputs() {
        // T(p) = 1/p has infinite integral near 0.
        let c = MonotoneCurve::id_pow(1.0).unwrap();
        assert!(matches!(
            hardy_transform(&c),
            Err(Error::Capability(_))
        ));
    }

    #[test]
    fn delta_examples() {
        let exp = Distribution::Exponential { rate: 1.0 };
        let d = delta(&exp, 0.5).unwrap();
        assert!((d - 2.0 * LN2).abs() < 1e-12, "got {d}");

        let bern = Distribution::bernoulli(0.5);
        assert!((delta(&bern, 0.5).unwrap() - 1.0).abs() < 1e-12);

        let dirac = Distribution::dirac(3.0);
        for p in [0.1, 0.5, 0.9] {
            assert_eq!(delta(&dirac, p).unwrap(), 0.0);
        }
        assert!(delta(&exp, 0.0).is_err());
        assert!(delta(&exp, 1.0).is_err());
    }

    #[test]
    fn limiting_profile_of_exponential() {
        let mu = Distribution::Exponential { rate: 1.0 };
        let s = limiting_survival(&mu, 0.5).unwrap();
        let a = 1.0 - LN2;
        let b = 1.0 + LN2;
        assert_eq!(s.eval(a - 0.01).unwrap(), Interval::point(1.0));
        assert_eq!(s.eval(1.0).unwrap(), Interval::point(0.5));
        assert_eq!(s.eval(b + 0.01).unwrap(), Interval::point(0.0));
        let (ja, jb) = limiting_jumps(&mu, 0.5).unwrap();
        assert!((ja - a).abs() < 1e-12 && (jb - b).abs() < 1e-12);
    }

    #[test]
    fn limiting_profile_of_bernoulli_matches_survival() {
        let mu = Distribution::bernoulli(0.5);
        let s = limiting_survival(&mu, 0.5).unwrap();
        let surv = mu.survival_curve();
        for t in [-1.0, 0.0, 0.3, 0.5, 1.0, 2.0] {
            assert_eq!(s.eval(t).unwrap(), surv.eval(t).unwrap(), "t={t}");
        }
    }

    #[test]
    fn limiting_profile_at_one_is_step_at_mean() {
        let mu = Distribution::Exponential { rate: 2.0 };
        let s = limiting_survival(&mu, 1.0).unwrap();
        assert_eq!(s, MonotoneCurve::incr(0.5));
    }

    #[test]
    fn contact_point_on_the_upper_jump() {
        for (mu, p) in [
            (Distribution::Exponential { rate: 1.0 }, 0.3),
            (Distribution::bernoulli(0.5), 0.5),
            (
                Distribution::Pareto {
                    exponent: 2.0,
                    scale: 1.0,
                },
                0.7,
            ),
        ] {
            let (_, b) = limiting_jumps(&mu, p).unwrap();
            let s = limiting_survival(&mu, p).unwrap();
            let at_b = s.eval(b).unwrap();
            assert!(
                at_b.contains(ExtReal::new(p)),
                "{mu:?} p={p}: {at_b} misses {p}"
            );
        }
    }

    #[test]
    fn hardy_curve_view_leq_input() {
        // f <= H(f) as curves (spot check; the full property suite lives
        // in the acceptance tests).
        let mu = Distribution::bernoulli(0.25);
        let t = mu.tail_quantile_curve();
        let h = hardy_of(&mu).unwrap();
        assert!(t.leq(h.curve()));
    }

    #[test]
    fn hardy_segments_serialize() {
        let h = hardy_of(&Distribution::bernoulli(0.5)).unwrap();
        let j = serde_json::to_string(&h).unwrap();
        assert!(j.contains("segments"));
        let back: HardyProfile = serde_json::from_str(&j).unwrap();
        assert_eq!(back.segments, h.segments);
    }
}
