//! Maximally nonincreasing set-valued operators on the real line.
//!
//! A curve is stored as a planar polyline with nondecreasing x and
//! nonincreasing y (vertical runs encode jumps, horizontal runs encode
//! flats) plus two tail descriptors. Segments and tails may carry exact
//! closed-form evaluators so that survival/quantile operators of
//! parametric laws and their Hardy transforms evaluate without polyline
//! interpolation error; the vertex list is then an adaptively refined
//! cache used for serialization and merged-breakpoint comparisons.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ext::{interval_leq, interval_leq_tol, ExtReal, Interval};

/// Default sup-norm tolerance for polyline refinement of closed-form
/// segments (relative above magnitude 1).
pub const DEFAULT_REFINE_TOL: f64 = 1e-9;
/// Hard cap on refined vertex counts.
pub const MAX_REFINE_VERTS: usize = 1 << 18;

// ---------------------------------------------------------------------------
// Closed-form segment functions
// ---------------------------------------------------------------------------

/// A finite linear combination
/// `a + b·x + c/x + d·ln(x) + Σ pᵢ·x^eᵢ + Σ qᵢ·exp(rᵢ·x)`.
///
/// The family is closed under addition, axis scaling and the averaging
/// transform `f ↦ (C + ∫f)/x`, which is everything the bound assembly
/// needs. Terms with `x^0`, `x^1`, `x^{-1}` are normalized into the named
/// slots.
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct FuncTerms {
    #[serde(default, skip_serializing_if = "is_zero")]
    pub konst: f64,
    #[serde(default, skip_serializing_if = "is_zero")]
    pub linear: f64,
    #[serde(default, skip_serializing_if = "is_zero")]
    pub recip: f64,
    #[serde(default, skip_serializing_if = "is_zero")]
    pub log: f64,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub powers: Vec<(f64, f64)>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub exps: Vec<(f64, f64)>,
}

fn is_zero(v: &f64) -> bool {
    *v == 0.0
}

impl FuncTerms {
    pub fn constant(a: f64) -> Self {
        FuncTerms {
            konst: a,
            ..Default::default()
        }
    }

    pub fn affine(a: f64, b: f64) -> Self {
        FuncTerms {
            konst: a,
            linear: b,
            ..Default::default()
        }
    }

    /// `coef · x^expo`, normalizing integer special cases.
    pub fn power(coef: f64, expo: f64) -> Self {
        let mut t = FuncTerms::default();
        t.push_power(coef, expo);
        t
    }

    /// `coef · exp(rate·x)`.
    pub fn exponential(coef: f64, rate: f64) -> Self {
        let mut t = FuncTerms::default();
        t.push_exp(coef, rate);
        t
    }

    /// `a + d·ln(x)`.
    pub fn log_affine(a: f64, d: f64) -> Self {
        FuncTerms {
            konst: a,
            log: d,
            ..Default::default()
        }
    }

    fn push_power(&mut self, coef: f64, expo: f64) {
        if coef == 0.0 {
            return;
        }
        if expo == 0.0 {
            self.konst += coef;
        } else if expo == 1.0 {
            self.linear += coef;
        } else if expo == -1.0 {
            self.recip += coef;
        } else if let Some(slot) = self.powers.iter_mut().find(|(_, e)| *e == expo) {
            slot.0 += coef;
        } else {
            self.powers.push((coef, expo));
        }
    }

    fn push_exp(&mut self, coef: f64, rate: f64) {
        if coef == 0.0 {
            return;
        }
        if rate == 0.0 {
            self.konst += coef;
        } else if let Some(slot) = self.exps.iter_mut().find(|(_, r)| *r == rate) {
            slot.0 += coef;
        } else {
            self.exps.push((coef, rate));
        }
    }

    fn canonicalize(&mut self) {
        self.powers.retain(|(c, _)| *c != 0.0);
        self.exps.retain(|(c, _)| *c != 0.0);
        self.powers.sort_by(|a, b| a.1.total_cmp(&b.1));
        self.exps.sort_by(|a, b| a.1.total_cmp(&b.1));
    }

    pub fn is_affine(&self) -> bool {
        self.recip == 0.0 && self.log == 0.0 && self.powers.is_empty() && self.exps.is_empty()
    }

    pub fn eval(&self, x: f64) -> f64 {
        let mut y = self.konst + self.linear * x;
        if self.recip != 0.0 {
            y += self.recip / x;
        }
        if self.log != 0.0 {
            y += self.log * x.ln();
        }
        for &(c, e) in &self.powers {
            y += c * x.powf(e);
        }
        for &(c, r) in &self.exps {
            y += c * (r * x).exp();
        }
        y
    }

    pub fn deriv(&self, x: f64) -> f64 {
        let mut d = self.linear;
        if self.recip != 0.0 {
            d -= self.recip / (x * x);
        }
        if self.log != 0.0 {
            d += self.log / x;
        }
        for &(c, e) in &self.powers {
            d += c * e * x.powf(e - 1.0);
        }
        for &(c, r) in &self.exps {
            d += c * r * (r * x).exp();
        }
        d
    }

    pub fn add(&self, other: &FuncTerms) -> FuncTerms {
        let mut out = self.clone();
        out.konst += other.konst;
        out.linear += other.linear;
        out.recip += other.recip;
        out.log += other.log;
        for &(c, e) in &other.powers {
            out.push_power(c, e);
        }
        for &(c, r) in &other.exps {
            out.push_exp(c, r);
        }
        out.canonicalize();
        out
    }

    /// Multiplies two log-free, exp-free combinations (used to expand
    /// integer powers). Returns `None` when the product leaves the family.
    pub fn mul(&self, other: &FuncTerms) -> Option<FuncTerms> {
        if self.log != 0.0 || other.log != 0.0 || !self.exps.is_empty() || !other.exps.is_empty()
        {
            return None;
        }
        let monomials = |t: &FuncTerms| {
            let mut m = vec![];
            if t.konst != 0.0 {
                m.push((t.konst, 0.0));
            }
            if t.linear != 0.0 {
                m.push((t.linear, 1.0));
            }
            if t.recip != 0.0 {
                m.push((t.recip, -1.0));
            }
            m.extend(t.powers.iter().copied());
            m
        };
        let mut out = FuncTerms::default();
        for &(ca, ea) in &monomials(self) {
            for &(cb, eb) in &monomials(other) {
                out.push_power(ca * cb, ea + eb);
            }
        }
        out.canonicalize();
        Some(out)
    }

    pub fn pow_int(&self, n: u32) -> Option<FuncTerms> {
        let mut out = FuncTerms::constant(1.0);
        for _ in 0..n {
            out = out.mul(self)?;
        }
        Some(out)
    }

    /// All coefficients multiplied by `a` (the y-scaling `a·f`).
    pub fn scale_y(&self, a: f64) -> FuncTerms {
        let mut out = self.clone();
        out.konst *= a;
        out.linear *= a;
        out.recip *= a;
        out.log *= a;
        for p in &mut out.powers {
            p.0 *= a;
        }
        for e in &mut out.exps {
            e.0 *= a;
        }
        out
    }

    /// The substitution `x ↦ x/a`, i.e. the terms of `g(x) = f(x/a)`
    /// (x-axis stretched by `a > 0`).
    pub fn scale_x(&self, a: f64) -> FuncTerms {
        let mut out = FuncTerms {
            konst: self.konst - self.log * a.ln(),
            linear: self.linear / a,
            recip: self.recip * a,
            log: self.log,
            powers: Vec::new(),
            exps: Vec::new(),
        };
        for &(c, e) in &self.powers {
            out.push_power(c * a.powf(-e), e);
        }
        for &(c, r) in &self.exps {
            out.push_exp(c, r / a);
        }
        out.canonicalize();
        out
    }

    /// Antiderivative evaluated at `x` (integration constant 0). Requires
    /// `x > 0` whenever recip/log/fractional-power terms are present.
    pub fn antideriv_at(&self, x: f64) -> f64 {
        let mut v = self.konst * x + 0.5 * self.linear * x * x;
        if self.recip != 0.0 {
            v += self.recip * x.ln();
        }
        if self.log != 0.0 {
            v += self.log * (x * x.ln() - x);
        }
        for &(c, e) in &self.powers {
            v += c * x.powf(e + 1.0) / (e + 1.0);
        }
        for &(c, r) in &self.exps {
            v += c / r * (r * x).exp();
        }
        v
    }

    pub fn integral(&self, a: f64, b: f64) -> f64 {
        self.antideriv_at(b) - self.antideriv_at(a)
    }

    /// `∫₀ᵇ f`, or `None` when the integral diverges at 0⁺.
    pub fn integral_from_zero(&self, b: f64) -> Option<f64> {
        if self.recip != 0.0 {
            return None;
        }
        if self.powers.iter().any(|&(_, e)| e <= -1.0) {
            return None;
        }
        let mut v = self.konst * b + 0.5 * self.linear * b * b;
        if self.log != 0.0 {
            v += self.log * (b * b.ln() - b);
        }
        for &(c, e) in &self.powers {
            v += c * b.powf(e + 1.0) / (e + 1.0);
        }
        for &(c, r) in &self.exps {
            v += c / r * ((r * b).exp() - 1.0);
        }
        Some(v)
    }

    /// Terms of `p ↦ (c0 + F(p))/p` where `F` is the antiderivative of
    /// `self`. This is the running-average transform of one segment;
    /// `c0` absorbs the cumulative integral left of the segment. Requires
    /// a recip- and exp-free input (quantile-side curves satisfy this).
    pub fn averaging_transform(&self, c0: f64) -> Option<FuncTerms> {
        if self.recip != 0.0 || !self.exps.is_empty() {
            return None;
        }
        let mut out = FuncTerms {
            konst: self.konst - self.log,
            linear: 0.5 * self.linear,
            recip: c0,
            log: self.log,
            powers: Vec::new(),
            exps: Vec::new(),
        };
        for &(c, e) in &self.powers {
            out.push_power(c / (e + 1.0), e);
        }
        out.canonicalize();
        Some(out)
    }

    /// Closed-form inverse when the combination is a single invertible
    /// family member.
    pub fn closed_inverse(&self) -> Option<FuncTerms> {
        let n_powers = self.powers.len();
        let n_exps = self.exps.len();
        if self.is_affine() {
            // y = k + b x  ->  x = (y - k)/b
            if self.linear != 0.0 {
                return Some(FuncTerms::affine(
                    -self.konst / self.linear,
                    1.0 / self.linear,
                ));
            }
            return None;
        }
        if self.konst == 0.0
            && self.linear == 0.0
            && self.recip == 0.0
            && self.log == 0.0
            && n_exps == 0
            && n_powers == 1
        {
            // y = c x^e  ->  x = (y/c)^{1/e}
            let (c, e) = self.powers[0];
            return Some(FuncTerms::power(c.powf(-1.0 / e), 1.0 / e));
        }
        if self.linear == 0.0
            && self.recip == 0.0
            && n_powers == 0
            && n_exps == 0
            && self.log != 0.0
        {
            // y = k + d ln x  ->  x = e^{-k/d} e^{y/d}
            return Some(FuncTerms::exponential(
                (-self.konst / self.log).exp(),
                1.0 / self.log,
            ));
        }
        if self.konst == 0.0
            && self.linear == 0.0
            && self.recip == 0.0
            && self.log == 0.0
            && n_powers == 0
            && n_exps == 1
        {
            // y = c e^{r x}  ->  x = (ln y - ln c)/r
            let (c, r) = self.exps[0];
            if c <= 0.0 {
                return None;
            }
            return Some(FuncTerms::log_affine(-c.ln() / r, 1.0 / r));
        }
        None
    }

    /// Solves `f(x) = target` for a monotone `f` on `[xlo, xhi]`.
    pub fn solve(&self, target: f64, xlo: f64, xhi: f64) -> f64 {
        debug_assert!(xlo <= xhi);
        if self.is_affine() && self.linear != 0.0 {
            return ((target - self.konst) / self.linear).clamp(xlo, xhi);
        }
        if self.konst == 0.0
            && self.linear == 0.0
            && self.recip == 0.0
            && self.log == 0.0
            && self.exps.is_empty()
            && self.powers.len() == 1
        {
            let (c, e) = self.powers[0];
            let ratio = target / c;
            if ratio > 0.0 {
                return ratio.powf(1.0 / e).clamp(xlo, xhi);
            }
        }
        if self.linear == 0.0
            && self.recip == 0.0
            && self.powers.is_empty()
            && self.exps.is_empty()
            && self.log != 0.0
        {
            return ((target - self.konst) / self.log).exp().clamp(xlo, xhi);
        }
        if self.konst == 0.0
            && self.linear == 0.0
            && self.recip == 0.0
            && self.log == 0.0
            && self.powers.is_empty()
            && self.exps.len() == 1
        {
            let (c, r) = self.exps[0];
            let ratio = target / c;
            if ratio > 0.0 {
                return (ratio.ln() / r).clamp(xlo, xhi);
            }
        }
        if self.log == 0.0 && self.powers.is_empty() && self.exps.is_empty() && self.recip != 0.0
        {
            // k + b x + c/x = t  <=>  b x² + (k - t) x + c = 0
            let b = self.linear;
            let k = self.konst - target;
            let c = self.recip;
            if b == 0.0 {
                if k != 0.0 {
                    return (-c / k).clamp(xlo, xhi);
                }
            } else {
                let disc = k * k - 4.0 * b * c;
                if disc >= 0.0 {
                    let q = -0.5 * (k + k.signum() * disc.sqrt());
                    let slack = 1e-9 * (1.0 + xhi.abs().max(xlo.abs()));
                    for root in [q / b, if q != 0.0 { c / q } else { f64::NAN }] {
                        if root.is_finite() && root >= xlo - slack && root <= xhi + slack {
                            return root.clamp(xlo, xhi);
                        }
                    }
                }
            }
        }
        self.bisect(target, xlo, xhi)
    }

    fn bisect(&self, target: f64, xlo: f64, xhi: f64) -> f64 {
        let flo = self.eval(xlo);
        let fhi = self.eval(xhi);
        let increasing = fhi >= flo;
        // Targets outside the bracket clamp to the nearer endpoint.
        if (increasing && target <= flo) || (!increasing && target >= flo) {
            return xlo;
        }
        if (increasing && target >= fhi) || (!increasing && target <= fhi) {
            return xhi;
        }
        let (mut a, mut b) = (xlo, xhi);
        for _ in 0..200 {
            let m = 0.5 * (a + b);
            if m <= a || m >= b {
                break;
            }
            let fm = self.eval(m);
            if fm == target {
                return m;
            }
            if (fm < target) == increasing {
                a = m;
            } else {
                b = m;
            }
        }
        0.5 * (a + b)
    }

    /// Limit of the combination as `x → +∞`.
    pub fn limit_pos_inf(&self) -> ExtReal {
        // Growing exponentials dominate, then powers, then the log.
        let top_exp = self
            .exps
            .iter()
            .filter(|&&(_, r)| r > 0.0)
            .max_by(|a, b| a.1.total_cmp(&b.1));
        if let Some(&(c, _)) = top_exp {
            return inf_of_sign(c);
        }
        let mut top_pow: Option<(f64, f64)> = None;
        let mut consider = |c: f64, e: f64| {
            if c == 0.0 || e <= 0.0 {
                return;
            }
            match top_pow {
                Some((_, be)) if be >= e => {}
                _ => top_pow = Some((c, e)),
            }
        };
        consider(self.linear, 1.0);
        for &(c, e) in &self.powers {
            consider(c, e);
        }
        if let Some((c, _)) = top_pow {
            return inf_of_sign(c);
        }
        if self.log != 0.0 {
            return inf_of_sign(self.log);
        }
        ExtReal::new(self.konst)
    }

    /// Limit as `x → -∞`. Only meaningful for combinations legal on the
    /// negative axis (no recip/log/fractional powers).
    pub fn limit_neg_inf(&self) -> ExtReal {
        let top_exp = self
            .exps
            .iter()
            .filter(|&&(_, r)| r < 0.0)
            .min_by(|a, b| a.1.total_cmp(&b.1));
        if let Some(&(c, _)) = top_exp {
            return inf_of_sign(c);
        }
        if self.linear != 0.0 {
            return inf_of_sign(-self.linear);
        }
        ExtReal::new(self.konst)
    }

    /// Limit as `x → 0⁺`.
    pub fn limit_zero_plus(&self) -> ExtReal {
        let mut strongest: Option<(f64, f64)> = None; // most negative exponent wins
        let mut consider = |c: f64, e: f64| {
            if c == 0.0 || e >= 0.0 {
                return;
            }
            match strongest {
                Some((_, be)) if be <= e => {}
                _ => strongest = Some((c, e)),
            }
        };
        consider(self.recip, -1.0);
        for &(c, e) in &self.powers {
            consider(c, e);
        }
        if let Some((c, _)) = strongest {
            return inf_of_sign(c);
        }
        if self.log != 0.0 {
            return inf_of_sign(-self.log);
        }
        let finite = self.konst + self.exps.iter().map(|&(c, _)| c).sum::<f64>();
        ExtReal::new(finite)
    }

    /// Limit as `x` approaches `target` from inside the span.
    pub fn limit_toward(&self, target: ExtReal, from_above: bool) -> ExtReal {
        if target == ExtReal::POS_INF {
            self.limit_pos_inf()
        } else if target == ExtReal::NEG_INF {
            self.limit_neg_inf()
        } else if target.value() == 0.0 && from_above {
            self.limit_zero_plus()
        } else {
            ExtReal::new(self.eval(target.value()))
        }
    }
}

fn inf_of_sign(c: f64) -> ExtReal {
    if c > 0.0 {
        ExtReal::POS_INF
    } else {
        ExtReal::NEG_INF
    }
}

// ---------------------------------------------------------------------------
// Segments and tails
// ---------------------------------------------------------------------------

/// Shape of one polyline segment between two consecutive vertices.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub enum SegForm {
    /// Straight segment between the endpoint vertices (jumps and flats
    /// included).
    Affine,
    /// `y = f(x)` on the segment; endpoints match the vertices.
    Func(Arc<FuncTerms>),
    /// `x = f(y)` on the segment (graph transpose of a `Func` segment
    /// without a closed-form inverse).
    FuncOfY(Arc<FuncTerms>),
}

impl SegForm {
    fn transpose(&self) -> SegForm {
        match self {
            SegForm::Affine => SegForm::Affine,
            SegForm::Func(f) => SegForm::FuncOfY(f.clone()).normalize(),
            SegForm::FuncOfY(f) => SegForm::Func(f.clone()),
        }
    }

    fn normalize(self) -> SegForm {
        if let SegForm::FuncOfY(f) = &self {
            if let Some(g) = f.closed_inverse() {
                return SegForm::Func(Arc::new(g));
            }
        }
        self
    }
}

/// Behavior of the curve beyond its extreme vertices.
///
/// A left tail extends toward the upper-left (x decreasing, y
/// nondecreasing), a right tail toward the lower-right.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Tail {
    /// The curve stops at the boundary vertex. Such a curve is not
    /// maximal and is rejected by validation; the variant exists so the
    /// serialized schema is total.
    None,
    /// Horizontal ray at the boundary vertex level.
    Horizontal,
    /// Vertical ray at the boundary vertex abscissa.
    Vertical,
    /// Affine ray of strictly negative slope.
    Ray { slope: f64 },
    /// Closed-form extension: `y = f(x)` for x between the boundary
    /// vertex and `limit` when `of_y` is false, `x = f(y)` for y between
    /// the boundary vertex and `limit` otherwise.
    Curve {
        f: Arc<FuncTerms>,
        of_y: bool,
        limit: ExtReal,
    },
}

impl Tail {
    fn transpose(&self, becomes_left: bool) -> Tail {
        match self {
            Tail::None => Tail::None,
            Tail::Horizontal => Tail::Vertical,
            Tail::Vertical => Tail::Horizontal,
            Tail::Ray { slope } => Tail::Ray { slope: 1.0 / slope },
            Tail::Curve { f, of_y, limit } => Tail::Curve {
                f: f.clone(),
                of_y: !of_y,
                limit: *limit,
            }
            .normalize(becomes_left),
        }
    }

    /// Rewrites an `of_y` curve tail through the closed-form inverse when
    /// one exists. `is_left` refers to the tail's position on its curve.
    fn normalize(self, is_left: bool) -> Tail {
        if let Tail::Curve {
            f,
            of_y: true,
            limit,
        } = &self
        {
            if let Some(g) = f.closed_inverse() {
                // On a left tail y rises toward the limit, on a right
                // tail it falls toward it.
                let from_above = !is_left;
                let x_limit = f.limit_toward(*limit, from_above);
                return Tail::Curve {
                    f: Arc::new(g),
                    of_y: false,
                    limit: x_limit,
                };
            }
        }
        self
    }
}

/// Domain of a curve as an extended-real interval with endpoint
/// attainment flags.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct DomainBounds {
    pub lo: ExtReal,
    pub lo_closed: bool,
    pub hi: ExtReal,
    pub hi_closed: bool,
}

impl DomainBounds {
    pub fn contains(&self, x: f64) -> bool {
        let xe = ExtReal::new(x);
        (xe > self.lo || (xe == self.lo && self.lo_closed))
            && (xe < self.hi || (xe == self.hi && self.hi_closed))
    }

    pub fn as_interval(&self) -> Interval {
        Interval::new(self.lo, self.hi)
    }

    /// Interval order between domains per the A₊/A₋ containment
    /// definition, endpoint attainment included.
    pub fn leq(&self, other: &DomainBounds) -> bool {
        let lo_ok =
            self.lo < other.lo || (self.lo == other.lo && (self.lo_closed || !other.lo_closed));
        let hi_ok =
            self.hi < other.hi || (self.hi == other.hi && (other.hi_closed || !self.hi_closed));
        lo_ok && hi_ok
    }
}

/// Scaling axis selector.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Axis {
    X,
    Y,
}

// ---------------------------------------------------------------------------
// The curve itself
// ---------------------------------------------------------------------------

/// Canonical finite representation of a maximally nonincreasing operator.
#[derive(Clone, Debug, PartialEq)]
pub struct MonotoneCurve {
    verts: Vec<(f64, f64)>,
    segs: Vec<SegForm>,
    left_tail: Tail,
    right_tail: Tail,
}

impl MonotoneCurve {
    /// Builds and validates a curve from its parts.
    pub fn from_parts(
        verts: Vec<(f64, f64)>,
        segs: Vec<SegForm>,
        left_tail: Tail,
        right_tail: Tail,
    ) -> Result<Self> {
        let c = MonotoneCurve {
            verts,
            segs,
            left_tail,
            right_tail,
        };
        c.validate()?;
        Ok(c)
    }

    fn from_parts_trusted(
        verts: Vec<(f64, f64)>,
        segs: Vec<SegForm>,
        left_tail: Tail,
        right_tail: Tail,
    ) -> Self {
        let c = MonotoneCurve {
            verts,
            segs,
            left_tail,
            right_tail,
        };
        debug_assert!(
            c.validate().is_ok(),
            "internal curve invalid: {:?}",
            c.validate()
        );
        c
    }

    /// Plain polyline through the given vertices with the given tails.
    pub fn polyline(verts: Vec<(f64, f64)>, left_tail: Tail, right_tail: Tail) -> Result<Self> {
        let n = verts.len();
        Self::from_parts(
            verts,
            vec![SegForm::Affine; n.saturating_sub(1)],
            left_tail,
            right_tail,
        )
    }

    fn validate(&self) -> Result<()> {
        if self.verts.is_empty() {
            return Err(Error::Argument("curve needs at least one vertex".into()));
        }
        for (i, &(x, y)) in self.verts.iter().enumerate() {
            if !x.is_finite() || !y.is_finite() {
                return Err(Error::Argument(format!(
                    "vertex {i} is not finite: ({x}, {y})"
                )));
            }
        }
        for w in self.verts.windows(2) {
            let ((x0, y0), (x1, y1)) = (w[0], w[1]);
            if x1 < x0 || y1 > y0 {
                return Err(Error::Argument(format!(
                    "vertices not monotone: ({x0}, {y0}) then ({x1}, {y1})"
                )));
            }
            if x1 == x0 && y1 == y0 {
                return Err(Error::Argument(format!(
                    "duplicate consecutive vertex ({x0}, {y0})"
                )));
            }
        }
        if self.segs.len() + 1 != self.verts.len() {
            return Err(Error::Argument(format!(
                "{} segments do not join {} vertices",
                self.segs.len(),
                self.verts.len()
            )));
        }
        for (i, seg) in self.segs.iter().enumerate() {
            let (x0, y0) = self.verts[i];
            let (x1, y1) = self.verts[i + 1];
            let close = |a: f64, b: f64| (a - b).abs() <= 1e-6 * (1.0 + a.abs().max(b.abs()));
            match seg {
                SegForm::Affine => {}
                SegForm::Func(f) => {
                    if x1 <= x0 {
                        return Err(Error::Argument(format!(
                            "func segment {i} has zero x-width"
                        )));
                    }
                    if !close(f.eval(x0), y0) || !close(f.eval(x1), y1) {
                        return Err(Error::Argument(format!(
                            "func segment {i} does not match its vertices"
                        )));
                    }
                }
                SegForm::FuncOfY(f) => {
                    if y1 >= y0 {
                        return Err(Error::Argument(format!(
                            "transposed func segment {i} has zero y-height"
                        )));
                    }
                    if !close(f.eval(y0), x0) || !close(f.eval(y1), x1) {
                        return Err(Error::Argument(format!(
                            "transposed func segment {i} does not match its vertices"
                        )));
                    }
                }
            }
        }
        if let Tail::Ray { slope } = self.left_tail {
            if !(slope < 0.0) {
                return Err(Error::Argument(
                    "left ray tail must have negative slope".into(),
                ));
            }
        }
        if let Tail::Ray { slope } = self.right_tail {
            if !(slope < 0.0) {
                return Err(Error::Argument(
                    "right ray tail must have negative slope".into(),
                ));
            }
        }
        // Maximality: each end must escape to infinity in x or in y.
        let d = self.domain();
        let r = self.range();
        let left_ok = d.lo == ExtReal::NEG_INF || r.hi == ExtReal::POS_INF;
        let right_ok = d.hi == ExtReal::POS_INF || r.lo == ExtReal::NEG_INF;
        if !left_ok || !right_ok {
            return Err(Error::Argument(
                "curve is not maximal: an end stops at a finite point".into(),
            ));
        }
        Ok(())
    }

    pub fn vertices(&self) -> &[(f64, f64)] {
        &self.verts
    }

    pub fn segments(&self) -> &[SegForm] {
        &self.segs
    }

    pub fn left_tail(&self) -> &Tail {
        &self.left_tail
    }

    pub fn right_tail(&self) -> &Tail {
        &self.right_tail
    }

    fn first_vertex(&self) -> (f64, f64) {
        self.verts[0]
    }

    fn last_vertex(&self) -> (f64, f64) {
        *self.verts.last().unwrap()
    }

    pub fn domain(&self) -> DomainBounds {
        let (x0, _y0) = self.first_vertex();
        let (xn, _yn) = self.last_vertex();
        let (lo, lo_closed) = match &self.left_tail {
            Tail::None | Tail::Vertical => (ExtReal::new(x0), true),
            Tail::Horizontal | Tail::Ray { .. } => (ExtReal::NEG_INF, false),
            Tail::Curve { f, of_y, limit } => {
                if *of_y {
                    // x = f(y) with y rising toward `limit`.
                    (f.limit_toward(*limit, false), false)
                } else {
                    (*limit, false)
                }
            }
        };
        let (hi, hi_closed) = match &self.right_tail {
            Tail::None | Tail::Vertical => (ExtReal::new(xn), true),
            Tail::Horizontal | Tail::Ray { .. } => (ExtReal::POS_INF, false),
            Tail::Curve { f, of_y, limit } => {
                if *of_y {
                    // x = f(y) with y falling toward `limit`.
                    (f.limit_toward(*limit, true), false)
                } else {
                    (*limit, false)
                }
            }
        };
        DomainBounds {
            lo,
            lo_closed,
            hi,
            hi_closed,
        }
    }

    /// Range bounds, computed symmetrically to the domain.
    pub fn range(&self) -> DomainBounds {
        let (_x0, y0) = self.first_vertex();
        let (_xn, yn) = self.last_vertex();
        let (hi, hi_closed) = match &self.left_tail {
            Tail::None | Tail::Horizontal => (ExtReal::new(y0), true),
            Tail::Vertical | Tail::Ray { .. } => (ExtReal::POS_INF, false),
            Tail::Curve { f, of_y, limit } => {
                if *of_y {
                    (*limit, false)
                } else {
                    (f.limit_toward(*limit, limit.value() == 0.0), false)
                }
            }
        };
        let (lo, lo_closed) = match &self.right_tail {
            Tail::None | Tail::Horizontal => (ExtReal::new(yn), true),
            Tail::Vertical | Tail::Ray { .. } => (ExtReal::NEG_INF, false),
            Tail::Curve { f, of_y, limit } => {
                if *of_y {
                    (*limit, false)
                } else {
                    (f.limit_toward(*limit, limit.value() == 0.0), false)
                }
            }
        };
        DomainBounds {
            lo,
            lo_closed,
            hi,
            hi_closed,
        }
    }

    /// Evaluates the operator: the closed interval of y-values attained
    /// at abscissa `x`.
    pub fn eval(&self, x: f64) -> Result<Interval> {
        assert!(x.is_finite(), "eval expects a finite abscissa");
        let dom = self.domain();
        if !dom.contains(x) {
            return Err(Error::Domain {
                x,
                dom: dom.as_interval(),
            });
        }
        let mut lo = f64::INFINITY;
        let mut hi = f64::NEG_INFINITY;
        let mut push = |v: f64| {
            lo = lo.min(v);
            hi = hi.max(v);
        };
        let (x0, y0) = self.first_vertex();
        let (xn, yn) = self.last_vertex();

        if x < x0 {
            match &self.left_tail {
                Tail::Horizontal => push(y0),
                Tail::Ray { slope } => push(y0 + slope * (x - x0)),
                Tail::Curve { f, of_y: false, .. } => push(f.eval(x)),
                Tail::Curve {
                    f,
                    of_y: true,
                    limit,
                } => push(solve_of_y_tail(f, x, y0, *limit, true)),
                Tail::Vertical | Tail::None => unreachable!("domain check rejected this x"),
            }
        }
        if x > xn {
            match &self.right_tail {
                Tail::Horizontal => push(yn),
                Tail::Ray { slope } => push(yn + slope * (x - xn)),
                Tail::Curve { f, of_y: false, .. } => push(f.eval(x)),
                Tail::Curve {
                    f,
                    of_y: true,
                    limit,
                } => push(solve_of_y_tail(f, x, yn, *limit, false)),
                Tail::Vertical | Tail::None => unreachable!("domain check rejected this x"),
            }
        }

        // Vertices at exactly x.
        let start = self.verts.partition_point(|v| v.0 < x);
        let mut any_vertex = false;
        for &(vx, vy) in &self.verts[start..] {
            if vx > x {
                break;
            }
            any_vertex = true;
            push(vy);
        }
        // A segment whose interior contains x.
        if !any_vertex && start > 0 && start < self.verts.len() {
            let i = start - 1;
            let (ax, ay) = self.verts[i];
            let (bx, by) = self.verts[i + 1];
            debug_assert!(ax < x && x < bx);
            let v = match &self.segs[i] {
                SegForm::Affine => ay + (by - ay) * (x - ax) / (bx - ax),
                SegForm::Func(f) => f.eval(x),
                SegForm::FuncOfY(f) => f.solve(x, by, ay),
            };
            push(v);
        }

        let mut lo_e = ExtReal::new(lo);
        let mut hi_e = ExtReal::new(hi);
        if x == x0 && matches!(self.left_tail, Tail::Vertical) {
            hi_e = ExtReal::POS_INF;
        }
        if x == xn && matches!(self.right_tail, Tail::Vertical) {
            lo_e = ExtReal::NEG_INF;
        }
        Ok(Interval::new(lo_e, hi_e))
    }

    /// Lower endpoint of `eval`.
    pub fn eval_lower(&self, x: f64) -> Result<f64> {
        Ok(self.eval(x)?.lo().value())
    }

    /// Upper endpoint of `eval`.
    pub fn eval_upper(&self, x: f64) -> Result<f64> {
        Ok(self.eval(x)?.hi().value())
    }

    /// Graph transpose: `(x, y) ∈ gra(c) ⟺ (y, x) ∈ gra(invert(c))`.
    pub fn invert(&self) -> MonotoneCurve {
        let verts: Vec<(f64, f64)> = self.verts.iter().rev().map(|&(x, y)| (y, x)).collect();
        let segs: Vec<SegForm> = self.segs.iter().rev().map(|s| s.transpose()).collect();
        let left_tail = self.right_tail.transpose(true);
        let right_tail = self.left_tail.transpose(false);
        MonotoneCurve::from_parts_trusted(verts, segs, left_tail, right_tail)
    }

    /// Removes duplicate vertices and merges collinear affine runs.
    pub fn canonicalize(&self) -> MonotoneCurve {
        let mut verts: Vec<(f64, f64)> = Vec::with_capacity(self.verts.len());
        let mut segs: Vec<SegForm> = Vec::with_capacity(self.segs.len());
        verts.push(self.verts[0]);
        for i in 0..self.segs.len() {
            let next = self.verts[i + 1];
            let cur = *verts.last().unwrap();
            if next == cur {
                continue;
            }
            if let (Some(SegForm::Affine), SegForm::Affine) = (segs.last(), &self.segs[i]) {
                if verts.len() >= 2 {
                    let prev = verts[verts.len() - 2];
                    let d1 = (cur.0 - prev.0, cur.1 - prev.1);
                    let d2 = (next.0 - cur.0, next.1 - cur.1);
                    if d1.0 * d2.1 == d1.1 * d2.0 {
                        *verts.last_mut().unwrap() = next;
                        continue;
                    }
                }
            }
            verts.push(next);
            segs.push(self.segs[i].clone());
        }
        MonotoneCurve::from_parts_trusted(
            verts,
            segs,
            self.left_tail.clone(),
            self.right_tail.clone(),
        )
    }

    /// Scales one coordinate axis by `a > 0`.
    pub fn scale(&self, a: f64, axis: Axis) -> Result<MonotoneCurve> {
        if !(a > 0.0) || !a.is_finite() {
            return Err(Error::Argument(format!(
                "scale factor must be positive, got {a}"
            )));
        }
        let map = |&(x, y): &(f64, f64)| match axis {
            Axis::X => (x * a, y),
            Axis::Y => (x, y * a),
        };
        let verts = self.verts.iter().map(map).collect();
        let seg_map = |s: &SegForm| match (s, axis) {
            (SegForm::Affine, _) => SegForm::Affine,
            (SegForm::Func(f), Axis::Y) => SegForm::Func(Arc::new(f.scale_y(a))),
            (SegForm::Func(f), Axis::X) => SegForm::Func(Arc::new(f.scale_x(a))),
            (SegForm::FuncOfY(f), Axis::Y) => SegForm::FuncOfY(Arc::new(f.scale_x(a))),
            (SegForm::FuncOfY(f), Axis::X) => SegForm::FuncOfY(Arc::new(f.scale_y(a))),
        };
        let segs = self.segs.iter().map(seg_map).collect();
        let tail_map = |t: &Tail| match t {
            Tail::None => Tail::None,
            Tail::Horizontal => Tail::Horizontal,
            Tail::Vertical => Tail::Vertical,
            Tail::Ray { slope } => Tail::Ray {
                slope: match axis {
                    Axis::X => slope / a,
                    Axis::Y => slope * a,
                },
            },
            Tail::Curve { f, of_y, limit } => {
                let (nf, nlimit) = match (of_y, axis) {
                    (false, Axis::Y) => (f.scale_y(a), *limit),
                    (false, Axis::X) => (f.scale_x(a), scale_ext(*limit, a)),
                    (true, Axis::Y) => (f.scale_x(a), scale_ext(*limit, a)),
                    (true, Axis::X) => (f.scale_y(a), *limit),
                };
                Tail::Curve {
                    f: Arc::new(nf),
                    of_y: *of_y,
                    limit: nlimit,
                }
            }
        };
        Ok(MonotoneCurve::from_parts_trusted(
            verts,
            segs,
            tail_map(&self.left_tail),
            tail_map(&self.right_tail),
        ))
    }

    /// Pointwise cap `min(cap, curve)`, extended to a full survival-style
    /// profile: the flattened region continues to x = -∞ at level `cap`.
    pub fn clip_above(&self, cap: f64) -> MonotoneCurve {
        let r = self.range();
        if r.hi <= ExtReal::new(cap) {
            return self.clone();
        }
        let idx = match self.verts.iter().position(|&(_, y)| y <= cap) {
            Some(i) => i,
            None => {
                // The whole vertex list sits above the cap; the curve
                // drops through it in the right tail.
                return match &self.right_tail {
                    Tail::Curve {
                        f,
                        of_y: false,
                        limit,
                    } => {
                        let (xn, _) = self.last_vertex();
                        let far = if limit.is_finite() {
                            limit.value()
                        } else {
                            bracket_tail_crossing(f, xn, cap)
                        };
                        let xc = f.solve(cap, xn, far);
                        MonotoneCurve::from_parts_trusted(
                            vec![(xc, cap)],
                            vec![],
                            Tail::Horizontal,
                            self.right_tail.clone(),
                        )
                    }
                    Tail::Ray { slope } => {
                        let (xn, yn) = self.last_vertex();
                        let xc = xn + (cap - yn) / slope;
                        MonotoneCurve::from_parts_trusted(
                            vec![(xc, cap)],
                            vec![],
                            Tail::Horizontal,
                            self.right_tail.clone(),
                        )
                    }
                    _ => self.clone(),
                };
            }
        };
        let (vx, vy) = self.verts[idx];
        let mut verts = Vec::with_capacity(self.verts.len() - idx + 1);
        let mut segs = Vec::with_capacity(self.segs.len() - idx + 2);
        if vy < cap {
            // The cap is crossed strictly above vertex idx: inside the
            // preceding segment or jump, or in the left tail when idx = 0.
            let (xc, connector) = if idx > 0 {
                let (ax, ay) = self.verts[idx - 1];
                let seg = &self.segs[idx - 1];
                let xc = match seg {
                    SegForm::Affine => {
                        if vx == ax {
                            vx
                        } else {
                            ax + (vx - ax) * (cap - ay) / (vy - ay)
                        }
                    }
                    SegForm::Func(f) => f.solve(cap, ax, vx),
                    SegForm::FuncOfY(f) => f.eval(cap).clamp(ax, vx),
                };
                (xc, seg.clone())
            } else {
                match &self.left_tail {
                    Tail::Vertical => (vx, SegForm::Affine),
                    Tail::Ray { slope } => (vx + (cap - vy) / slope, SegForm::Affine),
                    Tail::Curve {
                        f,
                        of_y: false,
                        limit,
                    } => {
                        // Expand leftward until the tail rises past cap.
                        let mut far = vx;
                        let mut step = 1.0f64.max(vx.abs() * 1e-6);
                        for _ in 0..200 {
                            let cand = if limit.is_finite() && limit.value() == 0.0 {
                                0.5 * (far + 0.0)
                            } else {
                                far - step
                            };
                            far = cand;
                            step *= 2.0;
                            if f.eval(far) >= cap {
                                break;
                            }
                        }
                        (f.solve(cap, far, vx), SegForm::Func(f.clone()))
                    }
                    _ => (vx, SegForm::Affine),
                }
            };
            verts.push((xc, cap));
            if xc < vx || vy < cap {
                segs.push(connector);
                verts.push((vx, vy));
            }
        } else {
            // vy == cap exactly.
            verts.push((vx, vy));
        }
        for i in idx..self.segs.len() {
            segs.push(self.segs[i].clone());
            verts.push(self.verts[i + 1]);
        }
        MonotoneCurve::from_parts_trusted(verts, segs, Tail::Horizontal, self.right_tail.clone())
    }

    /// `∫ₐᵇ` of the operator (any measurable selection; finite values
    /// coincide a.e.). Both endpoints must lie in the closure of the
    /// domain and the integral must be finite.
    pub fn integrate(&self, a: f64, b: f64) -> Result<f64> {
        if b < a {
            return Err(Error::Argument("integration bounds out of order".into()));
        }
        let dom = self.domain();
        let lo_ok = ExtReal::new(a) >= dom.lo;
        let hi_ok = ExtReal::new(b) <= dom.hi;
        if !lo_ok || !hi_ok {
            return Err(Error::Domain {
                x: if lo_ok { b } else { a },
                dom: dom.as_interval(),
            });
        }
        let mut total = 0.0;
        let (x0, y0) = self.first_vertex();
        let (xn, yn) = self.last_vertex();
        if a < x0 {
            let hi = x0.min(b);
            total += match &self.left_tail {
                Tail::Horizontal => y0 * (hi - a),
                Tail::Ray { slope } => {
                    let at = |x: f64| y0 + slope * (x - x0);
                    0.5 * (at(a) + at(hi)) * (hi - a)
                }
                Tail::Curve {
                    f,
                    of_y: false,
                    limit,
                } => {
                    if limit.value() == 0.0 && a == 0.0 {
                        f.integral_from_zero(hi)
                            .ok_or_else(|| Error::Capability("integral diverges at 0".into()))?
                    } else {
                        f.integral(a, hi)
                    }
                }
                Tail::Curve { .. } => {
                    return Err(Error::Capability(
                        "cannot integrate a transposed tail in closed form".into(),
                    ))
                }
                Tail::Vertical | Tail::None => 0.0,
            };
        }
        for i in 0..self.segs.len() {
            let (ax, ay) = self.verts[i];
            let (bx, by) = self.verts[i + 1];
            let lo = ax.max(a);
            let hi = bx.min(b);
            if hi <= lo {
                continue;
            }
            total += match &self.segs[i] {
                SegForm::Affine => {
                    let at = |x: f64| ay + (by - ay) * (x - ax) / (bx - ax);
                    0.5 * (at(lo) + at(hi)) * (hi - lo)
                }
                SegForm::Func(f) => f.integral(lo, hi),
                SegForm::FuncOfY(_) => {
                    return Err(Error::Capability(
                        "cannot integrate a transposed segment in closed form".into(),
                    ))
                }
            };
        }
        if b > xn {
            let lo = xn.max(a);
            total += match &self.right_tail {
                Tail::Horizontal => yn * (b - lo),
                Tail::Ray { slope } => {
                    let at = |x: f64| yn + slope * (x - xn);
                    0.5 * (at(lo) + at(b)) * (b - lo)
                }
                Tail::Curve { f, of_y: false, .. } => f.integral(lo, b),
                Tail::Curve { .. } => {
                    return Err(Error::Capability(
                        "cannot integrate a transposed tail in closed form".into(),
                    ))
                }
                Tail::Vertical | Tail::None => 0.0,
            };
        }
        if !total.is_finite() {
            return Err(Error::Capability("integral is not finite".into()));
        }
        Ok(total)
    }

    // -- constructors -------------------------------------------------------

    /// The unit step dropping from 1 to 0 at `delta`.
    pub fn incr(delta: f64) -> MonotoneCurve {
        MonotoneCurve::from_parts_trusted(
            vec![(delta, 1.0), (delta, 0.0)],
            vec![SegForm::Affine],
            Tail::Horizontal,
            Tail::Horizontal,
        )
    }

    /// The constant operator `x ↦ {level}` on all of ℝ.
    pub fn constant(level: f64) -> MonotoneCurve {
        MonotoneCurve::from_parts_trusted(
            vec![(0.0, level)],
            vec![],
            Tail::Horizontal,
            Tail::Horizontal,
        )
    }

    /// `t ↦ {t^{-a}}` on `t > 0`, with closed-form tails and a refined
    /// polyline cache on a compact window.
    pub fn id_pow(a: f64) -> Result<MonotoneCurve> {
        if !(a > 0.0) || !a.is_finite() {
            return Err(Error::Argument(format!(
                "exponent must be positive, got {a}"
            )));
        }
        let f = Arc::new(FuncTerms::power(1.0, -a));
        Ok(Self::from_func_window(
            f,
            0.1,
            10.0,
            ExtReal::new(0.0),
            ExtReal::POS_INF,
        ))
    }

    /// `t ↦ {e^{-t}}` on ℝ with closed-form tails.
    pub fn exp_profile() -> MonotoneCurve {
        let f = Arc::new(FuncTerms::exponential(1.0, -1.0));
        Self::from_func_window(f, -2.0, 16.0, ExtReal::NEG_INF, ExtReal::POS_INF)
    }

    /// Builds a curve from a single closed form on a refined window with
    /// curve tails continuing the same form to the stated limits.
    pub(crate) fn from_func_window(
        f: Arc<FuncTerms>,
        window_lo: f64,
        window_hi: f64,
        left_limit: ExtReal,
        right_limit: ExtReal,
    ) -> MonotoneCurve {
        let xs = refine_grid(&f, window_lo, window_hi, DEFAULT_REFINE_TOL, MAX_REFINE_VERTS);
        let verts: Vec<(f64, f64)> = xs.iter().map(|&x| (x, f.eval(x))).collect();
        let segs = vec![SegForm::Func(f.clone()); verts.len() - 1];
        MonotoneCurve::from_parts_trusted(
            verts,
            segs,
            Tail::Curve {
                f: f.clone(),
                of_y: false,
                limit: left_limit,
            },
            Tail::Curve {
                f,
                of_y: false,
                limit: right_limit,
            },
        )
    }

    // -- comparison ---------------------------------------------------------

    /// Pointwise-resolvent order `self ≤ other` (exact).
    pub fn leq(&self, other: &MonotoneCurve) -> bool {
        self.leq_impl(other, 0.0)
    }

    /// Order check tolerating an additive slack (scaled by magnitude) on
    /// the endpoint comparisons; for floating-point property suites.
    pub fn leq_tol(&self, other: &MonotoneCurve, tol: f64) -> bool {
        self.leq_impl(other, tol)
    }

    fn leq_impl(&self, other: &MonotoneCurve, tol: f64) -> bool {
        let df = self.domain();
        let dg = other.domain();
        if !df.leq(&dg) {
            return false;
        }
        let lo = df.lo.max(dg.lo);
        let hi = df.hi.min(dg.hi);
        if lo > hi {
            return true; // domains ordered, nothing overlaps
        }
        let lo_attained = lo.is_finite() && df.contains(lo.value()) && dg.contains(lo.value());
        let hi_attained = hi.is_finite() && df.contains(hi.value()) && dg.contains(hi.value());
        let mut xs: Vec<f64> = Vec::new();
        if lo_attained {
            xs.push(lo.value());
        }
        if hi_attained {
            xs.push(hi.value());
        }
        let in_open = |x: f64| ExtReal::new(x) > lo && ExtReal::new(x) < hi;
        for &(x, _) in self.verts.iter().chain(other.verts.iter()) {
            if in_open(x) {
                xs.push(x);
            }
        }
        xs.sort_by(f64::total_cmp);
        xs.dedup();
        if xs.is_empty() {
            let anchor = if lo.is_finite() {
                lo.value()
            } else if hi.is_finite() {
                hi.value() - 2.0
            } else {
                0.0
            };
            xs.push(anchor + 1.0);
        }
        // Midpoint refinements where either side is non-affine, plus
        // geometric ladders into unbounded/asymptotic tail regions.
        let mut samples = xs.clone();
        for w in xs.windows(2) {
            let (a, b) = (w[0], w[1]);
            if !self.cell_is_affine(a, b) || !other.cell_is_affine(a, b) {
                for k in 1..4 {
                    samples.push(a + (b - a) * (k as f64) * 0.25);
                }
            }
        }
        let first = *xs.first().unwrap();
        let last = *xs.last().unwrap();
        if lo == ExtReal::NEG_INF {
            let mut step = 1.0;
            for _ in 0..40 {
                samples.push(first - step);
                step *= 2.0;
            }
        } else if !lo_attained && lo.value() < first {
            let gap = first - lo.value();
            let mut frac = 0.5;
            for _ in 0..45 {
                samples.push(lo.value() + gap * frac);
                frac *= 0.5;
            }
        }
        if hi == ExtReal::POS_INF {
            let mut step = 1.0;
            for _ in 0..40 {
                samples.push(last + step);
                step *= 2.0;
            }
        } else if hi.is_finite() && !hi_attained && hi.value() > last {
            let gap = hi.value() - last;
            let mut frac = 0.5;
            for _ in 0..45 {
                samples.push(last + gap * frac);
                frac *= 0.5;
            }
        }
        for x in samples {
            let (Ok(a), Ok(b)) = (self.eval(x), other.eval(x)) else {
                // A ladder sample fell outside a domain by rounding.
                continue;
            };
            let ok = if tol == 0.0 {
                interval_leq(&a, &b)
            } else {
                interval_leq_tol(&a, &b, tol)
            };
            if !ok {
                return false;
            }
        }
        true
    }

    fn cell_is_affine(&self, a: f64, b: f64) -> bool {
        let (x0, _) = self.first_vertex();
        let (xn, _) = self.last_vertex();
        if b <= x0 {
            return matches!(self.left_tail, Tail::Horizontal | Tail::Ray { .. });
        }
        if a >= xn {
            return matches!(self.right_tail, Tail::Horizontal | Tail::Ray { .. });
        }
        let i = self.verts.partition_point(|v| v.0 <= a);
        if i == 0 {
            return false;
        }
        matches!(self.segs.get(i - 1), Some(SegForm::Affine))
    }

    // -- pointwise sum ------------------------------------------------------

    /// Minkowski sum of operator values over the intersection of
    /// domains.
    pub fn pointwise_sum(curves: &[MonotoneCurve]) -> Result<MonotoneCurve> {
        if curves.is_empty() {
            return Err(Error::Argument("pointwise_sum of an empty list".into()));
        }
        if curves.len() == 1 {
            return Ok(curves[0].clone());
        }
        let doms: Vec<DomainBounds> = curves.iter().map(|c| c.domain()).collect();
        let lo = doms.iter().map(|d| d.lo).max().unwrap();
        let hi = doms.iter().map(|d| d.hi).min().unwrap();
        if lo > hi {
            return Err(Error::Domain {
                x: lo.value(),
                dom: Interval::new(lo, lo),
            });
        }
        let lo_attained = lo.is_finite() && doms.iter().all(|d| d.contains(lo.value()));
        let hi_attained = hi.is_finite() && doms.iter().all(|d| d.contains(hi.value()));
        if lo == hi && !(lo_attained && hi_attained) {
            return Err(Error::Domain {
                x: lo.value(),
                dom: Interval::new(lo, hi),
            });
        }

        let mut bps: Vec<f64> = Vec::new();
        for c in curves {
            for &(x, _) in &c.verts {
                if ExtReal::new(x) > lo && ExtReal::new(x) < hi {
                    bps.push(x);
                }
            }
        }
        if lo_attained {
            bps.push(lo.value());
        }
        if hi_attained {
            bps.push(hi.value());
        }
        bps.sort_by(f64::total_cmp);
        bps.dedup();
        if bps.is_empty() {
            let anchor = if lo.is_finite() {
                lo.value() + 1.0
            } else if hi.is_finite() {
                hi.value() - 1.0
            } else {
                0.0
            };
            bps.push(anchor);
        }

        let mut verts: Vec<(f64, f64)> = Vec::new();
        let mut segs: Vec<SegForm> = Vec::new();

        for (k, &x) in bps.iter().enumerate() {
            let mut sum = curves[0].eval(x)?;
            for c in &curves[1..] {
                sum = sum.minkowski_add(&c.eval(x)?);
            }
            let top = sum.hi();
            let bot = sum.lo();
            // Infinite ends are carried by the vertical tails added below.
            let top_f = if top.is_finite() {
                top.value()
            } else {
                bot.value()
            };
            let bot_f = if bot.is_finite() {
                bot.value()
            } else {
                top.value()
            };
            if verts
                .last()
                .map(|&(vx, vy)| (vx, vy) != (x, top_f))
                .unwrap_or(true)
            {
                verts.push((x, top_f));
            }
            if bot_f != top_f {
                segs.push(SegForm::Affine);
                verts.push((x, bot_f));
            }
            if k + 1 < bps.len() {
                let b = bps[k + 1];
                segs.push(Self::sum_cell_form(curves, x, b)?);
            }
        }

        let left_tail = if lo_attained {
            // A maximal curve attaining a finite lower domain endpoint is
            // vertical there, so the sum is as well.
            Tail::Vertical
        } else {
            Self::sum_outer_tail(curves, lo, *bps.first().unwrap(), true)?
        };
        let right_tail = if hi_attained {
            Tail::Vertical
        } else {
            Self::sum_outer_tail(curves, hi, *bps.last().unwrap(), false)?
        };
        MonotoneCurve::from_parts(verts, segs, left_tail, right_tail)
    }

    /// Local form of the sum on the open cell `(a, b)` containing no
    /// breakpoints.
    fn sum_cell_form(curves: &[MonotoneCurve], a: f64, b: f64) -> Result<SegForm> {
        let all_affine = curves.iter().all(|c| c.cell_is_affine(a, b));
        if all_affine {
            return Ok(SegForm::Affine);
        }
        let mut terms = FuncTerms::default();
        for c in curves {
            terms = terms.add(&c.local_terms_on(a, b)?);
        }
        Ok(SegForm::Func(Arc::new(terms)))
    }

    /// Closed-form terms describing the curve on the open interval
    /// `(a, b)` (which must not contain any vertex).
    fn local_terms_on(&self, a: f64, b: f64) -> Result<FuncTerms> {
        let (x0, y0) = self.first_vertex();
        let (xn, yn) = self.last_vertex();
        let unsupported =
            || Error::Capability("transposed segments cannot be combined in closed form".into());
        if b <= x0 {
            return match &self.left_tail {
                Tail::Horizontal => Ok(FuncTerms::constant(y0)),
                Tail::Ray { slope } => Ok(FuncTerms::affine(y0 - slope * x0, *slope)),
                Tail::Curve { f, of_y: false, .. } => Ok((**f).clone()),
                _ => Err(unsupported()),
            };
        }
        if a >= xn {
            return match &self.right_tail {
                Tail::Horizontal => Ok(FuncTerms::constant(yn)),
                Tail::Ray { slope } => Ok(FuncTerms::affine(yn - slope * xn, *slope)),
                Tail::Curve { f, of_y: false, .. } => Ok((**f).clone()),
                _ => Err(unsupported()),
            };
        }
        let i = self.verts.partition_point(|v| v.0 <= a);
        if i == 0 {
            return Err(Error::Domain {
                x: a,
                dom: self.domain().as_interval(),
            });
        }
        let (ax, ay) = self.verts[i - 1];
        let (bx, by) = self.verts[i];
        debug_assert!(ax <= a && b <= bx, "cell ({a}, {b}) straddles vertices");
        match &self.segs[i - 1] {
            SegForm::Affine => {
                let slope = (by - ay) / (bx - ax);
                Ok(FuncTerms::affine(ay - slope * ax, slope))
            }
            SegForm::Func(f) => Ok((**f).clone()),
            SegForm::FuncOfY(_) => Err(unsupported()),
        }
    }

    /// Tail of a sum beyond the extreme merged breakpoint.
    fn sum_outer_tail(
        curves: &[MonotoneCurve],
        dom_end: ExtReal,
        bp: f64,
        is_left: bool,
    ) -> Result<Tail> {
        let mut all_horizontal = true;
        let mut slope_sum = 0.0;
        let mut any_curve = false;
        for c in curves {
            let region_tail = if is_left { &c.left_tail } else { &c.right_tail };
            let (x0, _) = c.first_vertex();
            let (xn, _) = c.last_vertex();
            let in_tail = if is_left { bp <= x0 } else { bp >= xn };
            if in_tail {
                match region_tail {
                    Tail::Horizontal => {}
                    Tail::Ray { slope } => {
                        all_horizontal = false;
                        slope_sum += slope;
                    }
                    Tail::Curve { .. } => {
                        any_curve = true;
                        all_horizontal = false;
                    }
                    _ => {
                        return Err(Error::Capability(
                            "cannot combine this tail in closed form".into(),
                        ))
                    }
                }
            } else {
                any_curve = true;
                all_horizontal = false;
            }
        }
        if all_horizontal {
            return Ok(Tail::Horizontal);
        }
        if !any_curve {
            return Ok(Tail::Ray { slope: slope_sum });
        }
        // Probe interval strictly inside the outer region.
        let (pa, pb) = if dom_end.is_finite() {
            if is_left {
                (0.5 * (dom_end.value() + bp), bp)
            } else {
                (bp, 0.5 * (bp + dom_end.value()))
            }
        } else if is_left {
            (bp - 1.0, bp)
        } else {
            (bp, bp + 1.0)
        };
        let mut terms = FuncTerms::default();
        for c in curves {
            terms = terms.add(&c.local_terms_on(pa, pb)?);
        }
        Ok(Tail::Curve {
            f: Arc::new(terms),
            of_y: false,
            limit: dom_end,
        })
    }
}

/// Solves an `of_y` tail for the y attaining abscissa `x`. The tail runs
/// from the boundary vertex value `y_boundary` toward `limit` (upward on
/// the left side, downward on the right).
fn solve_of_y_tail(f: &FuncTerms, x: f64, y_boundary: f64, limit: ExtReal, upward: bool) -> f64 {
    let dir = if upward { 1.0 } else { -1.0 };
    let mut step = 1.0f64.max(y_boundary.abs() * 1e-9);
    let mut y_far = y_boundary;
    let approach_zero = limit.is_finite() && limit.value() == 0.0 && !upward;
    for _ in 0..200 {
        if approach_zero {
            y_far = if y_far == y_boundary {
                y_boundary * 0.5
            } else {
                y_far * 0.5
            };
        } else {
            y_far = y_boundary + dir * step;
            if limit.is_finite() {
                let eps = f64::EPSILON * limit.value().abs().max(1.0);
                y_far = if upward {
                    y_far.min(limit.value() - eps)
                } else {
                    y_far.max(limit.value() + eps)
                };
            }
            step *= 2.0;
        }
        let v = f.eval(y_far);
        // Along the tail x moves away from the boundary vertex.
        if (upward && v <= x) || (!upward && v >= x) {
            break;
        }
    }
    let (ylo, yhi) = if upward {
        (y_boundary, y_far)
    } else {
        (y_far, y_boundary)
    };
    f.solve(x, ylo.min(yhi), ylo.max(yhi))
}

fn scale_ext(v: ExtReal, a: f64) -> ExtReal {
    if v.is_finite() {
        ExtReal::new(v.value() * a)
    } else {
        v
    }
}

fn bracket_tail_crossing(f: &FuncTerms, start: f64, target: f64) -> f64 {
    let mut step = 1.0f64.max(start.abs() * 1e-6);
    let mut x = start;
    for _ in 0..200 {
        x = start + step;
        if f.eval(x) <= target {
            break;
        }
        step *= 2.0;
    }
    x
}

/// Refinement grid with the default tolerance and vertex cap.
pub fn refine(f: &FuncTerms, a: f64, b: f64) -> Vec<f64> {
    refine_grid(f, a, b, DEFAULT_REFINE_TOL, MAX_REFINE_VERTS)
}

/// Adaptive refinement grid for a closed form on `[a, b]`: subdivides
/// until the affine chord matches the function within `tol` (relative
/// above magnitude 1).
fn refine_grid(f: &FuncTerms, a: f64, b: f64, tol: f64, cap: usize) -> Vec<f64> {
    #[allow(clippy::too_many_arguments)]
    fn rec(
        f: &FuncTerms,
        a: f64,
        fa: f64,
        b: f64,
        fb: f64,
        tol: f64,
        depth: u32,
        out: &mut Vec<f64>,
        cap: usize,
    ) {
        let m = 0.5 * (a + b);
        if depth == 0 || out.len() >= cap || m <= a || m >= b {
            out.push(b);
            return;
        }
        let fm = f.eval(m);
        let chord = 0.5 * (fa + fb);
        if (fm - chord).abs() <= tol * 1.0f64.max(fm.abs()) {
            out.push(b);
            return;
        }
        rec(f, a, fa, m, fm, tol, depth - 1, out, cap);
        rec(f, m, fm, b, fb, tol, depth - 1, out, cap);
    }
    let mut out = vec![a];
    rec(f, a, f.eval(a), b, f.eval(b), tol, 42, &mut out, cap);
    out
}

// ---------------------------------------------------------------------------
// Serialization
// ---------------------------------------------------------------------------

#[derive(Serialize, Deserialize)]
struct ExactFormRepr {
    tag: String,
    params: Vec<SegEntry>,
}

#[derive(Serialize, Deserialize)]
struct SegEntry {
    index: usize,
    of_y: bool,
    terms: FuncTerms,
}

#[derive(Serialize, Deserialize)]
struct CurveRepr {
    vertices: Vec<(f64, f64)>,
    left_tail: Tail,
    right_tail: Tail,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    exact_form: Option<ExactFormRepr>,
}

impl Serialize for MonotoneCurve {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut params = Vec::new();
        for (i, seg) in self.segs.iter().enumerate() {
            match seg {
                SegForm::Affine => {}
                SegForm::Func(f) => params.push(SegEntry {
                    index: i,
                    of_y: false,
                    terms: (**f).clone(),
                }),
                SegForm::FuncOfY(f) => params.push(SegEntry {
                    index: i,
                    of_y: true,
                    terms: (**f).clone(),
                }),
            }
        }
        let repr = CurveRepr {
            vertices: self.verts.clone(),
            left_tail: self.left_tail.clone(),
            right_tail: self.right_tail.clone(),
            exact_form: if params.is_empty() {
                None
            } else {
                Some(ExactFormRepr {
                    tag: "piecewise".into(),
                    params,
                })
            },
        };
        repr.serialize(s)
    }
}

impl<'de> Deserialize<'de> for MonotoneCurve {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let repr = CurveRepr::deserialize(d)?;
        let mut segs = vec![SegForm::Affine; repr.vertices.len().saturating_sub(1)];
        if let Some(exact) = repr.exact_form {
            for entry in exact.params {
                let slot = segs
                    .get_mut(entry.index)
                    .ok_or_else(|| D::Error::custom("exact_form segment index out of range"))?;
                *slot = if entry.of_y {
                    SegForm::FuncOfY(Arc::new(entry.terms))
                } else {
                    SegForm::Func(Arc::new(entry.terms))
                };
            }
        }
        MonotoneCurve::from_parts(repr.vertices, segs, repr.left_tail, repr.right_tail)
            .map_err(|e| D::Error::custom(e.to_string()))
    }
}

// ---------------------------------------------------------------------------

#[cfg(test)]
mod tests {
    use super::*;

    fn pt(v: f64) -> Interval {
        Interval::point(v)
    }

    #[test]
    fn incr_evaluates_like_a_step() {
        let c = MonotoneCurve::incr(0.0);
        assert_eq!(c.eval(-1.0).unwrap(), pt(1.0));
        assert_eq!(c.eval(0.0).unwrap(), Interval::of(0.0, 1.0));
        assert_eq!(c.eval(2.0).unwrap(), pt(0.0));
        let c3 = MonotoneCurve::incr(3.0);
        assert_eq!(c3.eval(2.999).unwrap(), pt(1.0));
    }

    #[test]
    fn id_pow_evaluates_exactly() {
        let c = MonotoneCurve::id_pow(2.0).unwrap();
        assert_eq!(c.eval(2.0).unwrap(), pt(0.25));
        // Outside the refined window the tails still evaluate exactly.
        let far = c.eval(1000.0).unwrap();
        assert!((far.lo().value() - 1e-6).abs() < 1e-18);
        let near = c.eval(1e-3).unwrap();
        assert!((near.lo().value() - 1e6).abs() < 1e-7);
        let half = MonotoneCurve::id_pow(0.5).unwrap();
        assert!((half.eval(4.0).unwrap().lo().value() - 0.5).abs() < 1e-15);
    }

    #[test]
    fn exp_profile_evaluates_exactly() {
        let c = MonotoneCurve::exp_profile();
        assert_eq!(c.eval(0.0).unwrap(), pt(1.0));
        let v = c.eval(30.0).unwrap().lo().value();
        assert!((v - (-30.0f64).exp()).abs() <= 1e-22);
        let w = c.eval(-7.0).unwrap().lo().value();
        assert!((w - 7.0f64.exp()).abs() < 1e-10);
    }

    #[test]
    fn domain_error_carries_domain() {
        let c = MonotoneCurve::id_pow(1.5).unwrap();
        match c.eval(-1.0) {
            Err(Error::Domain { x, dom }) => {
                assert_eq!(x, -1.0);
                assert_eq!(dom.lo(), ExtReal::new(0.0));
                assert_eq!(dom.hi(), ExtReal::POS_INF);
            }
            other => panic!("expected domain error, got {other:?}"),
        }
    }

    #[test]
    fn invert_swaps_jump_and_flat() {
        let inv = MonotoneCurve::incr(0.5).invert();
        assert_eq!(inv.eval(0.25).unwrap(), pt(0.5));
        assert_eq!(inv.eval(0.75).unwrap(), pt(0.5));
        // T(1) = (-inf, 0.5] and T(0) = [0.5, inf).
        let at1 = inv.eval(1.0).unwrap();
        assert_eq!(at1.lo(), ExtReal::NEG_INF);
        assert_eq!(at1.hi(), ExtReal::new(0.5));
        let at0 = inv.eval(0.0).unwrap();
        assert_eq!(at0.lo(), ExtReal::new(0.5));
        assert_eq!(at0.hi(), ExtReal::POS_INF);
    }

    #[test]
    fn invert_id_pow_closed_form() {
        let c = MonotoneCurve::id_pow(2.0).unwrap();
        let inv = c.invert();
        assert!((inv.eval(0.25).unwrap().lo().value() - 2.0).abs() < 1e-12);
    }

    #[test]
    fn involution_restores_vertices() {
        let c = MonotoneCurve::polyline(
            vec![(0.0, 3.0), (1.0, 2.0), (1.0, 1.5), (2.5, 0.0)],
            Tail::Horizontal,
            Tail::Ray { slope: -2.0 },
        )
        .unwrap();
        let back = c.invert().invert();
        assert_eq!(back.vertices(), c.vertices());
        assert_eq!(back.left_tail(), c.left_tail());
        assert_eq!(back.right_tail(), c.right_tail());
    }

    #[test]
    fn exp_inverts_to_logarithm() {
        let c = MonotoneCurve::exp_profile();
        let inv = c.invert();
        let v = inv.eval(0.5).unwrap().lo().value();
        assert!((v - std::f64::consts::LN_2).abs() < 1e-15, "got {v}");
    }

    #[test]
    fn scale_examples() {
        let c = MonotoneCurve::id_pow(2.0).unwrap();
        let s = c.scale(4.0, Axis::Y).unwrap();
        assert_eq!(s.eval(2.0).unwrap(), pt(1.0));
        let back = c.scale(2.0, Axis::X).unwrap().scale(0.5, Axis::X).unwrap();
        assert!((back.eval(2.0).unwrap().lo().value() - 0.25).abs() < 1e-15);
        let e_scaled = MonotoneCurve::exp_profile()
            .scale(std::f64::consts::E, Axis::Y)
            .unwrap();
        assert!((e_scaled.eval(1.0).unwrap().lo().value() - 1.0).abs() < 1e-15);
    }

    #[test]
    fn scale_rejects_nonpositive() {
        let c = MonotoneCurve::incr(0.0);
        assert!(matches!(c.scale(0.0, Axis::Y), Err(Error::Argument(_))));
        assert!(matches!(c.scale(-2.0, Axis::X), Err(Error::Argument(_))));
    }

    #[test]
    fn pointwise_sum_of_flats() {
        let a = MonotoneCurve::constant(2.0);
        let b = MonotoneCurve::constant(3.5);
        let s = MonotoneCurve::pointwise_sum(&[a, b]).unwrap();
        assert_eq!(s.eval(-17.0).unwrap(), pt(5.5));
        assert_eq!(s.eval(4.0).unwrap(), pt(5.5));
    }

    #[test]
    fn pointwise_sum_merges_jumps() {
        let a = MonotoneCurve::incr(0.0);
        let b = MonotoneCurve::incr(1.0);
        let s = MonotoneCurve::pointwise_sum(&[a, b]).unwrap();
        assert_eq!(s.eval(-0.5).unwrap(), pt(2.0));
        assert_eq!(s.eval(0.0).unwrap(), Interval::of(1.0, 2.0));
        assert_eq!(s.eval(0.5).unwrap(), pt(1.0));
        assert_eq!(s.eval(1.0).unwrap(), Interval::of(0.0, 1.0));
        assert_eq!(s.eval(2.0).unwrap(), pt(0.0));
    }

    #[test]
    fn sum_of_copies_is_y_scaling() {
        let c = MonotoneCurve::polyline(
            vec![(0.0, 2.0), (1.0, 1.0), (1.0, 0.5), (2.0, 0.25)],
            Tail::Horizontal,
            Tail::Horizontal,
        )
        .unwrap();
        let s = MonotoneCurve::pointwise_sum(&[c.clone(), c.clone(), c.clone()]).unwrap();
        let scaled = c.scale(3.0, Axis::Y).unwrap();
        for x in [-1.0, 0.0, 0.3, 1.0, 1.7, 2.0, 5.0] {
            assert_eq!(s.eval(x).unwrap(), scaled.eval(x).unwrap(), "at {x}");
        }
    }

    #[test]
    fn leq_is_reflexive_and_orders_shifts() {
        let c = MonotoneCurve::polyline(
            vec![(0.0, 1.0), (0.0, 0.5), (2.0, 0.0)],
            Tail::Horizontal,
            Tail::Horizontal,
        )
        .unwrap();
        assert!(c.leq(&c));
        let shifted = MonotoneCurve::polyline(
            vec![(0.5, 1.0), (0.5, 0.6), (2.5, 0.1)],
            Tail::Horizontal,
            Tail::Horizontal,
        )
        .unwrap();
        assert!(c.leq(&shifted));
        assert!(!shifted.leq(&c));
    }

    #[test]
    fn leq_matches_exp_envelope() {
        // Survival of a rate-1 exponential law: 1 on t <= 0, e^{-t} after.
        let f = Arc::new(FuncTerms::exponential(1.0, -1.0));
        let xs = refine_grid(&f, 0.0, 16.0, DEFAULT_REFINE_TOL, MAX_REFINE_VERTS);
        let verts: Vec<(f64, f64)> = xs.iter().map(|&x| (x, f.eval(x))).collect();
        let segs = vec![SegForm::Func(f.clone()); verts.len() - 1];
        let surv = MonotoneCurve::from_parts(
            verts,
            segs,
            Tail::Horizontal,
            Tail::Curve {
                f,
                of_y: false,
                limit: ExtReal::POS_INF,
            },
        )
        .unwrap();
        let envelope = MonotoneCurve::exp_profile();
        assert!(surv.leq(&envelope));
        assert!(!envelope.leq(&surv));
    }

    #[test]
    fn clip_above_flattens_the_head() {
        let c = MonotoneCurve::incr(1.0).scale(3.0, Axis::Y).unwrap();
        let clipped = c.clip_above(1.0);
        assert_eq!(clipped.eval(0.0).unwrap(), pt(1.0));
        assert_eq!(clipped.eval(1.0).unwrap(), Interval::of(0.0, 1.0));
        assert_eq!(clipped.eval(2.0).unwrap(), pt(0.0));
    }

    #[test]
    fn clip_above_solves_curved_crossings() {
        let four_over_t2 = MonotoneCurve::id_pow(2.0)
            .unwrap()
            .scale(4.0, Axis::Y)
            .unwrap();
        let clipped = four_over_t2.clip_above(1.0);
        assert_eq!(clipped.eval(1.0).unwrap().hi().value(), 1.0);
        assert_eq!(clipped.eval(0.2).unwrap(), pt(1.0));
        assert!((clipped.eval(4.0).unwrap().lo().value() - 0.25).abs() < 1e-12);
    }

    #[test]
    fn integrate_polyline_and_tail() {
        let c = MonotoneCurve::incr(0.5);
        assert!((c.integrate(0.0, 1.0).unwrap() - 0.5).abs() < 1e-15);
        let e = MonotoneCurve::exp_profile();
        let v = e.integrate(0.0, 100.0).unwrap();
        assert!((v - 1.0).abs() < 1e-9, "got {v}");
    }

    #[test]
    fn canonicalize_merges_collinear_runs() {
        let c = MonotoneCurve::polyline(
            vec![(0.0, 2.0), (1.0, 1.5), (2.0, 1.0), (3.0, 0.0)],
            Tail::Horizontal,
            Tail::Horizontal,
        )
        .unwrap();
        let k = c.canonicalize();
        assert_eq!(k.vertices(), &[(0.0, 2.0), (2.0, 1.0), (3.0, 0.0)]);
    }

    #[test]
    fn json_round_trip_polyline_bit_exact() {
        let c = MonotoneCurve::polyline(
            vec![(0.25, 0.75), (0.5, 0.375), (0.5, 0.125), (1.5, 0.0)],
            Tail::Horizontal,
            Tail::Horizontal,
        )
        .unwrap();
        let j = serde_json::to_string(&c).unwrap();
        let back: MonotoneCurve = serde_json::from_str(&j).unwrap();
        assert_eq!(back, c);
        assert!(!j.contains("exact_form"));
    }

    #[test]
    fn json_round_trip_exact_form() {
        let c = MonotoneCurve::exp_profile();
        let j = serde_json::to_string(&c).unwrap();
        let back: MonotoneCurve = serde_json::from_str(&j).unwrap();
        for x in [-1.0, 0.0, 0.123, 7.0, 100.0] {
            assert_eq!(back.eval(x).unwrap(), c.eval(x).unwrap());
        }
    }

    #[test]
    fn rejects_non_maximal_curves() {
        let r = MonotoneCurve::polyline(
            vec![(0.0, 1.0), (1.0, 0.0)],
            Tail::None,
            Tail::Horizontal,
        );
        assert!(r.is_err());
    }

    #[test]
    fn rejects_non_monotone_vertices() {
        let r = MonotoneCurve::polyline(
            vec![(0.0, 0.0), (1.0, 1.0)],
            Tail::Horizontal,
            Tail::Horizontal,
        );
        assert!(r.is_err());
    }

    #[test]
    fn averaging_transform_of_power() {
        // (1/p)∫₀ᵖ r^{-1/2} dr = 2 p^{-1/2}
        let f = FuncTerms::power(1.0, -0.5);
        let h = f.averaging_transform(0.0).unwrap();
        for p in [0.01f64, 0.25, 0.9] {
            let expect = 2.0 * p.powf(-0.5);
            assert!((h.eval(p) - expect).abs() < 1e-12 * expect);
        }
    }

    #[test]
    fn functerms_algebra() {
        let a = FuncTerms::power(2.0, -0.5);
        let b = FuncTerms::log_affine(1.0, -1.0);
        let s = a.add(&b);
        let x = 0.3;
        assert!((s.eval(x) - (2.0 * x.powf(-0.5) + 1.0 - x.ln())).abs() < 1e-14);
        let sx = s.scale_x(2.0);
        assert!((sx.eval(2.0 * x) - s.eval(x)).abs() < 1e-14);
        let sy = s.scale_y(3.0);
        assert!((sy.eval(x) - 3.0 * s.eval(x)).abs() < 1e-14);
    }

    #[test]
    fn functerms_integer_power_expansion() {
        let h = FuncTerms {
            konst: 1.0,
            recip: 0.5,
            ..Default::default()
        };
        let sq = h.pow_int(2).unwrap();
        for p in [0.2, 0.5, 0.9] {
            let direct = (1.0 + 0.5 / p) * (1.0 + 0.5 / p);
            assert!((sq.eval(p) - direct).abs() < 1e-12);
        }
        let with_log = FuncTerms::log_affine(1.0, -1.0);
        assert!(with_log.pow_int(2).is_none());
    }
}
