//! Associated weight functions as convex piecewise-linear functions of `u = log t`.
//!
//! A [`LogPL`] is the upper envelope of affine pieces `u -> s_k u - c_k` with increasing
//! slopes `s_0 = 0 < s_1 < ...`. Piece `k` is active on `[b_k, b_{k+1}]`. For the function
//! associated with a log-convex sequence, `s_k = k`, `c_k = log M_k` and `b_k = log mu_k`.
//! The Young conjugate is then the piecewise-linear interpolation of the knots `(s_k, c_k)`.

use crate::error::{Error, Result};
use crate::num::fmt_f64;
use crate::seqcore::{convolve, is_log_convex, power, LogSequence};

/// Slack allowed when checking evaluation points against validity bounds.
const DOMAIN_SLACK: f64 = 1e-12;

fn within(u: f64, bound: f64) -> bool {
    u <= bound + DOMAIN_SLACK * bound.abs().max(1.0)
}

#[derive(Debug, Clone, PartialEq)]
pub struct LogPL {
    slopes: Vec<f64>,
    intercepts: Vec<f64>,
    /// `breaks[k]` is where piece `k` starts; `breaks[0] = -inf`.
    breaks: Vec<f64>,
    u_max: f64,
}

impl LogPL {
    /// Build from pieces. `breakpoints[k-1]` is the start of piece `k`; slopes must increase,
    /// breakpoints must be nondecreasing and `u_max` must not precede the last breakpoint.
    pub fn from_pieces(
        slopes: Vec<f64>,
        intercepts: Vec<f64>,
        breakpoints: Vec<f64>,
        u_max: f64,
    ) -> Result<Self> {
        let n = slopes.len();
        if n == 0 || intercepts.len() != n || breakpoints.len() + 1 != n {
            return Err(Error::Construction("inconsistent piece counts".into()));
        }
        if slopes
            .iter()
            .chain(&intercepts)
            .chain(&breakpoints)
            .any(|v| !v.is_finite())
            || u_max.is_nan()
        {
            return Err(Error::Construction("non-finite piece data".into()));
        }
        if slopes[0] < 0.0 || slopes.windows(2).any(|w| w[1] <= w[0]) {
            return Err(Error::Construction("slopes must be nonnegative and increasing".into()));
        }
        if breakpoints.windows(2).any(|w| w[1] < w[0]) {
            return Err(Error::Construction("breakpoints must be nondecreasing".into()));
        }
        if let Some(last) = breakpoints.last() {
            if u_max < *last {
                return Err(Error::Construction("validity bound precedes last breakpoint".into()));
            }
        }
        let mut breaks = Vec::with_capacity(n);
        breaks.push(f64::NEG_INFINITY);
        breaks.extend(breakpoints);
        Ok(LogPL {
            slopes,
            intercepts,
            breaks,
            u_max,
        })
    }

    /// Upper envelope of the affine functions `x_k u - v_k` given convex knots `(x_k, v_k)`.
    /// Breakpoints are the knot-to-knot slopes.
    pub fn from_knots(xs: &[f64], vals: &[f64]) -> Result<Self> {
        if xs.len() != vals.len() || xs.is_empty() {
            return Err(Error::Construction("knot arrays differ in length".into()));
        }
        let bps: Vec<f64> = (1..xs.len())
            .map(|i| (vals[i] - vals[i - 1]) / (xs[i] - xs[i - 1]))
            .collect();
        let u_max = bps.last().copied().unwrap_or(f64::INFINITY);
        Self::from_pieces(xs.to_vec(), vals.to_vec(), bps, u_max)
    }

    pub fn slopes(&self) -> &[f64] {
        &self.slopes
    }

    pub fn intercepts(&self) -> &[f64] {
        &self.intercepts
    }

    /// Breakpoints `b_1, ..., b_n` (start of pieces `1..=n`).
    pub fn breakpoints(&self) -> &[f64] {
        &self.breaks[1..]
    }

    pub fn u_max(&self) -> f64 {
        self.u_max
    }

    pub fn t_max(&self) -> f64 {
        self.u_max.exp()
    }

    /// Largest slope, which bounds the conjugate's domain.
    pub fn x_max(&self) -> f64 {
        *self.slopes.last().expect("at least one piece")
    }

    /// Smallest breakpoint, or `u_max` for a single piece.
    pub fn u_min(&self) -> f64 {
        self.breaks.get(1).copied().unwrap_or(self.u_max)
    }

    /// Value vanishes left of the first breakpoint.
    pub fn has_zero_left_tail(&self) -> bool {
        self.slopes[0] == 0.0 && self.intercepts[0] == 0.0
    }

    /// Index of the piece active at `u` (the last piece whose breakpoint is `<= u`).
    fn piece(&self, u: f64) -> usize {
        self.breaks.partition_point(|b| *b <= u) - 1
    }

    /// Value at `u = log t`.
    pub fn eval_u(&self, u: f64) -> Result<f64> {
        if u.is_nan() {
            return Err(Error::Domain("evaluation at NaN".into()));
        }
        if !within(u, self.u_max) {
            return Err(Error::Domain(format!(
                "u = {u} beyond validity bound u_max = {}",
                self.u_max
            )));
        }
        Ok(self.eval_u_unchecked(u))
    }

    pub(crate) fn eval_u_unchecked(&self, u: f64) -> f64 {
        let k = self.piece(u);
        self.slopes[k] * u - self.intercepts[k]
    }

    /// Value at `t > 0`; `t = 0` gives the left-tail value.
    pub fn eval(&self, t: f64) -> Result<f64> {
        if t < 0.0 || t.is_nan() {
            return Err(Error::Domain(format!("t = {t} must be nonnegative")));
        }
        if t == 0.0 {
            return Ok(-self.intercepts[0]);
        }
        self.eval_u(t.ln())
    }

    /// Right slope at `u`; for associated functions this is the counting function.
    pub fn slope_at_u(&self, u: f64) -> Result<f64> {
        if !within(u, self.u_max) {
            return Err(Error::Domain(format!(
                "u = {u} beyond validity bound u_max = {}",
                self.u_max
            )));
        }
        Ok(self.slopes[self.piece(u)])
    }

    /// CSV with columns `u, slope, value` at each breakpoint.
    pub fn to_csv(&self) -> String {
        let mut s = String::from("u,slope,value\n");
        for k in 1..self.slopes.len() {
            let u = self.breaks[k];
            let v = self.slopes[k] * u - self.intercepts[k];
            s.push_str(&format!("{},{},{}\n", fmt_f64(u), fmt_f64(self.slopes[k]), fmt_f64(v)));
        }
        s
    }
}

/// Young conjugate on `[0, x_max]`, the interpolation of convex knots.
#[derive(Debug, Clone, PartialEq)]
pub struct ConjugatePL {
    xs: Vec<f64>,
    vals: Vec<f64>,
    /// Slope on `(xs[i], xs[i+1])`.
    seg_slopes: Vec<f64>,
}

impl ConjugatePL {
    pub fn knots(&self) -> impl Iterator<Item = (f64, f64)> + '_ {
        self.xs.iter().copied().zip(self.vals.iter().copied())
    }

    pub fn xs(&self) -> &[f64] {
        &self.xs
    }

    pub fn values(&self) -> &[f64] {
        &self.vals
    }

    pub fn segment_slopes(&self) -> &[f64] {
        &self.seg_slopes
    }

    pub fn x_max(&self) -> f64 {
        *self.xs.last().expect("at least one knot")
    }

    /// Index `i` of the segment `[xs[i], xs[i+1]]` containing `x` (`x` inside the domain).
    pub(crate) fn segment(&self, x: f64) -> usize {
        let i = self.xs.partition_point(|k| *k <= x);
        i.saturating_sub(1).min(self.xs.len().saturating_sub(2))
    }

    pub fn eval(&self, x: f64) -> Result<f64> {
        if x.is_nan() || x < 0.0 {
            return Err(Error::Domain(format!("conjugate argument {x} must be >= 0")));
        }
        if !within(x, self.x_max()) {
            return Err(Error::Domain(format!(
                "conjugate argument {x} beyond x_max = {}",
                self.x_max()
            )));
        }
        if self.xs.len() == 1 {
            return Ok(self.vals[0]);
        }
        let i = self.segment(x);
        if x == self.xs[i] {
            return Ok(self.vals[i]);
        }
        if x >= self.xs[i + 1] {
            return Ok(self.vals[i + 1]);
        }
        Ok(self.vals[i] + self.seg_slopes[i] * (x - self.xs[i]))
    }

    /// Slope on the segment right of `x` (left of `x` at the domain end).
    pub fn slope_right_of(&self, x: f64) -> f64 {
        self.seg_slopes[self.segment(x)]
    }

    /// CSV with columns `x, value`.
    pub fn to_csv(&self) -> String {
        let mut s = String::from("x,value\n");
        for (x, v) in self.knots() {
            s.push_str(&format!("{},{}\n", fmt_f64(x), fmt_f64(v)));
        }
        s
    }
}

/// `omega_M` for a log-convex sequence. Valid for `t <= mu_P`.
pub fn omega_of(m: &LogSequence) -> Result<LogPL> {
    if let Some(p) = is_log_convex(m).first_violation {
        return Err(Error::Precondition(format!(
            "sequence is not log-convex at p = {p}; apply lc_regularize first"
        )));
    }
    let n = m.truncation();
    let slopes: Vec<f64> = (0..=n).map(|k| k as f64).collect();
    let bps = m.log_mu()[1..].to_vec();
    let u_max = bps[n - 1];
    LogPL::from_pieces(slopes, m.log_m().to_vec(), bps, u_max)
}

/// `Sigma_M(t)`: number of quotients `mu_p <= t`, with multiplicity.
pub fn counting(m: &LogSequence, t: f64) -> Result<usize> {
    if !(t > 0.0) {
        return Err(Error::Domain(format!("counting argument {t} must be > 0")));
    }
    let mu = &m.log_mu()[1..];
    let u = t.ln();
    let last = mu.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    if !within(u, last) {
        return Err(Error::Domain(format!(
            "t = {t} beyond validity bound mu_P = {}",
            last.exp()
        )));
    }
    Ok(mu.iter().filter(|v| **v <= u).count())
}

/// `sup_t t^p / exp(omega(t))` in log form.
pub fn reconstruct(omega: &LogPL, p: usize) -> Result<f64> {
    if p as f64 > omega.x_max() {
        return Err(Error::Domain(format!(
            "index {p} exceeds slope capacity {}",
            omega.x_max()
        )));
    }
    young_conjugate(omega).eval(p as f64)
}

/// Largest log-convex minorant of `p -> log M_p` (lower convex hull).
pub fn lc_regularize(m: &LogSequence) -> LogSequence {
    if is_log_convex(m).convex {
        return m.clone();
    }
    let y = m.log_m();
    let mut hull: Vec<usize> = Vec::new();
    for i in 0..y.len() {
        while hull.len() >= 2 {
            let (a, b) = (hull[hull.len() - 2], hull[hull.len() - 1]);
            // Drop b when it lies on or above the chord from a to i.
            let lhs = (y[b] - y[a]) * (i - a) as f64;
            let rhs = (y[i] - y[a]) * (b - a) as f64;
            if lhs >= rhs {
                hull.pop();
            } else {
                break;
            }
        }
        hull.push(i);
    }
    let mut mu = Vec::with_capacity(y.len() - 1);
    let mut prev = f64::NEG_INFINITY;
    for w in hull.windows(2) {
        let (a, b) = (w[0], w[1]);
        let slope = ((y[b] - y[a]) / (b - a) as f64).max(prev);
        prev = slope;
        mu.extend(std::iter::repeat_n(slope, b - a));
    }
    let out = LogSequence::from_quotients(&mu).expect("hull slopes are finite");
    match m.provenance() {
        Some(p) => out.with_provenance(*p),
        None => out,
    }
}

/// `phi*(x) = sup_{u >= 0} (x u - omega(e^u))` on `[0, x_max]`.
pub fn young_conjugate(omega: &LogPL) -> ConjugatePL {
    let b = omega.breakpoints();
    let k0 = b.partition_point(|v| *v < 0.0);
    let (s, c) = (omega.slopes(), omega.intercepts());
    let mut xs = Vec::with_capacity(s.len() - k0 + 1);
    let mut vals = Vec::with_capacity(xs.capacity());
    let mut seg = Vec::with_capacity(xs.capacity());
    if k0 > 0 || s[0] > 0.0 {
        xs.push(0.0);
        vals.push(c[k0]);
        seg.push(0.0);
    }
    for k in k0..s.len() {
        if k > k0 {
            seg.push(b[k - 1]);
        }
        xs.push(s[k]);
        vals.push(c[k]);
    }
    if xs.len() >= 2 && xs[0] == xs[1] {
        xs.remove(1);
        vals.remove(1);
        seg.remove(0);
    }
    ConjugatePL {
        xs,
        vals,
        seg_slopes: seg,
    }
}

/// Conjugate of a conjugate: recovers the upper envelope on `u >= 0`.
pub fn biconjugate(conj: &ConjugatePL) -> Result<LogPL> {
    let u_max = conj.seg_slopes.last().copied().unwrap_or(f64::INFINITY);
    LogPL::from_pieces(conj.xs.clone(), conj.vals.clone(), conj.seg_slopes.clone(), u_max)
}

/// `inf_{s>0} sigma(s) + tau(t/s)` evaluated at one point by minimizing the convex
/// function `v -> sigma(v) + tau(u - v)` over its candidate kinks.
pub fn lower_legendre(sigma: &LogPL, tau: &LogPL, t: f64) -> Result<f64> {
    if !(t > 0.0) {
        return Err(Error::Domain(format!("lower Legendre argument {t} must be > 0")));
    }
    lower_legendre_u(sigma, tau, t.ln())
}

/// [`lower_legendre`] at `u = log t`.
pub fn lower_legendre_u(sigma: &LogPL, tau: &LogPL, u: f64) -> Result<f64> {
    let hi = sigma.u_max();
    let lo = u - tau.u_max();
    if !within(lo, hi) {
        return Err(Error::Domain(format!(
            "u = {u} beyond joint validity {}",
            sigma.u_max() + tau.u_max()
        )));
    }
    let lo = lo.min(hi);
    let f = |v: f64| sigma.eval_u_unchecked(v) + tau.eval_u_unchecked((u - v).min(tau.u_max()));
    let mut best = f(lo).min(f(hi));
    for &b in sigma.breakpoints() {
        if b > lo && b < hi {
            best = best.min(f(b));
        }
    }
    for &b in tau.breakpoints() {
        let v = u - b;
        if v > lo && v < hi {
            best = best.min(f(v));
        }
    }
    Ok(best)
}

/// Whole-function lower Legendre conjugate built in the conjugate domain: the conjugate of
/// the infimal convolution is the sum of the conjugates.
pub fn lower_legendre_exact(sigma: &LogPL, tau: &LogPL) -> Result<LogPL> {
    let (cs, ct) = (young_conjugate(sigma), young_conjugate(tau));
    let x_end = cs.x_max().min(ct.x_max());
    let mut xs: Vec<f64> = cs
        .xs()
        .iter()
        .chain(ct.xs())
        .copied()
        .filter(|x| *x <= x_end)
        .collect();
    xs.sort_by(f64::total_cmp);
    xs.dedup();
    let mut vals = Vec::with_capacity(xs.len());
    for &x in &xs {
        vals.push(cs.eval(x)? + ct.eval(x)?);
    }
    let seg: Vec<f64> = xs
        .windows(2)
        .map(|w| {
            let mid = 0.5 * (w[0] + w[1]);
            cs.slope_right_of(mid) + ct.slope_right_of(mid)
        })
        .collect();
    let u_max = seg.last().copied().unwrap_or(f64::INFINITY);
    LogPL::from_pieces(xs, vals, seg, u_max)
}

/// Both sides of `omega_{M^l}(t) = l omega_M(t^(1/l))`.
pub fn power_identity_check(m: &LogSequence, ell: f64, t: f64) -> Result<(f64, f64)> {
    let lhs = omega_of(&power(m, ell)?)?.eval(t)?;
    let rhs = ell * omega_of(m)?.eval(t.powf(1.0 / ell))?;
    Ok((lhs, rhs))
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StarAdditivity {
    pub omega_star: f64,
    pub omega_sum: f64,
    pub count_star: usize,
    pub count_sum: usize,
}

/// Both sides of `omega_{M*N} = omega_M + omega_N` and `Sigma_{M*N} = Sigma_M + Sigma_N`.
/// Requires `t` within the validity of the convolution.
pub fn star_additivity_check(m: &LogSequence, n: &LogSequence, t: f64) -> Result<StarAdditivity> {
    let conv = convolve(m, n);
    let (wm, wn, wc) = (omega_of(m)?, omega_of(n)?, omega_of(&conv)?);
    let omega_star = wc.eval(t)?;
    let omega_sum = wm.eval(t)? + wn.eval(t)?;
    let count_star = counting(&conv, t)?;
    let count_sum = counting(m, t)? + counting(n, t)?;
    Ok(StarAdditivity {
        omega_star,
        omega_sum,
        count_star,
        count_sum,
    })
}

/// `n` points evenly spaced in `u` on `[u_lo, u_hi]`.
pub fn log_grid(u_lo: f64, u_hi: f64, n: usize) -> Vec<f64> {
    crate::num::linspace(u_lo, u_hi, n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::num::approx_eq;

    fn ln(x: f64) -> f64 {
        x.ln()
    }

    /// Independent oracle: brute-force sup over p of p log t - log M_p.
    fn omega_brute(m: &LogSequence, t: f64) -> f64 {
        m.log_m()
            .iter()
            .enumerate()
            .map(|(p, l)| p as f64 * t.ln() - l)
            .fold(f64::NEG_INFINITY, f64::max)
    }

    #[test]
    fn omega_of_factorial_at_three() {
        let f = LogSequence::gevrey(1.0, 50).unwrap();
        let w = omega_of(&f).unwrap();
        let v = w.eval(3.0).unwrap();
        assert!(approx_eq(v, omega_brute(&f, 3.0), 1e-12));
        assert!(approx_eq(v, 1.504077396776274, 1e-12));
        assert_eq!(w.eval(1.0).unwrap(), 0.0);
        assert_eq!(w.eval(0.5).unwrap(), 0.0);
    }

    #[test]
    fn omega_rejects_beyond_validity_and_non_convex() {
        let f = LogSequence::gevrey(1.0, 10).unwrap();
        let w = omega_of(&f).unwrap();
        assert!(w.eval(10.0).is_ok());
        assert!(matches!(w.eval(10.5), Err(Error::Domain(_))));
        let bad = LogSequence::from_logs(vec![0.0, ln(3.0), ln(4.0)]).unwrap();
        assert!(matches!(omega_of(&bad), Err(Error::Precondition(_))));
    }

    #[test]
    fn counting_examples() {
        let f = LogSequence::gevrey(1.0, 10).unwrap();
        assert_eq!(counting(&f, 3.5).unwrap(), 3);
        assert_eq!(counting(&f, 0.5).unwrap(), 0);
        let q = LogSequence::qgevrey(2.0, 10).unwrap();
        assert_eq!(counting(&q, 8.0).unwrap(), 2);
        assert!(counting(&f, 11.0).is_err());
    }

    #[test]
    fn reconstruct_round_trip_and_minorant() {
        let f = LogSequence::gevrey(1.0, 20).unwrap();
        let w = omega_of(&f).unwrap();
        assert_eq!(reconstruct(&w, 3).unwrap(), f.log_m()[3]);
        assert!(approx_eq(reconstruct(&w, 3).unwrap(), ln(6.0), 1e-15));
        assert_eq!(reconstruct(&w, 0).unwrap(), 0.0);
        assert!(reconstruct(&w, 21).is_err());

        let bad = LogSequence::from_logs(vec![0.0, ln(3.0), ln(4.0)]).unwrap();
        let reg = lc_regularize(&bad);
        let w = omega_of(&reg).unwrap();
        assert!(approx_eq(reconstruct(&w, 1).unwrap(), ln(2.0), 1e-15));
    }

    #[test]
    fn regularize_examples() {
        let bad = LogSequence::from_logs(vec![0.0, ln(3.0), ln(4.0)]).unwrap();
        let r = lc_regularize(&bad);
        assert!(approx_eq(r.log_m()[1], ln(2.0), 1e-15));
        assert!(approx_eq(r.log_m()[2], ln(4.0), 1e-15));
        assert_eq!(lc_regularize(&r), r);
        let zeros = LogSequence::from_logs(vec![0.0; 3]).unwrap();
        assert_eq!(lc_regularize(&zeros), zeros);
    }

    #[test]
    fn conjugate_examples() {
        let f = LogSequence::gevrey(1.0, 30).unwrap();
        let w = omega_of(&f).unwrap();
        let c = young_conjugate(&w);
        assert!(approx_eq(c.eval(3.0).unwrap(), 1.791759469228055, 1e-14));
        assert_eq!(c.eval(0.0).unwrap(), 0.0);
        let bi = biconjugate(&c).unwrap();
        assert!(approx_eq(bi.eval(3.0).unwrap(), 1.504077396776274, 1e-12));
    }

    #[test]
    fn lower_legendre_examples() {
        let f = LogSequence::gevrey(1.0, 60).unwrap();
        let w = omega_of(&f).unwrap();
        let v = lower_legendre(&w, &w, 9.0).unwrap();
        assert!(approx_eq(v, 2.0 * 1.504077396776274, 1e-12));
        let exact = lower_legendre_exact(&w, &w).unwrap();
        assert!(approx_eq(exact.eval(9.0).unwrap(), v, 1e-12));

        let q = LogSequence::qgevrey(2.0, 60).unwrap();
        let prod = crate::seqcore::product(&f, &q).unwrap();
        let lhs = omega_brute(&prod, 20.0);
        let rhs = lower_legendre(&w, &omega_of(&q).unwrap(), 20.0).unwrap();
        assert!((lhs - rhs).abs() <= 1e-6);
    }

    #[test]
    fn lower_legendre_with_zero_function() {
        let f = LogSequence::gevrey(1.0, 20).unwrap();
        let w = omega_of(&f).unwrap();
        let zero = LogPL::from_pieces(vec![0.0], vec![0.0], vec![], 50.0).unwrap();
        assert_eq!(lower_legendre(&w, &zero, 1e10).unwrap(), 0.0);
    }

    #[test]
    fn power_identity_examples() {
        let f = LogSequence::gevrey(1.0, 40).unwrap();
        let (a, b) = power_identity_check(&f, 2.0, 9.0).unwrap();
        assert!(approx_eq(a, b, 1e-9) && approx_eq(a, 3.008154793552548, 1e-12));
        let (a, b) = power_identity_check(&f, 1.0, 9.0).unwrap();
        assert_eq!(a, b);
        let q = LogSequence::qgevrey(2.0, 40).unwrap();
        let (a, b) = power_identity_check(&q, 3.0, 64.0).unwrap();
        assert!(approx_eq(a, b, 1e-9));
    }

    #[test]
    fn star_additivity_examples() {
        let f = LogSequence::gevrey(1.0, 40).unwrap();
        let r = star_additivity_check(&f, &f, 3.0).unwrap();
        assert!(approx_eq(r.omega_star, r.omega_sum, 1e-12));
        assert!(approx_eq(r.omega_star, 3.008154793552548, 1e-12));
        let r = star_additivity_check(&f, &f, 0.5).unwrap();
        assert_eq!((r.omega_star, r.omega_sum), (0.0, 0.0));
        let r = star_additivity_check(&f, &f, 3.5).unwrap();
        assert_eq!((r.count_star, r.count_sum), (6, 6));
    }

    #[test]
    fn csv_exports_have_headers() {
        let f = LogSequence::gevrey(1.0, 3).unwrap();
        let w = omega_of(&f).unwrap();
        let csv = w.to_csv();
        assert!(csv.starts_with("u,slope,value\n"));
        assert_eq!(csv.lines().count(), 4);
        assert!(young_conjugate(&w).to_csv().starts_with("x,value\n"));
    }
}
