//! Dispatch from a scenario to the library, and from a reference name to
//! the oracle or closed form it stands for.

use std::f64::consts::PI;

use slater_core::amplitudes::*;
use slater_core::ellipsoidal::*;
use slater_core::quadrature::{
    try_integrate_2d, try_integrate_finite, try_integrate_semi_infinite, QuadratureOptions, Rect, Span,
};
use slater_core::specfun::*;
use slater_core::theorems::*;
use slater_core::{Complex, QuadratureResult, SeriesEvaluation};

use crate::error::{usage, CliResult};
use crate::scenario::{Params, Scenario};
use crate::target::Target;

/// One accumulated row of a report.
#[derive(Debug, Clone, PartialEq)]
pub struct Row {
    pub index: usize,
    pub term: Complex,
    pub partial: Complex,
}

/// The outcome of evaluating one target.
#[derive(Debug, Clone, PartialEq)]
pub struct Evaluation {
    pub target: Target,
    pub value: Complex,
    pub rows: Vec<Row>,
    pub converged: bool,
    pub terms_used: usize,
    pub warnings: Vec<String>,
    /// Extra named outputs, printed after the value.
    pub extras: Vec<(String, String)>,
}

impl Evaluation {
    fn scalar(target: Target, value: Complex) -> Self {
        Self {
            target,
            value,
            rows: vec![Row {
                index: 0,
                term: value,
                partial: value,
            }],
            converged: true,
            terms_used: 1,
            warnings: Vec::new(),
            extras: Vec::new(),
        }
    }

    fn real(target: Target, value: f64) -> Self {
        Self::scalar(target, Complex::new(value, 0.0))
    }

    fn series(target: Target, s: SeriesEvaluation) -> Self {
        Self::indexed_series(target, s, |n| n)
    }

    fn indexed_series(target: Target, s: SeriesEvaluation, index: impl Fn(usize) -> usize) -> Self {
        let rows = s
            .terms
            .iter()
            .zip(&s.partial_sums)
            .enumerate()
            .map(|(n, (&term, &partial))| Row {
                index: index(n),
                term,
                partial,
            })
            .collect();
        Self {
            target,
            value: s.value,
            rows,
            converged: s.converged,
            terms_used: s.terms_used,
            warnings: s.warnings,
            extras: Vec::new(),
        }
    }

    /// Terms listed in order with running sums.
    fn from_terms(target: Target, items: impl IntoIterator<Item = (usize, Complex)>) -> Self {
        let mut partial = Complex::new(0.0, 0.0);
        let rows: Vec<Row> = items
            .into_iter()
            .map(|(index, term)| {
                partial += term;
                Row { index, term, partial }
            })
            .collect();
        Self {
            target,
            value: partial,
            terms_used: rows.len(),
            rows,
            converged: true,
            warnings: Vec::new(),
            extras: Vec::new(),
        }
    }

    fn quadrature<V: Into<Complex> + Copy>(target: Target, q: QuadratureResult<V>) -> Self {
        let mut e = Self::scalar(target, q.value.into());
        e.converged = q.converged;
        e.terms_used = q.evaluations;
        e.extras
            .push(("error_estimate".into(), format!("{:e}", q.error_estimate)));
        e
    }

    fn extra(mut self, key: &str, value: impl ToString) -> Self {
        self.extras.push((key.into(), value.to_string()));
        self
    }
}

fn cplx(v: f64) -> Complex {
    Complex::new(v, 0.0)
}

fn branch(p: &Params) -> CliResult<Branch> {
    match p.text("branch")? {
        "principal" => Ok(Branch::Principal),
        "conjugate" => Ok(Branch::Conjugate),
        other => Err(usage(format!("branch must be principal or conjugate, got `{other}`"))),
    }
}

fn yukawa(s: &Scenario) -> CliResult<YukawaFormParams> {
    let p = &s.params;
    let mut y =
        YukawaFormParams::new(p.real("B")?, p.complex("C")?, p.real("x2")?, p.real("k")?).with_branch(branch(p)?);
    if s.allow_k_gt_1 {
        y = y.allowing_k_above_one();
    }
    y.validate()?;
    Ok(y)
}

fn variant(p: &Params) -> CliResult<CorollaryVariant> {
    use CorollaryVariant::*;
    let v = p.text("variant")?;
    Ok(match v.trim_start_matches(['C', 'c']) {
        "1" => C1,
        "2" => C2,
        "3" => C3,
        "4" => C4,
        "5" => C5,
        "6" => C6,
        _ => return Err(usage(format!("variant must be one of C1..C6, got `{v}`"))),
    })
}

fn corollary(s: &Scenario) -> CliResult<CorollaryConfig> {
    let p = &s.params;
    let v = variant(p)?;
    let (wanted, unwanted): (&[&str], &[&str]) = if v.is_spherical() {
        (&["x1", "x2", "cos_theta"], &["y1", "z1", "z2"])
    } else {
        (&["x1", "y1", "z1", "z2"], &["x2", "cos_theta"])
    };
    if let Some(k) = unwanted.iter().find(|k| p.has(k)) {
        return Err(usage(format!("{k} does not apply to variant {v:?}")));
    }
    let missing: Vec<&str> = wanted.iter().copied().filter(|k| !p.has(k)).collect();
    if !missing.is_empty() {
        return Err(usage(format!("variant {v:?} needs {}", missing.join(", "))));
    }
    let eta = p.real("eta")?;
    let mut cfg = if v.is_spherical() {
        CorollaryConfig::spherical(v, eta, p.real("x1")?, p.real("x2")?, p.real("cos_theta")?)
    } else {
        CorollaryConfig::cartesian(v, eta, p.real("x1")?, p.real("y1")?, p.real("z1")?, p.real("z2")?)
    };
    cfg.k = p.real("k")?;
    cfg.branch = branch(p)?;
    cfg.validate()?;
    Ok(cfg)
}

fn pair(p: &Params) -> CliResult<SlaterPair> {
    let (x2, k) = (p.real("x2")?, p.real("k")?);
    Ok(SlaterPair::new(
        p.real("eta1")?,
        p.real("eta2")?,
        x2,
        k,
        p.real_or("k_dot_x2", k * x2)?,
    )?)
}

/// x^p e^{−λx} cos(ωx), the integrand family behind the quadrature targets.
fn family(p: f64, lambda: f64, omega: f64) -> impl Fn(f64) -> f64 {
    move |x: f64| {
        let w = if omega == 0.0 { 1.0 } else { (omega * x).cos() };
        if x == 0.0 && p == 0.0 {
            w
        } else {
            x.powf(p) * (-lambda * x).exp() * w
        }
    }
}

fn family_params(p: &Params) -> CliResult<(f64, f64, f64)> {
    let (pw, lambda, omega) = (p.real("p")?, p.real("lambda")?, p.real("omega")?);
    if !(pw > -1.0) || !(lambda > 0.0) {
        return Err(usage(
            "the integrand x^p e^(-lambda x) cos(omega x) needs p > -1 and lambda > 0",
        ));
    }
    Ok((pw, lambda, omega))
}

pub fn evaluate(s: &Scenario) -> CliResult<Evaluation> {
    use Target::*;
    let t = s.target;
    let p = &s.params;
    let pol = &s.policy;
    let qopts = QuadratureOptions::with_tol(s.quad_tol);
    Ok(match t {
        BesselKHalf => Evaluation::scalar(t, bessel_k_half(p.count("n")?, p.complex("z")?)?),
        BesselIHalf => Evaluation::real(t, bessel_i_half(p.count("n")?, p.real("x")?)?),
        LegendreP => Evaluation::real(t, legendre_p(p.count("n")?, p.real("u")?)?),
        CosPowerToLegendre => {
            let u = p.real("u")?;
            let set = cos_power_to_legendre(p.count("j")?)?;
            let mut items = Vec::new();
            for (&m, &c) in &set.coeffs {
                items.push((m, cplx(c * legendre_p(m, u)?)));
            }
            Evaluation::from_terms(t, items)
        }
        UpperIncompleteGamma => Evaluation::scalar(t, upper_incomplete_gamma(p.real("a")?, p.complex("z")?)?),
        ErfComplex => Evaluation::scalar(t, erf_complex(p.complex("z")?)?),
        Kummer1F1 => {
            let a = u32::try_from(p.count("a")?).map_err(|_| usage("a is too large"))?;
            let b = u32::try_from(p.count("b")?).map_err(|_| usage("b is too large"))?;
            Evaluation::scalar(t, kummer_1f1(a, b, p.complex("z")?)?)
        }
        HermiteH => Evaluation::real(t, hermite_h(p.count("j")?, p.real("x")?)),
        ExpIntegralEi => Evaluation::real(t, exp_integral_ei(p.real("x")?)?),
        MeijerG0313 => Evaluation::real(t, meijer_g_0313(p.count("j")?, p.real("mu")?, p.real("arg")?)?),
        IntegrateFinite => {
            let (pw, l, w) = family_params(p)?;
            let f = family(pw, l, w);
            let q = try_integrate_finite(|x| Ok(f(x)), p.real("lo")?, p.real("hi")?, &qopts)?;
            Evaluation::quadrature(t, q)
        }
        IntegrateSemiInfinite => {
            let (pw, l, w) = family_params(p)?;
            let f = family(pw, l, w);
            let q = try_integrate_semi_infinite(|x| Ok(f(x)), p.real("lo")?, &qopts)?;
            Evaluation::quadrature(t, q)
        }
        Integrate2d => {
            let (fx, fy, rect) = product_setup(p)?;
            let q = try_integrate_2d(|x, y| Ok(fx(x) * fy(y)), rect, &qopts)?;
            Evaluation::quadrature(t, q)
        }
        YukawaForm => Evaluation::scalar(t, yukawa_form(&yukawa(s)?)?),
        YukawaExponential => Evaluation::scalar(t, yukawa_exponential(&yukawa(s)?)?),
        YukawaPowerForm => Evaluation::scalar(t, yukawa_power_form(p.count("j")?, &yukawa(s)?)?),
        Theorem1Term => Evaluation::scalar(t, theorem1_term(p.count("n")?, &yukawa(s)?)?),
        Theorem5Term => Evaluation::scalar(t, theorem5_term(p.count("n")?, &yukawa(s)?)?),
        Theorem6Term => Evaluation::scalar(t, theorem6_term(p.count("j")?, p.count("n")?, &yukawa(s)?)?),
        Theorem1Eval => Evaluation::series(t, theorem1_eval(&yukawa(s)?, pol)?),
        Theorem5Eval => Evaluation::series(t, theorem5_eval(&yukawa(s)?, pol)?),
        Theorem6Eval => Evaluation::series(t, theorem6_eval(p.count("j")?, &yukawa(s)?, pol)?),
        CorollaryToParams => {
            let y = corollary_to_params(&corollary(s)?)?;
            Evaluation::scalar(t, yukawa_form(&y)?)
                .extra("B", y.b)
                .extra("C", y.c)
                .extra("x2", y.x2)
                .extra("k", y.k)
        }
        CorollaryEval => Evaluation::series(t, corollary_eval(&corollary(s)?, pol)?),
        Corollary1LegendreCoefficients => {
            let coeffs = corollary1_legendre_coefficients(p.count("n")?, &corollary(s)?)?;
            let u = p.real("cos_theta")?;
            let mut items = Vec::new();
            for (m, c) in coeffs {
                items.push((m, c * legendre_p(m, u)?));
            }
            Evaluation::from_terms(t, items)
        }
        Corollary1LegendreEval => Evaluation::series(t, corollary1_legendre_eval(&corollary(s)?, pol)?),
        SlaterDirect => Evaluation::real(t, slater_direct(&corollary(s)?)?),
        TwoRangeMosEval => {
            let r = two_range_mos_eval(
                p.real("eta")?,
                p.real("x1")?,
                p.real("x2")?,
                p.real("cos_theta")?,
                p.count("n_max")?,
            )?;
            Evaluation::series(t, r.series)
                .extra("cancellation", r.cancellation)
                .extra("on_boundary", r.on_boundary)
        }
        S1CoulombClosed => Evaluation::real(t, s1_coulomb_closed(p.real("eta1")?, p.real("x2")?)?),
        S1TwoSlaterClosed => Evaluation::real(
            t,
            s1_two_slater_closed(p.real("eta1")?, p.real("eta2")?, p.real("x2")?)?,
        ),
        S1EqualEtaClosed => Evaluation::real(t, s1_equal_eta_closed(p.real("eta2")?, p.real("x2")?)?),
        S1TwoSlaterOracle => Evaluation::quadrature(
            t,
            s1_two_slater_oracle(p.real("eta1")?, p.real("eta2")?, p.real("x2")?, s.quad_tol)?,
        ),
        S1TauOracle => Evaluation::quadrature(t, s1_tau_oracle(&pair(p)?, s.quad_tol)?),
        S1SeriesNTerm => Evaluation::scalar(t, s1_series_n_term(p.count("n")?, &pair(p)?, s.quad_tol)?),
        S1N0ErfClosed => Evaluation::scalar(t, s1_n0_erf_closed(&pair(p)?)?),
        S1GeneralTermGamma => Evaluation::scalar(t, s1_general_term_gamma(p.count("n")?, &pair(p)?)?),
        S1SeriesEval => Evaluation::series(t, s1_series_eval(&pair(p)?, pol, s.quad_tol)?),
        CheshireSeries => {
            let (x2, k) = (p.real("x2")?, p.real("k")?);
            let kx = p.real_or("k_dot_x2", k * x2)?;
            Evaluation::series(t, cheshire_series(p.real("eta1")?, x2, k, kx, pol)?)
        }
        Theorem2Angular => Evaluation::scalar(t, theorem2_angular(p.real("eta2")?, p.real("x1")?, p.real("x2")?)?),
        Theorem2AngularOracle => Evaluation::scalar(
            t,
            theorem2_angular_oracle(p.real("eta2")?, p.real("x1")?, p.real("x2")?, s.quad_tol)?,
        ),
        Theorem3Series => {
            let pr = SlaterPair::new(p.real("eta1")?, p.real("eta2")?, p.real("x2")?, 0.0, 0.0)?;
            let bounds = SeriesIndexBounds::new(p.count("n_max")?, p.count("k_max")?);
            double(t, theorem3_series(&pr, &bounds, pol)?)
        }
        Theorem4Series => {
            let bounds = SeriesIndexBounds::new(p.count("n_max")?, 1);
            double(t, theorem4_series(p.real("eta2")?, p.real("x2")?, &bounds, pol)?)
        }
        Corollary6N0Closed => Evaluation::real(t, corollary6_n0_closed(p.real("eta1")?, p.real("eta2")?)?),
        Corollary6N0Oracle => {
            Evaluation::quadrature(t, corollary6_n0_oracle(p.real("eta1")?, p.real("eta2")?, s.quad_tol)?)
        }
        EllipsoidalIntegrand => {
            let e = EllipsoidalParams::new(p.real("R")?, p.real("lambda")?, p.real("mu")?)?;
            Evaluation::real(t, e.integrand())
        }
        TAbcOracle => Evaluation::quadrature(t, t_abc_oracle(p.real("R")?, s.quad_tol)?),
        TAbcExact => Evaluation::real(t, t_abc_exact(p.real("R")?)?),
        TAbcSeriesTerm => {
            let parts = t_abc_series_term(p.count("n")?, p.real("R")?)?;
            Evaluation::from_terms(t, parts.into_iter().map(cplx).enumerate())
        }
        TAbcSeries => Evaluation::series(t, t_abc_series(p.real("R")?, pol)?.series),
        StallDetector => {
            let series = t_abc_series(p.real("R")?, pol)?.series;
            let rep = stall_detector(&series, p.count("window")?);
            let fmt_opt = |o: Option<String>| o.unwrap_or_else(|| "none".into());
            Evaluation::series(t, series)
                .extra("stalled", rep.stalled)
                .extra("stall_index", fmt_opt(rep.index.map(|i| i.to_string())))
                .extra("stall_magnitude", fmt_opt(rep.magnitude.map(|m| format!("{m:e}"))))
        }
    })
}

/// Outer blocks become rows indexed by n; the inner counts go to extras.
fn double(t: Target, d: DoubleSeries) -> Evaluation {
    let ns: Vec<usize> = d.blocks.iter().map(|b| b.n).collect();
    let inner_ok = d.blocks.iter().all(|b| b.inner.converged);
    let inner: Vec<String> = d
        .blocks
        .iter()
        .map(|b| format!("{}:{}", b.n, b.inner.terms_used))
        .collect();
    let mut e = Evaluation::indexed_series(t, d.outer, |i| ns[i]);
    e.converged &= inner_ok;
    e.extra("inner_terms", inner.join(" "))
}

type Factor = Box<dyn Fn(f64) -> f64>;

fn product_setup(p: &Params) -> CliResult<(Factor, Factor, Rect)> {
    let (pw, q, l, m) = (p.real("p")?, p.real("q")?, p.real("lambda")?, p.real("mu")?);
    if !(pw > -1.0 && q > -1.0 && l > 0.0 && m > 0.0) {
        return Err(usage("integrate_2d needs p, q > -1 and lambda, mu > 0"));
    }
    let span = |hi: f64| {
        if hi.is_infinite() {
            Span::to_infinity(0.0)
        } else {
            Span::new(0.0, hi)
        }
    };
    let rect = Rect {
        outer: span(p.real("x_hi")?),
        inner: span(p.real("y_hi")?),
    };
    Ok((Box::new(family(pw, l, 0.0)), Box::new(family(q, m, 0.0)), rect))
}

/// A named reference value for the scenario's target.
#[derive(Debug, Clone, PartialEq)]
pub struct Reference {
    pub name: String,
    pub value: Complex,
}

/// ∫_lo^hi x^p e^{−sx} dx with s = λ − iω, via scaled lower gamma
/// functions. Needs 2p ∈ ℤ.
fn family_closed(p: f64, lambda: f64, omega: f64, lo: f64, hi: f64) -> CliResult<Complex> {
    if (2.0 * p).fract() != 0.0 {
        return Err(usage(
            "the closed form of the quadrature family needs 2p to be an integer",
        ));
    }
    let s = Complex::new(lambda, -omega);
    let a = p + 1.0;
    let antider = |x: f64| -> CliResult<Complex> {
        if x == 0.0 {
            Ok(Complex::new(0.0, 0.0))
        } else if x.is_infinite() {
            Ok(cplx(gamma_half((2.0 * a) as usize)?) / s.powf(a))
        } else {
            Ok(lower_gamma_scaled(a, s * x)? * x.powf(a))
        }
    };
    Ok(antider(hi)? - antider(lo)?)
}

fn oracle_value<V: Into<Complex> + Copy>(q: QuadratureResult<V>) -> Complex {
    q.value.into()
}

/// The direct Slater references describe the k = 1 orbital only.
fn unit_k(cfg: CorollaryConfig) -> CliResult<CorollaryConfig> {
    if cfg.k == 1.0 {
        Ok(cfg)
    } else {
        Err(usage(format!("the Slater references assume k = 1, got k = {}", cfg.k)))
    }
}

pub fn reference(s: &Scenario, choice: Option<&str>) -> CliResult<Option<Reference>> {
    use Target::*;
    let t = s.target;
    let names = t.references();
    let name = match choice {
        Some(c) if names.contains(&c) => c,
        Some(c) => {
            return Err(usage(if names.is_empty() {
                format!("{t} has no reference (asked for `{c}`)")
            } else {
                format!("{t} has no reference `{c}` (available: {})", names.join(", "))
            }))
        }
        None => match names.first() {
            Some(n) => n,
            None => return Ok(None),
        },
    };
    let p = &s.params;
    let qopts = QuadratureOptions::with_tol(s.quad_tol);
    let value: Complex = match (t, name) {
        (BesselKHalf, _) => {
            // K_ν(z) = ∫₀^∞ e^{−z cosh u} cosh(νu) du, Re z > 0.
            let (n, z) = (p.count("n")?, p.complex("z")?);
            if !(z.re > 0.0) {
                return Err(usage("the integral reference for K needs Re z > 0"));
            }
            let nu = n as f64 + 0.5;
            let f = |u: f64| -> slater_core::Result<Complex> {
                let c = u.cosh();
                // Past this point both exponentials underflow.
                if !c.is_finite() || z.re * c - nu * u > 750.0 {
                    return Ok(Complex::new(0.0, 0.0));
                }
                Ok(((-z * c + nu * u).exp() + (-z * c - nu * u).exp()) * 0.5)
            };
            oracle_value(try_integrate_semi_infinite(f, 0.0, &qopts)?.require("bessel_k_half reference")?)
        }
        (BesselIHalf, _) => {
            // I_ν(x) = (x/2)^ν/(√π Γ(ν+½)) ∫_{−1}^{1} (1−t²)^{ν−½} e^{xt} dt with ν = n + ½.
            let (n, x) = (p.count("n")?, p.real("x")?);
            let q = try_integrate_finite(
                |u: f64| Ok((1.0 - u * u).powi(n as i32) * (x * u).exp()),
                -1.0,
                1.0,
                &qopts,
            )?
            .require("bessel_i_half reference")?;
            let nu = n as f64 + 0.5;
            cplx((x / 2.0).powf(nu) / (PI.sqrt() * factorial(n)?) * q.value)
        }
        (UpperIncompleteGamma, _) => {
            // Γ(a, z) = ∫₀^∞ (z + u)^{a−1} e^{−z−u} du along the horizontal ray.
            let (a, z) = (p.real("a")?, p.complex("z")?);
            if !(z.re > 0.0 || z.im != 0.0) {
                return Err(usage(
                    "the integral reference for the incomplete gamma needs z off the non-positive axis",
                ));
            }
            oracle_value(
                try_integrate_semi_infinite(|u: f64| Ok((z + u).powf(a - 1.0) * (-(z + u)).exp()), 0.0, &qopts)?
                    .require("upper_incomplete_gamma reference")?,
            )
        }
        (ErfComplex, _) => {
            // erf z = (2z/√π) ∫₀¹ e^{−z²u²} du.
            let z = p.complex("z")?;
            let q = try_integrate_finite(|u: f64| Ok((-z * z * u * u).exp()), 0.0, 1.0, &qopts)?
                .require("erf reference")?;
            q.value * z * (2.0 / PI.sqrt())
        }
        (Kummer1F1, _) => {
            // Euler integral, b > a ≥ 1.
            let (a, b, z) = (p.count("a")?, p.count("b")?, p.complex("z")?);
            if !(a >= 1 && b > a) {
                return Err(usage("the integral reference for 1F1 needs b > a >= 1"));
            }
            let q = try_integrate_finite(
                |u: f64| Ok((z * u).exp() * u.powi(a as i32 - 1) * (1.0 - u).powi((b - a) as i32 - 1)),
                0.0,
                1.0,
                &qopts,
            )?
            .require("kummer_1f1 reference")?;
            q.value * (factorial(b - 1)? / (factorial(a - 1)? * factorial(b - a - 1)?))
        }
        (ExpIntegralEi, _) => {
            // Ei(x) = −∫₁^∞ e^{xu}/u du for x < 0.
            let x = p.real("x")?;
            if !(x < 0.0) {
                return Err(usage("the integral reference for Ei needs x < 0"));
            }
            let q =
                try_integrate_semi_infinite(|u: f64| Ok((x * u).exp() / u), 1.0, &qopts)?.require("ei reference")?;
            cplx(-q.value)
        }
        (CosPowerToLegendre, _) => cplx(p.real("u")?.powi(p.count("j")? as i32)),
        (IntegrateFinite, _) => {
            let (pw, l, w) = family_params(p)?;
            cplx(family_closed(pw, l, w, p.real("lo")?, p.real("hi")?)?.re)
        }
        (IntegrateSemiInfinite, _) => {
            let (pw, l, w) = family_params(p)?;
            cplx(family_closed(pw, l, w, p.real("lo")?, f64::INFINITY)?.re)
        }
        (Integrate2d, _) => {
            let fx = family_closed(p.real("p")?, p.real("lambda")?, 0.0, 0.0, p.real("x_hi")?)?;
            let fy = family_closed(p.real("q")?, p.real("mu")?, 0.0, 0.0, p.real("y_hi")?)?;
            cplx(fx.re * fy.re)
        }
        (Theorem1Eval, _) => yukawa_form(&yukawa(s)?)?,
        (Theorem5Eval, _) => yukawa_exponential(&yukawa(s)?)?,
        (Theorem6Eval, _) => yukawa_power_form(p.count("j")?, &yukawa(s)?)?,
        (TwoRangeMosEval, _) => {
            let cfg = CorollaryConfig::spherical(
                CorollaryVariant::C4,
                p.real("eta")?,
                p.real("x1")?,
                p.real("x2")?,
                p.real("cos_theta")?,
            );
            cplx(slater_direct(&cfg)?)
        }
        (_, "slater_direct") => cplx(slater_direct(&unit_k(corollary(s)?)?)?),
        (CorollaryToParams | CorollaryEval | Corollary1LegendreEval, "two_range") => {
            let cfg = unit_k(corollary(s)?)?;
            match cfg.coords {
                Coordinates::Spherical { x1, x2, cos_theta } => {
                    two_range_mos_eval(cfg.eta, x1, x2, cos_theta, 80)?.series.value
                }
                Coordinates::Cartesian { .. } => {
                    return Err(usage("the two-range reference needs spherical coordinates"));
                }
            }
        }
        (S1CoulombClosed, _) => {
            cplx(oracle_value(s1_two_slater_oracle(p.real("eta1")?, 0.0, p.real("x2")?, s.quad_tol)?).re)
        }
        (S1TwoSlaterClosed, _) => oracle_value(s1_two_slater_oracle(
            p.real("eta1")?,
            p.real("eta2")?,
            p.real("x2")?,
            s.quad_tol,
        )?),
        (S1EqualEtaClosed, _) => {
            let eta2 = p.real("eta2")?;
            oracle_value(s1_two_slater_oracle(eta2, eta2, p.real("x2")?, s.quad_tol)?)
        }
        (S1TwoSlaterOracle, _) => {
            let (e1, e2, x2) = (p.real("eta1")?, p.real("eta2")?, p.real("x2")?);
            cplx(if e1 == e2 {
                s1_equal_eta_closed(e2, x2)?
            } else if e2 == 0.0 {
                s1_coulomb_closed(e1, x2)?
            } else {
                s1_two_slater_closed(e1, e2, x2)?
            })
        }
        (S1TauOracle, _) => s1_series_eval(&pair(p)?, &s.policy, s.quad_tol)?.value,
        (S1SeriesNTerm, "gamma") => s1_general_term_gamma(p.count("n")?, &pair(p)?)?,
        (S1SeriesNTerm, _) => {
            if p.count("n")? != 0 {
                return Err(usage("the erf reference only exists for n = 0"));
            }
            s1_n0_erf_closed(&pair(p)?)?
        }
        (S1N0ErfClosed, _) => s1_series_n_term(0, &pair(p)?, s.quad_tol)?,
        (S1GeneralTermGamma, _) => s1_series_n_term(p.count("n")?, &pair(p)?, s.quad_tol)?,
        (S1SeriesEval, _) => oracle_value(s1_tau_oracle(&pair(p)?, s.quad_tol)?),
        (CheshireSeries, _) => {
            let (e1, x2, k) = (p.real("eta1")?, p.real("x2")?, p.real("k")?);
            let pr = SlaterPair::new(e1, e1, x2, k, p.real_or("k_dot_x2", k * x2)?)?;
            oracle_value(s1_tau_oracle(&pr, s.quad_tol)?)
        }
        (Theorem2Angular, _) => theorem2_angular_oracle(p.real("eta2")?, p.real("x1")?, p.real("x2")?, s.quad_tol)?,
        (Theorem2AngularOracle, _) => theorem2_angular(p.real("eta2")?, p.real("x1")?, p.real("x2")?)?,
        (Theorem3Series, "tau_oracle") => {
            let pr = SlaterPair::new(p.real("eta1")?, p.real("eta2")?, p.real("x2")?, 0.0, 0.0)?;
            oracle_value(s1_tau_oracle(&pr, s.quad_tol)?)
        }
        (Theorem3Series, _) => cplx(s1_two_slater_closed(p.real("eta1")?, p.real("eta2")?, p.real("x2")?)?),
        (Theorem4Series, "tau_oracle") => {
            let eta2 = p.real("eta2")?;
            let pr = SlaterPair::new(eta2, eta2, p.real("x2")?, 0.0, 0.0)?;
            oracle_value(s1_tau_oracle(&pr, s.quad_tol)?)
        }
        (Theorem4Series, _) => cplx(s1_equal_eta_closed(p.real("eta2")?, p.real("x2")?)?),
        (Corollary6N0Closed, _) => oracle_value(corollary6_n0_oracle(p.real("eta1")?, p.real("eta2")?, s.quad_tol)?),
        (Corollary6N0Oracle, _) => cplx(corollary6_n0_closed(p.real("eta1")?, p.real("eta2")?)?),
        (TAbcOracle | TAbcSeries, _) => cplx(t_abc_exact(p.real("R")?)?),
        (TAbcExact, _) => oracle_value(t_abc_oracle(p.real("R")?, s.quad_tol)?),
        (other, n) => return Err(usage(format!("no reference `{n}` wired for {other}"))),
    };
    Ok(Some(Reference {
        name: name.to_string(),
        value,
    }))
}
