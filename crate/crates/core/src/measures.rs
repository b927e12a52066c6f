//! Representations of infinitely divisible laws: log-characteristic
//! functions, Khintchine pairs `[a, m]`, Lévy triples `[b, σ², M]`, the
//! conversions between them, the Lévy exponent, the background-driving
//! relation, and decay diagnostics.

pub mod catalog;

use std::sync::Arc;

use num_complex::Complex;

use crate::error::{Error, Result};
use crate::quad::{integrate_finite, measure_integral, QuadConfig};
use crate::real::Real;

type RealFn<T> = Arc<dyn Fn(T) -> T + Send + Sync>;
type ComplexFn<T> = Arc<dyn Fn(T) -> Complex<T> + Send + Sync>;

/// The log-characteristic function t ↦ log φ(t) of an infinitely divisible
/// law, on the principal branch with log φ(0) = 0.
#[derive(Clone)]
pub struct LogCharFn<T> {
    f: ComplexFn<T>,
    /// True when φ is real-valued (the law is symmetric).
    pub symmetric: bool,
}

impl<T: Real> LogCharFn<T> {
    pub fn new(symmetric: bool, f: impl Fn(T) -> Complex<T> + Send + Sync + 'static) -> Self {
        LogCharFn {
            f: Arc::new(f),
            symmetric,
        }
    }

    /// Wraps a real-valued log-characteristic function (symmetric law).
    pub fn from_real(f: impl Fn(T) -> T + Send + Sync + 'static) -> Self {
        LogCharFn {
            f: Arc::new(move |t| Complex::new(f(t), T::zero())),
            symmetric: true,
        }
    }

    pub fn eval(&self, t: T) -> Complex<T> {
        (self.f)(t)
    }
}

impl<T> std::fmt::Debug for LogCharFn<T> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("LogCharFn")
            .field("symmetric", &self.symmetric)
            .finish_non_exhaustive()
    }
}

/// The finite Khintchine measure m: an atom at 0 plus a density on ℝ∖{0}.
///
/// Densities must supply their limit value at 0 when it exists, so that
/// quadrature nodes arbitrarily close to the origin stay finite.
#[derive(Clone)]
pub struct FiniteMeasure<T> {
    /// Mass m({0}).
    pub atom_at_zero: T,
    density: RealFn<T>,
    /// True when the density is even.
    pub even: bool,
    /// Analytically known total mass, when available.
    pub mass_hint: Option<T>,
}

impl<T: Real> FiniteMeasure<T> {
    pub fn new(
        atom_at_zero: T,
        even: bool,
        mass_hint: Option<T>,
        density: impl Fn(T) -> T + Send + Sync + 'static,
    ) -> Self {
        FiniteMeasure {
            atom_at_zero,
            density: Arc::new(density),
            even,
            mass_hint,
        }
    }

    /// The measure with zero atom and zero density.
    pub fn zero() -> Self {
        FiniteMeasure::new(T::zero(), true, Some(T::zero()), |_| T::zero())
    }

    /// A pure atom at the origin.
    pub fn atom(mass: T) -> Self {
        FiniteMeasure::new(mass, true, Some(mass), |_| T::zero())
    }

    pub fn density(&self, x: T) -> T {
        (self.density)(x)
    }

    /// Total mass (atom plus density integral) by quadrature.
    pub fn mass(&self, cfg: &QuadConfig<T>) -> Result<T> {
        let d = self.density.clone();
        let r = measure_integral(
            move |x| d(x),
            |_| Complex::new(T::one(), T::zero()),
            self.even,
            cfg,
        )?;
        Ok(self.atom_at_zero + r.value.re)
    }
}

impl<T: std::fmt::Debug> std::fmt::Debug for FiniteMeasure<T> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("FiniteMeasure")
            .field("atom_at_zero", &self.atom_at_zero)
            .field("even", &self.even)
            .field("mass_hint", &self.mass_hint)
            .finish_non_exhaustive()
    }
}

/// Khintchine parameterization `[a, m]` of an infinitely divisible law.
#[derive(Debug, Clone)]
pub struct KhintchinePair<T> {
    pub a: T,
    pub m: FiniteMeasure<T>,
}

impl<T: Real> KhintchinePair<T> {
    pub fn new(a: T, m: FiniteMeasure<T>) -> Self {
        KhintchinePair { a, m }
    }
}

/// Lévy parameterization `[b, σ², M]` with σ-finite spectral density M.
#[derive(Clone)]
pub struct LevyTriple<T> {
    pub b: T,
    pub sigma2: T,
    levy_density: RealFn<T>,
}

impl<T: Real> LevyTriple<T> {
    pub fn new(b: T, sigma2: T, levy_density: impl Fn(T) -> T + Send + Sync + 'static) -> Self {
        LevyTriple {
            b,
            sigma2,
            levy_density: Arc::new(levy_density),
        }
    }

    pub fn levy_density(&self, x: T) -> T {
        (self.levy_density)(x)
    }
}

impl<T: std::fmt::Debug> std::fmt::Debug for LevyTriple<T> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("LevyTriple")
            .field("b", &self.b)
            .field("sigma2", &self.sigma2)
            .finish_non_exhaustive()
    }
}

/// Shift correction ∫ x [1_{|x|≤1} − 1/(1+x²)] M(dx), rewritten through the
/// finite measure as ∫_{|x|≤1} x m(dx) − ∫_{|x|>1} m(dx)/x so no evaluation
/// approaches the origin singularity of M.
fn shift_correction<T: Real>(m: &FiniteMeasure<T>, cfg: &QuadConfig<T>) -> Result<T> {
    if m.even {
        return Ok(T::zero()); // odd integrand against an even measure
    }
    let one = T::one();
    let inner = integrate_finite(|x| x * m.density(x), -one, one, cfg)?;
    let d = m.density.clone();
    let outer = crate::quad::integrate_semi_infinite(
        move |x: T| Complex::new(d(x) / x - d(-x) / x, T::zero()),
        one,
        cfg,
    )?;
    Ok(inner.value - outer.value.re)
}

/// Converts a Khintchine pair `[a, m]` to the Lévy triple `[b, σ², M]` with
/// M(dx) = ((1+x²)/x²) m(dx) and σ² = m({0}).
pub fn khintchine_to_levy<T: Real>(
    p: &KhintchinePair<T>,
    cfg: &QuadConfig<T>,
) -> Result<LevyTriple<T>> {
    let b = p.a + shift_correction(&p.m, cfg)?;
    let d = p.m.density.clone();
    Ok(LevyTriple {
        b,
        sigma2: p.m.atom_at_zero,
        levy_density: Arc::new(move |x: T| {
            let x2 = x * x;
            d(x) * (T::one() + x2) / x2
        }),
    })
}

/// Converts a Lévy triple back to a Khintchine pair: m(dx) = (x²/(1+x²)) M(dx),
/// m({0}) = σ². Evenness of the density is detected numerically.
pub fn levy_to_khintchine<T: Real>(
    tr: &LevyTriple<T>,
    cfg: &QuadConfig<T>,
) -> Result<KhintchinePair<T>> {
    let d = tr.levy_density.clone();
    let density = move |x: T| {
        let x2 = x * x;
        d(x) * x2 / (T::one() + x2)
    };
    let even = {
        let probes = [T::of(0.37), T::of(1.0), T::of(2.6)];
        probes.iter().all(|&x| {
            let l = density(x);
            let r = density(-x);
            (l - r).abs() <= T::of(1e-12) * (T::one() + l.abs())
        })
    };
    let m = FiniteMeasure {
        atom_at_zero: tr.sigma2,
        density: Arc::new(density),
        even,
        mass_hint: None,
    };
    let a = tr.b - shift_correction(&m, cfg)?;
    Ok(KhintchinePair { a, m })
}

/// sin(u)/u with the limit at 0.
fn sinc<T: Real>(u: T) -> T {
    if u == T::zero() {
        T::one()
    } else {
        u.sin() / u
    }
}

/// sin(v) − v, series-stabilized for small |v|.
fn sin_minus_arg<T: Real>(v: T) -> T {
    if v.abs() < T::of(1e-2) {
        let v2 = v * v;
        -v * v2 / T::of(6.0) * (T::one() - v2 / T::of(20.0) * (T::one() - v2 / T::of(42.0)))
    } else {
        v.sin() - v
    }
}

/// The Lévy exponent Φ(t) = ita + ∫ (e^{itx} − 1 − itx/(1+x²)) (1+x²)/x² m(dx),
/// with the atom at 0 contributing −t²σ²/2 (the integrand's limit).
///
/// For an even measure the imaginary part of the integral vanishes
/// analytically and only the real kernel (cos(tx) − 1)(1+x²)/x² is
/// integrated, in the cancellation-free form −(t²/2) sinc²(tx/2) (1+x²).
pub fn levy_exponent<T: Real>(
    p: &KhintchinePair<T>,
    t: T,
    cfg: &QuadConfig<T>,
) -> Result<Complex<T>> {
    let half = T::of(0.5);
    let atom_re = -half * t * t * p.m.atom_at_zero;

    let real_kernel = move |x: T| {
        let u = half * t * x;
        let s = sinc(u);
        -half * t * t * s * s * (T::one() + x * x)
    };

    let d = &p.m;
    let integral = if d.even {
        measure_integral(
            |x| d.density(x),
            move |x| Complex::new(real_kernel(x), T::zero()),
            true,
            cfg,
        )?
        .value
    } else {
        let imag_kernel = move |x: T| {
            let x2 = x * x;
            // (sin(tx) − tx/(1+x²)) (1+x²)/x² = (1+x²)(sin(tx) − tx)/x² + tx
            (T::one() + x2) * sin_minus_arg(t * x) / x2 + t * x
        };
        measure_integral(
            |x| d.density(x),
            move |x| Complex::new(real_kernel(x), imag_kernel(x)),
            false,
            cfg,
        )?
        .value
    };

    Ok(Complex::new(atom_re + integral.re, t * p.a + integral.im))
}

/// The background-driving log-characteristic function log ψ(t) = t · d/dt log φ(t)
/// via a five-point central difference with step `h · max(1, |t|)`.
pub fn bdcf_log_cf<T: Real>(phi: &LogCharFn<T>, t: T, h: T) -> Result<Complex<T>> {
    if t == T::zero() {
        return Err(Error::Precondition(
            "bdcf_log_cf requires t != 0".to_string(),
        ));
    }
    let step = h * T::one().max(t.abs());
    let d = central_diff_5(|s| phi.eval(s), t, step)?;
    Ok(d * t)
}

/// Five-point central difference (f(x−2h) − 8f(x−h) + 8f(x+h) − f(x+2h)) / 12h.
pub(crate) fn central_diff_5<T: Real>(
    f: impl Fn(T) -> Complex<T>,
    x: T,
    h: T,
) -> Result<Complex<T>> {
    let two = T::of(2.0);
    let eight = T::of(8.0);
    let twelve = T::of(12.0);
    let v = (f(x - two * h) - f(x - h) * eight + f(x + h) * eight - f(x + two * h)) / (twelve * h);
    if v.re.is_finite() && v.im.is_finite() {
        Ok(v)
    } else {
        Err(Error::NonFinite { at: x.as_f64() })
    }
}

/// Evaluates t^{c1} e^{−c2 t} |Φ(t)| on a grid; Lévy exponents of laws with a
/// finite Khintchine measure are dominated by any such exponential weight.
pub fn check_levy_decay<T: Real>(phi: &LogCharFn<T>, c1: T, c2: T, t_grid: &[T]) -> Vec<T> {
    t_grid
        .iter()
        .map(|&t| t.powf(c1) * (-c2 * t).exp() * phi.eval(t).norm())
        .collect()
}

/// Numerically stable ln cosh t.
pub(crate) fn ln_cosh<T: Real>(t: T) -> T {
    let u = t.abs();
    if u <= T::of(20.0) {
        let s = (u * T::of(0.5)).sinh();
        (s * s * T::of(2.0)).ln_1p()
    } else {
        u + (-(u + u)).exp().ln_1p() - T::LN_2()
    }
}

/// Numerically stable ln(sinh t / t) for t ≠ 0 (even in t), 0 at t = 0.
pub(crate) fn ln_sinh_over<T: Real>(t: T) -> T {
    let u = t.abs();
    if u == T::zero() {
        T::zero()
    } else if u <= T::of(20.0) {
        (u.sinh() / u).ln()
    } else {
        let q = (-(u + u)).exp();
        u - u.ln() - T::LN_2() + (-q).ln_1p()
    }
}

/// Numerically stable ln(tanh t / t) for t ≠ 0 (even in t), 0 at t = 0.
pub(crate) fn ln_tanh_over<T: Real>(t: T) -> T {
    let u = t.abs();
    if u == T::zero() {
        T::zero()
    } else if u <= T::of(20.0) {
        (u.tanh() / u - T::one()).ln_1p()
    } else {
        let q = (-(u + u)).exp();
        (-(q + q) / (T::one() + q)).ln_1p() - u.ln()
    }
}

/// u / sinh u with the limit at 0 (decays to 0 for large |u|).
pub(crate) fn u_over_sinh<T: Real>(u: T) -> T {
    if u == T::zero() {
        T::one()
    } else {
        u / u.sinh()
    }
}

/// u / (e^u − 1) with the limit at 0.
pub(crate) fn u_over_expm1<T: Real>(u: T) -> T {
    if u == T::zero() {
        T::one()
    } else {
        u / u.exp_m1()
    }
}

/// u² cosh u / sinh² u with the limit at 0, overflow-free for large u.
pub(crate) fn sq_cosh_ratio<T: Real>(u: T) -> T {
    if u == T::zero() {
        T::one()
    } else {
        (u * u / u.sinh()) / u.tanh()
    }
}

/// 1 − t coth t, series-stabilized near 0 (even in t).
pub(crate) fn one_minus_t_coth<T: Real>(t: T) -> T {
    let u = t.abs();
    if u < T::of(1e-4) {
        let u2 = u * u;
        -u2 / T::of(3.0) - u2 * u2 / T::of(45.0)
    } else {
        T::one() - u / u.tanh()
    }
}
