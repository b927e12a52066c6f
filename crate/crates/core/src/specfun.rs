//! Special functions: digamma ψ, Hurwitz zeta ζ(2,·), the alternating
//! series β and its derivative β′, and the sine/cosine integrals si, ci.
//!
//! All functions take positive real arguments. Implementations follow the
//! classical recipes: recurrence shifts into an asymptotic region for ψ and
//! ζ(2,·), the digamma representation for β, and a Maclaurin-series /
//! continued-fraction split for the sine and cosine integrals.

use num_complex::Complex;

use crate::error::{Error, Result};
use crate::real::{Real, EULER_GAMMA};

/// A function value together with an absolute-error estimate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpecFunResult<T> {
    pub value: T,
    pub est_error: T,
}

impl<T: Real> SpecFunResult<T> {
    fn new(value: T, est_error: T) -> Self {
        SpecFunResult {
            value,
            est_error: est_error.abs(),
        }
    }
}

fn require_positive<T: Real>(func: &'static str, z: T) -> Result<()> {
    if z > T::zero() && z.is_finite() {
        Ok(())
    } else {
        Err(Error::Domain {
            func,
            arg: z.as_f64(),
            requirement: "a positive finite argument",
        })
    }
}

/// Recurrence shift target for the digamma asymptotic expansion.
const DIGAMMA_SHIFT: f64 = 12.0;

/// B_{2k}/(2k), k = 1..=8, for ψ(z) ≈ ln z − 1/(2z) − Σ B_{2k}/(2k z^{2k}).
const DIGAMMA_TAIL: [f64; 8] = [
    1.0 / 12.0,
    -1.0 / 120.0,
    1.0 / 252.0,
    -1.0 / 240.0,
    1.0 / 132.0,
    -691.0 / 32760.0,
    1.0 / 12.0,
    -3617.0 / 8160.0,
];

/// Digamma function ψ(z) = d/dz ln Γ(z) for z > 0.
pub fn digamma<T: Real>(z: T) -> Result<T> {
    Ok(digamma_e(z)?.value)
}

/// Digamma with an absolute-error estimate.
pub fn digamma_e<T: Real>(z: T) -> Result<SpecFunResult<T>> {
    require_positive("digamma", z)?;
    let one = T::one();
    let shift = T::of(DIGAMMA_SHIFT);

    // ψ(z) = ψ(z + n) − Σ_{k=0}^{n−1} 1/(z + k)
    let mut acc = T::zero();
    let mut w = z;
    while w < shift {
        acc += w.recip();
        w += one;
    }

    let inv2 = (w * w).recip();
    let mut tail = T::zero();
    let mut pow = inv2;
    for &c in &DIGAMMA_TAIL {
        tail += T::of(c) * pow;
        pow *= inv2;
    }
    let value = w.ln() - T::of(0.5) / w - tail - acc;

    // Truncation is bounded by the first omitted term; rounding by the
    // magnitude of the recurrence sum.
    let trunc = T::of(43867.0 / 14364.0) * pow;
    let round = T::epsilon() * (acc.abs() + w.ln().abs() + one);
    Ok(SpecFunResult::new(value, trunc + round))
}

/// Recurrence shift target for the ζ(2,·) asymptotic expansion.
const ZETA2_SHIFT: f64 = 10.0;

/// B_{2k}, k = 1..=7, for ζ(2,a) ≈ 1/a + 1/(2a²) + Σ B_{2k}/a^{2k+1}.
const ZETA2_TAIL: [f64; 7] = [
    1.0 / 6.0,
    -1.0 / 30.0,
    1.0 / 42.0,
    -1.0 / 30.0,
    5.0 / 66.0,
    -691.0 / 2730.0,
    7.0 / 6.0,
];

/// Hurwitz zeta ζ(2,a) = Σ_{k≥0} (k+a)^{-2} for a > 0 (the trigamma function).
pub fn hurwitz_zeta_2<T: Real>(a: T) -> Result<T> {
    Ok(hurwitz_zeta_2_e(a)?.value)
}

/// ζ(2,a) with an absolute-error estimate.
pub fn hurwitz_zeta_2_e<T: Real>(a: T) -> Result<SpecFunResult<T>> {
    require_positive("hurwitz_zeta_2", a)?;
    let one = T::one();
    let shift = T::of(ZETA2_SHIFT);

    // ζ(2,a) = ζ(2,a+n) + Σ_{k=0}^{n−1} (a+k)^{-2}
    let mut acc = T::zero();
    let mut w = a;
    while w < shift {
        acc += (w * w).recip();
        w += one;
    }

    let invw = w.recip();
    let inv2 = invw * invw;
    let mut tail = T::zero();
    let mut pow = invw * inv2;
    for &c in &ZETA2_TAIL {
        tail += T::of(c) * pow;
        pow *= inv2;
    }
    let value = invw + T::of(0.5) * inv2 + tail + acc;

    let trunc = T::of(3617.0 / 510.0) * pow;
    let round = T::epsilon() * (acc + one);
    Ok(SpecFunResult::new(value, trunc + round))
}

/// β(x) = ½[ψ((x+1)/2) − ψ(x/2)] = Σ_{k≥0} (−1)^k/(x+k) for x > 0.
pub fn beta_fn<T: Real>(x: T) -> Result<T> {
    Ok(beta_fn_e(x)?.value)
}

/// β(x) with an absolute-error estimate.
pub fn beta_fn_e<T: Real>(x: T) -> Result<SpecFunResult<T>> {
    require_positive("beta_fn", x)?;
    let half = T::of(0.5);
    let hi = digamma_e(half * (x + T::one()))?;
    let lo = digamma_e(half * x)?;
    Ok(SpecFunResult::new(
        half * (hi.value - lo.value),
        half * (hi.est_error + lo.est_error) + T::epsilon() * (lo.value.abs() + T::one()),
    ))
}

/// β′(x) = ζ(2,x) − ½ζ(2,x/2) = −Σ_{k≥0} (−1)^k/(x+k)² for x > 0.
pub fn beta_prime<T: Real>(x: T) -> Result<T> {
    Ok(beta_prime_e(x)?.value)
}

/// β′(x) with an absolute-error estimate.
pub fn beta_prime_e<T: Real>(x: T) -> Result<SpecFunResult<T>> {
    require_positive("beta_prime", x)?;
    let half = T::of(0.5);
    let a = hurwitz_zeta_2_e(x)?;
    let b = hurwitz_zeta_2_e(half * x)?;
    Ok(SpecFunResult::new(
        a.value - half * b.value,
        a.est_error + half * b.est_error + T::epsilon() * b.value.abs(),
    ))
}

/// Crossover between the Maclaurin series and the continued fraction.
const SICI_SPLIT: f64 = 4.0;
const SICI_MAX_ITER: usize = 400;

/// Sine and cosine integrals for x > 0, returned as `(si, ci)` where
/// `si(x) = Si(x) − π/2 = −∫_x^∞ sin(u)/u du` and `ci(x) = Ci(x)`.
pub fn sici<T: Real>(x: T) -> Result<(T, T)> {
    let r = sici_e(x)?;
    Ok((r.0.value, r.1.value))
}

/// Sine and cosine integrals with error estimates.
pub fn sici_e<T: Real>(x: T) -> Result<(SpecFunResult<T>, SpecFunResult<T>)> {
    require_positive("sici", x)?;
    if x <= T::of(SICI_SPLIT) {
        sici_series(x)
    } else {
        sici_continued_fraction(x)
    }
}

/// Maclaurin series: Si(x) = Σ (−1)^k x^{2k+1}/((2k+1)(2k+1)!),
/// Ci(x) = γ + ln x + Σ_{k≥1} (−1)^k x^{2k}/((2k)(2k)!).
fn sici_series<T: Real>(x: T) -> Result<(SpecFunResult<T>, SpecFunResult<T>)> {
    let x2 = x * x;
    let eps = T::epsilon();

    let mut si_sum = x;
    let mut term = x;
    for k in 1..SICI_MAX_ITER {
        let kk = T::of(k as f64);
        let two = T::of(2.0);
        // ratio a_k / a_{k-1} = −x² (2k−1) / ((2k+1)² 2k)
        let r = -(x2 * (two * kk - T::one()))
            / ((two * kk + T::one()) * (two * kk + T::one()) * two * kk);
        term *= r;
        si_sum += term;
        if term.abs() < eps * si_sum.abs() {
            break;
        }
    }

    let mut ci_sum = T::zero();
    let mut cterm = -x2 * T::of(0.25); // k = 1 term: −x²/(2·2!)
    ci_sum += cterm;
    for k in 2..SICI_MAX_ITER {
        let kk = T::of(k as f64);
        let two = T::of(2.0);
        // ratio b_k / b_{k-1} = −x² (2k−2) / ((2k)² (2k−1))
        let r = -(x2 * (two * kk - two)) / ((two * kk) * (two * kk) * (two * kk - T::one()));
        cterm *= r;
        ci_sum += cterm;
        if cterm.abs() < eps * (ci_sum.abs() + T::one()) {
            break;
        }
    }

    let si = si_sum - T::FRAC_PI_2();
    let ci = T::of(EULER_GAMMA) + x.ln() + ci_sum;
    let err = eps * (si_sum.abs() + x.ln().abs() + T::of(2.0));
    Ok((SpecFunResult::new(si, err), SpecFunResult::new(ci, err)))
}

/// Modified-Lentz evaluation of the exponential-integral continued fraction
/// at the purely imaginary point `ix`; its real and imaginary parts carry
/// −ci(x) and si(x).
fn sici_continued_fraction<T: Real>(x: T) -> Result<(SpecFunResult<T>, SpecFunResult<T>)> {
    let one = Complex::new(T::one(), T::zero());
    let two = T::of(2.0);
    let eps = T::epsilon();
    let fpmin = T::min_positive_value() / eps;

    let mut b = Complex::new(T::one(), x);
    let mut c = Complex::new(fpmin.recip(), T::zero());
    let mut d = one / b;
    let mut h = d;
    let mut converged = false;
    let mut resid = T::zero();
    for k in 1..SICI_MAX_ITER {
        let a = -T::of((k * k) as f64);
        b += Complex::new(two, T::zero());
        d = (d * a + b).finv();
        c = b + Complex::new(a, T::zero()) / c;
        let del = c * d;
        h *= del;
        resid = (del.re - T::one()).abs() + del.im.abs();
        if resid < eps {
            converged = true;
            break;
        }
    }
    if !converged {
        return Err(Error::NonFinite { at: x.as_f64() });
    }

    // E1(ix) = e^{-ix} · CF;  ci(x) = −Re E1(ix), si(x) = Im E1(ix).
    let e1 = Complex::new(x.cos(), -x.sin()) * h;
    let err = resid.max(eps) * (e1.norm() + T::one());
    Ok((
        SpecFunResult::new(e1.im, err),
        SpecFunResult::new(-e1.re, err),
    ))
}
