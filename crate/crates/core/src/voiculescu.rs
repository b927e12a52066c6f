//! The free-probability transform layer.
//!
//! An infinitely divisible law reaches its free analogue along two
//! independent routes: **level A** pushes the log-characteristic function
//! through a Laplace transform, while **level Z** inserts the Khintchine
//! pair into the free kernel. Both produce the Voiculescu transform
//! V(it) on the positive imaginary axis, and must agree. Symmetric laws
//! additionally admit a one-integral shortcut, and selfdecomposable laws
//! link to their background-driving transforms by a first-order
//! differential equation (forward) or an integral equation (inverse).

use std::sync::Arc;

use num_complex::Complex;

use crate::error::{Error, Result};
use crate::measures::{KhintchinePair, LogCharFn};
use crate::quad::{integrate_finite_complex, laplace_transform, measure_integral, QuadConfig};
use crate::real::Real;
use crate::specfun::{beta_fn, digamma, hurwitz_zeta_2, sici};

/// Which route produced a transform.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TransformSource {
    LevelA,
    LevelZ,
    Closed,
    Thm2,
}

/// A Voiculescu transform restricted to the imaginary axis: t > 0 ↦ V(it).
#[derive(Clone)]
pub struct VoiculescuFn<T> {
    f: Arc<dyn Fn(T) -> Complex<T> + Send + Sync>,
    pub source: TransformSource,
}

impl<T: Real> VoiculescuFn<T> {
    pub fn new(
        source: TransformSource,
        f: impl Fn(T) -> Complex<T> + Send + Sync + 'static,
    ) -> Self {
        VoiculescuFn {
            f: Arc::new(f),
            source,
        }
    }

    pub fn eval(&self, t: T) -> Complex<T> {
        (self.f)(t)
    }
}

impl<T> std::fmt::Debug for VoiculescuFn<T> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("VoiculescuFn")
            .field("source", &self.source)
            .finish_non_exhaustive()
    }
}

/// Below this the Laplace truncation lengths explode; the transform is only
/// used qualitatively as t → 0.
const MIN_T: f64 = 1e-3;

fn require_t<T: Real>(op: &'static str, t: T) -> Result<()> {
    if t >= T::of(MIN_T) && t.is_finite() {
        Ok(())
    } else {
        Err(Error::Precondition(format!(
            "{op} requires t >= {MIN_T}, got {t}"
        )))
    }
}

/// Level A: V(it) = it² ∫_0^∞ conj(log φ(s)) e^{-ts} ds for t > 0.
pub fn level_a<T: Real>(phi: &LogCharFn<T>, t: T, cfg: &QuadConfig<T>) -> Result<Complex<T>> {
    require_t("level_a", t)?;
    let l = laplace_transform(|s| phi.eval(s).conj(), t, cfg)?;
    Ok(Complex::i() * t * t * l.value)
}

/// Level Z: V(it) = a + ∫ (1+itx)/(it−x) m(dx), the atom at 0 contributing
/// m({0})/(it).
pub fn level_z<T: Real>(p: &KhintchinePair<T>, t: T, cfg: &QuadConfig<T>) -> Result<Complex<T>> {
    require_t("level_z", t)?;
    let it = Complex::new(T::zero(), t);
    let kernel = move |x: T| (it * x + T::one()) / (it - x);
    let integral = measure_integral(|x| p.m.density(x), kernel, p.m.even, cfg)?;
    let atom = Complex::new(T::zero(), -p.m.atom_at_zero / t);
    Ok(integral.value + atom + p.a)
}

/// Symmetric shortcut: for a = 0 and even m,
/// V(it) = −it ∫ (1+x²)/(t²+x²) m(dx).
pub fn level_z_symmetric<T: Real>(
    p: &KhintchinePair<T>,
    t: T,
    cfg: &QuadConfig<T>,
) -> Result<Complex<T>> {
    require_t("level_z_symmetric", t)?;
    if p.a != T::zero() || !p.m.even {
        return Err(Error::Precondition(
            "level_z_symmetric requires a symmetric pair (a = 0, even m)".to_string(),
        ));
    }
    let one = T::one();
    let kernel = move |x: T| Complex::new((one + x * x) / (t * t + x * x), T::zero());
    let integral = measure_integral(|x| p.m.density(x), kernel, true, cfg)?;
    let total = integral.value.re + p.m.atom_at_zero / (t * t);
    Ok(Complex::new(T::zero(), -t * total))
}

/// Evaluates the closed-form Voiculescu transform of a catalog law through
/// the special functions.
pub fn closed_form<T: Real>(name: &str, t: T) -> Result<Complex<T>> {
    if !(t > T::zero()) {
        return Err(Error::Precondition(format!(
            "closed_form requires t > 0, got {t}"
        )));
    }
    let one = T::one();
    let two = T::of(2.0);
    let four = T::of(4.0);
    let half = T::of(0.5);
    let i = Complex::<T>::i();
    let im = |v: T| Complex::new(T::zero(), v);
    match name {
        "cosh" => Ok(im(one - t * beta_fn(t / two)?)),
        "sinh" => Ok(im(t * digamma(t / two)? - t * (t / two).ln() + one)),
        "tanh" => Ok(i * t * ((t / four).ln() - digamma(t / four + half)?)),
        "laplace" => {
            let (si, ci) = sici(t)?;
            Ok(i * (two * t) * (ci * t.cos() + si * t.sin()))
        }
        "bdcf-cosh" => {
            let t2 = t * t;
            Ok(im(
                one + half * t2 * hurwitz_zeta_2(t / two)? - t2 / four * hurwitz_zeta_2(t / four)?
            ))
        }
        "bdcf-sinh" => {
            let t2 = t * t;
            Ok(im(one + t - half * t2 * hurwitz_zeta_2(t / two)?))
        }
        "bdcf-tanh" => Ok(i * t * (t / four * hurwitz_zeta_2((t + two) / four)? - one)),
        "bdcf-laplace" => {
            let (si, ci) = sici(t)?;
            Ok(i * (two * t) * (t * (ci * t.sin() - si * t.cos()) - one))
        }
        other if crate::measures::catalog::CATALOG_NAMES.contains(&other) => {
            Err(Error::NoClosedForm(other.to_string()))
        }
        other => Err(Error::UnknownDistribution(other.to_string())),
    }
}

/// Forward direction of the background-driving relation:
/// V_ψ(it) = V_φ(it) − t · d/dt V_φ(it), the derivative taken by a
/// five-point stencil at relative step `h` with one Richardson extrapolation.
pub fn thm2_forward<T: Real>(v: &VoiculescuFn<T>, t: T, h: T) -> Result<Complex<T>> {
    if !(t > T::zero()) {
        return Err(Error::Precondition(format!(
            "thm2_forward requires t > 0, got {t}"
        )));
    }
    let step = h * t;
    let d_h = crate::measures::central_diff_5(|s| v.eval(s), t, step)?;
    let d_h2 = crate::measures::central_diff_5(|s| v.eval(s), t, step * T::of(0.5))?;
    let sixteen = T::of(16.0);
    let fifteen = T::of(15.0);
    let d = (d_h2 * sixteen - d_h) / fifteen;
    Ok(v.eval(t) - d * t)
}

/// Inverse direction: V_φ(it) = t·V_φ(i) − t ∫_1^t s^{-2} V_ψ(is) ds, the
/// integral taken with orientation (reversed for t < 1).
pub fn thm2_inverse<T: Real>(
    v_psi: &VoiculescuFn<T>,
    v_at_1: Complex<T>,
    t: T,
    cfg: &QuadConfig<T>,
) -> Result<Complex<T>> {
    if !(t > T::zero()) {
        return Err(Error::Precondition(format!(
            "thm2_inverse requires t > 0, got {t}"
        )));
    }
    let one = T::one();
    if t == one {
        return Ok(v_at_1);
    }
    let integrand = |s: T| v_psi.eval(s) / (s * s);
    let (lo, hi, sign) = if t > one {
        (one, t, one)
    } else {
        (t, one, -one)
    };
    let integral = integrate_finite_complex(integrand, lo, hi, cfg)?;
    Ok(v_at_1 * t - integral.value * (t * sign))
}

/// Both sides of the exponential-mixing identity for a symmetric pair:
/// lhs = ∫_0^∞ [∫ (1 − cos(sx)) (1+x²)/x² m(dx)] t e^{-ts} ds,
/// rhs = ∫ (1+x²)/(t²+x²) m(dx),
/// realized as deterministic nested quadrature.
pub fn corollary1_check<T: Real>(
    p: &KhintchinePair<T>,
    t: T,
    cfg: &QuadConfig<T>,
) -> Result<(T, T)> {
    require_t("corollary1_check", t)?;
    if p.a != T::zero() || !p.m.even {
        return Err(Error::Precondition(
            "corollary1_check requires a symmetric pair (a = 0, even m)".to_string(),
        ));
    }
    let half = T::of(0.5);
    let one = T::one();

    let inner = |s: T| -> Result<T> {
        if s == T::zero() {
            return Ok(T::zero());
        }
        let kernel = move |x: T| {
            let u = half * s * x;
            let c = if u == T::zero() { one } else { u.sin() / u };
            Complex::new(half * s * s * c * c * (one + x * x), T::zero())
        };
        let r = measure_integral(|x| p.m.density(x), kernel, true, cfg)?;
        Ok(r.value.re + half * s * s * p.m.atom_at_zero)
    };

    // The inner integral carries ~abs_tol noise, so the outer pass runs at a
    // coarser target that still leaves headroom over the contract.
    let outer_cfg = QuadConfig {
        rel_tol: cfg.rel_tol.max(T::of(1e-9)),
        abs_tol: cfg.abs_tol.max(T::of(1e-11)),
        ..*cfg
    };
    let lhs = laplace_transform(
        |s| Complex::new(inner(s).unwrap_or(T::nan()), T::zero()),
        t,
        &outer_cfg,
    )?;

    let kernel = move |x: T| Complex::new((one + x * x) / (t * t + x * x), T::zero());
    let rhs_integral = measure_integral(|x| p.m.density(x), kernel, true, cfg)?;
    let rhs = rhs_integral.value.re + p.m.atom_at_zero / (t * t);

    Ok((t * lhs.value.re, rhs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::measures::FiniteMeasure;

    fn cfg() -> QuadConfig<f64> {
        QuadConfig::default()
    }

    fn assert_close(actual: Complex<f64>, expected: Complex<f64>, tol: f64, what: &str) {
        let d = (actual - expected).norm();
        assert!(
            d <= tol,
            "{what}: got {actual}, want {expected}, diff {d:.3e}"
        );
    }

    #[test]
    fn level_a_of_degenerate_law_is_zero() {
        let phi = LogCharFn::<f64>::from_real(|_| 0.0);
        let v = level_a(&phi, 1.0, &cfg()).unwrap();
        assert_eq!(v, Complex::new(0.0, 0.0));
    }

    #[test]
    fn level_z_of_pure_shift_is_the_shift() {
        let p = KhintchinePair::new(0.8, FiniteMeasure::zero());
        let v = level_z(&p, 2.0, &cfg()).unwrap();
        assert_close(v, Complex::new(0.8, 0.0), 1e-14, "pure shift");
    }

    #[test]
    fn level_z_of_unit_atom_matches_kernel_at_zero() {
        let p = KhintchinePair::new(0.0, FiniteMeasure::atom(1.0));
        let v = level_z(&p, 2.0, &cfg()).unwrap();
        assert_close(v, Complex::new(0.0, -0.5), 1e-14, "unit atom");
        let vs = level_z_symmetric(&p, 2.0, &cfg()).unwrap();
        assert_close(vs, Complex::new(0.0, -0.5), 1e-14, "unit atom symZ");
    }

    #[test]
    fn small_t_guard_applies_to_level_routes() {
        let phi = LogCharFn::<f64>::from_real(|_| 0.0);
        assert!(matches!(
            level_a(&phi, 1e-4, &cfg()),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn symmetric_route_rejects_shifted_pairs() {
        let p = KhintchinePair::new(0.3, FiniteMeasure::zero());
        assert!(matches!(
            level_z_symmetric(&p, 1.0, &cfg()),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn closed_form_rejects_unknown_names() {
        assert!(matches!(
            closed_form::<f64>("gumbel", 1.0),
            Err(Error::UnknownDistribution(_))
        ));
    }

    #[test]
    fn thm2_forward_on_linear_and_constant_transforms() {
        let c = Complex::new(0.2, -0.7);
        let constant = VoiculescuFn::new(TransformSource::Closed, move |_| c);
        let v = thm2_forward(&constant, 2.0, 1e-4).unwrap();
        assert_close(v, c, 1e-10, "constant transform");

        let linear = VoiculescuFn::new(TransformSource::Closed, |t: f64| Complex::new(0.0, t));
        let v = thm2_forward(&linear, 3.0, 1e-4).unwrap();
        assert_close(v, Complex::new(0.0, 0.0), 1e-9, "linear transform");
    }

    #[test]
    fn thm2_inverse_degenerate_cases() {
        let zero = VoiculescuFn::new(TransformSource::Closed, |_| Complex::new(0.0, 0.0));
        let c = Complex::new(0.4, -0.1);
        // t = 1: empty integral
        assert_close(thm2_inverse(&zero, c, 1.0, &cfg()).unwrap(), c, 0.0, "t=1");
        // zero driver: pure scaling t·c, including t < 1
        assert_close(
            thm2_inverse(&zero, c, 2.5, &cfg()).unwrap(),
            c * 2.5,
            1e-14,
            "scaling",
        );
        assert_close(
            thm2_inverse(&zero, c, 0.25, &cfg()).unwrap(),
            c * 0.25,
            1e-14,
            "scaling t<1",
        );
    }

    #[test]
    fn corollary1_zero_measure_gives_zero_sides() {
        let p = KhintchinePair::new(0.0, FiniteMeasure::zero());
        let (lhs, rhs) = corollary1_check(&p, 1.0, &cfg()).unwrap();
        assert!(lhs.abs() < 1e-12);
        assert!(rhs.abs() < 1e-12);
    }
}
