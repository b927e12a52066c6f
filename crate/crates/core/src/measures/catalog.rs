//! The built-in catalog: hyperbolic cosine / sine / tangent and Laplace
//! (double-exponential) laws, together with the laws driven by them under
//! the background-driving relation (the `bdcf-*` entries).
//!
//! Every entry bundles a closed-form log-characteristic function, the
//! matching Khintchine pair, and the closed-form Voiculescu transform.
//! Densities are written in forms that stay finite at the origin and do
//! not overflow at large arguments.

use serde::{Deserialize, Serialize};

use super::{
    ln_cosh, ln_sinh_over, ln_tanh_over, one_minus_t_coth, sq_cosh_ratio, u_over_expm1,
    u_over_sinh, FiniteMeasure, KhintchinePair, LogCharFn,
};
use crate::error::{Error, Result};
use crate::real::Real;
use crate::specfun::{digamma, hurwitz_zeta_2, sici};
use crate::voiculescu::{closed_form, TransformSource, VoiculescuFn};

/// Names addressable through [`catalog_lookup`].
pub const CATALOG_NAMES: [&str; 8] = [
    "cosh",
    "sinh",
    "tanh",
    "laplace",
    "bdcf-cosh",
    "bdcf-sinh",
    "bdcf-tanh",
    "bdcf-laplace",
];

/// A named law: log-characteristic function, Khintchine pair, closed-form
/// Voiculescu transform, and (for driving laws) the law being driven.
#[derive(Debug, Clone)]
pub struct CatalogEntry<T> {
    pub name: &'static str,
    pub log_cf: LogCharFn<T>,
    pub pair: KhintchinePair<T>,
    pub closed_v: Option<VoiculescuFn<T>>,
    pub bdcf_of: Option<&'static str>,
}

/// Serializable catalog metadata (formulas as text plus the total mass).
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CatalogMeta {
    pub name: String,
    pub log_cf: String,
    pub m_density: String,
    pub closed_v: String,
    pub bdcf_of: Option<String>,
    pub mass: f64,
}

fn mass_hint<T: Real>(name: &str) -> T {
    T::of(mass_hint_f64(name))
}

fn mass_hint_f64(name: &str) -> f64 {
    // Total masses follow from the closed transforms at t = 1, where the
    // symmetric kernel collapses to 1: m(ℝ) = −Im V(i).
    match name {
        "cosh" => std::f64::consts::FRAC_PI_2 - 1.0,
        "sinh" => -(digamma(0.5f64).expect("positive arg") + std::f64::consts::LN_2 + 1.0),
        "tanh" => digamma(0.75f64).expect("positive arg") + 4.0f64.ln(),
        "laplace" => {
            let (si, ci) = sici(1.0f64).expect("positive arg");
            -2.0 * (ci * 1.0f64.cos() + si * 1.0f64.sin())
        }
        "bdcf-cosh" => {
            let z2 = |a: f64| hurwitz_zeta_2(a).expect("positive arg");
            -(1.0 + 0.5 * z2(0.5) - 0.25 * z2(0.25))
        }
        "bdcf-sinh" => 0.5 * hurwitz_zeta_2(0.5f64).expect("positive arg") - 2.0,
        "bdcf-tanh" => 1.0 - 0.25 * hurwitz_zeta_2(0.75f64).expect("positive arg"),
        "bdcf-laplace" => {
            let (si, ci) = sici(1.0f64).expect("positive arg");
            -2.0 * ((ci * 1.0f64.sin() - si * 1.0f64.cos()) - 1.0)
        }
        _ => unreachable!("mass_hint called with a non-catalog name"),
    }
}

fn log_cf_for<T: Real>(name: &'static str) -> LogCharFn<T> {
    match name {
        "cosh" => LogCharFn::from_real(|t: T| -ln_cosh(t)),
        "sinh" => LogCharFn::from_real(|t: T| -ln_sinh_over(t)),
        "tanh" => LogCharFn::from_real(ln_tanh_over),
        "laplace" => LogCharFn::from_real(|t: T| -(t * t).ln_1p()),
        "bdcf-cosh" => LogCharFn::from_real(|t: T| -t * t.tanh()),
        "bdcf-sinh" => LogCharFn::from_real(one_minus_t_coth),
        "bdcf-tanh" => LogCharFn::from_real(|t: T| u_over_sinh(t + t) - T::one()),
        "bdcf-laplace" => LogCharFn::from_real(|t: T| T::of(-2.0) * t * t / (T::one() + t * t)),
        _ => unreachable!("log_cf_for called with a non-catalog name"),
    }
}

fn density_for<T: Real>(name: &'static str) -> FiniteMeasure<T> {
    let inv_pi = T::FRAC_1_PI();
    let half_pi = T::of(0.5) * T::PI();
    let hint = Some(mass_hint::<T>(name));
    match name {
        // ½ |x| / ((1+x²) sinh(π|x|/2)), limit 1/π at 0
        "cosh" => FiniteMeasure::new(T::zero(), true, hint, move |x: T| {
            inv_pi * u_over_sinh(half_pi * x.abs()) / (T::one() + x * x)
        }),
        // |x| / ((1+x²)(e^{π|x|} − 1)), limit 1/π at 0
        "sinh" => FiniteMeasure::new(T::zero(), true, hint, move |x: T| {
            inv_pi * u_over_expm1(T::PI() * x.abs()) / (T::one() + x * x)
        }),
        // |x| / ((1+x²)(e^{π|x|/2} + 1)), vanishing at 0
        "tanh" => FiniteMeasure::new(T::zero(), true, hint, move |x: T| {
            let q = (-half_pi * x.abs()).exp();
            x.abs() * q / ((T::one() + x * x) * (T::one() + q))
        }),
        // |x| e^{-|x|} / (1+x²)
        "laplace" => FiniteMeasure::new(T::zero(), true, hint, |x: T| {
            x.abs() * (-x.abs()).exp() / (T::one() + x * x)
        }),
        // (x²/(1+x²)) (π/4) cosh(πx/2)/sinh²(πx/2), limit 1/π at 0
        "bdcf-cosh" => FiniteMeasure::new(T::zero(), true, hint, move |x: T| {
            inv_pi * sq_cosh_ratio(half_pi * x.abs()) / (T::one() + x * x)
        }),
        // (x²/(1+x²)) (π/4) / sinh²(πx/2), limit 1/π at 0
        "bdcf-sinh" => FiniteMeasure::new(T::zero(), true, hint, move |x: T| {
            let r = u_over_sinh(half_pi * x.abs());
            inv_pi * r * r / (T::one() + x * x)
        }),
        // (x²/(1+x²)) (π/8) / cosh²(πx/4), vanishing at 0
        "bdcf-tanh" => FiniteMeasure::new(T::zero(), true, hint, move |x: T| {
            let r = x / (T::of(0.25) * T::PI() * x.abs()).cosh();
            T::of(0.125) * T::PI() * r * r / (T::one() + x * x)
        }),
        // (x²/(1+x²)) e^{-|x|}
        "bdcf-laplace" => FiniteMeasure::new(T::zero(), true, hint, |x: T| {
            x * x * (-x.abs()).exp() / (T::one() + x * x)
        }),
        _ => unreachable!("density_for called with a non-catalog name"),
    }
}

fn static_name(name: &str) -> Option<&'static str> {
    CATALOG_NAMES.iter().copied().find(|&n| n == name)
}

/// Looks up a catalog entry by name.
pub fn catalog_lookup<T: Real>(name: &str) -> Result<CatalogEntry<T>> {
    let name = static_name(name).ok_or_else(|| Error::UnknownDistribution(name.to_string()))?;
    let bdcf_of = name.strip_prefix("bdcf-").and_then(static_name);
    let closed = VoiculescuFn::new(TransformSource::Closed, move |t: T| {
        closed_form(name, t).expect("closed form defined for t > 0")
    });
    Ok(CatalogEntry {
        name,
        log_cf: log_cf_for(name),
        pair: KhintchinePair::new(T::zero(), density_for(name)),
        closed_v: Some(closed),
        bdcf_of,
    })
}

/// Formula text and mass for one entry.
pub fn catalog_metadata(name: &str) -> Result<CatalogMeta> {
    let name = static_name(name).ok_or_else(|| Error::UnknownDistribution(name.to_string()))?;
    let (log_cf, m_density, closed_v) = match name {
        "cosh" => (
            "-ln(cosh t)",
            "|x| / (2 (1+x^2) sinh(pi |x| / 2))",
            "i [1 - t beta(t/2)]",
        ),
        "sinh" => (
            "ln(t / sinh t)",
            "|x| / ((1+x^2) (e^(pi |x|) - 1))",
            "i [t psi(t/2) - t ln(t/2) + 1]",
        ),
        "tanh" => (
            "ln(tanh t / t)",
            "|x| / ((1+x^2) (e^(pi |x| / 2) + 1))",
            "i t [ln(t/4) - psi(t/4 + 1/2)]",
        ),
        "laplace" => (
            "-ln(1 + t^2)",
            "|x| e^(-|x|) / (1+x^2)",
            "2 i t [ci(t) cos t + si(t) sin t]",
        ),
        "bdcf-cosh" => (
            "-t tanh t",
            "(x^2/(1+x^2)) (pi/4) cosh(pi x/2) / sinh(pi x/2)^2",
            "i [1 + (t^2/2) zeta(2, t/2) - (t^2/4) zeta(2, t/4)]",
        ),
        "bdcf-sinh" => (
            "1 - t coth t",
            "(x^2/(1+x^2)) (pi/4) / sinh(pi x/2)^2",
            "i [1 + t - (t^2/2) zeta(2, t/2)]",
        ),
        "bdcf-tanh" => (
            "2t / sinh(2t) - 1",
            "(x^2/(1+x^2)) (pi/8) / cosh(pi x/4)^2",
            "i t [(t/4) zeta(2, (t+2)/4) - 1]",
        ),
        "bdcf-laplace" => (
            "-2 t^2 / (1 + t^2)",
            "(x^2/(1+x^2)) e^(-|x|)",
            "2 i t [t (ci(t) sin t - si(t) cos t) - 1]",
        ),
        _ => unreachable!(),
    };
    Ok(CatalogMeta {
        name: name.to_string(),
        log_cf: log_cf.to_string(),
        m_density: m_density.to_string(),
        closed_v: closed_v.to_string(),
        bdcf_of: name.strip_prefix("bdcf-").map(str::to_string),
        mass: mass_hint_f64(name),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::measures::{khintchine_to_levy, levy_exponent, levy_to_khintchine, LevyTriple};
    use crate::quad::QuadConfig;

    fn cfg() -> QuadConfig<f64> {
        QuadConfig::default()
    }

    #[test]
    fn unknown_name_is_rejected() {
        assert!(matches!(
            catalog_lookup::<f64>("weibull"),
            Err(Error::UnknownDistribution(_))
        ));
    }

    #[test]
    fn bdcf_links_point_at_the_driven_laws() {
        for name in CATALOG_NAMES {
            let e = catalog_lookup::<f64>(name).unwrap();
            match name.strip_prefix("bdcf-") {
                Some(parent) => assert_eq!(e.bdcf_of, Some(parent)),
                None => assert_eq!(e.bdcf_of, None),
            }
        }
    }

    #[test]
    fn densities_are_nonnegative_and_finite_near_zero() {
        for name in CATALOG_NAMES {
            let e = catalog_lookup::<f64>(name).unwrap();
            for &x in &[1e-300, 1e-12, 1e-3, 0.1, 1.0, 10.0, 100.0, 800.0] {
                let d = e.pair.m.density(x);
                assert!(d.is_finite() && d >= 0.0, "{name} density({x}) = {d}");
                let dm = e.pair.m.density(-x);
                assert!(
                    (d - dm).abs() <= 1e-15 * (1.0 + d),
                    "{name} evenness at {x}"
                );
            }
        }
    }

    #[test]
    fn origin_limits_match_the_analytic_values() {
        let inv_pi = std::f64::consts::FRAC_1_PI;
        for (name, limit) in [
            ("cosh", inv_pi),
            ("sinh", inv_pi),
            ("tanh", 0.0),
            ("laplace", 0.0),
            ("bdcf-cosh", inv_pi),
            ("bdcf-sinh", inv_pi),
            ("bdcf-tanh", 0.0),
            ("bdcf-laplace", 0.0),
        ] {
            let e = catalog_lookup::<f64>(name).unwrap();
            let d = e.pair.m.density(1e-9);
            assert!((d - limit).abs() < 1e-8, "{name}: {d} vs {limit}");
        }
    }

    #[test]
    fn masses_match_their_hints() {
        for name in CATALOG_NAMES {
            let e = catalog_lookup::<f64>(name).unwrap();
            let hint = e.pair.m.mass_hint.unwrap();
            let mass = e.pair.m.mass(&cfg()).unwrap();
            assert!(
                (mass - hint).abs() <= 1e-8 * (1.0 + hint.abs()),
                "{name}: mass {mass} vs hint {hint}"
            );
        }
    }

    #[test]
    fn log_cf_vanishes_at_zero_and_is_hermitian() {
        for name in CATALOG_NAMES {
            let e = catalog_lookup::<f64>(name).unwrap();
            let at0 = e.log_cf.eval(0.0);
            assert!(at0.norm() < 1e-14, "{name} log_cf(0) = {at0}");
            for &t in &[0.3, 1.0, 5.0, 42.0] {
                let plus = e.log_cf.eval(t);
                let minus = e.log_cf.eval(-t);
                assert!(
                    (minus - plus.conj()).norm() < 1e-13,
                    "{name} hermitian at {t}"
                );
                assert_eq!(plus.im, 0.0, "{name} symmetric");
            }
        }
    }

    #[test]
    fn representation_consistency_spot_checks() {
        // Frozen closed-form values of the Lévy exponent at t = 1.
        let cases = [
            ("cosh", -0.4337808304830272),
            ("laplace", -std::f64::consts::LN_2),
            ("bdcf-laplace", -1.0),
        ];
        for (name, expected) in cases {
            let e = catalog_lookup::<f64>(name).unwrap();
            let v = levy_exponent(&e.pair, 1.0, &cfg()).unwrap();
            assert!(
                (v.re - expected).abs() < 1e-9,
                "{name}: {} vs {expected}",
                v.re
            );
            assert_eq!(v.im, 0.0);
        }
    }

    #[test]
    fn khintchine_to_levy_recovers_spectral_densities() {
        // cosh: M(x) = 1/(2|x| sinh(pi|x|/2)); laplace: M(x) = e^{-|x|}/|x|.
        let e = catalog_lookup::<f64>("cosh").unwrap();
        let tr = khintchine_to_levy(&e.pair, &cfg()).unwrap();
        assert_eq!(tr.b, 0.0);
        assert_eq!(tr.sigma2, 0.0);
        for &x in &[0.5, 1.0, 2.0] {
            let expected = 1.0 / (2.0 * x * (std::f64::consts::PI * x / 2.0).sinh());
            assert!((tr.levy_density(x) - expected).abs() < 1e-13 * (1.0 + expected));
        }
        let e = catalog_lookup::<f64>("laplace").unwrap();
        let tr = khintchine_to_levy(&e.pair, &cfg()).unwrap();
        for &x in &[0.5f64, 1.0, 3.0] {
            let expected = (-x).exp() / x;
            assert!((tr.levy_density(x) - expected).abs() < 1e-13 * (1.0 + expected));
        }
    }

    #[test]
    fn bdcf_pairs_match_the_levy_conversion_route() {
        // The driving laws are specified by their Lévy spectral densities;
        // the stored Khintchine densities must agree with the generic
        // conversion away from the origin.
        type SpectralDensity = fn(f64) -> f64;
        let spectral: [(&str, SpectralDensity); 4] = [
            ("bdcf-cosh", |x| {
                let u = std::f64::consts::PI * x.abs() / 2.0;
                std::f64::consts::PI / 4.0 * u.cosh() / (u.sinh() * u.sinh())
            }),
            ("bdcf-sinh", |x| {
                let u = std::f64::consts::PI * x.abs() / 2.0;
                std::f64::consts::PI / 4.0 / (u.sinh() * u.sinh())
            }),
            ("bdcf-tanh", |x| {
                let u = std::f64::consts::PI * x.abs() / 4.0;
                std::f64::consts::PI / 8.0 / (u.cosh() * u.cosh())
            }),
            ("bdcf-laplace", |x| (-x.abs()).exp()),
        ];
        for (name, n_density) in spectral {
            let tr = LevyTriple::new(0.0, 0.0, n_density);
            let pair = levy_to_khintchine(&tr, &cfg()).unwrap();
            assert_eq!(pair.a, 0.0);
            assert!(pair.m.even);
            let entry = catalog_lookup::<f64>(name).unwrap();
            for &x in &[0.05, 0.5, 1.0, 4.0, 20.0] {
                let converted = pair.m.density(x);
                let stored = entry.pair.m.density(x);
                assert!(
                    (converted - stored).abs() <= 1e-12 * (1.0 + stored),
                    "{name} at {x}: {converted} vs {stored}"
                );
            }
        }
    }

    #[test]
    fn round_trip_khintchine_levy_khintchine() {
        for name in ["cosh", "sinh", "laplace", "bdcf-tanh"] {
            let e = catalog_lookup::<f64>(name).unwrap();
            let tr = khintchine_to_levy(&e.pair, &cfg()).unwrap();
            let back = levy_to_khintchine(&tr, &cfg()).unwrap();
            assert!((back.a - e.pair.a).abs() < 1e-9, "{name} shift");
            for &x in &[1e-3, 0.3, 1.0, 5.0, 30.0] {
                let d0 = e.pair.m.density(x);
                let d1 = back.m.density(x);
                assert!(
                    (d0 - d1).abs() <= 1e-12 * (1.0 + d0),
                    "{name} density at {x}: {d0} vs {d1}"
                );
            }
        }
    }

    mod properties {
        use super::*;
        use proptest::prelude::*;

        proptest! {
            #![proptest_config(ProptestConfig::with_cases(64))]

            // log φ(−t) = conj(log φ(t)) for every entry (all real here).
            #[test]
            fn log_cf_is_hermitian(t in 1e-3f64..1e3, idx in 0usize..8) {
                let e = catalog_lookup::<f64>(CATALOG_NAMES[idx]).unwrap();
                let plus = e.log_cf.eval(t);
                let minus = e.log_cf.eval(-t);
                prop_assert!((minus - plus.conj()).norm() <= 1e-12 * (1.0 + plus.norm()));
            }

            // Densities stay nonnegative and finite everywhere they can be probed.
            #[test]
            fn densities_nonnegative(x in -1e3f64..1e3, idx in 0usize..8) {
                let e = catalog_lookup::<f64>(CATALOG_NAMES[idx]).unwrap();
                let d = e.pair.m.density(x);
                prop_assert!(d.is_finite() && d >= 0.0);
            }
        }
    }

    #[test]
    fn entries_are_shareable_across_threads() {
        fn assert_send_sync<T: Send + Sync>() {}
        assert_send_sync::<CatalogEntry<f64>>();
        assert_send_sync::<LogCharFn<f64>>();
        assert_send_sync::<FiniteMeasure<f64>>();
        assert_send_sync::<crate::measures::LevyTriple<f64>>();
        assert_send_sync::<VoiculescuFn<f64>>();
    }

    #[test]
    fn metadata_is_available_for_every_entry() {
        for name in CATALOG_NAMES {
            let m = catalog_metadata(name).unwrap();
            assert_eq!(m.name, name);
            assert!(m.mass > 0.0);
            assert!(!m.log_cf.is_empty() && !m.closed_v.is_empty());
        }
        assert!(matches!(
            catalog_metadata("zeta"),
            Err(Error::UnknownDistribution(_))
        ));
    }
}
