//! Seeded medium-scale consistency checks between the random models, the
//! peeling/matching algorithms, and the analytic predictions.

use hyperorient::models::{binomial_coefficient, gen_binomial, gen_poisson_cloning, gen_uniform};
use hyperorient::orient::orient_with_peeling;
use hyperorient::peel::peel_core;
use hyperorient::rng::Seed;
use hyperorient::threshold::OrientParams;

#[test]
fn poisson_cloning_core_matches_prediction_at_1e5() {
    // (k, ell, c) = (3, 2, 2.2), n = 10^5: the simulated (ell+1)-core
    // fraction concentrates on Q(xi, ell+1)
    let params = OrientParams::new(3, 2).unwrap();
    let n = 100_000usize;
    let c = 2.2f64;
    let pred = params.core_prediction(c).unwrap();
    assert!(pred.exists);
    let p = c * 3.0 / binomial_coefficient(n - 1, 2).unwrap() as f64;
    let h = gen_poisson_cloning(n, p, 3, Seed::new(2024, 0)).unwrap();
    let core = peel_core(&h, 2);
    let frac = core.vertices.len() as f64 / n as f64;
    assert!(
        (frac - pred.n_frac).abs() < 0.01,
        "core fraction {frac} vs predicted {}",
        pred.n_frac
    );
    let density = core.density.as_f64();
    assert!(
        (density - pred.density).abs() < 0.02,
        "core density {density} vs predicted {}",
        pred.density
    );
}

#[test]
fn uniform_and_binomial_models_agree_on_orientability() {
    // orientable fraction at c = c* -/+ 0.15 agrees between H(n,m,k) and
    // H(n,p,k) within 0.05 at n = 2*10^4 (both sit deep in their
    // respective phases at this distance from the threshold)
    let params = OrientParams::new(3, 2).unwrap();
    let c_star = params.c_star().c_star;
    let n = 20_000usize;
    let trials = 30u64;
    for (side, c) in [("below", c_star - 0.15), ("above", c_star + 0.15)] {
        let m = (c * n as f64).floor() as usize;
        let p = c * 3.0 / binomial_coefficient(n - 1, 2).unwrap() as f64;
        let mut uni = 0u32;
        let mut bin = 0u32;
        for t in 0..trials {
            let hu = gen_uniform(n, m, 3, Seed::new(31_000, t)).unwrap();
            if orient_with_peeling(&hu, 2).is_orientable() {
                uni += 1;
            }
            let hb = gen_binomial(n, p, 3, Seed::new(32_000, t)).unwrap();
            if orient_with_peeling(&hb, 2).is_orientable() {
                bin += 1;
            }
        }
        let fu = uni as f64 / trials as f64;
        let fb = bin as f64 / trials as f64;
        assert!(
            (fu - fb).abs() <= 0.05,
            "{side} threshold: uniform {fu} vs binomial {fb}"
        );
        if side == "below" {
            assert!(fu > 0.9, "{side}: uniform fraction {fu}");
        } else {
            assert!(fu < 0.1, "{side}: uniform fraction {fu}");
        }
    }
}

#[test]
fn orientable_iff_no_core_overload_per_trial() {
    // per-record cross-check: a core denser than ell forbids orientation,
    // and an orientable instance never carries such a core
    for t in 0..12u64 {
        let n = 5_000usize;
        let c = 1.85 + 0.03 * t as f64; // straddles c*(3,2) ~ 1.976
        let m = (c * n as f64).floor() as usize;
        let h = gen_uniform(n, m, 3, Seed::new(88, t)).unwrap();
        let core = peel_core(&h, 2);
        let orientable = orient_with_peeling(&h, 2).is_orientable();
        if orientable {
            assert!(
                !core.density.exceeds(2),
                "t={t}: orientable instance with overloaded core"
            );
        }
        if core.density.exceeds(2) {
            assert!(!orientable, "t={t}: overloaded core yet orientable");
        }
    }
}
