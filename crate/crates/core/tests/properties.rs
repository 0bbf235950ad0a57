use proptest::prelude::*;

use tritangle::convexroof::{ensemble_from_mixing, Spectral};
use tritangle::entanglement::{
    concurrence_pure2, concurrence_wootters, cut_concurrence_amplitudes, eof_from_concurrence,
    groverian_from_concurrence, monogamy_residual, three_tangle_amplitudes, three_tangle_ghzw, Cut,
    GhzwMixtureParams, MeasureKind, MeasureValue,
};
use tritangle::noisychan::epsilon_x_w;
use tritangle::qcore::{kron, sqrt_psd};
use tritangle::random::{random_density, random_pure_state, random_unitary, rng};
use tritangle::teleport::{
    fidelity_ghz_closed, fidelity_w_closed, scheme_unitary, teleport_output, SchemeKind,
};
use tritangle::{ComplexMatrix, PureState};

fn local_unitary(seed: u64) -> ComplexMatrix {
    let mut r = rng(seed);
    let a = random_unitary(2, &mut r);
    let b = random_unitary(2, &mut r);
    let c = random_unitary(2, &mut r);
    kron(&kron(&a, &b), &c)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn kron_is_associative(seed in any::<u64>()) {
        let mut r = rng(seed);
        let a = random_unitary(2, &mut r);
        let b = random_unitary(2, &mut r);
        let c = random_unitary(2, &mut r);
        let lhs = kron(&kron(&a, &b), &c);
        let rhs = kron(&a, &kron(&b, &c));
        prop_assert!(lhs.max_abs_diff(&rhs) < 1e-15);
    }

    #[test]
    fn partial_trace_of_product_recovers_factor(seed in any::<u64>()) {
        let mut r = rng(seed);
        let a = random_density(1, 2, &mut r).unwrap();
        let b = random_density(2, 3, &mut r).unwrap();
        let ab = a.tensor(&b).unwrap();
        prop_assert!(ab.partial_trace(&[1, 2]).unwrap().matrix().max_abs_diff(a.matrix()) < 1e-14);
        prop_assert!(ab.partial_trace(&[0]).unwrap().matrix().max_abs_diff(b.matrix()) < 1e-14);
    }

    #[test]
    fn unitary_evolution_preserves_trace(seed in any::<u64>()) {
        let mut r = rng(seed);
        let rho = random_density(3, 4, &mut r).unwrap();
        let u = random_unitary(8, &mut r);
        let out = rho.evolve(&u).unwrap();
        prop_assert!((out.matrix().trace().re - 1.0).abs() < 1e-13);
    }

    #[test]
    fn eigenvalues_sum_to_trace(seed in any::<u64>(), rank in 1usize..=8) {
        let mut r = rng(seed);
        let rho = random_density(3, rank, &mut r).unwrap();
        let s: f64 = rho.eigenvalues().unwrap().iter().sum();
        prop_assert!((s - 1.0).abs() < 1e-12);
    }

    #[test]
    fn square_root_squares_back(seed in any::<u64>(), rank in 1usize..=4) {
        let mut r = rng(seed);
        let rho = random_density(2, rank, &mut r).unwrap();
        let s = sqrt_psd(&rho).unwrap();
        prop_assert!(s.matmul(&s).max_abs_diff(rho.matrix()) < 1e-10);
    }

    #[test]
    fn ckw_and_residual_tangle(seed in any::<u64>()) {
        let psi = random_pure_state(3, &mut rng(seed)).unwrap();
        let tau = three_tangle_amplitudes(psi.amplitudes());
        let residual = monogamy_residual(&psi).unwrap();
        prop_assert!(residual >= -1e-9);
        prop_assert!((residual - tau).abs() < 1e-8);
    }

    #[test]
    fn tangle_is_local_unitary_invariant(seed in any::<u64>(), lu in any::<u64>()) {
        let psi = random_pure_state(3, &mut rng(seed)).unwrap();
        let moved = PureState::new(local_unitary(lu).matvec(psi.amplitudes())).unwrap();
        let (a, b) = (three_tangle_amplitudes(psi.amplitudes()), three_tangle_amplitudes(moved.amplitudes()));
        prop_assert!((a - b).abs() < 1e-12);
        for cut in Cut::ALL {
            let (x, y) = (
                cut_concurrence_amplitudes(psi.amplitudes(), cut),
                cut_concurrence_amplitudes(moved.amplitudes(), cut),
            );
            prop_assert!((x - y).abs() < 1e-7);
        }
    }

    #[test]
    fn eof_and_groverian_increase_with_concurrence(a in 0.0f64..=1.0, b in 0.0f64..=1.0) {
        let (lo, hi) = if a <= b { (a, b) } else { (b, a) };
        let c = |v| MeasureValue::new(MeasureKind::Concurrence, v).unwrap();
        prop_assert!(eof_from_concurrence(c(lo)).unwrap().get() <= eof_from_concurrence(c(hi)).unwrap().get() + 1e-15);
        prop_assert!(groverian_from_concurrence(c(lo)).unwrap().get() <= groverian_from_concurrence(c(hi)).unwrap().get() + 1e-15);
    }

    #[test]
    fn wootters_on_pure_state_is_pure_concurrence(seed in any::<u64>()) {
        let psi = random_pure_state(2, &mut rng(seed)).unwrap();
        let w = concurrence_wootters(&psi.density()).unwrap().get();
        prop_assert!((w - concurrence_pure2(&psi).unwrap().get()).abs() < 1e-7);
    }

    #[test]
    fn any_unitary_mixing_reconstructs_state(seed in any::<u64>(), rank in 1usize..=4) {
        let mut r = rng(seed);
        let rho = random_density(2, rank, &mut r).unwrap();
        let r_eff = Spectral::of(&rho).unwrap().rank();
        let u = random_unitary(r_eff + 2, &mut r);
        let v = ComplexMatrix::from_fn(r_eff + 2, r_eff, |i, j| u[(i, j)]);
        let ens = ensemble_from_mixing(&rho, &v).unwrap();
        prop_assert!(ens.reconstruct().max_abs_diff(rho.matrix()) < 1e-12);
    }

    #[test]
    fn mixture_tangle_bounded_by_linear_interpolation(p in 0.0f64..=1.0) {
        // convexity: τ(p) never exceeds the mixture of its endpoint values
        let t = three_tangle_ghzw(p, &GhzwMixtureParams::standard()).unwrap().get();
        prop_assert!((0.0..=p + 1e-12).contains(&t));
    }

    #[test]
    fn teleport_fidelity_matches_closed_forms(theta in 0.0f64..=std::f64::consts::PI, phi in 0.0f64..std::f64::consts::TAU, p in 0.0f64..=1.0) {
        let g = teleport_output(&scheme_unitary(SchemeKind::Ghz), theta, phi, p).unwrap();
        prop_assert!((g.fidelity - fidelity_ghz_closed(theta, p).unwrap()).abs() < 1e-10);
        let w = teleport_output(&scheme_unitary(SchemeKind::W), theta, phi, p).unwrap();
        prop_assert!((w.fidelity - fidelity_w_closed(p).unwrap()).abs() < 1e-10);
        prop_assert!((g.rho_out.matrix().trace().re - 1.0).abs() < 1e-12);
    }

    #[test]
    fn noisy_state_is_a_density_matrix(kt in 0.0f64..20.0) {
        let e = epsilon_x_w(kt).unwrap();
        prop_assert!((e.matrix().trace().re - 1.0).abs() < 1e-13);
        prop_assert!(e.eigenvalues().unwrap().iter().all(|&x| x > -1e-12));
    }
}
