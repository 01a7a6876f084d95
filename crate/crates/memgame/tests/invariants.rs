mod common;

use core::f64::consts::{FRAC_PI_2, PI};

use memgame::channels::{two_use_kraus, ChannelKind, ChannelSpec};
use memgame::closedform::{closed_payoff, closed_payoff_pair, Noise, Pairing};
use memgame::equilibrium::{best_response, Player, StrategySpace};
use memgame::games::{builtin_game, Bimatrix};
use memgame::oracle::{oracle_payoffs, two_pass_state, GameConfig};
use memgame::protocol::{basis_vectors, strategy_unitary, EntanglementParams, StrategyParams};
use memgame::qmat::{dagger, mat_trace, tensor, CMatrix};
use memgame::Complex64;
use proptest::prelude::*;

fn matrix(dim: usize) -> impl Strategy<Value = CMatrix> {
    prop::collection::vec((-3.0..3.0f64, -3.0..3.0f64), dim * dim).prop_map(move |v| {
        let z: Vec<Complex64> = v.into_iter().map(|(r, i)| Complex64::new(r, i)).collect();
        CMatrix::from_rows(dim, &z).unwrap()
    })
}

fn strat() -> impl Strategy<Value = StrategyParams> {
    (0.0..=PI, -PI..=PI, -PI..=PI).prop_map(|(t, a, b)| StrategyParams::new(t, a, b).unwrap())
}

fn ent() -> impl Strategy<Value = EntanglementParams> {
    (0.0..=FRAC_PI_2, 0.0..=FRAC_PI_2).prop_map(|(g, d)| EntanglementParams::new(g, d).unwrap())
}

fn noise() -> impl Strategy<Value = Noise> {
    (0.0..=1.0f64, 0.0..=1.0f64).prop_map(|(p, mu)| Noise::new(p, mu).unwrap())
}

fn pairing() -> impl Strategy<Value = Pairing> {
    prop::sample::select(Pairing::ALL.to_vec())
}

fn entries() -> impl Strategy<Value = [f64; 4]> {
    prop::array::uniform4(-5.0..5.0f64)
}

proptest! {
    #[test]
    fn tensor_is_associative(a in matrix(2), b in matrix(2), c in matrix(2)) {
        let l = tensor(&tensor(&a, &b), &c);
        let r = tensor(&a, &tensor(&b, &c));
        prop_assert!(l.max_abs_diff(&r) < 1e-12);
    }

    #[test]
    fn trace_of_tensor_factorizes(a in matrix(2), b in matrix(4)) {
        let lhs = mat_trace(&tensor(&a, &b));
        prop_assert!((lhs - mat_trace(&a) * mat_trace(&b)).l1_norm() < 1e-10);
    }

    #[test]
    fn gram_trace_is_nonnegative(m in matrix(4)) {
        let t = mat_trace(&(&dagger(&m) * &m));
        prop_assert!(t.im.abs() < 1e-12 && t.re >= 0.0);
    }

    #[test]
    fn eigenvalues_sum_to_trace(m in matrix(4)) {
        let h = &m + &dagger(&m);
        let sum: f64 = h.hermitian_eigenvalues().iter().sum();
        prop_assert!((sum - mat_trace(&h).re).abs() < 1e-12 * (1.0 + sum.abs()));
    }

    #[test]
    fn strategy_unitary_is_unitary(s in strat()) {
        let u = strategy_unitary(&s);
        prop_assert!((&u * &dagger(&u)).max_abs_diff(&CMatrix::identity(2)) < 1e-12);
    }

    #[test]
    fn measurement_basis_is_orthonormal(delta in 0.0..=FRAC_PI_2) {
        let v = basis_vectors(delta).unwrap();
        for i in 0..4 {
            for j in 0..4 {
                let ip: Complex64 = v[i].iter().zip(&v[j]).map(|(x, y)| x.conj() * y).sum();
                let want = if i == j { 1.0 } else { 0.0 };
                prop_assert!((ip - want).l1_norm() < 1e-12);
            }
        }
    }

    #[test]
    fn two_pass_state_is_a_density(pr in pairing(), e in ent(), s1 in strat(), s2 in strat(), n1 in noise(), n2 in noise()) {
        let (k1, k2) = pr.kinds();
        let rho = two_pass_state(
            &e, &s1, &s2,
            &ChannelSpec::new(k1, n1.p, n1.mu).unwrap(),
            &ChannelSpec::new(k2, n2.p, n2.mu).unwrap(),
        ).unwrap();
        prop_assert!(rho.is_density(1e-9));
    }

    #[test]
    fn dephasing_preserves_populations(m in matrix(4), p in 0.0..=1.0f64, mu in 0.0..=1.0f64) {
        let rho = &m * &dagger(&m);
        let out = two_use_kraus(&ChannelSpec::new(ChannelKind::Dephasing, p, mu).unwrap()).unwrap().apply(&rho);
        for i in 0..4 {
            prop_assert!((out.get(i, i) - rho.get(i, i)).l1_norm() < 1e-12);
        }
    }

    #[test]
    fn payoff_is_linear_in_entries(pr in pairing(), e in ent(), s1 in strat(), s2 in strat(), n1 in noise(), n2 in noise(),
                                   x in entries(), y in entries(), k in -3.0..3.0f64) {
        let f = |v: [f64; 4]| closed_payoff(pr, v, &e, &s1, &s2, n1, n2).unwrap();
        let mix: [f64; 4] = core::array::from_fn(|i| x[i] + k * y[i]);
        prop_assert!((f(mix) - f(x) - k * f(y)).abs() < 1e-9);
    }

    #[test]
    fn payoffs_are_normalized(pr in pairing(), e in ent(), s1 in strat(), s2 in strat(), n1 in noise(), n2 in noise()) {
        let v = closed_payoff(pr, [1.0; 4], &e, &s1, &s2, n1, n2).unwrap();
        prop_assert!((v - 1.0).abs() < 1e-9);
    }

    #[test]
    fn swapping_players_swaps_payoffs(pr in pairing(), e in ent(), s1 in strat(), s2 in strat(), n1 in noise(), n2 in noise(),
                                      a in entries(), b in entries()) {
        let (k1, k2) = pr.kinds();
        let ch1 = ChannelSpec::new(k1, n1.p, n1.mu).unwrap();
        let ch2 = ChannelSpec::new(k2, n2.p, n2.mu).unwrap();
        let game = Bimatrix::custom(a, b).unwrap();
        let fwd = oracle_payoffs(&GameConfig { game, ch1, ch2, ent: e, s1, s2 }).unwrap();
        let rev = oracle_payoffs(&GameConfig { game: game.transposed(), ch1, ch2, ent: e, s1: s2, s2: s1 }).unwrap();
        prop_assert!((fwd.0 - rev.1).abs() < 1e-10 && (fwd.1 - rev.0).abs() < 1e-10);
        let cf = closed_payoff_pair(pr, &game.transposed(), &e, &s2, &s1, n1, n2).unwrap();
        prop_assert!((fwd.0 - cf.1).abs() < 1e-9 && (fwd.1 - cf.0).abs() < 1e-9);
    }

    #[test]
    fn phases_are_irrelevant_without_entanglement(pr in pairing(), s1 in strat(), s2 in strat(), n1 in noise(), n2 in noise(),
                                                  a2 in -PI..=PI, b2 in -PI..=PI) {
        let e = EntanglementParams::new(0.0, 0.0).unwrap();
        let game = builtin_game("chicken").unwrap();
        let moved = StrategyParams::new(s2.theta, a2, b2).unwrap();
        let x = closed_payoff_pair(pr, &game, &e, &s1, &s2, n1, n2).unwrap();
        let y = closed_payoff_pair(pr, &game, &e, &s1, &moved, n1, n2).unwrap();
        prop_assert!((x.0 - y.0).abs() < 1e-12 && (x.1 - y.1).abs() < 1e-12);
    }

    #[test]
    fn full_memory_dephasing_is_noiseless(e in ent(), s1 in strat(), s2 in strat(), p1 in 0.0..=1.0f64, p2 in 0.0..=1.0f64, a in entries()) {
        let noisy = closed_payoff(Pairing::PhPh, a, &e, &s1, &s2, Noise::new(p1, 1.0).unwrap(), Noise::new(p2, 1.0).unwrap()).unwrap();
        let clean = closed_payoff(Pairing::PhPh, a, &e, &s1, &s2, Noise::NONE, Noise::NONE).unwrap();
        prop_assert!((noisy - clean).abs() < 1e-12);
    }

    #[test]
    fn best_response_survives_affine_maps(e in ent(), n1 in noise(), n2 in noise(), opp in strat(),
                                          scale in 0.1..10.0f64, shift in -10.0..10.0f64) {
        let game = builtin_game("bos").unwrap();
        let f = |x: &StrategyParams, y: &StrategyParams| closed_payoff_pair(Pairing::AdD, &game, &e, x, y, n1, n2).unwrap();
        let g = |x: &StrategyParams, y: &StrategyParams| {
            let (a, b) = f(x, y);
            (scale * a + shift, scale * b + shift)
        };
        let space = StrategySpace::new(5, 5, 5, false).unwrap();
        prop_assert_eq!(best_response(&f, &space, &opp, Player::Bob), best_response(&g, &space, &opp, Player::Bob));
    }
}
