use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use schurweyl::special_states::{optimizer_state, OrthonormalFrame};
use schurweyl::spectral::{
    entanglement_entropy, max_lambda1_over_subspace, schmidt_decompose, MaximizeConfig, SubspaceProjector,
};
use schurweyl::tensor::{orthogonal_projector, sector_basis, subspace_basis, swap_factors};
use schurweyl::young::partitions;
use schurweyl::{TensorState, YoungDiagram};

#[test]
fn left_schmidt_vectors_stay_in_the_reduced_sector() {
    for n in 2..=4 {
        for nu in partitions(n) {
            for d in [nu.n_rows(), nu.n_rows() + 1] {
                for t in nu.standard_tableaux() {
                    let down = orthogonal_projector(&t.remove_largest(), d);
                    for b in subspace_basis(&t, d).unwrap() {
                        let s = schmidt_decompose(&b, n - 1).unwrap();
                        for (l, phi) in s.coefficients.iter().zip(&s.left_vectors) {
                            if *l > 1e-8 {
                                let res = down.apply(phi).unwrap().distance(phi).unwrap();
                                assert!(res <= 1e-8, "{t} d={d}: {res:e}");
                            }
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn random_states_respect_entropy_bound() {
    let mut rng = ChaCha8Rng::seed_from_u64(300);
    for n in 2..=4 {
        for nu in partitions(n) {
            let d = nu.n_rows();
            let bound = nu.entropy_lower_bound().unwrap();
            let mut subspaces: Vec<Vec<TensorState>> = nu
                .standard_tableaux()
                .iter()
                .map(|t| subspace_basis(t, d).unwrap())
                .collect();
            subspaces.push(sector_basis(&nu, d).unwrap());
            for basis in subspaces {
                let proj = SubspaceProjector::new(&basis).unwrap();
                for _ in 0..50 {
                    let x = TensorState::random(d, n, &mut rng).unwrap();
                    let psi = proj.apply(&x).unwrap().normalized().unwrap();
                    let s = entanglement_entropy(&psi, n - 1).unwrap();
                    assert!(s >= bound - 1e-7, "{nu}: {s} < {bound}");
                }
            }
        }
    }
}

#[test]
fn maximum_is_independent_of_which_factor_is_split_off() {
    for rows in [vec![2, 1], vec![2, 2], vec![2, 1, 1]] {
        let nu = YoungDiagram::new(rows).unwrap();
        let n = nu.n_boxes();
        let d = nu.n_rows();
        let basis = sector_basis(&nu, d).unwrap();
        let best = nu.entanglement_bound().unwrap();
        let frame = OrthonormalFrame::computational(d, d).unwrap();
        let seed = optimizer_state(&nu, best.cell, &frame).unwrap();
        let last = MaximizeConfig {
            warm_starts: vec![seed.clone()],
            restarts: 8,
            ..Default::default()
        };
        let first = MaximizeConfig {
            warm_starts: vec![swap_factors(&seed, 1, n).unwrap()],
            restarts: 8,
            ..Default::default()
        };
        let a = max_lambda1_over_subspace(&basis, n - 1, &last).unwrap();
        let b = max_lambda1_over_subspace(&basis, 1, &first).unwrap();
        assert!((a.best_lambda1_sq - b.best_lambda1_sq).abs() < 1e-6, "{nu}");
        assert!(a.max_decrease() <= 1e-12 && b.max_decrease() <= 1e-12);
    }
}

#[test]
fn ascent_is_monotone_on_every_restart() {
    let nu = YoungDiagram::new(vec![3, 2, 1]).unwrap();
    let basis = sector_basis(&nu, 3).unwrap();
    let config = MaximizeConfig {
        restarts: 6,
        record_trace: true,
        seed: 9,
        ..Default::default()
    };
    let report = max_lambda1_over_subspace(&basis, 5, &config).unwrap();
    for r in &report.restarts {
        let trace = r.trace.as_ref().unwrap();
        assert!(trace.windows(2).all(|w| w[1] >= w[0] - 1e-12));
    }
    assert!((report.best_lambda1_sq - 1.0).abs() < 1e-6);
    assert!(report.best_lambda1_sq <= 1.0 + 1e-7);
}
