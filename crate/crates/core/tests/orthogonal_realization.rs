use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use schurweyl::orthogonal_form::{adjacent_transposition_matrix, permutation_matrix};
use schurweyl::spectral::schmidt_decompose;
use schurweyl::tensor::{apply_permutation, orthogonal_projector, young_basis_states};
use schurweyl::young::partitions;
use schurweyl::{Permutation, TensorState, YoungDiagram};

fn action_matrix(xs: &[TensorState], sigma: &Permutation) -> Vec<Vec<f64>> {
    let images: Vec<_> = xs.iter().map(|x| apply_permutation(sigma, x).unwrap()).collect();
    xs.iter()
        .map(|row| {
            images
                .iter()
                .map(|img| {
                    let z = row.inner(img).unwrap();
                    assert!(z.im.abs() < 1e-9);
                    z.re
                })
                .collect()
        })
        .collect()
}

#[test]
fn tensor_action_reproduces_generator_matrices() {
    let mut rng = ChaCha8Rng::seed_from_u64(200);
    let mut shapes: Vec<YoungDiagram> = (2..=4).flat_map(partitions).collect();
    shapes.push(YoungDiagram::new(vec![3, 2, 1]).unwrap());
    for nu in shapes {
        let n = nu.n_boxes();
        let d = nu.n_rows().max(2);
        let v = TensorState::random(d, n, &mut rng).unwrap();
        let xs = young_basis_states(&nu, &v).unwrap();
        for (t, x) in nu.standard_tableaux().iter().zip(&xs) {
            let p = orthogonal_projector(t, d);
            assert!(p.apply(x).unwrap().distance(x).unwrap() < 1e-9, "{t}");
        }
        for k in 1..n {
            let m = adjacent_transposition_matrix(&nu, k).unwrap();
            let got = action_matrix(&xs, &Permutation::adjacent(n, k).unwrap());
            for (i, row) in got.iter().enumerate() {
                for (j, &g) in row.iter().enumerate() {
                    assert!((g - m.matrix[(i, j)]).abs() < 1e-9, "{nu} k={k} ({i},{j})");
                }
            }
        }
        for _ in 0..5 {
            let sigma = Permutation::random(n, &mut rng);
            let m = permutation_matrix(&nu, &sigma).unwrap();
            let got = action_matrix(&xs, &sigma);
            for (i, row) in got.iter().enumerate() {
                for (j, &g) in row.iter().enumerate() {
                    assert!((g - m.matrix[(i, j)]).abs() < 1e-9, "{nu} {sigma}");
                }
            }
        }
    }
}

#[test]
fn two_one_worked_values_in_tensor_space() {
    let nu = YoungDiagram::new(vec![2, 1]).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(201);
    let v = TensorState::random(2, 3, &mut rng).unwrap();
    let xs = young_basis_states(&nu, &v).unwrap();
    let got = action_matrix(&xs, &Permutation::adjacent(3, 2).unwrap());
    let h = 0.75f64.sqrt();
    let want = [[-0.5, h], [h, 0.5]];
    for i in 0..2 {
        for j in 0..2 {
            assert!((got[i][j] - want[i][j]).abs() < 1e-9);
        }
    }
}

#[test]
fn schmidt_spectrum_depends_only_on_position_of_largest_entry() {
    let mut rng = ChaCha8Rng::seed_from_u64(202);
    for nu in [vec![2, 1], vec![2, 2], vec![3, 1], vec![2, 1, 1], vec![3, 2, 1]] {
        let nu = YoungDiagram::new(nu).unwrap();
        let n = nu.n_boxes();
        let d = nu.n_rows().max(2);
        let v = TensorState::random(d, n, &mut rng).unwrap();
        let xs = young_basis_states(&nu, &v).unwrap();
        let tabs = nu.standard_tableaux();
        for (i, s) in tabs.iter().enumerate() {
            for (j, t) in tabs.iter().enumerate().skip(i + 1) {
                if s.position(n) != t.position(n) {
                    continue;
                }
                let a = schmidt_decompose(&xs[i], n - 1).unwrap().coefficients;
                let b = schmidt_decompose(&xs[j], n - 1).unwrap().coefficients;
                for (x, y) in a.iter().zip(&b) {
                    assert!((x - y).abs() < 1e-8, "{s} vs {t}");
                }
            }
        }
    }
}
