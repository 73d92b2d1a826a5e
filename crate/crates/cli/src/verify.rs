//! The `verify` subcommand: numerical checks of the projector calculus,
//! the orthogonal-form realization and the saturating states for one shape.

use std::fmt::Write as _;

use num_complex::Complex64;
use num_traits::ToPrimitive;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use schurweyl::orthogonal_form::adjacent_transposition_matrix;
use schurweyl::special_states::{coherent_state, optimizer_state, optimizer_tableau, OrthonormalFrame};
use schurweyl::spectral::{schmidt_decompose, verify_fixed_point};
use schurweyl::tensor::{
    closed_form_projector, isotypic_projector, orthogonal_projector, orthonormalize, subspace_basis, swap_factors,
    young_basis_states,
};
use schurweyl::young::{factorial, partitions};
use schurweyl::{Error, Result, StandardTableau, TensorState, YoungDiagram};
use serde::Serialize;
use serde_json::json;

use crate::args::VerifyArgs;
use crate::report::{table, Report, Status};

pub const ALGEBRA_TOLERANCE: f64 = 1e-9;
pub const CLOSED_FORM_TOLERANCE: f64 = 1e-10;
pub const ORTHOGONAL_FORM_TOLERANCE: f64 = 1e-9;
pub const CONFINEMENT_TOLERANCE: f64 = 1e-8;
pub const MEMBERSHIP_TOLERANCE: f64 = 1e-9;
pub const SATURATION_TOLERANCE: f64 = 1e-8;
pub const FIXED_POINT_TOLERANCE: f64 = 1e-7;

/// Largest `N! * d^N` for which the character-sum projector is evaluated.
const CENTRAL_PROJECTOR_BUDGET: f64 = 5e8;
/// Largest `N` for which the sum over every standard tableau of every shape is formed.
const RESOLUTION_MAX_N: usize = 5;

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
#[serde(rename_all = "lowercase")]
pub enum Outcome {
    Pass,
    Fail,
    Skip,
}

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: &'static str,
    pub outcome: Outcome,
    pub residual: Option<f64>,
    pub tolerance: Option<f64>,
    pub detail: String,
}

impl Check {
    fn measured(name: &'static str, residual: f64, tolerance: f64, detail: impl Into<String>) -> Self {
        Self {
            name,
            outcome: if residual <= tolerance {
                Outcome::Pass
            } else {
                Outcome::Fail
            },
            residual: Some(residual),
            tolerance: Some(tolerance),
            detail: detail.into(),
        }
    }

    fn skipped(name: &'static str, detail: impl Into<String>) -> Self {
        Self {
            name,
            outcome: Outcome::Skip,
            residual: None,
            tolerance: None,
            detail: detail.into(),
        }
    }
}

fn max_of(values: impl IntoIterator<Item = f64>) -> f64 {
    values.into_iter().fold(0.0, f64::max)
}

fn projector_algebra(
    tabs: &[StandardTableau],
    d: usize,
    n: usize,
    samples: usize,
    rng: &mut ChaCha8Rng,
) -> Result<Vec<Check>> {
    let draws: Vec<Vec<(TensorState, TensorState)>> = tabs
        .iter()
        .map(|_| {
            (0..samples)
                .map(|_| Ok((TensorState::random(d, n, rng)?, TensorState::random(d, n, rng)?)))
                .collect::<Result<_>>()
        })
        .collect::<Result<_>>()?;
    let per_tableau: Vec<(f64, f64, f64)> = tabs
        .par_iter()
        .zip(&draws)
        .map(|(t, pairs)| {
            let p = orthogonal_projector(t, d);
            let (mut idem, mut herm, mut orth) = (0.0f64, 0.0f64, 0.0f64);
            for (x, y) in pairs {
                let px = p.apply(x)?;
                idem = idem.max(p.apply(&px)?.distance(&px)?);
                herm = herm.max((y.inner(&px)? - p.apply(y)?.inner(x)?).norm());
                for s in tabs.iter().filter(|s| *s != t) {
                    orth = orth.max(orthogonal_projector(s, d).apply(&px)?.norm());
                }
            }
            Ok((idem, herm, orth))
        })
        .collect::<Result<_>>()?;
    let count = format!("{} tableaux x {samples} random states", tabs.len());
    Ok(vec![
        Check::measured(
            "idempotence",
            max_of(per_tableau.iter().map(|r| r.0)),
            ALGEBRA_TOLERANCE,
            count.clone(),
        ),
        Check::measured(
            "hermiticity",
            max_of(per_tableau.iter().map(|r| r.1)),
            ALGEBRA_TOLERANCE,
            count.clone(),
        ),
        if tabs.len() > 1 {
            Check::measured(
                "orthogonality",
                max_of(per_tableau.iter().map(|r| r.2)),
                ALGEBRA_TOLERANCE,
                count,
            )
        } else {
            Check::skipped("orthogonality", "single tableau")
        },
    ])
}

fn sector_identity(
    nu: &YoungDiagram,
    tabs: &[StandardTableau],
    d: usize,
    samples: usize,
    rng: &mut ChaCha8Rng,
) -> Result<Check> {
    let n = nu.n_boxes();
    let cost = factorial(n).to_f64().unwrap_or(f64::INFINITY) * (d as f64).powi(n as i32);
    if cost > CENTRAL_PROJECTOR_BUDGET {
        return Ok(Check::skipped("sector identity", "character sum too large"));
    }
    let central = isotypic_projector(nu, d)?;
    let mut worst: f64 = 0.0;
    for _ in 0..samples {
        let x = TensorState::random(d, n, rng)?;
        let parts: Vec<TensorState> = tabs
            .par_iter()
            .map(|t| orthogonal_projector(t, d).apply(&x))
            .collect::<Result<_>>()?;
        let mut sum = TensorState::zeros(d, n)?;
        for part in &parts {
            sum.axpy(Complex64::new(1.0, 0.0), part)?;
        }
        worst = worst.max(central.apply(&x)?.distance(&sum)?);
    }
    Ok(Check::measured(
        "sector identity",
        worst,
        ALGEBRA_TOLERANCE,
        "sum of P_t over the shape vs character projector",
    ))
}

fn resolution_of_identity(n: usize, d: usize, samples: usize, rng: &mut ChaCha8Rng) -> Result<Check> {
    if n > RESOLUTION_MAX_N {
        return Ok(Check::skipped(
            "resolution of identity",
            format!("N > {RESOLUTION_MAX_N}"),
        ));
    }
    let all: Vec<StandardTableau> = partitions(n).iter().flat_map(|nu| nu.standard_tableaux()).collect();
    let mut worst: f64 = 0.0;
    for _ in 0..samples {
        let x = TensorState::random(d, n, rng)?;
        let parts: Vec<TensorState> = all
            .par_iter()
            .map(|t| orthogonal_projector(t, d).apply(&x))
            .collect::<Result<_>>()?;
        let mut sum = TensorState::zeros(d, n)?;
        for part in &parts {
            sum.axpy(Complex64::new(1.0, 0.0), part)?;
        }
        worst = worst.max(sum.distance(&x)?);
    }
    Ok(Check::measured(
        "resolution of identity",
        worst,
        ALGEBRA_TOLERANCE,
        format!("{} tableaux of size {n}", all.len()),
    ))
}

fn closed_forms(nu: &YoungDiagram, d: usize, samples: usize, rng: &mut ChaCha8Rng) -> Result<Check> {
    let n = nu.n_boxes();
    let mut ordered = vec![nu.row_ordered_tableau()];
    if nu.column_ordered_tableau() != ordered[0] {
        ordered.push(nu.column_ordered_tableau());
    }
    let mut worst: f64 = 0.0;
    for t in &ordered {
        let closed = closed_form_projector(t, d)?;
        let rec = orthogonal_projector(t, d);
        for _ in 0..samples {
            let x = TensorState::random(d, n, rng)?;
            worst = worst.max(closed.apply(&x)?.distance(&rec.apply(&x)?)?);
        }
    }
    Ok(Check::measured(
        "closed forms",
        worst,
        CLOSED_FORM_TOLERANCE,
        "row- and column-ordered tableaux",
    ))
}

fn ranks(tabs: &[StandardTableau], d: usize, n: usize, rng: &mut ChaCha8Rng) -> Result<Check> {
    let want = tabs[0].diagram().dim_unitary_irrep(d).to_usize().unwrap_or(usize::MAX);
    let draws: Vec<Vec<TensorState>> = tabs
        .iter()
        .map(|_| {
            (0..want + 2)
                .map(|_| TensorState::random(d, n, rng))
                .collect::<Result<_>>()
        })
        .collect::<Result<_>>()?;
    let found: Vec<usize> = tabs
        .par_iter()
        .zip(draws)
        .map(|(t, xs)| {
            let p = orthogonal_projector(t, d);
            let images = xs.iter().map(|x| p.apply(x)).collect::<Result<Vec<_>>>()?;
            Ok(orthonormalize(images)?.len())
        })
        .collect::<Result<_>>()?;
    let off = found.iter().map(|&r| r.abs_diff(want)).max().unwrap_or(0);
    Ok(Check::measured(
        "rank",
        off as f64,
        0.0,
        format!("numerical rank vs dim V = {want}"),
    ))
}

/// Checks on explicit states; requires a nonempty sector.
fn state_checks(nu: &YoungDiagram, tabs: &[StandardTableau], d: usize, rng: &mut ChaCha8Rng) -> Result<Vec<Check>> {
    let n = nu.n_boxes();
    let mut checks = Vec::new();

    let v = TensorState::random(d, n, rng)?;
    let xs = young_basis_states(nu, &v)?;
    let membership = max_of(
        tabs.par_iter()
            .zip(&xs)
            .map(|(t, x)| orthogonal_projector(t, d).apply(x)?.distance(x))
            .collect::<Result<Vec<_>>>()?,
    );
    let mut action: f64 = 0.0;
    for k in 1..n {
        let m = adjacent_transposition_matrix(nu, k)?;
        let images = xs
            .iter()
            .map(|x| swap_factors(x, k, k + 1))
            .collect::<Result<Vec<_>>>()?;
        for (i, row) in xs.iter().enumerate() {
            for (j, img) in images.iter().enumerate() {
                action = action.max((row.inner(img)? - Complex64::new(m.matrix[(i, j)], 0.0)).norm());
            }
        }
    }
    checks.push(Check::measured(
        "orthogonal form",
        membership.max(action),
        ORTHOGONAL_FORM_TOLERANCE,
        "tableau-indexed states: sector membership and generator matrices",
    ));

    if n >= 2 {
        let confinement = max_of(
            tabs.par_iter()
                .zip(&xs)
                .map(|(t, x)| {
                    let down = orthogonal_projector(&t.remove_largest(), d);
                    let s = schmidt_decompose(x, n - 1)?;
                    let mut worst: f64 = 0.0;
                    for (l, phi) in s.coefficients.iter().zip(&s.left_vectors) {
                        if *l > 1e-8 {
                            worst = worst.max(down.apply(phi)?.distance(phi)?);
                        }
                    }
                    Ok(worst)
                })
                .collect::<Result<Vec<_>>>()?,
        );
        checks.push(Check::measured(
            "schmidt confinement",
            confinement,
            CONFINEMENT_TOLERANCE,
            "left Schmidt vectors lie in the sector of the reduced tableau",
        ));
    }

    let frame = OrthonormalFrame::computational(d, nu.n_rows())?;
    let col = nu.column_ordered_tableau();
    let coherent = coherent_state(&col, &frame)?;
    checks.push(Check::measured(
        "coherent state",
        orthogonal_projector(&col, d).apply(&coherent)?.distance(&coherent)?,
        MEMBERSHIP_TOLERANCE,
        format!("membership for {col}"),
    ));

    if n >= 2 {
        let mut saturation: f64 = 0.0;
        let mut fixed: f64 = 0.0;
        let mut details = Vec::new();
        for b in nu.box_bounds()? {
            let psi = optimizer_state(nu, b.cell, &frame)?;
            let t = optimizer_tableau(nu, b.cell)?;
            let lambda = schmidt_decompose(&psi, n - 1)?.lambda1_sq();
            let member = orthogonal_projector(&t, d).apply(&psi)?.distance(&psi)?;
            saturation = saturation.max((lambda - b.to_f64()).abs()).max(member);
            fixed = fixed.max(verify_fixed_point(&psi, &subspace_basis(&t, d)?, n - 1)?);
            details.push(format!("{}: {lambda:.9} vs {}", b.cell, b.value));
        }
        checks.push(Check::measured(
            "optimizer saturation",
            saturation,
            SATURATION_TOLERANCE,
            details.join("; "),
        ));
        checks.push(Check::measured(
            "fixed point",
            fixed,
            FIXED_POINT_TOLERANCE,
            "saturating states are fixed points of the ascent",
        ));
    }
    Ok(checks)
}

/// Run every check for a shape and local dimension.
pub fn run_checks(nu: &YoungDiagram, d: usize, seed: u64, samples: usize) -> Result<Vec<Check>> {
    let n = nu.n_boxes();
    schurweyl::tensor::state_len(d, n)?;
    let tabs = nu.standard_tableaux();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut checks = projector_algebra(&tabs, d, n, samples, &mut rng)?;
    checks.push(sector_identity(nu, &tabs, d, samples, &mut rng)?);
    checks.push(resolution_of_identity(n, d, samples, &mut rng)?);
    checks.push(closed_forms(nu, d, samples, &mut rng)?);
    checks.push(ranks(&tabs, d, n, &mut rng)?);
    if d >= nu.n_rows() {
        checks.extend(state_checks(nu, &tabs, d, &mut rng)?);
    } else {
        checks.push(Check::skipped(
            "state checks",
            format!("d = {d} < {} rows: empty sector", nu.n_rows()),
        ));
    }
    Ok(checks)
}

pub fn cmd_verify(args: &VerifyArgs) -> std::result::Result<Report, Error> {
    let nu = &args.partition;
    let d = args.d.unwrap_or(nu.n_rows());
    if d == 0 {
        return Err(Error::DimensionMismatch("local dimension must be at least 1".into()));
    }
    let checks = run_checks(nu, d, args.seed, args.samples as usize)?;
    let failed = checks.iter().filter(|c| c.outcome == Outcome::Fail).count();
    let body = json!({
        "partition": nu.to_string(),
        "d": d,
        "seed": args.seed,
        "samples": args.samples,
        "checks": checks,
        "passed": failed == 0,
    });
    let rows: Vec<Vec<String>> = checks
        .iter()
        .map(|c| {
            vec![
                c.name.to_string(),
                format!("{:?}", c.outcome).to_uppercase(),
                c.residual.map_or("-".into(), |r| format!("{r:.3e}")),
                c.tolerance.map_or("-".into(), |t| format!("{t:.0e}")),
                c.detail.clone(),
            ]
        })
        .collect();
    let mut text = format!("partition {nu}, d = {d}, seed {}\n", args.seed);
    text.push_str(&table(&["check", "outcome", "residual", "tolerance", "detail"], &rows));
    let _ = writeln!(
        text,
        "{}",
        if failed == 0 {
            "all checks passed".to_string()
        } else {
            format!("{failed} check(s) failed")
        }
    );
    let mut out = Report::new("verify", body, text);
    if failed > 0 {
        out.status = Status::VerificationFailure;
    }
    Ok(out)
}
