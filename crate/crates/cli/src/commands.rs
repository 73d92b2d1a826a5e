//! The non-verification subcommands.

use std::fmt::Write as _;

use schurweyl::orthogonal_form::{adjacent_transposition_matrix, tableau_basis};
use schurweyl::special_states::{optimizer_state, optimizer_tableau, OrthonormalFrame};
use schurweyl::spectral::{max_lambda1_over_subspace, schmidt_decompose, verify_fixed_point, MaximizeConfig};
use schurweyl::tensor::{sector_basis, swap_factors};
use schurweyl::young::{partitions, rational_to_f64};
use schurweyl::Error;
use serde_json::{json, Value};

use crate::args::{BoundArgs, MatricesArgs, MaximizeArgs, StateArgs, SweepArgs, TableauxArgs};
use crate::report::{big, rational, table, Report, Status};

/// Slack allowed above the analytic bound before a maximization counts as unsound.
pub const SOUNDNESS_SLACK: f64 = 1e-7;
/// Distance to the analytic bound within which it counts as attained.
pub const ATTAINMENT_SLACK: f64 = 1e-6;

fn cell_json(cell: schurweyl::Cell) -> Value {
    json!([cell.row, cell.col])
}

pub fn cmd_bound(args: &BoundArgs) -> Result<Report, Error> {
    let nu = &args.partition;
    let boxes = nu.box_bounds()?;
    let best = nu.entanglement_bound()?;
    let entropy = nu.entropy_lower_bound()?;
    let box_rows: Vec<Value> = boxes
        .iter()
        .map(|b| {
            json!({
                "box": cell_json(b.cell),
                "bound": rational(&b.value),
            })
        })
        .collect();
    let body = json!({
        "partition": nu.to_string(),
        "n": nu.n_boxes(),
        "boxes": box_rows,
        "max": { "box": cell_json(best.cell), "bound": rational(&best.value) },
        "entropy_lower_bound": entropy,
    });
    let mut text = format!("partition {nu} (N = {})\n", nu.n_boxes());
    let rows: Vec<Vec<String>> = boxes
        .iter()
        .map(|b| vec![b.cell.to_string(), b.value.to_string(), format!("{:.6}", b.to_f64())])
        .collect();
    text.push_str(&table(&["box", "bound", "value"], &rows));
    let _ = writeln!(text, "max {} at {}", best.value, best.cell);
    let _ = writeln!(text, "entropy lower bound {entropy:.6}");
    Ok(Report::new("bound", body, text))
}

pub fn cmd_tableaux(args: &TableauxArgs) -> Result<Report, Error> {
    let nu = &args.partition;
    let d = args.d.unwrap_or(nu.n_rows());
    let tabs = nu.standard_tableaux();
    let dim_s = nu.dim_symmetric_irrep();
    let dim_v = nu.dim_unitary_irrep(d);
    let entries: Vec<Value> = tabs
        .iter()
        .map(|t| {
            json!({
                "tableau": t.to_string(),
                "row_ordered": t.is_row_ordered(),
                "column_ordered": t.is_column_ordered(),
            })
        })
        .collect();
    let body = json!({
        "partition": nu.to_string(),
        "d": d,
        "count": tabs.len(),
        "dim_symmetric_irrep": big(&dim_s),
        "dim_unitary_irrep": big(&dim_v),
        "tableaux": entries,
    });
    let rows: Vec<Vec<String>> = tabs
        .iter()
        .map(|t| {
            let flag = |b: bool| if b { "yes" } else { "" }.to_string();
            vec![t.to_string(), flag(t.is_row_ordered()), flag(t.is_column_ordered())]
        })
        .collect();
    let mut text = format!("partition {nu}: {} standard tableaux\n", tabs.len());
    text.push_str(&table(&["tableau", "row-ordered", "column-ordered"], &rows));
    let _ = writeln!(text, "dim S = {dim_s}");
    let _ = writeln!(text, "dim V (d = {d}) = {dim_v}");
    Ok(Report::new("tableaux", body, text))
}

pub fn cmd_sweep(args: &SweepArgs) -> Result<Report, Error> {
    let max_n = args.max_n as usize;
    let min_n = args.min_n.map_or(max_n, |m| m as usize);
    if min_n > max_n {
        return Err(Error::InvalidPartition(format!("min-n {min_n} exceeds max-n {max_n}")));
    }
    let max_d = args.max_d as usize;
    let mut entries = Vec::new();
    let mut rows = Vec::new();
    for n in min_n..=max_n {
        for nu in partitions(n) {
            let dims_v: Vec<_> = (1..=max_d).map(|d| nu.dim_unitary_irrep(d)).collect();
            let dim_s = nu.dim_symmetric_irrep();
            let (bound, cell, entropy) = if n >= 2 {
                let b = nu.entanglement_bound()?;
                (Some(b.value), Some(b.cell), Some(nu.entropy_lower_bound()?))
            } else {
                (None, None, None)
            };
            entries.push(json!({
                "partition": nu.to_string(),
                "n": n,
                "bound": bound.as_ref().map(rational),
                "box": cell.map(cell_json),
                "entropy_lower_bound": entropy,
                "dim_symmetric_irrep": big(&dim_s),
                "dim_unitary_irrep": dims_v.iter().map(big).collect::<Vec<_>>(),
            }));
            let mut row = vec![
                nu.to_string(),
                bound.map_or("-".into(), |b| b.to_string()),
                cell.map_or("-".into(), |c| c.to_string()),
                entropy.map_or("-".into(), |e| format!("{e:.6}")),
                dim_s.to_string(),
            ];
            row.extend(dims_v.iter().map(|x| x.to_string()));
            rows.push(row);
        }
    }
    let body = json!({
        "min_n": min_n,
        "max_n": max_n,
        "max_d": max_d,
        "partitions": entries,
    });
    let dim_headers: Vec<String> = (1..=max_d).map(|d| format!("dimV(d={d})")).collect();
    let mut header = vec!["partition", "bound", "box", "entropy", "dimS"];
    header.extend(dim_headers.iter().map(String::as_str));
    Ok(Report::new("sweep", body, table(&header, &rows)))
}

pub fn cmd_maximize(args: &MaximizeArgs) -> Result<Report, Error> {
    let nu = &args.partition;
    let n = nu.n_boxes();
    if n < 2 {
        return Err(Error::TooFewBoxes);
    }
    let d = args.d.unwrap_or(nu.n_rows());
    if d < nu.n_rows() {
        return Err(Error::EmptySector { d, height: nu.n_rows() });
    }
    let cut = args.cut.unwrap_or(n - 1);
    if cut == 0 || cut >= n {
        return Err(Error::IndexOutOfRange {
            what: "cut",
            index: cut,
            max: n - 1,
        });
    }
    let best = nu.entanglement_bound()?;
    let bound_applies = cut == 1 || cut == n - 1;
    let basis = sector_basis(nu, d)?;
    let mut warm_starts = Vec::new();
    if !args.cold && bound_applies && d >= nu.n_rows() {
        let frame = OrthonormalFrame::computational(d, nu.n_rows())?;
        let seed_state = optimizer_state(nu, best.cell, &frame)?;
        warm_starts.push(if cut == n - 1 {
            seed_state
        } else {
            swap_factors(&seed_state, 1, n)?
        });
    }
    let config = MaximizeConfig {
        restarts: args.restarts as usize,
        max_iterations: args.max_iterations,
        tolerance: args.tolerance,
        seed: args.seed,
        warm_starts,
        record_trace: args.trace,
    };
    let report = max_lambda1_over_subspace(&basis, cut, &config)?.with_bound(best.value.clone());
    let residual = verify_fixed_point(&report.maximizer, &basis, cut)?;
    let bound = rational_to_f64(&best.value);
    let gap = bound - report.best_lambda1_sq;
    let sound = !bound_applies || report.best_lambda1_sq <= bound + SOUNDNESS_SLACK;
    let attained = bound_applies && gap.abs() <= ATTAINMENT_SLACK;
    let mut body = json!({
        "partition": nu.to_string(),
        "d": d,
        "n": n,
        "cut": cut,
        "seed": args.seed,
        "restarts": args.restarts,
        "max_iterations": args.max_iterations,
        "tolerance": args.tolerance,
        "warm_start": !config.warm_starts.is_empty(),
        "sector_dimension": basis.len(),
        "best_lambda1_sq": report.best_lambda1_sq,
        "bound": rational(&best.value),
        "bound_box": cell_json(best.cell),
        "bound_applies": bound_applies,
        "gap": gap,
        "sound": sound,
        "attained": attained,
        "fixed_point_residual": residual,
        "max_objective_decrease": report.max_decrease(),
    });
    body["optimization"] = report.to_json(false);
    let mut text = format!(
        "partition {nu}, d = {d}, cut after factor {cut} of {n}, seed {}\n",
        args.seed
    );
    let _ = writeln!(text, "sector dimension      {}", basis.len());
    let _ = writeln!(text, "numeric max lambda1^2 {:.12}", report.best_lambda1_sq);
    let _ = writeln!(
        text,
        "exact bound           {} = {bound:.12} at {}",
        best.value, best.cell
    );
    if bound_applies {
        let _ = writeln!(text, "gap                   {gap:.3e}");
        let _ = writeln!(text, "attained              {}", if attained { "yes" } else { "no" });
    } else {
        let _ = writeln!(text, "bound applies only to single-factor cuts");
    }
    let _ = writeln!(text, "fixed-point residual  {residual:.3e}");
    let mut out = Report::new("maximize", body, text);
    if !sound {
        out.status = Status::VerificationFailure;
    }
    Ok(out)
}

pub fn cmd_matrices(args: &MatricesArgs) -> Result<Report, Error> {
    let nu = &args.partition;
    let basis = tableau_basis(nu);
    let mut generators = Vec::new();
    let mut text = format!("partition {nu}, basis:\n");
    for (i, t) in basis.tableaux().iter().enumerate() {
        let _ = writeln!(text, "  {i}: {t}");
    }
    for k in 1..nu.n_boxes() {
        let m = adjacent_transposition_matrix(nu, k)?;
        let _ = writeln!(text, "({k} {}):", k + 1);
        for row in m.rows() {
            let cells: Vec<String> = row.iter().map(|x| format!("{x:>10.6}")).collect();
            let _ = writeln!(text, "  {}", cells.join(" "));
        }
        generators.push(json!({ "k": k, "matrix": m.rows() }));
    }
    let body = json!({
        "partition": nu.to_string(),
        "basis": basis.tableaux().iter().map(|t| t.to_string()).collect::<Vec<_>>(),
        "generators": generators,
    });
    Ok(Report::new("matrices", body, text))
}

pub fn cmd_state(args: &StateArgs) -> Result<Report, Error> {
    let nu = &args.partition;
    let n = nu.n_boxes();
    if n < 2 {
        return Err(Error::TooFewBoxes);
    }
    let cell = match args.cell {
        Some(c) => c,
        None => nu.entanglement_bound()?.cell,
    };
    let bound = nu.box_bound(cell)?;
    let d = args.d.unwrap_or(nu.n_rows());
    let frame = OrthonormalFrame::computational(d, nu.n_rows())?;
    let psi = optimizer_state(nu, cell, &frame)?;
    let t = optimizer_tableau(nu, cell)?;
    let lambda = schmidt_decompose(&psi, n - 1)?.lambda1_sq();
    let body = json!({
        "partition": nu.to_string(),
        "box": cell_json(cell),
        "d": d,
        "tableau": t.to_string(),
        "bound": rational(&bound),
        "lambda1_sq": lambda,
        "state": psi.to_json(),
    });
    let mut out = Report::new("state", body, String::new());
    out.text = out.render(crate::args::Format::Json);
    Ok(out)
}
