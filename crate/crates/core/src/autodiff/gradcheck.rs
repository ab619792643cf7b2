use rand::seq::index::sample;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::{Graph, Tensor, Var};
use crate::Result;

/// Outcome of a finite-difference comparison.
#[derive(Debug, Clone, PartialEq)]
pub struct GradCheck {
    pub max_rel_error: f64,
    /// Number of coordinates compared.
    pub checked: usize,
    /// `(param index, flat coordinate)` of the largest error.
    pub worst: Option<(usize, usize)>,
    /// Analytic and numeric derivative at `worst`.
    pub worst_values: (f64, f64),
    pub tolerance: f64,
}

impl GradCheck {
    pub fn passed(&self) -> bool {
        self.max_rel_error < self.tolerance
    }
}

/// `|a − n| / max(|a|, |n|, 1e-8)`.
pub fn relative_error(analytic: f64, numeric: f64) -> f64 {
    (analytic - numeric).abs() / analytic.abs().max(numeric.abs()).max(1e-8)
}

/// Compares reverse-mode gradients of `f` against central differences.
///
/// `f` builds a scalar loss from parameter leaves in a fresh graph. When
/// `max_coords` is `Some(n)`, `n` coordinates are sampled uniformly (without
/// replacement) across all parameters using `seed`; otherwise every
/// coordinate is checked.
pub fn grad_check<F>(
    f: F,
    params: &[Tensor<f64>],
    step: f64,
    tolerance: f64,
    max_coords: Option<usize>,
    seed: u64,
) -> Result<GradCheck>
where
    F: Fn(&mut Graph<f64>, &[Var]) -> Result<Var>,
{
    let eval = |ps: &[Tensor<f64>]| -> Result<f64> {
        let mut g = Graph::new();
        let vars: Vec<Var> = ps.iter().map(|p| g.param(p.clone())).collect();
        let loss = f(&mut g, &vars)?;
        Ok(g.value(loss).data()[0])
    };

    let mut g = Graph::new();
    let vars: Vec<Var> = params.iter().map(|p| g.param(p.clone())).collect();
    let loss = f(&mut g, &vars)?;
    g.backward(loss)?;
    let analytic: Vec<Vec<f64>> = vars
        .iter()
        .zip(params)
        .map(|(&v, p)| g.grad(v).map(<[f64]>::to_vec).unwrap_or_else(|| vec![0.0; p.len()]))
        .collect();

    let total: usize = params.iter().map(Tensor::len).sum();
    let coords: Vec<usize> = match max_coords {
        Some(n) if n < total => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut picked = sample(&mut rng, total, n).into_vec();
            picked.sort_unstable();
            picked
        }
        _ => (0..total).collect(),
    };

    let mut work = params.to_vec();
    let mut report = GradCheck {
        max_rel_error: 0.0,
        checked: 0,
        worst: None,
        worst_values: (0.0, 0.0),
        tolerance,
    };
    for flat in coords {
        let (mut p, mut c) = (0, flat);
        while c >= work[p].len() {
            c -= work[p].len();
            p += 1;
        }
        let orig = work[p].data()[c];
        work[p].data_mut()[c] = orig + step;
        let up = eval(&work)?;
        work[p].data_mut()[c] = orig - step;
        let down = eval(&work)?;
        work[p].data_mut()[c] = orig;
        let numeric = (up - down) / (2.0 * step);
        let err = relative_error(analytic[p][c], numeric);
        report.checked += 1;
        if err > report.max_rel_error || report.worst.is_none() {
            report.max_rel_error = report.max_rel_error.max(err);
            report.worst = Some((p, c));
            report.worst_values = (analytic[p][c], numeric);
        }
    }
    Ok(report)
}
