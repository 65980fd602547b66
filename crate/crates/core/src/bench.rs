//! Multiplication counts of the interpolation step over a grid of `(n, k, m)`.

use std::time::Instant;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::channel;
use crate::error::Result;
use crate::gf::FieldCtx;
use crate::interp;
use crate::rs::ReedSolomon;

pub const CSV_HEADER: &str = "n,k,m,l,mult_count,wall_time_ns";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BenchRow {
    pub n: usize,
    pub k: usize,
    pub m: usize,
    pub l: usize,
    pub mult_count: u64,
    pub wall_time_ns: u128,
}

impl BenchRow {
    pub fn to_csv(&self) -> String {
        format!(
            "{},{},{},{},{},{}",
            self.n, self.k, self.m, self.l, self.mult_count, self.wall_time_ns
        )
    }
}

/// Interpolates one uniformly random received word and counts the field
/// multiplications spent. The word depends only on `seed` and `(n, k, m)`.
pub fn run_point(field: &FieldCtx, n: usize, k: usize, m: usize, seed: u64) -> Result<BenchRow> {
    let field = field.clone();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(((n as u64) << 40) | ((k as u64) << 20) | m as u64);
    let code = ReedSolomon::new(field, n, k, None)?;
    let word = channel::random_word(n, &mut rng, code.field());
    code.field().reset_counters();
    let start = Instant::now();
    let (_, params) = interp::interpolate_q(&code, &word, m, None)?;
    let wall_time_ns = start.elapsed().as_nanos();
    Ok(BenchRow {
        n,
        k,
        m,
        l: params.l,
        mult_count: code.field().mult_count(),
        wall_time_ns,
    })
}

/// Every combination of `ns` and `ms`, with `k = n / 2`, in row-major order.
pub fn sweep(field: &FieldCtx, ns: &[usize], ms: &[usize], seed: u64) -> Result<Vec<BenchRow>> {
    let mut rows = Vec::with_capacity(ns.len() * ms.len());
    for &n in ns {
        for &m in ms {
            rows.push(run_point(field, n, n / 2, m, seed)?);
        }
    }
    Ok(rows)
}

/// Least-squares slope of `ln y` against `ln x`.
pub fn log_log_slope(points: &[(f64, f64)]) -> f64 {
    let logs: Vec<(f64, f64)> = points.iter().map(|&(x, y)| (x.ln(), y.ln())).collect();
    let len = logs.len() as f64;
    let mx = logs.iter().map(|p| p.0).sum::<f64>() / len;
    let my = logs.iter().map(|p| p.1).sum::<f64>() / len;
    let sxy: f64 = logs.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    let sxx: f64 = logs.iter().map(|p| (p.0 - mx).powi(2)).sum();
    sxy / sxx
}
