//! Oracle-grade numeric polyzetas by truncated nested summation.
//!
//! H_w(M) is evaluated by the triangular recursion in compensated f64.
//! Since H_w(N) expands along the asymptotic scale log^p(N)·N^{-q}, the
//! limit is extracted from checkpoints M/2^j by fitting
//! ζ + Σ_p c_p ln^p(N)/N and the reported error bound combines the
//! stability of the fit under halving the window with the structural
//! N^{-2} residual. The integral-comparison tail bound on the raw partial
//! sum is kept as a backstop: if the fit drifts outside it, the raw sum
//! and its rigorous bound are returned instead. The cutoff grows until the
//! bound meets the requested tolerance or the summand budget (10^7
//! evaluations) is exhausted; the achieved bound is always reported.

use crate::bigc::{BigC, PrecisionContext};
use crate::error::{Error, Result};
use crate::words::{is_convergent, Word};

use super::consts::CharacterValue;

const SUMMAND_CAP: f64 = 1e7;

/// ζ(s1, ..., sr) for a convergent word, by direct summation to an adaptive
/// cutoff plus limit extraction. Intended accuracy is oracle grade
/// (~1e-9), not high precision; the achieved bound is in `error_bound`.
pub fn mzv(w: &Word, ctx: &PrecisionContext) -> Result<CharacterValue> {
    if !is_convergent(w) {
        return Err(Error::Domain(format!(
            "mzv requires a convergent word (first index >= 2), got `{w}`"
        )));
    }
    if w.is_empty() {
        return Ok(CharacterValue { value: BigC::one_at(ctx), error_bound: 0.0 });
    }
    let target = ctx.tolerance().max(1e-9);
    let depth = w.len();
    let max_m = ((SUMMAND_CAP / depth as f64) as usize).max(1 << 13);
    let mut m = 1usize << 12;
    loop {
        let (value, bound) = estimate(w, m);
        if bound <= target || m * 2 > max_m {
            return Ok(CharacterValue { value: BigC::from_f64s(value, 0.0, ctx), error_bound: bound });
        }
        m *= 2;
    }
}

fn estimate(w: &Word, m: usize) -> (f64, f64) {
    // Log degree allowance: trailing y1 blocks push powers of ln N into
    // the asymptotic coefficients; depth is a safe cap.
    let dl = w.len();
    let points = dl + 3;
    let checkpoints: Vec<usize> = (0..points).rev().map(|j| m >> j).collect();
    let hs = h_numeric_checkpoints(w, &checkpoints);
    let h_m = *hs.last().unwrap();

    let fit_a = fit_limit(&checkpoints[1..], &hs[1..], dl);
    let fit_b = fit_limit(&checkpoints[..points - 1], &hs[..points - 1], dl);
    let lnm = (m as f64).ln();
    let rounding = 2e-13 * (1.0 + h_m.abs());
    let bound =
        5.0 * (fit_a - fit_b).abs() + 2.0 * (1.0 + lnm).powi(dl as i32) / (m as f64).powi(2) + rounding;

    // Backstop: the fitted limit must sit within the rigorous tail bound
    // of the raw partial sum.
    let raw_bound = tail_bound(w, m) + rounding;
    if !fit_a.is_finite() || (fit_a - h_m).abs() > raw_bound {
        return (h_m, raw_bound);
    }
    (fit_a, bound.min(raw_bound))
}

/// Least-squares-free exact fit: solve ζ + Σ_{p≤dl} c_p ln^p(N)/N = H(N)
/// on dl+2 sample points by Gaussian elimination with partial pivoting.
fn fit_limit(ns: &[usize], hs: &[f64], dl: usize) -> f64 {
    let k = dl + 2;
    debug_assert_eq!(ns.len(), k);
    let mut a = vec![vec![0.0f64; k + 1]; k];
    for (i, (&n, &h)) in ns.iter().zip(hs.iter()).enumerate() {
        let nf = n as f64;
        let ln = nf.ln();
        a[i][0] = 1.0;
        for p in 0..=dl {
            a[i][1 + p] = ln.powi(p as i32) / nf;
        }
        a[i][k] = h;
    }
    for col in 0..k {
        let pivot = (col..k)
            .max_by(|&r1, &r2| a[r1][col].abs().partial_cmp(&a[r2][col].abs()).unwrap())
            .unwrap();
        a.swap(col, pivot);
        if a[col][col] == 0.0 {
            return f64::NAN;
        }
        for r in 0..k {
            if r == col {
                continue;
            }
            let f = a[r][col] / a[col][col];
            let (pivot_row, row) = if r < col {
                let (lo, hi) = a.split_at_mut(col);
                (&hi[0], &mut lo[r])
            } else {
                let (lo, hi) = a.split_at_mut(r);
                (&lo[col], &mut hi[0])
            };
            for (x, p) in row.iter_mut().zip(pivot_row.iter()).skip(col) {
                *x -= f * p;
            }
        }
    }
    a[0][k] / a[0][0]
}

/// H_w at each checkpoint (ascending), one triangular pass in compensated
/// f64.
pub fn h_numeric_checkpoints(w: &Word, checkpoints: &[usize]) -> Vec<f64> {
    let idx = w.indices();
    let r = idx.len();
    let mut sums = vec![0.0f64; r + 1];
    let mut comps = vec![0.0f64; r + 1];
    sums[r] = 1.0; // empty suffix
    let mut out = Vec::with_capacity(checkpoints.len());
    let mut next = 0usize;
    let last = *checkpoints.last().unwrap_or(&0);
    for n in 0..=last {
        if n > 0 {
            let nf = n as f64;
            // Ascending i reads sums[i+1] before its update at this n,
            // i.e. the value at n-1, which is what the recursion needs.
            for i in 0..r {
                let add = nf.powi(-(idx[i] as i32)) * sums[i + 1];
                let y = add - comps[i];
                let t = sums[i] + y;
                comps[i] = (t - sums[i]) - y;
                sums[i] = t;
            }
        }
        while next < checkpoints.len() && checkpoints[next] == n {
            out.push(sums[0]);
            next += 1;
        }
    }
    out
}

/// H_w(M) in f64.
pub fn h_numeric(w: &Word, m: usize) -> f64 {
    h_numeric_checkpoints(w, &[m])[0]
}

/// Upper bound for Σ_{n>M} n^{-s1}(1 + ln n)^{r-1}, which dominates the
/// tail of the raw partial sum.
fn tail_bound(w: &Word, m: usize) -> f64 {
    let s1 = w.indices()[0] as f64;
    let j = w.len() - 1;
    let x = (m + 1) as f64;
    let first = x.powf(-s1) * (1.0 + x.ln()).powi(j as i32);
    first + log_power_integral(j as i32, s1, x)
}

/// ∫_M^∞ (1 + ln x)^j x^{-s} dx for s > 1, by the reduction
/// I_j = (1+ln M)^j M^{1-s}/(s-1) + j/(s-1) · I_{j-1}.
fn log_power_integral(j: i32, s: f64, m: f64) -> f64 {
    let base = m.powf(1.0 - s) / (s - 1.0);
    let mut acc = base;
    for jj in 1..=j {
        acc = (1.0 + m.ln()).powi(jj) * base + (jj as f64) / (s - 1.0) * acc;
    }
    acc
}
