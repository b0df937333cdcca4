//! Dense-grid maximization over a feasibility-filtered box, with local zoom
//! refinement.
//!
//! The proof oracles certify closed-form constrained maxima without reusing
//! the extreme-point reasoning behind them, so they must stay derivative-free
//! and assumption-free. A raw grid of feasible points under-resolves vertices
//! that sit between grid lines; the zoom pass fixes that by re-gridding small
//! boxes around every near-maximal coarse point. Lipschitz-bounded objectives
//! keep the candidate-selection margin honest: any true maximizer lies within
//! `slope_bound · step · D` in value of some feasible coarse point near it.

use crate::scalar::Real;

/// Points per axis in each refinement box (spanning ±1 coarse step).
const REFINE_POINTS: usize = 21;
/// Zoom rounds; each shrinks the effective step by `(REFINE_POINTS - 1) / 2`.
const REFINE_ROUNDS: usize = 2;
/// Refinement boxes kept per round.
const CANDIDATE_CAP: usize = 64;
/// Working capacity of the candidate buffer before pruning.
const CANDIDATE_BUF: usize = 8192;

/// Maximizes `value` over the feasible points of a regular grid on
/// `[lo, hi]^D`, then zooms around the near-maximal points. Returns the best
/// value and its location, or `None` when no grid point is feasible.
pub(crate) fn grid_max<T: Real, const D: usize>(
    lo: [T; D],
    hi: [T; D],
    points_per_axis: usize,
    slope_bound: T,
    feasible: &dyn Fn(&[T; D]) -> bool,
    value: &dyn Fn(&[T; D]) -> T,
) -> Option<(T, [T; D])> {
    assert!(points_per_axis >= 2);
    let mut step = [T::zero(); D];
    for d in 0..D {
        step[d] = (hi[d] - lo[d]) / T::lit((points_per_axis - 1) as f64);
    }
    let max_step = step.iter().fold(T::zero(), |m, &s| m.max(s));
    let margin = slope_bound * max_step * T::lit(2.0 * D as f64);

    let mut best: Option<(T, [T; D])> = None;
    let mut candidates: Vec<(T, [T; D])> = Vec::new();

    let mut idx = [0usize; D];
    'outer: loop {
        let mut p = [T::zero(); D];
        for d in 0..D {
            p[d] = if idx[d] == points_per_axis - 1 {
                hi[d]
            } else {
                lo[d] + T::lit(idx[d] as f64) * step[d]
            };
        }
        if feasible(&p) {
            let v = value(&p);
            if best.is_none_or(|(b, _)| v > b) {
                best = Some((v, p));
            }
            let threshold = best.expect("just set").0 - margin;
            if v >= threshold {
                candidates.push((v, p));
                if candidates.len() > CANDIDATE_BUF {
                    prune(&mut candidates, threshold);
                }
            }
        }
        // Odometer increment over the D-dimensional index.
        for slot in idx.iter_mut() {
            *slot += 1;
            if *slot < points_per_axis {
                continue 'outer;
            }
            *slot = 0;
        }
        break;
    }

    let (mut best_v, mut best_p) = best?;
    prune(&mut candidates, best_v - margin);
    candidates.sort_by(|a, b| b.0.partial_cmp(&a.0).unwrap_or(core::cmp::Ordering::Equal));
    candidates.truncate(CANDIDATE_CAP);

    let mut radius = max_step;
    for _ in 0..REFINE_ROUNDS {
        let mut next: Vec<(T, [T; D])> = Vec::new();
        for &(_, center) in &candidates {
            refine_box(
                center,
                radius,
                lo,
                hi,
                feasible,
                value,
                &mut best_v,
                &mut best_p,
                &mut next,
            );
        }
        if next.is_empty() {
            break;
        }
        next.sort_by(|a, b| b.0.partial_cmp(&a.0).unwrap_or(core::cmp::Ordering::Equal));
        next.truncate(CANDIDATE_CAP);
        candidates = next;
        radius = radius * T::two() / T::lit((REFINE_POINTS - 1) as f64);
    }

    Some((best_v, best_p))
}

fn prune<T: Real, const D: usize>(candidates: &mut Vec<(T, [T; D])>, threshold: T) {
    candidates.retain(|(v, _)| *v >= threshold);
    if candidates.len() > CANDIDATE_BUF / 2 {
        candidates.sort_by(|a, b| b.0.partial_cmp(&a.0).unwrap_or(core::cmp::Ordering::Equal));
        candidates.truncate(CANDIDATE_BUF / 2);
    }
}

#[allow(clippy::too_many_arguments)]
fn refine_box<T: Real, const D: usize>(
    center: [T; D],
    radius: T,
    lo: [T; D],
    hi: [T; D],
    feasible: &dyn Fn(&[T; D]) -> bool,
    value: &dyn Fn(&[T; D]) -> T,
    best_v: &mut T,
    best_p: &mut [T; D],
    sink: &mut Vec<(T, [T; D])>,
) {
    let mut box_lo = [T::zero(); D];
    let mut sub = [T::zero(); D];
    for d in 0..D {
        let a = (center[d] - radius).max(lo[d]);
        let b = (center[d] + radius).min(hi[d]);
        box_lo[d] = a;
        sub[d] = (b - a) / T::lit((REFINE_POINTS - 1) as f64);
    }
    let mut idx = [0usize; D];
    'outer: loop {
        let mut p = [T::zero(); D];
        for d in 0..D {
            p[d] = box_lo[d] + T::lit(idx[d] as f64) * sub[d];
        }
        if feasible(&p) {
            let v = value(&p);
            if v > *best_v {
                *best_v = v;
                *best_p = p;
            }
            sink.push((v, p));
            if sink.len() > CANDIDATE_BUF {
                sink.sort_by(|a, b| b.0.partial_cmp(&a.0).unwrap_or(core::cmp::Ordering::Equal));
                sink.truncate(CANDIDATE_CAP);
            }
        }
        for slot in idx.iter_mut() {
            *slot += 1;
            if *slot < REFINE_POINTS {
                continue 'outer;
            }
            *slot = 0;
        }
        break;
    }
}
