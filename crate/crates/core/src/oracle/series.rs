use super::dd::ExtendedReal;
use super::digamma::ext_digamma;
use crate::error::{Error, Result};
use crate::hyper::{Step, TermSeries, Weight, UNIT_ARGUMENT_MARGIN};
use crate::specfun::{check_pole, POLE_GUARD};

/// Direct summation stops once three consecutive terms fall below this
/// fraction of the partial sum.
const EXT_REL_TOL: f64 = 1e-33;

/// Settings for the unit-argument tail extrapolation.
#[derive(Clone, Copy, Debug)]
struct TailFit {
    first: f64,
    ratio: f64,
    order: usize,
}

const PRIMARY_FIT: TailFit = TailFit { first: 500.0, ratio: 1.2, order: 5 };
const CHECK_FIT: TailFit = TailFit { first: 200.0, ratio: 1.25, order: 4 };

/// Result of an extended-precision series evaluation.
#[derive(Clone, Copy, Debug)]
pub struct ExtendedSeries {
    pub value: ExtendedReal,
    pub abs_error_estimate: f64,
    pub terms_used: usize,
    pub converged: bool,
    /// The value came from tail extrapolation rather than plain truncation.
    pub extrapolated: bool,
}

/// Term generator in double-double arithmetic.
struct Terms<'a> {
    series: &'a TermSeries,
    k: u64,
    t: ExtendedReal,
    psi: ExtendedReal,
    done: bool,
}

impl<'a> Terms<'a> {
    fn new(series: &'a TermSeries) -> Result<Self> {
        let psi = match series.weight {
            Weight::One => ExtendedReal::ONE,
            Weight::Digamma { shift, .. } => ext_digamma(shift)?,
            Weight::DigammaDiff { shift, .. } => {
                check_pole(shift)?;
                ExtendedReal::ZERO
            }
        };
        Ok(Terms { series, k: 0, t: series.prefactor, psi, done: false })
    }

    /// Current term, then advance. `None` once the series has terminated.
    fn next_term(&mut self) -> Result<Option<ExtendedReal>> {
        if self.done {
            return Ok(None);
        }
        let s = self.series;
        let k = self.k;
        let kf = k as f64;
        let mut term = self.t;
        if let Some(offset) = s.linear {
            term *= ExtendedReal::from_f64(offset).add_f64(kf);
        }
        if !matches!(s.weight, Weight::One) {
            term *= self.psi;
        }

        if s.last_index() == Some(k) {
            self.done = true;
            return Ok(Some(term));
        }
        let mut num = ExtendedReal::ONE;
        for &a in &s.numerator {
            num *= ExtendedReal::from_f64(a).add_f64(kf);
        }
        if num.is_zero() {
            self.done = true;
            return Ok(Some(term));
        }
        let mut den = ExtendedReal::from_f64(kf + 1.0);
        for &b in &s.denominator {
            let f = ExtendedReal::from_f64(b).add_f64(kf);
            if f.to_f64().abs() < POLE_GUARD {
                return Err(Error::Pole(b));
            }
            den *= f;
        }
        self.t = self.t * num.mul_f64(s.argument) / den;

        match s.weight {
            Weight::One => {}
            Weight::Digamma { shift, step } | Weight::DigammaDiff { shift, step } => match step {
                Step::Up => {
                    let x = ExtendedReal::from_f64(shift).add_f64(kf);
                    check_pole(x.to_f64() + 1.0)?;
                    self.psi += x.recip();
                }
                Step::Down => {
                    let x = ExtendedReal::from_f64(shift).add_f64(-kf - 1.0);
                    check_pole(x.to_f64())?;
                    self.psi -= x.recip();
                }
            },
        }
        self.k += 1;
        Ok(Some(term))
    }
}

/// Extended-precision evaluation of a [`TermSeries`].
///
/// Finite and |z| < 1 series are summed until the terms are negligible at
/// double-double level. Series at |z| = 1 converge algebraically; their
/// limit is extrapolated from partial sums by fitting the asymptotic tail
/// Σ_j (α_j ln N + β_j) N^{-τ-j}.
pub fn sum_extended(series: &TermSeries, max_terms: usize) -> Result<ExtendedSeries> {
    series.check_summable(UNIT_ARGUMENT_MARGIN)?;
    if series.last_index().is_some() || series.argument.abs() < 1.0 {
        return sum_direct(series, max_terms);
    }
    let tau = series.excess();
    let logs = !matches!(series.weight, Weight::One);
    let scale = series
        .numerator
        .iter()
        .chain(&series.denominator)
        .chain(series.linear.as_ref())
        .fold(0.0f64, |m, p| m.max(p.abs()));
    let primary = extrapolate(series, tau, logs, PRIMARY_FIT, scale)?;
    let check = extrapolate(series, tau, logs, CHECK_FIT, scale)?;
    let err = (primary.0 - check.0).to_f64().abs();
    let value = primary.0;
    Ok(ExtendedSeries {
        value,
        abs_error_estimate: err,
        terms_used: primary.1,
        converged: err <= 1e-14 * value.to_f64().abs() + 1e-300,
        extrapolated: true,
    })
}

fn sum_direct(series: &TermSeries, max_terms: usize) -> Result<ExtendedSeries> {
    let mut terms = Terms::new(series)?;
    let mut sum = ExtendedReal::ZERO;
    let mut small_run = 0;
    let mut used = 0;
    let mut last = 0.0f64;
    while used < max_terms {
        let Some(term) = terms.next_term()? else {
            return Ok(finished(sum, used, 0.0));
        };
        sum += term;
        used += 1;
        last = term.to_f64();
        if terms.done {
            return Ok(finished(sum, used, 0.0));
        }
        if last.abs() <= EXT_REL_TOL * sum.to_f64().abs() {
            small_run += 1;
        } else {
            small_run = 0;
        }
        if small_run >= 3 {
            return Ok(finished(sum, used, last.abs()));
        }
    }
    Ok(ExtendedSeries {
        value: sum,
        abs_error_estimate: last.abs(),
        terms_used: used,
        converged: false,
        extrapolated: false,
    })
}

fn finished(value: ExtendedReal, terms_used: usize, err: f64) -> ExtendedSeries {
    ExtendedSeries { value, abs_error_estimate: err, terms_used, converged: true, extrapolated: false }
}

/// Returns the extrapolated limit and the number of terms summed.
fn extrapolate(series: &TermSeries, tau: f64, logs: bool, fit: TailFit, scale: f64) -> Result<(ExtendedReal, usize)> {
    let n0 = fit.first.max(50.0 * scale).round();
    let per_power = if logs { 2 } else { 1 };
    let unknowns = 1 + per_power * (fit.order + 1);
    let checkpoints: Vec<usize> = (0..unknowns).map(|i| (n0 * fit.ratio.powi(i as i32)).round() as usize).collect();

    let mut sums = Vec::with_capacity(unknowns);
    let mut terms = Terms::new(series)?;
    let mut acc = ExtendedReal::ZERO;
    let mut used = 0usize;
    for &n in &checkpoints {
        while used < n {
            match terms.next_term()? {
                Some(t) => acc += t,
                None => break,
            }
            used += 1;
        }
        sums.push(acc);
    }

    let n0 = ExtendedReal::from_f64(n0);
    let mut rows = Vec::with_capacity(unknowns);
    for (&n, &s) in checkpoints.iter().zip(&sums) {
        let log_u = (ExtendedReal::from_f64(n as f64) / n0).ln();
        let mut row = Vec::with_capacity(unknowns + 1);
        row.push(ExtendedReal::ONE);
        for j in 0..=fit.order {
            let power = (-(log_u.mul_f64(tau + j as f64))).exp();
            if logs {
                row.push(-(power * log_u));
            }
            row.push(-power);
        }
        row.push(s);
        rows.push(row);
    }
    let solution = solve(rows)?;
    Ok((solution[0], used))
}

/// Gaussian elimination with partial pivoting on an augmented matrix.
fn solve(mut m: Vec<Vec<ExtendedReal>>) -> Result<Vec<ExtendedReal>> {
    let n = m.len();
    for col in 0..n {
        let pivot = (col..n)
            .max_by(|&i, &j| m[i][col].abs().partial_cmp(&m[j][col].abs()).unwrap_or(std::cmp::Ordering::Equal))
            .expect("non-empty");
        if m[pivot][col].is_zero() {
            return Err(Error::Domain("singular tail-fit system".into()));
        }
        m.swap(col, pivot);
        for row in col + 1..n {
            let factor = m[row][col] / m[col][col];
            if factor.is_zero() {
                continue;
            }
            let (upper, lower) = m.split_at_mut(row);
            for (target, &source) in lower[0][col..].iter_mut().zip(&upper[col][col..]) {
                *target -= factor * source;
            }
        }
    }
    let mut x = vec![ExtendedReal::ZERO; n];
    for row in (0..n).rev() {
        let mut acc = m[row][n];
        for c in row + 1..n {
            acc -= m[row][c] * x[c];
        }
        x[row] = acc / m[row][row];
    }
    Ok(x)
}
