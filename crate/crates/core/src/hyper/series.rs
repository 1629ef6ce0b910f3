use serde::Serialize;

use crate::error::{Error, Result};
use crate::oracle::{ExtendedReal, Neumaier};
use crate::specfun::{check_pole, digamma, pole_distance, POLE_GUARD};

/// Outcome of a truncated or terminating series evaluation.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct SeriesResult {
    pub value: f64,
    pub abs_error_estimate: f64,
    pub terms_used: usize,
    pub converged: bool,
}

impl SeriesResult {
    pub fn exact(value: f64, terms_used: usize) -> Self {
        SeriesResult { value, abs_error_estimate: 0.0, terms_used, converged: true }
    }

    /// The value, or [`Error::NonConvergence`] when the cap was hit.
    pub fn require_converged(self) -> Result<f64> {
        if self.converged {
            Ok(self.value)
        } else {
            Err(Error::NonConvergence { terms: self.terms_used })
        }
    }
}

/// Direction in which the digamma argument moves with k.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Step {
    /// ψ(s + k)
    Up,
    /// ψ(s - k)
    Down,
}

/// Per-term multiplier attached to a hypergeometric term.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Weight {
    One,
    Digamma {
        shift: f64,
        step: Step,
    },
    /// ψ(s ± k) - ψ(s)
    DigammaDiff {
        shift: f64,
        step: Step,
    },
}

impl Weight {
    fn step(&self) -> Option<(f64, Step)> {
        match *self {
            Weight::One => None,
            Weight::Digamma { shift, step } | Weight::DigammaDiff { shift, step } => Some((shift, step)),
        }
    }
}

/// Σ_k prefactor · Π(a_i)_k / Π(b_j)_k · z^k/k! · (offset + k) · w(k)
///
/// Every left-hand side in the catalog is one of these. `upper` caps the
/// summation index independently of any terminating numerator parameter.
#[derive(Clone, Debug, PartialEq)]
pub struct TermSeries {
    pub prefactor: ExtendedReal,
    pub numerator: Vec<f64>,
    pub denominator: Vec<f64>,
    pub argument: f64,
    pub linear: Option<f64>,
    pub weight: Weight,
    pub upper: Option<u64>,
}

impl TermSeries {
    pub fn new(numerator: Vec<f64>, denominator: Vec<f64>, argument: f64) -> Self {
        TermSeries {
            prefactor: ExtendedReal::ONE,
            numerator,
            denominator,
            argument,
            linear: None,
            weight: Weight::One,
            upper: None,
        }
    }

    pub fn prefactor(mut self, p: impl Into<ExtendedReal>) -> Self {
        self.prefactor = p.into();
        self
    }

    pub fn linear(mut self, offset: f64) -> Self {
        self.linear = Some(offset);
        self
    }

    pub fn weight(mut self, w: Weight) -> Self {
        self.weight = w;
        self
    }

    pub fn digamma(self, shift: f64) -> Self {
        self.weight(Weight::Digamma { shift, step: Step::Up })
    }

    pub fn upper(mut self, n: u64) -> Self {
        self.upper = Some(n);
        self
    }

    /// Index of the last possibly non-zero term, if the sum is finite.
    pub fn last_index(&self) -> Option<u64> {
        let from_params = self.numerator.iter().filter(|a| **a <= 0.0 && a.fract() == 0.0).map(|a| (-a) as u64).min();
        let from_argument = (self.argument == 0.0).then_some(0);
        [from_params, self.upper, from_argument].into_iter().flatten().min()
    }

    /// τ such that terms decay like k^{-τ-1} (up to logarithms) when |z| = 1
    /// and p = q + 1.
    pub fn excess(&self) -> f64 {
        let lin = if self.linear.is_some() { 1.0 } else { 0.0 };
        self.denominator.iter().sum::<f64>() - self.numerator.iter().sum::<f64>() - lin
    }

    /// Rejects series that cannot be summed by truncation.
    pub fn check_summable(&self, margin: f64) -> Result<()> {
        if let Some(n) = self.last_index() {
            return self.check_denominators(n);
        }
        self.check_denominators(u64::MAX)?;
        let p = self.numerator.len();
        let q = self.denominator.len();
        let z = self.argument.abs();
        if p <= q || (p == q + 1 && z < 1.0) {
            return Ok(());
        }
        if p == q + 1 && z == 1.0 {
            let tau = self.excess();
            if tau > margin {
                return Ok(());
            }
            return Err(Error::Domain(format!("series at |z| = 1 needs parameter excess > {margin}, got {tau}")));
        }
        Err(Error::Domain(format!("{p}F{q} series diverges at |z| = {z}")))
    }

    /// A denominator (b)_k must not vanish for any k that is reached.
    fn check_denominators(&self, last: u64) -> Result<()> {
        for &b in &self.denominator {
            if b <= 0.0 && pole_distance(b) < POLE_GUARD {
                let j = (-b).round();
                // (b)_k has the factor b + j for k > j
                if (j as u64) < last {
                    return Err(Error::Pole(b));
                }
            }
        }
        Ok(())
    }
}

/// Incremental ψ(s ± k), accumulated with compensation so that 10⁴ steps
/// drift by far less than 1e-12.
#[derive(Clone, Debug)]
pub struct DigammaWalk {
    shift: f64,
    step: Step,
    k: u64,
    acc: Neumaier,
}

impl DigammaWalk {
    fn new(shift: f64, step: Step, base: f64) -> Self {
        DigammaWalk { shift, step, k: 0, acc: Neumaier::with_value(base) }
    }

    /// Starts at ψ(shift).
    pub fn start(shift: f64, step: Step) -> Result<Self> {
        Ok(Self::new(shift, step, digamma(shift)?))
    }

    /// Current argument shift ± k.
    pub fn argument(&self) -> f64 {
        match self.step {
            Step::Up => self.shift + self.k as f64,
            Step::Down => self.shift - self.k as f64,
        }
    }

    pub fn value(&self) -> f64 {
        self.acc.value()
    }

    pub fn advance(&mut self) -> Result<()> {
        let x = self.argument();
        match self.step {
            Step::Up => {
                check_pole(x + 1.0)?;
                self.acc.add(1.0 / x);
            }
            Step::Down => {
                check_pole(x - 1.0)?;
                self.acc.add(-1.0 / (x - 1.0));
            }
        }
        self.k += 1;
        Ok(())
    }
}

fn weight_walk(w: &Weight) -> Result<Option<DigammaWalk>> {
    Ok(match *w {
        Weight::One => None,
        Weight::Digamma { shift, step } => Some(DigammaWalk::new(shift, step, digamma(shift)?)),
        Weight::DigammaDiff { shift, step } => {
            check_pole(shift)?;
            Some(DigammaWalk::new(shift, step, 0.0))
        }
    })
}

/// Plain binary64 summation with the three-small-terms stopping rule.
pub fn sum_series(series: &TermSeries, rel_tol: f64, max_terms: usize) -> Result<SeriesResult> {
    series.check_summable(super::UNIT_ARGUMENT_MARGIN)?;
    let last = series.last_index();
    let prefactor = series.prefactor.to_f64();
    let mut walk = weight_walk(&series.weight)?;
    if let Some((shift, _)) = series.weight.step() {
        check_pole(shift)?;
    }

    let term_at = |t: f64, k: u64, walk: &Option<DigammaWalk>| -> f64 {
        let lin = series.linear.map_or(1.0, |o| o + k as f64);
        let w = walk.as_ref().map_or(1.0, DigammaWalk::value);
        prefactor * t * lin * w
    };

    let mut acc = Neumaier::new();
    let mut abs_sum = 0.0;
    let mut t = 1.0;
    let mut small_run = 0;
    let mut last_term = 0.0;
    for k in 0..max_terms as u64 {
        let term = term_at(t, k, &walk);
        acc.add(term);
        abs_sum += term.abs();
        last_term = term;
        let used = k as usize + 1;

        if last == Some(k) {
            return Ok(SeriesResult {
                value: acc.value(),
                abs_error_estimate: 2.0 * f64::EPSILON * abs_sum,
                terms_used: used,
                converged: true,
            });
        }

        let next_t = next_coefficient(series, t, k)?;
        if next_t == 0.0 {
            return Ok(SeriesResult {
                value: acc.value(),
                abs_error_estimate: 2.0 * f64::EPSILON * abs_sum,
                terms_used: used,
                converged: true,
            });
        }
        if let Some(w) = walk.as_mut() {
            w.advance()?;
        }
        t = next_t;

        if term.abs() <= rel_tol * acc.value().abs() {
            small_run += 1;
        } else {
            small_run = 0;
        }
        if small_run >= 3 {
            let omitted = term_at(t, k + 1, &walk);
            // Cancellation shows up in Σ|t|, not in the tail.
            return Ok(SeriesResult {
                value: acc.value(),
                abs_error_estimate: tail_estimate(term, omitted) + 2.0 * f64::EPSILON * abs_sum,
                terms_used: used,
                converged: true,
            });
        }
    }
    let omitted = term_at(t, max_terms as u64, &walk);
    Ok(SeriesResult {
        value: acc.value(),
        abs_error_estimate: tail_estimate(last_term, omitted),
        terms_used: max_terms,
        converged: false,
    })
}

/// |first omitted| / (1 - r) with r the last term ratio, never below the last
/// included term.
fn tail_estimate(last: f64, omitted: f64) -> f64 {
    let r = if last != 0.0 { (omitted / last).abs() } else { 1.0 };
    let geometric = if r < 1.0 { omitted.abs() / (1.0 - r) } else { omitted.abs() };
    geometric.max(last.abs())
}

/// t_{k+1} from t_k for the hypergeometric part of the term.
fn next_coefficient(series: &TermSeries, t: f64, k: u64) -> Result<f64> {
    let kf = k as f64;
    let mut num = 1.0;
    for &a in &series.numerator {
        num *= a + kf;
    }
    if num == 0.0 {
        return Ok(0.0);
    }
    let mut den = 1.0;
    for &b in &series.denominator {
        let f = b + kf;
        if f.abs() < POLE_GUARD {
            return Err(Error::Pole(b));
        }
        den *= f;
    }
    Ok(t * num / den * series.argument / (kf + 1.0))
}

/// Σ_k f(k) for an arbitrary term function, with the same stopping rule as
/// [`sum_series`].
pub fn sum_terms<F>(mut f: F, rel_tol: f64, max_terms: usize) -> Result<SeriesResult>
where
    F: FnMut(u64) -> Result<f64>,
{
    let mut acc = Neumaier::new();
    let mut small_run = 0;
    let mut last = 0.0;
    for k in 0..max_terms as u64 {
        let term = f(k)?;
        acc.add(term);
        last = term;
        if term.abs() <= rel_tol * acc.value().abs() {
            small_run += 1;
        } else {
            small_run = 0;
        }
        if small_run >= 3 {
            let omitted = f(k + 1)?;
            return Ok(SeriesResult {
                value: acc.value(),
                abs_error_estimate: tail_estimate(term, omitted),
                terms_used: k as usize + 1,
                converged: true,
            });
        }
    }
    Ok(SeriesResult { value: acc.value(), abs_error_estimate: last.abs(), terms_used: max_terms, converged: false })
}
