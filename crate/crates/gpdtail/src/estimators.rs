//! Ordered samples, log-spacings and the elemental tail estimator.
//!
//! With the sample sorted in decreasing order (`X_1` the maximum), any
//! non-adjacent pair `(I, J)`, `J >= I+2`, defines the elemental
//! estimator
//!
//! ```text
//! xi_hat(I,J) = log( tau^(J-1) / t^I )
//!     tau = (X_I - X_{J-1}) / (X_I - X_J)
//!     t   = (X_{I+1} - X_J) / (X_I - X_J)
//! ```
//!
//! equivalently a three-term combination of log-spacings with weights
//! `J-1`, `-(J-1-I)` and `-I` on `log(X_I - X_{J-1})`, `log(X_I - X_J)`
//! and `log(X_{I+1} - X_J)`. Each elemental is unbiased for the GPD
//! tail parameter at every sample size `N >= 3`, and any unit-sum
//! combination of elementals inherits the property.
//!
//! All indices in this module are 1-based, matching the order-statistic
//! convention.

use crate::error::{Error, Result};
use crate::weights::SpacingWeights;

/// A sample sorted in decreasing order: `values()[0]` is the maximum
/// `X_1`. Entries are finite; ties are allowed by the container but
/// rejected by every spacing-based operation.
#[derive(Debug, Clone, PartialEq)]
pub struct OrderedSample {
    values: Vec<f64>,
}

impl OrderedSample {
    /// Wrap already-sorted data (decreasing). Errors if the order is
    /// violated or any entry is not finite.
    pub fn new(values: Vec<f64>) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::InvalidParams("sample must be non-empty".into()));
        }
        if values.iter().any(|v| !v.is_finite()) {
            return Err(Error::InvalidParams("sample values must be finite".into()));
        }
        if values.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidParams(
                "sample must be sorted in decreasing order".into(),
            ));
        }
        Ok(OrderedSample { values })
    }

    /// Sort arbitrary data into decreasing order.
    pub fn from_unsorted(mut values: Vec<f64>) -> Result<Self> {
        if values.iter().any(|v| !v.is_finite()) {
            return Err(Error::InvalidParams("sample values must be finite".into()));
        }
        values.sort_unstable_by(|a, b| b.total_cmp(a));
        OrderedSample::new(values)
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// The order statistic `X_i`, 1-based: `value(1)` is the maximum.
    pub fn value(&self, i: usize) -> f64 {
        self.values[i - 1]
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    /// True when no two entries are equal, so all log-spacings exist.
    pub fn is_strictly_decreasing(&self) -> bool {
        self.values.windows(2).all(|w| w[0] > w[1])
    }

    /// Sample shifted by `c`. Spacings, and hence every estimator in
    /// this crate, are unchanged.
    pub fn shifted(&self, c: f64) -> Result<OrderedSample> {
        OrderedSample::new(self.values.iter().map(|v| v + c).collect())
    }

    /// Sample scaled by `lambda > 0`.
    pub fn scaled(&self, lambda: f64) -> Result<OrderedSample> {
        if !(lambda > 0.0) || !lambda.is_finite() {
            return Err(Error::InvalidParams(format!(
                "scale factor must be positive and finite, got {lambda}"
            )));
        }
        OrderedSample::new(self.values.iter().map(|v| v * lambda).collect())
    }

    fn spacing(&self, i: usize, j: usize) -> Result<f64> {
        let d = self.value(i) - self.value(j);
        if d > 0.0 {
            Ok(d)
        } else {
            Err(Error::Tie { i, j })
        }
    }

    /// The matrix `M` of all log-spacings `log(X_i - X_j)`, `j >= i+1`.
    pub fn log_spacing_matrix(&self) -> Result<LogSpacingMatrix> {
        let n = self.len();
        if n < 2 {
            return Err(Error::InvalidParams(
                "log-spacing matrix needs at least 2 points".into(),
            ));
        }
        let mut m = vec![0.0; n * n];
        for i in 1..n {
            for j in (i + 1)..=n {
                m[(i - 1) * n + (j - 1)] = self.spacing(i, j)?.ln();
            }
        }
        Ok(LogSpacingMatrix { n, m })
    }

    /// The elemental estimate `xi_hat(I,J)`, computed in the three-weight
    /// log form so extreme scales never build overflowing ratios.
    pub fn elemental_estimate(&self, e: ElementalIndex) -> Result<f64> {
        e.check_sample_size(self.len())?;
        let (i, j) = (e.i(), e.j());
        let left = self.spacing(i, j - 1)?;
        let wide = self.spacing(i, j)?;
        let lower = self.spacing(i + 1, j)?;
        let (jw, iw) = ((j - 1) as f64, i as f64);
        Ok(jw * left.ln() - (jw - iw) * wide.ln() - iw * lower.ln())
    }

    /// All `(N-1)(N-2)/2` elemental estimates, keyed by `(I, J)` in
    /// row-major order.
    pub fn all_elementals(&self) -> Result<Vec<(ElementalIndex, f64)>> {
        let n = self.len();
        if n < 3 {
            return Err(Error::InvalidParams(
                "elemental estimators need at least 3 points".into(),
            ));
        }
        let m = self.log_spacing_matrix()?;
        let mut out = Vec::with_capacity((n - 1) * (n - 2) / 2);
        for e in ElementalIndex::enumerate(n) {
            let (i, j) = (e.i(), e.j());
            let (jw, iw) = ((j - 1) as f64, i as f64);
            let est = jw * m.get(i, j - 1) - (jw - iw) * m.get(i, j) - iw * m.get(i + 1, j);
            out.push((e, est));
        }
        Ok(out)
    }

    /// Entrywise product of a spacing-weight matrix with the log-spacing
    /// matrix: `sum a[i][j] log(X_i - X_j)` over `j >= i+1`. Cells with
    /// zero weight are skipped, so their spacings may be tied.
    pub fn evaluate_weights(&self, a: &SpacingWeights) -> Result<f64> {
        if a.n() != self.len() {
            return Err(Error::DimensionMismatch {
                expected: a.n(),
                got: self.len(),
            });
        }
        let mut total = 0.0;
        for (i, j, w) in a.iter_nonzero() {
            total += w * self.spacing(i, j)?.ln();
        }
        Ok(total)
    }
}

/// Index pair `(I, J)` of an elemental estimator, `J >= I + 2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ElementalIndex {
    i: usize,
    j: usize,
}

impl ElementalIndex {
    pub fn new(i: usize, j: usize) -> Result<Self> {
        if i < 1 || j < i + 2 {
            return Err(Error::Index(format!(
                "elemental index needs 1 <= I and J >= I+2, got (I, J) = ({i}, {j})"
            )));
        }
        Ok(ElementalIndex { i, j })
    }

    pub fn i(&self) -> usize {
        self.i
    }

    pub fn j(&self) -> usize {
        self.j
    }

    fn check_sample_size(&self, n: usize) -> Result<()> {
        if self.j > n {
            return Err(Error::Index(format!(
                "elemental ({}, {}) out of range for sample size {n}",
                self.i, self.j
            )));
        }
        Ok(())
    }

    /// All valid elementals for sample size `n`, row-major: `(1,3)`,
    /// `(1,4)`, ..., `(n-2, n)`.
    pub fn enumerate(n: usize) -> impl Iterator<Item = ElementalIndex> {
        (1..=n.saturating_sub(2))
            .flat_map(move |i| ((i + 2)..=n).map(move |j| ElementalIndex { i, j }))
    }

    /// Number of elementals for sample size `n`: `(n-1)(n-2)/2`.
    pub fn count(n: usize) -> usize {
        if n < 3 {
            0
        } else {
            (n - 1) * (n - 2) / 2
        }
    }
}

impl std::fmt::Display for ElementalIndex {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "elemental_{}_{}", self.i, self.j)
    }
}

/// Upper-triangular matrix of log-spacings `m[i][j] = log(X_i - X_j)`
/// for `j >= i+1`; the diagonal and lower triangle hold an unused zero.
#[derive(Debug, Clone)]
pub struct LogSpacingMatrix {
    n: usize,
    m: Vec<f64>,
}

impl LogSpacingMatrix {
    pub fn n(&self) -> usize {
        self.n
    }

    /// Entry `(i, j)`, 1-based.
    pub fn get(&self, i: usize, j: usize) -> f64 {
        assert!(i >= 1 && j >= 1 && i <= self.n && j <= self.n, "index out of range");
        self.m[(i - 1) * self.n + (j - 1)]
    }
}
