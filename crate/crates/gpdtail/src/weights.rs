//! Weight matrices for linear combinations of elemental estimators.
//!
//! A combination is described by an upper-triangular matrix `R` of
//! elemental weights `r[I][J]` (`J >= I+2`). Expansion distributes each
//! `r[I][J]` over the elemental's three log-spacings -- `(J-1)` to the
//! left cell `(I, J-1)`, `-(J-1-I)` to `(I, J)` and `-I` to the lower
//! cell `(I+1, J)` -- and collects the totals in a matrix `A` of
//! log-spacing weights (`J >= I+1`). Unit-sum `R` gives zero-sum `A`;
//! the estimate is the entrywise product of `A` with the log-spacing
//! matrix of the sample.
//!
//! The named schemes are simple closed-form choices of `R`; the
//! "linearly-rising" one, `r[I][J]` proportional to `N+1-J`, doubles as
//! a golden case because its spacing weights collapse to the closed
//! form `a[I][J] = 6(2N - 3J + 2) / (N(N-1)(N-2))`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::estimators::ElementalIndex;

/// Tolerance on the unit-/zero-sum invariants of stored weights.
pub const SUM_TOL: f64 = 1e-12;

fn check_n(n: usize, min: usize, what: &str) -> Result<()> {
    if n < min {
        return Err(Error::InvalidParams(format!("{what} needs n >= {min}, got {n}")));
    }
    Ok(())
}

/// Upper-triangular elemental weights `r[i][j]`, `j >= i+2`.
///
/// The container accepts any weights; combinations meant to be unbiased
/// must satisfy `unit_sum_ok`. The named-scheme constructors normalize.
#[derive(Debug, Clone, PartialEq)]
pub struct ElementalWeights {
    n: usize,
    r: Vec<f64>,
}

impl ElementalWeights {
    pub fn zeros(n: usize) -> Result<Self> {
        check_n(n, 3, "elemental weight matrix")?;
        Ok(ElementalWeights { n, r: vec![0.0; n * n] })
    }

    /// Build from a function of the 1-based index pair.
    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> f64) -> Result<Self> {
        let mut w = ElementalWeights::zeros(n)?;
        for e in ElementalIndex::enumerate(n) {
            w.r[(e.i() - 1) * n + (e.j() - 1)] = f(e.i(), e.j());
        }
        Ok(w)
    }

    /// Like `from_fn`, scaled afterwards so the weights sum to one.
    pub fn normalized_from_fn(n: usize, f: impl FnMut(usize, usize) -> f64) -> Result<Self> {
        let mut w = ElementalWeights::from_fn(n, f)?;
        let total = w.sum();
        if total == 0.0 || !total.is_finite() {
            return Err(Error::InvalidParams(format!(
                "cannot normalize weights with total {total}"
            )));
        }
        for v in &mut w.r {
            *v /= total;
        }
        Ok(w)
    }

    /// The matrix that selects a single elemental with weight one.
    pub fn single(n: usize, e: ElementalIndex) -> Result<Self> {
        if e.j() > n {
            return Err(Error::Index(format!(
                "elemental ({}, {}) out of range for n = {n}",
                e.i(),
                e.j()
            )));
        }
        ElementalWeights::from_fn(n, |i, j| if (i, j) == (e.i(), e.j()) { 1.0 } else { 0.0 })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        assert!(i >= 1 && j <= self.n, "index out of range");
        self.r[(i - 1) * self.n + (j - 1)]
    }

    pub fn set(&mut self, i: usize, j: usize, w: f64) -> Result<()> {
        if i < 1 || j > self.n || j < i + 2 {
            return Err(Error::Index(format!(
                "elemental weight cell needs 1 <= i, i+2 <= j <= n, got ({i}, {j})"
            )));
        }
        self.r[(i - 1) * self.n + (j - 1)] = w;
        Ok(())
    }

    pub fn sum(&self) -> f64 {
        self.r.iter().sum()
    }

    pub fn unit_sum_ok(&self) -> bool {
        (self.sum() - 1.0).abs() <= SUM_TOL
    }

    /// Nonzero cells in row-major order.
    pub fn iter_nonzero(&self) -> impl Iterator<Item = (usize, usize, f64)> + '_ {
        let n = self.n;
        ElementalIndex::enumerate(n).filter_map(move |e| {
            let w = self.r[(e.i() - 1) * n + (e.j() - 1)];
            (w != 0.0).then_some((e.i(), e.j(), w))
        })
    }

    /// Weights flattened over `ElementalIndex::enumerate(n)` order.
    pub fn to_vector(&self) -> Vec<f64> {
        ElementalIndex::enumerate(self.n)
            .map(|e| self.get(e.i(), e.j()))
            .collect()
    }

    /// Inverse of `to_vector`.
    pub fn from_vector(n: usize, v: &[f64]) -> Result<Self> {
        if v.len() != ElementalIndex::count(n) {
            return Err(Error::DimensionMismatch {
                expected: ElementalIndex::count(n),
                got: v.len(),
            });
        }
        let mut k = 0;
        ElementalWeights::from_fn(n, |_, _| {
            let w = v[k];
            k += 1;
            w
        })
    }
}

/// Upper-triangular log-spacing weights `a[i][j]`, `j >= i+1`.
///
/// Scale invariance of the resulting estimator requires zero sum;
/// the container itself accepts any weights so that biased matrices
/// can still be fed to the certificate.
#[derive(Debug, Clone, PartialEq)]
pub struct SpacingWeights {
    n: usize,
    a: Vec<f64>,
}

impl SpacingWeights {
    pub fn zeros(n: usize) -> Result<Self> {
        check_n(n, 2, "spacing weight matrix")?;
        Ok(SpacingWeights { n, a: vec![0.0; n * n] })
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> f64) -> Result<Self> {
        let mut w = SpacingWeights::zeros(n)?;
        for i in 1..n {
            for j in (i + 1)..=n {
                w.a[(i - 1) * n + (j - 1)] = f(i, j);
            }
        }
        Ok(w)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        assert!(i >= 1 && j <= self.n, "index out of range");
        self.a[(i - 1) * self.n + (j - 1)]
    }

    pub fn set(&mut self, i: usize, j: usize, w: f64) -> Result<()> {
        if i < 1 || j > self.n || j < i + 1 {
            return Err(Error::Index(format!(
                "spacing weight cell needs 1 <= i < j <= n, got ({i}, {j})"
            )));
        }
        self.a[(i - 1) * self.n + (j - 1)] = w;
        Ok(())
    }

    pub fn sum(&self) -> f64 {
        self.a.iter().sum()
    }

    pub fn zero_sum_ok(&self) -> bool {
        self.sum().abs() <= SUM_TOL
    }

    /// Nonzero cells in row-major order.
    pub fn iter_nonzero(&self) -> impl Iterator<Item = (usize, usize, f64)> + '_ {
        self.iter_upper().filter(|&(_, _, w)| w != 0.0)
    }

    /// All upper-triangle cells in row-major order.
    pub fn iter_upper(&self) -> impl Iterator<Item = (usize, usize, f64)> + '_ {
        let n = self.n;
        (1..n).flat_map(move |i| {
            ((i + 1)..=n).map(move |j| (i, j, self.a[(i - 1) * n + (j - 1)]))
        })
    }

    /// Upper triangle flattened row-major into `n(n-1)/2` coordinates.
    pub fn to_vector(&self) -> Vec<f64> {
        self.iter_upper().map(|(_, _, w)| w).collect()
    }

    pub fn from_vector(n: usize, v: &[f64]) -> Result<Self> {
        if v.len() != n * (n - 1) / 2 {
            return Err(Error::DimensionMismatch {
                expected: n * (n - 1) / 2,
                got: v.len(),
            });
        }
        let mut k = 0;
        SpacingWeights::from_fn(n, |_, _| {
            let w = v[k];
            k += 1;
            w
        })
    }
}

/// Expand elemental weights into log-spacing weights.
pub fn expand(r: &ElementalWeights) -> SpacingWeights {
    let n = r.n();
    let mut a = SpacingWeights::zeros(n).expect("n >= 3 implies n >= 2");
    for (i, j, w) in r.iter_nonzero() {
        let (iw, jw) = (i as f64, j as f64);
        *a.cell_mut(i, j - 1) += w * (jw - 1.0);
        *a.cell_mut(i, j) -= w * (jw - 1.0 - iw);
        *a.cell_mut(i + 1, j) -= w * iw;
    }
    a
}

impl SpacingWeights {
    fn cell_mut(&mut self, i: usize, j: usize) -> &mut f64 {
        &mut self.a[(i - 1) * self.n + (j - 1)]
    }
}

/// The "linearly-rising" combination, `r[i][j]` proportional to `n+1-j`,
/// normalized to unit sum.
pub fn linearly_rising(n: usize) -> Result<ElementalWeights> {
    check_n(n, 3, "linearly-rising scheme")?;
    ElementalWeights::normalized_from_fn(n, |_, j| (n + 1 - j) as f64)
}

/// Closed form of `expand(linearly_rising(n))`:
/// `a[i][j] = 6(2n - 3j + 2) / (n(n-1)(n-2))`, constant along columns.
pub fn linearly_rising_spacing_closed_form(n: usize) -> Result<SpacingWeights> {
    check_n(n, 3, "linearly-rising closed form")?;
    let denom = (n * (n - 1) * (n - 2)) as f64;
    SpacingWeights::from_fn(n, |_, j| 6.0 * (2.0 * n as f64 - 3.0 * j as f64 + 2.0) / denom)
}

/// Named weight combinations.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SchemeName {
    /// Equal weight on every elemental (curve A1).
    EqualWeight,
    /// Weights concentrated on the top rows, `r ~ 1/(i(i+1))` (curve B1).
    TopRow,
    /// Weights rising with the gap, `r ~ (j-i)^2` (curve C1).
    QuadraticGap,
    /// `r ~ n+1-j`.
    LinearlyRising,
    /// Placeholder for user-supplied matrices; has no formula.
    Custom,
}

impl SchemeName {
    /// All schemes with a closed-form matrix.
    pub const NAMED: [SchemeName; 4] = [
        SchemeName::EqualWeight,
        SchemeName::TopRow,
        SchemeName::QuadraticGap,
        SchemeName::LinearlyRising,
    ];
}

impl std::fmt::Display for SchemeName {
    fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            SchemeName::EqualWeight => "equal-weight",
            SchemeName::TopRow => "top-row",
            SchemeName::QuadraticGap => "quadratic-gap",
            SchemeName::LinearlyRising => "linearly-rising",
            SchemeName::Custom => "custom",
        };
        f.write_str(s)
    }
}

impl std::str::FromStr for SchemeName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "equal-weight" | "a1" => Ok(SchemeName::EqualWeight),
            "top-row" | "b1" => Ok(SchemeName::TopRow),
            "quadratic-gap" | "c1" => Ok(SchemeName::QuadraticGap),
            "linearly-rising" => Ok(SchemeName::LinearlyRising),
            "custom" => Ok(SchemeName::Custom),
            other => Err(Error::InvalidParams(format!("unknown scheme '{other}'"))),
        }
    }
}

/// The unit-sum elemental weights of a named scheme at sample size `n`.
pub fn named_scheme(name: SchemeName, n: usize) -> Result<ElementalWeights> {
    check_n(n, 3, "named scheme")?;
    match name {
        SchemeName::EqualWeight => ElementalWeights::normalized_from_fn(n, |_, _| 1.0),
        SchemeName::TopRow => {
            ElementalWeights::normalized_from_fn(n, |i, _| 1.0 / (i * (i + 1)) as f64)
        }
        SchemeName::QuadraticGap => {
            ElementalWeights::normalized_from_fn(n, |i, j| ((j - i) * (j - i)) as f64)
        }
        SchemeName::LinearlyRising => linearly_rising(n),
        SchemeName::Custom => Err(Error::InvalidParams(
            "scheme 'custom' requires an explicit weight matrix".into(),
        )),
    }
}

// ---------------------------------------------------------------------------
// JSON document
// ---------------------------------------------------------------------------

/// One nonzero cell of a weight-matrix document.
#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct WeightEntry {
    pub i: usize,
    pub j: usize,
    pub w: f64,
}

/// The interchange form of a weight matrix:
/// `{ "n": int, "kind": "elemental"|"spacing", "entries": [{i, j, w}] }`,
/// entries omitted are zero, indices 1-based. Unknown fields are ignored.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct WeightMatrixDoc {
    pub n: usize,
    pub kind: WeightKind,
    pub entries: Vec<WeightEntry>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum WeightKind {
    Elemental,
    Spacing,
}

impl WeightMatrixDoc {
    pub fn from_elemental(r: &ElementalWeights) -> Self {
        WeightMatrixDoc {
            n: r.n(),
            kind: WeightKind::Elemental,
            entries: r.iter_nonzero().map(|(i, j, w)| WeightEntry { i, j, w }).collect(),
        }
    }

    pub fn from_spacing(a: &SpacingWeights) -> Self {
        WeightMatrixDoc {
            n: a.n(),
            kind: WeightKind::Spacing,
            entries: a.iter_nonzero().map(|(i, j, w)| WeightEntry { i, j, w }).collect(),
        }
    }

    /// Reconstruct elemental weights, validating triangularity and,
    /// when `require_unit_sum`, the unit-sum invariant.
    pub fn to_elemental(&self, require_unit_sum: bool) -> Result<ElementalWeights> {
        if self.kind != WeightKind::Elemental {
            return Err(Error::InvalidWeights("document kind is not 'elemental'".into()));
        }
        let mut r = ElementalWeights::zeros(self.n)?;
        for e in &self.entries {
            r.set(e.i, e.j, e.w)
                .map_err(|err| Error::InvalidWeights(err.to_string()))?;
        }
        if require_unit_sum && !r.unit_sum_ok() {
            return Err(Error::InvalidWeights(format!(
                "elemental weights must sum to 1, got {}",
                r.sum()
            )));
        }
        Ok(r)
    }

    /// Reconstruct spacing weights, validating triangularity and, when
    /// `require_zero_sum`, the zero-sum invariant.
    pub fn to_spacing(&self, require_zero_sum: bool) -> Result<SpacingWeights> {
        if self.kind != WeightKind::Spacing {
            return Err(Error::InvalidWeights("document kind is not 'spacing'".into()));
        }
        let mut a = SpacingWeights::zeros(self.n)?;
        for e in &self.entries {
            a.set(e.i, e.j, e.w)
                .map_err(|err| Error::InvalidWeights(err.to_string()))?;
        }
        if require_zero_sum && !a.zero_sum_ok() {
            return Err(Error::NotZeroSum { sum: a.sum() });
        }
        Ok(a)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::RandomStream;
    use approx::assert_relative_eq;
    use proptest::prelude::*;

    fn idx(i: usize, j: usize) -> ElementalIndex {
        ElementalIndex::new(i, j).unwrap()
    }

    #[test]
    fn linearly_rising_n7_matches_display() {
        let r = linearly_rising(7).unwrap();
        for i in 1..=5usize {
            for j in (i + 2)..=7usize {
                assert_relative_eq!(r.get(i, j), (8 - j) as f64 / 35.0, epsilon = 1e-16);
            }
        }
        assert!(r.unit_sum_ok());
        // normalizer Z = 35
        assert_relative_eq!(r.get(1, 3) * 35.0, 5.0, epsilon = 1e-12);
    }

    #[test]
    fn linearly_rising_n3_is_single_unit_weight() {
        let r = linearly_rising(3).unwrap();
        assert_eq!(r.get(1, 3), 1.0);
        assert_eq!(r.sum(), 1.0);
    }

    #[test]
    fn expand_linearly_rising_n7_first_row() {
        let a = expand(&linearly_rising(7).unwrap());
        let want = [10.0, 7.0, 4.0, 1.0, -2.0, -5.0];
        for (col, w) in (2..=7).zip(want) {
            assert!((a.get(1, col) - w / 35.0).abs() <= 1e-15);
        }
        assert!(a.zero_sum_ok());
    }

    #[test]
    fn expand_single_elemental_inverted_l() {
        let a = expand(&ElementalWeights::single(3, idx(1, 3)).unwrap());
        assert_eq!(a.get(1, 2), 2.0);
        assert_eq!(a.get(1, 3), -1.0);
        assert_eq!(a.get(2, 3), -1.0);
        assert_eq!(a.iter_nonzero().count(), 3);
    }

    #[test]
    fn expand_single_elemental_has_three_cells_in_l_formation() {
        for n in 3..=9usize {
            for e in ElementalIndex::enumerate(n) {
                let a = expand(&ElementalWeights::single(n, e).unwrap());
                let cells: Vec<_> = a.iter_nonzero().map(|(i, j, _)| (i, j)).collect();
                assert_eq!(
                    cells,
                    vec![(e.i(), e.j() - 1), (e.i(), e.j()), (e.i() + 1, e.j())]
                );
            }
        }
    }

    #[test]
    fn expand_zero_matrix_is_zero() {
        let a = expand(&ElementalWeights::zeros(5).unwrap());
        assert!(a.iter_nonzero().next().is_none());
    }

    #[test]
    fn closed_form_examples_n7() {
        let a = linearly_rising_spacing_closed_form(7).unwrap();
        assert_relative_eq!(a.get(1, 2), 10.0 / 35.0, epsilon = 1e-15);
        assert_relative_eq!(a.get(3, 7), -5.0 / 35.0, epsilon = 1e-15);
        assert_relative_eq!(a.get(6, 7), -5.0 / 35.0, epsilon = 1e-15);
    }

    #[test]
    fn closed_form_column_weighted_sums_vanish() {
        // sum over j of (column height) * 6(2n - 3j + 2) = 0
        for n in 3..=50usize {
            let total: i64 = (2..=n as i64)
                .map(|j| (j - 1) * 6 * (2 * n as i64 - 3 * j + 2))
                .sum();
            assert_eq!(total, 0, "n = {n}");
        }
    }

    #[test]
    fn closed_form_matches_expand() {
        for n in 3..=50usize {
            let by_expand = expand(&linearly_rising(n).unwrap());
            let closed = linearly_rising_spacing_closed_form(n).unwrap();
            for (i, j, w) in closed.iter_upper() {
                assert!(
                    (w - by_expand.get(i, j)).abs() <= 1e-12,
                    "mismatch at n={n}, cell ({i},{j})"
                );
            }
        }
    }

    #[test]
    fn named_scheme_equal_weight_n4() {
        let r = named_scheme(SchemeName::EqualWeight, 4).unwrap();
        for (_, _, w) in r.iter_nonzero() {
            assert_relative_eq!(w, 1.0 / 3.0, epsilon = 1e-15);
        }
    }

    #[test]
    fn named_scheme_top_row_n4() {
        let r = named_scheme(SchemeName::TopRow, 4).unwrap();
        assert_relative_eq!(r.get(1, 3), 3.0 / 7.0, epsilon = 1e-14);
        assert_relative_eq!(r.get(1, 4), 3.0 / 7.0, epsilon = 1e-14);
        assert_relative_eq!(r.get(2, 4), 1.0 / 7.0, epsilon = 1e-14);
    }

    #[test]
    fn named_scheme_quadratic_gap_n4() {
        let r = named_scheme(SchemeName::QuadraticGap, 4).unwrap();
        assert_relative_eq!(r.get(1, 3), 4.0 / 17.0, epsilon = 1e-14);
        assert_relative_eq!(r.get(1, 4), 9.0 / 17.0, epsilon = 1e-14);
        assert_relative_eq!(r.get(2, 4), 4.0 / 17.0, epsilon = 1e-14);
    }

    #[test]
    fn custom_scheme_by_name_is_rejected() {
        assert!(named_scheme(SchemeName::Custom, 5).is_err());
    }

    #[test]
    fn scheme_names_round_trip() {
        for name in SchemeName::NAMED {
            assert_eq!(name.to_string().parse::<SchemeName>().unwrap(), name);
        }
        assert_eq!("a1".parse::<SchemeName>().unwrap(), SchemeName::EqualWeight);
        assert!("bogus".parse::<SchemeName>().is_err());
    }

    /// Random unit-sum weights from a seeded stream.
    fn random_unit_sum(n: usize, rng: &mut RandomStream) -> ElementalWeights {
        ElementalWeights::normalized_from_fn(n, |_, _| rng.next_open01() - 0.3).unwrap()
    }

    #[test]
    fn unit_sum_r_gives_zero_sum_a() {
        let mut rng = RandomStream::new(41);
        for n in 3..=20usize {
            for _ in 0..1000 {
                let r = random_unit_sum(n, &mut rng);
                let a = expand(&r);
                assert!(
                    a.sum().abs() <= 1e-11,
                    "nonzero sum {} at n = {n}",
                    a.sum()
                );
            }
        }
    }

    proptest! {
        #[test]
        fn expand_is_linear(
            n in 3usize..9,
            alpha in -3.0f64..3.0,
            beta in -3.0f64..3.0,
            seed in any::<u64>(),
        ) {
            let mut rng = RandomStream::new(seed);
            let r1 = ElementalWeights::from_fn(n, |_, _| rng.next_open01() - 0.5).unwrap();
            let r2 = ElementalWeights::from_fn(n, |_, _| rng.next_open01() - 0.5).unwrap();
            let combo = ElementalWeights::from_fn(n, |i, j| {
                alpha * r1.get(i, j) + beta * r2.get(i, j)
            }).unwrap();
            let lhs = expand(&combo);
            let (a1, a2) = (expand(&r1), expand(&r2));
            for (i, j, w) in lhs.iter_upper() {
                let rhs = alpha * a1.get(i, j) + beta * a2.get(i, j);
                prop_assert!((w - rhs).abs() <= 1e-12);
            }
        }
    }

    #[test]
    fn json_document_round_trip() {
        let r = linearly_rising(7).unwrap();
        let doc = WeightMatrixDoc::from_elemental(&r);
        let text = serde_json::to_string(&doc).unwrap();
        let back: WeightMatrixDoc = serde_json::from_str(&text).unwrap();
        assert_eq!(back.to_elemental(true).unwrap(), r);

        let a = expand(&r);
        let doc = WeightMatrixDoc::from_spacing(&a);
        let text = serde_json::to_string(&doc).unwrap();
        let back: WeightMatrixDoc = serde_json::from_str(&text).unwrap();
        assert_eq!(back.to_spacing(true).unwrap(), a);
    }

    #[test]
    fn json_reader_validates() {
        // diagonal cell
        let doc: WeightMatrixDoc = serde_json::from_str(
            r#"{"n": 4, "kind": "spacing", "entries": [{"i": 2, "j": 2, "w": 1.0}]}"#,
        )
        .unwrap();
        assert!(doc.to_spacing(false).is_err());

        // kind mismatch
        let doc: WeightMatrixDoc = serde_json::from_str(
            r#"{"n": 4, "kind": "spacing", "entries": []}"#,
        )
        .unwrap();
        assert!(doc.to_elemental(false).is_err());

        // zero-sum enforcement switches
        let doc: WeightMatrixDoc = serde_json::from_str(
            r#"{"n": 3, "kind": "spacing", "entries": [{"i": 1, "j": 2, "w": 1.0}]}"#,
        )
        .unwrap();
        assert!(doc.to_spacing(true).is_err());
        assert!(doc.to_spacing(false).is_ok());

        // secondary-diagonal cell is invalid for elemental kind
        let doc: WeightMatrixDoc = serde_json::from_str(
            r#"{"n": 4, "kind": "elemental", "entries": [{"i": 1, "j": 2, "w": 1.0}]}"#,
        )
        .unwrap();
        assert!(doc.to_elemental(false).is_err());
    }

    #[test]
    fn vector_round_trips() {
        let r = linearly_rising(6).unwrap();
        let v = r.to_vector();
        assert_eq!(v.len(), ElementalIndex::count(6));
        assert_eq!(ElementalWeights::from_vector(6, &v).unwrap(), r);

        let a = expand(&r);
        let v = a.to_vector();
        assert_eq!(v.len(), 15);
        assert_eq!(SpacingWeights::from_vector(6, &v).unwrap(), a);
    }
}
