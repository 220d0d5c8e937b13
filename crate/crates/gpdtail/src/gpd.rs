//! The Generalized Pareto family: distribution function, exceedance,
//! quantile map, density, support and exact inverse-transform sampling.
//!
//! CDF: `F(x) = 1 - (1 + xi*(x-mu)/sigma)^(-1/xi)` for xi != 0,
//!      `F(x) = 1 - exp(-(x-mu)/sigma)` in the xi = 0 exponential limit.
//!
//! For xi > 0 the support is `[mu, inf)`; for xi < 0 it is the bounded
//! interval `[mu, mu - sigma/xi]`.

use crate::error::{Error, Result};
use crate::estimators::OrderedSample;
use crate::rng::RandomStream;

/// Shape threshold below which the exponential limit is used; the
/// general formula loses all precision in (G^-xi - 1)/xi before this.
const XI_ZERO_EPS: f64 = 1e-12;

/// GPD parameters: location `mu`, scale `sigma > 0`, tail `xi`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GpdParams {
    mu: f64,
    sigma: f64,
    xi: f64,
}

/// An exceedance probability `G = 1 - F(x)`, restricted to (0, 1].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Exceedance {
    g: f64,
}

impl Exceedance {
    pub fn new(g: f64) -> Result<Self> {
        if g > 0.0 && g <= 1.0 {
            Ok(Exceedance { g })
        } else {
            Err(Error::Domain(format!(
                "exceedance probability must lie in (0, 1], got {g}"
            )))
        }
    }

    pub fn get(&self) -> f64 {
        self.g
    }
}

impl GpdParams {
    pub fn new(mu: f64, sigma: f64, xi: f64) -> Result<Self> {
        if !mu.is_finite() {
            return Err(Error::InvalidParams(format!("mu must be finite, got {mu}")));
        }
        if !(sigma > 0.0) || !sigma.is_finite() {
            return Err(Error::InvalidParams(format!(
                "sigma must be positive and finite, got {sigma}"
            )));
        }
        if !xi.is_finite() {
            return Err(Error::InvalidParams(format!("xi must be finite, got {xi}")));
        }
        Ok(GpdParams { mu, sigma, xi })
    }

    pub fn mu(&self) -> f64 {
        self.mu
    }

    pub fn sigma(&self) -> f64 {
        self.sigma
    }

    pub fn xi(&self) -> f64 {
        self.xi
    }

    fn is_exponential(&self) -> bool {
        self.xi.abs() < XI_ZERO_EPS
    }

    /// Support of the distribution: lower endpoint and, for xi < 0,
    /// the upper endpoint `mu - sigma/xi`.
    pub fn support(&self) -> (f64, Option<f64>) {
        if self.xi < -XI_ZERO_EPS {
            (self.mu, Some(self.mu - self.sigma / self.xi))
        } else {
            (self.mu, None)
        }
    }

    fn check_support(&self, x: f64) -> Result<f64> {
        if !x.is_finite() {
            return Err(Error::Domain(format!("x must be finite, got {x}")));
        }
        let (lo, hi) = self.support();
        if x < lo {
            return Err(Error::Domain(format!(
                "x = {x} below the support lower bound mu = {lo}"
            )));
        }
        if let Some(hi) = hi {
            if x > hi {
                return Err(Error::Domain(format!(
                    "x = {x} above the support upper bound mu - sigma/xi = {hi}"
                )));
            }
        }
        Ok((x - self.mu) / self.sigma)
    }

    /// Distribution function `F(x)`.
    pub fn cdf(&self, x: f64) -> Result<f64> {
        Ok(1.0 - self.exceedance(x)?)
    }

    /// Exceedance function `G(x) = 1 - F(x)`.
    pub fn exceedance(&self, x: f64) -> Result<f64> {
        let z = self.check_support(x)?;
        if self.is_exponential() {
            Ok((-z).exp())
        } else {
            // (1 + xi z)^(-1/xi) = exp(-ln_1p(xi z)/xi); at the upper
            // endpoint ln_1p(-1) = -inf collapses this to 0 as it should.
            Ok((-(self.xi * z).ln_1p() / self.xi).exp())
        }
    }

    /// Density `f(x)` on the support.
    pub fn pdf(&self, x: f64) -> Result<f64> {
        let z = self.check_support(x)?;
        if self.is_exponential() {
            Ok((-z).exp() / self.sigma)
        } else {
            let e = (-1.0 / self.xi - 1.0) * (self.xi * z).ln_1p();
            Ok(e.exp() / self.sigma)
        }
    }

    /// Quantile map `x = u(G) = mu + sigma/xi (G^-xi - 1)`, the inverse
    /// of the exceedance function; `u(G) = mu - sigma ln G` at xi = 0.
    pub fn quantile(&self, g: Exceedance) -> f64 {
        let ln_g = g.get().ln();
        if self.is_exponential() {
            self.mu - self.sigma * ln_g
        } else {
            // (G^-xi - 1)/xi as expm1(-xi ln G)/xi; stable for small |xi|.
            self.mu + self.sigma * (-self.xi * ln_g).exp_m1() / self.xi
        }
    }

    /// Draw `n` i.i.d. values by the probability integral transform and
    /// sort them into decreasing order. Deterministic given the stream.
    pub fn sample(&self, n: usize, rng: &mut RandomStream) -> Result<OrderedSample> {
        if n == 0 {
            return Err(Error::InvalidParams("sample size must be >= 1".into()));
        }
        let mut values = Vec::with_capacity(n);
        for _ in 0..n {
            let g = Exceedance::new(rng.next_open01()).expect("open01 draw is in (0,1)");
            values.push(self.quantile(g));
        }
        OrderedSample::from_unsorted(values)
    }
}
