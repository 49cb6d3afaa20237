//! Floating-point side: the weight-s slash action, residuals of the
//! three-term functional equation, application of the exact operator data
//! to sampled functions, and the point-pair kernel R_zeta with its
//! transformation and Laplace eigenvalue checks.
//!
//! Complex powers only ever appear with a positive real base; they are
//! computed as exp(w * ln(base)) with the real logarithm, so no branch cut
//! is ever crossed.

use std::fmt;
use std::sync::Arc;

use num_complex::Complex64;

use crate::congruence::{rho, CosetTable};
use crate::error::{Error, Result};
use crate::formal_sum::FormalSum;
use crate::hecke::HeckeRep;
use crate::mat2::Mat2;

/// The spectral parameter s; both components must be finite.
#[derive(Clone, Copy, PartialEq, Debug)]
pub struct SpectralParam(Complex64);

impl SpectralParam {
    pub fn new(re: f64, im: f64) -> Result<SpectralParam> {
        if !re.is_finite() || !im.is_finite() {
            return Err(Error::OutOfDomain(format!(
                "spectral parameter must be finite (got {re} + {im}i)"
            )));
        }
        Ok(SpectralParam(Complex64::new(re, im)))
    }

    pub fn s(&self) -> Complex64 {
        self.0
    }
}

impl fmt::Display for SpectralParam {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}+{}i", self.0.re, self.0.im)
    }
}

/// base^w for a strictly positive real base, via the real logarithm.
pub fn cpow(base: f64, w: Complex64) -> Complex64 {
    assert!(base > 0.0, "cpow requires a positive real base (got {base})");
    (w * base.ln()).exp()
}

/// A sampled function on (0, infinity).
#[derive(Clone)]
pub struct TestFunction {
    label: String,
    f: Arc<dyn Fn(f64) -> Complex64 + Send + Sync>,
}

impl TestFunction {
    pub fn new(
        label: impl Into<String>,
        f: impl Fn(f64) -> Complex64 + Send + Sync + 'static,
    ) -> TestFunction {
        TestFunction { label: label.into(), f: Arc::new(f) }
    }

    /// The constant function 1.
    pub fn one() -> TestFunction {
        TestFunction::new("1", |_| Complex64::new(1.0, 0.0))
    }

    /// The zero function.
    pub fn zero() -> TestFunction {
        TestFunction::new("0", |_| Complex64::new(0.0, 0.0))
    }

    /// The closed-form solution 1 - z^(-2s) of the scalar three-term
    /// equation. The identity
    ///   1 - z^(-2s) = [1 - (z+1)^(-2s)] + (z+1)^(-2s) [1 - (z/(z+1))^(-2s)]
    /// holds exactly: the middle terms cancel and
    /// (z+1)^(-2s) (z/(z+1))^(-2s) = z^(-2s).
    pub fn witness(s: SpectralParam) -> TestFunction {
        let w = -2.0 * s.s();
        TestFunction::new(format!("1 - z^(-2({s}))"), move |z| {
            Complex64::new(1.0, 0.0) - cpow(z, w)
        })
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn eval(&self, z: f64) -> Complex64 {
        (self.f)(z)
    }
}

impl fmt::Debug for TestFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TestFunction({})", self.label)
    }
}

/// The weight-s slash action of a single matrix at a point z > 0.
///
/// Restricted to matrices with nonnegative entries and positive
/// determinant, which keeps both power bases positive.
pub fn slash(f: &TestFunction, s: SpectralParam, g: &Mat2, z: f64) -> Result<Complex64> {
    let det = g.det();
    if det <= 0 {
        return Err(Error::SlashDomain(format!("determinant must be positive (got {det})")));
    }
    if !g.is_nonneg() {
        return Err(Error::SlashDomain(format!("matrix {g} has a negative entry")));
    }
    if !z.is_finite() || z <= 0.0 {
        return Err(Error::SlashDomain(format!("sample point must be positive (got {z})")));
    }
    let denom = g.c as f64 * z + g.d as f64;
    if !denom.is_finite() || denom <= 0.0 {
        return Err(Error::SlashDomain(format!("cz + d must be positive (got {denom})")));
    }
    let image = (g.a as f64 * z + g.b as f64) / denom;
    if !image.is_finite() || image <= 0.0 {
        return Err(Error::SlashDomain(format!("image must stay positive (got {image})")));
    }
    Ok(cpow(det as f64, s.s()) * cpow(denom, -2.0 * s.s()) * f.eval(image))
}

/// Coefficient-weighted sum of slash terms over a formal sum.
pub fn apply_sum(f: &TestFunction, s: SpectralParam, sum: &FormalSum, z: f64) -> Result<Complex64> {
    let mut acc = Complex64::new(0.0, 0.0);
    for &(coeff, mat) in sum.terms() {
        acc += coeff as f64 * slash(f, s, &mat, z)?;
    }
    Ok(acc)
}

/// Package the action of a formal sum on f as a new sampled function.
/// Validates the matrices once so later evaluations cannot fail.
pub fn hecke_image(f: &TestFunction, s: SpectralParam, sum: &FormalSum) -> Result<TestFunction> {
    for &(_, mat) in sum.terms() {
        if mat.det() <= 0 || !mat.is_nonneg() {
            return Err(Error::SlashDomain(format!("matrix {mat} is outside the slash domain")));
        }
    }
    let f = f.clone();
    let sum = sum.clone();
    let label = format!("({})|sum", f.label());
    Ok(TestFunction::new(label, move |z| {
        apply_sum(&f, s, &sum, z).expect("matrices validated at construction")
    }))
}

/// Vector action of a Hecke grid: output component j collects the slashed
/// contributions of every source component k through cell (j, k).
pub fn apply_rep(
    psi: &[TestFunction],
    s: SpectralParam,
    rep: &HeckeRep,
    z: f64,
) -> Result<Vec<Complex64>> {
    let mu = rep.mu();
    assert_eq!(psi.len(), mu, "component count must match the grid");
    (1..=mu)
        .map(|j| {
            let mut acc = Complex64::new(0.0, 0.0);
            for k in 1..=mu {
                let cell = rep.cell(j, k);
                if !cell.is_empty() {
                    acc += apply_sum(&psi[k - 1], s, cell, z)?;
                }
            }
            Ok(acc)
        })
        .collect()
}

/// Max-norm defect of the vector three-term equation
///   psi(z) = rho(T^-1) psi(z+1) + (z+1)^(-2s) rho(T'^-1) psi(z/(z+1))
/// at a single point z > 0.
pub fn three_term_residual(
    psi: &[TestFunction],
    s: SpectralParam,
    table: &CosetTable,
    z: f64,
) -> f64 {
    let mu = table.mu();
    assert_eq!(psi.len(), mu, "component count must match the coset table");
    assert!(z > 0.0, "the three-term equation lives on (0, infinity)");
    let rho_t = rho(&Mat2::T.inv_unimodular().unwrap(), table);
    let rho_tp = rho(&Mat2::T_PRIME.inv_unimodular().unwrap(), table);
    let at: Vec<Complex64> = psi.iter().map(|f| f.eval(z)).collect();
    let shifted: Vec<Complex64> = psi.iter().map(|f| f.eval(z + 1.0)).collect();
    let contracted: Vec<Complex64> = psi.iter().map(|f| f.eval(z / (z + 1.0))).collect();
    let factor = cpow(z + 1.0, -2.0 * s.s());
    (1..=mu)
        .map(|i| {
            let defect =
                at[i - 1] - shifted[rho_t.apply(i) - 1] - factor * contracted[rho_tp.apply(i) - 1];
            defect.norm()
        })
        .fold(0.0, f64::max)
}

/// The point-pair kernel y / ((x - zeta)^2 + y^2) for real zeta and z in
/// the upper half plane.
pub fn r_zeta(zeta: f64, z: Complex64) -> f64 {
    assert!(z.im > 0.0, "r_zeta requires Im z > 0");
    z.im / ((z.re - zeta).powi(2) + z.im * z.im)
}

/// Moebius action on the upper half plane.
pub fn moebius(g: &Mat2, z: Complex64) -> Complex64 {
    (g.a as f64 * z + g.b as f64) / (g.c as f64 * z + g.d as f64)
}

/// Central-difference approximation of the hyperbolic Laplacian
/// -y^2 (d^2/dx^2 + d^2/dy^2) applied to f at z.
pub fn hyperbolic_laplace_fd(
    f: &dyn Fn(Complex64) -> Complex64,
    z: Complex64,
    h: f64,
) -> Complex64 {
    let dx = Complex64::new(h, 0.0);
    let dy = Complex64::new(0.0, h);
    let center = f(z);
    let d2x = (f(z + dx) - 2.0 * center + f(z - dx)) / (h * h);
    let d2y = (f(z + dy) - 2.0 * center + f(z - dy)) / (h * h);
    -z.im * z.im * (d2x + d2y)
}

/// Relative distance scaled by the larger magnitude (floored at 1).
pub fn rel_err(a: Complex64, b: Complex64) -> f64 {
    (a - b).norm() / a.norm().max(b.norm()).max(1.0)
}

/// Log-log slope of |f| between two sample points; a crude exponent
/// estimate for growth reporting.
pub fn loglog_slope(f: &TestFunction, z0: f64, z1: f64) -> f64 {
    assert!(z0 > 0.0 && z1 > 0.0 && z0 != z1);
    (f.eval(z1).norm().ln() - f.eval(z0).norm().ln()) / (z1.ln() - z0.ln())
}
