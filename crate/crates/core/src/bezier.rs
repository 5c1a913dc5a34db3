//! Multilinear rational quaternionic Bezier objects.
//!
//! A curve, patch or volume of arity `n` carries `2^n` homogeneous control
//! pairs. Control `a + 2b + 4c` sits at the parameter corner `(a, b, c)`, so
//! bit `d` of an index selects the end of parameter `d`.

use crate::error::{Error, Result};
use crate::moebius::{ExtendedPoint, HomogeneousPoint};
use crate::quat::{Quaternion, DEFAULT_TOL};

/// `binom(n, i) (1 - t)^(n - i) t^i`.
pub fn bernstein(n: usize, i: usize, t: f64) -> Result<f64> {
    if i > n {
        return Err(Error::IndexOutOfRange { index: i, max: n });
    }
    let mut binom = 1.0;
    for k in 0..i {
        binom = binom * (n - k) as f64 / (k + 1) as f64;
    }
    Ok(binom * (1.0 - t).powi((n - i) as i32) * t.powi(i as i32))
}

/// Linear Bernstein basis and its derivative, `(B_bit(t), B_bit'(t))`.
fn linear_basis(bit: usize, t: f64) -> (f64, f64) {
    if bit == 0 {
        (1.0 - t, -1.0)
    } else {
        (t, 1.0)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct QBObject {
    arity: usize,
    control: Vec<HomogeneousPoint>,
}

impl QBObject {
    /// Checks the control count and that every control pair lies on the
    /// Study quadric within [`DEFAULT_TOL`].
    pub fn new(arity: usize, control: Vec<HomogeneousPoint>) -> Result<Self> {
        Self::with_tol(arity, control, DEFAULT_TOL)
    }

    pub fn with_tol(arity: usize, control: Vec<HomogeneousPoint>, tol: f64) -> Result<Self> {
        if !(1..=3).contains(&arity) {
            return Err(Error::Arity {
                expected: 3,
                got: arity,
            });
        }
        if control.len() != 1 << arity {
            return Err(Error::ControlCount {
                expected: 1 << arity,
                got: control.len(),
            });
        }
        for h in &control {
            let residual = h.study_residual();
            if residual > tol {
                return Err(Error::OffStudyQuadric { residual });
            }
        }
        Ok(QBObject { arity, control })
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn control(&self) -> &[HomogeneousPoint] {
        &self.control
    }

    /// The weight `w` of each control pair.
    pub fn weights(&self) -> Vec<Quaternion> {
        self.control.iter().map(|h| h.w).collect()
    }

    /// Control point at a binary index, i.e. the corner it interpolates.
    pub fn corner(&self, index: usize) -> Result<ExtendedPoint> {
        self.control
            .get(index)
            .ok_or(Error::IndexOutOfRange {
                index,
                max: self.control.len() - 1,
            })?
            .project()
    }

    pub fn corners(&self) -> Result<Vec<ExtendedPoint>> {
        (0..self.control.len()).map(|i| self.corner(i)).collect()
    }

    fn check_params(&self, params: &[f64]) -> Result<()> {
        if params.len() != self.arity {
            return Err(Error::Arity {
                expected: self.arity,
                got: params.len(),
            });
        }
        for &value in params {
            if !(0.0..=1.0).contains(&value) {
                return Err(Error::ParameterOutOfRange { value });
            }
        }
        Ok(())
    }

    /// `(U, W)` blended at `params`; with `direction` set, the parameter
    /// derivative of the blend along it.
    fn blend(&self, params: &[f64], direction: Option<usize>) -> HomogeneousPoint {
        let mut u = Quaternion::ZERO;
        let mut w = Quaternion::ZERO;
        for (index, h) in self.control.iter().enumerate() {
            let mut b = 1.0;
            for (d, &t) in params.iter().enumerate() {
                let (value, slope) = linear_basis((index >> d) & 1, t);
                b *= if direction == Some(d) { slope } else { value };
            }
            u += h.u * b;
            w += h.w * b;
        }
        HomogeneousPoint { u, w }
    }

    /// The homogeneous pair `(U, W)` at `params`.
    pub fn blend_at(&self, params: &[f64]) -> Result<HomogeneousPoint> {
        self.check_params(params)?;
        Ok(self.blend(params, None))
    }

    /// `U W^-1` at `params`; infinity where `W` vanishes.
    pub fn eval(&self, params: &[f64]) -> Result<ExtendedPoint> {
        self.eval_with_tol(params, DEFAULT_TOL)
    }

    pub fn eval_with_tol(&self, params: &[f64], tol: f64) -> Result<ExtendedPoint> {
        self.blend_at(params)?.project_with_tol(tol)
    }

    /// Analytic partial `(dU - F dW) W^-1` along parameter `direction`.
    pub fn partial(&self, params: &[f64], direction: usize) -> Result<Quaternion> {
        Ok(self.partials_at(params, &[direction])?[0])
    }

    /// Partials along every parameter.
    pub fn partials(&self, params: &[f64]) -> Result<Vec<Quaternion>> {
        let dirs: Vec<usize> = (0..self.arity).collect();
        self.partials_at(params, &dirs)
    }

    fn partials_at(&self, params: &[f64], directions: &[usize]) -> Result<Vec<Quaternion>> {
        self.check_params(params)?;
        for &d in directions {
            if d >= self.arity {
                return Err(Error::IndexOutOfRange {
                    index: d,
                    max: self.arity - 1,
                });
            }
        }
        let h = self.blend(params, None);
        if h.project_unchecked().is_infinite() {
            return Err(Error::AtInfinity);
        }
        let w_inv = h.w.inverse()?;
        let f = h.u * w_inv;
        Ok(directions
            .iter()
            .map(|&d| {
                let dh = self.blend(params, Some(d));
                (dh.u - f * dh.w) * w_inv
            })
            .collect())
    }

    /// Restriction to `param = side` (0 or 1), an object of one lower arity.
    /// The remaining parameters keep their order.
    pub fn restrict(&self, param: usize, side: usize) -> Result<QBObject> {
        if self.arity < 2 {
            return Err(Error::Arity {
                expected: 2,
                got: self.arity,
            });
        }
        if param >= self.arity {
            return Err(Error::IndexOutOfRange {
                index: param,
                max: self.arity - 1,
            });
        }
        if side > 1 {
            return Err(Error::IndexOutOfRange {
                index: side,
                max: 1,
            });
        }
        let low_mask = (1 << param) - 1;
        let control = (0..1 << (self.arity - 1))
            .map(|sub| {
                let low = sub & low_mask;
                let high = (sub & !low_mask) << 1;
                self.control[low | (side << param) | high]
            })
            .collect();
        Ok(QBObject {
            arity: self.arity - 1,
            control,
        })
    }

    /// Same object with every control pair right-multiplied by `c`.
    pub fn right_mul(&self, c: Quaternion) -> QBObject {
        QBObject {
            arity: self.arity,
            control: self.control.iter().map(|h| h.right_mul(c)).collect(),
        }
    }

    /// Multiplies control `index` by the real factor `lambda`.
    pub fn rescale_control(&self, index: usize, lambda: f64) -> Result<QBObject> {
        let mut out = self.clone();
        let h = out.control.get_mut(index).ok_or(Error::IndexOutOfRange {
            index,
            max: self.control.len() - 1,
        })?;
        *h = h.scale(lambda);
        Ok(out)
    }

    /// Multiplies every control whose index has bit `param` set by `lambda`.
    /// This reparametrizes parameter `param` without changing the image.
    pub fn reparametrize(&self, param: usize, lambda: f64) -> QBObject {
        let mut out = self.clone();
        for (index, h) in out.control.iter_mut().enumerate() {
            if (index >> param) & 1 == 1 {
                *h = h.scale(lambda);
            }
        }
        out
    }

    /// Applies a map to every control pair (for example an inversion).
    pub fn map_controls(&self, f: impl Fn(&HomogeneousPoint) -> HomogeneousPoint) -> QBObject {
        QBObject {
            arity: self.arity,
            control: self.control.iter().map(f).collect(),
        }
    }
}

/// `n` evenly spaced parameters covering `[0, 1]`, endpoints included.
pub fn linspace(n: usize) -> Vec<f64> {
    match n {
        0 => Vec::new(),
        1 => vec![0.5],
        _ => (0..n).map(|k| k as f64 / (n - 1) as f64).collect(),
    }
}

/// `n` parameters `k / (n + 1)`, `k = 1..=n`, strictly inside `(0, 1)`.
pub fn interior(n: usize) -> Vec<f64> {
    (1..=n).map(|k| k as f64 / (n + 1) as f64).collect()
}

/// Cartesian product of `axis` with itself `arity` times; the first parameter
/// varies fastest.
pub fn grid(axis: &[f64], arity: usize) -> Vec<Vec<f64>> {
    let n = axis.len();
    (0..n.pow(arity as u32))
        .map(|mut idx| {
            (0..arity)
                .map(|_| {
                    let t = axis[idx % n];
                    idx /= n;
                    t
                })
                .collect()
        })
        .collect()
}
