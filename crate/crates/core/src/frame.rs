use crate::error::{Error, Result};
use crate::quat::{Quaternion, DEFAULT_TOL};

/// Orthonormal triple of imaginary quaternions with `v3 = v1 v2`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Frame {
    v1: Quaternion,
    v2: Quaternion,
    v3: Quaternion,
}

impl Frame {
    /// Normalizes `v1`, `v2` and derives `v3 = v1 v2`.
    pub fn new(v1: Quaternion, v2: Quaternion) -> Result<Self> {
        Self::with_tol(v1, v2, DEFAULT_TOL)
    }

    pub fn with_tol(v1: Quaternion, v2: Quaternion, tol: f64) -> Result<Self> {
        for v in [v1, v2] {
            if v.r != 0.0 {
                return Err(Error::NotImaginary(v.r));
            }
        }
        let v1 = v1.normalized()?;
        let v2 = v2.normalized()?;
        let residual = v1.dot(v2).abs();
        if residual > tol {
            return Err(Error::NotOrthogonal { residual });
        }
        // v1 v2 is imaginary for orthogonal imaginary factors; drop rounding
        Ok(Frame {
            v1,
            v2,
            v3: (v1 * v2).im(),
        })
    }

    /// Frame from all three vectors; `v3` must agree with `v1 v2`.
    pub fn from_triple(v1: Quaternion, v2: Quaternion, v3: Quaternion, tol: f64) -> Result<Self> {
        let frame = Self::with_tol(v1, v2, tol)?;
        let deviation = (v3.normalized()? - frame.v3).norm();
        if deviation > tol {
            return Err(Error::FrameHandedness { deviation });
        }
        Ok(frame)
    }

    /// Standard frame `(i, j, k)`.
    pub fn standard() -> Self {
        Frame {
            v1: Quaternion::I,
            v2: Quaternion::J,
            v3: Quaternion::K,
        }
    }

    pub fn v1(&self) -> Quaternion {
        self.v1
    }

    pub fn v2(&self) -> Quaternion {
        self.v2
    }

    pub fn v3(&self) -> Quaternion {
        self.v3
    }

    pub fn vectors(&self) -> [Quaternion; 3] {
        [self.v1, self.v2, self.v3]
    }

    /// Frame with `v1` and `v2` multiplied by the given signs; `v3` follows.
    pub fn with_signs(&self, s1: f64, s2: f64) -> Frame {
        let v1 = self.v1 * s1;
        let v2 = self.v2 * s2;
        Frame {
            v1,
            v2,
            v3: (v1 * v2).im(),
        }
    }

    /// Largest vector-wise distance between two frames.
    pub fn deviation(&self, other: &Frame) -> f64 {
        self.vectors()
            .iter()
            .zip(other.vectors())
            .map(|(a, b)| (*a - b).norm())
            .fold(0.0, f64::max)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn standard_frame() {
        let f = Frame::new(Quaternion::I * 3.0, Quaternion::J).unwrap();
        assert_eq!(f, Frame::standard());
        assert_eq!(f.with_signs(-1.0, 1.0).v3(), -Quaternion::K);
    }

    #[test]
    fn rejects_bad_frames() {
        assert!(matches!(
            Frame::new(Quaternion::I, Quaternion::point(1.0, 1.0, 0.0)),
            Err(Error::NotOrthogonal { .. })
        ));
        assert!(matches!(
            Frame::from_triple(Quaternion::I, Quaternion::J, -Quaternion::K, 1e-9),
            Err(Error::FrameHandedness { .. })
        ));
        assert!(Frame::new(Quaternion::ONE, Quaternion::J).is_err());
        assert!(Frame::new(Quaternion::ZERO, Quaternion::J).is_err());
    }
}
