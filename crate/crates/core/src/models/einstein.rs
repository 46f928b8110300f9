//! Einstein velocity addition on the open ball of radius `c` in ℝ³.
//!
//! The gyration is not given in closed form; it is always derived from the
//! gyroassociative law.

use rand::Rng;

use crate::error::{Error, Result};
use crate::gyro::{Gyrogroup, SampleRng, DEFAULT_TOLERANCE};

pub type Vec3 = [f64; 3];

#[inline]
fn dot(a: &Vec3, b: &Vec3) -> f64 {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

fn check(u: &Vec3, c: f64) -> Result<()> {
    if !(c.is_finite() && c > 0.0) {
        return Err(Error::Domain(format!("speed bound c = {c} must be positive")));
    }
    if u.iter().all(|x| x.is_finite()) && dot(u, u) < c * c {
        Ok(())
    } else {
        Err(Error::Domain(format!("{u:?} (‖u‖ must be < {c})")))
    }
}

fn gamma_unchecked(u: &Vec3, c: f64) -> f64 {
    1.0 / (1.0 - dot(u, u) / (c * c)).sqrt()
}

fn add_unchecked(u: &Vec3, v: &Vec3, c: f64) -> Vec3 {
    let c2 = c * c;
    let uv = dot(u, v);
    let gu = gamma_unchecked(u, c);
    let scale = 1.0 / (1.0 + uv / c2);
    let coef_u = 1.0 + (gu / (1.0 + gu)) * uv / c2;
    std::array::from_fn(|i| scale * (coef_u * u[i] + v[i] / gu))
}

/// The Lorentz factor `γ_u = 1/√(1 − u·u/c²)`.
pub fn einstein_gamma(u: Vec3, c: f64) -> Result<f64> {
    check(&u, c)?;
    Ok(gamma_unchecked(&u, c))
}

/// Einstein velocity addition `u ⊕_E v`.
pub fn einstein_add(u: Vec3, v: Vec3, c: f64) -> Result<Vec3> {
    check(&u, c)?;
    check(&v, c)?;
    Ok(add_unchecked(&u, &v, c))
}

pub fn norm(u: &Vec3) -> f64 {
    dot(u, u).sqrt()
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EinsteinBall {
    pub c: f64,
    pub tolerance: f64,
    /// Samples are uniform on the ball of radius `sample_fraction * c`.
    pub sample_fraction: f64,
}

impl EinsteinBall {
    pub fn new(c: f64) -> Result<Self> {
        if !(c.is_finite() && c > 0.0) {
            return Err(Error::Domain(format!("speed bound c = {c} must be positive")));
        }
        Ok(EinsteinBall {
            c,
            tolerance: DEFAULT_TOLERANCE,
            sample_fraction: 0.9,
        })
    }

    pub fn contains(&self, u: &Vec3) -> bool {
        check(u, self.c).is_ok()
    }

    pub fn gamma(&self, u: &Vec3) -> Result<f64> {
        einstein_gamma(*u, self.c)
    }
}

impl Gyrogroup for EinsteinBall {
    type Elem = Vec3;

    fn zero(&self) -> Vec3 {
        [0.0; 3]
    }
    fn oplus(&self, a: &Vec3, b: &Vec3) -> Vec3 {
        add_unchecked(a, b, self.c)
    }
    fn ominus(&self, a: &Vec3) -> Vec3 {
        [-a[0], -a[1], -a[2]]
    }
    fn discrepancy(&self, a: &Vec3, b: &Vec3) -> f64 {
        let d = [a[0] - b[0], a[1] - b[1], a[2] - b[2]];
        norm(&d) / self.c
    }
    fn is_exact(&self) -> bool {
        false
    }
    fn tolerance(&self) -> f64 {
        self.tolerance
    }
    fn sample(&self, rng: &mut SampleRng) -> Vec3 {
        let r = self.sample_fraction * self.c;
        loop {
            let v: Vec3 = std::array::from_fn(|_| rng.random_range(-1.0..1.0));
            if dot(&v, &v) < 1.0 {
                return [v[0] * r, v[1] * r, v[2] * r];
            }
        }
    }
    fn label(&self, a: &Vec3) -> String {
        format!("{:?},{:?},{:?}", a[0], a[1], a[2])
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spot_values() {
        let v = [0.1, -0.2, 0.3];
        assert_eq!(einstein_add([0.0; 3], v, 1.0).unwrap(), v);
        let s = einstein_add([0.5, 0.0, 0.0], [0.5, 0.0, 0.0], 1.0).unwrap();
        assert!((s[0] - 0.8).abs() < 1e-12 && s[1] == 0.0 && s[2] == 0.0);
        let o = einstein_add([0.5, 0.0, 0.0], [0.0, 0.5, 0.0], 1.0).unwrap();
        assert!((o[0] - 0.5).abs() < 1e-12);
        assert!((o[1] - 0.5 * 3f64.sqrt() / 2.0).abs() < 1e-12);
        assert_eq!(o[2], 0.0);
    }

    #[test]
    fn gamma_values() {
        assert_eq!(einstein_gamma([0.0; 3], 1.0).unwrap(), 1.0);
        assert!((einstein_gamma([0.6, 0.0, 0.0], 1.0).unwrap() - 1.25).abs() < 1e-12);
        assert!((einstein_gamma([0.0, 0.0, 0.8], 1.0).unwrap() - 5.0 / 3.0).abs() < 1e-12);
    }

    #[test]
    fn domain_errors() {
        assert!(einstein_gamma([1.0, 0.0, 0.0], 1.0).is_err());
        assert!(einstein_add([0.0; 3], [0.0, 2.0, 0.0], 1.0).is_err());
        assert!(einstein_add([0.0; 3], [0.0; 3], 0.0).is_err());
        assert!(EinsteinBall::new(-1.0).is_err());
    }
}
