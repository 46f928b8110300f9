//! The Möbius gyrogroup on the complex open unit disk,
//! `a ⊕ b = (a + b) / (1 + ā b)`, with gyrations
//! `gyr[a,b](c) = ((1 + a b̄) / (1 + ā b)) c`.
//!
//! Two arithmetic modes share the formulas: [`MobiusDisk`] in `f64` and
//! [`MobiusExact`] over Gaussian rationals.

use num_bigint::BigInt;
use num_complex::{Complex, Complex64};
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::Rng;

use crate::error::{Error, Result};
use crate::gyro::{Gyrogroup, SampleRng, DEFAULT_TOLERANCE};
use crate::rational::{format_rational, to_f64};

pub type ExactComplex = Complex<BigRational>;

pub fn exact(re: BigRational, im: BigRational) -> ExactComplex {
    Complex::new(re, im)
}

fn check_f64(z: Complex64) -> Result<()> {
    if z.re.is_finite() && z.im.is_finite() && z.norm_sqr() < 1.0 {
        Ok(())
    } else {
        Err(Error::Domain(format!("{z} (|z| must be < 1)")))
    }
}

fn check_exact(z: &ExactComplex) -> Result<()> {
    if z.norm_sqr() < BigRational::one() {
        Ok(())
    } else {
        Err(Error::Domain(format!("{} (|z| must be < 1)", label_exact(z))))
    }
}

fn add_f64(a: Complex64, b: Complex64) -> Complex64 {
    (a + b) / (Complex64::new(1.0, 0.0) + a.conj() * b)
}

fn factor_f64(a: Complex64, b: Complex64) -> Complex64 {
    let one = Complex64::new(1.0, 0.0);
    (one + a * b.conj()) / (one + a.conj() * b)
}

fn add_exact(a: &ExactComplex, b: &ExactComplex) -> ExactComplex {
    (a + b) / (ExactComplex::one() + a.conj() * b)
}

fn factor_exact(a: &ExactComplex, b: &ExactComplex) -> ExactComplex {
    let one = ExactComplex::one();
    (&one + a * b.conj()) / (&one + a.conj() * b)
}

/// Möbius addition with domain checking.
pub fn mobius_add(a: Complex64, b: Complex64) -> Result<Complex64> {
    check_f64(a)?;
    check_f64(b)?;
    Ok(add_f64(a, b))
}

/// The unit-modulus factor `(1 + a b̄) / (1 + ā b)` of `gyr[a,b]`.
pub fn mobius_gyr_factor(a: Complex64, b: Complex64) -> Result<Complex64> {
    check_f64(a)?;
    check_f64(b)?;
    Ok(factor_f64(a, b))
}

pub fn mobius_add_exact(a: &ExactComplex, b: &ExactComplex) -> Result<ExactComplex> {
    check_exact(a)?;
    check_exact(b)?;
    Ok(add_exact(a, b))
}

pub fn mobius_gyr_factor_exact(a: &ExactComplex, b: &ExactComplex) -> Result<ExactComplex> {
    check_exact(a)?;
    check_exact(b)?;
    Ok(factor_exact(a, b))
}

pub fn label_exact(z: &ExactComplex) -> String {
    format!("{},{}", format_rational(&z.re), format_rational(&z.im))
}

pub fn to_complex64(z: &ExactComplex) -> Complex64 {
    Complex64::new(to_f64(&z.re), to_f64(&z.im))
}

/// Floating-point Möbius disk. Samples are uniform on the disk of radius
/// `sample_radius`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MobiusDisk {
    pub tolerance: f64,
    pub sample_radius: f64,
}

impl Default for MobiusDisk {
    fn default() -> Self {
        MobiusDisk {
            tolerance: DEFAULT_TOLERANCE,
            sample_radius: 0.9,
        }
    }
}

impl MobiusDisk {
    pub fn with_tolerance(tolerance: f64) -> Self {
        MobiusDisk {
            tolerance,
            ..Self::default()
        }
    }

    pub fn contains(&self, z: Complex64) -> bool {
        check_f64(z).is_ok()
    }
}

impl Gyrogroup for MobiusDisk {
    type Elem = Complex64;

    fn zero(&self) -> Complex64 {
        Complex64::new(0.0, 0.0)
    }
    fn oplus(&self, a: &Complex64, b: &Complex64) -> Complex64 {
        add_f64(*a, *b)
    }
    fn ominus(&self, a: &Complex64) -> Complex64 {
        -a
    }
    fn gyr(&self, x: &Complex64, y: &Complex64, z: &Complex64) -> Complex64 {
        factor_f64(*x, *y) * z
    }
    fn discrepancy(&self, a: &Complex64, b: &Complex64) -> f64 {
        (a - b).norm()
    }
    fn is_exact(&self) -> bool {
        false
    }
    fn tolerance(&self) -> f64 {
        self.tolerance
    }
    fn sample(&self, rng: &mut SampleRng) -> Complex64 {
        loop {
            let re: f64 = rng.random_range(-1.0..1.0);
            let im: f64 = rng.random_range(-1.0..1.0);
            if re * re + im * im < 1.0 {
                return Complex64::new(re, im) * self.sample_radius;
            }
        }
    }
    fn label(&self, a: &Complex64) -> String {
        format!("{:?},{:?}", a.re, a.im)
    }
}

/// Exact Möbius disk over Gaussian rationals. Samples have coordinates
/// `k / 2^sample_bits` and modulus below `sample_radius`.
#[derive(Debug, Clone, PartialEq)]
pub struct MobiusExact {
    pub sample_bits: u32,
    pub sample_radius: BigRational,
}

impl Default for MobiusExact {
    fn default() -> Self {
        MobiusExact {
            sample_bits: 12,
            sample_radius: BigRational::new(9.into(), 10.into()),
        }
    }
}

impl MobiusExact {
    pub fn contains(&self, z: &ExactComplex) -> bool {
        check_exact(z).is_ok()
    }
}

impl Gyrogroup for MobiusExact {
    type Elem = ExactComplex;

    fn zero(&self) -> ExactComplex {
        ExactComplex::zero()
    }
    fn oplus(&self, a: &ExactComplex, b: &ExactComplex) -> ExactComplex {
        add_exact(a, b)
    }
    fn ominus(&self, a: &ExactComplex) -> ExactComplex {
        -a.clone()
    }
    fn gyr(&self, x: &ExactComplex, y: &ExactComplex, z: &ExactComplex) -> ExactComplex {
        factor_exact(x, y) * z
    }
    fn discrepancy(&self, a: &ExactComplex, b: &ExactComplex) -> f64 {
        if a == b {
            0.0
        } else {
            to_complex64(&(a - b)).norm().max(f64::MIN_POSITIVE)
        }
    }
    fn is_exact(&self) -> bool {
        true
    }
    fn sample(&self, rng: &mut SampleRng) -> ExactComplex {
        let scale = 1i64 << self.sample_bits;
        let bound = &self.sample_radius * &self.sample_radius;
        let den = BigInt::from(scale);
        loop {
            let re = BigRational::new(rng.random_range(-scale + 1..scale).into(), den.clone());
            let im = BigRational::new(rng.random_range(-scale + 1..scale).into(), den.clone());
            let z = Complex::new(re, im);
            if z.norm_sqr() < bound {
                return z;
            }
        }
    }
    fn label(&self, a: &ExactComplex) -> String {
        label_exact(a)
    }
}
