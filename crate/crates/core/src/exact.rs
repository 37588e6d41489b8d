//! Exact discrete arithmetic for the cat-state algebra.
//!
//! Every amplitude that appears in the cat-state decompositions is of the
//! form `(a + b·i) / √2^h` with Gaussian-integer numerator, and every outcome
//! probability is a dyadic rational. Keeping these forms exact lets the
//! parity-law and decomposition tests run with zero tolerance; floating
//! point only enters through the dense oracle.

use num_complex::Complex;
use num_rational::Ratio;

use crate::Real;

/// Exact probability fraction.
pub type Frac = Ratio<u128>;

/// A power of the imaginary unit: `i^0 = 1`, `i^1 = i`, `i^2 = -1`, `i^3 = -i`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Phase(u8);

impl Phase {
    pub const ONE: Phase = Phase(0);
    pub const I: Phase = Phase(1);
    pub const MINUS_ONE: Phase = Phase(2);
    pub const MINUS_I: Phase = Phase(3);

    /// `i^exponent`.
    pub fn from_exponent(exponent: usize) -> Phase {
        Phase((exponent % 4) as u8)
    }

    pub fn exponent(self) -> u8 {
        self.0
    }

    pub fn mul(self, other: Phase) -> Phase {
        Phase((self.0 + other.0) % 4)
    }

    /// `self^n`.
    pub fn pow(self, n: usize) -> Phase {
        Phase(((self.0 as usize * (n % 4)) % 4) as u8)
    }

    pub fn negate(self) -> Phase {
        self.mul(Phase::MINUS_ONE)
    }

    pub fn conj(self) -> Phase {
        Phase((4 - self.0) % 4)
    }

    pub fn is_real(self) -> bool {
        self.0 % 2 == 0
    }

    /// `+1` for `i^0`, `-1` for `i^2`, `None` for the imaginary phases.
    pub fn real_sign(self) -> Option<i8> {
        match self.0 {
            0 => Some(1),
            2 => Some(-1),
            _ => None,
        }
    }

    /// Numerator parts `(re, im)` of the unit value.
    pub fn gaussian_parts(self) -> (i64, i64) {
        match self.0 {
            0 => (1, 0),
            1 => (0, 1),
            2 => (-1, 0),
            _ => (0, -1),
        }
    }

    pub fn to_complex<R: Real>(self) -> Complex<R> {
        let (re, im) = self.gaussian_parts();
        Complex::new(
            R::from_i64(re).expect("small integer fits any float"),
            R::from_i64(im).expect("small integer fits any float"),
        )
    }
}

impl std::fmt::Display for Phase {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self.0 {
            0 => "1",
            1 => "i",
            2 => "-1",
            _ => "-i",
        };
        f.write_str(s)
    }
}

/// Exact amplitude `(re + i·im) / √2^half_powers`.
///
/// Stored in canonical form: the numerator is never divisible by 2 while
/// `half_powers >= 2`, and zero is `(0, 0, 0)`. Sums are only defined between
/// amplitudes whose `√2` scales differ by an even power; the cat-state
/// expansions never produce the mismatched case.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct ExactAmp {
    re: i64,
    im: i64,
    half_powers: u32,
}

impl ExactAmp {
    pub const ZERO: ExactAmp = ExactAmp { re: 0, im: 0, half_powers: 0 };
    pub const ONE: ExactAmp = ExactAmp { re: 1, im: 0, half_powers: 0 };

    pub fn new(re: i64, im: i64, half_powers: u32) -> ExactAmp {
        ExactAmp { re, im, half_powers }.normalized()
    }

    /// `phase / √2^half_powers`.
    pub fn phase_over_sqrt2(phase: Phase, half_powers: u32) -> ExactAmp {
        let (re, im) = phase.gaussian_parts();
        ExactAmp::new(re, im, half_powers)
    }

    fn normalized(mut self) -> ExactAmp {
        if self.re == 0 && self.im == 0 {
            return ExactAmp::ZERO;
        }
        while self.half_powers >= 2 && self.re % 2 == 0 && self.im % 2 == 0 {
            self.re /= 2;
            self.im /= 2;
            self.half_powers -= 2;
        }
        self
    }

    pub fn is_zero(self) -> bool {
        self.re == 0 && self.im == 0
    }

    pub fn mul(self, other: ExactAmp) -> ExactAmp {
        ExactAmp::new(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
            self.half_powers + other.half_powers,
        )
    }

    pub fn mul_phase(self, phase: Phase) -> ExactAmp {
        let (re, im) = phase.gaussian_parts();
        ExactAmp::new(self.re * re - self.im * im, self.re * im + self.im * re, self.half_powers)
    }

    /// Exact sum. `None` when the two `√2` scales differ by an odd power, in
    /// which case the result has no Gaussian-integer numerator.
    pub fn checked_add(self, other: ExactAmp) -> Option<ExactAmp> {
        if self.is_zero() {
            return Some(other);
        }
        if other.is_zero() {
            return Some(self);
        }
        let (lo, hi) = if self.half_powers <= other.half_powers {
            (self, other)
        } else {
            (other, self)
        };
        let diff = hi.half_powers - lo.half_powers;
        if diff % 2 != 0 {
            return None;
        }
        let scale = 1i64 << (diff / 2);
        Some(ExactAmp::new(lo.re * scale + hi.re, lo.im * scale + hi.im, hi.half_powers))
    }

    /// `|amp|^2` as an exact fraction.
    pub fn norm_sqr(self) -> Frac {
        let num = (self.re as i128 * self.re as i128 + self.im as i128 * self.im as i128) as u128;
        Frac::new(num, 1u128 << self.half_powers)
    }

    pub fn to_complex<R: Real>(self) -> Complex<R> {
        let scale = R::from_f64(2.0)
            .expect("2 fits any float")
            .powi(-(self.half_powers as i32))
            .sqrt();
        Complex::new(
            R::from_i64(self.re).expect("numerator fits") * scale,
            R::from_i64(self.im).expect("numerator fits") * scale,
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn phase_cycle() {
        assert_eq!(Phase::I.mul(Phase::I), Phase::MINUS_ONE);
        assert_eq!(Phase::MINUS_I.pow(2), Phase::MINUS_ONE);
        assert_eq!(Phase::MINUS_I.pow(4), Phase::ONE);
        assert_eq!(Phase::from_exponent(7), Phase::MINUS_I);
        assert_eq!(Phase::I.conj(), Phase::MINUS_I);
    }

    #[test]
    fn amp_normalization() {
        // 2 / √2^2 = 1
        assert_eq!(ExactAmp::new(2, 0, 2), ExactAmp::ONE);
        // 1/√2 stays put
        let half = ExactAmp::phase_over_sqrt2(Phase::ONE, 1);
        assert_eq!(half.norm_sqr(), Frac::new(1, 2));
    }

    #[test]
    fn amp_products_and_sums() {
        let half = ExactAmp::phase_over_sqrt2(Phase::ONE, 1);
        let quarter = half.mul(half);
        assert_eq!(quarter.norm_sqr(), Frac::new(1, 4));
        // 1/2 + 1/2 = 1
        assert_eq!(quarter.checked_add(quarter), Some(ExactAmp::ONE));
        // i/2 + (-i)/2 = 0
        let plus_i = quarter.mul_phase(Phase::I);
        let minus_i = quarter.mul_phase(Phase::MINUS_I);
        assert_eq!(plus_i.checked_add(minus_i), Some(ExactAmp::ZERO));
        // 1 + 1/√2 has no exact representation here
        assert_eq!(ExactAmp::ONE.checked_add(half), None);
    }
}
