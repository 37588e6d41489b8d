//! Brute-force dense statevector oracle.
//!
//! Builds the explicit `2^t` amplitude vector of a cat state, rotates every
//! qubit into its measurement basis, and reads Born-rule probabilities off
//! the amplitudes. This path never touches the closed-form parity algebra in
//! [`super::distribution`], so the two can certify each other.

use num_complex::Complex;

use crate::catstate::{Basis, CatState, CatStateError, Sign};
use crate::Real;

/// Largest arity the dense oracle accepts; the vector has `2^t` entries.
pub const MAX_ORACLE_ARITY: usize = 12;

/// Exact Born-rule probabilities of every outcome, indexed by outcome
/// integer with particle 0 in the least significant bit.
pub fn dense_oracle_distribution<R: Real>(
    state: &CatState,
    bases: &[Basis],
) -> Result<Vec<R>, CatStateError> {
    Ok(dense_oracle_amplitudes::<R>(state, bases)?
        .into_iter()
        .map(|a| a.norm_sqr())
        .collect())
}

/// Post-rotation amplitude vector; exposed for amplitude-level checks.
pub fn dense_oracle_amplitudes<R: Real>(
    state: &CatState,
    bases: &[Basis],
) -> Result<Vec<Complex<R>>, CatStateError> {
    let t = state.arity();
    if t > MAX_ORACLE_ARITY {
        return Err(CatStateError::ArityAboveOracleBound { arity: t, max: MAX_ORACLE_ARITY });
    }
    if bases.len() != t {
        return Err(CatStateError::LengthMismatch { expected: t, got: bases.len() });
    }

    let zero = Complex::new(R::zero(), R::zero());
    let inv_sqrt2 = (R::one() + R::one()).sqrt().recip();

    // |0...0> + phase |1...1>, both weighted 1/√2.
    let mut amps = vec![zero; 1 << t];
    amps[0] = Complex::new(inv_sqrt2, R::zero());
    amps[(1 << t) - 1] = state.phase().to_complex::<R>() * inv_sqrt2;

    // Project each qubit onto its measurement basis. The rows of the applied
    // matrix are the outcome bras: for x, <b| = (<0| + (-1)^b <1|)/√2; for y,
    // <b| = (<0| + (-1)^{b+1} i <1|)/√2.
    for (qubit, basis) in bases.iter().enumerate() {
        let mask = 1usize << qubit;
        for idx in 0..amps.len() {
            if idx & mask != 0 {
                continue;
            }
            let a0 = amps[idx];
            let a1 = amps[idx | mask];
            let (out0, out1) = match basis {
                Basis::X => (a0 + a1, a0 - a1),
                Basis::Y => {
                    let i = Complex::new(R::zero(), R::one());
                    (a0 - i * a1, a0 + i * a1)
                }
            };
            amps[idx] = out0 * inv_sqrt2;
            amps[idx | mask] = out1 * inv_sqrt2;
        }
    }
    Ok(amps)
}

/// Largest absolute probability difference between two dense distributions.
pub fn total_variation<R: Real>(p: &[R], q: &[R]) -> R {
    assert_eq!(p.len(), q.len());
    p.iter()
        .zip(q)
        .map(|(a, b)| (*a - *b).abs())
        .fold(R::zero(), R::max)
}

/// Single-qubit sanity anchors: `Phi1±` are the x-basis states and
/// `Lambda1±` the y-basis states.
pub fn single_particle_identities<R: Real>() -> Result<(), CatStateError> {
    for (state, basis, expect_bit) in [
        (CatState::phi(Sign::Plus, 1)?, Basis::X, 0usize),
        (CatState::phi(Sign::Minus, 1)?, Basis::X, 1),
        (CatState::lambda(Sign::Plus, 1)?, Basis::Y, 0),
        (CatState::lambda(Sign::Minus, 1)?, Basis::Y, 1),
    ] {
        let probs = dense_oracle_distribution::<R>(&state, &[basis])?;
        assert!((probs[expect_bit] - R::one()).abs() < R::from_f64(1e-12).unwrap());
        assert!(probs[1 - expect_bit].abs() < R::from_f64(1e-12).unwrap());
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catstate::Outcome;

    #[test]
    fn single_particle_anchor() {
        single_particle_identities::<f64>().unwrap();
        single_particle_identities::<f32>().unwrap();
    }

    #[test]
    fn phi3_plus_yyx_is_odd_parity_uniform() {
        let state = CatState::phi(Sign::Plus, 3).unwrap();
        let probs =
            dense_oracle_distribution::<f64>(&state, &[Basis::Y, Basis::Y, Basis::X]).unwrap();
        for idx in 0..8 {
            let expected = if Outcome::from_index(idx, 3).parity() == 1 { 0.25 } else { 0.0 };
            assert!((probs[idx] - expected).abs() < 1e-12, "idx {idx}: {}", probs[idx]);
        }
    }

    #[test]
    fn arity_bound_enforced() {
        let state = CatState::phi(Sign::Plus, MAX_ORACLE_ARITY + 1).unwrap();
        let bases = vec![Basis::X; MAX_ORACLE_ARITY + 1];
        assert!(matches!(
            dense_oracle_distribution::<f64>(&state, &bases),
            Err(CatStateError::ArityAboveOracleBound { .. })
        ));
    }

    #[test]
    fn distributions_normalize() {
        let state = CatState::lambda(Sign::Minus, 4).unwrap();
        let probs =
            dense_oracle_distribution::<f64>(&state, &[Basis::Y, Basis::X, Basis::Y, Basis::Y])
                .unwrap();
        let total: f64 = probs.iter().sum();
        assert!((total - 1.0).abs() < 1e-12);
    }
}
