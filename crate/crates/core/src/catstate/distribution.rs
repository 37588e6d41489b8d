//! Exact joint outcome distribution for a cat state measured particle-wise
//! in `x`/`y` directions.
//!
//! For a `t`-particle state with all-ones phase `φ` and a basis vector with
//! `n_y` entries in the `y` direction, the Born amplitude of a bit string
//! `b` is proportional to `1 + φ·(-1)^{P(b)}·(-i)^{n_y}` where `P(b)` is the
//! bit-sum parity. The phase product `φ·(-i)^{n_y}` is real exactly when the
//! parity laws bind, giving a uniform distribution over one parity class;
//! otherwise every bit string is equally likely. The dense oracle in
//! [`super::oracle`] certifies this closed form independently.

use rand::Rng;

use crate::catstate::{count_y, Basis, CatState, CatStateError, Outcome};
use crate::exact::{Frac, Phase};
use crate::Real;

/// Exact outcome distribution: always uniform, either over every bit string
/// or over a single bit-sum parity class.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum OutcomeDistribution {
    UniformAll { arity: usize },
    UniformParity { arity: usize, parity: u8 },
}

impl OutcomeDistribution {
    pub fn arity(&self) -> usize {
        match *self {
            OutcomeDistribution::UniformAll { arity } => arity,
            OutcomeDistribution::UniformParity { arity, .. } => arity,
        }
    }

    /// The pinned bit-sum parity, if the distribution is constrained.
    pub fn parity_constraint(&self) -> Option<u8> {
        match *self {
            OutcomeDistribution::UniformAll { .. } => None,
            OutcomeDistribution::UniformParity { parity, .. } => Some(parity),
        }
    }

    pub fn support_size(&self) -> u128 {
        match *self {
            OutcomeDistribution::UniformAll { arity } => 1u128 << arity,
            // A single parity class of t bits has 2^{t-1} strings, except at
            // t = 0 which cannot occur (arity >= 1).
            OutcomeDistribution::UniformParity { arity, .. } => 1u128 << (arity - 1),
        }
    }

    pub fn contains(&self, outcome: &Outcome) -> bool {
        outcome.len() == self.arity()
            && match self.parity_constraint() {
                None => true,
                Some(p) => outcome.parity() == p,
            }
    }

    /// Exact probability of one outcome.
    pub fn probability(&self, outcome: &Outcome) -> Frac {
        if self.contains(outcome) {
            Frac::new(1, self.support_size())
        } else {
            Frac::new(0, 1)
        }
    }

    /// Enumerate the support. Intended for small arities; the iterator walks
    /// all `2^t` indices and filters.
    pub fn support(&self) -> impl Iterator<Item = Outcome> + '_ {
        let arity = self.arity();
        (0..(1usize << arity))
            .map(move |i| Outcome::from_index(i, arity))
            .filter(move |o| self.contains(o))
    }

    /// Dense probability vector indexed by outcome integer (particle 0 in
    /// the least significant bit).
    pub fn dense<R: Real>(&self) -> Vec<R> {
        let arity = self.arity();
        let p = Frac::new(1, self.support_size());
        let p = R::from_u128(*p.denom())
            .map(|d| R::one() / d)
            .expect("support size fits the float");
        (0..(1usize << arity))
            .map(|i| {
                if self.contains(&Outcome::from_index(i, arity)) {
                    p
                } else {
                    R::zero()
                }
            })
            .collect()
    }

    pub fn sample<G: Rng + ?Sized>(&self, rng: &mut G) -> Outcome {
        let arity = self.arity();
        let mut bits: Vec<u8> = (0..arity).map(|_| rng.random::<bool>() as u8).collect();
        if let Some(parity) = self.parity_constraint() {
            let current = bits.iter().sum::<u8>() % 2;
            if current != parity {
                // Flipping the last bit maps the wrong parity class onto the
                // right one bijectively, so the result stays uniform.
                bits[arity - 1] ^= 1;
            }
        }
        Outcome::new(bits)
    }
}

/// Closed-form outcome distribution of `state` under `bases`.
pub fn outcome_distribution(
    state: &CatState,
    bases: &[Basis],
) -> Result<OutcomeDistribution, CatStateError> {
    if bases.len() != state.arity() {
        return Err(CatStateError::LengthMismatch {
            expected: state.arity(),
            got: bases.len(),
        });
    }
    let n_y = count_y(bases);
    let phase_product = state.phase().mul(Phase::MINUS_I.pow(n_y));
    match phase_product.real_sign() {
        // Real phase product s: the amplitude 1 + s·(-1)^P vanishes on one
        // parity class, so the support is P even for s = +1, P odd for s = -1.
        Some(1) => Ok(OutcomeDistribution::UniformParity {
            arity: state.arity(),
            parity: 0,
        }),
        Some(_) => Ok(OutcomeDistribution::UniformParity {
            arity: state.arity(),
            parity: 1,
        }),
        None => Ok(OutcomeDistribution::UniformAll { arity: state.arity() }),
    }
}

/// Draw one outcome for `state` measured under `bases`. Deterministic for a
/// fixed seeded generator.
pub fn sample_outcome<G: Rng + ?Sized>(
    state: &CatState,
    bases: &[Basis],
    rng: &mut G,
) -> Result<Outcome, CatStateError> {
    Ok(outcome_distribution(state, bases)?.sample(rng))
}

#[cfg(test)]
mod tests {
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    use super::*;
    use crate::catstate::{parity_rule, ParityPrediction, Sign};

    fn bases(s: &str) -> Vec<Basis> {
        s.chars()
            .map(|c| if c == 'y' { Basis::Y } else { Basis::X })
            .collect()
    }

    #[test]
    fn two_particle_phi_plus_xx_is_even_parity() {
        let state = CatState::phi(Sign::Plus, 2).unwrap();
        let d = outcome_distribution(&state, &bases("xx")).unwrap();
        assert_eq!(d, OutcomeDistribution::UniformParity { arity: 2, parity: 0 });
        let support: Vec<usize> = d.support().map(|o| o.index()).collect();
        assert_eq!(support, vec![0b00, 0b11]);
        assert_eq!(d.probability(&Outcome::from_index(0b11, 2)), Frac::new(1, 2));
        assert_eq!(d.probability(&Outcome::from_index(0b01, 2)), Frac::new(0, 1));
    }

    #[test]
    fn two_particle_phi_plus_xy_is_flat() {
        let state = CatState::phi(Sign::Plus, 2).unwrap();
        let d = outcome_distribution(&state, &bases("xy")).unwrap();
        assert_eq!(d, OutcomeDistribution::UniformAll { arity: 2 });
        assert_eq!(d.support_size(), 4);
    }

    #[test]
    fn three_particle_lambda_plus_yxx_is_even_parity() {
        let state = CatState::lambda(Sign::Plus, 3).unwrap();
        let d = outcome_distribution(&state, &bases("yxx")).unwrap();
        assert_eq!(d, OutcomeDistribution::UniformParity { arity: 3, parity: 0 });
        let support: Vec<usize> = d.support().map(|o| o.index()).collect();
        assert_eq!(support, vec![0b000, 0b011, 0b101, 0b110]);
    }

    #[test]
    fn single_particle_basis_states() {
        // Phi1+ is |0>_x, Lambda1- is |1>_y: measuring in the matching basis
        // is deterministic.
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let phi = CatState::phi(Sign::Plus, 1).unwrap();
        for _ in 0..16 {
            let o = sample_outcome(&phi, &bases("x"), &mut rng).unwrap();
            assert_eq!(o.bits(), &[0]);
        }
        let lambda = CatState::lambda(Sign::Minus, 1).unwrap();
        for _ in 0..16 {
            let o = sample_outcome(&lambda, &bases("y"), &mut rng).unwrap();
            assert_eq!(o.bits(), &[1]);
        }
    }

    #[test]
    fn sampling_respects_support_and_seed() {
        let state = CatState::phi(Sign::Plus, 2).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(42);
        for _ in 0..64 {
            let o = sample_outcome(&state, &bases("xx"), &mut rng).unwrap();
            assert!(o.index() == 0b00 || o.index() == 0b11);
        }
        let mut a = ChaCha8Rng::seed_from_u64(1);
        let mut b = ChaCha8Rng::seed_from_u64(1);
        for _ in 0..32 {
            assert_eq!(
                sample_outcome(&state, &bases("xy"), &mut a).unwrap(),
                sample_outcome(&state, &bases("xy"), &mut b).unwrap()
            );
        }
    }

    #[test]
    fn length_mismatch_is_rejected() {
        let state = CatState::phi(Sign::Plus, 3).unwrap();
        assert_eq!(
            outcome_distribution(&state, &bases("xx")),
            Err(CatStateError::LengthMismatch { expected: 3, got: 2 })
        );
    }

    /// The closed form and the property-(a)/(b) statement are two separate
    /// derivations; they must agree on every case.
    #[test]
    fn closed_form_matches_parity_rule() {
        for arity in 1..=8 {
            for state in CatState::all(arity).unwrap() {
                for n_y in 0..=arity {
                    let mut v = vec![Basis::X; arity];
                    for slot in v.iter_mut().take(n_y) {
                        *slot = Basis::Y;
                    }
                    let d = outcome_distribution(&state, &v).unwrap();
                    match parity_rule(&state, n_y) {
                        ParityPrediction::Uniform => {
                            assert_eq!(d.parity_constraint(), None);
                        }
                        ParityPrediction::Deterministic(bit) => {
                            // The rule pins parity ⊕ m_y, so the support
                            // parity must be bit ⊕ m_y.
                            let m_y = ((n_y % 4) / 2) as u8;
                            assert_eq!(d.parity_constraint(), Some(bit ^ m_y));
                        }
                    }
                }
            }
        }
    }
}
