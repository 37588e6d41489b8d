//! Two-term decompositions of a cat state across a block split, and the
//! collapse induced by measuring one block in a cat basis.
//!
//! An `n`-particle cat state splits across any `k`/`n-k` block boundary into
//! two product terms of smaller cat states, each weighted `1/√2`. The sign
//! pattern is derived here from the state definitions and pinned against the
//! dense oracle by tests, rather than transcribed: the published form of the
//! `Lambda` split with a `Phi` leading block carries a sign typo in its
//! second term.

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::catstate::{CatKind, CatState, CatStateError, Sign};
use crate::exact::ExactAmp;

/// Which cat-state family the leading block of a decomposition carries (and
/// therefore which cat basis a measurement of that block projects onto).
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub enum BlockFamily {
    Phi,
    Lambda,
}

/// One product term `amplitude · |leading⟩ ⊗ |trailing⟩`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct DecompositionTerm {
    pub leading: CatState,
    pub trailing: CatState,
    pub amplitude: ExactAmp,
}

/// Split `state` into two terms with a `leading_len`-particle block of the
/// requested family in front. Cat states are permutation symmetric, so only
/// the block sizes matter, not which particles are grouped.
///
/// The sign rule: with parent sign `s` and leading-term sign `a`, the
/// trailing sign is `a·s`, except when both factors are `Lambda` (a `Phi`
/// parent split in the `Lambda` family) where it is `-a·s`.
pub fn decompose(
    state: &CatState,
    leading_len: usize,
    family: BlockFamily,
) -> Result<[DecompositionTerm; 2], CatStateError> {
    let n = state.arity();
    if leading_len == 0 || leading_len >= n {
        return Err(CatStateError::SplitOutOfRange { block: leading_len, arity: n });
    }

    let leading_kind = match family {
        BlockFamily::Phi => CatKind::Phi,
        BlockFamily::Lambda => CatKind::Lambda,
    };
    let trailing_kind = match (state.kind(), leading_kind) {
        (CatKind::Phi, CatKind::Phi) => CatKind::Phi,
        (CatKind::Phi, CatKind::Lambda) => CatKind::Lambda,
        (CatKind::Lambda, CatKind::Phi) => CatKind::Lambda,
        (CatKind::Lambda, CatKind::Lambda) => CatKind::Phi,
    };
    let flip_trailing = state.kind() == CatKind::Phi && leading_kind == CatKind::Lambda;

    let amplitude = ExactAmp::phase_over_sqrt2(crate::exact::Phase::ONE, 1);
    let trailing_len = n - leading_len;
    let term = |a: Sign| -> Result<DecompositionTerm, CatStateError> {
        let mut b = a.combine(state.sign());
        if flip_trailing {
            b = b.flip();
        }
        Ok(DecompositionTerm {
            leading: CatState::new(leading_kind, a, leading_len)?,
            trailing: CatState::new(trailing_kind, b, trailing_len)?,
            amplitude,
        })
    };
    Ok([term(Sign::Plus)?, term(Sign::Minus)?])
}

/// Measure a `block_len`-particle block of `state` in the `family` cat
/// basis: one decomposition term is realized with probability 1/2, returning
/// the measured block's outcome state and the collapsed state of the
/// untouched block.
pub fn collapse_after_block_measurement<G: Rng + ?Sized>(
    state: &CatState,
    block_len: usize,
    family: BlockFamily,
    rng: &mut G,
) -> Result<(CatState, CatState), CatStateError> {
    let terms = decompose(state, block_len, family)?;
    // Both terms carry amplitude 1/√2, i.e. probability 1/2 each.
    let picked = terms[rng.random_range(0..2usize)];
    Ok((picked.leading, picked.trailing))
}

/// Sparse exact amplitude vector of a cat state: the two nonzero entries
/// `(index, amplitude)` with particle 0 in the least significant bit.
pub fn exact_state_amplitudes(state: &CatState) -> [(usize, ExactAmp); 2] {
    let all_ones = (1usize << state.arity()) - 1;
    [
        (0, ExactAmp::phase_over_sqrt2(crate::exact::Phase::ONE, 1)),
        (all_ones, ExactAmp::phase_over_sqrt2(state.phase(), 1)),
    ]
}
