//! Exact algebra and measurement statistics for multi-particle cat states.
//!
//! A `t`-particle cat state is a superposition of the all-zeros and all-ones
//! computational terms. The four states used here differ in the relative
//! phase of the all-ones term: `+1`/`-1` (the `Phi` pair) or `+i`/`-i` (the
//! `Lambda` pair). Measuring every particle in the `x` or `y` direction
//! yields outcome statistics with a simple parity structure, which this
//! module exposes exactly; [`oracle`] provides an independent dense
//! statevector route for verification.

pub mod decompose;
pub mod distribution;
pub mod oracle;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::exact::Phase;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CatStateError {
    #[error("cat state needs at least one particle")]
    ZeroArity,
    #[error("basis vector length {got} does not match state arity {expected}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("block length {block} must satisfy 1 <= block <= {arity} - 1")]
    SplitOutOfRange { block: usize, arity: usize },
    #[error("arity {arity} above the dense-oracle bound {max}")]
    ArityAboveOracleBound { arity: usize, max: usize },
}

/// Relative-phase family of a cat state: `Phi` carries `±1`, `Lambda` `±i`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub enum CatKind {
    Phi,
    Lambda,
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    /// Product of two signs.
    pub fn combine(self, other: Sign) -> Sign {
        if self == other {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }

    /// 0 for `Plus`, 1 for `Minus`.
    pub fn bit(self) -> u8 {
        match self {
            Sign::Plus => 0,
            Sign::Minus => 1,
        }
    }
}

/// One of the four cat states `Phi±` / `Lambda±` on `arity` particles.
///
/// Cat states are symmetric under particle permutation, so a state is fully
/// described by its kind, sign and particle count.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct CatState {
    kind: CatKind,
    sign: Sign,
    arity: usize,
}

impl CatState {
    pub fn new(kind: CatKind, sign: Sign, arity: usize) -> Result<CatState, CatStateError> {
        if arity == 0 {
            return Err(CatStateError::ZeroArity);
        }
        Ok(CatState { kind, sign, arity })
    }

    pub fn phi(sign: Sign, arity: usize) -> Result<CatState, CatStateError> {
        CatState::new(CatKind::Phi, sign, arity)
    }

    pub fn lambda(sign: Sign, arity: usize) -> Result<CatState, CatStateError> {
        CatState::new(CatKind::Lambda, sign, arity)
    }

    /// All four states at a given arity, in a fixed order.
    pub fn all(arity: usize) -> Result<[CatState; 4], CatStateError> {
        Ok([
            CatState::phi(Sign::Plus, arity)?,
            CatState::phi(Sign::Minus, arity)?,
            CatState::lambda(Sign::Plus, arity)?,
            CatState::lambda(Sign::Minus, arity)?,
        ])
    }

    pub fn kind(&self) -> CatKind {
        self.kind
    }

    pub fn sign(&self) -> Sign {
        self.sign
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    /// Phase of the all-ones term: `±1` for `Phi`, `±i` for `Lambda`.
    pub fn phase(&self) -> Phase {
        match (self.kind, self.sign) {
            (CatKind::Phi, Sign::Plus) => Phase::ONE,
            (CatKind::Phi, Sign::Minus) => Phase::MINUS_ONE,
            (CatKind::Lambda, Sign::Plus) => Phase::I,
            (CatKind::Lambda, Sign::Minus) => Phase::MINUS_I,
        }
    }

    /// Same kind and sign on a different particle count.
    pub fn with_arity(&self, arity: usize) -> Result<CatState, CatStateError> {
        CatState::new(self.kind, self.sign, arity)
    }
}

impl std::fmt::Display for CatState {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let kind = match self.kind {
            CatKind::Phi => "Phi",
            CatKind::Lambda => "Lambda",
        };
        let sign = match self.sign {
            Sign::Plus => '+',
            Sign::Minus => '-',
        };
        write!(f, "{kind}{sign}({})", self.arity)
    }
}

/// Per-particle measurement direction.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub enum Basis {
    X,
    Y,
}

impl Basis {
    pub fn flip(self) -> Basis {
        match self {
            Basis::X => Basis::Y,
            Basis::Y => Basis::X,
        }
    }
}

/// Number of `Y` entries in a basis vector.
pub fn count_y(bases: &[Basis]) -> usize {
    bases.iter().filter(|b| **b == Basis::Y).count()
}

/// Measurement outcome bits, one per particle, each 0 or 1.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct Outcome {
    bits: Vec<u8>,
}

impl Outcome {
    pub fn new(bits: Vec<u8>) -> Outcome {
        debug_assert!(bits.iter().all(|b| *b <= 1));
        Outcome { bits }
    }

    /// Outcome encoded as an integer, particle 0 in the least significant bit.
    pub fn from_index(index: usize, arity: usize) -> Outcome {
        let bits = (0..arity).map(|j| ((index >> j) & 1) as u8).collect();
        Outcome { bits }
    }

    pub fn index(&self) -> usize {
        self.bits
            .iter()
            .enumerate()
            .map(|(j, b)| (*b as usize) << j)
            .sum()
    }

    pub fn bits(&self) -> &[u8] {
        &self.bits
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    /// Sum of the bits mod 2.
    pub fn parity(&self) -> u8 {
        self.bits.iter().sum::<u8>() % 2
    }
}

/// Parity of a `Y`-basis member count.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub enum NyParity {
    Even,
    Odd,
}

impl NyParity {
    pub fn of(count: usize) -> NyParity {
        if count % 2 == 0 {
            NyParity::Even
        } else {
            NyParity::Odd
        }
    }
}

/// What a group can compute from its own round: the raw `Y` count and the
/// mod-2 sum of the outcome bits. The mod-4 and mod-2 projections are views,
/// never stored, so they cannot drift out of sync with the raw count.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct GroupStats {
    pub n_y_raw: usize,
    pub parity: u8,
}

impl GroupStats {
    pub fn from_round(bases: &[Basis], outcome_bits: &[u8]) -> GroupStats {
        GroupStats {
            n_y_raw: count_y(bases),
            parity: outcome_bits.iter().sum::<u8>() % 2,
        }
    }

    pub fn n_y_mod4(&self) -> usize {
        self.n_y_raw % 4
    }

    /// `floor((n_y mod 4) / 2)`, the bit the parity laws pair with `parity`.
    pub fn m_y(&self) -> u8 {
        (self.n_y_mod4() / 2) as u8
    }

    pub fn n_y_parity(&self) -> NyParity {
        NyParity::of(self.n_y_raw)
    }

    /// The group's shared bit `m_y ⊕ parity`.
    pub fn shared_bit(&self) -> u8 {
        self.m_y() ^ self.parity
    }
}

/// Prediction for the bit `parity ⊕ m_y` of a group measuring a cat state.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ParityPrediction {
    Deterministic(u8),
    Uniform,
}

/// Predicted relation between the two groups' shared bits.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub enum Relation {
    Equal,
    Anti,
    Discard,
}

/// Parity law for a whole group measuring `state` with `n_y_raw` members in
/// the `y` direction: `Phi` states pin `parity ⊕ m_y` when the `y` count is
/// even, `Lambda` states when it is odd (0 for the plus sign, 1 for minus);
/// outside those cases the bit is a fair coin.
pub fn parity_rule(state: &CatState, n_y_raw: usize) -> ParityPrediction {
    let binds = match state.kind() {
        CatKind::Phi => n_y_raw % 2 == 0,
        CatKind::Lambda => n_y_raw % 2 == 1,
    };
    if binds {
        ParityPrediction::Deterministic(state.sign().bit())
    } else {
        ParityPrediction::Uniform
    }
}

/// Relation between the two groups' shared bits given each group's `y`-count
/// parity, for a joint cat state split across the groups.
///
/// `Phi` sources correlate the groups when both counts are even and
/// anti-correlate when both are odd (signs swap the two); `Lambda` sources
/// need exactly one odd count. Every other combination carries no relation
/// and the round is discarded.
pub fn expected_relation(state: &CatState, a: NyParity, b: NyParity) -> Relation {
    match state.kind() {
        CatKind::Phi => match (a, b) {
            (NyParity::Even, NyParity::Even) => match state.sign() {
                Sign::Plus => Relation::Equal,
                Sign::Minus => Relation::Anti,
            },
            (NyParity::Odd, NyParity::Odd) => match state.sign() {
                Sign::Plus => Relation::Anti,
                Sign::Minus => Relation::Equal,
            },
            _ => Relation::Discard,
        },
        CatKind::Lambda => match (a, b) {
            (NyParity::Even, NyParity::Odd) | (NyParity::Odd, NyParity::Even) => {
                match state.sign() {
                    Sign::Plus => Relation::Equal,
                    Sign::Minus => Relation::Anti,
                }
            }
            _ => Relation::Discard,
        },
    }
}
