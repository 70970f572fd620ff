//! Blocks of category O: classification, quivers, projectives and Ext.

mod ext;
mod findim;
mod projective;
mod quiver;

pub use ext::{ext1, ext_table, EXT_MARGIN};
pub use findim::{findim_projective, tensor_findim, FindimLayer, FindimTable};
pub use projective::{bgg_check, indecomposable_projective, truncated_projective, verma_flag};
pub use quiver::{quiver, Arrow, PathTerm, QuiverPresentation, Relation, Vertex};

use serde::{Deserialize, Serialize};

use crate::central::{central_character, CentralCharacter};
use crate::weight::Weight;
use crate::Scalar;

/// Vertices shown for the infinite zero-charge quivers by [`classify`].
pub const DEFAULT_QUIVER_SIZE: usize = 4;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum BlockType {
    /// `ż ≠ 0`, `ḣ ∉ ½Z`.
    NonzeroGeneric,
    /// `ż ≠ 0`, `ḣ ∈ Z + ½`.
    NonzeroHalfInteger,
    /// `ż ≠ 0`, `ḣ ∈ Z`.
    NonzeroInteger,
    /// `ż = 0`, `ḣ ∉ Z`.
    ZeroNonIntegral,
    /// `ż = 0`, `ḣ ∈ Z`.
    ZeroIntegral,
}

impl BlockType {
    pub fn of<S: Scalar>(w: &Weight<S>) -> Self {
        match (w.is_zero_charge(), w.is_integral(), w.is_half_integral()) {
            (true, true, _) => BlockType::ZeroIntegral,
            (true, false, _) => BlockType::ZeroNonIntegral,
            (false, true, _) => BlockType::NonzeroInteger,
            (false, false, true) => BlockType::NonzeroHalfInteger,
            (false, false, false) => BlockType::NonzeroGeneric,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            BlockType::NonzeroGeneric => "NonzeroGeneric",
            BlockType::NonzeroHalfInteger => "NonzeroHalfInteger",
            BlockType::NonzeroInteger => "NonzeroInteger",
            BlockType::ZeroNonIntegral => "ZeroNonIntegral",
            BlockType::ZeroIntegral => "ZeroIntegral",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum PrimitiveIdealCount {
    Known(u32),
    /// Not determined for zero central charge.
    Unknown,
}

impl std::fmt::Display for PrimitiveIdealCount {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            PrimitiveIdealCount::Known(n) => write!(f, "{n}"),
            PrimitiveIdealCount::Unknown => f.write_str("unknown (zero charge)"),
        }
    }
}

#[derive(Clone, Debug)]
pub struct BlockDescriptor<S> {
    pub weight: Weight<S>,
    pub block_type: BlockType,
    pub dot_partner: Weight<S>,
    pub central_character: CentralCharacter<S>,
    pub quiver: QuiverPresentation,
    pub primitive_ideal_count: PrimitiveIdealCount,
}

/// Number of primitive ideals with the central character of `w`: two for
/// nonzero charge and `ḣ ∈ Z + ½` away from the fixed point `−3/2`, one
/// for other nonzero charges.
pub fn primitive_ideal_count<S: Scalar>(w: &Weight<S>) -> PrimitiveIdealCount {
    if w.is_zero_charge() {
        PrimitiveIdealCount::Unknown
    } else if w.is_half_integral() && w.h != S::from_frac(-3, 2) {
        PrimitiveIdealCount::Known(2)
    } else {
        PrimitiveIdealCount::Known(1)
    }
}

pub fn classify<S: Scalar>(w: &Weight<S>) -> BlockDescriptor<S> {
    classify_sized(w, DEFAULT_QUIVER_SIZE)
}

/// [`classify`] with `n` vertices for the infinite zero-charge quivers.
pub fn classify_sized<S: Scalar>(w: &Weight<S>, n: usize) -> BlockDescriptor<S> {
    let block_type = BlockType::of(w);
    let fixed = w.dot_reflect() == *w;
    let quiver = if fixed {
        quiver::quiver(BlockType::NonzeroGeneric, 1)
    } else {
        quiver::quiver(block_type, n)
    };
    BlockDescriptor {
        weight: w.clone(),
        block_type,
        dot_partner: w.dot_reflect(),
        central_character: central_character(w),
        quiver,
        primitive_ideal_count: primitive_ideal_count(w),
    }
}
