//! Choi-difference trace norms, diamond-distance brackets, and one-shot
//! discrimination success brackets for pairs of CP maps.
//!
//! Exact diamond norms (a semidefinite program) are out of scope; the
//! two-sided bracket (1/d_in) ||J1 - J2||_1 <= ||Phi1 - Phi2||_diamond
//! <= ||J1 - J2||_1 already certifies strict operational distinctness
//! whenever its lower endpoint is positive.

use crate::channel::{choi, KrausMap};
use crate::error::{Error, Result};
use crate::linalg::{trace_norm_hermitian, DEFAULT_TOL};

/// Two CP maps with matching input and output dimensions.
#[derive(Debug, Clone)]
pub struct ChannelPair {
    first: KrausMap,
    second: KrausMap,
}

impl ChannelPair {
    pub fn new(first: KrausMap, second: KrausMap) -> Result<Self> {
        if first.dim_in() != second.dim_in() || first.dim_out() != second.dim_out() {
            return Err(Error::DimensionMismatch {
                context: "ChannelPair::new",
                expected: format!("{}->{}", first.dim_in(), first.dim_out()),
                actual: format!("{}->{}", second.dim_in(), second.dim_out()),
            });
        }
        Ok(Self { first, second })
    }

    pub fn first(&self) -> &KrausMap {
        &self.first
    }

    pub fn second(&self) -> &KrausMap {
        &self.second
    }

    pub fn dim_in(&self) -> usize {
        self.first.dim_in()
    }
}

/// ||J(Phi1) - J(Phi2)||_1.
pub fn choi_difference_trace_norm(pair: &ChannelPair) -> Result<f64> {
    let diff = choi(pair.first()).sub(&choi(pair.second()));
    trace_norm_hermitian(&diff)
}

/// Two-sided diamond-distance bracket derived from the Choi trace norm.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DiamondBracket {
    pub lower: f64,
    pub upper: f64,
    pub choi_trace_norm: f64,
    pub d_in: usize,
}

pub fn diamond_bounds(pair: &ChannelPair) -> Result<DiamondBracket> {
    let choi_trace_norm = choi_difference_trace_norm(pair)?;
    let d_in = pair.dim_in();
    Ok(DiamondBracket {
        lower: choi_trace_norm / d_in as f64,
        upper: choi_trace_norm,
        choi_trace_norm,
        d_in,
    })
}

/// One-shot equal-prior discrimination bracket 1/2 + bracket/4, clamped to
/// [1/2, 1]. `channels_assumed` is false when either map fails trace
/// preservation, in which case the operational reading is advisory only.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SuccessBracket {
    pub lower: f64,
    pub upper: f64,
    pub channels_assumed: bool,
}

pub fn success_probability_bracket(pair: &ChannelPair) -> Result<SuccessBracket> {
    let bracket = diamond_bounds(pair)?;
    let clamp = |p: f64| p.clamp(0.5, 1.0);
    Ok(SuccessBracket {
        lower: clamp(0.5 + bracket.lower / 4.0),
        upper: clamp(0.5 + bracket.upper / 4.0),
        channels_assumed: pair.first().is_trace_preserving(DEFAULT_TOL)
            && pair.second().is_trace_preserving(DEFAULT_TOL),
    })
}
