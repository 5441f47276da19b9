use alloc::string::String;
use alloc::vec::Vec;

use crate::finite::Violation;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("group mismatch")]
    GroupMismatch,
    #[error("embedding is not injective (scale must be positive)")]
    NotInjective,
    #[error("image leaves target group: {0}")]
    ImageLeavesTarget(String),
    #[error("cannot parse {what}: {input:?}")]
    Parse { what: &'static str, input: String },
    #[error("map not total")]
    MapNotTotal,
    #[error("table violates {} semiring axiom(s)", .0.len())]
    Axioms(Vec<Violation>),
    #[error("carrier has {size} elements; this operation is limited to {bound}")]
    CarrierTooLarge { size: usize, bound: usize },
    #[error("{0} requires simple")]
    NotSimple(&'static str),
    #[error("zero divisors present: cannot localize")]
    ZeroDivisors,
    #[error("not cancellative")]
    NotCancellative,
    #[error("not totally ordered")]
    NotTotallyOrdered,
    #[error("degenerate: fraction semifield collapses")]
    Degenerate,
    #[error("ambient semiring is not unitgenerated")]
    NotUnitgenerated,
    #[error("not a valuation subsemiring: {0}")]
    NotValuationSubsemiring(String),
    #[error("not a valuation order: axiom {0} fails")]
    NotValuationOrder(u8),
    #[error("value group not supported: {0}")]
    UnsupportedValueGroup(String),
    #[error("non-representable down-set: {0}")]
    NotRepresentable(String),
    #[error("prime mismatch: {0} vs {1}")]
    PrimeMismatch(u64, u64),
    #[error("parameter mismatch: (p, d) = ({0}, {1}) vs ({2}, {3})")]
    ParameterMismatch(u64, i64, u64, i64),
    #[error("valuation is not bounded by 1 on Z_({p}): w({witness}) > 1")]
    Unbounded { p: u64, witness: String },
    #[error("unsupported (p, d) = ({p}, {d}): {reason}")]
    Unsupported { p: u64, d: i64, reason: String },
    #[error("verification failed: {0}")]
    VerificationFailed(String),
    #[error("element {0} is not in the carrier")]
    NotInCarrier(String),
    #[error("carrier is not closed under the semiring operations")]
    NotClosed,
    #[error("precondition failed: {0}")]
    Precondition(String),
}

pub type Result<T> = core::result::Result<T, Error>;
