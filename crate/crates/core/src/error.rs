//! Crate-wide error type.

use crate::groups::GroupDescriptor;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("window `{window}` is not a valid element of {descriptor}: {reason}")]
    InvalidWindow {
        descriptor: GroupDescriptor,
        window: String,
        reason: String,
    },

    #[error("elements belong to different groups: {0} vs {1}")]
    DescriptorMismatch(GroupDescriptor, GroupDescriptor),

    #[error("statistic `{stat}` is not defined on {descriptor}")]
    WrongFamily {
        stat: String,
        descriptor: GroupDescriptor,
    },

    #[error("generator index {index} is out of range for {descriptor}")]
    InvalidGenerator {
        descriptor: GroupDescriptor,
        index: usize,
    },

    #[error("generator subset {subset} is not valid for {descriptor}")]
    InvalidGeneratorSet {
        descriptor: GroupDescriptor,
        subset: String,
    },

    #[error("unknown statistic name `{0}`")]
    UnknownStatistic(String),

    #[error("index {index} is out of range for a group of order {order}")]
    IndexOutOfRange { index: u64, order: u64 },

    #[error("enumeration of {what} needs {needed} elements but the cap is {cap}")]
    CapExceeded {
        what: String,
        needed: String,
        cap: u64,
    },

    #[error("group order exceeds the 64-bit index space")]
    OrderOverflow,

    #[error("the pair is not symmetric; no value-exchanging involution exists")]
    NotSymmetric,

    #[error("map is not an involution: index {0} is not restored after two applications")]
    NotInvolution(u64),

    #[error("function is not in the rank class: {0}")]
    NotInClass(String),

    #[error("functions live on universes of different sizes: {0} vs {1}")]
    UniverseMismatch(u64, u64),

    #[error("invalid poset: {0}")]
    InvalidPoset(String),

    #[error("invalid Coxeter matrix: {0}")]
    InvalidCoxeterMatrix(String),

    #[error("{0}")]
    Unsupported(String),

    #[error("parse error: {0}")]
    Parse(String),
}
