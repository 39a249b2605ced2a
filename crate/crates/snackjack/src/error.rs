use crate::game::{Hand, PackComposition};

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("not enough cards in the pack for this operation")]
    InsufficientCards,
    #[error("conditioning on a probability-zero event (no allowed downcard remains)")]
    UndefinedConditioning,
    #[error("action is not legal for this hand")]
    IllegalAction,
    #[error("argument outside the operation's domain: {0}")]
    Domain(String),
    #[error("strategy table has no entry for reachable decision point {hand:?} vs {upcard} on pack {pack:?}")]
    DefectiveTable {
        hand: Hand,
        upcard: u8,
        pack: PackComposition,
    },
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
}
