pub mod cli;
pub mod error;
pub mod linalg;
pub mod orbit;
pub mod projmod;
pub mod report;
pub mod ring;
pub mod symbol;
pub mod witt;

pub use error::{Error, Result};
pub use ring::{Elem, Ring, RingElement};

/// Outcome of a check. `Falsified` only comes from replaying an explicit
/// counterexample, never from an exhausted search.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Verdict {
    Verified,
    Falsified,
    Inconclusive,
}

impl Verdict {
    pub fn as_str(&self) -> &'static str {
        match self {
            Verdict::Verified => "Verified",
            Verdict::Falsified => "Falsified",
            Verdict::Inconclusive => "Inconclusive",
        }
    }

    pub fn exit_code(&self) -> i32 {
        match self {
            Verdict::Verified => 0,
            Verdict::Falsified => 1,
            Verdict::Inconclusive => 2,
        }
    }
}
