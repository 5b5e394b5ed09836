//! Insert-only integer sets over `[1, U]` with predecessor / successor queries.

mod veb;
mod yfast;

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

pub use veb::VebTree;
pub use yfast::YFastTrie;

use crate::error::{Result, SagpError};

pub trait PredSucc {
    fn with_universe(universe: usize) -> Self
    where
        Self: Sized;

    fn universe(&self) -> usize;

    fn len(&self) -> usize;

    fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Returns whether `x` was newly added.
    fn insert(&mut self, x: usize) -> Result<bool>;

    /// Largest element strictly smaller than `x`.
    fn predecessor(&self, x: usize) -> Result<Option<usize>>;

    /// Smallest element strictly larger than `x`.
    fn successor(&self, x: usize) -> Result<Option<usize>>;
}

#[inline]
pub(crate) fn check_universe(x: usize, universe: usize) -> Result<()> {
    if x == 0 || x > universe {
        Err(SagpError::OutOfUniverse { value: x, universe })
    } else {
        Ok(())
    }
}

/// A balanced search tree; O(log m) per operation.
#[derive(Debug, Clone, Default)]
pub struct OrderedSetBaseline {
    universe: usize,
    set: BTreeSet<usize>,
}

impl PredSucc for OrderedSetBaseline {
    fn with_universe(universe: usize) -> Self {
        OrderedSetBaseline {
            universe,
            set: BTreeSet::new(),
        }
    }

    fn universe(&self) -> usize {
        self.universe
    }

    fn len(&self) -> usize {
        self.set.len()
    }

    fn insert(&mut self, x: usize) -> Result<bool> {
        check_universe(x, self.universe)?;
        Ok(self.set.insert(x))
    }

    fn predecessor(&self, x: usize) -> Result<Option<usize>> {
        check_universe(x, self.universe)?;
        Ok(self.set.range(..x).next_back().copied())
    }

    fn successor(&self, x: usize) -> Result<Option<usize>> {
        check_universe(x, self.universe)?;
        Ok(self.set.range(x + 1..).next().copied())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PredSuccBackend {
    Baseline,
    Veb,
    YFast,
}

impl PredSuccBackend {
    pub const ALL: [PredSuccBackend; 3] = [
        PredSuccBackend::Baseline,
        PredSuccBackend::Veb,
        PredSuccBackend::YFast,
    ];

    pub fn name(self) -> &'static str {
        match self {
            PredSuccBackend::Baseline => "baseline",
            PredSuccBackend::Veb => "veb",
            PredSuccBackend::YFast => "yfast",
        }
    }
}

impl fmt::Display for PredSuccBackend {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for PredSuccBackend {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "baseline" | "rb" | "btree" => Ok(PredSuccBackend::Baseline),
            "veb" => Ok(PredSuccBackend::Veb),
            "yfast" | "y-fast" => Ok(PredSuccBackend::YFast),
            other => Err(format!("unknown predecessor backend `{other}`")),
        }
    }
}
