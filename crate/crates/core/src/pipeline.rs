//! End-to-end computation: preprocessing shared by all backends, the chosen
//! type-1 backend, the type-2 pass and report assembly.

use std::fmt;
use std::str::FromStr;

use crate::classify::{build_tables, classify_pivots, ClassifyTables};
use crate::error::Result;
use crate::index::build_index;
use crate::palindromes::{compute_buckets, compute_pals, PalBuckets, PalsArray};
use crate::predsucc::PredSuccBackend;
use crate::sagp::{PivotType, Sagp, SagpReport, MIN_SAGP_LEN};
use crate::text::Text;
use crate::type1::{
    find_type1_naive, find_type1_predsucc, find_type1_stree, find_type1_traverse, AugmentedIndex,
    QueryStats, StreeStats, TraversalStats,
};
use crate::type2::{build_findr, find_type2};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Backend {
    Naive,
    Traverse,
    PredSucc(PredSuccBackend),
    SuffixTree,
}

impl Backend {
    pub const ALL: [Backend; 6] = [
        Backend::Naive,
        Backend::Traverse,
        Backend::PredSucc(PredSuccBackend::Baseline),
        Backend::PredSucc(PredSuccBackend::Veb),
        Backend::PredSucc(PredSuccBackend::YFast),
        Backend::SuffixTree,
    ];

    pub fn name(self) -> String {
        match self {
            Backend::Naive => "naive".into(),
            Backend::Traverse => "traverse".into(),
            Backend::PredSucc(p) => format!("predsucc:{p}"),
            Backend::SuffixTree => "stree".into(),
        }
    }
}

impl fmt::Display for Backend {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

impl FromStr for Backend {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "naive" => Ok(Backend::Naive),
            "traverse" => Ok(Backend::Traverse),
            "stree" | "suffix-tree" => Ok(Backend::SuffixTree),
            "predsucc" => Ok(Backend::PredSucc(PredSuccBackend::YFast)),
            _ => match s.strip_prefix("predsucc:") {
                Some(rest) => rest.parse().map(Backend::PredSucc),
                None => Err(format!(
                    "unknown backend `{s}` (expected naive, traverse, predsucc:baseline, predsucc:veb, predsucc:yfast or stree)"
                )),
            },
        }
    }
}

/// Everything computed before the type-1 backend runs.
#[derive(Debug, Clone)]
pub struct Prepared<'a> {
    pub text: &'a Text,
    pub pals: PalsArray,
    pub buckets: PalBuckets,
    pub tables: ClassifyTables,
    pub kinds: Vec<PivotType>,
}

impl<'a> Prepared<'a> {
    pub fn new(text: &'a Text) -> Self {
        let pals = compute_pals(text);
        let buckets = compute_buckets(&pals);
        let tables = build_tables(text);
        let kinds = classify_pivots(text, &pals, &tables);
        Prepared {
            text,
            pals,
            buckets,
            tables,
            kinds,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Type1Stats {
    None,
    Traverse(TraversalStats),
    Queries(QueryStats),
    Stree(StreeStats),
}

impl Type1Stats {
    /// Suffix array entries visited per processed pivot; traverse only.
    pub fn entries_per_pivot(&self) -> Option<f64> {
        match self {
            Type1Stats::Traverse(s) => Some(s.entries_per_pivot()),
            _ => None,
        }
    }

    pub fn entries_per_output(&self) -> Option<f64> {
        match self {
            Type1Stats::Traverse(s) => Some(s.entries_per_output()),
            _ => None,
        }
    }
}

#[derive(Debug, Clone)]
pub struct Type1Output {
    pub sagps: Vec<Sagp>,
    pub stats: Type1Stats,
}

pub fn compute_type1(prep: &Prepared<'_>, backend: Backend) -> Result<Type1Output> {
    let (sagps, stats) = match backend {
        // no LCP range-minimum structure needed
        Backend::SuffixTree => {
            let idx = build_index(prep.text.augmented().as_slice())?;
            let (s, st) = find_type1_stree(prep.text, &idx, &prep.buckets, &prep.kinds)?;
            (s, Type1Stats::Stree(st))
        }
        Backend::Naive => {
            let ai = AugmentedIndex::new(prep.text)?;
            (find_type1_naive(&ai, &prep.pals, &prep.kinds), Type1Stats::None)
        }
        Backend::Traverse => {
            let ai = AugmentedIndex::new(prep.text)?;
            let (s, st) = find_type1_traverse(&ai, &prep.buckets, &prep.kinds);
            (s, Type1Stats::Traverse(st))
        }
        Backend::PredSucc(p) => {
            let ai = AugmentedIndex::new(prep.text)?;
            let (s, st) = find_type1_predsucc(&ai, &prep.buckets, &prep.kinds, p)?;
            (s, Type1Stats::Queries(st))
        }
    };
    Ok(Type1Output { sagps, stats })
}

pub fn compute_type2(prep: &Prepared<'_>) -> Vec<Sagp> {
    let findr = build_findr(prep.text, &prep.tables);
    find_type2(prep.text, &prep.pals, &prep.kinds, &prep.tables, &findr)
}

pub fn compute_report_with_stats(text: &Text, backend: Backend) -> Result<(SagpReport, Type1Stats)> {
    let n = text.len();
    if n < MIN_SAGP_LEN {
        return Ok((SagpReport::assemble(n, &[], Vec::new()), Type1Stats::None));
    }
    let prep = Prepared::new(text);
    let Type1Output { mut sagps, stats } = compute_type1(&prep, backend)?;
    sagps.extend(compute_type2(&prep));
    Ok((SagpReport::assemble(n, &prep.kinds, sagps), stats))
}

pub fn compute_report(text: &Text, backend: Backend) -> Result<SagpReport> {
    compute_report_with_stats(text, backend).map(|(r, _)| r)
}
