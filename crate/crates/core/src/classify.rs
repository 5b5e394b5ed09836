//! `LMost` / `NextPos` tables and the type-1 / type-2 pivot partition.

use crate::palindromes::PalsArray;
use crate::sagp::PivotType;
use crate::text::Text;
use crate::INF;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassifyTables {
    /// Indexed by symbol rank; `INF` for ranks not occurring in the text.
    lmost: Vec<usize>,
    /// `nextpos[i - 1]` is the next position holding the same symbol, or `INF`.
    nextpos: Vec<usize>,
}

impl ClassifyTables {
    pub fn lmost(&self, rank: u32) -> usize {
        self.lmost.get(rank as usize).copied().unwrap_or(INF)
    }

    #[inline]
    pub fn lmost_at(&self, text: &Text, i: usize) -> usize {
        self.lmost[text.at(i) as usize]
    }

    #[inline]
    pub fn nextpos(&self, i: usize) -> usize {
        self.nextpos[i - 1]
    }

    pub fn nextpos_values(&self) -> &[usize] {
        &self.nextpos
    }
}

pub fn build_tables(text: &Text) -> ClassifyTables {
    let n = text.len();
    let mut lmost = vec![INF; text.rank_bound()];
    let mut nextpos = vec![INF; n];
    for i in (1..=n).rev() {
        let c = text.at(i) as usize;
        nextpos[i - 1] = lmost[c];
        lmost[c] = i;
    }
    ClassifyTables { lmost, nextpos }
}

/// Pivot `i` is type-1 iff its maximal palindrome is non-empty, is followed by
/// a symbol, and that symbol already occurs before `i - Pals[i]`.
pub fn classify_pivots(text: &Text, pals: &PalsArray, tables: &ClassifyTables) -> Vec<PivotType> {
    let n = text.len();
    (1..=n)
        .map(|i| {
            let p = pals.radius(i);
            if p >= 1 && i + p < n && tables.lmost_at(text, i + p + 1) < i - p {
                PivotType::Type1
            } else {
                PivotType::Type2
            }
        })
        .collect()
}
