use std::collections::BTreeSet;

use serde::Serialize;

use crate::subgroup::coset::CosetTable;
use crate::word::{Letter, Word};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum BasisKind {
    Schreier,
    MuN,
    Chi,
}

/// Labelled generating words of a finite-index subgroup.
#[derive(Clone, Debug, Serialize)]
pub struct SubgroupBasis {
    #[serde(skip)]
    pub table: CosetTable,
    pub generators: Vec<(String, Word)>,
    pub kind: BasisKind,
}

impl SubgroupBasis {
    pub fn rank(&self) -> usize {
        self.generators.len()
    }

    /// `i(r - 1) + 1`, the rank of an index-`i` subgroup of a free group of
    /// rank `r`.
    pub fn free_rank_formula(&self) -> usize {
        let r = self.table.presentation().rank();
        let i = self.table.index();
        (i * r + 1).saturating_sub(i)
    }

    pub fn word_set(&self) -> BTreeSet<Word> {
        self.generators.iter().map(|(_, w)| w.clone()).collect()
    }

    pub fn word(&self, label: &str) -> Option<&Word> {
        self.generators.iter().find(|(l, _)| l == label).map(|(_, w)| w)
    }

    /// Every generator traces from coset 0 back to coset 0.
    pub fn all_in_subgroup(&self) -> bool {
        self.generators.iter().all(|(_, w)| self.table.contains(w))
    }
}

/// Reidemeister–Schreier generators `t·x·rep(t·x)⁻¹` over transversal words
/// `t` and positive generators `x`, trivial ones dropped. Labels are
/// `s<coset>_<generator>`.
pub fn schreier_generators(table: &CosetTable) -> SubgroupBasis {
    let rank = table.presentation().rank();
    let transversal = table.transversal();
    let mut generators = Vec::new();
    for (c, t) in transversal.iter().enumerate() {
        for k in 0..rank {
            let d = table.act(c, Letter::pos(k));
            let x = Word::generator(rank, k).expect("in range");
            let w = t
                .multiply(&x)
                .and_then(|tx| tx.multiply(&transversal[d].invert()))
                .expect("same alphabet");
            if !w.is_identity() {
                generators.push((format!("s{c}_{k}"), w));
            }
        }
    }
    SubgroupBasis {
        table: table.clone(),
        generators,
        kind: BasisKind::Schreier,
    }
}
