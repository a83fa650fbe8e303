//! Coset tables of finite-index subgroups.

use std::collections::VecDeque;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::finite::FiniteGroup;
use crate::presentation::FpPresentation;
use crate::word::{Letter, Word};

/// Default coset cap for Todd–Coxeter.
pub const DEFAULT_MAX_COSETS: usize = 1_000_000;

/// Right action of the generators on the cosets of a subgroup, together with
/// a prefix-closed transversal. Coset 0 is the subgroup.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CosetTable {
    #[serde(skip)]
    presentation: FpPresentation,
    index: usize,
    /// `action[c][2k]` is `c · g_k`, `action[c][2k + 1]` is `c · g_k⁻¹`.
    action: Vec<Vec<usize>>,
    transversal: Vec<Word>,
}

#[inline]
fn column(l: Letter) -> usize {
    2 * l.gen + usize::from(l.inverse)
}

impl CosetTable {
    /// Renumbers cosets in breadth-first order over positive generators from
    /// coset 0 and builds the matching transversal. `action` must be a
    /// complete table of permutations.
    fn from_action(presentation: FpPresentation, action: Vec<Vec<usize>>) -> Self {
        let rank = presentation.rank();
        let n = action.len();
        let mut new_index = vec![usize::MAX; n];
        let mut order = vec![0usize];
        let mut words = vec![Word::identity(rank)];
        new_index[0] = 0;
        let mut queue = VecDeque::from([0usize]);
        while let Some(c) = queue.pop_front() {
            for k in 0..rank {
                let d = action[c][2 * k];
                if new_index[d] == usize::MAX {
                    new_index[d] = order.len();
                    order.push(d);
                    let w = words[new_index[c]]
                        .multiply(&Word::generator(rank, k).expect("in range"))
                        .expect("same alphabet");
                    words.push(w);
                    queue.push_back(d);
                }
            }
        }
        debug_assert_eq!(order.len(), n, "positive generators reach every coset");
        let action = order
            .iter()
            .map(|&c| action[c].iter().map(|&d| new_index[d]).collect())
            .collect();
        CosetTable {
            presentation,
            index: n,
            action,
            transversal: words,
        }
    }

    pub fn presentation(&self) -> &FpPresentation {
        &self.presentation
    }

    pub fn index(&self) -> usize {
        self.index
    }

    pub fn transversal(&self) -> &[Word] {
        &self.transversal
    }

    pub fn act(&self, coset: usize, letter: Letter) -> usize {
        self.action[coset][column(letter)]
    }

    /// Coset reached from `coset` by reading `word` left to right.
    pub fn trace(&self, coset: usize, word: &Word) -> usize {
        word.letters().iter().fold(coset, |c, &l| self.act(c, l))
    }

    /// Whether `word` lies in the subgroup.
    pub fn contains(&self, word: &Word) -> bool {
        self.trace(0, word) == 0
    }

    /// Checks the table invariants: inverse columns agree, each generator acts
    /// as a permutation, relators act trivially, and the transversal is
    /// prefix-closed with `transversal[c]` leading to coset `c`.
    pub fn validate(&self) -> bool {
        let rank = self.presentation.rank();
        let n = self.index;
        for c in 0..n {
            for k in 0..rank {
                let d = self.action[c][2 * k];
                if d >= n || self.action[d][2 * k + 1] != c {
                    return false;
                }
            }
        }
        let relators_ok = (0..n).all(|c| self.presentation.relators().iter().all(|r| self.trace(c, r) == c));
        let transversal_ok = self.transversal.first().is_some_and(Word::is_identity)
            && self.transversal.iter().enumerate().all(|(c, w)| {
                self.trace(0, w) == c && {
                    let l = w.letters();
                    l.is_empty() || {
                        let prefix = Word::reduce(rank, l[..l.len() - 1].to_vec()).expect("in range");
                        self.transversal.contains(&prefix)
                    }
                }
            });
        relators_ok && transversal_ok
    }
}

/// Coset table of the kernel of `P → G` given by generator images. Cosets are
/// the elements of the image, discovered breadth-first.
pub fn kernel_coset_table(p: &FpPresentation, g: &FiniteGroup, images: &[usize]) -> Result<CosetTable> {
    if images.len() != p.rank() {
        return Err(Error::InvalidParameter(format!(
            "{} images for {} generators",
            images.len(),
            p.rank()
        )));
    }
    if let Some(&bad) = images.iter().find(|&&x| x >= g.order()) {
        return Err(Error::InvalidParameter(format!("element {bad} not in group")));
    }
    if let Some(r) = p.relators().iter().position(|r| g.evaluate(images, r) != 0) {
        return Err(Error::RelatorViolated { relator: r });
    }
    let mut coset_of = vec![usize::MAX; g.order()];
    let mut elements = vec![0usize];
    coset_of[0] = 0;
    let mut queue = VecDeque::from([0usize]);
    while let Some(x) = queue.pop_front() {
        for &s in images {
            let y = g.mul(x, s);
            if coset_of[y] == usize::MAX {
                coset_of[y] = elements.len();
                elements.push(y);
                queue.push_back(y);
            }
        }
    }
    let action = elements
        .iter()
        .map(|&x| {
            images
                .iter()
                .flat_map(|&s| [coset_of[g.mul(x, s)], coset_of[g.mul(x, g.inv(s))]])
                .collect()
        })
        .collect();
    Ok(CosetTable::from_action(p.clone(), action))
}

const UNDEF: usize = usize::MAX;

/// Hasselgrove–Leech–Trotter coset enumeration with full coincidence
/// processing.
struct Enumerator {
    cols: usize,
    table: Vec<Vec<usize>>,
    parent: Vec<usize>,
    max_cosets: usize,
    pending: VecDeque<usize>,
}

impl Enumerator {
    fn new(rank: usize, max_cosets: usize) -> Self {
        Enumerator {
            cols: 2 * rank,
            table: vec![vec![UNDEF; 2 * rank]],
            parent: vec![0],
            max_cosets,
            pending: VecDeque::new(),
        }
    }

    fn is_live(&self, c: usize) -> bool {
        self.parent[c] == c
    }

    fn rep(&mut self, c: usize) -> usize {
        let mut r = c;
        while self.parent[r] != r {
            r = self.parent[r];
        }
        let mut c = c;
        while self.parent[c] != r {
            let next = self.parent[c];
            self.parent[c] = r;
            c = next;
        }
        r
    }

    fn define(&mut self, c: usize, x: usize) -> Result<()> {
        if self.table.len() >= self.max_cosets {
            return Err(Error::CosetLimitExceeded {
                max_cosets: self.max_cosets,
            });
        }
        let d = self.table.len();
        self.table.push(vec![UNDEF; self.cols]);
        self.parent.push(d);
        self.table[c][x] = d;
        self.table[d][x ^ 1] = c;
        Ok(())
    }

    fn merge(&mut self, a: usize, b: usize) {
        let (a, b) = (self.rep(a), self.rep(b));
        if a == b {
            return;
        }
        let (lo, hi) = (a.min(b), a.max(b));
        self.parent[hi] = lo;
        self.pending.push_back(hi);
    }

    fn coincidence(&mut self, a: usize, b: usize) {
        self.merge(a, b);
        while let Some(dead) = self.pending.pop_front() {
            for x in 0..self.cols {
                let d = self.table[dead][x];
                if d == UNDEF {
                    continue;
                }
                if self.table[d][x ^ 1] == dead {
                    self.table[d][x ^ 1] = UNDEF;
                }
                let mu = self.rep(dead);
                let nu = self.rep(d);
                if self.table[mu][x] != UNDEF {
                    let t = self.table[mu][x];
                    self.merge(nu, t);
                } else if self.table[nu][x ^ 1] != UNDEF {
                    let t = self.table[nu][x ^ 1];
                    self.merge(mu, t);
                } else {
                    self.table[mu][x] = nu;
                    self.table[nu][x ^ 1] = mu;
                }
            }
        }
    }

    fn scan_and_fill(&mut self, c: usize, word: &[usize]) -> Result<()> {
        let (mut f, mut b) = (c, c);
        let (mut i, mut j) = (0isize, word.len() as isize - 1);
        loop {
            while i <= j && self.table[f][word[i as usize]] != UNDEF {
                f = self.table[f][word[i as usize]];
                i += 1;
            }
            if i > j {
                if f != b {
                    self.coincidence(f, b);
                }
                return Ok(());
            }
            while j >= i && self.table[b][word[j as usize] ^ 1] != UNDEF {
                b = self.table[b][word[j as usize] ^ 1];
                j -= 1;
            }
            if j < i {
                self.coincidence(f, b);
                return Ok(());
            }
            if i == j {
                let x = word[i as usize];
                self.table[f][x] = b;
                self.table[b][x ^ 1] = f;
                return Ok(());
            }
            self.define(f, word[i as usize])?;
        }
    }
}

/// Enumerates the cosets of the subgroup generated by `subgroup_words`.
/// Returns [`Error::CosetLimitExceeded`] when more than `max_cosets` cosets
/// are defined; that outcome says nothing about the index.
pub fn todd_coxeter(p: &FpPresentation, subgroup_words: &[Word], max_cosets: usize) -> Result<CosetTable> {
    let rank = p.rank();
    for w in subgroup_words {
        if w.rank() != rank {
            return Err(Error::AlphabetMismatch {
                left: w.rank(),
                right: rank,
            });
        }
    }
    let encode = |w: &Word| -> Vec<usize> { w.letters().iter().map(|&l| column(l)).collect() };
    let relators: Vec<Vec<usize>> = p.relators().iter().map(encode).collect();
    let mut e = Enumerator::new(rank, max_cosets.max(1));

    for w in subgroup_words {
        e.scan_and_fill(0, &encode(w))?;
    }
    let mut c = 0;
    while c < e.table.len() {
        if e.is_live(c) {
            for r in &relators {
                e.scan_and_fill(c, r)?;
                if !e.is_live(c) {
                    break;
                }
            }
        }
        if e.is_live(c) {
            for x in 0..e.cols {
                if e.table[c][x] == UNDEF {
                    e.define(c, x)?;
                }
            }
        }
        c += 1;
    }

    let live: Vec<usize> = (0..e.table.len()).filter(|&c| e.is_live(c)).collect();
    let mut compact = vec![UNDEF; e.table.len()];
    for (i, &c) in live.iter().enumerate() {
        compact[c] = i;
    }
    let mut action = Vec::with_capacity(live.len());
    for &c in &live {
        let row: Vec<usize> = (0..e.cols)
            .map(|x| {
                let d = e.table[c][x];
                compact[e.rep(d)]
            })
            .collect();
        action.push(row);
    }
    Ok(CosetTable::from_action(p.clone(), action))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::finite::parse_group;
    use crate::presentation::surface_group;

    fn words(rank: usize, ws: &[&str]) -> Vec<Word> {
        ws.iter().map(|w| Word::parse(rank, w).unwrap()).collect()
    }

    #[test]
    fn kernel_tables() {
        let f2 = FpPresentation::free(2);
        let c2 = parse_group("C2").unwrap();
        let t = kernel_coset_table(&f2, &c2, &[1, 0]).unwrap();
        assert_eq!(t.index(), 2);
        assert!(t.validate());

        let c5 = parse_group("C5").unwrap();
        let t = kernel_coset_table(&f2, &c5, &[1, 0]).unwrap();
        assert_eq!(t.index(), 5);
        let expected: Vec<Word> = (0..5).map(|i| Word::from_powers(2, &[(0, i)]).unwrap()).collect();
        assert_eq!(t.transversal(), expected.as_slice());

        let f4 = FpPresentation::free(4);
        let t = kernel_coset_table(&f4, &c2, &[1, 1, 1, 0]).unwrap();
        assert_eq!(t.index(), 2);
        assert_eq!(t.transversal(), words(4, &["", "a"]).as_slice());
    }

    #[test]
    fn kernel_table_rejects_bad_maps() {
        let s1 = surface_group(1);
        let s3 = parse_group("S3").unwrap();
        // (1 2) and (1 2 3) do not commute.
        assert_eq!(kernel_coset_table(&s1, &s3, &[1, 2]), Err(Error::RelatorViolated { relator: 0 }));
        assert!(kernel_coset_table(&s1, &s3, &[1]).is_err());
    }

    #[test]
    fn todd_coxeter_examples() {
        let p = FpPresentation::parse("gens: 1\nrel: a a a a a").unwrap();
        let t = todd_coxeter(&p, &[], 1000).unwrap();
        assert_eq!(t.index(), 5);
        assert!(t.validate());

        let s1 = surface_group(1);
        let t = todd_coxeter(&s1, &words(2, &["a a", "b"]), 1000).unwrap();
        assert_eq!(t.index(), 2);
        assert!(t.validate());

        let f2 = FpPresentation::free(2);
        let t = todd_coxeter(&f2, &words(2, &["a", "b b", "b a B"]), 1000).unwrap();
        assert_eq!(t.index(), 2);
        assert!(t.contains(&Word::parse(2, "a b a B").unwrap()));
        assert!(!t.contains(&Word::parse(2, "b").unwrap()));
        let k = kernel_coset_table(&f2, &parse_group("C2").unwrap(), &[0, 1]).unwrap();
        for w in ["a", "b", "a b", "b b a b", "B a B"] {
            let w = Word::parse(2, w).unwrap();
            assert_eq!(t.contains(&w), k.contains(&w), "{w}");
        }
    }

    #[test]
    fn todd_coxeter_finite_groups() {
        // S3 = < a, b | a^2, b^3, (ab)^2 >
        let s3 = FpPresentation::parse("gens: 2\nrel: a a\nrel: b b b\nrel: a b a b").unwrap();
        assert_eq!(todd_coxeter(&s3, &[], 1000).unwrap().index(), 6);
        assert_eq!(todd_coxeter(&s3, &words(2, &["a"]), 1000).unwrap().index(), 3);
        // A5 = < a, b | a^2, b^3, (ab)^5 >
        let a5 = FpPresentation::parse("gens: 2\nrel: a a\nrel: b b b\nrel: a b a b a b a b a b").unwrap();
        let t = todd_coxeter(&a5, &[], 10_000).unwrap();
        assert_eq!(t.index(), 60);
        assert!(t.validate());
        // Q8 = < a, b | a^4, a^2 B^2, a b a B >
        let q8 = FpPresentation::parse("gens: 2\nrel: a a a a\nrel: a a B B\nrel: a b a B").unwrap();
        assert_eq!(todd_coxeter(&q8, &[], 1000).unwrap().index(), 8);
    }

    #[test]
    fn coset_limit_is_inconclusive() {
        let f2 = FpPresentation::free(2);
        assert_eq!(
            todd_coxeter(&f2, &[], 500),
            Err(Error::CosetLimitExceeded { max_cosets: 500 })
        );
    }
}
