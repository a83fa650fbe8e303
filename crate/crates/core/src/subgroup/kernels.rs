//! The two explicit kernels used in the reduction to the thrice-punctured line.
//!
//! * `F_2 → Z/N`, `γ0 ↦ 1`, `γ1 ↦ 0`: the kernel is free on `γ0^N` and the
//!   conjugates `γ0^i γ1 γ0^-i` for `0 ≤ i < N`.
//! * `χ: F_{2g+1+n} → Z/2`, sending `y_1 .. y_{2g+1}` to 1 and the remaining
//!   `y_i` to 0: the kernel is free on the `4g + 2n + 1` words
//!
//!   | label  | word          | range                  |
//!   |--------|---------------|------------------------|
//!   | `g1i`  | `y1 yi`       | `i = 1 ..= 2g+1`       |
//!   | `gj1`  | `yj y1⁻¹`     | `j = 2 ..= 2g+1`       |
//!   | `yi`   | `yi`          | `i = 2g+2 ..= 2g+1+n`  |
//!   | `ci`   | `y1 yi y1⁻¹`  | `i = 2g+2 ..= 2g+1+n`  |
//!
//! Two-digit indices are separated by `_` (`g1_11`, `g11_1`).

use serde::Serialize;

use crate::error::{Error, Result};
use crate::finite::parse_group;
use crate::presentation::FpPresentation;
use crate::subgroup::coset::kernel_coset_table;
use crate::subgroup::schreier::{BasisKind, SubgroupBasis};
use crate::word::{Letter, Word};

/// The literal basis `{γ0^N} ∪ {γ0^i γ1 γ0^-i}` of the kernel of
/// `F_2 → Z/N`. Labels: `g0^N` and `c0 .. c(N-1)`.
pub fn mu_n_kernel_basis(n: usize) -> Result<SubgroupBasis> {
    if n == 0 {
        return Err(Error::InvalidParameter("N must be positive".into()));
    }
    let f2 = FpPresentation::with_names(vec!["γ0".into(), "γ1".into()], Vec::new(), Vec::new())?;
    let cyclic = parse_group(&format!("C{n}"))?;
    let gamma0 = cyclic.generators().first().copied().unwrap_or(0);
    let table = kernel_coset_table(&f2, &cyclic, &[gamma0, 0])?;

    let g0 = Word::generator(2, 0)?;
    let g1 = Word::generator(2, 1)?;
    let mut generators = vec![(format!("g0^{n}"), g0.pow(n as i64))];
    for i in 0..n {
        generators.push((format!("c{i}"), g1.conjugate(&g0.pow(i as i64))?));
    }
    Ok(SubgroupBasis {
        table,
        generators,
        kind: BasisKind::MuN,
    })
}

/// One factor of a rewritten word: basis element `index`, possibly inverted.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct BasisFactor {
    pub index: usize,
    pub inverse: bool,
}

/// The kernel of the parity map `χ` on `F_{2g+1+n}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ChiKernel {
    genus: usize,
    punctures: usize,
}

impl ChiKernel {
    pub fn new(genus: usize, punctures: usize) -> Result<Self> {
        if genus == 0 {
            return Err(Error::InvalidParameter(
                "the hyperelliptic construction needs genus >= 1".into(),
            ));
        }
        Ok(ChiKernel { genus, punctures })
    }

    pub fn genus(&self) -> usize {
        self.genus
    }

    pub fn punctures(&self) -> usize {
        self.punctures
    }

    /// Rank of the ambient free group, `2g + 1 + n`.
    pub fn ambient_rank(&self) -> usize {
        self.odd() + self.punctures
    }

    /// Number of generators with odd parity, `2g + 1`.
    fn odd(&self) -> usize {
        2 * self.genus + 1
    }

    pub fn basis_len(&self) -> usize {
        4 * self.genus + 2 * self.punctures + 1
    }

    pub fn ambient(&self) -> FpPresentation {
        let names = (1..=self.ambient_rank()).map(|i| format!("y{i}")).collect();
        FpPresentation::with_names(names, Vec::new(), Vec::new()).expect("valid names")
    }

    // Positions in the basis list, with 1-based generator numbers.
    fn g1(&self, i: usize) -> usize {
        i - 1
    }
    fn gj1(&self, j: usize) -> usize {
        self.odd() + j - 2
    }
    fn y(&self, i: usize) -> usize {
        2 * self.odd() - 1 + i - self.odd() - 1
    }
    fn c(&self, i: usize) -> usize {
        2 * self.odd() - 1 + self.punctures + i - self.odd() - 1
    }

    pub fn labels(&self) -> Vec<String> {
        let pair = |a: usize, b: usize| {
            if a >= 10 || b >= 10 {
                format!("g{a}_{b}")
            } else {
                format!("g{a}{b}")
            }
        };
        let m = self.odd();
        let mut out: Vec<String> = (1..=m).map(|i| pair(1, i)).collect();
        out.extend((2..=m).map(|j| pair(j, 1)));
        out.extend((m + 1..=self.ambient_rank()).map(|i| format!("y{i}")));
        out.extend((m + 1..=self.ambient_rank()).map(|i| format!("c{i}")));
        out
    }

    /// The basis words, in label order.
    pub fn words(&self) -> Vec<Word> {
        let r = self.ambient_rank();
        let m = self.odd();
        let y = |i: usize| Word::generator(r, i - 1).expect("in range");
        let y1 = y(1);
        let mut out: Vec<Word> = (1..=m).map(|i| y1.multiply(&y(i)).expect("same rank")).collect();
        out.extend((2..=m).map(|j| y(j).multiply(&y1.invert()).expect("same rank")));
        out.extend((m + 1..=r).map(y));
        out.extend((m + 1..=r).map(|i| y(i).conjugate(&y1).expect("same rank")));
        out
    }

    pub fn basis(&self) -> SubgroupBasis {
        let f = self.ambient();
        let c2 = parse_group("C2").expect("builtin");
        let odd = c2.generators()[0];
        let images: Vec<usize> = (0..self.ambient_rank())
            .map(|i| if i < self.odd() { odd } else { 0 })
            .collect();
        let table = kernel_coset_table(&f, &c2, &images).expect("free presentation");
        SubgroupBasis {
            table,
            generators: self.labels().into_iter().zip(self.words()).collect(),
            kind: BasisKind::Chi,
        }
    }

    /// Whether `w` has an even number of letters `y_i^±1` with `i ≤ 2g+1`.
    pub fn contains(&self, w: &Word) -> bool {
        w.letters().iter().filter(|l| l.gen < self.odd()).count() % 2 == 0
    }

    /// Factors a kernel word over the basis by induction on length:
    ///
    /// * a leading `y_j^±1` with `j ≥ 2g+2` is itself a basis element;
    /// * two leading odd letters `a b` give `(a y1⁻¹)(y1 b)`, each a basis
    ///   element or its inverse (or trivial);
    /// * an odd letter `a` followed by `y_j^±1` with `j ≥ 2g+2` gives
    ///   `(a y1⁻¹)(y1 y_j^±1 y1⁻¹)` and the induction continues on `y1 s'`.
    pub fn rewrite(&self, w: &Word) -> Result<Vec<BasisFactor>> {
        if w.rank() != self.ambient_rank() {
            return Err(Error::AlphabetMismatch {
                left: w.rank(),
                right: self.ambient_rank(),
            });
        }
        if !self.contains(w) {
            return Err(Error::NotInKernel);
        }
        let m = self.odd();
        let mut s: Vec<Letter> = w.letters().iter().rev().copied().collect();
        let mut out = Vec::new();
        let f = |index: usize, inverse: bool| BasisFactor { index, inverse };
        while let Some(a) = s.pop() {
            if a.gen >= m {
                out.push(f(self.y(a.gen + 1), a.inverse));
                continue;
            }
            let b = s.pop().expect("kernel words have an even number of odd letters");
            // a y1⁻¹
            let (i, j) = (a.gen + 1, b.gen + 1);
            if a.inverse {
                out.push(f(self.g1(i), true));
            } else if i != 1 {
                out.push(f(self.gj1(i), false));
            }
            if b.gen < m {
                // y1 b
                if !b.inverse {
                    out.push(f(self.g1(j), false));
                } else if j != 1 {
                    out.push(f(self.gj1(j), true));
                }
            } else {
                out.push(f(self.c(j), b.inverse));
                s.push(Letter::pos(0));
            }
        }
        Ok(out)
    }

    /// Multiplies out a factorisation.
    pub fn evaluate(&self, factors: &[BasisFactor]) -> Word {
        let words = self.words();
        factors.iter().fold(Word::identity(self.ambient_rank()), |acc, fct| {
            let w = &words[fct.index];
            let w = if fct.inverse { w.invert() } else { w.clone() };
            acc.multiply(&w).expect("same rank")
        })
    }

    /// Presentation of `Ker(χ)/H`, where `H` is normally generated by
    /// `g11` and `gj1 g1j` (`j = 2 ..= 2g+1`). With `fill_r1_sheet` the
    /// generator `y(2g+2)` is killed as well.
    pub fn hyperelliptic_quotient(&self, fill_r1_sheet: bool) -> Result<FpPresentation> {
        if fill_r1_sheet && self.punctures == 0 {
            return Err(Error::InvalidParameter(
                "filling the r1 sheet needs at least one puncture".into(),
            ));
        }
        let rank = self.basis_len();
        let gen = |k: usize| Word::generator(rank, k).expect("in range");
        let mut relators = vec![gen(self.g1(1))];
        for j in 2..=self.odd() {
            relators.push(gen(self.gj1(j)).multiply(&gen(self.g1(j)))?);
        }
        if fill_r1_sheet {
            relators.push(gen(self.y(self.odd() + 1)));
        }
        FpPresentation::with_names(self.labels(), relators, Vec::new())
    }
}

pub fn chi_kernel_basis(genus: usize, punctures: usize) -> Result<SubgroupBasis> {
    Ok(ChiKernel::new(genus, punctures)?.basis())
}

/// Factorisation of `w` as signed basis labels.
pub fn rewrite_in_chi_basis(genus: usize, punctures: usize, w: &Word) -> Result<Vec<(String, bool)>> {
    let k = ChiKernel::new(genus, punctures)?;
    let labels = k.labels();
    Ok(k.rewrite(w)?
        .into_iter()
        .map(|f| (labels[f.index].clone(), f.inverse))
        .collect())
}

pub fn hyperelliptic_quotient(genus: usize, punctures: usize, fill_r1_sheet: bool) -> Result<FpPresentation> {
    ChiKernel::new(genus, punctures)?.hyperelliptic_quotient(fill_r1_sheet)
}
