//! Words in a free group on a fixed, finite alphabet.
//!
//! A [`Word`] always carries the size of its alphabet and is always freely
//! reduced. Binary operations refuse to mix alphabets.
//!
//! Text form: for alphabets of at most 26 letters, `a`..`z` name the
//! generators and uppercase letters their inverses (`"a b A B"`). Larger
//! alphabets use `g0 g1 ...` with `G0 G1 ...` for inverses. The empty string
//! is the identity.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// One signed generator.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    pub gen: usize,
    pub inverse: bool,
}

impl Letter {
    pub fn new(gen: usize, inverse: bool) -> Self {
        Letter { gen, inverse }
    }

    pub fn pos(gen: usize) -> Self {
        Letter { gen, inverse: false }
    }

    pub fn neg(gen: usize) -> Self {
        Letter { gen, inverse: true }
    }

    pub fn inv(self) -> Self {
        Letter {
            gen: self.gen,
            inverse: !self.inverse,
        }
    }

    /// `+1` or `-1`.
    pub fn sign(self) -> i64 {
        if self.inverse {
            -1
        } else {
            1
        }
    }

    fn cancels(self, other: Letter) -> bool {
        self.gen == other.gen && self.inverse != other.inverse
    }
}

/// A freely reduced word over an alphabet of `rank` generators.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word {
    rank: usize,
    letters: Vec<Letter>,
}

impl Word {
    pub fn identity(rank: usize) -> Self {
        Word {
            rank,
            letters: Vec::new(),
        }
    }

    pub fn generator(rank: usize, gen: usize) -> Result<Self> {
        Self::reduce(rank, [Letter::pos(gen)])
    }

    /// Freely reduces a raw letter sequence with a single stack pass.
    pub fn reduce<I>(rank: usize, raw: I) -> Result<Self>
    where
        I: IntoIterator<Item = Letter>,
    {
        let mut letters: Vec<Letter> = Vec::new();
        for l in raw {
            if l.gen >= rank {
                return Err(Error::IndexOutOfRange { index: l.gen, rank });
            }
            push_reduced(&mut letters, l);
        }
        Ok(Word { rank, letters })
    }

    /// Builds a word from `(generator, exponent)` pairs, e.g. `[(0, 2), (1, -1)]`
    /// for `a a B`.
    pub fn from_powers(rank: usize, powers: &[(usize, i64)]) -> Result<Self> {
        let raw = powers.iter().flat_map(|&(g, e)| {
            std::iter::repeat_n(Letter::new(g, e < 0), e.unsigned_abs() as usize)
        });
        Self::reduce(rank, raw)
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn is_identity(&self) -> bool {
        self.letters.is_empty()
    }

    fn check_alphabet(&self, other: &Word) -> Result<()> {
        if self.rank != other.rank {
            return Err(Error::AlphabetMismatch {
                left: self.rank,
                right: other.rank,
            });
        }
        Ok(())
    }

    pub fn multiply(&self, other: &Word) -> Result<Word> {
        self.check_alphabet(other)?;
        let mut letters = self.letters.clone();
        for &l in &other.letters {
            push_reduced(&mut letters, l);
        }
        Ok(Word {
            rank: self.rank,
            letters,
        })
    }

    pub fn invert(&self) -> Word {
        Word {
            rank: self.rank,
            letters: self.letters.iter().rev().map(|l| l.inv()).collect(),
        }
    }

    /// `by · self · by⁻¹`.
    pub fn conjugate(&self, by: &Word) -> Result<Word> {
        by.multiply(self)?.multiply(&by.invert())
    }

    /// `self · other · self⁻¹ · other⁻¹`.
    pub fn commutator(&self, other: &Word) -> Result<Word> {
        self.multiply(other)?
            .multiply(&self.invert())?
            .multiply(&other.invert())
    }

    pub fn pow(&self, n: i64) -> Word {
        let base = if n < 0 { self.invert() } else { self.clone() };
        let mut out = Word::identity(self.rank);
        for _ in 0..n.unsigned_abs() {
            out = out.multiply(&base).expect("same alphabet");
        }
        out
    }

    pub fn exponent_sum(&self, gen: usize) -> Result<i64> {
        if gen >= self.rank {
            return Err(Error::IndexOutOfRange {
                index: gen,
                rank: self.rank,
            });
        }
        Ok(self
            .letters
            .iter()
            .filter(|l| l.gen == gen)
            .map(|l| l.sign())
            .sum())
    }

    /// Exponent sums of every generator, in generator order.
    pub fn exponent_vector(&self) -> Vec<i64> {
        let mut v = vec![0; self.rank];
        for l in &self.letters {
            v[l.gen] += l.sign();
        }
        v
    }

    /// Removes matching letter pairs from both ends (a cyclic conjugate).
    pub fn cyclically_reduce(&self) -> Word {
        let l = &self.letters;
        let (mut i, mut j) = (0, l.len());
        while j - i >= 2 && l[i].cancels(l[j - 1]) {
            i += 1;
            j -= 1;
        }
        Word {
            rank: self.rank,
            letters: l[i..j].to_vec(),
        }
    }

    /// Replaces each generator by a word over a (possibly different) alphabet.
    pub fn substitute(&self, images: &[Word], target_rank: usize) -> Result<Word> {
        let mut letters = Vec::new();
        for l in &self.letters {
            let img = &images[l.gen];
            if img.rank != target_rank {
                return Err(Error::AlphabetMismatch {
                    left: img.rank,
                    right: target_rank,
                });
            }
            if l.inverse {
                for &m in img.letters.iter().rev() {
                    push_reduced(&mut letters, m.inv());
                }
            } else {
                for &m in &img.letters {
                    push_reduced(&mut letters, m);
                }
            }
        }
        Ok(Word {
            rank: target_rank,
            letters,
        })
    }

    /// Parses the text form over an alphabet of `rank` letters.
    pub fn parse(rank: usize, text: &str) -> Result<Word> {
        let mut raw = Vec::new();
        for tok in text.split_whitespace() {
            if tok == "1" {
                continue;
            }
            parse_token(tok, &mut raw).map_err(|reason| Error::Parse {
                what: format!("word `{text}`"),
                reason,
            })?;
        }
        Self::reduce(rank, raw)
    }
}

fn push_reduced(letters: &mut Vec<Letter>, l: Letter) {
    match letters.last() {
        Some(&last) if last.cancels(l) => {
            letters.pop();
        }
        _ => letters.push(l),
    }
}

fn parse_token(tok: &str, out: &mut Vec<Letter>) -> std::result::Result<(), String> {
    let mut chars = tok.chars();
    let first = chars.next().expect("non-empty token");
    let rest = chars.as_str();
    if (first == 'g' || first == 'G') && !rest.is_empty() && rest.bytes().all(|b| b.is_ascii_digit()) {
        let gen = rest.parse::<usize>().map_err(|e| e.to_string())?;
        out.push(Letter::new(gen, first == 'G'));
        return Ok(());
    }
    for c in tok.chars() {
        if c.is_ascii_lowercase() {
            out.push(Letter::pos((c as u8 - b'a') as usize));
        } else if c.is_ascii_uppercase() {
            out.push(Letter::neg((c as u8 - b'A') as usize));
        } else {
            return Err(format!("unexpected character `{c}`"));
        }
    }
    Ok(())
}

/// Text form of a single letter over an alphabet of `rank` generators.
pub fn letter_name(rank: usize, l: Letter) -> String {
    if rank <= 26 {
        let base = if l.inverse { b'A' } else { b'a' };
        ((base + l.gen as u8) as char).to_string()
    } else if l.inverse {
        format!("G{}", l.gen)
    } else {
        format!("g{}", l.gen)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, &l) in self.letters.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            f.write_str(&letter_name(self.rank, l))?;
        }
        Ok(())
    }
}

impl Serialize for Word {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}
