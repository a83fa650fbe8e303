//! Finite presentations of curve fundamental groups.
//!
//! [`FpPresentation`] is a generator count, a list of relators and an
//! optional list of labelled ramification words (one per puncture). The
//! punctured presentations are stored free, with the boundary relation
//! already solved for the last puncture word.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::smith::elementary_divisors;
use crate::word::{letter_name, Letter, Word};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FpPresentation {
    rank: usize,
    generator_names: Vec<String>,
    relators: Vec<Word>,
    ramification: Vec<(String, Word)>,
}

impl FpPresentation {
    /// Validates alphabets and label uniqueness; identity relators are dropped.
    pub fn new(rank: usize, relators: Vec<Word>, ramification: Vec<(String, Word)>) -> Result<Self> {
        let names = (0..rank).map(|g| letter_name(rank, Letter::pos(g))).collect();
        Self::with_names(names, relators, ramification)
    }

    pub fn with_names(
        generator_names: Vec<String>,
        relators: Vec<Word>,
        ramification: Vec<(String, Word)>,
    ) -> Result<Self> {
        let rank = generator_names.len();
        for w in relators.iter().chain(ramification.iter().map(|(_, w)| w)) {
            if w.rank() != rank {
                return Err(Error::AlphabetMismatch {
                    left: w.rank(),
                    right: rank,
                });
            }
        }
        for (i, (label, _)) in ramification.iter().enumerate() {
            if ramification[..i].iter().any(|(l, _)| l == label) {
                return Err(Error::DuplicateLabel(label.clone()));
            }
        }
        Ok(FpPresentation {
            rank,
            generator_names,
            relators: relators.into_iter().filter(|w| !w.is_identity()).collect(),
            ramification,
        })
    }

    pub fn free(rank: usize) -> Self {
        Self::new(rank, Vec::new(), Vec::new()).expect("free presentation is valid")
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn generator_names(&self) -> &[String] {
        &self.generator_names
    }

    pub fn relators(&self) -> &[Word] {
        &self.relators
    }

    pub fn ramification_words(&self) -> &[(String, Word)] {
        &self.ramification
    }

    pub fn ramification_word(&self, label: &str) -> Option<&Word> {
        self.ramification
            .iter()
            .find(|(l, _)| l == label)
            .map(|(_, w)| w)
    }

    pub fn is_free(&self) -> bool {
        self.relators.is_empty()
    }

    pub fn word(&self, text: &str) -> Result<Word> {
        Word::parse(self.rank, text)
    }

    /// Parses the line-oriented text format:
    ///
    /// ```text
    /// gens: 2
    /// rel: a b A B
    /// ram: e1 a b
    /// ```
    ///
    /// Blank lines and lines starting with `#` are ignored.
    pub fn parse(text: &str) -> Result<Self> {
        let err = |reason: String| Error::Parse {
            what: "presentation".into(),
            reason,
        };
        let mut rank = None;
        let mut rels = Vec::new();
        let mut rams = Vec::new();
        for line in text.lines().map(str::trim) {
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (key, rest) = line
                .split_once(':')
                .ok_or_else(|| err(format!("missing `:` in `{line}`")))?;
            let rest = rest.trim();
            match key.trim() {
                "gens" => {
                    rank = Some(
                        rest.parse::<usize>()
                            .map_err(|e| err(format!("bad generator count: {e}")))?,
                    )
                }
                "rel" => rels.push(rest.to_string()),
                "ram" => {
                    let (label, word) = rest.split_once(char::is_whitespace).unwrap_or((rest, ""));
                    if label.is_empty() {
                        return Err(err("ramification line without label".into()));
                    }
                    rams.push((label.to_string(), word.to_string()));
                }
                other => return Err(err(format!("unknown key `{other}`"))),
            }
        }
        let rank = rank.ok_or_else(|| err("missing `gens:` line".into()))?;
        let relators = rels
            .iter()
            .map(|r| Word::parse(rank, r))
            .collect::<Result<Vec<_>>>()?;
        let ramification = rams
            .into_iter()
            .map(|(l, w)| Ok((l, Word::parse(rank, &w)?)))
            .collect::<Result<Vec<_>>>()?;
        Self::new(rank, relators, ramification)
    }

    /// Presentation of the quotient by the normal closure of the ramification
    /// word `label`; the label is consumed.
    pub fn fill_puncture(&self, label: &str) -> Result<Self> {
        let pos = self
            .ramification
            .iter()
            .position(|(l, _)| l == label)
            .ok_or_else(|| Error::UnknownLabel(label.to_string()))?;
        let mut out = self.clone();
        let (_, w) = out.ramification.remove(pos);
        if !w.is_identity() {
            out.relators.push(w);
        }
        Ok(out)
    }

    /// Fills every designated puncture in order.
    pub fn fill_all(&self) -> Self {
        let mut out = self.clone();
        for (label, _) in &self.ramification {
            out = out.fill_puncture(label).expect("label present");
        }
        out
    }

    /// Adds relators (identity words are ignored).
    pub fn with_relators(&self, extra: impl IntoIterator<Item = Word>) -> Result<Self> {
        let mut relators = self.relators.clone();
        relators.extend(extra);
        Self::with_names(self.generator_names.clone(), relators, self.ramification.clone())
    }

    /// Invariants of the abelianization via the Smith normal form of the
    /// relator exponent matrix.
    pub fn abelianization(&self) -> AbelianInvariants {
        let matrix: Vec<Vec<BigInt>> = self
            .relators
            .iter()
            .map(|w| w.exponent_vector().into_iter().map(BigInt::from).collect())
            .collect();
        let divisors = elementary_divisors(matrix);
        let torsion = divisors
            .iter()
            .filter(|d| !d.is_one())
            .map(|d| d.abs().to_biguint().expect("positive"))
            .collect();
        AbelianInvariants {
            free_rank: self.rank - divisors.len(),
            torsion,
        }
    }

    /// Repeatedly eliminates a generator that occurs exactly once in some
    /// (cyclically reduced) relator, until no relator has such a generator.
    pub fn tietze_eliminate(&self) -> Self {
        let mut p = self.clone();
        p.relators = normalise_relators(&p.relators);
        while let Some((r, gen)) = p.find_elimination() {
            p = p.eliminate(r, gen);
        }
        p
    }

    fn find_elimination(&self) -> Option<(usize, usize)> {
        let mut order: Vec<usize> = (0..self.relators.len()).collect();
        order.sort_by_key(|&i| (self.relators[i].len(), i));
        order.into_iter().find_map(|i| {
            let mut counts = vec![0usize; self.rank];
            for l in self.relators[i].letters() {
                counts[l.gen] += 1;
            }
            counts.iter().rposition(|&c| c == 1).map(|g| (i, g))
        })
    }

    fn eliminate(&self, rel: usize, gen: usize) -> Self {
        let r = &self.relators[rel];
        let letters = r.letters();
        let at = letters.iter().position(|l| l.gen == gen).expect("occurs");
        // r ~ x^e v  =>  x = v^{-1} (e = +1) or x = v (e = -1).
        let rotated: Vec<Letter> = letters[at + 1..].iter().chain(&letters[..at]).copied().collect();
        let v = Word::reduce(self.rank, rotated).expect("same alphabet");
        let value = if letters[at].inverse { v } else { v.invert() };

        let new_rank = self.rank - 1;
        let shift = |g: usize| if g > gen { g - 1 } else { g };
        let mut images: Vec<Word> = (0..self.rank)
            .map(|g| {
                if g == gen {
                    Word::identity(new_rank)
                } else {
                    Word::generator(new_rank, shift(g)).expect("in range")
                }
            })
            .collect();
        images[gen] = value.substitute(&images, new_rank).expect("same alphabet");

        let relators: Vec<Word> = self
            .relators
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != rel)
            .map(|(_, w)| w.substitute(&images, new_rank).expect("same alphabet"))
            .collect();
        let ramification = self
            .ramification
            .iter()
            .map(|(l, w)| (l.clone(), w.substitute(&images, new_rank).expect("same alphabet")))
            .collect();
        let mut names = self.generator_names.clone();
        names.remove(gen);
        FpPresentation {
            rank: new_rank,
            generator_names: names,
            relators: normalise_relators(&relators),
            ramification,
        }
    }

    /// The text format accepted by [`FpPresentation::parse`].
    pub fn to_text(&self) -> String {
        let mut s = format!("gens: {}\n", self.rank);
        for r in &self.relators {
            s.push_str(&format!("rel: {r}\n"));
        }
        for (l, w) in &self.ramification {
            s.push_str(&format!("ram: {l} {w}\n"));
        }
        s
    }
}

fn normalise_relators(relators: &[Word]) -> Vec<Word> {
    let mut out: Vec<Word> = Vec::new();
    for r in relators {
        let c = r.cyclically_reduce();
        if !c.is_identity() && !out.contains(&c) {
            out.push(c);
        }
    }
    out
}

impl fmt::Display for FpPresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "< {} | ", self.generator_names.join(", "))?;
        let rels: Vec<String> = self.relators.iter().map(|r| r.to_string()).collect();
        write!(f, "{} >", rels.join(", "))
    }
}

/// Free rank and torsion coefficients (each dividing the next, all ≥ 2).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AbelianInvariants {
    pub free_rank: usize,
    #[serde(serialize_with = "serialize_torsion")]
    pub torsion: Vec<BigUint>,
}

impl AbelianInvariants {
    pub fn free(rank: usize) -> Self {
        AbelianInvariants {
            free_rank: rank,
            torsion: Vec::new(),
        }
    }

    pub fn new(free_rank: usize, torsion: &[u64]) -> Self {
        AbelianInvariants {
            free_rank,
            torsion: torsion.iter().map(|&t| BigUint::from(t)).collect(),
        }
    }
}

impl fmt::Display for AbelianInvariants {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = Vec::new();
        if self.free_rank > 0 {
            parts.push(format!("Z^{}", self.free_rank));
        }
        parts.extend(self.torsion.iter().map(|t| format!("Z/{t}")));
        if parts.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&parts.join(" + "))
        }
    }
}

fn serialize_torsion<S: Serializer>(t: &[BigUint], s: S) -> std::result::Result<S::Ok, S::Error> {
    use serde::ser::SerializeSeq;
    let mut seq = s.serialize_seq(Some(t.len()))?;
    for x in t {
        match u64::try_from(x) {
            Ok(v) => seq.serialize_element(&v)?,
            Err(_) => seq.serialize_element(&x.to_string())?,
        }
    }
    seq.end()
}

/// The closed surface group of genus `g`: generators `x1 y1 ... xg yg` and the
/// single relator `[x1, y1] ... [xg, yg]`.
pub fn surface_group(g: usize) -> FpPresentation {
    let rank = 2 * g;
    let relator = commutator_product(rank, g);
    FpPresentation::with_names(curve_names(g, 0), vec![relator], Vec::new())
        .expect("valid presentation")
}

/// Free presentation of a genus-`g` curve with `n ≥ 1` punctures, on
/// `x1 y1 ... xg yg e1 ... e(n-1)`. The ramification words are `e1 ... e(n-1)`
/// and the dependent word `en = ([x1,y1] ... [xg,yg] e1 ... e(n-1))⁻¹`.
pub fn punctured_curve_group(g: usize, n: usize) -> Result<FpPresentation> {
    if n == 0 {
        return Err(Error::InvalidParameter(
            "punctured curve needs n >= 1; use surface_group for closed curves".into(),
        ));
    }
    let rank = 2 * g + n - 1;
    let mut ram = Vec::with_capacity(n);
    let mut boundary = commutator_product(rank, g);
    for i in 0..n - 1 {
        let e = Word::generator(rank, 2 * g + i)?;
        boundary = boundary.multiply(&e)?;
        ram.push((format!("e{}", i + 1), e));
    }
    ram.push((format!("e{n}"), boundary.invert()));
    FpPresentation::with_names(curve_names(g, n), Vec::new(), ram)
}

fn commutator_product(rank: usize, g: usize) -> Word {
    let mut w = Word::identity(rank);
    for i in 0..g {
        let x = Word::generator(rank, 2 * i).expect("in range");
        let y = Word::generator(rank, 2 * i + 1).expect("in range");
        w = w.multiply(&x.commutator(&y).expect("same alphabet")).expect("same alphabet");
    }
    w
}

fn curve_names(g: usize, n: usize) -> Vec<String> {
    let mut names = Vec::new();
    for i in 1..=g {
        names.push(format!("x{i}"));
        names.push(format!("y{i}"));
    }
    for i in 1..n {
        names.push(format!("e{i}"));
    }
    names
}
