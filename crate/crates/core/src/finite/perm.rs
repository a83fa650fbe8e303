//! Permutations of `{0, .., n-1}`, written in 1-based cycle notation.

use std::fmt;

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Perm(Vec<usize>);

impl Perm {
    pub fn identity(degree: usize) -> Self {
        Perm((0..degree).collect())
    }

    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let mut seen = vec![false; images.len()];
        for &i in &images {
            if i >= images.len() || seen[i] {
                return Err(Error::Parse {
                    what: "permutation".into(),
                    reason: format!("{images:?} is not a bijection"),
                });
            }
            seen[i] = true;
        }
        Ok(Perm(images))
    }

    /// Builds a permutation from 1-based cycles.
    pub fn from_cycles(cycles: &[Vec<usize>]) -> Result<Self> {
        let degree = cycles.iter().flatten().copied().max().unwrap_or(0);
        let mut images: Vec<usize> = (0..degree).collect();
        let mut used = vec![false; degree];
        for cycle in cycles {
            for (k, &p) in cycle.iter().enumerate() {
                if p == 0 || used[p - 1] {
                    return Err(Error::Parse {
                        what: "permutation".into(),
                        reason: format!("point {p} is zero or repeated"),
                    });
                }
                used[p - 1] = true;
                images[p - 1] = cycle[(k + 1) % cycle.len()] - 1;
            }
        }
        Ok(Perm(images))
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn image(&self, i: usize) -> usize {
        self.0.get(i).copied().unwrap_or(i)
    }

    /// Pads with fixed points up to `degree`.
    pub fn extend(&self, degree: usize) -> Self {
        let mut v = self.0.clone();
        v.extend(v.len()..degree);
        Perm(v)
    }

    /// Moves every point by `offset`, fixing `0..offset`.
    pub fn shift(&self, offset: usize) -> Self {
        let mut v: Vec<usize> = (0..offset).collect();
        v.extend(self.0.iter().map(|&i| i + offset));
        Perm(v)
    }

    /// `self` followed by `other`.
    pub fn then(&self, other: &Perm) -> Perm {
        let n = self.degree().max(other.degree());
        Perm((0..n).map(|i| other.image(self.image(i))).collect())
    }

    pub fn inverse(&self) -> Perm {
        let mut v = vec![0; self.0.len()];
        for (i, &j) in self.0.iter().enumerate() {
            v[j] = i;
        }
        Perm(v)
    }

    /// Parses `(1 2)(3 4)`; `()` is the identity.
    pub fn parse(text: &str) -> Result<Self> {
        let err = |reason: String| Error::Parse {
            what: format!("permutation `{text}`"),
            reason,
        };
        let mut cycles = Vec::new();
        let mut rest = text.trim();
        while !rest.is_empty() {
            let body = rest
                .strip_prefix('(')
                .ok_or_else(|| err("expected `(`".into()))?;
            let end = body.find(')').ok_or_else(|| err("unclosed cycle".into()))?;
            let points = body[..end]
                .split(|c: char| c.is_whitespace() || c == ',')
                .filter(|s| !s.is_empty())
                .map(|s| s.parse::<usize>().map_err(|e| err(e.to_string())))
                .collect::<Result<Vec<_>>>()?;
            if !points.is_empty() {
                cycles.push(points);
            }
            rest = body[end + 1..].trim_start();
        }
        Self::from_cycles(&cycles)
    }

    /// Parses a comma-separated list of permutations, `(1 2),(1 2 3)`.
    pub fn parse_list(text: &str) -> Result<Vec<Self>> {
        let mut out = Vec::new();
        let mut depth = 0;
        let mut start = 0;
        for (i, c) in text.char_indices() {
            match c {
                '(' => depth += 1,
                ')' => depth -= 1,
                ',' if depth == 0 => {
                    out.push(Self::parse(&text[start..i])?);
                    start = i + 1;
                }
                _ => {}
            }
        }
        out.push(Self::parse(&text[start..])?);
        Ok(out)
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut seen = vec![false; self.0.len()];
        let mut any = false;
        for start in 0..self.0.len() {
            if seen[start] || self.0[start] == start {
                continue;
            }
            any = true;
            f.write_str("(")?;
            let mut i = start;
            let mut first = true;
            while !seen[i] {
                seen[i] = true;
                if !first {
                    f.write_str(" ")?;
                }
                write!(f, "{}", i + 1)?;
                first = false;
                i = self.0[i];
            }
            f.write_str(")")?;
        }
        if !any {
            f.write_str("()")?;
        }
        Ok(())
    }
}
