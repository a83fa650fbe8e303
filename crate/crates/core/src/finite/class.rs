//! Classes of finite groups, central series and Sylow subgroups.

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::finite::group::{FiniteGroup, Subgroup};

/// A class of finite groups: groups of order prime to `p`, solvable groups,
/// nilpotent groups, or `ℓ`-groups.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GroupClass {
    PrimeTo(u64),
    Solvable,
    Nilpotent,
    Ell(u64),
}

impl GroupClass {
    pub fn prime_to(p: u64) -> Result<Self> {
        check_prime(p)?;
        Ok(GroupClass::PrimeTo(p))
    }

    pub fn ell(l: u64) -> Result<Self> {
        check_prime(l)?;
        Ok(GroupClass::Ell(l))
    }

    pub fn contains(&self, g: &FiniteGroup) -> bool {
        let n = g.order() as u64;
        match *self {
            GroupClass::PrimeTo(p) => !n.is_multiple_of(p),
            GroupClass::Ell(l) => is_power_of(n, l),
            GroupClass::Solvable => series(g, SeriesKind::Derived).last().is_none_or(Subgroup::is_trivial),
            GroupClass::Nilpotent => {
                series(g, SeriesKind::LowerCentral).last().is_none_or(Subgroup::is_trivial)
            }
        }
    }

    /// Closed under subgroups, quotients, products and extensions. Nilpotent
    /// groups are not closed under extensions.
    pub fn is_extension_closed(&self) -> bool {
        !matches!(self, GroupClass::Nilpotent)
    }
}

fn check_prime(p: u64) -> Result<()> {
    if is_prime(p) {
        Ok(())
    } else {
        Err(Error::InvalidParameter(format!("{p} is not prime")))
    }
}

impl fmt::Display for GroupClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupClass::PrimeTo(p) => write!(f, "prime-to:{p}"),
            GroupClass::Solvable => f.write_str("sol"),
            GroupClass::Nilpotent => f.write_str("nil"),
            GroupClass::Ell(l) => write!(f, "ell:{l}"),
        }
    }
}

impl FromStr for GroupClass {
    type Err = Error;

    /// `sol`, `nil`, `ell:<prime>`, `prime-to:<prime>` (long names accepted).
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let num = |t: &str| {
            t.parse::<u64>().map_err(|_| Error::Parse {
                what: format!("class `{s}`"),
                reason: "expected a prime".into(),
            })
        };
        match s {
            "sol" | "solvable" => Ok(GroupClass::Solvable),
            "nil" | "nilpotent" => Ok(GroupClass::Nilpotent),
            _ => {
                if let Some(l) = s.strip_prefix("ell:") {
                    GroupClass::ell(num(l)?)
                } else if let Some(p) = s.strip_prefix("prime-to:") {
                    GroupClass::prime_to(num(p)?)
                } else {
                    Err(Error::Parse {
                        what: format!("class `{s}`"),
                        reason: "expected sol, nil, ell:<p> or prime-to:<p>".into(),
                    })
                }
            }
        }
    }
}

impl Serialize for GroupClass {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SeriesKind {
    Derived,
    LowerCentral,
}

/// Strictly descending series starting at `G`; the last entry is the stable term.
pub fn series(g: &FiniteGroup, kind: SeriesKind) -> Vec<Subgroup> {
    let whole = g.whole();
    let mut terms = vec![whole.clone()];
    loop {
        let last = terms.last().expect("nonempty");
        let next = match kind {
            SeriesKind::Derived => g.commutator_subgroup(last, last),
            SeriesKind::LowerCentral => g.commutator_subgroup(&whole, last),
        };
        if next == *last {
            return terms;
        }
        terms.push(next);
    }
}

/// A Sylow `ℓ`-subgroup, grown one step at a time inside normalisers.
pub fn sylow_subgroup(g: &FiniteGroup, l: u64) -> Subgroup {
    let target = prime_part(g.order() as u64, l) as usize;
    let mut p = Subgroup::trivial();
    let mut gens: Vec<usize> = Vec::new();
    while p.order() < target {
        let step = (0..g.order()).find_map(|x| {
            if p.contains(x) || !normalises(g, x, &p) {
                return None;
            }
            let mut candidate = gens.clone();
            candidate.push(x);
            let h = g.generate(&candidate);
            is_power_of(h.order() as u64, l).then_some((x, h))
        });
        let (x, h) = step.expect("an ℓ-subgroup below the Sylow order has a proper ℓ-overgroup");
        gens.push(x);
        p = h;
    }
    p
}

fn normalises(g: &FiniteGroup, x: usize, h: &Subgroup) -> bool {
    h.elements().iter().all(|&y| h.contains(g.conjugate(y, x)))
}

/// Elements whose order is a power of `l`.
pub fn ell_elements(g: &FiniteGroup, l: u64) -> Vec<usize> {
    (0..g.order())
        .filter(|&x| is_power_of(g.element_order(x) as u64, l))
        .collect()
}

pub fn is_prime(n: u64) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
}

/// `n == l^k` for some `k ≥ 0`.
pub fn is_power_of(mut n: u64, l: u64) -> bool {
    if n == 0 {
        return false;
    }
    while n.is_multiple_of(l) {
        n /= l;
    }
    n == 1
}

/// Largest power of `l` dividing `n`.
pub fn prime_part(mut n: u64, l: u64) -> u64 {
    let mut part = 1;
    while n.is_multiple_of(l) {
        n /= l;
        part *= l;
    }
    part
}

/// Distinct prime divisors in increasing order.
pub fn prime_divisors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::finite::builtin::parse_group;

    fn orders(s: &[Subgroup]) -> Vec<usize> {
        s.iter().map(Subgroup::order).collect()
    }

    #[test]
    fn series_examples() {
        let s3 = parse_group("S3").unwrap();
        assert_eq!(orders(&series(&s3, SeriesKind::Derived)), vec![6, 3, 1]);
        assert_eq!(orders(&series(&s3, SeriesKind::LowerCentral)), vec![6, 3]);
        let c6 = parse_group("C6").unwrap();
        assert_eq!(orders(&series(&c6, SeriesKind::Derived)), vec![6, 1]);
        let s4 = parse_group("S4").unwrap();
        assert_eq!(orders(&series(&s4, SeriesKind::Derived)), vec![24, 12, 4, 1]);
        let a5 = parse_group("A5").unwrap();
        assert_eq!(orders(&series(&a5, SeriesKind::Derived)), vec![60]);
        for g in [&s3, &s4, &a5] {
            for t in series(g, SeriesKind::LowerCentral) {
                assert!(g.is_normal(&t));
            }
        }
    }

    #[test]
    fn membership() {
        let s3 = parse_group("S3").unwrap();
        let c6 = parse_group("C6").unwrap();
        let a4 = parse_group("A4").unwrap();
        assert!(GroupClass::Solvable.contains(&s3));
        assert!(!GroupClass::Nilpotent.contains(&s3));
        assert!(GroupClass::PrimeTo(5).contains(&c6));
        assert!(!GroupClass::PrimeTo(3).contains(&c6));
        assert!(!GroupClass::Ell(2).contains(&a4));
        assert!(GroupClass::Ell(2).contains(&parse_group("D4").unwrap()));
        assert!(GroupClass::Nilpotent.contains(&parse_group("Q8").unwrap()));
        assert!(!GroupClass::Solvable.contains(&parse_group("A5").unwrap()));
    }

    #[test]
    fn class_parsing() {
        assert_eq!("sol".parse::<GroupClass>().unwrap(), GroupClass::Solvable);
        assert_eq!("nilpotent".parse::<GroupClass>().unwrap(), GroupClass::Nilpotent);
        assert_eq!("ell:2".parse::<GroupClass>().unwrap(), GroupClass::Ell(2));
        assert_eq!("prime-to:3".parse::<GroupClass>().unwrap(), GroupClass::PrimeTo(3));
        assert!("ell:4".parse::<GroupClass>().is_err());
        assert!("abelian".parse::<GroupClass>().is_err());
        for c in ["sol", "nil", "ell:3", "prime-to:5"] {
            assert_eq!(c.parse::<GroupClass>().unwrap().to_string(), c);
        }
    }

    #[test]
    fn sylow_examples() {
        let c6 = parse_group("C6").unwrap();
        assert_eq!(sylow_subgroup(&c6, 2).order(), 2);
        let c12 = parse_group("C12").unwrap();
        let p = sylow_subgroup(&c12, 2);
        assert_eq!(p.order(), 4);
        assert!(p.elements().iter().any(|&x| c12.element_order(x) == 4));
        let s3 = parse_group("S3").unwrap();
        let p = sylow_subgroup(&s3, 3);
        assert_eq!(p.order(), 3);
        assert!(s3.is_normal(&p));
        assert!(sylow_subgroup(&s3, 5).is_trivial());
        let s4 = parse_group("S4").unwrap();
        assert_eq!(sylow_subgroup(&s4, 2).order(), 8);
        let a5 = parse_group("A5").unwrap();
        assert_eq!(sylow_subgroup(&a5, 2).order(), 4);
        assert_eq!(sylow_subgroup(&a5, 5).order(), 5);
    }

    #[test]
    fn arithmetic() {
        assert_eq!(prime_divisors(60), vec![2, 3, 5]);
        assert_eq!(prime_divisors(1), Vec::<u64>::new());
        assert_eq!(prime_part(48, 2), 16);
        assert!(is_power_of(1, 3));
        assert!(!is_power_of(12, 2));
        assert!(is_prime(13) && !is_prime(1) && !is_prime(15));
    }
}
