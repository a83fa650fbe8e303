//! Named groups and the group-spec DSL: `C6`, `S3`, `A4`, `D4`, `Q8`,
//! products such as `C2xC3`, and raw generators `perm:(1 2),(1 2 3)`.
//!
//! `Dn` is the dihedral group of order `2n` acting on an `n`-gon.

use crate::error::{Error, Result};
use crate::finite::group::{FiniteGroup, DEFAULT_ORDER_LIMIT};
use crate::finite::perm::Perm;

pub fn parse_group(spec: &str) -> Result<FiniteGroup> {
    parse_group_with_limit(spec, DEFAULT_ORDER_LIMIT)
}

pub fn parse_group_with_limit(spec: &str, limit: usize) -> Result<FiniteGroup> {
    let spec = spec.trim();
    let perms = group_generators(spec)?;
    FiniteGroup::from_permutations(&perms, limit, spec)
}

/// Generating permutations for a group spec.
pub fn group_generators(spec: &str) -> Result<Vec<Perm>> {
    if let Some(raw) = spec.strip_prefix("perm:") {
        return Perm::parse_list(raw);
    }
    let mut out: Vec<Perm> = Vec::new();
    let mut offset = 0;
    for factor in spec.split('x') {
        let gens = factor_generators(factor.trim())?;
        let degree = gens.iter().map(Perm::degree).max().unwrap_or(1).max(1);
        out.extend(gens.iter().map(|p| p.shift(offset)));
        offset += degree;
    }
    Ok(out)
}

fn factor_generators(factor: &str) -> Result<Vec<Perm>> {
    let err = |reason: &str| Error::Parse {
        what: format!("group spec `{factor}`"),
        reason: reason.to_string(),
    };
    if factor == "Q8" {
        return Ok(quaternion_generators());
    }
    let mut chars = factor.chars();
    let kind = chars.next().ok_or_else(|| err("empty factor"))?;
    let n: usize = chars
        .as_str()
        .parse()
        .map_err(|_| err("expected a family letter followed by a number"))?;
    let cycle = |pts: Vec<usize>| Perm::from_cycles(&[pts]);
    match kind {
        'C' => {
            if n == 0 {
                return Err(err("order must be positive"));
            }
            Ok(vec![cycle((1..=n).collect())?])
        }
        'S' => match n {
            0 => Err(err("degree must be positive")),
            1 => Ok(vec![Perm::identity(1)]),
            2 => Ok(vec![cycle(vec![1, 2])?]),
            _ => Ok(vec![cycle(vec![1, 2])?, cycle((1..=n).collect())?]),
        },
        'A' => match n {
            0 => Err(err("degree must be positive")),
            1..=2 => Ok(vec![Perm::identity(n)]),
            3 => Ok(vec![cycle(vec![1, 2, 3])?]),
            _ if n % 2 == 1 => Ok(vec![cycle(vec![1, 2, 3])?, cycle((1..=n).collect())?]),
            _ => Ok(vec![cycle(vec![1, 2, 3])?, cycle((2..=n).collect())?]),
        },
        'D' => {
            if n < 3 {
                return Err(err("dihedral groups need n >= 3"));
            }
            let rotation = cycle((1..=n).collect())?;
            let reflection = Perm::from_images((0..n).map(|i| (n - i) % n).collect())?;
            Ok(vec![rotation, reflection])
        }
        _ => Err(err("unknown family (use C, S, A, D, Q8 or perm:)")),
    }
}

/// Right regular representation of the quaternion group on
/// `1, -1, i, -i, j, -j, k, -k`.
fn quaternion_generators() -> Vec<Perm> {
    // Units 1, i, j, k as 0..4; products u*v = (sign, unit).
    const TABLE: [[(bool, usize); 4]; 4] = [
        [(false, 0), (false, 1), (false, 2), (false, 3)],
        [(false, 1), (true, 0), (false, 3), (true, 2)],
        [(false, 2), (true, 3), (true, 0), (false, 1)],
        [(false, 3), (false, 2), (true, 1), (true, 0)],
    ];
    let mul = |x: usize, y: usize| {
        let (neg, unit) = TABLE[x / 2][y / 2];
        let sign = (x % 2 == 1) ^ (y % 2 == 1) ^ neg;
        2 * unit + usize::from(sign)
    };
    [2, 4]
        .iter()
        .map(|&g| Perm::from_images((0..8).map(|x| mul(x, g)).collect()).expect("bijection"))
        .collect()
}

/// Group specs used throughout the test and verification suites.
pub const CORPUS: &[&str] = &[
    "C1", "C2", "C3", "C4", "C5", "C6", "C7", "C8", "C9", "C10", "C11", "C12", "C13", "C14",
    "C15", "C16", "C18", "C20", "C24", "S3", "S4", "A4", "D4", "D5", "D6", "D7", "D8", "D9",
    "D10", "D12", "Q8", "C2xC2", "C2xC4", "C2xC2xC2", "C3xC3", "C2xC6", "C2xS3", "C3xS3",
    "C2xQ8", "C2xD4", "C4xC4", "C2xA4", "C3xQ8", "C3xD4", "C2xC2xC3", "C2xC2xC2xC2", "C4xC12",
    "C3xD8", "C2xC2xQ8", "C3xC3xC4", "S3xS3", "A5",
];

/// Every corpus group of order at most `max_order`.
pub fn corpus(max_order: usize) -> Vec<FiniteGroup> {
    CORPUS
        .iter()
        .map(|s| parse_group(s).expect("corpus spec parses"))
        .filter(|g| g.order() <= max_order)
        .collect()
}
