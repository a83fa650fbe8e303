//! Maximal class quotients of finite groups.
//!
//! For a finite group `G` and a class `c`, the maximal quotient of `G` lying in
//! `c` is `G/K` where `K` is the smallest normal subgroup with `G/K` in `c`.
//! [`max_class_quotient`] computes `K` by a direct characterisation per class;
//! [`class_kernel_oracle`] intersects all normal subgroups with quotient in
//! `c` and is used to cross-check it.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::finite::class::{ell_elements, prime_divisors, series, GroupClass, SeriesKind};
use crate::finite::group::{FiniteGroup, Subgroup};

#[derive(Clone, Debug)]
pub struct ClassQuotient {
    pub source: FiniteGroup,
    pub class: GroupClass,
    pub kernel: Subgroup,
    pub quotient: FiniteGroup,
    pub projection: Vec<usize>,
}

/// Kernel of the maximal quotient in `class`:
///
/// * solvable: last term of the derived series,
/// * nilpotent: last term of the lower central series,
/// * `ℓ`-groups: normal closure of the elements of order prime to `ℓ`,
/// * prime to `p`: normal closure of the `p`-elements.
pub fn class_kernel(g: &FiniteGroup, class: GroupClass) -> Subgroup {
    match class {
        GroupClass::Solvable => series(g, SeriesKind::Derived).pop().expect("nonempty"),
        GroupClass::Nilpotent => series(g, SeriesKind::LowerCentral).pop().expect("nonempty"),
        GroupClass::Ell(l) => {
            let coprime: Vec<usize> = (0..g.order())
                .filter(|&x| !(g.element_order(x) as u64).is_multiple_of(l))
                .collect();
            g.normal_closure(&coprime)
        }
        GroupClass::PrimeTo(p) => g.normal_closure(&ell_elements(g, p)),
    }
}

/// Intersection of every normal subgroup `N` with `G/N` in `class`.
pub fn class_kernel_oracle(g: &FiniteGroup, class: GroupClass) -> Subgroup {
    g.normal_subgroups()
        .par_iter()
        .filter(|n| class.contains(&g.quotient(n).expect("normal").group))
        .cloned()
        .reduce(|| g.whole(), |a, b| a.intersect(&b))
}

pub fn max_class_quotient(g: &FiniteGroup, class: GroupClass) -> ClassQuotient {
    let kernel = class_kernel(g, class);
    let q = g.quotient(&kernel).expect("class kernels are normal");
    ClassQuotient {
        source: g.clone(),
        class,
        kernel,
        quotient: q.group.with_name(format!("{}^{}", g.name(), class)),
        projection: q.projection,
    }
}

/// A nilpotent group as the internal direct product of its Sylow subgroups.
#[derive(Clone, Debug)]
pub struct SylowDecomposition {
    /// `(ℓ, Syl_ℓ(G))` in increasing order of `ℓ`.
    pub factors: Vec<(u64, Subgroup)>,
    /// Product of the tuple with mixed-radix index `i` (first factor most
    /// significant, positions inside each factor's sorted element list).
    pub witness: Vec<usize>,
}

impl SylowDecomposition {
    fn tuple_index(&self, positions: &[usize]) -> usize {
        positions
            .iter()
            .zip(&self.factors)
            .fold(0, |acc, (&p, (_, s))| acc * s.order() + p)
    }

    fn positions(&self, mut index: usize) -> Vec<usize> {
        let mut out = vec![0; self.factors.len()];
        for (k, (_, s)) in self.factors.iter().enumerate().rev() {
            out[k] = index % s.order();
            index /= s.order();
        }
        out
    }

    /// The `ℓ`-components of `x`, one per factor.
    pub fn components(&self, x: usize) -> Vec<usize> {
        let i = self.witness.iter().position(|&y| y == x).expect("witness is onto");
        self.positions(i)
            .iter()
            .zip(&self.factors)
            .map(|(&p, (_, s))| s.elements()[p])
            .collect()
    }

    /// Checks that the multiplication map from the product of the factors is a
    /// bijective homomorphism.
    pub fn verify(&self, g: &FiniteGroup) -> bool {
        let n = self.witness.len();
        if n != g.order() {
            return false;
        }
        let mut hit = vec![false; n];
        for &x in &self.witness {
            if std::mem::replace(&mut hit[x], true) {
                return false;
            }
        }
        (0..n).all(|i| {
            let pi = self.positions(i);
            (0..n).all(|j| {
                let pj = self.positions(j);
                let prod: Vec<usize> = pi
                    .iter()
                    .zip(&pj)
                    .zip(&self.factors)
                    .map(|((&a, &b), (_, s))| {
                        let e = s.elements();
                        e.binary_search(&g.mul(e[a], e[b])).expect("subgroup")
                    })
                    .collect();
                self.witness[self.tuple_index(&prod)] == g.mul(self.witness[i], self.witness[j])
            })
        })
    }
}

pub fn nilpotent_sylow_decomposition(g: &FiniteGroup) -> Result<SylowDecomposition> {
    if !GroupClass::Nilpotent.contains(g) {
        return Err(Error::NotNilpotent);
    }
    let factors: Vec<(u64, Subgroup)> = prime_divisors(g.order() as u64)
        .into_iter()
        .map(|l| (l, Subgroup::from_sorted(ell_elements(g, l))))
        .collect();
    let mut witness = vec![0usize];
    for (_, s) in &factors {
        witness = witness
            .iter()
            .flat_map(|&x| s.elements().iter().map(move |&y| (x, y)))
            .map(|(x, y)| g.mul(x, y))
            .collect();
    }
    Ok(SylowDecomposition { factors, witness })
}

/// Combines generator tuples of the Sylow subgroups of a nilpotent group into
/// one generator tuple of the whole group, `x_j = ∏_ℓ x_j^(ℓ)` in increasing
/// order of `ℓ`.
pub fn crt_lift_generators(g: &FiniteGroup, per_prime: &BTreeMap<u64, Vec<usize>>) -> Result<Vec<usize>> {
    let dec = nilpotent_sylow_decomposition(g)?;
    let len = per_prime.values().next().map_or(0, Vec::len);
    if per_prime.values().any(|t| t.len() != len) {
        return Err(Error::LengthMismatch);
    }
    for (l, s) in &dec.factors {
        let tuple = per_prime.get(l).map(Vec::as_slice).unwrap_or(&[]);
        if tuple.iter().any(|&x| x >= g.order() || !s.contains(x)) || g.generate(tuple) != *s {
            return Err(Error::SylowGeneration { prime: *l });
        }
    }
    for (&l, tuple) in per_prime {
        let known = dec.factors.iter().any(|(m, _)| *m == l);
        if !known && tuple.iter().any(|&x| x != 0) {
            return Err(Error::SylowGeneration { prime: l });
        }
    }
    let lifted: Vec<usize> = (0..len)
        .map(|j| per_prime.values().fold(0, |acc, t| g.mul(acc, t[j])))
        .collect();
    debug_assert!(g.generates(&lifted));
    Ok(lifted)
}

/// Outcome of comparing `1 → N^c → G^c → G/N → 1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExactnessReport {
    pub n_completion_order: usize,
    pub g_completion_order: usize,
    pub quotient_order: usize,
    pub injective: bool,
    pub middle_exact: bool,
    pub surjective: bool,
    pub exact: bool,
}

/// Requires `N` normal and `G/N` in `class`.
pub fn verify_completion_exactness(g: &FiniteGroup, n: &Subgroup, class: GroupClass) -> Result<ExactnessReport> {
    let gn = g.quotient(n)?;
    if !class.contains(&gn.group) {
        return Err(Error::HypothesisViolated(format!(
            "G/N (order {}) is not in class {class}",
            gn.group.order()
        )));
    }
    let (ng, emb) = g.subgroup_as_group(n);
    let kn = map_subgroup(&class_kernel(&ng, class), &emb);
    let kg = class_kernel(g, class);
    let gc = g.quotient(&kg)?;

    // N^c → G^c is injective iff K_G ∩ N = K_N (given K_N ⊆ K_G).
    let injective = kn.is_subset_of(&kg) && n.intersect(&kg) == kn;
    // G^c → G/N is defined since K_G ⊆ N, and onto.
    let defined = kg.is_subset_of(n);
    let surjective = defined;
    let image: Vec<bool> = indicator(gc.group.order(), n.elements().iter().map(|&x| gc.projection[x]));
    let kernel: Vec<bool> = indicator(
        gc.group.order(),
        (0..g.order())
            .filter(|&x| gn.projection[x] == 0)
            .map(|x| gc.projection[x]),
    );
    let middle_exact = defined && image == kernel;
    Ok(ExactnessReport {
        n_completion_order: n.order() / kn.order(),
        g_completion_order: gc.group.order(),
        quotient_order: gn.group.order(),
        injective,
        middle_exact,
        surjective,
        exact: injective && middle_exact && surjective,
    })
}

/// Outcome of comparing `N^c → G^c → (G/N)^c → 1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RightExactnessReport {
    pub n_completion_order: usize,
    pub g_completion_order: usize,
    pub quotient_completion_order: usize,
    pub image_order: usize,
    pub surjective: bool,
    pub middle_exact: bool,
    pub exact: bool,
}

pub fn verify_right_exactness(g: &FiniteGroup, n: &Subgroup, class: GroupClass) -> Result<RightExactnessReport> {
    let gn = g.quotient(n)?;
    let (ng, emb) = g.subgroup_as_group(n);
    let kn = map_subgroup(&class_kernel(&ng, class), &emb);
    let kg = class_kernel(g, class);
    let gc = g.quotient(&kg)?;
    let kq = class_kernel(&gn.group, class);
    let qc = gn.group.quotient(&kq)?;

    let first_defined = kn.is_subset_of(&kg);
    let second_defined = kg.elements().iter().all(|&x| kq.contains(gn.projection[x]));
    // Composite G → G^c → (G/N)^c.
    let onto = |x: usize| qc.projection[gn.projection[x]];
    let surjective = second_defined && indicator(qc.group.order(), (0..g.order()).map(onto)).iter().all(|&b| b);
    let image = indicator(gc.group.order(), n.elements().iter().map(|&x| gc.projection[x]));
    let kernel = indicator(
        gc.group.order(),
        (0..g.order()).filter(|&x| onto(x) == 0).map(|x| gc.projection[x]),
    );
    let middle_exact = first_defined && second_defined && image == kernel;
    Ok(RightExactnessReport {
        n_completion_order: n.order() / kn.order(),
        g_completion_order: gc.group.order(),
        quotient_completion_order: qc.group.order(),
        image_order: image.iter().filter(|&&b| b).count(),
        surjective,
        middle_exact,
        exact: surjective && middle_exact,
    })
}

fn map_subgroup(h: &Subgroup, emb: &[usize]) -> Subgroup {
    let mut v: Vec<usize> = h.elements().iter().map(|&x| emb[x]).collect();
    v.sort_unstable();
    Subgroup::from_sorted(v)
}

fn indicator(n: usize, items: impl Iterator<Item = usize>) -> Vec<bool> {
    let mut v = vec![false; n];
    for i in items {
        v[i] = true;
    }
    v
}

/// Whether `G/K` for the nilpotent kernel has the same order as the product of
/// the maximal `ℓ`-quotients, and the kernels intersect to the nilpotent one.
pub fn nilpotent_quotient_splits(g: &FiniteGroup) -> bool {
    let nil = class_kernel(g, GroupClass::Nilpotent);
    let primes = prime_divisors(g.order() as u64);
    let mut meet = g.whole();
    let mut product = 1usize;
    for l in primes {
        let k = class_kernel(g, GroupClass::Ell(l));
        product *= g.order() / k.order();
        meet = meet.intersect(&k);
    }
    meet == nil && product == g.order() / nil.order()
}
