//! Homomorphisms between Cayley-table groups, specified by generator images.

use crate::error::{Error, Result};
use crate::finite::group::FiniteGroup;

/// Each non-identity element written as `parent · generator` along a
/// breadth-first spanning tree.
#[derive(Clone, Debug)]
pub struct SpanningTree {
    /// `(parent, generator position)` per element, in BFS order.
    steps: Vec<(usize, usize, usize)>,
    generators: Vec<usize>,
}

impl SpanningTree {
    pub fn new(g: &FiniteGroup) -> Self {
        let generators = g.generators().to_vec();
        let mut seen = vec![false; g.order()];
        seen[0] = true;
        let mut queue = std::collections::VecDeque::from([0]);
        let mut steps = Vec::with_capacity(g.order());
        while let Some(x) = queue.pop_front() {
            for (k, &s) in generators.iter().enumerate() {
                let y = g.mul(x, s);
                if !seen[y] {
                    seen[y] = true;
                    steps.push((y, x, k));
                    queue.push_back(y);
                }
            }
        }
        SpanningTree { steps, generators }
    }

    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    /// Extends generator images to a map `G → H` if it is a homomorphism.
    pub fn extend(&self, g: &FiniteGroup, h: &FiniteGroup, images: &[usize]) -> Option<Vec<usize>> {
        let mut map = vec![usize::MAX; g.order()];
        map[0] = 0;
        for &(y, x, k) in &self.steps {
            map[y] = h.mul(map[x], images[k]);
        }
        for x in 0..g.order() {
            for (k, &s) in self.generators.iter().enumerate() {
                if map[g.mul(x, s)] != h.mul(map[x], images[k]) {
                    return None;
                }
            }
        }
        Some(map)
    }
}

/// All homomorphisms `G → H` as element maps, by exhaustive search over
/// generator images with element-order pruning.
pub fn homomorphisms(g: &FiniteGroup, h: &FiniteGroup) -> Vec<Vec<usize>> {
    let tree = SpanningTree::new(g);
    let candidates: Vec<Vec<usize>> = tree
        .generators()
        .iter()
        .map(|&s| {
            let n = g.element_order(s);
            (0..h.order()).filter(|&y| n.is_multiple_of(h.element_order(y))).collect()
        })
        .collect();
    let mut out = Vec::new();
    for_each_tuple(&candidates, |images| {
        if let Some(map) = tree.extend(g, h, images) {
            out.push(map);
        }
    });
    out
}

/// Number of automorphisms, by backtracking over images of the generators.
pub fn automorphism_count(g: &FiniteGroup, limit: usize) -> Result<u64> {
    if g.order() > limit {
        return Err(Error::OrderLimitExceeded { limit });
    }
    let tree = SpanningTree::new(g);
    let candidates: Vec<Vec<usize>> = tree
        .generators()
        .iter()
        .map(|&s| {
            let n = g.element_order(s);
            (0..g.order()).filter(|&y| g.element_order(y) == n).collect()
        })
        .collect();
    let mut count = 0u64;
    for_each_tuple(&candidates, |images| {
        if !g.generates(images) {
            return;
        }
        if let Some(map) = tree.extend(g, g, images) {
            if is_bijective(&map) {
                count += 1;
            }
        }
    });
    Ok(count)
}

/// Counts of endomorphisms, surjective endomorphisms, and surjective ones
/// that are also injective.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
pub struct EndomorphismCensus {
    pub endomorphisms: u64,
    pub surjective: u64,
    pub surjective_and_injective: u64,
}

pub fn endomorphism_census(g: &FiniteGroup) -> EndomorphismCensus {
    let mut census = EndomorphismCensus {
        endomorphisms: 0,
        surjective: 0,
        surjective_and_injective: 0,
    };
    for map in homomorphisms(g, g) {
        census.endomorphisms += 1;
        let mut hit = vec![false; g.order()];
        for &y in &map {
            hit[y] = true;
        }
        if hit.iter().all(|&b| b) {
            census.surjective += 1;
            if is_bijective(&map) {
                census.surjective_and_injective += 1;
            }
        }
    }
    census
}

fn is_bijective(map: &[usize]) -> bool {
    let mut seen = vec![false; map.len()];
    map.iter().all(|&y| y < map.len() && !std::mem::replace(&mut seen[y], true))
}

fn for_each_tuple(candidates: &[Vec<usize>], mut f: impl FnMut(&[usize])) {
    if candidates.iter().any(Vec::is_empty) {
        return;
    }
    let mut idx = vec![0usize; candidates.len()];
    let mut tuple: Vec<usize> = candidates.iter().map(|c| c[0]).collect();
    loop {
        f(&tuple);
        let mut k = candidates.len();
        loop {
            if k == 0 {
                return;
            }
            k -= 1;
            idx[k] += 1;
            if idx[k] < candidates[k].len() {
                tuple[k] = candidates[k][idx[k]];
                break;
            }
            idx[k] = 0;
            tuple[k] = candidates[k][0];
        }
    }
}
