use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::finite::perm::Perm;

/// Default cap on the order of groups built by closure.
pub const DEFAULT_ORDER_LIMIT: usize = 200;

/// A finite group given by its Cayley table. Element 0 is the identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroup {
    order: usize,
    table: Vec<usize>,
    inverses: Vec<usize>,
    generators: Vec<usize>,
    labels: Option<Vec<String>>,
    name: String,
}

/// A subgroup as a sorted set of element indices.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Subgroup(Vec<usize>);

impl Subgroup {
    pub fn from_sorted(elements: Vec<usize>) -> Self {
        debug_assert!(elements.windows(2).all(|w| w[0] < w[1]));
        Subgroup(elements)
    }

    pub fn trivial() -> Self {
        Subgroup(vec![0])
    }

    pub fn order(&self) -> usize {
        self.0.len()
    }

    pub fn elements(&self) -> &[usize] {
        &self.0
    }

    pub fn contains(&self, x: usize) -> bool {
        self.0.binary_search(&x).is_ok()
    }

    pub fn is_subset_of(&self, other: &Subgroup) -> bool {
        self.0.iter().all(|&x| other.contains(x))
    }

    pub fn intersect(&self, other: &Subgroup) -> Subgroup {
        Subgroup(self.0.iter().copied().filter(|&x| other.contains(x)).collect())
    }

    pub fn is_trivial(&self) -> bool {
        self.0.len() == 1
    }
}

/// A quotient `G/N` with its projection.
#[derive(Clone, Debug)]
pub struct Quotient {
    pub group: FiniteGroup,
    /// Image of each element of `G`.
    pub projection: Vec<usize>,
    /// Minimal element of each coset.
    pub representatives: Vec<usize>,
}

impl FiniteGroup {
    /// Builds a group from a raw Cayley table. Checks the group axioms
    /// (associativity exhaustively up to order 64, sampled above) and that
    /// `generators` generate.
    pub fn from_table(
        order: usize,
        table: Vec<usize>,
        generators: Vec<usize>,
        name: impl Into<String>,
    ) -> Result<Self> {
        let bad = |r: &str| Error::InvalidParameter(format!("not a group table: {r}"));
        if order == 0 || table.len() != order * order {
            return Err(bad("wrong size"));
        }
        if table.iter().any(|&x| x >= order) {
            return Err(bad("entry out of range"));
        }
        for a in 0..order {
            if table[a] != a || table[a * order] != a {
                return Err(bad("element 0 is not the identity"));
            }
            let mut row = vec![false; order];
            let mut col = vec![false; order];
            for b in 0..order {
                row[table[a * order + b]] = true;
                col[table[b * order + a]] = true;
            }
            if row.contains(&false) || col.contains(&false) {
                return Err(bad("row or column is not a permutation"));
            }
        }
        let mul = |a: usize, b: usize| table[a * order + b];
        let triples: Box<dyn Iterator<Item = (usize, usize, usize)>> = if order <= 64 {
            Box::new((0..order).flat_map(move |a| {
                (0..order).flat_map(move |b| (0..order).map(move |c| (a, b, c)))
            }))
        } else {
            // Deterministic sample of 20000 triples.
            let mut s: u64 = 0x9e37_79b9_7f4a_7c15;
            Box::new((0..20_000).map(move |_| {
                let mut next = || {
                    s ^= s << 13;
                    s ^= s >> 7;
                    s ^= s << 17;
                    (s % order as u64) as usize
                };
                (next(), next(), next())
            }))
        };
        for (a, b, c) in triples {
            if mul(mul(a, b), c) != mul(a, mul(b, c)) {
                return Err(bad("not associative"));
            }
        }
        let inverses = (0..order)
            .map(|a| (0..order).find(|&b| mul(a, b) == 0).expect("rows are permutations"))
            .collect();
        let g = FiniteGroup {
            order,
            table,
            inverses,
            generators,
            labels: None,
            name: name.into(),
        };
        if g.generators.iter().any(|&x| x >= order) || g.generate(&g.generators).order() != order {
            return Err(bad("generators do not generate"));
        }
        Ok(g)
    }

    /// Breadth-first closure of a list of permutations. Elements are numbered
    /// in discovery order with the identity first.
    pub fn from_permutations(perms: &[Perm], limit: usize, name: impl Into<String>) -> Result<Self> {
        let degree = perms.iter().map(Perm::degree).max().unwrap_or(1).max(1);
        let gens: Vec<Perm> = perms.iter().map(|p| p.extend(degree)).collect();
        let identity = Perm::identity(degree);

        let mut elements = vec![identity.clone()];
        let mut index: HashMap<Perm, usize> = HashMap::from([(identity, 0)]);
        let mut queue = VecDeque::from([0usize]);
        while let Some(i) = queue.pop_front() {
            for g in &gens {
                let p = elements[i].then(g);
                if !index.contains_key(&p) {
                    if elements.len() >= limit {
                        return Err(Error::OrderLimitExceeded { limit });
                    }
                    index.insert(p.clone(), elements.len());
                    queue.push_back(elements.len());
                    elements.push(p);
                }
            }
        }

        let order = elements.len();
        let mut table = vec![0; order * order];
        for a in 0..order {
            for b in 0..order {
                table[a * order + b] = index[&elements[a].then(&elements[b])];
            }
        }
        let mut generators: Vec<usize> = Vec::new();
        for g in &gens {
            let i = index[g];
            if i != 0 && !generators.contains(&i) {
                generators.push(i);
            }
        }
        let inverses = (0..order).map(|a| index[&elements[a].inverse()]).collect();
        Ok(FiniteGroup {
            order,
            table,
            inverses,
            generators,
            labels: Some(elements.iter().map(|p| p.to_string()).collect()),
            name: name.into(),
        })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn label(&self, x: usize) -> String {
        match &self.labels {
            Some(l) => l[x].clone(),
            None => x.to_string(),
        }
    }

    /// Row-major Cayley table.
    pub fn table(&self) -> &[usize] {
        &self.table
    }

    pub fn cayley_rows(&self) -> Vec<Vec<usize>> {
        self.table.chunks(self.order).map(<[usize]>::to_vec).collect()
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b]
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inverses[a]
    }

    pub fn pow(&self, a: usize, n: i64) -> usize {
        let base = if n < 0 { self.inv(a) } else { a };
        (0..n.unsigned_abs()).fold(0, |acc, _| self.mul(acc, base))
    }

    /// Image of `word` under the map sending generator `k` to `images[k]`.
    pub fn evaluate(&self, images: &[usize], word: &crate::word::Word) -> usize {
        word.letters().iter().fold(0, |acc, l| {
            let x = images[l.gen];
            self.mul(acc, if l.inverse { self.inv(x) } else { x })
        })
    }

    /// `a b a⁻¹ b⁻¹`.
    pub fn commutator(&self, a: usize, b: usize) -> usize {
        self.mul(self.mul(a, b), self.mul(self.inv(a), self.inv(b)))
    }

    /// `b a b⁻¹`.
    pub fn conjugate(&self, a: usize, b: usize) -> usize {
        self.mul(self.mul(b, a), self.inv(b))
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut n = 1;
        while x != 0 {
            x = self.mul(x, a);
            n += 1;
        }
        n
    }

    pub fn is_abelian(&self) -> bool {
        self.generators.iter().all(|&a| {
            self.generators.iter().all(|&b| self.mul(a, b) == self.mul(b, a))
        })
    }

    pub fn whole(&self) -> Subgroup {
        Subgroup((0..self.order).collect())
    }

    /// Subgroup generated by `gens`.
    pub fn generate(&self, gens: &[usize]) -> Subgroup {
        let mut seen = vec![false; self.order];
        seen[0] = true;
        let mut stack = vec![0];
        while let Some(x) = stack.pop() {
            for &g in gens {
                let y = self.mul(x, g);
                if !seen[y] {
                    seen[y] = true;
                    stack.push(y);
                }
            }
        }
        Subgroup((0..self.order).filter(|&x| seen[x]).collect())
    }

    /// Whether `gens` generate the whole group.
    pub fn generates(&self, gens: &[usize]) -> bool {
        self.generate(gens).order() == self.order
    }

    /// A small generating set of `h`, chosen greedily by element index.
    pub fn generating_set(&self, h: &Subgroup) -> Vec<usize> {
        let mut gens = Vec::new();
        let mut current = Subgroup::trivial();
        for &x in h.elements() {
            if !current.contains(x) {
                gens.push(x);
                current = self.generate(&gens);
                if current.order() == h.order() {
                    break;
                }
            }
        }
        gens
    }

    /// Smallest normal subgroup containing `elements`.
    pub fn normal_closure(&self, elements: &[usize]) -> Subgroup {
        let mut gens: Vec<usize> = Vec::new();
        let mut current = Subgroup::trivial();
        let mut pending: Vec<usize> = elements.to_vec();
        while let Some(x) = pending.pop() {
            if current.contains(x) {
                continue;
            }
            gens.push(x);
            current = self.generate(&gens);
            for &h in &self.generators {
                for &y in &gens {
                    pending.push(self.conjugate(y, h));
                    pending.push(self.conjugate(y, self.inv(h)));
                }
            }
        }
        current
    }

    pub fn is_normal(&self, h: &Subgroup) -> bool {
        self.generators
            .iter()
            .all(|&g| h.elements().iter().all(|&x| h.contains(self.conjugate(x, g))))
    }

    pub fn is_subgroup(&self, h: &Subgroup) -> bool {
        h.contains(0)
            && h.elements()
                .iter()
                .all(|&a| h.elements().iter().all(|&b| h.contains(self.mul(a, self.inv(b)))))
    }

    /// `[A, B]`, the subgroup generated by commutators `[a, b]`.
    pub fn commutator_subgroup(&self, a: &Subgroup, b: &Subgroup) -> Subgroup {
        let comms: BTreeSet<usize> = a
            .elements()
            .iter()
            .flat_map(|&x| b.elements().iter().map(move |&y| (x, y)))
            .map(|(x, y)| self.commutator(x, y))
            .collect();
        let comms: Vec<usize> = comms.into_iter().collect();
        self.generate(&self.generating_set(&self.generate(&comms)))
    }

    pub fn conjugacy_classes(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.order];
        let mut classes = Vec::new();
        for x in 0..self.order {
            if seen[x] {
                continue;
            }
            let class: BTreeSet<usize> = (0..self.order).map(|g| self.conjugate(x, g)).collect();
            for &y in &class {
                seen[y] = true;
            }
            classes.push(class.into_iter().collect());
        }
        classes
    }

    /// Every normal subgroup, sorted by order then elements.
    pub fn normal_subgroups(&self) -> Vec<Subgroup> {
        let mut found: BTreeSet<Subgroup> = BTreeSet::new();
        found.insert(Subgroup::trivial());
        let minimal: BTreeSet<Subgroup> = self
            .conjugacy_classes()
            .iter()
            .map(|c| self.normal_closure(c))
            .collect();
        found.extend(minimal.iter().cloned());
        let mut frontier: Vec<Subgroup> = found.iter().cloned().collect();
        while let Some(n) = frontier.pop() {
            for m in &minimal {
                if m.is_subset_of(&n) {
                    continue;
                }
                let mut gens = self.generating_set(&n);
                gens.extend(self.generating_set(m));
                let joined = self.generate(&gens);
                if found.insert(joined.clone()) {
                    frontier.push(joined);
                }
            }
        }
        sort_by_order(found)
    }

    /// Every subgroup, sorted by order then elements.
    pub fn all_subgroups(&self) -> Vec<Subgroup> {
        let cyclic: BTreeSet<Subgroup> = (0..self.order).map(|x| self.generate(&[x])).collect();
        let cyclic_gens: Vec<usize> = cyclic
            .iter()
            .map(|c| *c.elements().iter().find(|&&x| self.generate(&[x]) == *c).expect("cyclic"))
            .collect();
        let mut found: BTreeSet<Subgroup> = cyclic.clone();
        let mut frontier: Vec<Subgroup> = found.iter().cloned().collect();
        while let Some(h) = frontier.pop() {
            let hgens = self.generating_set(&h);
            for &c in &cyclic_gens {
                if h.contains(c) {
                    continue;
                }
                let mut gens = hgens.clone();
                gens.push(c);
                let joined = self.generate(&gens);
                if found.insert(joined.clone()) {
                    frontier.push(joined);
                }
            }
        }
        sort_by_order(found)
    }

    /// Builds `h` as a group in its own right, with the embedding into `self`.
    pub fn subgroup_as_group(&self, h: &Subgroup) -> (FiniteGroup, Vec<usize>) {
        let elems = h.elements();
        let pos = |x: usize| elems.binary_search(&x).expect("closed");
        let n = elems.len();
        let mut table = vec![0; n * n];
        for (i, &a) in elems.iter().enumerate() {
            for (j, &b) in elems.iter().enumerate() {
                table[i * n + j] = pos(self.mul(a, b));
            }
        }
        let generators = self.generating_set(h).into_iter().map(pos).collect();
        let inverses = elems.iter().map(|&a| pos(self.inv(a))).collect();
        let labels = Some(elems.iter().map(|&a| self.label(a)).collect());
        let g = FiniteGroup {
            order: n,
            table,
            inverses,
            generators,
            labels,
            name: format!("{}[sub {}]", self.name, n),
        };
        (g, elems.to_vec())
    }

    /// `G/N`, cosets numbered by their minimal element.
    pub fn quotient(&self, n: &Subgroup) -> Result<Quotient> {
        if !self.is_subgroup(n) || !self.is_normal(n) {
            return Err(Error::NotNormal);
        }
        let mut projection = vec![usize::MAX; self.order];
        let mut representatives = Vec::new();
        for g in 0..self.order {
            if projection[g] != usize::MAX {
                continue;
            }
            let c = representatives.len();
            representatives.push(g);
            for &k in n.elements() {
                projection[self.mul(g, k)] = c;
            }
        }
        let m = representatives.len();
        let mut table = vec![0; m * m];
        for (i, &a) in representatives.iter().enumerate() {
            for (j, &b) in representatives.iter().enumerate() {
                table[i * m + j] = projection[self.mul(a, b)];
            }
        }
        let mut generators: Vec<usize> = Vec::new();
        for &g in &self.generators {
            let c = projection[g];
            if c != 0 && !generators.contains(&c) {
                generators.push(c);
            }
        }
        let inverses = representatives.iter().map(|&a| projection[self.inv(a)]).collect();
        let group = FiniteGroup {
            order: m,
            table,
            inverses,
            generators,
            labels: None,
            name: format!("{}/{}", self.name, n.order()),
        };
        Ok(Quotient {
            group,
            projection,
            representatives,
        })
    }

    /// Direct product; `(a, b)` has index `a * |H| + b`.
    pub fn direct_product(&self, other: &FiniteGroup) -> FiniteGroup {
        let (m, n) = (self.order, other.order);
        let order = m * n;
        let mut table = vec![0; order * order];
        for x in 0..order {
            for y in 0..order {
                let a = self.mul(x / n, y / n);
                let b = other.mul(x % n, y % n);
                table[x * order + y] = a * n + b;
            }
        }
        let mut generators: Vec<usize> = self.generators.iter().map(|&a| a * n).collect();
        generators.extend(other.generators.iter().copied());
        let inverses = (0..order)
            .map(|x| self.inv(x / n) * n + other.inv(x % n))
            .collect();
        let labels = Some(
            (0..order)
                .map(|x| format!("({}, {})", self.label(x / n), other.label(x % n)))
                .collect(),
        );
        FiniteGroup {
            order,
            table,
            inverses,
            generators,
            labels,
            name: format!("{}x{}", self.name, other.name),
        }
    }
}

fn sort_by_order(set: BTreeSet<Subgroup>) -> Vec<Subgroup> {
    let mut v: Vec<Subgroup> = set.into_iter().collect();
    v.sort_by(|a, b| a.order().cmp(&b.order()).then_with(|| a.cmp(b)));
    v
}

impl fmt::Display for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (order {})", self.name, self.order)
    }
}
