//! Homomorphisms from curve groups to finite groups, and Galois cover counts.
//!
//! Connected Galois covers with group `G` of a curve correspond to
//! surjections `π₁ → G` up to automorphisms of `G`, so a census counts
//! epimorphisms and divides by `|Aut G|`.

use std::collections::{BTreeMap, HashMap, VecDeque};
use std::fmt::Write as _;
use std::fs::{File, OpenOptions};
use std::io::{BufRead, BufReader, Write};
use std::path::{Path, PathBuf};
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::finite::{automorphism_count, parse_group, FiniteGroup, GroupClass, Subgroup};
use crate::presentation::{punctured_curve_group, surface_group, FpPresentation};
use crate::subgroup::mu_n_kernel_basis;

/// Default cap on the number of generator-image tuples a search may visit.
pub const DEFAULT_BUDGET: u128 = 10_000_000;

/// Environment variable overriding [`DEFAULT_BUDGET`].
pub const BUDGET_ENV: &str = "DEVISSAGE_BUDGET";

/// The budget from `DEVISSAGE_BUDGET`, or the default when unset or invalid.
pub fn budget_from_env() -> u128 {
    std::env::var(BUDGET_ENV)
        .ok()
        .and_then(|v| v.trim().replace('_', "").parse().ok())
        .unwrap_or(DEFAULT_BUDGET)
}

/// A homomorphism from a finitely presented group, given by generator images.
#[derive(Clone, Debug)]
pub struct Homomorphism {
    source: FpPresentation,
    target: FiniteGroup,
    images: Vec<usize>,
}

impl Homomorphism {
    /// Checks that every relator maps to the identity.
    pub fn new(source: FpPresentation, target: FiniteGroup, images: Vec<usize>) -> Result<Self> {
        if images.len() != source.rank() {
            return Err(Error::LengthMismatch);
        }
        if let Some(&bad) = images.iter().find(|&&x| x >= target.order()) {
            return Err(Error::IndexOutOfRange {
                index: bad,
                rank: target.order(),
            });
        }
        if let Some(relator) = source.relators().iter().position(|r| target.evaluate(&images, r) != 0) {
            return Err(Error::RelatorViolated { relator });
        }
        Ok(Homomorphism {
            source,
            target,
            images,
        })
    }

    pub fn source(&self) -> &FpPresentation {
        &self.source
    }

    pub fn target(&self) -> &FiniteGroup {
        &self.target
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn apply(&self, w: &crate::word::Word) -> usize {
        self.target.evaluate(&self.images, w)
    }

    pub fn image(&self) -> Subgroup {
        self.target.generate(&self.images)
    }

    pub fn is_surjective(&self) -> bool {
        self.target.generates(&self.images)
    }
}

/// Depth-first search over generator images. Each relator is checked as soon
/// as the largest generator it involves has been assigned.
struct Search<'a> {
    group: &'a FiniteGroup,
    /// `checks[k]`: relators whose largest generator is `k`.
    checks: Vec<Vec<&'a crate::word::Word>>,
    rank: usize,
}

impl<'a> Search<'a> {
    fn new(p: &'a FpPresentation, group: &'a FiniteGroup, allowed: &[usize], budget: u128) -> Result<Self> {
        let rank = p.rank();
        let required = (allowed.len() as u128)
            .checked_pow(rank as u32)
            .unwrap_or(u128::MAX);
        if required > budget {
            return Err(Error::BudgetExceeded { required, budget });
        }
        let mut checks = vec![Vec::new(); rank];
        for r in p.relators() {
            if let Some(top) = r.letters().iter().map(|l| l.gen).max() {
                checks[top].push(r);
            }
        }
        Ok(Search { group, checks, rank })
    }

    fn consistent(&self, images: &[usize], k: usize) -> bool {
        self.checks[k].iter().all(|r| self.group.evaluate(images, r) == 0)
    }

    /// Visits every solution with `images[0] = first`, in lexicographic order.
    fn run(&self, allowed: &[usize], first: usize, visit: &mut dyn FnMut(&[usize])) {
        let mut images = vec![0; self.rank];
        images[0] = first;
        if self.consistent(&images, 0) {
            self.descend(allowed, &mut images, 1, visit);
        }
    }

    fn descend(&self, allowed: &[usize], images: &mut Vec<usize>, k: usize, visit: &mut dyn FnMut(&[usize])) {
        if k == self.rank {
            visit(images);
            return;
        }
        for &x in allowed {
            images[k] = x;
            if self.consistent(images, k) {
                self.descend(allowed, images, k + 1, visit);
            }
        }
    }

    /// Counts solutions accepted by `keep`, partitioned on the first image.
    fn count(&self, allowed: &[usize], keep: impl Fn(&[usize]) -> bool + Sync) -> u64 {
        if self.rank == 0 {
            return u64::from(keep(&[]));
        }
        allowed
            .par_iter()
            .map(|&first| {
                let mut n = 0u64;
                self.run(allowed, first, &mut |images| n += u64::from(keep(images)));
                n
            })
            .sum()
    }

    fn collect(&self, allowed: &[usize], keep: impl Fn(&[usize]) -> bool + Sync) -> Vec<Vec<usize>> {
        if self.rank == 0 {
            return if keep(&[]) { vec![Vec::new()] } else { Vec::new() };
        }
        let parts: Vec<Vec<Vec<usize>>> = allowed
            .par_iter()
            .map(|&first| {
                let mut out = Vec::new();
                self.run(allowed, first, &mut |images| {
                    if keep(images) {
                        out.push(images.to_vec());
                    }
                });
                out
            })
            .collect();
        parts.into_iter().flatten().collect()
    }
}

/// `|Hom(P, G)|`.
pub fn enumerate_homs(p: &FpPresentation, g: &FiniteGroup, budget: u128) -> Result<u64> {
    let all: Vec<usize> = (0..g.order()).collect();
    Ok(Search::new(p, g, &all, budget)?.count(&all, |_| true))
}

/// Generator-image tuples of all homomorphisms, in lexicographic order.
pub fn list_homs(p: &FpPresentation, g: &FiniteGroup, budget: u128) -> Result<Vec<Vec<usize>>> {
    let all: Vec<usize> = (0..g.order()).collect();
    Ok(Search::new(p, g, &all, budget)?.collect(&all, |_| true))
}

/// Number of surjective homomorphisms, testing generation of each image.
pub fn enumerate_epis(p: &FpPresentation, g: &FiniteGroup, budget: u128) -> Result<u64> {
    let all: Vec<usize> = (0..g.order()).collect();
    Ok(Search::new(p, g, &all, budget)?.count(&all, |images| g.generates(images)))
}

/// Generator-image tuples of all surjections, in lexicographic order.
pub fn list_epis(p: &FpPresentation, g: &FiniteGroup, budget: u128) -> Result<Vec<Vec<usize>>> {
    let all: Vec<usize> = (0..g.order()).collect();
    Ok(Search::new(p, g, &all, budget)?.collect(&all, |images| g.generates(images)))
}

/// Number of surjections by Möbius inversion over the subgroup lattice:
/// `Epi(P, H) = Hom(P, H) − Σ_{K < H} Epi(P, K)`. No generation tests.
pub fn enumerate_epis_by_lattice(p: &FpPresentation, g: &FiniteGroup, budget: u128) -> Result<u64> {
    let all: Vec<usize> = (0..g.order()).collect();
    Search::new(p, g, &all, budget)?;
    let mut subgroups = g.all_subgroups();
    subgroups.sort_by_key(Subgroup::order);
    let mut epi: Vec<i128> = Vec::with_capacity(subgroups.len());
    for (i, h) in subgroups.iter().enumerate() {
        let search = Search::new(p, g, h.elements(), budget)?;
        let mut e = search.count(h.elements(), |_| true) as i128;
        for (j, k) in subgroups[..i].iter().enumerate() {
            if k.order() < h.order() && k.is_subset_of(h) {
                e -= epi[j];
            }
        }
        epi.push(e);
    }
    let top = epi.last().copied().unwrap_or(0);
    u64::try_from(top).map_err(|_| Error::HypothesisViolated("negative lattice count".into()))
}

/// Parses a class list such as `sol,prime-to:5`; a group belongs to the list
/// when it belongs to every class.
pub fn parse_class_list(text: &str) -> Result<Vec<GroupClass>> {
    text.split([',', '+'])
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(str::parse)
        .collect()
}

pub fn class_list_to_string(classes: &[GroupClass]) -> String {
    let mut s = String::new();
    for (i, c) in classes.iter().enumerate() {
        if i > 0 {
            s.push(',');
        }
        let _ = write!(s, "{c}");
    }
    s
}

/// Result of a cover census.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoverCensus {
    pub genus: usize,
    pub punctures: usize,
    pub group: String,
    pub class: String,
    pub hom_count: u64,
    pub epi_count: u64,
    pub aut_count: u64,
    pub cover_count: u64,
    pub elapsed_ms: u64,
}

impl CoverCensus {
    fn key(&self) -> (usize, usize, &str, &str) {
        (self.genus, self.punctures, &self.group, &self.class)
    }
}

/// The fundamental group used for a census: the surface group when `n = 0`,
/// the free punctured-curve group otherwise.
pub fn curve_group(genus: usize, punctures: usize) -> Result<FpPresentation> {
    if punctures == 0 {
        Ok(surface_group(genus))
    } else {
        punctured_curve_group(genus, punctures)
    }
}

/// Append-only JSON-lines store of census records.
#[derive(Clone, Debug)]
pub struct CensusCache {
    path: PathBuf,
}

impl CensusCache {
    pub fn new(path: impl Into<PathBuf>) -> Self {
        CensusCache { path: path.into() }
    }

    pub fn path(&self) -> &Path {
        &self.path
    }

    /// All readable records; a missing file is empty.
    pub fn records(&self) -> Result<Vec<CoverCensus>> {
        let file = match File::open(&self.path) {
            Ok(f) => f,
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(Vec::new()),
            Err(e) => return Err(Error::Cache(e.to_string())),
        };
        let mut out = Vec::new();
        for line in BufReader::new(file).lines() {
            let line = line.map_err(|e| Error::Cache(e.to_string()))?;
            if line.trim().is_empty() {
                continue;
            }
            let record = serde_json::from_str(&line)
                .map_err(|e| Error::Cache(format!("{}: {e}", self.path.display())))?;
            out.push(record);
        }
        Ok(out)
    }

    pub fn lookup(&self, genus: usize, punctures: usize, group: &str, class: &str) -> Result<Option<CoverCensus>> {
        Ok(self
            .records()?
            .into_iter()
            .rev()
            .find(|r| r.key() == (genus, punctures, group, class)))
    }

    pub fn append(&self, record: &CoverCensus) -> Result<()> {
        let mut file = OpenOptions::new()
            .create(true)
            .append(true)
            .open(&self.path)
            .map_err(|e| Error::Cache(e.to_string()))?;
        let line = serde_json::to_string(record).map_err(|e| Error::Cache(e.to_string()))?;
        writeln!(file, "{line}").map_err(|e| Error::Cache(e.to_string()))
    }
}

/// Runs censuses, caching `|Aut G|` per group name and, optionally, whole
/// records on disk.
#[derive(Debug)]
pub struct CensusRunner {
    budget: u128,
    aut: HashMap<String, u64>,
    cache: Option<CensusCache>,
    hits: usize,
}

impl Default for CensusRunner {
    fn default() -> Self {
        CensusRunner::new(budget_from_env())
    }
}

impl CensusRunner {
    pub fn new(budget: u128) -> Self {
        CensusRunner {
            budget,
            aut: HashMap::new(),
            cache: None,
            hits: 0,
        }
    }

    pub fn with_cache(mut self, cache: CensusCache) -> Self {
        self.cache = Some(cache);
        self
    }

    pub fn budget(&self) -> u128 {
        self.budget
    }

    /// Number of censuses answered from the disk cache.
    pub fn cache_hits(&self) -> usize {
        self.hits
    }

    pub fn aut_count(&mut self, g: &FiniteGroup) -> Result<u64> {
        if let Some(&n) = self.aut.get(g.name()) {
            return Ok(n);
        }
        let n = automorphism_count(g, usize::MAX)?;
        self.aut.insert(g.name().to_string(), n);
        Ok(n)
    }

    pub fn census(
        &mut self,
        genus: usize,
        punctures: usize,
        g: &FiniteGroup,
        classes: &[GroupClass],
    ) -> Result<CoverCensus> {
        let start = Instant::now();
        if let Some(c) = classes.iter().find(|c| !c.contains(g)) {
            return Err(Error::ClassViolation {
                class: c.to_string(),
                reason: format!("{} (order {}) is not in the class", g.name(), g.order()),
            });
        }
        let class = class_list_to_string(classes);
        if let Some(cache) = &self.cache {
            if let Some(hit) = cache.lookup(genus, punctures, g.name(), &class)? {
                self.hits += 1;
                return Ok(hit);
            }
        }
        let p = curve_group(genus, punctures)?;
        let hom_count = enumerate_homs(&p, g, self.budget)?;
        let epi_count = enumerate_epis(&p, g, self.budget)?;
        let aut_count = self.aut_count(g)?;
        if epi_count % aut_count != 0 {
            return Err(Error::HypothesisViolated(format!(
                "|Aut| = {aut_count} does not divide {epi_count} surjections"
            )));
        }
        let record = CoverCensus {
            genus,
            punctures,
            group: g.name().to_string(),
            class,
            hom_count,
            epi_count,
            aut_count,
            cover_count: epi_count / aut_count,
            elapsed_ms: start.elapsed().as_millis() as u64,
        };
        if let Some(cache) = &self.cache {
            cache.append(&record)?;
        }
        Ok(record)
    }
}

/// Census with the environment budget and no disk cache.
pub fn count_connected_covers(
    genus: usize,
    punctures: usize,
    g: &FiniteGroup,
    classes: &[GroupClass],
) -> Result<CoverCensus> {
    CensusRunner::default().census(genus, punctures, g, classes)
}

/// Whether the images of the ramification words generate the image of `h`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RamificationCheck {
    pub generated: bool,
    /// Order of the subgroup generated by the ramification images.
    pub ramification_order: usize,
    pub image_order: usize,
    pub ramification_images: BTreeMap<String, usize>,
}

pub fn ramification_generation_check(h: &Homomorphism) -> RamificationCheck {
    let ramification_images: BTreeMap<String, usize> = h
        .source()
        .ramification_words()
        .iter()
        .map(|(label, w)| (label.clone(), h.apply(w)))
        .collect();
    let images: Vec<usize> = ramification_images.values().copied().collect();
    let ramification_order = h.target().generate(&images).order();
    let image_order = h.image().order();
    RamificationCheck {
        generated: ramification_order == image_order,
        ramification_order,
        image_order,
        ramification_images,
    }
}

/// Finite-level check for the kernel of `F₂ → Z/N`: for `h: F₂ → G`, the
/// induced `ψ: image(h) → Z/N` with `ψ(h γ0) = 1`, `ψ(h γ1) = 0`, and the
/// subgroup generated by the images of the `N + 1` kernel basis words.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MuNTransfer {
    pub n: usize,
    pub surjective: bool,
    pub image_order: usize,
    pub kernel_order: usize,
    pub basis_image_order: usize,
    /// The basis images generate exactly `ker ψ`.
    pub generates_kernel: bool,
}

pub fn mu_n_transfer_check(n: usize, h: &Homomorphism) -> Result<MuNTransfer> {
    if h.source().rank() != 2 {
        return Err(Error::InvalidParameter(format!(
            "expected a map from a free group of rank 2, got rank {}",
            h.source().rank()
        )));
    }
    let basis = mu_n_kernel_basis(n)?;
    let g = h.target();
    let gens = h.images();
    let psi_gens = [1 % n, 0];

    // ψ on the image, along a BFS tree, then checked on every edge.
    let mut psi = vec![usize::MAX; g.order()];
    psi[0] = 0;
    let mut queue = VecDeque::from([0]);
    while let Some(x) = queue.pop_front() {
        for (k, &s) in gens.iter().enumerate() {
            let y = g.mul(x, s);
            let v = (psi[x] + psi_gens[k]) % n;
            if psi[y] == usize::MAX {
                psi[y] = v;
                queue.push_back(y);
            } else if psi[y] != v {
                return Err(Error::InducedMapUndefined { n });
            }
        }
    }
    let image = h.image();
    let kernel: Vec<usize> = image.elements().iter().copied().filter(|&x| psi[x] == 0).collect();
    let words: Vec<usize> = basis.generators.iter().map(|(_, w)| h.apply(w)).collect();
    let generated = g.generate(&words);
    Ok(MuNTransfer {
        n,
        surjective: image.order() == g.order(),
        image_order: image.order(),
        kernel_order: kernel.len(),
        basis_image_order: generated.order(),
        generates_kernel: generated.elements() == kernel.as_slice(),
    })
}

/// `F₂` on generators `γ0, γ1`, the source of [`mu_n_transfer_check`].
pub fn two_generator_free_group() -> FpPresentation {
    FpPresentation::with_names(vec!["γ0".into(), "γ1".into()], Vec::new(), Vec::new()).expect("valid names")
}

/// Convenience: a census for a builtin group spec.
pub fn census_for_spec(genus: usize, punctures: usize, spec: &str, classes: &str) -> Result<CoverCensus> {
    let g = parse_group(spec)?;
    count_connected_covers(genus, punctures, &g, &parse_class_list(classes)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::finite::corpus;
    use crate::presentation::punctured_curve_group;

    const B: u128 = DEFAULT_BUDGET;

    fn group(s: &str) -> FiniteGroup {
        parse_group(s).unwrap()
    }

    #[test]
    fn hom_counts() {
        let s3 = group("S3");
        assert_eq!(enumerate_homs(&FpPresentation::free(2), &s3, B).unwrap(), 36);
        assert_eq!(enumerate_homs(&surface_group(1), &s3, B).unwrap(), 18);
        assert_eq!(enumerate_homs(&surface_group(2), &group("C2"), B).unwrap(), 16);
        assert_eq!(enumerate_homs(&FpPresentation::free(0), &s3, B).unwrap(), 1);
    }

    #[test]
    fn epi_counts() {
        let s3 = group("S3");
        assert_eq!(enumerate_epis(&FpPresentation::free(2), &s3, B).unwrap(), 18);
        assert_eq!(enumerate_epis(&surface_group(1), &s3, B).unwrap(), 0);
        assert_eq!(enumerate_epis(&surface_group(2), &group("C2"), B).unwrap(), 15);
        assert_eq!(enumerate_epis(&FpPresentation::free(0), &group("C1"), B).unwrap(), 1);
    }

    #[test]
    fn lattice_oracle_agrees() {
        for g in corpus(12) {
            for p in [FpPresentation::free(1), FpPresentation::free(2), surface_group(1)] {
                assert_eq!(
                    enumerate_epis(&p, &g, B).unwrap(),
                    enumerate_epis_by_lattice(&p, &g, B).unwrap(),
                    "{}",
                    g.name()
                );
            }
        }
    }

    #[test]
    fn listing_is_ordered_and_matches_counts() {
        let s3 = group("S3");
        let p = surface_group(1);
        let homs = list_homs(&p, &s3, B).unwrap();
        assert_eq!(homs.len(), 18);
        assert!(homs.windows(2).all(|w| w[0] < w[1]));
        assert!(list_epis(&p, &s3, B).unwrap().is_empty());
        assert_eq!(list_epis(&FpPresentation::free(2), &s3, B).unwrap().len(), 18);
    }

    #[test]
    fn budget_is_enforced() {
        let err = enumerate_homs(&FpPresentation::free(3), &group("S4"), 1000).unwrap_err();
        assert_eq!(
            err,
            Error::BudgetExceeded {
                required: 24u128.pow(3),
                budget: 1000
            }
        );
    }

    #[test]
    fn census_examples() {
        let sol5 = [GroupClass::Solvable, GroupClass::PrimeTo(5)];
        let c = count_connected_covers(0, 3, &group("S3"), &sol5).unwrap();
        assert_eq!((c.epi_count, c.aut_count, c.cover_count), (18, 6, 3));
        assert_eq!(c.class, "sol,prime-to:5");
        assert_eq!(parse_class_list(&c.class).unwrap(), sol5);
        let c = count_connected_covers(2, 0, &group("C2"), &[GroupClass::PrimeTo(3)]).unwrap();
        assert_eq!(c.cover_count, 15);
        let c = count_connected_covers(1, 0, &group("S3"), &[GroupClass::Solvable]).unwrap();
        assert_eq!(c.cover_count, 0);
        let err = count_connected_covers(0, 3, &group("S3"), &[GroupClass::PrimeTo(3)]).unwrap_err();
        assert!(matches!(err, Error::ClassViolation { .. }));
    }

    #[test]
    fn abelian_targets_see_only_free_rank() {
        for g in corpus(8).into_iter().filter(FiniteGroup::is_abelian) {
            for (genus, n) in [(0, 2), (1, 1), (0, 3), (1, 2)] {
                let p = punctured_curve_group(genus, n).unwrap();
                let free = FpPresentation::free(2 * genus + n - 1);
                assert_eq!(enumerate_epis(&p, &g, B).unwrap(), enumerate_epis(&free, &g, B).unwrap());
            }
        }
    }

    #[test]
    fn cache_round_trip() {
        let dir = tempfile::tempdir().unwrap();
        let cache = CensusCache::new(dir.path().join("census.jsonl"));
        let mut runner = CensusRunner::new(B).with_cache(cache.clone());
        let first = runner.census(0, 3, &group("S3"), &[GroupClass::Solvable]).unwrap();
        assert_eq!(runner.cache_hits(), 0);
        let second = runner.census(0, 3, &group("S3"), &[GroupClass::Solvable]).unwrap();
        assert_eq!(runner.cache_hits(), 1);
        assert_eq!(first, second);
        runner.census(0, 3, &group("C3"), &[GroupClass::Solvable]).unwrap();
        assert_eq!(cache.records().unwrap().len(), 2);
    }

    #[test]
    fn ramification_examples() {
        let p = punctured_curve_group(0, 3).unwrap();
        let c6 = group("C6");
        for images in list_epis(&p, &c6, B).unwrap() {
            let h = Homomorphism::new(p.clone(), c6.clone(), images).unwrap();
            assert!(ramification_generation_check(&h).generated);
        }
        let p = punctured_curve_group(1, 1).unwrap();
        let v4 = group("C2xC2");
        let h = Homomorphism::new(p.clone(), v4.clone(), v4.generators().to_vec()).unwrap();
        let check = ramification_generation_check(&h);
        assert!(!check.generated);
        assert_eq!((check.ramification_order, check.image_order), (1, 4));
        let h = Homomorphism::new(p, group("C1"), vec![0, 0]).unwrap();
        assert!(ramification_generation_check(&h).generated);
    }

    #[test]
    fn homomorphism_rejects_relator() {
        let s3 = group("S3");
        let (a, b) = (s3.generators()[0], s3.generators()[1]);
        assert!(s3.mul(a, b) != s3.mul(b, a));
        let err = Homomorphism::new(surface_group(1), s3, vec![a, b]).unwrap_err();
        assert!(matches!(err, Error::RelatorViolated { .. }));
    }

    fn element(g: &FiniteGroup, label: &str) -> usize {
        (0..g.order()).find(|&x| g.label(x) == label).unwrap()
    }

    #[test]
    fn mu_n_examples() {
        let f2 = two_generator_free_group();
        let s3 = group("S3");
        let h = Homomorphism::new(f2.clone(), s3.clone(), vec![element(&s3, "(1 2)"), element(&s3, "(1 2 3)")]).unwrap();
        let r = mu_n_transfer_check(2, &h).unwrap();
        assert!(r.surjective && r.generates_kernel);
        assert_eq!((r.kernel_order, r.basis_image_order), (3, 3));

        let c2 = group("C2");
        let h = Homomorphism::new(f2.clone(), c2.clone(), vec![c2.generators()[0], 0]).unwrap();
        let r = mu_n_transfer_check(2, &h).unwrap();
        assert_eq!((r.kernel_order, r.basis_image_order), (1, 1));

        let c6 = group("C6");
        let one = c6.generators()[0];
        let h = Homomorphism::new(f2.clone(), c6.clone(), vec![one, c6.pow(one, 3)]).unwrap();
        let r = mu_n_transfer_check(3, &h).unwrap();
        assert!(r.generates_kernel);
        assert_eq!(r.kernel_order, 2);

        // γ0 of order 2 cannot map to a generator of Z/3.
        let h = Homomorphism::new(f2, c2.clone(), vec![c2.generators()[0], 0]).unwrap();
        assert_eq!(mu_n_transfer_check(3, &h).unwrap_err(), Error::InducedMapUndefined { n: 3 });
    }
}
