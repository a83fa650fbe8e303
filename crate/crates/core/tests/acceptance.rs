//! Acceptance checks. Each check prints one line with its verdict and
//! runtime, and fails if the result is wrong or the time limit is exceeded.
//! Expected values come from brute-force oracles written here against the
//! Cayley table only, or from closed formulas.

use std::collections::{BTreeSet, HashMap};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use devissage::completion::{
    max_class_quotient, nilpotent_sylow_decomposition, verify_completion_exactness, verify_right_exactness,
};
use devissage::covers::{count_connected_covers, enumerate_epis, enumerate_epis_by_lattice, DEFAULT_BUDGET};
use devissage::finite::{corpus, endomorphism_census, parse_group, FiniteGroup, GroupClass, Subgroup};
use devissage::presentation::{punctured_curve_group, surface_group};
use devissage::subgroup::{
    chi_kernel_basis, hyperelliptic_quotient, kernel_coset_table, mu_n_kernel_basis, schreier_generators, ChiKernel,
};
use devissage::{AbelianInvariants, FpPresentation, Letter, Word};

type Check = fn() -> Result<String, String>;

const CHECKS: &[(u32, &str, u64, Check)] = &[
    (1, "Schreier generator count of random kernels", 10, schreier_rank),
    (2, "F2 -> Z/N kernel basis", 1, mu_n_basis),
    (3, "parity kernel basis and rewriting", 30, chi_basis),
    (4, "hyperelliptic quotient is free", 5, hyperelliptic),
    (5, "cover census", 60, cover_census),
    (6, "class quotient fast path vs intersection oracle", 60, completion),
    (7, "Sylow decomposition of nilpotent groups", 30, sylow),
    (8, "completion exactness", 30, exactness),
    (9, "surjective endomorphisms are bijective", 60, hopf),
    (10, "abelianization of punctured and filled curves", 5, abelianization),
];

fn main() -> ExitCode {
    let mut failed = 0;
    for &(id, name, limit, check) in CHECKS {
        let start = Instant::now();
        let result = check();
        let elapsed = start.elapsed();
        let limit = Duration::from_secs(limit);
        let (verdict, note) = match result {
            Ok(note) if elapsed <= limit => ("PASS", note),
            Ok(note) => ("FAIL", format!("{note}; over time limit")),
            Err(e) => ("FAIL", e),
        };
        if verdict == "FAIL" {
            failed += 1;
        }
        println!(
            "[{id:>2}] {verdict} {name} ({:.2} s, limit {} s): {note}",
            elapsed.as_secs_f64(),
            limit.as_secs()
        );
    }
    println!("acceptance: {} passed, {failed} failed", CHECKS.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

// ---- oracles over the Cayley table ----

fn closure(g: &FiniteGroup, gens: &[usize]) -> BTreeSet<usize> {
    let mut set = BTreeSet::from([0]);
    loop {
        let mut grew = false;
        for x in set.clone() {
            for &s in gens {
                grew |= set.insert(g.mul(x, s));
            }
        }
        if !grew {
            return set;
        }
    }
}

fn eval(g: &FiniteGroup, images: &[usize], w: &Word) -> usize {
    let mut x = 0;
    for l in w.letters() {
        let y = images[l.gen];
        x = g.mul(x, if l.inverse { g.inv(y) } else { y });
    }
    x
}

fn words(rank: usize, items: &[&[(usize, i64)]]) -> BTreeSet<Word> {
    items.iter().map(|p| Word::from_powers(rank, p).unwrap()).collect()
}

// ---- 1 ----

fn schreier_rank() -> Result<String, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let groups: Vec<FiniteGroup> = ["C2", "C3", "C4", "C5", "C6", "C2xC2", "S3"]
        .iter()
        .map(|s| parse_group(s).unwrap())
        .collect();
    let samples = 60;
    for _ in 0..samples {
        let r = rng.gen_range(2..=3);
        let g = &groups[rng.gen_range(0..groups.len())];
        let images: Vec<usize> = (0..r).map(|_| rng.gen_range(0..g.order())).collect();
        let table = kernel_coset_table(&FpPresentation::free(r), g, &images).map_err(|e| e.to_string())?;
        let basis = schreier_generators(&table);
        let i = closure(g, &images).len();
        let expected = i * (r - 1) + 1;
        ensure(basis.rank() == expected, || {
            format!("F{r} -> {} {images:?}: {} generators, expected {expected}", g.name(), basis.rank())
        })?;
        for (_, w) in &basis.generators {
            ensure(eval(g, &images, w) == 0, || format!("{w} not in the kernel"))?;
        }
    }
    Ok(format!("{samples} kernels"))
}

// ---- 2 ----

fn mu_n_basis() -> Result<String, String> {
    for n in 1..=8usize {
        // t·x·rep(tx)⁻¹ over t = γ0^i: only i = N−1 survives for x = γ0.
        let mut expected: Vec<Vec<(usize, i64)>> = vec![vec![(0, n as i64)]];
        for i in 0..n as i64 {
            expected.push(vec![(0, i), (1, 1), (0, -i)]);
        }
        let refs: Vec<&[(usize, i64)]> = expected.iter().map(Vec::as_slice).collect();
        let expected = words(2, &refs);
        let basis = mu_n_kernel_basis(n).map_err(|e| e.to_string())?;
        let schreier = schreier_generators(&basis.table).word_set();
        ensure(basis.word_set() == expected, || format!("N={n}: basis differs from the formula"))?;
        ensure(schreier == expected, || format!("N={n}: Schreier basis differs"))?;
        ensure(basis.rank() == n + 1, || format!("N={n}: size {}", basis.rank()))?;
    }
    Ok("N = 1..8".into())
}

// ---- 3 ----

/// Labelled basis words built from the closed list.
fn chi_oracle(g: usize, n: usize) -> Vec<(String, Word)> {
    let m = 2 * g + 1;
    let r = m + n;
    let w = |p: &[(usize, i64)]| Word::from_powers(r, p).unwrap();
    let two = |a: usize, b: usize| {
        if a >= 10 || b >= 10 {
            format!("g{a}_{b}")
        } else {
            format!("g{a}{b}")
        }
    };
    let mut out = Vec::new();
    for i in 1..=m {
        out.push((two(1, i), w(&[(0, 1), (i - 1, 1)])));
    }
    for j in 2..=m {
        out.push((two(j, 1), w(&[(j - 1, 1), (0, -1)])));
    }
    for i in m + 1..=r {
        out.push((format!("y{i}"), w(&[(i - 1, 1)])));
    }
    for i in m + 1..=r {
        out.push((format!("c{i}"), w(&[(0, 1), (i - 1, 1), (0, -1)])));
    }
    out
}

fn random_kernel_word(rng: &mut ChaCha8Rng, basis: &[(String, Word)], rank: usize, odd: usize) -> Word {
    loop {
        let w = if rng.gen_bool(0.5) {
            // A product of conjugates of basis words.
            let mut w = Word::identity(rank);
            for _ in 0..rng.gen_range(1..=3) {
                let b = &basis[rng.gen_range(0..basis.len())].1;
                let b = if rng.gen_bool(0.5) { b.invert() } else { b.clone() };
                let c = Word::generator(rank, rng.gen_range(0..rank)).unwrap();
                w = w.multiply(&b.conjugate(&c).unwrap()).unwrap();
            }
            w
        } else {
            let len = rng.gen_range(0..=20);
            let letters = (0..len).map(|_| Letter::new(rng.gen_range(0..rank), rng.gen_bool(0.5)));
            let w = Word::reduce(rank, letters).unwrap();
            if w.letters().iter().filter(|l| l.gen < odd).count() % 2 == 1 {
                continue;
            }
            w
        };
        if w.len() <= 20 {
            return w;
        }
    }
}

fn chi_basis() -> Result<String, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let mut rewrites = 0;
    let cases: Vec<(usize, usize)> = (1..=2).flat_map(|g| (0..=2).map(move |n| (g, n))).collect();
    for &(g, n) in &cases {
        let oracle = chi_oracle(g, n);
        let basis = chi_kernel_basis(g, n).map_err(|e| e.to_string())?;
        ensure(basis.rank() == 4 * g + 2 * n + 1, || format!("g={g} n={n}: size {}", basis.rank()))?;
        ensure(basis.generators == oracle, || format!("g={g} n={n}: labelled basis differs"))?;
        let schreier = schreier_generators(&basis.table);
        let transversal: Vec<String> = basis.table.transversal().iter().map(Word::to_string).collect();
        ensure(transversal == ["", "a"], || format!("transversal {transversal:?}"))?;
        ensure(schreier.word_set() == basis.word_set(), || format!("g={g} n={n}: Schreier basis differs"))?;

        let k = ChiKernel::new(g, n).map_err(|e| e.to_string())?;
        let lookup: HashMap<&str, &Word> = oracle.iter().map(|(l, w)| (l.as_str(), w)).collect();
        let rank = 2 * g + 1 + n;
        let per_case = 1000 / cases.len() + usize::from(rewrites == 0) * (1000 % cases.len());
        for _ in 0..per_case {
            let w = random_kernel_word(&mut rng, &oracle, rank, 2 * g + 1);
            let factors = devissage::subgroup::rewrite_in_chi_basis(g, n, &w).map_err(|e| format!("{w}: {e}"))?;
            let mut product = Word::identity(rank);
            for (label, inverse) in &factors {
                let b = lookup[label.as_str()];
                product = product.multiply(&if *inverse { b.invert() } else { b.clone() }).unwrap();
            }
            ensure(product == w, || format!("g={g} n={n}: {w} rewrote to {product}"))?;
            ensure(k.contains(&w), || format!("{w} should be in the kernel"))?;
            rewrites += 1;
        }
    }
    ensure(rewrites >= 1000, || format!("only {rewrites} rewrites"))?;
    Ok(format!("g <= 2, n <= 2, {rewrites} rewrites"))
}

// ---- 4 ----

fn hyperelliptic() -> Result<String, String> {
    for g in 1..=2 {
        for n in 0..=2 {
            for fill in [false, true] {
                if fill && n == 0 {
                    continue;
                }
                let q = hyperelliptic_quotient(g, n, fill).map_err(|e| e.to_string())?;
                let t = q.tietze_eliminate();
                let expected = 2 * g + 2 * n - usize::from(fill);
                ensure(t.is_free() && t.rank() == expected, || {
                    format!("g={g} n={n} fill={fill}: rank {} free={}", t.rank(), t.is_free())
                })?;
                ensure(q.abelianization() == AbelianInvariants::free(expected), || {
                    format!("g={g} n={n}: abelianization {}", q.abelianization())
                })?;
            }
        }
    }
    Ok("g <= 2, n <= 2, both sheets".into())
}

// ---- 5 ----

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn cover_census() -> Result<String, String> {
    let sol = [GroupClass::Solvable];
    let s3 = parse_group("S3").unwrap();
    let c = count_connected_covers(0, 3, &s3, &[GroupClass::Solvable, GroupClass::PrimeTo(5)]).map_err(|e| e.to_string())?;
    ensure(c.cover_count == 3 && c.epi_count == 18 && c.aut_count == 6, || format!("S3 on P1-3pts: {c:?}"))?;
    let c = count_connected_covers(2, 0, &parse_group("C2").unwrap(), &[GroupClass::PrimeTo(3)]).map_err(|e| e.to_string())?;
    ensure(c.cover_count == 15, || format!("C2 on genus 2: {c:?}"))?;
    let c = count_connected_covers(1, 0, &s3, &sol).map_err(|e| e.to_string())?;
    ensure(c.cover_count == 0, || format!("S3 on genus 1: {c:?}"))?;

    // Cyclic groups on the thrice-punctured line: pairs (a, b) of residues
    // generate Z/m iff gcd(a, b, m) = 1, and |Aut| = φ(m).
    for m in 1..=6usize {
        let cm = parse_group(&format!("C{m}")).unwrap();
        let non_generating = (0..m).flat_map(|a| (0..m).map(move |b| (a, b))).filter(|&(a, b)| gcd(gcd(a, b), m) != 1).count();
        let epis = m * m - non_generating;
        let phi = (1..=m).filter(|&k| gcd(k, m) == 1).count();
        let c = count_connected_covers(0, 3, &cm, &sol).map_err(|e| e.to_string())?;
        let lattice = enumerate_epis_by_lattice(&punctured_curve_group(0, 3).unwrap(), &cm, DEFAULT_BUDGET).unwrap();
        ensure(c.epi_count as usize == epis && lattice as usize == epis && c.cover_count as usize == epis / phi, || {
            format!("C{m}: {c:?}, lattice {lattice}, expected {epis}/{phi}")
        })?;
    }

    // Direct generation tests agree with lattice inversion, |G| <= 24, rank <= 3.
    let sources = [FpPresentation::free(1), FpPresentation::free(2), FpPresentation::free(3), surface_group(1)];
    let groups = corpus(24);
    for g in &groups {
        for p in &sources {
            let direct = enumerate_epis(p, g, DEFAULT_BUDGET).map_err(|e| e.to_string())?;
            let lattice = enumerate_epis_by_lattice(p, g, DEFAULT_BUDGET).map_err(|e| e.to_string())?;
            ensure(direct == lattice, || format!("{} rank {}: {direct} vs {lattice}", g.name(), p.rank()))?;
        }
    }
    Ok(format!("3 named censuses, C1..C6, lattice agreement on {} groups", groups.len()))
}

// ---- 6 ----

fn prime_factors(mut n: usize) -> Vec<usize> {
    let mut out = Vec::new();
    let mut p = 2;
    while n > 1 {
        if n.is_multiple_of(p) {
            out.push(p);
            while n.is_multiple_of(p) {
                n /= p;
            }
        }
        p += 1;
    }
    out
}

fn is_power_of(mut n: usize, p: usize) -> bool {
    while n.is_multiple_of(p) {
        n /= p;
    }
    n == 1
}

/// All commutators of the group, closed up; repeated until stable.
fn is_solvable(g: &FiniteGroup) -> bool {
    let mut current: Vec<usize> = (0..g.order()).collect();
    loop {
        let comms: Vec<usize> = current
            .iter()
            .flat_map(|&a| current.iter().map(move |&b| g.mul(g.mul(a, b), g.mul(g.inv(a), g.inv(b)))))
            .collect();
        let next: Vec<usize> = closure(g, &comms).into_iter().collect();
        if next.len() == 1 {
            return true;
        }
        if next.len() == current.len() {
            return false;
        }
        current = next;
    }
}

fn element_order(g: &FiniteGroup, x: usize) -> usize {
    let (mut y, mut k) = (x, 1);
    while y != 0 {
        y = g.mul(y, x);
        k += 1;
    }
    k
}

/// Nilpotent iff, for each prime, the elements of `p`-power order number
/// exactly the `p`-part of the order (a unique, hence normal, Sylow subgroup).
fn is_nilpotent(g: &FiniteGroup) -> bool {
    prime_factors(g.order()).into_iter().all(|p| {
        let mut part = 1;
        while g.order().is_multiple_of(part * p) {
            part *= p;
        }
        (0..g.order()).filter(|&x| is_power_of(element_order(g, x), p)).count() == part
    })
}

fn in_class(g: &FiniteGroup, c: GroupClass) -> bool {
    match c {
        GroupClass::PrimeTo(p) => !g.order().is_multiple_of(p as usize),
        GroupClass::Ell(l) => is_power_of(g.order(), l as usize),
        GroupClass::Solvable => is_solvable(g),
        GroupClass::Nilpotent => is_nilpotent(g),
    }
}

fn oracle_kernel(g: &FiniteGroup, c: GroupClass) -> Subgroup {
    let mut k = g.whole();
    for n in g.normal_subgroups() {
        let q = g.quotient(&n).unwrap().group;
        if in_class(&q, c) {
            k = k.intersect(&n);
        }
    }
    k
}

const SEVEN_CLASSES: [GroupClass; 7] = [
    GroupClass::Solvable,
    GroupClass::Nilpotent,
    GroupClass::Ell(2),
    GroupClass::Ell(3),
    GroupClass::PrimeTo(2),
    GroupClass::PrimeTo(3),
    GroupClass::PrimeTo(5),
];

fn completion() -> Result<String, String> {
    let groups = corpus(24);
    for g in &groups {
        for c in SEVEN_CLASSES {
            let q = max_class_quotient(g, c);
            let k = oracle_kernel(g, c);
            ensure(q.kernel == k, || format!("{} {c}: kernel {} vs oracle {}", g.name(), q.kernel.order(), k.order()))?;
            ensure(q.quotient.order() * k.order() == g.order(), || format!("{} {c}: quotient order", g.name()))?;
            ensure(in_class(&q.quotient, c), || format!("{} {c}: quotient not in class", g.name()))?;
        }
    }
    Ok(format!("{} groups x 7 classes", groups.len()))
}

// ---- 7 ----

fn sylow() -> Result<String, String> {
    let groups: Vec<FiniteGroup> = corpus(48).into_iter().filter(is_nilpotent).collect();
    for g in &groups {
        let d = nilpotent_sylow_decomposition(g).map_err(|e| format!("{}: {e}", g.name()))?;
        ensure(d.verify(g), || format!("{}: witness rejected", g.name()))?;
        // Independent check: the Sylow factors commute elementwise and every
        // element is a unique product of one element from each.
        let factors: Vec<&[usize]> = d.factors.iter().map(|(_, s)| s.elements()).collect();
        let orders: usize = factors.iter().map(|f| f.len()).product();
        ensure(orders == g.order(), || format!("{}: factor orders", g.name()))?;
        for (i, a) in factors.iter().enumerate() {
            for b in &factors[i + 1..] {
                for &x in a.iter() {
                    for &y in b.iter() {
                        ensure(g.mul(x, y) == g.mul(y, x), || format!("{}: factors do not commute", g.name()))?;
                    }
                }
            }
        }
        let mut products = BTreeSet::from([0usize]);
        for f in &factors {
            products = products.iter().flat_map(|&p| f.iter().map(move |&x| g.mul(p, x))).collect();
        }
        ensure(products.len() == g.order(), || format!("{}: product map not bijective", g.name()))?;
    }
    Ok(format!("{} nilpotent groups", groups.len()))
}

// ---- 8 ----

fn completion_order(g: &FiniteGroup, c: GroupClass) -> usize {
    g.order() / oracle_kernel(g, c).order()
}

fn exactness() -> Result<String, String> {
    let left_classes = [
        GroupClass::Solvable,
        GroupClass::Ell(2),
        GroupClass::Ell(3),
        GroupClass::PrimeTo(2),
        GroupClass::PrimeTo(3),
        GroupClass::PrimeTo(5),
    ];
    let (mut left, mut right) = (0, 0);
    for g in corpus(16) {
        for n in g.normal_subgroups() {
            let h = g.quotient(&n).unwrap().group;
            let (ng, _) = g.subgroup_as_group(&n);
            for c in left_classes.into_iter().filter(|&c| in_class(&h, c)) {
                let r = verify_completion_exactness(&g, &n, c).map_err(|e| e.to_string())?;
                // Exactness of 1 → N^c → G^c → H → 1 forces |G^c| = |N^c|·|H|.
                let orders = completion_order(&ng, c) * h.order() == completion_order(&g, c);
                ensure(r.exact && orders, || format!("{} |N|={} {c}: {r:?}", g.name(), n.order()))?;
                left += 1;
            }
            for c in left_classes.into_iter().chain([GroupClass::Nilpotent]) {
                let r = verify_right_exactness(&g, &n, c).map_err(|e| e.to_string())?;
                ensure(r.exact, || format!("right {} |N|={} {c}: {r:?}", g.name(), n.order()))?;
                right += 1;
            }
        }
    }
    ensure(left >= 20, || format!("only {left} exact triples"))?;
    let s3 = parse_group("S3").unwrap();
    let a3 = Subgroup::from_sorted(closure(&s3, &(0..6).filter(|&x| element_order(&s3, x) == 3).collect::<Vec<_>>()).into_iter().collect());
    let r = verify_completion_exactness(&s3, &a3, GroupClass::Nilpotent).map_err(|e| e.to_string())?;
    ensure(!r.exact && !r.injective, || format!("S3/A3 nilpotent: {r:?}"))?;
    Ok(format!("{left} exact triples, {right} right-exact, S3/A3 counterexample"))
}

// ---- 9 ----

/// Every tuple of images of the group's generators, extended along words.
fn endomorphism_oracle(g: &FiniteGroup) -> (usize, usize) {
    let gens = g.generators().to_vec();
    // Each element as a word in the generators (BFS).
    let mut word: Vec<Option<Vec<usize>>> = vec![None; g.order()];
    word[0] = Some(Vec::new());
    let mut queue = std::collections::VecDeque::from([0]);
    while let Some(x) = queue.pop_front() {
        for (k, &s) in gens.iter().enumerate() {
            let y = g.mul(x, s);
            if word[y].is_none() {
                let mut w = word[x].clone().unwrap();
                w.push(k);
                word[y] = Some(w);
                queue.push_back(y);
            }
        }
    }
    let word: Vec<Vec<usize>> = word.into_iter().map(Option::unwrap).collect();
    let (mut surjective, mut bijective) = (0, 0);
    let total = g.order().pow(gens.len() as u32);
    for code in 0..total {
        let mut c = code;
        let images: Vec<usize> = gens
            .iter()
            .map(|_| {
                let x = c % g.order();
                c /= g.order();
                x
            })
            .collect();
        let map: Vec<usize> = word.iter().map(|w| w.iter().fold(0, |acc, &k| g.mul(acc, images[k]))).collect();
        let hom = (0..g.order()).all(|a| (0..g.order()).all(|b| map[g.mul(a, b)] == g.mul(map[a], map[b])));
        if !hom {
            continue;
        }
        let image: BTreeSet<usize> = map.iter().copied().collect();
        if image.len() == g.order() {
            surjective += 1;
            // Injective: only the identity maps to the identity.
            if map.iter().filter(|&&y| y == 0).count() == 1 {
                bijective += 1;
            }
        }
    }
    (surjective, bijective)
}

fn hopf() -> Result<String, String> {
    let groups = corpus(24);
    for g in &groups {
        let census = endomorphism_census(g);
        ensure(census.surjective == census.surjective_and_injective, || format!("{}: {census:?}", g.name()))?;
        let (s, b) = endomorphism_oracle(g);
        ensure(s == b && s as u64 == census.surjective, || format!("{}: oracle {s}/{b} vs {census:?}", g.name()))?;
    }
    Ok(format!("{} groups", groups.len()))
}

// ---- 10 ----

fn abelianization() -> Result<String, String> {
    for g in 0..=4 {
        for n in 1..=4 {
            let p = punctured_curve_group(g, n).map_err(|e| e.to_string())?;
            ensure(p.abelianization() == AbelianInvariants::free(2 * g + n - 1), || {
                format!("g={g} n={n}: {}", p.abelianization())
            })?;
            ensure(p.fill_all().abelianization() == AbelianInvariants::free(2 * g), || {
                format!("g={g} n={n} filled: {}", p.fill_all().abelianization())
            })?;
        }
        ensure(surface_group(g).abelianization() == AbelianInvariants::free(2 * g), || format!("closed g={g}"))?;
    }
    Ok("g <= 4, n <= 4".into())
}
