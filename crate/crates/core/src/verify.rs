//! Self-checking suites, run case by case with a pass/fail verdict each.
//!
//! | suite       | checks                                                        |
//! |-------------|---------------------------------------------------------------|
//! | `ns-rank`   | Schreier generator count of random kernels is `i(r−1)+1`      |
//! | `mu-n`      | the `F₂ → Z/N` kernel basis equals the Schreier basis         |
//! | `chi`       | the `χ` kernel basis equals the Schreier basis; rewriting     |
//! | `exactness` | completion exactness lemmas and the nilpotent counterexample  |
//! | `sylow`     | nilpotent groups are the product of their Sylow subgroups     |
//! | `hopf`      | surjective endomorphisms are bijective                        |

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::{json, Value};

use crate::completion::{nilpotent_sylow_decomposition, verify_completion_exactness, verify_right_exactness};
use crate::error::{Error, Result};
use crate::finite::{corpus, endomorphism_census, parse_group, GroupClass, Subgroup};
use crate::presentation::FpPresentation;
use crate::subgroup::{kernel_coset_table, mu_n_kernel_basis, schreier_generators, ChiKernel};
use crate::word::{Letter, Word};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    NsRank,
    MuN,
    Chi,
    Exactness,
    Sylow,
    Hopf,
}

impl Suite {
    pub const ALL: [Suite; 6] = [
        Suite::NsRank,
        Suite::MuN,
        Suite::Chi,
        Suite::Exactness,
        Suite::Sylow,
        Suite::Hopf,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::NsRank => "ns-rank",
            Suite::MuN => "mu-n",
            Suite::Chi => "chi",
            Suite::Exactness => "exactness",
            Suite::Sylow => "sylow",
            Suite::Hopf => "hopf",
        }
    }

    /// The size parameter used when `--max` is not given.
    pub fn default_max(self) -> usize {
        match self {
            Suite::NsRank => 50,
            Suite::MuN => 8,
            Suite::Chi => 2,
            Suite::Exactness => 24,
            Suite::Sylow => 48,
            Suite::Hopf => 24,
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| Error::Parse {
                what: format!("suite `{s}`"),
                reason: "expected one of ns-rank, mu-n, chi, exactness, sylow, hopf".into(),
            })
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Case {
    pub name: String,
    pub passed: bool,
    pub detail: Value,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SuiteReport {
    pub suite: Suite,
    pub max: usize,
    pub seed: u64,
    pub passed: usize,
    pub failed: usize,
    pub cases: Vec<Case>,
}

impl SuiteReport {
    pub fn all_passed(&self) -> bool {
        self.failed == 0
    }
}

/// Runs `suite` with size parameter `max` (see [`Suite::default_max`]).
///
/// * `ns-rank`: number of random kernels;
/// * `mu-n`: largest `N`;
/// * `chi`: largest genus and number of punctures;
/// * `exactness`, `hopf`, `sylow`: largest group order.
pub fn run_suite(suite: Suite, max: Option<usize>, seed: u64) -> Result<SuiteReport> {
    let max = max.unwrap_or(suite.default_max());
    let cases = match suite {
        Suite::NsRank => ns_rank(max, seed)?,
        Suite::MuN => mu_n(max)?,
        Suite::Chi => chi(max, seed)?,
        Suite::Exactness => exactness(max)?,
        Suite::Sylow => sylow(max)?,
        Suite::Hopf => hopf(max),
    };
    let passed = cases.iter().filter(|c| c.passed).count();
    Ok(SuiteReport {
        suite,
        max,
        seed,
        passed,
        failed: cases.len() - passed,
        cases,
    })
}

const SMALL_GROUPS: [&str; 8] = ["C1", "C2", "C3", "C4", "C5", "C6", "C2xC2", "S3"];

fn ns_rank(samples: usize, seed: u64) -> Result<Vec<Case>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let groups: Vec<_> = SMALL_GROUPS.iter().map(|s| parse_group(s)).collect::<Result<_>>()?;
    let mut cases = Vec::with_capacity(samples);
    for _ in 0..samples {
        let rank = rng.gen_range(2..=3);
        let g = &groups[rng.gen_range(0..groups.len())];
        let images: Vec<usize> = (0..rank).map(|_| rng.gen_range(0..g.order())).collect();
        let table = kernel_coset_table(&FpPresentation::free(rank), g, &images)?;
        let basis = schreier_generators(&table);
        let index = g.generate(&images).order();
        let expected = index * (rank - 1) + 1;
        let labels: Vec<String> = images.iter().map(|&x| g.label(x)).collect();
        cases.push(Case {
            name: format!("F{rank} -> {} [{}]", g.name(), labels.join(", ")),
            passed: basis.rank() == expected && table.index() == index && basis.all_in_subgroup(),
            detail: json!({ "index": index, "schreier": basis.rank(), "expected": expected }),
        });
    }
    Ok(cases)
}

fn mu_n(max: usize) -> Result<Vec<Case>> {
    (1..=max)
        .map(|n| {
            let basis = mu_n_kernel_basis(n)?;
            let schreier = schreier_generators(&basis.table);
            let transversal_ok = basis
                .table
                .transversal()
                .iter()
                .enumerate()
                .all(|(i, t)| *t == Word::from_powers(2, &[(0, i as i64)]).expect("rank 2"));
            Ok(Case {
                name: format!("N={n}"),
                passed: basis.word_set() == schreier.word_set() && basis.rank() == n + 1 && transversal_ok,
                detail: json!({ "rank": basis.rank(), "schreier": schreier.rank() }),
            })
        })
        .collect()
}

/// Number of random kernel words rewritten per `(g, n)` in the `chi` suite.
pub const CHI_REWRITE_SAMPLES: usize = 120;

/// A random word of reduced length at most `max_len` in the kernel of `χ`,
/// by rejection sampling on letter parity.
pub fn random_chi_kernel_word<R: Rng>(k: &ChiKernel, rng: &mut R, max_len: usize) -> Word {
    let rank = k.ambient_rank();
    loop {
        let len = rng.gen_range(0..=max_len);
        let letters = (0..len).map(|_| Letter::new(rng.gen_range(0..rank), rng.gen_bool(0.5)));
        let w = Word::reduce(rank, letters).expect("in range");
        if k.contains(&w) {
            return w;
        }
    }
}

fn chi(max: usize, seed: u64) -> Result<Vec<Case>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut cases = Vec::new();
    for g in 1..=max.max(1) {
        for n in 0..=max {
            let k = ChiKernel::new(g, n)?;
            let basis = k.basis();
            let schreier = schreier_generators(&basis.table);
            let mut sound = 0;
            for _ in 0..CHI_REWRITE_SAMPLES {
                let w = random_chi_kernel_word(&k, &mut rng, 20);
                if k.rewrite(&w).map(|f| k.evaluate(&f) == w).unwrap_or(false) {
                    sound += 1;
                }
            }
            cases.push(Case {
                name: format!("g={g} n={n}"),
                passed: basis.rank() == k.basis_len()
                    && basis.word_set() == schreier.word_set()
                    && sound == CHI_REWRITE_SAMPLES,
                detail: json!({
                    "rank": basis.rank(),
                    "expected": 4 * g + 2 * n + 1,
                    "rewrites": CHI_REWRITE_SAMPLES,
                    "sound": sound,
                }),
            });
        }
    }
    Ok(cases)
}

/// Classes closed under subgroups, quotients, products and extensions.
pub const EXTENSION_CLOSED: [GroupClass; 6] = [
    GroupClass::Solvable,
    GroupClass::Ell(2),
    GroupClass::Ell(3),
    GroupClass::PrimeTo(2),
    GroupClass::PrimeTo(3),
    GroupClass::PrimeTo(5),
];

fn exactness(max_order: usize) -> Result<Vec<Case>> {
    let mut cases = Vec::new();
    for g in corpus(max_order) {
        for n in g.normal_subgroups() {
            let gn = g.quotient(&n)?.group;
            for class in EXTENSION_CLOSED.into_iter().filter(|c| c.contains(&gn)) {
                let r = verify_completion_exactness(&g, &n, class)?;
                cases.push(Case {
                    name: format!("left {} |N|={} {class}", g.name(), n.order()),
                    passed: r.exact,
                    detail: serde_json::to_value(r).expect("serializable"),
                });
            }
            for class in EXTENSION_CLOSED.into_iter().chain([GroupClass::Nilpotent]) {
                let r = verify_right_exactness(&g, &n, class)?;
                cases.push(Case {
                    name: format!("right {} |N|={} {class}", g.name(), n.order()),
                    passed: r.exact,
                    detail: serde_json::to_value(r).expect("serializable"),
                });
            }
        }
    }
    // 1 → A3 → S3 → C2 → 1 does not stay exact under nilpotent completion.
    let s3 = parse_group("S3")?;
    let a3: Subgroup = s3.commutator_subgroup(&s3.whole(), &s3.whole());
    let r = verify_completion_exactness(&s3, &a3, GroupClass::Nilpotent)?;
    cases.push(Case {
        name: "left S3 |N|=3 nil (expected not exact)".into(),
        passed: !r.exact,
        detail: serde_json::to_value(r).expect("serializable"),
    });
    Ok(cases)
}

fn sylow(max_order: usize) -> Result<Vec<Case>> {
    let mut cases = Vec::new();
    for g in corpus(max_order).into_iter().filter(|g| GroupClass::Nilpotent.contains(g)) {
        let d = nilpotent_sylow_decomposition(&g)?;
        let orders: Vec<(u64, usize)> = d.factors.iter().map(|(l, s)| (*l, s.order())).collect();
        cases.push(Case {
            name: g.name().to_string(),
            passed: d.verify(&g),
            detail: json!({ "order": g.order(), "sylow": orders }),
        });
    }
    Ok(cases)
}

fn hopf(max_order: usize) -> Vec<Case> {
    corpus(max_order)
        .into_iter()
        .map(|g| {
            let c = endomorphism_census(&g);
            Case {
                name: g.name().to_string(),
                passed: c.surjective == c.surjective_and_injective,
                detail: serde_json::to_value(c).expect("serializable"),
            }
        })
        .collect()
}
