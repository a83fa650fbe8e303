use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use devissage::completion::max_class_quotient;
use devissage::covers::{self, CensusCache, CensusRunner};
use devissage::finite::{parse_group, FiniteGroup};
use devissage::presentation::{punctured_curve_group, surface_group};
use devissage::subgroup::{schreier_generators, ChiKernel, SubgroupBasis};
use devissage::verify::{run_suite, Suite};
use devissage::{Error, FpPresentation, Word};

mod tsv;

#[derive(Parser, Debug)]
#[command(name = "devissage", version, about = "Curve groups, explicit kernels, class quotients and cover censuses")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Seed for every random choice.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Worker threads (default: available parallelism).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Json,
    Tsv,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print a curve-group presentation.
    Present(Source),
    /// Abelian invariants of a presentation.
    Abelianize(AbelianizeArgs),
    /// Fill punctures and simplify.
    Fill(FillArgs),
    /// Explicit kernel basis: `mu:N` or `chi:g,n`.
    KernelBasis(KernelBasisArgs),
    /// Factor a word of the parity kernel over its basis.
    Rewrite(RewriteArgs),
    /// Maximal quotient of a finite group in a class.
    Quotient(QuotientArgs),
    /// Count connected Galois covers with a given group.
    Covers(CoversArgs),
    /// Run a self-checking suite.
    Verify(VerifyArgs),
}

#[derive(Args, Debug, Serialize)]
struct Source {
    #[arg(long, conflicts_with = "file")]
    genus: Option<usize>,
    #[arg(long, conflicts_with = "file")]
    punctures: Option<usize>,
    /// Presentation file (`gens:`, `rel:`, `ram:` lines).
    #[arg(long)]
    file: Option<PathBuf>,
}

impl Source {
    fn load(&self) -> devissage::Result<FpPresentation> {
        if let Some(path) = &self.file {
            let text = std::fs::read_to_string(path).map_err(|e| Error::Parse {
                what: path.display().to_string(),
                reason: e.to_string(),
            })?;
            return FpPresentation::parse(&text);
        }
        let g = self.genus.unwrap_or(0);
        match self.punctures.unwrap_or(0) {
            0 => Ok(surface_group(g)),
            n => punctured_curve_group(g, n),
        }
    }
}

#[derive(Args, Debug, Serialize)]
struct AbelianizeArgs {
    #[command(flatten)]
    #[serde(flatten)]
    source: Source,
    /// Fill every puncture first.
    #[arg(long)]
    fill_all: bool,
}

#[derive(Args, Debug, Serialize)]
struct FillArgs {
    #[command(flatten)]
    #[serde(flatten)]
    source: Source,
    /// Puncture labels to fill (default: all).
    #[arg(long = "label")]
    labels: Vec<String>,
}

#[derive(Args, Debug, Serialize)]
struct KernelBasisArgs {
    #[arg(long, value_parser = parse_kind)]
    kind: Kind,
    /// A kernel word to factor (parity kernel only).
    #[arg(long)]
    rewrite: Option<String>,
}

#[derive(Clone, Copy, Debug, Serialize)]
#[serde(tag = "type", rename_all = "snake_case")]
enum Kind {
    Mu { n: usize },
    Chi { genus: usize, punctures: usize },
}

fn parse_kind(s: &str) -> Result<Kind, String> {
    let bad = || format!("expected mu:N or chi:g,n, got `{s}`");
    if let Some(n) = s.strip_prefix("mu:") {
        return n.trim().parse().map(|n| Kind::Mu { n }).map_err(|_| bad());
    }
    if let Some(rest) = s.strip_prefix("chi:") {
        let (g, n) = rest.split_once(',').ok_or_else(bad)?;
        let genus = g.trim().parse().map_err(|_| bad())?;
        let punctures = n.trim().parse().map_err(|_| bad())?;
        return Ok(Kind::Chi { genus, punctures });
    }
    Err(bad())
}

#[derive(Args, Debug, Serialize)]
struct RewriteArgs {
    #[arg(long)]
    genus: usize,
    #[arg(long, default_value_t = 0)]
    punctures: usize,
    /// Word over `y1 .. y(2g+1+n)` written `a b C ...`.
    word: String,
}

#[derive(Args, Debug, Serialize)]
struct QuotientArgs {
    #[arg(long)]
    group: String,
    /// `sol`, `nil`, `ell:<p>` or `prime-to:<p>`.
    #[arg(long)]
    class: String,
}

#[derive(Args, Debug, Serialize)]
struct CoversArgs {
    #[arg(long)]
    genus: usize,
    #[arg(long)]
    punctures: usize,
    #[arg(long)]
    group: String,
    /// Comma-separated classes the group must belong to.
    #[arg(long, default_value = "sol")]
    class: String,
    /// Also list every surjection as a tuple of generator images.
    #[arg(long)]
    list: bool,
    /// Append-only JSON-lines census cache.
    #[arg(long)]
    cache: Option<PathBuf>,
}

#[derive(Args, Debug, Serialize)]
struct VerifyArgs {
    #[arg(value_parser = parse_suite)]
    suite: Suite,
    /// Size parameter of the suite.
    #[arg(long)]
    max: Option<usize>,
}

fn parse_suite(s: &str) -> Result<Suite, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

#[derive(Serialize)]
struct CommandResult {
    command: &'static str,
    parameters: Value,
    payload: Value,
    elapsed_ms: u64,
    version: &'static str,
}

#[derive(Serialize)]
struct CommandError {
    command: &'static str,
    parameters: Value,
    error: ErrorBody,
    version: &'static str,
}

#[derive(Serialize)]
struct ErrorBody {
    kind: &'static str,
    message: String,
}

/// A payload plus whether the command considers its own outcome a failure.
struct Outcome {
    payload: Value,
    ok: bool,
}

impl From<Value> for Outcome {
    fn from(payload: Value) -> Self {
        Outcome { payload, ok: true }
    }
}

const VERSION: &str = env!("CARGO_PKG_VERSION");

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(jobs) = cli.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(jobs).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    let (name, parameters) = describe(&cli);
    let start = Instant::now();
    match run(&cli) {
        Ok(outcome) => {
            let result = CommandResult {
                command: name,
                parameters,
                payload: outcome.payload,
                elapsed_ms: start.elapsed().as_millis() as u64,
                version: VERSION,
            };
            emit(cli.format, &serde_json::to_value(result).expect("serializable"));
            if outcome.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            let body = CommandError {
                command: name,
                parameters,
                error: ErrorBody {
                    kind: e.kind(),
                    message: e.to_string(),
                },
                version: VERSION,
            };
            emit(cli.format, &serde_json::to_value(body).expect("serializable"));
            ExitCode::from(1)
        }
    }
}

fn emit(format: Format, value: &Value) {
    match format {
        Format::Json => println!("{}", serde_json::to_string_pretty(value).expect("serializable")),
        Format::Tsv => print!("{}", tsv::render(value)),
    }
}

fn describe(cli: &Cli) -> (&'static str, Value) {
    fn to<T: Serialize>(v: &T) -> Value {
        serde_json::to_value(v).expect("serializable")
    }
    let (name, mut params) = match &cli.command {
        Command::Present(a) => ("present", to(a)),
        Command::Abelianize(a) => ("abelianize", to(a)),
        Command::Fill(a) => ("fill", to(a)),
        Command::KernelBasis(a) => ("kernel-basis", to(a)),
        Command::Rewrite(a) => ("rewrite", to(a)),
        Command::Quotient(a) => ("quotient", to(a)),
        Command::Covers(a) => ("covers", to(a)),
        Command::Verify(a) => ("verify", to(a)),
    };
    if let Value::Object(map) = &mut params {
        map.insert("seed".into(), json!(cli.seed));
    }
    (name, params)
}

fn run(cli: &Cli) -> devissage::Result<Outcome> {
    match &cli.command {
        Command::Present(src) => {
            let p = src.load()?;
            Ok(json!({
                "presentation": presentation_json(&p),
                "abelianization": p.abelianization(),
            })
            .into())
        }
        Command::Abelianize(a) => {
            let p = a.source.load()?;
            let p = if a.fill_all { p.fill_all() } else { p };
            Ok(json!({ "rank": p.rank(), "abelianization": p.abelianization() }).into())
        }
        Command::Fill(a) => fill(a),
        Command::KernelBasis(a) => kernel_basis(a),
        Command::Rewrite(a) => {
            let k = ChiKernel::new(a.genus, a.punctures)?;
            let w = Word::parse(k.ambient_rank(), &a.word)?;
            Ok(rewrite_json(&k, &w)?.into())
        }
        Command::Quotient(a) => quotient(a),
        Command::Covers(a) => covers(a),
        Command::Verify(a) => {
            let report = run_suite(a.suite, a.max, cli.seed)?;
            Ok(Outcome {
                ok: report.all_passed(),
                payload: serde_json::to_value(report).expect("serializable"),
            })
        }
    }
}

fn presentation_json(p: &FpPresentation) -> Value {
    json!({
        "rank": p.rank(),
        "generators": p.generator_names(),
        "relators": p.relators().iter().map(Word::to_string).collect::<Vec<_>>(),
        "ramification": p
            .ramification_words()
            .iter()
            .map(|(label, w)| json!({ "label": label, "word": w.to_string() }))
            .collect::<Vec<_>>(),
        "free": p.is_free(),
    })
}

fn fill(a: &FillArgs) -> devissage::Result<Outcome> {
    let p = a.source.load()?;
    let (labels, filled) = if a.labels.is_empty() {
        let all = p.ramification_words().iter().map(|(l, _)| l.clone()).collect();
        (all, p.fill_all())
    } else {
        let mut q = p.clone();
        for l in &a.labels {
            q = q.fill_puncture(l)?;
        }
        (a.labels.clone(), q)
    };
    let simplified = filled.tietze_eliminate();
    Ok(json!({
        "filled": labels,
        "presentation": presentation_json(&filled),
        "simplified": presentation_json(&simplified),
        "abelianization": filled.abelianization(),
    })
    .into())
}

fn basis_json(b: &SubgroupBasis) -> Vec<Value> {
    b.generators
        .iter()
        .map(|(label, w)| json!({ "label": label, "word": w.to_string() }))
        .collect()
}

fn kernel_basis(a: &KernelBasisArgs) -> devissage::Result<Outcome> {
    let (basis, chi) = match a.kind {
        Kind::Mu { n } => (devissage::subgroup::mu_n_kernel_basis(n)?, None),
        Kind::Chi { genus, punctures } => {
            let k = ChiKernel::new(genus, punctures)?;
            (k.basis(), Some(k))
        }
    };
    let schreier = schreier_generators(&basis.table);
    let mut payload = json!({
        "kind": a.kind,
        "ambient_rank": basis.table.presentation().rank(),
        "index": basis.table.index(),
        "basis": basis_json(&basis),
        "rank": basis.rank(),
        "check": basis.free_rank_formula(),
        "schreier_agrees": basis.word_set() == schreier.word_set(),
    });
    if let Some(text) = &a.rewrite {
        let k = chi.ok_or_else(|| Error::InvalidParameter("--rewrite needs a chi kernel".into()))?;
        let w = Word::parse(k.ambient_rank(), text)?;
        payload["rewrite"] = rewrite_json(&k, &w)?;
    }
    Ok(payload.into())
}

fn rewrite_json(k: &ChiKernel, w: &Word) -> devissage::Result<Value> {
    let factors = k.rewrite(w)?;
    let labels = k.labels();
    let product = k.evaluate(&factors);
    Ok(json!({
        "word": w.to_string(),
        "factors": factors
            .iter()
            .map(|f| json!({ "label": labels[f.index], "inverse": f.inverse }))
            .collect::<Vec<_>>(),
        "product": product.to_string(),
        "verified": product == *w,
    }))
}

/// A name for small quotients that are visibly trivial or cyclic.
fn quotient_spec(q: &FiniteGroup) -> Option<String> {
    let n = q.order();
    (0..n).any(|x| q.element_order(x) == n).then(|| format!("C{n}"))
}

fn quotient(a: &QuotientArgs) -> devissage::Result<Outcome> {
    let g = parse_group(&a.group)?;
    let class = a.class.parse()?;
    let q = max_class_quotient(&g, class);
    Ok(json!({
        "order": g.order(),
        "kernel_order": q.kernel.order(),
        "kernel": q.kernel.elements().iter().map(|&x| g.label(x)).collect::<Vec<_>>(),
        "quotient_order": q.quotient.order(),
        "quotient_spec": quotient_spec(&q.quotient),
        "cayley_table": q.quotient.cayley_rows(),
    })
    .into())
}

fn covers(a: &CoversArgs) -> devissage::Result<Outcome> {
    let g = parse_group(&a.group)?;
    let classes = covers::parse_class_list(&a.class)?;
    let mut runner = CensusRunner::default();
    if let Some(path) = &a.cache {
        runner = runner.with_cache(CensusCache::new(path));
    }
    let census = runner.census(a.genus, a.punctures, &g, &classes)?;
    let mut payload = serde_json::to_value(&census).expect("serializable");
    if let Value::Object(map) = &mut payload {
        map.remove("elapsed_ms");
        map.insert("cache_hit".into(), json!(runner.cache_hits() > 0));
    }
    if a.list {
        let p = covers::curve_group(a.genus, a.punctures)?;
        let epis = covers::list_epis(&p, &g, runner.budget())?;
        payload["generators"] = json!(p.generator_names());
        payload["epimorphisms"] = epis
            .iter()
            .map(|t| t.iter().map(|&x| g.label(x)).collect::<Vec<_>>())
            .collect();
    }
    Ok(payload.into())
}
