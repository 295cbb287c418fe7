//! The verification suite: independently addressable checks, each producing
//! one or more [`CheckResult`]s, collected into a [`Report`].

use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;
use std::time::Instant;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::cyclic_lie::{cl_component, ClComponent};
use crate::egf::{free_operad_series, verify_chapoton_identity, EgfSeries};
use crate::error::{Error, Result};
use crate::free_operad::{
    act, bullet_cut_factorize, canonicalize, compose_cut_pieces, enumerate_basis, gamma_factorize, parse_combination,
    partial_compose, Generator, Signature, Tree, TreeTensor,
};
use crate::linalg::{LabelSet, SpeciesVector};
use crate::perm::Permutation;
use crate::pl::{
    act_trees, enumerate_rooted_trees, eval, filtration_compatibility, filtration_span, gr_relation_check,
    graft_compose_vectors, lie_module_closure, suboperad_closure, y_span, ClosureLevel,
};
use crate::quotient::{
    orbit_rank, orbit_rank_modulo, Presentation, Relator, GRADED_EXCHANGE_RELATION, JACOBI_RELATOR, PRE_LIE_RELATOR,
    SYMMETRIZED_RELATOR,
};
use crate::rational::Rational;

pub const REPORT_VERSION: &str = env!("CARGO_PKG_VERSION");

pub const MAX_ARITY_CAP: usize = 7;
pub const QUOTIENT_ARITY_CAP: usize = 6;
pub const EGF_ORDER_CAP: usize = 40;
/// Arity bound of the exhaustive scans over two-generator basis tensors.
pub const TENSOR_SCAN_MAX_ARITY: usize = 5;
pub const MORPHISM_INSTANCES: usize = 500;
pub const MORPHISM_MAX_ARITY: usize = 5;
pub const REDUCTION_PAIRS: usize = 500;
pub const REDUCTION_MAX_ARITY: usize = 4;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Check {
    QuotientDims,
    OrbitRank,
    RelationCombination,
    Filtration,
    CyclicLieDims,
    YVersusCl,
    SuboperadDims,
    LieModuleDims,
    Egf,
    Factorization,
    ModelCoherence,
}

impl Check {
    pub const ALL: [Check; 11] = [
        Check::QuotientDims,
        Check::OrbitRank,
        Check::RelationCombination,
        Check::Filtration,
        Check::CyclicLieDims,
        Check::YVersusCl,
        Check::SuboperadDims,
        Check::LieModuleDims,
        Check::Egf,
        Check::Factorization,
        Check::ModelCoherence,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Check::QuotientDims => "quotient-dims",
            Check::OrbitRank => "orbit-rank",
            Check::RelationCombination => "relation-combination",
            Check::Filtration => "filtration",
            Check::CyclicLieDims => "cyclic-lie-dims",
            Check::YVersusCl => "y-vs-cl",
            Check::SuboperadDims => "suboperad-dims",
            Check::LieModuleDims => "lie-module-dims",
            Check::Egf => "egf",
            Check::Factorization => "factorization",
            Check::ModelCoherence => "model-coherence",
        }
    }

    pub fn description(self) -> &'static str {
        match self {
            Check::QuotientDims => "both presentations of the pre-Lie operad have n^(n-1) elements in arity n",
            Check::OrbitRank => "ranks of the symmetric-group orbits of the arity-three relators",
            Check::RelationCombination => {
                "1/3 (r - 2 r.(23)) of the symmetrized relator r is the exchange relation for [a,b]•c"
            }
            Check::Filtration => "the weight filtration is compatible with brackets and sees the exchange relation",
            Check::CyclicLieDims => "cyclic Lie elements have dimension (n-2)!",
            Check::YVersusCl => "the span of the symmetrized products of Lie elements matches CL as a module",
            Check::SuboperadDims => "the suboperad generated by Y has the dimensions of the free operad on CL",
            Check::LieModuleDims => "the Lie-module generated by that suboperad is all of PL",
            Check::Egf => "the series of Lie composed with the free operad on CL counts rooted trees",
            Check::Factorization => "tree tensors factor through bracket-only roots and bullet cuts and recompose",
            Check::ModelCoherence => "evaluation into rooted trees is an operad morphism that sees the relations",
        }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for Check {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Check::ALL.into_iter().find(|c| c.id() == s).ok_or_else(|| Error::UnknownCheck(s.to_string()))
    }
}

/// `["all"]` or a list of check ids.
pub fn resolve_checks(selection: &[String]) -> Result<Vec<Check>> {
    if selection.is_empty() || selection.iter().any(|s| s == "all") {
        return Ok(Check::ALL.to_vec());
    }
    let mut out: Vec<Check> = selection.iter().map(|s| s.parse()).collect::<Result<_>>()?;
    out.sort();
    out.dedup();
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckResult {
    pub check_id: String,
    pub arity: Option<usize>,
    /// What was measured.
    pub subject: String,
    pub expected: String,
    pub actual: String,
    pub passed: bool,
    /// Time since the previous result of the same check, so work shared
    /// by several results lands on the first of them.
    pub runtime_ms: u64,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    #[default]
    Text,
    Json,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "text" => Ok(Format::Text),
            "json" => Ok(Format::Json),
            other => Err(Error::InvalidConfig(format!("unknown format `{other}`"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyConfig {
    pub checks: Vec<String>,
    pub max_arity: usize,
    pub quotient_max_arity: usize,
    pub egf_order: usize,
    pub format: Format,
    /// Worker threads; zero lets the pool decide.
    pub parallel: usize,
    pub seed: u64,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            checks: vec!["all".into()],
            max_arity: 6,
            quotient_max_arity: 5,
            egf_order: 8,
            format: Format::Text,
            parallel: 0,
            seed: 0x5eed,
        }
    }
}

impl VerifyConfig {
    /// Rejects settings no check can run with. Settings above the resource
    /// caps are accepted here and reported per check.
    pub fn validate(&self) -> Result<()> {
        if self.max_arity < 2 {
            return Err(Error::InvalidConfig("max arity must be at least 2".into()));
        }
        if self.quotient_max_arity < 3 {
            return Err(Error::InvalidConfig("quotient max arity must be at least 3".into()));
        }
        if self.egf_order < 1 {
            return Err(Error::InvalidConfig("the series order must be at least 1".into()));
        }
        resolve_checks(&self.checks).map(|_| ())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub version: String,
    pub config: VerifyConfig,
    pub results: Vec<CheckResult>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.results.iter().all(|r| r.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckResult> {
        self.results.iter().filter(|r| !r.passed)
    }

    pub fn for_check(&self, check: Check) -> impl Iterator<Item = &CheckResult> {
        self.results.iter().filter(move |r| r.check_id == check.id())
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse { offset: e.column(), message: e.to_string() })
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let mut current = "";
        for r in &self.results {
            if r.check_id != current {
                current = &r.check_id;
                let description = current.parse::<Check>().map(Check::description).unwrap_or("");
                out.push_str(&format!("{current}: {description}\n"));
            }
            let arity = r.arity.map(|n| format!("n={n}")).unwrap_or_default();
            out.push_str(&format!(
                "  {} {:<5} {}: expected {}, got {} ({} ms)\n",
                if r.passed { "PASS" } else { "FAIL" },
                arity,
                r.subject,
                r.expected,
                r.actual,
                r.runtime_ms
            ));
        }
        let failed = self.failures().count();
        out.push_str(&format!("{} results, {} failed\n", self.results.len(), failed));
        out
    }
}

/// Shared work between checks, computed at most once.
pub struct Context {
    pub config: VerifyConfig,
    cl: OnceLock<Result<Vec<ClComponent>>>,
    suboperad: OnceLock<Result<Vec<ClosureLevel>>>,
}

impl Context {
    pub fn new(config: VerifyConfig) -> Self {
        Context { config, cl: OnceLock::new(), suboperad: OnceLock::new() }
    }

    /// `CL(2), …, CL(max_arity)`.
    fn cl(&self) -> Result<&[ClComponent]> {
        self.cl
            .get_or_init(|| {
                cap("max arity", self.config.max_arity, MAX_ARITY_CAP)?;
                (2..=self.config.max_arity).into_par_iter().map(cl_component).collect()
            })
            .as_deref()
            .map_err(Clone::clone)
    }

    /// `dims[n] = dim CL(n)`, zero below arity two.
    fn cl_dims(&self) -> Result<Vec<u64>> {
        let mut dims = vec![0, 0];
        dims.extend(self.cl()?.iter().map(|c| c.dim() as u64));
        Ok(dims)
    }

    fn suboperad(&self) -> Result<&[ClosureLevel]> {
        self.suboperad
            .get_or_init(|| {
                cap("max arity", self.config.max_arity, MAX_ARITY_CAP)?;
                suboperad_closure(self.config.max_arity)
            })
            .as_deref()
            .map_err(Clone::clone)
    }
}

fn cap(what: &str, value: usize, limit: usize) -> Result<()> {
    if value > limit {
        return Err(Error::ResourceCap(format!("{what} {value} (cap {limit})")));
    }
    Ok(())
}

struct Recorder {
    check: Check,
    results: Vec<CheckResult>,
    clock: Instant,
}

impl Recorder {
    fn new(check: Check) -> Self {
        Recorder { check, results: Vec::new(), clock: Instant::now() }
    }

    /// Records a result timed from the previous one.
    fn push(&mut self, arity: Option<usize>, subject: &str, expected: impl fmt::Display, actual: impl fmt::Display, passed: bool) {
        let runtime_ms = self.clock.elapsed().as_millis() as u64;
        self.results.push(CheckResult {
            check_id: self.check.id().into(),
            arity,
            subject: subject.into(),
            expected: expected.to_string(),
            actual: actual.to_string(),
            passed,
            runtime_ms,
        });
        self.clock = Instant::now();
    }

    fn equal<T: fmt::Display + PartialEq>(&mut self, arity: Option<usize>, subject: &str, expected: T, actual: T) {
        let passed = expected == actual;
        self.push(arity, subject, expected, actual, passed);
    }
}

pub fn run_check(check: Check, ctx: &Context) -> Vec<CheckResult> {
    let mut rec = Recorder::new(check);
    let outcome = match check {
        Check::QuotientDims => quotient_dims(ctx, &mut rec),
        Check::OrbitRank => orbit_ranks(&mut rec),
        Check::RelationCombination => relation_combination(&mut rec),
        Check::Filtration => filtration(ctx, &mut rec),
        Check::CyclicLieDims => cyclic_lie_dims(ctx, &mut rec),
        Check::YVersusCl => y_versus_cl(ctx, &mut rec),
        Check::SuboperadDims => suboperad_dims(ctx, &mut rec),
        Check::LieModuleDims => lie_module_dims(ctx, &mut rec),
        Check::Egf => egf(ctx, &mut rec),
        Check::Factorization => factorization(ctx, &mut rec),
        Check::ModelCoherence => model_coherence(ctx, &mut rec),
    };
    if let Err(e) = outcome {
        rec.push(None, "check aborted", "completion", format!("error: {e}"), false);
    }
    rec.results
}

/// Runs the selected checks, concurrently when the pool allows, and keeps
/// the results in check order.
pub fn run(config: VerifyConfig) -> Result<Report> {
    config.validate()?;
    let checks = resolve_checks(&config.checks)?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(config.parallel)
        .build()
        .map_err(|e| Error::InvalidConfig(e.to_string()))?;
    let ctx = Context::new(config);
    let per_check: Vec<Vec<CheckResult>> = pool.install(|| checks.par_iter().map(|&c| run_check(c, &ctx)).collect());
    Ok(Report { version: REPORT_VERSION.into(), config: ctx.config, results: per_check.into_iter().flatten().collect() })
}

fn cayley(n: usize) -> u64 {
    (n as u64).pow(n as u32 - 1)
}

fn quotient_dims(ctx: &Context, rec: &mut Recorder) -> Result<()> {
    let m = ctx.config.quotient_max_arity;
    cap("quotient max arity", m, QUOTIENT_ARITY_CAP)?;
    let (pre, two) = (Presentation::pre_lie(), Presentation::bracket_bullet());
    for n in 3..=m {
        let expected = cayley(n);
        rec.equal(Some(n), "labelled rooted trees", expected, enumerate_rooted_trees(&LabelSet::range(n))?.len() as u64);
        rec.equal(Some(n), "quotient by the pre-Lie relator", expected, pre.quotient_dim(n)? as u64);
        rec.equal(Some(n), "quotient by Jacobi and the symmetrized relator", expected, two.quotient_dim(n)? as u64);
    }
    Ok(())
}

fn orbit_ranks(rec: &mut Recorder) -> Result<()> {
    let two = Signature::bracket_bullet();
    let symmetrized = Relator::parse(SYMMETRIZED_RELATOR, &two)?;
    let jacobi = Relator::parse(JACOBI_RELATOR, &two)?;
    let pre = Relator::parse(PRE_LIE_RELATOR, &Signature::pre_lie())?;
    rec.equal(Some(3), "orbit of the symmetrized relator", 2, orbit_rank(&symmetrized)?);
    rec.equal(Some(3), "orbit of the Jacobi relator", 1, orbit_rank(&jacobi)?);
    rec.equal(Some(3), "orbit of the pre-Lie relator", 3, orbit_rank(&pre)?);
    rec.equal(
        Some(3),
        "orbit of the symmetrized relator modulo the Jacobi orbit",
        2,
        orbit_rank_modulo(&symmetrized, std::slice::from_ref(&jacobi))?,
    );
    Ok(())
}

/// `[a₁,a₂]•a₃ − a₁•[a₂,a₃]`, the left side of the exchange relation.
pub const EXCHANGE_LEFT: &str = "{[1,2],3} - {1,[2,3]}";

fn relation_combination(rec: &mut Recorder) -> Result<()> {
    let r = parse_combination(SYMMETRIZED_RELATOR, None)?;
    let r23 = act(&Permutation::transposition(2, 3), &r)?;
    let combo = r.minus(&r23.scaled(&Rational::from(2)))?.scaled(&Rational::new(1, 3));
    let displayed = parse_combination(GRADED_EXCHANGE_RELATION, None)?;
    let difference = combo.minus(&displayed)?;
    rec.equal(Some(3), "combination minus exchange relation in the free operad", "0".to_string(), difference.to_string());
    let ideal = Presentation::bracket_bullet().ideal_component(3)?;
    rec.equal(Some(3), "the same difference modulo the relations", "0".to_string(), ideal.reduce(&difference)?.to_string());
    let left = parse_combination(EXCHANGE_LEFT, None)?;
    let right = left.minus(&displayed)?;
    let gap = eval(&left)?.minus(&eval(&right)?)?;
    rec.equal(Some(3), "difference of the two sides evaluated in rooted trees", "0".to_string(), gap.to_string());
    Ok(())
}

fn filtration(ctx: &Context, rec: &mut Recorder) -> Result<()> {
    for n in 2..=ctx.config.max_arity.min(TENSOR_SCAN_MAX_ARITY) {
        let c = filtration_compatibility(n)?;
        rec.equal(
            Some(n),
            &format!("bracket weight or filtration failures over {} pairs", c.bracket_pairs),
            0,
            c.bracket_weight_failures + c.bracket_filtration_failures,
        );
        rec.equal(
            Some(n),
            &format!("composition weight or filtration failures over {} compositions", c.compositions),
            0,
            c.composition_weight_failures + c.composition_filtration_failures,
        );
    }
    rec.equal(Some(3), "dim F2 PL", 9, filtration_span(3, 2)?.dim());
    rec.equal(Some(3), "dim F3 PL", 8, filtration_span(3, 3)?.dim());
    let gr = gr_relation_check()?;
    rec.equal(Some(3), "exchange difference lies in F3", true, gr.difference_in_f3);
    rec.equal(Some(3), "[1,2]•3 lies in F3", false, gr.left_in_f3);
    rec.equal(Some(3), "[1,2]•3 lies in F2", true, gr.left_in_f2);
    Ok(())
}

fn cyclic_lie_dims(ctx: &Context, rec: &mut Recorder) -> Result<()> {
    for c in ctx.cl()? {
        let expected: usize = (1..=c.arity - 2).product();
        rec.equal(Some(c.arity), "dim CL", expected, c.dim());
    }
    Ok(())
}

fn y_versus_cl(ctx: &Context, rec: &mut Recorder) -> Result<()> {
    for c in ctx.cl()? {
        let n = c.arity;
        let labels = LabelSet::range(n);
        let y = y_span(&labels)?;
        rec.equal(Some(n), "dim Y against dim CL", c.dim(), y.dim());
        let mut mismatches = Vec::new();
        let shapes = Permutation::cycle_type_representatives(&labels);
        for (shape, sigma) in &shapes {
            let on_y = y.character(|t| Ok(act_trees(sigma, &t.to_vector())))?;
            let on_cl = c.character(sigma)?;
            if on_y != on_cl {
                mismatches.push(format!("{shape:?}: {on_y} vs {on_cl}"));
            }
        }
        let agree = shapes.len() - mismatches.len();
        let actual = if mismatches.is_empty() {
            format!("{agree} of {} agree", shapes.len())
        } else {
            format!("{agree} of {} agree; Y vs CL on {}", shapes.len(), mismatches.join(", "))
        };
        let passed = mismatches.is_empty();
        rec.push(Some(n), "characters per cycle type", format!("{0} of {0} agree", shapes.len()), actual, passed);
    }
    Ok(())
}

/// Renders a closure dimension, marking modular lower bounds.
fn closure_dim(level: &ClosureLevel) -> String {
    if level.is_exact() {
        level.dim().to_string()
    } else {
        format!(">= {} (rank modulo a prime, {} spanning vectors)", level.dim(), level.generated)
    }
}

fn suboperad_dims(ctx: &Context, rec: &mut Recorder) -> Result<()> {
    let max = ctx.config.max_arity;
    let t = free_operad_series(&EgfSeries::from_dims(max, &ctx.cl_dims()?))?;
    for level in ctx.suboperad()? {
        let n = level.arity;
        let expected = t.dim(n);
        let passed = level.is_exact() && Rational::from(level.dim() as i64) == expected;
        rec.push(Some(n), "dim P against the free operad on CL", expected, closure_dim(level), passed);
    }
    Ok(())
}

fn lie_module_dims(ctx: &Context, rec: &mut Recorder) -> Result<()> {
    let p = ctx.suboperad()?;
    for level in lie_module_closure(p, ctx.config.max_arity)?.iter().skip(1) {
        let n = level.arity;
        let passed = level.is_exact() && level.dim() as u64 == cayley(n);
        rec.push(Some(n), "dim of the Lie-module generated by P", cayley(n), closure_dim(level), passed);
    }
    Ok(())
}

fn egf(ctx: &Context, rec: &mut Recorder) -> Result<()> {
    cap("series order", ctx.config.egf_order, EGF_ORDER_CAP)?;
    let report = verify_chapoton_identity(ctx.config.egf_order, &ctx.cl_dims()?)?;
    for row in &report.rows {
        let subject = if row.extrapolated {
            "dim of Lie composed with T(CL), CL dims extrapolated as (n-2)!"
        } else {
            "dim of Lie composed with T(CL)"
        };
        rec.push(Some(row.n), subject, row.expected_pl_dim, &row.lie_composite_dim, row.matched);
    }
    Ok(())
}

fn factorization(ctx: &Context, rec: &mut Recorder) -> Result<()> {
    let signature = Signature::bracket_bullet();
    for n in 1..=ctx.config.max_arity.min(TENSOR_SCAN_MAX_ARITY) {
        let basis = enumerate_basis(&signature, &LabelSet::range(n))?;
        let failures: usize = basis
            .par_iter()
            .map(factorization_failures)
            .collect::<Result<Vec<_>>>()?
            .into_iter()
            .sum();
        rec.equal(Some(n), &format!("recomposition failures over {} tensors", basis.len()), 0, failures);
    }
    Ok(())
}

/// Failed recompositions of `t`, its bracket-root factorization and the
/// bullet cuts of `t` and of each factor.
fn factorization_failures(t: &TreeTensor) -> Result<usize> {
    let mut failures = 0;
    let factors = gamma_factorize(t)?;
    if factors.recompose()? != t.to_vector() {
        failures += 1;
    }
    for piece in std::iter::once(t).chain(&factors.parts) {
        if piece.root_generator() == Some(Generator::Bullet)
            && compose_cut_pieces(&bullet_cut_factorize(piece)?)? != piece.to_vector()
        {
            failures += 1;
        }
    }
    Ok(failures)
}

fn random_tree(rng: &mut StdRng, labels: &[u32], generators: &[Generator]) -> Tree {
    if labels.len() == 1 {
        return Tree::Leaf(labels[0]);
    }
    loop {
        let (left, right): (Vec<u32>, Vec<u32>) = labels.iter().partition(|_| rng.gen_bool(0.5));
        if !left.is_empty() && !right.is_empty() {
            let g = generators[rng.gen_range(0..generators.len())];
            return Tree::node(g, random_tree(rng, &left, generators), random_tree(rng, &right, generators));
        }
    }
}

fn random_tensor(rng: &mut StdRng, labels: &[u32], generators: &[Generator]) -> Result<TreeTensor> {
    Ok(canonicalize(&random_tree(rng, labels, generators))?.0)
}

fn random_coefficient(rng: &mut StdRng) -> Rational {
    let c = rng.gen_range(1..=3);
    Rational::from(if rng.gen_bool(0.5) { c } else { -c })
}

fn random_combination(rng: &mut StdRng, n: usize, generators: &[Generator]) -> Result<SpeciesVector<TreeTensor>> {
    let labels: Vec<u32> = (1..=n as u32).collect();
    let mut v = SpeciesVector::zero(LabelSet::range(n));
    for _ in 0..rng.gen_range(1..=3) {
        v.add_term(random_tensor(rng, &labels, generators)?, random_coefficient(rng));
    }
    Ok(v)
}

/// `eval(T ∘ᵢ S) = eval(T) ∘ᵢ eval(S)` on random tensors over all three
/// generators; returns the number of agreeing instances.
pub fn morphism_instances(seed: u64, count: usize) -> Result<usize> {
    let mut rng = StdRng::seed_from_u64(seed);
    let generators = [Generator::Bracket, Generator::Bullet, Generator::Pre];
    let mut agree = 0;
    for _ in 0..count {
        let n = rng.gen_range(2..=MORPHISM_MAX_ARITY);
        let k = rng.gen_range(1..=n);
        let m = n + 1 - k;
        let outer_labels: Vec<u32> = (1..=k as u32).collect();
        let inner_labels: Vec<u32> = (k as u32 + 1..=(k + m) as u32).collect();
        let outer = random_tensor(&mut rng, &outer_labels, &generators)?;
        let inner = random_tensor(&mut rng, &inner_labels, &generators)?;
        let i = outer_labels[rng.gen_range(0..k)];
        let lhs = eval(&partial_compose(&outer, i, &inner)?)?;
        let rhs = graft_compose_vectors(&eval(&outer.to_vector())?, i, &eval(&inner.to_vector())?)?;
        if lhs == rhs {
            agree += 1;
        }
    }
    Ok(agree)
}

/// Agreement of equality modulo the relations with equality after evaluation
/// on random pairs; returns `(agreeing, pairs equal in the quotient)`.
pub fn reduction_pairs(seed: u64, count: usize) -> Result<(usize, usize)> {
    let mut rng = StdRng::seed_from_u64(seed);
    let presentations = [Presentation::pre_lie(), Presentation::bracket_bullet()];
    let ideals: Vec<Vec<_>> = presentations
        .iter()
        .map(|p| p.ideal_tower(REDUCTION_MAX_ARITY))
        .collect::<Result<_>>()?;
    let rows: Vec<Vec<Vec<SpeciesVector<TreeTensor>>>> =
        ideals.iter().map(|tower| tower.iter().map(|c| c.span.rows()).collect()).collect();
    let (mut agree, mut equal) = (0, 0);
    for _ in 0..count {
        let which = rng.gen_range(0..presentations.len());
        let level = rng.gen_range(0..ideals[which].len());
        let n = level + 3;
        let generators = presentations[which].signature.generators();
        let a = random_combination(&mut rng, n, generators)?;
        let mut b = match rng.gen_range(0..3) {
            0 => random_combination(&mut rng, n, generators)?,
            _ => a.clone(),
        };
        if b == a {
            let pool = &rows[which][level];
            for _ in 0..rng.gen_range(1..=3) {
                b.add_scaled(&pool[rng.gen_range(0..pool.len())], &random_coefficient(&mut rng))?;
            }
            if rng.gen_bool(0.25) {
                b.add_term(random_tensor(&mut rng, &(1..=n as u32).collect::<Vec<_>>(), generators)?, Rational::one());
            }
        }
        let in_quotient = ideals[which][level].equal_in_quotient(&a, &b)?;
        let in_trees = eval(&a)? == eval(&b)?;
        if in_quotient {
            equal += 1;
        }
        if in_quotient == in_trees {
            agree += 1;
        }
    }
    Ok((agree, equal))
}

fn model_coherence(ctx: &Context, rec: &mut Recorder) -> Result<()> {
    let agree = morphism_instances(ctx.config.seed, MORPHISM_INSTANCES)?;
    rec.push(
        None,
        &format!("evaluation commutes with partial composition, arity <= {MORPHISM_MAX_ARITY}"),
        format!("{MORPHISM_INSTANCES} of {MORPHISM_INSTANCES}"),
        format!("{agree} of {MORPHISM_INSTANCES}"),
        agree == MORPHISM_INSTANCES,
    );
    let (agree, equal) = reduction_pairs(ctx.config.seed, REDUCTION_PAIRS)?;
    rec.push(
        None,
        &format!("equality modulo relations matches equality of rooted trees, arity <= {REDUCTION_MAX_ARITY}"),
        format!("{REDUCTION_PAIRS} of {REDUCTION_PAIRS}"),
        format!("{agree} of {REDUCTION_PAIRS} ({equal} pairs equal)"),
        agree == REDUCTION_PAIRS,
    );
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small() -> VerifyConfig {
        VerifyConfig { max_arity: 4, quotient_max_arity: 4, egf_order: 6, ..VerifyConfig::default() }
    }

    #[test]
    fn check_ids_round_trip() {
        for c in Check::ALL {
            assert_eq!(c.id().parse::<Check>().unwrap(), c);
        }
        assert!(matches!("nope".parse::<Check>(), Err(Error::UnknownCheck(_))));
        assert_eq!(resolve_checks(&["all".into()]).unwrap().len(), Check::ALL.len());
        assert_eq!(resolve_checks(&["egf".into(), "egf".into()]).unwrap(), vec![Check::Egf]);
    }

    #[test]
    fn configuration_validation() {
        assert!(VerifyConfig::default().validate().is_ok());
        assert!(VerifyConfig { max_arity: 1, ..VerifyConfig::default() }.validate().is_err());
        assert!(VerifyConfig { checks: vec!["bogus".into()], ..VerifyConfig::default() }.validate().is_err());
    }

    #[test]
    fn caps_become_failed_results() {
        let config = VerifyConfig { quotient_max_arity: 9, checks: vec!["quotient-dims".into()], ..small() };
        let report = run(config).unwrap();
        assert_eq!(report.results.len(), 1);
        assert!(!report.passed());
        assert!(report.results[0].actual.contains("resource cap"));
    }

    #[test]
    fn small_suite_results() {
        let report = run(VerifyConfig { checks: vec!["egf".into(), "orbit-rank".into(), "cyclic-lie-dims".into()], ..small() })
            .unwrap();
        assert!(report.for_check(Check::Egf).all(|r| r.passed));
        assert!(report.for_check(Check::CyclicLieDims).all(|r| r.passed));
        let orbit: Vec<bool> = report.for_check(Check::OrbitRank).map(|r| r.passed).collect();
        assert_eq!(orbit, vec![false, true, true, true]);
        // Results keep check order.
        assert_eq!(report.results[0].check_id, "orbit-rank");
        let text = report.to_text();
        assert!(text.contains("FAIL n=3   orbit of the symmetrized relator: expected 2, got 3"));
    }

    #[test]
    fn json_round_trip() {
        let report = run(VerifyConfig { checks: vec!["egf".into(), "relation-combination".into()], format: Format::Json, ..small() })
            .unwrap();
        let back = Report::from_json(&report.to_json()).unwrap();
        assert_eq!(back, report);
        let value: serde_json::Value = serde_json::from_str(&report.to_json()).unwrap();
        assert!(value["results"][0]["arity"].is_number() && value["config"]["format"] == "json");
        assert!(Report::from_json("{").is_err());
    }

    #[test]
    fn report_is_deterministic() {
        let config = VerifyConfig { checks: vec!["model-coherence".into()], ..small() };
        let strip = |r: Report| r.results.into_iter().map(|c| (c.subject, c.actual, c.passed)).collect::<Vec<_>>();
        assert_eq!(strip(run(config.clone()).unwrap()), strip(run(config).unwrap()));
    }

    #[test]
    fn random_instances_cover_equal_and_unequal_pairs() {
        assert_eq!(morphism_instances(7, 60).unwrap(), 60);
        let (agree, equal) = reduction_pairs(7, 60).unwrap();
        assert_eq!(agree, 60);
        assert!(equal > 10 && equal < 50, "{equal}");
    }
}
