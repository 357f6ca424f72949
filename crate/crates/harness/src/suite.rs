//! Batch checks of the structural theorems over seeded random instances.
//!
//! Every trial draws from its own generator seeded by `(seed, trial index)`,
//! so trials run in parallel and the merged report does not depend on the
//! schedule. A failing check carries the trial's entities as a workspace
//! document that reproduces it.

use std::collections::BTreeMap;
use std::sync::Arc;

use grpd_core::brute::{Tables, functor_uniqueness, functors, transformations, two_cell_solutions};
use grpd_core::classify::{classify, FunctorClassification};
use grpd_core::exact::{
    delta_is_kernel, is_proper, naturality_ladder, pi_preserves_exactness, snail_sequence, snake_sequence, Square,
};
use grpd_core::fixtures::{cyclic_table, discrete, one_object};
use grpd_core::fpvect::FpVect;
use grpd_core::hlimits::{
    fibration_replacement, induce_2cell, kernel_of_functor, pasting_comparison, sigma_c_section, strong_h_kernel,
    strong_h_pullback,
};
use grpd_core::invariants::{pi0, pi1};
use grpd_core::{Category, Error, FinPtSet, InternalFunctor, Matrix, NatTransformation};
use rand::seq::SliceRandom;
use rand::Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::generator::{
    assemble, random_chain_functor, GeneratedChainMap, random_functor, random_functor_into, random_shape, rng, Flavor, GenRng,
    GeneratedFunctor, GeneratorSpec, Group, Shape,
};
use crate::workspace::{Entities, Workspace};

#[derive(Clone, Debug)]
pub struct SuiteConfig {
    pub trials: usize,
    pub seed: u64,
    pub spec: GeneratorSpec,
}

impl SuiteConfig {
    pub fn new(trials: usize, seed: u64) -> Self {
        SuiteConfig {
            trials,
            seed,
            spec: GeneratorSpec::default(),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Tally {
    pub passed: usize,
    pub failed: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub trial: usize,
    pub check: String,
    pub detail: String,
    /// A workspace document holding the trial's entities.
    pub workspace: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub trials: usize,
    pub seed: u64,
    pub checks: BTreeMap<String, Tally>,
    /// How many trials carried each tag (functor kinds, implication antecedents).
    pub tags: BTreeMap<String, usize>,
    pub failures: Vec<Failure>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn tag(&self, name: &str) -> usize {
        self.tags.get(name).copied().unwrap_or(0)
    }

    pub fn tally(&self, check: &str) -> Tally {
        self.checks.get(check).cloned().unwrap_or_default()
    }

    pub fn summary(&self) -> String {
        let mut out = format!(
            "{}: {} trials, seed {}, {} failures\n",
            self.suite,
            self.trials,
            self.seed,
            self.failures.len()
        );
        for (name, t) in &self.checks {
            out.push_str(&format!("  {name:<36} {:>5} passed {:>3} failed\n", t.passed, t.failed));
        }
        for (name, n) in &self.tags {
            out.push_str(&format!("  [{name}] {n}\n"));
        }
        for f in self.failures.iter().take(5) {
            out.push_str(&format!("  FAIL trial {} {}: {}\n", f.trial, f.check, f.detail));
        }
        out
    }
}

/// The checks and tags recorded by one trial.
#[derive(Default)]
pub struct Trial {
    checks: Vec<(&'static str, bool, String)>,
    tags: Vec<String>,
    workspace: Option<Workspace>,
}

impl Trial {
    pub fn check(&mut self, name: &'static str, holds: bool) {
        self.checks.push((name, holds, String::new()));
    }

    pub fn check_with(&mut self, name: &'static str, holds: bool, detail: impl Into<String>) {
        self.checks.push((name, holds, detail.into()));
    }

    /// Records `consequent` only when `antecedent` holds.
    pub fn implication(&mut self, name: &'static str, antecedent: bool, consequent: bool) {
        if antecedent {
            self.tag(name);
            self.check(name, consequent);
        }
    }

    pub fn tag(&mut self, name: impl Into<String>) {
        self.tags.push(name.into());
    }

    pub fn keep(&mut self, ws: impl Into<Workspace>) {
        self.workspace = Some(ws.into());
    }
}

fn trial_rng(seed: u64, salt: u64, index: usize) -> GenRng {
    rng(seed ^ salt ^ (index as u64 + 1).wrapping_mul(0x9E37_79B9_7F4A_7C15))
}

/// Runs `body` once per trial index in parallel and merges the results in index order.
pub fn run(
    name: &str,
    trials: usize,
    seed: u64,
    body: impl Fn(usize, &mut Trial) -> grpd_core::Result<()> + Sync,
) -> SuiteReport {
    let outcomes: Vec<Trial> = (0..trials)
        .into_par_iter()
        .map(|index| {
            let mut t = Trial::default();
            if let Err(e) = body(index, &mut t) {
                t.check_with("no-errors", false, e.to_string());
            }
            t
        })
        .collect();
    let mut report = SuiteReport {
        suite: name.to_string(),
        trials,
        seed,
        checks: BTreeMap::new(),
        tags: BTreeMap::new(),
        failures: Vec::new(),
    };
    for (index, t) in outcomes.into_iter().enumerate() {
        for tag in t.tags {
            *report.tags.entry(tag).or_default() += 1;
        }
        let repro = t.workspace.as_ref().map(Workspace::to_json).unwrap_or_default();
        for (check, holds, detail) in t.checks {
            let tally = report.checks.entry(check.to_string()).or_default();
            if holds {
                tally.passed += 1;
            } else {
                tally.failed += 1;
                report.failures.push(Failure {
                    trial: index,
                    check: check.to_string(),
                    detail,
                    workspace: repro.clone(),
                });
            }
        }
    }
    report
}

fn laws(r: &grpd_core::LawReport) -> String {
    r.failures()
        .map(|f| match &f.witness {
            Some(w) => format!("{} at {w}", f.law),
            None => f.law.clone(),
        })
        .collect::<Vec<_>>()
        .join("; ")
}

fn check_laws(t: &mut Trial, name: &'static str, r: grpd_core::LawReport) {
    t.check_with(name, r.all_pass(), laws(&r));
}

/// Groupoid laws; when the composable triples outgrow the limit search,
/// associativity is checked by walking the element tables instead.
fn check_groupoid(t: &mut Trial, name: &'static str, g: &grpd_core::Groupoid<FinPtSet>) {
    let mut r = g.validate();
    if let Err(Error::SizeLimit { .. }) = g.composable_triples() {
        let witness = Tables::of(g).associativity_witness();
        for law in r.checks.iter_mut().filter(|c| c.law == "associativity") {
            law.holds = witness.is_none();
            law.witness = witness.map(|w| format!("{w:?}"));
        }
    }
    check_laws(t, name, r);
}

fn keep_functor(t: &mut Trial, name: &str, f: &InternalFunctor<FinPtSet>) {
    let mut e = Entities::new(FinPtSet::new());
    e.add_functor(name, f);
    t.keep(e);
}

fn tag_classification(t: &mut Trial, k: &FunctorClassification<FinPtSet>) {
    let flags = [
        ("fibration", k.fibration),
        ("non-fibration", !k.fibration),
        ("full", k.full),
        ("faithful", k.faithful),
        ("essentially-surjective", k.essentially_surjective),
        ("split-epi-fibration", k.split_epi_fibration),
        ("discrete-fibration", k.discrete_fibration),
    ];
    for (name, on) in flags {
        if on {
            t.tag(name);
        }
    }
}

/// The flavor of trial `index`: the four flavors in rotation.
pub fn flavor_of(index: usize) -> Flavor {
    Flavor::ALL[index % Flavor::ALL.len()]
}

pub fn pointed_functor(cfg: &SuiteConfig, index: usize) -> GeneratedFunctor {
    random_functor(&mut trial_rng(cfg.seed, 0x01, index), &cfg.spec, flavor_of(index))
}

/// Classification, the snail sequence, properness, the kernel leg, the
/// `π0`/`π1` transfer implications and, for fibrations, the level-wise kernel
/// and the snake sequence.
pub fn pointed_suite(cfg: &SuiteConfig) -> SuiteReport {
    let mut report = run("pointed", cfg.trials, cfg.seed, |index, t| {
        let g = pointed_functor(cfg, index);
        keep_functor(t, "F", &g.functor);
        pointed_trial(t, &g.functor)
    });
    coverage(&mut report);
    report
}

/// A kind of functor reached by fewer than a tenth of the trials counts as a failure.
fn coverage(report: &mut SuiteReport) {
    if report.trials < 20 {
        return;
    }
    for kind in ["fibration", "non-fibration", "full", "faithful"] {
        let n = report.tag(kind);
        let ok = n * 10 >= report.trials;
        let tally = report.checks.entry("coverage".into()).or_default();
        if ok {
            tally.passed += 1;
        } else {
            tally.failed += 1;
            report.failures.push(Failure {
                trial: report.trials,
                check: "coverage".into(),
                detail: format!("{kind}: {n} of {}", report.trials),
                workspace: String::new(),
            });
        }
    }
}

pub fn pointed_trial(t: &mut Trial, f: &InternalFunctor<FinPtSet>) -> grpd_core::Result<()> {
    let cat = f.cat();
    check_laws(t, "functor-valid", f.validate());
    let k = classify(f)?;
    tag_classification(t, &k);
    t.check(
        "classification-consistent",
        k.weak_equivalence == (k.full && k.faithful && k.essentially_surjective)
            && k.equivalence == (k.full && k.faithful && k.surjective)
            && (!k.discrete_fibration || k.split_epi_fibration)
            && (!k.split_epi_fibration || k.fibration),
    );
    t.check_with(
        "tau-d-agrees-with-tau-c",
        k.tau_d_flags() == k.tau_c_flags,
        format!("{:?} vs {:?}", k.tau_d_flags(), k.tau_c_flags),
    );
    t.check(
        "ess-surj-d-agrees-with-c",
        k.essentially_surjective == k.essentially_surjective_c,
    );

    let snail = snail_sequence(f)?;
    let report = snail.seq.check(cat)?;
    check_groupoid(t, "hkernel-valid", snail.hk.k());
    t.check("delta-is-kernel", delta_is_kernel(&snail.hk, &snail.seq.delta)?);
    t.check("snail-complex", report.is_complex());
    let proper = [&f.src, &f.dst, snail.hk.k()]
        .into_iter()
        .map(|g| is_proper(g))
        .collect::<grpd_core::Result<Vec<bool>>>()?;
    t.check_with("proper", proper.iter().all(|&p| p), format!("{proper:?}"));
    if proper.iter().all(|&p| p) {
        t.check_with(
            "snail-exact",
            report.is_exact(),
            format!("exact at {}/4 nodes", report.exact_nodes()),
        );
    }
    t.check(
        "kernel-leg-discrete-fibration",
        classify(snail.hk.kf())?.discrete_fibration,
    );

    let (p1, p0) = (&snail.seq.maps[1], &snail.seq.maps[4]);
    let target_proper = proper[1];
    t.implication("full-implies-pi1-epi", k.full, cat.is_regular_epi(p1));
    t.implication("faithful-implies-pi1-mono", k.faithful, cat.is_mono(p1));
    t.implication("full-implies-pi0-mono", k.full && target_proper, cat.is_mono(p0));
    t.implication(
        "ess-surj-implies-pi0-epi",
        k.essentially_surjective,
        cat.is_regular_epi(p0),
    );
    t.implication(
        "pi0-epi-implies-ess-surj",
        cat.is_regular_epi(p0) && target_proper,
        k.essentially_surjective,
    );

    if k.fibration {
        let snake = snake_sequence(f)?;
        let kj = classify(&snake.kernel.j)?;
        t.check("j-weak-equivalence", kj.weak_equivalence);
        if k.split_epi_fibration {
            t.check("j-equivalence", kj.equivalence);
        }
        let snake_report = snake.seq.check(cat)?;
        t.check_with(
            "snake-exact",
            snake_report.is_exact(),
            format!("exact at {}/4 nodes", snake_report.exact_nodes()),
        );
        t.check("snake-matches-snail", snake.matches_snail(cat)?);
        t.check("normalization-regular-epi", cat.is_regular_epi(&k.kd));
    }
    Ok(())
}

/// Generator bounds for the replacement suite. The h-kernel of `F′` has about
/// `|𝔽(F)1|² · |B1| / |𝔽(F)0|` composable pairs, which outgrows the pointed-set
/// limits at the default bounds.
pub fn replacement_spec() -> GeneratorSpec {
    GeneratorSpec {
        max_objects: 4,
        max_group_order: 3,
        max_components: 3,
    }
}

/// Fibration replacement: `F′` is a split epi fibration, `E` an equivalence,
/// the explicit `σ_c` is a section, `J·L` is invertible and the ladder of the
/// replacement square commutes with invertible verticals.
pub fn replacement_suite(cfg: &SuiteConfig) -> SuiteReport {
    run("replacement", cfg.trials, cfg.seed, |index, t| {
        let g = random_functor(&mut trial_rng(cfg.seed, 0x02, index), &cfg.spec, flavor_of(index));
        keep_functor(t, "F", &g.functor);
        replacement_trial(t, &g.functor)
    })
}

pub fn replacement_trial(t: &mut Trial, f: &InternalFunctor<FinPtSet>) -> grpd_core::Result<()> {
    let cat = f.cat();
    let r = fibration_replacement(f)?;
    check_groupoid(t, "replacement-valid", r.ff());
    t.check(
        "replacement-split-epi-fibration",
        classify(r.fprime())?.split_epi_fibration,
    );
    t.check("replacement-e-equivalence", classify(r.e())?.equivalence);
    let s = sigma_c_section(&r)?;
    t.check(
        "sigma-c-section",
        cat.compose(&s.sigma, &s.tau_c)? == cat.identity(&s.q.apex),
    );
    let sq = Square {
        fprime: r.fprime().clone(),
        f: f.clone(),
        e: r.e().clone(),
        t: InternalFunctor::identity(&f.dst),
        phi: r.cell().clone(),
    };
    let ladder = naturality_ladder(&sq)?;
    t.check_with(
        "ladder-commutes",
        ladder.commutes(),
        format!("squares {:?}, connecting {:?}", ladder.squares, ladder.star),
    );
    t.check("ladder-verticals-iso", ladder.verticals_iso(cat));
    let ker = kernel_of_functor(r.fprime())?;
    t.check("j-then-l-iso", ker.j.then(&ladder.l)?.is_isomorphism());
    Ok(())
}

/// Bounds for the exhaustive universal-property searches.
#[derive(Clone, Debug)]
pub struct UniversalBounds {
    /// Every level of `A`, `B` and `C` has at most this many elements.
    pub max_level: usize,
    pub max_cones: usize,
    pub max_functor_pairs: usize,
}

impl Default for UniversalBounds {
    fn default() -> Self {
        UniversalBounds {
            max_level: 5,
            max_cones: 40,
            max_functor_pairs: 24,
        }
    }
}

fn small_shape(rng: &mut GenRng, max_level: usize) -> Shape {
    let spec = GeneratorSpec::tiny(max_level);
    loop {
        let s = random_shape(rng, &spec);
        if s.arrows() <= max_level {
            return s;
        }
    }
}

fn small_functor_into(rng: &mut GenRng, max_level: usize, dst: &Shape) -> GeneratedFunctor {
    let spec = GeneratorSpec::tiny(max_level);
    loop {
        let flavor = *Flavor::ALL.choose(rng).expect("four flavors");
        let g = random_functor_into(rng, &spec, flavor, dst.clone());
        if g.src_shape.arrows() <= max_level {
            return g;
        }
    }
}

/// A cospan `A → B ← C` with every level at most `max_level` elements, as used
/// by trial `index` of the universal-property suite.
pub fn small_cospan(seed: u64, index: usize, max_level: usize) -> (GeneratedFunctor, GeneratedFunctor) {
    let mut r = trial_rng(seed, 0x03, index);
    let b = small_shape(&mut r, max_level);
    let f = small_functor_into(&mut r, max_level, &b);
    let g = small_functor_into(&mut r, max_level, &b);
    (f, g)
}

/// Exhaustive uniqueness of the induced 1-cells and 2-cells of strong
/// h-pullbacks of small cospans, and the pasting of a level-wise pullback.
pub fn universal_suite(cfg: &SuiteConfig, bounds: &UniversalBounds) -> SuiteReport {
    run("universal", cfg.trials, cfg.seed, |index, t| {
        let (f, g) = small_cospan(cfg.seed, index, bounds.max_level);
        let mut e = Entities::new(FinPtSet::new());
        e.add_functor("F", &f.functor);
        e.add_functor("G", &g.functor);
        t.keep(e);
        let mut r = trial_rng(cfg.seed, 0x04, index);
        universal_trial(t, &mut r, &f, &g, bounds)
    })
}

pub fn universal_trial(
    t: &mut Trial,
    r: &mut GenRng,
    f: &GeneratedFunctor,
    g: &GeneratedFunctor,
    bounds: &UniversalBounds,
) -> grpd_core::Result<()> {
    let (f, gs, g) = (&f.functor, &g.src_shape, &g.functor);
    let hpb = strong_h_pullback(f, g)?;
    check_groupoid(t, "hpullback-valid", &hpb.p);
    t.check(
        "projections-split-epi-fibrations",
        classify(&hpb.fp)?.split_epi_fibration && classify(&hpb.gp)?.split_epi_fibration,
    );
    let sources = [Arc::new(discrete(1)), Arc::new(discrete(2)), Arc::new(one_object(&cyclic_table(2)))];
    for x in &sources {
        // 1-cells: every cone (H, K, μ) has exactly one factorization
        let mut cones = Vec::new();
        for h in functors(x, &f.src)? {
            for k in functors(x, &g.src)? {
                for mu in transformations(&k.then(g)?, &h.then(f)?)? {
                    cones.push((h.clone(), k.clone(), mu));
                }
            }
        }
        cones.shuffle(r);
        for (h, k, mu) in cones.iter().take(bounds.max_cones) {
            let u = functor_uniqueness(&hpb, h, k, mu)?;
            t.check_with(
                "induced-functor-unique",
                u.unique(),
                format!("{} solutions", u.solutions.len()),
            );
        }
        // 2-cells: compatible pairs have exactly one lift, incompatible pairs none
        let into_p = functors(x, &hpb.p)?;
        let mut pairs: Vec<(usize, usize)> = (0..into_p.len())
            .flat_map(|a| (0..into_p.len()).map(move |b| (a, b)))
            .collect();
        pairs.shuffle(r);
        for &(a, b) in pairs.iter().take(bounds.max_functor_pairs) {
            let (l, m) = (&into_p[a], &into_p[b]);
            let alphas = transformations(&l.then(&hpb.fp)?, &m.then(&hpb.fp)?)?;
            let betas = transformations(&l.then(&hpb.gp)?, &m.then(&hpb.gp)?)?;
            for alpha in &alphas {
                for beta in &betas {
                    let found = two_cell_solutions(&hpb, l, m, alpha, beta)?;
                    match induce_2cell(&hpb, l, m, alpha, beta) {
                        Ok(mu) => {
                            t.tag("compatible-2-cell-pairs");
                            t.check("induced-2-cell-unique", found.len() == 1 && found[0] == mu);
                        }
                        Err(Error::IncompatibleSquare(_)) => {
                            t.tag("incompatible-2-cell-pairs");
                            t.check("incompatible-2-cell-has-no-lift", found.is_empty());
                        }
                        Err(e) => return Err(e),
                    }
                }
            }
        }
    }
    // pasting a level-wise pullback along a functor into C
    let spec = GeneratorSpec::tiny(3);
    let flavor = Flavor::ALL[r.gen_range(0..4)];
    let h = random_functor_into(r, &spec, flavor, gs.clone()).functor;
    let (sp, comparison) = pasting_comparison(&hpb, &h)?;
    check_groupoid(t, "pasted-pullback-valid", &sp.q);
    t.check("pasting-comparison-iso", comparison.is_isomorphism());
    Ok(())
}

/// `A --F--> B --G--> C` with `φ: F·G ⇒ 0`, for the cyclic family
/// `ℤ/m --×n--> ℤ/mn --mod n--> ℤ/n` on `k` objects.
pub fn cyclic_triple(
    m: usize,
    n: usize,
    k: usize,
) -> (InternalFunctor<FinPtSet>, NatTransformation<FinPtSet>, InternalFunctor<FinPtSet>) {
    let group = |order: usize| Group::new(format!("Z{order}"), cyclic_table(order));
    let shape = |order: usize| Shape {
        components: vec![(k, group(order))],
    };
    let (a, b, c) = (shape(m), shape(m * n), shape(n));
    let ident: Vec<usize> = (0..k).collect();
    let times: Vec<usize> = (0..m).map(|h| h * n).collect();
    let reduce: Vec<usize> = (0..m * n).map(|h| h % n).collect();
    let f = assemble(&a, &b, &ident, &[times], &vec![0; k]);
    let g = assemble(&b, &c, &ident, &[reduce], &vec![0; k]);
    let cat = FinPtSet::new();
    let to_base: Vec<usize> = (0..k).map(|u| c.arrow(u, 0, 0)).collect();
    let fg = f.then(&g).expect("composable");
    let zero = InternalFunctor::zero(&fg.src, &fg.dst);
    let phi = NatTransformation::new(fg, zero, cat.map(c.arrows(), &to_base).expect("component"))
        .expect("component fits");
    (f, phi, g)
}

pub const CYCLIC_FAMILY: [(usize, usize); 5] = [(2, 2), (2, 3), (3, 2), (1, 4), (4, 1)];

/// 2-exact triples: the kernel cone of a random functor, and the cyclic family.
pub fn two_exact_suite(cfg: &SuiteConfig) -> SuiteReport {
    let family: Vec<(usize, usize, usize)> = CYCLIC_FAMILY
        .iter()
        .flat_map(|&(m, n)| [(m, n, 1), (m, n, 2)])
        .collect();
    run("two-exact", cfg.trials, cfg.seed, |index, t| {
        let (f, phi, g) = match family.get(index) {
            Some(&(m, n, k)) => {
                t.tag("cyclic-family");
                cyclic_triple(m, n, k)
            }
            None => {
                t.tag("kernel-cone");
                let g = random_functor(&mut trial_rng(cfg.seed, 0x05, index), &cfg.spec, flavor_of(index)).functor;
                let hk = strong_h_kernel(&g)?;
                let phi = hk.kf_cell().inverse()?;
                (hk.kf().clone(), phi, g)
            }
        };
        let mut e = Entities::new(FinPtSet::new());
        e.add_functor("G", &g);
        e.add_transformation("phi", &phi);
        t.keep(e);
        let p = pi_preserves_exactness(&f, &phi, &g)?;
        t.check("two-exact", p.two.exact());
        t.check("g1-iso", p.g1_iso);
        if p.target_proper {
            t.check("g0-regular-epi", p.g0_regular_epi);
            t.check("pi0-row-exact", p.pi0_row.exact());
        }
        t.check("pi1-row-exact", p.pi1_row.exact());
        Ok(())
    })
}

fn nullity(m: &Matrix) -> usize {
    m.rows() - m.rank()
}

fn corank(m: &Matrix) -> usize {
    m.cols() - m.rank()
}

/// The chain map of trial `index` of the linear suite.
pub fn linear_instance(
    cfg: &SuiteConfig,
    modulus: Option<u32>,
    max_dim: usize,
    index: usize,
) -> grpd_core::Result<(FpVect, GeneratedChainMap)> {
    let p = modulus.unwrap_or(if index.is_multiple_of(2) { 2 } else { 3 });
    let cat = FpVect::new(p)?;
    let g = random_chain_functor(&mut trial_rng(cfg.seed, 0x06, index), &cat, max_dim);
    Ok((cat, g))
}

/// Random chain maps of 2-term complexes over `𝔽p` (alternating `p = 2, 3`
/// when no modulus is given): `π1`/`π0` are kernel and cokernel, and the
/// snail sequence is the exact homology sequence of the fibre.
pub fn linear_suite(cfg: &SuiteConfig, modulus: Option<u32>, max_dim: usize) -> SuiteReport {
    run("linear", cfg.trials, cfg.seed, |index, t| {
        let (cat, g) = linear_instance(cfg, modulus, max_dim, index)?;
        let p = cat.modulus();
        let mut e = Entities::new(cat.clone());
        e.add_functor("F", &g.functor);
        t.keep(e);
        let f = &g.functor;
        for (d, grp) in [(&g.da, &f.src), (&g.db, &f.dst)] {
            t.check("pi1-is-kernel", pi1(grp)?.carrier.0 == nullity(d));
            t.check("pi0-is-cokernel", pi0(grp)?.obj.0 == corank(d));
        }
        let snail = snail_sequence(f)?;
        let report = snail.seq.check(&cat)?;
        t.check("snail-complex", report.is_complex());
        t.check_with(
            "snail-exact",
            report.is_exact(),
            format!("exact at {}/4 nodes", report.exact_nodes()),
        );
        // the fibre ends in F(B0 / (im ∂b + im f0)); the sequence starts injectively
        let tail = Matrix::vstack(p, g.db.cols(), &[&g.db, &g.f0])?;
        let dims: Vec<i64> = snail.seq.objects.iter().map(|d| d.0 as i64).collect();
        let euler = dims[0] - dims[1] + dims[2] - dims[3] + dims[4] - dims[5] + corank(&tail) as i64;
        t.check_with("snail-dimensions", euler == 0, format!("{dims:?}"));
        t.check("snail-starts-injective", cat.is_mono(&snail.seq.maps[0]));
        Ok(())
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn clean(r: &SuiteReport) {
        assert!(r.passed(), "{}", r.summary());
    }

    #[test]
    fn pointed_trials_pass() {
        clean(&pointed_suite(&SuiteConfig::new(24, 7)));
    }

    #[test]
    fn replacement_trials_pass() {
        clean(&replacement_suite(&SuiteConfig::new(8, 7)));
    }

    #[test]
    fn universal_trials_pass() {
        let r = universal_suite(&SuiteConfig::new(4, 7), &UniversalBounds::default());
        clean(&r);
        assert!(r.tally("induced-functor-unique").passed > 0);
    }

    #[test]
    fn cyclic_family_is_two_exact() {
        let r = two_exact_suite(&SuiteConfig::new(14, 7));
        clean(&r);
        assert_eq!(r.tag("cyclic-family"), 10);
    }

    #[test]
    fn linear_trials_pass() {
        clean(&linear_suite(&SuiteConfig::new(20, 7), None, 4));
    }

    #[test]
    fn reports_do_not_depend_on_the_schedule() {
        let cfg = SuiteConfig::new(8, 99);
        assert_eq!(pointed_suite(&cfg), pointed_suite(&cfg));
    }

    #[test]
    fn errors_become_failures() {
        let r = run("errors", 2, 0, |i, t| {
            t.check("ok", true);
            if i == 1 {
                Err(Error::NoFactorization("x".into()))
            } else {
                Ok(())
            }
        });
        assert_eq!(r.tally("no-errors").failed, 1);
        assert_eq!(r.failures[0].trial, 1);
    }
}
