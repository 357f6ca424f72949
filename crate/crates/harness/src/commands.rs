//! The commands behind the `grpd` binary. Each returns a text report, a JSON
//! summary and whether every asserted property held.

use std::path::Path;

use grpd_core::classify::classify;
use grpd_core::exact::{
    is_proper, naturality_ladder, snail_sequence, snake_sequence, SequenceReport, SixTermSequence, Square,
    INTERNAL_NODES,
};
use grpd_core::hlimits::{fibration_replacement, kernel_of_functor, sigma_c_section, strong_h_kernel, strong_h_pullback};
use grpd_core::invariants::{pi0, pi1};
use grpd_core::{Category, Groupoid, InternalFunctor};
use serde_json::{json, Value};
use thiserror::Error;

use crate::generator::GeneratorSpec;
use crate::suite::{
    linear_suite, pointed_suite, replacement_spec, replacement_suite, two_exact_suite, universal_suite, SuiteConfig,
    SuiteReport, UniversalBounds,
};
use crate::workspace::{Codec, Entities, Workspace, WorkspaceError};

#[derive(Debug, Error)]
pub enum CommandError {
    #[error(transparent)]
    Workspace(#[from] WorkspaceError),
    #[error(transparent)]
    Core(#[from] grpd_core::Error),
    #[error("{0}")]
    Usage(String),
}

pub type CommandResult = std::result::Result<Outcome, CommandError>;

#[derive(Clone, Debug, PartialEq)]
pub struct Outcome {
    pub text: String,
    pub summary: Value,
    pub ok: bool,
}

impl Outcome {
    fn new(text: String, summary: Value, ok: bool) -> Self {
        Outcome { text, summary, ok }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Command {
    Validate,
    Pi0(String),
    Pi1(String),
    HKernel(String),
    HPullback(String, String),
    Snail(String),
    Snake(String),
    Classify(String),
    Replace(String),
    /// One functor for its replacement square, or `F′ F E T φ`.
    Ladder(Vec<String>),
}

impl Command {
    fn names(&self) -> Vec<&str> {
        match self {
            Command::Validate => vec![],
            Command::Pi0(n)
            | Command::Pi1(n)
            | Command::HKernel(n)
            | Command::Snail(n)
            | Command::Snake(n)
            | Command::Classify(n)
            | Command::Replace(n) => vec![n],
            Command::HPullback(f, g) => vec![f, g],
            Command::Ladder(names) => names.iter().map(String::as_str).collect(),
        }
    }

    fn rename(&self, to: &str) -> Command {
        let one = |_: &String| to.to_string();
        match self {
            Command::Validate => Command::Validate,
            Command::Pi0(n) => Command::Pi0(one(n)),
            Command::Pi1(n) => Command::Pi1(one(n)),
            Command::HKernel(n) => Command::HKernel(one(n)),
            Command::Snail(n) => Command::Snail(one(n)),
            Command::Snake(n) => Command::Snake(one(n)),
            Command::Classify(n) => Command::Classify(one(n)),
            Command::Replace(n) => Command::Replace(one(n)),
            Command::HPullback(f, g) => Command::HPullback(one(f), one(g)),
            Command::Ladder(names) => Command::Ladder(names.iter().map(one).collect()),
        }
    }
}

/// The shipped example workspaces, each defining one functor `F`.
pub const FIXTURES: [(&str, &str); 2] = [
    ("z2_to_z4", include_str!("../fixtures/z2_to_z4.json")),
    ("z4_mod2", include_str!("../fixtures/z4_mod2.json")),
];

pub fn fixture(name: &str) -> Option<Workspace> {
    FIXTURES
        .iter()
        .find(|(n, _)| *n == name)
        .map(|(_, text)| Workspace::parse(text).expect("shipped fixtures parse"))
}

/// Runs `cmd` on the workspace at `path`; without a workspace every name must
/// be a shipped fixture, which then stands for its functor `F`.
pub fn run_command(path: Option<&Path>, category: Option<&str>, cmd: &Command) -> CommandResult {
    let (ws, cmd) = match path {
        Some(p) => (Workspace::load(p)?, cmd.clone()),
        None => {
            let names = cmd.names();
            let Some(first) = names.first() else {
                return Err(CommandError::Usage("no workspace given".into()));
            };
            if names.iter().any(|n| n != first) {
                return Err(CommandError::Usage("without --workspace all names must be one fixture".into()));
            }
            let ws = fixture(first).ok_or_else(|| WorkspaceError::UnknownEntity(first.to_string()))?;
            (ws, cmd.rename("F"))
        }
    };
    match (&ws, category) {
        (Workspace::PtSets(_), Some(c)) if c != "finptset" => {
            return Err(CommandError::Usage(format!("workspace is over finptset, not {c}")))
        }
        (Workspace::Vect(_), Some(c)) if c != "fpvect" => {
            return Err(CommandError::Usage(format!("workspace is over fpvect, not {c}")))
        }
        _ => {}
    }
    match &ws {
        Workspace::PtSets(e) => run_on(e, &cmd),
        Workspace::Vect(e) => run_on(e, &cmd),
    }
}

fn mark(b: bool) -> &'static str {
    if b {
        "✓"
    } else {
        "✗"
    }
}

fn unit<C: Codec>() -> &'static str {
    if C::TAG == "fpvect" {
        "dimensions"
    } else {
        "sizes"
    }
}

fn levels<C: Codec>(g: &Groupoid<C>) -> (usize, usize) {
    (g.cat.size(&g.b0), g.cat.size(&g.b1))
}

fn list(sizes: &[usize]) -> String {
    sizes.iter().map(usize::to_string).collect::<Vec<_>>().join(",")
}

pub fn run_on<C: Codec>(e: &Entities<C>, cmd: &Command) -> CommandResult {
    match cmd {
        Command::Validate => Ok(validate(e)),
        Command::Pi0(n) | Command::Pi1(n) => invariants(e, n),
        Command::HKernel(n) => hkernel(e.functor(n)?),
        Command::HPullback(f, g) => hpullback(e.functor(f)?, e.functor(g)?),
        Command::Snail(n) => snail(e.functor(n)?),
        Command::Snake(n) => snake(e.functor(n)?),
        Command::Classify(n) => classification(e.functor(n)?),
        Command::Replace(n) => replace(e.functor(n)?),
        Command::Ladder(names) => ladder(e, names),
    }
}

/// Loading already validated every entity.
fn validate<C: Codec>(e: &Entities<C>) -> Outcome {
    let (g, f, t) = (e.groupoids.len(), e.functors.len(), e.transformations.len());
    Outcome::new(
        format!("{}: {g} groupoids, {f} functors, {t} transformations, all valid\n", C::TAG),
        json!({
            "category": C::TAG,
            "modulus": e.cat.modulus(),
            "groupoids": g,
            "functors": f,
            "transformations": t,
            "valid": true,
        }),
        true,
    )
}

fn invariants<C: Codec>(e: &Entities<C>, name: &str) -> CommandResult {
    let targets: Vec<(String, Groupoid<C>)> = match e.groupoid(name) {
        Ok(g) => vec![(name.to_string(), g.clone())],
        Err(_) => {
            let nf = e
                .functors
                .get(name)
                .ok_or_else(|| WorkspaceError::UnknownEntity(name.into()))?;
            vec![
                (nf.src.clone(), nf.functor.src.clone()),
                (nf.dst.clone(), nf.functor.dst.clone()),
            ]
        }
    };
    let mut text = String::new();
    let mut rows = Vec::new();
    for (n, g) in targets {
        let (p0, p1) = (pi0(&g)?, pi1(&g)?);
        let (s0, s1) = (e.cat.size(&p0.obj), e.cat.size(&p1.carrier));
        let group_ok = p1.validate(&e.cat).all_pass();
        text.push_str(&format!("{n}: π0 {s0}, π1 {s1}, group laws {}\n", mark(group_ok)));
        rows.push(json!({"groupoid": n, "pi0": s0, "pi1": s1, "pi1_group_laws": group_ok}));
    }
    let ok = rows.iter().all(|r| r["pi1_group_laws"] == true);
    Ok(Outcome::new(text, json!({ "invariants": rows }), ok))
}

fn hkernel<C: Codec>(f: &InternalFunctor<C>) -> CommandResult {
    let hk = strong_h_kernel(f)?;
    let (k0, k1) = levels(hk.k());
    let valid = hk.k().validate().all_pass();
    let leg = classify(hk.kf())?.discrete_fibration;
    let (p0, p1) = (pi0(hk.k())?, pi1(hk.k())?);
    let (s0, s1) = (f.cat().size(&p0.obj), f.cat().size(&p1.carrier));
    let text = format!(
        "h-kernel: level {} ({k0}, {k1}), valid {}, π0 {s0}, π1 {s1}, leg to the source is a discrete fibration {}\n",
        unit::<C>(),
        mark(valid),
        mark(leg)
    );
    Ok(Outcome::new(
        text,
        json!({"k0": k0, "k1": k1, "valid": valid, "pi0": s0, "pi1": s1, "leg_discrete_fibration": leg}),
        valid && leg,
    ))
}

fn hpullback<C: Codec>(f: &InternalFunctor<C>, g: &InternalFunctor<C>) -> CommandResult {
    let hpb = strong_h_pullback(f, g)?;
    let (p0, p1) = levels(&hpb.p);
    let valid = hpb.p.validate().all_pass();
    let legs = classify(&hpb.fp)?.split_epi_fibration && classify(&hpb.gp)?.split_epi_fibration;
    let cell = hpb.phi.validate().all_pass();
    let text = format!(
        "h-pullback: level {} ({p0}, {p1}), valid {}, 2-cell natural {}, legs split epi fibrations {}\n",
        unit::<C>(),
        mark(valid),
        mark(cell),
        mark(legs)
    );
    Ok(Outcome::new(
        text,
        json!({"p0": p0, "p1": p1, "valid": valid, "cell_natural": cell, "legs_split_epi_fibrations": legs}),
        valid && legs && cell,
    ))
}

fn sequence_json<C: Category>(cat: &C, seq: &SixTermSequence<C>, report: &SequenceReport<C>) -> Value {
    let nodes: Vec<Value> = INTERNAL_NODES
        .iter()
        .zip(&report.exactness)
        .map(|(n, e)| json!({"node": n, "exact": e.exact()}))
        .collect();
    json!({
        "terms": seq.sizes(cat),
        "complex": report.is_complex(),
        "exact_nodes": report.exact_nodes(),
        "exactness": nodes,
    })
}

fn sequence_text<C: Codec>(name: &str, cat: &C, seq: &SixTermSequence<C>, report: &SequenceReport<C>) -> String {
    let mut out = format!("{name} term {}: {}\n", unit::<C>(), list(&seq.sizes(cat)));
    out.push_str(&format!("composites zero {}\n", mark(report.is_complex())));
    for (n, e) in INTERNAL_NODES.iter().zip(&report.exactness) {
        out.push_str(&format!("  at {n}: {}\n", mark(e.exact())));
    }
    out.push_str(&format!("exact at {}/{} nodes\n", report.exact_nodes(), report.exactness.len()));
    out
}

fn snail<C: Codec>(f: &InternalFunctor<C>) -> CommandResult {
    let cat = f.cat();
    let s = snail_sequence(f)?;
    let report = s.seq.check(cat)?;
    let proper = [&f.src, &f.dst, s.hk.k()]
        .into_iter()
        .map(|g| is_proper(g))
        .collect::<grpd_core::Result<Vec<_>>>()?
        .into_iter()
        .all(|p| p);
    let mut text = sequence_text("snail", cat, &s.seq, &report);
    text.push_str(&format!("proper {}\n", mark(proper)));
    let mut summary = sequence_json(cat, &s.seq, &report);
    summary["proper"] = json!(proper);
    let ok = report.is_complex() && (!proper || report.is_exact());
    Ok(Outcome::new(text, summary, ok))
}

fn snake<C: Codec>(f: &InternalFunctor<C>) -> CommandResult {
    let cat = f.cat();
    let s = snake_sequence(f)?;
    let report = s.seq.check(cat)?;
    let isos = cat.is_iso(&s.pi1_j) && cat.is_iso(&s.pi0_j);
    let matches = s.matches_snail(cat)?;
    let mut text = sequence_text("snake", cat, &s.seq, &report);
    text.push_str(&format!(
        "π1(J), π0(J) isomorphisms {}, agrees with the snail {}\n",
        mark(isos),
        mark(matches)
    ));
    let mut summary = sequence_json(cat, &s.seq, &report);
    summary["pi_j_isomorphisms"] = json!(isos);
    summary["matches_snail"] = json!(matches);
    Ok(Outcome::new(text, summary, report.is_exact() && isos && matches))
}

fn classification<C: Codec>(f: &InternalFunctor<C>) -> CommandResult {
    let k = classify(f)?;
    let flags = [
        ("faithful", k.faithful),
        ("full", k.full),
        ("essentially-surjective", k.essentially_surjective),
        ("surjective", k.surjective),
        ("weak-equivalence", k.weak_equivalence),
        ("equivalence", k.equivalence),
        ("fibration", k.fibration),
        ("split-epi", k.split_epi_fibration),
        ("discrete", k.discrete_fibration),
    ];
    let mut text = String::new();
    for (n, on) in flags {
        text.push_str(&format!("{n:<24} {}\n", mark(on)));
    }
    for (flag, why) in &k.witnesses {
        text.push_str(&format!("  not {flag}: {why}\n"));
    }
    let agree = k.tau_d_flags() == k.tau_c_flags && k.essentially_surjective == k.essentially_surjective_c;
    text.push_str(&format!("d and c variants agree {}\n", mark(agree)));
    let mut summary = serde_json::Map::new();
    for (n, on) in flags {
        summary.insert(n.to_string(), json!(on));
    }
    summary.insert("d_c_agree".into(), json!(agree));
    Ok(Outcome::new(text, Value::Object(summary), agree))
}

fn replace<C: Codec>(f: &InternalFunctor<C>) -> CommandResult {
    let cat = f.cat();
    let r = fibration_replacement(f)?;
    let (l0, l1) = levels(r.ff());
    let split = classify(r.fprime())?.split_epi_fibration;
    let equivalence = classify(r.e())?.equivalence;
    let s = sigma_c_section(&r)?;
    let section = cat.compose(&s.sigma, &s.tau_c)? == cat.identity(&s.q.apex);
    let text = format!(
        "replacement: level {} ({l0}, {l1})\nF′ split epi fibration {}\nE equivalence {}\nσ_c·τ_c = id {}\n",
        unit::<C>(),
        mark(split),
        mark(equivalence),
        mark(section)
    );
    Ok(Outcome::new(
        text,
        json!({"level0": l0, "level1": l1, "split_epi_fibration": split, "equivalence": equivalence, "sigma_section": section}),
        split && equivalence && section,
    ))
}

fn ladder<C: Codec>(e: &Entities<C>, names: &[String]) -> CommandResult {
    let cat = &e.cat;
    let (sq, replacement) = match names {
        [one] => {
            let f = e.functor(one)?;
            let r = fibration_replacement(f)?;
            let sq = Square {
                fprime: r.fprime().clone(),
                f: f.clone(),
                e: r.e().clone(),
                t: InternalFunctor::identity(&f.dst),
                phi: r.cell().clone(),
            };
            (sq, true)
        }
        [fp, f, ee, t, phi] => (
            Square {
                fprime: e.functor(fp)?.clone(),
                f: e.functor(f)?.clone(),
                e: e.functor(ee)?.clone(),
                t: e.functor(t)?.clone(),
                phi: e.transformation(phi)?.clone(),
            },
            false,
        ),
        _ => return Err(CommandError::Usage("ladder takes one functor or five names F′ F E T φ".into())),
    };
    let l = naturality_ladder(&sq)?;
    let commutes = l.commutes();
    let isos = l.verticals_iso(cat);
    let mut text = format!(
        "top {}: {}\nbottom {}: {}\n",
        unit::<C>(),
        list(&l.top.seq.sizes(cat)),
        unit::<C>(),
        list(&l.bottom.seq.sizes(cat))
    );
    let squares: Vec<&str> = l.squares.iter().map(|&s| mark(s)).collect();
    text.push_str(&format!(
        "squares {}, connecting square {}{}\nverticals isomorphisms {}\n",
        squares.join(" "),
        mark(l.star.0),
        mark(l.star.1),
        mark(isos)
    ));
    let mut summary = json!({
        "top": l.top.seq.sizes(cat),
        "bottom": l.bottom.seq.sizes(cat),
        "squares": l.squares,
        "connecting": [l.star.0, l.star.1],
        "commutes": commutes,
        "verticals_iso": isos,
    });
    // the replacement square is the one whose verticals are known to be invertible
    let mut ok = commutes;
    if replacement {
        let ker = kernel_of_functor(&sq.fprime)?;
        let jl = ker.j.then(&l.l)?.is_isomorphism();
        text.push_str(&format!("J·L isomorphism {}\n", mark(jl)));
        summary["jl_iso"] = json!(jl);
        ok &= isos && jl;
    }
    Ok(Outcome::new(text, summary, ok))
}

/// Parameters of `check-theorems`.
#[derive(Clone, Debug)]
pub struct TheoremOptions {
    pub category: String,
    pub modulus: Option<u32>,
    pub trials: usize,
    pub seed: u64,
    pub max_objects: Option<usize>,
}

/// Trials per suite: the pointed and linear suites run `trials`; the
/// exhaustive searches run a tenth, the replacement and 2-exact suites a quarter.
pub fn check_theorems(opts: &TheoremOptions) -> CommandResult {
    let mut spec = GeneratorSpec::default();
    let mut small = replacement_spec();
    if let Some(k) = opts.max_objects {
        spec.max_objects = k;
        small.max_objects = k.min(small.max_objects);
    }
    let cfg = |trials: usize, spec: &GeneratorSpec| SuiteConfig {
        trials,
        seed: opts.seed,
        spec: spec.clone(),
    };
    let n = opts.trials;
    let reports: Vec<SuiteReport> = match opts.category.as_str() {
        "finptset" => vec![
            pointed_suite(&cfg(n, &spec)),
            replacement_suite(&cfg(n.div_ceil(4), &small)),
            universal_suite(&cfg(n.div_ceil(10), &spec), &UniversalBounds::default()),
            two_exact_suite(&cfg(n.div_ceil(4).max(10), &spec)),
        ],
        "fpvect" => vec![linear_suite(&cfg(n, &spec), opts.modulus, 4)],
        other => return Err(CommandError::Usage(format!("unknown category {other}"))),
    };
    let text: String = reports.iter().map(SuiteReport::summary).collect();
    let ok = reports.iter().all(SuiteReport::passed);
    let summary = json!({
        "category": opts.category,
        "seed": opts.seed,
        "passed": ok,
        "suites": reports,
    });
    Ok(Outcome::new(text, summary, ok))
}
