//! Exactness, properness, the connecting morphism and the six-term sequences,
//! the naturality ladder, and 2-exactness.

use crate::category::Category;
use crate::classify::classify;
use crate::error::{Error, Result};
use crate::groupoid::{InternalFunctor, InternalGroupoid, NatTransformation};
use crate::hlimits::{comparison_l, induce_into_kernel, kernel_of_functor, strong_h_kernel, HKernel, KernelResult};
use crate::invariants::{pi0, pi0_map_with, pi1, pi1_map_with, Pi0, Pi1};

/// The verdict at `B` for `A --f--> B --g--> C`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactnessEntry<C: Category> {
    pub composite_zero: bool,
    /// `f` factored through `Ker(g)`, when `f·g = 0`.
    pub factorization: Option<C::Mor>,
    pub regular_epi: bool,
}

impl<C: Category> ExactnessEntry<C> {
    pub fn exact(&self) -> bool {
        self.composite_zero && self.regular_epi
    }
}

pub fn is_exact_at<C: Category>(cat: &C, f: &C::Mor, g: &C::Mor) -> Result<ExactnessEntry<C>> {
    let fg = cat.compose(f, g)?;
    if !cat.is_zero(&fg) {
        return Ok(ExactnessEntry {
            composite_zero: false,
            factorization: None,
            regular_epi: false,
        });
    }
    let k = cat.kernel(g)?;
    let u = cat.factor_through_mono(f, &k.legs[0])?;
    Ok(ExactnessEntry {
        composite_zero: true,
        regular_epi: cat.is_regular_epi(&u),
        factorization: Some(u),
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Properness<C: Category> {
    /// `⟨d, c⟩` into the kernel pair of `η`.
    pub factorization: C::Mor,
    pub proper: bool,
}

pub fn properness<C: Category>(b: &InternalGroupoid<C>) -> Result<Properness<C>> {
    let cat = &b.cat;
    let eta = pi0(b)?.eta;
    let kp = cat.kernel_pair(&eta)?;
    let factorization = kp.mediate(cat, &[b.d.clone(), b.c.clone()])?;
    Ok(Properness {
        proper: cat.is_regular_epi(&factorization),
        factorization,
    })
}

pub fn is_proper<C: Category>(b: &InternalGroupoid<C>) -> Result<bool> {
    Ok(properness(b)?.proper)
}

/// `Δ: π1(B) → 𝕂(F)0` with `Δ·k(F)0 = ε_B` and `Δ·K(F)0 = 0`.
pub fn connecting_delta<C: Category>(hk: &HKernel<C>, pi1_b: &Pi1<C>) -> Result<C::Mor> {
    let cat = hk.hpb.cat();
    let zero_grp = &hk.hpb.g.src;
    let a = &hk.functor().src;
    hk.hpb.p0.mediate(
        cat,
        &[
            cat.zero_mor(&pi1_b.carrier, &zero_grp.b0),
            pi1_b.eps.clone(),
            cat.zero_mor(&pi1_b.carrier, &a.b0),
        ],
    )
}

/// `D = Δ·η_{𝕂(F)}`.
pub fn connecting_d<C: Category>(hk: &HKernel<C>) -> Result<C::Mor> {
    let cat = hk.hpb.cat();
    let delta = connecting_delta(hk, &pi1(&hk.functor().dst)?)?;
    cat.compose(&delta, &pi0(hk.k())?.eta)
}

/// `π1(K) → π1(A) → π1(B) → π0(K) → π0(A) → π0(B)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SixTermSequence<C: Category> {
    pub objects: Vec<C::Obj>,
    pub maps: Vec<C::Mor>,
    pub pi1s: [Pi1<C>; 3],
    pub pi0s: [Pi0<C>; 3],
    /// `Δ`; for the snake sequence, the one of the h-kernel.
    pub delta: C::Mor,
    pub d: C::Mor,
}

/// The names of the four internal nodes.
pub const INTERNAL_NODES: [&str; 4] = ["π1(A)", "π1(B)", "π0(K)", "π0(A)"];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SequenceReport<C: Category> {
    pub composites_zero: Vec<bool>,
    pub exactness: Vec<ExactnessEntry<C>>,
}

impl<C: Category> SequenceReport<C> {
    pub fn is_complex(&self) -> bool {
        self.composites_zero.iter().all(|&z| z)
    }

    pub fn exact_nodes(&self) -> usize {
        self.exactness.iter().filter(|e| e.exact()).count()
    }

    pub fn is_exact(&self) -> bool {
        self.exact_nodes() == self.exactness.len()
    }
}

impl<C: Category> SixTermSequence<C> {
    pub fn sizes(&self, cat: &C) -> Vec<usize> {
        self.objects.iter().map(|o| cat.size(o)).collect()
    }

    pub fn check(&self, cat: &C) -> Result<SequenceReport<C>> {
        let mut composites_zero = Vec::with_capacity(4);
        let mut exactness = Vec::with_capacity(4);
        for w in self.maps.windows(2) {
            composites_zero.push(cat.is_zero(&cat.compose(&w[0], &w[1])?));
            exactness.push(is_exact_at(cat, &w[0], &w[1])?);
        }
        Ok(SequenceReport {
            composites_zero,
            exactness,
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Snail<C: Category> {
    pub hk: HKernel<C>,
    pub seq: SixTermSequence<C>,
}

pub fn snail_sequence<C: Category>(f: &InternalFunctor<C>) -> Result<Snail<C>> {
    snail_with(strong_h_kernel(f)?)
}

pub fn snail_with<C: Category>(hk: HKernel<C>) -> Result<Snail<C>> {
    let f = hk.functor().clone();
    let cat = f.cat();
    let kf = hk.kf();
    let (p1k, p1a, p1b) = (pi1(hk.k())?, pi1(&f.src)?, pi1(&f.dst)?);
    let (p0k, p0a, p0b) = (pi0(hk.k())?, pi0(&f.src)?, pi0(&f.dst)?);
    let delta = connecting_delta(&hk, &p1b)?;
    let d = cat.compose(&delta, &p0k.eta)?;
    let maps = vec![
        pi1_map_with(kf, &p1k, &p1a)?,
        pi1_map_with(&f, &p1a, &p1b)?,
        d.clone(),
        pi0_map_with(kf, &p0k, &p0a)?,
        pi0_map_with(&f, &p0a, &p0b)?,
    ];
    let objects = vec![
        p1k.carrier.clone(),
        p1a.carrier.clone(),
        p1b.carrier.clone(),
        p0k.obj.clone(),
        p0a.obj.clone(),
        p0b.obj.clone(),
    ];
    Ok(Snail {
        hk,
        seq: SixTermSequence {
            objects,
            maps,
            pi1s: [p1k, p1a, p1b],
            pi0s: [p0k, p0a, p0b],
            delta,
            d,
        },
    })
}

/// `Δ` is a kernel of `K(F)0`: it factors through the kernel inclusion by an iso.
pub fn delta_is_kernel<C: Category>(hk: &HKernel<C>, delta: &C::Mor) -> Result<bool> {
    let cat = hk.hpb.cat();
    let k = cat.kernel(&hk.kf().f0)?;
    let killed = cat.is_zero(&cat.compose(delta, &hk.kf().f0)?);
    let u = match cat.factor_through_mono(delta, &k.legs[0]) {
        Ok(u) => u,
        Err(_) => return Ok(false),
    };
    Ok(killed && cat.is_mono(delta) && cat.is_iso(&u))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Snake<C: Category> {
    pub kernel: KernelResult<C>,
    pub seq: SixTermSequence<C>,
    /// `π1(J)` and `π0(J)`.
    pub pi1_j: C::Mor,
    pub pi0_j: C::Mor,
    pub snail: Snail<C>,
}

/// The six-term sequence on the level-wise kernel, for a fibration.
pub fn snake_sequence<C: Category>(f: &InternalFunctor<C>) -> Result<Snake<C>> {
    if !classify(f)?.fibration {
        return Err(Error::NotAFibration);
    }
    let kernel = kernel_of_functor(f)?;
    let snail = snail_with(kernel.hk.clone())?;
    let cat = f.cat();
    let (p1ker, p0ker) = (pi1(&kernel.ker)?, pi0(&kernel.ker)?);
    let [p1k, p1a, p1b] = snail.seq.pi1s.clone();
    let [p0k, p0a, p0b] = snail.seq.pi0s.clone();
    let pi1_j = pi1_map_with(&kernel.j, &p1ker, &p1k)?;
    let pi0_j = pi0_map_with(&kernel.j, &p0ker, &p0k)?;
    let pi0_j_inv = cat.factor_through_mono(&cat.identity(&p0k.obj), &pi0_j)?;
    let d = cat.compose(&snail.seq.d, &pi0_j_inv)?;
    let maps = vec![
        pi1_map_with(&kernel.inclusion, &p1ker, &p1a)?,
        snail.seq.maps[1].clone(),
        d.clone(),
        pi0_map_with(&kernel.inclusion, &p0ker, &p0a)?,
        snail.seq.maps[4].clone(),
    ];
    let objects = vec![
        p1ker.carrier.clone(),
        p1a.carrier.clone(),
        p1b.carrier.clone(),
        p0ker.obj.clone(),
        p0a.obj.clone(),
        p0b.obj.clone(),
    ];
    let seq = SixTermSequence {
        objects,
        maps,
        pi1s: [p1ker, p1a, p1b],
        pi0s: [p0ker, p0a, p0b],
        delta: snail.seq.delta.clone(),
        d,
    };
    Ok(Snake {
        kernel,
        seq,
        pi1_j,
        pi0_j,
        snail,
    })
}

impl<C: Category> Snake<C> {
    /// The term-wise comparison with the snail sequence commutes and is invertible.
    pub fn matches_snail(&self, cat: &C) -> Result<bool> {
        let s = &self.snail.seq;
        let t = &self.seq;
        let isos = cat.is_iso(&self.pi1_j) && cat.is_iso(&self.pi0_j);
        let left = cat.compose(&self.pi1_j, &s.maps[0])? == t.maps[0];
        let connecting = cat.compose(&t.d, &self.pi0_j)? == s.d;
        let right = cat.compose(&self.pi0_j, &s.maps[3])? == t.maps[3];
        Ok(isos && left && connecting && right)
    }
}

/// A square `F′: A′ → B′`, `F: A → B`, `E: A′ → A`, `T: B′ → B` with `φ: F′·T ⇒ E·F`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Square<C: Category> {
    pub fprime: InternalFunctor<C>,
    pub f: InternalFunctor<C>,
    pub e: InternalFunctor<C>,
    pub t: InternalFunctor<C>,
    pub phi: NatTransformation<C>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ladder<C: Category> {
    pub l: InternalFunctor<C>,
    pub top: Snail<C>,
    pub bottom: Snail<C>,
    /// `π1(L), π1(E), π1(T), π0(L), π0(E), π0(T)`.
    pub verticals: Vec<C::Mor>,
    /// One verdict per square, left to right.
    pub squares: Vec<bool>,
    /// The two halves of the connecting square: `Δ′·L0 = π1(T)·Δ` and
    /// `η′·π0(L) = L0·η`.
    pub star: (bool, bool),
}

impl<C: Category> Ladder<C> {
    pub fn commutes(&self) -> bool {
        self.squares.iter().all(|&s| s) && self.star.0 && self.star.1
    }

    pub fn verticals_iso(&self, cat: &C) -> bool {
        self.verticals.iter().all(|v| cat.is_iso(v))
    }
}

pub fn naturality_ladder<C: Category>(sq: &Square<C>) -> Result<Ladder<C>> {
    let cat = sq.f.cat();
    let top = snail_sequence(&sq.fprime)?;
    let bottom = snail_sequence(&sq.f)?;
    let l = comparison_l(&top.hk, &bottom.hk, &sq.e, &sq.t, &sq.phi)?;
    let (ts, bs) = (&top.seq, &bottom.seq);
    let verticals = vec![
        pi1_map_with(&l, &ts.pi1s[0], &bs.pi1s[0])?,
        pi1_map_with(&sq.e, &ts.pi1s[1], &bs.pi1s[1])?,
        pi1_map_with(&sq.t, &ts.pi1s[2], &bs.pi1s[2])?,
        pi0_map_with(&l, &ts.pi0s[0], &bs.pi0s[0])?,
        pi0_map_with(&sq.e, &ts.pi0s[1], &bs.pi0s[1])?,
        pi0_map_with(&sq.t, &ts.pi0s[2], &bs.pi0s[2])?,
    ];
    let mut squares = Vec::with_capacity(5);
    for k in 0..5 {
        let across_then_down = cat.compose(&ts.maps[k], &verticals[k + 1])?;
        let down_then_across = cat.compose(&verticals[k], &bs.maps[k])?;
        squares.push(across_then_down == down_then_across);
    }
    let star1 = cat.compose(&ts.delta, &l.f0)? == cat.compose(&verticals[2], &bs.delta)?;
    let star2 = cat.compose(&ts.pi0s[0].eta, &verticals[3])? == cat.compose(&l.f0, &bs.pi0s[0].eta)?;
    Ok(Ladder {
        l,
        top,
        bottom,
        verticals,
        squares,
        star: (star1, star2),
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwoExactness<C: Category> {
    pub hk: HKernel<C>,
    /// The comparison `A → 𝕂(G)`.
    pub comparison: InternalFunctor<C>,
    pub full: bool,
    pub essentially_surjective: bool,
}

impl<C: Category> TwoExactness<C> {
    pub fn exact(&self) -> bool {
        self.full && self.essentially_surjective
    }
}

/// Builds the comparison of `A --F--> B --G--> C` with `φ: F·G ⇒ 0` into `𝕂(G)`.
pub fn two_exactness<C: Category>(
    f: &InternalFunctor<C>,
    phi: &NatTransformation<C>,
    g: &InternalFunctor<C>,
) -> Result<TwoExactness<C>> {
    let fg = f.then(g)?;
    if phi.src != fg || phi.dst != InternalFunctor::zero(&f.src, &g.dst) {
        return Err(Error::IncompatibleCell("2-cell is not F·G ⇒ 0".into()));
    }
    let hk = strong_h_kernel(g)?;
    let mu = phi.inverse()?;
    let comparison = induce_into_kernel(&hk, f, &mu.alpha)?;
    let k = classify(&comparison)?;
    Ok(TwoExactness {
        hk,
        comparison,
        full: k.full,
        essentially_surjective: k.essentially_surjective,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PiExactness<C: Category> {
    pub two: TwoExactness<C>,
    /// `π1(𝕂(G)) → Ker(π1(G))`.
    pub g1: C::Mor,
    /// `π0(𝕂(G)) → Ker(π0(G))`.
    pub g0: C::Mor,
    pub g1_iso: bool,
    pub g0_regular_epi: bool,
    pub target_proper: bool,
    pub pi1_row: ExactnessEntry<C>,
    pub pi0_row: ExactnessEntry<C>,
}

impl<C: Category> PiExactness<C> {
    /// Every asserted property: `g1` iso and the `π1` row exact always; `g0`
    /// regular epi and the `π0` row exact when the target is proper.
    pub fn holds(&self) -> bool {
        self.g1_iso
            && self.pi1_row.exact()
            && (!self.target_proper || (self.g0_regular_epi && self.pi0_row.exact()))
    }
}

pub fn pi_preserves_exactness<C: Category>(
    f: &InternalFunctor<C>,
    phi: &NatTransformation<C>,
    g: &InternalFunctor<C>,
) -> Result<PiExactness<C>> {
    let two = two_exactness(f, phi, g)?;
    if !two.exact() {
        return Err(Error::NotTwoExact);
    }
    let cat = f.cat();
    let (a, b, c) = (&f.src, &f.dst, &g.dst);
    let (p1a, p1b, p1c, p1k) = (pi1(a)?, pi1(b)?, pi1(c)?, pi1(two.hk.k())?);
    let (p0a, p0b, p0c, p0k) = (pi0(a)?, pi0(b)?, pi0(c)?, pi0(two.hk.k())?);
    let pi1_g = pi1_map_with(g, &p1b, &p1c)?;
    let pi0_g = pi0_map_with(g, &p0b, &p0c)?;
    let ker1 = cat.kernel(&pi1_g)?;
    let ker0 = cat.kernel(&pi0_g)?;
    let g1 = cat.factor_through_mono(&pi1_map_with(two.hk.kf(), &p1k, &p1b)?, &ker1.legs[0])?;
    let g0 = cat.factor_through_mono(&pi0_map_with(two.hk.kf(), &p0k, &p0b)?, &ker0.legs[0])?;
    let pi1_row = is_exact_at(cat, &pi1_map_with(f, &p1a, &p1b)?, &pi1_g)?;
    let pi0_row = is_exact_at(cat, &pi0_map_with(f, &p0a, &p0b)?, &pi0_g)?;
    Ok(PiExactness {
        g1_iso: cat.is_iso(&g1),
        g0_regular_epi: cat.is_regular_epi(&g0),
        target_proper: is_proper(c)?,
        g1,
        g0,
        pi1_row,
        pi0_row,
        two,
    })
}
