//! Strong homotopy pullbacks and kernels, kernels of functors, the comparison
//! functors `J` and `L`, and the fibration replacement with its section `σ_c`.
//!
//! For `F: A → B` and `G: C → B` the pullback groupoid `P` has objects
//! `(x, β, y)` in `C0 × B1 × A0` with `β: G(x) → F(y)`. An arrow is a pair of
//! arrows `γ` in `C1`, `α` in `A1` with a commutative square in `B`, stored
//! through its two composable paths: `X1 = (β, F(α))` along the top and right,
//! `X2 = (G(γ), β′)` along the left and bottom.

use std::sync::Arc;

use crate::arrow::ArrowGroupoid;
use crate::category::{Category, Cone, Equation};
use crate::error::{Error, Result};
use crate::groupoid::{same, Groupoid, InternalFunctor, InternalGroupoid, NatTransformation};

/// Leg indices of the arrow-level limit.
pub const P1_C: usize = 0;
pub const P1_X1: usize = 1;
pub const P1_X2: usize = 2;
pub const P1_A: usize = 3;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HPullback<C: Category> {
    /// `F: A → B`.
    pub f: InternalFunctor<C>,
    /// `G: C → B`.
    pub g: InternalFunctor<C>,
    pub p: Groupoid<C>,
    /// `F′: P → C`.
    pub fp: InternalFunctor<C>,
    /// `G′: P → A`.
    pub gp: InternalFunctor<C>,
    /// `φ: F′·G ⇒ G′·F`.
    pub phi: NatTransformation<C>,
    /// Objects: legs into `C0`, `B1`, `A0`.
    pub p0: Cone<C>,
    /// Arrows: legs into `C1`, composable pairs (twice), `A1`.
    pub p1: Cone<C>,
}

impl<C: Category> HPullback<C> {
    pub fn cat(&self) -> &C {
        &self.p.cat
    }

    /// `φ0: P0 → B1`.
    pub fn phi0(&self) -> &C::Mor {
        &self.p0.legs[1]
    }

    /// `φ1: P1 → B⃗1`, the square carried by each arrow.
    pub fn phi1(&self, arrows: &ArrowGroupoid<C>) -> Result<C::Mor> {
        arrows.square(&self.p1.legs[P1_X1], &self.p1.legs[P1_X2])
    }
}

pub fn strong_h_pullback<C: Category>(
    f: &InternalFunctor<C>,
    g: &InternalFunctor<C>,
) -> Result<HPullback<C>> {
    if !same(&f.dst, &g.dst) {
        return Err(Error::TargetMismatch);
    }
    let cat = f.cat().clone();
    let (a, b, c) = (&f.src, &f.dst, &g.src);

    let p0 = cat.limit(
        &[c.b0.clone(), b.b1.clone(), a.b0.clone()],
        &[
            Equation::new(0, g.f0.clone(), 1, b.d.clone()),
            Equation::new(1, b.c.clone(), 2, f.f0.clone()),
        ],
    )?;
    let comp = b.composable.apex.clone();
    let p1 = cat.limit(
        &[c.b1.clone(), comp.clone(), comp, a.b1.clone()],
        &[
            Equation::new(P1_X1, b.m.clone(), P1_X2, b.m.clone()),
            Equation::new(P1_C, g.f1.clone(), P1_X2, b.pi1().clone()),
            Equation::new(P1_X1, b.pi2().clone(), P1_A, f.f1.clone()),
        ],
    )?;
    let leg = |k: usize| &p1.legs[k];
    let o = |k: usize| &p0.legs[k];
    let phi0 = o(1);

    let d = p0.mediate(
        &cat,
        &[
            cat.compose(leg(P1_C), &c.d)?,
            cat.compose(leg(P1_X1), b.pi1())?,
            cat.compose(leg(P1_A), &a.d)?,
        ],
    )?;
    let cod = p0.mediate(
        &cat,
        &[
            cat.compose(leg(P1_C), &c.c)?,
            cat.compose(leg(P1_X2), b.pi2())?,
            cat.compose(leg(P1_A), &a.c)?,
        ],
    )?;
    let e = p1.mediate(
        &cat,
        &[
            cat.compose(o(0), &c.e)?,
            b.pair(phi0, &b.unit_at_codomain(phi0)?)?,
            b.pair(&b.unit_at_domain(phi0)?, phi0)?,
            cat.compose(o(2), &a.e)?,
        ],
    )?;

    let composable = cat.pullback(&cod, &d)?;
    let (s1, s2) = (&composable.legs[0], &composable.legs[1]);
    let at = |s: &C::Mor, k: usize| cat.compose(s, leg(k));
    let part = |s: &C::Mor, k: usize, pi: &C::Mor| cat.compose_all(&[s, leg(k), pi]);
    let m = p1.mediate(
        &cat,
        &[
            c.compose_arrows(&at(s1, P1_C)?, &at(s2, P1_C)?)?,
            b.pair(
                &part(s1, P1_X1, b.pi1())?,
                &b.compose_arrows(&part(s1, P1_X1, b.pi2())?, &part(s2, P1_X1, b.pi2())?)?,
            )?,
            b.pair(
                &b.compose_arrows(&part(s1, P1_X2, b.pi1())?, &part(s2, P1_X2, b.pi1())?)?,
                &part(s2, P1_X2, b.pi2())?,
            )?,
            a.compose_arrows(&at(s1, P1_A)?, &at(s2, P1_A)?)?,
        ],
    )?;
    let x1 = |pi: &C::Mor| cat.compose(leg(P1_X1), pi);
    let x2 = |pi: &C::Mor| cat.compose(leg(P1_X2), pi);
    let i = p1.mediate(
        &cat,
        &[
            cat.compose(leg(P1_C), &c.i)?,
            b.pair(&x2(b.pi2())?, &cat.compose(&x1(b.pi2())?, &b.i)?)?,
            b.pair(&cat.compose(&x2(b.pi1())?, &b.i)?, &x1(b.pi1())?)?,
            cat.compose(leg(P1_A), &a.i)?,
        ],
    )?;
    let p = Arc::new(InternalGroupoid {
        cat: cat.clone(),
        b0: p0.apex.clone(),
        b1: p1.apex.clone(),
        d,
        c: cod,
        e,
        m,
        i,
        composable,
    });
    let fp = InternalFunctor::new(p.clone(), c.clone(), o(0).clone(), leg(P1_C).clone())?;
    let gp = InternalFunctor::new(p.clone(), a.clone(), o(2).clone(), leg(P1_A).clone())?;
    let phi = NatTransformation::new(fp.then(g)?, gp.then(f)?, phi0.clone())?;
    Ok(HPullback {
        f: f.clone(),
        g: g.clone(),
        p,
        fp,
        gp,
        phi,
        p0,
        p1,
    })
}

/// The unique `T: X → P` with `T·G′ = H`, `T·F′ = K` and `T·φ = μ`, for
/// `μ: K·G ⇒ H·F`.
pub fn induce_functor<C: Category>(
    hpb: &HPullback<C>,
    h: &InternalFunctor<C>,
    k: &InternalFunctor<C>,
    mu: &NatTransformation<C>,
) -> Result<InternalFunctor<C>> {
    let cat = hpb.cat();
    let b = &hpb.f.dst;
    if !same(&h.dst, &hpb.f.src) || !same(&k.dst, &hpb.g.src) || !same(&h.src, &k.src) {
        return Err(Error::IncompatibleCell("cone legs do not match the cospan".into()));
    }
    if mu.src != k.then(&hpb.g)? || mu.dst != h.then(&hpb.f)? {
        return Err(Error::IncompatibleCell("2-cell is not K·G ⇒ H·F".into()));
    }
    let x = &h.src;
    let t0 = hpb.p0.mediate(cat, &[k.f0.clone(), mu.alpha.clone(), h.f0.clone()])?;
    let t1 = hpb.p1.mediate(
        cat,
        &[
            k.f1.clone(),
            b.pair(&cat.compose(&x.d, &mu.alpha)?, &cat.compose(&h.f1, &hpb.f.f1)?)?,
            b.pair(&cat.compose(&k.f1, &hpb.g.f1)?, &cat.compose(&x.c, &mu.alpha)?)?,
            h.f1.clone(),
        ],
    )?;
    InternalFunctor::new(x.clone(), hpb.p.clone(), t0, t1)
}

/// The unique `μ: L ⇒ M` with `μ·F′ = α` and `μ·G′ = β`.
pub fn induce_2cell<C: Category>(
    hpb: &HPullback<C>,
    l: &InternalFunctor<C>,
    m: &InternalFunctor<C>,
    alpha: &NatTransformation<C>,
    beta: &NatTransformation<C>,
) -> Result<NatTransformation<C>> {
    let cat = hpb.cat();
    let b = &hpb.f.dst;
    if !same(&l.dst, &hpb.p) || !same(&m.dst, &hpb.p) || !same(&l.src, &m.src) {
        return Err(Error::IncompatibleCell("functors do not land in the pullback".into()));
    }
    if alpha.src != l.then(&hpb.fp)? || alpha.dst != m.then(&hpb.fp)? {
        return Err(Error::IncompatibleCell("α is not L·F′ ⇒ M·F′".into()));
    }
    if beta.src != l.then(&hpb.gp)? || beta.dst != m.then(&hpb.gp)? {
        return Err(Error::IncompatibleCell("β is not L·G′ ⇒ M·G′".into()));
    }
    let l_phi = cat.compose(&l.f0, hpb.phi0())?;
    let m_phi = cat.compose(&m.f0, hpb.phi0())?;
    let top = b.pair(&l_phi, &cat.compose(&beta.alpha, &hpb.f.f1)?)?;
    let bottom = b.pair(&cat.compose(&alpha.alpha, &hpb.g.f1)?, &m_phi)?;
    let lhs = cat.compose(&bottom, &b.m)?;
    let rhs = cat.compose(&top, &b.m)?;
    if let Some(w) = cat.difference(&lhs, &rhs) {
        return Err(Error::IncompatibleSquare(w));
    }
    let mu = hpb
        .p1
        .mediate(cat, &[alpha.alpha.clone(), top, bottom, beta.alpha.clone()])?;
    NatTransformation::new(l.clone(), m.clone(), mu)
}

/// The strong h-kernel of `F`: the strong h-pullback against `0: [0]₀ → B`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HKernel<C: Category> {
    pub hpb: HPullback<C>,
}

impl<C: Category> HKernel<C> {
    /// `𝕂(F)`.
    pub fn k(&self) -> &Groupoid<C> {
        &self.hpb.p
    }

    /// `K(F): 𝕂(F) → A`.
    pub fn kf(&self) -> &InternalFunctor<C> {
        &self.hpb.gp
    }

    /// `k(F): 0 ⇒ K(F)·F`.
    pub fn kf_cell(&self) -> &NatTransformation<C> {
        &self.hpb.phi
    }

    pub fn underline_d(&self) -> &C::Mor {
        &self.hpb.p.d
    }

    pub fn underline_c(&self) -> &C::Mor {
        &self.hpb.p.c
    }

    pub fn functor(&self) -> &InternalFunctor<C> {
        &self.hpb.f
    }
}

pub fn strong_h_kernel<C: Category>(f: &InternalFunctor<C>) -> Result<HKernel<C>> {
    let zero = Arc::new(InternalGroupoid::zero(f.cat())?);
    let g = InternalFunctor::zero(&zero, &f.dst);
    Ok(HKernel {
        hpb: strong_h_pullback(f, &g)?,
    })
}

/// The factorization through `𝕂(F)` of a cone `(H, 0, μ)` with `μ: 0 ⇒ H·F`.
pub fn induce_into_kernel<C: Category>(
    hk: &HKernel<C>,
    h: &InternalFunctor<C>,
    mu_component: &C::Mor,
) -> Result<InternalFunctor<C>> {
    let zero_grp = &hk.hpb.g.src;
    let k = InternalFunctor::zero(&h.src, zero_grp);
    let mu = NatTransformation::new(k.then(&hk.hpb.g)?, h.then(&hk.hpb.f)?, mu_component.clone())?;
    induce_functor(&hk.hpb, h, &k, &mu)
}

/// The level-wise kernel of a functor with its comparison into the h-kernel.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KernelResult<C: Category> {
    pub ker: Groupoid<C>,
    /// `K_F: Ker(F) → A`.
    pub inclusion: InternalFunctor<C>,
    /// `J: Ker(F) → 𝕂(F)`.
    pub j: InternalFunctor<C>,
    pub hk: HKernel<C>,
}

pub fn kernel_of_functor<C: Category>(f: &InternalFunctor<C>) -> Result<KernelResult<C>> {
    kernel_with(f, strong_h_kernel(f)?)
}

pub fn kernel_with<C: Category>(f: &InternalFunctor<C>, hk: HKernel<C>) -> Result<KernelResult<C>> {
    let cat = f.cat();
    let a = &f.src;
    let k0 = cat.kernel(&f.f0)?.legs.remove(0);
    let k1 = cat.kernel(&f.f1)?.legs.remove(0);
    let restrict = |map: &C::Mor, from: &C::Mor, into: &C::Mor| -> Result<C::Mor> {
        cat.factor_through_mono(&cat.compose(from, map)?, into)
    };
    let d = restrict(&a.d, &k1, &k0)?;
    let c = restrict(&a.c, &k1, &k0)?;
    let e = restrict(&a.e, &k0, &k1)?;
    let i = restrict(&a.i, &k1, &k1)?;
    let composable = cat.pullback(&c, &d)?;
    let pair = a.pair(
        &cat.compose(&composable.legs[0], &k1)?,
        &cat.compose(&composable.legs[1], &k1)?,
    )?;
    let m = cat.factor_through_mono(&cat.compose(&pair, &a.m)?, &k1)?;
    let ker = Arc::new(InternalGroupoid {
        cat: cat.clone(),
        b0: cat.src(&k0),
        b1: cat.src(&k1),
        d,
        c,
        e,
        m,
        i,
        composable,
    });
    let inclusion = InternalFunctor::new(ker.clone(), a.clone(), k0, k1)?;
    let zero_component = cat.zero_mor(&ker.b0, &f.dst.b1);
    let j = induce_into_kernel(&hk, &inclusion, &zero_component)?;
    Ok(KernelResult {
        ker,
        inclusion,
        j,
        hk,
    })
}

/// `𝔽(F)` with `F′: 𝔽(F) → B`, `E: 𝔽(F) → A` and `f(F): F′ ⇒ E·F`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Replacement<C: Category> {
    pub hpb: HPullback<C>,
}

impl<C: Category> Replacement<C> {
    pub fn ff(&self) -> &Groupoid<C> {
        &self.hpb.p
    }

    /// `F′: 𝔽(F) → B`.
    pub fn fprime(&self) -> &InternalFunctor<C> {
        &self.hpb.fp
    }

    /// `E: 𝔽(F) → A`.
    pub fn e(&self) -> &InternalFunctor<C> {
        &self.hpb.gp
    }

    /// `f(F): F′·Id ⇒ E·F`.
    pub fn cell(&self) -> &NatTransformation<C> {
        &self.hpb.phi
    }
}

pub fn fibration_replacement<C: Category>(f: &InternalFunctor<C>) -> Result<Replacement<C>> {
    let id = InternalFunctor::identity(&f.dst);
    Ok(Replacement {
        hpb: strong_h_pullback(f, &id)?,
    })
}

/// The explicit section of `τ_c` for `F′: 𝔽(F) → B`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SigmaC<C: Category> {
    /// `𝔽(F)0 ×_{F′0, c} B1`, legs `α_c, β_c`.
    pub q: Cone<C>,
    pub tau_c: C::Mor,
    pub sigma: C::Mor,
}

pub fn sigma_c_section<C: Category>(r: &Replacement<C>) -> Result<SigmaC<C>> {
    let hpb = &r.hpb;
    let cat = hpb.cat();
    let ff = r.ff();
    let b = &hpb.f.dst;
    let a = &hpb.f.src;
    let fprime = r.fprime();
    let q = cat.pullback(&fprime.f0, &b.c)?;
    let (alpha_c, beta_c) = (&q.legs[0], &q.legs[1]);
    let tau_c = q.mediate(cat, &[ff.c.clone(), fprime.f1.clone()])?;
    let f0 = hpb.phi0();
    let x = b.pair(beta_c, &cat.compose(alpha_c, f0)?)?;
    let unit = cat.compose_all(&[alpha_c, &r.e().f0, &hpb.f.f0, &b.e])?;
    let y = b.pair(&cat.compose(&x, &b.m)?, &unit)?;
    let sigma = hpb.p1.mediate(
        cat,
        &[
            beta_c.clone(),
            y,
            x,
            cat.compose_all(&[alpha_c, &r.e().f0, &a.e])?,
        ],
    )?;
    Ok(SigmaC { q, tau_c, sigma })
}

/// `L: 𝕂(F′) → 𝕂(F)` induced by `E: A′ → A`, `T: B′ → B` and `φ: F′·T ⇒ E·F`.
pub fn comparison_l<C: Category>(
    hk_fprime: &HKernel<C>,
    hk_f: &HKernel<C>,
    e: &InternalFunctor<C>,
    t: &InternalFunctor<C>,
    phi: &NatTransformation<C>,
) -> Result<InternalFunctor<C>> {
    let fprime = hk_fprime.functor();
    let f = hk_f.functor();
    if phi.src != fprime.then(t)? || phi.dst != e.then(f)? {
        return Err(Error::IncompatibleCell("2-cell is not F′·T ⇒ E·F".into()));
    }
    let cat = f.cat();
    let b = &f.dst;
    let h = hk_fprime.kf().then(e)?;
    let mu = b.compose_arrows(
        &cat.compose(&hk_fprime.kf_cell().alpha, &t.f1)?,
        &cat.compose(&hk_fprime.kf().f0, &phi.alpha)?,
    )?;
    induce_into_kernel(hk_f, &h, &mu)
}

/// The level-wise pullback of `F: A → C` and `H: D → C`, with its two projections.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StrictPullback<C: Category> {
    pub q: Groupoid<C>,
    /// `Q → A`.
    pub left: InternalFunctor<C>,
    /// `Q → D`.
    pub right: InternalFunctor<C>,
}

pub fn strict_pullback<C: Category>(f: &InternalFunctor<C>, h: &InternalFunctor<C>) -> Result<StrictPullback<C>> {
    if !same(&f.dst, &h.dst) {
        return Err(Error::TargetMismatch);
    }
    let cat = f.cat();
    let (a, d) = (&f.src, &h.src);
    let q0 = cat.pullback(&f.f0, &h.f0)?;
    let q1 = cat.pullback(&f.f1, &h.f1)?;
    let both = |cone: &Cone<C>, from: &[&C::Mor; 2], ga: &C::Mor, gd: &C::Mor| {
        cone.mediate(cat, &[cat.compose(from[0], ga)?, cat.compose(from[1], gd)?])
    };
    let l1 = [&q1.legs[0], &q1.legs[1]];
    let l0 = [&q0.legs[0], &q0.legs[1]];
    let dom = both(&q0, &l1, &a.d, &d.d)?;
    let cod = both(&q0, &l1, &a.c, &d.c)?;
    let e = both(&q1, &l0, &a.e, &d.e)?;
    let i = both(&q1, &l1, &a.i, &d.i)?;
    let composable = cat.pullback(&cod, &dom)?;
    let (s1, s2) = (&composable.legs[0], &composable.legs[1]);
    let multiply = |g: &InternalGroupoid<C>, leg: &C::Mor| {
        g.compose_arrows(&cat.compose(s1, leg)?, &cat.compose(s2, leg)?)
    };
    let m = q1.mediate(cat, &[multiply(a, &q1.legs[0])?, multiply(d, &q1.legs[1])?])?;
    let q = Arc::new(InternalGroupoid {
        cat: cat.clone(),
        b0: q0.apex.clone(),
        b1: q1.apex.clone(),
        d: dom,
        c: cod,
        e,
        m,
        i,
        composable,
    });
    let left = InternalFunctor::new(q.clone(), a.clone(), q0.legs[0].clone(), q1.legs[0].clone())?;
    let right = InternalFunctor::new(q.clone(), d.clone(), q0.legs[1].clone(), q1.legs[1].clone())?;
    Ok(StrictPullback { q, left, right })
}

/// Pastes the level-wise pullback of `F′` along `H: D → C` onto the strong
/// h-pullback of `(F, G)` and compares it with the strong h-pullback of
/// `(F, H·G)`. The composite is again a strong h-pullback exactly when the
/// comparison is an isomorphism.
pub fn pasting_comparison<C: Category>(
    hpb: &HPullback<C>,
    h: &InternalFunctor<C>,
) -> Result<(StrictPullback<C>, InternalFunctor<C>)> {
    let sp = strict_pullback(&hpb.fp, h)?;
    let total = strong_h_pullback(&hpb.f, &h.then(&hpb.g)?)?;
    let to_a = sp.left.then(&hpb.gp)?;
    let mu = NatTransformation::whisker_left(&sp.left, &hpb.phi)?;
    let mu = NatTransformation::new(sp.right.then(&total.g)?, to_a.then(&hpb.f)?, mu.alpha)?;
    let comparison = induce_functor(&total, &to_a, &sp.right, &mu)?;
    Ok((sp, comparison))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arrow::arrow_groupoid;
    use crate::finptset::{FinPtSet, PtSet};
    use crate::fixtures::{z2_to_z4, z4, z4_mod2};

    fn id_z4() -> InternalFunctor<FinPtSet> {
        InternalFunctor::identity(&Arc::new(z4()))
    }

    #[test]
    fn doubling_pullback_sizes() {
        let f = z2_to_z4();
        let hpb = strong_h_pullback(&f, &f).unwrap();
        assert_eq!(hpb.p.b0, PtSet(4));
        assert_eq!(hpb.p.b1, PtSet(16));
        assert!(hpb.p.validate().all_pass());
        assert!(hpb.fp.validate().all_pass());
        assert!(hpb.gp.validate().all_pass());
        assert!(hpb.phi.validate().all_pass());
    }

    #[test]
    fn identity_pullback_is_the_arrow_groupoid() {
        let f = id_z4();
        let hpb = strong_h_pullback(&f, &f).unwrap();
        assert_eq!(hpb.p.b0, PtSet(4));
        let ag = arrow_groupoid(&f.dst).unwrap();
        assert_eq!(hpb.p.b1, ag.vec.b1);
        let phi1 = hpb.phi1(&ag).unwrap();
        assert!(hpb.cat().is_iso(&phi1));
    }

    #[test]
    fn own_cone_induces_identity() {
        let f = z2_to_z4();
        let hpb = strong_h_pullback(&f, &z4_mod2()).unwrap_err();
        assert_eq!(hpb, Error::TargetMismatch);
        let hpb = strong_h_pullback(&f, &id_z4()).unwrap();
        let t = induce_functor(&hpb, &hpb.gp, &hpb.fp, &hpb.phi).unwrap();
        assert_eq!(t, InternalFunctor::identity(&hpb.p));
        let unit_f = NatTransformation::identity(&hpb.fp);
        let unit_g = NatTransformation::identity(&hpb.gp);
        let id = InternalFunctor::identity(&hpb.p);
        let mu = induce_2cell(&hpb, &id, &id, &unit_f, &unit_g).unwrap();
        assert_eq!(mu, NatTransformation::identity(&id));
    }

    #[test]
    fn kernel_sizes_of_doubling() {
        let hk = strong_h_kernel(&z2_to_z4()).unwrap();
        assert_eq!(hk.k().b0, PtSet(4));
        assert_eq!(hk.k().b1, PtSet(8));
        assert!(hk.k().validate().all_pass());
        let id = strong_h_kernel(&id_z4()).unwrap();
        assert_eq!(id.k().b0, PtSet(4));
    }

    #[test]
    fn level_wise_kernels() {
        let cat = FinPtSet::new();
        let kr = kernel_of_functor(&z4_mod2()).unwrap();
        assert_eq!(kr.inclusion.f1.table(), &[0, 2]);
        assert_eq!(kr.ker.b0, PtSet(1));
        assert!(kr.ker.validate().all_pass());
        assert!(kr.j.validate().all_pass());
        assert_eq!(kr.j.then(kr.hk.kf()).unwrap(), kr.inclusion);
        let zero = cat.zero_mor(&kr.ker.b0, &kr.hk.functor().dst.b1);
        assert_eq!(cat.compose(&kr.j.f0, &kr.hk.kf_cell().alpha).unwrap(), zero);
        let kid = kernel_of_functor(&id_z4()).unwrap();
        assert_eq!(kid.ker.b1, PtSet(1));
    }

    #[test]
    fn replacement_of_doubling() {
        let r = fibration_replacement(&z2_to_z4()).unwrap();
        assert_eq!(r.ff().b0, PtSet(4));
        assert!(r.ff().validate().all_pass());
        let s = sigma_c_section(&r).unwrap();
        let cat = r.hpb.cat();
        assert_eq!(
            cat.compose(&s.sigma, &s.tau_c).unwrap(),
            cat.identity(&s.q.apex)
        );
        assert_eq!(cat.compose(&s.sigma, &r.ff().c).unwrap(), s.q.legs[0]);
        let other = cat.find_section(&s.tau_c).unwrap();
        assert_eq!(
            cat.compose(&other, &s.tau_c).unwrap(),
            cat.identity(&s.q.apex)
        );
    }

    #[test]
    fn identity_square_gives_identity_l() {
        let f = z2_to_z4();
        let hk = strong_h_kernel(&f).unwrap();
        let ia = InternalFunctor::identity(&f.src);
        let ib = InternalFunctor::identity(&f.dst);
        let phi = NatTransformation::identity(&f);
        let l = comparison_l(&hk, &hk, &ia, &ib, &phi).unwrap();
        assert_eq!(l, InternalFunctor::identity(hk.k()));
    }

    /// A point plus a separate object carrying a `ℤ/2` of loops.
    fn point_and_loop() -> InternalGroupoid<FinPtSet> {
        let mul = |a: usize, b: usize| match (a, b) {
            (0, 0) => 0,
            (x, y) => 1 + ((x - 1) + (y - 1)) % 2,
        };
        InternalGroupoid::from_tables(&FinPtSet::new(), 2, &[0, 1, 1], &[0, 1, 1], &[0, 1], mul, None)
            .unwrap()
    }

    #[test]
    fn pasting_a_pullback_gives_an_h_pullback() {
        let f = z2_to_z4();
        let hpb = strong_h_pullback(&f, &f).unwrap();
        for h in [InternalFunctor::identity(&f.src), InternalFunctor::zero(&f.src, &f.src), point_into(&f)] {
            let (sp, comparison) = pasting_comparison(&hpb, &h).unwrap();
            assert!(sp.q.validate().all_pass());
            assert!(comparison.validate().all_pass());
            assert!(comparison.is_isomorphism());
        }
    }

    fn point_into(f: &InternalFunctor<FinPtSet>) -> InternalFunctor<FinPtSet> {
        let point = Arc::new(InternalGroupoid::zero(f.cat()).unwrap());
        InternalFunctor::zero(&point, &f.src)
    }

    #[test]
    fn incompatible_square_is_rejected() {
        let cat = FinPtSet::new();
        let b = Arc::new(point_and_loop());
        assert!(b.validate().all_pass());
        let id = InternalFunctor::identity(&b);
        let hpb = strong_h_pullback(&id, &id).unwrap();
        let id_p = InternalFunctor::identity(&hpb.p);
        let unit_f = NatTransformation::identity(&hpb.fp);
        let unit_g = NatTransformation::identity(&hpb.gp);
        // the loop at the second object is a natural automorphism of G′
        let loops: Vec<usize> = (0..hpb.p.b0.0)
            .map(|x| if hpb.gp.f0.at(x) == 1 { 2 } else { 0 })
            .collect();
        let twist = NatTransformation::new_validated(
            hpb.gp.clone(),
            hpb.gp.clone(),
            cat.map(3, &loops).unwrap(),
        )
        .unwrap();
        assert!(matches!(
            induce_2cell(&hpb, &id_p, &id_p, &unit_f, &twist),
            Err(Error::IncompatibleSquare(_))
        ));
        assert!(matches!(
            induce_2cell(&hpb, &id_p, &id_p, &unit_g, &unit_g),
            Err(Error::IncompatibleCell(_))
        ));
        // twisting both sides is compatible
        let twist_f = NatTransformation::new_validated(
            hpb.fp.clone(),
            hpb.fp.clone(),
            cat.map(3, &(0..hpb.p.b0.0).map(|x| if hpb.fp.f0.at(x) == 1 { 2 } else { 0 }).collect::<Vec<_>>()).unwrap(),
        )
        .unwrap();
        let mu = induce_2cell(&hpb, &id_p, &id_p, &twist_f, &twist).unwrap();
        assert!(mu.validate().all_pass());
    }
}
