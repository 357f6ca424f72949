//! Faithful, full and (essentially) surjective functors, the three kinds of
//! fibration, and the normalization `K_d(F)`.

use crate::category::{Category, Cone, Equation};
use crate::error::Result;
use crate::groupoid::InternalFunctor;

/// `∂(F)0: A1 → A0 ×_{F0,d} B1 ×_{c,F0} A0` together with its target cone.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartialF0<C: Category> {
    pub triples: Cone<C>,
    pub map: C::Mor,
}

pub fn partial_f0<C: Category>(f: &InternalFunctor<C>) -> Result<PartialF0<C>> {
    let cat = f.cat();
    let (a, b) = (&f.src, &f.dst);
    let triples = cat.limit(
        &[a.b0.clone(), b.b1.clone(), a.b0.clone()],
        &[
            Equation::new(0, f.f0.clone(), 1, b.d.clone()),
            Equation::new(1, b.c.clone(), 2, f.f0.clone()),
        ],
    )?;
    let map = triples.mediate(cat, &[a.d.clone(), f.f1.clone(), a.c.clone()])?;
    Ok(PartialF0 { triples, map })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FunctorClassification<C: Category> {
    pub faithful: bool,
    pub full: bool,
    pub essentially_surjective: bool,
    /// The same test on `A0 ×_{F0,c} B1` with `β_c·d`.
    pub essentially_surjective_c: bool,
    pub surjective: bool,
    pub weak_equivalence: bool,
    pub equivalence: bool,
    pub fibration: bool,
    pub split_epi_fibration: bool,
    pub discrete_fibration: bool,
    /// The verdicts `(regular epi, split epi, iso)` of `τ_c`.
    pub tau_c_flags: (bool, bool, bool),
    pub partial: PartialF0<C>,
    /// `A0 ×_{F0,d} B1`, legs `α_d, β_d`.
    pub d_fibre: Cone<C>,
    /// `A0 ×_{F0,c} B1`, legs `α_c, β_c`.
    pub c_fibre: Cone<C>,
    pub tau_d: C::Mor,
    pub tau_c: C::Mor,
    pub tau_d_section: Option<C::Mor>,
    pub kd: C::Mor,
    /// Element-level reasons for each false flag.
    pub witnesses: Vec<(&'static str, String)>,
}

pub fn classify<C: Category>(f: &InternalFunctor<C>) -> Result<FunctorClassification<C>> {
    let cat = f.cat();
    let (a, b) = (&f.src, &f.dst);
    let partial = partial_f0(f)?;
    let d_fibre = cat.pullback(&f.f0, &b.d)?;
    let c_fibre = cat.pullback(&f.f0, &b.c)?;
    let reach_d = cat.compose(&d_fibre.legs[1], &b.c)?;
    let reach_c = cat.compose(&c_fibre.legs[1], &b.d)?;
    let tau_d = d_fibre.mediate(cat, &[a.d.clone(), f.f1.clone()])?;
    let tau_c = c_fibre.mediate(cat, &[a.c.clone(), f.f1.clone()])?;
    let tau_d_section = cat.find_section(&tau_d);
    let kd = normalization(f)?.kd;

    let mut witnesses = Vec::new();
    let mut flag = |name: &'static str, holds: bool, why: Option<String>| {
        if !holds {
            witnesses.push((name, why.unwrap_or_default()));
        }
        holds
    };
    let faithful = flag("faithful", cat.is_mono(&partial.map), cat.mono_witness(&partial.map));
    let full = flag("full", cat.is_regular_epi(&partial.map), cat.epi_witness(&partial.map));
    let essentially_surjective = flag(
        "essentially surjective",
        cat.is_regular_epi(&reach_d),
        cat.epi_witness(&reach_d),
    );
    let surjective = flag(
        "surjective",
        cat.find_section(&reach_d).is_some(),
        cat.epi_witness(&reach_d),
    );
    let fibration = flag("fibration", cat.is_regular_epi(&tau_d), cat.epi_witness(&tau_d));
    let split_epi_fibration = flag(
        "split epi fibration",
        tau_d_section.is_some(),
        cat.epi_witness(&tau_d),
    );
    let discrete_fibration = flag(
        "discrete fibration",
        cat.is_iso(&tau_d),
        cat.mono_witness(&tau_d).or_else(|| cat.epi_witness(&tau_d)),
    );
    Ok(FunctorClassification {
        faithful,
        full,
        essentially_surjective,
        essentially_surjective_c: cat.is_regular_epi(&reach_c),
        surjective,
        weak_equivalence: full && faithful && essentially_surjective,
        equivalence: full && faithful && surjective,
        fibration,
        split_epi_fibration,
        discrete_fibration,
        tau_c_flags: (
            cat.is_regular_epi(&tau_c),
            cat.find_section(&tau_c).is_some(),
            cat.is_iso(&tau_c),
        ),
        partial,
        d_fibre,
        c_fibre,
        tau_d,
        tau_c,
        tau_d_section,
        kd,
        witnesses,
    })
}

impl<C: Category> FunctorClassification<C> {
    pub fn tau_d_flags(&self) -> (bool, bool, bool) {
        (self.fibration, self.split_epi_fibration, self.discrete_fibration)
    }
}

/// `K_d(F): Ker(d_A) → Ker(d_B)` and the square it sits in.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Normalization<C: Category> {
    pub kd: C::Mor,
    /// `k_d^A: Ker(d_A) → A1`.
    pub ka: C::Mor,
    /// `k_d^B: Ker(d_B) → B1`.
    pub kb: C::Mor,
    /// `k_d^A·c·F0 = K_d(F)·k_d^B·c`.
    pub square_commutes: bool,
}

pub fn normalization<C: Category>(f: &InternalFunctor<C>) -> Result<Normalization<C>> {
    let cat = f.cat();
    let (a, b) = (&f.src, &f.dst);
    let ka = cat.kernel(&a.d)?.legs.remove(0);
    let kb = cat.kernel(&b.d)?.legs.remove(0);
    let kd = cat.factor_through_mono(&cat.compose(&ka, &f.f1)?, &kb)?;
    let square_commutes =
        cat.compose_all(&[&ka, &a.c, &f.f0])? == cat.compose_all(&[&kd, &kb, &b.c])?;
    Ok(Normalization {
        kd,
        ka,
        kb,
        square_commutes,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::finptset::{FinPtSet, PtSet};
    use crate::fixtures::{codiscrete, discrete, z2_to_z4, z4, z4_mod2};
    use crate::groupoid::InternalGroupoid;
    use std::sync::Arc;

    #[test]
    fn identity_has_every_property() {
        let id = InternalFunctor::identity(&Arc::new(z4()));
        let k = classify(&id).unwrap();
        assert!(k.faithful && k.full && k.essentially_surjective && k.surjective);
        assert!(k.weak_equivalence && k.equivalence);
        assert!(k.fibration && k.split_epi_fibration && k.discrete_fibration);
        assert!(k.witnesses.is_empty());
        let cat = FinPtSet::new();
        assert_eq!(k.kd, cat.identity(&PtSet(4)));
    }

    #[test]
    fn doubling_is_faithful_not_full() {
        let f = z2_to_z4();
        let k = classify(&f).unwrap();
        assert_eq!(k.partial.triples.apex, PtSet(4));
        assert!(k.faithful && !k.full && k.essentially_surjective && !k.fibration);
        assert!(!FinPtSet::new().is_regular_epi(&k.kd));
        assert_eq!(k.witnesses[0].0, "full");
    }

    #[test]
    fn reduction_is_a_fibration() {
        let k = classify(&z4_mod2()).unwrap();
        assert!(k.full && !k.faithful);
        assert!(k.fibration && k.split_epi_fibration && !k.discrete_fibration);
        assert!(FinPtSet::new().is_regular_epi(&k.kd));
        assert_eq!(k.tau_c_flags, k.tau_d_flags());
        assert!(normalization(&z4_mod2()).unwrap().square_commutes);
    }

    #[test]
    fn basepoint_component_inclusion_is_not_essentially_surjective() {
        let cat = FinPtSet::new();
        // the point into two codiscrete components {0} ⊔ {1, 2}
        let b = InternalGroupoid::from_tables(
            &cat,
            3,
            &[0, 1, 1, 2, 2],
            &[0, 1, 2, 1, 2],
            &[0, 1, 4],
            |x, y| {
                let pairs = [(0, 0), (1, 1), (1, 2), (2, 1), (2, 2)];
                let (u, _) = pairs[x];
                let (_, w) = pairs[y];
                pairs.iter().position(|&p| p == (u, w)).unwrap()
            },
            None,
        )
        .unwrap();
        assert!(b.validate().all_pass());
        let point = Arc::new(discrete(1));
        let inc = InternalFunctor::zero(&point, &Arc::new(b));
        let k = classify(&inc).unwrap();
        assert!(k.faithful && k.full && !k.essentially_surjective);
        assert!(!k.essentially_surjective_c);
        let inc2 = InternalFunctor::zero(&point, &Arc::new(codiscrete(3)));
        assert!(classify(&inc2).unwrap().equivalence);
    }
}
