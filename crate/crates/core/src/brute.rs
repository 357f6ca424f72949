//! Exhaustive enumeration of functors and natural transformations between
//! small groupoids in pointed sets, used as independent oracles for the
//! uniqueness claims of the universal properties and for faithfulness.

use crate::category::Category;
use crate::error::{Error, Result};
use crate::finptset::{FinPtSet, PtMap};
use crate::groupoid::{Groupoid, InternalFunctor, InternalGroupoid, NatTransformation};
use crate::hlimits::{induce_2cell, induce_functor, HPullback};

const NONE: u32 = u32::MAX;

/// Structure maps of a groupoid as plain lookup tables.
#[derive(Clone, Debug)]
pub struct Tables {
    pub objects: usize,
    pub arrows: usize,
    pub d: Vec<u32>,
    pub c: Vec<u32>,
    pub e: Vec<u32>,
    comp: Vec<u32>,
}

impl Tables {
    pub fn of(g: &InternalGroupoid<FinPtSet>) -> Self {
        let n1 = g.b1.0;
        let mut comp = vec![NONE; n1 * n1];
        let (p1, p2) = (g.pi1(), g.pi2());
        for k in 0..g.composable.apex.0 {
            comp[p1.at(k) * n1 + p2.at(k)] = g.m.table()[k];
        }
        Tables {
            objects: g.b0.0,
            arrows: n1,
            d: g.d.table().to_vec(),
            c: g.c.table().to_vec(),
            e: g.e.table().to_vec(),
            comp,
        }
    }

    /// `a` then `b`, when `a` ends where `b` starts.
    pub fn compose(&self, a: usize, b: usize) -> Option<usize> {
        match self.comp[a * self.arrows + b] {
            NONE => None,
            r => Some(r as usize),
        }
    }

    /// The first composable triple `(a, b, c)` on which `(a·b)·c ≠ a·(b·c)`,
    /// found by walking triples without materializing them.
    pub fn associativity_witness(&self) -> Option<(usize, usize, usize)> {
        let mut out_of = vec![Vec::new(); self.objects];
        for a in 0..self.arrows {
            out_of[self.d[a] as usize].push(a);
        }
        for a in 0..self.arrows {
            for &b in &out_of[self.c[a] as usize] {
                let Some(ab) = self.compose(a, b) else {
                    return Some((a, b, b));
                };
                for &c in &out_of[self.c[b] as usize] {
                    let lhs = self.compose(ab, c);
                    let rhs = self.compose(b, c).and_then(|bc| self.compose(a, bc));
                    if lhs.is_none() || lhs != rhs {
                        return Some((a, b, c));
                    }
                }
            }
        }
        None
    }

    fn composable_triples(&self) -> Vec<(usize, usize, usize)> {
        let mut out = Vec::new();
        for a in 0..self.arrows {
            for b in 0..self.arrows {
                if let Some(r) = self.compose(a, b) {
                    out.push((a, b, r));
                }
            }
        }
        out
    }
}

struct Budget {
    left: u128,
    limit: u128,
}

impl Budget {
    fn new(cat: &FinPtSet) -> Self {
        Budget {
            left: cat.limits.max_enumeration,
            limit: cat.limits.max_enumeration,
        }
    }

    fn spend(&mut self, what: &str) -> Result<()> {
        if self.left == 0 {
            return Err(Error::SizeLimit {
                what: what.into(),
                size: self.limit + 1,
                limit: self.limit,
            });
        }
        self.left -= 1;
        Ok(())
    }
}

fn check_small(cat: &FinPtSet, g: &InternalGroupoid<FinPtSet>) -> Result<()> {
    let size = g.b0.0.max(g.b1.0);
    if size > cat.limits.max_brute_force_size {
        return Err(Error::SizeLimit {
            what: "brute-force source groupoid".into(),
            size: size as u128,
            limit: cat.limits.max_brute_force_size as u128,
        });
    }
    Ok(())
}

/// Every internal functor `X → P`, in lexicographic order of `(F0, F1)`.
pub fn functors(x: &Groupoid<FinPtSet>, p: &Groupoid<FinPtSet>) -> Result<Vec<InternalFunctor<FinPtSet>>> {
    let cat = &x.cat;
    check_small(cat, x)?;
    let (tx, tp) = (Tables::of(x), Tables::of(p));
    // composable triples of X grouped by the last arrow index they mention
    let mut due = vec![Vec::new(); tx.arrows];
    for (a, b, r) in tx.composable_triples() {
        due[a.max(b).max(r)].push((a, b, r));
    }
    let mut budget = Budget::new(cat);
    let mut out = Vec::new();
    let mut f0 = vec![0u32; tx.objects];
    let mut f1 = vec![0u32; tx.arrows];
    objects_then_arrows(&tx, &tp, &due, 1, &mut f0, &mut f1, &mut budget, &mut out)?;
    out.into_iter()
        .map(|(t0, t1)| {
            InternalFunctor::new(
                x.clone(),
                p.clone(),
                PtMap::from_raw(tp.objects, t0),
                PtMap::from_raw(tp.arrows, t1),
            )
        })
        .collect()
}

type Assignment = (Vec<u32>, Vec<u32>);

#[allow(clippy::too_many_arguments)]
fn objects_then_arrows(
    tx: &Tables,
    tp: &Tables,
    due: &[Vec<(usize, usize, usize)>],
    u: usize,
    f0: &mut Vec<u32>,
    f1: &mut Vec<u32>,
    budget: &mut Budget,
    out: &mut Vec<Assignment>,
) -> Result<()> {
    if u == tx.objects {
        return arrows(tx, tp, due, 1, f0, f1, budget, out);
    }
    for v in 0..tp.objects as u32 {
        budget.spend("functor enumeration")?;
        f0[u] = v;
        objects_then_arrows(tx, tp, due, u + 1, f0, f1, budget, out)?;
    }
    Ok(())
}

#[allow(clippy::too_many_arguments)]
fn arrows(
    tx: &Tables,
    tp: &Tables,
    due: &[Vec<(usize, usize, usize)>],
    a: usize,
    f0: &[u32],
    f1: &mut Vec<u32>,
    budget: &mut Budget,
    out: &mut Vec<Assignment>,
) -> Result<()> {
    if a == tx.arrows {
        if due[0].iter().all(|&(p, q, r)| respects(tp, f1, p, q, r)) {
            out.push((f0.to_vec(), f1.clone()));
        }
        return Ok(());
    }
    let (src, dst) = (f0[tx.d[a] as usize], f0[tx.c[a] as usize]);
    for y in 0..tp.arrows {
        if tp.d[y] != src || tp.c[y] != dst {
            continue;
        }
        budget.spend("functor enumeration")?;
        f1[a] = y as u32;
        if due[a].iter().all(|&(p, q, r)| respects(tp, f1, p, q, r)) {
            arrows(tx, tp, due, a + 1, f0, f1, budget, out)?;
        }
    }
    Ok(())
}

fn respects(tp: &Tables, f1: &[u32], a: usize, b: usize, r: usize) -> bool {
    tp.compose(f1[a] as usize, f1[b] as usize) == Some(f1[r] as usize)
}

/// Every natural transformation `H ⇒ K`.
pub fn transformations(
    h: &InternalFunctor<FinPtSet>,
    k: &InternalFunctor<FinPtSet>,
) -> Result<Vec<NatTransformation<FinPtSet>>> {
    let cat = h.cat();
    check_small(cat, &h.src)?;
    let (tx, tp) = (Tables::of(&h.src), Tables::of(&h.dst));
    let (h0, h1, k0, k1) = (h.f0.table(), h.f1.table(), k.f0.table(), k.f1.table());
    let mut due = vec![Vec::new(); tx.objects];
    for f in 0..tx.arrows {
        due[tx.d[f].max(tx.c[f]) as usize].push(f);
    }
    let natural = |alpha: &[u32], f: usize| {
        let (u, v) = (tx.d[f] as usize, tx.c[f] as usize);
        tp.compose(h1[f] as usize, alpha[v] as usize) == tp.compose(alpha[u] as usize, k1[f] as usize)
    };
    let mut budget = Budget::new(cat);
    let mut alpha = vec![0u32; tx.objects];
    let mut out = Vec::new();
    let mut stack = vec![(0usize, 0usize)];
    // iterative backtracking: (object, next candidate arrow)
    while let Some((u, next)) = stack.pop() {
        if u == tx.objects {
            out.push(alpha.clone());
            continue;
        }
        let candidates = (next..tp.arrows).filter(|&y| {
            tp.d[y] == h0[u] && tp.c[y] == k0[u] && (u != 0 || y == 0)
        });
        for y in candidates {
            budget.spend("transformation enumeration")?;
            alpha[u] = y as u32;
            if due[u].iter().all(|&f| natural(&alpha, f)) {
                stack.push((u, y + 1));
                stack.push((u + 1, 0));
                break;
            }
        }
    }
    out.sort();
    out.into_iter()
        .map(|t| NatTransformation::new(h.clone(), k.clone(), PtMap::from_raw(tp.arrows, t)))
        .collect()
}

/// All solutions found by exhaustive search next to the constructed one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Uniqueness<T> {
    pub constructed: T,
    pub solutions: Vec<T>,
}

impl<T: PartialEq> Uniqueness<T> {
    pub fn unique(&self) -> bool {
        self.solutions.len() == 1 && self.solutions[0] == self.constructed
    }
}

/// Searches all `T: X → P` with `T·F′ = K`, `T·G′ = H` and `T·φ = μ`.
pub fn functor_uniqueness(
    hpb: &HPullback<FinPtSet>,
    h: &InternalFunctor<FinPtSet>,
    k: &InternalFunctor<FinPtSet>,
    mu: &NatTransformation<FinPtSet>,
) -> Result<Uniqueness<InternalFunctor<FinPtSet>>> {
    let constructed = induce_functor(hpb, h, k, mu)?;
    let cat = hpb.cat();
    let mut solutions = Vec::new();
    for t in functors(&h.src, &hpb.p)? {
        let fits = cat.compose(&t.f0, &hpb.fp.f0)? == k.f0
            && cat.compose(&t.f1, &hpb.fp.f1)? == k.f1
            && cat.compose(&t.f0, &hpb.gp.f0)? == h.f0
            && cat.compose(&t.f1, &hpb.gp.f1)? == h.f1
            && cat.compose(&t.f0, hpb.phi0())? == mu.alpha;
        if fits {
            solutions.push(t);
        }
    }
    Ok(Uniqueness {
        constructed,
        solutions,
    })
}

/// Every `μ: L ⇒ M` with `μ·F′ = α` and `μ·G′ = β`, found by exhaustive search.
pub fn two_cell_solutions(
    hpb: &HPullback<FinPtSet>,
    l: &InternalFunctor<FinPtSet>,
    m: &InternalFunctor<FinPtSet>,
    alpha: &NatTransformation<FinPtSet>,
    beta: &NatTransformation<FinPtSet>,
) -> Result<Vec<NatTransformation<FinPtSet>>> {
    let cat = hpb.cat();
    let mut solutions = Vec::new();
    for mu in transformations(l, m)? {
        if cat.compose(&mu.alpha, &hpb.fp.f1)? == alpha.alpha && cat.compose(&mu.alpha, &hpb.gp.f1)? == beta.alpha {
            solutions.push(mu);
        }
    }
    Ok(solutions)
}

pub fn two_cell_uniqueness(
    hpb: &HPullback<FinPtSet>,
    l: &InternalFunctor<FinPtSet>,
    m: &InternalFunctor<FinPtSet>,
    alpha: &NatTransformation<FinPtSet>,
    beta: &NatTransformation<FinPtSet>,
) -> Result<Uniqueness<NatTransformation<FinPtSet>>> {
    Ok(Uniqueness {
        constructed: induce_2cell(hpb, l, m, alpha, beta)?,
        solutions: two_cell_solutions(hpb, l, m, alpha, beta)?,
    })
}

/// Whether whiskering with `F` is injective on every set of parallel
/// transformations `H ⇒ K: X → A`; on failure, a pair `α ≠ β` with `α·F = β·F`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomFaithfulness {
    pub faithful: bool,
    pub witness: Option<(NatTransformation<FinPtSet>, NatTransformation<FinPtSet>)>,
}

pub fn hom_faithfulness_oracle(
    f: &InternalFunctor<FinPtSet>,
    x: &Groupoid<FinPtSet>,
) -> Result<HomFaithfulness> {
    let cat = f.cat();
    let hs = functors(x, &f.src)?;
    for h in &hs {
        for k in &hs {
            let cells = transformations(h, k)?;
            let mut seen: std::collections::HashMap<PtMap, usize> = std::collections::HashMap::new();
            for (n, alpha) in cells.iter().enumerate() {
                let image = cat.compose(&alpha.alpha, &f.f1)?;
                if let Some(&prev) = seen.get(&image) {
                    return Ok(HomFaithfulness {
                        faithful: false,
                        witness: Some((cells[prev].clone(), alpha.clone())),
                    });
                }
                seen.insert(image, n);
            }
        }
    }
    Ok(HomFaithfulness {
        faithful: true,
        witness: None,
    })
}
