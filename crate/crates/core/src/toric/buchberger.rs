//! Buchberger's algorithm specialised to binomials.
//!
//! S-pairs and reductions of binomials stay binomials, so every element is a
//! pair of exponent vectors. Leading-term supports are cached as `u64` masks
//! for fast divisibility rejection, which caps the engine at 64 variables.

use std::cmp::Ordering;
use std::collections::{BTreeSet, HashSet};

use crate::error::{Error, Result};
use crate::toric::binomial::{degree, divides, lcm, support_mask, Binomial, Monomial, TermOrder};

/// Tuning knobs for [`buchberger_with`].
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GbOptions {
    /// Variables the ideal is known to be saturated in. Common factors in
    /// these variables are divided out of every new element.
    pub cancel_mask: u64,
    /// Give up after this many S-pair reductions.
    pub max_pairs: Option<usize>,
}

impl GbOptions {
    /// For prime binomial ideals such as toric ideals.
    pub fn saturated() -> Self {
        Self {
            cancel_mask: u64::MAX,
            max_pairs: None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroebnerBasis {
    pub order: TermOrder,
    /// Oriented so `plus` is the leading term; sorted by leading term.
    pub elements: Vec<Binomial>,
    pub reduced: bool,
}

impl GroebnerBasis {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn leading_terms(&self) -> Vec<Monomial> {
        self.elements.iter().map(|b| b.plus.clone()).collect()
    }
}

struct Engine<'a> {
    order: &'a TermOrder,
    cancel: u64,
    elems: Vec<Binomial>,
    masks: Vec<u64>,
    queue: BTreeSet<(u64, usize, usize)>,
    pending: HashSet<(usize, usize)>,
}

impl<'a> Engine<'a> {
    fn new(order: &'a TermOrder, cancel: u64) -> Self {
        Self {
            order,
            cancel,
            elems: Vec::new(),
            masks: Vec::new(),
            queue: BTreeSet::new(),
            pending: HashSet::new(),
        }
    }

    fn normalize(&self, f: &mut Binomial) -> bool {
        if self.cancel != 0 {
            f.cancel_on(self.cancel);
        }
        if f.is_zero() {
            return false;
        }
        f.orient(self.order);
        true
    }

    fn divisor_of(&self, m: &[u32], skip: Option<usize>) -> Option<usize> {
        let mask = support_mask(m);
        (0..self.elems.len()).find(|&j| {
            Some(j) != skip && self.masks[j] & !mask == 0 && divides(&self.elems[j].plus, m)
        })
    }

    /// Reduces the leading term until it is standard; `None` if `f` vanishes.
    fn reduce_lead(&self, mut f: Binomial) -> Option<Binomial> {
        loop {
            if !self.normalize(&mut f) {
                return None;
            }
            let Some(j) = self.divisor_of(&f.plus, None) else {
                return Some(f);
            };
            let g = &self.elems[j];
            for v in 0..f.plus.len() {
                f.plus[v] = f.plus[v] - g.plus[v] + g.minus[v];
            }
        }
    }

    fn add(&mut self, h: Binomial) {
        let idx = self.elems.len();
        let mask = support_mask(&h.plus);
        for k in 0..idx {
            if self.masks[k] & mask == 0 {
                continue;
            }
            let l = lcm(&self.elems[k].plus, &h.plus);
            self.queue.insert((degree(&l), k, idx));
            self.pending.insert((k, idx));
        }
        self.elems.push(h);
        self.masks.push(mask);
    }

    fn is_pending(&self, a: usize, b: usize) -> bool {
        self.pending.contains(&(a.min(b), a.max(b)))
    }

    /// Chain criterion: some `k` with `lead(k) | lcm` whose pairs with `i`
    /// and `j` are no longer pending.
    fn chain_skip(&self, i: usize, j: usize, l: &[u32]) -> bool {
        let mask = support_mask(l);
        (0..self.elems.len()).any(|k| {
            k != i
                && k != j
                && self.masks[k] & !mask == 0
                && divides(&self.elems[k].plus, l)
                && !self.is_pending(i, k)
                && !self.is_pending(j, k)
        })
    }

    fn s_pair(&self, i: usize, j: usize) -> Binomial {
        let (f, g) = (&self.elems[i], &self.elems[j]);
        let l = lcm(&f.plus, &g.plus);
        let n = l.len();
        let a = (0..n).map(|v| l[v] - f.plus[v] + f.minus[v]).collect();
        let b = (0..n).map(|v| l[v] - g.plus[v] + g.minus[v]).collect();
        Binomial::new(a, b)
    }

    fn run(&mut self, max_pairs: Option<usize>) -> Result<()> {
        let mut processed = 0usize;
        while let Some((deg, i, j)) = self.queue.pop_first() {
            let _ = deg;
            self.pending.remove(&(i, j));
            let l = lcm(&self.elems[i].plus, &self.elems[j].plus);
            if self.chain_skip(i, j, &l) {
                continue;
            }
            processed += 1;
            if max_pairs.is_some_and(|m| processed > m) {
                return Err(Error::GroebnerBudgetExceeded(processed - 1));
            }
            if let Some(h) = self.reduce_lead(self.s_pair(i, j)) {
                self.add(h);
            }
        }
        Ok(())
    }

    /// Minimal, tail-reduced, sorted basis.
    fn finish(self) -> Vec<Binomial> {
        let order = self.order;
        let mut elems = self.elems;
        elems.sort_by(|a, b| order.cmp(&a.plus, &b.plus).then_with(|| a.cmp(b)));
        let mut kept: Vec<Binomial> = Vec::new();
        for e in elems {
            if !kept.iter().any(|k| divides(&k.plus, &e.plus)) {
                kept.push(e);
            }
        }
        let masks: Vec<u64> = kept.iter().map(|b| support_mask(&b.plus)).collect();
        let mut out = Vec::with_capacity(kept.len());
        for (i, e) in kept.iter().enumerate() {
            let mut f = e.clone();
            loop {
                let m = support_mask(&f.minus);
                let Some(j) = (0..kept.len())
                    .find(|&j| j != i && masks[j] & !m == 0 && divides(&kept[j].plus, &f.minus))
                else {
                    break;
                };
                let g = &kept[j];
                for v in 0..f.minus.len() {
                    f.minus[v] = f.minus[v] - g.plus[v] + g.minus[v];
                }
            }
            debug_assert_eq!(order.cmp(&f.plus, &f.minus), Ordering::Greater);
            out.push(f);
        }
        out
    }
}

fn check_input(gens: &[Binomial], order: &TermOrder) -> Result<()> {
    let n = order.nvars();
    if n > 64 {
        return Err(Error::TooManyVariables(n));
    }
    for (i, g) in gens.iter().enumerate() {
        if g.nvars() != n {
            return Err(Error::ShapeMismatch(format!(
                "binomial {i} has {} variables, the order has {n}",
                g.nvars()
            )));
        }
        if !g.is_homogeneous() {
            return Err(Error::NonHomogeneousInput(i));
        }
    }
    Ok(())
}

/// Reduced Gröbner basis of the ideal generated by homogeneous binomials.
pub fn buchberger_reduced(gens: &[Binomial], order: &TermOrder) -> Result<GroebnerBasis> {
    buchberger_with(gens, order, &GbOptions::default())
}

pub fn buchberger_with(gens: &[Binomial], order: &TermOrder, opts: &GbOptions) -> Result<GroebnerBasis> {
    check_input(gens, order)?;
    let mut eng = Engine::new(order, opts.cancel_mask);
    let mut input: Vec<Binomial> = gens.to_vec();
    input.sort_by_key(Binomial::degree);
    for g in input {
        if let Some(h) = eng.reduce_lead(g) {
            eng.add(h);
        }
    }
    eng.run(opts.max_pairs)?;
    Ok(GroebnerBasis {
        order: order.clone(),
        elements: eng.finish(),
        reduced: true,
    })
}

/// Plain polynomial reduction of `f` by the leading terms of `basis`
/// (no cancellation of common factors); true iff the remainder is zero.
pub fn reduces_to_zero(f: &Binomial, basis: &GroebnerBasis) -> bool {
    let eng = Engine {
        order: &basis.order,
        cancel: 0,
        masks: basis.elements.iter().map(|b| support_mask(&b.plus)).collect(),
        elems: basis.elements.clone(),
        queue: BTreeSet::new(),
        pending: HashSet::new(),
    };
    eng.reduce_lead(f.clone()).is_none()
}

/// Buchberger's criterion: every S-pair reduces to zero.
pub fn satisfies_buchberger_criterion(basis: &GroebnerBasis) -> bool {
    let eng = Engine {
        order: &basis.order,
        cancel: 0,
        masks: basis.elements.iter().map(|b| support_mask(&b.plus)).collect(),
        elems: basis.elements.clone(),
        queue: BTreeSet::new(),
        pending: HashSet::new(),
    };
    let n = eng.elems.len();
    (0..n).all(|i| ((i + 1)..n).all(|j| eng.reduce_lead(eng.s_pair(i, j)).is_none()))
}

/// Leading terms pairwise non-dividing and no trailing term divisible by a
/// leading term.
pub fn is_reduced(basis: &GroebnerBasis) -> bool {
    let e = &basis.elements;
    e.iter().enumerate().all(|(i, f)| {
        basis.order.cmp(&f.plus, &f.minus) == Ordering::Greater
            && e.iter().enumerate().all(|(j, g)| {
                !divides(&g.plus, &f.minus) && (i == j || !divides(&g.plus, &f.plus))
            })
    })
}
