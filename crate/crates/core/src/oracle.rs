//! An independent brute-force reference implementation for finite
//! `Z/n`-modules of order at most 64, used to cross-check the lattice
//! engine. Everything here works on explicit element tables and `u64`
//! bitmasks of element indices: subgroups are closed bit sets, ideals are
//! scalar sets, and every predicate is decided by direct enumeration. No
//! Hermite or Smith normal form, no divisor shortcuts.

use crate::error::{Error, Result};
use crate::matrix::Elt;
use alloc::vec::Vec;
use alloc::{format, vec};

/// A subgroup as a bitmask over element indices (order ≤ 64).
pub type Mask = u64;

pub struct OracleModule {
    pub n: Elt,
    pub factors: Vec<Elt>,
    pub order: usize,
    /// index -> element tuple, mixed-radix order (index 0 is zero).
    pub elems: Vec<Vec<Elt>>,
    add: Vec<Vec<u8>>,
    scale: Vec<Vec<u8>>,
}

impl OracleModule {
    pub fn new(n: Elt, factors: &[Elt]) -> Result<Self> {
        if n < 2 || factors.iter().any(|&d| d < 1 || n % d != 0) {
            return Err(Error::BadFactors);
        }
        let order: Elt = factors.iter().product();
        if order > 64 {
            return Err(Error::BoundExceeded);
        }
        let order = order as usize;
        let mut elems: Vec<Vec<Elt>> = Vec::with_capacity(order);
        let mut cur = vec![0; factors.len()];
        loop {
            elems.push(cur.clone());
            let mut i = 0;
            loop {
                if i == factors.len() {
                    let index_of = |tuple: &[Elt]| -> usize {
                        let mut idx = 0usize;
                        for (&c, &d) in tuple.iter().zip(factors).rev() {
                            idx = idx * d as usize + c.rem_euclid(d) as usize;
                        }
                        idx
                    };
                    let add: Vec<Vec<u8>> = (0..order)
                        .map(|a| {
                            (0..order)
                                .map(|b| {
                                    let t: Vec<Elt> = elems[a]
                                        .iter()
                                        .zip(&elems[b])
                                        .zip(factors)
                                        .map(|((&x, &y), &d)| (x + y) % d)
                                        .collect();
                                    index_of(&t) as u8
                                })
                                .collect()
                        })
                        .collect();
                    let scale: Vec<Vec<u8>> = (0..n as usize)
                        .map(|r| {
                            (0..order)
                                .map(|a| {
                                    let t: Vec<Elt> = elems[a]
                                        .iter()
                                        .zip(factors)
                                        .map(|(&x, &d)| (r as Elt * x) % d)
                                        .collect();
                                    index_of(&t) as u8
                                })
                                .collect()
                        })
                        .collect();
                    return Ok(OracleModule {
                        n,
                        factors: factors.to_vec(),
                        order,
                        elems,
                        add,
                        scale,
                    });
                }
                cur[i] += 1;
                if cur[i] < factors[i] {
                    break;
                }
                cur[i] = 0;
                i += 1;
            }
        }
    }

    pub fn index_of(&self, tuple: &[Elt]) -> usize {
        let mut idx = 0usize;
        for (&c, &d) in tuple.iter().zip(&self.factors).rev() {
            idx = idx * d as usize + c.rem_euclid(d) as usize;
        }
        idx
    }

    pub fn full_mask(&self) -> Mask {
        if self.order == 64 {
            !0
        } else {
            (1u64 << self.order) - 1
        }
    }

    /// Additive closure of a seed set (always contains 0).
    pub fn closure(&self, seed: Mask) -> Mask {
        let mut m = seed | 1;
        loop {
            let mut next = m;
            for a in BitIter(m) {
                for b in BitIter(m) {
                    next |= 1u64 << self.add[a][b];
                }
            }
            if next == m {
                return m;
            }
            m = next;
        }
    }

    pub fn join(&self, a: Mask, b: Mask) -> Mask {
        self.closure(a | b)
    }

    /// Every subgroup, by closing the cyclic subgroups under joins.
    pub fn all_subgroups(&self) -> Vec<Mask> {
        let mut subs: Vec<Mask> = vec![1];
        for i in 0..self.order {
            let c = self.closure(1 | (1u64 << i));
            if !subs.contains(&c) {
                subs.push(c);
            }
        }
        let mut frontier = subs.clone();
        while let Some(f) = frontier.pop() {
            for s in subs.clone() {
                let j = self.join(f, s);
                if !subs.contains(&j) {
                    subs.push(j);
                    frontier.push(j);
                }
            }
        }
        subs.sort_by_key(|m| (m.count_ones(), *m));
        subs
    }

    /// `Ann(N)` as the explicit scalar set `{ r : r N = 0 }`.
    pub fn annihilator_set(&self, m: Mask) -> Vec<Elt> {
        (0..self.n)
            .filter(|&r| BitIter(m).all(|a| self.scale[r as usize][a] == 0))
            .collect()
    }

    /// `(N : K)` as the scalar set `{ r : r K ⊆ N }`.
    pub fn colon_set(&self, nm: Mask, km: Mask) -> Vec<Elt> {
        (0..self.n)
            .filter(|&r| BitIter(km).all(|a| nm & (1u64 << self.scale[r as usize][a]) != 0))
            .collect()
    }

    pub fn describe(&self, m: Mask) -> alloc::string::String {
        format!("{:#x} of order {}", m, m.count_ones())
    }
}

struct BitIter(Mask);

impl Iterator for BitIter {
    type Item = usize;
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let i = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(i)
    }
}

/// All ideals of `Z/n` as sorted scalar sets, found by additive closure of
/// each element (subgroups of `Z/n` are automatically ideals).
pub fn ring_ideal_sets(n: Elt) -> Vec<Vec<Elt>> {
    let mut out: Vec<Vec<Elt>> = Vec::new();
    for g in 0..n {
        let mut set = vec![0];
        let mut x = g;
        while x != 0 {
            set.push(x);
            x = (x + g) % n;
        }
        set.sort_unstable();
        if !out.contains(&set) {
            out.push(set);
        }
    }
    out.sort();
    out
}

fn sum_set(n: Elt, a: &[Elt], b: &[Elt]) -> Vec<Elt> {
    let mut out: Vec<Elt> = a
        .iter()
        .flat_map(|&x| b.iter().map(move |&y| (x + y) % n))
        .collect();
    out.sort_unstable();
    out.dedup();
    out
}

fn subset(a: &[Elt], b: &[Elt]) -> bool {
    a.iter().all(|x| b.contains(x))
}

/// `A ≪ J` inside `Z/n`, by enumerating every ideal `I ⊆ J` and testing
/// `A + I = J ⟹ I = J`. Non-containment yields `false`.
pub fn set_is_small_in(n: Elt, a: &[Elt], j: &[Elt]) -> bool {
    if !subset(a, j) {
        return false;
    }
    for i in ring_ideal_sets(n) {
        if subset(&i, j) && i != j && sum_set(n, a, &i) == j {
            return false;
        }
    }
    true
}

/// `N ≪ M` on masks: no proper subgroup joins with `N` to the whole module.
pub fn mask_is_small(m: &OracleModule, nm: Mask) -> bool {
    let full = m.full_mask();
    m.all_subgroups()
        .into_iter()
        .all(|l| l == full || m.join(nm, l) != full)
}

/// `N ≪^sa M` on masks.
pub fn mask_is_sa_small(m: &OracleModule, nm: Mask) -> bool {
    let full = m.full_mask();
    let r: Vec<Elt> = (0..m.n).collect();
    m.all_subgroups().into_iter().all(|l| {
        m.join(nm, l) != full || set_is_small_in(m.n, &m.annihilator_set(l), &r)
    })
}

/// `N ≪_T^sa M` on masks; `strict` skips `X = 0`.
pub fn mask_is_t_sa_small(m: &OracleModule, nm: Mask, tm: Mask, strict: bool) -> bool {
    let ctm = m.colon_set(tm, m.full_mask());
    m.all_subgroups().into_iter().all(|x| {
        if strict && x == 1 {
            return true;
        }
        let covered = tm & !m.join(nm, x) == 0;
        !covered || set_is_small_in(m.n, &m.annihilator_set(x), &ctm)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::module::{FgModule, Submodule};
    use crate::predicates;
    use crate::ring::Ring;

    /// Translate a lattice-engine submodule into an oracle bitmask.
    fn to_mask(m: &FgModule, om: &OracleModule, s: &Submodule) -> Mask {
        let mut mask = 0u64;
        for e in m.elements(64).unwrap() {
            if m.contains_element(s, &e).unwrap() {
                mask |= 1u64 << om.index_of(&e);
            }
        }
        mask
    }

    #[test]
    fn subgroup_counts_agree() {
        for (n, factors) in [(6, vec![6]), (8, vec![2, 4]), (12, vec![2, 2]), (4, vec![2, 2, 2])] {
            let om = OracleModule::new(n, &factors).unwrap();
            let fm = FgModule::finite(Ring::Zn(n), &factors).unwrap();
            let subs = fm.submodules(64).unwrap();
            let masks = om.all_subgroups();
            assert_eq!(subs.len(), masks.len());
            // the translation is a bijection onto the oracle's list
            let translated: Vec<Mask> = subs.iter().map(|s| to_mask(&fm, &om, s)).collect();
            for t in &translated {
                assert!(masks.contains(t));
            }
        }
    }

    #[test]
    fn ideals_and_smallness_cross_check() {
        for n in 2..16 {
            let sets = ring_ideal_sets(n);
            let lattice = Ring::Zn(n).ideal_lattice().unwrap();
            assert_eq!(sets.len(), lattice.len());
            for i in &lattice {
                let set: Vec<Elt> = (0..n).filter(|&r| i.contains_element(r)).collect();
                assert!(sets.contains(&set));
                for j in &lattice {
                    let jset: Vec<Elt> = (0..n).filter(|&r| j.contains_element(r)).collect();
                    assert_eq!(
                        i.is_small_in(j).unwrap(),
                        set_is_small_in(n, &set, &jset),
                        "smallness mismatch for {} in {} mod {n}",
                        i.display(),
                        j.display()
                    );
                }
            }
        }
    }

    #[test]
    fn predicates_cross_check() {
        for (n, factors) in [(6, vec![6]), (8, vec![2, 4]), (12, vec![12]), (9, vec![3, 3])] {
            let om = OracleModule::new(n, &factors).unwrap();
            let fm = FgModule::finite(Ring::Zn(n), &factors).unwrap();
            let subs = fm.submodules(64).unwrap();
            for s in &subs {
                let mask = to_mask(&fm, &om, s);
                assert_eq!(
                    predicates::is_small(&fm, s).unwrap().is_holds(),
                    mask_is_small(&om, mask)
                );
                assert_eq!(
                    predicates::is_sa_small(&fm, s).unwrap().is_holds(),
                    mask_is_sa_small(&om, mask)
                );
                let ann: Vec<Elt> = {
                    let a = fm.annihilator(s).unwrap();
                    (0..n).filter(|&r| a.contains_element(r)).collect()
                };
                assert_eq!(ann, om.annihilator_set(mask));
            }
            for t in &subs {
                let tm = to_mask(&fm, &om, t);
                for s in &subs {
                    let sm = to_mask(&fm, &om, s);
                    let colon: Vec<Elt> = {
                        let c = fm.colon(s, t).unwrap();
                        (0..n).filter(|&r| c.contains_element(r)).collect()
                    };
                    assert_eq!(colon, om.colon_set(sm, tm));
                    for strict in [false, true] {
                        assert_eq!(
                            predicates::is_t_sa_small(&fm, s, t, strict).unwrap().is_holds(),
                            mask_is_t_sa_small(&om, sm, tm, strict),
                            "t-sa mismatch on Z/{n} {factors:?} N={} T={} strict={strict}",
                            fm.display_sub(s),
                            fm.display_sub(t)
                        );
                    }
                }
            }
        }
    }
}
