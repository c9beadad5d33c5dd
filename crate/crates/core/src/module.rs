//! Finitely generated modules over `Z` and `Z/n`, presented as `Z^k / L`
//! for a relation lattice `L` (which always contains `n * e_i` when the
//! coefficient ring is `Z/n`).
//!
//! A [`Submodule`] is the canonical Hermite basis of the lattice
//! `generators + L` in `Z^k`; two submodules of the same parent are equal
//! iff their bases are equal.

use crate::error::{Error, Result};
use crate::matrix::{
    self, element_order, hnf, lattice_index, matmul, member, preimage, reduce, snf, Elt, Snf,
};
use crate::ring::{Ideal, Ring};
use alloc::collections::BTreeSet;
use alloc::string::String;
use alloc::vec::Vec;
use alloc::{format, vec};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FgModule {
    pub ring: Ring,
    pub ngens: usize,
    /// Canonical Hermite basis of the relation lattice, including the ring
    /// relations `n * e_i` for `Z/n`.
    pub relations: Vec<Vec<Elt>>,
}

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Submodule {
    pub ngens: usize,
    /// Canonical Hermite basis of the lattice `generators + relations`.
    pub rows: Vec<Vec<Elt>>,
}

fn ring_rows(ring: Ring, ngens: usize) -> Vec<Vec<Elt>> {
    match ring {
        Ring::Z => Vec::new(),
        Ring::Zn(n) => (0..ngens)
            .map(|i| {
                let mut row = vec![0; ngens];
                row[i] = n;
                row
            })
            .collect(),
    }
}

impl FgModule {
    pub fn new(ring: Ring, ngens: usize, extra_relations: &[Vec<Elt>]) -> Self {
        let mut rows = ring_rows(ring, ngens);
        rows.extend(extra_relations.iter().cloned());
        FgModule {
            ring,
            ngens,
            relations: hnf(&rows),
        }
    }

    /// Direct sum of cyclic modules `Z/d_1 x ... x Z/d_k` (a factor `0`
    /// means a free `Z` summand). Factors must form a divisibility chain and,
    /// over `Z/n`, divide `n`.
    pub fn finite(ring: Ring, factors: &[Elt]) -> Result<Self> {
        for w in factors.windows(2) {
            if w[0] == 0 || (w[1] != 0 && w[1] % w[0] != 0) {
                return Err(Error::BadFactors);
            }
        }
        if let Ring::Zn(n) = ring {
            if factors.iter().any(|&d| d == 0 || n % d != 0) {
                return Err(Error::BadFactors);
            }
        }
        let k = factors.len();
        let rows: Vec<Vec<Elt>> = factors
            .iter()
            .enumerate()
            .filter(|(_, &d)| d != 0)
            .map(|(i, &d)| {
                let mut row = vec![0; k];
                row[i] = d;
                row
            })
            .collect();
        Ok(FgModule::new(ring, k, &rows))
    }

    /// The ring `Z` as a module over itself.
    pub fn z_line() -> Self {
        FgModule::new(Ring::Z, 1, &[])
    }

    pub fn is_z_line(&self) -> bool {
        self.ring == Ring::Z && self.ngens == 1 && self.relations.is_empty()
    }

    pub fn relations_snf(&self) -> Snf {
        snf(&self.relations, self.ngens)
    }

    /// Invariant factor decomposition: the chain of factors `> 1` followed by
    /// the free rank.
    pub fn invariant_factors(&self) -> (Vec<Elt>, usize) {
        let s = self.relations_snf();
        let torsion: Vec<Elt> = s.diag.iter().copied().filter(|&d| d > 1).collect();
        let free = s.diag.iter().filter(|&&d| d == 0).count();
        (torsion, free)
    }

    pub fn order(&self) -> Option<Elt> {
        let (torsion, free) = self.invariant_factors();
        if free > 0 {
            return None;
        }
        Some(torsion.iter().fold(1, |a, &d| a.checked_mul(d).expect("overflow")))
    }

    pub fn is_zero_module(&self) -> bool {
        self.order() == Some(1)
    }

    pub fn zero_sub(&self) -> Submodule {
        Submodule {
            ngens: self.ngens,
            rows: self.relations.clone(),
        }
    }

    pub fn full_sub(&self) -> Submodule {
        let gens: Vec<Vec<Elt>> = (0..self.ngens)
            .map(|i| {
                let mut row = vec![0; self.ngens];
                row[i] = 1;
                row
            })
            .collect();
        self.submodule(&gens)
    }

    pub fn submodule(&self, gens: &[Vec<Elt>]) -> Submodule {
        let mut rows = self.relations.clone();
        rows.extend(gens.iter().cloned());
        Submodule {
            ngens: self.ngens,
            rows: hnf(&rows),
        }
    }

    pub fn cyclic(&self, v: &[Elt]) -> Submodule {
        self.submodule(&[v.to_vec()])
    }

    fn check(&self, n: &Submodule) -> Result<()> {
        if n.ngens != self.ngens {
            return Err(Error::ParentMismatch);
        }
        Ok(())
    }

    pub fn sum(&self, a: &Submodule, b: &Submodule) -> Result<Submodule> {
        self.check(a)?;
        self.check(b)?;
        let mut rows = a.rows.clone();
        rows.extend(b.rows.iter().cloned());
        Ok(Submodule {
            ngens: self.ngens,
            rows: hnf(&rows),
        })
    }

    pub fn intersect(&self, a: &Submodule, b: &Submodule) -> Result<Submodule> {
        self.check(a)?;
        self.check(b)?;
        Ok(Submodule {
            ngens: self.ngens,
            rows: matrix::intersect(&a.rows, &b.rows, self.ngens),
        })
    }

    pub fn contains(&self, outer: &Submodule, inner: &Submodule) -> Result<bool> {
        self.check(outer)?;
        self.check(inner)?;
        Ok(inner.rows.iter().all(|r| member(&outer.rows, r)))
    }

    pub fn contains_element(&self, n: &Submodule, v: &[Elt]) -> Result<bool> {
        self.check(n)?;
        Ok(member(&n.rows, v))
    }

    pub fn element_canon(&self, v: &[Elt]) -> Vec<Elt> {
        reduce(&self.relations, v)
    }

    pub fn sub_order(&self, n: &Submodule) -> Result<Option<Elt>> {
        self.check(n)?;
        Ok(lattice_index(&n.rows, &self.relations))
    }

    pub fn is_zero_sub(&self, n: &Submodule) -> bool {
        n.rows == self.relations
    }

    pub fn is_full_sub(&self, n: &Submodule) -> bool {
        *n == self.full_sub()
    }

    /// `Ann(N) = { r : r N = 0 }` as an ideal of the coefficient ring.
    pub fn annihilator(&self, n: &Submodule) -> Result<Ideal> {
        self.check(n)?;
        let s = self.relations_snf();
        let mut l: Elt = 1;
        for g in &n.rows {
            l = matrix::lcm(l, element_order(&s, g));
        }
        // l = 0 means some generator has infinite order: annihilator is 0
        Ok(self.ring.ideal(l))
    }

    pub fn annihilator_module(&self) -> Result<Ideal> {
        self.annihilator(&self.full_sub())
    }

    /// Colon ideal `(N : K) = { r : r K ⊆ N }`.
    pub fn colon(&self, n: &Submodule, k: &Submodule) -> Result<Ideal> {
        self.check(n)?;
        self.check(k)?;
        let s = snf(&n.rows, self.ngens);
        let mut l: Elt = 1;
        for g in &k.rows {
            l = matrix::lcm(l, element_order(&s, g));
        }
        Ok(self.ring.ideal(l))
    }

    /// `(N : M)` for the whole module.
    pub fn colon_top(&self, n: &Submodule) -> Result<Ideal> {
        self.colon(n, &self.full_sub())
    }

    /// Canonical representatives of all elements, lexicographically sorted.
    pub fn elements(&self, bound: Elt) -> Result<Vec<Vec<Elt>>> {
        let Some(ord) = self.order() else {
            return Err(Error::InfiniteEnumeration);
        };
        if ord > bound {
            return Err(Error::BoundExceeded);
        }
        let s = self.relations_snf();
        // in y = x * V coordinates the module is the direct sum of Z/diag[i]
        let mut elts: Vec<Vec<Elt>> = Vec::with_capacity(ord as usize);
        let mut y = vec![0; self.ngens];
        loop {
            let x = matmul(&[y.clone()], &s.vinv);
            elts.push(self.element_canon(&x[0]));
            // mixed-radix increment
            let mut i = 0;
            loop {
                if i == self.ngens {
                    elts.sort();
                    elts.dedup();
                    debug_assert_eq!(elts.len() as Elt, ord);
                    return Ok(elts);
                }
                y[i] += 1;
                if y[i] < s.diag[i] {
                    break;
                }
                y[i] = 0;
                i += 1;
            }
        }
    }

    /// All submodules, sorted by (order, basis). Errors when the module is
    /// infinite or larger than `bound`.
    pub fn submodules(&self, bound: Elt) -> Result<Vec<Submodule>> {
        let elts = self.elements(bound)?;
        let mut seen: BTreeSet<Submodule> = BTreeSet::new();
        let mut queue: Vec<Submodule> = Vec::new();
        for s in core::iter::once(self.zero_sub()).chain(elts.iter().map(|e| self.cyclic(e))) {
            if seen.insert(s.clone()) {
                queue.push(s);
            }
        }
        // closure under pairwise sums: each element, once dequeued, is
        // joined with everything dequeued before it
        let mut i = 0;
        while i < queue.len() {
            for j in 0..i {
                let u = self.sum(&queue[i], &queue[j])?;
                if seen.insert(u.clone()) {
                    queue.push(u);
                }
            }
            i += 1;
        }
        let mut keyed: Vec<(Elt, Submodule)> = queue
            .into_iter()
            .map(|s| {
                let o = lattice_index(&s.rows, &self.relations).unwrap_or(0);
                (o, s)
            })
            .collect();
        keyed.sort();
        Ok(keyed.into_iter().map(|(_, s)| s).collect())
    }

    /// Maximal submodules (those with simple quotient).
    pub fn maximal_submodules(&self, bound: Elt) -> Result<Vec<Submodule>> {
        let ord = self.order().ok_or(Error::InfiniteEnumeration)?;
        let subs = self.submodules(bound)?;
        Ok(subs
            .into_iter()
            .filter(|s| {
                let so = lattice_index(&s.rows, &self.relations).unwrap();
                let q = ord / so;
                // the quotient is simple iff its order is prime
                q > 1 && crate::ring::prime_factors(q) == vec![q]
            })
            .collect())
    }

    /// Quotient module `M/N` together with the projection matrix `P`
    /// (`ngens x ngens'`): the class of `x` maps to `x * P`.
    pub fn quotient(&self, n: &Submodule) -> Result<(FgModule, Vec<Vec<Elt>>)> {
        self.check(n)?;
        let s = snf(&n.rows, self.ngens);
        let kept: Vec<usize> = (0..self.ngens).filter(|&i| s.diag[i] != 1).collect();
        let proj: Vec<Vec<Elt>> = s
            .v
            .iter()
            .map(|row| kept.iter().map(|&j| row[j]).collect())
            .collect();
        let rels: Vec<Vec<Elt>> = kept
            .iter()
            .enumerate()
            .filter(|(_, &j)| s.diag[j] != 0)
            .map(|(i, &j)| {
                let mut row = vec![0; kept.len()];
                row[i] = s.diag[j];
                row
            })
            .collect();
        Ok((FgModule::new(self.ring, kept.len(), &rels), proj))
    }

    /// Map a submodule of `M` containing `N` through the projection of
    /// `quotient(N)`.
    pub fn push_through(&self, proj: &[Vec<Elt>], q: &FgModule, k: &Submodule) -> Result<Submodule> {
        self.check(k)?;
        let gens = matmul(&k.rows, proj);
        Ok(q.submodule(&gens))
    }

    /// Present a submodule `N` as a module in its own right: returns the
    /// presented module, the embedding matrix `E` (`ngens' x ngens`, new
    /// coordinates to ambient), and keeps transport to sublattices exact via
    /// [`FgModule::pull_into_presented`].
    pub fn present_sub(&self, n: &Submodule) -> Result<(FgModule, Vec<Vec<Elt>>)> {
        self.check(n)?;
        let basis = n.rows.clone();
        let rels = preimage(&basis, &self.relations);
        // the presented module carries the same coefficient ring; the ring
        // relations n * e_i are implied (n * basis_j lies in the relation
        // lattice) but FgModule::new adds them canonically anyway
        Ok((FgModule::new(self.ring, basis.len(), &rels), basis))
    }

    /// Express an ambient sublattice `S ⊆ N` in the coordinates of the
    /// presentation of `N` with embedding matrix `e`.
    pub fn pull_into_presented(
        &self,
        presented: &FgModule,
        e: &[Vec<Elt>],
        s: &Submodule,
    ) -> Result<Submodule> {
        self.check(s)?;
        let rows = preimage(e, &s.rows);
        Ok(presented.submodule(&rows))
    }

    /// Exponent: the nonnegative generator of `Ann(M)` lifted to `Z`
    /// (0 when a free summand makes the annihilator zero; 1 for the zero
    /// module).
    pub fn exponent(&self) -> Elt {
        let (torsion, free) = self.invariant_factors();
        if free > 0 {
            return 0;
        }
        torsion.last().copied().unwrap_or(1)
    }

    /// Finitely many submodules `sZ` of the line `Z` that are inequivalent
    /// for the condition "`tZ ⊆ kZ + sZ` implies `Ann(sZ)` small in
    /// `(tZ : Z)`": the zero submodule plus one representative per divisor
    /// class of `lcm(k, t)`.
    pub fn z_line_divisor_candidates(&self, k: Elt, t: Elt) -> Result<Vec<Submodule>> {
        if !self.is_z_line() {
            return Err(Error::UnsupportedBackend);
        }
        if t == 0 {
            return Err(Error::ZeroT);
        }
        let l = if k == 0 {
            t.abs()
        } else {
            matrix::lcm(k, t)
        };
        let mut out = alloc::vec![self.zero_sub()];
        for s in crate::ring::divisors(l) {
            out.push(self.cyclic(&[s]));
        }
        Ok(out)
    }

    pub fn display(&self) -> String {
        let (torsion, free) = self.invariant_factors();
        if torsion.is_empty() && free == 0 {
            return String::from("0");
        }
        let mut parts: Vec<String> = Vec::new();
        for _ in 0..free {
            parts.push(String::from("Z"));
        }
        for d in &torsion {
            parts.push(format!("Z/{d}"));
        }
        parts.join(" x ")
    }

    pub fn display_sub(&self, n: &Submodule) -> String {
        if self.is_zero_sub(n) {
            return String::from("0");
        }
        if self.is_full_sub(n) {
            return String::from("M");
        }
        if self.is_z_line() {
            return format!("{}Z", n.rows[0][0]);
        }
        // minimal generators: basis rows not in the relation lattice
        let gens: Vec<String> = n
            .rows
            .iter()
            .filter(|r| !member(&self.relations, r))
            .map(|r| {
                if self.ngens == 1 {
                    format!("{}", r[0])
                } else {
                    format!("({})", r.iter().map(|x| format!("{x}")).collect::<Vec<_>>().join(","))
                }
            })
            .collect();
        format!("<{}>", gens.join(","))
    }
}

/// Covering relations of a submodule list (edges `i -> j` where `subs[i]`
/// is covered by `subs[j]`), for Hasse-diagram export.
pub fn hasse_edges(m: &FgModule, subs: &[Submodule]) -> Result<Vec<(usize, usize)>> {
    let n = subs.len();
    let mut below = alloc::vec![Vec::new(); n];
    for i in 0..n {
        for j in 0..n {
            if i != j && m.contains(&subs[j], &subs[i])? {
                below[j].push(i);
            }
        }
    }
    let mut edges = Vec::new();
    for j in 0..n {
        for &i in &below[j] {
            let covered = !below[j]
                .iter()
                .any(|&k| k != i && m.contains(&subs[k], &subs[i]).unwrap_or(false));
            if covered {
                edges.push((i, j));
            }
        }
    }
    Ok(edges)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z6_over_z() -> FgModule {
        FgModule::finite(Ring::Z, &[6]).unwrap()
    }

    #[test]
    fn orders_and_factors() {
        let m = z6_over_z();
        assert_eq!(m.order(), Some(6));
        assert_eq!(m.invariant_factors(), (vec![6], 0));
        let m2 = FgModule::finite(Ring::Z, &[2, 8]).unwrap();
        assert_eq!(m2.order(), Some(16));
        let z = FgModule::z_line();
        assert!(z.is_z_line());
        assert_eq!(z.order(), None);
        let zero = FgModule::finite(Ring::Zn(6), &[]).unwrap();
        assert!(zero.is_zero_module());
    }

    #[test]
    fn bad_factors_rejected() {
        assert!(FgModule::finite(Ring::Z, &[4, 6]).is_err()); // 4 does not divide 6
        assert!(FgModule::finite(Ring::Zn(6), &[4]).is_err()); // 4 does not divide 6
        assert!(FgModule::finite(Ring::Zn(6), &[0]).is_err()); // no free part mod 6
        assert!(FgModule::finite(Ring::Z, &[2, 0]).is_ok()); // Z/2 x Z
    }

    #[test]
    fn submodule_lattice_of_z6() {
        let m = z6_over_z();
        let subs = m.submodules(100).unwrap();
        assert_eq!(subs.len(), 4); // 0, <2>, <3>, M
        let orders: Vec<Elt> = subs
            .iter()
            .map(|s| m.sub_order(s).unwrap().unwrap())
            .collect();
        assert_eq!(orders, vec![1, 2, 3, 6]);
    }

    #[test]
    fn annihilators_in_z6() {
        // Ann_Z(<2>) = 3Z and Ann_Z(<3>) = 2Z in Z/6
        let m = z6_over_z();
        let n2 = m.cyclic(&[2]);
        let n3 = m.cyclic(&[3]);
        assert_eq!(m.annihilator(&n2).unwrap(), Ring::Z.ideal(3));
        assert_eq!(m.annihilator(&n3).unwrap(), Ring::Z.ideal(2));
        assert_eq!(m.annihilator_module().unwrap(), Ring::Z.ideal(6));
        assert_eq!(m.annihilator(&m.zero_sub()).unwrap(), Ring::Z.unit_ideal());
    }

    #[test]
    fn annihilators_over_zn() {
        // same module viewed over Z/6: Ann(<2>) = (3) mod 6
        let m = FgModule::finite(Ring::Zn(6), &[6]).unwrap();
        let n2 = m.cyclic(&[2]);
        assert_eq!(m.annihilator(&n2).unwrap(), Ring::Zn(6).ideal(3));
    }

    #[test]
    fn colon_ideals() {
        // M = Z/2 x Z/8 over Z, N = <(0,2)>: (N : M) = ?
        // r*M ⊆ N needs r*(1,0) in N -> r even, and r*(0,1) in N -> r ≡ 0 mod 2
        let m = FgModule::finite(Ring::Z, &[2, 8]).unwrap();
        let n = m.submodule(&[vec![0, 2]]);
        assert_eq!(m.colon_top(&n).unwrap(), Ring::Z.ideal(2));
        // (0 : M) = Ann(M) = 8Z
        assert_eq!(m.colon_top(&m.zero_sub()).unwrap(), Ring::Z.ideal(8));
        // (N : N) = R
        assert_eq!(m.colon(&n, &n).unwrap(), Ring::Z.unit_ideal());
    }

    #[test]
    fn sums_intersections() {
        let m = z6_over_z();
        let n2 = m.cyclic(&[2]);
        let n3 = m.cyclic(&[3]);
        assert_eq!(m.sum(&n2, &n3).unwrap(), m.full_sub());
        assert_eq!(m.intersect(&n2, &n3).unwrap(), m.zero_sub());
        assert!(m.contains(&m.full_sub(), &n2).unwrap());
        assert!(!m.contains(&n2, &n3).unwrap());
    }

    #[test]
    fn elements_enumeration() {
        let m = FgModule::finite(Ring::Z, &[2, 4]).unwrap();
        let elts = m.elements(100).unwrap();
        assert_eq!(elts.len(), 8);
        // all distinct canonical reps, all reduced
        for e in &elts {
            assert_eq!(m.element_canon(e), *e);
        }
        assert!(FgModule::z_line().elements(100).is_err());
    }

    #[test]
    fn quotient_z6_by_2() {
        let m = z6_over_z();
        let n2 = m.cyclic(&[2]);
        let (q, proj) = m.quotient(&n2).unwrap();
        assert_eq!(q.order(), Some(2));
        assert_eq!(q.invariant_factors(), (vec![2], 0));
        // the class of 3 generates the quotient; the class of 2 is zero
        let img3 = matmul(&[vec![3]], &proj);
        assert!(!q.is_zero_sub(&q.cyclic(&img3[0])));
        let img2 = matmul(&[vec![2]], &proj);
        assert!(q.is_zero_sub(&q.cyclic(&img2[0])));
    }

    #[test]
    fn quotient_of_z_line() {
        // Z / 8Z ≅ Z/8
        let z = FgModule::z_line();
        let n = z.cyclic(&[8]);
        let (q, _) = z.quotient(&n).unwrap();
        assert_eq!(q.invariant_factors(), (vec![8], 0));
    }

    #[test]
    fn present_submodule() {
        // N = <(0,2)> inside Z/2 x Z/8 is cyclic of order 4
        let m = FgModule::finite(Ring::Z, &[2, 8]).unwrap();
        let n = m.submodule(&[vec![0, 2]]);
        let (p, e) = m.present_sub(&n).unwrap();
        assert_eq!(p.order(), Some(4));
        assert_eq!(p.invariant_factors(), (vec![4], 0));
        // transport: the zero sublattice pulls back to the zero submodule
        let z = m.pull_into_presented(&p, &e, &m.zero_sub()).unwrap();
        assert!(p.is_zero_sub(&z));
        // the whole of N pulls back to the full presented module
        let f = m.pull_into_presented(&p, &e, &n).unwrap();
        assert!(p.is_full_sub(&f));
    }

    #[test]
    fn maximal_submodules_of_z12() {
        let m = FgModule::finite(Ring::Z, &[12]).unwrap();
        let maxes = m.maximal_submodules(100).unwrap();
        // <2> and <3>, of orders 6 and 4
        assert_eq!(maxes.len(), 2);
        let orders: Vec<Elt> = maxes
            .iter()
            .map(|s| m.sub_order(s).unwrap().unwrap())
            .collect();
        assert_eq!(orders, vec![4, 6]);
    }

    #[test]
    fn z_line_candidates() {
        let z = FgModule::z_line();
        // N = 8Z, T = 2Z: representatives 0 plus divisors of lcm(8,2) = 8
        let c = z.z_line_divisor_candidates(8, 2).unwrap();
        let gens: Vec<Elt> = c.iter().map(|s| s.rows.first().map_or(0, |r| r[0])).collect();
        assert_eq!(gens, vec![0, 1, 2, 4, 8]);
        // N = 0, T = 2Z: {0, Z, 2Z}
        let c0 = z.z_line_divisor_candidates(0, 2).unwrap();
        let gens0: Vec<Elt> = c0.iter().map(|s| s.rows.first().map_or(0, |r| r[0])).collect();
        assert_eq!(gens0, vec![0, 1, 2]);
        assert!(z.z_line_divisor_candidates(8, 0).is_err());
    }

    #[test]
    fn exponent_values() {
        assert_eq!(FgModule::finite(Ring::Z, &[2, 8]).unwrap().exponent(), 8);
        assert_eq!(FgModule::z_line().exponent(), 0);
        assert_eq!(FgModule::finite(Ring::Zn(6), &[]).unwrap().exponent(), 1);
    }

    #[test]
    fn hasse_of_z6() {
        let m = z6_over_z();
        let subs = m.submodules(100).unwrap();
        let edges = hasse_edges(&m, &subs).unwrap();
        // diamond: 0 -> <2>, 0 -> <3>, <2> -> M, <3> -> M
        assert_eq!(edges.len(), 4);
    }

    #[test]
    fn display_round_trips() {
        let m = FgModule::finite(Ring::Z, &[2, 8]).unwrap();
        assert_eq!(m.display(), "Z/2 x Z/8");
        assert_eq!(FgModule::z_line().display(), "Z");
        assert_eq!(m.display_sub(&m.zero_sub()), "0");
        assert_eq!(m.display_sub(&m.full_sub()), "M");
    }
}
