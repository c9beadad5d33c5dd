//! The coefficient rings `Z` and `Z/n` and their ideal lattices.
//!
//! Every ideal is principal and is stored by a canonical generator: for `Z`
//! a generator `d >= 0` (zero ideal is `d = 0`); for `Z/n` a divisor `d` of
//! `n` with `1 <= d <= n`, where `d = n` is the zero ideal (since `(n) = (0)`
//! in `Z/n`) and `d = 1` is the unit ideal.

use crate::error::{Error, Result};
use crate::matrix::{gcd, lcm, Elt};
use alloc::string::String;
use alloc::vec::Vec;
use alloc::{format, vec};

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Ring {
    Z,
    /// The quotient ring `Z/n`, `n >= 1`.
    Zn(Elt),
}

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Ideal {
    pub ring: Ring,
    /// Canonical generator (see module docs).
    pub gen: Elt,
}

pub fn divisors(n: Elt) -> Vec<Elt> {
    debug_assert!(n >= 1);
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n % d == 0 {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    large.reverse();
    small.extend(large);
    small
}

pub fn prime_factors(n: Elt) -> Vec<Elt> {
    debug_assert!(n >= 1);
    let mut out = Vec::new();
    let mut n = n;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            out.push(p);
            while n % p == 0 {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Largest squarefree divisor (radical) of `n >= 1`.
pub fn squarefree_part(n: Elt) -> Elt {
    prime_factors(n).iter().product::<Elt>().max(1)
}

impl Ring {
    pub fn order(&self) -> Option<Elt> {
        match self {
            Ring::Z => None,
            Ring::Zn(n) => Some(*n),
        }
    }

    pub fn ideal(&self, g: Elt) -> Ideal {
        let gen = match self {
            Ring::Z => g.abs(),
            Ring::Zn(n) => {
                let r = g.rem_euclid(*n);
                if r == 0 {
                    *n
                } else {
                    gcd(r, *n)
                }
            }
        };
        Ideal { ring: *self, gen }
    }

    pub fn zero_ideal(&self) -> Ideal {
        self.ideal(0)
    }

    pub fn unit_ideal(&self) -> Ideal {
        self.ideal(1)
    }

    /// All ideals, smallest generator first (i.e. largest ideal first).
    /// Errors for `Z`, whose ideal lattice is infinite.
    pub fn ideal_lattice(&self) -> Result<Vec<Ideal>> {
        match self {
            Ring::Z => Err(Error::InfiniteLattice),
            Ring::Zn(n) => Ok(divisors(*n)
                .into_iter()
                .map(|d| Ideal { ring: *self, gen: d })
                .collect()),
        }
    }

    /// Jacobson radical: for `Z/n` the ideal generated by the radical of
    /// `n`; for `Z` the zero ideal.
    pub fn jacobson_radical(&self) -> Ideal {
        match self {
            Ring::Z => self.zero_ideal(),
            Ring::Zn(n) => self.ideal(squarefree_part(*n)),
        }
    }

    pub fn is_semisimple(&self) -> bool {
        match self {
            Ring::Z => false,
            Ring::Zn(n) => squarefree_part(*n) == *n || *n == 1,
        }
    }

    pub fn is_local(&self) -> bool {
        match self {
            Ring::Z => false,
            Ring::Zn(n) => *n == 1 || prime_factors(*n).len() == 1,
        }
    }

    pub fn maximal_ideals(&self) -> Result<Vec<Ideal>> {
        match self {
            Ring::Z => Err(Error::InfiniteLattice),
            Ring::Zn(n) => {
                if *n == 1 {
                    return Ok(Vec::new());
                }
                Ok(prime_factors(*n)
                    .into_iter()
                    .map(|p| self.ideal(p))
                    .collect())
            }
        }
    }

    pub fn display(&self) -> String {
        match self {
            Ring::Z => String::from("Z"),
            Ring::Zn(n) => format!("Z/{n}"),
        }
    }
}

impl Ideal {
    pub fn is_zero(&self) -> bool {
        match self.ring {
            Ring::Z => self.gen == 0,
            Ring::Zn(n) => self.gen == n,
        }
    }

    pub fn is_unit(&self) -> bool {
        self.gen == 1
    }

    fn same_ring(&self, other: &Ideal) -> Result<()> {
        if self.ring == other.ring {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    pub fn sum(&self, other: &Ideal) -> Result<Ideal> {
        self.same_ring(other)?;
        Ok(self.ring.ideal(gcd(self.gen, other.gen)))
    }

    pub fn intersect(&self, other: &Ideal) -> Result<Ideal> {
        self.same_ring(other)?;
        match self.ring {
            Ring::Z => Ok(self.ring.ideal(lcm(self.gen, other.gen))),
            Ring::Zn(n) => {
                let a = if self.gen == n { 0 } else { self.gen };
                let b = if other.gen == n { 0 } else { other.gen };
                Ok(self.ring.ideal(lcm(a, b)))
            }
        }
    }

    pub fn product(&self, other: &Ideal) -> Result<Ideal> {
        self.same_ring(other)?;
        match self.ring {
            Ring::Z => Ok(self.ring.ideal(self.gen.checked_mul(other.gen).expect("overflow"))),
            Ring::Zn(n) => {
                let a = if self.gen == n { 0 } else { self.gen };
                let b = if other.gen == n { 0 } else { other.gen };
                Ok(self.ring.ideal(a.checked_mul(b).expect("overflow").rem_euclid(n)))
            }
        }
    }

    /// Colon ideal `(self : other) = { r : r * other ⊆ self }`.
    pub fn colon(&self, other: &Ideal) -> Result<Ideal> {
        self.same_ring(other)?;
        let norm = |i: &Ideal| match i.ring {
            Ring::Z => i.gen,
            Ring::Zn(n) => {
                if i.gen == n {
                    0
                } else {
                    i.gen
                }
            }
        };
        let a = norm(self);
        let b = norm(other);
        // In Z (lifting for Z/n first): (a : b) = (a / gcd(a,b)),
        // with (a : 0) = (1)... no: (a : 0) = R. Handle via cases.
        match self.ring {
            Ring::Z => {
                if b == 0 {
                    return Ok(self.ring.unit_ideal());
                }
                if a == 0 {
                    return Ok(self.ring.zero_ideal());
                }
                Ok(self.ring.ideal(a / gcd(a, b)))
            }
            Ring::Zn(n) => {
                // { r mod n : (b) r ⊆ (a, n) = (gcd(a,n)) } with a | n here.
                // r * b ≡ 0 mod a  <=>  a | r*b  <=>  (a/gcd(a,b)) | r
                let a = if a == 0 { n } else { gcd(a, n) };
                let b = gcd(b, n);
                if b == 0 {
                    return Ok(self.ring.unit_ideal());
                }
                Ok(self.ring.ideal(a / gcd(a, b)))
            }
        }
    }

    pub fn contains(&self, other: &Ideal) -> Result<bool> {
        self.same_ring(other)?;
        Ok(self.sum(other)? == *self)
    }

    pub fn contains_element(&self, r: Elt) -> bool {
        match self.ring {
            Ring::Z => {
                if self.gen == 0 {
                    r == 0
                } else {
                    r % self.gen == 0
                }
            }
            Ring::Zn(_) => r.rem_euclid(self.gen) == 0 || self.gen == 0,
        }
    }

    /// Is this ideal small (superfluous) in the ring: `I + J = R` forces
    /// `J = R`? In `Z/n` that means every generator of `I` lies in `J(Z/n)`;
    /// in `Z` only the zero ideal is small.
    pub fn is_small(&self) -> bool {
        match self.ring {
            Ring::Z => self.gen == 0,
            Ring::Zn(n) => {
                if n == 1 {
                    return true;
                }
                // small <=> contained in Jacobson radical (R is semiperfect)
                self.gen % squarefree_part(n) == 0
            }
        }
    }

    /// Is this ideal small inside the ideal `j` (as a submodule of the
    /// R-module `j`)? A non-contained ideal is simply not small (the
    /// negative verdict, not an error); the zero ideal is small in every
    /// ideal including the zero ideal.
    pub fn is_small_in(&self, j: &Ideal) -> Result<bool> {
        self.same_ring(j)?;
        if self.is_zero() {
            return Ok(true);
        }
        if !j.contains(self)? {
            return Ok(false);
        }
        match self.ring {
            Ring::Z => Ok(false), // nonzero ideal of Z is never small in any dZ ≅ Z
            Ring::Zn(n) => {
                // brute force over the (finitely many) subideals of j
                for d in divisors(n) {
                    let k = self.ring.ideal(d);
                    if j.contains(&k)? && self.sum(&k)? == *j && k != *j {
                        return Ok(false);
                    }
                }
                Ok(true)
            }
        }
    }

    /// Prime radical `rad(I)`: intersection of primes containing `I`.
    pub fn radical(&self) -> Ideal {
        match self.ring {
            Ring::Z => {
                if self.gen == 0 {
                    self.ring.zero_ideal()
                } else {
                    self.ring.ideal(squarefree_part(self.gen))
                }
            }
            Ring::Zn(_) => self.ring.ideal(squarefree_part(self.gen)),
        }
    }

    pub fn is_prime(&self) -> bool {
        match self.ring {
            Ring::Z => self.gen == 0 || prime_factors(self.gen) == vec![self.gen],
            // the primes of Z/n are exactly (p) for primes p | n
            Ring::Zn(_) => self.is_maximal(),
        }
    }

    pub fn is_maximal(&self) -> bool {
        match self.ring {
            Ring::Z => self.gen > 1 && prime_factors(self.gen) == vec![self.gen],
            Ring::Zn(n) => {
                self.gen > 1 && self.gen <= n && prime_factors(self.gen) == vec![self.gen]
            }
        }
    }

    /// Radical generated inside the ring (alias used at call sites that
    /// mirror the `rad(I)` notation).
    pub fn rad(&self) -> Ideal {
        self.radical()
    }

    pub fn display(&self) -> String {
        match self.ring {
            Ring::Z => {
                if self.gen == 0 {
                    String::from("0")
                } else if self.gen == 1 {
                    String::from("Z")
                } else {
                    format!("{}Z", self.gen)
                }
            }
            Ring::Zn(n) => {
                if self.gen == n {
                    format!("(0) mod {n}")
                } else {
                    format!("({}) mod {n}", self.gen)
                }
            }
        }
    }
}

/// Ring-level classification flags; element lists are only available for
/// the finite rings.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RingPredicates {
    pub is_semisimple: bool,
    pub is_simple: bool,
    pub is_local: bool,
    pub is_vnr: bool,
    pub is_domain: bool,
    pub is_field: bool,
    pub idempotents: Option<Vec<Elt>>,
    pub units: Option<Vec<Elt>>,
    pub zero_divisors: Option<Vec<Elt>>,
}

pub fn ring_predicates(ring: Ring) -> RingPredicates {
    match ring {
        Ring::Z => RingPredicates {
            is_semisimple: false,
            is_simple: false,
            is_local: false,
            is_vnr: false,
            is_domain: true,
            is_field: false,
            idempotents: None,
            units: None,
            zero_divisors: None,
        },
        Ring::Zn(n) => {
            let is_prime = n > 1 && prime_factors(n) == alloc::vec![n];
            let squarefree = squarefree_part(n) == n;
            let idempotents: Vec<Elt> = (0..n).filter(|&e| (e * e) % n == e).collect();
            let units: Vec<Elt> = (0..n).filter(|&u| gcd(u, n) == 1).collect();
            let zero_divisors: Vec<Elt> = (0..n)
                .filter(|&z| (0..n).any(|y| y != 0 && (z * y) % n == 0))
                .collect();
            RingPredicates {
                is_semisimple: squarefree,
                is_simple: is_prime,
                is_local: ring.is_local(),
                is_vnr: squarefree,
                is_domain: is_prime,
                is_field: is_prime,
                idempotents: Some(idempotents),
                units: Some(units),
                zero_divisors: Some(zero_divisors),
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ring_predicate_records() {
        let p6 = ring_predicates(Ring::Zn(6));
        assert!(p6.is_semisimple && p6.is_vnr && !p6.is_local && !p6.is_simple);
        assert_eq!(p6.idempotents, Some(alloc::vec![0, 1, 3, 4]));
        let p8 = ring_predicates(Ring::Zn(8));
        assert!(p8.is_local && !p8.is_semisimple);
        let pz = ring_predicates(Ring::Z);
        assert!(pz.is_domain && !pz.is_semisimple && pz.idempotents.is_none());
        let p5 = ring_predicates(Ring::Zn(5));
        assert!(p5.is_field && p5.is_simple && p5.is_domain && p5.is_local);
        // zero divisors of Z/6 include 0 per the "exists nonzero y with zy=0"
        // scan: {0,2,3,4}
        assert_eq!(p6.zero_divisors, Some(alloc::vec![0, 2, 3, 4]));
    }

    #[test]
    fn small_not_contained_is_false() {
        // the ideal 4Z is not small in the zero ideal (not even contained)
        assert!(!Ring::Z.ideal(4).is_small_in(&Ring::Z.ideal(0)).unwrap());
        // but the zero ideal is small in the zero ideal
        assert!(Ring::Z.ideal(0).is_small_in(&Ring::Z.ideal(0)).unwrap());
        // 0 = Ann(2Z) is small in 2Z
        assert!(Ring::Z.ideal(0).is_small_in(&Ring::Z.ideal(2)).unwrap());
    }

    #[test]
    fn canonical_generators() {
        let z6 = Ring::Zn(6);
        assert_eq!(z6.ideal(4).gen, 2); // (4) = (2) in Z/6
        assert_eq!(z6.ideal(0).gen, 6);
        assert_eq!(z6.ideal(5).gen, 1); // unit
        assert_eq!(Ring::Z.ideal(-3).gen, 3);
    }

    #[test]
    fn lattice_of_z6() {
        let z6 = Ring::Zn(6);
        let l = z6.ideal_lattice().unwrap();
        let gens: Vec<Elt> = l.iter().map(|i| i.gen).collect();
        assert_eq!(gens, vec![1, 2, 3, 6]);
    }

    #[test]
    fn sum_intersect_product() {
        let z12 = Ring::Zn(12);
        let a = z12.ideal(4);
        let b = z12.ideal(6);
        assert_eq!(a.sum(&b).unwrap(), z12.ideal(2));
        assert_eq!(a.intersect(&b).unwrap(), z12.ideal(12)); // lcm(4,6)=12 -> zero ideal
        assert_eq!(a.product(&b).unwrap(), z12.ideal(24)); // = (0) in Z/12
        let c = Ring::Z.ideal(4);
        let d = Ring::Z.ideal(6);
        assert_eq!(c.intersect(&d).unwrap(), Ring::Z.ideal(12));
    }

    #[test]
    fn colon_ideals() {
        let z = Ring::Z;
        // (4 : 6) = { r : 6r in 4Z } = 2Z
        assert_eq!(z.ideal(4).colon(&z.ideal(6)).unwrap(), z.ideal(2));
        assert_eq!(z.ideal(0).colon(&z.ideal(3)).unwrap(), z.ideal(0));
        assert_eq!(z.ideal(5).colon(&z.ideal(0)).unwrap(), z.unit_ideal());
        let z8 = Ring::Zn(8);
        // ((0) : (2)) in Z/8 = (4)
        assert_eq!(z8.ideal(0).colon(&z8.ideal(2)).unwrap(), z8.ideal(4));
        // brute-force cross-check over all pairs in small rings
        for n in 2..=12 {
            let r = Ring::Zn(n);
            for a in divisors(n) {
                for b in divisors(n) {
                    let fast = r.ideal(a).colon(&r.ideal(b)).unwrap();
                    // slow: all x in Z/n with x*b ≡ 0 mod gcd(a, n) ... i.e.
                    // gather {x : for all multiples, a | x*b'} via elements
                    let mut gens = alloc::vec![0];
                    for x in 0..n {
                        let mut ok = true;
                        for y in 0..n {
                            if y % b == 0 && (x * y).rem_euclid(n) % a != 0 {
                                ok = false;
                                break;
                            }
                        }
                        if ok {
                            gens.push(x);
                        }
                    }
                    let slow = r.ideal(gens.iter().fold(0, |acc, &g| gcd(acc, g)));
                    assert_eq!(fast, slow, "colon mismatch n={n} a={a} b={b}");
                }
            }
        }
    }

    #[test]
    fn jacobson_and_small() {
        let z12 = Ring::Zn(12);
        assert_eq!(z12.jacobson_radical(), z12.ideal(6));
        assert!(z12.ideal(6).is_small());
        assert!(!z12.ideal(4).is_small());
        assert!(z12.ideal(0).is_small());
        assert!(!Ring::Z.ideal(2).is_small());
        assert!(Ring::Z.ideal(0).is_small());
        // brute-force cross-check of is_small against the definition
        for n in 2..=16 {
            let r = Ring::Zn(n);
            for d in divisors(n) {
                let i = r.ideal(d);
                let mut small = true;
                for e in divisors(n) {
                    let j = r.ideal(e);
                    if i.sum(&j).unwrap().is_unit() && !j.is_unit() {
                        small = false;
                        break;
                    }
                }
                assert_eq!(i.is_small(), small, "is_small mismatch n={n} d={d}");
            }
        }
    }

    #[test]
    fn small_in_ideal() {
        let z8 = Ring::Zn(8);
        // (4) is small in (2) within Z/8: (2)/(4) has the only complement (4) itself
        assert!(z8.ideal(4).is_small_in(&z8.ideal(2)).unwrap());
        let z6 = Ring::Zn(6);
        // (0) small in anything
        assert!(z6.ideal(0).is_small_in(&z6.ideal(2)).unwrap());
        // (2) is not small in (2) unless (2) = 0
        assert!(!z6.ideal(2).is_small_in(&z6.ideal(2)).unwrap());
        assert!(!Ring::Z.ideal(4).is_small_in(&Ring::Z.ideal(2)).unwrap());
    }

    #[test]
    fn semisimple_local() {
        assert!(Ring::Zn(6).is_semisimple());
        assert!(!Ring::Zn(12).is_semisimple());
        assert!(Ring::Zn(8).is_local());
        assert!(!Ring::Zn(6).is_local());
        assert!(!Ring::Z.is_local());
    }

    #[test]
    fn maximal_and_radical() {
        let z12 = Ring::Zn(12);
        let ms = z12.maximal_ideals().unwrap();
        assert_eq!(ms, vec![z12.ideal(2), z12.ideal(3)]);
        assert_eq!(z12.ideal(4).radical(), z12.ideal(2));
        assert_eq!(Ring::Z.ideal(12).radical(), Ring::Z.ideal(6));
        assert_eq!(Ring::Z.ideal(0).radical(), Ring::Z.ideal(0));
    }
}
