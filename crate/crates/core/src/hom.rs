//! Morphisms between finitely generated modules over the same coefficient
//! ring, plus the standard constructions that transport submodules:
//! quotient maps, direct sums, free powers (`M ⊗ R^k ≅ M^k`) and, over
//! `Z/n`, localization at a multiplicatively closed set.
//!
//! A morphism is stored as the `ngens(source) x ngens(target)` integer
//! matrix sending generator `i` of the source to row `i`, checked once for
//! well-definedness against the source relations.

use crate::error::{Error, Result};
use crate::matrix::{gcd, matmul, member, preimage, Elt};
use crate::module::{FgModule, Submodule};
use crate::ring::Ring;
use alloc::vec;
use alloc::vec::Vec;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Hom {
    pub source: FgModule,
    pub target: FgModule,
    /// `ngens(source) x ngens(target)`; generator `i` maps to row `i`.
    pub matrix: Vec<Vec<Elt>>,
}

impl Hom {
    pub fn new(source: FgModule, target: FgModule, matrix: Vec<Vec<Elt>>) -> Result<Self> {
        if source.ring != target.ring {
            return Err(Error::RingMismatch);
        }
        if matrix.len() != source.ngens || matrix.iter().any(|r| r.len() != target.ngens) {
            return Err(Error::ParentMismatch);
        }
        let zero = target.zero_sub();
        for rel in &source.relations {
            let image = matmul(core::slice::from_ref(rel), &matrix);
            if !member(&zero.rows, &image[0]) {
                return Err(Error::NotWellDefined);
            }
        }
        Ok(Hom {
            source,
            target,
            matrix,
        })
    }

    pub fn identity(m: &FgModule) -> Self {
        let matrix = (0..m.ngens)
            .map(|i| {
                let mut row = vec![0; m.ngens];
                row[i] = 1;
                row
            })
            .collect();
        Hom {
            source: m.clone(),
            target: m.clone(),
            matrix,
        }
    }

    /// Multiplication by a ring element as an endomorphism.
    pub fn scaling(m: &FgModule, r: Elt) -> Self {
        let matrix = (0..m.ngens)
            .map(|i| {
                let mut row = vec![0; m.ngens];
                row[i] = r;
                row
            })
            .collect();
        Hom {
            source: m.clone(),
            target: m.clone(),
            matrix,
        }
    }

    /// The projection `M -> M/N`.
    pub fn quotient_map(m: &FgModule, n: &Submodule) -> Result<(FgModule, Hom)> {
        let (q, proj) = m.quotient(n)?;
        let map = Hom {
            source: m.clone(),
            target: q.clone(),
            matrix: proj,
        };
        Ok((q, map))
    }

    pub fn apply(&self, v: &[Elt]) -> Result<Vec<Elt>> {
        if v.len() != self.source.ngens {
            return Err(Error::ElementOutOfRange);
        }
        let image = matmul(core::slice::from_ref(&v.to_vec()), &self.matrix);
        Ok(self.target.element_canon(&image[0]))
    }

    /// Image of a submodule of the source.
    pub fn push(&self, n: &Submodule) -> Result<Submodule> {
        if n.ngens != self.source.ngens {
            return Err(Error::ParentMismatch);
        }
        Ok(self.target.submodule(&matmul(&n.rows, &self.matrix)))
    }

    /// Full preimage of a submodule of the target.
    pub fn preimage_sub(&self, k: &Submodule) -> Result<Submodule> {
        if k.ngens != self.target.ngens {
            return Err(Error::ParentMismatch);
        }
        Ok(self.source.submodule(&preimage(&self.matrix, &k.rows)))
    }

    pub fn kernel(&self) -> Submodule {
        let rows = preimage(&self.matrix, &self.target.relations);
        self.source.submodule(&rows)
    }

    pub fn image(&self) -> Submodule {
        self.target.submodule(&self.matrix)
    }

    pub fn is_epi(&self) -> bool {
        self.image() == self.target.full_sub()
    }

    pub fn is_mono(&self) -> bool {
        self.source.is_zero_sub(&self.kernel())
    }

    /// `self` followed by `g`.
    pub fn compose(&self, g: &Hom) -> Result<Hom> {
        if self.target != g.source {
            return Err(Error::ParentMismatch);
        }
        Ok(Hom {
            source: self.source.clone(),
            target: g.target.clone(),
            matrix: matmul(&self.matrix, &g.matrix),
        })
    }
}

/// `f` is a sa-small epimorphism: `f` epi and `Ker(f) ≪^sa M`.
pub fn is_sa_small_epi(f: &Hom) -> Result<crate::predicates::Verdict> {
    if !f.is_epi() {
        return Err(Error::NotEpi);
    }
    crate::predicates::is_sa_small(&f.source, &f.kernel())
}

/// `f` is a T-sa-small epimorphism: `f` epi and `Ker(f) ≪_T^sa M`.
pub fn is_t_sa_small_epi(
    f: &Hom,
    t: &Submodule,
    strict: bool,
) -> Result<crate::predicates::Verdict> {
    if !f.is_epi() {
        return Err(Error::NotEpi);
    }
    crate::predicates::is_t_sa_small(&f.source, &f.kernel(), t, strict)
}

/// `M1 ⊕ M2` with the canonical injections and projections.
pub struct DirectSum {
    pub module: FgModule,
    pub inj1: Hom,
    pub inj2: Hom,
    pub proj1: Hom,
    pub proj2: Hom,
}

impl DirectSum {
    /// `N1 ⊕ N2` inside `M1 ⊕ M2`.
    pub fn sub_direct_sum(&self, n1: &Submodule, n2: &Submodule) -> Result<Submodule> {
        let a = self.inj1.push(n1)?;
        let b = self.inj2.push(n2)?;
        self.module.sum(&a, &b)
    }
}

pub fn direct_sum(a: &FgModule, b: &FgModule) -> Result<DirectSum> {
    if a.ring != b.ring {
        return Err(Error::RingMismatch);
    }
    let (ka, kb) = (a.ngens, b.ngens);
    let mut rels: Vec<Vec<Elt>> = Vec::new();
    for r in &a.relations {
        let mut row = r.clone();
        row.extend(core::iter::repeat(0).take(kb));
        rels.push(row);
    }
    for r in &b.relations {
        let mut row = vec![0; ka];
        row.extend(r.iter().copied());
        rels.push(row);
    }
    let module = FgModule::new(a.ring, ka + kb, &rels);
    let block = |rows: usize, cols: usize, shift: usize| -> Vec<Vec<Elt>> {
        (0..rows)
            .map(|i| {
                let mut row = vec![0; cols];
                row[i + shift] = 1;
                row
            })
            .collect()
    };
    let transpose = |m: &[Vec<Elt>]| -> Vec<Vec<Elt>> {
        let cols = m.first().map_or(0, Vec::len);
        (0..cols).map(|j| m.iter().map(|r| r[j]).collect()).collect()
    };
    let i1 = block(ka, ka + kb, 0);
    let i2 = block(kb, ka + kb, ka);
    let ds = DirectSum {
        inj1: Hom {
            source: a.clone(),
            target: module.clone(),
            matrix: i1.clone(),
        },
        inj2: Hom {
            source: b.clone(),
            target: module.clone(),
            matrix: i2.clone(),
        },
        proj1: Hom {
            source: module.clone(),
            target: a.clone(),
            matrix: transpose(&i1),
        },
        proj2: Hom {
            source: module.clone(),
            target: b.clone(),
            matrix: transpose(&i2),
        },
        module,
    };
    Ok(ds)
}

/// `M ⊗ R^k`, realised as `M^k` on `k` blocks of the original generators.
pub fn power(m: &FgModule, k: usize) -> FgModule {
    let g = m.ngens;
    let mut rels: Vec<Vec<Elt>> = Vec::new();
    for j in 0..k {
        for r in &m.relations {
            let mut row = vec![0; g * k];
            row[j * g..(j + 1) * g].copy_from_slice(r);
            rels.push(row);
        }
    }
    FgModule::new(m.ring, g * k, &rels)
}

/// Transport `N ≤ M` to `N ⊗ R^k = N^k ≤ M^k` (free modules are flat, so
/// the induced map on submodules is injective in each block).
pub fn power_sub(m: &FgModule, k: usize, pw: &FgModule, n: &Submodule) -> Result<Submodule> {
    if n.ngens != m.ngens || pw.ngens != m.ngens * k {
        return Err(Error::ParentMismatch);
    }
    let g = m.ngens;
    let mut rows: Vec<Vec<Elt>> = Vec::new();
    for j in 0..k {
        for r in &n.rows {
            let mut row = vec![0; g * k];
            row[j * g..(j + 1) * g].copy_from_slice(r);
            rows.push(row);
        }
    }
    Ok(pw.submodule(&rows))
}

/// `S^{-1}M` for a multiplicatively closed subset of `Z/n`, realised as the
/// quotient `M/K_S` over the smaller ring `Z/d`, where
/// `K_S = { x : s x = 0 for some s in S }` and `d` is `n` with every prime
/// dividing an element of `S` removed.
pub struct Localization {
    pub ring: Ring,
    pub module: FgModule,
    /// `K_S` as a submodule of the source.
    pub kernel: Submodule,
    source: FgModule,
    proj: Vec<Vec<Elt>>,
}

impl Localization {
    /// `N ↦ (N + K_S)/K_S` as a submodule of the localized module.
    pub fn transport(&self, n: &Submodule) -> Result<Submodule> {
        if n.ngens != self.source.ngens {
            return Err(Error::ParentMismatch);
        }
        Ok(self.module.submodule(&matmul(&n.rows, &self.proj)))
    }
}

pub fn localize(m: &FgModule, s_gens: &[Elt]) -> Result<Localization> {
    let n = match m.ring {
        Ring::Zn(n) => n,
        Ring::Z => return Err(Error::UnsupportedBackend),
    };
    // close the generating set under multiplication mod n; a multiplicative
    // set containing 0 does not give a localization here
    let mut closure: Vec<Elt> = vec![1];
    let mut frontier = vec![1];
    while let Some(x) = frontier.pop() {
        for &s in s_gens {
            let y = (x * (s.rem_euclid(n))) % n;
            if !closure.contains(&y) {
                closure.push(y);
                frontier.push(y);
            }
        }
    }
    if closure.contains(&0) {
        return Err(Error::NotMcs);
    }
    // every s in S acts invertibly after killing the primes it shares with
    // n; one stable power of the product of the generators cuts out K_S
    let g: Elt = s_gens.iter().fold(1, |acc, &s| (acc * s.rem_euclid(n)) % n);
    let mut d = n;
    loop {
        let c = gcd(d, g);
        if c == 1 {
            break;
        }
        d /= c;
    }
    let mut w: Elt = 1;
    let mut bits = n;
    while bits > 0 {
        w = (w * g.rem_euclid(n)) % n;
        bits /= 2;
    }
    let kernel = Hom::scaling(m, w).kernel();
    let (q, proj) = m.quotient(&kernel)?;
    debug_assert!(
        d > 1 || q.is_zero_module(),
        "all primes inverted only in the zero localization"
    );
    let module = FgModule::new(Ring::Zn(d), q.ngens, &q.relations);
    debug_assert_eq!(module.order(), q.order(), "exponent of M/K_S divides d");
    Ok(Localization {
        ring: Ring::Zn(d),
        module,
        kernel,
        source: m.clone(),
        proj,
    })
}
