//! The statement registry: every claimed result is a [`Statement`] whose
//! `run` function quantifies the claim over the corpus and reports
//! verified / falsified / vacuous with replayable counterexamples.
//!
//! Encoding conventions, applied uniformly:
//!  * ids carry `.as-stated` / suffix variants when the literal statement
//!    and the reading used by its own proof differ; both are checked.
//!  * `.strict-X` variants re-run a claim under the literal nonzero-X
//!    reading of T-sa-smallness (the default reading quantifies the
//!    comparison submodule X over the whole lattice, including 0).
//!  * statements whose hypotheses provably cannot fire on this corpus are
//!    flagged `expected_vacuous` and asserted vacuous rather than dropped.
//!  * heavy statements (triple-or-more quantifiers over sublattices)
//!    restrict to contexts with a bounded submodule count; skipped
//!    contexts are counted in the report.

use super::*;
use crate::ring::ring_predicates;

/// Submodule-count bounds for the heavier quantifier shapes.
const B_PAIRS: usize = 200;
const B_MEET: usize = 64;
const B_REL: usize = 64;
const B_TRIPLE: usize = 40;
const B_LOC: usize = 64;
const B_SUM: usize = 100;

/// Index of `N1 ∩ N2`: the top of the common downset.
fn meet(c: &Ctx, i: usize, j: usize) -> usize {
    let both = c.contains[i].and(&c.contains[j]);
    both
        .iter_ones()
        .max_by_key(|&k| c.sub_order[k])
        .expect("zero submodule is a common lower bound")
}

/// `N ∩ K = 0`?
fn meet_is_zero(c: &Ctx, i: usize, j: usize) -> bool {
    c.contains[i].and(&c.contains[j]).count() == 1
}

/// Completely irreducible: the intersection of all strict supersets is a
/// strict superset (equivalently, a unique cover exists); `M` counts.
fn ci_flags(c: &Ctx) -> Vec<bool> {
    (0..c.nsubs())
        .map(|i| {
            if i == c.full {
                return true;
            }
            let mut acc = BitVec::filled(c.nsubs());
            for j in 0..c.nsubs() {
                if j != i && c.le(i, j) {
                    acc = acc.and(&c.contains[j]);
                }
            }
            acc != c.contains[i]
        })
        .collect()
}

fn essential_flags(c: &Ctx) -> Vec<bool> {
    (0..c.nsubs())
        .map(|l| (0..c.nsubs()).all(|x| x == c.zero || !meet_is_zero(c, l, x)))
        .collect()
}

/// The submodule of the ring-as-module context presenting an ideal.
fn ideal_sub(r: &Ctx, i: &Ideal) -> Result<usize> {
    r.idx_of(&r.m.cyclic(&[i.gen]))
}

/// The ideal presented by a submodule of the ring-as-module context.
fn sub_ideal(r: &Ctx, i: usize) -> Ideal {
    r.m.ring.ideal(r.subs[i].rows[0][0])
}

fn table<'a>(c: &'a Ctx, strict: bool) -> &'a [BitVec] {
    if strict {
        &c.tsa_strict
    } else {
        &c.tsa
    }
}

/// Is the whole lattice T-sa-small (including `M` itself)?
fn is_hollow(c: &Ctx, t: usize, strict: bool) -> bool {
    table(c, strict)[t].count() == c.nsubs()
}

fn sa_hollow(c: &Ctx) -> bool {
    (0..c.nsubs()).all(|i| i == c.full || c.sa[i])
}

fn ring_ctxs<'a>(co: &'a Corpus) -> impl Iterator<Item = &'a Ctx> {
    co.ring_ctx.iter().map(|&(_, i)| &co.ctxs[i])
}

fn nonzero(c: &Ctx) -> bool {
    c.sub_order[c.full] > 1
}

// ---------------------------------------------------------------------
// definitional notes
// ---------------------------------------------------------------------

fn note_i(co: &Corpus) -> Result<Report> {
    let mut a = Acc::new();
    for c in &co.ctxs {
        for n in 0..c.nsubs() {
            a.hit(c.tsa[c.full].get(n) == c.sa[n], || {
                format!("{}: N = {}", c.tag(), c.describe(n))
            });
        }
    }
    Ok(a.finish("NOTE.i", "T = M reduces T-sa-small to sa-small"))
}

fn note_ii(co: &Corpus) -> Result<Report> {
    let mut a = Acc::new();
    for c in &co.ctxs {
        if !nonzero(c) {
            a.miss_many(c.nsubs() as u64);
            continue;
        }
        for n in 0..c.nsubs() {
            a.hit(!c.tsa[c.zero].get(n), || {
                format!("{}: N = {}", c.tag(), c.describe(n))
            });
        }
    }
    Ok(a.finish("NOTE.ii", "a nonzero module has no 0-sa-small submodule"))
}

fn note_iii(co: &Corpus) -> Result<Report> {
    let mut a = Acc::new();
    for c in &co.ctxs {
        for t in 0..c.nsubs() {
            if t == c.zero {
                a.miss_many(c.nsubs() as u64);
                continue;
            }
            for n in 0..c.nsubs() {
                if c.tsa[t].get(n) {
                    a.hit(!c.le(t, n), || {
                        format!("{}: T = {}, N = {}", c.tag(), c.describe(t), c.describe(n))
                    });
                } else {
                    a.miss();
                }
            }
        }
    }
    Ok(a.finish("NOTE.iii", "for T ≠ 0, a T-sa-small N cannot contain T"))
}

fn note_iii_max(co: &Corpus) -> Result<Report> {
    let mut a = Acc::new();
    for c in &co.ctxs {
        for t in 0..c.nsubs() {
            if t == c.zero || t == c.full {
                a.miss();
                continue;
            }
            let ok = !c.maximal.is_empty()
                && c.maximal.iter().all(|&mx| !c.le(t, mx) || !c.tsa[t].get(mx));
            a.hit(ok, || format!("{}: T = {}", c.tag(), c.describe(t)));
        }
    }
    Ok(a.finish(
        "NOTE.iii.max",
        "a maximal submodule containing a nonzero proper T is never T-sa-small",
    ))
}

// ---------------------------------------------------------------------
// T-sa-small basics
// ---------------------------------------------------------------------

fn t23_i(co: &Corpus) -> Result<Report> {
    let mut a = Acc::new();
    for c in &co.ctxs {
        for t in 0..c.nsubs() {
            for n in 0..c.nsubs() {
                if c.tsa[t].get(n) {
                    a.hit(c.sa[n], || {
                        format!("{}: T = {}, N = {}", c.tag(), c.describe(t), c.describe(n))
                    });
                } else {
                    a.miss();
                }
            }
        }
    }
    // line slice: every T-sa-small kZ ≤ Z is sa-small
    let z = FgModule::z_line();
    for t in 1..=co.cfg.z_divisor_bound {
        for k in 0..=co.cfg.z_divisor_bound {
            if predicates::is_t_sa_small(&z, &z.cyclic(&[k]), &z.cyclic(&[t]), false)?.is_holds() {
                a.hit(
                    predicates::is_sa_small(&z, &z.cyclic(&[k]))?.is_holds(),
                    || format!("Z over Z: T = {t}Z, N = {k}Z"),
                );
            } else {
                a.miss();
            }
        }
    }
    Ok(a.finish("T2.3.i", "every T-sa-small submodule is sa-small"))
}

fn t23_ii(co: &Corpus) -> Result<Report> {
    let mut a = Acc::new();
    for c in &co.ctxs {
        if !(nonzero(c) && c.is_faithful && c.is_prime) {
            a.miss_many(c.nsubs() as u64);
            continue;
        }
        for t in 0..c.nsubs() {
            let bad = (0..c.nsubs()).find(|&n| !c.tsa[t].get(n));
            a.hit(bad.is_none(), || {
                format!(
                    "{}: T = {}, N = {} is not T-sa-small",
                    c.tag(),
                    c.describe(t),
                    c.describe(bad.unwrap())
                )
            });
        }
    }
    Ok(a.finish(
        "T2.3.ii",
        "a faithful prime module is T-sa-small hollow for every T (default reading: \
         refuted by X = 0 whenever T ⊆ N)",
    ))
}

fn t23_ii_strict(co: &Corpus) -> Result<Report> {
    let mut a = Acc::new();
    for c in &co.ctxs {
        if !(nonzero(c) && c.is_faithful && c.is_prime) {
            a.miss_many(c.nsubs() as u64);
            continue;
        }
        for t in 0..c.nsubs() {
            let bad = (0..c.nsubs()).find(|&n| !c.tsa_strict[t].get(n));
            a.hit(bad.is_none(), || {
                format!(
                    "{}: T = {}, N = {} is not T-sa-small",
                    c.tag(),
                    c.describe(t),
                    c.describe(bad.unwrap())
                )
            });
        }
    }
    Ok(a.finish(
        "T2.3.ii.strict-X",
        "a faithful prime module is T-sa-small hollow for every T (nonzero-X reading)",
    ))
}

fn t23_iii(co: &Corpus) -> Result<Report> {
    let mut a = Acc::new();
    for c in &co.ctxs {
        let rp = ring_predicates(c.m.ring);
        if !(rp.is_semisimple && c.is_prime && nonzero(c)) {
            a.miss_many((c.nsubs() * c.nsubs()) as u64);
            continue;
        }
        for n in 0..c.nsubs() {
            for t in 0..c.nsubs() {
                if c.sa[n] && c.le(n, t) && n != t {
                    a.hit(c.tsa[t].get(n), || {
                        format!("{}: N = {}, T = {}", c.tag(), c.describe(n), c.describe(t))
                    });
                } else {
                    a.miss();
                }
            }
        }
    }
    Ok(a.finish(
        "T2.3.iii",
        "in a prime module over a semisimple ring, a sa-small N is T-sa-small for every T ⊋ N",
    ))
}

// ---------------------------------------------------------------------
// monotonicity in T
// ---------------------------------------------------------------------

fn t25_i(co: &Corpus) -> Result<Report> {
    let mut a = Acc::new();
    for c in &co.ctxs {
        let ns = c.nsubs() as u64;
        for t2 in 0..c.nsubs() {
            if t2 == c.full {
                continue;
            }
            for t in c.contains[t2].iter_ones() {
                if t == t2 {
                    continue;
                }
                let hits = c.tsa[t].count() as u64;
                if c.tsa[t].subset_of(&c.tsa[t2]) {
                    a.hold_many(hits);
                    a.miss_many(ns - hits);
                } else {
                    for n in 0..c.nsubs() {
                        if c.tsa[t].get(n) {
                            a.hit(c.tsa[t2].get(n), || {
                                format!(
                                    "{}: T = {}, T' = {}, N = {}",
                                    c.tag(),
                                    c.describe(t),
                                    c.describe(t2),
                                    c.describe(n)
                                )
                            });
                        } else {
                            a.miss();
                        }
                    }
                }
            }
        }
    }
    // line slice: aZ ⊆ bZ, kZ aZ-sa-small implies kZ bZ-sa-small
    let z = FgModule::z_line();
    let bound = co.cfg.z_divisor_bound;
    for b in 1..=bound {
        for s in 2..=bound {
            let a_gen = b * s;
            if a_gen > bound {
                continue;
            }
            for k in 0..=bound {
                if predicates::is_t_sa_small(&z, &z.cyclic(&[k]), &z.cyclic(&[a_gen]), false)?
                    .is_holds()
                {
                    a.hit(
                        predicates::is_t_sa_small(&z, &z.cyclic(&[k]), &z.cyclic(&[b]), false)?
                            .is_holds(),
                        || format!("Z over Z: T = {a_gen}Z, T' = {b}Z, N = {k}Z"),
                    );
                } else {
                    a.miss();
                }
            }
        }
    }
    Ok(a.finish("T2.5.i", "T-sa-small is monotone in T: T ⊊ T' ⊊ M preserves it"))
}

fn t25_ii_fwd(co: &Corpus) -> Result<Report> {
    let mut a = Acc::new();
    for c in &co.ctxs {
        if c.nsubs() > B_PAIRS {
            a.skipped += 1;
            continue;
        }
        for t1 in 0..c.nsubs() {
            for t2 in t1..c.nsubs() {
                let t = meet(c, t1, t2);
                for n in 0..c.nsubs() {
                    if c.tsa[t].get(n) {
                        a.hit(c.tsa[t1].get(n) && c.tsa[t2].get(n), || {
                            format!(
                                "{}: T1 = {}, T2 = {}, N = {}",
                                c.tag(),
                                c.describe(t1),
                                c.describe(t2),
                                c.describe(n)
                            )
                        });
                    } else {
                        a.miss();
                    }
                }
            }
        }
    }
    Ok(a.finish(
        "T2.5.ii.fwd",
        "N (T1 ∩ T2)-sa-small implies N Ti-sa-small for each i",
    ))
}

fn t25_ii_conv(co: &Corpus) -> Result<Report> {
    let mut a = Acc::new();
    for c in &co.ctxs {
        if c.nsubs() > B_PAIRS {
            a.skipped += 1;
            continue;
        }
        let ci = ci_flags(c);
        for t1 in 0..c.nsubs() {
            for t2 in t1..c.nsubs() {
                let t = meet(c, t1, t2);
                if !ci[t] {
                    a.miss_many(c.nsubs() as u64);
                    continue;
                }
                for n in 0..c.nsubs() {
                    if c.tsa[t1].get(n) && c.tsa[t2].get(n) {
                        a.hit(c.tsa[t].get(n), || {
                            format!(
                                "{}: T1 = {}, T2 = {}, N = {}",
                                c.tag(),
                                c.describe(t1),
                                c.describe(t2),
                                c.describe(n)
                            )
                        });
                    } else {
                        a.miss();
                    }
                }
            }
        }
    }
    Ok(a.finish(
        "T2.5.ii.conv",
        "when T1 ∩ T2 is completely irreducible, Ti-sa-small for all i implies (T1 ∩ T2)-sa-small",
    ))
}

fn t25_iii(co: &Corpus) -> Result<Report> {
    let mut a = Acc::new();
    for c in &co.ctxs {
        if c.nsubs() > B_REL {
            a.skipped += 1;
            continue;
        }
        for k in 0..c.nsubs() {
            for t in 0..c.nsubs() {
                if !c.le(t, k) {
                    a.miss_many(c.nsubs() as u64);
                    continue;
                }
                for n in 0..c.nsubs() {
                    if c.le(n, k) && c.tsa[t].get(n) {
                        a.hit(c.tsa_rel(n, t, k, false)?, || {
                            format!(
                                "{}: K = {}, T = {}, N = {}",
                                c.tag(),
                                c.describe(k),
                                c.describe(t),
                                c.describe(n)
                            )
                        });
                    } else {
                        a.miss();
                    }
                }
            }
        }
    }
    Ok(a.finish(
        "T2.5.iii",
        "T ⊆ K and N ⊆ K: N T-sa-small in M implies N T-sa-small in K",
    ))
}

fn t25_iv(co: &Corpus) -> Result<Report> {
    let mut a = Acc::new();
    for c in &co.ctxs {
        if c.nsubs() > B_PAIRS {
            a.skipped += 1;
            continue;
        }
        for t1 in 0..c.nsubs() {
            for t2 in t1..c.nsubs() {
                let t = c.sum_idx(t1, t2);
                for n in 0..c.nsubs() {
                    if c.tsa[t1].get(n) || c.tsa[t2].get(n) {
                        a.hit(c.tsa[t].get(n), || {
                            format!(
                                "{}: T1 = {}, T2 = {}, N = {}",
                                c.tag(),
                                c.describe(t1),
                                c.describe(t2),
                                c.describe(n)
                            )
                        });
                    } else {
                        a.miss();
                    }
                }
            }
        }
    }
    Ok(a.finish(
        "T2.5.iv",
        "N Ti-sa-small for some i implies N (T1 + T2)-sa-small",
    ))
}

// ---------------------------------------------------------------------
// sa-small sets of rings and modules
// ---------------------------------------------------------------------

fn s_i(co: &Corpus) -> Result<Report> {
    let mut a = Acc::new();
    for r in ring_ctxs(co) {
        for i in 0..r.nsubs() {
            if r.small[i] {
                a.hit(r.sa[i], || format!("{}: I = {}", r.tag(), r.describe(i)));
            } else {
                a.miss();
            }
        }
    }
    // the line: S(Z) = {0} ⊆ S^sa(Z)
    let z = FgModule::z_line();
    a.hit(
        predicates::is_sa_small(&z, &z.zero_sub())?.is_holds(),
        || String::from("Z over Z: I = 0"),
    );
    Ok(a.finish("S.i", "small ideals are sa-small: S(R) ⊆ S^sa(R)"))
}

fn s_ii(co: &Corpus) -> Result<Report> {
    let mut a = Acc::new();
    for r in ring_ctxs(co) {
        for i in 0..r.nsubs() {
            if r.tsa[r.rad].get(i) {
                let bad = r.maximal.iter().find(|&&mx| !r.tsa[mx].get(i));
                a.hit(bad.is_none(), || {
                    format!(
                        "{}: I = {}, maximal m = {}",
                        r.tag(),
                        r.describe(i),
                        r.describe(*bad.unwrap())
                    )
                });
            } else {
                a.miss();
            }
        }
    }
    Ok(a.finish(
        "S.ii",
        "over an Artinian ring (here: the finite rings), I J(R)-sa-small implies I m-sa-small \
         for every maximal m",
    ))
}

fn s_iii_core(co: &Corpus, id: &'static str, require_nonzero: bool, notes: &'static str) -> Result<Report> {
    let mut a = Acc::new();
    for c in &co.ctxs {
        if !c.is_multiplication {
            a.miss_many((c.nsubs() * c.nsubs()) as u64);
            continue;
        }
        for n in 0..c.nsubs() {
            for k in n..c.nsubs() {
                let direct = c.sum_idx(n, k) == c.full && meet_is_zero(c, n, k);
                let sized = !require_nonzero || (n != c.zero && k != c.zero);
                if direct && sized {
                    a.hit(!c.sa[n] && !c.sa[k], || {
                        format!("{}: N = {}, K = {}", c.tag(), c.describe(n), c.describe(k))
                    });
                } else {
                    a.miss();
                }
            }
        }
    }
    Ok(a.finish(id, notes))
}

fn s_iii(co: &Corpus) -> Result<Report> {
    s_iii_core(
        co,
        "S.iii",
        true,
        "in a multiplication module M = N ⊕ K with N, K nonzero, neither summand is sa-small",
    )
}

fn s_iii_as_stated(co: &Corpus) -> Result<Report> {
    s_iii_core(
        co,
        "S.iii.as-stated",
        false,
        "literal reading without the nonzero filter; the trivial decomposition N = 0 can be \
         sa-small, which the proof's final step tacitly excludes",
    )
}

fn m_i(co: &Corpus) -> Result<Report> {
    let mut a = Acc::new();
    for c in &co.ctxs {
        a.hit(!c.sa[c.full], || c.tag());
    }
    let z = FgModule::z_line();
    a.hit(!predicates::is_sa_small(&z, &z.full_sub())?.is_holds(), || {
        String::from("Z over Z")
    });
    Ok(a.finish("M.i", "M is never sa-small in itself"))
}

fn m_ii(co: &Corpus) -> Result<Report> {
    let mut a = Acc::new();
    for c in &co.ctxs {
        a.hit(c.sa[c.zero] == c.ann[c.full].is_small(), || c.tag());
    }
    let z = FgModule::z_line();
    a.hit(
        predicates::is_sa_small(&z, &z.zero_sub())?.is_holds()
            == z.annihilator_module()?.is_small(),
        || String::from("Z over Z"),
    );
    Ok(a.finish("M.ii", "0 is sa-small in M iff Ann(M) is a small ideal"))
}

fn m_iii(co: &Corpus) -> Result<Report> {
    let mut a = Acc::new();
    for c in &co.ctxs {
        if !ring_predicates(c.m.ring).is_simple {
            a.miss_many(c.nsubs() as u64);
            continue;
        }
        for n in 0..c.nsubs() {
            a.hit(c.sa[n] == (n != c.full), || {
                format!("{}: N = {}", c.tag(), c.describe(n))
            });
        }
    }
    Ok(a.finish(
        "M.iii",
        "over a simple ring the sa-small submodules are exactly the proper ones",
    ))
}

fn m_iv(co: &Corpus) -> Result<Report> {
    let mut a = Acc::new();
    for r in ring_ctxs(co) {
        let q = match r.m.ring {
            Ring::Zn(q) => q,
            Ring::Z => continue,
        };
        let jrad = r.m.ring.jacobson_radical();
        for &mx in &r.maximal {
            for x in 0..q {
                if !r.sa[mx] || r.m.contains_element(&r.subs[mx], &[x])? {
                    a.miss();
                    continue;
                }
                let ann_rx = r.ann[r.idx_of(&r.m.cyclic(&[x]))?].clone();
                a.hit(jrad.contains(&ann_rx)?, || {
                    format!("{}: m = {}, x = {x}", r.tag(), r.describe(mx))
                });
            }
        }
    }
    Ok(a.finish(
        "M.iv",
        "m maximal and sa-small, x ∉ m: Ann(Rx) ⊆ J(R)",
    ))
}

fn m_v(co: &Corpus) -> Result<Report> {
    let mut a = Acc::new();
    for c in &co.ctxs {
        if !(c.is_prime && c.ann[c.full].is_small() && nonzero(c)) {
            a.miss_many(c.nsubs() as u64);
            continue;
        }
        for n in 0..c.nsubs() {
            let ok = c.sa[n] == (n != c.full) && (!c.small[n] || c.sa[n]);
            a.hit(ok, || format!("{}: N = {}", c.tag(), c.describe(n)));
        }
    }
    Ok(a.finish(
        "M.v",
        "M prime with Ann(M) small: S^sa(M) is exactly the proper submodules, and S(M) ⊆ S^sa(M)",
    ))
}

fn cor_faithful_prime(co: &Corpus) -> Result<Report> {
    let mut a = Acc::new();
    for c in &co.ctxs {
        if !(c.is_faithful && c.is_prime && nonzero(c)) {
            a.miss_many(c.nsubs() as u64);
            continue;
        }
        for n in 0..c.nsubs() {
            if n != c.full {
                a.hit(c.sa[n], || format!("{}: N = {}", c.tag(), c.describe(n)));
            } else {
                a.miss();
            }
        }
    }
    Ok(a.finish(
        "COR.faithful-prime",
        "every proper submodule of a faithful prime module is sa-small",
    ))
}

// ---------------------------------------------------------------------
// ring-level consequences
// ---------------------------------------------------------------------

fn r23_i(co: &Corpus) -> Result<Report> {
    let mut a = Acc::new();
    for r in ring_ctxs(co) {
        let has = (0..r.nsubs()).any(|i| i != r.zero && r.sa[i]);
        if has {
            a.hit(!ring_predicates(r.m.ring).is_semisimple, || r.tag());
        } else {
            a.miss();
        }
    }
    Ok(a.finish(
        "R2.3.i",
        "a ring with a nonzero sa-small ideal is not semisimple (R itself is the comaximal \
         partner the proof requires)",
    ))
}

fn r23_i_proper(co: &Corpus) -> Result<Report> {
    let mut a = Acc::new();
    for r in ring_ctxs(co) {
        let has = (0..r.nsubs()).any(|i| {
            i != r.zero
                && r.sa[i]
                && (0..r.nsubs()).any(|j| j != r.full && r.sum_idx(i, j) == r.full)
        });
        if has {
            a.hit(!ring_predicates(r.m.ring).is_semisimple, || r.tag());
        } else {
            a.miss();
        }
    }
    Ok(a.finish(
        "R2.3.i.proper-comaximal",
        "variant demanding a proper comaximal partner: over Z/n a nonzero sa-small ideal never \
         has one (the partner would be a non-small-annihilator cover), so this slot is vacuous \
         by design",
    ))
}

fn r23_ii(co: &Corpus) -> Result<Report> {
    let mut a = Acc::new();
    for r in ring_ctxs(co) {
        if sa_hollow(r) && ring_predicates(r.m.ring).is_semisimple {
            a.hit(ring_predicates(r.m.ring).is_simple, || r.tag());
        } else {
            a.miss();
        }
    }
    Ok(a.finish("R2.3.ii", "a sa-small hollow semisimple ring is simple"))
}

fn r23_iii(co: &Corpus) -> Result<Report> {
    let mut a = Acc::new();
    for r in ring_ctxs(co) {
        let q = match r.m.ring {
            Ring::Zn(q) => q,
            Ring::Z => continue,
        };
        if !sa_hollow(r) {
            a.miss();
            continue;
        }
        let rp = ring_predicates(r.m.ring);
        let mut ok = true;
        // nonzero zero-divisors x with a nonzero partner y, xy = 0, are
        // never comaximal with that partner
        for &x in rp.zero_divisors.as_deref().unwrap_or(&[]) {
            if x == 0 {
                continue;
            }
            for y in 1..q {
                if (x * y) % q == 0
                    && r.sum_idx(r.idx_of(&r.m.cyclic(&[x]))?, r.idx_of(&r.m.cyclic(&[y]))?)
                        == r.full
                {
                    ok = false;
                }
            }
        }
        // and 1 is the only nonzero idempotent
        for &e in rp.idempotents.as_deref().unwrap_or(&[]) {
            if e != 0 && e != 1 {
                ok = false;
            }
        }
        a.hit(ok, || r.tag());
    }
    Ok(a.finish(
        "R2.3.iii",
        "in a sa-small hollow ring, Rx + Ry ≠ R for x a nonzero zero-divisor and y ≠ 0 with \
         xy = 0, and 1 is the only nonzero idempotent",
    ))
}

fn r23_iv_core(co: &Corpus, id: &'static str, skip_zero: bool, notes: &'static str) -> Result<Report> {
    let mut a = Acc::new();
    for r in ring_ctxs(co) {
        if !ring_predicates(r.m.ring).is_vnr {
            a.miss_many(r.nsubs() as u64);
            continue;
        }
        for i in 0..r.nsubs() {
            if skip_zero && i == r.zero {
                a.miss();
                continue;
            }
            a.hit(!r.sa[i], || format!("{}: I = {}", r.tag(), r.describe(i)));
        }
    }
    Ok(a.finish(id, notes))
}

fn r23_iv_as_stated(co: &Corpus) -> Result<Report> {
    r23_iv_core(
        co,
        "R2.3.iv.as-stated",
        false,
        "literal reading: no finitely generated ideal of a von Neumann regular ring is \
         sa-small; the zero ideal falsifies it (0 is sa-small whenever Ann(R) = 0 is small)",
    )
}

fn r23_iv_nonzero(co: &Corpus) -> Result<Report> {
    r23_iv_core(
        co,
        "R2.3.iv.nonzero",
        true,
        "no nonzero finitely generated ideal of a von Neumann regular ring is sa-small",
    )
}

fn r23_v(co: &Corpus) -> Result<Report> {
    let mut a = Acc::new();
    // the only domain in scope is Z, and its only faithful multiplication
    // module in scope is the line Z itself
    let z = FgModule::z_line();
    for k in 0..=co.cfg.z_divisor_bound {
        let proper = k != 1;
        a.hit(
            predicates::is_sa_small(&z, &z.cyclic(&[k]))?.is_holds() == proper,
            || format!("Z over Z: N = {k}Z"),
        );
    }
    for c in &co.ctxs {
        if c.m.ring == Ring::Z && !(c.is_faithful && c.is_multiplication) {
            a.miss();
        }
    }
    Ok(a.finish(
        "R2.3.v",
        "over a domain, the sa-small submodules of a faithful multiplication module are \
         exactly the proper ones (finite Z-modules are never faithful, so only the line fires)",
    ))
}

// ---------------------------------------------------------------------
// transport of T-sa-smallness
// ---------------------------------------------------------------------

fn p26_i(co: &Corpus) -> Result<Report> {
    let mut a = Acc::new();
    for c in &co.ctxs {
        if !(c.is_comultiplication && c.satisfies_dac) {
            a.miss_many((c.nsubs() * c.nsubs()) as u64);
            continue;
        }
        if c.nsubs() > B_PAIRS {
            a.skipped += 1;
            continue;
        }
        let ess = essential_flags(c);
        for n in 0..c.nsubs() {
            for l in 0..c.nsubs() {
                if c.sa[n] && l != c.zero && c.sum_idx(n, l) == c.full {
                    a.hit(ess[l], || {
                        format!("{}: N = {}, L = {}", c.tag(), c.describe(n), c.describe(l))
                    });
                } else {
                    a.miss();
                }
            }
        }
    }
    Ok(a.finish(
        "P2.6.i",
        "in a strong comultiplication module, covers of a sa-small submodule are essential",
    ))
}

fn p26_ii(co: &Corpus) -> Result<Report> {
    let mut a = Acc::new();
    for c in &co.ctxs {
        let ns = c.nsubs() as u64;
        for t in 0..c.nsubs() {
            for k in 0..c.nsubs() {
                if !c.tsa[t].get(k) {
                    a.miss_many(ns);
                    continue;
                }
                let down = c.contains[k].count() as u64;
                if c.contains[k].subset_of(&c.tsa[t]) {
                    a.hold_many(down);
                    a.miss_many(ns - down);
                } else {
                    for n in 0..c.nsubs() {
                        if c.le(n, k) {
                            a.hit(c.tsa[t].get(n), || {
                                format!(
                                    "{}: T = {}, K = {}, N = {}",
                                    c.tag(),
                                    c.describe(t),
                                    c.describe(k),
                                    c.describe(n)
                                )
                            });
                        } else {
                            a.miss();
                        }
                    }
                }
            }
        }
    }
    // line slice: kZ T-sa-small and k | k' implies k'Z T-sa-small
    let z = FgModule::z_line();
    let bound = co.cfg.z_divisor_bound;
    for t in 1..=bound {
        for k in 1..=bound {
            for s in 1..=bound {
                let k2 = k * s;
                if k2 > bound {
                    continue;
                }
                if predicates::is_t_sa_small(&z, &z.cyclic(&[k]), &z.cyclic(&[t]), false)?
                    .is_holds()
                {
                    a.hit(
                        predicates::is_t_sa_small(&z, &z.cyclic(&[k2]), &z.cyclic(&[t]), false)?
                            .is_holds(),
                        || format!("Z over Z: T = {t}Z, K = {k}Z, N = {k2}Z"),
                    );
                } else {
                    a.miss();
                }
            }
        }
    }
    Ok(a.finish(
        "P2.6.ii",
        "T-sa-small is downward closed: N ⊆ K and K T-sa-small imply N T-sa-small",
    ))
}

fn p26_iii(co: &Corpus) -> Result<Report> {
    let mut a = Acc::new();
    for c in &co.ctxs {
        if c.nsubs() > B_MEET {
            a.skipped += 1;
            continue;
        }
        for t in 0..c.nsubs() {
            for n1 in 0..c.nsubs() {
                for n2 in n1..c.nsubs() {
                    if c.tsa[t].get(n1) && c.tsa[t].get(n2) {
                        a.hit(c.tsa[t].get(meet(c, n1, n2)), || {
                            format!(
                                "{}: T = {}, N1 = {}, N2 = {}",
                                c.tag(),
                                c.describe(t),
                                c.describe(n1),
                                c.describe(n2)
                            )
                        });
                    } else {
                        a.miss();
                    }
                }
            }
        }
    }
    Ok(a.finish(
        "P2.6.iii",
        "an intersection of T-sa-small submodules is T-sa-small",
    ))
}

fn p26_iv(co: &Corpus) -> Result<Report> {
    let mut a = Acc::new();
    for c in &co.ctxs {
        if c.nsubs() > B_TRIPLE {
            a.skipped += 1;
            continue;
        }
        for k in 0..c.nsubs() {
            for t in 0..c.nsubs() {
                if !c.le(t, k) {
                    a.miss_many(c.nsubs() as u64);
                    continue;
                }
                for n in 0..c.nsubs() {
                    if c.le(n, k) && c.tsa_rel(n, t, k, false)? {
                        a.hit(c.tsa[t].get(n), || {
                            format!(
                                "{}: K = {}, T = {}, N = {}",
                                c.tag(),
                                c.describe(k),
                                c.describe(t),
                                c.describe(n)
                            )
                        });
                    } else {
                        a.miss();
                    }
                }
            }
        }
    }
    Ok(a.finish(
        "P2.6.iv",
        "T ⊆ K, N T-sa-small in K implies N T-sa-small in M; the argument for it bounds \
         Ann(L ∩ K) in (T : K) where (T : M) is needed, and the gap is real: 0 is \
         <2>-sa-small in <2> ≤ Z/4 over Z/4 but not in Z/4 itself",
    ))
}

fn p26_v_fwd(co: &Corpus, id: &'static str, strict_t: bool, notes: &'static str) -> Result<Report> {
    // strict_t = false: the plain sa-small statement; true: the T version
    let mut a = Acc::new();
    for c in &co.ctxs {
        let r = match c.m.ring {
            Ring::Zn(q) => co.ring_ctx_of(q).expect("ring ctx"),
            Ring::Z => {
                a.miss_many(c.nsubs() as u64);
                continue;
            }
        };
        if !c.is_multiplication {
            a.miss_many(c.nsubs() as u64);
            continue;
        }
        if !strict_t {
            for n in 0..c.nsubs() {
                if c.sa[n] {
                    a.hit(r.sa[ideal_sub(r, &c.ctm[n])?], || {
                        format!("{}: N = {}", c.tag(), c.describe(n))
                    });
                } else {
                    a.miss();
                }
            }
        } else {
            for t in 0..c.nsubs() {
                let ti = ideal_sub(r, &c.ctm[t])?;
                for n in 0..c.nsubs() {
                    if c.tsa[t].get(n) {
                        a.hit(r.tsa[ti].get(ideal_sub(r, &c.ctm[n])?), || {
                            format!("{}: T = {}, N = {}", c.tag(), c.describe(t), c.describe(n))
                        });
                    } else {
                        a.miss();
                    }
                }
            }
        }
    }
    Ok(a.finish(id, notes))
}

fn p26_v_fwd_sa(co: &Corpus) -> Result<Report> {
    p26_v_fwd(
        co,
        "P2.6.v.fwd-sa",
        false,
        "M multiplication: N sa-small in M implies (N : M) sa-small in R",
    )
}

fn p26_v_fwd_tsa(co: &Corpus) -> Result<Report> {
    p26_v_fwd(
        co,
        "P2.6.v.fwd-tsa",
        true,
        "M multiplication: N T-sa-small in M implies (N : M) (T : M)-sa-small in R",
    )
}

fn p26_v_conv(co: &Corpus, id: &'static str, strict_t: bool, notes: &'static str) -> Result<Report> {
    let mut a = Acc::new();
    for c in &co.ctxs {
        let r = match c.m.ring {
            Ring::Zn(q) => co.ring_ctx_of(q).expect("ring ctx"),
            Ring::Z => {
                a.miss_many(c.nsubs() as u64);
                continue;
            }
        };
        if !(c.is_multiplication && c.is_faithful) {
            a.miss_many(c.nsubs() as u64);
            continue;
        }
        if !strict_t {
            for n in 0..c.nsubs() {
                if r.sa[ideal_sub(r, &c.ctm[n])?] {
                    a.hit(c.sa[n], || format!("{}: N = {}", c.tag(), c.describe(n)));
                } else {
                    a.miss();
                }
            }
        } else {
            for t in 0..c.nsubs() {
                let ti = ideal_sub(r, &c.ctm[t])?;
                for n in 0..c.nsubs() {
                    if r.tsa[ti].get(ideal_sub(r, &c.ctm[n])?) {
                        a.hit(c.tsa[t].get(n), || {
                            format!("{}: T = {}, N = {}", c.tag(), c.describe(t), c.describe(n))
                        });
                    } else {
                        a.miss();
                    }
                }
            }
        }
    }
    Ok(a.finish(id, notes))
}

fn p26_v_conv_sa(co: &Corpus) -> Result<Report> {
    p26_v_conv(
        co,
        "P2.6.v.conv-sa",
        false,
        "M finitely generated faithful multiplication: (N : M) sa-small in R implies N \
         sa-small in M",
    )
}

fn p26_v_conv_tsa(co: &Corpus) -> Result<Report> {
    p26_v_conv(
        co,
        "P2.6.v.conv-tsa",
        true,
        "M finitely generated faithful multiplication: (N : M) (T : M)-sa-small in R implies \
         N T-sa-small in M",
    )
}

fn p26_v_jid(co: &Corpus) -> Result<Report> {
    let mut a = Acc::new();
    for c in &co.ctxs {
        let r = match c.m.ring {
            Ring::Zn(q) => co.ring_ctx_of(q).expect("ring ctx"),
            Ring::Z => {
                a.miss_many(c.nsubs() as u64);
                continue;
            }
        };
        if !(c.is_multiplication && c.is_faithful) {
            a.miss_many(c.nsubs() as u64);
            continue;
        }
        for t in 0..c.nsubs() {
            // J_T^sa(M): sum of the T-sa-small submodules
            let mut lhs = c.zero;
            for n in c.tsa[t].iter_ones() {
                lhs = c.sum_idx(lhs, n);
            }
            // J_(T:M)^sa(R) · M
            let ti = ideal_sub(r, &c.ctm[t])?;
            let mut jr = r.zero;
            for i in r.tsa[ti].iter_ones() {
                jr = r.sum_idx(jr, i);
            }
            let g = sub_ideal(r, jr).gen;
            let rhs = c.idx_of(&Hom::scaling(&c.m, g).image())?;
            a.hit(lhs == rhs, || {
                format!(
                    "{}: T = {}, sum of T-sa-smalls = {}, J-ideal image = {}",
                    c.tag(),
                    c.describe(t),
                    c.describe(lhs),
                    c.describe(rhs)
                )
            });
        }
    }
    Ok(a.finish(
        "P2.6.v.jid",
        "M finitely generated faithful multiplication: the sum of all T-sa-small submodules \
         equals J_(T:M)^sa(R) M",
    ))
}

fn p26_vi(co: &Corpus) -> Result<Report> {
    let mut a = Acc::new();
    for c in &co.ctxs {
        if c.nsubs() > B_TRIPLE {
            a.skipped += 1;
            continue;
        }
        // every epimorphism out of M is a projection M -> M/K up to
        // isomorphism; quantify over kernels K and submodules of M/K
        for k in 0..c.nsubs() {
            for t in 0..c.nsubs() {
                if !c.le(k, t) {
                    a.miss_many(c.nsubs() as u64);
                    continue;
                }
                for n in 0..c.nsubs() {
                    if c.le(k, n) && c.tsa_quot(n, t, k, false)? {
                        a.hit(c.tsa[t].get(n), || {
                            format!(
                                "{}: kernel K = {}, T' = {}/K, N' = {}/K",
                                c.tag(),
                                c.describe(k),
                                c.describe(t),
                                c.describe(n)
                            )
                        });
                    } else {
                        a.miss();
                    }
                }
            }
        }
    }
    Ok(a.finish(
        "P2.6.vi",
        "f epi, N' T'-sa-small in M' implies f^{-1}(N') f^{-1}(T')-sa-small in M",
    ))
}

fn p26_vii(co: &Corpus) -> Result<Report> {
    let mut a = Acc::new();
    for c in &co.ctxs {
        if c.nsubs() > B_TRIPLE {
            a.skipped += 1;
            continue;
        }
        for n in 0..c.nsubs() {
            for t in 0..c.nsubs() {
                if !(c.le(n, t) && n != t) {
                    a.miss_many(c.nsubs() as u64);
                    continue;
                }
                for k in 0..c.nsubs() {
                    if c.le(n, k) && c.tsa_quot(k, t, n, false)? {
                        a.hit(c.tsa[t].get(k) && c.tsa[t].get(n), || {
                            format!(
                                "{}: N = {}, K = {}, T = {}",
                                c.tag(),
                                c.describe(n),
                                c.describe(k),
                                c.describe(t)
                            )
                        });
                    } else {
                        a.miss();
                    }
                }
            }
        }
    }
    Ok(a.finish(
        "P2.6.vii",
        "T ⊋ N and K/N T/N-sa-small in M/N imply both K and N are T-sa-small in M",
    ))
}

fn p26_viii(co: &Corpus) -> Result<Report> {
    let mut a = Acc::new();
    for c in &co.ctxs {
        let q = match c.m.ring {
            Ring::Zn(q) => q,
            Ring::Z => continue,
        };
        if c.nsubs() > B_LOC {
            a.skipped += 1;
            continue;
        }
        for s in 2..q {
            let loc = match hom::localize(&c.m, &[s]) {
                Ok(l) => l,
                Err(Error::NotMcs) => continue,
                Err(e) => return Err(e),
            };
            let lc = Ctx::build(loc.module.clone())?;
            for t in 0..c.nsubs() {
                let ti = lc.idx_of(&loc.transport(&c.subs[t])?)?;
                for n in 0..c.nsubs() {
                    let ni = lc.idx_of(&loc.transport(&c.subs[n])?)?;
                    if lc.tsa[ti].get(ni) {
                        a.hit(c.tsa[t].get(n), || {
                            format!(
                                "{}: S = <{s}>, T = {}, N = {}",
                                c.tag(),
                                c.describe(t),
                                c.describe(n)
                            )
                        });
                    } else {
                        a.miss();
                    }
                }
            }
        }
    }
    Ok(a.finish(
        "P2.6.viii",
        "M Noetherian, S multiplicatively closed: S^{-1}N S^{-1}T-sa-small in S^{-1}M implies \
         N T-sa-small in M; smallness of ideals does not descend along localization (Ann(M) \
         can stop being obstructed once comaximal ideals collapse), and the engine finds \
         counterexamples such as M = Z/2 over Z/6 with S = <3>, T = M, N = 0",
    ))
}

fn cor_hollow_iff(co: &Corpus, id: &'static str, strict: bool, notes: &'static str) -> Result<Report> {
    let mut a = Acc::new();
    for c in &co.ctxs {
        let r = match c.m.ring {
            Ring::Zn(q) => co.ring_ctx_of(q).expect("ring ctx"),
            Ring::Z => {
                a.miss_many(c.nsubs() as u64);
                continue;
            }
        };
        if !(c.is_multiplication && c.is_faithful) {
            a.miss_many(c.nsubs() as u64);
            continue;
        }
        for t in 0..c.nsubs() {
            let lhs = is_hollow(c, t, strict);
            let ti = ideal_sub(r, &c.ctm[t])?;
            let rhs = is_hollow(r, ti, strict);
            a.hit(lhs == rhs, || {
                format!("{}: T = {}, module side {lhs}, ring side {rhs}", c.tag(), c.describe(t))
            });
        }
    }
    Ok(a.finish(id, notes))
}

fn cor_hollow_iff_default(co: &Corpus) -> Result<Report> {
    cor_hollow_iff(
        co,
        "COR.hollow-iff",
        false,
        "M finitely generated faithful multiplication: M is T-sa-small hollow iff R is \
         (T : M)-sa-small hollow (under the default reading both sides are never hollow, so \
         the biconditional holds degenerately)",
    )
}

fn cor_hollow_iff_strict(co: &Corpus) -> Result<Report> {
    cor_hollow_iff(
        co,
        "COR.hollow-iff.strict-X",
        true,
        "the same biconditional under the nonzero-X reading, where hollowness is attainable",
    )
}

fn cor_local(co: &Corpus, id: &'static str, skip_full: bool, notes: &'static str) -> Result<Report> {
    let mut a = Acc::new();
    for r in ring_ctxs(co) {
        if !ring_predicates(r.m.ring).is_local {
            a.miss_many((r.nsubs() * r.nsubs()) as u64);
            continue;
        }
        let mx = *r.maximal.first().expect("local ring has a maximal ideal");
        for t in 0..r.nsubs() {
            if !r.tsa[t].get(mx) {
                a.miss_many(r.nsubs() as u64);
                continue;
            }
            for i in 0..r.nsubs() {
                if skip_full && i == r.full {
                    a.miss();
                    continue;
                }
                a.hit(r.tsa[t].get(i), || {
                    format!("{}: A = {}, I = {}", r.tag(), r.describe(t), r.describe(i))
                });
            }
        }
    }
    Ok(a.finish(id, notes))
}

fn cor_local_as_stated(co: &Corpus) -> Result<Report> {
    cor_local(
        co,
        "COR.local.as-stated",
        false,
        "(R, m) local with m A-sa-small: literally every ideal is A-sa-small; I = R \
         falsifies it (R is never A-sa-small in itself)",
    )
}

fn cor_local_proper(co: &Corpus) -> Result<Report> {
    cor_local(
        co,
        "COR.local.proper",
        true,
        "(R, m) local with m A-sa-small: every proper ideal is A-sa-small",
    )
}

fn hollow_finv(co: &Corpus, id: &'static str, strict: bool, notes: &'static str) -> Result<Report> {
    let mut a = Acc::new();
    for c in &co.ctxs {
        if c.nsubs() > B_TRIPLE {
            a.skipped += 1;
            continue;
        }
        for k in 0..c.nsubs() {
            for t in 0..c.nsubs() {
                // modules are nonzero throughout, so the target M/K of the
                // epimorphism must be nonzero
                if !c.le(k, t) || k == c.full {
                    a.miss();
                    continue;
                }
                // M/K is T/K-sa-small hollow? scan from the top so the
                // default reading refutes immediately
                let hyp = {
                    let mut all = true;
                    for n in (0..c.nsubs()).rev() {
                        if c.le(k, n) && !c.tsa_quot(n, t, k, strict)? {
                            all = false;
                            break;
                        }
                    }
                    all
                };
                if hyp {
                    a.hit(is_hollow(c, t, strict), || {
                        format!("{}: kernel K = {}, T' = {}/K", c.tag(), c.describe(k), c.describe(t))
                    });
                } else {
                    a.miss();
                }
            }
        }
    }
    Ok(a.finish(id, notes))
}

fn hollow_finv_default(co: &Corpus) -> Result<Report> {
    hollow_finv(
        co,
        "HOLLOW.finv",
        false,
        "f epi with M' T'-sa-small hollow implies M f^{-1}(T')-sa-small hollow; under the \
         default reading no module is ever T-sa-small hollow (X = 0 refutes N = M), so this \
         slot is vacuous by design",
    )
}

fn hollow_finv_strict(co: &Corpus) -> Result<Report> {
    hollow_finv(
        co,
        "HOLLOW.finv.strict-X",
        true,
        "the same transport under the nonzero-X reading, where hollow quotients exist",
    )
}

fn ex_converse(_co: &Corpus) -> Result<Report> {
    let mut a = Acc::new();
    // N = 8Z, K = 4Z, T = 2Z in Z: N is T-sa-small in Z, yet K/N is not
    // T/N-sa-small in Z/N
    let z = FgModule::z_line();
    let hyp = predicates::is_t_sa_small(&z, &z.cyclic(&[8]), &z.cyclic(&[2]), false)?;
    let m = FgModule::finite(Ring::Z, &[8])?;
    let concl = predicates::is_t_sa_small(&m, &m.cyclic(&[4]), &m.cyclic(&[2]), false)?;
    if hyp.is_holds() {
        a.hit(concl.is_holds(), || {
            format!(
                "Z/8 over Z: K/N = <4>, T/N = <2>; witness X = {}: {}",
                m.display_sub(&concl.witness.clone().expect("refuting witness")),
                concl.reason
            )
        });
    } else {
        a.miss();
    }
    Ok(a.finish(
        "EX.converse",
        "the converse of the quotient-transport statement fails: 8Z is 2Z-sa-small in Z but \
         4Z/8Z is not 2Z/8Z-sa-small in Z/8Z (falsified by design, with the recorded witness)",
    ))
}

// ---------------------------------------------------------------------
// radicals, intersections, sums
// ---------------------------------------------------------------------

fn l316(co: &Corpus) -> Result<Report> {
    let mut a = Acc::new();
    for r in ring_ctxs(co) {
        for i in 0..r.nsubs() {
            if r.sa[i] {
                let rad = sub_ideal(r, i).rad();
                a.hit(r.sa[ideal_sub(r, &rad)?], || {
                    format!("{}: I = {}", r.tag(), r.describe(i))
                });
            } else {
                a.miss();
            }
        }
    }
    Ok(a.finish("L3.16", "I sa-small in R implies rad(I) sa-small in R"))
}

fn rad_prop(co: &Corpus) -> Result<Report> {
    let mut a = Acc::new();
    for c in &co.ctxs {
        if !(c.is_multiplication && c.is_faithful && matches!(c.m.ring, Ring::Zn(_))) {
            a.miss_many(c.nsubs() as u64);
            continue;
        }
        if c.nsubs() > B_REL {
            a.skipped += 1;
            continue;
        }
        for n in 0..c.nsubs() {
            if c.sa[n] {
                let rad = predicates::rad_submodule(&c.m, &c.subs[n])?;
                a.hit(c.sa[c.idx_of(&rad)?], || {
                    format!("{}: N = {}", c.tag(), c.describe(n))
                });
            } else {
                a.miss();
            }
        }
    }
    Ok(a.finish(
        "RAD.prop",
        "M finitely generated faithful multiplication: N sa-small implies rad(N) sa-small",
    ))
}

fn nk(co: &Corpus, id: &'static str, nonzero_k: bool, notes: &'static str) -> Result<Report> {
    let mut a = Acc::new();
    for c in &co.ctxs {
        if c.nsubs() > B_PAIRS {
            a.skipped += 1;
            continue;
        }
        for n in 0..c.nsubs() {
            if n == c.zero || !c.sa[n] {
                a.miss_many(c.nsubs() as u64);
                continue;
            }
            for k in 0..c.nsubs() {
                if nonzero_k && k == c.zero {
                    a.miss();
                    continue;
                }
                let nk = c.m.colon(&c.subs[n], &c.subs[k])?;
                let kn = c.m.colon(&c.subs[k], &c.subs[n])?;
                if nk.sum(&kn)?.is_unit() {
                    a.hit(!meet_is_zero(c, n, k), || {
                        format!("{}: N = {}, K = {}", c.tag(), c.describe(n), c.describe(k))
                    });
                } else {
                    a.miss();
                }
            }
        }
    }
    Ok(a.finish(id, notes))
}

fn nk_as_stated(co: &Corpus) -> Result<Report> {
    nk(
        co,
        "NK.as-stated",
        false,
        "literal reading with K arbitrary: K = 0 satisfies (N : 0) + (0 : N) = R and \
         trivially falsifies N ∩ K ≠ 0",
    )
}

fn nk_nonzero(co: &Corpus) -> Result<Report> {
    nk(
        co,
        "NK",
        true,
        "N nonzero sa-small, K nonzero, (N : K) + (K : N) = R imply N ∩ K ≠ 0; the argument \
         derives Ann(K) ≪ R from sa-smallness of N without exhibiting an L with N + L = M, \
         and the gap is real: over the semisimple ring Z/6 take M = Z/2 x Z/6, \
         N = <(1,0)> (sa-small since every complement of N is faithful) and K = <(0,2)>; \
         then (N : K) + (K : N) = 3Z + 2Z = R yet N ∩ K = 0",
    )
}

fn kh_i(co: &Corpus) -> Result<Report> {
    let mut a = Acc::new();
    for c in &co.ctxs {
        if c.nsubs() > B_SUM {
            a.skipped += 1;
            continue;
        }
        for t in 0..c.nsubs() {
            for k in 0..c.nsubs() {
                for h in k..c.nsubs() {
                    if c.tsa[t].get(c.sum_idx(k, h)) {
                        a.hit(c.tsa[t].get(k) && c.tsa[t].get(h), || {
                            format!(
                                "{}: T = {}, K = {}, H = {}",
                                c.tag(),
                                c.describe(t),
                                c.describe(k),
                                c.describe(h)
                            )
                        });
                    } else {
                        a.miss();
                    }
                }
            }
        }
    }
    Ok(a.finish("KH.i", "K + H T-sa-small implies K and H are T-sa-small"))
}

fn kh_ii(co: &Corpus, id: &'static str, strict: bool, notes: &'static str) -> Result<Report> {
    let mut a = Acc::new();
    for c in &co.ctxs {
        if !c.is_prime || !nonzero(c) {
            a.miss_many(c.nsubs() as u64);
            continue;
        }
        if c.nsubs() > B_SUM {
            a.skipped += 1;
            continue;
        }
        let tab = table(c, strict);
        for t in 0..c.nsubs() {
            for k in 0..c.nsubs() {
                for h in 0..c.nsubs() {
                    let s = c.sum_idx(k, h);
                    if tab[t].get(k) && s != c.full {
                        a.hit(tab[t].get(s), || {
                            format!(
                                "{}: T = {}, K = {}, H = {}",
                                c.tag(),
                                c.describe(t),
                                c.describe(k),
                                c.describe(h)
                            )
                        });
                    } else {
                        a.miss();
                    }
                }
            }
        }
    }
    Ok(a.finish(id, notes))
}

fn kh_ii_default(co: &Corpus) -> Result<Report> {
    kh_ii(
        co,
        "KH.ii",
        false,
        "M prime, K T-sa-small, K + H proper: K + H is T-sa-small (default reading: X = 0 \
         refutes whenever T ⊆ K + H, a case the proof's Ann(X) = Ann(H + X) step skips)",
    )
}

fn kh_ii_strict(co: &Corpus) -> Result<Report> {
    kh_ii(
        co,
        "KH.ii.strict-X",
        true,
        "the same claim under the nonzero-X reading",
    )
}

fn ds(co: &Corpus) -> Result<Report> {
    let mut a = Acc::new();
    for (qi, r) in co.ring_ctx.iter().map(|&(q, i)| (q, &co.ctxs[i])) {
        let rp = ring_predicates(r.m.ring);
        if !(rp.is_semisimple && sa_hollow(r)) {
            a.miss();
            continue;
        }
        let ring = Ring::Zn(qi);
        let mods: Vec<&Ctx> = co
            .ctxs
            .iter()
            .filter(|c| c.m.ring == ring && c.sub_order[c.full] <= 8)
            .collect();
        for c1 in &mods {
            for c2 in &mods {
                if c1.sub_order[c1.full] * c2.sub_order[c2.full] > 64 {
                    continue;
                }
                // the sum lattice has at least nsubs1 * nsubs2 members
                if c1.nsubs() * c2.nsubs() > B_PAIRS {
                    a.skipped += 1;
                    continue;
                }
                let sum = hom::direct_sum(&c1.m, &c2.m)?;
                if sum.module.submodules(LATTICE_BOUND)?.len() > B_PAIRS {
                    a.skipped += 1;
                    continue;
                }
                let dc = Ctx::build(sum.module.clone())?;
                for t1 in 0..c1.nsubs() {
                    for n1 in 0..c1.nsubs() {
                        for t2 in 0..c2.nsubs() {
                            for n2 in 0..c2.nsubs() {
                                if c1.tsa[t1].get(n1) && c2.tsa[t2].get(n2) {
                                    let td = dc.idx_of(
                                        &sum.sub_direct_sum(&c1.subs[t1], &c2.subs[t2])?,
                                    )?;
                                    let nd = dc.idx_of(
                                        &sum.sub_direct_sum(&c1.subs[n1], &c2.subs[n2])?,
                                    )?;
                                    a.hit(dc.tsa[td].get(nd), || {
                                        format!(
                                            "{} ⊕ {}: T = {} ⊕ {}, N = {} ⊕ {}",
                                            c1.tag(),
                                            c2.tag(),
                                            c1.describe(t1),
                                            c2.describe(t2),
                                            c1.describe(n1),
                                            c2.describe(n2)
                                        )
                                    });
                                } else {
                                    a.miss();
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(a.finish(
        "DS",
        "over a semisimple sa-small hollow ring, Ni Ti-sa-small in Mi implies N1 ⊕ N2 \
         (T1 ⊕ T2)-sa-small in M1 ⊕ M2",
    ))
}

fn mono(co: &Corpus) -> Result<Report> {
    let mut a = Acc::new();
    for c in &co.ctxs {
        if c.nsubs() > B_TRIPLE {
            a.skipped += 1;
            continue;
        }
        for s in 0..c.nsubs() {
            // f: the inclusion of subs[s], presented as a module of its own
            let (p, e) = c.m.present_sub(&c.subs[s])?;
            let pc = Ctx::build(p.clone())?;
            for t in c.contains[s].iter_ones() {
                let tp = pc.idx_of(&c.m.pull_into_presented(&p, &e, &c.subs[t])?)?;
                for k in c.contains[s].iter_ones() {
                    let kp = pc.idx_of(&c.m.pull_into_presented(&p, &e, &c.subs[k])?)?;
                    if pc.tsa[tp].get(kp) {
                        a.hit(c.tsa_rel(k, t, s, false)?, || {
                            format!(
                                "{}: f(M) = {}, T = {}, K = {}",
                                c.tag(),
                                c.describe(s),
                                c.describe(t),
                                c.describe(k)
                            )
                        });
                    } else {
                        a.miss();
                    }
                }
            }
        }
    }
    Ok(a.finish(
        "MONO",
        "f mono and K T-sa-small in M imply f(K) f(T)-sa-small in f(M) (hypothesis computed \
         in the presented copy, conclusion in the ambient lattice)",
    ))
}

fn comp(co: &Corpus, id: &'static str, require_epi: bool, notes: &'static str) -> Result<Report> {
    let mut a = Acc::new();
    for c in &co.ctxs {
        if c.nsubs() > B_TRIPLE {
            a.skipped += 1;
            continue;
        }
        for s in 0..c.nsubs() {
            // f: N = subs[s] into K = the context module; g: K -> K/K''
            let (p, e) = c.m.present_sub(&c.subs[s])?;
            let pc = Ctx::build(p.clone())?;
            for t in c.contains[s].iter_ones() {
                let tp = pc.idx_of(&c.m.pull_into_presented(&p, &e, &c.subs[t])?)?;
                for k2 in 0..c.nsubs() {
                    if !c.tsa[t].get(k2) {
                        a.miss();
                        continue;
                    }
                    let ker_gf = meet(c, s, k2);
                    let kp = pc.idx_of(&c.m.pull_into_presented(&p, &e, &c.subs[ker_gf])?)?;
                    let kernel_ok = pc.tsa[tp].get(kp);
                    let epi_ok = c.sum_idx(s, k2) == c.full;
                    let ok = if require_epi { kernel_ok && epi_ok } else { kernel_ok };
                    a.hit(ok, || {
                        format!(
                            "{}: N = {}, T = {}, Ker g = {} (composite epi: {epi_ok})",
                            c.tag(),
                            c.describe(s),
                            c.describe(t),
                            c.describe(k2)
                        )
                    });
                }
            }
        }
    }
    Ok(a.finish(id, notes))
}

fn comp_as_stated(co: &Corpus) -> Result<Report> {
    comp(
        co,
        "COMP.as-stated",
        true,
        "f: N -> K mono and g: K -> M a f(T)-sa-small epi make g ∘ f a T-sa-small \
         epimorphism; nothing in the hypotheses forces g ∘ f onto, so the literal claim can \
         fail on non-surjective composites",
    )
}

fn comp_kernel(co: &Corpus) -> Result<Report> {
    comp(
        co,
        "COMP.kernel",
        false,
        "the kernel half of the composite claim: Ker(g ∘ f) = f^{-1}(Ker g) is T-sa-small \
         in N",
    )
}

fn comp_colon(co: &Corpus) -> Result<Report> {
    let mut a = Acc::new();
    for c in &co.ctxs {
        if c.nsubs() > B_TRIPLE {
            a.skipped += 1;
            continue;
        }
        for s in 0..c.nsubs() {
            let (p, e) = c.m.present_sub(&c.subs[s])?;
            for t in c.contains[s].iter_ones() {
                let tp = c.m.pull_into_presented(&p, &e, &c.subs[t])?;
                let tn = p.colon_top(&tp)?;
                a.hit(tn.contains(&c.ctm[t])?, || {
                    format!("{}: N = {}, T = {}", c.tag(), c.describe(s), c.describe(t))
                });
            }
        }
    }
    Ok(a.finish(
        "COMP.colon",
        "the containment the composite proof leans on: (f(T) : M) ⊆ (T : N) for a mono f \
         with T ≤ N",
    ))
}

fn flat(co: &Corpus, id: &'static str, with_t: bool, notes: &'static str) -> Result<Report> {
    let mut a = Acc::new();
    for c in &co.ctxs {
        // small bases only: the doubled module's lattice grows fast, and
        // even enumerating it to discover that is expensive
        if c.sub_order[c.full] > 8 || c.nsubs() > 8 {
            a.skipped += 1;
            continue;
        }
        let pw = hom::power(&c.m, 2);
        if pw.submodules(LATTICE_BOUND)?.len() > B_PAIRS {
            a.skipped += 1;
            continue;
        }
        let pc = Ctx::build(pw.clone())?;
        if !with_t {
            for n in 0..c.nsubs() {
                let np = pc.idx_of(&hom::power_sub(&c.m, 2, &pw, &c.subs[n])?)?;
                a.hit(c.sa[n] == pc.sa[np], || {
                    format!("{}: N = {}", c.tag(), c.describe(n))
                });
            }
        } else {
            for t in 0..c.nsubs() {
                let tp = pc.idx_of(&hom::power_sub(&c.m, 2, &pw, &c.subs[t])?)?;
                for n in 0..c.nsubs() {
                    let np = pc.idx_of(&hom::power_sub(&c.m, 2, &pw, &c.subs[n])?)?;
                    a.hit(c.tsa[t].get(n) == pc.tsa[tp].get(np), || {
                        format!("{}: T = {}, N = {}", c.tag(), c.describe(t), c.describe(n))
                    });
                }
            }
        }
    }
    Ok(a.finish(id, notes))
}

fn flat_i(co: &Corpus) -> Result<Report> {
    flat(
        co,
        "FLAT.i",
        false,
        "for the faithfully flat F = R^2: N sa-small in M iff N ⊗ F sa-small in M ⊗ F",
    )
}

fn flat_ii(co: &Corpus) -> Result<Report> {
    flat(
        co,
        "FLAT.ii",
        true,
        "for the faithfully flat F = R^2: N T-sa-small in M iff N ⊗ F (T ⊗ F)-sa-small in \
         M ⊗ F",
    )
}

pub fn registry() -> Vec<Statement> {
    fn s(
        id: &'static str,
        describes: &'static str,
        expected_vacuous: bool,
        run: fn(&Corpus) -> Result<Report>,
    ) -> Statement {
        Statement {
            id,
            describes,
            expected_vacuous,
            run,
        }
    }
    vec![
        s("NOTE.i", "T = M recovers sa-small", false, note_i),
        s("NOTE.ii", "no 0-sa-small submodules in nonzero modules", false, note_ii),
        s("NOTE.iii", "T-sa-small submodules avoid T", false, note_iii),
        s("NOTE.iii.max", "maximal submodules over T are not T-sa-small", false, note_iii_max),
        s("T2.3.i", "T-sa-small implies sa-small", false, t23_i),
        s("T2.3.ii", "faithful prime modules are T-sa-small hollow", false, t23_ii),
        s("T2.3.ii.strict-X", "the same under the nonzero-X reading", false, t23_ii_strict),
        s("T2.3.iii", "sa-small lifts to T-sa-small over semisimple rings", false, t23_iii),
        s("T2.5.i", "monotone in T along strict chains", false, t25_i),
        s("T2.5.ii.fwd", "intersections of reference submodules, forward", false, t25_ii_fwd),
        s("T2.5.ii.conv", "converse under complete irreducibility", false, t25_ii_conv),
        s("T2.5.iii", "restriction to an intermediate submodule", false, t25_iii),
        s("T2.5.iv", "sums of reference submodules", false, t25_iv),
        s("S.i", "small ideals are sa-small", false, s_i),
        s("S.ii", "J(R)-sa-small implies m-sa-small over Artinian rings", false, s_ii),
        s("S.iii", "direct summands of multiplication modules", false, s_iii),
        s("S.iii.as-stated", "the literal reading with N = 0 allowed", false, s_iii_as_stated),
        s("M.i", "M is not sa-small in M", false, m_i),
        s("M.ii", "0 sa-small iff Ann(M) small", false, m_ii),
        s("M.iii", "sa-smalls over simple rings are the proper submodules", false, m_iii),
        s("M.iv", "annihilators of elements outside sa-small maximals", false, m_iv),
        s("M.v", "prime modules with small annihilator", false, m_v),
        s("COR.faithful-prime", "faithful prime modules are sa-hollow", false, cor_faithful_prime),
        s("R2.3.i", "nonzero sa-small ideals obstruct semisimplicity", false, r23_i),
        s(
            "R2.3.i.proper-comaximal",
            "the proper-comaximal variant (provably vacuous over Z/n)",
            true,
            r23_i_proper,
        ),
        s("R2.3.ii", "sa-hollow semisimple rings are simple", false, r23_ii),
        s("R2.3.iii", "zero-divisors and idempotents in sa-hollow rings", false, r23_iii),
        s("R2.3.iv.as-stated", "vNr rings: literal, broken by the zero ideal", false, r23_iv_as_stated),
        s("R2.3.iv.nonzero", "vNr rings have no nonzero sa-small f.g. ideal", false, r23_iv_nonzero),
        s("R2.3.v", "faithful multiplication modules over a domain", false, r23_v),
        s("P2.6.i", "covers in strong comultiplication modules are essential", false, p26_i),
        s("P2.6.ii", "downward closure", false, p26_ii),
        s("P2.6.iii", "intersections of T-sa-small submodules", false, p26_iii),
        s("P2.6.iv", "promotion from an intermediate submodule to M", false, p26_iv),
        s("P2.6.v.fwd-sa", "colon transport to the ring, sa version", false, p26_v_fwd_sa),
        s("P2.6.v.fwd-tsa", "colon transport to the ring, T version", false, p26_v_fwd_tsa),
        s("P2.6.v.conv-sa", "colon transport back from the ring, sa version", false, p26_v_conv_sa),
        s("P2.6.v.conv-tsa", "colon transport back from the ring, T version", false, p26_v_conv_tsa),
        s("P2.6.v.jid", "the T-sa radical matches its ring image", false, p26_v_jid),
        s("P2.6.vi", "preimages along epimorphisms", false, p26_vi),
        s("P2.6.vii", "lifting from a quotient", false, p26_vii),
        s("P2.6.viii", "descent along localization", false, p26_viii),
        s("COR.hollow-iff", "hollow transfer between M and R, default reading", false, cor_hollow_iff_default),
        s("COR.hollow-iff.strict-X", "hollow transfer, nonzero-X reading", false, cor_hollow_iff_strict),
        s("COR.local.as-stated", "local rings: literal, broken by I = R", false, cor_local_as_stated),
        s("COR.local.proper", "local rings: all proper ideals follow m", false, cor_local_proper),
        s(
            "HOLLOW.finv",
            "hollowness pulls back along epimorphisms (vacuous under the default reading)",
            true,
            hollow_finv_default,
        ),
        s("HOLLOW.finv.strict-X", "hollowness pulls back, nonzero-X reading", false, hollow_finv_strict),
        s("EX.converse", "the quotient-transport converse fails", false, ex_converse),
        s("L3.16", "sa-small ideals have sa-small radicals", false, l316),
        s("RAD.prop", "sa-small submodules have sa-small prime radicals", false, rad_prop),
        s("NK", "comaximal colons force nonzero intersection", false, nk_nonzero),
        s("NK.as-stated", "the literal reading with K = 0 allowed", false, nk_as_stated),
        s("KH.i", "summands of T-sa-small sums", false, kh_i),
        s("KH.ii", "proper sums with a T-sa-small summand, default reading", false, kh_ii_default),
        s("KH.ii.strict-X", "the same under the nonzero-X reading", false, kh_ii_strict),
        s("DS", "direct sums over semisimple sa-hollow rings", false, ds),
        s("MONO", "images under monomorphisms", false, mono),
        s("COMP.as-stated", "composites of monos with sa-small epis, literal", false, comp_as_stated),
        s("COMP.kernel", "the kernel half of the composite claim", false, comp_kernel),
        s("COMP.colon", "the colon containment behind the composite claim", false, comp_colon),
        s("FLAT.i", "faithfully flat base change, sa version", false, flat_i),
        s("FLAT.ii", "faithfully flat base change, T version", false, flat_ii),
    ]
}
