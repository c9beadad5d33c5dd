//! Acceptance suite: worked-example reproduction, dual-oracle equivalence,
//! the full statement harness on the default corpus, the invariant property
//! suites, and byte-level determinism of the JSON report stream.

use std::collections::BTreeSet;
use std::process::Command;
use std::sync::OnceLock;
use std::time::{Duration, Instant};

use sasmall_core::matrix::Elt;
use sasmall_core::module::{FgModule, Submodule};
use sasmall_core::oracle::{self, Mask, OracleModule};
use sasmall_core::predicates::{self, LATTICE_BOUND};
use sasmall_core::ring::{divisors, Ring};
use sasmall_core::verify::{
    registry, reproduce_paper_examples, run_all, Corpus, CorpusConfig, Ctx, Status,
};

fn corpus() -> &'static Corpus {
    static CORPUS: OnceLock<Corpus> = OnceLock::new();
    CORPUS.get_or_init(|| Corpus::generate(CorpusConfig::default()).expect("default corpus"))
}

// ------------------------------------------------- 1: worked examples

#[test]
fn paper_examples_reproduce_bit_exactly() {
    let t0 = Instant::now();
    let blocks = reproduce_paper_examples().expect("example blocks");
    assert_eq!(blocks.len(), 8, "eight worked-example blocks");
    for b in &blocks {
        assert!(b.pass, "example block `{}` failed:\n{}", b.name, b.details.join("\n"));
    }
    assert!(
        t0.elapsed() < Duration::from_secs(1),
        "example reproduction took {:?}",
        t0.elapsed()
    );
}

// ------------------------------------------- 2: dual-oracle equivalence

/// Invariant-factor chains `d_1 | d_2 | ...` of divisors of `n` (each >= 2)
/// with product at most `max_order`.
fn chains_for(n: Elt, max_order: Elt) -> Vec<Vec<Elt>> {
    let ds: Vec<Elt> = divisors(n).into_iter().filter(|&d| d >= 2).collect();
    let mut out: Vec<Vec<Elt>> = Vec::new();
    let mut frontier: Vec<Vec<Elt>> = vec![Vec::new()];
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for c in &frontier {
            let prod: Elt = c.iter().product();
            let last = c.last().copied().unwrap_or(1);
            for &d in &ds {
                if d % last == 0 && prod * d <= max_order {
                    let mut e = c.clone();
                    e.push(d);
                    next.push(e);
                }
            }
        }
        out.extend(next.iter().cloned());
        frontier = next;
    }
    out
}

fn mask_elements(om: &OracleModule, mask: Mask) -> Vec<Vec<Elt>> {
    (0..om.order)
        .filter(|i| mask >> i & 1 == 1)
        .map(|i| om.elems[i].clone())
        .collect()
}

/// The element set of the ideal `(g)` of `Z/n`, ascending.
fn ideal_elements(n: Elt, g: Elt) -> Vec<Elt> {
    (0..n).filter(|r| if g == 0 { *r == 0 } else { r % g == 0 }).collect()
}

/// Evenly spread flat indices `0..len*len`, at most `target` of them.
fn pair_sample(len: usize, target: usize) -> Vec<(usize, usize)> {
    let total = len * len;
    let step = (total / target.max(1)).max(1);
    (0..total).step_by(step).map(|p| (p / len, p % len)).collect()
}

/// Engine-side T-sa-smallness over an explicitly supplied lattice, for
/// modules too large to precompute a full context table.
fn tsa_over(m: &FgModule, subs: &[Submodule], n: &Submodule, t: &Submodule, strict: bool) -> bool {
    let ctm = m.colon_top(t).unwrap();
    subs.iter().all(|x| {
        if strict && m.is_zero_sub(x) {
            return true;
        }
        if !m.contains(&m.sum(n, x).unwrap(), t).unwrap() {
            return true;
        }
        m.annihilator(x).unwrap().is_small_in(&ctm).unwrap()
    })
}

// Oracle-side predicates over a precomputed subgroup list (the public
// `mask_is_*` functions re-enumerate the lattice on every call, which is
// fine for spot checks but not for a sweep).

fn o_small(om: &OracleModule, masks: &[Mask], nm: Mask) -> bool {
    let full = om.full_mask();
    masks.iter().all(|&l| l == full || om.join(nm, l) != full)
}

fn o_sa(om: &OracleModule, masks: &[Mask], nm: Mask) -> bool {
    let full = om.full_mask();
    let r: Vec<Elt> = (0..om.n).collect();
    masks
        .iter()
        .all(|&l| om.join(nm, l) != full || oracle::set_is_small_in(om.n, &om.annihilator_set(l), &r))
}

fn o_tsa(om: &OracleModule, masks: &[Mask], nm: Mask, tm: Mask, strict: bool) -> bool {
    let ctm = om.colon_set(tm, om.full_mask());
    masks.iter().all(|&x| {
        if strict && x == 1 {
            return true;
        }
        let covered = tm & !om.join(nm, x) == 0;
        !covered || oracle::set_is_small_in(om.n, &om.annihilator_set(x), &ctm)
    })
}

#[test]
fn oracle_equivalence_on_all_modules_of_order_up_to_64() {
    let t0 = Instant::now();
    let mut checks: u64 = 0;
    for n in 2..=12 {
        for chain in chains_for(n, 64) {
            let m = FgModule::finite(Ring::Zn(n), &chain).expect("chain module");
            let om = OracleModule::new(n, &chain).expect("oracle module");
            let masks = om.all_subgroups();
            let subs: Vec<Submodule> =
                masks.iter().map(|&mk| m.submodule(&mask_elements(&om, mk))).collect();
            let len = subs.len();
            let distinct: BTreeSet<Submodule> = subs.iter().cloned().collect();
            assert_eq!(distinct.len(), len, "{}: oracle subgroups collapse", m.display());

            if len <= 300 {
                // The fast lattice enumeration finds exactly the oracle's
                // subgroups, and the precomputed tables match element-level
                // recomputation everywhere.
                let eng: BTreeSet<Submodule> =
                    m.submodules(LATTICE_BOUND).unwrap().into_iter().collect();
                assert_eq!(eng, distinct, "{}: lattice mismatch", m.display());
                checks += 1;
                let c = Ctx::build(m.clone()).unwrap();
                for (mk, s) in masks.iter().zip(&subs) {
                    let i = c.idx_of(s).unwrap();
                    assert_eq!(
                        ideal_elements(n, c.ann[i].gen),
                        om.annihilator_set(*mk),
                        "{}: Ann({}) mismatch",
                        m.display(),
                        m.display_sub(s)
                    );
                    checks += 1;
                }
                let n_sample: Vec<usize> = if len <= 150 {
                    (0..len).collect()
                } else {
                    (0..len).step_by(len / 64).collect()
                };
                for &i in &n_sample {
                    assert_eq!(
                        c.small[c.idx_of(&subs[i]).unwrap()],
                        o_small(&om, &masks, masks[i]),
                        "{}: small({}) mismatch",
                        m.display(),
                        m.display_sub(&subs[i])
                    );
                    assert_eq!(
                        c.sa[c.idx_of(&subs[i]).unwrap()],
                        o_sa(&om, &masks, masks[i]),
                        "{}: sa-small({}) mismatch",
                        m.display(),
                        m.display_sub(&subs[i])
                    );
                    checks += 2;
                }
                for (i, j) in pair_sample(len, (40_000 / len).clamp(16, 256)) {
                    let (ci, cj) = (c.idx_of(&subs[i]).unwrap(), c.idx_of(&subs[j]).unwrap());
                    let colon = m.colon(&subs[i], &subs[j]).unwrap();
                    assert_eq!(
                        ideal_elements(n, colon.gen),
                        om.colon_set(masks[i], masks[j]),
                        "{}: ({} : {}) mismatch",
                        m.display(),
                        m.display_sub(&subs[i]),
                        m.display_sub(&subs[j])
                    );
                    for strict in [false, true] {
                        let table = if strict { &c.tsa_strict } else { &c.tsa };
                        assert_eq!(
                            table[cj].get(ci),
                            o_tsa(&om, &masks, masks[i], masks[j], strict),
                            "{}: t-sa-small(N = {}, T = {}, strict = {strict}) mismatch",
                            m.display(),
                            m.display_sub(&subs[i]),
                            m.display_sub(&subs[j])
                        );
                    }
                    checks += 3;
                }
            } else {
                // Lattices beyond the table budget: cross-check the raw
                // arithmetic on an evenly spread sample, quantifying over
                // the full (oracle-supplied) lattice on both sides.
                for (i, j) in pair_sample(len, 12) {
                    assert_eq!(
                        ideal_elements(n, m.annihilator(&subs[i]).unwrap().gen),
                        om.annihilator_set(masks[i])
                    );
                    assert_eq!(
                        ideal_elements(n, m.colon(&subs[i], &subs[j]).unwrap().gen),
                        om.colon_set(masks[i], masks[j])
                    );
                    assert_eq!(
                        tsa_over(&m, &subs, &subs[i], &subs[j], false),
                        o_tsa(&om, &masks, masks[i], masks[j], false)
                    );
                    checks += 3;
                }
                for i in (0..len).step_by(len / 8) {
                    let mut small = true;
                    let mut sa = true;
                    for l in &subs {
                        if m.is_full_sub(&m.sum(&subs[i], l).unwrap()) {
                            small &= m.is_full_sub(l);
                            sa &= m.annihilator(l).unwrap().is_small();
                        }
                    }
                    assert_eq!(small, o_small(&om, &masks, masks[i]));
                    assert_eq!(sa, o_sa(&om, &masks, masks[i]));
                    checks += 2;
                }
            }

            // The user-facing predicate functions themselves, exhaustively
            // on small lattices.
            if len <= 12 {
                for (i, j) in pair_sample(len, len * len) {
                    for strict in [false, true] {
                        let v = predicates::is_t_sa_small(&m, &subs[i], &subs[j], strict).unwrap();
                        assert_eq!(
                            v.is_holds(),
                            oracle::mask_is_t_sa_small(&om, masks[i], masks[j], strict),
                            "{}: predicate t-sa-small(N = {}, T = {}, strict = {strict})",
                            m.display(),
                            m.display_sub(&subs[i]),
                            m.display_sub(&subs[j])
                        );
                        checks += 1;
                    }
                }
            }
        }
    }
    assert!(checks >= 10_000, "only {checks} oracle checks ran");
    assert!(
        t0.elapsed() < Duration::from_secs(120),
        "oracle sweep took {:?} for {checks} checks",
        t0.elapsed()
    );
}

// ------------------------------------------------- 3: statement harness

#[test]
fn verify_all_on_the_default_corpus() {
    let t0 = Instant::now();
    let reports = run_all(corpus()).expect("run_all");
    assert!(reports.len() >= 38, "only {} reports", reports.len());

    let expected_vacuous: BTreeSet<&str> =
        registry().iter().filter(|s| s.expected_vacuous).map(|s| s.id).collect();
    assert_eq!(
        expected_vacuous,
        ["R2.3.i.proper-comaximal", "HOLLOW.finv"].into_iter().collect::<BTreeSet<_>>()
    );
    for r in &reports {
        if r.status == Status::Vacuous {
            assert!(
                expected_vacuous.contains(r.id),
                "`{}` is vacuous but not marked expected-vacuous",
                r.id
            );
        } else {
            assert!(r.hypothesis_hits > 0, "`{}` reports no hypothesis hits", r.id);
        }
        if expected_vacuous.contains(r.id) {
            assert_eq!(r.status, Status::Vacuous, "`{}` expected vacuous", r.id);
        }
    }

    // The converse-fails example must be falsified with the recorded
    // witness k = 2 (annihilator 4Z inside (T : M) = 2Z).
    let ex = reports.iter().find(|r| r.id == "EX.converse").expect("EX.converse report");
    assert_eq!(ex.status, Status::Falsified);
    let w = ex.counterexamples.first().expect("witness");
    assert!(w.contains("witness X = <2>") && w.contains("4Z"), "unexpected witness: {w}");

    assert!(
        t0.elapsed() < Duration::from_secs(600),
        "verify all took {:?}",
        t0.elapsed()
    );
}

// ------------------------------------------------- 4: property suites

#[test]
fn definition_reduces_to_sa_small_at_t_equals_m() {
    for c in &corpus().ctxs {
        for n in 0..c.nsubs() {
            assert_eq!(
                c.tsa[c.full].get(n),
                c.sa[n],
                "{}: M-sa-small({}) != sa-small",
                c.tag(),
                c.describe(n)
            );
        }
    }
}

#[test]
fn t_sa_smallness_transfers_to_larger_reference_submodules() {
    for c in &corpus().ctxs {
        for tp in 0..c.nsubs() {
            for t in c.contains[tp].iter_ones() {
                assert!(
                    c.tsa[t].subset_of(&c.tsa[tp]),
                    "{}: T-sa-smallness does not transfer from T = {} to T' = {}",
                    c.tag(),
                    c.describe(t),
                    c.describe(tp)
                );
            }
        }
    }
}

#[test]
fn t_sa_smallness_is_downward_closed_in_n() {
    for c in &corpus().ctxs {
        for t in 0..c.nsubs() {
            for n in c.tsa[t].iter_ones() {
                for np in c.contains[n].iter_ones() {
                    assert!(
                        c.tsa[t].get(np),
                        "{}: {} is {}-sa-small but its submodule {} is not",
                        c.tag(),
                        c.describe(n),
                        c.describe(t),
                        c.describe(np)
                    );
                }
            }
        }
    }
}

#[test]
fn small_ideals_of_the_ring_are_sa_small() {
    let co = corpus();
    for &(_, idx) in &co.ring_ctx {
        let c = &co.ctxs[idx];
        for i in 0..c.nsubs() {
            assert!(
                !c.small[i] || c.sa[i],
                "{}: {} is small but not sa-small",
                c.tag(),
                c.describe(i)
            );
        }
    }
}

#[test]
fn the_module_is_never_sa_small_in_itself() {
    for c in &corpus().ctxs {
        assert!(!c.sa[c.full], "{}: M reported sa-small in M", c.tag());
    }
}

#[test]
fn zero_is_sa_small_iff_the_module_annihilator_is_small() {
    for c in &corpus().ctxs {
        if c.full == c.zero {
            continue; // the zero module has no nonzero cover to test
        }
        assert_eq!(
            c.sa[c.zero],
            c.ann[c.full].is_small(),
            "{}: 0 sa-small does not match Ann(M) small",
            c.tag()
        );
    }
}

#[test]
fn radical_agrees_with_the_sum_of_small_submodules() {
    for c in &corpus().ctxs {
        let sum_of_smalls = (0..c.nsubs())
            .filter(|&i| c.small[i])
            .fold(c.zero, |acc, i| c.sum_idx(acc, i));
        assert_eq!(
            c.rad, sum_of_smalls,
            "{}: intersection of maximals != sum of smalls",
            c.tag()
        );
    }
}

#[test]
fn quotient_transport_is_a_bijection() {
    for c in corpus().bounded(64) {
        for k in 0..c.nsubs() {
            let (q, proj) = c.m.quotient(&c.subs[k]).unwrap();
            let above: Vec<usize> = (0..c.nsubs()).filter(|&i| c.le(k, i)).collect();
            let pushed: BTreeSet<Submodule> = above
                .iter()
                .map(|&i| c.m.push_through(&proj, &q, &c.subs[i]).unwrap())
                .collect();
            assert_eq!(pushed.len(), above.len(), "{}: transport not injective", c.tag());
            assert_eq!(
                pushed,
                q.submodules(LATTICE_BOUND).unwrap().into_iter().collect(),
                "{}: transport not onto the quotient lattice",
                c.tag()
            );
        }
    }
}

#[test]
fn canonicalization_is_generator_order_independent() {
    for c in corpus().bounded(64) {
        for s in &c.subs {
            let rows = &s.rows;
            assert_eq!(&c.m.submodule(rows), s, "{}: rebuild differs", c.tag());
            let mut reversed: Vec<Vec<Elt>> = rows.iter().rev().cloned().collect();
            assert_eq!(&c.m.submodule(&reversed), s);
            // redundant generators (pairwise sums) change nothing
            for w in rows.windows(2) {
                reversed.push(w[0].iter().zip(&w[1]).map(|(a, b)| a + b).collect());
            }
            assert_eq!(&c.m.submodule(&reversed), s);
        }
    }
}

// ----------------------------------------------------- 5: determinism

fn sasmall(args: &[&str]) -> std::process::Output {
    Command::new(env!("CARGO_BIN_EXE_sasmall"))
        .args(args)
        .output()
        .expect("run sasmall")
}

#[test]
fn verify_all_json_is_byte_identical_across_runs() {
    let a = sasmall(&["verify", "all", "--format", "json"]);
    let b = sasmall(&["verify", "all", "--format", "json"]);
    assert!(a.status.success(), "first run failed: {}", String::from_utf8_lossy(&a.stderr));
    assert!(b.status.success(), "second run failed: {}", String::from_utf8_lossy(&b.stderr));
    assert_eq!(a.stdout, b.stdout, "verify all --format json is not deterministic");
    assert!(a.stdout.split(|&b| b == b'\n').filter(|l| !l.is_empty()).count() >= 38);
}

#[test]
fn printed_submodules_parse_back() {
    for (ring, module) in [("Z", "Z/6"), ("Z/8", "Z/8"), ("Z/12", "Z/2 x Z/12"), ("Z", "Z/4 x Z/8")]
    {
        let out = sasmall(&["lattice", "--ring", ring, "--module", module, "--format", "json"]);
        assert!(out.status.success());
        let text = String::from_utf8(out.stdout).unwrap();
        let nodes: Vec<String> = text
            .split("\"nodes\":[")
            .nth(1)
            .unwrap()
            .split(']')
            .next()
            .unwrap()
            .split("\",\"")
            .map(|s| s.trim_matches('"').to_string())
            .collect();
        assert!(nodes.len() >= 4);
        for node in nodes {
            let check = sasmall(&[
                "check", "small", "--ring", ring, "--module", module, "--sub", &node,
            ]);
            assert!(
                check.status.success(),
                "`{node}` did not parse back: {}",
                String::from_utf8_lossy(&check.stderr)
            );
        }
    }
}

#[test]
fn examples_command_reports_eight_of_eight() {
    let out = sasmall(&["examples"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.trim_end().ends_with("8/8 paper examples reproduced"), "{text}");
}
