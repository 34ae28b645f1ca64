//! Exhaustive property sweeps.
//!
//! Every sweep walks a finite family of inputs in enumeration order and
//! returns the number of checks together with a description of each
//! failure, so results are identical from run to run.

use std::fmt;

use serde::Serialize;

use crate::genext::{extension_witness, generator_word, star, star_fold};
use crate::homs::{orbit_dim_formula, orbit_dim_via_end};
use crate::objects::{enumerate_s1, objects_up_to, S1Object};
use crate::oracle::{canonical_rep, classify, verify_generic, PrimeField};
use crate::orders::{dom_leq, hom_leq};
use crate::partitions::partitions_of;

#[derive(Debug, Clone, Serialize)]
pub struct SweepReport {
    pub name: String,
    /// What one check ranges over, e.g. "triples".
    pub unit: String,
    pub checked: usize,
    pub failures: Vec<String>,
}

impl SweepReport {
    fn new(name: &str, unit: &str) -> Self {
        Self {
            name: name.into(),
            unit: unit.into(),
            checked: 0,
            failures: Vec::new(),
        }
    }

    fn check(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failures.push(describe());
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

impl fmt::Display for SweepReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.passed() {
            write!(f, "PASS: {} {}", self.checked, self.unit)
        } else {
            write!(
                f,
                "FAIL: {} of {} {}; first: {}",
                self.failures.len(),
                self.checked,
                self.unit,
                self.failures[0]
            )
        }
    }
}

/// Pairs `(y, x)` from `objects_up_to(max_total)` with `b_x + b_y <= max_total`.
fn pairs_with_total(max_total: usize) -> Vec<(S1Object, S1Object)> {
    let objs = objects_up_to(max_total);
    let mut out = Vec::new();
    for y in &objs {
        for x in &objs {
            if x.b() + y.b() <= max_total {
                out.push((y.clone(), x.clone()));
            }
        }
    }
    out
}

/// `(x ∗ y) ∗ z = x ∗ (y ∗ z)` for all triples with each `b <= max_b`.
pub fn associativity(max_b: usize) -> SweepReport {
    let mut report = SweepReport::new("assoc", "triples");
    let objs = objects_up_to(max_b);
    for x in &objs {
        for y in &objs {
            let xy = star(x, y);
            for z in &objs {
                let left = star(&xy, z);
                let right = star(x, &star(y, z));
                report.check(left == right, || {
                    format!("({x}*{y})*{z}={left} but {x}*({y}*{z})={right}")
                });
            }
        }
    }
    report
}

/// For comparable `y ⊴ y'` (distinct) in `S_a^b` with `a <= max_a`,
/// `b <= max_b`, and every `x` with `b_x <= max_b_x`: `y ∗ x ⊴ y' ∗ x` and
/// `x ∗ y ⊴ x ∗ y'`.
pub fn monotonicity(max_a: usize, max_b: usize, max_b_x: usize) -> SweepReport {
    let mut report = SweepReport::new("mono", "pair/object combinations");
    let xs = objects_up_to(max_b_x);
    for b in 0..=max_b {
        for a in 0..=max_a.min(b) {
            let objs = enumerate_s1(a, b);
            for y in &objs {
                for y2 in &objs {
                    if y == y2 || !dom_leq(y, y2).unwrap().leq {
                        continue;
                    }
                    for x in &xs {
                        let right = dom_leq(&star(y, x), &star(y2, x)).unwrap().leq;
                        let left = dom_leq(&star(x, y), &star(x, y2)).unwrap().leq;
                        report.check(right && left, || {
                            format!("{y} <= {y2} with x={x}: y*x ok={right}, x*y ok={left}")
                        });
                    }
                }
            }
        }
    }
    report
}

/// Dominance order equals hom order on every `S_a^b`, `a <= max_a`, `b <= max_b`.
pub fn order_equivalence(max_a: usize, max_b: usize) -> SweepReport {
    let mut report = SweepReport::new("orders", "ordered pairs");
    for b in 0..=max_b {
        for a in 0..=max_a.min(b) {
            let objs = enumerate_s1(a, b);
            for x in &objs {
                for y in &objs {
                    let dom = dom_leq(x, y).unwrap().leq;
                    let hom = hom_leq(x, y).unwrap().leq;
                    report.check(dom == hom, || format!("{x} vs {y}: dom={dom} hom={hom}"));
                }
            }
        }
    }
    report
}

/// Orbit-dimension closed form equals `a² + b² − dim End` on every
/// `S_a^b`, `a <= max_a`, `b <= max_b`.
pub fn orbit_dimension(max_a: usize, max_b: usize) -> SweepReport {
    let mut report = SweepReport::new("orbit-dim", "objects");
    for b in 0..=max_b {
        for a in 0..=max_a.min(b) {
            for x in enumerate_s1(a, b) {
                let (formula, via_end) = (orbit_dim_formula(&x), orbit_dim_via_end(&x));
                report.check(formula == via_end, || {
                    format!("{x}: formula {formula}, via End {via_end}")
                });
            }
        }
    }
    report
}

/// Partial-sum description of `beta` of `y ∗ x` for all pairs with
/// `b_x + b_y <= max_total`:
/// `beta_i = beta^x_i + gamma^y_i` for `i <= #parts(beta^x)`, and beyond
/// that the prefix sums exceed those of `gamma^y + beta^x` by
/// `min(k − #parts(beta^x), Σ_{i<=k} (beta^y_i − gamma^y_i))`.
pub fn partial_sums(max_total: usize) -> SweepReport {
    let mut report = SweepReport::new("partial-sums", "pairs");
    for (y, x) in pairs_with_total(max_total) {
        let z = star(&y, &x);
        let lx = x.beta().num_parts();
        let first = (0..lx).all(|i| z.beta().get(i) == x.beta().get(i) + y.gamma().get(i));
        let base = y.gamma().add(x.beta());
        let second = (lx + 1..=z.b()).all(|k| {
            let marks = y.beta().prefix_sum(k) - y.gamma().prefix_sum(k);
            z.beta().prefix_sum(k) == base.prefix_sum(k) + (k - lx).min(marks)
        });
        report.check(first && second, || {
            format!("{y} * {x} = {z}: (1) {first}, (2) {second}")
        });
    }
    report
}

/// The witness sequences sum to `x`, `y ∗ x` and `y`, for all pairs with
/// `b_x + b_y <= max_total`.
pub fn witness_consistency(max_total: usize) -> SweepReport {
    let mut report = SweepReport::new("witness", "pairs");
    for (y, x) in pairs_with_total(max_total) {
        let w = extension_witness(&y, &x);
        let z = star(&y, &x);
        let ok = w.middle_sum() == z && w.sub_sum() == x && w.quotient_sum() == y;
        report.check(ok, || format!("{y} * {x}: witness sums do not match"));
    }
    report
}

/// Folding `star` over `generator_word(x)` returns `x`, for `b <= max_b`.
pub fn generator_words(max_b: usize) -> SweepReport {
    let mut report = SweepReport::new("words", "objects");
    for x in objects_up_to(max_b) {
        let word: Vec<S1Object> = generator_word(&x).iter().map(|g| g.to_object()).collect();
        let back = star_fold(&word);
        report.check(back == x, || format!("{x}: word folds to {back}"));
    }
    report
}

/// `star` always yields a horizontal strip of the right size.
pub fn strip_closure(max_total: usize) -> SweepReport {
    let mut report = SweepReport::new("strip", "pairs");
    for (y, x) in pairs_with_total(max_total) {
        let z = star(&y, &x);
        let ok = S1Object::new(z.beta().clone(), z.gamma().clone()).is_ok()
            && z.a() == x.a() + y.a()
            && z.b() == x.b() + y.b();
        report.check(ok, || format!("{y} * {x} = {z} is malformed"));
    }
    report
}

/// Conjugation is an involution on partitions of `n <= max_n`.
pub fn conjugate_involution(max_n: usize) -> SweepReport {
    let mut report = SweepReport::new("conjugate", "partitions");
    for n in 0..=max_n {
        for p in partitions_of(n) {
            let back = p.conjugate().conjugate();
            report.check(back == p && p.conjugate().size() == n, || {
                format!("{p} -> {back}")
            });
        }
    }
    report
}

/// The natural order is reflexive, antisymmetric and transitive on
/// partitions of each `n <= max_n`, and agrees with the conjugate
/// prefix-sum description.
pub fn natural_order_axioms(max_n: usize) -> SweepReport {
    let mut report = SweepReport::new("natural-order", "partition triples");
    for n in 0..=max_n {
        let ps = partitions_of(n);
        let le: Vec<Vec<bool>> = ps
            .iter()
            .map(|p| ps.iter().map(|q| p.nat_leq(q).unwrap()).collect())
            .collect();
        for i in 0..ps.len() {
            for j in 0..ps.len() {
                let (cp, cq) = (ps[i].conjugate(), ps[j].conjugate());
                let by_conjugate = (1..=n).all(|k| cp.prefix_sum(k) <= cq.prefix_sum(k));
                let antisym = !(le[i][j] && le[j][i]) || i == j;
                for k in 0..ps.len() {
                    let trans = !(le[i][j] && le[j][k]) || le[i][k];
                    report.check(
                        le[i][i] && antisym && trans && by_conjugate == le[i][j],
                        || format!("{} {} {}", ps[i], ps[j], ps[k]),
                    );
                }
            }
        }
    }
    report
}

/// `classify(canonical_rep(x)) = x` on `S_a^b`, `a <= max_a`, `b <= max_b`.
pub fn classify_round_trip(max_a: usize, max_b: usize, field: PrimeField) -> SweepReport {
    let mut report = SweepReport::new("classify", "objects");
    for b in 0..=max_b {
        for a in 0..=max_a.min(b) {
            for x in enumerate_s1(a, b) {
                let back = classify(&canonical_rep(&x, field));
                report.check(back.as_ref() == Ok(&x), || format!("{x} -> {back:?}"));
            }
        }
    }
    report
}

/// Brute-force check of `y ∗ x` for all pairs with `b_x + b_y <= max_total`
/// and `a_x + a_y <= max_a`.
pub fn oracle_agreement(
    max_total: usize,
    max_a: usize,
    field: PrimeField,
    max_bits: u32,
) -> SweepReport {
    let mut report = SweepReport::new("oracle", "pairs");
    for (y, x) in pairs_with_total(max_total) {
        if x.a() + y.a() > max_a {
            continue;
        }
        match verify_generic(&y, &x, field, max_bits) {
            Ok(r) => report.check(r.passed(), || {
                format!("{y} * {x}: {}", r.failures.join("; "))
            }),
            Err(e) => report.check(false, || format!("{y} * {x}: {e}")),
        }
    }
    report
}
