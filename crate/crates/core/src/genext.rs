//! Generic extensions.
//!
//! [`star`]`(y, x)` is the generic extension of `y` by `x`: the extension
//! `0 → x → z → y → 0` with the smallest endomorphism ring. It is computed
//! purely on the horizontal-strip pairs. The operation is associative with
//! the zero object as identity, so it turns the set of isomorphism classes
//! into a monoid, generated by `P_1^1` and the powers `(P_0^1)^{⊕n}`.
//!
//! Argument order follows the notation `Y ∗ X`: the quotient comes first,
//! the subobject second.

use std::fmt;

use crate::error::{Error, Result};
use crate::objects::{Picket, S1Object};
use crate::partitions::Partition;

/// The generic extension `y ∗ x` of the quotient `y` by the subobject `x`.
pub fn star(y: &S1Object, x: &S1Object) -> S1Object {
    let (bx, gx) = (x.beta(), x.gamma());
    let (by, gy) = (y.beta(), y.gamma());
    let gamma = gx.add(gy);

    let (lx, ly) = (bx.num_parts(), by.num_parts());
    let common = lx.min(ly);
    let mut beta = Vec::with_capacity(lx.max(ly) + y.a());
    // marked summands of y still waiting for a partner
    let mut n = 0usize;
    for i in 0..common {
        beta.push(bx.get(i) + gy.get(i));
        if by.get(i) != gy.get(i) {
            n += 1;
        }
    }
    if lx > common {
        beta.extend((common..lx).map(|i| bx.get(i)));
    } else {
        for i in common..ly {
            let absorb = gy.get(i) == by.get(i) && n > 0;
            beta.push(by.get(i) + absorb as usize);
            n -= absorb as usize;
        }
    }
    beta.extend(std::iter::repeat_n(1, n));

    debug_assert!(
        beta.windows(2).all(|w| w[0] >= w[1]),
        "unsorted beta {beta:?} for {y} * {x}"
    );
    let beta = Partition::from_unsorted(beta);
    S1Object::new(beta, gamma).expect("generic extension is a horizontal strip")
}

/// `x ∗ x ∗ … ∗ x` (`k` factors); the zero object for `k = 0`.
pub fn star_power(x: &S1Object, k: usize) -> S1Object {
    (0..k).fold(S1Object::zero(), |acc, _| star(&acc, x))
}

/// Folds `star` over a word, `w_1 ∗ w_2 ∗ … ∗ w_t`.
pub fn star_fold<'a>(word: impl IntoIterator<Item = &'a S1Object>) -> S1Object {
    word.into_iter()
        .fold(S1Object::zero(), |acc, w| star(&acc, w))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Generator {
    /// `P_1^1`.
    MarkedSimple,
    /// `(P_0^1)^{⊕n}`, `n >= 1`.
    UnmarkedSimples(usize),
}

impl Generator {
    pub fn to_object(self) -> S1Object {
        match self {
            Self::MarkedSimple => Picket::marked(1).to_object(),
            Self::UnmarkedSimples(n) => S1Object::from_pickets(&vec![Picket::unmarked(1); n]),
        }
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::MarkedSimple => f.write_str("P1^1"),
            Self::UnmarkedSimples(1) => f.write_str("P0^1"),
            Self::UnmarkedSimples(n) => write!(f, "(P0^1)^{n}"),
        }
    }
}

/// A word over the generators whose product is `x`.
///
/// Each step strips the top box of every column: the summands of height
/// one, together with one `P_0^1` for every taller summand, form a layer
/// `(P_0^1)^{⊕u} ⊕ (P_1^1)^{⊕v} = (P_1^1)^{∗v} ∗ (P_0^1)^{⊕u}`, and
/// `x = layer ∗ rest`.
pub fn generator_word(x: &S1Object) -> Vec<Generator> {
    let mut word = Vec::new();
    let mut rest = x.pickets();
    while !rest.is_empty() {
        let mut unmarked = 0;
        let mut marked = 0;
        let mut lower = Vec::new();
        for p in rest.iter() {
            if p.height() >= 2 {
                unmarked += 1;
                lower.push(Picket::new(p.epsilon(), p.height() - 1).unwrap());
            } else if p.is_marked() {
                marked += 1;
            } else {
                unmarked += 1;
            }
        }
        word.extend(std::iter::repeat_n(Generator::MarkedSimple, marked));
        if unmarked > 0 {
            word.push(Generator::UnmarkedSimples(unmarked));
        }
        rest = crate::objects::PicketSum::new(lower);
    }
    word
}

/// Which short exact sequence a witness row is.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SequenceKind {
    /// `0 → P_ε^l → P_ε^{l+m} → P_0^m → 0`, `ε` the index of the subobject.
    Glue { sub_marked: bool },
    /// `0 → P_0^m → P_0^{m+r-1} ⊕ P_1^{k+1} → P_1^r ⊕ P_0^k → 0`.
    E1 { m: usize, r: usize, k: usize },
    /// `0 → P_1^m → P_1^{m+r-1} ⊕ P_1^{k+1} → P_1^r ⊕ P_0^k → 0`.
    E2 { m: usize, r: usize, k: usize },
    /// `0 → X_i → X_i → 0 → 0`.
    SubOnly,
    /// `0 → 0 → Y_i → Y_i → 0`.
    QuotientOnly,
}

impl fmt::Display for SequenceKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Glue { sub_marked } => write!(f, "glue(sub P{})", *sub_marked as u8),
            Self::E1 { m, r, k } => write!(f, "E1({m},{r},{k})"),
            Self::E2 { m, r, k } => write!(f, "E2({m},{r},{k})"),
            Self::SubOnly => f.write_str("sub-only"),
            Self::QuotientOnly => f.write_str("quotient-only"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WitnessRow {
    pub kind: SequenceKind,
    pub sub: S1Object,
    pub middle: S1Object,
    pub quotient: S1Object,
}

/// Explicit short exact sequences whose direct sum is
/// `0 → x → star(y, x) → y → 0`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ExtensionWitness {
    pub rows: Vec<WitnessRow>,
}

impl ExtensionWitness {
    fn sum_of(&self, f: impl Fn(&WitnessRow) -> &S1Object) -> S1Object {
        self.rows
            .iter()
            .fold(S1Object::zero(), |acc, r| acc.direct_sum(f(r)))
    }

    pub fn sub_sum(&self) -> S1Object {
        self.sum_of(|r| &r.sub)
    }

    pub fn middle_sum(&self) -> S1Object {
        self.sum_of(|r| &r.middle)
    }

    pub fn quotient_sum(&self) -> S1Object {
        self.sum_of(|r| &r.quotient)
    }
}

fn sum_of_pickets(ps: &[Picket]) -> S1Object {
    S1Object::from_pickets(ps)
}

/// Pairs the summands of `x` and `y` by index and writes `star(y, x)` as a
/// direct sum of middle terms.
///
/// For `i` up to the smaller summand count, `x_i` is glued under `y_i`.
/// A marked `y_i` needs an `E`-sequence, whose second quotient summand
/// `P_0^k` is the first still unused unmarked summand `y_j` with `j`
/// beyond the summand count of `x` (or nothing, `k = 0`, when none is
/// left). Remaining summands of `x` or `y` pass through unchanged.
pub fn extension_witness(y: &S1Object, x: &S1Object) -> ExtensionWitness {
    let xs = x.pickets();
    let ys = y.pickets();
    let (xs, ys) = (xs.as_slice(), ys.as_slice());
    let common = xs.len().min(ys.len());

    let marked: Vec<usize> = (0..common).filter(|&i| ys[i].is_marked()).collect();
    let spare: Vec<usize> = (xs.len()..ys.len())
        .filter(|&j| !ys[j].is_marked())
        .collect();
    let partner = |i: usize| {
        marked
            .iter()
            .position(|&t| t == i)
            .and_then(|s| spare.get(s).copied())
    };
    let used: Vec<usize> = spare.iter().copied().take(marked.len()).collect();

    let mut rows = Vec::with_capacity(xs.len().max(ys.len()));
    for i in 0..common {
        let (xp, yp) = (xs[i], ys[i]);
        let (l, r) = (xp.height(), yp.height());
        if !yp.is_marked() {
            let middle = Picket::new(xp.epsilon(), l + r).unwrap();
            rows.push(WitnessRow {
                kind: SequenceKind::Glue {
                    sub_marked: xp.is_marked(),
                },
                sub: xp.to_object(),
                middle: middle.to_object(),
                quotient: yp.to_object(),
            });
            continue;
        }
        let k = partner(i).map_or(0, |j| ys[j].height());
        debug_assert!(r > k);
        let kind = if xp.is_marked() {
            SequenceKind::E2 { m: l, r, k }
        } else {
            SequenceKind::E1 { m: l, r, k }
        };
        let mut quotient = vec![yp];
        if k > 0 {
            quotient.push(Picket::unmarked(k));
        }
        rows.push(WitnessRow {
            kind,
            sub: xp.to_object(),
            middle: sum_of_pickets(&[
                Picket::new(xp.epsilon(), l + r - 1).unwrap(),
                Picket::marked(k + 1),
            ]),
            quotient: sum_of_pickets(&quotient),
        });
    }
    for &xp in &xs[common..] {
        rows.push(WitnessRow {
            kind: SequenceKind::SubOnly,
            sub: xp.to_object(),
            middle: xp.to_object(),
            quotient: S1Object::zero(),
        });
    }
    for (j, &yp) in ys.iter().enumerate().skip(common) {
        if used.contains(&j) {
            continue;
        }
        rows.push(WitnessRow {
            kind: SequenceKind::QuotientOnly,
            sub: S1Object::zero(),
            middle: yp.to_object(),
            quotient: yp.to_object(),
        });
    }
    ExtensionWitness { rows }
}

/// Necessary condition for `z` to be an extension of `y` by `x`, from the
/// prefix-sum bound for short exact sequences of nilpotent operators
/// applied to the cokernel sequence, the ambient sequence, and the ambient
/// sequence of the lift `0 → x ⊕ (P_1^1)^{a_y} → z → (γ^y, γ^y) → 0`.
pub fn candidate_filter(y: &S1Object, x: &S1Object, z: &S1Object) -> Result<bool> {
    if z.a() != x.a() + y.a() || z.b() != x.b() + y.b() {
        return Err(Error::SizeMismatch(format!(
            "candidate {z} has (a,b)=({},{}), expected ({},{})",
            z.a(),
            z.b(),
            x.a() + y.a(),
            x.b() + y.b()
        )));
    }
    let gamma_bound = x.gamma().add(y.gamma());
    let beta_bound = x.beta().add(y.beta());
    let lifted_bound = x.beta().union(&Partition::ones(y.a())).add(y.gamma());
    let len = z.b();
    Ok((1..=len).all(|k| {
        z.gamma().prefix_sum(k) <= gamma_bound.prefix_sum(k)
            && z.beta().prefix_sum(k) <= beta_bound.prefix_sum(k)
            && z.beta().prefix_sum(k) <= lifted_bound.prefix_sum(k)
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::objects::objects_up_to;

    fn obj(s: &str) -> S1Object {
        s.parse().unwrap()
    }

    #[test]
    fn worked_examples() {
        let cases = [
            (
                "P1^4+P0^3+P0^2+P1^2+P0^1+P0^1",
                "P0^4+P1^4+P1^3",
                "[7,7,5,2,2,1]/[7,6,4,1,1,1]",
            ),
            (
                "P0^4+P1^4+P1^3",
                "P1^4+P0^3+P0^2+P1^2+P0^1+P0^1",
                "[8,6,4,2,1,1,1,1]/[7,6,4,1,1,1]",
            ),
            ("P1^2", "P0^1+P0^1+P1^1", "[2,1,1,1]/[2,1]"),
            ("P0^1+P0^1+P1^1", "P1^2", "[3,1,1]/[2,1]"),
            ("P1^2", "P1^2+P0^1+P0^1+P1^1", "[3,1,1,1,1]/[2,1,1]"),
            ("P1^2+P0^1+P0^1+P1^1", "P1^2", "[3,2,1,1]/[2,1,1]"),
        ];
        for (y, x, z) in cases {
            assert_eq!(star(&obj(y), &obj(x)), obj(z), "{y} * {x}");
        }
    }

    #[test]
    fn zero_is_identity() {
        for x in objects_up_to(5) {
            assert_eq!(star(&x, &S1Object::zero()), x);
            assert_eq!(star(&S1Object::zero(), &x), x);
        }
    }

    #[test]
    fn sizes_add() {
        let objs = objects_up_to(4);
        for y in &objs {
            for x in &objs {
                let z = star(y, x);
                assert_eq!((z.a(), z.b()), (x.a() + y.a(), x.b() + y.b()));
                assert_eq!(*z.gamma(), x.gamma().add(y.gamma()));
            }
        }
    }

    #[test]
    fn star_power_examples() {
        for m in 0..6 {
            let zero_m = star_power(&obj("P0^1"), m);
            let expect = if m == 0 {
                S1Object::zero()
            } else {
                Picket::unmarked(m).to_object()
            };
            assert_eq!(zero_m, expect);
            let ones = star_power(&obj("P1^1"), m);
            assert_eq!(ones, S1Object::from_pickets(&vec![Picket::marked(1); m]));
        }
        assert_eq!(star_power(&obj("P1^3+P0^1"), 0), S1Object::zero());
    }

    #[test]
    fn generator_word_examples() {
        use Generator::*;
        assert_eq!(
            generator_word(&obj("P1^2")),
            vec![UnmarkedSimples(1), MarkedSimple]
        );
        assert!(generator_word(&S1Object::zero()).is_empty());
        assert_eq!(generator_word(&obj("P0^3")), vec![UnmarkedSimples(1); 3]);
        assert_eq!(
            generator_word(&obj("P0^1+P0^1+P1^1+P1^1")),
            vec![MarkedSimple, MarkedSimple, UnmarkedSimples(2)]
        );
    }

    #[test]
    fn generator_word_folds_back() {
        for x in objects_up_to(6) {
            let word: Vec<S1Object> = generator_word(&x).iter().map(|g| g.to_object()).collect();
            assert_eq!(star_fold(&word), x);
        }
    }

    #[test]
    fn witness_single_summands() {
        let w = extension_witness(&obj("P0^3"), &obj("P0^2"));
        assert_eq!(w.rows.len(), 1);
        assert_eq!(w.rows[0].middle, obj("P0^5"));
        assert_eq!(w.rows[0].kind, SequenceKind::Glue { sub_marked: false });

        let w = extension_witness(&obj("P1^3"), &obj("P0^2"));
        assert_eq!(w.rows.len(), 1);
        assert_eq!(w.rows[0].kind, SequenceKind::E1 { m: 2, r: 3, k: 0 });
        assert_eq!(w.rows[0].middle, obj("P0^4+P1^1"));

        let y = obj("P1^3+P0^2+P1^1");
        let w = extension_witness(&y, &S1Object::zero());
        assert!(w
            .rows
            .iter()
            .all(|r| r.kind == SequenceKind::QuotientOnly && r.sub.is_zero()));
        assert_eq!(w.quotient_sum(), y);
    }

    #[test]
    fn witness_example_one_pairs_marked_with_spare() {
        let y = obj("P1^4+P0^3+P0^2+P1^2+P0^1+P0^1");
        let x = obj("P0^4+P1^4+P1^3");
        let w = extension_witness(&y, &x);
        assert_eq!(w.rows[0].kind, SequenceKind::E1 { m: 4, r: 4, k: 1 });
        assert_eq!(w.middle_sum(), star(&y, &x));
        assert_eq!(w.sub_sum(), x);
        assert_eq!(w.quotient_sum(), y);
    }

    #[test]
    fn witness_sums_match() {
        let objs = objects_up_to(5);
        for y in &objs {
            for x in &objs {
                if x.b() + y.b() > 5 {
                    continue;
                }
                let w = extension_witness(y, x);
                assert_eq!(w.middle_sum(), star(y, x), "{y} * {x}");
                assert_eq!(w.sub_sum(), *x);
                assert_eq!(w.quotient_sum(), *y);
                for row in &w.rows {
                    if let SequenceKind::E1 { m, r, k } | SequenceKind::E2 { m, r, k } = row.kind {
                        assert!(m >= 1 && r > k);
                    }
                }
            }
        }
    }

    #[test]
    fn filter_accepts_generic_extension() {
        let objs = objects_up_to(4);
        for y in &objs {
            for x in &objs {
                assert!(candidate_filter(y, x, &star(y, x)).unwrap());
            }
        }
        let (y, x) = (obj("P1^2"), obj("P0^1+P0^1+P1^1"));
        assert!(candidate_filter(&y, &x, &obj("[2,1,1,1]/[2,1]")).unwrap());
        assert!(candidate_filter(&x, &y, &obj("[3,1,1]/[2,1]")).unwrap());
    }

    #[test]
    fn filter_rejects_oversized_first_part() {
        // gamma^z = gamma^x + gamma^y, but beta^z_1 = 3 exceeds beta^x_1 + beta^y_1 = 2
        let (y, x) = (obj("P0^1+P1^1"), obj("P0^1"));
        assert!(!candidate_filter(&y, &x, &obj("P1^3")).unwrap());
        assert!(candidate_filter(&y, &x, &obj("P1^4")).is_err());
    }
}
