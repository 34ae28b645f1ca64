//! Hom-space dimensions and orbit dimensions.
//!
//! Dimensions of `Hom(X, Y)` are read off the table for pairs of pickets
//! and extended bilinearly over picket decompositions; no matrices are
//! involved.

use crate::objects::{Picket, S1Object};

/// `dim Hom(x, y)` for two pickets.
pub fn picket_hom(x: Picket, y: Picket) -> usize {
    let (l, m) = (x.height(), y.height());
    if x.is_marked() && !y.is_marked() {
        (l - 1).min(m)
    } else {
        l.min(m)
    }
}

/// `[X, Y] = dim Hom(X, Y)`.
pub fn hom_dim(x: &S1Object, y: &S1Object) -> usize {
    let ys = y.pickets();
    x.pickets()
        .iter()
        .map(|p| ys.iter().map(|q| picket_hom(p, q)).sum::<usize>())
        .sum()
}

/// `[P, Y]` for a single picket `P`.
pub fn picket_hom_into(p: Picket, y: &S1Object) -> usize {
    y.pickets().iter().map(|q| picket_hom(p, q)).sum()
}

/// `dim End(X)`.
pub fn end_dim(x: &S1Object) -> usize {
    hom_dim(x, x)
}

/// Closed form `b² + a² − n(α) − n(β) − n(γ) − b` with `α = (1^a)`.
pub fn orbit_dim_formula(x: &S1Object) -> usize {
    let (a, b) = (x.a() as i64, x.b() as i64);
    let n = (x.alpha().n_stat() + x.beta().n_stat() + x.gamma().n_stat()) as i64;
    let d = b * b + a * a - n - b;
    usize::try_from(d).expect("orbit dimension is nonnegative")
}

/// `dim GL(a) × GL(b) − dim End(X)`: the stabilizer of a point is the
/// automorphism group, which is open in the endomorphism ring.
pub fn orbit_dim_via_end(x: &S1Object) -> usize {
    let (a, b) = (x.a(), x.b());
    a * a + b * b - end_dim(x)
}
