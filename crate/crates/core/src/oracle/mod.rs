//! Brute-force extensions over a finite field.
//!
//! Objects are realized as matrix pairs `(f, φ)` with `φ` nilpotent,
//! `φ f = 0` and `f` injective. For a subobject `X = (g, φ_X)` and a
//! quotient `Y = (f, φ_Y)`, every extension is conjugate to one of the form
//!
//! ```text
//!     ( [ g  h ]   [ φ_X  ν  ] )
//!     ( [ 0  f ] , [ 0   φ_Y ] )
//! ```
//!
//! Block triangularity already makes the big operator nilpotent and the big
//! embedding injective, so the only condition left is the linear equation
//! `φ_X h + ν f = 0`. Its solution space is walked through a kernel basis
//! and every middle term is classified by its pair of Jordan types.
//!
//! Only [`verify_generic`] touches [`crate::genext`], and only to compare
//! against it.

mod matrix;

use std::collections::BTreeSet;

use serde::Serialize;

pub use matrix::{FieldMatrix, PrimeField};

use crate::error::{Error, Result};
use crate::genext::{candidate_filter, star};
use crate::homs::end_dim;
use crate::objects::S1Object;
use crate::orders::dom_leq;
use crate::partitions::Partition;

/// Default bound on `log2` of the number of enumerated solutions.
pub const DEFAULT_MAX_BITS: u32 = 22;

/// A point `(f, φ)`: `f` is `b × a`, `φ` is `b × b`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModuleRep {
    pub f: FieldMatrix,
    pub phi: FieldMatrix,
}

impl ModuleRep {
    /// Checks `φ f = 0`, `rank f = a` and `φ^b = 0`.
    pub fn validate(&self) -> Result<()> {
        let b = self.phi.rows();
        if self.phi.cols() != b || self.f.rows() != b {
            return Err(Error::InvalidRep(format!(
                "shapes f {}x{}, phi {}x{}",
                self.f.rows(),
                self.f.cols(),
                self.phi.rows(),
                self.phi.cols()
            )));
        }
        if !self.phi.mul(&self.f).is_zero() {
            return Err(Error::InvalidRep("phi * f != 0".into()));
        }
        if self.f.rank() != self.f.cols() {
            return Err(Error::InvalidRep("f is not injective".into()));
        }
        if !self.phi.pow(b).is_zero() {
            return Err(Error::NotNilpotent);
        }
        Ok(())
    }
}

/// Block-diagonal representative: `P_ε^m` becomes a nilpotent Jordan block
/// on the basis `1, T, …, T^{m-1}`, and for `ε = 1` a column of `f` hitting
/// `T^{m-1}`.
pub fn canonical_rep(x: &S1Object, field: PrimeField) -> ModuleRep {
    let (a, b) = (x.a(), x.b());
    let mut f = FieldMatrix::zeros(field, b, a);
    let mut phi = FieldMatrix::zeros(field, b, b);
    let (mut offset, mut col) = (0, 0);
    for p in x.pickets().iter() {
        let m = p.height();
        for j in 0..m - 1 {
            phi[(offset + j + 1, offset + j)] = 1;
        }
        if p.is_marked() {
            f[(offset + m - 1, col)] = 1;
            col += 1;
        }
        offset += m;
    }
    ModuleRep { f, phi }
}

/// Jordan type of a nilpotent matrix, from the kernel dimensions of its
/// powers.
pub fn jordan_type(phi: &FieldMatrix) -> Result<Partition> {
    let b = phi.rows();
    if phi.cols() != b {
        return Err(Error::InvalidRep(format!(
            "{}x{} operator is not square",
            b,
            phi.cols()
        )));
    }
    let mut power = FieldMatrix::identity(phi.field(), b);
    let mut prev_kernel = 0;
    let mut jumps = Vec::new();
    for _ in 0..b {
        power = power.mul(phi);
        let kernel = b - power.rank();
        if kernel == prev_kernel {
            break;
        }
        jumps.push(kernel - prev_kernel);
        prev_kernel = kernel;
    }
    if prev_kernel != b {
        return Err(Error::NotNilpotent);
    }
    let conj = Partition::new(jumps).map_err(|e| Error::InvalidRep(e.to_string()))?;
    Ok(conj.conjugate())
}

/// Operator induced by `φ` on `K^b / im f`, in the coordinates of the
/// standard basis vectors that are not pivots of `im f`.
fn cokernel_operator(rep: &ModuleRep) -> FieldMatrix {
    let field = rep.phi.field();
    let b = rep.phi.rows();
    let (echelon, pivots) = rep.f.transpose().rref();
    let free: Vec<usize> = (0..b).filter(|c| !pivots.contains(c)).collect();
    let mut induced = FieldMatrix::zeros(field, free.len(), free.len());
    for (jc, &j) in free.iter().enumerate() {
        let mut v = rep.phi.column(j);
        for (row, &pc) in pivots.iter().enumerate() {
            let coeff = v[pc];
            if coeff == 0 {
                continue;
            }
            for (t, vt) in v.iter_mut().enumerate() {
                *vt = field.sub(*vt, field.mul(coeff, echelon[(row, t)]));
            }
        }
        for (ic, &i) in free.iter().enumerate() {
            induced[(ic, jc)] = v[i];
        }
    }
    induced
}

pub fn classify(rep: &ModuleRep) -> Result<S1Object> {
    rep.validate()?;
    let beta = jordan_type(&rep.phi)?;
    let gamma = jordan_type(&cokernel_operator(rep))?;
    S1Object::new(beta, gamma)
}

/// Reads `NILOPS_MAX_ORACLE_BITS`, falling back to [`DEFAULT_MAX_BITS`].
pub fn max_bits_from_env() -> u32 {
    std::env::var("NILOPS_MAX_ORACLE_BITS")
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(DEFAULT_MAX_BITS)
}

/// Basis of the solutions `(h, ν)` of `φ_X h + ν f = 0`, each flattened as
/// `h` (row-major, `d × a`) followed by `ν` (row-major, `d × b`).
fn extension_data_basis(sub: &ModuleRep, quot: &ModuleRep) -> Vec<Vec<u32>> {
    let field = sub.phi.field();
    let d = sub.phi.rows();
    let (b, a) = (quot.f.rows(), quot.f.cols());
    let unknowns = d * a + d * b;
    let mut system = FieldMatrix::zeros(field, d * a, unknowns);
    for r in 0..d {
        for c in 0..a {
            let eq = r * a + c;
            for t in 0..d {
                system[(eq, t * a + c)] = sub.phi[(r, t)];
            }
            for t in 0..b {
                system[(eq, d * a + r * b + t)] = quot.f[(t, c)];
            }
        }
    }
    system.kernel_basis()
}

/// Isomorphism types of all extensions `0 → x → z → y → 0` realized over
/// `field`, sorted.
pub fn enumerate_extensions(
    y: &S1Object,
    x: &S1Object,
    field: PrimeField,
    max_bits: u32,
) -> Result<Vec<S1Object>> {
    let sub = canonical_rep(x, field);
    let quot = canonical_rep(y, field);
    let (c, d) = (x.a(), x.b());
    let (a, b) = (y.a(), y.b());
    let basis = extension_data_basis(&sub, &quot);
    let dim = basis.len();
    let count = (field.p() as u128)
        .checked_pow(dim as u32)
        .filter(|&n| n <= 1u128 << max_bits.min(127))
        .ok_or(Error::SizeGuard {
            dim,
            p: field.p(),
            limit_bits: max_bits,
        })?;

    let mut big_f = FieldMatrix::zeros(field, d + b, c + a);
    big_f.set_block(0, 0, &sub.f);
    big_f.set_block(d, c, &quot.f);
    let mut big_phi = FieldMatrix::zeros(field, d + b, d + b);
    big_phi.set_block(0, 0, &sub.phi);
    big_phi.set_block(d, d, &quot.phi);

    let mut found = BTreeSet::new();
    let mut coeffs = vec![0u32; dim];
    for _ in 0..count {
        let mut v = vec![0u32; d * a + d * b];
        for (k, vec) in coeffs.iter().zip(&basis) {
            if *k == 0 {
                continue;
            }
            for (vi, &bi) in v.iter_mut().zip(vec) {
                *vi = field.add(*vi, field.mul(*k, bi));
            }
        }
        for i in 0..d {
            for j in 0..a {
                big_f[(i, c + j)] = v[i * a + j];
            }
            for j in 0..b {
                big_phi[(i, d + j)] = v[d * a + i * b + j];
            }
        }
        let rep = ModuleRep {
            f: big_f.clone(),
            phi: big_phi.clone(),
        };
        found.insert(classify(&rep)?);
        // next coefficient vector in base p
        for k in coeffs.iter_mut() {
            *k += 1;
            if *k < field.p() {
                break;
            }
            *k = 0;
        }
    }
    Ok(found.into_iter().collect())
}

#[derive(Debug, Clone, Serialize)]
pub struct Assertions {
    /// `star(y, x)` occurs among the enumerated extensions.
    pub member: bool,
    /// `star(y, x) ⊴ z` for every enumerated `z`.
    pub dominance_minimal: bool,
    /// `star(y, x)` is the only enumerated type with the smallest `dim End`.
    pub unique_end_minimizer: bool,
    /// Every enumerated `z` passes [`candidate_filter`].
    pub filter_passes: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct GenericReport {
    pub quotient: S1Object,
    pub sub: S1Object,
    pub p: u32,
    pub extensions: Vec<S1Object>,
    pub generic: S1Object,
    pub assertions: Assertions,
    /// Human-readable counterexamples, empty when all assertions hold.
    pub failures: Vec<String>,
}

impl GenericReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Checks `star(y, x)` against the brute-force extension set.
pub fn verify_generic(
    y: &S1Object,
    x: &S1Object,
    field: PrimeField,
    max_bits: u32,
) -> Result<GenericReport> {
    let extensions = enumerate_extensions(y, x, field, max_bits)?;
    let generic = star(y, x);
    let mut failures = Vec::new();

    let member = extensions.contains(&generic);
    if !member {
        failures.push(format!("{generic} is not among the extensions"));
    }
    let mut dominance_minimal = true;
    let mut unique_end_minimizer = true;
    let mut filter_passes = true;
    let generic_end = end_dim(&generic);
    for z in &extensions {
        if !dom_leq(&generic, z)?.leq {
            dominance_minimal = false;
            failures.push(format!("{generic} is not below extension {z}"));
        }
        if z != &generic && end_dim(z) <= generic_end {
            unique_end_minimizer = false;
            failures.push(format!(
                "extension {z} has dim End {} <= {generic_end}",
                end_dim(z)
            ));
        }
        if !candidate_filter(y, x, z)? {
            filter_passes = false;
            failures.push(format!("extension {z} fails the prefix-sum filter"));
        }
    }
    Ok(GenericReport {
        quotient: y.clone(),
        sub: x.clone(),
        p: field.p(),
        extensions,
        generic,
        assertions: Assertions {
            member,
            dominance_minimal,
            unique_end_minimizer,
            filter_passes,
        },
        failures,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::objects::{enumerate_s1, Picket};

    fn obj(s: &str) -> S1Object {
        s.parse().unwrap()
    }

    fn f2() -> PrimeField {
        PrimeField::new(2).unwrap()
    }

    #[test]
    fn canonical_rep_examples() {
        let k = f2();
        let rep = canonical_rep(&obj("P1^2"), k);
        assert_eq!(rep.phi, FieldMatrix::from_rows(k, 2, 2, vec![0, 0, 1, 0]));
        assert_eq!(rep.f, FieldMatrix::from_rows(k, 2, 1, vec![0, 1]));

        let rep = canonical_rep(&obj("P0^1"), k);
        assert!(rep.phi.is_zero() && rep.phi.rows() == 1);
        assert_eq!((rep.f.rows(), rep.f.cols()), (1, 0));

        let rep = canonical_rep(&obj("P0^1+P1^1"), k);
        assert!(rep.phi.is_zero());
        assert_eq!(rep.f, FieldMatrix::from_rows(k, 2, 1, vec![0, 1]));
    }

    #[test]
    fn jordan_type_examples() {
        let k = f2();
        let block = canonical_rep(&obj("P0^3"), k).phi;
        assert_eq!(
            jordan_type(&block).unwrap(),
            Partition::new(vec![3]).unwrap()
        );
        assert_eq!(
            jordan_type(&FieldMatrix::zeros(k, 4, 4)).unwrap(),
            Partition::ones(4)
        );
        let y = obj("P1^4+P0^3+P0^2+P1^2+P0^1+P0^1");
        assert_eq!(
            jordan_type(&canonical_rep(&y, k).phi).unwrap(),
            Partition::new(vec![4, 3, 2, 2, 1, 1]).unwrap()
        );
        assert_eq!(
            jordan_type(&FieldMatrix::identity(k, 2)),
            Err(Error::NotNilpotent)
        );
    }

    #[test]
    fn classify_rejects_bad_reps() {
        let k = f2();
        let mut rep = canonical_rep(&obj("P1^2"), k);
        rep.f = FieldMatrix::from_rows(k, 2, 1, vec![1, 0]);
        assert!(matches!(classify(&rep), Err(Error::InvalidRep(_))));
        rep.f = FieldMatrix::zeros(k, 2, 1);
        assert!(matches!(classify(&rep), Err(Error::InvalidRep(_))));
        assert_eq!(
            classify(&canonical_rep(&S1Object::zero(), k)),
            Ok(S1Object::zero())
        );
        assert_eq!(
            classify(&canonical_rep(&obj("P1^2"), k)),
            Ok(obj("[2]/[1]"))
        );
    }

    #[test]
    fn classify_inverts_canonical_rep() {
        for p in [2, 3] {
            let k = PrimeField::new(p).unwrap();
            for b in 0..=5 {
                for a in 0..=b.min(2) {
                    for x in enumerate_s1(a, b) {
                        assert_eq!(classify(&canonical_rep(&x, k)).unwrap(), x);
                    }
                }
            }
        }
    }

    #[test]
    fn classify_is_base_change_invariant() {
        // (f, φ) -> (h f g, h φ h^{-1}) with h = I + N, N the superdiagonal
        let k = PrimeField::new(3).unwrap();
        let x = obj("P1^3+P0^2+P1^1");
        let rep = canonical_rep(&x, k);
        let b = x.b();
        let mut neg_n = FieldMatrix::zeros(k, b, b);
        for i in 0..b - 1 {
            neg_n[(i, i + 1)] = k.neg(1);
        }
        let mut h = FieldMatrix::identity(k, b);
        for i in 0..b - 1 {
            h[(i, i + 1)] = 1;
        }
        let mut h_inv = FieldMatrix::zeros(k, b, b);
        for e in 0..b {
            let term = neg_n.pow(e);
            for i in 0..b {
                for j in 0..b {
                    h_inv[(i, j)] = k.add(h_inv[(i, j)], term[(i, j)]);
                }
            }
        }
        assert_eq!(h.mul(&h_inv), FieldMatrix::identity(k, b));
        let g = FieldMatrix::from_rows(k, 2, 2, vec![2, 1, 0, 1]);
        let moved = ModuleRep {
            f: h.mul(&rep.f).mul(&g),
            phi: h.mul(&rep.phi).mul(&h_inv),
        };
        assert_ne!(moved, rep);
        assert_eq!(classify(&moved).unwrap(), x);
    }

    #[test]
    fn extensions_of_simples() {
        let k = f2();
        let p01 = obj("P0^1");
        let found = enumerate_extensions(&p01, &p01, k, DEFAULT_MAX_BITS).unwrap();
        assert_eq!(found.len(), 2);
        assert!(found.contains(&obj("P0^2")));
        assert!(found.contains(&obj("P0^1+P0^1")));

        let x = obj("P1^3+P0^1");
        assert_eq!(
            enumerate_extensions(&S1Object::zero(), &x, k, DEFAULT_MAX_BITS).unwrap(),
            vec![x.clone()]
        );
        assert_eq!(
            enumerate_extensions(&x, &S1Object::zero(), k, DEFAULT_MAX_BITS).unwrap(),
            vec![x]
        );

        let found = enumerate_extensions(&obj("P0^1+P0^1+P1^1"), &obj("P1^2"), k, DEFAULT_MAX_BITS)
            .unwrap();
        assert!(found.contains(&obj("[3,1,1]/[2,1]")));
    }

    #[test]
    fn verify_examples() {
        let k = f2();
        let r = verify_generic(&obj("P0^1+P0^1+P1^1"), &obj("P1^2"), k, DEFAULT_MAX_BITS).unwrap();
        assert!(r.passed(), "{:?}", r.failures);

        let r = verify_generic(&S1Object::zero(), &obj("P1^2+P0^1"), k, DEFAULT_MAX_BITS).unwrap();
        assert!(r.passed());
        assert_eq!(r.extensions.len(), 1);

        let r = verify_generic(&obj("P0^1"), &obj("P1^1"), k, DEFAULT_MAX_BITS).unwrap();
        assert_eq!(r.extensions, vec![obj("[1,1]/[1]"), obj("[2]/[1]")]);
        assert_eq!(r.generic, Picket::marked(2).to_object());
        assert!(r.passed());
    }

    #[test]
    fn size_guard() {
        let k = f2();
        let big = obj("P1^3+P1^2+P0^2");
        assert!(matches!(
            enumerate_extensions(&big, &big, k, 4),
            Err(Error::SizeGuard { limit_bits: 4, .. })
        ));
    }
}
