//! Dominance, hom and degeneration orders on a fixed `S_a^b`, plus the
//! Hasse diagram of the resulting poset.
//!
//! `x ⊴ y` means `y` is a degeneration of `x`: the orbit of `y` lies in the
//! closure of the orbit of `x`. The three orders coincide; the degeneration
//! order is evaluated through the dominance order and [`hom_leq`] is kept
//! as an independent check.

use std::fmt::{self, Write as _};

use crate::error::{Error, Result};
use crate::homs::picket_hom_into;
use crate::objects::{enumerate_s1, Picket, S1Object};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Which {
    Beta,
    Gamma,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OrderWitness {
    /// Prefix sum `k` (1-based) of `beta` or `gamma` breaks the natural order.
    Prefix { which: Which, k: usize },
    /// `[picket, x] > [picket, y]`.
    TestPicket {
        picket: Picket,
        left: usize,
        right: usize,
    },
}

impl fmt::Display for OrderWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Prefix { which, k } => {
                let name = match which {
                    Which::Beta => "beta",
                    Which::Gamma => "gamma",
                };
                write!(f, "prefix sum k={k} of {name}")
            }
            Self::TestPicket {
                picket,
                left,
                right,
            } => {
                write!(f, "[{picket},x]={left} > [{picket},y]={right}")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrderVerdict {
    pub leq: bool,
    /// Present exactly when `leq` is false.
    pub witness: Option<OrderWitness>,
}

impl OrderVerdict {
    fn holds() -> Self {
        Self {
            leq: true,
            witness: None,
        }
    }

    fn fails(witness: OrderWitness) -> Self {
        Self {
            leq: false,
            witness: Some(witness),
        }
    }
}

fn same_ambient(x: &S1Object, y: &S1Object) -> Result<()> {
    if (x.a(), x.b()) != (y.a(), y.b()) {
        return Err(Error::DifferentAmbient(x.a(), x.b(), y.a(), y.b()));
    }
    Ok(())
}

pub fn dom_leq(x: &S1Object, y: &S1Object) -> Result<OrderVerdict> {
    same_ambient(x, y)?;
    if let Some(k) = x.beta().nat_violation(y.beta())? {
        return Ok(OrderVerdict::fails(OrderWitness::Prefix {
            which: Which::Beta,
            k,
        }));
    }
    if let Some(k) = x.gamma().nat_violation(y.gamma())? {
        return Ok(OrderVerdict::fails(OrderWitness::Prefix {
            which: Which::Gamma,
            k,
        }));
    }
    Ok(OrderVerdict::holds())
}

/// Hom order tested against the pickets `P_ε^m`, `m <= b + 1`; beyond that
/// height `[P_ε^m, -]` no longer changes on `S_a^b`.
pub fn hom_leq(x: &S1Object, y: &S1Object) -> Result<OrderVerdict> {
    same_ambient(x, y)?;
    let b = x.b();
    for m in 1..=b + 1 {
        for picket in [Picket::unmarked(m), Picket::marked(m)] {
            let (left, right) = (picket_hom_into(picket, x), picket_hom_into(picket, y));
            if left > right {
                return Ok(OrderVerdict::fails(OrderWitness::TestPicket {
                    picket,
                    left,
                    right,
                }));
            }
        }
    }
    debug_assert!([0u8, 1].iter().all(|&e| {
        let at = |m| Picket::new(e, m).unwrap();
        picket_hom_into(at(b + 1), x) == picket_hom_into(at(b + 2), x)
    }));
    Ok(OrderVerdict::holds())
}

/// Degeneration order, evaluated as the dominance order.
pub fn deg_leq(x: &S1Object, y: &S1Object) -> Result<OrderVerdict> {
    dom_leq(x, y)
}

/// Cover relations of the dominance order on `S_a^b`, as index pairs into
/// `enumerate_s1(a, b)`.
pub fn cover_indices(a: usize, b: usize) -> (Vec<S1Object>, Vec<(usize, usize)>) {
    let objs = enumerate_s1(a, b);
    let n = objs.len();
    let leq: Vec<Vec<bool>> = objs
        .iter()
        .map(|x| objs.iter().map(|y| dom_leq(x, y).unwrap().leq).collect())
        .collect();
    let mut edges = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if i == j || !leq[i][j] {
                continue;
            }
            let between = (0..n).any(|k| k != i && k != j && leq[i][k] && leq[k][j]);
            if !between {
                edges.push((i, j));
            }
        }
    }
    (objs, edges)
}

/// Pairs `(x, y)` with `y` covering `x`.
pub fn covers(a: usize, b: usize) -> Vec<(S1Object, S1Object)> {
    let (objs, edges) = cover_indices(a, b);
    edges
        .into_iter()
        .map(|(i, j)| (objs[i].clone(), objs[j].clone()))
        .collect()
}

/// Graphviz rendering of the Hasse diagram; edges point from the more
/// generic object to its degeneration.
pub fn export_hasse_dot(a: usize, b: usize) -> String {
    let (objs, edges) = cover_indices(a, b);
    let mut out = format!("digraph S_{a}_{b} {{\n");
    for (i, x) in objs.iter().enumerate() {
        writeln!(out, "  n{i} [label=\"{x}\"];").unwrap();
    }
    for (i, j) in edges {
        writeln!(out, "  n{i} -> n{j};").unwrap();
    }
    out.push_str("}\n");
    out
}
