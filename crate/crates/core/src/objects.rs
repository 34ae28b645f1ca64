//! Isomorphism classes of semisimple invariant subspaces.
//!
//! An object is a pair of partitions `gamma ⊆ beta` whose skew shape is a
//! horizontal strip: `gamma_i <= beta_i <= gamma_i + 1`. Here `beta` is the
//! Jordan type of the ambient operator, `gamma` the Jordan type of the
//! operator induced on the cokernel, and the marked boxes `beta \ gamma`
//! count the dimension `a` of the (semisimple) subspace.
//!
//! Parts of a partition index the *columns* of its Young diagram, so the
//! `i`-th part of `beta` is a column of height `beta_i` and, when
//! `beta_i > gamma_i`, its bottom box carries the entry 1.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partitions::{partitions_of, Partition};

/// An indecomposable object `P_ε^m`: the operator `K[T]/(T^m)` together
/// with the zero subspace (`ε = 0`) or its socle `T^{m-1}` (`ε = 1`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Picket {
    epsilon: u8,
    m: usize,
}

impl Picket {
    pub fn new(epsilon: u8, m: usize) -> Result<Self> {
        if epsilon > 1 {
            return Err(Error::Syntax(format!(
                "picket index must be 0 or 1, got {epsilon}"
            )));
        }
        if m == 0 {
            return Err(Error::Syntax("picket height must be positive".into()));
        }
        Ok(Self { epsilon, m })
    }

    /// `P_0^m`.
    pub fn unmarked(m: usize) -> Self {
        assert!(m >= 1);
        Self { epsilon: 0, m }
    }

    /// `P_1^m`.
    pub fn marked(m: usize) -> Self {
        assert!(m >= 1);
        Self { epsilon: 1, m }
    }

    pub fn epsilon(self) -> u8 {
        self.epsilon
    }

    pub fn is_marked(self) -> bool {
        self.epsilon == 1
    }

    pub fn height(self) -> usize {
        self.m
    }

    pub fn to_object(self) -> S1Object {
        S1Object::from_pickets(&[self])
    }

    /// Canonical order: taller first, and `P_0^m` before `P_1^m`.
    fn canonical_cmp(&self, other: &Self) -> std::cmp::Ordering {
        other.m.cmp(&self.m).then(self.epsilon.cmp(&other.epsilon))
    }
}

impl fmt::Display for Picket {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "P{}^{}", self.epsilon, self.m)
    }
}

/// A direct sum of pickets in canonical order.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct PicketSum(Vec<Picket>);

impl PicketSum {
    pub fn new(mut pickets: Vec<Picket>) -> Self {
        pickets.sort_by(Picket::canonical_cmp);
        Self(pickets)
    }

    pub fn as_slice(&self) -> &[Picket] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = Picket> + '_ {
        self.0.iter().copied()
    }
}

impl fmt::Display for PicketSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("0");
        }
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str("+")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

#[derive(Deserialize)]
struct RawObject {
    beta: Partition,
    gamma: Partition,
}

/// An isomorphism class in the category of semisimple invariant subspaces,
/// given by a horizontal-strip pair `gamma ⊆ beta`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawObject")]
pub struct S1Object {
    beta: Partition,
    gamma: Partition,
}

impl TryFrom<RawObject> for S1Object {
    type Error = Error;

    fn try_from(raw: RawObject) -> Result<Self> {
        Self::new(raw.beta, raw.gamma)
    }
}

impl S1Object {
    pub fn new(beta: Partition, gamma: Partition) -> Result<Self> {
        let len = beta.num_parts().max(gamma.num_parts());
        for i in 0..len {
            let (b, g) = (beta.get(i), gamma.get(i));
            if g > b || b > g + 1 {
                return Err(Error::NotHorizontalStrip {
                    index: i + 1,
                    beta_part: b,
                    gamma_part: g,
                });
            }
        }
        Ok(Self { beta, gamma })
    }

    /// The zero object, identity of the generic-extension monoid.
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn is_zero(&self) -> bool {
        self.beta.is_empty()
    }

    pub fn beta(&self) -> &Partition {
        &self.beta
    }

    pub fn gamma(&self) -> &Partition {
        &self.gamma
    }

    /// `b`, the dimension of the ambient space.
    pub fn b(&self) -> usize {
        self.beta.size()
    }

    /// `a`, the dimension of the invariant subspace.
    pub fn a(&self) -> usize {
        self.beta.size() - self.gamma.size()
    }

    /// Jordan type of the subspace; always `(1^a)`.
    pub fn alpha(&self) -> Partition {
        Partition::ones(self.a())
    }

    /// Number of indecomposable summands.
    pub fn num_summands(&self) -> usize {
        self.beta.num_parts()
    }

    /// Whether part `i` (0-based) of `beta` carries a marked box.
    pub fn is_marked(&self, i: usize) -> bool {
        self.beta.get(i) > self.gamma.get(i)
    }

    pub fn pickets(&self) -> PicketSum {
        let pickets = (0..self.beta.num_parts())
            .map(|i| Picket {
                epsilon: (self.beta.get(i) - self.gamma.get(i)) as u8,
                m: self.beta.get(i),
            })
            .collect();
        // index pairing of sorted beta and gamma already is canonical order
        PicketSum(pickets)
    }

    pub fn from_pickets(pickets: &[Picket]) -> Self {
        let beta = Partition::from_unsorted(pickets.iter().map(|p| p.m).collect());
        let gamma =
            Partition::from_unsorted(pickets.iter().map(|p| p.m - p.epsilon as usize).collect());
        Self { beta, gamma }
    }

    pub fn direct_sum(&self, other: &Self) -> Self {
        Self {
            beta: self.beta.union(&other.beta),
            gamma: self.gamma.union(&other.gamma),
        }
    }

    /// Marked boxes as 1-based `(row, column)` cells of the diagram.
    pub fn marked_cells(&self) -> Vec<(usize, usize)> {
        let mut cells: Vec<_> = (0..self.beta.num_parts())
            .filter(|&i| self.is_marked(i))
            .map(|i| (self.beta.get(i), i + 1))
            .collect();
        cells.sort_unstable();
        cells
    }

    pub fn render(&self, format: TableauFormat) -> String {
        match format {
            TableauFormat::Ascii => self.render_ascii(),
            TableauFormat::Latex => self.render_latex(),
        }
    }

    fn rows(&self) -> Vec<Vec<bool>> {
        let profile = self.beta.conjugate();
        profile
            .parts()
            .iter()
            .enumerate()
            .map(|(r, &len)| {
                (0..len)
                    .map(|c| self.is_marked(c) && self.beta.get(c) == r + 1)
                    .collect()
            })
            .collect()
    }

    fn render_ascii(&self) -> String {
        self.rows()
            .iter()
            .map(|row| {
                row.iter()
                    .map(|&m| if m { "[1]" } else { "[ ]" })
                    .collect::<String>()
            })
            .collect::<Vec<_>>()
            .join("\n")
    }

    fn render_latex(&self) -> String {
        let rows: Vec<String> = self
            .rows()
            .iter()
            .map(|row| {
                row.iter()
                    .map(|&m| if m { "1" } else { "\\none" })
                    .collect::<String>()
            })
            .collect();
        let profile: Vec<String> = self
            .beta
            .conjugate()
            .parts()
            .iter()
            .map(|p| p.to_string())
            .collect();
        format!(
            "\\ytableaushort{{{}}} * {{{}}}",
            rows.join(","),
            profile.join(",")
        )
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TableauFormat {
    Ascii,
    Latex,
}

impl FromStr for TableauFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "ascii" => Ok(Self::Ascii),
            "latex" => Ok(Self::Latex),
            _ => Err(Error::Syntax(format!("unknown tableau format `{s}`"))),
        }
    }
}

/// Pair form `[beta]/[gamma]`.
impl fmt::Display for S1Object {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.beta, self.gamma)
    }
}

/// Accepts the pair form `[7,7,5]/[7,6,4]`, the picket form
/// `P0^4+P1^4+P1^3`, or `""`/`"0"` for the zero object. Whitespace is
/// ignored.
impl FromStr for S1Object {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if s.is_empty() || s == "0" {
            return Ok(Self::zero());
        }
        if s.starts_with('[') {
            let (beta, gamma) = s
                .split_once('/')
                .ok_or_else(|| Error::Syntax(format!("expected `[beta]/[gamma]`, got `{s}`")))?;
            return Self::new(beta.parse()?, gamma.parse()?);
        }
        let pickets = s.split('+').map(parse_picket).collect::<Result<Vec<_>>>()?;
        Ok(Self::from_pickets(&pickets))
    }
}

fn parse_picket(term: &str) -> Result<Picket> {
    let bad = || Error::Syntax(format!("expected `P<0|1>^<m>`, got `{term}`"));
    let rest = term.strip_prefix('P').ok_or_else(bad)?;
    let (eps, m) = rest.split_once('^').ok_or_else(bad)?;
    let eps: u8 = eps.parse().map_err(|_| bad())?;
    let m: usize = m.parse().map_err(|_| bad())?;
    Picket::new(eps, m)
}

/// Every object with `|alpha| = a` and `|beta| = b`, ordered by `beta`
/// descending, then `gamma` descending. Empty when `a > b`.
pub fn enumerate_s1(a: usize, b: usize) -> Vec<S1Object> {
    let mut out = Vec::new();
    if a > b {
        return out;
    }
    for beta in partitions_of(b) {
        // runs of equal parts: the marks of a run sit on its last entries
        let mut runs: Vec<(usize, usize)> = Vec::new();
        for &p in beta.parts() {
            match runs.last_mut() {
                Some((v, c)) if *v == p => *c += 1,
                _ => runs.push((p, 1)),
            }
        }
        let mut marks = vec![0usize; runs.len()];
        let mut found = Vec::new();
        loop {
            if marks.iter().sum::<usize>() == a {
                let mut gamma = Vec::with_capacity(beta.num_parts());
                for (&(v, c), &k) in runs.iter().zip(&marks) {
                    gamma.extend(std::iter::repeat_n(v, c - k));
                    gamma.extend(std::iter::repeat_n(v - 1, k));
                }
                let gamma = Partition::from_unsorted(gamma);
                found.push(S1Object {
                    beta: beta.clone(),
                    gamma,
                });
            }
            // odometer over 0..=c per run
            let mut i = 0;
            while i < runs.len() {
                if marks[i] < runs[i].1 {
                    marks[i] += 1;
                    break;
                }
                marks[i] = 0;
                i += 1;
            }
            if i == runs.len() {
                break;
            }
        }
        found.sort_by(|x, y| y.gamma.cmp(&x.gamma));
        out.extend(found);
    }
    out
}

/// Every object with `|beta| <= max_b`, grouped by `b` then `a`.
pub fn objects_up_to(max_b: usize) -> Vec<S1Object> {
    (0..=max_b)
        .flat_map(|b| (0..=b).flat_map(move |a| enumerate_s1(a, b)))
        .collect()
}
