//! Root systems of the simple types.
//!
//! Simple roots are numbered as in Bourbaki's plates throughout, so for
//! `E8` the branch node is `α₂` and the highest root is
//! `2α₁+3α₂+4α₃+6α₄+5α₅+4α₆+3α₇+2α₈`. All indices in this API are 0-based;
//! Bourbaki's `α_i` is simple root `i - 1`.
//!
//! Roots are stored as integer coefficient vectors over the simple roots, and
//! the Cartan matrix uses the convention `cartan[i][j] = ⟨α_i, α_j^∨⟩`.

mod classify;

pub use classify::{classify_simple_system, identify_cartan, Subsystem};

use std::collections::{BTreeSet, HashMap, HashSet};
use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    pub fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        }
    }

    fn from_letter(c: char) -> Option<Family> {
        Some(match c.to_ascii_uppercase() {
            'A' => Family::A,
            'B' => Family::B,
            'C' => Family::C,
            'D' => Family::D,
            'E' => Family::E,
            'F' => Family::F,
            'G' => Family::G,
            _ => return None,
        })
    }
}

/// A simple type `X_l`. Construct through [`SimpleType::new`] or `parse`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SimpleType {
    family: Family,
    rank: usize,
}

impl SimpleType {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let bad = |reason| Error::InvalidType {
            family: family.letter(),
            rank,
            reason,
        };
        match family {
            Family::A if rank < 1 => return Err(bad("A needs rank >= 1")),
            Family::B | Family::C | Family::D if rank < 2 => {
                return Err(bad("B, C and D need rank >= 2"))
            }
            Family::E if !(6..=8).contains(&rank) => return Err(bad("E exists in ranks 6, 7, 8")),
            Family::F if rank != 4 => return Err(bad("F exists in rank 4 only")),
            Family::G if rank != 2 => return Err(bad("G exists in rank 2 only")),
            _ => {}
        }
        Ok(SimpleType { family, rank })
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Every valid type of rank at most `max_rank`, in (family, rank) order.
    pub fn all_up_to(max_rank: usize) -> Vec<SimpleType> {
        use Family::*;
        let mut out = Vec::new();
        for family in [A, B, C, D, E, F, G] {
            for rank in 1..=max_rank {
                if let Ok(t) = SimpleType::new(family, rank) {
                    out.push(t);
                }
            }
        }
        out
    }

    /// Twice the Euclidean inner products of the simple roots, scaled so the
    /// shortest root has squared length 2.
    pub(crate) fn gram(&self) -> Vec<Vec<i64>> {
        let l = self.rank;
        let mut g = vec![vec![0i64; l]; l];
        let edge = |g: &mut Vec<Vec<i64>>, i: usize, j: usize, v: i64| {
            g[i][j] = v;
            g[j][i] = v;
        };
        match self.family {
            Family::A => {
                for i in 0..l {
                    g[i][i] = 2;
                }
                for i in 0..l.saturating_sub(1) {
                    edge(&mut g, i, i + 1, -1);
                }
            }
            Family::B => {
                for i in 0..l - 1 {
                    g[i][i] = 4;
                }
                g[l - 1][l - 1] = 2;
                for i in 0..l - 1 {
                    edge(&mut g, i, i + 1, -2);
                }
            }
            Family::C => {
                for i in 0..l - 1 {
                    g[i][i] = 2;
                }
                g[l - 1][l - 1] = 4;
                for i in 0..l - 2 {
                    edge(&mut g, i, i + 1, -1);
                }
                edge(&mut g, l - 2, l - 1, -2);
            }
            Family::D => {
                for i in 0..l {
                    g[i][i] = 2;
                }
                // chain α₁ - … - α_{l-1}, plus α_{l-2} - α_l
                for i in 0..l.saturating_sub(2) {
                    edge(&mut g, i, i + 1, -1);
                }
                if l >= 3 {
                    edge(&mut g, l - 3, l - 1, -1);
                }
            }
            Family::E => {
                for i in 0..l {
                    g[i][i] = 2;
                }
                edge(&mut g, 0, 2, -1);
                edge(&mut g, 1, 3, -1);
                for i in 2..l - 1 {
                    edge(&mut g, i, i + 1, -1);
                }
            }
            Family::F => {
                g[0][0] = 4;
                g[1][1] = 4;
                g[2][2] = 2;
                g[3][3] = 2;
                edge(&mut g, 0, 1, -2);
                edge(&mut g, 1, 2, -2);
                edge(&mut g, 2, 3, -1);
            }
            Family::G => {
                g[0][0] = 2;
                g[1][1] = 6;
                edge(&mut g, 0, 1, -3);
            }
        }
        g
    }

    pub fn cartan(&self) -> CartanMatrix {
        let g = self.gram();
        let l = self.rank;
        let entries = (0..l)
            .map(|i| (0..l).map(|j| 2 * g[i][j] / g[j][j]).collect())
            .collect();
        CartanMatrix(entries)
    }
}

impl fmt::Display for SimpleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family.letter(), self.rank)
    }
}

impl FromStr for SimpleType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let mut chars = s.chars();
        let family = chars
            .next()
            .and_then(Family::from_letter)
            .ok_or_else(|| Error::TypeParse(s.to_string()))?;
        let rank: usize = chars
            .as_str()
            .parse()
            .map_err(|_| Error::TypeParse(s.to_string()))?;
        SimpleType::new(family, rank)
    }
}

impl Serialize for SimpleType {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for SimpleType {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Square integer matrix with 2 on the diagonal and non-positive entries elsewhere.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct CartanMatrix(Vec<Vec<i64>>);

impl CartanMatrix {
    pub fn new(entries: Vec<Vec<i64>>) -> Result<Self> {
        let l = entries.len();
        for (i, row) in entries.iter().enumerate() {
            if row.len() != l {
                return Err(Error::Input(format!("Cartan row {i} has length {}", row.len())));
            }
            for (j, &v) in row.iter().enumerate() {
                if i == j && v != 2 {
                    return Err(Error::Input(format!("diagonal entry ({i},{i}) is {v}")));
                }
                if i != j {
                    if !(-3..=0).contains(&v) {
                        return Err(Error::Input(format!("off-diagonal entry ({i},{j}) is {v}")));
                    }
                    if (v == 0) != (entries[j][i] == 0) {
                        return Err(Error::Input(format!(
                            "zero pattern of ({i},{j}) and ({j},{i}) differs"
                        )));
                    }
                }
            }
        }
        Ok(CartanMatrix(entries))
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn entry(&self, i: usize, j: usize) -> i64 {
        self.0[i][j]
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.0
    }
}

/// A root written over the simple roots.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Root(Vec<i64>);

impl Root {
    pub fn new(coeffs: Vec<i64>) -> Self {
        Root(coeffs)
    }

    pub fn simple(rank: usize, i: usize) -> Self {
        let mut c = vec![0; rank];
        c[i] = 1;
        Root(c)
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.0
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn height(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn is_positive(&self) -> bool {
        self.0.iter().all(|&c| c >= 0) && self.0.iter().any(|&c| c > 0)
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    /// `⟨r, ω_j⟩`: the pairing with the `j`-th fundamental coweight, which
    /// is just the `j`-th coefficient.
    pub fn coweight_pairing(&self, j: usize) -> i64 {
        self.0[j]
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

impl Neg for &Root {
    type Output = Root;
    fn neg(self) -> Root {
        Root(self.0.iter().map(|c| -c).collect())
    }
}

impl Add for &Root {
    type Output = Root;
    fn add(self, rhs: &Root) -> Root {
        assert_eq!(self.rank(), rhs.rank(), "adding roots of different rank");
        Root(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &Root {
    type Output = Root;
    fn sub(self, rhs: &Root) -> Root {
        assert_eq!(self.rank(), rhs.rank(), "subtracting roots of different rank");
        Root(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

/// An irreducible (or, for `D2`, reducible) root system with its positive
/// roots enumerated.
#[derive(Debug, Clone)]
pub struct RootSystem {
    simple_type: SimpleType,
    cartan: CartanMatrix,
    gram: Vec<Vec<i64>>,
    positive_roots: Vec<Root>,
    /// `coroot_pairing[k][i] = ⟨β_k, α_i^∨⟩` for the `k`-th positive root.
    coroot_pairing: Vec<Vec<i64>>,
    index: HashMap<Root, usize>,
}

impl RootSystem {
    /// Generates the positive roots height by height using root strings.
    pub fn new(simple_type: SimpleType) -> Self {
        let cartan = simple_type.cartan();
        let gram = simple_type.gram();
        let l = simple_type.rank();

        let pairing = |beta: &Root, i: usize| -> i64 {
            beta.0
                .iter()
                .enumerate()
                .map(|(k, &c)| c * cartan.entry(k, i))
                .sum()
        };

        let mut seen: HashSet<Root> = HashSet::new();
        let mut level: Vec<Root> = (0..l).map(|i| Root::simple(l, i)).collect();
        let mut positive_roots = Vec::new();
        while !level.is_empty() {
            level.sort_by(|a, b| b.cmp(a));
            seen.extend(level.iter().cloned());
            let mut next = BTreeSet::new();
            for beta in &level {
                for i in 0..l {
                    // p = length of the downward α_i-string through β
                    let mut p = 0;
                    let mut down = beta.clone();
                    loop {
                        down.0[i] -= 1;
                        if seen.contains(&down) {
                            p += 1;
                        } else {
                            break;
                        }
                    }
                    let q = p - pairing(beta, i);
                    if q > 0 {
                        let mut up = beta.clone();
                        up.0[i] += 1;
                        next.insert(up);
                    }
                }
            }
            positive_roots.append(&mut level);
            level = next.into_iter().collect();
        }

        let coroot_pairing = positive_roots
            .iter()
            .map(|b| (0..l).map(|i| pairing(b, i)).collect())
            .collect();
        let index = positive_roots
            .iter()
            .enumerate()
            .map(|(k, r)| (r.clone(), k))
            .collect();
        RootSystem {
            simple_type,
            cartan,
            gram,
            positive_roots,
            coroot_pairing,
            index,
        }
    }

    pub fn simple_type(&self) -> SimpleType {
        self.simple_type
    }

    pub fn rank(&self) -> usize {
        self.simple_type.rank()
    }

    pub fn cartan(&self) -> &CartanMatrix {
        &self.cartan
    }

    /// Positive roots ordered by height, then descending lexicographically, so
    /// the simple roots come first in their natural order.
    pub fn positive_roots(&self) -> &[Root] {
        &self.positive_roots
    }

    /// All roots: the positive ones followed by their negatives in the same order.
    pub fn roots(&self) -> impl Iterator<Item = Root> + '_ {
        self.positive_roots
            .iter()
            .cloned()
            .chain(self.positive_roots.iter().map(|r| -r))
    }

    pub fn simple_roots(&self) -> Vec<Root> {
        (0..self.rank()).map(|i| Root::simple(self.rank(), i)).collect()
    }

    pub fn contains(&self, r: &Root) -> bool {
        if r.rank() != self.rank() {
            return false;
        }
        if r.is_positive() {
            self.index.contains_key(r)
        } else {
            self.index.contains_key(&-r)
        }
    }

    /// Position of a positive root in [`positive_roots`](Self::positive_roots).
    pub fn position(&self, r: &Root) -> Option<usize> {
        self.index.get(r).copied()
    }

    pub(crate) fn check_root(&self, r: &Root) -> Result<()> {
        if r.rank() != self.rank() {
            return Err(Error::RankMismatch {
                expected: self.rank(),
                actual: r.rank(),
            });
        }
        if !self.contains(r) {
            return Err(Error::NotARoot(r.coeffs().to_vec()));
        }
        Ok(())
    }

    /// `⟨β, α_i^∨⟩` for any root (or lattice vector) `β`.
    pub fn coroot_pairing(&self, beta: &Root, i: usize) -> i64 {
        if let Some(k) = self.position(beta) {
            return self.coroot_pairing[k][i];
        }
        beta.coeffs()
            .iter()
            .enumerate()
            .map(|(k, &c)| c * self.cartan.entry(k, i))
            .sum()
    }

    /// Twice the Euclidean inner product, normalised as in the Gram matrix.
    pub fn inner(&self, a: &Root, b: &Root) -> i64 {
        let l = self.rank();
        let mut s = 0;
        for i in 0..l {
            if a.0[i] == 0 {
                continue;
            }
            for j in 0..l {
                s += a.0[i] * self.gram[i][j] * b.0[j];
            }
        }
        s
    }

    /// `⟨a, b^∨⟩ = 2(a,b)/(b,b)` for roots `a`, `b`.
    pub fn pairing(&self, a: &Root, b: &Root) -> i64 {
        2 * self.inner(a, b) / self.inner(b, b)
    }

    /// The reflection `s_b(a) = a - ⟨a, b^∨⟩ b`.
    pub fn reflect(&self, a: &Root, b: &Root) -> Root {
        let k = self.pairing(a, b);
        Root(a.0.iter().zip(&b.0).map(|(x, y)| x - k * y).collect())
    }

    /// Whether the Dynkin diagram is connected.
    pub fn is_irreducible(&self) -> bool {
        let l = self.rank();
        let mut seen = vec![false; l];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(i) = stack.pop() {
            for j in 0..l {
                if !seen[j] && self.cartan.entry(i, j) != 0 {
                    seen[j] = true;
                    stack.push(j);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    /// The unique root `α₀` such that no `α₀ + α_i` is a root.
    pub fn highest_root(&self) -> Result<Root> {
        if !self.is_irreducible() {
            return Err(Error::Reducible(self.simple_type.to_string()));
        }
        let maximal: Vec<&Root> = self
            .positive_roots
            .iter()
            .filter(|r| {
                (0..self.rank()).all(|i| {
                    let mut up = (*r).clone();
                    up.0[i] += 1;
                    !self.index.contains_key(&up)
                })
            })
            .collect();
        debug_assert_eq!(maximal.len(), 1);
        Ok(maximal[0].clone())
    }

    pub fn to_document(&self) -> RootSystemDocument {
        RootSystemDocument {
            simple_type: self.simple_type,
            rank: self.rank(),
            positive_roots: self.positive_roots.clone(),
            cartan: self.cartan.clone(),
        }
    }
}

/// Canonical JSON form of a root system.
#[derive(Debug, Clone, Serialize)]
pub struct RootSystemDocument {
    #[serde(rename = "type")]
    pub simple_type: SimpleType,
    pub rank: usize,
    pub positive_roots: Vec<Root>,
    pub cartan: CartanMatrix,
}
