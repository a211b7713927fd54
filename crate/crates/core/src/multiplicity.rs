//! Bookkeeping for Kawanaka's multiplicity formula over `𝒢₀ = 𝔖_n`, `n ≤ 5`.
//!
//! The family attached to `𝒢₀` is labelled by pairs `(x, σ)` with `x` a class
//! of `𝒢₀` and `σ ∈ Irr(C(x))`. The multiplicity of `ρ_(x,σ)` in the GGGR
//! attached to the class `y` is `σ(1)` if `x = y` and 0 otherwise, so only
//! the degrees `σ(1)` are needed. Centralizers in `𝔖_n` are products of
//! wreath products `ℤ_k ≀ 𝔖_m`, whose degrees come from tuples of partitions.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest symmetric group handled here.
pub const MAX_N: usize = 5;

/// A partition, parts in non-increasing order.
pub type Partition = Vec<u32>;

/// All partitions of `n`, lexicographically increasing: `1ⁿ` first, `(n)` last.
pub fn partitions(n: u32) -> Vec<Partition> {
    fn go(rest: u32, max: u32, prefix: &mut Partition, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(prefix.clone());
            return;
        }
        for part in 1..=rest.min(max) {
            prefix.push(part);
            go(rest - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out.sort();
    out
}

/// Number of standard Young tableaux of shape `shape`, by the hook length formula.
pub fn hook_length(shape: &[u32]) -> u64 {
    let n: u32 = shape.iter().sum();
    let mut hooks: u64 = 1;
    for (i, &row) in shape.iter().enumerate() {
        for j in 0..row {
            let arm = row - j - 1;
            let leg = shape[i + 1..].iter().filter(|&&r| r > j).count() as u32;
            hooks *= u64::from(arm + leg + 1);
        }
    }
    factorial(n) / hooks
}

fn factorial(n: u32) -> u64 {
    (1..=u64::from(n)).product()
}

/// Cycle type of a permutation, i.e. a conjugacy class of `𝔖_n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct CycleType(Partition);

impl CycleType {
    pub fn new(mut parts: Vec<u32>) -> Result<Self> {
        if parts.is_empty() || parts.contains(&0) {
            return Err(Error::Input(format!("{parts:?} is not a partition")));
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(CycleType(parts))
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn n(&self) -> u32 {
        self.0.iter().sum()
    }
}

impl fmt::Display for CycleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        // exponent notation, largest part first: 3 1^2
        let mut first = true;
        let mut i = 0;
        while i < self.0.len() {
            let k = self.0[i];
            let m = self.0[i..].iter().take_while(|&&p| p == k).count();
            if !first {
                write!(f, " ")?;
            }
            first = false;
            if m == 1 {
                write!(f, "{k}")?;
            } else {
                write!(f, "{k}^{m}")?;
            }
            i += m;
        }
        Ok(())
    }
}

/// Conjugacy classes of `𝔖_n` in canonical order.
pub fn classes(n: usize) -> Result<Vec<CycleType>> {
    if !(1..=MAX_N).contains(&n) {
        return Err(Error::OutOfRange(n));
    }
    Ok(partitions(n as u32).into_iter().map(CycleType).collect())
}

/// `∏_k ℤ_k ≀ 𝔖_{m_k}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CentralizerShape {
    /// `(k, m_k)` for each distinct part `k`, increasing in `k`.
    pub factors: Vec<(u32, u32)>,
}

impl CentralizerShape {
    pub fn order(&self) -> u64 {
        self.factors
            .iter()
            .map(|&(k, m)| u64::from(k).pow(m) * factorial(m))
            .product()
    }
}

impl fmt::Display for CentralizerShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "1");
        }
        for (i, (k, m)) in self.factors.iter().enumerate() {
            if i > 0 {
                write!(f, " x ")?;
            }
            write!(f, "Z{k} wr S{m}")?;
        }
        Ok(())
    }
}

pub fn centralizer(x: &CycleType) -> CentralizerShape {
    let mut factors: Vec<(u32, u32)> = Vec::new();
    for &k in x.parts() {
        match factors.iter_mut().find(|(kk, _)| *kk == k) {
            Some((_, m)) => *m += 1,
            None => factors.push((k, 1)),
        }
    }
    factors.sort_unstable();
    CentralizerShape { factors }
}

/// An irreducible character of a centralizer: one `k`-tuple of partitions
/// per factor `ℤ_k ≀ 𝔖_m`, with sizes summing to `m`.
pub type IrrLabel = Vec<Vec<Partition>>;

/// `k`-tuples of partitions with total size `m`, each with its degree
/// `m!/∏|λ⁽ⁱ⁾|! · ∏ f^{λ⁽ⁱ⁾}`.
fn wreath_irreducibles(k: u32, m: u32) -> Vec<(Vec<Partition>, u64)> {
    fn go(slots: u32, rest: u32, acc: &mut Vec<Partition>, out: &mut Vec<Vec<Partition>>) {
        if slots == 1 {
            for lam in partitions(rest) {
                acc.push(lam);
                out.push(acc.clone());
                acc.pop();
            }
            return;
        }
        for size in 0..=rest {
            for lam in partitions(size) {
                acc.push(lam);
                go(slots - 1, rest - size, acc, out);
                acc.pop();
            }
        }
    }
    let mut tuples = Vec::new();
    go(k, m, &mut Vec::new(), &mut tuples);
    tuples
        .into_iter()
        .map(|t| {
            let sizes: Vec<u32> = t.iter().map(|l| l.iter().sum()).collect();
            let multinomial = factorial(m) / sizes.iter().map(|&s| factorial(s)).product::<u64>();
            let deg = multinomial * t.iter().map(|l| hook_length(l)).product::<u64>();
            (t, deg)
        })
        .collect()
}

/// Irreducible characters of the centralizer, ordered by degree then label.
pub fn irreducibles(c: &CentralizerShape) -> Vec<(IrrLabel, u64)> {
    let mut out: Vec<(IrrLabel, u64)> = vec![(Vec::new(), 1)];
    for &(k, m) in &c.factors {
        let factor = wreath_irreducibles(k, m);
        out = out
            .iter()
            .flat_map(|(label, d)| {
                factor.iter().map(move |(t, e)| {
                    let mut l = label.clone();
                    l.push(t.clone());
                    (l, d * e)
                })
            })
            .collect();
    }
    out.sort_by(|a, b| a.1.cmp(&b.1).then_with(|| a.0.cmp(&b.0)));
    out
}

/// Degrees of the irreducible characters, increasing.
pub fn irr_degrees(c: &CentralizerShape) -> Vec<u64> {
    irreducibles(c).into_iter().map(|(_, d)| d).collect()
}

/// A label `(x, σ)` of the family; `tag` indexes `σ` within `Irr(C(x))`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Pair {
    pub x: CycleType,
    pub tag: usize,
    pub degree: u64,
    pub sigma: IrrLabel,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PairSet {
    pub n: usize,
    pub pairs: Vec<Pair>,
}

impl PairSet {
    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn find(&self, x: &CycleType, tag: usize) -> Option<&Pair> {
        self.pairs.iter().find(|p| &p.x == x && p.tag == tag)
    }
}

/// All pairs `(x, σ)` for `𝒢₀ = 𝔖_n`.
pub fn pair_set(n: usize) -> Result<PairSet> {
    let mut pairs = Vec::new();
    for x in classes(n)? {
        for (tag, (sigma, degree)) in irreducibles(&centralizer(&x)).into_iter().enumerate() {
            pairs.push(Pair {
                x: x.clone(),
                tag,
                degree,
                sigma,
            });
        }
    }
    Ok(PairSet { n, pairs })
}

/// Pairs with `σ(1) = 1`.
pub fn degree_one_pairs(n: usize) -> Result<Vec<Pair>> {
    Ok(pair_set(n)?.pairs.into_iter().filter(|p| p.degree == 1).collect())
}

/// Number of `G^F`-orbits in `C^F` when `A(u)` has the given number of
/// (F-)conjugacy classes; Frobenius acts trivially in the split case.
pub fn orbit_count(component_group_classes: u64) -> u64 {
    debug_assert!(component_group_classes > 0);
    component_group_classes
}

/// Whether every user-supplied label `(x, tag)` names a pair with `σ(1) = 1`.
pub fn labels_have_degree_one(n: usize, labels: &[(CycleType, usize)]) -> Result<bool> {
    let set = pair_set(n)?;
    let mut all = true;
    for (x, tag) in labels {
        let pair = set.find(x, *tag).ok_or_else(|| Error::Unknown {
            kind: "pair",
            name: format!("({x}, {tag})"),
        })?;
        all &= pair.degree == 1;
    }
    Ok(all)
}

/// Rows `(x, σ)`, columns `y`; entry `σ(1)` if `x = y`, else 0.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MultiplicityTable {
    pub n: usize,
    pub pairs: Vec<Pair>,
    pub classes: Vec<CycleType>,
    pub table: Vec<Vec<u64>>,
}

pub fn kawanaka_table(n: usize) -> Result<MultiplicityTable> {
    let set = pair_set(n)?;
    let cols = classes(n)?;
    let table = set
        .pairs
        .iter()
        .map(|p| cols.iter().map(|y| if &p.x == y { p.degree } else { 0 }).collect())
        .collect();
    Ok(MultiplicityTable {
        n,
        pairs: set.pairs,
        classes: cols,
        table,
    })
}

impl MultiplicityTable {
    pub fn entry(&self, x: &CycleType, tag: usize, y: &CycleType) -> Option<u64> {
        let row = self.pairs.iter().position(|p| &p.x == x && p.tag == tag)?;
        let col = self.classes.iter().position(|c| c == y)?;
        Some(self.table[row][col])
    }

    /// Plain-text rendering with aligned columns.
    pub fn render(&self) -> String {
        let row_labels: Vec<String> = self
            .pairs
            .iter()
            .map(|p| format!("({}, #{} deg {})", p.x, p.tag, p.degree))
            .collect();
        let col_labels: Vec<String> = self.classes.iter().map(ToString::to_string).collect();
        let w0 = row_labels.iter().map(String::len).max().unwrap_or(0);
        let widths: Vec<usize> = col_labels.iter().map(|c| c.len().max(2)).collect();

        let mut out = format!("{:w0$}", "");
        for (c, w) in col_labels.iter().zip(&widths) {
            out.push_str(&format!(" | {c:>w$}"));
        }
        out.push('\n');
        for (label, row) in row_labels.iter().zip(&self.table) {
            out.push_str(&format!("{label:w0$}"));
            for (v, w) in row.iter().zip(&widths) {
                out.push_str(&format!(" | {v:>w$}"));
            }
            out.push('\n');
        }
        out
    }
}
