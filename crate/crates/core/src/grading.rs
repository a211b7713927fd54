//! Gradings of root systems by weighted Dynkin diagrams.
//!
//! A weighted Dynkin diagram assigns `0`, `1` or `2` to each simple root and
//! extends additively to every root. [`SubsystemGrading`] does the same for a
//! chosen simple system of a closed subsystem, which is how a diagram on a
//! centralizer subsystem such as `D5 × A3 ⊂ E8` is described.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::rational_coordinates;
use crate::rootsys::{Root, RootSystem, SimpleType, Subsystem};

/// Common view of an additive grading `d` defined on (part of) a root system.
pub trait RootGrading {
    fn ambient(&self) -> &RootSystem;

    /// Every root, of either sign, on which `d` is defined.
    fn graded_roots(&self) -> Vec<Root>;

    /// `d(r)`, or `None` when `r` lies outside the graded roots.
    fn degree(&self, r: &Root) -> Option<i64>;

    /// Roots with `d = 0`, both signs.
    fn levi_roots(&self) -> Vec<Root> {
        self.graded_roots()
            .into_iter()
            .filter(|r| self.degree(r) == Some(0))
            .collect()
    }

    /// Roots with `d = 0` that are positive in the ambient system.
    fn levi_positives(&self) -> Vec<Root> {
        self.levi_roots()
            .into_iter()
            .filter(Root::is_positive)
            .collect()
    }

    /// Roots with `d = level`.
    fn level_set(&self, level: i64) -> Vec<Root> {
        self.graded_roots()
            .into_iter()
            .filter(|r| self.degree(r) == Some(level))
            .collect()
    }

    fn levels(&self) -> LevelDecomposition {
        let mut level_sets: BTreeMap<i64, Vec<Root>> = BTreeMap::new();
        let mut levi_roots = Vec::new();
        for r in self.graded_roots() {
            match self.degree(&r) {
                Some(0) => levi_roots.push(r),
                Some(d) if d > 0 => level_sets.entry(d).or_default().push(r),
                _ => {}
            }
        }
        LevelDecomposition {
            levi_roots,
            level_sets,
        }
    }

    /// `k` with `[U_{d,1} : U_{d,2}] = q^k`, i.e. the number of roots with `d = 1`.
    fn index_exponent(&self) -> Result<usize> {
        let k = self.level_set(1).len();
        if k % 2 == 1 {
            return Err(Error::OddIndexExponent(k));
        }
        Ok(k)
    }

    /// `[U_{d,1} : U_{d,2}]^{1/2} = q^{k/2}`.
    fn index_square_root(&self, q: u64) -> Result<BigUint> {
        let k = self.index_exponent()?;
        Ok(BigUint::from(q).pow((k / 2) as u32))
    }
}

/// Levi roots plus the positive level sets `d = 1, 2, …`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LevelDecomposition {
    pub levi_roots: Vec<Root>,
    pub level_sets: BTreeMap<i64, Vec<Root>>,
}

impl LevelDecomposition {
    pub fn level(&self, i: i64) -> &[Root] {
        self.level_sets.get(&i).map(Vec::as_slice).unwrap_or(&[])
    }
}

fn check_weights(weights: &[i64]) -> Result<()> {
    match weights.iter().find(|w| !(0..=2).contains(*w)) {
        Some(&w) => Err(Error::InvalidWeight(w)),
        None => Ok(()),
    }
}

/// A map `Π → {0,1,2}`, extended additively to all of `Φ`.
#[derive(Debug, Clone)]
pub struct WeightedDynkinDiagram<'a> {
    rs: &'a RootSystem,
    weights: Vec<i64>,
}

impl<'a> WeightedDynkinDiagram<'a> {
    pub fn new(rs: &'a RootSystem, weights: Vec<i64>) -> Result<Self> {
        if weights.len() != rs.rank() {
            return Err(Error::RankMismatch {
                expected: rs.rank(),
                actual: weights.len(),
            });
        }
        check_weights(&weights)?;
        Ok(WeightedDynkinDiagram { rs, weights })
    }

    /// The diagram with every weight equal to 2 (regular unipotent class).
    pub fn regular(rs: &'a RootSystem) -> Self {
        WeightedDynkinDiagram {
            rs,
            weights: vec![2; rs.rank()],
        }
    }

    /// Weight 2 on node `i0`, 0 elsewhere.
    pub fn single_node(rs: &'a RootSystem, i0: usize) -> Result<Self> {
        let mut w = vec![0; rs.rank()];
        *w.get_mut(i0).ok_or(Error::OutOfRange(i0))? = 2;
        Ok(WeightedDynkinDiagram { rs, weights: w })
    }

    pub fn root_system(&self) -> &'a RootSystem {
        self.rs
    }

    pub fn weights(&self) -> &[i64] {
        &self.weights
    }

    /// `d(r) = Σ coeffs[i]·weights[i]`.
    pub fn extend(&self, r: &Root) -> i64 {
        debug_assert_eq!(r.rank(), self.weights.len());
        r.coeffs().iter().zip(&self.weights).map(|(c, w)| c * w).sum()
    }

    pub fn to_spec(&self) -> DiagramSpec {
        DiagramSpec {
            simple_type: self.rs.simple_type(),
            weights: self.weights.clone(),
            basis: None,
        }
    }
}

impl RootGrading for WeightedDynkinDiagram<'_> {
    fn ambient(&self) -> &RootSystem {
        self.rs
    }

    fn graded_roots(&self) -> Vec<Root> {
        self.rs.roots().collect()
    }

    fn degree(&self, r: &Root) -> Option<i64> {
        self.rs.contains(r).then(|| self.extend(r))
    }
}

/// A weighted diagram on a chosen simple system of a closed subsystem.
#[derive(Debug, Clone)]
pub struct SubsystemGrading<'a> {
    sub: Subsystem<'a>,
    basis: Vec<Root>,
    weights: Vec<i64>,
    /// The unique linear form on the ambient lattice agreeing with the
    /// weights on the basis; present when the basis has full rank.
    functional: Option<Vec<BigRational>>,
}

impl<'a> SubsystemGrading<'a> {
    pub fn new(sub: Subsystem<'a>, basis: Vec<Root>, weights: Vec<i64>) -> Result<Self> {
        if weights.len() != basis.len() {
            return Err(Error::RankMismatch {
                expected: basis.len(),
                actual: weights.len(),
            });
        }
        check_weights(&weights)?;
        if !sub.is_simple_system(&basis)? {
            return Err(Error::InvalidBasis(
                "the roots do not form a simple system of the subsystem".into(),
            ));
        }
        let l = sub.parent().rank();
        // f·b_k = w_k: the columns of the basis matrix span the weights.
        let functional = (basis.len() == l).then(|| {
            let columns: Vec<Vec<i64>> = (0..l)
                .map(|j| basis.iter().map(|b| b.coeffs()[j]).collect())
                .collect();
            rational_coordinates(&columns, &weights)
                .expect("a simple system of full rank is a basis over Q")
        });
        Ok(SubsystemGrading {
            sub,
            basis,
            weights,
            functional,
        })
    }

    pub fn subsystem(&self) -> &Subsystem<'a> {
        &self.sub
    }

    pub fn basis(&self) -> &[Root] {
        &self.basis
    }

    pub fn weights(&self) -> &[i64] {
        &self.weights
    }

    /// Coordinates of a subsystem member in the basis (integers).
    fn coordinates(&self, r: &Root) -> Option<Vec<BigRational>> {
        let basis: Vec<Vec<i64>> = self.basis.iter().map(|b| b.coeffs().to_vec()).collect();
        rational_coordinates(&basis, r.coeffs())
    }

    /// The linear form extending the grading to the whole ambient lattice,
    /// when the basis has full rank.
    pub fn ambient_functional(&self) -> Option<&[BigRational]> {
        self.functional.as_deref()
    }

    /// Value of the linear extension on an arbitrary ambient root.
    pub fn ambient_extension(&self, r: &Root) -> Option<BigRational> {
        self.functional.as_ref().map(|f| {
            f.iter()
                .zip(r.coeffs())
                .map(|(a, &c)| a * BigRational::from_integer(c.into()))
                .fold(BigRational::zero(), |acc, x| acc + x)
        })
    }

    /// Positive roots of the ambient system on which the linear extension vanishes.
    pub fn ambient_zero_positives(&self) -> Option<Vec<Root>> {
        self.functional.as_ref()?;
        Some(
            self.sub
                .parent()
                .positive_roots()
                .iter()
                .filter(|r| self.ambient_extension(r).is_some_and(|v| v.is_zero()))
                .cloned()
                .collect(),
        )
    }

    pub fn to_spec(&self) -> DiagramSpec {
        DiagramSpec {
            simple_type: self.sub.parent().simple_type(),
            weights: self.weights.clone(),
            basis: Some(self.basis.clone()),
        }
    }
}

impl RootGrading for SubsystemGrading<'_> {
    fn ambient(&self) -> &RootSystem {
        self.sub.parent()
    }

    fn graded_roots(&self) -> Vec<Root> {
        self.sub.members().iter().cloned().collect()
    }

    fn degree(&self, r: &Root) -> Option<i64> {
        if !self.sub.contains(r) {
            return None;
        }
        let coords = self.coordinates(r)?;
        let d = coords
            .iter()
            .zip(&self.weights)
            .map(|(c, &w)| c * BigRational::from_integer(w.into()))
            .fold(BigRational::zero(), |acc, x| acc + x);
        debug_assert!(d.is_integer());
        i64::try_from(d.to_integer()).ok()
    }
}

/// JSON form of a diagram: `{"type": "E7", "weights": [...]}`, with an
/// optional `"basis"` of ambient roots for a subsystem grading.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiagramSpec {
    #[serde(rename = "type")]
    pub simple_type: SimpleType,
    pub weights: Vec<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub basis: Option<Vec<Root>>,
}

/// A set of weight-2 roots: the roots whose coefficient in a unipotent
/// element's normal form is non-zero.
#[derive(Clone)]
pub struct SupportSpec<'g> {
    grading: &'g dyn RootGrading,
    support: BTreeSet<Root>,
}

impl<'g> SupportSpec<'g> {
    pub fn new(grading: &'g dyn RootGrading, support: impl IntoIterator<Item = Root>) -> Result<Self> {
        let support: BTreeSet<Root> = support.into_iter().collect();
        for r in &support {
            match grading.degree(r) {
                Some(2) => {}
                Some(d) => {
                    return Err(Error::Precondition(format!(
                        "support root {r} has degree {d}, not 2"
                    )))
                }
                None => return Err(Error::NotARoot(r.coeffs().to_vec())),
            }
        }
        Ok(SupportSpec { grading, support })
    }

    pub fn grading(&self) -> &'g dyn RootGrading {
        self.grading
    }

    pub fn support(&self) -> &BTreeSet<Root> {
        &self.support
    }

    /// Closes the support under `α ↦ α + β` for Levi roots `β` whenever
    /// `α + β` is again a graded root of degree 2.
    pub fn saturate(&self) -> BTreeSet<Root> {
        let ambient = self.grading.ambient();
        let levi = self.grading.levi_roots();
        let mut out = self.support.clone();
        let mut frontier: Vec<Root> = out.iter().cloned().collect();
        while let Some(a) = frontier.pop() {
            for b in &levi {
                let s = &a + b;
                if ambient.contains(&s) && self.grading.degree(&s) == Some(2) && out.insert(s.clone()) {
                    frontier.push(s);
                }
            }
        }
        out
    }
}

/// Weighted diagrams shipped as named presets.
pub mod presets {
    use super::*;
    use crate::rootsys::Family;

    /// Name, type and weights of the plain diagrams.
    pub const DIAGRAMS: &[(&str, Family, usize, &[i64])] = &[
        ("g2-support", Family::G, 2, &[0, 2]),
        ("f4-support", Family::F, 4, &[0, 2, 0, 0]),
        ("e8-support", Family::E, 8, &[0, 0, 0, 0, 2, 0, 0, 0]),
        ("e7-support", Family::E, 7, &[1, 0, 0, 1, 0, 1, 0]),
    ];

    /// The `D5 × A3` preset lives on a subsystem of `E8`.
    pub const E8_D1: &str = "e8-d1";

    pub fn names() -> Vec<&'static str> {
        DIAGRAMS
            .iter()
            .map(|d| d.0)
            .chain(std::iter::once(E8_D1))
            .collect()
    }

    pub fn diagram_type(name: &str) -> Option<(SimpleType, Vec<i64>)> {
        DIAGRAMS.iter().find(|d| d.0 == name).map(|&(_, f, l, w)| {
            (SimpleType::new(f, l).expect("preset types are valid"), w.to_vec())
        })
    }

    /// `(Π ∖ {α₆}) ∪ {−α₀}` in `E8`, in the order α₁,α₂,α₃,α₄,α₅,α₇,α₈,−α₀.
    pub fn e8_d1_basis(e8: &RootSystem) -> Result<Vec<Root>> {
        let a0 = e8.highest_root()?;
        let mut basis: Vec<Root> = (0..8).filter(|&i| i != 5).map(|i| Root::simple(8, i)).collect();
        basis.push(-&a0);
        Ok(basis)
    }

    /// Weight 0 on α₄, 2 on the other seven basis roots.
    pub const E8_D1_WEIGHTS: [i64; 8] = [2, 2, 2, 0, 2, 2, 2, 2];

    pub fn e8_d1(e8: &RootSystem) -> Result<SubsystemGrading<'_>> {
        if e8.simple_type().to_string() != "E8" {
            return Err(Error::Precondition(format!(
                "{E8_D1} needs E8, got {}",
                e8.simple_type()
            )));
        }
        let basis = e8_d1_basis(e8)?;
        let sub = Subsystem::generated_by(e8, &basis)?;
        SubsystemGrading::new(sub, basis, E8_D1_WEIGHTS.to_vec())
    }
}
