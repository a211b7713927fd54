//! Integer systems `Σ_j n_j ⟨α, ω_j⟩ = c_α`.
//!
//! Since `⟨α, ω_j⟩` is the `j`-th simple-root coefficient of `α`, each
//! constraint row is just the coefficient vector of its root. A solution `n`
//! yields the torus element `h(ν^{n_1}, …, ν^{n_l})`, which acts on every
//! support root by the same scalar and trivially on the listed zero roots.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::grading::{RootGrading, SubsystemGrading, WeightedDynkinDiagram};
use crate::linalg::{solve_integer, to_big, IntegerSolve};
use crate::rootsys::{Root, RootSystem, Subsystem};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Constraint {
    pub root: Root,
    pub target: i64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OhmoriSystem {
    rank: usize,
    constraints: Vec<Constraint>,
}

/// Which roots receive the constraint `Σ n_j ⟨α, ω_j⟩ = 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ZeroDomain {
    /// Positive roots (ambient positivity) of degree 0 under the grading.
    Levi,
    Explicit(Vec<Root>),
}

impl OhmoriSystem {
    pub fn new(rank: usize) -> Self {
        OhmoriSystem {
            rank,
            constraints: Vec::new(),
        }
    }

    pub fn push(&mut self, root: Root, target: i64) -> Result<()> {
        if root.rank() != self.rank {
            return Err(Error::RankMismatch {
                expected: self.rank,
                actual: root.rank(),
            });
        }
        self.constraints.push(Constraint { root, target });
        Ok(())
    }

    /// Support roots get `support_target`, the zero domain gets 0.
    pub fn build(
        grading: &dyn RootGrading,
        support: &[Root],
        support_target: i64,
        zero_domain: &ZeroDomain,
    ) -> Result<Self> {
        let ambient = grading.ambient();
        let zeros = match zero_domain {
            ZeroDomain::Levi => grading.levi_positives(),
            ZeroDomain::Explicit(roots) => roots.clone(),
        };
        let mut sys = OhmoriSystem::new(ambient.rank());
        for r in support {
            ambient.check_root(r)?;
            sys.push(r.clone(), support_target)?;
        }
        for r in zeros {
            ambient.check_root(&r)?;
            sys.push(r, 0)?;
        }
        Ok(sys)
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn constraints(&self) -> &[Constraint] {
        &self.constraints
    }

    pub fn len(&self) -> usize {
        self.constraints.len()
    }

    pub fn is_empty(&self) -> bool {
        self.constraints.is_empty()
    }

    /// Exact solution over `Z` by unimodular column reduction.
    pub fn solve(&self) -> OhmoriSolution {
        let rows: Vec<_> = self.constraints.iter().map(|c| to_big(c.root.coeffs())).collect();
        let rhs: Vec<_> = self.constraints.iter().map(|c| c.target.into()).collect();
        match solve_integer(&rows, &rhs, self.rank) {
            IntegerSolve::Inconsistent { .. } | IntegerSolve::NotIntegral { .. } => OhmoriSolution {
                status: SolutionStatus::None,
                point: None,
                kernel_rank: None,
            },
            IntegerSolve::Solved { rank, point } => {
                let point: Vec<i64> = point
                    .iter()
                    .map(|v| i64::try_from(v).expect("solution entries of root systems fit in i64"))
                    .collect();
                debug_assert!(self.verify(&point).unwrap());
                if rank == self.rank {
                    OhmoriSolution {
                        status: SolutionStatus::Unique,
                        point: Some(point),
                        kernel_rank: None,
                    }
                } else {
                    OhmoriSolution {
                        status: SolutionStatus::Affine,
                        point: Some(point),
                        kernel_rank: Some(self.rank - rank),
                    }
                }
            }
        }
    }

    /// Whether `n` satisfies every constraint exactly.
    pub fn verify(&self, n: &[i64]) -> Result<bool> {
        if n.len() != self.rank {
            return Err(Error::RankMismatch {
                expected: self.rank,
                actual: n.len(),
            });
        }
        Ok(self
            .constraints
            .iter()
            .all(|c| evaluate(n, &c.root) == c.target))
    }
}

/// `Σ_j n_j ⟨r, ω_j⟩`.
pub fn evaluate(n: &[i64], r: &Root) -> i64 {
    n.iter().zip(r.coeffs()).map(|(a, b)| a * b).sum()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SolutionStatus {
    Unique,
    None,
    Affine,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OhmoriSolution {
    pub status: SolutionStatus,
    #[serde(rename = "n", default, skip_serializing_if = "Option::is_none")]
    pub point: Option<Vec<i64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub kernel_rank: Option<usize>,
}

/// JSON description of a system:
/// `{"type": "E8", "weights": [...], "support": [[...], ...], "support_target": 1,
///   "zero_domain": "levi" | [[...], ...]}`.
///
/// An optional `"basis"` makes the weights refer to that simple system of the
/// subsystem it generates; `"zero_domain": "ambient"` then selects the
/// positive roots on which the linear extension of the grading vanishes.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SystemSpec {
    #[serde(rename = "type")]
    pub simple_type: crate::rootsys::SimpleType,
    pub weights: Vec<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub basis: Option<Vec<Root>>,
    pub support: Vec<Root>,
    pub support_target: i64,
    pub zero_domain: ZeroDomainSpec,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ZeroDomainSpec {
    Named(String),
    Explicit(Vec<Root>),
}

impl SystemSpec {
    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::Input(e.to_string()))
    }

    /// Builds the system against `rs`, which must be of the spec's type.
    pub fn build(&self, rs: &RootSystem) -> Result<OhmoriSystem> {
        if rs.simple_type() != self.simple_type {
            return Err(Error::Input(format!(
                "spec is for {}, root system is {}",
                self.simple_type,
                rs.simple_type()
            )));
        }
        let grading: Box<dyn RootGrading + '_> = match &self.basis {
            None => Box::new(WeightedDynkinDiagram::new(rs, self.weights.clone())?),
            Some(basis) => {
                let sub = Subsystem::generated_by(rs, basis)?;
                Box::new(SubsystemGrading::new(sub, basis.clone(), self.weights.clone())?)
            }
        };
        let zero = match &self.zero_domain {
            ZeroDomainSpec::Explicit(roots) => ZeroDomain::Explicit(roots.clone()),
            ZeroDomainSpec::Named(name) if name == "levi" => ZeroDomain::Levi,
            ZeroDomainSpec::Named(name) if name == "ambient" => {
                let Some(basis) = &self.basis else {
                    return Err(Error::Input(
                        "zero_domain \"ambient\" needs a \"basis\"".into(),
                    ));
                };
                let sub = Subsystem::generated_by(rs, basis)?;
                let g = SubsystemGrading::new(sub, basis.clone(), self.weights.clone())?;
                ZeroDomain::Explicit(g.ambient_zero_positives().ok_or_else(|| {
                    Error::Input("basis does not have full rank".into())
                })?)
            }
            ZeroDomainSpec::Named(other) => {
                return Err(Error::Unknown {
                    kind: "zero domain",
                    name: other.clone(),
                })
            }
        };
        OhmoriSystem::build(grading.as_ref(), &self.support, self.support_target, &zero)
    }
}
