//! Fixed case studies and their verification reports.
//!
//! Each scenario recomputes a group of claims from scratch and compares every
//! computed value with a frozen expectation. Expectations carry a provenance
//! tag: a published value, a trivial identity, or a value obtained from an
//! independent computation.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::grading::{presets, RootGrading, SupportSpec, WeightedDynkinDiagram};
use crate::multiplicity::{self, CycleType};
use crate::ohmori::{evaluate, OhmoriSystem, SolutionStatus, ZeroDomain};
use crate::rootsys::{Root, RootSystem, SimpleType};
use crate::torus::{make_ohmori_torus, CyclicParams, TorusElement};

/// Where an expected value comes from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Provenance {
    /// Stated in the source literature.
    #[serde(rename = "PAPER")]
    Paper,
    /// Follows immediately from definitions.
    #[serde(rename = "TRIVIAL")]
    Trivial,
    /// Obtained by an independent computation and frozen.
    #[serde(rename = "DERIVED")]
    Derived,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Check {
    pub id: String,
    pub anchor: String,
    pub computed: Value,
    pub expected: Value,
    pub provenance: Provenance,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub scenario: String,
    pub checks: Vec<Check>,
    pub pass: bool,
}

impl Report {
    fn new(scenario: impl Into<String>) -> Self {
        Report {
            scenario: scenario.into(),
            checks: Vec::new(),
            pass: true,
        }
    }

    fn check(
        &mut self,
        id: impl Into<String>,
        anchor: &str,
        computed: impl Serialize,
        expected: impl Serialize,
        provenance: Provenance,
    ) {
        let computed = serde_json::to_value(computed).expect("check values serialize");
        let expected = serde_json::to_value(expected).expect("check values serialize");
        let pass = computed == expected;
        self.pass &= pass;
        self.checks.push(Check {
            id: id.into(),
            anchor: anchor.to_string(),
            computed,
            expected,
            provenance,
            pass,
        });
    }

    fn absorb(&mut self, prefix: &str, other: Report) {
        for mut c in other.checks {
            c.id = format!("{prefix}/{}", c.id);
            self.pass &= c.pass;
            self.checks.push(c);
        }
    }

    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("reports serialize")
    }

    /// One line per check plus an overall verdict.
    pub fn summary(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            out.push_str(&format!(
                "[{}] {} ({}): computed {} expected {} [{}]\n",
                if c.pass { "PASS" } else { "FAIL" },
                c.id,
                c.anchor,
                c.computed,
                c.expected,
                serde_json::to_value(c.provenance)
                    .ok()
                    .and_then(|v| v.as_str().map(str::to_string))
                    .unwrap_or_default(),
            ));
        }
        let failed = self.checks.iter().filter(|c| !c.pass).count();
        out.push_str(&format!(
            "{}: {} ({} checks, {} failed)\n",
            self.scenario,
            if self.pass { "PASS" } else { "FAIL" },
            self.checks.len(),
            failed
        ));
        out
    }
}

/// Diagrams with a single node of weight 2 attached to the cuspidal
/// unipotent support in types G2, F4, E8.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SingleNodeCase {
    G2,
    F4,
    E8,
}

impl SingleNodeCase {
    pub const ALL: [SingleNodeCase; 3] = [SingleNodeCase::G2, SingleNodeCase::F4, SingleNodeCase::E8];

    fn preset(self) -> &'static str {
        match self {
            SingleNodeCase::G2 => "g2-support",
            SingleNodeCase::F4 => "f4-support",
            SingleNodeCase::E8 => "e8-support",
        }
    }

    /// 0-based node carrying weight 2.
    fn node(self) -> usize {
        match self {
            SingleNodeCase::G2 => 1,
            SingleNodeCase::F4 => 1,
            SingleNodeCase::E8 => 4,
        }
    }

    /// `n` with `C_G(u)/C_G(u)° ≅ 𝔖_n`.
    fn component_group(self) -> usize {
        match self {
            SingleNodeCase::G2 => 3,
            SingleNodeCase::F4 => 4,
            SingleNodeCase::E8 => 5,
        }
    }
}

impl std::str::FromStr for SingleNodeCase {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_uppercase().as_str() {
            "G2" => Ok(SingleNodeCase::G2),
            "F4" => Ok(SingleNodeCase::F4),
            "E8" => Ok(SingleNodeCase::E8),
            _ => Err(Error::Unknown {
                kind: "single-node case",
                name: s.to_string(),
            }),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Scenario {
    RegularClass(Vec<SimpleType>),
    SingleNode(Vec<SingleNodeCase>),
    E8Char5(CyclicParams),
    E7Mizuno(CyclicParams),
    Multiplicity(Vec<usize>),
}

#[derive(Debug, Clone, Serialize)]
pub struct ScenarioInfo {
    pub name: &'static str,
    pub description: &'static str,
    pub topic: &'static str,
    pub variants: &'static str,
    pub params: &'static str,
}

pub const REGISTRY: [ScenarioInfo; 5] = [
    ScenarioInfo {
        name: "regular-class",
        description: "all weights 2: the support system forces n = (1, ..., 1)",
        topic: "regular unipotent class, ordinary Gelfand-Graev characters",
        variants: "any simple type of rank <= 8 (default: all)",
        params: "none",
    },
    ScenarioInfo {
        name: "single-node",
        description: "one node of weight 2: Levi roots force n = e_i0",
        topic: "unipotent support of cuspidal characters in G2, F4, E8",
        variants: "G2 | F4 | E8 (default: all)",
        params: "none",
    },
    ScenarioInfo {
        name: "e8-char5",
        description: "order-4 element s of E8, kernel D5 x A3, grading d1 and its unique solution",
        topic: "E8[+-i] via the centralizer of an element of order 4",
        variants: "none",
        params: "--p, --e with p = 1 mod 4 (default p = 13, e = 1)",
    },
    ScenarioInfo {
        name: "e7-mizuno",
        description: "E7 diagram (1,0,0,1,0,1,0), target-2 system and the torus element of order 2(p-1)",
        topic: "cuspidal unipotent characters of E7, Mizuno's representative",
        variants: "none",
        params: "--p, --e with e even (default p = 5, e = 2)",
    },
    ScenarioInfo {
        name: "multiplicity",
        description: "pairs (x, sigma) for S_n and Kawanaka's multiplicity table",
        topic: "Kawanaka multiplicity formula, degree-one labels",
        variants: "3 | 4 | 5 (default: all)",
        params: "none",
    },
];

pub fn list_scenarios() -> &'static [ScenarioInfo] {
    &REGISTRY
}

impl Scenario {
    /// Resolves a registry name with an optional variant and field parameters.
    pub fn from_args(name: &str, variant: Option<&str>, p: Option<u64>, e: Option<u32>) -> Result<Self> {
        let no_params = |s: &str| -> Result<()> {
            if p.is_some() || e.is_some() {
                return Err(Error::Precondition(format!("{s} takes no field parameters")));
            }
            Ok(())
        };
        let no_variant = |s: &str| -> Result<()> {
            match variant {
                Some(v) => Err(Error::Precondition(format!("{s} has no variant {v:?}"))),
                None => Ok(()),
            }
        };
        match name {
            "regular-class" => {
                no_params(name)?;
                let types = match variant {
                    Some(v) => {
                        let t: SimpleType = v.parse()?;
                        if t.rank() > 8 {
                            return Err(Error::OutOfRange(t.rank()));
                        }
                        vec![t]
                    }
                    None => SimpleType::all_up_to(8),
                };
                Ok(Scenario::RegularClass(types))
            }
            "single-node" => {
                no_params(name)?;
                Ok(Scenario::SingleNode(match variant {
                    Some(v) => vec![v.parse()?],
                    None => SingleNodeCase::ALL.to_vec(),
                }))
            }
            "e8-char5" => {
                no_variant(name)?;
                let params = CyclicParams::new(p.unwrap_or(13), e.unwrap_or(1))?;
                if params.p() % 4 != 1 {
                    return Err(Error::Precondition(format!(
                        "e8-char5 needs p = 1 (mod 4), got p = {}",
                        params.p()
                    )));
                }
                Ok(Scenario::E8Char5(params))
            }
            "e7-mizuno" => {
                no_variant(name)?;
                let params = CyclicParams::new(p.unwrap_or(5), e.unwrap_or(2))?;
                if params.p() == 2 || params.e() % 2 != 0 {
                    return Err(Error::Precondition(format!(
                        "e7-mizuno needs q an even power of an odd prime p, got q = {}^{}",
                        params.p(),
                        params.e()
                    )));
                }
                Ok(Scenario::E7Mizuno(params))
            }
            "multiplicity" => {
                no_params(name)?;
                Ok(Scenario::Multiplicity(match variant {
                    Some(v) => {
                        let n: usize = v.parse().map_err(|_| Error::Input(format!("bad n {v:?}")))?;
                        if !(3..=5).contains(&n) {
                            return Err(Error::OutOfRange(n));
                        }
                        vec![n]
                    }
                    None => vec![3, 4, 5],
                }))
            }
            other => Err(Error::Unknown {
                kind: "scenario",
                name: other.to_string(),
            }),
        }
    }

    pub fn name(&self) -> String {
        match self {
            Scenario::RegularClass(ts) if ts.len() == 1 => format!("regular-class {}", ts[0]),
            Scenario::RegularClass(_) => "regular-class".into(),
            Scenario::SingleNode(cs) if cs.len() == 1 => format!("single-node {:?}", cs[0]),
            Scenario::SingleNode(_) => "single-node".into(),
            Scenario::E8Char5(c) => format!("e8-char5 p={} e={}", c.p(), c.e()),
            Scenario::E7Mizuno(c) => format!("e7-mizuno p={} e={}", c.p(), c.e()),
            Scenario::Multiplicity(ns) if ns.len() == 1 => format!("multiplicity {}", ns[0]),
            Scenario::Multiplicity(_) => "multiplicity".into(),
        }
    }

    pub fn run(&self) -> Result<Report> {
        let mut report = Report::new(self.name());
        match self {
            Scenario::RegularClass(types) => {
                for &t in types {
                    report.absorb(&t.to_string(), regular_class(t)?);
                }
            }
            Scenario::SingleNode(cases) => {
                for &c in cases {
                    report.absorb(&format!("{c:?}"), single_node(c)?);
                }
            }
            Scenario::E8Char5(params) => report.absorb("e8", e8_char5(*params)?),
            Scenario::E7Mizuno(params) => report.absorb("e7", e7_mizuno(*params)?),
            Scenario::Multiplicity(ns) => {
                for &n in ns {
                    report.absorb(&format!("S{n}"), multiplicity_checks(n)?);
                }
            }
        }
        Ok(report)
    }
}

use Provenance::{Derived, Paper, Trivial};

fn regular_class(t: SimpleType) -> Result<Report> {
    let rs = RootSystem::new(t);
    let d = WeightedDynkinDiagram::regular(&rs);
    let mut r = Report::new(t.to_string());
    let sys = OhmoriSystem::build(&d, &rs.simple_roots(), 1, &ZeroDomain::Levi)?;
    let sol = sys.solve();
    r.check("status", "regular class system", sol.status, SolutionStatus::Unique, Paper);
    r.check("n", "regular class system", &sol.point, Some(vec![1; t.rank()]), Paper);
    r.check("index-exponent", "U_{d,1} = U_{d,2} = U", d.index_exponent()?, 0, Trivial);
    Ok(r)
}

fn single_node(case: SingleNodeCase) -> Result<Report> {
    let (t, weights) = presets::diagram_type(case.preset()).expect("preset exists");
    let rs = RootSystem::new(t);
    let d = WeightedDynkinDiagram::new(&rs, weights.clone())?;
    let i0 = case.node();
    let mut r = Report::new(case.preset());
    let anchor = "single weight-2 node";

    let mut unit = vec![0i64; t.rank()];
    unit[i0] = 2;
    r.check("weights", "weighted diagram of the unipotent support", &weights, &unit, Paper);

    let levi = d.levi_positives();
    let off_node: Vec<Root> = (0..t.rank())
        .filter(|&i| i != i0)
        .map(|i| Root::simple(t.rank(), i))
        .collect();
    r.check(
        "off-node-simple-roots-in-levi",
        anchor,
        off_node.iter().all(|a| levi.contains(a)),
        true,
        Paper,
    );

    let level2 = d.level_set(2);
    let coeff_one = level2.iter().all(|a| a.coeffs()[i0] == 1);
    r.check("weight-2-coefficient-one", anchor, coeff_one, true, Trivial);

    let sys = OhmoriSystem::build(&d, &level2, 1, &ZeroDomain::Levi)?;
    let sol = sys.solve();
    let mut e = vec![0i64; t.rank()];
    e[i0] = 1;
    r.check("status", anchor, sol.status, SolutionStatus::Unique, Paper);
    r.check("n", anchor, &sol.point, Some(e), Paper);

    // zero constraints alone leave exactly the node free
    let zeros_only = OhmoriSystem::build(&d, &[], 1, &ZeroDomain::Levi)?.solve();
    r.check("levi-kernel-rank", anchor, zeros_only.kernel_rank, Some(1), Trivial);

    r.check("index-exponent", "U_{d,1} = U_{d,2}", d.index_exponent()?, 0, Paper);

    let sat = SupportSpec::new(&d, [Root::simple(t.rank(), i0)])?.saturate();
    let level2_set: BTreeSet<Root> = level2.iter().cloned().collect();
    r.check("saturation-within-level-2", anchor, sat.is_subset(&level2_set), true, Trivial);

    let n = case.component_group();
    let classes = multiplicity::classes(n)?.len() as u64;
    let expected_classes = match n {
        3 => 3,
        4 => 5,
        _ => 7,
    };
    r.check(
        "orbit-count",
        "G^F-classes in C^F from the component group",
        multiplicity::orbit_count(classes),
        expected_classes,
        Derived,
    );
    Ok(r)
}

fn sum_of_simple(l: usize, idx: &[usize]) -> Root {
    let mut c = vec![0; l];
    for &i in idx {
        c[i] += 1;
    }
    Root::new(c)
}

/// Support of `u₁ = x_{α₁}x_{α₅}x_{α₂}x_{α₃+α₄}x_{α₄+α₅}·x_{α₇}x_{α₈}x_{−α₀}`.
pub fn e8_u1_support(e8: &RootSystem) -> Result<Vec<Root>> {
    let a0 = e8.highest_root()?;
    Ok(vec![
        sum_of_simple(8, &[0]),
        sum_of_simple(8, &[4]),
        sum_of_simple(8, &[1]),
        sum_of_simple(8, &[2, 3]),
        sum_of_simple(8, &[3, 4]),
        sum_of_simple(8, &[6]),
        sum_of_simple(8, &[7]),
        -&a0,
    ])
}

/// `s = h(1,1,1,1,1,g^{(q−1)/4},1,1)`.
pub fn e8_s(params: CyclicParams) -> Result<TorusElement> {
    let m = params.modulus();
    if m % 4 != 0 {
        return Err(Error::Precondition(format!("4 does not divide q - 1 = {m}")));
    }
    let mut ex = vec![0i64; 8];
    ex[5] = (m / 4) as i64;
    Ok(TorusElement::new(params, &ex))
}

fn e8_char5(params: CyclicParams) -> Result<Report> {
    let e8 = RootSystem::new("E8".parse()?);
    let mut r = Report::new("e8-char5");

    let a0 = e8.highest_root()?;
    r.check("highest-root", "highest root of E8", &a0, [2, 3, 4, 6, 5, 4, 3, 2], Paper);

    let s = e8_s(params)?;
    r.check("s-order", "s has order 4", s.order(), 4, Paper);

    let kernel = s.kernel_subsystem(&e8)?;
    let kt: Vec<String> = kernel.classify_type()?.iter().map(ToString::to_string).collect();
    r.check("kernel-type", "Phi_1 = {alpha : alpha(s) = 1}", &kt, ["D5", "A3"], Paper);

    let pi1 = presets::e8_d1_basis(&e8)?;
    r.check("pi1-simple", "Pi_1 = (Pi - {alpha_6}) u {-alpha_0}", kernel.is_simple_system(&pi1)?, true, Paper);

    let d1 = presets::e8_d1(&e8)?;
    r.check(
        "kernel-generated-by-pi1",
        "Pi_1 generates Phi_1",
        d1.subsystem().members() == kernel.members(),
        true,
        Derived,
    );
    r.check("kernel-size", "|Phi_1| = |D5| + |A3|", kernel.len(), 2 * (20 + 6), Derived);

    let support = e8_u1_support(&e8)?;
    let degrees: Vec<Option<i64>> = support.iter().map(|a| d1.degree(a)).collect();
    r.check("u1-support-degree", "u_1 lies in U_{d1,2}", &degrees, vec![Some(2); 8], Derived);

    let levi = d1.levi_positives();
    r.check("levi-positives", "d1 = 0 on Phi_1 n Phi+", &levi, [sum_of_simple(8, &[3])], Derived);
    r.check("index-exponent", "d1 is even", d1.index_exponent()?, 0, Derived);

    let expected_n = vec![1i64, 1, 1, 0, 1, -5, 1, 1];
    let sol = OhmoriSystem::build(&d1, &support, 1, &ZeroDomain::Levi)?.solve();
    r.check("status", "unique solution of the d1 system", sol.status, SolutionStatus::Unique, Paper);
    r.check("n", "unique solution of the d1 system", &sol.point, Some(&expected_n), Paper);

    // Same system with zeros on every positive root where the linear
    // extension of d1 to Phi vanishes.
    let ambient_zeros = d1.ambient_zero_positives().expect("Pi_1 has full rank");
    let sol_ambient =
        OhmoriSystem::build(&d1, &support, 1, &ZeroDomain::Explicit(ambient_zeros))?.solve();
    r.check("n-ambient-zero-domain", "alternative zero domain", &sol_ambient.point, Some(&expected_n), Derived);

    let t = make_ohmori_torus(params, &expected_n, false)?;
    r.check("t-order", "t = h(nu, nu, nu, 1, nu, nu^-5, nu, nu)", t.order(), params.p() - 1, Derived);
    if params.e() == 1 {
        r.check("t-order-prime-field", "t has order q - 1", t.order(), params.q() - 1, Paper);
    }
    let nu = params.nu_exponent();
    let support_vals: Vec<u64> = support.iter().map(|a| t.eval_root(a)).collect::<Result<_>>()?;
    r.check("t-on-support", "alpha(t) = nu on the support", &support_vals, vec![nu; 8], Paper);
    let kernel_t = t.kernel_subsystem(&e8)?;
    r.check(
        "t-trivial-on-levi",
        "alpha(t) = 1 if d1(alpha) = 0",
        levi.iter().all(|a| kernel_t.contains(a)),
        true,
        Paper,
    );

    r.check(
        "u1-classes",
        "C_{G1}(u1)/C° = Z/4 gives four classes",
        multiplicity::orbit_count(4),
        4,
        Paper,
    );
    Ok(r)
}

/// Mizuno's roots 20, 21, 24, 28, 30 of `E7`.
pub fn e7_mizuno_roots() -> Vec<Root> {
    vec![
        sum_of_simple(7, &[0, 1, 2, 3]),
        sum_of_simple(7, &[0, 2, 3, 4]),
        sum_of_simple(7, &[1, 3, 4, 5]),
        sum_of_simple(7, &[1, 2, 3, 3, 4]),
        sum_of_simple(7, &[2, 3, 4, 5, 6]),
    ]
}

fn e7_mizuno(params: CyclicParams) -> Result<Report> {
    let e7 = RootSystem::new("E7".parse()?);
    let (_, w) = presets::diagram_type("e7-support").expect("preset exists");
    let d0 = WeightedDynkinDiagram::new(&e7, w)?;
    let mut r = Report::new("e7-mizuno");
    let support = e7_mizuno_roots();

    let are_roots = support.iter().all(|a| e7.contains(a) && a.is_positive());
    r.check("mizuno-roots", "roots 20, 21, 24, 28, 30 of Phi+", are_roots, true, Paper);
    let vals: Vec<i64> = support.iter().map(|a| d0.extend(a)).collect();
    r.check("mizuno-d0", "d0 = 2 on the representative's roots", &vals, [2; 5], Paper);

    let sys = OhmoriSystem::build(&d0, &support, 2, &ZeroDomain::Levi)?;
    let sol = sys.solve();
    r.check("constraints", "5 support plus Levi constraints", sys.len(), 5 + 4, Derived);
    r.check("status", "target-2 system", sol.status, SolutionStatus::Unique, Paper);
    let expected_n = vec![1i64, 0, 0, 1, 0, 1, 0];
    r.check("n", "target-2 system", &sol.point, Some(&expected_n), Paper);

    let t = make_ohmori_torus(params, &expected_n, true)?;
    r.check("t-order", "t has order 2(p - 1)", t.order(), 2 * (params.p() - 1), Paper);
    let nu = params.nu_exponent();
    let on_support: Vec<u64> = support.iter().map(|a| t.eval_root(a)).collect::<Result<_>>()?;
    r.check("t-on-support", "alpha(t) = nu on the support", &on_support, vec![nu; 5], Paper);
    let kernel_t = t.kernel_subsystem(&e7)?;
    r.check(
        "t-trivial-on-levi",
        "alpha(t) = 1 if d0(alpha) = 0",
        d0.levi_positives().iter().all(|a| kernel_t.contains(a)),
        true,
        Derived,
    );

    let k = d0.index_exponent()?;
    r.check("index-exponent", "[U_{d0,1} : U_{d0,2}] = q^k", k, 14, Derived);
    let m0 = d0.index_square_root(params.q())?;
    r.check("m0-odd", "m0 = q^{k/2} is odd", m0.bit(0), true, Paper);

    let spec = SupportSpec::new(&d0, support.iter().cloned())?;
    let sat = spec.saturate();
    r.check("saturation-size", "support moved by P_d", sat.len(), 13, Derived);
    let n = sol.point.clone().unwrap_or_default();
    let constant = !n.is_empty() && sat.iter().all(|a| evaluate(&n, a) == 2);
    r.check("saturation-constant", "n takes the target on the whole saturation", constant, true, Derived);

    r.check("orbit-count", "A(u0) = Z/2 splits C0^F into two classes", multiplicity::orbit_count(2), 2, Paper);
    Ok(r)
}

fn multiplicity_checks(n: usize) -> Result<Report> {
    let mut r = Report::new(format!("S{n}"));
    let set = multiplicity::pair_set(n)?;
    let (size, lin) = match n {
        3 => (8, 7),
        4 => (21, 17),
        _ => (39, 31),
    };
    r.check("pair-set-size", "|M_0|", set.len(), size, Derived);

    let classes = multiplicity::classes(n)?;
    let sos_ok = classes.iter().all(|x| {
        let order = multiplicity::centralizer(x).order();
        let s: u64 = set.pairs.iter().filter(|p| &p.x == x).map(|p| p.degree.pow(2)).sum();
        s == order
    });
    r.check("sum-of-squares", "sum of sigma(1)^2 = |C(x)|", sos_ok, true, Derived);

    let table = multiplicity::kawanaka_table(n)?;
    let formula_ok = table.pairs.iter().zip(&table.table).all(|(p, row)| {
        table
            .classes
            .iter()
            .zip(row)
            .all(|(y, &v)| v == if &p.x == y { p.degree } else { 0 })
    });
    r.check("table-formula", "sigma(1) if x = y, else 0", formula_ok, true, Paper);
    let off_diag_zero = table.pairs.iter().zip(&table.table).all(|(p, row)| {
        table.classes.iter().zip(row).all(|(y, &v)| &p.x == y || v == 0)
    });
    r.check("off-diagonal-zero", "0 otherwise", off_diag_zero, true, Paper);

    r.check(
        "degree-one-pairs",
        "pairs with sigma(1) = 1",
        multiplicity::degree_one_pairs(n)?.len(),
        lin,
        Derived,
    );
    let identity = CycleType::new(vec![1; n])?;
    r.check(
        "identity-row-degrees",
        "Irr(S_n) by hook lengths",
        set.pairs.iter().filter(|p| p.x == identity).map(|p| p.degree).collect::<Vec<_>>(),
        match n {
            3 => json!([1, 1, 2]),
            4 => json!([1, 1, 2, 3, 3]),
            _ => json!([1, 1, 4, 4, 5, 5, 6]),
        },
        Derived,
    );
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn registry_is_stable() {
        let names: Vec<&str> = list_scenarios().iter().map(|s| s.name).collect();
        assert_eq!(names, ["regular-class", "single-node", "e8-char5", "e7-mizuno", "multiplicity"]);
        assert!(list_scenarios().iter().all(|s| !s.topic.is_empty()));
    }

    #[test]
    fn param_validation() {
        assert!(Scenario::from_args("e7-mizuno", None, Some(5), Some(1)).is_err());
        assert!(Scenario::from_args("e8-char5", None, Some(7), Some(1)).is_err());
        assert!(Scenario::from_args("e8-char5", None, Some(12), Some(1)).is_err());
        assert!(Scenario::from_args("nope", None, None, None).is_err());
        assert!(Scenario::from_args("multiplicity", Some("6"), None, None).is_err());
        assert!(Scenario::from_args("regular-class", None, Some(5), None).is_err());
        assert!(Scenario::from_args("single-node", Some("E7"), None, None).is_err());
        let err = Scenario::from_args("e7-mizuno", None, Some(13), Some(3)).unwrap_err();
        assert!(err.to_string().contains("even power"));
    }

    #[test]
    fn every_scenario_passes_with_defaults() {
        for info in list_scenarios() {
            let report = Scenario::from_args(info.name, None, None, None)
                .unwrap()
                .run()
                .unwrap();
            assert!(report.pass, "{}", report.summary());
        }
    }

    #[test]
    fn reports_reject_missing_provenance() {
        let bad = r#"{"scenario":"x","checks":[{"id":"a","anchor":"b","computed":1,"expected":1,"pass":true}],"pass":true}"#;
        assert!(serde_json::from_str::<Report>(bad).is_err());
        let bad_tag = bad.replace(r#""pass":true}]"#, r#""provenance":"GUESS","pass":true}]"#);
        assert!(serde_json::from_str::<Report>(&bad_tag).is_err());
        let good = bad.replace(r#""pass":true}]"#, r#""provenance":"DERIVED","pass":true}]"#);
        assert!(serde_json::from_str::<Report>(&good).is_ok());
    }
}
