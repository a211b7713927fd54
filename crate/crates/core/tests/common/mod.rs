//! Independent oracles shared by the property tests and the acceptance suite.
#![allow(dead_code)]

use std::collections::BTreeSet;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use rootbench::grading::{presets, RootGrading, SupportSpec, WeightedDynkinDiagram};
use rootbench::ohmori::{evaluate, OhmoriSystem, SolutionStatus, ZeroDomain};
use rootbench::rootsys::Family;
use rootbench::scenarios::{e7_mizuno_roots, e8_u1_support};
use rootbench::{Root, RootSystem, SimpleType};

pub fn ty(s: &str) -> SimpleType {
    s.parse().unwrap()
}

/// Symmetric bilinear form on the simple roots, shortest root of squared
/// length 2, written out from the Bourbaki diagrams.
pub fn oracle_gram(t: SimpleType) -> Vec<Vec<i64>> {
    let l = t.rank();
    let mut g = vec![vec![0i64; l]; l];
    let edge = |g: &mut Vec<Vec<i64>>, i: usize, j: usize, v: i64| {
        g[i][j] = v;
        g[j][i] = v;
    };
    match t.family() {
        Family::A => {
            for i in 0..l {
                g[i][i] = 2;
            }
            for i in 1..l {
                edge(&mut g, i - 1, i, -1);
            }
        }
        Family::B => {
            for i in 0..l {
                g[i][i] = if i + 1 == l { 2 } else { 4 };
            }
            for i in 1..l {
                edge(&mut g, i - 1, i, -2);
            }
        }
        Family::C => {
            for i in 0..l {
                g[i][i] = if i + 1 == l { 4 } else { 2 };
            }
            for i in 1..l {
                edge(&mut g, i - 1, i, if i + 1 == l { -2 } else { -1 });
            }
        }
        Family::D => {
            for i in 0..l {
                g[i][i] = 2;
            }
            for i in 1..l - 1 {
                edge(&mut g, i - 1, i, -1);
            }
            // D2 = A1 x A1 has no edges
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
            for i in 3..l {
                edge(&mut g, i - 1, i, -1);
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

pub fn oracle_cartan(t: SimpleType) -> Vec<Vec<i64>> {
    let g = oracle_gram(t);
    let l = t.rank();
    (0..l)
        .map(|i| (0..l).map(|j| 2 * g[i][j] / g[j][j]).collect())
        .collect()
}

fn form(g: &[Vec<i64>], a: &[i64], b: &[i64]) -> i64 {
    let mut s = 0;
    for i in 0..a.len() {
        for j in 0..b.len() {
            s += a[i] * g[i][j] * b[j];
        }
    }
    s
}

/// Orbit of the simple roots under the simple reflections.
pub fn reflection_closure(t: SimpleType) -> BTreeSet<Vec<i64>> {
    let g = oracle_gram(t);
    let l = t.rank();
    let simple: Vec<Vec<i64>> = (0..l)
        .map(|i| (0..l).map(|j| i64::from(i == j)).collect())
        .collect();
    let mut seen: BTreeSet<Vec<i64>> = simple.iter().cloned().collect();
    let mut frontier: Vec<Vec<i64>> = simple.clone();
    while let Some(b) = frontier.pop() {
        for (i, a) in simple.iter().enumerate() {
            let k = 2 * form(&g, &b, a) / g[i][i];
            let mut r = b.clone();
            r[i] -= k;
            if seen.insert(r.clone()) {
                frontier.push(r);
            }
        }
    }
    seen
}

/// Compares the library root system of `t` with the reflection closure.
pub fn root_system_matches_oracle(t: SimpleType) -> bool {
    let rs = RootSystem::new(t);
    let lib: BTreeSet<Vec<i64>> = rs.roots().map(|r| r.coeffs().to_vec()).collect();
    lib == reflection_closure(t) && rs.cartan().rows() == oracle_cartan(t).as_slice()
}

/// Checks linearity of the pairings and of diagram extensions on `count`
/// random pairs of roots; returns the number of violations.
pub fn linearity_violations(seed: u64, count: usize) -> usize {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let types = SimpleType::all_up_to(8);
    let systems: Vec<RootSystem> = types.iter().map(|&t| RootSystem::new(t)).collect();
    let mut bad = 0;
    for _ in 0..count {
        let rs = systems.choose(&mut rng).unwrap();
        let roots: Vec<Root> = rs.roots().collect();
        let a = roots.choose(&mut rng).unwrap();
        let b = roots.choose(&mut rng).unwrap();
        let sum = a + b;
        let g = oracle_gram(rs.simple_type());
        let l = rs.rank();

        let weights: Vec<i64> = (0..l).map(|_| rng.gen_range(0..=2)).collect();
        let d = WeightedDynkinDiagram::new(rs, weights).unwrap();
        let ok = (0..l).all(|i| rs.coroot_pairing(&sum, i) == rs.coroot_pairing(a, i) + rs.coroot_pairing(b, i))
            && rs.inner(a, b) == form(&g, a.coeffs(), b.coeffs())
            && rs.inner(&sum, b) == rs.inner(a, b) + rs.inner(b, b)
            && rs.pairing(a, b) * form(&g, b.coeffs(), b.coeffs()) == 2 * form(&g, a.coeffs(), b.coeffs())
            && rs.contains(&rs.reflect(a, b))
            && rs.reflect(&rs.reflect(a, b), b) == *a
            && d.extend(&sum) == d.extend(a) + d.extend(b)
            && d.extend(&-a) == -d.extend(a)
            && d.degree(a) == Some(d.extend(a));
        if !ok {
            bad += 1;
        }
    }
    bad
}

/// All integer points of `{-bound..=bound}^l` satisfying every constraint,
/// by backtracking with a constraint checked as soon as its support is fixed.
pub fn box_solutions(sys: &OhmoriSystem, bound: i64) -> Vec<Vec<i64>> {
    let l = sys.rank();
    // constraints indexed by the last variable they involve
    let mut by_last: Vec<Vec<(Vec<i64>, i64)>> = vec![Vec::new(); l];
    let mut trivially_bad = false;
    for c in sys.constraints() {
        match c.root.coeffs().iter().rposition(|&x| x != 0) {
            Some(k) => by_last[k].push((c.root.coeffs().to_vec(), c.target)),
            None => trivially_bad |= c.target != 0,
        }
    }
    let mut out = Vec::new();
    if trivially_bad {
        return out;
    }
    fn go(k: usize, n: &mut Vec<i64>, bound: i64, by_last: &[Vec<(Vec<i64>, i64)>], out: &mut Vec<Vec<i64>>) {
        if k == n.len() {
            out.push(n.clone());
            return;
        }
        for v in -bound..=bound {
            n[k] = v;
            let ok = by_last[k]
                .iter()
                .all(|(c, t)| c.iter().zip(n.iter()).map(|(a, b)| a * b).sum::<i64>() == *t);
            if ok {
                go(k + 1, n, bound, by_last, out);
            }
        }
        n[k] = 0;
    }
    go(0, &mut vec![0; l], bound, &by_last, &mut out);
    out
}

/// Whether `solve` agrees with the box search: every box point solves the
/// system, a unique solution inside the box is the only box point, and
/// `none` means the box is empty.
pub fn solver_agrees_with_box(sys: &OhmoriSystem, bound: i64) -> bool {
    let sol = sys.solve();
    let found = box_solutions(sys, bound);
    match sol.status {
        SolutionStatus::None => found.is_empty(),
        SolutionStatus::Unique => {
            let p = sol.point.clone().unwrap();
            let inside = p.iter().all(|x| x.abs() <= bound);
            sys.verify(&p).unwrap() && if inside { found == vec![p] } else { found.is_empty() }
        }
        SolutionStatus::Affine => {
            let p = sol.point.clone().unwrap();
            sys.verify(&p).unwrap() && sol.kernel_rank.unwrap() > 0
        }
    }
}

/// A named system whose exact solution is fixed in advance.
pub struct PaperSystem {
    pub name: String,
    pub system: OhmoriSystem,
    pub expected: Vec<i64>,
}

fn unit(l: usize, i: usize) -> Vec<i64> {
    let mut v = vec![0; l];
    v[i] = 1;
    v
}

/// Every system appearing in the case studies, paired with its root system.
pub fn paper_systems() -> Vec<PaperSystem> {
    let mut out = Vec::new();
    for t in SimpleType::all_up_to(8) {
        let rs = RootSystem::new(t);
        let d = WeightedDynkinDiagram::regular(&rs);
        out.push(PaperSystem {
            name: format!("regular {t}"),
            system: OhmoriSystem::build(&d, &rs.simple_roots(), 1, &ZeroDomain::Levi).unwrap(),
            expected: vec![1; t.rank()],
        });
    }
    for (name, node) in [("g2-support", 1), ("f4-support", 1), ("e8-support", 4)] {
        let (t, w) = presets::diagram_type(name).unwrap();
        let rs = RootSystem::new(t);
        let d = WeightedDynkinDiagram::new(&rs, w).unwrap();
        out.push(PaperSystem {
            name: name.to_string(),
            system: OhmoriSystem::build(&d, &d.level_set(2), 1, &ZeroDomain::Levi).unwrap(),
            expected: unit(t.rank(), node),
        });
    }
    let e8 = RootSystem::new(ty("E8"));
    let d1 = presets::e8_d1(&e8).unwrap();
    out.push(PaperSystem {
        name: "e8 d1".into(),
        system: OhmoriSystem::build(&d1, &e8_u1_support(&e8).unwrap(), 1, &ZeroDomain::Levi).unwrap(),
        expected: vec![1, 1, 1, 0, 1, -5, 1, 1],
    });
    let e7 = RootSystem::new(ty("E7"));
    let (_, w) = presets::diagram_type("e7-support").unwrap();
    let d0 = WeightedDynkinDiagram::new(&e7, w).unwrap();
    out.push(PaperSystem {
        name: "e7 d0".into(),
        system: OhmoriSystem::build(&d0, &e7_mizuno_roots(), 2, &ZeroDomain::Levi).unwrap(),
        expected: vec![1, 0, 0, 1, 0, 1, 0],
    });
    out
}

/// For a grading, a support and a target: if the Levi system has a solution
/// `n`, then `n` takes the target on the whole saturation of the support.
pub fn saturation_constant(g: &dyn RootGrading, support: &[Root], target: i64) -> Option<bool> {
    let sys = OhmoriSystem::build(g, support, target, &ZeroDomain::Levi).ok()?;
    let n = sys.solve().point?;
    let sat = SupportSpec::new(g, support.iter().cloned()).ok()?.saturate();
    Some(sat.iter().all(|a| evaluate(&n, a) == target))
}

/// Saturation constancy on the case-study supports and on `trials` random
/// subsets of level 2 for every named diagram; returns (checked, failures).
pub fn saturation_suite(seed: u64, trials: usize) -> (usize, usize) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut checked = 0;
    let mut failed = 0;
    let mut record = |r: Option<bool>| {
        if let Some(ok) = r {
            checked += 1;
            failed += usize::from(!ok);
        }
    };

    let e8 = RootSystem::new(ty("E8"));
    let d1 = presets::e8_d1(&e8).unwrap();
    record(saturation_constant(&d1, &e8_u1_support(&e8).unwrap(), 1));
    let e7 = RootSystem::new(ty("E7"));
    let (_, w) = presets::diagram_type("e7-support").unwrap();
    let d0 = WeightedDynkinDiagram::new(&e7, w).unwrap();
    record(saturation_constant(&d0, &e7_mizuno_roots(), 2));

    for &(name, ..) in presets::DIAGRAMS {
        let (t, w) = presets::diagram_type(name).unwrap();
        let rs = RootSystem::new(t);
        let d = WeightedDynkinDiagram::new(&rs, w).unwrap();
        let level2 = d.level_set(2);
        for _ in 0..trials {
            let k = rng.gen_range(1..=level2.len());
            let support: Vec<Root> = level2.choose_multiple(&mut rng, k).cloned().collect();
            let target = rng.gen_range(1..=2);
            record(saturation_constant(&d, &support, target));
        }
    }
    (checked, failed)
}
