mod common;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use common::{box_solutions, paper_systems, solver_agrees_with_box, ty};
use rootbench::ohmori::{OhmoriSystem, SolutionStatus};
use rootbench::{Root, RootSystem};

#[test]
fn case_study_systems_agree_with_box_search() {
    for ps in paper_systems() {
        let sol = ps.system.solve();
        assert_eq!(sol.status, SolutionStatus::Unique, "{}", ps.name);
        assert_eq!(sol.point.as_ref(), Some(&ps.expected), "{}", ps.name);
        assert_eq!(box_solutions(&ps.system, 8), vec![ps.expected.clone()], "{}", ps.name);
    }
}

fn random_system(rng: &mut ChaCha8Rng, rs: &RootSystem, planted: bool) -> OhmoriSystem {
    let l = rs.rank();
    let n: Vec<i64> = (0..l).map(|_| rng.gen_range(-3..=3)).collect();
    let roots: Vec<Root> = rs.roots().collect();
    let k = rng.gen_range(0..=l + 2);
    let mut sys = OhmoriSystem::new(l);
    for r in roots.choose_multiple(rng, k) {
        let target = if planted {
            r.coeffs().iter().zip(&n).map(|(a, b)| a * b).sum()
        } else {
            rng.gen_range(-2..=2)
        };
        sys.push(r.clone(), target).unwrap();
    }
    sys
}

#[test]
fn random_small_systems_agree_with_box_search() {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    for name in ["A2", "B2", "G2", "A3", "B3", "C3"] {
        let rs = RootSystem::new(ty(name));
        for i in 0..150 {
            let planted = i % 2 == 0;
            let sys = random_system(&mut rng, &rs, planted);
            assert!(solver_agrees_with_box(&sys, 8), "{name} {:?}", sys.constraints());
            if planted {
                assert_ne!(sys.solve().status, SolutionStatus::None);
            }
        }
    }
}

#[test]
fn negated_root_with_negated_target_is_the_same_constraint() {
    for ps in paper_systems() {
        let mut flipped = OhmoriSystem::new(ps.system.rank());
        for c in ps.system.constraints() {
            flipped.push(-&c.root, -c.target).unwrap();
        }
        assert_eq!(flipped.solve(), ps.system.solve(), "{}", ps.name);
    }
    let e8 = RootSystem::new(ty("E8"));
    let a0 = e8.highest_root().unwrap();
    let ps = paper_systems().into_iter().find(|p| p.name == "e8 d1").unwrap();
    let mut alt = OhmoriSystem::new(8);
    for c in ps.system.constraints() {
        if c.root == -&a0 {
            alt.push(a0.clone(), -1).unwrap();
        } else {
            alt.push(c.root.clone(), c.target).unwrap();
        }
    }
    assert_eq!(alt.solve().point, Some(ps.expected));
}

#[test]
fn saturation_is_constant() {
    let (checked, failed) = common::saturation_suite(99, 40);
    assert!(checked >= 2);
    assert_eq!(failed, 0);
}
