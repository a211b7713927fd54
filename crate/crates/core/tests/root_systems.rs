mod common;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use common::{oracle_cartan, reflection_closure, root_system_matches_oracle, ty};
use rootbench::rootsys::{classify_simple_system, identify_cartan};
use rootbench::torus::{CyclicParams, TorusElement};
use rootbench::{RootSystem, SimpleType};

#[test]
fn generated_roots_match_reflection_closure() {
    for t in SimpleType::all_up_to(8) {
        assert!(root_system_matches_oracle(t), "{t}");
    }
}

#[test]
fn closure_sizes() {
    // |Φ| = l·h
    let cases = [("A7", 56), ("B8", 128), ("C8", 128), ("D8", 112), ("E6", 72), ("E7", 126), ("E8", 240), ("F4", 48), ("G2", 12)];
    for (name, size) in cases {
        assert_eq!(reflection_closure(ty(name)).len(), size, "{name}");
    }
}

#[test]
fn pairing_and_extension_are_linear() {
    assert_eq!(common::linearity_violations(0x5eed, 10_000), 0);
}

#[test]
fn identify_cartan_ignores_node_order() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for t in SimpleType::all_up_to(8) {
        let m = oracle_cartan(t);
        let expected = identify_cartan(&m).unwrap();
        for _ in 0..5 {
            let mut perm: Vec<usize> = (0..t.rank()).collect();
            perm.shuffle(&mut rng);
            let pm: Vec<Vec<i64>> = perm
                .iter()
                .map(|&i| perm.iter().map(|&j| m[i][j]).collect())
                .collect();
            assert_eq!(identify_cartan(&pm).unwrap(), expected, "{t} {perm:?}");
        }
    }
}

#[test]
fn classify_ignores_simple_root_order() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let params = CyclicParams::new(13, 1).unwrap();
    for name in ["E6", "E7", "E8", "F4", "B5", "D6"] {
        let rs = RootSystem::new(ty(name));
        for m in 1..12i64 {
            let ex: Vec<i64> = (0..rs.rank()).map(|i| (m * (i as i64 + 1)) % 12).collect();
            let kernel = TorusElement::new(params, &ex).kernel_subsystem(&rs).unwrap();
            if kernel.is_empty() {
                continue;
            }
            let expected = kernel.classify_type().unwrap();
            let mut simple = kernel.simple_system();
            simple.shuffle(&mut rng);
            assert!(kernel.is_simple_system(&simple).unwrap());
            assert_eq!(classify_simple_system(&rs, &simple).unwrap(), expected);
            let negated: Vec<_> = simple.iter().map(|r| -r).collect();
            assert_eq!(classify_simple_system(&rs, &negated).unwrap(), expected);
        }
    }
}
