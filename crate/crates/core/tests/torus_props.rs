use proptest::prelude::*;

use rootbench::torus::{CyclicParams, TorusElement};
use rootbench::{RootSystem, SimpleType};

fn types() -> Vec<SimpleType> {
    ["A4", "B3", "C4", "D5", "E6", "E7", "E8", "F4", "G2"]
        .iter()
        .map(|s| s.parse().unwrap())
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn kernels_are_closed_subsystems(
        ti in 0usize..9,
        pi in 0usize..5,
        e in 1u32..=2,
        raw in proptest::collection::vec(-50i64..50, 8),
    ) {
        let t = types()[ti];
        let p = [3u64, 5, 7, 11, 13][pi];
        let params = CyclicParams::new(p, e).unwrap();
        let rs = RootSystem::new(t);
        let el = TorusElement::new(params, &raw[..t.rank()]);
        let m = params.modulus();
        prop_assert_eq!(m % el.order(), 0);

        // closure and symmetry are validated by the subsystem constructor
        let kernel = el.kernel_subsystem(&rs).unwrap();
        for a in kernel.members() {
            prop_assert!(kernel.contains(&-a));
        }
        if !kernel.is_empty() {
            let types = kernel.classify_type().unwrap();
            let positives: usize = types.iter().map(|t| RootSystem::new(*t).positive_roots().len()).sum();
            prop_assert_eq!(positives * 2, kernel.len());
        }
        for a in rs.positive_roots() {
            for b in rs.positive_roots().iter().take(10) {
                let lhs = el.eval_root(&(a + b)).unwrap();
                prop_assert_eq!(lhs, (el.eval_root(a).unwrap() + el.eval_root(b).unwrap()) % m);
            }
        }
    }
}
