use num_bigint::BigUint;
use num_rational::BigRational;
use proptest::prelude::*;

use parhol::catalog::{enumerate, Bounds, HssDescriptor};
use parhol::embed::{embedding_dim, embedding_report, EmbeddingReport};
use parhol::rootsys::{build_root_system, weyl_dim, DynkinType, Weight};
use parhol::Exact;

/// `dim` of the `SL(n+1)` module with highest weight `a` (fundamental
/// coordinates), by the hook-content formula on the associated partition.
fn hook_content(a: &[i64]) -> BigUint {
    let n1 = a.len() as i64 + 1;
    let rows: Vec<i64> = (0..a.len()).map(|i| a[i..].iter().sum()).collect();
    let cols = |j: i64| rows.iter().filter(|&&r| r > j).count() as i64;
    let mut acc = BigRational::from_integer(1.into());
    for (i, &r) in rows.iter().enumerate() {
        for j in 0..r {
            let hook = (r - j - 1) + (cols(j) - i as i64 - 1) + 1;
            let content = j - i as i64;
            acc *= BigRational::new((n1 + content).into(), hook.into());
        }
    }
    assert!(acc.is_integer());
    acc.to_integer().to_biguint().unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn type_a_matches_hook_content(w in prop::collection::vec(0i64..4, 1..7)) {
        let rs = build_root_system(DynkinType::a(w.len())).unwrap();
        prop_assert_eq!(weyl_dim(&rs, &Weight(w.clone())).unwrap(), hook_content(&w));
    }

    #[test]
    fn float_product_tracks_exact(w in prop::collection::vec(0i64..3, 5)) {
        let rs = build_root_system(DynkinType::d(5)).unwrap();
        let exact: Exact = rs.weyl_product(&Weight(w.clone())).unwrap();
        let float: f64 = rs.weyl_product(&Weight(w)).unwrap();
        let e: f64 = exact.to_integer().to_string().parse().unwrap();
        prop_assert!((float - e).abs() <= 1e-9 * e.max(1.0));
    }

    #[test]
    fn embedding_dim_strictly_increases(idx in 0usize..61, deg in 1u32..4) {
        let all = enumerate(&Bounds::default());
        let d = &all[idx % all.len()];
        prop_assert!(embedding_dim(d, deg + 1).unwrap() > embedding_dim(d, deg).unwrap());
    }

    #[test]
    fn report_json_roundtrip(idx in 0usize..61, deg in 1u32..4) {
        let all = enumerate(&Bounds::default());
        let r = embedding_report(&all[idx % all.len()], deg).unwrap();
        let back: EmbeddingReport = serde_json::from_str(&serde_json::to_string(&r).unwrap()).unwrap();
        prop_assert_eq!(r, back);
    }

    #[test]
    fn bounds_text_roundtrip(v in prop::array::uniform6(0u32..40)) {
        let b = Bounds {
            aiii_max_sum: v[0],
            aiii_max_a: v[1],
            aiii_max_b: v[2],
            ci_max: v[3],
            diii_max: v[4],
            quadric_max: v[5],
        };
        prop_assert_eq!(b.to_string().parse::<Bounds>().unwrap(), b);
    }
}

#[test]
fn descriptor_text_roundtrip() {
    for d in enumerate(&Bounds::default()) {
        let back: HssDescriptor = d.to_string().parse().unwrap();
        assert_eq!(back, d);
        let json = serde_json::to_string(&d).unwrap();
        assert_eq!(serde_json::from_str::<HssDescriptor>(&json).unwrap(), d);
    }
}

#[test]
fn hook_content_oracle_sanity() {
    // adjoint of SL(3), Sym^2 C^4, Lambda^2 C^5
    assert_eq!(hook_content(&[1, 1]), BigUint::from(8u32));
    assert_eq!(hook_content(&[2, 0, 0]), BigUint::from(10u32));
    assert_eq!(hook_content(&[0, 1, 0, 0]), BigUint::from(10u32));
}
