use derivscope::catalog::default_catalog;
use derivscope::linalg::ratio;
use derivscope::Algebra;
use derivscope_cli::{parse, serialize};
use proptest::prelude::*;

fn law() -> impl Strategy<Value = Algebra> {
    (0usize..=5).prop_flat_map(|n| {
        let pairs = n * n.saturating_sub(1) / 2;
        prop::collection::vec((-9i64..=9, 1i64..=6), pairs * n).prop_map(move |cs| {
            let mut products = Vec::new();
            let mut it = cs.into_iter();
            for i in 0..n {
                for j in i + 1..n {
                    let v = (0..n).map(|_| it.next().map(|(p, q)| ratio(p, q)).unwrap()).collect();
                    products.push((i, j, v));
                }
            }
            Algebra::from_products(n, products).unwrap()
        })
    })
}

proptest! {
    #[test]
    fn parse_inverts_serialize(a in law()) {
        let text = serialize(&a);
        let back = parse(&text).unwrap();
        prop_assert_eq!(&back, &a);
        prop_assert_eq!(serialize(&back), text);
    }
}

#[test]
fn every_catalog_algebra_round_trips() {
    for entry in default_catalog() {
        let text = serialize(&entry.algebra);
        let back = parse(&text).unwrap();
        assert_eq!(back, entry.algebra, "{}", entry.name);
        assert_eq!(back.name(), entry.algebra.name());
    }
}
