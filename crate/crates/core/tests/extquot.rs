use std::collections::BTreeSet;

use g2_hecke::blocks::{canonical_descriptors, classify, Family};
use g2_hecke::extquot::*;
use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

/// Orbits of `Gamma` on `{(g, x) : g x = x}`. For abelian `Gamma` with
/// trivial cocycles this is the extended quotient.
fn burnside_count(m: &FiniteOrbitModel) -> usize {
    let fixed: Vec<(usize, usize)> = (0..m.gamma_order())
        .flat_map(|g| (0..m.len()).filter(move |&x| m.act(g, x) == x).map(move |x| (g, x)))
        .collect();
    let orbits: BTreeSet<(usize, usize)> = fixed
        .iter()
        .map(|&(g, x)| (0..m.gamma_order()).map(|h| (g, m.act(h, x))).min().unwrap())
        .collect();
    orbits.len()
}

fn three_point() -> FiniteOrbitModel {
    FiniteOrbitModel::cyclic(3, vec![vec![0, 1, 2], vec![0, 2, 1]]).unwrap()
}

fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

#[test]
fn spec_examples() {
    let m = three_point();
    assert_eq!(extended_quotient(&m).unwrap().len(), 3);
    assert_eq!(crossed_product_irr_count(&m), 3);

    let trivial = FiniteOrbitModel::cyclic(5, vec![(0..5).collect()]).unwrap();
    assert_eq!(extended_quotient(&trivial).unwrap().len(), 5);
    assert_eq!(crossed_product_irr_count(&trivial), 5);

    let free = FiniteOrbitModel::cyclic(2, vec![vec![0, 1], vec![1, 0]]).unwrap();
    let eq = extended_quotient(&free).unwrap();
    assert_eq!(eq, vec![ExtQuotPoint { representative: vec![0], irrep: 0 }]);
}

#[test]
fn exhaustive_sweep_against_oracles() {
    let models = sweep_models(8);
    assert_eq!(models.len(), 8 + [1, 2, 4, 10, 26, 76, 232, 764].iter().sum::<usize>());
    for m in &models {
        let n = extended_quotient(m).unwrap().len();
        assert_eq!(n, crossed_product_irr_count(m), "{:?}", m.gamma());
        assert_eq!(n, burnside_count(m));
        assert_eq!(n, closed_form_count(m));
    }
}

#[test]
fn representatives_are_least_in_orbit() {
    for m in sweep_models(6) {
        for p in extended_quotient(&m).unwrap() {
            let x = m.point_index(&p.representative).unwrap();
            let image = &m.points()[m.act(m.gamma_order() - 1, x)];
            assert!(p.representative <= *image);
        }
    }
}

proptest! {
    #[test]
    fn reordering_points_does_not_change_quotient(
        n in 1u32..=8,
        shift in 0i64..8,
        perm_seed in proptest::collection::vec(any::<u32>(), 8),
    ) {
        let m = FiniteOrbitModel::affine(&[n], Some((-1, &[shift]))).unwrap();
        let mut perm: Vec<usize> = (0..m.len()).collect();
        perm.sort_by_key(|&i| perm_seed[i]);
        let r = m.reindexed(&perm).unwrap();
        prop_assert_eq!(extended_quotient(&m).unwrap(), extended_quotient(&r).unwrap());
    }
}

#[test]
fn check_property_examples() {
    let m = FiniteOrbitModel::affine(&[6], Some((-1, &[0]))).unwrap();
    let id: Vec<usize> = (0..6).collect();
    assert!(check_property(&m, &m, &id).holds);

    let shifted = FiniteOrbitModel::affine(&[6], Some((-1, &[4]))).unwrap();
    let offset: Vec<usize> = (0..6).map(|x| m.translate(x, &[2])).collect();
    assert!(check_property(&m, &shifted, &offset).holds);

    let mut bad = offset.clone();
    bad.swap(0, 1);
    let v = check_property(&m, &shifted, &bad);
    assert!(!v.holds);
    assert_eq!(v.violation.unwrap().kind, ViolationKind::Translation);

    // offsets commute with translations but not with inversion
    let v = check_property(&m, &m, &offset);
    assert_eq!(v.violation.unwrap().kind, ViolationKind::Gamma);

    let not_bij = vec![0; 6];
    assert_eq!(check_property(&m, &m, &not_bij).violation.unwrap().kind, ViolationKind::NotBijective);
    let small = FiniteOrbitModel::affine(&[5], None).unwrap();
    assert_eq!(check_property(&m, &small, &id).violation.unwrap().kind, ViolationKind::ModuliMismatch);
}

#[test]
fn matching_bijection_examples() {
    let m = three_point();
    let b = matching_bijection(&m, &m, &[0, 1, 2]).unwrap();
    assert_eq!(b.len(), 3);
    assert!(b.pairs.iter().all(|(p, q)| p == q));

    let t = FiniteOrbitModel::cyclic(4, vec![(0..4).collect()]).unwrap();
    let map = vec![1, 2, 3, 0];
    let b = matching_bijection(&t, &t, &map).unwrap();
    for (p, q) in &b.pairs {
        assert_eq!(q.representative[0], (p.representative[0] + 1) % 4);
    }

    // stabilizer orders differ under the map: Gamma fixes 0 on one side, 1 on the other
    let other = FiniteOrbitModel::cyclic(3, vec![vec![0, 1, 2], vec![2, 1, 0]]).unwrap();
    assert!(matches!(matching_bijection(&m, &other, &[0, 1, 2]), Err(ExtQuotError::Property(_))));
}

fn check_inverse(group: &FiniteOrbitModel, galois: &FiniteOrbitModel, map: &[usize], b: &QuotientBijection) {
    let mut inv = vec![0; map.len()];
    for (x, &y) in map.iter().enumerate() {
        inv[y] = x;
    }
    let back = matching_bijection(galois, group, &inv).unwrap();
    for (p, q) in &b.pairs {
        assert_eq!(back.image(q), Some(p));
    }
    let src: BTreeSet<_> = extended_quotient(group).unwrap().into_iter().collect();
    let dst: BTreeSet<_> = extended_quotient(galois).unwrap().into_iter().collect();
    assert_eq!(b.pairs.iter().map(|(p, _)| p.clone()).collect::<BTreeSet<_>>(), src);
    assert_eq!(b.pairs.iter().map(|(_, q)| q.clone()).collect::<BTreeSet<_>>(), dst);
}

#[test]
fn corpus_matching_iff_property() {
    let corpus = paired_corpus(7, 2..=12);
    assert!(corpus.len() >= 50);
    let (mut accepted, mut rejected) = (0, 0);
    for p in &corpus {
        let verdict = check_property(&p.group, &p.galois, &p.map);
        match matching_bijection(&p.group, &p.galois, &p.map) {
            Ok(b) => {
                assert!(verdict.holds, "{}", p.label);
                check_inverse(&p.group, &p.galois, &p.map, &b);
                // translations commute with the bijection on representatives
                for (a, q) in &b.pairs {
                    let x = p.group.point_index(&a.representative).unwrap();
                    let y = p.galois.point_index(&q.representative).unwrap();
                    let orbit: Vec<usize> = (0..p.galois.gamma_order()).map(|g| p.galois.act(g, p.map[x])).collect();
                    assert!(orbit.contains(&y), "{}", p.label);
                }
                accepted += 1;
            }
            Err(e) => {
                assert!(!verdict.holds, "{}: {e}", p.label);
                assert!(matches!(e, ExtQuotError::Property(_)));
                rejected += 1;
            }
        }
    }
    assert!(accepted > 0 && rejected > 0);
}

#[test]
fn transfer_preserves_cardinality() {
    for p in paired_corpus(11, 2..=12) {
        match depth_zero_transfer(&p.group, &p.galois, &p.map) {
            Ok(t) => {
                assert_eq!(t.bijection.len(), extended_quotient(&p.galois).unwrap().len());
                assert_eq!(crossed_product_irr_count(&p.group), crossed_product_irr_count(&p.galois));
            }
            Err(_) => assert!(!check_property(&p.group, &p.galois, &p.map).holds, "{}", p.label),
        }
    }
}

#[test]
fn transfer_identity_and_cocycles() {
    let m = three_point().with_cocycle(0, vec![vec![rat(1), rat(1)], vec![rat(1), rat(1)]]).unwrap();
    let t = depth_zero_transfer(&m, &m, &[0, 1, 2]).unwrap();
    assert!(t.bijection.pairs.iter().all(|(p, q)| p == q));
    assert_eq!(t.cocycles.keys().copied().collect::<Vec<_>>(), vec![0]);

    // x -> -x is Gamma-equivariant but does not commute with translations
    assert!(depth_zero_transfer(&m, &m, &[0, 2, 1]).is_err());
    assert!(depth_zero_transfer(&m, &m, &[1, 0, 2]).is_err());
}

#[test]
fn cocycle_validation() {
    let m = three_point();
    // c(s, s) = 2 satisfies the identity and is a coboundary over C
    let ok = m.clone().with_cocycle(0, vec![vec![rat(1), rat(1)], vec![rat(1), rat(2)]]).unwrap();
    assert!(!ok.has_trivial_cocycles());
    let broken = vec![vec![rat(1), rat(2)], vec![rat(1), rat(1)]];
    assert!(matches!(m.clone().with_cocycle(0, broken), Err(ExtQuotError::Cocycle(_))));
    assert!(matches!(m.clone().with_cocycle(1, vec![vec![rat(1)]; 2]), Err(ExtQuotError::Cocycle(_))));
    let zero = vec![vec![rat(0), rat(1)], vec![rat(1), rat(1)]];
    assert!(m.clone().with_cocycle(0, zero).is_err());

    // distinct tables are refused by the matching
    let plain = m.clone().with_cocycle(0, vec![vec![rat(1), rat(1)], vec![rat(1), rat(1)]]).unwrap();
    assert!(matches!(matching_bijection(&plain, &ok, &[0, 1, 2]), Err(ExtQuotError::CocycleMismatch(_))));
}

#[test]
fn invalid_models() {
    assert!(FiniteOrbitModel::cyclic(3, vec![vec![0, 1, 1]]).is_err());
    assert!(FiniteOrbitModel::cyclic(3, vec![vec![1, 2, 0]]).is_err());
    assert!(FiniteOrbitModel::cyclic(3, vec![vec![0, 1, 2], vec![1, 2, 0]]).is_err());
    assert!(FiniteOrbitModel::cyclic(2, vec![]).is_err());
    assert!(FiniteOrbitModel::new(vec![2], vec![vec![0], vec![0]], vec![vec![0, 1]]).is_err());
    assert!(FiniteOrbitModel::new(vec![2], vec![vec![0], vec![2]], vec![vec![0, 1]]).is_err());
}

#[test]
fn json_round_trip() {
    let m = three_point().with_cocycle(0, vec![vec![rat(1), rat(1)], vec![rat(1), rat(2)]]).unwrap();
    let s = serde_json::to_string(&m).unwrap();
    let back: FiniteOrbitModel = serde_json::from_str(&s).unwrap();
    assert_eq!(back, m);
    let bad = r#"{"moduli":[2],"points":[[0],[1]],"gamma":[[0,1],[1,1]]}"#;
    assert!(serde_json::from_str::<FiniteOrbitModel>(bad).is_err());
}

#[test]
fn block_models_follow_classification() {
    let mut modeled = 0;
    for family in Family::ALL {
        for d in canonical_descriptors(family) {
            let c = classify(&d).unwrap();
            match block_models(&c, DEFAULT_TORSION) {
                Ok((g, g0)) => {
                    modeled += 1;
                    let expected = |w: g2_hecke::plancherel::WeylOrder, r: g2_hecke::blocks::RState| {
                        if w == g2_hecke::plancherel::WeylOrder::Trivial && r == g2_hecke::blocks::RState::Trivial {
                            1
                        } else {
                            2
                        }
                    };
                    assert_eq!(g.gamma_order(), expected(c.w_o, c.r_o));
                    assert_eq!(g0.gamma_order(), expected(c.w_o0, c.r_o0));
                    assert_eq!(g.len(), DEFAULT_TORSION as usize);
                }
                Err(e) => assert_eq!(e, ExtQuotError::UnknownRGroup),
            }
        }
    }
    assert!(modeled > 0);
    assert!(model_for_block(g2_hecke::plancherel::WeylOrder::Trivial, g2_hecke::blocks::RState::Trivial, 0).is_err());
}
