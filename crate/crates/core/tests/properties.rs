use std::collections::BTreeSet;
use std::sync::Arc;

use gtsuper::arith::interp::rational_interpolate;
use gtsuper::glmn::{verify_superalgebra, Module};
use gtsuper::gt::{covariant_weights, enumerate_patterns};
use gtsuper::spectra::zeta;
use gtsuper::yangian::{verify_defining_relations, YangianModule};
use gtsuper::{ri, rq, Poly, Rat, RatFunc, RatMatrix, SuperShape, Weight};
use proptest::prelude::*;

mod common;
use common::{supertableaux, SHAPES};

fn weight_strategy(max_size: i64) -> impl Strategy<Value = Weight> {
    (0..SHAPES.len()).prop_flat_map(move |s| {
        let (m, n) = SHAPES[s];
        let ws = covariant_weights(SuperShape::new(m, n).unwrap(), max_size);
        (0..ws.len()).prop_map(move |i| ws[i].clone())
    })
}

fn rat() -> impl Strategy<Value = Rat> {
    (-40i64..40, 1i64..12).prop_map(|(p, q)| rq(p, q))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn pattern_count_matches_tableaux(w in weight_strategy(5)) {
        let ps = enumerate_patterns(&w).unwrap();
        prop_assert_eq!(ps.len(), supertableaux(&w));
        let distinct: BTreeSet<Vec<i64>> = ps.iter().map(|p| p.order_key()).collect();
        prop_assert_eq!(distinct.len(), ps.len());
        for p in &ps {
            prop_assert!(p.is_valid());
            prop_assert_eq!(p.top(), &w.entries[..]);
        }
    }

    #[test]
    fn raising_and_lowering_stay_inside(w in weight_strategy(4)) {
        let ps = enumerate_patterns(&w).unwrap();
        let keys: BTreeSet<Vec<i64>> = ps.iter().map(|p| p.order_key()).collect();
        let nn = w.shape.size();
        for p in &ps {
            for k in 1..nn {
                for i in 1..=k {
                    for s in [1, -1] {
                        if let Some(q) = p.shift(k, i, s).unwrap() {
                            prop_assert!(keys.contains(&q.order_key()));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn superalgebra_relations_hold(w in weight_strategy(3)) {
        let md = Module::build(&w).unwrap();
        let rep = verify_superalgebra(&md);
        prop_assert!(rep.is_clean(), "{:?}", rep.violations);
    }

    #[test]
    fn zeta_is_covariant_under_shift(w in weight_strategy(3), h in rat(), x in rat()) {
        let nn = w.shape.size();
        for p in enumerate_patterns(&w).unwrap() {
            for k in 1..=nn {
                let a = zeta(&p, k, 0, &h);
                let b = zeta(&p, k, 0, &ri(0)).shift(&h);
                prop_assert_eq!(&a, &b);
                if let (Ok(u), Ok(v)) = (a.eval(&x), zeta(&p, k, 0, &ri(0)).eval(&(&x + &h))) {
                    prop_assert_eq!(u, v);
                }
            }
        }
    }

    #[test]
    fn shifted_evaluations_satisfy_relations(w in weight_strategy(2), h in rat()) {
        let ym = YangianModule::evaluation(Arc::new(Module::build(&w).unwrap()), h);
        let pts = [(rq(31, 7), rq(-23, 13)), (rq(5, 19), rq(41, 3))];
        prop_assert!(verify_defining_relations(&ym, &pts).is_clean());
    }

    #[test]
    fn rational_roots_recover_linear_factors(rs in prop::collection::vec(rat(), 0..6), c in rat()) {
        prop_assume!(c != ri(0));
        let f = Poly::from_roots(&rs).scale(&c);
        let irreducible = Poly::new(vec![ri(3), ri(0), ri(1)]);
        let (got, rest) = (&f * &irreducible).rational_roots();
        let mut want = rs.clone();
        want.sort();
        prop_assert_eq!(got, want);
        prop_assert_eq!(rest.monic(), irreducible);
    }

    #[test]
    fn interpolation_recovers_rational_functions(
        nr in prop::collection::vec(rat(), 0..4),
        dr in prop::collection::vec(rat(), 0..4),
        c in rat(),
    ) {
        prop_assume!(c != ri(0));
        let f = RatFunc::new(Poly::from_roots(&nr).scale(&c), Poly::from_roots(&dr)).unwrap();
        let (dn, dd) = f.degrees();
        let mut samples = vec![];
        let mut x = rq(1, 97);
        while samples.len() < dn + dd + 3 {
            if let Ok(v) = f.eval(&x) {
                samples.push((x.clone(), v));
            }
            x += rq(7, 5);
        }
        prop_assert_eq!(rational_interpolate(&samples, dn, dd).unwrap(), f);
    }

    #[test]
    fn field_axioms(a in rat(), b in rat(), c in rat(), x in rat()) {
        let f = RatFunc::linear(a.clone());
        let g = RatFunc::new(Poly::linear(b.clone()), Poly::linear(c.clone())).unwrap();
        let sum = &f + &g;
        let prod = &f * &g;
        prop_assert_eq!(&sum - &g, f.clone());
        if !g.is_zero() {
            prop_assert_eq!(&prod / &g, f.clone());
        }
        if let (Ok(fx), Ok(gx)) = (f.eval(&x), g.eval(&x)) {
            prop_assert_eq!(prod.eval(&x).unwrap(), &fx * &gx);
            prop_assert_eq!(sum.eval(&x).unwrap(), fx + gx);
        }
    }

    #[test]
    fn inverse_and_determinant(v in prop::collection::vec(rat(), 9)) {
        let a = RatMatrix::from_rows(v.chunks(3).map(|r| r.to_vec()).collect());
        match a.inverse() {
            Ok(inv) => {
                prop_assert_eq!(a.mul(&inv), RatMatrix::identity(3));
                prop_assert_eq!(a.det() * inv.det(), ri(1));
            }
            Err(_) => {
                prop_assert_eq!(a.det(), ri(0));
                prop_assert!(!a.nullspace().is_empty());
            }
        }
    }
}

#[test]
fn tableaux_oracle_examples() {
    let w = |m, n, s| Weight::parse(SuperShape::new(m, n).unwrap(), s).unwrap();
    assert_eq!(supertableaux(&w(1, 1, "1|0")), 2);
    assert_eq!(supertableaux(&w(1, 1, "3|2")), 2);
    assert_eq!(supertableaux(&w(2, 1, "1,1|0")), 4);
    assert_eq!(supertableaux(&w(2, 2, "0,0|0,0")), 1);
    assert_eq!(supertableaux(&w(2, 2, "1,0|0,0")), 4);
}
