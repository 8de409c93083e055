use gtsuper::arith::interp::sample_point;
use gtsuper::gt::{admissible_mus, covariant_weights};
use gtsuper::spectra::{chi, gt_spectrum, zeta};
use gtsuper::yangian::{berezinian_product_at, YangianModule};
use gtsuper::{rq, RatFunc, SuperShape, Weight};

fn desk_skew() -> Vec<(Weight, Vec<i64>)> {
    let mut out = vec![];
    for (m, n) in [(1, 1), (2, 1), (1, 2), (2, 2)] {
        for r in 0..=2 {
            let sh = SuperShape::new(m + r, n).unwrap();
            for w in covariant_weights(sh, 3) {
                for mu in admissible_mus(&w, r) {
                    out.push((w.clone(), mu));
                }
            }
        }
    }
    out
}

#[test]
fn skew_spectra_match_closed_forms() {
    let h = rq(1, 3);
    for (w, mu) in desk_skew() {
        let ym = YangianModule::skew(&w, &mu, h.clone()).unwrap();
        let rep = gt_spectrum(&ym).unwrap();
        assert!(rep.is_tame(), "{w} / {mu:?}");
        let nn = ym.n();
        let mut got: Vec<Vec<RatFunc>> = rep.eigen.iter().map(|e| e.d.clone()).collect();
        let mut want: Vec<Vec<RatFunc>> =
            ym.labels.iter().map(|l| (1..=nn).map(|k| zeta(&l[0], k, mu.len(), &h)).collect()).collect();
        let key = |v: &Vec<RatFunc>| v.iter().map(|f| f.to_string()).collect::<Vec<_>>();
        got.sort_by_key(key);
        want.sort_by_key(key);
        assert_eq!(got, want, "{w} / {mu:?}");
        let u = sample_point(3, &rq(2, 11));
        for k in 1..=nn {
            let b = berezinian_product_at(&ym, &u, k).unwrap();
            for (a, l) in ym.labels.iter().enumerate() {
                let c = chi(&l[0], &mu, k, &h).eval(&u).unwrap();
                let mut e = vec![gtsuper::Rat::from_integer(0.into()); ym.dim()];
                e[a] = gtsuper::ri(1);
                let be = b.mul_vec(&e);
                assert!(be.iter().zip(&e).all(|(x, y)| *x == &c * y), "chi {w} / {mu:?} k={k}");
            }
        }
    }
}
