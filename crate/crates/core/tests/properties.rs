use proptest::prelude::*;
use proptest::sample::select;

use thetadisk::itree::{enumerate_objects, vee, wedge, Flavor, ITreeObj};
use thetadisk::labeled::{
    enumerate_cropped, figure_example, validate_cropped, xi, xi_inverse, CroppedTree, LabeledTree,
};
use thetadisk::omega::{enumerate_cells, m_source, m_target, Cell};
use thetadisk::globular::enumerate_cardinals_brute;
use thetadisk::ordinal::{vee_map, wedge_map, IntervalMap, OrdMap, Ordinal};
use thetadisk::verify::Bounds;

fn ord(n: i64) -> Ordinal {
    Ordinal::new(n).unwrap()
}

fn monotone(m: i64, n: i64) -> impl Strategy<Value = OrdMap> {
    let len = (m + 1) as usize;
    proptest::collection::vec(0..(n as usize + 1), len).prop_map(move |mut v| {
        v.sort();
        OrdMap::new(ord(m), ord(n), v).unwrap()
    })
}

fn ord_map() -> impl Strategy<Value = OrdMap> {
    (-1i64..6, 0i64..6).prop_flat_map(|(m, n)| monotone(m, n))
}

fn interval_map() -> impl Strategy<Value = IntervalMap> {
    (1i64..6, 1i64..6).prop_flat_map(|(m, n)| {
        proptest::collection::vec(0..(n as usize + 1), (m - 1) as usize).prop_map(move |mut inner| {
            inner.sort();
            let mut images = vec![0];
            images.extend(inner);
            images.push(n as usize);
            IntervalMap::from_images(m, n, images).unwrap()
        })
    })
}

fn composable_ord() -> impl Strategy<Value = (OrdMap, OrdMap)> {
    (-1i64..5, 0i64..5, 0i64..5).prop_flat_map(|(m, n, k)| (monotone(m, n), monotone(n, k)))
}

fn itree(flavor: Flavor) -> impl Strategy<Value = ITreeObj> {
    select(enumerate_objects(flavor, 3, 3))
}

fn cropped() -> impl Strategy<Value = CroppedTree> {
    select(enumerate_cropped(Flavor::Interval, 3, 3))
}

fn cell() -> impl Strategy<Value = Cell> {
    let mut all = Vec::new();
    for x in enumerate_cardinals_brute(5) {
        for n in 0..=3 {
            all.extend(enumerate_cells(&x, n));
        }
    }
    select(all)
}

proptest! {
    #[test]
    fn wedge_inverts_vee_on_maps(f in interval_map()) {
        prop_assert_eq!(wedge_map(&vee_map(&f)), f);
    }

    #[test]
    fn vee_inverts_wedge_on_maps(g in ord_map()) {
        prop_assert_eq!(vee_map(&wedge_map(&g)), g);
    }

    #[test]
    fn wedge_is_contravariant((f, g) in composable_ord()) {
        let gf = g.compose(&f).unwrap();
        prop_assert_eq!(wedge_map(&gf), wedge_map(&f).compose(&wedge_map(&g)).unwrap());
    }

    #[test]
    fn tree_duality_round_trips(h in itree(Flavor::Interval), k in itree(Flavor::Ordinal)) {
        prop_assert_eq!(wedge(&vee(&h).unwrap()).unwrap(), h);
        prop_assert_eq!(vee(&wedge(&k).unwrap()).unwrap(), k);
    }

    #[test]
    fn itree_json_round_trips(h in itree(Flavor::Ordinal)) {
        let text = serde_json::to_string(&h).unwrap();
        prop_assert_eq!(serde_json::from_str::<ITreeObj>(&text).unwrap(), h);
    }

    #[test]
    fn xi_is_invertible_on_cropped_trees(t in cropped()) {
        prop_assert_eq!(xi_inverse(&xi(&t)), t.clone());
        prop_assert!(validate_cropped(t.underlying()).is_empty());
    }

    #[test]
    fn boundaries_are_globular(c in cell()) {
        for m in 0..c.dim() {
            for k in 0..m {
                let s = m_source(&c, k).unwrap();
                prop_assert_eq!(m_source(&m_source(&c, m).unwrap(), k).unwrap(), s.clone());
                prop_assert_eq!(m_source(&m_target(&c, m).unwrap(), k).unwrap(), s);
            }
        }
    }

    #[test]
    fn cell_json_round_trips(c in cell()) {
        let text = serde_json::to_string(&c).unwrap();
        prop_assert_eq!(serde_json::from_str::<Cell>(&text).unwrap(), c);
    }

    #[test]
    fn any_label_mutation_of_the_figure_is_rejected(level in 0usize..5, pick in 0usize..10, label in 0i64..5) {
        let t = figure_example();
        let mut labels = t.labels().to_vec();
        let x = pick % labels[level].len();
        prop_assume!(labels[level][x] != ord(label));
        labels[level][x] = ord(label);
        if let Ok(m) = LabeledTree::new(Flavor::Interval, t.tree().clone(), labels) {
            prop_assert!(!validate_cropped(&m).is_empty());
        }
    }

    #[test]
    fn bounds_round_trip(h in 0usize..9, d in 0usize..9, v in 0usize..9) {
        let b: Bounds = format!("height={h},degree={d},max_vertices={v}").parse().unwrap();
        prop_assert_eq!((b.max_height, b.max_degree, b.max_vertices), (h, d, v));
        let json = serde_json::to_string(&b).unwrap();
        prop_assert_eq!(serde_json::from_str::<Bounds>(&json).unwrap(), b);
    }
}
