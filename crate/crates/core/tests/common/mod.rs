#![allow(dead_code)]

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rhogeom::verify::random_polygon;
use rhogeom::{Piece, Space};

pub fn lp_space() -> impl Strategy<Value = Space> {
    (prop::sample::select(vec![1.0, 1.5, 2.0, 3.0, 4.0, f64::INFINITY]), 2usize..=5)
        .prop_map(|(p, n)| Space::lp(p, n).unwrap())
}

pub fn polygon_space() -> impl Strategy<Value = Space> {
    any::<u64>().prop_map(|seed| {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        Space::Polygon(random_polygon(&mut rng))
    })
}

pub fn regular_space() -> impl Strategy<Value = Space> {
    (2usize..=12).prop_map(|n| Space::regular(n).unwrap())
}

pub fn piece() -> impl Strategy<Value = Piece> {
    prop_oneof![Just(Piece::L1), Just(Piece::LInf), Just(Piece::Lp(2.0)), Just(Piece::Lp(3.0))]
}

pub fn mixed_space() -> impl Strategy<Value = Space> {
    (piece(), piece()).prop_map(|(a, b)| Space::mixed(a, b).unwrap())
}

pub fn planar_space() -> impl Strategy<Value = Space> {
    prop_oneof![
        (prop::sample::select(vec![1.0, 1.5, 2.0, 3.0, f64::INFINITY]))
            .prop_map(|p| Space::lp(p, 2).unwrap()),
        polygon_space(),
        regular_space(),
        mixed_space(),
    ]
}

pub fn any_space() -> impl Strategy<Value = Space> {
    prop_oneof![lp_space(), polygon_space(), regular_space(), mixed_space()]
}

pub fn coords(n: usize) -> impl Strategy<Value = Vec<f64>> {
    prop::collection::vec(-10.0..10.0f64, n)
}

pub fn nonzero(n: usize) -> impl Strategy<Value = Vec<f64>> {
    coords(n).prop_filter("nonzero", |v| v.iter().map(|c| c.abs()).sum::<f64>() > 1e-3)
}

/// A space with two vectors of matching dimension, the first nonzero.
pub fn space_pair() -> impl Strategy<Value = (Space, Vec<f64>, Vec<f64>)> {
    any_space().prop_flat_map(|s| {
        let n = s.dim();
        (Just(s), nonzero(n), coords(n))
    })
}

pub fn planar_pair() -> impl Strategy<Value = (Space, Vec<f64>, Vec<f64>)> {
    planar_space().prop_flat_map(|s| (Just(s), nonzero(2), coords(2)))
}

pub fn rel_close(a: f64, b: f64, rel: f64) -> bool {
    (a - b).abs() <= rel * (1.0 + a.abs().max(b.abs()))
}
