use std::fs;
use std::path::PathBuf;

use poncelet_core::algebra::{rational, QuadExt, Rational};
use poncelet_core::projective::{ConicParam, ProjLine, ProjPoint};
use poncelet_workbench::scalar::parse_scalar;
use poncelet_workbench::scene::{ChainTrace, SceneDocument, TraceMode};
use proptest::prelude::*;

fn corpus(target: &str) -> Vec<(PathBuf, Vec<u8>)> {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fuzz/corpus").join(target);
    let mut files: Vec<_> = fs::read_dir(&dir)
        .unwrap_or_else(|e| panic!("{}: {e}", dir.display()))
        .map(|e| e.unwrap().path())
        .collect();
    files.sort();
    files.into_iter().map(|p| (p.clone(), fs::read(&p).unwrap())).collect()
}

#[test]
fn scene_corpus_replays() {
    let seeds = corpus("parse_scene");
    assert!(seeds.len() >= 5);
    let mut parsed = 0;
    for (path, bytes) in seeds {
        let text = String::from_utf8(bytes).unwrap();
        if let Ok(scene) = SceneDocument::parse(&text) {
            assert_eq!(SceneDocument::parse(&scene.serialize()).unwrap(), scene, "{}", path.display());
            parsed += 1;
        }
    }
    assert!(parsed >= 3);
}

#[test]
fn scalar_corpus_replays() {
    let seeds = corpus("parse_scalar");
    assert!(seeds.len() >= 5);
    for (_, bytes) in seeds {
        let _ = parse_scalar(&String::from_utf8(bytes).unwrap());
    }
}

fn small() -> impl Strategy<Value = Rational> {
    (-50i64..=50, 1i64..=9).prop_map(|(n, d)| rational(n, d))
}

fn triple() -> impl Strategy<Value = [Rational; 3]> {
    [small(), small(), small()].prop_filter("nonzero", |c| c.iter().any(|x| *x != rational(0, 1)))
}

fn param() -> impl Strategy<Value = ConicParam<Rational>> {
    prop_oneof![9 => small().prop_map(ConicParam::Finite), 1 => Just(ConicParam::Infinity)]
}

fn scene() -> impl Strategy<Value = SceneDocument> {
    let lines = prop::collection::vec(triple(), 0..6);
    let points = prop::collection::vec(triple(), 0..3);
    let chain = (any::<bool>(), any::<bool>(), prop::collection::vec(triple(), 0..5), prop::collection::vec(param(), 0..5));
    (lines, points, prop::option::of(chain)).prop_map(|(lines, points, chain)| SceneDocument {
        lines: lines.iter().enumerate().map(|(i, c)| (format!("L{i}"), ProjLine::from_rationals(c).unwrap())).collect(),
        points: points.iter().enumerate().map(|(i, c)| (format!("P_{i}"), ProjPoint::from_rationals(c).unwrap())).collect(),
        chains: chain
            .into_iter()
            .map(|(primal, closed, vs, ts)| ChainTrace {
                name: "chain-1".into(),
                mode: if primal { TraceMode::Primal } else { TraceMode::Dual },
                closed,
                vertices: vs.iter().map(|c| ProjPoint::from_rationals(c).unwrap()).collect(),
                tangencies: ts,
            })
            .collect(),
    })
}

proptest! {
    #[test]
    fn scenes_round_trip(s in scene()) {
        prop_assert_eq!(SceneDocument::parse(&s.serialize()).unwrap(), s);
    }

    #[test]
    fn scene_parser_never_panics(text in "(poncelet-scene 1\n)?(conic canonical\n)?([a-z]{0,8}( [-0-9/a-z]{0,6}){0,5}\n){0,6}") {
        let _ = SceneDocument::parse(&text);
    }

    #[test]
    fn scene_parser_accepts_arbitrary_unicode(text in "\\PC{0,200}") {
        let _ = SceneDocument::parse(&text);
    }

    #[test]
    fn scalars_parse_to_their_value(a in small(), c in small(), k in prop::sample::select(vec![2i64, 3, 5, -1, -7])) {
        let text = if c < rational(0, 1) { format!("{a}-{}*sqrt({k})", -c.clone()) } else { format!("{a}+{c}*sqrt({k})") };
        let expected = QuadExt::rational(a) + QuadExt::rational(c) * QuadExt::sqrt_of(k);
        prop_assert_eq!(parse_scalar(&text).unwrap(), expected);
    }

    #[test]
    fn scalar_parser_never_panics(text in "\\PC{0,40}") {
        let _ = parse_scalar(&text);
    }
}
