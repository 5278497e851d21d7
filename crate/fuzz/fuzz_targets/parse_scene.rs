#![no_main]

use libfuzzer_sys::fuzz_target;
use poncelet_workbench::scene::SceneDocument;
use poncelet_workbench::svg::{render, Chart};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(scene) = SceneDocument::parse(text) {
        let again = SceneDocument::parse(&scene.serialize()).expect("serialized scene parses");
        assert_eq!(again, scene);
        let _ = render(&scene, Chart::X0, 16);
    }
});
