//! Keeps `presentations/*.alg` in sync with the bundled catalog.  The
//! files are the reviewable form of every generator table, rewrite rule,
//! and Hopf structure map; run `REGEN=1 cargo test -p qpb --test
//! presentations` to rewrite them after a deliberate change.

use std::fs;
use std::path::PathBuf;

use qpb::ncalg::catalog;
use qpb::ncalg::presentation::parse_presentation;

fn snapshots() -> Vec<(&'static str, String)> {
    let hopf = |id: &str| {
        let (p, spec) = catalog::bundled_hopf(id).unwrap();
        p.to_text(Some(&spec))
    };
    let plain = |p: qpb::ncalg::presentation::Presentation| p.to_text(None);
    vec![
        ("s1", plain(catalog::sphere(1))),
        ("s2", plain(catalog::sphere(2))),
        ("s3", plain(catalog::sphere(3))),
        ("s4", plain(catalog::sphere(4))),
        ("s5", plain(catalog::sphere(5))),
        ("su2", hopf("su2")),
        ("u1", hopf("u1")),
        ("z2", hopf("z2")),
        ("zp3", hopf("zp:3")),
        ("rp2", plain(catalog::rp2())),
        ("a2n1", plain(catalog::prolong(1))),
        ("a2n2", plain(catalog::prolong(2))),
    ]
}

fn dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("presentations")
}

#[test]
fn snapshots_match_the_bundled_catalog() {
    let regen = std::env::var_os("REGEN").is_some();
    if regen {
        fs::create_dir_all(dir()).unwrap();
    }
    let mut stale = Vec::new();
    for (name, text) in snapshots() {
        let path = dir().join(format!("{name}.alg"));
        if regen {
            fs::write(&path, &text).unwrap();
            continue;
        }
        match fs::read_to_string(&path) {
            Ok(on_disk) if on_disk == text => {}
            _ => stale.push(name),
        }
    }
    assert!(
        stale.is_empty(),
        "stale or missing snapshots: {stale:?}; run REGEN=1 cargo test -p qpb --test presentations"
    );
}

#[test]
fn snapshots_parse_back() {
    for (name, text) in snapshots() {
        let (p, spec) = parse_presentation(&text)
            .unwrap_or_else(|e| panic!("{name} does not parse back: {e}"));
        assert_eq!(p.to_text(spec.as_ref()), text, "round trip differs for {name}");
    }
}
