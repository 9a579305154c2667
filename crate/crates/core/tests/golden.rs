//! Rendered diamonds against stored text. Set `UPDATE_GOLDEN=1` to rewrite.

use std::path::PathBuf;

use orbitcompat::hodge::{fixture, fixture_names, lefschetz_restrict, render_diamond, resolve_diamond, HodgeDiamond};

fn golden_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden")
}

fn check(name: &str, actual: &str) {
    let path = golden_dir().join(name);
    if std::env::var_os("UPDATE_GOLDEN").is_some() {
        std::fs::write(&path, actual).unwrap();
        return;
    }
    let expected = std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
    assert_eq!(actual, expected, "{name} differs from its golden file");
}

#[test]
fn fixtures_render_byte_identically() {
    for name in fixture_names() {
        let d = fixture(name).unwrap();
        check(&format!("diamond_{name}.txt"), &render_diamond(&d));
        let json = d.to_json().to_string() + "\n";
        check(&format!("diamond_{name}.json"), &json);
    }
}

#[test]
fn derived_diamonds_render_byte_identically() {
    check("diamond_pnpn2.txt", &render_diamond(&resolve_diamond("pnpn2").unwrap()));
    let r = lefschetz_restrict(&resolve_diamond("pnpn2").unwrap()).unwrap();
    check("diamond_lefschetz_pnpn2.txt", &render_diamond(&r));
}

#[test]
fn fixture_json_round_trips() {
    for name in fixture_names() {
        let d = fixture(name).unwrap();
        let back = HodgeDiamond::from_json(&d.to_json()).unwrap();
        assert_eq!(back.rows(), d.rows(), "{name}");
        assert_eq!(back.middle_row_cells(), d.middle_row_cells(), "{name}");
    }
}

#[test]
fn documented_render_examples() {
    assert_eq!(render_diamond(&fixture("sl2rfibre").unwrap()), " 1\n0 0\n 1\n");
    let text = render_diamond(&fixture("110r-I").unwrap());
    assert_eq!(text.lines().count(), 11);
    assert!(text.contains("16") && text.contains('?'));
    assert_eq!(render_diamond(&HodgeDiamond::zeros(0)).trim(), "0");
}
