mod common;

use common::{gf, golden, system};

#[test]
fn every_family_matches_its_closed_form() {
    for (name, _, _) in common::GOLDEN {
        let f = gf(&system(name));
        assert!(f.equals(&golden(name)), "{name}: {f}");
    }
}

#[test]
fn path_gf_is_exactly_the_closed_form() {
    let f = gf(&system("path"));
    let g = golden("path");
    assert_eq!(f.numerator(), g.numerator());
    assert_eq!(f.denominator(), g.denominator());
}

#[test]
fn path_and_star_differ() {
    assert!(!gf(&system("path")).equals(&gf(&system("star"))));
}

#[test]
fn transfer_matrices_match_displays() {
    assert_eq!(system("path").t, common::path_display());
    assert_eq!(system("star").t, common::star_display());
}
