#![allow(dead_code)]

use skew_brace::catalog::{self, DigroupName, GroupName, SignChoice};
use skew_brace::enumerate::enumerate_digroups;
use skew_brace::semidirect::idempotent_endomorphisms;
use skew_brace::{Digroup, DigroupAction, Limits};

pub const STARS: [GroupName; 6] = [
    GroupName::Cyclic(2),
    GroupName::Cyclic(3),
    GroupName::Cyclic(4),
    GroupName::Klein4,
    GroupName::S3,
    GroupName::Cyclic(6),
];

/// Every digroup over each star group in `STARS`.
pub fn enumerated() -> Vec<Digroup> {
    let limits = Limits::default();
    STARS
        .iter()
        .flat_map(|g| enumerate_digroups(&catalog::group(g).unwrap(), false, &limits).unwrap())
        .collect()
}

/// The enumerated digroups plus the named examples.
pub fn corpus() -> Vec<Digroup> {
    let mut all = enumerated();
    for name in [
        "s3c6",
        "signed(4,3)",
        "signed(2,5)",
        "dihedral(4)",
        "quaternion8",
        "cyclic(12)",
    ] {
        all.push(catalog::digroup(&name.parse::<DigroupName>().unwrap()).unwrap());
    }
    all
}

pub fn braces() -> Vec<Digroup> {
    corpus()
        .into_iter()
        .filter(Digroup::is_skew_brace)
        .collect()
}

/// Actions extracted from every nontrivial decomposition of the corpus, the
/// eight sign actions of ℤ/2 on ℤ/3, and the natural actions of the corpus
/// digroups of order at most 3.
pub fn actions() -> Vec<DigroupAction> {
    let limits = Limits::default();
    let mut out = Vec::new();
    for d in corpus() {
        for dec in idempotent_endomorphisms(&d, &limits).unwrap() {
            if !dec.is_trivial() {
                out.push(dec.extract_action().unwrap());
            }
        }
        if d.order() <= 3 {
            out.push(DigroupAction::natural(&d).unwrap());
        }
    }
    for row in 1..=8 {
        out.push(SignChoice::from_row(row).unwrap().action(2, 3).unwrap());
    }
    out
}
