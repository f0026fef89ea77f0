//! Bundled example algebras.
//!
//! | name  | n | k | notes                                                    |
//! |-------|---|---|----------------------------------------------------------|
//! | e32   | 1 | 3 | right-cancellable left semi-loop, `theta = alpha`        |
//! | e33   | 2 | 2 | right-cancellable, not strict                            |
//! | e34   | 3 | 4 | right-cancellable, translation group is Klein four       |
//! | bool2 | 2 | 2 | Boolean algebra with lattice terms, not right-cancellable|
//! | gz3   | 1 | 3 | the group Z3                                             |
//! | lip6  | 1 | 6 | loop with left inverse property that is not a group      |
//! | triv1 | 1 | 1 | singleton                                                |

use crate::model::{parse_algebra, ProtomodularFrame};

pub const E32_TEXT: &str = include_str!("../fixtures/e32.pmalg");
pub const E33_TEXT: &str = include_str!("../fixtures/e33.pmalg");
pub const E34_TEXT: &str = include_str!("../fixtures/e34.pmalg");
pub const BOOL2_TEXT: &str = include_str!("../fixtures/bool2.pmalg");
pub const GZ3_TEXT: &str = include_str!("../fixtures/gz3.pmalg");
pub const LIP6_TEXT: &str = include_str!("../fixtures/lip6.pmalg");
pub const TRIV1_TEXT: &str = include_str!("../fixtures/triv1.pmalg");

pub const TEXTS: &[(&str, &str)] = &[
    ("e32", E32_TEXT),
    ("e33", E33_TEXT),
    ("e34", E34_TEXT),
    ("bool2", BOOL2_TEXT),
    ("gz3", GZ3_TEXT),
    ("lip6", LIP6_TEXT),
    ("triv1", TRIV1_TEXT),
];

fn load(text: &str) -> ProtomodularFrame {
    parse_algebra(text).expect("bundled fixture parses")
}

pub fn e32() -> ProtomodularFrame {
    load(E32_TEXT)
}

pub fn e33() -> ProtomodularFrame {
    load(E33_TEXT)
}

pub fn e34() -> ProtomodularFrame {
    load(E34_TEXT)
}

pub fn bool2() -> ProtomodularFrame {
    load(BOOL2_TEXT)
}

pub fn gz3() -> ProtomodularFrame {
    load(GZ3_TEXT)
}

pub fn lip6() -> ProtomodularFrame {
    load(LIP6_TEXT)
}

pub fn triv1() -> ProtomodularFrame {
    load(TRIV1_TEXT)
}

/// All bundled frames by name.
pub fn all() -> Vec<(&'static str, ProtomodularFrame)> {
    TEXTS
        .iter()
        .map(|(name, text)| (*name, load(text)))
        .collect()
}

/// Bundled frames that are right-cancellable.
pub fn right_cancellable() -> Vec<(&'static str, ProtomodularFrame)> {
    vec![
        ("e32", e32()),
        ("e33", e33()),
        ("e34", e34()),
        ("gz3", gz3()),
        ("triv1", triv1()),
    ]
}
