//! Bundled theory files.

pub const PRESETS: &[(&str, &str)] = &[
    (
        "consociative1",
        include_str!("../../presets/consociative1.thy"),
    ),
    (
        "consociative2",
        include_str!("../../presets/consociative2.thy"),
    ),
    (
        "consociative3",
        include_str!("../../presets/consociative3.thy"),
    ),
    (
        "consociative4",
        include_str!("../../presets/consociative4.thy"),
    ),
    ("group_term1", include_str!("../../presets/group_term1.thy")),
    ("group_term2", include_str!("../../presets/group_term2.thy")),
    ("malcev1", include_str!("../../presets/malcev1.thy")),
    ("malcev2", include_str!("../../presets/malcev2.thy")),
    ("malcev3", include_str!("../../presets/malcev3.thy")),
    ("malcev4", include_str!("../../presets/malcev4.thy")),
    (
        "malcev_associative1",
        include_str!("../../presets/malcev_associative1.thy"),
    ),
    (
        "malcev_associative2",
        include_str!("../../presets/malcev_associative2.thy"),
    ),
    (
        "malcev_associative3",
        include_str!("../../presets/malcev_associative3.thy"),
    ),
    (
        "malcev_associative4",
        include_str!("../../presets/malcev_associative4.thy"),
    ),
    (
        "one_associative1",
        include_str!("../../presets/one_associative1.thy"),
    ),
    (
        "one_associative2",
        include_str!("../../presets/one_associative2.thy"),
    ),
    (
        "one_associative3",
        include_str!("../../presets/one_associative3.thy"),
    ),
    (
        "one_associative4",
        include_str!("../../presets/one_associative4.thy"),
    ),
    (
        "right_cancellable1",
        include_str!("../../presets/right_cancellable1.thy"),
    ),
    (
        "right_cancellable2",
        include_str!("../../presets/right_cancellable2.thy"),
    ),
    (
        "right_cancellable3",
        include_str!("../../presets/right_cancellable3.thy"),
    ),
    (
        "right_cancellable4",
        include_str!("../../presets/right_cancellable4.thy"),
    ),
    ("strict1", include_str!("../../presets/strict1.thy")),
    ("strict2", include_str!("../../presets/strict2.thy")),
    ("strict3", include_str!("../../presets/strict3.thy")),
    ("strict4", include_str!("../../presets/strict4.thy")),
    ("v1", include_str!("../../presets/v1.thy")),
    ("v2", include_str!("../../presets/v2.thy")),
    ("v3", include_str!("../../presets/v3.thy")),
    ("v4", include_str!("../../presets/v4.thy")),
];

pub fn preset(name: &str) -> Option<&'static str> {
    PRESETS
        .iter()
        .find(|(n, _)| *n == name)
        .map(|(_, text)| *text)
}

/// Names of the presets, in bundle order.
pub fn names() -> impl Iterator<Item = &'static str> {
    PRESETS.iter().map(|(n, _)| *n)
}
