//! Tables bundled with the binary.

pub const CORPUS: [(&str, &str); 4] = [
    ("bool.sr", include_str!("../corpus/bool.sr")),
    ("c3.sr", include_str!("../corpus/c3.sr")),
    ("b_z2.sr", include_str!("../corpus/b_z2.sr")),
    ("chain4.sr", include_str!("../corpus/chain4.sr")),
];

pub fn bundled(name: &str) -> Option<&'static str> {
    CORPUS.iter().find(|(n, _)| *n == name).map(|(_, t)| *t)
}
