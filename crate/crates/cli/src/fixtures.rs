//! Named example inputs shipped with the binary.

pub struct Fixture {
    pub name: &'static str,
    pub file: &'static str,
    pub summary: &'static str,
    pub contents: &'static str,
}

const FIXTURES: &[Fixture] = &[
    Fixture {
        name: "no_splitting",
        file: "no_splitting.json",
        summary: "osp(5|2) weight passing the necessary conditions with no linear splitting",
        contents: include_str!("../fixtures/no_splitting.json"),
    },
    Fixture {
        name: "lcirc_n1m1",
        file: "lcirc_n1m1.json",
        summary: "linear weight (-1, 1/2, 0) for m = n = 1",
        contents: include_str!("../fixtures/lcirc_n1m1.json"),
    },
    Fixture {
        name: "sharp_d",
        file: "sharp_d.json",
        summary: "highest weight of the sharp module with d = 2, n = 1, m = 2",
        contents: include_str!("../fixtures/sharp_d.json"),
    },
    Fixture {
        name: "flat_d",
        file: "flat_d.json",
        summary: "highest weight of the flat module with d = 2 at parity 001, n = 2, m = 1",
        contents: include_str!("../fixtures/flat_d.json"),
    },
    Fixture {
        name: "hook_31",
        file: "hook_31.json",
        summary: "hook partition (3, 1) for m = 1, n = 2",
        contents: include_str!("../fixtures/hook_31.json"),
    },
];

pub fn bundled_examples() -> &'static [Fixture] {
    FIXTURES
}

pub fn find(name: &str) -> Option<&'static Fixture> {
    let stem = name.strip_suffix(".json").unwrap_or(name);
    FIXTURES.iter().find(|f| f.name == stem)
}
