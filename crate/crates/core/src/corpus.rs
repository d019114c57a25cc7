//! The bundled corpus of PD files and the oracle's expectations for them.

use crate::diagram::LinkDiagram;

macro_rules! corpus {
    ($($name:literal),* $(,)?) => {
        /// `(name, PD text)` for every bundled diagram, sorted by name.
        pub const ENTRIES: &[(&str, &str)] = &[
            $(($name, include_str!(concat!("../../../corpus/", $name, ".pd"))),)*
        ];
    };
}

corpus!(
    "curl_positive",
    "figure_eight",
    "five_two",
    "hopf_positive",
    "merge_pair_sum",
    "six_one",
    "six_three",
    "six_two",
    "torus_2_2",
    "torus_2_3",
    "torus_2_4",
    "torus_2_5",
    "torus_2_6",
    "trap_granny",
    "trefoil_left",
    "trefoil_right",
    "unknot",
    "unlink_2",
    "unlink_3",
    "unlink_4",
    "unlink_5",
    "walk_cycle",
);

/// Oracle output for the corpus, as JSON keyed by entry name.
pub const EXPECTATIONS: &str = include_str!("../../../corpus/expectations.json");

pub fn names() -> impl Iterator<Item = &'static str> {
    ENTRIES.iter().map(|&(n, _)| n)
}

pub fn text(name: &str) -> Option<&'static str> {
    ENTRIES.iter().find(|&&(n, _)| n == name).map(|&(_, t)| t)
}

/// A bundled diagram by name. The corpus is checked by tests, so parsing
/// cannot fail for a listed name.
pub fn diagram(name: &str) -> Option<LinkDiagram> {
    text(name).map(|t| LinkDiagram::parse(t).expect("corpus entries parse"))
}

/// Every bundled diagram, in name order.
pub fn diagrams() -> Vec<(&'static str, LinkDiagram)> {
    names().map(|n| (n, diagram(n).expect("listed"))).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_entries_parse_and_are_sorted() {
        let names: Vec<_> = names().collect();
        let mut sorted = names.clone();
        sorted.sort_unstable();
        assert_eq!(names, sorted);
        for (n, t) in ENTRIES {
            assert!(LinkDiagram::parse(t).is_ok(), "{n}");
            assert!(EXPECTATIONS.contains(&format!("\"{n}\"")), "{n}");
        }
        assert!(diagram("nope").is_none());
    }

    #[test]
    fn every_file_is_listed() {
        let dir = std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("../../corpus");
        let on_disk = std::fs::read_dir(dir)
            .unwrap()
            .filter(|e| e.as_ref().unwrap().path().extension().is_some_and(|x| x == "pd"))
            .count();
        assert_eq!(on_disk, ENTRIES.len());
    }
}
