//! JSON file formats for complexes and groups, and cycle notation.
//!
//! A complex file lists named vertices and either the maximal simplices or,
//! with `"flag": true`, the edges of a graph whose clique complex is meant:
//!
//! ```json
//! {"name": "T", "vertices": ["u", "v1", "w1", "v2", "w2"],
//!  "maximal_simplices": [["u", "v1", "w1"], ["u", "v2", "w2"]]}
//! {"name": "star", "vertices": ["1", "2", "3", "4", "5"],
//!  "graph_edges": [["1", "5"], ["2", "5"], ["3", "5"], ["4", "5"]], "flag": true}
//! ```
//!
//! A group file gives generators in cycle notation over vertex names, with
//! an optional expected prime and an optional explicit point list:
//!
//! ```json
//! {"name": "k1", "p": 2, "generators": ["(1 2)", "(3 4)"]}
//! ```

use serde::{Deserialize, Serialize};

use crate::error::{input, Error, Result};
use crate::permgrp::{FiniteGroup, Permutation};
use crate::simp::{validate_vertex_name, GroupAction, SimplicialComplex};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ComplexFile {
    #[serde(default)]
    pub name: String,
    pub vertices: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub maximal_simplices: Option<Vec<Vec<String>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub graph_edges: Option<Vec<(String, String)>>,
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub flag: bool,
}

impl ComplexFile {
    pub fn to_complex(&self) -> Result<SimplicialComplex> {
        match (&self.maximal_simplices, &self.graph_edges, self.flag) {
            (Some(f), None, false) => SimplicialComplex::from_maximal_simplices(&self.vertices, f),
            (None, Some(e), true) => SimplicialComplex::flag_complex_from_graph(&self.vertices, e),
            (Some(_), _, true) => input("a flag complex file must not list maximal simplices"),
            (None, Some(_), false) => input("graph_edges requires \"flag\": true"),
            (Some(_), Some(_), false) => input("give either maximal_simplices or graph_edges, not both"),
            (None, None, _) => input("a complex file needs maximal_simplices or graph_edges"),
        }
    }

    /// The facet form of `x`.
    pub fn from_complex(name: &str, x: &SimplicialComplex) -> Self {
        ComplexFile {
            name: name.to_string(),
            vertices: x.vertices().to_vec(),
            maximal_simplices: Some(x.facets()),
            graph_edges: None,
            flag: false,
        }
    }
}

/// Parses a complex file.
pub fn parse_complex_file(text: &str) -> Result<(String, SimplicialComplex)> {
    let file: ComplexFile = serde_json::from_str(text).map_err(|e| Error::Input(format!("complex file: {e}")))?;
    let x = file.to_complex()?;
    Ok((file.name, x))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroupFile {
    #[serde(default)]
    pub name: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub p: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub points: Option<Vec<String>>,
    pub generators: Vec<String>,
}

/// A parsed group file.
#[derive(Clone, Debug)]
pub struct GroupSpec {
    pub name: String,
    pub p: Option<u64>,
    pub group: FiniteGroup,
}

/// Splits cycle notation into cycles of point names. Names inside a cycle
/// are separated by whitespace or commas; `()` is the identity.
pub fn parse_cycle_names(text: &str) -> Result<Vec<Vec<String>>> {
    let mut cycles = Vec::new();
    let mut rest = text.trim();
    if rest.is_empty() {
        return input("empty permutation; write () for the identity");
    }
    while !rest.is_empty() {
        let Some(body) = rest.strip_prefix('(') else {
            return input(format!("expected '(' in {text:?}"));
        };
        let Some(close) = body.find(')') else {
            return input(format!("unclosed cycle in {text:?}"));
        };
        let inner = &body[..close];
        if inner.contains('(') {
            return input(format!("nested '(' in {text:?}"));
        }
        let names: Vec<String> = inner.split(|c: char| c.is_whitespace() || c == ',').filter(|s| !s.is_empty()).map(str::to_string).collect();
        for n in &names {
            validate_vertex_name(n)?;
        }
        if !names.is_empty() {
            cycles.push(names);
        }
        rest = body[close + 1..].trim_start();
    }
    Ok(cycles)
}

/// Parses a product of disjoint cycles over the named points.
pub fn parse_cycle_notation(text: &str, points: &[String]) -> Result<Permutation> {
    let cycles = parse_cycle_names(text)?;
    let index = |name: &str| {
        points
            .iter()
            .position(|p| p == name)
            .ok_or_else(|| Error::Input(format!("unknown point {name:?} in {text:?}")))
    };
    let mut seen = vec![false; points.len()];
    let mut idx_cycles = Vec::new();
    for c in &cycles {
        let mut ic = Vec::with_capacity(c.len());
        for n in c {
            let i = index(n)?;
            if std::mem::replace(&mut seen[i], true) {
                return input(format!("point {n:?} appears twice in {text:?}"));
            }
            ic.push(i);
        }
        idx_cycles.push(ic);
    }
    Permutation::from_cycles(points.len(), &idx_cycles)
}

/// Orders names so that numerals sort numerically and before other names.
fn natural_key(name: &str) -> (u8, u128, String) {
    match name.parse::<u128>() {
        Ok(n) if !name.starts_with('+') => (0, n, name.to_string()),
        _ => (1, 0, name.to_string()),
    }
}

/// Parses a group file. Points come from `points` (normally the companion
/// complex's vertices), else the file's own `points`, else every name used
/// by the generators.
pub fn parse_group_file(text: &str, points: Option<&[String]>) -> Result<GroupSpec> {
    let file: GroupFile = serde_json::from_str(text).map_err(|e| Error::Input(format!("group file: {e}")))?;
    let points: Vec<String> = match (points, &file.points) {
        (Some(p), _) => p.to_vec(),
        (None, Some(p)) => {
            for n in p {
                validate_vertex_name(n)?;
            }
            p.clone()
        }
        (None, None) => {
            let mut names: Vec<String> = Vec::new();
            for g in &file.generators {
                for c in parse_cycle_names(g)? {
                    names.extend(c);
                }
            }
            names.sort_by_key(|n| natural_key(n));
            names.dedup();
            names
        }
    };
    let gens = file.generators.iter().map(|g| parse_cycle_notation(g, &points)).collect::<Result<Vec<_>>>()?;
    let group = FiniteGroup::from_generators(points, gens)?;
    if let Some(p) = file.p {
        if !crate::exactlin::is_prime(p) {
            return input(format!("declared p = {p} is not prime"));
        }
        if group.order() > 1 && !group.is_p_group(&group.whole(), p) {
            return input(format!("declared p = {p} but the group has order {}", group.order()));
        }
    }
    Ok(GroupSpec { name: file.name, p: file.p, group })
}

/// The action of a group file's generators on a complex's vertices.
pub fn parse_action(complex: SimplicialComplex, group_text: &str) -> Result<(GroupSpec, GroupAction)> {
    let spec = parse_group_file(group_text, Some(complex.vertices()))?;
    let action = GroupAction::by_permuting_vertices(complex, spec.group.clone())?;
    Ok((spec, action))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::simp::tests::{star, t_complex};
    use proptest::prelude::*;

    fn pts(n: usize) -> Vec<String> {
        (1..=n).map(|i| i.to_string()).collect()
    }

    #[test]
    fn cycles() {
        let p = parse_cycle_notation("(1 2)(3 4)", &pts(5)).unwrap();
        assert_eq!(p.to_cycle_string(&pts(5)), "(1 2)(3 4)");
        let q = parse_cycle_notation(" (1,2, 3) ", &pts(3)).unwrap();
        assert_eq!(q.to_cycle_string(&pts(3)), "(1 2 3)");
        assert!(parse_cycle_notation("()", &pts(2)).unwrap().is_identity());
        for bad in ["", "(1 2", "1 2", "(1 (2))", "(1 6)", "(1 2)(2 3)", "(1 2) x"] {
            assert!(parse_cycle_notation(bad, &pts(5)).is_err(), "{bad}");
        }
    }

    #[test]
    fn complex_files() {
        let (name, t) = parse_complex_file(
            r#"{"name": "T", "vertices": ["u","v1","w1","v2","w2"], "maximal_simplices": [["u","v1","w1"],["u","v2","w2"]]}"#,
        )
        .unwrap();
        assert_eq!(name, "T");
        assert_eq!(t, t_complex());
        let (_, s) = parse_complex_file(
            r#"{"name": "star", "vertices": ["1","2","3","4","5"], "graph_edges": [["1","5"],["2","5"],["3","5"],["4","5"]], "flag": true}"#,
        )
        .unwrap();
        assert_eq!(s, star());
        for bad in [
            r#"{"vertices": ["a"], "maximal_simplices": [["a"]], "flag": true}"#,
            r#"{"vertices": ["a", "b"], "graph_edges": [["a","b"]]}"#,
            r#"{"vertices": ["a"]}"#,
            r#"{"vertices": ["a"], "maximal_simplices": [["b"]]}"#,
            r#"{"vertices": ["a b"], "maximal_simplices": []}"#,
            r#"{"vertices": ["a"], "maximal_simplices": [], "extra": 1}"#,
            r#"not json"#,
        ] {
            assert!(matches!(parse_complex_file(bad), Err(Error::Input(_))), "{bad}");
        }
    }

    #[test]
    fn complex_file_roundtrip_form() {
        let f = ComplexFile::from_complex("T", &t_complex());
        let text = serde_json::to_string(&f).unwrap();
        assert_eq!(parse_complex_file(&text).unwrap().1, t_complex());
    }

    #[test]
    fn group_files() {
        let g = parse_group_file(r#"{"name": "d8", "p": 2, "generators": ["(1 2 3 4)", "(1 3)"]}"#, None).unwrap();
        assert_eq!(g.group.order(), 8);
        assert_eq!(g.group.points(), &pts(4));
        let wide = parse_group_file(r#"{"generators": ["(1 10)", "(2 9)"]}"#, None).unwrap();
        assert_eq!(wide.group.points(), &["1", "2", "9", "10"]);
        assert!(parse_group_file(r#"{"p": 3, "generators": ["(1 2)"]}"#, None).is_err());
        assert!(parse_group_file(r#"{"p": 4, "generators": ["(1 2)"]}"#, None).is_err());
        let trivial = parse_group_file(r#"{"generators": []}"#, Some(&pts(3))).unwrap();
        assert_eq!(trivial.group.order(), 1);
        let (_, a) = parse_action(star(), r#"{"generators": ["(1,2)", "(3,4)"]}"#).unwrap();
        assert!(a.is_admissible());
        assert!(parse_action(star(), r#"{"generators": ["(1 6)"]}"#).is_err());
    }

    proptest! {
        #[test]
        fn cycle_strings_reparse(images in Just((0..6usize).collect::<Vec<_>>()).prop_shuffle()) {
            let p = Permutation::from_images(images).unwrap();
            let s = p.to_cycle_string(&pts(6));
            prop_assert_eq!(parse_cycle_notation(&s, &pts(6)).unwrap(), p);
        }

        #[test]
        fn parsers_never_panic(s in ".{0,64}") {
            let _ = parse_cycle_notation(&s, &pts(4));
            let _ = parse_complex_file(&s);
            let _ = parse_group_file(&s, None);
        }
    }
}
