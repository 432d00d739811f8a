//! Order diagrams as Graphviz `graph` text.
//!
//! Edge styles:
//! * `solid`: a cover pair of `≼` with `x ≤ y`;
//! * `dashed`: a cover pair of `≤` with `x`, `y` unrelated under `≼`;
//! * `dotted`: a cover pair of `≼` with `x ≤ y` false. These only appear
//!   when `x ≼ y ⟹ x ≤ y` fails.

use std::fmt;

use crate::biposet::FiniteBiPoset;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum EdgeStyle {
    Solid,
    Dashed,
    Dotted,
}

impl fmt::Display for EdgeStyle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            EdgeStyle::Solid => "solid",
            EdgeStyle::Dashed => "dashed",
            EdgeStyle::Dotted => "dotted",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DiagramEdge {
    pub from: usize,
    pub to: usize,
    pub style: EdgeStyle,
}

/// Diagram edges sorted by `(from, to, style)`.
pub fn diagram_edges(b: &FiniteBiPoset) -> Vec<DiagramEdge> {
    let mut edges = Vec::new();
    for (x, y) in b.sleq().covers() {
        let style = if b.leq().get(x, y) {
            EdgeStyle::Solid
        } else {
            EdgeStyle::Dotted
        };
        edges.push(DiagramEdge { from: x, to: y, style });
    }
    for (x, y) in b.leq().covers() {
        if !b.sleq().get(x, y) && !b.sleq().get(y, x) {
            edges.push(DiagramEdge {
                from: x,
                to: y,
                style: EdgeStyle::Dashed,
            });
        }
    }
    edges.sort();
    edges
}

fn quote(label: &str) -> String {
    format!("\"{}\"", label.replace('\\', "\\\\").replace('"', "\\\""))
}

pub fn emit_dot(b: &FiniteBiPoset) -> String {
    let mut out = String::from("graph mixed_lattice {\n");
    for l in b.labels() {
        out.push_str(&format!("  {};\n", quote(l)));
    }
    for e in diagram_edges(b) {
        out.push_str(&format!(
            "  {} -- {} [style={}];\n",
            quote(b.label(e.from)),
            quote(b.label(e.to)),
            e.style
        ));
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gen::divisor_mixed_lattice;
    use crate::order::Relation;

    fn labelled(b: &FiniteBiPoset, style: EdgeStyle) -> Vec<(String, String)> {
        diagram_edges(b)
            .into_iter()
            .filter(|e| e.style == style)
            .map(|e| (b.label(e.from).to_string(), b.label(e.to).to_string()))
            .collect()
    }

    fn pairs(list: &[(&str, &str)]) -> Vec<(String, String)> {
        list.iter().map(|(a, b)| (a.to_string(), b.to_string())).collect()
    }

    #[test]
    fn divisors_of_twelve_edges() {
        let b = divisor_mixed_lattice(12).unwrap();
        assert_eq!(
            labelled(&b, EdgeStyle::Solid),
            pairs(&[
                ("1", "2"),
                ("1", "3"),
                ("2", "4"),
                ("2", "6"),
                ("3", "6"),
                ("4", "12"),
                ("6", "12")
            ])
        );
        assert_eq!(
            labelled(&b, EdgeStyle::Dashed),
            pairs(&[("2", "3"), ("3", "4"), ("4", "6")])
        );
        assert!(labelled(&b, EdgeStyle::Dotted).is_empty());
        assert_eq!(emit_dot(&b), emit_dot(&b));
    }

    #[test]
    fn one_node() {
        let b = divisor_mixed_lattice(1).unwrap();
        assert_eq!(emit_dot(&b), "graph mixed_lattice {\n  \"1\";\n}\n");
    }

    #[test]
    fn dotted_when_not_pre_regular() {
        // ≤ is 1 < 0, ≼ is 0 ≺ 1
        let leq = Relation::reflexive_transitive_closure(&[(1, 0)], 2).unwrap();
        let sleq = Relation::reflexive_transitive_closure(&[(0, 1)], 2).unwrap();
        let b = FiniteBiPoset::with_index_labels(leq, sleq).unwrap();
        let edges = diagram_edges(&b);
        assert_eq!(
            edges,
            vec![DiagramEdge {
                from: 0,
                to: 1,
                style: EdgeStyle::Dotted
            }]
        );
    }

    #[test]
    fn labels_are_quoted() {
        assert_eq!(quote("a\"b"), "\"a\\\"b\"");
    }
}
