//! Edge-list documents and DOT export.
//!
//! An edge list is a header line `n <order>` followed by one `u v` line per
//! arc with 0-based ids. Blank lines and lines starting with `#` are
//! ignored on input. Output lists arcs in ascending lexicographic order and
//! ends every line with `\n`, so identical digraphs render identically.

use std::fmt::Write;

use crate::digraph::Digraph;
use crate::error::{Error, Result};

pub fn render_edge_list(d: &Digraph) -> String {
    let mut out = format!("n {}\n", d.order());
    for (u, v) in d.arcs() {
        writeln!(out, "{u} {v}").expect("writing to a String");
    }
    out
}

fn parse_error(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

fn parse_index(token: &str, line: usize) -> Result<usize> {
    token
        .parse()
        .map_err(|_| parse_error(line, format!("expected a vertex id, found `{token}`")))
}

pub fn parse_edge_list(text: &str) -> Result<Digraph> {
    let mut digraph: Option<Digraph> = None;
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.trim();
        if content.is_empty() || content.starts_with('#') {
            continue;
        }
        let tokens: Vec<&str> = content.split_whitespace().collect();
        match digraph.as_mut() {
            None => {
                let [tag, order] = tokens[..] else {
                    return Err(parse_error(line, "expected header `n <order>`"));
                };
                if tag != "n" {
                    return Err(parse_error(line, "expected header `n <order>`"));
                }
                let n = order
                    .parse()
                    .map_err(|_| parse_error(line, format!("invalid order `{order}`")))?;
                digraph = Some(Digraph::empty(n).map_err(|e| parse_error(line, e.to_string()))?);
            }
            Some(d) => {
                let [a, b] = tokens[..] else {
                    return Err(parse_error(line, "expected an arc `u v`"));
                };
                let (u, v) = (parse_index(a, line)?, parse_index(b, line)?);
                d.add_arc(u, v).map_err(|e| parse_error(line, e.to_string()))?;
            }
        }
    }
    digraph.ok_or_else(|| parse_error(text.lines().count().max(1), "missing header `n <order>`"))
}

fn dot_escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

/// Graphviz rendering; vertices are labelled with their display names.
pub fn render_dot(d: &Digraph, name: &str) -> String {
    let mut out = format!("digraph \"{}\" {{\n", dot_escape(name));
    for v in 0..d.order() {
        writeln!(out, "  {v} [label=\"{}\"];", dot_escape(&d.label(v))).expect("String write");
    }
    for (u, v) in d.arcs() {
        writeln!(out, "  {u} -> {v};").expect("String write");
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn render_triangle() {
        let t = Digraph::new(3, [(2, 0), (0, 1), (1, 2)]).unwrap();
        assert_eq!(render_edge_list(&t), "n 3\n0 1\n1 2\n2 0\n");
    }

    #[test]
    fn parse_with_comments() {
        let text = "# a triangle\n\nn 3\n0 1\n  1 2\n# closing arc\n2 0\n0 1\n";
        let d = parse_edge_list(text).unwrap();
        assert_eq!(d, Digraph::directed_cycle(3).unwrap());
    }

    #[test]
    fn parse_errors_cite_lines() {
        let cases = [
            ("n 3\n0 1\n1 x\n", 3),
            ("n 3\n0 0\n", 2),
            ("n 3\n0 5\n", 2),
            ("# only a comment\n", 1),
            ("m 3\n", 1),
            ("n 3\n0 1 2\n", 2),
            ("n 0\n", 1),
        ];
        for (text, expected) in cases {
            match parse_edge_list(text) {
                Err(Error::Parse { line, .. }) => assert_eq!(line, expected, "{text:?}"),
                other => panic!("{text:?} gave {other:?}"),
            }
        }
    }

    #[test]
    fn dot_uses_labels() {
        let d = Digraph::new(2, [(0, 1)])
            .unwrap()
            .with_labels(vec!["x0".into(), "y\"1".into()]);
        assert_eq!(
            render_dot(&d, "g"),
            "digraph \"g\" {\n  0 [label=\"x0\"];\n  1 [label=\"y\\\"1\"];\n  0 -> 1;\n}\n"
        );
    }
}
