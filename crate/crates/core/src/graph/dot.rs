use std::fmt::Write;

use super::UndirectedGraph;

fn quote(name: &str) -> String {
    format!("\"{}\"", name.replace('\\', "\\\\").replace('"', "\\\""))
}

/// Graphviz rendering; vertices and edges appear in graph order.
pub fn emit_dot(g: &UndirectedGraph, title: &str) -> String {
    let mut out = String::new();
    writeln!(out, "graph {} {{", quote(title)).unwrap();
    for name in g.names() {
        writeln!(out, "    {};", quote(name)).unwrap();
    }
    for &(u, v) in g.edges() {
        writeln!(out, "    {} -- {};", quote(g.name(u)), quote(g.name(v))).unwrap();
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deterministic_output() {
        let g = UndirectedGraph::path(3);
        assert_eq!(
            emit_dot(&g, "gamma"),
            "graph \"gamma\" {\n    \"1\";\n    \"2\";\n    \"3\";\n    \"1\" -- \"2\";\n    \"2\" -- \"3\";\n}\n"
        );
    }
}
