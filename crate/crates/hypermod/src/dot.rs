//! Graphviz export of a decomposition tree.

use std::fmt::Write as _;

use crate::report::NodeReport;

fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

pub fn decomposition(tree: &NodeReport) -> String {
    let mut out = String::from("digraph decomposition {\n  node [shape=box, fontname=\"monospace\"];\n");
    let mut next = 0usize;
    fn visit(n: &NodeReport, id: usize, next: &mut usize, out: &mut String) {
        let names: Vec<String> = n.vertices.iter().map(|v| escape(v)).collect();
        let mut label = format!("{}\\n{{{}}}", n.kind, names.join(","));
        if let (Some(s), Some(d)) = (&n.strength, &n.arboricity) {
            let _ = write!(label, "\\nS={s} D={d}");
        }
        if let Some(l) = n.levels.first() {
            if n.levels.len() == 1 {
                let _ = write!(label, "\\nη={}", l.exact.clone().unwrap_or_else(|| l.value.to_string()));
            }
        }
        let style = match n.kind {
            "split" => "",
            "unresolved" => ", color=red",
            _ => ", style=rounded",
        };
        let _ = writeln!(out, "  n{id} [label=\"{label}\"{style}];");
        for c in &n.children {
            *next += 1;
            let child = *next;
            visit(c, child, next, out);
            let _ = writeln!(out, "  n{id} -> n{child} [label=\"{}\"];", c.provenance);
        }
    }
    visit(tree, 0, &mut next, &mut out);
    out.push_str("}\n");
    out
}
