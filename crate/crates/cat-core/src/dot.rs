use std::fmt::Write;

use crate::category::Category;

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

/// Graphviz rendering: one node per vertex, one labelled edge per arrow.
/// Identity loops are left out unless `include_identities` is set.
pub fn to_dot(c: &Category, include_identities: bool) -> String {
    let mut out = String::from("digraph C {\n");
    for v in c.vertices() {
        let _ = writeln!(out, "  {};", quote(c.vertex_name(v)));
    }
    for a in c.arrow_ids() {
        if c.is_identity(a) && !include_identities {
            continue;
        }
        let _ = writeln!(
            out,
            "  {} -> {} [label={}];",
            quote(c.vertex_name(c.src(a))),
            quote(c.vertex_name(c.dst(a))),
            quote(c.arrow_name(a))
        );
    }
    out.push_str("}\n");
    out
}
