// Licensed under the Apache License, Version 2.0 (the "License"); you may
// not use this file except in compliance with the License. You may obtain
// a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
// WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied. See the
// License for the specific language governing permissions and limitations
// under the License.

//! GraphViz rendering of dot-diagrams as bipartite box/dot graphs.

use std::fmt::Write as _;

use hypercat_core::DotDiagram;

fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

/// A `digraph` with one node per box, one per dot, and one stub per
/// boundary port. Edges follow the direction of the wires.
pub fn export_dot(d: &DotDiagram) -> String {
    let mut out = String::from("digraph diagram {\n  rankdir=LR;\n");
    for (k, a) in d.dots().iter().enumerate() {
        let _ = writeln!(
            out,
            "  d{k} [shape=circle, width=0.25, label=\"{}\"];",
            escape(a)
        );
    }
    for (i, b) in d.boxes().iter().enumerate() {
        let _ = writeln!(out, "  b{i} [shape=box, label=\"{}\"];", escape(&b.label));
    }
    for k in 0..d.inputs().len() {
        let _ = writeln!(out, "  in{k} [shape=plaintext, label=\"in {k}\"];");
    }
    for k in 0..d.outputs().len() {
        let _ = writeln!(out, "  out{k} [shape=plaintext, label=\"out {k}\"];");
    }
    for (k, &x) in d.inputs().iter().enumerate() {
        let _ = writeln!(out, "  in{k} -> d{x};");
    }
    for (i, b) in d.boxes().iter().enumerate() {
        for (p, &x) in b.inputs.iter().enumerate() {
            let _ = writeln!(out, "  d{x} -> b{i} [headlabel=\"{p}\"];");
        }
        for (p, &x) in b.outputs.iter().enumerate() {
            let _ = writeln!(out, "  b{i} -> d{x} [taillabel=\"{p}\"];");
        }
    }
    for (k, &x) in d.outputs().iter().enumerate() {
        let _ = writeln!(out, "  d{x} -> out{k};");
    }
    out.push_str("}\n");
    out
}
