//! Text serializations of a graph: Graphviz DOT, CSV edge lists, JSON adjacency.

use std::io::Write;

use serde::Serialize;

use super::UzGraph;
use crate::error::{Error, Result};
use crate::ring::FiniteRing;

/// How vertices are named in DOT output.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum VertexLabels {
    #[default]
    Index,
    /// Ring-specific names: residues, tuples or polynomials.
    Residues,
}

pub fn write_dot<W: Write>(
    out: &mut W,
    graph: &UzGraph,
    ring: Option<&FiniteRing>,
    labels: VertexLabels,
) -> Result<()> {
    writeln!(out, "graph G {{")?;
    writeln!(out, "  // {}", graph.ring_label())?;
    for v in 0..graph.vertex_count() {
        match (labels, ring) {
            (VertexLabels::Residues, Some(r)) => {
                writeln!(out, "  {v} [label=\"{}\"];", escape(&r.element_label(v)))?
            }
            _ => writeln!(out, "  {v};")?,
        }
    }
    for (u, v) in graph.edges() {
        writeln!(out, "  {u} -- {v};")?;
    }
    writeln!(out, "}}")?;
    Ok(())
}

/// `u,v` header followed by one row per edge with `u < v`.
pub fn write_csv<W: Write>(out: W, graph: &UzGraph) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["u", "v"]).map_err(csv_error)?;
    for (u, v) in graph.edges() {
        w.serialize((u, v)).map_err(csv_error)?;
    }
    w.flush()?;
    Ok(())
}

#[derive(Serialize)]
struct JsonGraph<'a> {
    ring: &'a str,
    vertices: usize,
    edge_count: usize,
    adjacency: Vec<Vec<usize>>,
}

pub fn write_json<W: Write>(out: &mut W, graph: &UzGraph) -> Result<()> {
    let doc = JsonGraph {
        ring: graph.ring_label(),
        vertices: graph.vertex_count(),
        edge_count: graph.edge_count(),
        adjacency: (0..graph.vertex_count())
            .map(|v| graph.neighbors(v).collect())
            .collect(),
    };
    serde_json::to_writer_pretty(&mut *out, &doc).map_err(|e| Error::Io(e.to_string()))?;
    writeln!(out)?;
    Ok(())
}

/// Reads back the `u,v` edge list written by [`write_csv`].
pub fn read_csv_edges<R: std::io::Read>(input: R) -> Result<Vec<(usize, usize)>> {
    let mut r = csv::Reader::from_reader(input);
    r.deserialize().map(|row| row.map_err(csv_error)).collect()
}

fn csv_error(e: csv::Error) -> Error {
    Error::Io(e.to_string())
}

fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}
