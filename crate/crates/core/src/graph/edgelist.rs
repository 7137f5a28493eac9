use std::collections::HashMap;
use std::fmt::Write as _;

use super::{Graph, GraphBuilder, NodeId};
use crate::error::{Error, Position, Result};

/// Parses a whitespace-separated `u v` edge list. Lines starting with `#`
/// and blank lines are skipped; tokens after the first two are treated as a
/// weight and ignored. Nodes are numbered by first appearance.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut ids: Vec<i64> = Vec::new();
    let mut index: HashMap<i64, NodeId> = HashMap::new();
    let mut pairs = Vec::new();
    let mut ignored_weights = 0;

    for (line_no, line) in text.lines().enumerate() {
        let trimmed = line.trim_start();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let mut ends = [0usize; 2];
        let mut tokens = tokens_with_columns(line);
        for slot in ends.iter_mut() {
            let Some((column, token)) = tokens.next() else {
                return Err(Error::Syntax {
                    pos: Position {
                        line: line_no + 1,
                        column: line.len() + 1,
                    },
                    message: "expected two node ids".into(),
                });
            };
            let id: i64 = token.parse().map_err(|_| Error::Syntax {
                pos: Position {
                    line: line_no + 1,
                    column,
                },
                message: format!("`{token}` is not an integer node id"),
            })?;
            *slot = *index.entry(id).or_insert_with(|| {
                ids.push(id);
                ids.len() - 1
            });
        }
        if tokens.next().is_some() {
            ignored_weights += 1;
        }
        pairs.push((
            ends[0],
            ends[1],
            Position {
                line: line_no + 1,
                column: 1,
            },
        ));
    }

    let mut builder = GraphBuilder::new(ids);
    builder.warnings.ignored_weights = ignored_weights;
    for (u, v, pos) in pairs {
        builder.add_edge(u, v, pos)?;
    }
    builder.finish()
}

fn tokens_with_columns(line: &str) -> impl Iterator<Item = (usize, &str)> {
    line.split_whitespace().map(move |tok| {
        let offset = tok.as_ptr() as usize - line.as_ptr() as usize;
        (line[..offset].chars().count() + 1, tok)
    })
}

/// Serializes the edges using each node's original identifier.
pub fn write_edge_list(graph: &Graph) -> String {
    let mut out = String::new();
    for &(u, v) in graph.edges() {
        let _ = writeln!(out, "{} {}", graph.original_id(u), graph.original_id(v));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_path() {
        let g = parse_edge_list("0 1\n1 2\n").unwrap();
        assert_eq!((g.node_count(), g.edge_count()), (3, 2));
    }

    #[test]
    fn duplicates_collapse() {
        let g = parse_edge_list("0 1\n0 1\n").unwrap();
        assert_eq!((g.node_count(), g.edge_count()), (2, 1));
        assert_eq!(g.warnings().duplicate_edges, 1);
    }

    #[test]
    fn self_loop_is_error() {
        let err = parse_edge_list("0 0\n").unwrap_err();
        assert!(matches!(err, Error::SelfLoop { id: 0, pos } if pos.line == 1));
    }

    #[test]
    fn non_integer_token() {
        let err = parse_edge_list("# header\n1 2\n3 x\n").unwrap_err();
        assert_eq!(
            err,
            Error::Syntax {
                pos: Position { line: 3, column: 3 },
                message: "`x` is not an integer node id".into()
            }
        );
    }

    #[test]
    fn missing_second_endpoint() {
        assert!(matches!(parse_edge_list("1\n"), Err(Error::Syntax { .. })));
    }

    #[test]
    fn comments_and_weights() {
        let g = parse_edge_list("# c\n\n  # indented\n5 9 0.5\n9 7\n").unwrap();
        assert_eq!(g.original_ids(), &[5, 9, 7]);
        assert_eq!(g.warnings().ignored_weights, 1);
    }

    #[test]
    fn empty_input_has_no_nodes() {
        assert_eq!(parse_edge_list("# nothing\n"), Err(Error::NoNodes));
    }

    #[test]
    fn writer_uses_original_ids() {
        let g = parse_edge_list("10 20\n20 30\n").unwrap();
        assert_eq!(write_edge_list(&g), "10 20\n20 30\n");
    }
}
