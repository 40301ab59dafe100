//! Reading graphs and cycles from files or standard input.

use std::fs::File;
use std::io::{BufReader, Cursor, Read};
use toughham::graph::{parse_edge_list, Graph};
use toughham::hamilton::OrientedCycle;
use toughham::harness::{read_graph6, GraphStream};
use toughham::{Error, Result};

fn read_text(path: &str) -> Result<String> {
    let mut text = String::new();
    if path == "-" {
        std::io::stdin().read_to_string(&mut text)?;
    } else {
        File::open(path)
            .and_then(|mut f| f.read_to_string(&mut text))
            .map_err(|e| Error::Io(format!("{path}: {e}")))?;
    }
    Ok(text)
}

/// Edge lists start with a line of decimal numbers; graph6 never contains digits.
fn looks_like_edge_list(text: &str) -> bool {
    text.lines()
        .map(str::trim)
        .find(|l| !l.is_empty() && !l.starts_with('#'))
        .is_some_and(|l| l.chars().all(|c| c.is_ascii_digit() || c.is_whitespace()))
}

/// All graphs in a file: one edge list, or one graph6 code per line.
pub fn read_graphs(path: &str) -> Result<Vec<Graph>> {
    let text = read_text(path)?;
    if looks_like_edge_list(&text) {
        return Ok(vec![parse_edge_list(&text)?]);
    }
    let graphs = read_graph6(Cursor::new(text)).collect::<Result<Vec<_>>>()?;
    if graphs.is_empty() {
        return Err(Error::MalformedGraph6(format!("{path}: no graph found")));
    }
    Ok(graphs)
}

/// A lazily parsed graph6 corpus file.
pub fn corpus_stream(path: &str) -> Result<GraphStream> {
    if path == "-" {
        return Ok(read_graph6(BufReader::new(std::io::stdin())));
    }
    let f = File::open(path).map_err(|e| Error::Io(format!("{path}: {e}")))?;
    Ok(read_graph6(BufReader::new(f)))
}

/// A cycle file: vertex labels in cyclic order, separated by whitespace or commas.
pub fn read_cycle(path: &str, g: &Graph) -> Result<OrientedCycle> {
    let text = read_text(path)?;
    let order = text
        .split(|c: char| c.is_whitespace() || c == ',')
        .filter(|t| !t.is_empty())
        .map(|t| t.parse::<usize>().map_err(|_| Error::InvalidCycle(format!("bad vertex label {t:?}"))))
        .collect::<Result<Vec<_>>>()?;
    OrientedCycle::in_graph(g, order)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn format_detection() {
        assert!(looks_like_edge_list("# c\n3 2\n0 1\n1 2\n"));
        assert!(!looks_like_edge_list("Bw\n"));
        assert!(!looks_like_edge_list(">>graph6<<Bw\n"));
    }
}
