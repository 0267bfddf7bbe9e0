use std::io::Read;
use std::path::Path;

use tdc_core::{edge_list, graph6, Error, Graph, Result};

/// Reads the raw text behind an input argument: an existing file path, `-`/absent for
/// stdin, or otherwise the argument itself.
fn read_source(arg: Option<&str>) -> Result<String> {
    match arg {
        None | Some("-") => {
            let mut text = String::new();
            std::io::stdin()
                .read_to_string(&mut text)
                .map_err(|e| Error::Parse(format!("reading stdin: {e}")))?;
            Ok(text)
        }
        Some(s) if Path::new(s).is_file() => {
            std::fs::read_to_string(s).map_err(|e| Error::Parse(format!("reading {s}: {e}")))
        }
        Some(s) => Ok(s.to_owned()),
    }
}

/// Graphs from graph6 lines (blank lines and `#` comments skipped), or a single edge list.
pub fn read_graphs(arg: Option<&str>, edges: bool) -> Result<Vec<Graph>> {
    let text = read_source(arg)?;
    if edges {
        return Ok(vec![edge_list::parse(&text)?]);
    }
    let graphs: Vec<Graph> = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(graph6::decode)
        .collect::<Result<_>>()?;
    if graphs.is_empty() {
        return Err(Error::Parse("no graph in input".into()));
    }
    Ok(graphs)
}
