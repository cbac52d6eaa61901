use std::collections::BTreeSet;
use std::fmt::Write as _;

use thiserror::Error;

/// Paint on a vertex.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Color {
    #[default]
    Uncolored,
    Blue,
    Red,
}

impl Color {
    pub fn opposite(self) -> Color {
        match self {
            Color::Blue => Color::Red,
            Color::Red => Color::Blue,
            Color::Uncolored => Color::Uncolored,
        }
    }

    /// Blue is true, Red is false.
    pub fn as_bool(self) -> Option<bool> {
        match self {
            Color::Uncolored => None,
            Color::Blue => Some(true),
            Color::Red => Some(false),
        }
    }

    pub fn from_bool(value: bool) -> Color {
        if value {
            Color::Blue
        } else {
            Color::Red
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("self-loop on vertex {0}")]
    SelfLoop(usize),
    #[error("vertex {vertex} out of range for {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
}

/// Simple undirected graph with optional vertex paint.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    // (i, j) with i < j
    edges: BTreeSet<(usize, usize)>,
    colors: Vec<Color>,
    adjacency: Vec<Vec<usize>>,
}

impl Graph {
    pub fn new(n: usize) -> Graph {
        Graph {
            n,
            edges: BTreeSet::new(),
            colors: vec![Color::Uncolored; n],
            adjacency: vec![Vec::new(); n],
        }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph, GraphError> {
        let mut g = Graph::new(n);
        for &(i, j) in edges {
            g.add_edge(i, j)?;
        }
        Ok(g)
    }

    fn check_vertex(&self, v: usize) -> Result<(), GraphError> {
        if v >= self.n {
            Err(GraphError::VertexOutOfRange {
                vertex: v,
                n: self.n,
            })
        } else {
            Ok(())
        }
    }

    /// Adds an undirected edge; repeated edges are ignored.
    pub fn add_edge(&mut self, i: usize, j: usize) -> Result<(), GraphError> {
        self.check_vertex(i)?;
        self.check_vertex(j)?;
        if i == j {
            return Err(GraphError::SelfLoop(i));
        }
        let e = (i.min(j), i.max(j));
        if self.edges.insert(e) {
            self.adjacency[i].push(j);
            self.adjacency[j].push(i);
            self.adjacency[i].sort_unstable();
            self.adjacency[j].sort_unstable();
        }
        Ok(())
    }

    pub fn paint(&mut self, v: usize, color: Color) -> Result<(), GraphError> {
        self.check_vertex(v)?;
        self.colors[v] = color;
        Ok(())
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges as `(i, j)` with `i < j`, ascending.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn colors(&self) -> &[Color] {
        &self.colors
    }

    pub fn is_uncolored(&self) -> bool {
        self.colors.iter().all(|&c| c == Color::Uncolored)
    }

    /// First edge joining a Blue vertex to a Red one, if any.
    pub fn opposite_colored_edge(&self) -> Option<(usize, usize)> {
        self.edges().find(|&(i, j)| {
            let (a, b) = (self.colors[i], self.colors[j]);
            a != Color::Uncolored && b == a.opposite()
        })
    }

    /// Every uncolored graph on `n` vertices, one per edge subset, in
    /// subset-mask order.
    pub fn all_on(n: usize) -> impl Iterator<Item = Graph> {
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .collect();
        let count = 1u64 << pairs.len();
        (0..count).map(move |mask| {
            let mut g = Graph::new(n);
            for (bit, &(i, j)) in pairs.iter().enumerate() {
                if mask >> bit & 1 == 1 {
                    g.add_edge(i, j).expect("pair in range");
                }
            }
            g
        })
    }

    /// Parses `graph <n>`, `e <i> <j>` and `paint <i> <blue|red>` lines.
    /// Blank lines and lines starting with `#` are skipped.
    pub fn parse(text: &str) -> Result<Graph, GraphError> {
        let syntax = |line: usize, message: String| GraphError::Syntax { line, message };
        let mut graph: Option<Graph> = None;
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let words: Vec<&str> = raw.split_whitespace().collect();
            if words.is_empty() || words[0].starts_with('#') {
                continue;
            }
            let num = |w: &str| {
                w.parse::<usize>()
                    .map_err(|_| syntax(line, format!("bad number `{w}`")))
            };
            match (words.as_slice(), graph.as_mut()) {
                (["graph", n], None) => graph = Some(Graph::new(num(n)?)),
                (["graph", ..], _) => {
                    return Err(syntax(line, "bad or repeated `graph` line".into()))
                }
                (_, None) => return Err(syntax(line, "expected `graph <n>` first".into())),
                (["e", i, j], Some(g)) => g.add_edge(num(i)?, num(j)?)?,
                (["paint", v, c], Some(g)) => {
                    let color = match *c {
                        "blue" => Color::Blue,
                        "red" => Color::Red,
                        _ => return Err(syntax(line, format!("unknown color `{c}`"))),
                    };
                    g.paint(num(v)?, color)?;
                }
                _ => return Err(syntax(line, format!("unrecognized line `{}`", raw.trim()))),
            }
        }
        graph.ok_or_else(|| syntax(1, "missing `graph <n>` line".into()))
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("graph {}\n", self.n);
        for (i, j) in self.edges() {
            let _ = writeln!(out, "e {i} {j}");
        }
        for (v, c) in self.colors.iter().enumerate() {
            match c {
                Color::Blue => {
                    let _ = writeln!(out, "paint {v} blue");
                }
                Color::Red => {
                    let _ = writeln!(out, "paint {v} red");
                }
                Color::Uncolored => {}
            }
        }
        out
    }
}
