use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{label_index, Graph};
use crate::resonance::Character;

/// Nesting limit for graph expressions.
const MAX_DEPTH: usize = 64;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GraphFormat {
    /// Header line of labels, then one edge (two labels) per line.
    Edgelist,
    /// JSON object with `vertices` and `edges`.
    Structured,
    /// Family names combined with `join`, `union`, `complement`.
    Dsl,
}

impl FromStr for GraphFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "edgelist" => Ok(GraphFormat::Edgelist),
            "structured" | "json" => Ok(GraphFormat::Structured),
            "dsl" | "family" => Ok(GraphFormat::Dsl),
            _ => Err(Error::MalformedSpec(format!("unknown graph format `{s}`"))),
        }
    }
}

pub fn parse_graph(input: &str, format: GraphFormat) -> Result<Graph> {
    match format {
        GraphFormat::Edgelist => parse_edgelist(input),
        GraphFormat::Structured => parse_structured(input),
        GraphFormat::Dsl => parse_dsl(input),
    }
}

/// Edge-list text. `#` starts a comment and blank lines are ignored. The
/// first remaining line lists the vertex labels; every later line holds
/// exactly two labels. No lines at all means the graph with no vertices.
pub fn parse_edgelist(input: &str) -> Result<Graph> {
    let mut lines = input
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());
    let Some((_, header)) = lines.next() else {
        return Graph::new(Vec::new(), []);
    };
    let labels: Vec<String> = header.split_whitespace().map(str::to_string).collect();
    let edges = {
        let index = label_index(&labels);
        let lookup = |l: &str| {
            index
                .get(l)
                .copied()
                .ok_or_else(|| Error::UnknownLabel(l.into()))
        };
        let mut edges = Vec::new();
        for (line, text) in lines {
            let toks: Vec<&str> = text.split_whitespace().collect();
            let [a, b] = toks[..] else {
                return Err(Error::Parse {
                    line,
                    message: format!("expected two labels, found {}", toks.len()),
                });
            };
            edges.push((lookup(a)?, lookup(b)?));
        }
        edges
    };
    Graph::new(labels, edges)
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct GraphDocument {
    vertices: Vec<String>,
    edges: Vec<(String, String)>,
}

/// `{"vertices": ["a", ...], "edges": [["a", "b"], ...]}`.
pub fn parse_structured(input: &str) -> Result<Graph> {
    let doc: GraphDocument = serde_json::from_str(input).map_err(|e| Error::Parse {
        line: e.line(),
        message: e.to_string(),
    })?;
    let edges = {
        let index = label_index(&doc.vertices);
        let lookup = |l: &str| {
            index
                .get(l)
                .copied()
                .ok_or_else(|| Error::UnknownLabel(l.into()))
        };
        doc.edges
            .iter()
            .map(|(a, b)| Ok((lookup(a)?, lookup(b)?)))
            .collect::<Result<Vec<_>>>()?
    };
    Graph::new(doc.vertices, edges)
}

pub fn write_edgelist(g: &Graph) -> String {
    let mut out = g.labels().join(" ");
    out.push('\n');
    for (u, v) in g.edges() {
        out.push_str(&format!("{} {}\n", g.label(u), g.label(v)));
    }
    out
}

pub fn write_structured(g: &Graph) -> String {
    let doc = GraphDocument {
        vertices: g.labels().to_vec(),
        edges: g
            .edges()
            .into_iter()
            .map(|(u, v)| (g.label(u).to_string(), g.label(v).to_string()))
            .collect(),
    };
    serde_json::to_string(&doc).expect("graph documents always serialize")
}

/// Graph expressions:
///
/// ```text
/// expr := family | op "(" expr ")" | op "(" expr "," expr ")"
/// op   := "join" | "union" | "complement"
/// ```
///
/// where `family` is anything accepted by [`Graph::family`].
pub fn parse_dsl(input: &str) -> Result<Graph> {
    let mut p = DslParser { src: input, pos: 0 };
    let g = p.expr(0)?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return Err(p.error("trailing input"));
    }
    Ok(g)
}

struct DslParser<'a> {
    src: &'a str,
    pos: usize,
}

impl DslParser<'_> {
    fn error(&self, what: &str) -> Error {
        Error::MalformedSpec(format!("{what} at offset {} in `{}`", self.pos, self.src))
    }

    fn skip_ws(&mut self) {
        let rest = &self.src[self.pos..];
        self.pos += rest.len() - rest.trim_start().len();
    }

    fn eat(&mut self, c: char) -> Result<()> {
        self.skip_ws();
        if self.src[self.pos..].starts_with(c) {
            self.pos += c.len_utf8();
            Ok(())
        } else {
            Err(self.error(&format!("expected `{c}`")))
        }
    }

    fn word(&mut self) -> &str {
        self.skip_ws();
        let rest = &self.src[self.pos..];
        let len = rest
            .find(|c: char| !(c.is_ascii_alphanumeric() || c == ':' || c == '_'))
            .unwrap_or(rest.len());
        self.pos += len;
        &rest[..len]
    }

    fn expr(&mut self, depth: usize) -> Result<Graph> {
        if depth > MAX_DEPTH {
            return Err(self.error("expression nested too deeply"));
        }
        let word = self.word().to_string();
        if word.is_empty() {
            return Err(self.error("expected a graph"));
        }
        let arity = match word.as_str() {
            "join" | "union" => 2,
            "complement" => 1,
            _ => return Graph::family(&word),
        };
        self.eat('(')?;
        let first = self.expr(depth + 1)?;
        let g = if arity == 2 {
            self.eat(',')?;
            let second = self.expr(depth + 1)?;
            if word == "join" {
                first.join(&second)?
            } else {
                first.disjoint_union(&second)?
            }
        } else {
            first.complement()
        };
        self.eat(')')?;
        Ok(g)
    }
}

fn parse_rational(text: &str) -> Option<BigRational> {
    let text = text.trim();
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (text, "1"),
    };
    let num: BigInt = num.parse().ok()?;
    let den: BigInt = den.parse().ok()?;
    (!den.is_zero()).then(|| BigRational::new(num, den))
}

/// `label=value,label=value,...` with integer or `p/q` values; vertices not
/// mentioned get 0.
pub fn parse_character(g: &Graph, text: &str) -> Result<Character> {
    let mut values = vec![BigRational::zero(); g.n()];
    let mut seen = vec![false; g.n()];
    for (i, item) in text.split(',').enumerate() {
        let bad = |message: String| Error::Parse { line: 1, message };
        let (label, value) = item
            .split_once('=')
            .ok_or_else(|| bad(format!("entry {} is not `label=value`", i + 1)))?;
        let label = label.trim();
        let v = g
            .index_of(label)
            .ok_or_else(|| Error::UnknownLabel(label.into()))?;
        if std::mem::replace(&mut seen[v], true) {
            return Err(Error::DuplicateLabel(label.into()));
        }
        values[v] = parse_rational(value)
            .ok_or_else(|| bad(format!("`{}` is not an integer or p/q", value.trim())))?;
    }
    Ok(Character::new(values))
}
