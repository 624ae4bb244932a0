use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Vertex {
    pub genus: u32,
    /// Self-intersection `Eᵢ·Eᵢ`.
    pub euler: i64,
}

/// Plumbing graph: one vertex per disk bundle (or exceptional curve), edges
/// weighted by intersection numbers.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct PlumbingGraph {
    vertices: Vec<Vertex>,
    edges: BTreeMap<(usize, usize), i64>,
}

impl PlumbingGraph {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add_vertex(&mut self, genus: u32, euler: i64) -> usize {
        self.vertices.push(Vertex { genus, euler });
        self.vertices.len() - 1
    }

    /// Parallel edges merge by summing weights; an edge whose weights cancel
    /// is dropped.
    pub fn add_edge(&mut self, i: usize, j: usize, weight: i64) -> Result<()> {
        let n = self.vertices.len();
        if i >= n || j >= n {
            return Err(Error::InvalidInput(format!(
                "edge ({i},{j}) names a missing vertex"
            )));
        }
        if i == j {
            return Err(Error::InvalidInput(format!("self-loop at vertex {i}")));
        }
        if weight == 0 {
            return Err(Error::InvalidInput(format!("edge ({i},{j}) has weight 0")));
        }
        let key = (i.min(j), i.max(j));
        let w = self.edges.entry(key).or_insert(0);
        *w += weight;
        if *w == 0 {
            self.edges.remove(&key);
        }
        Ok(())
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    /// Edges `(i, j, weight)` with `i < j`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize, i64)> + '_ {
        self.edges.iter().map(|(&(i, j), &w)| (i, j, w))
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn is_connected(&self) -> bool {
        let n = self.vertices.len();
        if n == 0 {
            return false;
        }
        let mut adj = vec![Vec::new(); n];
        for (i, j, _) in self.edges() {
            adj[i].push(j);
            adj[j].push(i);
        }
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for &w in &adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    pub fn is_tree(&self) -> bool {
        self.is_connected() && self.edges.len() + 1 == self.vertices.len()
    }

    /// Chain of `k` vertices of Euler number −2 and genus 0, unit edges.
    pub fn a_chain(k: usize) -> Self {
        let mut g = Self::new();
        for i in 0..k {
            g.add_vertex(0, -2);
            if i > 0 {
                g.add_edge(i - 1, i, 1).expect("chain edge");
            }
        }
        g
    }

    /// The E₈ tree: a chain of seven −2 vertices with an eighth attached to
    /// the third.
    pub fn e8() -> Self {
        let mut g = Self::a_chain(7);
        let v = g.add_vertex(0, -2);
        g.add_edge(2, v, 1).expect("branch edge");
        g
    }

    /// `E8` or `A<k>`, case-insensitive.
    pub fn named(name: &str) -> Option<Self> {
        let upper = name.trim().to_ascii_uppercase();
        if upper == "E8" {
            return Some(Self::e8());
        }
        let k: usize = upper.strip_prefix('A')?.parse().ok()?;
        (k >= 1).then(|| Self::a_chain(k))
    }
}

impl FromStr for PlumbingGraph {
    type Err = Error;

    /// Line format:
    ///
    /// ```text
    /// # comment
    /// v <id> genus=<g> e=<euler>
    /// e <i> <j> [w=<weight>]
    /// ```
    ///
    /// Vertex ids are arbitrary tokens; edges may only name declared ids.
    fn from_str(s: &str) -> Result<Self> {
        let mut g = Self::new();
        let mut ids: BTreeMap<String, usize> = BTreeMap::new();
        for (lineno, raw) in s.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let bad = |msg: String| Error::InvalidInput(format!("line {}: {msg}", lineno + 1));
            let fields: Vec<&str> = line.split_whitespace().collect();
            match fields[0] {
                "v" => {
                    let id = fields
                        .get(1)
                        .ok_or_else(|| bad("vertex without id".into()))?;
                    let mut genus = None;
                    let mut euler = None;
                    for f in &fields[2..] {
                        match f.split_once('=') {
                            Some(("genus", v)) => {
                                genus =
                                    Some(v.parse().map_err(|_| bad(format!("bad genus `{v}`")))?)
                            }
                            Some(("e", v)) => {
                                euler =
                                    Some(v.parse().map_err(|_| bad(format!("bad euler `{v}`")))?)
                            }
                            _ => return Err(bad(format!("unknown field `{f}`"))),
                        }
                    }
                    let euler = euler.ok_or_else(|| bad(format!("vertex {id} lacks e=")))?;
                    if ids.contains_key(*id) {
                        return Err(bad(format!("duplicate vertex {id}")));
                    }
                    ids.insert(id.to_string(), g.add_vertex(genus.unwrap_or(0), euler));
                }
                "e" => {
                    if fields.len() < 3 || fields.len() > 4 {
                        return Err(bad("expected `e <i> <j> [w=<weight>]`".into()));
                    }
                    let lookup = |id: &str| {
                        ids.get(id)
                            .copied()
                            .ok_or_else(|| bad(format!("unknown vertex {id}")))
                    };
                    let (i, j) = (lookup(fields[1])?, lookup(fields[2])?);
                    let weight = match fields.get(3) {
                        None => 1,
                        Some(f) => f
                            .strip_prefix("w=")
                            .and_then(|v| v.parse().ok())
                            .ok_or_else(|| bad(format!("bad weight `{f}`")))?,
                    };
                    g.add_edge(i, j, weight).map_err(|e| bad(e.to_string()))?;
                }
                other => return Err(bad(format!("unknown record `{other}`"))),
            }
        }
        Ok(g)
    }
}

impl fmt::Display for PlumbingGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.vertices.iter().enumerate() {
            writeln!(f, "v {i} genus={} e={}", v.genus, v.euler)?;
        }
        for (i, j, w) in self.edges() {
            if w == 1 {
                writeln!(f, "e {i} {j}")?;
            } else {
                writeln!(f, "e {i} {j} w={w}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_graph_file() {
        let g: PlumbingGraph = "# A2\nv a genus=0 e=-2\nv b e=-2\ne a b\n".parse().unwrap();
        assert_eq!(g, PlumbingGraph::a_chain(2));
        let g: PlumbingGraph = "v 1 e=-3\nv 2 e=-1\ne 1 2 w=2\ne 2 1 w=1\n"
            .parse()
            .unwrap();
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 1, 3)]);
    }

    #[test]
    fn parse_errors() {
        for bad in [
            "v 1",
            "v 1 e=x",
            "v 1 e=-2\nv 1 e=-2",
            "v 1 e=-2\ne 1 2",
            "v 1 e=-2\ne 1 1",
            "v 1 e=-2\nv 2 e=-2\ne 1 2 w=0",
            "q 1",
            "v 1 e=-2 colour=red",
        ] {
            assert!(bad.parse::<PlumbingGraph>().is_err(), "{bad:?}");
        }
    }

    #[test]
    fn display_round_trips() {
        let g = PlumbingGraph::e8();
        assert_eq!(g.to_string().parse::<PlumbingGraph>().unwrap(), g);
    }

    #[test]
    fn shapes() {
        assert!(PlumbingGraph::e8().is_tree());
        assert_eq!(PlumbingGraph::e8().vertex_count(), 8);
        assert!(PlumbingGraph::a_chain(1).is_tree());
        let mut cyc = PlumbingGraph::a_chain(3);
        cyc.add_edge(0, 2, 1).unwrap();
        assert!(!cyc.is_tree());
        assert_eq!(PlumbingGraph::named("a4"), Some(PlumbingGraph::a_chain(4)));
        assert!(PlumbingGraph::named("A0").is_none());
        assert!(PlumbingGraph::named("E7").is_none());
    }
}
