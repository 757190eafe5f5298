//! Builders for the named graph families and the construction expression
//! grammar used by the CLI.
//!
//! Vertex numbering is fixed so that tests are deterministic: multipartite
//! color classes occupy consecutive blocks, and the matching of
//! [`h_graph`] joins vertex `i` of the first clique to vertex `a + i` of
//! the second. Claims at the isomorphism level always go through
//! [`crate::canon::is_isomorphic`].

use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_VERTICES};

/// A multiset of color-class sizes describing a complete multipartite
/// graph. Normalized to ascending order on construction.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PartitionSpec {
    parts: Vec<u32>,
}

impl PartitionSpec {
    pub fn new(parts: impl Into<Vec<u32>>) -> Result<Self> {
        let mut parts = parts.into();
        if parts.is_empty() {
            return Err(Error::EmptyPartition);
        }
        if parts.iter().any(|&a| a == 0) {
            return Err(Error::ZeroPart);
        }
        let n: u64 = parts.iter().map(|&a| a as u64).sum();
        if n > MAX_VERTICES as u64 {
            return Err(Error::TooManyVertices(n as usize));
        }
        parts.sort_unstable();
        Ok(PartitionSpec { parts })
    }

    /// Ascending part sizes.
    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Number of color classes.
    pub fn class_count(&self) -> usize {
        self.parts.len()
    }

    /// Total vertex count.
    pub fn order(&self) -> usize {
        self.parts.iter().map(|&a| a as usize).sum()
    }

    /// Every partition of `n` into positive parts, as specs.
    pub fn all_of_order(n: u32) -> Vec<PartitionSpec> {
        fn rec(remaining: u32, min: u32, cur: &mut Vec<u32>, out: &mut Vec<PartitionSpec>) {
            if remaining == 0 {
                out.push(PartitionSpec { parts: cur.clone() });
                return;
            }
            for a in min..=remaining {
                cur.push(a);
                rec(remaining - a, a, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        if n > 0 && n as usize <= MAX_VERTICES {
            rec(n, 1, &mut Vec::new(), &mut out);
        }
        out
    }
}

impl std::fmt::Display for PartitionSpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "K(")?;
        for (i, a) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{a}")?;
        }
        write!(f, ")")
    }
}

/// Complete multipartite graph: consecutive blocks of the given sizes,
/// with an edge exactly between vertices of different blocks.
pub fn complete_multipartite(spec: &PartitionSpec) -> Graph {
    let n = spec.order();
    let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let mut adj = Vec::with_capacity(n);
    let mut start = 0usize;
    for &a in spec.parts() {
        let a = a as usize;
        let block = ((1u64 << a) - 1) << start;
        for v in start..start + a {
            adj.push(full & !block);
        }
        start += a;
    }
    Graph::from_adj(adj).expect("multipartite adjacency is valid by construction")
}

/// Complete equipartite graph with `r` classes of size `a`; `r = 0` yields
/// the empty graph.
pub fn equipartite(r: u32, a: u32) -> Result<Graph> {
    if a == 0 {
        return Err(Error::ZeroPart);
    }
    if r == 0 {
        return Ok(Graph::empty());
    }
    Ok(complete_multipartite(&PartitionSpec::new(vec![a; r as usize])?))
}

/// Two cliques of sizes `a` and `a + t` joined by a perfect matching from
/// the smaller into the larger; `t` must be 0 or 1.
///
/// Vertices `0..a` form the first clique, `a..2a+t` the second, and the
/// matching edges are `(i, a + i)`.
pub fn h_graph(a: u32, t: u32) -> Result<Graph> {
    if a == 0 {
        return Err(Error::ZeroPart);
    }
    if t > 1 {
        return Err(Error::BadMatchingParam(t));
    }
    let (a, t) = (a as usize, t as usize);
    let n = 2 * a + t;
    if n > MAX_VERTICES {
        return Err(Error::TooManyVertices(n));
    }
    let mut edges = Vec::new();
    for u in 0..a {
        for v in (u + 1)..a {
            edges.push((u, v));
        }
    }
    for u in a..n {
        for v in (u + 1)..n {
            edges.push((u, v));
        }
    }
    for i in 0..a {
        edges.push((i, a + i));
    }
    Graph::from_edges(n, &edges)
}

/// Join of `t` disjoint copies of [`h_graph`]`(a, 0)` with the complete
/// `(r - 2t)`-equipartite graph on classes of size `a`. Requires `r >= 2`
/// and `0 <= t <= r/2`; with `t = 0` this is exactly [`equipartite`].
pub fn j_graph(r: u32, a: u32, t: u32) -> Result<Graph> {
    if r < 2 {
        return Err(Error::BadClassCount(r));
    }
    if t > r / 2 {
        return Err(Error::BadJoinCount { r, t, max: r / 2 });
    }
    if a == 0 {
        return Err(Error::ZeroPart);
    }
    if r as usize * a as usize > MAX_VERTICES {
        return Err(Error::TooManyVertices(r as usize * a as usize));
    }
    let mut factors = Vec::with_capacity(t as usize + 1);
    for _ in 0..t {
        factors.push(h_graph(a, 0)?);
    }
    factors.push(equipartite(r - 2 * t, a)?);
    join_all(&factors)
}

/// Left fold of [`Graph::join`]; the empty list yields the empty graph.
pub fn join_all(graphs: &[Graph]) -> Result<Graph> {
    let mut acc = Graph::empty();
    for g in graphs {
        acc = acc.join(g)?;
    }
    Ok(acc)
}

/// If the complement of `g` is a disjoint union of cliques, returns their
/// sizes in ascending order — equivalently, `g` is then the complete
/// multipartite graph on those classes.
pub fn multipartite_signature(g: &Graph) -> Option<Vec<u32>> {
    let comp = g.complement();
    let mut sizes = Vec::new();
    for cell in comp.connected_components() {
        let k = cell.len();
        let sub = comp.induced_subgraph(cell);
        if sub.edge_count() != k * (k - 1) / 2 {
            return None;
        }
        sizes.push(k as u32);
    }
    sizes.sort_unstable();
    Some(sizes)
}

/// Parses the construction grammar:
///
/// ```text
/// expr := "K(" a1 "," ... "," ar ")"     complete multipartite
///       | "Kr(" r "," a ")"              complete equipartite
///       | "H(" a "," t ")"               matched cliques
///       | "J(" r "," a "," t ")"         matched-clique join family
///       | "join(" expr ";" ... ")"       join of subexpressions
/// ```
pub fn parse_construction(input: &str) -> Result<Graph> {
    let mut p = Parser {
        chars: input.char_indices().peekable(),
        input,
    };
    let g = p.expr()?;
    p.skip_ws();
    if let Some((i, c)) = p.chars.peek().copied() {
        return Err(p.error(i, &format!("unexpected trailing '{c}'")));
    }
    Ok(g)
}

struct Parser<'a> {
    chars: std::iter::Peekable<std::str::CharIndices<'a>>,
    input: &'a str,
}

impl<'a> Parser<'a> {
    fn error(&self, pos: usize, msg: &str) -> Error {
        Error::Expression(format!("{msg} at byte {pos} in {:?}", self.input))
    }

    fn skip_ws(&mut self) {
        while matches!(self.chars.peek(), Some((_, c)) if c.is_whitespace()) {
            self.chars.next();
        }
    }

    fn expect(&mut self, want: char) -> Result<()> {
        self.skip_ws();
        match self.chars.next() {
            Some((_, c)) if c == want => Ok(()),
            Some((i, c)) => Err(self.error(i, &format!("expected '{want}', found '{c}'"))),
            None => Err(self.error(self.input.len(), &format!("expected '{want}', found end"))),
        }
    }

    fn ident(&mut self) -> Result<(usize, String)> {
        self.skip_ws();
        let start = match self.chars.peek() {
            Some(&(i, c)) if c.is_alphabetic() => i,
            Some(&(i, c)) => return Err(self.error(i, &format!("expected a name, found '{c}'"))),
            None => return Err(self.error(self.input.len(), "expected a name, found end")),
        };
        let mut name = String::new();
        while matches!(self.chars.peek(), Some((_, c)) if c.is_alphabetic()) {
            name.push(self.chars.next().unwrap().1);
        }
        Ok((start, name))
    }

    fn number(&mut self) -> Result<u32> {
        self.skip_ws();
        let mut digits = String::new();
        while matches!(self.chars.peek(), Some((_, c)) if c.is_ascii_digit()) {
            digits.push(self.chars.next().unwrap().1);
        }
        if digits.is_empty() {
            let pos = self.chars.peek().map_or(self.input.len(), |&(i, _)| i);
            return Err(self.error(pos, "expected a number"));
        }
        digits
            .parse()
            .map_err(|_| self.error(0, &format!("number {digits} out of range")))
    }

    fn number_list(&mut self) -> Result<Vec<u32>> {
        let mut nums = vec![self.number()?];
        loop {
            self.skip_ws();
            if matches!(self.chars.peek(), Some((_, ','))) {
                self.chars.next();
                nums.push(self.number()?);
            } else {
                return Ok(nums);
            }
        }
    }

    fn expr(&mut self) -> Result<Graph> {
        let (pos, name) = self.ident()?;
        self.expect('(')?;
        let g = match name.as_str() {
            "K" => {
                let parts = self.number_list()?;
                complete_multipartite(&PartitionSpec::new(parts)?)
            }
            "Kr" => {
                let args = self.number_list()?;
                if args.len() != 2 {
                    return Err(self.error(pos, "Kr takes exactly (r,a)"));
                }
                equipartite(args[0], args[1])?
            }
            "H" => {
                let args = self.number_list()?;
                if args.len() != 2 {
                    return Err(self.error(pos, "H takes exactly (a,t)"));
                }
                h_graph(args[0], args[1])?
            }
            "J" => {
                let args = self.number_list()?;
                if args.len() != 3 {
                    return Err(self.error(pos, "J takes exactly (r,a,t)"));
                }
                j_graph(args[0], args[1], args[2])?
            }
            "join" => {
                let mut factors = vec![self.expr()?];
                loop {
                    self.skip_ws();
                    if matches!(self.chars.peek(), Some((_, ';'))) {
                        self.chars.next();
                        factors.push(self.expr()?);
                    } else {
                        break;
                    }
                }
                join_all(&factors)?
            }
            other => return Err(self.error(pos, &format!("unknown construction '{other}'"))),
        };
        self.expect(')')?;
        Ok(g)
    }
}
