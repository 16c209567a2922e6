//! Right-angled Artin groups on finite simplicial graphs: word
//! problem, supports, central and left-greedy normal forms, and
//! bounded enumeration for the injectivity scans.
//!
//! Elements are kept in a canonical form: the lexicographically least
//! word among the shuffle-equivalent shortest representatives, under
//! the letter order `+v₁ < -v₁ < +v₂ < …`.

use alloc::collections::BTreeSet;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

/// Signed vertex letter: `+i`/`-i` is the `i`-th vertex (1-based) or
/// its inverse.
pub type RaagLetter = i32;

/// A word in the RAAG; not necessarily reduced.
pub type RaagWord = Vec<RaagLetter>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RaagError {
    UnknownVertex(String),
    BadEdge,
}

impl fmt::Display for RaagError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RaagError::UnknownVertex(name) => write!(f, "unknown vertex {name}"),
            RaagError::BadEdge => write!(f, "edges must join distinct existing vertices"),
        }
    }
}

impl core::error::Error for RaagError {}

/// A finite simple graph with named vertices; commutation relations
/// live exactly on the edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RaagGraph {
    names: Vec<String>,
    adj: Vec<bool>,
}

#[inline]
fn letter_key(l: RaagLetter) -> (u32, bool) {
    (l.unsigned_abs(), l < 0)
}

impl RaagGraph {
    pub fn new(names: Vec<String>, edges: &[(usize, usize)]) -> Result<RaagGraph, RaagError> {
        let n = names.len();
        let mut adj = vec![false; n * n];
        for &(u, v) in edges {
            if u >= n || v >= n || u == v {
                return Err(RaagError::BadEdge);
            }
            adj[u * n + v] = true;
            adj[v * n + u] = true;
        }
        Ok(RaagGraph { names, adj })
    }

    pub fn vertex_count(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn vertex_by_name(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// Adjacency of vertex indices (0-based).
    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.adj[u * self.names.len() + v]
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let n = self.names.len();
        let mut out = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if self.adjacent(u, v) {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// Whether the vertex set is a clique.
    pub fn is_clique(&self, vertices: &BTreeSet<usize>) -> bool {
        let vs: Vec<usize> = vertices.iter().copied().collect();
        for (i, &u) in vs.iter().enumerate() {
            for &v in &vs[i + 1..] {
                if !self.adjacent(u, v) {
                    return false;
                }
            }
        }
        true
    }

    fn letters_commute(&self, a: RaagLetter, b: RaagLetter) -> bool {
        let (u, v) = ((a.unsigned_abs() - 1) as usize, (b.unsigned_abs() - 1) as usize);
        u != v && self.adjacent(u, v)
    }

    /// Canonical form: shortest word in the shuffle class, then the
    /// lexicographically least representative.  Cancellation deletes
    /// `u·u⁻¹` pairs separated only by letters commuting with `u`.
    pub fn reduce(&self, w: &[RaagLetter]) -> RaagWord {
        for &l in w {
            assert!(
                l != 0 && (l.unsigned_abs() as usize) <= self.names.len(),
                "letter out of range"
            );
        }
        let mut ls: RaagWord = w.to_vec();
        // cancellation passes
        'outer: loop {
            for i in 0..ls.len() {
                for j in i + 1..ls.len() {
                    if ls[j] == -ls[i] {
                        ls.remove(j);
                        ls.remove(i);
                        continue 'outer;
                    }
                    if !self.letters_commute(ls[i], ls[j]) {
                        break;
                    }
                }
            }
            break;
        }
        // lexicographically least linearization of the trace: always
        // emit the least currently-front-movable letter
        let mut out = Vec::with_capacity(ls.len());
        while !ls.is_empty() {
            let mut best: Option<usize> = None;
            'cand: for p in 0..ls.len() {
                for q in 0..p {
                    if !self.letters_commute(ls[q], ls[p]) {
                        continue 'cand;
                    }
                }
                match best {
                    None => best = Some(p),
                    Some(b) => {
                        if letter_key(ls[p]) < letter_key(ls[b]) {
                            best = Some(p);
                        }
                    }
                }
            }
            let p = best.expect("position 0 is always movable");
            out.push(ls.remove(p));
        }
        out
    }

    pub fn is_trivial(&self, w: &[RaagLetter]) -> bool {
        self.reduce(w).is_empty()
    }

    /// Vertices of the reduced word; independent of the representative.
    pub fn support(&self, w: &[RaagLetter]) -> BTreeSet<usize> {
        self.reduce(w)
            .iter()
            .map(|l| (l.unsigned_abs() - 1) as usize)
            .collect()
    }

    /// Split a reduced word into consecutive maximal blocks whose
    /// supports are cliques.  Concatenation reproduces the word.
    pub fn central_form(&self, w: &[RaagLetter]) -> Vec<RaagWord> {
        let ls = self.reduce(w);
        let mut blocks: Vec<RaagWord> = Vec::new();
        let mut block: RaagWord = Vec::new();
        let mut support: BTreeSet<usize> = BTreeSet::new();
        for &l in &ls {
            let v = (l.unsigned_abs() - 1) as usize;
            let fits = support.iter().all(|&u| u == v || self.adjacent(u, v));
            if !fits {
                blocks.push(core::mem::take(&mut block));
                support.clear();
            }
            block.push(l);
            support.insert(v);
        }
        if !block.is_empty() {
            blocks.push(block);
        }
        blocks
    }

    /// Left greedy normal form: every letter of a block fails to
    /// commute with something in the block to its left, so blocks are
    /// pushed as far left as possible.  Blocks have clique support and
    /// concatenate back to the element.
    pub fn left_greedy(&self, w: &[RaagLetter]) -> Vec<RaagWord> {
        let mut ls = self.reduce(w);
        let mut blocks: Vec<RaagWord> = Vec::new();
        while !ls.is_empty() {
            let mut taken = vec![false; ls.len()];
            let mut block: RaagWord = Vec::new();
            'scan: for p in 0..ls.len() {
                for q in 0..p {
                    // p must shuffle left past every untaken letter and
                    // sit next to every taken one, so both need to
                    // commute with it (same-sign copies ride along)
                    if !(self.letters_commute(ls[q], ls[p]) || ls[q] == ls[p]) {
                        continue 'scan;
                    }
                }
                taken[p] = true;
                block.push(ls[p]);
            }
            block.sort_by_key(|&l| letter_key(l));
            blocks.push(block);
            ls = ls
                .iter()
                .zip(&taken)
                .filter(|&(_, &t)| !t)
                .map(|(&l, _)| l)
                .collect();
        }
        blocks
    }

    /// Exactly one canonical representative per nontrivial element of
    /// length at most `max_len`, ordered by length.
    pub fn enumerate_nontrivial(&self, max_len: usize) -> NontrivialWords<'_> {
        NontrivialWords {
            graph: self,
            max_len,
            produced_len: 0,
            layer: vec![Vec::new()],
            buffer: Vec::new(),
        }
    }

    /// Deterministic sample of a nontrivial element of length ≤
    /// `max_len` (splitmix64 stream over the seed).
    pub fn sample(&self, max_len: usize, seed: u64) -> RaagWord {
        let n = self.names.len() as u64;
        let mut state = seed;
        let mut next = move || {
            state = state.wrapping_add(0x9e3779b97f4a7c15);
            let mut z = state;
            z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
            z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
            z ^ (z >> 31)
        };
        for _ in 0..64 {
            let mut w = Vec::with_capacity(max_len);
            for _ in 0..max_len.max(1) {
                let r = next();
                let v = (r % n) as i32 + 1;
                w.push(if r & (1 << 63) == 0 { v } else { -v });
            }
            let c = self.reduce(&w);
            if !c.is_empty() {
                return c;
            }
        }
        vec![1]
    }

    pub fn word_to_string(&self, w: &[RaagLetter]) -> String {
        let mut parts: Vec<String> = Vec::with_capacity(w.len());
        for &l in w {
            let name = &self.names[(l.unsigned_abs() - 1) as usize];
            if l > 0 {
                parts.push(name.clone());
            } else {
                let mut s = name.clone();
                s.push_str("^-1");
                parts.push(s);
            }
        }
        parts.join(" ")
    }

    pub fn word_from_string(&self, s: &str) -> Result<RaagWord, RaagError> {
        let mut out = Vec::new();
        for tok in s.split_whitespace() {
            let (name, sign) = match tok.strip_suffix("^-1") {
                Some(base) => (base, -1),
                None => (tok, 1),
            };
            let v = self
                .vertex_by_name(name)
                .ok_or_else(|| RaagError::UnknownVertex(String::from(name)))?;
            out.push(sign * (v as i32 + 1));
        }
        Ok(out)
    }
}

/// Layered iterator over canonical nontrivial elements.
pub struct NontrivialWords<'a> {
    graph: &'a RaagGraph,
    max_len: usize,
    produced_len: usize,
    layer: Vec<RaagWord>,
    buffer: Vec<RaagWord>,
}

impl Iterator for NontrivialWords<'_> {
    type Item = RaagWord;

    fn next(&mut self) -> Option<RaagWord> {
        loop {
            if let Some(w) = self.buffer.pop() {
                return Some(w);
            }
            if self.produced_len >= self.max_len {
                return None;
            }
            self.produced_len += 1;
            let n = self.graph.vertex_count() as i32;
            let mut next_layer: BTreeSet<RaagWord> = BTreeSet::new();
            for w in &self.layer {
                for l in (1..=n).flat_map(|v| [v, -v]) {
                    let mut cand = w.clone();
                    cand.push(l);
                    let c = self.graph.reduce(&cand);
                    if c.len() == self.produced_len {
                        next_layer.insert(c);
                    }
                }
            }
            self.layer = next_layer.into_iter().collect();
            self.buffer = self.layer.iter().rev().cloned().collect();
        }
    }
}
